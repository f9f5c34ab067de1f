//! Case analysis for CA_min and F_min groups: Frobenius central quotients,
//! `Sym(4)` quotients, abelian normal subgroups of prime index, nilpotent
//! splittings and `PSL2`/`PGL2` quotients.

use std::collections::{BTreeSet, HashMap};
use std::fmt::{self, Write as _};

use crate::centralisers::{is_camin, is_fmin};
use crate::constructors::{pgl2, pgl2_order, psl2, psl2_order, symmetric};
use crate::error::{GroupError, Result};
use crate::group::{
    isomorphic_with_cap, lcm, prime_divisors, prime_power, ElemId, FiniteGroup, Subgroup, DEFAULT_ISOMORPHISM_CAP,
    DEFAULT_NORMAL_SUBGROUP_CAP,
};
use crate::partition::Flavour;

pub const DEFAULT_QUOTIENT_CAP: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassifyOptions {
    pub flavour: Flavour,
    /// Largest central quotient the classifier will build.
    pub max_quotient_order: usize,
    pub isomorphism_cap: usize,
    /// Recurse in cases 2 and 5 with the classifier instead of the predicate.
    pub recurse_with_classifier: bool,
}

impl ClassifyOptions {
    pub fn new(flavour: Flavour) -> Self {
        Self {
            flavour,
            max_quotient_order: DEFAULT_QUOTIENT_CAP,
            isomorphism_cap: DEFAULT_ISOMORPHISM_CAP,
            recurse_with_classifier: false,
        }
    }
}

/// Largest proper nontrivial normal subgroup `L` of `q` with `C(x) <= L`
/// for every nontrivial `x` in `L`. `None` when `q` is not a Frobenius group.
pub fn frobenius_kernel(q: &FiniteGroup) -> Result<Option<Subgroup>> {
    frobenius_kernel_with_cap(q, DEFAULT_NORMAL_SUBGROUP_CAP)
}

pub fn frobenius_kernel_with_cap(q: &FiniteGroup, cap: usize) -> Result<Option<Subgroup>> {
    if q.order() > cap {
        return Err(GroupError::CapExceeded {
            what: "Frobenius kernel search",
            size: q.order(),
            cap,
        });
    }
    if q.order() < 6 || !q.centre().is_trivial() {
        return Ok(None);
    }
    let cc = q.conjugacy_classes();
    let normals = q.normal_subgroups_with_cap(cap)?;
    Ok(normals
        .into_iter()
        .rev()
        .filter(|n| !n.is_trivial() && n.order() < q.order())
        .find(|n| {
            cc.classes()
                .iter()
                .filter(|c| c[0] != 0 && n.contains(c[0]))
                .all(|c| q.centraliser(c[0]).is_subset_of(n))
        }))
}

/// A complement to the Frobenius kernel `l` meeting its distinct conjugates
/// trivially.
pub fn frobenius_complement(q: &FiniteGroup, l: &Subgroup) -> Result<Subgroup> {
    if !q.order().is_multiple_of(l.order()) {
        return Err(GroupError::InvalidParameter("kernel order does not divide group order".into()));
    }
    let m = q.order() / l.order();
    let outside: Vec<ElemId> = q.elements().filter(|&x| !l.contains(x)).collect();
    let start = *outside.first().ok_or(GroupError::SearchExhausted("Frobenius complement"))?;
    let k = grow_complement(q, l, m, q.closure(&[start]), &outside)
        .ok_or(GroupError::SearchExhausted("Frobenius complement"))?;
    for g in q.elements().filter(|&g| !k.contains(g)) {
        if k.intersection_order(&k.conjugate(q, g)) != 1 {
            return Err(GroupError::SearchExhausted("Frobenius complement"));
        }
    }
    Ok(k)
}

fn grow_complement(q: &FiniteGroup, l: &Subgroup, m: usize, s: Subgroup, outside: &[ElemId]) -> Option<Subgroup> {
    if s.intersection_order(l) != 1 || !m.is_multiple_of(s.order()) {
        return None;
    }
    if s.order() == m {
        return Some(s);
    }
    for &y in outside {
        if s.contains(y) {
            continue;
        }
        let mut seed = q.generating_set(&s);
        seed.push(y);
        let t = q.closure(&seed);
        if let Some(k) = grow_complement(q, l, m, t, outside) {
            return Some(k);
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LinearTag {
    Psl,
    Pgl,
}

impl fmt::Display for LinearTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Psl => "psl",
            Self::Pgl => "pgl",
        })
    }
}

/// All `(q, tag)` with `q > 3` and `q` ≅ `PSL2(q)` or `PGL2(q)`. For even
/// `q` the two groups coincide and only the `psl` tag is reported.
pub fn recognize_psl_pgl(q: &FiniteGroup) -> Result<Vec<(u64, LinearTag)>> {
    recognize_psl_pgl_with_cap(q, DEFAULT_ISOMORPHISM_CAP)
}

pub fn recognize_psl_pgl_with_cap(q: &FiniteGroup, cap: usize) -> Result<Vec<(u64, LinearTag)>> {
    if q.order() > cap {
        return Err(GroupError::CapExceeded {
            what: "linear group recognition",
            size: q.order(),
            cap,
        });
    }
    let n = q.order() as u64;
    let mut out = Vec::new();
    let mut f = 4u64;
    while f * (f * f - 1) / 2 <= n {
        if prime_power(f).is_some() {
            if psl2_order(f) == n && isomorphic_with_cap(q, &psl2(f)?, cap)? {
                out.push((f, LinearTag::Psl));
            }
            if f % 2 == 1 && pgl2_order(f) == n && isomorphic_with_cap(q, &pgl2(f)?, cap)? {
                out.push((f, LinearTag::Pgl));
            }
        }
        f += 1;
    }
    Ok(out)
}

/// An abelian normal subgroup of prime index, with the prime.
pub fn abelian_normal_index_p(g: &FiniteGroup) -> Option<(Subgroup, u64)> {
    if g.is_abelian() {
        return None;
    }
    let d = g.derived_subgroup();
    for p in prime_divisors((g.order() / d.order()) as u64) {
        let mut seed: Vec<ElemId> = d.members().to_vec();
        seed.extend(g.elements().map(|x| g.pow(x, p)));
        let n = g.closure(&seed);
        let mut candidates: Vec<Subgroup> = hyperplanes(g, &n, p).collect();
        // largest exponent first, then lowest member list
        candidates.sort_by_cached_key(|h| {
            let e = h.members().iter().fold(1u64, |acc, &x| lcm(acc, g.element_order(x) as u64));
            (std::cmp::Reverse(e), h.clone())
        });
        if let Some(h) = candidates.into_iter().find(|h| g.is_abelian_subgroup(h)) {
            return Some((h, p));
        }
    }
    None
}

/// Index-`p` subgroups containing `n`, where `g/n` is elementary abelian of exponent `p`.
fn hyperplanes<'a>(g: &'a FiniteGroup, n: &Subgroup, p: u64) -> impl Iterator<Item = Subgroup> + 'a {
    let (_, basis) = g.closure_greedy(n.members().iter().copied().chain(g.elements()));
    let basis: Vec<ElemId> = basis.into_iter().filter(|b| !n.contains(*b)).collect();
    let r = basis.len();
    let mut coords: Vec<Option<Vec<u64>>> = vec![None; g.order()];
    let mut queue: Vec<ElemId> = n.members().to_vec();
    for &x in &queue {
        coords[x as usize] = Some(vec![0; r]);
    }
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        let cx = coords[x as usize].clone().unwrap();
        for (j, &b) in basis.iter().enumerate() {
            let y = g.mul(x, b);
            if coords[y as usize].is_none() {
                let mut cy = cx.clone();
                cy[j] = (cy[j] + 1) % p;
                coords[y as usize] = Some(cy);
                queue.push(y);
            }
        }
        i += 1;
    }
    let coords: Vec<Vec<u64>> = coords.into_iter().map(Option::unwrap).collect();
    let total = p.pow(r as u32);
    (1..total).filter_map(move |code| {
        let mut f = Vec::with_capacity(r);
        let mut c = code;
        for _ in 0..r {
            f.push(c % p);
            c /= p;
        }
        // one functional per line: leading nonzero coordinate equal to 1
        if f.iter().rev().find(|&&a| a != 0) != Some(&1) {
            return None;
        }
        let members = g
            .elements()
            .filter(|&x| coords[x as usize].iter().zip(&f).map(|(a, b)| a * b).sum::<u64>() % p == 0)
            .collect();
        Some(Subgroup::from_sorted(members))
    })
}

/// Subgroups `V >= Z(G)` whose image in `G/Z(G)` is a Klein four-group,
/// with whether each is abelian.
pub fn klein_preimages(g: &FiniteGroup) -> Result<Vec<(Subgroup, bool)>> {
    let q = g.central_quotient()?;
    let qg = q.group();
    let involutions: Vec<ElemId> = qg.elements().filter(|&x| qg.element_order(x) == 2).collect();
    let mut kleins = BTreeSet::new();
    for (i, &a) in involutions.iter().enumerate() {
        for &b in &involutions[i + 1..] {
            if qg.commute(a, b) {
                kleins.insert(Subgroup::from_unsorted(vec![0, a, b, qg.mul(a, b)]));
            }
        }
    }
    Ok(kleins
        .into_iter()
        .map(|v| {
            let pre = q.preimage_of(&v);
            let abelian = g.is_abelian_subgroup(&pre);
            (pre, abelian)
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilpotentSplit {
    /// Product of the abelian Sylow subgroups.
    pub abelian: Subgroup,
    pub prime: u64,
    /// The unique non-abelian Sylow subgroup.
    pub p_group: Subgroup,
}

pub fn nilpotent_split(g: &FiniteGroup) -> Option<NilpotentSplit> {
    let sylows = g.sylow_decomposition_of_nilpotent().ok()?;
    let mut non_abelian = sylows.iter().filter(|(_, s)| !g.is_abelian_subgroup(s));
    let (p, pg) = non_abelian.next()?;
    if non_abelian.next().is_some() {
        return None;
    }
    let seed: Vec<ElemId> = sylows
        .iter()
        .filter(|(q, _)| q != p)
        .flat_map(|(_, s)| g.generating_set(s))
        .collect();
    Some(NilpotentSplit {
        abelian: g.closure(&seed),
        prime: *p,
        p_group: pg.clone(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusWitness {
    /// `L`, the preimage of the kernel.
    pub kernel: Subgroup,
    /// `K`, the preimage of a complement.
    pub complement: Subgroup,
    pub kernel_abelian: bool,
    pub complement_abelian: bool,
    /// `Z(L) = Z(G)`.
    pub kernel_centre_is_centre: bool,
    /// `p` when `L/Z(L)` is a nontrivial `p`-group.
    pub kernel_quotient_prime: Option<u64>,
    /// Flavour predicate (or classifier) evaluated on `L`.
    pub kernel_recursive: bool,
}

#[derive(Debug, Clone)]
pub struct ClassificationReport {
    pub flavour: Flavour,
    pub order: usize,
    pub centre_order: usize,
    pub matched_cases: BTreeSet<u8>,
    pub frobenius: Option<FrobeniusWitness>,
    /// Set when `G/Z(G)` is isomorphic to `Sym(4)`.
    pub klein_preimages: Option<Vec<(Subgroup, bool)>>,
    pub abelian_normal: Option<(Subgroup, u64)>,
    pub split: Option<(NilpotentSplit, bool)>,
    pub linear: Vec<(u64, LinearTag)>,
}

impl ClassificationReport {
    pub fn cases_text(&self) -> String {
        if self.matched_cases.is_empty() {
            "none".into()
        } else {
            let v: Vec<String> = self.matched_cases.iter().map(u8::to_string).collect();
            v.join(",")
        }
    }

    /// `key=value` lines. Subgroups are given by order and a generating set.
    pub fn to_text(&self, g: &FiniteGroup) -> String {
        let mut out = String::new();
        let gens = |s: &Subgroup| {
            let v: Vec<String> = g.generating_set(s).iter().map(|&x| g.label(x)).collect();
            v.join(" ")
        };
        let flag = |b: bool| if b { "true" } else { "false" };
        writeln!(out, "flavour={}", self.flavour).unwrap();
        writeln!(out, "order={}", self.order).unwrap();
        writeln!(out, "centre_order={}", self.centre_order).unwrap();
        writeln!(out, "cases={}", self.cases_text()).unwrap();
        if let Some(w) = &self.frobenius {
            writeln!(out, "frobenius.kernel_order={}", w.kernel.order()).unwrap();
            writeln!(out, "frobenius.kernel_generators={}", gens(&w.kernel)).unwrap();
            writeln!(out, "frobenius.kernel_abelian={}", flag(w.kernel_abelian)).unwrap();
            writeln!(out, "frobenius.complement_order={}", w.complement.order()).unwrap();
            writeln!(out, "frobenius.complement_generators={}", gens(&w.complement)).unwrap();
            writeln!(out, "frobenius.complement_abelian={}", flag(w.complement_abelian)).unwrap();
            writeln!(out, "frobenius.kernel_centre_is_centre={}", flag(w.kernel_centre_is_centre)).unwrap();
            match w.kernel_quotient_prime {
                Some(p) => writeln!(out, "frobenius.kernel_quotient_prime={p}").unwrap(),
                None => writeln!(out, "frobenius.kernel_quotient_prime=none").unwrap(),
            }
            writeln!(out, "frobenius.kernel_recursive={}", flag(w.kernel_recursive)).unwrap();
        }
        if let Some(vs) = &self.klein_preimages {
            writeln!(out, "sym4.klein_preimages={}", vs.len()).unwrap();
            let abelian = vs.iter().filter(|(_, a)| *a).count();
            writeln!(out, "sym4.abelian_klein_preimages={abelian}").unwrap();
        }
        if let Some((n, p)) = &self.abelian_normal {
            writeln!(out, "abelian_normal.index={p}").unwrap();
            writeln!(out, "abelian_normal.order={}", n.order()).unwrap();
            writeln!(out, "abelian_normal.generators={}", gens(n)).unwrap();
        }
        if let Some((s, rec)) = &self.split {
            writeln!(out, "split.abelian_order={}", s.abelian.order()).unwrap();
            writeln!(out, "split.prime={}", s.prime).unwrap();
            writeln!(out, "split.p_group_order={}", s.p_group.order()).unwrap();
            writeln!(out, "split.p_group_recursive={}", flag(*rec)).unwrap();
        }
        for (q, tag) in &self.linear {
            writeln!(out, "linear={tag}2({q})").unwrap();
        }
        out
    }
}

fn flavour_predicate(g: &FiniteGroup, opts: &ClassifyOptions) -> Result<bool> {
    if opts.recurse_with_classifier {
        let inner = ClassifyOptions {
            recurse_with_classifier: false,
            ..*opts
        };
        return Ok(g.is_abelian() || !classify_with(g, &inner)?.matched_cases.is_empty());
    }
    Ok(match opts.flavour {
        Flavour::Camin => is_camin(g),
        Flavour::Fmin => is_fmin(g),
    })
}

pub fn classify(g: &FiniteGroup, flavour: Flavour) -> Result<ClassificationReport> {
    classify_with(g, &ClassifyOptions::new(flavour))
}

pub fn classify_with(g: &FiniteGroup, opts: &ClassifyOptions) -> Result<ClassificationReport> {
    let z = g.centre();
    let qo = g.order() / z.order();
    if qo > opts.max_quotient_order {
        return Err(GroupError::CapExceeded {
            what: "central quotient",
            size: qo,
            cap: opts.max_quotient_order,
        });
    }
    let quotient = g.central_quotient()?;
    let q = quotient.group();
    let mut cases = BTreeSet::new();

    let frobenius = match frobenius_kernel_with_cap(q, opts.max_quotient_order)? {
        None => None,
        Some(lq) => {
            let kq = frobenius_complement(q, &lq)?;
            let l = quotient.preimage_of(&lq);
            let k = quotient.preimage_of(&kq);
            let zl = g.centre_of_subgroup(&l);
            let kernel_quotient_prime = prime_power((l.order() / zl.order()) as u64).map(|(p, _)| p);
            let kernel_centre_is_centre = zl == *z;
            let kernel_abelian = g.is_abelian_subgroup(&l);
            let complement_abelian = g.is_abelian_subgroup(&k);
            let kernel_recursive = kernel_abelian || flavour_predicate(&g.subgroup_as_group(&l)?, opts)?;
            if kernel_abelian && complement_abelian {
                cases.insert(1);
            }
            if complement_abelian && kernel_centre_is_centre && kernel_quotient_prime.is_some() && kernel_recursive {
                cases.insert(2);
            }
            Some(FrobeniusWitness {
                kernel: l,
                complement: k,
                kernel_abelian,
                complement_abelian,
                kernel_centre_is_centre,
                kernel_quotient_prime,
                kernel_recursive,
            })
        }
    };

    let klein = if qo == 24 && isomorphic_with_cap(q, &symmetric(4)?, opts.isomorphism_cap)? {
        let vs = klein_preimages(g)?;
        if vs.iter().all(|(_, a)| !a) {
            cases.insert(3);
        }
        Some(vs)
    } else {
        None
    };

    let abelian_normal = abelian_normal_index_p(g);
    if abelian_normal.is_some() {
        cases.insert(4);
    }

    let split = match nilpotent_split(g) {
        None => None,
        Some(s) => {
            let rec = if s.p_group.order() == g.order() && opts.recurse_with_classifier {
                // the classifier on G itself would not terminate
                match opts.flavour {
                    Flavour::Camin => is_camin(g),
                    Flavour::Fmin => is_fmin(g),
                }
            } else {
                flavour_predicate(&g.subgroup_as_group(&s.p_group)?, opts)?
            };
            if rec {
                cases.insert(5);
            }
            Some((s, rec))
        }
    };

    let linear = if q.is_abelian() {
        Vec::new()
    } else {
        recognize_psl_pgl_with_cap(q, opts.isomorphism_cap)?
    };
    if !linear.is_empty() {
        cases.insert(6);
    }

    Ok(ClassificationReport {
        flavour: opts.flavour,
        order: g.order(),
        centre_order: z.order(),
        matched_cases: cases,
        frobenius,
        klein_preimages: klein,
        abelian_normal,
        split,
        linear,
    })
}

#[derive(Debug, Clone)]
pub struct TheoremVerdict {
    pub flavour: Flavour,
    pub predicate: bool,
    pub abelian: bool,
    pub report: ClassificationReport,
}

impl TheoremVerdict {
    /// The predicate holds exactly when some case matches. Abelian groups
    /// satisfy the predicate vacuously and match no case; they count as agreeing.
    pub fn agrees(&self) -> bool {
        self.abelian || self.predicate != self.report.matched_cases.is_empty()
    }
}

pub fn verify_theorem(g: &FiniteGroup, flavour: Flavour) -> Result<TheoremVerdict> {
    verify_theorem_with(g, &ClassifyOptions::new(flavour))
}

pub fn verify_theorem_with(g: &FiniteGroup, opts: &ClassifyOptions) -> Result<TheoremVerdict> {
    let predicate = match opts.flavour {
        Flavour::Camin => is_camin(g),
        Flavour::Fmin => is_fmin(g),
    };
    let report = classify_with(g, opts)?;
    Ok(TheoremVerdict {
        flavour: opts.flavour,
        predicate,
        abelian: g.is_abelian(),
        report,
    })
}

/// Orders of centralisers of nontrivial elements, with multiplicity by element.
pub fn centraliser_order_census(g: &FiniteGroup) -> HashMap<usize, usize> {
    let mut m = HashMap::new();
    for x in g.elements().skip(1) {
        *m.entry(g.centraliser(x).order()).or_insert(0) += 1;
    }
    m
}
