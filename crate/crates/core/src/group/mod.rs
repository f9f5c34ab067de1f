//! Concretely enumerated finite groups.
//!
//! Elements are ids `0..order` with `0` the identity. Groups of order at most
//! [`DENSE_TABLE_LIMIT`] carry a dense Cayley table; larger permutation groups
//! multiply by composing permutations and looking the result up in a hash index.

mod iso;
mod perm;
mod quotient;
mod structure;
mod subgroup;

use std::collections::{HashMap, VecDeque};
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};

use crate::error::{AxiomViolation, GroupError, Result};

pub use iso::{isomorphic, isomorphic_with_cap, find_isomorphism, DEFAULT_ISOMORPHISM_CAP};
pub use perm::Permutation;
pub use quotient::QuotientGroup;
pub use structure::{ConjugacyClasses, DEFAULT_NORMAL_SUBGROUP_CAP};
pub use subgroup::Subgroup;

pub type ElemId = u32;

/// Largest order for which a dense Cayley table is stored.
pub const DENSE_TABLE_LIMIT: usize = 4096;
/// Default bound on breadth-first closure of permutation generators.
pub const DEFAULT_ENUMERATION_CAP: usize = 200_000;
const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BackendKind {
    DenseTable,
    Permutation,
}

#[derive(Debug, Clone)]
struct PermData {
    degree: usize,
    generators: Vec<Permutation>,
    /// Images of every element, flattened `order * degree`.
    images: Vec<u16>,
    index: HashMap<Box<[u16]>, ElemId>,
}

impl PermData {
    fn images_of(&self, x: ElemId) -> &[u16] {
        let d = self.degree;
        &self.images[x as usize * d..(x as usize + 1) * d]
    }

    fn compose(&self, a: ElemId, b: ElemId) -> ElemId {
        let (pa, pb) = (self.images_of(a), self.images_of(b));
        let prod: Vec<u16> = pa.iter().map(|&i| pb[i as usize]).collect();
        self.index[prod.as_slice()]
    }
}

#[derive(Debug, Clone)]
pub struct FiniteGroup {
    order: usize,
    table: Option<Vec<u16>>,
    inverse: Vec<ElemId>,
    perms: Option<PermData>,
    centre: OnceLock<Subgroup>,
    classes: OnceLock<ConjugacyClasses>,
    derived: OnceLock<Subgroup>,
    generators: OnceLock<Vec<ElemId>>,
    element_orders: OnceLock<Vec<u32>>,
}

impl FiniteGroup {
    /// Validates a flattened `order x order` Cayley table and builds a group.
    ///
    /// Associativity is checked exhaustively up to order 512 and on `10 * order`
    /// sampled triples above that.
    pub fn from_table(order: usize, table: &[ElemId]) -> Result<Self> {
        if order == 0 {
            return Err(GroupError::InvalidParameter("order must be positive".into()));
        }
        if order > DENSE_TABLE_LIMIT {
            return Err(GroupError::CapExceeded {
                what: "dense table order",
                size: order,
                cap: DENSE_TABLE_LIMIT,
            });
        }
        if table.len() != order * order {
            return Err(AxiomViolation::WrongSize {
                expected: order * order,
                found: table.len(),
            }
            .into());
        }
        for (k, &v) in table.iter().enumerate() {
            if v as usize >= order {
                return Err(AxiomViolation::OutOfRange {
                    row: k / order,
                    col: k % order,
                    value: v as u64,
                    order,
                }
                .into());
            }
        }
        let t = |a: usize, b: usize| table[a * order + b];
        for x in 0..order {
            if t(0, x) as usize != x {
                return Err(AxiomViolation::Identity { row: 0, col: x }.into());
            }
            if t(x, 0) as usize != x {
                return Err(AxiomViolation::Identity { row: x, col: 0 }.into());
            }
        }
        let mut seen = vec![usize::MAX; order];
        for row in 0..order {
            for col in 0..order {
                let v = t(row, col);
                if seen[v as usize] == row {
                    return Err(AxiomViolation::LatinRow { row, col, value: v }.into());
                }
                seen[v as usize] = row;
            }
        }
        seen.fill(usize::MAX);
        for col in 0..order {
            for row in 0..order {
                let v = t(row, col);
                if seen[v as usize] == col {
                    return Err(AxiomViolation::LatinColumn { row, col, value: v }.into());
                }
                seen[v as usize] = col;
            }
        }
        let mut inverse = vec![0; order];
        for x in 0..order {
            let y = (0..order).find(|&y| t(x, y) == 0).expect("latin row contains 0");
            if t(y, x) != 0 {
                return Err(AxiomViolation::Inverse { element: x as ElemId }.into());
            }
            inverse[x] = y as ElemId;
        }
        if order <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT {
            for a in 0..order {
                for b in 0..order {
                    let ab = t(a, b) as usize;
                    for c in 0..order {
                        if t(ab, c) != t(a, t(b, c) as usize) {
                            return Err(assoc(a, b, c));
                        }
                    }
                }
            }
        } else {
            let mut rng = rand::rngs::StdRng::seed_from_u64(order as u64);
            for _ in 0..10 * order {
                let (a, b, c) = (
                    rng.gen_range(0..order),
                    rng.gen_range(0..order),
                    rng.gen_range(0..order),
                );
                if t(t(a, b) as usize, c) != t(a, t(b, c) as usize) {
                    return Err(assoc(a, b, c));
                }
            }
        }
        let table = table.iter().map(|&v| v as u16).collect();
        Ok(Self::assemble(order, Some(table), inverse, None))
    }

    /// Builds a group from a table known to satisfy the axioms (constructors,
    /// quotients, products). Only the identity convention is asserted.
    pub(crate) fn from_trusted_table(order: usize, table: Vec<u16>) -> Self {
        debug_assert_eq!(table.len(), order * order);
        debug_assert!((0..order).all(|x| table[x] as usize == x));
        let mut inverse = vec![0; order];
        for x in 0..order {
            let row = &table[x * order..(x + 1) * order];
            inverse[x] = row.iter().position(|&v| v == 0).expect("inverse exists") as ElemId;
        }
        Self::assemble(order, Some(table), inverse, None)
    }

    /// Enumerates the group generated by `generators` with the default cap.
    pub fn from_permutations(degree: usize, generators: &[Permutation]) -> Result<Self> {
        Self::from_permutations_with_cap(degree, generators, DEFAULT_ENUMERATION_CAP)
    }

    /// Breadth-first closure of permutation generators. Element ids follow
    /// discovery order, identity first.
    pub fn from_permutations_with_cap(
        degree: usize,
        generators: &[Permutation],
        cap: usize,
    ) -> Result<Self> {
        if degree == 0 {
            return Err(GroupError::InvalidParameter("degree must be positive".into()));
        }
        for g in generators {
            if g.degree() != degree {
                return Err(GroupError::InvalidPermutation(format!(
                    "generator {g} has degree {}, expected {degree}",
                    g.degree()
                )));
            }
        }
        let gens: Vec<&[u16]> = generators.iter().map(|g| g.images()).collect();
        let mut images: Vec<u16> = (0..degree as u16).collect();
        let mut index: HashMap<Box<[u16]>, ElemId> = HashMap::new();
        index.insert(images.clone().into_boxed_slice(), 0);
        let mut order = 1usize;
        let mut next = 0usize;
        let mut buf = vec![0u16; degree];
        while next < order {
            for g in &gens {
                let cur = &images[next * degree..(next + 1) * degree];
                for (slot, &i) in buf.iter_mut().zip(cur) {
                    *slot = g[i as usize];
                }
                if !index.contains_key(buf.as_slice()) {
                    if order >= cap {
                        return Err(GroupError::CapExceeded {
                            what: "permutation closure",
                            size: order + 1,
                            cap,
                        });
                    }
                    index.insert(buf.clone().into_boxed_slice(), order as ElemId);
                    images.extend_from_slice(&buf);
                    order += 1;
                }
            }
            next += 1;
        }
        let data = PermData {
            degree,
            generators: generators.to_vec(),
            images,
            index,
        };
        let mut inverse = vec![0; order];
        let mut inv_buf = vec![0u16; degree];
        for x in 0..order {
            for (i, &j) in data.images_of(x as ElemId).iter().enumerate() {
                inv_buf[j as usize] = i as u16;
            }
            inverse[x] = data.index[inv_buf.as_slice()];
        }
        let table = if order <= DENSE_TABLE_LIMIT {
            let mut t = Vec::with_capacity(order * order);
            for a in 0..order {
                for b in 0..order {
                    t.push(data.compose(a as ElemId, b as ElemId) as u16);
                }
            }
            Some(t)
        } else {
            None
        };
        Ok(Self::assemble(order, table, inverse, Some(data)))
    }

    fn assemble(
        order: usize,
        table: Option<Vec<u16>>,
        inverse: Vec<ElemId>,
        perms: Option<PermData>,
    ) -> Self {
        Self {
            order,
            table,
            inverse,
            perms,
            centre: OnceLock::new(),
            classes: OnceLock::new(),
            derived: OnceLock::new(),
            generators: OnceLock::new(),
            element_orders: OnceLock::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> ElemId {
        0
    }

    pub fn elements(&self) -> impl Iterator<Item = ElemId> {
        0..self.order as ElemId
    }

    pub fn backend(&self) -> BackendKind {
        if self.table.is_some() {
            BackendKind::DenseTable
        } else {
            BackendKind::Permutation
        }
    }

    #[inline]
    pub fn mul(&self, a: ElemId, b: ElemId) -> ElemId {
        match &self.table {
            Some(t) => t[a as usize * self.order + b as usize] as ElemId,
            None => self.perms.as_ref().expect("permutation backend").compose(a, b),
        }
    }

    #[inline]
    pub fn inv(&self, a: ElemId) -> ElemId {
        self.inverse[a as usize]
    }

    pub fn pow(&self, a: ElemId, mut k: u64) -> ElemId {
        let mut base = a;
        let mut acc = 0;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `g x g^-1`.
    #[inline]
    pub fn conj(&self, g: ElemId, x: ElemId) -> ElemId {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `a^-1 b^-1 a b`.
    pub fn commutator(&self, a: ElemId, b: ElemId) -> ElemId {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    #[inline]
    pub fn commute(&self, a: ElemId, b: ElemId) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter()
            .enumerate()
            .all(|(i, &a)| gens[i + 1..].iter().all(|&b| self.commute(a, b)))
    }

    pub fn check_element(&self, x: ElemId) -> Result<()> {
        if (x as usize) < self.order {
            Ok(())
        } else {
            Err(GroupError::ElementOutOfRange {
                element: x,
                order: self.order,
            })
        }
    }

    /// Least `k >= 1` with `x^k = 1`.
    pub fn element_order(&self, x: ElemId) -> u32 {
        if let Some(orders) = self.element_orders.get() {
            return orders[x as usize];
        }
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> &[u32] {
        self.element_orders
            .get_or_init(|| self.elements().map(|x| self.element_order(x)).collect())
    }

    pub fn exponent(&self) -> u64 {
        self.element_orders()
            .iter()
            .fold(1u64, |acc, &o| lcm(acc, o as u64))
    }

    /// Row-major copy of the Cayley table, if the group is table-backed.
    pub fn table(&self) -> Option<Vec<ElemId>> {
        self.table
            .as_ref()
            .map(|t| t.iter().map(|&v| v as ElemId).collect())
    }

    /// Degree and generators for groups built from permutations.
    pub fn permutation_generators(&self) -> Option<(usize, &[Permutation])> {
        self.perms.as_ref().map(|p| (p.degree, p.generators.as_slice()))
    }

    pub fn permutation(&self, x: ElemId) -> Option<Permutation> {
        self.perms
            .as_ref()
            .map(|p| Permutation::from_raw(p.images_of(x).to_vec()))
    }

    /// Id of a permutation in a permutation-backed group.
    pub fn element_of_permutation(&self, p: &Permutation) -> Option<ElemId> {
        self.perms.as_ref()?.index.get(p.images()).copied()
    }

    /// Human-readable label: cycle notation for permutation groups, else the id.
    pub fn label(&self, x: ElemId) -> String {
        match self.permutation(x) {
            Some(p) => p.to_string(),
            None => format!("#{x}"),
        }
    }

    /// A small generating set found greedily in increasing id order.
    pub fn generators(&self) -> &[ElemId] {
        self.generators.get_or_init(|| {
            let whole = Subgroup::whole(self.order);
            self.generating_set(&whole)
        })
    }

    /// Smallest subgroup containing `seed`.
    pub fn closure(&self, seed: &[ElemId]) -> Subgroup {
        let mut gens: Vec<ElemId> = seed.iter().copied().filter(|&g| g != 0).collect();
        gens.sort_unstable();
        gens.dedup();
        let mut mark = vec![false; self.order];
        let mut list = vec![0];
        mark[0] = true;
        self.extend_closure(&mut mark, &mut list, &gens, 0);
        Subgroup::from_unsorted(list)
    }

    /// Breadth-first extension: multiplies `list[start..]` and everything
    /// newly found by `gens` on the right.
    fn extend_closure(&self, mark: &mut [bool], list: &mut Vec<ElemId>, gens: &[ElemId], start: usize) {
        let mut i = start;
        while i < list.len() {
            let e = list[i];
            for &g in gens {
                let y = self.mul(e, g);
                if !mark[y as usize] {
                    mark[y as usize] = true;
                    list.push(y);
                }
            }
            i += 1;
        }
    }

    /// Grows a subgroup by the candidates in order, keeping each candidate
    /// that is not already inside. Returns the subgroup and the kept generators.
    pub(crate) fn closure_greedy(
        &self,
        candidates: impl IntoIterator<Item = ElemId>,
    ) -> (Subgroup, Vec<ElemId>) {
        let mut mark = vec![false; self.order];
        let mut list = vec![0];
        mark[0] = true;
        let mut gens = Vec::new();
        for c in candidates {
            if mark[c as usize] {
                continue;
            }
            gens.push(c);
            // the new subgroup is the closure of the old one under all gens
            self.extend_closure(&mut mark, &mut list, &gens, 0);
        }
        (Subgroup::from_unsorted(list), gens)
    }

    /// Greedy generating set of a subgroup, scanning members in id order.
    pub fn generating_set(&self, s: &Subgroup) -> Vec<ElemId> {
        let (_, gens) = self.closure_greedy(s.members().iter().copied());
        gens
    }
}

fn assoc(a: usize, b: usize, c: usize) -> GroupError {
    AxiomViolation::Associativity {
        a: a as ElemId,
        b: b as ElemId,
        c: c as ElemId,
    }
    .into()
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Distinct prime divisors in increasing order.
pub(crate) fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `Some((p, k))` when `n = p^k` with `k >= 1`.
pub(crate) fn prime_power(n: u64) -> Option<(u64, u32)> {
    let primes = prime_divisors(n);
    if primes.len() != 1 {
        return None;
    }
    let p = primes[0];
    let (mut m, mut k) = (n, 0);
    while m > 1 {
        m /= p;
        k += 1;
    }
    Some((p, k))
}

/// BFS helper used by class and orbit computations.
pub(crate) fn orbit<F>(start: ElemId, gens: &[ElemId], mut act: F) -> Vec<(ElemId, usize, ElemId)>
where
    F: FnMut(ElemId, ElemId) -> ElemId,
{
    // (point, parent index, generator used)
    let mut out = vec![(start, usize::MAX, 0)];
    let mut seen = std::collections::HashSet::new();
    seen.insert(start);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let p = out[i].0;
        for &g in gens {
            let q = act(g, p);
            if seen.insert(q) {
                out.push((q, i, g));
                queue.push_back(out.len() - 1);
            }
        }
    }
    out
}
