//! Centres, centralisers, classes, series and normal subgroups.

use std::collections::HashMap;

use crate::error::{GroupError, Result};

use super::{orbit, prime_divisors, ElemId, FiniteGroup, Subgroup, DENSE_TABLE_LIMIT};

/// Default order bound for [`FiniteGroup::normal_subgroups`].
pub const DEFAULT_NORMAL_SUBGROUP_CAP: usize = 4096;

/// Conjugacy classes ordered by smallest member; the smallest member is the
/// class representative.
#[derive(Debug, Clone)]
pub struct ConjugacyClasses {
    classes: Vec<Vec<ElemId>>,
    class_of: Vec<u32>,
    /// For each `x`, some `g` with `g * rep * g^-1 = x`.
    conjugator: Vec<ElemId>,
}

impl ConjugacyClasses {
    pub fn classes(&self) -> &[Vec<ElemId>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_index(&self, x: ElemId) -> usize {
        self.class_of[x as usize] as usize
    }

    pub fn class_of(&self, x: ElemId) -> &[ElemId] {
        &self.classes[self.class_index(x)]
    }

    pub fn representative(&self, class: usize) -> ElemId {
        self.classes[class][0]
    }

    pub fn conjugator(&self, x: ElemId) -> ElemId {
        self.conjugator[x as usize]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }
}

impl FiniteGroup {
    pub fn centre(&self) -> &Subgroup {
        self.centre.get_or_init(|| {
            let gens = self.generators();
            Subgroup::from_sorted(
                self.elements()
                    .filter(|&z| gens.iter().all(|&g| self.commute(z, g)))
                    .collect(),
            )
        })
    }

    pub fn centraliser(&self, x: ElemId) -> Subgroup {
        Subgroup::from_sorted(self.elements().filter(|&g| self.commute(g, x)).collect())
    }

    /// `C_G(S)`: elements commuting with every member of `s`.
    pub fn centraliser_of_subgroup(&self, s: &Subgroup) -> Subgroup {
        let gens = self.generating_set(s);
        Subgroup::from_sorted(
            self.elements()
                .filter(|&g| gens.iter().all(|&h| self.commute(g, h)))
                .collect(),
        )
    }

    /// `Z(S)` as a subgroup of the parent.
    pub fn centre_of_subgroup(&self, s: &Subgroup) -> Subgroup {
        let gens = self.generating_set(s);
        Subgroup::from_sorted(
            s.members()
                .iter()
                .copied()
                .filter(|&x| gens.iter().all(|&h| self.commute(x, h)))
                .collect(),
        )
    }

    pub fn is_abelian_subgroup(&self, s: &Subgroup) -> bool {
        let gens = self.generating_set(s);
        gens.iter()
            .enumerate()
            .all(|(i, &a)| gens[i + 1..].iter().all(|&b| self.commute(a, b)))
    }

    pub fn is_normal(&self, s: &Subgroup) -> bool {
        let sgens = self.generating_set(s);
        self.generators()
            .iter()
            .all(|&g| sgens.iter().all(|&h| s.contains(self.conj(g, h))))
    }

    pub fn conjugacy_classes(&self) -> &ConjugacyClasses {
        self.classes.get_or_init(|| {
            let gens = self.generators().to_vec();
            let n = self.order;
            let mut class_of = vec![u32::MAX; n];
            let mut conjugator = vec![0; n];
            let mut classes = Vec::new();
            for x in 0..n as ElemId {
                if class_of[x as usize] != u32::MAX {
                    continue;
                }
                let idx = classes.len() as u32;
                let orb = orbit(x, &gens, |g, p| self.conj(g, p));
                let mut members = Vec::with_capacity(orb.len());
                for (k, &(p, parent, g)) in orb.iter().enumerate() {
                    class_of[p as usize] = idx;
                    conjugator[p as usize] = if k == 0 {
                        0
                    } else {
                        self.mul(g, conjugator[orb[parent].0 as usize])
                    };
                    members.push(p);
                }
                members.sort_unstable();
                classes.push(members);
            }
            ConjugacyClasses {
                classes,
                class_of,
                conjugator,
            }
        })
    }

    /// Smallest subgroup containing `seed` and normalised by `ambient_gens`.
    pub(crate) fn normal_closure_under(&self, ambient_gens: &[ElemId], seed: &[ElemId]) -> Subgroup {
        let mut mark = vec![false; self.order];
        let mut list = vec![0];
        mark[0] = true;
        let mut gens = Vec::new();
        let mut pending: Vec<ElemId> = seed.iter().rev().copied().collect();
        while let Some(x) = pending.pop() {
            if mark[x as usize] {
                continue;
            }
            gens.push(x);
            self.extend_closure(&mut mark, &mut list, &gens, 0);
            for &h in ambient_gens {
                pending.push(self.conj(h, x));
            }
        }
        Subgroup::from_unsorted(list)
    }

    /// Normal closure in the whole group.
    pub fn normal_closure(&self, seed: &[ElemId]) -> Subgroup {
        let gens = self.generators().to_vec();
        self.normal_closure_under(&gens, seed)
    }

    /// `S'` for a subgroup `S`.
    pub fn derived_subgroup_of(&self, s: &Subgroup) -> Subgroup {
        let gens = self.generating_set(s);
        let mut comms = Vec::new();
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                comms.push(self.commutator(a, b));
            }
        }
        self.normal_closure_under(&gens, &comms)
    }

    pub fn derived_subgroup(&self) -> &Subgroup {
        self.derived
            .get_or_init(|| self.derived_subgroup_of(&Subgroup::whole(self.order)))
    }

    /// `G >= G' >= G'' >= ...` until it stabilises; the first entry is `G`.
    pub fn derived_series(&self) -> Vec<Subgroup> {
        let mut series = vec![Subgroup::whole(self.order)];
        let mut current = self.derived_subgroup().clone();
        while current != *series.last().unwrap() {
            let next = self.derived_subgroup_of(&current);
            series.push(current);
            current = next;
        }
        series
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().is_trivial()
    }

    pub fn is_metabelian(&self) -> bool {
        self.is_abelian_subgroup(self.derived_subgroup())
    }

    /// `Z(G) <= Z_2(G) <= ...` until it stabilises.
    pub fn upper_central_series(&self) -> Vec<Subgroup> {
        let gens = self.generators().to_vec();
        let mut series = vec![self.centre().clone()];
        loop {
            let last = series.last().unwrap();
            let next = Subgroup::from_sorted(
                self.elements()
                    .filter(|&x| gens.iter().all(|&g| last.contains(self.commutator(x, g))))
                    .collect(),
            );
            if next == *last {
                return series;
            }
            series.push(next);
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.upper_central_series().last().unwrap().order() == self.order
    }

    /// Sylow subgroups of a nilpotent group, as sets of elements of prime-power order.
    pub fn sylow_decomposition_of_nilpotent(&self) -> Result<Vec<(u64, Subgroup)>> {
        if !self.is_nilpotent() {
            return Err(GroupError::NotNilpotent);
        }
        let orders = self.element_orders();
        Ok(prime_divisors(self.order as u64)
            .into_iter()
            .map(|p| {
                let members = self
                    .elements()
                    .filter(|&x| is_power_of(orders[x as usize] as u64, p))
                    .collect();
                (p, Subgroup::from_sorted(members))
            })
            .collect())
    }

    pub fn normal_subgroups(&self) -> Result<Vec<Subgroup>> {
        self.normal_subgroups_with_cap(DEFAULT_NORMAL_SUBGROUP_CAP)
    }

    /// All normal subgroups, as joins of normal closures of single classes,
    /// sorted by order then members.
    pub fn normal_subgroups_with_cap(&self, cap: usize) -> Result<Vec<Subgroup>> {
        if self.order > cap {
            return Err(GroupError::CapExceeded {
                what: "normal subgroup enumeration",
                size: self.order,
                cap,
            });
        }
        let classes = self.conjugacy_classes();
        let mut atoms: Vec<(Subgroup, Vec<ElemId>)> = Vec::new();
        for c in 1..classes.len() {
            let n = self.normal_closure(&[classes.representative(c)]);
            if !atoms.iter().any(|(a, _)| *a == n) {
                let gens = self.generating_set(&n);
                atoms.push((n, gens));
            }
        }
        let mut found: HashMap<Subgroup, usize> = HashMap::new();
        let mut list: Vec<(Subgroup, Vec<ElemId>)> = vec![(Subgroup::trivial(), Vec::new())];
        found.insert(Subgroup::trivial(), 0);
        for (atom, atom_gens) in &atoms {
            let snapshot = list.len();
            for i in 0..snapshot {
                if atom.is_subset_of(&list[i].0) {
                    continue;
                }
                let mut gens = list[i].1.clone();
                gens.extend_from_slice(atom_gens);
                let join = self.closure(&gens);
                if !found.contains_key(&join) {
                    found.insert(join.clone(), list.len());
                    let gens = self.generating_set(&join);
                    list.push((join, gens));
                }
            }
        }
        let mut out: Vec<Subgroup> = list.into_iter().map(|(s, _)| s).collect();
        out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    /// The subgroup as a group in its own right; local id `i` is `s.members()[i]`.
    pub fn subgroup_as_group(&self, s: &Subgroup) -> Result<FiniteGroup> {
        let n = s.order();
        if n > DENSE_TABLE_LIMIT {
            return Err(GroupError::CapExceeded {
                what: "subgroup table",
                size: n,
                cap: DENSE_TABLE_LIMIT,
            });
        }
        let m = s.members();
        let mut table = Vec::with_capacity(n * n);
        for &a in m {
            for &b in m {
                let local = s.local_id(self.mul(a, b)).ok_or(GroupError::InvalidParameter(
                    "member list is not closed".into(),
                ))?;
                table.push(local as u16);
            }
        }
        Ok(FiniteGroup::from_trusted_table(n, table))
    }

    /// Multiset of element orders as sorted `(order, count)` pairs.
    pub fn order_profile(&self) -> Vec<(u32, usize)> {
        let mut counts: HashMap<u32, usize> = HashMap::new();
        for &o in self.element_orders() {
            *counts.entry(o).or_default() += 1;
        }
        let mut v: Vec<_> = counts.into_iter().collect();
        v.sort_unstable();
        v
    }
}

fn is_power_of(mut n: u64, p: u64) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}
