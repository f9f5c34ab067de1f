use crate::error::{GroupError, Result};

use super::{ElemId, FiniteGroup, Subgroup, DENSE_TABLE_LIMIT};

/// `G/N` with coset bookkeeping. Coset ids are assigned in order of their
/// smallest member, so coset 0 is `N` itself.
#[derive(Debug, Clone)]
pub struct QuotientGroup {
    base_order: usize,
    kernel: Subgroup,
    project: Vec<ElemId>,
    cosets: Vec<Vec<ElemId>>,
    group: FiniteGroup,
}

impl QuotientGroup {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn base_order(&self) -> usize {
        self.base_order
    }

    pub fn project(&self, x: ElemId) -> ElemId {
        self.project[x as usize]
    }

    pub fn preimage(&self, coset: ElemId) -> &[ElemId] {
        &self.cosets[coset as usize]
    }

    pub fn representative(&self, coset: ElemId) -> ElemId {
        self.cosets[coset as usize][0]
    }

    /// Image of a subgroup of the base group.
    pub fn image(&self, s: &Subgroup) -> Subgroup {
        Subgroup::from_unsorted(s.members().iter().map(|&x| self.project(x)).collect())
    }

    /// Full preimage of a subgroup of the quotient.
    pub fn preimage_of(&self, s: &Subgroup) -> Subgroup {
        Subgroup::from_unsorted(
            s.members()
                .iter()
                .flat_map(|&c| self.cosets[c as usize].iter().copied())
                .collect(),
        )
    }
}

impl FiniteGroup {
    pub fn quotient(&self, n: &Subgroup) -> Result<QuotientGroup> {
        if !self.is_normal(n) {
            return Err(GroupError::NotNormal);
        }
        let size = self.order / n.order();
        if size > DENSE_TABLE_LIMIT {
            return Err(GroupError::CapExceeded {
                what: "quotient table",
                size,
                cap: DENSE_TABLE_LIMIT,
            });
        }
        let mut project = vec![ElemId::MAX; self.order];
        let mut cosets = Vec::with_capacity(size);
        for x in self.elements() {
            if project[x as usize] != ElemId::MAX {
                continue;
            }
            let id = cosets.len() as ElemId;
            let mut coset: Vec<ElemId> = n.members().iter().map(|&k| self.mul(x, k)).collect();
            coset.sort_unstable();
            for &y in &coset {
                project[y as usize] = id;
            }
            cosets.push(coset);
        }
        let mut table = Vec::with_capacity(size * size);
        for a in &cosets {
            for b in &cosets {
                table.push(project[self.mul(a[0], b[0]) as usize] as u16);
            }
        }
        Ok(QuotientGroup {
            base_order: self.order,
            kernel: n.clone(),
            project,
            cosets,
            group: FiniteGroup::from_trusted_table(size, table),
        })
    }

    /// `G/Z(G)`.
    pub fn central_quotient(&self) -> Result<QuotientGroup> {
        self.quotient(&self.centre().clone())
    }
}

#[cfg(test)]
mod tests {
    use crate::constructors::*;
    use crate::group::isomorphic;

    #[test]
    fn quotient_by_whole_group_is_trivial() {
        let g = symmetric(3).unwrap();
        let q = g.quotient(&crate::Subgroup::whole(6)).unwrap();
        assert_eq!(q.group().order(), 1);
    }

    #[test]
    fn quaternion_mod_centre_is_klein() {
        let q8 = quaternion_generalised(8).unwrap();
        let q = q8.central_quotient().unwrap();
        assert_eq!(q.group().order(), 4);
        assert_eq!(q.group().exponent(), 2);
        assert_eq!(q.preimage(0), q8.centre().members());
        for a in q8.elements() {
            for b in q8.elements() {
                assert_eq!(q.project(q8.mul(a, b)), q.group().mul(q.project(a), q.project(b)));
            }
        }
    }

    #[test]
    fn sl25_mod_centre_is_a5() {
        let g = sl2(5).unwrap();
        let q = g.central_quotient().unwrap();
        assert_eq!(q.group().order(), 60);
        assert!(isomorphic(q.group(), &alternating(5).unwrap()).unwrap());
    }

    #[test]
    fn non_normal_rejected() {
        let g = symmetric(3).unwrap();
        let t = g.closure(&[g.generators()[0]]);
        let s = if t.order() == 2 { t } else { g.closure(&[g.generators()[1]]) };
        assert_eq!(s.order(), 2);
        assert!(matches!(g.quotient(&s), Err(crate::GroupError::NotNormal)));
    }
}
