use crate::error::{GroupError, Result};

use super::{ElemId, FiniteGroup};

/// A subgroup in canonical form: strictly increasing member ids of its parent.
///
/// Equality of subgroups of the same parent is equality of member lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    members: Vec<ElemId>,
}

impl Subgroup {
    pub fn trivial() -> Self {
        Self { members: vec![0] }
    }

    pub fn whole(order: usize) -> Self {
        Self {
            members: (0..order as ElemId).collect(),
        }
    }

    /// Checks closure under the parent's product and inverse.
    pub fn new(group: &FiniteGroup, members: Vec<ElemId>) -> Result<Self> {
        for &m in &members {
            group.check_element(m)?;
        }
        let s = Self::from_unsorted(members);
        if !s.contains(0) {
            return Err(GroupError::InvalidParameter("subgroup must contain the identity".into()));
        }
        for &a in &s.members {
            if !s.contains(group.inv(a)) {
                return Err(GroupError::InvalidParameter(format!(
                    "not closed under inverse at {a}"
                )));
            }
            for &b in &s.members {
                if !s.contains(group.mul(a, b)) {
                    return Err(GroupError::InvalidParameter(format!(
                        "not closed under product at ({a}, {b})"
                    )));
                }
            }
        }
        Ok(s)
    }

    pub(crate) fn from_unsorted(mut members: Vec<ElemId>) -> Self {
        members.sort_unstable();
        members.dedup();
        Self { members }
    }

    pub(crate) fn from_sorted(members: Vec<ElemId>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Self { members }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[ElemId] {
        &self.members
    }

    pub fn contains(&self, x: ElemId) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    /// Position of `x` in the member list, which is its id in the subgroup
    /// viewed as a group in its own right.
    pub fn local_id(&self, x: ElemId) -> Option<ElemId> {
        self.members.binary_search(&x).ok().map(|i| i as ElemId)
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        if self.order() > other.order() {
            return false;
        }
        let mut j = 0;
        for &x in &self.members {
            while j < other.members.len() && other.members[j] < x {
                j += 1;
            }
            if j == other.members.len() || other.members[j] != x {
                return false;
            }
        }
        true
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let (a, b) = (&self.members, &other.members);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        Self { members: out }
    }

    pub fn intersection_order(&self, other: &Self) -> usize {
        let (a, b) = (&self.members, &other.members);
        let (mut i, mut j, mut n) = (0, 0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    n += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        n
    }

    /// `g S g^-1`.
    pub fn conjugate(&self, group: &FiniteGroup, g: ElemId) -> Self {
        Self::from_unsorted(self.members.iter().map(|&x| group.conj(g, x)).collect())
    }
}
