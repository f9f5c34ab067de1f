//! Distinct element centralisers and the group classes defined by how they
//! intersect.
//!
//! Abelian groups have no non-central elements, so every predicate here holds
//! for them vacuously.

use std::collections::HashMap;

use crate::group::{ElemId, FiniteGroup, Subgroup};

/// One distinct centraliser `C_G(x)` of a non-central element.
#[derive(Debug, Clone)]
pub struct Centraliser {
    pub subgroup: Subgroup,
    /// Smallest-id non-central element with this centraliser.
    pub witness: ElemId,
    pub abelian: bool,
}

/// Two distinct family members whose (centre) intersection exceeds `Z(G)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairViolation {
    pub first: usize,
    pub second: usize,
    pub intersection: Subgroup,
}

#[derive(Debug, Clone)]
pub struct CentraliserFamily {
    centre: Subgroup,
    all: Vec<Centraliser>,
    minimal: Vec<usize>,
    maximal: Vec<usize>,
    of_element: Vec<Option<usize>>,
}

impl CentraliserFamily {
    /// Computes one centraliser per non-central class and obtains the rest by
    /// conjugation, `C(g x g^-1) = g C(x) g^-1`.
    pub fn new(g: &FiniteGroup) -> Self {
        let centre = g.centre().clone();
        let mut of_element = vec![None; g.order()];
        let mut index: HashMap<Subgroup, usize> = HashMap::new();
        let mut all: Vec<Centraliser> = Vec::new();
        if centre.order() < g.order() {
            let cc = g.conjugacy_classes();
            for class in cc.classes() {
                let rep = class[0];
                if centre.contains(rep) {
                    continue;
                }
                let base = g.centraliser(rep);
                for &x in class {
                    let c = if x == rep {
                        base.clone()
                    } else {
                        base.conjugate(g, cc.conjugator(x))
                    };
                    let idx = match index.get(&c) {
                        Some(&i) => {
                            all[i].witness = all[i].witness.min(x);
                            i
                        }
                        None => {
                            let abelian = g.is_abelian_subgroup(&c);
                            all.push(Centraliser {
                                subgroup: c.clone(),
                                witness: x,
                                abelian,
                            });
                            index.insert(c, all.len() - 1);
                            all.len() - 1
                        }
                    };
                    of_element[x as usize] = Some(idx);
                }
            }
        }
        // canonical order: by witness id
        let mut perm: Vec<usize> = (0..all.len()).collect();
        perm.sort_by_key(|&i| all[i].witness);
        let mut rank = vec![0; all.len()];
        for (new, &old) in perm.iter().enumerate() {
            rank[old] = new;
        }
        let all: Vec<Centraliser> = perm.iter().map(|&i| all[i].clone()).collect();
        for slot in of_element.iter_mut().flatten() {
            *slot = rank[*slot];
        }

        let proper_subset = |a: &Subgroup, b: &Subgroup| {
            a.order() < b.order() && b.order().is_multiple_of(a.order()) && a.is_subset_of(b)
        };
        let minimal = (0..all.len())
            .filter(|&i| {
                !all.iter()
                    .any(|d| proper_subset(&d.subgroup, &all[i].subgroup))
            })
            .collect();
        let maximal = (0..all.len())
            .filter(|&i| {
                !all.iter()
                    .any(|d| proper_subset(&all[i].subgroup, &d.subgroup))
            })
            .collect();
        Self {
            centre,
            all,
            minimal,
            maximal,
            of_element,
        }
    }

    pub fn centre(&self) -> &Subgroup {
        &self.centre
    }

    pub fn all(&self) -> &[Centraliser] {
        &self.all
    }

    pub fn is_empty(&self) -> bool {
        self.all.is_empty()
    }

    /// Indices into [`all`](Self::all) of the minimal centralisers.
    pub fn minimal(&self) -> &[usize] {
        &self.minimal
    }

    pub fn maximal(&self) -> &[usize] {
        &self.maximal
    }

    /// Index of `C_G(x)` in the family, `None` for central `x`.
    pub fn index_of(&self, x: ElemId) -> Option<usize> {
        self.of_element[x as usize]
    }

    pub fn minimal_subgroups(&self) -> impl Iterator<Item = &Centraliser> {
        self.minimal.iter().map(|&i| &self.all[i])
    }

    /// First pair among `members` meeting in more than `Z(G)`.
    pub fn first_bad_pair(&self, members: &[usize]) -> Option<PairViolation> {
        self.first_bad_pair_by(members, |i| self.all[i].subgroup.clone())
    }

    /// As [`first_bad_pair`](Self::first_bad_pair) but on `Z(C)` for each member.
    pub fn first_bad_centre_pair(&self, g: &FiniteGroup, members: &[usize]) -> Option<PairViolation> {
        self.first_bad_pair_by(members, |i| g.centre_of_subgroup(&self.all[i].subgroup))
    }

    fn first_bad_pair_by(
        &self,
        members: &[usize],
        subgroup: impl Fn(usize) -> Subgroup,
    ) -> Option<PairViolation> {
        let subs: Vec<Subgroup> = members.iter().map(|&i| subgroup(i)).collect();
        let z = self.centre.order();
        for a in 0..subs.len() {
            for b in a + 1..subs.len() {
                if subs[a].intersection_order(&subs[b]) != z {
                    return Some(PairViolation {
                        first: members[a],
                        second: members[b],
                        intersection: subs[a].intersection(&subs[b]),
                    });
                }
            }
        }
        None
    }

    fn all_indices(&self) -> Vec<usize> {
        (0..self.all.len()).collect()
    }
}

pub fn centraliser_family(g: &FiniteGroup) -> CentraliserFamily {
    CentraliserFamily::new(g)
}

/// Every non-central centraliser is abelian.
pub fn is_ca(g: &FiniteGroup) -> bool {
    is_ca_in(&CentraliserFamily::new(g))
}

pub fn is_ca_in(fam: &CentraliserFamily) -> bool {
    fam.all.iter().all(|c| c.abelian)
}

/// Distinct non-central centralisers meet exactly in the centre.
pub fn is_ca_by_intersection(g: &FiniteGroup) -> bool {
    let fam = CentraliserFamily::new(g);
    fam.first_bad_pair(&fam.all_indices()).is_none()
}

/// No non-central centraliser properly contains another.
pub fn is_f(g: &FiniteGroup) -> bool {
    is_f_in(&CentraliserFamily::new(g))
}

pub fn is_f_in(fam: &CentraliserFamily) -> bool {
    fam.minimal.len() == fam.all.len() && fam.maximal.len() == fam.all.len()
}

/// Centres of distinct non-central centralisers meet exactly in the centre.
pub fn is_f_by_central_intersection(g: &FiniteGroup) -> bool {
    let fam = CentraliserFamily::new(g);
    fam.first_bad_centre_pair(g, &fam.all_indices()).is_none()
}

/// Distinct minimal centralisers meet exactly in the centre.
pub fn is_camin(g: &FiniteGroup) -> bool {
    is_camin_in(&CentraliserFamily::new(g))
}

pub fn is_camin_in(fam: &CentraliserFamily) -> bool {
    fam.first_bad_pair(&fam.minimal).is_none()
}

/// Centres of distinct minimal centralisers meet exactly in the centre.
pub fn is_fmin(g: &FiniteGroup) -> bool {
    is_fmin_in(g, &CentraliserFamily::new(g))
}

pub fn is_fmin_in(g: &FiniteGroup, fam: &CentraliserFamily) -> bool {
    fam.first_bad_centre_pair(g, &fam.minimal).is_none()
}

/// Distinct maximal centralisers meet exactly in the centre.
pub fn is_dgroup(g: &FiniteGroup) -> bool {
    is_dgroup_in(&CentraliserFamily::new(g))
}

pub fn is_dgroup_in(fam: &CentraliserFamily) -> bool {
    fam.first_bad_pair(&fam.maximal).is_none()
}

pub fn is_metabelian(g: &FiniteGroup) -> bool {
    g.is_metabelian()
}

/// All five class predicates from a single family computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassVerdicts {
    pub ca: bool,
    pub f: bool,
    pub camin: bool,
    pub fmin: bool,
    pub dgroup: bool,
}

impl ClassVerdicts {
    pub fn of(g: &FiniteGroup) -> Self {
        Self::from_family(g, &CentraliserFamily::new(g))
    }

    pub fn from_family(g: &FiniteGroup, fam: &CentraliserFamily) -> Self {
        Self {
            ca: is_ca_in(fam),
            f: is_f_in(fam),
            camin: is_camin_in(fam),
            fmin: is_fmin_in(g, fam),
            dgroup: is_dgroup_in(fam),
        }
    }
}
