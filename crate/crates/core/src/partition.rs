//! The candidate normal partition of `G/Z(G)` built from minimal centralisers,
//! and an independent checker for the partition axioms.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::centralisers::CentraliserFamily;
use crate::error::{GroupError, Result};
use crate::group::{ElemId, FiniteGroup, QuotientGroup, Subgroup};

/// Which of the two minimal-centraliser conditions is in play.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavour {
    /// Components are the images `C/Z` of minimal centralisers.
    Camin,
    /// Components are the images `Z(C)/Z` of their centres.
    Fmin,
}

impl FromStr for Flavour {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "camin" => Ok(Self::Camin),
            "fmin" => Ok(Self::Fmin),
            other => Err(GroupError::InvalidParameter(format!(
                "flavour must be camin or fmin, got {other:?}"
            ))),
        }
    }
}

impl fmt::Display for Flavour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Camin => "camin",
            Self::Fmin => "fmin",
        })
    }
}

#[derive(Debug, Clone)]
pub struct BetaPartition {
    pub quotient: QuotientGroup,
    /// Distinct subgroups of `quotient.group()`.
    pub components: Vec<Subgroup>,
    pub flavour: Flavour,
    /// Witness elements of every minimal centraliser mapping onto each
    /// component. More than one entry is a provenance multiplicity.
    pub provenance: Vec<Vec<ElemId>>,
}

impl BetaPartition {
    pub fn verify(&self) -> PartitionReport {
        verify_normal_partition(&self.quotient, &self.components)
    }

    /// Number of components of each order, ascending.
    pub fn order_histogram(&self) -> Vec<(usize, usize)> {
        let mut h: Vec<(usize, usize)> = Vec::new();
        let mut orders: Vec<usize> = self.components.iter().map(Subgroup::order).collect();
        orders.sort_unstable();
        for o in orders {
            match h.last_mut() {
                Some((k, n)) if *k == o => *n += 1,
                _ => h.push((o, 1)),
            }
        }
        h
    }
}

pub fn beta_camin(g: &FiniteGroup) -> Result<BetaPartition> {
    beta(g, Flavour::Camin)
}

pub fn beta_fmin(g: &FiniteGroup) -> Result<BetaPartition> {
    beta(g, Flavour::Fmin)
}

pub fn beta(g: &FiniteGroup, flavour: Flavour) -> Result<BetaPartition> {
    let fam = CentraliserFamily::new(g);
    beta_from_family(g, &fam, flavour)
}

pub fn beta_from_family(g: &FiniteGroup, fam: &CentraliserFamily, flavour: Flavour) -> Result<BetaPartition> {
    let violation = match flavour {
        Flavour::Camin => fam.first_bad_pair(fam.minimal()),
        Flavour::Fmin => fam.first_bad_centre_pair(g, fam.minimal()),
    };
    if let Some(v) = violation {
        let (first, second) = (fam.all()[v.first].witness, fam.all()[v.second].witness);
        let intersection = v.intersection.members().to_vec();
        return Err(match flavour {
            Flavour::Camin => GroupError::NotCAmin {
                first,
                second,
                intersection,
            },
            Flavour::Fmin => GroupError::NotFmin {
                first,
                second,
                intersection,
            },
        });
    }
    let quotient = g.central_quotient()?;
    let mut components: Vec<Subgroup> = Vec::new();
    let mut provenance: Vec<Vec<ElemId>> = Vec::new();
    let mut index: HashMap<Subgroup, usize> = HashMap::new();
    for c in fam.minimal_subgroups() {
        let source = match flavour {
            Flavour::Camin => c.subgroup.clone(),
            Flavour::Fmin => g.centre_of_subgroup(&c.subgroup),
        };
        let image = quotient.image(&source);
        let i = *index.entry(image.clone()).or_insert_with(|| {
            components.push(image);
            provenance.push(Vec::new());
            components.len() - 1
        });
        provenance[i].push(c.witness);
    }
    Ok(BetaPartition {
        quotient,
        components,
        flavour,
        provenance,
    })
}

/// Why the nontrivial flag failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NontrivialFailure {
    TooFewComponents(usize),
    TrivialComponent(usize),
    WholeGroup(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionReport {
    pub group_order: usize,
    pub component_count: usize,
    pub covering: bool,
    /// First nontrivial element lying in no component.
    pub uncovered: Option<ElemId>,
    pub disjoint: bool,
    /// First nontrivial element shared by two components, with their indices.
    pub overlap: Option<(ElemId, usize, usize)>,
    pub normal: bool,
    /// A component and a generator whose conjugate is not a component.
    pub not_normal: Option<(usize, ElemId)>,
    pub nontrivial: bool,
    pub nontrivial_failure: Option<NontrivialFailure>,
    pub all_abelian: bool,
    pub non_abelian: Option<usize>,
}

impl PartitionReport {
    /// Covering, disjoint, normal and nontrivial all hold.
    pub fn is_partition(&self) -> bool {
        self.covering && self.disjoint && self.normal && self.nontrivial
    }

    /// `key=value` lines, one per flag and one per counterexample.
    pub fn to_text(&self) -> String {
        let flag = |b: bool| if b { "true" } else { "false" };
        let mut out = String::new();
        let mut line = |k: &str, v: String| {
            out.push_str(k);
            out.push('=');
            out.push_str(&v);
            out.push('\n');
        };
        line("quotient_order", self.group_order.to_string());
        line("components", self.component_count.to_string());
        line("covering", flag(self.covering).into());
        if let Some(x) = self.uncovered {
            line("uncovered_element", x.to_string());
        }
        line("disjoint", flag(self.disjoint).into());
        if let Some((x, a, b)) = self.overlap {
            line("overlap", format!("{x} in {a},{b}"));
        }
        line("normal", flag(self.normal).into());
        if let Some((c, g)) = self.not_normal {
            line("not_normal", format!("component {c} conjugated by {g}"));
        }
        line("nontrivial", flag(self.nontrivial).into());
        match &self.nontrivial_failure {
            Some(NontrivialFailure::TooFewComponents(n)) => line("nontrivial_failure", format!("{n} components")),
            Some(NontrivialFailure::TrivialComponent(i)) => line("nontrivial_failure", format!("component {i} trivial")),
            Some(NontrivialFailure::WholeGroup(i)) => line("nontrivial_failure", format!("component {i} is the whole group")),
            None => {}
        }
        line("all_abelian", flag(self.all_abelian).into());
        if let Some(i) = self.non_abelian {
            line("non_abelian_component", i.to_string());
        }
        line("partition", flag(self.is_partition()).into());
        out
    }
}

/// Checks the partition axioms for `components` inside `q.group()`.
/// Duplicate components are merged first.
pub fn verify_normal_partition(q: &QuotientGroup, components: &[Subgroup]) -> PartitionReport {
    verify_partition_in(q.group(), components)
}

pub fn verify_partition_in(g: &FiniteGroup, components: &[Subgroup]) -> PartitionReport {
    let mut comps: Vec<Subgroup> = Vec::new();
    let mut seen = HashSet::new();
    for c in components {
        if seen.insert(c.clone()) {
            comps.push(c.clone());
        }
    }
    let n = g.order();

    let mut owner: Vec<Option<usize>> = vec![None; n];
    let mut overlap = None;
    for (i, c) in comps.iter().enumerate() {
        for &x in c.members() {
            if x == 0 {
                continue;
            }
            match owner[x as usize] {
                None => owner[x as usize] = Some(i),
                Some(j) => {
                    if overlap.is_none_or(|(y, _, _)| x < y) {
                        overlap = Some((x, j, i));
                    }
                }
            }
        }
    }
    let uncovered = (1..n as ElemId).find(|&x| owner[x as usize].is_none());

    let mut not_normal = None;
    'outer: for (i, c) in comps.iter().enumerate() {
        for &s in g.generators() {
            if !seen.contains(&c.conjugate(g, s)) {
                not_normal = Some((i, s));
                break 'outer;
            }
        }
    }

    let nontrivial_failure = if comps.len() < 2 {
        Some(NontrivialFailure::TooFewComponents(comps.len()))
    } else if let Some(i) = comps.iter().position(Subgroup::is_trivial) {
        Some(NontrivialFailure::TrivialComponent(i))
    } else {
        comps.iter().position(|c| c.order() == n).map(NontrivialFailure::WholeGroup)
    };

    let non_abelian = comps.iter().position(|c| !g.is_abelian_subgroup(c));

    PartitionReport {
        group_order: n,
        component_count: comps.len(),
        covering: uncovered.is_none(),
        uncovered,
        disjoint: overlap.is_none(),
        overlap,
        normal: not_normal.is_none(),
        not_normal,
        nontrivial: nontrivial_failure.is_none(),
        nontrivial_failure,
        all_abelian: non_abelian.is_none(),
        non_abelian,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::*;

    #[test]
    fn quaternion_camin_partition() {
        let g = quaternion_generalised(8).unwrap();
        let b = beta_camin(&g).unwrap();
        assert_eq!(b.quotient.group().order(), 4);
        assert_eq!(b.order_histogram(), vec![(2, 3)]);
        assert!(b.verify().is_partition());
        let f = beta_fmin(&g).unwrap();
        assert_eq!(f.components, b.components);
    }

    #[test]
    fn sl25_census() {
        let b = beta_camin(&sl2(5).unwrap()).unwrap();
        assert_eq!(b.quotient.group().order(), 60);
        assert_eq!(b.order_histogram(), vec![(2, 15), (3, 10), (5, 6)]);
        let covered: usize = b.components.iter().map(|c| c.order() - 1).sum();
        assert_eq!(covered, 59);
        let r = b.verify();
        assert!(r.is_partition() && r.all_abelian, "{}", r.to_text());
        assert!(b.provenance.iter().all(|p| p.len() == 1));
    }

    #[test]
    fn sym4_is_rejected() {
        let g = symmetric(4).unwrap();
        match beta_camin(&g) {
            Err(GroupError::NotCAmin { intersection, .. }) => {
                assert_eq!(intersection.len(), 2);
                let t = g.permutation(intersection[1]).unwrap();
                assert_eq!(t.to_string(), "(1 2)(3 4)");
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(beta_fmin(&g), Err(GroupError::NotFmin { .. })));
    }

    #[test]
    fn extraspecial_fmin_partitions() {
        let b = beta_fmin(&extraspecial(3, 2, Variant::Plus).unwrap()).unwrap();
        assert_eq!(b.quotient.group().order(), 81);
        assert_eq!(b.order_histogram(), vec![(3, 40)]);
        assert!(b.verify().is_partition());

        let b = beta_fmin(&extraspecial(2, 2, Variant::Plus).unwrap()).unwrap();
        assert_eq!(b.order_histogram(), vec![(2, 15)]);
        assert!(b.verify().is_partition());
    }

    #[test]
    fn whole_group_is_not_nontrivial() {
        let g = symmetric(3).unwrap();
        let q = g.central_quotient().unwrap();
        let r = verify_normal_partition(&q, &[Subgroup::whole(q.group().order())]);
        assert!(!r.nontrivial);
        assert!(r.covering && r.disjoint && r.normal);
        assert_eq!(r.nontrivial_failure, Some(NontrivialFailure::TooFewComponents(1)));
    }

    #[test]
    fn klein_four_lines() {
        let g = direct_product(&cyclic(2).unwrap(), &cyclic(2).unwrap()).unwrap();
        let q = g.quotient(&Subgroup::trivial()).unwrap();
        let comps: Vec<Subgroup> = (1..4).map(|x| g.closure(&[x])).collect();
        let r = verify_normal_partition(&q, &comps);
        assert!(r.is_partition() && r.all_abelian);
    }

    #[test]
    fn alt5_sylow_partition() {
        let g = alternating(5).unwrap();
        let q = g.central_quotient().unwrap();
        let fam = CentraliserFamily::new(&g);
        let comps: Vec<Subgroup> = fam.all().iter().map(|c| c.subgroup.clone()).collect();
        assert_eq!(comps.len(), 21);
        assert!(verify_normal_partition(&q, &comps).is_partition());
    }

    #[test]
    fn failures_are_reported() {
        let g = symmetric(3).unwrap();
        let q = g.central_quotient().unwrap();
        let t = g.closure(&[g.generators()[0]]);
        let r = verify_normal_partition(&q, &[t.clone(), Subgroup::whole(6)]);
        assert!(!r.disjoint && !r.nontrivial && !r.all_abelian);
        let r = verify_normal_partition(&q, &[t, g.derived_subgroup().clone()]);
        assert!(!r.covering && !r.normal && r.disjoint);
        assert!(r.uncovered.is_some() && r.not_normal.is_some());
        assert!(r.to_text().contains("normal=false"));
    }
}
