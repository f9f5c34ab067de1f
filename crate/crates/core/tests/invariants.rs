//! Invariants of the group layer, the centraliser classes, the partitions and
//! the classifier, over the built-in corpus and over random permutation groups.

use cagroups::centralisers::*;
use cagroups::classify::{classify, frobenius_kernel, verify_theorem};
use cagroups::constructors::*;
use cagroups::corpus::{construct_from_spec, corpus};
use cagroups::group::isomorphic;
use cagroups::partition::{beta_camin, beta_fmin, Flavour};
use cagroups::{FiniteGroup, Permutation, Subgroup};
use proptest::prelude::*;

fn z2_order(g: &FiniteGroup) -> usize {
    let s = g.upper_central_series();
    s.get(1).map_or(s[0].order(), Subgroup::order)
}

fn is_prime(n: usize) -> bool {
    n > 1 && (2..n).take_while(|k| k * k <= n).all(|k| !n.is_multiple_of(k))
}

/// Every class-level property checked on one group.
fn check_group(g: &FiniteGroup) -> Result<(), String> {
    let fam = CentraliserFamily::new(g);
    let v = ClassVerdicts::from_family(g, &fam);
    let err = |m: &str| Err(format!("order {}: {m}", g.order()));

    for x in g.elements() {
        match fam.index_of(x) {
            None if !g.centre().contains(x) => return err("non-central element without family member"),
            Some(i) if fam.all()[i].subgroup != g.centraliser(x) => return err("wrong family member"),
            _ => {}
        }
    }
    let min = fam.minimal();
    for (a, &i) in min.iter().enumerate() {
        for &j in &min[a + 1..] {
            if fam.all()[i].subgroup.is_subset_of(&fam.all()[j].subgroup)
                || fam.all()[j].subgroup.is_subset_of(&fam.all()[i].subgroup)
            {
                return err("comparable minimal centralisers");
            }
        }
    }
    if !g.is_abelian() && min.len() < 2 {
        return err("fewer than two minimal centralisers");
    }

    if v.ca != is_ca_by_intersection(g) {
        return err("ca vs intersection");
    }
    if v.f != is_f_by_central_intersection(g) {
        return err("f vs central intersection");
    }
    if v.ca != (v.f && v.camin) {
        return err("ca vs f and camin");
    }
    if (v.ca && !v.camin) || (v.camin && !v.fmin) || (v.ca && !v.f) || (v.f && !v.fmin) {
        return err("inclusion chain");
    }
    if v.f && v.dgroup != v.camin {
        return err("f-group with dgroup != camin");
    }
    if is_prime(g.derived_subgroup().order()) && !v.f {
        return err("prime derived subgroup but not f");
    }
    if v.ca && z2_order(g) > g.centre().order() && !g.is_metabelian() {
        return err("metabelian corollary");
    }
    if !g.is_solvable() && ((v.f && !v.ca) || (v.fmin && !v.camin)) {
        return err("non-solvable corollary");
    }
    if !g.is_abelian() {
        if v.camin {
            if !fam.minimal_subgroups().all(|c| c.abelian) {
                return err("non-abelian minimal centraliser in camin group");
            }
            let r = beta_camin(g).map_err(|e| e.to_string())?.verify();
            if !(r.is_partition() && r.all_abelian) {
                return Err(r.to_text());
            }
        } else if beta_camin(g).is_ok() {
            return err("beta_camin accepted a non-camin group");
        }
        if v.fmin {
            let r = beta_fmin(g).map_err(|e| e.to_string())?.verify();
            if !r.is_partition() {
                return Err(r.to_text());
            }
        }
    }
    Ok(())
}

fn check_theorem(g: &FiniteGroup) -> Result<(), String> {
    for fl in [Flavour::Camin, Flavour::Fmin] {
        let v = verify_theorem(g, fl).map_err(|e| e.to_string())?;
        if !v.agrees() {
            return Err(format!(
                "order {} ({fl}): predicate={} cases={}",
                g.order(),
                v.predicate,
                v.report.cases_text()
            ));
        }
        let r = &v.report;
        if r.matched_cases.iter().any(|c| [1, 3, 4].contains(c)) && !is_ca(g) {
            return Err(format!("order {}: case {} but not ca", g.order(), r.cases_text()));
        }
        if let Some(w) = &r.frobenius {
            if r.matched_cases.contains(&1) || r.matched_cases.contains(&2) {
                for &x in w.complement.members() {
                    if !g.centre().contains(x) && g.centraliser(x) != w.complement {
                        return Err(format!("order {}: complement is not C(x)", g.order()));
                    }
                }
            }
        }
    }
    let q = g.central_quotient().map_err(|e| e.to_string())?;
    if let Some(l) = frobenius_kernel(q.group()).map_err(|e| e.to_string())? {
        let lg = q.group().subgroup_as_group(&l).map_err(|e| e.to_string())?;
        if !lg.is_nilpotent() {
            return Err(format!("order {}: Frobenius kernel not nilpotent", g.order()));
        }
    }
    Ok(())
}

#[test]
fn corpus_class_properties() {
    for (name, g) in corpus() {
        check_group(&g).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn corpus_theorem_properties() {
    for (name, g) in corpus() {
        check_theorem(&g).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn corpus_group_axioms_and_orbit_stabiliser() {
    for (name, g) in corpus() {
        let table = g.table().unwrap();
        let rebuilt = FiniteGroup::from_table(g.order(), &table).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(rebuilt.order(), g.order());
        let cc = g.conjugacy_classes();
        for x in g.elements() {
            let c = g.centraliser(x);
            assert!(g.centre().is_subset_of(&c), "{name}");
            assert!(g.closure(&[x]).is_subset_of(&c), "{name}");
            assert_eq!(cc.class_of(x).len() * c.order(), g.order(), "{name}");
        }
    }
}

#[test]
fn corpus_derived_and_quotients() {
    for (name, g) in corpus() {
        let d = g.derived_subgroup().clone();
        assert!(g.is_normal(&d), "{name}");
        let q = g.quotient(&d).unwrap();
        assert!(q.group().is_abelian(), "{name}");
        if g.order() <= 512 {
            for n in [d.clone(), g.centre().clone()] {
                let q = g.quotient(&n).unwrap();
                for a in g.elements() {
                    for b in g.elements() {
                        assert_eq!(q.project(g.mul(a, b)), q.group().mul(q.project(a), q.project(b)), "{name}");
                    }
                }
            }
        }
        let s = g.upper_central_series();
        let z2 = s.get(1).unwrap_or(&s[0]);
        assert!(d.is_subset_of(&g.centraliser_of_subgroup(z2)), "{name}");
    }
}

#[test]
fn corpus_isomorphism_is_an_equivalence() {
    let c = corpus();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..c.len() {
        assert!(isomorphic(&c[i].1, &c[i].1).unwrap());
        for j in i + 1..c.len() {
            if c[i].1.order() != c[j].1.order() {
                continue;
            }
            let ab = isomorphic(&c[i].1, &c[j].1).unwrap();
            assert_eq!(ab, isomorphic(&c[j].1, &c[i].1).unwrap());
            if ab {
                assert_eq!(c[i].1.order_profile(), c[j].1.order_profile());
            }
        }
        match classes.iter_mut().find(|cl| isomorphic(&c[cl[0]].1, &c[i].1).unwrap()) {
            Some(cl) => cl.push(i),
            None => classes.push(vec![i]),
        }
    }
    // transitivity: every member of a class is isomorphic to every other
    for cl in &classes {
        for &a in cl {
            for &b in cl {
                assert!(isomorphic(&c[a].1, &c[b].1).unwrap());
            }
        }
    }
    let same = |a: &str, b: &str| {
        let ia = c.iter().position(|(n, _)| *n == a).unwrap();
        let ib = c.iter().position(|(n, _)| *n == b).unwrap();
        classes.iter().any(|cl| cl.contains(&ia) && cl.contains(&ib))
    };
    assert!(same("psl2(4)", "alternating(5)"));
    assert!(same("psl2(5)", "alternating(5)"));
    assert!(same("pgl2(5)", "symmetric(5)"));
    assert!(same("extraspecial(2,1,plus)", "dihedral(8)"));
    assert!(same("extraspecial(2,1,minus)", "quaternion(8)"));
    assert!(same("central(dihedral(8),quaternion(8))", "extraspecial(2,2,minus)"));
    assert!(!same("extraspecial(2,2,plus)", "extraspecial(2,2,minus)"));
}

#[test]
fn extraspecial_structure() {
    for (p, n) in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)] {
        for v in [Variant::Plus, Variant::Minus] {
            let g = extraspecial(p, n, v).unwrap();
            assert_eq!(g.order() as u64, p.pow(2 * n + 1));
            assert_eq!(g.centre().order() as u64, p);
            assert_eq!(g.derived_subgroup(), g.centre());
            let fam = CentraliserFamily::new(&g);
            assert!(fam.all().iter().all(|c| (g.order() / c.subgroup.order()) as u64 == p));
        }
    }
}

#[test]
fn linear_groups() {
    for q in [4u64, 5, 7, 8, 9] {
        let s = psl2(q).unwrap();
        assert_eq!(s.order() as u64, psl2_order(q));
        assert_eq!(pgl2(q).unwrap().order() as u64, pgl2_order(q));
        assert_eq!(s.normal_subgroups().unwrap().len(), 2, "psl2({q}) simple");
    }
}

#[test]
fn central_product_orders() {
    let pairs = [("dihedral(8)", "quaternion(8)"), ("quaternion(8)", "quaternion(8)"), ("extraspecial(3,1,plus)", "extraspecial(3,1,minus)")];
    for (a, b) in pairs {
        let (g, h) = (construct_from_spec(a).unwrap(), construct_from_spec(b).unwrap());
        let ident = identify_centres(&g, &h).unwrap();
        let c = central_product(&g, &h, &ident).unwrap();
        assert_eq!(c.order(), g.order() * h.order() / ident.len());
        assert_eq!(c.centre().order(), ident.len());
    }
}

fn perm_strategy(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|im| Permutation::from_images(im).unwrap())
}

fn small_group(i: usize) -> FiniteGroup {
    let specs = [
        "cyclic(2)", "cyclic(3)", "cyclic(4)", "symmetric(3)", "dihedral(8)", "quaternion(8)",
        "alternating(4)", "dihedral(10)", "extraspecial(3,1,plus)", "affine(5,4)",
    ];
    construct_from_spec(specs[i % specs.len()]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_permutation_groups(gens in prop::collection::vec(perm_strategy(6), 1..=3)) {
        let g = FiniteGroup::from_permutations(6, &gens).unwrap();
        prop_assert!(check_group(&g).is_ok(), "{:?}", check_group(&g));
        prop_assert!(check_theorem(&g).is_ok(), "{:?}", check_theorem(&g));
    }

    #[test]
    fn random_direct_products(a in 0usize..10, b in 0usize..10) {
        let g = direct_product(&small_group(a), &small_group(b)).unwrap();
        prop_assert!(check_group(&g).is_ok(), "{:?}", check_group(&g));
        prop_assert!(check_theorem(&g).is_ok(), "{:?}", check_theorem(&g));
    }

    #[test]
    fn centraliser_conjugation(gens in prop::collection::vec(perm_strategy(5), 1..=2), xi in 0usize..120, gi in 0usize..120) {
        let g = FiniteGroup::from_permutations(5, &gens).unwrap();
        let x = (xi % g.order()) as cagroups::ElemId;
        let h = (gi % g.order()) as cagroups::ElemId;
        prop_assert_eq!(g.centraliser(g.conj(h, x)), g.centraliser(x).conjugate(&g, h));
    }

    #[test]
    fn classify_is_deterministic(a in 0usize..10) {
        let g = small_group(a);
        let r1 = classify(&g, Flavour::Camin).unwrap();
        let r2 = classify(&g, Flavour::Camin).unwrap();
        prop_assert_eq!(r1.to_text(&g), r2.to_text(&g));
    }
}
