//! Acceptance criteria over the built-in corpus. Prints one line per
//! criterion and exits nonzero if any criterion fails.
//!
//! Criterion 13 reads the order-64 catalog from `$CAGROUPS_ORDER64` or
//! `data/order64.grp` at the workspace root, and is skipped when neither exists.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use cagroups::catalog::{parse_group_file, search, PredicateExpression, SearchOptions};
use cagroups::centralisers::*;
use cagroups::classify::{classify, verify_theorem};
use cagroups::constructors::{extraspecial, pgl2, psl2, Variant};
use cagroups::corpus::corpus;
use cagroups::partition::{beta_camin, beta_fmin, Flavour};
use cagroups::{FiniteGroup, Subgroup};

enum Outcome {
    Pass(String),
    Fail(String),
    Skip(String),
}

type Corpus = Vec<(&'static str, FiniteGroup)>;

fn check(failures: &mut Vec<String>, ok: bool, what: impl FnOnce() -> String) {
    if !ok {
        failures.push(what());
    }
}

fn finish(failures: Vec<String>, summary: String, elapsed: Duration, limit: Option<Duration>) -> Outcome {
    let mut failures = failures;
    if let Some(limit) = limit {
        if elapsed > limit {
            failures.push(format!("took {elapsed:.1?}, limit {limit:?}"));
        }
    }
    if failures.is_empty() {
        Outcome::Pass(summary)
    } else {
        Outcome::Fail(failures.join("; "))
    }
}

fn get<'a>(c: &'a Corpus, name: &str) -> &'a FiniteGroup {
    &c.iter().find(|(n, _)| *n == name).unwrap_or_else(|| panic!("{name} not in corpus")).1
}

fn c1_lemma_equivalences(c: &Corpus) -> Outcome {
    let t = Instant::now();
    let mut f = Vec::new();
    for (name, g) in c {
        check(&mut f, is_ca(g) == is_ca_by_intersection(g), || format!("{name}: ca vs intersection"));
        check(&mut f, is_f(g) == is_f_by_central_intersection(g), || format!("{name}: f vs central intersection"));
    }
    finish(f, format!("{} groups", c.len()), t.elapsed(), Some(Duration::from_secs(60)))
}

fn c2_ca_is_f_and_camin(c: &Corpus) -> Outcome {
    let t = Instant::now();
    let mut f = Vec::new();
    for (name, g) in c {
        let v = ClassVerdicts::of(g);
        check(&mut f, v.ca == (v.f && v.camin), || format!("{name}: ca={} f={} camin={}", v.ca, v.f, v.camin));
    }
    finish(f, format!("{} groups", c.len()), t.elapsed(), None)
}

fn c3_inclusions(c: &Corpus) -> Outcome {
    let t = Instant::now();
    let mut f = Vec::new();
    for (name, g) in c {
        let v = ClassVerdicts::of(g);
        let chain = (!v.ca || v.camin) && (!v.camin || v.fmin) && (!v.ca || v.f) && (!v.f || v.fmin);
        check(&mut f, chain, || format!("{name}: {v:?}"));
    }
    let sl25 = ClassVerdicts::of(get(c, "sl2(5)"));
    check(&mut f, sl25.camin && !sl25.ca, || {
        let g = get(c, "sl2(5)");
        let fam = CentraliserFamily::new(g);
        let mut orders: Vec<usize> = fam.all().iter().map(|m| m.subgroup.order()).collect();
        orders.sort_unstable();
        orders.dedup();
        let alt: Vec<&str> = ["psl2(7)", "pgl2(5)"]
            .into_iter()
            .filter(|n| {
                let v = ClassVerdicts::of(get(c, n));
                v.camin && !v.ca
            })
            .collect();
        format!(
            "sl2(5) has camin={} ca={}: its non-central centralisers (orders {orders:?}) are all abelian, \
             so it cannot witness camin and not ca; camin-and-not-ca witnesses found instead: {alt:?}",
            sl25.camin, sl25.ca
        )
    });
    let e32 = ClassVerdicts::of(get(c, "extraspecial(2,2,plus)"));
    check(&mut f, e32.f && !e32.ca, || "extraspecial 32 not f-and-not-ca".into());
    let e243 = ClassVerdicts::of(get(c, "extraspecial(3,2,plus)"));
    check(&mut f, e243.fmin && !e243.camin, || "extraspecial 243 not fmin-and-not-camin".into());
    finish(f, "chains hold, three strict witnesses".into(), t.elapsed(), None)
}

fn c4_extraspecial() -> Outcome {
    let t = Instant::now();
    let mut f = Vec::new();
    for (p, n) in [(2, 2), (2, 3), (3, 2)] {
        for v in [Variant::Plus, Variant::Minus] {
            let g = extraspecial(p, n, v).unwrap();
            check(&mut f, is_f(&g) && !is_ca(&g), || format!("extraspecial({p},{n},{v})"));
        }
    }
    for v in [Variant::Plus, Variant::Minus] {
        let g = extraspecial(2, 1, v).unwrap();
        check(&mut f, is_ca(&g), || format!("extraspecial(2,1,{v}) not ca"));
    }
    finish(f, "6 groups f and not ca, order 8 both ca".into(), t.elapsed(), Some(Duration::from_secs(120)))
}

fn c5_prime_derived(c: &Corpus) -> Outcome {
    let t = Instant::now();
    let mut f = Vec::new();
    let mut fired = 0;
    for (name, g) in c {
        let d = g.derived_subgroup().order() as u64;
        if d > 1 && (2..d).all(|k| !d.is_multiple_of(k)) {
            fired += 1;
            check(&mut f, is_f(g), || format!("{name}: |G'|={d} but not f"));
        }
    }
    finish(f, format!("{fired} groups with |G'| prime"), t.elapsed(), None)
}

fn c6_partitions(c: &Corpus) -> Outcome {
    let t = Instant::now();
    let mut f = Vec::new();
    let (mut nc, mut nf) = (0, 0);
    for (name, g) in c {
        if g.is_abelian() {
            continue;
        }
        let fam = CentraliserFamily::new(g);
        if is_camin_in(&fam) {
            nc += 1;
            check(&mut f, fam.minimal_subgroups().all(|m| m.abelian), || format!("{name}: non-abelian minimal centraliser"));
            match beta_camin(g) {
                Ok(b) => {
                    let r = b.verify();
                    check(&mut f, r.is_partition() && r.all_abelian, || format!("{name}: camin partition\n{}", r.to_text()));
                }
                Err(e) => f.push(format!("{name}: {e}")),
            }
        }
        if is_fmin_in(g, &fam) {
            nf += 1;
            match beta_fmin(g) {
                Ok(b) => {
                    let r = b.verify();
                    check(&mut f, r.is_partition(), || format!("{name}: fmin partition\n{}", r.to_text()));
                }
                Err(e) => f.push(format!("{name}: {e}")),
            }
        }
    }
    finish(f, format!("{nc} camin and {nf} fmin partitions verified"), t.elapsed(), None)
}

fn c7_theorem(c: &Corpus) -> Outcome {
    let t = Instant::now();
    let mut f = Vec::new();
    for (name, g) in c {
        for fl in [Flavour::Camin, Flavour::Fmin] {
            match verify_theorem(g, fl) {
                Ok(v) => check(&mut f, v.agrees(), || {
                    format!("{name} ({fl}): predicate={} cases={}", v.predicate, v.report.cases_text())
                }),
                Err(e) => f.push(format!("{name} ({fl}): {e}")),
            }
        }
    }
    let cases = |name: &str, fl: Flavour| classify(get(c, name), fl).unwrap().matched_cases;
    check(&mut f, cases("sl2(5)", Flavour::Camin) == BTreeSet::from([6]), || "sl2(5) cases".into());
    for name in ["symmetric(3)", "alternating(4)", "affine(5,4)"] {
        check(&mut f, cases(name, Flavour::Camin).contains(&1), || format!("{name} lacks case 1"));
    }
    check(&mut f, cases("dihedral(8)", Flavour::Camin).is_superset(&BTreeSet::from([4, 5])), || "dihedral(8) cases".into());
    check(&mut f, cases("gl2(3)", Flavour::Camin).contains(&3), || "gl2(3) lacks case 3".into());
    for name in ["symmetric(4)", "extraspecial(3,2,plus)"] {
        let v = verify_theorem(get(c, name), Flavour::Camin).unwrap();
        check(&mut f, !v.predicate && v.report.matched_cases.is_empty(), || format!("{name} should be empty/false"));
    }
    finish(f, format!("{} groups x 2 flavours agree", c.len()), t.elapsed(), Some(Duration::from_secs(300)))
}

fn c8_census(c: &Corpus) -> Outcome {
    let t = Instant::now();
    let mut f = Vec::new();
    let b = beta_camin(get(c, "sl2(5)")).unwrap();
    check(&mut f, b.components.len() == 31, || format!("{} components", b.components.len()));
    check(&mut f, b.order_histogram() == vec![(2, 15), (3, 10), (5, 6)], || format!("histogram {:?}", b.order_histogram()));
    let covered: usize = b.components.iter().map(|s| s.order() - 1).sum();
    check(&mut f, covered == 59, || format!("covers {covered}"));
    finish(f, "31 components {2:15, 3:10, 5:6} covering 59".into(), t.elapsed(), None)
}

fn is_cyclic(g: &FiniteGroup, s: &Subgroup) -> bool {
    s.members().iter().any(|&x| g.element_order(x) as usize == s.order())
}

fn is_elementary_abelian_of_order(g: &FiniteGroup, s: &Subgroup, q: usize) -> bool {
    let p = (2..=q).find(|k| q.is_multiple_of(*k)).unwrap();
    s.order() == q && g.is_abelian_subgroup(s) && s.members()[1..].iter().all(|&x| g.element_order(x) as usize == p)
}

fn no_two_abelian_inside(g: &FiniteGroup) -> bool {
    let fam = CentraliserFamily::new(g);
    let abelian: Vec<&Subgroup> = fam.all().iter().filter(|c| c.abelian).map(|c| &c.subgroup).collect();
    fam.all()
        .iter()
        .all(|c| abelian.iter().filter(|a| a.is_subset_of(&c.subgroup)).count() <= 1)
}

fn c9_linear_centralisers() -> Outcome {
    let t = Instant::now();
    let mut f = Vec::new();
    for q in [5usize, 7, 9] {
        let g = pgl2(q as u64).unwrap();
        let allowed = [q, q - 1, q + 1, 2 * (q - 1), 2 * (q + 1)];
        for x in g.elements().skip(1) {
            let c = g.centraliser(x);
            check(&mut f, allowed.contains(&c.order()), || format!("pgl2({q}): centraliser order {}", c.order()));
            if g.is_abelian_subgroup(&c) {
                let ok = is_cyclic(&g, &c) || is_elementary_abelian_of_order(&g, &c, q);
                check(&mut f, ok, || format!("pgl2({q}): abelian centraliser of order {} has wrong shape", c.order()));
            }
        }
    }
    for q in [4u64, 5, 7, 8, 9] {
        for (tag, g) in [("psl2", psl2(q).unwrap()), ("pgl2", pgl2(q).unwrap())] {
            check(&mut f, no_two_abelian_inside(&g), || format!("{tag}({q}) has a centraliser with two abelian centralisers"));
        }
    }
    f.dedup();
    finish(f, "pgl2 shapes for q=5,7,9; containment for q=4..9".into(), t.elapsed(), Some(Duration::from_secs(180)))
}

fn c10_nonsolvable(c: &Corpus) -> Outcome {
    let t = Instant::now();
    let mut f = Vec::new();
    let mut n = 0;
    for (name, g) in c.iter().filter(|(_, g)| !g.is_solvable()) {
        n += 1;
        let v = ClassVerdicts::of(g);
        check(&mut f, !v.f || v.ca, || format!("{name}: f but not ca"));
        check(&mut f, !v.fmin || v.camin, || format!("{name}: fmin but not camin"));
    }
    finish(f, format!("{n} non-solvable groups"), t.elapsed(), None)
}

fn c11_schmidt_cases(c: &Corpus) -> Outcome {
    let t = Instant::now();
    let mut f = Vec::new();
    let mut n = 0;
    for (name, g) in c {
        let r = classify(g, Flavour::Camin).unwrap();
        if r.matched_cases.iter().any(|k| [1, 3, 4].contains(k)) {
            n += 1;
            check(&mut f, is_ca(g), || format!("{name}: cases {} but not ca", r.cases_text()));
        }
    }
    finish(f, format!("{n} groups matching cases 1, 3 or 4"), t.elapsed(), None)
}

fn c12_metabelian(c: &Corpus) -> Outcome {
    let t = Instant::now();
    let mut f = Vec::new();
    let mut n = 0;
    for (name, g) in c {
        let series = g.upper_central_series();
        let z2 = series.get(1).map_or(series[0].order(), Subgroup::order);
        if is_ca(g) && z2 > g.centre().order() {
            n += 1;
            check(&mut f, is_metabelian(g), || format!("{name}: not metabelian"));
        }
    }
    finish(f, format!("{n} ca groups with Z2 > Z"), t.elapsed(), None)
}

fn c13_order64() -> Outcome {
    let path = std::env::var_os("CAGROUPS_ORDER64")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/order64.grp")));
    if !path.exists() {
        return Outcome::Skip(format!("catalog {} not present", path.display()));
    }
    let t = Instant::now();
    let records = match parse_group_file(&path) {
        Ok(r) => r,
        Err(e) => return Outcome::Fail(e.to_string()),
    };
    let expr: PredicateExpression = "f and not ca".parse().unwrap();
    let out = search(&records, &expr, &SearchOptions::default());
    let mut f = Vec::new();
    check(&mut f, out.errors.is_empty(), || format!("{} record errors", out.errors.len()));
    check(&mut f, out.match_count() == 5, || format!("{} matches", out.match_count()));
    finish(
        f,
        format!("{} of {} records match", out.match_count(), records.len()),
        t.elapsed(),
        Some(Duration::from_secs(600)),
    )
}

fn main() -> ExitCode {
    let t = Instant::now();
    let c = corpus();
    println!("corpus: {} groups built in {:.1?}", c.len(), t.elapsed());

    let criteria: Vec<(u32, &str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        (1, "lemma equivalences", Box::new(|| c1_lemma_equivalences(&c))),
        (2, "ca = f and camin", Box::new(|| c2_ca_is_f_and_camin(&c))),
        (3, "inclusion diagram", Box::new(|| c3_inclusions(&c))),
        (4, "extraspecial f not ca", Box::new(c4_extraspecial)),
        (5, "prime derived subgroup gives f", Box::new(|| c5_prime_derived(&c))),
        (6, "minimal centralisers and partitions", Box::new(|| c6_partitions(&c))),
        (7, "main theorem two-way check", Box::new(|| c7_theorem(&c))),
        (8, "sl2(5) partition census", Box::new(|| c8_census(&c))),
        (9, "linear group centraliser shapes", Box::new(c9_linear_centralisers)),
        (10, "non-solvable corollaries", Box::new(|| c10_nonsolvable(&c))),
        (11, "cases 1, 3, 4 are ca", Box::new(|| c11_schmidt_cases(&c))),
        (12, "metabelian corollary", Box::new(|| c12_metabelian(&c))),
        (13, "order-64 f-not-ca census", Box::new(c13_order64)),
    ];
    let mut failed = 0;
    for (n, label, run) in &criteria {
        let t = Instant::now();
        let outcome = run();
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Outcome::Pass(s) => println!("criterion {n:>2} PASS [{secs:.2}s] {label}: {s}"),
            Outcome::Skip(s) => println!("criterion {n:>2} SKIP [{secs:.2}s] {label}: {s}"),
            Outcome::Fail(s) => {
                failed += 1;
                println!("criterion {n:>2} FAIL [{secs:.2}s] {label}: {s}");
            }
        }
    }
    println!("acceptance: {} criteria, {failed} failed", criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
