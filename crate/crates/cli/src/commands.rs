use std::error::Error;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use cagroups::catalog::{
    format_catalog, parse_group_file, search as run_search, search_lines, write_group_file, GroupRecord,
    PredicateExpression, SearchOptions,
};
use cagroups::centralisers::*;
use cagroups::classify::{verify_theorem_with, ClassifyOptions};
use cagroups::corpus::{corpus as builtin_corpus, corpus_records};
use cagroups::partition::{beta_from_family, Flavour};
use cagroups::{ElemId, FiniteGroup, GroupError, Subgroup};

use crate::source::GroupSource;
use crate::{Caps, Format};

type CmdResult = Result<u8, Box<dyn Error>>;

const AGREE: u8 = 0;
const DISAGREE: u8 = 2;

/// Ordered key/value lines, printed as `key=value` or as an aligned table.
#[derive(Default)]
struct Report(Vec<(String, String)>);

impl Report {
    fn put(&mut self, k: impl Into<String>, v: impl ToString) {
        self.0.push((k.into(), v.to_string()));
    }

    fn extend_text(&mut self, text: &str) {
        for line in text.lines() {
            if let Some((k, v)) = line.split_once('=') {
                self.put(k, v);
            }
        }
    }

    fn emit(&self, out: &mut impl Write, format: Format) -> std::io::Result<()> {
        match format {
            Format::Machine => {
                for (k, v) in &self.0 {
                    writeln!(out, "{k}={v}")?;
                }
            }
            Format::Text => {
                let w = self.0.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                for (k, v) in &self.0 {
                    writeln!(out, "{k:<w$}  {v}")?;
                }
            }
        }
        Ok(())
    }
}

fn labels(g: &FiniteGroup, xs: &[ElemId]) -> String {
    let v: Vec<String> = xs.iter().map(|&x| g.label(x)).collect();
    v.join(" ")
}

fn check_quotient(g: &FiniteGroup, caps: Caps) -> Result<(), GroupError> {
    let qo = g.order() / g.centre().order();
    if qo > caps.max_quotient_order {
        return Err(GroupError::CapExceeded {
            what: "central quotient",
            size: qo,
            cap: caps.max_quotient_order,
        });
    }
    Ok(())
}

pub fn construct(
    out: &mut impl Write,
    source: &GroupSource,
    path: Option<PathBuf>,
    name: Option<String>,
    caps: Caps,
) -> CmdResult {
    let (spec, g) = source.resolve(caps)?;
    let record = GroupRecord::from_group(name.unwrap_or(spec), &g);
    match path {
        Some(p) => {
            write_group_file(&p, std::slice::from_ref(&record))?;
            writeln!(out, "wrote {} (order {}) to {}", record.name, g.order(), p.display())?;
        }
        None => write!(out, "{}", format_catalog(std::slice::from_ref(&record)))?,
    }
    Ok(0)
}

fn verdict_lines(r: &mut Report, g: &FiniteGroup, fam: &CentraliserFamily) {
    let v = ClassVerdicts::from_family(g, fam);
    r.put("ca", v.ca);
    r.put("f", v.f);
    r.put("camin", v.camin);
    r.put("fmin", v.fmin);
    r.put("dgroup", v.dgroup);
}

pub fn info(out: &mut impl Write, source: &GroupSource, format: Format, caps: Caps) -> CmdResult {
    let (name, g) = source.resolve(caps)?;
    let fam = CentraliserFamily::new(&g);
    let mut r = Report::default();
    r.put("name", &name);
    r.put("order", g.order());
    r.put("backend", format!("{:?}", g.backend()).to_lowercase());
    r.put("centre_order", g.centre().order());
    r.put("derived_order", g.derived_subgroup().order());
    r.put("classes", g.conjugacy_classes().len());
    r.put("exponent", g.exponent());
    r.put("abelian", g.is_abelian());
    r.put("nilpotent", g.is_nilpotent());
    r.put("solvable", g.is_solvable());
    r.put("metabelian", g.is_metabelian());
    let series: Vec<String> = g.upper_central_series().iter().map(|s| s.order().to_string()).collect();
    r.put("upper_central_series", series.join(","));
    r.put("centralisers", fam.all().len());
    r.put("minimal_centralisers", fam.minimal().len());
    r.put("maximal_centralisers", fam.maximal().len());
    verdict_lines(&mut r, &g, &fam);
    r.emit(out, format)?;
    Ok(0)
}

pub fn classify(
    out: &mut impl Write,
    source: &GroupSource,
    flavour: Flavour,
    format: Format,
    recurse_with_classifier: bool,
    caps: Caps,
) -> CmdResult {
    let (name, g) = source.resolve(caps)?;
    check_quotient(&g, caps)?;
    let opts = ClassifyOptions {
        max_quotient_order: caps.max_quotient_order,
        recurse_with_classifier,
        ..ClassifyOptions::new(flavour)
    };
    let v = verify_theorem_with(&g, &opts)?;
    let fam = CentraliserFamily::new(&g);
    let mut r = Report::default();
    r.put("name", &name);
    verdict_lines(&mut r, &g, &fam);
    r.extend_text(&v.report.to_text(&g));
    r.put("predicate", v.predicate);
    if v.abelian {
        r.put("note", "abelian group: predicate holds vacuously");
    }
    r.put("verdict", if v.agrees() { "agree" } else { "disagree" });
    r.emit(out, format)?;
    Ok(if v.agrees() { AGREE } else { DISAGREE })
}

pub fn partition(out: &mut impl Write, source: &GroupSource, flavour: Flavour, format: Format, caps: Caps) -> CmdResult {
    let (name, g) = source.resolve(caps)?;
    check_quotient(&g, caps)?;
    let mut r = Report::default();
    r.put("name", &name);
    r.put("flavour", flavour);
    if g.is_abelian() {
        r.put("status", "abelian");
        r.put("note", "G/Z(G) is trivial; there is nothing to partition");
        r.emit(out, format)?;
        return Ok(0);
    }
    let fam = CentraliserFamily::new(&g);
    match beta_from_family(&g, &fam, flavour) {
        Ok(b) => {
            let report = b.verify();
            r.put("status", "ok");
            let hist: Vec<String> = b.order_histogram().iter().map(|(o, n)| format!("{o}:{n}")).collect();
            r.put("histogram", hist.join(","));
            r.put("max_multiplicity", b.provenance.iter().map(Vec::len).max().unwrap_or(0));
            r.extend_text(&report.to_text());
            r.emit(out, format)?;
            Ok(if report.is_partition() { AGREE } else { DISAGREE })
        }
        Err(GroupError::NotCAmin {
            first,
            second,
            intersection,
        })
        | Err(GroupError::NotFmin {
            first,
            second,
            intersection,
        }) => {
            r.put("status", if flavour == Flavour::Camin { "not_camin" } else { "not_fmin" });
            r.put("counterexample_first", g.label(first));
            r.put("counterexample_second", g.label(second));
            r.put("intersection_order", intersection.len());
            r.put("centre_order", g.centre().order());
            r.put("intersection", labels(&g, &intersection));
            r.emit(out, format)?;
            Ok(DISAGREE)
        }
        Err(e) => Err(e.into()),
    }
}

struct Lemma {
    key: &'static str,
    agree: bool,
    detail: String,
}

fn prime(n: usize) -> bool {
    n > 1 && (2..n).take_while(|k| k * k <= n).all(|k| !n.is_multiple_of(k))
}

fn lemmas(g: &FiniteGroup, caps: Caps) -> Result<Vec<Lemma>, Box<dyn Error>> {
    let fam = CentraliserFamily::new(g);
    let v = ClassVerdicts::from_family(g, &fam);
    let mut out = Vec::new();
    let ca_int = is_ca_by_intersection(g);
    out.push(Lemma {
        key: "ca_iff_tic",
        agree: v.ca == ca_int,
        detail: format!("ca={} intersections_central={}", v.ca, ca_int),
    });
    let f_int = is_f_by_central_intersection(g);
    out.push(Lemma {
        key: "f_iff_central_tic",
        agree: v.f == f_int,
        detail: format!("f={} centre_intersections_central={}", v.f, f_int),
    });
    out.push(Lemma {
        key: "ca_iff_f_and_camin",
        agree: v.ca == (v.f && v.camin),
        detail: format!("ca={} f={} camin={}", v.ca, v.f, v.camin),
    });
    let min_abelian = fam.minimal_subgroups().all(|c| c.abelian);
    out.push(Lemma {
        key: "camin_minimal_abelian",
        agree: !v.camin || min_abelian,
        detail: format!("camin={} minimal_abelian={}", v.camin, min_abelian),
    });
    for (key, flavour, holds) in [
        ("camin_partition", Flavour::Camin, v.camin),
        ("fmin_partition", Flavour::Fmin, v.fmin),
    ] {
        let (agree, detail) = if !holds || g.is_abelian() {
            (true, format!("{flavour}={holds} (vacuous)"))
        } else {
            check_quotient(g, caps)?;
            let rep = beta_from_family(g, &fam, flavour)?.verify();
            let ok = rep.is_partition() && (flavour == Flavour::Fmin || rep.all_abelian);
            (ok, format!("{flavour}=true components={} partition={}", rep.component_count, rep.is_partition()))
        };
        out.push(Lemma { key, agree, detail });
    }
    let d = g.derived_subgroup().order();
    out.push(Lemma {
        key: "prime_derived_gives_f",
        agree: !prime(d) || v.f,
        detail: format!("derived_order={d} fires={} f={}", prime(d), v.f),
    });
    let series = g.upper_central_series();
    let z = g.centre().order();
    let z2 = series.get(1).map_or(z, Subgroup::order);
    let metabelian = g.is_metabelian();
    out.push(Lemma {
        key: "ca_and_z2_gives_metabelian",
        agree: !(v.ca && z2 > z) || metabelian,
        detail: format!("ca={} z2_order={z2} centre_order={z} metabelian={metabelian}", v.ca),
    });
    let solvable = g.is_solvable();
    out.push(Lemma {
        key: "nonsolvable_f_is_ca",
        agree: solvable || !v.f || v.ca,
        detail: format!("solvable={solvable} f={} ca={}", v.f, v.ca),
    });
    out.push(Lemma {
        key: "nonsolvable_fmin_is_camin",
        agree: solvable || !v.fmin || v.camin,
        detail: format!("solvable={solvable} fmin={} camin={}", v.fmin, v.camin),
    });
    Ok(out)
}

pub fn verify_lemmas(out: &mut impl Write, source: &GroupSource, format: Format, caps: Caps) -> CmdResult {
    let (name, g) = source.resolve(caps)?;
    let ls = lemmas(&g, caps)?;
    let mut r = Report::default();
    r.put("name", &name);
    for l in &ls {
        r.put(l.key, format!("{} ({})", if l.agree { "agree" } else { "disagree" }, l.detail));
    }
    let all = ls.iter().all(|l| l.agree);
    r.put("verdict", if all { "agree" } else { "disagree" });
    r.emit(out, format)?;
    Ok(if all { AGREE } else { DISAGREE })
}

fn parse_orders(s: &str) -> Result<RangeInclusive<usize>, String> {
    let bad = || format!("bad --order {s:?}: expected N or A..B");
    match s.split_once("..") {
        Some((a, b)) => {
            let a = a.trim().parse().map_err(|_| bad())?;
            let b = b.trim().parse().map_err(|_| bad())?;
            Ok(a..=b)
        }
        None => {
            let n = s.trim().parse().map_err(|_| bad())?;
            Ok(n..=n)
        }
    }
}

pub fn search(out: &mut impl Write, catalog: &Path, expr: &str, order: Option<&str>, all: bool, caps: Caps) -> CmdResult {
    let expr: PredicateExpression = expr.parse()?;
    let orders = order.map(parse_orders).transpose()?;
    let records = if catalog.as_os_str() == "builtin-corpus" && !catalog.exists() {
        corpus_records()
    } else {
        parse_group_file(catalog)?
    };
    let outcome = run_search(
        &records,
        &expr,
        &SearchOptions {
            orders,
            max_order: caps.max_order,
        },
    );
    for (i, name, e) in &outcome.errors {
        eprintln!("record {i} ({name}): {e}");
    }
    write!(out, "{}", search_lines(&outcome, all))?;
    Ok(0)
}

pub fn corpus(out: &mut impl Write, list: bool, emit: Option<PathBuf>) -> CmdResult {
    if let Some(path) = emit {
        let records = corpus_records();
        write_group_file(&path, &records)?;
        writeln!(out, "wrote {} groups to {}", records.len(), path.display())?;
    }
    if list {
        for (name, g) in builtin_corpus() {
            writeln!(out, "{name}\t{}", g.order())?;
        }
    }
    Ok(0)
}
