use std::fmt::Write as _;
use std::ops::RangeInclusive;

use rayon::prelude::*;

use crate::error::GroupError;
use crate::group::DEFAULT_ENUMERATION_CAP;

use super::expr::{Atom, AtomValues, PredicateExpression};
use super::format::GroupRecord;

#[derive(Debug, Clone)]
pub struct SearchOptions {
    pub orders: Option<RangeInclusive<usize>>,
    /// Closure cap for permutation records.
    pub max_order: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            orders: None,
            max_order: DEFAULT_ENUMERATION_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchRow {
    pub index: usize,
    pub name: String,
    pub order: usize,
    pub atoms: AtomValues,
    pub matched: bool,
    pub centre_order: usize,
    pub exponent: u64,
    /// `(class size, number of classes)`, ascending by size.
    pub class_sizes: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Default)]
pub struct SearchOutcome {
    /// Every evaluated record that passed the order filter, in input order.
    pub rows: Vec<SearchRow>,
    pub errors: Vec<(usize, String, GroupError)>,
}

impl SearchOutcome {
    pub fn matches(&self) -> impl Iterator<Item = &SearchRow> {
        self.rows.iter().filter(|r| r.matched)
    }

    pub fn match_count(&self) -> usize {
        self.matches().count()
    }
}

enum Evaluated {
    Skipped,
    Row(SearchRow),
    Failed(usize, String, GroupError),
}

/// Evaluates `expr` on every record, in parallel. Failures (such as a
/// permutation record over the cap) are collected per record.
pub fn search(records: &[GroupRecord], expr: &PredicateExpression, opts: &SearchOptions) -> SearchOutcome {
    let evaluated: Vec<Evaluated> = records
        .par_iter()
        .enumerate()
        .map(|(index, r)| {
            let g = match r.group_with_cap(opts.max_order) {
                Ok(g) => g,
                Err(e) => return Evaluated::Failed(index, r.name.clone(), e),
            };
            if opts.orders.as_ref().is_some_and(|o| !o.contains(&g.order())) {
                return Evaluated::Skipped;
            }
            let atoms = AtomValues::of(g);
            let mut class_sizes: Vec<(usize, usize)> = Vec::new();
            let mut sizes = g.conjugacy_classes().sizes();
            sizes.sort_unstable();
            for s in sizes {
                match class_sizes.last_mut() {
                    Some((k, n)) if *k == s => *n += 1,
                    _ => class_sizes.push((s, 1)),
                }
            }
            Evaluated::Row(SearchRow {
                index,
                name: r.name.clone(),
                order: g.order(),
                matched: expr.eval(&atoms),
                atoms,
                centre_order: g.centre().order(),
                exponent: g.exponent(),
                class_sizes,
            })
        })
        .collect();
    let mut out = SearchOutcome::default();
    for e in evaluated {
        match e {
            Evaluated::Skipped => {}
            Evaluated::Row(r) => out.rows.push(r),
            Evaluated::Failed(i, n, e) => out.errors.push((i, n, e)),
        }
    }
    out
}

/// Tab-separated report: a header comment, one line per matching row (or
/// per row with `all`), and a final `count` line.
pub fn search_lines(outcome: &SearchOutcome, all: bool) -> String {
    let mut out = String::from("# name\torder");
    for a in Atom::ALL {
        write!(out, "\t{a}").unwrap();
    }
    out.push_str("\tmatched\tcentre_order\texponent\tclass_sizes\n");
    for r in outcome.rows.iter().filter(|r| all || r.matched) {
        write!(out, "{}\t{}", r.name, r.order).unwrap();
        for a in Atom::ALL {
            write!(out, "\t{}", u8::from(r.atoms.get(a))).unwrap();
        }
        let sizes: Vec<String> = r.class_sizes.iter().map(|(s, n)| format!("{s}^{n}")).collect();
        writeln!(
            out,
            "\t{}\t{}\t{}\t{}",
            u8::from(r.matched),
            r.centre_order,
            r.exponent,
            sizes.join(",")
        )
        .unwrap();
    }
    writeln!(
        out,
        "count={} records={} errors={}",
        outcome.match_count(),
        outcome.rows.len(),
        outcome.errors.len()
    )
    .unwrap();
    out
}
