//! Constructor expressions such as `psl2(7)` or
//! `direct(cyclic(3),dihedral(8))`, and the built-in test corpus named by them.
//!
//! Families: `cyclic(n)`, `dihedral(order)`, `quaternion(order)`,
//! `symmetric(n)`, `alternating(n)`, `extraspecial(p,n,plus|minus)`,
//! `gl2(q)`, `sl2(q)`, `psl2(q)`, `pgl2(q)`, `affine(q,d)`, `direct(A,B)` and
//! `central(A,B)` (identifying cyclic centres of equal order).

use crate::catalog::GroupRecord;
use crate::constructors::*;
use crate::error::{GroupError, Result};
use crate::group::FiniteGroup;

pub const CORPUS: &[&str] = &[
    "cyclic(1)",
    "cyclic(12)",
    "direct(cyclic(2),cyclic(2))",
    "symmetric(3)",
    "symmetric(4)",
    "symmetric(5)",
    "alternating(4)",
    "alternating(5)",
    "dihedral(8)",
    "dihedral(10)",
    "dihedral(12)",
    "quaternion(8)",
    "quaternion(16)",
    "affine(5,4)",
    "affine(7,3)",
    "affine(8,7)",
    "affine(9,8)",
    "gl2(3)",
    "sl2(3)",
    "sl2(5)",
    "psl2(4)",
    "psl2(5)",
    "psl2(7)",
    "psl2(8)",
    "psl2(9)",
    "pgl2(5)",
    "pgl2(7)",
    "pgl2(9)",
    "extraspecial(2,1,plus)",
    "extraspecial(2,1,minus)",
    "extraspecial(2,2,plus)",
    "extraspecial(2,2,minus)",
    "extraspecial(2,3,plus)",
    "extraspecial(2,3,minus)",
    "extraspecial(3,1,plus)",
    "extraspecial(3,1,minus)",
    "extraspecial(3,2,plus)",
    "extraspecial(3,2,minus)",
    "direct(cyclic(3),dihedral(8))",
    "direct(cyclic(2),symmetric(4))",
    "direct(cyclic(3),quaternion(8))",
    "central(dihedral(8),quaternion(8))",
    "direct(cyclic(2),extraspecial(3,1,plus))",
    "direct(symmetric(3),cyclic(3))",
    "direct(symmetric(3),symmetric(3))",
    "direct(cyclic(2),sl2(5))",
];

#[derive(Debug)]
enum Term {
    Num(u64),
    Word(String),
    Call(String, Vec<Term>),
}

fn invalid(msg: impl Into<String>) -> GroupError {
    GroupError::InvalidParameter(msg.into())
}

fn parse_term(s: &str) -> Result<(Term, &str)> {
    let s = s.trim_start();
    let end = s
        .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
        .unwrap_or(s.len());
    if end == 0 {
        return Err(invalid(format!("expected a name or number at {s:?}")));
    }
    let (head, rest) = s.split_at(end);
    let rest = rest.trim_start();
    if let Some(mut rest) = rest.strip_prefix('(') {
        let mut args = Vec::new();
        loop {
            let (t, r) = parse_term(rest)?;
            args.push(t);
            let r = r.trim_start();
            if let Some(r) = r.strip_prefix(',') {
                rest = r;
            } else if let Some(r) = r.strip_prefix(')') {
                return Ok((Term::Call(head.to_ascii_lowercase(), args), r));
            } else {
                return Err(invalid(format!("expected `,` or `)` at {r:?}")));
            }
        }
    }
    match head.parse() {
        Ok(n) => Ok((Term::Num(n), rest)),
        Err(_) => Ok((Term::Word(head.to_ascii_lowercase()), rest)),
    }
}

fn num(t: &Term) -> Result<u64> {
    match t {
        Term::Num(n) => Ok(*n),
        other => Err(invalid(format!("expected a number, got {other:?}"))),
    }
}

fn usize_arg(t: &Term) -> Result<usize> {
    Ok(num(t)? as usize)
}

fn build(t: &Term) -> Result<FiniteGroup> {
    let Term::Call(name, args) = t else {
        return Err(invalid(format!("expected a constructor call, got {t:?}")));
    };
    let arity = |n: usize| {
        if args.len() == n {
            Ok(())
        } else {
            Err(invalid(format!("{name} takes {n} argument(s), got {}", args.len())))
        }
    };
    match name.as_str() {
        "cyclic" => arity(1).and_then(|_| cyclic(usize_arg(&args[0])?)),
        "dihedral" => arity(1).and_then(|_| dihedral(usize_arg(&args[0])?)),
        "quaternion" => arity(1).and_then(|_| quaternion_generalised(usize_arg(&args[0])?)),
        "symmetric" => arity(1).and_then(|_| symmetric(usize_arg(&args[0])?)),
        "alternating" => arity(1).and_then(|_| alternating(usize_arg(&args[0])?)),
        "gl2" => arity(1).and_then(|_| gl2(num(&args[0])?)),
        "sl2" => arity(1).and_then(|_| sl2(num(&args[0])?)),
        "psl2" => arity(1).and_then(|_| psl2(num(&args[0])?)),
        "pgl2" => arity(1).and_then(|_| pgl2(num(&args[0])?)),
        "affine" => arity(2).and_then(|_| frobenius_affine(num(&args[0])?, num(&args[1])?)),
        "extraspecial" => {
            arity(3)?;
            let variant = match &args[2] {
                Term::Word(w) => w.parse()?,
                other => return Err(invalid(format!("expected plus or minus, got {other:?}"))),
            };
            extraspecial(num(&args[0])?, num(&args[1])? as u32, variant)
        }
        "direct" => {
            arity(2)?;
            direct_product(&build(&args[0])?, &build(&args[1])?)
        }
        "central" => {
            arity(2)?;
            let (g, h) = (build(&args[0])?, build(&args[1])?);
            let ident = identify_centres(&g, &h)?;
            central_product(&g, &h, &ident)
        }
        other => Err(invalid(format!("unknown family {other:?}"))),
    }
}

/// Builds the group named by a constructor expression.
pub fn construct_from_spec(spec: &str) -> Result<FiniteGroup> {
    let (t, rest) = parse_term(spec)?;
    if !rest.trim().is_empty() {
        return Err(invalid(format!("trailing input {rest:?}")));
    }
    build(&t)
}

/// The built-in corpus as `(name, group)` pairs, in [`CORPUS`] order.
pub fn corpus() -> Vec<(&'static str, FiniteGroup)> {
    CORPUS
        .iter()
        .map(|&s| (s, construct_from_spec(s).expect("corpus entries construct")))
        .collect()
}

pub fn corpus_records() -> Vec<GroupRecord> {
    corpus().into_iter().map(|(n, g)| GroupRecord::from_group(n, &g)).collect()
}
