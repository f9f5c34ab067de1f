use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::centralisers::{ClassVerdicts, CentraliserFamily};
use crate::group::FiniteGroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    Ca,
    F,
    Camin,
    Fmin,
    Dgroup,
    Abelian,
    Nilpotent,
    Solvable,
    Metabelian,
}

impl Atom {
    pub const ALL: [Atom; 9] = [
        Atom::Ca,
        Atom::F,
        Atom::Camin,
        Atom::Fmin,
        Atom::Dgroup,
        Atom::Abelian,
        Atom::Nilpotent,
        Atom::Solvable,
        Atom::Metabelian,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Atom::Ca => "ca",
            Atom::F => "f",
            Atom::Camin => "camin",
            Atom::Fmin => "fmin",
            Atom::Dgroup => "dgroup",
            Atom::Abelian => "abelian",
            Atom::Nilpotent => "nilpotent",
            Atom::Solvable => "solvable",
            Atom::Metabelian => "metabelian",
        }
    }

    fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|a| a.name() == s)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Values of every atom on one group, indexed like [`Atom::ALL`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AtomValues(pub [bool; 9]);

impl AtomValues {
    pub fn of(g: &FiniteGroup) -> Self {
        let fam = CentraliserFamily::new(g);
        let v = ClassVerdicts::from_family(g, &fam);
        Self([
            v.ca,
            v.f,
            v.camin,
            v.fmin,
            v.dgroup,
            g.is_abelian(),
            g.is_nilpotent(),
            g.is_solvable(),
            g.is_metabelian(),
        ])
    }

    pub fn get(&self, a: Atom) -> bool {
        self.0[a as usize]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PredicateExpression {
    Atom(Atom),
    Not(Box<PredicateExpression>),
    And(Box<PredicateExpression>, Box<PredicateExpression>),
    Or(Box<PredicateExpression>, Box<PredicateExpression>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("expression error at token {position}: {message}")]
pub struct ExprError {
    pub position: usize,
    pub message: String,
}

impl PredicateExpression {
    pub fn eval(&self, v: &AtomValues) -> bool {
        match self {
            Self::Atom(a) => v.get(*a),
            Self::Not(e) => !e.eval(v),
            Self::And(a, b) => a.eval(v) && b.eval(v),
            Self::Or(a, b) => a.eval(v) || b.eval(v),
        }
    }

    pub fn atoms(&self) -> Vec<Atom> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out.sort();
        out.dedup();
        out
    }

    fn collect_atoms(&self, out: &mut Vec<Atom>) {
        match self {
            Self::Atom(a) => out.push(*a),
            Self::Not(e) => e.collect_atoms(out),
            Self::And(a, b) | Self::Or(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }
}

impl fmt::Display for PredicateExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Atom(a) => write!(f, "{a}"),
            Self::Not(e) => write!(f, "not {e}"),
            Self::And(a, b) => write!(f, "({a} and {b})"),
            Self::Or(a, b) => write!(f, "({a} or {b})"),
        }
    }
}

fn tokenize(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut word = String::new();
    for c in s.chars() {
        if c == '(' || c == ')' || c.is_whitespace() {
            if !word.is_empty() {
                out.push(std::mem::take(&mut word));
            }
            if !c.is_whitespace() {
                out.push(c.to_string());
            }
        } else {
            word.push(c.to_ascii_lowercase());
        }
    }
    if !word.is_empty() {
        out.push(word);
    }
    out
}

struct Parser {
    tokens: Vec<String>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&str> {
        self.tokens.get(self.pos).map(String::as_str)
    }

    fn err(&self, message: impl Into<String>) -> ExprError {
        ExprError {
            position: self.pos,
            message: message.into(),
        }
    }

    fn or(&mut self) -> Result<PredicateExpression, ExprError> {
        let mut lhs = self.and()?;
        while self.peek() == Some("or") {
            self.pos += 1;
            lhs = PredicateExpression::Or(Box::new(lhs), Box::new(self.and()?));
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<PredicateExpression, ExprError> {
        let mut lhs = self.not()?;
        while self.peek() == Some("and") {
            self.pos += 1;
            lhs = PredicateExpression::And(Box::new(lhs), Box::new(self.not()?));
        }
        Ok(lhs)
    }

    fn not(&mut self) -> Result<PredicateExpression, ExprError> {
        if self.peek() == Some("not") {
            self.pos += 1;
            return Ok(PredicateExpression::Not(Box::new(self.not()?)));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<PredicateExpression, ExprError> {
        match self.peek() {
            Some("(") => {
                self.pos += 1;
                let e = self.or()?;
                if self.peek() != Some(")") {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(w) => match Atom::from_name(w) {
                Some(a) => {
                    self.pos += 1;
                    Ok(PredicateExpression::Atom(a))
                }
                None => Err(self.err(format!("unknown atom {w:?}"))),
            },
            None => Err(self.err("unexpected end of expression")),
        }
    }
}

impl FromStr for PredicateExpression {
    type Err = ExprError;

    /// Precedence, tightest first: `not`, `and`, `or`.
    fn from_str(s: &str) -> Result<Self, ExprError> {
        let mut p = Parser {
            tokens: tokenize(s),
            pos: 0,
        };
        let e = p.or()?;
        if p.pos != p.tokens.len() {
            return Err(p.err(format!("unexpected token {:?}", p.tokens[p.pos])));
        }
        Ok(e)
    }
}
