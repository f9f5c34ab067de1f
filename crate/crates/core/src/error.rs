use thiserror::Error;

use crate::group::ElemId;

/// The first group axiom a candidate multiplication table fails.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AxiomViolation {
    #[error("table has {found} entries, expected {expected}")]
    WrongSize { expected: usize, found: usize },
    #[error("cell ({row}, {col}) holds {value}, outside 0..{order}")]
    OutOfRange {
        row: usize,
        col: usize,
        value: u64,
        order: usize,
    },
    #[error("element 0 is not a two-sided identity at cell ({row}, {col})")]
    Identity { row: usize, col: usize },
    #[error("row {row} repeats element {value} (column {col})")]
    LatinRow { row: usize, col: usize, value: ElemId },
    #[error("column {col} repeats element {value} (row {row})")]
    LatinColumn { row: usize, col: usize, value: ElemId },
    #[error("element {element} has no two-sided inverse")]
    Inverse { element: ElemId },
    #[error("non-associative triple: ({a}*{b})*{c} != {a}*({b}*{c})")]
    Associativity { a: ElemId, b: ElemId, c: ElemId },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("not a group: {0}")]
    NotAGroup(#[from] AxiomViolation),
    #[error("{what}: size {size} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("group is not nilpotent")]
    NotNilpotent,
    #[error("designated subgroup is not central")]
    NotCentral,
    #[error("designated central subgroups are not isomorphic via the given map")]
    NotIsomorphicCentres,
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("{d} is not a divisor of {q} - 1 greater than 1")]
    BadDivisor { q: u64, d: u64 },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("element {element} out of range for group of order {order}")]
    ElementOutOfRange { element: ElemId, order: usize },
    #[error("not CA_min: minimal centralisers of {first} and {second} meet in {} elements", intersection.len())]
    NotCAmin {
        first: ElemId,
        second: ElemId,
        intersection: Vec<ElemId>,
    },
    #[error("not F_min: centres of the minimal centralisers of {first} and {second} meet in {} elements", intersection.len())]
    NotFmin {
        first: ElemId,
        second: ElemId,
        intersection: Vec<ElemId>,
    },
    #[error("search exhausted: {0}")]
    SearchExhausted(&'static str),
}

pub type Result<T, E = GroupError> = std::result::Result<T, E>;
