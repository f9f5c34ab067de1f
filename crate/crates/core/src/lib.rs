//! Finite groups and the centraliser-intersection classes CA, F, CA_min,
//! F_min and D: literal predicates, the induced normal partition of the
//! central quotient, and a structural classifier for the CA_min/F_min
//! families.

pub mod catalog;
pub mod centralisers;
pub mod classify;
pub mod constructors;
pub mod corpus;
pub mod error;
pub mod field;
pub mod group;
pub mod partition;

pub use error::{AxiomViolation, GroupError, Result};
pub use group::{BackendKind, ElemId, FiniteGroup, Permutation, QuotientGroup, Subgroup};
