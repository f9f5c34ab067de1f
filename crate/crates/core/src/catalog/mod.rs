//! Catalog files of groups, predicate expressions over the centraliser
//! classes, and searches over catalogs.
//!
//! A catalog is UTF-8 text. Each record starts with `group <name>`, followed
//! by either `perm <degree>` and one generator per line in 1-based disjoint
//! cycle notation, or `table <order>` and `order` rows of space-separated
//! 0-based element ids. Blank lines separate records and `#` starts a comment.

mod expr;
mod format;
mod search;

pub use expr::{Atom, AtomValues, ExprError, PredicateExpression};
pub use format::{
    format_catalog, parse_catalog, parse_group_file, write_group_file, CatalogError, GroupRecord, RecordSource,
    RecordSpec,
};
pub use search::{search, search_lines, SearchOptions, SearchOutcome, SearchRow};
