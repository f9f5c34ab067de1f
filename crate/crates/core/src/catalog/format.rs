use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::OnceLock;

use thiserror::Error;

use crate::error::GroupError;
use crate::group::{ElemId, FiniteGroup, Permutation, DEFAULT_ENUMERATION_CAP};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("record {name:?} (line {line}): {source}")]
    Invalid {
        name: String,
        line: usize,
        #[source]
        source: GroupError,
    },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecordSpec {
    Perm { degree: usize, generators: Vec<Permutation> },
    Table { order: usize, table: Vec<ElemId> },
}

/// Where a record came from: file (if any), position in it, and header line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecordSource {
    pub path: Option<PathBuf>,
    pub index: usize,
    pub line: usize,
}

#[derive(Debug, Clone)]
pub struct GroupRecord {
    pub name: String,
    pub source: RecordSource,
    pub spec: RecordSpec,
    group: OnceLock<FiniteGroup>,
}

impl GroupRecord {
    pub fn new(name: impl Into<String>, spec: RecordSpec) -> Self {
        Self {
            name: name.into(),
            source: RecordSource {
                path: None,
                index: 0,
                line: 0,
            },
            spec,
            group: OnceLock::new(),
        }
    }

    /// Table form for table-backed groups, permutation form otherwise.
    pub fn from_group(name: impl Into<String>, g: &FiniteGroup) -> Self {
        let spec = match (g.permutation_generators(), g.table()) {
            (Some((degree, gens)), _) => RecordSpec::Perm {
                degree,
                generators: gens.to_vec(),
            },
            (None, Some(table)) => RecordSpec::Table {
                order: g.order(),
                table,
            },
            (None, None) => unreachable!("every group has a table or permutations"),
        };
        let r = Self::new(name, spec);
        let _ = r.group.set(g.clone());
        r
    }

    /// Builds (once) and returns the group.
    pub fn group(&self) -> Result<&FiniteGroup, GroupError> {
        self.group_with_cap(DEFAULT_ENUMERATION_CAP)
    }

    pub fn group_with_cap(&self, cap: usize) -> Result<&FiniteGroup, GroupError> {
        if let Some(g) = self.group.get() {
            return Ok(g);
        }
        let g = match &self.spec {
            RecordSpec::Perm { degree, generators } => FiniteGroup::from_permutations_with_cap(*degree, generators, cap)?,
            RecordSpec::Table { order, table } => FiniteGroup::from_table(*order, table)?,
        };
        Ok(self.group.get_or_init(|| g))
    }
}

/// Parses catalog text. Table records are validated as groups here;
/// permutation records are closed lazily by [`GroupRecord::group`].
pub fn parse_catalog(text: &str, path: Option<&Path>) -> Result<Vec<GroupRecord>, CatalogError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .peekable();
    let syntax = |line: usize, message: String| CatalogError::Syntax { line, message };
    let mut out = Vec::new();
    while let Some((line, header)) = lines.next() {
        let name = header
            .strip_prefix("group")
            .filter(|rest| rest.starts_with(char::is_whitespace))
            .map(str::trim)
            .filter(|n| !n.is_empty())
            .ok_or_else(|| syntax(line, format!("expected `group <name>`, found {header:?}")))?
            .to_string();
        let (kline, kind) = lines
            .next()
            .ok_or_else(|| syntax(line, format!("record {name:?} has no body")))?;
        let mut words = kind.split_whitespace();
        let keyword = words.next().unwrap_or("");
        let size: usize = words
            .next()
            .and_then(|w| w.parse().ok())
            .filter(|_| words.next().is_none())
            .ok_or_else(|| syntax(kline, format!("expected `perm <degree>` or `table <order>`, found {kind:?}")))?;
        let spec = match keyword {
            "perm" => {
                let mut generators = Vec::new();
                while let Some(&(gl, text)) = lines.peek() {
                    if text.starts_with("group") {
                        break;
                    }
                    lines.next();
                    let p = Permutation::parse_cycles(size, text).map_err(|e| syntax(gl, e.to_string()))?;
                    generators.push(p);
                }
                RecordSpec::Perm { degree: size, generators }
            }
            "table" => {
                if size == 0 {
                    return Err(syntax(kline, "table order must be positive".into()));
                }
                let mut table = Vec::with_capacity(size * size);
                for row in 0..size {
                    let (rl, text) = lines
                        .next()
                        .ok_or_else(|| syntax(kline, format!("table ends after {row} of {size} rows")))?;
                    let before = table.len();
                    for w in text.split_whitespace() {
                        let v: u64 = w.parse().map_err(|_| syntax(rl, format!("not an element id: {w:?}")))?;
                        if v >= size as u64 {
                            return Err(CatalogError::Invalid {
                                name,
                                line,
                                source: crate::error::AxiomViolation::OutOfRange {
                                    row,
                                    col: table.len() - before,
                                    value: v,
                                    order: size,
                                }
                                .into(),
                            });
                        }
                        table.push(v as ElemId);
                    }
                    if table.len() - before != size {
                        return Err(syntax(rl, format!("row {row} has {} entries, expected {size}", table.len() - before)));
                    }
                }
                RecordSpec::Table { order: size, table }
            }
            other => return Err(syntax(kline, format!("unknown record kind {other:?}"))),
        };
        let record = GroupRecord {
            name,
            source: RecordSource {
                path: path.map(Path::to_path_buf),
                index: out.len(),
                line,
            },
            spec,
            group: OnceLock::new(),
        };
        if let RecordSpec::Table { .. } = record.spec {
            if let Err(source) = record.group() {
                return Err(CatalogError::Invalid {
                    name: record.name,
                    line,
                    source,
                });
            }
        }
        out.push(record);
    }
    Ok(out)
}

pub fn parse_group_file(path: impl AsRef<Path>) -> Result<Vec<GroupRecord>, CatalogError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| CatalogError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_catalog(&text, Some(path))
}

pub fn format_catalog(records: &[GroupRecord]) -> String {
    let mut out = String::from("# group catalog: `group <name>`, then `perm <degree>` with one generator per line,\n# or `table <order>` with one row of 0-based ids per line\n");
    for r in records {
        out.push('\n');
        writeln!(out, "group {}", r.name).unwrap();
        match &r.spec {
            RecordSpec::Perm { degree, generators } => {
                writeln!(out, "perm {degree}").unwrap();
                for p in generators {
                    writeln!(out, "{p}").unwrap();
                }
            }
            RecordSpec::Table { order, table } => {
                writeln!(out, "table {order}").unwrap();
                for row in table.chunks(*order) {
                    let cells: Vec<String> = row.iter().map(ElemId::to_string).collect();
                    writeln!(out, "{}", cells.join(" ")).unwrap();
                }
            }
        }
    }
    out
}

pub fn write_group_file(path: impl AsRef<Path>, records: &[GroupRecord]) -> Result<(), CatalogError> {
    let path = path.as_ref();
    fs::write(path, format_catalog(records)).map_err(|source| CatalogError::Io {
        path: path.to_path_buf(),
        source,
    })
}
