use std::error::Error;
use std::path::PathBuf;

use clap::{ArgGroup, Args};

use cagroups::catalog::{parse_group_file, GroupRecord};
use cagroups::corpus::construct_from_spec;
use cagroups::FiniteGroup;

use crate::Caps;

/// Where the group comes from: exactly one of `--family`, `--builtin`, `--file`.
#[derive(Args, Debug, Clone)]
#[command(group(ArgGroup::new("source").required(true).args(["family", "builtin", "file"])))]
pub struct GroupSource {
    /// Constructor family: cyclic, dihedral, quaternion, symmetric,
    /// alternating, extraspecial, gl2, sl2, psl2, pgl2, affine.
    #[arg(long)]
    pub family: Option<String>,
    /// Degree, order (dihedral, quaternion) or extraspecial rank.
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long)]
    pub p: Option<u64>,
    #[arg(long)]
    pub q: Option<u64>,
    /// Complement order of an affine group.
    #[arg(long)]
    pub d: Option<u64>,
    #[arg(long, default_value = "plus")]
    pub variant: String,
    /// Constructor expression, e.g. `direct(cyclic(3),dihedral(8))`.
    #[arg(long)]
    pub builtin: Option<String>,
    /// Catalog file.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Record name inside `--file`; optional when the file has one record.
    #[arg(long, requires = "file")]
    pub record: Option<String>,
}

fn need(v: Option<u64>, flag: &str, family: &str) -> Result<u64, String> {
    v.ok_or_else(|| format!("--family {family} needs --{flag}"))
}

impl GroupSource {
    /// The constructor expression named by `--family` and its parameters.
    fn family_spec(&self, family: &str) -> Result<String, String> {
        Ok(match family {
            "cyclic" | "dihedral" | "quaternion" | "symmetric" | "alternating" => {
                format!("{family}({})", need(self.n, "n", family)?)
            }
            "extraspecial" => format!(
                "extraspecial({},{},{})",
                need(self.p, "p", family)?,
                need(self.n, "n", family)?,
                self.variant
            ),
            "gl2" | "sl2" | "psl2" | "pgl2" => format!("{family}({})", need(self.q, "q", family)?),
            "affine" => format!("affine({},{})", need(self.q, "q", family)?, need(self.d, "d", family)?),
            other => return Err(format!("unknown family {other:?}")),
        })
    }

    /// Resolves to a name and a group.
    pub fn resolve(&self, caps: Caps) -> Result<(String, FiniteGroup), Box<dyn Error>> {
        let (name, g) = if let Some(family) = &self.family {
            let spec = self.family_spec(family)?;
            let g = construct_from_spec(&spec)?;
            (spec, g)
        } else if let Some(spec) = &self.builtin {
            (spec.clone(), construct_from_spec(spec)?)
        } else {
            let path = self.file.as_ref().ok_or("no group source given")?;
            let records = parse_group_file(path)?;
            let record: &GroupRecord = match &self.record {
                Some(name) => records
                    .iter()
                    .find(|r| &r.name == name)
                    .ok_or_else(|| format!("no record {name:?} in {}", path.display()))?,
                None if records.len() == 1 => &records[0],
                None => {
                    return Err(format!(
                        "{} holds {} records; choose one with --record",
                        path.display(),
                        records.len()
                    )
                    .into())
                }
            };
            (record.name.clone(), record.group_with_cap(caps.max_order)?.clone())
        };
        if g.order() > caps.max_order {
            return Err(format!("group order {} exceeds --max-order {}", g.order(), caps.max_order).into());
        }
        Ok((name, g))
    }
}
