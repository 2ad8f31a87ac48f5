//! JSON family spec files.
//!
//! Two variants share one format:
//!
//! - lambda-recursive: `{"name": "chebyshev-t", "m": 2, "initial": ["1","1"], "p": "2", "h": "1"}`
//!   where `initial` entries are scalar text forms and `p`, `h` are
//!   expression source strings;
//! - explicit table: `{"m": 1, "table": [["7"], ["-6","6"], ...]}` giving
//!   the kernel rows directly (for families that are not lambda-recursive,
//!   such as the random worked example).

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::kernel::{LambdaRecursiveSpec, TriangularKernel};
use crate::scalar::Scalar;

#[derive(Debug)]
pub enum SpecFile {
    Recursive(LambdaRecursiveSpec),
    Table {
        name: Option<String>,
        kernel: TriangularKernel,
    },
}

impl SpecFile {
    pub fn name(&self) -> Option<&str> {
        match self {
            SpecFile::Recursive(spec) => spec.name(),
            SpecFile::Table { name, .. } => name.as_deref(),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpecFile {
    name: Option<String>,
    m: i64,
    initial: Option<Vec<String>>,
    p: Option<String>,
    h: Option<String>,
    table: Option<Vec<Vec<String>>>,
}

fn parse_raw(src: &str) -> Result<RawSpecFile> {
    serde_json::from_str(src).map_err(|e| Error::SpecFormat {
        detail: e.to_string(),
    })
}

fn parse_scalars(texts: &[String]) -> Result<Vec<Scalar>> {
    texts.iter().map(|t| t.parse()).collect()
}

/// Load either spec-file variant.
pub fn load_spec_file(src: &str) -> Result<SpecFile> {
    let raw = parse_raw(src)?;
    match (&raw.table, &raw.initial, &raw.p, &raw.h) {
        (Some(table), None, None, None) => {
            let rows = table
                .iter()
                .map(|row| parse_scalars(row))
                .collect::<Result<Vec<_>>>()?;
            let kernel = TriangularKernel::from_rows(raw.m, rows)?;
            Ok(SpecFile::Table {
                name: raw.name,
                kernel,
            })
        }
        (None, Some(initial), Some(p), Some(h)) => {
            let spec = LambdaRecursiveSpec::new(
                raw.name,
                raw.m,
                parse_scalars(initial)?,
                crate::expr::Expr::parse(p)?,
                crate::expr::Expr::parse(h)?,
            )?;
            Ok(SpecFile::Recursive(spec))
        }
        (Some(_), _, _, _) => Err(Error::SpecFormat {
            detail: "a table spec must not also define initial/p/h".into(),
        }),
        _ => Err(Error::SpecFormat {
            detail: "expected either \"table\" or all of \"initial\", \"p\", \"h\"".into(),
        }),
    }
}

/// Load the lambda-recursive variant; a table spec is rejected.
pub fn load_spec(src: &str) -> Result<LambdaRecursiveSpec> {
    match load_spec_file(src)? {
        SpecFile::Recursive(spec) => Ok(spec),
        SpecFile::Table { .. } => Err(Error::SpecFormat {
            detail: "expected a lambda-recursive spec, found an explicit table".into(),
        }),
    }
}
