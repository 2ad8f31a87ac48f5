//! Built-in lambda-recursive families.
//!
//! Eight classical systems, each stored as the `(m, initial, p, h)`
//! data of its lambda recurrence
//! `lambda1(n,k) = p_n lambda1(n-1,k) - h_(n,k) lambda1(n-m,k-1)`.
//!
//! Sign convention: the recurrence subtracts the `h` term. For the
//! `fibonacci` and `lucas` entries, whose classical polynomial
//! recurrences add the second term (`V_n = x V_{n-1} + V_{n-2}`), the
//! rows therefore carry the coefficients of the plus-recurrence
//! counterpart (same initial rows `c_n x^n`) with alternating signs:
//! `lambda1(n, k) = (-1)^k * counterpart(n, k)`. For `lucas` the
//! counterpart is the classical Lucas family; for `fibonacci` it is
//! `x * F_n(x)` (initial data `c_0 = 0`, `c_1 = 1` realizes row 1 as
//! `x`, one degree above the classical `F_1 = 1`). The catalog stores
//! the recurrence data as given and does not re-sign or re-index.
//!
//! `fibonacci` has `c_0 = 0`, so its kernel is not admissible (row 0 has
//! a zero boundary coefficient); it supports direct expansion but every
//! inversion operation refuses it.

use crate::error::{Error, Result};
use crate::kernel::{build_direct_kernel, LambdaRecursiveSpec};

/// One family: the spec plus recomputed capability flags.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub spec: LambdaRecursiveSpec,
    /// Boundary coefficients are nonzero for every probed row.
    pub admissible: bool,
    /// `h` is k-free, so the row-recurrence methods apply.
    pub recurrence_methods_ok: bool,
}

/// `(name, m, initial, p, h)` rows, in stable CLI order.
const FAMILIES: &[(&str, i64, &[&str], &str, &str)] = &[
    ("laguerre", 1, &["1"], "-1/n", "(k-2*n)/n"),
    ("chebyshev-t", 2, &["1", "1"], "2", "1"),
    ("chebyshev-u", 2, &["1", "2"], "2", "1"),
    ("legendre", 2, &["1", "1"], "(2*n-1)/n", "(n-1)/n"),
    ("hermite-h", 2, &["1", "2"], "2", "2*n-2"),
    ("hermite-he", 2, &["1", "1"], "1", "n-1"),
    ("lucas", 2, &["2", "1"], "1", "1"),
    ("fibonacci", 2, &["0", "1"], "1", "1"),
];

/// Rows built when recomputing the admissibility flag.
const ADMISSIBILITY_PROBE_ROWS: i64 = 20;

pub fn names() -> Vec<&'static str> {
    FAMILIES.iter().map(|(name, ..)| *name).collect()
}

fn build_entry(row: &(&'static str, i64, &[&str], &str, &str)) -> CatalogEntry {
    let (name, m, initial, p, h) = row;
    let spec = LambdaRecursiveSpec::from_strings(Some(name), *m, initial, p, h)
        .expect("catalog entries are well-formed");
    // recomputed from the spec, not trusted as stored metadata
    let admissible = build_direct_kernel(&spec, ADMISSIBILITY_PROBE_ROWS)
        .expect("catalog families are defined on all probed rows")
        .is_admissible();
    let recurrence_methods_ok = spec.h_is_k_free();
    CatalogEntry {
        name,
        spec,
        admissible,
        recurrence_methods_ok,
    }
}

/// All entries in stable order.
pub fn list() -> Vec<CatalogEntry> {
    FAMILIES.iter().map(build_entry).collect()
}

pub fn get(name: &str) -> Result<CatalogEntry> {
    FAMILIES
        .iter()
        .find(|(candidate, ..)| *candidate == name)
        .map(build_entry)
        .ok_or_else(|| Error::UnknownFamily {
            name: name.to_owned(),
            known: names(),
        })
}
