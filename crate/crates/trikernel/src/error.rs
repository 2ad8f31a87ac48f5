//! Crate-wide error type.
//!
//! One enum with a variant per failure mode; every public operation that
//! can fail returns `Result<T, Error>`.

use std::fmt;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Multiplicative inverse of zero requested. In a field every nonzero
    /// element is a unit, so this is the only non-invertibility case.
    ZeroNotInvertible,
    /// A scalar text form ("p/q") failed to parse.
    InvalidScalar { text: String },
    /// Malformed expression source.
    Parse { offset: usize, expected: String },
    /// Identifier other than `n` or `k` in an expression.
    UnknownVariable { name: String, offset: usize },
    /// A subexpression denominator evaluated to zero.
    DivisionByZero,
    /// Evaluating a spec's `p` or `h` divided by zero at a needed index.
    ExprUndefined { n: i64, k: i64 },
    /// A kernel row beyond `n_max` was requested.
    RowNotBuilt { n: i64, n_max: i64 },
    /// A spec's principal factor `p` mentions the variable `k`.
    PIsKFree,
    /// A spec's initial-value list does not have exactly `m` entries.
    BadInitialLength { m: i64, got: usize },
    /// An explicit-table row has the wrong number of entries for its index.
    BadTableRow { n: i64, expected: usize, got: usize },
    /// A spec file is structurally malformed (not valid JSON, missing
    /// fields, or mixing the two variants).
    SpecFormat { detail: String },
    /// A boundary coefficient lambda1(n, 0) is zero where a unit is required.
    NotAdmissible { n: i64 },
    /// Matrix dimension `k` outside the range permitted at row `n`.
    BadDimension { n: i64, k: i64 },
    /// An operation restricted to k-free auxiliary factors was given a
    /// spec whose `h` mentions `k`.
    HDependsOnK,
    /// The principal factor evaluated to zero at an index where it must
    /// be a unit.
    PrincipalFactorZero { n: i64 },
    /// Two kernels that must share a decay parameter do not.
    OrderMismatch { m1: i64, m2: i64 },
    /// An operation needing a lambda-recursive spec was given an
    /// explicit-table family.
    NotLambdaRecursive,
    /// A polynomial's degree exceeds the built kernel rows.
    DegreeExceedsBuild { degree: i64, n_max: i64 },
    /// Family name not in the catalog.
    UnknownFamily {
        name: String,
        known: Vec<&'static str>,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroNotInvertible => write!(f, "zero is not invertible"),
            Error::InvalidScalar { text } => {
                write!(
                    f,
                    "invalid rational literal {text:?} (expected \"p\" or \"p/q\")"
                )
            }
            Error::Parse { offset, expected } => {
                write!(f, "parse error at byte {offset}: expected {expected}")
            }
            Error::UnknownVariable { name, offset } => {
                write!(
                    f,
                    "unknown variable {name:?} at byte {offset} (only n and k are allowed)"
                )
            }
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::ExprUndefined { n, k } => {
                write!(
                    f,
                    "expression undefined at (n = {n}, k = {k}): division by zero"
                )
            }
            Error::RowNotBuilt { n, n_max } => {
                write!(f, "row n = {n} not built (kernel holds rows 0..={n_max})")
            }
            Error::PIsKFree => write!(f, "principal factor p must not mention k"),
            Error::BadInitialLength { m, got } => {
                write!(
                    f,
                    "expected {m} initial values for order m = {m}, got {got}"
                )
            }
            Error::BadTableRow { n, expected, got } => {
                write!(
                    f,
                    "table row n = {n} must have {expected} entries, got {got}"
                )
            }
            Error::SpecFormat { detail } => write!(f, "bad spec file: {detail}"),
            Error::NotAdmissible { n } => {
                write!(f, "family is not admissible: lambda1(n, 0) = 0 at n = {n}")
            }
            Error::BadDimension { n, k } => {
                write!(f, "no expansion matrix of dimension k = {k} at n = {n}")
            }
            Error::HDependsOnK => {
                write!(
                    f,
                    "auxiliary factor h depends on k; recurrence method requires h = h(n)"
                )
            }
            Error::PrincipalFactorZero { n } => {
                write!(f, "principal factor p is zero at n = {n}")
            }
            Error::OrderMismatch { m1, m2 } => {
                write!(f, "decay parameters differ: m = {m1} vs m = {m2}")
            }
            Error::NotLambdaRecursive => {
                write!(
                    f,
                    "explicit-table family has no principal/auxiliary factors"
                )
            }
            Error::DegreeExceedsBuild { degree, n_max } => {
                write!(
                    f,
                    "polynomial degree {degree} exceeds built rows 0..={n_max}"
                )
            }
            Error::UnknownFamily { name, known } => {
                write!(
                    f,
                    "unknown family {name:?}; valid names: {}",
                    known.join(", ")
                )
            }
        }
    }
}

impl std::error::Error for Error {}
