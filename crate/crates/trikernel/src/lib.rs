//! Exact-arithmetic triangular kernels for polynomial families.
//!
//! A family `f_n(x) = sum_b lambda1(n, b) x^(n - mb)` with triangular
//! support of order `m` is stored as a [`TriangularKernel`]. This crate
//! builds such kernels from lambda-recursive data, inverts them against
//! the monomial basis by three independent algorithms, and computes
//! change-of-basis tables between families — all over exact rationals,
//! so every identity checks to equality.
//!
//! Module map:
//! - [`scalar`]: exact rational coefficients;
//! - [`expr`]: the closed-form expression grammar for `p_n` and `h_(n,k)`;
//! - [`poly`]: dense polynomials used to realize and verify families;
//! - [`kernel`]: triangular kernels, lambda-recursive construction,
//!   boundary factorization, residue-class views;
//! - [`specfile`]: the JSON family spec formats;
//! - [`inversion`]: the inverse kernel by orthogonality, determinants
//!   (lower Hessenberg expansion matrices), and the row recurrence;
//! - [`change`]: connection coefficients, cross-order tables, and
//!   polynomial re-expansion (Clenshaw preprocessing);
//! - [`catalog`]: the built-in classical families.

pub mod catalog;
pub mod change;
pub mod error;
pub mod expr;
pub mod inversion;
pub mod kernel;
pub mod poly;
pub mod scalar;
pub mod specfile;

#[cfg(test)]
pub(crate) mod testutil;

pub use catalog::CatalogEntry;
pub use change::{ChangeTable, CrossOrderTable, Direction};
pub use error::{Error, Result};
pub use expr::Expr;
pub use inversion::ExpansionMatrix;
pub use kernel::{ClassKernel, LambdaRecursiveSpec, TriangularKernel};
pub use poly::Polynomial;
pub use scalar::Scalar;
pub use specfile::SpecFile;
