//! Shared fixtures for unit tests.

use crate::kernel::TriangularKernel;
use crate::scalar::Scalar;

/// Rows of the m = 1 family with random coefficients from the worked
/// inversion example (leading coefficient first: `lambda(n, b)` is the
/// coefficient of `x^(n-b)`).
pub(crate) fn paper_example_rows() -> Vec<Vec<Scalar>> {
    [
        vec!["7"],
        vec!["-6", "6"],
        vec!["1", "5", "-5"],
        vec!["6", "-6", "2", "3"],
        vec!["-7", "-3", "6", "-4", "-4"],
        vec!["-2", "-3", "-7", "1", "1", "1"],
        vec!["1", "6", "2", "-6", "1", "5", "1"],
    ]
    .into_iter()
    .map(|row| row.into_iter().map(|t| t.parse().unwrap()).collect())
    .collect()
}

pub(crate) fn paper_example_kernel() -> TriangularKernel {
    TriangularKernel::from_rows(1, paper_example_rows()).unwrap()
}

/// The inverse-kernel row 6 reported by the worked example.
pub(crate) fn paper_example_lambda3_row6() -> Vec<Scalar> {
    ["1", "3", "-1", "4", "26", "25", "-40/7"]
        .into_iter()
        .map(|t| t.parse().unwrap())
        .collect()
}
