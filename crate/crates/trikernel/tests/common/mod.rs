//! Shared helpers and independent oracles for the integration suites.
//!
//! The oracles here (triangular solve over polynomials, cofactor
//! determinant) deliberately avoid every kernel-inversion code path
//! they are used to check.

use std::path::PathBuf;

use rand::rngs::StdRng;
use rand::Rng;

use trikernel::kernel::w_m;
use trikernel::specfile::{load_spec_file, SpecFile};
use trikernel::{Polynomial, Scalar, TriangularKernel};

pub fn s(text: &str) -> Scalar {
    text.parse().unwrap()
}

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

pub fn load_paper_example() -> TriangularKernel {
    let src = std::fs::read_to_string(fixture_path("paper-example.json")).unwrap();
    match load_spec_file(&src).unwrap() {
        SpecFile::Table { kernel, .. } => kernel,
        other => panic!("fixture must be an explicit table, got {other:?}"),
    }
}

/// Expand `target` in the basis of degree-exact family polynomials by
/// leading-term elimination: a plain triangular solve, independent of
/// the kernel algorithms. Returns coefficients indexed by family degree.
pub fn solve_in_basis(target: &Polynomial, family: &[Polynomial]) -> Vec<Scalar> {
    let mut coeffs = vec![Scalar::zero(); family.len()];
    let mut rest = target.clone();
    for r in (0..family.len()).rev() {
        let c = rest.coeff(r);
        if c.is_zero() {
            continue;
        }
        let lead = family[r].leading().expect("family member must be nonzero");
        let factor = &c / lead;
        rest = rest.sub(&family[r].scale(&factor));
        coeffs[r] = factor;
    }
    assert!(rest.is_zero(), "target not in the span of the family");
    coeffs
}

/// Naive cofactor expansion along the first row.
pub fn cofactor_det(rows: &[Vec<Scalar>]) -> Scalar {
    let n = rows.len();
    if n == 0 {
        return Scalar::one();
    }
    if n == 1 {
        return rows[0][0].clone();
    }
    let mut acc = Scalar::zero();
    for j in 0..n {
        if rows[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Scalar>> = rows[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = &rows[0][j] * cofactor_det(&minor);
        acc = if j % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

/// Random admissible kernel with entries in the worked example's range:
/// boundary coefficients in +-{1..7}, interior entries in -7..=7.
pub fn random_admissible_kernel(rng: &mut StdRng, m: i64, n_max: i64) -> TriangularKernel {
    let rows = (0..=n_max)
        .map(|n| {
            (0..=w_m(m, n))
                .map(|k| {
                    if k == 0 {
                        let v = rng.gen_range(1i64..=7);
                        Scalar::from(if rng.gen_bool(0.5) { v } else { -v })
                    } else {
                        Scalar::from(rng.gen_range(-7i64..=7))
                    }
                })
                .collect()
        })
        .collect();
    TriangularKernel::from_rows(m, rows).unwrap()
}

/// Random rational polynomial of degree at most `max_degree`.
pub fn random_polynomial(rng: &mut StdRng, max_degree: usize) -> Polynomial {
    let degree = rng.gen_range(0..=max_degree);
    let coeffs = (0..=degree)
        .map(|_| Scalar::ratio(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=5)))
        .collect();
    Polynomial::from_coeffs(coeffs)
}
