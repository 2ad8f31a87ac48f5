//! Connection coefficients between two triangular families.
//!
//! With `f_n = sum_b lambda1(n,b) x^(n-mb)` and `g_n` likewise (same
//! order), the change table `z` satisfies
//! `f_n = sum_k g_{n-mk} z(n, k)`; it comes either from the convolution
//! of `lambda1` with the inverse kernel `mu3` of `g`, or from a local
//! recurrence when both families are lambda-recursive with k-free
//! auxiliary factors. Families with distinct orders connect through the
//! cross-order coefficients `Z(n; r)` supported on a gcd congruence
//! class. Re-expanding an arbitrary polynomial in a family basis
//! ([`expand_in_basis`]) is the coefficient preprocessing step of
//! Clenshaw-type evaluation schemes.

use crate::error::{Error, Result};
use crate::kernel::{boundary_value, w_m, LambdaRecursiveSpec, TriangularKernel};
use crate::poly::Polynomial;
use crate::scalar::Scalar;

/// Orientation of a change table: which family is being expressed in
/// which basis. Builders tag their output `FToG` (first argument
/// expressed in the second's basis); [`ChangeTable::retag`] records the
/// caller's naming when arguments were swapped for the reverse table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    FToG,
    GToF,
}

/// Triangular table of connection coefficients, same shape discipline
/// as a kernel: row `n` holds `z(n, k)` for `0 <= k <= w_m(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChangeTable {
    m: i64,
    direction: Direction,
    rows: Vec<Vec<Scalar>>,
}

impl ChangeTable {
    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn retag(mut self, direction: Direction) -> Self {
        self.direction = direction;
        self
    }

    pub fn n_max(&self) -> i64 {
        self.rows.len() as i64 - 1
    }

    /// Zero-extended lookup, as for kernels.
    pub fn get(&self, n: i64, k: i64) -> Scalar {
        if n < 0 {
            return Scalar::zero();
        }
        assert!(
            n <= self.n_max(),
            "change row {n} not built (n_max = {})",
            self.n_max()
        );
        if k < 0 || k > w_m(self.m, n) {
            return Scalar::zero();
        }
        self.rows[n as usize][k as usize].clone()
    }

    pub fn row(&self, n: i64) -> Result<&[Scalar]> {
        if n < 0 || n > self.n_max() {
            return Err(Error::RowNotBuilt {
                n,
                n_max: self.n_max(),
            });
        }
        Ok(&self.rows[n as usize])
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }
}

/// `z(n, k) = sum_b lambda1(n, b) mu3(n - mb, k - b)`: the universal
/// convolution of the direct kernel of `f` with the inverse kernel of
/// `g`. Works for any pair of same-order kernels.
pub fn change_by_convolution(
    lambda1: &TriangularKernel,
    mu3: &TriangularKernel,
    n_max: i64,
) -> Result<ChangeTable> {
    if lambda1.m() != mu3.m() {
        return Err(Error::OrderMismatch {
            m1: lambda1.m(),
            m2: mu3.m(),
        });
    }
    let m = lambda1.m();
    let built = lambda1.n_max().min(mu3.n_max());
    if n_max < 0 || n_max > built {
        return Err(Error::RowNotBuilt {
            n: n_max,
            n_max: built,
        });
    }
    let mut rows = Vec::with_capacity(n_max as usize + 1);
    for n in 0..=n_max {
        let row = (0..=w_m(m, n))
            .map(|k| {
                let mut acc = Scalar::zero();
                for b in 0..=k {
                    acc = acc + lambda1.get(n, b) * mu3.get(n - m * b, k - b);
                }
                acc
            })
            .collect();
        rows.push(row);
    }
    Ok(ChangeTable {
        m,
        direction: Direction::FToG,
        rows,
    })
}

/// The symmetric change-of-basis recurrence for two lambda-recursive
/// families with k-free auxiliary factors:
/// `z(n, 0)` is the boundary ratio `lambda1(n,0) / mu1(n,0)` and, for
/// `1 <= k <= w_m(n)`,
/// `z(n,k) = p1_n A_mu(n,k) z(n-1,k) + p1_n (h2_s / p2_s) z(n-1,k-1) - h1_n z(n-m,k-1)`
/// with `t = n - km`, `s = n - (k-1)m` and the boundary factor
/// `A_mu = 1/p2_t` for `t >= m`, `mu1(t-1,0)/mu1(t,0)` for `1 <= t < m`,
/// `0` for `t = 0`.
///
/// The reverse table (`g` expressed in `f`) is the same call with the
/// specs swapped.
pub fn change_by_recurrence(
    spec_f: &LambdaRecursiveSpec,
    spec_g: &LambdaRecursiveSpec,
    n_max: i64,
) -> Result<ChangeTable> {
    assert!(n_max >= 0, "n_max must be nonnegative");
    if spec_f.m() != spec_g.m() {
        return Err(Error::OrderMismatch {
            m1: spec_f.m(),
            m2: spec_g.m(),
        });
    }
    if !spec_f.h_is_k_free() || !spec_g.h_is_k_free() {
        return Err(Error::HDependsOnK);
    }
    let m = spec_f.m();
    let mut bound_f = Vec::with_capacity(n_max as usize + 1);
    let mut bound_g = Vec::with_capacity(n_max as usize + 1);
    for n in 0..=n_max {
        for spec in [spec_f, spec_g] {
            if n >= m && spec.principal(n)?.is_zero() {
                return Err(Error::PrincipalFactorZero { n });
            }
        }
        let bf = boundary_value(spec_f, n)?;
        let bg = boundary_value(spec_g, n)?;
        if bf.is_zero() || bg.is_zero() {
            return Err(Error::NotAdmissible { n });
        }
        bound_f.push(bf);
        bound_g.push(bg);
    }
    let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(n_max as usize + 1);
    let prev = |rows: &[Vec<Scalar>], n: i64, k: i64| -> Scalar {
        if n < 0 || k < 0 || k > w_m(m, n) {
            Scalar::zero()
        } else {
            rows[n as usize][k as usize].clone()
        }
    };
    for n in 0..=n_max {
        let mut row = Vec::with_capacity(w_m(m, n) as usize + 1);
        row.push(&bound_f[n as usize] / &bound_g[n as usize]);
        for k in 1..=w_m(m, n) {
            let t = n - k * m;
            let s = t + m;
            let p1_n = spec_f.principal(n)?;
            let a_mu = if t >= m {
                spec_g.principal(t)?.inverse()?
            } else if t >= 1 {
                &bound_g[t as usize - 1] / &bound_g[t as usize]
            } else {
                Scalar::zero()
            };
            let ratio2 = spec_g.auxiliary(s, 0)? / spec_g.principal(s)?;
            let value = &p1_n * a_mu * prev(&rows, n - 1, k)
                + &p1_n * ratio2 * prev(&rows, n - 1, k - 1)
                - spec_f.auxiliary(n, 0)? * prev(&rows, n - m, k - 1);
            row.push(value);
        }
        rows.push(row);
    }
    Ok(ChangeTable {
        m,
        direction: Direction::FToG,
        rows,
    })
}

/// Cross-order coefficients `Z(n; r)` for `0 <= r <= n`, stored densely
/// including the zeros forced by the gcd congruence `r = n (mod gcd(m1, m2))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossOrderTable {
    n: i64,
    m1: i64,
    m2: i64,
    values: Vec<Scalar>,
}

impl CrossOrderTable {
    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn m1(&self) -> i64 {
        self.m1
    }

    pub fn m2(&self) -> i64 {
        self.m2
    }

    /// `Z(n; r)`; zero outside `0 <= r <= n`.
    pub fn get(&self, r: i64) -> Scalar {
        if r < 0 || r > self.n {
            return Scalar::zero();
        }
        self.values[r as usize].clone()
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }
}

/// Connection between families of distinct orders:
/// `Z(n; r) = sum_b lambda1(n, b) mu3(n - m1 b, (n - m1 b - r) / m2)`,
/// summing over `b` with `r <= n - m1 b` and `m2 | (n - m1 b - r)`.
/// The reconstruction `f_n = sum_r g_r Z(n; r)` holds exactly.
pub fn change_cross_order(
    lambda1: &TriangularKernel,
    mu3: &TriangularKernel,
    n: i64,
) -> Result<CrossOrderTable> {
    if n < 0 || n > lambda1.n_max() {
        return Err(Error::RowNotBuilt {
            n,
            n_max: lambda1.n_max(),
        });
    }
    if n > mu3.n_max() {
        return Err(Error::RowNotBuilt {
            n,
            n_max: mu3.n_max(),
        });
    }
    let m1 = lambda1.m();
    let m2 = mu3.m();
    let values = (0..=n)
        .map(|r| {
            let mut acc = Scalar::zero();
            for b in 0..=w_m(m1, n) {
                let shifted = n - m1 * b;
                if shifted < r || (shifted - r) % m2 != 0 {
                    continue;
                }
                acc = acc + lambda1.get(n, b) * mu3.get(shifted, (shifted - r) / m2);
            }
            acc
        })
        .collect();
    Ok(CrossOrderTable { n, m1, m2, values })
}

/// Clenshaw preprocessing: re-express `p(x) = sum_a c_a x^a` in the
/// family basis via the inverse kernel,
/// `C(r) = sum_t c_{r+mt} lambda3(r + mt, t)` for `0 <= r <= deg p`,
/// so that `p = sum_r C(r) f_r` exactly. The inverse kernel is taken
/// explicitly so any of the three inversion methods can feed it.
pub fn expand_in_basis(
    p: &Polynomial,
    direct: &TriangularKernel,
    inverse: &TriangularKernel,
) -> Result<Vec<Scalar>> {
    if direct.m() != inverse.m() {
        return Err(Error::OrderMismatch {
            m1: direct.m(),
            m2: inverse.m(),
        });
    }
    let m = direct.m();
    let degree = match p.degree() {
        None => return Ok(Vec::new()),
        Some(d) => d as i64,
    };
    let built = direct.n_max().min(inverse.n_max());
    if degree > built {
        return Err(Error::DegreeExceedsBuild {
            degree,
            n_max: built,
        });
    }
    let coeffs = (0..=degree)
        .map(|r| {
            let mut acc = Scalar::zero();
            for t in 0..=(degree - r) / m {
                acc = acc + p.coeff((r + m * t) as usize) * inverse.get(r + m * t, t);
            }
            acc
        })
        .collect();
    Ok(coeffs)
}

/// Assemble `sum_r coeffs[r] * f_r(x)` from a coefficient sequence
/// indexed by family degree.
pub fn reconstruct(direct: &TriangularKernel, coeffs: &[Scalar]) -> Result<Polynomial> {
    let mut sum = Polynomial::zero();
    for (r, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        sum = sum.add(&direct.family_polynomial(r as i64)?.scale(c));
    }
    Ok(sum)
}
