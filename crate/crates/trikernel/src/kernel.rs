//! Triangular kernels of order `m` and their lambda-recursive construction.
//!
//! A kernel row `n` carries the coefficients of a family member
//! `f_n(x) = sum_b lambda1(n, b) x^(n - m*b)` on the triangular support
//! `0 <= b <= w_m(n)`, `w_m(n) = floor(n / m)`. Lookups outside the
//! support read as zero; every recurrence in the crate relies on that
//! silent zero-extension.

use crate::error::{Error, Result};
use crate::expr::{Expr, Var};
use crate::poly::Polynomial;
use crate::scalar::Scalar;

/// Support width `w_m(n) = floor(n / m)`.
pub fn w_m(m: i64, n: i64) -> i64 {
    debug_assert!(m >= 1 && n >= 0);
    n / m
}

/// A direct or inverse kernel: order `m` plus dense rows on the
/// triangular support. Row `n` holds exactly `w_m(n) + 1` entries.
/// Built kernels are immutable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangularKernel {
    m: i64,
    rows: Vec<Vec<Scalar>>,
}

impl TriangularKernel {
    /// Build from explicit rows, validating the shape of each.
    pub fn from_rows(m: i64, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        if m < 1 {
            return Err(Error::SpecFormat {
                detail: format!("order m must be >= 1, got {m}"),
            });
        }
        if rows.is_empty() {
            return Err(Error::SpecFormat {
                detail: "table must have at least one row".into(),
            });
        }
        for (n, row) in rows.iter().enumerate() {
            let expected = (w_m(m, n as i64) + 1) as usize;
            if row.len() != expected {
                return Err(Error::BadTableRow {
                    n: n as i64,
                    expected,
                    got: row.len(),
                });
            }
        }
        Ok(TriangularKernel { m, rows })
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    /// Largest built row index.
    pub fn n_max(&self) -> i64 {
        self.rows.len() as i64 - 1
    }

    /// Entry lookup with triangular zero-extension: zero for `n < 0`,
    /// `k < 0`, or `k > w_m(n)`. Panics if `n` exceeds the built rows;
    /// operations validate their row bounds before sweeping.
    pub fn get(&self, n: i64, k: i64) -> Scalar {
        if n < 0 {
            return Scalar::zero();
        }
        assert!(
            n <= self.n_max(),
            "kernel row {n} not built (n_max = {})",
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

    /// Realize row `n` as the polynomial `f_n(x) = sum_b lambda(n, b) x^(n - m*b)`.
    pub fn family_polynomial(&self, n: i64) -> Result<Polynomial> {
        let row = self.row(n)?;
        let mut coeffs = vec![Scalar::zero(); n as usize + 1];
        for (b, value) in row.iter().enumerate() {
            let power = n - self.m * b as i64;
            coeffs[power as usize] = value.clone();
        }
        Ok(Polynomial::from_coeffs(coeffs))
    }

    /// Smallest built `n` with `lambda(n, 0) = 0`, or `None` when every
    /// boundary coefficient is a unit.
    pub fn first_non_admissible(&self) -> Option<i64> {
        self.rows
            .iter()
            .position(|row| row[0].is_zero())
            .map(|n| n as i64)
    }

    pub fn is_admissible(&self) -> bool {
        self.first_non_admissible().is_none()
    }

    /// Residue-class view: `lambda^<r>(k, t) = lambda(m*k + r, k - t)`.
    pub fn class_view(&self, r: i64) -> ClassKernel {
        assert!(0 <= r && r < self.m, "residue {r} outside 0..{}", self.m);
        let mut rows = Vec::new();
        let mut k = 0;
        while self.m * k + r <= self.n_max() {
            let row = (0..=k).map(|t| self.get(self.m * k + r, k - t)).collect();
            rows.push(row);
            k += 1;
        }
        ClassKernel { m: self.m, r, rows }
    }
}

/// One residue class of a kernel of order `m`: the triangle
/// `lambda^<r>(k, t)` for `0 <= t <= k`, zero outside.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassKernel {
    m: i64,
    r: i64,
    rows: Vec<Vec<Scalar>>,
}

impl ClassKernel {
    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn residue(&self) -> i64 {
        self.r
    }

    /// Largest built class index, or -1 when the class has no rows.
    pub fn k_max(&self) -> i64 {
        self.rows.len() as i64 - 1
    }

    /// Zero outside `0 <= t <= k` and for unbuilt `k < 0`.
    pub fn get(&self, k: i64, t: i64) -> Scalar {
        if k < 0 || t < 0 || t > k {
            return Scalar::zero();
        }
        assert!(
            k <= self.k_max(),
            "class row {k} not built (k_max = {})",
            self.k_max()
        );
        self.rows[k as usize][t as usize].clone()
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }
}

/// A lambda-recursive family definition: order `m`, initial boundary
/// values `c_0..c_{m-1}`, principal factor `p` (an expression in `n`
/// only) and auxiliary factor `h` (an expression in `n` and `k`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaRecursiveSpec {
    name: Option<String>,
    m: i64,
    initial: Vec<Scalar>,
    p: Expr,
    h: Expr,
}

impl LambdaRecursiveSpec {
    pub fn new(
        name: Option<String>,
        m: i64,
        initial: Vec<Scalar>,
        p: Expr,
        h: Expr,
    ) -> Result<Self> {
        if m < 1 {
            return Err(Error::SpecFormat {
                detail: format!("order m must be >= 1, got {m}"),
            });
        }
        if initial.len() != m as usize {
            return Err(Error::BadInitialLength {
                m,
                got: initial.len(),
            });
        }
        if p.uses_var(Var::K) {
            return Err(Error::PIsKFree);
        }
        Ok(LambdaRecursiveSpec {
            name,
            m,
            initial,
            p,
            h,
        })
    }

    pub fn from_strings(
        name: Option<&str>,
        m: i64,
        initial: &[&str],
        p: &str,
        h: &str,
    ) -> Result<Self> {
        let initial = initial
            .iter()
            .map(|text| text.parse::<Scalar>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(
            name.map(str::to_owned),
            m,
            initial,
            Expr::parse(p)?,
            Expr::parse(h)?,
        )
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn initial(&self) -> &[Scalar] {
        &self.initial
    }

    pub fn p(&self) -> &Expr {
        &self.p
    }

    pub fn h(&self) -> &Expr {
        &self.h
    }

    pub fn h_is_k_free(&self) -> bool {
        !self.h.uses_var(Var::K)
    }

    /// `p_n`, with division-by-zero surfaced as `ExprUndefined`.
    pub fn principal(&self, n: i64) -> Result<Scalar> {
        self.p
            .eval(n, 0)
            .map_err(|_| Error::ExprUndefined { n, k: 0 })
    }

    /// `h_(n,k)`, with division-by-zero surfaced as `ExprUndefined`.
    pub fn auxiliary(&self, n: i64, k: i64) -> Result<Scalar> {
        self.h.eval(n, k).map_err(|_| Error::ExprUndefined { n, k })
    }
}

/// Build rows `0..=n_max` of the direct kernel:
/// row `n < m` is the single initial value `c_n`; row `n >= m` follows
/// `lambda(n, k) = p_n lambda(n-1, k) - h_(n,k) lambda(n-m, k-1)`,
/// with out-of-support references read as zero.
pub fn build_direct_kernel(spec: &LambdaRecursiveSpec, n_max: i64) -> Result<TriangularKernel> {
    assert!(n_max >= 0, "n_max must be nonnegative");
    let m = spec.m;
    let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(n_max as usize + 1);
    // zero-extended lookup into the rows built so far
    let get = |rows: &[Vec<Scalar>], n: i64, k: i64| -> Scalar {
        if n < 0 || k < 0 || k > w_m(m, n) {
            Scalar::zero()
        } else {
            rows[n as usize][k as usize].clone()
        }
    };
    for n in 0..=n_max {
        if n < m {
            rows.push(vec![spec.initial[n as usize].clone()]);
            continue;
        }
        let p_n = spec.principal(n)?;
        let mut row = Vec::with_capacity(w_m(m, n) as usize + 1);
        for k in 0..=w_m(m, n) {
            let h_nk = spec.auxiliary(n, k)?;
            let value = p_n.clone() * get(&rows, n - 1, k) - h_nk * get(&rows, n - m, k - 1);
            row.push(value);
        }
        rows.push(row);
    }
    Ok(TriangularKernel { m, rows })
}

/// Boundary coefficient `lambda(n, 0)` computed without building the
/// kernel: `c_n` for `n < m`, else `c_{m-1} * prod_{i=m}^{n} p_i`.
pub fn boundary_value(spec: &LambdaRecursiveSpec, n: i64) -> Result<Scalar> {
    assert!(n >= 0, "boundary_value requires n >= 0");
    if n < spec.m {
        return Ok(spec.initial[n as usize].clone());
    }
    let mut value = spec.initial[spec.m as usize - 1].clone();
    for i in spec.m..=n {
        value = value * spec.principal(i)?;
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    fn spec(m: i64, initial: &[&str], p: &str, h: &str) -> LambdaRecursiveSpec {
        LambdaRecursiveSpec::from_strings(None, m, initial, p, h).unwrap()
    }

    fn chebyshev_t() -> LambdaRecursiveSpec {
        spec(2, &["1", "1"], "2", "1")
    }

    fn poly(coeffs: &[&str]) -> Polynomial {
        Polynomial::from_coeffs(coeffs.iter().map(|c| s(c)).collect())
    }

    /// Independent oracle for m = 2 families: the polynomial three-term
    /// recurrence f_n = p_n * x * f_{n-1} - h_n * f_{n-2}, run entirely
    /// in polynomial arithmetic.
    fn three_term(
        n: i64,
        f0: Polynomial,
        f1: Polynomial,
        p: impl Fn(i64) -> Scalar,
        h: impl Fn(i64) -> Scalar,
    ) -> Polynomial {
        let mut prev2 = f0;
        let mut prev1 = f1;
        if n == 0 {
            return prev2;
        }
        for i in 2..=n {
            let next = prev1.shift_up(1).scale(&p(i)).sub(&prev2.scale(&h(i)));
            prev2 = prev1;
            prev1 = next;
        }
        prev1
    }

    fn chebyshev_t_poly(n: i64) -> Polynomial {
        three_term(n, poly(&["1"]), poly(&["0", "1"]), |_| s("2"), |_| s("1"))
    }

    use crate::testutil::paper_example_kernel;

    #[test]
    fn chebyshev_rows_match_three_term_oracle() {
        let kernel = build_direct_kernel(&chebyshev_t(), 10).unwrap();
        for n in 0..=10 {
            assert_eq!(
                kernel.family_polynomial(n).unwrap(),
                chebyshev_t_poly(n),
                "row {n}"
            );
        }
        // T_3 = 4x^3 - 3x
        assert_eq!(kernel.row(3).unwrap(), &[s("4"), s("-3")]);
    }

    #[test]
    fn row_zero_is_initial_data() {
        let kernel = build_direct_kernel(&spec(3, &["5/2", "0", "-1"], "n", "1"), 4).unwrap();
        assert_eq!(kernel.row(0).unwrap(), &[s("5/2")]);
        assert_eq!(kernel.row(1).unwrap(), &[s("0")]);
        assert_eq!(kernel.row(2).unwrap(), &[s("-1")]);
    }

    #[test]
    fn hermite_physicists_row_two() {
        let hermite = spec(2, &["1", "2"], "2", "2*n-2");
        let kernel = build_direct_kernel(&hermite, 2).unwrap();
        // H_2 = 4x^2 - 2
        assert_eq!(kernel.row(2).unwrap(), &[s("4"), s("-2")]);
        let oracle = three_term(
            6,
            poly(&["1"]),
            poly(&["0", "2"]),
            |_| s("2"),
            |i| Scalar::from(2 * i - 2),
        );
        assert_eq!(kernel_row_poly(&hermite, 6), oracle);
    }

    fn kernel_row_poly(spec: &LambdaRecursiveSpec, n: i64) -> Polynomial {
        build_direct_kernel(spec, n)
            .unwrap()
            .family_polynomial(n)
            .unwrap()
    }

    #[test]
    fn family_polynomial_examples() {
        let paper = paper_example_kernel();
        assert_eq!(
            paper.family_polynomial(6).unwrap(),
            poly(&["1", "5", "1", "-6", "2", "6", "1"])
        );
        assert_eq!(paper.family_polynomial(0).unwrap(), poly(&["7"]));
        let cheb = build_direct_kernel(&chebyshev_t(), 4).unwrap();
        // T_4 = 8x^4 - 8x^2 + 1
        assert_eq!(
            cheb.family_polynomial(4).unwrap(),
            poly(&["1", "0", "-8", "0", "8"])
        );
        assert!(matches!(
            cheb.family_polynomial(5),
            Err(Error::RowNotBuilt { n: 5, n_max: 4 })
        ));
    }

    #[test]
    fn support_lookups_return_zero() {
        let kernel = build_direct_kernel(&chebyshev_t(), 9).unwrap();
        for n in 0..=9 {
            assert_eq!(kernel.get(n, -1), Scalar::zero());
            assert_eq!(kernel.get(n, -17), Scalar::zero());
            assert_eq!(kernel.get(n, w_m(2, n) + 1), Scalar::zero());
            assert_eq!(kernel.get(n, w_m(2, n) + 30), Scalar::zero());
        }
        assert_eq!(kernel.get(-1, 0), Scalar::zero());
        assert_eq!(kernel.get(-4, 2), Scalar::zero());
    }

    #[test]
    fn boundary_value_examples() {
        // Chebyshev T: leading coefficient of T_4 is 8 = 1 * 2 * 2 * 2
        assert_eq!(boundary_value(&chebyshev_t(), 4).unwrap(), s("8"));
        // n = m - 1: empty product
        assert_eq!(boundary_value(&chebyshev_t(), 1).unwrap(), s("1"));
        let laguerre = spec(1, &["1"], "-1/n", "(k-2*n)/n");
        assert_eq!(boundary_value(&laguerre, 3).unwrap(), s("-1/6"));
        // cross-check against the built kernel entry (n, 0)
        let kernel = build_direct_kernel(&laguerre, 3).unwrap();
        assert_eq!(kernel.get(3, 0), s("-1/6"));
    }

    #[test]
    fn boundary_agrees_with_built_column() {
        for family in [
            chebyshev_t(),
            spec(1, &["1"], "-1/n", "(k-2*n)/n"),
            spec(3, &["2", "-1/3", "4"], "(n+1)/2", "n-k"),
        ] {
            let kernel = build_direct_kernel(&family, 24).unwrap();
            for n in 0..=24 {
                assert_eq!(
                    boundary_value(&family, n).unwrap(),
                    kernel.get(n, 0),
                    "n = {n}"
                );
            }
        }
    }

    #[test]
    fn admissibility() {
        let cheb = build_direct_kernel(&chebyshev_t(), 10).unwrap();
        assert!(cheb.is_admissible());
        let fib = build_direct_kernel(&spec(2, &["0", "1"], "1", "1"), 6).unwrap();
        assert_eq!(fib.first_non_admissible(), Some(0));
        assert!(paper_example_kernel().is_admissible());
    }

    #[test]
    fn degree_is_exact_for_admissible_kernels() {
        let kernel = build_direct_kernel(&spec(2, &["3", "-1/2"], "(n+2)/n", "n"), 16).unwrap();
        assert!(kernel.is_admissible());
        for n in 0..=16 {
            assert_eq!(
                kernel.family_polynomial(n).unwrap().degree(),
                Some(n as usize)
            );
        }
    }

    #[test]
    fn class_view_examples() {
        let cheb = build_direct_kernel(&chebyshev_t(), 10).unwrap();
        let class0 = cheb.class_view(0);
        // reindex of T_4 = (8, -8, 1): lambda<0>(2, t) = lambda(4, 2 - t)
        assert_eq!(class0.get(2, 0), s("1"));
        assert_eq!(class0.get(2, 1), s("-8"));
        assert_eq!(class0.get(2, 2), s("8"));
        assert_eq!(class0.get(0, 0), s("1"));
        assert_eq!(class0.get(1, -1), Scalar::zero());
        assert_eq!(class0.get(1, 2), Scalar::zero());

        // m = 1: the single class is the reversed rows of the kernel
        let paper = paper_example_kernel();
        let class = paper.class_view(0);
        for n in 0..=paper.n_max() {
            let mut reversed: Vec<Scalar> = paper.row(n).unwrap().to_vec();
            reversed.reverse();
            assert_eq!(class.rows()[n as usize], reversed);
        }
    }

    #[test]
    fn class_recurrence_holds_with_wrap_rule() {
        // lambda<r>(k, t) = p_{mk+r} lambda<r-1>(k, t) - h_(mk+r, k-t) lambda<r>(k-1, t),
        // with lambda<-1>(k, t) = lambda<m-1>(k-1, t-1).
        for family in [
            chebyshev_t(),
            spec(1, &["1"], "-1/n", "(k-2*n)/n"),
            spec(3, &["2", "-1/3", "4"], "(n+1)/2", "n-k"),
        ] {
            let m = family.m();
            let kernel = build_direct_kernel(&family, 21).unwrap();
            let views: Vec<ClassKernel> = (0..m).map(|r| kernel.class_view(r)).collect();
            for r in 0..m {
                let view = &views[r as usize];
                for k in 1..=view.k_max() {
                    for t in 0..=k {
                        let n = m * k + r;
                        let predecessor = if r == 0 {
                            views[(m - 1) as usize].get(k - 1, t - 1)
                        } else {
                            views[(r - 1) as usize].get(k, t)
                        };
                        let expected = family.principal(n).unwrap() * predecessor
                            - family.auxiliary(n, k - t).unwrap() * view.get(k - 1, t);
                        assert_eq!(view.get(k, t), expected, "r={r} k={k} t={t}");
                    }
                }
            }
        }
    }

    #[test]
    fn spec_validation() {
        assert!(matches!(
            LambdaRecursiveSpec::from_strings(None, 2, &["1", "1", "1"], "2", "1"),
            Err(Error::BadInitialLength { m: 2, got: 3 })
        ));
        assert!(matches!(
            LambdaRecursiveSpec::from_strings(None, 2, &["1", "1"], "k", "1"),
            Err(Error::PIsKFree)
        ));
        assert!(LambdaRecursiveSpec::from_strings(None, 1, &["1"], "n", "n*k").is_ok());
    }

    #[test]
    fn expr_undefined_surfaces_index() {
        // p = 1/(n - 4) is undefined at row 4
        let bad = spec(2, &["1", "1"], "1/(n-4)", "1");
        assert_eq!(
            build_direct_kernel(&bad, 6).unwrap_err(),
            Error::ExprUndefined { n: 4, k: 0 }
        );
        // h = 1/(k - 1) is undefined at k = 1, first needed at row 2
        let bad_h = spec(2, &["1", "1"], "2", "1/(k-1)");
        assert_eq!(
            build_direct_kernel(&bad_h, 6).unwrap_err(),
            Error::ExprUndefined { n: 2, k: 1 }
        );
    }

    #[test]
    fn from_rows_validates_shape() {
        let rows = vec![vec![s("1")], vec![s("1"), s("2")]];
        assert!(matches!(
            TriangularKernel::from_rows(2, rows),
            Err(Error::BadTableRow {
                n: 1,
                expected: 1,
                got: 2
            })
        ));
        assert!(TriangularKernel::from_rows(1, vec![vec![s("1")], vec![s("1"), s("2")]]).is_ok());
    }
}
