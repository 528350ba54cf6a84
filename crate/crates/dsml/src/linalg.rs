//! Deterministic dense linear-algebra primitives shared by the solvers.
//!
//! Everything here operates on small dense matrices (desk scale, p and n up
//! to a few thousand), so a hand-rolled Cholesky is adequate and keeps the
//! crate free of a BLAS/LAPACK dependency.

use ndarray::{Array1, Array2, ArrayView1, ArrayView2};

use crate::error::{Error, Result};
use crate::types::SupportSet;

/// Empirical Gram matrix `X^T X / n` (symmetric positive semidefinite).
pub fn gram(x: ArrayView2<'_, f64>) -> Array2<f64> {
    let n = x.nrows() as f64;
    let mut g = x.t().dot(&x);
    g.mapv_inplace(|v| v / n);
    // Symmetrize to kill rounding asymmetry from the matrix product.
    for j in 0..g.nrows() {
        for k in 0..j {
            let avg = 0.5 * (g[[j, k]] + g[[k, j]]);
            g[[j, k]] = avg;
            g[[k, j]] = avg;
        }
    }
    g
}

/// Lower-triangular Cholesky factor of a symmetric positive definite matrix.
/// Returns `None` when a pivot is not strictly positive.
pub fn cholesky(a: ArrayView2<'_, f64>) -> Option<Array2<f64>> {
    let d = a.nrows();
    assert_eq!(d, a.ncols(), "cholesky needs a square matrix");
    let mut l = Array2::<f64>::zeros((d, d));
    for j in 0..d {
        let mut diag = a[[j, j]];
        for k in 0..j {
            diag -= l[[j, k]] * l[[j, k]];
        }
        if !(diag > 0.0) || !diag.is_finite() {
            return None;
        }
        let ljj = diag.sqrt();
        l[[j, j]] = ljj;
        for i in (j + 1)..d {
            let mut v = a[[i, j]];
            for k in 0..j {
                v -= l[[i, k]] * l[[j, k]];
            }
            l[[i, j]] = v / ljj;
        }
    }
    Some(l)
}

/// Solves `L L^T x = b` given the lower Cholesky factor `L`.
pub fn cholesky_solve(l: &Array2<f64>, b: ArrayView1<'_, f64>) -> Array1<f64> {
    let d = l.nrows();
    let mut z = b.to_owned();
    // Forward substitution L z = b.
    for i in 0..d {
        let mut v = z[i];
        for k in 0..i {
            v -= l[[i, k]] * z[k];
        }
        z[i] = v / l[[i, i]];
    }
    // Back substitution L^T x = z.
    for i in (0..d).rev() {
        let mut v = z[i];
        for k in (i + 1)..d {
            v -= l[[k, i]] * z[k];
        }
        z[i] = v / l[[i, i]];
    }
    z
}

/// Solves the symmetric positive definite system `A x = b` by Cholesky.
pub fn solve_spd(a: ArrayView2<'_, f64>, b: ArrayView1<'_, f64>) -> Result<Array1<f64>> {
    let l = cholesky(a).ok_or_else(|| Error::SingularSystem {
        cond: f64::INFINITY,
    })?;
    Ok(cholesky_solve(&l, b))
}

/// Inverse of a symmetric positive definite matrix via Cholesky solves.
pub fn spd_inverse(a: ArrayView2<'_, f64>) -> Result<Array2<f64>> {
    let d = a.nrows();
    let l = cholesky(a).ok_or_else(|| Error::SingularSystem {
        cond: f64::INFINITY,
    })?;
    let mut inv = Array2::zeros((d, d));
    let mut e = Array1::zeros(d);
    for j in 0..d {
        e[j] = 1.0;
        let col = cholesky_solve(&l, e.view());
        inv.column_mut(j).assign(&col);
        e[j] = 0.0;
    }
    Ok(inv)
}

/// Ordinary least squares restricted to the support `s`: coefficients are
/// zero outside `s`, and on `s` they solve the restricted normal equations
/// `(X_S^T X_S) b = X_S^T y`.
///
/// Fails with a condition estimate when the restricted Gram is singular or
/// too ill-conditioned to trust (estimate above 1e12).
pub fn ols_on_support(
    x: ArrayView2<'_, f64>,
    y: ArrayView1<'_, f64>,
    s: &SupportSet,
) -> Result<Array1<f64>> {
    let (n, p) = x.dim();
    if s.p() != p {
        return Err(Error::InvalidInput(format!(
            "support is over p={} but design has p={p}",
            s.p()
        )));
    }
    if y.len() != n {
        return Err(Error::InvalidInput(format!(
            "response length {} does not match {n} rows",
            y.len()
        )));
    }
    let k = s.len();
    if k == 0 {
        return Ok(Array1::zeros(p));
    }
    if k > n {
        return Err(Error::InvalidInput(format!(
            "support size {k} exceeds sample size {n}; restricted OLS is underdetermined"
        )));
    }

    let mut gram_s = Array2::<f64>::zeros((k, k));
    let mut rhs = Array1::<f64>::zeros(k);
    for (a, ja) in s.iter().enumerate() {
        let col_a = x.column(ja);
        rhs[a] = col_a.dot(&y);
        for (b, jb) in s.iter().enumerate().take(a + 1) {
            let v = col_a.dot(&x.column(jb));
            gram_s[[a, b]] = v;
            gram_s[[b, a]] = v;
        }
    }

    let l = cholesky(gram_s.view()).ok_or(Error::SingularSystem {
        cond: f64::INFINITY,
    })?;
    let cond = condition_estimate(&l);
    if cond > 1e12 {
        return Err(Error::SingularSystem { cond });
    }
    let coefs = cholesky_solve(&l, rhs.view());
    let mut beta = Array1::zeros(p);
    for (a, j) in s.iter().enumerate() {
        beta[j] = coefs[a];
    }
    Ok(beta)
}

/// Cheap 2-norm condition estimate from the Cholesky diagonal:
/// `(max_i L_ii / min_i L_ii)^2` bounds the spread of the pivots.
fn condition_estimate(l: &Array2<f64>) -> f64 {
    let mut lo = f64::INFINITY;
    let mut hi = 0.0f64;
    for i in 0..l.nrows() {
        let d = l[[i, i]];
        lo = lo.min(d);
        hi = hi.max(d);
    }
    if lo <= 0.0 {
        f64::INFINITY
    } else {
        (hi / lo).powi(2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;

    fn random_matrix(n: usize, p: usize, seed: u64) -> Array2<f64> {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        Array2::from_shape_fn((n, p), |_| rng.sample::<f64, _>(rand_distr::StandardNormal))
    }

    /// Naive triple-loop Gram oracle, independent of the ndarray product.
    fn gram_naive(x: &Array2<f64>) -> Array2<f64> {
        let (n, p) = x.dim();
        let mut g = Array2::zeros((p, p));
        for j in 0..p {
            for k in 0..p {
                let mut acc = 0.0;
                for i in 0..n {
                    acc += x[[i, j]] * x[[i, k]];
                }
                g[[j, k]] = acc / n as f64;
            }
        }
        g
    }

    #[test]
    fn gram_of_orthonormal_design_is_identity() {
        let x = array![[2f64.sqrt(), 0.0], [0.0, 2f64.sqrt()]];
        let g = gram(x.view());
        for j in 0..2 {
            for k in 0..2 {
                let expected = if j == k { 1.0 } else { 0.0 };
                assert!((g[[j, k]] - expected).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn gram_of_zero_matrix_is_zero() {
        let g = gram(Array2::<f64>::zeros((4, 3)).view());
        assert!(g.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn gram_matches_triple_loop_oracle() {
        let x = random_matrix(50, 10, 7);
        let g = gram(x.view());
        let oracle = gram_naive(&x);
        for (a, b) in g.iter().zip(oracle.iter()) {
            assert!((a - b).abs() < 1e-12, "{a} vs {b}");
        }
    }

    #[test]
    fn cholesky_reconstructs_matrix() {
        let x = random_matrix(40, 6, 21);
        let g = gram(x.view());
        let l = cholesky(g.view()).unwrap();
        let rebuilt = l.dot(&l.t());
        for (a, b) in rebuilt.iter().zip(g.iter()) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn cholesky_rejects_indefinite_matrix() {
        let a = array![[1.0, 2.0], [2.0, 1.0]]; // eigenvalues 3 and -1
        assert!(cholesky(a.view()).is_none());
    }

    #[test]
    fn solve_spd_recovers_known_solution() {
        let x = random_matrix(40, 5, 31);
        let g = gram(x.view());
        let truth = array![1.0, -2.0, 0.5, 3.0, -0.25];
        let b = g.dot(&truth);
        let sol = solve_spd(g.view(), b.view()).unwrap();
        for j in 0..5 {
            assert!((sol[j] - truth[j]).abs() < 1e-9);
        }
    }

    #[test]
    fn spd_inverse_times_matrix_is_identity() {
        let x = random_matrix(40, 5, 41);
        let g = gram(x.view());
        let inv = spd_inverse(g.view()).unwrap();
        let prod = inv.dot(&g);
        for j in 0..5 {
            for k in 0..5 {
                let expected = if j == k { 1.0 } else { 0.0 };
                assert!((prod[[j, k]] - expected).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn ols_empty_support_is_zero() {
        let x = random_matrix(10, 4, 1);
        let y = Array1::ones(10);
        let beta = ols_on_support(x.view(), y.view(), &SupportSet::empty(4)).unwrap();
        assert!(beta.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn ols_full_support_matches_full_ols() {
        let x = random_matrix(30, 5, 2);
        let y = random_matrix(30, 1, 3).column(0).to_owned();
        let beta = ols_on_support(x.view(), y.view(), &SupportSet::full(5)).unwrap();
        // Full OLS through the generic SPD path.
        let n = 30.0;
        let g = gram(x.view());
        let rhs = x.t().dot(&y) / n;
        let direct = solve_spd(g.view(), rhs.view()).unwrap();
        for j in 0..5 {
            assert!((beta[j] - direct[j]).abs() < 1e-10);
        }
    }

    #[test]
    fn ols_restricted_matches_explicit_small_inverse() {
        // 30x8 instance, |S| = 3: solve the 3x3 normal equations with an
        // explicit adjugate inverse and compare.
        let x = random_matrix(30, 8, 11);
        let y = random_matrix(30, 1, 12).column(0).to_owned();
        let s = SupportSet::new(vec![1, 4, 6], 8).unwrap();

        let beta = ols_on_support(x.view(), y.view(), &s).unwrap();

        let idx = [1usize, 4, 6];
        let mut a = [[0.0f64; 3]; 3];
        let mut b = [0.0f64; 3];
        for (r, &jr) in idx.iter().enumerate() {
            b[r] = x.column(jr).dot(&y);
            for (c, &jc) in idx.iter().enumerate() {
                a[r][c] = x.column(jr).dot(&x.column(jc));
            }
        }
        let det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
            - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
        let inv = [
            [
                (a[1][1] * a[2][2] - a[1][2] * a[2][1]) / det,
                (a[0][2] * a[2][1] - a[0][1] * a[2][2]) / det,
                (a[0][1] * a[1][2] - a[0][2] * a[1][1]) / det,
            ],
            [
                (a[1][2] * a[2][0] - a[1][0] * a[2][2]) / det,
                (a[0][0] * a[2][2] - a[0][2] * a[2][0]) / det,
                (a[0][2] * a[1][0] - a[0][0] * a[1][2]) / det,
            ],
            [
                (a[1][0] * a[2][1] - a[1][1] * a[2][0]) / det,
                (a[0][1] * a[2][0] - a[0][0] * a[2][1]) / det,
                (a[0][0] * a[1][1] - a[0][1] * a[1][0]) / det,
            ],
        ];
        for (r, &jr) in idx.iter().enumerate() {
            let expected: f64 = (0..3).map(|c| inv[r][c] * b[c]).sum();
            assert!(
                (beta[jr] - expected).abs() < 1e-9,
                "coordinate {jr}: {} vs {expected}",
                beta[jr]
            );
        }
        for j in [0usize, 2, 3, 5, 7] {
            assert_eq!(beta[j], 0.0);
        }
    }

    #[test]
    fn ols_residual_orthogonal_to_selected_columns() {
        for seed in 0..20u64 {
            let x = random_matrix(25, 6, 100 + seed);
            let y = random_matrix(25, 1, 200 + seed).column(0).to_owned();
            let s = SupportSet::new(vec![0, 3, 5], 6).unwrap();
            let beta = ols_on_support(x.view(), y.view(), &s).unwrap();
            let resid = &y - &x.dot(&beta);
            let max_y = y.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
            for j in s.iter() {
                let dot = x.column(j).dot(&resid);
                assert!(
                    dot.abs() <= 1e-8 * 25.0 * max_y,
                    "seed {seed}: residual correlation {dot:.3e}"
                );
            }
        }
    }

    #[test]
    fn ols_rejects_singular_restricted_gram() {
        // Duplicate columns make the restricted Gram singular.
        let mut x = Array2::<f64>::zeros((10, 3));
        let base = random_matrix(10, 1, 5).column(0).to_owned();
        x.column_mut(0).assign(&base);
        x.column_mut(1).assign(&base);
        x.column_mut(2).assign(&random_matrix(10, 1, 6).column(0));
        let y = Array1::<f64>::ones(10);
        let err = ols_on_support(x.view(), y.view(), &SupportSet::new(vec![0, 1], 3).unwrap())
            .unwrap_err();
        assert!(matches!(err, Error::SingularSystem { .. }), "{err}");
    }

    #[test]
    fn gram_is_symmetric_and_near_psd() {
        for seed in 0..10u64 {
            let x = random_matrix(15, 8, 300 + seed);
            let g = gram(x.view());
            for j in 0..8 {
                for k in 0..8 {
                    assert!((g[[j, k]] - g[[k, j]]).abs() <= 1e-12);
                }
            }
            let min_eig = crate::linalg::tests::min_eigenvalue_jacobi(&g);
            assert!(min_eig >= -1e-10, "seed {seed}: min eigenvalue {min_eig:.3e}");
        }
    }

    /// Cyclic Jacobi eigenvalue iteration for small symmetric matrices
    /// (test-only oracle).
    pub(crate) fn min_eigenvalue_jacobi(a: &Array2<f64>) -> f64 {
        let d = a.nrows();
        let mut m = a.clone();
        for _sweep in 0..100 {
            let mut off = 0.0;
            for i in 0..d {
                for j in (i + 1)..d {
                    off += m[[i, j]] * m[[i, j]];
                }
            }
            if off < 1e-24 {
                break;
            }
            for i in 0..d {
                for j in (i + 1)..d {
                    if m[[i, j]].abs() < 1e-18 {
                        continue;
                    }
                    let theta = 0.5 * (m[[j, j]] - m[[i, i]]) / m[[i, j]];
                    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                    let c = 1.0 / (t * t + 1.0).sqrt();
                    let s = t * c;
                    for k in 0..d {
                        let mik = m[[i, k]];
                        let mjk = m[[j, k]];
                        m[[i, k]] = c * mik - s * mjk;
                        m[[j, k]] = s * mik + c * mjk;
                    }
                    for k in 0..d {
                        let mki = m[[k, i]];
                        let mkj = m[[k, j]];
                        m[[k, i]] = c * mki - s * mkj;
                        m[[k, j]] = s * mki + c * mkj;
                    }
                }
            }
        }
        (0..d).map(|i| m[[i, i]]).fold(f64::INFINITY, f64::min)
    }
}
