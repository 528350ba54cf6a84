//! Shared helpers for the integration suites: independent reference
//! implementations used to cross-check the library. Everything here is
//! deliberately naive — direct formulas, dense elimination, brute-force
//! search — so agreement with the optimized code is meaningful.
#![allow(dead_code)]

use ndarray::{Array1, Array2, ArrayView1, ArrayView2};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use rand_distr::StandardNormal;

pub fn rng(seed: u64) -> ChaCha20Rng {
    ChaCha20Rng::seed_from_u64(seed)
}

pub fn gaussian_matrix(rng: &mut ChaCha20Rng, n: usize, p: usize) -> Array2<f64> {
    Array2::from_shape_fn((n, p), |_| rng.sample(StandardNormal))
}

pub fn gaussian_vector(rng: &mut ChaCha20Rng, n: usize) -> Array1<f64> {
    Array1::from_shape_fn(n, |_| rng.sample(StandardNormal))
}

/// Dense linear solve by Gaussian elimination with partial pivoting.
/// Panics on a numerically singular system (fine for test fixtures).
pub fn solve_dense(a: &Array2<f64>, b: &Array1<f64>) -> Array1<f64> {
    let n = a.nrows();
    assert_eq!(a.ncols(), n);
    assert_eq!(b.len(), n);
    let mut m = a.clone();
    let mut rhs = b.clone();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| m[[i, col]].abs().total_cmp(&m[[j, col]].abs()))
            .unwrap();
        assert!(m[[pivot, col]].abs() > 1e-12, "singular test system");
        if pivot != col {
            for k in 0..n {
                m.swap([col, k], [pivot, k]);
            }
            rhs.swap(col, pivot);
        }
        for row in col + 1..n {
            let f = m[[row, col]] / m[[col, col]];
            for k in col..n {
                m[[row, k]] -= f * m[[col, k]];
            }
            rhs[row] -= f * rhs[col];
        }
    }
    let mut x = Array1::zeros(n);
    for row in (0..n).rev() {
        let mut acc = rhs[row];
        for k in row + 1..n {
            acc -= m[[row, k]] * x[k];
        }
        x[row] = acc / m[[row, row]];
    }
    x
}

/// Matrix inverse column by column via [`solve_dense`].
pub fn invert_dense(a: &Array2<f64>) -> Array2<f64> {
    let n = a.nrows();
    let mut inv = Array2::zeros((n, n));
    for j in 0..n {
        let mut e = Array1::zeros(n);
        e[j] = 1.0;
        inv.column_mut(j).assign(&solve_dense(a, &e));
    }
    inv
}

/// Least-squares objective `(1/n)||y - X b||^2 + lambda ||b||_1`, direct.
pub fn lasso_objective(
    x: ArrayView2<'_, f64>,
    y: ArrayView1<'_, f64>,
    beta: ArrayView1<'_, f64>,
    lambda: f64,
) -> f64 {
    let r = &y.to_owned() - &x.dot(&beta);
    r.dot(&r) / y.len() as f64 + lambda * beta.iter().map(|v| v.abs()).sum::<f64>()
}

/// Logistic smooth part `(1/n) sum log(1 + exp(-y_i x_i^T b))`, direct.
pub fn logistic_smooth(
    x: ArrayView2<'_, f64>,
    y: ArrayView1<'_, f64>,
    beta: ArrayView1<'_, f64>,
) -> f64 {
    let z = x.dot(&beta);
    let n = y.len() as f64;
    z.iter()
        .zip(y.iter())
        .map(|(&zi, &yi)| {
            let t = -yi * zi;
            // ln(1 + e^t), stable in both tails.
            if t > 0.0 {
                t + (-t).exp().ln_1p()
            } else {
                t.exp().ln_1p()
            }
        })
        .sum::<f64>()
        / n
}

pub fn logistic_objective(
    x: ArrayView2<'_, f64>,
    y: ArrayView1<'_, f64>,
    beta: ArrayView1<'_, f64>,
    lambda: f64,
) -> f64 {
    logistic_smooth(x, y, beta) + lambda * beta.iter().map(|v| v.abs()).sum::<f64>()
}

/// Worst-case violation of the lasso stationarity conditions: for active
/// coordinates the (2/n) correlation must sit on the penalty boundary, for
/// inactive ones inside it. Returns the largest excess.
pub fn lasso_kkt_violation(
    x: ArrayView2<'_, f64>,
    y: ArrayView1<'_, f64>,
    beta: ArrayView1<'_, f64>,
    lambda: f64,
) -> f64 {
    let n = y.len() as f64;
    let r = &y.to_owned() - &x.dot(&beta);
    let corr = x.t().dot(&r) * (2.0 / n);
    let mut worst = 0.0f64;
    for j in 0..beta.len() {
        let v = if beta[j] != 0.0 {
            (corr[j] - lambda * beta[j].signum()).abs()
        } else {
            (corr[j].abs() - lambda).max(0.0)
        };
        worst = worst.max(v);
    }
    worst
}

/// Two-stage grid minimization of a bivariate function over a square:
/// a coarse pass, then a fine pass around the coarse winner. Safe for
/// convex objectives.
pub fn staged_grid_2d<F: FnMut(f64, f64) -> f64>(
    lo: f64,
    hi: f64,
    coarse: f64,
    fine: f64,
    mut f: F,
) -> (f64, f64, f64) {
    let mut best = (lo, lo, f64::INFINITY);
    let mut sweep = |x0: f64, x1: f64, y0: f64, y1: f64, step: f64, best: &mut (f64, f64, f64)| {
        let nx = ((x1 - x0) / step).round() as usize;
        let ny = ((y1 - y0) / step).round() as usize;
        for i in 0..=nx {
            let a = x0 + i as f64 * step;
            for k in 0..=ny {
                let b = y0 + k as f64 * step;
                let v = f(a, b);
                if v < best.2 {
                    *best = (a, b, v);
                }
            }
        }
    };
    sweep(lo, hi, lo, hi, coarse, &mut best);
    let (cx, cy, _) = best;
    let pad = 2.0 * coarse;
    sweep(
        (cx - pad).max(lo),
        (cx + pad).min(hi),
        (cy - pad).max(lo),
        (cy + pad).min(hi),
        fine,
        &mut best,
    );
    best
}

/// Central finite-difference gradient of a scalar function.
pub fn finite_difference_gradient<F: FnMut(ArrayView1<'_, f64>) -> f64>(
    beta: &Array1<f64>,
    h: f64,
    mut f: F,
) -> Array1<f64> {
    let mut grad = Array1::zeros(beta.len());
    for j in 0..beta.len() {
        let mut hi = beta.clone();
        hi[j] += h;
        let mut lo = beta.clone();
        lo[j] -= h;
        grad[j] = (f(hi.view()) - f(lo.view())) / (2.0 * h);
    }
    grad
}

/// A random sparse regression fixture: standard Gaussian design, `s`-sparse
/// coefficients, Gaussian noise.
pub struct Fixture {
    pub x: Array2<f64>,
    pub y: Array1<f64>,
    pub beta_star: Array1<f64>,
}

pub fn linear_fixture(seed: u64, n: usize, p: usize, s: usize, sigma: f64) -> Fixture {
    let mut rng = rng(seed);
    let x = gaussian_matrix(&mut rng, n, p);
    let mut beta_star = Array1::zeros(p);
    for j in 0..s {
        let sign = if rng.gen::<bool>() { 1.0 } else { -1.0 };
        beta_star[j] = sign * (0.5 + rng.gen::<f64>());
    }
    let noise = gaussian_vector(&mut rng, n) * sigma;
    let y = x.dot(&beta_star) + noise;
    Fixture { x, y, beta_star }
}

/// Labels in {-1, +1} from a logistic model over a Gaussian design.
pub fn logistic_fixture(seed: u64, n: usize, p: usize, s: usize) -> Fixture {
    let mut rng = rng(seed);
    let x = gaussian_matrix(&mut rng, n, p);
    let mut beta_star = Array1::zeros(p);
    for j in 0..s {
        beta_star[j] = if rng.gen::<bool>() { 1.5 } else { -1.5 };
    }
    let z = x.dot(&beta_star);
    let y = Array1::from_shape_fn(n, |i| {
        let prob = 1.0 / (1.0 + (-z[i]).exp());
        if rng.gen::<f64>() < prob {
            1.0
        } else {
            -1.0
        }
    });
    Fixture { x, y, beta_star }
}

/// Prints the standardized acceptance verdict line, then enforces it.
///
/// Writes straight to the process stdout rather than through `println!` so
/// the verdict shows up even under the harness's default output capture —
/// one line per criterion, with or without `--nocapture`.
pub fn report(criterion: usize, name: &str, pass: bool, detail: &str) {
    use std::io::Write;
    let verdict = if pass { "PASS" } else { "FAIL" };
    let line = format!("ACCEPTANCE {criterion} ({name}): {verdict} — {detail}");
    let mut out = std::io::stdout();
    let _ = writeln!(out, "{line}");
    let _ = out.flush();
    assert!(pass, "acceptance criterion {criterion} failed: {detail}");
}
