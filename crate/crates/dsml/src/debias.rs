//! Approximate inverse Hessians and the debiased (desparsified) estimators.
//!
//! A worker's lasso fit `b` is biased by shrinkage. The one-step correction
//!
//! ```text
//! b_u = b + (1/n) M X' (y - X b)            (linear)
//! b_u = b + (1/n) M X' ((y+1)/2 - s(X b))   (logistic, s = sigmoid)
//! ```
//!
//! uses a matrix `M` that approximately inverts the empirical Gram. Row `j`
//! of `M` solves the constrained quadratic program
//!
//! ```text
//! minimize m' S m   subject to  ||S m - e_j||_inf <= mu
//! ```
//!
//! where `S` is the Gram (`X'X/n`, or `X'WX/n` with logistic weights `W`).
//! We solve the equivalent penalized problem
//!
//! ```text
//! minimize w' S w - 2 w_j + 2 mu ||w||_1
//! ```
//!
//! by cyclic coordinate descent: any stationary point `w` of this problem
//! satisfies `|(S w - e_j)_k| <= mu` for every `k` (with equality on the
//! coordinates where `w_k != 0`), and attains the same objective as the
//! constrained optimum, so `m_j = w`. This needs no general QP machinery and
//! the `p` rows are independent, so they are solved in parallel.

use ndarray::{Array1, Array2, ArrayView1, ArrayView2};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::solvers::{sigmoid, soft_threshold};

/// How many times a row solve may raise `mu` before giving up.
const MAX_MU_ESCALATIONS: u32 = 20;
/// Geometric factor applied to `mu` on an infeasible row.
const MU_ESCALATION_FACTOR: f64 = 1.5;
/// Coordinate-change tolerance of the row solver. Kept well below the
/// feasibility slack allowance (1e-8) so a converged row cannot overshoot
/// the constraint by more than rounding.
const ROW_TOL: f64 = 1e-10;
/// Sweep cap per row and `mu` attempt.
const MAX_ROW_SWEEPS: usize = 20_000;

/// Approximate inverse of a Gram matrix, one constrained-QP solution per row.
#[derive(Debug, Clone)]
pub struct InverseSurrogate {
    /// The `p x p` surrogate; row `j` approximately inverts coordinate `j`.
    pub m: Array2<f64>,
    /// Largest constraint level actually used by any row. Equals the
    /// requested `mu` unless some row was infeasible and escalated.
    pub mu: f64,
    /// `max_j ||S m_j - e_j||_inf` achieved over all rows.
    pub feasibility_slack: f64,
    /// Total number of infeasibility-driven `mu` increases across rows.
    pub mu_escalations: u32,
}

/// Diagonal logistic curvature weights `s(z_k) * (1 - s(z_k))`.
#[derive(Debug, Clone)]
pub struct LogisticWeights {
    /// One weight per sample, each in `(0, 0.25]`.
    pub w: Array1<f64>,
}

struct RowSolution {
    w: Array1<f64>,
    mu: f64,
    slack: f64,
    escalations: u32,
}

/// One cyclic coordinate-descent sweep on the penalized row problem,
/// maintaining `q = S w`. Returns the largest coordinate change.
fn cd_sweep(
    sigma: &ArrayView2<'_, f64>,
    j: usize,
    mu: f64,
    w: &mut Array1<f64>,
    q: &mut Array1<f64>,
) -> Option<f64> {
    let p = w.len();
    let mut max_delta = 0.0f64;
    for k in 0..p {
        let skk = sigma[[k, k]];
        let target = if k == j { 1.0 } else { 0.0 };
        let old = w[k];
        let residual = target - (q[k] - skk * old);
        if skk <= f64::MIN_POSITIVE {
            // Degenerate diagonal: the 1-d problem is linear plus an L1
            // term, so it is bounded only when the linear slope is covered
            // by the penalty. Otherwise this row is infeasible at `mu`.
            if residual.abs() > mu {
                return None;
            }
            if old != 0.0 {
                q.scaled_add(-old, &sigma.column(k));
                w[k] = 0.0;
                max_delta = max_delta.max(old.abs());
            }
            continue;
        }
        let new = soft_threshold(residual, mu) / skk;
        let delta = new - old;
        if delta != 0.0 {
            q.scaled_add(delta, &sigma.column(k));
            w[k] = new;
        }
        max_delta = max_delta.max(delta.abs());
    }
    Some(max_delta)
}

/// Solves the row QP at the requested `mu`, escalating geometrically while
/// the row stays infeasible.
fn solve_row(sigma: &ArrayView2<'_, f64>, j: usize, mu0: f64) -> Result<RowSolution> {
    let p = sigma.nrows();
    let mut mu = mu0;
    let mut escalations = 0u32;
    loop {
        let mut w = Array1::<f64>::zeros(p);
        let mut q = Array1::<f64>::zeros(p);
        let mut feasible_attempt = true;
        let mut converged = false;
        for _ in 0..MAX_ROW_SWEEPS {
            match cd_sweep(sigma, j, mu, &mut w, &mut q) {
                Some(delta) => {
                    if delta < ROW_TOL {
                        converged = true;
                        break;
                    }
                    if w.iter().any(|v| v.abs() > 1e9) {
                        // Diverging iterates mean the penalized problem is
                        // unbounded below, i.e. the constraint set is empty.
                        feasible_attempt = false;
                        break;
                    }
                }
                None => {
                    feasible_attempt = false;
                    break;
                }
            }
        }
        if feasible_attempt {
            // Refresh q to clear incremental drift before judging slack.
            let q_exact = sigma.dot(&w);
            let mut slack = 0.0f64;
            for k in 0..p {
                let target = if k == j { 1.0 } else { 0.0 };
                slack = slack.max((q_exact[k] - target).abs());
            }
            if slack <= mu + 1e-8 {
                if !converged {
                    log::warn!(
                        "row {j}: coordinate descent hit the sweep cap \
                         (slack {slack:.3e} still within mu={mu:.3e})"
                    );
                }
                return Ok(RowSolution {
                    w,
                    mu,
                    slack,
                    escalations,
                });
            }
        }
        if escalations == MAX_MU_ESCALATIONS {
            return Err(Error::SurrogateInfeasible {
                row: j,
                mu,
                escalations,
            });
        }
        escalations += 1;
        mu *= MU_ESCALATION_FACTOR;
    }
}

fn check_gram(sigma: ArrayView2<'_, f64>, mu: f64) -> Result<usize> {
    let (p, q) = sigma.dim();
    if p == 0 || p != q {
        return Err(Error::InvalidInput(format!(
            "gram matrix must be square and non-empty, got {p}x{q}"
        )));
    }
    if !(mu > 0.0) || !mu.is_finite() {
        return Err(Error::InvalidInput(format!(
            "mu must be positive and finite, got {mu}"
        )));
    }
    let scale = sigma.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
    for a in 0..p {
        for b in 0..a {
            if (sigma[[a, b]] - sigma[[b, a]]).abs() > 1e-8 * scale.max(1.0) {
                return Err(Error::InvalidInput(format!(
                    "gram matrix is not symmetric at ({a}, {b})"
                )));
            }
        }
    }
    if sigma.iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidInput("gram matrix contains NaN or Inf".into()));
    }
    Ok(p)
}

/// Computes the approximate inverse of a symmetric PSD Gram matrix with
/// constraint level `mu`.
///
/// Rows are independent problems and run in parallel. A row that is
/// infeasible at the requested `mu` (possible when the Gram is
/// rank-deficient) retries at `mu * 1.5^k`, k up to 20; the returned
/// surrogate reports the largest level used and the total escalation count.
pub fn compute_m(sigma_hat: ArrayView2<'_, f64>, mu: f64) -> Result<InverseSurrogate> {
    let p = check_gram(sigma_hat, mu)?;
    let rows: Vec<RowSolution> = (0..p)
        .into_par_iter()
        .map(|j| solve_row(&sigma_hat, j, mu))
        .collect::<Result<_>>()?;
    let mut m = Array2::zeros((p, p));
    let mut mu_used = mu;
    let mut slack = 0.0f64;
    let mut escalations = 0u32;
    for (j, row) in rows.iter().enumerate() {
        m.row_mut(j).assign(&row.w);
        mu_used = mu_used.max(row.mu);
        slack = slack.max(row.slack);
        escalations += row.escalations;
    }
    Ok(InverseSurrogate {
        m,
        mu: mu_used,
        feasibility_slack: slack,
        mu_escalations: escalations,
    })
}

/// Logistic curvature weights at the linear predictor `X b`.
///
/// Each weight is `s(z) * (1 - s(z)) = t / (1 + t)^2` with `t = exp(-|z|)`,
/// evaluated in that form so it stays positive and finite for any `z`
/// (`|z|` is capped at 700 to keep `t` above the underflow threshold).
pub fn compute_logistic_weights(
    x: ArrayView2<'_, f64>,
    beta_hat: ArrayView1<'_, f64>,
) -> Result<LogisticWeights> {
    if beta_hat.len() != x.ncols() {
        return Err(Error::InvalidInput(format!(
            "coefficient length {} does not match p={}",
            beta_hat.len(),
            x.ncols()
        )));
    }
    let z = x.dot(&beta_hat);
    let w = z.mapv(|zk| {
        let t = (-zk.abs().min(700.0)).exp();
        t / ((1.0 + t) * (1.0 + t))
    });
    Ok(LogisticWeights { w })
}

/// Approximate inverse of the weighted Gram `X' W X / n` for the logistic
/// family, with the same row program and escalation policy as [`compute_m`].
/// The `1/n` normalization is applied in both the objective and the
/// constraint.
pub fn compute_m_logistic(
    x: ArrayView2<'_, f64>,
    weights: &LogisticWeights,
    mu: f64,
) -> Result<InverseSurrogate> {
    let (n, _p) = x.dim();
    if weights.w.len() != n {
        return Err(Error::InvalidInput(format!(
            "weight length {} does not match n={n}",
            weights.w.len()
        )));
    }
    if weights.w.iter().any(|&v| !(v > 0.0)) {
        return Err(Error::InvalidInput(
            "logistic weights must be strictly positive".into(),
        ));
    }
    let mut xw = x.to_owned();
    for (k, mut row) in xw.rows_mut().into_iter().enumerate() {
        let wk = weights.w[k];
        row.mapv_inplace(|v| v * wk);
    }
    let mut gram_w = x.t().dot(&xw);
    gram_w.mapv_inplace(|v| v / n as f64);
    // Symmetrize: the two-sided product picks up rounding asymmetry.
    let p = gram_w.nrows();
    for a in 0..p {
        for b in 0..a {
            let avg = 0.5 * (gram_w[[a, b]] + gram_w[[b, a]]);
            gram_w[[a, b]] = avg;
            gram_w[[b, a]] = avg;
        }
    }
    compute_m(gram_w.view(), mu)
}

fn check_debias_dims(
    x: &ArrayView2<'_, f64>,
    y: &ArrayView1<'_, f64>,
    beta_hat: &ArrayView1<'_, f64>,
    m: &ArrayView2<'_, f64>,
) -> Result<()> {
    let (n, p) = x.dim();
    if y.len() != n {
        return Err(Error::InvalidInput(format!(
            "response length {} does not match {n} rows",
            y.len()
        )));
    }
    if beta_hat.len() != p {
        return Err(Error::InvalidInput(format!(
            "coefficient length {} does not match p={p}",
            beta_hat.len()
        )));
    }
    if m.dim() != (p, p) {
        return Err(Error::InvalidInput(format!(
            "inverse surrogate is {}x{} but p={p}",
            m.nrows(),
            m.ncols()
        )));
    }
    Ok(())
}

/// One-step debiased estimator for the linear family:
/// `b + (1/n) M X' (y - X b)`.
pub fn debias_linear(
    x: ArrayView2<'_, f64>,
    y: ArrayView1<'_, f64>,
    beta_hat: ArrayView1<'_, f64>,
    m: ArrayView2<'_, f64>,
) -> Result<Array1<f64>> {
    check_debias_dims(&x, &y, &beta_hat, &m)?;
    let n = x.nrows() as f64;
    let resid = &y.to_owned() - &x.dot(&beta_hat);
    let grad = x.t().dot(&resid) / n;
    Ok(&beta_hat.to_owned() + &m.dot(&grad))
}

/// One-step debiased estimator for the logistic family:
/// `b + (1/n) M X' ((y+1)/2 - sigmoid(X b))` with labels in {-1, +1}.
pub fn debias_logistic(
    x: ArrayView2<'_, f64>,
    y: ArrayView1<'_, f64>,
    beta_hat: ArrayView1<'_, f64>,
    m: ArrayView2<'_, f64>,
) -> Result<Array1<f64>> {
    check_debias_dims(&x, &y, &beta_hat, &m)?;
    if y.iter().any(|&v| v != 1.0 && v != -1.0) {
        return Err(Error::InvalidInput(
            "logistic responses must lie in {-1, +1}".into(),
        ));
    }
    let n = x.nrows() as f64;
    let z = x.dot(&beta_hat);
    let resid = Array1::from_shape_fn(y.len(), |k| 0.5 * (y[k] + 1.0) - sigmoid(z[k]));
    let grad = x.t().dot(&resid) / n;
    Ok(&beta_hat.to_owned() + &m.dot(&grad))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{gram, ols_on_support, spd_inverse};
    use crate::types::SupportSet;
    use ndarray::array;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;

    fn random_matrix(n: usize, p: usize, seed: u64) -> Array2<f64> {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        Array2::from_shape_fn((n, p), |_| rng.sample::<f64, _>(rand_distr::StandardNormal))
    }

    fn random_vector(n: usize, seed: u64) -> Array1<f64> {
        random_matrix(n, 1, seed).column(0).to_owned()
    }

    #[test]
    fn identity_gram_rows_shrink_toward_basis() {
        let eye = Array2::eye(6);
        let surr = compute_m(eye.view(), 0.1).unwrap();
        assert_eq!(surr.mu_escalations, 0);
        assert_eq!(surr.mu, 0.1);
        for j in 0..6 {
            for k in 0..6 {
                let expected = if j == k { 0.9 } else { 0.0 };
                assert!(
                    (surr.m[[j, k]] - expected).abs() < 1e-9,
                    "entry ({j},{k}) = {}",
                    surr.m[[j, k]]
                );
            }
            let row = surr.m.row(j);
            let objective = row.dot(&eye.dot(&row));
            assert!((objective - 0.81).abs() < 1e-9);
        }
        assert!(surr.feasibility_slack <= 0.1 + 1e-8);
    }

    #[test]
    fn identity_gram_large_mu_gives_zero_rows() {
        let eye = Array2::eye(4);
        let surr = compute_m(eye.view(), 1.0).unwrap();
        assert!(surr.m.iter().all(|&v| v == 0.0));
        assert!(surr.feasibility_slack <= 1.0 + 1e-8);
    }

    #[test]
    fn well_conditioned_gram_stays_feasible_without_escalation() {
        let x = random_matrix(200, 12, 1);
        let g = gram(x.view());
        let surr = compute_m(g.view(), 0.15).unwrap();
        assert_eq!(surr.mu_escalations, 0);
        assert!(surr.feasibility_slack <= 0.15 + 1e-8);
        // Check the slack claim directly.
        for j in 0..12 {
            let q = g.dot(&surr.m.row(j));
            for k in 0..12 {
                let target = if k == j { 1.0 } else { 0.0 };
                assert!((q[k] - target).abs() <= 0.15 + 1e-8);
            }
        }
    }

    #[test]
    fn rank_deficient_gram_escalates_and_stays_within_final_mu() {
        // n < p makes the sample Gram singular; a tiny mu is infeasible.
        let x = random_matrix(5, 12, 2);
        let g = gram(x.view());
        let surr = compute_m(g.view(), 0.01).unwrap();
        assert!(surr.mu_escalations > 0);
        assert!(surr.mu > 0.01);
        assert!(surr.feasibility_slack <= surr.mu + 1e-8);
    }

    #[test]
    fn objective_is_non_increasing_in_mu() {
        let x = random_matrix(80, 8, 3);
        let g = gram(x.view());
        let mut last = f64::INFINITY;
        for &mu in &[0.05, 0.1, 0.2, 0.4, 0.8] {
            let surr = compute_m(g.view(), mu).unwrap();
            let total: f64 = (0..8)
                .map(|j| {
                    let row = surr.m.row(j);
                    row.dot(&g.dot(&row))
                })
                .sum();
            assert!(total <= last + 1e-7, "mu={mu}: {total} > {last}");
            last = total;
        }
    }

    #[test]
    fn infeasible_beyond_escalation_budget_errors() {
        // A zero Gram is infeasible until mu reaches 1; starting from 1e-5
        // the 20 allowed escalations stop short of that.
        let zero = Array2::<f64>::zeros((3, 3));
        let err = compute_m(zero.view(), 1e-5).unwrap_err();
        assert!(
            matches!(err, Error::SurrogateInfeasible { .. }),
            "unexpected: {err}"
        );
        // From 0.1 the ladder reaches 1 within the budget and returns zeros.
        let surr = compute_m(zero.view(), 0.1).unwrap();
        assert!(surr.m.iter().all(|&v| v == 0.0));
        assert!(surr.mu >= 1.0);
        assert!(surr.mu_escalations > 0);
    }

    #[test]
    fn rejects_asymmetric_gram_and_bad_mu() {
        let bad = array![[1.0, 0.5], [0.1, 1.0]];
        assert!(compute_m(bad.view(), 0.1).is_err());
        let eye = Array2::<f64>::eye(2);
        assert!(compute_m(eye.view(), 0.0).is_err());
        assert!(compute_m(eye.view(), f64::NAN).is_err());
    }

    #[test]
    fn logistic_weights_at_zero_are_quarter() {
        let x = random_matrix(15, 4, 4);
        let w = compute_logistic_weights(x.view(), Array1::zeros(4).view()).unwrap();
        assert!(w.w.iter().all(|&v| (v - 0.25).abs() < 1e-15));
    }

    #[test]
    fn logistic_weights_saturate_but_stay_positive() {
        // Single column of ones: z = beta_0 for every sample.
        let x = Array2::from_elem((3, 1), 1.0);
        for &b in &[40.0, -40.0] {
            let w = compute_logistic_weights(x.view(), array![b].view()).unwrap();
            for &v in w.w.iter() {
                assert!(v > 0.0 && v < 1e-17, "weight {v}");
            }
        }
        // Extreme predictors stay positive and finite thanks to the cap.
        for &b in &[800.0, -800.0] {
            let w = compute_logistic_weights(x.view(), array![b].view()).unwrap();
            assert!(w.w.iter().all(|&v| v > 0.0 && v.is_finite()));
        }
    }

    #[test]
    fn logistic_weights_match_naive_formula_midrange() {
        let x = random_matrix(30, 5, 5);
        let beta = random_vector(5, 6);
        let w = compute_logistic_weights(x.view(), beta.view()).unwrap();
        let z = x.dot(&beta);
        for k in 0..30 {
            let s = 1.0 / (1.0 + (-z[k]).exp());
            let naive = s * (1.0 - s);
            assert!(
                (w.w[k] - naive).abs() <= 1e-14 * naive.max(1e-300),
                "sample {k}: {} vs {naive}",
                w.w[k]
            );
            assert!(w.w[k] > 0.0 && w.w[k] <= 0.25);
        }
    }

    #[test]
    fn logistic_m_with_constant_weights_reduces_to_scaled_gram() {
        let x = random_matrix(60, 6, 7);
        let weights = LogisticWeights {
            w: Array1::from_elem(60, 0.25),
        };
        let via_logistic = compute_m_logistic(x.view(), &weights, 0.2).unwrap();
        let scaled = gram(x.view()).mapv(|v| 0.25 * v);
        let direct = compute_m(scaled.view(), 0.2).unwrap();
        for (a, b) in via_logistic.m.iter().zip(direct.m.iter()) {
            assert!((a - b).abs() < 1e-7, "{a} vs {b}");
        }
    }

    #[test]
    fn debias_with_exact_inverse_recovers_ols() {
        for seed in 0..5u64 {
            let x = random_matrix(100, 10, 10 + seed);
            let y = random_vector(100, 20 + seed);
            let g = gram(x.view());
            let m_exact = spd_inverse(g.view()).unwrap();
            let ols = ols_on_support(x.view(), y.view(), &SupportSet::full(10)).unwrap();
            for init_seed in [30 + seed, 40 + seed] {
                let beta_hat = random_vector(10, init_seed);
                let debiased =
                    debias_linear(x.view(), y.view(), beta_hat.view(), m_exact.view()).unwrap();
                for j in 0..10 {
                    assert!(
                        (debiased[j] - ols[j]).abs() <= 1e-8,
                        "seed {seed}, coordinate {j}: {} vs {}",
                        debiased[j],
                        ols[j]
                    );
                }
            }
        }
    }

    #[test]
    fn debias_at_ols_is_identity_for_any_m() {
        let x = random_matrix(50, 6, 50);
        let y = random_vector(50, 51);
        let ols = ols_on_support(x.view(), y.view(), &SupportSet::full(6)).unwrap();
        let arbitrary_m = random_matrix(6, 6, 52);
        let debiased = debias_linear(x.view(), y.view(), ols.view(), arbitrary_m.view()).unwrap();
        for j in 0..6 {
            assert!((debiased[j] - ols[j]).abs() < 1e-10);
        }
    }

    #[test]
    fn logistic_debias_at_zero_uses_half_labels() {
        let x = random_matrix(40, 5, 60);
        let y = Array1::from_shape_fn(40, |k| if k % 3 == 0 { 1.0 } else { -1.0 });
        let m = random_matrix(5, 5, 61);
        let debiased =
            debias_logistic(x.view(), y.view(), Array1::zeros(5).view(), m.view()).unwrap();
        // At beta = 0 the residual is exactly y/2.
        let expected = m.dot(&(x.t().dot(&y.mapv(|v| 0.5 * v)) / 40.0));
        for j in 0..5 {
            assert!((debiased[j] - expected[j]).abs() < 1e-12);
        }
    }

    #[test]
    fn logistic_debias_correction_vanishes_on_perfect_fit() {
        // With a huge margin on every sample the sigmoid saturates to the
        // labels and the residual collapses toward zero. Rescale any row
        // that lands near the decision boundary so all margins are large.
        let mut x = random_matrix(30, 3, 62);
        let beta = array![50.0, -30.0, 20.0];
        for mut row in x.rows_mut() {
            let z = row.dot(&beta);
            if z.abs() < 40.0 {
                let scale = 40.0 / z.abs().max(1e-3);
                row.mapv_inplace(|v| v * scale);
            }
        }
        let z = x.dot(&beta);
        let y = z.mapv(|v| if v >= 0.0 { 1.0 } else { -1.0 });
        let m = Array2::<f64>::eye(3);
        let debiased = debias_logistic(x.view(), y.view(), beta.view(), m.view()).unwrap();
        for j in 0..3 {
            assert!(
                (debiased[j] - beta[j]).abs() < 1e-6,
                "coordinate {j}: {} vs {}",
                debiased[j],
                beta[j]
            );
        }
    }

    #[test]
    fn debias_rejects_mismatched_shapes_and_labels() {
        let x = random_matrix(10, 3, 70);
        let y = random_vector(10, 71);
        let m = Array2::<f64>::eye(3);
        assert!(debias_linear(x.view(), y.view(), Array1::zeros(4).view(), m.view()).is_err());
        let m_bad = Array2::<f64>::eye(4);
        assert!(debias_linear(x.view(), y.view(), Array1::zeros(3).view(), m_bad.view()).is_err());
        // Logistic labels must be in {-1, +1}.
        assert!(debias_logistic(x.view(), y.view(), Array1::zeros(3).view(), m.view()).is_err());
    }
}
