//! Evaluation metrics: support recovery, estimation error, prediction risk.

use ndarray::Array2;

use crate::error::{Error, Result};
use crate::types::{CoefficientMatrix, SupportSet, TaskData};

/// Metrics of one fitted run against the ground truth.
#[derive(Debug, Clone)]
pub struct RunMetrics {
    /// Symmetric-difference size between estimated and true supports.
    pub hamming: usize,
    /// Sum over rows of the Euclidean norms of the coefficient error.
    pub est_error_l1l2: f64,
    /// Population prediction risk, averaged over tasks.
    pub pred_error: f64,
    /// Per-task population prediction risk (length m).
    pub per_task_pred: Vec<f64>,
}

/// Hamming distance `|a symmetric-difference b|` between two supports over
/// the same variable count.
pub fn hamming(a: &SupportSet, b: &SupportSet) -> Result<usize> {
    if a.p() != b.p() {
        return Err(Error::InvalidInput(format!(
            "supports are over different variable counts: {} vs {}",
            a.p(),
            b.p()
        )));
    }
    let (xs, ys) = (a.indices(), b.indices());
    let (mut i, mut k, mut count) = (0usize, 0usize, 0usize);
    while i < xs.len() && k < ys.len() {
        match xs[i].cmp(&ys[k]) {
            std::cmp::Ordering::Less => {
                count += 1;
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                count += 1;
                k += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                k += 1;
            }
        }
    }
    Ok(count + (xs.len() - i) + (ys.len() - k))
}

fn check_same_shape(a: &CoefficientMatrix, b: &CoefficientMatrix) -> Result<()> {
    if a.p() != b.p() || a.m() != b.m() {
        return Err(Error::InvalidInput(format!(
            "coefficient matrices differ in shape: {}x{} vs {}x{}",
            a.p(),
            a.m(),
            b.p(),
            b.m()
        )));
    }
    Ok(())
}

/// Row-grouped estimation error `sum_j ||row_j(b_est) - row_j(b_star)||_2`.
pub fn estimation_error(b_est: &CoefficientMatrix, b_star: &CoefficientMatrix) -> Result<f64> {
    check_same_shape(b_est, b_star)?;
    let mut total = 0.0;
    for j in 0..b_est.p() {
        let mut sq = 0.0;
        for t in 0..b_est.m() {
            let d = b_est.entries()[[j, t]] - b_star.entries()[[j, t]];
            sq += d * d;
        }
        total += sq.sqrt();
    }
    Ok(total)
}

fn resolve_sigma<'a>(
    sigmas: &'a [Array2<f64>],
    t: usize,
    m: usize,
    p: usize,
) -> Result<&'a Array2<f64>> {
    let sigma = match sigmas.len() {
        1 => &sigmas[0],
        len if len == m => &sigmas[t],
        len => {
            return Err(Error::InvalidInput(format!(
                "expected 1 or {m} covariance matrices, got {len}"
            )))
        }
    };
    if sigma.dim() != (p, p) {
        return Err(Error::InvalidInput(format!(
            "covariance for task {t} is {}x{} but p={p}",
            sigma.nrows(),
            sigma.ncols()
        )));
    }
    Ok(sigma)
}

/// Per-task population prediction risk `d_t' Sigma_t d_t` with
/// `d_t = b_est_t - b_star_t`. Pass a single covariance to share it across
/// all tasks.
pub fn prediction_errors_per_task(
    b_est: &CoefficientMatrix,
    b_star: &CoefficientMatrix,
    sigmas: &[Array2<f64>],
) -> Result<Vec<f64>> {
    check_same_shape(b_est, b_star)?;
    let (p, m) = (b_est.p(), b_est.m());
    let mut per_task = Vec::with_capacity(m);
    for t in 0..m {
        let sigma = resolve_sigma(sigmas, t, m, p)?;
        let delta = &b_est.column(t).to_owned() - &b_star.column(t);
        per_task.push(delta.dot(&sigma.dot(&delta)));
    }
    Ok(per_task)
}

/// Population prediction risk averaged over tasks:
/// `(1/m) sum_t d_t' Sigma_t d_t`.
pub fn prediction_error(
    b_est: &CoefficientMatrix,
    b_star: &CoefficientMatrix,
    sigmas: &[Array2<f64>],
) -> Result<f64> {
    let per_task = prediction_errors_per_task(b_est, b_star, sigmas)?;
    Ok(per_task.iter().sum::<f64>() / per_task.len() as f64)
}

/// In-sample prediction error `(1/(n m)) sum_t ||X_t d_t||_2^2`, the
/// empirical counterpart of [`prediction_error`] evaluated on the observed
/// designs.
pub fn prediction_error_insample(
    b_est: &CoefficientMatrix,
    b_star: &CoefficientMatrix,
    tasks: &[TaskData],
) -> Result<f64> {
    check_same_shape(b_est, b_star)?;
    let m = b_est.m();
    if tasks.len() != m {
        return Err(Error::InvalidInput(format!(
            "expected {m} tasks, got {}",
            tasks.len()
        )));
    }
    let mut total = 0.0;
    let mut nm = 0.0;
    for (t, task) in tasks.iter().enumerate() {
        if task.p() != b_est.p() {
            return Err(Error::InvalidInput(format!(
                "task {t} has p={} but coefficients have p={}",
                task.p(),
                b_est.p()
            )));
        }
        let delta = &b_est.column(t).to_owned() - &b_star.column(t);
        let fitted = task.x().dot(&delta);
        total += fitted.dot(&fitted);
        nm += task.n() as f64;
    }
    Ok(total / nm)
}

impl RunMetrics {
    /// Evaluates every metric of a fitted coefficient matrix at once.
    pub fn evaluate(
        b_est: &CoefficientMatrix,
        b_star: &CoefficientMatrix,
        s_hat: &SupportSet,
        s_star: &SupportSet,
        sigmas: &[Array2<f64>],
    ) -> Result<RunMetrics> {
        let per_task_pred = prediction_errors_per_task(b_est, b_star, sigmas)?;
        let pred_error = per_task_pred.iter().sum::<f64>() / per_task_pred.len() as f64;
        Ok(RunMetrics {
            hamming: hamming(s_hat, s_star)?,
            est_error_l1l2: estimation_error(b_est, b_star)?,
            pred_error,
            per_task_pred,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::{array, Array1};
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;

    fn random_coefs(p: usize, m: usize, seed: u64) -> CoefficientMatrix {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        CoefficientMatrix::from_entries(Array2::from_shape_fn((p, m), |_| {
            rng.sample::<f64, _>(rand_distr::StandardNormal)
        }))
    }

    #[test]
    fn hamming_basic_cases() {
        let p = 10;
        let a = SupportSet::new(vec![1, 2], p).unwrap();
        let b = SupportSet::new(vec![2, 3], p).unwrap();
        assert_eq!(hamming(&a, &a).unwrap(), 0);
        assert_eq!(hamming(&a, &b).unwrap(), 2);
        let truth = SupportSet::new((0..10).collect(), p).unwrap();
        assert_eq!(hamming(&SupportSet::empty(p), &truth).unwrap(), 10);
        assert!(hamming(&a, &SupportSet::empty(4)).is_err());
    }

    #[test]
    fn hamming_is_symmetric() {
        let p = 30;
        let a = SupportSet::new(vec![0, 4, 9, 20], p).unwrap();
        let b = SupportSet::new(vec![4, 9, 21, 22, 29], p).unwrap();
        assert_eq!(hamming(&a, &b).unwrap(), hamming(&b, &a).unwrap());
        assert_eq!(hamming(&a, &b).unwrap(), 5);
    }

    #[test]
    fn estimation_error_single_row_difference() {
        let mut a = Array2::zeros((4, 2));
        a[[2, 0]] = 3.0;
        a[[2, 1]] = 4.0;
        let b_est = CoefficientMatrix::from_entries(a);
        let b_star = CoefficientMatrix::zeros(4, 2);
        assert_eq!(estimation_error(&b_est, &b_star).unwrap(), 5.0);
        assert_eq!(estimation_error(&b_star, &b_star).unwrap(), 0.0);
    }

    #[test]
    fn estimation_error_matches_naive_oracle() {
        let b_est = random_coefs(5, 3, 1);
        let b_star = random_coefs(5, 3, 2);
        let got = estimation_error(&b_est, &b_star).unwrap();
        let mut expected = 0.0;
        for j in 0..5 {
            let mut sq = 0.0;
            for t in 0..3 {
                let d = b_est.entries()[[j, t]] - b_star.entries()[[j, t]];
                sq += d * d;
            }
            expected += sq.sqrt();
        }
        assert!((got - expected).abs() < 1e-12);
    }

    #[test]
    fn prediction_error_identity_covariance_is_frobenius() {
        let b_est = random_coefs(6, 4, 3);
        let b_star = random_coefs(6, 4, 4);
        let eye = vec![Array2::<f64>::eye(6)];
        let got = prediction_error(&b_est, &b_star, &eye).unwrap();
        let diff = &b_est.entries().to_owned() - &b_star.entries();
        let frob_sq: f64 = diff.iter().map(|v| v * v).sum();
        assert!((got - frob_sq / 4.0).abs() < 1e-12);
        assert_eq!(prediction_error(&b_star, &b_star, &eye).unwrap(), 0.0);
    }

    #[test]
    fn prediction_error_matches_direct_quadratic_form() {
        let b_est = random_coefs(4, 2, 5);
        let b_star = random_coefs(4, 2, 6);
        // A fixed SPD covariance.
        let a = array![
            [2.0, 0.3, 0.1, 0.0],
            [0.3, 1.5, 0.2, 0.0],
            [0.1, 0.2, 1.0, 0.4],
            [0.0, 0.0, 0.4, 2.5]
        ];
        let got = prediction_error(&b_est, &b_star, &[a.clone()]).unwrap();
        let mut expected = 0.0;
        for t in 0..2 {
            let delta: Array1<f64> = &b_est.column(t).to_owned() - &b_star.column(t);
            let mut q = 0.0;
            for i in 0..4 {
                for j in 0..4 {
                    q += delta[i] * a[[i, j]] * delta[j];
                }
            }
            expected += q;
        }
        assert!((got - expected / 2.0).abs() < 1e-12);
    }

    #[test]
    fn metrics_are_permutation_invariant() {
        let p = 6;
        let b_est = random_coefs(p, 3, 7);
        let b_star = random_coefs(p, 3, 8);
        let s_hat = SupportSet::new(vec![0, 2, 5], p).unwrap();
        let s_star = SupportSet::new(vec![0, 3], p).unwrap();
        let perm = [3usize, 0, 4, 5, 1, 2]; // new index of each old variable

        let permute_coefs = |b: &CoefficientMatrix| {
            let mut out = Array2::zeros((p, 3));
            for j in 0..p {
                for t in 0..3 {
                    out[[perm[j], t]] = b.entries()[[j, t]];
                }
            }
            CoefficientMatrix::from_entries(out)
        };
        let permute_support = |s: &SupportSet| {
            SupportSet::new(s.iter().map(|j| perm[j]).collect(), p).unwrap()
        };

        assert_eq!(
            hamming(&s_hat, &s_star).unwrap(),
            hamming(&permute_support(&s_hat), &permute_support(&s_star)).unwrap()
        );
        let orig = estimation_error(&b_est, &b_star).unwrap();
        let permuted = estimation_error(&permute_coefs(&b_est), &permute_coefs(&b_star)).unwrap();
        assert!((orig - permuted).abs() < 1e-12);
    }

    #[test]
    fn insample_error_matches_direct_evaluation() {
        let mut rng = ChaCha20Rng::seed_from_u64(9);
        let tasks: Vec<TaskData> = (0..2)
            .map(|_| {
                let x = Array2::from_shape_fn((8, 3), |_| {
                    rng.sample::<f64, _>(rand_distr::StandardNormal)
                });
                let y = Array1::zeros(8);
                TaskData::new(x, y, crate::types::Family::Linear, 1.0).unwrap()
            })
            .collect();
        let b_est = random_coefs(3, 2, 10);
        let b_star = random_coefs(3, 2, 11);
        let got = prediction_error_insample(&b_est, &b_star, &tasks).unwrap();
        let mut expected = 0.0;
        for (t, task) in tasks.iter().enumerate() {
            let delta = &b_est.column(t).to_owned() - &b_star.column(t);
            let fitted = task.x().dot(&delta);
            expected += fitted.dot(&fitted);
        }
        expected /= 16.0;
        assert!((got - expected).abs() < 1e-12);
    }

    #[test]
    fn evaluate_bundles_everything() {
        let b_star = random_coefs(5, 2, 12);
        let b_est = random_coefs(5, 2, 13);
        let s_star = SupportSet::new(vec![0, 1], 5).unwrap();
        let s_hat = SupportSet::new(vec![1, 4], 5).unwrap();
        let eye = vec![Array2::<f64>::eye(5)];
        let metrics = RunMetrics::evaluate(&b_est, &b_star, &s_hat, &s_star, &eye).unwrap();
        assert_eq!(metrics.hamming, 2);
        assert_eq!(metrics.per_task_pred.len(), 2);
        assert!(metrics.est_error_l1l2 > 0.0);
        assert!(metrics.pred_error > 0.0);
    }
}
