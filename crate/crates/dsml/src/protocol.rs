//! The one-round distributed protocol.
//!
//! Each worker fits its own task, debiases the fit, and uploads a single
//! dense coefficient vector. The master stacks the `m` uploads into a
//! `p x m` matrix, hard-thresholds row norms to pick a shared support, and
//! broadcasts that support once. Workers then zero out their debiased
//! estimates off the support. Nothing else crosses the wire: upstream
//! traffic is `m * p` scalars, downstream is `m * |support|`, and there is
//! exactly one round.
//!
//! The "network" here is an in-process message bus with explicit message
//! values and a scalar-count ledger; the claims worth testing are about
//! communication volume and determinism, both observable in-process.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use ndarray::Array1;
use rayon::prelude::*;

use crate::debias::{
    compute_logistic_weights, compute_m, compute_m_logistic, debias_linear, debias_logistic,
    InverseSurrogate,
};
use crate::error::{Error, Result};
use crate::linalg::gram;
use crate::solvers::{solve_lasso, solve_logistic_lasso};
use crate::types::{validate_problem, CoefficientMatrix, Family, SolverOptions, SupportSet, TaskData};

/// A worker's upload: its debiased coefficient vector.
#[derive(Debug, Clone)]
pub struct DebiasedMessage {
    pub task_id: usize,
    /// Dense debiased estimate, length p.
    pub beta_u: Array1<f64>,
    /// Whether the local solver met its convergence test. A `false` value
    /// is a quality flag, not an error; the message is still usable.
    pub solver_converged: bool,
}

/// The master's single downstream message: the selected support.
#[derive(Debug, Clone)]
pub struct SupportBroadcast {
    pub support: SupportSet,
    /// The threshold that produced the support.
    pub lambda_threshold: f64,
}

/// Exact communication accounting for one protocol run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CommStats {
    /// Total scalars sent workers -> master.
    pub upstream_scalars: usize,
    /// Total scalars sent master -> workers (support indices, re-sent to
    /// each of the `m` workers).
    pub downstream_scalars: usize,
    /// Communication rounds; always 1 for this protocol.
    pub rounds: usize,
}

impl CommStats {
    fn for_run(m: usize, p: usize, support_len: usize) -> CommStats {
        CommStats {
            upstream_scalars: m * p,
            downstream_scalars: m * support_len,
            rounds: 1,
        }
    }
}

/// How the master picks the hard threshold.
#[derive(Debug, Clone)]
pub enum ThresholdRule {
    /// Use the given threshold as-is.
    Fixed { value: f64 },
    /// Try every grid value and keep the one whose support minimizes the
    /// Hamming distance to a provided true support (simulation only; ties
    /// resolve to the smallest threshold). `None` uses an automatic grid of
    /// 50 log-spaced values spanning `[min positive row norm / 2, max row
    /// norm]`.
    OracleTuned { grid: Option<Vec<f64>> },
    /// A threshold obtained from [`theoretical_threshold`]; applied exactly
    /// like `Fixed` but kept distinct for reporting.
    Theoretical { value: f64 },
}

/// Cache of linear-family inverse surrogates keyed by `(task_id, mu)`.
///
/// For the linear family the surrogate depends only on the design and `mu`,
/// so sweeps over the regularization level can reuse it. Logistic
/// surrogates depend on the fitted coefficients and are never cached.
#[derive(Default)]
pub struct SurrogateCache {
    map: Mutex<HashMap<(usize, u64), Arc<InverseSurrogate>>>,
}

impl SurrogateCache {
    pub fn new() -> SurrogateCache {
        SurrogateCache::default()
    }

    /// Number of cached surrogates.
    pub fn len(&self) -> usize {
        self.map.lock().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn get_or_compute(
        &self,
        task_id: usize,
        task: &TaskData,
        mu: f64,
    ) -> Result<Arc<InverseSurrogate>> {
        let key = (task_id, mu.to_bits());
        if let Some(hit) = self.map.lock().expect("cache lock").get(&key) {
            return Ok(Arc::clone(hit));
        }
        let sigma_hat = gram(task.x());
        let surrogate = Arc::new(compute_m(sigma_hat.view(), mu)?);
        let mut map = self.map.lock().expect("cache lock");
        let entry = map.entry(key).or_insert_with(|| Arc::clone(&surrogate));
        Ok(Arc::clone(entry))
    }
}

/// One worker's side of the round: local fit, inverse surrogate, debias.
///
/// Solver non-convergence is reported on the message (`solver_converged`)
/// and logged; an infeasible surrogate is fatal.
pub fn worker_step(
    task_id: usize,
    task: &TaskData,
    opts: &SolverOptions,
    mu: f64,
) -> Result<DebiasedMessage> {
    worker_step_cached(task_id, task, opts, mu, None)
}

/// [`worker_step`] with an optional surrogate cache (linear family only).
pub fn worker_step_cached(
    task_id: usize,
    task: &TaskData,
    opts: &SolverOptions,
    mu: f64,
    cache: Option<&SurrogateCache>,
) -> Result<DebiasedMessage> {
    let (beta_u, solver_converged) = match task.family() {
        Family::Linear => {
            let fit = solve_lasso(task.x(), task.y(), opts)?;
            if !fit.converged {
                log::warn!(
                    "task {task_id}: lasso stopped at max_iter={} without converging",
                    opts.max_iter
                );
            }
            let surrogate = match cache {
                Some(cache) => cache.get_or_compute(task_id, task, mu)?,
                None => {
                    let sigma_hat = gram(task.x());
                    Arc::new(compute_m(sigma_hat.view(), mu)?)
                }
            };
            let beta_u = debias_linear(task.x(), task.y(), fit.beta.view(), surrogate.m.view())?;
            (beta_u, fit.converged)
        }
        Family::Logistic => {
            let fit = solve_logistic_lasso(task.x(), task.y(), opts)?;
            if !fit.converged {
                log::warn!(
                    "task {task_id}: logistic lasso stopped at max_iter={} without converging",
                    opts.max_iter
                );
            }
            let weights = compute_logistic_weights(task.x(), fit.beta.view())?;
            let surrogate = compute_m_logistic(task.x(), &weights, mu)?;
            let beta_u = debias_logistic(task.x(), task.y(), fit.beta.view(), surrogate.m.view())?;
            (beta_u, fit.converged)
        }
    };
    Ok(DebiasedMessage {
        task_id,
        beta_u,
        solver_converged,
    })
}

fn row_norms(messages: &[DebiasedMessage]) -> Result<Vec<f64>> {
    let first = messages.first().ok_or(Error::NoTasks)?;
    let p = first.beta_u.len();
    for msg in messages {
        if msg.beta_u.len() != p {
            return Err(Error::DimensionMismatch {
                task: msg.task_id,
                detail: format!("message length {} != {p}", msg.beta_u.len()),
            });
        }
    }
    let mut norms = vec![0.0f64; p];
    for msg in messages {
        for (j, &v) in msg.beta_u.iter().enumerate() {
            norms[j] += v * v;
        }
    }
    for v in &mut norms {
        *v = v.sqrt();
    }
    Ok(norms)
}

fn support_above(norms: &[f64], threshold: f64) -> SupportSet {
    let indices: Vec<usize> = norms
        .iter()
        .enumerate()
        .filter(|(_, &norm)| norm > threshold)
        .map(|(j, _)| j)
        .collect();
    SupportSet::from_sorted(indices, norms.len()).expect("enumerate yields sorted indices")
}

fn default_grid(norms: &[f64]) -> Vec<f64> {
    let mut min_pos = f64::INFINITY;
    let mut max = 0.0f64;
    for &v in norms {
        if v > 0.0 {
            min_pos = min_pos.min(v);
        }
        max = max.max(v);
    }
    if !min_pos.is_finite() {
        // All rows are exactly zero; any threshold gives the empty support.
        return vec![0.0];
    }
    let lo = min_pos / 2.0;
    let hi = max;
    let count = 50;
    (0..count)
        .map(|i| lo * (hi / lo).powf(i as f64 / (count - 1) as f64))
        .collect()
}

fn check_threshold_value(value: f64) -> Result<()> {
    if !(value >= 0.0) || !value.is_finite() {
        return Err(Error::InvalidInput(format!(
            "threshold must be non-negative and finite, got {value}"
        )));
    }
    Ok(())
}

/// The master's side of the round: stack uploads, pick the threshold, and
/// select rows whose stacked norm strictly exceeds it.
///
/// Oracle tuning requires the true support (`tuning_oracle`); omitting it is
/// an error, as is an explicitly empty grid.
pub fn master_threshold(
    messages: &[DebiasedMessage],
    rule: &ThresholdRule,
    tuning_oracle: Option<&SupportSet>,
) -> Result<SupportBroadcast> {
    let norms = row_norms(messages)?;
    let p = norms.len();
    let (support, lambda_threshold) = match rule {
        ThresholdRule::Fixed { value } | ThresholdRule::Theoretical { value } => {
            check_threshold_value(*value)?;
            (support_above(&norms, *value), *value)
        }
        ThresholdRule::OracleTuned { grid } => {
            let truth = tuning_oracle.ok_or(Error::MissingTuningOracle)?;
            if truth.p() != p {
                return Err(Error::InvalidInput(format!(
                    "tuning oracle is over p={} but messages have p={p}",
                    truth.p()
                )));
            }
            let mut candidates = match grid {
                Some(values) => {
                    if values.is_empty() {
                        return Err(Error::InvalidInput(
                            "oracle-tuned threshold grid must be non-empty".into(),
                        ));
                    }
                    for &v in values {
                        check_threshold_value(v)?;
                    }
                    values.clone()
                }
                None => default_grid(&norms),
            };
            candidates.sort_by(|a, b| a.partial_cmp(b).expect("finite thresholds"));

            let in_truth: Vec<bool> = {
                let mut mask = vec![false; p];
                for j in truth.iter() {
                    mask[j] = true;
                }
                mask
            };
            // Ascending scan plus strict improvement resolves ties to the
            // smallest threshold.
            let mut best_lambda = candidates[0];
            let mut best_hamming = usize::MAX;
            for &lambda in &candidates {
                let mismatches = norms
                    .iter()
                    .zip(in_truth.iter())
                    .filter(|(&norm, &truthy)| (norm > lambda) != truthy)
                    .count();
                if mismatches < best_hamming {
                    best_hamming = mismatches;
                    best_lambda = lambda;
                }
            }
            (support_above(&norms, best_lambda), best_lambda)
        }
    };
    Ok(SupportBroadcast {
        support,
        lambda_threshold,
    })
}

/// A worker's final local estimate: the debiased vector restricted to the
/// broadcast support, zero elsewhere.
pub fn worker_finalize(
    message: &DebiasedMessage,
    broadcast: &SupportBroadcast,
) -> Result<Array1<f64>> {
    let p = message.beta_u.len();
    if broadcast.support.p() != p {
        return Err(Error::InvalidInput(format!(
            "broadcast support is over p={} but message has p={p}",
            broadcast.support.p()
        )));
    }
    let mut out = Array1::zeros(p);
    for j in broadcast.support.iter() {
        out[j] = message.beta_u[j];
    }
    Ok(out)
}

/// Everything a protocol run produces.
#[derive(Debug, Clone)]
pub struct DsmlRun {
    /// Final `p x m` coefficient matrix (column per task).
    pub coefficients: CoefficientMatrix,
    /// The selected shared support.
    pub support: SupportSet,
    /// Exact communication accounting (one round).
    pub comm: CommStats,
    /// The threshold the master applied.
    pub lambda_threshold: f64,
}

/// Runs the whole protocol: concurrent worker steps, one master threshold,
/// final filtering. Identical to the sequential composition of
/// [`worker_step`], [`master_threshold`], and [`worker_finalize`] in task
/// order, regardless of scheduling.
pub fn run_dsml(
    tasks: &[TaskData],
    opts: &SolverOptions,
    mu: f64,
    rule: &ThresholdRule,
    tuning_oracle: Option<&SupportSet>,
) -> Result<DsmlRun> {
    run_dsml_cached(tasks, opts, mu, rule, tuning_oracle, None)
}

/// [`run_dsml`] with an optional surrogate cache shared across calls.
pub fn run_dsml_cached(
    tasks: &[TaskData],
    opts: &SolverOptions,
    mu: f64,
    rule: &ThresholdRule,
    tuning_oracle: Option<&SupportSet>,
    cache: Option<&SurrogateCache>,
) -> Result<DsmlRun> {
    let dims = validate_problem(tasks)?;
    let results: Vec<Result<DebiasedMessage>> = tasks
        .par_iter()
        .enumerate()
        .map(|(task_id, task)| worker_step_cached(task_id, task, opts, mu, cache))
        .collect();
    let mut messages = Vec::with_capacity(dims.m);
    for (task_id, result) in results.into_iter().enumerate() {
        messages.push(result.map_err(|e| e.for_task(task_id))?);
    }

    let broadcast = master_threshold(&messages, rule, tuning_oracle)?;
    let columns: Vec<Array1<f64>> = messages
        .iter()
        .map(|msg| worker_finalize(msg, &broadcast))
        .collect::<Result<_>>()?;
    let coefficients = CoefficientMatrix::from_columns(&columns)?;
    let comm = CommStats::for_run(dims.m, dims.p, broadcast.support.len());
    Ok(DsmlRun {
        coefficients,
        support: broadcast.support,
        comm,
        lambda_threshold: broadcast.lambda_threshold,
    })
}

/// Inputs of the theoretical threshold formula. The spectrum bounds refer
/// to the population design covariance; `k` is the subgaussian norm bound
/// of the noise, `sigma_x` the one of the design rows, and `c` the
/// unspecified universal constant of the analysis (only bounded above, so
/// this rule is exposed for study rather than as a practical default).
#[derive(Debug, Clone, Copy)]
pub struct TheoreticalThresholdParams {
    pub k: f64,
    pub sigma: f64,
    pub sigma_x: f64,
    pub lambda_min: f64,
    pub lambda_max: f64,
    pub s: usize,
    pub m: usize,
    pub n: usize,
    pub p: usize,
    pub c: f64,
}

/// The threshold level with theoretical support-recovery guarantees:
///
/// ```text
/// L* = 3 K sigma sqrt((m + ln p)/n)
///    + c sigma_x^4 sqrt(lambda_max) sigma s sqrt(m) ln p / (2 lambda_min^(3/2) n)
/// ```
///
/// (natural logarithm). The guarantee statement bounds `2 L*`, hence the
/// halved constants here.
pub fn theoretical_threshold(params: &TheoreticalThresholdParams) -> f64 {
    let nf = params.n as f64;
    let mf = params.m as f64;
    let ln_p = (params.p as f64).ln();
    let first = 3.0 * params.k * params.sigma * ((mf + ln_p) / nf).sqrt();
    let second = params.c
        * params.sigma_x.powi(4)
        * params.lambda_max.sqrt()
        * params.sigma
        * params.s as f64
        * mf.sqrt()
        * ln_p
        / (2.0 * params.lambda_min.powf(1.5) * nf);
    first + second
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ols_on_support;
    use ndarray::{array, Array2};
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;

    fn message(task_id: usize, values: Vec<f64>) -> DebiasedMessage {
        DebiasedMessage {
            task_id,
            beta_u: Array1::from_vec(values),
            solver_converged: true,
        }
    }

    fn random_matrix(n: usize, p: usize, seed: u64) -> Array2<f64> {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        Array2::from_shape_fn((n, p), |_| rng.sample::<f64, _>(rand_distr::StandardNormal))
    }

    fn random_vector(n: usize, seed: u64) -> Array1<f64> {
        random_matrix(n, 1, seed).column(0).to_owned()
    }

    #[test]
    fn fixed_threshold_selects_strictly_above() {
        let messages = vec![message(0, vec![0.5, 2.0])];
        let picked = master_threshold(&messages, &ThresholdRule::Fixed { value: 1.0 }, None)
            .unwrap();
        assert_eq!(picked.support.indices(), &[1]);

        // The maximum row norm itself is excluded by the strict inequality.
        let boundary = master_threshold(&messages, &ThresholdRule::Fixed { value: 2.0 }, None)
            .unwrap();
        assert!(boundary.support.is_empty());
    }

    #[test]
    fn threshold_is_monotone_in_lambda() {
        let mut rng = ChaCha20Rng::seed_from_u64(1);
        let messages: Vec<DebiasedMessage> = (0..4)
            .map(|t| message(t, (0..12).map(|_| rng.gen::<f64>()).collect()))
            .collect();
        let mut previous: Option<SupportSet> = None;
        for i in 0..10 {
            let lambda = 0.3 * i as f64;
            let picked =
                master_threshold(&messages, &ThresholdRule::Fixed { value: lambda }, None)
                    .unwrap();
            if let Some(bigger) = previous {
                assert!(
                    picked.support.is_subset_of(&bigger),
                    "support grew as lambda rose"
                );
            }
            previous = Some(picked.support);
        }
    }

    #[test]
    fn oracle_tuning_recovers_noiseless_support() {
        // Stacked coefficients equal the truth: 3 nonzero rows out of 8.
        let truth = SupportSet::new(vec![1, 4, 6], 8).unwrap();
        let mut values = vec![0.0; 8];
        for j in truth.iter() {
            values[j] = 0.8;
        }
        let messages = vec![message(0, values.clone()), message(1, values)];
        let picked = master_threshold(
            &messages,
            &ThresholdRule::OracleTuned { grid: None },
            Some(&truth),
        )
        .unwrap();
        assert_eq!(picked.support, truth);
    }

    #[test]
    fn oracle_tuning_breaks_ties_toward_smallest_lambda() {
        let truth = SupportSet::new(vec![0], 2).unwrap();
        let messages = vec![message(0, vec![2.0, 0.0])];
        // Both grid values recover the truth exactly; the smaller one wins.
        let picked = master_threshold(
            &messages,
            &ThresholdRule::OracleTuned {
                grid: Some(vec![1.0, 0.5]),
            },
            Some(&truth),
        )
        .unwrap();
        assert_eq!(picked.lambda_threshold, 0.5);
        assert_eq!(picked.support, truth);
    }

    #[test]
    fn oracle_tuning_requires_truth_and_non_empty_grid() {
        let messages = vec![message(0, vec![1.0, 2.0])];
        let err = master_threshold(&messages, &ThresholdRule::OracleTuned { grid: None }, None)
            .unwrap_err();
        assert!(matches!(err, Error::MissingTuningOracle), "{err}");

        let truth = SupportSet::new(vec![0], 2).unwrap();
        let err = master_threshold(
            &messages,
            &ThresholdRule::OracleTuned {
                grid: Some(vec![]),
            },
            Some(&truth),
        )
        .unwrap_err();
        assert!(err.to_string().contains("non-empty"), "{err}");
    }

    #[test]
    fn mismatched_message_lengths_are_fatal() {
        let messages = vec![message(0, vec![1.0, 2.0]), message(7, vec![1.0, 2.0, 3.0])];
        let err = master_threshold(&messages, &ThresholdRule::Fixed { value: 0.5 }, None)
            .unwrap_err();
        assert!(err.to_string().contains("task 7"), "{err}");
        assert!(
            master_threshold(&[], &ThresholdRule::Fixed { value: 0.5 }, None).is_err()
        );
    }

    #[test]
    fn finalize_filters_exactly() {
        let msg = message(0, vec![1.0, 2.0, 3.0, 4.0]);
        let broadcast = SupportBroadcast {
            support: SupportSet::new(vec![0, 2], 4).unwrap(),
            lambda_threshold: 0.5,
        };
        let filtered = worker_finalize(&msg, &broadcast).unwrap();
        assert_eq!(filtered.to_vec(), vec![1.0, 0.0, 3.0, 0.0]);

        let empty = SupportBroadcast {
            support: SupportSet::empty(4),
            lambda_threshold: 9.0,
        };
        assert!(worker_finalize(&msg, &empty).unwrap().iter().all(|&v| v == 0.0));

        let full = SupportBroadcast {
            support: SupportSet::full(4),
            lambda_threshold: 0.0,
        };
        assert_eq!(worker_finalize(&msg, &full).unwrap(), msg.beta_u);

        // Idempotence: filtering a filtered vector changes nothing.
        let twice = worker_finalize(
            &DebiasedMessage {
                task_id: 0,
                beta_u: filtered.clone(),
                solver_converged: true,
            },
            &broadcast,
        )
        .unwrap();
        assert_eq!(twice, filtered);
    }

    #[test]
    fn comm_stats_match_the_accounting_rule() {
        let stats = CommStats::for_run(10, 200, 10);
        assert_eq!(
            stats,
            CommStats {
                upstream_scalars: 2000,
                downstream_scalars: 100,
                rounds: 1
            }
        );
    }

    #[test]
    fn worker_step_with_zero_lambda_returns_ols() {
        let x = random_matrix(60, 8, 2);
        let truth = random_vector(8, 3);
        let y = x.dot(&truth) + 0.1 * &random_vector(60, 4);
        let task = TaskData::new(x.clone(), y.clone(), Family::Linear, 0.1).unwrap();
        let msg = worker_step(0, &task, &SolverOptions::new(0.0), 0.1).unwrap();
        // At the OLS point the residual gradient vanishes, so debiasing
        // leaves the fit untouched no matter what M is.
        let ols = ols_on_support(x.view(), y.view(), &SupportSet::full(8)).unwrap();
        for j in 0..8 {
            assert!(
                (msg.beta_u[j] - ols[j]).abs() < 1e-6,
                "coordinate {j}: {} vs {}",
                msg.beta_u[j],
                ols[j]
            );
        }
    }

    #[test]
    fn worker_step_is_deterministic() {
        let x = random_matrix(40, 6, 5);
        let y = random_vector(40, 6);
        let task = TaskData::new(x, y, Family::Linear, 1.0).unwrap();
        let opts = SolverOptions::new(0.1);
        let a = worker_step(3, &task, &opts, 0.2).unwrap();
        let b = worker_step(3, &task, &opts, 0.2).unwrap();
        for j in 0..6 {
            assert_eq!(a.beta_u[j].to_bits(), b.beta_u[j].to_bits());
        }
        assert_eq!(a.task_id, 3);
    }

    fn shared_support_tasks(
        m: usize,
        n: usize,
        p: usize,
        support: &SupportSet,
        sigma: f64,
        seed: u64,
    ) -> Vec<TaskData> {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        (0..m)
            .map(|_| {
                let x = Array2::from_shape_fn((n, p), |_| {
                    rng.sample::<f64, _>(rand_distr::StandardNormal)
                });
                let mut beta = Array1::zeros(p);
                for j in support.iter() {
                    beta[j] = 0.5 + 0.5 * rng.gen::<f64>();
                }
                let noise =
                    Array1::from_shape_fn(n, |_| rng.sample::<f64, _>(rand_distr::StandardNormal));
                let y = x.dot(&beta) + sigma * &noise;
                TaskData::new(x, y, Family::Linear, sigma).unwrap()
            })
            .collect()
    }

    #[test]
    fn run_matches_sequential_composition_bitwise() {
        let truth = SupportSet::new(vec![2, 5, 11], 16).unwrap();
        let tasks = shared_support_tasks(4, 80, 16, &truth, 0.3, 7);
        let opts = SolverOptions::new(0.1);
        let rule = ThresholdRule::OracleTuned { grid: None };
        let run = run_dsml(&tasks, &opts, 0.2, &rule, Some(&truth)).unwrap();

        // Sequential reference composition of the three public operations.
        let messages: Vec<DebiasedMessage> = tasks
            .iter()
            .enumerate()
            .map(|(t, task)| worker_step(t, task, &opts, 0.2).unwrap())
            .collect();
        let broadcast = master_threshold(&messages, &rule, Some(&truth)).unwrap();
        for (t, msg) in messages.iter().enumerate() {
            let filtered = worker_finalize(msg, &broadcast).unwrap();
            for j in 0..16 {
                assert_eq!(
                    run.coefficients.entries()[[j, t]].to_bits(),
                    filtered[j].to_bits(),
                    "task {t}, coordinate {j}"
                );
            }
        }
        assert_eq!(run.support, broadcast.support);
        assert_eq!(run.lambda_threshold, broadcast.lambda_threshold);
        assert_eq!(run.comm.rounds, 1);
        assert_eq!(run.comm.upstream_scalars, 4 * 16);
        assert_eq!(run.comm.downstream_scalars, 4 * run.support.len());
    }

    #[test]
    fn high_snr_run_recovers_the_exact_support() {
        let truth = SupportSet::new(vec![2, 5, 11], 20).unwrap();
        let tasks = shared_support_tasks(4, 200, 20, &truth, 0.05, 8);
        let sigma = 0.05;
        let lambda = 4.0 * sigma * ((20f64).ln() / 200.0).sqrt();
        let mu = ((20f64).ln() / 200.0).sqrt();
        let run = run_dsml(
            &tasks,
            &SolverOptions::new(lambda),
            mu,
            &ThresholdRule::OracleTuned { grid: None },
            Some(&truth),
        )
        .unwrap();
        assert_eq!(run.support, truth);
        // Final per-task supports never leave the broadcast support.
        for t in 0..4 {
            let col = run.coefficients.column(t);
            for j in 0..20 {
                if col[j] != 0.0 {
                    assert!(run.support.contains(j));
                }
            }
        }
    }

    #[test]
    fn surrogate_cache_reuses_linear_surrogates() {
        let x = random_matrix(50, 6, 9);
        let y = random_vector(50, 10);
        let task = TaskData::new(x, y, Family::Linear, 1.0).unwrap();
        let cache = SurrogateCache::new();
        let first = cache.get_or_compute(0, &task, 0.2).unwrap();
        let second = cache.get_or_compute(0, &task, 0.2).unwrap();
        assert!(Arc::ptr_eq(&first, &second));
        assert_eq!(cache.len(), 1);
        // A different mu is a different entry.
        cache.get_or_compute(0, &task, 0.3).unwrap();
        assert_eq!(cache.len(), 2);

        let opts = SolverOptions::new(0.1);
        let cached = worker_step_cached(0, &task, &opts, 0.2, Some(&cache)).unwrap();
        let direct = worker_step(0, &task, &opts, 0.2).unwrap();
        for j in 0..6 {
            assert_eq!(cached.beta_u[j].to_bits(), direct.beta_u[j].to_bits());
        }
    }

    #[test]
    fn theoretical_threshold_matches_hand_evaluation() {
        let params = TheoreticalThresholdParams {
            k: 1.0,
            sigma: 1.0,
            sigma_x: 1.0,
            lambda_min: 1.0,
            lambda_max: 1.0,
            s: 10,
            m: 4,
            n: 100,
            p: 100,
            c: 0.0,
        };
        // 3 * sqrt((4 + ln 100) / 100), evaluated independently.
        let expected = 0.8800371110009669;
        let got = theoretical_threshold(&params);
        assert!((got - expected).abs() < 1e-12, "{got}");
    }

    #[test]
    fn theoretical_threshold_second_term_is_linear_in_s() {
        let base = TheoreticalThresholdParams {
            k: 1.0,
            sigma: 2.0,
            sigma_x: 1.3,
            lambda_min: 0.5,
            lambda_max: 2.0,
            s: 10,
            m: 6,
            n: 150,
            p: 80,
            c: 1.0,
        };
        let first_term_only = theoretical_threshold(&TheoreticalThresholdParams { c: 0.0, ..base });
        let with_s = theoretical_threshold(&base);
        let with_2s = theoretical_threshold(&TheoreticalThresholdParams { s: 20, ..base });
        let second_s = with_s - first_term_only;
        let second_2s = with_2s - first_term_only;
        assert!((second_2s - 2.0 * second_s).abs() < 1e-12);
    }

    #[test]
    fn theoretical_threshold_decreases_in_n() {
        let mut last = f64::INFINITY;
        for &n in &[50usize, 100, 200, 400, 800] {
            let params = TheoreticalThresholdParams {
                k: 1.0,
                sigma: 1.0,
                sigma_x: 1.1,
                lambda_min: 0.4,
                lambda_max: 2.1,
                s: 10,
                m: 5,
                n,
                p: 200,
                c: 100.0,
            };
            let value = theoretical_threshold(&params);
            assert!(value < last, "n={n}: {value} did not decrease");
            last = value;
        }
    }

    #[test]
    fn array_norms_stack_across_tasks() {
        // Two tasks, p=2: row norms are sqrt(sum over tasks of squares).
        let messages = vec![message(0, vec![3.0, 0.0]), message(1, vec![4.0, 1.0])];
        let picked = master_threshold(&messages, &ThresholdRule::Fixed { value: 4.9 }, None)
            .unwrap();
        // Row 0 norm = 5, row 1 norm = 1.
        assert_eq!(picked.support.indices(), &[0]);
        let none = master_threshold(&messages, &ThresholdRule::Fixed { value: 5.0 }, None)
            .unwrap();
        assert!(none.support.is_empty());
    }

    #[test]
    fn logistic_worker_step_produces_dense_message() {
        let x = random_matrix(80, 6, 11);
        let truth = array![2.0, -2.0, 0.0, 0.0, 0.0, 0.0];
        let z = x.dot(&truth);
        let mut rng = ChaCha20Rng::seed_from_u64(12);
        let y = Array1::from_shape_fn(80, |k| {
            if rng.gen::<f64>() < crate::solvers::sigmoid(z[k]) {
                1.0
            } else {
                -1.0
            }
        });
        let task = TaskData::new(x, y, Family::Logistic, 1.0).unwrap();
        let msg = worker_step(0, &task, &SolverOptions::new(0.05), 0.3).unwrap();
        assert_eq!(msg.beta_u.len(), 6);
        assert!(msg.beta_u.iter().all(|v| v.is_finite()));
        // Debiasing spreads mass; the message is dense, not sparse.
        assert!(msg.beta_u.iter().filter(|&&v| v != 0.0).count() > 3);
    }
}
