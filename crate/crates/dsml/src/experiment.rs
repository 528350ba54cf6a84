//! Declarative experiment harness.
//!
//! A TOML config describes a synthetic-data template, a sweep over either
//! the per-task sample size `n` or the task count `m`, the methods to
//! compare, and the tuning policy. The harness generates one dataset per
//! (sweep point, replication) pair — identical for every method — fits each
//! method, evaluates the metrics, and writes one CSV row per
//! (method, sweep point, replication).
//!
//! # Config grammar
//!
//! ```toml
//! [data]                # dataset template (see GenSpec); the swept field
//! p = 200               # and the seed are overwritten by the harness
//! s = 10
//! sigma = 1.0
//! rho = 0.5
//! family = "linear"
//!
//! [sweep]
//! parameter = "n"       # "n" or "m"
//! values = [50, 100, 150]
//! m = 10                # the fixed dimension (use `n = ...` when sweeping m)
//!
//! [run]
//! methods = ["lasso", "dsml"]
//! replications = 50     # default 200
//! seed = 7              # base seed, default 0
//! output = "results.csv"
//! record_timing = false # default; keeping it off makes reruns byte-identical
//!
//! [tuning]              # optional; all fields have defaults
//! lasso_lambda = "oracle"    # "oracle", "theorem", or a number
//! group_lambda = "oracle"    # "oracle" or a number
//! dsml_lambda = "oracle"     # "oracle", "theorem", or a number
//! dsml_threshold = "oracle"  # "oracle" or a number
//! # lambda_grid = [0.5, 0.25, 0.1]     # explicit grid instead of the default
//! # threshold_grid = [0.8, 0.4, 0.2]
//! # mu = 0.2                           # instead of sqrt(log p / n)
//! ```
//!
//! "oracle" tunes against the true support to minimize Hamming error
//! (simulation-only); "theorem" uses `4 sigma sqrt(log p / n)`. The default
//! lambda grid has 20 log-spaced points per replication spanning three
//! decades below the smallest lambda that zeroes every task; tie-breaks
//! prefer the larger lambda (stronger sparsity) and the smaller threshold.
//!
//! # Output schema
//!
//! The CSV columns, in fixed order:
//! `method, sweep_value, replication, hamming, est_error, pred_error,
//! pred_error_insample, wall_time_ms, comm_upstream, comm_downstream,
//! error`.
//!
//! `hamming` is the support symmetric difference against the truth; for the
//! per-task lasso it is averaged over tasks (so it may be fractional).
//! `est_error` is the row-grouped estimation error divided by `sqrt(m)`,
//! which puts different task counts on a comparable scale. `pred_error` is
//! the population prediction risk and `pred_error_insample` its empirical
//! counterpart. Communication counts follow the protocol ledger for dsml;
//! the centralized group methods are charged `m*n*(p+1)` scalars up (all
//! data) and `m*p` down, and the purely local lasso is charged zero.
//! `wall_time_ms` is 0 unless `record_timing` is set. A failed fit leaves
//! the numeric fields as `nan`, fills `error`, and the run continues;
//! summaries skip such rows.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::Deserialize;

use crate::datagen::{ar_covariance, generate, Dataset, GenSpec};
use crate::error::{Error, Result};
use crate::linalg::ols_on_support;
use crate::metrics::{estimation_error, hamming, prediction_error, prediction_error_insample};
use crate::protocol::{run_dsml_cached, SurrogateCache, ThresholdRule};
use crate::solvers::{
    solve_group_lasso_warm, solve_lasso_warm, solve_logistic_lasso_warm, LassoFit,
};
use crate::types::{CoefficientMatrix, Family, SolverOptions, SupportSet, TaskData};

/// A method the harness can run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Independent per-task lasso; no communication.
    Lasso,
    /// Centralized group lasso over the pooled data.
    GroupLasso,
    /// Group lasso for selection, then per-task refit on the support.
    RefitGroupLasso,
    /// The one-round distributed protocol.
    Dsml,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Method::Lasso => "lasso",
            Method::GroupLasso => "group_lasso",
            Method::RefitGroupLasso => "refit_group_lasso",
            Method::Dsml => "dsml",
        };
        write!(f, "{name}")
    }
}

/// Which dimension the sweep varies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepParameter {
    N,
    M,
}

/// How a regularization level or threshold is chosen.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TuneRule {
    /// Grid search minimizing Hamming distance to the true support.
    Oracle,
    /// `4 sigma sqrt(log p / n)` (linear family only).
    Theorem,
    /// Use this exact value.
    Fixed(f64),
}

impl Default for TuneRule {
    fn default() -> Self {
        TuneRule::Oracle
    }
}

impl<'de> Deserialize<'de> for TuneRule {
    fn deserialize<D>(deserializer: D) -> std::result::Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Number(f64),
            Text(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Number(v) => {
                if v.is_finite() && v >= 0.0 {
                    Ok(TuneRule::Fixed(v))
                } else {
                    Err(serde::de::Error::custom(format!(
                        "fixed tuning value must be non-negative and finite, got {v}"
                    )))
                }
            }
            Raw::Text(s) => match s.as_str() {
                "oracle" => Ok(TuneRule::Oracle),
                "theorem" => Ok(TuneRule::Theorem),
                other => Err(serde::de::Error::custom(format!(
                    "expected \"oracle\", \"theorem\", or a number, got \"{other}\""
                ))),
            },
        }
    }
}

fn default_replications() -> usize {
    200
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSection {
    pub parameter: SweepParameter,
    pub values: Vec<usize>,
    /// Fixed task count when sweeping n.
    #[serde(default)]
    pub m: Option<usize>,
    /// Fixed sample size when sweeping m.
    #[serde(default)]
    pub n: Option<usize>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunSection {
    pub methods: Vec<Method>,
    #[serde(default = "default_replications")]
    pub replications: usize,
    #[serde(default)]
    pub seed: u64,
    pub output: PathBuf,
    #[serde(default)]
    pub record_timing: bool,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TuningSection {
    #[serde(default)]
    pub lasso_lambda: TuneRule,
    #[serde(default)]
    pub group_lambda: TuneRule,
    #[serde(default)]
    pub dsml_lambda: TuneRule,
    #[serde(default)]
    pub dsml_threshold: TuneRule,
    /// Explicit lambda grid (overrides the automatic one).
    #[serde(default)]
    pub lambda_grid: Option<Vec<f64>>,
    /// Explicit threshold grid for oracle-tuned thresholding.
    #[serde(default)]
    pub threshold_grid: Option<Vec<f64>>,
    /// Fixed constraint level for the inverse surrogate; default
    /// `sqrt(log p / n)`.
    #[serde(default)]
    pub mu: Option<f64>,
}

/// The whole experiment description.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub data: GenSpec,
    pub sweep: SweepSection,
    pub run: RunSection,
    #[serde(default)]
    pub tuning: TuningSection,
}

impl ExperimentConfig {
    /// Parses and validates a TOML config.
    pub fn from_toml(text: &str) -> Result<ExperimentConfig> {
        let config: ExperimentConfig =
            toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        if self.sweep.values.is_empty() {
            return Err(Error::Config("sweep.values must be non-empty".into()));
        }
        if self.sweep.values.iter().any(|&v| v == 0) {
            return Err(Error::Config("sweep.values must be positive".into()));
        }
        match self.sweep.parameter {
            SweepParameter::N => {
                if self.sweep.m.is_none() {
                    return Err(Error::Config(
                        "sweeping n requires the fixed task count sweep.m".into(),
                    ));
                }
            }
            SweepParameter::M => {
                if self.sweep.n.is_none() {
                    return Err(Error::Config(
                        "sweeping m requires the fixed sample size sweep.n".into(),
                    ));
                }
            }
        }
        if self.run.methods.is_empty() {
            return Err(Error::Config("run.methods must be non-empty".into()));
        }
        if self.run.replications == 0 {
            return Err(Error::Config("run.replications must be at least 1".into()));
        }
        for rule in [self.tuning.lasso_lambda, self.tuning.dsml_lambda] {
            if rule == TuneRule::Theorem && self.data.family != Family::Linear {
                return Err(Error::Config(
                    "the \"theorem\" lambda rule is defined only for the linear family".into(),
                ));
            }
        }
        if self.tuning.group_lambda == TuneRule::Theorem {
            return Err(Error::Config(
                "the \"theorem\" rule does not apply to group_lambda".into(),
            ));
        }
        if self.tuning.dsml_threshold == TuneRule::Theorem {
            return Err(Error::Config(
                "dsml_threshold accepts \"oracle\" or a number (the theoretical rule \
                 is a library-level analysis tool)"
                    .into(),
            ));
        }
        if let Some(grid) = &self.tuning.lambda_grid {
            if grid.is_empty() || grid.iter().any(|v| !v.is_finite() || *v < 0.0) {
                return Err(Error::Config(
                    "tuning.lambda_grid must be non-empty, non-negative, finite".into(),
                ));
            }
        }
        if let Some(grid) = &self.tuning.threshold_grid {
            if grid.is_empty() || grid.iter().any(|v| !v.is_finite() || *v < 0.0) {
                return Err(Error::Config(
                    "tuning.threshold_grid must be non-empty, non-negative, finite".into(),
                ));
            }
        }
        if let Some(mu) = self.tuning.mu {
            if !mu.is_finite() || mu <= 0.0 {
                return Err(Error::Config(format!(
                    "tuning.mu must be positive and finite, got {mu}"
                )));
            }
        }
        // The template must be generable at every sweep point.
        for &value in &self.sweep.values {
            self.spec_for(value).validate()?;
        }
        Ok(())
    }

    /// The dataset spec at one sweep point (seed filled in later).
    fn spec_for(&self, sweep_value: usize) -> GenSpec {
        let mut spec = self.data.clone();
        match self.sweep.parameter {
            SweepParameter::N => {
                spec.n = sweep_value;
                spec.m = self.sweep.m.expect("validated");
            }
            SweepParameter::M => {
                spec.m = sweep_value;
                spec.n = self.sweep.n.expect("validated");
            }
        }
        spec
    }
}

/// One output record.
#[derive(Debug, Clone)]
pub struct ResultRow {
    pub method: Method,
    pub sweep_value: usize,
    pub replication: usize,
    pub hamming: f64,
    pub est_error: f64,
    pub pred_error: f64,
    pub pred_error_insample: f64,
    pub wall_time_ms: f64,
    pub comm_upstream: usize,
    pub comm_downstream: usize,
    /// Empty on success; a sanitized error message otherwise.
    pub error: String,
}

pub const CSV_HEADER: &str = "method,sweep_value,replication,hamming,est_error,pred_error,\
pred_error_insample,wall_time_ms,comm_upstream,comm_downstream,error";

/// splitmix64 finalizer; the standard 64-bit mixing constants.
fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Dataset seed for one (sweep point, replication) cell. A pure function of
/// its arguments, so the data a method sees never depends on which other
/// methods run.
pub fn derive_seed(base: u64, sweep_index: usize, replication: usize) -> u64 {
    mix64(
        mix64(mix64(base).wrapping_add(sweep_index as u64)).wrapping_add(replication as u64),
    )
}

fn theorem_lambda(sigma: f64, p: usize, n: usize) -> f64 {
    4.0 * sigma * ((p as f64).ln() / n as f64).sqrt()
}

fn default_mu(p: usize, n: usize) -> f64 {
    ((p as f64).ln() / n as f64).sqrt()
}

/// Smallest lambda that zeroes every task's lasso solution, maximized over
/// tasks (the natural top of a tuning grid).
fn lambda_null_bound(tasks: &[TaskData]) -> f64 {
    let mut bound = 0.0f64;
    for task in tasks {
        let n = task.n() as f64;
        let scale = match task.family() {
            Family::Linear => 2.0 / n,
            Family::Logistic => 0.5 / n,
        };
        let grad = task.x().t().dot(&task.y());
        for &g in grad.iter() {
            bound = bound.max(scale * g.abs());
        }
    }
    bound
}

/// 20 log-spaced values from `top` down three decades, descending.
fn log_grid_descending(top: f64) -> Vec<f64> {
    let top = if top > 0.0 { top } else { 1.0 };
    let count = 20;
    (0..count)
        .map(|i| top * 1e-3f64.powf(i as f64 / (count - 1) as f64))
        .collect()
}

fn lambda_grid(tuning: &TuningSection, tasks: &[TaskData]) -> Vec<f64> {
    let mut grid = match &tuning.lambda_grid {
        Some(values) => values.clone(),
        None => log_grid_descending(lambda_null_bound(tasks)),
    };
    grid.sort_by(|a, b| b.partial_cmp(a).expect("finite lambdas"));
    grid
}

fn solve_one(
    task: &TaskData,
    opts: &SolverOptions,
    warm: Option<&LassoFit>,
) -> Result<LassoFit> {
    let init = warm.map(|fit| fit.beta.view());
    match task.family() {
        Family::Linear => solve_lasso_warm(task.x(), task.y(), opts, init),
        Family::Logistic => solve_logistic_lasso_warm(task.x(), task.y(), opts, init),
    }
}

fn support_of(beta: &ndarray::Array1<f64>) -> SupportSet {
    let indices: Vec<usize> = beta
        .iter()
        .enumerate()
        .filter(|(_, &v)| v != 0.0)
        .map(|(j, _)| j)
        .collect();
    SupportSet::from_sorted(indices, beta.len()).expect("enumerate yields sorted indices")
}

struct MethodOutcome {
    b_est: CoefficientMatrix,
    hamming: f64,
    comm_upstream: usize,
    comm_downstream: usize,
}

/// Per-task lasso. Oracle tuning shares one lambda across tasks and
/// minimizes the mean per-task Hamming distance; ties keep the larger
/// lambda. The reported Hamming value is that mean, which may be
/// fractional.
fn run_lasso_method(dataset: &Dataset, tuning: &TuningSection) -> Result<MethodOutcome> {
    let tasks = &dataset.tasks;
    let truth = &dataset.support;
    let m = tasks.len();

    let finish = |fits: &[LassoFit]| -> Result<MethodOutcome> {
        let columns: Vec<_> = fits.iter().map(|f| f.beta.clone()).collect();
        let mut total = 0usize;
        for fit in fits {
            total += hamming(&support_of(&fit.beta), truth)?;
        }
        Ok(MethodOutcome {
            b_est: CoefficientMatrix::from_columns(&columns)?,
            hamming: total as f64 / m as f64,
            comm_upstream: 0,
            comm_downstream: 0,
        })
    };

    match tuning.lasso_lambda {
        TuneRule::Fixed(lambda) => {
            let fits: Vec<LassoFit> = tasks
                .iter()
                .map(|task| solve_one(task, &SolverOptions::new(lambda), None))
                .collect::<Result<_>>()?;
            finish(&fits)
        }
        TuneRule::Theorem => {
            let lambda = theorem_lambda(dataset.spec.sigma, dataset.spec.p, dataset.spec.n);
            let fits: Vec<LassoFit> = tasks
                .iter()
                .map(|task| solve_one(task, &SolverOptions::new(lambda), None))
                .collect::<Result<_>>()?;
            finish(&fits)
        }
        TuneRule::Oracle => {
            let grid = lambda_grid(tuning, tasks);
            log::debug!("lasso lambda grid: {grid:?}");
            let mut warm: Vec<Option<LassoFit>> = vec![None; m];
            let mut best: Option<(usize, Vec<LassoFit>)> = None;
            for &lambda in &grid {
                let opts = SolverOptions::new(lambda);
                let mut fits = Vec::with_capacity(m);
                for (t, task) in tasks.iter().enumerate() {
                    fits.push(solve_one(task, &opts, warm[t].as_ref())?);
                }
                let mut total = 0usize;
                for fit in &fits {
                    total += hamming(&support_of(&fit.beta), truth)?;
                }
                let improves = match &best {
                    Some((best_total, _)) => total < *best_total,
                    None => true,
                };
                if improves {
                    best = Some((total, fits.clone()));
                }
                warm = fits.into_iter().map(Some).collect();
            }
            let (_, fits) = best.expect("grid is non-empty");
            finish(&fits)
        }
    }
}

/// Centralized communication charge: every worker ships its full data to
/// the master (`n * (p + 1)` scalars each) and receives its coefficient
/// vector back.
fn centralized_comm(n: usize, p: usize, m: usize) -> (usize, usize) {
    (m * n * (p + 1), m * p)
}

/// Group lasso, optionally followed by a per-task refit on the selected
/// rows. Oracle tuning minimizes the Hamming distance of the row support;
/// ties keep the larger lambda.
fn run_group_method(
    dataset: &Dataset,
    tuning: &TuningSection,
    refit: bool,
) -> Result<MethodOutcome> {
    let tasks = &dataset.tasks;
    let truth = &dataset.support;
    let spec = &dataset.spec;

    let fit_b = match tuning.group_lambda {
        TuneRule::Fixed(lambda) => {
            solve_group_lasso_warm(tasks, &SolverOptions::new(lambda), None)?.b
        }
        TuneRule::Theorem => unreachable!("rejected by config validation"),
        TuneRule::Oracle => {
            let grid = lambda_grid(tuning, tasks);
            log::debug!("group lasso lambda grid: {grid:?}");
            let mut warm: Option<CoefficientMatrix> = None;
            let mut best: Option<(usize, CoefficientMatrix)> = None;
            for &lambda in &grid {
                let fit =
                    solve_group_lasso_warm(tasks, &SolverOptions::new(lambda), warm.as_ref())?;
                let h = hamming(&fit.b.nonzero_rows(), truth)?;
                let improves = match &best {
                    Some((best_h, _)) => h < *best_h,
                    None => true,
                };
                if improves {
                    best = Some((h, fit.b.clone()));
                }
                warm = Some(fit.b);
            }
            best.expect("grid is non-empty").1
        }
    };

    let support = fit_b.nonzero_rows();
    let b_est = if refit {
        // Reuse the tuned selection; refit unpenalized coefficients per
        // task on that support.
        let mut columns = Vec::with_capacity(tasks.len());
        for (t, task) in tasks.iter().enumerate() {
            let column = match task.family() {
                Family::Linear => ols_on_support(task.x(), task.y(), &support)
                    .map_err(|e| e.for_task(t))?,
                Family::Logistic => {
                    refit_logistic_on_support(task, &support).map_err(|e| e.for_task(t))?
                }
            };
            columns.push(column);
        }
        CoefficientMatrix::from_columns(&columns)?
    } else {
        fit_b
    };

    let (comm_upstream, comm_downstream) = centralized_comm(spec.n, spec.p, tasks.len());
    Ok(MethodOutcome {
        hamming: hamming(&support, truth)? as f64,
        b_est,
        comm_upstream,
        comm_downstream,
    })
}

/// Unpenalized logistic fit restricted to a support.
fn refit_logistic_on_support(
    task: &TaskData,
    support: &SupportSet,
) -> Result<ndarray::Array1<f64>> {
    let p = task.p();
    if support.is_empty() {
        return Ok(ndarray::Array1::zeros(p));
    }
    let mut restricted = ndarray::Array2::zeros((task.n(), support.len()));
    for (col, j) in support.iter().enumerate() {
        restricted.column_mut(col).assign(&task.x().column(j));
    }
    let opts = SolverOptions::new(0.0).with_max_iter(2_000);
    let fit = crate::solvers::solve_logistic_lasso(restricted.view(), task.y(), &opts)?;
    let mut beta = ndarray::Array1::zeros(p);
    for (col, j) in support.iter().enumerate() {
        beta[j] = fit.beta[col];
    }
    Ok(beta)
}

/// The distributed protocol. Oracle lambda tuning reruns the round per grid
/// value (the per-task inverse surrogates are cached, so only the cheap
/// local fits repeat); the threshold is tuned inside each round.
fn run_dsml_method(dataset: &Dataset, tuning: &TuningSection, mu: f64) -> Result<MethodOutcome> {
    let tasks = &dataset.tasks;
    let truth = &dataset.support;
    let rule = match tuning.dsml_threshold {
        TuneRule::Fixed(value) => ThresholdRule::Fixed { value },
        TuneRule::Oracle => ThresholdRule::OracleTuned {
            grid: tuning.threshold_grid.clone(),
        },
        TuneRule::Theorem => unreachable!("rejected by config validation"),
    };

    let run_at = |lambda: f64, cache: Option<&SurrogateCache>| {
        run_dsml_cached(
            tasks,
            &SolverOptions::new(lambda),
            mu,
            &rule,
            Some(truth),
            cache,
        )
    };

    let run = match tuning.dsml_lambda {
        TuneRule::Fixed(lambda) => run_at(lambda, None)?,
        TuneRule::Theorem => run_at(
            theorem_lambda(dataset.spec.sigma, dataset.spec.p, dataset.spec.n),
            None,
        )?,
        TuneRule::Oracle => {
            let grid = lambda_grid(tuning, tasks);
            log::debug!("dsml lambda grid: {grid:?}");
            let cache = SurrogateCache::new();
            let mut best: Option<(usize, crate::protocol::DsmlRun)> = None;
            for &lambda in &grid {
                let run = run_at(lambda, Some(&cache))?;
                let h = hamming(&run.support, truth)?;
                let improves = match &best {
                    Some((best_h, _)) => h < *best_h,
                    None => true,
                };
                if improves {
                    best = Some((h, run));
                }
            }
            best.expect("grid is non-empty").1
        }
    };

    Ok(MethodOutcome {
        hamming: hamming(&run.support, truth)? as f64,
        b_est: run.coefficients,
        comm_upstream: run.comm.upstream_scalars,
        comm_downstream: run.comm.downstream_scalars,
    })
}

fn run_method(dataset: &Dataset, method: Method, tuning: &TuningSection) -> Result<MethodOutcome> {
    let mu = tuning
        .mu
        .unwrap_or_else(|| default_mu(dataset.spec.p, dataset.spec.n));
    match method {
        Method::Lasso => run_lasso_method(dataset, tuning),
        Method::GroupLasso => run_group_method(dataset, tuning, false),
        Method::RefitGroupLasso => run_group_method(dataset, tuning, true),
        Method::Dsml => run_dsml_method(dataset, tuning, mu),
    }
}

fn sanitize_error(text: &str) -> String {
    text.chars()
        .map(|c| match c {
            ',' | '\n' | '\r' | '"' => ';',
            other => other,
        })
        .collect()
}

/// Outcome of [`run_experiment`]: all rows plus the failure tally.
#[derive(Debug)]
pub struct ExperimentReport {
    pub rows: Vec<ResultRow>,
    pub failed_rows: usize,
}

impl ExperimentReport {
    /// Fraction of rows that carry an error.
    pub fn failure_fraction(&self) -> f64 {
        if self.rows.is_empty() {
            0.0
        } else {
            self.failed_rows as f64 / self.rows.len() as f64
        }
    }
}

/// Runs the full experiment and returns every row, sorted by
/// `(sweep_value, replication, method)`. Cells run in a worker pool;
/// failures are recorded per row and do not stop the run.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentReport> {
    config.validate()?;
    log::info!(
        "tuning rules: lasso {:?}, group {:?}, dsml lambda {:?}, dsml threshold {:?}",
        config.tuning.lasso_lambda,
        config.tuning.group_lambda,
        config.tuning.dsml_lambda,
        config.tuning.dsml_threshold
    );
    match &config.tuning.lambda_grid {
        Some(grid) => log::info!("lambda grid (explicit): {grid:?}"),
        None => log::info!(
            "lambda grid: 20 log-spaced points per replication, three decades below the \
             smallest lambda zeroing every task"
        ),
    }
    match &config.tuning.threshold_grid {
        Some(grid) => log::info!("threshold grid (explicit): {grid:?}"),
        None => log::info!("threshold grid: automatic, from the observed row norms"),
    }
    let cells: Vec<(usize, usize, usize)> = config
        .sweep
        .values
        .iter()
        .enumerate()
        .flat_map(|(sweep_index, &sweep_value)| {
            (0..config.run.replications).map(move |rep| (sweep_index, sweep_value, rep))
        })
        .collect();

    let rows: Vec<Vec<ResultRow>> = cells
        .par_iter()
        .map(|&(sweep_index, sweep_value, replication)| {
            run_cell(config, sweep_index, sweep_value, replication)
        })
        .collect();

    let mut rows: Vec<ResultRow> = rows.into_iter().flatten().collect();
    rows.sort_by(|a, b| {
        (a.sweep_value, a.replication, a.method).cmp(&(b.sweep_value, b.replication, b.method))
    });
    let failed_rows = rows.iter().filter(|r| !r.error.is_empty()).count();
    Ok(ExperimentReport { rows, failed_rows })
}

/// One (sweep point, replication) cell: generate once, run every method.
fn run_cell(
    config: &ExperimentConfig,
    sweep_index: usize,
    sweep_value: usize,
    replication: usize,
) -> Vec<ResultRow> {
    let mut spec = config.spec_for(sweep_value);
    spec.seed = derive_seed(config.run.seed, sweep_index, replication);

    let failure = |detail: String| {
        config
            .run
            .methods
            .iter()
            .map(|&method| ResultRow {
                method,
                sweep_value,
                replication,
                hamming: f64::NAN,
                est_error: f64::NAN,
                pred_error: f64::NAN,
                pred_error_insample: f64::NAN,
                wall_time_ms: 0.0,
                comm_upstream: 0,
                comm_downstream: 0,
                error: sanitize_error(&detail),
            })
            .collect::<Vec<_>>()
    };

    let dataset = match generate(&spec) {
        Ok(dataset) => dataset,
        Err(e) => return failure(format!("datagen: {e}")),
    };
    let sigmas = vec![ar_covariance(spec.p, spec.rho)];
    let sqrt_m = (dataset.tasks.len() as f64).sqrt();

    config
        .run
        .methods
        .iter()
        .map(|&method| {
            let started = Instant::now();
            match run_method(&dataset, method, &config.tuning) {
                Ok(outcome) => {
                    let wall_time_ms = if config.run.record_timing {
                        started.elapsed().as_secs_f64() * 1e3
                    } else {
                        0.0
                    };
                    let est = estimation_error(&outcome.b_est, &dataset.b_star);
                    let pred = prediction_error(&outcome.b_est, &dataset.b_star, &sigmas);
                    let pred_in =
                        prediction_error_insample(&outcome.b_est, &dataset.b_star, &dataset.tasks);
                    match (est, pred, pred_in) {
                        (Ok(est), Ok(pred), Ok(pred_in)) => ResultRow {
                            method,
                            sweep_value,
                            replication,
                            hamming: outcome.hamming,
                            est_error: est / sqrt_m,
                            pred_error: pred,
                            pred_error_insample: pred_in,
                            wall_time_ms,
                            comm_upstream: outcome.comm_upstream,
                            comm_downstream: outcome.comm_downstream,
                            error: String::new(),
                        },
                        (est, pred, pred_in) => {
                            let detail = [est.err(), pred.err(), pred_in.err()]
                                .into_iter()
                                .flatten()
                                .map(|e| e.to_string())
                                .collect::<Vec<_>>()
                                .join("; ");
                            ResultRow {
                                method,
                                sweep_value,
                                replication,
                                hamming: f64::NAN,
                                est_error: f64::NAN,
                                pred_error: f64::NAN,
                                pred_error_insample: f64::NAN,
                                wall_time_ms,
                                comm_upstream: 0,
                                comm_downstream: 0,
                                error: sanitize_error(&format!("metrics: {detail}")),
                            }
                        }
                    }
                }
                Err(e) => ResultRow {
                    method,
                    sweep_value,
                    replication,
                    hamming: f64::NAN,
                    est_error: f64::NAN,
                    pred_error: f64::NAN,
                    pred_error_insample: f64::NAN,
                    wall_time_ms: 0.0,
                    comm_upstream: 0,
                    comm_downstream: 0,
                    error: sanitize_error(&e.to_string()),
                },
            }
        })
        .collect()
}

/// Writes rows in the fixed CSV schema.
pub fn write_csv(w: &mut dyn Write, rows: &[ResultRow]) -> Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for row in rows {
        writeln!(
            w,
            "{},{},{},{},{},{},{},{},{},{},{}",
            row.method,
            row.sweep_value,
            row.replication,
            row.hamming,
            row.est_error,
            row.pred_error,
            row.pred_error_insample,
            row.wall_time_ms,
            row.comm_upstream,
            row.comm_downstream,
            row.error
        )?;
    }
    Ok(())
}

/// Runs the experiment and writes its CSV to the configured output path.
pub fn run_experiment_to_files(config: &ExperimentConfig) -> Result<ExperimentReport> {
    let report = run_experiment(config)?;
    let mut file = std::fs::File::create(&config.run.output)?;
    write_csv(&mut file, &report.rows)?;
    Ok(report)
}

/// A mean/sd summary for one (method, sweep point) group.
#[derive(Debug, Clone)]
pub struct SummaryRow {
    pub method: String,
    pub sweep_value: f64,
    /// Successful rows aggregated here.
    pub count: usize,
    /// Rows skipped because they carried an error.
    pub failures: usize,
    pub means: [f64; 5],
    pub sds: [f64; 5],
}

/// The metric columns a summary aggregates, in order.
pub const SUMMARY_METRICS: [&str; 5] = [
    "hamming",
    "est_error",
    "pred_error",
    "pred_error_insample",
    "wall_time_ms",
];

/// Aggregates a results CSV into per-(method, sweep point) means and
/// sample standard deviations (n-1 convention; 0 for a single row).
/// Rows with a non-empty error column are excluded from the statistics but
/// counted as failures.
pub fn summarize(reader: &mut dyn BufRead, path: &str) -> Result<Vec<SummaryRow>> {
    let mut lines = reader.lines();
    let header = match lines.next() {
        Some(line) => line?,
        None => {
            return Err(Error::MalformedCsv {
                path: path.into(),
                line: 1,
                detail: "empty file".into(),
            })
        }
    };
    if header.trim_end() != CSV_HEADER {
        return Err(Error::MalformedCsv {
            path: path.into(),
            line: 1,
            detail: format!("unexpected header '{header}'"),
        });
    }

    // Keyed by (method, sweep text); BTreeMap gives the sorted output order.
    let mut groups: BTreeMap<(String, String), (Vec<[f64; 5]>, usize)> = BTreeMap::new();
    for (index, line) in lines.enumerate() {
        let line_no = index + 2;
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 11 {
            return Err(Error::MalformedCsv {
                path: path.into(),
                line: line_no,
                detail: format!("expected 11 fields, got {}", fields.len()),
            });
        }
        let key = (fields[0].to_string(), fields[1].to_string());
        let entry = groups.entry(key).or_default();
        if !fields[10].is_empty() {
            entry.1 += 1;
            continue;
        }
        let mut metrics = [0.0f64; 5];
        for (slot, &field_index) in [3usize, 4, 5, 6, 7].iter().enumerate() {
            metrics[slot] = fields[field_index].parse().map_err(|_| Error::MalformedCsv {
                path: path.into(),
                line: line_no,
                detail: format!(
                    "cannot parse {} from '{}'",
                    SUMMARY_METRICS[slot], fields[field_index]
                ),
            })?;
        }
        entry.0.push(metrics);
    }

    let mut out = Vec::with_capacity(groups.len());
    for ((method, sweep_text), (samples, failures)) in groups {
        let sweep_value: f64 = sweep_text.parse().map_err(|_| Error::MalformedCsv {
            path: path.into(),
            line: 0,
            detail: format!("cannot parse sweep value '{sweep_text}'"),
        })?;
        let count = samples.len();
        let mut means = [0.0f64; 5];
        let mut sds = [0.0f64; 5];
        if count > 0 {
            for slot in 0..5 {
                means[slot] = samples.iter().map(|s| s[slot]).sum::<f64>() / count as f64;
            }
            if count > 1 {
                for slot in 0..5 {
                    let ss: f64 = samples
                        .iter()
                        .map(|s| (s[slot] - means[slot]).powi(2))
                        .sum();
                    sds[slot] = (ss / (count - 1) as f64).sqrt();
                }
            }
        }
        out.push(SummaryRow {
            method,
            sweep_value,
            count,
            failures,
            means,
            sds,
        });
    }
    // Sort by method name, then numeric sweep value.
    out.sort_by(|a, b| {
        (&a.method, a.sweep_value)
            .partial_cmp(&(&b.method, b.sweep_value))
            .expect("finite sweep values")
    });
    Ok(out)
}

/// Writes summary rows as CSV.
pub fn write_summary_csv(w: &mut dyn Write, rows: &[SummaryRow]) -> Result<()> {
    write!(w, "method,sweep_value,count,failures")?;
    for metric in SUMMARY_METRICS {
        write!(w, ",{metric}_mean,{metric}_sd")?;
    }
    writeln!(w)?;
    for row in rows {
        write!(
            w,
            "{},{},{},{}",
            row.method, row.sweep_value, row.count, row.failures
        )?;
        for slot in 0..5 {
            write!(w, ",{},{}", row.means[slot], row.sds[slot])?;
        }
        writeln!(w)?;
    }
    Ok(())
}

/// File-to-file summarize.
pub fn summarize_files(input: &Path, output: &Path) -> Result<Vec<SummaryRow>> {
    let file = std::fs::File::open(input)?;
    let mut reader = std::io::BufReader::new(file);
    let rows = summarize(
        &mut (&mut reader as &mut dyn BufRead),
        &input.display().to_string(),
    )?;
    let mut out = std::fs::File::create(output)?;
    write_summary_csv(&mut out, &rows)?;
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::BufReader;

    const SMALL_CONFIG: &str = r#"
        [data]
        p = 16
        s = 3
        sigma = 0.3

        [sweep]
        parameter = "n"
        values = [40]
        m = 2

        [run]
        methods = ["lasso", "dsml"]
        replications = 2
        seed = 11
        output = "unused.csv"
    "#;

    #[test]
    fn config_parses_with_defaults() {
        let config = ExperimentConfig::from_toml(SMALL_CONFIG).unwrap();
        assert_eq!(config.data.p, 16);
        assert_eq!(config.data.rho, 0.5);
        assert_eq!(config.run.replications, 2);
        assert!(!config.run.record_timing);
        assert_eq!(config.tuning.lasso_lambda, TuneRule::Oracle);
        assert_eq!(config.tuning.dsml_threshold, TuneRule::Oracle);
        assert!(config.tuning.mu.is_none());
    }

    #[test]
    fn config_rejects_unknown_fields_and_bad_shapes() {
        let bad = SMALL_CONFIG.replace("sigma = 0.3", "sigma = 0.3\nbogus = 1");
        assert!(matches!(
            ExperimentConfig::from_toml(&bad),
            Err(Error::Config(_))
        ));

        let no_fixed_m = SMALL_CONFIG.replace("m = 2", "");
        assert!(ExperimentConfig::from_toml(&no_fixed_m).is_err());

        let empty_values = SMALL_CONFIG.replace("values = [40]", "values = []");
        assert!(ExperimentConfig::from_toml(&empty_values).is_err());

        let no_methods = SMALL_CONFIG.replace(r#"methods = ["lasso", "dsml"]"#, "methods = []");
        assert!(ExperimentConfig::from_toml(&no_methods).is_err());
    }

    #[test]
    fn tune_rules_parse_from_strings_and_numbers() {
        let toml = SMALL_CONFIG.to_string()
            + r#"
        [tuning]
        lasso_lambda = 0.25
        dsml_lambda = "theorem"
        dsml_threshold = "oracle"
        "#;
        let config = ExperimentConfig::from_toml(&toml).unwrap();
        assert_eq!(config.tuning.lasso_lambda, TuneRule::Fixed(0.25));
        assert_eq!(config.tuning.dsml_lambda, TuneRule::Theorem);

        let bad = SMALL_CONFIG.to_string() + "\n[tuning]\nlasso_lambda = \"magic\"\n";
        assert!(ExperimentConfig::from_toml(&bad).is_err());

        let theorem_threshold =
            SMALL_CONFIG.to_string() + "\n[tuning]\ndsml_threshold = \"theorem\"\n";
        assert!(ExperimentConfig::from_toml(&theorem_threshold).is_err());
    }

    #[test]
    fn seed_derivation_is_pure_and_spreads() {
        assert_eq!(derive_seed(7, 0, 0), derive_seed(7, 0, 0));
        let mut seen = std::collections::HashSet::new();
        for sweep in 0..4 {
            for rep in 0..50 {
                seen.insert(derive_seed(7, sweep, rep));
            }
        }
        assert_eq!(seen.len(), 200, "seed collisions");
        assert_ne!(derive_seed(7, 0, 1), derive_seed(7, 1, 0));
    }

    #[test]
    fn experiment_produces_expected_row_grid() {
        let mut config = ExperimentConfig::from_toml(SMALL_CONFIG).unwrap();
        config.run.methods = vec![Method::Lasso];
        config.run.replications = 1;
        let report = run_experiment(&config).unwrap();
        assert_eq!(report.rows.len(), 1);
        let row = &report.rows[0];
        assert_eq!(row.method, Method::Lasso);
        assert_eq!(row.sweep_value, 40);
        assert_eq!(row.replication, 0);
        assert!(row.error.is_empty());
        assert!(row.hamming.is_finite() && row.est_error.is_finite());
        assert_eq!(row.comm_upstream, 0);
    }

    #[test]
    fn dsml_rows_report_protocol_accounting() {
        let config = ExperimentConfig::from_toml(SMALL_CONFIG).unwrap();
        let report = run_experiment(&config).unwrap();
        assert_eq!(report.rows.len(), 4);
        for row in report.rows.iter().filter(|r| r.method == Method::Dsml) {
            assert_eq!(row.comm_upstream, 2 * 16);
            assert!(row.error.is_empty(), "{}", row.error);
        }
        // Rows are sorted by (sweep_value, replication, method).
        let order: Vec<(usize, Method)> = report
            .rows
            .iter()
            .map(|r| (r.replication, r.method))
            .collect();
        assert_eq!(
            order,
            vec![
                (0, Method::Lasso),
                (0, Method::Dsml),
                (1, Method::Lasso),
                (1, Method::Dsml)
            ]
        );
    }

    #[test]
    fn rerunning_an_experiment_is_byte_identical() {
        let config = ExperimentConfig::from_toml(SMALL_CONFIG).unwrap();
        let mut first = Vec::new();
        write_csv(&mut first, &run_experiment(&config).unwrap().rows).unwrap();
        let mut second = Vec::new();
        write_csv(&mut second, &run_experiment(&config).unwrap().rows).unwrap();
        assert_eq!(first, second);
    }

    #[test]
    fn methods_see_the_same_data_regardless_of_peers() {
        let mut solo = ExperimentConfig::from_toml(SMALL_CONFIG).unwrap();
        solo.run.methods = vec![Method::Lasso];
        let mut paired = ExperimentConfig::from_toml(SMALL_CONFIG).unwrap();
        paired.run.methods = vec![Method::Lasso, Method::Dsml];
        let solo_rows = run_experiment(&solo).unwrap().rows;
        let paired_rows = run_experiment(&paired).unwrap().rows;
        let paired_lasso: Vec<&ResultRow> = paired_rows
            .iter()
            .filter(|r| r.method == Method::Lasso)
            .collect();
        assert_eq!(solo_rows.len(), paired_lasso.len());
        for (a, b) in solo_rows.iter().zip(paired_lasso) {
            assert_eq!(a.hamming.to_bits(), b.hamming.to_bits());
            assert_eq!(a.est_error.to_bits(), b.est_error.to_bits());
        }
    }

    #[test]
    fn summarize_matches_hand_statistics() {
        let csv = format!(
            "{CSV_HEADER}\n\
             lasso,50,0,2,0.5,0.25,0.2,0,0,0,\n\
             lasso,50,1,4,1.5,0.75,0.4,0,0,0,\n"
        );
        let mut reader = BufReader::new(csv.as_bytes());
        let rows = summarize(&mut (&mut reader as &mut dyn BufRead), "mem").unwrap();
        assert_eq!(rows.len(), 1);
        let row = &rows[0];
        assert_eq!(row.count, 2);
        assert_eq!(row.failures, 0);
        assert!((row.means[0] - 3.0).abs() < 1e-12);
        assert!((row.sds[0] - 2f64.sqrt()).abs() < 1e-12);
        assert!((row.means[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn summarize_single_row_has_zero_sd() {
        let csv = format!("{CSV_HEADER}\nlasso,50,0,2,0.5,0.25,0.2,0,0,0,\n");
        let mut reader = BufReader::new(csv.as_bytes());
        let rows = summarize(&mut (&mut reader as &mut dyn BufRead), "mem").unwrap();
        assert_eq!(rows[0].count, 1);
        assert_eq!(rows[0].means[0], 2.0);
        assert_eq!(rows[0].sds[0], 0.0);
    }

    #[test]
    fn summarize_skips_error_rows_and_reports_line_numbers() {
        let csv = format!(
            "{CSV_HEADER}\n\
             dsml,50,0,1,0.5,0.25,0.2,0,100,10,\n\
             dsml,50,1,nan,nan,nan,nan,0,0,0,solver exploded\n"
        );
        let mut reader = BufReader::new(csv.as_bytes());
        let rows = summarize(&mut (&mut reader as &mut dyn BufRead), "mem").unwrap();
        assert_eq!(rows[0].count, 1);
        assert_eq!(rows[0].failures, 1);

        let bad = format!("{CSV_HEADER}\ndsml,50,0,oops,0.5,0.25,0.2,0,100,10,\n");
        let mut reader = BufReader::new(bad.as_bytes());
        let err = summarize(&mut (&mut reader as &mut dyn BufRead), "results.csv").unwrap_err();
        assert!(err.to_string().contains("results.csv:2"), "{err}");

        let wrong_header = "method,other\n";
        let mut reader = BufReader::new(wrong_header.as_bytes());
        let err = summarize(&mut (&mut reader as &mut dyn BufRead), "results.csv").unwrap_err();
        assert!(err.to_string().contains("results.csv:1"), "{err}");
    }

    #[test]
    fn summarize_matches_independent_aggregation_on_a_large_table() {
        // Two hundred synthetic rows. The check recomputes every mean and
        // standard deviation directly from the in-memory values, so the CSV
        // round trip and the grouping logic are exercised against a separate
        // code path.
        let unit = |u: u64| (u >> 11) as f64 / (1u64 << 53) as f64;
        let mut counter = 0u64;
        let mut next = move || {
            counter += 1;
            unit(mix64(counter))
        };
        let mut rows = Vec::new();
        for &method in &[Method::Lasso, Method::Dsml] {
            for &sweep_value in &[50usize, 100] {
                for replication in 0..50 {
                    let failed = method == Method::Dsml && replication % 17 == 7;
                    let mut metric = |scale: f64| if failed { f64::NAN } else { next() * scale };
                    rows.push(ResultRow {
                        method,
                        sweep_value,
                        replication,
                        hamming: metric(10.0),
                        est_error: metric(2.0),
                        pred_error: metric(1.0),
                        pred_error_insample: metric(1.0),
                        wall_time_ms: metric(1e3),
                        comm_upstream: 100,
                        comm_downstream: 10,
                        error: if failed { "boom".to_string() } else { String::new() },
                    });
                }
            }
        }
        assert_eq!(rows.len(), 200);

        let mut buffer = Vec::new();
        write_csv(&mut buffer, &rows).unwrap();
        let mut reader = BufReader::new(buffer.as_slice());
        let summary = summarize(&mut (&mut reader as &mut dyn BufRead), "mem").unwrap();
        assert_eq!(summary.len(), 4);

        let picks: [fn(&ResultRow) -> f64; 5] = [
            |r| r.hamming,
            |r| r.est_error,
            |r| r.pred_error,
            |r| r.pred_error_insample,
            |r| r.wall_time_ms,
        ];
        for &method in &[Method::Lasso, Method::Dsml] {
            for &sweep_value in &[50usize, 100] {
                let kept: Vec<&ResultRow> = rows
                    .iter()
                    .filter(|r| {
                        r.method == method && r.sweep_value == sweep_value && r.error.is_empty()
                    })
                    .collect();
                let found = summary
                    .iter()
                    .find(|s| s.method == method.to_string() && s.sweep_value == sweep_value as f64)
                    .unwrap();
                assert_eq!(found.count, kept.len());
                assert_eq!(found.failures, 50 - kept.len());
                for (slot, pick) in picks.iter().enumerate() {
                    let values: Vec<f64> = kept.iter().map(|r| pick(r)).collect();
                    let mean = values.iter().sum::<f64>() / values.len() as f64;
                    let sd = (values.iter().map(|v| (v - mean).powi(2)).sum::<f64>()
                        / (values.len() - 1) as f64)
                        .sqrt();
                    assert!(
                        (found.means[slot] - mean).abs() < 1e-10,
                        "{method} {sweep_value} slot {slot}"
                    );
                    assert!((found.sds[slot] - sd).abs() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn error_text_is_csv_safe() {
        assert_eq!(
            sanitize_error("bad, worse\n\"quoted\""),
            "bad; worse;;quoted;"
        );
    }

    #[test]
    fn fixed_lambda_skips_tuning() {
        let toml = SMALL_CONFIG.to_string()
            + r#"
        [tuning]
        lasso_lambda = 10.0
        "#;
        let mut config = ExperimentConfig::from_toml(&toml).unwrap();
        config.run.methods = vec![Method::Lasso];
        config.run.replications = 1;
        let report = run_experiment(&config).unwrap();
        // A huge lambda zeroes everything: Hamming equals s.
        assert_eq!(report.rows[0].hamming, 3.0);
    }

    #[test]
    fn group_methods_round_trip_small_problems() {
        let toml = SMALL_CONFIG.replace(
            r#"methods = ["lasso", "dsml"]"#,
            r#"methods = ["group_lasso", "refit_group_lasso"]"#,
        );
        let mut config = ExperimentConfig::from_toml(&toml).unwrap();
        config.run.replications = 1;
        let report = run_experiment(&config).unwrap();
        assert_eq!(report.rows.len(), 2);
        for row in &report.rows {
            assert!(row.error.is_empty(), "{}: {}", row.method, row.error);
            assert_eq!(row.comm_upstream, 2 * 40 * 17);
            assert_eq!(row.comm_downstream, 2 * 16);
        }
        // Both variants share the same tuned support, hence the same
        // Hamming value.
        assert_eq!(report.rows[0].hamming, report.rows[1].hamming);
    }
}
