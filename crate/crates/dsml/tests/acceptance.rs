//! The release gate: eight checks covering solver correctness, the
//! debias identity, surrogate feasibility, the two headline simulation
//! trends, logistic correctness, the protocol contract, and CLI
//! determinism. Each test prints one `ACCEPTANCE k (...): PASS/FAIL` line.
//!
//! Tolerances are pinned here on purpose; loosening them is a release
//! decision, not a test fix.

mod common;

use std::time::Instant;

use common::*;
use dsml::datagen::{generate, GenSpec};
use dsml::debias::{compute_logistic_weights, compute_m, debias_linear};
use dsml::experiment::{run_experiment, ExperimentConfig, Method};
use dsml::linalg::gram;
use dsml::protocol::{master_threshold, run_dsml, worker_finalize, worker_step, ThresholdRule};
use dsml::solvers::{logistic_smooth_gradient, solve_lasso};
use dsml::types::{Family, SolverOptions};
use ndarray::Array1;

#[test]
fn criterion_1_lasso_kkt_and_grid_oracle() {
    let started = Instant::now();
    let opts_for = |lambda: f64| SolverOptions::new(lambda).with_tol(1e-10).with_max_iter(100_000);

    let mut worst_kkt = 0.0f64;
    for seed in 0..100u64 {
        let fx = linear_fixture(seed, 40, 20, 5, 0.5);
        for lambda in [0.01, 0.1, 1.0] {
            let fit = solve_lasso(fx.x.view(), fx.y.view(), &opts_for(lambda)).unwrap();
            let v = lasso_kkt_violation(fx.x.view(), fx.y.view(), fit.beta.view(), lambda);
            worst_kkt = worst_kkt.max(v);
        }
    }

    let mut worst_grid_gap = 0.0f64;
    for seed in 0..20u64 {
        let fx = linear_fixture(1000 + seed, 30, 2, 2, 0.4);
        for lambda in [0.01, 0.1, 1.0] {
            let fit = solve_lasso(fx.x.view(), fx.y.view(), &opts_for(lambda)).unwrap();
            let (gx, gy, _) = staged_grid_2d(-3.0, 3.0, 0.01, 1e-4, |a, b| {
                lasso_objective(fx.x.view(), fx.y.view(), ndarray::aview1(&[a, b]), lambda)
            });
            worst_grid_gap = worst_grid_gap
                .max((fit.beta[0] - gx).abs())
                .max((fit.beta[1] - gy).abs());
        }
    }

    let elapsed = started.elapsed().as_secs_f64();
    let pass = worst_kkt <= 1e-6 && worst_grid_gap <= 2e-3 && elapsed < 30.0;
    report(
        1,
        "lasso stationarity and 2-d grid oracle",
        pass,
        &format!(
            "max KKT violation {worst_kkt:.2e} (limit 1e-6), max grid gap \
             {worst_grid_gap:.2e} (limit 2e-3), {elapsed:.1}s (limit 30s)"
        ),
    );
}

#[test]
fn criterion_2_debias_identity_reproduces_ols() {
    let started = Instant::now();
    let mut worst = 0.0f64;
    for seed in 0..50u64 {
        let fx = linear_fixture(seed, 100, 10, 4, 0.7);
        let xtx = fx.x.t().dot(&fx.x);
        let xty = fx.x.t().dot(&fx.y);
        let beta_ols = solve_dense(&xtx, &xty);
        let m_exact = invert_dense(&xtx.mapv(|v| v / 100.0));

        // Three very different starting points: a sparse fit, a dense fit,
        // and an arbitrary vector.
        let mut starts = vec![
            solve_lasso(fx.x.view(), fx.y.view(), &SolverOptions::new(0.5))
                .unwrap()
                .beta,
            solve_lasso(fx.x.view(), fx.y.view(), &SolverOptions::new(0.05))
                .unwrap()
                .beta,
        ];
        let mut r = rng(seed ^ 0xABCD);
        starts.push(gaussian_vector(&mut r, 10));

        for beta_hat in &starts {
            let debiased =
                debias_linear(fx.x.view(), fx.y.view(), beta_hat.view(), m_exact.view()).unwrap();
            let gap = debiased
                .iter()
                .zip(beta_ols.iter())
                .fold(0.0f64, |acc, (a, b)| acc.max((a - b).abs()));
            worst = worst.max(gap);
        }
    }
    let elapsed = started.elapsed().as_secs_f64();
    let pass = worst <= 1e-8 && elapsed < 10.0;
    report(
        2,
        "debias with exact inverse equals least squares",
        pass,
        &format!("max coefficient gap {worst:.2e} (limit 1e-8), {elapsed:.1}s (limit 10s)"),
    );
}

#[test]
fn criterion_3_surrogate_feasibility_without_escalation() {
    let started = Instant::now();
    let (p, n) = (50usize, 200usize);
    let mu = ((p as f64).ln() / n as f64).sqrt();
    let mut clean_seeds = 0usize;
    let mut worst_excess = f64::NEG_INFINITY;
    for seed in 0..50u64 {
        let spec = GenSpec {
            p,
            n,
            m: 1,
            s: 5,
            sigma: 1.0,
            seed,
            ..GenSpec::default()
        };
        let dataset = generate(&spec).unwrap();
        let sigma_hat = gram(dataset.tasks[0].x());
        let result = compute_m(sigma_hat.view(), mu).unwrap();
        // An exact row optimum sits on the constraint boundary, so the
        // reported slack may equal mu up to floating-point rounding; the
        // accepted operational form of "slack <= mu" is mu + 1e-8.
        worst_excess = worst_excess.max(result.feasibility_slack - result.mu);
        assert!(result.feasibility_slack <= result.mu + 1e-8);
        if result.mu_escalations == 0 {
            clean_seeds += 1;
        }
    }
    let elapsed = started.elapsed().as_secs_f64();
    let pass = clean_seeds >= 45 && elapsed < 120.0;
    report(
        3,
        "inverse surrogate feasible at the default level",
        pass,
        &format!(
            "{clean_seeds}/50 seeds without escalation (need 45), worst slack-mu \
             {worst_excess:.1e}, {elapsed:.1}s (limit 120s)"
        ),
    );
}

fn trend_config(sweep: &str, methods: &str) -> ExperimentConfig {
    let text = format!(
        r#"
        [data]
        p = 200
        s = 10
        sigma = 1.0

        [sweep]
        {sweep}

        [run]
        methods = [{methods}]
        replications = 50
        seed = 20260823
        output = "unused.csv"
        "#
    );
    ExperimentConfig::from_toml(&text).unwrap()
}

/// Mean of a column over successful rows for one (method, sweep value).
fn mean_of(
    rows: &[dsml::experiment::ResultRow],
    method: Method,
    sweep_value: usize,
    pick: fn(&dsml::experiment::ResultRow) -> f64,
) -> f64 {
    let values: Vec<f64> = rows
        .iter()
        .filter(|r| r.method == method && r.sweep_value == sweep_value && r.error.is_empty())
        .map(pick)
        .collect();
    assert!(!values.is_empty());
    values.iter().sum::<f64>() / values.len() as f64
}

#[test]
fn criterion_4_support_recovery_trend() {
    let started = Instant::now();
    let config = trend_config(
        "parameter = \"n\"\nvalues = [50, 100, 150]\nm = 10",
        "\"lasso\", \"dsml\"",
    );
    let report_rows = run_experiment(&config).unwrap();
    assert_eq!(report_rows.failed_rows, 0, "no row may fail in the trend run");
    let rows = &report_rows.rows;

    let mut detail = String::new();
    let mut dominated = true;
    for &n in &[50usize, 100, 150] {
        let dsml = mean_of(rows, Method::Dsml, n, |r| r.hamming);
        let lasso = mean_of(rows, Method::Lasso, n, |r| r.hamming);
        dominated &= dsml <= lasso;
        detail.push_str(&format!("n={n}: dsml {dsml:.2} vs lasso {lasso:.2}; "));
    }
    let tail = mean_of(rows, Method::Dsml, 150, |r| r.hamming);
    let elapsed = started.elapsed().as_secs_f64();
    let pass = dominated && tail <= 1.0 && elapsed < 1800.0;
    report(
        4,
        "support recovery dominates the local baseline",
        pass,
        &format!("{detail}tail mean {tail:.2} (limit 1.0), {elapsed:.0}s (limit 1800s)"),
    );
}

#[test]
fn criterion_5_multitask_gain_trend() {
    let started = Instant::now();
    let config = trend_config(
        "parameter = \"m\"\nvalues = [2, 10, 20]\nn = 50",
        "\"lasso\", \"dsml\"",
    );
    let report_rows = run_experiment(&config).unwrap();
    assert_eq!(report_rows.failed_rows, 0, "no row may fail in the trend run");
    let rows = &report_rows.rows;

    let ms = [2usize, 10, 20];
    let dsml: Vec<f64> = ms
        .iter()
        .map(|&m| mean_of(rows, Method::Dsml, m, |r| r.est_error))
        .collect();
    let lasso: Vec<f64> = ms
        .iter()
        .map(|&m| mean_of(rows, Method::Lasso, m, |r| r.est_error))
        .collect();
    let gaps: Vec<f64> = lasso.iter().zip(dsml.iter()).map(|(l, d)| l - d).collect();

    let more_tasks_help = dsml[2] < dsml[0];
    let violations = gaps.windows(2).filter(|w| w[1] < w[0]).count();
    let elapsed = started.elapsed().as_secs_f64();
    let pass = more_tasks_help && violations <= 1 && elapsed < 1800.0;
    report(
        5,
        "estimation error improves with more tasks",
        pass,
        &format!(
            "dsml per-task error {:?}, gap to lasso {:?}, {violations} non-widening \
             step(s) (limit 1), {elapsed:.0}s (limit 1800s)",
            dsml.iter().map(|v| (v * 100.0).round() / 100.0).collect::<Vec<_>>(),
            gaps.iter().map(|v| (v * 100.0).round() / 100.0).collect::<Vec<_>>()
        ),
    );
}

#[test]
fn criterion_6_logistic_gradient_and_weights() {
    let mut worst_rel = 0.0f64;
    for seed in 0..20u64 {
        let fx = logistic_fixture(300 + seed, 50, 8, 3);
        let mut r = rng(seed * 7 + 1);
        let beta = gaussian_vector(&mut r, 8) * 0.7;
        let grad = logistic_smooth_gradient(fx.x.view(), fx.y.view(), beta.view()).unwrap();
        let fd = finite_difference_gradient(&beta, 1e-6, |b| {
            logistic_smooth(fx.x.view(), fx.y.view(), b)
        });
        for j in 0..8 {
            let rel = (grad[j] - fd[j]).abs() / grad[j].abs().max(1e-8);
            worst_rel = worst_rel.max(rel);
        }
    }

    let fx = logistic_fixture(999, 60, 12, 4);
    let weights = compute_logistic_weights(fx.x.view(), Array1::zeros(12).view()).unwrap();
    let flat_quarter = weights.w.iter().all(|&w| w == 0.25);

    let pass = worst_rel <= 1e-5 && flat_quarter;
    report(
        6,
        "logistic gradient and curvature weights",
        pass,
        &format!(
            "max relative gradient gap {worst_rel:.2e} (limit 1e-5), zero-fit weights \
             all exactly 0.25: {flat_quarter}"
        ),
    );
}

#[test]
fn criterion_7_protocol_contract() {
    let mut checked_runs = 0usize;
    let mut all_match = true;
    for seed in 0..10u64 {
        // Vary shape and family with the seed.
        let (p, n, m) = [(20, 60, 3), (35, 90, 5), (28, 70, 4)][seed as usize % 3];
        let family = if seed % 4 == 3 { Family::Logistic } else { Family::Linear };
        let spec = GenSpec {
            p,
            n,
            m,
            s: 4,
            sigma: 0.5,
            coef_low: 0.8,
            coef_high: 1.6,
            family,
            seed,
            ..GenSpec::default()
        };
        let dataset = generate(&spec).unwrap();
        let opts = SolverOptions::new(0.15);
        let mu = 0.3;
        let rule = if seed % 2 == 0 {
            ThresholdRule::Fixed { value: 0.5 }
        } else {
            ThresholdRule::OracleTuned { grid: None }
        };
        let oracle = if seed % 2 == 0 { None } else { Some(&dataset.support) };

        let concurrent = run_dsml(&dataset.tasks, &opts, mu, &rule, oracle).unwrap();
        checked_runs += 1;
        assert_eq!(concurrent.comm.rounds, 1, "seed {seed}");
        assert_eq!(concurrent.comm.upstream_scalars, m * p, "seed {seed}");

        let messages: Vec<_> = dataset
            .tasks
            .iter()
            .enumerate()
            .map(|(t, task)| worker_step(t, task, &opts, mu).unwrap())
            .collect();
        let broadcast = master_threshold(&messages, &rule, oracle).unwrap();
        if broadcast.support.indices() != concurrent.support.indices() {
            all_match = false;
        }
        for (t, msg) in messages.iter().enumerate() {
            let fin = worker_finalize(msg, &broadcast).unwrap();
            for j in 0..p {
                if fin[j].to_bits() != concurrent.coefficients.entries()[[j, t]].to_bits() {
                    all_match = false;
                }
            }
        }
    }
    let pass = checked_runs == 10 && all_match;
    report(
        7,
        "one round, p scalars per worker, order-free results",
        pass,
        &format!("{checked_runs}/10 seeded runs matched bitwise across schedules"),
    );
}

#[test]
fn criterion_8_cli_rerun_determinism() {
    let dir = std::env::temp_dir()
        .join("dsml-cli-tests")
        .join(format!("acceptance8-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(
        dir.join("exp.toml"),
        r#"
[data]
p = 24
s = 4
sigma = 0.5

[sweep]
parameter = "n"
values = [30, 40]
m = 3

[run]
methods = ["lasso", "group_lasso", "refit_group_lasso", "dsml"]
replications = 2
seed = 5
output = "results.csv"
"#,
    )
    .unwrap();

    let run_once = || {
        let out = std::process::Command::new(env!("CARGO_BIN_EXE_dsml"))
            .current_dir(&dir)
            .args(["run", "--config", "exp.toml"])
            .output()
            .unwrap();
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        std::fs::read(dir.join("results.csv")).unwrap()
    };
    let first = run_once();
    let second = run_once();

    let pass = first == second;
    report(
        8,
        "rerunning a config reproduces the CSV byte for byte",
        pass,
        &format!("{} bytes compared", first.len()),
    );
}
