//! Cross-checks of the sparse solvers against independent reference
//! computations: brute-force grid searches, direct objective probes, and
//! stationarity conditions evaluated from scratch.

mod common;

use common::*;
use dsml::solvers::{
    logistic_smooth_gradient, solve_group_lasso, solve_lasso, solve_logistic_lasso,
};
use dsml::types::{Family, SolverOptions, TaskData};
use ndarray::{Array1, ArrayView1};

#[test]
fn lasso_matches_two_dimensional_grid_search() {
    for seed in [3u64, 17, 88] {
        for lambda in [0.05, 0.3, 1.2] {
            let fx = linear_fixture(seed, 30, 2, 2, 0.4);
            let fit = solve_lasso(fx.x.view(), fx.y.view(), &SolverOptions::new(lambda)).unwrap();
            let (gx, gy, gobj) = staged_grid_2d(-3.0, 3.0, 0.01, 1e-4, |a, b| {
                lasso_objective(fx.x.view(), fx.y.view(), ndarray::aview1(&[a, b]), lambda)
            });
            assert!(
                (fit.beta[0] - gx).abs() < 2e-3 && (fit.beta[1] - gy).abs() < 2e-3,
                "seed {seed} lambda {lambda}: solver ({}, {}) vs grid ({gx}, {gy})",
                fit.beta[0],
                fit.beta[1]
            );
            // The solver can only beat a finite grid (up to rounding).
            assert!(fit.objective <= gobj + 1e-9);
        }
    }
}

#[test]
fn coordinate_probes_cannot_improve_either_solver() {
    // At an optimum of a convex objective, no single-coordinate move
    // lowers it. Allow a hair of slack for finite solver tolerance.
    let delta = 1e-4;
    for seed in [5u64, 6] {
        let fx = linear_fixture(seed, 40, 12, 4, 0.5);
        let fit = solve_lasso(fx.x.view(), fx.y.view(), &SolverOptions::new(0.2)).unwrap();
        let base = lasso_objective(fx.x.view(), fx.y.view(), fit.beta.view(), 0.2);
        for j in 0..12 {
            for sign in [1.0, -1.0] {
                let mut probe = fit.beta.clone();
                probe[j] += sign * delta;
                let v = lasso_objective(fx.x.view(), fx.y.view(), probe.view(), 0.2);
                assert!(v >= base - 1e-8, "coordinate {j} probe improved the lasso");
            }
        }

        let fl = logistic_fixture(seed, 60, 8, 3);
        let lfit =
            solve_logistic_lasso(fl.x.view(), fl.y.view(), &SolverOptions::new(0.05)).unwrap();
        let lbase = logistic_objective(fl.x.view(), fl.y.view(), lfit.beta.view(), 0.05);
        for j in 0..8 {
            for sign in [1.0, -1.0] {
                let mut probe = lfit.beta.clone();
                probe[j] += sign * delta;
                let v = logistic_objective(fl.x.view(), fl.y.view(), probe.view(), 0.05);
                assert!(v >= lbase - 1e-8, "coordinate {j} probe improved the logistic fit");
            }
        }
    }
}

#[test]
fn logistic_optimum_is_a_proximal_fixed_point() {
    // For any step t > 0, an exact optimum satisfies
    // b = soft(b - t grad, t lambda). Check at t = 0.1.
    let lambda = 0.08;
    let t = 0.1;
    for seed in [11u64, 12, 13] {
        let fx = logistic_fixture(seed, 80, 10, 3);
        let opts = SolverOptions::new(lambda).with_tol(1e-12).with_max_iter(200_000);
        let fit = solve_logistic_lasso(fx.x.view(), fx.y.view(), &opts).unwrap();
        let grad = logistic_smooth_gradient(fx.x.view(), fx.y.view(), fit.beta.view()).unwrap();
        for j in 0..10 {
            let z = fit.beta[j] - t * grad[j];
            let prox = z.signum() * (z.abs() - t * lambda).max(0.0);
            assert!(
                (prox - fit.beta[j]).abs() < 1e-6,
                "seed {seed} coordinate {j}: |prox - beta| = {}",
                (prox - fit.beta[j]).abs()
            );
        }
    }
}

fn group_tasks(seed: u64, n: usize, p: usize, m: usize, sigma: f64) -> Vec<TaskData> {
    let mut rng = rng(seed);
    let shared: Vec<f64> = (0..p).map(|_| rand::Rng::gen_range(&mut rng, -1.0..1.0)).collect();
    (0..m)
        .map(|_| {
            let x = gaussian_matrix(&mut rng, n, p);
            let noise = gaussian_vector(&mut rng, n) * sigma;
            let beta = Array1::from_vec(shared.clone());
            let y = x.dot(&beta) + noise;
            TaskData::new(x, y, Family::Linear, sigma).unwrap()
        })
        .collect()
}

#[test]
fn group_lasso_matches_staged_grid_on_tiny_problem() {
    // p = 2, m = 2: exhaustive search over the 4 coefficients.
    let tasks = group_tasks(21, 20, 2, 2, 0.3);
    let lambda = 0.3;
    let opts = SolverOptions::new(lambda).with_tol(1e-12).with_max_iter(200_000);
    let fit = solve_group_lasso(&tasks, &opts).unwrap();

    let objective = |b: [f64; 4]| -> f64 {
        // Columns are per-task coefficient vectors; rows are penalized.
        let mut loss = 0.0;
        for (t, task) in tasks.iter().enumerate() {
            let beta = Array1::from_vec(vec![b[t], b[2 + t]]);
            let r = &task.y().to_owned() - &task.x().dot(&beta);
            loss += r.dot(&r);
        }
        let n_total = (tasks.len() * tasks[0].n()) as f64;
        let penalty: f64 = (0..2)
            .map(|j| (b[2 * j] * b[2 * j] + b[2 * j + 1] * b[2 * j + 1]).sqrt())
            .sum();
        loss / n_total + lambda * penalty
    };

    // Three stages: 0.1 over [-1.5, 1.5]^4, then 0.02 and 0.004 windows.
    let mut best = ([0.0f64; 4], f64::INFINITY);
    let sweep = |center: [f64; 4], half: f64, step: f64, best: &mut ([f64; 4], f64)| {
        let counts = (2.0 * half / step).round() as i64;
        for i0 in 0..=counts {
            for i1 in 0..=counts {
                for i2 in 0..=counts {
                    for i3 in 0..=counts {
                        let b = [
                            center[0] - half + i0 as f64 * step,
                            center[1] - half + i1 as f64 * step,
                            center[2] - half + i2 as f64 * step,
                            center[3] - half + i3 as f64 * step,
                        ];
                        let v = objective(b);
                        if v < best.1 {
                            *best = (b, v);
                        }
                    }
                }
            }
        }
    };
    sweep([0.0; 4], 1.5, 0.1, &mut best);
    let stage1 = best.0;
    sweep(stage1, 0.2, 0.02, &mut best);
    let stage2 = best.0;
    sweep(stage2, 0.04, 0.004, &mut best);

    let fitted = [
        fit.b.entries()[[0, 0]],
        fit.b.entries()[[0, 1]],
        fit.b.entries()[[1, 0]],
        fit.b.entries()[[1, 1]],
    ];
    for (a, g) in fitted.iter().zip(best.0.iter()) {
        assert!((a - g).abs() < 2e-2, "solver {fitted:?} vs grid {:?}", best.0);
    }
    assert!(fit.objective <= best.1 + 1e-9);
}

#[test]
fn group_lasso_satisfies_block_stationarity() {
    let tasks = group_tasks(33, 40, 8, 3, 0.4);
    let lambda = 0.25;
    let opts = SolverOptions::new(lambda).with_tol(1e-12).with_max_iter(500_000);
    let fit = solve_group_lasso(&tasks, &opts).unwrap();
    let (m, n, p) = (tasks.len(), tasks[0].n(), tasks[0].p());

    // Gradient of the smooth part, recomputed directly:
    // d/dB[j,t] = (2/(m n)) X_t[:,j]' (X_t b_t - y_t).
    let mut grad = ndarray::Array2::<f64>::zeros((p, m));
    for (t, task) in tasks.iter().enumerate() {
        let beta = fit.b.column(t).to_owned();
        let r = &task.x().dot(&beta) - &task.y().to_owned();
        let g = task.x().t().dot(&r) * (2.0 / (m * n) as f64);
        grad.column_mut(t).assign(&g);
    }

    let entries = fit.b.entries();
    for j in 0..p {
        let row = entries.row(j);
        let row_norm = row.dot(&row).sqrt();
        let g = grad.row(j);
        if row_norm > 0.0 {
            // g_j = -lambda B_j / ||B_j||.
            for t in 0..m {
                let want = -lambda * row[t] / row_norm;
                assert!(
                    (g[t] - want).abs() < 1e-5,
                    "active row {j}, task {t}: grad {} vs {want}",
                    g[t]
                );
            }
        } else {
            let gnorm = g.dot(&g).sqrt();
            assert!(gnorm <= lambda + 1e-5, "zero row {j}: ||grad|| = {gnorm} > {lambda}");
        }
    }
}

#[test]
fn lasso_path_supports_are_mostly_nested() {
    // Support nestedness along a lambda path is a heuristic, not a theorem;
    // count violations and surface them as warnings only.
    let fx = linear_fixture(44, 60, 25, 6, 0.5);
    let mut lambdas = vec![];
    let mut value = 2.0;
    while value > 1e-3 {
        lambdas.push(value);
        value *= 0.7;
    }
    let mut previous: Option<Vec<usize>> = None;
    let mut violations = 0usize;
    for &lambda in &lambdas {
        let fit = solve_lasso(fx.x.view(), fx.y.view(), &SolverOptions::new(lambda)).unwrap();
        let support: Vec<usize> = (0..25).filter(|&j| fit.beta[j] != 0.0).collect();
        if let Some(prev) = &previous {
            if !prev.iter().all(|j| support.contains(j)) {
                violations += 1;
            }
        }
        previous = Some(support);
    }
    if violations > 0 {
        log::warn!("{violations} non-nested steps along a {}-point path", lambdas.len());
    }
    // The endpoints are unambiguous: a huge penalty clears the support.
    let top = solve_lasso(fx.x.view(), fx.y.view(), &SolverOptions::new(50.0)).unwrap();
    assert!(top.beta.iter().all(|&v| v == 0.0));
}

#[test]
fn logistic_gradient_matches_finite_differences_on_random_points() {
    for seed in [70u64, 71] {
        let fx = logistic_fixture(seed, 50, 7, 3);
        let mut r = rng(seed + 1000);
        let beta = gaussian_vector(&mut r, 7) * 0.5;
        let grad = logistic_smooth_gradient(fx.x.view(), fx.y.view(), beta.view()).unwrap();
        let fd = finite_difference_gradient(&beta, 1e-6, |b: ArrayView1<'_, f64>| {
            logistic_smooth(fx.x.view(), fx.y.view(), b)
        });
        for j in 0..7 {
            let scale = grad[j].abs().max(1e-8);
            assert!(
                ((grad[j] - fd[j]) / scale).abs() < 1e-5,
                "seed {seed} coord {j}: {} vs {}",
                grad[j],
                fd[j]
            );
        }
    }
}
