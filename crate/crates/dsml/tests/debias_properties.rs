//! Cross-checks of the inverse-surrogate QP and the debiasing step against
//! brute-force search and hand-rolled linear algebra.

mod common;

use common::*;
use dsml::debias::{compute_logistic_weights, compute_m, debias_linear};
use dsml::linalg::gram;
use dsml::solvers::{sigmoid, solve_lasso};
use dsml::types::SolverOptions;
use ndarray::{Array1, Array2};

/// Penalized form of one surrogate row: w' S w - 2 w_j + 2 mu |w|_1.
fn row_objective(sigma: &Array2<f64>, j: usize, mu: f64, w: &[f64]) -> f64 {
    let wv = Array1::from_vec(w.to_vec());
    let quad = wv.dot(&sigma.dot(&wv));
    quad - 2.0 * wv[j] + 2.0 * mu * wv.iter().map(|v| v.abs()).sum::<f64>()
}

#[test]
fn m_rows_match_staged_grid_qp_oracle() {
    // 3x3 positive-definite gram with off-diagonal structure.
    let sigma = ndarray::array![[1.0, 0.4, 0.2], [0.4, 1.0, 0.3], [0.2, 0.3, 1.0]];
    let mu = 0.15;
    let result = compute_m(sigma.view(), mu).unwrap();
    assert_eq!(result.mu_escalations, 0);

    for j in 0..3 {
        // Staged brute force over [-1.5, 1.5]^3.
        let mut best = ([0.0f64; 3], f64::INFINITY);
        let sweep = |center: [f64; 3], half: f64, step: f64, best: &mut ([f64; 3], f64)| {
            let counts = (2.0 * half / step).round() as i64;
            for i0 in 0..=counts {
                for i1 in 0..=counts {
                    for i2 in 0..=counts {
                        let w = [
                            center[0] - half + i0 as f64 * step,
                            center[1] - half + i1 as f64 * step,
                            center[2] - half + i2 as f64 * step,
                        ];
                        let v = row_objective(&sigma, j, mu, &w);
                        if v < best.1 {
                            *best = (w, v);
                        }
                    }
                }
            }
        };
        sweep([0.0; 3], 1.5, 0.05, &mut best);
        let s1 = best.0;
        sweep(s1, 0.1, 0.01, &mut best);
        let s2 = best.0;
        sweep(s2, 0.02, 0.002, &mut best);

        let row = result.m.row(j);
        for k in 0..3 {
            assert!(
                (row[k] - best.0[k]).abs() < 1e-2,
                "row {j}: solver {:?} vs grid {:?}",
                row.to_vec(),
                best.0
            );
        }
        let solver_obj = row_objective(&sigma, j, mu, &row.to_vec());
        assert!(solver_obj <= best.1 + 1e-9);
        // Constraint satisfied at the solver's answer.
        let resid = sigma.dot(&row.to_owned());
        for k in 0..3 {
            let target = if k == j { 1.0 } else { 0.0 };
            assert!((resid[k] - target).abs() <= mu + 1e-8);
        }
    }
}

#[test]
fn reported_slack_matches_direct_recomputation() {
    for seed in [2u64, 9, 31] {
        let fx = linear_fixture(seed, 120, 15, 5, 1.0);
        let sigma = gram(fx.x.view());
        let mu = 0.2;
        let result = compute_m(sigma.view(), mu).unwrap();

        let mut direct = 0.0f64;
        for j in 0..15 {
            let resid = sigma.dot(&result.m.row(j).to_owned());
            for k in 0..15 {
                let target = if k == j { 1.0 } else { 0.0 };
                direct = direct.max((resid[k] - target).abs());
            }
        }
        assert!(
            (direct - result.feasibility_slack).abs() < 1e-12,
            "seed {seed}: direct {direct} vs reported {}",
            result.feasibility_slack
        );
        assert!(direct <= result.mu + 1e-8);
    }
}

#[test]
fn escalation_reports_reachable_mu_and_keeps_the_invariant() {
    // A rank-1 gram makes small constraint levels infeasible, forcing the
    // per-row escalation path.
    let u = ndarray::array![1.0, 0.5, -0.25, 0.1];
    let mut sigma = Array2::zeros((4, 4));
    for a in 0..4 {
        for b in 0..4 {
            sigma[[a, b]] = u[a] * u[b];
        }
    }
    let mu0 = 0.05;
    let result = compute_m(sigma.view(), mu0).unwrap();
    assert!(result.mu_escalations > 0);
    // The final level is mu0 * 1.5^k for some k within the cap.
    let k = (result.mu / mu0).ln() / 1.5f64.ln();
    assert!((k - k.round()).abs() < 1e-9, "mu {} is not an escalation of {mu0}", result.mu);
    assert!(k.round() as u32 <= 20);
    assert!(result.feasibility_slack <= result.mu + 1e-8);
}

#[test]
fn logistic_weights_match_direct_formula() {
    let fx = logistic_fixture(7, 40, 6, 2);
    let mut r = rng(99);
    let beta = gaussian_vector(&mut r, 6);
    let weights = compute_logistic_weights(fx.x.view(), beta.view()).unwrap();
    let z = fx.x.dot(&beta);
    for k in 0..40 {
        let s = sigmoid(z[k]);
        let direct = s * (1.0 - s);
        assert!((weights.w[k] - direct).abs() < 1e-12);
        assert!(weights.w[k] > 0.0 && weights.w[k] <= 0.25);
    }
    // Zero margins give exactly 1/4.
    let flat = compute_logistic_weights(fx.x.view(), Array1::zeros(6).view()).unwrap();
    assert!(flat.w.iter().all(|&w| w == 0.25));
}

#[test]
fn debias_with_test_side_exact_inverse_reproduces_least_squares() {
    for seed in [14u64, 15, 16] {
        let fx = linear_fixture(seed, 100, 10, 4, 0.7);
        // Everything on the verification side is computed from scratch.
        let xtx = fx.x.t().dot(&fx.x);
        let xty = fx.x.t().dot(&fx.y);
        let beta_ols = solve_dense(&xtx, &xty);
        let sigma = xtx.mapv(|v| v / 100.0);
        let m_exact = invert_dense(&sigma);

        for lambda in [0.05, 0.5] {
            let fit = solve_lasso(fx.x.view(), fx.y.view(), &SolverOptions::new(lambda)).unwrap();
            let debiased =
                debias_linear(fx.x.view(), fx.y.view(), fit.beta.view(), m_exact.view()).unwrap();
            let gap = debiased
                .iter()
                .zip(beta_ols.iter())
                .fold(0.0f64, |acc, (a, b)| acc.max((a - b).abs()));
            assert!(gap <= 1e-8, "seed {seed} lambda {lambda}: gap {gap}");
        }
    }
}
