//! End-to-end runs of the one-round protocol on generated data, with the
//! master and worker stages recomposed by hand as a cross-check.

mod common;

use dsml::datagen::{generate, GenSpec};
use dsml::metrics::hamming;
use dsml::protocol::{
    master_threshold, run_dsml, worker_finalize, worker_step, ThresholdRule,
};
use dsml::types::{Family, SolverOptions};

fn spec(seed: u64, p: usize, n: usize, m: usize, sigma: f64) -> GenSpec {
    GenSpec {
        p,
        n,
        m,
        s: 5,
        sigma,
        rho: 0.5,
        coef_low: 0.5,
        coef_high: 1.5,
        family: Family::Linear,
        seed,
    }
}

#[test]
fn high_snr_run_recovers_exact_support_and_coefficients() {
    let dataset = generate(&spec(42, 50, 200, 10, 0.1)).unwrap();
    let opts = SolverOptions::new(0.05);
    let run = run_dsml(
        &dataset.tasks,
        &opts,
        0.14,
        &ThresholdRule::OracleTuned { grid: None },
        Some(&dataset.support),
    )
    .unwrap();

    assert_eq!(run.support.indices(), dataset.support.indices());
    assert_eq!(run.comm.rounds, 1);
    assert_eq!(run.comm.upstream_scalars, 10 * 50);
    assert_eq!(run.comm.downstream_scalars, 10 * run.support.len());

    // Off-support coefficients are exactly zero; on-support ones are close
    // to the truth at this noise level.
    let truth = &dataset.b_star;
    for t in 0..10 {
        for j in 0..50 {
            let est = run.coefficients.entries()[[j, t]];
            if run.support.contains(j) {
                assert!(
                    (est - truth.entries()[[j, t]]).abs() < 0.1,
                    "task {t} variable {j}: {est} vs {}",
                    truth.entries()[[j, t]]
                );
            } else {
                assert_eq!(est, 0.0);
            }
        }
    }
}

#[test]
fn concurrent_and_sequential_compositions_agree_bitwise() {
    for seed in [1u64, 2, 3] {
        let dataset = generate(&spec(seed, 30, 80, 4, 0.5)).unwrap();
        let opts = SolverOptions::new(0.2);
        let mu = 0.25;
        let rule = ThresholdRule::Fixed { value: 0.6 };

        let concurrent = run_dsml(&dataset.tasks, &opts, mu, &rule, None).unwrap();

        // Sequential recomposition through the public stage API.
        let messages: Vec<_> = dataset
            .tasks
            .iter()
            .enumerate()
            .map(|(t, task)| worker_step(t, task, &opts, mu).unwrap())
            .collect();
        let broadcast = master_threshold(&messages, &rule, None).unwrap();
        let finals: Vec<_> = messages
            .iter()
            .map(|msg| worker_finalize(msg, &broadcast).unwrap())
            .collect();

        assert_eq!(concurrent.support.indices(), broadcast.support.indices());
        for t in 0..4 {
            for j in 0..30 {
                assert_eq!(
                    concurrent.coefficients.entries()[[j, t]].to_bits(),
                    finals[t][j].to_bits(),
                    "seed {seed} task {t} variable {j}"
                );
            }
        }
    }
}

#[test]
fn tuned_threshold_beats_every_candidate_it_considered() {
    let dataset = generate(&spec(9, 40, 60, 6, 1.0)).unwrap();
    let opts = SolverOptions::new(0.3);
    let mu = 0.25;
    let grid = vec![0.1, 0.3, 0.5, 0.9, 1.5];
    let run = run_dsml(
        &dataset.tasks,
        &opts,
        mu,
        &ThresholdRule::OracleTuned {
            grid: Some(grid.clone()),
        },
        Some(&dataset.support),
    )
    .unwrap();
    let tuned_h = hamming(&run.support, &dataset.support).unwrap();

    // Evaluate each candidate by hand from the messages.
    let messages: Vec<_> = dataset
        .tasks
        .iter()
        .enumerate()
        .map(|(t, task)| worker_step(t, task, &opts, mu).unwrap())
        .collect();
    for &candidate in &grid {
        let fixed = master_threshold(&messages, &ThresholdRule::Fixed { value: candidate }, None)
            .unwrap();
        let h = hamming(&fixed.support, &dataset.support).unwrap();
        assert!(
            tuned_h <= h,
            "candidate {candidate} had Hamming {h} < tuned {tuned_h}"
        );
    }
    assert!(grid.contains(&run.lambda_threshold));
}

#[test]
fn logistic_protocol_round_trips() {
    let spec = GenSpec {
        p: 20,
        n: 150,
        m: 3,
        s: 3,
        sigma: 1.0,
        rho: 0.3,
        coef_low: 1.0,
        coef_high: 2.0,
        family: Family::Logistic,
        seed: 77,
    };
    let dataset = generate(&spec).unwrap();
    let run = run_dsml(
        &dataset.tasks,
        &SolverOptions::new(0.05),
        0.2,
        &ThresholdRule::OracleTuned { grid: None },
        Some(&dataset.support),
    )
    .unwrap();
    assert_eq!(run.comm.rounds, 1);
    assert_eq!(run.comm.upstream_scalars, 3 * 20);
    assert!(run.coefficients.entries().iter().all(|v| v.is_finite()));
    // At this signal strength the tuned threshold should find most of the
    // true support.
    let h = hamming(&run.support, &dataset.support).unwrap();
    assert!(h <= 2, "logistic Hamming {h}");
}
