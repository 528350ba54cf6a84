//! Synthetic multi-task data with a shared sparse support.
//!
//! Every task draws its design rows from `N(0, Sigma)` with the AR
//! covariance `Sigma_ab = rho^|a-b|`, all tasks share one support of size
//! `s`, and nonzero coefficients are drawn uniformly per task. Responses
//! are `y = X b + sigma z` (linear) or labels in {-1, +1} with
//! `P(y = +1 | x) = sigmoid(x' b)` (logistic).
//!
//! # Reproducibility
//!
//! All randomness comes from ChaCha20 streams (the `rand_chacha` crate,
//! 20-round variant) keyed by `(seed, task, purpose)` packed little-endian
//! into the 256-bit key. The support uses one global stream; each task has
//! its own coefficient, design, and noise streams, so task `t`'s data never
//! changes when `m` grows and tasks can be generated in parallel. Identical
//! seeds produce bitwise-identical datasets on every platform.
//!
//! # Dataset files
//!
//! [`write_dataset`] emits a line-oriented text form readable by other
//! implementations: a `dsml-dataset v1` magic line, `key value` header
//! lines (`p`, `n`, `m`, `s`, `family`, `seed`, `sigma`, `rho`, `coef_low`,
//! `coef_high`), a `support` line with the true indices, then per-task
//! blocks (`task t`, a `beta` line with p values, n `x` lines with p values
//! each, one `y` line with n values). Floats are printed in Rust's shortest
//! round-trip form, so read-after-write reproduces exact bits.

use std::io::{BufRead, Write};

use ndarray::{Array1, Array2};
use rand::distributions::{Distribution, Uniform};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::cholesky;
use crate::solvers::sigmoid;
use crate::types::{CoefficientMatrix, Family, SupportSet, TaskData};

fn default_p() -> usize {
    200
}
fn default_n() -> usize {
    100
}
fn default_m() -> usize {
    10
}
fn default_s() -> usize {
    10
}
fn default_sigma() -> f64 {
    1.0
}
fn default_rho() -> f64 {
    0.5
}
fn default_coef_high() -> f64 {
    1.0
}

/// Recipe for one synthetic dataset.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GenSpec {
    /// Variable count.
    #[serde(default = "default_p")]
    pub p: usize,
    /// Samples per task.
    #[serde(default = "default_n")]
    pub n: usize,
    /// Task count.
    #[serde(default = "default_m")]
    pub m: usize,
    /// Shared support size.
    #[serde(default = "default_s")]
    pub s: usize,
    /// Noise level (ignored by the logistic family).
    #[serde(default = "default_sigma")]
    pub sigma: f64,
    /// AR covariance base: `Sigma_ab = rho^|a-b|`.
    #[serde(default = "default_rho")]
    pub rho: f64,
    /// Lower end of the nonzero-coefficient range.
    #[serde(default)]
    pub coef_low: f64,
    /// Upper end of the nonzero-coefficient range.
    #[serde(default = "default_coef_high")]
    pub coef_high: f64,
    #[serde(default)]
    pub family: Family,
    /// Base seed; all streams derive from it.
    #[serde(default)]
    pub seed: u64,
}

impl Default for GenSpec {
    fn default() -> Self {
        GenSpec {
            p: default_p(),
            n: default_n(),
            m: default_m(),
            s: default_s(),
            sigma: default_sigma(),
            rho: default_rho(),
            coef_low: 0.0,
            coef_high: default_coef_high(),
            family: Family::Linear,
            seed: 0,
        }
    }
}

impl GenSpec {
    pub fn validate(&self) -> Result<()> {
        if self.p == 0 || self.n == 0 || self.m == 0 || self.s == 0 {
            return Err(Error::InvalidInput(format!(
                "p, n, m, s must all be positive, got p={} n={} m={} s={}",
                self.p, self.n, self.m, self.s
            )));
        }
        if self.s > self.p {
            return Err(Error::InvalidInput(format!(
                "support size s={} exceeds p={}",
                self.s, self.p
            )));
        }
        if !self.sigma.is_finite() || self.sigma < 0.0 {
            return Err(Error::InvalidInput(format!(
                "sigma must be finite and non-negative, got {}",
                self.sigma
            )));
        }
        if !(0.0..1.0).contains(&self.rho) {
            return Err(Error::InvalidInput(format!(
                "rho must lie in [0, 1), got {}",
                self.rho
            )));
        }
        if !self.coef_low.is_finite()
            || !self.coef_high.is_finite()
            || self.coef_low > self.coef_high
        {
            return Err(Error::InvalidInput(format!(
                "coefficient range [{}, {}] is invalid",
                self.coef_low, self.coef_high
            )));
        }
        Ok(())
    }
}

/// A generated dataset: the tasks plus the ground truth they came from.
#[derive(Debug, Clone)]
pub struct Dataset {
    pub spec: GenSpec,
    pub tasks: Vec<TaskData>,
    /// True `p x m` coefficient matrix.
    pub b_star: CoefficientMatrix,
    /// True shared support.
    pub support: SupportSet,
}

/// AR covariance `Sigma_ab = rho^|a-b|` (symmetric positive definite for
/// `0 <= rho < 1`).
pub fn ar_covariance(p: usize, rho: f64) -> Array2<f64> {
    Array2::from_shape_fn((p, p), |(a, b)| {
        rho.powi((a as i32 - b as i32).abs())
    })
}

const PURPOSE_SUPPORT: u64 = 1;
const PURPOSE_COEF: u64 = 2;
const PURPOSE_DESIGN: u64 = 3;
const PURPOSE_NOISE: u64 = 4;

fn substream(seed: u64, task: u64, purpose: u64) -> ChaCha20Rng {
    let mut key = [0u8; 32];
    key[0..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&task.to_le_bytes());
    key[16..24].copy_from_slice(&purpose.to_le_bytes());
    ChaCha20Rng::from_seed(key)
}

/// Generates one dataset according to `spec`.
pub fn generate(spec: &GenSpec) -> Result<Dataset> {
    spec.validate()?;
    let (p, n, m, s) = (spec.p, spec.n, spec.m, spec.s);

    // Shared support: s indices drawn uniformly without replacement.
    let mut support_rng = substream(spec.seed, 0, PURPOSE_SUPPORT);
    let indices = rand::seq::index::sample(&mut support_rng, p, s).into_vec();
    let support = SupportSet::new(indices, p)?;

    let sigma_design = ar_covariance(p, spec.rho);
    let chol = cholesky(sigma_design.view()).ok_or_else(|| {
        Error::InvalidInput(format!("AR covariance with rho={} is not PD", spec.rho))
    })?;

    let coef_dist = Uniform::new_inclusive(spec.coef_low, spec.coef_high);
    let mut columns = Vec::with_capacity(m);
    let mut tasks = Vec::with_capacity(m);
    for t in 0..m {
        let mut coef_rng = substream(spec.seed, t as u64, PURPOSE_COEF);
        let mut beta = Array1::zeros(p);
        for j in support.iter() {
            beta[j] = coef_dist.sample(&mut coef_rng);
        }

        // Rows x_k = L z_k with z_k standard normal, drawn row by row.
        let mut design_rng = substream(spec.seed, t as u64, PURPOSE_DESIGN);
        let mut x = Array2::zeros((n, p));
        let mut z = Array1::zeros(p);
        for k in 0..n {
            for v in z.iter_mut() {
                *v = design_rng.sample::<f64, _>(rand_distr::StandardNormal);
            }
            let mut row = x.row_mut(k);
            for a in 0..p {
                let mut acc = 0.0;
                for b in 0..=a {
                    acc += chol[[a, b]] * z[b];
                }
                row[a] = acc;
            }
        }

        let mut noise_rng = substream(spec.seed, t as u64, PURPOSE_NOISE);
        let signal = x.dot(&beta);
        let y = match spec.family {
            Family::Linear => {
                let noise = Array1::from_shape_fn(n, |_| {
                    noise_rng.sample::<f64, _>(rand_distr::StandardNormal)
                });
                &signal + &(spec.sigma * &noise)
            }
            Family::Logistic => Array1::from_shape_fn(n, |k| {
                if noise_rng.gen::<f64>() < sigmoid(signal[k]) {
                    1.0
                } else {
                    -1.0
                }
            }),
        };
        tasks.push(TaskData::new(x, y, spec.family, spec.sigma)?);
        columns.push(beta);
    }

    Ok(Dataset {
        spec: spec.clone(),
        tasks,
        b_star: CoefficientMatrix::from_columns(&columns)?,
        support,
    })
}

/// Writes a dataset in the documented line-oriented text form.
pub fn write_dataset(w: &mut dyn Write, dataset: &Dataset) -> Result<()> {
    let spec = &dataset.spec;
    writeln!(w, "dsml-dataset v1")?;
    writeln!(w, "p {}", spec.p)?;
    writeln!(w, "n {}", spec.n)?;
    writeln!(w, "m {}", spec.m)?;
    writeln!(w, "s {}", spec.s)?;
    writeln!(w, "family {}", spec.family)?;
    writeln!(w, "seed {}", spec.seed)?;
    writeln!(w, "sigma {}", spec.sigma)?;
    writeln!(w, "rho {}", spec.rho)?;
    writeln!(w, "coef_low {}", spec.coef_low)?;
    writeln!(w, "coef_high {}", spec.coef_high)?;
    let support: Vec<String> = dataset.support.iter().map(|j| j.to_string()).collect();
    writeln!(w, "support {}", support.join(" "))?;
    for (t, task) in dataset.tasks.iter().enumerate() {
        writeln!(w, "task {t}")?;
        writeln!(w, "beta {}", join_floats(dataset.b_star.column(t).iter()))?;
        for k in 0..task.n() {
            writeln!(w, "x {}", join_floats(task.x().row(k).iter()))?;
        }
        writeln!(w, "y {}", join_floats(task.y().iter()))?;
    }
    Ok(())
}

fn join_floats<'a>(values: impl Iterator<Item = &'a f64>) -> String {
    values
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

struct LineReader<'a> {
    lines: std::io::Lines<&'a mut dyn BufRead>,
    path: String,
    line_no: usize,
}

impl<'a> LineReader<'a> {
    fn next(&mut self) -> Result<String> {
        self.line_no += 1;
        match self.lines.next() {
            Some(line) => Ok(line?),
            None => Err(self.error("unexpected end of file")),
        }
    }

    fn error(&self, detail: impl Into<String>) -> Error {
        Error::MalformedCsv {
            path: self.path.clone(),
            line: self.line_no,
            detail: detail.into(),
        }
    }

    /// Reads a `key value` line, checking the key.
    fn keyed(&mut self, key: &str) -> Result<String> {
        let line = self.next()?;
        match line.split_once(' ') {
            Some((k, rest)) if k == key => Ok(rest.to_string()),
            _ => Err(self.error(format!("expected '{key} ...', got '{line}'"))),
        }
    }

    fn parse<T: std::str::FromStr>(&self, text: &str, what: &str) -> Result<T> {
        text.trim()
            .parse()
            .map_err(|_| self.error(format!("cannot parse {what} from '{text}'")))
    }

    fn parse_floats(&self, text: &str, expected: usize, what: &str) -> Result<Array1<f64>> {
        let values: Vec<f64> = text
            .split_whitespace()
            .map(|tok| self.parse(tok, what))
            .collect::<Result<_>>()?;
        if values.len() != expected {
            return Err(self.error(format!(
                "expected {expected} values for {what}, got {}",
                values.len()
            )));
        }
        Ok(Array1::from_vec(values))
    }
}

/// Reads a dataset written by [`write_dataset`]. `path` is used only in
/// error messages.
pub fn read_dataset(r: &mut dyn BufRead, path: &str) -> Result<Dataset> {
    let mut reader = LineReader {
        lines: r.lines(),
        path: path.to_string(),
        line_no: 0,
    };
    let magic = reader.next()?;
    if magic.trim() != "dsml-dataset v1" {
        return Err(reader.error(format!("unrecognized header '{magic}'")));
    }
    let p: usize = { let v = reader.keyed("p")?; reader.parse(&v, "p")? };
    let n: usize = { let v = reader.keyed("n")?; reader.parse(&v, "n")? };
    let m: usize = { let v = reader.keyed("m")?; reader.parse(&v, "m")? };
    let s: usize = { let v = reader.keyed("s")?; reader.parse(&v, "s")? };
    let family: Family = { let v = reader.keyed("family")?; reader.parse(&v, "family")? };
    let seed: u64 = { let v = reader.keyed("seed")?; reader.parse(&v, "seed")? };
    let sigma: f64 = { let v = reader.keyed("sigma")?; reader.parse(&v, "sigma")? };
    let rho: f64 = { let v = reader.keyed("rho")?; reader.parse(&v, "rho")? };
    let coef_low: f64 = { let v = reader.keyed("coef_low")?; reader.parse(&v, "coef_low")? };
    let coef_high: f64 = { let v = reader.keyed("coef_high")?; reader.parse(&v, "coef_high")? };

    let support_text = reader.keyed("support")?;
    let indices: Vec<usize> = support_text
        .split_whitespace()
        .map(|tok| reader.parse(tok, "support index"))
        .collect::<Result<_>>()?;
    if indices.len() != s {
        return Err(reader.error(format!(
            "support has {} indices but s={s}",
            indices.len()
        )));
    }
    let support = SupportSet::new(indices, p)?;

    let mut columns = Vec::with_capacity(m);
    let mut tasks = Vec::with_capacity(m);
    for t in 0..m {
        let id_text = reader.keyed("task")?;
        let id: usize = reader.parse(&id_text, "task id")?;
        if id != t {
            return Err(reader.error(format!("expected task {t}, got {id}")));
        }
        let beta_text = reader.keyed("beta")?;
        columns.push(reader.parse_floats(&beta_text, p, "beta")?);
        let mut x = Array2::zeros((n, p));
        for k in 0..n {
            let row_text = reader.keyed("x")?;
            x.row_mut(k)
                .assign(&reader.parse_floats(&row_text, p, "design row")?);
        }
        let y_text = reader.keyed("y")?;
        let y = reader.parse_floats(&y_text, n, "response")?;
        tasks.push(TaskData::new(x, y, family, sigma)?);
    }

    let spec = GenSpec {
        p,
        n,
        m,
        s,
        sigma,
        rho,
        coef_low,
        coef_high,
        family,
        seed,
    };
    spec.validate()?;
    Ok(Dataset {
        spec,
        tasks,
        b_star: CoefficientMatrix::from_columns(&columns)?,
        support,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::BufReader;

    fn small_spec() -> GenSpec {
        GenSpec {
            p: 12,
            n: 15,
            m: 3,
            s: 4,
            sigma: 0.5,
            seed: 42,
            ..GenSpec::default()
        }
    }

    #[test]
    fn ar_covariance_matches_hand_entries() {
        let sigma = ar_covariance(4, 0.5);
        assert_eq!(sigma[[0, 0]], 1.0);
        assert_eq!(sigma[[0, 1]], 0.5);
        assert_eq!(sigma[[0, 2]], 0.25);
        assert_eq!(sigma[[2, 1]], 0.5);
        assert_eq!(sigma[[3, 3]], 1.0);
    }

    #[test]
    fn ar_covariance_with_zero_rho_is_identity() {
        let sigma = ar_covariance(5, 0.0);
        for a in 0..5 {
            for b in 0..5 {
                assert_eq!(sigma[[a, b]], if a == b { 1.0 } else { 0.0 });
            }
        }
    }

    #[test]
    fn ar_covariance_cholesky_round_trip() {
        let sigma = ar_covariance(4, 0.5);
        let l = cholesky(sigma.view()).expect("AR covariance is PD");
        let rebuilt = l.dot(&l.t());
        for (a, b) in rebuilt.iter().zip(sigma.iter()) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn all_columns_share_the_support_with_exactly_s_nonzeros() {
        let data = generate(&small_spec()).unwrap();
        assert_eq!(data.support.len(), 4);
        for t in 0..3 {
            let col = data.b_star.column(t);
            let nonzero: Vec<usize> = (0..12).filter(|&j| col[j] != 0.0).collect();
            assert_eq!(nonzero, data.support.indices(), "task {t}");
        }
        // Values drawn from [0, 1] by default.
        for &v in data.b_star.entries().iter() {
            assert!((0.0..=1.0).contains(&v));
        }
    }

    #[test]
    fn logistic_labels_are_plus_minus_one() {
        let spec = GenSpec {
            family: Family::Logistic,
            ..small_spec()
        };
        let data = generate(&spec).unwrap();
        for task in &data.tasks {
            assert!(task.y().iter().all(|&v| v == 1.0 || v == -1.0));
        }
    }

    #[test]
    fn identical_seeds_are_bitwise_identical() {
        let a = generate(&small_spec()).unwrap();
        let b = generate(&small_spec()).unwrap();
        assert_eq!(a.support, b.support);
        for t in 0..3 {
            for (u, v) in a.tasks[t].x().iter().zip(b.tasks[t].x().iter()) {
                assert_eq!(u.to_bits(), v.to_bits());
            }
            for (u, v) in a.tasks[t].y().iter().zip(b.tasks[t].y().iter()) {
                assert_eq!(u.to_bits(), v.to_bits());
            }
        }
        let c = generate(&GenSpec {
            seed: 43,
            ..small_spec()
        })
        .unwrap();
        assert!(a.tasks[0]
            .x()
            .iter()
            .zip(c.tasks[0].x().iter())
            .any(|(u, v)| u != v));
    }

    #[test]
    fn growing_m_does_not_disturb_earlier_tasks() {
        let a = generate(&small_spec()).unwrap();
        let b = generate(&GenSpec {
            m: 5,
            ..small_spec()
        })
        .unwrap();
        assert_eq!(a.support, b.support);
        for t in 0..3 {
            for (u, v) in a.tasks[t].x().iter().zip(b.tasks[t].x().iter()) {
                assert_eq!(u.to_bits(), v.to_bits());
            }
            for (u, v) in a.tasks[t].y().iter().zip(b.tasks[t].y().iter()) {
                assert_eq!(u.to_bits(), v.to_bits());
            }
        }
    }

    #[test]
    fn empirical_covariance_concentrates_on_the_target() {
        let spec = GenSpec {
            p: 5,
            n: 20_000,
            m: 1,
            s: 2,
            seed: 7,
            ..GenSpec::default()
        };
        let data = generate(&spec).unwrap();
        let x = data.tasks[0].x();
        let target = ar_covariance(5, 0.5);
        let empirical = crate::linalg::gram(x);
        for a in 0..5 {
            for b in 0..5 {
                assert!(
                    (empirical[[a, b]] - target[[a, b]]).abs() < 0.02,
                    "entry ({a},{b}): {} vs {}",
                    empirical[[a, b]],
                    target[[a, b]]
                );
            }
        }
    }

    #[test]
    fn zero_noise_reproduces_the_signal_exactly() {
        let spec = GenSpec {
            sigma: 0.0,
            ..small_spec()
        };
        let data = generate(&spec).unwrap();
        for (t, task) in data.tasks.iter().enumerate() {
            let signal = task.x().dot(&data.b_star.column(t));
            for (a, b) in task.y().iter().zip(signal.iter()) {
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn spec_validation_rejects_bad_fields() {
        assert!(GenSpec { s: 13, ..small_spec() }.validate().is_err());
        assert!(GenSpec { rho: 1.0, ..small_spec() }.validate().is_err());
        assert!(GenSpec { rho: -0.1, ..small_spec() }.validate().is_err());
        assert!(GenSpec { sigma: -1.0, ..small_spec() }.validate().is_err());
        assert!(GenSpec {
            coef_low: 2.0,
            coef_high: 1.0,
            ..small_spec()
        }
        .validate()
        .is_err());
        assert!(GenSpec { n: 0, ..small_spec() }.validate().is_err());
    }

    #[test]
    fn dataset_round_trips_through_text_exactly() {
        for family in [Family::Linear, Family::Logistic] {
            let spec = GenSpec {
                family,
                ..small_spec()
            };
            let data = generate(&spec).unwrap();
            let mut buffer = Vec::new();
            write_dataset(&mut buffer, &data).unwrap();
            let mut reader = BufReader::new(buffer.as_slice());
            let back = read_dataset(&mut (&mut reader as &mut dyn BufRead), "mem").unwrap();
            assert_eq!(back.spec, data.spec);
            assert_eq!(back.support, data.support);
            for t in 0..3 {
                for (u, v) in back.tasks[t].x().iter().zip(data.tasks[t].x().iter()) {
                    assert_eq!(u.to_bits(), v.to_bits());
                }
                for (u, v) in back.tasks[t].y().iter().zip(data.tasks[t].y().iter()) {
                    assert_eq!(u.to_bits(), v.to_bits());
                }
                for (u, v) in back
                    .b_star
                    .column(t)
                    .iter()
                    .zip(data.b_star.column(t).iter())
                {
                    assert_eq!(u.to_bits(), v.to_bits());
                }
            }
        }
    }

    #[test]
    fn malformed_dataset_reports_line_numbers() {
        let text = "dsml-dataset v1\np 4\nn 2\nbogus line\n";
        let mut reader = BufReader::new(text.as_bytes());
        let err = read_dataset(&mut (&mut reader as &mut dyn BufRead), "bad.txt").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("bad.txt:4"), "{msg}");

        let text = "not a dataset\n";
        let mut reader = BufReader::new(text.as_bytes());
        let err = read_dataset(&mut (&mut reader as &mut dyn BufRead), "bad.txt").unwrap_err();
        assert!(err.to_string().contains("bad.txt:1"), "{}", err);
    }
}
