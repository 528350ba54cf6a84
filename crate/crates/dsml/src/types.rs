//! Shared domain types for multi-task sparse regression.
//!
//! The model is `y_t = X_t b_t + eps_t` for tasks `t = 1..m`, where every
//! task has the same sample size `n`, the same variable count `p`, and the
//! true coefficient vectors share one sparse support. A problem is a list of
//! [`TaskData`], the stacked coefficients form a [`CoefficientMatrix`]
//! (column `t` is task `t`, row `j` is the group unit for variable `j`),
//! and selected variables travel as a [`SupportSet`].
//!
//! All types are immutable after construction and safe to share across
//! worker threads.

use ndarray::{Array1, Array2, ArrayView1, ArrayView2};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Observation family of a task.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Real-valued response, Gaussian noise.
    #[default]
    Linear,
    /// Binary response in {-1, +1}.
    Logistic,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Family::Linear => write!(f, "linear"),
            Family::Logistic => write!(f, "logistic"),
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "linear" => Ok(Family::Linear),
            "logistic" => Ok(Family::Logistic),
            other => Err(Error::InvalidInput(format!(
                "unknown family '{other}' (expected 'linear' or 'logistic')"
            ))),
        }
    }
}

/// One task's data: an `n x p` design matrix, a length-`n` response, the
/// observation family, and the noise level (known in simulation).
#[derive(Debug, Clone)]
pub struct TaskData {
    x: Array2<f64>,
    y: Array1<f64>,
    family: Family,
    sigma: f64,
}

impl TaskData {
    /// Validates and wraps raw data.
    ///
    /// Rejects empty or non-finite designs, mismatched lengths, negative or
    /// non-finite `sigma`, and logistic responses outside {-1, +1}.
    pub fn new(x: Array2<f64>, y: Array1<f64>, family: Family, sigma: f64) -> Result<Self> {
        let (n, p) = x.dim();
        if n == 0 || p == 0 {
            return Err(Error::InvalidInput(format!(
                "design matrix must be non-empty, got {n}x{p}"
            )));
        }
        if y.len() != n {
            return Err(Error::InvalidInput(format!(
                "response length {} does not match {} rows",
                y.len(),
                n
            )));
        }
        if x.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidInput(
                "design matrix contains NaN or Inf".into(),
            ));
        }
        if y.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidInput("response contains NaN or Inf".into()));
        }
        if !sigma.is_finite() || sigma < 0.0 {
            return Err(Error::InvalidInput(format!(
                "sigma must be finite and non-negative, got {sigma}"
            )));
        }
        if family == Family::Logistic && y.iter().any(|&v| v != 1.0 && v != -1.0) {
            return Err(Error::InvalidInput(
                "logistic responses must lie in {-1, +1}".into(),
            ));
        }
        Ok(TaskData { x, y, family, sigma })
    }

    pub fn x(&self) -> ArrayView2<'_, f64> {
        self.x.view()
    }

    pub fn y(&self) -> ArrayView1<'_, f64> {
        self.y.view()
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    /// Sample count.
    pub fn n(&self) -> usize {
        self.x.nrows()
    }

    /// Variable count.
    pub fn p(&self) -> usize {
        self.x.ncols()
    }
}

/// A `p x m` coefficient matrix. Column `t` is task `t`'s vector; row `j`
/// stacks variable `j` across tasks and is the unit of group selection.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientMatrix {
    entries: Array2<f64>,
}

impl CoefficientMatrix {
    pub fn zeros(p: usize, m: usize) -> Self {
        CoefficientMatrix {
            entries: Array2::zeros((p, m)),
        }
    }

    /// Builds from per-task columns; all columns must share one length.
    pub fn from_columns(columns: &[Array1<f64>]) -> Result<Self> {
        if columns.is_empty() {
            return Err(Error::NoTasks);
        }
        let p = columns[0].len();
        for (t, col) in columns.iter().enumerate() {
            if col.len() != p {
                return Err(Error::DimensionMismatch {
                    task: t,
                    detail: format!("column length {} != {}", col.len(), p),
                });
            }
        }
        let mut entries = Array2::zeros((p, columns.len()));
        for (t, col) in columns.iter().enumerate() {
            entries.column_mut(t).assign(col);
        }
        Ok(CoefficientMatrix { entries })
    }

    pub fn from_entries(entries: Array2<f64>) -> Self {
        CoefficientMatrix { entries }
    }

    pub fn p(&self) -> usize {
        self.entries.nrows()
    }

    pub fn m(&self) -> usize {
        self.entries.ncols()
    }

    pub fn entries(&self) -> ArrayView2<'_, f64> {
        self.entries.view()
    }

    pub fn column(&self, t: usize) -> ArrayView1<'_, f64> {
        self.entries.column(t)
    }

    pub fn row(&self, j: usize) -> ArrayView1<'_, f64> {
        self.entries.row(j)
    }

    /// Euclidean norm of row `j` (the group-selection statistic).
    pub fn row_norm(&self, j: usize) -> f64 {
        self.entries.row(j).dot(&self.entries.row(j)).sqrt()
    }

    /// Indices of rows with at least one nonzero entry.
    pub fn nonzero_rows(&self) -> SupportSet {
        let indices: Vec<usize> = (0..self.p())
            .filter(|&j| self.entries.row(j).iter().any(|&v| v != 0.0))
            .collect();
        SupportSet::from_sorted(indices, self.p()).expect("row filter yields a sorted support")
    }
}

/// An ordered set of selected variable indices in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportSet {
    indices: Vec<usize>,
    p: usize,
}

impl SupportSet {
    /// Builds from arbitrary indices: sorts, rejects duplicates and
    /// out-of-range entries.
    pub fn new(mut indices: Vec<usize>, p: usize) -> Result<Self> {
        indices.sort_unstable();
        Self::from_sorted(indices, p)
    }

    /// Builds from strictly increasing indices.
    pub fn from_sorted(indices: Vec<usize>, p: usize) -> Result<Self> {
        for w in indices.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::InvalidInput(format!(
                    "support indices must be strictly increasing, got {} then {}",
                    w[0], w[1]
                )));
            }
        }
        if let Some(&last) = indices.last() {
            if last >= p {
                return Err(Error::InvalidInput(format!(
                    "support index {last} out of range for p={p}"
                )));
            }
        }
        Ok(SupportSet { indices, p })
    }

    pub fn empty(p: usize) -> Self {
        SupportSet { indices: Vec::new(), p }
    }

    /// All of `[0, p)`.
    pub fn full(p: usize) -> Self {
        SupportSet {
            indices: (0..p).collect(),
            p,
        }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, j: usize) -> bool {
        self.indices.binary_search(&j).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.indices.iter().copied()
    }

    /// True when `other` contains every index of `self`.
    pub fn is_subset_of(&self, other: &SupportSet) -> bool {
        self.iter().all(|j| other.contains(j))
    }
}

/// Shared solver configuration: iteration cap, convergence tolerance on the
/// parameter change, and the regularization level.
#[derive(Debug, Clone)]
pub struct SolverOptions {
    pub max_iter: usize,
    pub tol: f64,
    pub lambda: f64,
}

impl SolverOptions {
    pub fn new(lambda: f64) -> Self {
        SolverOptions {
            max_iter: 10_000,
            tol: 1e-8,
            lambda,
        }
    }

    pub fn with_max_iter(mut self, max_iter: usize) -> Self {
        self.max_iter = max_iter;
        self
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_iter == 0 {
            return Err(Error::InvalidInput("max_iter must be at least 1".into()));
        }
        if !(self.tol > 0.0) || !self.tol.is_finite() {
            return Err(Error::InvalidInput(format!(
                "tol must be positive and finite, got {}",
                self.tol
            )));
        }
        if !(self.lambda >= 0.0) || !self.lambda.is_finite() {
            return Err(Error::InvalidInput(format!(
                "lambda must be non-negative and finite, got {}",
                self.lambda
            )));
        }
        Ok(())
    }
}

/// Shared dimensions of a validated multi-task problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProblemDims {
    pub n: usize,
    pub p: usize,
    pub m: usize,
}

/// Checks that all tasks agree on sample size, variable count, and family,
/// and returns the shared dimensions.
///
/// A warning (not an error) is logged when a design column's empirical
/// second moment falls outside `[0.1, 10]`; the solvers assume columns on a
/// standardized scale but do not rescale.
pub fn validate_problem(tasks: &[TaskData]) -> Result<ProblemDims> {
    let first = tasks.first().ok_or(Error::NoTasks)?;
    let (n, p, family) = (first.n(), first.p(), first.family());
    for (t, task) in tasks.iter().enumerate().skip(1) {
        if task.p() != p {
            return Err(Error::DimensionMismatch {
                task: t,
                detail: format!("p={} != p={}", task.p(), p),
            });
        }
        if task.n() != n {
            return Err(Error::DimensionMismatch {
                task: t,
                detail: format!("n={} != n={}", task.n(), n),
            });
        }
        if task.family() != family {
            return Err(Error::MixedFamilies {
                task: t,
                expected: family.to_string(),
                found: task.family().to_string(),
            });
        }
    }
    for (t, task) in tasks.iter().enumerate() {
        for j in 0..p {
            let col = task.x().column(j).to_owned();
            let second_moment = col.dot(&col) / n as f64;
            if !(0.1..=10.0).contains(&second_moment) {
                log::warn!(
                    "task {t} column {j}: empirical second moment {second_moment:.3e} \
                     outside [0.1, 10]; solvers assume standardized-scale columns"
                );
            }
        }
    }
    Ok(ProblemDims {
        n,
        p,
        m: tasks.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    fn linear_task(n: usize, p: usize) -> TaskData {
        TaskData::new(Array2::ones((n, p)), Array1::zeros(n), Family::Linear, 1.0).unwrap()
    }

    #[test]
    fn validate_reads_shared_dimensions() {
        let tasks: Vec<_> = (0..3).map(|_| linear_task(10, 5)).collect();
        let dims = validate_problem(&tasks).unwrap();
        assert_eq!(dims, ProblemDims { n: 10, p: 5, m: 3 });
    }

    #[test]
    fn validate_rejects_mismatched_p() {
        let tasks = vec![linear_task(10, 5), linear_task(10, 6)];
        let err = validate_problem(&tasks).unwrap_err();
        assert!(err.to_string().contains("dimension mismatch at task 1"), "{err}");
    }

    #[test]
    fn validate_rejects_empty_list() {
        let err = validate_problem(&[]).unwrap_err();
        assert_eq!(err.to_string(), "no tasks");
    }

    #[test]
    fn validate_rejects_mixed_families() {
        let logistic = TaskData::new(
            Array2::ones((10, 5)),
            Array1::ones(10),
            Family::Logistic,
            1.0,
        )
        .unwrap();
        let err = validate_problem(&[linear_task(10, 5), logistic]).unwrap_err();
        assert!(err.to_string().contains("mixed families at task 1"), "{err}");
    }

    #[test]
    fn task_data_rejects_nan_and_bad_labels() {
        let mut x = Array2::ones((4, 2));
        x[[1, 1]] = f64::NAN;
        assert!(TaskData::new(x, Array1::zeros(4), Family::Linear, 1.0).is_err());

        let y = array![1.0, -1.0, 0.5, 1.0];
        assert!(TaskData::new(Array2::ones((4, 2)), y, Family::Logistic, 1.0).is_err());
    }

    #[test]
    fn support_set_rejects_duplicates_and_out_of_range() {
        assert!(SupportSet::new(vec![0, 2, 2], 5).is_err());
        assert!(SupportSet::new(vec![0, 5], 5).is_err());
        let s = SupportSet::new(vec![4, 0, 2], 5).unwrap();
        assert_eq!(s.indices(), &[0, 2, 4]);
        assert!(s.contains(2));
        assert!(!s.contains(3));
    }

    #[test]
    fn coefficient_matrix_rows_and_columns() {
        let b = CoefficientMatrix::from_columns(&[array![1.0, 0.0, 3.0], array![2.0, 0.0, 4.0]])
            .unwrap();
        assert_eq!(b.p(), 3);
        assert_eq!(b.m(), 2);
        assert_eq!(b.row(0).to_vec(), vec![1.0, 2.0]);
        assert_eq!(b.column(1).to_vec(), vec![2.0, 0.0, 4.0]);
        assert!((b.row_norm(2) - 25f64.sqrt()).abs() < 1e-15);
        assert_eq!(b.nonzero_rows().indices(), &[0, 2]);
    }
}
