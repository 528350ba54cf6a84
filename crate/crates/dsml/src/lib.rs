//! One-round distributed multi-task sparse regression.

pub mod datagen;
pub mod debias;
pub mod error;
pub mod experiment;
pub mod guide;
pub mod linalg;
pub mod metrics;
pub mod protocol;
pub mod solvers;
pub mod types;

pub use debias::{InverseSurrogate, LogisticWeights};
pub use experiment::{run_experiment, ExperimentConfig, ExperimentReport, Method, ResultRow};
pub use error::{Error, Result};
pub use protocol::{
    run_dsml, CommStats, DebiasedMessage, DsmlRun, SupportBroadcast, ThresholdRule,
};
pub use solvers::{
    logistic_smooth_gradient, solve_group_lasso, solve_lasso, solve_logistic_lasso, GroupLassoFit,
    LassoFit,
};
pub use types::{
    validate_problem, CoefficientMatrix, Family, ProblemDims, SolverOptions, SupportSet, TaskData,
};
