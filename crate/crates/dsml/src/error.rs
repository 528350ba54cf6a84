use thiserror::Error;

/// Errors produced by model validation, solvers, and the protocol.
#[derive(Debug, Error)]
pub enum Error {
    #[error("no tasks")]
    NoTasks,

    #[error("dimension mismatch at task {task}: {detail}")]
    DimensionMismatch { task: usize, detail: String },

    #[error("mixed families at task {task}: expected {expected}, found {found}")]
    MixedFamilies {
        task: usize,
        expected: String,
        found: String,
    },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("singular restricted gram matrix (condition estimate {cond:.3e})")]
    SingularSystem { cond: f64 },

    #[error(
        "inverse surrogate infeasible for row {row} at mu={mu:.6} after {escalations} escalations"
    )]
    SurrogateInfeasible {
        row: usize,
        mu: f64,
        escalations: u32,
    },

    #[error("oracle-tuned thresholding requires the true support")]
    MissingTuningOracle,

    #[error("task {task}: {source}")]
    Task {
        task: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("config error: {0}")]
    Config(String),

    #[error("{path}:{line}: malformed record: {detail}")]
    MalformedCsv {
        path: String,
        line: usize,
        detail: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Attach the task index that produced this error.
    pub fn for_task(self, task: usize) -> Error {
        Error::Task {
            task,
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
