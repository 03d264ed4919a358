use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] hardsq_core::Error),
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("config: {0}")]
    Config(String),
    #[error("dump rejected: {0}")]
    Dump(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    ThreadPool(#[from] rayon::ThreadPoolBuildError),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code: 2 for bad input, 3 when a size cap or the flow
    /// budget refuses the job, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        use hardsq_core::Error as E;
        match self {
            Error::Core(E::CellCap { .. } | E::FlowBudget { .. }) => 3,
            Error::Core(
                E::BoardSize { .. }
                | E::TooManyPieces { .. }
                | E::PieceOffBoard { .. }
                | E::Overlap(..)
                | E::RepeatedCorner
                | E::NotIndependent
                | E::ConsecutiveOnes
                | E::RestrictionTooLarge { .. }
                | E::NotPrime(_),
            ) => 2,
            Error::Invalid(_) | Error::Config(_) => 2,
            _ => 1,
        }
    }
}
