use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("decision column `{0}` not found in header")]
    MissingDecisionColumn(String),

    #[error("decision column must hold exactly 2 distinct values, found {found}")]
    NotBinaryDecision { found: usize },

    #[error("positive value {0} does not occur in the decision column")]
    UnknownPositiveValue(f64),

    #[error(
        "decision has a single class; AUC needs at least one positive and one negative example"
    )]
    SingleClass,

    #[error("no complete rows")]
    EmptyDataset,

    #[error("no attribute columns")]
    NoAttributes,

    #[error("unknown column `{0}`")]
    UnknownColumn(String),

    #[error("column `{0}` selected more than once")]
    DuplicateColumn(String),

    #[error("column label `{0}` is not unique")]
    DuplicateLabel(String),

    #[error("empty column label at position {0}")]
    EmptyLabel(usize),

    #[error("non-finite value in column `{column}` row {row}")]
    NonFinite { column: String, row: usize },

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("index {index} out of range for {len} rows")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("invalid count: {selected} items of {original}")]
    InvalidCount { selected: usize, original: usize },

    #[error("the reduced scale already contains every item; there is no next attribute to test")]
    NoNextAttribute,

    #[error("variance of the AUC difference is not positive while the AUCs differ")]
    DegenerateVariance,

    #[error("bootstrap needs at least one replicate")]
    NoReplicates,

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    /// True for errors that stem from the statistics of the data rather
    /// than from malformed input.
    pub fn is_analysis_error(&self) -> bool {
        matches!(
            self,
            Error::SingleClass | Error::NoNextAttribute | Error::DegenerateVariance
        )
    }
}
