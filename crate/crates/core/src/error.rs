//! Crate-wide error type.

use alloc::string::String;

use thiserror::Error;

use crate::schema::ClassLabel;

pub type Result<T> = core::result::Result<T, Error>;

/// Everything that can go wrong across the dataset, training, and
/// explanation pipeline.
///
/// `NumericalFailure` and `SingularSystem` signal numeric breakdown and are
/// reported separately from data/validation problems by the CLI.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("schema mismatch: {0}")]
    SchemaMismatch(String),
    #[error("feature `{0}` not present in schema")]
    MissingFeature(String),
    #[error("duplicate player id `{0}`")]
    DuplicatePlayerId(String),
    #[error("record `{id}`: {detail}")]
    InvalidValue { id: String, detail: String },
    #[error("record `{0}` has no label")]
    UnlabeledRecord(String),
    #[error("class {label:?} has only {count} record(s); at least {required} required")]
    ClassTooSmall {
        label: ClassLabel,
        count: usize,
        required: usize,
    },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("dimension mismatch: expected {expected} features, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("numerical failure: {0}")]
    NumericalFailure(String),
    #[error("singular linear system: too few independent observations")]
    SingularSystem,
}

impl Error {
    /// True for numeric breakdowns as opposed to data/validation problems.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::NumericalFailure(_) | Error::SingularSystem
        )
    }
}
