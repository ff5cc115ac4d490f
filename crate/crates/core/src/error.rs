use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid itemset: item index {index} out of range ({item_count} items)")]
    InvalidItem { index: usize, item_count: usize },

    #[error("invalid object id {id}: objects are numbered 1..{object_count}")]
    InvalidObject { id: usize, object_count: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid threshold: {0}")]
    Threshold(String),

    #[error("invalid spec: {0}")]
    Spec(String),

    #[error("undefined confidence: antecedent has support 0")]
    UndefinedConfidence,

    #[error("invalid rule: antecedent and consequent overlap")]
    OverlappingRule,

    #[error("invalid rule: {0}")]
    InvalidRule(String),

    #[error("unknown item '{0}'")]
    UnknownItem(String),

    #[error("unknown measure '{0}'")]
    UnknownMeasure(String),

    #[error("inconsistent concept set: {0}")]
    Inconsistency(String),
}

impl Error {
    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
