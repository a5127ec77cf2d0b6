use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The evaluation point is a zero of some denominator.
    #[error("denominator vanishes at the evaluation point")]
    DenominatorVanishes,

    #[error("index {k} out of range 0..={n}")]
    IndexOutOfRange { k: i64, n: i64 },

    /// An operator maps a basis vector outside the truncation it must stay in.
    #[error("truncation leak: image of {source_label} has a component on {target_label}")]
    TruncationLeak { source_label: String, target_label: String },

    #[error("singular basis: the vectors are linearly dependent")]
    SingularBasis,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
