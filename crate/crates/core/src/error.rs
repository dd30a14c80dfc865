use std::fmt;

use thiserror::Error;

/// A single violated law found while validating a ring presentation.
///
/// Generator indices are zero-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LawViolation {
    ShapeMismatch(String),
    NonAssociative(usize, usize, usize),
    BadUnit(usize),
    IncompatibleModuli(usize, usize, usize),
}

impl fmt::Display for LawViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LawViolation::ShapeMismatch(what) => write!(f, "shape mismatch: {what}"),
            LawViolation::NonAssociative(i, j, l) => {
                write!(f, "(g{i}*g{j})*g{l} != g{i}*(g{j}*g{l})")
            }
            LawViolation::BadUnit(i) => write!(f, "one*g{i} or g{i}*one differs from g{i}"),
            LawViolation::IncompatibleModuli(i, j, l) => {
                write!(
                    f,
                    "g{i}*g{j} coordinate {l} is not killed by the moduli of g{i} and g{j}"
                )
            }
        }
    }
}

#[derive(Debug, Error)]
pub enum RingError {
    #[error("invalid ring presentation: {}", join(.0))]
    Invalid(Vec<LawViolation>),

    #[error("elements belong to different rings")]
    RingMismatch,

    #[error("{what}: size {size} exceeds cap {cap}")]
    SizeLimitExceeded { what: String, size: u128, cap: u128 },

    #[error("ideal is not two-sided")]
    NotTwoSided,

    #[error("set is not closed as a {0}")]
    NotClosed(String),

    #[error("post-check failed: {0}")]
    PostcheckFailed(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("polynomial is reducible over F_{p}: {detail}")]
    NotIrreducible { p: u64, detail: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    /// A proved statement failed on a concrete ring. This always signals a
    /// defect in this library, never an interesting finding.
    #[error("defect: {theorem} failed on {ring}: {detail}")]
    TheoremViolated {
        theorem: String,
        ring: String,
        detail: String,
    },

    #[error("ring spec: {0}")]
    Parse(String),

    #[error("unknown corpus entry `{0}`")]
    UnknownEntry(String),
}

impl RingError {
    pub(crate) fn too_big(what: impl Into<String>, size: u128, cap: u128) -> Self {
        RingError::SizeLimitExceeded {
            what: what.into(),
            size,
            cap,
        }
    }
}

fn join(v: &[LawViolation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T, E = RingError> = std::result::Result<T, E>;
