use thiserror::Error;

use crate::assumption::RepType;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported tensor power degree {0}; only 1..=4 are decomposed directly")]
    UnsupportedDegree(u32),

    #[error("no reduction rule for {atom} under {rep_type} type")]
    UnsupportedReduction { atom: String, rep_type: RepType },

    #[error("monomial (dihedral) representations are excluded: the argument needs a non-monomial π")]
    MonomialExcluded,

    #[error("cuspidality of {0} is not known under the stated type assumption")]
    UnknownCuspidality(String),

    #[error("not decided by the declared relations: {0}")]
    Undecided(String),

    #[error("cannot form the tensor product {0} ⊗ {1}")]
    UnsupportedTensor(String, String),

    #[error("no value supplied for symbol `{0}`")]
    MissingValue(String),

    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error("invalid type assumption: {0}")]
    InvalidAssumption(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("singular curve (discriminant is zero)")]
    SingularCurve,

    #[error("X = {x} exceeds the cap of {cap}")]
    AboveCap { x: u64, cap: u64 },

    #[error("line {line}: {reason}")]
    Csv { line: u64, reason: String },

    #[error("empty dataset")]
    EmptyData,

    #[error("dataset is tagged {found}, theorem needs {needed}")]
    WrongDuality { needed: &'static str, found: &'static str },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("consistency check failed: {0}")]
    Inconsistent(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
