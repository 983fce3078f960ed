use thiserror::Error as ThisError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, ThisError)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("step cap of {cap} reduction steps exceeded during {context}")]
    StepCap { cap: u64, context: &'static str },

    #[error("{0} does not vanish at the base point, so it does not define a germ")]
    NotAGerm(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("map {0} is not local: image of {1} has a nonzero constant term")]
    NonLocalImage(String, String),

    #[error("map {0} does not respect relations: {1} is not sent into the target ideal")]
    RelationNotPreserved(String, String),

    #[error("map {0} is not surjective; a gluing needs O_X -> O_Z and O_Y -> O_Z that are both surjective homomorphisms")]
    NotSurjective(String),

    #[error("surjectivity checks disagree for map {0}: cotangent test says {1}, elimination test says {2}")]
    SurjectivityMismatch(String, bool, bool),

    #[error("degenerate gluing: the kernel of {0} is zero, so the source equals the target")]
    Degenerate(String),

    #[error("lift of {0} through {1} needs a non-constant unit denominator")]
    NonPolynomialLift(String, String),

    #[error("unknown name: {0}")]
    UnknownName(String),

    #[error("duplicate name: {0}")]
    DuplicateName(String),

    #[error("series error: {0}")]
    Series(String),
}
