use thiserror::Error;

/// Errors raised by the character, weight and adequacy engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("expected {expected} exponents, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("parameter mismatch: {0}")]
    ParamMismatch(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("conjugation needs an even niveau, got {0}")]
    OddNiveau(u32),
    #[error("not a Serre weight: {0}")]
    NotASerreWeight(String),
    #[error("induced representation is reducible: psi equals its conjugate")]
    ReducibleInduction,
    #[error("non-split input; use the GHS inertial set")]
    NonSemisimpleInput,
    #[error("BDJ weights need an unramified field (e = 1), got e = {0}")]
    RamifiedField(u64),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("not a lift of the weight: {0}")]
    NotALift(String),
    #[error("singular generator at index {0}")]
    SingularGenerator(usize),
    #[error("group closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("field characteristic {field} does not match l = {l}")]
    CharMismatch { field: u64, l: u64 },
    #[error("unsupported group spec: {0}")]
    UnsupportedSpec(String),
    #[error("field construction failed: {0}")]
    Field(String),
}

pub type Result<T> = std::result::Result<T, Error>;
