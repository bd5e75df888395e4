use thiserror::Error;

/// Errors raised across the library.
///
/// Vanishing cohomology is never an error; it is a [`crate::cohomology::CohomologyResult`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("{0} is not a unit in the Laurent polynomial ring")]
    NotAUnit(String),

    #[error("cannot evaluate at q = 0: negative powers of q present")]
    EvalAtZero,

    #[error("super setting requires m,n >= 1 (got m={m}, n={n})")]
    NotSuperSetting { m: usize, n: usize },

    #[error("dimension mismatch: expected gl({expected_m}|{expected_n}), got gl({m}|{n})")]
    ContextMismatch {
        expected_m: usize,
        expected_n: usize,
        m: usize,
        n: usize,
    },

    #[error("weight has {got} coordinates, expected {expected}")]
    WrongLength { expected: usize, got: usize },

    #[error("index {index} out of range {range}")]
    IndexOutOfRange { index: usize, range: String },

    #[error("weight {0} is not integral")]
    NotIntegral(String),

    #[error("weight {weight} is not dominant for {what}")]
    NotDominant { weight: String, what: String },

    #[error("invalid subalgebra: {0}")]
    InvalidSubalgebra(String),

    #[error("input module undefined: {0}")]
    InputModuleUndefined(String),

    #[error("irreducible input needs a purely even Levi factor: {0}; use dual_kac")]
    HypothesisViolated(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("output error: {0}")]
    Output(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
