use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// A failed structural check on a presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub code: &'static str,
    pub message: String,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.code, self.message)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid presentation: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Validation(Vec<Violation>),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("numerator not divisible by {divisor}")]
    NotDivisible { divisor: String },
    #[error("coefficient of z^{exponent} requested below the validity window (starts at z^{lo})")]
    OutsideWindow { exponent: i64, lo: i64 },
    #[error("no H-degree left to divide by a linear form; raise the H cap")]
    HCapExhausted,
    #[error("index set {0:?} is not an anticone")]
    NotAnAnticone(Vec<usize>),
    #[error("limit condition fails at weight {index}: <xi, nu'> - r*nu = {value} < 0")]
    LimitFails { index: usize, value: i64 },
    #[error("N = {n} must exceed <theta, nu'>/r = {bound}")]
    NTooSmall { n: i64, bound: String },
    #[error("class {0} is not fixed by the Weyl group")]
    NotWeylInvariant(String),
    #[error("presentation has not been extended")]
    NotExtended,
    #[error("presentation carries no complete-intersection effectiveness data")]
    MissingCIData,
    #[error("truncation box is unbounded")]
    UnboundedBox,
    #[error("z window starts at z^{lo}; mirror map needs coefficients from z^-1")]
    WindowTooNarrow { lo: i64 },
    #[error("Weyl orbit exceeds {0} elements")]
    OrbitTooLarge(usize),
}

impl Error {
    /// Process exit status used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) => 2,
            Error::Validation(_) => 3,
            _ => 4,
        }
    }
}
