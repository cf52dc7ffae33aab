use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("leading term of zero")]
    LeadingTermOfZero,

    #[error("operands live in different rings: {0:?} vs {1:?}")]
    RingMismatch(crate::variable::Ring, crate::variable::Ring),

    #[error("variable {0} is not part of the ring {1:?}")]
    VariableOutsideRing(String, crate::variable::Ring),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("saturation or quotient by the zero polynomial")]
    ZeroDenominator,

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("generators are not homogeneous under the column grading: {0}")]
    Inhomogeneous(String),

    #[error("pair budget of {0} S-pairs exceeded")]
    BudgetExceeded(usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    /// CLI exit code: 1 verification failure, 2 resource budget, 3 input error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::BudgetExceeded(_) => 2,
            _ => 3,
        }
    }
}
