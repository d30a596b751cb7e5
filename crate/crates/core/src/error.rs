use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("invalid variable order: {0}")]
    InvalidOrder(String),

    #[error("polynomials are defined over different variable orders")]
    OrderMismatch,

    #[error("{0}: zero polynomial")]
    ZeroPolynomial(&'static str),

    #[error("{op}: both polynomials are constant in `{var}`")]
    ConstantInVariable { op: &'static str, var: String },

    #[error("no value assigned to variable `{0}`")]
    MissingAssignment(String),

    #[error("at least {needed} variables required, got {got}")]
    TooFewVariables { needed: usize, got: usize },

    #[error("polynomial is not univariate")]
    NotUnivariate,

    #[error("chain collapsed to zero at level {level} (eliminating `{var}`): input is not squarefree in that variable")]
    ChainCollapsed { level: usize, var: String },

    #[error("no information: {0}")]
    NoInformation(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors caused by malformed user input (text or variable names).
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. } | Error::UnknownVariable(_) | Error::InvalidOrder(_)
        )
    }

    /// True for errors that indicate a bug rather than a bad or degenerate input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}
