use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid quiver: {0}")]
    Quiver(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("not a module homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("seed is not a complement: {0}")]
    Seed(String),
    #[error("no completion strategy applies: {0}")]
    StrategyUnavailable(String),
    #[error("base quiver is not Dynkin: {0}")]
    NotDynkin(String),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("internal invariant broken: {0}")]
    Internal(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
