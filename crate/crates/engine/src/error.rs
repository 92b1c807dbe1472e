use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("invalid variable name `{0}`")]
    InvalidVariable(String),
    #[error("bidegree {0:?} outside allowed shape: must be (1,0) or (d,1) with d >= 1")]
    BadBidegree((i64, i64)),
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u64),
    #[error("monomial order blocks do not partition the variable set")]
    BadOrderBlocks,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("division by zero")]
    ZeroDivision,
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("exact division failed: divisor does not divide dividend")]
    InexactDivision,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("resource budget exceeded: instance too large")]
    BudgetExceeded,
    #[error("unit ideal has no dimension")]
    UnitIdeal,
    #[error("input is not graded: {0}")]
    NotGraded(String),
    #[error("Pfaffian requires even order, got {0}")]
    OddPfaffianOrder(usize),
    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),
    #[error("lift failed: {0}")]
    LiftFailed(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
