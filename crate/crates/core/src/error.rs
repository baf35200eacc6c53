use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("constant polynomial not allowed here")]
    ConstantPolynomial,
    #[error("degree {degree} exceeds the certified cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },
    #[error("recombination budget exhausted after {0} subsets")]
    RecombinationBudget(u64),
    #[error("precision ceiling of {0} bits reached")]
    PrecisionExhausted(u32),
    #[error("root tracking ambiguous at index {0}")]
    RootTrackingAmbiguous(usize),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("{0} is not a prime below 2^64")]
    NotPrime(String),
    #[error("length condition fails: |f|_1 = {length} >= 2p = {bound}")]
    LengthConditionFailed { length: String, bound: String },
    #[error("constant term is not +-p")]
    ConstantTermMismatch,
    #[error("inconsistent integral basis: {0}")]
    InconsistentBasis(String),
    #[error("search budget exceeded after radius {radius}; best candidate {best:?}")]
    SearchBudgetExceeded { radius: i64, best: Option<Vec<i64>> },
    #[error("line is contained in the hypersurface")]
    LineContained,
    #[error("outside desk-scale limits: {0}")]
    ScaleCap(String),
    #[error("hypersurface is singular")]
    NotSmooth,
    #[error("no smooth section among {tried} candidates")]
    BudgetExhausted { tried: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("value exceeds the representable exponent range: {0}")]
    Overflow(String),
    #[error("negative value where a non-negative real is required: {0}")]
    NegativeValue(String),
}

pub type Result<T> = std::result::Result<T, Error>;
