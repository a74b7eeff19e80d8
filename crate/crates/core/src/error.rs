use thiserror::Error;

use crate::ring::Var;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot substitute a non-invertible value for {var} in a term with a negative exponent")]
    NonInvertibleSubstitution { var: Var },

    #[error("negative exponents of {0} are not supported")]
    NegativeExponent(Var),

    #[error("{value} is not exactly divisible by {divisor}")]
    InexactDivision { value: String, divisor: String },

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("weight table has no value at index {0}")]
    UndefinedIndex(i64),

    #[error("q-integer weight evaluated at negative index {0}")]
    NegativeQInteger(i64),

    #[error("invalid weight spec: {0}")]
    InvalidWeightSpec(String),

    #[error("unknown builtin weight pair `{0}`")]
    UnknownBuiltin(String),

    #[error("unknown special family `{0}`")]
    UnknownFamily(String),

    #[error("tableaux with column sums {left} and {right} are not compatible")]
    IncompatibleTableaux { left: i64, right: i64 },

    #[error("domain violation: {0}")]
    DomainViolation(String),

    #[error("weights are not combinatorial: {0}")]
    NonCombinatorialWeights(String),

    #[error("enumeration would exceed the cap of {cap} objects")]
    EnumerationCapExceeded { cap: usize },

    #[error("matrices are not inverse: {0}")]
    NotInverse(String),
}
