use num_bigint::BigInt;
use thiserror::Error;

use crate::tuple::Var;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected}, got {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("a tuple needs at least one entry")]
    EmptyTuple,

    #[error("line {line}: cannot parse `{token}` as an integer")]
    ParseInt { line: usize, token: String },

    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("index {index} is outside 1..={arity}")]
    IndexOutOfRange { index: usize, arity: usize },

    #[error("entry {index} = {value} lies outside domain {domain}")]
    OutOfDomain {
        index: usize,
        value: BigInt,
        domain: &'static str,
    },

    #[error("variable {var} is already bound to {existing}, cannot rebind to {new}")]
    Rebind {
        var: Var,
        existing: BigInt,
        new: BigInt,
    },

    #[error("variable {0} is not assigned")]
    MissingVariable(Var),

    #[error("the lemma needs a nonzero integer")]
    ZeroInput,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("expression parse error: {0}")]
    Expr(String),
}

pub type Result<T> = std::result::Result<T, Error>;
