//! Error type shared by all modules of the crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("elements must be positive integers")]
    ZeroElement,
    #[error("duplicate element {0}")]
    DuplicateElement(usize),
    #[error("element {element} out of range for ground set [{n}]")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("invalid transposition ({0} {1})")]
    InvalidTransposition(usize, usize),
    #[error("ground-set size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("index {index} out of range [1, {len}]")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("cut set is empty")]
    EmptyCuts,
    #[error("cycles overlap: both contain {0}")]
    OverlappingSupports(usize),
    #[error("not a minimal transitive star factorization of the given permutation: {0}")]
    NotAFactorization(String),
    #[error("invalid cycle word: {0}")]
    InvalidWord(String),
    #[error("invalid doubled-factor choice: {0}")]
    InvalidDoubled(String),
    #[error("choice {value} for cycle {cycle} outside [1, {bound}]")]
    ChoiceOutOfBounds {
        cycle: usize,
        value: usize,
        bound: usize,
    },
    #[error("necklace does not match the type vector of the permutation and pivot")]
    NecklaceTypeMismatch,
    #[error("necklace has a crossing")]
    CrossingNecklace,
    #[error("{what} {requested} exceeds supported bound {limit}")]
    BoundExceeded {
        what: &'static str,
        requested: usize,
        limit: usize,
    },
    #[error("outside the counting-formula regime: {0}")]
    OutsideFormulaRegime(String),
    #[error("oracle budget exceeded: {required} candidates > {budget}")]
    BudgetExceeded { required: u128, budget: u128 },
    #[error("interval endpoints are incomparable")]
    Incomparable,
    #[error("shift defect: {0}")]
    ShiftDefect(String),
}

pub type Result<T> = std::result::Result<T, Error>;
