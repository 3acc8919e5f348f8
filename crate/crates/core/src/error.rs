use thiserror::Error;

use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("monomials of different degrees ({0} and {1}) are not Borel-comparable")]
    DegreeMismatch(u32, u32),

    #[error("invalid weight vector: {0}")]
    InvalidWeight(String),

    #[error("matrix is singular")]
    Singular,

    #[error("no invertible matrix found after {0} draws")]
    RedrawLimit(usize),

    #[error("polynomial is not homogeneous: found degrees {0} and {1}")]
    Inhomogeneous(u32, u32),

    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,

    #[error("genericity not reached: {} distinct candidates over the trials", candidates.len())]
    GenericityNotReached { candidates: Vec<MonomialIdeal> },

    #[error("Koszul-Betti tensors disagree between seeds {0} and {1}")]
    KoszulGenericity(u64, u64),

    #[error("ideal is not strongly stable (witness {0})")]
    NotStronglyStable(Monomial),

    #[error("degree bound {bound} is too small: {reason}")]
    BoundTooSmall { bound: u32, reason: String },

    #[error("value out of range: {0}")]
    OutOfRange(String),

    #[error("linear forms are dependent")]
    DependentForms,

    #[error("not almost Borel-fixed in degree {degree}: {reason}")]
    NotAlmostBorelFixed { degree: u32, reason: String },

    #[error("monomials {0} and {1} are Borel-comparable")]
    ComparablePair(Monomial, Monomial),

    #[error("invalid construction input: {0}")]
    InvalidConstruction(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
