//! Generic initial ideals, lex-segment ideals and Koszul-Betti numbers of
//! homogeneous ideals in `Q[x1, ..., xn]`.

pub mod abf;
pub mod betti;
pub mod coords;
pub mod corpus;
pub mod error;
pub mod fm;
pub mod graded;
pub mod groebner;
pub mod ideal;
pub mod koszul;
pub mod linalg;
pub mod monomial;
pub mod order;
pub mod polynomial;
pub mod stable;

pub use abf::{enumerate_gins, recognize, AlmostBorelFixedIdeal, GinFamily};
pub use betti::{BettiTable, KoszulBettiTensor};
pub use coords::{random_coordinates, ChangeOfCoordinates, MatrixShape};
pub use error::{Error, Result};
pub use graded::{DegreeSpace, GradedIdeal};
pub use groebner::{buchberger, gin, GinOptions, GroebnerBasis};
pub use ideal::MonomialIdeal;
pub use koszul::{LinearFormSequence, QuotientRing};
pub use monomial::{borel_compare, Monomial};
pub use order::{TermOrder, Tiebreak};
pub use polynomial::{Polynomial, Term};

/// Coefficient field: arbitrary-precision rationals.
pub type Coeff = num_rational::BigRational;
