//! Exact arithmetic over Q and cyclotomic fields, with dense linear algebra.

mod cyclo;
mod eigen;
mod matrix;
mod modular;
mod parse;
mod poly;
mod roots;
mod subspace;

pub use cyclo::{cyclo_conj, cyclo_mul, cyclotomic_polynomial, euler_phi, CycloField, CycloScalar};
pub use eigen::{restrict_to, simultaneous_eigenspaces, EigenBlock};
pub use matrix::{Echelon, ExactMatrix};
pub use modular::ModularReduction;
pub use parse::{ScalarParseError, MAX_DIGITS};
pub use poly::Poly;
pub use roots::{roots_in_field, RootSearch};
pub use subspace::{BasisSolver, Subspace};

/// Arbitrary-precision rationals, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("cyclotomic order mismatch: {0} vs {1}")]
    OrderMismatch(u32, u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrices {0} and {1} do not commute")]
    NonCommuting(usize, usize),
    #[error("matrix {0} is not diagonalizable")]
    NotDiagonalizable(usize),
    #[error("eigenvalue outside the coefficient field; unsplit factor {0}")]
    EigenvalueOutsideField(String),
    #[error("root search would examine {0} candidate tuples")]
    RootSearchCap(u64),
    #[error("zero polynomial has no finite root set")]
    ZeroPolynomial,
}
