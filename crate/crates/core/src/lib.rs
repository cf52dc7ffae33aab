//! Exact computer algebra for families of matrix Hessenberg schemes.
//!
//! The crate provides sparse multivariate polynomials over the rationals in
//! the matrix coordinates `z[i,j]` together with the scalar variables `t`
//! (family parameter), `s` (localization helper) and `w` (intersection
//! helper), a Buchberger engine with the coprime-pair criterion, ideal
//! calculus (sums, products, intersections, quotients, elimination,
//! saturation), combinatorial dimension and multidegree computations, the
//! Hessenberg/Schubert constructors, and the verification jobs exposed by
//! the `hessex` CLI.

pub mod error;
pub mod groebner;
pub mod hessenberg;
pub mod ideal;
pub mod monomial;
pub mod multidegree;
pub mod order;
pub mod polynomial;
pub mod schubert;
pub mod text;
pub mod util;
pub mod variable;
pub mod verify;
pub mod xpoly;

pub use error::Error;
pub use groebner::{
    buchberger, buchberger_with, divide, is_groebner_basis, reduces_to_zero, s_polynomial,
    DivisionResult, GbOptions, GroebnerBasis,
};
pub use ideal::Ideal;
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use polynomial::{Polynomial, Rational};
pub use variable::{Ring, Variable};
pub use xpoly::XPoly;
