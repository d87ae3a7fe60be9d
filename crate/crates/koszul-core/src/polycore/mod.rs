//! Exact arithmetic foundations: rationals, monomials and term orders,
//! sparse multivariate polynomials, and rational linear algebra.

pub mod matrix;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod rat;

pub use matrix::{QMat, SparseEchelon, SparseRow, SparseRref};
pub use monomial::{monomials_of_degree, monomials_up_to, Monomial, MonomialOrder};
pub use parse::PolyParseError;
pub use poly::{Poly, PolyRing};
pub use rat::Rat;
