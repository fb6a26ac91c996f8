//! Exact multivariate polynomials, monomial orders, matrices of polynomials
//! and the expression parser.

mod matrix;
mod monomial;
mod parse;
mod polynomial;

pub use matrix::{row_subsets, PolyMatrix};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::{parse, ParseError};
pub use polynomial::Polynomial;
