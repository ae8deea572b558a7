//! Prime fields, monomials, term orders and sparse polynomials.

mod field;
mod monomial;
mod parse;
mod poly;

pub use field::PrimeField;
pub use monomial::{Monomial, MonomialOrder};
pub use parse::{parse_poly, parse_poly_list};
pub use poly::{poly_arith, ArithKind, PolyRing, Polynomial};
