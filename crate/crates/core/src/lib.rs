//! Exact computation of Hilbert–Samuel data, limit closures and Frobenius/tight closure
//! candidates for parameter ideals over prime fields.
//!
//! Two engines share the same vocabulary:
//!
//! * a Gröbner engine for presented rings `F_p[x_1..x_n]/J` localized at the origin, and
//! * a combinatorial engine for affine semigroup rings in two variables.
//!
//! The [`hilbert`] module turns length sequences from either engine into Hilbert
//! coefficients and checks the identities relating them to local cohomology.

pub mod closures;
pub mod error;
pub mod fieldpoly;
pub mod groebner;
pub mod hilbert;
pub mod linalg;
pub mod quotient;
pub mod semigroup;

pub use error::{Error, Result};
