//! Exact Bernoulli/Euler polynomials, truncated power series, complex special
//! functions and the identity-verification harness built on them.

pub mod error;
pub mod exactpoly;
pub mod harness;
pub mod powerseries;
pub mod quadrature;
pub mod specfun;

pub use error::{Error, Result};
pub use rug::{Integer, Rational};
