//! SO(2n) Kauffman polynomial of link diagrams, computed three ways.

mod error;
mod memo;

pub mod cli;
pub mod diagram;
pub mod fixtures;
pub mod graphmodel;
pub mod jaeger;
pub mod kauffman;
pub mod laurent;
pub mod slnpoly;

pub use error::EngineError;
pub use laurent::LaurentPoly;

/// Polynomials with arbitrary-precision coefficients; every engine uses these.
pub type Poly = LaurentPoly<num_bigint::BigInt>;
/// Machine-integer polynomials, for small hand computations.
pub type SmallPoly = LaurentPoly<i64>;
