//! Exact-arithmetic toolkit for log surfaces: coefficient-set algebra,
//! Hirzebruch-Jung continued fractions, dual-graph discrepancies and
//! singularity classification, adjunction coefficients, n-complement
//! feasibility on curves and on the projective plane, degenerate elliptic
//! fiber types, and assorted numerical bound checks.
//!
//! Every quantity is an exact rational; no floating point is used anywhere.

pub mod adjunction;
pub mod checks;
pub mod coeff;
pub mod curves;
mod error;
pub mod graph;
pub mod hj;
pub mod kodaira;
pub mod p2;
pub mod rat;

pub use error::Error;
pub use rat::Rat;

pub type Result<T> = std::result::Result<T, Error>;
