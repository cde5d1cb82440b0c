//! Exact Bernoulli numbers from explicit Stirling- and Eulerian-number
//! formulas, cross-checked against a recurrence oracle, the closed forms of
//! the negative-order polylogarithm, and numerical zeta integral identities.

pub mod bernoulli;
pub mod consistency;
pub mod error;
pub mod identities;
pub mod polylog;
pub mod quadrature;
pub mod rational;
pub mod tables;

pub use error::{Error, Result};
