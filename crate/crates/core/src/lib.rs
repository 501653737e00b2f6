//! Exact Bernoulli-family and Stirling-family numbers.
//!
//! Every quantity is computed over big rationals, usually along several
//! independent routes (determinants, recursions, closed forms, power-series
//! coefficients) so the routes can be checked against each other.

#![allow(clippy::needless_range_loop)]

pub mod bell;
pub mod bernoulli;
pub mod error;
pub mod exact;
pub mod expansions;
pub mod fps;
pub mod hessenberg;
pub mod identities;
pub mod stirling;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{Integer, Rational};
pub use fps::PowerSeries;
pub use hessenberg::{DerivativePair, HessenbergMatrix};
pub use identities::{IdentityInstance, IdentityReport};
pub use stirling::StirlingTables;
pub use verify::VerifyReport;
