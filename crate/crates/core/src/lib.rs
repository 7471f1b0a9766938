//! Exact localized torus-equivariant motivic Chern classes of configuration
//! spaces and orbit configuration spaces, together with machine checks of
//! their exponential generating series, the residue form of the orbit series,
//! and the stability of classes under the limit map.
//!
//! Everything is computed over exact rationals; there is no floating point.

pub mod arith;
pub mod classes;
mod error;
pub mod limits;
pub mod partitions;
pub mod report;
pub mod series;

pub use arith::{LaurentPoly, Monomial, RatFunc, Rational, Universe, VarUniverse};
pub use error::{Error, Result};
pub use report::CheckReport;
