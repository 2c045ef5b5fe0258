//! Orthogonal polynomials on a union of subintervals of [-1, 1] with a
//! square-root-ratio weight: recurrence data, auxiliary polynomials,
//! product forms, discriminants, zeros and polynomial mappings.

pub mod auxpoly;
pub mod elliptic;
pub mod error;
pub mod genchebyshev;
pub mod intervals;
pub mod mapping;
pub mod poly;
pub mod quadrature;
pub mod recurrence;
pub mod verify;
pub mod zeros;

pub use error::{Error, Result};
pub use intervals::{BranchConfig, WeightMode};
pub use quadrature::QuadratureSpec;
pub use recurrence::RecurrenceTable;
