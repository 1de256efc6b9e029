//! Exact computations around integral forms of Hopf algebras, group-like
//! liftings, lattice vertex algebras and the Virasoro algebra.

pub mod arith;
pub mod curve;
pub mod error;
pub mod hopf;
pub mod lattice_va;
pub mod lifting;
pub mod necklace;
pub mod noghost;
pub mod report;
pub mod scalar;
pub mod witt;

pub use error::{Error, Result};

pub type Q = num_rational::BigRational;
pub type Z = num_bigint::BigInt;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
