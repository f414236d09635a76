//! Exact computations with chord diagrams, their quotient spaces, singular
//! knots and finite-type invariants.

pub mod config;
pub mod diagrams;
pub mod error;
pub mod formal;
pub mod hopf;
pub mod invariants;
pub mod knots;
pub mod linalg;
pub mod perm;
pub mod quotients;

pub use error::{Error, Result};
