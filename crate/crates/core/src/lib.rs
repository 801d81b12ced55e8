//! Finite Coxeter systems, the Solomon descent algebra, and the Solomon
//! homomorphism into class functions, with exhaustive checkers for the
//! identities relating them.

pub mod chars;
pub mod cosets;
pub mod coxclass;
pub mod coxsys;
pub mod descalg;
pub mod error;
pub mod genset;
pub mod linalg;
pub mod roots;
pub mod scalar;
pub mod types;
pub mod verify;

pub use coxsys::{CoxeterSystem, ElemId, GroupElement, DEFAULT_CAP};
pub use error::{CoxError, Result};
pub use genset::GeneratorSet;
pub use types::{CoxeterMatrix, CoxeterType};
