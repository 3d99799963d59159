//! Exact computations for type B Hecke algebras with unequal parameters,
//! domino insertion, level-2 Fock space crystals and canonical bases.

pub mod bounds;
pub mod canonical;
pub mod cells;
pub mod combinat;
pub mod crystal;
pub mod cyclotomic;
pub mod domino;
pub mod error;
pub mod fock;
pub mod hecke;
pub mod laurent;
pub mod linalg;
pub mod orders;
pub mod scalar;
pub mod specht;
pub mod weyl;

pub use bounds::Bounds;
pub use error::{Error, Result};
pub use laurent::{Gamma, Laurent};

/// Laurent polynomials in `Q = e^b`, `q = e^a` with integer coefficients.
pub type ACoeff = laurent::Laurent<Gamma, i64>;
/// Laurent polynomials in `v` with integer coefficients.
pub type VPoly = laurent::Laurent<i32, i64>;
pub use cyclotomic::CycloNumber;
