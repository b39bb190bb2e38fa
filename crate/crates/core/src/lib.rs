//! Desk-scale verification engine for the positive-energy oscillator
//! (ladder) representation of u(2,2) and its surroundings: exact gamma-matrix
//! algebra, a truncated bosonic Fock space with second-quantized generators,
//! the complex parametrization of compactified Minkowski space, the
//! vertex-operator realization of the free massless scalar field, and the
//! partition-function / Eisenstein-series / black-body chain.
//!
//! Everything that is an exact identity is checked in arbitrary-precision
//! rational arithmetic; floating point appears only in the geometric maps
//! and in numerical series evaluation, always with explicit tolerances.

pub mod clifford;
pub mod fock;
pub mod geometry;
pub mod exact;
pub mod linalg;
pub mod matrix;
pub mod modular;
pub mod poly;
pub mod qseries;
pub mod report;
pub mod suites;
pub mod thermo;
pub mod vertex;

pub use exact::{ExactComplex, Rat};
pub use matrix::{Mat2, Mat4};
pub use poly::Poly4;
pub use qseries::QSeries;
