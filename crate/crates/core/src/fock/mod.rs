//! Truncated Fock-space ladder representation of u(2,2).
//!
//! The basis is graded by the conformal energy H = (total occupation)/2 + 1
//! and cut off at a caller-chosen `e_max`. Operators are exact sparse
//! matrices carrying a grading shift; every identity check runs only on
//! states guarded against the combined shift, so truncation can never fake
//! or mask an identity.

mod basis;
mod generators;
mod op;

pub use basis::{FockBasis, FockVector, Occupation};
pub use generators::{
    chevalley_generators, conformal_hamiltonian, helicity_op, lowest_weight_vector, mass_shell_op,
    momentum, momentum_sign, nilpotent_orbit_checks, second_quantize, second_quantized_expr,
    spectrum_full, spectrum_helicity, Chevalley,
};
pub use op::{annihilate, create, oscillator, FockOp, Mode, OscExpr, OscFactor, OscTerm, MODES};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FockError {
    #[error("cutoff e_max = {0} must be at least 1")]
    InvalidCutoff(u16),
    #[error(
        "guard band violation: state with occupation {occupation} under shift {delta} exceeds cutoff {cutoff}"
    )]
    GuardBand { occupation: u16, delta: u32, cutoff: u16 },
    #[error("operators differ on guarded state {state}")]
    OperatorMismatch { state: String },
    #[error("helicity {helicity} exceeds the cutoff occupation {cutoff}")]
    HelicityOutOfRange { helicity: i64, cutoff: u16 },
}
