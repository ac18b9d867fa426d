//! Orthogonal-polynomial machinery for the Gaussian ensembles: Hermite
//! polynomials and functions, the Airy function, and the correlation
//! kernels (Christoffel–Darboux, sine, Airy) together with the bulk and
//! soft-edge rescalings that connect the finite-`N` kernel to its two
//! universal limits.

use core::fmt;

mod airy;
mod hermite;
mod kernels;

pub use airy::{airy, AIRY_AT_ZERO, AIRY_DERIV_AT_ZERO};
pub use hermite::{
    hermite_bulk_asymptotic, hermite_function, hermite_function_sequence, hermite_poly,
    hermite_steepest_descent, BulkAsymptotic, SteepestDescent,
};
pub use kernels::{AiryKernel, BulkScaledCd, ChristoffelDarboux, EdgeScaledCd, SineKernel};

/// A symmetric scalar correlation kernel `K(x, y)`.
///
/// `diagonal` exists as a separate method because several kernels are
/// defined off-diagonal by a divided difference whose diagonal value needs
/// a different (limit) formula; implementations guarantee the two agree to
/// within `1e−6 · (1 + |K(x,x)|)` as `y → x`.
pub trait Kernel {
    /// `K(x, y)`.
    fn evaluate(&self, x: f64, y: f64) -> f64;

    /// `K(x, x)` via the stable diagonal formula.
    fn diagonal(&self, x: f64) -> f64;
}

/// Errors from the orthogonal-polynomial layer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrthoError {
    /// The Airy evaluator is only supported on `[−30, 30]`.
    AiryOutOfRange,
    /// Steepest-descent asymptotics require index `n ≥ 10`.
    SteepestDescentIndex,
    /// Steepest-descent asymptotics require `|y| < 0.9` (the oscillatory
    /// region, away from the turning points).
    SteepestDescentRegion,
}

impl fmt::Display for OrthoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::AiryOutOfRange => write!(f, "Airy argument outside [-30, 30]"),
            Self::SteepestDescentIndex => {
                write!(f, "steepest-descent approximation needs index n >= 10")
            }
            Self::SteepestDescentRegion => {
                write!(f, "steepest-descent approximation needs |y| < 0.9")
            }
        }
    }
}

impl core::error::Error for OrthoError {}
