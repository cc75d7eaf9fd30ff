//! Exact rational dense linear algebra.
//!
//! The substrate for everything else: scalars, matrices with
//! deterministic fraction-free elimination, and canonical-form
//! subspaces. All values are immutable after construction and all
//! operations are pure.

pub mod intertwine;
pub mod mat;
pub mod scalar;
pub mod subspace;

pub use mat::{kernel_rows, rref, solve, Mat, Solution};
pub use scalar::Scalar;
pub use subspace::Subspace;

use core::fmt;

/// Usage errors of the linear-algebra layer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactError {
    ShapeMismatch { context: &'static str },
    AmbientMismatch { left: usize, right: usize },
}

impl fmt::Display for ExactError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactError::ShapeMismatch { context } => write!(f, "shape mismatch: {context}"),
            ExactError::AmbientMismatch { left, right } => {
                write!(f, "ambient dimension mismatch: {left} vs {right}")
            }
        }
    }
}
