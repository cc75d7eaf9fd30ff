//! Lie algebras as exact structure constants, with the certification
//! toolkit: Jacobi defects, Killing form, semisimplicity and simplicity
//! tests, rank, invariant bilinear forms, isotropy subalgebras, and
//! subalgebra extraction.

pub mod algebra;
pub mod invariance;
pub mod rep;

pub use algebra::{cartan_label, CartanLabel, JacobiViolation, LieAlgebra};
pub use invariance::{invariance_subalgebra, Constraint, Tensor12};
pub use rep::Representation;

use alloc::string::String;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LieError {
    /// The bracket relation rho([x,y]) = [rho(x), rho(y)] fails.
    BracketRelation { i: usize, j: usize },
    /// A subspace is not closed under the bracket; the witness pair of
    /// basis indices is reported.
    NotClosed { i: usize, j: usize },
    /// The deterministic trial sequence found no regular element.
    NoRegularElement,
    /// A guaranteed property failed, which signals a bug upstream.
    InternalInconsistency(String),
    /// Structure constants are not antisymmetric.
    NotAntisymmetric { i: usize, j: usize, k: usize },
}

impl fmt::Display for LieError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieError::BracketRelation { i, j } => {
                write!(f, "bracket relation fails on basis pair ({i}, {j})")
            }
            LieError::NotClosed { i, j } => {
                write!(f, "subspace not bracket-closed: witness pair ({i}, {j})")
            }
            LieError::NoRegularElement => {
                write!(f, "no regular element found within the trial budget")
            }
            LieError::InternalInconsistency(msg) => write!(f, "internal inconsistency: {msg}"),
            LieError::NotAntisymmetric { i, j, k } => {
                write!(f, "structure constants not antisymmetric at ({i}, {j}, {k})")
            }
        }
    }
}
