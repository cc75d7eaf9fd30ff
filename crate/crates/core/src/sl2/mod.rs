//! Representation machinery for products of sl(2).
//!
//! Modules are given concretely by the 3k action matrices of the
//! generators E_j, F_j, H_j. Everything downstream — tensor products,
//! weight decompositions, the invariant projections onto U_2 and U_0,
//! intertwiner spaces, and branching along diagonal morphisms — reduces
//! to exact matrix identities and kernels.

pub mod clebsch;
pub mod decompose;
pub mod equivariant;
pub mod module;
pub mod tensor;

pub use clebsch::{clebsch_projection, ClebschTarget};
pub use decompose::{decompose, IsotypicList};
pub use equivariant::equivariant_maps;
pub use module::Sl2kModule;
pub use tensor::{BilinearTensor, Symmetry};

use alloc::string::String;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Sl2Error {
    /// The two operands live over different numbers of sl(2) factors.
    FactorMismatch { left: usize, right: usize },
    /// An action matrix violates one of the defining bracket identities.
    BracketIdentity { factor: usize, identity: &'static str },
    /// The module fails to split into integral weight spaces.
    MalformedModule(String),
    /// A subspace is not invariant under the module actions.
    NotInvariant,
    /// A branch assignment does not cover every slot or names a missing
    /// target generator.
    BadAssignment,
}

impl fmt::Display for Sl2Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sl2Error::FactorMismatch { left, right } => {
                write!(f, "factor count mismatch: {left} vs {right}")
            }
            Sl2Error::BracketIdentity { factor, identity } => {
                write!(f, "bracket identity {identity} fails in factor {factor}")
            }
            Sl2Error::MalformedModule(msg) => write!(f, "malformed module: {msg}"),
            Sl2Error::NotInvariant => write!(f, "subspace is not invariant"),
            Sl2Error::BadAssignment => write!(f, "invalid branch assignment"),
        }
    }
}
