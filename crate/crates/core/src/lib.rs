//! Exact-arithmetic workbench for split Lie algebras built from
//! sl(2)-blocks: symmetric decompositions, the exceptional holonomy
//! representations of g2 and so(7), the Cayley cross product, and
//! machine-checked certificates for the isotropy and curvature facts
//! that come with them.
//!
//! Everything is computed over the rationals in split form. Every
//! identity certified here is a polynomial identity with rational
//! coefficients in objects defined over the rationals, so it holds
//! verbatim over any extension field, in particular over the complex
//! numbers. No floating point is used anywhere.
//!
//! The crate is `no_std` (with `alloc`); IO, JSON schemas, and the
//! command-line driver live in the companion `exholo` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod cert;
pub mod exact;
pub mod holo;
pub mod lie;
pub mod quadric;
pub mod sl2;
pub mod symdec;
