//! Factorization of formal contexts into independent subcontexts.
//!
//! Boolean contexts are split along the atoms of the lattice of fixpoints of
//! the necessity operators `(↑N, ↓N)`. For multi-adjoint (graded) contexts
//! the crate enumerates the analogous graded fixpoints, checks the
//! inequalities that relate them to the possibility and derivation operators,
//! and extracts the intervals of concepts they delimit.
//!
//! The crate is `no_std` and only needs `alloc`. File formats and the
//! command-line front end live in the `galois-factor` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bitset;
pub mod boolean;
pub mod closure;
mod error;
pub mod factor;
pub mod fuzzy;
pub mod grade;
pub mod oracle;
pub mod order;

pub use error::{Error, Result};
