//! Finite grade chains and adjoint triples over them, with exact arithmetic.

mod chain;
mod check;
mod triple;

pub use chain::{Grade, GradeChain};
pub use check::{check_triple_properties, Residuum, TripleFailure, TripleReport};
pub use triple::{residua_by_adjointness, AdjointTriple, TripleFamily};
