//! Multi-adjoint contexts, their six graded operators, the lattice `F_N` of
//! graded necessity pairs and the checks that relate it to concepts.

mod concepts;
mod context;
mod frame;
mod necessity;
mod ops;
mod props;

#[cfg(test)]
pub(crate) mod testing;

pub use concepts::{fuzzy_concepts, FuzzyConceptLattice, MultiAdjointConcept};
pub use context::{FuzzyContext, Graded, GradedAttributeSet, GradedObjectSet};
pub use frame::{Frame, FrameKind, Operator};
pub use necessity::{fn_enumerate, fn_meet, FnLattice, FuzzyNecessityPair, DEFAULT_BUDGET};
pub use props::{
    check_fp1, check_fp2, check_fp3, check_fp4, interval_from_pair, is_normalized,
    is_top_normalized, AttributeHypothesis, Axis, Fp3Report, Fp4Report, Interval,
};
