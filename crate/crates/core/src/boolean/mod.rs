//! Boolean formal contexts, their six modal operators and concept lattices.

mod concepts;
pub(crate) mod context;
mod normalize;
mod ops;

#[cfg(test)]
pub(crate) mod testing;

pub use concepts::{concepts, property_oriented_concepts, ConceptLattice, FormalConcept};
pub use context::{
    AttributeSubset, Attributes, BooleanContext, ContextId, ObjectSubset, Objects, Side, Subset,
};
pub use normalize::{normalize, NormalizationPass, NormalizationReport};
