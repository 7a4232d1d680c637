use super::context::{AttributeSubset, BooleanContext, ObjectSubset};
use crate::closure::all_closed_sets;
use crate::order::Hasse;
use alloc::vec::Vec;

/// `⟨X, Y⟩` with `X^↑ = Y` and `Y^↓ = X`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FormalConcept {
    pub(crate) extent: ObjectSubset,
    pub(crate) intent: AttributeSubset,
}

impl FormalConcept {
    pub fn extent(&self) -> &ObjectSubset {
        &self.extent
    }

    pub fn intent(&self) -> &AttributeSubset {
        &self.intent
    }

    /// The concept generated by an object set: `⟨X^↑↓, X^↑⟩`.
    pub fn from_extent(ctx: &BooleanContext, x: &ObjectSubset) -> crate::Result<Self> {
        let intent = ctx.up(x)?;
        let extent = ctx.down(&intent)?;
        Ok(FormalConcept { extent, intent })
    }

    /// The concept generated by an attribute set: `⟨Y^↓, Y^↓↑⟩`.
    pub fn from_intent(ctx: &BooleanContext, y: &AttributeSubset) -> crate::Result<Self> {
        let extent = ctx.down(y)?;
        let intent = ctx.up(&extent)?;
        Ok(FormalConcept { extent, intent })
    }
}

/// All concepts of a context ordered by extent, with their Hasse diagram.
#[derive(Debug, Clone)]
pub struct ConceptLattice {
    pub(crate) concepts: Vec<FormalConcept>,
    pub(crate) hasse: Hasse,
}

impl ConceptLattice {
    pub fn concepts(&self) -> &[FormalConcept] {
        &self.concepts
    }

    pub fn len(&self) -> usize {
        self.concepts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.concepts.is_empty()
    }

    pub fn hasse(&self) -> &Hasse {
        &self.hasse
    }

    /// `(lower, upper)` cover edges.
    pub fn covers(&self) -> &[(usize, usize)] {
        self.hasse.covers()
    }

    /// `C_i ⪯ C_j`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.concepts[i].extent.is_subset(&self.concepts[j].extent)
    }

    pub fn index_of_extent(&self, extent: &ObjectSubset) -> Option<usize> {
        self.concepts
            .binary_search_by(|c| c.extent.cmp(extent))
            .ok()
    }

    pub fn index_of(&self, concept: &FormalConcept) -> Option<usize> {
        self.index_of_extent(&concept.extent)
            .filter(|&i| self.concepts[i].intent == concept.intent)
    }

    pub fn top(&self) -> Option<usize> {
        self.hasse.top()
    }

    pub fn bottom(&self) -> Option<usize> {
        self.hasse.bottom()
    }

    pub fn atoms(&self) -> Vec<usize> {
        self.hasse.atoms()
    }

    pub fn coatoms(&self) -> Vec<usize> {
        self.hasse.coatoms()
    }

    pub fn is_join_irreducible(&self, i: usize) -> bool {
        self.hasse.is_join_irreducible(i)
    }
}

/// Enumerates every formal concept.
///
/// Intents are generated as the closed sets of `Y ↦ Y^↓↑` in lectic order,
/// then the concepts are re-sorted by extent (lexicographic on the object
/// indicator vector), which is a linear extension of `⪯`.
pub fn concepts(ctx: &BooleanContext) -> ConceptLattice {
    let intents = all_closed_sets(ctx.attribute_count(), |y| ctx.up_bits(&ctx.down_bits(y)));
    let mut concepts: Vec<FormalConcept> = intents
        .into_iter()
        .map(|y| FormalConcept {
            extent: ctx.wrap(ctx.down_bits(&y)),
            intent: ctx.wrap(y),
        })
        .collect();
    concepts.sort();
    let hasse = Hasse::from_linear_extension(concepts.len(), |i, j| {
        concepts[i].extent.is_subset(&concepts[j].extent)
    });
    ConceptLattice { concepts, hasse }
}

/// Fixpoints of `X ↦ X^↑π↓N` paired with `X^↑π`, ordered by extent.
pub fn property_oriented_concepts(ctx: &BooleanContext) -> Vec<(ObjectSubset, AttributeSubset)> {
    let extents = all_closed_sets(ctx.object_count(), |x| ctx.down_n_bits(&ctx.up_pi_bits(x)));
    let mut out: Vec<_> = extents
        .into_iter()
        .map(|x| {
            let y = ctx.up_pi_bits(&x);
            (ctx.wrap(x), ctx.wrap(y))
        })
        .collect();
    out.sort();
    out
}
