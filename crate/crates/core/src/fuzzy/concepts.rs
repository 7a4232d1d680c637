use super::context::{FuzzyContext, GradedAttributeSet, GradedObjectSet};
use super::frame::Operator;
use super::necessity::{for_each_grid_point, require_budget};
use crate::error::{Error, Result};
use crate::order::Hasse;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;

/// `⟨g, f⟩` with `g^↑ = f` and `f^↓ = g`, ordered by extent.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiAdjointConcept {
    pub(crate) extent: GradedObjectSet,
    pub(crate) intent: GradedAttributeSet,
}

impl MultiAdjointConcept {
    pub fn new(
        ctx: &FuzzyContext,
        extent: GradedObjectSet,
        intent: GradedAttributeSet,
    ) -> Result<Self> {
        if ctx.up(&extent)? != intent || ctx.down(&intent)? != extent {
            return Err(Error::ContractViolation(
                "not a multi-adjoint concept".into(),
            ));
        }
        Ok(MultiAdjointConcept { extent, intent })
    }

    /// `⟨g^↑↓, g^↑⟩`.
    pub fn from_objects(ctx: &FuzzyContext, g: &GradedObjectSet) -> Result<Self> {
        let intent = ctx.up(g)?;
        let extent = ctx.down(&intent)?;
        Ok(MultiAdjointConcept { extent, intent })
    }

    /// `⟨f^↓, f^↓↑⟩`.
    pub fn from_attributes(ctx: &FuzzyContext, f: &GradedAttributeSet) -> Result<Self> {
        let extent = ctx.down(f)?;
        let intent = ctx.up(&extent)?;
        Ok(MultiAdjointConcept { extent, intent })
    }

    pub fn extent(&self) -> &GradedObjectSet {
        &self.extent
    }

    pub fn intent(&self) -> &GradedAttributeSet {
        &self.intent
    }

    pub fn leq(&self, other: &Self) -> bool {
        self.extent.leq(&other.extent)
    }
}

#[derive(Debug, Clone)]
pub struct FuzzyConceptLattice {
    pub(crate) concepts: Vec<MultiAdjointConcept>,
    pub(crate) hasse: Hasse,
}

impl FuzzyConceptLattice {
    pub fn concepts(&self) -> &[MultiAdjointConcept] {
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

    pub fn covers(&self) -> &[(usize, usize)] {
        self.hasse.covers()
    }

    pub fn index_of_extent(&self, g: &GradedObjectSet) -> Option<usize> {
        self.concepts.binary_search_by(|c| c.extent.cmp(g)).ok()
    }

    pub fn index_of(&self, c: &MultiAdjointConcept) -> Option<usize> {
        self.index_of_extent(&c.extent)
    }

    pub fn top(&self) -> Option<usize> {
        self.hasse.top()
    }

    pub fn bottom(&self) -> Option<usize> {
        self.hasse.bottom()
    }
}

/// Every concept, as the closure of each point of the smaller of the two grids
/// `L2^B` and `L1^A`.
pub fn fuzzy_concepts(ctx: &FuzzyContext, budget: u128) -> Result<FuzzyConceptLattice> {
    ctx.check(Operator::Up)?;
    ctx.check(Operator::Down)?;
    let by_objects = ctx.object_grid_size();
    let by_attributes = ctx.attribute_grid_size();
    require_budget(by_objects.min(by_attributes), budget)?;

    let mut extents = BTreeSet::new();
    if by_objects <= by_attributes {
        for_each_grid_point(ctx.object_count(), ctx.frame().l2().m(), |g| {
            extents.insert(ctx.down_raw(&ctx.up_raw(g)));
        });
    } else {
        for_each_grid_point(ctx.attribute_count(), ctx.frame().l1().m(), |f| {
            extents.insert(ctx.down_raw(f));
        });
    }
    let (l1, l2) = (ctx.frame().l1(), ctx.frame().l2());
    let concepts: Vec<MultiAdjointConcept> = extents
        .into_iter()
        .map(|g| {
            let f = ctx.up_raw(&g);
            MultiAdjointConcept {
                extent: ctx.wrap(l2, g),
                intent: ctx.wrap(l1, f),
            }
        })
        .collect();
    let hasse = Hasse::from_linear_extension(concepts.len(), |i, j| concepts[i].leq(&concepts[j]));
    Ok(FuzzyConceptLattice { concepts, hasse })
}

#[cfg(test)]
mod tests {
    use super::super::necessity::DEFAULT_BUDGET;
    use super::super::testing::{build, dprod_r2, godel_r2};
    use super::super::Frame;
    use super::*;

    #[test]
    fn godel_r2_has_seven_concepts() {
        let ctx = godel_r2();
        let lattice = fuzzy_concepts(&ctx, DEFAULT_BUDGET).unwrap();
        assert_eq!(lattice.len(), 7);
        let listed: [(&[u32], &[u32]); 7] = [
            (&[0, 0, 0], &[4, 4, 4]),
            (&[2, 1, 0], &[4, 4, 0]),
            (&[0, 0, 4], &[0, 0, 4]),
            (&[4, 1, 0], &[4, 2, 0]),
            (&[2, 4, 0], &[1, 4, 0]),
            (&[4, 4, 0], &[1, 2, 0]),
            (&[4, 4, 4], &[0, 0, 0]),
        ];
        for (g, f) in listed {
            let c = MultiAdjointConcept::new(
                &ctx,
                ctx.graded_objects(g).unwrap(),
                ctx.graded_attributes(f).unwrap(),
            )
            .unwrap();
            assert!(lattice.index_of(&c).is_some(), "{g:?}");
        }
        let top = MultiAdjointConcept::from_attributes(&ctx, &ctx.attributes_bottom()).unwrap();
        assert_eq!(lattice.index_of(&top), lattice.top());
    }

    #[test]
    fn dprod_r2_has_the_block_extent() {
        let ctx = dprod_r2();
        let lattice = fuzzy_concepts(&ctx, DEFAULT_BUDGET).unwrap();
        assert!(lattice
            .index_of_extent(&ctx.graded_objects(&[4, 0, 4]).unwrap())
            .is_some());
    }

    #[test]
    fn both_grids_give_the_same_lattice() {
        // 2 attributes x 3 objects forces the attribute-side scan
        let ctx = build(Frame::godel(3).unwrap(), &[&[3, 1, 0], &[0, 2, 3]]);
        assert!(ctx.attribute_grid_size() < ctx.object_grid_size());
        let lattice = fuzzy_concepts(&ctx, DEFAULT_BUDGET).unwrap();
        let mut by_objects = BTreeSet::new();
        for_each_grid_point(3, 3, |g| {
            by_objects.insert(ctx.down_raw(&ctx.up_raw(g)));
        });
        let extents: Vec<Vec<u32>> = lattice
            .concepts()
            .iter()
            .map(|c| c.extent().values().to_vec())
            .collect();
        assert_eq!(extents, by_objects.into_iter().collect::<Vec<_>>());
    }

    #[test]
    fn budget_applies_to_the_smaller_grid() {
        let ctx = godel_r2();
        assert!(matches!(
            fuzzy_concepts(&ctx, 124),
            Err(Error::BudgetExceeded { required: 125, .. })
        ));
    }
}
