use super::cn::{cn_atoms, cn_enumerate, NecessityPair, MATERIALIZE_LIMIT};
use crate::bitset::BitSet;
use crate::boolean::{
    normalize, AttributeSubset, BooleanContext, FormalConcept, NormalizationReport, ObjectSubset,
};
use crate::error::{Error, Result};
use alloc::vec::Vec;

/// One independent subcontext: an atom of `C_N` and the relation restricted to it.
#[derive(Debug, Clone)]
pub struct Block {
    objects: ObjectSubset,
    attributes: AttributeSubset,
    context: BooleanContext,
}

impl Block {
    /// Object set within the normalized core.
    pub fn objects(&self) -> &ObjectSubset {
        &self.objects
    }

    /// Attribute set within the normalized core.
    pub fn attributes(&self) -> &AttributeSubset {
        &self.attributes
    }

    /// `(Y_i, X_i, R ∩ Y_i × X_i)` as a standalone context.
    pub fn context(&self) -> &BooleanContext {
        &self.context
    }
}

#[derive(Debug, Clone)]
pub struct Factorization {
    blocks: Vec<Block>,
    normalization: NormalizationReport,
}

impl Factorization {
    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// What was stripped before splitting, and the core that was split.
    pub fn normalization(&self) -> &NormalizationReport {
        &self.normalization
    }

    pub fn core(&self) -> &BooleanContext {
        self.normalization.core()
    }

    /// The core relation rebuilt as the union of the block relations.
    pub fn reconstruct_core(&self) -> BooleanContext {
        let core = self.core();
        let mut rows = alloc::vec![BitSet::empty(core.object_count()); core.attribute_count()];
        for block in &self.blocks {
            let objs: Vec<usize> = block.objects.iter().collect();
            for (i, a) in block.attributes.iter().enumerate() {
                for j in block.context.row(i).iter() {
                    rows[a].insert(objs[j]);
                }
            }
        }
        BooleanContext::from_rows(core.attributes().to_vec(), core.objects().to_vec(), rows)
            .expect("core names are unique")
    }

    /// Union of block relations equals the core relation.
    pub fn is_exact(&self) -> bool {
        &self.reconstruct_core() == self.core()
    }

    /// Blocks have pairwise disjoint object and attribute sets covering the core.
    pub fn is_partition(&self) -> bool {
        let core = self.core();
        let mut objs = BitSet::empty(core.object_count());
        let mut attrs = BitSet::empty(core.attribute_count());
        for b in &self.blocks {
            if !objs.is_disjoint(b.objects.bits()) || !attrs.is_disjoint(b.attributes.bits()) {
                return false;
            }
            objs.union_with(b.objects.bits());
            attrs.union_with(b.attributes.bits());
        }
        objs.is_full() && attrs.is_full()
    }

    /// The original context: blocks, then the normalization removals re-added.
    pub fn reconstruct(&self) -> Result<BooleanContext> {
        self.normalization.reattach(&self.reconstruct_core())
    }
}

/// Normalizes, then splits the core into one block per atom of `C_N`.
pub fn factorize(ctx: &BooleanContext) -> Factorization {
    let normalization = normalize(ctx);
    let core = normalization.core();
    let blocks = if normalization.collapsed() {
        Vec::new()
    } else {
        cn_atoms(core)
            .expect("core is normalized")
            .into_iter()
            .map(|atom| Block {
                context: core
                    .restrict(atom.attributes(), atom.objects())
                    .expect("own subsets"),
                objects: atom.objects().clone(),
                attributes: atom.attributes().clone(),
            })
            .collect()
    };
    Factorization {
        blocks,
        normalization,
    }
}

/// A Boolean mask over `A × B`, stored by attribute row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockMask {
    rows: Vec<BitSet>,
}

impl BlockMask {
    /// `⋂ (X × Y) ∪ (X^c × Y^c)` over the given pairs.
    pub fn by_intersection<'a, I>(ctx: &BooleanContext, pairs: I) -> Self
    where
        I: IntoIterator<Item = &'a NecessityPair>,
    {
        let mut rows = alloc::vec![BitSet::full(ctx.object_count()); ctx.attribute_count()];
        for p in pairs {
            let x = p.objects().bits();
            let xc = x.complement();
            for (a, row) in rows.iter_mut().enumerate() {
                row.intersect_with(if p.attributes().contains(a) { x } else { &xc });
            }
        }
        BlockMask { rows }
    }

    /// `⋃ Y_i × X_i` over the given atoms.
    pub fn from_atoms<'a, I>(ctx: &BooleanContext, atoms: I) -> Self
    where
        I: IntoIterator<Item = &'a NecessityPair>,
    {
        let mut rows = alloc::vec![BitSet::empty(ctx.object_count()); ctx.attribute_count()];
        for atom in atoms {
            for a in atom.attributes().iter() {
                rows[a].union_with(atom.objects().bits());
            }
        }
        BlockMask { rows }
    }

    pub fn contains(&self, attribute: usize, object: usize) -> bool {
        self.rows[attribute].contains(object)
    }

    pub fn rows(&self) -> &[BitSet] {
        &self.rows
    }

    pub fn cell_count(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum()
    }

    /// `R ⊆ R*`.
    pub fn covers_relation(&self, ctx: &BooleanContext) -> bool {
        ctx.rows()
            .iter()
            .zip(&self.rows)
            .all(|(r, m)| r.is_subset(m))
    }
}

/// `R*` by the intersection formula over all of `C_N`, cross-checked against
/// the union of atom rectangles.
pub fn rstar(ctx: &BooleanContext) -> Result<BlockMask> {
    let cn = cn_enumerate(ctx)?;
    let elements = cn.elements().ok_or(Error::TooManyAtoms {
        atoms: cn.atoms().len(),
        limit: MATERIALIZE_LIMIT,
    })?;
    let literal = BlockMask::by_intersection(ctx, elements.pairs());
    let rectangles = BlockMask::from_atoms(ctx, cn.atoms());
    if literal != rectangles {
        return Err(Error::ContractViolation(
            "R* intersection differs from the union of atom rectangles".into(),
        ));
    }
    Ok(literal)
}

/// One end of the interval of concepts delimited by a pair of `C_N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    Concept(FormalConcept),
    /// `X^↑ = ∅`: the block's top coincides with `⟨B, ∅⟩`.
    IdentifiedWithTop,
    /// `Y^↓ = ∅`: the block's bottom coincides with `⟨∅, A⟩`.
    IdentifiedWithBottom,
}

impl Bound {
    pub fn concept(&self) -> Option<&FormalConcept> {
        match self {
            Bound::Concept(c) => Some(c),
            _ => None,
        }
    }
}

/// Where a pair `(X, Y)` of `C_N` sits inside the concept lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockBounds {
    /// `⟨X, X^↑⟩`, or identified with the top when `X^↑ = ∅`.
    pub upper: Bound,
    /// `⟨Y^↓, Y⟩`, or identified with the bottom when `Y^↓ = ∅`.
    pub lower: Bound,
    /// `X^↑↓ = X` (only meaningful when `X^↑ ≠ ∅`).
    pub upper_closed: Option<bool>,
    /// `Y^↓↑ = Y` (only meaningful when `Y^↓ ≠ ∅`).
    pub lower_closed: Option<bool>,
    /// `⟨X, X^↑⟩` is covered by `⟨B, ∅⟩` and nothing else.
    pub upper_is_coatom: Option<bool>,
    /// `Y^↓ ⊆ X`, when both bounds are concepts.
    pub lower_within_upper: Option<bool>,
    /// `⟨X, X^↑π⟩` is a fixpoint of `↓N∘↑π`.
    pub property_oriented: bool,
}

impl BlockBounds {
    /// Every applicable check came out true.
    pub fn all_hold(&self) -> bool {
        self.property_oriented
            && [
                self.upper_closed,
                self.lower_closed,
                self.upper_is_coatom,
                self.lower_within_upper,
            ]
            .iter()
            .all(|c| c.unwrap_or(true))
    }
}

/// Interval bounds of the block determined by `pair`; `X` must differ from `∅` and `B`.
pub fn block_bounds(ctx: &BooleanContext, pair: &NecessityPair) -> Result<BlockBounds> {
    let x = pair.objects();
    let y = pair.attributes();
    // re-verify membership against this very context
    let pair = NecessityPair::new(ctx, x.clone(), y.clone())?;
    if pair.is_trivial() {
        return Err(Error::TrivialPair);
    }

    let x_up = ctx.up(x)?;
    let (upper, upper_closed, upper_is_coatom) = if x_up.is_empty() {
        (Bound::IdentifiedWithTop, None, None)
    } else {
        let closed = &ctx.down(&x_up)? == x;
        let coatom = closed && is_coatom_extent(ctx, x)?;
        let concept = FormalConcept::from_extent(ctx, x)?;
        (Bound::Concept(concept), Some(closed), Some(coatom))
    };

    let y_down = ctx.down(y)?;
    let (lower, lower_closed) = if y_down.is_empty() {
        (Bound::IdentifiedWithBottom, None)
    } else {
        let closed = &ctx.up(&y_down)? == y;
        (
            Bound::Concept(FormalConcept::from_intent(ctx, y)?),
            Some(closed),
        )
    };

    let lower_within_upper = match (&upper, &lower) {
        (Bound::Concept(_), Bound::Concept(_)) => Some(y_down.is_subset(x)),
        _ => None,
    };

    let property_oriented = &ctx.down_n(&ctx.up_pi(x)?)? == x;

    Ok(BlockBounds {
        upper,
        lower,
        upper_closed,
        lower_closed,
        upper_is_coatom,
        lower_within_upper,
        property_oriented,
    })
}

/// A closed extent `X ≠ B` is a coatom iff adding any single outside object
/// closes up to `B`.
fn is_coatom_extent(ctx: &BooleanContext, x: &ObjectSubset) -> Result<bool> {
    if x.is_full() {
        return Ok(false);
    }
    for b in x.complement().iter() {
        let mut bits = x.bits().clone();
        bits.insert(b);
        let grown = ctx.object_subset_from_bits(bits)?;
        if !ctx.down(&ctx.up(&grown)?)?.is_full() {
            return Ok(false);
        }
    }
    Ok(true)
}
