use super::dsu::Dsu;
use crate::bitset::BitSet;
use crate::boolean::{AttributeSubset, BooleanContext, ObjectSubset};
use crate::error::{Error, Result};
use crate::order::Hasse;
use alloc::vec::Vec;

/// Above this many atoms the lattice is described by its atoms only.
pub const MATERIALIZE_LIMIT: usize = 20;

/// `(X, Y)` with `X^↑N = Y` and `Y^↓N = X`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NecessityPair {
    pub(crate) objects: ObjectSubset,
    pub(crate) attrs: AttributeSubset,
}

impl NecessityPair {
    /// Checks both fixpoint equations.
    pub fn new(
        ctx: &BooleanContext,
        objects: ObjectSubset,
        attrs: AttributeSubset,
    ) -> Result<Self> {
        if ctx.up_n(&objects)? == attrs && ctx.down_n(&attrs)? == objects {
            Ok(NecessityPair { objects, attrs })
        } else {
            Err(Error::NotInCn)
        }
    }

    /// `(X, X^↑N)`, provided `X` is closed under `↓N∘↑N`.
    pub fn from_objects(ctx: &BooleanContext, objects: ObjectSubset) -> Result<Self> {
        let attrs = ctx.up_n(&objects)?;
        Self::new(ctx, objects, attrs)
    }

    pub fn objects(&self) -> &ObjectSubset {
        &self.objects
    }

    pub fn attributes(&self) -> &AttributeSubset {
        &self.attrs
    }

    /// `X = ∅` or `X = B`.
    pub fn is_trivial(&self) -> bool {
        self.objects.is_empty() || self.objects.is_full()
    }

    /// `⊔`: componentwise union.
    pub fn join(&self, other: &Self) -> Self {
        NecessityPair {
            objects: self.objects.union(&other.objects),
            attrs: self.attrs.union(&other.attrs),
        }
    }

    /// `⊓`: componentwise intersection.
    pub fn meet(&self, other: &Self) -> Self {
        NecessityPair {
            objects: self.objects.intersection(&other.objects),
            attrs: self.attrs.intersection(&other.attrs),
        }
    }

    pub fn leq(&self, other: &Self) -> bool {
        self.objects.is_subset(&other.objects)
    }
}

/// `(X^c, Y^c)`, verified against the fixpoint equations.
pub fn complement(ctx: &BooleanContext, pair: &NecessityPair) -> Result<NecessityPair> {
    NecessityPair::new(ctx, pair.objects.complement(), pair.attrs.complement())
}

/// The atoms of `C_N`: connected components of the bipartite incidence graph.
///
/// Requires a normalized context, so every component has at least one object
/// and one attribute. Atoms are returned ordered by object set.
pub fn cn_atoms(ctx: &BooleanContext) -> Result<Vec<NecessityPair>> {
    ctx.require_normalized()?;
    let nb = ctx.object_count();
    let na = ctx.attribute_count();
    let mut dsu = Dsu::new(nb + na);
    for a in 0..na {
        for b in ctx.row(a).iter() {
            dsu.union(b, nb + a);
        }
    }
    let mut roots: Vec<usize> = Vec::new();
    let mut parts: Vec<(BitSet, BitSet)> = Vec::new();
    let slot = |root: usize, roots: &mut Vec<usize>, parts: &mut Vec<(BitSet, BitSet)>| match roots
        .iter()
        .position(|&r| r == root)
    {
        Some(i) => i,
        None => {
            roots.push(root);
            parts.push((BitSet::empty(nb), BitSet::empty(na)));
            roots.len() - 1
        }
    };
    for b in 0..nb {
        let i = slot(dsu.find(b), &mut roots, &mut parts);
        parts[i].0.insert(b);
    }
    for a in 0..na {
        let i = slot(dsu.find(nb + a), &mut roots, &mut parts);
        parts[i].1.insert(a);
    }
    let mut atoms: Vec<NecessityPair> = parts
        .into_iter()
        .map(|(x, y)| NecessityPair {
            objects: ctx.object_subset_from_bits(x).expect("sized"),
            attrs: ctx.attribute_subset_from_bits(y).expect("sized"),
        })
        .collect();
    atoms.sort();
    Ok(atoms)
}

/// Every element of `C_N` with its cover relation.
#[derive(Debug, Clone)]
pub struct CnElements {
    pairs: Vec<NecessityPair>,
    hasse: Hasse,
    atom_indices: Vec<usize>,
}

impl CnElements {
    pub fn pairs(&self) -> &[NecessityPair] {
        &self.pairs
    }

    pub fn hasse(&self) -> &Hasse {
        &self.hasse
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        self.hasse.covers()
    }

    /// Positions of the atoms within `pairs`.
    pub fn atom_indices(&self) -> &[usize] {
        &self.atom_indices
    }

    pub fn index_of(&self, pair: &NecessityPair) -> Option<usize> {
        self.pairs.binary_search(pair).ok()
    }

    pub fn is_join_irreducible(&self, i: usize) -> bool {
        self.hasse.is_join_irreducible(i)
    }
}

/// The complemented lattice `C_N`, isomorphic to the powerset of its atoms.
#[derive(Debug, Clone)]
pub struct CnLattice {
    atoms: Vec<NecessityPair>,
    elements: Option<CnElements>,
    bottom: NecessityPair,
}

impl CnLattice {
    pub fn atoms(&self) -> &[NecessityPair] {
        &self.atoms
    }

    /// `None` when there are more than [`MATERIALIZE_LIMIT`] atoms.
    pub fn elements(&self) -> Option<&CnElements> {
        self.elements.as_ref()
    }

    pub fn is_materialized(&self) -> bool {
        self.elements.is_some()
    }

    /// `2^k` for `k` atoms, saturating.
    pub fn element_count(&self) -> u128 {
        1u128
            .checked_shl(self.atoms.len() as u32)
            .unwrap_or(u128::MAX)
    }

    /// Join of the atoms at the given positions.
    pub fn join_of(&self, atoms: &[usize]) -> NecessityPair {
        atoms
            .iter()
            .fold(self.bottom.clone(), |acc, &i| acc.join(&self.atoms[i]))
    }

    /// Membership by description: `X` is a union of atom object sets.
    pub fn contains(&self, pair: &NecessityPair) -> bool {
        let picked: Vec<usize> = (0..self.atoms.len())
            .filter(|&i| !self.atoms[i].objects.is_disjoint(&pair.objects))
            .collect();
        &self.join_of(&picked) == pair
    }
}

/// Enumerates `C_N` from its atoms. Rejects non-normalized contexts.
pub fn cn_enumerate(ctx: &BooleanContext) -> Result<CnLattice> {
    let atoms = cn_atoms(ctx)?;
    let bottom = NecessityPair {
        objects: ctx.no_objects(),
        attrs: ctx.no_attributes(),
    };
    let k = atoms.len();
    let elements = (k <= MATERIALIZE_LIMIT).then(|| materialize(&atoms, &bottom));
    Ok(CnLattice {
        atoms,
        elements,
        bottom,
    })
}

fn materialize(atoms: &[NecessityPair], bottom: &NecessityPair) -> CnElements {
    let k = atoms.len();
    let n = 1usize << k;
    let mut tagged: Vec<(NecessityPair, usize)> = (0..n)
        .map(|mask| {
            let pair = (0..k)
                .filter(|i| mask >> i & 1 == 1)
                .fold(bottom.clone(), |acc, i| acc.join(&atoms[i]));
            (pair, mask)
        })
        .collect();
    tagged.sort();
    let mut index_of_mask = alloc::vec![0usize; n];
    for (idx, (_, mask)) in tagged.iter().enumerate() {
        index_of_mask[*mask] = idx;
    }
    let mut covers = Vec::with_capacity(n * k / 2);
    for mask in 0..n {
        for i in 0..k {
            if mask >> i & 1 == 1 {
                covers.push((index_of_mask[mask ^ (1 << i)], index_of_mask[mask]));
            }
        }
    }
    let atom_indices = (0..k).map(|i| index_of_mask[1 << i]).collect();
    CnElements {
        pairs: tagged.into_iter().map(|(p, _)| p).collect(),
        hasse: Hasse::from_covers(n, covers),
        atom_indices,
    }
}
