use crate::bitset::BitSet;
use crate::error::{Error, Result};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};
use core::marker::PhantomData;
use core::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};

static NEXT_CONTEXT_ID: AtomicUsize = AtomicUsize::new(1);

/// Identity token tying subsets to the context that created them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ContextId(usize);

impl ContextId {
    pub(crate) fn fresh() -> Self {
        ContextId(NEXT_CONTEXT_ID.fetch_add(1, AtomicOrdering::Relaxed))
    }
}

pub trait Side {
    const NAME: &'static str;
}

#[derive(Debug)]
pub enum Objects {}

#[derive(Debug)]
pub enum Attributes {}

impl Side for Objects {
    const NAME: &'static str = "object";
}

impl Side for Attributes {
    const NAME: &'static str = "attribute";
}

/// A crisp subset of objects or attributes of one context.
pub struct Subset<S> {
    ctx: ContextId,
    bits: BitSet,
    side: PhantomData<fn() -> S>,
}

/// `X ⊆ B`.
pub type ObjectSubset = Subset<Objects>;
/// `Y ⊆ A`.
pub type AttributeSubset = Subset<Attributes>;

impl<S> Subset<S> {
    fn new(ctx: ContextId, bits: BitSet) -> Self {
        Subset {
            ctx,
            bits,
            side: PhantomData,
        }
    }

    pub fn context_id(&self) -> ContextId {
        self.ctx
    }

    pub fn bits(&self) -> &BitSet {
        &self.bits
    }

    pub fn iter(&self) -> crate::bitset::Iter<'_> {
        self.bits.iter()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.bits.contains(i)
    }

    pub fn len(&self) -> usize {
        self.bits.count()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.bits.is_full()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        debug_assert_eq!(self.ctx, other.ctx);
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        debug_assert_eq!(self.ctx, other.ctx);
        self.bits.is_disjoint(&other.bits)
    }

    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.ctx, other.ctx);
        Subset::new(self.ctx, self.bits.union(&other.bits))
    }

    pub fn intersection(&self, other: &Self) -> Self {
        debug_assert_eq!(self.ctx, other.ctx);
        Subset::new(self.ctx, self.bits.intersection(&other.bits))
    }

    pub fn difference(&self, other: &Self) -> Self {
        debug_assert_eq!(self.ctx, other.ctx);
        Subset::new(self.ctx, self.bits.difference(&other.bits))
    }

    pub fn complement(&self) -> Self {
        Subset::new(self.ctx, self.bits.complement())
    }
}

impl<S> Clone for Subset<S> {
    fn clone(&self) -> Self {
        Subset::new(self.ctx, self.bits.clone())
    }
}

impl<S> PartialEq for Subset<S> {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.bits == other.bits
    }
}

impl<S> Eq for Subset<S> {}

impl<S> PartialOrd for Subset<S> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on indicator vectors, element 0 most significant.
impl<S> Ord for Subset<S> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ctx
            .cmp(&other.ctx)
            .then_with(|| self.bits.cmp(&other.bits))
    }
}

impl<S> Hash for Subset<S> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ctx.hash(state);
        self.bits.hash(state);
    }
}

impl<S: Side> fmt::Debug for Subset<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}s", S::NAME)?;
        fmt::Debug::fmt(&self.bits, f)
    }
}

/// A formal context `(A, B, R)` with `R ⊆ A × B`.
///
/// Rows are indexed by attribute and columns by object; both orientations are
/// stored so every operator is a row or column scan.
#[derive(Clone)]
pub struct BooleanContext {
    id: ContextId,
    attributes: Vec<String>,
    objects: Vec<String>,
    rows: Vec<BitSet>,
    cols: Vec<BitSet>,
}

pub(crate) fn check_unique(what: &'static str, names: &[String]) -> Result<()> {
    let mut sorted: Vec<&String> = names.iter().collect();
    sorted.sort();
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            return Err(Error::DuplicateName {
                what,
                name: w[0].clone(),
            });
        }
    }
    Ok(())
}

impl BooleanContext {
    /// Builds a context from an incidence matrix indexed `[attribute][object]`.
    pub fn new(
        attributes: Vec<String>,
        objects: Vec<String>,
        incidence: &[Vec<bool>],
    ) -> Result<Self> {
        if incidence.len() != attributes.len() {
            return Err(Error::DimensionMismatch {
                what: "incidence rows",
                expected: attributes.len(),
                found: incidence.len(),
            });
        }
        let mut rows = Vec::with_capacity(attributes.len());
        for row in incidence {
            if row.len() != objects.len() {
                return Err(Error::DimensionMismatch {
                    what: "incidence row length",
                    expected: objects.len(),
                    found: row.len(),
                });
            }
            rows.push(BitSet::from_indices(
                objects.len(),
                row.iter().enumerate().filter(|(_, &v)| v).map(|(i, _)| i),
            ));
        }
        Self::from_rows(attributes, objects, rows)
    }

    /// Builds a context from one object bit set per attribute.
    pub fn from_rows(
        attributes: Vec<String>,
        objects: Vec<String>,
        rows: Vec<BitSet>,
    ) -> Result<Self> {
        check_unique("attribute", &attributes)?;
        check_unique("object", &objects)?;
        if rows.len() != attributes.len() {
            return Err(Error::DimensionMismatch {
                what: "incidence rows",
                expected: attributes.len(),
                found: rows.len(),
            });
        }
        if let Some(r) = rows.iter().find(|r| r.universe() != objects.len()) {
            return Err(Error::DimensionMismatch {
                what: "incidence row length",
                expected: objects.len(),
                found: r.universe(),
            });
        }
        let mut cols = alloc::vec![BitSet::empty(attributes.len()); objects.len()];
        for (a, row) in rows.iter().enumerate() {
            for b in row.iter() {
                cols[b].insert(a);
            }
        }
        Ok(BooleanContext {
            id: ContextId::fresh(),
            attributes,
            objects,
            rows,
            cols,
        })
    }

    /// Builds a context from `(attribute, object)` index pairs.
    pub fn from_pairs<I>(attributes: Vec<String>, objects: Vec<String>, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut rows = alloc::vec![BitSet::empty(objects.len()); attributes.len()];
        for (a, b) in pairs {
            if a >= attributes.len() {
                return Err(Error::IndexOutOfRange {
                    what: "attribute",
                    index: a,
                    len: attributes.len(),
                });
            }
            if b >= objects.len() {
                return Err(Error::IndexOutOfRange {
                    what: "object",
                    index: b,
                    len: objects.len(),
                });
            }
            rows[a].insert(b);
        }
        Self::from_rows(attributes, objects, rows)
    }

    pub fn id(&self) -> ContextId {
        self.id
    }

    pub fn attributes(&self) -> &[String] {
        &self.attributes
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn attribute_count(&self) -> usize {
        self.attributes.len()
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    /// `(a, b) ∈ R`.
    pub fn incidence(&self, attribute: usize, object: usize) -> bool {
        self.rows[attribute].contains(object)
    }

    pub fn incidence_count(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum()
    }

    /// Objects possessing `attribute`.
    pub fn row(&self, attribute: usize) -> &BitSet {
        &self.rows[attribute]
    }

    /// Attributes of `object`.
    pub fn column(&self, object: usize) -> &BitSet {
        &self.cols[object]
    }

    pub fn rows(&self) -> &[BitSet] {
        &self.rows
    }

    pub fn attribute_index(&self, name: &str) -> Option<usize> {
        self.attributes.iter().position(|n| n == name)
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|n| n == name)
    }

    // ---- subset construction -------------------------------------------

    pub fn object_subset<I: IntoIterator<Item = usize>>(&self, indices: I) -> Result<ObjectSubset> {
        subset_from_indices(self.id, "object", self.objects.len(), indices)
    }

    pub fn attribute_subset<I: IntoIterator<Item = usize>>(
        &self,
        indices: I,
    ) -> Result<AttributeSubset> {
        subset_from_indices(self.id, "attribute", self.attributes.len(), indices)
    }

    pub fn objects_named(&self, names: &[&str]) -> Result<ObjectSubset> {
        let idx = names
            .iter()
            .map(|n| {
                self.object_index(n).ok_or_else(|| Error::UnknownName {
                    what: "object",
                    name: n.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        self.object_subset(idx)
    }

    pub fn attributes_named(&self, names: &[&str]) -> Result<AttributeSubset> {
        let idx = names
            .iter()
            .map(|n| {
                self.attribute_index(n).ok_or_else(|| Error::UnknownName {
                    what: "attribute",
                    name: n.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        self.attribute_subset(idx)
    }

    pub fn object_subset_from_bits(&self, bits: BitSet) -> Result<ObjectSubset> {
        if bits.universe() != self.objects.len() {
            return Err(Error::DimensionMismatch {
                what: "object bit set",
                expected: self.objects.len(),
                found: bits.universe(),
            });
        }
        Ok(Subset::new(self.id, bits))
    }

    pub fn attribute_subset_from_bits(&self, bits: BitSet) -> Result<AttributeSubset> {
        if bits.universe() != self.attributes.len() {
            return Err(Error::DimensionMismatch {
                what: "attribute bit set",
                expected: self.attributes.len(),
                found: bits.universe(),
            });
        }
        Ok(Subset::new(self.id, bits))
    }

    pub fn all_objects(&self) -> ObjectSubset {
        Subset::new(self.id, BitSet::full(self.objects.len()))
    }

    pub fn no_objects(&self) -> ObjectSubset {
        Subset::new(self.id, BitSet::empty(self.objects.len()))
    }

    pub fn all_attributes(&self) -> AttributeSubset {
        Subset::new(self.id, BitSet::full(self.attributes.len()))
    }

    pub fn no_attributes(&self) -> AttributeSubset {
        Subset::new(self.id, BitSet::empty(self.attributes.len()))
    }

    pub fn object_names<'a>(&'a self, x: &ObjectSubset) -> Vec<&'a str> {
        x.iter().map(|i| self.objects[i].as_str()).collect()
    }

    pub fn attribute_names<'a>(&'a self, y: &AttributeSubset) -> Vec<&'a str> {
        y.iter().map(|i| self.attributes[i].as_str()).collect()
    }

    pub(crate) fn own<S>(&self, s: &Subset<S>) -> Result<()> {
        if s.ctx == self.id {
            Ok(())
        } else {
            Err(Error::ForeignSubset)
        }
    }

    pub(crate) fn wrap<S>(&self, bits: BitSet) -> Subset<S> {
        Subset::new(self.id, bits)
    }

    /// The subcontext on `attrs × objects`, keeping the original name order.
    pub fn restrict(
        &self,
        attrs: &AttributeSubset,
        objects: &ObjectSubset,
    ) -> Result<BooleanContext> {
        self.own(attrs)?;
        self.own(objects)?;
        let obj_idx: Vec<usize> = objects.iter().collect();
        let rows = attrs
            .iter()
            .map(|a| {
                BitSet::from_indices(
                    obj_idx.len(),
                    obj_idx
                        .iter()
                        .enumerate()
                        .filter(|(_, &b)| self.incidence(a, b))
                        .map(|(j, _)| j),
                )
            })
            .collect();
        BooleanContext::from_rows(
            attrs.iter().map(|a| self.attributes[a].clone()).collect(),
            obj_idx.iter().map(|&b| self.objects[b].clone()).collect(),
            rows,
        )
    }

    /// Rows or columns that are entirely full or entirely empty, by name.
    pub fn normalization_issues(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (a, row) in self.rows.iter().enumerate() {
            if row.is_empty() {
                out.push(alloc::format!(
                    "attribute `{}` has no objects",
                    self.attributes[a]
                ));
            } else if row.is_full() {
                out.push(alloc::format!(
                    "attribute `{}` is held by every object",
                    self.attributes[a]
                ));
            }
        }
        for (b, col) in self.cols.iter().enumerate() {
            if col.is_empty() {
                out.push(alloc::format!(
                    "object `{}` has no attributes",
                    self.objects[b]
                ));
            } else if col.is_full() {
                out.push(alloc::format!(
                    "object `{}` has every attribute",
                    self.objects[b]
                ));
            }
        }
        out
    }

    /// No attribute row and no object column is all-true or all-false.
    pub fn is_normalized(&self) -> bool {
        self.rows.iter().all(|r| !r.is_empty() && !r.is_full())
            && self.cols.iter().all(|c| !c.is_empty() && !c.is_full())
    }

    pub(crate) fn require_normalized(&self) -> Result<()> {
        if self.attributes.is_empty() || self.objects.is_empty() {
            return Err(Error::EmptyContext);
        }
        let issues = self.normalization_issues();
        if issues.is_empty() {
            Ok(())
        } else {
            Err(Error::NotNormalized(issues.join("; ")))
        }
    }
}

fn subset_from_indices<S, I>(
    ctx: ContextId,
    what: &'static str,
    len: usize,
    indices: I,
) -> Result<Subset<S>>
where
    I: IntoIterator<Item = usize>,
{
    let mut bits = BitSet::empty(len);
    for i in indices {
        if i >= len {
            return Err(Error::IndexOutOfRange {
                what,
                index: i,
                len,
            });
        }
        bits.insert(i);
    }
    Ok(Subset::new(ctx, bits))
}

/// Contexts compare by names and incidence; the identity token is ignored.
impl PartialEq for BooleanContext {
    fn eq(&self, other: &Self) -> bool {
        self.attributes == other.attributes
            && self.objects == other.objects
            && self.rows == other.rows
    }
}

impl Eq for BooleanContext {}

impl fmt::Debug for BooleanContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "BooleanContext {}x{} {{",
            self.attributes.len(),
            self.objects.len()
        )?;
        for (a, row) in self.rows.iter().enumerate() {
            write!(f, "  {:>6} ", self.attributes[a])?;
            for b in 0..self.objects.len() {
                f.write_str(if row.contains(b) { "X" } else { "." })?;
            }
            writeln!(f)?;
        }
        f.write_str("}")
    }
}
