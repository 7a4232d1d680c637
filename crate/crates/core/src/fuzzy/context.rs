use super::frame::{Frame, Operator};
use crate::boolean::context::check_unique;
use crate::boolean::{Attributes, ContextId, Objects, Side};
use crate::error::{Error, Result};
use crate::grade::{AdjointTriple, Grade, GradeChain};
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};
use core::marker::PhantomData;

/// A total map from objects (to `L2`) or attributes (to `L1`), stored as numerators.
pub struct Graded<S> {
    ctx: ContextId,
    chain: GradeChain,
    values: Vec<u32>,
    side: PhantomData<fn() -> S>,
}

/// `g ∈ L2^B`.
pub type GradedObjectSet = Graded<Objects>;
/// `f ∈ L1^A`.
pub type GradedAttributeSet = Graded<Attributes>;

impl<S> Graded<S> {
    pub(crate) fn new(ctx: ContextId, chain: GradeChain, values: Vec<u32>) -> Self {
        Graded {
            ctx,
            chain,
            values,
            side: PhantomData,
        }
    }

    pub fn context_id(&self) -> ContextId {
        self.ctx
    }

    pub fn chain(&self) -> GradeChain {
        self.chain
    }

    /// Numerators over `chain().m()`, in index order.
    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn get(&self, i: usize) -> Grade {
        self.chain
            .grade(self.values[i])
            .expect("validated on construction")
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Pointwise `⪯`.
    pub fn leq(&self, other: &Self) -> bool {
        self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }

    /// Pointwise infimum.
    pub fn meet(&self, other: &Self) -> Self {
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| *a.min(b))
            .collect();
        Graded::new(self.ctx, self.chain, values)
    }

    /// Pointwise supremum.
    pub fn join(&self, other: &Self) -> Self {
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| *a.max(b))
            .collect();
        Graded::new(self.ctx, self.chain, values)
    }

    pub fn is_top(&self) -> bool {
        self.values.iter().all(|&v| v == self.chain.m())
    }

    pub fn is_bottom(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }
}

impl<S> Clone for Graded<S> {
    fn clone(&self) -> Self {
        Graded::new(self.ctx, self.chain, self.values.clone())
    }
}

impl<S> PartialEq for Graded<S> {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.chain == other.chain && self.values == other.values
    }
}

impl<S> Eq for Graded<S> {}

/// Lexicographic on numerators, index 0 most significant; a linear extension of `⪯`.
impl<S> Ord for Graded<S> {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.ctx, self.chain, &self.values).cmp(&(other.ctx, other.chain, &other.values))
    }
}

impl<S> PartialOrd for Graded<S> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<S> Hash for Graded<S> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ctx.hash(state);
        self.chain.hash(state);
        self.values.hash(state);
    }
}

impl<S: Side> fmt::Debug for Graded<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}s{{", S::NAME)?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{i}/{}", self.chain.grade(*v).map_err(|_| fmt::Error)?)?;
        }
        f.write_str("}")
    }
}

/// A multi-adjoint context `(A, B, R, σ)` over a [`Frame`].
#[derive(Clone)]
pub struct FuzzyContext {
    id: ContextId,
    attributes: Vec<String>,
    objects: Vec<String>,
    frame: Frame,
    /// `relation[a * |B| + b]`, numerators on `P`.
    relation: Vec<u32>,
    /// `sigma[a * |B| + b]`, indices into `frame.triples()`.
    sigma: Vec<usize>,
}

impl FuzzyContext {
    /// `relation` is indexed `[attribute][object]` with numerators on `P`; `σ` is constant 0.
    pub fn new(
        attributes: Vec<String>,
        objects: Vec<String>,
        frame: Frame,
        relation: &[Vec<u32>],
    ) -> Result<Self> {
        let sigma = alloc::vec![alloc::vec![0; objects.len()]; attributes.len()];
        Self::with_sigma(attributes, objects, frame, relation, &sigma)
    }

    pub fn with_sigma(
        attributes: Vec<String>,
        objects: Vec<String>,
        frame: Frame,
        relation: &[Vec<u32>],
        sigma: &[Vec<usize>],
    ) -> Result<Self> {
        if attributes.is_empty() || objects.is_empty() {
            return Err(Error::EmptyContext);
        }
        check_unique("attribute", &attributes)?;
        check_unique("object", &objects)?;
        let nb = objects.len();
        let flatten = |what: &'static str, rows: usize| -> Result<()> {
            if rows != attributes.len() {
                return Err(Error::DimensionMismatch {
                    what,
                    expected: attributes.len(),
                    found: rows,
                });
            }
            Ok(())
        };
        flatten("relation rows", relation.len())?;
        flatten("sigma rows", sigma.len())?;
        let mut rel = Vec::with_capacity(attributes.len() * nb);
        let mut sig = Vec::with_capacity(attributes.len() * nb);
        for (row, srow) in relation.iter().zip(sigma) {
            for (what, len) in [
                ("relation row length", row.len()),
                ("sigma row length", srow.len()),
            ] {
                if len != nb {
                    return Err(Error::DimensionMismatch {
                        what,
                        expected: nb,
                        found: len,
                    });
                }
            }
            for &v in row {
                frame.p().grade(v)?;
            }
            if let Some(&s) = srow.iter().find(|&&s| s >= frame.triples().len()) {
                return Err(Error::IndexOutOfRange {
                    what: "triple",
                    index: s,
                    len: frame.triples().len(),
                });
            }
            rel.extend_from_slice(row);
            sig.extend_from_slice(srow);
        }
        Ok(FuzzyContext {
            id: ContextId::fresh(),
            attributes,
            objects,
            frame,
            relation: rel,
            sigma: sig,
        })
    }

    pub fn id(&self) -> ContextId {
        self.id
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
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

    pub fn attribute_index(&self, name: &str) -> Option<usize> {
        self.attributes.iter().position(|n| n == name)
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|n| n == name)
    }

    /// Numerator of `R(a, b)` on `P`.
    #[inline]
    pub fn r(&self, a: usize, b: usize) -> u32 {
        self.relation[a * self.objects.len() + b]
    }

    pub fn relation(&self, a: usize, b: usize) -> Grade {
        self.frame
            .p()
            .grade(self.r(a, b))
            .expect("validated on construction")
    }

    pub fn sigma(&self, a: usize, b: usize) -> usize {
        self.sigma[a * self.objects.len() + b]
    }

    #[inline]
    pub fn triple(&self, a: usize, b: usize) -> &AdjointTriple {
        &self.frame.triples()[self.sigma(a, b)]
    }

    /// `σ` selects the same triple everywhere.
    pub fn has_constant_sigma(&self) -> bool {
        self.sigma.iter().all(|&s| s == self.sigma[0])
    }

    pub fn graded_objects(&self, values: &[u32]) -> Result<GradedObjectSet> {
        self.graded(self.frame.l2(), self.objects.len(), "object grades", values)
    }

    pub fn graded_attributes(&self, values: &[u32]) -> Result<GradedAttributeSet> {
        self.graded(
            self.frame.l1(),
            self.attributes.len(),
            "attribute grades",
            values,
        )
    }

    fn graded<S>(
        &self,
        chain: GradeChain,
        len: usize,
        what: &'static str,
        values: &[u32],
    ) -> Result<Graded<S>> {
        if values.len() != len {
            return Err(Error::DimensionMismatch {
                what,
                expected: len,
                found: values.len(),
            });
        }
        for &v in values {
            chain.grade(v)?;
        }
        Ok(Graded::new(self.id, chain, values.to_vec()))
    }

    /// `g⊤`.
    pub fn objects_top(&self) -> GradedObjectSet {
        Graded::new(
            self.id,
            self.frame.l2(),
            alloc::vec![self.frame.l2().m(); self.objects.len()],
        )
    }

    /// `g⊥`.
    pub fn objects_bottom(&self) -> GradedObjectSet {
        Graded::new(self.id, self.frame.l2(), alloc::vec![0; self.objects.len()])
    }

    /// `f⊤`.
    pub fn attributes_top(&self) -> GradedAttributeSet {
        Graded::new(
            self.id,
            self.frame.l1(),
            alloc::vec![self.frame.l1().m(); self.attributes.len()],
        )
    }

    /// `f⊥`.
    pub fn attributes_bottom(&self) -> GradedAttributeSet {
        Graded::new(
            self.id,
            self.frame.l1(),
            alloc::vec![0; self.attributes.len()],
        )
    }

    pub(crate) fn wrap<S>(&self, chain: GradeChain, values: Vec<u32>) -> Graded<S> {
        Graded::new(self.id, chain, values)
    }

    pub(crate) fn own<S>(&self, s: &Graded<S>) -> Result<()> {
        if s.ctx != self.id {
            return Err(Error::ForeignSubset);
        }
        Ok(())
    }

    /// `|L2|^|B|`, saturating.
    pub fn object_grid_size(&self) -> u128 {
        grid(self.frame.l2(), self.objects.len())
    }

    /// `|L1|^|A|`, saturating.
    pub fn attribute_grid_size(&self) -> u128 {
        grid(self.frame.l1(), self.attributes.len())
    }

    pub(crate) fn check(&self, op: Operator) -> Result<()> {
        self.frame.require(op)
    }
}

fn grid(chain: GradeChain, n: usize) -> u128 {
    let mut total: u128 = 1;
    for _ in 0..n {
        total = total.saturating_mul(chain.len() as u128);
    }
    total
}

impl PartialEq for FuzzyContext {
    fn eq(&self, other: &Self) -> bool {
        self.attributes == other.attributes
            && self.objects == other.objects
            && self.frame == other.frame
            && self.relation == other.relation
            && self.sigma == other.sigma
    }
}

impl Eq for FuzzyContext {}

impl fmt::Debug for FuzzyContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FuzzyContext over {} {{", self.frame.descriptor())?;
        for (a, name) in self.attributes.iter().enumerate() {
            write!(f, "  {name}:")?;
            for b in 0..self.objects.len() {
                write!(f, " {}", self.relation(a, b))?;
            }
            writeln!(f)?;
        }
        f.write_str("}")
    }
}
