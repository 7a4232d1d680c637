//! The derivation, possibility and necessity operators of a Boolean context.

use super::context::{AttributeSubset, BooleanContext, ObjectSubset};
use crate::bitset::BitSet;
use crate::error::Result;

impl BooleanContext {
    /// `X^↑ = {a | (a,b) ∈ R for all b ∈ X}`.
    pub fn up(&self, x: &ObjectSubset) -> Result<AttributeSubset> {
        self.own(x)?;
        Ok(self.wrap(self.attrs_where(|row| x.bits().is_subset(row))))
    }

    /// `Y^↓ = {b | (a,b) ∈ R for all a ∈ Y}`.
    pub fn down(&self, y: &AttributeSubset) -> Result<ObjectSubset> {
        self.own(y)?;
        Ok(self.wrap(self.objects_where(|col| y.bits().is_subset(col))))
    }

    /// `X^↑N = {a | (a,b) ∈ R implies b ∈ X}`.
    pub fn up_n(&self, x: &ObjectSubset) -> Result<AttributeSubset> {
        self.own(x)?;
        Ok(self.wrap(self.attrs_where(|row| row.is_subset(x.bits()))))
    }

    /// `Y^↓N = {b | (a,b) ∈ R implies a ∈ Y}`.
    pub fn down_n(&self, y: &AttributeSubset) -> Result<ObjectSubset> {
        self.own(y)?;
        Ok(self.wrap(self.objects_where(|col| col.is_subset(y.bits()))))
    }

    /// `X^↑π = {a | (a,b) ∈ R for some b ∈ X}`.
    pub fn up_pi(&self, x: &ObjectSubset) -> Result<AttributeSubset> {
        self.own(x)?;
        Ok(self.wrap(self.attrs_where(|row| !row.is_disjoint(x.bits()))))
    }

    /// `Y^↓π = {b | (a,b) ∈ R for some a ∈ Y}`.
    pub fn down_pi(&self, y: &AttributeSubset) -> Result<ObjectSubset> {
        self.own(y)?;
        Ok(self.wrap(self.objects_where(|col| !col.is_disjoint(y.bits()))))
    }

    fn attrs_where(&self, pred: impl Fn(&BitSet) -> bool) -> BitSet {
        BitSet::from_indices(
            self.attribute_count(),
            (0..self.attribute_count()).filter(|&a| pred(self.row(a))),
        )
    }

    fn objects_where(&self, pred: impl Fn(&BitSet) -> bool) -> BitSet {
        BitSet::from_indices(
            self.object_count(),
            (0..self.object_count()).filter(|&b| pred(self.column(b))),
        )
    }

    // Unchecked bit-level versions used by the enumerators.

    pub(crate) fn up_bits(&self, x: &BitSet) -> BitSet {
        self.attrs_where(|row| x.is_subset(row))
    }

    pub(crate) fn down_bits(&self, y: &BitSet) -> BitSet {
        self.objects_where(|col| y.is_subset(col))
    }

    pub(crate) fn down_n_bits(&self, y: &BitSet) -> BitSet {
        self.objects_where(|col| col.is_subset(y))
    }

    pub(crate) fn up_pi_bits(&self, x: &BitSet) -> BitSet {
        self.attrs_where(|row| !row.is_disjoint(x))
    }
}
