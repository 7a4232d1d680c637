use super::context::{FuzzyContext, GradedAttributeSet, GradedObjectSet};
use super::frame::Operator;
use crate::error::Result;
use alloc::vec::Vec;

// Infima over an empty index set are ⊤, suprema ⊥; contexts are non-empty so
// neither case arises in practice.

impl FuzzyContext {
    /// `g^↑(a) = inf_b R(a,b) ↙ g(b)`.
    pub fn up(&self, g: &GradedObjectSet) -> Result<GradedAttributeSet> {
        self.own(g)?;
        self.check(Operator::Up)?;
        Ok(self.wrap(self.frame().l1(), self.up_raw(g.values())))
    }

    /// `f^↓(b) = inf_a R(a,b) ↖ f(a)`.
    pub fn down(&self, f: &GradedAttributeSet) -> Result<GradedObjectSet> {
        self.own(f)?;
        self.check(Operator::Down)?;
        Ok(self.wrap(self.frame().l2(), self.down_raw(f.values())))
    }

    /// `g^↑π(a) = sup_b R(a,b) & g(b)`.
    pub fn up_pi(&self, g: &GradedObjectSet) -> Result<GradedAttributeSet> {
        self.own(g)?;
        self.check(Operator::UpPi)?;
        Ok(self.wrap(self.frame().l1(), self.up_pi_raw(g.values())))
    }

    /// `f^↓N(b) = inf_a f(a) ↖ R(a,b)`.
    pub fn down_n(&self, f: &GradedAttributeSet) -> Result<GradedObjectSet> {
        self.own(f)?;
        self.check(Operator::DownN)?;
        Ok(self.wrap(self.frame().l2(), self.down_n_raw(f.values())))
    }

    /// `g^↑N(a) = inf_b g(b) ↙ R(a,b)`.
    pub fn up_n(&self, g: &GradedObjectSet) -> Result<GradedAttributeSet> {
        self.own(g)?;
        self.check(Operator::UpN)?;
        Ok(self.wrap(self.frame().l1(), self.up_n_raw(g.values())))
    }

    /// `f^↓π(b) = sup_a f(a) & R(a,b)`.
    pub fn down_pi(&self, f: &GradedAttributeSet) -> Result<GradedObjectSet> {
        self.own(f)?;
        self.check(Operator::DownPi)?;
        Ok(self.wrap(self.frame().l2(), self.down_pi_raw(f.values())))
    }

    pub(crate) fn up_raw(&self, g: &[u32]) -> Vec<u32> {
        (0..self.attribute_count())
            .map(|a| {
                (0..self.object_count())
                    .map(|b| self.triple(a, b).res_left_num(self.r(a, b), g[b]))
                    .min()
                    .unwrap_or(self.frame().l1().m())
            })
            .collect()
    }

    pub(crate) fn down_raw(&self, f: &[u32]) -> Vec<u32> {
        (0..self.object_count())
            .map(|b| {
                (0..self.attribute_count())
                    .map(|a| self.triple(a, b).res_right_num(self.r(a, b), f[a]))
                    .min()
                    .unwrap_or(self.frame().l2().m())
            })
            .collect()
    }

    pub(crate) fn up_pi_raw(&self, g: &[u32]) -> Vec<u32> {
        (0..self.attribute_count())
            .map(|a| {
                (0..self.object_count())
                    .map(|b| self.triple(a, b).conj_num(self.r(a, b), g[b]))
                    .max()
                    .unwrap_or(0)
            })
            .collect()
    }

    pub(crate) fn down_n_raw(&self, f: &[u32]) -> Vec<u32> {
        (0..self.object_count())
            .map(|b| {
                (0..self.attribute_count())
                    .map(|a| self.triple(a, b).res_right_num(f[a], self.r(a, b)))
                    .min()
                    .unwrap_or(self.frame().l2().m())
            })
            .collect()
    }

    pub(crate) fn up_n_raw(&self, g: &[u32]) -> Vec<u32> {
        (0..self.attribute_count())
            .map(|a| {
                (0..self.object_count())
                    .map(|b| self.triple(a, b).res_left_num(g[b], self.r(a, b)))
                    .min()
                    .unwrap_or(self.frame().l1().m())
            })
            .collect()
    }

    pub(crate) fn down_pi_raw(&self, f: &[u32]) -> Vec<u32> {
        (0..self.object_count())
            .map(|b| {
                (0..self.attribute_count())
                    .map(|a| self.triple(a, b).conj_num(f[a], self.r(a, b)))
                    .max()
                    .unwrap_or(0)
            })
            .collect()
    }
}
