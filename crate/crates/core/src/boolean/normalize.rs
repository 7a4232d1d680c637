use super::context::BooleanContext;
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use alloc::string::String;
use alloc::vec::Vec;

/// Names removed in one round of normalization. Every classification in a
/// round is made against the context as it stood at the start of that round.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NormalizationPass {
    pub full_rows: Vec<String>,
    pub empty_rows: Vec<String>,
    pub full_cols: Vec<String>,
    pub empty_cols: Vec<String>,
}

impl NormalizationPass {
    fn is_empty(&self) -> bool {
        self.full_rows.is_empty()
            && self.empty_rows.is_empty()
            && self.full_cols.is_empty()
            && self.empty_cols.is_empty()
    }
}

/// The normalized core of a context together with everything that was peeled
/// off to reach it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizationReport {
    original_attributes: Vec<String>,
    original_objects: Vec<String>,
    passes: Vec<NormalizationPass>,
    core: BooleanContext,
}

fn flat(passes: &[NormalizationPass], pick: fn(&NormalizationPass) -> &Vec<String>) -> Vec<&str> {
    passes
        .iter()
        .flat_map(|p| pick(p).iter().map(String::as_str))
        .collect()
}

impl NormalizationReport {
    pub fn core(&self) -> &BooleanContext {
        &self.core
    }

    pub fn into_core(self) -> BooleanContext {
        self.core
    }

    pub fn passes(&self) -> &[NormalizationPass] {
        &self.passes
    }

    pub fn removed_full_rows(&self) -> Vec<&str> {
        flat(&self.passes, |p| &p.full_rows)
    }

    pub fn removed_empty_rows(&self) -> Vec<&str> {
        flat(&self.passes, |p| &p.empty_rows)
    }

    pub fn removed_full_cols(&self) -> Vec<&str> {
        flat(&self.passes, |p| &p.full_cols)
    }

    pub fn removed_empty_cols(&self) -> Vec<&str> {
        flat(&self.passes, |p| &p.empty_cols)
    }

    /// Nothing had to be removed.
    pub fn is_unchanged(&self) -> bool {
        self.passes.is_empty()
    }

    /// The core has no attributes or no objects left.
    pub fn collapsed(&self) -> bool {
        self.core.attribute_count() == 0 || self.core.object_count() == 0
    }

    /// Rebuilds the original context from `core` (anything with the same
    /// names and order as the normalized core) by replaying the removals in
    /// reverse.
    pub fn reattach(&self, core: &BooleanContext) -> Result<BooleanContext> {
        if core.attributes() != self.core.attributes() || core.objects() != self.core.objects() {
            return Err(Error::ContractViolation(
                "reattach needs a context with the core's names".into(),
            ));
        }
        let attr_pos = |name: &str| self.original_attributes.iter().position(|n| n == name);
        let obj_pos = |name: &str| self.original_objects.iter().position(|n| n == name);

        let mut current = core.clone();
        for pass in self.passes.iter().rev() {
            let mut attrs: Vec<String> = current.attributes().to_vec();
            attrs.extend(pass.full_rows.iter().cloned());
            attrs.extend(pass.empty_rows.iter().cloned());
            attrs.sort_by_key(|n| attr_pos(n));
            let mut objs: Vec<String> = current.objects().to_vec();
            objs.extend(pass.full_cols.iter().cloned());
            objs.extend(pass.empty_cols.iter().cloned());
            objs.sort_by_key(|n| obj_pos(n));

            let mut rows = Vec::with_capacity(attrs.len());
            for a in &attrs {
                let mut row = BitSet::empty(objs.len());
                for (j, b) in objs.iter().enumerate() {
                    let value = if pass.full_rows.contains(a) {
                        true
                    } else if pass.empty_rows.contains(a) {
                        false
                    } else if pass.full_cols.contains(b) {
                        true
                    } else if pass.empty_cols.contains(b) {
                        false
                    } else {
                        let ai = current.attribute_index(a).expect("kept attribute");
                        let bi = current.object_index(b).expect("kept object");
                        current.incidence(ai, bi)
                    };
                    if value {
                        row.insert(j);
                    }
                }
                rows.push(row);
            }
            current = BooleanContext::from_rows(attrs, objs, rows)?;
        }
        Ok(current)
    }
}

/// Strips all-true and all-false rows and columns until none remain.
///
/// Removing a column can empty or fill a row, so rounds repeat until a fixpoint.
/// A row over zero remaining objects counts as empty (likewise for columns).
pub fn normalize(ctx: &BooleanContext) -> NormalizationReport {
    let mut passes = Vec::new();
    let mut current = ctx.clone();
    loop {
        let mut pass = NormalizationPass::default();
        let mut keep_attrs = Vec::new();
        let mut keep_objs = Vec::new();
        for a in 0..current.attribute_count() {
            let row = current.row(a);
            if row.is_empty() {
                pass.empty_rows.push(current.attributes()[a].clone());
            } else if row.is_full() {
                pass.full_rows.push(current.attributes()[a].clone());
            } else {
                keep_attrs.push(a);
            }
        }
        for b in 0..current.object_count() {
            let col = current.column(b);
            if col.is_empty() {
                pass.empty_cols.push(current.objects()[b].clone());
            } else if col.is_full() {
                pass.full_cols.push(current.objects()[b].clone());
            } else {
                keep_objs.push(b);
            }
        }
        if pass.is_empty() {
            break;
        }
        let attrs = current
            .attribute_subset(keep_attrs)
            .expect("indices in range");
        let objs = current.object_subset(keep_objs).expect("indices in range");
        current = current.restrict(&attrs, &objs).expect("own subsets");
        passes.push(pass);
    }
    NormalizationReport {
        original_attributes: ctx.attributes().to_vec(),
        original_objects: ctx.objects().to_vec(),
        passes,
        core: current,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolean::testing::{from_strings, table1};
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn table1_is_already_normalized() {
        let t1 = table1();
        let r = normalize(&t1);
        assert!(r.is_unchanged());
        assert_eq!(r.core(), &t1);
        assert!(t1.is_normalized());
    }

    #[test]
    fn single_cell_collapses() {
        let ctx = from_strings(&["1"]);
        let r = normalize(&ctx);
        assert!(r.collapsed());
        assert_eq!(r.removed_full_rows(), vec!["a1"]);
        assert_eq!(r.removed_full_cols(), vec!["b1"]);
        assert_eq!(r.core().attribute_count(), 0);
        assert_eq!(r.core().object_count(), 0);
        assert_eq!(r.reattach(r.core()).unwrap(), ctx);
    }

    #[test]
    fn full_row_added_to_table1_is_removed() {
        let t1 = table1();
        let mut rows = vec![BitSet::full(6)];
        rows.extend(t1.rows().iter().cloned());
        let mut attrs = vec!["a0".to_string()];
        attrs.extend(t1.attributes().iter().cloned());
        let ctx = BooleanContext::from_rows(attrs, t1.objects().to_vec(), rows).unwrap();
        let r = normalize(&ctx);
        assert_eq!(r.removed_full_rows(), vec!["a0"]);
        assert!(r.removed_empty_rows().is_empty());
        assert!(r.removed_full_cols().is_empty());
        assert!(r.removed_empty_cols().is_empty());
        assert_eq!(r.core(), &t1);
        assert_eq!(r.reattach(r.core()).unwrap(), ctx);
    }

    #[test]
    fn removal_cascades() {
        // b3 is empty; once it is gone a2 (true on b1,b2 only) becomes full.
        let ctx = from_strings(&["100", "110", "010"]);
        let r = normalize(&ctx);
        assert_eq!(r.passes().len(), 2);
        assert_eq!(r.passes()[0].empty_cols, vec!["b3".to_string()]);
        assert_eq!(r.passes()[1].full_rows, vec!["a2".to_string()]);
        assert!(r.core().is_normalized());
        assert_eq!(r.reattach(r.core()).unwrap(), ctx);
    }
}
