//! Deliberately naive reference implementations.
//!
//! Nothing here calls the fast paths: operators are re-evaluated from their
//! definitions (Boolean ones through single-cell incidence lookups, graded ones
//! through [`Grade`]-typed triple calls) and every candidate subset is visited.
//! Use them to validate the fast enumerations, never in production paths.

use crate::bitset::BitSet;
use crate::boolean::{
    concepts, property_oriented_concepts, AttributeSubset, BooleanContext, ConceptLattice,
    FormalConcept, ObjectSubset,
};
use crate::error::{Error, Result};
use crate::factor::{cn_enumerate, NecessityPair};
use crate::fuzzy::{
    fn_enumerate, fuzzy_concepts, FuzzyContext, FuzzyNecessityPair, MultiAdjointConcept, Operator,
};
use crate::grade::{Grade, GradeChain};
use crate::order::Hasse;
use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::Debug;

/// Boolean oracles visit all `2^|B|` object sets; this caps `|B|`.
pub const BRUTE_OBJECT_LIMIT: usize = 20;

/// One disagreement between a fast path and its oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub input: String,
    pub fast: String,
    pub oracle: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OracleReport {
    /// Elements compared.
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl OracleReport {
    pub fn agrees(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn absorb(&mut self, other: OracleReport) {
        self.checked += other.checked;
        self.mismatches.extend(other.mismatches);
    }

    fn compare_sets<T: Ord + Debug>(&mut self, input: &str, fast: &[T], oracle: &[T]) {
        let f: BTreeSet<&T> = fast.iter().collect();
        let o: BTreeSet<&T> = oracle.iter().collect();
        self.checked += f.union(&o).count();
        for x in f.difference(&o) {
            self.mismatches.push(Mismatch {
                input: input.into(),
                fast: format!("{x:?}"),
                oracle: "absent".into(),
            });
        }
        for x in o.difference(&f) {
            self.mismatches.push(Mismatch {
                input: input.into(),
                fast: "absent".into(),
                oracle: format!("{x:?}"),
            });
        }
        if fast.len() != f.len() {
            self.mismatches.push(Mismatch {
                input: input.into(),
                fast: format!("{} entries with duplicates", fast.len()),
                oracle: format!("{} distinct", o.len()),
            });
        }
    }
}

fn require_objects(ctx: &BooleanContext) -> Result<()> {
    let nb = ctx.object_count();
    if nb > BRUTE_OBJECT_LIMIT {
        return Err(Error::BudgetExceeded {
            required: 1u128 << nb,
            budget: 1u128 << BRUTE_OBJECT_LIMIT,
        });
    }
    Ok(())
}

fn mask_to_objects(ctx: &BooleanContext, mask: u64) -> Vec<bool> {
    (0..ctx.object_count())
        .map(|b| mask >> b & 1 == 1)
        .collect()
}

fn naive_up(ctx: &BooleanContext, x: &[bool]) -> Vec<bool> {
    (0..ctx.attribute_count())
        .map(|a| (0..ctx.object_count()).all(|b| !x[b] || ctx.incidence(a, b)))
        .collect()
}

fn naive_down(ctx: &BooleanContext, y: &[bool]) -> Vec<bool> {
    (0..ctx.object_count())
        .map(|b| (0..ctx.attribute_count()).all(|a| !y[a] || ctx.incidence(a, b)))
        .collect()
}

fn naive_up_n(ctx: &BooleanContext, x: &[bool]) -> Vec<bool> {
    (0..ctx.attribute_count())
        .map(|a| (0..ctx.object_count()).all(|b| !ctx.incidence(a, b) || x[b]))
        .collect()
}

fn naive_down_n(ctx: &BooleanContext, y: &[bool]) -> Vec<bool> {
    (0..ctx.object_count())
        .map(|b| (0..ctx.attribute_count()).all(|a| !ctx.incidence(a, b) || y[a]))
        .collect()
}

fn naive_up_pi(ctx: &BooleanContext, x: &[bool]) -> Vec<bool> {
    (0..ctx.attribute_count())
        .map(|a| (0..ctx.object_count()).any(|b| x[b] && ctx.incidence(a, b)))
        .collect()
}

fn bits(v: &[bool]) -> BitSet {
    BitSet::from_indices(v.len(), (0..v.len()).filter(|&i| v[i]))
}

fn objects(ctx: &BooleanContext, v: &[bool]) -> ObjectSubset {
    ctx.object_subset_from_bits(bits(v))
        .expect("sized to the context")
}

fn attributes(ctx: &BooleanContext, v: &[bool]) -> AttributeSubset {
    ctx.attribute_subset_from_bits(bits(v))
        .expect("sized to the context")
}

/// Covers of a finite order by definition: `i < j` with nothing strictly between.
fn naive_covers<F: Fn(usize, usize) -> bool>(n: usize, leq: F) -> Vec<(usize, usize)> {
    let lt = |i: usize, j: usize| i != j && leq(i, j);
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if lt(i, j) && !(0..n).any(|k| lt(i, k) && lt(k, j)) {
                out.push((i, j));
            }
        }
    }
    out
}

/// All `2^|B|` object sets, keeping fixpoints of `↓∘↑`.
pub fn brute_concepts(ctx: &BooleanContext) -> Result<ConceptLattice> {
    require_objects(ctx)?;
    let mut found = Vec::new();
    for mask in 0..1u64 << ctx.object_count() {
        let x = mask_to_objects(ctx, mask);
        let y = naive_up(ctx, &x);
        if naive_down(ctx, &y) == x {
            found.push(FormalConcept {
                extent: objects(ctx, &x),
                intent: attributes(ctx, &y),
            });
        }
    }
    found.sort();
    let covers = naive_covers(found.len(), |i, j| {
        found[i].extent.is_subset(&found[j].extent)
    });
    Ok(ConceptLattice {
        hasse: Hasse::from_covers(found.len(), covers),
        concepts: found,
    })
}

/// All `X` with `X^↑N↓N = X`, paired with `X^↑N`.
pub fn brute_cn(ctx: &BooleanContext) -> Result<Vec<NecessityPair>> {
    require_objects(ctx)?;
    let mut found = Vec::new();
    for mask in 0..1u64 << ctx.object_count() {
        let x = mask_to_objects(ctx, mask);
        let y = naive_up_n(ctx, &x);
        if naive_down_n(ctx, &y) == x {
            found.push(NecessityPair {
                objects: objects(ctx, &x),
                attrs: attributes(ctx, &y),
            });
        }
    }
    found.sort();
    Ok(found)
}

/// All `X` with `X^↑π↓N = X`, paired with `X^↑π`.
pub fn brute_property_oriented_concepts(
    ctx: &BooleanContext,
) -> Result<Vec<(ObjectSubset, AttributeSubset)>> {
    require_objects(ctx)?;
    let mut found = Vec::new();
    for mask in 0..1u64 << ctx.object_count() {
        let x = mask_to_objects(ctx, mask);
        let y = naive_up_pi(ctx, &x);
        if naive_down_n(ctx, &y) == x {
            found.push((objects(ctx, &x), attributes(ctx, &y)));
        }
    }
    found.sort();
    Ok(found)
}

/// Connected components of the bipartite incidence graph, by breadth-first search.
/// Isolated objects or attributes form singleton components.
pub fn bipartite_components(ctx: &BooleanContext) -> Vec<(ObjectSubset, AttributeSubset)> {
    let (na, nb) = (ctx.attribute_count(), ctx.object_count());
    // nodes: objects 0..nb, attributes nb..nb+na
    let mut seen = alloc::vec![false; na + nb];
    let mut out = Vec::new();
    for start in 0..na + nb {
        if seen[start] {
            continue;
        }
        let (mut xs, mut ys) = (alloc::vec![false; nb], alloc::vec![false; na]);
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(v) = queue.pop_front() {
            let neighbours: Vec<usize> = if v < nb {
                xs[v] = true;
                (0..na)
                    .filter(|&a| ctx.incidence(a, v))
                    .map(|a| nb + a)
                    .collect()
            } else {
                ys[v - nb] = true;
                (0..nb).filter(|&b| ctx.incidence(v - nb, b)).collect()
            };
            for w in neighbours {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        out.push((objects(ctx, &xs), attributes(ctx, &ys)));
    }
    out.sort();
    out
}

fn grid_len(chain: GradeChain, n: usize) -> u128 {
    (0..n).fold(1u128, |acc, _| acc.saturating_mul(chain.len() as u128))
}

/// Grade vector number `index` of `chain^n`, element 0 most significant.
fn decode(chain: GradeChain, n: usize, mut index: u128) -> Vec<Grade> {
    let base = chain.len() as u128;
    let mut digits = alloc::vec![chain.bottom(); n];
    for slot in digits.iter_mut().rev() {
        *slot = chain
            .grade((index % base) as u32)
            .expect("digit below base");
        index /= base;
    }
    digits
}

fn inf(chain: GradeChain, it: impl Iterator<Item = Grade>) -> Grade {
    it.fold(chain.top(), |acc, g| match acc.partial_cmp(&g) {
        Some(Ordering::Greater) => g,
        _ => acc,
    })
}

fn naive_fuzzy_up_n(ctx: &FuzzyContext, g: &[Grade]) -> Vec<Grade> {
    (0..ctx.attribute_count())
        .map(|a| {
            inf(
                ctx.frame().l1(),
                (0..ctx.object_count()).map(|b| {
                    ctx.triple(a, b)
                        .res_left(g[b], ctx.relation(a, b))
                        .expect("frame checked")
                }),
            )
        })
        .collect()
}

fn naive_fuzzy_down_n(ctx: &FuzzyContext, f: &[Grade]) -> Vec<Grade> {
    (0..ctx.object_count())
        .map(|b| {
            inf(
                ctx.frame().l2(),
                (0..ctx.attribute_count()).map(|a| {
                    ctx.triple(a, b)
                        .res_right(f[a], ctx.relation(a, b))
                        .expect("frame checked")
                }),
            )
        })
        .collect()
}

fn naive_fuzzy_up(ctx: &FuzzyContext, g: &[Grade]) -> Vec<Grade> {
    (0..ctx.attribute_count())
        .map(|a| {
            inf(
                ctx.frame().l1(),
                (0..ctx.object_count()).map(|b| {
                    ctx.triple(a, b)
                        .res_left(ctx.relation(a, b), g[b])
                        .expect("frame checked")
                }),
            )
        })
        .collect()
}

fn naive_fuzzy_down(ctx: &FuzzyContext, f: &[Grade]) -> Vec<Grade> {
    (0..ctx.object_count())
        .map(|b| {
            inf(
                ctx.frame().l2(),
                (0..ctx.attribute_count()).map(|a| {
                    ctx.triple(a, b)
                        .res_right(ctx.relation(a, b), f[a])
                        .expect("frame checked")
                }),
            )
        })
        .collect()
}

fn numerators(v: &[Grade]) -> Vec<u32> {
    v.iter().map(|g| g.numerator()).collect()
}

fn require_grid(required: u128, budget: u128) -> Result<()> {
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    Ok(())
}

/// Every `g ∈ L2^B` with `g^↑N↓N = g`.
///
/// When `L1^A` also fits the budget, fixpoints of `↑N∘↓N` are collected from
/// that side as well and the two must describe the same pairs.
pub fn brute_fn(ctx: &FuzzyContext, budget: u128) -> Result<Vec<FuzzyNecessityPair>> {
    let frame = ctx.frame();
    frame.require(Operator::UpN)?;
    frame.require(Operator::DownN)?;
    let (l1, l2) = (frame.l1(), frame.l2());
    let (na, nb) = (ctx.attribute_count(), ctx.object_count());
    let size = grid_len(l2, nb);
    require_grid(size, budget)?;

    let mut from_objects = BTreeSet::new();
    for i in 0..size {
        let g = decode(l2, nb, i);
        let f = naive_fuzzy_up_n(ctx, &g);
        if naive_fuzzy_down_n(ctx, &f) == g {
            from_objects.insert((numerators(&g), numerators(&f)));
        }
    }

    let dual = grid_len(l1, na);
    if dual <= budget {
        let mut from_attributes = BTreeSet::new();
        for i in 0..dual {
            let f = decode(l1, na, i);
            let g = naive_fuzzy_down_n(ctx, &f);
            if naive_fuzzy_up_n(ctx, &g) == f {
                from_attributes.insert((numerators(&g), numerators(&f)));
            }
        }
        if from_attributes != from_objects {
            return Err(Error::ContractViolation(
                "object-side and attribute-side F_N scans disagree".into(),
            ));
        }
    }

    Ok(from_objects
        .into_iter()
        .map(|(g, f)| FuzzyNecessityPair {
            g: ctx.graded_objects(&g).expect("on L2"),
            f: ctx.graded_attributes(&f).expect("on L1"),
        })
        .collect())
}

/// Every `g ∈ L2^B` with `g^↑↓ = g`, paired with `g^↑`.
pub fn brute_fuzzy_concepts(ctx: &FuzzyContext, budget: u128) -> Result<Vec<MultiAdjointConcept>> {
    let frame = ctx.frame();
    frame.require(Operator::Up)?;
    frame.require(Operator::Down)?;
    let nb = ctx.object_count();
    let size = grid_len(frame.l2(), nb);
    require_grid(size, budget)?;
    let mut out = Vec::new();
    for i in 0..size {
        let g = decode(frame.l2(), nb, i);
        let f = naive_fuzzy_up(ctx, &g);
        if naive_fuzzy_down(ctx, &f) == g {
            out.push(MultiAdjointConcept {
                extent: ctx.graded_objects(&numerators(&g)).expect("on L2"),
                intent: ctx.graded_attributes(&numerators(&f)).expect("on L1"),
            });
        }
    }
    out.sort();
    Ok(out)
}

/// Concepts and Hasse covers against [`brute_concepts`].
pub fn cross_check_concepts(ctx: &BooleanContext) -> Result<OracleReport> {
    let fast = concepts(ctx);
    let slow = brute_concepts(ctx)?;
    let mut report = OracleReport::default();
    report.compare_sets("concepts", fast.concepts(), slow.concepts());
    if report.agrees() {
        report.compare_sets("concept covers", fast.covers(), slow.covers());
    }
    Ok(report)
}

/// Property-oriented concepts against [`brute_property_oriented_concepts`].
pub fn cross_check_property_oriented(ctx: &BooleanContext) -> Result<OracleReport> {
    let mut report = OracleReport::default();
    report.compare_sets(
        "property-oriented concepts",
        &property_oriented_concepts(ctx),
        &brute_property_oriented_concepts(ctx)?,
    );
    Ok(report)
}

/// `C_N` elements against [`brute_cn`] and atoms against [`bipartite_components`].
pub fn cross_check_cn(ctx: &BooleanContext) -> Result<OracleReport> {
    let cn = cn_enumerate(ctx)?;
    let mut report = OracleReport::default();
    let brute = brute_cn(ctx)?;
    match cn.elements() {
        Some(el) => report.compare_sets("C_N elements", el.pairs(), &brute),
        None => {
            let expected = cn.element_count();
            if expected != brute.len() as u128 {
                report.mismatches.push(Mismatch {
                    input: "C_N size".into(),
                    fast: format!("{expected}"),
                    oracle: format!("{}", brute.len()),
                });
            }
            report.checked += 1;
        }
    }
    let fast_atoms: Vec<(ObjectSubset, AttributeSubset)> = cn
        .atoms()
        .iter()
        .map(|p| (p.objects().clone(), p.attributes().clone()))
        .collect();
    report.compare_sets("C_N atoms", &fast_atoms, &bipartite_components(ctx));
    Ok(report)
}

/// [`fn_enumerate`] against [`brute_fn`].
pub fn cross_check_fn(ctx: &FuzzyContext, budget: u128) -> Result<OracleReport> {
    let fast = fn_enumerate(ctx, budget)?;
    let mut report = OracleReport::default();
    report.compare_sets("F_N", fast.pairs(), &brute_fn(ctx, budget)?);
    Ok(report)
}

/// [`fuzzy_concepts`] against [`brute_fuzzy_concepts`].
pub fn cross_check_fuzzy_concepts(ctx: &FuzzyContext, budget: u128) -> Result<OracleReport> {
    let fast = fuzzy_concepts(ctx, budget)?;
    let mut report = OracleReport::default();
    report.compare_sets(
        "multi-adjoint concepts",
        fast.concepts(),
        &brute_fuzzy_concepts(ctx, budget)?,
    );
    Ok(report)
}
