use super::concepts::MultiAdjointConcept;
use super::context::FuzzyContext;
use super::necessity::FuzzyNecessityPair;
use crate::error::Result;
use alloc::vec::Vec;
use core::cmp::Ordering;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    Rows,
    Columns,
}

/// No attribute row and no object column is entirely `⊥` or entirely above `⊥`.
pub fn is_normalized(ctx: &FuzzyContext) -> bool {
    let (na, nb) = (ctx.attribute_count(), ctx.object_count());
    let mixed = |vals: &mut dyn Iterator<Item = u32>| {
        let (mut zero, mut nonzero) = (false, false);
        for v in vals {
            if v == 0 {
                zero = true;
            } else {
                nonzero = true;
            }
        }
        zero && nonzero
    };
    (0..na).all(|a| mixed(&mut (0..nb).map(|b| ctx.r(a, b))))
        && (0..nb).all(|b| mixed(&mut (0..na).map(|a| ctx.r(a, b))))
}

/// Normalized, and every row (or every column) reaches `⊤_P`.
pub fn is_top_normalized(ctx: &FuzzyContext, axis: Axis) -> bool {
    let top = ctx.frame().p().m();
    let (na, nb) = (ctx.attribute_count(), ctx.object_count());
    is_normalized(ctx)
        && match axis {
            Axis::Rows => (0..na).all(|a| (0..nb).any(|b| ctx.r(a, b) == top)),
            Axis::Columns => (0..nb).all(|b| (0..na).any(|a| ctx.r(a, b) == top)),
        }
}

/// `g^↑π ⪯ g^↑N`.
pub fn check_fp1(ctx: &FuzzyContext, pair: &FuzzyNecessityPair) -> Result<bool> {
    Ok(ctx.up_pi(pair.g())?.leq(&ctx.up_n(pair.g())?))
}

/// `g^↑π↓N = g`: `⟨g, g^↑π⟩` is a property-oriented concept.
pub fn check_fp2(ctx: &FuzzyContext, pair: &FuzzyNecessityPair) -> Result<bool> {
    Ok(&ctx.down_n(&ctx.up_pi(pair.g())?)? == pair.g())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fp3Report {
    /// `g^↑N ⪯ g^↑π`.
    pub holds: bool,
    pub top_normalized: bool,
    pub godel: bool,
}

impl Fp3Report {
    /// The inequality is guaranteed only on ⊤-normalized Gödel contexts.
    pub fn hypotheses_hold(&self) -> bool {
        self.top_normalized && self.godel
    }

    /// Hypotheses hold and the inequality fails: a contradiction.
    pub fn violated(&self) -> bool {
        self.hypotheses_hold() && !self.holds
    }
}

/// `g^↑N ⪯ g^↑π`, reported together with its preconditions.
pub fn check_fp3(ctx: &FuzzyContext, pair: &FuzzyNecessityPair) -> Result<Fp3Report> {
    Ok(Fp3Report {
        holds: ctx.up_n(pair.g())?.leq(&ctx.up_pi(pair.g())?),
        top_normalized: is_top_normalized(ctx, Axis::Rows),
        godel: ctx.frame().is_godel(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttributeHypothesis {
    /// Some `b` has `g(b) ≰ R(a, b)`.
    pub fp4: bool,
    /// Some `b` has `R(a, b) = g(b) = ⊤`.
    pub fp4_prime: bool,
    /// Numerator of `g^↑(a)` on `L1`.
    pub up: u32,
    /// Numerator of `g^↑π(a)` on `L1`.
    pub up_pi: u32,
}

impl AttributeHypothesis {
    pub fn covered(&self) -> bool {
        self.fp4 || self.fp4_prime
    }

    pub fn inequality(&self) -> bool {
        self.up <= self.up_pi
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fp4Report {
    pub per_attribute: Vec<AttributeHypothesis>,
    pub top_normalized: bool,
    pub godel: bool,
}

impl Fp4Report {
    /// Every attribute satisfies the hypothesis of fp4 or of fp4′.
    pub fn hypothesis_holds(&self) -> bool {
        self.per_attribute.iter().all(AttributeHypothesis::covered)
    }

    /// `g^↑ ⪯ g^↑π`.
    pub fn inequality_holds(&self) -> bool {
        self.per_attribute
            .iter()
            .all(AttributeHypothesis::inequality)
    }

    /// Attributes meeting neither hypothesis.
    pub fn uncovered(&self) -> Vec<usize> {
        (0..self.per_attribute.len())
            .filter(|&a| !self.per_attribute[a].covered())
            .collect()
    }

    /// All hypotheses hold and the inequality still fails.
    pub fn violated(&self) -> bool {
        self.top_normalized && self.godel && self.hypothesis_holds() && !self.inequality_holds()
    }
}

/// Per-attribute hypotheses and the inequality `g^↑ ⪯ g^↑π`.
pub fn check_fp4(ctx: &FuzzyContext, pair: &FuzzyNecessityPair) -> Result<Fp4Report> {
    let g = pair.g();
    let up = ctx.up(g)?;
    let up_pi = ctx.up_pi(g)?;
    let per_attribute = (0..ctx.attribute_count())
        .map(|a| {
            let objs = 0..ctx.object_count();
            AttributeHypothesis {
                fp4: objs
                    .clone()
                    .any(|b| g.get(b).cmp_value(ctx.relation(a, b)) == Ordering::Greater),
                fp4_prime: objs
                    .into_iter()
                    .any(|b| g.get(b).is_top() && ctx.relation(a, b).is_top()),
                up: up.values()[a],
                up_pi: up_pi.values()[a],
            }
        })
        .collect();
    Ok(Fp4Report {
        per_attribute,
        top_normalized: is_top_normalized(ctx, Axis::Rows),
        godel: ctx.frame().is_godel(),
    })
}

/// The interval `⟨f^↓, f^↓↑⟩ ⪯ ⟨g^↑↓, g^↑⟩` a pair of `F_N` points at.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lower: MultiAdjointConcept,
    pub upper: MultiAdjointConcept,
    /// `f^↓ ⪯ g^↑↓`.
    pub ordered: bool,
}

pub fn interval_from_pair(ctx: &FuzzyContext, pair: &FuzzyNecessityPair) -> Result<Interval> {
    let lower = MultiAdjointConcept::from_attributes(ctx, pair.f())?;
    let upper = MultiAdjointConcept::from_objects(ctx, pair.g())?;
    let ordered = lower.leq(&upper);
    Ok(Interval {
        lower,
        upper,
        ordered,
    })
}

#[cfg(test)]
mod tests {
    use super::super::necessity::{fn_enumerate, DEFAULT_BUDGET};
    use super::super::testing::{build, dprod_r2, godel_r1, godel_r2, lukasiewicz_t3};
    use super::super::Frame;
    use super::*;

    fn pair(ctx: &FuzzyContext, g: &[u32], f: &[u32]) -> FuzzyNecessityPair {
        FuzzyNecessityPair::new(
            ctx,
            ctx.graded_objects(g).unwrap(),
            ctx.graded_attributes(f).unwrap(),
        )
        .unwrap()
    }

    fn extent(c: &MultiAdjointConcept) -> &[u32] {
        c.extent().values()
    }

    #[test]
    fn top_normalization() {
        assert!(is_top_normalized(&godel_r2(), Axis::Rows));
        assert!(is_normalized(&godel_r1()));
        assert!(!is_top_normalized(&godel_r1(), Axis::Rows));
        let r1 = build(
            Frame::discretized_product(4, 4, 4).unwrap(),
            &[&[2, 2, 4], &[1, 4, 0], &[0, 3, 1]],
        );
        assert!(!is_normalized(&r1));
        assert!(!is_top_normalized(&r1, Axis::Rows));
    }

    #[test]
    fn fp1_and_fp2_hold_on_every_enumerated_pair() {
        for ctx in [lukasiewicz_t3(), godel_r2(), dprod_r2(), godel_r1()] {
            for p in fn_enumerate(&ctx, DEFAULT_BUDGET).unwrap().pairs() {
                assert!(check_fp1(&ctx, p).unwrap());
                assert!(check_fp2(&ctx, p).unwrap());
            }
        }
    }

    #[test]
    fn fp2_does_not_make_a_concept() {
        let ctx = dprod_r2();
        let g2 = pair(&ctx, &[1, 0, 1], &[1, 0, 1]);
        assert!(check_fp2(&ctx, &g2).unwrap());
        let up = ctx.up(g2.g()).unwrap();
        assert_eq!(up.values(), [4, 0, 4]);
        // R(a3,b3) ↖ 1 = 0.25 bounds the last entry
        let closure = ctx.down(&up).unwrap();
        assert_eq!(closure.values(), [2, 0, 1]);
        assert_ne!(&closure, g2.g());
    }

    #[test]
    fn fp3_on_normalized_and_unnormalized_godel() {
        let r2 = godel_r2();
        for p in fn_enumerate(&r2, DEFAULT_BUDGET).unwrap().pairs() {
            let rep = check_fp3(&r2, p).unwrap();
            assert!(rep.hypotheses_hold() && rep.holds);
            assert_eq!(r2.up_n(p.g()).unwrap(), r2.up_pi(p.g()).unwrap());
        }
        let r1 = godel_r1();
        let p = pair(&r1, &[4, 2, 0], &[4, 2, 0]);
        assert!(check_fp1(&r1, &p).unwrap());
        let rep = check_fp3(&r1, &p).unwrap();
        assert!(!rep.holds && !rep.top_normalized && rep.godel && !rep.violated());
    }

    #[test]
    fn fp4_hypotheses() {
        let ctx = godel_r2();
        // a corrected version of the first listed pair: {b3/0.75}
        let g1 = pair(&ctx, &[0, 0, 3], &[0, 0, 3]);
        let rep = check_fp4(&ctx, &g1).unwrap();
        assert_eq!(rep.uncovered(), [2]);
        assert_eq!(
            (rep.per_attribute[2].up, rep.per_attribute[2].up_pi),
            (4, 3)
        );
        assert!(!rep.inequality_holds());

        let g2 = pair(&ctx, &[3, 2, 0], &[3, 2, 0]);
        let rep = check_fp4(&ctx, &g2).unwrap();
        assert!(rep.per_attribute.iter().all(|h| h.fp4));
        assert!(rep.inequality_holds());

        let g3 = pair(&ctx, &[4, 3, 0], &[4, 3, 0]);
        let rep = check_fp4(&ctx, &g3).unwrap();
        assert!(rep.per_attribute[0].fp4_prime);
    }

    #[test]
    fn intervals_on_godel_r2() {
        let ctx = godel_r2();
        let cases: [(&[u32], &[u32], &[u32]); 4] = [
            (&[3, 2, 0], &[4, 1, 0], &[4, 4, 0]),
            (&[4, 3, 0], &[2, 1, 0], &[4, 4, 0]),
            (&[0, 0, 2], &[0, 0, 4], &[0, 0, 4]),
            (&[3, 2, 2], &[0, 0, 0], &[4, 4, 4]),
        ];
        for (g, lower, upper) in cases {
            let iv = interval_from_pair(&ctx, &pair(&ctx, g, g)).unwrap();
            assert_eq!(extent(&iv.lower), lower, "{g:?}");
            assert_eq!(extent(&iv.upper), upper, "{g:?}");
            assert!(iv.ordered);
        }
    }
}
