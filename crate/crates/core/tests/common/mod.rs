#![allow(dead_code)]

use galois_factor_core::boolean::BooleanContext;
use galois_factor_core::fuzzy::{Frame, FrameKind, FuzzyContext};
use galois_factor_core::grade::{AdjointTriple, GradeChain};
use proptest::prelude::*;

pub fn names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

pub fn boolean(rows: &[Vec<bool>]) -> BooleanContext {
    let objects = rows.first().map_or(0, Vec::len);
    BooleanContext::new(names("a", rows.len()), names("b", objects), rows).unwrap()
}

/// A context of up to `max × max` plus two object and two attribute masks.
pub fn boolean_case(
    max: usize,
) -> impl Strategy<Value = (BooleanContext, [Vec<bool>; 2], [Vec<bool>; 2])> {
    (1..=max, 1..=max).prop_flat_map(|(na, nb)| {
        (
            prop::collection::vec(prop::collection::vec(any::<bool>(), nb), na),
            [
                prop::collection::vec(any::<bool>(), nb),
                prop::collection::vec(any::<bool>(), nb),
            ],
            [
                prop::collection::vec(any::<bool>(), na),
                prop::collection::vec(any::<bool>(), na),
            ],
        )
            .prop_map(|(rows, xs, ys)| (boolean(&rows), xs, ys))
    })
}

pub fn indices(mask: &[bool]) -> impl Iterator<Item = usize> + '_ {
    (0..mask.len()).filter(|&i| mask[i])
}

/// Gödel, Łukasiewicz or discretized-product frame, every chain with at most five grades.
/// Families 3..=5 mix chains under each of the three frame kinds.
pub fn small_frame() -> impl Strategy<Value = Frame> {
    (0..6u8, 1..=4u32, 1..=4u32, 1..=4u32).prop_map(|(family, m, m2, m3)| {
        let dprod = || AdjointTriple::discretized_product(m, m2, m3).unwrap();
        let chain = |k| GradeChain::new(k).unwrap();
        match family {
            0 => Frame::godel(m).unwrap(),
            1 => Frame::lukasiewicz(m).unwrap(),
            2 => Frame::discretized_product(m, m, m).unwrap(),
            3 => Frame::discretized_product(m, m2, m3).unwrap(),
            // (P, L2, L1)
            4 => Frame::new(
                FrameKind::PropertyOriented,
                chain(m3),
                chain(m2),
                chain(m),
                vec![dprod()],
            )
            .unwrap(),
            // (L1, P, L2)
            _ => Frame::new(
                FrameKind::ObjectOriented,
                chain(m),
                chain(m3),
                chain(m2),
                vec![dprod()],
            )
            .unwrap(),
        }
    })
}

/// A fuzzy context (`|A|, |B| ≤ 4`) with two graded object sets and two graded attribute sets.
pub fn fuzzy_case() -> impl Strategy<Value = (FuzzyContext, [Vec<u32>; 2], [Vec<u32>; 2])> {
    (small_frame(), 1..=4usize, 1..=4usize).prop_flat_map(|(frame, na, nb)| {
        let (l1, l2, p) = (frame.l1().m(), frame.l2().m(), frame.p().m());
        (
            prop::collection::vec(prop::collection::vec(0..=p, nb), na),
            [
                prop::collection::vec(0..=l2, nb),
                prop::collection::vec(0..=l2, nb),
            ],
            [
                prop::collection::vec(0..=l1, na),
                prop::collection::vec(0..=l1, na),
            ],
        )
            .prop_map(move |(rel, gs, fs)| {
                let ctx =
                    FuzzyContext::new(names("a", na), names("b", nb), frame.clone(), &rel).unwrap();
                (ctx, gs, fs)
            })
    })
}
