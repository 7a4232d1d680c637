use super::{Frame, FuzzyContext};
use alloc::format;
use alloc::vec::Vec;

pub fn build(frame: Frame, rows: &[&[u32]]) -> FuzzyContext {
    let attrs = (1..=rows.len()).map(|i| format!("a{i}")).collect();
    let objs = (1..=rows[0].len()).map(|i| format!("b{i}")).collect();
    let rel: Vec<Vec<u32>> = rows.iter().map(|r| r.to_vec()).collect();
    FuzzyContext::new(attrs, objs, frame, &rel).unwrap()
}

/// Łukasiewicz on `[0,1]_4`: `a1 = (0.5, 0)`, `a2 = (0, 0.75)`.
pub fn lukasiewicz_t3() -> FuzzyContext {
    build(Frame::lukasiewicz(4).unwrap(), &[&[2, 0], &[0, 3]])
}

/// Discretized product on `[0,1]_4`, the normalized relation with 20 necessity pairs.
pub fn dprod_r2() -> FuzzyContext {
    build(
        Frame::discretized_product(4, 4, 4).unwrap(),
        &[&[2, 0, 4], &[0, 2, 0], &[3, 0, 1]],
    )
}

/// Gödel on `[0,1]_4`, not ⊤-normalized.
pub fn godel_r1() -> FuzzyContext {
    build(
        Frame::godel(4).unwrap(),
        &[&[2, 1, 0], &[2, 4, 0], &[0, 0, 3]],
    )
}

/// Gödel on `[0,1]_4`, ⊤-normalized by rows.
pub fn godel_r2() -> FuzzyContext {
    build(
        Frame::godel(4).unwrap(),
        &[&[4, 1, 0], &[2, 4, 0], &[0, 0, 4]],
    )
}
