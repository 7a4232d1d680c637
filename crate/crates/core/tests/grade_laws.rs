use galois_factor_core::grade::{
    check_triple_properties, residua_by_adjointness, AdjointTriple, GradeChain,
};
use proptest::prelude::*;

fn closed_form_tables(t: &AdjointTriple) -> (Vec<u32>, Vec<u32>, Vec<u32>) {
    let (p1, p2, p3) = t.domains();
    let mut conj = Vec::new();
    for x in 0..=p1.m() {
        for y in 0..=p2.m() {
            conj.push(t.conj_num(x, y));
        }
    }
    let mut left = Vec::new();
    let mut right = Vec::new();
    for z in 0..=p3.m() {
        for y in 0..=p2.m() {
            left.push(t.res_left_num(z, y));
        }
        for x in 0..=p1.m() {
            right.push(t.res_right_num(z, x));
        }
    }
    (conj, left, right)
}

proptest! {
    #[test]
    fn discretized_products_are_adjoint(m1 in 1..=12u32, m2 in 1..=12u32, m3 in 1..=12u32) {
        let t = AdjointTriple::discretized_product(m1, m2, m3).unwrap();
        let report = check_triple_properties(&t);
        prop_assert!(report.passed(), "{:?}", report.failures);
        let (p1, p2, p3) = t.domains();
        let (conj, left, right) = closed_form_tables(&t);
        prop_assert_eq!(residua_by_adjointness(p1, p2, p3, &conj).unwrap(), (left, right));
    }

    #[test]
    fn commutative_triples_have_one_residuum(m in 1..=16u32) {
        let chain = GradeChain::new(m).unwrap();
        for t in [AdjointTriple::godel(chain), AdjointTriple::lukasiewicz(chain)] {
            prop_assert!(t.is_commutative());
            prop_assert!(t.residua_coincide());
        }
        let p = AdjointTriple::discretized_product(m, m, m).unwrap();
        prop_assert!(p.is_commutative() && p.residua_coincide());
    }

    #[test]
    fn bracket_encloses_the_ratio(m in 1..=16u32, q in 1..=50u64, p_frac in 0.0..=1.0f64) {
        let p = (p_frac * q as f64).round() as u64;
        let chain = GradeChain::new(m).unwrap();
        let (lo, hi) = chain.bracket(p, q).unwrap();
        prop_assert!(u64::from(lo.numerator()) * q <= p * u64::from(m));
        prop_assert!(u64::from(hi.numerator()) * q >= p * u64::from(m));
        prop_assert!(hi.numerator() - lo.numerator() <= 1);
        prop_assert_eq!(chain.from_ratio(p, q).is_some(), lo == hi);
    }
}
