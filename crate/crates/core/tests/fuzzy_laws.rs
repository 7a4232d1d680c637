mod common;

use common::fuzzy_case;
use galois_factor_core::fuzzy::{
    check_fp1, check_fp2, check_fp3, fn_enumerate, fn_meet, FuzzyContext, FuzzyNecessityPair,
    GradedAttributeSet, GradedObjectSet, Operator, DEFAULT_BUDGET,
};
use galois_factor_core::oracle::{cross_check_fn, cross_check_fuzzy_concepts};
use proptest::prelude::*;

fn supports(ctx: &FuzzyContext, ops: &[Operator]) -> bool {
    ops.iter().all(|&op| ctx.frame().supports(op))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn derivation_is_an_antitone_galois_connection((ctx, gs, fs) in fuzzy_case()) {
        prop_assume!(supports(&ctx, &[Operator::Up, Operator::Down]));
        let g1 = ctx.graded_objects(&gs[0]).unwrap();
        let g2 = ctx.graded_objects(&gs[1]).unwrap();
        let f = ctx.graded_attributes(&fs[0]).unwrap();
        let up = |g: &GradedObjectSet| ctx.up(g).unwrap();
        let down = |f: &GradedAttributeSet| ctx.down(f).unwrap();
        prop_assert!(g1.leq(&down(&up(&g1))));
        prop_assert!(f.leq(&up(&down(&f))));
        prop_assert!(up(&g1.join(&g2)).leq(&up(&g1.meet(&g2))));
        prop_assert_eq!(up(&down(&up(&g1))), up(&g1));
        prop_assert_eq!(g1.leq(&down(&f)), f.leq(&up(&g1)));
    }

    #[test]
    fn possibility_and_necessity_are_isotone_connections((ctx, gs, fs) in fuzzy_case()) {
        let g1 = ctx.graded_objects(&gs[0]).unwrap();
        let g2 = ctx.graded_objects(&gs[1]).unwrap();
        let f1 = ctx.graded_attributes(&fs[0]).unwrap();
        let f2 = ctx.graded_attributes(&fs[1]).unwrap();
        if supports(&ctx, &[Operator::UpPi, Operator::DownN]) {
            let up_pi = |g: &GradedObjectSet| ctx.up_pi(g).unwrap();
            let down_n = |f: &GradedAttributeSet| ctx.down_n(f).unwrap();
            prop_assert_eq!(up_pi(&g1).leq(&f1), g1.leq(&down_n(&f1)));
            prop_assert!(g1.leq(&down_n(&up_pi(&g1))));
            prop_assert!(up_pi(&down_n(&f1)).leq(&f1));
            prop_assert!(up_pi(&g1.meet(&g2)).leq(&up_pi(&g1)));
            prop_assert_eq!(up_pi(&down_n(&up_pi(&g1))), up_pi(&g1));
        }
        if supports(&ctx, &[Operator::DownPi, Operator::UpN]) {
            let down_pi = |f: &GradedAttributeSet| ctx.down_pi(f).unwrap();
            let up_n = |g: &GradedObjectSet| ctx.up_n(g).unwrap();
            prop_assert_eq!(down_pi(&f2).leq(&g2), f2.leq(&up_n(&g2)));
            prop_assert!(f2.leq(&up_n(&down_pi(&f2))));
            prop_assert!(down_pi(&up_n(&g2)).leq(&g2));
            prop_assert!(up_n(&g1.meet(&g2)).leq(&up_n(&g2)));
            prop_assert_eq!(up_n(&down_pi(&up_n(&g2))), up_n(&g2));
        }
    }

    #[test]
    fn fast_enumerations_match_brute_force((ctx, _, _) in fuzzy_case()) {
        if supports(&ctx, &[Operator::UpN, Operator::DownN]) {
            let r = cross_check_fn(&ctx, DEFAULT_BUDGET).unwrap();
            prop_assert!(r.agrees(), "{:?}", r.mismatches);
        }
        if supports(&ctx, &[Operator::Up, Operator::Down]) {
            let r = cross_check_fuzzy_concepts(&ctx, DEFAULT_BUDGET).unwrap();
            prop_assert!(r.agrees(), "{:?}", r.mismatches);
        }
    }

    #[test]
    fn fn_is_a_meet_closed_family_with_top((ctx, _, _) in fuzzy_case()) {
        prop_assume!(supports(&ctx, &[Operator::UpN, Operator::DownN]));
        let lattice = fn_enumerate(&ctx, DEFAULT_BUDGET).unwrap();
        let top = FuzzyNecessityPair::new(&ctx, ctx.objects_top(), ctx.attributes_top()).unwrap();
        prop_assert!(lattice.contains(&top));
        for p in lattice.pairs() {
            for q in lattice.pairs() {
                prop_assert!(lattice.contains(&fn_meet(&ctx, p, q).unwrap()));
            }
        }
    }

    #[test]
    fn fp1_and_fp2_hold_on_uniform_frames((ctx, _, _) in fuzzy_case()) {
        prop_assume!(ctx.frame().is_uniform());
        for p in fn_enumerate(&ctx, DEFAULT_BUDGET).unwrap().pairs() {
            prop_assert!(check_fp1(&ctx, p).unwrap());
            prop_assert!(check_fp2(&ctx, p).unwrap());
            let fp3 = check_fp3(&ctx, p).unwrap();
            prop_assert!(!fp3.violated());
            if fp3.hypotheses_hold() {
                prop_assert_eq!(ctx.up_n(p.g()).unwrap(), ctx.up_pi(p.g()).unwrap());
            }
        }
    }
}
