mod common;

use common::{boolean_case, indices};
use galois_factor_core::boolean::{concepts, normalize, BooleanContext, ObjectSubset};
use galois_factor_core::oracle::{cross_check_concepts, cross_check_property_oriented};
use proptest::prelude::*;

fn subsets(
    ctx: &BooleanContext,
    xs: &[Vec<bool>; 2],
    ys: &[Vec<bool>; 2],
) -> (
    [ObjectSubset; 2],
    [galois_factor_core::boolean::AttributeSubset; 2],
) {
    let x = |m: &Vec<bool>| ctx.object_subset(indices(m)).unwrap();
    let y = |m: &Vec<bool>| ctx.attribute_subset(indices(m)).unwrap();
    ([x(&xs[0]), x(&xs[1])], [y(&ys[0]), y(&ys[1])])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn derivation_is_an_antitone_galois_connection((ctx, xs, ys) in boolean_case(8)) {
        let ([x1, x2], [y1, _]) = subsets(&ctx, &xs, &ys);
        let up = |x: &ObjectSubset| ctx.up(x).unwrap();
        prop_assert!(x1.is_subset(&ctx.down(&up(&x1)).unwrap()));
        prop_assert!(y1.is_subset(&ctx.up(&ctx.down(&y1).unwrap()).unwrap()));
        let (lo, hi) = (x1.intersection(&x2), x1.union(&x2));
        prop_assert!(up(&hi).is_subset(&up(&lo)));
        prop_assert_eq!(up(&ctx.down(&up(&x1)).unwrap()), up(&x1));
        // X ⊆ Y^↓ ⇔ Y ⊆ X^↑
        prop_assert_eq!(
            x1.is_subset(&ctx.down(&y1).unwrap()),
            y1.is_subset(&up(&x1))
        );
    }

    #[test]
    fn possibility_and_necessity_are_isotone_connections((ctx, xs, ys) in boolean_case(8)) {
        let ([x1, x2], [y1, y2]) = subsets(&ctx, &xs, &ys);
        let up_pi = |x: &ObjectSubset| ctx.up_pi(x).unwrap();
        let up_n = |x: &ObjectSubset| ctx.up_n(x).unwrap();
        prop_assert_eq!(up_pi(&x1.union(&x2)), up_pi(&x1).union(&up_pi(&x2)));
        prop_assert_eq!(up_n(&x1.intersection(&x2)), up_n(&x1).intersection(&up_n(&x2)));
        // X^↑π ⊆ Y ⇔ X ⊆ Y^↓N
        prop_assert_eq!(
            up_pi(&x1).is_subset(&y1),
            x1.is_subset(&ctx.down_n(&y1).unwrap())
        );
        // Y^↓π ⊆ X ⇔ Y ⊆ X^↑N
        prop_assert_eq!(
            ctx.down_pi(&y2).unwrap().is_subset(&x2),
            y2.is_subset(&up_n(&x2))
        );
        prop_assert!(x1.is_subset(&ctx.down_n(&up_pi(&x1)).unwrap()));
        prop_assert!(ctx.up_pi(&ctx.down_n(&y1).unwrap()).unwrap().is_subset(&y1));
    }

    #[test]
    fn enumerations_match_brute_force((ctx, _, _) in boolean_case(8)) {
        let report = cross_check_concepts(&ctx).unwrap();
        prop_assert!(report.agrees(), "{:?}", report.mismatches);
        let report = cross_check_property_oriented(&ctx).unwrap();
        prop_assert!(report.agrees(), "{:?}", report.mismatches);
    }

    #[test]
    fn every_concept_is_a_fixpoint((ctx, _, _) in boolean_case(8)) {
        let lattice = concepts(&ctx);
        for c in lattice.concepts() {
            prop_assert_eq!(&ctx.up(c.extent()).unwrap(), c.intent());
            prop_assert_eq!(&ctx.down(c.intent()).unwrap(), c.extent());
        }
        for &(i, j) in lattice.covers() {
            prop_assert!(lattice.concepts()[i].extent().is_subset(lattice.concepts()[j].extent()));
        }
    }

    #[test]
    fn normalized_lattices_are_bounded_by_the_trivial_concepts((ctx, _, _) in boolean_case(8)) {
        let report = normalize(&ctx);
        prop_assume!(!report.collapsed());
        let core = report.core();
        let lattice = concepts(core);
        let top = &lattice.concepts()[lattice.top().unwrap()];
        let bottom = &lattice.concepts()[lattice.bottom().unwrap()];
        prop_assert!(top.extent().is_full() && top.intent().is_empty());
        prop_assert!(bottom.extent().is_empty() && bottom.intent().is_full());
    }

    #[test]
    fn normalization_round_trips((ctx, _, _) in boolean_case(8)) {
        let report = normalize(&ctx);
        prop_assert!(report.core().is_normalized() || report.collapsed());
        prop_assert_eq!(report.reattach(report.core()).unwrap(), ctx);
    }
}
