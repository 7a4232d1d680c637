mod common;

use common::boolean_case;
use galois_factor_core::boolean::normalize;
use galois_factor_core::factor::{
    block_bounds, cn_enumerate, complement, factorize, rstar, BlockMask,
};
use galois_factor_core::oracle::{bipartite_components, cross_check_cn};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn cn_matches_brute_force_and_components((ctx, _, _) in boolean_case(9)) {
        let report = normalize(&ctx);
        prop_assume!(!report.collapsed());
        let core = report.core();
        let check = cross_check_cn(core).unwrap();
        prop_assert!(check.agrees(), "{:?}", check.mismatches);
        prop_assert_eq!(cn_enumerate(core).unwrap().atoms().len(), bipartite_components(core).len());
    }

    #[test]
    fn cn_lattice_structure((ctx, _, _) in boolean_case(9)) {
        let report = normalize(&ctx);
        prop_assume!(!report.collapsed());
        let core = report.core();
        let cn = cn_enumerate(core).unwrap();
        let el = cn.elements().unwrap();

        let mut objects = core.no_objects();
        let mut attrs = core.no_attributes();
        for atom in cn.atoms() {
            prop_assert!(atom.objects().is_disjoint(&objects));
            prop_assert!(atom.attributes().is_disjoint(&attrs));
            objects = objects.union(atom.objects());
            attrs = attrs.union(atom.attributes());
        }
        prop_assert!(objects.is_full() && attrs.is_full());

        for (i, pair) in el.pairs().iter().enumerate() {
            prop_assert!(el.index_of(&complement(core, pair).unwrap()).is_some());
            prop_assert_eq!(el.is_join_irreducible(i), el.atom_indices().contains(&i));
            if !pair.is_trivial() {
                let bounds = block_bounds(core, pair).unwrap();
                prop_assert!(bounds.all_hold(), "{:?}", bounds);
            }
        }
    }

    #[test]
    fn blocks_reconstruct_the_context((ctx, _, _) in boolean_case(9)) {
        let f = factorize(&ctx);
        prop_assert!(f.is_exact());
        prop_assert!(f.is_partition());
        prop_assert_eq!(f.reconstruct().unwrap(), ctx);
    }

    #[test]
    fn rstar_contains_the_relation((ctx, _, _) in boolean_case(9)) {
        let report = normalize(&ctx);
        prop_assume!(!report.collapsed());
        let core = report.core();
        let mask = rstar(core).unwrap();
        prop_assert!(mask.covers_relation(core));
        let atoms = bipartite_components(core);
        let rect: usize = atoms.iter().map(|(x, y)| x.len() * y.len()).sum();
        prop_assert_eq!(mask.cell_count(), rect);
        let cn = cn_enumerate(core).unwrap();
        prop_assert_eq!(mask, BlockMask::from_atoms(core, cn.atoms()));
    }
}
