use galois_factor::cli::lattice;
use galois_factor::cxt::{emit_cxt, parse_cxt};
use galois_factor::frame_spec::FrameSpec;
use galois_factor::fuzzy_csv::{emit_fuzzy_csv, parse_fuzzy_csv};
use galois_factor::render;
use galois_factor::ContextDocument;
use galois_factor_core::boolean::{concepts, BooleanContext};
use galois_factor_core::fuzzy::{Frame, FrameKind, FuzzyContext, DEFAULT_BUDGET};
use galois_factor_core::grade::{AdjointTriple, GradeChain};
use proptest::prelude::*;
use std::collections::BTreeSet;

fn names(prefix: char, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

fn boolean_context() -> impl Strategy<Value = BooleanContext> {
    (1..=7usize, 1..=7usize).prop_flat_map(|(na, nb)| {
        prop::collection::vec(prop::collection::vec(any::<bool>(), nb), na).prop_map(move |rows| {
            BooleanContext::new(names('a', na), names('b', nb), &rows).unwrap()
        })
    })
}

fn frame(family: u8, m: u32, m2: u32, m3: u32, kind: u8) -> Frame {
    let c = |m| GradeChain::new(m).unwrap();
    let triple = match family {
        0 => AdjointTriple::godel(c(m)),
        1 => AdjointTriple::lukasiewicz(c(m)),
        _ => AdjointTriple::discretized_product(m, m2, m3).unwrap(),
    };
    let (p1, p2, p3) = triple.domains();
    // every arrangement reads the relation from its own lattice
    match kind {
        0 => Frame::new(FrameKind::ConceptForming, p1, p2, p3, vec![triple]),
        1 => Frame::new(FrameKind::PropertyOriented, p3, p2, p1, vec![triple]),
        _ => Frame::new(FrameKind::ObjectOriented, p1, p3, p2, vec![triple]),
    }
    .unwrap()
}

fn fuzzy_context() -> impl Strategy<Value = FuzzyContext> {
    (
        0..3u8,
        1..=5u32,
        1..=5u32,
        1..=5u32,
        0..3u8,
        1..=4usize,
        1..=4usize,
    )
        .prop_flat_map(|(family, m, m2, m3, kind, na, nb)| {
            let frame = frame(family, m, m2, m3, kind);
            let top = frame.p().m();
            prop::collection::vec(prop::collection::vec(0..=top, nb), na).prop_map(move |rows| {
                FuzzyContext::new(names('a', na), names('b', nb), frame.clone(), &rows).unwrap()
            })
        })
}

/// `(from, to)` index pairs of every `nI -> nJ` line.
fn dot_edges(dot: &str) -> Vec<(usize, usize)> {
    dot.lines()
        .filter_map(|l| {
            let (a, b) = l.trim().trim_end_matches(';').split_once(" -> ")?;
            Some((
                a.strip_prefix('n')?.parse().ok()?,
                b.strip_prefix('n')?.parse().ok()?,
            ))
        })
        .collect()
}

fn dot_nodes(dot: &str) -> usize {
    dot.lines().filter(|l| l.contains("[label=")).count()
}

fn reflexive_transitive_closure(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut r = vec![vec![false; n]; n];
    for (i, row) in r.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(a, b) in edges {
        r[a][b] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if r[i][k] {
                let via = r[k].clone();
                for (cell, &x) in r[i].iter_mut().zip(&via) {
                    *cell |= x;
                }
            }
        }
    }
    r
}

proptest! {
    #[test]
    fn cxt_round_trips(ctx in boolean_context()) {
        prop_assert_eq!(parse_cxt(&emit_cxt(&ctx)).unwrap(), ctx);
    }

    #[test]
    fn boolean_json_round_trips(ctx in boolean_context()) {
        let doc = ContextDocument::Boolean(ctx);
        let text = doc.to_json().unwrap();
        prop_assert_eq!(ContextDocument::from_json(&text).unwrap(), doc.clone());
        // stable bytes
        prop_assert_eq!(ContextDocument::from_json(&text).unwrap().to_json().unwrap(), text);
    }

    #[test]
    fn fuzzy_json_round_trips(ctx in fuzzy_context()) {
        let doc = ContextDocument::Fuzzy(ctx);
        let text = doc.to_json().unwrap();
        prop_assert_eq!(ContextDocument::from_json(&text).unwrap(), doc);
    }

    #[test]
    fn fuzzy_csv_round_trips(ctx in fuzzy_context()) {
        let spec = FrameSpec::of_frame(ctx.frame()).unwrap();
        prop_assert_eq!(parse_fuzzy_csv(&emit_fuzzy_csv(&ctx), &spec).unwrap(), ctx);
    }

    #[test]
    fn dot_covers_generate_the_concept_order(ctx in boolean_context()) {
        let l = concepts(&ctx);
        let report = lattice(&ContextDocument::Boolean(ctx.clone()), false, DEFAULT_BUDGET).unwrap();
        let dot = render::dot(&report).unwrap();
        let n = l.concepts().len();
        prop_assert_eq!(dot_nodes(&dot), n);
        let reach = reflexive_transitive_closure(n, &dot_edges(&dot));
        for (i, ci) in l.concepts().iter().enumerate() {
            for (j, cj) in l.concepts().iter().enumerate() {
                prop_assert_eq!(reach[i][j], ci.extent().is_subset(cj.extent()), "{} {}", i, j);
            }
        }
        prop_assert_eq!(render::dot(&report).unwrap(), dot);
    }
}

#[test]
fn table1_dot_has_eight_nodes_and_ten_edges() {
    let ctx = parse_cxt(include_str!("../data/table1.cxt")).unwrap();
    let report = lattice(&ContextDocument::Boolean(ctx), false, DEFAULT_BUDGET).unwrap();
    let dot = render::dot(&report).unwrap();
    assert_eq!(dot_nodes(&dot), 8);
    assert_eq!(dot_edges(&dot).len(), 10);
    assert_eq!(dot, render::dot(&report).unwrap());
}

#[test]
fn godel_r2_dot_has_seven_nodes() {
    let spec: FrameSpec = "godel:4".parse().unwrap();
    let ctx = parse_fuzzy_csv(include_str!("../data/r2_godel.csv"), &spec).unwrap();
    let report = lattice(&ContextDocument::Fuzzy(ctx), false, DEFAULT_BUDGET).unwrap();
    let dot = render::dot(&report).unwrap();
    assert_eq!(dot_nodes(&dot), 7);
    let reach = reflexive_transitive_closure(7, &dot_edges(&dot));
    assert!(reach[0].iter().all(|&x| x));
}

#[test]
fn single_block_factorization_is_one_cluster() {
    // normalized and connected
    let rows = vec![
        vec![true, true, false, false],
        vec![false, true, true, false],
        vec![false, false, true, true],
    ];
    let ctx = BooleanContext::new(names('a', 3), names('b', 4), &rows).unwrap();
    assert!(ctx.is_normalized());
    let report = galois_factor::cli::factor(&ctx, false).unwrap();
    let dot = render::dot(&report).unwrap();
    assert_eq!(dot.matches("subgraph cluster_").count(), 1);
}

#[test]
fn table1_factorization_dot_clusters_partition_the_incidences() {
    let ctx = parse_cxt(include_str!("../data/table1.cxt")).unwrap();
    let report = galois_factor::cli::factor(&ctx, false).unwrap();
    let dot = render::dot(&report).unwrap();
    assert_eq!(dot.matches("subgraph cluster_").count(), 3);
    let edges: BTreeSet<&str> = dot.lines().filter(|l| l.contains(" -> ")).collect();
    assert_eq!(edges.len(), ctx.incidence_count());
}
