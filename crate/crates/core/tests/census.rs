//! Exhaustive cross-module checks over the small-graph census.

use icpart::coalition::ic_number;
use icpart::families::{
    classify, enumerate_graphs, enumerate_trees, labeled_graphs, tree_signature, GraphFilter,
    Membership,
};
use icpart::invariants::{
    idomatic_partition, independence_number, independent_domination_number, is_dominating,
    is_independent, is_independent_dominating, maximal_independent_sets,
};
use icpart::{FamilySpec, Graph, VertexSet};

fn census(max: usize) -> Vec<Graph> {
    (0..=max)
        .flat_map(|n| enumerate_graphs(n, GraphFilter::unlabeled()).unwrap())
        .collect()
}

#[test]
fn complement_involution_all_labeled() {
    for n in 0..=6 {
        for g in labeled_graphs(n).unwrap() {
            assert_eq!(g.complement().complement(), g);
            assert_eq!(g.girth() == Some(3), !g.is_triangle_free());
        }
    }
}

#[test]
fn maximal_independent_equals_independent_dominating() {
    for g in census(6) {
        let subsets: Vec<VertexSet> = (0u64..1 << g.order())
            .map(VertexSet::from_mask)
            .filter(|&s| is_independent_dominating(&g, s))
            .collect();
        let mut mis = maximal_independent_sets(&g);
        mis.sort();
        assert_eq!(mis, subsets);
        if g.order() > 0 {
            let gamma_i = independent_domination_number(&g).unwrap();
            assert!(gamma_i <= independence_number(&g));
        }
    }
}

#[test]
fn idomatic_witnesses_validate() {
    for g in census(6) {
        if let Some(parts) = idomatic_partition(&g) {
            assert_eq!(
                parts.iter().fold(VertexSet::EMPTY, |a, &p| a | p),
                g.vertices()
            );
            for p in parts {
                assert!(is_independent(&g, p) && is_dominating(&g, p));
            }
        }
    }
}

fn specs_up_to_eleven() -> Vec<FamilySpec> {
    let mut specs: Vec<FamilySpec> = (1..=11).map(FamilySpec::Path).collect();
    specs.extend((3..=11).map(FamilySpec::Cycle));
    specs.extend((1..=11).map(FamilySpec::Complete));
    specs.extend((1..=11).map(FamilySpec::Empty));
    specs.extend((3..=11).map(FamilySpec::Star));
    specs.extend((1..=8).flat_map(|p| (p..=9 - p).map(move |q| FamilySpec::DoubleStar(p, q))));
    specs.extend(
        [
            vec![1, 1, 4],
            vec![2, 2, 2, 3],
            vec![1, 3, 3, 4],
            vec![5, 5],
        ]
        .into_iter()
        .map(FamilySpec::CompleteMultipartite),
    );
    specs.extend((4..=9).map(FamilySpec::FamilyB));
    specs.extend((2..=9).map(FamilySpec::DeltaSharp));
    specs.push(FamilySpec::K0);
    specs.push(FamilySpec::FamilyK(1));
    specs
}

#[test]
fn solver_matches_closed_forms_up_to_order_eleven() {
    for spec in specs_up_to_eleven() {
        let g = spec.generate().unwrap();
        let predicted = spec.formula_ic().unwrap();
        let got = ic_number(&g).unwrap();
        assert!(
            predicted.matches(&got),
            "{spec}: predicted {predicted}, got {:?}",
            got.value()
        );
    }
}

#[test]
fn girth_four_constructions() {
    let k0 = FamilySpec::K0.generate().unwrap();
    assert!(k0.is_bipartite() && k0.is_triangle_free());
    assert_eq!(k0.girth(), Some(4));
    for k in 1..=3 {
        let g = FamilySpec::FamilyK(k).generate().unwrap();
        assert_eq!(g.girth(), Some(4), "k = {k}");
    }
}

#[test]
fn family_b_is_classified() {
    for n in 4..=7 {
        let g = FamilySpec::FamilyB(n).generate().unwrap();
        assert!(classify(&g).unwrap().contains(Membership::FamilyB));
    }
}

#[test]
fn trees_are_distinct() {
    for n in 1..=8 {
        let trees = enumerate_trees(n).unwrap();
        for (i, a) in trees.iter().enumerate() {
            assert!(a.is_tree());
            for b in &trees[i + 1..] {
                assert!(!a.is_isomorphic_to(b));
                assert_ne!(tree_signature(a), tree_signature(b));
            }
        }
    }
}
