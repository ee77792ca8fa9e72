use proptest::prelude::*;

use icpart::coalition::{coalition_number, ic_number, verify_c_partition, verify_ic_partition};
use icpart::graph6::{encode_graph6, parse_graph6};
use icpart::invariants::chromatic_number;
use icpart::{Graph, Partition, VertexSet};

fn graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (0..=max_order).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges = (1..n)
                .flat_map(|j| (0..j).map(move |i| (i, j)))
                .zip(bits)
                .filter_map(|(e, b)| b.then_some(e));
            Graph::build(n, edges).unwrap()
        })
    })
}

/// A graph together with a random assignment of its vertices to classes.
fn graph_and_partition(max_order: usize) -> impl Strategy<Value = (Graph, Partition)> {
    graph(max_order)
        .prop_filter("nonempty", |g| g.order() > 0)
        .prop_flat_map(|g| {
            let n = g.order();
            proptest::collection::vec(0..n, n).prop_map(move |labels| {
                let mut classes = vec![VertexSet::EMPTY; n];
                for (v, &c) in labels.iter().enumerate() {
                    classes[c].insert(v);
                }
                classes.retain(|c| !c.is_empty());
                (g.clone(), Partition::new(n, classes).unwrap())
            })
        })
}

proptest! {
    #[test]
    fn complement_is_an_involution(g in graph(12)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn join_edge_count(g in graph(8), h in graph(8)) {
        let j = g.join(&h).unwrap();
        prop_assert_eq!(j.edge_count(), g.edge_count() + h.edge_count() + g.order() * h.order());
        prop_assert_eq!(g.union(&h).unwrap().edge_count(), g.edge_count() + h.edge_count());
    }

    #[test]
    fn girth_three_iff_triangle(g in graph(10)) {
        prop_assert_eq!(g.girth() == Some(3), !g.is_triangle_free());
    }

    #[test]
    fn graph6_round_trip(g in graph(64)) {
        let s = encode_graph6(&g);
        prop_assert!(s.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn solver_witness_is_sound(g in graph(7)) {
        let result = ic_number(&g).unwrap();
        if let Some(w) = result.witness() {
            prop_assert!(verify_ic_partition(&g, w).unwrap().valid);
            prop_assert_eq!(Some(w.len()), result.value());
            prop_assert!(chromatic_number(&g) <= w.len());
            let c = coalition_number(&g).unwrap();
            prop_assert!(c.is_some_and(|c| w.len() <= c));
        }
    }

    #[test]
    fn ic_partitions_are_colourings_and_c_partitions((g, p) in graph_and_partition(8)) {
        if verify_ic_partition(&g, &p).unwrap().valid {
            prop_assert!(verify_c_partition(&g, &p).unwrap());
            prop_assert!(p.classes().iter().all(|&c| g.is_independent(c)));
            let best = ic_number(&g).unwrap().value();
            prop_assert!(best.is_some_and(|k| p.len() <= k));
        }
    }
}
