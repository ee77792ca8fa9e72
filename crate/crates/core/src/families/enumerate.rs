//! Exhaustive small-graph and tree enumeration.

use std::collections::{HashMap, HashSet};

use crate::graph::{invariant_key, Graph, VertexSet};

use super::FamilyError;

/// Largest order for exhaustive graph enumeration. Beyond this, feed graph6
/// streams from an external generator.
pub const MAX_ENUMERATION_ORDER: usize = 7;
pub const MAX_TREE_ORDER: usize = 10;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GraphFilter {
    pub connected: bool,
    pub triangle_free: bool,
    pub up_to_isomorphism: bool,
}

impl GraphFilter {
    pub fn all() -> GraphFilter {
        GraphFilter::default()
    }

    pub fn unlabeled() -> GraphFilter {
        GraphFilter {
            up_to_isomorphism: true,
            ..GraphFilter::default()
        }
    }

    pub fn connected(mut self) -> GraphFilter {
        self.connected = true;
        self
    }

    pub fn triangle_free(mut self) -> GraphFilter {
        self.triangle_free = true;
        self
    }

    fn accepts(&self, g: &Graph) -> bool {
        (!self.connected || g.is_connected()) && (!self.triangle_free || g.is_triangle_free())
    }
}

fn check_order(n: usize) -> Result<(), FamilyError> {
    if n > MAX_ENUMERATION_ORDER {
        Err(FamilyError::OrderBeyondBound(n))
    } else {
        Ok(())
    }
}

/// Every labeled graph on `n` vertices, one per edge mask. Bit `k` of the
/// mask is the `k`-th pair in graph6 order `(0,1), (0,2), (1,2), (0,3), ..`.
pub fn labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>, FamilyError> {
    check_order(n)?;
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let count = 1u64 << pairs.len();
    Ok((0..count).map(move |mask| {
        let mut adj = vec![VertexSet::EMPTY; n];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
        Graph::from_adjacency(adj).expect("mask graphs are simple")
    }))
}

/// Graphs of order `n` passing `filter`, in a deterministic order.
pub fn enumerate_graphs(n: usize, filter: GraphFilter) -> Result<Vec<Graph>, FamilyError> {
    check_order(n)?;
    if !filter.up_to_isomorphism {
        return Ok(labeled_graphs(n)?.filter(|g| filter.accepts(g)).collect());
    }
    Ok(unlabeled_graphs(n)
        .into_iter()
        .filter(|g| filter.accepts(g))
        .collect())
}

/// One representative per isomorphism class. Every graph of order `n` arises
/// from one of order `n - 1` by adding a vertex, so each class representative
/// is extended by every neighbour set and the results are deduplicated.
fn unlabeled_graphs(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(0).expect("null graph")];
    for m in 1..=n {
        let mut reps = Dedup::default();
        for g in &level {
            for nbrs in 0u64..1 << (m - 1) {
                let mut adj = g.adjacency().to_vec();
                let new = VertexSet::from_mask(nbrs);
                for v in new.iter() {
                    adj[v].insert(m - 1);
                }
                adj.push(new);
                reps.offer(Graph::from_adjacency(adj).expect("extension is simple"));
            }
        }
        level = reps.into_vec();
    }
    level
}

#[derive(Default)]
struct Dedup {
    buckets: HashMap<Vec<u64>, Vec<usize>>,
    graphs: Vec<Graph>,
}

impl Dedup {
    fn offer(&mut self, g: Graph) {
        let bucket = self.buckets.entry(invariant_key(&g)).or_default();
        if bucket.iter().any(|&i| self.graphs[i].is_isomorphic_to(&g)) {
            return;
        }
        bucket.push(self.graphs.len());
        self.graphs.push(g);
    }

    fn into_vec(self) -> Vec<Graph> {
        self.graphs
    }
}

/// Unlabeled trees of order `n`, one per isomorphism class.
///
/// Every tree can be labelled so that degrees do not increase with the label,
/// and a vertex's occurrences in the Prüfer sequence are its degree minus
/// one. Only sequences whose occurrence counts are non-increasing by label are
/// decoded, which still reaches every class; duplicates are removed by a
/// canonical signature.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>, FamilyError> {
    if !(1..=MAX_TREE_ORDER).contains(&n) {
        return Err(FamilyError::BadParameter {
            family: "tree",
            reason: format!("order must lie in 1..={MAX_TREE_ORDER}"),
        });
    }
    if n <= 2 {
        return Ok(vec![Graph::complete(n)?]);
    }
    let mut seen = HashSet::new();
    let mut trees = Vec::new();
    let mut seq = vec![0usize; n - 2];
    loop {
        if occurrences_non_increasing(&seq, n) {
            let t = prufer_decode(&seq, n);
            if seen.insert(tree_signature(&t)) {
                trees.push(t);
            }
        }
        // Odometer step over {0..n-1}^(n-2).
        let mut i = seq.len();
        loop {
            if i == 0 {
                return Ok(trees);
            }
            i -= 1;
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
        }
    }
}

fn occurrences_non_increasing(seq: &[usize], n: usize) -> bool {
    let mut counts = vec![0usize; n];
    for &v in seq {
        counts[v] += 1;
    }
    counts.windows(2).all(|w| w[0] >= w[1])
}

fn prufer_decode(seq: &[usize], n: usize) -> Graph {
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).expect("a leaf remains");
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::build(n, edges).expect("Prüfer edges are simple")
}

/// Canonical string of a tree: the AHU encoding rooted at its centre, taking
/// the smaller encoding when there are two centres. Equal strings mean
/// isomorphic trees.
pub fn tree_signature(t: &Graph) -> String {
    let n = t.order();
    if n == 0 {
        return String::new();
    }
    let mut degree = t.degrees();
    let mut remaining = n;
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut removed = VertexSet::EMPTY;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            removed.insert(leaf);
            for u in t.neighbors(leaf).iter() {
                if !removed.contains(u) {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    layer
        .iter()
        .map(|&c| ahu(t, c, usize::MAX))
        .min()
        .expect("a tree has a centre")
}

fn ahu(t: &Graph, v: usize, parent: usize) -> String {
    let mut children: Vec<String> = t
        .neighbors(v)
        .iter()
        .filter(|&u| u != parent)
        .map(|u| ahu(t, u, v))
        .collect();
    children.sort();
    let mut out = String::from("(");
    children.iter().for_each(|c| out.push_str(c));
    out.push(')');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    /// Number of isomorphism classes among `graphs`, keyed on degree sequences first.
    fn class_count(graphs: &[Graph]) -> usize {
        let mut by_key: BTreeMap<Vec<u64>, Vec<&Graph>> = BTreeMap::new();
        for g in graphs {
            by_key.entry(invariant_key(g)).or_default().push(g);
        }
        by_key
            .values()
            .map(|group| {
                let mut reps: Vec<&Graph> = Vec::new();
                for g in group {
                    if !reps.iter().any(|r| r.is_isomorphic_to(g)) {
                        reps.push(g);
                    }
                }
                reps.len()
            })
            .sum()
    }

    #[test]
    fn small_censuses() {
        let unlabeled = GraphFilter::unlabeled();
        assert_eq!(enumerate_graphs(3, unlabeled).unwrap().len(), 4);
        assert_eq!(enumerate_graphs(4, unlabeled).unwrap().len(), 11);
        assert_eq!(enumerate_graphs(4, unlabeled.connected()).unwrap().len(), 6);
        let two = enumerate_graphs(2, GraphFilter::all()).unwrap();
        assert_eq!(
            two,
            vec![Graph::empty(2).unwrap(), Graph::complete(2).unwrap()]
        );
        assert_eq!(enumerate_graphs(0, unlabeled).unwrap().len(), 1);
        assert!(enumerate_graphs(8, unlabeled).is_err());
    }

    #[test]
    fn known_graph_counts() {
        let counts: Vec<usize> = (1..=6)
            .map(|n| enumerate_graphs(n, GraphFilter::unlabeled()).unwrap().len())
            .collect();
        assert_eq!(counts, [1, 2, 4, 11, 34, 156]);
        let connected: Vec<usize> = (1..=6)
            .map(|n| {
                enumerate_graphs(n, GraphFilter::unlabeled().connected())
                    .unwrap()
                    .len()
            })
            .collect();
        assert_eq!(connected, [1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn labeled_matches_unlabeled_classes() {
        let labeled: Vec<Graph> = labeled_graphs(4).unwrap().collect();
        assert_eq!(labeled.len(), 64);
        assert_eq!(class_count(&labeled), 11);
        let tf = enumerate_graphs(4, GraphFilter::all().triangle_free()).unwrap();
        assert!(tf.iter().all(Graph::is_triangle_free));
    }

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=MAX_TREE_ORDER)
            .map(|n| enumerate_trees(n).unwrap().len())
            .collect();
        assert_eq!(counts, [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
        for t in enumerate_trees(7).unwrap() {
            assert!(t.is_tree());
        }
        assert_eq!(class_count(&enumerate_trees(8).unwrap()), 23);
        assert!(enumerate_trees(0).is_err());
        assert!(enumerate_trees(11).is_err());
    }

    #[test]
    fn signature_ignores_labels() {
        let p = Graph::build(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let q = Graph::build(5, [(3, 0), (0, 4), (4, 1), (1, 2)]).unwrap();
        let star = Graph::build(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(tree_signature(&p), tree_signature(&q));
        assert_ne!(tree_signature(&p), tree_signature(&star));
    }
}
