//! Simple undirected graphs on at most 64 vertices.
//!
//! Every vertex set is a single `u64` mask, so neighbourhood unions, independence
//! tests and domination tests are a handful of word operations.

use std::collections::VecDeque;
use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Not, Sub};

use thiserror::Error;

/// Largest supported order.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("order {0} exceeds the capacity of {MAX_ORDER} vertices")]
    OrderTooLarge(usize),
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex sets overlap on {0}")]
    OverlappingSets(VertexSet),
    #[error("vertex set {set} is not contained in 0..{n}")]
    SetOutOfRange { set: VertexSet, n: usize },
}

/// A set of vertices stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_mask(mask: u64) -> Self {
        VertexSet(mask)
    }

    /// The set `{0, .., n-1}`.
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub const fn mask(self) -> u64 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & (1u64 << v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest element, if any.
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Renders as `{0,2,5}`.
impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitXor for VertexSet {
    type Output = VertexSet;
    fn bitxor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 ^ rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Vertices;
    fn into_iter(self) -> Vertices {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

/// Result of inspecting the edges between two disjoint vertex sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeSetKind {
    Empty,
    Full,
    Mixed,
}

/// Immutable simple graph. `adj[v]` is the open neighbourhood of `v`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        Ok(Graph::empty(n)?.complement())
    }

    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn build<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Builds a graph from neighbourhood masks, enforcing symmetry and irreflexivity.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Graph, GraphError> {
        let n = adj.len();
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        let all = VertexSet::full(n);
        for (v, &nb) in adj.iter().enumerate() {
            if nb.contains(v) {
                return Err(GraphError::SelfLoop(v));
            }
            if !nb.is_subset(all) {
                return Err(GraphError::SetOutOfRange { set: nb, n });
            }
            for u in nb {
                if !adj[u].contains(v) {
                    return Err(GraphError::EndpointOutOfRange { u, v, n });
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v] | VertexSet::singleton(v)
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (self.adj[u] - VertexSet::full(u + 1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// Union of the open neighbourhoods of `s`.
    pub fn open_neighborhood(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.adj[v])
    }

    /// Union of the closed neighbourhoods of `s`: everything `s` dominates.
    pub fn dominated_by(&self, s: VertexSet) -> VertexSet {
        self.open_neighborhood(s) | s
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|s| s.len()).collect()
    }

    /// δ(G); zero for the null graph.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).min().unwrap_or(0)
    }

    /// Δ(G); zero for the null graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).max().unwrap_or(0)
    }

    /// Vertices adjacent to every other vertex.
    pub fn full_vertices(&self) -> VertexSet {
        (0..self.n)
            .filter(|&v| self.degree(v) + 1 == self.n)
            .collect()
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.adj[v].is_empty()).collect()
    }

    /// Vertices reachable from `v`.
    pub fn component_of(&self, v: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(v);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.open_neighborhood(frontier) - seen;
            seen = seen | next;
            frontier = next;
        }
        seen
    }

    /// Connected components, each listed by its smallest vertex first.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut rest = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.component_of(v);
            rest = rest - c;
            out.push(c);
        }
        out
    }

    /// The null graph and `K₁` count as connected.
    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_of(0) == self.vertices()
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.n)
            .map(|v| all - self.adj[v] - VertexSet::singleton(v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Disjoint union; `h`'s vertices are shifted up by `self.order()`.
    pub fn union(&self, h: &Graph) -> Result<Graph, GraphError> {
        self.combine(h, false)
    }

    /// Join `G + H`: the disjoint union plus every edge between the two sides.
    pub fn join(&self, h: &Graph) -> Result<Graph, GraphError> {
        self.combine(h, true)
    }

    fn combine(&self, h: &Graph, cross: bool) -> Result<Graph, GraphError> {
        let n = self.n + h.n;
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        let shift = self.n;
        let left = VertexSet::full(self.n);
        let right = VertexSet::full(n) - left;
        let mut adj = Vec::with_capacity(n);
        for &nb in &self.adj {
            adj.push(if cross { nb | right } else { nb });
        }
        for &nb in &h.adj {
            let moved = VertexSet::from_mask(nb.mask() << shift);
            adj.push(if cross { moved | left } else { moved });
        }
        Ok(Graph { n, adj })
    }

    /// `G[S]`, with the members of `s` relabelled `0..|S|` in ascending order.
    pub fn induced(&self, s: VertexSet) -> Result<Graph, GraphError> {
        if !s.is_subset(self.vertices()) {
            return Err(GraphError::SetOutOfRange { set: s, n: self.n });
        }
        let members = s.to_vec();
        let adj = members
            .iter()
            .map(|&v| {
                members
                    .iter()
                    .enumerate()
                    .filter(|&(_, &u)| self.adj[v].contains(u))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        Ok(Graph {
            n: members.len(),
            adj,
        })
    }

    /// `G - S`.
    pub fn remove(&self, s: VertexSet) -> Graph {
        self.induced(self.vertices() - s)
            .expect("complement of a set is in range")
    }

    pub fn edge_set_between(&self, x: VertexSet, y: VertexSet) -> Result<EdgeSetKind, GraphError> {
        let all = self.vertices();
        for s in [x, y] {
            if !s.is_subset(all) {
                return Err(GraphError::SetOutOfRange { set: s, n: self.n });
            }
        }
        if !x.is_disjoint(y) {
            return Err(GraphError::OverlappingSets(x & y));
        }
        let mut any = false;
        let mut all_full = true;
        for v in x {
            let hit = self.adj[v] & y;
            any |= !hit.is_empty();
            all_full &= hit == y;
        }
        Ok(if !any {
            EdgeSetKind::Empty
        } else if all_full {
            EdgeSetKind::Full
        } else {
            EdgeSetKind::Mixed
        })
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    if 2 * dist[u] + 1 >= b {
                        break;
                    }
                }
                for w in self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges()
            .all(|(u, v)| (self.adj[u] & self.adj[v]).is_empty())
    }

    /// Every connected component is a tree.
    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.is_connected() && self.edge_count() + 1 == self.n
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter()
            .all(|v| (s - VertexSet::singleton(v)).is_subset(self.adj[v]))
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    /// A proper 2-colouring as `(side, other side)`, where each component's
    /// smallest vertex goes to the first side.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut left = VertexSet::EMPTY;
        let mut right = VertexSet::EMPTY;
        for comp in self.components() {
            let root = comp.first().expect("components are nonempty");
            let mut side = [VertexSet::singleton(root), VertexSet::EMPTY];
            let mut frontier = side[0];
            let mut layer = 0;
            while !frontier.is_empty() {
                let next = self.open_neighborhood(frontier) - side[0] - side[1];
                layer ^= 1;
                side[layer] = side[layer] | next;
                frontier = next;
            }
            if !self.is_independent(side[0]) || !self.is_independent(side[1]) {
                return None;
            }
            left = left | side[0];
            right = right | side[1];
        }
        Some((left, right))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal order");
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]].insert(perm[v]);
            adj[perm[v]].insert(perm[u]);
        }
        Graph { n: self.n, adj }
    }

    /// Isomorphism test by backtracking.
    ///
    /// Vertices are matched only against vertices with the same degree and the
    /// same multiset of neighbour degrees, and every partial map must preserve
    /// adjacency with the vertices mapped so far. Intended for small orders.
    pub fn is_isomorphic_to(&self, h: &Graph) -> bool {
        if self.n != h.n || self.edge_count() != h.edge_count() {
            return false;
        }
        let sig_g = vertex_signatures(self);
        let sig_h = vertex_signatures(h);
        let mut sorted_g = sig_g.clone();
        let mut sorted_h = sig_h.clone();
        sorted_g.sort_unstable();
        sorted_h.sort_unstable();
        if sorted_g != sorted_h {
            return false;
        }
        // Map rarest signatures first, then follow adjacency so that partial
        // maps are constrained early.
        let mut order = Vec::with_capacity(self.n);
        let mut placed = VertexSet::EMPTY;
        let rarity = |v: usize| sorted_g.iter().filter(|s| **s == sig_g[v]).count();
        while order.len() < self.n {
            let touching = self.open_neighborhood(placed) - placed;
            let pool = if touching.is_empty() {
                self.vertices() - placed
            } else {
                touching
            };
            let v = pool
                .iter()
                .min_by_key(|&v| {
                    (
                        rarity(v),
                        usize::MAX - (self.adj[v] & placed).len(),
                        usize::MAX - self.degree(v),
                    )
                })
                .expect("pool is nonempty");
            order.push(v);
            placed.insert(v);
        }
        let mut map = vec![usize::MAX; self.n];
        iso_extend(
            self,
            h,
            &sig_g,
            &sig_h,
            &order,
            0,
            &mut map,
            VertexSet::EMPTY,
        )
    }
}

/// Degree plus sorted neighbour degrees.
fn vertex_signatures(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    (0..g.order())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|u| g.degree(u)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn iso_extend(
    g: &Graph,
    h: &Graph,
    sig_g: &[(usize, Vec<usize>)],
    sig_h: &[(usize, Vec<usize>)],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: VertexSet,
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for w in h.vertices() - used {
        if sig_g[v] != sig_h[w] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        if iso_extend(
            g,
            h,
            sig_g,
            sig_h,
            order,
            depth + 1,
            map,
            used | VertexSet::singleton(w),
        ) {
            return true;
        }
    }
    map[v] = usize::MAX;
    false
}

/// Free-function form of [`Graph::is_isomorphic_to`].
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.is_isomorphic_to(h)
}

/// Cheap isomorphism invariant used to bucket graphs before pairwise tests.
pub fn invariant_key(g: &Graph) -> Vec<u64> {
    let mut sigs: Vec<(usize, usize, Vec<usize>)> = (0..g.order())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|u| g.degree(u)).collect();
            nd.sort_unstable();
            let triangles = g
                .neighbors(v)
                .iter()
                .map(|u| (g.neighbors(u) & g.neighbors(v)).len())
                .sum::<usize>()
                / 2;
            (g.degree(v), triangles, nd)
        })
        .collect();
    sigs.sort_unstable();
    let mut key = vec![g.order() as u64, g.edge_count() as u64];
    for (d, t, nd) in sigs {
        key.push(d as u64);
        key.push(t as u64);
        key.extend(nd.into_iter().map(|x| x as u64));
    }
    key
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::build(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::build(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn figure_one() -> Graph {
        Graph::build(
            6,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (0, 2),
                (1, 3),
                (2, 4),
                (3, 4),
                (3, 5),
            ],
        )
        .unwrap()
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(
            Graph::build(3, [(0, 3)]),
            Err(GraphError::EndpointOutOfRange { u: 0, v: 3, n: 3 })
        );
        assert_eq!(Graph::build(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(Graph::empty(65), Err(GraphError::OrderTooLarge(65)));
        assert!(Graph::empty(64).is_ok());
    }

    #[test]
    fn build_collapses_duplicates() {
        let g = Graph::build(3, [(0, 1), (1, 0), (0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g, Graph::complete(3).unwrap());
        assert_eq!(g.edge_count(), 3);
        assert_eq!(Graph::build(2, []).unwrap().edge_count(), 0);
    }

    #[test]
    fn figure_one_degrees() {
        let g = figure_one();
        assert_eq!(g.degree(3), 5);
        assert_eq!(g.degree(5), 1);
        assert_eq!(g.edge_count(), 9);
        assert_eq!(g.full_vertices(), VertexSet::singleton(3));
        let k4 = g.induced(VertexSet::full(4)).unwrap();
        assert_eq!(k4, Graph::complete(4).unwrap());
    }

    #[test]
    fn complement_and_join() {
        assert_eq!(
            Graph::complete(4).unwrap().complement(),
            Graph::empty(4).unwrap()
        );
        assert!(cycle(5).complement().is_isomorphic_to(&cycle(5)));
        let star = Graph::complete(1)
            .unwrap()
            .join(&Graph::empty(3).unwrap())
            .unwrap();
        assert_eq!(star.degrees(), vec![3, 1, 1, 1]);
        let two_k2 = Graph::complete(2)
            .unwrap()
            .union(&Graph::complete(2).unwrap())
            .unwrap();
        assert_eq!(two_k2.max_degree(), 1);
        assert_eq!(two_k2.components().len(), 2);
        assert!(matches!(
            Graph::empty(40).unwrap().join(&Graph::empty(25).unwrap()),
            Err(GraphError::OrderTooLarge(65))
        ));
    }

    #[test]
    fn girth_values() {
        assert_eq!(cycle(6).girth(), Some(6));
        assert_eq!(path(5).girth(), None);
        assert_eq!(Graph::complete(4).unwrap().girth(), Some(3));
        assert!(!Graph::complete(3).unwrap().is_triangle_free());
        assert!(cycle(4).is_triangle_free());
        // K4 minus an edge plus a pendant 5-cycle elsewhere keeps girth 3.
        let g = Graph::build(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        assert_eq!(g.girth(), Some(3));
    }

    #[test]
    fn structure_queries() {
        let star = Graph::build(5, (1..5).map(|i| (0, i))).unwrap();
        assert_eq!(star.full_vertices(), VertexSet::singleton(0));
        let g = Graph::empty(3)
            .unwrap()
            .union(&Graph::complete(2).unwrap())
            .unwrap();
        assert_eq!(g.isolated_vertices(), VertexSet::full(3));
        assert!(!g.is_connected());
        let p = path(4);
        let a: VertexSet = [0].into_iter().collect();
        let b: VertexSet = [1, 2].into_iter().collect();
        assert_eq!(p.edge_set_between(a, b), Ok(EdgeSetKind::Mixed));
        assert_eq!(
            p.edge_set_between(a, [2, 3].into_iter().collect()),
            Ok(EdgeSetKind::Empty)
        );
        assert_eq!(
            star.edge_set_between(a, VertexSet::full(5) - a),
            Ok(EdgeSetKind::Full)
        );
        assert!(matches!(
            p.edge_set_between(b, b),
            Err(GraphError::OverlappingSets(_))
        ));
    }

    #[test]
    fn isomorphism_basics() {
        let star = Graph::build(4, (1..4).map(|i| (0, i))).unwrap();
        assert!(!path(4).is_isomorphic_to(&star));
        assert!(!path(4).is_isomorphic_to(&path(5)));
        let relabelled = cycle(6).permuted(&[3, 5, 1, 0, 2, 4]);
        assert!(relabelled.is_isomorphic_to(&cycle(6)));
        let two_triangles = Graph::complete(3)
            .unwrap()
            .union(&Graph::complete(3).unwrap())
            .unwrap();
        assert!(!two_triangles.is_isomorphic_to(&cycle(6)));
    }

    #[test]
    fn bipartition_found() {
        let (l, r) = cycle(6).bipartition().unwrap();
        assert_eq!(l.len(), 3);
        assert_eq!(r.len(), 3);
        assert!(cycle(5).bipartition().is_none());
        assert!(Graph::empty(3).unwrap().is_bipartite());
    }
}
