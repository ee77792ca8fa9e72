//! Domination and colouring invariants: α, γᵢ, χ, the idomatic number, and
//! the maximal independent sets they are built on.

use crate::graph::{Graph, VertexSet};

pub fn is_independent(g: &Graph, s: VertexSet) -> bool {
    g.is_independent(s)
}

pub fn is_dominating(g: &Graph, s: VertexSet) -> bool {
    g.dominated_by(s) == g.vertices()
}

pub fn is_independent_dominating(g: &Graph, s: VertexSet) -> bool {
    is_independent(g, s) && is_dominating(g, s)
}

/// α(G) by branch and bound on the candidate mask.
pub fn independence_number(g: &Graph) -> usize {
    fn grow(g: &Graph, cand: VertexSet, size: usize, best: &mut usize) {
        if size + cand.len() <= *best {
            return;
        }
        let Some(v) = pick_branch_vertex(g, cand) else {
            *best = size;
            return;
        };
        // Either some vertex of N[v] ∩ cand is taken or the set is not maximal.
        for u in g.closed_neighbors(v) & cand {
            let rest = cand - g.closed_neighbors(u);
            grow(g, rest, size + 1, best);
        }
    }
    let mut best = 0;
    grow(g, g.vertices(), 0, &mut best);
    best
}

/// Vertex of minimum degree within `cand`, which keeps the branching factor low.
fn pick_branch_vertex(g: &Graph, cand: VertexSet) -> Option<usize> {
    cand.iter().min_by_key(|&v| (g.neighbors(v) & cand).len())
}

/// γᵢ(G): the smallest independent dominating set.
///
/// Independent sets are tried in increasing size. An edgeless graph returns its
/// order, since `V` is its only maximal independent set. Always `Some` for
/// simple graphs; the null graph gives `Some(0)`.
pub fn independent_domination_number(g: &Graph) -> Option<usize> {
    (0..=g.order()).find(|&k| independent_dominating_set_of_size(g, k).is_some())
}

/// Some independent dominating set with exactly `k` vertices.
pub fn independent_dominating_set_of_size(g: &Graph, k: usize) -> Option<VertexSet> {
    fn pick(g: &Graph, cand: VertexSet, chosen: VertexSet, left: usize) -> Option<VertexSet> {
        if left == 0 {
            return is_dominating(g, chosen).then_some(chosen);
        }
        if cand.len() < left {
            return None;
        }
        let mut rest = cand;
        for v in cand {
            rest.remove(v);
            let next = rest - g.neighbors(v);
            if let Some(s) = pick(g, next, chosen | VertexSet::singleton(v), left - 1) {
                return Some(s);
            }
        }
        None
    }
    pick(g, g.vertices(), VertexSet::EMPTY, k)
}

/// All maximal independent sets (equivalently, all independent dominating
/// sets), via Bron–Kerbosch with pivoting on the complement. Each set appears
/// exactly once; order is deterministic.
pub fn maximal_independent_sets(g: &Graph) -> Vec<VertexSet> {
    fn expand(g: &Graph, r: VertexSet, p: VertexSet, x: VertexSet, out: &mut Vec<VertexSet>) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r);
            }
            return;
        }
        // Non-neighbours in the complement are neighbours in g, so the pivot
        // with the most candidates in its closed neighbourhood prunes most.
        let pivot = (p | x)
            .iter()
            .max_by_key(|&u| (p - g.closed_neighbors(u)).len())
            .expect("p is nonempty");
        let mut p = p;
        let mut x = x;
        for v in p & g.closed_neighbors(pivot) {
            let keep = !g.closed_neighbors(v);
            expand(g, r | VertexSet::singleton(v), p & keep, x & keep, out);
            p.remove(v);
            x.insert(v);
        }
    }
    let mut out = Vec::new();
    if g.order() == 0 {
        out.push(VertexSet::EMPTY);
        return out;
    }
    expand(
        g,
        VertexSet::EMPTY,
        g.vertices(),
        VertexSet::EMPTY,
        &mut out,
    );
    out.sort_unstable();
    out
}

/// Same as [`maximal_independent_sets`]: an independent set dominates exactly
/// when it is maximal.
pub fn enumerate_independent_dominating_sets(g: &Graph) -> Vec<VertexSet> {
    maximal_independent_sets(g)
}

/// Largest clique, used as the lower bound for colouring.
pub fn clique_number(g: &Graph) -> usize {
    independence_number(&g.complement())
}

/// χ(G), exact. Tries `k` colours upward from the clique number, with
/// DSATUR-ordered backtracking for each `k`.
pub fn chromatic_number(g: &Graph) -> usize {
    if g.order() == 0 {
        return 0;
    }
    let lower = clique_number(g).max(1);
    (lower..=g.order())
        .find(|&k| colorable(g, k))
        .expect("n colours always suffice")
}

fn colorable(g: &Graph, k: usize) -> bool {
    fn step(g: &Graph, k: usize, classes: &mut Vec<VertexSet>, uncolored: VertexSet) -> bool {
        let Some(v) = uncolored.iter().max_by_key(|&v| {
            let sat = classes
                .iter()
                .filter(|c| !c.is_disjoint(g.neighbors(v)))
                .count();
            (sat, (g.neighbors(v) & uncolored).len())
        }) else {
            return true;
        };
        let rest = uncolored - VertexSet::singleton(v);
        for i in 0..classes.len() {
            if classes[i].is_disjoint(g.neighbors(v)) {
                classes[i].insert(v);
                if step(g, k, classes, rest) {
                    return true;
                }
                classes[i].remove(v);
            }
        }
        // A fresh colour is interchangeable with any other unused one.
        if classes.len() < k {
            classes.push(VertexSet::singleton(v));
            if step(g, k, classes, rest) {
                return true;
            }
            classes.pop();
        }
        false
    }
    step(g, k, &mut Vec::with_capacity(k), g.vertices())
}

/// A partition of `V` into the largest possible number of independent
/// dominating sets, or `None` when no such partition exists.
///
/// Exact covers by maximal independent sets are searched, always covering
/// the smallest uncovered vertex next; the first maximum found is kept.
pub fn idomatic_partition(g: &Graph) -> Option<Vec<VertexSet>> {
    if g.order() == 0 {
        return None;
    }
    let sets = maximal_independent_sets(g);
    let mut containing: Vec<Vec<VertexSet>> = vec![Vec::new(); g.order()];
    for &s in &sets {
        for v in s {
            containing[v].push(s);
        }
    }
    let mut best: Option<Vec<VertexSet>> = None;
    let mut current = Vec::new();
    cover(g.vertices(), &containing, &mut current, &mut best);
    best
}

fn cover(
    uncovered: VertexSet,
    containing: &[Vec<VertexSet>],
    current: &mut Vec<VertexSet>,
    best: &mut Option<Vec<VertexSet>>,
) {
    let Some(v) = uncovered.first() else {
        if best.as_ref().is_none_or(|b| current.len() > b.len()) {
            *best = Some(current.clone());
        }
        return;
    };
    // Every remaining part has at least one vertex.
    if let Some(b) = best {
        if current.len() + uncovered.len() <= b.len() {
            return;
        }
    }
    for &s in &containing[v] {
        if s.is_subset(uncovered) {
            current.push(s);
            cover(uncovered - s, containing, current, best);
            current.pop();
        }
    }
}

/// id(G), absent when `G` has no idomatic partition.
pub fn idomatic_number(g: &Graph) -> Option<usize> {
    idomatic_partition(g).map(|p| p.len())
}

/// Summary of the invariants above for one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub alpha: usize,
    pub gamma_i: Option<usize>,
    pub chi: usize,
    pub idomatic: Option<usize>,
    pub girth: Option<usize>,
}

impl InvariantReport {
    pub fn of(g: &Graph) -> InvariantReport {
        InvariantReport {
            alpha: independence_number(g),
            gamma_i: independent_domination_number(g),
            chi: chromatic_number(g),
            idomatic: idomatic_number(g),
            girth: g.girth(),
        }
    }
}
