//! Membership tests for the structurally defined families.

use std::collections::BTreeSet;
use std::fmt;

use crate::graph::{Graph, VertexSet};
use crate::invariants::{chromatic_number, idomatic_number, independence_number};

use super::{FamilyError, FamilySpec};

/// Largest order [`classify`] accepts.
pub const CLASSIFY_ORDER_LIMIT: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Membership {
    FamilyB,
    FamilyF,
    B1,
    B2,
    B3,
    K0,
    FamilyK,
    TwoMaximalCliques,
    AlphaTwo,
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Membership::FamilyB => "familyB",
            Membership::FamilyF => "familyF",
            Membership::B1 => "B1",
            Membership::B2 => "B2",
            Membership::B3 => "B3",
            Membership::K0 => "K0",
            Membership::FamilyK => "familyK",
            Membership::TwoMaximalCliques => "twoMaximalCliques",
            Membership::AlphaTwo => "alphaTwo",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Classification {
    pub memberships: BTreeSet<Membership>,
}

impl Classification {
    pub fn contains(&self, m: Membership) -> bool {
        self.memberships.contains(&m)
    }
}

type Test = (Membership, fn(&Graph) -> bool);

pub fn classify(g: &Graph) -> Result<Classification, FamilyError> {
    if g.order() > CLASSIFY_ORDER_LIMIT {
        return Err(FamilyError::OrderBeyondBound(g.order()));
    }
    let tests: [Test; 9] = [
        (Membership::FamilyB, is_family_b),
        (Membership::FamilyF, is_family_f),
        (Membership::B1, is_b1),
        (Membership::B2, is_b2),
        (Membership::B3, is_b3),
        (Membership::K0, is_k0),
        (Membership::FamilyK, is_family_k),
        (
            Membership::TwoMaximalCliques,
            has_two_maximal_clique_partition,
        ),
        (Membership::AlphaTwo, |g| independence_number(g) == 2),
    ];
    Ok(Classification {
        memberships: tests
            .iter()
            .filter(|(_, test)| test(g))
            .map(|(m, _)| *m)
            .collect(),
    })
}

fn isomorphic_to_member(g: &Graph, spec: FamilySpec) -> bool {
    spec.generate()
        .map(|h| g.is_isomorphic_to(&h))
        .unwrap_or(false)
}

/// `K_n` (n ≥ 4) with `v_{n+1} ~ v_n, v_{n-1}` and `v_{n+2} ~ v_n`.
pub fn is_family_b(g: &Graph) -> bool {
    g.order() >= 6 && isomorphic_to_member(g, FamilySpec::FamilyB(g.order() - 2))
}

pub fn is_k0(g: &Graph) -> bool {
    g.order() == 8 && isomorphic_to_member(g, FamilySpec::K0)
}

/// The four defining conditions fix every edge between and inside the parts
/// `H₁..H₄`, so membership is isomorphism to the generated member with the
/// same `k`.
pub fn is_family_k(g: &Graph) -> bool {
    let n = g.order();
    n >= 10 && n.is_multiple_of(2) && isomorphic_to_member(g, FamilySpec::FamilyK((n - 8) / 2))
}

/// δ = 1, and for some leaf `x` with support `y`, `V ∖ {x, y}` is a clique.
pub fn is_family_f(g: &Graph) -> bool {
    if g.order() < 3 || g.min_degree() != 1 {
        return false;
    }
    (0..g.order()).filter(|&x| g.degree(x) == 1).any(|x| {
        let y = g.neighbors(x).first().expect("leaf has a neighbour");
        let rest = g.vertices() - VertexSet::singleton(x) - VertexSet::singleton(y);
        g.is_clique(rest)
    })
}

/// Bipartite, δ ≥ 1, some bipartition has both sides of size ≥ 2, and id = 2.
pub fn is_b1(g: &Graph) -> bool {
    if g.order() < 4 || g.min_degree() < 1 || !g.is_bipartite() {
        return false;
    }
    balanced_bipartition_exists(g) && idomatic_number(g) == Some(2)
}

/// Some choice of side per component leaves at least two vertices per side.
fn balanced_bipartition_exists(g: &Graph) -> bool {
    let Some((left, _)) = g.bipartition() else {
        return false;
    };
    let sides: Vec<(usize, usize)> = g
        .components()
        .into_iter()
        .map(|c| ((c & left).len(), (c - left).len()))
        .collect();
    (0u64..1 << sides.len()).any(|flip| {
        let (a, b) = sides
            .iter()
            .enumerate()
            .fold((0, 0), |(a, b), (i, &(x, y))| {
                if flip >> i & 1 == 1 {
                    (a + y, b + x)
                } else {
                    (a + x, b + y)
                }
            });
        a >= 2 && b >= 2
    })
}

/// Splits `g` into its non-isolated part `H`, if `g` has an isolated vertex
/// and `H` is nonempty.
fn split_isolated(g: &Graph) -> Option<Graph> {
    let isolated = g.isolated_vertices();
    if isolated.is_empty() || isolated == g.vertices() {
        return None;
    }
    Some(g.remove(isolated))
}

/// `H ∪ K̄ₙ` (n ≥ 1) with `H` bipartite, δ(H) ≥ 1 and id(H) = 2.
pub fn is_b2(g: &Graph) -> bool {
    split_isolated(g).is_some_and(|h| h.is_bipartite() && idomatic_number(&h) == Some(2))
}

/// `H ∪ K̄ₙ` (n ≥ 1) with `H` 3-partite, δ(H) ≥ 1 and id(H) = 3.
pub fn is_b3(g: &Graph) -> bool {
    split_isolated(g).is_some_and(|h| chromatic_number(&h) <= 3 && idomatic_number(&h) == Some(3))
}

/// `V` splits into two cliques, each maximal.
pub fn has_two_maximal_clique_partition(g: &Graph) -> bool {
    let n = g.order();
    if n < 2 {
        return false;
    }
    let all = g.vertices();
    let is_maximal_clique =
        |s: VertexSet| g.is_clique(s) && (all - s).iter().all(|v| !s.is_subset(g.neighbors(v)));
    // Vertex 0 always lies in the first part.
    (0u64..1 << (n - 1)).any(|bits| {
        let first = VertexSet::from_mask((bits << 1) | 1);
        let second = all - first;
        !second.is_empty() && is_maximal_clique(first) && is_maximal_clique(second)
    })
}
