//! Explicit ic-partitions reaching each family's closed-form value.
//!
//! Vertex numbers below are 1-based as in the usual drawings; `set` shifts
//! them to 0-based indices.

use crate::coalition::Partition;
use crate::graph::VertexSet;

use super::{FamilyError, FamilySpec};

fn set<I: IntoIterator<Item = usize>>(one_based: I) -> VertexSet {
    one_based.into_iter().map(|v| v - 1).collect()
}

fn singletons(n: usize) -> Vec<VertexSet> {
    (0..n).map(VertexSet::singleton).collect()
}

/// Splits an independent dominating set into its smallest vertex and the rest.
fn split_first(s: VertexSet) -> [VertexSet; 2] {
    let first = VertexSet::singleton(s.first().expect("split of an empty set"));
    [first, s - first]
}

/// A partition achieving [`FamilySpec::formula_ic`], or `None` for families
/// without an ic-partition.
pub fn witness_partition(spec: &FamilySpec) -> Result<Option<Partition>, FamilyError> {
    spec.validate()?;
    let n = spec.order();
    let classes = match spec {
        FamilySpec::Path(n) => path_classes(*n),
        FamilySpec::Cycle(n) => cycle_classes(*n),
        FamilySpec::Complete(n) => singletons(*n),
        FamilySpec::Empty(1) => singletons(1),
        FamilySpec::Empty(n) => split_first(VertexSet::full(*n)).to_vec(),
        FamilySpec::Star(n) => {
            vec![set([1]), set([2]), set(3..=*n)]
        }
        FamilySpec::DoubleStar(p, q) => {
            // Supports x = 0, y = 1. {x} ∪ leaves(y) and {y} ∪ leaves(x) are
            // independent dominating; each splits into two partners.
            let leaves_x: VertexSet = (2..2 + p).collect();
            let leaves_y: VertexSet = (2 + p..2 + p + q).collect();
            vec![
                VertexSet::singleton(0),
                leaves_y,
                VertexSet::singleton(1),
                leaves_x,
            ]
        }
        FamilySpec::CompleteMultipartite(sizes) => {
            let mut classes = Vec::new();
            let mut start = 0;
            for &s in sizes {
                let part: VertexSet = (start..start + s).collect();
                if s == 1 {
                    classes.push(part);
                } else {
                    classes.extend(split_first(part));
                }
                start += s;
            }
            classes
        }
        FamilySpec::FamilyB(_) => return Ok(None),
        // Singletons: {a} partners every clique vertex, {b} every clique
        // vertex but the one it touches, and {v₁} pairs with {a}.
        FamilySpec::DeltaSharp(n) => singletons(n + 2),
        // Singletons: {vᵢ} pairs with {uᵢ}, and {nᵢ} with {mᵢ}.
        FamilySpec::K0 | FamilySpec::FamilyK(_) => singletons(n),
    };
    Ok(Some(
        Partition::new(n, classes).expect("family witnesses are partitions"),
    ))
}

fn path_classes(n: usize) -> Vec<VertexSet> {
    match n {
        1..=4 => singletons(n),
        5 => vec![set([1, 3]), set([2]), set([4]), set([5])],
        6 => vec![set([1, 6]), set([2]), set([3]), set([4]), set([5])],
        7 => vec![set([1, 6]), set([2, 7]), set([3]), set([4]), set([5])],
        8 => vec![set([1, 3, 6]), set([2, 7]), set([8]), set([4]), set([5])],
        9 => vec![set([1, 3, 5]), set([2, 4, 9]), set([6]), set([7]), set([8])],
        _ => long_path_classes(n),
    }
}

/// V₁ = {v₁, v₆} ∪ odd vertices from v₉, V₂ = {v₂, v₅} ∪ even vertices from
/// v₁₀, and singletons v₃, v₄, v₇, v₈. Serves paths with n ≥ 10 and even
/// cycles with n ≥ 8.
fn long_path_classes(n: usize) -> Vec<VertexSet> {
    let mut v1 = set([1, 6]);
    let mut v2 = set([2, 5]);
    for i in 9..=n {
        if i % 2 == 1 {
            v1.insert(i - 1);
        } else {
            v2.insert(i - 1);
        }
    }
    vec![v1, v2, set([3]), set([4]), set([7]), set([8])]
}

fn cycle_classes(n: usize) -> Vec<VertexSet> {
    match n {
        3..=6 => singletons(n),
        7 => vec![set([1, 3]), set([5]), set([6]), set([4, 7]), set([2])],
        _ if n.is_multiple_of(2) => long_path_classes(n),
        _ if n.is_multiple_of(3) => cycle_mod3_classes(n),
        _ if n % 6 == 5 => cycle_mod6_5_classes(n),
        _ => cycle_mod6_1_classes(n),
    }
}

/// The three residue classes mod 3 are independent dominating; each splits in two.
fn cycle_mod3_classes(n: usize) -> Vec<VertexSet> {
    (1..=3)
        .flat_map(|r| split_first(set((r..=n).step_by(3))))
        .collect()
}

/// n = 6k − 1.
fn cycle_mod6_5_classes(n: usize) -> Vec<VertexSet> {
    let k = (n + 1) / 6;
    let a = set((0..k).map(|i| 3 * i + 1));
    let a1 = set((k..2 * k).map(|i| 3 * i + 1));
    let a2 = set((k..2 * k).map(|i| 3 * i));
    let b = set((k..=2 * k).map(|i| 3 * i - 1));
    let b1 = set((1..k).map(|i| 3 * i - 1));
    let b2 = set((1..k).map(|i| 3 * i));
    vec![a, a1, a2, b, b1, b2]
}

/// n = 6k + 1.
fn cycle_mod6_1_classes(n: usize) -> Vec<VertexSet> {
    let k = (n - 1) / 6;
    let a = set((0..=k).map(|i| 3 * i + 1).chain([3 * k + 3]));
    let a1 = set((k + 2..=2 * k).map(|i| 3 * i));
    let a2 = set((k + 2..=2 * k).map(|i| 3 * i - 1));
    let b = set((k + 1..=2 * k).map(|i| 3 * i + 1).chain([3 * k + 2]));
    let b1 = set((1..=k).map(|i| 3 * i - 1));
    let b2 = set((1..=k).map(|i| 3 * i));
    vec![a, a1, a2, b, b1, b2]
}
