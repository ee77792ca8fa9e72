//! Named graph families: generators, closed-form IC values, witness
//! partitions, structural classifiers, and small-graph enumerators.
//!
//! Labelling conventions (vertex `vᵢ` of a drawing is index `i - 1`):
//!
//! * `Path(n)`: `0 - 1 - .. - n-1`. `Cycle(n)` adds `n-1 - 0`.
//! * `Star(n)`: centre `0`, leaves `1..n`.
//! * `DoubleStar(p, q)`: supports `0` and `1`; leaves of `0` are `2..2+p`,
//!   leaves of `1` follow.
//! * `CompleteMultipartite(sizes)`: parts occupy consecutive index ranges.
//! * `FamilyB(n)`: clique `0..n`; vertex `n` is adjacent to `n-1` and `n-2`,
//!   vertex `n+1` to `n-1`.
//! * `DeltaSharp(n)`: clique `0..n`, then `a = n` and `b = n+1` with `a - b - 0`.
//! * `K0`: `v₁..v₄ = 0..4`, `u₁..u₄ = 4..8`; `vᵢ` sees every `uⱼ` with `j ≠ i`.
//! * `FamilyK(k)`: `K0` on `0..8`, then `n₁..n_k = 8..8+k` and
//!   `m₁..m_k = 8+k..8+2k`. Every `vᵢ` sees every `nⱼ`, every `uᵢ` sees every
//!   `mⱼ`, and `nᵢ` sees every `mⱼ` with `j ≠ i`.

mod classify;
mod enumerate;
mod witness;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::coalition::IcResult;
use crate::graph::{Graph, GraphError};

pub use classify::{
    classify, has_two_maximal_clique_partition, is_b1, is_b2, is_b3, is_family_b, is_family_f,
    is_family_k, is_k0, Classification, Membership, CLASSIFY_ORDER_LIMIT,
};
pub use enumerate::{
    enumerate_graphs, enumerate_trees, labeled_graphs, tree_signature, GraphFilter,
    MAX_ENUMERATION_ORDER, MAX_TREE_ORDER,
};
pub use witness::witness_partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family}: {reason}")]
    BadParameter {
        family: &'static str,
        reason: String,
    },
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("cannot parse family spec {0:?}")]
    Syntax(String),
    #[error("order {0} is beyond the enumeration bound")]
    OrderBeyondBound(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A parameterised member of one of the named families.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// The edgeless graph K̄ₙ.
    Empty(usize),
    /// `K_{1,n-1}`, of order `n`.
    Star(usize),
    /// `S_{p,q}`: two adjacent supports with `p` and `q` leaves.
    DoubleStar(usize, usize),
    CompleteMultipartite(Vec<usize>),
    /// `K_n` (`n ≥ 4`) plus two vertices; admits no ic-partition.
    FamilyB(usize),
    /// `K_n` plus a pendant path `a - b` attached at `b`; its singleton
    /// partition gives `{a}` exactly Δ partners.
    DeltaSharp(usize),
    K0,
    FamilyK(usize),
}

/// Closed-form IC value of a family member.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IcPrediction {
    Value(usize),
    NoPartition,
}

impl IcPrediction {
    pub fn value(self) -> Option<usize> {
        match self {
            IcPrediction::Value(k) => Some(k),
            IcPrediction::NoPartition => None,
        }
    }

    pub fn matches(self, result: &IcResult) -> bool {
        self.value() == result.value()
    }
}

impl fmt::Display for IcPrediction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IcPrediction::Value(k) => write!(f, "{k}"),
            IcPrediction::NoPartition => f.write_str("none"),
        }
    }
}

fn bad(family: &'static str, reason: impl Into<String>) -> FamilyError {
    FamilyError::BadParameter {
        family,
        reason: reason.into(),
    }
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Path(_) => "path",
            FamilySpec::Cycle(_) => "cycle",
            FamilySpec::Complete(_) => "complete",
            FamilySpec::Empty(_) => "empty",
            FamilySpec::Star(_) => "star",
            FamilySpec::DoubleStar(..) => "doublestar",
            FamilySpec::CompleteMultipartite(_) => "multipartite",
            FamilySpec::FamilyB(_) => "familyB",
            FamilySpec::DeltaSharp(_) => "deltasharp",
            FamilySpec::K0 => "K0",
            FamilySpec::FamilyK(_) => "familyK",
        }
    }

    /// Order of the generated graph.
    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Complete(n)
            | FamilySpec::Empty(n)
            | FamilySpec::Star(n) => *n,
            FamilySpec::DoubleStar(p, q) => p + q + 2,
            FamilySpec::CompleteMultipartite(sizes) => sizes.iter().sum(),
            FamilySpec::FamilyB(n) | FamilySpec::DeltaSharp(n) => n + 2,
            FamilySpec::K0 => 8,
            FamilySpec::FamilyK(k) => 8 + 2 * k,
        }
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        let name = self.name();
        match self {
            FamilySpec::Path(n) | FamilySpec::Complete(n) | FamilySpec::Empty(n) if *n < 1 => {
                Err(bad(name, "order must be at least 1"))
            }
            FamilySpec::Cycle(n) if *n < 3 => Err(bad(name, "order must be at least 3")),
            FamilySpec::Star(n) if *n < 3 => Err(bad(name, "order must be at least 3")),
            FamilySpec::DoubleStar(p, q) if *p < 1 || *q < 1 => {
                Err(bad(name, "both supports need at least one leaf"))
            }
            FamilySpec::CompleteMultipartite(sizes) if sizes.is_empty() => {
                Err(bad(name, "at least one part is required"))
            }
            FamilySpec::CompleteMultipartite(sizes) if sizes.contains(&0) => {
                Err(bad(name, "parts must be nonempty"))
            }
            FamilySpec::FamilyB(n) if *n < 4 => Err(bad(name, "clique order must be at least 4")),
            FamilySpec::DeltaSharp(n) if *n < 2 => {
                Err(bad(name, "clique order must be at least 2"))
            }
            FamilySpec::FamilyK(k) if *k < 1 => Err(bad(name, "k must be at least 1")),
            _ if self.order() > crate::graph::MAX_ORDER => {
                Err(FamilyError::Graph(GraphError::OrderTooLarge(self.order())))
            }
            _ => Ok(()),
        }
    }

    /// Builds the labelled graph described in the module docs.
    pub fn generate(&self) -> Result<Graph, FamilyError> {
        self.validate()?;
        let g = match self {
            FamilySpec::Path(n) => Graph::build(*n, (1..*n).map(|i| (i - 1, i)))?,
            FamilySpec::Cycle(n) => Graph::build(*n, (0..*n).map(|i| (i, (i + 1) % n)))?,
            FamilySpec::Complete(n) => Graph::complete(*n)?,
            FamilySpec::Empty(n) => Graph::empty(*n)?,
            FamilySpec::Star(n) => Graph::build(*n, (1..*n).map(|i| (0, i)))?,
            FamilySpec::DoubleStar(p, q) => {
                let leaves_x = (2..2 + p).map(|i| (0, i));
                let leaves_y = (2 + p..2 + p + q).map(|i| (1, i));
                Graph::build(
                    p + q + 2,
                    std::iter::once((0, 1)).chain(leaves_x).chain(leaves_y),
                )?
            }
            FamilySpec::CompleteMultipartite(sizes) => {
                let mut part = Vec::new();
                for (i, &s) in sizes.iter().enumerate() {
                    part.extend(std::iter::repeat_n(i, s));
                }
                let n = part.len();
                let edges = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .filter(|&(u, v)| part[u] != part[v]);
                Graph::build(n, edges)?
            }
            FamilySpec::FamilyB(n) => {
                let n = *n;
                let clique = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
                let extra = [(n, n - 1), (n, n - 2), (n + 1, n - 1)];
                Graph::build(n + 2, clique.chain(extra))?
            }
            FamilySpec::DeltaSharp(n) => {
                let n = *n;
                let clique = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
                Graph::build(n + 2, clique.chain([(n, n + 1), (n + 1, 0)]))?
            }
            FamilySpec::K0 => Graph::build(8, k0_edges())?,
            FamilySpec::FamilyK(k) => {
                let k = *k;
                let n_ = |i: usize| 8 + i;
                let m_ = |i: usize| 8 + k + i;
                let mut edges = k0_edges();
                for i in 0..k {
                    for v in 0..4 {
                        edges.push((v, n_(i)));
                    }
                    for u in 4..8 {
                        edges.push((u, m_(i)));
                    }
                    for j in 0..k {
                        if i != j {
                            edges.push((n_(i), m_(j)));
                        }
                    }
                }
                Graph::build(8 + 2 * k, edges)?
            }
        };
        Ok(g)
    }

    /// The closed-form IC value for this member.
    pub fn formula_ic(&self) -> Result<IcPrediction, FamilyError> {
        self.validate()?;
        Ok(match self {
            FamilySpec::Path(n) => IcPrediction::Value(match n {
                1..=4 => *n,
                5 => 4,
                6..=9 => 5,
                _ => 6,
            }),
            FamilySpec::Cycle(n) => IcPrediction::Value(match n {
                3..=6 => *n,
                7 => 5,
                _ => 6,
            }),
            FamilySpec::Complete(n) => IcPrediction::Value(*n),
            FamilySpec::Empty(n) => IcPrediction::Value(if *n == 1 { 1 } else { 2 }),
            FamilySpec::Star(_) => IcPrediction::Value(3),
            FamilySpec::DoubleStar(..) => IcPrediction::Value(4),
            FamilySpec::CompleteMultipartite(sizes) => {
                let k = sizes.len();
                let m = sizes.iter().filter(|&&s| s == 1).count();
                IcPrediction::Value(2 * k - m)
            }
            FamilySpec::FamilyB(_) => IcPrediction::NoPartition,
            FamilySpec::DeltaSharp(n) => IcPrediction::Value(n + 2),
            FamilySpec::K0 => IcPrediction::Value(8),
            FamilySpec::FamilyK(k) => IcPrediction::Value(8 + 2 * k),
        })
    }
}

fn k0_edges() -> Vec<(usize, usize)> {
    let mut edges = Vec::with_capacity(12);
    for v in 0..4 {
        for u in 0..4 {
            if u != v {
                edges.push((v, 4 + u));
            }
        }
    }
    edges
}

/// `<name>[:<param>[,<param>...]]`, e.g. `path:9`, `multipartite:1,2,3`, `K0`.
impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<FamilySpec, FamilyError> {
        let s = s.trim();
        let (name, params) = match s.split_once(':') {
            Some((n, p)) => (n.trim(), p.trim()),
            None => (s, ""),
        };
        let nums: Vec<usize> = if params.is_empty() {
            Vec::new()
        } else {
            params
                .split(',')
                .map(|p| p.trim().parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|_| FamilyError::Syntax(s.to_string()))?
        };
        let one = |nums: &[usize]| -> Result<usize, FamilyError> {
            match nums {
                [x] => Ok(*x),
                _ => Err(FamilyError::Syntax(s.to_string())),
            }
        };
        let spec = match name.to_ascii_lowercase().as_str() {
            "path" => FamilySpec::Path(one(&nums)?),
            "cycle" => FamilySpec::Cycle(one(&nums)?),
            "complete" => FamilySpec::Complete(one(&nums)?),
            "empty" => FamilySpec::Empty(one(&nums)?),
            "star" => FamilySpec::Star(one(&nums)?),
            "doublestar" => match nums.as_slice() {
                [p, q] => FamilySpec::DoubleStar(*p, *q),
                _ => return Err(FamilyError::Syntax(s.to_string())),
            },
            "multipartite" => FamilySpec::CompleteMultipartite(nums),
            "familyb" => FamilySpec::FamilyB(one(&nums)?),
            "deltasharp" => FamilySpec::DeltaSharp(one(&nums)?),
            "k0" if nums.is_empty() => FamilySpec::K0,
            "familyk" => FamilySpec::FamilyK(one(&nums)?),
            _ => return Err(FamilyError::UnknownFamily(name.to_string())),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.name();
        match self {
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Complete(n)
            | FamilySpec::Empty(n)
            | FamilySpec::Star(n)
            | FamilySpec::FamilyB(n)
            | FamilySpec::DeltaSharp(n)
            | FamilySpec::FamilyK(n) => write!(f, "{name}:{n}"),
            FamilySpec::DoubleStar(p, q) => write!(f, "{name}:{p},{q}"),
            FamilySpec::CompleteMultipartite(sizes) => {
                let parts: Vec<String> = sizes.iter().map(|s| s.to_string()).collect();
                write!(f, "{name}:{}", parts.join(","))
            }
            FamilySpec::K0 => f.write_str(name),
        }
    }
}
