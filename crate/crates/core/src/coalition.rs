//! Independent coalitions and coalition partitions.
//!
//! A class of an ic-partition is valid when it is a singleton holding a full
//! vertex, or when it is an independent set that is not independent
//! dominating and has at least one ic-partner among the other classes. Two
//! disjoint sets are ic-partners when both are independent, neither is
//! independent dominating, and their union is independent dominating.
//!
//! The exact solvers walk set partitions in restricted-growth order: vertex
//! `v` joins one of the classes opened so far or opens the next one, so every
//! unlabelled partition is visited once.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("partition order {0} exceeds the capacity of {MAX_ORDER} vertices")]
    OrderTooLarge(usize),
    #[error("class {0} is empty")]
    EmptyClass(usize),
    #[error("vertices {0} lie outside 0..{1}")]
    OutOfRange(VertexSet, usize),
    #[error("vertices {0} appear in more than one class")]
    Overlap(VertexSet),
    #[error("vertices {0} are not covered by any class")]
    Uncovered(VertexSet),
    #[error("cannot parse partition: {0}")]
    Syntax(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoalitionError {
    #[error("coalition sets must be nonempty")]
    EmptySet,
    #[error("coalition sets overlap on {0}")]
    Overlap(VertexSet),
    #[error("set {set} is not contained in 0..{n}")]
    OutOfRange { set: VertexSet, n: usize },
    #[error("partition covers {partition} vertices but the graph has {graph}")]
    OrderMismatch { partition: usize, graph: usize },
    #[error("not an ic-partition")]
    NotIcPartition,
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A partition of `0..order` into nonempty, pairwise disjoint classes.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    order: usize,
    classes: Vec<VertexSet>,
}

impl Partition {
    pub fn new(order: usize, classes: Vec<VertexSet>) -> Result<Partition, PartitionError> {
        if order > MAX_ORDER {
            return Err(PartitionError::OrderTooLarge(order));
        }
        let all = VertexSet::full(order);
        let mut seen = VertexSet::EMPTY;
        let mut twice = VertexSet::EMPTY;
        for (i, &c) in classes.iter().enumerate() {
            if c.is_empty() {
                return Err(PartitionError::EmptyClass(i));
            }
            if !c.is_subset(all) {
                return Err(PartitionError::OutOfRange(c - all, order));
            }
            twice = twice | (seen & c);
            seen = seen | c;
        }
        if !twice.is_empty() {
            return Err(PartitionError::Overlap(twice));
        }
        if seen != all {
            return Err(PartitionError::Uncovered(all - seen));
        }
        Ok(Partition { order, classes })
    }

    pub fn from_lists<L: AsRef<[usize]>>(
        order: usize,
        lists: &[L],
    ) -> Result<Partition, PartitionError> {
        let mut classes = Vec::with_capacity(lists.len());
        for list in lists {
            let mut c = VertexSet::EMPTY;
            for &v in list.as_ref() {
                if v >= order || v >= MAX_ORDER {
                    return Err(PartitionError::OutOfRange(
                        VertexSet::singleton(v.min(MAX_ORDER - 1)),
                        order,
                    ));
                }
                if c.contains(v) {
                    return Err(PartitionError::Overlap(VertexSet::singleton(v)));
                }
                c.insert(v);
            }
            classes.push(c);
        }
        Partition::new(order, classes)
    }

    /// Parses `{0,2} {1}` or `0,2;1` into a partition of `0..order`.
    pub fn parse(order: usize, text: &str) -> Result<Partition, PartitionError> {
        let lists = parse_class_lists(text)?;
        Partition::from_lists(order, &lists)
    }

    /// π₁: one class per vertex.
    pub fn singletons(order: usize) -> Partition {
        Partition {
            order,
            classes: (0..order).map(VertexSet::singleton).collect(),
        }
    }

    /// The one-class partition `{V}`.
    pub fn whole(order: usize) -> Partition {
        Partition {
            order,
            classes: if order == 0 {
                Vec::new()
            } else {
                vec![VertexSet::full(order)]
            },
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn class_of(&self, v: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(v))
    }

    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.classes.iter().map(|c| c.to_vec()).collect()
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

/// Renders as `{0,2} {1} {3}`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.classes.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Splits `{0,2} {1}` or `0,2;1` into vertex lists without checking coverage.
pub fn parse_class_lists(text: &str) -> Result<Vec<Vec<usize>>, PartitionError> {
    let normalized = text.replace('}', ";").replace('{', "");
    let mut lists = Vec::new();
    for chunk in normalized.split(';') {
        let chunk = chunk.trim();
        if chunk.is_empty() {
            continue;
        }
        let mut list = Vec::new();
        for tok in chunk.split(',') {
            let tok = tok.trim();
            let v = usize::from_str(tok)
                .map_err(|_| PartitionError::Syntax(format!("bad vertex {tok:?}")))?;
            list.push(v);
        }
        lists.push(list);
    }
    Ok(lists)
}

/// Do `a` and `b` form an independent coalition in `g`?
pub fn forms_ic(g: &Graph, a: VertexSet, b: VertexSet) -> Result<bool, CoalitionError> {
    check_pair(g, a, b)?;
    let all = g.vertices();
    let a_id = g.is_independent(a) && g.dominated_by(a) == all;
    let b_id = g.is_independent(b) && g.dominated_by(b) == all;
    Ok(g.is_independent(a)
        && g.is_independent(b)
        && !a_id
        && !b_id
        && g.is_independent(a | b)
        && g.dominated_by(a | b) == all)
}

/// Do `a` and `b` form a coalition (no independence required)?
pub fn forms_coalition(g: &Graph, a: VertexSet, b: VertexSet) -> Result<bool, CoalitionError> {
    check_pair(g, a, b)?;
    let all = g.vertices();
    Ok(g.dominated_by(a) != all && g.dominated_by(b) != all && g.dominated_by(a | b) == all)
}

fn check_pair(g: &Graph, a: VertexSet, b: VertexSet) -> Result<(), CoalitionError> {
    if a.is_empty() || b.is_empty() {
        return Err(CoalitionError::EmptySet);
    }
    for s in [a, b] {
        if !s.is_subset(g.vertices()) {
            return Err(CoalitionError::OutOfRange {
                set: s,
                n: g.order(),
            });
        }
    }
    if !a.is_disjoint(b) {
        return Err(CoalitionError::Overlap(a & b));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationReason {
    NotIndependent,
    /// Independent dominating but not a singleton.
    IndependentDominatingNonSingleton,
    NoPartner,
}

impl fmt::Display for ViolationReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ViolationReason::NotIndependent => "not-independent",
            ViolationReason::IndependentDominatingNonSingleton => {
                "independent-dominating-non-singleton"
            }
            ViolationReason::NoPartner => "no-partner",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassVerdict {
    SingletonDominating,
    /// Indices of every class this one forms an independent coalition with.
    HasPartners(Vec<usize>),
    Violation(ViolationReason),
}

impl ClassVerdict {
    pub fn is_violation(&self) -> bool {
        matches!(self, ClassVerdict::Violation(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub valid: bool,
    pub verdicts: Vec<ClassVerdict>,
}

/// Per-class data reused by the verifier and the solvers.
#[derive(Clone, Copy)]
struct ClassInfo {
    set: VertexSet,
    open: VertexSet,
    dominated: VertexSet,
}

impl ClassInfo {
    fn of(g: &Graph, set: VertexSet) -> ClassInfo {
        let open = g.open_neighborhood(set);
        ClassInfo {
            set,
            open,
            dominated: open | set,
        }
    }

    fn independent(&self) -> bool {
        self.set.is_disjoint(self.open)
    }

    fn ic_partner_of(&self, other: &ClassInfo, all: VertexSet) -> bool {
        self.independent()
            && other.independent()
            && self.dominated != all
            && other.dominated != all
            && self.set.is_disjoint(other.open)
            && (self.dominated | other.dominated) == all
    }
}

fn ensure_matches(g: &Graph, p: &Partition) -> Result<(), CoalitionError> {
    if p.order() != g.order() {
        return Err(CoalitionError::OrderMismatch {
            partition: p.order(),
            graph: g.order(),
        });
    }
    Ok(())
}

/// Checks every class of `p` and lists all ic-partners of each.
pub fn verify_ic_partition(g: &Graph, p: &Partition) -> Result<VerifyReport, CoalitionError> {
    ensure_matches(g, p)?;
    let all = g.vertices();
    let infos: Vec<ClassInfo> = p.classes().iter().map(|&c| ClassInfo::of(g, c)).collect();
    let verdicts: Vec<ClassVerdict> = infos
        .iter()
        .enumerate()
        .map(|(i, c)| {
            if c.set.len() == 1 && c.dominated == all {
                return ClassVerdict::SingletonDominating;
            }
            if !c.independent() {
                return ClassVerdict::Violation(ViolationReason::NotIndependent);
            }
            if c.dominated == all {
                return ClassVerdict::Violation(ViolationReason::IndependentDominatingNonSingleton);
            }
            let partners: Vec<usize> = infos
                .iter()
                .enumerate()
                .filter(|&(j, d)| j != i && c.ic_partner_of(d, all))
                .map(|(j, _)| j)
                .collect();
            if partners.is_empty() {
                ClassVerdict::Violation(ViolationReason::NoPartner)
            } else {
                ClassVerdict::HasPartners(partners)
            }
        })
        .collect();
    Ok(VerifyReport {
        valid: verdicts.iter().all(|v| !v.is_violation()),
        verdicts,
    })
}

/// Is `p` a coalition partition of `g`?
pub fn verify_c_partition(g: &Graph, p: &Partition) -> Result<bool, CoalitionError> {
    ensure_matches(g, p)?;
    let all = g.vertices();
    let dominated: Vec<VertexSet> = p.classes().iter().map(|&c| g.dominated_by(c)).collect();
    Ok(is_c_partition(p.classes(), &dominated, all))
}

fn is_c_partition(classes: &[VertexSet], dominated: &[VertexSet], all: VertexSet) -> bool {
    (0..classes.len()).all(|i| {
        if dominated[i] == all {
            return classes[i].len() == 1;
        }
        (0..classes.len())
            .any(|j| j != i && dominated[j] != all && (dominated[i] | dominated[j]) == all)
    })
}

/// For each class of a valid ic-partition, the number of classes it forms an
/// independent coalition with.
pub fn partner_counts(g: &Graph, p: &Partition) -> Result<Vec<usize>, CoalitionError> {
    let report = verify_ic_partition(g, p)?;
    if !report.valid {
        return Err(CoalitionError::NotIcPartition);
    }
    Ok(report
        .verdicts
        .iter()
        .map(|v| match v {
            ClassVerdict::HasPartners(ps) => ps.len(),
            _ => 0,
        })
        .collect())
}

/// Outcome of the exact IC(G) search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IcResult {
    Value { k: usize, witness: Partition },
    NoPartition,
}

impl IcResult {
    pub fn value(&self) -> Option<usize> {
        match self {
            IcResult::Value { k, .. } => Some(*k),
            IcResult::NoPartition => None,
        }
    }

    pub fn witness(&self) -> Option<&Partition> {
        match self {
            IcResult::Value { witness, .. } => Some(witness),
            IcResult::NoPartition => None,
        }
    }
}

/// Leaf test for the ic solver. Classes are independent by construction.
fn is_ic_leaf(infos: &[ClassInfo], all: VertexSet) -> bool {
    infos.iter().enumerate().all(|(i, c)| {
        if c.dominated == all {
            return c.set.len() == 1;
        }
        infos.iter().enumerate().any(|(j, d)| {
            j != i
                && d.dominated != all
                && c.set.is_disjoint(d.open)
                && (c.dominated | d.dominated) == all
        })
    })
}

struct IcSearch<'a> {
    g: &'a Graph,
    all: VertexSet,
    infos: Vec<ClassInfo>,
    best: usize,
    witness: Option<Vec<VertexSet>>,
}

impl IcSearch<'_> {
    fn assign(&mut self, v: usize) {
        let n = self.g.order();
        if v == n {
            if self.infos.len() > self.best && is_ic_leaf(&self.infos, self.all) {
                self.best = self.infos.len();
                self.witness = Some(self.infos.iter().map(|c| c.set).collect());
            }
            return;
        }
        if self.infos.len() + (n - v) <= self.best {
            return;
        }
        let single = VertexSet::singleton(v);
        self.infos.push(ClassInfo::of(self.g, single));
        self.assign(v + 1);
        self.infos.pop();
        let nb = self.g.neighbors(v);
        for i in 0..self.infos.len() {
            let old = self.infos[i];
            if !old.set.is_disjoint(nb) {
                continue;
            }
            let grown = ClassInfo {
                set: old.set | single,
                open: old.open | nb,
                dominated: old.dominated | nb | single,
            };
            // A non-singleton independent dominating class is maximal, so it
            // can neither grow nor become valid.
            if grown.dominated == self.all {
                continue;
            }
            self.infos[i] = grown;
            self.assign(v + 1);
            self.infos[i] = old;
        }
    }
}

/// IC(G) with a witness partition, or [`IcResult::NoPartition`].
///
/// Exhaustive; practical up to order 12 or so. The witness is the first
/// maximum partition met in restricted-growth order (new class tried first).
pub fn ic_number(g: &Graph) -> Result<IcResult, CoalitionError> {
    if g.order() == 0 {
        return Ok(IcResult::NoPartition);
    }
    let mut search = IcSearch {
        g,
        all: g.vertices(),
        infos: Vec::with_capacity(g.order()),
        best: 0,
        witness: None,
    };
    search.assign(0);
    Ok(match search.witness {
        Some(classes) => IcResult::Value {
            k: search.best,
            witness: Partition::new(g.order(), classes)?,
        },
        None => IcResult::NoPartition,
    })
}

/// Every ic-partition of `g`, each unlabelled partition once.
pub fn for_each_ic_partition<F: FnMut(&[VertexSet])>(g: &Graph, mut visit: F) {
    fn walk<F: FnMut(&[VertexSet])>(
        g: &Graph,
        all: VertexSet,
        v: usize,
        infos: &mut Vec<ClassInfo>,
        sets: &mut Vec<VertexSet>,
        visit: &mut F,
    ) {
        if v == g.order() {
            if is_ic_leaf(infos, all) {
                sets.clear();
                sets.extend(infos.iter().map(|c| c.set));
                visit(sets);
            }
            return;
        }
        let single = VertexSet::singleton(v);
        let nb = g.neighbors(v);
        infos.push(ClassInfo::of(g, single));
        walk(g, all, v + 1, infos, sets, visit);
        infos.pop();
        for i in 0..infos.len() {
            let old = infos[i];
            if !old.set.is_disjoint(nb) {
                continue;
            }
            let grown = ClassInfo {
                set: old.set | single,
                open: old.open | nb,
                dominated: old.dominated | nb | single,
            };
            if grown.dominated == all {
                continue;
            }
            infos[i] = grown;
            walk(g, all, v + 1, infos, sets, visit);
            infos[i] = old;
        }
    }
    if g.order() == 0 {
        return;
    }
    let mut infos = Vec::with_capacity(g.order());
    let mut sets = Vec::with_capacity(g.order());
    walk(g, g.vertices(), 0, &mut infos, &mut sets, &mut visit);
}

/// A maximum coalition partition of `g`, if any exists.
pub fn coalition_partition(g: &Graph) -> Result<Option<Partition>, CoalitionError> {
    struct CSearch<'a> {
        g: &'a Graph,
        all: VertexSet,
        classes: Vec<VertexSet>,
        dominated: Vec<VertexSet>,
        best: usize,
        witness: Option<Vec<VertexSet>>,
    }
    impl CSearch<'_> {
        fn assign(&mut self, v: usize) {
            let n = self.g.order();
            if v == n {
                if self.classes.len() > self.best
                    && is_c_partition(&self.classes, &self.dominated, self.all)
                {
                    self.best = self.classes.len();
                    self.witness = Some(self.classes.clone());
                }
                return;
            }
            if self.classes.len() + (n - v) <= self.best {
                return;
            }
            let single = VertexSet::singleton(v);
            let closed = self.g.closed_neighbors(v);
            self.classes.push(single);
            self.dominated.push(closed);
            self.assign(v + 1);
            self.classes.pop();
            self.dominated.pop();
            for i in 0..self.classes.len() {
                let (old_c, old_d) = (self.classes[i], self.dominated[i]);
                // Dominating non-singletons stay dominating as they grow.
                if old_d == self.all {
                    continue;
                }
                self.classes[i] = old_c | single;
                self.dominated[i] = old_d | closed;
                self.assign(v + 1);
                self.classes[i] = old_c;
                self.dominated[i] = old_d;
            }
        }
    }
    if g.order() == 0 {
        return Ok(None);
    }
    let mut search = CSearch {
        g,
        all: g.vertices(),
        classes: Vec::new(),
        dominated: Vec::new(),
        best: 0,
        witness: None,
    };
    search.assign(0);
    match search.witness {
        Some(classes) => Ok(Some(Partition::new(g.order(), classes)?)),
        None => Ok(None),
    }
}

/// C(G), the coalition number; `None` when no c-partition exists.
pub fn coalition_number(g: &Graph) -> Result<Option<usize>, CoalitionError> {
    Ok(coalition_partition(g)?.map(|p| p.len()))
}
