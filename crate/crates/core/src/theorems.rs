//! Executable checks of the structural results on IC(G).
//!
//! Each check is a predicate on a single graph, so a counterexample can be
//! re-evaluated from its graph6 string alone. Family checks recognise the
//! family from the graph's structure and pass vacuously on non-members.

use std::fmt;
use std::str::FromStr;

use crate::coalition::{
    coalition_number, for_each_ic_partition, ic_number, partner_counts, verify_ic_partition,
    IcResult, Partition,
};
use crate::families::{
    enumerate_graphs, enumerate_trees, has_two_maximal_clique_partition, is_b1, is_b2, is_b3,
    is_family_b, is_family_f, is_family_k, is_k0, FamilySpec, GraphFilter,
};
use crate::graph::{Graph, VertexSet};
use crate::graph6::encode_graph6;
use crate::invariants::{chromatic_number, idomatic_number, independence_number};
use crate::par::{self, Parallelism};

macro_rules! theorem_ids {
    ($($variant:ident => $name:literal,)*) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum TheoremId {
            $($variant,)*
        }

        impl TheoremId {
            pub const ALL: &'static [TheoremId] = &[$(TheoremId::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(TheoremId::$variant => $name,)*
                }
            }
        }

        impl FromStr for TheoremId {
            type Err = UnknownTheorem;

            fn from_str(s: &str) -> Result<TheoremId, UnknownTheorem> {
                match s {
                    $($name => Ok(TheoremId::$variant),)*
                    _ => Err(UnknownTheorem(s.to_string())),
                }
            }
        }
    };
}

theorem_ids! {
    Obs1 => "obs1",
    Obs2 => "obs2",
    TheDel => "the-del",
    TheDoma => "the-doma",
    Claim1 => "claim-1",
    ObsComp => "obs-comp",
    PropStar => "prop-star",
    ObsDstar => "obs-dstar",
    Prop5 => "prop5",
    ThePath => "the-path",
    ThCycle => "th-cycle",
    LemFull => "lemfull",
    LemIso => "lemiso",
    Prop2 => "prop2",
    Prop3 => "prop3",
    Prop4 => "prop4",
    DisN => "dis-n",
    Alpha2 => "alpha2",
    TwoCliques => "two-cliques",
    L5 => "l5",
    TreeN => "tree-n",
    Girth7 => "girth7",
    Girth6 => "girth6",
    Girth5 => "girth5",
    Girth4 => "girth4",
    TfCorollary => "tf-corollary",
    TNMinus1 => "t-n-1",
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown theorem id {0:?}")]
pub struct UnknownTheorem(pub String);

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// What a check ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    /// Every graph up to isomorphism.
    Graphs,
    TriangleFree,
    Trees,
    /// Members of a parameterised family.
    Family,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Scope {
    pub domain: Domain,
    pub max_order: usize,
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.domain {
            Domain::Graphs => "graphs",
            Domain::TriangleFree => "triangle-free graphs",
            Domain::Trees => "trees",
            Domain::Family => "family members",
        };
        write!(f, "{what} of order <= {}", self.max_order)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Counterexample { graph6: String, details: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremCheck {
    pub id: TheoremId,
    pub scope: Scope,
    /// Number of graphs examined.
    pub checked: usize,
    pub verdict: Verdict,
}

impl TheoremCheck {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

impl fmt::Display for TheoremCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.verdict {
            Verdict::Pass => write!(
                f,
                "{}: pass ({} graphs, {})",
                self.id, self.checked, self.scope
            ),
            Verdict::Counterexample { graph6, details } => write!(
                f,
                "{}: counterexample {graph6} ({details}; {})",
                self.id, self.scope
            ),
        }
    }
}

impl TheoremId {
    pub fn default_scope(self) -> Scope {
        use TheoremId::*;
        let (domain, max_order) = match self {
            Obs1 | Obs2 | TheDel | TheDoma | LemFull | LemIso | Prop2 | Prop3 | Prop4 | DisN
            | Alpha2 | TwoCliques | L5 => (Domain::Graphs, 6),
            Girth7 | Girth6 | Girth5 | Girth4 | TfCorollary => (Domain::TriangleFree, 7),
            TreeN | TNMinus1 => (Domain::Trees, 9),
            Claim1 | ObsComp | ObsDstar | Prop5 => (Domain::Family, 8),
            PropStar => (Domain::Family, 9),
            ThePath | ThCycle => (Domain::Family, 11),
        };
        Scope { domain, max_order }
    }

    /// The default scope with a different order bound.
    pub fn scope_with_order(self, max_order: usize) -> Scope {
        Scope {
            max_order,
            ..self.default_scope()
        }
    }
}

type Outcome = Result<(), String>;

fn ensure(cond: bool, details: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(details())
    }
}

fn ic(g: &Graph) -> Result<IcResult, String> {
    ic_number(g).map_err(|e| e.to_string())
}

fn ic_value(g: &Graph) -> Result<Option<usize>, String> {
    Ok(ic(g)?.value())
}

fn show(v: Option<usize>) -> String {
    v.map_or_else(|| "none".to_string(), |k| k.to_string())
}

/// IC(G) = n exactly when the singleton partition is an ic-partition.
fn ic_is_order(g: &Graph) -> bool {
    g.order() > 0
        && verify_ic_partition(g, &Partition::singletons(g.order()))
            .map(|r| r.valid)
            .unwrap_or(false)
}

fn iso(g: &Graph, spec: FamilySpec) -> bool {
    spec.generate().is_ok_and(|h| g.is_isomorphic_to(&h))
}

fn is_complete(g: &Graph) -> bool {
    let n = g.order();
    n > 0 && g.edge_count() == n * (n - 1) / 2
}

fn is_edgeless(g: &Graph) -> bool {
    g.order() > 0 && g.edge_count() == 0
}

fn is_path(g: &Graph) -> bool {
    g.order() > 0 && g.is_tree() && g.max_degree() <= 2
}

fn is_cycle(g: &Graph) -> bool {
    g.order() >= 3 && g.is_connected() && g.degrees().iter().all(|&d| d == 2)
}

fn is_star(g: &Graph) -> bool {
    g.order() >= 3 && g.is_tree() && g.max_degree() == g.order() - 1
}

/// `(p, q)` when `g` is a double star.
fn double_star(g: &Graph) -> Option<(usize, usize)> {
    if g.order() < 4 || !g.is_tree() {
        return None;
    }
    let inner: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) > 1).collect();
    match inner[..] {
        [x, y] => Some((g.degree(x) - 1, g.degree(y) - 1)),
        _ => None,
    }
}

/// Part sizes when `g` is complete multipartite.
fn multipartite_sizes(g: &Graph) -> Option<Vec<usize>> {
    if g.order() == 0 {
        return None;
    }
    let parts = g.complement().components();
    parts
        .iter()
        .all(|&p| g.is_independent(p))
        .then(|| parts.iter().map(|p| p.len()).collect())
}

/// `K₂ + K̄ₘ` with m ≥ 2.
fn is_k2_join_empty(g: &Graph) -> bool {
    g.order() >= 4
        && Graph::complete(2)
            .and_then(|k2| k2.join(&Graph::empty(g.order() - 2)?))
            .is_ok_and(|h| g.is_isomorphic_to(&h))
}

/// `K₁ + B` with `B ∈ ℬ₂`.
fn is_k1_join_b2(g: &Graph) -> bool {
    g.full_vertices()
        .iter()
        .any(|v| is_b2(&g.remove(VertexSet::singleton(v))))
}

fn triangle_free_ic_n_list(g: &Graph) -> bool {
    let small = [
        FamilySpec::Cycle(4),
        FamilySpec::Cycle(5),
        FamilySpec::Cycle(6),
        FamilySpec::Path(1),
        FamilySpec::Path(2),
        FamilySpec::Path(3),
        FamilySpec::Path(4),
        FamilySpec::Empty(2),
    ];
    if small.into_iter().any(|s| iso(g, s)) || is_k0(g) || is_family_k(g) {
        return true;
    }
    // K₁ ∪ K₂ and K₂ ∪ K₂.
    let k2 = Graph::complete(2).expect("K2");
    [Graph::complete(1), Graph::complete(2)]
        .into_iter()
        .filter_map(|h| h.and_then(|h| h.union(&k2)).ok())
        .any(|h| g.is_isomorphic_to(&h))
}

fn iff(lhs: bool, rhs: bool, what: &str) -> Outcome {
    ensure(lhs == rhs, || {
        format!("{what}: IC condition {lhs}, structural condition {rhs}")
    })
}

/// Evaluates the statement `id` on one graph.
pub fn check_graph(id: TheoremId, g: &Graph) -> Outcome {
    use TheoremId::*;
    let n = g.order();
    if n == 0 {
        return Ok(());
    }
    match id {
        Obs1 => {
            let Some(k) = ic_value(g)? else { return Ok(()) };
            let c = coalition_number(g).map_err(|e| e.to_string())?;
            ensure(c.is_some_and(|c| k <= c), || {
                format!("IC = {k}, C = {}", show(c))
            })
        }
        Obs2 => {
            let Some(k) = ic_value(g)? else { return Ok(()) };
            let chi = chromatic_number(g);
            ensure(chi <= k, || format!("chi = {chi} > IC = {k}"))
        }
        TheDel => {
            if !g.is_connected() {
                return Ok(());
            }
            let delta = g.max_degree();
            let mut failure = None;
            for_each_ic_partition(g, |classes| {
                if failure.is_some() {
                    return;
                }
                let p = Partition::new(n, classes.to_vec()).expect("solver partitions are valid");
                let counts = partner_counts(g, &p).expect("solver partitions are ic-partitions");
                if let Some(&worst) = counts.iter().max().filter(|&&c| c > delta) {
                    failure = Some(format!(
                        "{p} has a class with {worst} partners, max degree {delta}"
                    ));
                }
            });
            failure.map_or(Ok(()), Err)
        }
        TheDoma => {
            if !g.is_connected() {
                return Ok(());
            }
            let Some(t) = idomatic_number(g) else {
                return Ok(());
            };
            let r = g.full_vertices().len();
            let k = ic_value(g)?;
            ensure(k.is_some_and(|k| k + r >= 2 * t), || {
                format!("IC = {}, id = {t}, full vertices = {r}", show(k))
            })
        }
        Claim1 => {
            if !is_family_b(g) {
                return Ok(());
            }
            let k = ic_value(g)?;
            ensure(k.is_none(), || format!("IC = {}", show(k)))
        }
        ObsComp => family_value(g, is_complete(g).then_some(n)),
        PropStar => family_value(g, is_star(g).then_some(3)),
        ObsDstar => family_value(g, double_star(g).map(|_| 4)),
        Prop5 => family_value(
            g,
            multipartite_sizes(g).map(|sizes| {
                let m = sizes.iter().filter(|&&s| s == 1).count();
                2 * sizes.len() - m
            }),
        ),
        ThePath => family_value(g, is_path(g).then(|| path_formula(n))),
        ThCycle => family_value(g, is_cycle(g).then(|| cycle_formula(n))),
        LemFull => {
            let full = g.full_vertices();
            let r = full.len();
            if r == 0 || r == n {
                return Ok(());
            }
            let whole = ic_value(g)?;
            let rest = ic_value(&g.remove(full))?;
            for k in r + 1..=n {
                if (whole == Some(k)) != (rest == Some(k - r)) {
                    return Err(format!(
                        "IC(G) = {}, IC(G - F) = {}, r = {r}",
                        show(whole),
                        show(rest)
                    ));
                }
            }
            Ok(())
        }
        LemIso => {
            let isolated = g.isolated_vertices();
            let Some(best) = ic_value(g)? else {
                return Ok(());
            };
            if isolated.is_empty() || best < 3 {
                return Ok(());
            }
            let mut failure = None;
            for_each_ic_partition(g, |classes| {
                if failure.is_none() && classes.len() == best && !classes.contains(&isolated) {
                    let p = Partition::new(n, classes.to_vec()).expect("valid partition");
                    failure = Some(format!(
                        "maximum partition {p} does not keep {isolated} together"
                    ));
                }
            });
            failure.map_or(Ok(()), Err)
        }
        Prop2 => {
            let k = ic_value(g)?;
            iff(k == Some(1), n == 1, "IC = 1 vs K1")?;
            iff(
                k == Some(2),
                (n == 2 && is_complete(g)) || (n >= 2 && is_edgeless(g)),
                "IC = 2 vs K2 or empty",
            )
        }
        Prop3 => {
            let k = ic_value(g)?;
            iff(
                k == Some(3),
                n >= 3 && (iso(g, FamilySpec::Complete(3)) || is_star(g) || is_b2(g)),
                "IC = 3 vs {K3, star} or B2",
            )
        }
        Prop4 => {
            if ic_value(g)? != Some(4) {
                return Ok(());
            }
            let member = iso(g, FamilySpec::Complete(4))
                || is_k2_join_empty(g)
                || is_k1_join_b2(g)
                || is_b1(g)
                || is_b3(g);
            ensure(member, || "IC = 4 outside the listed families".to_string())
        }
        DisN => {
            if g.is_connected() {
                return Ok(());
            }
            let parts = g.components();
            let two_cliques = parts.len() == 2 && parts.iter().all(|&p| g.is_clique(p));
            iff(ic_is_order(g), two_cliques, "IC = n vs two cliques")
        }
        Alpha2 => {
            if independence_number(g) != 2 {
                return Ok(());
            }
            ensure(ic_is_order(g), || "alpha = 2 but IC < n".to_string())
        }
        TwoCliques => {
            if !has_two_maximal_clique_partition(g) {
                return Ok(());
            }
            ensure(ic_is_order(g), || {
                "two maximal cliques but IC < n".to_string()
            })
        }
        L5 => {
            if g.min_degree() != 1 {
                return Ok(());
            }
            iff(
                ic_is_order(g),
                iso(g, FamilySpec::Complete(2)) || is_family_f(g),
                "IC = n vs K2 or F",
            )
        }
        TreeN => {
            if !g.is_tree() {
                return Ok(());
            }
            iff(ic_is_order(g), is_path(g) && n <= 4, "IC = n vs P1..P4")
        }
        Girth7 => {
            if !g.is_triangle_free() || !ic_is_order(g) {
                return Ok(());
            }
            let girth = g.girth();
            ensure(girth.is_none_or(|girth| girth <= 6), || {
                format!("IC = n with girth {}", show(girth))
            })
        }
        Girth6 => girth_iff(g, 6, |g| iso(g, FamilySpec::Cycle(6)), "C6"),
        Girth5 => girth_iff(g, 5, |g| iso(g, FamilySpec::Cycle(5)), "C5"),
        Girth4 => girth_iff(
            g,
            4,
            |g| iso(g, FamilySpec::Cycle(4)) || is_k0(g) || is_family_k(g),
            "C4, K0 or family K",
        ),
        TfCorollary => {
            if !g.is_triangle_free() {
                return Ok(());
            }
            iff(
                ic_is_order(g),
                triangle_free_ic_n_list(g),
                "IC = n vs the triangle-free list",
            )
        }
        TNMinus1 => {
            if !g.is_tree() {
                return Ok(());
            }
            let k = ic_value(g)?;
            let listed = iso(g, FamilySpec::Path(5))
                || iso(g, FamilySpec::Path(6))
                || iso(g, FamilySpec::DoubleStar(1, 2))
                || iso(g, FamilySpec::Star(4));
            iff(
                n >= 2 && k == Some(n - 1),
                listed,
                "IC = n - 1 vs {P5, P6, S12, K13}",
            )
        }
    }
}

fn family_value(g: &Graph, expected: Option<usize>) -> Outcome {
    let Some(expected) = expected else {
        return Ok(());
    };
    let k = ic_value(g)?;
    ensure(k == Some(expected), || {
        format!("IC = {}, expected {expected}", show(k))
    })
}

fn girth_iff(g: &Graph, girth: usize, listed: fn(&Graph) -> bool, what: &str) -> Outcome {
    if g.girth() != Some(girth) {
        return Ok(());
    }
    iff(ic_is_order(g), listed(g), &format!("IC = n vs {what}"))
}

fn path_formula(n: usize) -> usize {
    FamilySpec::Path(n)
        .formula_ic()
        .ok()
        .and_then(|p| p.value())
        .expect("paths have a closed form")
}

fn cycle_formula(n: usize) -> usize {
    FamilySpec::Cycle(n)
        .formula_ic()
        .ok()
        .and_then(|p| p.value())
        .expect("cycles have a closed form")
}

fn census(max_order: usize, filter: GraphFilter) -> Vec<Graph> {
    (1..=max_order)
        .flat_map(|n| enumerate_graphs(n, filter).unwrap_or_default())
        .collect()
}

fn generate_all(specs: impl IntoIterator<Item = FamilySpec>) -> Vec<Graph> {
    specs
        .into_iter()
        .filter_map(|s| s.generate().ok())
        .collect()
}

/// Integer partitions of `n` into non-increasing parts.
fn integer_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=left.min(cap)).rev() {
            cur.push(part);
            go(left - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// The graphs a check ranges over within `scope`.
pub fn instances(id: TheoremId, scope: Scope) -> Vec<Graph> {
    use TheoremId::*;
    let m = scope.max_order;
    match scope.domain {
        Domain::Graphs => census(m.min(7), GraphFilter::unlabeled()),
        Domain::TriangleFree => {
            let mut graphs = census(m.min(7), GraphFilter::unlabeled().triangle_free());
            // Named members beyond the census bound.
            if matches!(id, Girth4 | TfCorollary) {
                graphs.extend(generate_all([FamilySpec::K0, FamilySpec::FamilyK(1)]));
            }
            graphs
        }
        Domain::Trees => (1..=m.min(10))
            .flat_map(|n| enumerate_trees(n).unwrap_or_default())
            .collect(),
        Domain::Family => {
            let specs: Vec<FamilySpec> = match id {
                Claim1 => (4..=m.saturating_sub(2)).map(FamilySpec::FamilyB).collect(),
                ObsComp => (1..=m).map(FamilySpec::Complete).collect(),
                PropStar => (3..=m).map(FamilySpec::Star).collect(),
                ObsDstar => (1..=m)
                    .flat_map(|p| (p..=m).map(move |q| (p, q)))
                    .filter(|&(p, q)| p + q + 2 <= m)
                    .map(|(p, q)| FamilySpec::DoubleStar(p, q))
                    .collect(),
                Prop5 => (1..=m)
                    .flat_map(integer_partitions)
                    .map(FamilySpec::CompleteMultipartite)
                    .collect(),
                ThePath => (1..=m).map(FamilySpec::Path).collect(),
                ThCycle => (3..=m).map(FamilySpec::Cycle).collect(),
                _ => Vec::new(),
            };
            generate_all(specs)
        }
    }
}

/// Runs check `id` over `scope`, reporting the first counterexample in
/// instance order.
pub fn run_check(id: TheoremId, scope: Scope, mode: Parallelism) -> TheoremCheck {
    let graphs = instances(id, scope);
    let outcomes = par::map(&graphs, mode, |g| check_graph(id, g));
    let verdict = graphs
        .iter()
        .zip(outcomes)
        .find_map(|(g, o)| {
            o.err().map(|details| Verdict::Counterexample {
                graph6: encode_graph6(g),
                details,
            })
        })
        .unwrap_or(Verdict::Pass);
    TheoremCheck {
        id,
        scope,
        checked: graphs.len(),
        verdict,
    }
}
