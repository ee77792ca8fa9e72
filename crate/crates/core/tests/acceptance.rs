//! Acceptance suite: one PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use icpart::coalition::{coalition_number, ic_number, partner_counts, verify_ic_partition};
use icpart::families::{
    enumerate_graphs, enumerate_trees, is_b1, is_b2, is_b3, labeled_graphs, witness_partition,
    GraphFilter,
};
use icpart::graph6::{encode_graph6, parse_graph6};
use icpart::invariants::{chromatic_number, idomatic_number};
use icpart::{ClassVerdict, FamilySpec, Graph, IcResult, Partition, VertexSet, ViolationReason};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ic(g: &Graph) -> Option<usize> {
    ic_number(g).expect("order within bounds").value()
}

fn census(max: usize, filter: GraphFilter) -> Vec<Graph> {
    (1..=max)
        .flat_map(|n| enumerate_graphs(n, filter).unwrap())
        .collect()
}

fn gen(spec: FamilySpec) -> Graph {
    spec.generate().unwrap()
}

fn within(limit: Duration, start: Instant, ok: String) -> Outcome {
    let elapsed = start.elapsed();
    if elapsed < limit {
        Ok(format!("{ok}, {:.1}s", elapsed.as_secs_f64()))
    } else {
        Err(format!("{ok} but took {elapsed:?}"))
    }
}

fn path_value(n: usize) -> usize {
    match n {
        1..=4 => n,
        5 => 4,
        6..=9 => 5,
        _ => 6,
    }
}

fn cycle_value(n: usize) -> usize {
    match n {
        3..=6 => n,
        7 => 5,
        _ => 6,
    }
}

fn path_formula() -> Outcome {
    let start = Instant::now();
    for n in 1..=11 {
        let got = ic(&gen(FamilySpec::Path(n)));
        if got != Some(path_value(n)) {
            return Err(format!("P{n}: IC = {got:?}, expected {}", path_value(n)));
        }
    }
    within(Duration::from_secs(300), start, "P1..P11 exact".into())
}

fn cycle_formula() -> Outcome {
    let start = Instant::now();
    for n in 3..=11 {
        let got = ic(&gen(FamilySpec::Cycle(n)));
        if got != Some(cycle_value(n)) {
            return Err(format!("C{n}: IC = {got:?}, expected {}", cycle_value(n)));
        }
    }
    within(Duration::from_secs(300), start, "C3..C11 exact".into())
}

fn size_vectors(total: usize, cap: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    (1..=total.min(cap))
        .flat_map(|first| {
            size_vectors(total - first, first)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

fn multipartite() -> Outcome {
    let mut count = 0;
    for total in 1..=8 {
        for sizes in size_vectors(total, total) {
            let k = sizes.len();
            let m = sizes.iter().filter(|&&s| s == 1).count();
            let got = ic(&gen(FamilySpec::CompleteMultipartite(sizes.clone())));
            if got != Some(2 * k - m) {
                return Err(format!("K{sizes:?}: IC = {got:?}, expected {}", 2 * k - m));
            }
            count += 1;
        }
    }
    Ok(format!("{count} size vectors"))
}

fn nonexistence() -> Outcome {
    for n in 4..=6 {
        let g = gen(FamilySpec::FamilyB(n));
        let got = ic_number(&g).unwrap();
        if got != IcResult::NoPartition {
            return Err(format!("FamilyB({n}) has IC = {:?}", got.value()));
        }
        // The vertex adjacent to the two clique vertices v_n, v_{n-1}.
        let report = verify_ic_partition(&g, &Partition::singletons(n + 2)).unwrap();
        if report.valid || report.verdicts[n] != ClassVerdict::Violation(ViolationReason::NoPartner)
        {
            return Err(format!(
                "FamilyB({n}) singleton verdicts {:?}",
                report.verdicts
            ));
        }
    }
    Ok("FamilyB(4..6) have none; {v_(n+1)} lacks a partner".into())
}

fn witness_specs() -> Vec<FamilySpec> {
    let mut specs: Vec<FamilySpec> = (1..=20).map(FamilySpec::Path).collect();
    specs.extend((3..=20).map(FamilySpec::Cycle));
    specs.extend(
        (1..=10)
            .flat_map(|t| size_vectors(t, t))
            .map(FamilySpec::CompleteMultipartite),
    );
    specs.extend((3..=12).map(FamilySpec::Star));
    specs.extend((1..=4).flat_map(|p| (1..=4).map(move |q| FamilySpec::DoubleStar(p, q))));
    specs.extend((2..=6).map(FamilySpec::DeltaSharp));
    specs.push(FamilySpec::K0);
    specs.extend((1..=3).map(FamilySpec::FamilyK));
    specs
}

fn witnesses() -> Outcome {
    let specs = witness_specs();
    for spec in &specs {
        let g = gen(spec.clone());
        let Some(p) = witness_partition(spec).unwrap() else {
            return Err(format!("{spec}: no witness"));
        };
        let report = verify_ic_partition(&g, &p).unwrap();
        let expected = spec.formula_ic().unwrap().value();
        if !report.valid || Some(p.len()) != expected {
            return Err(format!(
                "{spec}: witness {p} valid={} size {}",
                report.valid,
                p.len()
            ));
        }
    }
    Ok(format!("{} family witnesses verified", specs.len()))
}

fn bounds() -> Outcome {
    let start = Instant::now();
    let graphs = census(6, GraphFilter::unlabeled());
    let mut checked = 0;
    for g in &graphs {
        let Some(k) = ic(g) else { continue };
        let chi = chromatic_number(g);
        let c = coalition_number(g).unwrap();
        if chi > k || c.is_none_or(|c| k > c) {
            return Err(format!("{}: chi {chi}, IC {k}, C {c:?}", encode_graph6(g)));
        }
        checked += 1;
    }
    within(Duration::from_secs(600), start, format!("{checked} graphs"))
}

fn partner_bound() -> Outcome {
    let graphs = census(6, GraphFilter::unlabeled().connected());
    for g in &graphs {
        let IcResult::Value { witness, .. } = ic_number(g).unwrap() else {
            continue;
        };
        let worst = partner_counts(g, &witness)
            .unwrap()
            .into_iter()
            .max()
            .unwrap_or(0);
        if worst > g.max_degree() {
            return Err(format!(
                "{}: {worst} partners > {}",
                encode_graph6(g),
                g.max_degree()
            ));
        }
    }
    let two_k2 = gen(FamilySpec::Complete(2))
        .union(&gen(FamilySpec::Complete(2)))
        .unwrap();
    let counts = partner_counts(&two_k2, &Partition::singletons(4)).unwrap();
    if counts != [2, 2, 2, 2] || two_k2.max_degree() != 1 {
        return Err(format!("2K2 partner counts {counts:?}"));
    }
    Ok(format!(
        "{} connected graphs; 2K2 counts 2 with max degree 1",
        graphs.len()
    ))
}

fn idomatic_bound() -> Outcome {
    let mut checked = 0;
    for g in census(6, GraphFilter::unlabeled().connected()) {
        let Some(t) = idomatic_number(&g) else {
            continue;
        };
        let r = g.full_vertices().len();
        let k = ic(&g);
        if k.is_none_or(|k| k + r < 2 * t) {
            return Err(format!("{}: IC {k:?}, id {t}, r {r}", encode_graph6(&g)));
        }
        checked += 1;
    }
    Ok(format!("{checked} graphs with an idomatic partition"))
}

fn trees() -> Outcome {
    let start = Instant::now();
    let paths: Vec<Graph> = (1..=6).map(|n| gen(FamilySpec::Path(n))).collect();
    let n_minus_one = [
        paths[4].clone(),
        paths[5].clone(),
        gen(FamilySpec::DoubleStar(1, 2)),
        gen(FamilySpec::Star(4)),
    ];
    let mut total = 0;
    for n in 1..=9 {
        for t in enumerate_trees(n).unwrap() {
            let k = ic(&t);
            let is_small_path = paths[..4].iter().any(|p| p.is_isomorphic_to(&t));
            let listed = n_minus_one.iter().any(|h| h.is_isomorphic_to(&t));
            if (k == Some(n)) != is_small_path || (k == Some(n - 1) && n >= 2) != listed {
                return Err(format!("{}: IC {k:?}", encode_graph6(&t)));
            }
            total += 1;
        }
    }
    within(Duration::from_secs(600), start, format!("{total} trees"))
}

fn is_k2_join_empty(g: &Graph) -> bool {
    g.order() >= 4
        && g.is_isomorphic_to(
            &gen(FamilySpec::Complete(2))
                .join(&gen(FamilySpec::Empty(g.order() - 2)))
                .unwrap(),
        )
}

fn small_values() -> Outcome {
    let graphs = census(6, GraphFilter::unlabeled());
    for g in &graphs {
        let n = g.order();
        let k = ic(g);
        let complete = g.edge_count() == n * (n - 1) / 2;
        let edgeless = g.edge_count() == 0;
        let star = n >= 3 && g.is_tree() && g.max_degree() == n - 1;
        let fail = |what: &str| Err(format!("{}: IC {k:?} ({what})", encode_graph6(g)));
        if (k == Some(1)) != (n == 1) {
            return fail("IC = 1");
        }
        if (k == Some(2)) != ((n == 2 && complete) || (n >= 2 && edgeless)) {
            return fail("IC = 2");
        }
        if (k == Some(3)) != ((n == 3 && complete) || star || is_b2(g)) {
            return fail("IC = 3");
        }
        if k == Some(4) {
            let in_union = (n == 4 && complete)
                || is_k2_join_empty(g)
                || g.full_vertices()
                    .iter()
                    .any(|v| is_b2(&g.remove(VertexSet::singleton(v))))
                || is_b1(g)
                || is_b3(g);
            if !in_union {
                return fail("IC = 4");
            }
        }
    }
    Ok(format!("{} graphs", graphs.len()))
}

fn triangle_free_full() -> Outcome {
    let listed: Vec<Graph> = [
        FamilySpec::Cycle(4),
        FamilySpec::Cycle(5),
        FamilySpec::Cycle(6),
        FamilySpec::Path(1),
        FamilySpec::Path(2),
        FamilySpec::Path(3),
        FamilySpec::Path(4),
        FamilySpec::Empty(2),
    ]
    .into_iter()
    .map(gen)
    .chain([
        gen(FamilySpec::Complete(1))
            .union(&gen(FamilySpec::Complete(2)))
            .unwrap(),
        gen(FamilySpec::Complete(2))
            .union(&gen(FamilySpec::Complete(2)))
            .unwrap(),
    ])
    .collect();
    let graphs = census(7, GraphFilter::unlabeled().triangle_free());
    let mut hits = 0;
    for g in &graphs {
        let full = ic(g) == Some(g.order());
        let in_list = listed.iter().any(|h| h.is_isomorphic_to(g));
        if full != in_list {
            return Err(format!(
                "{}: IC = n is {full}, listed {in_list}",
                encode_graph6(g)
            ));
        }
        hits += full as usize;
    }
    Ok(format!(
        "{} triangle-free graphs, {hits} with IC = n",
        graphs.len()
    ))
}

fn format_round_trip() -> Outcome {
    let mut count = 0u64;
    for n in 0..=7 {
        for g in labeled_graphs(n).unwrap() {
            let s = encode_graph6(&g);
            if parse_graph6(&s).as_ref() != Ok(&g) {
                return Err(format!("round trip failed for {s}"));
            }
            count += 1;
        }
    }
    let fixed = [
        ("A_", gen(FamilySpec::Complete(2))),
        ("A?", gen(FamilySpec::Empty(2))),
        ("Bw", gen(FamilySpec::Complete(3))),
    ];
    for (s, g) in fixed {
        if parse_graph6(s).as_ref() != Ok(&g) {
            return Err(format!("{s} decoded wrongly"));
        }
    }
    Ok(format!("{count} labeled graphs round-trip"))
}

/// Every set partition of `0..n`, straight from restricted-growth strings.
fn all_partitions(n: usize) -> Vec<Vec<VertexSet>> {
    fn go(v: usize, n: usize, classes: &mut Vec<VertexSet>, out: &mut Vec<Vec<VertexSet>>) {
        if v == n {
            out.push(classes.clone());
            return;
        }
        for i in 0..classes.len() {
            classes[i].insert(v);
            go(v + 1, n, classes, out);
            classes[i].remove(v);
        }
        classes.push(VertexSet::singleton(v));
        go(v + 1, n, classes, out);
        classes.pop();
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), &mut out);
    out
}

fn naive_ic(g: &Graph) -> Option<usize> {
    let all = g.vertices();
    let independent = |s: VertexSet| s.iter().all(|v| g.neighbors(v).is_disjoint(s));
    let dominating = |s: VertexSet| {
        s.iter()
            .fold(VertexSet::EMPTY, |acc, v| acc | g.closed_neighbors(v))
            == all
    };
    let id = |s: VertexSet| independent(s) && dominating(s);
    let pair = |x: VertexSet, y: VertexSet| {
        independent(x) && independent(y) && !id(x) && !id(y) && id(x | y)
    };
    all_partitions(g.order())
        .into_iter()
        .filter(|classes| {
            classes.iter().enumerate().all(|(i, &x)| {
                (x.len() == 1 && dominating(x))
                    || classes
                        .iter()
                        .enumerate()
                        .any(|(j, &y)| i != j && pair(x, y))
            })
        })
        .map(|classes| classes.len())
        .max()
}

fn oracle_equivalence() -> Outcome {
    let mut count = 0;
    for n in 1..=5 {
        for g in labeled_graphs(n).unwrap() {
            let (fast, slow) = (ic(&g), naive_ic(&g));
            if fast != slow {
                return Err(format!(
                    "{}: solver {fast:?}, oracle {slow:?}",
                    encode_graph6(&g)
                ));
            }
            count += 1;
        }
    }
    Ok(format!("{count} labeled graphs agree"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("path values", path_formula),
        ("cycle values", cycle_formula),
        ("complete multipartite 2k - m", multipartite),
        ("family B has no ic-partition", nonexistence),
        ("family witnesses", witnesses),
        ("chi <= IC <= C", bounds),
        ("partner count <= max degree", partner_bound),
        ("IC >= 2 id - r", idomatic_bound),
        ("trees with IC = n and n - 1", trees),
        ("IC = 1, 2, 3, 4 structure", small_values),
        ("triangle-free IC = n", triangle_free_full),
        ("graph6 round trip", format_round_trip),
        ("solver matches naive oracle", oracle_equivalence),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
