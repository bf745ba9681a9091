//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Sweeps run on a single rayon thread so the reported times are
//! single-threaded.

use std::process::Command;
use std::time::{Duration, Instant};

use chromix::chromatic::{
    exhaustive_verify, verify_stanley_graph, verify_strong_reciprocity, verify_weak_reciprocity,
};
use chromix::enumeration::{
    count_acyclic_orientations, count_strong_colorings, count_weak_colorings,
    enumerate_mixed_graphs, random_mixed_graph, GraphFilter,
};
use chromix::polynomial::rational;
use chromix::poset::{enumerate_posets, verify_order_reciprocity};
use chromix::{
    strong_chromatic_polynomial, weak_chromatic_polynomial, weak_chromatic_via_oracle, Edge,
    MixedGraph, OmegaLabeling, Polynomial, Theorem,
};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn mixed_triangle() -> MixedGraph {
    let mut g = MixedGraph::with_vertices(["u", "v", "w"]);
    g.add_edge("u", "v");
    g.add_arc("v", "w");
    g.add_arc("w", "u");
    g
}

fn small_universe() -> Vec<MixedGraph> {
    (1..=4)
        .flat_map(|n| enumerate_mixed_graphs(n, GraphFilter::All).unwrap())
        .collect()
}

fn random_graphs(seed: u64, count: usize, sizes: &[usize]) -> Vec<MixedGraph> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|i| random_mixed_graph(sizes[i % sizes.len()], &mut rng))
        .collect()
}

/// Runs `theorem` exhaustively for `n = 1..=4` and totals the results.
fn sweep(theorem: Theorem, kmax: i64) -> Result<usize, String> {
    let mut instances = 0;
    let mut failures = Vec::new();
    for n in 1..=4 {
        let s = exhaustive_verify(n, kmax, theorem).map_err(|e| e.to_string())?;
        instances += s.instances;
        failures.extend(s.failures);
    }
    match failures.first() {
        Some(f) => Err(format!("{} failures; first:\n{f}", failures.len())),
        None => Ok(instances),
    }
}

fn worked_example() -> Outcome {
    let g = mixed_triangle();
    let engine = weak_chromatic_polynomial(&g);
    let oracle = weak_chromatic_via_oracle(&g).map_err(|e| e.to_string())?;
    ensure(engine == oracle, || format!("engine {engine} != oracle {oracle}"))?;
    for (k, want) in [(1, 0), (2, 2), (3, 7), (4, 16)] {
        let brute = count_weak_colorings(&g, k).unwrap() as i64;
        ensure(brute == want && engine.evaluate(k) == rational(want), || {
            format!("χ({k}): engine {} brute {brute} want {want}", engine.evaluate(k))
        })?;
    }

    let out = Command::new(env!("CARGO_BIN_EXE_chromix"))
        .args(["poly", concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/mixed_triangle.txt")])
        .output()
        .map_err(|e| e.to_string())?;
    let text = String::from_utf8_lossy(&out.stdout);
    let first = text.lines().next().unwrap_or_default();
    ensure(out.status.success() && first == engine.to_string(), || {
        format!("cli printed `{first}`, engine `{engine}`")
    })?;

    let e = Edge::new("u", "v");
    let contracted = g.contract(&e.clone().into()).unwrap();
    ensure(weak_chromatic_polynomial(&contracted) == Polynomial::k(), || {
        "χ of G/e is not k".into()
    })?;
    // the deleted graph counts weakly increasing triples, C(k+2, 3)
    let deleted = weak_chromatic_polynomial(&g.delete_edge(&e).unwrap());
    let triples = Polynomial::from_integers(&[0, 2, 3, 1]).scale(&(rational(1) / rational(6)));
    ensure(deleted == triples, || format!("χ of G-e is {deleted}"))?;
    let closed_form_at_2 = 4 * 3 * 2 / 3;

    let r = verify_weak_reciprocity(&g, 2, true).map_err(|e| e.to_string())?;
    let row = &r.rows[1];
    ensure(
        row.k == 2 && row.lhs == rational(-2) && row.rhs == rational(0) && !row.pass && !r.verdict,
        || format!("unexpected reciprocity table:\n{r}"),
    )?;
    ensure(verify_weak_reciprocity(&g, 2, false).is_err(), || {
        "cyclic graph was not refused".into()
    })?;
    Ok(format!(
        "χ = {engine}; χ(1..4) = 0,2,7,16; χ(G/e) = k; χ(G-e) = k(k+1)(k+2)/6 ({} at k=2, closed form (k+2)(k+1)k/3 gives {closed_form_at_2}); k=2 row lhs=-2 rhs=0 FAIL",
        deleted.evaluate(2)
    ))
}

fn weak_reciprocity() -> Outcome {
    let total = enumerate_mixed_graphs(4, GraphFilter::All).unwrap().count();
    ensure(total == 4096, || format!("4-vertex universe has {total} graphs"))?;
    let acyclic = enumerate_mixed_graphs(4, GraphFilter::AcyclicMixed).unwrap().count();
    let instances = sweep(Theorem::WeakReciprocity, 3)?;
    Ok(format!(
        "{instances} acyclic mixed graphs on 1..4 vertices ({acyclic} of 4096 at n=4), k=1..3, 0 failures"
    ))
}

fn strong_reciprocity() -> Outcome {
    let s = exhaustive_verify(3, 3, Theorem::StrongReciprocity).map_err(|e| e.to_string())?;
    ensure(s.universe == 64 && s.instances == 64 && s.ok(), || {
        format!("n=3: universe {} instances {} failures {}", s.universe, s.instances, s.failures.len())
    })?;
    let random = random_graphs(3, 500, &[4, 5]);
    for g in &random {
        let r = verify_strong_reciprocity(g, 3).map_err(|e| e.to_string())?;
        ensure(r.verdict, || format!("{r}"))?;
    }
    Ok("64 graphs on 3 vertices and 500 random graphs on 4-5 vertices, k=1..3, 0 failures".into())
}

fn order_reciprocity() -> Outcome {
    let instances = sweep(Theorem::StanleyOrder, 3)?;
    let mut rng = StdRng::seed_from_u64(4);
    let posets = enumerate_posets(5).map_err(|e| e.to_string())?;
    let mut labeled = 0;
    for p in &posets {
        for _ in 0..20 {
            let mut labels: Vec<usize> = (1..=p.len()).collect();
            labels.shuffle(&mut rng);
            let w = OmegaLabeling::new(p.clone(), labels).map_err(|e| e.to_string())?;
            let r = verify_order_reciprocity(&w, 3).map_err(|e| e.to_string())?;
            ensure(r.verdict, || format!("{r}"))?;
            labeled += 1;
        }
    }
    Ok(format!(
        "{instances} labeled posets on 1..4 elements (all labelings) and {labeled} on 5 elements ({} posets x 20 random labelings), k=1..3, 0 failures",
        posets.len()
    ))
}

fn orientation_lemmas() -> Outcome {
    let phi = sweep(Theorem::PhiSum, 3)?;
    let labeling = sweep(Theorem::OrientationLabeling, 3)?;
    Ok(format!(
        "φ-sum on {phi} graphs, orientation labelings on {labeling} graphs, k=1..3, 0 failures"
    ))
}

fn propositions() -> Outcome {
    let mut parts = Vec::new();
    for t in [
        Theorem::EdgeDeletionContraction,
        Theorem::ArcReversal,
        Theorem::StrongComponent,
        Theorem::SccContraction,
    ] {
        let instances = sweep(t, 3)?;
        ensure(instances > 0, || format!("{t}: no instances"))?;
        parts.push(format!("{t} {instances}"));
    }
    Ok(format!("{} identity checks, 0 failures", parts.join(", ")))
}

fn stanley_graph() -> Outcome {
    let small = sweep(Theorem::StanleyGraph, 3)?;
    let mut five = 0;
    for g in enumerate_mixed_graphs(5, GraphFilter::PureGraph).unwrap() {
        let r = verify_stanley_graph(&g, 3).map_err(|e| e.to_string())?;
        ensure(r.verdict, || format!("{r}"))?;
        five += 1;
    }
    let mut triangle = MixedGraph::new();
    triangle.add_edge("a", "b");
    triangle.add_edge("b", "c");
    triangle.add_edge("a", "c");
    let signed = -weak_chromatic_polynomial(&triangle).evaluate(-1);
    let acyclic = count_acyclic_orientations(&triangle);
    ensure(signed == rational(6) && acyclic == 6, || {
        format!("triangle: signed χ(-1) = {signed}, acyclic orientations {acyclic}")
    })?;
    Ok(format!(
        "{} pure graphs on 1..5 vertices, k=1..3 plus χ(-1) vs acyclic orientations; triangle gives 6",
        small + five
    ))
}

fn engine_oracle() -> Outcome {
    let mut graphs = small_universe();
    let checked_small = graphs.len();
    graphs.extend(random_graphs(8, 200, &[5]));
    for g in &graphs {
        let engine = weak_chromatic_polynomial(g);
        let oracle = weak_chromatic_via_oracle(g).map_err(|e| e.to_string())?;
        ensure(engine == oracle, || format!("{g}: engine {engine} oracle {oracle}"))?;
        let strong = strong_chromatic_polynomial(g);
        for k in 1..=4 {
            let brute = count_strong_colorings(g, k).unwrap() as i64;
            ensure(strong.evaluate(k) == rational(brute), || {
                format!("{g}: strong χ({k}) = {} but {brute} colorings", strong.evaluate(k))
            })?;
        }
    }
    Ok(format!(
        "{checked_small} graphs on 1..4 vertices and 200 random 5-vertex graphs; weak polynomials equal, strong values agree for k=1..4"
    ))
}

fn polynomiality_guard() -> Outcome {
    let mut graphs = small_universe();
    graphs.extend(random_graphs(8, 200, &[5]));
    let mut zero_at_zero = 0;
    for g in &graphs {
        let n = g.vertex_count();
        let resample = n as i64 + 2;
        for (p, count) in [
            (weak_chromatic_polynomial(g), count_weak_colorings(g, resample).unwrap()),
            (strong_chromatic_polynomial(g), count_strong_colorings(g, resample).unwrap()),
        ] {
            ensure(p.degree().is_none_or(|d| d <= n), || format!("{g}: degree of {p} exceeds {n}"))?;
            ensure(p.evaluate(resample) == rational(count as i64), || {
                format!("{g}: {p} misses the count {count} at k={resample}")
            })?;
            ensure(p.evaluate(0) == rational(0), || format!("{g}: {p} is nonzero at 0"))?;
            zero_at_zero += 1;
        }
    }
    Ok(format!(
        "{} graphs: weak and strong polynomials have degree <= |V|, match the count at k=|V|+2, and vanish at k=0 ({zero_at_zero} polynomials; observed, not a stated theorem)",
        graphs.len()
    ))
}

fn main() {
    std::env::set_var("RAYON_NUM_THREADS", "1");
    let criteria: [Criterion; 9] = [
        ("worked example", worked_example, Some(Duration::from_secs(1))),
        ("weak reciprocity, n<=4", weak_reciprocity, Some(Duration::from_secs(60))),
        ("strong reciprocity", strong_reciprocity, Some(Duration::from_secs(60))),
        ("order polynomial reciprocity", order_reciprocity, None),
        ("orientation sum and labelings", orientation_lemmas, None),
        ("deletion, reversal and contraction identities", propositions, None),
        ("graph reciprocity for pure graphs", stanley_graph, None),
        ("engine equals oracle", engine_oracle, None),
        ("polynomiality guard", polynomiality_guard, None),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(msg), Some(limit)) if elapsed > limit => {
                Err(format!("{msg}; took {elapsed:.2?}, limit {limit:?}"))
            }
            (o, _) => o,
        };
        match outcome {
            Ok(msg) => println!("PASS {} {name}: {msg} [{elapsed:.2?}]", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {} {name}: {msg} [{elapsed:.2?}]", i + 1);
            }
        }
    }
    println!("{} of 9 criteria passed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
