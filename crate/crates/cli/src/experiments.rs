//! Canned, reproducible experiment runners. Each returns a JSON summary
//! carrying its caps and whether every check passed.

use rayon::prelude::*;
use serde_json::{json, Value};

use indsat::classifier::classify;
use indsat::coloring::{dimension, verify_nice, Budget};
use indsat::constructions::{
    class_f_coloring, class_f_embedding, class_f_instance, class_f_min_k, class_h_coloring,
    class_h_embedding, class_h_plan, leg_color_lists, least_saturating_power, recognize_class_h,
};
use indsat::decomposition::min_k;
use indsat::graph::enumerate::{connected_graphs_up_to, graphs_up_to, HARD_MAX_ORDER};
use indsat::graph::generators::{complete, cycle, path, star};
use indsat::graph::{to_graph6, Graph};
use indsat::hamming::{build, edge_deletions_isomorphic, equal_distance_additions_isomorphic};
use indsat::modular::{full_vertices, is_prime, prime_blowup_check};
use indsat::saturation::{least_saturating_square, search_saturating, search_saturating_family, Method};
use indsat::{contains_induced, Result};

pub const NAMES: &[&str] = &[
    "p4-sweep",
    "p4-c4-sweep",
    "full-vertex",
    "classify-replay",
    "class-h-demo",
    "class-f-demo",
    "hamming-symmetry",
    "square-oracle",
    "prime-blowup",
];

pub struct Caps {
    pub max_n: Option<usize>,
    pub max_k: Option<usize>,
    pub corpus: Option<Vec<Graph>>,
    pub budget: Budget,
}

pub fn run(name: &str, caps: &Caps) -> Result<(Value, bool)> {
    match name {
        "p4-sweep" => sweep(caps, &[path(4)]),
        "p4-c4-sweep" => sweep(caps, &[path(4), cycle(4)]),
        "full-vertex" => full_vertex(caps),
        "classify-replay" => classify_replay(caps),
        "class-h-demo" => class_h_demo(caps),
        "class-f-demo" => class_f_demo(caps),
        "hamming-symmetry" => hamming_symmetry(caps),
        "square-oracle" => square_oracle(caps),
        "prime-blowup" => prime_blowup(caps),
        _ => Err(indsat::Error::Contract(format!(
            "unknown experiment '{name}'; expected one of {}",
            NAMES.join(", ")
        ))),
    }
}

fn g6s(gs: &[Graph]) -> Vec<String> {
    gs.iter().map(to_graph6).collect()
}

/// Saturated graphs for the family on `2..=max_n` vertices.
fn sweep(caps: &Caps, family: &[Graph]) -> Result<(Value, bool)> {
    let max_n = caps.max_n.unwrap_or(6);
    let found = search_saturating_family(family, max_n, caps.corpus.as_deref(), HARD_MAX_ORDER)?;
    let v = json!({
        "forbidden": g6s(family),
        "caps": {"max_n": max_n, "corpus": caps.corpus.as_ref().map(Vec::len)},
        "found": found.len(),
        "graphs": g6s(&found),
    });
    Ok((v, found.is_empty()))
}

/// Every connected graph without induced `P4` or `C4` has a full vertex.
fn full_vertex(caps: &Caps) -> Result<(Value, bool)> {
    let max_n = caps.max_n.unwrap_or(7);
    let (p4, c4) = (path(4), cycle(4));
    let pool: Vec<Graph> = connected_graphs_up_to(max_n)?
        .into_par_iter()
        .filter(|g| !contains_induced(g, &p4) && !contains_induced(g, &c4))
        .collect();
    let failures: Vec<Graph> = pool.iter().filter(|g| full_vertices(g).is_empty()).cloned().collect();
    let v = json!({
        "caps": {"max_n": max_n},
        "checked": pool.len(),
        "failures": g6s(&failures),
    });
    Ok((v, failures.is_empty()))
}

/// Every positive verdict is confirmed by a saturating `K_k □ K_k`.
fn classify_replay(caps: &Caps) -> Result<(Value, bool)> {
    let max_n = caps.max_n.unwrap_or(5);
    let max_k = caps.max_k.unwrap_or(6);
    let pool = match &caps.corpus {
        Some(c) => c.clone(),
        None => connected_graphs_up_to(max_n)?,
    };
    let rows: Vec<(String, bool, Option<usize>)> = pool
        .par_iter()
        .map(|h| -> Result<_> {
            let good = classify(h)?.is_good();
            let k = if good { least_saturating_square(h, max_k, Method::Hamming)? } else { None };
            Ok((to_graph6(h), good, k))
        })
        .collect::<Result<_>>()?;
    let positives = rows.iter().filter(|r| r.1).count();
    let unconfirmed: Vec<&String> = rows.iter().filter(|r| r.1 && r.2.is_none()).map(|r| &r.0).collect();
    let v = json!({
        "caps": {"max_n": max_n, "max_k": max_k, "corpus": caps.corpus.as_ref().map(Vec::len)},
        "graphs": rows.len(),
        "positive": positives,
        "unconfirmed": unconfirmed,
    });
    Ok((v, unconfirmed.is_empty()))
}

fn class_h_demo(caps: &Caps) -> Result<(Value, bool)> {
    let max_k = caps.max_k.unwrap_or(8);
    let h = star(4);
    let n = 3;
    let hw = recognize_class_h(&h, n, caps.budget)?
        .ok_or_else(|| indsat::Error::Contract("star is not in class H".into()))?;
    let mut classes = Vec::new();
    let mut ok = true;
    for q in 2..=n {
        let plan = class_h_plan(&h, &hw, q)?;
        let emb = class_h_embedding(&h, &hw, &plan)?;
        let verified = emb.verify(&h)?;
        ok &= verified;
        classes.push(json!({"q": q, "k": plan.k, "w": plan.w, "x": plan.x, "tuples": emb.tuples, "verified": verified}));
    }
    let (plus, f, c) = class_h_coloring(&h, &hw, caps.budget)?;
    let nice = verify_nice(&plus, &c, caps.budget.paths_per_pair)?.is_ok();
    let k = least_saturating_power(&h, n, max_k)?;
    ok &= nice && k.is_some();
    let v = json!({
        "graph": to_graph6(&h),
        "n": n,
        "caps": {"max_k": max_k},
        "witness": hw,
        "embeddings": classes,
        "added_edge": [f.a, f.b],
        "coloring": c.triples(),
        "coloring_nice": nice,
        "least_k": k,
    });
    Ok((v, ok))
}

fn class_f_demo(caps: &Caps) -> Result<(Value, bool)> {
    let mut rows = Vec::new();
    let mut ok = true;
    for (n, f) in [(3, complete(4)), (4, path(5))] {
        let attach: Vec<usize> = (0..=n).collect();
        let (h, w) = class_f_instance(n, &f, &attach)?;
        let k = class_f_min_k(&h, &w)?;
        let mut classes = Vec::new();
        for q in 2..=n {
            let verified = class_f_embedding(&h, &w, q, k)?.verify(&h)?;
            ok &= verified;
            classes.push(json!({"q": q, "verified": verified}));
        }
        let (plus, _, c) = class_f_coloring(&h, &w, caps.budget)?;
        let nice = verify_nice(&plus, &c, caps.budget.paths_per_pair)?.is_ok();
        ok &= nice;
        rows.push(json!({
            "n": n,
            "f": to_graph6(&f),
            "graph": to_graph6(&h),
            "k": k,
            "embeddings": classes,
            "leg_colors": leg_color_lists(&w, &c),
            "coloring_nice": nice,
        }));
    }
    Ok((json!({"instances": rows}), ok))
}

fn hamming_symmetry(caps: &Caps) -> Result<(Value, bool)> {
    let top = caps.max_k.unwrap_or(3);
    let mut rows = Vec::new();
    let mut ok = true;
    for n in 1..=top {
        for k in 1..=top {
            let hg = build(n, k)?;
            let del = edge_deletions_isomorphic(&hg);
            let add = equal_distance_additions_isomorphic(&hg);
            ok &= del && add;
            rows.push(json!({"n": n, "k": k, "deletions": del, "additions": add}));
        }
    }
    Ok((json!({"caps": {"max_n": top, "max_k": top}, "cases": rows}), ok))
}

/// `dim ≤ 2` agrees with containment in `K_m □ K_m`, and the least such
/// `k` agrees with the decomposition count.
fn square_oracle(caps: &Caps) -> Result<(Value, bool)> {
    let max_n = caps.max_n.unwrap_or(6);
    let host = build(2, max_n)?;
    let squares: Vec<Graph> = (1..=max_n).map(|k| build(2, k).map(|h| h.graph)).collect::<Result<_>>()?;
    let pool = graphs_up_to(max_n)?;
    let mismatches: Vec<String> = pool
        .par_iter()
        .map(|g| -> Result<Option<String>> {
            let two = dimension(g, caps.budget)?.0.at_most(2);
            let inside = contains_induced(&host.graph, g);
            let least = squares.iter().position(|s| contains_induced(s, g)).map(|i| i + 1);
            let k = min_k(g).map(|m| m.k);
            Ok((two != inside || k != least).then(|| to_graph6(g)))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let v = json!({
        "caps": {"max_n": max_n},
        "graphs": pool.len(),
        "mismatches": mismatches,
    });
    Ok((v, mismatches.is_empty()))
}

/// Saturated graphs for prime forbidden graphs, each pair replayed
/// through the blowup check: `C5` against every graph on up to `max_n`
/// vertices, and every prime graph on 4 or 5 vertices against graphs on
/// up to 7 vertices plus the squares `K_k □ K_k`, `k ≤ max_k`. Finding no
/// pair is reported, not treated as a failure.
fn prime_blowup(caps: &Caps) -> Result<(Value, bool)> {
    let max_n = caps.max_n.unwrap_or(8);
    let max_k = caps.max_k.unwrap_or(3);
    let c5 = cycle(5);
    let mut pairs: Vec<(Graph, Graph)> = search_saturating(&c5, max_n, caps.corpus.as_deref())?
        .into_iter()
        .map(|g| (g, c5.clone()))
        .collect();
    let c5_found = pairs.len();
    let mut pool = graphs_up_to(7)?;
    for k in 2..=max_k {
        pool.push(build(2, k)?.graph);
    }
    let primes: Vec<Graph> = connected_graphs_up_to(5)?
        .into_iter()
        .filter(|h| h.order() >= 4 && is_prime(h))
        .collect();
    for h in &primes {
        for g in search_saturating_family(std::slice::from_ref(h), usize::MAX, Some(&pool), HARD_MAX_ORDER)? {
            pairs.push((g, h.clone()));
        }
    }
    let mut rows = Vec::new();
    let mut ok = true;
    for (g, h) in &pairs {
        let r = prime_blowup_check(g, h)?;
        ok &= r.holds();
        rows.push(json!({"graph": to_graph6(g), "forbidden": to_graph6(h), "graph_prime": is_prime(g), "report": r}));
    }
    let v = json!({
        "caps": {"max_n": max_n, "max_k": max_k, "prime_forbidden_orders": [4, 5], "corpus_orders": 7},
        "c5_found": c5_found,
        "prime_forbidden": g6s(&primes),
        "found": pairs.len(),
        "pairs": rows,
    });
    Ok((v, ok))
}
