//! Induced saturation: `G ↪ H` when `G` has no induced `H` but every single
//! edge deletion and every single edge addition creates one.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::embedding::{contains_induced, find_embedding};
use crate::error::{Error, Result};
use crate::graph::enumerate::{graphs_up_to, DEFAULT_MAX_ORDER};
use crate::graph::{canonical_form, canonical_graph, to_graph6, Edge, Graph, CANON_MAX_VERTICES};
use crate::hamming::{build_capped, edge_representative, nonedge_representatives, HammingGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureKind {
    /// The host already contains a forbidden graph.
    ContainsH,
    /// Deleting this host edge creates no forbidden graph.
    DeletionMiss,
    /// Adding this host nonedge creates no forbidden graph.
    AdditionMiss,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SaturationFailure {
    pub kind: FailureKind,
    /// The modified pair for deletion and addition misses.
    pub edge: Option<Edge>,
    /// For `ContainsH`: which family member, and its embedding.
    pub member: Option<usize>,
    pub embedding: Option<Vec<usize>>,
}

impl SaturationFailure {
    fn contains(member: usize, map: Vec<usize>) -> Self {
        SaturationFailure {
            kind: FailureKind::ContainsH,
            edge: None,
            member: Some(member),
            embedding: Some(map),
        }
    }

    fn miss(kind: FailureKind, e: Edge) -> Self {
        SaturationFailure {
            kind,
            edge: Some(e),
            member: None,
            embedding: None,
        }
    }

    /// Re-check the certificate against the raw definition.
    pub fn replays(&self, g: &Graph, hs: &[Graph]) -> bool {
        let none_in = |x: &Graph| hs.iter().all(|h| !contains_induced(x, h));
        match (self.kind, self.edge, self.member, &self.embedding) {
            (FailureKind::ContainsH, _, Some(i), Some(map)) => {
                i < hs.len() && crate::embedding::is_induced_embedding(g, &hs[i], map)
            }
            (FailureKind::DeletionMiss, Some(e), ..) => {
                g.has_edge(e.a, e.b) && none_in(&g.toggled(e))
            }
            (FailureKind::AdditionMiss, Some(e), ..) => {
                !g.has_edge(e.a, e.b) && none_in(&g.toggled(e))
            }
            _ => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SaturationReport {
    pub holds: bool,
    pub failure: Option<SaturationFailure>,
}

impl SaturationReport {
    fn ok() -> Self {
        SaturationReport {
            holds: true,
            failure: None,
        }
    }

    fn fail(f: SaturationFailure) -> Self {
        SaturationReport {
            holds: false,
            failure: Some(f),
        }
    }
}

/// Definition-level check of `g ↪ h`, stopping at the first failure.
pub fn verify(g: &Graph, h: &Graph) -> SaturationReport {
    verify_family(g, std::slice::from_ref(h)).expect("family is nonempty")
}

/// Definition-level check of `g ↪ hs` for a family: `g` avoids every
/// member and each single-edge change creates some member.
pub fn verify_family(g: &Graph, hs: &[Graph]) -> Result<SaturationReport> {
    if hs.is_empty() {
        return Err(Error::contract("forbidden family must be nonempty"));
    }
    for (i, h) in hs.iter().enumerate() {
        if let Some(e) = find_embedding(g, h, None) {
            return Ok(SaturationReport::fail(SaturationFailure::contains(i, e.map)));
        }
    }
    let some_in = |x: &Graph| hs.iter().any(|h| contains_induced(x, h));
    for e in g.edges() {
        if !some_in(&g.toggled(e)) {
            return Ok(SaturationReport::fail(SaturationFailure::miss(
                FailureKind::DeletionMiss,
                e,
            )));
        }
    }
    for f in g.non_edges() {
        if !some_in(&g.toggled(f)) {
            return Ok(SaturationReport::fail(SaturationFailure::miss(
                FailureKind::AdditionMiss,
                f,
            )));
        }
    }
    Ok(SaturationReport::ok())
}

/// Every failure of `g ↪ h`, not only the first.
pub fn verify_all(g: &Graph, h: &Graph) -> Vec<SaturationFailure> {
    let mut out = Vec::new();
    if let Some(e) = find_embedding(g, h, None) {
        out.push(SaturationFailure::contains(0, e.map));
    }
    for e in g.edges() {
        if !contains_induced(&g.toggled(e), h) {
            out.push(SaturationFailure::miss(FailureKind::DeletionMiss, e));
        }
    }
    for f in g.non_edges() {
        if !contains_induced(&g.toggled(f), h) {
            out.push(SaturationFailure::miss(FailureKind::AdditionMiss, f));
        }
    }
    out
}

/// `□ⁿK_k ↪ h` using the Hamming symmetries: one addition per distance
/// class (for `n = 2`, one deletion from `h` embedding instead), and one
/// nonedge of `h` whose addition embeds in place of all deletions.
pub fn verify_hamming(hg: &HammingGraph, h: &Graph) -> SaturationReport {
    let g = &hg.graph;
    if let Some(e) = find_embedding(g, h, None) {
        return SaturationReport::fail(SaturationFailure::contains(0, e.map));
    }
    let reps = nonedge_representatives(hg);
    if hg.n == 2 && !reps.is_empty() {
        let any_deletion = h
            .edges()
            .into_iter()
            .any(|e| contains_induced(g, &h.toggled(e)));
        if !any_deletion {
            let (u, v) = &reps[0];
            let f = Edge::new(hg.index(u), hg.index(v));
            return SaturationReport::fail(SaturationFailure::miss(FailureKind::AdditionMiss, f));
        }
    } else {
        for (u, v) in &reps {
            let f = Edge::new(hg.index(u), hg.index(v));
            if !contains_induced(&g.toggled(f), h) {
                return SaturationReport::fail(SaturationFailure::miss(
                    FailureKind::AdditionMiss,
                    f,
                ));
            }
        }
    }
    if let Ok(rep) = edge_representative(hg) {
        let any_addition = h
            .non_edges()
            .into_iter()
            .any(|f| contains_induced(g, &h.toggled(f)));
        if !any_addition {
            return SaturationReport::fail(SaturationFailure::miss(FailureKind::DeletionMiss, rep));
        }
    }
    SaturationReport::ok()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Every edge and nonedge of the host.
    Definition,
    /// Symmetry-reduced checks on Hamming hosts.
    Hamming,
}

/// Least `k` in `2..=max_k` with `K_k □ K_k ↪ h`. The single vertex
/// `K_1 □ K_1` admits no edge change and is not considered.
pub fn least_saturating_square(h: &Graph, max_k: usize, method: Method) -> Result<Option<usize>> {
    for k in 2..=max_k {
        let hg = build_capped(2, k, usize::MAX)?;
        let holds = match method {
            Method::Definition => verify(&hg.graph, h).holds,
            Method::Hamming => verify_hamming(&hg, h).holds,
        };
        if holds {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Graphs on `2..=max_n` vertices that are saturated for the family, one
/// per isomorphism class, ordered by vertex count then canonical graph6.
/// Graphs on fewer than two vertices admit no edge change at all and are
/// skipped. Without a corpus every graph is generated in-process; orders
/// above `order_cap` are refused.
pub fn search_saturating_family(
    hs: &[Graph],
    max_n: usize,
    corpus: Option<&[Graph]>,
    order_cap: usize,
) -> Result<Vec<Graph>> {
    if hs.is_empty() {
        return Err(Error::contract("forbidden family must be nonempty"));
    }
    let generated;
    let pool: &[Graph] = match corpus {
        Some(c) => c,
        None => {
            if max_n > order_cap {
                return Err(Error::resource("exhaustive search order", order_cap as u64));
            }
            generated = graphs_up_to(max_n)?;
            &generated
        }
    };
    let hits: Vec<(usize, String, Graph)> = pool
        .par_iter()
        .filter(|g| (2..=max_n).contains(&g.order()))
        .filter(|g| verify_family(g, hs).expect("nonempty family").holds)
        .map(|g| {
            if g.order() <= CANON_MAX_VERTICES {
                let c = canonical_graph(g).expect("small graph");
                (g.order(), to_graph6(&c), c)
            } else {
                (g.order(), to_graph6(g), g.clone())
            }
        })
        .collect();
    let unique: BTreeMap<(usize, String), Graph> =
        hits.into_iter().map(|(n, s, g)| ((n, s), g)).collect();
    Ok(unique.into_values().collect())
}

pub fn search_saturating(h: &Graph, max_n: usize, corpus: Option<&[Graph]>) -> Result<Vec<Graph>> {
    search_saturating_family(std::slice::from_ref(h), max_n, corpus, DEFAULT_MAX_ORDER)
}

/// Cographs are exactly the graphs in which every induced subgraph on two
/// or more vertices is disconnected or has a disconnected complement.
pub fn is_cograph(g: &Graph) -> bool {
    let n = g.order();
    if n <= 1 {
        return true;
    }
    let comps = crate::graph::structure::components(g);
    if comps.len() > 1 {
        return comps.iter().all(|c| is_cograph(&g.induced_subgraph(c)));
    }
    let co = g.complement();
    let cocomps = crate::graph::structure::components(&co);
    if cocomps.len() > 1 {
        return cocomps.iter().all(|c| is_cograph(&g.induced_subgraph(c)));
    }
    false
}

/// Canonical graph6 of a graph for reporting and deduplication.
pub fn graph_key(g: &Graph) -> String {
    canonical_form(g).unwrap_or_else(|_| to_graph6(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate::graphs_up_to;
    use crate::graph::generators::*;
    use crate::hamming::build;
    use proptest::prelude::*;

    #[test]
    fn verify_examples() {
        assert!(verify(&complete(3), &path(3)).holds);
        assert!(verify(&Graph::empty(2), &complete(2)).holds);
        let r = verify(&cycle(4), &path(4));
        assert!(!r.holds);
        let f = r.failure.unwrap();
        assert_eq!(f.kind, FailureKind::AdditionMiss);
        assert!(f.replays(&cycle(4), &[path(4)]));
        let r = verify(&path(4), &path(4));
        assert_eq!(r.failure.unwrap().kind, FailureKind::ContainsH);
    }

    #[test]
    fn verify_hamming_examples() {
        let k4e = complete(4).with_edge_removed(Edge::new(0, 1)).unwrap();
        assert!(verify_hamming(&build(2, 4).unwrap(), &k4e).holds);
        assert!(verify(&build(2, 4).unwrap().graph, &k4e).holds);
        let hg = build(2, 2).unwrap();
        assert_eq!(verify_hamming(&hg, &path(3)).holds, verify(&hg.graph, &path(3)).holds);
    }

    #[test]
    fn verify_hamming_matches_definition() {
        let patterns = graphs_up_to(4).unwrap();
        for n in 1..=3 {
            for k in 1..=3 {
                let hg = build(n, k).unwrap();
                for h in &patterns {
                    let fast = verify_hamming(&hg, h);
                    let slow = verify(&hg.graph, h);
                    assert_eq!(fast.holds, slow.holds, "n={n} k={k} {h:?}");
                    if let Some(f) = fast.failure {
                        assert!(f.replays(&hg.graph, std::slice::from_ref(h)), "n={n} k={k} {h:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn family_examples() {
        let g = complete(3);
        assert_eq!(verify_family(&g, &[path(3)]).unwrap(), verify(&g, &path(3)));
        assert!(verify_family(&g, &[]).is_err());
        let fam = [cycle(4).complement(), cycle(4), cycle(5)];
        for g in graphs_up_to(6).unwrap().iter().filter(|g| g.order() >= 2) {
            assert!(!verify_family(g, &fam).unwrap().holds);
        }
        assert!(verify_family(&Graph::empty(1), &fam).unwrap().holds);
        let r = verify_family(&cycle(5), &fam).unwrap();
        assert_eq!(r.failure.unwrap().kind, FailureKind::ContainsH);
    }

    #[test]
    fn search_examples() {
        assert!(search_saturating(&path(4), 6, None).unwrap().is_empty());
        let k2 = search_saturating(&complete(2), 2, None).unwrap();
        assert!(k2.contains(&Graph::empty(2)));
        let p3 = search_saturating(&path(3), 3, None).unwrap();
        assert!(p3.iter().any(|g| crate::graph::are_isomorphic(g, &complete(3))));
        assert!(matches!(search_saturating(&path(3), 9, None), Err(Error::Resource { .. })));
        let corpus = vec![complete(3), path(3), complete(3)];
        assert_eq!(search_saturating(&path(3), 20, Some(&corpus)).unwrap().len(), 1);
    }

    #[test]
    fn cograph_examples() {
        assert!(is_cograph(&complete(4)));
        assert!(is_cograph(&Graph::empty(4)));
        assert!(is_cograph(&cycle(4)));
        assert!(!is_cograph(&path(4)));
        assert!(!is_cograph(&cycle(5)));
        for g in graphs_up_to(7).unwrap() {
            assert_eq!(is_cograph(&g), !contains_induced(&g, &path(4)));
        }
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut g = Graph::empty(n);
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits[k] {
                            g.set_edge(i, j, true);
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]
        #[test]
        fn complement_duality(g in arb_graph(6), h in arb_graph(4)) {
            prop_assert_eq!(verify(&g, &h).holds, verify(&g.complement(), &h.complement()).holds);
        }

        #[test]
        fn failures_replay(g in arb_graph(6), h in arb_graph(4)) {
            let r = verify(&g, &h);
            prop_assert_eq!(r.holds, r.failure.is_none());
            if let Some(f) = r.failure {
                prop_assert!(f.replays(&g, std::slice::from_ref(&h)));
            }
            prop_assert_eq!(verify_all(&g, &h).is_empty(), verify(&g, &h).holds);
        }
    }
}
