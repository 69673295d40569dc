//! Connectivity, cliques, cut structure and girth.

use std::collections::VecDeque;

use super::{Edge, Graph, VertexSet};

/// Connected components, each sorted, listed by least vertex.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            i += 1;
            for w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Component index of every vertex, numbered as in [`components`].
pub fn component_labels(g: &Graph) -> Vec<usize> {
    let mut label = vec![0; g.order()];
    for (i, c) in components(g).iter().enumerate() {
        for &v in c {
            label[v] = i;
        }
    }
    label
}

pub fn is_connected(g: &Graph) -> bool {
    components(g).len() <= 1
}

/// Maximal cliques by Bron–Kerbosch with pivoting; the pivot is the
/// lowest-index vertex of `P ∪ X` with the most neighbors in `P`.
/// Output is sorted lexicographically.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut r = Vec::new();
    bron_kerbosch(g, &mut r, VertexSet::full(n), VertexSet::empty(n), &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn bron_kerbosch(
    g: &Graph,
    r: &mut Vec<usize>,
    mut p: VertexSet,
    mut x: VertexSet,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    let mut px = p.clone();
    px.union_with(x.words());
    let pivot = px
        .iter()
        .map(|u| {
            let mut s = p.clone();
            s.intersect_with(g.row(u));
            (s.len(), u)
        })
        .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
        .expect("P is nonempty")
        .1;
    let mut cand = p.clone();
    cand.difference_with(g.row(pivot));
    for v in cand.iter() {
        let mut np = p.clone();
        np.intersect_with(g.row(v));
        let mut nx = x.clone();
        nx.intersect_with(g.row(v));
        r.push(v);
        bron_kerbosch(g, r, np, nx, out);
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

fn component_count_without(g: &Graph, skip_v: Option<usize>, skip_e: Option<Edge>) -> usize {
    let n = g.order();
    let mut seen = vec![false; n];
    if let Some(v) = skip_v {
        seen[v] = true;
    }
    let mut count = 0;
    let mut queue = VecDeque::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if seen[w] || skip_e == Some(Edge::new(v, w)) {
                    continue;
                }
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    count
}

/// Vertices whose removal increases the number of components.
pub fn cut_vertices(g: &Graph) -> Vec<usize> {
    let base = components(g).len();
    (0..g.order())
        .filter(|&v| component_count_without(g, Some(v), None) > base)
        .collect()
}

/// Edges whose removal increases the number of components.
pub fn bridges(g: &Graph) -> Vec<Edge> {
    let base = components(g).len();
    g.edges()
        .into_iter()
        .filter(|&e| component_count_without(g, None, Some(e)) > base)
        .collect()
}

pub fn is_forest(g: &Graph) -> bool {
    g.size() + components(g).len() == g.order()
}

pub fn is_tree(g: &Graph) -> bool {
    g.order() >= 1 && is_connected(g) && is_forest(g)
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if parent[v] != w {
                    let len = dist[v] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Graph with all edges inside `vs` removed.
pub fn without_clique_edges(g: &Graph, vs: &[usize]) -> Graph {
    let mut h = g.clone();
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            h.set_edge(a, b, false);
        }
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;
    use crate::graph::subdivide;
    use proptest::prelude::*;

    #[test]
    fn component_examples() {
        assert_eq!(components(&Graph::empty(2)), vec![vec![0], vec![1]]);
        assert_eq!(components(&path(3)), vec![vec![0, 1, 2]]);
        let g = complete(3).disjoint_union(&complete(2));
        let sizes: Vec<usize> = components(&g).iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![3, 2]);
    }

    #[test]
    fn clique_examples() {
        assert_eq!(maximal_cliques(&complete(3)), vec![vec![0, 1, 2]]);
        assert_eq!(maximal_cliques(&path(3)), vec![vec![0, 1], vec![1, 2]]);
        let k4e = complete(4).with_edge_removed(Edge::new(0, 1)).unwrap();
        assert_eq!(maximal_cliques(&k4e), vec![vec![0, 2, 3], vec![1, 2, 3]]);
        assert_eq!(maximal_cliques(&Graph::empty(2)), vec![vec![0], vec![1]]);
    }

    #[test]
    fn cut_examples() {
        assert_eq!(cut_vertices(&path(3)), vec![1]);
        assert_eq!(bridges(&path(3)), vec![Edge::new(0, 1), Edge::new(1, 2)]);
        assert!(cut_vertices(&cycle(4)).is_empty() && bridges(&cycle(4)).is_empty());
        assert_eq!(cut_vertices(&star(3)), vec![0]);
        assert_eq!(bridges(&star(3)).len(), 3);
    }

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&cycle(7)), Some(7));
        assert_eq!(girth(&complete(4)), Some(3));
        assert_eq!(girth(&path(5)), None);
        assert_eq!(girth(&complete_bipartite(3, 3)), Some(4));
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

    fn naive_is_clique(g: &Graph, c: &[usize]) -> bool {
        c.iter()
            .enumerate()
            .all(|(i, &a)| c[i + 1..].iter().all(|&b| g.has_edge(a, b)))
    }

    proptest! {
        #[test]
        fn cliques_cover_edges_and_are_maximal(g in arb_graph(9)) {
            let cl = maximal_cliques(&g);
            for e in g.edges() {
                prop_assert!(cl.iter().any(|c| c.contains(&e.a) && c.contains(&e.b)));
            }
            for (i, c) in cl.iter().enumerate() {
                prop_assert!(naive_is_clique(&g, c));
                for (j, d) in cl.iter().enumerate() {
                    prop_assert!(i == j || !c.iter().all(|v| d.contains(v)));
                }
            }
            let mut sorted = cl.clone();
            sorted.sort();
            prop_assert_eq!(sorted, cl);
        }

        #[test]
        fn subdivision_girth_and_forests(g in arb_graph(7), k in 0usize..3) {
            let s = subdivide(&g, k);
            prop_assert_eq!(s.order(), g.order() + k * g.size());
            prop_assert_eq!(is_forest(&s), is_forest(&g));
            if let Some(gg) = girth(&g) {
                prop_assert!(girth(&s).unwrap() >= (k + 1) * gg);
            }
        }
    }
}
