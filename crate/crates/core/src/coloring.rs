//! Nice edge colorings and the dimension they certify.
//!
//! A coloring with palette `[n]` is nice when every triangle is
//! monochromatic and every nonadjacent pair has two distinct palette colors
//! that each appear on every induced path between the pair.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{structure, Edge, Graph, VertexSet};

pub const DEFAULT_PATH_BUDGET: u64 = 1_000_000;
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;
/// Palettes are bit masks, so at most this many colors are searched.
pub const MAX_PALETTE: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Induced paths enumerated per vertex pair.
    pub paths_per_pair: u64,
    /// Backtracking nodes per coloring search.
    pub search_nodes: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            paths_per_pair: DEFAULT_PATH_BUDGET,
            search_nodes: DEFAULT_NODE_BUDGET,
        }
    }
}

/// Colors are `1..=palette`; `colors` is sorted by edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NiceColoring {
    pub palette: usize,
    pub colors: Vec<(Edge, usize)>,
}

impl NiceColoring {
    pub fn new(palette: usize, mut colors: Vec<(Edge, usize)>) -> Self {
        colors.sort();
        NiceColoring { palette, colors }
    }

    pub fn color(&self, e: Edge) -> Option<usize> {
        self.colors
            .binary_search_by_key(&e, |&(f, _)| f)
            .ok()
            .map(|i| self.colors[i].1)
    }

    fn color_of(&self, a: usize, b: usize) -> usize {
        self.color(Edge::new(a, b)).expect("coloring is total")
    }

    /// `[a, b, color]` triples in edge order.
    pub fn triples(&self) -> Vec<[usize; 3]> {
        self.colors.iter().map(|&(e, c)| [e.a, e.b, c]).collect()
    }
}

/// Serialized as the number, or the string `"infinite"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dimension {
    Finite(usize),
    Infinite,
}

impl Serialize for Dimension {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Dimension::Finite(d) => s.serialize_u64(*d as u64),
            Dimension::Infinite => s.serialize_str("infinite"),
        }
    }
}

impl Dimension {
    pub fn at_most(self, n: usize) -> bool {
        matches!(self, Dimension::Finite(d) if d <= n)
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dimension::Finite(d) => write!(f, "{d}"),
            Dimension::Infinite => write!(f, "infinite"),
        }
    }
}

/// Why a coloring is not nice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NiceViolation {
    /// An edge has no color or a color outside the palette.
    BadColor { edge: Edge },
    /// A triangle carries two different colors.
    Triangle { vertices: [usize; 3] },
    /// Fewer than two palette colors lie on every induced path of the pair.
    Pair { u: usize, v: usize, common: Vec<usize> },
}

/// Every induced `u,v`-path as a vertex sequence starting at `u`.
pub fn induced_paths(g: &Graph, u: usize, v: usize, budget: u64) -> Result<Vec<Vec<usize>>> {
    assert_ne!(u, v, "induced paths need distinct endpoints");
    let mut out = Vec::new();
    let mut path = vec![u];
    let blocked = VertexSet::empty(g.order());
    walk(g, v, &mut path, &blocked, budget, &mut out)?;
    Ok(out)
}

/// `blocked` holds every vertex adjacent to or on the path, excluding the
/// last vertex's own neighborhood.
fn walk(
    g: &Graph,
    v: usize,
    path: &mut Vec<usize>,
    blocked: &VertexSet,
    budget: u64,
    out: &mut Vec<Vec<usize>>,
) -> Result<()> {
    let last = *path.last().expect("path is nonempty");
    if g.has_edge(last, v) {
        if out.len() as u64 >= budget {
            return Err(Error::resource("induced paths per vertex pair", budget));
        }
        let mut p = path.clone();
        p.push(v);
        out.push(p);
        return Ok(());
    }
    let mut next_blocked = blocked.clone();
    next_blocked.insert(last);
    next_blocked.union_with(g.row(last));
    let mut cand = g.neighbor_set(last);
    cand.difference_with(blocked.words());
    for w in cand.iter() {
        if path.contains(&w) {
            continue;
        }
        path.push(w);
        walk(g, v, path, &next_blocked, budget, out)?;
        path.pop();
    }
    Ok(())
}

/// Edge indices (into `g.edges()`) grouped into triangle classes: edges of a
/// common triangle share a class. Classes are numbered by least edge.
fn triangle_classes(g: &Graph, edges: &[Edge]) -> Vec<usize> {
    let m = edges.len();
    let idx = |a: usize, b: usize| {
        edges
            .binary_search(&Edge::new(a, b))
            .expect("edge of the graph")
    };
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let nx = p[y];
            p[y] = r;
            y = nx;
        }
        r
    }
    for (i, e) in edges.iter().enumerate() {
        let mut common = g.neighbor_set(e.a);
        common.intersect_with(g.row(e.b));
        for w in common.iter() {
            for j in [idx(e.a, w), idx(e.b, w)] {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri.max(rj)] = ri.min(rj);
                }
            }
        }
    }
    let mut label = vec![usize::MAX; m];
    let mut next = 0;
    let class: Vec<usize> = (0..m)
        .map(|i| {
            let r = find(&mut parent, i);
            if label[r] == usize::MAX {
                label[r] = next;
                next += 1;
            }
            label[r]
        })
        .collect();
    class
}

fn has_nonadjacent_pair(g: &Graph) -> bool {
    g.size() < g.order() * g.order().saturating_sub(1) / 2
}

/// Smallest palette that can possibly be nice: two colors must exist once
/// some pair is nonadjacent, one once there is an edge.
pub fn palette_floor(g: &Graph) -> usize {
    if has_nonadjacent_pair(g) {
        2
    } else if g.size() > 0 {
        1
    } else {
        0
    }
}

pub fn verify_nice(
    g: &Graph,
    coloring: &NiceColoring,
    budget: u64,
) -> Result<std::result::Result<(), NiceViolation>> {
    let n = coloring.palette;
    for e in g.edges() {
        match coloring.color(e) {
            Some(c) if (1..=n).contains(&c) => {}
            _ => return Ok(Err(NiceViolation::BadColor { edge: e })),
        }
    }
    for e in g.edges() {
        for w in g.neighbors(e.b).filter(|&w| w > e.b && g.has_edge(e.a, w)) {
            let c = coloring.color_of(e.a, e.b);
            if coloring.color_of(e.a, w) != c || coloring.color_of(e.b, w) != c {
                return Ok(Err(NiceViolation::Triangle {
                    vertices: [e.a, e.b, w],
                }));
            }
        }
    }
    for f in g.non_edges() {
        let common = common_colors(g, coloring, f.a, f.b, budget)?;
        if common.len() < 2 {
            return Ok(Err(NiceViolation::Pair {
                u: f.a,
                v: f.b,
                common,
            }));
        }
    }
    Ok(Ok(()))
}

/// Palette colors present on every induced `u,v`-path, ascending.
pub fn common_colors(
    g: &Graph,
    coloring: &NiceColoring,
    u: usize,
    v: usize,
    budget: u64,
) -> Result<Vec<usize>> {
    let mut common: Vec<usize> = (1..=coloring.palette).collect();
    for p in induced_paths(g, u, v, budget)? {
        let on: Vec<usize> = p.windows(2).map(|w| coloring.color_of(w[0], w[1])).collect();
        common.retain(|c| on.contains(c));
    }
    Ok(common)
}

/// Least color appearing on every induced `u,v`-path.
pub fn common_color(
    g: &Graph,
    coloring: &NiceColoring,
    u: usize,
    v: usize,
    budget: u64,
) -> Result<Option<usize>> {
    Ok(common_colors(g, coloring, u, v, budget)?.first().copied())
}

struct PairPaths {
    /// Each path as the sorted, deduplicated list of its edge classes.
    paths: Vec<Vec<usize>>,
}

/// Lexicographically least nice coloring with palette `[n]`, in the order
/// of `g.edges()`, if one exists.
pub fn search_nice(g: &Graph, n: usize, budget: Budget) -> Result<Option<NiceColoring>> {
    if n > MAX_PALETTE {
        return Err(Error::resource("nice coloring palette size", MAX_PALETTE as u64));
    }
    if n < palette_floor(g) {
        return Ok(None);
    }
    let edges = g.edges();
    let class = triangle_classes(g, &edges);
    let classes = class.iter().max().map_or(0, |&c| c + 1);
    let edge_index = |a: usize, b: usize| edges.binary_search(&Edge::new(a, b)).expect("edge");

    let mut pairs: Vec<PairPaths> = Vec::new();
    let labels = structure::component_labels(g);
    for f in g.non_edges() {
        if labels[f.a] != labels[f.b] {
            continue;
        }
        let mut paths: Vec<Vec<usize>> = induced_paths(g, f.a, f.b, budget.paths_per_pair)?
            .iter()
            .map(|p| {
                let mut cs: Vec<usize> =
                    p.windows(2).map(|w| class[edge_index(w[0], w[1])]).collect();
                cs.sort_unstable();
                cs.dedup();
                cs
            })
            .collect();
        paths.sort_by_key(|p| (p.len(), p.clone()));
        paths.dedup();
        // a path whose classes contain another path's classes adds nothing
        let mut kept: Vec<Vec<usize>> = Vec::new();
        for p in paths {
            if !kept.iter().any(|q| q.iter().all(|c| p.contains(c))) {
                kept.push(p);
            }
        }
        if kept.iter().any(|p| p.len() < 2) {
            return Ok(None);
        }
        pairs.push(PairPaths { paths: kept });
    }
    let mut pairs_of_class: Vec<Vec<usize>> = vec![Vec::new(); classes];
    for (pi, pp) in pairs.iter().enumerate() {
        let mut touched: Vec<usize> = pp.paths.iter().flatten().copied().collect();
        touched.sort_unstable();
        touched.dedup();
        for c in touched {
            pairs_of_class[c].push(pi);
        }
    }

    let mut state = Search {
        pairs: &pairs,
        pairs_of_class: &pairs_of_class,
        n,
        color: vec![0; classes],
        nodes: 0,
        budget: budget.search_nodes,
    };
    if !state.assign(0, 0)? {
        return Ok(None);
    }
    let colors = edges
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, state.color[class[i]]))
        .collect();
    Ok(Some(NiceColoring::new(n, colors)))
}

struct Search<'a> {
    pairs: &'a [PairPaths],
    pairs_of_class: &'a [Vec<usize>],
    n: usize,
    /// 0 = unassigned.
    color: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn palette_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    fn pair_ok(&self, pi: usize) -> bool {
        let mut mask = self.palette_mask();
        for p in &self.pairs[pi].paths {
            let mut on = 0u64;
            for &c in p {
                if self.color[c] == 0 {
                    on = u64::MAX;
                    break;
                }
                on |= 1 << (self.color[c] - 1);
            }
            mask &= on;
            if mask.count_ones() < 2 {
                return false;
            }
        }
        true
    }

    /// Colors class `c` onwards; new colors only as `max_used + 1`.
    fn assign(&mut self, c: usize, max_used: usize) -> Result<bool> {
        if c == self.color.len() {
            return Ok(true);
        }
        for col in 1..=self.n.min(max_used + 1) {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::resource("nice coloring search nodes", self.budget));
            }
            self.color[c] = col;
            if self.pairs_of_class[c].iter().all(|&pi| self.pair_ok(pi))
                && self.assign(c + 1, max_used.max(col))?
            {
                return Ok(true);
            }
        }
        self.color[c] = 0;
        Ok(false)
    }
}

/// Least `n` admitting a nice coloring, with a witness.
pub fn dimension(g: &Graph, budget: Budget) -> Result<(Dimension, Option<NiceColoring>)> {
    let floor = palette_floor(g);
    if floor == 0 {
        return Ok((Dimension::Finite(0), Some(NiceColoring::new(0, Vec::new()))));
    }
    let edges = g.edges();
    let classes = triangle_classes(g, &edges)
        .iter()
        .max()
        .map_or(0, |&c| c + 1);
    let top = classes.max(floor);
    if search_nice(g, top, budget)?.is_none() {
        return Ok((Dimension::Infinite, None));
    }
    for n in floor..=top {
        if let Some(c) = search_nice(g, n, budget)? {
            return Ok((Dimension::Finite(n), Some(c)));
        }
    }
    unreachable!("a palette of {top} colors succeeded")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;
    use proptest::prelude::*;

    fn col(g: &Graph, f: impl Fn(Edge) -> usize, n: usize) -> NiceColoring {
        NiceColoring::new(n, g.edges().into_iter().map(|e| (e, f(e))).collect())
    }

    /// Independent oracle: all simple paths, kept when induced.
    fn naive_induced_paths(g: &Graph, u: usize, v: usize) -> Vec<Vec<usize>> {
        fn rec(g: &Graph, v: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            let last = *path.last().unwrap();
            if last == v {
                let induced = (0..path.len()).all(|i| {
                    (i + 2..path.len()).all(|j| !g.has_edge(path[i], path[j]))
                });
                if induced {
                    out.push(path.clone());
                }
                return;
            }
            for w in 0..g.order() {
                if g.has_edge(last, w) && !path.contains(&w) {
                    path.push(w);
                    rec(g, v, path, out);
                    path.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(g, v, &mut vec![u], &mut out);
        out.sort();
        out
    }

    fn naive_is_nice(g: &Graph, c: &NiceColoring) -> bool {
        let colors_on = |p: &Vec<usize>| -> Vec<usize> {
            p.windows(2).map(|w| c.color(Edge::new(w[0], w[1])).unwrap()).collect()
        };
        for a in 0..g.order() {
            for b in a + 1..g.order() {
                for d in b + 1..g.order() {
                    if g.has_edge(a, b) && g.has_edge(b, d) && g.has_edge(a, d) {
                        let x = c.color(Edge::new(a, b));
                        if c.color(Edge::new(b, d)) != x || c.color(Edge::new(a, d)) != x {
                            return false;
                        }
                    }
                }
                if !g.has_edge(a, b) {
                    let paths = naive_induced_paths(g, a, b);
                    let good = (1..=c.palette)
                        .filter(|&i| paths.iter().all(|p| colors_on(p).contains(&i)))
                        .count();
                    if good < 2 {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[test]
    fn path_examples() {
        let b = DEFAULT_PATH_BUDGET;
        assert_eq!(induced_paths(&cycle(5), 0, 2, b).unwrap().len(), 2);
        assert_eq!(induced_paths(&complete(4), 1, 3, b).unwrap(), vec![vec![1, 3]]);
        assert_eq!(induced_paths(&path(5), 0, 4, b).unwrap().len(), 1);
        assert!(induced_paths(&Graph::empty(2), 0, 1, b).unwrap().is_empty());
        assert!(matches!(
            induced_paths(&cycle(6), 0, 3, 1),
            Err(Error::Resource { .. })
        ));
    }

    #[test]
    fn verify_examples() {
        let b = DEFAULT_PATH_BUDGET;
        assert!(verify_nice(&complete(3), &col(&complete(3), |_| 1, 1), b).unwrap().is_ok());
        let p3 = path(3);
        assert!(matches!(
            verify_nice(&p3, &col(&p3, |_| 1, 2), b).unwrap(),
            Err(NiceViolation::Pair { u: 0, v: 2, .. })
        ));
        let c4 = cycle(4);
        let opposite = col(&c4, |e| if e == Edge::new(0, 1) || e == Edge::new(2, 3) { 1 } else { 2 }, 2);
        assert!(verify_nice(&c4, &opposite, b).unwrap().is_ok());
        let tri = col(&complete(3), |e| if e.a == 0 { 1 } else { 2 }, 2);
        assert!(matches!(
            verify_nice(&complete(3), &tri, b).unwrap(),
            Err(NiceViolation::Triangle { .. })
        ));
        assert!(matches!(
            verify_nice(&p3, &col(&p3, |_| 3, 2), b).unwrap(),
            Err(NiceViolation::BadColor { .. })
        ));
    }

    #[test]
    fn search_examples() {
        let bd = Budget::default();
        let s = star(3);
        assert!(search_nice(&s, 2, bd).unwrap().is_none());
        let c = search_nice(&s, 3, bd).unwrap().unwrap();
        assert_eq!(c.triples(), vec![[0, 1, 1], [0, 2, 2], [0, 3, 3]]);
        let k4e = complete(4).with_edge_removed(Edge::new(0, 1)).unwrap();
        for m in 0..=5 {
            assert!(search_nice(&k4e, m, bd).unwrap().is_none());
        }
        let c4 = search_nice(&cycle(4), 2, bd).unwrap().unwrap();
        assert_eq!(c4.triples(), vec![[0, 1, 1], [0, 3, 2], [1, 2, 2], [2, 3, 1]]);
    }

    #[test]
    fn dimension_examples() {
        let bd = Budget::default();
        let dim = |g: &Graph| dimension(g, bd).unwrap().0;
        assert_eq!(dim(&star(3)), Dimension::Finite(3));
        let k4e = complete(4).with_edge_removed(Edge::new(0, 1)).unwrap();
        assert_eq!(dim(&k4e), Dimension::Infinite);
        for m in 2..=6 {
            assert_eq!(dim(&complete(m)), Dimension::Finite(1));
        }
        assert_eq!(dim(&Graph::empty(0)), Dimension::Finite(0));
        assert_eq!(dim(&Graph::empty(1)), Dimension::Finite(0));
        assert_eq!(dim(&Graph::empty(2)), Dimension::Finite(2));
        assert_eq!(dim(&cycle(4)), Dimension::Finite(2));
        assert_eq!(dim(&cycle(5)), Dimension::Infinite);
        assert_eq!(dim(&cycle(7)), Dimension::Finite(3));
        assert!(crate::embedding::contains_induced(&crate::hamming::build(3, 3).unwrap().graph, &cycle(7)));
        assert!(!crate::embedding::contains_induced(&crate::hamming::build(2, 7).unwrap().graph, &cycle(7)));
        assert_eq!(dim(&cycle(6)), Dimension::Finite(2));
    }

    #[test]
    fn common_color_examples() {
        let b = DEFAULT_PATH_BUDGET;
        let c4 = cycle(4);
        let col2 = search_nice(&c4, 2, Budget::default()).unwrap().unwrap();
        assert_eq!(common_color(&c4, &col2, 0, 1, b).unwrap(), Some(1));
        assert_eq!(common_color(&c4, &col2, 1, 2, b).unwrap(), Some(2));
        assert_eq!(common_colors(&c4, &col2, 0, 2, b).unwrap(), vec![1, 2]);
        assert_eq!(common_color(&c4, &col2, 0, 2, b).unwrap(), Some(1));
        let p4 = path(4);
        let alt = col(&p4, |e| if e.a == 1 { 2 } else { 1 }, 2);
        assert_eq!(common_colors(&p4, &alt, 0, 3, b).unwrap(), vec![1, 2]);
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (2..=max_n).prop_flat_map(|n| {
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
        #![proptest_config(ProptestConfig::with_cases(300))]
        #[test]
        fn induced_paths_match_oracle(g in arb_graph(8), a in 0usize..8, b in 0usize..8) {
            let n = g.order();
            let (u, v) = (a % n, b % n);
            prop_assume!(u != v);
            let mut got = induced_paths(&g, u, v, DEFAULT_PATH_BUDGET).unwrap();
            got.sort();
            prop_assert_eq!(got, naive_induced_paths(&g, u, v));
        }

        #[test]
        fn search_result_is_nice_and_palette_monotone(g in arb_graph(6), n in 1usize..5) {
            let found = search_nice(&g, n, Budget::default()).unwrap();
            if let Some(c) = &found {
                prop_assert!(naive_is_nice(&g, c));
                prop_assert!(verify_nice(&g, c, DEFAULT_PATH_BUDGET).unwrap().is_ok());
                prop_assert!(search_nice(&g, n + 1, Budget::default()).unwrap().is_some());
            }
        }

        #[test]
        fn search_is_complete(g in arb_graph(5), n in 1usize..4) {
            // exhaustive over all colorings with palette [n]
            let edges = g.edges();
            let total = n.pow(edges.len() as u32);
            let mut any = false;
            for code in 0..total {
                let mut x = code;
                let c = NiceColoring::new(n, edges.iter().map(|&e| { let v = x % n + 1; x /= n; (e, v) }).collect());
                if naive_is_nice(&g, &c) { any = true; break; }
            }
            prop_assert_eq!(search_nice(&g, n, Budget::default()).unwrap().is_some(), any);
        }
    }
}
