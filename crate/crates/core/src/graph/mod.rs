//! Labeled simple undirected graphs on `0..n` stored as adjacency bit rows.

mod bitset;
pub mod canon;
pub mod enumerate;
pub mod generators;
pub mod graph6;
pub mod structure;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use bitset::VertexSet;
pub(crate) use bitset::{iter_bits, words_for};
pub use canon::{are_isomorphic, canonical_form, canonical_graph, CANON_MAX_VERTICES};
pub use generators::{subdivide, SpiderSpec};
pub use graph6::{parse_graph6, to_graph6};

/// An undirected edge with `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
}

impl Edge {
    /// Normalizes the endpoint order. Panics on a loop.
    pub fn new(x: usize, y: usize) -> Self {
        assert_ne!(x, y, "self-loop {x}-{x}");
        Edge {
            a: x.min(y),
            b: x.max(y),
        }
    }

    pub fn other(&self, v: usize) -> usize {
        if v == self.a {
            self.b
        } else {
            self.a
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.a == v || self.b == v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let stride = words_for(n);
        Graph {
            n,
            stride,
            bits: vec![0; stride * n],
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Graph::empty(n);
        for (x, y) in edges {
            assert!(x < n && y < n, "edge {x}-{y} out of range for n={n}");
            g.set_edge(x, y, true);
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.stride..(v + 1) * self.stride]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(v))
    }

    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        VertexSet::from_words(self.row(v).to_vec())
    }

    #[inline]
    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        (self.bits[x * self.stride + y / 64] >> (y % 64)) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Raw symmetric update; callers guarantee `x != y`.
    pub(crate) fn set_edge(&mut self, x: usize, y: usize, present: bool) {
        assert_ne!(x, y, "self-loop at {x}");
        let (s, n) = (self.stride, self.n);
        debug_assert!(x < n && y < n);
        if present {
            self.bits[x * s + y / 64] |= 1 << (y % 64);
            self.bits[y * s + x / 64] |= 1 << (x % 64);
        } else {
            self.bits[x * s + y / 64] &= !(1 << (y % 64));
            self.bits[y * s + x / 64] &= !(1 << (x % 64));
        }
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in self.neighbors(a) {
                if b > a {
                    out.push(Edge { a, b });
                }
            }
        }
        out
    }

    /// Nonadjacent distinct pairs in lexicographic order.
    pub fn non_edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if !self.has_edge(a, b) {
                    out.push(Edge { a, b });
                }
            }
        }
        out
    }

    fn check_pair(&self, e: Edge) -> Result<()> {
        if e.a >= e.b || e.b >= self.n {
            return Err(Error::contract(format!(
                "pair {e} is not valid for a graph on {} vertices",
                self.n
            )));
        }
        Ok(())
    }

    pub fn with_edge_added(&self, e: Edge) -> Result<Graph> {
        self.check_pair(e)?;
        if self.has_edge(e.a, e.b) {
            return Err(Error::contract(format!("edge {e} already present")));
        }
        let mut g = self.clone();
        g.set_edge(e.a, e.b, true);
        Ok(g)
    }

    pub fn with_edge_removed(&self, e: Edge) -> Result<Graph> {
        self.check_pair(e)?;
        if !self.has_edge(e.a, e.b) {
            return Err(Error::contract(format!("edge {e} not present")));
        }
        let mut g = self.clone();
        g.set_edge(e.a, e.b, false);
        Ok(g)
    }

    /// Flips the pair `e` without precondition checks.
    pub fn toggled(&self, e: Edge) -> Graph {
        let mut g = self.clone();
        let present = g.has_edge(e.a, e.b);
        g.set_edge(e.a, e.b, !present);
        g
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        let full = VertexSet::full(self.n);
        for v in 0..self.n {
            let s = v * self.stride;
            for (i, w) in g.bits[s..s + self.stride].iter_mut().enumerate() {
                *w = !self.bits[s + i] & full.words()[i];
            }
            g.bits[s + v / 64] &= !(1 << (v % 64));
        }
        g
    }

    /// Induced subgraph; vertex `vs[i]` becomes `i`.
    pub fn induced_subgraph(&self, vs: &[usize]) -> Graph {
        let mut g = Graph::empty(vs.len());
        for (i, &x) in vs.iter().enumerate() {
            for (j, &y) in vs.iter().enumerate().skip(i + 1) {
                if self.has_edge(x, y) {
                    g.set_edge(i, j, true);
                }
            }
        }
        g
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for e in self.edges() {
            g.set_edge(perm[e.a], perm[e.b], true);
        }
        g
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut g = Graph::empty(n);
        for e in self.edges() {
            g.set_edge(e.a, e.b, true);
        }
        for e in other.edges() {
            g.set_edge(e.a + self.n, e.b + self.n, true);
        }
        g
    }

    /// Adjacency-list text: first line `n`, then one `a b` pair per line.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::parse(0, "missing vertex count"))?
            .parse()
            .map_err(|_| Error::parse(0, "vertex count is not an integer"))?;
        let mut g = Graph::empty(n);
        for (i, line) in lines.enumerate() {
            let parts: Vec<&str> = line.split_whitespace().collect();
            let bad = || Error::parse(i + 1, format!("bad edge line '{line}'"));
            if parts.len() != 2 {
                return Err(bad());
            }
            let a: usize = parts[0].parse().map_err(|_| bad())?;
            let b: usize = parts[1].parse().map_err(|_| bad())?;
            if a == b || a >= n || b >= n {
                return Err(bad());
            }
            g.set_edge(a, b, true);
        }
        Ok(g)
    }
}

impl Default for Graph {
    fn default() -> Self {
        Graph::empty(0)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::generators::*;
    use super::*;

    #[test]
    fn complement_examples() {
        assert_eq!(complete(4).complement(), Graph::empty(4));
        assert!(are_isomorphic(&cycle(5).complement(), &cycle(5)));
        assert!(are_isomorphic(&path(4).complement(), &path(4)));
        let g = Graph::from_edges(70, [(0, 69), (3, 64)]);
        assert_eq!(g.complement().size(), 70 * 69 / 2 - 2);
        assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn add_and_delete() {
        let c4 = cycle(4);
        let k4e = c4.with_edge_added(Edge::new(0, 2)).unwrap();
        assert!(are_isomorphic(&k4e, &complete(4).with_edge_removed(Edge::new(0, 1)).unwrap()));
        for e in complete(3).edges() {
            assert!(are_isomorphic(&complete(3).with_edge_removed(e).unwrap(), &path(3)));
        }
        let e = Edge::new(1, 3);
        assert_eq!(c4.with_edge_added(e).unwrap().with_edge_removed(e).unwrap(), c4);
        assert!(matches!(c4.with_edge_added(Edge::new(0, 1)), Err(Error::Contract(_))));
        assert!(matches!(c4.with_edge_removed(Edge::new(0, 2)), Err(Error::Contract(_))));
    }

    #[test]
    fn edge_list_parsing() {
        let g = Graph::parse_edge_list("3\n0 1\n1 2\n").unwrap();
        assert_eq!(g, path(3));
        assert!(Graph::parse_edge_list("3\n0 3\n").is_err());
        assert!(Graph::parse_edge_list("").is_err());
    }
}
