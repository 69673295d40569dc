//! Hamming graphs: n-tuples over `0..k`, adjacent at Hamming distance 1.
//! The flat index is the mixed-radix value of the tuple with coordinate 1
//! most significant.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{are_isomorphic, Edge, Graph};

pub const DEFAULT_MAX_VERTICES: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HammingGraph {
    pub n: usize,
    pub k: usize,
    #[serde(skip)]
    pub graph: Graph,
}

/// `□ⁿK_k` under the default vertex cap.
pub fn build(n: usize, k: usize) -> Result<HammingGraph> {
    build_capped(n, k, DEFAULT_MAX_VERTICES)
}

pub fn build_capped(n: usize, k: usize, max_vertices: usize) -> Result<HammingGraph> {
    if n == 0 || k == 0 {
        return Err(Error::contract(format!("Hamming graph needs n, k >= 1 (got n={n}, k={k})")));
    }
    let size = k
        .checked_pow(n as u32)
        .filter(|&s| s <= max_vertices)
        .ok_or_else(|| Error::resource(format!("Hamming graph {k}^{n} vertices"), max_vertices as u64))?;
    let mut g = Graph::empty(size);
    let place: Vec<usize> = (0..n).map(|i| k.pow((n - 1 - i) as u32)).collect();
    for x in 0..size {
        for &pv in &place {
            let digit = (x / pv) % k;
            for c in digit + 1..k {
                g.set_edge(x, x + (c - digit) * pv, true);
            }
        }
    }
    Ok(HammingGraph { n, k, graph: g })
}

impl HammingGraph {
    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn index(&self, tuple: &[usize]) -> usize {
        assert_eq!(tuple.len(), self.n, "tuple length must equal n");
        tuple.iter().fold(0, |acc, &d| {
            assert!(d < self.k, "coordinate {d} out of range for k={}", self.k);
            acc * self.k + d
        })
    }

    pub fn tuple(&self, mut idx: usize) -> Vec<usize> {
        let mut t = vec![0; self.n];
        for slot in t.iter_mut().rev() {
            *slot = idx % self.k;
            idx /= self.k;
        }
        t
    }

    /// Vertex as `(a,b,c)`.
    pub fn format_vertex(&self, idx: usize) -> String {
        let parts: Vec<String> = self.tuple(idx).iter().map(usize::to_string).collect();
        format!("({})", parts.join(","))
    }

    /// Unit vector `e_i` for `i` in `1..=n`.
    pub fn unit(&self, i: usize) -> Vec<usize> {
        let mut t = vec![0; self.n];
        t[i - 1] = 1;
        t
    }
}

pub fn hamming_distance(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// The automorphism `x ↦ x − w + v (mod k)` as `perm[old] = new`.
pub fn translate_automorphism(hg: &HammingGraph, w: &[usize], v: &[usize]) -> Vec<usize> {
    let k = hg.k;
    (0..hg.order())
        .map(|x| {
            let t: Vec<usize> = hg
                .tuple(x)
                .iter()
                .zip(w.iter().zip(v))
                .map(|(&xi, (&wi, &vi))| (xi + k - wi + vi) % k)
                .collect();
            hg.index(&t)
        })
        .collect()
}

/// One nonadjacent pair per distance class `q = 2..=n`: the zero tuple and
/// `q` leading copies of the symbol 2 (1 when `k = 2`) followed by zeros.
pub fn nonedge_representatives(hg: &HammingGraph) -> Vec<(Vec<usize>, Vec<usize>)> {
    if hg.n < 2 || hg.k < 2 {
        return Vec::new();
    }
    let s = if hg.k >= 3 { 2 } else { 1 };
    (2..=hg.n)
        .map(|q| {
            let mut v = vec![0; hg.n];
            v[..q].fill(s);
            (vec![0; hg.n], v)
        })
        .collect()
}

/// The edge between the zero tuple and `e_1`.
pub fn edge_representative(hg: &HammingGraph) -> Result<Edge> {
    if hg.k < 2 {
        return Err(Error::contract("Hamming graph with k = 1 has no edges"));
    }
    Ok(Edge::new(0, hg.index(&hg.unit(1))))
}

/// Whether deleting any single edge gives a graph isomorphic to deleting
/// the representative edge.
pub fn edge_deletions_isomorphic(hg: &HammingGraph) -> bool {
    let Ok(rep) = edge_representative(hg) else {
        return true;
    };
    let base = hg.graph.toggled(rep);
    hg.graph
        .edges()
        .par_iter()
        .all(|&e| are_isomorphic(&hg.graph.toggled(e), &base))
}

/// Whether adding any nonedge gives a graph isomorphic to adding the
/// representative nonedge of the same distance class.
pub fn equal_distance_additions_isomorphic(hg: &HammingGraph) -> bool {
    let reps: Vec<Graph> = nonedge_representatives(hg)
        .iter()
        .map(|(u, v)| hg.graph.toggled(Edge::new(hg.index(u), hg.index(v))))
        .collect();
    hg.graph.non_edges().par_iter().all(|&f| {
        let q = hamming_distance(&hg.tuple(f.a), &hg.tuple(f.b));
        are_isomorphic(&hg.graph.toggled(f), &reps[q - 2])
    })
}
