//! Canonical labeling by equitable refinement plus individualization.
//!
//! Every leaf of the search tree is a vertex ordering; the canonical form is
//! the relabeled graph whose upper-triangle code is largest. Twin vertices in
//! a cell are interchangeable, so only one of each twin class is branched on.

use super::{to_graph6, Graph};
use crate::embedding::contains_induced;
use crate::error::{Error, Result};

pub const CANON_MAX_VERTICES: usize = 12;

type Partition = Vec<Vec<usize>>;

/// graph6 string of the canonical relabeling. Graphs above
/// [`CANON_MAX_VERTICES`] vertices are rejected.
pub fn canonical_form(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > CANON_MAX_VERTICES {
        return Err(Error::contract(format!(
            "canonical form supports at most {CANON_MAX_VERTICES} vertices, got {n}"
        )));
    }
    let order = canonical_order(g);
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(to_graph6(&g.permuted(&perm)))
}

/// The canonical relabeling itself.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    canonical_form(g).map(|s| super::parse_graph6(&s).expect("own graph6 output parses"))
}

/// Exact isomorphism test. Small graphs compare canonical forms; larger ones
/// fall back to an induced embedding between equal-order graphs.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence()
    {
        return false;
    }
    if g.order() <= CANON_MAX_VERTICES {
        return canonical_form(g).ok() == canonical_form(h).ok();
    }
    contains_induced(h, g)
}

fn canonical_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n == 0 {
        return Vec::new();
    }
    let mut best: Option<(u128, Vec<usize>)> = None;
    let start = refine(g, vec![(0..n).collect()]);
    search(g, start, &mut best);
    best.expect("search reaches at least one leaf").1
}

fn search(g: &Graph, p: Partition, best: &mut Option<(u128, Vec<usize>)>) {
    let Some(ci) = target_cell(&p) else {
        let order: Vec<usize> = p.iter().map(|c| c[0]).collect();
        let code = leaf_code(g, &order);
        if best.as_ref().is_none_or(|(b, _)| code > *b) {
            *best = Some((code, order));
        }
        return;
    };
    let mut tried: Vec<usize> = Vec::new();
    for &v in &p[ci] {
        if tried.iter().any(|&w| are_twins(g, v, w)) {
            continue;
        }
        tried.push(v);
        let mut q = p.clone();
        let rest: Vec<usize> = q[ci].iter().copied().filter(|&x| x != v).collect();
        q[ci] = vec![v];
        q.insert(ci + 1, rest);
        search(g, refine(g, q), best);
    }
}

/// First smallest non-singleton cell.
fn target_cell(p: &Partition) -> Option<usize> {
    p.iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i))
        .map(|(i, _)| i)
}

fn are_twins(g: &Graph, v: usize, w: usize) -> bool {
    (0..g.order())
        .filter(|&x| x != v && x != w)
        .all(|x| g.has_edge(v, x) == g.has_edge(w, x))
}

/// Split cells by neighbor counts into every cell until nothing changes.
/// Sub-cells are ordered by their signature, which keeps the result
/// independent of the input labeling.
fn refine(g: &Graph, mut p: Partition) -> Partition {
    loop {
        let mut cell_of = vec![0usize; g.order()];
        for (i, c) in p.iter().enumerate() {
            for &v in c {
                cell_of[v] = i;
            }
        }
        let sig = |v: usize| {
            let mut s = vec![0u8; p.len()];
            for w in g.neighbors(v) {
                s[cell_of[w]] += 1;
            }
            s
        };
        let mut next: Partition = Vec::with_capacity(p.len());
        for c in &p {
            if c.len() == 1 {
                next.push(c.clone());
                continue;
            }
            let mut tagged: Vec<(Vec<u8>, usize)> = c.iter().map(|&v| (sig(v), v)).collect();
            tagged.sort();
            let mut start = 0;
            for i in 1..=tagged.len() {
                if i == tagged.len() || tagged[i].0 != tagged[start].0 {
                    next.push(tagged[start..i].iter().map(|t| t.1).collect());
                    start = i;
                }
            }
        }
        if next.len() == p.len() {
            return next;
        }
        p = next;
    }
}

fn leaf_code(g: &Graph, order: &[usize]) -> u128 {
    let mut code = 0u128;
    for j in 1..order.len() {
        for i in 0..j {
            code = (code << 1) | g.has_edge(order[i], order[j]) as u128;
        }
    }
    code
}
