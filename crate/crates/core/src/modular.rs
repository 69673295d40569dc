//! Homogeneous sets, primality and the blowup product.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::saturation::verify;

/// A vertex set every outside vertex sees entirely or not at all.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HomogeneousSet {
    pub vertices: Vec<usize>,
}

pub fn is_homogeneous(g: &Graph, set: &[usize]) -> bool {
    let mut inside = vec![false; g.order()];
    for &v in set {
        inside[v] = true;
    }
    (0..g.order())
        .filter(|&y| !inside[y])
        .all(|y| {
            let seen = set.iter().filter(|&&x| g.has_edge(x, y)).count();
            seen == 0 || seen == set.len()
        })
}

/// Least homogeneous set containing `seed`, grown by absorbing splitters.
pub fn homogeneous_closure(g: &Graph, seed: &[usize]) -> Vec<usize> {
    let n = g.order();
    let mut inside = vec![false; n];
    let mut set: Vec<usize> = Vec::new();
    for &v in seed {
        if !inside[v] {
            inside[v] = true;
            set.push(v);
        }
    }
    loop {
        let splitter = (0..n).find(|&y| {
            !inside[y] && {
                let seen = set.iter().filter(|&&x| g.has_edge(x, y)).count();
                seen != 0 && seen != set.len()
            }
        });
        match splitter {
            Some(y) => {
                inside[y] = true;
                set.push(y);
            }
            None => break,
        }
    }
    set.sort_unstable();
    set
}

/// All homogeneous sets with `2 ≤ |X| ≤ n − 1` (and singletons when
/// asked), ordered by size then lexicographically. Every such set is
/// reached from a pair by repeatedly adding a vertex and closing.
pub fn homogeneous_sets(g: &Graph, include_singletons: bool) -> Vec<HomogeneousSet> {
    let n = g.order();
    let mut found: BTreeSet<(usize, Vec<usize>)> = BTreeSet::new();
    if include_singletons && n >= 2 {
        found.extend((0..n).map(|v| (1, vec![v])));
    }
    let mut frontier: Vec<Vec<usize>> = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            frontier.push(homogeneous_closure(g, &[a, b]));
        }
    }
    while let Some(set) = frontier.pop() {
        if set.len() == n || !found.insert((set.len(), set.clone())) {
            continue;
        }
        for x in (0..n).filter(|x| !set.contains(x)) {
            let mut seed = set.clone();
            seed.push(x);
            frontier.push(homogeneous_closure(g, &seed));
        }
    }
    found
        .into_iter()
        .map(|(_, vertices)| HomogeneousSet { vertices })
        .collect()
}

/// No homogeneous set with `2 ≤ |X| ≤ n − 1`. Singletons are ignored, so
/// graphs on at most two vertices are prime.
pub fn is_prime(g: &Graph) -> bool {
    let n = g.order();
    (0..n).all(|a| (a + 1..n).all(|b| homogeneous_closure(g, &[a, b]).len() == n))
}

/// An inclusion-minimal homogeneous set of size at least 2, least by
/// (size, lexicographic). Minimal ones are exactly the smallest closures
/// of pairs.
pub fn minimal_homogeneous_set(g: &Graph) -> Option<HomogeneousSet> {
    let n = g.order();
    (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .map(|(a, b)| homogeneous_closure(g, &[a, b]))
        .filter(|s| s.len() < n)
        .min_by(|x, y| (x.len(), x).cmp(&(y.len(), y)))
        .map(|vertices| HomogeneousSet { vertices })
}

/// `g1 ⋆ g2`: a copy of `g2` in place of each vertex of `g1`, vertex
/// `(i, j)` at `i·|g2| + j`.
pub fn blowup(g1: &Graph, g2: &Graph) -> Result<Graph> {
    if g1.order() == 0 || g2.order() == 0 {
        return Err(Error::contract("blowup needs two nonempty graphs"));
    }
    let m = g2.order();
    let mut edges = Vec::new();
    for i in 0..g1.order() {
        for e in g2.edges() {
            edges.push((i * m + e.a, i * m + e.b));
        }
        for j in g1.neighbors(i).filter(|&j| j > i) {
            for a in 0..m {
                for b in 0..m {
                    edges.push((i * m + a, j * m + b));
                }
            }
        }
    }
    Ok(Graph::from_edges(g1.order() * m, edges))
}

/// Vertices adjacent to every other vertex.
pub fn full_vertices(g: &Graph) -> Vec<usize> {
    (0..g.order()).filter(|&v| g.degree(v) + 1 == g.order()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowupReport {
    /// Why the pair was rejected, if it was.
    pub rejected: Option<String>,
    pub blowup_order: usize,
    /// `g ⋆ g` is saturated for `h`.
    pub blowup_holds: bool,
    /// `g` restricted to a minimal homogeneous set, when `g` is not prime.
    pub prime_part: Option<Vec<usize>>,
    /// That restriction is prime and saturated for `h`.
    pub prime_part_holds: Option<bool>,
}

impl BlowupReport {
    pub fn holds(&self) -> bool {
        self.rejected.is_none() && self.blowup_holds && self.prime_part_holds != Some(false)
    }
}

/// For prime `h` and `g` saturated for `h`: checks that `g ⋆ g` is again
/// saturated, and that a non-prime `g` yields a prime saturated graph on
/// a minimal homogeneous set.
pub fn prime_blowup_check(g: &Graph, h: &Graph) -> Result<BlowupReport> {
    let reject = |why: &str| BlowupReport {
        rejected: Some(why.into()),
        blowup_order: 0,
        blowup_holds: false,
        prime_part: None,
        prime_part_holds: None,
    };
    if !is_prime(h) || h.order() < 3 {
        return Ok(reject("forbidden graph is not prime"));
    }
    if !verify(g, h).holds {
        return Ok(reject("graph is not saturated for the forbidden graph"));
    }
    let big = blowup(g, g)?;
    let blowup_holds = verify(&big, h).holds;
    let (prime_part, prime_part_holds) = match minimal_homogeneous_set(g) {
        None => (None, None),
        Some(s) => {
            let sub = g.induced_subgraph(&s.vertices);
            let ok = is_prime(&sub) && verify(&sub, h).holds;
            (Some(s.vertices), Some(ok))
        }
    };
    Ok(BlowupReport {
        rejected: None,
        blowup_order: big.order(),
        blowup_holds,
        prime_part,
        prime_part_holds,
    })
}
