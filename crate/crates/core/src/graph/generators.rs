//! Standard graph families. Vertices are numbered so that the "distinguished"
//! vertex (spider head, star center, cycle start) is 0.

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for a in 0..n {
        for b in a + 1..n {
            g.set_edge(a, b, true);
        }
    }
    g
}

/// `C_n` on `0..n` with edges `i, i+1 (mod n)`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least 3 vertices");
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// `P_n` on `n` vertices.
pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// `K_{m,n}`: parts `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    let mut g = Graph::empty(m + n);
    for a in 0..m {
        for b in m..m + n {
            g.set_edge(a, b, true);
        }
    }
    g
}

/// `K_{1,n}` with center 0.
pub fn star(n: usize) -> Graph {
    complete_bipartite(1, n)
}

/// `nK_2`: edges `2i, 2i+1`.
pub fn matching(n: usize) -> Graph {
    Graph::from_edges(2 * n, (0..n).map(|i| (2 * i, 2 * i + 1)))
}

/// `C'_n`: the cycle plus a pendant vertex `n` attached to 0.
pub fn cycle_with_pendant(n: usize) -> Graph {
    let mut g = Graph::empty(n + 1);
    for i in 0..n {
        g.set_edge(i, (i + 1) % n, true);
    }
    g.set_edge(0, n, true);
    g
}

/// `C̃_n`: the cycle plus the chord `0-2` between vertices at distance 2.
pub fn cycle_with_chord(n: usize) -> Graph {
    assert!(n >= 4, "a distance-2 chord needs n >= 4");
    let mut g = cycle(n);
    g.set_edge(0, 2, true);
    g
}

/// A cycle `C_c` on `0..c` with a path of `len` further edges hanging off vertex 0.
pub fn cycle_with_tail(c: usize, len: usize) -> Graph {
    let mut g = Graph::empty(c + len);
    for i in 0..c {
        g.set_edge(i, (i + 1) % c, true);
    }
    let mut prev = 0;
    for v in c..c + len {
        g.set_edge(prev, v, true);
        prev = v;
    }
    g
}

/// Leg lengths of a spider; the head is vertex 0 and leg `i` occupies a
/// contiguous vertex range in order of distance from the head.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpiderSpec {
    pub legs: Vec<usize>,
}

impl SpiderSpec {
    pub fn balanced(legs: usize, height: usize) -> Self {
        SpiderSpec {
            legs: vec![height; legs],
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.legs.is_empty() || self.legs.contains(&0) {
            return Err(Error::contract("a spider needs >= 1 leg, each of length >= 1"));
        }
        Ok(())
    }

    /// Vertex sequence of leg `i`, head first.
    pub fn leg_vertices(&self, i: usize) -> Vec<usize> {
        let start = 1 + self.legs[..i].iter().sum::<usize>();
        std::iter::once(0)
            .chain(start..start + self.legs[i])
            .collect()
    }
}

pub fn spider(spec: &SpiderSpec) -> Result<Graph> {
    spec.validate()?;
    let n = 1 + spec.legs.iter().sum::<usize>();
    let mut g = Graph::empty(n);
    for i in 0..spec.legs.len() {
        for w in spec.leg_vertices(i).windows(2) {
            g.set_edge(w[0], w[1], true);
        }
    }
    Ok(g)
}

/// Replace every edge by an induced path with `k` new internal vertices.
/// Original vertices keep their labels; new vertices follow in edge order.
pub fn subdivide(g: &Graph, k: usize) -> Graph {
    let edges = g.edges();
    let n = g.order() + k * edges.len();
    let mut out = Graph::empty(n);
    let mut next = g.order();
    for e in edges {
        let mut prev = e.a;
        for _ in 0..k {
            out.set_edge(prev, next, true);
            prev = next;
            next += 1;
        }
        out.set_edge(prev, e.b, true);
    }
    out
}

/// Build a graph from a short textual family name.
///
/// Accepted forms: `K5`, `C5`, `P4`, `K2,3`, `S3` (star `K_{1,3}`), `3K2`,
/// `E4` (edgeless), `C'5`, `C~5`, `spider:3x2` (balanced) or
/// `spider:1,2,3` (leg lengths), `cycletail:5,2`.
pub fn make(spec: &str) -> Result<Graph> {
    let bad = || Error::contract(format!("unknown or invalid graph family '{spec}'"));
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
    let s = spec.trim();
    if let Some(rest) = s.strip_prefix("spider:") {
        let legs = if let Some((p, q)) = rest.split_once('x') {
            vec![num(q)?; num(p)?]
        } else {
            rest.split(',').map(num).collect::<Result<Vec<_>>>()?
        };
        return spider(&SpiderSpec { legs });
    }
    if let Some(rest) = s.strip_prefix("cycletail:") {
        let (c, l) = rest.split_once(',').ok_or_else(bad)?;
        let c = num(c)?;
        if c < 3 {
            return Err(bad());
        }
        return Ok(cycle_with_tail(c, num(l)?));
    }
    if let Some(rest) = s.strip_prefix("C'") {
        let n = num(rest)?;
        return if n >= 3 { Ok(cycle_with_pendant(n)) } else { Err(bad()) };
    }
    if let Some(rest) = s.strip_prefix("C~") {
        let n = num(rest)?;
        return if n >= 4 { Ok(cycle_with_chord(n)) } else { Err(bad()) };
    }
    if let Some((m, rest)) = s.split_once('K') {
        if !m.is_empty() {
            if rest != "2" {
                return Err(bad());
            }
            return Ok(matching(num(m)?));
        }
        if let Some((a, b)) = rest.split_once(',') {
            return Ok(complete_bipartite(num(a)?, num(b)?));
        }
        return Ok(complete(num(rest)?));
    }
    let (head, rest) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
    match head {
        "C" => {
            let n = num(rest)?;
            if n >= 3 {
                Ok(cycle(n))
            } else {
                Err(bad())
            }
        }
        "P" => Ok(path(num(rest)?)),
        "S" => Ok(star(num(rest)?)),
        "E" => Ok(Graph::empty(num(rest)?)),
        _ => Err(bad()),
    }
}
