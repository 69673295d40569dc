//! Exact induced subgraph isomorphism by backtracking over bit rows.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

/// `map[x]` is the host vertex assigned to pattern vertex `x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InducedEmbedding {
    pub map: Vec<usize>,
}

impl InducedEmbedding {
    pub fn is_valid(&self, host: &Graph, pattern: &Graph) -> bool {
        is_induced_embedding(host, pattern, &self.map)
    }
}

/// Injective, in range, and preserving both edges and non-edges.
pub fn is_induced_embedding(host: &Graph, pattern: &Graph, map: &[usize]) -> bool {
    let p = pattern.order();
    if map.len() != p || map.iter().any(|&v| v >= host.order()) {
        return false;
    }
    for x in 0..p {
        for y in x + 1..p {
            if map[x] == map[y] || pattern.has_edge(x, y) != host.has_edge(map[x], map[y]) {
                return false;
            }
        }
    }
    true
}

pub fn contains_induced(host: &Graph, pattern: &Graph) -> bool {
    find_embedding(host, pattern, None).is_some()
}

/// First embedding in search order, optionally with pattern vertex `pin.0`
/// sent to host vertex `pin.1`.
pub fn find_embedding(
    host: &Graph,
    pattern: &Graph,
    pin: Option<(usize, usize)>,
) -> Option<InducedEmbedding> {
    let pins: Vec<(usize, usize)> = pin.into_iter().collect();
    find_embedding_pinned(host, pattern, &pins)
}

/// As [`find_embedding`] with any number of pins.
pub fn find_embedding_pinned(
    host: &Graph,
    pattern: &Graph,
    pins: &[(usize, usize)],
) -> Option<InducedEmbedding> {
    let mut found = None;
    Matcher::new(host, pattern, pins)?.run(&mut |m| {
        found = Some(InducedEmbedding { map: m.to_vec() });
        false
    });
    found
}

/// Number of labeled induced embeddings, stopping at `cap`.
pub fn count_embeddings(host: &Graph, pattern: &Graph, cap: u64) -> u64 {
    assert!(cap >= 1, "cap must be positive");
    let mut count = 0u64;
    if let Some(m) = Matcher::new(host, pattern, &[]) {
        m.run(&mut |_| {
            count += 1;
            count < cap
        });
    }
    count
}

/// Calls `visit` on every embedding in search order until it returns false.
pub fn for_each_embedding(host: &Graph, pattern: &Graph, mut visit: impl FnMut(&[usize]) -> bool) {
    if let Some(m) = Matcher::new(host, pattern, &[]) {
        m.run(&mut visit);
    }
}

struct Matcher<'a> {
    host: &'a Graph,
    /// Pattern vertices in placement order.
    order: Vec<usize>,
    /// For each position, earlier positions adjacent / nonadjacent to it.
    nbr_before: Vec<Vec<usize>>,
    non_before: Vec<Vec<usize>>,
    pin_at: Vec<Option<usize>>,
    min_deg: Vec<usize>,
    min_nondeg: Vec<usize>,
    host_deg: Vec<usize>,
}

impl<'a> Matcher<'a> {
    fn new(host: &'a Graph, pattern: &Graph, pins: &[(usize, usize)]) -> Option<Self> {
        let p = pattern.order();
        let n = host.order();
        for &(x, v) in pins {
            assert!(x < p && v < n, "pin {x}->{v} out of range");
        }
        if p > n {
            return None;
        }
        let mut placed = vec![false; p];
        let mut order = Vec::with_capacity(p);
        let mut pin_at = Vec::with_capacity(p);
        for &(x, v) in pins {
            if placed[x] {
                if pins.iter().any(|&(y, w)| y == x && w != v) {
                    return None;
                }
                continue;
            }
            placed[x] = true;
            order.push(x);
            pin_at.push(Some(v));
        }
        let mut links = vec![0usize; p];
        for &x in &order {
            for y in pattern.neighbors(x) {
                links[y] += 1;
            }
        }
        while order.len() < p {
            let x = (0..p)
                .filter(|&x| !placed[x])
                .max_by(|&a, &b| links[a].cmp(&links[b]).then(b.cmp(&a)))
                .expect("an unplaced vertex remains");
            placed[x] = true;
            order.push(x);
            pin_at.push(None);
            for y in pattern.neighbors(x) {
                links[y] += 1;
            }
        }
        let mut nbr_before = Vec::with_capacity(p);
        let mut non_before = Vec::with_capacity(p);
        for i in 0..p {
            let (nb, non): (Vec<usize>, Vec<usize>) =
                (0..i).partition(|&j| pattern.has_edge(order[i], order[j]));
            nbr_before.push(nb);
            non_before.push(non);
        }
        let min_deg = order.iter().map(|&x| pattern.degree(x)).collect();
        let min_nondeg = order.iter().map(|&x| p - 1 - pattern.degree(x)).collect();
        let host_deg = (0..n).map(|v| host.degree(v)).collect();
        Some(Matcher {
            host,
            order,
            nbr_before,
            non_before,
            pin_at,
            min_deg,
            min_nondeg,
            host_deg,
        })
    }

    fn run(&self, visit: &mut dyn FnMut(&[usize]) -> bool) {
        let p = self.order.len();
        let mut assign = vec![0usize; p];
        let mut used = VertexSet::empty(self.host.order());
        let mut map = vec![0usize; p];
        self.extend(0, &mut assign, &mut used, &mut map, visit);
    }

    fn candidates(&self, i: usize, assign: &[usize], used: &VertexSet) -> VertexSet {
        let n = self.host.order();
        let mut c = match self.nbr_before[i].first() {
            Some(&j) => VertexSet::from_iter_with(n, self.host.neighbors(assign[j])),
            None => VertexSet::full(n),
        };
        for &j in self.nbr_before[i].iter().skip(1) {
            c.intersect_with(self.host.row(assign[j]));
        }
        for &j in &self.non_before[i] {
            c.difference_with(self.host.row(assign[j]));
        }
        c.difference_with(used.words());
        c
    }

    fn extend(
        &self,
        i: usize,
        assign: &mut [usize],
        used: &mut VertexSet,
        map: &mut [usize],
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if i == self.order.len() {
            for (pos, &x) in self.order.iter().enumerate() {
                map[x] = assign[pos];
            }
            return visit(map);
        }
        let cand = self.candidates(i, assign, used);
        let n = self.host.order();
        let fits = |v: usize| {
            self.host_deg[v] >= self.min_deg[i] && n - 1 - self.host_deg[v] >= self.min_nondeg[i]
        };
        let try_one = |v: usize, assign: &mut [usize], used: &mut VertexSet, map: &mut [usize], visit: &mut dyn FnMut(&[usize]) -> bool| {
            assign[i] = v;
            used.insert(v);
            let go_on = self.extend(i + 1, assign, used, map, visit);
            used.remove(v);
            go_on
        };
        if let Some(v) = self.pin_at[i] {
            if cand.contains(v) && fits(v) {
                return try_one(v, assign, used, map, visit);
            }
            return true;
        }
        for v in cand.iter() {
            if fits(v) && !try_one(v, assign, used, map, visit) {
                return false;
            }
        }
        true
    }
}
