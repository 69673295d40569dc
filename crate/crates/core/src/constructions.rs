//! Explicit saturation certificates for graphs built around a cut vertex
//! of degree `n + 1` (class H), for graphs made of a long balanced spider
//! glued to a low-dimensional graph at its leaves (class F), and a nice
//! coloring of subdivisions.
//!
//! Colors are `1..=palette`. Hamming tuples use symbols `0..k`.

use serde::{Deserialize, Serialize};

use crate::coloring::{search_nice, verify_nice, Budget, NiceColoring};
use crate::embedding::{contains_induced, find_embedding, find_embedding_pinned, is_induced_embedding};
use crate::error::{Error, Result};
use crate::graph::structure::{components, is_connected, is_tree};
use crate::graph::{Edge, Graph};
use crate::hamming::{build, build_capped, hamming_distance, HammingGraph};

fn need_n(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::contract(format!("construction needs n >= 3, got {n}")));
    }
    Ok(())
}

/// Components of `h − r` in original labels, ordered by least vertex.
fn components_without(h: &Graph, r: usize) -> Vec<Vec<usize>> {
    let rest: Vec<usize> = (0..h.order()).filter(|&v| v != r).collect();
    components(&h.induced_subgraph(&rest))
        .into_iter()
        .map(|c| c.into_iter().map(|i| rest[i]).collect())
        .collect()
}

/// Least `ℓ` with every graph induced in `□^d K_ℓ`.
pub fn least_cube_side(graphs: &[Graph], d: usize) -> Result<usize> {
    for ell in 1.. {
        let hg = build(d, ell)?;
        if graphs.iter().all(|g| contains_induced(&hg.graph, g)) {
            return Ok(ell);
        }
    }
    unreachable!("the vertex cap ends the loop")
}

/// Relabels a coloring of `sub` (vertex `i` is `labels[i]`) into `out`,
/// mapping color `c` to `palette[c − 1]`.
fn lift_coloring(sub: &NiceColoring, labels: &[usize], palette: &[usize], out: &mut Vec<(Edge, usize)>) {
    for &(e, c) in &sub.colors {
        out.push((Edge::new(labels[e.a], labels[e.b]), palette[c - 1]));
    }
}

fn nice_with(g: &Graph, n: usize, budget: Budget) -> Result<NiceColoring> {
    search_nice(g, n, budget)?
        .ok_or_else(|| Error::contract(format!("component has no nice coloring with {n} colors")))
}

// ---------------------------------------------------------------- class H

/// A cut vertex `r` of degree `n + 1` whose removal leaves `n + 1`
/// components `H_i`, each of dimension at most `n − 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassHWitness {
    pub n: usize,
    pub r: usize,
    /// `H_1..H_{n+1}`, ordered by attachment vertex.
    pub components: Vec<Vec<usize>>,
    /// `v_i`: the neighbor of `r` in `H_i`.
    pub attachments: Vec<usize>,
    /// Least `ℓ` with every `H_i ⊆_I □^{n−1} K_ℓ`.
    pub ell: usize,
}

impl ClassHWitness {
    fn parts(&self, h: &Graph) -> Vec<Graph> {
        self.components.iter().map(|c| h.induced_subgraph(c)).collect()
    }

    fn local_attachment(&self, i: usize) -> usize {
        self.components[i]
            .iter()
            .position(|&x| x == self.attachments[i])
            .expect("attachment lies in its component")
    }
}

/// First cut vertex (by index) certifying membership in class H.
pub fn recognize_class_h(h: &Graph, n: usize, budget: Budget) -> Result<Option<ClassHWitness>> {
    need_n(n)?;
    if h.order() == 0 || !is_connected(h) {
        return Ok(None);
    }
    'heads: for r in (0..h.order()).filter(|&r| h.degree(r) == n + 1) {
        let comps = components_without(h, r);
        if comps.len() != n + 1 {
            continue;
        }
        let mut parts = Vec::new();
        let mut tagged = Vec::new();
        for c in comps {
            let sub = h.induced_subgraph(&c);
            if search_nice(&sub, n - 1, budget)?.is_none() {
                continue 'heads;
            }
            let v = *c.iter().find(|&&x| h.has_edge(r, x)).expect("one neighbor per component");
            parts.push(sub);
            tagged.push((v, c));
        }
        tagged.sort();
        let ell = least_cube_side(&parts, n - 1)?;
        return Ok(Some(ClassHWitness {
            n,
            r,
            attachments: tagged.iter().map(|t| t.0).collect(),
            components: tagged.into_iter().map(|t| t.1).collect(),
            ell,
        }));
    }
    Ok(None)
}

/// Trees with a unique vertex of maximum degree `n + 1` whose removal
/// leaves components of maximum degree at most `n − 1`.
pub fn recognize_class_t(t: &Graph, n: usize) -> Result<bool> {
    need_n(n)?;
    if !is_tree(t) || t.max_degree() != n + 1 {
        return Ok(false);
    }
    let tops: Vec<usize> = (0..t.order()).filter(|&v| t.degree(v) == n + 1).collect();
    let [r] = tops[..] else { return Ok(false) };
    Ok(components_without(t, r)
        .iter()
        .all(|c| t.induced_subgraph(c).max_degree() < n))
}

/// Value sets and pinned component embeddings for one distance class
/// `q` of added edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingPlan {
    pub n: usize,
    pub k: usize,
    pub q: usize,
    /// Clique order used for every component, at least 2.
    pub ell: usize,
    /// `W_1..W_{n+1}`, each listing 0 first.
    pub w: Vec<Vec<usize>>,
    /// `X`, listing 2 first.
    pub x: Vec<usize>,
    /// `σ_i` as `(n−1)`-tuples, indexed like `components[i]`.
    pub sub_embeddings: Vec<Vec<Vec<usize>>>,
}

impl EmbeddingPlan {
    /// Smallest `k` the value sets fit in.
    pub fn required_k(n: usize, ell: usize) -> usize {
        (ell - 1) * (n + 1) + 3
    }

    /// Checks every clause of the plan against `hw` and `h`.
    pub fn check(&self, h: &Graph, hw: &ClassHWitness) -> Result<()> {
        let clause = |ok: bool, what: &str| {
            if ok {
                Ok(())
            } else {
                Err(Error::contract(format!("embedding plan violates: {what}")))
            }
        };
        let (n, ell) = (self.n, self.ell);
        clause(n == hw.n && self.w.len() == n + 1, "one value set per component")?;
        clause((2..=n).contains(&self.q), "2 <= q <= n")?;
        clause(ell >= hw.ell.max(2), "l at least the component clique order and 2")?;
        clause(self.k >= Self::required_k(n, ell), "k >= (l-1)(n+1)+3")?;
        clause(
            self.w.iter().all(|s| s.len() == ell) && self.x.len() == ell,
            "|W_i| = |X| = l",
        )?;
        let all_values = self.w.iter().flatten().chain(&self.x);
        clause(all_values.clone().all(|&v| v < self.k), "values below k")?;
        clause(
            self.w.iter().flatten().all(|&v| v != 1) && self.x.iter().all(|&v| v >= 2),
            "W_i avoids 1 and X avoids 0, 1",
        )?;
        for i in 0..=n {
            clause(self.w[i][0] == 0, "0 listed first in W_i")?;
            for j in i + 1..=n {
                let shared: Vec<&usize> = self.w[i].iter().filter(|v| self.w[j].contains(v)).collect();
                clause(shared == [&0], "W_i ∩ W_j = {0}")?;
            }
        }
        clause(
            self.w[..n].iter().all(|s| s.iter().all(|v| !self.x.contains(v))),
            "X ∩ W_i empty for i <= n",
        )?;
        clause(self.x[0] == 2 && self.w[n].get(1) == Some(&2), "2 ∈ X ∩ W_{n+1}")?;
        for (i, part) in hw.parts(h).iter().enumerate() {
            let sigma = &self.sub_embeddings[i];
            let allowed = |coord: usize, v: usize| {
                if i == n && coord == 0 {
                    self.x.contains(&v)
                } else {
                    self.w[i].contains(&v)
                }
            };
            clause(
                sigma.len() == part.order()
                    && sigma.iter().all(|t| t.len() == n - 1 && t.iter().enumerate().all(|(c, &v)| allowed(c, v))),
                "sub-embedding values in the component's sets",
            )?;
            let induced = (0..part.order()).all(|a| {
                (a + 1..part.order()).all(|b| {
                    let d = hamming_distance(&sigma[a], &sigma[b]);
                    d > 0 && (d == 1) == part.has_edge(a, b)
                })
            });
            clause(induced, "sub-embeddings are induced")?;
            clause(sigma[hw.local_attachment(i)] == self.pinned_tuple(i), "sub-embedding pins")?;
        }
        Ok(())
    }

    /// `σ_i(v_i)`: zero for `i ≤ n`, else `q − 1` leading 2s.
    fn pinned_tuple(&self, i: usize) -> Vec<usize> {
        let mut t = vec![0; self.n - 1];
        if i == self.n {
            t[..self.q - 1].fill(2);
        }
        t
    }
}

/// The minimal plan for distance class `q`.
pub fn class_h_plan(h: &Graph, hw: &ClassHWitness, q: usize) -> Result<EmbeddingPlan> {
    let n = hw.n;
    if !(2..=n).contains(&q) {
        return Err(Error::contract(format!("distance class q must lie in 2..={n}, got {q}")));
    }
    let ell = hw.ell.max(2);
    let k = EmbeddingPlan::required_k(n, ell);
    let mut w = vec![Vec::new(); n + 1];
    w[n] = std::iter::once(0).chain(2..=ell).collect();
    let x: Vec<usize> = (2..ell + 2).collect();
    let mut next = ell + 2;
    for set in w.iter_mut().take(n) {
        set.push(0);
        set.extend(next..next + ell - 1);
        next += ell - 1;
    }
    let cube = build(n - 1, ell)?;
    let mut sub_embeddings = Vec::with_capacity(n + 1);
    for (i, part) in hw.parts(h).iter().enumerate() {
        // abstract symbol s stands for the s-th listed value
        let mut pin = vec![0; n - 1];
        if i == n {
            pin[1..q - 1].fill(1);
        }
        let emb = find_embedding_pinned(&cube.graph, part, &[(hw.local_attachment(i), cube.index(&pin))])
            .ok_or_else(|| Error::contract("component does not fit the clique order l"))?;
        let tuples = emb
            .map
            .iter()
            .map(|&img| {
                cube.tuple(img)
                    .iter()
                    .enumerate()
                    .map(|(c, &s)| if i == n && c == 0 { x[s] } else { w[i][s] })
                    .collect()
            })
            .collect();
        sub_embeddings.push(tuples);
    }
    let plan = EmbeddingPlan {
        n,
        k,
        q,
        ell,
        w,
        x,
        sub_embeddings,
    };
    plan.check(h, hw)?;
    Ok(plan)
}

/// An embedding of `H` into `□ⁿK_k` plus the nonedge `nonedge`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssembledEmbedding {
    pub n: usize,
    pub k: usize,
    pub q: usize,
    /// Endpoints of the added nonedge as tuples.
    pub nonedge: (Vec<usize>, Vec<usize>),
    /// Image tuple of every vertex of `H`.
    pub tuples: Vec<Vec<usize>>,
}

impl AssembledEmbedding {
    /// The host `□ⁿK_k + uv` and the embedding as flat indices.
    pub fn host_and_map(&self, max_vertices: usize) -> Result<(HammingGraph, Graph, Vec<usize>)> {
        let hg = build_capped(self.n, self.k, max_vertices)?;
        let plus = hg.graph.toggled(Edge::new(hg.index(&self.nonedge.0), hg.index(&self.nonedge.1)));
        let map = self.tuples.iter().map(|t| hg.index(t)).collect();
        Ok((hg, plus, map))
    }

    /// Replays the induced-embedding check against an independently built
    /// host.
    pub fn verify(&self, h: &Graph) -> Result<bool> {
        let (_, plus, map) = self.host_and_map(usize::MAX)?;
        Ok(is_induced_embedding(&plus, h, &map))
    }
}

fn representative_nonedge(n: usize, q: usize) -> (Vec<usize>, Vec<usize>) {
    let mut v = vec![0; n];
    v[..q].fill(2);
    (vec![0; n], v)
}

/// `σ`: `r ↦ 0`; a vertex of `H_i` takes `σ_i` with the fixed value 1
/// inserted at coordinate `i` (`i ≤ n`), or 2 at coordinate 1 (`i = n+1`).
pub fn class_h_embedding(h: &Graph, hw: &ClassHWitness, plan: &EmbeddingPlan) -> Result<AssembledEmbedding> {
    plan.check(h, hw)?;
    let n = hw.n;
    let mut tuples = vec![Vec::new(); h.order()];
    tuples[hw.r] = vec![0; n];
    for (i, comp) in hw.components.iter().enumerate() {
        let (pos, val) = if i < n { (i, 1) } else { (0, 2) };
        for (local, &u) in comp.iter().enumerate() {
            let mut t = plan.sub_embeddings[i][local].clone();
            t.insert(pos, val);
            tuples[u] = t;
        }
    }
    Ok(AssembledEmbedding {
        n,
        k: plan.k,
        q: plan.q,
        nonedge: representative_nonedge(n, plan.q),
        tuples,
    })
}

/// `H + v_n v_{n+1}` with the nice `n`-coloring: `r v_i ↦ i` for `i ≤ n`,
/// `r v_{n+1} ↦ n`, `v_n v_{n+1} ↦ n`, `H_i` colored from `[n] \ {i}`
/// and `H_{n+1}` from `[n − 1]`.
pub fn class_h_coloring(h: &Graph, hw: &ClassHWitness, budget: Budget) -> Result<(Graph, Edge, NiceColoring)> {
    let n = hw.n;
    let f = Edge::new(hw.attachments[n - 1], hw.attachments[n]);
    let plus = h.toggled(f);
    let mut colors = vec![(f, n)];
    for (i, part) in hw.parts(h).iter().enumerate() {
        let palette: Vec<usize> = if i < n {
            (1..=n).filter(|&c| c != i + 1).collect()
        } else {
            (1..n).collect()
        };
        let sub = nice_with(part, n - 1, budget)?;
        lift_coloring(&sub, &hw.components[i], &palette, &mut colors);
        colors.push((Edge::new(hw.r, hw.attachments[i]), (i + 1).min(n)));
    }
    Ok((plus, f, NiceColoring::new(n, colors)))
}

// ---------------------------------------------------------------- class F

/// `H = F ∪ T` with `T` a balanced `(n+1)`-legged spider of height `n+2`
/// meeting `F` exactly in its leaves.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFWitness {
    pub n: usize,
    pub head: usize,
    /// Each leg as `p_0 = head, p_1, …, p_{n+2}`.
    pub legs: Vec<Vec<usize>>,
    /// `V(F)`, ascending.
    pub f_vertices: Vec<usize>,
    /// The leaves `p_{n+2}(i)`, ascending.
    pub leaves: Vec<usize>,
}

impl ClassFWitness {
    pub fn f_graph(&self, h: &Graph) -> Graph {
        h.induced_subgraph(&self.f_vertices)
    }

    pub fn f_local(&self, v: usize) -> usize {
        self.f_vertices.binary_search(&v).expect("vertex of F")
    }

    /// `H + p_1(n) p_1(n+1)`.
    pub fn added_edge(&self) -> Edge {
        Edge::new(self.legs[self.n - 1][1], self.legs[self.n][1])
    }
}

/// Replays the structure of `w` against `h`. `dim(F) ≤ n − 1` is checked
/// with `certificate` (a coloring of `F` in `f_vertices` order) when given,
/// otherwise by search.
pub fn validate_class_f(
    h: &Graph,
    w: &ClassFWitness,
    certificate: Option<&NiceColoring>,
    budget: Budget,
) -> Result<bool> {
    let n = w.n;
    need_n(n)?;
    let size = h.order();
    if w.head >= size || w.legs.len() != n + 1 {
        return Ok(false);
    }
    let mut in_t = vec![false; size];
    let mut internal = vec![false; size];
    in_t[w.head] = true;
    let mut leaves = Vec::new();
    let mut leg_edges = Vec::new();
    for leg in &w.legs {
        if leg.len() != n + 3 || leg[0] != w.head || leg.iter().any(|&v| v >= size) {
            return Ok(false);
        }
        for (j, &v) in leg.iter().enumerate().skip(1) {
            if in_t[v] {
                return Ok(false);
            }
            in_t[v] = true;
            internal[v] = j <= n + 1;
        }
        for p in leg.windows(2) {
            if !h.has_edge(p[0], p[1]) {
                return Ok(false);
            }
            leg_edges.push(Edge::new(p[0], p[1]));
        }
        leaves.push(leg[n + 2]);
    }
    leaves.sort_unstable();
    internal[w.head] = true;
    let f_vertices: Vec<usize> = (0..size).filter(|&v| !internal[v]).collect();
    if f_vertices != w.f_vertices || leaves != w.leaves {
        return Ok(false);
    }
    let only_leg_edges = h
        .edges()
        .iter()
        .filter(|e| internal[e.a] || internal[e.b])
        .all(|e| leg_edges.contains(e));
    if !only_leg_edges {
        return Ok(false);
    }
    let f = w.f_graph(h);
    Ok(match certificate {
        Some(c) => c.palette < n && verify_nice(&f, c, budget.paths_per_pair)?.is_ok(),
        None => search_nice(&f, n - 1, budget)?.is_some(),
    })
}

/// Tries every vertex of degree `n + 1` as head; legs are forced by
/// walking along degree-2 vertices, so this is complete.
pub fn recognize_class_f(h: &Graph, n: usize, budget: Budget) -> Result<Option<ClassFWitness>> {
    need_n(n)?;
    'heads: for head in (0..h.order()).filter(|&v| h.degree(v) == n + 1) {
        let mut legs = Vec::new();
        for first in h.neighbors(head) {
            let mut leg = vec![head, first];
            while leg.len() < n + 3 {
                let cur = *leg.last().expect("nonempty");
                if h.degree(cur) != 2 {
                    continue 'heads;
                }
                let prev = leg[leg.len() - 2];
                let next = h.neighbors(cur).find(|&x| x != prev).expect("degree two");
                leg.push(next);
            }
            legs.push(leg);
        }
        let mut f_vertices: Vec<usize> = (0..h.order())
            .filter(|v| *v != head && !legs.iter().any(|l| l[1..=n + 1].contains(v)))
            .collect();
        f_vertices.sort_unstable();
        let mut leaves: Vec<usize> = legs.iter().map(|l| l[n + 2]).collect();
        leaves.sort_unstable();
        let w = ClassFWitness {
            n,
            head,
            legs,
            f_vertices,
            leaves,
        };
        if validate_class_f(h, &w, None, budget)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Glues a balanced `(n+1)`-legged spider of height `n+2` to `f` at the
/// listed attachment vertices. `F` keeps labels `0..|f|`, the head comes
/// next, then the legs' internal vertices leg by leg.
pub fn class_f_instance(n: usize, f: &Graph, attach: &[usize]) -> Result<(Graph, ClassFWitness)> {
    need_n(n)?;
    let mut sorted = attach.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if attach.len() != n + 1 || sorted.len() != n + 1 || sorted.iter().any(|&v| v >= f.order()) {
        return Err(Error::contract(format!("need {} distinct attachment vertices of F", n + 1)));
    }
    let head = f.order();
    let size = head + 1 + (n + 1) * (n + 1);
    let mut edges: Vec<(usize, usize)> = f.edges().iter().map(|e| (e.a, e.b)).collect();
    let mut legs = Vec::new();
    for (i, &leaf) in attach.iter().enumerate() {
        let start = head + 1 + i * (n + 1);
        let leg: Vec<usize> = std::iter::once(head)
            .chain(start..start + n + 1)
            .chain(std::iter::once(leaf))
            .collect();
        edges.extend(leg.windows(2).map(|p| (p[0], p[1])));
        legs.push(leg);
    }
    let w = ClassFWitness {
        n,
        head,
        legs,
        f_vertices: (0..f.order()).collect(),
        leaves: sorted,
    };
    Ok((Graph::from_edges(size, edges), w))
}

/// Least `k` the leg tables work for: `F` sits in `{n+4, …, k−1}^{n−1}`.
pub fn class_f_min_k(h: &Graph, w: &ClassFWitness) -> Result<usize> {
    let ell = least_cube_side(&[w.f_graph(h)], w.n - 1)?;
    Ok(w.n + 4 + ell)
}

/// Image tuples of one leg `p_0..p_{n+2}` (leg index `i` is 1-based)
/// given the leaf's first `n − 1` coordinates `y`.
fn leg_tuples(n: usize, i: usize, q: usize, k: usize, y: &[usize]) -> Vec<Vec<usize>> {
    let with_last = |head: Vec<usize>, last: usize| {
        let mut t = head;
        t.push(last);
        t
    };
    let mut out = vec![vec![0; n]];
    if i < n {
        // p_j for j ≤ n−1 fills y left to right, skipping coordinate i
        for j in 1..n {
            let filled = |m: usize| if j <= i { m < j } else { m <= j };
            let head = (1..n).map(|m| if m == i { 1 } else if filled(m) { y[m - 1] } else { 0 });
            out.push(with_last(head.collect(), 0));
        }
        let mut head: Vec<usize> = y.to_vec();
        head[i - 1] = 1;
        out.push(with_last(head, i + 2));
        out.push(with_last(y.to_vec(), i + 2));
    } else if i == n {
        for j in 1..n {
            let head = (1..n).map(|m| if m < j { y[m - 1] } else { 0 });
            out.push(with_last(head.collect(), 1));
        }
        let mut head: Vec<usize> = y[..n - 2].to_vec();
        head.push(0);
        out.push(with_last(head, n + 2));
        out.push(with_last(y.to_vec(), n + 2));
    } else {
        let (_, v) = representative_nonedge(n, q);
        out.push(v.clone());
        // p_j for j ≥ 2 fills y right to left from coordinate n−1
        for j in 2..=n + 1 {
            let head = (1..n).map(|m| if m + j >= n + 2 { y[m - 1] } else { v[m - 1] });
            out.push(with_last(head.collect(), n + 3));
        }
    }
    out.push(with_last(y.to_vec(), k - 1));
    out
}

/// `σ` on `H = F ∪ T` into `□ⁿK_k + 0v` for distance class `q`.
pub fn class_f_embedding(h: &Graph, w: &ClassFWitness, q: usize, k: usize) -> Result<AssembledEmbedding> {
    let n = w.n;
    need_n(n)?;
    if !(2..=n).contains(&q) {
        return Err(Error::contract(format!("distance class q must lie in 2..={n}, got {q}")));
    }
    let f = w.f_graph(h);
    let ell = least_cube_side(std::slice::from_ref(&f), n - 1)?;
    let min_k = n + 4 + ell;
    if k < min_k {
        return Err(Error::contract(format!("k = {k} is too small; the least feasible k is {min_k}")));
    }
    let cube = build(n - 1, ell)?;
    let emb = find_embedding(&cube.graph, &f, None).expect("F fits by choice of l");
    let mut tuples = vec![Vec::new(); h.order()];
    for (local, &v) in w.f_vertices.iter().enumerate() {
        let mut t: Vec<usize> = cube.tuple(emb.map[local]).iter().map(|s| n + 4 + s).collect();
        t.push(k - 1);
        tuples[v] = t;
    }
    for (idx, leg) in w.legs.iter().enumerate() {
        let leaf = tuples[leg[n + 2]].clone();
        for (p, t) in leg.iter().zip(leg_tuples(n, idx + 1, q, k, &leaf[..n - 1])) {
            tuples[*p] = t;
        }
    }
    Ok(AssembledEmbedding {
        n,
        k,
        q,
        nonedge: representative_nonedge(n, q),
        tuples,
    })
}

/// The closed-form leg color lists for `n ≥ 4`, legs `L_1..L_{n+1}`.
pub fn class_f_leg_colors(n: usize) -> Result<Vec<Vec<usize>>> {
    if n < 4 {
        return Err(Error::contract("closed-form leg colors need n >= 4"));
    }
    let mut lists = Vec::new();
    for i in 1..n {
        let mut l: Vec<usize> = (0..n).map(|t| (i - 1 + t) % n + 1).collect();
        l.extend([i, n]);
        lists.push(l);
    }
    let mut ln = vec![n];
    ln.extend(1..=n - 2);
    ln.extend([n, n - 1, n]);
    lists.push(ln);
    let mut last = vec![n];
    last.extend(1..n);
    last.extend([1, n]);
    lists.push(last);
    Ok(lists)
}

/// `H + p_1(n)p_1(n+1)` with a nice `n`-coloring: the closed-form legs
/// and a searched `(n−1)`-coloring of `F` for `n ≥ 4`, a full search for
/// `n = 3`.
pub fn class_f_coloring(h: &Graph, w: &ClassFWitness, budget: Budget) -> Result<(Graph, Edge, NiceColoring)> {
    let n = w.n;
    need_n(n)?;
    let f = w.added_edge();
    let plus = h.toggled(f);
    if n == 3 {
        let c = search_nice(&plus, n, budget)?
            .ok_or_else(|| Error::contract("no nice coloring with n colors"))?;
        return Ok((plus, f, c));
    }
    let sub = nice_with(&w.f_graph(h), n - 1, budget)?;
    let mut colors = vec![(f, n)];
    lift_coloring(&sub, &w.f_vertices, &(1..n).collect::<Vec<_>>(), &mut colors);
    for (leg, list) in w.legs.iter().zip(class_f_leg_colors(n)?) {
        for (p, c) in leg.windows(2).zip(list) {
            colors.push((Edge::new(p[0], p[1]), c));
        }
    }
    Ok((plus, f, NiceColoring::new(n, colors)))
}

/// Leg color lists of `c`, head edge first.
pub fn leg_color_lists(w: &ClassFWitness, c: &NiceColoring) -> Vec<Vec<usize>> {
    w.legs
        .iter()
        .map(|leg| {
            leg.windows(2)
                .map(|p| c.color(Edge::new(p[0], p[1])).expect("leg edge colored"))
                .collect()
        })
        .collect()
}

// ------------------------------------------------------- subdivisions

/// The `(n+1)`-subdivision `H'` of `H` as a class-F graph with head `v`,
/// and the nice `(n−1)`-coloring of `F'`, the subdivision of `H − v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubdivisionColoring {
    #[serde(skip)]
    pub subdivided: Graph,
    pub witness: ClassFWitness,
    /// Coloring of `F'` in the labels of `witness.f_vertices`.
    pub coloring: NiceColoring,
}

/// Path color list between end colors `a` (first edge) and `b` (last).
pub fn subdivision_path_colors(n: usize, a: usize, b: usize) -> Vec<usize> {
    if a == b {
        let i = a;
        if i == 1 {
            let mut l = vec![1, 2, 1];
            l.extend(3..n);
            l.extend([2, 1]);
            l
        } else {
            let mut l = vec![i];
            l.extend(1..n);
            l.extend([1, i]);
            l
        }
    } else {
        let (i, j) = (a.max(b), a.min(b));
        let x = (1..n).find(|&x| x != j && x != n - 1).expect("n - 1 >= 3");
        let mut l = vec![i];
        l.extend(1..n);
        l.extend([x, j]);
        if a < b {
            l.reverse();
        }
        l
    }
}

/// Needs `n ≥ 4`, `v` the unique vertex of degree `n + 1` and every other
/// vertex of degree at most `n − 1` in `H − v`.
pub fn subdivision_coloring(h: &Graph, v: usize, n: usize) -> Result<SubdivisionColoring> {
    if n < 4 {
        return Err(Error::contract("subdivision coloring needs n >= 4"));
    }
    if v >= h.order() || h.degree(v) != n + 1 {
        return Err(Error::contract(format!("vertex {v} must have degree {}", n + 1)));
    }
    let rest: Vec<usize> = (0..h.order()).filter(|&x| x != v).collect();
    if rest.iter().any(|&x| h.degree(x) - usize::from(h.has_edge(x, v)) > n - 1) {
        return Err(Error::contract(format!("H - v must have maximum degree at most {}", n - 1)));
    }
    let s = n + 1;
    let edges = h.edges();
    let sub = crate::graph::subdivide(h, s);
    let path_of = |idx: usize| -> Vec<usize> {
        let e = edges[idx];
        let start = h.order() + idx * s;
        std::iter::once(e.a).chain(start..start + s).chain(std::iter::once(e.b)).collect()
    };
    // end colors: at each original vertex, rank among its edges in H − v
    let end_color = |x: usize, e: Edge| -> usize {
        1 + h.neighbors(x).filter(|&y| y != v && y < e.other(x)).count()
    };
    let mut legs = Vec::new();
    let mut colored: Vec<(Edge, usize)> = Vec::new();
    for (idx, e) in edges.iter().enumerate() {
        let p = path_of(idx);
        if e.contains(v) {
            legs.push(if e.a == v { p } else { p.into_iter().rev().collect() });
            continue;
        }
        let list = subdivision_path_colors(n, end_color(e.a, *e), end_color(e.b, *e));
        for (w, c) in p.windows(2).zip(list) {
            colored.push((Edge::new(w[0], w[1]), c));
        }
    }
    let internal: Vec<usize> = legs.iter().flat_map(|l| l[1..=s].to_vec()).collect();
    let f_vertices: Vec<usize> = (0..sub.order()).filter(|x| *x != v && !internal.contains(x)).collect();
    let mut leaves: Vec<usize> = legs.iter().map(|l| l[s + 1]).collect();
    leaves.sort_unstable();
    let local = |x: usize| f_vertices.binary_search(&x).expect("vertex of F'");
    let coloring = NiceColoring::new(
        n - 1,
        colored
            .into_iter()
            .map(|(e, c)| (Edge::new(local(e.a), local(e.b)), c))
            .collect(),
    );
    Ok(SubdivisionColoring {
        subdivided: sub,
        witness: ClassFWitness {
            n,
            head: v,
            legs,
            f_vertices,
            leaves,
        },
        coloring,
    })
}

// ------------------------------------------------------- named families

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "route", rename_all = "snake_case")]
pub enum Route {
    /// A tree in class T with parameter `n`, saturated by `□ⁿK_k`.
    Tree { n: usize },
    /// Chipped; saturated by some `K_k □ K_k`.
    Chipped { kind: crate::classifier::ChipKind },
    /// Neither route applies.
    None { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyExample {
    pub name: String,
    pub graph6: String,
    pub expected: Route,
    pub found: Route,
    /// Least saturating clique order found within the cap.
    pub k: Option<usize>,
    pub cap: usize,
}

fn route_of(h: &Graph) -> Result<Route> {
    use crate::classifier::{classify, GoodnessVerdict};
    if is_tree(h) {
        let n = h.max_degree().saturating_sub(1);
        if n >= 3 && recognize_class_t(h, n)? {
            return Ok(Route::Tree { n });
        }
    }
    Ok(match classify(h)? {
        GoodnessVerdict::Chipped(w) => Route::Chipped { kind: w.kind },
        GoodnessVerdict::ClassAB { .. } => Route::None {
            reason: "2-Hamming, in classes A and B".into(),
        },
        GoodnessVerdict::NotGood { reason } => Route::None { reason },
    })
}

/// Least `k ≤ cap` with `□ⁿK_k` saturated for `h`, by the symmetry-reduced
/// check.
pub fn least_saturating_power(h: &Graph, n: usize, cap: usize) -> Result<Option<usize>> {
    for k in 2..=cap {
        let hg = build(n, k)?;
        if crate::saturation::verify_hamming(&hg, h).holds {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Spiders, the chorded odd cycle and cycles with a pendant path, each
/// with the expected route, the route found and a saturating `k ≤ cap`.
pub fn family_examples(cap: usize) -> Result<Vec<FamilyExample>> {
    use crate::classifier::ChipKind;
    use crate::graph::generators::{cycle_with_chord, cycle_with_tail, spider, SpiderSpec};
    let cases: Vec<(String, Graph, Route)> = vec![
        ("spider 3 legs, height 2".into(), spider(&SpiderSpec::balanced(3, 2))?, Route::Chipped { kind: ChipKind::Ch1 }),
        ("spider legs 1,2,3".into(), spider(&SpiderSpec { legs: vec![1, 2, 3] })?, Route::Chipped { kind: ChipKind::Ch1 }),
        ("spider 4 legs, height 1".into(), spider(&SpiderSpec::balanced(4, 1))?, Route::Tree { n: 3 }),
        ("spider 4 legs, height 2".into(), spider(&SpiderSpec::balanced(4, 2))?, Route::Tree { n: 3 }),
        ("chorded 7-cycle".into(), cycle_with_chord(7), Route::Chipped { kind: ChipKind::Ch2 }),
        ("5-cycle with path of length 2".into(), cycle_with_tail(5, 2), Route::Chipped { kind: ChipKind::Ch1 }),
        ("4-cycle with path of length 1".into(), cycle_with_tail(4, 1), Route::Chipped { kind: ChipKind::Ch1 }),
        ("6-cycle with path of length 2".into(), cycle_with_tail(6, 2), Route::Chipped { kind: ChipKind::Ch1 }),
    ];
    let mut out = Vec::new();
    for (name, g, expected) in cases {
        let found = route_of(&g)?;
        let k = match found {
            Route::Tree { n } => least_saturating_power(&g, n, cap)?,
            _ => least_saturating_power(&g, 2, cap)?,
        };
        out.push(FamilyExample {
            name,
            graph6: crate::graph::to_graph6(&g),
            expected,
            found,
            k,
            cap,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_nice;
    use crate::graph::generators::*;

    fn budget() -> Budget {
        Budget::default()
    }

    fn nice(g: &Graph, c: &NiceColoring) -> bool {
        verify_nice(g, c, budget().paths_per_pair).unwrap().is_ok()
    }

    #[test]
    fn class_h_recognition() {
        let w = recognize_class_h(&star(4), 3, budget()).unwrap().unwrap();
        assert_eq!(w.r, 0);
        assert_eq!(w.components, vec![vec![1], vec![2], vec![3], vec![4]]);
        assert_eq!(w.ell, 1);
        assert!(recognize_class_h(&star(3), 3, budget()).unwrap().is_none());
        assert!(recognize_class_h(&star(4), 2, budget()).is_err());
        for legs in [vec![1, 1, 1, 1], vec![2, 2, 2, 2], vec![1, 2, 3, 4]] {
            let t = spider(&SpiderSpec { legs }).unwrap();
            assert!(recognize_class_t(&t, 3).unwrap());
            assert!(recognize_class_h(&t, 3, budget()).unwrap().is_some());
        }
    }

    #[test]
    fn class_t_recognition() {
        assert!(recognize_class_t(&spider(&SpiderSpec::balanced(4, 2)).unwrap(), 3).unwrap());
        assert!(!recognize_class_t(&path(5), 3).unwrap());
        let double = Graph::from_edges(10, [(0, 1), (0, 2), (0, 3), (0, 4), (4, 5), (4, 6), (4, 7), (4, 8), (8, 9)]);
        assert!(!recognize_class_t(&double, 3).unwrap());
        // a component vertex of degree n is too much
        let heavy = Graph::from_edges(8, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7)]);
        assert!(!recognize_class_t(&heavy, 3).unwrap());
    }

    #[test]
    fn class_h_embeddings_verify() {
        for h in [star(4), spider(&SpiderSpec::balanced(4, 2)).unwrap(), spider(&SpiderSpec { legs: vec![1, 2, 1, 3] }).unwrap()] {
            let hw = recognize_class_h(&h, 3, budget()).unwrap().unwrap();
            for q in 2..=3 {
                let plan = class_h_plan(&h, &hw, q).unwrap();
                let emb = class_h_embedding(&h, &hw, &plan).unwrap();
                assert!(emb.verify(&h).unwrap(), "{h:?} q={q}");
                assert_eq!(emb.tuples[hw.r], vec![0, 0, 0]);
                for i in 0..3 {
                    let mut e = vec![0; 3];
                    e[i] = 1;
                    assert_eq!(emb.tuples[hw.attachments[i]], e);
                }
                assert_eq!(emb.tuples[hw.attachments[3]], emb.nonedge.1);
            }
        }
        let h = star(4);
        let hw = recognize_class_h(&h, 3, budget()).unwrap().unwrap();
        let plan = class_h_plan(&h, &hw, 2).unwrap();
        assert_eq!(plan.k, 7);
        let mut bad = plan.clone();
        bad.x[0] = 3;
        assert!(class_h_embedding(&h, &hw, &bad).is_err());
        assert!(class_h_plan(&h, &hw, 4).is_err());
    }

    #[test]
    fn class_h_colorings_verify() {
        let h = star(4);
        let hw = recognize_class_h(&h, 3, budget()).unwrap().unwrap();
        let (plus, f, c) = class_h_coloring(&h, &hw, budget()).unwrap();
        assert_eq!(f, Edge::new(3, 4));
        assert!(nice(&plus, &c));
        assert_eq!(c.palette, 3);
        for i in 0..3 {
            assert_eq!(c.color(Edge::new(0, hw.attachments[i])), Some(i + 1));
        }
        assert_eq!(c.color(f), Some(3));
        let t = spider(&SpiderSpec { legs: vec![2, 3, 1, 2] }).unwrap();
        let hw = recognize_class_h(&t, 3, budget()).unwrap().unwrap();
        let (plus, _, c) = class_h_coloring(&t, &hw, budget()).unwrap();
        assert!(nice(&plus, &c));
    }

    #[test]
    fn direct_search_stays_within_plan_bound() {
        let h = star(4);
        let k = least_saturating_power(&h, 3, 7).unwrap().unwrap();
        assert!(k <= EmbeddingPlan::required_k(3, 2));
    }

    fn k4_instance() -> (Graph, ClassFWitness) {
        class_f_instance(3, &complete(4), &[0, 1, 2, 3]).unwrap()
    }

    fn p5_instance() -> (Graph, ClassFWitness) {
        class_f_instance(4, &path(5), &[0, 1, 2, 3, 4]).unwrap()
    }

    #[test]
    fn class_f_structure() {
        let (h, w) = k4_instance();
        assert!(validate_class_f(&h, &w, None, budget()).unwrap());
        assert_eq!(recognize_class_f(&h, 3, budget()).unwrap(), Some(w.clone()));
        // height n + 1 instead of n + 2
        let short = spider(&SpiderSpec::balanced(4, 4)).unwrap();
        assert!(recognize_class_f(&short, 3, budget()).unwrap().is_none());
        // legs sharing an internal vertex
        let mut shared = w.clone();
        shared.legs[1][2] = shared.legs[0][2];
        assert!(!validate_class_f(&h, &shared, None, budget()).unwrap());
        let mut wrong_height = w.clone();
        for leg in &mut wrong_height.legs {
            leg.remove(2);
        }
        assert!(!validate_class_f(&h, &wrong_height, None, budget()).unwrap());
        let (h4, w4) = p5_instance();
        assert!(validate_class_f(&h4, &w4, None, budget()).unwrap());
    }

    #[test]
    fn class_f_embeddings_verify() {
        for (h, w) in [k4_instance(), p5_instance()] {
            let n = w.n;
            let k = class_f_min_k(&h, &w).unwrap();
            assert!(class_f_embedding(&h, &w, 2, k - 1).is_err());
            for q in 2..=n {
                let emb = class_f_embedding(&h, &w, q, k).unwrap();
                assert!(emb.verify(&h).unwrap(), "n={n} q={q}");
                for i in 0..n - 1 {
                    let mut e = vec![0; n];
                    e[i] = 1;
                    assert_eq!(emb.tuples[w.legs[i][1]], e);
                }
                assert_eq!(emb.tuples[w.legs[n][1]], emb.nonedge.1);
            }
        }
        assert_eq!(class_f_min_k(&k4_instance().0, &k4_instance().1).unwrap(), 11);
        assert_eq!(class_f_min_k(&p5_instance().0, &p5_instance().1).unwrap(), 10);
    }

    #[test]
    fn leg_lists_for_four() {
        assert_eq!(
            class_f_leg_colors(4).unwrap(),
            vec![
                vec![1, 2, 3, 4, 1, 4],
                vec![2, 3, 4, 1, 2, 4],
                vec![3, 4, 1, 2, 3, 4],
                vec![4, 1, 2, 4, 3, 4],
                vec![4, 1, 2, 3, 1, 4],
            ]
        );
        for n in 4..=7 {
            for l in class_f_leg_colors(n).unwrap() {
                assert_eq!(l.len(), n + 2);
                assert_eq!(*l.last().unwrap(), n);
                assert!((1..=n).all(|c| l.contains(&c)));
            }
        }
    }

    #[test]
    fn class_f_colorings_verify() {
        let (h, w) = p5_instance();
        let (plus, f, c) = class_f_coloring(&h, &w, budget()).unwrap();
        assert!(nice(&plus, &c));
        assert_eq!(leg_color_lists(&w, &c), class_f_leg_colors(4).unwrap());
        assert_eq!(c.color(f), Some(4));
        let (h, w) = k4_instance();
        let (plus, _, c) = class_f_coloring(&h, &w, budget()).unwrap();
        assert!(nice(&plus, &c));
        assert_eq!(c.palette, 3);
    }

    #[test]
    fn subdivision_lists() {
        assert_eq!(subdivision_path_colors(4, 2, 2), vec![2, 1, 2, 3, 1, 2]);
        assert_eq!(subdivision_path_colors(4, 1, 1), vec![1, 2, 1, 3, 2, 1]);
        assert_eq!(subdivision_path_colors(5, 1, 1), vec![1, 2, 1, 3, 4, 2, 1]);
        assert_eq!(subdivision_path_colors(4, 3, 1), vec![3, 1, 2, 3, 2, 1]);
        assert_eq!(subdivision_path_colors(4, 1, 3), vec![1, 2, 3, 2, 1, 3]);
        for n in 4..=6 {
            for a in 1..n {
                for b in 1..n {
                    let l = subdivision_path_colors(n, a, b);
                    assert_eq!(l.len(), n + 2);
                    assert_eq!((l[0], l[n + 1]), (a, b));
                    assert!(l.windows(2).all(|p| p[0] != p[1]));
                    assert!((1..n).all(|c| l.contains(&c)));
                }
            }
        }
    }

    #[test]
    fn subdivision_colorings_verify() {
        // center 0 of degree 5; a triangle and a pendant among the leaves
        let h = Graph::from_edges(7, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (2, 3), (1, 3), (4, 6)]);
        let out = subdivision_coloring(&h, 0, 4).unwrap();
        let f = out.witness.f_graph(&out.subdivided);
        assert!(nice(&f, &out.coloring));
        assert_eq!(out.coloring.palette, 3);
        assert!(validate_class_f(&out.subdivided, &out.witness, Some(&out.coloring), budget()).unwrap());
        // end edges at each original vertex get distinct colors
        for x in 1..7 {
            let lx = out.witness.f_local(x);
            let ends: Vec<usize> = f.neighbors(lx).map(|y| out.coloring.color(Edge::new(lx, y)).unwrap()).collect();
            let mut d = ends.clone();
            d.sort_unstable();
            d.dedup();
            assert_eq!(d.len(), ends.len());
        }
        assert!(subdivision_coloring(&h, 1, 4).is_err());
        assert!(subdivision_coloring(&star(4), 0, 3).is_err());
    }

    #[test]
    fn three_leg_coloring_fixture() {
        // lexicographically least search result, frozen
        let (h, w) = k4_instance();
        let (_, _, c) = class_f_coloring(&h, &w, budget()).unwrap();
        assert_eq!(
            leg_color_lists(&w, &c),
            vec![
                vec![1, 2, 1, 3, 2],
                vec![2, 1, 2, 3, 2],
                vec![3, 1, 2, 1, 2],
                vec![3, 1, 2, 3, 2],
            ]
        );
    }

    #[test]
    fn named_families() {
        let out = family_examples(8).unwrap();
        assert_eq!(out.len(), 8);
        for e in &out {
            if e.name == "chorded 7-cycle" {
                assert!(matches!(e.found, Route::None { .. }));
                assert_eq!(e.k, None);
            } else {
                assert_eq!(e.found, e.expected, "{}", e.name);
                assert!(e.k.is_some(), "{}", e.name);
            }
        }
    }
}
