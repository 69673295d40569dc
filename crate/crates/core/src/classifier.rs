//! Deciding whether some `K_k □ K_k` is induced-saturated for a connected
//! graph `H`. Graphs that are not 2-Hamming qualify exactly when they are
//! chipped; 2-Hamming graphs exactly when they lie in both classes A and B.

use serde::{Deserialize, Serialize};

use crate::decomposition::{decompose, min_k, restrict_count, TwoHammingDecomposition};
use crate::error::{Error, Result};
use crate::graph::structure::{self, components, is_connected};
use crate::graph::{Edge, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ChipKind {
    Ch1,
    Ch2,
    Ch3,
}

/// `H = H' − uv` with `K` the clique component of `H'` through `uv`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChippedWitness {
    pub kind: ChipKind,
    pub u: usize,
    pub v: usize,
    pub w: usize,
    /// Fourth clique vertex for ch3.
    pub x: Option<usize>,
    pub clique: Vec<usize>,
    /// Components of `H' − E(K)` (ch2, ch3).
    pub split: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "lowercase")]
pub enum ClassAWitness {
    A1 { u: usize, v: usize },
    A2 { u: usize, v: usize, w: usize, h1: Vec<usize>, h2: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "lowercase")]
pub enum ClassBWitness {
    /// The bridge `uv` lies in family `i`.
    B1 { u: usize, v: usize, i: usize, h1: Vec<usize>, h2: Vec<usize> },
    B2 { u: usize, v: usize, w: usize, h1: Vec<usize>, h2: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum GoodnessVerdict {
    Chipped(ChippedWitness),
    ClassAB {
        a: ClassAWitness,
        b: ClassBWitness,
        /// `min_k(H) − 1`.
        k: usize,
    },
    NotGood { reason: String },
}

impl GoodnessVerdict {
    pub fn is_good(&self) -> bool {
        !matches!(self, GoodnessVerdict::NotGood { .. })
    }
}

fn require_connected(h: &Graph) -> Result<()> {
    if h.order() == 0 || !is_connected(h) {
        return Err(Error::contract("classification needs a nonempty connected graph"));
    }
    Ok(())
}

/// Components of `h` minus the edges among `clique`.
fn split_without(h: &Graph, clique: &[usize]) -> Vec<Vec<usize>> {
    components(&structure::without_clique_edges(h, clique))
}

/// Checks for one nonedge, in the order ch1, ch2, ch3.
fn chipped_at(h: &Graph, f: Edge, out: &mut Vec<ChippedWitness>, all: bool) {
    let hp = h.toggled(f);
    if !is_connected(&hp) {
        return;
    }
    let Some(dec) = decompose(&hp) else { return };
    let fam = dec.family_of_edge(f.a, f.b).expect("uv is an edge of H'");
    let clique = dec.clique_of(fam, f.a).to_vec();
    let (u, v) = (f.a, f.b);
    match clique.len() {
        3 => {
            let w = *clique.iter().find(|&&x| x != u && x != v).expect("third vertex");
            if hp.degree(w) >= 3 {
                out.push(ChippedWitness {
                    kind: ChipKind::Ch1,
                    u,
                    v,
                    w,
                    x: None,
                    clique: clique.clone(),
                    split: Vec::new(),
                });
                if !all {
                    return;
                }
            }
            let split = split_without(&hp, &clique);
            if split.len() == 2 && split.contains(&vec![w]) {
                out.push(ChippedWitness {
                    kind: ChipKind::Ch2,
                    u,
                    v,
                    w,
                    x: None,
                    clique,
                    split,
                });
            }
        }
        4 => {
            let split = split_without(&hp, &clique);
            for (a, b) in [(u, v), (v, u)] {
                for &w in clique.iter().filter(|&&x| x != a && x != b) {
                    let x = *clique
                        .iter()
                        .find(|&&y| y != a && y != b && y != w)
                        .expect("fourth vertex");
                    let comp_a = split.iter().find(|c| c.contains(&a)).expect("covers a");
                    let meets_only_a = clique.iter().all(|y| (*y == a) == comp_a.contains(y));
                    if hp.degree(w) == 3 && meets_only_a {
                        out.push(ChippedWitness {
                            kind: ChipKind::Ch3,
                            u: a,
                            v: b,
                            w,
                            x: Some(x),
                            clique: clique.clone(),
                            split: split.clone(),
                        });
                        if !all {
                            return;
                        }
                    }
                }
            }
        }
        _ => {}
    }
}

/// Chipped witnesses over nonedges in lexicographic order; only the first
/// unless `all`.
pub fn chipped_witnesses(h: &Graph, all: bool) -> Result<Vec<ChippedWitness>> {
    require_connected(h)?;
    let mut out = Vec::new();
    for f in h.non_edges() {
        chipped_at(h, f, &mut out, all);
        if !all && !out.is_empty() {
            out.truncate(1);
            break;
        }
    }
    Ok(out)
}

pub fn find_chipped(h: &Graph) -> Result<Option<ChippedWitness>> {
    Ok(chipped_witnesses(h, false)?.into_iter().next())
}

impl ChippedWitness {
    /// Re-derive every clause from `h` alone.
    pub fn replays(&self, h: &Graph) -> bool {
        let (u, v, w) = (self.u, self.v, self.w);
        if u == v || h.has_edge(u, v) || !is_connected(h) {
            return false;
        }
        let hp = h.toggled(Edge::new(u, v));
        let Some(dec) = decompose(&hp) else {
            return false;
        };
        let is_component = (1..=2).any(|i| dec.family(i).contains(&self.clique));
        if !is_component || !self.clique.contains(&u) || !self.clique.contains(&v) {
            return false;
        }
        if !self.clique.contains(&w) || w == u || w == v {
            return false;
        }
        let split = split_without(&hp, &self.clique);
        match self.kind {
            ChipKind::Ch1 => self.clique.len() == 3 && hp.degree(w) >= 3,
            ChipKind::Ch2 => self.clique.len() == 3 && split.len() == 2 && split.contains(&vec![w]),
            ChipKind::Ch3 => {
                let Some(comp_u) = split.iter().find(|c| c.contains(&u)) else {
                    return false;
                };
                self.clique.len() == 4
                    && hp.degree(w) == 3
                    && self.clique.iter().all(|y| (*y == u) == comp_u.contains(y))
            }
        }
    }
}

/// The optimal decomposition of a connected unbalanced 2-Hamming graph,
/// oriented so that `C(F1) > C(F2)`.
pub fn oriented_unbalanced(h: &Graph) -> Option<TwoHammingDecomposition> {
    if h.order() == 0 || !is_connected(h) {
        return None;
    }
    let best = min_k(h)?;
    if best.balanced {
        return None;
    }
    let d = best.decomposition;
    Some(if d.count(1) > d.count(2) { d } else { d.swapped() })
}

fn dominates(dec: &TwoHammingDecomposition, part: &[usize], slack: usize) -> bool {
    restrict_count(dec, 1, part) >= restrict_count(dec, 2, part) + slack
}

/// Splits `h` minus `removed` into exactly three parts with `{w}` among
/// them; returns the other two, both with `C(F1|·) > C(F2|·)`.
fn rebalancing_split(
    h: &Graph,
    dec: &TwoHammingDecomposition,
    removed: &[Edge],
    w: usize,
) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut g = h.clone();
    for e in removed {
        g = g.toggled(*e);
    }
    let comps = components(&g);
    if comps.len() != 3 || !comps.contains(&vec![w]) {
        return None;
    }
    let rest: Vec<Vec<usize>> = comps.into_iter().filter(|c| c != &vec![w]).collect();
    if rest.iter().all(|c| dominates(dec, c, 1)) {
        Some((rest[0].clone(), rest[1].clone()))
    } else {
        None
    }
}

pub fn class_a_witnesses(h: &Graph, all: bool) -> Vec<ClassAWitness> {
    let Some(dec) = oriented_unbalanced(h) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for f in h.non_edges() {
        let (u, v) = (f.a, f.b);
        if dec.degree_in(1, u) == 0 && dec.degree_in(1, v) == 0 {
            out.push(ClassAWitness::A1 { u, v });
            if !all {
                return out;
            }
        }
        for w in h.neighbors(u).filter(|&w| h.has_edge(w, v)) {
            let removed = [Edge::new(u, w), Edge::new(w, v)];
            if let Some((h1, h2)) = rebalancing_split(h, &dec, &removed, w) {
                out.push(ClassAWitness::A2 { u, v, w, h1, h2 });
                if !all {
                    return out;
                }
            }
        }
    }
    out
}

pub fn class_b_witnesses(h: &Graph, all: bool) -> Vec<ClassBWitness> {
    let Some(dec) = oriented_unbalanced(h) else {
        return Vec::new();
    };
    let bridges = structure::bridges(h);
    let mut out = Vec::new();
    for e in h.edges() {
        let (u, v) = (e.a, e.b);
        if bridges.contains(&e) {
            let i = dec.family_of_edge(u, v).expect("edge is covered");
            let parts = components(&h.toggled(e));
            if parts.iter().all(|c| dominates(&dec, c, i)) {
                out.push(ClassBWitness::B1 {
                    u,
                    v,
                    i,
                    h1: parts[0].clone(),
                    h2: parts[1].clone(),
                });
                if !all {
                    return out;
                }
            }
        }
        for w in h.neighbors(u).filter(|&w| h.has_edge(w, v)) {
            let removed = [e, Edge::new(u, w), Edge::new(v, w)];
            if let Some((h1, h2)) = rebalancing_split(h, &dec, &removed, w) {
                out.push(ClassBWitness::B2 { u, v, w, h1, h2 });
                if !all {
                    return out;
                }
            }
        }
    }
    out
}

pub fn in_class_a(h: &Graph) -> Option<ClassAWitness> {
    class_a_witnesses(h, false).into_iter().next()
}

pub fn in_class_b(h: &Graph) -> Option<ClassBWitness> {
    class_b_witnesses(h, false).into_iter().next()
}

impl ClassAWitness {
    pub fn replays(&self, h: &Graph) -> bool {
        let Some(dec) = oriented_unbalanced(h) else {
            return false;
        };
        match self {
            ClassAWitness::A1 { u, v } => {
                u != v
                    && !h.has_edge(*u, *v)
                    && dec.degree_in(1, *u) == 0
                    && dec.degree_in(1, *v) == 0
            }
            ClassAWitness::A2 { u, v, w, h1, h2 } => {
                u != v
                    && !h.has_edge(*u, *v)
                    && h.has_edge(*u, *w)
                    && h.has_edge(*v, *w)
                    && rebalancing_split(h, &dec, &[Edge::new(*u, *w), Edge::new(*w, *v)], *w)
                        .is_some_and(|(a, b)| (&a, &b) == (h1, h2) || (&a, &b) == (h2, h1))
            }
        }
    }
}

impl ClassBWitness {
    pub fn replays(&self, h: &Graph) -> bool {
        let Some(dec) = oriented_unbalanced(h) else {
            return false;
        };
        match self {
            ClassBWitness::B1 { u, v, i, h1, h2 } => {
                let e = Edge::new(*u, *v);
                h.has_edge(*u, *v)
                    && components(&h.toggled(e)) == vec![h1.clone(), h2.clone()]
                    && dec.family_of_edge(*u, *v) == Some(*i)
                    && dominates(&dec, h1, *i)
                    && dominates(&dec, h2, *i)
            }
            ClassBWitness::B2 { u, v, w, h1, h2 } => {
                let t = [Edge::new(*u, *v), Edge::new(*u, *w), Edge::new(*v, *w)];
                t.iter().all(|e| h.has_edge(e.a, e.b))
                    && rebalancing_split(h, &dec, &t, *w)
                        .is_some_and(|(a, b)| (&a, &b) == (h1, h2) || (&a, &b) == (h2, h1))
            }
        }
    }
}

pub fn classify(h: &Graph) -> Result<GoodnessVerdict> {
    require_connected(h)?;
    let Some(best) = min_k(h) else {
        return Ok(match find_chipped(h)? {
            Some(w) => GoodnessVerdict::Chipped(w),
            None => GoodnessVerdict::NotGood {
                reason: "not 2-Hamming and not chipped".into(),
            },
        });
    };
    if best.balanced {
        return Ok(GoodnessVerdict::NotGood {
            reason: "2-Hamming and balanced".into(),
        });
    }
    match (in_class_a(h), in_class_b(h)) {
        (Some(a), Some(b)) => Ok(GoodnessVerdict::ClassAB { a, b, k: best.k - 1 }),
        (None, _) => Ok(GoodnessVerdict::NotGood {
            reason: "unbalanced 2-Hamming, not in class A".into(),
        }),
        (_, None) => Ok(GoodnessVerdict::NotGood {
            reason: "unbalanced 2-Hamming, not in class B".into(),
        }),
    }
}
