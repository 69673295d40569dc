//! 2-Hamming decompositions: two spanning families of vertex-disjoint
//! cliques whose edge sets partition `E(H)`.
//!
//! The non-singleton cliques of any such decomposition are exactly the
//! maximal cliques of `H`, and cliques sharing a vertex lie in different
//! families. A decomposition therefore exists iff every vertex lies in at
//! most two maximal cliques, no edge lies in two, and the clique
//! intersection graph is bipartite. Each connected component is then fixed
//! up to swapping the families.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::graph::{structure, Graph};

/// `f1`, `f2` list every component (singletons included), each clique
/// sorted and each family sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwoHammingDecomposition {
    pub f1: Vec<Vec<usize>>,
    pub f2: Vec<Vec<usize>>,
}

impl TwoHammingDecomposition {
    /// Family `1` or `2`.
    pub fn family(&self, i: usize) -> &[Vec<usize>] {
        match i {
            1 => &self.f1,
            2 => &self.f2,
            _ => panic!("family index must be 1 or 2, got {i}"),
        }
    }

    /// Number of components `C(F_i)`.
    pub fn count(&self, i: usize) -> usize {
        self.family(i).len()
    }

    pub fn swapped(&self) -> Self {
        TwoHammingDecomposition {
            f1: self.f2.clone(),
            f2: self.f1.clone(),
        }
    }

    /// The clique of family `i` containing `v`.
    pub fn clique_of(&self, i: usize, v: usize) -> &[usize] {
        self.family(i)
            .iter()
            .find(|c| c.contains(&v))
            .expect("families cover every vertex")
    }

    /// Family holding the edge `ab`, if it is an edge.
    pub fn family_of_edge(&self, a: usize, b: usize) -> Option<usize> {
        (1..=2).find(|&i| {
            self.family(i)
                .iter()
                .any(|c| c.len() >= 2 && c.contains(&a) && c.contains(&b))
        })
    }

    /// Degree of `v` inside family `i`.
    pub fn degree_in(&self, i: usize, v: usize) -> usize {
        self.clique_of(i, v).len() - 1
    }

    /// Structural check against `h`: spanning, disjoint, cliques, edges
    /// partitioned.
    pub fn is_valid_for(&self, h: &Graph) -> bool {
        let n = h.order();
        let mut covered = 0usize;
        for i in 1..=2 {
            let mut seen = vec![false; n];
            for c in self.family(i) {
                for (j, &a) in c.iter().enumerate() {
                    if a >= n || seen[a] {
                        return false;
                    }
                    seen[a] = true;
                    for &b in &c[j + 1..] {
                        if !h.has_edge(a, b) {
                            return false;
                        }
                    }
                }
                covered += c.len() * (c.len() - 1) / 2;
            }
            if seen.iter().any(|s| !s) {
                return false;
            }
        }
        covered == h.size()
            && h.edges()
                .iter()
                .all(|e| self.family_of_edge(e.a, e.b).is_some())
    }
}

/// `C(F_i|S)`: components of family `i` lying entirely inside `subset`.
pub fn restrict_count(dec: &TwoHammingDecomposition, family: usize, subset: &[usize]) -> usize {
    dec.family(family)
        .iter()
        .filter(|c| c.iter().all(|v| subset.contains(v)))
        .count()
}

/// Structure shared by all decompositions of one graph: the maximal
/// cliques, their canonical family (0 or 1), and their connected block.
#[derive(Debug, Clone)]
struct Skeleton {
    n: usize,
    cliques: Vec<Vec<usize>>,
    side: Vec<usize>,
    /// Block index of each clique; blocks are the components of `h` that
    /// have edges, numbered by least clique.
    block: Vec<usize>,
    blocks: usize,
}

fn skeleton(h: &Graph) -> Option<Skeleton> {
    let n = h.order();
    let cliques: Vec<Vec<usize>> = structure::maximal_cliques(h)
        .into_iter()
        .filter(|c| c.len() >= 2)
        .collect();
    let mut at: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, c) in cliques.iter().enumerate() {
        for &v in c {
            at[v].push(i);
            if at[v].len() > 2 {
                return None;
            }
        }
    }
    let covered: usize = cliques.iter().map(|c| c.len() * (c.len() - 1) / 2).sum();
    if covered != h.size() {
        return None;
    }
    let m = cliques.len();
    let mut side = vec![usize::MAX; m];
    let mut block = vec![0; m];
    let mut blocks = 0;
    for s in 0..m {
        if side[s] != usize::MAX {
            continue;
        }
        side[s] = 0;
        block[s] = blocks;
        let mut queue = VecDeque::from([s]);
        while let Some(c) = queue.pop_front() {
            for &v in &cliques[c] {
                for &d in &at[v] {
                    if d == c {
                        continue;
                    }
                    if side[d] == usize::MAX {
                        side[d] = 1 - side[c];
                        block[d] = blocks;
                        queue.push_back(d);
                    } else if side[d] == side[c] {
                        return None;
                    }
                }
            }
        }
        blocks += 1;
    }
    Some(Skeleton {
        n,
        cliques,
        side,
        block,
        blocks,
    })
}

impl Skeleton {
    /// Assemble with the blocks in `flip` swapped.
    fn assemble(&self, flip: &[bool]) -> TwoHammingDecomposition {
        let mut fam: [Vec<Vec<usize>>; 2] = [Vec::new(), Vec::new()];
        let mut covered = [vec![false; self.n], vec![false; self.n]];
        for (i, c) in self.cliques.iter().enumerate() {
            let s = self.side[i] ^ flip[self.block[i]] as usize;
            for &v in c {
                covered[s][v] = true;
            }
            fam[s].push(c.clone());
        }
        for s in 0..2 {
            let singles = (0..self.n).filter(|&v| !covered[s][v]).map(|v| vec![v]);
            fam[s].extend(singles);
            fam[s].sort();
        }
        let [f1, f2] = fam;
        TwoHammingDecomposition { f1, f2 }
    }

    /// Per block: components contributed to (canonical f1, canonical f2).
    fn block_counts(&self) -> Vec<(usize, usize)> {
        let mut counts = vec![(0usize, 0usize); self.blocks];
        let mut touched = vec![[false; 2]; self.n];
        let mut vertex_block = vec![usize::MAX; self.n];
        for (i, c) in self.cliques.iter().enumerate() {
            let b = self.block[i];
            if self.side[i] == 0 {
                counts[b].0 += 1;
            } else {
                counts[b].1 += 1;
            }
            for &v in c {
                touched[v][self.side[i]] = true;
                vertex_block[v] = b;
            }
        }
        for v in 0..self.n {
            if vertex_block[v] == usize::MAX {
                continue;
            }
            let b = vertex_block[v];
            if !touched[v][0] {
                counts[b].0 += 1;
            }
            if !touched[v][1] {
                counts[b].1 += 1;
            }
        }
        counts
    }

    fn isolated(&self) -> usize {
        let mut hit = vec![false; self.n];
        for c in &self.cliques {
            for &v in c {
                hit[v] = true;
            }
        }
        hit.iter().filter(|h| !**h).count()
    }
}

/// The canonical decomposition: in every component the lexicographically
/// least maximal clique is in `f1`. `None` iff `h` is not 2-Hamming.
pub fn decompose(h: &Graph) -> Option<TwoHammingDecomposition> {
    let sk = skeleton(h)?;
    Some(sk.assemble(&vec![false; sk.blocks]))
}

pub fn is_two_hamming(h: &Graph) -> bool {
    skeleton(h).is_some()
}

/// Every decomposition, one per swap choice of the components with edges,
/// in order of the swap vector read as a binary number (first component
/// most significant). `None` if not 2-Hamming or more than `cap` results.
pub fn all_decompositions(h: &Graph, cap: usize) -> Option<Vec<TwoHammingDecomposition>> {
    let sk = skeleton(h)?;
    if sk.blocks >= usize::BITS as usize || 1usize << sk.blocks > cap {
        return None;
    }
    Some(
        (0..1usize << sk.blocks)
            .map(|code| {
                let flip: Vec<bool> = (0..sk.blocks)
                    .map(|b| code >> (sk.blocks - 1 - b) & 1 == 1)
                    .collect();
                sk.assemble(&flip)
            })
            .collect(),
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinK {
    /// `min max(C(F1), C(F2))` over all decompositions.
    pub k: usize,
    /// The optimal decomposition with the lexicographically least swap
    /// vector.
    pub decomposition: TwoHammingDecomposition,
    /// Whether the optimal decompositions have `C(F1) = C(F2)`. Either all
    /// optimal decompositions are balanced or none is.
    pub balanced: bool,
}

/// Least `k` with `h ⊆_I K_k □ K_k`, computed from decompositions.
pub fn min_k(h: &Graph) -> Option<MinK> {
    let sk = skeleton(h)?;
    let counts = sk.block_counts();
    let iso = sk.isolated();
    let total: usize = counts.iter().map(|&(a, b)| a + b).sum::<usize>() + 2 * iso;
    // reach[j][s]: blocks j.. can add exactly s to F1
    let m = counts.len();
    let mut reach = vec![vec![false; total + 1]; m + 1];
    reach[m][iso] = true;
    for j in (0..m).rev() {
        let (a, b) = counts[j];
        for s in 0..=total {
            if reach[j + 1][s] {
                reach[j][s + a] = true;
                reach[j][s + b] = true;
            }
        }
    }
    let cost = |s: usize| s.max(total - s);
    let k = (0..=total)
        .filter(|&s| reach[0][s])
        .map(cost)
        .min()
        .expect("some assignment exists");
    let mut flip = Vec::with_capacity(m);
    let mut acc = 0;
    for j in 0..m {
        let (a, _) = counts[j];
        let keep = (0..=total).any(|s| {
            s >= acc + a && reach[j + 1][s - acc - a] && cost(s) == k
        });
        flip.push(!keep);
        acc += if keep { a } else { counts[j].1 };
    }
    let decomposition = sk.assemble(&flip);
    let balanced = decomposition.count(1) == decomposition.count(2);
    Some(MinK {
        k,
        decomposition,
        balanced,
    })
}

/// `Some(balanced)` for 2-Hamming graphs.
pub fn is_balanced(h: &Graph) -> Option<bool> {
    min_k(h).map(|m| m.balanced)
}
