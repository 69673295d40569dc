//! Exhaustive generation of all non-isomorphic graphs of small order.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::{canonical_form, parse_graph6, structure, Graph};
use crate::error::{Error, Result};

/// Largest order generated without an explicit override.
pub const DEFAULT_MAX_ORDER: usize = 8;
/// Hard ceiling: canonical forms stop at 12 vertices and order 10 is
/// already about 12 million graphs.
pub const HARD_MAX_ORDER: usize = 10;

/// All graphs of each order `0..=max_n`, one canonical representative per
/// isomorphism class, sorted by canonical graph6 string within an order.
pub fn graphs_by_order(max_n: usize) -> Result<Vec<Vec<Graph>>> {
    if max_n > HARD_MAX_ORDER {
        return Err(Error::resource("graph enumeration order", HARD_MAX_ORDER as u64));
    }
    let mut levels: Vec<Vec<Graph>> = vec![vec![Graph::empty(0)]];
    for n in 1..=max_n {
        let prev = &levels[n - 1];
        let forms: BTreeSet<String> = prev
            .par_iter()
            .flat_map_iter(|g| {
                (0u32..1 << (n - 1)).map(move |mask| {
                    let mut h = Graph::empty(n);
                    for e in g.edges() {
                        h.set_edge(e.a, e.b, true);
                    }
                    for v in 0..n - 1 {
                        if mask >> v & 1 == 1 {
                            h.set_edge(v, n - 1, true);
                        }
                    }
                    canonical_form(&h).expect("order within canonical range")
                })
            })
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        levels.push(
            forms
                .iter()
                .map(|s| parse_graph6(s).expect("canonical graph6 parses"))
                .collect(),
        );
    }
    Ok(levels)
}

/// Every graph on `1..=max_n` vertices, ordered by vertex count.
pub fn graphs_up_to(max_n: usize) -> Result<Vec<Graph>> {
    Ok(graphs_by_order(max_n)?.into_iter().skip(1).flatten().collect())
}

pub fn connected_graphs_up_to(max_n: usize) -> Result<Vec<Graph>> {
    Ok(graphs_up_to(max_n)?
        .into_iter()
        .filter(structure::is_connected)
        .collect())
}

pub fn forests_up_to(max_n: usize) -> Result<Vec<Graph>> {
    Ok(graphs_up_to(max_n)?
        .into_iter()
        .filter(structure::is_forest)
        .collect())
}
