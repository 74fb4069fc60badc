//! Catalogs of small graphs, one representative per isomorphism class.

use std::collections::HashMap;

use super::{is_isomorphic_within, Graph};
use crate::error::{Error, Result};

pub const MAX_CATALOG_ORDER: usize = 6;

/// One graph per isomorphism class on `n` vertices.
///
/// Edge sets are enumerated as bitmasks over the pairs `(u, v)`, `u < v`, in
/// lexicographic order; the first member of each class to appear is kept, so
/// the output order is deterministic (the edgeless graph comes first).
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_CATALOG_ORDER {
        return Err(Error::InvalidParameter {
            family: "catalog",
            value: n,
            expected: "order at most 6",
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut reps: Vec<Graph> = Vec::new();
    let mut buckets: HashMap<(usize, Vec<usize>), Vec<usize>> = HashMap::new();
    for edge_mask in 0u32..1 << pairs.len() {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| edge_mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges)?;
        let mut degrees = g.degrees();
        degrees.sort_unstable();
        let bucket = buckets.entry((edges.len(), degrees)).or_default();
        let mut seen = false;
        for &i in bucket.iter() {
            if is_isomorphic_within(&reps[i], &g, MAX_CATALOG_ORDER)? {
                seen = true;
                break;
            }
        }
        if !seen {
            bucket.push(reps.len());
            reps.push(g);
        }
    }
    Ok(reps)
}

/// Catalogs of orders `1..=max_order`, concatenated in increasing order.
pub fn catalog_up_to(max_order: usize) -> Result<Vec<Graph>> {
    let mut all = Vec::new();
    for n in 1..=max_order {
        all.extend(enumerate_graphs(n)?);
    }
    Ok(all)
}
