//! Isomorphism testing for small graphs by pruned permutation search.
//!
//! Both graphs are colored jointly by iterated neighborhood refinement, so a
//! color means the same thing on either side. Differing color histograms
//! settle the question immediately; otherwise a backtracking search maps
//! vertices only onto equally colored, adjacency-consistent targets.

use std::collections::BTreeMap;

use super::Graph;
use crate::error::{Error, Result};

pub const DEFAULT_ISO_LIMIT: usize = 10;

/// `is_isomorphic_within` with the default order limit of 10.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    is_isomorphic_within(g, h, DEFAULT_ISO_LIMIT)
}

/// True iff some bijection maps edges of `g` exactly onto edges of `h`.
///
/// Graphs of different order are never isomorphic and never raise the limit
/// error.
pub fn is_isomorphic_within(g: &Graph, h: &Graph, limit: usize) -> Result<bool> {
    let n = g.order();
    if n != h.order() {
        return Ok(false);
    }
    if n > limit {
        return Err(Error::IsomorphismLimit { order: n, limit });
    }
    if g == h {
        return Ok(true);
    }
    if g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let mut gd = g.degrees();
    let mut hd = h.degrees();
    gd.sort_unstable();
    hd.sort_unstable();
    if gd != hd {
        return Ok(false);
    }

    let (gc, hc) = refine_colors(g, h);
    let histogram = |colors: &[usize]| {
        let mut counts = BTreeMap::new();
        for &c in colors {
            *counts.entry(c).or_insert(0usize) += 1;
        }
        counts
    };
    let class_sizes = histogram(&gc);
    if class_sizes != histogram(&hc) {
        return Ok(false);
    }

    // Rarest colors first, ties broken by vertex index.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (class_sizes[&gc[v]], v));

    let mut search = Search {
        g,
        h,
        gc: &gc,
        hc: &hc,
        order: &order,
        image: vec![usize::MAX; n],
        used: 0,
    };
    Ok(search.extend(0))
}

/// Joint color refinement of two graphs of equal order. Starts from degrees
/// and repeats until the number of classes stops growing.
fn refine_colors(g: &Graph, h: &Graph) -> (Vec<usize>, Vec<usize>) {
    let mut gc = g.degrees();
    let mut hc = h.degrees();
    let mut classes = count_classes(&gc, &hc);
    loop {
        let signature = |graph: &Graph, colors: &[usize], v: usize| {
            let mut around: Vec<usize> = graph.neighbors(v).iter().map(|u| colors[u]).collect();
            around.sort_unstable();
            (colors[v], around)
        };
        let gs: Vec<_> = (0..g.order()).map(|v| signature(g, &gc, v)).collect();
        let hs: Vec<_> = (0..h.order()).map(|v| signature(h, &hc, v)).collect();
        let mut palette = BTreeMap::new();
        for s in gs.iter().chain(hs.iter()) {
            let next = palette.len();
            palette.entry(s.clone()).or_insert(next);
        }
        gc = gs.iter().map(|s| palette[s]).collect();
        hc = hs.iter().map(|s| palette[s]).collect();
        let refined = count_classes(&gc, &hc);
        if refined == classes {
            return (gc, hc);
        }
        classes = refined;
    }
}

fn count_classes(a: &[usize], b: &[usize]) -> usize {
    let mut all: Vec<usize> = a.iter().chain(b).copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    gc: &'a [usize],
    hc: &'a [usize],
    order: &'a [usize],
    image: Vec<usize>,
    used: u64,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        let Some(&v) = self.order.get(depth) else {
            return true;
        };
        for w in 0..self.h.order() {
            if self.used >> w & 1 == 1 || self.hc[w] != self.gc[v] || !self.consistent(depth, v, w)
            {
                continue;
            }
            self.image[v] = w;
            self.used |= 1 << w;
            if self.extend(depth + 1) {
                return true;
            }
            self.used &= !(1 << w);
            self.image[v] = usize::MAX;
        }
        false
    }

    fn consistent(&self, depth: usize, v: usize, w: usize) -> bool {
        self.order[..depth]
            .iter()
            .all(|&u| self.g.has_edge(u, v) == self.h.has_edge(self.image[u], w))
    }
}
