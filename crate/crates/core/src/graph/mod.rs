//! Simple graphs on at most 64 vertices stored as neighborhood bitmasks.

mod catalog;
mod edge_list;
mod iso;

pub use catalog::{catalog_up_to, enumerate_graphs, MAX_CATALOG_ORDER};
pub use iso::{is_isomorphic, is_isomorphic_within, DEFAULT_ISO_LIMIT};

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported graph order; a vertex set fits in one `u64`.
pub const MAX_ORDER: usize = 64;

/// Mask with the lowest `n` bits set.
#[inline]
pub(crate) const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn check_order(order: usize) -> Result<()> {
    if order > MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order,
            limit: MAX_ORDER,
        });
    }
    Ok(())
}

/// A set of vertices of some graph, as a bitmask over vertex indices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_mask(mask: u64) -> Self {
        VertexSet(mask)
    }

    /// The set `{0, .., n-1}`.
    pub const fn full(n: usize) -> Self {
        VertexSet(low_bits(n))
    }

    pub const fn mask(self) -> u64 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub const fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(v)
        })
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// An immutable simple graph. Vertex `v` has open neighborhood `adj[v]`.
///
/// Equality is exact equality of labelled graphs; use [`is_isomorphic`] for
/// equality up to relabelling.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from neighborhood masks, checking symmetry, absence of
    /// loops and that no mask reaches past the order.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        check_order(adj.len())?;
        let n = adj.len();
        let full = low_bits(n);
        for (v, &mask) in adj.iter().enumerate() {
            if mask & !full != 0 {
                return Err(Error::VertexOutOfRange {
                    vertex: (63 - (mask & !full).leading_zeros()) as usize,
                    order: n,
                });
            }
            if mask >> v & 1 == 1 {
                return Err(Error::InvalidParameter {
                    family: "adjacency",
                    value: v,
                    expected: "no self-loops",
                });
            }
            for u in VertexSet(mask).iter() {
                if adj[u] >> v & 1 == 0 {
                    return Err(Error::InvalidParameter {
                        family: "adjacency",
                        value: v,
                        expected: "symmetric neighborhoods",
                    });
                }
            }
        }
        Ok(Graph { adj })
    }

    /// Builds a graph on `n` vertices from an edge list. Duplicate edges are
    /// merged; loops are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_order(n)?;
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(Error::InvalidParameter {
                    family: "edge",
                    value: u,
                    expected: "distinct endpoints",
                });
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { adj })
    }

    // Internal constructor for masks already known to be valid.
    fn from_valid(adj: Vec<u64>) -> Self {
        let g = Graph { adj };
        debug_assert!(g.is_well_formed());
        g
    }

    pub fn is_well_formed(&self) -> bool {
        let n = self.order();
        let full = low_bits(n);
        n <= MAX_ORDER
            && self.adj.iter().enumerate().all(|(v, &mask)| {
                mask & !full == 0
                    && mask >> v & 1 == 0
                    && VertexSet(mask).iter().all(|u| self.adj[u] >> v & 1 == 1)
            })
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    /// Open neighborhood masks, one per vertex.
    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adj[u] >> v & 1 == 1
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, &mask)| {
            VertexSet(mask & !low_bits(u + 1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        match self.adj.get(v) {
            Some(mask) => Ok(mask.count_ones() as usize),
            None => Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            }),
        }
    }

    /// Degrees in vertex order.
    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|m| m.count_ones() as usize).collect()
    }

    /// Maximum degree, 0 for the order-0 graph.
    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Minimum degree, 0 for the order-0 graph.
    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.contains(&0)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.edge_count() == n * n.saturating_sub(1) / 2
    }

    // ---- named families ----

    /// `nK_1`: `n` vertices, no edges.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph { adj: vec![0; n] })
    }

    /// `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        check_order(n)?;
        let full = low_bits(n);
        Ok(Graph::from_valid(
            (0..n).map(|v| full & !(1 << v)).collect(),
        ))
    }

    /// `P_n`, vertices `0 - 1 - .. - (n-1)`.
    pub fn path(n: usize) -> Result<Self> {
        check_order(n)?;
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges)
    }

    /// `C_n` for `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter {
                family: "cycle",
                value: n,
                expected: "at least 3",
            });
        }
        check_order(n)?;
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    /// The star `K_{1,n}` with its center at index 0.
    pub fn star(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParameter {
                family: "star",
                value: n,
                expected: "at least 1",
            });
        }
        check_order(n + 1)?;
        let edges: Vec<_> = (1..=n).map(|v| (0, v)).collect();
        Graph::from_edges(n + 1, &edges)
    }

    /// The complete bipartite graph `K_{m,n}`; parts are `0..m` and `m..m+n`.
    pub fn biclique(m: usize, n: usize) -> Result<Self> {
        for p in [m, n] {
            if p < 1 {
                return Err(Error::InvalidParameter {
                    family: "biclique",
                    value: p,
                    expected: "both parts at least 1",
                });
            }
        }
        Graph::empty(m)?.join(&Graph::empty(n)?)
    }

    /// The friendship graph `F_n`: `n` triangles sharing vertex 0. Triangle
    /// `i` uses vertices `0, 2i+1, 2i+2`.
    pub fn friendship(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParameter {
                family: "friendship",
                value: n,
                expected: "at least 1",
            });
        }
        check_order(2 * n + 1)?;
        let edges: Vec<_> = (0..n)
            .flat_map(|i| {
                let (a, b) = (2 * i + 1, 2 * i + 2);
                [(0, a), (0, b), (a, b)]
            })
            .collect();
        Graph::from_edges(2 * n + 1, &edges)
    }

    // ---- algebra ----

    /// Disjoint union; `other`'s vertices are shifted by `self.order()`.
    pub fn union(&self, other: &Graph) -> Result<Self> {
        let offset = self.order();
        check_order(offset + other.order())?;
        let adj = self
            .adj
            .iter()
            .copied()
            .chain(other.adj.iter().map(|m| m << offset))
            .collect();
        Ok(Graph::from_valid(adj))
    }

    /// Disjoint union plus every edge between the two vertex sets.
    pub fn join(&self, other: &Graph) -> Result<Self> {
        let (n, m) = (self.order(), other.order());
        check_order(n + m)?;
        let left = low_bits(n);
        let right = low_bits(m) << n;
        let adj = self
            .adj
            .iter()
            .map(|a| a | right)
            .chain(other.adj.iter().map(|a| a << n | left))
            .collect();
        Ok(Graph::from_valid(adj))
    }

    pub fn complement(&self) -> Self {
        let full = low_bits(self.order());
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, m)| full & !m & !(1 << v))
            .collect();
        Graph::from_valid(adj)
    }

    /// The lexicographic product `self[inner]`: vertex `(a, x)` has index
    /// `a * inner.order() + x`, and `(a, x) ~ (b, y)` iff `a ~ b`, or `a = b`
    /// and `x ~ y`.
    pub fn lexicographic(&self, inner: &Graph) -> Result<Self> {
        let (n, k) = (self.order(), inner.order());
        check_order(n * k)?;
        let block = low_bits(k);
        let mut adj = Vec::with_capacity(n * k);
        for a in 0..n {
            let outer: u64 = VertexSet(self.adj[a])
                .iter()
                .fold(0, |acc, b| acc | block << (b * k));
            for x in 0..k {
                adj.push(outer | inner.adj[x] << (a * k));
            }
        }
        Ok(Graph::from_valid(adj))
    }

    /// Union of `copies` disjoint copies of `self`; zero copies gives the
    /// order-0 graph.
    pub fn repeat_union(&self, copies: usize) -> Result<Self> {
        (0..copies).try_fold(Graph::empty(0)?, |acc, _| acc.union(self))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}
