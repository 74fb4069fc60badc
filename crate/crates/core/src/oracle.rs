//! Ground truth by exhaustive enumeration.
//!
//! Full polynomial counts walk all `2^n` vertex subsets. The closed
//! neighborhood union of a subset is assembled from two precomputed tables,
//! one for the low half of the vertex indices and one for the high half, so
//! each subset costs a single OR and compare. Minimum-size questions
//! (domination number, gamma-sets, monitor numbers) scan subsets by
//! increasing size instead and stop at the first size that works.

use std::ops::ControlFlow;
use std::thread;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{low_bits, Graph, VertexSet};
use crate::poly::IntPoly;

/// Default order cap for full `2^n` enumeration.
pub const DEFAULT_MAX_ORDER: usize = 26;
/// Default order cap for size-ascending scans.
pub const DEFAULT_SCAN_ORDER: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest order accepted by the `2^n` enumerations.
    pub max_order: usize,
    /// Largest order accepted by the size-ascending scans.
    pub scan_order: usize,
    /// Worker count for the `2^n` enumerations. Output does not depend on it.
    pub threads: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_order: DEFAULT_MAX_ORDER,
            scan_order: DEFAULT_SCAN_ORDER,
            threads: 1,
        }
    }
}

impl OracleConfig {
    pub fn with_threads(self, threads: usize) -> Self {
        OracleConfig { threads, ..self }
    }

    pub fn with_max_order(self, max_order: usize) -> Self {
        OracleConfig { max_order, ..self }
    }

    fn check_full(&self, g: &Graph) -> Result<()> {
        check_cap(g, self.max_order)
    }

    fn check_scan(&self, g: &Graph) -> Result<()> {
        check_cap(g, self.scan_order)
    }
}

fn check_cap(g: &Graph, cap: usize) -> Result<()> {
    if g.order() > cap {
        return Err(Error::CapExceeded {
            order: g.order(),
            cap,
        });
    }
    Ok(())
}

/// Dominating-set statistics of one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominationSummary {
    /// `counts[i]` is the number of dominating sets of size `i`, for
    /// `i = 0..=n`.
    pub counts: Vec<BigInt>,
    pub gamma: Option<usize>,
    /// `None` when the graph is beyond the scan cap.
    pub iota: Option<usize>,
    pub gamma_set_count: BigInt,
}

impl DominationSummary {
    pub fn polynomial(&self) -> IntPoly {
        IntPoly::new(self.counts.iter().cloned())
    }

    pub fn total(&self) -> BigInt {
        self.counts.iter().sum()
    }
}

pub fn summarize(g: &Graph, config: &OracleConfig) -> Result<DominationSummary> {
    let poly = domination_polynomial(g, config)?;
    let counts: Vec<BigInt> = (0..=g.order()).map(|i| poly.coeff(i)).collect();
    let gamma = poly.min_degree_nonzero();
    let gamma_set_count = gamma.map(|k| counts[k].clone()).unwrap_or_default();
    let iota = match monitor_number(g, config) {
        Ok(i) => Some(i),
        Err(Error::CapExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(DominationSummary {
        counts,
        gamma,
        iota,
        gamma_set_count,
    })
}

/// `N[v]` for every vertex.
pub fn closed_neighborhoods(g: &Graph) -> Vec<VertexSet> {
    g.adjacency()
        .iter()
        .enumerate()
        .map(|(v, &m)| VertexSet::from_mask(m | 1 << v))
        .collect()
}

fn closed_masks(g: &Graph) -> Vec<u64> {
    closed_neighborhoods(g)
        .into_iter()
        .map(VertexSet::mask)
        .collect()
}

fn cover(closed: &[u64], set: u64) -> u64 {
    VertexSet::from_mask(set)
        .iter()
        .fold(0, |acc, v| acc | closed[v])
}

/// True iff `N[S] = V`.
pub fn is_dominating(g: &Graph, set: VertexSet) -> bool {
    debug_assert!(set.is_subset_of(g.vertices()));
    cover(&closed_masks(g), set.mask()) == g.vertices().mask()
}

/// Closed-neighborhood unions of every subset of the low and high halves of
/// the vertex range.
struct CoverTable {
    lo_bits: usize,
    lo: Vec<u64>,
    hi: Vec<u64>,
}

impl CoverTable {
    fn new(closed: &[u64]) -> Self {
        let lo_bits = closed.len() / 2;
        let half = |part: &[u64]| {
            let mut table = vec![0u64; 1 << part.len()];
            for m in 1..table.len() {
                table[m] = table[m & (m - 1)] | part[m.trailing_zeros() as usize];
            }
            table
        };
        CoverTable {
            lo_bits,
            lo: half(&closed[..lo_bits]),
            hi: half(&closed[lo_bits..]),
        }
    }

    /// Calls `visit(subset_hi_bits, hi_cover)` for every high-half subset,
    /// split into contiguous chunks over `threads` workers. Each worker
    /// accumulates its own `T`; results are merged in chunk order.
    fn run<T, F, M>(&self, threads: usize, init: impl Fn() -> T + Sync, visit: F, merge: M) -> T
    where
        T: Send,
        F: Fn(&mut T, usize, u64) + Sync,
        M: Fn(T, T) -> T,
    {
        let total = self.hi.len();
        let workers = threads.clamp(1, total);
        let chunk = total.div_ceil(workers);
        let work = |range: std::ops::Range<usize>| {
            let mut acc = init();
            for h in range {
                visit(&mut acc, h, self.hi[h]);
            }
            acc
        };
        if workers == 1 {
            return work(0..total);
        }
        let parts: Vec<T> = thread::scope(|s| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let range = w * chunk..((w + 1) * chunk).min(total);
                    let work = &work;
                    s.spawn(move || work(range))
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        let mut parts = parts.into_iter();
        let first = parts.next().unwrap();
        parts.fold(first, merge)
    }
}

fn add_vectors(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

/// `D(G, x)` by direct enumeration of all vertex subsets.
pub fn domination_polynomial(g: &Graph, config: &OracleConfig) -> Result<IntPoly> {
    config.check_full(g)?;
    let n = g.order();
    let full = low_bits(n);
    let table = CoverTable::new(&closed_masks(g));
    let lo_sizes: Vec<u8> = (0..table.lo.len()).map(|m| m.count_ones() as u8).collect();
    let counts = table.run(
        config.threads,
        || vec![0u64; n + 1],
        |counts, h, hi_cover| {
            let base = h.count_ones() as usize;
            let missing = full & !hi_cover;
            for (l, &lo_cover) in table.lo.iter().enumerate() {
                if missing & !lo_cover == 0 {
                    counts[base + lo_sizes[l] as usize] += 1;
                }
            }
        },
        add_vectors,
    );
    Ok(IntPoly::new(counts))
}

/// `D(G, x)` by inclusion-exclusion over forced-undominated sets:
/// `d(G, i) = sum over A of (-1)^|A| * C(n - |N[A]|, i)`.
///
/// One pass tallies, per parity of `|A|`, how many sets leave exactly `k`
/// vertices outside `N[A]`; the binomial rows are applied afterwards.
pub fn domination_polynomial_ie(g: &Graph, config: &OracleConfig) -> Result<IntPoly> {
    config.check_full(g)?;
    let n = g.order();
    let table = CoverTable::new(&closed_masks(g));
    let lo_bits = table.lo_bits;
    // tally[k] = (#even A, #odd A) with n - |N[A]| = k
    let tally = table.run(
        config.threads,
        || vec![[0u64; 2]; n + 1],
        |tally, h, hi_cover| {
            for (l, &lo_cover) in table.lo.iter().enumerate() {
                let set = (h as u64) << lo_bits | l as u64;
                let outside = n - (hi_cover | lo_cover).count_ones() as usize;
                tally[outside][(set.count_ones() & 1) as usize] += 1;
            }
        },
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                x[0] += y[0];
                x[1] += y[1];
            }
            a
        },
    );
    let mut coeffs = vec![BigInt::zero(); n + 1];
    let mut row = vec![BigInt::from(1)];
    for (k, [even, odd]) in tally.into_iter().enumerate() {
        if k > 0 {
            // row becomes C(k, 0..=k)
            let mut next = vec![BigInt::from(1); k + 1];
            for i in 1..k {
                next[i] = &row[i - 1] + &row[i];
            }
            row = next;
        }
        let weight = BigInt::from(even) - BigInt::from(odd);
        if weight.is_zero() {
            continue;
        }
        for (i, c) in row.iter().enumerate() {
            coeffs[i] += &weight * c;
        }
    }
    Ok(IntPoly::new(coeffs))
}

/// Visits every `k`-subset of `candidates` as a mask until `visit` breaks.
fn for_each_subset_of_size<B>(
    candidates: &[usize],
    k: usize,
    mut visit: impl FnMut(u64) -> ControlFlow<B>,
) -> Option<B> {
    let m = candidates.len();
    if k > m {
        return None;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mask = idx.iter().fold(0u64, |acc, &i| acc | 1 << candidates[i]);
        if let ControlFlow::Break(b) = visit(mask) {
            return Some(b);
        }
        // advance to the next combination in lexicographic index order
        let pos = (0..k).rev().find(|&p| idx[p] < m - k + p)?;
        idx[pos] += 1;
        for p in pos + 1..k {
            idx[p] = idx[p - 1] + 1;
        }
    }
}

/// Smallest `U` (fewest vertices, then first in scan order) drawn from
/// `candidates` whose closed-neighborhood union contains `target`.
fn smallest_covering(closed: &[u64], candidates: &[usize], target: u64) -> Option<VertexSet> {
    (0..=candidates.len()).find_map(|k| {
        for_each_subset_of_size(candidates, k, |set| {
            if target & !cover(closed, set) == 0 {
                ControlFlow::Break(VertexSet::from_mask(set))
            } else {
                ControlFlow::Continue(())
            }
        })
    })
}

/// A smallest dominating set, found by scanning sizes upward.
pub fn minimum_dominating_set(g: &Graph, config: &OracleConfig) -> Result<VertexSet> {
    config.check_scan(g)?;
    let all: Vec<usize> = (0..g.order()).collect();
    Ok(
        smallest_covering(&closed_masks(g), &all, g.vertices().mask())
            .expect("the full vertex set dominates"),
    )
}

/// `gamma(G)`. The order-0 graph is dominated by the empty set.
pub fn domination_number(g: &Graph, config: &OracleConfig) -> Result<usize> {
    minimum_dominating_set(g, config).map(VertexSet::len)
}

/// Every dominating set of size `gamma(G)`, in ascending mask order.
pub fn gamma_sets(g: &Graph, config: &OracleConfig) -> Result<Vec<VertexSet>> {
    let gamma = domination_number(g, config)?;
    let closed = closed_masks(g);
    let full = g.vertices().mask();
    let all: Vec<usize> = (0..g.order()).collect();
    let mut found = Vec::new();
    for_each_subset_of_size(&all, gamma, |set| {
        if cover(&closed, set) == full {
            found.push(VertexSet::from_mask(set));
        }
        ControlFlow::<()>::Continue(())
    });
    found.sort_unstable();
    Ok(found)
}

/// A smallest monitor set of `target`: `U` with `target ⊆ N[U]`. `U` is any
/// vertex subset. An empty target needs no monitors.
pub fn minimum_monitor_set(
    g: &Graph,
    target: VertexSet,
    config: &OracleConfig,
) -> Result<VertexSet> {
    config.check_scan(g)?;
    debug_assert!(target.is_subset_of(g.vertices()));
    let closed = closed_masks(g);
    // vertices whose closed neighborhood misses the target never help
    let useful: Vec<usize> = (0..g.order())
        .filter(|&v| closed[v] & target.mask() != 0)
        .collect();
    Ok(smallest_covering(&closed, &useful, target.mask()).expect("target ⊆ N[target]"))
}

/// `iota(D)`, the monitor number of a vertex set.
pub fn monitor_number_of_set(g: &Graph, target: VertexSet, config: &OracleConfig) -> Result<usize> {
    minimum_monitor_set(g, target, config).map(VertexSet::len)
}

/// `iota(G)` with a witness: the gamma-set attaining it (first in mask order)
/// and one of its minimum monitor sets.
pub fn monitor_witness(g: &Graph, config: &OracleConfig) -> Result<(VertexSet, VertexSet)> {
    let mut best: Option<(VertexSet, VertexSet)> = None;
    for d in gamma_sets(g, config)? {
        let u = minimum_monitor_set(g, d, config)?;
        if best.is_none_or(|(_, b)| u.len() < b.len()) {
            best = Some((d, u));
            if u.len() <= 1 {
                break;
            }
        }
    }
    Ok(best.expect("every graph has a gamma-set"))
}

/// `iota(G)`, the least monitor number over all gamma-sets.
pub fn monitor_number(g: &Graph, config: &OracleConfig) -> Result<usize> {
    monitor_witness(g, config).map(|(_, u)| u.len())
}
