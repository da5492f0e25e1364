//! Shortest paths with path counts: BFS on unit-weight graphs, Dijkstra
//! otherwise. Edge weights are costs.

use std::cmp::Ordering;
use std::collections::{BinaryHeap, VecDeque};

use crate::graph::Graph;
use crate::parallel;

/// Relative tolerance for treating two weighted path lengths as equal.
pub const TIE_TOLERANCE: f64 = 1e-12;

const EXACT_COUNT_LIMIT: f64 = 9_007_199_254_740_992.0; // 2^53

#[derive(Debug, Clone, Copy, Default)]
pub struct SearchOptions {
    /// Stop expanding at this hop depth (BFS only).
    pub max_depth: Option<usize>,
    /// Treat this node as deleted.
    pub excluded: Option<usize>,
    /// Follow edges backwards (distances *to* the source on directed graphs).
    pub reverse: bool,
    /// Ignore weights and count hops.
    pub hops_only: bool,
}

/// Single-source result. Reusable: [`GeodesicResult::compute`] overwrites it.
#[derive(Debug, Clone)]
pub struct GeodesicResult {
    pub source: usize,
    /// `f64::INFINITY` for unreachable nodes.
    pub dist: Vec<f64>,
    /// Number of shortest paths from the source; 0 where unreachable.
    pub sigma: Vec<f64>,
    /// Reached nodes in nondecreasing distance, source first.
    pub order: Vec<usize>,
    /// Predecessors on the shortest-path DAG.
    pub preds: Vec<Vec<usize>>,
    /// Set when some path count exceeded 2^53 and is no longer exact.
    pub count_overflow: bool,
    heap: BinaryHeap<Entry>,
    queue: VecDeque<usize>,
    done: Vec<bool>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Entry(f64, usize);

impl Eq for Entry {}

impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.total_cmp(&self.0).then_with(|| other.1.cmp(&self.1))
    }
}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl GeodesicResult {
    pub fn new(n: usize) -> Self {
        GeodesicResult {
            source: 0,
            dist: vec![f64::INFINITY; n],
            sigma: vec![0.0; n],
            order: Vec::with_capacity(n),
            preds: vec![Vec::new(); n],
            count_overflow: false,
            heap: BinaryHeap::new(),
            queue: VecDeque::new(),
            done: vec![false; n],
        }
    }

    fn reset(&mut self, n: usize) {
        if self.dist.len() != n {
            *self = GeodesicResult::new(n);
            return;
        }
        for &v in &self.order {
            self.dist[v] = f64::INFINITY;
            self.sigma[v] = 0.0;
            self.preds[v].clear();
            self.done[v] = false;
        }
        self.order.clear();
        self.count_overflow = false;
    }

    /// Runs the search from `s`, overwriting previous contents.
    pub fn compute(&mut self, g: &Graph, s: usize, opts: &SearchOptions) {
        let n = g.node_count();
        self.reset(n);
        self.source = s;
        if opts.excluded == Some(s) {
            return;
        }
        if opts.hops_only || g.has_unit_weights() {
            self.bfs(g, s, opts);
        } else {
            self.dijkstra(g, s, opts);
        }
        self.count_overflow = self.sigma.iter().any(|&x| x > EXACT_COUNT_LIMIT);
    }

    fn bfs(&mut self, g: &Graph, s: usize, opts: &SearchOptions) {
        let limit = opts.max_depth.map(|d| d as f64).unwrap_or(f64::INFINITY);
        self.dist[s] = 0.0;
        self.sigma[s] = 1.0;
        self.queue.clear();
        self.queue.push_back(s);
        while let Some(u) = self.queue.pop_front() {
            self.order.push(u);
            let du = self.dist[u];
            if du >= limit {
                continue;
            }
            let nbrs = if opts.reverse { g.in_neighbors(u) } else { g.out_neighbors(u) };
            for &v in nbrs {
                if opts.excluded == Some(v) {
                    continue;
                }
                if self.dist[v].is_infinite() {
                    self.dist[v] = du + 1.0;
                    self.queue.push_back(v);
                }
                if self.dist[v] == du + 1.0 {
                    self.sigma[v] += self.sigma[u];
                    self.preds[v].push(u);
                }
            }
        }
    }

    fn dijkstra(&mut self, g: &Graph, s: usize, opts: &SearchOptions) {
        self.dist[s] = 0.0;
        self.sigma[s] = 1.0;
        self.heap.clear();
        self.heap.push(Entry(0.0, s));
        while let Some(Entry(du, u)) = self.heap.pop() {
            if self.done[u] || du > self.dist[u] {
                continue;
            }
            self.done[u] = true;
            self.order.push(u);
            let (nbrs, ws) = if opts.reverse {
                (g.in_neighbors(u), g.in_weights(u))
            } else {
                (g.out_neighbors(u), g.out_weights(u))
            };
            for (&v, &w) in nbrs.iter().zip(ws) {
                if opts.excluded == Some(v) || self.done[v] {
                    continue;
                }
                let nd = du + w;
                let dv = self.dist[v];
                let tol = TIE_TOLERANCE * nd.max(dv.min(f64::MAX));
                if nd < dv - tol {
                    self.dist[v] = nd;
                    self.sigma[v] = self.sigma[u];
                    self.preds[v].clear();
                    self.preds[v].push(u);
                    self.heap.push(Entry(nd, v));
                } else if (nd - dv).abs() <= tol {
                    self.sigma[v] += self.sigma[u];
                    self.preds[v].push(u);
                }
            }
        }
    }

    pub fn reached(&self) -> usize {
        self.order.len()
    }
}

/// Single-source shortest paths with default options.
pub fn sssp(g: &Graph, s: usize) -> GeodesicResult {
    let mut r = GeodesicResult::new(g.node_count());
    r.compute(g, s, &SearchOptions::default());
    r
}

/// Row-major all-pairs distance matrix (`INFINITY` where unreachable).
pub fn distance_matrix(g: &Graph, opts: &SearchOptions) -> Vec<Vec<f64>> {
    let n = g.node_count();
    parallel::map_nodes(
        n,
        || GeodesicResult::new(n),
        |r, s| {
            r.compute(g, s, opts);
            r.dist.clone()
        },
    )
}

#[derive(Debug, Clone, PartialEq)]
pub struct DistanceSummary {
    /// Largest finite distance from each node; `None` if it reaches no other node.
    pub eccentricity: Vec<Option<f64>>,
    /// Largest eccentricity, only defined on connected graphs with N ≥ 1.
    pub diameter: Option<f64>,
    /// Number of other nodes reachable from each node.
    pub reachable: Vec<usize>,
    pub connected: bool,
}

pub fn apsp_summary(g: &Graph) -> DistanceSummary {
    let n = g.node_count();
    let rows: Vec<(Option<f64>, usize)> = parallel::map_nodes(
        n,
        || GeodesicResult::new(n),
        |r, s| {
            r.compute(g, s, &SearchOptions::default());
            let ecc = r.order.last().filter(|_| r.reached() > 1).map(|&v| r.dist[v]);
            (ecc, r.reached() - 1)
        },
    );
    let connected = rows.iter().all(|&(_, k)| k + 1 == n);
    let eccentricity: Vec<Option<f64>> = rows.iter().map(|r| r.0).collect();
    let diameter = if connected && n > 0 {
        Some(eccentricity.iter().map(|e| e.unwrap_or(0.0)).fold(0.0, f64::max))
    } else {
        None
    };
    DistanceSummary {
        eccentricity,
        diameter,
        reachable: rows.into_iter().map(|r| r.1).collect(),
        connected,
    }
}

fn unreached_from(g: &Graph, s: usize, reverse: bool) -> Option<usize> {
    let mut seen = vec![false; g.node_count()];
    seen[s] = true;
    let mut stack = vec![s];
    while let Some(u) = stack.pop() {
        let nbrs = if reverse { g.in_neighbors(u) } else { g.out_neighbors(u) };
        for &v in nbrs {
            if !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.iter().position(|&x| !x)
}

/// A pair `(a, b)` such that `b` is unreachable from `a`, or `None` if the
/// graph is (strongly) connected.
pub fn connectivity_witness(g: &Graph) -> Option<(usize, usize)> {
    if g.node_count() <= 1 {
        return None;
    }
    if let Some(b) = unreached_from(g, 0, false) {
        return Some((0, b));
    }
    if g.is_directed() {
        if let Some(a) = unreached_from(g, 0, true) {
            return Some((a, 0));
        }
    }
    None
}

pub(crate) fn require_connected(g: &Graph, measure: &'static str) -> crate::Result<()> {
    match connectivity_witness(g) {
        Some((a, b)) => Err(crate::CentralityError::Disconnected {
            measure,
            a,
            b,
            a_label: g.label(a).to_string(),
            b_label: g.label(b).to_string(),
        }),
        None => Ok(()),
    }
}
