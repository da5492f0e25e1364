//! Immutable graph storage.
//!
//! Nodes are dense ids `0..N`; every node carries an external label (the
//! token it had in the input file, or its decimal id for graphs built in
//! code). Adjacency is stored in compressed rows sorted by neighbor id, with
//! a separate reverse index for directed graphs.
//!
//! Invariants upheld by every constructor:
//! - no self-loops,
//! - at most one edge per ordered pair (parallel edges are merged by summing
//!   their weights),
//! - all weights strictly positive and finite,
//! - undirected adjacency is symmetric.

mod builder;
mod load;
pub(crate) mod queries;

use std::collections::HashMap;

pub use builder::GraphBuilder;
pub use load::{load_graph, parse_edge_list, LoadOptions, Loaded, LoopPolicy};
pub use queries::{clustering_coefficient, degree, degree_mass, khop_set, DegreeMode, HopMode};

#[derive(Debug, Clone)]
struct Csr {
    offsets: Vec<usize>,
    targets: Vec<usize>,
    weights: Vec<f64>,
}

impl Csr {
    fn from_sorted(n: usize, rows: &[Vec<(usize, f64)>]) -> Self {
        let mut offsets = Vec::with_capacity(n + 1);
        let total: usize = rows.iter().map(Vec::len).sum();
        let mut targets = Vec::with_capacity(total);
        let mut weights = Vec::with_capacity(total);
        offsets.push(0);
        for row in rows {
            for &(t, w) in row {
                targets.push(t);
                weights.push(w);
            }
            offsets.push(targets.len());
        }
        Csr {
            offsets,
            targets,
            weights,
        }
    }

    #[inline]
    fn row(&self, i: usize) -> &[usize] {
        &self.targets[self.offsets[i]..self.offsets[i + 1]]
    }

    #[inline]
    fn row_weights(&self, i: usize) -> &[f64] {
        &self.weights[self.offsets[i]..self.offsets[i + 1]]
    }
}

#[derive(Debug, Clone)]
pub struct Graph {
    directed: bool,
    weighted: bool,
    unit_weights: bool,
    edge_count: usize,
    out: Csr,
    /// Reverse adjacency; `None` for undirected graphs, where it equals `out`.
    inc: Option<Csr>,
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl Graph {
    /// Unweighted graph on `n` nodes labelled `0..n`. Self-loops are dropped and
    /// duplicate edges collapse to one.
    pub fn from_edges(n: usize, directed: bool, edges: &[(usize, usize)]) -> Graph {
        let mut b = GraphBuilder::with_nodes(n, directed, false);
        for &(u, v) in edges {
            b.add_edge(u, v, 1.0)
                .expect("unit weights are always valid");
        }
        b.build().0
    }

    /// Weighted graph on `n` nodes labelled `0..n`; parallel edges sum.
    pub fn from_weighted_edges(
        n: usize,
        directed: bool,
        edges: &[(usize, usize, f64)],
    ) -> crate::Result<Graph> {
        let mut b = GraphBuilder::with_nodes(n, directed, true);
        for &(u, v, w) in edges {
            b.add_edge(u, v, w)?;
        }
        Ok(b.build().0)
    }

    pub(crate) fn from_parts(
        directed: bool,
        weighted: bool,
        labels: Vec<String>,
        out_rows: Vec<Vec<(usize, f64)>>,
        in_rows: Option<Vec<Vec<(usize, f64)>>>,
    ) -> Graph {
        let n = labels.len();
        let out = Csr::from_sorted(n, &out_rows);
        let stored = out.targets.len();
        let edge_count = if directed { stored } else { stored / 2 };
        let unit_weights = out.weights.iter().all(|&w| w == 1.0);
        let inc = in_rows.map(|rows| Csr::from_sorted(n, &rows));
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        Graph {
            directed,
            weighted,
            unit_weights,
            edge_count,
            out,
            inc,
            labels,
            index,
        }
    }

    #[inline]
    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    /// L: unordered edges for undirected graphs, arcs for directed ones.
    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// Whether the graph was built with explicit weights.
    #[inline]
    pub fn is_weighted(&self) -> bool {
        self.weighted
    }

    /// True when every stored weight equals 1, so hop counts and weighted
    /// distances coincide.
    #[inline]
    pub fn has_unit_weights(&self) -> bool {
        self.unit_weights
    }

    /// Successors of `i` (all neighbors on undirected graphs), sorted by id.
    #[inline]
    pub fn out_neighbors(&self, i: usize) -> &[usize] {
        self.out.row(i)
    }

    #[inline]
    pub fn out_weights(&self, i: usize) -> &[f64] {
        self.out.row_weights(i)
    }

    /// Predecessors of `i` (all neighbors on undirected graphs), sorted by id.
    #[inline]
    pub fn in_neighbors(&self, i: usize) -> &[usize] {
        match &self.inc {
            Some(c) => c.row(i),
            None => self.out.row(i),
        }
    }

    #[inline]
    pub fn in_weights(&self, i: usize) -> &[f64] {
        match &self.inc {
            Some(c) => c.row_weights(i),
            None => self.out.row_weights(i),
        }
    }

    /// Alias for [`Graph::out_neighbors`]; the natural name on undirected graphs.
    #[inline]
    pub fn neighbors(&self, i: usize) -> &[usize] {
        self.out.row(i)
    }

    /// d_i on undirected graphs, out-degree on directed ones.
    #[inline]
    pub fn degree(&self, i: usize) -> usize {
        self.out.offsets[i + 1] - self.out.offsets[i]
    }

    #[inline]
    pub fn out_degree(&self, i: usize) -> usize {
        self.degree(i)
    }

    #[inline]
    pub fn in_degree(&self, i: usize) -> usize {
        self.in_neighbors(i).len()
    }

    /// Sum of outgoing weights.
    pub fn strength(&self, i: usize) -> f64 {
        self.out_weights(i).iter().sum()
    }

    pub fn in_strength(&self, i: usize) -> f64 {
        self.in_weights(i).iter().sum()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.out_neighbors(u).binary_search(&v).is_ok()
    }

    pub fn edge_weight(&self, u: usize, v: usize) -> Option<f64> {
        let row = self.out_neighbors(u);
        row.binary_search(&v).ok().map(|k| self.out_weights(u)[k])
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Each edge once: `u < v` for undirected graphs, every arc for directed.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        (0..self.node_count()).flat_map(move |u| {
            self.out_neighbors(u)
                .iter()
                .zip(self.out_weights(u))
                .filter(move |(&v, _)| self.directed || u < v)
                .map(move |(&v, &w)| (u, v, w))
        })
    }

    /// Induced subgraph on all nodes except `removed`; ids above it shift down by one.
    pub fn without_node(&self, removed: usize) -> Graph {
        let remap = |j: usize| if j > removed { j - 1 } else { j };
        let mut b = GraphBuilder::new(self.directed, self.weighted);
        for (i, l) in self.labels.iter().enumerate() {
            if i != removed {
                b.add_node(l);
            }
        }
        for (u, v, w) in self.edges() {
            if u != removed && v != removed {
                b.add_edge(remap(u), remap(v), w)
                    .expect("weights copied from a valid graph");
            }
        }
        b.build().0
    }

    /// Same graph with node `i` renamed to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.node_count());
        let mut labels = vec![String::new(); perm.len()];
        for (i, &p) in perm.iter().enumerate() {
            labels[p] = self.labels[i].clone();
        }
        let mut b = GraphBuilder::new(self.directed, self.weighted);
        for l in &labels {
            b.add_node(l);
        }
        for (u, v, w) in self.edges() {
            b.add_edge(perm[u], perm[v], w)
                .expect("weights copied from a valid graph");
        }
        b.build().0
    }

    /// A copy with every weight replaced by 1.
    pub fn to_unweighted(&self) -> Graph {
        let mut b = GraphBuilder::new(self.directed, false);
        for l in &self.labels {
            b.add_node(l);
        }
        for (u, v, _) in self.edges() {
            b.add_edge(u, v, 1.0).expect("unit weight");
        }
        b.build().0
    }

    /// Stable 64-bit digest of the topology and weights (FNV-1a).
    pub fn fingerprint(&self) -> u64 {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        let mut feed = |x: u64| {
            for b in x.to_le_bytes() {
                h ^= b as u64;
                h = h.wrapping_mul(0x0100_0000_01b3);
            }
        };
        feed(self.node_count() as u64);
        feed(self.directed as u64);
        for (u, v, w) in self.edges() {
            feed(u as u64);
            feed(v as u64);
            feed(w.to_bits());
        }
        h
    }
}
