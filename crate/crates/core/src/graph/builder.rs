use std::collections::HashMap;

use super::Graph;
use crate::error::{CentralityError, Result};

/// Accumulates nodes and edges, then freezes them into a [`Graph`].
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    directed: bool,
    weighted: bool,
    labels: Vec<String>,
    index: HashMap<String, usize>,
    edges: HashMap<(usize, usize), f64>,
    dropped_loops: usize,
}

impl GraphBuilder {
    pub fn new(directed: bool, weighted: bool) -> Self {
        GraphBuilder {
            directed,
            weighted,
            labels: Vec::new(),
            index: HashMap::new(),
            edges: HashMap::new(),
            dropped_loops: 0,
        }
    }

    /// Builder pre-populated with nodes labelled `"0"..n`.
    pub fn with_nodes(n: usize, directed: bool, weighted: bool) -> Self {
        let mut b = GraphBuilder::new(directed, weighted);
        for i in 0..n {
            b.add_node(&i.to_string());
        }
        b
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    /// Returns the id of `label`, creating the node on first sight.
    pub fn add_node(&mut self, label: &str) -> usize {
        if let Some(&i) = self.index.get(label) {
            return i;
        }
        let i = self.labels.len();
        self.labels.push(label.to_string());
        self.index.insert(label.to_string(), i);
        i
    }

    /// Adds `u -> v` (or `u -- v`). Self-loops are counted and dropped;
    /// repeated pairs accumulate weight.
    pub fn add_edge(&mut self, u: usize, v: usize, weight: f64) -> Result<()> {
        let n = self.labels.len();
        if u >= n || v >= n {
            return Err(CentralityError::InvalidArgument(format!(
                "edge ({u}, {v}) references a node outside 0..{n}"
            )));
        }
        if !(weight > 0.0 && weight.is_finite()) {
            return Err(CentralityError::InvalidArgument(format!(
                "edge ({u}, {v}) has non-positive or non-finite weight {weight}"
            )));
        }
        if u == v {
            self.dropped_loops += 1;
            return Ok(());
        }
        let key = if self.directed || u < v { (u, v) } else { (v, u) };
        *self.edges.entry(key).or_insert(0.0) += weight;
        Ok(())
    }

    pub fn add_labeled_edge(&mut self, u: &str, v: &str, weight: f64) -> Result<()> {
        let a = self.add_node(u);
        let b = self.add_node(v);
        self.add_edge(a, b, weight)
    }

    /// Scales every accumulated weight to its reciprocal.
    pub(crate) fn invert_weights(&mut self) {
        for w in self.edges.values_mut() {
            *w = 1.0 / *w;
        }
    }

    /// Freezes the graph; also returns how many self-loops were discarded.
    pub fn build(self) -> (Graph, usize) {
        let n = self.labels.len();
        let mut out_rows: Vec<Vec<(usize, f64)>> = vec![Vec::new(); n];
        let mut in_rows: Option<Vec<Vec<(usize, f64)>>> =
            self.directed.then(|| vec![Vec::new(); n]);
        for (&(u, v), &w) in &self.edges {
            let w = if self.weighted { w } else { 1.0 };
            out_rows[u].push((v, w));
            match in_rows.as_mut() {
                Some(rows) => rows[v].push((u, w)),
                None => out_rows[v].push((u, w)),
            }
        }
        for row in out_rows.iter_mut() {
            row.sort_unstable_by_key(|&(t, _)| t);
        }
        if let Some(rows) = in_rows.as_mut() {
            for row in rows.iter_mut() {
                row.sort_unstable_by_key(|&(t, _)| t);
            }
        }
        let g = Graph::from_parts(self.directed, self.weighted, self.labels, out_rows, in_rows);
        (g, self.dropped_loops)
    }
}
