//! Iterative spreader selection. Each round elects the best-scoring node not
//! yet chosen; ties go to the lowest node id.

use std::collections::BTreeMap;

use crate::error::{CentralityError, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeedOptions {
    pub k: usize,
    /// Record every node's score at every round.
    pub trace: bool,
}

impl SeedOptions {
    pub fn new(k: usize) -> Self {
        SeedOptions { k, trace: false }
    }

    pub fn traced(k: usize) -> Self {
        SeedOptions { k, trace: true }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SeedSet {
    pub method: String,
    pub params: BTreeMap<String, String>,
    /// Elected nodes in order, with their score at election time.
    pub seeds: Vec<(usize, f64)>,
    /// Requested size.
    pub k: usize,
    /// Per-round score snapshots, when requested.
    pub trace: Option<Vec<Vec<f64>>>,
    pub warnings: Vec<String>,
}

impl SeedSet {
    pub fn nodes(&self) -> Vec<usize> {
        self.seeds.iter().map(|s| s.0).collect()
    }
}

/// Drives the elect/update loop shared by every heuristic.
struct Election {
    set: SeedSet,
    chosen: Vec<bool>,
    rounds: usize,
}

impl Election {
    fn start(method: &str, g: &Graph, opts: &SeedOptions) -> Result<Election> {
        if opts.k < 1 {
            return Err(CentralityError::InvalidArgument("k must be at least 1".into()));
        }
        let n = g.node_count();
        let mut warnings = Vec::new();
        if opts.k > n {
            warnings.push(format!("k = {} exceeds the {n} nodes; returning all of them", opts.k));
        }
        Ok(Election {
            set: SeedSet {
                method: method.to_string(),
                params: BTreeMap::from([("k".to_string(), opts.k.to_string())]),
                seeds: Vec::new(),
                k: opts.k,
                trace: opts.trace.then(Vec::new),
                warnings,
            },
            chosen: vec![false; n],
            rounds: opts.k.min(n),
        })
    }

    /// Picks the highest score among unchosen nodes and records it.
    fn elect(&mut self, scores: &[f64]) -> usize {
        if let Some(t) = self.set.trace.as_mut() {
            t.push(scores.to_vec());
        }
        let mut best: Option<usize> = None;
        for (i, &s) in scores.iter().enumerate() {
            if !self.chosen[i] && best.is_none_or(|b| s > scores[b]) {
                best = Some(i);
            }
        }
        let b = best.expect("an unchosen node remains");
        self.chosen[b] = true;
        self.set.seeds.push((b, scores[b]));
        b
    }
}

fn attenuation(g: &Graph) -> f64 {
    let n = g.node_count() as f64;
    let stubs = if g.is_directed() { 1.0 } else { 2.0 };
    let mean = stubs * g.edge_count() as f64 / n;
    if mean > 0.0 {
        1.0 / mean
    } else {
        0.0
    }
}

/// Votes flow along edges (from in-neighbors on directed graphs); the
/// voters of an elected node lose ability f = 1/⟨k⟩.
pub fn voterank(g: &Graph, opts: &SeedOptions) -> Result<SeedSet> {
    let mut el = Election::start("voterank", g, opts)?;
    let n = g.node_count();
    let f = attenuation(g);
    let mut ability = vec![1.0; n];
    let mut scores = vec![0.0; n];
    for _ in 0..el.rounds {
        for (i, s) in scores.iter_mut().enumerate() {
            *s = g.in_neighbors(i).iter().map(|&j| ability[j]).sum();
        }
        let k = el.elect(&scores);
        ability[k] = 0.0;
        for &j in g.in_neighbors(k) {
            ability[j] = f64::max(0.0, ability[j] - f);
        }
    }
    Ok(el.set)
}

/// Like [`voterank`] with score √(d_i Σ_j w_ji v_j).
pub fn wvoterank(g: &Graph, opts: &SeedOptions) -> Result<SeedSet> {
    let mut el = Election::start("wvoterank", g, opts)?;
    let n = g.node_count();
    let f = attenuation(g);
    let mut ability = vec![1.0; n];
    let mut scores = vec![0.0; n];
    for _ in 0..el.rounds {
        for (i, s) in scores.iter_mut().enumerate() {
            let received: f64 = g
                .in_neighbors(i)
                .iter()
                .zip(g.in_weights(i))
                .map(|(&j, &w)| w * ability[j])
                .sum();
            *s = (g.in_degree(i) as f64 * received).sqrt();
        }
        let k = el.elect(&scores);
        ability[k] = 0.0;
        for &j in g.in_neighbors(k) {
            ability[j] = f64::max(0.0, ability[j] - f);
        }
    }
    Ok(el.set)
}

/// Discounted degree dd_j = d_j − 2t_j − (d_j − t_j) t_j p, where t_j counts
/// already elected neighbors.
pub fn degree_discount_ic(g: &Graph, opts: &SeedOptions, p: f64) -> Result<SeedSet> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(CentralityError::InvalidArgument(format!(
            "propagation probability must lie in (0, 1], got {p}"
        )));
    }
    let mut el = Election::start("degree-discount-ic", g, opts)?;
    let n = g.node_count();
    let d: Vec<f64> = (0..n).map(|i| g.degree(i) as f64).collect();
    let mut t = vec![0.0; n];
    let mut dd = d.clone();
    for _ in 0..el.rounds {
        let k = el.elect(&dd);
        for &j in g.neighbors(k) {
            t[j] += 1.0;
            dd[j] = d[j] - 2.0 * t[j] - (d[j] - t[j]) * t[j] * p;
        }
    }
    el.set.params.insert("p".to_string(), p.to_string());
    Ok(el.set)
}

/// Repeatedly elects the node of highest degree in the remaining graph.
pub fn single_discount(g: &Graph, opts: &SeedOptions) -> Result<SeedSet> {
    let mut el = Election::start("single-discount", g, opts)?;
    let mut deg: Vec<f64> = (0..g.node_count()).map(|i| g.out_degree(i) as f64).collect();
    for _ in 0..el.rounds {
        let k = el.elect(&deg);
        for &j in g.in_neighbors(k) {
            if !el.chosen[j] {
                deg[j] -= 1.0;
            }
        }
    }
    Ok(el.set)
}
