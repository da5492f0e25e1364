use std::collections::VecDeque;

use super::Graph;
use crate::error::{CentralityError, Result};
use crate::score::ScoreVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DegreeMode {
    In,
    Out,
    #[default]
    Total,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HopMode {
    /// Nodes at hop distance exactly k.
    Exact,
    /// Nodes at hop distance 1..=k.
    Within,
}

/// Degree centrality. Weighted graphs report strengths (sum of incident
/// weights); on undirected graphs the in/out modes fall back to total.
pub fn degree(g: &Graph, mode: DegreeMode) -> ScoreVector {
    let n = g.node_count();
    let weighted = g.is_weighted();
    let out = |i: usize| {
        if weighted {
            g.strength(i)
        } else {
            g.out_degree(i) as f64
        }
    };
    let inn = |i: usize| {
        if weighted {
            g.in_strength(i)
        } else {
            g.in_degree(i) as f64
        }
    };
    let mut warning = None;
    let values: Vec<f64> = if !g.is_directed() {
        if mode != DegreeMode::Total {
            warning = Some("in/out degree on an undirected graph equals total degree");
        }
        (0..n).map(out).collect()
    } else {
        match mode {
            DegreeMode::In => (0..n).map(inn).collect(),
            DegreeMode::Out => (0..n).map(out).collect(),
            DegreeMode::Total => (0..n).map(|i| inn(i) + out(i)).collect(),
        }
    };
    let mode_name = match mode {
        DegreeMode::In => "in",
        DegreeMode::Out => "out",
        DegreeMode::Total => "total",
    };
    let mut sv = ScoreVector::new("degree", values).with_param("mode", mode_name);
    if let Some(w) = warning {
        sv.warn(w);
    }
    sv
}

/// y = A x over out-edges, ignoring weights.
pub(crate) fn adjacency_apply(g: &Graph, x: &[f64], y: &mut [f64]) {
    for (i, yi) in y.iter_mut().enumerate() {
        *yi = g.out_neighbors(i).iter().map(|&j| x[j]).sum();
    }
}

/// m-th order degree mass: sum of (A^k 1) for k = 1..=m+1.
pub fn degree_mass(g: &Graph, m: usize) -> ScoreVector {
    let n = g.node_count();
    let mut walk = vec![1.0; n];
    let mut next = vec![0.0; n];
    let mut total = vec![0.0; n];
    for _ in 0..=m {
        adjacency_apply(g, &walk, &mut next);
        std::mem::swap(&mut walk, &mut next);
        for (t, w) in total.iter_mut().zip(&walk) {
            *t += w;
        }
    }
    ScoreVector::new("degree-mass", total).with_param("m", m)
}

/// Number of common neighbors of `i` and `j`, both rows being sorted.
pub(crate) fn common_neighbors(g: &Graph, i: usize, j: usize) -> usize {
    let (a, b) = (g.neighbors(i), g.neighbors(j));
    let (mut x, mut y, mut count) = (0, 0, 0);
    while x < a.len() && y < b.len() {
        match a[x].cmp(&b[y]) {
            std::cmp::Ordering::Less => x += 1,
            std::cmp::Ordering::Greater => y += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                x += 1;
                y += 1;
            }
        }
    }
    count
}

/// Twice the number of edges among the neighbors of `i` (ordered pairs).
pub(crate) fn neighbor_links(g: &Graph, i: usize) -> usize {
    g.neighbors(i)
        .iter()
        .map(|&j| common_neighbors(g, i, j))
        .sum()
}

pub(crate) fn require_undirected(g: &Graph, measure: &'static str) -> Result<()> {
    if g.is_directed() {
        Err(CentralityError::RequiresUndirected(measure))
    } else {
        Ok(())
    }
}

pub(crate) fn clustering_values(g: &Graph) -> Vec<f64> {
    (0..g.node_count())
        .map(|i| {
            let d = g.degree(i);
            if d <= 1 {
                0.0
            } else {
                neighbor_links(g, i) as f64 / (d * (d - 1)) as f64
            }
        })
        .collect()
}

/// Local clustering coefficient; 0 for nodes of degree at most one.
pub fn clustering_coefficient(g: &Graph) -> Result<ScoreVector> {
    require_undirected(g, "clustering")?;
    Ok(ScoreVector::new("clustering", clustering_values(g)))
}

/// Hop-distance layers from `i` up to `k`, following out-edges. Index 0 of
/// the result is unused; `layers[r]` holds the nodes at distance exactly `r`.
pub(crate) fn hop_layers(g: &Graph, i: usize, k: usize) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.node_count()];
    seen[i] = true;
    let mut layers = vec![vec![i]];
    while layers.len() <= k {
        let mut next = Vec::new();
        for &u in layers.last().unwrap() {
            for &v in g.out_neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    next.push(v);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        layers.push(next);
    }
    layers
}

/// Hop distances from `i` (usize::MAX where unreachable), BFS cut at `limit`.
pub(crate) fn hop_distances(g: &Graph, i: usize, limit: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.node_count()];
    dist[i] = 0;
    let mut queue = VecDeque::from([i]);
    while let Some(u) = queue.pop_front() {
        if dist[u] == limit {
            continue;
        }
        for &v in g.out_neighbors(u) {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

/// N^(k)(i) or N^(<=k)(i), sorted, never containing `i`.
pub fn khop_set(g: &Graph, i: usize, k: usize, mode: HopMode) -> Result<Vec<usize>> {
    if k < 1 {
        return Err(CentralityError::InvalidArgument("k must be at least 1".into()));
    }
    if i >= g.node_count() {
        return Err(CentralityError::InvalidArgument(format!("node {i} out of range")));
    }
    let layers = hop_layers(g, i, k);
    let mut set: Vec<usize> = match mode {
        HopMode::Exact => layers.get(k).cloned().unwrap_or_default(),
        HopMode::Within => layers.iter().skip(1).flatten().copied().collect(),
    };
    set.sort_unstable();
    Ok(set)
}
