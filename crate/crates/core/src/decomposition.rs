//! Peeling decompositions (k-shell with onion layers, mixed degree, k-truss)
//! and the h-index / neighbor-coreness scores built on them.

use crate::error::{CentralityError, Result};
use crate::graph::queries::{common_neighbors, require_undirected};
use crate::graph::Graph;
use crate::score::ScoreVector;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// k-shell index.
    pub core: Vec<usize>,
    /// Onion layer: the global peeling round that removed the node, from 1.
    pub layer: Vec<usize>,
    /// Round within the node's own shell, from 1.
    pub removal_iteration: Vec<usize>,
}

impl Decomposition {
    pub fn core_scores(&self) -> ScoreVector {
        ScoreVector::new("k-shell", self.core.iter().map(|&c| c as f64).collect())
    }
}

/// k-shell decomposition by rounds: every remaining node whose residual
/// degree is at most k leaves together, and k rises to the minimum residual
/// degree once no such node is left. Starting k at the minimum degree gives
/// isolated nodes core 0.
pub fn kshell(g: &Graph) -> Result<Decomposition> {
    require_undirected(g, "k-shell")?;
    let n = g.node_count();
    let mut deg: Vec<usize> = (0..n).map(|i| g.degree(i)).collect();
    let mut removed = vec![false; n];
    let mut out = Decomposition {
        core: vec![0; n],
        layer: vec![0; n],
        removal_iteration: vec![0; n],
    };
    let mut remaining = n;
    let mut k = 0;
    let mut layer = 0;
    let mut round_in_shell = 0;
    let mut frontier: Vec<usize> = Vec::new();
    while remaining > 0 {
        if frontier.is_empty() {
            let min = (0..n).filter(|&i| !removed[i]).map(|i| deg[i]).min().unwrap();
            k = k.max(min);
            round_in_shell = 0;
            frontier = (0..n).filter(|&i| !removed[i] && deg[i] <= k).collect();
        }
        layer += 1;
        round_in_shell += 1;
        for &v in &frontier {
            removed[v] = true;
            out.core[v] = k;
            out.layer[v] = layer;
            out.removal_iteration[v] = round_in_shell;
        }
        remaining -= frontier.len();
        let mut next = Vec::new();
        for &v in &frontier {
            for &u in g.neighbors(v) {
                if !removed[u] {
                    deg[u] -= 1;
                    if deg[u] == k {
                        next.push(u);
                    }
                }
            }
        }
        // A neighbor already at or below k enters `next` when it crosses k;
        // anything already below k was in this round's frontier.
        next.sort_unstable();
        next.dedup();
        frontier = next;
    }
    Ok(out)
}

/// Mixed-degree shells with d^(m) = d^(r) + λ d^(e), peeled in rounds.
/// Shell values are real, so the result is a score vector.
pub fn mdd(g: &Graph, lambda: f64) -> Result<ScoreVector> {
    require_undirected(g, "mdd")?;
    if !(0.0..=1.0).contains(&lambda) {
        return Err(CentralityError::InvalidArgument(format!(
            "lambda must lie in [0, 1], got {lambda}"
        )));
    }
    let n = g.node_count();
    let mut residual: Vec<usize> = (0..n).map(|i| g.degree(i)).collect();
    let mut exhausted = vec![0usize; n];
    let mixed = |r: usize, e: usize| r as f64 + lambda * e as f64;
    let mut removed = vec![false; n];
    let mut shell = vec![0.0; n];
    let mut remaining = n;
    let mut k = f64::NEG_INFINITY;
    let tol = 1e-12;
    while remaining > 0 {
        let mut round: Vec<usize> = (0..n)
            .filter(|&i| !removed[i] && mixed(residual[i], exhausted[i]) <= k + tol)
            .collect();
        if round.is_empty() {
            k = (0..n)
                .filter(|&i| !removed[i])
                .map(|i| mixed(residual[i], exhausted[i]))
                .fold(f64::INFINITY, f64::min);
            round = (0..n)
                .filter(|&i| !removed[i] && mixed(residual[i], exhausted[i]) <= k + tol)
                .collect();
        }
        for &v in &round {
            removed[v] = true;
            shell[v] = k;
        }
        for &v in &round {
            for &u in g.neighbors(v) {
                if !removed[u] {
                    residual[u] -= 1;
                    exhausted[u] += 1;
                }
            }
        }
        remaining -= round.len();
    }
    Ok(ScoreVector::new("mdd", shell).with_param("lambda", lambda))
}

/// Truss number of every edge of `g.edges()`, in that order.
pub fn edge_truss(g: &Graph) -> Result<Vec<((usize, usize), usize)>> {
    require_undirected(g, "k-truss")?;
    let n = g.node_count();
    let edges: Vec<(usize, usize)> = g.edges().map(|(u, v, _)| (u, v)).collect();
    // ids[u][k] = id of the edge between u and neighbors(u)[k]
    let mut ids: Vec<Vec<usize>> = (0..n).map(|u| vec![0; g.degree(u)]).collect();
    for (e, &(u, v)) in edges.iter().enumerate() {
        let pu = g.neighbors(u).binary_search(&v).unwrap();
        let pv = g.neighbors(v).binary_search(&u).unwrap();
        ids[u][pu] = e;
        ids[v][pv] = e;
    }
    let edge_id = |u: usize, v: usize| g.neighbors(u).binary_search(&v).ok().map(|p| ids[u][p]);
    let mut support: Vec<usize> = edges.iter().map(|&(u, v)| common_neighbors(g, u, v)).collect();
    let mut alive = vec![true; edges.len()];
    let mut truss = vec![0; edges.len()];
    let mut left = edges.len();
    let mut k = 2;
    while left > 0 {
        let mut stack: Vec<usize> = (0..edges.len())
            .filter(|&e| alive[e] && support[e] + 2 <= k)
            .collect();
        if stack.is_empty() {
            k += 1;
            continue;
        }
        while let Some(e) = stack.pop() {
            if !alive[e] {
                continue;
            }
            alive[e] = false;
            truss[e] = k;
            left -= 1;
            let (u, v) = edges[e];
            for &w in g.neighbors(u) {
                let (Some(a), Some(b)) = (edge_id(u, w), edge_id(v, w)) else {
                    continue;
                };
                if alive[a] && alive[b] {
                    for x in [a, b] {
                        support[x] -= 1;
                        if support[x] + 2 <= k {
                            stack.push(x);
                        }
                    }
                }
            }
        }
    }
    Ok(edges.into_iter().zip(truss).collect())
}

/// Largest truss number over a node's incident edges; 0 for isolated nodes.
pub fn ktruss_index(g: &Graph) -> Result<ScoreVector> {
    let mut best = vec![0.0f64; g.node_count()];
    for ((u, v), t) in edge_truss(g)? {
        best[u] = best[u].max(t as f64);
        best[v] = best[v].max(t as f64);
    }
    Ok(ScoreVector::new("k-truss", best))
}

/// h-index of a multiset of nonnegative integers.
pub fn h_index(mut values: Vec<usize>) -> usize {
    values.sort_unstable_by(|a, b| b.cmp(a));
    values.iter().enumerate().take_while(|&(k, &v)| v > k).count()
}

fn lobby_values(g: &Graph) -> Vec<usize> {
    (0..g.node_count())
        .map(|i| h_index(g.neighbors(i).iter().map(|&j| g.degree(j)).collect()))
        .collect()
}

/// Largest k such that at least k neighbors have degree at least k.
pub fn lobby(g: &Graph) -> ScoreVector {
    ScoreVector::new("lobby", lobby_values(g).into_iter().map(|h| h as f64).collect())
}

/// h(i) + Σ_{j∈N(i)} h(j) with h the lobby index.
pub fn local_h_index(g: &Graph) -> ScoreVector {
    let h = lobby_values(g);
    let v = (0..g.node_count())
        .map(|i| (h[i] + g.neighbors(i).iter().map(|&j| h[j]).sum::<usize>()) as f64)
        .collect();
    ScoreVector::new("local-h-index", v)
}

fn ink_values(g: &Graph, core: &[usize], alpha: f64) -> Vec<f64> {
    (0..g.node_count())
        .map(|i| g.neighbors(i).iter().map(|&j| (core[j] as f64).powf(alpha)).sum())
        .collect()
}

/// Σ_{j∈N(i)} k_s(j)^α.
pub fn ink(g: &Graph, alpha: f64) -> Result<ScoreVector> {
    if !alpha.is_finite() {
        return Err(CentralityError::InvalidArgument("alpha must be finite".into()));
    }
    let d = kshell(g)?;
    Ok(ScoreVector::new("ink", ink_values(g, &d.core, alpha)).with_param("alpha", alpha))
}

/// Σ_{j∈N(i)} ink(j) with α = 1.
pub fn extended_coreness(g: &Graph) -> Result<ScoreVector> {
    let d = kshell(g)?;
    let inner = ink_values(g, &d.core, 1.0);
    let v = (0..g.node_count())
        .map(|i| g.neighbors(i).iter().map(|&j| inner[j]).sum())
        .collect();
    Ok(ScoreVector::new("extended-coreness", v))
}
