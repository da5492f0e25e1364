//! Removal-impact measures: how much a graph-level quantity changes when a
//! node and its edges are deleted.

use crate::error::{CentralityError, Result};
use crate::geodesic::{require_connected, GeodesicResult, SearchOptions};
use crate::graph::queries::require_undirected;
use crate::graph::Graph;
use crate::parallel;
use crate::score::{Score, ScoreVector};

/// Σ_k λ_k² of the weighted Laplacian = Σ_i s_i² + 2 Σ_{i<j} w_ij².
pub fn laplacian_energy(g: &Graph) -> f64 {
    let strengths: f64 = (0..g.node_count()).map(|i| g.strength(i).powi(2)).sum();
    strengths + 2.0 * g.edges().map(|(_, _, w)| w * w).sum::<f64>()
}

/// Energy lost by deleting node i: s_i² + Σ_j (2 s_j w_ij + w_ij²).
fn laplacian_drop(g: &Graph, i: usize) -> f64 {
    g.strength(i).powi(2)
        + g.neighbors(i)
            .iter()
            .zip(g.out_weights(i))
            .map(|(&j, &w)| 2.0 * g.strength(j) * w + w * w)
            .sum::<f64>()
}

/// Relative drop in Laplacian energy, (E_L(G) − E_L(G_i)) / E_L(G).
pub fn laplacian_centrality(g: &Graph) -> Result<ScoreVector> {
    require_undirected(g, "laplacian")?;
    let total = laplacian_energy(g);
    if total == 0.0 {
        return Err(CentralityError::Undefined {
            measure: "laplacian",
            reason: "the graph has no edges, so its Laplacian energy is 0".into(),
        });
    }
    let v = (0..g.node_count()).map(|i| laplacian_drop(g, i) / total).collect();
    Ok(ScoreVector::new("laplacian", v))
}

/// E_Q(G) − E_Q(G_i) for Q = D + A, in closed form d_i² + d_i + 2 Σ_{j∈N(i)} d_j.
pub fn quasi_laplacian(g: &Graph) -> Result<ScoreVector> {
    require_undirected(g, "quasi-laplacian")?;
    let v = (0..g.node_count())
        .map(|i| {
            let d = g.degree(i) as f64;
            let nbr: usize = g.neighbors(i).iter().map(|&j| g.degree(j)).sum();
            d * d + d + 2.0 * nbr as f64
        })
        .collect();
    Ok(ScoreVector::new("quasi-laplacian", v))
}

/// Sum of `f(d)` over ordered reachable pairs of `g` with `excluded` deleted,
/// plus the number of ordered pairs left unreachable.
fn pair_sum(g: &Graph, excluded: Option<usize>, f: impl Fn(f64) -> f64 + Sync) -> (f64, usize) {
    let n = g.node_count();
    let opts = SearchOptions {
        excluded,
        ..Default::default()
    };
    let alive = n - excluded.is_some() as usize;
    let acc = parallel::sum_over_sources(
        n,
        2,
        || GeodesicResult::new(n),
        |r, s, acc| {
            if Some(s) == excluded {
                return;
            }
            r.compute(g, s, &opts);
            acc[0] += r.order.iter().skip(1).map(|&v| f(r.dist[v])).sum::<f64>();
            acc[1] += (alive - r.reached()) as f64;
        },
    );
    (acc[0], acc[1] as usize)
}

/// Wiener index over ordered pairs.
pub fn wiener_index(g: &Graph) -> f64 {
    pair_sum(g, None, |d| d).0
}

/// W(G) − W(G_i); nodes whose removal disconnects the rest get
/// [`Score::Disconnects`].
pub fn closeness_vitality(g: &Graph) -> Result<ScoreVector> {
    require_connected(g, "closeness-vitality")?;
    let whole = wiener_index(g);
    let scores = (0..g.node_count())
        .map(|i| {
            let (w, unreachable) = pair_sum(g, Some(i), |d| d);
            if unreachable > 0 {
                Score::Disconnects
            } else {
                Score::Value(whole - w)
            }
        })
        .collect();
    Ok(ScoreVector::from_scores("closeness-vitality", scores))
}

/// Global efficiency of `g` with `excluded` deleted, normalized by the
/// remaining node count.
fn efficiency(g: &Graph, excluded: Option<usize>) -> f64 {
    let n = (g.node_count() - excluded.is_some() as usize) as f64;
    if n < 2.0 {
        return 0.0;
    }
    pair_sum(g, excluded, |d| 1.0 / d).0 / (n * (n - 1.0))
}

/// Relative drop in global efficiency, (E(G) − E(G_i)) / E(G), where G_i is
/// normalized over its own N−1 nodes.
pub fn efficiency_centrality(g: &Graph) -> Result<ScoreVector> {
    let whole = efficiency(g, None);
    if whole == 0.0 {
        return Err(CentralityError::Undefined {
            measure: "efficiency",
            reason: "the graph has zero global efficiency".into(),
        });
    }
    let v = (0..g.node_count())
        .map(|i| (whole - efficiency(g, Some(i))) / whole)
        .collect();
    Ok(ScoreVector::new("efficiency", v))
}
