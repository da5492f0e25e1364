//! Measures computed from one- and two-hop neighborhoods. Weights are
//! ignored; on directed graphs a node's neighborhood is its successors.

use crate::error::Result;
use crate::graph::queries::{clustering_values, hop_layers, neighbor_links, require_undirected};
use crate::graph::Graph;
use crate::parallel;
use crate::score::{Score, ScoreVector};

/// Σ_{j∈N(i)} Σ_{k∈N(j)} n(k), with n(k) the number of nodes within two hops of k.
pub fn localrank(g: &Graph) -> ScoreVector {
    let n = g.node_count();
    let reach = parallel::map_nodes(n, || (), |_, k| {
        hop_layers(g, k, 2).iter().skip(1).map(Vec::len).sum::<usize>() as f64
    });
    let q: Vec<f64> = (0..n)
        .map(|j| g.neighbors(j).iter().map(|&k| reach[k]).sum())
        .collect();
    let v = (0..n)
        .map(|i| g.neighbors(i).iter().map(|&j| q[j]).sum())
        .collect();
    ScoreVector::new("localrank", v)
}

/// 10^(−c_i) Σ_{j∈N(i)} (d_j + 1), c_i the local clustering coefficient
/// (out-neighborhood clustering on directed graphs).
pub fn clusterrank(g: &Graph) -> ScoreVector {
    let clustering = clustering_values(g);
    let v = (0..g.node_count())
        .map(|i| {
            let s: usize = g.neighbors(i).iter().map(|&j| g.degree(j) + 1).sum();
            10f64.powf(-clustering[i]) * s as f64
        })
        .collect();
    ScoreVector::new("clusterrank", v)
}

/// (1/d_i) Σ_{j∈N(i)} (d_i − d_j)/(d_i + d_j); undefined for isolated nodes.
pub fn leverage(g: &Graph) -> ScoreVector {
    let scores = (0..g.node_count())
        .map(|i| {
            let di = g.degree(i) as f64;
            if di == 0.0 {
                return Score::Undefined;
            }
            let s: f64 = g
                .neighbors(i)
                .iter()
                .map(|&j| {
                    let dj = g.degree(j) as f64;
                    (di - dj) / (di + dj)
                })
                .sum();
            Score::Value(s / di)
        })
        .collect();
    ScoreVector::from_scores("leverage", scores)
}

/// Mean degree of the neighbors; 0 for isolated nodes.
pub fn neighborhood_connectivity(g: &Graph) -> ScoreVector {
    let v = (0..g.node_count())
        .map(|i| {
            let d = g.degree(i);
            if d == 0 {
                0.0
            } else {
                g.neighbors(i).iter().map(|&j| g.degree(j)).sum::<usize>() as f64 / d as f64
            }
        })
        .collect();
    ScoreVector::new("neighborhood-connectivity", v)
}

/// Σ_{j∈N(i)} (p_ij + Σ_k p_ik p_kj)² with p_ij = 1/d_i and k ranging over
/// neighbors of i adjacent to j; undefined for isolated nodes.
pub fn burt_constraint(g: &Graph) -> ScoreVector {
    let scores = parallel::map_nodes(g.node_count(), || (), |_, i| {
        let nbrs = g.neighbors(i);
        if nbrs.is_empty() {
            return Score::Undefined;
        }
        let p = 1.0 / nbrs.len() as f64;
        let total = nbrs
            .iter()
            .map(|&j| {
                let indirect: f64 = nbrs
                    .iter()
                    .filter(|&&k| k != j && g.has_edge(k, j))
                    .map(|&k| p / g.degree(k) as f64)
                    .sum();
                (p + indirect).powi(2)
            })
            .sum();
        Score::Value(total)
    });
    ScoreVector::from_scores("burt-constraint", scores)
}

/// Twice the number of triangles through i, divided by d_i; 0 when d_i = 0.
fn mean_tie_overlap(g: &Graph, i: usize) -> f64 {
    let d = g.degree(i);
    if d == 0 {
        0.0
    } else {
        neighbor_links(g, i) as f64 / d as f64
    }
}

/// Non-redundant contacts: d_i − 2t_i/d_i, t_i the triangles through i.
pub fn effective_size(g: &Graph) -> Result<ScoreVector> {
    require_undirected(g, "effective-size")?;
    let v = (0..g.node_count())
        .map(|i| g.degree(i) as f64 - mean_tie_overlap(g, i))
        .collect();
    Ok(ScoreVector::new("effective-size", v))
}

/// c_cl(i) (d_i − 1): the mean number of ties a neighbor has into the rest
/// of i's neighborhood.
pub fn redundancy(g: &Graph) -> ScoreVector {
    let v = (0..g.node_count()).map(|i| mean_tie_overlap(g, i)).collect();
    ScoreVector::new("redundancy", v)
}
