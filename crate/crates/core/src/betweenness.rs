//! Betweenness-type measures from one backward pass per source over the
//! shortest-path DAG. All sums run over ordered source/target pairs.

use crate::error::{CentralityError, Result};
use crate::geodesic::{GeodesicResult, SearchOptions};
use crate::graph::Graph;
use crate::parallel;
use crate::score::ScoreVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    /// Pair dependency σ_st(v)/σ_st.
    Fraction,
    /// Pair dependency scaled by 1/d_st.
    LengthScaled,
    /// Raw path counts σ_st(v).
    Stress,
    /// Like `Fraction`, with sources and targets credited too.
    Endpoint,
}

fn accumulate(g: &Graph, opts: SearchOptions, kind: Kind) -> Vec<f64> {
    let n = g.node_count();
    parallel::sum_over_sources(
        n,
        n,
        || (GeodesicResult::new(n), vec![0.0; n]),
        |(r, delta), s, acc| {
            r.compute(g, s, &opts);
            for &v in &r.order {
                delta[v] = 0.0;
            }
            for &w in r.order.iter().rev() {
                let dw = delta[w];
                match kind {
                    Kind::Stress => {
                        for &v in &r.preds[w] {
                            delta[v] += 1.0 + dw;
                        }
                        if w != s {
                            acc[w] += r.sigma[w] * dw;
                        }
                    }
                    _ => {
                        let target = if kind == Kind::LengthScaled {
                            1.0 / r.dist[w]
                        } else {
                            1.0
                        };
                        let coeff = (target + dw) / r.sigma[w];
                        for &v in &r.preds[w] {
                            delta[v] += r.sigma[v] * coeff;
                        }
                        if w != s {
                            acc[w] += dw;
                        }
                    }
                }
            }
            if kind == Kind::Endpoint {
                acc[s] += (r.reached() - 1) as f64;
                for &t in r.order.iter().skip(1) {
                    acc[t] += 1.0;
                }
            }
        },
    )
}

/// Σ_{s≠t≠i} σ_st(i)/σ_st.
pub fn betweenness(g: &Graph) -> ScoreVector {
    ScoreVector::new("betweenness", accumulate(g, SearchOptions::default(), Kind::Fraction))
}

/// Σ_{s≠t≠i} σ_st(i).
pub fn stress(g: &Graph) -> ScoreVector {
    ScoreVector::new("stress", accumulate(g, SearchOptions::default(), Kind::Stress))
}

/// Betweenness over pairs at most `k` hops apart.
pub fn k_betweenness(g: &Graph, k: usize) -> Result<ScoreVector> {
    if !g.has_unit_weights() {
        return Err(CentralityError::RequiresUnitWeights("k-betweenness"));
    }
    if k < 1 {
        return Err(CentralityError::InvalidArgument("k must be at least 1".into()));
    }
    let opts = SearchOptions {
        max_depth: Some(k),
        ..Default::default()
    };
    Ok(ScoreVector::new("k-betweenness", accumulate(g, opts, Kind::Fraction)).with_param("k", k))
}

/// Σ_{s≠t≠i} σ_st(i) / (σ_st · d_st).
pub fn length_scaled_betweenness(g: &Graph) -> ScoreVector {
    ScoreVector::new(
        "length-scaled-betweenness",
        accumulate(g, SearchOptions::default(), Kind::LengthScaled),
    )
}

/// Betweenness that also credits each path's two end nodes.
pub fn endpoint_betweenness(g: &Graph) -> ScoreVector {
    ScoreVector::new(
        "endpoint-betweenness",
        accumulate(g, SearchOptions::default(), Kind::Endpoint),
    )
}

/// Divides by (N−1)(N−2), the number of ordered pairs excluding a node.
pub fn normalized(sv: ScoreVector) -> ScoreVector {
    let n = sv.len() as f64;
    if sv.len() < 3 {
        return sv.with_warning("normalization skipped: fewer than three nodes");
    }
    let scale = (n - 1.0) * (n - 2.0);
    sv.map_values(|x| x / scale).with_param("normalized", true)
}

/// Halves ordered-pair sums to the unordered convention.
pub fn halved(sv: ScoreVector) -> ScoreVector {
    sv.map_values(|x| x / 2.0).with_param("halved", true)
}
