//! Measures that aggregate each node's shortest-path distance profile.

use crate::error::{CentralityError, Result};
use crate::geodesic::{require_connected, GeodesicResult, SearchOptions};
use crate::graph::queries::require_undirected;
use crate::graph::{khop_set, Graph, HopMode};
use crate::parallel;
use crate::score::{Score, ScoreVector};

/// Applies `f` to the search result of every source.
pub(crate) fn per_source<T: Send>(
    g: &Graph,
    opts: SearchOptions,
    f: impl Fn(&GeodesicResult, usize) -> T + Sync,
) -> Vec<T> {
    let n = g.node_count();
    parallel::map_nodes(
        n,
        || GeodesicResult::new(n),
        |r, s| {
            r.compute(g, s, &opts);
            f(r, s)
        },
    )
}

/// Sum of `f(d)` over finite distances to other reached nodes.
fn sum_reached(r: &GeodesicResult, f: impl Fn(f64) -> f64) -> f64 {
    r.order.iter().skip(1).map(|&v| f(r.dist[v])).sum()
}

fn singleton_undefined(measure: &str, n: usize) -> Option<ScoreVector> {
    (n < 2).then(|| {
        ScoreVector::from_scores(measure, vec![Score::Undefined; n])
            .with_warning("needs at least two nodes")
    })
}

/// (N−1) / Σ_j d_ij.
pub fn closeness(g: &Graph) -> Result<ScoreVector> {
    require_connected(g, "closeness")?;
    let n = g.node_count();
    if let Some(sv) = singleton_undefined("closeness", n) {
        return Ok(sv);
    }
    let v = per_source(g, SearchOptions::default(), |r, _| {
        (n - 1) as f64 / sum_reached(r, |d| d)
    });
    Ok(ScoreVector::new("closeness", v))
}

/// Σ_j 1/d_ij; unreachable nodes contribute nothing.
pub fn harmonic(g: &Graph) -> ScoreVector {
    let v = per_source(g, SearchOptions::default(), |r, _| sum_reached(r, |d| 1.0 / d));
    ScoreVector::new("harmonic", v)
}

/// 1 / max_j d_ij.
pub fn eccentricity(g: &Graph) -> Result<ScoreVector> {
    require_connected(g, "eccentricity")?;
    if let Some(sv) = singleton_undefined("eccentricity", g.node_count()) {
        return Ok(sv);
    }
    let v = per_source(g, SearchOptions::default(), |r, _| {
        1.0 / r.dist[*r.order.last().unwrap()]
    });
    Ok(ScoreVector::new("eccentricity", v))
}

/// |R_i|² / Σ_{j∈R_i} d_ij over the nodes R_i reachable from i (i excluded);
/// 1 for nodes that reach nothing.
pub fn lin_index(g: &Graph) -> ScoreVector {
    let v = per_source(g, SearchOptions::default(), |r, _| {
        let k = (r.reached() - 1) as f64;
        if k == 0.0 {
            1.0
        } else {
            k * k / sum_reached(r, |d| d)
        }
    });
    ScoreVector::new("lin", v)
}

/// Σ_j δ^{d_ij}.
pub fn decay(g: &Graph, delta: f64) -> Result<ScoreVector> {
    if !(delta > 0.0 && delta < 1.0) {
        return Err(CentralityError::InvalidArgument(format!(
            "decay parameter must lie in (0, 1), got {delta}"
        )));
    }
    let v = per_source(g, SearchOptions::default(), |r, _| {
        sum_reached(r, |d| delta.powf(d))
    });
    Ok(ScoreVector::new("decay", v).with_param("delta", delta))
}

/// Σ_j (d_G + 1 − d_ij) / (N−1). Serves integration centrality as well,
/// which coincides on undirected graphs.
pub fn radiality(g: &Graph) -> Result<ScoreVector> {
    require_undirected(g, "radiality")?;
    require_connected(g, "radiality")?;
    let n = g.node_count();
    if let Some(sv) = singleton_undefined("radiality", n) {
        return Ok(sv);
    }
    let rows = per_source(g, SearchOptions::default(), |r, _| {
        (sum_reached(r, |d| d), r.dist[*r.order.last().unwrap()])
    });
    let diameter = rows.iter().map(|r| r.1).fold(0.0, f64::max);
    let m = (n - 1) as f64;
    let v = rows
        .iter()
        .map(|&(sum, _)| (m * (diameter + 1.0) - sum) / m)
        .collect();
    Ok(ScoreVector::new("radiality", v))
}

/// Σ_j d_ij^{−δ} / (N−1). Needs connectivity when δ ≤ 0, where unreachable
/// nodes would otherwise contribute infinity (or 1 at δ = 0).
pub fn delta_closeness(g: &Graph, delta: f64) -> Result<ScoreVector> {
    if !delta.is_finite() {
        return Err(CentralityError::InvalidArgument("delta must be finite".into()));
    }
    if delta <= 0.0 {
        require_connected(g, "delta-closeness")?;
    }
    let n = g.node_count();
    if let Some(sv) = singleton_undefined("delta-closeness", n) {
        return Ok(sv);
    }
    let v = per_source(g, SearchOptions::default(), |r, _| {
        sum_reached(r, |d| d.powf(-delta)) / (n - 1) as f64
    });
    Ok(ScoreVector::new("delta-closeness", v).with_param("delta", delta))
}

/// Inverted power mean of the distances d_ji towards i; p = 0 takes the
/// geometric mean.
pub fn p_means(g: &Graph, p: f64) -> Result<ScoreVector> {
    if !p.is_finite() {
        return Err(CentralityError::InvalidArgument(
            "p must be finite; use eccentricity or degree for the limits".into(),
        ));
    }
    require_connected(g, "p-means")?;
    let n = g.node_count();
    if let Some(sv) = singleton_undefined("p-means", n) {
        return Ok(sv);
    }
    let m = (n - 1) as f64;
    let opts = SearchOptions {
        reverse: true,
        ..Default::default()
    };
    let v = per_source(g, opts, |r, _| {
        if p == 0.0 {
            (-sum_reached(r, f64::ln) / m).exp()
        } else if p == 1.0 {
            m / sum_reached(r, |d| d)
        } else {
            (sum_reached(r, |d| d.powf(p)) / m).powf(-1.0 / p)
        }
    });
    Ok(ScoreVector::new("p-means", v).with_param("p", p))
}

/// |N^(≤m)(i)|, counted in hops.
pub fn m_reach(g: &Graph, m: usize) -> Result<ScoreVector> {
    if m < 1 {
        return Err(CentralityError::InvalidArgument("m must be at least 1".into()));
    }
    let v = parallel::map_nodes(g.node_count(), || (), |_, i| {
        khop_set(g, i, m, HopMode::Within).map(|s| s.len() as f64)
    })
    .into_iter()
    .collect::<Result<Vec<f64>>>()?;
    Ok(ScoreVector::new("m-reach", v).with_param("m", m))
}

/// Fraction of the other nodes reachable from i along outgoing edges.
pub fn local_reaching(g: &Graph) -> ScoreVector {
    let n = g.node_count();
    if n == 1 {
        return ScoreVector::new("local-reaching", vec![0.0])
            .with_warning("single-node graph: nothing to reach");
    }
    let opts = SearchOptions {
        hops_only: true,
        ..Default::default()
    };
    let v = per_source(g, opts, |r, _| (r.reached() - 1) as f64 / (n - 1) as f64);
    ScoreVector::new("local-reaching", v)
}

/// Number of geodesics of length 1..=k starting at i.
pub fn geodesic_kpath(g: &Graph, k: usize) -> Result<ScoreVector> {
    if !g.has_unit_weights() {
        return Err(CentralityError::RequiresUnitWeights("geodesic-k-path"));
    }
    if k < 1 {
        return Err(CentralityError::InvalidArgument("k must be at least 1".into()));
    }
    let opts = SearchOptions {
        max_depth: Some(k),
        ..Default::default()
    };
    let v = per_source(g, opts, |r, _| {
        r.order.iter().skip(1).map(|&v| r.sigma[v]).sum()
    });
    Ok(ScoreVector::new("geodesic-k-path", v).with_param("k", k))
}
