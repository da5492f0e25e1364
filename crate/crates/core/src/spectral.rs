//! Fixed-point and dominant-eigenvector measures, all solved by iteration on
//! the unweighted adjacency matrix.

use crate::error::{CentralityError, Result};
use crate::geodesic::require_connected;
use crate::graph::queries::{adjacency_apply, require_undirected};
use crate::graph::Graph;
use crate::score::ScoreVector;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IterationConfig {
    /// Stop once the L1 change between sweeps falls below this.
    pub tolerance: f64,
    pub max_iterations: usize,
}

impl Default for IterationConfig {
    fn default() -> Self {
        IterationConfig {
            tolerance: 1e-12,
            max_iterations: 100_000,
        }
    }
}

impl IterationConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.tolerance > 0.0) || self.max_iterations < 1 {
            return Err(CentralityError::InvalidArgument(
                "tolerance must be positive and max_iterations at least 1".into(),
            ));
        }
        Ok(())
    }
}

/// Sweeps without contraction before a fixed point is declared divergent.
const STALL_WINDOW: usize = 50;

fn l1_change(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).sum()
}

fn l2_normalize(x: &mut [f64]) -> f64 {
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm > 0.0 {
        for v in x.iter_mut() {
            *v /= norm;
        }
    }
    norm
}

/// Iterates `x ← step(x)` from `x0` until the L1 change drops below the
/// tolerance. Growth without contraction over a window of sweeps, or a
/// non-finite iterate, is reported as divergence.
fn fixed_point(
    measure: &'static str,
    x0: Vec<f64>,
    cfg: &IterationConfig,
    mut step: impl FnMut(&[f64], &mut [f64]),
) -> Result<Vec<f64>> {
    cfg.validate()?;
    let mut x = x0;
    let mut next = vec![0.0; x.len()];
    let mut history: Vec<f64> = Vec::new();
    let mut change = f64::INFINITY;
    for it in 0..cfg.max_iterations {
        step(&x, &mut next);
        change = l1_change(&x, &next);
        std::mem::swap(&mut x, &mut next);
        if !change.is_finite() || x.iter().any(|v| !v.is_finite() || v.abs() > 1e300) {
            return Err(CentralityError::Diverges {
                measure,
                reason: "iterates grew without bound".into(),
            });
        }
        if change < cfg.tolerance {
            return Ok(x);
        }
        history.push(change);
        if it >= STALL_WINDOW && change >= history[it - STALL_WINDOW] {
            return Err(CentralityError::Diverges {
                measure,
                reason: format!("update size stopped shrinking ({change:e} per sweep)"),
            });
        }
    }
    Err(CentralityError::NotConverged {
        measure,
        iterations: cfg.max_iterations,
        residual: change,
    })
}

/// Largest adjacency eigenvalue of an undirected graph, by shifted power
/// iteration with a Rayleigh-quotient estimate. Works on disconnected graphs.
pub fn spectral_radius(g: &Graph, cfg: &IterationConfig) -> Result<f64> {
    require_undirected(g, "spectral-radius")?;
    let n = g.node_count();
    if g.edge_count() == 0 {
        return Ok(0.0);
    }
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut ax = vec![0.0; n];
    let mut lambda = 0.0;
    for _ in 0..cfg.max_iterations {
        adjacency_apply(g, &x, &mut ax);
        let rq: f64 = x.iter().zip(&ax).map(|(a, b)| a * b).sum();
        for (xi, ai) in x.iter_mut().zip(&ax) {
            *xi = ai + 0.5 * *xi;
        }
        l2_normalize(&mut x);
        if (rq - lambda).abs() <= 1e-15 * rq.max(1.0) {
            return Ok(rq);
        }
        lambda = rq;
    }
    Ok(lambda)
}

/// Unit-L2 principal eigenvector of A, iterated on A + I/2 so bipartite
/// graphs do not oscillate. Also returns the eigenvalue.
pub fn eigenvector_with_value(g: &Graph, cfg: &IterationConfig) -> Result<(Vec<f64>, f64)> {
    require_undirected(g, "eigenvector")?;
    require_connected(g, "eigenvector")?;
    let n = g.node_count();
    if n == 0 {
        return Ok((Vec::new(), 0.0));
    }
    let x0 = vec![1.0 / (n as f64).sqrt(); n];
    let x = fixed_point("eigenvector", x0, cfg, |x, out| {
        adjacency_apply(g, x, out);
        for (o, xi) in out.iter_mut().zip(x) {
            *o += 0.5 * xi;
        }
        l2_normalize(out);
    })?;
    let mut ax = vec![0.0; n];
    adjacency_apply(g, &x, &mut ax);
    let lambda: f64 = x.iter().zip(&ax).map(|(a, b)| a * b).sum();
    let residual = ax
        .iter()
        .zip(&x)
        .map(|(a, b)| (a - lambda * b).powi(2))
        .sum::<f64>()
        .sqrt();
    if residual > 1e-10 * lambda.max(f64::MIN_POSITIVE) && residual > 0.0 {
        return Err(CentralityError::NotConverged {
            measure: "eigenvector",
            iterations: cfg.max_iterations,
            residual,
        });
    }
    Ok((x, lambda))
}

pub fn eigenvector_centrality(g: &Graph, cfg: &IterationConfig) -> Result<ScoreVector> {
    let (x, lambda) = eigenvector_with_value(g, cfg)?;
    Ok(ScoreVector::new("eigenvector", x).with_param("lambda", lambda))
}

/// Katz centrality Σ_{k≥1} α^k A^k 1, or with `beta` set, alpha-centrality
/// x = αAx + β1 (which equals β(katz + 1)).
pub fn katz(g: &Graph, alpha: f64, beta: Option<f64>, cfg: &IterationConfig) -> Result<ScoreVector> {
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(CentralityError::InvalidArgument(format!(
            "alpha must be positive, got {alpha}"
        )));
    }
    let name = if beta.is_some() { "alpha-centrality" } else { "katz" };
    if !g.is_directed() {
        let lambda = spectral_radius(g, cfg)?;
        if alpha * lambda >= 1.0 {
            return Err(CentralityError::Diverges {
                measure: if beta.is_some() { "alpha-centrality" } else { "katz" },
                reason: format!("alpha = {alpha} is not below 1/lambda_max = {}", 1.0 / lambda),
            });
        }
    }
    let n = g.node_count();
    let mut shifted = vec![0.0; n];
    let x = match beta {
        None => fixed_point("katz", vec![0.0; n], cfg, |x, out| {
            for (s, xi) in shifted.iter_mut().zip(x) {
                *s = xi + 1.0;
            }
            adjacency_apply(g, &shifted, out);
            out.iter_mut().for_each(|o| *o *= alpha);
        })?,
        Some(b) => fixed_point("alpha-centrality", vec![b; n], cfg, |x, out| {
            adjacency_apply(g, x, out);
            out.iter_mut().for_each(|o| *o = alpha * *o + b);
        })?,
    };
    let mut sv = ScoreVector::new(name, x).with_param("alpha", alpha);
    if let Some(b) = beta {
        sv = sv.with_param("beta", b);
    }
    Ok(sv)
}

/// Random walk with uniform restart; dangling nodes spread their mass uniformly.
pub fn pagerank(g: &Graph, alpha: f64, cfg: &IterationConfig) -> Result<ScoreVector> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(CentralityError::InvalidArgument(format!(
            "damping must lie in [0, 1), got {alpha}"
        )));
    }
    let n = g.node_count();
    if n == 0 {
        return Ok(ScoreVector::new("pagerank", Vec::new()));
    }
    let nf = n as f64;
    let inv_out: Vec<f64> = (0..n)
        .map(|j| match g.out_degree(j) {
            0 => 0.0,
            d => 1.0 / d as f64,
        })
        .collect();
    let x = fixed_point("pagerank", vec![1.0 / nf; n], cfg, |x, out| {
        let dangling: f64 = (0..n).filter(|&j| g.out_degree(j) == 0).map(|j| x[j]).sum();
        let base = (1.0 - alpha) / nf + alpha * dangling / nf;
        for (i, o) in out.iter_mut().enumerate() {
            let inflow: f64 = g.in_neighbors(i).iter().map(|&j| x[j] * inv_out[j]).sum();
            *o = base + alpha * inflow;
        }
    })?;
    Ok(ScoreVector::new("pagerank", x).with_param("alpha", alpha))
}

/// Hub and authority vectors (each unit L2). Iterates the shifted dilation
/// h ← A a + h/2, a ← Aᵀ h + a/2 from uniform vectors; on undirected graphs
/// this lands exactly on the principal eigenvector even when the graph is
/// bipartite.
pub fn hits(g: &Graph, cfg: &IterationConfig) -> Result<(ScoreVector, ScoreVector)> {
    let n = g.node_count();
    if g.edge_count() == 0 {
        let warn = "no edges: hub and authority scores are all zero";
        return Ok((
            ScoreVector::new("hits-hub", vec![0.0; n]).with_warning(warn),
            ScoreVector::new("hits-authority", vec![0.0; n]).with_warning(warn),
        ));
    }
    let x0 = vec![1.0 / (2.0 * n as f64).sqrt(); 2 * n];
    let x = fixed_point("hits", x0, cfg, |x, out| {
        let (h, a) = x.split_at(n);
        for i in 0..n {
            out[i] = g.out_neighbors(i).iter().map(|&j| a[j]).sum::<f64>() + 0.5 * h[i];
            out[n + i] = g.in_neighbors(i).iter().map(|&j| h[j]).sum::<f64>() + 0.5 * a[i];
        }
        l2_normalize(out);
    })?;
    let mut hub = x[..n].to_vec();
    let mut auth = x[n..].to_vec();
    l2_normalize(&mut hub);
    l2_normalize(&mut auth);
    Ok((ScoreVector::new("hits-hub", hub), ScoreVector::new("hits-authority", auth)))
}

/// Random walk on the graph plus a ground node linked both ways to every
/// node; the ground node's steady-state share is split evenly at the end.
pub fn leaderrank(g: &Graph, cfg: &IterationConfig) -> Result<ScoreVector> {
    cfg.validate()?;
    let n = g.node_count();
    if n == 0 {
        return Ok(ScoreVector::new("leaderrank", Vec::new()));
    }
    let nf = n as f64;
    let share: Vec<f64> = (0..n).map(|j| 1.0 / (g.out_degree(j) + 1) as f64).collect();
    let mut s = vec![1.0; n];
    let mut ground = 0.0;
    let mut next = vec![0.0; n];
    let mut score = vec![1.0; n];
    let mut change = f64::INFINITY;
    for _ in 0..cfg.max_iterations {
        for (i, o) in next.iter_mut().enumerate() {
            *o = ground / nf
                + g.in_neighbors(i).iter().map(|&j| s[j] * share[j]).sum::<f64>();
        }
        ground = s.iter().zip(&share).map(|(x, w)| x * w).sum();
        std::mem::swap(&mut s, &mut next);
        let mut new_score: Vec<f64> = s.iter().map(|x| x + ground / nf).collect();
        change = l1_change(&score, &new_score);
        std::mem::swap(&mut score, &mut new_score);
        if change < cfg.tolerance {
            return Ok(ScoreVector::new("leaderrank", score));
        }
    }
    Err(CentralityError::NotConverged {
        measure: "leaderrank",
        iterations: cfg.max_iterations,
        residual: change,
    })
}

/// The interaction matrix W of Hubbell's model.
#[derive(Debug, Clone, PartialEq)]
pub enum HubbellWeights {
    /// W = A · scale.
    ScaledAdjacency(f64),
    /// W = A / (N−1), so each row sums to at most 1.
    Default,
    /// Sparse entries (i, j, w_ij).
    Explicit(Vec<(usize, usize, f64)>),
}

/// Solves c = E + W c by iterating from c = E.
pub fn hubbell(
    g: &Graph,
    weights: &HubbellWeights,
    exogenous: Option<&[f64]>,
    cfg: &IterationConfig,
) -> Result<ScoreVector> {
    let n = g.node_count();
    let e: Vec<f64> = match exogenous {
        Some(e) if e.len() != n => {
            return Err(CentralityError::InvalidArgument(format!(
                "exogenous vector has length {}, graph has {n} nodes",
                e.len()
            )))
        }
        Some(e) => e.to_vec(),
        None => vec![1.0; n],
    };
    let mut rows: Vec<Vec<(usize, f64)>> = vec![Vec::new(); n];
    match weights {
        HubbellWeights::ScaledAdjacency(_) | HubbellWeights::Default => {
            let scale = match weights {
                HubbellWeights::ScaledAdjacency(s) => *s,
                _ => 1.0 / (n.max(2) - 1) as f64,
            };
            for (i, row) in rows.iter_mut().enumerate() {
                row.extend(g.out_neighbors(i).iter().map(|&j| (j, scale)));
            }
        }
        HubbellWeights::Explicit(entries) => {
            for &(i, j, w) in entries {
                if i >= n || j >= n || !w.is_finite() {
                    return Err(CentralityError::InvalidArgument(format!(
                        "invalid weight entry ({i}, {j}, {w})"
                    )));
                }
                rows[i].push((j, w));
            }
        }
    }
    if let Some(i) = rows
        .iter()
        .position(|r| r.iter().map(|&(_, w)| w).sum::<f64>() > 1.0 + 1e-12)
    {
        return Err(CentralityError::InvalidArgument(format!(
            "row {i} of the weight matrix sums to more than 1"
        )));
    }
    let x = fixed_point("hubbell", e.clone(), cfg, |x, out| {
        for (i, o) in out.iter_mut().enumerate() {
            *o = e[i] + rows[i].iter().map(|&(j, w)| w * x[j]).sum::<f64>();
        }
    })?;
    Ok(ScoreVector::new("hubbell", x))
}
