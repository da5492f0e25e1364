//! Walk-counting measures from the dense symmetric eigendecomposition of A.

use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{CentralityError, Result};
use crate::graph::queries::require_undirected;
use crate::graph::Graph;
use crate::score::ScoreVector;

/// Largest graph the dense backend accepts.
pub const MAX_NODES: usize = 5000;

/// Eigenpairs of the adjacency matrix, eigenvalues in descending order.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    /// Column `j` is the unit eigenvector for `eigenvalues[j]`.
    pub eigenvectors: DMatrix<f64>,
    /// [`Graph::fingerprint`] of the decomposed graph.
    pub fingerprint: u64,
}

impl Spectrum {
    pub fn of(g: &Graph, measure: &'static str) -> Result<Spectrum> {
        require_undirected(g, measure)?;
        let n = g.node_count();
        if n > MAX_NODES {
            return Err(CentralityError::Capacity {
                measure,
                nodes: n,
                limit: MAX_NODES,
            });
        }
        let mut a = DMatrix::<f64>::zeros(n, n);
        for (u, v, _) in g.edges() {
            a[(u, v)] = 1.0;
            a[(v, u)] = 1.0;
        }
        let eig = SymmetricEigen::new(a);
        let mut idx: Vec<usize> = (0..n).collect();
        idx.sort_by(|&x, &y| eig.eigenvalues[y].total_cmp(&eig.eigenvalues[x]));
        let eigenvalues = idx.iter().map(|&k| eig.eigenvalues[k]).collect();
        let eigenvectors = DMatrix::from_fn(n, n, |i, j| eig.eigenvectors[(i, idx[j])]);
        Ok(Spectrum {
            eigenvalues,
            eigenvectors,
            fingerprint: g.fingerprint(),
        })
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn lambda_max(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }

    /// c(i) = Σ_j v_j(i)² f(λ_j).
    pub fn diagonal(&self, f: impl Fn(f64) -> f64) -> Vec<f64> {
        let fl: Vec<f64> = self.eigenvalues.iter().map(|&l| f(l)).collect();
        (0..self.len())
            .map(|i| {
                fl.iter()
                    .enumerate()
                    .map(|(j, w)| self.eigenvectors[(i, j)].powi(2) * w)
                    .sum()
            })
            .collect()
    }

    /// Row sums of V f(Λ) Vᵀ.
    pub fn row_sums(&self, f: impl Fn(f64) -> f64) -> Vec<f64> {
        let n = self.len();
        let col_sums: Vec<f64> = (0..n).map(|j| self.eigenvectors.column(j).sum()).collect();
        let weight: Vec<f64> = (0..n).map(|j| f(self.eigenvalues[j]) * col_sums[j]).collect();
        (0..n)
            .map(|i| (0..n).map(|j| self.eigenvectors[(i, j)] * weight[j]).sum())
            .collect()
    }
}

fn finite(measure: &'static str, v: Vec<f64>) -> Result<ScoreVector> {
    if v.iter().all(|x| x.is_finite()) {
        Ok(ScoreVector::new(measure, v))
    } else {
        Err(CentralityError::Undefined {
            measure,
            reason: "spectral weights overflow double precision".into(),
        })
    }
}

/// Σ_j v_j(i)² e^{λ_j}: weighted count of closed walks at i.
pub fn subgraph_centrality(g: &Graph) -> Result<ScoreVector> {
    finite("subgraph", Spectrum::of(g, "subgraph")?.diagonal(f64::exp))
}

/// Closed walks of odd length: Σ_j v_j(i)² sinh(λ_j).
pub fn odd_subgraph(g: &Graph) -> Result<ScoreVector> {
    finite("odd-subgraph", Spectrum::of(g, "odd-subgraph")?.diagonal(f64::sinh))
}

/// Closed walks of even length: Σ_j v_j(i)² cosh(λ_j).
pub fn even_subgraph(g: &Graph) -> Result<ScoreVector> {
    finite("even-subgraph", Spectrum::of(g, "even-subgraph")?.diagonal(f64::cosh))
}

/// Row sums of e^A.
pub fn total_communicability(g: &Graph) -> Result<ScoreVector> {
    finite(
        "total-communicability",
        Spectrum::of(g, "total-communicability")?.row_sums(f64::exp),
    )
}

/// Diagonal of (I − sA)^{-1}; `s` defaults to 1/(N−1) and must lie in (0, 1/λ_max).
pub fn resolvent_centrality(g: &Graph, s: Option<f64>) -> Result<ScoreVector> {
    let spec = Spectrum::of(g, "resolvent")?;
    let n = g.node_count();
    let s = s.unwrap_or(1.0 / n.saturating_sub(1).max(1) as f64);
    let lambda = spec.lambda_max();
    if !(s > 0.0 && s.is_finite() && s * lambda < 1.0) {
        return Err(CentralityError::InvalidArgument(format!(
            "resolvent parameter s = {s} must lie in (0, 1/lambda_max) with lambda_max = {lambda}"
        )));
    }
    let v = spec.diagonal(|l| 1.0 / (1.0 - s * l));
    Ok(ScoreVector::new("resolvent", v).with_param("s", s))
}

/// Share of even closed walks: globally Σ cosh λ / Σ e^λ, and per node
/// even(i) / subgraph(i).
pub fn bipartivity(g: &Graph) -> Result<(f64, ScoreVector)> {
    let spec = Spectrum::of(g, "bipartivity")?;
    let even = spec.diagonal(f64::cosh);
    let all = spec.diagonal(f64::exp);
    let global = spec.eigenvalues.iter().map(|l| l.cosh()).sum::<f64>()
        / spec.eigenvalues.iter().map(|l| l.exp()).sum::<f64>();
    let per_node = even.iter().zip(&all).map(|(e, a)| e / a).collect();
    let sv = finite("bipartivity", per_node)?.with_param("global", global);
    Ok((global, sv))
}
