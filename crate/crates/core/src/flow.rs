//! Electrical-network and random-walk measures. Edge weights are costs, so an
//! edge of weight w is a resistor of w ohms (conductance 1/w) and a walker
//! leaves a node along an edge with probability proportional to 1/w.

use nalgebra::{DMatrix, DVector};

use crate::error::{CentralityError, Result};
use crate::geodesic::connectivity_witness;
use crate::graph::queries::require_undirected;
use crate::graph::Graph;
use crate::parallel;
use crate::score::ScoreVector;

/// Largest graph for the dense solvers in this module.
pub const MAX_NODES: usize = 5000;
const RESIDUAL_TOLERANCE: f64 = 1e-9;

fn check_size(g: &Graph, measure: &'static str) -> Result<()> {
    if g.node_count() > MAX_NODES {
        return Err(CentralityError::Capacity {
            measure,
            nodes: g.node_count(),
            limit: MAX_NODES,
        });
    }
    Ok(())
}

fn require_irreducible(g: &Graph, measure: &'static str) -> Result<()> {
    match connectivity_witness(g) {
        Some((a, b)) => Err(CentralityError::Undefined {
            measure,
            reason: format!(
                "node {} cannot reach node {}, so the graph is not connected",
                g.label(a),
                g.label(b)
            ),
        }),
        None => Ok(()),
    }
}

/// Weighted Laplacian with conductances 1/w.
fn laplacian(g: &Graph) -> DMatrix<f64> {
    let n = g.node_count();
    let mut l = DMatrix::zeros(n, n);
    for (u, v, w) in g.edges() {
        let c = 1.0 / w;
        l[(u, v)] -= c;
        l[(v, u)] -= c;
        l[(u, u)] += c;
        l[(v, v)] += c;
    }
    l
}

/// Inverse of the Laplacian grounded at the last node, padded with a zero
/// row and column for it. Potentials `G b` differ from the centered
/// pseudoinverse solution `L† b` only by a constant.
pub struct LaplacianSolver {
    laplacian: DMatrix<f64>,
    grounded_inverse: DMatrix<f64>,
    fingerprint: u64,
}

impl LaplacianSolver {
    pub fn new(g: &Graph, measure: &'static str) -> Result<Self> {
        require_undirected(g, measure)?;
        check_size(g, measure)?;
        require_irreducible(g, measure)?;
        let n = g.node_count();
        let l = laplacian(g);
        let mut inv = DMatrix::zeros(n, n);
        if n > 1 {
            let reduced = l.view((0, 0), (n - 1, n - 1)).into_owned();
            let chol = reduced.cholesky().ok_or_else(|| CentralityError::Undefined {
                measure,
                reason: "grounded Laplacian is not positive definite".into(),
            })?;
            inv.view_mut((0, 0), (n - 1, n - 1)).copy_from(&chol.inverse());
        }
        Ok(LaplacianSolver {
            laplacian: l,
            grounded_inverse: inv,
            fingerprint: g.fingerprint(),
        })
    }

    pub fn node_count(&self) -> usize {
        self.laplacian.nrows()
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    /// Centered potentials x with L x = b; `b` must sum to zero.
    pub fn solve(&self, b: &[f64]) -> Result<Vec<f64>> {
        let n = self.node_count();
        if b.len() != n {
            return Err(CentralityError::InvalidArgument(format!(
                "right-hand side has {} entries for {n} nodes",
                b.len()
            )));
        }
        let bv = DVector::from_column_slice(b);
        let scale = bv.iter().map(|x| x.abs()).sum::<f64>().max(1.0);
        if bv.sum().abs() > 1e-12 * scale {
            return Err(CentralityError::InvalidArgument(
                "right-hand side must sum to zero".into(),
            ));
        }
        let mut x = &self.grounded_inverse * &bv;
        let mean = x.mean();
        x.add_scalar_mut(-mean);
        let residual = (&self.laplacian * &x - &bv).norm();
        if residual > RESIDUAL_TOLERANCE * bv.norm().max(f64::MIN_POSITIVE) {
            return Err(CentralityError::NotConverged {
                measure: "laplacian-solve",
                iterations: 1,
                residual,
            });
        }
        Ok(x.as_slice().to_vec())
    }

    /// Ω_ij = G_ii + G_jj − 2 G_ij.
    pub fn effective_resistance(&self, i: usize, j: usize) -> f64 {
        let g = &self.grounded_inverse;
        (g[(i, i)] + g[(j, j)] - 2.0 * g[(i, j)]).max(0.0)
    }

    fn grounded(&self, i: usize, j: usize) -> f64 {
        self.grounded_inverse[(i, j)]
    }
}

/// Effective resistance between every pair.
pub fn resistance_matrix(g: &Graph) -> Result<Vec<Vec<f64>>> {
    let solver = LaplacianSolver::new(g, "effective-resistance")?;
    let n = g.node_count();
    Ok((0..n)
        .map(|i| (0..n).map(|j| solver.effective_resistance(i, j)).collect())
        .collect())
}

/// (N−1) / Σ_{j≠i} Ω_ij.
pub fn current_flow_closeness(g: &Graph) -> Result<ScoreVector> {
    const MEASURE: &str = "current-flow-closeness";
    let n = g.node_count();
    if n < 2 {
        return Err(CentralityError::Undefined {
            measure: MEASURE,
            reason: "needs at least two nodes".into(),
        });
    }
    let solver = LaplacianSolver::new(g, MEASURE)?;
    let v = parallel::map_nodes(n, || (), |_, i| {
        let total: f64 = (0..n).map(|j| solver.effective_resistance(i, j)).sum();
        (n - 1) as f64 / total
    });
    Ok(ScoreVector::new(MEASURE, v))
}

/// Σ_{s<t} |x_s − x_t|, via sorting.
fn pairwise_spread(mut x: Vec<f64>) -> f64 {
    x.sort_unstable_by(f64::total_cmp);
    let n = x.len() as f64;
    x.iter()
        .enumerate()
        .map(|(k, v)| (2.0 * k as f64 - n + 1.0) * v)
        .sum()
}

/// Throughflow summed over ordered pairs (s, t), s ≠ t, divided by N(N−1).
/// A node that is the source or target of a pair counts throughflow 1.
pub fn current_flow_betweenness(g: &Graph) -> Result<ScoreVector> {
    const MEASURE: &str = "current-flow-betweenness";
    let n = g.node_count();
    if n < 2 {
        return Err(CentralityError::Undefined {
            measure: MEASURE,
            reason: "needs at least two nodes".into(),
        });
    }
    let solver = LaplacianSolver::new(g, MEASURE)?;
    // For edge (v, w) the current under injection (s, t) is F(s) − F(t)
    // with F(s) = c (G_vs − G_ws); summing |F(s) − F(t)| over all s < t
    // covers every pair in one sort.
    let edges: Vec<(usize, usize, f64)> = g.edges().collect();
    let per_edge = parallel::map_nodes(edges.len(), || (), |_, e| {
        let (v, w, weight) = edges[e];
        let c = 1.0 / weight;
        pairwise_spread(
            (0..n)
                .map(|s| c * (solver.grounded(v, s) - solver.grounded(w, s)))
                .collect(),
        )
    });
    let mut all_pairs = vec![0.0; n];
    for (&(v, w, _), &spread) in edges.iter().zip(&per_edge) {
        all_pairs[v] += 0.5 * spread;
        all_pairs[w] += 0.5 * spread;
    }
    // As source or target of one of its N−1 unordered pairs, a node sees
    // ½ Σ|I| = ½; remove those, double for ordering, add the endpoint credit.
    let endpoint_pairs = (n - 1) as f64;
    let norm = (n * (n - 1)) as f64;
    let v = all_pairs
        .iter()
        .map(|&t| {
            let interior = (t - 0.5 * endpoint_pairs).max(0.0);
            (2.0 * interior + 2.0 * endpoint_pairs) / norm
        })
        .collect();
    Ok(ScoreVector::new(MEASURE, v))
}

/// Row-stochastic transition matrix with probabilities proportional to 1/w.
fn transition_matrix(g: &Graph) -> DMatrix<f64> {
    let n = g.node_count();
    let mut p = DMatrix::zeros(n, n);
    for i in 0..n {
        let row: f64 = g.out_weights(i).iter().map(|w| 1.0 / w).sum();
        for (&j, &w) in g.out_neighbors(i).iter().zip(g.out_weights(i)) {
            p[(i, j)] = 1.0 / w / row;
        }
    }
    p
}

/// Mean first-passage times, `m[(j, i)]` being the expected steps from j to
/// first reach i, via the fundamental matrix Z = (I − P + 1πᵀ)⁻¹:
/// m_ji = (Z_ii − Z_ji) / π_i.
pub fn mean_first_passage(g: &Graph) -> Result<DMatrix<f64>> {
    const MEASURE: &str = "markov";
    check_size(g, MEASURE)?;
    require_irreducible(g, MEASURE)?;
    let n = g.node_count();
    let p = transition_matrix(g);
    let singular = || CentralityError::Undefined {
        measure: MEASURE,
        reason: "transition system is singular".into(),
    };
    // Stationary distribution: πᵀ(I − P) = 0 with one equation replaced by Σπ = 1.
    let mut a = DMatrix::identity(n, n) - p.transpose();
    a.row_mut(n - 1).fill(1.0);
    let mut rhs = DVector::zeros(n);
    rhs[n - 1] = 1.0;
    let pi = a.lu().solve(&rhs).ok_or_else(singular)?;
    let ones = DVector::from_element(n, 1.0);
    let z = (DMatrix::identity(n, n) - &p + &ones * pi.transpose())
        .try_inverse()
        .ok_or_else(singular)?;
    let mut m = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                m[(j, i)] = (z[(i, i)] - z[(j, i)]) / pi[i];
            }
        }
    }
    Ok(m)
}

/// (N−1) / Σ_{j≠i} m_ji: the inverse mean first-passage time into i.
pub fn markov_centrality(g: &Graph) -> Result<ScoreVector> {
    let n = g.node_count();
    if n < 2 {
        return Err(CentralityError::Undefined {
            measure: "markov",
            reason: "needs at least two nodes".into(),
        });
    }
    let m = mean_first_passage(g)?;
    let v = (0..n)
        .map(|i| (n - 1) as f64 / m.column(i).sum())
        .collect();
    Ok(ScoreVector::new("markov", v))
}
