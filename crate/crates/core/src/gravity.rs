//! Gravity-style scores: Σ m_i m_j / d_ij² over a hop-distance neighborhood.

use crate::decomposition::kshell;
use crate::error::{CentralityError, Result};
use crate::geodesic::connectivity_witness;
use crate::graph::queries::{hop_distances, require_undirected};
use crate::graph::Graph;
use crate::parallel;
use crate::score::ScoreVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mass {
    Degree,
    KShell,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Radius {
    Hops(usize),
    /// Every reachable node.
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GravityConfig {
    /// Mass of the focal node.
    pub mass: Mass,
    /// Mass of the other node; `None` reuses `mass`.
    pub neighbor_mass: Option<Mass>,
    pub radius: Radius,
}

fn masses(g: &Graph, m: Mass) -> Result<Vec<f64>> {
    Ok(match m {
        Mass::Degree => (0..g.node_count()).map(|i| g.degree(i) as f64).collect(),
        Mass::KShell => kshell(g)?.core.iter().map(|&c| c as f64).collect(),
    })
}

/// Σ_{j: 1 ≤ d_ij ≤ r} m_i m'_j / d_ij², with hop distances. Unreachable
/// pairs contribute nothing.
pub fn gravity(g: &Graph, cfg: &GravityConfig, measure: &str) -> Result<ScoreVector> {
    require_undirected(g, "gravity")?;
    let limit = match cfg.radius {
        Radius::Hops(0) => {
            return Err(CentralityError::InvalidArgument("radius must be at least 1".into()))
        }
        Radius::Hops(r) => r,
        Radius::Full => usize::MAX,
    };
    let own = masses(g, cfg.mass)?;
    let other = match cfg.neighbor_mass {
        Some(m) if m != cfg.mass => masses(g, m)?,
        _ => own.clone(),
    };
    let v = parallel::map_nodes(g.node_count(), || (), |_, i| {
        let dist = hop_distances(g, i, limit);
        dist.iter()
            .enumerate()
            .filter(|&(j, &d)| j != i && d != usize::MAX)
            .map(|(j, &d)| own[i] * other[j] / (d * d) as f64)
            .sum()
    });
    let mut sv = ScoreVector::new(measure, v);
    if let Radius::Hops(r) = cfg.radius {
        sv = sv.with_param("radius", r);
    }
    if cfg.radius == Radius::Full && connectivity_witness(g).is_some() {
        sv.warn("graph is disconnected: unreachable pairs contribute 0");
    }
    Ok(sv)
}

/// Degree masses over all node pairs.
pub fn gravity_model(g: &Graph) -> Result<ScoreVector> {
    let cfg = GravityConfig {
        mass: Mass::Degree,
        neighbor_mass: None,
        radius: Radius::Full,
    };
    gravity(g, &cfg, "gravity-model")
}

/// Degree masses within `radius` hops.
pub fn local_gravity(g: &Graph, radius: usize) -> Result<ScoreVector> {
    let cfg = GravityConfig {
        mass: Mass::Degree,
        neighbor_mass: None,
        radius: Radius::Hops(radius),
    };
    gravity(g, &cfg, "local-gravity")
}

/// k-shell masses within `radius` hops.
pub fn gravity_centrality(g: &Graph, radius: usize) -> Result<ScoreVector> {
    let cfg = GravityConfig {
        mass: Mass::KShell,
        neighbor_mass: None,
        radius: Radius::Hops(radius),
    };
    gravity(g, &cfg, "gravity-centrality")
}

/// k-shell of the focal node times neighbor degrees, over direct neighbors.
pub fn mixed_gravitational(g: &Graph) -> Result<ScoreVector> {
    let cfg = GravityConfig {
        mass: Mass::KShell,
        neighbor_mass: Some(Mass::Degree),
        radius: Radius::Hops(1),
    };
    gravity(g, &cfg, "mixed-gravitational")
}
