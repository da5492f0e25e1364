//! Rank agreement between two score vectors.

use crate::error::{CentralityError, Result};
use crate::score::ScoreVector;

#[derive(Debug, Clone, PartialEq)]
pub struct RankComparison {
    pub measure_a: String,
    pub measure_b: String,
    /// Kendall tau-b in [−1, 1].
    pub kendall_tau: f64,
    /// Nodes defined in both vectors.
    pub n: usize,
}

/// Kendall tau-b of two equal-length samples, O(n²) pair scan.
pub fn kendall_tau_b(x: &[f64], y: &[f64]) -> Result<f64> {
    if x.len() != y.len() {
        return Err(CentralityError::Comparison(format!(
            "samples have lengths {} and {}",
            x.len(),
            y.len()
        )));
    }
    let n = x.len();
    if n < 2 {
        return Err(CentralityError::Comparison(format!(
            "need at least 2 paired values, found {n}"
        )));
    }
    let (mut concordant, mut discordant) = (0i64, 0i64);
    let (mut tied_x, mut tied_y) = (0i64, 0i64);
    for i in 0..n {
        for j in i + 1..n {
            let dx = x[i].total_cmp(&x[j]) as i64;
            let dy = y[i].total_cmp(&y[j]) as i64;
            match (dx, dy) {
                (0, 0) => {
                    tied_x += 1;
                    tied_y += 1;
                }
                (0, _) => tied_x += 1,
                (_, 0) => tied_y += 1,
                _ if dx == dy => concordant += 1,
                _ => discordant += 1,
            }
        }
    }
    let pairs = (n * (n - 1) / 2) as i64;
    let denom = (((pairs - tied_x) as f64) * ((pairs - tied_y) as f64)).sqrt();
    if denom == 0.0 {
        return Err(CentralityError::Comparison(
            "one of the rankings is constant, so tau-b is undefined".into(),
        ));
    }
    Ok((concordant - discordant) as f64 / denom)
}

/// Kendall tau-b over the nodes both vectors define.
pub fn compare(a: &ScoreVector, b: &ScoreVector) -> Result<RankComparison> {
    if a.len() != b.len() {
        return Err(CentralityError::Comparison(format!(
            "score vectors cover {} and {} nodes",
            a.len(),
            b.len()
        )));
    }
    let (x, y): (Vec<f64>, Vec<f64>) = a
        .scores
        .iter()
        .zip(&b.scores)
        .filter_map(|(s, t)| Some((s.value()?, t.value()?)))
        .unzip();
    if x.len() < 2 {
        return Err(CentralityError::Comparison(format!(
            "only {} node(s) have defined scores under both measures",
            x.len()
        )));
    }
    Ok(RankComparison {
        measure_a: a.measure.clone(),
        measure_b: b.measure.clone(),
        kendall_tau: kendall_tau_b(&x, &y)?,
        n: x.len(),
    })
}
