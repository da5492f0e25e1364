use std::collections::BTreeMap;
use std::fmt::Display;

/// One node's score.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Score {
    Value(f64),
    /// The measure has no value for this node (e.g. leverage of an isolated node).
    Undefined,
    /// Removing the node disconnects the graph (closeness vitality's -inf).
    Disconnects,
}

impl Score {
    pub fn value(self) -> Option<f64> {
        match self {
            Score::Value(v) => Some(v),
            _ => None,
        }
    }

    /// Numeric view: `NaN` for undefined, `-inf` for the disconnect marker.
    pub fn as_f64(self) -> f64 {
        match self {
            Score::Value(v) => v,
            Score::Undefined => f64::NAN,
            Score::Disconnects => f64::NEG_INFINITY,
        }
    }
}

/// Per-node scores produced by a measure, along with the parameters used.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreVector {
    pub measure: String,
    pub params: BTreeMap<String, String>,
    pub scores: Vec<Score>,
    pub warnings: Vec<String>,
}

impl ScoreVector {
    pub fn new(measure: impl Into<String>, values: Vec<f64>) -> Self {
        debug_assert!(values.iter().all(|v| v.is_finite()), "non-finite score");
        Self::from_scores(measure, values.into_iter().map(Score::Value).collect())
    }

    pub fn from_scores(measure: impl Into<String>, scores: Vec<Score>) -> Self {
        ScoreVector {
            measure: measure.into(),
            params: BTreeMap::new(),
            scores,
            warnings: Vec::new(),
        }
    }

    pub fn with_param(mut self, key: &str, value: impl Display) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn with_warning(mut self, warning: impl Into<String>) -> Self {
        self.warn(warning);
        self
    }

    pub fn warn(&mut self, warning: impl Into<String>) {
        let w = warning.into();
        if !self.warnings.contains(&w) {
            self.warnings.push(w);
        }
    }

    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }

    pub fn value(&self, i: usize) -> Option<f64> {
        self.scores[i].value()
    }

    /// Numeric copy of all scores; see [`Score::as_f64`] for the markers.
    pub fn values(&self) -> Vec<f64> {
        self.scores.iter().map(|s| s.as_f64()).collect()
    }

    /// All values, or `None` if any entry carries a marker.
    pub fn defined_values(&self) -> Option<Vec<f64>> {
        self.scores.iter().map(|s| s.value()).collect()
    }

    pub fn map_values(mut self, f: impl Fn(f64) -> f64) -> Self {
        for s in &mut self.scores {
            if let Score::Value(v) = s {
                *v = f(*v);
            }
        }
        self
    }
}
