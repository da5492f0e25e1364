//! CSV and JSON serialization of measure outcomes.

use serde_json::{json, Map, Value};

use crate::decomposition::Decomposition;
use crate::error::{CentralityError, Result};
use crate::graph::Graph;
use crate::registry::Outcome;
use crate::score::{Score, ScoreVector};
use crate::seeds::SeedSet;

pub const UNDEFINED: &str = "undefined";
pub const DISCONNECTS: &str = "disconnects";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

/// Fixed six-decimal rendering; negative zero prints as zero.
pub fn format_value(v: f64) -> String {
    let s = format!("{v:.6}");
    if s.strip_prefix('-').is_some_and(|rest| rest.bytes().all(|b| b == b'0' || b == b'.')) {
        s[1..].to_string()
    } else {
        s
    }
}

fn format_score(s: Score) -> String {
    match s {
        Score::Value(v) => format_value(v),
        Score::Undefined => UNDEFINED.to_string(),
        Score::Disconnects => DISCONNECTS.to_string(),
    }
}

fn json_score(s: Score) -> Value {
    match s {
        Score::Value(v) => json!(v),
        Score::Undefined => json!(UNDEFINED),
        Score::Disconnects => json!(DISCONNECTS),
    }
}

pub fn scores_csv(g: &Graph, sv: &ScoreVector) -> String {
    let mut out = String::from("node,score\n");
    for (i, s) in sv.scores.iter().enumerate() {
        out.push_str(&format!("{},{}\n", g.label(i), format_score(*s)));
    }
    out
}

pub fn seeds_csv(g: &Graph, s: &SeedSet) -> String {
    let mut out = String::from("rank,node,score\n");
    for (r, &(i, v)) in s.seeds.iter().enumerate() {
        out.push_str(&format!("{},{},{}\n", r + 1, g.label(i), format_value(v)));
    }
    out
}

pub fn decomposition_csv(g: &Graph, d: &Decomposition) -> String {
    let mut out = String::from("node,core,layer\n");
    for i in 0..g.node_count() {
        out.push_str(&format!("{},{},{}\n", g.label(i), d.core[i], d.layer[i]));
    }
    out
}

fn params_json(params: &std::collections::BTreeMap<String, String>) -> Value {
    Value::Object(params.iter().map(|(k, v)| (k.clone(), json!(v))).collect::<Map<_, _>>())
}

pub fn outcome_json(g: &Graph, measure: &str, outcome: &Outcome) -> Value {
    match outcome {
        Outcome::Scores(sv) => json!({
            "measure": measure,
            "params": params_json(&sv.params),
            "scores": sv.scores.iter().enumerate()
                .map(|(i, s)| json!({"node": g.label(i), "score": json_score(*s)}))
                .collect::<Vec<_>>(),
            "warnings": sv.warnings,
        }),
        Outcome::Seeds(s) => json!({
            "measure": measure,
            "params": params_json(&s.params),
            "seeds": s.seeds.iter().enumerate()
                .map(|(r, &(i, v))| json!({"rank": r + 1, "node": g.label(i), "score": v}))
                .collect::<Vec<_>>(),
            "warnings": s.warnings,
        }),
        Outcome::Decomposition(d) => json!({
            "measure": measure,
            "params": {},
            "scores": (0..g.node_count())
                .map(|i| json!({"node": g.label(i), "core": d.core[i], "layer": d.layer[i]}))
                .collect::<Vec<_>>(),
        }),
    }
}

pub fn render(g: &Graph, measure: &str, outcome: &Outcome, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&outcome_json(g, measure, outcome))
                .expect("JSON values always serialize");
            s.push('\n');
            s
        }
        Format::Csv => match outcome {
            Outcome::Scores(sv) => scores_csv(g, sv),
            Outcome::Seeds(s) => seeds_csv(g, s),
            Outcome::Decomposition(d) => decomposition_csv(g, d),
        },
    }
}

/// Reads a `node,score` file back into labelled scores.
pub fn parse_scores_csv(text: &str) -> Result<Vec<(String, Score)>> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, "node,score")) => {}
        _ => {
            return Err(CentralityError::Parse {
                line: 1,
                message: "expected header node,score".into(),
            })
        }
    }
    lines
        .filter(|(_, l)| !l.is_empty())
        .map(|(k, l)| {
            let (node, value) = l.rsplit_once(',').ok_or_else(|| CentralityError::Parse {
                line: k + 1,
                message: "expected node,score".into(),
            })?;
            let score = match value {
                UNDEFINED => Score::Undefined,
                DISCONNECTS => Score::Disconnects,
                v => Score::Value(v.parse().map_err(|_| CentralityError::Parse {
                    line: k + 1,
                    message: format!("invalid score {v:?}"),
                })?),
            };
            Ok((node.to_string(), score))
        })
        .collect()
}
