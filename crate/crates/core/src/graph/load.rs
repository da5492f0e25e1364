//! Whitespace-separated edge lists: `u v` or `u v w`, `#` starts a comment line.

use std::path::Path;

use super::{Graph, GraphBuilder};
use crate::error::{CentralityError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LoopPolicy {
    /// Drop self-loops and report them as a warning.
    #[default]
    Drop,
    /// Fail on the first self-loop.
    Reject,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct LoadOptions {
    pub directed: bool,
    pub weighted: bool,
    /// Treat weights as strengths and use their reciprocals as costs.
    pub invert_weights: bool,
    pub loops: LoopPolicy,
}

#[derive(Debug, Clone)]
pub struct Loaded {
    pub graph: Graph,
    pub warnings: Vec<String>,
}

pub fn load_graph(path: impl AsRef<Path>, opts: &LoadOptions) -> Result<Loaded> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| CentralityError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_edge_list(&text, opts)
}

pub fn parse_edge_list(text: &str, opts: &LoadOptions) -> Result<Loaded> {
    let mut b = GraphBuilder::new(opts.directed, opts.weighted);
    let mut warnings = Vec::new();
    let mut ignored_weights = false;

    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let (u, v, w) = match tokens.as_slice() {
            [u, v] => (*u, *v, None),
            [u, v, w] => (*u, *v, Some(*w)),
            _ => {
                return Err(CentralityError::Parse {
                    line,
                    message: format!("expected 2 or 3 fields, found {}", tokens.len()),
                })
            }
        };
        let weight = match w {
            Some(tok) => {
                let w: f64 = tok.parse().map_err(|_| CentralityError::Parse {
                    line,
                    message: format!("invalid weight {tok:?}"),
                })?;
                if !(w > 0.0 && w.is_finite()) {
                    return Err(CentralityError::NonPositiveWeight { line, weight: w });
                }
                if !opts.weighted {
                    ignored_weights = true;
                }
                w
            }
            None => 1.0,
        };
        if u == v && opts.loops == LoopPolicy::Reject {
            return Err(CentralityError::SelfLoop {
                line,
                node: u.to_string(),
            });
        }
        let weight = if opts.weighted { weight } else { 1.0 };
        b.add_labeled_edge(u, v, weight)?;
    }

    if opts.invert_weights {
        b.invert_weights();
    }
    let (graph, loops) = b.build();
    if loops > 0 {
        warnings.push(format!("dropped {loops} self-loop(s)"));
    }
    if ignored_weights {
        warnings.push("weight column ignored; pass --weighted to use it".to_string());
    }
    Ok(Loaded { graph, warnings })
}
