//! Reading graphs and formatting reports.

use std::fs;
use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context, Result};
use nwt_core::{parse_graph, serialize_graph, Weight, WeightedGraph};
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Graph file layout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Graph,
    Json,
}

/// JSON form of a graph: weights by vertex id, then edges as pairs.
#[derive(Debug, Serialize, Deserialize)]
pub struct GraphDoc {
    pub n: usize,
    pub m: usize,
    pub weights: Vec<Value>,
    pub edges: Vec<[usize; 2]>,
}

/// Whole input as text; `None` or `-` means standard input.
pub fn read_text(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) if p != Path::new("-") => {
            fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))
        }
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).context("cannot read standard input")?;
            Ok(s)
        }
    }
}

pub fn load_graph<W: Weight>(path: Option<&Path>, format: Format) -> Result<WeightedGraph<W>> {
    let text = read_text(path)?;
    match format {
        Format::Graph => Ok(parse_graph(&text)?),
        Format::Json => from_json(&text),
    }
}

fn from_json<W: Weight>(text: &str) -> Result<WeightedGraph<W>> {
    let doc: GraphDoc = serde_json::from_str(text).context("malformed JSON graph")?;
    if doc.weights.len() != doc.n {
        bail!("JSON graph declares {} vertices but lists {} weights", doc.n, doc.weights.len());
    }
    if doc.edges.len() != doc.m {
        bail!("JSON graph declares {} edges but lists {}", doc.m, doc.edges.len());
    }
    let weights = doc
        .weights
        .iter()
        .enumerate()
        .map(|(v, w)| {
            let token = match w {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            W::parse_token(&token).with_context(|| format!("weight of vertex {v}"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(WeightedGraph::new(weights, doc.edges.iter().map(|e| (e[0], e[1])))?)
}

pub fn render_graph<W: Weight>(g: &WeightedGraph<W>, format: Format) -> Result<String> {
    Ok(match format {
        Format::Graph => serialize_graph(g),
        Format::Json => {
            let doc = GraphDoc {
                n: g.n(),
                m: g.m(),
                weights: g.weights().iter().map(|w| number_or_string(&w.to_string())).collect(),
                edges: g.edges().map(|(u, v)| [u, v]).collect(),
            };
            serde_json::to_string(&doc)? + "\n"
        }
    })
}

/// Integers that fit in 64 bits become JSON numbers, anything else a string.
pub fn number_or_string(text: &str) -> Value {
    if let Ok(v) = text.parse::<i64>() {
        Value::from(v)
    } else if let Ok(v) = text.parse::<u64>() {
        Value::from(v)
    } else {
        Value::String(text.to_string())
    }
}

pub fn parse_target<W: Weight>(token: &str) -> Result<W> {
    W::parse_token(token).with_context(|| format!("bad target `{token}`"))
}
