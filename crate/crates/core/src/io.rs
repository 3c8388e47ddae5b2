//! Canonical JSON documents.
//!
//! ```json
//! {"r": 3, "vertices": ["a", "b", "c", "d"], "edges": [["a", "b", "c"]], "weights": ["3/2"]}
//! ```
//!
//! `weights` is optional and parallel to `edges`. Unknown keys are rejected.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{Hyperedge, Hypergraph, WeightedHypergraph};
use crate::rational::{format_weight, parse_weight};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub r: usize,
    #[serde(default)]
    pub vertices: Vec<String>,
    pub edges: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<String>>,
}

/// A parsed document: plain or weighted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Parsed {
    Plain(Hypergraph),
    Weighted(WeightedHypergraph),
}

impl Parsed {
    pub fn hypergraph(&self) -> &Hypergraph {
        match self {
            Parsed::Plain(h) => h,
            Parsed::Weighted(w) => w.base(),
        }
    }
}

fn malformed(location: impl Into<String>, message: impl ToString) -> Error {
    Error::MalformedInput {
        location: location.into(),
        message: message.to_string(),
    }
}

fn relocate(e: Error) -> Error {
    match e {
        Error::NonUniformEdge { index, .. } | Error::DuplicateVertexInEdge { index, .. } => {
            malformed(format!("edges[{index}]"), e)
        }
        Error::InvalidLabel(_) => malformed("vertices/edges", e),
        Error::EmptyVertexSet => malformed("vertices", e),
        Error::InvalidUniformity(_) => malformed("r", e),
        other => malformed("document", other),
    }
}

/// Parses a document, weighted or not.
pub fn parse_document(text: &str) -> Result<Parsed> {
    let doc: Document = serde_json::from_str(text)
        .map_err(|e| malformed(format!("line {} column {}", e.line(), e.column()), e))?;
    let h = Hypergraph::build(doc.r, &doc.vertices, &doc.edges).map_err(relocate)?;
    let Some(weights) = doc.weights else {
        return Ok(Parsed::Plain(h));
    };
    if weights.len() != doc.edges.len() {
        return Err(malformed(
            "weights",
            format!("{} weights for {} edges", weights.len(), doc.edges.len()),
        ));
    }
    let mut pairs = Vec::with_capacity(weights.len());
    for (i, (e, w)) in doc.edges.iter().zip(&weights).enumerate() {
        let w = parse_weight(w).map_err(|m| malformed(format!("weights[{i}]"), m))?;
        let e = Hyperedge::new(e).map_err(relocate)?;
        pairs.push((e, w));
    }
    WeightedHypergraph::new(h, pairs)
        .map(Parsed::Weighted)
        .map_err(|e| malformed("weights", e))
}

/// Parses an unweighted document; a `weights` key is accepted and ignored.
pub fn parse(text: &str) -> Result<Hypergraph> {
    Ok(parse_document(text)?.hypergraph().clone())
}

pub fn parse_weighted(text: &str) -> Result<WeightedHypergraph> {
    match parse_document(text)? {
        Parsed::Weighted(w) => Ok(w),
        Parsed::Plain(_) => Err(malformed("weights", "document has no weights")),
    }
}

pub fn to_document(h: &Hypergraph) -> Document {
    Document {
        r: h.r(),
        vertices: h.vertices().iter().map(|v| v.to_string()).collect(),
        edges: h
            .hyperedges()
            .iter()
            .map(|e| e.members().iter().map(|v| v.to_string()).collect())
            .collect(),
        weights: None,
    }
}

pub fn to_weighted_document(w: &WeightedHypergraph) -> Document {
    let mut doc = to_document(w.base());
    doc.weights = Some(w.weights().iter().map(format_weight).collect());
    doc
}

/// Canonical single-document JSON, newline terminated.
pub fn serialize(h: &Hypergraph) -> String {
    render(&to_document(h))
}

pub fn serialize_weighted(w: &WeightedHypergraph) -> String {
    render(&to_weighted_document(w))
}

fn render(doc: &Document) -> String {
    let mut s = serde_json::to_string(doc).expect("documents always serialize");
    s.push('\n');
    s
}
