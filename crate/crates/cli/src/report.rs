use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use strongedge::graph::planar_embed;
use strongedge::pipeline::corollary1_applies;
use strongedge::strong::{known_bound, trivial_lower_bound};
use strongedge::{Girth, Graph};

use crate::Input;

pub fn sha256(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

/// Girth as a JSON number, or the string `"acyclic"`.
pub fn girth_value(g: Girth) -> Value {
    match g {
        Girth::Finite(n) => json!(n),
        Girth::Acyclic => json!("acyclic"),
    }
}

/// Planar graphs with maximum degree at least 3 have a table bound.
fn table_bound(g: &Graph, planar: bool) -> Option<usize> {
    planar.then(|| known_bound(g.max_degree(), g.girth()).ok()).flatten()
}

pub fn analysis(g: &Graph) -> Value {
    let planar = planar_embed(g).ok();
    let delta = g.max_degree();
    json!({
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "delta": delta,
        "girth": girth_value(g.girth()),
        "planar": planar.is_some(),
        "connected": g.is_connected(),
        "faces": planar.as_ref().map(|e| e.faces().len()),
        "trivial_lower_bound": trivial_lower_bound(g),
        "known_bound": table_bound(g, planar.is_some()),
        "class1_expected": planar.is_some() && corollary1_applies(delta, g.girth()),
    })
}

/// Summary of one colouring run.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub input_hash: String,
    pub delta: usize,
    pub girth: Value,
    pub planar: bool,
    pub algorithm: String,
    pub colours_used: usize,
    /// Bound the algorithm guarantees on this input.
    pub bound: usize,
    /// Table bound for planar graphs of this maximum degree and girth.
    pub known_bound: Option<usize>,
    pub verified: bool,
    pub elapsed_seconds: f64,
}

impl RunReport {
    pub fn new(
        command: Vec<String>,
        input: &Input,
        algorithm: &str,
        colours_used: usize,
        bound: usize,
        verified: bool,
        start: Instant,
    ) -> Self {
        let g = &input.graph;
        let planar = planar_embed(g).is_ok();
        RunReport {
            command,
            input_hash: input.hash.clone(),
            delta: g.max_degree(),
            girth: girth_value(g.girth()),
            planar,
            algorithm: algorithm.to_string(),
            colours_used,
            bound,
            known_bound: table_bound(g, planar),
            verified,
            elapsed_seconds: start.elapsed().as_secs_f64(),
        }
    }
}
