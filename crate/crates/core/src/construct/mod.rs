//! Scenes realizing given graphs. Every constructor checks its output by
//! recomputing the visibility graph; an unverified scene is never returned.

mod drawing;
mod hooks;
mod tree;

pub use drawing::{
    parse_drawing, drawing_to_json, split_cut_vertices, tutte_drawing, validate_drawing, DrawingReport, DrawingViolation,
    PlaneDrawing,
};
pub use hooks::{construct_triangulated, ConstructionParams};
pub use tree::{construct_k11n, construct_tree};

use std::collections::BTreeSet;

use crate::geometry::{validate_scene, Scene, ValidationReport};
use crate::graph::{EdgeDiff, Graph};
use crate::visibility::{compute_visibility_graph, VisibilityError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructError {
    #[error("invalid drawing:\n{0}")]
    InvalidDrawing(DrawingReport),
    #[error("round trip failed after all retries:\n{0}")]
    VerificationFailed(EdgeDiff),
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph is disconnected")]
    DisconnectedInput,
    #[error("graph vertices and scene regions differ: only in graph {only_graph:?}, only in scene {only_scene:?}")]
    NameMismatch { only_graph: Vec<String>, only_scene: Vec<String> },
    #[error("invalid scene:\n{0}")]
    InvalidScene(ValidationReport),
    #[error("construction parameters must be positive")]
    InvalidParams,
    #[error("hook parameters never fit below half the local feature size within the retry budget")]
    NoFit,
}

impl From<VisibilityError> for ConstructError {
    fn from(e: VisibilityError) -> Self {
        match e {
            VisibilityError::InvalidScene(r) => ConstructError::InvalidScene(r),
            other => panic!("unexpected visibility failure: {other}"),
        }
    }
}

/// Labelled difference between `g` and the visibility graph of `s`.
pub fn verify_roundtrip(g: &Graph, s: &Scene) -> Result<EdgeDiff, ConstructError> {
    let gn: BTreeSet<&str> = g.names().iter().map(String::as_str).collect();
    let sn: BTreeSet<&str> = s.regions.iter().map(|r| r.name.as_str()).collect();
    if gn != sn {
        return Err(ConstructError::NameMismatch {
            only_graph: gn.difference(&sn).map(|s| s.to_string()).collect(),
            only_scene: sn.difference(&gn).map(|s| s.to_string()).collect(),
        });
    }
    let report = validate_scene(s);
    if !report.is_valid() {
        return Err(ConstructError::InvalidScene(report));
    }
    let vis = compute_visibility_graph(s)?;
    let actual = vis.witnesses.keys().cloned().collect();
    Ok(EdgeDiff::between(&g.edge_set(), &actual))
}

/// Gate: returns the scene only if it is valid and realizes `g` exactly.
fn gate(g: &Graph, s: Scene) -> Result<Scene, ConstructError> {
    let diff = verify_roundtrip(g, &s)?;
    if diff.is_empty() {
        Ok(s)
    } else {
        Err(ConstructError::VerificationFailed(diff))
    }
}
