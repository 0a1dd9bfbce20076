//! JSON encoding of certificates.
//!
//! ```json
//! {"lerf": true, "tree": {"op": "cone", "apex": "c",
//!   "child": {"op": "leaf", "vertices": ["a", "b"], "label": 5}},
//!  "expression": "(Art2(5) x Z)"}
//! ```
//!
//! A negative certificate carries `core`, `trail` and `witness` (possibly
//! `null`) instead of `tree`, and `expression` is `null`. Leaves with an edge
//! carry its `label`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::decider::{
    decomposition_expression, Certificate, ConstructionTree, NonLerfCore, TrailStep, WitnessKind,
    WitnessPattern,
};
use crate::error::Error;
use crate::graph::{ArtinGraph, EdgeLabel, VertexId};

#[derive(Debug, Error)]
pub enum CertificateJsonError {
    #[error("malformed certificate JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid certificate: {0}")]
    Graph(#[from] Error),
    #[error("invalid certificate: {0}")]
    Shape(String),
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case", deny_unknown_fields)]
enum TreeJson {
    Leaf {
        vertices: Vec<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        label: Option<u32>,
    },
    FreeProduct {
        children: Vec<TreeJson>,
    },
    Cone {
        apex: String,
        child: Box<TreeJson>,
    },
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "snake_case", deny_unknown_fields)]
enum StepJson {
    RemoveApex { vertex: String },
    TakeComponent { vertices: Vec<String> },
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WitnessJson {
    kind: String,
    vertices: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CertificateJson {
    lerf: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    tree: Option<TreeJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    core: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    trail: Option<Vec<StepJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    witness: Option<Option<WitnessJson>>,
    #[serde(default)]
    expression: Option<String>,
}

fn names(vs: &[VertexId]) -> Vec<String> {
    vs.iter().map(VertexId::to_string).collect()
}

fn ids(vs: &[String]) -> Result<Vec<VertexId>, Error> {
    vs.iter().map(|v| VertexId::new(v.as_str())).collect()
}

fn tree_to_json(tree: &ConstructionTree) -> TreeJson {
    match tree {
        ConstructionTree::Leaf(g) => TreeJson::Leaf {
            vertices: names(g.vertices()),
            label: g.edges().next().map(|(_, _, m)| m.get()),
        },
        ConstructionTree::FreeProduct(children) => TreeJson::FreeProduct {
            children: children.iter().map(tree_to_json).collect(),
        },
        ConstructionTree::Cone { apex, child } => TreeJson::Cone {
            apex: apex.to_string(),
            child: Box::new(tree_to_json(child)),
        },
    }
}

fn tree_from_json(tree: TreeJson) -> Result<ConstructionTree, CertificateJsonError> {
    Ok(match tree {
        TreeJson::Leaf { vertices, label } => {
            let vertices = ids(&vertices)?;
            let edges = match (label, vertices.as_slice()) {
                (None, _) => vec![],
                (Some(m), [u, v]) => vec![(u.clone(), v.clone(), EdgeLabel::new(m)?)],
                (Some(_), _) => {
                    return Err(CertificateJsonError::Shape(
                        "labeled leaf must have two vertices".into(),
                    ))
                }
            };
            ConstructionTree::Leaf(ArtinGraph::new(vertices, edges)?)
        }
        TreeJson::FreeProduct { children } => ConstructionTree::FreeProduct(
            children
                .into_iter()
                .map(tree_from_json)
                .collect::<Result<_, _>>()?,
        ),
        TreeJson::Cone { apex, child } => ConstructionTree::Cone {
            apex: VertexId::new(apex)?,
            child: Box::new(tree_from_json(*child)?),
        },
    })
}

/// Pretty-printed certificate, with the decomposition expression for
/// positive answers.
pub fn certificate_to_json(certificate: &Certificate) -> String {
    let json = match certificate {
        Certificate::InS(tree) => CertificateJson {
            lerf: true,
            tree: Some(tree_to_json(tree)),
            core: None,
            trail: None,
            witness: None,
            expression: Some(decomposition_expression(tree)),
        },
        Certificate::NotInS(core) => CertificateJson {
            lerf: false,
            tree: None,
            core: Some(names(&core.core)),
            trail: Some(
                core.trail
                    .iter()
                    .map(|step| match step {
                        TrailStep::RemoveApex(v) => StepJson::RemoveApex {
                            vertex: v.to_string(),
                        },
                        TrailStep::TakeComponent(vs) => StepJson::TakeComponent {
                            vertices: names(vs),
                        },
                    })
                    .collect(),
            ),
            witness: Some(core.witness.as_ref().map(|w| WitnessJson {
                kind: w.kind.as_str().to_string(),
                vertices: names(&w.vertices),
            })),
            expression: None,
        },
    };
    serde_json::to_string_pretty(&json).expect("certificate JSON is serializable")
}

/// Parses a certificate; also returns the recorded expression, if any.
pub fn certificate_from_json(
    text: &str,
) -> Result<(Certificate, Option<String>), CertificateJsonError> {
    let json: CertificateJson = serde_json::from_str(text)?;
    let shape = |msg: &str| CertificateJsonError::Shape(msg.to_string());
    let certificate = if json.lerf {
        if json.core.is_some() || json.trail.is_some() || json.witness.is_some() {
            return Err(shape("positive certificate with negative fields"));
        }
        Certificate::InS(tree_from_json(
            json.tree.ok_or_else(|| shape("missing tree"))?,
        )?)
    } else {
        if json.tree.is_some() {
            return Err(shape("negative certificate with a tree"));
        }
        let core = ids(&json.core.ok_or_else(|| shape("missing core"))?)?;
        let trail = json
            .trail
            .ok_or_else(|| shape("missing trail"))?
            .into_iter()
            .map(|step| {
                Ok(match step {
                    StepJson::RemoveApex { vertex } => {
                        TrailStep::RemoveApex(VertexId::new(vertex)?)
                    }
                    StepJson::TakeComponent { vertices } => {
                        TrailStep::TakeComponent(ids(&vertices)?)
                    }
                })
            })
            .collect::<Result<Vec<_>, CertificateJsonError>>()?;
        let witness = match json.witness.flatten() {
            None => None,
            Some(w) => Some(WitnessPattern {
                kind: WitnessKind::parse(&w.kind)
                    .ok_or_else(|| shape(&format!("unknown witness kind {:?}", w.kind)))?,
                vertices: ids(&w.vertices)?,
            }),
        };
        Certificate::NotInS(NonLerfCore {
            core,
            trail,
            witness,
        })
    };
    Ok((certificate, json.expression))
}
