//! JSON diagram files.
//!
//! ```json
//! {
//!   "vertices": ["v"],
//!   "arcs": [{"id": "a1", "origin": "v", "reverse": "a1", "colours": ["1", "2", "3"]}],
//!   "local_actions": {"v": {"points": ["1", "2", "3"], "generators": [[2, 3, 1]]}}
//! }
//! ```
//!
//! `points` lists `X_v` in position order and must agree with the arc and
//! colour order; generator images are one-based positions in `points`.

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use super::LocalActionDiagram;
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};
use crate::sgraph::{ArcSpec, SerreGraph};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DiagramFile {
    vertices: Vec<String>,
    arcs: Vec<ArcEntry>,
    local_actions: IndexMap<String, LocalActionEntry>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArcEntry {
    id: String,
    origin: String,
    reverse: String,
    colours: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LocalActionEntry {
    points: Vec<String>,
    generators: Vec<Vec<usize>>,
}

impl LocalActionDiagram {
    pub fn from_json(text: &str) -> Result<Self> {
        let file: DiagramFile = serde_json::from_str(text)?;
        let arcs = file
            .arcs
            .iter()
            .map(|a| ArcSpec::new(a.id.clone(), a.origin.clone(), a.reverse.clone()))
            .collect();
        let graph = SerreGraph::new(file.vertices.clone(), arcs)?;
        let colours: Vec<Vec<String>> = file.arcs.into_iter().map(|a| a.colours).collect();
        if let Some(extra) = file.local_actions.keys().find(|k| graph.vertex(k).is_none()) {
            return Err(Error::UnknownVertex(extra.clone()));
        }
        let mut local = Vec::with_capacity(graph.vertex_count());
        for v in 0..graph.vertex_count() {
            let id = graph.vertex_id(v);
            let entry = file
                .local_actions
                .get(id)
                .ok_or_else(|| Error::Parse(format!("no local action for vertex `{id}`")))?;
            let expected: Vec<&String> = graph
                .out_arcs(v)
                .into_iter()
                .flat_map(|a| colours[a].iter())
                .collect();
            if entry.points.iter().collect::<Vec<_>>() != expected {
                return Err(Error::Parse(format!(
                    "points of `{id}` must list the colours of its arcs in arc order, expected {expected:?}"
                )));
            }
            let gens = entry
                .generators
                .iter()
                .map(|g| {
                    if g.len() != expected.len() {
                        return Err(Error::DegreeMismatch {
                            expected: expected.len(),
                            found: g.len(),
                        });
                    }
                    Permutation::from_one_based(g)
                })
                .collect::<Result<Vec<_>>>()?;
            local.push(PermGroup::new(expected.len(), gens)?);
        }
        LocalActionDiagram::new(graph, colours, local)
    }

    /// Pretty JSON with a trailing newline; `from_json` then `to_json`
    /// reproduces this text exactly.
    pub fn to_json(&self) -> String {
        let g = &self.graph;
        let file = DiagramFile {
            vertices: g.vertex_ids().to_vec(),
            arcs: (0..g.arc_count())
                .map(|a| ArcEntry {
                    id: g.arc_id(a).to_string(),
                    origin: g.vertex_id(g.origin(a)).to_string(),
                    reverse: g.arc_id(g.reverse(a)).to_string(),
                    colours: self.colours[a].clone(),
                })
                .collect(),
            local_actions: (0..g.vertex_count())
                .map(|v| {
                    (
                        g.vertex_id(v).to_string(),
                        LocalActionEntry {
                            points: self.points(v).into_iter().map(String::from).collect(),
                            generators: self.local[v]
                                .generators()
                                .iter()
                                .map(Permutation::one_based)
                                .collect(),
                        },
                    )
                })
                .collect(),
        };
        let mut text = serde_json::to_string_pretty(&file).expect("diagram serializes");
        text.push('\n');
        text
    }
}
