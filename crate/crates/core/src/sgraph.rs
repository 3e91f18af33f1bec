//! Graphs with an origin map and an involutive arc reversal. A loop may be
//! its own reverse.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};

/// Prefix reserved for vertices added by [`SerreGraph::reversal_free_subdivision`].
pub const SUBDIVISION_VERTEX_PREFIX: &str = "~sub:";
/// Prefix reserved for arcs added by [`SerreGraph::reversal_free_subdivision`].
pub const SUBDIVISION_ARC_PREFIX: &str = "~rev:";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcSpec {
    pub id: String,
    pub origin: String,
    pub reverse: String,
}

impl ArcSpec {
    pub fn new(id: impl Into<String>, origin: impl Into<String>, reverse: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            origin: origin.into(),
            reverse: reverse.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SerreGraph {
    vertices: Vec<String>,
    arcs: Vec<String>,
    origin: Vec<usize>,
    reverse: Vec<usize>,
    vertex_index: HashMap<String, usize>,
    arc_index: HashMap<String, usize>,
}

impl SerreGraph {
    pub fn new(vertices: Vec<String>, arcs: Vec<ArcSpec>) -> Result<Self> {
        let mut vertex_index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if vertex_index.insert(v.clone(), i).is_some() {
                return Err(Error::Graph(format!("duplicate vertex `{v}`")));
            }
        }
        let mut arc_index = HashMap::new();
        for (i, a) in arcs.iter().enumerate() {
            if arc_index.insert(a.id.clone(), i).is_some() {
                return Err(Error::Graph(format!("duplicate arc `{}`", a.id)));
            }
        }
        let mut origin = Vec::with_capacity(arcs.len());
        let mut reverse = Vec::with_capacity(arcs.len());
        for a in &arcs {
            origin.push(
                *vertex_index
                    .get(&a.origin)
                    .ok_or_else(|| Error::UnknownVertex(a.origin.clone()))?,
            );
            reverse.push(*arc_index.get(&a.reverse).ok_or_else(|| {
                Error::Graph(format!("arc `{}` has unknown reverse `{}`", a.id, a.reverse))
            })?);
        }
        for (i, &r) in reverse.iter().enumerate() {
            if reverse[r] != i {
                return Err(Error::Graph(format!(
                    "reversal is not an involution at arc `{}`",
                    arcs[i].id
                )));
            }
        }
        Ok(Self {
            vertices,
            arcs: arcs.into_iter().map(|a| a.id).collect(),
            origin,
            reverse,
            vertex_index,
            arc_index,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn vertex_ids(&self) -> &[String] {
        &self.vertices
    }

    pub fn arc_ids(&self) -> &[String] {
        &self.arcs
    }

    pub fn vertex_id(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn arc_id(&self, a: usize) -> &str {
        &self.arcs[a]
    }

    pub fn vertex(&self, id: &str) -> Option<usize> {
        self.vertex_index.get(id).copied()
    }

    pub fn arc(&self, id: &str) -> Option<usize> {
        self.arc_index.get(id).copied()
    }

    pub fn origin(&self, a: usize) -> usize {
        self.origin[a]
    }

    pub fn terminus(&self, a: usize) -> usize {
        self.origin[self.reverse[a]]
    }

    pub fn reverse(&self, a: usize) -> usize {
        self.reverse[a]
    }

    pub fn is_self_reversed(&self, a: usize) -> bool {
        self.reverse[a] == a
    }

    /// Arcs with origin `v`, in arc order.
    pub fn out_arcs(&self, v: usize) -> Vec<usize> {
        (0..self.arcs.len()).filter(|&a| self.origin[a] == v).collect()
    }

    /// Arcs with terminus `v`, in arc order.
    pub fn in_arcs(&self, v: usize) -> Vec<usize> {
        (0..self.arcs.len()).filter(|&a| self.terminus(a) == v).collect()
    }

    pub fn arc_specs(&self) -> Vec<ArcSpec> {
        (0..self.arcs.len())
            .map(|a| {
                ArcSpec::new(
                    self.arcs[a].clone(),
                    self.vertices[self.origin[a]].clone(),
                    self.arcs[self.reverse[a]].clone(),
                )
            })
            .collect()
    }

    /// Number of edges `{a, ā}` with `a ≠ ā`. Self-reversed loops are half-edges
    /// and are not counted.
    pub fn geometric_edge_count(&self) -> usize {
        (0..self.arcs.len()).filter(|&a| self.reverse[a] != a).count() / 2
    }

    pub fn self_reversed_count(&self) -> usize {
        (0..self.arcs.len()).filter(|&a| self.reverse[a] == a).count()
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return false;
        }
        self.component_of(0, |_| true).len() == self.vertices.len()
    }

    /// Vertices reachable from `start` using only vertices accepted by `keep`.
    pub(crate) fn component_of(&self, start: usize, keep: impl Fn(usize) -> bool) -> Vec<usize> {
        let mut seen = vec![false; self.vertices.len()];
        seen[start] = true;
        let mut queue = vec![start];
        let mut i = 0;
        while i < queue.len() {
            let v = queue[i];
            for a in self.out_arcs(v) {
                let w = self.terminus(a);
                if !seen[w] && keep(w) {
                    seen[w] = true;
                    queue.push(w);
                }
            }
            i += 1;
        }
        queue
    }

    pub fn classify(&self) -> GraphReport {
        classify_graph(self)
    }

    /// Replaces each self-reversed loop `a` at `v` by an edge from `v` to a
    /// fresh vertex. Returns the new graph and the added vertex ids.
    pub fn reversal_free_subdivision(&self) -> (SerreGraph, Vec<String>) {
        let mut vertices = self.vertices.clone();
        let mut arcs = self.arc_specs();
        let mut added = Vec::new();
        for a in 0..self.arcs.len() {
            if !self.is_self_reversed(a) {
                continue;
            }
            let vertex = format!("{SUBDIVISION_VERTEX_PREFIX}{}", self.arcs[a]);
            let back = format!("{SUBDIVISION_ARC_PREFIX}{}", self.arcs[a]);
            arcs[a].reverse = back.clone();
            arcs.push(ArcSpec::new(back, vertex.clone(), self.arcs[a].clone()));
            vertices.push(vertex.clone());
            added.push(vertex);
        }
        let g = SerreGraph::new(vertices, arcs).expect("subdivision of a valid graph");
        (g, added)
    }

    /// The subgraph induced on `keep`, with vertex and arc order preserved.
    pub fn induced_subgraph(&self, keep: &BTreeSet<usize>) -> SerreGraph {
        let vertices = keep.iter().map(|&v| self.vertices[v].clone()).collect();
        let arcs = (0..self.arcs.len())
            .filter(|&a| keep.contains(&self.origin(a)) && keep.contains(&self.terminus(a)))
            .map(|a| {
                ArcSpec::new(
                    self.arcs[a].clone(),
                    self.vertices[self.origin[a]].clone(),
                    self.arcs[self.reverse[a]].clone(),
                )
            })
            .collect();
        SerreGraph::new(vertices, arcs).expect("induced subgraph of a valid graph")
    }

    /// Whether collapsing the (nonempty, connected) induced subgraph on `sub`
    /// to a single vertex leaves a tree.
    pub fn is_cotree(&self, sub: &BTreeSet<usize>) -> bool {
        let Some(&first) = sub.iter().next() else {
            return false;
        };
        if sub.iter().any(|&v| v >= self.vertices.len()) {
            return false;
        }
        if self.component_of(first, |w| sub.contains(&w)).len() != sub.len() {
            return false;
        }
        if !self.is_connected() {
            return false;
        }
        let collapsed = |v: usize| if sub.contains(&v) { usize::MAX } else { v };
        let mut edges = BTreeSet::new();
        let mut count = 0;
        for a in 0..self.arcs.len() {
            let (x, y) = (collapsed(self.origin(a)), collapsed(self.terminus(a)));
            if x == usize::MAX && y == usize::MAX {
                continue;
            }
            if x == y {
                return false;
            }
            if a < self.reverse[a] {
                count += 1;
                if !edges.insert((x.min(y), x.max(y))) {
                    return false;
                }
            }
        }
        count == self.vertices.len() - sub.len()
    }

    /// For a cotree `sub`, the arcs outside it pointing towards it: the
    /// unique orientation `O_{sub}` of the collapsed tree towards `sub`.
    pub fn orientation_towards(&self, sub: &BTreeSet<usize>) -> Result<BTreeSet<usize>> {
        if !self.is_cotree(sub) {
            return Err(Error::NotACotree(self.describe_set(sub)));
        }
        let mut reached: BTreeSet<usize> = sub.clone();
        let mut frontier: Vec<usize> = sub.iter().copied().collect();
        let mut out = BTreeSet::new();
        while let Some(v) = frontier.pop() {
            for a in self.in_arcs(v) {
                let w = self.origin(a);
                if !reached.contains(&w) {
                    reached.insert(w);
                    out.insert(a);
                    frontier.push(w);
                }
            }
        }
        Ok(out)
    }

    pub(crate) fn describe_set(&self, set: &BTreeSet<usize>) -> String {
        let names: Vec<&str> = set.iter().map(|&v| self.vertex_id(v)).collect();
        format!("{{{}}}", names.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphReport {
    pub connected: bool,
    pub simple: bool,
    pub tree: bool,
    pub cycle_order: Option<usize>,
    pub leaves: Vec<String>,
    pub geometric_edge_count: usize,
}

pub fn classify_graph(g: &SerreGraph) -> GraphReport {
    let connected = g.is_connected();
    let mut simple = true;
    let mut pairs = BTreeSet::new();
    for a in 0..g.arc_count() {
        let (x, y) = (g.origin(a), g.terminus(a));
        if x == y || (a < g.reverse(a) && !pairs.insert((x.min(y), x.max(y)))) {
            simple = false;
        }
    }
    let edges = g.geometric_edge_count();
    let tree = connected && simple && edges + 1 == g.vertex_count();
    let degrees: Vec<usize> = (0..g.vertex_count()).map(|v| g.out_arcs(v).len()).collect();
    let cycle_order = (connected
        && g.self_reversed_count() == 0
        && degrees.iter().all(|&d| d == 2))
    .then_some(g.vertex_count());
    let leaves = (0..g.vertex_count())
        .filter(|&v| degrees[v] == 1)
        .map(|v| g.vertex_id(v).to_string())
        .collect();
    GraphReport {
        connected,
        simple,
        tree,
        cycle_order,
        leaves,
        geometric_edge_count: edges,
    }
}
