//! Local action diagrams: a connected graph, a nonempty colour set on every
//! arc, and at each vertex a permutation group whose orbits are exactly the
//! colour sets of the arcs leaving it.
//!
//! `X_v` is ordered by arc order and then by colour order within each arc;
//! the local action at `v` acts on positions `0..|X_v|` in that order.

mod construct;
mod io;
mod iso;
mod pairing;
mod random;

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::ops::Range;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};
use crate::sgraph::{ArcSpec, SerreGraph};

pub use construct::{double_diagram, star_diagram, vt_diagram, StarFactor};
pub use iso::{isomorphic, isomorphic_with_limit, DiagramIso, DEFAULT_ISO_NODE_LIMIT};
pub use pairing::OrbitPairing;
pub use random::{random_diagram, RandomShape};

#[derive(Clone, Debug)]
pub struct LocalActionDiagram {
    graph: SerreGraph,
    colours: Vec<Vec<String>>,
    local: Vec<PermGroup>,
    offset: Vec<usize>,
    colour_lookup: HashMap<String, (usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Disconnected,
    EmptyColourSet { arc: String },
    NotAnOrbit { vertex: String, arc: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Disconnected => f.write_str("graph is not connected"),
            Violation::EmptyColourSet { arc } => write!(f, "empty colour set on arc `{arc}`"),
            Violation::NotAnOrbit { vertex, arc } => write!(
                f,
                "colour set not an orbit: arc `{arc}` under the local action at `{vertex}`"
            ),
        }
    }
}

impl LocalActionDiagram {
    /// Assembles a diagram, checking only structure: sizes, globally unique
    /// colour labels, and group degrees. Use [`validate`](Self::validate)
    /// for the orbit and connectivity conditions.
    pub fn new(graph: SerreGraph, colours: Vec<Vec<String>>, local: Vec<PermGroup>) -> Result<Self> {
        if colours.len() != graph.arc_count() {
            return Err(Error::Graph(format!(
                "{} colour sets for {} arcs",
                colours.len(),
                graph.arc_count()
            )));
        }
        if local.len() != graph.vertex_count() {
            return Err(Error::Graph(format!(
                "{} local actions for {} vertices",
                local.len(),
                graph.vertex_count()
            )));
        }
        let mut colour_lookup = HashMap::new();
        for (a, set) in colours.iter().enumerate() {
            for (i, c) in set.iter().enumerate() {
                if colour_lookup.insert(c.clone(), (a, i)).is_some() {
                    return Err(Error::Graph(format!("colour `{c}` used twice")));
                }
            }
        }
        let mut offset = vec![0; graph.arc_count()];
        let mut size = vec![0; graph.vertex_count()];
        for a in 0..graph.arc_count() {
            let v = graph.origin(a);
            offset[a] = size[v];
            size[v] += colours[a].len();
        }
        for (v, g) in local.iter().enumerate() {
            if g.degree() != size[v] {
                return Err(Error::DegreeMismatch {
                    expected: size[v],
                    found: g.degree(),
                });
            }
        }
        Ok(Self {
            graph,
            colours,
            local,
            offset,
            colour_lookup,
        })
    }

    pub fn graph(&self) -> &SerreGraph {
        &self.graph
    }

    pub fn colours(&self, arc: usize) -> &[String] {
        &self.colours[arc]
    }

    pub fn local_action(&self, v: usize) -> &PermGroup {
        &self.local[v]
    }

    pub fn local_actions(&self) -> &[PermGroup] {
        &self.local
    }

    /// `|X_v|`
    pub fn degree(&self, v: usize) -> usize {
        self.local[v].degree()
    }

    /// Colour labels of `X_v` in position order.
    pub fn points(&self, v: usize) -> Vec<&str> {
        self.graph
            .out_arcs(v)
            .into_iter()
            .flat_map(|a| self.colours[a].iter().map(String::as_str))
            .collect()
    }

    /// Positions of `X_a` inside `X_{o(a)}`.
    pub fn positions(&self, arc: usize) -> Range<usize> {
        self.offset[arc]..self.offset[arc] + self.colours[arc].len()
    }

    /// Arc owning each position of `X_v`.
    pub fn arc_of_position(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.degree(v));
        for a in self.graph.out_arcs(v) {
            out.extend(std::iter::repeat_n(a, self.colours[a].len()));
        }
        out
    }

    /// The arc carrying a colour label and its index within that arc's colour set.
    pub fn colour_location(&self, label: &str) -> Option<(usize, usize)> {
        self.colour_lookup.get(label).copied()
    }

    pub fn is_free(&self) -> bool {
        self.local.iter().all(PermGroup::is_free)
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if !self.graph.is_connected() {
            out.push(Violation::Disconnected);
        }
        for a in 0..self.graph.arc_count() {
            if self.colours[a].is_empty() {
                out.push(Violation::EmptyColourSet {
                    arc: self.graph.arc_id(a).to_string(),
                });
                continue;
            }
            let v = self.graph.origin(a);
            let pos = self.positions(a);
            let orbit = self.local[v].orbit_of(pos.start);
            if orbit.len() != pos.len() || orbit.iter().any(|x| !pos.contains(x)) {
                out.push(Violation::NotAnOrbit {
                    vertex: self.graph.vertex_id(v).to_string(),
                    arc: self.graph.arc_id(a).to_string(),
                });
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    pub(crate) fn ensure_valid(&self) -> Result<()> {
        let violations = self.validate();
        if violations.is_empty() {
            Ok(())
        } else {
            let text: Vec<String> = violations.iter().map(ToString::to_string).collect();
            Err(Error::Precondition(format!("invalid diagram: {}", text.join("; "))))
        }
    }

    /// The diagram induced on a cotree `sub` of this diagram: arcs inside
    /// `sub` keep their colours and each local action is restricted to the
    /// retained colours.
    pub fn restrict_to_cotree(&self, sub: &BTreeSet<usize>) -> Result<Self> {
        let towards = self.graph.orientation_towards(sub)?;
        if let Some(&a) = towards.iter().find(|&&a| self.colours[a].len() != 1) {
            return Err(Error::NotACotree(format!(
                "arc `{}` points towards {} but has {} colours",
                self.graph.arc_id(a),
                self.graph.describe_set(sub),
                self.colours[a].len()
            )));
        }
        let graph = self.graph.induced_subgraph(sub);
        let mut colours = Vec::with_capacity(graph.arc_count());
        for id in graph.arc_ids() {
            colours.push(self.colours[self.graph.arc(id).expect("same ids")].clone());
        }
        let mut local = Vec::with_capacity(sub.len());
        for &v in sub {
            let kept: Vec<usize> = self
                .graph
                .out_arcs(v)
                .into_iter()
                .filter(|&a| sub.contains(&self.graph.terminus(a)))
                .flat_map(|a| self.positions(a))
                .collect();
            local.push(self.local[v].restrict_to(&kept)?);
        }
        Self::new(graph, colours, local)
    }

    /// A copy with vertices, arcs and colours renamed and reordered at random,
    /// including the order of colours within each arc.
    pub fn shuffled<R: Rng + ?Sized>(&self, rng: &mut R) -> Self {
        let g = &self.graph;
        let mut vorder: Vec<usize> = (0..g.vertex_count()).collect();
        vorder.shuffle(rng);
        let mut aorder: Vec<usize> = (0..g.arc_count()).collect();
        aorder.shuffle(rng);
        let tag: u32 = rng.gen();
        let vname = |v: usize| format!("x{tag}-{v}");
        let aname = |a: usize| format!("e{tag}-{a}");
        let mut colour_perm: Vec<Vec<usize>> = Vec::new();
        for a in 0..g.arc_count() {
            let mut p: Vec<usize> = (0..self.colours[a].len()).collect();
            p.shuffle(rng);
            colour_perm.push(p);
        }
        let vertices = vorder.iter().map(|&v| vname(v)).collect();
        let arcs = aorder
            .iter()
            .map(|&a| ArcSpec::new(aname(a), vname(g.origin(a)), aname(g.reverse(a))))
            .collect();
        let graph = SerreGraph::new(vertices, arcs).expect("relabelled graph");
        let colours: Vec<Vec<String>> = aorder
            .iter()
            .map(|&a| {
                colour_perm[a]
                    .iter()
                    .map(|&i| format!("k{tag}-{}", self.colours[a][i]))
                    .collect()
            })
            .collect();
        let mut local = Vec::new();
        for &v in &vorder {
            // new position of each old position of X_v
            let mut new_pos = vec![0; self.degree(v)];
            let mut next = 0;
            for &a in aorder.iter().filter(|&&a| g.origin(a) == v) {
                for &i in &colour_perm[a] {
                    new_pos[self.offset[a] + i] = next;
                    next += 1;
                }
            }
            let s = Permutation::from_images(new_pos).expect("bijection");
            local.push(self.local[v].conjugate(&s));
        }
        Self::new(graph, colours, local).expect("relabelled diagram")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn two_vertex(groups: (&str, &str)) -> LocalActionDiagram {
        // u --a--> w with X_a = {p}, X_b = {q1,q2,q3}
        let graph = SerreGraph::new(
            vec!["u".into(), "w".into()],
            vec![ArcSpec::new("a", "u", "b"), ArcSpec::new("b", "w", "a")],
        )
        .unwrap();
        let colours = vec![vec!["p".into()], vec!["q1".into(), "q2".into(), "q3".into()]];
        let local = vec![
            PermGroup::parse(1, groups.0).unwrap(),
            PermGroup::parse(3, groups.1).unwrap(),
        ];
        LocalActionDiagram::new(graph, colours, local).unwrap()
    }

    #[test]
    fn validation_reports_split_orbit() {
        let d = two_vertex(("()", "(2,3)"));
        let v = d.validate();
        assert_eq!(v.len(), 1);
        assert!(v[0].to_string().starts_with("colour set not an orbit"));
        assert!(two_vertex(("()", "(1,2,3),(1,2)")).is_valid());
    }

    #[test]
    fn validation_reports_empty_colour_set() {
        let graph = SerreGraph::new(vec!["v".into()], vec![ArcSpec::new("a", "v", "a")]).unwrap();
        let d = LocalActionDiagram::new(graph, vec![vec![]], vec![PermGroup::trivial(0)]).unwrap();
        assert_eq!(
            d.validate(),
            vec![Violation::EmptyColourSet { arc: "a".into() }]
        );
    }

    #[test]
    fn restriction_to_whole_graph_is_identity() {
        let d = two_vertex(("()", "(1,2,3),(1,2)"));
        let all: BTreeSet<usize> = [0, 1].into();
        let r = d.restrict_to_cotree(&all).unwrap();
        assert_eq!(r.to_json(), d.to_json());
    }

    #[test]
    fn restriction_drops_leaf() {
        let d = two_vertex(("()", "(1,2,3),(1,2)"));
        let r = d.restrict_to_cotree(&[1].into()).unwrap();
        assert_eq!(r.graph().vertex_count(), 1);
        assert_eq!(r.graph().arc_count(), 0);
        assert_eq!(r.local_action(0).degree(), 0);
        // the arc w -> u has three colours, so {u} is not a cotree of the diagram
        assert!(matches!(
            d.restrict_to_cotree(&[0].into()),
            Err(Error::NotACotree(_))
        ));
    }

    #[test]
    fn pendant_leaf_restriction_keeps_core_action() {
        // v carries a 3-cycle on {x1,x2,x3} and a singleton arc to a trivial leaf
        let graph = SerreGraph::new(
            vec!["v".into(), "leaf".into()],
            vec![
                ArcSpec::new("l", "v", "l"),
                ArcSpec::new("p", "v", "q"),
                ArcSpec::new("q", "leaf", "p"),
            ],
        )
        .unwrap();
        let colours = vec![
            vec!["x1".into(), "x2".into(), "x3".into()],
            vec!["y".into()],
            vec!["z".into()],
        ];
        let local = vec![
            PermGroup::parse(4, "(1,2,3)").unwrap(),
            PermGroup::trivial(1),
        ];
        let d = LocalActionDiagram::new(graph, colours, local).unwrap();
        assert!(d.is_valid());
        let r = d.restrict_to_cotree(&[0].into()).unwrap();
        assert_eq!(r.graph().arc_count(), 1);
        assert_eq!(r.local_action(0), &PermGroup::parse(3, "(1,2,3)").unwrap());
    }

    #[test]
    fn shuffled_copy_stays_valid() {
        let d = two_vertex(("()", "(1,2,3),(1,2)"));
        let mut rng = rand::thread_rng();
        for _ in 0..5 {
            assert!(d.shuffled(&mut rng).is_valid());
        }
    }
}
