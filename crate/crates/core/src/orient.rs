//! Strongly confluent partial orientations (s.c.p.o.s), their attractors,
//! and the resulting geometric type of the universal group's action.
//!
//! A set `O` of arcs is an s.c.p.o. when no arc and its reverse both lie in
//! `O`, every arc of `O` has a single colour, at most one arc of `O` leaves
//! each vertex, and a vertex with an outgoing arc `a ∈ O` has every other
//! incoming arc except `ā` in `O`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::diagram::LocalActionDiagram;
use crate::error::{Error, Result};
use crate::sgraph::classify_graph;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scpo {
    arcs: BTreeSet<usize>,
}

impl Scpo {
    pub fn empty() -> Self {
        Self {
            arcs: BTreeSet::new(),
        }
    }

    pub fn new(d: &LocalActionDiagram, arcs: BTreeSet<usize>) -> Result<Self> {
        check_scpo(d, &arcs).map_err(Error::InvalidScpo)?;
        Ok(Self { arcs })
    }

    pub fn arcs(&self) -> &BTreeSet<usize> {
        &self.arcs
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn arc_ids<'a>(&self, d: &'a LocalActionDiagram) -> Vec<&'a str> {
        self.arcs.iter().map(|&a| d.graph().arc_id(a)).collect()
    }
}

/// Checks the four defining conditions, naming the first failure.
pub fn check_scpo(d: &LocalActionDiagram, arcs: &BTreeSet<usize>) -> std::result::Result<(), String> {
    let g = d.graph();
    let mut leaving = vec![None; g.vertex_count()];
    for &a in arcs {
        if a >= g.arc_count() {
            return Err(format!("arc index {a} out of range"));
        }
        let id = g.arc_id(a);
        if arcs.contains(&g.reverse(a)) {
            return Err(format!("`{id}` and its reverse are both present"));
        }
        if d.colours(a).len() != 1 {
            return Err(format!("`{id}` has {} colours", d.colours(a).len()));
        }
        let v = g.origin(a);
        if leaving[v].replace(a).is_some() {
            return Err(format!("two arcs leave `{}`", g.vertex_id(v)));
        }
    }
    for (v, out) in leaving.iter().enumerate() {
        let Some(a) = *out else { continue };
        for b in g.in_arcs(v) {
            if b != g.reverse(a) && !arcs.contains(&b) {
                return Err(format!(
                    "`{}` leaves `{}` but incoming `{}` is missing",
                    g.arc_id(a),
                    g.vertex_id(v),
                    g.arc_id(b)
                ));
            }
        }
    }
    Ok(())
}

/// Every s.c.p.o. of `d`, by propagating the strong-confluence constraint
/// through per-vertex choices. Sorted by size, then by arc indices; the
/// empty orientation comes first.
pub fn enumerate_scpos(d: &LocalActionDiagram) -> Vec<Scpo> {
    let g = d.graph();
    let n = g.vertex_count();
    let candidate: Vec<bool> = (0..g.arc_count())
        .map(|a| !g.is_self_reversed(a) && d.colours(a).len() == 1)
        .collect();
    let mut out = Vec::new();
    let mut choice: Vec<Option<Option<usize>>> = vec![None; n];
    search(d, &candidate, &mut choice, &mut out);
    out.sort_by(|a: &Scpo, b: &Scpo| {
        a.arcs
            .len()
            .cmp(&b.arcs.len())
            .then_with(|| a.arcs.iter().cmp(b.arcs.iter()))
    });
    out
}

type Choice = Vec<Option<Option<usize>>>;

fn search(d: &LocalActionDiagram, candidate: &[bool], choice: &mut Choice, out: &mut Vec<Scpo>) {
    let g = d.graph();
    let Some(v) = choice.iter().position(Option::is_none) else {
        let arcs = choice.iter().filter_map(|c| c.expect("complete")).collect();
        debug_assert!(check_scpo(d, &arcs).is_ok());
        out.push(Scpo { arcs });
        return;
    };
    let mut options = vec![None];
    options.extend(g.out_arcs(v).into_iter().filter(|&a| candidate[a]).map(Some));
    for opt in options {
        let saved = choice.clone();
        if assign(d, candidate, choice, v, opt) {
            search(d, candidate, choice, out);
        }
        *choice = saved;
    }
}

/// Sets `choice[v]` and propagates forced choices; false on contradiction.
fn assign(
    d: &LocalActionDiagram,
    candidate: &[bool],
    choice: &mut Choice,
    v: usize,
    opt: Option<usize>,
) -> bool {
    let g = d.graph();
    let mut stack = vec![(v, opt)];
    while let Some((v, opt)) = stack.pop() {
        match choice[v] {
            Some(existing) if existing == opt => continue,
            Some(_) => return false,
            None => choice[v] = Some(opt),
        }
        if let Some(a) = opt {
            let ra = g.reverse(a);
            if choice[g.origin(ra)] == Some(Some(ra)) {
                return false;
            }
            for b in g.in_arcs(v) {
                if b == ra {
                    continue;
                }
                if !candidate[b] {
                    return false;
                }
                stack.push((g.origin(b), Some(b)));
            }
        }
        // an earlier choice may force this vertex
        for a in g.out_arcs(v) {
            let w = g.terminus(a);
            if let Some(Some(c)) = choice[w] {
                if a != g.reverse(c) && opt != Some(a) {
                    return false;
                }
            }
        }
    }
    true
}

/// The trichotomy for finite graphs has two outcomes: the attractor is a
/// cotree oriented towards by `O`, or a cycle carrying a cyclic
/// orientation. The third (an invariant end) needs an infinite graph and
/// has no variant here.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ScpoKind {
    Cotree,
    Cycle { arcs: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScpoClass {
    pub kind: ScpoKind,
    pub attractor: BTreeSet<usize>,
}

/// Successor map: `v` goes to the terminus of its outgoing `O`-arc, if any.
fn successor(d: &LocalActionDiagram, o: &Scpo) -> Vec<usize> {
    let g = d.graph();
    let mut f: Vec<usize> = (0..g.vertex_count()).collect();
    for &a in &o.arcs {
        f[g.origin(a)] = g.terminus(a);
    }
    f
}

pub fn attractor(d: &LocalActionDiagram, o: &Scpo) -> BTreeSet<usize> {
    let f = successor(d, o);
    let n = f.len();
    let mut periodic = BTreeSet::new();
    for v in 0..n {
        let mut x = v;
        for _ in 0..n {
            x = f[x];
        }
        // x now lies on a cycle
        let start = x;
        loop {
            periodic.insert(x);
            x = f[x];
            if x == start {
                break;
            }
        }
    }
    periodic
}

pub fn classify_scpo(d: &LocalActionDiagram, o: &Scpo) -> Result<ScpoClass> {
    check_scpo(d, &o.arcs).map_err(Error::InvalidScpo)?;
    let g = d.graph();
    let attractor = attractor(d, o);
    let oriented: Vec<usize> = o
        .arcs
        .iter()
        .copied()
        .filter(|&a| attractor.contains(&g.origin(a)))
        .collect();
    if oriented.is_empty() {
        if g.orientation_towards(&attractor)? != o.arcs {
            return Err(Error::InvalidScpo(
                "orientation does not point towards its attractor".into(),
            ));
        }
        return Ok(ScpoClass {
            kind: ScpoKind::Cotree,
            attractor,
        });
    }
    let sub = g.induced_subgraph(&attractor);
    if classify_graph(&sub).cycle_order != Some(attractor.len()) {
        return Err(Error::InvalidScpo("attractor is neither a cotree nor a cycle".into()));
    }
    // walk the cycle from its first vertex
    let start = *attractor.iter().next().expect("nonempty");
    let mut cycle = Vec::new();
    let mut v = start;
    loop {
        let a = *o
            .arcs
            .iter()
            .find(|&&a| g.origin(a) == v)
            .expect("every cycle vertex has an outgoing arc");
        cycle.push(a);
        v = g.terminus(a);
        if v == start {
            break;
        }
    }
    Ok(ScpoClass {
        kind: ScpoKind::Cycle { arcs: cycle },
        attractor,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ActionType {
    FixedVertex,
    Inversion,
    Lineal,
    Focal,
    GeneralType,
}

impl ActionType {
    pub fn as_str(self) -> &'static str {
        match self {
            ActionType::FixedVertex => "FixedVertex",
            ActionType::Inversion => "Inversion",
            ActionType::Lineal => "Lineal",
            ActionType::Focal => "Focal",
            ActionType::GeneralType => "GeneralType",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ActionReport {
    pub irreducible: bool,
    pub action_type: ActionType,
    pub fixed_end_count: usize,
    pub minimal_cotree: Vec<String>,
    pub is_free: bool,
    pub geometrically_dense: bool,
    pub scpo_count: usize,
}

/// The cotree-type s.c.p.o. with the most arcs and its attractor.
pub fn maximal_cotree(d: &LocalActionDiagram) -> Result<(Scpo, BTreeSet<usize>)> {
    let mut best: Option<(Scpo, BTreeSet<usize>)> = None;
    for o in enumerate_scpos(d) {
        let c = classify_scpo(d, &o)?;
        if c.kind == ScpoKind::Cotree
            && best.as_ref().is_none_or(|(b, _)| o.arcs.len() > b.arcs.len())
        {
            best = Some((o, c.attractor));
        }
    }
    Ok(best.expect("the empty orientation is always of cotree type"))
}

pub fn analyze_action(d: &LocalActionDiagram) -> Result<ActionReport> {
    d.ensure_valid()?;
    let g = d.graph();
    let scpos = enumerate_scpos(d);
    let mut classes = Vec::with_capacity(scpos.len());
    for o in &scpos {
        classes.push(classify_scpo(d, o)?);
    }
    let induced_arcs = |set: &BTreeSet<usize>| -> Vec<usize> {
        (0..g.arc_count())
            .filter(|&a| set.contains(&g.origin(a)) && set.contains(&g.terminus(a)))
            .collect()
    };
    let single_vertex_cotrees: BTreeSet<usize> = classes
        .iter()
        .filter(|c| c.kind == ScpoKind::Cotree && c.attractor.len() == 1)
        .filter(|c| induced_arcs(&c.attractor).is_empty())
        .flat_map(|c| c.attractor.iter().copied())
        .collect();
    let inversion = classes.iter().any(|c| {
        c.kind == ScpoKind::Cotree && c.attractor.len() == 1 && {
            let arcs = induced_arcs(&c.attractor);
            arcs.len() == 1 && g.is_self_reversed(arcs[0]) && d.colours(arcs[0]).len() == 1
        }
    });
    let cycles: Vec<&Vec<usize>> = classes
        .iter()
        .filter_map(|c| match &c.kind {
            ScpoKind::Cycle { arcs } => Some(arcs),
            ScpoKind::Cotree => None,
        })
        .collect();
    let lineal = cycles
        .iter()
        .any(|arcs| arcs.iter().all(|&a| d.colours(g.reverse(a)).len() == 1));
    let focal = cycles
        .iter()
        .any(|arcs| arcs.iter().any(|&a| d.colours(g.reverse(a)).len() >= 2));
    let action_type = if !single_vertex_cotrees.is_empty() {
        ActionType::FixedVertex
    } else if inversion {
        ActionType::Inversion
    } else if lineal {
        ActionType::Lineal
    } else if focal {
        ActionType::Focal
    } else {
        ActionType::GeneralType
    };
    let fixed_end_count = match action_type {
        ActionType::Lineal => 2,
        ActionType::Focal => 1,
        _ => 0,
    };
    let cotree = if action_type == ActionType::FixedVertex {
        single_vertex_cotrees
    } else {
        maximal_cotree(d)?.1
    };
    let irreducible = scpos.len() == 1;
    Ok(ActionReport {
        irreducible,
        action_type,
        fixed_end_count,
        minimal_cotree: cotree.iter().map(|&v| g.vertex_id(v).to_string()).collect(),
        is_free: d.is_free(),
        geometrically_dense: irreducible,
        scpo_count: scpos.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{vt_diagram, OrbitPairing};
    use crate::perm::PermGroup;
    use crate::sgraph::{ArcSpec, SerreGraph};

    fn vt(d: usize, gens: &str, pairing: &[usize]) -> LocalActionDiagram {
        let h = PermGroup::parse(d, gens).unwrap();
        vt_diagram(&h, &OrbitPairing::new(pairing.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn transitive_action_is_irreducible() {
        let d = vt(3, "(1,2,3),(1,2)", &[0]);
        assert_eq!(enumerate_scpos(&d), vec![Scpo::empty()]);
        let r = analyze_action(&d).unwrap();
        assert!(r.irreducible && r.geometrically_dense);
        assert_eq!(r.action_type, ActionType::GeneralType);
    }

    #[test]
    fn focal_loop() {
        let d = vt(3, "(2,3)", &[1, 0]);
        let scpos = enumerate_scpos(&d);
        assert_eq!(scpos.len(), 2);
        assert_eq!(scpos[1].arc_ids(&d), vec!["a1"]);
        let c = classify_scpo(&d, &scpos[1]).unwrap();
        assert_eq!(c.kind, ScpoKind::Cycle { arcs: vec![0] });
        assert_eq!(c.attractor, [0].into());
        let r = analyze_action(&d).unwrap();
        assert_eq!(r.action_type, ActionType::Focal);
        assert_eq!(r.fixed_end_count, 1);
    }

    #[test]
    fn lineal_loop() {
        let d = vt(2, "()", &[1, 0]);
        let scpos = enumerate_scpos(&d);
        assert_eq!(scpos.len(), 3);
        let r = analyze_action(&d).unwrap();
        assert_eq!(r.action_type, ActionType::Lineal);
        assert_eq!(r.fixed_end_count, 2);
    }

    #[test]
    fn self_reversed_loops_never_oriented() {
        let d = vt(2, "()", &[0, 1]);
        assert_eq!(enumerate_scpos(&d), vec![Scpo::empty()]);
    }

    #[test]
    fn inversion_and_fixed_vertex() {
        let d = vt(1, "()", &[0]);
        assert_eq!(analyze_action(&d).unwrap().action_type, ActionType::Inversion);
        let d0 = vt(0, "()", &[]);
        assert_eq!(analyze_action(&d0).unwrap().action_type, ActionType::FixedVertex);
    }

    #[test]
    fn edge_towards_leaf_vertex() {
        // u -> w singleton, w -> u with three colours: {w} is a single-vertex cotree
        let graph = SerreGraph::new(
            vec!["u".into(), "w".into()],
            vec![ArcSpec::new("a", "u", "b"), ArcSpec::new("b", "w", "a")],
        )
        .unwrap();
        let colours = vec![vec!["p".into()], vec!["q1".into(), "q2".into(), "q3".into()]];
        let local = vec![PermGroup::trivial(1), PermGroup::symmetric(3).unwrap()];
        let d = LocalActionDiagram::new(graph, colours, local).unwrap();
        let o = Scpo::new(&d, [0].into()).unwrap();
        let c = classify_scpo(&d, &o).unwrap();
        assert_eq!(c.kind, ScpoKind::Cotree);
        assert_eq!(c.attractor, [1].into());
        let r = analyze_action(&d).unwrap();
        assert_eq!(r.action_type, ActionType::FixedVertex);
        assert_eq!(r.minimal_cotree, vec!["w"]);
    }

    #[test]
    fn invalid_orientation_is_rejected() {
        let d = vt(3, "(2,3)", &[1, 0]);
        assert!(Scpo::new(&d, [1].into()).is_err());
        assert!(Scpo::new(&d, [0, 1].into()).is_err());
    }
}
