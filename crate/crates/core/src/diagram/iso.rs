//! Isomorphism of local action diagrams: a graph isomorphism together with
//! colour bijections at each vertex that respect the arc colour sets and
//! conjugate one local action onto the other.

use super::LocalActionDiagram;
use crate::error::{Error, Result};
use crate::perm::{ConjugatorSearch, Permutation};

pub const DEFAULT_ISO_NODE_LIMIT: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramIso {
    pub vertex_map: Vec<usize>,
    pub arc_map: Vec<usize>,
    /// `colour_maps[v][x]` is the position in `X'_{θ(v)}` of the image of position `x` of `X_v`.
    pub colour_maps: Vec<Vec<usize>>,
}

impl DiagramIso {
    pub fn verify(&self, from: &LocalActionDiagram, to: &LocalActionDiagram) -> bool {
        let (g1, g2) = (from.graph(), to.graph());
        if self.vertex_map.len() != g1.vertex_count()
            || self.arc_map.len() != g1.arc_count()
            || g1.vertex_count() != g2.vertex_count()
            || g1.arc_count() != g2.arc_count()
            || !is_bijection(&self.vertex_map)
            || !is_bijection(&self.arc_map)
        {
            return false;
        }
        for a in 0..g1.arc_count() {
            let b = self.arc_map[a];
            if self.vertex_map[g1.origin(a)] != g2.origin(b)
                || self.arc_map[g1.reverse(a)] != g2.reverse(b)
                || from.colours(a).len() != to.colours(b).len()
            {
                return false;
            }
        }
        for v in 0..g1.vertex_count() {
            let w = self.vertex_map[v];
            let map = &self.colour_maps[v];
            let Ok(beta) = Permutation::from_images(map.clone()) else {
                return false;
            };
            if beta.degree() != to.degree(w) {
                return false;
            }
            for a in g1.out_arcs(v) {
                let target = to.positions(self.arc_map[a]);
                if from.positions(a).any(|x| !target.contains(&map[x])) {
                    return false;
                }
            }
            if from.local_action(v).conjugate(&beta) != *to.local_action(w) {
                return false;
            }
        }
        true
    }

    pub fn inverse(&self) -> DiagramIso {
        let invert = |m: &[usize]| {
            let mut out = vec![0; m.len()];
            for (i, &j) in m.iter().enumerate() {
                out[j] = i;
            }
            out
        };
        let vertex_map = invert(&self.vertex_map);
        let colour_maps = vertex_map
            .iter()
            .map(|&v| invert(&self.colour_maps[v]))
            .collect();
        DiagramIso {
            vertex_map,
            arc_map: invert(&self.arc_map),
            colour_maps,
        }
    }
}

fn is_bijection(m: &[usize]) -> bool {
    let mut seen = vec![false; m.len()];
    m.iter().all(|&x| x < m.len() && !std::mem::replace(&mut seen[x], true))
}

pub fn isomorphic(d1: &LocalActionDiagram, d2: &LocalActionDiagram) -> Result<Option<DiagramIso>> {
    isomorphic_with_limit(d1, d2, DEFAULT_ISO_NODE_LIMIT)
}

pub fn isomorphic_with_limit(
    d1: &LocalActionDiagram,
    d2: &LocalActionDiagram,
    node_limit: usize,
) -> Result<Option<DiagramIso>> {
    let (g1, g2) = (d1.graph(), d2.graph());
    if g1.vertex_count() != g2.vertex_count()
        || g1.arc_count() != g2.arc_count()
        || g1.self_reversed_count() != g2.self_reversed_count()
    {
        return Ok(None);
    }
    if g1.vertex_count() == 0 {
        return Ok(Some(DiagramIso {
            vertex_map: vec![],
            arc_map: vec![],
            colour_maps: vec![],
        }));
    }
    let order = g1.component_of(0, |_| true);
    if order.len() != g1.vertex_count() {
        return Err(Error::Precondition("diagram is not connected".into()));
    }
    let mut s = Search {
        d1,
        d2,
        order,
        vmap: vec![None; g1.vertex_count()],
        vused: vec![false; g2.vertex_count()],
        amap: vec![None; g1.arc_count()],
        aused: vec![false; g2.arc_count()],
        cmaps: vec![Vec::new(); g1.vertex_count()],
        nodes: 0,
        node_limit,
    };
    for root in 0..g2.vertex_count() {
        s.vmap[s.order[0]] = Some(root);
        s.vused[root] = true;
        if s.vertex_step(0)? {
            let iso = DiagramIso {
                vertex_map: s.vmap.iter().map(|v| v.expect("complete")).collect(),
                arc_map: s.amap.iter().map(|a| a.expect("complete")).collect(),
                colour_maps: s.cmaps,
            };
            debug_assert!(iso.verify(d1, d2));
            return Ok(Some(iso));
        }
        s.vmap[s.order[0]] = None;
        s.vused[root] = false;
    }
    Ok(None)
}

struct Search<'a> {
    d1: &'a LocalActionDiagram,
    d2: &'a LocalActionDiagram,
    order: Vec<usize>,
    vmap: Vec<Option<usize>>,
    vused: Vec<bool>,
    amap: Vec<Option<usize>>,
    aused: Vec<bool>,
    cmaps: Vec<Vec<usize>>,
    nodes: usize,
    node_limit: usize,
}

enum Undo {
    Arc(usize, usize),
    Vertex(usize, usize),
}

impl Search<'_> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.node_limit {
            return Err(Error::SearchLimit(self.node_limit));
        }
        Ok(())
    }

    fn vertex_step(&mut self, k: usize) -> Result<bool> {
        if k == self.order.len() {
            return Ok(true);
        }
        self.tick()?;
        let v = self.order[k];
        let w = self.vmap[v].expect("BFS order reaches mapped vertices");
        let out1 = self.d1.graph().out_arcs(v);
        let out2 = self.d2.graph().out_arcs(w);
        if out1.len() != out2.len() || self.d1.degree(v) != self.d2.degree(w) {
            return Ok(false);
        }
        self.arc_step(k, &out1, &out2, 0)
    }

    fn arc_step(&mut self, k: usize, out1: &[usize], out2: &[usize], i: usize) -> Result<bool> {
        if i == out1.len() {
            return self.close_vertex(k);
        }
        let a = out1[i];
        if self.amap[a].is_some() {
            return self.arc_step(k, out1, out2, i + 1);
        }
        let (g1, g2) = (self.d1.graph(), self.d2.graph());
        for &b in out2 {
            if self.aused[b]
                || g1.is_self_reversed(a) != g2.is_self_reversed(b)
                || self.d1.colours(a).len() != self.d2.colours(b).len()
            {
                continue;
            }
            let (ra, rb) = (g1.reverse(a), g2.reverse(b));
            if ra != a && (self.aused[rb] || self.d1.colours(ra).len() != self.d2.colours(rb).len()) {
                continue;
            }
            let (t1, t2) = (g1.terminus(a), g2.terminus(b));
            let mut trail = Vec::new();
            match self.vmap[t1] {
                Some(x) if x != t2 => continue,
                Some(_) => {}
                None => {
                    if self.vused[t2] {
                        continue;
                    }
                    self.vmap[t1] = Some(t2);
                    self.vused[t2] = true;
                    trail.push(Undo::Vertex(t1, t2));
                }
            }
            self.amap[a] = Some(b);
            self.aused[b] = true;
            trail.push(Undo::Arc(a, b));
            if ra != a {
                self.amap[ra] = Some(rb);
                self.aused[rb] = true;
                trail.push(Undo::Arc(ra, rb));
            }
            if self.arc_step(k, out1, out2, i + 1)? {
                return Ok(true);
            }
            for u in trail {
                match u {
                    Undo::Arc(a, b) => {
                        self.amap[a] = None;
                        self.aused[b] = false;
                    }
                    Undo::Vertex(v, w) => {
                        self.vmap[v] = None;
                        self.vused[w] = false;
                    }
                }
            }
        }
        Ok(false)
    }

    fn close_vertex(&mut self, k: usize) -> Result<bool> {
        self.tick()?;
        let v = self.order[k];
        let w = self.vmap[v].expect("mapped");
        let arc_of = self.d1.arc_of_position(v);
        let allowed: Vec<Vec<usize>> = arc_of
            .iter()
            .map(|&a| self.d2.positions(self.amap[a].expect("all arcs at v mapped")).collect())
            .collect();
        let found = ConjugatorSearch {
            source: self.d1.local_action(v),
            target: self.d2.local_action(w),
            allowed: Some(&allowed),
            node_limit: self.node_limit,
        }
        .run()?;
        let Some(beta) = found else {
            return Ok(false);
        };
        self.cmaps[v] = beta.images().collect();
        if self.vertex_step(k + 1)? {
            return Ok(true);
        }
        self.cmaps[v].clear();
        Ok(false)
    }
}
