//! Finite balls in the Δ-tree built from coloured walks, the local action
//! of a ball map at a vertex, and counts of the root-fixing ball maps that
//! come from the universal group.
//!
//! A ball vertex is a coloured walk `c_1 .. c_n` from the base. The arc
//! back to the parent is labelled `d_n`, a colour of the reverse arc; its
//! children are the walks extended by every colour at the endpoint except
//! `d_n`.

use std::fmt::Write as _;

use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rayon::prelude::*;

use crate::diagram::LocalActionDiagram;
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};
use crate::registry::{Named, Registry};

pub const DEFAULT_BALL_BUDGET: u128 = 1_000_000;

/// Formula counts at or below this are confirmed by explicit enumeration.
pub const CROSS_CHECK_LIMIT: u64 = 1_000_000;

/// How the reverse label `d_n` is picked from the reverse arc's colours.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReverseLabels {
    Minimum,
    Random(u64),
}

#[derive(Clone, Debug)]
pub struct BallVertex {
    /// Colour positions: `walk[i]` indexes `X` at the origin of step `i`.
    pub walk: Vec<usize>,
    pub parent: Option<usize>,
    /// Diagram vertex under π.
    pub projection: usize,
    /// Position in `X_{π(self)}` of the label on the arc back to the parent.
    pub inward: Option<usize>,
    /// `neighbours[x]`: the ball vertex across the arc labelled by position `x`;
    /// empty on the boundary.
    pub neighbours: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct DeltaTreeBall {
    radius: usize,
    base: usize,
    vertices: Vec<BallVertex>,
}

/// Vertex count of the ball, saturating.
pub fn predicted_ball_size(d: &LocalActionDiagram, base: usize, radius: usize) -> u128 {
    let g = d.graph();
    // size[a]: vertices in the subtree entered along `a`, for the current depth
    let mut size = vec![1u128; g.arc_count()];
    for _ in 1..radius {
        let next = (0..g.arc_count())
            .map(|a| {
                let w = g.terminus(a);
                let below: u128 = g
                    .out_arcs(w)
                    .into_iter()
                    .map(|b| {
                        let k = d.colours(b).len() as u128 - u128::from(b == g.reverse(a));
                        k.saturating_mul(size[b])
                    })
                    .fold(0u128, u128::saturating_add);
                below.saturating_add(1)
            })
            .collect();
        size = next;
    }
    if radius == 0 {
        return 1;
    }
    g.out_arcs(base)
        .into_iter()
        .map(|a| (d.colours(a).len() as u128).saturating_mul(size[a]))
        .fold(1u128, u128::saturating_add)
}

pub fn build_ball(d: &LocalActionDiagram, base: usize, radius: usize) -> Result<DeltaTreeBall> {
    build_ball_with(d, base, radius, DEFAULT_BALL_BUDGET, ReverseLabels::Minimum)
}

pub fn build_ball_with(
    d: &LocalActionDiagram,
    base: usize,
    radius: usize,
    budget: u128,
    labels: ReverseLabels,
) -> Result<DeltaTreeBall> {
    d.ensure_valid()?;
    let g = d.graph();
    if base >= g.vertex_count() {
        return Err(Error::UnknownVertex(base.to_string()));
    }
    let predicted = predicted_ball_size(d, base, radius);
    if predicted > budget {
        return Err(Error::BudgetExceeded { predicted, budget });
    }
    let mut rng = match labels {
        ReverseLabels::Random(seed) => Some(StdRng::seed_from_u64(seed)),
        ReverseLabels::Minimum => None,
    };
    let arc_of: Vec<Vec<usize>> = (0..g.vertex_count()).map(|v| d.arc_of_position(v)).collect();
    let mut vertices = vec![BallVertex {
        walk: Vec::new(),
        parent: None,
        projection: base,
        inward: None,
        neighbours: Vec::new(),
    }];
    let mut frontier = vec![0];
    for _ in 0..radius {
        let mut next = Vec::new();
        for w in frontier {
            let v = vertices[w].projection;
            let mut neighbours = Vec::with_capacity(d.degree(v));
            for (x, &a) in arc_of[v].iter().enumerate() {
                if vertices[w].inward == Some(x) {
                    neighbours.push(vertices[w].parent.expect("non-root"));
                    continue;
                }
                let back = d.positions(g.reverse(a));
                let inward = match rng.as_mut() {
                    Some(rng) => *back.clone().collect::<Vec<_>>().choose(rng).expect("nonempty"),
                    None => back.start,
                };
                let mut walk = vertices[w].walk.clone();
                walk.push(x);
                let child = vertices.len();
                vertices.push(BallVertex {
                    walk,
                    parent: Some(w),
                    projection: g.terminus(a),
                    inward: Some(inward),
                    neighbours: Vec::new(),
                });
                neighbours.push(child);
                next.push(child);
            }
            vertices[w].neighbours = neighbours;
        }
        frontier = next;
    }
    Ok(DeltaTreeBall {
        radius,
        base,
        vertices,
    })
}

impl DeltaTreeBall {
    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[BallVertex] {
        &self.vertices
    }

    pub fn depth(&self, w: usize) -> usize {
        self.vertices[w].walk.len()
    }

    pub fn is_interior(&self, w: usize) -> bool {
        self.depth(w) < self.radius
    }

    /// Interior vertices have exactly one arc per colour of their projection.
    pub fn check_bijections(&self, d: &LocalActionDiagram) -> bool {
        self.vertices.iter().enumerate().all(|(w, bv)| {
            if !self.is_interior(w) {
                return bv.neighbours.is_empty();
            }
            let distinct: std::collections::HashSet<&usize> = bv.neighbours.iter().collect();
            distinct.len() == bv.neighbours.len()
                && bv.neighbours.len() == d.degree(bv.projection)
                && bv.neighbours.iter().enumerate().all(|(x, &n)| {
                    let nb = &self.vertices[n];
                    let back_ok = if nb.parent == Some(w) {
                        let a = d.arc_of_position(bv.projection)[x];
                        nb.projection == d.graph().terminus(a)
                            && d.positions(d.graph().reverse(a)).contains(&nb.inward.expect("child"))
                    } else {
                        bv.parent == Some(n) && bv.inward == Some(x)
                    };
                    back_ok
                })
        })
    }

    /// `σ(g)` at `v`: position `x` goes to the label at `g(v)` of the arc
    /// that `g` sends the `x`-arc at `v` to.
    pub fn local_action_at(&self, g: &[usize], v: usize) -> Result<Permutation> {
        self.local_action_into(self, g, v)
    }

    /// As [`local_action_at`](Self::local_action_at) for a map into another ball.
    pub fn local_action_into(&self, target: &DeltaTreeBall, g: &[usize], v: usize) -> Result<Permutation> {
        self.check_map_shape(target, g)?;
        if !self.is_interior(v) {
            return Err(Error::BoundaryVertex(v));
        }
        let gv = g[v];
        if !target.is_interior(gv) {
            return Err(Error::BoundaryVertex(gv));
        }
        let here = &self.vertices[v].neighbours;
        let there = &target.vertices[gv].neighbours;
        let images = here
            .iter()
            .map(|&n| {
                there.iter().position(|&m| m == g[n]).ok_or_else(|| {
                    Error::InvalidBallMap(format!("vertex {n} is adjacent to {v} but its image is not adjacent to {gv}"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(images)
    }

    fn check_map_shape(&self, target: &DeltaTreeBall, g: &[usize]) -> Result<()> {
        if g.len() != self.vertices.len() || target.vertices.len() != self.vertices.len() {
            return Err(Error::InvalidBallMap(format!(
                "map has {} entries for balls of {} and {} vertices",
                g.len(),
                self.vertices.len(),
                target.vertices.len()
            )));
        }
        Ok(())
    }

    /// Whether `g` is a root-fixing, π-respecting automorphism of the ball
    /// whose local action at each interior vertex lies in `G(π(v))`.
    pub fn is_in_u(&self, d: &LocalActionDiagram, g: &[usize]) -> Result<bool> {
        self.check_map_shape(self, g)?;
        let mut seen = vec![false; g.len()];
        if g.iter().any(|&x| x >= g.len() || std::mem::replace(&mut seen[x], true)) {
            return Err(Error::InvalidBallMap("not a bijection".into()));
        }
        if g[0] != 0 {
            return Ok(false);
        }
        for (w, bv) in self.vertices.iter().enumerate() {
            if self.vertices[g[w]].projection != bv.projection
                || bv.parent.map(|p| g[p]) != self.vertices[g[w]].parent
            {
                return Ok(false);
            }
        }
        for w in 0..self.vertices.len() {
            if self.is_interior(w) {
                let sigma = self.local_action_at(g, w)?;
                if !d.local_action(self.vertices[w].projection).contains(&sigma) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// One line per vertex (`vertex <index> <projection> <walk>`) then one
    /// per tree edge (`arc <parent> <child> <c> <d>`), colours by label.
    pub fn to_text(&self, d: &LocalActionDiagram) -> String {
        let g = d.graph();
        let label = |v: usize, x: usize| d.points(v)[x].to_string();
        let mut out = String::new();
        writeln!(
            out,
            "ball base={} radius={} vertices={}",
            g.vertex_id(self.base),
            self.radius,
            self.vertices.len()
        )
        .expect("string write");
        for (w, bv) in self.vertices.iter().enumerate() {
            let mut walk = Vec::new();
            let mut v = self.base;
            for &x in &bv.walk {
                walk.push(label(v, x));
                v = g.terminus(d.arc_of_position(v)[x]);
            }
            let walk = if walk.is_empty() { "-".to_string() } else { walk.join(",") };
            writeln!(out, "vertex {w} {} {walk}", g.vertex_id(bv.projection)).expect("string write");
        }
        for (w, bv) in self.vertices.iter().enumerate().skip(1) {
            let p = bv.parent.expect("non-root");
            let pv = &self.vertices[p];
            let c = label(pv.projection, *bv.walk.last().expect("non-root"));
            let dl = label(bv.projection, bv.inward.expect("non-root"));
            writeln!(out, "arc {p} {w} {c} {dl}").expect("string write");
        }
        out
    }
}

/// Counts the root-fixing ball maps coming from `U(Δ)`.
pub trait BallCounter: Named + Sync {
    fn count(&self, d: &LocalActionDiagram, base: usize, radius: usize, budget: u128) -> Result<BigUint>;
}

/// `|G(v_0)|` times, for every interior non-root vertex, the order of the
/// stabilizer of its inward colour. Builds no ball, but the budget still
/// caps the ball size, which bounds the number of factors.
pub struct FormulaCounter;

impl Named for FormulaCounter {
    fn name(&self) -> &'static str {
        "formula"
    }
}

impl BallCounter for FormulaCounter {
    fn count(&self, d: &LocalActionDiagram, base: usize, radius: usize, budget: u128) -> Result<BigUint> {
        d.ensure_valid()?;
        let g = d.graph();
        if base >= g.vertex_count() {
            return Err(Error::UnknownVertex(base.to_string()));
        }
        let predicted = predicted_ball_size(d, base, radius);
        if predicted > budget {
            return Err(Error::BudgetExceeded { predicted, budget });
        }
        if radius == 0 {
            return Ok(BigUint::from(1u32));
        }
        let stab: Vec<BigUint> = (0..g.arc_count())
            .map(|a| {
                let v = g.terminus(a);
                let x = d.positions(g.reverse(a)).start;
                let group = d.local_action(v);
                BigUint::from(group.order() / group.orbit_of(x).len())
            })
            .collect();
        // f[a]: count for the subtree entered along `a` with `k` levels below it
        let mut f = vec![BigUint::from(1u32); g.arc_count()];
        for _ in 1..radius {
            f = (0..g.arc_count())
                .map(|a| {
                    let w = g.terminus(a);
                    let mut total = stab[a].clone();
                    for b in g.out_arcs(w) {
                        let k = d.colours(b).len() - usize::from(b == g.reverse(a));
                        for _ in 0..k {
                            total *= &f[b];
                        }
                    }
                    total
                })
                .collect();
        }
        let mut total = BigUint::from(d.local_action(base).order());
        for a in g.out_arcs(base) {
            for _ in 0..d.colours(a).len() {
                total *= &f[a];
            }
        }
        Ok(total)
    }
}

/// Builds the ball and enumerates maps vertex by vertex: at each interior
/// vertex, every local group element compatible with the inward arc.
pub struct BacktrackCounter;

impl Named for BacktrackCounter {
    fn name(&self) -> &'static str {
        "backtrack"
    }
}

impl BallCounter for BacktrackCounter {
    fn count(&self, d: &LocalActionDiagram, base: usize, radius: usize, budget: u128) -> Result<BigUint> {
        let ball = build_ball_with(d, base, radius, budget, ReverseLabels::Minimum)?;
        if radius == 0 {
            return Ok(BigUint::from(1u32));
        }
        let root_choices = local_choices(&ball, d, 0, 0);
        let total: u64 = root_choices
            .par_iter()
            .map(|sigma| {
                let mut pending = Vec::new();
                push_children(&ball, 0, 0, sigma, &mut pending);
                extend(&ball, d, &mut pending)
            })
            .sum();
        Ok(BigUint::from(total))
    }
}

/// Elements `σ` of `G(π(w))` with `σ(inward(w)) = inward(w')`.
fn local_choices<'d>(ball: &DeltaTreeBall, d: &'d LocalActionDiagram, w: usize, w2: usize) -> Vec<&'d Permutation> {
    let (a, b) = (&ball.vertices[w], &ball.vertices[w2]);
    if a.projection != b.projection {
        return Vec::new();
    }
    let group: &PermGroup = d.local_action(a.projection);
    group
        .elements()
        .iter()
        .filter(|p| match (a.inward, b.inward) {
            (Some(x), Some(y)) => p.apply(x) == y,
            _ => true,
        })
        .collect()
}

fn push_children(ball: &DeltaTreeBall, w: usize, w2: usize, sigma: &Permutation, pending: &mut Vec<(usize, usize)>) {
    let (a, b) = (&ball.vertices[w], &ball.vertices[w2]);
    for (x, &n) in a.neighbours.iter().enumerate() {
        if Some(x) != a.inward {
            pending.push((n, b.neighbours[sigma.apply(x)]));
        }
    }
}

fn extend(ball: &DeltaTreeBall, d: &LocalActionDiagram, pending: &mut Vec<(usize, usize)>) -> u64 {
    let Some((w, w2)) = pending.pop() else {
        return 1;
    };
    let count = if !ball.is_interior(w) {
        u64::from(ball.vertices[w].projection == ball.vertices[w2].projection)
            * extend(ball, d, pending)
    } else {
        let mut total = 0;
        for sigma in local_choices(ball, d, w, w2) {
            let mark = pending.len();
            push_children(ball, w, w2, sigma, pending);
            total += extend(ball, d, pending);
            pending.truncate(mark);
        }
        total
    };
    pending.push((w, w2));
    count
}

pub fn ball_counters() -> Registry<dyn BallCounter> {
    let mut reg: Registry<dyn BallCounter> = Registry::new();
    reg.register(Box::new(FormulaCounter)).register(Box::new(BacktrackCounter));
    reg
}

/// Formula count, confirmed by enumeration when it is at most
/// [`CROSS_CHECK_LIMIT`].
pub fn count_u_ball_automorphisms(
    d: &LocalActionDiagram,
    base: usize,
    radius: usize,
    budget: u128,
) -> Result<BigUint> {
    let formula = FormulaCounter.count(d, base, radius, budget)?;
    if formula <= BigUint::from(CROSS_CHECK_LIMIT) {
        let explicit = BacktrackCounter.count(d, base, radius, budget)?;
        if explicit != formula {
            return Err(Error::CrossCheck(format!(
                "formula gives {formula}, enumeration gives {explicit}"
            )));
        }
    }
    Ok(formula)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{star_diagram, vt_diagram, OrbitPairing, StarFactor};

    fn vt(d: usize, gens: &str, pairing: &[usize]) -> LocalActionDiagram {
        let h = PermGroup::parse(d, gens).unwrap();
        vt_diagram(&h, &OrbitPairing::new(pairing.to_vec()).unwrap()).unwrap()
    }

    fn s3() -> LocalActionDiagram {
        vt(3, "(1,2,3),(1,2)", &[0])
    }

    #[test]
    fn ball_sizes() {
        let d = s3();
        for (r, n) in [(0, 1), (1, 4), (2, 10), (3, 22)] {
            let b = build_ball(&d, 0, r).unwrap();
            assert_eq!(b.vertex_count(), n);
            assert_eq!(predicted_ball_size(&d, 0, r), n as u128);
            assert!(b.check_bijections(&d));
        }
    }

    #[test]
    fn star_ball_projects_to_leaf() {
        let f = StarFactor {
            group: PermGroup::symmetric(3).unwrap(),
            subgroup: PermGroup::parse(3, "(1,2)").unwrap(),
        };
        let d = star_diagram(&[f]).unwrap();
        let b = build_ball(&d, 0, 1).unwrap();
        assert_eq!(b.vertex_count(), 4);
        assert!(b.vertices()[1..].iter().all(|v| v.projection == 1));
        let b2 = build_ball(&d, 0, 3).unwrap();
        assert!(b2.check_bijections(&d));
        assert_eq!(predicted_ball_size(&d, 0, 3), b2.vertex_count() as u128);
    }

    #[test]
    fn budget_is_enforced() {
        let err = build_ball_with(&s3(), 0, 30, 1000, ReverseLabels::Minimum).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { budget: 1000, .. }));
    }

    #[test]
    fn local_actions_of_maps() {
        let d = vt(3, "(2,3)", &[0, 1]);
        let b = build_ball(&d, 0, 1).unwrap();
        let id: Vec<usize> = (0..4).collect();
        assert!(b.local_action_at(&id, 0).unwrap().is_identity());
        assert!(b.is_in_u(&d, &id).unwrap());
        let swap23 = vec![0, 1, 3, 2];
        assert_eq!(b.local_action_at(&swap23, 0).unwrap().cycles(), vec![vec![1, 2]]);
        assert!(b.is_in_u(&d, &swap23).unwrap());
        let swap12 = vec![0, 2, 1, 3];
        assert_eq!(b.local_action_at(&swap12, 0).unwrap().cycles(), vec![vec![0, 1]]);
        assert!(!b.is_in_u(&d, &swap12).unwrap());
        assert!(matches!(b.local_action_at(&id, 1), Err(Error::BoundaryVertex(1))));
    }

    #[test]
    fn counts_for_sym3() {
        let d = s3();
        for (r, n) in [(0u32, 1u32), (1, 6), (2, 48), (3, 3072)] {
            let c = count_u_ball_automorphisms(&d, 0, r as usize, DEFAULT_BALL_BUDGET).unwrap();
            assert_eq!(c, BigUint::from(n));
        }
    }

    #[test]
    fn free_action_counts_are_constant() {
        let d = vt(3, "(1,2,3)", &[0]);
        for r in 1..5 {
            let c = count_u_ball_automorphisms(&d, 0, r, DEFAULT_BALL_BUDGET).unwrap();
            assert_eq!(c, BigUint::from(3u32));
        }
    }

    #[test]
    fn registry_lists_both_counters() {
        let reg = ball_counters();
        assert_eq!(reg.names(), ["formula", "backtrack"]);
        let d = vt(4, "(1,2),(3,4)", &[1, 0]);
        let f = reg.get("formula").unwrap().count(&d, 0, 3, DEFAULT_BALL_BUDGET).unwrap();
        let b = reg.get("backtrack").unwrap().count(&d, 0, 3, DEFAULT_BALL_BUDGET).unwrap();
        assert_eq!(f, b);
    }

    #[test]
    fn text_format() {
        let d = s3();
        let text = build_ball(&d, 0, 1).unwrap().to_text(&d);
        assert_eq!(
            text,
            "ball base=v radius=1 vertices=4\nvertex 0 v -\nvertex 1 v 1\nvertex 2 v 2\nvertex 3 v 3\narc 0 1 1 1\narc 0 2 2 1\narc 0 3 3 1\n"
        );
    }
}
