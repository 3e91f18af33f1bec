use super::{LocalActionDiagram, OrbitPairing};
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};
use crate::quotient::free_product_of_quotient;
use crate::sgraph::{ArcSpec, SerreGraph};

/// Single-vertex diagram `v` with one arc `a{i}` per orbit of `h`; colours
/// are the orbit's points written one-based.
pub fn vt_diagram(h: &PermGroup, pairing: &OrbitPairing) -> Result<LocalActionDiagram> {
    let orbits = h.orbits();
    if pairing.len() != orbits.len() {
        return Err(Error::InvalidPairing(format!(
            "pairing on {} orbits for a group with {} orbits",
            pairing.len(),
            orbits.len()
        )));
    }
    let arc = |i: usize| format!("a{}", i + 1);
    let arcs = (0..orbits.len())
        .map(|i| ArcSpec::new(arc(i), "v", arc(pairing.image(i))))
        .collect();
    let graph = SerreGraph::new(vec!["v".into()], arcs)?;
    let colours = orbits
        .iter()
        .map(|o| o.iter().map(|x| (x + 1).to_string()).collect())
        .collect();
    // position of each point once X_v is ordered orbit by orbit
    let mut position = vec![0; h.degree()];
    for (i, &x) in orbits.iter().flatten().enumerate() {
        position[x] = i;
    }
    let relabel = Permutation::from_images(position)?;
    LocalActionDiagram::new(graph, colours, vec![h.conjugate(&relabel)])
}

/// One leaf of a star: a group with a subgroup whose conjugates generate
/// it and whose core is trivial.
#[derive(Clone, Debug)]
pub struct StarFactor {
    pub group: PermGroup,
    pub subgroup: PermGroup,
}

/// Star with centre `v0` and leaves `v1..vn`. The arc `a{i}` from the centre
/// carries colours `3i, 3i+1, 3i+2` permuted by the `i`-th factor of
/// `Sym(3)^n`; its reverse `r{i}` carries the left cosets of the `i`-th
/// subgroup, permuted by left translation.
pub fn star_diagram(factors: &[StarFactor]) -> Result<LocalActionDiagram> {
    let mut problems = Vec::new();
    for (i, f) in factors.iter().enumerate() {
        let n = i + 1;
        let (g, u) = (&f.group, &f.subgroup);
        if g.degree() != u.degree() || !u.is_subgroup_of(g) {
            problems.push(format!("factor {n}: subgroup is not contained in the group"));
            continue;
        }
        if u.is_trivial() || u.order() == g.order() {
            problems.push(format!("factor {n}: subgroup must be proper and nontrivial"));
        }
        let mut conj = Vec::new();
        for x in g.elements() {
            for s in u.generators() {
                conj.push(s.conjugate_by(x));
            }
        }
        if g.subgroup(conj)?.order() != g.order() {
            problems.push(format!(
                "factor {n}: group is not generated by conjugates of the subgroup"
            ));
        }
        let core: Vec<_> = u
            .elements()
            .iter()
            .filter(|e| g.elements().iter().all(|x| u.contains(&e.conjugate_by(x))))
            .collect();
        if core.len() > 1 {
            problems.push(format!("factor {n}: core of the subgroup is nontrivial"));
        }
    }
    if factors.is_empty() {
        problems.push("at least one factor is required".into());
    }
    if !problems.is_empty() {
        return Err(Error::StarHypotheses(problems));
    }

    let n = factors.len();
    let mut vertices = vec!["v0".to_string()];
    let mut arcs = Vec::new();
    let mut colours = Vec::new();
    for i in 1..=n {
        arcs.push(ArcSpec::new(format!("a{i}"), "v0", format!("r{i}")));
        colours.push((3 * i..3 * i + 3).map(|c| c.to_string()).collect::<Vec<_>>());
    }
    let mut local = Vec::new();
    let mut centre_gens = Vec::new();
    for i in 0..n {
        for cycle in [vec![3 * i, 3 * i + 1], vec![3 * i, 3 * i + 1, 3 * i + 2]] {
            centre_gens.push(Permutation::from_cycles(3 * n, &[cycle])?);
        }
    }
    local.push(PermGroup::new(3 * n, centre_gens)?);
    for (i, f) in factors.iter().enumerate() {
        let n = i + 1;
        vertices.push(format!("v{n}"));
        arcs.push(ArcSpec::new(format!("r{n}"), format!("v{n}"), format!("a{n}")));
        let cosets = left_cosets(&f.group, &f.subgroup);
        colours.push((1..=cosets.len()).map(|k| format!("c{n}.{k}")).collect());
        local.push(translation_action(&f.group, &cosets)?);
    }
    let graph = SerreGraph::new(vertices, arcs)?;
    LocalActionDiagram::new(graph, colours, local)
}

/// Left cosets `gU` as sorted element lists, ordered by first appearance in `g`'s element order.
fn left_cosets(g: &PermGroup, u: &PermGroup) -> Vec<Vec<Permutation>> {
    let mut cosets: Vec<Vec<Permutation>> = Vec::new();
    for x in g.elements() {
        if cosets.iter().any(|c| c.binary_search(x).is_ok()) {
            continue;
        }
        let mut c: Vec<Permutation> = u.elements().iter().map(|e| x.compose(e)).collect();
        c.sort();
        cosets.push(c);
    }
    cosets
}

fn translation_action(g: &PermGroup, cosets: &[Vec<Permutation>]) -> Result<PermGroup> {
    let index_of = |p: &Permutation| {
        cosets
            .iter()
            .position(|c| c.binary_search(p).is_ok())
            .expect("cosets cover the group")
    };
    let gens = g
        .generators()
        .iter()
        .map(|s| Permutation::from_images(cosets.iter().map(|c| index_of(&s.compose(&c[0]))).collect()))
        .collect::<Result<Vec<_>>>()?;
    PermGroup::new(cosets.len(), gens)
}

/// The two-vertex diagram `v1`, `v2` obtained from a single-vertex diagram
/// whose `G/G⁺` is `C_2`: each arc `a` becomes `a@1` from `v1` and `a@2`
/// from `v2`, with `reverse(a@1) = reverse(a)@2`. Colours at `v2` carry a
/// trailing `'`.
pub fn double_diagram(d: &LocalActionDiagram) -> Result<LocalActionDiagram> {
    let g = d.graph();
    if g.vertex_count() != 1 {
        return Err(Error::Precondition("double needs a single-vertex diagram".into()));
    }
    d.ensure_valid()?;
    let q = free_product_of_quotient(d)?;
    if !q.is_single_c2() {
        return Err(Error::Precondition(format!("quotient is {q}, not C_2")));
    }
    let name = |a: usize, side: usize| format!("{}@{side}", g.arc_id(a));
    let mut arcs = Vec::new();
    let mut colours = Vec::new();
    for side in [1, 2] {
        let other = 3 - side;
        for a in 0..g.arc_count() {
            arcs.push(ArcSpec::new(name(a, side), format!("v{side}"), name(g.reverse(a), other)));
            colours.push(
                d.colours(a)
                    .iter()
                    .map(|c| if side == 1 { c.clone() } else { format!("{c}'") })
                    .collect(),
            );
        }
    }
    let graph = SerreGraph::new(vec!["v1".into(), "v2".into()], arcs)?;
    let h = d.local_action(0).clone();
    LocalActionDiagram::new(graph, colours, vec![h.clone(), h])
}
