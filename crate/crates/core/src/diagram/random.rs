use rand::seq::SliceRandom;
use rand::Rng;

use super::LocalActionDiagram;
use crate::perm::{PermGroup, Permutation};
use crate::sgraph::{ArcSpec, SerreGraph};

/// Shape limits for [`random_diagram`].
#[derive(Clone, Copy, Debug)]
pub struct RandomShape {
    pub max_vertices: usize,
    /// Geometric edges, not counting self-reversed loops.
    pub max_edges: usize,
    pub max_self_reversed: usize,
    pub max_colours: usize,
}

impl Default for RandomShape {
    fn default() -> Self {
        Self {
            max_vertices: 6,
            max_edges: 10,
            max_self_reversed: 2,
            max_colours: 3,
        }
    }
}

/// A valid diagram: a random spanning tree plus extra edges and loops, colour
/// sets of random size (half of them singletons), and at each vertex a
/// group acting on every colour set as a cycle or as its full symmetric
/// group, sometimes with two cycles fused into one generator.
pub fn random_diagram<R: Rng + ?Sized>(rng: &mut R, shape: RandomShape) -> LocalActionDiagram {
    let n = rng.gen_range(1..=shape.max_vertices.max(1));
    let max_edges = shape.max_edges.max(n - 1);
    let mut pairs: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    let extra = rng.gen_range(0..=max_edges - (n - 1));
    for _ in 0..extra {
        pairs.push((rng.gen_range(0..n), rng.gen_range(0..n)));
    }
    let loops: Vec<usize> = (0..rng.gen_range(0..=shape.max_self_reversed))
        .map(|_| rng.gen_range(0..n))
        .collect();

    let mut arcs = Vec::new();
    for (i, &(u, w)) in pairs.iter().enumerate() {
        arcs.push(ArcSpec::new(format!("e{i}"), format!("v{u}"), format!("f{i}")));
        arcs.push(ArcSpec::new(format!("f{i}"), format!("v{w}"), format!("e{i}")));
    }
    for (i, &v) in loops.iter().enumerate() {
        arcs.push(ArcSpec::new(format!("s{i}"), format!("v{v}"), format!("s{i}")));
    }
    arcs.shuffle(rng);
    let vertices = (0..n).map(|v| format!("v{v}")).collect();
    let graph = SerreGraph::new(vertices, arcs).expect("well-formed random graph");

    let mut label = 0;
    let colours: Vec<Vec<String>> = (0..graph.arc_count())
        .map(|_| {
            let k = if rng.gen_bool(0.5) { 1 } else { rng.gen_range(1..=shape.max_colours.max(1)) };
            (0..k)
                .map(|_| {
                    label += 1;
                    format!("c{label}")
                })
                .collect()
        })
        .collect();

    let mut local = Vec::with_capacity(n);
    for v in 0..n {
        let mut blocks = Vec::new();
        let mut start = 0;
        for a in graph.out_arcs(v) {
            blocks.push(start..start + colours[a].len());
            start += colours[a].len();
        }
        let degree = start;
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut gens = Vec::new();
        for b in blocks.iter().filter(|b| b.len() > 1) {
            cycles.push(b.clone().collect());
            if b.len() > 2 && rng.gen_bool(0.5) {
                gens.push(Permutation::from_cycles(degree, &[vec![b.start, b.start + 1]]).expect("transposition"));
            }
        }
        cycles.shuffle(rng);
        let all_cycles = cycles.clone();
        while !cycles.is_empty() {
            let take = if cycles.len() > 1 && rng.gen_bool(0.3) { 2 } else { 1 };
            let group: Vec<Vec<usize>> = cycles.drain(..take).collect();
            gens.push(Permutation::from_cycles(degree, &group).expect("disjoint cycles"));
        }
        // too many independent factors for the element cap: fuse everything
        let group = PermGroup::new(degree, gens).unwrap_or_else(|_| {
            let fused = Permutation::from_cycles(degree, &all_cycles).expect("disjoint cycles");
            PermGroup::new(degree, vec![fused]).expect("cyclic group of small order")
        });
        local.push(group);
    }
    LocalActionDiagram::new(graph, colours, local).expect("consistent sizes")
}
