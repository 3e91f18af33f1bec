//! `G/G⁺` against a direct graph-of-groups reconstruction: vertex groups
//! `G(v)/G(v)⁺` as regular coset actions, a `C_2` for every self-reversed
//! arc, and free rank from a BFS spanning tree.

use std::collections::VecDeque;

use lad_core::census::{classify_degree, enumerate_vt_actions};
use lad_core::diagram::{isomorphic, random_diagram, vt_diagram, LocalActionDiagram, OrbitPairing, RandomShape};
use lad_core::perm::{PermGroup, Permutation};
use lad_core::quotient::{
    abstract_name, free_product_of_quotient, plus_quotient_diagram, recognize_group, FreeProductExpr,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// `G` acting on the cosets of a normal subgroup `N` by left multiplication.
fn regular_quotient(g: &PermGroup, n: &PermGroup) -> PermGroup {
    let mut cosets: Vec<Vec<Permutation>> = Vec::new();
    for x in g.elements() {
        if !cosets.iter().any(|c| c.contains(x)) {
            cosets.push(n.elements().iter().map(|m| x.compose(m)).collect());
        }
    }
    let index = |p: &Permutation| cosets.iter().position(|c| c.contains(p)).unwrap();
    let gens = g
        .generators()
        .iter()
        .map(|s| Permutation::from_images(cosets.iter().map(|c| index(&s.compose(&c[0]))).collect()).unwrap())
        .collect();
    PermGroup::new(cosets.len(), gens).unwrap()
}

fn spanning_tree_rank(d: &LocalActionDiagram) -> usize {
    let g = d.graph();
    let mut seen = vec![false; g.vertex_count()];
    let mut tree_edges = 0;
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(v) = queue.pop_front() {
        for a in g.out_arcs(v) {
            let w = g.terminus(a);
            if !seen[w] {
                seen[w] = true;
                tree_edges += 1;
                queue.push_back(w);
            }
        }
    }
    let non_loop_pairs = (0..g.arc_count()).filter(|&a| g.reverse(a) != a).count() / 2;
    non_loop_pairs - tree_edges
}

fn oracle(d: &LocalActionDiagram) -> FreeProductExpr {
    let g = d.graph();
    let factors = d
        .local_actions()
        .iter()
        .map(|h| regular_quotient(h, &h.plus_subgroup()))
        .filter(|q| q.order() > 1)
        .map(|q| abstract_name(&recognize_group(&q).name))
        .collect();
    let c2 = (0..g.arc_count()).filter(|&a| g.reverse(a) == a).count();
    FreeProductExpr::new(factors, c2, spanning_tree_rank(d))
}

#[test]
fn census_rows_match_oracle() {
    for degree in 0..=6 {
        for action in enumerate_vt_actions(degree).unwrap() {
            let d = action.diagram().unwrap();
            let computed = free_product_of_quotient(&d).unwrap();
            let expected = oracle(&d);
            assert!(
                computed.same_abstract_group(&expected),
                "d={degree} {}: computed {computed}, oracle {expected}",
                action.pairing_notation()
            );
        }
    }
}

#[test]
fn random_diagrams_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..100 {
        let d = random_diagram(&mut rng, RandomShape::default());
        let computed = free_product_of_quotient(&d).unwrap();
        assert!(computed.same_abstract_group(&oracle(&d)), "{computed} vs {}", oracle(&d));
    }
}

#[test]
fn free_rows_follow_the_pairing_formula() {
    for row in (0..=6).flat_map(|d| classify_degree(d).unwrap()) {
        if !row.lpc.is_empty() {
            continue;
        }
        let h = &row.action.group;
        let a = row.action.pairing.fixed_points();
        let b = row.action.pairing.transpositions().len();
        let factors = if h.is_trivial() { vec![] } else { vec![recognize_group(h).name] };
        let expected = FreeProductExpr::new(factors, a, b);
        assert_eq!(row.quotient, expected, "d={} {} {}", row.degree, row.local_action, row.pairing);
    }
}

#[test]
fn quotient_diagram_is_idempotent_and_free() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..60 {
        let d = random_diagram(&mut rng, RandomShape::default());
        let once = plus_quotient_diagram(&d).unwrap();
        assert!(once.is_free() && once.is_valid());
        let twice = plus_quotient_diagram(&once).unwrap();
        assert!(isomorphic(&once, &twice).unwrap().is_some());
    }
}

#[test]
fn printed_errata_values_disagree_with_oracle() {
    let vt = |d, gens, p: &[usize]| {
        vt_diagram(&PermGroup::parse(d, gens).unwrap(), &OrbitPairing::new(p.to_vec()).unwrap()).unwrap()
    };
    let cases = [
        (vt(4, "(1,2)(3,4)", &[0, 1]), "C_2^{*2}"),
        (vt(4, "(1,2)(3,4)", &[1, 0]), "Z"),
        (vt(4, "(1,2,3,4),(1,3)", &[0]), "S_2*Z"),
        (vt(5, "(1,2,3,4,5)", &[0]), "C_5*Z"),
        (vt(5, "(4,5)", &[1, 0, 3, 2]), "C_2*Z^{*2}"),
    ];
    for (d, printed) in cases {
        let printed = FreeProductExpr::parse(printed).unwrap();
        let expected = oracle(&d);
        assert!(free_product_of_quotient(&d).unwrap().same_abstract_group(&expected));
        assert!(!printed.same_abstract_group(&expected), "{printed}");
    }
}
