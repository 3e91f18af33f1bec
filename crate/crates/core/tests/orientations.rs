//! Strongly confluent partial orientations against a brute-force filter over
//! every choice of at most one outgoing arc per vertex.

use std::collections::BTreeSet;

use lad_core::diagram::{random_diagram, vt_diagram, LocalActionDiagram, OrbitPairing, RandomShape};
use lad_core::orient::{analyze_action, classify_scpo, enumerate_scpos, ActionType, ScpoKind};
use lad_core::perm::PermGroup;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn satisfies_conditions(d: &LocalActionDiagram, o: &BTreeSet<usize>) -> bool {
    let g = d.graph();
    for &a in o {
        if o.contains(&g.reverse(a)) || d.colours(a).len() != 1 {
            return false;
        }
        if o.iter().filter(|&&b| g.origin(b) == g.origin(a)).count() > 1 {
            return false;
        }
        let v = g.origin(a);
        for b in 0..g.arc_count() {
            if g.terminus(b) == v && b != g.reverse(a) && !o.contains(&b) {
                return false;
            }
        }
    }
    true
}

fn brute_force(d: &LocalActionDiagram) -> BTreeSet<BTreeSet<usize>> {
    let g = d.graph();
    let options: Vec<Vec<Option<usize>>> = (0..g.vertex_count())
        .map(|v| std::iter::once(None).chain(g.out_arcs(v).into_iter().map(Some)).collect())
        .collect();
    let mut out = BTreeSet::new();
    let mut index = vec![0; options.len()];
    loop {
        let o: BTreeSet<usize> = index.iter().zip(&options).filter_map(|(&i, opts)| opts[i]).collect();
        if satisfies_conditions(d, &o) {
            out.insert(o);
        }
        let mut k = 0;
        loop {
            if k == index.len() {
                return out;
            }
            index[k] += 1;
            if index[k] < options[k].len() {
                break;
            }
            index[k] = 0;
            k += 1;
        }
    }
}

#[test]
fn random_diagrams_match_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut nonempty = 0;
    for _ in 0..150 {
        let d = random_diagram(&mut rng, RandomShape::default());
        let found: Vec<BTreeSet<usize>> = enumerate_scpos(&d).into_iter().map(|o| o.arcs().clone()).collect();
        let as_set: BTreeSet<BTreeSet<usize>> = found.iter().cloned().collect();
        assert_eq!(as_set.len(), found.len(), "duplicates");
        assert_eq!(as_set, brute_force(&d));
        nonempty += usize::from(found.len() > 1);
        for o in enumerate_scpos(&d) {
            let class = classify_scpo(&d, &o).unwrap();
            match class.kind {
                ScpoKind::Cotree => assert!(d.graph().is_cotree(&class.attractor)),
                ScpoKind::Cycle { ref arcs } => assert_eq!(arcs.len(), class.attractor.len()),
            }
        }
    }
    assert!(nonempty > 20, "too few diagrams with a nonempty orientation: {nonempty}");
}

fn vt(d: usize, gens: &str, pairing: &[usize]) -> LocalActionDiagram {
    vt_diagram(&PermGroup::parse(d, gens).unwrap(), &OrbitPairing::new(pairing.to_vec()).unwrap()).unwrap()
}

#[test]
fn action_types_of_single_vertex_diagrams() {
    let cases = [
        (vt(0, "()", &[]), ActionType::FixedVertex),
        (vt(1, "()", &[0]), ActionType::Inversion),
        (vt(2, "()", &[1, 0]), ActionType::Lineal),
        (vt(3, "(2,3)", &[1, 0]), ActionType::Focal),
        (vt(3, "(1,2,3)", &[0]), ActionType::GeneralType),
        (vt(4, "(1,2,3)", &[1, 0]), ActionType::Focal),
    ];
    for (d, expected) in cases {
        assert_eq!(analyze_action(&d).unwrap().action_type, expected);
    }
}

#[test]
fn free_diagrams_are_reported_free() {
    let d = vt(4, "(1,2)(3,4)", &[1, 0]);
    let r = analyze_action(&d).unwrap();
    assert!(r.is_free);
    let e = vt(4, "(1,2)", &[0, 1, 2]);
    assert!(!analyze_action(&e).unwrap().is_free);
}
