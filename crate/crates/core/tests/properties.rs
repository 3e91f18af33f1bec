//! Randomized invariants.

use lad_core::diagram::{isomorphic, random_diagram, LocalActionDiagram, OrbitPairing, RandomShape};
use lad_core::orient::{analyze_action, check_scpo, enumerate_scpos};
use lad_core::perm::subgroup_classes;
use lad_core::quotient::{free_product_of_quotient, plus_quotient_diagram, FreeProductExpr};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn diagram(seed: u64) -> LocalActionDiagram {
    let shape = RandomShape {
        max_vertices: 4,
        max_edges: 6,
        ..RandomShape::default()
    };
    random_diagram(&mut ChaCha8Rng::seed_from_u64(seed), shape)
}

#[test]
fn orbit_stabilizer_on_class_representatives() {
    for degree in 1..=6 {
        for h in subgroup_classes(degree).unwrap() {
            for x in 0..degree {
                let stab = h.point_stabilizer(x).unwrap();
                assert_eq!(h.order(), h.orbit_of(x).len() * stab.order());
            }
        }
    }
}

fn expr() -> impl Strategy<Value = FreeProductExpr> {
    let names = prop::sample::select(vec!["S_2", "C_2^+", "C_3", "S_3", "V^-", "A_4", "D_{10}", "C_{2+3}", "S_{3+2}"]);
    (prop::collection::vec(names, 0..4), 0usize..4, 0usize..4)
        .prop_map(|(f, c2, rank)| FreeProductExpr::new(f.into_iter().map(String::from).collect(), c2, rank))
}

fn pairing() -> impl Strategy<Value = (OrbitPairing, Vec<usize>)> {
    (1usize..7, any::<u64>()).prop_flat_map(|(n, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut free: Vec<usize> = (0..n).collect();
        let mut images: Vec<usize> = (0..n).collect();
        while let Some(a) = free.pop() {
            if !free.is_empty() && rng.gen_bool(0.5) {
                let b = free.remove(rng.gen_range(0..free.len()));
                images[a] = b;
                images[b] = a;
            }
        }
        (Just(OrbitPairing::new(images).unwrap()), prop::collection::vec(1usize..4, n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn expression_render_parse_round_trip(e in expr()) {
        let back = FreeProductExpr::parse(&e.to_string()).unwrap();
        prop_assert_eq!(back, e);
    }

    #[test]
    fn pairing_notation_round_trip((p, sizes) in pairing()) {
        let text = p.notation(&sizes);
        let back = OrbitPairing::parse_notation(&text, &sizes).unwrap();
        prop_assert_eq!(back.notation(&sizes), text);
        prop_assert_eq!(back.transpositions().len(), p.transpositions().len());
    }

    #[test]
    fn json_round_trip(seed in any::<u64>()) {
        let d = diagram(seed);
        let back = LocalActionDiagram::from_json(&d.to_json()).unwrap();
        prop_assert!(isomorphic(&d, &back).unwrap().is_some());
        prop_assert_eq!(back.to_json(), d.to_json());
    }

    #[test]
    fn invariants_survive_relabelling(seed in any::<u64>()) {
        let d = diagram(seed);
        let e = d.shuffled(&mut ChaCha8Rng::seed_from_u64(seed ^ 0x5eed));
        prop_assert!(e.is_valid());
        prop_assert!(isomorphic(&d, &e).unwrap().is_some());
        let (a, b) = (analyze_action(&d).unwrap(), analyze_action(&e).unwrap());
        prop_assert_eq!(a.action_type, b.action_type);
        prop_assert_eq!(a.scpo_count, b.scpo_count);
        prop_assert_eq!(a.is_free, b.is_free);
        prop_assert_eq!(free_product_of_quotient(&d).unwrap(), free_product_of_quotient(&e).unwrap());
    }

    #[test]
    fn plus_quotient_is_idempotent(seed in any::<u64>()) {
        let once = plus_quotient_diagram(&diagram(seed)).unwrap();
        let twice = plus_quotient_diagram(&once).unwrap();
        prop_assert!(isomorphic(&once, &twice).unwrap().is_some());
    }

    #[test]
    fn enumerated_orientations_pass_the_checker(seed in any::<u64>()) {
        let d = diagram(seed);
        for o in enumerate_scpos(&d) {
            prop_assert!(check_scpo(&d, o.arcs()).is_ok());
        }
    }
}
