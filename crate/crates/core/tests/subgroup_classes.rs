//! Subgroup classes of Sym(d): totals against a brute-force closure oracle
//! for small degree, and class counts for larger degree.

use std::collections::HashSet;

use lad_core::perm::{conjugate_in_sym, subgroup_class_data, PermGroup, Permutation};

/// Every subgroup of Sym(d), found by closing all subsets grown one element at a time.
fn all_subgroups(d: usize) -> HashSet<Vec<Permutation>> {
    let sym = PermGroup::symmetric(d).unwrap();
    let mut found: HashSet<Vec<Permutation>> = HashSet::new();
    let mut frontier = vec![PermGroup::trivial(d)];
    found.insert(frontier[0].elements().to_vec());
    while let Some(h) = frontier.pop() {
        for g in sym.elements() {
            if h.contains(g) {
                continue;
            }
            let mut gens = h.generators().to_vec();
            gens.push(g.clone());
            let k = PermGroup::new(d, gens).unwrap();
            if found.insert(k.elements().to_vec()) {
                frontier.push(k);
            }
        }
    }
    found
}

#[test]
fn totals_match_brute_force() {
    for d in 1..=4 {
        let expected = all_subgroups(d).len();
        let total: usize = subgroup_class_data(d).unwrap().iter().map(|c| c.class_size).sum();
        assert_eq!(total, expected, "degree {d}");
    }
    assert_eq!(all_subgroups(4).len(), 30);
}

#[test]
fn class_counts_through_degree_seven() {
    let counts: Vec<usize> = (3..=7).map(|d| subgroup_class_data(d).unwrap().len()).collect();
    assert_eq!(counts, vec![4, 11, 19, 56, 96]);
}

#[test]
fn representatives_pairwise_nonconjugate() {
    for d in 2..=5 {
        let classes = subgroup_class_data(d).unwrap();
        for (i, a) in classes.iter().enumerate() {
            for b in &classes[i + 1..] {
                let found = conjugate_in_sym(&a.representative, &b.representative).unwrap();
                assert!(found.is_none(), "{:?} ~ {:?}", a.representative, b.representative);
            }
        }
    }
}
