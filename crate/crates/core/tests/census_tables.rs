//! Classification rows for degree at most 5 against the reference table,
//! and the enumeration against diagram isomorphism.

use lad_core::census::{
    census_counts, classify_degree, enumerate_vt_actions, errata_report, nondiscrete_non_s_count, ClassificationRow,
    REFERENCE_ROWS,
};
use lad_core::diagram::isomorphic;
use lad_core::quotient::FreeProductExpr;

fn rows_up_to_five() -> Vec<ClassificationRow> {
    (0..=5).flat_map(|d| classify_degree(d).unwrap()).collect()
}

#[test]
fn every_reference_row_has_a_computed_row() {
    let rows = rows_up_to_five();
    assert_eq!(rows.len(), REFERENCE_ROWS.len());
    assert_eq!(REFERENCE_ROWS.len(), 70);
    for r in REFERENCE_ROWS {
        assert!(
            rows.iter().any(|row| row.degree == r.0 && row.local_action.as_str() == r.1 && row.pairing == r.2),
            "no row for {r:?}"
        );
    }
}

#[test]
fn structural_columns_match_exactly() {
    for row in rows_up_to_five() {
        let r = row.reference().unwrap();
        assert_eq!(row.lpc_text(), r.3, "{r:?}");
        assert_eq!(row.fixed_end_text(), r.4, "{r:?}");
        assert_eq!(row.plus_local.as_str(), r.6, "{r:?}");
    }
}

#[test]
fn quotient_column_differs_only_on_known_rows() {
    let errata: Vec<(usize, String, String)> = errata_report(&rows_up_to_five())
        .into_iter()
        .map(|e| {
            assert_eq!(e.column, "quotient");
            (e.degree, e.local_action, e.pairing)
        })
        .collect();
    let expected = [
        (4, "C_2^+", "id"),
        (4, "C_2^+", "[22]"),
        (4, "D_8", "id"),
        (5, "C_2^-", "[11,12]"),
        (5, "C_5", "id"),
    ];
    let expected: Vec<(usize, String, String)> =
        expected.iter().map(|&(d, a, p)| (d, a.to_string(), p.to_string())).collect();
    assert_eq!(errata, expected);
}

#[test]
fn printed_quotients_parse() {
    for r in REFERENCE_ROWS {
        let e = FreeProductExpr::parse(r.5).unwrap();
        assert_eq!(FreeProductExpr::parse(&e.to_string()).unwrap(), e);
    }
}

#[test]
fn non_s_count() {
    assert_eq!(nondiscrete_non_s_count(&rows_up_to_five()).unwrap(), 36);
}

#[test]
fn counts_through_degree_six() {
    let counts: Vec<(usize, usize)> =
        census_counts(0, 6).unwrap().iter().map(|c| (c.subgroup_classes, c.vt_actions)).collect();
    assert_eq!(counts, [(1, 1), (1, 1), (2, 3), (4, 6), (11, 19), (19, 40), (56, 125)]);
}

#[test]
fn enumerated_actions_are_pairwise_non_isomorphic() {
    for d in 2..=5 {
        let diagrams: Vec<_> = enumerate_vt_actions(d).unwrap().iter().map(|a| a.diagram().unwrap()).collect();
        for i in 0..diagrams.len() {
            for j in i + 1..diagrams.len() {
                assert!(isomorphic(&diagrams[i], &diagrams[j]).unwrap().is_none(), "d={d}: {i} ~ {j}");
            }
        }
    }
}

#[test]
fn enumeration_is_deterministic() {
    let a: Vec<String> = enumerate_vt_actions(5).unwrap().iter().map(|x| format!("{:?}{}", x.group.generators(), x.pairing)).collect();
    let b: Vec<String> = enumerate_vt_actions(5).unwrap().iter().map(|x| format!("{:?}{}", x.group.generators(), x.pairing)).collect();
    assert_eq!(a, b);
}
