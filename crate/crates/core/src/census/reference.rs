//! Published reference values: the classification of every vertex-transitive
//! action for `d ≤ 5`, and the per-degree counts up to `d = 11`.

/// Columns: degree, local action, pairing, l.p.c., fixed end, `G/G⁺`, `G⁺` local action.
pub type ReferenceRow = (usize, &'static str, &'static str, &'static str, &'static str, &'static str, &'static str);

pub const REFERENCE_ROWS: &[ReferenceRow] = &[
    (0, "1", "id", "∅", "N/A", "1", "1"),
    (1, "1", "id", "∅", "N/A", "C_2", "1"),
    (2, "1", "id", "∅", "No", "C_2^{*2}", "1"),
    (2, "1", "[11]", "∅", "Yes", "Z", "1"),
    (2, "S_2", "id", "∅", "No", "S_2*C_2", "1"),
    (3, "1", "id", "∅", "No", "C_2^{*3}", "1"),
    (3, "1", "[11]", "∅", "No", "C_2*Z", "1"),
    (3, "S_2", "id", "{2}", "No", "C_2^{*2}", "S_2"),
    (3, "S_2", "[12]", "{2}", "Yes", "Z", "S_2"),
    (3, "C_3", "id", "∅", "No", "C_3*C_2", "1"),
    (3, "S_3", "id", "{2}", "No", "C_2", "S_3"),
    (4, "1", "id", "∅", "No", "C_2^{*4}", "1"),
    (4, "1", "[11]", "∅", "No", "C_2^{*2}*Z", "1"),
    (4, "1", "[11,11]", "∅", "No", "Z^{*2}", "1"),
    (4, "C_2^-", "id", "{2}", "No", "C_2^{*3}", "C_2^-"),
    (4, "C_2^-", "[11]", "{2}", "No", "C_2*Z", "C_2^-"),
    (4, "C_2^-", "[12]", "{2}", "No", "C_2*Z", "C_2^-"),
    (4, "C_2^+", "id", "∅", "No", "C_2^{*2}", "1"),
    (4, "C_2^+", "[22]", "∅", "No", "Z", "1"),
    (4, "C_3", "id", "{3}", "No", "C_2^{*2}", "C_3"),
    (4, "C_3", "[13]", "{3}", "Yes", "Z", "C_3"),
    (4, "C_4", "id", "∅", "No", "C_4*C_2", "1"),
    (4, "V^-", "id", "{2}", "No", "C_2^{*2}", "V^-"),
    (4, "V^-", "[22]", "{2}", "No", "Z", "V^-"),
    (4, "V^+", "id", "∅", "No", "V^+*C_2", "1"),
    (4, "S_3", "id", "{2,3}", "No", "C_2^{*2}", "S_3"),
    (4, "S_3", "[13]", "{2,3}", "Yes", "Z", "S_3"),
    (4, "D_8", "id", "{2}", "No", "S_2*Z", "V^-"),
    (4, "A_4", "id", "{3}", "No", "C_2", "A_4"),
    (4, "S_4", "id", "{2,3}", "No", "C_2", "S_4"),
    (5, "1", "id", "∅", "No", "C_2^{*5}", "1"),
    (5, "1", "[11]", "∅", "No", "C_2^{*3}*Z", "1"),
    (5, "1", "[11,11]", "∅", "No", "C_2*Z^{*2}", "1"),
    (5, "C_2^-", "id", "{2}", "No", "C_2^{*4}", "C_2^-"),
    (5, "C_2^-", "[11]", "{2}", "No", "C_2^{*2}*Z", "C_2^-"),
    (5, "C_2^-", "[12]", "{2}", "No", "C_2^{*2}*Z", "C_2^-"),
    (5, "C_2^-", "[11,12]", "{2}", "No", "C_2*Z^{*2}", "C_2^-"),
    (5, "C_2^+", "id", "{2}", "No", "C_2^{*3}", "C_2^+"),
    (5, "C_2^+", "[12]", "{2}", "No", "C_2*Z", "C_2^+"),
    (5, "C_2^+", "[22]", "{2}", "No", "C_2*Z", "C_2^+"),
    (5, "C_3", "id", "{3}", "No", "C_2^{*3}", "C_3"),
    (5, "C_3", "[11]", "{3}", "No", "C_2*Z", "C_3"),
    (5, "C_3", "[13]", "{3}", "No", "C_2*Z", "C_3"),
    (5, "C_4", "id", "{2}", "No", "C_2^{*2}", "C_4"),
    (5, "C_4", "[14]", "{2}", "Yes", "Z", "C_4"),
    (5, "V^-", "id", "{2}", "No", "C_2^{*3}", "V^-"),
    (5, "V^-", "[12]", "{2}", "No", "C_2*Z", "V^-"),
    (5, "V^-", "[22]", "{2}", "No", "C_2*Z", "V^-"),
    (5, "V^+", "id", "{2}", "No", "C_2^{*2}", "V^+"),
    (5, "V^+", "[14]", "{2}", "Yes", "Z", "V^+"),
    (5, "S_3", "id", "{2,3}", "No", "C_2^{*3}", "S_3"),
    (5, "S_3", "[11]", "{2,3}", "No", "C_2*Z", "S_3"),
    (5, "S_3", "[13]", "{2,3}", "No", "C_2*Z", "S_3"),
    (5, "D_8", "id", "{2}", "No", "C_2^{*2}", "D_8"),
    (5, "D_8", "[14]", "{2}", "Yes", "Z", "D_8"),
    (5, "A_4", "id", "{2,3}", "No", "C_2^{*2}", "A_4"),
    (5, "A_4", "[14]", "{2,3}", "Yes", "Z", "A_4"),
    (5, "S_4", "id", "{2,3}", "No", "C_2^{*2}", "S_4"),
    (5, "S_4", "[14]", "{2,3}", "Yes", "Z", "S_4"),
    (5, "C_{3+2}", "id", "{2,3}", "No", "C_2^{*2}", "C_{3+2}"),
    (5, "C_{3+2}", "[23]", "{2,3}", "No", "Z", "C_{3+2}"),
    (5, "S_3^*", "id", "{2,3}", "No", "C_2^{*2}", "S_3^*"),
    (5, "S_3^*", "[23]", "{2,3}", "No", "Z", "S_3^*"),
    (5, "S_{3+2}", "id", "{2,3}", "No", "C_2^{*2}", "S_{3+2}"),
    (5, "S_{3+2}", "[23]", "{2,3}", "No", "Z", "S_{3+2}"),
    (5, "C_5", "id", "∅", "No", "C_5*Z", "1"),
    (5, "D_10", "id", "{2}", "No", "C_2", "D_10"),
    (5, "GA(1,5)", "id", "{2}", "No", "C_2", "GA(1,5)"),
    (5, "A_5", "id", "{2,3}", "No", "C_2", "A_5"),
    (5, "S_5", "id", "{2,3}", "No", "C_2", "S_5"),
];

/// `(d, subgroup classes of Sym(d), vertex-transitive actions)`.
pub const REFERENCE_COUNTS: &[(usize, u64, u64)] = &[
    (2, 2, 3),
    (3, 4, 6),
    (4, 11, 19),
    (5, 19, 40),
    (6, 56, 125),
    (7, 96, 285),
    (8, 296, 904),
    (9, 554, 2240),
    (10, 1593, 7213),
    (11, 3094, 19326),
];

/// Transitive local actions whose universal group has a simple `G⁺` in the
/// class of compactly generated simple groups.
pub const TRANSITIVE_SIMPLE_LOCAL_ACTIONS: &[&str] = &["S_3", "A_4", "S_4", "D_10", "GA(1,5)", "A_5", "S_5"];
