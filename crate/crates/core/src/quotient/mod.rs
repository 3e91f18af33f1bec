//! The action of `G/G⁺` on the quotient tree: local `G(v)⁺` data, the
//! quotient diagram, and the free-product decomposition of `G/G⁺`.

mod names;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::diagram::LocalActionDiagram;
use crate::error::{Error, Result};
use crate::perm::PermGroup;

pub use names::{abstract_name, recognize_group, GroupName};

pub fn plus_local_actions(d: &LocalActionDiagram) -> Vec<PermGroup> {
    d.local_actions().iter().map(PermGroup::plus_subgroup).collect()
}

/// Same graph; each colour set becomes its set of `G(v)⁺`-orbits and each
/// local action the induced action of `G(v)/G(v)⁺` on them. A singleton
/// class keeps its colour label; larger classes are written `{x,y,..}`.
pub fn plus_quotient_diagram(d: &LocalActionDiagram) -> Result<LocalActionDiagram> {
    let g = d.graph();
    let mut colours = vec![Vec::new(); g.arc_count()];
    let mut local = Vec::with_capacity(g.vertex_count());
    for v in 0..g.vertex_count() {
        let plus = d.local_action(v).plus_subgroup();
        let mut blocks = Vec::new();
        for a in g.out_arcs(v) {
            let labels = d.colours(a);
            let start = d.positions(a).start;
            let mut classes: Vec<Vec<usize>> = plus
                .orbits()
                .iter()
                .filter(|o| d.positions(a).contains(&o[0]))
                .map(|o| {
                    let mut o = o.clone();
                    o.sort_unstable();
                    o
                })
                .collect();
            classes.sort();
            colours[a] = classes
                .iter()
                .map(|c| match c.as_slice() {
                    [x] => labels[x - start].clone(),
                    _ => {
                        let inner: Vec<&str> = c.iter().map(|&x| labels[x - start].as_str()).collect();
                        format!("{{{}}}", inner.join(","))
                    }
                })
                .collect();
            blocks.extend(classes);
        }
        local.push(d.local_action(v).action_on_blocks(&blocks)?);
    }
    LocalActionDiagram::new(g.clone(), colours, local)
}

/// A free product of finite named groups, `c2_count` further copies of
/// `C_2` and a free group of rank `free_rank`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreeProductExpr {
    pub factors: Vec<String>,
    pub c2_count: usize,
    pub free_rank: usize,
}

impl FreeProductExpr {
    pub fn new(mut factors: Vec<String>, c2_count: usize, free_rank: usize) -> Self {
        factors.retain(|f| f != "1");
        factors.sort();
        Self {
            factors,
            c2_count,
            free_rank,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty() && self.c2_count == 0 && self.free_rank == 0
    }

    /// Exactly one factor, and that factor is `C_2` (named or from a subdivision vertex).
    pub fn is_single_c2(&self) -> bool {
        let finite: Vec<String> = self.abstract_factors();
        self.free_rank == 0 && finite == ["C_2"]
    }

    /// Every finite factor by abstract type, sorted; subdivision `C_2`s included.
    pub fn abstract_factors(&self) -> Vec<String> {
        let mut out: Vec<String> = self.factors.iter().map(|f| abstract_name(f)).collect();
        out.extend(std::iter::repeat_n("C_2".to_string(), self.c2_count));
        out.sort();
        out
    }

    /// Equality as abstract groups, ignoring orbit decorations on names.
    pub fn same_abstract_group(&self, other: &Self) -> bool {
        self.abstract_factors() == other.abstract_factors() && self.free_rank == other.free_rank
    }

    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let bad = || Error::Parse(format!("bad free product `{text}`"));
        if text.is_empty() {
            return Err(bad());
        }
        if text == "1" {
            return Ok(Self::new(Vec::new(), 0, 0));
        }
        let mut tokens = Vec::new();
        let (mut depth, mut start) = (0i32, 0);
        for (i, ch) in text.char_indices() {
            match ch {
                '{' => depth += 1,
                '}' => depth -= 1,
                '*' if depth == 0 => {
                    tokens.push(text[start..i].trim());
                    start = i + 1;
                }
                _ => {}
            }
        }
        tokens.push(text[start..].trim());
        let (mut factors, mut c2, mut rank) = (Vec::new(), 0, 0);
        for token in tokens {
            let (base, times) = match token.split_once("^{*") {
                Some((base, rest)) => {
                    let k = rest.strip_suffix('}').and_then(|k| k.parse().ok()).ok_or_else(bad)?;
                    (base, k)
                }
                None => (token, 1),
            };
            match base {
                "" => return Err(bad()),
                "Z" | "ℤ" => rank += times,
                "C_2" => c2 += times,
                _ => factors.extend(std::iter::repeat_n(base.to_string(), times)),
            }
        }
        Ok(Self::new(factors, c2, rank))
    }

    /// Invariant factors of the abelianization, torsion first, then one `0`
    /// per free generator.
    pub fn abelianization(&self, witnesses: &[PermGroup]) -> Vec<u64> {
        let mut out: Vec<u64> = witnesses.iter().flat_map(PermGroup::abelian_invariants).collect();
        out.extend(std::iter::repeat_n(2, self.c2_count));
        out.sort_unstable();
        out.extend(std::iter::repeat_n(0, self.free_rank));
        out
    }
}

impl fmt::Display for FreeProductExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
        for name in &self.factors {
            *counts.entry(name).or_default() += 1;
        }
        let power = |base: &str, k: usize| match k {
            1 => base.to_string(),
            _ => format!("{base}^{{*{k}}}"),
        };
        for (name, k) in counts {
            parts.push(power(name, k));
        }
        if self.c2_count > 0 {
            parts.push(power("C_2", self.c2_count));
        }
        if self.free_rank > 0 {
            parts.push(power("Z", self.free_rank));
        }
        if parts.is_empty() {
            return f.write_str("1");
        }
        f.write_str(&parts.join(" * "))
    }
}

impl FromStr for FreeProductExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// `G/G⁺` as the fundamental group of the graph of groups on the
/// reversal-free subdivision of the quotient diagram: vertex groups
/// `G*(v)` and `C_2` at subdivision vertices, trivial edge groups.
pub fn free_product_of_quotient(d: &LocalActionDiagram) -> Result<FreeProductExpr> {
    Ok(quotient_decomposition(d)?.0)
}

/// Also returns the vertex groups `G*(v)`, for abelianization checks.
pub fn quotient_decomposition(d: &LocalActionDiagram) -> Result<(FreeProductExpr, Vec<PermGroup>)> {
    d.ensure_valid()?;
    let star = plus_quotient_diagram(d)?;
    let (sub, added) = star.graph().reversal_free_subdivision();
    let edges = sub.geometric_edge_count();
    let rank = (edges + 1)
        .checked_sub(sub.vertex_count())
        .expect("connected graph has at least |V| - 1 edges");
    let groups: Vec<PermGroup> = star
        .local_actions()
        .iter()
        .filter(|h| !h.is_trivial())
        .cloned()
        .collect();
    let names = groups.iter().map(|h| recognize_group(h).name).collect();
    Ok((FreeProductExpr::new(names, added.len(), rank), groups))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{isomorphic, vt_diagram, OrbitPairing};

    fn vt(d: usize, gens: &str, pairing: &[usize]) -> LocalActionDiagram {
        let h = PermGroup::parse(d, gens).unwrap();
        vt_diagram(&h, &OrbitPairing::new(pairing.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn plus_locals() {
        let d8 = vt(4, "(1,2,3,4),(1,3)", &[0]);
        let plus = &plus_local_actions(&d8)[0];
        assert_eq!(recognize_group(plus).name, "V^-");
        let c4 = vt(4, "(1,2,3,4)", &[0]);
        assert!(plus_local_actions(&c4)[0].is_trivial());
    }

    #[test]
    fn quotient_diagram_of_d8() {
        let star = plus_quotient_diagram(&vt(4, "(1,2,3,4),(1,3)", &[0])).unwrap();
        assert_eq!(star.colours(0), ["{1,3}", "{2,4}"]);
        assert_eq!(star.local_action(0).order(), 2);
        assert!(star.is_free() && star.is_valid());
        let s4 = plus_quotient_diagram(&vt(4, "(1,2,3,4),(1,2)", &[0])).unwrap();
        assert_eq!(s4.colours(0), ["{1,2,3,4}"]);
        assert!(s4.local_action(0).is_trivial());
    }

    #[test]
    fn free_diagram_is_its_own_quotient() {
        let d = vt(6, "(1,2,3)(4,5,6)", &[1, 0]);
        assert!(d.is_free());
        let star = plus_quotient_diagram(&d).unwrap();
        assert!(isomorphic(&d, &star).unwrap().is_some());
        assert_eq!(star.to_json(), d.to_json());
    }

    #[test]
    fn free_products() {
        let q = |d: usize, gens: &str, p: &[usize]| free_product_of_quotient(&vt(d, gens, p)).unwrap().to_string();
        assert_eq!(q(3, "(1,2,3)", &[0]), "C_3 * C_2");
        assert_eq!(q(3, "()", &[0, 1, 2]), "C_2^{*3}");
        assert_eq!(q(4, "(3,4)", &[0, 1, 2]), "C_2^{*3}");
        assert_eq!(q(4, "(1,2,3,4),(1,3)", &[0]), "S_2 * C_2");
        assert_eq!(q(4, "()", &[1, 0, 3, 2]), "Z^{*2}");
        assert_eq!(q(0, "()", &[]), "1");
    }

    #[test]
    fn parse_and_compare() {
        let e = FreeProductExpr::parse("C_2^{*2}*Z").unwrap();
        assert_eq!(e, FreeProductExpr::new(vec![], 2, 1));
        assert_eq!(e.to_string(), "C_2^{*2} * Z");
        let named = FreeProductExpr::parse("S_2 * C_2").unwrap();
        assert_eq!(named.factors, ["S_2"]);
        assert!(named.same_abstract_group(&FreeProductExpr::parse("C_2^{*2}").unwrap()));
        assert!(!named.same_abstract_group(&FreeProductExpr::parse("C_2*Z").unwrap()));
        assert_eq!(FreeProductExpr::parse("V^+*C_2").unwrap().factors, ["V^+"]);
        assert_eq!(FreeProductExpr::parse("D_8^{*2}").unwrap().to_string(), "D_8^{*2}");
        assert!(FreeProductExpr::parse("C_2**Z").is_err());
        assert!(FreeProductExpr::parse("C_2^{*x}").is_err());
        assert!(FreeProductExpr::parse("C_2").unwrap().is_single_c2());
        assert!(FreeProductExpr::parse("S_2").unwrap().is_single_c2());
        assert!(!FreeProductExpr::parse("C_3").unwrap().is_single_c2());
    }
}
