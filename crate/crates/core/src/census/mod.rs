//! Vertex-transitive actions of small degree: pairs `(H, r)` of a subgroup
//! class of `Sym(d)` and an orbit pairing, their classification rows, and
//! comparison against the published reference tables.

mod reference;

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::diagram::{double_diagram, vt_diagram, LocalActionDiagram, OrbitPairing};
use crate::error::{Error, Result};
use crate::orient::{analyze_action, maximal_cotree};
use crate::perm::{prime_factors, subgroup_class_data, PermGroup, Permutation, MAX_CLASS_DEGREE};
use crate::quotient::{quotient_decomposition, recognize_group, FreeProductExpr, GroupName};
use crate::sgraph::classify_graph;

pub use reference::{ReferenceRow, REFERENCE_COUNTS, REFERENCE_ROWS, TRANSITIVE_SIMPLE_LOCAL_ACTIONS};

/// Largest degree enumerated without opting in.
pub const DEFAULT_CENSUS_BOUND: usize = 6;

#[derive(Clone, Debug)]
pub struct VtAction {
    pub group: PermGroup,
    pub pairing: OrbitPairing,
}

impl VtAction {
    pub fn degree(&self) -> usize {
        self.group.degree()
    }

    pub fn diagram(&self) -> Result<LocalActionDiagram> {
        vt_diagram(&self.group, &self.pairing)
    }

    pub fn pairing_notation(&self) -> String {
        self.pairing.notation(&self.group.orbit_sizes())
    }
}

/// Every involution of `0..k` as an image list, in lexicographic order.
fn involutions(k: usize) -> Vec<Vec<usize>> {
    fn go(images: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let Some(i) = used.iter().position(|&u| !u) else {
            out.push(images.clone());
            return;
        };
        used[i] = true;
        images[i] = i;
        go(images, used, out);
        for j in i + 1..used.len() {
            if !used[j] {
                used[j] = true;
                images[i] = j;
                images[j] = i;
                go(images, used, out);
                used[j] = false;
            }
        }
        used[i] = false;
    }
    let mut out = Vec::new();
    go(&mut vec![0; k], &mut vec![false; k], &mut out);
    out.sort();
    out
}

/// Action of the normalizer on the orbit list of `h`.
fn orbit_action(h: &PermGroup, normalizer: &PermGroup) -> Result<PermGroup> {
    let orbits = h.orbits();
    let mut index = vec![0; h.degree()];
    for (i, o) in orbits.iter().enumerate() {
        for &x in o {
            index[x] = i;
        }
    }
    let gens = normalizer
        .generators()
        .iter()
        .map(|n| Permutation::from_images(orbits.iter().map(|o| index[n.apply(o[0])]).collect()))
        .collect::<Result<Vec<_>>>()?;
    PermGroup::new(orbits.len(), gens)
}

/// One `(H, r)` per equivalence class: `H` runs over subgroup class
/// representatives and `r` over orbit pairings up to conjugation by the
/// normalizer of `H`, taking the lexicographically least image list.
pub fn enumerate_vt_actions(degree: usize) -> Result<Vec<VtAction>> {
    let classes = subgroup_class_data(degree)?;
    let per_class: Vec<Result<Vec<VtAction>>> = classes
        .par_iter()
        .map(|class| {
            let h = &class.representative;
            let r = orbit_action(h, &class.normalizer)?;
            let mut out = Vec::new();
            for images in involutions(h.orbits().len()) {
                let least = r.elements().iter().all(|rho| {
                    let mut conj = vec![0; images.len()];
                    for (i, &j) in images.iter().enumerate() {
                        conj[rho.apply(i)] = rho.apply(j);
                    }
                    images <= conj
                });
                if least {
                    out.push(VtAction {
                        group: h.clone(),
                        pairing: OrbitPairing::new(images)?,
                    });
                }
            }
            Ok(out)
        })
        .collect();
    let mut all = Vec::new();
    for part in per_class {
        all.extend(part?);
    }
    Ok(all)
}

/// Primes dividing the order of some point stabilizer.
pub fn local_prime_content(h: &PermGroup) -> Vec<u64> {
    let mut primes = BTreeSet::new();
    for orbit in h.orbits() {
        let stab = h.order() / orbit.len();
        primes.extend(prime_factors(stab as u64));
    }
    primes.into_iter().collect()
}

pub fn format_prime_set(primes: &[u64]) -> String {
    if primes.is_empty() {
        return "∅".into();
    }
    let inner: Vec<String> = primes.iter().map(u64::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

pub fn format_fixed_end(fixed_end: Option<bool>) -> &'static str {
    match fixed_end {
        Some(true) => "Yes",
        Some(false) => "No",
        None => "N/A",
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationRow {
    pub degree: usize,
    pub local_action: GroupName,
    pub pairing: String,
    pub lpc: Vec<u64>,
    /// `None` for degree at most 1, where the tree has no ends.
    pub fixed_end: Option<bool>,
    pub quotient: FreeProductExpr,
    pub plus_local: GroupName,
    /// Invariant factors of the abelianized quotient, `0` for each free generator.
    pub abelianization: Vec<u64>,
    #[serde(skip)]
    pub action: VtAction,
}

impl ClassificationRow {
    pub fn lpc_text(&self) -> String {
        format_prime_set(&self.lpc)
    }

    pub fn fixed_end_text(&self) -> &'static str {
        format_fixed_end(self.fixed_end)
    }

    pub fn reference(&self) -> Option<&'static ReferenceRow> {
        REFERENCE_ROWS.iter().find(|r| {
            r.0 == self.degree && r.1 == self.local_action.as_str() && r.2 == self.pairing
        })
    }

    /// Row flags: `free` when the local action is free, `errata` when a
    /// reference value disagrees.
    pub fn flags(&self) -> Vec<&'static str> {
        let mut flags = Vec::new();
        if self.lpc.is_empty() {
            flags.push("free");
        }
        if self.reference().is_some() && !row_errata(self).is_empty() {
            flags.push("errata");
        }
        flags
    }
}

/// One-fixed-end shortcut for single-vertex diagrams: a fixed point, a
/// transitive action on the rest, and a pairing that swaps the two orbits.
pub fn fixed_end_shortcut(action: &VtAction) -> bool {
    let sizes = action.group.orbit_sizes();
    sizes.len() == 2 && sizes.contains(&1) && !action.pairing.is_identity()
}

pub fn classification_row(action: &VtAction) -> Result<ClassificationRow> {
    let d = action.diagram()?;
    let degree = action.degree();
    let report = analyze_action(&d)?;
    let fixed_end = (degree >= 2).then_some(report.fixed_end_count > 0);
    if degree >= 2 && fixed_end_shortcut(action) != (report.fixed_end_count > 0) {
        return Err(Error::CrossCheck(format!(
            "fixed-end shortcut disagrees with the action type {} for {} {}",
            report.action_type.as_str(),
            recognize_group(&action.group),
            action.pairing_notation()
        )));
    }
    let (quotient, witnesses) = quotient_decomposition(&d)?;
    if FreeProductExpr::parse(&quotient.to_string())? != quotient {
        return Err(Error::CrossCheck(format!("`{quotient}` does not parse back")));
    }
    let abelianization = quotient.abelianization(&witnesses);
    if abelianization.iter().filter(|&&x| x == 0).count() != quotient.free_rank {
        return Err(Error::CrossCheck(format!("abelianization of `{quotient}` has the wrong rank")));
    }
    Ok(ClassificationRow {
        degree,
        local_action: recognize_group(&action.group),
        pairing: action.pairing_notation(),
        lpc: local_prime_content(&action.group),
        fixed_end,
        quotient,
        plus_local: recognize_group(&action.group.plus_subgroup()),
        abelianization,
        action: action.clone(),
    })
}

/// Rows for every vertex-transitive action of the given degree, in
/// enumeration order.
pub fn classify_degree(degree: usize) -> Result<Vec<ClassificationRow>> {
    enumerate_vt_actions(degree)?
        .par_iter()
        .map(classification_row)
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CensusCount {
    pub degree: usize,
    pub subgroup_classes: usize,
    pub vt_actions: usize,
}

pub fn census_counts(d_min: usize, d_max: usize) -> Result<Vec<CensusCount>> {
    if d_max > MAX_CLASS_DEGREE {
        return Err(Error::DegreeAboveBound {
            degree: d_max,
            bound: MAX_CLASS_DEGREE,
        });
    }
    (d_min..=d_max)
        .map(|d| {
            Ok(CensusCount {
                degree: d,
                subgroup_classes: subgroup_class_data(d)?.len(),
                vt_actions: enumerate_vt_actions(d)?.len(),
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ErrataEntry {
    pub degree: usize,
    pub local_action: String,
    pub pairing: String,
    pub column: &'static str,
    pub printed: String,
    pub computed: String,
}

fn row_errata(row: &ClassificationRow) -> Vec<ErrataEntry> {
    let Some(r) = row.reference() else {
        return Vec::new();
    };
    let entry = |column, printed: &str, computed: String| ErrataEntry {
        degree: row.degree,
        local_action: r.1.to_string(),
        pairing: r.2.to_string(),
        column,
        printed: printed.to_string(),
        computed,
    };
    let mut out = Vec::new();
    if r.3 != row.lpc_text() {
        out.push(entry("lpc", r.3, row.lpc_text()));
    }
    if r.4 != row.fixed_end_text() {
        out.push(entry("fixed_end", r.4, row.fixed_end_text().to_string()));
    }
    let printed_quotient = FreeProductExpr::parse(r.5).expect("reference values parse");
    if !printed_quotient.same_abstract_group(&row.quotient) {
        out.push(entry("quotient", r.5, row.quotient.to_string()));
    }
    if r.6 != row.plus_local.as_str() {
        out.push(entry("plus_local", r.6, row.plus_local.to_string()));
    }
    out
}

/// Every disagreement between computed rows and the reference table,
/// including reference rows with no computed counterpart.
pub fn errata_report(rows: &[ClassificationRow]) -> Vec<ErrataEntry> {
    let mut out: Vec<ErrataEntry> = rows.iter().flat_map(row_errata).collect();
    let degrees: BTreeSet<usize> = rows.iter().map(|r| r.degree).collect();
    for r in REFERENCE_ROWS.iter().filter(|r| degrees.contains(&r.0)) {
        let found = rows
            .iter()
            .any(|row| row.degree == r.0 && row.local_action.as_str() == r.1 && row.pairing == r.2);
        if !found {
            out.push(ErrataEntry {
                degree: r.0,
                local_action: r.1.to_string(),
                pairing: r.2.to_string(),
                column: "row",
                printed: "present".into(),
                computed: "missing".into(),
            });
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicityReport {
    pub simple: bool,
    pub in_class_s: bool,
    pub minimal_cotree: Vec<String>,
    pub reasons: Vec<String>,
}

/// Conditions for the `G⁺` of a universal group to be simple and compactly
/// generated, checked on the minimal cotree.
pub fn simplicity_report(d: &LocalActionDiagram) -> Result<SimplicityReport> {
    d.ensure_valid()?;
    let g = d.graph();
    let (_, core) = maximal_cotree(d)?;
    let mut reasons = Vec::new();
    for v in 0..g.vertex_count() {
        let id = g.vertex_id(v);
        if !core.contains(&v) {
            if !d.local_action(v).is_trivial() {
                reasons.push(format!("local action at `{id}` is nontrivial outside the minimal cotree"));
            }
            continue;
        }
        let kept: Vec<usize> = g
            .out_arcs(v)
            .into_iter()
            .filter(|&a| core.contains(&g.terminus(a)))
            .flat_map(|a| d.positions(a))
            .collect();
        if kept.len() < d.degree(v) && !d.local_action(v).pointwise_stabilizer(&kept).is_trivial() {
            reasons.push(format!(
                "local action at `{id}` is not faithful on the colours kept in the minimal cotree"
            ));
        }
    }
    let restricted = d.restrict_to_cotree(&core)?;
    let rg = restricted.graph();
    if analyze_action(&restricted)?.scpo_count != 1 {
        reasons.push("diagram on the minimal cotree is not irreducible".into());
    }
    if !classify_graph(rg).tree {
        let loop_present = (0..rg.arc_count()).any(|a| rg.origin(a) == rg.terminus(a));
        reasons.push(if loop_present {
            "Γ is not a tree (loop present)".into()
        } else {
            "Γ is not a tree (cycle present)".into()
        });
    }
    let mut generated = false;
    for v in 0..rg.vertex_count() {
        let h = restricted.local_action(v);
        let plus = h.plus_subgroup();
        if plus.order() != h.order() {
            reasons.push(format!(
                "local action at `{}` is not generated by point stabilizers",
                rg.vertex_id(v)
            ));
        } else if !h.is_trivial() {
            generated = true;
        }
    }
    if !generated {
        reasons.push("no nontrivial local action generated by point stabilizers".into());
    }
    let simple = reasons.is_empty();
    Ok(SimplicityReport {
        simple,
        in_class_s: simple,
        minimal_cotree: core.iter().map(|&v| g.vertex_id(v).to_string()).collect(),
        reasons,
    })
}

/// Rows whose universal group is nondiscrete and fixes no end, but whose
/// `G⁺` is not a compactly generated simple group: those with nonempty
/// local prime content and no fixed end, minus the rows whose quotient is
/// a single `C_2` and whose doubled diagram is simple.
pub fn nondiscrete_non_s_count(rows: &[ClassificationRow]) -> Result<usize> {
    let mut count = 0;
    for row in rows {
        if row.lpc.is_empty() || row.fixed_end != Some(false) {
            continue;
        }
        let in_s = row.quotient.is_single_c2()
            && simplicity_report(&double_diagram(&row.action.diagram()?)?)?.simple;
        if !in_s {
            count += 1;
        }
    }
    Ok(count)
}
