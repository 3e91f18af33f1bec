//! The per-diagram analysis record and its output formats.

use anyhow::Result;
use lad_core::census::{simplicity_report, SimplicityReport};
use lad_core::deltatree::count_u_ball_automorphisms;
use lad_core::diagram::LocalActionDiagram;
use lad_core::orient::{analyze_action, ActionReport};
use lad_core::quotient::free_product_of_quotient;
use lad_core::registry::{Named, Registry};
use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Debug, Serialize)]
pub struct Validation {
    pub valid: bool,
    pub violations: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct BallStats {
    pub base: String,
    pub radius: usize,
    /// Decimal, since counts outgrow every fixed-width integer.
    pub automorphisms: String,
}

#[derive(Debug, Serialize)]
pub struct AnalysisRecord {
    pub digest: String,
    pub validation: Validation,
    pub action: ActionReport,
    pub quotient: String,
    pub simplicity: SimplicityReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ball: Option<BallStats>,
}

/// SHA-256 of the canonical JSON rendering.
pub fn digest(d: &LocalActionDiagram) -> String {
    hex::encode(Sha256::digest(d.to_json().as_bytes()))
}

pub fn analyze(d: &LocalActionDiagram, radius: Option<usize>, budget: u128) -> Result<AnalysisRecord> {
    let ball = match radius {
        Some(r) => Some(BallStats {
            base: d.graph().vertex_id(0).to_string(),
            radius: r,
            automorphisms: count_u_ball_automorphisms(d, 0, r, budget)?.to_string(),
        }),
        None => None,
    };
    Ok(AnalysisRecord {
        digest: digest(d),
        validation: Validation {
            valid: true,
            violations: Vec::new(),
        },
        action: analyze_action(d)?,
        quotient: free_product_of_quotient(d)?.to_string(),
        simplicity: simplicity_report(d)?,
        ball,
    })
}

pub trait RecordFormat: Named {
    fn render(&self, record: &AnalysisRecord) -> Result<String>;
}

struct Text;
struct Json;
struct Csv;

impl Named for Text {
    fn name(&self) -> &'static str {
        "text"
    }
}

impl Named for Json {
    fn name(&self) -> &'static str {
        "json"
    }
}

impl Named for Csv {
    fn name(&self) -> &'static str {
        "csv"
    }
}

const CSV_HEADER: [&str; 13] = [
    "digest",
    "valid",
    "action_type",
    "irreducible",
    "fixed_end_count",
    "scpo_count",
    "is_free",
    "minimal_cotree",
    "quotient",
    "simple",
    "in_class_s",
    "ball_radius",
    "ball_automorphisms",
];

fn flat_fields(r: &AnalysisRecord) -> Vec<String> {
    let a = &r.action;
    vec![
        r.digest.clone(),
        r.validation.valid.to_string(),
        a.action_type.as_str().to_string(),
        a.irreducible.to_string(),
        a.fixed_end_count.to_string(),
        a.scpo_count.to_string(),
        a.is_free.to_string(),
        a.minimal_cotree.join(";"),
        r.quotient.clone(),
        r.simplicity.simple.to_string(),
        r.simplicity.in_class_s.to_string(),
        r.ball.as_ref().map(|b| b.radius.to_string()).unwrap_or_default(),
        r.ball.as_ref().map(|b| b.automorphisms.clone()).unwrap_or_default(),
    ]
}

impl RecordFormat for Text {
    fn render(&self, r: &AnalysisRecord) -> Result<String> {
        let mut out = String::new();
        for (k, v) in CSV_HEADER.iter().zip(flat_fields(r)) {
            if !v.is_empty() {
                out.push_str(&format!("{k}: {v}\n"));
            }
        }
        for reason in &r.simplicity.reasons {
            out.push_str(&format!("reason: {reason}\n"));
        }
        Ok(out)
    }
}

impl RecordFormat for Json {
    fn render(&self, r: &AnalysisRecord) -> Result<String> {
        Ok(serde_json::to_string_pretty(r)? + "\n")
    }
}

impl RecordFormat for Csv {
    fn render(&self, r: &AnalysisRecord) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(CSV_HEADER)?;
        w.write_record(flat_fields(r))?;
        Ok(String::from_utf8(w.into_inner()?)?)
    }
}

pub fn formats() -> Registry<dyn RecordFormat> {
    let mut reg: Registry<dyn RecordFormat> = Registry::new();
    reg.register(Box::new(Text)).register(Box::new(Json)).register(Box::new(Csv));
    reg
}
