//! Classification rows as aligned text or CSV.

use anyhow::Result;
use lad_core::census::{ClassificationRow, VtAction};

const ROW_HEADER: [&str; 8] = ["degree", "local_action", "pairing", "lpc", "fixed_end", "quotient", "plus_local", "flags"];

fn fields(r: &ClassificationRow) -> [String; 8] {
    [
        r.degree.to_string(),
        r.local_action.to_string(),
        r.pairing.clone(),
        r.lpc_text(),
        r.fixed_end_text().to_string(),
        r.quotient.to_string(),
        r.plus_local.to_string(),
        r.flags().join(";"),
    ]
}

pub fn rows_csv(rows: &[ClassificationRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(ROW_HEADER)?;
    for r in rows {
        w.write_record(fields(r))?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

pub fn rows_text(rows: &[ClassificationRow]) -> String {
    let table: Vec<[String; 8]> = std::iter::once(ROW_HEADER.map(String::from)).chain(rows.iter().map(fields)).collect();
    let widths: Vec<usize> = (0..8).map(|i| table.iter().map(|r| r[i].chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for r in &table {
        let cells: Vec<String> = r.iter().zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

/// `[local action, orbits, pairing]` with one-based points.
pub fn action_line(a: &VtAction) -> String {
    let orbits: Vec<String> = a
        .group
        .orbits()
        .iter()
        .map(|o| {
            let pts: Vec<String> = o.iter().map(|x| (x + 1).to_string()).collect();
            format!("[{}]", pts.join(","))
        })
        .collect();
    format!("[{}, [{}], {}]", a.group, orbits.join(","), a.pairing)
}
