//! Deterministic table emission in CSV and JSON.
//!
//! Table 1 lists the mirror data of the two double-smoothing families per
//! polytope; table 2 the mixed smoothing of the polytope and its dual.
//! Output is byte-identical across runs for identical input.

use serde::Serialize;

use crate::batch::{BatchEntry, PolytopeRecord};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    /// `(id, alpha_x, alpha_y, h11_x, h12_x, h11_y, h12_y)`
    Double,
    /// `(id, self_dual, h11_mixed, h12_mixed, h11_mixed_dual, h12_mixed_dual)`
    Mixed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Serialize)]
struct DoubleRow {
    id: usize,
    alpha_x: i64,
    alpha_y: i64,
    h11_x: i64,
    h12_x: i64,
    h11_y: i64,
    h12_y: i64,
}

#[derive(Serialize)]
struct MixedRow {
    id: usize,
    self_dual: bool,
    h11_mixed: i64,
    h12_mixed: i64,
    h11_mixed_dual: i64,
    h12_mixed_dual: i64,
}

impl DoubleRow {
    fn new(r: &PolytopeRecord) -> Self {
        Self {
            id: r.id,
            alpha_x: r.x_inv.alpha,
            alpha_y: r.y_inv_dual.alpha,
            h11_x: r.hodge_x[0],
            h12_x: r.hodge_x[1],
            h11_y: r.hodge_y[0],
            h12_y: r.hodge_y[1],
        }
    }
}

impl MixedRow {
    fn new(r: &PolytopeRecord) -> Self {
        Self {
            id: r.id,
            self_dual: r.self_dual,
            h11_mixed: r.hodge_mixed[0],
            h12_mixed: r.hodge_mixed[1],
            h11_mixed_dual: r.hodge_mixed_dual[0],
            h12_mixed_dual: r.hodge_mixed_dual[1],
        }
    }
}

/// Renders the chosen table over all successful records, in input order.
pub fn emit_table(entries: &[BatchEntry], kind: TableKind, format: TableFormat) -> String {
    let records: Vec<&PolytopeRecord> = entries.iter().filter_map(BatchEntry::record).collect();
    match (kind, format) {
        (TableKind::Double, TableFormat::Csv) => {
            let mut out = String::from("id,alpha_x,alpha_y,h11_x,h12_x,h11_y,h12_y\n");
            for r in records {
                let row = DoubleRow::new(r);
                out.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    row.id, row.alpha_x, row.alpha_y, row.h11_x, row.h12_x, row.h11_y, row.h12_y
                ));
            }
            out
        }
        (TableKind::Mixed, TableFormat::Csv) => {
            let mut out =
                String::from("id,self_dual,h11_mixed,h12_mixed,h11_mixed_dual,h12_mixed_dual\n");
            for r in records {
                let row = MixedRow::new(r);
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    row.id,
                    row.self_dual,
                    row.h11_mixed,
                    row.h12_mixed,
                    row.h11_mixed_dual,
                    row.h12_mixed_dual
                ));
            }
            out
        }
        (TableKind::Double, TableFormat::Json) => {
            let rows: Vec<DoubleRow> = records.iter().map(|r| DoubleRow::new(r)).collect();
            let mut s = serde_json::to_string_pretty(&rows).expect("serialization cannot fail");
            s.push('\n');
            s
        }
        (TableKind::Mixed, TableFormat::Json) => {
            let rows: Vec<MixedRow> = records.iter().map(|r| MixedRow::new(r)).collect();
            let mut s = serde_json::to_string_pretty(&rows).expect("serialization cannot fail");
            s.push('\n');
            s
        }
    }
}
