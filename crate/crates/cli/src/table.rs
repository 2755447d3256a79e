//! CSV renderings of the report payloads.

use wilf_core::enumerate::ScanReport;
use wilf_core::Rational;

use crate::report::{CountPayload, ExtremalPayload, InspectPayload};

fn atom_list(atoms: &[u32]) -> String {
    let parts: Vec<String> = atoms.iter().map(u32::to_string).collect();
    format!("<{}>", parts.join(","))
}

fn ratio(r: Rational) -> [String; 2] {
    [r.numer().to_string(), r.denom().to_string()]
}

fn finish(w: csv::Writer<Vec<u8>>) -> String {
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8")
}

/// One row per checked semigroup:
/// `genus, atom_list, f, g, e, m, d_num, d_den`, then
/// `<BOUND>_slack_num, <BOUND>_slack_den, <BOUND>_holds` per selected bound
/// (empty where the bound does not apply).
pub fn verify(report: &ScanReport) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header: Vec<String> = ["genus", "atom_list", "f", "g", "e", "m", "d_num", "d_den"]
        .map(String::from)
        .to_vec();
    for b in &report.bounds {
        for suffix in ["slack_num", "slack_den", "holds"] {
            header.push(format!("{b}_{suffix}"));
        }
    }
    w.write_record(&header).expect("csv");
    for row in report.rows.iter().flatten() {
        let mut rec = vec![
            row.genus.to_string(),
            atom_list(&row.atoms),
            row.frobenius.to_string(),
            row.genus.to_string(),
            row.embedding_dim.to_string(),
            row.multiplicity.to_string(),
        ];
        rec.extend(ratio(row.wilf_density));
        for b in &report.bounds {
            match row.checks.iter().find(|c| c.bound_id == *b) {
                Some(c) => {
                    rec.extend(ratio(c.slack));
                    rec.push(c.holds.to_string());
                }
                None => rec.extend([String::new(), String::new(), String::new()]),
            }
        }
        w.write_record(&rec).expect("csv");
    }
    finish(w)
}

pub fn count(payload: &CountPayload) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let oracle = payload.oracle.as_ref();
    let mut header = vec!["genus", "count"];
    if oracle.is_some() {
        header.push("oracle_count");
    }
    w.write_record(&header).expect("csv");
    for (g, n) in payload.counts_per_genus.iter().enumerate() {
        let mut rec = vec![g.to_string(), n.to_string()];
        if let Some(o) = oracle {
            rec.push(
                o.counts_per_genus
                    .get(g)
                    .map(u64::to_string)
                    .unwrap_or_default(),
            );
        }
        w.write_record(&rec).expect("csv");
    }
    finish(w)
}

pub fn extremal(payload: &ExtremalPayload) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "rank",
        "atom_list",
        "genus",
        "f",
        "e",
        "m",
        "d_num",
        "d_den",
        "slack_num",
        "slack_den",
        "holds",
    ])
    .expect("csv");
    for (i, e) in payload.entries.iter().enumerate() {
        let mut rec = vec![
            (i + 1).to_string(),
            atom_list(&e.atoms),
            e.genus.to_string(),
            e.frobenius.to_string(),
            e.embedding_dim.to_string(),
            e.multiplicity.to_string(),
        ];
        rec.extend(ratio(e.wilf_density));
        rec.extend(ratio(e.check.slack));
        rec.push(e.check.holds.to_string());
        w.write_record(&rec).expect("csv");
    }
    finish(w)
}

/// One row per bound check.
pub fn inspect(payload: &InspectPayload) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "bound_id",
        "lhs_num",
        "lhs_den",
        "relation",
        "rhs_num",
        "rhs_den",
        "slack_num",
        "slack_den",
        "holds",
        "is_equality",
        "branch",
    ])
    .expect("csv");
    for c in &payload.bound_checks {
        let relation = serde_json::to_value(c.relation).expect("relation");
        let branch = c
            .branch
            .map(|b| serde_json::to_value(b).expect("branch"))
            .and_then(|v| v.as_str().map(String::from))
            .unwrap_or_default();
        let mut rec = vec![c.bound_id.as_str().to_string()];
        rec.extend(ratio(c.lhs));
        rec.push(relation.as_str().unwrap_or_default().to_string());
        rec.extend(ratio(c.rhs));
        rec.extend(ratio(c.slack));
        rec.push(c.holds.to_string());
        rec.push(c.is_equality.to_string());
        rec.push(branch);
        w.write_record(&rec).expect("csv");
    }
    finish(w)
}
