//! Machine-readable report documents.
//!
//! Every command writes one [`ReportDocument`]. Rationals appear as
//! `{"num": n, "den": d}` in lowest terms; there are no floating-point
//! values except the run's `wall_time`.

use serde::{Deserialize, Serialize};
use wilf_core::enumerate::{ExtremalEntry, ScanReport};
use wilf_core::lemma::{LemmaChainCheck, WitnessCover};
use wilf_core::{BoundCheck, BoundId, InvariantSet};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: String,
    /// The command line that produced the report.
    pub command: String,
    pub payload: Payload,
}

impl ReportDocument {
    pub fn new(command: impl Into<String>, payload: Payload) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.into(),
            payload,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Inspect(InspectPayload),
    Verify(ScanReport),
    Count(CountPayload),
    Extremal(ExtremalPayload),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InspectPayload {
    pub semigroup: String,
    pub invariants: InvariantSet,
    pub gaps: Vec<u32>,
    pub sporadic: Vec<u32>,
    pub wilf_number: i64,
    pub bound_checks: Vec<BoundCheck>,
    pub all_hold: bool,
    pub witness_cover: WitnessCover,
    pub lemma_chain: LemmaChainCheck,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CountPayload {
    pub max_genus: u32,
    pub counts_per_genus: Vec<u64>,
    pub total: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleCheck>,
}

/// Brute-force recount of genus `0..=max_genus`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleCheck {
    pub max_genus: u32,
    pub counts_per_genus: Vec<u64>,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExtremalPayload {
    pub max_genus: u32,
    pub metric: BoundId,
    pub top: usize,
    pub entries: Vec<ExtremalEntry>,
}

pub fn to_json(doc: &ReportDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("report serializes");
    s.push('\n');
    s
}
