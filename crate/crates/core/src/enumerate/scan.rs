use std::collections::BTreeSet;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::tree::{TreeWalk, DEFAULT_SPLIT_DEPTH};
use crate::bounds::{self, BoundCheck, BoundId};
use crate::error::{Error, Result};
use crate::invariants::{invariants_of, InvariantSet};
use crate::lemma::{build_witness_cover, verify_lemma_bound};
use crate::rational::Rational;
use crate::semigroup::NumericalSemigroup;

/// Check name used for covering-lemma failures in counterexample lists.
pub const LEMMA_COVER: &str = "LEMMA_COVER";

pub const DEFAULT_EXTREMAL_K: usize = 10;

/// Counterexamples kept verbatim in a report; counts stay exact.
const MAX_COUNTEREXAMPLES: usize = 1000;

#[derive(Clone, Debug)]
pub struct ScanConfig {
    pub genus_bound: u32,
    pub bounds: BTreeSet<BoundId>,
    /// Build and verify the witness cover for every semigroup.
    pub check_lemma: bool,
    pub workers: usize,
    pub split_depth: u32,
    /// Keep one [`ScanRow`] per checked semigroup.
    pub collect_rows: bool,
    pub validate_children: bool,
}

impl ScanConfig {
    /// All bounds and the lemma, single worker.
    pub fn new(genus_bound: u32) -> Self {
        Self {
            genus_bound,
            bounds: BoundId::ALL.into_iter().collect(),
            check_lemma: true,
            workers: 1,
            split_depth: DEFAULT_SPLIT_DEPTH,
            collect_rows: false,
            validate_children: false,
        }
    }

    pub fn bounds(mut self, bounds: impl IntoIterator<Item = BoundId>) -> Self {
        self.bounds = bounds.into_iter().collect();
        self
    }

    pub fn workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    pub fn rows(mut self, collect_rows: bool) -> Self {
        self.collect_rows = collect_rows;
        self
    }

    pub fn lemma(mut self, check_lemma: bool) -> Self {
        self.check_lemma = check_lemma;
        self
    }

    fn walk(&self) -> TreeWalk {
        TreeWalk {
            genus_bound: self.genus_bound,
            workers: self.workers,
            split_depth: self.split_depth,
            validate_children: self.validate_children,
        }
    }
}

/// Per-bound aggregate over a scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundStats {
    pub bound_id: BoundId,
    pub checked: u64,
    pub equality_count: u64,
    pub violation_count: u64,
    pub min_slack: Option<Rational>,
    /// Atoms of the canonically smallest semigroup attaining `min_slack`.
    pub argmin: Option<Vec<u32>>,
}

impl BoundStats {
    fn new(bound_id: BoundId) -> Self {
        Self {
            bound_id,
            checked: 0,
            equality_count: 0,
            violation_count: 0,
            min_slack: None,
            argmin: None,
        }
    }

    fn record(&mut self, check: &BoundCheck, atoms: &[u32]) {
        self.checked += 1;
        self.equality_count += u64::from(check.is_equality);
        self.violation_count += u64::from(!check.holds);
        if improves(self.min_slack, self.argmin.as_deref(), check.slack, atoms) {
            self.min_slack = Some(check.slack);
            self.argmin = Some(atoms.to_vec());
        }
    }

    fn merge(&mut self, other: BoundStats) {
        self.checked += other.checked;
        self.equality_count += other.equality_count;
        self.violation_count += other.violation_count;
        if let (Some(slack), Some(atoms)) = (other.min_slack, other.argmin) {
            if improves(self.min_slack, self.argmin.as_deref(), slack, &atoms) {
                self.min_slack = Some(slack);
                self.argmin = Some(atoms);
            }
        }
    }
}

/// Whether `(value, atoms)` sorts before the current `(best, best_atoms)`.
fn improves(
    best: Option<Rational>,
    best_atoms: Option<&[u32]>,
    value: Rational,
    atoms: &[u32],
) -> bool {
    match (best, best_atoms) {
        (Some(b), Some(ba)) => (value, atoms) < (b, ba),
        _ => true,
    }
}

/// Wilf density range among semigroups of one embedding dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensityStats {
    pub embedding_dim: u32,
    pub count: u64,
    pub min_density: Rational,
    pub argmin: Vec<u32>,
    pub max_density: Rational,
    pub argmax: Vec<u32>,
}

impl DensityStats {
    fn new(embedding_dim: u32, d: Rational, atoms: &[u32]) -> Self {
        Self {
            embedding_dim,
            count: 1,
            min_density: d,
            argmin: atoms.to_vec(),
            max_density: d,
            argmax: atoms.to_vec(),
        }
    }

    fn merge(&mut self, other: DensityStats) {
        self.count += other.count;
        if (other.min_density, &other.argmin) < (self.min_density, &self.argmin) {
            self.min_density = other.min_density;
            self.argmin = other.argmin;
        }
        // Largest density; ties go to the canonically smaller semigroup.
        let other_key = (std::cmp::Reverse(other.max_density), &other.argmax);
        if other_key < (std::cmp::Reverse(self.max_density), &self.argmax) {
            self.max_density = other.max_density;
            self.argmax = other.argmax;
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaStats {
    pub checked: u64,
    /// Missing witnesses or a broken `m - 1 <= |Y| <= (e - 1)(f + 1 - g)`.
    pub failures: u64,
    /// `|Y| = m - 1`
    pub lower_equality_count: u64,
    /// `|Y| = (e - 1)(f + 1 - g)`
    pub upper_equality_count: u64,
}

impl LemmaStats {
    fn merge(&mut self, other: LemmaStats) {
        self.checked += other.checked;
        self.failures += other.failures;
        self.lower_equality_count += other.lower_equality_count;
        self.upper_equality_count += other.upper_equality_count;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Counterexample {
    pub genus: u32,
    pub atoms: Vec<u32>,
    /// A bound id such as `WILF_1`, or [`LEMMA_COVER`].
    pub check: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowCheck {
    pub bound_id: BoundId,
    pub slack: Rational,
    pub holds: bool,
}

/// One checked semigroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub genus: u32,
    pub atoms: Vec<u32>,
    pub frobenius: u32,
    pub embedding_dim: u32,
    pub multiplicity: u32,
    pub wilf_density: Rational,
    pub checks: Vec<RowCheck>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub genus_bound: u32,
    pub bounds: Vec<BoundId>,
    pub lemma_checked: bool,
    /// Index `g` holds the number of semigroups of genus `g`, `N` included.
    pub counts_per_genus: Vec<u64>,
    pub semigroups_visited: u64,
    /// Semigroups other than `N`, i.e. genus at least 1.
    pub semigroups_checked: u64,
    pub per_bound_stats: Vec<BoundStats>,
    pub lemma_cover: Option<LemmaStats>,
    pub density_by_embedding_dim: Vec<DensityStats>,
    pub counterexamples: Vec<Counterexample>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rows: Option<Vec<ScanRow>>,
    /// Seconds; the only field that depends on the run.
    pub wall_time: f64,
}

impl ScanReport {
    pub fn empty(config: &ScanConfig) -> Self {
        Self {
            genus_bound: config.genus_bound,
            bounds: config.bounds.iter().copied().collect(),
            lemma_checked: config.check_lemma,
            counts_per_genus: vec![0; config.genus_bound as usize + 1],
            semigroups_visited: 0,
            semigroups_checked: 0,
            per_bound_stats: config.bounds.iter().map(|&b| BoundStats::new(b)).collect(),
            lemma_cover: config.check_lemma.then(LemmaStats::default),
            density_by_embedding_dim: Vec::new(),
            counterexamples: Vec::new(),
            rows: config.collect_rows.then(Vec::new),
            wall_time: 0.0,
        }
    }

    pub fn total_violations(&self) -> u64 {
        let bounds: u64 = self.per_bound_stats.iter().map(|s| s.violation_count).sum();
        bounds + self.lemma_cover.as_ref().map_or(0, |l| l.failures)
    }

    pub fn stats(&self, bound: BoundId) -> Option<&BoundStats> {
        self.per_bound_stats.iter().find(|s| s.bound_id == bound)
    }

    pub fn density(&self, embedding_dim: u32) -> Option<&DensityStats> {
        self.density_by_embedding_dim
            .iter()
            .find(|s| s.embedding_dim == embedding_dim)
    }

    /// Combines reports over disjoint sets of semigroups scanned with the
    /// same configuration. Associative and commutative on every field but
    /// `wall_time`, which takes the maximum.
    pub fn merge(mut self, other: ScanReport) -> ScanReport {
        debug_assert_eq!(self.genus_bound, other.genus_bound);
        for (a, b) in self.counts_per_genus.iter_mut().zip(other.counts_per_genus) {
            *a += b;
        }
        self.semigroups_visited += other.semigroups_visited;
        self.semigroups_checked += other.semigroups_checked;
        for (a, b) in self.per_bound_stats.iter_mut().zip(other.per_bound_stats) {
            a.merge(b);
        }
        if let (Some(a), Some(b)) = (self.lemma_cover.as_mut(), other.lemma_cover) {
            a.merge(b);
        }
        for d in other.density_by_embedding_dim {
            self.merge_density(d);
        }
        self.counterexamples.extend(other.counterexamples);
        self.counterexamples.sort();
        self.counterexamples.truncate(MAX_COUNTEREXAMPLES);
        if let (Some(a), Some(b)) = (self.rows.as_mut(), other.rows) {
            a.extend(b);
            a.sort_by(|x, y| (x.genus, &x.atoms).cmp(&(y.genus, &y.atoms)));
        }
        self.wall_time = self.wall_time.max(other.wall_time);
        self
    }

    fn merge_density(&mut self, d: DensityStats) {
        match self
            .density_by_embedding_dim
            .binary_search_by_key(&d.embedding_dim, |s| s.embedding_dim)
        {
            Ok(i) => self.density_by_embedding_dim[i].merge(d),
            Err(i) => self.density_by_embedding_dim.insert(i, d),
        }
    }

    fn push_counterexample(&mut self, c: Counterexample) {
        self.counterexamples.push(c);
        if self.counterexamples.len() > 2 * MAX_COUNTEREXAMPLES {
            self.counterexamples.sort();
            self.counterexamples.truncate(MAX_COUNTEREXAMPLES);
        }
    }

    /// Adds one semigroup to the report.
    pub fn record(&mut self, s: &NumericalSemigroup) -> Result<()> {
        let genus = s.genus();
        self.counts_per_genus[genus as usize] += 1;
        self.semigroups_visited += 1;
        if genus == 0 {
            return Ok(());
        }
        self.semigroups_checked += 1;

        let inv = invariants_of(s)?;
        let atoms = &inv.atoms;
        let mut row_checks = Vec::new();
        let mut failed = Vec::new();
        for stats in &mut self.per_bound_stats {
            if !stats.bound_id.applies_to(inv.embedding_dim) {
                continue;
            }
            let check = bounds::check(stats.bound_id, &inv)?;
            stats.record(&check, atoms);
            if !check.holds {
                failed.push(counterexample(
                    &inv,
                    check.bound_id.as_str(),
                    describe(&check),
                ));
            }
            if self.rows.is_some() {
                row_checks.push(RowCheck {
                    bound_id: check.bound_id,
                    slack: check.slack,
                    holds: check.holds,
                });
            }
        }

        if let Some(lemma) = self.lemma_cover.as_mut() {
            lemma.checked += 1;
            let outcome = match build_witness_cover(s) {
                Ok(cover) => {
                    let chain = verify_lemma_bound(&cover, &inv)?;
                    lemma.lower_equality_count += u64::from(chain.lower_equality);
                    lemma.upper_equality_count += u64::from(chain.upper_equality);
                    (!chain.holds).then(|| {
                        format!(
                            "{} <= {} <= {} fails",
                            chain.lower, chain.cover_size, chain.upper
                        )
                    })
                }
                Err(Error::WitnessNotFound(x)) => Some(format!("no witness for {x}")),
                Err(e) => return Err(e),
            };
            if let Some(detail) = outcome {
                lemma.failures += 1;
                failed.push(counterexample(&inv, LEMMA_COVER, detail));
            }
        }
        for c in failed {
            self.push_counterexample(c);
        }

        self.merge_density(DensityStats::new(
            inv.embedding_dim,
            inv.wilf_density,
            atoms,
        ));

        if let Some(rows) = self.rows.as_mut() {
            rows.push(ScanRow {
                genus,
                atoms: inv.atoms.clone(),
                frobenius: inv.frobenius,
                embedding_dim: inv.embedding_dim,
                multiplicity: inv.multiplicity,
                wilf_density: inv.wilf_density,
                checks: row_checks,
            });
        }
        Ok(())
    }

    /// Puts rows and counterexamples in canonical order.
    pub fn finish(mut self) -> Self {
        if let Some(rows) = self.rows.as_mut() {
            rows.sort_by(|x, y| (x.genus, &x.atoms).cmp(&(y.genus, &y.atoms)));
        }
        self.counterexamples.sort();
        self.counterexamples.truncate(MAX_COUNTEREXAMPLES);
        self
    }
}

fn counterexample(inv: &InvariantSet, check: &str, detail: String) -> Counterexample {
    Counterexample {
        genus: inv.genus,
        atoms: inv.atoms.clone(),
        check: check.to_string(),
        detail,
    }
}

fn describe(c: &BoundCheck) -> String {
    let rel = match c.relation {
        bounds::Relation::Ge => ">=",
        bounds::Relation::Gt => ">",
        bounds::Relation::Le => "<=",
    };
    format!("{} {rel} {} fails (slack {})", c.lhs, c.rhs, c.slack)
}

/// Checks every semigroup of genus `1..=genus_bound` against the selected
/// bounds (and the covering lemma), aggregating into one report.
///
/// Violations are recorded, never fatal; the report is identical for every
/// worker count apart from `wall_time`.
pub fn scan(config: &ScanConfig) -> Result<ScanReport> {
    if config.genus_bound == 0 {
        return Err(Error::InvariantViolation(
            "scan needs a genus bound of at least 1".into(),
        ));
    }
    let start = Instant::now();
    let report = config.walk().fold(
        || ScanReport::empty(config),
        |acc, s| acc.record(s),
        ScanReport::merge,
    )?;
    let mut report = report.finish();
    report.wall_time = start.elapsed().as_secs_f64();
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalEntry {
    pub atoms: Vec<u32>,
    pub genus: u32,
    pub frobenius: u32,
    pub multiplicity: u32,
    pub embedding_dim: u32,
    pub wilf_density: Rational,
    pub check: BoundCheck,
}

impl ExtremalEntry {
    fn key(&self) -> (Rational, &[u32]) {
        (self.check.slack, &self.atoms)
    }
}

fn insert_top_k(top: &mut Vec<ExtremalEntry>, entry: ExtremalEntry, k: usize) {
    if k == 0 {
        return;
    }
    if top.len() == k && entry.key() >= top[k - 1].key() {
        return;
    }
    let pos = top.partition_point(|e| e.key() < entry.key());
    top.insert(pos, entry);
    top.truncate(k);
}

/// The `k` semigroups of genus `1..=genus_bound` with the smallest slack for
/// `metric`, ascending, ties broken by atom list. Semigroups the metric does
/// not apply to are skipped.
pub fn extremal(
    genus_bound: u32,
    metric: BoundId,
    k: usize,
    workers: usize,
) -> Result<Vec<ExtremalEntry>> {
    TreeWalk::new(genus_bound).workers(workers).fold(
        Vec::new,
        |top, s| {
            if s.is_full() || !metric.applies_to(s.embedding_dimension()) {
                return Ok(());
            }
            let inv = invariants_of(s)?;
            let check = bounds::check(metric, &inv)?;
            let entry = ExtremalEntry {
                genus: inv.genus,
                frobenius: inv.frobenius,
                multiplicity: inv.multiplicity,
                embedding_dim: inv.embedding_dim,
                wilf_density: inv.wilf_density,
                atoms: inv.atoms,
                check,
            };
            insert_top_k(top, entry, k);
            Ok(())
        },
        |mut a, b| {
            for e in b {
                insert_top_k(&mut a, e, k);
            }
            a
        },
    )
}
