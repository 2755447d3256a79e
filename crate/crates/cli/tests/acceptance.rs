//! Acceptance criteria. Runs as a plain binary (`harness = false`) so every
//! criterion prints one PASS/FAIL line; any failure makes the target fail.
//!
//! All comparisons are exact (tolerance 0).

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use wilf_core::bounds::{self, BoundId};
use wilf_core::enumerate::{enumerate_bruteforce, enumerate_tree, scan, ScanConfig};
use wilf_core::{invariants_of, NumericalSemigroup, Rational};

const FULL_SCAN_GENUS: u32 = 25;
const FULL_SCAN_BUDGET: Duration = Duration::from_secs(300);
const ORACLE_GENUS: u32 = 8;
const LEMMA_GENUS: u32 = 20;
const REARRANGEMENT_GENUS: u32 = 15;
const DENSITY_GENUS: u32 = 20;
const DETERMINISM_GENUS: u32 = 15;
const THREAD_COUNTS: [usize; 3] = [1, 4, 8];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Criterion 1: zero violations of every bound for genus 1..=25, within five minutes.
fn exhaustive_bounds() -> Outcome {
    let start = Instant::now();
    let config = ScanConfig::new(FULL_SCAN_GENUS).workers(workers());
    let report = scan(&config).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    for b in BoundId::ALL {
        let stats = report.stats(b).ok_or(format!("{b} missing"))?;
        ensure(stats.violation_count == 0, || {
            format!("{b}: {} violations", stats.violation_count)
        })?;
        ensure(stats.checked > 0, || format!("{b} never checked"))?;
    }
    ensure(report.counterexamples.is_empty(), || {
        format!("counterexamples: {:?}", &report.counterexamples[..1])
    })?;
    let per_genus = report.counts_per_genus[FULL_SCAN_GENUS as usize];
    ensure(per_genus > 400_000, || {
        format!("only {per_genus} semigroups of genus {FULL_SCAN_GENUS}")
    })?;
    ensure(elapsed < FULL_SCAN_BUDGET, || {
        format!("took {elapsed:?}, budget {FULL_SCAN_BUDGET:?}")
    })?;
    Ok(format!(
        "{} semigroups (genus {FULL_SCAN_GENUS}: {per_genus}), 0 violations, {:.1}s on {} threads",
        report.semigroups_checked,
        elapsed.as_secs_f64(),
        config.workers
    ))
}

/// Criterion 2: tree and brute force agree, as counts and as sets, for genus <= 8.
fn oracle_equivalence() -> Outcome {
    let mut tree: Vec<BTreeSet<Vec<u32>>> = vec![BTreeSet::new(); ORACLE_GENUS as usize + 1];
    enumerate_tree(ORACLE_GENUS, |s| {
        tree[s.genus() as usize].insert(s.minimal_generators().to_vec());
    })
    .map_err(|e| e.to_string())?;
    let mut counts = Vec::new();
    for (g, tree_set) in tree.iter().enumerate() {
        let oracle: BTreeSet<Vec<u32>> = enumerate_bruteforce(g as u32, ORACLE_GENUS)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|s| s.minimal_generators().to_vec())
            .collect();
        ensure(&oracle == tree_set, || {
            format!(
                "genus {g}: tree {} vs oracle {}",
                tree_set.len(),
                oracle.len()
            )
        })?;
        counts.push(oracle.len());
    }
    Ok(format!("counts {counts:?}"))
}

/// Criterion 3: witness cover found and `m-1 <= |Y| <= (e-1)(f+1-g)` for genus <= 20.
fn lemma_certification() -> Outcome {
    let config = ScanConfig::new(LEMMA_GENUS).bounds([]).workers(workers());
    let report = scan(&config).map_err(|e| e.to_string())?;
    let lemma = report.lemma_cover.ok_or("lemma not checked")?;
    ensure(lemma.failures == 0, || {
        format!("{} failures", lemma.failures)
    })?;
    ensure(lemma.checked == report.semigroups_checked, || {
        format!("{} of {} checked", lemma.checked, report.semigroups_checked)
    })?;
    Ok(format!("{} covers verified", lemma.checked))
}

/// Criterion 4: rearranged forms agree instance by instance, and together imply
/// `d >= 2/(e^2-e+2)`, for genus <= 15.
fn rearrangement_equivalence() -> Outcome {
    let mut failures = Vec::new();
    let mut n = 0u64;
    enumerate_tree(REARRANGEMENT_GENUS, |s| {
        if s.is_full() {
            return;
        }
        n += 1;
        let inv = invariants_of(s).unwrap();
        let zhai = bounds::check_zhai(&inv).unwrap().holds;
        let two = bounds::check_2star(&inv).unwrap().holds;
        let lemma = bounds::check_lemma3(&inv).unwrap().holds;
        let three = bounds::check_3star(&inv).unwrap().holds;
        let prop_b = bounds::check_prop_b(&inv).unwrap().holds;
        if zhai != two || lemma != three || (zhai && lemma && !prop_b) {
            failures.push(s.to_string());
        }
    })
    .map_err(|e| e.to_string())?;
    ensure(failures.is_empty(), || {
        format!("fails on {:?}", &failures[..1])
    })?;
    Ok(format!("{n} semigroups"))
}

/// Criterion 5: `<2,3>` is an equality case of WILF_1, PROP_B and LEMMA_3, and every
/// embedding-dimension-2 semigroup of genus <= 20 has `d = 1/2`.
fn known_equality_cases() -> Outcome {
    let s = NumericalSemigroup::from_generators(&[2, 3]).map_err(|e| e.to_string())?;
    let inv = invariants_of(&s).map_err(|e| e.to_string())?;
    for b in [BoundId::Wilf, BoundId::PropB, BoundId::Lemma3] {
        let c = bounds::check(b, &inv).map_err(|e| e.to_string())?;
        ensure(c.holds && c.is_equality, || format!("{b} on <2,3>: {c:?}"))?;
    }
    let config = ScanConfig::new(DENSITY_GENUS)
        .bounds([])
        .lemma(false)
        .workers(workers());
    let report = scan(&config).map_err(|e| e.to_string())?;
    let e2 = report.density(2).ok_or("no e = 2 semigroups")?;
    ensure(
        e2.min_density == q(1, 2) && e2.max_density == q(1, 2),
        || {
            format!(
                "e = 2 densities range over [{}, {}]",
                e2.min_density, e2.max_density
            )
        },
    )?;
    Ok(format!(
        "<2,3> tight; {} e = 2 semigroups all d = 1/2",
        e2.count
    ))
}

/// Criterion 6: over genus <= 20: min d > 1/6 for e = 4 and min d > 1/10 for e = 5.
fn headline_constants() -> Outcome {
    let config = ScanConfig::new(DENSITY_GENUS)
        .bounds([])
        .lemma(false)
        .workers(workers());
    let report = scan(&config).map_err(|e| e.to_string())?;
    let mut notes = Vec::new();
    for (e, threshold) in [(4u32, q(1, 6)), (5, q(1, 10))] {
        let stats = report.density(e).ok_or(format!("no e = {e} semigroups"))?;
        ensure(stats.min_density > threshold, || {
            format!(
                "e = {e}: min d = {} at {:?}, not > {threshold}",
                stats.min_density, stats.argmin
            )
        })?;
        notes.push(format!(
            "e={e}: min d = {} > {threshold}",
            stats.min_density
        ));
    }
    Ok(notes.join("; "))
}

/// Criterion 7: `verify --max-genus 15` payloads match byte for byte across thread
/// counts once `wall_time` is removed.
fn parallel_determinism() -> Outcome {
    let mut payloads = Vec::new();
    for threads in THREAD_COUNTS {
        let out = Command::new(env!("CARGO_BIN_EXE_wilf"))
            .args(["verify", "--max-genus", &DETERMINISM_GENUS.to_string()])
            .args(["--threads", &threads.to_string()])
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.code() == Some(0), || {
            format!("--threads {threads} exited with {:?}", out.status.code())
        })?;
        let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
        ensure(text.contains("\"wall_time\": "), || {
            "no wall_time field".to_string()
        })?;
        // The command echo names the thread count; it is not part of the payload.
        let payload: Vec<&str> = text
            .lines()
            .filter(|l| {
                let l = l.trim_start();
                !l.starts_with("\"wall_time\": ") && !l.starts_with("\"command\": ")
            })
            .collect();
        payloads.push(payload.join("\n"));
    }
    ensure(payloads.windows(2).all(|w| w[0] == w[1]), || {
        "payloads differ between thread counts".to_string()
    })?;
    Ok(format!(
        "threads {THREAD_COUNTS:?}: identical {}-byte payloads",
        payloads[0].len()
    ))
}

fn main() {
    let criteria: [Criterion; 7] = [
        (
            "AC1 exhaustive bound verification, genus <= 25",
            exhaustive_bounds,
        ),
        (
            "AC2 tree/brute-force oracle equivalence, genus <= 8",
            oracle_equivalence,
        ),
        (
            "AC3 witness-cover lemma certification, genus <= 20",
            lemma_certification,
        ),
        (
            "AC4 rearrangement equivalence and implication, genus <= 15",
            rearrangement_equivalence,
        ),
        ("AC5 known equality cases", known_equality_cases),
        (
            "AC6 headline constants 1/6 and 1/10, genus <= 20",
            headline_constants,
        ),
        (
            "AC7 parallel determinism of verify, genus <= 15",
            parallel_determinism,
        ),
    ];
    let mut failed = 0;
    for (name, criterion) in criteria {
        match criterion() {
            Ok(note) => println!("PASS  {name}: {note}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
