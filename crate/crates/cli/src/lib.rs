//! Command-line front end for `wilf-core`.
//!
//! Exit codes: 0 when everything checked holds, 1 when a counterexample (or
//! an oracle mismatch) was found, 2 for usage and input errors. Reports go
//! to stdout, diagnostics to stderr.

use std::collections::BTreeSet;

use clap::{Parser, Subcommand, ValueEnum};
use wilf_core::enumerate::{
    self, enumerate_bruteforce, ScanConfig, TreeWalk, DEFAULT_EXTREMAL_K, DEFAULT_ORACLE_CAP,
};
use wilf_core::lemma::{build_witness_cover, verify_lemma_bound};
use wilf_core::{
    bounds, invariants_of, parse_generator_list, sporadic_elements, wilf_number, BoundId,
    NumericalSemigroup,
};

pub mod report;
pub mod table;

use report::{CountPayload, ExtremalPayload, InspectPayload, OracleCheck, Payload, ReportDocument};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "wilf", version)]
#[command(about = "Inspect numerical semigroups and verify Wilf-type density bounds exhaustively")]
pub struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Invariants, bound checks and witness cover of one semigroup
    Inspect {
        /// Generators, comma separated (e.g. 3,5,7); need not be minimal
        generators: String,
    },
    /// Check the bounds on every semigroup up to a genus
    Verify {
        #[arg(long)]
        max_genus: u32,
        /// Comma-separated bound names (wilf, zhai, lemma3, two_star,
        /// three_star, prop_a, prop_b) or "all"
        #[arg(long, default_value = "all")]
        bounds: String,
        #[command(flatten)]
        threads: Threads,
        /// Include one row per semigroup in JSON output (always on for CSV)
        #[arg(long)]
        rows: bool,
    },
    /// Count semigroups by genus
    Count {
        #[arg(long)]
        max_genus: u32,
        /// Recount genus 0..=M by brute force and compare
        #[arg(long, value_name = "M")]
        oracle_check: Option<u32>,
        #[command(flatten)]
        threads: Threads,
    },
    /// Semigroups with the smallest slack for one bound
    Extremal {
        #[arg(long)]
        max_genus: u32,
        #[arg(long)]
        metric: String,
        #[arg(long, default_value_t = DEFAULT_EXTREMAL_K)]
        top: usize,
        #[command(flatten)]
        threads: Threads,
    },
}

#[derive(clap::Args, Debug)]
pub struct Threads {
    /// Worker threads [default: available parallelism]
    #[arg(long = "threads", env = "WILF_THREADS")]
    pub threads: Option<usize>,
}

impl Threads {
    fn resolve(&self) -> Result<usize, String> {
        match self.threads {
            Some(0) => Err("--threads must be at least 1".into()),
            Some(n) => Ok(n),
            None => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
        }
    }
}

/// What a command produced: the rendered report, the exit code, and any
/// diagnostics for stderr.
#[derive(Debug)]
pub struct Output {
    pub stdout: String,
    pub stderr: Vec<String>,
    pub exit_code: i32,
    pub document: ReportDocument,
}

/// Runs a parsed command. `Err` carries a one-line usage/input diagnostic
/// (exit code 2).
pub fn run(cli: &Cli, command_echo: &str) -> Result<Output, String> {
    let mut stderr = Vec::new();
    let (payload, exit_code) = match &cli.command {
        Command::Inspect { generators } => inspect(generators)?,
        Command::Verify {
            max_genus,
            bounds,
            threads,
            rows,
        } => {
            if *max_genus < 1 {
                return Err("--max-genus must be at least 1".into());
            }
            let config = ScanConfig::new(*max_genus)
                .bounds(parse_bounds(bounds)?)
                .workers(threads.resolve()?)
                .rows(*rows || cli.format == Format::Csv);
            let report = enumerate::scan(&config).map_err(|e| e.to_string())?;
            let code = if report.total_violations() == 0 {
                EXIT_OK
            } else {
                for c in &report.counterexamples {
                    stderr.push(format!(
                        "counterexample: genus {} {} {}: {}",
                        c.genus,
                        fmt_atoms(&c.atoms),
                        c.check,
                        c.detail
                    ));
                }
                EXIT_COUNTEREXAMPLE
            };
            (Payload::Verify(report), code)
        }
        Command::Count {
            max_genus,
            oracle_check,
            threads,
        } => {
            let payload = count(*max_genus, *oracle_check, threads.resolve()?)?;
            let code = match &payload.oracle {
                Some(o) if o.agrees => {
                    stderr.push("oracle agrees".to_string());
                    EXIT_OK
                }
                Some(o) => {
                    stderr.push(format!(
                        "oracle disagrees: tree {:?}, brute force {:?}",
                        &payload.counts_per_genus[..o.counts_per_genus.len()],
                        o.counts_per_genus
                    ));
                    EXIT_COUNTEREXAMPLE
                }
                None => EXIT_OK,
            };
            (Payload::Count(payload), code)
        }
        Command::Extremal {
            max_genus,
            metric,
            top,
            threads,
        } => {
            if *max_genus < 1 {
                return Err("--max-genus must be at least 1".into());
            }
            let metric: BoundId = metric
                .parse()
                .map_err(|e: wilf_core::Error| e.to_string())?;
            let entries = enumerate::extremal(*max_genus, metric, *top, threads.resolve()?)
                .map_err(|e| e.to_string())?;
            let payload = ExtremalPayload {
                max_genus: *max_genus,
                metric,
                top: *top,
                entries,
            };
            (Payload::Extremal(payload), EXIT_OK)
        }
    };
    let document = ReportDocument::new(command_echo, payload);
    let stdout = render(&document, cli.format);
    Ok(Output {
        stdout,
        stderr,
        exit_code,
        document,
    })
}

pub fn render(doc: &ReportDocument, format: Format) -> String {
    match format {
        Format::Json => report::to_json(doc),
        Format::Csv => match &doc.payload {
            Payload::Inspect(p) => table::inspect(p),
            Payload::Verify(r) => table::verify(r),
            Payload::Count(p) => table::count(p),
            Payload::Extremal(p) => table::extremal(p),
        },
    }
}

fn fmt_atoms(atoms: &[u32]) -> String {
    let parts: Vec<String> = atoms.iter().map(u32::to_string).collect();
    format!("<{}>", parts.join(","))
}

pub fn parse_bounds(list: &str) -> Result<BTreeSet<BoundId>, String> {
    if list.trim().eq_ignore_ascii_case("all") {
        return Ok(BoundId::ALL.into_iter().collect());
    }
    let set = list
        .split(',')
        .map(|t| t.parse::<BoundId>().map_err(|e| e.to_string()))
        .collect::<Result<BTreeSet<_>, _>>()?;
    if set.is_empty() {
        return Err("no bounds selected".into());
    }
    Ok(set)
}

fn inspect(generators: &str) -> Result<(Payload, i32), String> {
    let gens = parse_generator_list(generators).map_err(|e| e.to_string())?;
    let s = NumericalSemigroup::from_generators(&gens).map_err(|e| e.to_string())?;
    let err = |e: wilf_core::Error| e.to_string();
    let invariants = invariants_of(&s).map_err(err)?;
    let bound_checks = bounds::check_all(&invariants).map_err(err)?;
    let witness_cover = build_witness_cover(&s).map_err(err)?;
    let lemma_chain = verify_lemma_bound(&witness_cover, &invariants).map_err(err)?;
    let all_hold = bound_checks.iter().all(|c| c.holds) && lemma_chain.holds;
    let payload = InspectPayload {
        semigroup: s.to_string(),
        gaps: s.gaps().collect(),
        sporadic: sporadic_elements(&s).map_err(err)?.elements,
        wilf_number: wilf_number(&s).map_err(err)?,
        invariants,
        bound_checks,
        all_hold,
        witness_cover,
        lemma_chain,
    };
    let code = if all_hold {
        EXIT_OK
    } else {
        EXIT_COUNTEREXAMPLE
    };
    Ok((Payload::Inspect(payload), code))
}

fn count(
    max_genus: u32,
    oracle_check: Option<u32>,
    workers: usize,
) -> Result<CountPayload, String> {
    if let Some(m) = oracle_check {
        if m > DEFAULT_ORACLE_CAP {
            return Err(wilf_core::Error::CapExceeded {
                genus: m,
                cap: DEFAULT_ORACLE_CAP,
            }
            .to_string());
        }
        if m > max_genus {
            return Err(format!(
                "--oracle-check {m} exceeds --max-genus {max_genus}"
            ));
        }
    }
    let len = max_genus as usize + 1;
    let counts_per_genus = TreeWalk::new(max_genus)
        .workers(workers)
        .fold(
            || vec![0u64; len],
            |acc, s| {
                acc[s.genus() as usize] += 1;
                Ok(())
            },
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        )
        .map_err(|e| e.to_string())?;
    let oracle = match oracle_check {
        None => None,
        Some(m) => {
            let counts = (0..=m)
                .map(|g| enumerate_bruteforce(g, DEFAULT_ORACLE_CAP).map(|v| v.len() as u64))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| e.to_string())?;
            let agrees = counts[..] == counts_per_genus[..counts.len()];
            Some(OracleCheck {
                max_genus: m,
                counts_per_genus: counts,
                agrees,
            })
        }
    };
    Ok(CountPayload {
        max_genus,
        total: counts_per_genus.iter().sum(),
        counts_per_genus,
        oracle,
    })
}
