//! Sweeps over primes for the census, `K₅ₚ` and Fricke checks, the exact
//! identity suites, and the published-table comparison, with a per-prime
//! JSON cache.

pub mod cache;
pub mod range;
pub mod render;

use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use hasse5_core::census::census;
use hasse5_core::fricke::verify_fricke;
use hasse5_core::modeq::{k5p_applicable, k5p_report, S_SET};
use hasse5_core::suite::{run_suite, Check, Suite};
use hasse5_core::tables::{census_rows, FRICKE_ROWS};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use cache::{Cache, Payload};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Census,
    K5p,
    Fricke,
    Charzero,
    Tables,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Census => "census",
            Command::K5p => "k5p",
            Command::Fricke => "fricke",
            Command::Charzero => "charzero",
            Command::Tables => "tables",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Fast,
    Heavy,
    All,
}

#[derive(Debug, Parser)]
#[command(name = "hasse5", version, about = "Level-5 Hasse invariant and supersingular polynomial checks")]
pub struct Cli {
    #[arg(value_enum)]
    pub command: Command,
    /// A prime `N` or an inclusive range `LO..HI`; for `tables`, one of 6..10 or `all`.
    pub target: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, value_enum, default_value_t = SuiteArg::Fast)]
    pub suite: SuiteArg,
    #[arg(long, env = "HASSE5_CACHE")]
    pub cache: Option<PathBuf>,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    /// Seed for `--sample`.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Run `k5p` at primes outside the range where the congruence is asserted;
    /// those reports are informational.
    #[arg(long)]
    pub force: bool,
    /// Restrict `k5p` to the 22 primes of S.
    #[arg(long = "only-in-S")]
    pub only_in_s: bool,
    /// Check this many primes drawn from the range with the seeded generator.
    #[arg(long)]
    pub sample: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Outside the asserted range; does not affect the exit code.
    Info,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeRecord {
    pub prime: u64,
    pub status: Status,
    pub cached: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<Payload>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// One row of a published table next to the computed values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub table: u32,
    pub prime: u64,
    pub printed: [u64; 2],
    pub computed: [u64; 2],
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Output {
    Primes(Vec<PrimeRecord>),
    Checks(Vec<Check>),
    Tables(Vec<TableRow>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunOutput {
    pub command: String,
    pub all_match: bool,
    pub records: Output,
}

impl RunOutput {
    fn new(command: Command, records: Output) -> Self {
        let all_match = match &records {
            Output::Primes(r) => r.iter().all(|x| matches!(x.status, Status::Pass | Status::Info)),
            Output::Checks(c) => c.iter().all(|x| x.holds),
            Output::Tables(t) => t.iter().all(|x| x.status == Status::Pass),
        };
        Self { command: command.name().to_string(), all_match, records }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub primes: Vec<u64>,
    pub tables: Vec<u32>,
    pub suite: Suite,
    pub format: Format,
    pub cache: Option<PathBuf>,
    pub jobs: usize,
    pub seed: u64,
}

fn default_target(c: Command) -> &'static str {
    match c {
        Command::Census => "7..379",
        Command::K5p => "101..600",
        Command::Fricke => "7..97",
        Command::Charzero | Command::Tables => "",
    }
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Result<Self, String> {
        let target = cli.target.clone().unwrap_or_else(|| default_target(cli.command).to_string());
        let mut primes = Vec::new();
        let mut tables = Vec::new();
        match cli.command {
            Command::Census | Command::K5p | Command::Fricke => {
                primes = range::parse_primes(&target)?;
                if cli.command == Command::K5p {
                    let single = primes.len() == 1;
                    if cli.only_in_s {
                        primes.retain(|p| S_SET.contains(p));
                    }
                    if !cli.force {
                        if single && !k5p_applicable(primes[0]) {
                            return Err(format!("k5p: {} is outside S ∪ (379, ∞); use --force", primes[0]));
                        }
                        primes.retain(|&p| k5p_applicable(p));
                    }
                    if primes.is_empty() {
                        return Err(format!("k5p: no applicable primes in {target}"));
                    }
                }
                if let Some(n) = cli.sample {
                    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
                    let mut pick: Vec<u64> = primes.choose_multiple(&mut rng, n).copied().collect();
                    pick.sort_unstable();
                    primes = pick;
                }
            }
            Command::Tables => {
                tables = match target.as_str() {
                    "" | "all" => vec![6, 7, 8, 9, 10],
                    t => match t.parse::<u32>() {
                        Ok(n) if (6..=10).contains(&n) => vec![n],
                        _ => return Err(format!("tables: expected 6, 7, 8, 9, 10 or all, got {t:?}")),
                    },
                };
            }
            Command::Charzero => {}
        }
        let suite = match cli.suite {
            SuiteArg::Fast => Suite::Fast,
            SuiteArg::Heavy => Suite::Heavy,
            SuiteArg::All => Suite::All,
        };
        Ok(Self {
            command: cli.command,
            primes,
            tables,
            suite,
            format: cli.format,
            cache: cli.cache.clone(),
            jobs: cli.jobs,
            seed: cli.seed,
        })
    }
}

fn compute(command: Command, p: u64) -> Result<Payload, String> {
    let r = match command {
        Command::Census => census(p).map(Payload::Census),
        Command::K5p => k5p_report(p).map(Payload::K5p),
        Command::Fricke => verify_fricke(p).map(Payload::Fricke),
        _ => unreachable!("not a per-prime command"),
    };
    r.map_err(|e| format!("p = {p}: {e}"))
}

fn status_of(payload: &Payload) -> Status {
    match payload {
        Payload::Census(r) => pass(r.matches),
        Payload::Fricke(r) => pass(r.passes()),
        Payload::K5p(r) if !k5p_applicable(r.p) => Status::Info,
        Payload::K5p(r) => pass(r.passes()),
    }
}

fn pass(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

/// Runs `command` at every prime, reading and filling the cache.
pub fn sweep(command: Command, primes: &[u64], cache: Option<&Cache>) -> Vec<PrimeRecord> {
    primes
        .par_iter()
        .map(|&p| {
            if let Some(payload) = cache.and_then(|c| c.load(command.name(), p)) {
                return PrimeRecord { prime: p, status: status_of(&payload), cached: true, report: Some(payload), error: None };
            }
            match compute(command, p) {
                Ok(payload) => {
                    if let Some(c) = cache {
                        if let Err(e) = c.store(command.name(), p, &payload) {
                            eprintln!("warning: cache write failed for {} {p}: {e}", command.name());
                        }
                    }
                    PrimeRecord { prime: p, status: status_of(&payload), cached: false, report: Some(payload), error: None }
                }
                Err(e) => PrimeRecord { prime: p, status: Status::Error, cached: false, report: None, error: Some(e) },
            }
        })
        .collect()
}

fn table_rows(tables: &[u32], cache: Option<&Cache>) -> Vec<TableRow> {
    let mut out = Vec::new();
    let census_primes: Vec<u64> =
        tables.iter().filter(|&&t| t < 10).flat_map(|&t| census_rows(t)).map(|r| r.0).collect();
    let censuses = sweep(Command::Census, &census_primes, cache);
    for &t in tables.iter().filter(|&&t| t < 10) {
        for (l, n, h) in census_rows(t) {
            let rec = censuses.iter().find(|r| r.prime == l).expect("swept");
            let computed = match &rec.report {
                Some(Payload::Census(c)) => [c.found_count, c.h],
                _ => [0, 0],
            };
            let ok = rec.status == Status::Pass && computed == [n, h];
            out.push(TableRow { table: t, prime: l, printed: [n, h], computed, status: pass(ok) });
        }
    }
    if tables.contains(&10) {
        let primes: Vec<u64> = FRICKE_ROWS.iter().map(|r| r.0).collect();
        let fr = sweep(Command::Fricke, &primes, cache);
        for ((p, deg, lin), rec) in FRICKE_ROWS.iter().copied().zip(&fr) {
            let computed = match &rec.report {
                Some(Payload::Fricke(f)) => [f.degree_found, f.linear_found],
                _ => [0, 0],
            };
            let ok = rec.status == Status::Pass && computed == [deg, lin];
            out.push(TableRow { table: 10, prime: p, printed: [deg, lin], computed, status: pass(ok) });
        }
    }
    out
}

pub fn run(cfg: &RunConfig) -> RunOutput {
    let cache = cfg.cache.as_ref().map(Cache::new);
    let work = || match cfg.command {
        Command::Census | Command::K5p | Command::Fricke => {
            Output::Primes(sweep(cfg.command, &cfg.primes, cache.as_ref()))
        }
        Command::Charzero => Output::Checks(run_suite(cfg.suite)),
        Command::Tables => Output::Tables(table_rows(&cfg.tables, cache.as_ref())),
    };
    let records = match rayon::ThreadPoolBuilder::new().num_threads(cfg.jobs).build() {
        Ok(pool) => pool.install(work),
        Err(_) => work(),
    };
    RunOutput::new(cfg.command, records)
}
