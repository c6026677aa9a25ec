//! Suite runner behind the `quarticz` binary.

use std::fmt;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use quarticz::{verify, Error};
use serde::Serialize;
use serde_json::{json, Value};

pub const SCHEMA_VERSION: u32 = 1;
/// Largest prime accepted by `--primes`.
pub const MAX_PRIME: u64 = 61;
/// Largest bound for the Hecke and spin sweeps.
pub const MAX_SWEEP: u64 = 97;
/// Largest q-expansion order accepted by `--order`.
pub const MAX_ORDER: usize = 2000;
/// The birational map enumerates P⁴ and is checked only up to this prime.
pub const BIRATIONAL_CAP: u64 = 13;
const SEED: u64 = 0x5eed;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Counts,
    Fermat,
    ThetaTable,
    Orbits,
    FzPhi,
    GTriple,
    Hecke,
    Lfactors,
    Spin,
    Lefschetz,
    Ez,
    All,
}

impl Suite {
    pub const EACH: [Suite; 11] = [
        Suite::Counts,
        Suite::Fermat,
        Suite::ThetaTable,
        Suite::Orbits,
        Suite::FzPhi,
        Suite::GTriple,
        Suite::Hecke,
        Suite::Lfactors,
        Suite::Spin,
        Suite::Lefschetz,
        Suite::Ez,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Counts => "counts",
            Suite::Fermat => "fermat",
            Suite::ThetaTable => "theta-table",
            Suite::Orbits => "orbits",
            Suite::FzPhi => "fz-phi",
            Suite::GTriple => "g-triple",
            Suite::Hecke => "hecke",
            Suite::Lfactors => "lfactors",
            Suite::Spin => "spin",
            Suite::Lefschetz => "lefschetz",
            Suite::Ez => "ez",
            Suite::All => "all",
        }
    }

    /// The statement each suite checks.
    pub fn anchor(self) -> &'static str {
        match self {
            Suite::Counts => "point counts of F, Cone(F), Z, Z~ and the U1c/U2c complements; birational map U1 -> U2",
            Suite::Fermat => "|F(F_p)| = 1 + p^2 + (9 + 7chi_-1 + 2chi_2 + 2chi_-2)p + a_p",
            Suite::ThetaTable => "Igusa theta transformation law and the pair characters on the ten Gamma(2) generators",
            Suite::Orbits => "Gamma(2) orbits on six-tuples of even theta characteristics",
            Suite::FzPhi => "Siegel Phi of F_Z after g0 equals theta00^2 theta01^2 theta10^2",
            Suite::GTriple => "three constructions of the weight-3 CM newform g of level 16",
            Suite::Hecke => "T_p g = a_p g",
            Suite::Lfactors => "degree-21 local factor of H^2 of Z~",
            Suite::Spin => "spinor local factor of the lift equals L_p(s, g) L_p(s-1, g) up to twist",
            Suite::Lefschetz => "Lefschetz trace formula on Z~",
            Suite::Ez => "E_Z is a Gamma_Z-invariant holomorphic 2-form with Phi(E_Z) = g(tau1/4)",
            Suite::All => "all suites",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, clap::Args)]
pub struct ConfigArgs {
    /// Comma-separated odd primes.
    #[arg(long, env = "QUARTICZ_PRIMES", value_delimiter = ',', default_value = "3,5,7,11,13")]
    pub primes: Vec<u64>,
    /// q-expansion order.
    #[arg(long, env = "QUARTICZ_ORDER", default_value_t = 200)]
    pub order: usize,
    /// Numeric tolerance for theta identities; the 2-form checks use max(tol, 1e-6).
    #[arg(long, env = "QUARTICZ_TOL", default_value_t = 1e-8)]
    pub tol: f64,
    /// Minimum squared lattice radius for the E_Z sum; the truncation grows past it as needed.
    #[arg(long, env = "QUARTICZ_RADIUS2", default_value_t = 0.0)]
    pub radius2: f64,
    /// Bound for the Hecke and spin sweeps over odd primes.
    #[arg(long, env = "QUARTICZ_SWEEP", default_value_t = 50)]
    pub sweep: u64,
    /// Write the JSON report here instead of stdout.
    #[arg(long, env = "QUARTICZ_OUT")]
    pub out: Option<PathBuf>,
    /// Additional suites; combined with the positional list.
    #[arg(long = "suite", env = "QUARTICZ_SUITE", value_delimiter = ',')]
    pub suite: Vec<Suite>,
}

#[derive(Debug, Parser)]
#[command(name = "quarticz", version, about = "Exact and numeric checks for the Fermat quartic, Z and the form g")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run verification suites and emit a JSON report.
    Verify {
        suites: Vec<Suite>,
        #[command(flatten)]
        config: ConfigArgs,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub primes: Vec<u64>,
    pub order: usize,
    pub tol: f64,
    pub radius2: f64,
    pub sweep: u64,
    pub sample_points: usize,
    pub out: Option<PathBuf>,
    pub suites: Vec<Suite>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            primes: vec![3, 5, 7, 11, 13],
            order: 200,
            tol: 1e-8,
            radius2: 0.0,
            sweep: 50,
            sample_points: quarticz::theta::sample_points().len(),
            out: None,
            suites: Suite::EACH.to_vec(),
        }
    }
}

impl RunConfig {
    /// Validates and expands `all`; suites are deduplicated in canonical order.
    pub fn from_args(suites: Vec<Suite>, args: ConfigArgs) -> Result<Self, String> {
        let mut chosen: Vec<Suite> = suites.into_iter().chain(args.suite).collect();
        if chosen.is_empty() {
            return Err("no suite selected".into());
        }
        if chosen.contains(&Suite::All) {
            chosen = Suite::EACH.to_vec();
        }
        chosen.sort();
        chosen.dedup();
        let cfg = RunConfig {
            primes: args.primes,
            order: args.order,
            tol: args.tol,
            radius2: args.radius2,
            sweep: args.sweep,
            out: args.out,
            suites: chosen,
            ..RunConfig::default()
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.primes.is_empty() {
            return Err("--primes is empty".into());
        }
        for &p in &self.primes {
            if !quarticz::cmform::is_odd_prime(p) {
                return Err(format!("{p} is not an odd prime"));
            }
            if p > MAX_PRIME {
                return Err(format!("prime {p} exceeds the cap {MAX_PRIME}"));
            }
        }
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return Err("--tol must be positive".into());
        }
        if !(self.radius2.is_finite() && self.radius2 >= 0.0) {
            return Err("--radius2 must be non-negative".into());
        }
        if !(20..=MAX_ORDER).contains(&self.order) {
            return Err(format!("--order must lie in 20..={MAX_ORDER}"));
        }
        if !(3..=MAX_SWEEP).contains(&self.sweep) {
            return Err(format!("--sweep must lie in 3..={MAX_SWEEP}"));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Measured,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: Suite,
    pub anchor: &'static str,
    pub status: Status,
    pub residual: f64,
    pub runtime_s: f64,
    pub details: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunOutput {
    pub schema_version: u32,
    pub config: RunConfig,
    pub reports: Vec<VerificationReport>,
}

impl RunOutput {
    pub fn exit_code(&self) -> i32 {
        if self.reports.iter().any(|r| r.status == Status::Fail) {
            1
        } else {
            0
        }
    }

    pub fn summary_table(&self) -> String {
        let mut s = format!("{:<12} {:<9} {:>11} {:>9}\n", "suite", "status", "residual", "time[s]");
        for r in &self.reports {
            let st = match r.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Measured => "measured",
            };
            s += &format!("{:<12} {:<9} {:>11.3e} {:>9.2}\n", r.suite.name(), st, r.residual, r.runtime_s);
        }
        s
    }
}

fn status(passed: bool) -> Status {
    if passed {
        Status::Pass
    } else {
        Status::Fail
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

/// Runs one suite, returning (status, residual, details).
fn run_suite(suite: Suite, cfg: &RunConfig) -> Result<(Status, f64, Value), Error> {
    Ok(match suite {
        Suite::Counts => {
            let r = verify::counts(&cfg.primes, BIRATIONAL_CAP)?;
            (status(r.passed), r.max_residual as f64, to_value(&r))
        }
        Suite::Fermat => {
            let r = verify::fermat(&cfg.primes)?;
            let residual = r.rows.iter().map(|x| x.residual.abs()).max().unwrap_or(0) as f64;
            // The identity is checked; the trace at 3 is only reported.
            let st = if r.passed { Status::Measured } else { Status::Fail };
            (st, residual, to_value(&r))
        }
        Suite::ThetaTable => {
            let r = verify::transformation(SEED, cfg.tol)?;
            let residual = r.squared_law_max.max(r.table_max).max(r.fz_gamma_z_max).max(r.fz_gamma48_max);
            (status(r.passed), residual, to_value(&r))
        }
        Suite::Orbits => {
            let r = verify::orbits();
            (status(r.passed), 0.0, to_value(&r))
        }
        Suite::FzPhi => {
            let r = verify::phi_identity(cfg.order as i64, cfg.tol)?;
            (status(r.passed), r.g2_vs_series, to_value(&r))
        }
        Suite::GTriple => {
            let r = verify::g_triple(cfg.order)?;
            (status(r.passed), if r.sources_agree { 0.0 } else { 1.0 }, to_value(&r))
        }
        Suite::Hecke => {
            let r = verify::hecke(cfg.sweep, cfg.order.max(20 * cfg.sweep as usize))?;
            (status(r.passed), r.max_residual, to_value(&r))
        }
        Suite::Lfactors => {
            let r = verify::lfactors(&cfg.primes)?;
            (status(r.passed), 0.0, to_value(&r))
        }
        Suite::Spin => {
            let r = verify::spin(cfg.sweep)?;
            (status(r.passed), if r.passed { 0.0 } else { 1.0 }, to_value(&r))
        }
        Suite::Lefschetz => {
            let r = verify::lefschetz(&cfg.primes)?;
            let residual = r.rows.iter().map(|x| x.residual.abs()).max().unwrap_or(0) as f64;
            (status(r.passed), residual, to_value(&r))
        }
        Suite::Ez => {
            let r = verify::ez(cfg.tol.max(1e-6), cfg.radius2, SEED)?;
            let residual = r.gamma48_max.max(r.gamma_z_max).max(r.phi.residual);
            (status(r.passed), residual, to_value(&r))
        }
        Suite::All => unreachable!("expanded during validation"),
    })
}

/// Runs the selected suites in order. A suite that errors is reported as a failure.
pub fn run(cfg: &RunConfig) -> RunOutput {
    let reports = cfg
        .suites
        .iter()
        .map(|&suite| {
            let start = Instant::now();
            let (status, residual, details) = match run_suite(suite, cfg) {
                Ok(x) => x,
                Err(e) => (Status::Fail, f64::INFINITY, json!({ "error": e.to_string() })),
            };
            VerificationReport { suite, anchor: suite.anchor(), status, residual, runtime_s: start.elapsed().as_secs_f64(), details }
        })
        .collect();
    RunOutput { schema_version: SCHEMA_VERSION, config: cfg.clone(), reports }
}
