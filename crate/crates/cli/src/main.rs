//! `lcrit`: batch front end for the exact critical-value combinatorics of
//! GL(n) x GL(n-1) Rankin-Selberg L-functions.
//!
//! Subcommands read a JSON problem description (`--input FILE`, `-` for
//! stdin), print a text table by default or machine JSON with `--json`, and
//! exit 0 on success, 2 on bad input, 3 on an internal consistency failure.

mod input;
mod report;
mod verify;

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use lcrit_core::archimedean::critical_set_scan;
use lcrit_core::branching::{compat_set, critical_set_closed_form};
use lcrit_core::cohomology::{
    degrees, dim_symmetric_space, permissible_signature_count, verify_degree_identity,
};
use lcrit_core::motivic::{classify, hodge_from_gl2_weight, motivic_gamma, HodgeData};
use lcrit_core::signs_periods::{derive_sym3_rhs, hecke_signature, sign_recipe};
use lcrit_core::symmetric::{
    det_weight, sym3_critical_set, sym3_critical_set_scan, sym_compat_necessary, sym_weight,
};
use lcrit_core::Error;

use input::ProblemSpec;
use report::*;

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Consistency(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NonIntervalScan => CliError::Consistency(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "lcrit",
    about = "Exact critical-value combinatorics for GL(n) x GL(n-1) over a number field",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// JSON problem description; `-` reads stdin.
    #[arg(long)]
    input: String,
    /// Emit machine-readable JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct PeriodArgs {
    /// Emit machine-readable JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// RNG seed; the whole suite is deterministic given the seed.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Number of randomized trials per check.
    #[arg(long, default_value_t = 200)]
    trials: u64,
    /// Bound on weight entries drawn by the samplers.
    #[arg(long = "max-entry", default_value_t = 10)]
    max_entry: i64,
    /// Emit machine-readable JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Critical set three ways: compatibility set, closed form, Gamma scan.
    CriticalSet(InputArgs),
    /// Compatibility set of integer twists for a weight pair.
    Compat(InputArgs),
    /// Symmetric-power transfers, cube critical set, compat feasibility.
    Sym(InputArgs),
    /// Cuspidal-cohomology degree bookkeeping.
    Degrees(InputArgs),
    /// Sign recipes at the real places.
    Signs(InputArgs),
    /// Hodge data, criticality type, and motivic Gamma shifts.
    Motivic(InputArgs),
    /// The mechanized symmetric-cube period monomial with its rewrite trace.
    PeriodDerive(PeriodArgs),
    /// Seeded randomized cross-check suite.
    Verify(VerifyArgs),
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Input(e.to_string()))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{path}: {e}")))
    }
}

fn emit<T: Serialize>(report: &T, human: String, json: bool) -> Result<(), CliError> {
    if json {
        let text = serde_json::to_string_pretty(report)
            .map_err(|e| CliError::Consistency(e.to_string()))?;
        println!("{text}");
    } else {
        print!("{human}");
    }
    Ok(())
}

fn cmd_critical_set(args: &InputArgs) -> Result<(), CliError> {
    let spec = ProblemSpec::parse(&read_input(&args.input)?)?;
    let mu = spec.mu_weight()?;
    let lam = spec.lambda_weight()?;
    let compat = compat_set(&mu, &lam)?;
    let closed_form = match critical_set_closed_form(&mu, &lam) {
        Ok(set) => Some(set),
        Err(Error::EmptyCompatSet) => None,
        Err(e) => return Err(e.into()),
    };
    let scan = critical_set_scan(&mu, &lam)?;
    let consistent = match closed_form {
        Some(closed) => compat == closed && compat == scan,
        None => compat.is_empty(),
    };
    let verdict = if !consistent {
        "internal consistency failure".to_string()
    } else if !compat.is_empty() {
        "compatible; all three routes agree".to_string()
    } else if !scan.is_empty() {
        "incompatible sheaves, critical points exist".to_string()
    } else {
        "no critical points".to_string()
    };
    let report = CriticalSetReport {
        compat,
        closed_form,
        scan,
        point: spec.m.map(|m| PointQuery {
            m,
            is_critical: scan.contains(m),
        }),
        verdict,
        consistent,
    };
    emit(&report, report.human(), args.json)?;
    if !report.consistent {
        return Err(CliError::Consistency("critical-set routes disagree".into()));
    }
    Ok(())
}

fn cmd_compat(args: &InputArgs) -> Result<(), CliError> {
    let spec = ProblemSpec::parse(&read_input(&args.input)?)?;
    let mu = spec.mu_weight()?;
    let lam = spec.lambda_weight()?;
    let set = compat_set(&mu, &lam)?;
    let report = CompatReport {
        set,
        size: set.len(),
        mu_purity: mu.purity(),
        lambda_purity: lam.purity(),
    };
    emit(&report, report.human(), args.json)
}

fn cmd_sym(args: &InputArgs) -> Result<(), CliError> {
    let spec = ProblemSpec::parse(&read_input(&args.input)?)?;
    let mu = spec.mu_weight()?;
    let r = spec.r.unwrap_or(3);
    let sym = sym_weight(&mu, r)?;
    let det = det_weight(&mu)?;
    let sym3_closed = sym3_critical_set(&mu)?;
    let sym3_scan = sym3_critical_set_scan(&mu)?;
    let report = SymReport {
        r,
        sym_purity_weight: sym.purity_weight()?,
        sym_weight: sym.to_data(),
        det_weight: det.to_data(),
        compat: sym_compat_necessary(&mu, r)?,
        sym3_closed,
        sym3_scan,
        consistent: sym3_closed == sym3_scan,
    };
    emit(&report, report.human(), args.json)?;
    if !report.consistent {
        return Err(CliError::Consistency("Sym^3 routes disagree".into()));
    }
    Ok(())
}

fn cmd_degrees(args: &InputArgs) -> Result<(), CliError> {
    let spec = ProblemSpec::parse(&read_input(&args.input)?)?;
    let n = spec
        .n
        .or(spec.mu.as_ref().map(|m| m.n as u64))
        .ok_or_else(|| CliError::Input("degrees needs `n` or a `mu` weight".into()))?;
    if n < 1 {
        return Err(CliError::Input("degrees needs n >= 1".into()));
    }
    let sig = &spec.signature;
    let report = DegreesReport {
        degrees: degrees(n, sig),
        dim_symmetric_space: dim_symmetric_space(n, sig),
        identity_holds: (n >= 2).then(|| verify_degree_identity(n, sig)),
        permissible_signatures: permissible_signature_count(n, sig),
    };
    emit(&report, report.human(), args.json)
}

fn cmd_signs(args: &InputArgs) -> Result<(), CliError> {
    let spec = ProblemSpec::parse(&read_input(&args.input)?)?;
    let n = spec
        .n
        .or(spec.mu.as_ref().map(|m| m.n as u64))
        .ok_or_else(|| CliError::Input("signs needs `n` or a `mu` weight".into()))?;
    let r1 = spec.signature.r1();
    // Central-character values omega_v(-1): explicit, else the finite part
    // of the supplied Hecke character, else trivial.
    let parities = match (&spec.central_parities, &spec.hecke) {
        (Some(p), _) => p.clone(),
        (None, Some(chi)) => chi.real_parities.clone(),
        (None, None) => vec![1; r1],
    };
    if parities.len() != r1 {
        return Err(CliError::Input(format!(
            "need one central parity per real place ({r1})"
        )));
    }
    let hecke_sig = spec
        .hecke
        .as_ref()
        .map(|chi| hecke_signature(chi, &spec.signature))
        .transpose()?
        .map(|s| s.signs().to_vec());
    let w_mu = match (spec.w_mu, &spec.mu) {
        (Some(w), _) => w,
        (None, Some(_)) => spec.mu_weight()?.purity_weight()?,
        (None, None) => 0,
    };
    let w_lambda = match (spec.w_lambda, &spec.lambda) {
        (Some(w), _) => w,
        (None, Some(_)) => spec.lambda_weight()?.purity_weight()?,
        (None, None) => 0,
    };
    let (eps, eta) = sign_recipe(n as usize, &parities, w_mu, w_lambda)?;
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let law_holds = eps
        .signs()
        .iter()
        .zip(eta.signs())
        .all(|(a, b)| *a == sign * b);
    let report = SignsReport {
        n,
        eps: eps.signs().to_vec(),
        eta: eta.signs().to_vec(),
        hecke_signature: hecke_sig,
        law_holds,
    };
    emit(&report, report.human(), args.json)
}

fn cmd_motivic(args: &InputArgs) -> Result<(), CliError> {
    let spec = ProblemSpec::parse(&read_input(&args.input)?)?;
    let hodge = match (&spec.hodge, &spec.mu) {
        (Some(repr), _) => HodgeData::from_repr(spec.signature.clone(), repr)?,
        (None, Some(_)) => hodge_from_gl2_weight(&spec.mu_weight()?)?,
        (None, None) => {
            return Err(CliError::Input(
                "motivic needs `hodge` data or a GL(2) `mu` weight".into(),
            ))
        }
    };
    let hodge = hodge.tate_twist(spec.tate.unwrap_or(0));
    let d = spec.signature.degree();
    let infinity_type = match (&spec.infinity_type, &spec.lambda) {
        (Some(j), _) => j.clone(),
        (None, Some(_)) => {
            let lam = spec.lambda_weight()?;
            if lam.rank() != 1 {
                return Err(CliError::Input(
                    "the twisting character weight must have rank 1".into(),
                ));
            }
            (0..d).map(|e| lam.component(e)[0]).collect()
        }
        (None, None) => vec![0; d],
    };
    if infinity_type.len() != d {
        return Err(CliError::Input(format!(
            "infinity type must list all {d} embeddings"
        )));
    }
    let report = MotivicReport {
        criticality: classify(&hodge, &infinity_type)?,
        gamma_shifts: motivic_gamma(&hodge),
        hodge: hodge.to_repr(),
        infinity_type,
    };
    emit(&report, report.human(), args.json)
}

fn cmd_period_derive(args: &PeriodArgs) -> Result<(), CliError> {
    let derivation = derive_sym3_rhs()?;
    let trace = derivation
        .gl3_gl2_trace
        .iter()
        .map(|s| format!("[GL3xGL2] {s}"))
        .chain(
            derivation
                .gl2_gl1_trace
                .iter()
                .map(|s| format!("[GL2xGL1] {s}")),
        )
        .collect();
    let report = PeriodDeriveReport {
        gl3_gl2_relation: format!("{} ~ {}", derivation.gl3_gl2_lhs, derivation.gl3_gl2_raw),
        gl2_gl1_relation: format!("{} ~ {}", derivation.gl2_gl1_lhs, derivation.gl2_gl1_raw),
        gl3_gl2_normal: derivation.gl3_gl2_normal,
        gl2_gl1_normal: derivation.gl2_gl1_normal,
        gauss_xi_exponent: derivation.result.gauss_exponent("xi"),
        gauss_omega_pi_exponent: derivation.result.gauss_exponent("omega_pi"),
        result: derivation.result,
        trace,
    };
    emit(&report, report.human(), args.json)
}

fn cmd_verify(args: &VerifyArgs) -> Result<(), CliError> {
    let report = verify::run_verify(args.seed, args.trials, args.max_entry);
    emit(&report, report.human(), args.json)?;
    if !report.all_pass {
        return Err(CliError::Consistency("verification suite failed".into()));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::CriticalSet(args) => cmd_critical_set(args),
        Command::Compat(args) => cmd_compat(args),
        Command::Sym(args) => cmd_sym(args),
        Command::Degrees(args) => cmd_degrees(args),
        Command::Signs(args) => cmd_signs(args),
        Command::Motivic(args) => cmd_motivic(args),
        Command::PeriodDerive(args) => cmd_period_derive(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Input(msg)) => {
            eprintln!("input error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Consistency(msg)) => {
            eprintln!("consistency failure: {msg}");
            ExitCode::from(3)
        }
    }
}
