use std::process::ExitCode;

use appell_core::harness::{self, cases, find_case, EvalConfig, Params, VerificationReport};
use appell_core::powerseries::{gf_check_with, GfKind, GfReport};
use appell_core::{Error, Rational};
use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

#[derive(Parser)]
#[command(name = "appell", version, about = "Verify Appell-type Hurwitz zeta identities at high precision")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Records,
}

#[derive(Subcommand)]
enum Cmd {
    /// List registered identities
    List,
    /// Sum each identity's left side and compare with its closed form
    Verify {
        /// Case ids (repeatable); all cases when omitted
        #[arg(long = "case")]
        cases: Vec<String>,
        #[arg(long, default_value_t = 50)]
        prec: u32,
        /// Relative tolerance; defaults to each case's own
        #[arg(long)]
        tol: Option<f64>,
        /// Parameter override key=value (repeatable)
        #[arg(long = "set")]
        sets: Vec<String>,
        #[arg(long, default_value_t = 400)]
        max_diagonals: usize,
        /// Evaluate outside the declared parameter domain
        #[arg(long)]
        override_domain: bool,
        /// Also run each case's built-in sample points
        #[arg(long)]
        samples: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Exact generating-function checks on random rational (x, y)
    GfCheck {
        #[arg(long, default_value_t = 24)]
        order: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Use y = 0 in every trial
        #[arg(long)]
        zero_y: bool,
        /// Perturb LHS coefficient IDX (self-test of the comparison)
        #[arg(long, value_name = "IDX")]
        mutate: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Recompute the fixed E9 and D5 constants and close them against their sums
    PaperConstants {
        #[arg(long, default_value_t = 50)]
        prec: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn cmd_list() -> ExitCode {
    for c in cases() {
        println!("{}  {}", c.id, c.description);
        println!("    identity: {}", c.formula);
        println!("    domain:   {}", c.domain);
        println!("    defaults: {}", (c.defaults)());
        println!("    tol:      {:e}", c.default_tol);
    }
    ExitCode::SUCCESS
}

fn emit(r: &VerificationReport, format: Format) {
    match format {
        Format::Text => print!("{}", r.to_text()),
        Format::Records => println!("{}", r.to_record()),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    ids: Vec<String>,
    prec: u32,
    tol: Option<f64>,
    sets: Vec<String>,
    max_diagonals: usize,
    override_domain: bool,
    samples: bool,
    format: Format,
) -> ExitCode {
    if prec < 20 {
        return usage("--prec must be at least 20");
    }
    if let Some(t) = tol {
        let floor = 10f64.powi(-(prec as i32 - 10));
        if t.is_nan() || t < floor {
            return usage(format!("--tol must be at least 1e-{} at --prec {prec}", prec - 10));
        }
    }
    let mut overrides = Params::new();
    for s in &sets {
        if let Err(e) = overrides.apply_assignment(s) {
            return usage(e);
        }
    }
    let selected: Vec<_> = if ids.is_empty() {
        cases().iter().collect()
    } else {
        let mut v = Vec::new();
        for id in &ids {
            match find_case(id) {
                Ok(c) => v.push(c),
                Err(e) => return usage(e),
            }
        }
        v
    };
    let mut jobs = Vec::new();
    for c in &selected {
        match harness::resolve_params(c, &overrides) {
            Ok(p) => jobs.push((*c, p)),
            Err(e) => return usage(e),
        }
        if samples && overrides.keys().next().is_none() {
            for s in (c.samples)() {
                jobs.push((*c, s));
            }
        }
    }
    let cfg = EvalConfig { prec, tol, max_diagonals, override_domain };
    let results: Vec<_> = jobs.par_iter().map(|(c, p)| harness::evaluate_case(c, p, &cfg)).collect();
    let mut all_pass = true;
    let mut domain_error = false;
    for ((c, p), r) in jobs.iter().zip(results) {
        match r {
            Ok(rep) => {
                all_pass &= rep.pass;
                emit(&rep, format);
            }
            Err(e) => {
                domain_error |= matches!(e, Error::Domain(_) | Error::Parse(_) | Error::UnknownCase(_));
                all_pass = false;
                eprintln!("error: {} [{}]: {e}", c.id, p);
            }
        }
    }
    if domain_error {
        ExitCode::from(EXIT_USAGE)
    } else if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let n: i64 = rng.gen_range(-20..=20);
    let d: i64 = rng.gen_range(1..=12);
    Rational::from((n, d))
}

fn cmd_gfcheck(order: usize, trials: usize, seed: u64, zero_y: bool, mutate: Option<usize>, format: Format) -> ExitCode {
    if order < 2 {
        return usage("--order must be at least 2");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points: Vec<(Rational, Rational)> = (0..trials)
        .map(|_| {
            let x = random_rational(&mut rng);
            let y = if zero_y { Rational::new() } else { random_rational(&mut rng) };
            (x, y)
        })
        .collect();
    let reports: Vec<GfReport> = points
        .par_iter()
        .flat_map_iter(|(x, y)| GfKind::ALL.into_iter().map(move |k| gf_check_with(k, x, y, order, mutate)))
        .collect();
    let mut ok = true;
    for r in &reports {
        ok &= r.equal;
        match format {
            Format::Records => println!("{}", serde_json::to_string(r).expect("report serializes")),
            Format::Text => {
                let verdict = if r.equal { "PASS" } else { "FAIL" };
                let mismatch = r.first_mismatch.map_or(String::new(), |i| format!("  first mismatch at z^{i}"));
                println!("{verdict} {:<17} x={} y={} order={}{mismatch}", r.kind.name(), r.x, r.y, r.order);
            }
        }
    }
    if format == Format::Text {
        println!("{} of {} checks passed", reports.iter().filter(|r| r.equal).count(), reports.len());
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

fn cmd_constants(prec: u32, format: Format) -> ExitCode {
    if prec < 20 {
        return usage("--prec must be at least 20");
    }
    match harness::paper_constants_check(prec) {
        Ok(reports) => {
            let mut ok = true;
            for r in &reports {
                ok &= r.pass;
                emit(r, format);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAIL)
            }
        }
        Err(e) => usage(e),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::List => cmd_list(),
        Cmd::Verify { cases, prec, tol, sets, max_diagonals, override_domain, samples, format } => {
            cmd_verify(cases, prec, tol, sets, max_diagonals, override_domain, samples, format)
        }
        Cmd::GfCheck { order, trials, seed, zero_y, mutate, format } => {
            cmd_gfcheck(order, trials, seed, zero_y, mutate, format)
        }
        Cmd::PaperConstants { prec, format } => cmd_constants(prec, format),
    }
}
