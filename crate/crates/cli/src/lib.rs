//! `modquad`: solve quadratic congruences, extract modular square
//! roots, classify intermediate-form validity, and run verification
//! sweeps.
//!
//! Exit codes: 0 success, 1 verification discrepancy, 2 usage or
//! precondition error, 3 when the modulus divides the leading
//! coefficient (the classifier's standing hypothesis).

pub mod report;
pub mod sweep;

use clap::{Parser, Subcommand, ValueEnum};
use modquad_core::intmath::factorize;
use modquad_core::iqf::{classify, classify_odd_prime_power, classify_power_of_two, IqfVerdict};
use modquad_core::quadsolve::{
    brute_force_solutions, solve_exact, solve_general, solve_iqf_candidate,
};
use modquad_core::sqrtmod::{count_sqrt, sqrt_mod};
use modquad_core::{CongruenceInstance, Error, Result};

use report::{render_residues, VerdictReport};
use sweep::{run_sweep, SweepConfig, BRANCH_TAGS};

#[derive(Debug, Parser)]
#[command(name = "modquad", version, about = "Quadratic congruences mod n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct InstanceArgs {
    /// Quadratic coefficient (nonzero)
    #[arg(short, long, allow_negative_numbers = true)]
    a: i64,
    /// Linear coefficient
    #[arg(short, long, allow_negative_numbers = true)]
    b: i64,
    /// Constant term
    #[arg(short, long, allow_negative_numbers = true)]
    c: i64,
    /// Modulus (at least 2)
    #[arg(short, long)]
    n: i64,
}

impl InstanceArgs {
    fn instance(&self) -> Result<CongruenceInstance> {
        CongruenceInstance::new(self.a, self.b, self.c, self.n)
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Method {
    /// Square roots mod 4|a|n fed through 2ax = -b + s (mod 4|a|n)
    General,
    /// Closed formula (-b + sqrt(d)) / (2a); needs gcd(2a, n) = 1
    Exact,
    /// Intermediate-form candidate: roots mod n through 2ax = -b + s (mod n)
    Iqf,
    /// Direct enumeration of [0, n)
    Brute,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve a*x^2 + b*x + c = 0 (mod n); prints the sorted solutions
    Solve {
        #[command(flatten)]
        inst: InstanceArgs,
        #[arg(long, value_enum)]
        method: Method,
    },
    /// All square roots of u mod n
    Sqrt {
        /// Value whose square roots are wanted
        #[arg(short, long, allow_negative_numbers = true)]
        u: i64,
        /// Modulus (at least 2)
        #[arg(short, long)]
        n: i64,
        /// Print how many roots there are instead of listing them
        #[arg(long)]
        count: bool,
    },
    /// Decide whether the intermediate form solves the instance exactly
    Classify {
        #[command(flatten)]
        inst: InstanceArgs,
        /// Emit the report as one JSON line
        #[arg(long)]
        json: bool,
    },
    /// Check the classifier and the general form against enumeration
    /// over a coefficient/modulus grid
    Verify {
        #[command(flatten)]
        config: SweepConfig,
    },
}

/// Parses arguments from the environment and runs; returns the process
/// exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap reports usage problems on code 2, help/version on 0
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::HypothesisViolated { .. } => 3,
                _ => 2,
            }
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Solve { inst, method } => {
            let inst = inst.instance()?;
            let set = match method {
                Method::General => solve_general(&inst)?,
                Method::Exact => solve_exact(&inst)?,
                Method::Iqf => solve_iqf_candidate(&inst)?,
                Method::Brute => brute_force_solutions(&inst)?,
            };
            println!("{}", render_residues(set.residues()));
            Ok(0)
        }
        Command::Sqrt { u, n, count } => {
            let set = sqrt_mod(u, n)?;
            let formula_count = count_sqrt(u, n)?;
            if formula_count as usize != set.len() {
                println!(
                    "{}",
                    serde_json::json!({
                        "kind": "sqrt-count",
                        "u": u,
                        "n": n,
                        "expected": set.len(),
                        "got": formula_count,
                    })
                );
                return Ok(1);
            }
            if count {
                println!("{formula_count}");
            } else {
                println!("{}", render_residues(set.residues()));
            }
            Ok(0)
        }
        Command::Classify { inst, json } => {
            let inst = inst.instance()?;
            let verdict = classify(&inst)?;
            if let Some(fast) = prime_power_fast_path(&inst)? {
                if fast.valid != verdict.valid || fast.branch != verdict.branch {
                    println!(
                        "{}",
                        serde_json::json!({
                            "kind": "fast-path",
                            "a": inst.a(), "b": inst.b(), "c": inst.c(), "n": inst.n(),
                            "expected": verdict.branch.tag(),
                            "got": fast.branch.tag(),
                        })
                    );
                    return Ok(1);
                }
            }
            let report = VerdictReport::build(&inst, &verdict)?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string(&report).expect("report serializes")
                );
            } else {
                println!("{}", report.render_text());
            }
            Ok(0)
        }
        Command::Verify { config } => {
            let outcome = run_sweep(&config)?;
            for disc in &outcome.discrepancies {
                println!("{}", serde_json::to_string(disc).expect("discrepancy serializes"));
            }
            for (tag, count) in BRANCH_TAGS.iter().zip(outcome.branch_counts) {
                println!("branch {tag}: {count}");
            }
            println!("total instances: {}", outcome.total);
            println!("discrepancies: {}", outcome.discrepancies.len());
            Ok(if outcome.discrepancies.is_empty() { 0 } else { 1 })
        }
    }
}

/// The specialized prime-power classifier applicable to this instance,
/// if any: powers of two always qualify (given the hypothesis holds);
/// odd prime powers p^i need i >= 2 and p | a.
fn prime_power_fast_path(inst: &CongruenceInstance) -> Result<Option<IqfVerdict>> {
    let factors = factorize(inst.n())?;
    let &[(p, i)] = factors.factors() else {
        return Ok(None);
    };
    if p == 2 {
        return classify_power_of_two(inst, i).map(Some);
    }
    if i >= 2 && inst.a() % p == 0 {
        return classify_odd_prime_power(inst, p, i).map(Some);
    }
    Ok(None)
}
