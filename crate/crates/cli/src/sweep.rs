//! The verification sweep behind `modquad verify`.

use std::sync::atomic::{AtomicBool, AtomicI64, Ordering};
use std::sync::Mutex;

use modquad_core::iqf::{classify, Branch};
use modquad_core::quadsolve::{brute_force_solutions, iqf_holds_brute, solve_general};
use modquad_core::{CongruenceInstance, Error, Result};
use serde::Serialize;

use crate::report::render_residues;

pub const BRANCH_TAGS: [&str; 6] = ["a", "b.i", "b.ii", "b.iii", "b.iv", "invalid"];

/// Grid and execution settings for a verification sweep.
#[derive(Debug, Clone, clap::Args)]
pub struct SweepConfig {
    /// Smallest modulus in the grid
    #[arg(long, default_value_t = 2)]
    pub n_min: i64,
    /// Largest modulus in the grid
    #[arg(long, default_value_t = 16)]
    pub n_max: i64,
    /// Smallest coefficient value for a, b, c
    #[arg(long, default_value_t = -4, allow_negative_numbers = true)]
    pub coeff_min: i64,
    /// Largest coefficient value for a, b, c
    #[arg(long, default_value_t = 4, allow_negative_numbers = true)]
    pub coeff_max: i64,
    /// Worker threads; the grid is split by modulus
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    /// Stop at the first discrepancy
    #[arg(long)]
    pub fail_fast: bool,
}

/// One classifier-vs-oracle or solver-vs-oracle mismatch, printed as a
/// single JSON line.
#[derive(Debug, Clone, Serialize)]
pub struct Discrepancy {
    pub kind: String,
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub n: i64,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Default)]
pub struct SweepOutcome {
    pub branch_counts: [u64; 6],
    pub total: u64,
    pub discrepancies: Vec<Discrepancy>,
}

fn branch_index(branch: &Branch) -> usize {
    match branch {
        Branch::NonResidue => 0,
        Branch::Obstruction { .. } => 1,
        Branch::BranchTwo => 2,
        Branch::BranchThree => 3,
        Branch::BranchFour => 4,
        Branch::Invalid => 5,
    }
}

fn validate(config: &SweepConfig) -> Result<()> {
    if config.n_min < 2 || config.n_min > config.n_max {
        return Err(Error::PreconditionViolated(
            "need 2 <= n-min <= n-max",
        ));
    }
    if config.coeff_min > config.coeff_max {
        return Err(Error::PreconditionViolated("need coeff-min <= coeff-max"));
    }
    if config.coeff_min == 0 && config.coeff_max == 0 {
        return Err(Error::PreconditionViolated(
            "coefficient range must contain a nonzero value",
        ));
    }
    if config.workers < 1 {
        return Err(Error::PreconditionViolated("need at least one worker"));
    }
    Ok(())
}

/// Checks `classify` against the brute-force oracle and `solve_general`
/// against enumeration over the whole grid. Moduli are handed out to
/// workers one at a time; per-instance work is independent, so any
/// partition produces the same aggregate.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepOutcome> {
    validate(config)?;
    let next = AtomicI64::new(config.n_min);
    let stop = AtomicBool::new(false);
    let merged: Mutex<SweepOutcome> = Mutex::new(SweepOutcome::default());
    let failure: Mutex<Option<Error>> = Mutex::new(None);

    std::thread::scope(|scope| {
        for _ in 0..config.workers {
            scope.spawn(|| {
                let mut local = SweepOutcome::default();
                loop {
                    let n = next.fetch_add(1, Ordering::Relaxed);
                    if n > config.n_max || stop.load(Ordering::Relaxed) {
                        break;
                    }
                    if let Err(e) = sweep_one_modulus(config, n, &mut local, &stop) {
                        *failure.lock().unwrap() = Some(e);
                        stop.store(true, Ordering::Relaxed);
                        break;
                    }
                }
                let mut shared = merged.lock().unwrap();
                for (dst, src) in shared.branch_counts.iter_mut().zip(local.branch_counts) {
                    *dst += src;
                }
                shared.total += local.total;
                shared.discrepancies.append(&mut local.discrepancies);
            });
        }
    });

    if let Some(e) = failure.into_inner().unwrap() {
        return Err(e);
    }
    let mut outcome = merged.into_inner().unwrap();
    outcome
        .discrepancies
        .sort_by_key(|d| (d.n, d.a, d.b, d.c, d.kind.clone()));
    Ok(outcome)
}

fn sweep_one_modulus(
    config: &SweepConfig,
    n: i64,
    local: &mut SweepOutcome,
    stop: &AtomicBool,
) -> Result<()> {
    for a in config.coeff_min..=config.coeff_max {
        if a == 0 || a.rem_euclid(n) == 0 {
            continue;
        }
        for b in config.coeff_min..=config.coeff_max {
            for c in config.coeff_min..=config.coeff_max {
                if stop.load(Ordering::Relaxed) {
                    return Ok(());
                }
                let inst = CongruenceInstance::new(a, b, c, n)?;
                local.total += 1;

                let verdict = classify(&inst)?;
                local.branch_counts[branch_index(&verdict.branch)] += 1;
                let truth = iqf_holds_brute(&inst)?;
                if verdict.valid != truth {
                    local.discrepancies.push(Discrepancy {
                        kind: "classify".into(),
                        a,
                        b,
                        c,
                        n,
                        expected: truth.to_string(),
                        got: format!("{} ({})", verdict.valid, verdict.branch.tag()),
                    });
                    if config.fail_fast {
                        stop.store(true, Ordering::Relaxed);
                        return Ok(());
                    }
                }

                let general = solve_general(&inst)?;
                let brute = brute_force_solutions(&inst)?;
                if general != brute {
                    local.discrepancies.push(Discrepancy {
                        kind: "general".into(),
                        a,
                        b,
                        c,
                        n,
                        expected: render_residues(brute.residues()),
                        got: render_residues(general.residues()),
                    });
                    if config.fail_fast {
                        stop.store(true, Ordering::Relaxed);
                        return Ok(());
                    }
                }
            }
        }
    }
    Ok(())
}
