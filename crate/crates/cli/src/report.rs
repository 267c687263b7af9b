//! The machine-readable classification report.

use modquad_core::iqf::{Branch, IqfVerdict};
use modquad_core::quadsolve::{brute_force_solutions, solve_iqf_candidate};
use modquad_core::{CongruenceInstance, Error, Result};
use serde::{Deserialize, Serialize};

/// Flat, all-integer report for one classified instance. Field order is
/// the serialization order; parsing and re-serializing is byte-identical.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub n: i64,
    pub valid: bool,
    pub branch: String,
    pub r: i64,
    pub k: u32,
    pub m: i64,
    pub delta: i64,
    pub d: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub solutions_true: Vec<i64>,
    pub solutions_iqf: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub p: i64,
    pub alpha: u32,
    pub beta: u32,
}

impl VerdictReport {
    pub fn build(inst: &CongruenceInstance, verdict: &IqfVerdict) -> Result<Self> {
        let witness = match verdict.branch {
            Branch::Obstruction { p, alpha, beta } => Some(Witness { p, alpha, beta }),
            _ => None,
        };
        Ok(Self {
            a: inst.a(),
            b: inst.b(),
            c: inst.c(),
            n: inst.n(),
            valid: verdict.valid,
            branch: verdict.branch.tag().to_string(),
            r: verdict.params.r,
            k: verdict.params.k,
            m: verdict.params.m,
            delta: verdict.params.delta,
            d: i64::try_from(verdict.params.d).map_err(|_| Error::Overflow("report discriminant"))?,
            witness,
            solutions_true: brute_force_solutions(inst)?.into_residues(),
            solutions_iqf: solve_iqf_candidate(inst)?.into_residues(),
        })
    }

    /// Key-value lines for human consumption.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "instance: a={} b={} c={} n={}\n",
            self.a, self.b, self.c, self.n
        ));
        out.push_str(&format!("valid: {}\n", self.valid));
        out.push_str(&format!("branch: {}\n", self.branch));
        out.push_str(&format!(
            "params: r={} k={} m={} delta={} d={}\n",
            self.r, self.k, self.m, self.delta, self.d
        ));
        if let Some(w) = &self.witness {
            out.push_str(&format!(
                "witness: p={} alpha={} beta={}\n",
                w.p, w.alpha, w.beta
            ));
        }
        out.push_str(&format!(
            "solutions_true: {}\n",
            render_residues(&self.solutions_true)
        ));
        out.push_str(&format!(
            "solutions_iqf: {}",
            render_residues(&self.solutions_iqf)
        ));
        out
    }
}

pub fn render_residues(residues: &[i64]) -> String {
    residues
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
