//! The three solution routes for `ax^2 + bx + c = 0 (mod n)`.
//!
//! Completing the square turns the congruence into a square-root problem:
//! `(2ax + b)^2 = d (mod 4an)` with `d = b^2 - 4ac`. The general form
//! works over modulus `4|a|n` and always yields the true solution set.
//! The exact form divides by `2a` and needs `gcd(2a, n) = 1`. The
//! intermediate-form candidate runs the same recipe over modulus `n`
//! alone; it proposes a superset of the true solutions that coincides
//! with them exactly when the intermediate form is valid (see
//! [`crate::iqf`]).

use std::collections::{BTreeSet, HashSet};

use crate::intmath::{gcd, mod_inverse, solve_linear_congruence};
use crate::sqrtmod::sqrt_mod;
use crate::{Error, Result, SolutionSet};

/// The congruence `a x^2 + b x + c = 0 (mod n)` with `a != 0`, `n >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CongruenceInstance {
    a: i64,
    b: i64,
    c: i64,
    n: i64,
}

impl CongruenceInstance {
    pub fn new(a: i64, b: i64, c: i64, n: i64) -> Result<Self> {
        if a == 0 {
            return Err(Error::BadInstance("leading coefficient a must be nonzero"));
        }
        if n < 2 {
            return Err(Error::BadModulus { modulus: n });
        }
        Ok(Self { a, b, c, n })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    pub fn n(&self) -> i64 {
        self.n
    }
}

/// The exact integer `b^2 - 4ac`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Discriminant(i128);

impl Discriminant {
    pub fn value(self) -> i128 {
        self.0
    }
}

/// `b^2 - 4ac` with checked arithmetic.
pub fn discriminant(inst: &CongruenceInstance) -> Result<Discriminant> {
    let b2 = (inst.b as i128) * (inst.b as i128);
    let ac = (inst.a as i128)
        .checked_mul(inst.c as i128)
        .and_then(|v| v.checked_mul(4))
        .ok_or(Error::Overflow("discriminant"))?;
    b2.checked_sub(ac)
        .map(Discriminant)
        .ok_or(Error::Overflow("discriminant"))
}

/// `q(x) = a x^2 + b x + c` reduced into `[0, n)`.
///
/// Terms are reduced mod `n` before multiplying, so no input can overflow.
pub fn eval_q(inst: &CongruenceInstance, x: i64) -> i64 {
    let n = inst.n as i128;
    let x = (x as i128).rem_euclid(n);
    let a = (inst.a as i128).rem_euclid(n);
    let b = (inst.b as i128).rem_euclid(n);
    let c = (inst.c as i128).rem_euclid(n);
    ((a * x % n * x + b * x + c) % n) as i64
}

/// General form: roots `s` of `x^2 = d (mod 4|a|n)`, one representative
/// per class mod `2|a|n`, each fed through `2ax = -b + s (mod 4|a|n)`,
/// results reduced mod `n`.
pub fn solve_general(inst: &CongruenceInstance) -> Result<SolutionSet> {
    let n = inst.n;
    let m4 = (inst.a.unsigned_abs() as i128)
        .checked_mul(4 * n as i128)
        .filter(|&v| v <= i64::MAX as i128)
        .ok_or(Error::Overflow("general-form modulus 4|a|n"))? as i64;
    let m2 = m4 / 2;
    let d = discriminant(inst)?.value();
    let roots = sqrt_mod(reduce(d, m4), m4)?;

    // Minimal representative per residue class mod 2|a|n; the roots come
    // sorted, so the first hit per class is the least one.
    let mut seen = HashSet::new();
    let mut reps = Vec::new();
    for s in roots.iter() {
        if seen.insert(s % m2) {
            reps.push(s);
        }
    }

    let coeff = reduce(2 * inst.a as i128, m4);
    let mut out = BTreeSet::new();
    for s in reps {
        let rhs = reduce(s as i128 - inst.b as i128, m4);
        for x in solve_linear_congruence(coeff, rhs, m4)?.iter() {
            out.insert(x % n);
        }
    }
    SolutionSet::new(n, out.into_iter().collect())
}

/// Exact form `x = (-b + s) * (2a)^-1 (mod n)` over the roots `s` of
/// `x^2 = d (mod n)`; requires `gcd(2a, n) = 1`.
pub fn solve_exact(inst: &CongruenceInstance) -> Result<SolutionSet> {
    let n = inst.n;
    let two_a = reduce(2 * inst.a as i128, n);
    if gcd(two_a, n) != 1 {
        return Err(Error::PreconditionViolated("2a and n must be coprime"));
    }
    let inv = mod_inverse(two_a, n)?;
    let d = discriminant(inst)?.value();
    let sols = sqrt_mod(reduce(d, n), n)?
        .iter()
        .map(|s| ((s as i128 - inst.b as i128) * inv as i128).rem_euclid(n as i128) as i64)
        .collect();
    SolutionSet::new(n, sols)
}

/// The candidate set the intermediate form proposes: the union over the
/// roots `s` of `x^2 = d (mod n)` of the solutions of
/// `2ax = -b + s (mod n)`. Always contains the true solution set; equals
/// it exactly when the intermediate form is valid.
pub fn solve_iqf_candidate(inst: &CongruenceInstance) -> Result<SolutionSet> {
    let n = inst.n;
    let d = discriminant(inst)?.value();
    let coeff = reduce(2 * inst.a as i128, n);
    let mut out = BTreeSet::new();
    for s in sqrt_mod(reduce(d, n), n)?.iter() {
        let rhs = reduce(s as i128 - inst.b as i128, n);
        out.extend(solve_linear_congruence(coeff, rhs, n)?.iter());
    }
    SolutionSet::new(n, out.into_iter().collect())
}

/// Enumeration oracle: every `x` in `[0, n)` with `q(x) = 0 (mod n)`.
pub fn brute_force_solutions(inst: &CongruenceInstance) -> Result<SolutionSet> {
    let sols = (0..inst.n).filter(|&x| eval_q(inst, x) == 0).collect();
    SolutionSet::new(inst.n, sols)
}

/// Whether the intermediate form is valid for this instance, decided by
/// comparing the candidate set against the enumerated truth.
pub fn iqf_holds_brute(inst: &CongruenceInstance) -> Result<bool> {
    Ok(solve_iqf_candidate(inst)? == brute_force_solutions(inst)?)
}

fn reduce(x: i128, m: i64) -> i64 {
    x.rem_euclid(m as i128) as i64
}
