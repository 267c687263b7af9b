//! Deciding validity of the intermediate quadratic formula.
//!
//! For an instance `ax^2 + bx + c = 0 (mod n)` with `n` not dividing `a`,
//! write `r = gcd(a, n)` and `n = 2^k * r * m` with `m` odd. The
//! intermediate form (roots of `x^2 = d (mod n)` fed through
//! `2ax = -b + s (mod n)`) is valid exactly when one of five mutually
//! exclusive conditions holds:
//!
//! * the discriminant is a non-residue of `n` (both sets empty), or
//! * `d` is a residue and exactly one of
//!   - a prime-power pair `(p^alpha, p^beta)` drawn from `2a` obstructs
//!     every candidate root, forcing the congruence to be unsolvable;
//!   - `k = 0` with `r | b`, `r | c` and a residue/multiplicity condition
//!     on `d/r^2` relative to `m` and `delta = gcd(m, r)`;
//!   - `k = 1` with the same plus parity constraints on `b/r`, `a/r`, `c/r`;
//!   - `k >= 3` odd, `r` odd, with `mu_2(d/r^2) = k - 1` and the odd part
//!     of `d/r^2` congruent to 1 mod 8.
//!
//! [`classify`] implements the full decision; [`classify_odd_prime_power`]
//! and [`classify_power_of_two`] are the specialized fast paths for
//! prime-power moduli, and [`classify_with_remark_variant`] tests
//! `d/r^2` against `m/delta` instead of `m` (an equivalent formulation).

use crate::intmath::{factorize, gcd, is_prime, mul_mod, multiplicity_of, pow_mod, Multiplicity};
use crate::quadsolve::{discriminant, CongruenceInstance};
use crate::sqrtmod::{checked_prime_power, is_quadratic_residue, sqrt_mod_prime_power};
use crate::{Error, Result};

/// Quantities derived from an instance: `n = 2^k * r * m` with `m` odd,
/// `r = gcd(a, n)`, `a1 = a/r`, `delta = gcd(m, r)`, `d = b^2 - 4ac`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IqfParameters {
    pub r: i64,
    pub a1: i64,
    pub k: u32,
    pub m: i64,
    pub delta: i64,
    pub d: i128,
}

/// The justifying branch of a classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// The discriminant is a non-residue of `n`; both the true solution
    /// set and the candidate set are empty.
    NonResidue,
    /// `(p^alpha, p^beta)` obstructs `(b, d)`: no candidate root is
    /// congruent to `b` mod `p^beta`, so the congruence has no solutions.
    Obstruction { p: i64, alpha: u32, beta: u32 },
    /// The `k = 0` condition holds (cofactor `n/r` odd).
    BranchTwo,
    /// The `k = 1` condition holds (cofactor twice an odd number).
    BranchThree,
    /// The `k >= 3` condition holds (cofactor divisible by 8).
    BranchFour,
    /// No condition holds; the intermediate form is invalid.
    Invalid,
}

impl Branch {
    /// Stable report tag: `"a"`, `"b.i"`, `"b.ii"`, `"b.iii"`, `"b.iv"`,
    /// or `"invalid"`.
    pub fn tag(&self) -> &'static str {
        match self {
            Branch::NonResidue => "a",
            Branch::Obstruction { .. } => "b.i",
            Branch::BranchTwo => "b.ii",
            Branch::BranchThree => "b.iii",
            Branch::BranchFour => "b.iv",
            Branch::Invalid => "invalid",
        }
    }
}

/// Validity verdict plus the branch that justifies it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IqfVerdict {
    pub valid: bool,
    pub branch: Branch,
    pub params: IqfParameters,
}

impl IqfVerdict {
    fn from_branch(branch: Branch, params: IqfParameters) -> Self {
        Self {
            valid: branch != Branch::Invalid,
            branch,
            params,
        }
    }
}

/// Derives `r`, `a1`, `k`, `m`, `delta`, `d` for an instance.
///
/// Errors with `HypothesisViolated` when `n | a` (then `r = n` and the
/// decomposition degenerates).
pub fn derive_params(inst: &CongruenceInstance) -> Result<IqfParameters> {
    let (a, n) = (inst.a(), inst.n());
    if a.rem_euclid(n) == 0 {
        return Err(Error::HypothesisViolated { a, n });
    }
    let r = gcd(a, n);
    let cofactor = n / r;
    let k = cofactor.trailing_zeros();
    let m = cofactor >> k;
    Ok(IqfParameters {
        r,
        a1: a / r,
        k,
        m,
        delta: gcd(m, r),
        d: discriminant(inst)?.value(),
    })
}

/// The modulus `M` with `4az = 0 (mod n)` iff `M | z`: equals `m` for
/// `k <= 2` and `2^(k-2) * m` for `k >= 3`. The candidate set of an
/// instance is exactly `{x in [0, n) : q(x) = 0 (mod M)}`.
pub fn q_modulus(params: &IqfParameters) -> i64 {
    if params.k <= 2 {
        params.m
    } else {
        (1i64 << (params.k - 2)) * params.m
    }
}

/// Whether `(p^alpha, p^beta)` forms a `(b, d)`-obstruction: no root of
/// `x^2 = d (mod p^alpha)` is congruent to `b` mod `p^beta`.
///
/// When `p^alpha` does not divide `d` (and `d != 0`), the roots are
/// `sigma * p^mu + i * p^(alpha - mu)` with `2*mu` the multiplicity of
/// `p` in `d` (odd multiplicity returns `false`: `d` is a non-residue of
/// `p^alpha`, which the caller screens separately). When `p^alpha | d`
/// (including `d = 0`) they are `i * p^s` with `alpha = 2s` or `2s - 1`.
pub fn is_obstruction(p: i64, alpha: u32, beta: u32, b: i64, d: i128) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::NotPrime { value: p });
    }
    if alpha < 1 || beta < 1 {
        return Err(Error::NotPositive {
            value: alpha.min(beta) as i64,
        });
    }
    let pb = checked_prime_power(p, beta)?;
    let target = (b as i128).rem_euclid(pb as i128) as i64;

    let divides = match multiplicity_of(p, d) {
        Multiplicity::Infinite => true,
        Multiplicity::Finite(mu) => mu >= alpha,
    };
    if divides {
        let s = alpha.div_ceil(2);
        return Ok(progression_avoids(0, s, alpha - s, p, beta, pb, target));
    }

    let mu = multiplicity_of(p, d).finite().expect("d nonzero here");
    if mu % 2 == 1 {
        return Ok(false);
    }
    let half = mu / 2;
    let sub_mod = checked_prime_power(p, alpha - mu)?;
    let d1 = d / (p as i128).pow(mu);
    let roots = sqrt_mod_prime_power(d1.rem_euclid(sub_mod as i128) as i64, p, alpha - mu)?;
    let scale = pow_mod(p, half as u64, pb);
    for sigma in roots.iter() {
        let base = mul_mod(sigma, scale, pb);
        if !progression_avoids(base, alpha - half, half, p, beta, pb, target) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True when no term of `base + i * p^step_exp (mod p^beta)` with
/// `i in [0, p^range_exp)` equals `target`. The progression repeats with
/// period `p^(beta - step_exp)` in `i`, so iteration is capped there.
fn progression_avoids(
    base: i64,
    step_exp: u32,
    range_exp: u32,
    p: i64,
    beta: u32,
    pb: i64,
    target: i64,
) -> bool {
    let iterations = if step_exp >= beta {
        1
    } else {
        p.pow(range_exp.min(beta - step_exp))
    };
    let step = pow_mod(p, step_exp as u64, pb);
    let mut value = base.rem_euclid(pb);
    for _ in 0..iterations {
        if value == target {
            return false;
        }
        value = (value + step).rem_euclid(pb);
    }
    true
}

/// Full classification of an instance (requires `a != 0`, `n >= 2`,
/// `n` not dividing `a`).
pub fn classify(inst: &CongruenceInstance) -> Result<IqfVerdict> {
    classify_impl(inst, false)
}

/// Identical to [`classify`] except that the residue condition of the
/// non-obstruction branches tests `d/r^2` against `m/delta` instead of
/// `m`. Verdicts agree with [`classify`] everywhere.
pub fn classify_with_remark_variant(inst: &CongruenceInstance) -> Result<IqfVerdict> {
    classify_impl(inst, true)
}

fn classify_impl(inst: &CongruenceInstance, remark: bool) -> Result<IqfVerdict> {
    let params = derive_params(inst)?;
    let n = inst.n();
    if !is_quadratic_residue(reduce(params.d, n), n)? {
        return Ok(IqfVerdict::from_branch(Branch::NonResidue, params));
    }
    if let Some((p, alpha, beta)) = obstruction_witness(inst, &params)? {
        return Ok(IqfVerdict::from_branch(
            Branch::Obstruction { p, alpha, beta },
            params,
        ));
    }
    if branch_two_holds(inst, &params, remark)? {
        return Ok(IqfVerdict::from_branch(Branch::BranchTwo, params));
    }
    if branch_three_holds(inst, &params, remark)? {
        return Ok(IqfVerdict::from_branch(Branch::BranchThree, params));
    }
    if branch_four_holds(inst, &params, remark)? {
        return Ok(IqfVerdict::from_branch(Branch::BranchFour, params));
    }
    Ok(IqfVerdict::from_branch(Branch::Invalid, params))
}

/// Scans the prime factors of `2a` in increasing order for one whose
/// pair `(p^alpha, p^beta)` meets every condition of the no-solutions
/// branch: `1 < beta < alpha`, `p | b`, `p^2 | d`, and the obstruction
/// itself. `beta` is the multiplicity of `p` in `2a`; `alpha` its
/// multiplicity in `4am` (`k <= 2`) or `2^k * a * m` (`k >= 3`).
fn obstruction_witness(
    inst: &CongruenceInstance,
    params: &IqfParameters,
) -> Result<Option<(i64, u32, u32)>> {
    let two_a = inst
        .a()
        .unsigned_abs()
        .checked_mul(2)
        .filter(|&v| v <= i64::MAX as u64)
        .ok_or(Error::Overflow("2|a|"))? as i64;
    for &(p, beta) in factorize(two_a)?.factors() {
        if beta < 2 {
            continue;
        }
        let alpha = beta
            + if p == 2 {
                if params.k <= 2 {
                    1
                } else {
                    params.k - 1
                }
            } else {
                multiplicity_of(p, params.m as i128)
                    .finite()
                    .expect("m positive")
            };
        if alpha <= beta {
            continue;
        }
        if inst.b() % p != 0 {
            continue;
        }
        if params.d % (p as i128 * p as i128) != 0 {
            continue;
        }
        if is_obstruction(p, alpha, beta, inst.b(), params.d)? {
            return Ok(Some((p, alpha, beta)));
        }
    }
    Ok(None)
}

fn branch_two_holds(inst: &CongruenceInstance, params: &IqfParameters, remark: bool) -> Result<bool> {
    if params.k != 0 || inst.b() % params.r != 0 || inst.c() % params.r != 0 {
        return Ok(false);
    }
    residue_and_delta_ok(params, remark)
}

fn branch_three_holds(
    inst: &CongruenceInstance,
    params: &IqfParameters,
    remark: bool,
) -> Result<bool> {
    if params.k != 1 || inst.b() % params.r != 0 || inst.c() % params.r != 0 {
        return Ok(false);
    }
    if (inst.b() / params.r) % 2 == 0 {
        return Ok(false);
    }
    if params.a1 % 2 != 0 && (inst.c() / params.r) % 2 != 0 {
        return Ok(false);
    }
    residue_and_delta_ok(params, remark)
}

fn branch_four_holds(
    inst: &CongruenceInstance,
    params: &IqfParameters,
    remark: bool,
) -> Result<bool> {
    if params.k < 3 || params.k.is_multiple_of(2) || params.r % 2 == 0 {
        return Ok(false);
    }
    if inst.b() % params.r != 0 || inst.c() % params.r != 0 {
        return Ok(false);
    }
    let dr2 = params.d / (params.r as i128 * params.r as i128);
    // d = 0 has infinite multiplicity and cannot match k - 1.
    match multiplicity_of(2, dr2) {
        Multiplicity::Finite(mu) if mu == params.k - 1 => {}
        _ => return Ok(false),
    }
    if (dr2 >> (params.k - 1)).rem_euclid(8) != 1 {
        return Ok(false);
    }
    residue_and_delta_ok(params, remark)
}

/// The residue and delta conditions shared by the non-obstruction
/// branches: `d/r^2` must be a residue of `m` (or `m/delta` in the
/// variant), and if `delta > 1` it must be squarefree with every prime
/// factor of even multiplicity in `m`, those prime powers jointly
/// dividing `d/r^2`. Callers have already ensured `r | b` and `r | c`,
/// which makes `d/r^2` an exact integer.
fn residue_and_delta_ok(params: &IqfParameters, remark: bool) -> Result<bool> {
    let r2 = params.r as i128 * params.r as i128;
    debug_assert_eq!(params.d % r2, 0);
    let dr2 = params.d / r2;
    let target = if remark {
        params.m / params.delta
    } else {
        params.m
    };
    if target > 1 && !is_quadratic_residue(reduce(dr2, target), target)? {
        return Ok(false);
    }
    if params.delta == 1 {
        return Ok(true);
    }
    let mut required: i128 = 1;
    for &(p, e) in factorize(params.delta)?.factors() {
        if e > 1 {
            return Ok(false);
        }
        let in_m = multiplicity_of(p, params.m as i128)
            .finite()
            .expect("m positive");
        if in_m % 2 == 1 {
            return Ok(false);
        }
        required *= (p as i128).pow(in_m);
    }
    Ok(dr2 % required == 0)
}

/// Fast path for an odd prime-power modulus `n = p^i`, `i >= 2`, with
/// `gcd(a, p^i) = p^l`, `1 <= l < i`: valid iff the discriminant is a
/// non-residue, or `l > 1` with `p | b` and `(p^i, p^l)` an obstruction,
/// or `l = 1` with `i` odd, `p | b`, `p | c`, and `p^(i+1) | d`.
pub fn classify_odd_prime_power(inst: &CongruenceInstance, p: i64, i: u32) -> Result<IqfVerdict> {
    if !is_prime(p) {
        return Err(Error::NotPrime { value: p });
    }
    if p == 2 {
        return Err(Error::PreconditionViolated("p must be an odd prime"));
    }
    if i < 2 {
        return Err(Error::PreconditionViolated("exponent must be at least 2"));
    }
    if inst.n() != checked_prime_power(p, i)? {
        return Err(Error::PreconditionViolated(
            "modulus is not the given prime power",
        ));
    }
    let params = derive_params(inst)?;
    let l = multiplicity_of(p, inst.a() as i128)
        .finite()
        .expect("a nonzero");
    if l == 0 {
        return Err(Error::PreconditionViolated(
            "a must share a factor with the modulus",
        ));
    }
    debug_assert!(l < i, "n does not divide a");

    let n = inst.n();
    if !is_quadratic_residue(reduce(params.d, n), n)? {
        return Ok(IqfVerdict::from_branch(Branch::NonResidue, params));
    }
    if l > 1 && inst.b() % p == 0 && is_obstruction(p, i, l, inst.b(), params.d)? {
        return Ok(IqfVerdict::from_branch(
            Branch::Obstruction {
                p,
                alpha: i,
                beta: l,
            },
            params,
        ));
    }
    if l == 1
        && i % 2 == 1
        && inst.b() % p == 0
        && inst.c() % p == 0
        && params.d % (p as i128).pow(i + 1) == 0
    {
        return Ok(IqfVerdict::from_branch(Branch::BranchTwo, params));
    }
    Ok(IqfVerdict::from_branch(Branch::Invalid, params))
}

/// Fast path for `n = 2^i` with `gcd(a, 2^i) = 2^l`, `l < i`: valid iff
/// the discriminant is a non-residue, or `l > 0`, `i >= l + 3`, `b`
/// even and `(2^i, 2^(l+1))` an obstruction, or `i = l + 1` with
/// `b/2^l` odd and `c/2^l` even, or `a` odd, `i` odd `>= 3`,
/// `mu_2(d) = i - 1` and `d / 2^(i-1) = 1 (mod 8)`.
pub fn classify_power_of_two(inst: &CongruenceInstance, i: u32) -> Result<IqfVerdict> {
    if i < 1 || inst.n() != checked_prime_power(2, i)? {
        return Err(Error::PreconditionViolated(
            "modulus is not the given power of two",
        ));
    }
    let params = derive_params(inst)?;
    let l = multiplicity_of(2, inst.a() as i128)
        .finite()
        .expect("a nonzero");
    debug_assert!(l < i, "n does not divide a");

    let n = inst.n();
    if !is_quadratic_residue(reduce(params.d, n), n)? {
        return Ok(IqfVerdict::from_branch(Branch::NonResidue, params));
    }
    if l > 0
        && i >= l + 3
        && inst.b() % 2 == 0
        && is_obstruction(2, i, l + 1, inst.b(), params.d)?
    {
        return Ok(IqfVerdict::from_branch(
            Branch::Obstruction {
                p: 2,
                alpha: i,
                beta: l + 1,
            },
            params,
        ));
    }
    if i == l + 1 {
        let pl = 1i64 << l;
        if inst.b() % pl == 0
            && inst.c() % pl == 0
            && (inst.b() / pl) % 2 != 0
            && (inst.c() / pl) % 2 == 0
        {
            return Ok(IqfVerdict::from_branch(Branch::BranchThree, params));
        }
    }
    if l == 0 && i >= 3 && i % 2 == 1 {
        if let Multiplicity::Finite(mu) = multiplicity_of(2, params.d) {
            // The odd-part condition mirrors classify's k >= 3 branch; the
            // two-power multiplicity alone does not force d into the right
            // residue class mod 2^(i+2).
            if mu == i - 1 && (params.d >> (i - 1)).rem_euclid(8) == 1 {
                return Ok(IqfVerdict::from_branch(Branch::BranchFour, params));
            }
        }
    }
    Ok(IqfVerdict::from_branch(Branch::Invalid, params))
}

fn reduce(x: i128, m: i64) -> i64 {
    x.rem_euclid(m as i128) as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadsolve::{brute_force_solutions, iqf_holds_brute, solve_iqf_candidate};

    fn inst(a: i64, b: i64, c: i64, n: i64) -> CongruenceInstance {
        CongruenceInstance::new(a, b, c, n).unwrap()
    }

    #[test]
    fn derive_params_cases() {
        let p = derive_params(&inst(18, 18, 1, 27)).unwrap();
        assert_eq!((p.r, p.a1, p.k, p.m, p.delta, p.d), (9, 2, 0, 3, 3, 252));
        let p = derive_params(&inst(1, 2, 0, 8)).unwrap();
        assert_eq!((p.r, p.a1, p.k, p.m, p.delta, p.d), (1, 1, 3, 1, 1, 4));
        let p = derive_params(&inst(1, 1, 0, 2)).unwrap();
        assert_eq!((p.r, p.k, p.m, p.delta, p.d), (1, 1, 1, 1, 1));
        // negative a keeps its sign in a1
        let p = derive_params(&inst(-18, 18, 1, 27)).unwrap();
        assert_eq!((p.r, p.a1), (9, -2));
        assert_eq!(
            derive_params(&inst(54, 0, 0, 27)),
            Err(Error::HypothesisViolated { a: 54, n: 27 })
        );
    }

    #[test]
    fn params_decompose_modulus() {
        for n in 2..=60i64 {
            for a in -10..=10i64 {
                if a == 0 || a.rem_euclid(n) == 0 {
                    continue;
                }
                let p = derive_params(&inst(a, 1, 1, n)).unwrap();
                assert_eq!((1i64 << p.k) * p.r * p.m, n);
                assert_eq!(p.m % 2, 1);
                assert_eq!(gcd(p.a1, (1i64 << p.k) * p.m), 1);
                assert_eq!(p.m % p.delta, 0);
                assert_eq!(p.r % p.delta, 0);
            }
        }
    }

    #[test]
    fn q_modulus_cases() {
        let mk = |k, m| IqfParameters {
            r: 1,
            a1: 1,
            k,
            m,
            delta: 1,
            d: 0,
        };
        assert_eq!(q_modulus(&mk(0, 3)), 3);
        assert_eq!(q_modulus(&mk(3, 1)), 2);
        assert_eq!(q_modulus(&mk(2, 5)), 5);
    }

    #[test]
    fn obstruction_cases() {
        assert!(is_obstruction(3, 3, 2, 18, 252).unwrap());
        assert!(!is_obstruction(3, 3, 2, 3, 9).unwrap());
        assert!(is_obstruction(3, 3, 2, 3, -27).unwrap());
        assert!(!is_obstruction(2, 3, 2, 2, 4).unwrap());
        assert!(is_obstruction(4, 3, 2, 1, 1).is_err());
    }

    #[test]
    fn classify_table_rows() {
        let rows: &[(i64, i64, i64, i64, Branch)] = &[
            (3, 0, 1, 9, Branch::NonResidue),
            (1, 1, 1, 8, Branch::NonResidue),
            (
                18,
                18,
                1,
                27,
                Branch::Obstruction {
                    p: 3,
                    alpha: 3,
                    beta: 2,
                },
            ),
            (
                9,
                3,
                1,
                27,
                Branch::Obstruction {
                    p: 3,
                    alpha: 3,
                    beta: 2,
                },
            ),
            (
                8,
                2,
                1,
                64,
                Branch::Obstruction {
                    p: 2,
                    alpha: 6,
                    beta: 4,
                },
            ),
            (3, 6, 3, 27, Branch::BranchTwo),
            (1, 1, 0, 2, Branch::BranchThree),
            (1, 2, 0, 8, Branch::BranchFour),
        ];
        for &(a, b, c, n, branch) in rows {
            let v = classify(&inst(a, b, c, n)).unwrap();
            assert!(v.valid, "{a},{b},{c} mod {n}");
            assert_eq!(v.branch, branch, "{a},{b},{c} mod {n}");
            assert!(iqf_holds_brute(&inst(a, b, c, n)).unwrap());
        }
    }

    #[test]
    fn classify_rejects_divisible_a() {
        assert_eq!(
            classify(&inst(27, 1, 1, 27)),
            Err(Error::HypothesisViolated { a: 27, n: 27 })
        );
    }

    #[test]
    fn odd_prime_power_fast_path() {
        let v = classify_odd_prime_power(&inst(18, 18, 1, 27), 3, 3).unwrap();
        assert_eq!(
            v.branch,
            Branch::Obstruction {
                p: 3,
                alpha: 3,
                beta: 2
            }
        );
        let v = classify_odd_prime_power(&inst(3, 6, 3, 27), 3, 3).unwrap();
        assert_eq!(v.branch, Branch::BranchTwo);
        let v = classify_odd_prime_power(&inst(3, 0, 1, 9), 3, 2).unwrap();
        assert_eq!(v.branch, Branch::NonResidue);
        // coprime leading coefficient is outside the fast path
        assert_eq!(
            classify_odd_prime_power(&inst(1, 1, 1, 9), 3, 2),
            Err(Error::PreconditionViolated(
                "a must share a factor with the modulus"
            ))
        );
        assert!(classify_odd_prime_power(&inst(3, 0, 1, 9), 3, 3).is_err());
    }

    #[test]
    fn power_of_two_fast_path() {
        let v = classify_power_of_two(&inst(1, 1, 1, 8), 3).unwrap();
        assert_eq!(v.branch, Branch::NonResidue);
        let v = classify_power_of_two(&inst(8, 2, 1, 64), 6).unwrap();
        assert_eq!(
            v.branch,
            Branch::Obstruction {
                p: 2,
                alpha: 6,
                beta: 4
            }
        );
        let v = classify_power_of_two(&inst(1, 2, 0, 8), 3).unwrap();
        assert_eq!(v.branch, Branch::BranchFour);
        let v = classify_power_of_two(&inst(1, 1, 0, 2), 1).unwrap();
        assert_eq!(v.branch, Branch::BranchThree);
        // mu_2(d) = i - 1 alone is not enough: d/4 = 3 here, and the
        // candidate set {1,3,5,7} overshoots the empty true set.
        let v = classify_power_of_two(&inst(1, 0, -3, 8), 3).unwrap();
        assert_eq!(v.branch, Branch::Invalid);
        assert!(!iqf_holds_brute(&inst(1, 0, -3, 8)).unwrap());
    }

    #[test]
    fn remark_variant_cases() {
        let a = classify(&inst(18, 18, 1, 27)).unwrap();
        let b = classify_with_remark_variant(&inst(18, 18, 1, 27)).unwrap();
        assert_eq!(a.branch, b.branch);
        let v = classify_with_remark_variant(&inst(3, 6, 3, 27)).unwrap();
        assert_eq!(v.branch, Branch::BranchTwo);
    }

    #[test]
    fn classifier_agrees_with_oracle_small_grid() {
        for n in 2..=24i64 {
            for a in -5..=5i64 {
                if a == 0 || a.rem_euclid(n) == 0 {
                    continue;
                }
                for b in -4..=4i64 {
                    for c in -4..=4i64 {
                        let inst = inst(a, b, c, n);
                        let verdict = classify(&inst).unwrap();
                        let truth = iqf_holds_brute(&inst).unwrap();
                        assert_eq!(
                            verdict.valid, truth,
                            "a={a} b={b} c={c} n={n} branch={:?}",
                            verdict.branch
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn branch_conditions_mutually_exclusive() {
        for n in 2..=20i64 {
            for a in -4..=4i64 {
                if a == 0 || a.rem_euclid(n) == 0 {
                    continue;
                }
                for b in -3..=3i64 {
                    for c in -3..=3i64 {
                        let inst = inst(a, b, c, n);
                        let params = derive_params(&inst).unwrap();
                        let hits = [
                            obstruction_witness(&inst, &params).unwrap().is_some(),
                            branch_two_holds(&inst, &params, false).unwrap(),
                            branch_three_holds(&inst, &params, false).unwrap(),
                            branch_four_holds(&inst, &params, false).unwrap(),
                        ];
                        let count = hits.iter().filter(|&&h| h).count();
                        assert!(count <= 1, "a={a} b={b} c={c} n={n} hits={hits:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn candidate_set_lives_mod_q_modulus() {
        for n in 2..=20i64 {
            for a in -4..=4i64 {
                if a == 0 || a.rem_euclid(n) == 0 {
                    continue;
                }
                for b in -3..=3i64 {
                    for c in -3..=3i64 {
                        let inst = inst(a, b, c, n);
                        let params = derive_params(&inst).unwrap();
                        let m = q_modulus(&params);
                        let expected: Vec<i64> = (0..n)
                            .filter(|&x| {
                                let q = a as i128 * x as i128 * x as i128
                                    + b as i128 * x as i128
                                    + c as i128;
                                q.rem_euclid(m as i128) == 0
                            })
                            .collect();
                        let got = solve_iqf_candidate(&inst).unwrap();
                        assert_eq!(got.residues(), &expected[..], "a={a} b={b} c={c} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn obstruction_branch_means_empty_candidate() {
        for n in 2..=20i64 {
            for a in -4..=4i64 {
                if a == 0 || a.rem_euclid(n) == 0 {
                    continue;
                }
                for b in -3..=3i64 {
                    for c in -3..=3i64 {
                        let inst = inst(a, b, c, n);
                        let v = classify(&inst).unwrap();
                        let cand = solve_iqf_candidate(&inst).unwrap();
                        let d_res = is_quadratic_residue(
                            reduce(v.params.d, n),
                            n,
                        )
                        .unwrap();
                        let is_obs = matches!(v.branch, Branch::Obstruction { .. });
                        assert_eq!(
                            is_obs,
                            d_res && cand.is_empty(),
                            "a={a} b={b} c={c} n={n}"
                        );
                        if is_obs {
                            assert!(brute_force_solutions(&inst).unwrap().is_empty());
                        }
                    }
                }
            }
        }
    }
}
