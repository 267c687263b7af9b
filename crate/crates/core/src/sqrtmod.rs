//! The modular square-root problem: all solutions of `x^2 = u (mod v)`.
//!
//! Prime-power moduli split into three cases. With `u` reduced mod `p^k`:
//!
//! * `u = 0`: the roots are the multiples of `p^ceil(k/2)`.
//! * `p | u` but `u != 0`: the multiplicity of `p` in `u` must be even,
//!   say `2m`; roots are `s*p^m + i*p^(k-m)` where `s` runs over the roots
//!   of the cofactor mod `p^(k-2m)` and `i` over `[0, p^m)`.
//! * `p` does not divide `u`: a coprime root is found mod `p` (or mod 8
//!   for `p = 2`) and lifted; there are 0 or 2 roots for odd `p`, and
//!   0, 1, 2, or 4 roots for `p = 2` depending on `k`.
//!
//! Composite moduli are assembled from the prime-power root sets by the
//! Chinese remainder theorem. [`count_sqrt`] computes the same
//! cardinality by a closed formula without enumerating roots.

use crate::intmath::{crt_combine, factorize, is_prime, mod_inverse, mul_mod, multiplicity_of, pow_mod};
use crate::{Error, Result, SolutionSet};

/// Below this bound the base root mod an odd prime is found by direct
/// search; above it Tonelli-Shanks is used.
const DIRECT_SEARCH_LIMIT: i64 = 1000;

pub(crate) fn checked_prime_power(p: i64, k: u32) -> Result<i64> {
    (p as i128)
        .checked_pow(k)
        .filter(|&v| v <= i64::MAX as i128)
        .map(|v| v as i64)
        .ok_or(Error::Overflow("prime power modulus"))
}

/// Roots of `x^2 = u (mod p)`.
///
/// The set has 0 or 2 elements except that `u = 0 (mod p)` gives exactly
/// `{0}` and `p = 2` always gives exactly one root.
pub fn sqrt_mod_prime(u: i64, p: i64) -> Result<SolutionSet> {
    sqrt_mod_prime_power(u, p, 1)
}

/// Roots of `x^2 = u (mod p^k)` for prime `p` and `k >= 1`.
///
/// A non-residue `u` yields an empty set, not an error.
pub fn sqrt_mod_prime_power(u: i64, p: i64, k: u32) -> Result<SolutionSet> {
    if !is_prime(p) {
        return Err(Error::NotPrime { value: p });
    }
    if k < 1 {
        return Err(Error::NotPositive { value: k as i64 });
    }
    let pk = checked_prime_power(p, k)?;
    let u = (u as i128).rem_euclid(pk as i128) as i64;
    SolutionSet::new(pk, prime_power_roots(u, p, k, pk))
}

/// All roots of `x^2 = u (mod v)` for an arbitrary modulus `v >= 2`,
/// assembled across the prime factorization of `v`.
pub fn sqrt_mod(u: i64, v: i64) -> Result<SolutionSet> {
    if v < 2 {
        return Err(Error::BadModulus { modulus: v });
    }
    let u = (u as i128).rem_euclid(v as i128) as i64;
    let mut combos: Vec<(i64, i64)> = vec![(0, 1)];
    for &(p, k) in factorize(v)?.factors() {
        let pk = checked_prime_power(p, k)?;
        let part = prime_power_roots((u % pk + pk) % pk, p, k, pk);
        if part.is_empty() {
            return SolutionSet::new(v, Vec::new());
        }
        let mut next = Vec::with_capacity(combos.len() * part.len());
        for &(r0, m0) in &combos {
            for &r1 in &part {
                next.push((crt_combine(&[(r0, m0), (r1, pk)])?, m0 * pk));
            }
        }
        combos = next;
    }
    SolutionSet::new(v, combos.into_iter().map(|(r, _)| r).collect())
}

/// Whether `x^2 = u (mod v)` has a solution. 0 is always a residue.
pub fn is_quadratic_residue(u: i64, v: i64) -> Result<bool> {
    Ok(count_sqrt(u, v)? > 0)
}

/// Number of roots of `x^2 = u (mod v)`, computed by the per-prime-power
/// counting formula multiplied across the factorization, never by
/// enumerating roots. Returns 0 when `u` is a non-residue.
pub fn count_sqrt(u: i64, v: i64) -> Result<u64> {
    if v < 2 {
        return Err(Error::BadModulus { modulus: v });
    }
    let u = (u as i128).rem_euclid(v as i128) as i64;
    let mut total = 1u64;
    for &(p, k) in factorize(v)?.factors() {
        let pk = checked_prime_power(p, k)?;
        let count = prime_power_count(u % pk, p, k);
        if count == 0 {
            return Ok(0);
        }
        total *= count;
    }
    Ok(total)
}

/// Root set for a prime-power modulus; `u` must already lie in `[0, pk)`.
fn prime_power_roots(u: i64, p: i64, k: u32, pk: i64) -> Vec<i64> {
    if u == 0 {
        let step = p.pow(k.div_ceil(2));
        return (0..pk / step).map(|i| i * step).collect();
    }
    if u % p == 0 {
        let mu = multiplicity_of(p, u as i128)
            .finite()
            .expect("u is nonzero");
        if mu % 2 == 1 {
            return Vec::new();
        }
        let p_mu = p.pow(mu);
        let p_half = p.pow(mu / 2);
        let inner = prime_power_roots(u / p_mu, p, k - mu, pk / p_mu);
        let stride = pk / p_half;
        let mut roots = Vec::with_capacity(inner.len() * p_half as usize);
        for s in inner {
            for i in 0..p_half {
                roots.push(s * p_half + i * stride);
            }
        }
        roots.sort_unstable();
        return roots;
    }
    coprime_roots(u, p, k, pk)
}

/// Root set when `p` does not divide `u`.
fn coprime_roots(u: i64, p: i64, k: u32, pk: i64) -> Vec<i64> {
    if p == 2 {
        return match k {
            1 => vec![1],
            2 => {
                if u % 4 == 1 {
                    vec![1, 3]
                } else {
                    Vec::new()
                }
            }
            _ => {
                if u % 8 != 1 {
                    return Vec::new();
                }
                // 1 is a root mod 8; push it up one power of two at a time.
                let mut x: i64 = 1;
                for j in 3..k {
                    let next = 1i64 << (j + 1);
                    if (x as i128 * x as i128 - u as i128).rem_euclid(next as i128) != 0 {
                        x += 1i64 << (j - 1);
                    }
                }
                let half = pk >> 1;
                let mut roots = vec![x, pk - x, (x + half) % pk, (pk - x + half) % pk];
                roots.sort_unstable();
                roots
            }
        };
    }
    let Some(mut x) = base_root_mod_p(u % p, p) else {
        return Vec::new();
    };
    // Refine a root mod p^j to one mod p^(j+1).
    let mut pj = p;
    for _ in 1..k {
        let next = pj * p;
        let rem = (u as i128 - x as i128 * x as i128).rem_euclid(next as i128);
        let t = (rem / pj as i128) % p as i128;
        let inv = mod_inverse(((2 * x as i128) % p as i128) as i64, p).expect("p odd, p does not divide x");
        let corr = (t * inv as i128).rem_euclid(p as i128) as i64;
        x += corr * pj;
        pj = next;
    }
    let mut roots = vec![x, pk - x];
    roots.sort_unstable();
    roots
}

/// A root of `x^2 = u (mod p)` for odd prime `p` and `u` in `[1, p)`,
/// or `None` when `u` is a non-residue.
fn base_root_mod_p(u: i64, p: i64) -> Option<i64> {
    if p < DIRECT_SEARCH_LIMIT {
        return (1..p).find(|&x| mul_mod(x, x, p) == u);
    }
    if pow_mod(u, ((p - 1) / 2) as u64, p) != 1 {
        return None;
    }
    Some(tonelli_shanks(u, p))
}

fn tonelli_shanks(u: i64, p: i64) -> i64 {
    if p % 4 == 3 {
        return pow_mod(u, ((p + 1) / 4) as u64, p);
    }
    let s = (p - 1).trailing_zeros();
    let q = (p - 1) >> s;
    // Deterministic witness scan keeps repeated calls identical.
    let z = (2..p)
        .find(|&z| pow_mod(z, ((p - 1) / 2) as u64, p) == p - 1)
        .expect("a quadratic non-residue exists mod every odd prime");
    let mut m = s;
    let mut c = pow_mod(z, q as u64, p);
    let mut t = pow_mod(u, q as u64, p);
    let mut r = pow_mod(u, ((q + 1) / 2) as u64, p);
    while t != 1 {
        let mut i = 0;
        let mut probe = t;
        while probe != 1 {
            probe = mul_mod(probe, probe, p);
            i += 1;
        }
        let mut b = c;
        for _ in 0..m - i - 1 {
            b = mul_mod(b, b, p);
        }
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    r
}

/// Root count for a prime-power modulus; `u` in `[0, p^t)`.
fn prime_power_count(u: i64, p: i64, t: u32) -> u64 {
    if u == 0 {
        return p.pow(t / 2) as u64;
    }
    if u % p == 0 {
        let mu = multiplicity_of(p, u as i128)
            .finite()
            .expect("u is nonzero");
        if mu % 2 == 1 {
            return 0;
        }
        return p.pow(mu / 2) as u64 * prime_power_count(u / p.pow(mu), p, t - mu);
    }
    if p == 2 {
        match t {
            1 => 1,
            2 => {
                if u % 4 == 1 {
                    2
                } else {
                    0
                }
            }
            _ => {
                if u % 8 == 1 {
                    4
                } else {
                    0
                }
            }
        }
    } else if pow_mod(u, ((p - 1) / 2) as u64, p) == 1 {
        2
    } else {
        0
    }
}
