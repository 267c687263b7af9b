//! Exact integer arithmetic: gcd, extended gcd, prime multiplicity,
//! factorization by trial division, modular inverses, linear congruences,
//! and CRT combination.
//!
//! Everything here takes signed 64-bit inputs and goes through 128-bit
//! intermediates where products can exceed 64 bits; overflow that cannot
//! be absorbed that way is reported as an error, never wrapped.

use crate::{Error, Result, SolutionSet};

/// Nonnegative gcd of `|x|` and `|y|`; `gcd(0, 0) = 0`.
///
/// Panics only on the unrepresentable corner `gcd(i64::MIN, i64::MIN)`
/// (the result 2^63 does not fit in an `i64`).
pub fn gcd(x: i64, y: i64) -> i64 {
    let (mut a, mut b) = (x.unsigned_abs(), y.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    i64::try_from(a).expect("gcd exceeds i64::MAX")
}

/// Extended Euclid: returns `(g, s, t)` with `g = gcd(|x|, |y|)` and
/// `s*x + t*y = g` exactly. `ext_gcd(0, 0) = (0, 0, 0)`.
pub fn ext_gcd(x: i64, y: i64) -> (i64, i64, i64) {
    if x == 0 && y == 0 {
        return (0, 0, 0);
    }
    let (mut old_r, mut r) = (x as i128, y as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (old_r, old_s, old_t) = (-old_r, -old_s, -old_t);
    }
    (old_r as i64, old_s as i64, old_t as i64)
}

/// Deterministic Miller-Rabin primality test for `i64`.
pub fn is_prime(p: i64) -> bool {
    if p < 2 {
        return false;
    }
    let n = p as u64;
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n.is_multiple_of(q) {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    // This base set is exact for all n < 3.3 * 10^24.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

pub(crate) fn mul_mod(a: i64, b: i64, m: i64) -> i64 {
    (a as i128 * b as i128).rem_euclid(m as i128) as i64
}

pub(crate) fn pow_mod(base: i64, mut exp: u64, m: i64) -> i64 {
    let mut acc = 1i64;
    let mut base = base.rem_euclid(m);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

/// The exponent of a prime in an integer, with `Infinite` reserved for 0
/// (every power of p divides 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Multiplicity {
    Finite(u32),
    Infinite,
}

impl Multiplicity {
    pub fn finite(self) -> Option<u32> {
        match self {
            Multiplicity::Finite(k) => Some(k),
            Multiplicity::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Multiplicity::Infinite)
    }
}

/// Multiplicity of the prime `p` in `z`; 0 when `p` does not divide `z`,
/// `Infinite` when `z = 0`.
pub fn multiplicity(p: i64, z: i128) -> Result<Multiplicity> {
    if !is_prime(p) {
        return Err(Error::NotPrime { value: p });
    }
    Ok(multiplicity_of(p, z))
}

/// Same as [`multiplicity`] without the primality check, for callers that
/// already hold a prime.
pub(crate) fn multiplicity_of(p: i64, mut z: i128) -> Multiplicity {
    if z == 0 {
        return Multiplicity::Infinite;
    }
    let p = p as i128;
    let mut k = 0;
    while z % p == 0 {
        z /= p;
        k += 1;
    }
    Multiplicity::Finite(k)
}

/// A positive integer with its canonical prime factorization.
///
/// Primes are strictly increasing, every exponent is at least 1, and the
/// product of the prime powers equals `value` (1 factors as the empty
/// product).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredInteger {
    value: i64,
    factors: Vec<(i64, u32)>,
}

impl FactoredInteger {
    pub fn value(&self) -> i64 {
        self.value
    }

    /// The `(prime, exponent)` pairs in increasing prime order.
    pub fn factors(&self) -> &[(i64, u32)] {
        &self.factors
    }
}

/// Factors `v >= 1` by trial division (2, then odd candidates up to the
/// square root).
pub fn factorize(v: i64) -> Result<FactoredInteger> {
    if v < 1 {
        return Err(Error::NotPositive { value: v });
    }
    let mut rest = v;
    let mut factors = Vec::new();
    let twos = rest.trailing_zeros();
    if twos > 0 {
        factors.push((2, twos));
        rest >>= twos;
    }
    let mut p = 3i64;
    while p <= rest / p {
        if rest % p == 0 {
            let mut e = 0;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += 2;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(FactoredInteger { value: v, factors })
}

/// Inverse of `a` mod `n`: the unique `x` in `[0, n)` with `a*x = 1 (mod n)`.
pub fn mod_inverse(a: i64, n: i64) -> Result<i64> {
    if n < 2 {
        return Err(Error::BadModulus { modulus: n });
    }
    let (g, s, _) = ext_gcd(a, n);
    if g != 1 {
        return Err(Error::NotInvertible {
            value: a,
            modulus: n,
        });
    }
    Ok((s as i128).rem_euclid(n as i128) as i64)
}

/// All `x` in `[0, m)` with `coeff*x = rhs (mod m)`.
///
/// Solvable exactly when `g = gcd(coeff, m)` divides `rhs`, in which case
/// there are exactly `g` solutions spaced `m/g` apart; otherwise the set
/// is empty (unsolvability is an answer, not an error).
pub fn solve_linear_congruence(coeff: i64, rhs: i64, m: i64) -> Result<SolutionSet> {
    if m < 2 {
        return Err(Error::BadModulus { modulus: m });
    }
    let a = (coeff as i128).rem_euclid(m as i128) as i64;
    let b = (rhs as i128).rem_euclid(m as i128) as i64;
    let g = gcd(a, m);
    if b % g != 0 {
        return SolutionSet::new(m, Vec::new());
    }
    let step = m / g;
    let base = if step == 1 {
        0
    } else {
        let inv = mod_inverse(a / g, step)?;
        ((b / g) as i128 * inv as i128).rem_euclid(step as i128) as i64
    };
    SolutionSet::new(m, (0..g).map(|j| base + j * step).collect())
}

/// Combines congruences `x = r_i (mod m_i)` over pairwise coprime moduli
/// into the unique solution in `[0, prod m_i)`. Residues are reduced into
/// range first, so any integer representatives are accepted.
pub fn crt_combine(pairs: &[(i64, i64)]) -> Result<i64> {
    let mut x: i128 = 0;
    let mut m: i128 = 1;
    for &(r, modulus) in pairs {
        if modulus < 1 {
            return Err(Error::NotPositive { value: modulus });
        }
        let combined = m
            .checked_mul(modulus as i128)
            .filter(|&v| v <= i64::MAX as i128)
            .ok_or(Error::Overflow("crt modulus product"))?;
        if modulus == 1 {
            continue;
        }
        let g = gcd((m % modulus as i128) as i64, modulus);
        if g != 1 {
            return Err(Error::NotCoprime {
                first: m as i64,
                second: modulus,
            });
        }
        let r = (r as i128).rem_euclid(modulus as i128);
        let inv = mod_inverse((m % modulus as i128) as i64, modulus)? as i128;
        let t = ((r - x).rem_euclid(modulus as i128) * inv).rem_euclid(modulus as i128);
        x += m * t;
        m = combined;
    }
    Ok(x as i64)
}
