//! Shared grid builders for the benchmarks.

use modquad_core::CongruenceInstance;

/// Every instance with the given modulus and coefficients in
/// `[-bound, bound]`, skipping `a = 0` and `n | a`.
pub fn grid(n: i64, bound: i64) -> Vec<CongruenceInstance> {
    let mut out = Vec::new();
    for a in -bound..=bound {
        if a == 0 || a.rem_euclid(n) == 0 {
            continue;
        }
        for b in -bound..=bound {
            for c in -bound..=bound {
                out.push(CongruenceInstance::new(a, b, c, n).unwrap());
            }
        }
    }
    out
}
