use crate::{Error, Result};

/// A modulus together with the sorted set of minimal nonnegative solutions
/// of some congruence to that modulus.
///
/// Residues are strictly increasing and all lie in `[0, modulus)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSet {
    modulus: i64,
    residues: Vec<i64>,
}

impl SolutionSet {
    /// Builds a set from any collection of residues, sorting and
    /// deduplicating. Residues must already lie in `[0, modulus)`.
    pub fn new(modulus: i64, mut residues: Vec<i64>) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::BadModulus { modulus });
        }
        residues.sort_unstable();
        residues.dedup();
        if residues.iter().any(|&r| r < 0 || r >= modulus) {
            return Err(Error::BadInstance("residue outside [0, modulus)"));
        }
        Ok(Self { modulus, residues })
    }

    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    pub fn residues(&self) -> &[i64] {
        &self.residues
    }

    pub fn len(&self) -> usize {
        self.residues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.residues.is_empty()
    }

    /// Membership after reduction mod the set's modulus.
    pub fn contains(&self, x: i64) -> bool {
        let r = x.rem_euclid(self.modulus);
        self.residues.binary_search(&r).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        self.residues.iter().copied()
    }

    pub fn into_residues(self) -> Vec<i64> {
        self.residues
    }
}
