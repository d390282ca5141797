use crate::error::{Error, Result};

/// Size limits for exhaustive computations.
///
/// All limits are counts, not bytes. The defaults are the ones the catalog
/// is calibrated against; callers may raise them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guards {
    /// Largest syndrome space q^(n-k) explored by coset-leader search.
    pub max_syndromes: u64,
    /// Largest ambient space q^n scanned vector by vector.
    pub max_vectors: u64,
    /// Largest number of codewords enumerated explicitly.
    pub max_codewords: u64,
    /// Budget for counting loops (design checks, direct outer profiles).
    pub max_count_ops: u64,
    /// Largest syndrome space for the quadratic odd-characteristic
    /// character sum.
    pub max_quadratic_syndromes: u64,
    /// Budget for vector-by-codeword distance counting.
    pub max_pair_ops: u64,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            max_syndromes: 1 << 25,
            max_vectors: 1 << 24,
            max_codewords: 1 << 24,
            max_count_ops: 100_000_000,
            max_quadratic_syndromes: 1 << 13,
            max_pair_ops: 1 << 32,
        }
    }
}

impl Guards {
    /// Guards with every limit lifted.
    pub fn unlimited() -> Self {
        Guards {
            max_syndromes: u64::MAX,
            max_vectors: u64::MAX,
            max_codewords: u64::MAX,
            max_count_ops: u64::MAX,
            max_quadratic_syndromes: u64::MAX,
            max_pair_ops: u64::MAX,
        }
    }

    pub(crate) fn check(guard: &'static str, needed: u128, limit: u64) -> Result<()> {
        if needed > limit as u128 {
            Err(Error::Resource { guard, needed, limit: limit as u128 })
        } else {
            Ok(())
        }
    }

    pub(crate) fn syndromes(&self, needed: u128) -> Result<()> {
        Self::check("max_syndromes", needed, self.max_syndromes)
    }

    pub(crate) fn vectors(&self, needed: u128) -> Result<()> {
        Self::check("max_vectors", needed, self.max_vectors)
    }

    pub(crate) fn codewords(&self, needed: u128) -> Result<()> {
        Self::check("max_codewords", needed, self.max_codewords)
    }

    pub(crate) fn count_ops(&self, needed: u128) -> Result<()> {
        Self::check("max_count_ops", needed, self.max_count_ops)
    }

    pub(crate) fn quadratic(&self, needed: u128) -> Result<()> {
        Self::check("max_quadratic_syndromes", needed, self.max_quadratic_syndromes)
    }

    pub(crate) fn pair_ops(&self, needed: u128) -> Result<()> {
        Self::check("max_pair_ops", needed, self.max_pair_ops)
    }
}

/// `base^exp` saturating at `u128::MAX`.
pub(crate) fn pow_sat(base: u64, exp: u64) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
    }
    acc
}
