use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::codecore::{Code, SyndromeSpace, VectorSpace, UNREACHED};
use crate::error::{Error, Result};
use crate::guards::Guards;

/// Where a partition or profile lives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Cosets of a linear code, indexed by syndrome.
    Syndrome,
    /// Individual vectors of the ambient space.
    Vector,
}

/// The cells `C(0), ..., C(ρ)` with `C(l) = {x : d(x, C) = l}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistancePartition {
    pub mode: Mode,
    /// Distance to the code of every syndrome (or vector).
    pub labels: Vec<u8>,
    /// Number of syndromes (or vectors) per cell.
    pub sizes: Vec<u64>,
}

impl DistancePartition {
    fn from_labels(mode: Mode, labels: Vec<u8>) -> Result<Self> {
        if labels.iter().any(|&l| l == UNREACHED) {
            return Err(Error::Inconsistent("breadth-first search left vertices unreached".into()));
        }
        let rho = labels.iter().copied().max().unwrap_or(0) as usize;
        let mut sizes = vec![0u64; rho + 1];
        for &l in &labels {
            sizes[l as usize] += 1;
        }
        Ok(DistancePartition { mode, labels, sizes })
    }

    /// Covering radius.
    pub fn rho(&self) -> usize {
        self.sizes.len() - 1
    }

    /// Cell sizes counted in vectors (`K_l`), scaling cosets by `|C|`.
    pub fn vector_sizes(&self, code_size: &BigUint) -> Vec<BigUint> {
        self.sizes
            .iter()
            .map(|&s| match self.mode {
                Mode::Syndrome => code_size * BigUint::from(s),
                Mode::Vector => BigUint::from(s),
            })
            .collect()
    }
}

/// Syndrome-mode partition of a linear code (coset-leader weights).
pub fn syndrome_partition(space: &SyndromeSpace) -> Result<DistancePartition> {
    DistancePartition::from_labels(Mode::Syndrome, space.leader_weights())
}

/// Vector-mode partition of any code (multi-source search over `F_q^n`).
pub fn vector_partition(code: &Code, guards: &Guards) -> Result<DistancePartition> {
    let space = VectorSpace::new(code.field(), code.n(), guards)?;
    let words = code.codewords(guards)?;
    DistancePartition::from_labels(Mode::Vector, space.distances(&words))
}

/// Distance partition: syndrome mode for linear codes, vector mode otherwise.
pub fn distance_partition(code: &Code, guards: &Guards) -> Result<DistancePartition> {
    if code.is_linear() {
        syndrome_partition(&SyndromeSpace::new(code, guards)?)
    } else {
        vector_partition(code, guards)
    }
}
