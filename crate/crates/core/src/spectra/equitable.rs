use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use super::partition::{DistancePartition, Mode};
use super::IntersectionArray;
use crate::codecore::{SyndromeSpace, VectorSpace};
use crate::error::{Error, Result};

/// Neighbour counts `(c, a, b)` into cells `l-1`, `l`, `l+1`, collected per
/// cell. The partition is equitable when every cell shows one triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquitableCounts {
    pub mode: Mode,
    pub cells: Vec<BTreeSet<(u64, u64, u64)>>,
}

impl EquitableCounts {
    pub fn is_equitable(&self) -> bool {
        self.cells.iter().all(|c| c.len() == 1)
    }

    /// Intersection array read off an equitable partition.
    pub fn intersection_array(&self, n: usize, q: usize) -> Option<IntersectionArray> {
        if !self.is_equitable() {
            return None;
        }
        let triple = |l: usize| *self.cells[l].iter().next().expect("nonempty cell");
        let rho = self.cells.len() - 1;
        let b = (0..rho).map(|l| triple(l).2).collect();
        let c = (1..=rho).map(|l| triple(l).0).collect();
        IntersectionArray::new(n, q, b, c).ok()
    }
}

fn collect<I: FnMut(usize, &mut dyn FnMut(usize))>(
    mode: Mode,
    partition: &DistancePartition,
    mut neighbors: I,
) -> Result<EquitableCounts> {
    let rho = partition.rho();
    let mut cells = alloc::vec![BTreeSet::new(); rho + 1];
    let labels = &partition.labels;
    let mut bad = None;
    for (x, &lx) in labels.iter().enumerate() {
        let (mut c, mut a, mut b) = (0u64, 0u64, 0u64);
        neighbors(x, &mut |y| {
            let ly = labels[y];
            if ly + 1 == lx {
                c += 1;
            } else if ly == lx {
                a += 1;
            } else if ly == lx + 1 {
                b += 1;
            } else {
                bad = Some((x, y));
            }
        });
        cells[lx as usize].insert((c, a, b));
    }
    if let Some((x, y)) = bad {
        return Err(Error::Inconsistent(format!(
            "neighbours {x} and {y} have distance labels {} and {}",
            labels[x], labels[y]
        )));
    }
    Ok(EquitableCounts { mode, cells })
}

/// Counts over the syndrome multigraph: each of the `n (q - 1)` labelled
/// transitions `s -> s + γ h_i` counts once.
pub fn syndrome_equitable(space: &SyndromeSpace, partition: &DistancePartition) -> Result<EquitableCounts> {
    let gens = space.generators();
    collect(Mode::Syndrome, partition, |x, visit| {
        for &g in gens {
            visit(space.add(x as u32, g) as usize);
        }
    })
}

/// Counts over the Hamming graph of the ambient space.
pub fn vector_equitable(space: &VectorSpace, partition: &DistancePartition) -> Result<EquitableCounts> {
    collect(Mode::Vector, partition, |x, visit| space.for_each_neighbor(x, |y| visit(y)))
}
