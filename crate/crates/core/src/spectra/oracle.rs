use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigUint;

use super::classify::{analyze_syndrome_mode, analyze_vector_mode, Analysis};
use crate::codecore::Code;
use crate::error::{domain, Error, Result};
use crate::guards::Guards;

fn mismatch(what: &str) -> Error {
    Error::Inconsistent(format!("syndrome mode and vector mode disagree on {what}"))
}

/// Run a linear code through both the syndrome-space machinery and the
/// full-space brute force and require identical results: covering radius,
/// distance partition, equitable counts, outer profile (multiplicities
/// scaled by `|C|`), external distance and classification.
pub fn cross_validate_modes(code: &Code, guards: &Guards) -> Result<(Analysis, Analysis)> {
    if !code.is_linear() {
        return Err(domain("mode cross-validation needs a linear code"));
    }
    let syn = analyze_syndrome_mode(code, guards)?;
    let vec = analyze_vector_mode(code, guards)?;
    let m = code.size();
    if syn.partition.rho() != vec.partition.rho() {
        return Err(mismatch("the covering radius"));
    }
    if syn.partition.vector_sizes(&m) != vec.partition.vector_sizes(&m) {
        return Err(mismatch("the distance partition"));
    }
    if syn.equitable.cells != vec.equitable.cells {
        return Err(mismatch("equitable neighbour counts"));
    }
    let scaled = |a: &Analysis| -> Vec<(usize, Vec<num_bigint::BigInt>, BigUint)> {
        a.profile
            .rows
            .iter()
            .map(|r| {
                let mult = match a.mode() {
                    super::Mode::Syndrome => &m * BigUint::from(r.multiplicity),
                    super::Mode::Vector => BigUint::from(r.multiplicity),
                };
                (r.label, r.b.clone(), mult)
            })
            .collect()
    };
    if scaled(&syn) != scaled(&vec) {
        return Err(mismatch("the outer profile"));
    }
    if syn.dual_distance_distribution != vec.dual_distance_distribution {
        return Err(mismatch("the dual distance distribution"));
    }
    if syn.classification != vec.classification {
        return Err(mismatch("the classification"));
    }
    if syn.intersection_array != vec.intersection_array || syn.packing != vec.packing {
        return Err(mismatch("the intersection array or packing parameters"));
    }
    Ok((syn, vec))
}
