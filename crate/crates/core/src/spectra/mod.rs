//! Distance partitions, outer distribution profiles, external distance,
//! complete regularity and the uniformly packed hierarchy.

mod classify;
mod equitable;
mod extension;
mod ia;
mod oracle;
mod partition;
mod profile;

pub use classify::{analyze, analyze_syndrome_mode, analyze_vector_mode, Analysis, Classification, PackingParameters};
pub use equitable::{syndrome_equitable, vector_equitable, EquitableCounts};
pub use extension::{self_complementary_extension_block, up_extension_criterion};
pub use ia::IntersectionArray;
pub use oracle::cross_validate_modes;
pub use partition::{distance_partition, syndrome_partition, vector_partition, DistancePartition, Mode};
pub use profile::{syndrome_profile, vector_profile, DualSpectrum, OuterProfile, ProfileRow};

use crate::codecore::Code;
use crate::error::Result;
use crate::guards::Guards;

/// Outer profile: dual character sums for linear codes, direct counting
/// otherwise.
pub fn outer_profile(code: &Code, guards: &Guards) -> Result<OuterProfile> {
    Ok(analyze(code, guards)?.profile)
}

/// External distance `s`.
pub fn external_distance(code: &Code, guards: &Guards) -> Result<usize> {
    Ok(analyze(code, guards)?.classification.s)
}

/// Largest `t` for which the code is t-regular.
pub fn t_regularity_degree(code: &Code, guards: &Guards) -> Result<Option<usize>> {
    Ok(analyze(code, guards)?.profile.t_regularity_degree())
}

/// Complete regularity verdict with the intersection array on success.
pub fn is_completely_regular(code: &Code, guards: &Guards) -> Result<(bool, Option<IntersectionArray>)> {
    let a = analyze(code, guards)?;
    Ok((a.classification.completely_regular, a.intersection_array))
}

/// Packing parameters `β`, when the code is uniformly packed in the wide
/// sense.
pub fn packing_parameters(code: &Code, guards: &Guards) -> Result<Option<PackingParameters>> {
    Ok(analyze(code, guards)?.packing)
}

/// Parameters and flags.
pub fn classify(code: &Code, guards: &Guards) -> Result<Classification> {
    Ok(analyze(code, guards)?.classification)
}

#[cfg(test)]
mod tests;
