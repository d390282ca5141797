//! Construction and first-principles verification of completely regular codes.
//!
//! Everything here is exact: finite-field arithmetic over GF(p^r) with
//! q ≤ 256, arbitrary precision integers and rationals for spectra, and
//! exhaustive enumeration bounded by explicit [`Guards`].
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the CLI and
//! parallel regression live in the companion `crcodes-cli` crate.
//!
//! Module map:
//!
//! * [`fieldkit`] finite fields, polynomials, cyclotomic cosets, Krawtchouk
//!   polynomials and exact linear algebra.
//! * [`codecore`] linear and explicit codes and their transformations.
//! * [`spectra`] distance partitions, outer distributions, intersection
//!   arrays, packing parameters and classification.
//! * [`lloydgate`] arithmetic necessary conditions on candidate parameters.
//! * [`designcheck`] t-designs carried by weight layers.
//! * [`cosetgraph`] the coset graph of a linear code.
//! * [`atlas`] the construction catalog with expected intersection arrays.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod atlas;
pub mod codecore;
pub mod cosetgraph;
pub mod designcheck;
mod error;
pub mod fieldkit;
mod guards;
pub mod lloydgate;
pub mod spectra;

pub use codecore::{Code, WeightDistribution};
pub use error::{Error, Result};
pub use fieldkit::{Field, FieldElement, FieldSpec, Rational};
pub use guards::Guards;
pub use spectra::IntersectionArray;
