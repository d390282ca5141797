use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::codecore::Code;
use crate::error::{domain, Result};
use crate::fieldkit::Rational;
use crate::guards::Guards;

/// Whether a binary code with packing parameters `beta` stays uniformly
/// packed in the wide sense after extension, and if so the packing
/// parameters `γ_0..γ_(ρ+1)` of the extended code.
///
/// The condition is `β_(ρ-2i) = β_(ρ-2i-1)` for `0 <= i <= (ρ-1)/2`; then
/// `γ_(ρ-2i) = β_(ρ-2i)` and
/// `γ_(ρ-2i+1) = ((ρ+1-2i) β_(ρ-2i) + (n-ρ+2i) β_(ρ-2i+2)) / (n+1)`,
/// with `β_j = 0` outside `0..=ρ`.
pub fn up_extension_criterion(beta: &[Rational], n: usize, q: usize) -> Result<(bool, Option<Vec<Rational>>)> {
    if q != 2 {
        return Err(domain("the extension criterion is stated for binary codes"));
    }
    if beta.is_empty() {
        return Err(domain("empty packing parameters"));
    }
    let rho = beta.len() as i64 - 1;
    let at = |j: i64| -> Rational {
        if (0..=rho).contains(&j) {
            beta[j as usize].clone()
        } else {
            Rational::zero()
        }
    };
    let holds = rho == 0 || (0..=(rho - 1) / 2).all(|i| at(rho - 2 * i) == at(rho - 2 * i - 1));
    if !holds {
        return Ok((false, None));
    }
    let mut gamma = alloc::vec![Rational::zero(); beta.len() + 1];
    for i in 0..=rho / 2 {
        gamma[(rho - 2 * i) as usize] = at(rho - 2 * i);
    }
    let n1 = Rational::from_integer(BigInt::from(n + 1));
    for i in 0..=(rho + 1) / 2 {
        let idx = rho - 2 * i + 1;
        if idx < 0 {
            continue;
        }
        let a = Rational::from_integer(BigInt::from(rho + 1 - 2 * i)) * at(rho - 2 * i);
        let b = Rational::from_integer(BigInt::from(n as i64 - rho + 2 * i)) * at(rho - 2 * i + 2);
        gamma[idx as usize] = (a + b) / &n1;
    }
    Ok((true, Some(gamma)))
}

/// True when an even-length, self-complementary binary CR code is known in
/// advance to have an extension that is not uniformly packed in the wide
/// sense.
pub fn self_complementary_extension_block(code: &Code, guards: &Guards) -> Result<bool> {
    if !code.field().is_binary() {
        return Err(domain("the self-complementary extension block concerns binary codes"));
    }
    Ok(code.n() % 2 == 0 && code.is_self_complementary(guards)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn r(a: i64, b: i64) -> Rational {
        Rational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn perfect_codes_extend() {
        let (ok, gamma) = up_extension_criterion(&[r(1, 1), r(1, 1)], 7, 2).unwrap();
        assert!(ok);
        assert_eq!(gamma.unwrap(), vec![r(1, 1), r(1, 1), r(1, 4)]);
    }

    #[test]
    fn bch_gamma() {
        let beta = [r(1, 1), r(1, 1), r(1, 5), r(1, 5)];
        let (ok, gamma) = up_extension_criterion(&beta, 31, 2).unwrap();
        assert!(ok);
        assert_eq!(gamma.unwrap(), vec![r(1, 1), r(1, 1), r(1, 4), r(1, 5), r(1, 40)]);
    }

    #[test]
    fn unequal_pairs_fail() {
        let (ok, gamma) = up_extension_criterion(&[r(1, 1), r(1, 1), r(1, 3), r(1, 5)], 31, 2).unwrap();
        assert!(!ok && gamma.is_none());
        assert!(up_extension_criterion(&[r(1, 1)], 3, 3).is_err());
    }
}
