use alloc::vec;
use alloc::vec::Vec;

use super::{Field, FieldElement};

/// Polynomial over a finite field, coefficients lowest degree first.
/// The zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    pub coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![1] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &Poly, f: &Field) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn mul(&self, other: &Poly, f: &Field) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::new(Vec::new());
        }
        let mut out = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(out)
    }

    pub fn eval(&self, x: FieldElement, f: &Field) -> FieldElement {
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &Poly, f: &Field) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = f.inv(d.coeffs[dd]).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0; self.coeffs.len().saturating_sub(dd).max(1)];
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.len() - 1;
            let c = f.mul(rem[top], lead_inv);
            if c != 0 {
                let shift = top - dd;
                quot[shift] = c;
                for (k, &dk) in d.coeffs.iter().enumerate() {
                    rem[shift + k] = f.sub(rem[shift + k], f.mul(c, dk));
                }
            }
            rem.pop();
        }
        (Poly::new(quot), Poly::new(rem))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_round_trip() {
        let f = Field::gf(5).unwrap();
        let a = Poly::new(vec![1, 2, 3, 4, 1]);
        let d = Poly::new(vec![2, 0, 3]);
        let (qq, r) = a.div_rem(&d, &f);
        assert!(r.degree().map_or(true, |x| x < 2));
        assert_eq!(qq.mul(&d, &f).add(&r, &f), a);
    }
}
