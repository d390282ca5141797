use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Rational;

/// Generalized binomial coefficient `x (x-1) ... (x-k+1) / k!` for rational `x`.
pub fn binomial(x: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k {
        acc *= x - Rational::from_integer(BigInt::from(i));
        acc /= Rational::from_integer(BigInt::from(i + 1));
    }
    acc
}

/// Integer binomial `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial_int(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Krawtchouk polynomial `P_r(n, xi) = Σ_j (-1)^(r-j) (q-1)^j C(n-xi, j) C(xi, r-j)`.
pub fn krawtchouk_int(r: u32, n: u32, xi: u32, q: u32) -> BigInt {
    let mut acc = BigInt::zero();
    let mut qpow = BigInt::one();
    for j in 0..=r as i64 {
        let term = &qpow * binomial_int(n as i64 - xi as i64, j) * binomial_int(xi as i64, r as i64 - j);
        if (r as i64 - j) % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
        qpow *= q - 1;
    }
    acc
}

/// Krawtchouk polynomial at a rational point `xi` (used for root searches).
pub fn krawtchouk(r: u32, n: u32, xi: &Rational, q: u32) -> Rational {
    let nr = Rational::from_integer(BigInt::from(n));
    let mut acc = Rational::zero();
    let mut qpow = BigInt::one();
    for j in 0..=r {
        let term = Rational::from_integer(qpow.clone()) * binomial(&(&nr - xi), j) * binomial(xi, r - j);
        if (r - j) % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
        qpow *= q - 1;
    }
    acc
}

/// Table of `P_i(n, w)` for `0 <= i, w <= n`.
#[derive(Debug, Clone)]
pub struct KrawtchoukTable {
    n: u32,
    values: Vec<BigInt>,
}

impl KrawtchoukTable {
    pub fn new(n: u32, q: u32) -> Self {
        let size = n as usize + 1;
        let mut values = Vec::with_capacity(size * size);
        for i in 0..=n {
            for w in 0..=n {
                values.push(krawtchouk_int(i, n, w, q));
            }
        }
        KrawtchoukTable { n, values }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `P_i(n, w)`.
    pub fn get(&self, i: usize, w: usize) -> &BigInt {
        &self.values[i * (self.n as usize + 1) + w]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(a: i64, b: i64) -> Rational {
        Rational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(&rat(3, 2), 2), rat(3, 8));
        assert_eq!(binomial(&rat(7, 1), 3), rat(35, 1));
        assert_eq!(binomial(&rat(-1, 1), 3), rat(-1, 1));
        assert_eq!(binomial_int(5, 7), BigInt::zero());
    }

    #[test]
    fn krawtchouk_examples() {
        assert_eq!(krawtchouk_int(1, 7, 1, 2), BigInt::from(5));
        assert_eq!(krawtchouk_int(2, 7, 1, 2), BigInt::from(9));
        assert_eq!(krawtchouk(2, 7, &rat(1, 1), 2), rat(9, 1));
    }

    #[test]
    fn krawtchouk_orthogonality() {
        for q in [2u32, 3, 4] {
            for n in 1..=10u32 {
                for r in 0..=n {
                    for s in 0..=n {
                        let mut sum = BigInt::zero();
                        for xi in 0..=n {
                            sum += binomial_int(n as i64, xi as i64)
                                * BigInt::from(q - 1).pow(xi)
                                * krawtchouk_int(r, n, xi, q)
                                * krawtchouk_int(s, n, xi, q);
                        }
                        let want = if r == s {
                            BigInt::from(q).pow(n) * BigInt::from(q - 1).pow(r) * binomial_int(n as i64, r as i64)
                        } else {
                            BigInt::zero()
                        };
                        assert_eq!(sum, want, "q={q} n={n} r={r} s={s}");
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn rational_and_integer_evaluations_agree(n in 1u32..20, r in 0u32..20, xi in 0u32..20, q in 2u32..6) {
            prop_assume!(r <= n && xi <= n);
            prop_assert_eq!(
                krawtchouk(r, n, &Rational::from_integer(BigInt::from(xi)), q),
                Rational::from_integer(krawtchouk_int(r, n, xi, q))
            );
        }

        #[test]
        fn pascal_rule(n in 1i64..40, k in 1i64..40) {
            prop_assert_eq!(binomial_int(n, k), binomial_int(n - 1, k - 1) + binomial_int(n - 1, k));
        }
    }
}
