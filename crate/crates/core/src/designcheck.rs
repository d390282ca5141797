//! Designs carried by the weight layers of a code.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::codecore::{Code, WeightDistribution};
use crate::error::{Error, Result};
use crate::fieldkit::{binomial_int, FieldElement};
use crate::guards::Guards;

/// A t-(v,k,lambda)_q design. For q = 2 this is the usual block design on
/// the supports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DesignWitness {
    pub v: usize,
    pub k: usize,
    pub t: usize,
    pub lambda: u64,
    pub q: usize,
    pub qary: bool,
    /// Number of blocks.
    pub b: u64,
    /// Replication number lambda_1.
    pub r: u64,
}

impl DesignWitness {
    /// lambda_i = lambda C(v-i, t-i) (q-1)^(t-i) / C(k-i, t-i), or None if not integral.
    pub fn lambda_i(&self, i: usize) -> Option<BigInt> {
        if i > self.t {
            return None;
        }
        let (v, k, t) = (self.v as i64, self.k as i64, self.t as i64);
        let i = i as i64;
        let num = BigInt::from(self.lambda) * binomial_int(v - i, t - i) * BigInt::from(self.q - 1).pow((t - i) as u32);
        let den = binomial_int(k - i, t - i);
        let (quot, rem) = num.div_rem(&den);
        rem.is_zero().then_some(quot)
    }

    /// Every lambda_i is integral, b = lambda_0, r = lambda_1 and b k = v (q-1) r.
    pub fn is_consistent(&self) -> bool {
        let all = (0..=self.t).all(|i| self.lambda_i(i).is_some());
        let b_ok = self.lambda_i(0) == Some(BigInt::from(self.b));
        let r_ok = self.t == 0 || self.lambda_i(1) == Some(BigInt::from(self.r));
        let count_ok =
            (self.b as u128) * (self.k as u128) == (self.v as u128) * (self.q as u128 - 1) * (self.r as u128);
        all && b_ok && r_ok && count_ok
    }
}

/// Nonzero codewords of weight w, after translating so that 0 is a codeword.
fn layer(code: &Code, w: usize, guards: &Guards) -> Result<Vec<Vec<FieldElement>>> {
    let words = code.codewords(guards)?;
    let zero = vec![0; code.n()];
    let shift = if code.is_linear() || words.iter().any(|x| *x == zero) { None } else { Some(words[0].clone()) };
    let f = code.field();
    Ok(words
        .into_iter()
        .map(|x| match &shift {
            Some(s) => x.iter().zip(s).map(|(&a, &b)| f.sub(a, b)).collect(),
            None => x,
        })
        .filter(|x: &Vec<FieldElement>| x.iter().filter(|&&a| a != 0).count() == w)
        .collect())
}

fn for_each_subset(support: &[usize], t: usize, mut f: impl FnMut(&[usize])) {
    let mut idx: Vec<usize> = (0..t).collect();
    let mut pick = vec![0usize; t];
    if t > support.len() {
        return;
    }
    loop {
        for (p, &i) in pick.iter_mut().zip(&idx) {
            *p = support[i];
        }
        f(&pick);
        let mut j = t;
        loop {
            if j == 0 {
                return;
            }
            j -= 1;
            if idx[j] < support.len() - t + j {
                idx[j] += 1;
                for l in j + 1..t {
                    idx[l] = idx[l - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Counts, for each weight-t vector y covered by some block, the number of
/// blocks x with d(y, x) = w - t, i.e. x agrees with y on supp(y).
fn coverage(blocks: &[Vec<FieldElement>], t: usize) -> BTreeMap<Vec<(usize, FieldElement)>, u64> {
    let mut counts = BTreeMap::new();
    for x in blocks {
        let support: Vec<usize> = (0..x.len()).filter(|&i| x[i] != 0).collect();
        for_each_subset(&support, t, |sub| {
            let key: Vec<(usize, FieldElement)> = sub.iter().map(|&i| (i, x[i])).collect();
            *counts.entry(key).or_insert(0u64) += 1;
        });
    }
    counts
}

/// Checks whether the weight-w codewords form a t-design.
pub fn verify_design(code: &Code, w: usize, t: usize, guards: &Guards) -> Result<Option<DesignWitness>> {
    if t > w {
        return Err(crate::error::domain(format!("strength {t} exceeds block size {w}")));
    }
    let blocks = layer(code, w, guards)?;
    if blocks.is_empty() {
        return Err(Error::EmptyCode);
    }
    let (n, q) = (code.n(), code.q());
    let targets = binomial_int(n as i64, t as i64) * BigInt::from(q - 1).pow(t as u32);
    let ops = BigUint::from(blocks.len()) * binomial_int(w as i64, t as i64).to_biguint().unwrap_or_default();
    guards.count_ops(ops.to_u128().unwrap_or(u128::MAX).max(targets.to_u128().unwrap_or(u128::MAX)))?;
    let counts = coverage(&blocks, t);
    if BigInt::from(counts.len()) != targets {
        return Ok(None);
    }
    let lambda = *counts.values().next().unwrap_or(&0);
    if lambda == 0 || counts.values().any(|&c| c != lambda) {
        return Ok(None);
    }
    let b = blocks.len() as u64;
    let r = if t == 0 {
        0
    } else {
        // lambda_1 by direct count at the first point with a nonzero value
        let first = coverage(&blocks, 1);
        *first.values().next().unwrap_or(&0)
    };
    Ok(Some(DesignWitness { v: n, k: w, t, lambda, q, qary: q > 2, b, r }))
}

/// Largest t for which the weight-w layer is a t-design, with its lambda.
pub fn max_design_strength(code: &Code, w: usize, guards: &Guards) -> Result<(usize, u64)> {
    let blocks = layer(code, w, guards)?;
    if blocks.is_empty() {
        return Err(Error::EmptyCode);
    }
    let mut best = (0, blocks.len() as u64);
    for t in 1..=w {
        match verify_design(code, w, t, guards)? {
            Some(wit) => best = (t, wit.lambda),
            None => break,
        }
    }
    Ok(best)
}

/// (n - w) A_w = (w + 1) A_{w+1} for every odd w >= 2e + 1, with d = 2e + 1.
/// Meaningful for binary codes whose extension is completely regular.
pub fn weight_recursion_check(code: &Code, guards: &Guards) -> Result<bool> {
    if code.q() != 2 {
        return Err(crate::error::domain("weight recursion is stated for binary codes"));
    }
    let wd = code.weight_distribution(guards)?;
    let n = code.n();
    let d = code.minimum_distance(guards)?;
    let e = (d.max(1) - 1) / 2;
    let a = |w: usize| if w <= n { wd.get(w).clone() } else { BigUint::zero() };
    Ok((2 * e + 1..=n).step_by(2).all(|w| BigUint::from(n - w) * a(w) == BigUint::from(w + 1) * a(w + 1)))
}

/// Weight distribution of any binary 1-perfect code of length n = 2^m - 1
/// containing zero.
pub fn perfect_weight_distribution(n: usize) -> Result<WeightDistribution> {
    if n < 3 || !(n + 1).is_power_of_two() {
        return Err(crate::error::domain(format!("length {n} is not 2^m - 1 with m >= 2")));
    }
    let mut a = vec![BigInt::zero(); n + 1];
    a[0] = BigInt::from(1);
    for i in 1..=n {
        let v = if i % 2 == 1 {
            binomial_int(n as i64, i as i64) / BigInt::from(n - i + 1) - &a[i - 1]
        } else {
            &a[i - 1] * BigInt::from(n - i + 1) / BigInt::from(i)
        };
        a[i] = v;
    }
    let counts = a
        .into_iter()
        .map(|x| x.to_biguint().ok_or_else(|| Error::Inconsistent(format!("negative count at length {n}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(WeightDistribution { counts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codecore::{golay_binary, golay_ternary, hamming_parity};
    use crate::fieldkit::Field;
    use proptest::prelude::*;

    fn g() -> Guards {
        Guards::default()
    }

    fn hamming(q: u32, m: usize) -> Code {
        let f = Field::gf(q).unwrap();
        let h = hamming_parity(&f, m).unwrap();
        Code::from_parity_check(&f, h[0].len(), &h).unwrap()
    }

    fn half_golay() -> Code {
        let golay = golay_binary().unwrap();
        let mut h = golay.parity().unwrap().row_vecs();
        h.push(vec![1; 23]);
        Code::from_parity_check(golay.field(), 23, &h).unwrap()
    }

    /// Brute-force oracle over all weight-t binary vectors.
    fn brute_lambda(blocks: &[Vec<u8>], n: usize, t: usize) -> Option<u64> {
        let mut seen = None;
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != t {
                continue;
            }
            let c = blocks.iter().filter(|x| (0..n).all(|i| mask >> i & 1 == 0 || x[i] != 0)).count() as u64;
            match seen {
                None => seen = Some(c),
                Some(s) if s != c => return None,
                _ => {}
            }
        }
        seen.filter(|&c| c > 0)
    }

    #[test]
    fn fano_plane() {
        let w = verify_design(&hamming(2, 3), 3, 2, &g()).unwrap().unwrap();
        assert_eq!((w.v, w.k, w.t, w.lambda, w.b, w.r), (7, 3, 2, 1, 7, 3));
        assert!(w.is_consistent());
        let blocks = layer(&hamming(2, 3), 3, &g()).unwrap();
        assert_eq!(brute_lambda(&blocks, 7, 2), Some(1));
        assert_eq!(max_design_strength(&hamming(2, 3), 3, &g()).unwrap(), (2, 1));
    }

    #[test]
    fn golay_steiner_systems() {
        let golay = golay_binary().unwrap();
        let w = verify_design(&golay, 7, 4, &g()).unwrap().unwrap();
        assert_eq!((w.lambda, w.b), (1, 253));
        assert!(w.is_consistent());
        let ext = golay.extend().unwrap();
        let w = verify_design(&ext, 8, 5, &g()).unwrap().unwrap();
        assert_eq!((w.lambda, w.b, w.r), (1, 759, 253));
        assert_eq!(max_design_strength(&ext, 8, &g()).unwrap(), (5, 1));
        assert!(verify_design(&ext, 8, 6, &g()).unwrap().is_none());
    }

    #[test]
    fn half_golay_strength() {
        let (t, lambda) = max_design_strength(&half_golay(), 8, &g()).unwrap();
        assert!(t >= 4);
        assert_eq!((t, lambda), (4, 4));
    }

    #[test]
    fn repetition_single_block() {
        let f = Field::gf(2).unwrap();
        let c = Code::from_codewords(&f, 3, vec![vec![0, 0, 0], vec![1, 1, 1]]).unwrap();
        assert_eq!(max_design_strength(&c, 3, &g()).unwrap(), (3, 1));
        assert!(matches!(verify_design(&c, 3, 4, &g()), Err(Error::Domain(_))));
    }

    #[test]
    fn qary_designs() {
        // ternary Golay: perfect with e = 2, so C_5 is a Steiner S(11,5,3)_3
        let tg = golay_ternary().unwrap();
        let w = verify_design(&tg, 5, 3, &g()).unwrap().unwrap();
        assert_eq!(w.lambda, 1);
        assert!(w.qary && w.is_consistent());
        // ternary Hamming [4,2,3]: C_3 is S(4,3,2)_3
        let h = hamming(3, 2);
        let w = verify_design(&h, 3, 2, &g()).unwrap().unwrap();
        assert_eq!(w.lambda, 1);
    }

    #[test]
    fn nonlinear_code_is_translated() {
        let f = Field::gf(2).unwrap();
        let c = Code::from_codewords(&f, 3, vec![vec![1, 0, 0], vec![0, 1, 1]]).unwrap();
        assert_eq!(max_design_strength(&c, 3, &g()).unwrap(), (3, 1));
    }

    #[test]
    fn recursion_examples() {
        let p = half_golay().puncture(0).unwrap();
        let wd = p.weight_distribution(&g()).unwrap().to_u64().unwrap();
        assert_eq!((wd[7], wd[8], wd[11], wd[12], wd[15], wd[16]), (176, 330, 672, 616, 176, 77));
        assert!(weight_recursion_check(&p, &g()).unwrap());
        assert!(weight_recursion_check(&hamming(2, 3), &g()).unwrap());
        assert!(weight_recursion_check(&golay_binary().unwrap(), &g()).unwrap());
    }

    #[test]
    fn perfect_distributions() {
        assert_eq!(perfect_weight_distribution(7).unwrap().to_u64().unwrap(), vec![1, 0, 0, 7, 7, 0, 0, 1]);
        assert_eq!(perfect_weight_distribution(15).unwrap().to_u64().unwrap()[3], 35);
        assert!(perfect_weight_distribution(8).is_err());
        for m in 3..6 {
            let n = (1usize << m) - 1;
            let expect = hamming(2, m).weight_distribution(&g()).unwrap();
            assert_eq!(perfect_weight_distribution(n).unwrap(), expect);
        }
    }

    #[test]
    fn designs_are_nested() {
        let golay = golay_binary().unwrap();
        for w in [7usize, 8, 11, 12] {
            let (t, _) = max_design_strength(&golay, w, &g()).unwrap();
            let top = verify_design(&golay, w, t, &g()).unwrap().unwrap();
            for s in 1..=t {
                let wit = verify_design(&golay, w, s, &g()).unwrap().unwrap();
                assert_eq!(Some(BigInt::from(wit.lambda)), top.lambda_i(s));
                assert!(wit.is_consistent());
            }
        }
    }

    proptest! {
        #[test]
        fn perfect_recursion_holds(m in 2u32..9) {
            let n = (1usize << m) - 1;
            let a = perfect_weight_distribution(n).unwrap();
            let get = |i: i64| if i < 0 || i > n as i64 { BigUint::zero() } else { a.get(i as usize).clone() };
            for i in 0..=n as i64 {
                let lhs = BigUint::from((n as i64 - i + 1) as u64) * get(i - 1) + get(i) + BigUint::from((i + 1) as u64) * get(i + 1);
                prop_assert_eq!(BigInt::from(lhs), binomial_int(n as i64, i));
            }
        }

    }
}
