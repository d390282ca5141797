use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use super::{Field, Poly};
use crate::error::{domain, Error, Result};

/// The q-cyclotomic coset of `e` modulo `n`, sorted ascending.
pub fn cyclotomic_coset(e: u64, n: u64, q: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(domain("cyclotomic coset modulo zero"));
    }
    if num_integer::gcd(q, n) != 1 {
        return Err(domain(format!("q = {q} and n = {n} are not coprime")));
    }
    let mut set = BTreeSet::new();
    let mut x = e % n;
    while set.insert(x) {
        x = (x * q) % n;
    }
    Ok(set.into_iter().collect())
}

/// All q-cyclotomic cosets modulo `n`, ordered by their smallest element.
pub fn cyclotomic_cosets(n: u64, q: u64) -> Result<Vec<Vec<u64>>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for e in 0..n {
        if seen.contains(&e) {
            continue;
        }
        let c = cyclotomic_coset(e, n, q)?;
        seen.extend(c.iter().copied());
        out.push(c);
    }
    Ok(out)
}

/// Multiplicative order of q modulo n.
fn order_mod(q: u64, n: u64) -> u64 {
    if n == 1 {
        return 1;
    }
    let mut x = q % n;
    let mut k = 1;
    while x != 1 {
        x = x * q % n;
        k += 1;
    }
    k
}

/// Minimal polynomial over `field` of `beta^e`, where `beta` is the
/// primitive n-th root of unity `alpha^((Q-1)/n)` in the smallest extension
/// GF(Q) of `field` containing one.
pub fn minimal_polynomial(field: &Field, e: u64, n: u64) -> Result<Poly> {
    let q = field.q() as u64;
    let coset = cyclotomic_coset(e, n, q)?;
    let m = order_mod(q, n) as u32;
    let big_q = q
        .checked_pow(m)
        .filter(|&x| x <= 256)
        .ok_or_else(|| domain(format!("splitting field GF({q}^{m}) is larger than 256")))?;
    let big = Field::gf(big_q as u32)?;
    let beta = big.exp((big_q - 1) / n);
    let mut prod = Poly::one();
    for &j in &coset {
        let root = big.pow(beta, j);
        prod = prod.mul(&Poly::new(alloc::vec![big.neg(root), 1]), &big);
    }
    let embed = field.embedding_into(&big)?;
    let mut back = alloc::vec![None; big.q()];
    for (a, &img) in embed.iter().enumerate() {
        back[img as usize] = Some(a as u8);
    }
    let coeffs = prod
        .coeffs
        .iter()
        .map(|&c| back[c as usize].ok_or_else(|| Error::Inconsistent("minimal polynomial left the subfield".into())))
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn coset_examples() {
        assert_eq!(cyclotomic_coset(1, 7, 2).unwrap(), vec![1, 2, 4]);
        assert_eq!(cyclotomic_coset(5, 15, 2).unwrap(), vec![5, 10]);
        assert!(cyclotomic_coset(1, 6, 2).is_err());
    }

    #[test]
    fn cosets_partition() {
        let cs = cyclotomic_cosets(31, 2).unwrap();
        assert_eq!(cs.len(), 7);
        assert_eq!(cs.iter().map(|c| c.len()).sum::<usize>(), 31);
    }

    #[test]
    fn minimal_polynomials_n7() {
        let f = Field::gf(2).unwrap();
        assert_eq!(minimal_polynomial(&f, 1, 7).unwrap().coeffs, vec![1, 1, 0, 1]);
        assert_eq!(minimal_polynomial(&f, 3, 7).unwrap().coeffs, vec![1, 0, 1, 1]);
    }

    #[test]
    fn product_of_all_minimal_polynomials_is_xn_minus_1() {
        for (q, n) in [(2u32, 15u64), (2, 31), (3, 13), (4, 21), (2, 63)] {
            let f = Field::gf(q).unwrap();
            let mut prod = Poly::one();
            for c in cyclotomic_cosets(n, q as u64).unwrap() {
                prod = prod.mul(&minimal_polynomial(&f, c[0], n).unwrap(), &f);
            }
            let mut want = vec![0u8; n as usize + 1];
            want[0] = f.neg(1);
            want[n as usize] = 1;
            assert_eq!(prod.coeffs, want, "q={q} n={n}");
        }
    }
}
