use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{domain, Error, Result};

/// A field element, stored as its index in `[0, q)`.
///
/// The index is the base-p encoding of the coefficient vector of the
/// residue polynomial: index `Σ c_i p^i` stands for `Σ c_i x^i`. Index 0 is
/// zero and index 1 is one.
pub type FieldElement = u8;

/// Characteristic, degree and defining polynomial of GF(p^r).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec {
    pub p: u32,
    pub r: u32,
    /// Monic modulus, coefficients from x^0 up to x^r.
    pub modulus: Vec<u32>,
}

// Conway polynomials, lowest coefficient first.
const CONWAY: &[(u32, u32, &[u32])] = &[
    (2, 1, &[1, 1]),
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 1, 1, 0, 1]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
    (3, 1, &[1, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (3, 5, &[1, 2, 0, 0, 0, 1]),
    (5, 1, &[3, 1]),
    (5, 2, &[2, 4, 1]),
    (5, 3, &[3, 3, 0, 1]),
    (7, 1, &[4, 1]),
    (7, 2, &[3, 6, 1]),
    (11, 1, &[9, 1]),
    (11, 2, &[2, 7, 1]),
    (13, 1, &[11, 1]),
    (13, 2, &[2, 12, 1]),
];

pub(crate) fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Split `q` into `(p, r)` with `q = p^r`, if `q` is a prime power.
pub(crate) fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while q % p != 0 {
        p += 1;
    }
    let (mut rest, mut r) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        r += 1;
    }
    (rest == 1).then_some((p, r))
}

impl FieldSpec {
    /// Validated spec. The modulus must be monic of degree `r` and
    /// irreducible over GF(p); irreducibility is checked when a [`Field`] is
    /// built from it.
    pub fn new(p: u32, r: u32, modulus: Vec<u32>) -> Result<Self> {
        if !is_prime(p) {
            return Err(domain(format!("characteristic {p} is not prime")));
        }
        if r == 0 || modulus.len() != r as usize + 1 || modulus[r as usize] != 1 {
            return Err(domain(format!("modulus must be monic of degree {r}")));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(domain("modulus coefficient out of range"));
        }
        let q = (p as u64).pow(r);
        if q > 256 {
            return Err(domain(format!("field order {q} exceeds 256")));
        }
        Ok(FieldSpec { p, r, modulus })
    }

    /// The pinned modulus for GF(q): a Conway polynomial where tabulated,
    /// otherwise the first primitive polynomial in lexicographic order.
    pub fn canonical(q: u32) -> Result<Self> {
        let (p, r) = prime_power(q).ok_or_else(|| domain(format!("{q} is not a prime power")))?;
        if q > 256 {
            return Err(domain(format!("field order {q} exceeds 256")));
        }
        if let Some((_, _, m)) = CONWAY.iter().find(|(cp, cr, _)| *cp == p && *cr == r) {
            return FieldSpec::new(p, r, m.to_vec());
        }
        // First monic polynomial whose root is primitive.
        let count = (p as u64).pow(r);
        for tail in 0..count {
            let mut modulus = Vec::with_capacity(r as usize + 1);
            let mut t = tail;
            for _ in 0..r {
                modulus.push((t % p as u64) as u32);
                t /= p as u64;
            }
            modulus.push(1);
            if modulus[0] == 0 {
                continue;
            }
            let spec = FieldSpec { p, r, modulus };
            if let Ok(tables) = Tables::build(spec.clone()) {
                if tables.x_is_primitive {
                    return Ok(spec);
                }
            }
        }
        Err(domain(format!("no primitive polynomial found for GF({q})")))
    }

    pub fn q(&self) -> u32 {
        self.p.pow(self.r)
    }
}

struct Tables {
    spec: FieldSpec,
    q: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
    log: Vec<u16>,
    exp: Vec<u8>,
    alpha: u8,
    x_is_primitive: bool,
}

fn to_coeffs(mut a: usize, p: usize, r: usize) -> Vec<usize> {
    let mut c = vec![0; r];
    for slot in c.iter_mut() {
        *slot = a % p;
        a /= p;
    }
    c
}

fn from_coeffs(c: &[usize], p: usize) -> usize {
    c.iter().rev().fold(0, |acc, &d| acc * p + d)
}

impl Tables {
    fn build(spec: FieldSpec) -> Result<Self> {
        let p = spec.p as usize;
        let r = spec.r as usize;
        let q = p.pow(r as u32);
        let modulus: Vec<usize> = spec.modulus.iter().map(|&c| c as usize).collect();
        let coeffs: Vec<Vec<usize>> = (0..q).map(|a| to_coeffs(a, p, r)).collect();

        let mut add = vec![0u8; q * q];
        let mut neg = vec![0u8; q];
        for a in 0..q {
            for b in 0..q {
                let s: Vec<usize> = (0..r).map(|i| (coeffs[a][i] + coeffs[b][i]) % p).collect();
                add[a * q + b] = from_coeffs(&s, p) as u8;
            }
            let n: Vec<usize> = coeffs[a].iter().map(|&c| (p - c) % p).collect();
            neg[a] = from_coeffs(&n, p) as u8;
        }

        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            for b in a..q {
                let mut prod = vec![0usize; 2 * r];
                for i in 0..r {
                    if coeffs[a][i] == 0 {
                        continue;
                    }
                    for j in 0..r {
                        prod[i + j] = (prod[i + j] + coeffs[a][i] * coeffs[b][j]) % p;
                    }
                }
                // Reduce modulo the monic modulus from the top down.
                for deg in (r..2 * r).rev() {
                    let lead = prod[deg];
                    if lead == 0 {
                        continue;
                    }
                    for k in 0..=r {
                        let idx = deg - r + k;
                        prod[idx] = (prod[idx] + p * p - lead * modulus[k] % p) % p;
                    }
                }
                let v = from_coeffs(&prod[..r], p) as u8;
                if a != 0 && b != 0 && v == 0 {
                    return Err(domain(format!("modulus {:?} is reducible over GF({})", spec.modulus, p)));
                }
                mul[a * q + b] = v;
                mul[b * q + a] = v;
            }
        }

        let mut inv = vec![0u8; q];
        for a in 1..q {
            let b = (1..q).find(|&b| mul[a * q + b] == 1).ok_or_else(|| domain("modulus does not define a field"))?;
            inv[a] = b as u8;
        }

        // x mod modulus: index p when r > 1, the root -m_0 when r == 1.
        let x = if r > 1 { p } else { (p - modulus[0]) % p };
        let order = |g: usize| {
            let mut acc = g;
            let mut k = 1;
            while acc != 1 {
                acc = mul[acc * q + g] as usize;
                k += 1;
                if k > q {
                    return 0;
                }
            }
            k
        };
        let x_is_primitive = x != 0 && order(x) == q - 1;
        let alpha = if x_is_primitive { x } else { (2..q).find(|&g| order(g) == q - 1).unwrap_or(1) };

        let mut exp = vec![0u8; q - 1];
        let mut log = vec![0u16; q];
        let mut acc = 1usize;
        for (i, slot) in exp.iter_mut().enumerate() {
            *slot = acc as u8;
            log[acc] = i as u16;
            acc = mul[acc * q + alpha] as usize;
        }
        if q == 2 {
            exp[0] = 1;
        }

        Ok(Tables { spec, q, add, mul, neg, inv, log, exp, alpha: alpha as u8, x_is_primitive })
    }
}

/// GF(p^r) with precomputed operation tables. Cheap to clone.
#[derive(Clone)]
pub struct Field {
    t: Arc<Tables>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.t.q)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.t, &other.t) || self.t.spec == other.t.spec
    }
}

impl Eq for Field {}

impl Field {
    pub fn new(spec: FieldSpec) -> Result<Field> {
        Ok(Field { t: Arc::new(Tables::build(spec)?) })
    }

    /// GF(q) with the canonical modulus.
    pub fn gf(q: u32) -> Result<Field> {
        Field::new(FieldSpec::canonical(q)?)
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.t.spec
    }

    pub fn q(&self) -> usize {
        self.t.q
    }

    pub fn p(&self) -> usize {
        self.t.spec.p as usize
    }

    pub fn r(&self) -> usize {
        self.t.spec.r as usize
    }

    pub fn is_binary(&self) -> bool {
        self.t.q == 2
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.t.add[a as usize * self.t.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        self.t.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.t.mul[a as usize * self.t.q + b as usize]
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a == 0 {
            return Err(domain("inverse of zero"));
        }
        Ok(self.t.inv[a as usize])
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let l = self.t.log[a as usize] as u64;
        self.exp(l * e)
    }

    /// The designated primitive element (the class of x when the modulus is
    /// primitive).
    pub fn alpha(&self) -> FieldElement {
        self.t.alpha
    }

    /// `alpha^i`.
    pub fn exp(&self, i: u64) -> FieldElement {
        self.t.exp[(i % (self.t.q as u64 - 1)) as usize]
    }

    /// Discrete logarithm to base [`Field::alpha`]; `None` for zero.
    pub fn log(&self, a: FieldElement) -> Option<u64> {
        (a != 0).then(|| self.t.log[a as usize] as u64)
    }

    /// Absolute trace `a + a^p + ... + a^(p^(r-1))`, an element of the prime
    /// field returned as its integer value.
    pub fn trace(&self, a: FieldElement) -> u32 {
        let mut acc = 0;
        let mut x = a;
        for _ in 0..self.r() {
            acc = self.add(acc, x);
            x = self.pow(x, self.p() as u64);
        }
        debug_assert!((acc as usize) < self.p());
        acc as u32
    }

    /// Coefficient vector (length r, base p digits) of an element.
    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        to_coeffs(a as usize, self.p(), self.r()).into_iter().map(|c| c as u32).collect()
    }

    pub fn from_coeffs(&self, c: &[u32]) -> Result<FieldElement> {
        if c.len() > self.r() || c.iter().any(|&d| d as usize >= self.p()) {
            return Err(Error::Format(format!("coefficients {c:?} out of range")));
        }
        let c: Vec<usize> = c.iter().map(|&d| d as usize).collect();
        Ok(from_coeffs(&c, self.p()) as FieldElement)
    }

    /// The prime-subfield element `c mod p`.
    pub fn prime(&self, c: i64) -> FieldElement {
        c.rem_euclid(self.p() as i64) as FieldElement
    }

    /// Whether `self` is a subfield of `big` (same characteristic, r | R).
    pub fn is_subfield_of(&self, big: &Field) -> bool {
        self.p() == big.p() && big.r() % self.r() == 0
    }

    /// Embedding map GF(p^r) -> GF(p^R), indexed by element of `self`.
    ///
    /// The image of the primitive element is `big.alpha()^((Q-1)/(q-1))`
    /// when that is a root of this field's modulus (always the case for
    /// Conway polynomials), otherwise the smallest-index root.
    pub fn embedding_into(&self, big: &Field) -> Result<Vec<FieldElement>> {
        if !self.is_subfield_of(big) {
            return Err(domain(format!("{self:?} is not a subfield of {big:?}")));
        }
        if self == big {
            return Ok((0..self.q()).map(|a| a as FieldElement).collect());
        }
        let eval = |x: FieldElement| {
            let mut acc: FieldElement = 0;
            for &c in self.spec().modulus.iter().rev() {
                acc = big.add(big.mul(acc, x), c as FieldElement);
            }
            acc
        };
        let cofactor = (big.q() as u64 - 1) / (self.q() as u64 - 1);
        let preferred = big.exp(cofactor);
        let root = if eval(preferred) == 0 {
            preferred
        } else {
            (1..big.q())
                .map(|x| x as FieldElement)
                .find(|&x| eval(x) == 0)
                .ok_or_else(|| Error::Inconsistent("no root of subfield modulus".into()))?
        };
        // x^i -> root^i, extended linearly over the prime field.
        let r = self.r();
        let mut powers = Vec::with_capacity(r);
        let mut acc: FieldElement = 1;
        for _ in 0..r {
            powers.push(acc);
            acc = big.mul(acc, root);
        }
        Ok((0..self.q())
            .map(|a| {
                let c = to_coeffs(a, self.p(), r);
                c.iter().zip(&powers).fold(0, |s, (&d, &pw)| big.add(s, big.mul(d as FieldElement, pw)))
            })
            .collect())
    }

    /// Elements 0..q as field elements.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.t.q).map(|a| a as FieldElement)
    }

    /// Nonzero elements.
    pub fn units(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (1..self.t.q).map(|a| a as FieldElement)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf2_one_plus_one() {
        let f = Field::gf(2).unwrap();
        assert_eq!(f.add(1, 1), 0);
    }

    #[test]
    fn gf4_alpha_squared_is_alpha_plus_one() {
        let f = Field::gf(4).unwrap();
        assert_eq!(f.spec().modulus, vec![1, 1, 1]);
        let a = f.alpha();
        assert_eq!(a, 2);
        // alpha + 1 has coefficient vector (1, 1), i.e. index 3.
        assert_eq!(f.mul(a, a), 3);
        assert_eq!(f.mul(a, a), f.add(a, 1));
    }

    #[test]
    fn gf3_inverse_of_two() {
        let f = Field::gf(3).unwrap();
        assert_eq!(f.inv(2).unwrap(), 2);
        assert!(f.inv(0).is_err());
    }

    #[test]
    fn canonical_moduli_are_primitive() {
        for q in 2..=256u32 {
            if prime_power(q).is_none() {
                continue;
            }
            let spec = FieldSpec::canonical(q).unwrap();
            let t = Tables::build(spec).unwrap();
            assert!(t.x_is_primitive, "GF({q}) modulus not primitive");
        }
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for q in [2u32, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            let f = Field::gf(q).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn trace_is_additive_and_onto_prime_field() {
        for q in [2u32, 4, 8, 9, 16, 27] {
            let f = Field::gf(q).unwrap();
            let mut hits = vec![0usize; f.p()];
            for a in f.elements() {
                hits[f.trace(a) as usize] += 1;
                for b in f.elements() {
                    let t = (f.trace(a) + f.trace(b)) % f.p() as u32;
                    assert_eq!(f.trace(f.add(a, b)), t);
                }
            }
            assert!(hits.iter().all(|&h| h == f.q() / f.p()));
        }
    }

    #[test]
    fn reducible_modulus_rejected() {
        // x^2 + 1 = (x + 1)^2 over GF(2).
        let spec = FieldSpec::new(2, 2, vec![1, 0, 1]).unwrap();
        assert!(Field::new(spec).is_err());
    }

    #[test]
    fn subfield_embedding_is_a_homomorphism() {
        for (s, b) in [(2u32, 4u32), (2, 16), (4, 16), (2, 8), (8, 64), (3, 9), (4, 64)] {
            let small = Field::gf(s).unwrap();
            let big = Field::gf(b).unwrap();
            let map = small.embedding_into(&big).unwrap();
            for x in small.elements() {
                for y in small.elements() {
                    assert_eq!(map[small.add(x, y) as usize], big.add(map[x as usize], map[y as usize]));
                    assert_eq!(map[small.mul(x, y) as usize], big.mul(map[x as usize], map[y as usize]));
                }
            }
            // Conway compatibility: the preferred root is always taken.
            let cof = (b as u64 - 1) / (s as u64 - 1);
            assert_eq!(map[small.alpha() as usize], big.exp(cof), "GF({s}) in GF({b})");
        }
        let f4 = Field::gf(4).unwrap();
        let f8 = Field::gf(8).unwrap();
        assert!(f4.embedding_into(&f8).is_err());
    }
}
