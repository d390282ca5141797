use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::Code;
use crate::error::{domain, Error, Result};
use crate::fieldkit::{Field, FieldElement, Poly};

/// All nonzero vectors of `F_q^m` whose last nonzero coordinate is 1, in
/// increasing index order. These are the columns of the q-ary Hamming
/// parity-check matrix (one per projective point).
pub fn simplex_columns(field: &Field, m: usize) -> Vec<Vec<FieldElement>> {
    let q = field.q();
    let mut out = Vec::new();
    for idx in 1..q.pow(m as u32) {
        let mut v = Vec::with_capacity(m);
        let mut x = idx;
        for _ in 0..m {
            v.push((x % q) as FieldElement);
            x /= q;
        }
        if v.iter().rev().find(|&&d| d != 0) == Some(&1) {
            out.push(v);
        }
    }
    out
}

/// Parity-check matrix (as rows) of the q-ary Hamming code with `m`
/// check symbols, length `(q^m - 1)/(q - 1)`.
pub fn hamming_parity(field: &Field, m: usize) -> Result<Vec<Vec<FieldElement>>> {
    if m == 0 {
        return Err(domain("Hamming code needs m >= 1"));
    }
    let cols = simplex_columns(field, m);
    Ok((0..m).map(|i| cols.iter().map(|c| c[i]).collect()).collect())
}

/// Repetition code `{(a, ..., a)}`.
pub fn repetition(field: &Field, n: usize) -> Result<Code> {
    Code::from_generator(field, n, &[vec![1; n]])
}

/// Cyclic code of length `n` with generator polynomial `g`, which must
/// divide `x^n - 1`.
pub fn cyclic_code(field: &Field, n: usize, g: &Poly) -> Result<Code> {
    let deg = g.degree().ok_or_else(|| domain("zero generator polynomial"))?;
    if deg > n {
        return Err(domain("generator polynomial degree exceeds the length"));
    }
    let mut xn = vec![0; n + 1];
    xn[0] = field.neg(1);
    xn[n] = 1;
    let (_, rem) = Poly::new(xn).div_rem(g, field);
    if !rem.is_zero() {
        return Err(domain(format!("generator polynomial does not divide x^{n} - 1")));
    }
    let rows: Vec<Vec<FieldElement>> = (0..n - deg)
        .map(|shift| {
            let mut r = vec![0; n];
            for (i, &c) in g.coeffs.iter().enumerate() {
                r[shift + i] = c;
            }
            r
        })
        .collect();
    if rows.is_empty() {
        return Code::from_generator(field, n, &[]);
    }
    Code::from_generator(field, n, &rows)
}

/// Binary Golay [23,12,7] code, generator `x^11+x^10+x^6+x^5+x^4+x^2+1`.
pub fn golay_binary() -> Result<Code> {
    let f = Field::gf(2)?;
    cyclic_code(&f, 23, &Poly::new(vec![1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1]))
}

/// Ternary Golay [11,6,5] code, generator `x^5+x^4-x^3+x^2-1`.
pub fn golay_ternary() -> Result<Code> {
    let f = Field::gf(3)?;
    cyclic_code(&f, 11, &Poly::new(vec![2, 0, 1, 2, 1, 1]))
}

/// Coordinates of the elements of GF(Q) over a subfield GF(q) in the basis
/// `1, a, ..., a^(m-1)` with `a` the primitive element of GF(Q).
#[derive(Debug, Clone)]
pub struct ExtensionBasis {
    degree: usize,
    coords: Vec<Vec<FieldElement>>,
    embed: Vec<FieldElement>,
}

impl ExtensionBasis {
    /// Degree `m` of the extension.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coordinates of `x` over the subfield.
    pub fn coords(&self, x: FieldElement) -> &[FieldElement] {
        &self.coords[x as usize]
    }

    /// Image of a subfield element.
    pub fn embed(&self, a: FieldElement) -> FieldElement {
        self.embed[a as usize]
    }

    /// Matrix over the subfield whose column `i` holds the coordinates of
    /// `xs[i]`.
    pub fn expand_columns(&self, xs: &[FieldElement]) -> Vec<Vec<FieldElement>> {
        (0..self.degree).map(|j| xs.iter().map(|&x| self.coords[x as usize][j]).collect()).collect()
    }
}

/// Build the coordinate table of `big` over `small`.
pub fn extension_coordinates(small: &Field, big: &Field) -> Result<ExtensionBasis> {
    let embed = small.embedding_into(big)?;
    let m = big.r() / small.r();
    let q = small.q();
    let mut basis = Vec::with_capacity(m);
    let mut acc: FieldElement = 1;
    for _ in 0..m {
        basis.push(acc);
        acc = big.mul(acc, big.alpha());
    }
    let mut coords = vec![Vec::new(); big.q()];
    let mut filled = 0;
    for idx in 0..q.pow(m as u32) {
        let mut c = Vec::with_capacity(m);
        let mut x = idx;
        for _ in 0..m {
            c.push((x % q) as FieldElement);
            x /= q;
        }
        let val = c.iter().zip(&basis).fold(0, |s, (&ci, &b)| big.add(s, big.mul(embed[ci as usize], b)));
        if coords[val as usize].is_empty() {
            filled += 1;
        }
        coords[val as usize] = c;
    }
    if filled != big.q() {
        return Err(Error::Inconsistent("powers of the primitive element are not a basis".into()));
    }
    Ok(ExtensionBasis { degree: m, coords, embed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Guards;
    use num_bigint::BigUint;

    #[test]
    fn golay_codes_meet_sphere_packing_bound() {
        let g = Guards::default();
        let b = golay_binary().unwrap();
        assert_eq!(b.dimension(), Some(12));
        assert_eq!(b.minimum_distance(&g).unwrap(), 7);
        // 2^12 (1 + 23 + 253 + 1771) = 2^23.
        let ball: u64 = 1 + 23 + 253 + 1771;
        assert_eq!(b.size() * BigUint::from(ball), BigUint::from(2u32).pow(23));
        let t = golay_ternary().unwrap();
        assert_eq!(t.dimension(), Some(6));
        assert_eq!(t.minimum_distance(&g).unwrap(), 5);
        // 3^6 (1 + 2*11 + 4*55) = 3^11.
        assert_eq!(t.size() * BigUint::from(243u32), BigUint::from(3u32).pow(11));
    }

    #[test]
    fn hamming_lengths() {
        for (q, m, n) in [(2u32, 3usize, 7usize), (3, 2, 4), (4, 2, 5), (2, 4, 15), (5, 2, 6)] {
            let f = Field::gf(q).unwrap();
            let h = hamming_parity(&f, m).unwrap();
            assert_eq!(h[0].len(), n);
            let c = Code::from_parity_check(&f, n, &h).unwrap();
            assert_eq!(c.minimum_distance(&Guards::default()).unwrap(), 3);
        }
    }

    #[test]
    fn extension_coordinates_are_additive() {
        let small = Field::gf(2).unwrap();
        let big = Field::gf(16).unwrap();
        let b = extension_coordinates(&small, &big).unwrap();
        for x in big.elements() {
            for y in big.elements() {
                let s: Vec<u8> = b.coords(x).iter().zip(b.coords(y)).map(|(&u, &v)| small.add(u, v)).collect();
                assert_eq!(s, b.coords(big.add(x, y)));
            }
        }
    }

    #[test]
    fn cyclic_code_rejects_non_divisor() {
        let f = Field::gf(2).unwrap();
        assert!(cyclic_code(&f, 7, &Poly::new(vec![1, 1, 1])).is_err());
    }
}
