use alloc::vec;
use alloc::vec::Vec;

use crate::fieldkit::{Field, FieldElement, Matrix};

/// Visit every linear combination `Σ u_j row_j`, passing the combination's
/// index `Σ u_j q^j` (digits are field-element indices) and the word.
pub fn for_each_combination<F: FnMut(usize, &[FieldElement])>(field: &Field, rows: &Matrix, mut visit: F) {
    let q = field.q();
    let k = rows.rows();
    let n = rows.cols();
    let total = q.pow(k as u32);
    // step[a] is the coefficient change when a digit moves from a to a + 1.
    let step: Vec<FieldElement> = (0..q).map(|a| field.sub(((a + 1) % q) as FieldElement, a as FieldElement)).collect();
    let mut digits = vec![0usize; k];
    let mut word = vec![0 as FieldElement; n];
    for idx in 0..total {
        visit(idx, &word);
        for (j, d) in digits.iter_mut().enumerate() {
            let c = step[*d];
            for (w, &r) in word.iter_mut().zip(rows.row(j)) {
                *w = field.add(*w, field.mul(c, r));
            }
            *d = (*d + 1) % q;
            if *d != 0 {
                break;
            }
        }
    }
}

fn pack_rows(rows: &Matrix) -> (usize, Vec<Vec<u64>>) {
    let words = rows.cols().div_ceil(64).max(1);
    let packed = (0..rows.rows())
        .map(|i| {
            let mut v = vec![0u64; words];
            for (j, &x) in rows.row(i).iter().enumerate() {
                if x != 0 {
                    v[j / 64] |= 1 << (j % 64);
                }
            }
            v
        })
        .collect();
    (words, packed)
}

/// Weight of every combination of `rows`, indexed as in
/// [`for_each_combination`].
pub fn row_space_weights(field: &Field, rows: &Matrix) -> Vec<u16> {
    let k = rows.rows();
    if field.is_binary() {
        let (nw, packed) = pack_rows(rows);
        let total = 1usize << k;
        let mut out = vec![0u16; total];
        let mut acc = vec![0u64; nw];
        for i in 1..total {
            let bit = i.trailing_zeros() as usize;
            for (a, r) in acc.iter_mut().zip(&packed[bit]) {
                *a ^= r;
            }
            let gray = i ^ (i >> 1);
            out[gray] = acc.iter().map(|w| w.count_ones()).sum::<u32>() as u16;
        }
        return out;
    }
    let mut out = vec![0u16; field.q().pow(k as u32)];
    for_each_combination(field, rows, |idx, w| {
        out[idx] = w.iter().filter(|&&x| x != 0).count() as u16;
    });
    out
}

/// Number of combinations of `rows` of each weight `0..=n`.
pub fn row_space_weight_counts(field: &Field, rows: &Matrix) -> Vec<u64> {
    let n = rows.cols();
    let mut counts = vec![0u64; n + 1];
    if field.is_binary() {
        let (nw, packed) = pack_rows(rows);
        let mut acc = vec![0u64; nw];
        counts[0] = 1;
        for i in 1..(1usize << rows.rows()) {
            let bit = i.trailing_zeros() as usize;
            for (a, r) in acc.iter_mut().zip(&packed[bit]) {
                *a ^= r;
            }
            counts[acc.iter().map(|w| w.count_ones()).sum::<u32>() as usize] += 1;
        }
        return counts;
    }
    // Track the weight incrementally instead of recounting each word.
    let q = field.q();
    let k = rows.rows();
    let step: Vec<FieldElement> = (0..q).map(|a| field.sub(((a + 1) % q) as FieldElement, a as FieldElement)).collect();
    let mut digits = vec![0usize; k];
    let mut word = vec![0 as FieldElement; n];
    let mut weight = 0usize;
    for _ in 0..q.pow(k as u32) {
        counts[weight] += 1;
        for (j, d) in digits.iter_mut().enumerate() {
            let c = step[*d];
            for (w, &r) in word.iter_mut().zip(rows.row(j)) {
                if r == 0 {
                    continue;
                }
                let before = *w != 0;
                *w = field.add(*w, field.mul(c, r));
                let after = *w != 0;
                if before != after {
                    if after {
                        weight += 1;
                    } else {
                        weight -= 1;
                    }
                }
            }
            *d = (*d + 1) % q;
            if *d != 0 {
                break;
            }
        }
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indices_match_digit_encoding() {
        let f = Field::gf(3).unwrap();
        let rows = Matrix::from_rows(3, &[vec![1, 2, 0], vec![0, 1, 1]]);
        for_each_combination(&f, &rows, |idx, w| {
            let u = [(idx % 3) as u8, (idx / 3) as u8];
            assert_eq!(w, rows.left_mul(&u, &f).as_slice());
        });
    }

    #[test]
    fn binary_gray_code_indices() {
        let f = Field::gf(2).unwrap();
        let rows = Matrix::from_rows(4, &[vec![1, 1, 0, 0], vec![0, 1, 1, 1], vec![1, 0, 0, 1]]);
        let fast = row_space_weights(&f, &rows);
        for (idx, &w) in fast.iter().enumerate() {
            let u: Vec<u8> = (0..3).map(|j| ((idx >> j) & 1) as u8).collect();
            let word = rows.left_mul(&u, &f);
            assert_eq!(w as usize, word.iter().filter(|&&x| x != 0).count());
        }
    }

    #[test]
    fn incremental_counts_agree_with_direct() {
        let f = Field::gf(4).unwrap();
        let rows = Matrix::from_rows(5, &[vec![1, 2, 3, 0, 1], vec![0, 1, 1, 3, 2], vec![2, 0, 1, 1, 1]]);
        let mut direct = vec![0u64; 6];
        for_each_combination(&f, &rows, |_, w| direct[w.iter().filter(|&&x| x != 0).count()] += 1);
        assert_eq!(row_space_weight_counts(&f, &rows), direct);
    }
}
