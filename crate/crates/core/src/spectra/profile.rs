use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::partition::{DistancePartition, Mode};
use crate::codecore::{row_space_weights, Code, SyndromeSpace, VectorSpace};
use crate::error::{Error, Result};
use crate::fieldkit::{FieldElement, KrawtchoukTable};
use crate::guards::Guards;

/// One distinct row `B_x` of the outer distribution matrix.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ProfileRow {
    /// Distance `d(x, C)` shared by every `x` with this row.
    pub label: usize,
    /// `B_(x,0), ..., B_(x,n)`.
    pub b: Vec<BigInt>,
    /// Number of syndromes (or vectors) having this row.
    pub multiplicity: u64,
}

/// The distinct rows of the outer distribution matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OuterProfile {
    pub mode: Mode,
    /// Sorted by label, then by row.
    pub rows: Vec<ProfileRow>,
}

impl OuterProfile {
    /// `b`, one less than the number of distinct rows.
    pub fn b(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows_with_label(&self, l: usize) -> impl Iterator<Item = &ProfileRow> {
        self.rows.iter().filter(move |r| r.label == l)
    }

    /// Largest `t` such that every cell `l <= t` has a single row; `None`
    /// when the code is not even distance invariant.
    pub fn t_regularity_degree(&self) -> Option<usize> {
        let rho = self.rows.iter().map(|r| r.label).max().unwrap_or(0);
        let mut t = None;
        for l in 0..=rho {
            if self.rows_with_label(l).count() != 1 {
                break;
            }
            t = Some(l);
        }
        t
    }
}

fn first_nonzero(b: &[BigInt]) -> Option<usize> {
    b.iter().position(|x| !x.is_zero())
}

fn walsh_hadamard(a: &mut [i64]) {
    let mut h = 1;
    while h < a.len() {
        for i in (0..a.len()).step_by(2 * h) {
            for j in i..i + h {
                let (x, y) = (a[j], a[j + h]);
                a[j] = x + y;
                a[j + h] = x - y;
            }
        }
        h *= 2;
    }
}

/// Dual-code data used by the syndrome-mode profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualSpectrum {
    /// Number of dual codewords of each weight `0..=n`.
    pub counts: Vec<u64>,
}

impl DualSpectrum {
    /// External distance of a linear code: number of nonzero dual weights.
    pub fn external_distance(&self) -> usize {
        self.counts.iter().skip(1).filter(|&&c| c > 0).count()
    }
}

/// Outer profile of a linear code in syndrome mode, computed from the
/// dual code by character sums.
///
/// For the coset with syndrome `s`, `B_(x,i) = q^-(n-k) Σ_w S_w(s) P_i(n,w)`
/// where `S_w(s)` sums an additive character of `<u, s>` over the dual
/// words `uH` of weight `w`. Characteristic 2 uses one Walsh-Hadamard
/// transform per dual weight (the trace form turns the character into a
/// bit parity); odd characteristic counts `u ⊥ s` directly, which is
/// quadratic in the number of syndromes.
pub fn syndrome_profile(
    code: &Code,
    space: &SyndromeSpace,
    partition: &DistancePartition,
    guards: &Guards,
) -> Result<(OuterProfile, DualSpectrum)> {
    let field = code.field();
    let h = code.parity().expect("linear code");
    let n = code.n();
    let q = field.q();
    let v = space.size();
    let r = space.redundancy();
    let wts = row_space_weights(field, h);
    let mut counts = vec![0u64; n + 1];
    for &w in &wts {
        counts[w as usize] += 1;
    }
    let weights: Vec<usize> = (0..=n).filter(|&w| counts[w] > 0).collect();
    let nw = weights.len();
    guards.count_ops((v as u128) * nw as u128)?;

    let mut sums = vec![0i64; v * nw];
    if field.p() == 2 {
        // v(s) with <u, v(s)> (bitwise) = Tr(u . s).
        let bits = field.r();
        let tmap: Vec<usize> = field
            .elements()
            .map(|e| (0..bits).map(|k| (field.trace(field.mul(1 << k, e)) as usize) << k).sum())
            .collect();
        let vmap: Vec<usize> = (0..v)
            .map(|s| {
                let digits = space.vector_of(s as u32);
                digits.iter().rev().fold(0, |acc, &d| acc * q + tmap[d as usize])
            })
            .collect();
        let mut buf = vec![0i64; v];
        for (k, &w) in weights.iter().enumerate() {
            for (b, &x) in buf.iter_mut().zip(&wts) {
                *b = (x as usize == w) as i64;
            }
            walsh_hadamard(&mut buf);
            for s in 0..v {
                sums[s * nw + k] = buf[vmap[s]];
            }
        }
    } else {
        guards.quadratic(v as u128)?;
        let slot: Vec<usize> = {
            let mut m = vec![usize::MAX; n + 1];
            for (k, &w) in weights.iter().enumerate() {
                m[w] = k;
            }
            m
        };
        let vecs: Vec<Vec<FieldElement>> = (0..v).map(|i| space.vector_of(i as u32)).collect();
        let mut zeros = vec![0i64; nw];
        for s in 0..v {
            zeros.iter_mut().for_each(|z| *z = 0);
            let sv = &vecs[s];
            for (u, uv) in vecs.iter().enumerate() {
                let dot = uv.iter().zip(sv).fold(0, |acc, (&a, &b)| field.add(acc, field.mul(a, b)));
                if dot == 0 {
                    zeros[slot[wts[u] as usize]] += 1;
                }
            }
            for k in 0..nw {
                let total = counts[weights[k]] as i64;
                sums[s * nw + k] = (q as i64 * zeros[k] - total) / (q as i64 - 1);
            }
        }
    }

    // Deduplicate character-sum vectors; each class is one profile row.
    let mut classes: BTreeMap<&[i64], (u64, usize)> = BTreeMap::new();
    for s in 0..v {
        let key = &sums[s * nw..(s + 1) * nw];
        let e = classes.entry(key).or_insert((0, s));
        e.0 += 1;
        if partition.labels[e.1] != partition.labels[s] {
            return Err(Error::Inconsistent(format!(
                "syndromes {} and {s} share a profile row but lie at distances {} and {}",
                e.1, partition.labels[e.1], partition.labels[s]
            )));
        }
    }
    let table = KrawtchoukTable::new(n as u32, q as u32);
    let denom = BigInt::from(q).pow(r as u32);
    let mut rows = Vec::with_capacity(classes.len());
    for (key, (mult, rep)) in classes {
        let mut b = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut acc = BigInt::zero();
            for (k, &w) in weights.iter().enumerate() {
                if key[k] != 0 {
                    acc += table.get(i, w) * key[k];
                }
            }
            if !(&acc % &denom).is_zero() || acc.is_negative() {
                return Err(Error::Inconsistent(format!(
                    "character sum for syndrome {rep} gives a non-integral count at distance {i}"
                )));
            }
            b.push(acc / &denom);
        }
        let label = partition.labels[rep] as usize;
        if first_nonzero(&b) != Some(label) {
            return Err(Error::Inconsistent(format!(
                "profile row of syndrome {rep} starts at {:?} but its coset leader has weight {label}",
                first_nonzero(&b)
            )));
        }
        rows.push(ProfileRow { label, b, multiplicity: mult });
    }
    rows.sort();
    Ok((OuterProfile { mode: Mode::Syndrome, rows }, DualSpectrum { counts }))
}

fn check_label(row: &[u64], label: u8, x: usize) -> Result<()> {
    let first = row.iter().position(|&c| c > 0);
    if first != Some(label as usize) {
        return Err(Error::Inconsistent(format!("vector {x}: distance count says {first:?}, search says {label}")));
    }
    Ok(())
}

/// Outer profile by direct distance counting from every vector of the
/// ambient space to every codeword.
pub fn vector_profile(
    code: &Code,
    space: &VectorSpace,
    partition: &DistancePartition,
    guards: &Guards,
) -> Result<OuterProfile> {
    let words = code.codewords(guards)?;
    let n = code.n();
    let q = code.q();
    guards.pair_ops((space.size() as u128) * words.len() as u128)?;
    let mut classes: BTreeMap<Vec<u64>, (u64, usize)> = BTreeMap::new();
    let mut row = vec![0u64; n + 1];
    if q == 2 && n <= 64 {
        let masks: Vec<u64> = words.iter().map(|w| space.index_of(w) as u64).collect();
        for x in 0..space.size() {
            row.iter_mut().for_each(|c| *c = 0);
            for &m in &masks {
                row[(m ^ x as u64).count_ones() as usize] += 1;
            }
            check_label(&row, partition.labels[x], x)?;
            let e = classes.entry(row.clone()).or_insert((0, x));
            e.0 += 1;
        }
    } else {
        for x in 0..space.size() {
            let xv = space.vector_of(x);
            row.iter_mut().for_each(|c| *c = 0);
            for w in &words {
                row[crate::codecore::hamming_distance(&xv, w)] += 1;
            }
            check_label(&row, partition.labels[x], x)?;
            let e = classes.entry(row.clone()).or_insert((0, x));
            e.0 += 1;
        }
    }
    let mut rows = Vec::with_capacity(classes.len());
    for (b, (mult, rep)) in classes {
        let label = partition.labels[rep] as usize;
        rows.push(ProfileRow { label, b: b.into_iter().map(BigInt::from).collect(), multiplicity: mult });
    }
    rows.sort();
    Ok(OuterProfile { mode: Mode::Vector, rows })
}
