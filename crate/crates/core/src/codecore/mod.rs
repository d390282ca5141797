//! Block codes over GF(q): linear (generator and parity matrices) or
//! explicit (sorted codeword list), plus the standard transformations.

mod builders;
mod enumerate;
mod space;
mod transform;

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

pub use builders::{
    cyclic_code, extension_coordinates, golay_binary, golay_ternary, hamming_parity, repetition, simplex_columns,
    ExtensionBasis,
};
pub use enumerate::{for_each_combination, row_space_weight_counts, row_space_weights};
pub use space::{SyndromeSpace, VectorSpace, UNREACHED};
pub use transform::{kronecker_parity, union_with_cover};

use crate::error::{domain, format_err, Error, Result};
use crate::fieldkit::{krawtchouk_int, Field, FieldElement, Matrix};
use crate::guards::{pow_sat, Guards};

/// Something noteworthy that happened while building a code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodeNote {
    /// The supplied parity-check matrix had dependent rows; `dropped` of
    /// them were discarded.
    RankDeficientParity { dropped: usize },
    /// A transformation mapped distinct codewords to the same word.
    Collapsed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Repr {
    Linear { generator: Matrix, parity: Matrix },
    Explicit { words: Vec<Vec<FieldElement>> },
}

/// A block code of length `n` over a finite field.
#[derive(Debug, Clone)]
pub struct Code {
    field: Field,
    n: usize,
    repr: Repr,
    notes: Vec<CodeNote>,
}

/// Counts `A_0..A_n` of codewords by Hamming weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightDistribution {
    pub counts: Vec<BigUint>,
}

impl WeightDistribution {
    pub fn n(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn get(&self, w: usize) -> &BigUint {
        &self.counts[w]
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// Weights `w > 0` with `A_w > 0`.
    pub fn nonzero_weights(&self) -> Vec<usize> {
        (1..self.counts.len()).filter(|&w| !self.counts[w].is_zero()).collect()
    }

    /// Counts as `u64`, when they all fit.
    pub fn to_u64(&self) -> Option<Vec<u64>> {
        self.counts.iter().map(|c| c.to_u64()).collect()
    }

    pub fn from_u64(counts: &[u64]) -> Self {
        WeightDistribution { counts: counts.iter().map(|&c| BigUint::from(c)).collect() }
    }

    /// MacWilliams transform: the weight distribution of the dual of a
    /// linear code with this distribution, or the dual distance
    /// distribution scaled so that the entries are those of
    /// `(1/|C|) Σ_i A_i P_k(n, i)` when they are integral.
    pub fn macwilliams(&self, q: u32) -> Result<WeightDistribution> {
        let n = self.n() as u32;
        let total = BigInt::from(self.total());
        let mut out = Vec::with_capacity(self.counts.len());
        for k in 0..=n {
            let mut acc = BigInt::zero();
            for (i, a) in self.counts.iter().enumerate() {
                if !a.is_zero() {
                    acc += BigInt::from(a.clone()) * krawtchouk_int(k, n, i as u32, q);
                }
            }
            if (&acc % &total) != BigInt::zero() || acc < BigInt::zero() {
                return Err(Error::Inconsistent(format!(
                    "MacWilliams transform is not a nonnegative integer at k = {k}"
                )));
            }
            out.push((acc / &total).to_biguint().expect("nonnegative"));
        }
        Ok(WeightDistribution { counts: out })
    }
}

pub(crate) fn hamming_weight(v: &[FieldElement]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

pub(crate) fn hamming_distance(a: &[FieldElement], b: &[FieldElement]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

fn check_entries(field: &Field, rows: &[Vec<FieldElement>], n: usize) -> Result<()> {
    for (i, r) in rows.iter().enumerate() {
        if r.len() != n {
            return Err(format_err(format!("row {i} has length {} but expected {n}", r.len())));
        }
        if let Some(&bad) = r.iter().find(|&&x| x as usize >= field.q()) {
            return Err(format_err(format!("row {i} has entry {bad} outside GF({})", field.q())));
        }
    }
    Ok(())
}

impl Code {
    /// Linear code `{x : H x^T = 0}`. Dependent rows of `H` are dropped and
    /// reported through [`Code::notes`].
    pub fn from_parity_check(field: &Field, n: usize, h: &[Vec<FieldElement>]) -> Result<Code> {
        check_entries(field, h, n)?;
        let mut parity = Matrix::from_rows(n, h);
        parity.rref(field);
        let mut notes = Vec::new();
        if parity.rows() < h.len() {
            notes.push(CodeNote::RankDeficientParity { dropped: h.len() - parity.rows() });
        }
        let generator = parity.nullspace(field);
        Ok(Code { field: field.clone(), n, repr: Repr::Linear { generator, parity }, notes })
    }

    /// Linear code spanned by the rows of `g`.
    pub fn from_generator(field: &Field, n: usize, g: &[Vec<FieldElement>]) -> Result<Code> {
        check_entries(field, g, n)?;
        let mut generator = Matrix::from_rows(n, g);
        generator.rref(field);
        let parity = generator.nullspace(field);
        Ok(Code { field: field.clone(), n, repr: Repr::Linear { generator, parity }, notes: Vec::new() })
    }

    /// Explicit code from a list of words; duplicates are removed.
    pub fn from_codewords(field: &Field, n: usize, words: Vec<Vec<FieldElement>>) -> Result<Code> {
        check_entries(field, &words, n)?;
        if words.is_empty() {
            return Err(Error::EmptyCode);
        }
        let mut words = words;
        words.sort();
        words.dedup();
        Ok(Code { field: field.clone(), n, repr: Repr::Explicit { words }, notes: Vec::new() })
    }

    pub(crate) fn with_note(mut self, note: CodeNote) -> Code {
        if !self.notes.contains(&note) {
            self.notes.push(note);
        }
        self
    }

    pub(crate) fn with_notes(mut self, notes: &[CodeNote]) -> Code {
        for n in notes {
            self = self.with_note(n.clone());
        }
        self
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> usize {
        self.field.q()
    }

    pub fn notes(&self) -> &[CodeNote] {
        &self.notes
    }

    pub fn is_linear(&self) -> bool {
        matches!(self.repr, Repr::Linear { .. })
    }

    /// Dimension `k` of a linear code.
    pub fn dimension(&self) -> Option<usize> {
        match &self.repr {
            Repr::Linear { generator, .. } => Some(generator.rows()),
            Repr::Explicit { .. } => None,
        }
    }

    /// Redundancy `n - k` of a linear code.
    pub fn redundancy(&self) -> Option<usize> {
        self.dimension().map(|k| self.n - k)
    }

    /// Generator matrix in reduced row echelon form.
    pub fn generator(&self) -> Option<&Matrix> {
        match &self.repr {
            Repr::Linear { generator, .. } => Some(generator),
            Repr::Explicit { .. } => None,
        }
    }

    /// Parity-check matrix in reduced row echelon form (full row rank).
    pub fn parity(&self) -> Option<&Matrix> {
        match &self.repr {
            Repr::Linear { parity, .. } => Some(parity),
            Repr::Explicit { .. } => None,
        }
    }

    /// Number of codewords `M`.
    pub fn size(&self) -> BigUint {
        match &self.repr {
            Repr::Linear { generator, .. } => BigUint::from(self.q()).pow(generator.rows() as u32),
            Repr::Explicit { words } => BigUint::from(words.len()),
        }
    }

    /// Number of codewords as `u128`, if it fits.
    pub fn size_u128(&self) -> Option<u128> {
        match &self.repr {
            Repr::Linear { generator, .. } => (self.q() as u128).checked_pow(generator.rows() as u32),
            Repr::Explicit { words } => Some(words.len() as u128),
        }
    }

    /// Explicit codewords of an explicit code, without enumeration.
    pub fn explicit_words(&self) -> Option<&[Vec<FieldElement>]> {
        match &self.repr {
            Repr::Explicit { words } => Some(words),
            Repr::Linear { .. } => None,
        }
    }

    /// All codewords, sorted. Linear codes are enumerated subject to the
    /// codeword guard.
    pub fn codewords(&self, guards: &Guards) -> Result<Vec<Vec<FieldElement>>> {
        match &self.repr {
            Repr::Explicit { words } => Ok(words.clone()),
            Repr::Linear { generator, .. } => {
                guards.codewords(pow_sat(self.q() as u64, generator.rows() as u64))?;
                let mut out = Vec::new();
                for_each_combination(&self.field, generator, |_, w| out.push(w.to_vec()));
                out.sort();
                Ok(out)
            }
        }
    }

    pub fn contains(&self, v: &[FieldElement]) -> bool {
        if v.len() != self.n {
            return false;
        }
        match &self.repr {
            Repr::Explicit { words } => words.binary_search(&v.to_vec()).is_ok(),
            Repr::Linear { parity, .. } => parity.mul_vec(v, &self.field).iter().all(|&x| x == 0),
        }
    }

    /// The same code stored as an explicit codeword list.
    pub fn to_explicit(&self, guards: &Guards) -> Result<Code> {
        let words = self.codewords(guards)?;
        Ok(Code { field: self.field.clone(), n: self.n, repr: Repr::Explicit { words }, notes: self.notes.clone() })
    }

    /// If the explicit word list happens to be a linear space, the same
    /// code as a linear code.
    pub fn to_linear_if_possible(&self) -> Option<Code> {
        match &self.repr {
            Repr::Linear { .. } => Some(self.clone()),
            Repr::Explicit { words } => {
                let mut g = Matrix::from_rows(self.n, words);
                g.rref(&self.field);
                let size = (self.q() as u128).checked_pow(g.rows() as u32)?;
                // The words lie in their span, so they are linear exactly
                // when they fill it.
                if size != words.len() as u128 {
                    return None;
                }
                let code = Code::from_generator(&self.field, self.n, &g.row_vecs()).ok()?;
                Some(code.with_notes(&self.notes))
            }
        }
    }

    /// Dual code of a linear code.
    pub fn dual(&self) -> Result<Code> {
        match &self.repr {
            Repr::Linear { generator, parity } => Ok(Code {
                field: self.field.clone(),
                n: self.n,
                repr: Repr::Linear { generator: parity.clone(), parity: generator.clone() },
                notes: Vec::new(),
            }),
            Repr::Explicit { .. } => Err(domain("the dual is only defined for linear codes")),
        }
    }

    /// Set equality of two codes over the same field.
    pub fn same_set(&self, other: &Code, guards: &Guards) -> Result<bool> {
        if self.field != other.field || self.n != other.n {
            return Ok(false);
        }
        match (&self.repr, &other.repr) {
            (Repr::Linear { generator: a, .. }, Repr::Linear { generator: b, .. }) => Ok(a == b),
            _ => {
                if self.size() != other.size() {
                    return Ok(false);
                }
                Ok(self.codewords(guards)? == other.codewords(guards)?)
            }
        }
    }

    /// Weight distribution. Linear codes use whichever of the code and its
    /// dual is smaller, going through MacWilliams for the dual route.
    pub fn weight_distribution(&self, guards: &Guards) -> Result<WeightDistribution> {
        match &self.repr {
            Repr::Explicit { words } => {
                let mut counts = vec![0u64; self.n + 1];
                for w in words {
                    counts[hamming_weight(w)] += 1;
                }
                Ok(WeightDistribution::from_u64(&counts))
            }
            Repr::Linear { generator, parity } => {
                let q = self.q() as u64;
                if generator.rows() <= parity.rows() {
                    guards.codewords(pow_sat(q, generator.rows() as u64))?;
                    Ok(WeightDistribution::from_u64(&row_space_weight_counts(&self.field, generator)))
                } else {
                    guards.syndromes(pow_sat(q, parity.rows() as u64))?;
                    let dual = WeightDistribution::from_u64(&row_space_weight_counts(&self.field, parity));
                    dual.macwilliams(q as u32)
                }
            }
        }
    }

    /// Minimum distance. For explicit codes this is the minimum over all
    /// pairs; a code with a single word has distance `n + 1` by convention.
    pub fn minimum_distance(&self, guards: &Guards) -> Result<usize> {
        match &self.repr {
            Repr::Linear { .. } => {
                let wd = self.weight_distribution(guards)?;
                Ok(wd.nonzero_weights().first().copied().unwrap_or(self.n + 1))
            }
            Repr::Explicit { words } => {
                let m = words.len() as u128;
                guards.count_ops(m * m / 2)?;
                let mut best = self.n + 1;
                for (i, a) in words.iter().enumerate() {
                    for b in &words[i + 1..] {
                        best = best.min(hamming_distance(a, b));
                    }
                }
                Ok(best)
            }
        }
    }

    /// Covering radius: coset-leader search over syndromes for linear codes,
    /// multi-source breadth-first search over the whole space otherwise.
    pub fn covering_radius(&self, guards: &Guards) -> Result<usize> {
        let labels = match &self.repr {
            Repr::Linear { .. } => SyndromeSpace::new(self, guards)?.leader_weights(),
            Repr::Explicit { words } => VectorSpace::new(&self.field, self.n, guards)?.distances(words),
        };
        Ok(labels.iter().copied().max().unwrap_or(0) as usize)
    }

    /// Syndrome `H x^T` as a vector.
    pub fn syndrome(&self, x: &[FieldElement]) -> Result<Vec<FieldElement>> {
        let h = self.parity().ok_or_else(|| domain("syndromes need a linear code"))?;
        Ok(h.mul_vec(x, &self.field))
    }
}

impl PartialEq for Code {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.n == other.n && self.repr == other.repr
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g2() -> Field {
        Field::gf(2).unwrap()
    }

    #[test]
    fn even_weight_code_from_single_parity_row() {
        let c = Code::from_parity_check(&g2(), 3, &[vec![1, 1, 1]]).unwrap();
        assert_eq!(c.dimension(), Some(2));
        let g = Guards::default();
        assert_eq!(c.minimum_distance(&g).unwrap(), 2);
        assert_eq!(c.covering_radius(&g).unwrap(), 1);
    }

    #[test]
    fn hamming_weight_distribution_by_enumeration() {
        let f = g2();
        let h = hamming_parity(&f, 3).unwrap();
        let c = Code::from_parity_check(&f, 7, &h).unwrap();
        assert_eq!(c.size(), BigUint::from(16u32));
        let wd = c.weight_distribution(&Guards::default()).unwrap();
        assert_eq!(wd.to_u64().unwrap(), vec![1, 0, 0, 7, 7, 0, 0, 1]);
        // Independent oracle: brute force over all 2^7 vectors.
        let mut counts = [0u64; 8];
        for x in 0..128u32 {
            let v: Vec<u8> = (0..7).map(|i| ((x >> i) & 1) as u8).collect();
            if c.contains(&v) {
                counts[v.iter().filter(|&&b| b == 1).count()] += 1;
            }
        }
        assert_eq!(counts.to_vec(), wd.to_u64().unwrap());
    }

    #[test]
    fn repetition_code_distance() {
        let f = g2();
        let c = Code::from_codewords(&f, 3, vec![vec![0, 0, 0], vec![1, 1, 1]]).unwrap();
        let g = Guards::default();
        assert_eq!(c.minimum_distance(&g).unwrap(), 3);
        assert_eq!(c.covering_radius(&g).unwrap(), 1);
    }

    #[test]
    fn golay_codes_are_perfect() {
        let g = Guards::default();
        let golay = golay_binary().unwrap();
        assert_eq!(golay.weight_distribution(&g).unwrap().counts[7], BigUint::from(253u32));
        assert_eq!(golay.minimum_distance(&g).unwrap(), 7);
        assert_eq!(golay.covering_radius(&g).unwrap(), 3);
        let t = golay_ternary().unwrap();
        assert_eq!(t.minimum_distance(&g).unwrap(), 5);
        assert_eq!(t.covering_radius(&g).unwrap(), 2);
    }

    #[test]
    fn dual_route_matches_direct_enumeration() {
        let g = Guards::default();
        let golay = golay_binary().unwrap();
        let direct = WeightDistribution::from_u64(&row_space_weight_counts(golay.field(), golay.generator().unwrap()));
        let via_dual = WeightDistribution::from_u64(&row_space_weight_counts(golay.field(), golay.parity().unwrap()))
            .macwilliams(2)
            .unwrap();
        assert_eq!(direct, via_dual);
        assert_eq!(golay.weight_distribution(&g).unwrap(), direct);
    }

    #[test]
    fn hamming_dual_is_simplex() {
        let f = g2();
        let c = Code::from_parity_check(&f, 7, &hamming_parity(&f, 3).unwrap()).unwrap();
        let d = c.dual().unwrap();
        assert_eq!(d.dimension(), Some(3));
        assert_eq!(d.weight_distribution(&Guards::default()).unwrap().nonzero_weights(), vec![4]);
        assert_eq!(d.dual().unwrap(), c);
    }

    #[test]
    fn full_space_has_trivial_dual() {
        let f = Field::gf(3).unwrap();
        let c = Code::from_generator(&f, 3, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(c.dual().unwrap().dimension(), Some(0));
        assert_eq!(c.covering_radius(&Guards::default()).unwrap(), 0);
    }

    #[test]
    fn format_errors() {
        let f = g2();
        assert!(matches!(Code::from_parity_check(&f, 3, &[vec![1, 1]]), Err(Error::Format(_))));
        assert!(matches!(Code::from_codewords(&f, 2, vec![vec![0, 2]]), Err(Error::Format(_))));
        assert!(matches!(Code::from_codewords(&f, 2, vec![]), Err(Error::EmptyCode)));
    }

    #[test]
    fn rank_deficient_parity_is_reported() {
        let f = g2();
        let c = Code::from_parity_check(&f, 3, &[vec![1, 1, 0], vec![1, 1, 0]]).unwrap();
        assert_eq!(c.notes(), &[CodeNote::RankDeficientParity { dropped: 1 }]);
        assert_eq!(c.dimension(), Some(2));
    }

    #[test]
    fn syndrome_bfs_matches_full_scan() {
        let g = Guards::default();
        for q in [2u32, 3, 4] {
            let f = Field::gf(q).unwrap();
            let h = hamming_parity(&f, 2).unwrap();
            let c = Code::from_parity_check(&f, h[0].len(), &h).unwrap();
            let e = c.to_explicit(&g).unwrap();
            assert_eq!(c.covering_radius(&g).unwrap(), e.covering_radius(&g).unwrap());
        }
    }
}
