use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{Code, CodeNote};
use crate::error::{domain, Error, Result};
use crate::fieldkit::{Field, FieldElement, Matrix};
use crate::guards::Guards;

fn delete_positions(v: &[FieldElement], positions: &[usize]) -> Vec<FieldElement> {
    v.iter().enumerate().filter(|(i, _)| !positions.contains(i)).map(|(_, &x)| x).collect()
}

/// Whether a set of vectors is a subspace (contains zero, closed under
/// addition and scalar multiplication).
fn is_subspace(field: &Field, set: &[Vec<FieldElement>]) -> bool {
    let members: BTreeSet<&Vec<FieldElement>> = set.iter().collect();
    let len = set.first().map_or(0, |v| v.len());
    if !members.contains(&vec![0; len]) {
        return false;
    }
    for a in set {
        for g in field.units() {
            let scaled: Vec<FieldElement> = a.iter().map(|&x| field.mul(g, x)).collect();
            if !members.contains(&scaled) {
                return false;
            }
        }
        for b in set {
            let sum: Vec<FieldElement> = a.iter().zip(b).map(|(&x, &y)| field.add(x, y)).collect();
            if !members.contains(&sum) {
                return false;
            }
        }
    }
    true
}

impl Code {
    /// Build a linear code from generator rows, flagging a collapse when the
    /// rows turned out dependent.
    fn linear_image(&self, n: usize, rows: Vec<Vec<FieldElement>>) -> Result<Code> {
        let expected = rows.len();
        let code = Code::from_generator(&self.field, n, &rows)?.with_notes(&self.notes);
        Ok(if code.dimension() != Some(expected) { code.with_note(CodeNote::Collapsed) } else { code })
    }

    fn explicit_image(&self, n: usize, words: Vec<Vec<FieldElement>>, before: usize) -> Result<Code> {
        let code = Code::from_codewords(&self.field, n, words)?.with_notes(&self.notes);
        let after = code.explicit_words().map_or(0, |w| w.len());
        Ok(if after < before { code.with_note(CodeNote::Collapsed) } else { code })
    }

    /// Append a symbol making every coordinate sum zero (the parity bit in
    /// the binary case).
    pub fn extend(&self) -> Result<Code> {
        let f = &self.field;
        let ext = |w: &Vec<FieldElement>| {
            let mut v = w.clone();
            let s = w.iter().fold(0, |acc, &x| f.add(acc, x));
            v.push(f.neg(s));
            v
        };
        match (self.generator(), self.explicit_words()) {
            (Some(g), _) => self.linear_image(self.n + 1, g.row_vecs().iter().map(ext).collect()),
            (_, Some(words)) => self.explicit_image(self.n + 1, words.iter().map(ext).collect(), words.len()),
            _ => unreachable!(),
        }
    }

    /// Delete coordinate `i`.
    pub fn puncture(&self, i: usize) -> Result<Code> {
        self.puncture_many(&[i])
    }

    /// Delete several coordinates at once.
    pub fn puncture_many(&self, positions: &[usize]) -> Result<Code> {
        if let Some(&bad) = positions.iter().find(|&&i| i >= self.n) {
            return Err(domain(format!("position {bad} out of range for length {}", self.n)));
        }
        let mut positions = positions.to_vec();
        positions.sort_unstable();
        positions.dedup();
        let n = self.n - positions.len();
        match (self.generator(), self.explicit_words()) {
            (Some(g), _) => {
                let rows = g.row_vecs().iter().map(|r| delete_positions(r, &positions)).collect();
                self.linear_image(n, rows)
            }
            (_, Some(words)) => {
                let out = words.iter().map(|w| delete_positions(w, &positions)).collect();
                self.explicit_image(n, out, words.len())
            }
            _ => unreachable!(),
        }
    }

    /// Keep the codewords with 0 at coordinate `i`, then delete it.
    pub fn shorten(&self, i: usize) -> Result<Code> {
        self.s_shorten(&[vec![0]], &[i], &Guards::default())
    }

    /// Keep the codewords whose restriction to `positions` lies in `set`,
    /// then delete those positions. Linear codes stay linear when `set` is
    /// a subspace; otherwise the result is explicit.
    pub fn s_shorten(&self, set: &[Vec<FieldElement>], positions: &[usize], guards: &Guards) -> Result<Code> {
        let j = positions.len();
        if set.is_empty() || set.iter().any(|s| s.len() != j) {
            return Err(domain("shortening vectors must all match the window length"));
        }
        if positions.iter().any(|&p| p >= self.n) || positions.iter().collect::<BTreeSet<_>>().len() != j {
            return Err(domain("shortening window positions invalid"));
        }
        let n = self.n - j;
        if let (Some(h), true) = (self.parity(), is_subspace(&self.field, set)) {
            // S = {y : A y = 0}; add the rows of A on the window to H.
            let a = Matrix::from_rows(j, set).nullspace(&self.field);
            let mut rows = h.row_vecs();
            for r in 0..a.rows() {
                let mut full = vec![0; self.n];
                for (k, &p) in positions.iter().enumerate() {
                    full[p] = a.get(r, k);
                }
                rows.push(full);
            }
            let sub = Code::from_parity_check(&self.field, self.n, &rows)?;
            let g = sub.generator().expect("linear");
            let mut sorted = positions.to_vec();
            sorted.sort_unstable();
            let out = g.row_vecs().iter().map(|r| delete_positions(r, &sorted)).collect();
            return self.linear_image(n, out);
        }
        let words = self.codewords(guards)?;
        let allowed: BTreeSet<&Vec<FieldElement>> = set.iter().collect();
        let mut sorted = positions.to_vec();
        sorted.sort_unstable();
        let kept: Vec<Vec<FieldElement>> = words
            .iter()
            .filter(|w| {
                let window: Vec<FieldElement> = positions.iter().map(|&p| w[p]).collect();
                allowed.contains(&window)
            })
            .map(|w| delete_positions(w, &sorted))
            .collect();
        let before = kept.len();
        if before == 0 {
            return Err(Error::EmptyCode);
        }
        self.explicit_image(n, kept, before)
    }

    /// Replace coordinate `i` of every codeword by the parity of the word.
    pub fn tau_transform(&self, i: usize) -> Result<Code> {
        if !self.field.is_binary() {
            return Err(domain("the tau transform is defined for binary codes"));
        }
        if i >= self.n {
            return Err(domain(format!("position {i} out of range")));
        }
        let tau = |w: &Vec<FieldElement>| {
            let mut v = w.clone();
            v[i] = w.iter().fold(0, |a, &x| a ^ x);
            v
        };
        match (self.generator(), self.explicit_words()) {
            (Some(g), _) => self.linear_image(self.n, g.row_vecs().iter().map(tau).collect()),
            (_, Some(words)) => self.explicit_image(self.n, words.iter().map(tau).collect(), words.len()),
            _ => unreachable!(),
        }
    }

    /// Direct sum `C_1 ⊕ ... ⊕ C_u` (concatenated coordinate blocks).
    pub fn direct_sum(codes: &[Code], guards: &Guards) -> Result<Code> {
        let first = codes.first().ok_or_else(|| domain("direct sum of no codes"))?;
        if codes.iter().any(|c| c.field != first.field) {
            return Err(domain("direct sum summands are over different fields"));
        }
        let n: usize = codes.iter().map(|c| c.n).sum();
        if codes.iter().all(|c| c.is_linear()) {
            let mut rows = Vec::new();
            let mut offset = 0;
            for c in codes {
                for r in c.generator().expect("linear").row_vecs() {
                    let mut full = vec![0; n];
                    full[offset..offset + c.n].copy_from_slice(&r);
                    rows.push(full);
                }
                offset += c.n;
            }
            return Code::from_generator(&first.field, n, &rows);
        }
        let mut total: u128 = 1;
        for c in codes {
            total = total.saturating_mul(c.size_u128().unwrap_or(u128::MAX));
        }
        guards.codewords(total)?;
        let mut words: Vec<Vec<FieldElement>> = vec![Vec::new()];
        for c in codes {
            let part = c.codewords(guards)?;
            let mut next = Vec::with_capacity(words.len() * part.len());
            for w in &words {
                for p in &part {
                    let mut v = w.clone();
                    v.extend_from_slice(p);
                    next.push(v);
                }
            }
            words = next;
        }
        Code::from_codewords(&first.field, n, words)
    }

    /// The code over the extension field `big` with the same parity-check
    /// matrix.
    pub fn lift(&self, big: &Field) -> Result<Code> {
        let h = self.parity().ok_or_else(|| domain("lifting needs a linear code"))?;
        let embed = self.field.embedding_into(big)?;
        let rows: Vec<Vec<FieldElement>> =
            h.row_vecs().iter().map(|r| r.iter().map(|&x| embed[x as usize]).collect()).collect();
        Code::from_parity_check(big, self.n, &rows)
    }

    /// Whether `C + (1, ..., 1) = C` for a binary code.
    pub fn is_self_complementary(&self, guards: &Guards) -> Result<bool> {
        if !self.field.is_binary() {
            return Err(domain("self-complementarity is defined for binary codes"));
        }
        if self.is_linear() {
            return Ok(self.contains(&vec![1; self.n]));
        }
        let words = self.codewords(guards)?;
        Ok(words.iter().all(|w| {
            let c: Vec<FieldElement> = w.iter().map(|&x| x ^ 1).collect();
            self.contains(&c)
        }))
    }

    /// Translate `C + v`, as an explicit code (linear when `v ∈ C`).
    pub fn translate(&self, v: &[FieldElement], guards: &Guards) -> Result<Code> {
        if v.len() != self.n {
            return Err(domain("translation vector has the wrong length"));
        }
        if self.is_linear() && self.contains(v) {
            return Ok(self.clone());
        }
        let words = self
            .codewords(guards)?
            .iter()
            .map(|w| w.iter().zip(v).map(|(&a, &b)| self.field.add(a, b)).collect())
            .collect();
        Code::from_codewords(&self.field, self.n, words)
    }

    /// Set union of two codes of the same length; linear when the union
    /// happens to be a subspace.
    pub fn union(&self, other: &Code, guards: &Guards) -> Result<Code> {
        if self.field != other.field || self.n != other.n {
            return Err(domain("union of codes with different parameters"));
        }
        let mut words = self.codewords(guards)?;
        words.extend(other.codewords(guards)?);
        let code = Code::from_codewords(&self.field, self.n, words)?;
        Ok(code.to_linear_if_possible().unwrap_or(code))
    }
}

/// `C ∪ (C + 1)` for a binary, non-self-complementary, completely regular
/// code `C`; the added translate is the cell at distance ρ.
pub fn union_with_cover(code: &Code, guards: &Guards) -> Result<Code> {
    if code.is_self_complementary(guards)? {
        return Err(domain(
            "the code is self-complementary, so its covering cell is not a translate by the all-one vector",
        ));
    }
    let analysis = crate::spectra::analyze(code, guards)?;
    if !analysis.classification.completely_regular {
        return Err(domain("union with the covering cell needs a completely regular code"));
    }
    let ones = vec![1; code.n()];
    if let Some(g) = code.generator() {
        let mut rows = g.row_vecs();
        rows.push(ones);
        return Code::from_generator(code.field(), code.n(), &rows);
    }
    code.union(&code.translate(&ones, guards)?, guards)
}

/// Kronecker product of two parity-check matrices, computed over the larger
/// of the two fields. Fails when neither field contains the other.
pub fn kronecker_parity(
    fa: &Field,
    ha: &[Vec<FieldElement>],
    fb: &Field,
    hb: &[Vec<FieldElement>],
) -> Result<(Field, Vec<Vec<FieldElement>>)> {
    let (big, ea, eb) = if fa.is_subfield_of(fb) {
        (fb.clone(), fa.embedding_into(fb)?, fb.embedding_into(fb)?)
    } else if fb.is_subfield_of(fa) {
        (fa.clone(), fa.embedding_into(fa)?, fb.embedding_into(fa)?)
    } else {
        return Err(domain(format!("{fa:?} and {fb:?} have no common field")));
    };
    let lift = |h: &[Vec<FieldElement>], e: &[FieldElement]| {
        let cols = h.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<FieldElement>> = h.iter().map(|r| r.iter().map(|&x| e[x as usize]).collect()).collect();
        Matrix::from_rows(cols, &rows)
    };
    let k = lift(ha, &ea).kronecker(&lift(hb, &eb), &big);
    Ok((big, k.row_vecs()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codecore::{golay_binary, golay_ternary, hamming_parity};
    use proptest::prelude::*;

    fn g() -> Guards {
        Guards::default()
    }

    fn hamming(q: u32, m: usize) -> Code {
        let f = Field::gf(q).unwrap();
        let h = hamming_parity(&f, m).unwrap();
        Code::from_parity_check(&f, h[0].len(), &h).unwrap()
    }

    #[test]
    fn extensions() {
        let e = hamming(2, 3).extend().unwrap();
        assert_eq!((e.n(), e.dimension(), e.minimum_distance(&g()).unwrap()), (8, Some(4), 4));
        let eg = golay_binary().unwrap().extend().unwrap();
        assert_eq!((eg.n(), eg.minimum_distance(&g()).unwrap()), (24, 8));
        let et = golay_ternary().unwrap().extend().unwrap();
        assert_eq!((et.n(), et.dimension(), et.minimum_distance(&g()).unwrap()), (12, Some(6), 6));
    }

    #[test]
    fn punctured_golay() {
        let p = golay_binary().unwrap().puncture(0).unwrap();
        assert_eq!((p.n(), p.dimension(), p.minimum_distance(&g()).unwrap()), (22, Some(12), 6));
        assert_eq!(p.covering_radius(&g()).unwrap(), 3);
        assert!(p.notes().is_empty());
    }

    #[test]
    fn puncturing_distance_one_collapses() {
        let f = Field::gf(2).unwrap();
        let c = Code::from_codewords(&f, 2, vec![vec![0, 0], vec![0, 1]]).unwrap();
        let p = c.puncture(1).unwrap();
        assert_eq!(p.size(), 1u32.into());
        assert!(p.notes().contains(&CodeNote::Collapsed));
    }

    #[test]
    fn s_shortening_extended_golay() {
        let eg = golay_binary().unwrap().extend().unwrap();
        let s = vec![vec![0, 0, 0], vec![1, 1, 1]];
        let c = eg.s_shorten(&s, &[0, 1, 2], &g()).unwrap();
        assert!(c.is_linear());
        assert_eq!((c.n(), c.dimension()), (21, Some(10)));
        assert_eq!(c.minimum_distance(&g()).unwrap(), 5);
        assert_eq!(c.covering_radius(&g()).unwrap(), 6);
        // Same result through the explicit route.
        let explicit = eg.to_explicit(&g()).unwrap().s_shorten(&s, &[0, 1, 2], &g()).unwrap();
        assert!(c.same_set(&explicit, &g()).unwrap());
    }

    #[test]
    fn s_shortening_extended_hamming() {
        let e = hamming(2, 4).extend().unwrap();
        let c = e.s_shorten(&[vec![0, 0], vec![1, 1]], &[0, 1], &g()).unwrap();
        assert_eq!(c.n(), 14);
        assert_eq!(c.size(), 1024u32.into());
        assert_eq!(c.minimum_distance(&g()).unwrap(), 2);
        assert_eq!(c.covering_radius(&g()).unwrap(), 3);
    }

    #[test]
    fn tau_transform_examples() {
        let f = Field::gf(2).unwrap();
        let rep = Code::from_codewords(&f, 3, vec![vec![0, 0, 0], vec![1, 1, 1]]).unwrap();
        assert!(rep.tau_transform(0).unwrap().same_set(&rep, &g()).unwrap());
        // Even-weight words have parity 0, so tau_i zeroes coordinate i.
        let even = Code::from_parity_check(&f, 4, &[vec![1, 1, 1, 1]]).unwrap();
        let t = even.tau_transform(1).unwrap();
        let words = t.codewords(&g()).unwrap();
        assert!(words.iter().all(|w| w[1] == 0));
        assert_eq!(words.len(), 8);
        let golay = golay_binary().unwrap();
        for i in [0, 5, 22] {
            let ti = golay.tau_transform(i).unwrap();
            assert_eq!(ti.weight_distribution(&g()).unwrap(), golay.weight_distribution(&g()).unwrap());
        }
    }

    #[test]
    fn direct_sums() {
        let h = hamming(2, 3);
        let s = Code::direct_sum(&[h.clone(), h.clone()], &g()).unwrap();
        assert_eq!((s.n(), s.dimension(), s.minimum_distance(&g()).unwrap()), (14, Some(8), 3));
        assert_eq!(s.covering_radius(&g()).unwrap(), 2);
        let single = Code::direct_sum(&[h.clone()], &g()).unwrap();
        assert_eq!(single, h);
        let f = Field::gf(2).unwrap();
        let rep = Code::from_codewords(&f, 3, vec![vec![0, 0, 0], vec![1, 1, 1]]).unwrap();
        let rr = Code::direct_sum(&[rep.clone(), rep], &g()).unwrap();
        assert_eq!(rr.size(), 4u32.into());
        assert_eq!(rr.covering_radius(&g()).unwrap(), 2);
        let t = hamming(3, 2);
        assert!(Code::direct_sum(&[h, t], &g()).is_err());
    }

    #[test]
    fn self_complementary() {
        assert!(golay_binary().unwrap().extend().unwrap().is_self_complementary(&g()).unwrap());
        assert!(hamming(2, 3).is_self_complementary(&g()).unwrap());
        assert!(hamming(3, 2).is_self_complementary(&g()).is_err());
    }

    #[test]
    fn kronecker_examples() {
        let f2 = Field::gf(2).unwrap();
        let h2 = hamming_parity(&f2, 2).unwrap();
        let (f, k) = kronecker_parity(&f2, &h2, &f2, &h2).unwrap();
        let c = Code::from_parity_check(&f, 9, &k).unwrap();
        assert_eq!((c.dimension(), c.minimum_distance(&g()).unwrap()), (Some(5), 3));
        let (_, id) = kronecker_parity(&f2, &[vec![1]], &f2, &h2).unwrap();
        assert_eq!(id, h2);
        let h3 = hamming_parity(&f2, 3).unwrap();
        let (_, k23) = kronecker_parity(&f2, &h2, &f2, &h3).unwrap();
        let c = Code::from_parity_check(&f2, 21, &k23).unwrap();
        assert_eq!((c.dimension(), c.minimum_distance(&g()).unwrap()), (Some(15), 3));
        assert_eq!(c.covering_radius(&g()).unwrap(), 2);
        let f4 = Field::gf(4).unwrap();
        let f8 = Field::gf(8).unwrap();
        assert!(kronecker_parity(&f4, &[vec![1]], &f8, &[vec![1]]).is_err());
    }

    #[test]
    fn lifted_hamming_dimension() {
        let c = hamming(2, 3).lift(&Field::gf(4).unwrap()).unwrap();
        assert_eq!((c.q(), c.n(), c.dimension()), (4, 7, Some(4)));
        assert_eq!(c.covering_radius(&g()).unwrap(), 2);
    }

    proptest! {
        #[test]
        fn extend_then_puncture_round_trips(seed in proptest::collection::vec(0u8..3, 12)) {
            let f = Field::gf(3).unwrap();
            let rows: Vec<Vec<u8>> = seed.chunks(6).map(|c| c.to_vec()).collect();
            let c = Code::from_generator(&f, 6, &rows).unwrap();
            let back = c.extend().unwrap().puncture(6).unwrap();
            prop_assert!(back.same_set(&c, &g()).unwrap());
            let e = c.to_explicit(&g()).unwrap();
            let back = e.extend().unwrap().puncture(6).unwrap();
            prop_assert!(back.same_set(&c, &g()).unwrap());
            prop_assert_eq!(c.extend().unwrap().size(), c.size());
        }

        #[test]
        fn double_dual_is_identity(seed in proptest::collection::vec(0u8..4, 15)) {
            let f = Field::gf(4).unwrap();
            let rows: Vec<Vec<u8>> = seed.chunks(5).map(|c| c.to_vec()).collect();
            let c = Code::from_generator(&f, 5, &rows).unwrap();
            prop_assert_eq!(c.dual().unwrap().dual().unwrap(), c.clone());
            prop_assert_eq!(c.dual().unwrap().dimension().unwrap() + c.dimension().unwrap(), 5);
        }

        #[test]
        fn direct_sum_distance_is_minimum(a in 1usize..4, b in 1usize..4) {
            let f = Field::gf(2).unwrap();
            let ra = crate::codecore::repetition(&f, 2 * a + 1).unwrap();
            let rb = crate::codecore::repetition(&f, 2 * b + 1).unwrap();
            let s = Code::direct_sum(&[ra.clone(), rb.clone()], &g()).unwrap();
            let da = ra.minimum_distance(&g()).unwrap();
            let db = rb.minimum_distance(&g()).unwrap();
            prop_assert_eq!(s.minimum_distance(&g()).unwrap(), da.min(db));
            prop_assert_eq!(s.covering_radius(&g()).unwrap(),
                ra.covering_radius(&g()).unwrap() + rb.covering_radius(&g()).unwrap());
        }
    }
}
