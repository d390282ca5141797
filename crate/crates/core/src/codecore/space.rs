use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::Code;
use crate::error::{domain, Result};
use crate::fieldkit::{Field, FieldElement};
use crate::guards::{pow_sat, Guards};

/// Label of a vertex not reached by a breadth-first search.
pub const UNREACHED: u8 = u8::MAX;

/// The syndrome space `F_q^(n-k)` of a linear code with its labelled
/// transitions `s -> s + γ h_i`.
///
/// Syndromes are stored as integers `Σ s_j q^j`. Over fields of
/// characteristic 2 the index bits are the concatenated coefficient bits,
/// so syndrome addition is XOR.
#[derive(Debug, Clone)]
pub struct SyndromeSpace {
    field: Field,
    redundancy: usize,
    size: usize,
    xor: bool,
    /// `gens[i * (q - 1) + (g - 1)]` is the syndrome of `g e_i`.
    gens: Vec<u32>,
}

impl SyndromeSpace {
    pub fn new(code: &Code, guards: &Guards) -> Result<Self> {
        let h = code.parity().ok_or_else(|| domain("syndrome space needs a linear code"))?;
        let field = code.field().clone();
        let q = field.q();
        let r = h.rows();
        guards.syndromes(pow_sat(q as u64, r as u64))?;
        let size = q.pow(r as u32);
        let mut gens = Vec::with_capacity(code.n() * (q - 1));
        for i in 0..code.n() {
            let col = h.column(i);
            for g in field.units() {
                let scaled: Vec<FieldElement> = col.iter().map(|&c| field.mul(g, c)).collect();
                gens.push(index_of(&scaled, q) as u32);
            }
        }
        Ok(SyndromeSpace { xor: field.p() == 2, field, redundancy: r, size, gens })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn redundancy(&self) -> usize {
        self.redundancy
    }

    /// Syndromes of `γ e_i`, column-major in `i` then `γ`.
    pub fn generators(&self) -> &[u32] {
        &self.gens
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.xor {
            return a ^ b;
        }
        let q = self.field.q() as u32;
        let (mut a, mut b) = (a, b);
        let (mut out, mut place) = (0u32, 1u32);
        for _ in 0..self.redundancy {
            let s = self.field.add((a % q) as FieldElement, (b % q) as FieldElement) as u32;
            out += s * place;
            place *= q;
            a /= q;
            b /= q;
        }
        out
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.xor {
            return a;
        }
        let v: Vec<FieldElement> = self.vector_of(a).iter().map(|&x| self.field.neg(x)).collect();
        index_of(&v, self.field.q()) as u32
    }

    pub fn vector_of(&self, idx: u32) -> Vec<FieldElement> {
        let q = self.field.q() as u32;
        let mut idx = idx;
        (0..self.redundancy)
            .map(|_| {
                let d = (idx % q) as FieldElement;
                idx /= q;
                d
            })
            .collect()
    }

    pub fn index_of(&self, s: &[FieldElement]) -> u32 {
        index_of(s, self.field.q()) as u32
    }

    /// Coset-leader weight of every syndrome, found by breadth-first search
    /// from the zero syndrome.
    pub fn leader_weights(&self) -> Vec<u8> {
        let mut label = vec![UNREACHED; self.size];
        label[0] = 0;
        let mut frontier = vec![0u32];
        let mut w = 0u8;
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &s in &frontier {
                for &g in &self.gens {
                    let t = self.add(s, g) as usize;
                    if label[t] == UNREACHED {
                        label[t] = w + 1;
                        next.push(t as u32);
                    }
                }
            }
            frontier = next;
            w += 1;
        }
        label
    }
}

pub(crate) fn index_of(v: &[FieldElement], q: usize) -> usize {
    v.iter().rev().fold(0, |acc, &d| acc * q + d as usize)
}

/// The whole space `F_q^n`, vectors indexed by `Σ x_i q^i`.
#[derive(Debug, Clone)]
pub struct VectorSpace {
    field: Field,
    n: usize,
    size: usize,
    /// `shift[g][d]` is the new digit when `g` is added to digit `d`.
    shift: Vec<Vec<FieldElement>>,
}

impl VectorSpace {
    pub fn new(field: &Field, n: usize, guards: &Guards) -> Result<Self> {
        let q = field.q();
        guards.vectors(pow_sat(q as u64, n as u64))?;
        let shift = field.units().map(|g| field.elements().map(|d| field.add(d, g)).collect()).collect();
        Ok(VectorSpace { field: field.clone(), n, size: q.pow(n as u32), shift })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn index_of(&self, v: &[FieldElement]) -> usize {
        index_of(v, self.field.q())
    }

    pub fn vector_of(&self, idx: usize) -> Vec<FieldElement> {
        let q = self.field.q();
        let mut idx = idx;
        (0..self.n)
            .map(|_| {
                let d = (idx % q) as FieldElement;
                idx /= q;
                d
            })
            .collect()
    }

    /// Call `visit` for each of the `n (q - 1)` neighbours of `x`.
    #[inline]
    pub fn for_each_neighbor<F: FnMut(usize)>(&self, x: usize, mut visit: F) {
        let q = self.field.q();
        if q == 2 {
            for i in 0..self.n {
                visit(x ^ (1 << i));
            }
            return;
        }
        let mut place = 1usize;
        for _ in 0..self.n {
            let d = (x / place) % q;
            let base = x - d * place;
            for row in &self.shift {
                visit(base + row[d] as usize * place);
            }
            place *= q;
        }
    }

    /// Distance from every vector to the nearest of `words`.
    pub fn distances(&self, words: &[Vec<FieldElement>]) -> Vec<u8> {
        let mut label = vec![UNREACHED; self.size];
        let mut queue = VecDeque::new();
        for w in words {
            let i = self.index_of(w);
            if label[i] == UNREACHED {
                label[i] = 0;
                queue.push_back(i);
            }
        }
        while let Some(x) = queue.pop_front() {
            let next = label[x] + 1;
            self.for_each_neighbor(x, |y| {
                if label[y] == UNREACHED {
                    label[y] = next;
                    queue.push_back(y);
                }
            });
        }
        label
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codecore::hamming_parity;

    #[test]
    fn golay_coset_leader_counts() {
        let golay = crate::codecore::golay_binary().unwrap();
        let sp = SyndromeSpace::new(&golay, &Guards::default()).unwrap();
        let labels = sp.leader_weights();
        let mut sizes = [0usize; 4];
        for &l in &labels {
            sizes[l as usize] += 1;
        }
        assert_eq!(sizes, [1, 23, 253, 1771]);
    }

    #[test]
    fn odd_characteristic_addition() {
        let f = Field::gf(9).unwrap();
        let h = hamming_parity(&f, 2).unwrap();
        let code = Code::from_parity_check(&f, h[0].len(), &h).unwrap();
        let sp = SyndromeSpace::new(&code, &Guards::default()).unwrap();
        for a in 0..sp.size() as u32 {
            assert_eq!(sp.add(a, sp.neg(a)), 0);
            for b in [1u32, 5, 17, 80] {
                let va = sp.vector_of(a);
                let vb = sp.vector_of(b);
                let sum: Vec<u8> = va.iter().zip(&vb).map(|(&x, &y)| f.add(x, y)).collect();
                assert_eq!(sp.add(a, b), sp.index_of(&sum));
            }
        }
        // Perfect code: every nonzero syndrome is a scaled column.
        assert!(sp.leader_weights().iter().all(|&l| l <= 1));
    }

    #[test]
    fn resource_guard_names_the_limit() {
        let f = Field::gf(2).unwrap();
        let g = Guards { max_vectors: 1 << 10, ..Guards::default() };
        let err = VectorSpace::new(&f, 11, &g).unwrap_err();
        assert!(matches!(err, crate::Error::Resource { .. }));
    }
}
