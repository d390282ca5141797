use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{format_err, Error, Result};

/// Intersection array `{b_0, ..., b_(ρ-1); c_1, ..., c_ρ}` of a completely
/// regular code of length `n` over GF(q).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntersectionArray {
    pub n: usize,
    pub q: usize,
    pub b: Vec<u64>,
    pub c: Vec<u64>,
}

impl IntersectionArray {
    /// Build without validation; see [`IntersectionArray::validate`].
    pub fn new(n: usize, q: usize, b: Vec<u64>, c: Vec<u64>) -> Result<Self> {
        if b.len() != c.len() {
            return Err(format_err(format!(
                "intersection array needs as many b as c entries ({} vs {})",
                b.len(),
                c.len()
            )));
        }
        Ok(IntersectionArray { n, q, b, c })
    }

    /// Covering radius ρ.
    pub fn rho(&self) -> usize {
        self.b.len()
    }

    /// Valency `n (q - 1)` of the Hamming graph.
    pub fn degree(&self) -> u64 {
        (self.n * (self.q - 1)) as u64
    }

    /// `b_l`, with `b_ρ = 0`.
    pub fn b_at(&self, l: usize) -> u64 {
        self.b.get(l).copied().unwrap_or(0)
    }

    /// `c_l`, with `c_0 = 0`.
    pub fn c_at(&self, l: usize) -> u64 {
        if l == 0 {
            0
        } else {
            self.c.get(l - 1).copied().unwrap_or(0)
        }
    }

    /// `a_l = n(q-1) - b_l - c_l`; may be negative for invalid arrays.
    pub fn a_at(&self, l: usize) -> i64 {
        self.degree() as i64 - self.b_at(l) as i64 - self.c_at(l) as i64
    }

    /// Check `b_l > 0` for `l < ρ`, `c_l > 0` for `l >= 1` and `a_l >= 0`.
    pub fn validate(&self) -> Result<()> {
        if self.q < 2 {
            return Err(Error::Domain(format!("alphabet size {} below 2", self.q)));
        }
        if let Some(l) = self.b.iter().position(|&x| x == 0) {
            return Err(Error::Domain(format!("b_{l} is zero before the covering radius")));
        }
        if let Some(l) = self.c.iter().position(|&x| x == 0) {
            return Err(Error::Domain(format!("c_{} is zero", l + 1)));
        }
        for l in 0..=self.rho() {
            if self.a_at(l) < 0 {
                return Err(Error::Domain(format!("a_{l} = {} is negative", self.a_at(l))));
            }
        }
        Ok(())
    }

    /// The array read from the far end: `{c_ρ, ..., c_1; b_(ρ-1), ..., b_0}`.
    pub fn reversed(&self) -> Self {
        IntersectionArray {
            n: self.n,
            q: self.q,
            b: self.c.iter().rev().copied().collect(),
            c: self.b.iter().rev().copied().collect(),
        }
    }

    /// Parse `"{23,22,21;1,2,3}"` (braces optional).
    pub fn parse(s: &str, n: usize, q: usize) -> Result<Self> {
        let t = s.trim().trim_start_matches('{').trim_end_matches('}');
        let (bs, cs) = t.split_once(';').ok_or_else(|| format_err(format!("intersection array `{s}` lacks `;`")))?;
        let parse_list = |part: &str| -> Result<Vec<u64>> {
            part.split(',')
                .map(str::trim)
                .filter(|x| !x.is_empty())
                .map(|x| x.parse::<u64>().map_err(|_| format_err(format!("bad entry `{x}` in `{s}`"))))
                .collect()
        };
        IntersectionArray::new(n, q, parse_list(bs)?, parse_list(cs)?)
    }

    /// Brace notation, e.g. `{23,22,21;1,2,3}`.
    pub fn to_brace_string(&self) -> String {
        format!("{self}")
    }
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u64]| v.iter().map(|x| format!("{x}")).collect::<Vec<_>>().join(",");
        write!(f, "{{{};{}}}", join(&self.b), join(&self.c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn parse_and_display_round_trip() {
        let ia = IntersectionArray::parse("{23, 22, 21; 1, 2, 3}", 23, 2).unwrap();
        assert_eq!(ia.b, vec![23, 22, 21]);
        assert_eq!(ia.to_brace_string(), "{23,22,21;1,2,3}");
        assert_eq!(ia.a_at(3), 20);
        assert!(ia.validate().is_ok());
        assert_eq!(ia.reversed().to_brace_string(), "{3,2,1;21,22,23}");
    }

    #[test]
    fn validation_failures() {
        assert!(IntersectionArray::new(7, 2, vec![8], vec![1]).unwrap().validate().is_err());
        assert!(IntersectionArray::new(7, 2, vec![7, 0], vec![1, 2]).unwrap().validate().is_err());
        assert!(IntersectionArray::new(7, 2, vec![7], vec![1, 2]).is_err());
        assert!(IntersectionArray::parse("{7 1}", 7, 2).is_err());
    }
}
