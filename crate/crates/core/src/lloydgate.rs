//! Necessary conditions for completely regular and uniformly packed parameters.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::{Integer, Roots};
use num_traits::{One, Zero};

use crate::codecore::Code;
use crate::fieldkit::{binomial_int, krawtchouk_int, Rational};
use crate::spectra::{Analysis, IntersectionArray};

/// Tridiagonal matrix A of an intersection array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionMatrix {
    /// Row l holds (c_l, a_l, b_l); c_0 = b_rho = 0.
    pub rows: Vec<(i64, i64, i64)>,
}

impl IntersectionMatrix {
    pub fn new(ia: &IntersectionArray) -> Self {
        let rows = (0..=ia.rho()).map(|l| (ia.c_at(l) as i64, ia.a_at(l), ia.b_at(l) as i64)).collect();
        IntersectionMatrix { rows }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// Entry (i, j) of the full matrix.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        let (c, a, b) = self.rows[i];
        if j + 1 == i {
            c
        } else if j == i {
            a
        } else if j == i + 1 {
            b
        } else {
            0
        }
    }

    pub fn row_sums(&self) -> Vec<i64> {
        self.rows.iter().map(|&(c, a, b)| c + a + b).collect()
    }

    /// Coefficients of det(xI - A), lowest degree first.
    pub fn characteristic_polynomial(&self) -> Vec<BigInt> {
        // p_{l+1} = (x - a_l) p_l - b_{l-1} c_l p_{l-1}
        let mut prev: Vec<BigInt> = vec![BigInt::one()];
        let mut cur: Vec<BigInt> = vec![BigInt::one()];
        for l in 0..self.size() {
            let (c, a, _) = self.rows[l];
            let mut next = vec![BigInt::zero(); cur.len() + 1];
            for (i, v) in cur.iter().enumerate() {
                next[i + 1] += v;
                next[i] -= v * a;
            }
            if l > 0 {
                let coupling = BigInt::from(self.rows[l - 1].2) * c;
                for (i, v) in prev.iter().enumerate() {
                    next[i] -= v * &coupling;
                }
            }
            prev = core::mem::replace(&mut cur, next);
        }
        cur
    }
}

/// Divides by (x - root); returns the quotient if the remainder vanishes.
fn deflate(poly: &[BigInt], root: &BigInt) -> Option<Vec<BigInt>> {
    let deg = poly.len() - 1;
    if deg == 0 {
        return None;
    }
    let mut quotient = vec![BigInt::zero(); deg];
    let mut carry = BigInt::zero();
    for i in (0..=deg).rev() {
        let v = &poly[i] + &carry * root;
        if i == 0 {
            return v.is_zero().then_some(quotient);
        }
        quotient[i - 1] = v.clone();
        carry = v;
    }
    unreachable!()
}

/// Eigenvalue test of the intersection matrix against the spectrum of H_q(n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenvalueReport {
    pub pass: bool,
    /// (j, (q-1)n - qj) for each eigenvalue found, repeated by multiplicity.
    pub eigenvalues: Vec<(usize, i64)>,
}

/// Passes iff det(xI - A) splits completely over {(q-1)n - qj : 0 <= j <= n}.
pub fn eigenvalue_membership_test(ia: &IntersectionArray) -> EigenvalueReport {
    let mut poly = IntersectionMatrix::new(ia).characteristic_polynomial();
    let (n, q) = (ia.n as i64, ia.q as i64);
    let mut eigenvalues = Vec::new();
    for j in 0..=ia.n {
        let lambda = (q - 1) * n - q * j as i64;
        let root = BigInt::from(lambda);
        while let Some(quot) = deflate(&poly, &root) {
            poly = quot;
            eigenvalues.push((j, lambda));
        }
    }
    EigenvalueReport { pass: eigenvalues.len() == ia.rho() + 1, eigenvalues }
}

/// L(xi) = sum_r beta_r P_r(n, xi) at an integer point.
pub fn lloyd_polynomial_at(beta: &[Rational], n: usize, q: usize, xi: usize) -> Rational {
    beta.iter()
        .enumerate()
        .map(|(r, b)| b * Rational::from_integer(krawtchouk_int(r as u32, n as u32, xi as u32, q as u32)))
        .sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LloydRoots {
    pub pass: bool,
    pub roots: Vec<usize>,
}

/// Integer roots of the Lloyd polynomial in 0 < xi <= n. Passes iff there are
/// exactly rho of them, rho = len(beta) - 1.
pub fn lloyd_roots(n: usize, q: usize, beta: &[Rational]) -> LloydRoots {
    let rho = beta.len().saturating_sub(1);
    let roots: Vec<usize> = (1..=n).filter(|&xi| lloyd_polynomial_at(beta, n, q, xi).is_zero()).collect();
    LloydRoots { pass: roots.len() == rho, roots }
}

/// sum_i beta_i (q-1)^i C(n, i).
pub fn packing_sum(beta: &[Rational], n: usize, q: usize) -> Rational {
    beta.iter()
        .enumerate()
        .map(|(i, b)| b * Rational::from_integer(BigInt::from(q - 1).pow(i as u32) * binomial_int(n as i64, i as i64)))
        .sum()
}

/// |C| sum_i beta_i (q-1)^i C(n, i) = q^n.
pub fn cardinality_identity_for(size: &BigUint, n: usize, q: usize, beta: &[Rational]) -> bool {
    let lhs = packing_sum(beta, n, q) * Rational::from_integer(BigInt::from(size.clone()));
    lhs == Rational::from_integer(BigInt::from(q).pow(n as u32))
}

pub fn cardinality_identity(code: &Code, beta: &[Rational]) -> bool {
    cardinality_identity_for(&code.size(), code.n(), code.q(), beta)
}

/// One bound of the rho = 1 battery.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCheck {
    pub name: &'static str,
    /// None when the hypotheses of the bound do not hold.
    pub pass: Option<bool>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rho1Report {
    pub b: u64,
    pub c: u64,
    pub n: u64,
    pub a: i64,
    pub checks: Vec<BoundCheck>,
    /// Lower bound on a*(b, c), the least a for which {b; c} is realised.
    pub a_star_lower: Option<i64>,
    /// Upper bound on a*(b, c).
    pub a_star_upper: Option<i64>,
    pub pass: bool,
}

fn is_power_of_two(x: u64) -> bool {
    x != 0 && x & (x - 1) == 0
}

/// (b + c) / gcd(b, c) is a power of two.
pub fn divisibility_condition(b: u64, c: u64) -> bool {
    b != 0 && c != 0 && is_power_of_two((b + c) / b.gcd(&c))
}

/// Best lower bound on a*(b, c) from the two quadratic bounds, possibly
/// transported through the symmetry a*(b, c) = a*(c, b) + c - b.
fn a_star_lower(b: u64, c: u64) -> Option<i64> {
    fn direct(b: u64, c: u64) -> Option<i64> {
        let (bi, ci) = (b as i64, c as i64);
        let mut best: Option<i64> = None;
        if c < b && b < 2 * c {
            let m = 4 * ci * (bi - ci) + 1;
            let t = m.sqrt();
            let half_ceil = if t * t == m { (1 + t) / 2 } else { (t + 3) / 2 };
            best = Some(half_ceil - (bi - ci));
        }
        if b > 2 * c {
            let gap = bi - 2 * ci;
            if gap * gap < 3 * ci - 2 {
                best = Some(best.map_or(1, |x| x.max(1)));
            }
        }
        best
    }
    let mut best = direct(b, c);
    if divisibility_condition(b, c) {
        let via = direct(c, b).map(|x| x + c as i64 - b as i64);
        best = match (best, via) {
            (Some(x), Some(y)) => Some(x.max(y)),
            (x, y) => x.or(y),
        };
        if c > b {
            let trivial = c as i64 - b as i64;
            best = Some(best.map_or(trivial, |x| x.max(trivial)));
        }
    }
    best.map(|x| x.max(0))
}

/// Upper bound on a*(b, c) from a*(b, c) = 0 when c | b, the recursion
/// a*(2b + c, c) <= max(0, a*(b, c) - 1) and the symmetry above.
fn a_star_upper(b: u64, c: u64) -> Option<i64> {
    if !divisibility_condition(b, c) {
        return None;
    }
    if b >= c && b % c == 0 {
        return Some(0);
    }
    let mut best: Option<i64> = None;
    if b > c && (b - c) % 2 == 0 {
        if let Some(u) = a_star_upper((b - c) / 2, c) {
            best = Some((u - 1).max(0));
        }
    }
    if b < c {
        if let Some(u) = a_star_upper(c, b) {
            let v = u + c as i64 - b as i64;
            best = Some(best.map_or(v, |x| x.min(v)));
        }
    }
    best
}

/// Battery of necessary conditions for a binary code with rho = 1 and
/// intersection array {b; c}, a = n - b.
pub fn rho1_bounds(b: u64, c: u64, n: u64) -> Rho1Report {
    let a = n as i64 - b as i64;
    let mut checks = Vec::new();
    let nonzero = b != 0 && c != 0;
    checks.push(BoundCheck {
        name: "nonzero",
        pass: Some(nonzero),
        detail: format!("b = {b}, c = {c}, need b ≠ 0 ≠ c"),
    });
    checks.push(BoundCheck { name: "range", pass: Some(b <= n && c <= n), detail: format!("b, c <= n = {n}") });
    if nonzero {
        let g = b.gcd(&c);
        checks.push(BoundCheck {
            name: "divisibility",
            pass: Some(divisibility_condition(b, c)),
            detail: format!("(b + c) / gcd = {}", (b + c) / g),
        });
    }
    checks.push(BoundCheck {
        name: "correlation immunity",
        pass: (b != c).then(|| 3 * (c as i64 - a) <= n as i64),
        detail: format!("c - a = {} <= n/3", c as i64 - a),
    });
    let (lower, upper) = if nonzero { (a_star_lower(b, c), a_star_upper(b, c)) } else { (None, None) };
    checks.push(BoundCheck {
        name: "a* lower bound",
        pass: lower.map(|l| a >= l),
        detail: match lower {
            Some(l) => format!("a = {a} >= a* >= {l}"),
            None => String::from("no lower bound applies"),
        },
    });
    let pass = checks.iter().all(|ch| ch.pass != Some(false));
    Rho1Report { b, c, n, a, checks, a_star_lower: lower, a_star_upper: upper, pass }
}

/// Sanity filter on a putative intersection array: positive b_l for l < rho,
/// positive c_l for l >= 1 and nonnegative a_l.
pub fn design_existence_guard(ia: &IntersectionArray, n: usize, q: usize) -> bool {
    ia.n == n && ia.q == q && ia.b.len() == ia.c.len() && ia.validate().is_ok()
}

/// The whole battery applied to an analysed code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LloydBattery {
    pub eigenvalues: Option<EigenvalueReport>,
    pub roots: Option<LloydRoots>,
    pub cardinality: Option<bool>,
    pub rho1: Option<Rho1Report>,
}

impl LloydBattery {
    /// Every test that ran passed.
    pub fn pass(&self) -> bool {
        self.eigenvalues.as_ref().map_or(true, |r| r.pass)
            && self.roots.as_ref().map_or(true, |r| r.pass)
            && self.cardinality.unwrap_or(true)
            && self.rho1.as_ref().map_or(true, |r| r.pass)
    }
}

pub fn battery(analysis: &Analysis) -> LloydBattery {
    let (n, q) = (analysis.n, analysis.q);
    let eigenvalues = analysis.intersection_array.as_ref().map(eigenvalue_membership_test);
    let beta = analysis.packing.as_ref().map(|p| &p.beta);
    let roots = beta.map(|b| lloyd_roots(n, q, b));
    let cardinality = beta.map(|b| cardinality_identity_for(&analysis.size, n, q, b));
    let rho1 = analysis
        .intersection_array
        .as_ref()
        .filter(|ia| ia.rho() == 1 && q == 2)
        .map(|ia| rho1_bounds(ia.b[0], ia.c[0], n as u64));
    LloydBattery { eigenvalues, roots, cardinality, rho1 }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codecore::{cyclic_code, golay_binary, hamming_parity};
    use crate::fieldkit::{minimal_polynomial, Field};
    use crate::spectra::analyze;
    use crate::Guards;
    use proptest::prelude::*;

    fn r(a: i64, b: i64) -> Rational {
        Rational::new(BigInt::from(a), BigInt::from(b))
    }

    fn ia(s: &str, n: usize, q: usize) -> IntersectionArray {
        IntersectionArray::parse(s, n, q).unwrap()
    }

    fn eval(poly: &[BigInt], x: &BigInt) -> BigInt {
        poly.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Determinant by cofactor expansion, independent of the recurrence.
    fn det(m: &[Vec<BigInt>]) -> BigInt {
        if m.len() == 1 {
            return m[0][0].clone();
        }
        let mut total = BigInt::zero();
        for j in 0..m.len() {
            let minor: Vec<Vec<BigInt>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, v)| v.clone()).collect())
                .collect();
            let term = &m[0][j] * det(&minor);
            if j % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }

    #[test]
    fn hamming_eigenvalues() {
        let rep = eigenvalue_membership_test(&ia("{7;1}", 7, 2));
        assert!(rep.pass);
        assert_eq!(rep.eigenvalues, vec![(0, 7), (4, -1)]);
    }

    #[test]
    fn golay_eigenvalues_and_mutation() {
        let rep = eigenvalue_membership_test(&ia("{23,22,21;1,2,3}", 23, 2));
        assert!(rep.pass);
        assert_eq!(rep.eigenvalues.len(), 4);
        assert!(rep.eigenvalues.iter().all(|&(j, l)| l == 23 - 2 * j as i64));
        assert!(!eigenvalue_membership_test(&ia("{23,22,21;1,2,4}", 23, 2)).pass);
    }

    #[test]
    fn characteristic_polynomial_matches_cofactor_expansion() {
        for s in ["{23,22,21;1,2,3}", "{22,20;1,2}", "{31,30,17;1,2,15}", "{5,4;1,3}"] {
            let a = ia(s, 31, 2);
            let m = IntersectionMatrix::new(&a);
            let poly = m.characteristic_polynomial();
            for x in -5i64..5 {
                let rows: Vec<Vec<BigInt>> = (0..m.size())
                    .map(|i| (0..m.size()).map(|j| BigInt::from(if i == j { x } else { 0 } - m.get(i, j))).collect())
                    .collect();
                assert_eq!(eval(&poly, &BigInt::from(x)), det(&rows), "{s} at {x}");
            }
        }
    }

    #[test]
    fn lloyd_roots_examples() {
        let bch = lloyd_roots(31, 2, &[r(1, 1), r(1, 1), r(1, 5), r(1, 5)]);
        assert!(bch.pass);
        assert_eq!(bch.roots, vec![12, 16, 20]);
        let ham = lloyd_roots(7, 2, &[r(1, 1), r(1, 1)]);
        assert_eq!(ham.roots, vec![4]);
        let six = lloyd_roots(6, 2, &[r(1, 1), r(1, 1)]);
        assert!(!six.pass && six.roots.is_empty());
        // extended Hamming: beta = (1, 1, 1/4), roots reach xi = n
        let ext = lloyd_roots(8, 2, &[r(1, 1), r(1, 1), r(1, 4)]);
        assert_eq!(ext.roots, vec![4, 8]);
    }

    #[test]
    fn lloyd_roots_match_closed_forms() {
        // BCH [2^(2m+1)-1] with beta_2 = beta_3 = 6/(n-1): roots (n+1)/2 -+ sqrt((n+1)/2)
        for m in 2..5u32 {
            let n = (1usize << (2 * m + 1)) - 1;
            let beta = [r(1, 1), r(1, 1), r(6, n as i64 - 1), r(6, n as i64 - 1)];
            let h = (n + 1) / 2;
            let s = (1usize << m) as usize;
            assert_eq!(lloyd_roots(n, 2, &beta).roots, vec![h - s, h, h + s]);
        }
        // Preparata: beta_2 = beta_3 = 3/n, roots (n+1 -+ sqrt(n+1))/2
        for m in 2..5u32 {
            let n = (1usize << (2 * m)) - 1;
            let beta = [r(1, 1), r(1, 1), r(3, n as i64), r(3, n as i64)];
            let s = 1usize << m;
            assert_eq!(lloyd_roots(n, 2, &beta).roots, vec![(n + 1 - s) / 2, (n + 1) / 2, (n + 1 + s) / 2]);
        }
    }

    #[test]
    fn cardinality_examples() {
        let f = Field::gf(2).unwrap();
        let h = hamming_parity(&f, 3).unwrap();
        let ham = Code::from_parity_check(&f, 7, &h).unwrap();
        assert!(cardinality_identity(&ham, &[r(1, 1), r(1, 1)]));
        let g = minimal_polynomial(&f, 1, 31).unwrap().mul(&minimal_polynomial(&f, 3, 31).unwrap(), &f);
        let bch = cyclic_code(&f, 31, &g).unwrap();
        assert!(cardinality_identity(&bch, &[r(1, 1), r(1, 1), r(1, 5), r(1, 5)]));
        let golay = golay_binary().unwrap();
        assert!(cardinality_identity(&golay, &vec![r(1, 1); 4]));
        assert!(!cardinality_identity(&golay, &[r(1, 1), r(1, 1), r(1, 1), r(1, 2)]));
    }

    #[test]
    fn rho1_examples() {
        for (b, c, n) in [(9, 7, 12), (3, 1, 3), (5, 3, 6)] {
            let rep = rho1_bounds(b, c, n);
            assert!(rep.pass, "{rep:?}");
        }
        // tight cases of c - a <= n/3
        assert_eq!(rho1_bounds(9, 7, 12).a, 3);
        assert_eq!(rho1_bounds(9, 7, 12).a_star_lower, Some(3));
        assert!(!rho1_bounds(0, 3, 6).pass);
        assert!(!rho1_bounds(4, 2, 6).pass); // 6/2 = 3 not a power of 2
        assert!(!rho1_bounds(9, 8, 12).pass); // c - a = 5 > 4
        assert_eq!(rho1_bounds(3, 1, 3).a_star_upper, Some(0));
    }

    #[test]
    fn a_star_symmetry() {
        // a*(c, b) = a*(b, c) + b - c on the bounds we derive from it
        assert_eq!(a_star_upper(1, 3), Some(2));
        assert_eq!(a_star_upper(7, 1), Some(0));
        // {5;3}: 3 < 5 < 6 gives a* >= 1/2 + sqrt(6.25) - 2 = 1
        assert_eq!(a_star_lower(5, 3), Some(1));
    }

    #[test]
    fn guard_examples() {
        let g = ia("{23,22,21;1,2,3}", 23, 2);
        assert!(design_existence_guard(&g, 23, 2));
        let big = IntersectionArray { n: 7, q: 2, b: vec![8], c: vec![1] };
        assert!(!design_existence_guard(&big, 7, 2));
        let neg = IntersectionArray { n: 7, q: 2, b: vec![7, 6], c: vec![1, 8] };
        assert!(!design_existence_guard(&neg, 7, 2));
    }

    #[test]
    fn battery_on_golay() {
        let a = analyze(&golay_binary().unwrap(), &Guards::default()).unwrap();
        let bat = battery(&a);
        assert!(bat.pass());
        assert_eq!(bat.roots.unwrap().roots.len(), 3);
    }

    proptest! {
        #[test]
        fn perfect_single_error_roots(m in 2u32..7) {
            // q-ary Hamming: beta = (1, 1), single root at xi = (q-1)n/q scaled
            let n = (1usize << m) - 1;
            prop_assert_eq!(lloyd_roots(n, 2, &[r(1, 1), r(1, 1)]).roots, vec![(n + 1) / 2]);
        }

        #[test]
        fn mutated_c_fails_eigen_test(bump in 1u64..4) {
            let mut g = ia("{23,22,21;1,2,3}", 23, 2);
            g.c[2] += bump;
            prop_assert!(!eigenvalue_membership_test(&g).pass || g.validate().is_err());
        }
    }
}
