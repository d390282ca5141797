//! Constructions behind the catalog entries. Each function builds one code
//! from family parameters; parameter sanity is checked by the caller.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::codecore::{
    extension_coordinates, golay_binary, golay_ternary, hamming_parity, kronecker_parity, simplex_columns, Code,
};
use crate::error::{domain, Error, Result};
use crate::fieldkit::{minimal_polynomial, Field, FieldElement, Matrix};
use crate::guards::Guards;

pub(crate) type Rows = Vec<Vec<FieldElement>>;

pub(crate) fn rows_from_columns(height: usize, cols: &[Vec<FieldElement>]) -> Rows {
    (0..height).map(|i| cols.iter().map(|c| c[i]).collect()).collect()
}

fn parity_code(field: &Field, rows: &[Vec<FieldElement>]) -> Result<Code> {
    let n = rows.first().map_or(0, |r| r.len());
    Code::from_parity_check(field, n, rows)
}

/// Place blocks of equal height side by side.
fn hcat(blocks: &[&Rows]) -> Rows {
    let h = blocks[0].len();
    (0..h).map(|i| blocks.iter().flat_map(|b| b[i].iter().copied()).collect()).collect()
}

fn zero_block(h: usize, w: usize) -> Rows {
    vec![vec![0; w]; h]
}

pub fn hamming(q: usize, m: usize) -> Result<Code> {
    let f = Field::gf(q as u32)?;
    parity_code(&f, &hamming_parity(&f, m)?)
}

/// Binary Hamming parity check with column `j` the binary expansion of
/// `alpha^j` in GF(2^m).
fn binary_power_columns(m: usize) -> Result<(Field, Rows)> {
    let big = Field::gf(1 << m)?;
    let n = (1usize << m) - 1;
    let cols: Vec<Vec<FieldElement>> =
        (0..n).map(|j| big.coeffs(big.exp(j as u64)).iter().map(|&c| c as FieldElement).collect()).collect();
    Ok((big, rows_from_columns(m, &cols)))
}

/// Extended perfect code with `d = 4`: the extended binary Hamming code, or
/// the hyperoval code for `q = 2^s >= 4`, `m = 2`.
pub fn extended_perfect(q: usize, m: usize) -> Result<Code> {
    if q == 2 {
        hamming(2, m)?.extend()
    } else if m == 2 && q.is_power_of_two() {
        hyperoval(q)
    } else {
        Err(domain(format!("no extended perfect code with d = 4 for q = {q}, m = {m}")))
    }
}

/// `[q+2, q-1, 4]_q` code whose parity columns form a hyperoval of PG(2,q).
pub fn hyperoval(q: usize) -> Result<Code> {
    if q < 4 || !q.is_power_of_two() {
        return Err(domain("hyperovals exist only for q = 2^s >= 4"));
    }
    let f = Field::gf(q as u32)?;
    let mut cols: Vec<Vec<FieldElement>> = f.elements().map(|t| vec![1, t, f.mul(t, t)]).collect();
    cols.push(vec![0, 0, 1]);
    cols.push(vec![0, 1, 0]);
    parity_code(&f, &rows_from_columns(3, &cols))
}

/// Conic code `[q+1, q-2, 4]_q`: a conic plus one point, a subcode of the
/// Hamming code with parity rows `x` and `z`.
pub fn conic(q: usize) -> Result<Code> {
    if q < 4 || !q.is_power_of_two() {
        return Err(domain("the conic construction needs q = 2^s >= 4"));
    }
    let f = Field::gf(q as u32)?;
    let mut cols: Vec<Vec<FieldElement>> = f.elements().map(|t| vec![1, t, f.mul(t, t)]).collect();
    cols.push(vec![0, 0, 1]);
    parity_code(&f, &rows_from_columns(3, &cols))
}

/// Binary Hamming code with one extra parity row selecting the columns
/// whose weight is `i1` or `i2` modulo 4.
pub fn half_hamming(m: usize, i1: usize, i2: usize) -> Result<Code> {
    let f = Field::gf(2)?;
    let mut rows = hamming_parity(&f, m)?;
    let cols = simplex_columns(&f, m);
    let v = cols
        .iter()
        .map(|c| {
            let w = c.iter().filter(|&&x| x != 0).count() % 4;
            (w == i1 || w == i2) as FieldElement
        })
        .collect();
    rows.push(v);
    parity_code(&f, &rows)
}

pub fn even_half(m: usize) -> Result<Code> {
    let f = Field::gf(2)?;
    let mut rows = hamming_parity(&f, m)?;
    let n = rows[0].len();
    rows.push(vec![1; n]);
    parity_code(&f, &rows)
}

pub(crate) fn pairs_equal(q: usize) -> Rows {
    (0..q as FieldElement).map(|a| vec![a, a]).collect()
}

/// `{(00),(11)}`-shortening of the extended binary Hamming code.
pub fn shortened_extended_00_11(m: usize, guards: &Guards) -> Result<Code> {
    hamming(2, m)?.extend()?.s_shorten(&pairs_equal(2), &[0, 1], guards)
}

/// `{(000),(111)}`-shortening of the extended binary Hamming code.
pub fn shortened_extended_000_111(m: usize, guards: &Guards) -> Result<Code> {
    hamming(2, m)?.extend()?.s_shorten(&[vec![0, 0, 0], vec![1, 1, 1]], &[0, 1, 2], guards)
}

/// `{(00),(11)}`-shortening of the binary Hamming code.
pub fn shortened_perfect_00_11(m: usize, guards: &Guards) -> Result<Code> {
    hamming(2, m)?.s_shorten(&pairs_equal(2), &[0, 1], guards)
}

/// Hyperoval code shortened on `{(a,a)}` over the two nucleus-side points.
pub fn shortened_hyperoval(q: usize, guards: &Guards) -> Result<Code> {
    let c = hyperoval(q)?;
    let n = c.n();
    c.s_shorten(&pairs_equal(q), &[n - 2, n - 1], guards)
}

/// Nested code `C^(i)` for even `m`: the Hamming parity check of powers of
/// `alpha` stacked with the first `i` binary rows of `alpha^(j(2^u+1))`.
pub fn nested(m: usize, i: usize) -> Result<Code> {
    if m % 2 != 0 || m < 4 {
        return Err(domain("the nested family needs even m >= 4"));
    }
    let u = m / 2;
    if i > u {
        return Err(domain(format!("nested index i = {i} exceeds u = {u}")));
    }
    let (big, mut rows) = binary_power_columns(m)?;
    let small = Field::gf(1 << u)?;
    let embed = small.embedding_into(&big)?;
    let mut back = vec![None; big.q()];
    for (a, &img) in embed.iter().enumerate() {
        back[img as usize] = Some(a as FieldElement);
    }
    let n = (1usize << m) - 1;
    let r = (1u64 << u) + 1;
    let mut e_cols = Vec::with_capacity(n);
    for j in 0..n {
        let x = big.exp(j as u64 * r);
        let s = back[x as usize].ok_or_else(|| Error::Inconsistent("alpha^r is not in the subfield".into()))?;
        e_cols.push(small.coeffs(s).iter().map(|&c| c as FieldElement).collect::<Vec<_>>());
    }
    let e_rows = rows_from_columns(u, &e_cols);
    rows.extend(e_rows.into_iter().take(i));
    parity_code(&Field::gf(2)?, &rows)
}

/// Binary cyclic code of length `2^m - 1` with generator `m_1(x) m_l(x)`.
pub fn two_zero_cyclic(m: usize, l: u64) -> Result<Code> {
    if m > 8 {
        return Err(Error::Resource { guard: "max_field_order", needed: 1u128 << m, limit: 256 });
    }
    let f = Field::gf(2)?;
    let n = (1u64 << m) - 1;
    let g = minimal_polynomial(&f, 1, n)?;
    let ml = minimal_polynomial(&f, l % n, n)?;
    if g == ml {
        return Err(domain(format!("exponent {l} lies in the cyclotomic coset of 1")));
    }
    crate::codecore::cyclic_code(&f, n as usize, &g.mul(&ml, &f))
}

/// Hamming parity check over GF(q) viewed over GF(q^r).
pub fn lifted_hamming(q: usize, m: usize, r: usize) -> Result<Code> {
    let big = Field::gf(big_order(q, r)?)?;
    hamming(q, m)?.lift(&big)
}

fn big_order(q: usize, r: usize) -> Result<u32> {
    let order = (q as u128).checked_pow(r as u32).unwrap_or(u128::MAX);
    if order > 256 {
        return Err(Error::Resource { guard: "max_field_order", needed: order, limit: 256 });
    }
    Ok(order as u32)
}

/// Code with parity check `H^(q^u)_ma ⊗ H^q_mb` over GF(q^u).
pub fn kronecker_hamming(q: usize, u: usize, ma: usize, mb: usize) -> Result<Code> {
    let fa = Field::gf(big_order(q, u)?)?;
    let fb = Field::gf(q as u32)?;
    let (big, rows) = kronecker_parity(&fa, &hamming_parity(&fa, ma)?, &fb, &hamming_parity(&fb, mb)?)?;
    parity_code(&big, &rows)
}

/// The five equal-array variants for prime `q` and naturals `a, b, u`.
pub fn kronecker_variant(q: usize, a: usize, b: usize, u: usize, variant: usize) -> Result<Code> {
    match variant {
        1 => lifted_hamming(q, b, u * a),
        2 => lifted_hamming(q, u * a, b),
        3 => {
            let f = Field::gf(q as u32)?;
            let k = Matrix::from_rows((q.pow(b as u32) - 1) / (q - 1), &hamming_parity(&f, b)?)
                .kronecker(&Matrix::from_rows((q.pow((u * a) as u32) - 1) / (q - 1), &hamming_parity(&f, u * a)?), &f);
            parity_code(&f, &k.row_vecs())
        }
        4 => {
            let fb = Field::gf(q as u32)?;
            let fa = Field::gf(big_order(q, a)?)?;
            let (big, rows) = kronecker_parity(&fb, &hamming_parity(&fb, b)?, &fa, &hamming_parity(&fa, u)?)?;
            parity_code(&big, &rows)
        }
        5 => {
            let fb = Field::gf(q as u32)?;
            let fu = Field::gf(big_order(q, u)?)?;
            let (big, rows) = kronecker_parity(&fb, &hamming_parity(&fb, b)?, &fu, &hamming_parity(&fu, a)?)?;
            parity_code(&big, &rows)
        }
        _ => Err(domain(format!("variant {variant} not in 1..=5"))),
    }
}

/// Binary code whose parity columns are all weight-`l` vectors of length `m`.
pub fn binomial(m: usize, l: usize) -> Result<Code> {
    let f = Field::gf(2)?;
    let mut cols = Vec::new();
    for mask in 0u32..(1 << m) {
        if mask.count_ones() as usize == l {
            cols.push((0..m).map(|i| ((mask >> i) & 1) as FieldElement).collect::<Vec<_>>());
        }
    }
    parity_code(&f, &rows_from_columns(m, &cols))
}

/// `C^(m,2)` together with the all-one vector.
pub fn binomial_union(m: usize) -> Result<Code> {
    let c = binomial(m, 2)?;
    let g = c.generator().ok_or_else(|| Error::Inconsistent("linear code without generator".into()))?;
    let mut rows = g.row_vecs();
    rows.push(vec![1; c.n()]);
    Code::from_generator(c.field(), c.n(), &rows)
}

pub fn hamming_direct_sum(q: usize, m: usize, u: usize, guards: &Guards) -> Result<Code> {
    let h = hamming(q, m)?;
    Code::direct_sum(&vec![h; u], guards)
}

/// `{(x, y, x + y)}`, the code of one Latin square.
pub fn one_latin_square(q: usize) -> Result<Code> {
    let f = Field::gf(q as u32)?;
    parity_code(&f, &[vec![1, 1, f.neg(1)]])
}

/// `[4,2,3]_q` MDS code with parity rows `(1,1,1,1)` and `(0,1,a,a^2)`.
pub fn two_latin_squares(q: usize) -> Result<Code> {
    if q < 4 {
        return Err(domain("two orthogonal Latin squares need q >= 4 here"));
    }
    let f = Field::gf(q as u32)?;
    let a = f.alpha();
    parity_code(&f, &[vec![1, 1, 1, 1], vec![0, 1, a, f.mul(a, a)]])
}

/// Columns `(1, x)` for `x` in a subset of GF(q)^m.
fn affine_columns(f: &Field, m: usize, limit: Option<usize>) -> Rows {
    let q = f.q();
    let total = q.pow(m as u32);
    let take = limit.unwrap_or(total);
    let cols: Vec<Vec<FieldElement>> = (0..take)
        .map(|idx| {
            let mut v = vec![1];
            let mut x = idx;
            for _ in 0..m {
                v.push((x % q) as FieldElement);
                x /= q;
            }
            v
        })
        .collect();
    rows_from_columns(m + 1, &cols)
}

/// Dual of the difference-matrix code: parity columns `(1, x)`, `x ∈ GF(q)^m`.
pub fn difference_matrix_dual(q: usize, m: usize) -> Result<Code> {
    let f = Field::gf(q as u32)?;
    parity_code(&f, &affine_columns(&f, m, None))
}

/// Dual Latin-square code: the first `n` columns `(1, x)`, `x ∈ GF(q)`.
pub fn latin_dual(q: usize, n: usize) -> Result<Code> {
    if n < 3 || n > q {
        return Err(domain("the dual Latin square code needs 3 <= n <= q"));
    }
    let f = Field::gf(q as u32)?;
    parity_code(&f, &affine_columns(&f, 1, Some(n)))
}

/// Parity columns are the lines of PG(2,q) missing the hyperoval.
pub fn external_lines(q: usize) -> Result<Code> {
    if q < 4 || !q.is_power_of_two() {
        return Err(domain("external lines of a hyperoval need q = 2^s >= 4"));
    }
    let f = Field::gf(q as u32)?;
    let mut oval: Vec<[FieldElement; 3]> = f.elements().map(|t| [1, t, f.mul(t, t)]).collect();
    oval.push([0, 0, 1]);
    oval.push([0, 1, 0]);
    let mut cols = Vec::new();
    for line in simplex_columns(&f, 3) {
        let misses = oval.iter().all(|p| {
            let s = (0..3).fold(0, |acc, i| f.add(acc, f.mul(line[i], p[i])));
            s != 0
        });
        if misses {
            cols.push(line);
        }
    }
    parity_code(&f, &rows_from_columns(3, &cols))
}

/// `D_1` with columns `(1,0), (1,1), (1,x), (1,y)` where `1 + x + y = 0`.
pub fn d1_matrix_code(q: usize) -> Result<Code> {
    if q < 4 {
        return Err(domain("D_1 needs q >= 4"));
    }
    let f = Field::gf(q as u32)?;
    let one = 1;
    for x in f.units() {
        let y = f.neg(f.add(one, x));
        if x != one && y != one && y != 0 && x != y {
            return parity_code(&f, &[vec![1, 1, 1, 1], vec![0, 1, x, y]]);
        }
    }
    Err(domain(format!("no pair with 1 + x + y = 0 in GF({q})")))
}

/// Columns of a q-ary cyclic Hamming parity check: coordinates of
/// `beta^j`, `beta = alpha^(q-1)`.
fn cyclic_hamming_rows(q: usize, k: usize) -> Result<Rows> {
    let n = (q.pow(k as u32) - 1) / (q - 1);
    if gcd(n, q - 1) != 1 {
        return Err(domain(format!("no cyclic Hamming code: gcd({n}, {}) != 1", q - 1)));
    }
    let small = Field::gf(q as u32)?;
    let big = Field::gf(big_order(q, k)?)?;
    let basis = extension_coordinates(&small, &big)?;
    let beta = big.exp((q - 1) as u64);
    let xs: Vec<FieldElement> = (0..n).map(|j| big.pow(beta, j as u64)).collect();
    Ok(basis.expand_columns(&xs))
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Right cyclic shift of every row by `i`.
fn shift_right(rows: &Rows, i: usize) -> Rows {
    rows.iter()
        .map(|r| {
            let n = r.len();
            (0..n).map(|j| r[(j + n - i % n) % n]).collect()
        })
        .collect()
}

/// Parity check `[H H ... H; H_1 H_2 ... H_c]`.
pub fn cyclic_concatenation(q: usize, k: usize, c: usize) -> Result<Code> {
    let h = cyclic_hamming_rows(q, k)?;
    let n = h[0].len();
    if c < 2 || c > n {
        return Err(domain(format!("c must lie in 2..={n}")));
    }
    let top: Vec<&Rows> = (0..c).map(|_| &h).collect();
    let shifted: Vec<Rows> = (1..=c).map(|i| shift_right(&h, i)).collect();
    let bottom: Vec<&Rows> = shifted.iter().collect();
    let mut rows = hcat(&top);
    rows.extend(hcat(&bottom));
    parity_code(&Field::gf(q as u32)?, &rows)
}

/// Parity check `H^(k,c) = [H 0 H H ... H; 0 H H H_1 ... H_c]`.
pub fn concatenation_kc(q: usize, k: usize, c: usize) -> Result<Code> {
    let h = cyclic_hamming_rows(q, k)?;
    let n = h[0].len();
    if c < 1 || c > n - 1 {
        return Err(domain(format!("c must lie in 1..={}", n - 1)));
    }
    let z = zero_block(k, n);
    let mut top: Vec<&Rows> = vec![&h, &z, &h];
    let mut bottom: Vec<&Rows> = vec![&z, &h, &h];
    let shifted: Vec<Rows> = (1..=c).map(|i| shift_right(&h, i)).collect();
    for s in &shifted {
        top.push(&h);
        bottom.push(s);
    }
    let mut rows = hcat(&top);
    rows.extend(hcat(&bottom));
    parity_code(&Field::gf(q as u32)?, &rows)
}

/// `((H^q_m)^{×l})^{+u}`: `l` copies of the Hamming parity check followed
/// by `u` zero columns.
pub fn rho1_code(q: usize, m: usize, l: usize, u: usize) -> Result<Code> {
    let f = Field::gf(q as u32)?;
    let h = hamming_parity(&f, m)?;
    let z = zero_block(m, u);
    let mut blocks: Vec<&Rows> = (0..l).map(|_| &h).collect();
    blocks.push(&z);
    parity_code(&f, &hcat(&blocks))
}

/// Union of `k` cosets of the q-ary Hamming code (a nonlinear code for
/// `1 < k < q^m`). The cosets are those of the first `k` syndromes in
/// index order.
pub fn hamming_coset_union(q: usize, m: usize, k: usize, guards: &Guards) -> Result<Code> {
    let h = hamming(q, m)?;
    let total = q.pow(m as u32);
    if k == 0 || k > total - 1 {
        return Err(domain(format!("k must lie in 1..={}", total - 1)));
    }
    let f = h.field().clone();
    // Every nonzero syndrome is c times a column, with leader c e_j.
    let mut leaders = vec![vec![0; h.n()]];
    'outer: for j in 0..h.n() {
        for c in f.units() {
            if leaders.len() == k {
                break 'outer;
            }
            let mut v = vec![0; h.n()];
            v[j] = c;
            leaders.push(v);
        }
    }
    let mut acc = h.to_explicit(guards)?;
    for v in leaders.iter().skip(1) {
        acc = acc.union(&h.translate(v, guards)?, guards)?;
    }
    Ok(acc)
}

/// All binary words of length `2g` and weight `g`.
pub fn constant_weight(g: usize) -> Result<Code> {
    let f = Field::gf(2)?;
    let n = 2 * g;
    let words = (0u32..(1 << n))
        .filter(|w| w.count_ones() as usize == g)
        .map(|w| (0..n).map(|i| ((w >> i) & 1) as FieldElement).collect())
        .collect();
    Code::from_codewords(&f, n, words)
}

pub fn golay() -> Result<Code> {
    golay_binary()
}

pub fn golay_half() -> Result<Code> {
    let g = golay_binary()?;
    add_all_one_check(&g)
}

/// Subcode of the codewords whose coordinate sum is zero.
pub fn add_all_one_check(code: &Code) -> Result<Code> {
    let h = code.parity().ok_or_else(|| domain("linear code needed"))?;
    let mut rows = h.row_vecs();
    rows.push(vec![1; code.n()]);
    parity_code(code.field(), &rows)
}

pub fn ternary_golay() -> Result<Code> {
    golay_ternary()
}

/// Binary `(11, 24, 5)` code from the Paley Hadamard matrix of order 12.
pub fn paley_hadamard() -> Result<Code> {
    let p = 11usize;
    let residues: Vec<bool> = (0..p).map(|x| (1..p).any(|y| y * y % p == x && x != 0)).collect();
    let chi = |x: usize| -> i8 {
        if x % p == 0 {
            0
        } else if residues[x % p] {
            1
        } else {
            -1
        }
    };
    // Paley I: H = I + S with S = [[0, 1^T], [-1, Q]], Q_ij = chi(j - i).
    let mut h = vec![vec![0i8; p + 1]; p + 1];
    for (i, row) in h.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            let s = match (i, j) {
                (0, 0) => 0,
                (0, _) => 1,
                (_, 0) => -1,
                _ => chi(j + p - i),
            };
            *x = s + (i == j) as i8;
        }
    }
    for row in h.iter_mut() {
        if row[0] < 0 {
            row.iter_mut().for_each(|x| *x = -*x);
        }
    }
    let to_bits = |row: &[i8], flip: bool| -> Vec<FieldElement> {
        row[1..].iter().map(|&x| ((x < 0) ^ flip) as FieldElement).collect()
    };
    let mut words: Vec<Vec<FieldElement>> = h.iter().map(|r| to_bits(r, false)).collect();
    words.extend(h.iter().map(|r| to_bits(r, true)));
    Code::from_codewords(&Field::gf(2)?, p, words)
}

/// The 2x3 block `K` shifted right `i` times.
fn k_block(i: usize) -> Rows {
    shift_right(&vec![vec![1, 0, 1], vec![0, 1, 1]], i)
}

/// `[15,9,3]` code with parity check
/// `[[K,0,0,K,K],[0,K,0,K,K_1],[0,0,K,K,K_2]]`.
pub fn k_matrix_code() -> Result<Code> {
    let layout: [[Option<usize>; 5]; 3] = [
        [Some(0), None, None, Some(0), Some(0)],
        [None, Some(0), None, Some(0), Some(1)],
        [None, None, Some(0), Some(0), Some(2)],
    ];
    block_code(&layout.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
}

/// Difference matrix `D(2,3)` over Z_3.
pub const D23: [[usize; 6]; 6] = [
    [0, 0, 0, 0, 0, 0],
    [0, 0, 1, 2, 2, 1],
    [0, 1, 0, 1, 2, 2],
    [0, 2, 1, 0, 1, 2],
    [0, 2, 2, 1, 0, 1],
    [0, 1, 2, 2, 1, 0],
];

/// Replace entry `i` of `D(2,3)` (optionally without its zero column) by `K_i`.
pub fn difference_matrix_code(drop_trivial_column: bool) -> Result<Code> {
    let start = drop_trivial_column as usize;
    let layout: Vec<Vec<Option<usize>>> = D23.iter().map(|r| r[start..].iter().map(|&x| Some(x)).collect()).collect();
    block_code(&layout)
}

fn block_code(layout: &[Vec<Option<usize>>]) -> Result<Code> {
    let mut rows = Vec::new();
    for brow in layout {
        let blocks: Vec<Rows> = brow.iter().map(|b| b.map_or_else(|| zero_block(2, 3), k_block)).collect();
        let refs: Vec<&Rows> = blocks.iter().collect();
        rows.extend(hcat(&refs));
    }
    parity_code(&Field::gf(2)?, &rows)
}

/// Simplex-type dual of the q-ary Hamming code.
pub fn hamming_dual(q: usize, m: usize) -> Result<Code> {
    hamming(q, m)?.dual()
}

/// Parity check `H^(q^u)_m ⊗ R` with `R` the parity check of the binary
/// repetition code of length `nb` over GF(q).
pub fn hamming_times_repetition(q: usize, u: usize, m: usize, nb: usize) -> Result<Code> {
    let fa = Field::gf(big_order(q, u)?)?;
    let fb = Field::gf(q as u32)?;
    let rep: Rows = (0..nb - 1)
        .map(|i| {
            let mut r = vec![0; nb];
            r[i] = 1;
            r[i + 1] = fb.neg(1);
            r
        })
        .collect();
    let (big, rows) = kronecker_parity(&fa, &hamming_parity(&fa, m)?, &fb, &rep)?;
    parity_code(&big, &rows)
}
