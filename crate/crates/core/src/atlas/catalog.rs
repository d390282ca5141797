//! The entry table, expected arrays and the build dispatch.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::recipes as r;
use super::{Entry, Expected, Kind, Params, Source};
use crate::codecore::Code;
use crate::error::{Error, Result};
use crate::guards::Guards;

const NO_KEYS: &[&str] = &[];
const ONE_CASE: &[&[i64]] = &[&[]];

macro_rules! entry {
    ($id:literal, $kind:ident, $title:literal, [$($k:literal),*], [$([$($v:expr),*]),*]) => {
        Entry {
            id: $id,
            kind: Kind::$kind,
            title: $title,
            keys: &[$($k),*],
            cases: &[$(&[$($v),*]),*],
        }
    };
    ($id:literal, $kind:ident, $title:literal) => {
        Entry { id: $id, kind: Kind::$kind, title: $title, keys: NO_KEYS, cases: ONE_CASE }
    };
}

pub(super) static ENTRIES: &[Entry] = &[
    entry!("F.1", Family, "q-ary Hamming code", ["q", "m"], [[2, 3], [2, 4], [3, 2], [3, 3], [4, 2], [5, 2]]),
    entry!("F.2", Family, "extended perfect code with d = 4", ["q", "m"], [[2, 3], [2, 4], [4, 2], [8, 2]]),
    entry!("F.3", Family, "punctured q-ary Hamming code", ["q", "m"], [[3, 2], [3, 3], [4, 2], [5, 2]]),
    entry!("F.4", Family, "even half of the binary Hamming code", ["m"], [[3], [4], [5]]),
    entry!("F.5", Family, "conic subcode [q+1, q-2, 4] of a perfect code", ["q"], [[4], [8]]),
    entry!("F.6", Family, "shortened Hamming code", ["q", "m"], [[2, 3], [2, 4], [3, 2], [3, 3], [4, 2]]),
    entry!(
        "F.7",
        Family,
        "self-complementary half of the Hamming code",
        ["m", "i1", "i2"],
        [[4, 1, 2], [4, 2, 3], [6, 1, 2]]
    ),
    entry!(
        "F.8",
        Family,
        "non-self-complementary half of the Hamming code",
        ["m", "i1", "i2"],
        [[4, 0, 1], [4, 0, 3], [6, 0, 1]]
    ),
    entry!("F.9", Family, "extension of the self-complementary half", ["m", "i1", "i2"], [[4, 1, 2], [6, 1, 2]]),
    entry!("F.10", Family, "{00,11}-shortened extended Hamming code", ["m"], [[3], [4], [5]]),
    entry!("F.11", Family, "{000,111}-shortened extended Hamming code", ["m"], [[3], [4], [5]]),
    entry!("F.12", Family, "{00,11}-shortened Hamming code", ["m"], [[3], [4], [5]]),
    entry!("F.13", Family, "{(a,a)}-shortened hyperoval code", ["q"], [[4], [8], [16]]),
    entry!(
        "F.16",
        Family,
        "nested code C^(i) between C^(u) and the Hamming code",
        ["m", "i"],
        [[4, 1], [4, 2], [6, 1], [6, 2], [6, 3]]
    ),
    entry!("F.17", Family, "extended nested code C^(i)*", ["m", "i"], [[4, 1], [4, 2], [6, 2]]),
    entry!("F.18", External, "Preparata-like code (user supplied)", ["m"], [[2]]),
    entry!("F.19", External, "extended Preparata-like code (user supplied)", ["m"], [[2]]),
    entry!("F.20", Family, "primitive binary BCH code with d = 5", ["m"], [[2], [3]]),
    entry!("F.21", Family, "extended primitive BCH code", ["m"], [[2], [3]]),
    entry!(
        "F.22",
        Family,
        "binary cyclic code with generator m_1 m_l",
        ["m", "l"],
        [[5, 3], [5, 5], [5, 7], [5, 13], [7, 5], [7, 9]]
    ),
    entry!(
        "F.23",
        Family,
        "extended cyclic code with generator m_1 m_l",
        ["m", "l"],
        [[5, 5], [5, 7], [5, 13], [7, 9]]
    ),
    entry!(
        "F.24",
        Family,
        "lifted Hamming code C_r(H^q_m)",
        ["q", "m", "r"],
        [[2, 2, 2], [2, 3, 2], [2, 3, 3], [3, 2, 2], [4, 3, 2], [2, 6, 2]]
    ),
    entry!(
        "F.25",
        Family,
        "Kronecker product of Hamming parity checks",
        ["q", "u", "ma", "mb"],
        [[2, 1, 2, 2], [2, 2, 2, 2], [2, 1, 3, 2], [2, 1, 3, 3], [3, 1, 2, 2]]
    ),
    entry!(
        "F.26",
        Family,
        "Kronecker and lifting variants with one array",
        ["q", "a", "b", "u", "v"],
        [
            [2, 1, 3, 2, 1],
            [2, 1, 3, 2, 2],
            [2, 1, 3, 2, 3],
            [2, 1, 3, 2, 4],
            [2, 1, 3, 2, 5],
            [2, 2, 3, 2, 1],
            [2, 2, 3, 2, 2],
            [2, 2, 3, 2, 3],
            [2, 2, 3, 2, 4]
        ]
    ),
    entry!("F.28", Family, "binomial code C^(m,2)", ["m"], [[4], [5], [6], [7], [8]]),
    entry!("F.29", Family, "binomial union C^[m]", ["m"], [[6], [8], [10], [12]]),
    entry!(
        "F.32",
        Family,
        "direct sum of Hamming codes",
        ["q", "m", "u"],
        [[2, 2, 2], [2, 3, 2], [2, 2, 3], [3, 2, 2]]
    ),
    entry!(
        "F.33",
        Family,
        "concatenation of a cyclic Hamming code with its shifts",
        ["q", "k", "c"],
        [[2, 3, 2], [2, 3, 3], [2, 3, 5], [2, 3, 7], [4, 2, 2], [2, 4, 3]]
    ),
    entry!(
        "F.34",
        Family,
        "concatenation H^(k,c)",
        ["q", "k", "c"],
        [[2, 3, 1], [2, 3, 2], [2, 3, 4], [2, 4, 3], [4, 2, 2], [3, 3, 2]]
    ),
    entry!("F.35", Family, "extension of H^(k,c) for c = 2^(k-1)-2 or 2^k-2", ["k", "c"], [[3, 2], [4, 6], [3, 6]]),
    entry!("F.36", Family, "one Latin square code [3,2,2]", ["q"], [[2], [3], [4], [5], [7]]),
    entry!("F.37", Family, "two Latin squares code [4,2,3]", ["q"], [[4], [5], [7], [8]]),
    entry!("F.38", Family, "union of k cosets of a Hamming code", ["q", "m", "k"], [[2, 3, 3], [2, 3, 5], [3, 2, 4]]),
    entry!("F.39", Family, "constant weight code of length 2g and weight g", ["g"], [[1], [2], [3], [4]]),
    entry!(
        "F.40",
        Family,
        "Hamming code with u zero parity columns",
        ["q", "m", "u"],
        [[2, 3, 1], [2, 3, 2], [3, 2, 1]]
    ),
    entry!(
        "F.41",
        Family,
        "l-fold repeated Hamming parity check",
        ["q", "m", "l"],
        [[2, 3, 2], [2, 2, 3], [3, 2, 2], [4, 2, 2]]
    ),
    entry!("F.42", Family, "binary extended Hamming code", ["m"], [[2], [3], [4], [5]]),
    entry!("F.43", Family, "hyperoval code (TF1)", ["q"], [[4], [8]]),
    entry!(
        "F.44",
        Family,
        "dual of a difference matrix code",
        ["q", "m"],
        [[3, 1], [3, 2], [4, 1], [5, 1], [4, 2], [3, 3]]
    ),
    entry!("F.45", Family, "dual of a Latin square code", ["q", "n"], [[4, 3], [5, 3], [5, 4], [7, 4], [8, 5]]),
    entry!("F.46", Family, "external lines of a hyperoval", ["q"], [[4], [8]]),
    entry!("F.49", Family, "lifted ternary [4,2,3] code", ["r"], [[2], [3], [4]]),
    entry!("F.50", Family, "self-complementary [4,2,3] code from D_1", ["q"], [[4], [7], [8], [9]]),
    entry!("F.51", Family, "self-dual [4,2,3] code from D_1, q even", ["q"], [[4], [8], [16]]),
    entry!("S.1", Sporadic, "binary Golay code"),
    entry!("S.2", Sporadic, "punctured binary Golay code"),
    entry!("S.3", Sporadic, "extended binary Golay code"),
    entry!("S.4", Sporadic, "double punctured binary Golay code"),
    entry!("S.5", Sporadic, "half of the binary Golay code"),
    entry!("S.6", Sporadic, "punctured half of the binary Golay code"),
    entry!("S.7", Sporadic, "{00,11}-shortened extended binary Golay code"),
    entry!("S.8", Sporadic, "{000,111}-shortened extended binary Golay code"),
    entry!("S.9", Sporadic, "{00,11}-shortened binary Golay code"),
    entry!("S.10", Sporadic, "ternary Golay code"),
    entry!("S.11", Sporadic, "punctured ternary Golay code"),
    entry!("S.12", Sporadic, "extended ternary Golay code"),
    entry!("S.13", Sporadic, "third part of the ternary Golay code"),
    entry!("S.14", Sporadic, "punctured third part of the ternary Golay code"),
    entry!("S.17", Sporadic, "three Latin squares code [5,2,4]_4"),
    entry!("S.18", Sporadic, "four Latin squares code [6,2,5]_5"),
    entry!("S.19", Sporadic, "Hadamard (11,24,5) code"),
    entry!("S.20", Sporadic, "extended Hadamard (12,24,6) code"),
    entry!("S.21", Sporadic, "[15,9,3] code from the K-matrix layout"),
    entry!("S.22", Sporadic, "[15,9,3] code from D(2,3) without its zero column"),
    entry!("S.23", Sporadic, "extended [16,9,4] K-matrix code"),
    entry!("S.24", Sporadic, "[18,12,3] code from D(2,3)"),
    entry!("S.25", Sporadic, "binomial code C^(5,3)"),
    entry!("S.26", Sporadic, "binomial code C^(6,4)"),
    entry!("S.27", Sporadic, "binomial code C^(7,4)"),
    entry!(
        "N.1",
        Control,
        "Hamming parity check times repetition parity check",
        ["q", "u", "m", "nb"],
        [[2, 1, 2, 4], [2, 1, 3, 4], [2, 1, 3, 5]]
    ),
    entry!("N.2", Control, "extended double punctured binary Golay code"),
    entry!("N.3", Control, "lifted extended Hamming code", ["q", "m", "r"], [[2, 3, 2], [2, 2, 2]]),
    entry!("N.4", Control, "extended cyclic concatenation outside c = 2^(k-1)+1", ["k", "c"], [[3, 2], [3, 3]]),
    entry!("N.5", Control, "extended H^(k,c) outside c in {2^(k-1)-2, 2^k-2}", ["k", "c"], [[3, 1], [3, 3]]),
];

/// Alternative labels for entries.
pub(super) static ALIASES: &[(&str, &str)] =
    &[("F.30", "F.28"), ("F.31", "F.29"), ("F.52", "F.22"), ("F.53", "F.23"), ("S.15", "S.25"), ("S.16", "S.26")];

fn hamming_len(q: u64, m: u64) -> u64 {
    (q.pow(m as u32) - 1) / (q - 1)
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn regular(n: u64, q: u64, b: Vec<u64>, c: Vec<u64>, d: Option<usize>, source: Source) -> Result<Expected> {
    Expected::regular(n as usize, q as usize, b, c, d, source)
}

fn catalog(msg: impl Into<alloc::string::String>) -> Error {
    Error::Catalog(msg.into())
}

fn need(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(catalog(msg))
    }
}

/// Intersection numbers of the lifted and Kronecker families:
/// `b_l = (q^x - q^l)(q^y - q^l)/(q - 1)`, `c_l = q^(l-1)(q^l - 1)/(q - 1)`.
fn lifted_array(q: u64, x: u64, y: u64) -> (Vec<u64>, Vec<u64>) {
    let rho = x.min(y);
    let b =
        (0..rho).map(|l| (q.pow(x as u32) - q.pow(l as u32)) * (q.pow(y as u32) - q.pow(l as u32)) / (q - 1)).collect();
    let c = (1..=rho).map(|l| q.pow(l as u32 - 1) * (q.pow(l as u32) - 1) / (q - 1)).collect();
    (b, c)
}

fn is_prime_power(q: u64) -> bool {
    if q < 2 || q > 256 {
        return false;
    }
    let p = (2..=q).find(|d| q % d == 0).unwrap_or(q);
    let mut x = q;
    while x % p == 0 {
        x /= p;
    }
    x == 1
}

fn is_prime(q: u64) -> bool {
    q >= 2 && (2..q).all(|d| q % d != 0)
}

/// Expected parameters of an entry, from closed forms only.
pub(super) fn expected(id: &str, p: &Params) -> Result<Expected> {
    let g = |k: &str| p.get(k);
    match id {
        "F.1" => {
            let (q, m) = (g("q")?, g("m")?);
            need(is_prime_power(q) && m >= 2, "F.1 needs a prime power q and m >= 2")?;
            let n = hamming_len(q, m);
            regular(n, q, vec![(q - 1) * n], vec![1], Some(3), Source::Printed)
        }
        "F.2" => {
            let (q, m) = (g("q")?, g("m")?);
            need(
                (q == 2 && m >= 2) || (q >= 4 && q.is_power_of_two() && m == 2),
                "F.2 needs q = 2, m >= 2, or q = 2^s >= 4 with m = 2",
            )?;
            let n = hamming_len(q, m);
            let mut e =
                regular(n + 1, q, vec![(q - 1) * (n + 1), (q - 1) * n], vec![1, n + 1], Some(4), Source::Computed)?;
            e.note = Some("c_2 = n + 1 replaces the printed c_2 = 4, which only holds for n = 3");
            Ok(e)
        }
        "F.3" => {
            let (q, m) = (g("q")?, g("m")?);
            need(is_prime_power(q) && q >= 3 && m >= 2, "F.3 needs q >= 3 and m >= 2")?;
            let n = hamming_len(q, m);
            regular(n - 1, q, vec![(q - 1) * (n - 1)], vec![q], Some(2), Source::Printed)
        }
        "F.4" => {
            let m = g("m")?;
            need(m >= 3, "F.4 needs m >= 3")?;
            let n = hamming_len(2, m);
            regular(n, 2, vec![n, n - 1, 1], vec![1, n - 1, n], Some(4), Source::Printed)
        }
        "F.5" => {
            let q = g("q")?;
            need(q >= 4 && q.is_power_of_two() && q <= 256, "F.5 is built for q = 2^s >= 4")?;
            regular(q + 1, q, vec![q * q - 1, q * (q - 1), 1], vec![1, q, q * q - 1], Some(4), Source::Printed)
        }
        "F.6" => {
            let (q, m) = (g("q")?, g("m")?);
            need(is_prime_power(q) && m >= 2 && hamming_len(q, m) >= 4, "F.6 needs a Hamming code of length >= 4")?;
            let n = hamming_len(q, m) - 1;
            regular(n, q, vec![(q - 1) * n, q - 1], vec![1, (q - 1) * n], Some(3), Source::Printed)
        }
        "F.7" | "F.8" => half_expected(g("m")?, g("i1")?, g("i2")?),
        "F.9" => {
            let (m, i1, i2) = (g("m")?, g("i1")?, g("i2")?);
            need(matches!(pair(i1, i2), (1, 2) | (2, 3)), "F.9 extends the self-complementary halves {1,2} and {2,3}")?;
            need(m >= 4 && m % 2 == 0, "F.9 needs even m >= 4")?;
            let n = hamming_len(2, m);
            regular(n + 1, 2, vec![n + 1, n, (n + 1) / 2, 1], vec![1, (n + 1) / 2, n, n + 1], Some(4), Source::Printed)
        }
        "F.10" => {
            let m = g("m")?;
            need(m >= 3, "F.10 needs m >= 3")?;
            let n = (1 << m) - 2;
            regular(n, 2, vec![n, n - 2, 2], vec![2, n - 2, n], Some(2), Source::Printed)
        }
        "F.11" => {
            let m = g("m")?;
            need(m >= 3, "F.11 needs m >= 3")?;
            let n = (1 << m) - 3;
            regular(n, 2, vec![n - 1, 3], vec![1, n - 1], Some(1), Source::Printed)
        }
        "F.12" => {
            let m = g("m")?;
            need(m >= 3, "F.12 needs m >= 3")?;
            let n = (1 << m) - 1;
            regular(n - 2, 2, vec![n - 3, 2], vec![2, n - 3], Some(1), Source::Printed)
        }
        "F.13" => {
            let q = g("q")?;
            need(q >= 4 && q.is_power_of_two() && q <= 256, "F.13 needs q = 2^s >= 4")?;
            let mut e =
                regular(q, q, vec![q * (q - 1), (q * q - 4) / 2], vec![2, q * (q - 2) / 2], Some(2), Source::Computed)?;
            e.note = Some(
                "b_1 = (q^2 - 4)/2 and c_2 = q(q - 2)/2; the printed b_1 = (q - 1)(q - 2), c_2 = q \
                 agree only at q = 4 and give cell sizes that do not sum to q^2 otherwise",
            );
            Ok(e)
        }
        "F.16" | "F.17" => {
            let (m, i) = (g("m")?, g("i")?);
            need(m >= 4 && m % 2 == 0 && i <= m / 2, "the nested family needs even m >= 4 and i <= m/2")?;
            let big = 1u64 << m;
            let n = big - 1;
            let (mut b, mut c) = if i == 0 {
                (vec![n], vec![1])
            } else {
                let s = 1u64 << (m - i);
                (vec![n, big - s, 1], vec![1, s, n])
            };
            let mut len = n;
            let mut d = 3;
            if id == "F.17" {
                b.insert(0, big);
                c.push(big);
                len = big;
                d = 4;
            }
            let src = if i == 0 { Source::Computed } else { Source::Printed };
            let mut e = regular(len, 2, b, c, Some(d), src)?;
            if i == 0 {
                e.note = Some("i = 0 is the Hamming code itself; the general formula degenerates (b_1 = 0)");
            }
            Ok(e)
        }
        "F.18" | "F.19" => {
            let m = g("m")?;
            need(m >= 2, "Preparata-like codes need m >= 2")?;
            let n = (1u64 << (2 * m)) - 1;
            let mut e = if id == "F.18" {
                regular(n, 2, vec![n, n - 1, 1], vec![1, 2, n], Some(5), Source::Computed)?
            } else {
                regular(n + 1, 2, vec![n + 1, n, n - 1, 1], vec![1, 2, n, n + 1], Some(6), Source::Computed)?
            };
            e.note = Some(
                "c_3 = n replaces the printed c_3 = 3; with d fixing b_0, b_1, c_1, c_2 the cell sizes \
                 must sum to 2^n / N, which forces b_2 / c_3 = 1 / n",
            );
            Ok(e)
        }
        "F.20" | "F.21" => {
            let m = g("m")?;
            need(m >= 2, "BCH family needs m >= 2")?;
            bch_expected((1u64 << (2 * m + 1)) - 1, id == "F.21")
        }
        "F.22" | "F.23" => {
            let (m, l) = (g("m")?, g("l")?);
            need(m >= 3 && m % 2 == 1, "two-zero cyclic codes are listed for odd m")?;
            need(l >= 2, "exponent l must be >= 2")?;
            bch_expected((1u64 << m) - 1, id == "F.23")
        }
        "F.24" => {
            let (q, m, r) = (g("q")?, g("m")?, g("r")?);
            need(is_prime_power(q) && m >= 2 && r >= 2, "F.24 needs q a prime power, m >= 2, r >= 2")?;
            let (b, c) = lifted_array(q, r, m);
            regular(hamming_len(q, m), q.pow(r as u32), b, c, Some(3), Source::Formula)
        }
        "F.25" => {
            let (q, u, ma, mb) = (g("q")?, g("u")?, g("ma")?, g("mb")?);
            need(is_prime_power(q) && u >= 1 && ma >= 2 && mb >= 2, "F.25 needs u >= 1 and ma, mb >= 2")?;
            let qu = q.pow(u as u32);
            let n = hamming_len(qu, ma) * hamming_len(q, mb);
            let (b, c) = lifted_array(q, u * ma, mb);
            regular(n, qu, b, c, Some(3), Source::Formula)
        }
        "F.26" => {
            let (q, a, b, u, v) = (g("q")?, g("a")?, g("b")?, g("u")?, g("v")?);
            need(is_prime(q) && a >= 1 && b >= 1 && u >= 1, "F.26 needs a prime q and naturals a, b, u")?;
            let nb = hamming_len(q, b);
            let (n, alphabet) = match v {
                1 => (nb, q.pow((u * a) as u32)),
                2 => (hamming_len(q, u * a), q.pow(b as u32)),
                3 => (nb * hamming_len(q, u * a), q),
                4 => (nb * hamming_len(q.pow(a as u32), u), q.pow(a as u32)),
                5 => (nb * hamming_len(q.pow(u as u32), a), q.pow(u as u32)),
                _ => return Err(catalog("F.26 variant v must lie in 1..=5")),
            };
            let (bb, cc) = lifted_array(q, b, u * a);
            regular(n, alphabet, bb, cc, Some(3), Source::Formula)
        }
        "F.28" => {
            let m = g("m")?;
            need(m >= 4, "C^(m,2) needs m >= 4")?;
            let rho = m / 2;
            let b = (0..rho).map(|i| binom(m - 2 * i, 2)).collect();
            let c = (1..=rho).map(|i| binom(2 * i, 2)).collect();
            regular(binom(m, 2), 2, b, c, Some(3), Source::Formula)
        }
        "F.29" => {
            let m = g("m")?;
            need(m >= 6 && m % 2 == 0, "C^[m] needs even m >= 6")?;
            let rho = m / 4;
            let b = (0..rho).map(|i| binom(m - 2 * i, 2)).collect();
            let mut c: Vec<u64> = (1..=rho).map(|i| binom(2 * i, 2)).collect();
            if m % 4 == 0 {
                c[rho as usize - 1] *= 2;
            }
            regular(binom(m, 2), 2, b, c, Some(3), Source::Formula)
        }
        "F.32" => {
            let (q, m, u) = (g("q")?, g("m")?, g("u")?);
            need(is_prime_power(q) && m >= 2 && u >= 1, "F.32 needs m >= 2 and u >= 1")?;
            let n = hamming_len(q, m);
            let b0 = (q - 1) * n;
            regular(u * n, q, (0..u).map(|i| (u - i) * b0).collect(), (1..=u).collect(), Some(3), Source::Formula)
        }
        "F.33" => {
            let (q, k, c) = (g("q")?, g("k")?, g("c")?);
            let n = hamming_len(q, k);
            need(c >= 2 && c <= n, "F.33 needs 2 <= c <= n")?;
            regular(
                n * c,
                q,
                vec![(q - 1) * n * c, ((q - 1) * n - c + 2) * (c - 1)],
                vec![1, c * (c - 1)],
                Some(3),
                Source::Formula,
            )
        }
        "F.34" => {
            let (q, k, c) = (g("q")?, g("k")?, g("c")?);
            let n = hamming_len(q, k);
            need(c >= 1 && c + 1 <= n, "F.34 needs 1 <= c <= n - 1")?;
            need((q - 1) * n > 1 + c, "F.34 degenerates when (q-1)n <= c + 1")?;
            regular(
                (c + 3) * n,
                q,
                vec![(c + 3) * (q - 1) * n, (c + 2) * ((q - 1) * n - 1 - c)],
                vec![1, (c + 2) * (c + 3)],
                Some(3),
                Source::Formula,
            )
        }
        "F.35" => {
            let (k, c) = (g("k")?, g("c")?);
            need(k >= 3, "F.35 needs k >= 3")?;
            let n = (1u64 << k) - 1;
            let len = (c + 3) * n + 1;
            if c == (1 << (k - 1)) - 2 {
                regular(
                    len,
                    2,
                    vec![len, len - 1, 1 << (2 * k - 2)],
                    vec![1, (c + 2) * (c + 3), len],
                    Some(4),
                    Source::Formula,
                )
            } else if c == (1 << k) - 2 {
                regular(len, 2, vec![len, len - 1], vec![1, len], Some(4), Source::Formula)
            } else {
                Err(catalog("F.35 needs c = 2^(k-1) - 2 or c = 2^k - 2"))
            }
        }
        "F.36" => {
            let q = g("q")?;
            need(is_prime_power(q), "F.36 needs a prime power q")?;
            regular(3, q, vec![3 * (q - 1)], vec![3], Some(2), Source::Printed)
        }
        "F.37" | "F.50" | "F.51" => {
            let q = g("q")?;
            need(is_prime_power(q) && q >= 4, "the [4,2,3] family is built for q >= 4")?;
            if id == "F.51" {
                need(q.is_power_of_two(), "F.51 needs q = 2^r")?;
            }
            regular(4, q, vec![4 * (q - 1), 3 * (q - 3)], vec![1, 12], Some(3), Source::Printed)
        }
        "F.38" => {
            let (q, m, k) = (g("q")?, g("m")?, g("k")?);
            need(is_prime_power(q) && m >= 2, "F.38 needs m >= 2")?;
            let n = hamming_len(q, m);
            need(k >= 1 && k <= (q - 1) * n, "F.38 needs 1 <= k <= (q-1)n")?;
            let d = if k == 1 { Some(3) } else { Some(1) };
            regular(n, q, vec![(q - 1) * n - k + 1], vec![k], d, Source::Printed)
        }
        "F.39" => {
            let gg = g("g")?;
            need((1..=8).contains(&gg), "F.39 is built for 1 <= g <= 8")?;
            let mut b = vec![2 * gg];
            b.extend((1..gg).map(|i| gg - i));
            let c = (1..=gg).map(|i| gg + i).collect();
            let mut e = regular(2 * gg, 2, b, c, Some(2), Source::Computed)?;
            e.note = Some("b_i = g - i for i >= 1; the printed array lists 2g b-entries for covering radius g");
            Ok(e)
        }
        "F.40" => {
            let (q, m, u) = (g("q")?, g("m")?, g("u")?);
            need(is_prime_power(q) && m >= 2 && u >= 1, "F.40 needs m >= 2 and u >= 1")?;
            let n = hamming_len(q, m);
            regular(n + u, q, vec![(q - 1) * n], vec![1], Some(1), Source::Printed)
        }
        "F.41" => {
            let (q, m, l) = (g("q")?, g("m")?, g("l")?);
            need(is_prime_power(q) && m >= 2 && l >= 2, "F.41 needs m >= 2 and l >= 2")?;
            let n = hamming_len(q, m);
            regular(l * n, q, vec![(q - 1) * l * n], vec![l], Some(2), Source::Printed)
        }
        "F.42" => {
            let m = g("m")?;
            need(m >= 2, "F.42 needs m >= 2")?;
            let n = 1u64 << m;
            regular(n, 2, vec![n, n - 1], vec![1, n], Some(4), Source::Printed)
        }
        "F.43" => {
            let q = g("q")?;
            need(q >= 4 && q.is_power_of_two() && q <= 256, "F.43 needs q = 2^r >= 4")?;
            regular(q + 2, q, vec![(q + 2) * (q - 1), q * q - 1], vec![1, q + 2], Some(4), Source::Printed)
        }
        "F.44" => {
            let (q, m) = (g("q")?, g("m")?);
            need(is_prime_power(q) && q >= 3 && m >= 1, "F.44 needs q >= 3 and m >= 1")?;
            let n = q.pow(m as u32);
            regular(n, q, vec![n * (q - 1), n - 1], vec![1, n * (q - 1)], Some(3), Source::Printed)
        }
        "F.45" => {
            let (q, n) = (g("q")?, g("n")?);
            need(is_prime_power(q) && q >= 3 && n >= 3 && n <= q, "F.45 needs 3 <= n <= q")?;
            regular(n, q, vec![n * (q - 1), (q - n + 1) * (n - 1)], vec![1, n * (n - 1)], Some(3), Source::Printed)
        }
        "F.46" => {
            let q = g("q")?;
            need(q >= 4 && q.is_power_of_two() && q <= 256, "F.46 needs q = 2^r >= 4")?;
            let n = q * (q - 1) / 2;
            regular(
                n,
                q,
                vec![(q - 1) * n, (q - 2) * (q + 1) * (q + 2) / 4],
                vec![1, q * (q - 1) * (q - 2) / 4],
                Some(if q == 4 { 4 } else { 3 }),
                Source::Printed,
            )
        }
        "F.49" => {
            let r = g("r")?;
            need(r >= 1, "F.49 needs r >= 1")?;
            if r == 1 {
                return regular(4, 3, vec![8], vec![1], Some(3), Source::Formula);
            }
            let (b, c) = lifted_array(3, r, 2);
            regular(4, 3u64.pow(r as u32), b, c, Some(3), Source::Formula)
        }
        "S.1" => regular(23, 2, vec![23, 22, 21], vec![1, 2, 3], Some(7), Source::Printed),
        "S.2" => regular(22, 2, vec![22, 21, 20], vec![1, 2, 6], Some(6), Source::Printed),
        "S.3" => regular(24, 2, vec![24, 23, 22, 21], vec![1, 2, 3, 24], Some(8), Source::Printed),
        "S.4" => regular(21, 2, vec![21, 20, 16], vec![1, 2, 12], Some(5), Source::Printed),
        "S.5" => regular(23, 2, vec![23, 22, 21, 20, 3, 2, 1], vec![1, 2, 3, 20, 21, 22, 23], Some(8), Source::Printed),
        "S.6" => regular(22, 2, vec![22, 21, 20, 3, 2, 1], vec![1, 2, 3, 20, 21, 22], Some(7), Source::Printed),
        "S.7" => regular(22, 2, vec![22, 21, 20, 16, 6, 2, 1], vec![1, 2, 6, 16, 20, 21, 22], Some(6), Source::Printed),
        "S.8" => regular(21, 2, vec![21, 20, 16, 9, 2, 1], vec![1, 2, 3, 16, 20, 21], Some(5), Source::Printed),
        "S.9" => regular(21, 2, vec![21, 20, 16, 6, 2, 1], vec![1, 2, 6, 16, 20, 21], Some(5), Source::Printed),
        "S.10" => regular(11, 3, vec![22, 20], vec![1, 2], Some(5), Source::Printed),
        "S.11" => regular(10, 3, vec![20, 18], vec![1, 6], Some(4), Source::Printed),
        "S.12" => regular(12, 3, vec![24, 22, 20], vec![1, 2, 12], Some(6), Source::Printed),
        "S.13" => regular(11, 3, vec![22, 20, 18, 2, 1], vec![1, 2, 9, 20, 22], Some(6), Source::Printed),
        "S.14" => regular(10, 3, vec![20, 18, 4, 1], vec![1, 2, 18, 20], Some(5), Source::Printed),
        "S.17" => {
            let mut e = regular(5, 4, vec![15, 12, 1], vec![1, 4, 15], Some(4), Source::Computed)?;
            e.note = Some("b_2 = 1; the printed b_2 = 3 gives cell sizes 1 + 15 + 45 + 9 = 70, not 4^5/16 = 64");
            Ok(e)
        }
        "S.18" => {
            let mut e = Expected::control(6, 5, Some(false), Some(3));
            e.source = Source::Computed;
            e.d = Some(5);
            e.note = Some(
                "not completely regular: rho = 3 < s = 4; the printed {24,20,13;1,2,6} gives cell sizes \
                 summing to 785, not 5^6/25 = 625",
            );
            Ok(e)
        }
        "S.19" => regular(11, 2, vec![11, 10, 3], vec![1, 2, 9], Some(5), Source::Printed),
        "S.20" => regular(12, 2, vec![12, 11, 10, 3], vec![1, 2, 9, 12], Some(6), Source::Printed),
        "S.21" | "S.22" => regular(15, 2, vec![15, 12, 1], vec![1, 4, 15], Some(3), Source::Printed),
        "S.23" => regular(16, 2, vec![16, 15, 12, 1], vec![1, 4, 15, 16], Some(4), Source::Printed),
        "S.24" => regular(18, 2, vec![18, 15], vec![1, 6], Some(3), Source::Printed),
        "S.25" => regular(10, 2, vec![10, 9, 4], vec![1, 6, 10], Some(4), Source::Printed),
        "S.26" => regular(15, 2, vec![15, 8, 1], vec![1, 8, 15], Some(3), Source::Printed),
        "S.27" => regular(35, 2, vec![35, 16], vec![1, 20], Some(3), Source::Printed),
        "N.1" => {
            let (q, u, m, nb) = (g("q")?, g("u")?, g("m")?, g("nb")?);
            need(is_prime_power(q) && u >= 1 && m >= 2, "N.1 needs u >= 1 and m >= 2")?;
            let qu = q.pow(u as u32);
            let na = hamming_len(qu, m);
            need(nb >= 4 && nb <= (qu - 1) * na + 1, "N.1 needs 4 <= nb <= (q^u - 1) n_a + 1")?;
            Ok(Expected::control(na * nb, qu, Some(true), Some(nb as usize - 1)))
        }
        "N.2" => Ok(Expected::control(22, 2, Some(false), None)),
        "N.3" => {
            let (q, m, r) = (g("q")?, g("m")?, g("r")?);
            need(q == 2 && m >= 2 && r >= 2, "N.3 is built for binary Hamming codes, m >= 2, r >= 2")?;
            Ok(Expected::control(hamming_len(q, m) + 1, q.pow(r as u32), Some(true), None))
        }
        "N.4" => {
            let (k, c) = (g("k")?, g("c")?);
            let n = hamming_len(2, k);
            need(c >= 2 && c <= n && c != (1 << (k - 1)) + 1, "N.4 needs c != 2^(k-1) + 1")?;
            Ok(Expected::control(n * c + 1, 2, None, None))
        }
        "N.5" => {
            let (k, c) = (g("k")?, g("c")?);
            let n = hamming_len(2, k);
            need(
                c >= 1 && c + 1 <= n && c != (1 << (k - 1)) - 2 && c != (1 << k) - 2,
                "N.5 needs c outside {2^(k-1)-2, 2^k-2}",
            )?;
            Ok(Expected::control((c + 3) * n + 1, 2, None, None))
        }
        _ => Err(catalog(format!("unknown catalog id {id}"))),
    }
}

fn pair(i1: u64, i2: u64) -> (u64, u64) {
    (i1.min(i2), i1.max(i2))
}

fn half_expected(m: u64, i1: u64, i2: u64) -> Result<Expected> {
    need(m >= 4 && m % 2 == 0, "halves of Hamming codes need even m >= 4")?;
    need(i1 != i2 && i1 < 4 && i2 < 4, "i1, i2 must be distinct residues mod 4")?;
    let n = hamming_len(2, m);
    match pair(i1, i2) {
        (1, 2) | (2, 3) => regular(n, 2, vec![n, (n + 1) / 2, 1], vec![1, (n + 1) / 2, n], Some(3), Source::Printed),
        (0, 1) | (0, 3) => regular(n, 2, vec![n, (n - 3) / 2, 1], vec![1, (n - 3) / 2, n], Some(3), Source::Printed),
        (0, 2) => regular(n, 2, vec![n, n - 1, 1], vec![1, n - 1, n], Some(4), Source::Printed),
        _ => regular(n, 2, vec![n], vec![1], Some(3), Source::Printed),
    }
}

fn bch_expected(n: u64, extended: bool) -> Result<Expected> {
    if extended {
        regular(n + 1, 2, vec![n + 1, n, n - 1, (n + 3) / 2], vec![1, 2, (n - 1) / 2, n + 1], Some(6), Source::Printed)
    } else {
        regular(n, 2, vec![n, n - 1, (n + 3) / 2], vec![1, 2, (n - 1) / 2], Some(5), Source::Printed)
    }
}

/// Build the code of an entry. `expected` has already validated the
/// parameters.
pub(super) fn construct(id: &str, p: &Params, e: &Expected, guards: &Guards) -> Result<Code> {
    let g = |k: &str| p.get(k).map(|v| v as usize);
    if e.n as u64 > MAX_LENGTH {
        return Err(Error::Resource { guard: "max_length", needed: e.n as u128, limit: MAX_LENGTH as u128 });
    }
    if e.q > 256 {
        return Err(Error::Resource { guard: "max_field_order", needed: e.q as u128, limit: 256 });
    }
    match id {
        "F.1" => r::hamming(g("q")?, g("m")?),
        "F.2" => r::extended_perfect(g("q")?, g("m")?),
        "F.3" => {
            let h = r::hamming(g("q")?, g("m")?)?;
            h.puncture(h.n() - 1)
        }
        "F.4" => r::even_half(g("m")?),
        "F.5" => r::conic(g("q")?),
        "F.6" => r::hamming(g("q")?, g("m")?)?.shorten(0),
        "F.7" | "F.8" => r::half_hamming(g("m")?, g("i1")?, g("i2")?),
        "F.9" => r::half_hamming(g("m")?, g("i1")?, g("i2")?)?.extend(),
        "F.10" => r::shortened_extended_00_11(g("m")?, guards),
        "F.11" => r::shortened_extended_000_111(g("m")?, guards),
        "F.12" => r::shortened_perfect_00_11(g("m")?, guards),
        "F.13" => r::shortened_hyperoval(g("q")?, guards),
        "F.16" => r::nested(g("m")?, g("i")?),
        "F.17" => r::nested(g("m")?, g("i")?)?.extend(),
        "F.18" | "F.19" => Err(catalog(format!(
            "{id} is an external entry: supply the codewords and check them against the expected array"
        ))),
        "F.20" => r::two_zero_cyclic(2 * g("m")? + 1, 3),
        "F.21" => r::two_zero_cyclic(2 * g("m")? + 1, 3)?.extend(),
        "F.22" => r::two_zero_cyclic(g("m")?, g("l")? as u64),
        "F.23" => r::two_zero_cyclic(g("m")?, g("l")? as u64)?.extend(),
        "F.24" => r::lifted_hamming(g("q")?, g("m")?, g("r")?),
        "F.25" => r::kronecker_hamming(g("q")?, g("u")?, g("ma")?, g("mb")?),
        "F.26" => r::kronecker_variant(g("q")?, g("a")?, g("b")?, g("u")?, g("v")?),
        "F.28" => r::binomial(g("m")?, 2),
        "F.29" => r::binomial_union(g("m")?),
        "F.32" => r::hamming_direct_sum(g("q")?, g("m")?, g("u")?, guards),
        "F.33" => r::cyclic_concatenation(g("q")?, g("k")?, g("c")?),
        "F.34" => r::concatenation_kc(g("q")?, g("k")?, g("c")?),
        "F.35" => r::concatenation_kc(2, g("k")?, g("c")?)?.extend(),
        "F.36" => r::one_latin_square(g("q")?),
        "F.37" => r::two_latin_squares(g("q")?),
        "F.38" => r::hamming_coset_union(g("q")?, g("m")?, g("k")?, guards),
        "F.39" => r::constant_weight(g("g")?),
        "F.40" => r::rho1_code(g("q")?, g("m")?, 1, g("u")?),
        "F.41" => r::rho1_code(g("q")?, g("m")?, g("l")?, 0),
        "F.42" => r::hamming(2, g("m")?)?.extend(),
        "F.43" => r::hyperoval(g("q")?),
        "F.44" => r::difference_matrix_dual(g("q")?, g("m")?),
        "F.45" => r::latin_dual(g("q")?, g("n")?),
        "F.46" => r::external_lines(g("q")?),
        "F.49" => r::lifted_hamming(3, 2, g("r")?),
        "F.50" | "F.51" => r::d1_matrix_code(g("q")?),
        "S.1" => r::golay(),
        "S.2" => r::golay()?.puncture(22),
        "S.3" => r::golay()?.extend(),
        "S.4" => r::golay()?.puncture_many(&[21, 22]),
        "S.5" => r::golay_half(),
        "S.6" => r::golay_half()?.puncture(22),
        "S.7" => r::golay()?.extend()?.s_shorten(&[vec![0, 0], vec![1, 1]], &[0, 1], guards),
        "S.8" => r::golay()?.extend()?.s_shorten(&[vec![0, 0, 0], vec![1, 1, 1]], &[0, 1, 2], guards),
        "S.9" => r::golay()?.s_shorten(&[vec![0, 0], vec![1, 1]], &[0, 1], guards),
        "S.10" => r::ternary_golay(),
        "S.11" => r::ternary_golay()?.puncture(10),
        "S.12" => r::ternary_golay()?.extend(),
        "S.13" => r::add_all_one_check(&r::ternary_golay()?),
        "S.14" => r::add_all_one_check(&r::ternary_golay()?)?.puncture(10),
        "S.17" => r::hamming_dual(4, 2),
        "S.18" => r::hamming_dual(5, 2),
        "S.19" => r::paley_hadamard(),
        "S.20" => r::paley_hadamard()?.extend(),
        "S.21" => r::k_matrix_code(),
        "S.22" => r::difference_matrix_code(true),
        "S.23" => r::k_matrix_code()?.extend(),
        "S.24" => r::difference_matrix_code(false),
        "S.25" => r::binomial(5, 3),
        "S.26" => r::binomial(6, 4),
        "S.27" => r::binomial(7, 4),
        "N.1" => r::hamming_times_repetition(g("q")?, g("u")?, g("m")?, g("nb")?),
        "N.2" => r::golay()?.puncture_many(&[21, 22])?.extend(),
        "N.3" => r::hamming(g("q")?, g("m")?)?
            .extend()?
            .lift(&crate::fieldkit::Field::gf((g("q")? as u32).pow(g("r")? as u32))?),
        "N.4" => r::cyclic_concatenation(2, g("k")?, g("c")?)?.extend(),
        "N.5" => r::concatenation_kc(2, g("k")?, g("c")?)?.extend(),
        _ => Err(catalog(format!("unknown catalog id {id}"))),
    }
}

/// Longest code any recipe is asked to build.
pub(super) const MAX_LENGTH: u64 = 4096;

/// Reject builds whose analysis would exceed the guards: the syndrome space
/// for linear codes, the ambient space otherwise.
pub(super) fn check_size(code: &Code, guards: &Guards) -> Result<()> {
    let q = code.q() as u128;
    let (guard, exp, limit) = match code.redundancy() {
        Some(r) => ("max_syndromes", r, guards.max_syndromes),
        None => ("max_vectors", code.n(), guards.max_vectors),
    };
    let needed = q.checked_pow(exp as u32).unwrap_or(u128::MAX);
    if needed > limit as u128 {
        return Err(Error::Resource { guard, needed, limit: limit as u128 });
    }
    Ok(())
}
