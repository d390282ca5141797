//! Exact arithmetic: finite fields, polynomials over them, cyclotomic
//! machinery, Krawtchouk polynomials and linear algebra over GF(q) and Q.

mod cyclotomic;
mod gf;
mod krawtchouk;
mod linalg;
mod poly;
mod ratlinalg;

pub use cyclotomic::{cyclotomic_coset, cyclotomic_cosets, minimal_polynomial};
pub use gf::{Field, FieldElement, FieldSpec};
pub use krawtchouk::{binomial, binomial_int, krawtchouk, krawtchouk_int, KrawtchoukTable};
pub use linalg::Matrix;
pub use poly::Poly;
pub use ratlinalg::{rational_rank, solve_rational, RationalSolution};

/// Exact rational number with arbitrary precision numerator and denominator.
pub type Rational = num_rational::BigRational;

/// Parse `"p/q"` or `"p"` into a [`Rational`].
pub fn parse_rational(s: &str) -> crate::Result<Rational> {
    use num_bigint::BigInt;
    use num_traits::Zero;
    let s = s.trim();
    let bad = || crate::error::format_err(alloc::format!("malformed rational `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num = BigInt::parse_bytes(num.as_bytes(), 10).ok_or_else(bad)?;
    let den = BigInt::parse_bytes(den.as_bytes(), 10).ok_or_else(bad)?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Render a rational as `"p/q"`, or `"p"` when integral.
pub fn format_rational(r: &Rational) -> alloc::string::String {
    if r.is_integer() {
        alloc::format!("{}", r.numer())
    } else {
        alloc::format!("{}/{}", r.numer(), r.denom())
    }
}
