//! Parsing and rendering of exact rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Parses `n`, `-n`, `p/q` or `-p/q` (optionally with `+`) into a reduced rational.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let text = text.trim();
    let (num_text, den_text) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let num = parse_int(num_text, 0)?;
    let den = match den_text {
        Some(d) => parse_int(d, num_text.len() + 1)?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::domain("zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

fn parse_int(text: &str, offset: usize) -> Result<BigInt> {
    let digits = text.strip_prefix(['+', '-']).unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse(offset, format!("expected an integer, found {text:?}")));
    }
    text.parse::<BigInt>()
        .map_err(|e| Error::parse(offset, e.to_string()))
}

/// Renders `p/q` in lowest terms, or just `p` for integers.
pub fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Decimal expansion truncated toward zero after `digits` fractional digits.
///
/// Exact values print without a marker; truncated ones end in `…`.
pub fn format_decimal(q: &BigRational, digits: usize) -> String {
    let negative = q.is_negative();
    let abs = q.abs();
    let (int_part, mut rem) = abs.numer().div_rem(abs.denom());
    let den = abs.denom();
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    out.push_str(&int_part.to_string());
    if rem.is_zero() {
        return out;
    }
    out.push('.');
    let ten = BigInt::from(10);
    for _ in 0..digits {
        rem *= &ten;
        let (d, r) = rem.div_rem(den);
        out.push_str(&d.to_string());
        rem = r;
        if rem.is_zero() {
            return out;
        }
    }
    if out.ends_with('.') {
        out.pop();
    }
    out.push('…');
    out
}

/// Exact decimal rendering of a rational whose denominator is a power of two.
///
/// Returns `None` for non-dyadic input.
pub fn format_dyadic(q: &BigRational) -> Option<String> {
    let den = q.denom();
    let is_pow2 = den.is_positive() && (den & (den - BigInt::one())).is_zero();
    if !is_pow2 {
        return None;
    }
    let bits = den.bits().saturating_sub(1) as usize;
    Some(format_decimal(q, bits.max(1)))
}
