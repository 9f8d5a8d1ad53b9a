//! Eventually-periodic two-way binary sequences and their exact values.
//!
//! A two-way sequence has a left part (bits at indices 0, 1, 2, … leftward
//! from the binary point) and a right part (bits at indices 1, 2, 3, …
//! rightward). Left parts are read as two's-complement style 2-adic
//! integers, so an eventually-periodic left part denotes a rational:
//!
//! ```text
//! value = b + a·2^ln / (1 − 2^lp)
//! ```
//!
//! where `b` is the preperiod read as a binary integer of length `ln` and `a`
//! the period of length `lp`. Right parts are ordinary binary fractions. The
//! value of a [`UniversalRational`] is the sum of both sides.
//!
//! Text notation puts repeat blocks in parentheses: `(1)00101.` is −27 and
//! `(0)10011.(10)` is 59/3. Omitted repeat blocks default to `(0)`.

mod index_set;
mod notation;
mod periodic;
pub mod sweep;

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

pub use index_set::{IndexSetView, Part, PeriodicTail};
pub use notation::{parse_left, parse_right, parse_universal};
pub use periodic::{normalize, Orientation, PeriodicBits};

/// Bits leftward of the binary point, index 0 first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LeftPart(PeriodicBits);

/// Bits rightward of the binary point, index 1 first.
///
/// Canonical right parts have a value in `[0,1)` and, unless zero, a
/// nonterminating expansion. Raw forms (from parsing or [`UniversalRational::flip`])
/// may violate this, e.g. `.(1)` with value 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RightPart(PeriodicBits);

/// A two-way sequence with eventually-periodic left and right parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UniversalRational {
    left: LeftPart,
    right: RightPart,
}

fn pow2(exp: usize) -> BigInt {
    BigInt::one() << exp
}

fn lsb_first_value(bits: &[bool]) -> BigInt {
    bits.iter()
        .rev()
        .fold(BigInt::zero(), |acc, &b| (acc << 1) + u8::from(b))
}

fn msb_first_value(bits: &[bool]) -> BigInt {
    bits.iter()
        .fold(BigInt::zero(), |acc, &b| (acc << 1) + u8::from(b))
}

impl LeftPart {
    pub fn new(bits: PeriodicBits) -> Self {
        Self(bits)
    }

    pub fn bits(&self) -> &PeriodicBits {
        &self.0
    }

    /// Two's-complement encoding: nonnegative integers end in `(0)`,
    /// negative ones in `(1)`.
    pub fn from_integer(z: &BigInt) -> Self {
        let two = BigInt::from(2);
        let minus_one = -BigInt::one();
        let mut z = z.clone();
        let mut pre = Vec::new();
        while !z.is_zero() && z != minus_one {
            pre.push(z.is_odd());
            z = z.div_floor(&two);
        }
        Self(PeriodicBits::minimized(pre, vec![z == minus_one]))
    }

    /// `b + a·2^ln / (1 − 2^lp)`; reduces to `b` for an all-zero period.
    pub fn value(&self) -> BigRational {
        let pre = self.0.preperiod();
        let period = self.0.period();
        let b = lsb_first_value(pre);
        let a = lsb_first_value(period);
        let tail = BigRational::new(a * pow2(pre.len()), BigInt::one() - pow2(period.len()));
        BigRational::from_integer(b) + tail
    }

    /// Integer formed by the lowest `n` bits.
    pub fn low_bits(&self, n: usize) -> BigInt {
        lsb_first_value(&self.0.prefix(n))
    }
}

impl RightPart {
    pub fn new(bits: PeriodicBits) -> Self {
        Self(bits)
    }

    pub fn zero() -> Self {
        Self(PeriodicBits::constant(false))
    }

    pub fn bits(&self) -> &PeriodicBits {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_constant(false)
    }

    /// Bit at 1-based `index`; index 0 is not a right-side position.
    pub fn bit(&self, index: usize) -> bool {
        assert!(index >= 1, "right-side bits are 1-indexed");
        self.0.bit(index - 1)
    }

    /// Canonical nonterminating expansion of `q ∈ (0,1)` by binary long
    /// division with remainder-cycle detection.
    pub fn from_fraction(q: &BigRational) -> Result<Self> {
        if !q.is_positive() || *q >= BigRational::one() {
            return Err(Error::domain(format!(
                "fraction {} is outside (0,1)",
                crate::rational::format_rational(q)
            )));
        }
        let den = q.denom();
        let mut rem = q.numer().clone();
        let mut seen: HashMap<BigInt, usize> = HashMap::new();
        let mut digits = Vec::new();
        let (pre, period) = loop {
            if rem.is_zero() {
                break (digits, vec![false]);
            }
            if let Some(&start) = seen.get(&rem) {
                let period = digits.split_off(start);
                break (digits, period);
            }
            seen.insert(rem.clone(), digits.len());
            rem <<= 1;
            let bit = rem >= *den;
            if bit {
                rem -= den;
            }
            digits.push(bit);
        };
        Ok(Self::canonical(PeriodicBits::minimized(pre, period)))
    }

    fn canonical(bits: PeriodicBits) -> Self {
        Self(normalize(&bits, Orientation::Right))
    }

    /// Limit of the partial sums, `(b·(2^lp − 1) + a) / (2^ln·(2^lp − 1))`.
    pub fn value(&self) -> BigRational {
        let pre = self.0.preperiod();
        let period = self.0.period();
        let b = msb_first_value(pre);
        let a = msb_first_value(period);
        let cycle = pow2(period.len()) - BigInt::one();
        BigRational::new(b * &cycle + a, pow2(pre.len()) * cycle)
    }

    /// Canonical right parts: zero, or a nonterminating expansion of a value
    /// strictly inside `(0,1)`.
    pub fn is_canonical(&self) -> bool {
        if self.is_zero() {
            return true;
        }
        self.0.period() != [false] && !self.0.is_constant(true)
    }
}

impl UniversalRational {
    pub fn new(left: LeftPart, right: RightPart) -> Self {
        Self { left, right }
    }

    pub fn left(&self) -> &LeftPart {
        &self.left
    }

    pub fn right(&self) -> &RightPart {
        &self.right
    }

    /// Canonical two-way form: `floor(q)` on the left in two's complement,
    /// the fractional part on the right.
    pub fn from_rational(q: &BigRational) -> Self {
        let floor = q.floor();
        let frac = q - &floor;
        let right = if frac.is_zero() {
            RightPart::zero()
        } else {
            RightPart::from_fraction(&frac).expect("fractional part lies in (0,1)")
        };
        Self {
            left: LeftPart::from_integer(floor.numer()),
            right,
        }
    }

    pub fn value(&self) -> BigRational {
        self.left.value() + self.right.value()
    }

    /// The canonical form with the same value.
    pub fn canonical(&self) -> Self {
        Self::from_rational(&self.value())
    }

    /// True when this is the unique canonical encoding of its value.
    pub fn is_canonical(&self) -> bool {
        *self == self.canonical()
    }

    /// Bitwise complement of both sides, canonicalized. Negates the value.
    pub fn complement(&self) -> Self {
        self.complement_raw().canonical()
    }

    /// Bitwise complement of both sides without canonicalization.
    pub fn complement_raw(&self) -> Self {
        Self {
            left: LeftPart(self.left.0.complement()),
            right: RightPart(self.right.0.complement()),
        }
    }

    /// Mirror around the binary point: right index `k` becomes left index
    /// `k − 1` and vice versa.
    ///
    /// With `raw` the mirrored bits are returned as-is and flipping twice is
    /// the identity; otherwise the result is canonicalized.
    pub fn flip(&self, raw: bool) -> Self {
        let mirrored = Self {
            left: LeftPart(self.right.0.clone()),
            right: RightPart(self.left.0.clone()),
        };
        if raw {
            mirrored
        } else {
            mirrored.canonical()
        }
    }
}

impl fmt::Display for LeftPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.", notation::left_text(&self.0))
    }
}

impl fmt::Display for RightPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, ".{}", notation::right_text(&self.0))
    }
}

impl fmt::Display for UniversalRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}.{}",
            notation::left_text(&self.left.0),
            notation::right_text(&self.right.0)
        )
    }
}

pub fn decode_left(left: &LeftPart) -> BigRational {
    left.value()
}

pub fn decode_right(right: &RightPart) -> BigRational {
    right.value()
}

pub fn decode_universal(u: &UniversalRational) -> BigRational {
    u.value()
}

pub fn encode_integer(z: &BigInt) -> LeftPart {
    LeftPart::from_integer(z)
}

pub fn encode_fraction(q: &BigRational) -> Result<RightPart> {
    RightPart::from_fraction(q)
}

pub fn encode_universal(q: &BigRational) -> UniversalRational {
    UniversalRational::from_rational(q)
}

#[cfg(test)]
mod tests;
