use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::rational::format_dyadic;
use crate::{Error, Result};

/// The open interval `(lo, lo + 2^-depth)` fixed by a bit prefix of length
/// `depth`: the prefix value is the initial point and every unspecified
/// later bit may be 0 or 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DyadicInterval {
    lo: BigRational,
    depth: u32,
}

impl DyadicInterval {
    /// Interval for the bit prefix `.b1 b2 … bn`.
    pub fn from_prefix(prefix: &[bool]) -> Self {
        let numer = prefix
            .iter()
            .fold(BigInt::zero(), |acc, &b| (acc << 1) + u8::from(b));
        let depth = prefix.len() as u32;
        Self {
            lo: BigRational::new(numer, BigInt::one() << depth),
            depth,
        }
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> BigRational {
        &self.lo + self.width()
    }

    pub fn width(&self) -> BigRational {
        BigRational::new(BigInt::one(), BigInt::one() << self.depth)
    }

    /// Prefix length; the width is `2^-depth`.
    pub fn depth(&self) -> u32 {
        self.depth
    }

    /// Membership in the closed hull `[lo, hi]`.
    pub fn hull_contains(&self, x: &BigRational) -> bool {
        *x >= self.lo && *x <= self.hi()
    }

    /// True when `self` lies inside the closed hull of `outer`.
    pub fn nested_in(&self, outer: &DyadicInterval) -> bool {
        outer.hull_contains(&self.lo) && outer.hull_contains(&self.hi())
    }
}

impl fmt::Display for DyadicInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lo = format_dyadic(&self.lo).expect("dyadic endpoint");
        let hi = format_dyadic(&self.hi()).expect("dyadic endpoint");
        write!(f, "({lo}, {hi})")
    }
}

/// Parses a star string such as `.110***` or `.110****…` into the interval
/// its bit prefix determines.
pub fn parse_star_string(text: &str) -> Result<DyadicInterval> {
    let text = text.trim();
    let body = text
        .strip_suffix('…')
        .or_else(|| text.strip_suffix('⋯'))
        .or_else(|| text.strip_suffix("..."))
        .unwrap_or(text);
    let Some(rest) = body.strip_prefix('.') else {
        return Err(Error::parse(0, "star string must start with '.'"));
    };
    let prefix_len = rest.bytes().take_while(|b| matches!(b, b'0' | b'1')).count();
    let stars = &rest[prefix_len..];
    if stars.is_empty() {
        return Err(Error::parse(1 + prefix_len, "expected at least one '*'"));
    }
    if let Some(bad) = stars.bytes().position(|b| b != b'*') {
        return Err(Error::parse(
            1 + prefix_len + bad,
            format!("unexpected {:?} in star string", &stars[bad..bad + 1]),
        ));
    }
    let prefix: Vec<bool> = rest[..prefix_len].bytes().map(|b| b == b'1').collect();
    Ok(DyadicInterval::from_prefix(&prefix))
}
