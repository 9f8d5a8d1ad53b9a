//! Coefficients: naturals kept inline while they fit in a word, so that
//! cloning and arithmetic on typical ordinals does not allocate.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

/// Invariant: `Big` only holds values above `u64::MAX`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub(super) enum Natural {
    Small(u64),
    Big(Arc<BigUint>),
}

impl Natural {
    pub(super) fn from_big(n: BigUint) -> Self {
        match n.to_u64() {
            Some(v) => Natural::Small(v),
            None => Natural::Big(Arc::new(n)),
        }
    }

    pub(super) fn to_big(&self) -> BigUint {
        match self {
            Natural::Small(v) => BigUint::from(*v),
            Natural::Big(b) => (**b).clone(),
        }
    }

    pub(super) fn is_zero(&self) -> bool {
        matches!(self, Natural::Small(0))
    }

    pub(super) fn is_one(&self) -> bool {
        matches!(self, Natural::Small(1))
    }

    pub(super) fn add(&self, other: &Natural) -> Natural {
        match (self, other) {
            (Natural::Small(a), Natural::Small(b)) if a.checked_add(*b).is_some() => {
                Natural::Small(a + b)
            }
            _ => Natural::from_big(self.to_big() + other.to_big()),
        }
    }

    pub(super) fn mul(&self, other: &Natural) -> Natural {
        match (self, other) {
            (Natural::Small(a), Natural::Small(b)) if a.checked_mul(*b).is_some() => {
                Natural::Small(a * b)
            }
            _ => Natural::from_big(self.to_big() * other.to_big()),
        }
    }

    /// `self − 1`; `self` must be positive.
    pub(super) fn pred(&self) -> Natural {
        match self {
            Natural::Small(v) => Natural::Small(v - 1),
            Natural::Big(b) => Natural::from_big(&**b - 1u8),
        }
    }
}

impl Ord for Natural {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Natural::Small(a), Natural::Small(b)) => a.cmp(b),
            (Natural::Small(_), Natural::Big(_)) => Ordering::Less,
            (Natural::Big(_), Natural::Small(_)) => Ordering::Greater,
            (Natural::Big(a), Natural::Big(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for Natural {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Natural::Small(v) => write!(f, "{v}"),
            Natural::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
