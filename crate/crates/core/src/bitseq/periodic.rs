use std::fmt;

use crate::{Error, Result};

/// Which side of the binary point a sequence lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// Extends leftward; indices 0, 1, 2, … from the binary point.
    Left,
    /// Extends rightward; indices 1, 2, 3, … from the binary point.
    Right,
}

impl Orientation {
    /// Index of the bit adjacent to the binary point.
    pub fn first_index(self) -> u64 {
        match self {
            Orientation::Left => 0,
            Orientation::Right => 1,
        }
    }
}

/// An eventually-periodic infinite bit sequence: `preperiod` followed by
/// `period` repeated forever.
///
/// Bits are stored in sequence order, nearest to the binary point first.
/// Construction always minimizes both parts, so two values are equal exactly
/// when they describe the same infinite sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PeriodicBits {
    preperiod: Vec<bool>,
    period: Vec<bool>,
}

impl PeriodicBits {
    pub fn new(preperiod: Vec<bool>, period: Vec<bool>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::domain("period must be nonempty"));
        }
        Ok(Self::minimized(preperiod, period))
    }

    /// The sequence with every bit equal to `bit`.
    pub fn constant(bit: bool) -> Self {
        Self {
            preperiod: Vec::new(),
            period: vec![bit],
        }
    }

    pub(crate) fn minimized(mut preperiod: Vec<bool>, period: Vec<bool>) -> Self {
        debug_assert!(!period.is_empty());
        let len = period.len();
        let shortest = (1..=len)
            .filter(|d| len.is_multiple_of(*d))
            .find(|&d| (d..len).all(|i| period[i] == period[i - d]))
            .unwrap_or(len);
        let mut period = period[..shortest].to_vec();
        while let Some(&last) = preperiod.last() {
            if last != period[period.len() - 1] {
                break;
            }
            preperiod.pop();
            period.rotate_right(1);
        }
        Self { preperiod, period }
    }

    pub fn preperiod(&self) -> &[bool] {
        &self.preperiod
    }

    pub fn period(&self) -> &[bool] {
        &self.period
    }

    /// Bit at zero-based position `i` along the sequence.
    pub fn bit(&self, i: usize) -> bool {
        match self.preperiod.get(i) {
            Some(&b) => b,
            None => self.period[(i - self.preperiod.len()) % self.period.len()],
        }
    }

    pub fn prefix(&self, n: usize) -> Vec<bool> {
        (0..n).map(|i| self.bit(i)).collect()
    }

    pub fn is_constant(&self, bit: bool) -> bool {
        self.preperiod.is_empty() && self.period == [bit]
    }

    /// Bitwise complement of the whole sequence.
    pub fn complement(&self) -> Self {
        Self {
            preperiod: self.preperiod.iter().map(|b| !b).collect(),
            period: self.period.iter().map(|b| !b).collect(),
        }
    }
}

impl fmt::Debug for PeriodicBits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = |bits: &[bool]| bits.iter().map(|&b| if b { '1' } else { '0' }).collect::<String>();
        write!(f, "PeriodicBits({}[{}])", s(&self.preperiod), s(&self.period))
    }
}

/// Canonicalizes a sequence for the given side of the binary point.
///
/// Both sides get the minimal preperiod and period. On the right, a
/// terminating expansion `w1(0)` is rewritten to the nonterminating `w0(1)`
/// so that dyadic fractions have exactly one form.
pub fn normalize(bits: &PeriodicBits, orientation: Orientation) -> PeriodicBits {
    let bits = PeriodicBits::minimized(bits.preperiod.clone(), bits.period.clone());
    if orientation == Orientation::Left || bits.period != [false] {
        return bits;
    }
    match bits.preperiod.iter().rposition(|&b| b) {
        None => bits,
        Some(last_one) => {
            let mut pre = bits.preperiod[..=last_one].to_vec();
            pre[last_one] = false;
            PeriodicBits::minimized(pre, vec![true])
        }
    }
}
