//! Index-set views: the positions of 1-bits in a left or right part.

use std::fmt;

use super::{LeftPart, Orientation, PeriodicBits, RightPart};
use crate::{Error, Result};

/// Periodic part of an index set: `{ start + offset + t·stride : offset ∈ offsets, t ≥ 0 }`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicTail {
    pub start: u64,
    pub stride: u64,
    pub offsets: Vec<u64>,
}

/// 1-bit positions of a left part (0-indexed) or right part (1-indexed),
/// with the infinite portion described structurally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexSetView {
    pub orientation: Orientation,
    pub finite: Vec<u64>,
    pub tail: Option<PeriodicTail>,
}

/// Either side of a two-way sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Part {
    Left(LeftPart),
    Right(RightPart),
}

fn view_of(bits: &PeriodicBits, orientation: Orientation) -> IndexSetView {
    let base = orientation.first_index();
    let ones = |bits: &[bool]| -> Vec<u64> {
        bits.iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i as u64)
            .collect()
    };
    let finite = ones(bits.preperiod()).into_iter().map(|i| i + base).collect();
    let offsets = ones(bits.period());
    let tail = (!offsets.is_empty()).then(|| PeriodicTail {
        start: base + bits.preperiod().len() as u64,
        stride: bits.period().len() as u64,
        offsets,
    });
    IndexSetView {
        orientation,
        finite,
        tail,
    }
}

impl LeftPart {
    pub fn to_index_set(&self) -> IndexSetView {
        view_of(self.bits(), Orientation::Left)
    }
}

impl RightPart {
    pub fn to_index_set(&self) -> IndexSetView {
        view_of(self.bits(), Orientation::Right)
    }
}

impl IndexSetView {
    /// Rebuilds the sequence this view describes.
    pub fn to_part(&self) -> Result<Part> {
        let base = self.orientation.first_index();
        let mut finite = self.finite.clone();
        finite.sort_unstable();
        if finite.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::MalformedIndexSet("duplicate finite index".into()));
        }
        if let Some(&first) = finite.first() {
            if first < base {
                return Err(Error::MalformedIndexSet(format!(
                    "index {first} is below the first position {base}"
                )));
            }
        }
        let (pre_len, period) = match &self.tail {
            None => {
                let len = finite.last().map_or(0, |&i| i - base + 1);
                (len, vec![false])
            }
            Some(tail) => {
                if tail.stride == 0 {
                    return Err(Error::MalformedIndexSet("stride must be positive".into()));
                }
                if tail.start < base {
                    return Err(Error::MalformedIndexSet(format!(
                        "tail start {} is below the first position {base}",
                        tail.start
                    )));
                }
                if tail.offsets.is_empty() {
                    return Err(Error::MalformedIndexSet("tail has no offsets".into()));
                }
                if let Some(&last) = finite.last() {
                    if last >= tail.start {
                        return Err(Error::MalformedIndexSet(format!(
                            "finite index {last} overlaps the tail starting at {}",
                            tail.start
                        )));
                    }
                }
                let mut period = vec![false; tail.stride as usize];
                for &o in &tail.offsets {
                    let slot = period.get_mut(o as usize).ok_or_else(|| {
                        Error::MalformedIndexSet(format!("offset {o} not below stride {}", tail.stride))
                    })?;
                    if *slot {
                        return Err(Error::MalformedIndexSet(format!("duplicate offset {o}")));
                    }
                    *slot = true;
                }
                (tail.start - base, period)
            }
        };
        let mut pre = vec![false; pre_len as usize];
        for i in finite {
            pre[(i - base) as usize] = true;
        }
        let bits = PeriodicBits::minimized(pre, period);
        Ok(match self.orientation {
            Orientation::Left => Part::Left(LeftPart::new(bits)),
            Orientation::Right => Part::Right(RightPart::new(bits)),
        })
    }

    /// Ascending list of members, listing the tail at least until `min_tail`
    /// elements have been produced.
    fn listed(&self, min_tail: usize) -> (Vec<u64>, bool) {
        let mut items = self.finite.clone();
        items.sort_unstable();
        let Some(tail) = &self.tail else {
            return (items, false);
        };
        let per_round = tail.offsets.len();
        let rounds = min_tail.div_ceil(per_round).max(1);
        for t in 0..rounds as u64 {
            items.extend(tail.offsets.iter().map(|o| tail.start + o + t * tail.stride));
        }
        (items, true)
    }

    fn body(&self) -> String {
        let (items, infinite) = self.listed(4);
        let mut parts: Vec<String> = items.iter().map(u64::to_string).collect();
        match self.orientation {
            Orientation::Right => {
                if infinite {
                    parts.push("...".into());
                }
            }
            Orientation::Left => {
                parts.reverse();
                if infinite {
                    parts.insert(0, "...".into());
                }
            }
        }
        parts.join(",")
    }

    /// Two-way rendering `-{left:right}+`.
    pub fn two_way(left: &IndexSetView, right: &IndexSetView) -> String {
        format!("-{{{}:{}}}+", left.body(), right.body())
    }
}

impl fmt::Display for IndexSetView {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.orientation {
            Orientation::Right => write!(f, "{{{}}}+", self.body()),
            Orientation::Left => write!(f, "-{{{}}}", self.body()),
        }
    }
}
