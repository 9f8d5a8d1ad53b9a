//! `LEFT '.' RIGHT` text notation.
//!
//! `LEFT := ['(' bits ')'] [bits]`, `RIGHT := [bits] ['(' bits ')']`. Left
//! text is written most significant first, so the rightmost written bit has
//! index 0 and a left repeat block extends leftward.

use super::{LeftPart, PeriodicBits, RightPart, UniversalRational};
use crate::{Error, Result};

fn bit_string(bits: impl Iterator<Item = bool>) -> String {
    bits.map(|b| if b { '1' } else { '0' }).collect()
}

pub(super) fn left_text(bits: &PeriodicBits) -> String {
    format!(
        "({}){}",
        bit_string(bits.period().iter().rev().copied()),
        bit_string(bits.preperiod().iter().rev().copied())
    )
}

pub(super) fn right_text(bits: &PeriodicBits) -> String {
    format!(
        "{}({})",
        bit_string(bits.preperiod().iter().copied()),
        bit_string(bits.period().iter().copied())
    )
}

struct Cursor<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<u8> {
        self.text.get(self.pos).copied()
    }

    fn bits(&mut self) -> Vec<bool> {
        let mut out = Vec::new();
        while let Some(c @ (b'0' | b'1')) = self.peek() {
            out.push(c == b'1');
            self.pos += 1;
        }
        out
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.unexpected(&format!("'{}'", c as char)))
        }
    }

    fn unexpected(&self, wanted: &str) -> Error {
        match self.peek() {
            Some(c) => Error::parse(self.pos, format!("expected {wanted}, found '{}'", c as char)),
            None => Error::parse(self.pos, format!("expected {wanted}, found end of input")),
        }
    }

    fn repeat_block(&mut self) -> Result<Vec<bool>> {
        self.expect(b'(')?;
        let block = self.bits();
        if block.is_empty() {
            return Err(self.unexpected("a bit"));
        }
        self.expect(b')')?;
        Ok(block)
    }

    fn left(&mut self) -> Result<PeriodicBits> {
        let period = if self.peek() == Some(b'(') {
            self.repeat_block()?
        } else {
            vec![false]
        };
        let mut pre = self.bits();
        pre.reverse();
        let mut period = period;
        period.reverse();
        Ok(PeriodicBits::minimized(pre, period))
    }

    fn right(&mut self) -> Result<PeriodicBits> {
        let pre = self.bits();
        let period = if self.peek() == Some(b'(') {
            self.repeat_block()?
        } else {
            vec![false]
        };
        Ok(PeriodicBits::minimized(pre, period))
    }

    fn finish(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.unexpected("end of input")),
        }
    }
}

fn cursor(text: &str) -> Cursor<'_> {
    Cursor {
        text: text.trim().as_bytes(),
        pos: 0,
    }
}

/// Parses a left part such as `(101)001001.`; the trailing point is required.
pub fn parse_left(text: &str) -> Result<LeftPart> {
    let mut c = cursor(text);
    let bits = c.left()?;
    c.expect(b'.')?;
    c.finish()?;
    Ok(LeftPart(bits))
}

/// Parses a right part such as `.10(1)`; the leading point is required.
pub fn parse_right(text: &str) -> Result<RightPart> {
    let mut c = cursor(text);
    c.expect(b'.')?;
    let bits = c.right()?;
    c.finish()?;
    Ok(RightPart(bits))
}

/// Parses a two-way form such as `(0)10011.(10)`. The result is the sequence
/// as written (minimized), not necessarily canonical.
pub fn parse_universal(text: &str) -> Result<UniversalRational> {
    let mut c = cursor(text);
    let left = c.left()?;
    c.expect(b'.')?;
    let right = c.right()?;
    c.finish()?;
    Ok(UniversalRational::new(LeftPart(left), RightPart(right)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn left_reading_order() {
        let l = parse_left("(1)00101.").unwrap();
        // index 0 is the rightmost written bit
        assert_eq!(l.bits().prefix(8), vec![true, false, true, false, false, true, true, true]);
        assert_eq!(l.to_string(), "(1)00101.");
    }

    #[test]
    fn defaults_to_zero_blocks() {
        let u = parse_universal("101.").unwrap();
        assert_eq!(u.to_string(), "(0)101.(0)");
        let u = parse_universal(".01").unwrap();
        assert_eq!(u.to_string(), "(0).01(0)");
        assert_eq!(parse_universal(".").unwrap().to_string(), "(0).(0)");
    }

    #[test]
    fn errors_carry_offsets() {
        for (text, offset) in [
            ("(101", 4),
            ("()1.", 1),
            ("10", 2),
            ("1.1.", 3),
            ("12.", 1),
            (".(0", 3),
        ] {
            match parse_universal(text) {
                Err(Error::Parse { offset: o, .. }) => assert_eq!(o, offset, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
        assert!(parse_left("(1)0").is_err());
        assert!(parse_left("(1)0.1").is_err());
        assert!(parse_right("1(0)").is_err());
    }
}
