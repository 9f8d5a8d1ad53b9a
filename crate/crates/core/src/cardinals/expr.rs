//! Symbolic cardinal expressions and their text syntax.
//!
//! ```text
//! expr  := '2' '^' expr | natural | aleph | 'hyper(' expr ',' expr ',' expr ')'
//!        | 'choose(' expr ')' | '(' expr ')'
//! aleph := ('aleph' | 'ℵ') '_'? (digits | 'w' | '(' ordinal ')')
//! ```
//!
//! `^` is right-associative and only base 2 is supported.

use std::fmt;

use num_bigint::BigUint;

use crate::ordinals::{parse_ordinal, Ordinal};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CardinalExpr {
    Fin(BigUint),
    Aleph(Ordinal),
    Pow2(Box<CardinalExpr>),
    /// `a ⊗^b c`.
    Hyper(Box<CardinalExpr>, Box<CardinalExpr>, Box<CardinalExpr>),
    /// The cardinality of the set of choice sequences over a set of size `e`.
    Choose(Box<CardinalExpr>),
}

impl CardinalExpr {
    pub fn fin(n: impl Into<BigUint>) -> Self {
        CardinalExpr::Fin(n.into())
    }

    pub fn aleph(alpha: impl Into<Ordinal>) -> Self {
        CardinalExpr::Aleph(alpha.into())
    }

    pub fn pow2(e: CardinalExpr) -> Self {
        CardinalExpr::Pow2(Box::new(e))
    }

    pub fn hyper(a: CardinalExpr, b: CardinalExpr, c: CardinalExpr) -> Self {
        CardinalExpr::Hyper(Box::new(a), Box::new(b), Box::new(c))
    }

    pub fn choose(e: CardinalExpr) -> Self {
        CardinalExpr::Choose(Box::new(e))
    }

    /// Fully reduced: a natural or an aleph.
    pub fn is_normal(&self) -> bool {
        matches!(self, CardinalExpr::Fin(_) | CardinalExpr::Aleph(_))
    }

    /// True when no aleph occurs anywhere in the expression.
    pub fn is_finite_expr(&self) -> bool {
        match self {
            CardinalExpr::Fin(_) => true,
            CardinalExpr::Aleph(_) => false,
            CardinalExpr::Pow2(e) | CardinalExpr::Choose(e) => e.is_finite_expr(),
            CardinalExpr::Hyper(a, b, c) => {
                a.is_finite_expr() && b.is_finite_expr() && c.is_finite_expr()
            }
        }
    }

    pub fn node_count(&self) -> usize {
        match self {
            CardinalExpr::Fin(_) | CardinalExpr::Aleph(_) => 1,
            CardinalExpr::Pow2(e) | CardinalExpr::Choose(e) => 1 + e.node_count(),
            CardinalExpr::Hyper(a, b, c) => 1 + a.node_count() + b.node_count() + c.node_count(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            CardinalExpr::Fin(_) | CardinalExpr::Aleph(_) => 1,
            CardinalExpr::Pow2(e) | CardinalExpr::Choose(e) => 1 + e.depth(),
            CardinalExpr::Hyper(a, b, c) => 1 + a.depth().max(b.depth()).max(c.depth()),
        }
    }
}

impl fmt::Display for CardinalExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CardinalExpr::Fin(n) => write!(f, "{n}"),
            CardinalExpr::Aleph(alpha) => {
                let index = alpha.compact();
                if index.bytes().all(|b| b.is_ascii_digit()) || index == "w" {
                    write!(f, "aleph_{index}")
                } else {
                    write!(f, "aleph_({index})")
                }
            }
            CardinalExpr::Pow2(e) => write!(f, "2^{e}"),
            CardinalExpr::Hyper(a, b, c) => write!(f, "hyper({a}, {b}, {c})"),
            CardinalExpr::Choose(e) => write!(f, "choose({e})"),
        }
    }
}

impl fmt::Debug for CardinalExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected '{token}'")))
        }
    }

    fn expr(&mut self) -> Result<CardinalExpr> {
        self.skip_ws();
        let start = self.pos;
        if self.eat("aleph") || self.eat("ℵ") {
            return self.aleph_index().map(CardinalExpr::Aleph);
        }
        if self.eat("hyper") {
            self.expect("(")?;
            let a = self.expr()?;
            self.expect(",")?;
            let b = self.expr()?;
            self.expect(",")?;
            let c = self.expr()?;
            self.expect(")")?;
            return Ok(CardinalExpr::hyper(a, b, c));
        }
        if self.eat("choose") {
            self.expect("(")?;
            let e = self.expr()?;
            self.expect(")")?;
            return Ok(CardinalExpr::choose(e));
        }
        if self.eat("(") {
            let e = self.expr()?;
            self.expect(")")?;
            return Ok(e);
        }
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return Err(Error::parse(
                start,
                "expected a natural, 'aleph_', 'hyper(', 'choose(' or '('",
            ));
        }
        let n: BigUint = self.rest()[..len].parse().expect("digits");
        self.pos += len;
        if self.eat("^") {
            if n != BigUint::from(2u32) {
                return Err(Error::parse(start, "only powers of 2 are supported"));
            }
            return Ok(CardinalExpr::pow2(self.expr()?));
        }
        Ok(CardinalExpr::Fin(n))
    }

    fn aleph_index(&mut self) -> Result<Ordinal> {
        if self.rest().starts_with('_') {
            self.pos += 1;
        }
        let start = self.pos;
        let rest = self.rest();
        if rest.starts_with('(') {
            let mut depth = 0usize;
            for (i, c) in rest.char_indices() {
                match c {
                    '(' => depth += 1,
                    ')' => {
                        depth -= 1;
                        if depth == 0 {
                            let inner = &rest[1..i];
                            self.pos += i + 1;
                            return parse_ordinal(inner).map_err(|e| shift(e, start + 1));
                        }
                    }
                    _ => {}
                }
            }
            return Err(Error::parse(self.text.len(), "expected ')'"));
        }
        for w in ["w", "ω"] {
            if rest.starts_with(w) {
                self.pos += w.len();
                return Ok(Ordinal::omega());
            }
        }
        let len = rest.bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return Err(Error::parse(start, "expected an aleph index"));
        }
        self.pos += len;
        Ok(Ordinal::natural(rest[..len].parse::<BigUint>().expect("digits")))
    }
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { offset, message } => Error::Parse {
            offset: offset + by,
            message,
        },
        other => other,
    }
}

pub fn parse_cardinal(text: &str) -> Result<CardinalExpr> {
    let mut p = Parser { text, pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(Error::parse(p.pos, "unexpected trailing input"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        let w = Ordinal::omega();
        let cases = [
            (CardinalExpr::aleph(0u64), "aleph_0"),
            (CardinalExpr::Aleph(w.clone()), "aleph_w"),
            (CardinalExpr::Aleph(&w + &Ordinal::one()), "aleph_(w+1)"),
            (CardinalExpr::pow2(CardinalExpr::aleph(3u64)), "2^aleph_3"),
            (
                CardinalExpr::pow2(CardinalExpr::pow2(CardinalExpr::fin(5u32))),
                "2^2^5",
            ),
            (
                CardinalExpr::hyper(
                    CardinalExpr::fin(2u32),
                    CardinalExpr::fin(1u32),
                    CardinalExpr::aleph(0u64),
                ),
                "hyper(2, 1, aleph_0)",
            ),
            (CardinalExpr::choose(CardinalExpr::aleph(1u64)), "choose(aleph_1)"),
        ];
        for (e, text) in cases {
            assert_eq!(e.to_string(), text);
            assert_eq!(parse_cardinal(text).unwrap(), e);
        }
    }

    #[test]
    fn parse_variants() {
        let a = parse_cardinal("ℵ_(w*2)").unwrap();
        assert_eq!(a.to_string(), "aleph_(w*2)");
        assert_eq!(parse_cardinal(" ( 2 ^ aleph_0 ) ").unwrap().to_string(), "2^aleph_0");
        assert_eq!(parse_cardinal("aleph_(w^2+3)").unwrap().to_string(), "aleph_(w^2+3)");
    }

    #[test]
    fn parse_errors() {
        for (text, offset) in [
            ("3^aleph_0", 0),
            ("aleph_", 6),
            ("hyper(1, 2)", 10),
            ("aleph_(w+)", 9),
            ("2^aleph_0 x", 10),
            ("", 0),
        ] {
            match parse_cardinal(text) {
                Err(Error::Parse { offset: o, .. }) => assert_eq!(o, offset, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }

    #[test]
    fn measures() {
        let e = parse_cardinal("hyper(2, 1, 2^aleph_0)").unwrap();
        assert_eq!(e.node_count(), 5);
        assert_eq!(e.depth(), 3);
        assert!(!e.is_finite_expr());
        assert!(parse_cardinal("2^hyper(2,2,3)").unwrap().is_finite_expr());
    }
}
