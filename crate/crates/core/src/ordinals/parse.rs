//! Grammar: `expr := term ('+' term)*`, `term := factor ('*' factor)*`,
//! `factor := primary ('^' factor)?`, `primary := 'w' | natural | '(' expr ')'`.
//! `ω` is accepted for `w`. Expressions are evaluated while parsing.

use num_bigint::BigUint;

use super::{ExtOrdinal, Ordinal};
use crate::{Error, Result};

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

const EPSILON_ZERO: [&str; 3] = ["e0", "ε₀", "ε0"];

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

    fn expr(&mut self) -> Result<Ordinal> {
        let mut acc = self.term()?;
        while self.eat("+") {
            acc = acc.ord_add(&self.term()?);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Ordinal> {
        let mut acc = self.factor()?;
        while self.eat("*") {
            acc = acc.ord_mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Ordinal> {
        let base = self.primary()?;
        if self.eat("^") {
            let exponent = self.factor()?;
            return base.ord_pow(&exponent);
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Ordinal> {
        self.skip_ws();
        let start = self.pos;
        if EPSILON_ZERO.iter().any(|t| self.rest().starts_with(t)) {
            return Err(Error::domain("ε₀ is outside Cantor normal form arithmetic"));
        }
        if self.eat("w") || self.eat("ω") {
            return Ok(Ordinal::omega());
        }
        if self.eat("(") {
            let inner = self.expr()?;
            if !self.eat(")") {
                return Err(Error::parse(self.pos, "expected ')'"));
            }
            return Ok(inner);
        }
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return Err(Error::parse(start, "expected 'w', a natural number or '('"));
        }
        let n: BigUint = self.rest()[..len].parse().expect("digits");
        self.pos += len;
        Ok(Ordinal::natural(n))
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos == self.text.len() {
            Ok(())
        } else {
            Err(Error::parse(self.pos, "unexpected trailing input"))
        }
    }
}

/// Parses and evaluates an ordinal expression below ε₀.
pub fn parse_ordinal(text: &str) -> Result<Ordinal> {
    let mut p = Parser { text, pos: 0 };
    let value = p.expr()?;
    p.finish()?;
    Ok(value)
}

/// Like [`parse_ordinal`] but also accepts the bare sentinel `e0` (or `ε₀`).
pub fn parse_ext_ordinal(text: &str) -> Result<ExtOrdinal> {
    if EPSILON_ZERO.contains(&text.trim()) {
        return Ok(ExtOrdinal::EpsilonZero);
    }
    parse_ordinal(text).map(ExtOrdinal::Cnf)
}
