//! Computable numbers in `(0,1)` as deterministic, on-demand bit streams.
//!
//! A [`StreamDescriptor`] names an algorithm; a [`BitStream`] runs it and
//! memoizes the prefix produced so far. Bits are 1-indexed from the binary
//! point and every emitted bit is exact. Streams expose prefixes, prefix
//! intervals and bounded comparison only; equality of streams is not
//! decidable and is not offered.

mod interval;
mod pi;

use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::bitseq::RightPart;
use crate::cardinals::CardinalExpr;
use crate::ordinals::Ordinal;
use crate::rational::format_decimal;
use crate::{Error, Result};

pub use interval::{parse_star_string, DyadicInterval};

/// A deterministic generator of 1-indexed bits.
///
/// Implementations must return the same bit for the same index every time.
pub trait BitSource: Send + Sync {
    fn bit(&self, index: u64) -> bool;
}

/// A user-supplied algorithm registered under an identifier. Two custom
/// descriptors are equal when their identifiers are.
#[derive(Clone)]
pub struct CustomStream {
    id: String,
    source: Arc<dyn BitSource>,
}

impl fmt::Debug for CustomStream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CustomStream").field("id", &self.id).finish()
    }
}

impl PartialEq for CustomStream {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
    }
}

impl Eq for CustomStream {}

/// Names one computable number in `(0,1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StreamDescriptor {
    /// A rational strictly between 0 and 1, expanded in its canonical
    /// nonterminating form.
    Rational(BigRational),
    PiOver4,
    /// The fractional part of `√k` for a non-square natural `k`.
    SqrtFrac(u64),
    /// Cantor's diagonal over the listed streams.
    Diagonal(Vec<StreamDescriptor>),
    Custom(CustomStream),
}

impl StreamDescriptor {
    pub fn rational(q: BigRational) -> Result<Self> {
        if !q.is_positive() || q >= BigRational::one() {
            return Err(Error::domain(format!("stream value {q} is outside (0,1)")));
        }
        Ok(Self::Rational(q))
    }

    pub fn sqrt_frac(k: u64) -> Result<Self> {
        let root = k.sqrt();
        if root * root == k {
            return Err(Error::domain(format!(
                "sqrt({k}) is an integer; its fractional part is not in (0,1)"
            )));
        }
        Ok(Self::SqrtFrac(k))
    }

    pub fn custom(id: impl Into<String>, source: impl BitSource + 'static) -> Self {
        Self::Custom(CustomStream {
            id: id.into(),
            source: Arc::new(source),
        })
    }

    /// Bits `from..=to` (1-indexed).
    fn generate(&self, from: usize, to: usize) -> Vec<bool> {
        if from > to {
            return Vec::new();
        }
        match self {
            Self::Rational(q) => {
                let right = RightPart::from_fraction(q).expect("validated at construction");
                (from..=to).map(|i| right.bit(i)).collect()
            }
            Self::PiOver4 => pi::pi_over_4_bits(to).split_off(from - 1),
            Self::SqrtFrac(k) => {
                // floor(√k · 2^to) = isqrt(k · 4^to); its low `to` bits are the fraction
                let scaled = (BigInt::from(*k) << (2 * to)).sqrt();
                (from..=to).map(|i| scaled.bit((to - i) as u64)).collect()
            }
            Self::Diagonal(inputs) => (from..=to).map(|i| diagonal_bit(inputs, i)).collect(),
            Self::Custom(c) => (from..=to).map(|i| c.source.bit(i as u64)).collect(),
        }
    }
}

fn diagonal_bit(inputs: &[StreamDescriptor], i: usize) -> bool {
    match inputs.get(i - 1) {
        Some(d) => !d.generate(i, i)[0],
        // padding `1010…` keeps the output nonterminating
        None => (i - inputs.len()) % 2 == 1,
    }
}

impl fmt::Display for StreamDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Self::PiOver4 => f.write_str("pi/4"),
            Self::SqrtFrac(k) => write!(f, "sqrt({k})"),
            Self::Diagonal(inputs) => {
                f.write_str("diag(")?;
                for (i, d) in inputs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{d}")?;
                }
                f.write_str(")")
            }
            Self::Custom(c) => write!(f, "custom({})", c.id),
        }
    }
}

/// Parses `p/q`, `pi/4`, `sqrt(k)` or `diag(s, …)`.
pub fn parse_stream(text: &str) -> Result<StreamDescriptor> {
    let mut p = StreamParser {
        text: text.trim(),
        pos: 0,
    };
    let d = p.descriptor()?;
    p.skip_ws();
    if p.pos != p.text.len() {
        return Err(Error::parse(p.pos, "trailing input after stream"));
    }
    Ok(d)
}

struct StreamParser<'a> {
    text: &'a str,
    pos: usize,
}

impl StreamParser<'_> {
    fn rest(&self) -> &str {
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

    fn natural(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return Err(Error::parse(self.pos, "expected a natural number"));
        }
        let n = self.rest()[..len].parse().expect("digits");
        self.pos += len;
        Ok(n)
    }

    fn descriptor(&mut self) -> Result<StreamDescriptor> {
        let start = self.pos;
        if self.eat("pi/4") {
            return Ok(StreamDescriptor::PiOver4);
        }
        if self.eat("sqrt(") {
            let k = self.natural()?;
            self.expect(")")?;
            let k = u64::try_from(&k).map_err(|_| Error::domain("sqrt argument too large"))?;
            return StreamDescriptor::sqrt_frac(k);
        }
        if self.eat("diag(") {
            let mut inputs = Vec::new();
            if !self.eat(")") {
                loop {
                    inputs.push(self.descriptor()?);
                    if self.eat(")") {
                        break;
                    }
                    self.expect(",")?;
                }
            }
            return Ok(StreamDescriptor::Diagonal(inputs));
        }
        let numer = self.natural().map_err(|_| {
            Error::parse(start, "expected p/q, pi/4, sqrt(k) or diag(...)")
        })?;
        self.expect("/")?;
        let denom = self.natural()?;
        if denom == BigInt::from(0) {
            return Err(Error::domain("zero denominator"));
        }
        StreamDescriptor::rational(BigRational::new(numer, denom))
    }
}

/// A running stream with a memoized prefix.
///
/// The memo is behind a mutex, so concurrent readers of one stream always
/// observe prefixes of the same sequence.
#[derive(Debug)]
pub struct BitStream {
    descriptor: StreamDescriptor,
    memo: Mutex<Vec<bool>>,
}

impl BitStream {
    pub fn new(descriptor: StreamDescriptor) -> Self {
        Self {
            descriptor,
            memo: Mutex::new(Vec::new()),
        }
    }

    pub fn descriptor(&self) -> &StreamDescriptor {
        &self.descriptor
    }

    /// The first `n` bits.
    pub fn bits(&self, n: usize) -> Vec<bool> {
        let mut memo = self.memo.lock().expect("bit memo poisoned");
        if memo.len() < n {
            let more = self.descriptor.generate(memo.len() + 1, n);
            memo.extend(more);
        }
        memo[..n].to_vec()
    }

    /// Bit at 1-based `index`.
    pub fn bit(&self, index: usize) -> bool {
        assert!(index >= 1, "stream bits are 1-indexed");
        self.bits(index)[index - 1]
    }

    /// The prefix interval of length `n`; the stream's value lies in its hull.
    pub fn interval(&self, n: usize) -> Result<DyadicInterval> {
        if n == 0 {
            return Err(Error::domain("interval needs at least one bit"));
        }
        Ok(DyadicInterval::from_prefix(&self.bits(n)))
    }
}

/// Outcome of a bounded lexicographic comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StreamOrdering {
    Less,
    Greater,
    /// The first `n` bits agree.
    Indistinguishable(usize),
}

pub fn compare(a: &BitStream, b: &BitStream, max_bits: usize) -> Result<StreamOrdering> {
    if max_bits == 0 {
        return Err(Error::domain("comparison needs at least one bit"));
    }
    let (x, y) = (a.bits(max_bits), b.bits(max_bits));
    Ok(match x.iter().zip(&y).find(|(p, q)| p != q) {
        Some((true, _)) => StreamOrdering::Greater,
        Some((false, _)) => StreamOrdering::Less,
        None => StreamOrdering::Indistinguishable(max_bits),
    })
}

/// A stream whose bit `i` complements bit `i` of the `i`-th input, padded
/// with `1010…` past the end of the list.
pub fn diagonal(inputs: Vec<StreamDescriptor>) -> BitStream {
    BitStream::new(StreamDescriptor::Diagonal(inputs))
}

/// A computable anchor with a symbolic cardinality tag `2^aleph_alpha`
/// for the points absorbed into it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Infinitesimal {
    pub anchor: StreamDescriptor,
    pub alpha: Ordinal,
    pub tag: CardinalExpr,
}

pub fn attach_infinitesimal(anchor: StreamDescriptor, alpha: Ordinal) -> Infinitesimal {
    let tag = CardinalExpr::pow2(CardinalExpr::Aleph(alpha.clone()));
    Infinitesimal { anchor, alpha, tag }
}

impl Infinitesimal {
    pub fn normalized_tag(&self) -> Result<CardinalExpr> {
        crate::cardinals::normalize(&self.tag)
    }

    /// Human-readable summary: anchor digits, its leading bits, and the tag.
    pub fn describe(&self) -> String {
        let stream = BitStream::new(self.anchor.clone());
        let prefix = stream.bits(64);
        let value = DyadicInterval::from_prefix(&prefix);
        let decimal = format_decimal(value.lo(), 4);
        let decimal = decimal.trim_start_matches('0');
        let bits: String = prefix[..12].iter().map(|&b| if b { '1' } else { '0' }).collect();
        let normal = match self.normalized_tag() {
            Ok(e) => format!(" = {e}"),
            Err(_) => String::new(),
        };
        format!(
            "{decimal} (bits .{bits}…) with an infinitesimal of cardinality {}{normal}",
            self.tag
        )
    }
}
