//! Ordinals below ε₀ in Cantor normal form.
//!
//! Every such ordinal is a finite sum `ω^e₁·c₁ + … + ω^eₖ·cₖ` with strictly
//! decreasing exponents (themselves ordinals below ε₀) and positive natural
//! coefficients. ε₀ itself is available only as the [`ExtOrdinal::EpsilonZero`]
//! sentinel, which arithmetic does not accept.

mod natural;
mod parse;

use std::cmp::Ordering;
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::{Error, Result};
use natural::Natural;

pub use parse::{parse_ext_ordinal, parse_ordinal};

/// Largest finite exponent accepted when raising an infinite ordinal to a
/// finite power; the term count grows with it.
pub const MAX_FINITE_POWER: u64 = 4096;

/// Bit-length cap on natural-number results of `ord_pow`.
pub const MAX_NATURAL_BITS: u64 = 1 << 20;

/// An ordinal below ε₀ in Cantor normal form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ordinal {
    terms: Arc<[Term]>,
}

/// One summand `ω^exponent · coefficient`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub exponent: Ordinal,
    coefficient: Natural,
}

impl Term {
    pub fn new(exponent: Ordinal, coefficient: impl Into<BigUint>) -> Self {
        Self {
            exponent,
            coefficient: Natural::from_big(coefficient.into()),
        }
    }

    pub fn coefficient(&self) -> BigUint {
        self.coefficient.to_big()
    }
}

/// An ordinal below ε₀, or ε₀ itself.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExtOrdinal {
    Cnf(Ordinal),
    EpsilonZero,
}

/// Cardinality of an ordinal up to and including ε₀.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cardinality {
    Finite(BigUint),
    Aleph0,
}

impl Ordinal {
    pub fn zero() -> Self {
        static ZERO: OnceLock<Arc<[Term]>> = OnceLock::new();
        Self {
            terms: ZERO.get_or_init(|| Arc::from(Vec::new())).clone(),
        }
    }

    pub fn one() -> Self {
        Self::natural(1u8)
    }

    pub fn natural(n: impl Into<BigUint>) -> Self {
        Self::from_natural(Natural::from_big(n.into()))
    }

    /// Small naturals are shared, since they make up most exponents.
    fn from_natural(n: Natural) -> Self {
        const SHARED: u64 = 64;
        static SMALL: OnceLock<Vec<Ordinal>> = OnceLock::new();
        if let Natural::Small(v) = n {
            if v < SHARED {
                let small = SMALL.get_or_init(|| {
                    (0..SHARED)
                        .map(|v| Self::build_natural(Natural::Small(v)))
                        .collect()
                });
                return small[v as usize].clone();
            }
        }
        Self::build_natural(n)
    }

    fn build_natural(n: Natural) -> Self {
        if n.is_zero() {
            return Self::zero();
        }
        Self {
            terms: Arc::new([Term {
                exponent: Self::zero(),
                coefficient: n,
            }]),
        }
    }

    pub fn omega() -> Self {
        Self::omega_pow(Self::one())
    }

    /// `ω^exponent`.
    pub fn omega_pow(exponent: Ordinal) -> Self {
        Self::term(exponent, BigUint::one())
    }

    /// `ω^exponent · coefficient` (zero when `coefficient` is zero).
    pub fn term(exponent: Ordinal, coefficient: impl Into<BigUint>) -> Self {
        let coefficient = coefficient.into();
        if coefficient.is_zero() {
            return Self::zero();
        }
        Self {
            terms: Arc::new([Term {
                exponent,
                coefficient: Natural::from_big(coefficient),
            }]),
        }
    }

    /// Builds an ordinal from terms, rejecting anything not in Cantor normal form.
    pub fn from_terms(terms: Vec<Term>) -> Result<Self> {
        let o = Self { terms: terms.into() };
        if o.is_valid_cnf() {
            Ok(o)
        } else {
            Err(Error::domain("terms are not in Cantor normal form"))
        }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.terms.iter().all(|t| t.exponent.is_zero())
    }

    pub fn as_natural(&self) -> Option<BigUint> {
        match &self.terms[..] {
            [] => Some(BigUint::zero()),
            [t] if t.exponent.is_zero() => Some(t.coefficient.to_big()),
            _ => None,
        }
    }

    pub fn is_successor(&self) -> bool {
        self.terms.last().is_some_and(|t| t.exponent.is_zero())
    }

    pub fn is_limit(&self) -> bool {
        !self.is_zero() && !self.is_successor()
    }

    /// Exponent of the leading term (zero for the ordinal zero).
    pub fn leading_exponent(&self) -> Ordinal {
        self.terms.first().map_or_else(Self::zero, |t| t.exponent.clone())
    }

    /// Nesting depth: 0 for zero, 1 for naturals, and one more than the
    /// deepest exponent otherwise.
    pub fn depth(&self) -> usize {
        self.terms
            .iter()
            .map(|t| 1 + t.exponent.depth())
            .max()
            .unwrap_or(0)
    }

    /// Structural check: positive coefficients, strictly decreasing
    /// exponents, recursively valid exponents.
    pub fn is_valid_cnf(&self) -> bool {
        self.terms.iter().all(|t| !t.coefficient.is_zero() && t.exponent.is_valid_cnf())
            && self.terms.windows(2).all(|w| w[0].exponent > w[1].exponent)
    }

    /// The predecessor of a successor ordinal.
    fn predecessor(&self) -> Option<Ordinal> {
        let last = self.terms.last()?;
        if !last.exponent.is_zero() {
            return None;
        }
        let mut terms = self.terms.to_vec();
        let c = last.coefficient.pred();
        terms.pop();
        if !c.is_zero() {
            terms.push(Term {
                exponent: Self::zero(),
                coefficient: c,
            });
        }
        Some(Self { terms: terms.into() })
    }

    pub fn ord_add(&self, other: &Ordinal) -> Ordinal {
        let Some(lead) = other.terms.first() else {
            return self.clone();
        };
        if let ([x], [y]) = (&self.terms[..], &other.terms[..]) {
            if x.exponent.is_zero() && y.exponent.is_zero() {
                return Self::from_natural(x.coefficient.add(&y.coefficient));
            }
        }
        let kept = self
            .terms
            .iter()
            .take_while(|t| t.exponent >= lead.exponent)
            .count();
        let mut terms = Vec::with_capacity(kept + other.terms.len());
        terms.extend_from_slice(&self.terms[..kept]);
        let mut rest = other.terms.iter();
        if let Some(last) = terms.last_mut() {
            if last.exponent == lead.exponent {
                last.coefficient = last.coefficient.add(&lead.coefficient);
                rest.next();
            }
        }
        terms.extend(rest.cloned());
        Self { terms: terms.into() }
    }

    pub fn ord_mul(&self, other: &Ordinal) -> Ordinal {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let lead = &self.terms[0];
        let mut terms = Vec::with_capacity(other.terms.len() + self.terms.len() - 1);
        for t in other.terms.iter() {
            if t.exponent.is_zero() {
                // (ω^a₁·c₁ + rest)·d = ω^a₁·(c₁·d) + rest
                terms.push(Term {
                    exponent: lead.exponent.clone(),
                    coefficient: lead.coefficient.mul(&t.coefficient),
                });
                terms.extend(self.terms[1..].iter().cloned());
            } else {
                terms.push(Term {
                    exponent: lead.exponent.ord_add(&t.exponent),
                    coefficient: t.coefficient.clone(),
                });
            }
        }
        Self { terms: terms.into() }
    }

    /// Splits `self = ω·q + r` with `r` finite.
    fn div_omega(&self) -> (Ordinal, BigUint) {
        let mut quotient = Vec::new();
        let mut remainder = BigUint::zero();
        for t in self.terms.iter() {
            if t.exponent.is_zero() {
                remainder = t.coefficient.to_big();
            } else {
                // ω^e = ω·ω^(e−1) for finite e, and ω·ω^e = ω^e for infinite e
                let exponent = if t.exponent.is_finite() {
                    t.exponent.predecessor().expect("finite nonzero exponent")
                } else {
                    t.exponent.clone()
                };
                quotient.push(Term {
                    exponent,
                    coefficient: t.coefficient.clone(),
                });
            }
        }
        (Self { terms: quotient.into() }, remainder)
    }

    /// Ordinal exponentiation `self^exponent`.
    ///
    /// Fails with [`Error::TooLarge`] when a natural result would exceed
    /// [`MAX_NATURAL_BITS`] or an infinite base is raised to a finite power
    /// above [`MAX_FINITE_POWER`].
    pub fn ord_pow(&self, exponent: &Ordinal) -> Result<Ordinal> {
        if exponent.is_zero() {
            return Ok(Self::one());
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if *self == Self::one() {
            return Ok(Self::one());
        }
        let (outer, n) = exponent.div_omega();
        if let Some(base) = self.as_natural() {
            // c^(ω·β + n) = ω^β · c^n for finite c ≥ 2
            let estimate = n.to_f64().unwrap_or(f64::INFINITY) * (base.bits() as f64);
            if estimate > (MAX_NATURAL_BITS + base.bits()) as f64 {
                return Err(Error::TooLarge(format!("{base}^{n} is too large")));
            }
            let n = n.to_u32().expect("bounded by estimate");
            return Ok(Self::term(outer, base.pow(n)));
        }
        // a^(ω·β) = ω^(a₁·ω·β) for infinite a with leading exponent a₁
        let limit_part = if outer.is_zero() {
            Self::one()
        } else {
            Self::omega_pow(self.leading_exponent().ord_mul(&Self::omega().ord_mul(&outer)))
        };
        let n = n.to_u64().filter(|&n| n <= MAX_FINITE_POWER).ok_or_else(|| {
            Error::TooLarge(format!("finite power {n} of an infinite ordinal is too large"))
        })?;
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.ord_mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.ord_mul(&base);
            }
        }
        Ok(limit_part.ord_mul(&acc))
    }

    /// Rendering without spaces, as used inside exponents and subscripts.
    pub fn compact(&self) -> String {
        self.render(false)
    }

    /// Writes the expression; top-level sums are spaced, nested ones compact.
    fn render(&self, spaced: bool) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| {
                if t.exponent.is_zero() {
                    return t.coefficient.to_string();
                }
                let mut s = String::from("w");
                if t.exponent != Self::one() {
                    s.push('^');
                    if t.exponent.as_natural().is_some() || t.exponent == Self::omega() {
                        s.push_str(&t.exponent.render(false));
                    } else {
                        s.push('(');
                        s.push_str(&t.exponent.render(false));
                        s.push(')');
                    }
                }
                if !t.coefficient.is_one() {
                    s.push('*');
                    s.push_str(&t.coefficient.to_string());
                }
                s
            })
            .collect();
        parts.join(if spaced { " + " } else { "+" })
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.terms.iter().zip(other.terms.iter()) {
            let ord = a
                .exponent
                .cmp(&b.exponent)
                .then_with(|| a.coefficient.cmp(&b.coefficient));
            if ord != Ordering::Equal {
                return ord;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(true))
    }
}

impl fmt::Debug for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ordinal({})", self.render(true))
    }
}

impl fmt::Display for ExtOrdinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtOrdinal::Cnf(o) => o.fmt(f),
            ExtOrdinal::EpsilonZero => f.write_str("e0"),
        }
    }
}

impl fmt::Display for Cardinality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinality::Finite(n) => write!(f, "{n}"),
            Cardinality::Aleph0 => f.write_str("aleph_0"),
        }
    }
}

impl std::ops::Add for &Ordinal {
    type Output = Ordinal;
    fn add(self, rhs: &Ordinal) -> Ordinal {
        self.ord_add(rhs)
    }
}

impl std::ops::Mul for &Ordinal {
    type Output = Ordinal;
    fn mul(self, rhs: &Ordinal) -> Ordinal {
        self.ord_mul(rhs)
    }
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Self {
        Self::natural(n)
    }
}

pub fn ord_add(a: &Ordinal, b: &Ordinal) -> Ordinal {
    a.ord_add(b)
}

pub fn ord_mul(a: &Ordinal, b: &Ordinal) -> Ordinal {
    a.ord_mul(b)
}

pub fn ord_pow(a: &Ordinal, b: &Ordinal) -> Result<Ordinal> {
    a.ord_pow(b)
}

/// The tower `ω^ω^…^ω` with `height` ω's (right-associated).
pub fn omega_tower(height: u64) -> Ordinal {
    let mut acc = Ordinal::one();
    for _ in 0..height {
        acc = Ordinal::omega_pow(acc);
    }
    acc
}

/// `ω ⊗^k n`: the explosive-operator recursion with `m = ω`, where level 0
/// is `x ↦ ω·x` and level 1 is `x ↦ ω^x`.
///
/// For `k ≥ 3` and `n ≥ 2` the value is at least ε₀ and is rejected.
pub fn omega_hyper(k: u64, n: u64) -> Result<Ordinal> {
    if n == 0 {
        return Err(Error::domain("ω ⊗^k 0 is undefined"));
    }
    let omega = Ordinal::omega();
    if n == 1 {
        return Ok(omega);
    }
    match k {
        0 => Ok(omega.ord_mul(&Ordinal::natural(n))),
        1 => Ok((1..n).fold(omega.clone(), |acc, _| omega.ord_mul(&acc))),
        2 => Ok(omega_tower(n)),
        _ => Err(Error::domain(format!(
            "ω ⊗^{k} {n} is not below ε₀"
        ))),
    }
}

/// Supremum of `ω ⊗^k n` over finite `n`: ω², ω^ω and ε₀ for `k` = 0, 1, 2.
pub fn omega_hyper_limit(k: u64) -> Result<ExtOrdinal> {
    let omega = Ordinal::omega();
    match k {
        0 => Ok(ExtOrdinal::Cnf(Ordinal::omega_pow(Ordinal::natural(2u8)))),
        1 => Ok(ExtOrdinal::Cnf(Ordinal::omega_pow(omega))),
        2 => Ok(ExtOrdinal::EpsilonZero),
        _ => Err(Error::domain(format!(
            "the limit of ω ⊗^{k} n lies beyond ε₀"
        ))),
    }
}

/// The `n`-th element of the standard fundamental sequence of a limit
/// ordinal: `(γ + ω^(β+1))[n] = γ + ω^β·n`, `(γ + ω^λ)[n] = γ + ω^(λ[n])`,
/// and `ε₀[n]` is the tower of `n` ω's.
pub fn fundamental(a: &ExtOrdinal, n: u64) -> Result<Ordinal> {
    if n == 0 {
        return Err(Error::domain("fundamental sequences are indexed from 1"));
    }
    match a {
        ExtOrdinal::EpsilonZero => Ok(omega_tower(n)),
        ExtOrdinal::Cnf(a) => fundamental_cnf(a, n),
    }
}

fn fundamental_cnf(a: &Ordinal, n: u64) -> Result<Ordinal> {
    if !a.is_limit() {
        return Err(Error::domain(format!(
            "{a} is not a limit ordinal"
        )));
    }
    let mut prefix = a.terms.to_vec();
    let last = prefix.pop().expect("limit ordinals are nonzero");
    let c = last.coefficient.pred();
    if !c.is_zero() {
        prefix.push(Term {
            exponent: last.exponent.clone(),
            coefficient: c,
        });
    }
    let step = match last.exponent.predecessor() {
        Some(beta) => Ordinal::term(beta, n),
        None => Ordinal::omega_pow(fundamental_cnf(&last.exponent, n)?),
    };
    Ok(Ordinal { terms: prefix.into() }.ord_add(&step))
}

pub fn cardinality_of(a: &ExtOrdinal) -> Cardinality {
    match a {
        ExtOrdinal::Cnf(o) => match o.as_natural() {
            Some(n) => Cardinality::Finite(n),
            None => Cardinality::Aleph0,
        },
        ExtOrdinal::EpsilonZero => Cardinality::Aleph0,
    }
}

#[cfg(test)]
mod tests;
