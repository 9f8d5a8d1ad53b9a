//! The explosive operators `m ⊗^k n` on naturals:
//!
//! ```text
//! m ⊗^0 n = m·n
//! m ⊗^k 1 = m
//! m ⊗^k n = m ⊗^(k-1) [m ⊗^(k-1) [ … [m ⊗^(k-1) m]]]   (n copies of m)
//! ```
//!
//! Level 1 is exponentiation and level 2 the right-associated power tower.
//! Evaluation runs under a bit-length budget; sizes are estimated before
//! any oversized integer is materialized.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Pow, ToPrimitive, Zero};

use crate::{Error, Exec, Result};

/// Default budget on the bit length of an exact result.
pub const DEFAULT_BUDGET_BITS: u64 = 1 << 20;

/// Smallest accepted budget.
pub const MIN_BUDGET_BITS: u64 = 64;

/// Arguments of `m ⊗^k n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HyperCall {
    pub m: BigUint,
    pub k: u64,
    pub n: BigUint,
}

impl HyperCall {
    /// Validates the arguments: for `k ≥ 1` both `m` and `n` must be positive.
    pub fn new(m: impl Into<BigUint>, k: u64, n: impl Into<BigUint>) -> Result<Self> {
        let call = Self {
            m: m.into(),
            k,
            n: n.into(),
        };
        if k >= 1 && call.n.is_zero() {
            return Err(Error::domain(format!("{} ⊗^{k} 0 is undefined", call.m)));
        }
        if k >= 1 && call.m.is_zero() {
            return Err(Error::domain(format!("0 ⊗^{k} {} is undefined", call.n)));
        }
        Ok(call)
    }
}

impl fmt::Display for HyperCall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊗^{} {}", self.m, self.k, self.n)
    }
}

/// Structural size of a result too large to evaluate:
/// `applications` nested applications of `x ↦ m ⊗^level x` starting at `seed`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Magnitude {
    pub m: BigUint,
    pub level: u64,
    pub applications: BigUint,
    pub seed: BigUint,
    pub budget: u64,
}

fn describe_number(x: &BigUint) -> String {
    if x.bits() <= 128 {
        x.to_string()
    } else {
        format!("a {}-bit number", x.bits())
    }
}

impl fmt::Display for Magnitude {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.m;
        let seed = describe_number(&self.seed);
        if self.applications.is_one() {
            match self.level {
                0 => write!(f, "{m} · {seed}")?,
                1 => write!(f, "{m}^{seed}")?,
                2 => write!(f, "{m} ⊗^2 {seed}, a power tower of {seed} copies of {m}")?,
                l => write!(f, "{m} ⊗^{l} {seed}")?,
            }
        } else {
            write!(
                f,
                "{} nested applications of x ↦ {m} ⊗^{} x starting from {seed}",
                describe_number(&self.applications),
                self.level
            )?;
        }
        write!(f, "; exceeds the budget of {} bits", self.budget)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HyperResult {
    Exact(BigUint),
    Exceeded(Magnitude),
}

impl HyperResult {
    pub fn exact(&self) -> Option<&BigUint> {
        match self {
            HyperResult::Exact(v) => Some(v),
            HyperResult::Exceeded(_) => None,
        }
    }
}

/// Evaluates `m ⊗^k n`, or describes its size if the bit length would exceed
/// `budget`.
pub fn hyper(call: &HyperCall, budget: u64) -> Result<HyperResult> {
    let call = HyperCall::new(call.m.clone(), call.k, call.n.clone())?;
    if budget < MIN_BUDGET_BITS {
        return Err(Error::domain(format!(
            "budget must be at least {MIN_BUDGET_BITS} bits"
        )));
    }
    Ok(match eval(&call.m, call.k, &call.n, budget) {
        Ok(v) => HyperResult::Exact(v),
        Err(magnitude) => HyperResult::Exceeded(magnitude),
    })
}

fn exceeded(m: &BigUint, level: u64, applications: BigUint, seed: &BigUint, budget: u64) -> Magnitude {
    Magnitude {
        m: m.clone(),
        level,
        applications,
        seed: seed.clone(),
        budget,
    }
}

fn within(v: BigUint, budget: u64, on_fail: impl FnOnce() -> Magnitude) -> Result<BigUint, Magnitude> {
    if v.bits() <= budget {
        Ok(v)
    } else {
        Err(on_fail())
    }
}

/// log2 of a nonzero natural, accurate to about 1e-15 relative.
fn log2(x: &BigUint) -> f64 {
    let bits = x.bits();
    let shift = bits.saturating_sub(64);
    let top = (x >> shift).to_f64().expect("fits in f64");
    top.log2() + shift as f64
}

fn eval(m: &BigUint, k: u64, n: &BigUint, budget: u64) -> Result<BigUint, Magnitude> {
    let one = BigUint::one();
    let fail = |level, applications, seed: &BigUint| exceeded(m, level, applications, seed, budget);
    if k == 0 {
        if m.is_zero() || n.is_zero() {
            return Ok(BigUint::zero());
        }
        // bits(m·n) ≥ bits(m) + bits(n) − 1
        if m.bits() + n.bits() - 1 > budget {
            return Err(fail(0, one, n));
        }
        return within(m * n, budget, || fail(0, BigUint::one(), n));
    }
    if m.is_one() {
        return Ok(one);
    }
    if n.is_one() {
        return within(m.clone(), budget, || fail(k, BigUint::one(), n));
    }
    if k == 1 {
        // bits(m^n) = floor(n·log2 m) + 1 with m ≥ 2, so n > budget already exceeds
        if *n > BigUint::from(budget) {
            return Err(fail(1, one, n));
        }
        let estimate = n.to_f64().expect("bounded by budget") * log2(m);
        if estimate * (1.0 - 1e-9) - 1.0 > budget as f64 {
            return Err(fail(1, one, n));
        }
        return within(Pow::pow(m, n), budget, || fail(1, BigUint::one(), n));
    }
    // m ⊗^k 2 = m ⊗^(k-1) m, so 2 ⊗^k 2 = 4 at every level
    let two = BigUint::from(2u8);
    if *m == two && *n == two {
        return within(BigUint::from(4u8), budget, || fail(k, BigUint::one(), n));
    }
    if *n == two {
        return eval(m, k - 1, m, budget).map_err(|_| fail(k - 1, BigUint::one(), m));
    }
    // With m ≥ 2, n ≥ 3, k ≥ 4 the value is at least 2 ⊗^3 4, a tower of 65536
    // twos, whose bit length exceeds every u64 budget.
    if k >= 4 {
        return Err(fail(k - 1, n - 1u8, m));
    }
    let mut acc = m.clone();
    let mut step = BigUint::one();
    while step < *n {
        match eval(m, k - 1, &acc, budget) {
            Ok(v) => acc = v,
            Err(_) => return Err(fail(k - 1, n - &step, &acc)),
        }
        step += 1u8;
    }
    Ok(acc)
}

/// Ranges for a monotonicity sweep.
#[derive(Debug, Clone)]
pub struct MonotoneGrid {
    pub m: std::ops::RangeInclusive<u64>,
    pub k: std::ops::RangeInclusive<u64>,
    pub n: std::ops::RangeInclusive<u64>,
    pub budget: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MonotoneReport {
    pub points: usize,
    /// Comparable pairs `p ≤ q` (componentwise, including `p = q`) checked.
    pub pairs_checked: usize,
    /// Pairs where both values exceeded the budget and could not be ordered.
    pub unresolved: usize,
    pub violations: Vec<(HyperCall, HyperCall)>,
}

/// Checks that `m₁ ≤ m₂, k₁ ≤ k₂, n₁ ≤ n₂` implies
/// `m₁ ⊗^k₁ n₁ ≤ m₂ ⊗^k₂ n₂` over every comparable pair of grid points.
///
/// An exact value is below any value that exceeded the budget; two exceeded
/// values are counted as unresolved.
pub fn monotone_check(grid: &MonotoneGrid, exec: Exec) -> Result<MonotoneReport> {
    if *grid.m.start() < 2 || *grid.n.start() < 2 {
        return Err(Error::domain("monotonicity sweep needs m ≥ 2 and n ≥ 2"));
    }
    let mut points = Vec::new();
    for m in grid.m.clone() {
        for k in grid.k.clone() {
            for n in grid.n.clone() {
                points.push((m, k, n));
            }
        }
    }
    let values = exec
        .map(&points, |&(m, k, n)| {
            hyper(&HyperCall::new(m, k, n)?, grid.budget)
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;

    let indices: Vec<usize> = (0..points.len()).collect();
    let per_point = exec.map(&indices, |&i| {
        let (pm, pk, pn) = points[i];
        let mut checked = 0;
        let mut unresolved = 0;
        let mut violations = Vec::new();
        for (j, &(qm, qk, qn)) in points.iter().enumerate() {
            if !(pm <= qm && pk <= qk && pn <= qn) {
                continue;
            }
            checked += 1;
            let ok = match (&values[i], &values[j]) {
                (HyperResult::Exact(a), HyperResult::Exact(b)) => a <= b,
                (HyperResult::Exact(_), HyperResult::Exceeded(_)) => true,
                (HyperResult::Exceeded(_), HyperResult::Exact(_)) => false,
                (HyperResult::Exceeded(_), HyperResult::Exceeded(_)) => {
                    unresolved += 1;
                    true
                }
            };
            if !ok {
                let call = |(m, k, n): (u64, u64, u64)| HyperCall::new(m, k, n).expect("validated");
                violations.push((call(points[i]), call(points[j])));
            }
        }
        (checked, unresolved, violations)
    });

    let mut report = MonotoneReport {
        points: points.len(),
        ..Default::default()
    };
    for (checked, unresolved, violations) in per_point {
        report.pairs_checked += checked;
        report.unresolved += unresolved;
        report.violations.extend(violations);
    }
    Ok(report)
}
