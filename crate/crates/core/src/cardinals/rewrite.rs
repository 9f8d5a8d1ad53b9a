//! Rewrite rules over [`CardinalExpr`], the normalizing strategy, an
//! all-paths explorer used for confluence checks, and comparison.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use super::CardinalExpr;
use crate::hyperops::{hyper, HyperCall, HyperResult, DEFAULT_BUDGET_BITS};
use crate::ordinals::Ordinal;
use crate::{Error, Exec, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    /// `choose(aleph_a) → 2^aleph_a`
    Cbt,
    /// `2^aleph_a → aleph_(a+1)`
    Gch,
    /// `hyper(aleph_a, aleph_0, aleph_a) → aleph_(a+1)`
    Am,
    /// `2^aleph_a → hyper(2, 1, aleph_a)`; only taken by the explorer.
    AmPower,
    /// `hyper(m, k, aleph_a) → aleph_(a+1)` for finite `m > 1`, `k > 0`
    Ct,
    /// Finite `2^n` and `hyper(m, k, n)` evaluated exactly.
    Eval,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::Cbt => "CBT",
            Rule::Gch => "GCH",
            Rule::Am | Rule::AmPower => "AM",
            Rule::Ct => "CT",
            Rule::Eval => "EVAL",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One rule application: `redex` was replaced by `result`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub rule: Rule,
    pub redex: CardinalExpr,
    pub result: CardinalExpr,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {} => {}", self.rule, self.redex, self.result)
    }
}

enum Blocked {
    Budget(String),
    Undefined(String),
}

fn successor(alpha: &Ordinal) -> CardinalExpr {
    CardinalExpr::Aleph(alpha.ord_add(&Ordinal::one()))
}

fn eval_finite(m: &BigUint, k: &BigUint, n: &BigUint, budget: u64) -> std::result::Result<BigUint, Blocked> {
    let Some(k) = k.to_u64() else {
        return Err(Blocked::Budget(format!("level {k} is out of range")));
    };
    let call = HyperCall::new(m.clone(), k, n.clone()).map_err(|e| Blocked::Undefined(e.to_string()))?;
    match hyper(&call, budget) {
        Ok(HyperResult::Exact(v)) => Ok(v),
        Ok(HyperResult::Exceeded(magnitude)) => Err(Blocked::Budget(magnitude.to_string())),
        Err(e) => Err(Blocked::Undefined(e.to_string())),
    }
}

/// Rewrites applicable at the root of `e`, highest priority first.
fn root_rewrites(e: &CardinalExpr, budget: u64) -> (Vec<(Rule, CardinalExpr)>, Option<Blocked>) {
    use CardinalExpr::*;
    let mut out = Vec::new();
    let mut blocked = None;
    match e {
        Choose(inner) => {
            if let Aleph(_) = **inner {
                out.push((Rule::Cbt, CardinalExpr::pow2((**inner).clone())));
            }
        }
        Pow2(inner) => match &**inner {
            Aleph(alpha) => {
                out.push((Rule::Gch, successor(alpha)));
                out.push((
                    Rule::AmPower,
                    CardinalExpr::hyper(CardinalExpr::fin(2u32), CardinalExpr::fin(1u32), (**inner).clone()),
                ));
            }
            Fin(n) if n.is_zero() => out.push((Rule::Eval, CardinalExpr::fin(1u32))),
            Fin(n) => match eval_finite(&BigUint::from(2u32), &BigUint::one(), n, budget) {
                Ok(v) => out.push((Rule::Eval, Fin(v))),
                Err(b) => blocked = Some(b),
            },
            _ => {}
        },
        Hyper(a, b, c) => match (&**a, &**b, &**c) {
            (Aleph(x), Aleph(zero), Aleph(y)) if x == y && zero.is_zero() => {
                out.push((Rule::Am, successor(x)));
            }
            (Fin(m), Fin(k), Aleph(alpha)) if *m > BigUint::one() && !k.is_zero() => {
                out.push((Rule::Ct, successor(alpha)));
            }
            (Fin(m), Fin(k), Fin(n)) => match eval_finite(m, k, n, budget) {
                Ok(v) => out.push((Rule::Eval, Fin(v))),
                Err(b) => blocked = Some(b),
            },
            _ => {}
        },
        Fin(_) | Aleph(_) => {}
    }
    (out, blocked)
}

/// Every single-step rewrite of `e` at any position.
pub fn one_step_rewrites(e: &CardinalExpr, budget: u64) -> Vec<(Rule, CardinalExpr)> {
    use CardinalExpr::*;
    let mut out = root_rewrites(e, budget).0;
    match e {
        Pow2(x) => out.extend(
            one_step_rewrites(x, budget)
                .into_iter()
                .map(|(r, x)| (r, CardinalExpr::pow2(x))),
        ),
        Choose(x) => out.extend(
            one_step_rewrites(x, budget)
                .into_iter()
                .map(|(r, x)| (r, CardinalExpr::choose(x))),
        ),
        Hyper(a, b, c) => {
            for (r, a) in one_step_rewrites(a, budget) {
                out.push((r, CardinalExpr::hyper(a, (**b).clone(), (**c).clone())));
            }
            for (r, b) in one_step_rewrites(b, budget) {
                out.push((r, CardinalExpr::hyper((**a).clone(), b, (**c).clone())));
            }
            for (r, c) in one_step_rewrites(c, budget) {
                out.push((r, CardinalExpr::hyper((**a).clone(), (**b).clone(), c)));
            }
        }
        Fin(_) | Aleph(_) => {}
    }
    out
}

fn reduce(e: &CardinalExpr, budget: u64, trace: &mut Vec<Step>) -> Result<CardinalExpr> {
    use CardinalExpr::*;
    let e = match e {
        Fin(_) | Aleph(_) => return Ok(e.clone()),
        Pow2(x) => CardinalExpr::pow2(reduce(x, budget, trace)?),
        Choose(x) => CardinalExpr::choose(reduce(x, budget, trace)?),
        Hyper(a, b, c) => CardinalExpr::hyper(
            reduce(a, budget, trace)?,
            reduce(b, budget, trace)?,
            reduce(c, budget, trace)?,
        ),
    };
    let (rewrites, blocked) = root_rewrites(&e, budget);
    match rewrites.into_iter().find(|(r, _)| *r != Rule::AmPower) {
        Some((rule, result)) => {
            trace.push(Step {
                rule,
                redex: e,
                result: result.clone(),
            });
            reduce(&result, budget, trace)
        }
        None => Err(match blocked {
            Some(Blocked::Budget(why)) => Error::Unnormalizable(format!("{e}: {why}")),
            Some(Blocked::Undefined(why)) => Error::NoRuleApplies(format!("{e}: {why}")),
            None => Error::NoRuleApplies(e.to_string()),
        }),
    }
}

/// Rewrites `e` to an aleph or a natural, recording each rule applied.
///
/// Subexpressions are reduced innermost first. Finite parts are evaluated
/// under `budget` bits.
pub fn normalize_traced(e: &CardinalExpr, budget: u64) -> Result<(CardinalExpr, Vec<Step>)> {
    let mut trace = Vec::new();
    let normal = reduce(e, budget, &mut trace)?;
    Ok((normal, trace))
}

pub fn normalize(e: &CardinalExpr) -> Result<CardinalExpr> {
    normalize_traced(e, DEFAULT_BUDGET_BITS).map(|(n, _)| n)
}

/// All irreducible expressions reachable from `e` by any sequence of rule
/// applications, the explorer-only rules included.
pub fn explore_normal_forms(e: &CardinalExpr, budget: u64) -> BTreeSet<CardinalExpr> {
    let mut seen = HashSet::new();
    let mut stack = vec![e.clone()];
    let mut irreducible = BTreeSet::new();
    while let Some(x) = stack.pop() {
        if !seen.insert(x.clone()) {
            continue;
        }
        let next = one_step_rewrites(&x, budget);
        if next.is_empty() {
            irreducible.insert(x);
        }
        stack.extend(next.into_iter().map(|(_, y)| y));
    }
    irreducible
}

const LEAF_NATURALS: [u32; 4] = [0, 1, 2, 3];

fn leaf_indices() -> Vec<Ordinal> {
    let w = Ordinal::omega();
    vec![
        Ordinal::zero(),
        Ordinal::one(),
        w.clone(),
        &w + &Ordinal::one(),
        &w * &Ordinal::natural(2u32),
    ]
}

/// Every expression with at most `max_depth` levels and `max_nodes` nodes,
/// built from the naturals 0–3 and alephs indexed by 0, 1, ω, ω+1, ω·2.
pub fn enumerate(max_depth: usize, max_nodes: usize) -> Vec<CardinalExpr> {
    let mut leaves: Vec<CardinalExpr> = LEAF_NATURALS.iter().map(|&n| CardinalExpr::fin(n)).collect();
    leaves.extend(leaf_indices().into_iter().map(CardinalExpr::Aleph));

    // by_size[s]: expressions of exactly s nodes within the current depth
    let mut by_size: Vec<Vec<CardinalExpr>> = vec![Vec::new(); max_nodes + 1];
    if max_nodes == 0 || max_depth == 0 {
        return Vec::new();
    }
    by_size[1] = leaves.clone();
    for _ in 1..max_depth {
        let mut next: Vec<Vec<CardinalExpr>> = vec![Vec::new(); max_nodes + 1];
        next[1] = leaves.clone();
        for s in 2..=max_nodes {
            for x in &by_size[s - 1] {
                next[s].push(CardinalExpr::pow2(x.clone()));
                next[s].push(CardinalExpr::choose(x.clone()));
            }
            for sa in 1..s {
                for sb in 1..s - sa {
                    let sc = s - 1 - sa - sb;
                    if sc == 0 {
                        continue;
                    }
                    for a in &by_size[sa] {
                        for b in &by_size[sb] {
                            for c in &by_size[sc] {
                                next[s].push(CardinalExpr::hyper(a.clone(), b.clone(), c.clone()));
                            }
                        }
                    }
                }
            }
        }
        by_size = next;
    }
    by_size.into_iter().flatten().collect()
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConfluenceReport {
    pub checked: usize,
    /// Expressions with more than one irreducible form.
    pub divergent: Vec<(CardinalExpr, Vec<CardinalExpr>)>,
    /// Expressions where [`normalize`] disagrees with the explored form.
    pub strategy_mismatches: Vec<CardinalExpr>,
}

impl ConfluenceReport {
    pub fn is_confluent(&self) -> bool {
        self.divergent.is_empty() && self.strategy_mismatches.is_empty()
    }
}

/// Explores every rewrite path from every expression in `exprs`.
pub fn check_confluence(exprs: &[CardinalExpr], budget: u64, exec: Exec) -> ConfluenceReport {
    let results = exec.map(exprs, |e| {
        let forms = explore_normal_forms(e, budget);
        let strategy = normalize_traced(e, budget);
        let agrees = match (&strategy, forms.len()) {
            (Ok((n, _)), 1) => forms.contains(n),
            (Err(_), 1) => !forms.iter().next().is_some_and(|f| f.is_normal()),
            _ => true,
        };
        (forms, agrees)
    });
    let mut report = ConfluenceReport {
        checked: exprs.len(),
        ..Default::default()
    };
    for (e, (forms, agrees)) in exprs.iter().zip(results) {
        if forms.len() != 1 {
            report.divergent.push((e.clone(), forms.into_iter().collect()));
        } else if !agrees {
            report.strategy_mismatches.push(e.clone());
        }
    }
    report
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CardinalOrdering {
    Le,
    Ge,
    Eq,
    Unknown,
}

impl fmt::Display for CardinalOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CardinalOrdering::Le => "le",
            CardinalOrdering::Ge => "ge",
            CardinalOrdering::Eq => "eq",
            CardinalOrdering::Unknown => "unknown",
        })
    }
}

fn from_ordering(o: Ordering) -> CardinalOrdering {
    match o {
        Ordering::Less => CardinalOrdering::Le,
        Ordering::Equal => CardinalOrdering::Eq,
        Ordering::Greater => CardinalOrdering::Ge,
    }
}

fn compare_normal(a: &CardinalExpr, b: &CardinalExpr) -> Ordering {
    use CardinalExpr::*;
    match (a, b) {
        (Fin(x), Fin(y)) => x.cmp(y),
        (Aleph(x), Aleph(y)) => x.cmp(y),
        (Fin(_), Aleph(_)) => Ordering::Less,
        (Aleph(_), Fin(_)) => Ordering::Greater,
        _ => unreachable!("normal forms are naturals or alephs"),
    }
}

/// Too large to evaluate yet certainly finite.
fn is_huge_finite(e: &CardinalExpr, normal: &Result<CardinalExpr>) -> bool {
    e.is_finite_expr() && matches!(normal, Err(Error::Unnormalizable(_)))
}

/// Inside the region where `m ⊗^k n` is monotone in every argument:
/// base not 0 or 1, last argument not 0.
fn in_monotone_domain(e: &CardinalExpr) -> bool {
    let CardinalExpr::Hyper(m, _, n) = e else {
        return false;
    };
    let small = |x: &CardinalExpr, limit: u32| {
        matches!(normalize(x), Ok(CardinalExpr::Fin(v)) if v <= BigUint::from(limit))
    };
    !small(m, 1) && !small(n, 0)
}

/// Compares two cardinals when the rules settle it.
pub fn compare(a: &CardinalExpr, b: &CardinalExpr) -> CardinalOrdering {
    let (na, nb) = (normalize(a), normalize(b));
    if let (Ok(x), Ok(y)) = (&na, &nb) {
        return from_ordering(compare_normal(x, y));
    }
    if is_huge_finite(a, &na) && matches!(nb, Ok(CardinalExpr::Aleph(_))) {
        return CardinalOrdering::Le;
    }
    if is_huge_finite(b, &nb) && matches!(na, Ok(CardinalExpr::Aleph(_))) {
        return CardinalOrdering::Ge;
    }
    if let (CardinalExpr::Hyper(a1, a2, a3), CardinalExpr::Hyper(b1, b2, b3)) = (a, b) {
        if in_monotone_domain(a) && in_monotone_domain(b) {
            let parts = [compare(a1, b1), compare(a2, b2), compare(a3, b3)];
            let all = |ok: &[CardinalOrdering]| parts.iter().all(|p| ok.contains(p));
            if all(&[CardinalOrdering::Eq]) {
                return CardinalOrdering::Eq;
            }
            if all(&[CardinalOrdering::Le, CardinalOrdering::Eq]) {
                return CardinalOrdering::Le;
            }
            if all(&[CardinalOrdering::Ge, CardinalOrdering::Eq]) {
                return CardinalOrdering::Ge;
            }
        }
    }
    CardinalOrdering::Unknown
}

/// Columns `α = 0..=max_alpha` of the three series
/// `aleph_α`, `2^aleph_(α−1)` and `choose(aleph_(α−1))`, the latter two
/// normalized and starting from `aleph_0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnificationTable {
    pub alephs: Vec<CardinalExpr>,
    pub powers: Vec<CardinalExpr>,
    pub choices: Vec<CardinalExpr>,
}

impl UnificationTable {
    pub fn rows_agree(&self) -> bool {
        self.alephs == self.powers && self.powers == self.choices
    }
}

impl fmt::Display for UnificationTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = [
            ("aleph_a", &self.alephs),
            ("2^aleph_(a-1)", &self.powers),
            ("choose(aleph_(a-1))", &self.choices),
        ];
        for (label, row) in rows {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            writeln!(f, "{label:<20} {}", cells.join(" "))?;
        }
        Ok(())
    }
}

pub fn unification_table(max_alpha: u64) -> Result<UnificationTable> {
    if max_alpha > 10 {
        return Err(Error::domain("unification table supports max_alpha ≤ 10"));
    }
    let mut table = UnificationTable {
        alephs: Vec::new(),
        powers: Vec::new(),
        choices: Vec::new(),
    };
    for alpha in 0..=max_alpha {
        table.alephs.push(CardinalExpr::aleph(alpha));
        if alpha == 0 {
            table.powers.push(CardinalExpr::aleph(0u64));
            table.choices.push(CardinalExpr::aleph(0u64));
        } else {
            let prev = CardinalExpr::aleph(alpha - 1);
            table.powers.push(normalize(&CardinalExpr::pow2(prev.clone()))?);
            table.choices.push(normalize(&CardinalExpr::choose(prev))?);
        }
    }
    Ok(table)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionFacts {
    /// Cardinality of the unit interval counted by infinitesimals.
    pub virtual_cardinality: CardinalExpr,
    pub bonded_set: &'static str,
}

impl FusionFacts {
    /// `2^aleph_α` normalized.
    pub fn infinitesimal_cardinality(&self, alpha: &Ordinal) -> Result<CardinalExpr> {
        normalize(&CardinalExpr::pow2(CardinalExpr::Aleph(alpha.clone())))
    }
}

pub fn fusion_facts() -> FusionFacts {
    FusionFacts {
        virtual_cardinality: CardinalExpr::aleph(0u64),
        bonded_set: "x × 2^{ℵ_α} is a bonded set",
    }
}
