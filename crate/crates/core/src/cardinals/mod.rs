//! Finite set-theoretic foundations and symbolic transfinite cardinals.
//!
//! The finite half works with hereditarily finite sets: von Neumann
//! numerals, powersets and Cantor's diagonal witness. The transfinite half
//! is a rewriting system over [`CardinalExpr`] whose rules are the
//! consequences of monotonicity and fusion taken as axioms; see
//! [`Rule`] for the rule set.

mod expr;
mod rewrite;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::{Error, Result};

pub use expr::{parse_cardinal, CardinalExpr};
pub use rewrite::{
    check_confluence, compare, enumerate, explore_normal_forms, fusion_facts, normalize,
    normalize_traced, one_step_rewrites, unification_table, CardinalOrdering, ConfluenceReport,
    FusionFacts, Rule, Step, UnificationTable,
};

/// A hereditarily finite set.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PureSet(BTreeSet<PureSet>);

impl PureSet {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_members(members: impl IntoIterator<Item = PureSet>) -> Self {
        Self(members.into_iter().collect())
    }

    pub fn members(&self) -> impl Iterator<Item = &PureSet> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: &PureSet) -> bool {
        self.0.contains(x)
    }

    pub fn is_subset(&self, other: &PureSet) -> bool {
        self.0.is_subset(&other.0)
    }
}

impl fmt::Display for PureSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for PureSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The von Neumann numeral `n = {0, 1, …, n−1}`.
pub fn nat_to_set(n: usize) -> PureSet {
    let mut current = PureSet::empty();
    for _ in 0..n {
        let mut next = current.0.clone();
        next.insert(current);
        current = PureSet(next);
    }
    current
}

/// Inverse of [`nat_to_set`]; rejects sets that are not numerals.
pub fn set_to_nat(s: &PureSet) -> Result<usize> {
    let mut values: Vec<usize> = s.members().map(set_to_nat).collect::<Result<_>>()?;
    values.sort_unstable();
    if values.iter().enumerate().all(|(i, &v)| i == v) {
        Ok(values.len())
    } else {
        Err(Error::domain(format!("{s} is not a von Neumann numeral")))
    }
}

/// All subsets of `s`. Exponential in `|s|`; sets above 24 members are refused.
pub fn powerset(s: &PureSet) -> Result<PureSet> {
    let members: Vec<&PureSet> = s.members().collect();
    if members.len() > 24 {
        return Err(Error::TooLarge(format!(
            "powerset of a {}-element set",
            members.len()
        )));
    }
    let subsets = (0u32..1 << members.len()).map(|mask| {
        PureSet::from_members(
            members
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, m)| (*m).clone()),
        )
    });
    Ok(PureSet::from_members(subsets))
}

/// Cantor's witness `D = {x ∈ s : x ∉ f(x)}`, which no member maps to.
///
/// `f` must be defined on every member of `s` and map into subsets of `s`.
pub fn diagonal_witness(s: &PureSet, f: &BTreeMap<PureSet, PureSet>) -> Result<PureSet> {
    let mut d = BTreeSet::new();
    for x in s.members() {
        let image = f
            .get(x)
            .ok_or_else(|| Error::domain(format!("mapping undefined at {x}")))?;
        if !image.is_subset(s) {
            return Err(Error::domain(format!("f({x}) = {image} is not a subset of {s}")));
        }
        if !image.contains(x) {
            d.insert(x.clone());
        }
    }
    Ok(PureSet(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(ns: &[usize]) -> PureSet {
        PureSet::from_members(ns.iter().map(|&n| nat_to_set(n)))
    }

    #[test]
    fn numerals() {
        assert_eq!(nat_to_set(0), PureSet::empty());
        assert_eq!(nat_to_set(0).to_string(), "{}");
        assert_eq!(nat_to_set(3), set(&[0, 1, 2]));
        assert_eq!(nat_to_set(2).to_string(), "{{},{{}}}");
        for n in 0..=12 {
            assert_eq!(set_to_nat(&nat_to_set(n)).unwrap(), n);
        }
        assert!(set_to_nat(&set(&[1])).is_err());
        assert!(set_to_nat(&set(&[0, 2])).is_err());
    }

    #[test]
    fn powersets() {
        assert_eq!(powerset(&PureSet::empty()).unwrap(), set(&[0]));
        assert_eq!(powerset(&nat_to_set(2)).unwrap().len(), 4);
        for n in 0..=6 {
            let s = nat_to_set(n);
            let p = powerset(&s).unwrap();
            assert_eq!(p.len(), 1 << n);
            assert!(p.len() > s.len());
            assert!(p.members().all(|x| x.is_subset(&s)));
        }
    }

    #[test]
    fn witness_examples() {
        let s = nat_to_set(2);
        let singletons: BTreeMap<_, _> = s
            .members()
            .map(|x| (x.clone(), PureSet::from_members([x.clone()])))
            .collect();
        assert_eq!(diagonal_witness(&s, &singletons).unwrap(), PureSet::empty());
        let empties: BTreeMap<_, _> = s.members().map(|x| (x.clone(), PureSet::empty())).collect();
        assert_eq!(diagonal_witness(&s, &empties).unwrap(), s);

        let partial: BTreeMap<_, _> = [(nat_to_set(0), PureSet::empty())].into();
        assert!(diagonal_witness(&s, &partial).is_err());
        let outside: BTreeMap<_, _> = s.members().map(|x| (x.clone(), set(&[5]))).collect();
        assert!(diagonal_witness(&s, &outside).is_err());
    }
}
