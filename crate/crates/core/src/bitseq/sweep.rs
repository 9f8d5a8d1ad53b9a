//! Batch roundtrip checks over grids of rationals.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use super::UniversalRational;
use crate::Exec;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RoundtripReport {
    /// Distinct reduced rationals checked.
    pub checked: usize,
    /// Values whose encoding did not decode back to themselves.
    pub mismatches: Vec<BigRational>,
    /// Values whose encoding was not in canonical form.
    pub non_canonical: Vec<BigRational>,
    /// Pairs of distinct values that produced the same notation.
    pub collisions: Vec<(BigRational, BigRational)>,
}

impl RoundtripReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty() && self.non_canonical.is_empty() && self.collisions.is_empty()
    }
}

/// All reduced `p/q` with `1 ≤ q ≤ max_den` and `|p| ≤ max_num`.
pub fn rational_grid(max_num: i64, max_den: i64) -> Vec<BigRational> {
    let mut out = Vec::new();
    for q in 1..=max_den {
        for p in -max_num..=max_num {
            if p.gcd(&q) == 1 {
                out.push(BigRational::new(BigInt::from(p), BigInt::from(q)));
            }
        }
    }
    out
}

/// Encodes every value, decodes it back and checks canonicity and
/// uniqueness of the notation.
pub fn roundtrip_sweep(values: &[BigRational], exec: Exec) -> RoundtripReport {
    let results = exec.map(values, |q| {
        let u = UniversalRational::from_rational(q);
        let back = u.value();
        (u.to_string(), back == *q, u.right().is_canonical())
    });
    let mut report = RoundtripReport {
        checked: values.len(),
        ..Default::default()
    };
    let mut seen: HashMap<String, &BigRational> = HashMap::new();
    for (q, (text, roundtrips, canonical)) in values.iter().zip(results) {
        if !roundtrips {
            report.mismatches.push(q.clone());
        }
        if !canonical {
            report.non_canonical.push(q.clone());
        }
        if let Some(prev) = seen.insert(text, q) {
            if prev != q {
                report.collisions.push((prev.clone(), q.clone()));
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_grid_is_clean() {
        let grid = rational_grid(8, 8);
        assert_eq!(grid.len(), {
            let mut n = 0;
            for q in 1..=8i64 {
                for p in -8..=8i64 {
                    if num_integer::gcd(p, q) == 1 {
                        n += 1;
                    }
                }
            }
            n
        });
        let report = roundtrip_sweep(&grid, Exec::Sequential);
        assert!(report.is_clean(), "{report:?}");
        assert_eq!(report, roundtrip_sweep(&grid, Exec::Parallel));
    }
}
