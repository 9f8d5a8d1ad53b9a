//! Certified binary digits of π/4 from Machin's formula
//! `π/4 = 4·atan(1/5) − atan(1/239)` in fixed point with a tracked error bound.

use num_bigint::BigInt;
use num_traits::Zero;

/// `2^scale · atan(1/x)` truncated, and an upper bound on the absolute error
/// in units of `2^-scale`.
fn atan_inverse(x: u32, scale: usize) -> (BigInt, u64) {
    let x2 = BigInt::from(x) * x;
    // floor(2^scale / x^(2k+1)), exact under repeated floor division
    let mut power = (BigInt::from(1) << scale) / x;
    let mut sum = BigInt::zero();
    let mut terms = 0u64;
    let mut k = 0u64;
    while !power.is_zero() {
        let term = &power / (2 * k + 1);
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        terms += 1;
        k += 1;
        power /= &x2;
    }
    // one unit per truncated term, plus the alternating tail (< 1 unit)
    (sum, terms + 1)
}

/// Fixed-point approximation `A` with `|A − 2^scale·π/4| ≤ err`.
fn pi_over_4_scaled(scale: usize) -> (BigInt, u64) {
    let (a5, e5) = atan_inverse(5, scale);
    let (a239, e239) = atan_inverse(239, scale);
    (a5 * 4 - a239, 4 * e5 + e239)
}

/// First `n` bits of π/4 after the binary point, each certified by an
/// enclosing interval that does not straddle a dyadic boundary at depth `n`.
pub(crate) fn pi_over_4_bits(n: usize) -> Vec<bool> {
    if n == 0 {
        return Vec::new();
    }
    let mut guard = 32;
    loop {
        let scale = n + guard;
        let (approx, err) = pi_over_4_scaled(scale);
        let lo: BigInt = (&approx - err) >> guard;
        let hi: BigInt = (&approx + err) >> guard;
        if lo == hi {
            return (0..n)
                .rev()
                .map(|shift| lo.bit(shift as u64))
                .collect();
        }
        guard *= 2;
    }
}
