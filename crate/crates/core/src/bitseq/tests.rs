use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use super::*;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Bounds the value of a right part from its first `n` bits: the limit lies
/// in `[partial, partial + 2^-n]`.
fn partial_sum_bounds(right: &RightPart, n: usize) -> (BigRational, BigRational) {
    let mut sum = BigRational::zero();
    let mut weight = BigRational::one();
    for i in 1..=n {
        weight /= BigInt::from(2);
        if right.bit(i) {
            sum += &weight;
        }
    }
    let upper = &sum + &weight;
    (sum, upper)
}

#[test]
fn left_values() {
    assert_eq!(parse_left("(101)001001.").unwrap().value(), q(-257, 7));
    assert_eq!(parse_left("(0)10011.").unwrap().value(), q(19, 1));
    assert_eq!(parse_left("(1)00101.").unwrap().value(), q(-27, 1));
    assert_eq!(parse_left("(0).").unwrap().value(), q(0, 1));
    assert_eq!(parse_left("(1).").unwrap().value(), q(-1, 1));
}

#[test]
fn right_values_match_partial_sums() {
    for (text, expected) in [(".(10)", q(2, 3)), (".10(1)", q(3, 4)), (".(01)", q(1, 3))] {
        let r = parse_right(text).unwrap();
        let (lo, hi) = partial_sum_bounds(&r, 64);
        assert!(lo <= expected && expected <= hi, "{text}");
        assert_eq!(r.value(), expected, "{text}");
    }
}

#[test]
fn integer_encodings() {
    assert_eq!(LeftPart::from_integer(&19.into()).to_string(), "(0)10011.");
    assert_eq!(LeftPart::from_integer(&(-27).into()).to_string(), "(1)00101.");
    assert_eq!(LeftPart::from_integer(&0.into()).to_string(), "(0).");
    assert_eq!(LeftPart::from_integer(&(-1).into()).to_string(), "(1).");
}

#[test]
fn fraction_encodings() {
    assert_eq!(RightPart::from_fraction(&q(2, 3)).unwrap().to_string(), ".(10)");
    assert_eq!(RightPart::from_fraction(&q(3, 4)).unwrap().to_string(), ".10(1)");
    let half = RightPart::from_fraction(&q(1, 2)).unwrap();
    assert_eq!(half.to_string(), ".0(1)");
    assert_eq!(half.value(), q(1, 2));
    for bad in [q(0, 1), q(1, 1), q(3, 2), q(-1, 3)] {
        assert!(matches!(RightPart::from_fraction(&bad), Err(Error::Domain(_))));
    }
}

#[test]
fn universal_encodings() {
    assert_eq!(UniversalRational::from_rational(&q(59, 3)).to_string(), "(0)10011.(10)");
    assert_eq!(UniversalRational::from_rational(&q(-59, 3)).to_string(), "(1)01100.(01)");
    assert_eq!(UniversalRational::from_rational(&q(5, 1)).to_string(), "(0)101.(0)");
    assert_eq!(parse_universal("(0)10011.(10)").unwrap().value(), q(59, 3));
    assert_eq!(parse_universal("(1)01100.(01)").unwrap().value(), q(-59, 3));
    let minus_one = parse_universal("(1)0.(1)").unwrap();
    assert_eq!(minus_one.left().value(), q(-2, 1));
    assert_eq!(minus_one.right().value(), q(1, 1));
    assert_eq!(minus_one.value(), q(-1, 1));
    assert!(!minus_one.is_canonical());
    assert_eq!(minus_one.canonical().to_string(), "(1).(0)");
}

#[test]
fn complement_examples() {
    let u = parse_universal("(0)10011.(10)").unwrap();
    assert_eq!(u.complement().to_string(), "(1)01100.(01)");
    let two_thirds = parse_universal("(0).(10)").unwrap();
    let c = two_thirds.complement();
    assert_eq!(c.to_string(), "(1).(01)");
    assert_eq!(c.value(), q(-2, 3));
    assert_eq!(c.complement(), two_thirds);
    // integers: the complemented zero fraction becomes .(1) and carries
    let five = UniversalRational::from_rational(&q(5, 1));
    assert_eq!(five.complement_raw().to_string(), "(1)010.(1)");
    assert_eq!(five.complement(), UniversalRational::from_rational(&q(-5, 1)));
}

#[test]
fn flip_examples() {
    let f = parse_universal("(0).(10)").unwrap().flip(true);
    assert_eq!(f.value(), q(-1, 3));
    let written = parse_universal("(10)1.(0)").unwrap();
    assert_eq!(f.left().bits().prefix(32), written.left().bits().prefix(32));
    assert_eq!(f, written);

    let g = parse_universal("(0)10011.(0)").unwrap().flip(true);
    assert_eq!(g.to_string(), "(0).11001(0)");
    assert_eq!(g.value(), q(25, 32));
    assert!(!g.is_canonical());
    assert_eq!(parse_universal("(0)10011.(0)").unwrap().flip(false).to_string(), "(0).11000(1)");
}

#[test]
fn normalize_examples() {
    let right = |t: &str| parse_right(t).unwrap().bits().clone();
    let left = |t: &str| parse_left(t).unwrap().bits().clone();
    assert_eq!(normalize(&right(".10(10)"), Orientation::Right), right(".(10)"));
    assert_eq!(normalize(&right(".11(0)"), Orientation::Right), right(".10(1)"));
    assert_eq!(normalize(&left("(1)1."), Orientation::Left), left("(1)."));
    let n = normalize(&right(".11(0)"), Orientation::Right);
    assert_eq!(RightPart::new(n.clone()).value(), q(3, 4));
    assert_eq!(normalize(&n, Orientation::Right), n);
}

fn arb_bits(max: usize) -> impl Strategy<Value = Vec<bool>> {
    prop::collection::vec(any::<bool>(), 0..=max)
}

fn arb_periodic() -> impl Strategy<Value = PeriodicBits> {
    (arb_bits(8), prop::collection::vec(any::<bool>(), 1..=6))
        .prop_map(|(pre, per)| PeriodicBits::new(pre, per).unwrap())
}

fn arb_rational() -> impl Strategy<Value = BigRational> {
    (-5000i64..5000, 1i64..500).prop_map(|(n, d)| q(n, d))
}

proptest! {
    #[test]
    fn roundtrip_and_uniqueness(a in arb_rational(), b in arb_rational()) {
        let ua = UniversalRational::from_rational(&a);
        let ub = UniversalRational::from_rational(&b);
        prop_assert_eq!(ua.value(), a.clone());
        prop_assert_eq!(ua == ub, a == b);
        prop_assert!(ua.is_canonical());
    }

    #[test]
    fn negation(a in arb_rational()) {
        let u = UniversalRational::from_rational(&a);
        prop_assert_eq!(u.complement().value(), -a.clone());
        prop_assert_eq!(u.complement_raw().value(), -a);
        prop_assert_eq!(u.complement().complement(), u);
    }

    #[test]
    fn flip_is_an_involution(l in arb_periodic(), r in arb_periodic()) {
        let u = UniversalRational::new(LeftPart::new(l), RightPart::new(r));
        prop_assert_eq!(u.flip(true).flip(true), u.clone());
        prop_assert_eq!(u.flip(false).value(), u.flip(true).value());
    }

    #[test]
    fn normalize_is_idempotent_and_value_preserving(p in arb_periodic()) {
        for o in [Orientation::Left, Orientation::Right] {
            let n = normalize(&p, o);
            prop_assert_eq!(normalize(&n, o), n.clone());
            match o {
                Orientation::Left => prop_assert_eq!(LeftPart::new(n).value(), LeftPart::new(p.clone()).value()),
                Orientation::Right => prop_assert_eq!(RightPart::new(n).value(), RightPart::new(p.clone()).value()),
            }
        }
    }

    #[test]
    fn minimal_form_is_the_sequence(pre in arb_bits(8), per in prop::collection::vec(any::<bool>(), 1..=6)) {
        let p = PeriodicBits::new(pre.clone(), per.clone()).unwrap();
        let raw = |i: usize| if i < pre.len() { pre[i] } else { per[(i - pre.len()) % per.len()] };
        for i in 0..64 {
            prop_assert_eq!(p.bit(i), raw(i));
        }
        prop_assert!(p.preperiod().len() <= pre.len());
        prop_assert!(p.period().len() <= per.len());
    }

    #[test]
    fn two_adic_consistency(p in arb_periodic(), n in 1usize..40) {
        // A left value p/q has odd q, and its lowest n bits are p·q⁻¹ mod 2^n.
        let left = LeftPart::new(p);
        let v = left.value();
        prop_assert!(v.denom() % 2u8 == BigInt::one());
        let modulus = BigInt::one() << n;
        let lhs = (v.denom() * left.low_bits(n) - v.numer()) % &modulus;
        prop_assert!(lhs.is_zero());
    }

    #[test]
    fn index_set_roundtrip(p in arb_periodic()) {
        let l = LeftPart::new(p.clone());
        prop_assert_eq!(l.to_index_set().to_part().unwrap(), Part::Left(l));
        let r = RightPart::new(p);
        prop_assert_eq!(r.to_index_set().to_part().unwrap(), Part::Right(r));
    }

    #[test]
    fn notation_roundtrip(l in arb_periodic(), r in arb_periodic()) {
        let u = UniversalRational::new(LeftPart::new(l), RightPart::new(r));
        prop_assert_eq!(parse_universal(&u.to_string()).unwrap(), u);
    }
}

#[test]
fn minus_one_low_bits() {
    let l = parse_left("(1).").unwrap();
    for n in [1usize, 5, 17, 64] {
        assert_eq!(l.low_bits(n), (BigInt::one() << n) - 1);
    }
}
