use proptest::prelude::*;

use super::*;

fn w() -> Ordinal {
    Ordinal::omega()
}

fn n(x: u64) -> Ordinal {
    Ordinal::natural(x)
}

fn p(text: &str) -> Ordinal {
    parse_ordinal(text).unwrap()
}

#[test]
fn absorption_examples() {
    assert_eq!(&n(1) + &w(), w());
    assert_eq!((&w() + &n(1)).to_string(), "w + 1");
    assert_eq!(&n(2) * &w(), w());
    assert_eq!((&w() * &n(2)).to_string(), "w*2");
    let ww = Ordinal::omega_pow(w());
    assert_eq!(&ww * &ww, Ordinal::omega_pow(&w() * &n(2)));
    assert_eq!((&ww * &ww).to_string(), "w^(w*2)");
}

#[test]
fn powers() {
    assert_eq!(p("2^w"), w());
    assert_eq!(p("2^(w+3)"), p("w*8"));
    assert_eq!(p("(w+1)^2"), p("w^2 + w + 1"));
    assert_eq!(p("(w+1)^w"), p("w^w"));
    assert_eq!(p("(w*2)^2"), p("w^2*2"));
    assert_eq!(p("w^(w+2)"), Ordinal::omega_pow(p("w+2")));
    assert_eq!(p("3^(w^2)"), p("w^w"));
    assert_eq!(p("0^w"), n(0));
    assert_eq!(p("w^0"), n(1));
    assert!(matches!(p("w").ord_pow(&n(MAX_FINITE_POWER + 1)), Err(Error::TooLarge(_))));
    assert!(matches!(n(3).ord_pow(&n(10_000_000)), Err(Error::TooLarge(_))));
}

#[test]
fn omega_hyper_values() {
    assert_eq!(omega_hyper(2, 3).unwrap(), p("w^(w^w)"));
    assert_eq!(omega_hyper(1, 2).unwrap(), p("w^2"));
    assert_eq!(omega_hyper(1, 5).unwrap(), p("w^5"));
    assert_eq!(omega_hyper(0, 3).unwrap(), p("w*3"));
    for k in 0..6 {
        assert_eq!(omega_hyper(k, 1).unwrap(), w());
    }
    assert!(omega_hyper(3, 2).is_err());
    assert!(omega_hyper(1, 0).is_err());
}

#[test]
fn omega_hyper_limits() {
    assert_eq!(omega_hyper_limit(0).unwrap(), ExtOrdinal::Cnf(p("w^2")));
    assert_eq!(omega_hyper_limit(1).unwrap(), ExtOrdinal::Cnf(p("w^w")));
    assert_eq!(omega_hyper_limit(2).unwrap(), ExtOrdinal::EpsilonZero);
    assert!(omega_hyper_limit(3).is_err());
    // each finite stage lies below its limit
    for k in 0..2 {
        let ExtOrdinal::Cnf(limit) = omega_hyper_limit(k).unwrap() else { unreachable!() };
        for m in 1..10 {
            assert!(omega_hyper(k, m).unwrap() < limit);
        }
    }
}

#[test]
fn fundamental_examples() {
    let cnf = |t: &str| ExtOrdinal::Cnf(p(t));
    for i in 1..10 {
        assert_eq!(fundamental(&cnf("w"), i).unwrap(), n(i));
        assert_eq!(fundamental(&cnf("w*2"), i).unwrap(), &w() + &n(i));
        assert_eq!(fundamental(&cnf("w^w"), i).unwrap(), Ordinal::omega_pow(n(i)));
    }
    assert_eq!(fundamental(&ExtOrdinal::EpsilonZero, 3).unwrap(), p("w^(w^w)"));
    assert_eq!(fundamental(&cnf("w^2*3 + w"), 4).unwrap(), p("w^2*3 + 4"));
    assert_eq!(fundamental(&cnf("w^(w+1)"), 2).unwrap(), p("w^w*2"));
    assert!(fundamental(&cnf("w+1"), 2).is_err());
    assert!(fundamental(&cnf("0"), 2).is_err());
    assert!(fundamental(&cnf("w"), 0).is_err());
}

#[test]
fn fundamental_sequences_increase_below_their_limit() {
    let limits = ["w", "w*2", "w^2", "w^w", "w^(w+1)*2 + w^3", "w^(w^w)", "w^(w*2) + w"];
    for text in limits {
        let a = p(text);
        for i in 1..=20 {
            let x = fundamental(&ExtOrdinal::Cnf(a.clone()), i).unwrap();
            let y = fundamental(&ExtOrdinal::Cnf(a.clone()), i + 1).unwrap();
            assert!(x < y && y < a, "{text}[{i}]");
            assert!(x.is_valid_cnf());
        }
    }
    for i in 1..=5 {
        assert_eq!(omega_hyper(2, i).unwrap(), fundamental(&ExtOrdinal::EpsilonZero, i).unwrap());
    }
}

#[test]
fn cardinalities() {
    assert_eq!(cardinality_of(&ExtOrdinal::Cnf(n(5))), Cardinality::Finite(5u8.into()));
    assert_eq!(cardinality_of(&ExtOrdinal::Cnf(p("w^w"))), Cardinality::Aleph0);
    assert_eq!(cardinality_of(&ExtOrdinal::EpsilonZero), Cardinality::Aleph0);
}

#[test]
fn from_terms_validates() {
    let t = |e: Ordinal, c: u64| Term::new(e, c);
    assert!(Ordinal::from_terms(vec![t(n(2), 1), t(n(1), 3)]).is_ok());
    assert!(Ordinal::from_terms(vec![t(n(1), 1), t(n(2), 3)]).is_err());
    assert!(Ordinal::from_terms(vec![t(n(1), 1), t(n(1), 3)]).is_err());
    assert!(Ordinal::from_terms(vec![t(n(1), 0)]).is_err());
}

fn arb_ordinal() -> impl Strategy<Value = Ordinal> {
    let leaf = (0u64..4).prop_map(Ordinal::natural);
    leaf.prop_recursive(3, 24, 4, |inner| {
        prop::collection::vec((inner, 1u64..4), 1..4).prop_map(|parts| {
            parts.into_iter().fold(Ordinal::zero(), |acc, (e, c)| {
                acc.ord_add(&Ordinal::term(e, c))
            })
        })
    })
}

proptest! {
    #[test]
    fn arithmetic_laws(a in arb_ordinal(), b in arb_ordinal(), c in arb_ordinal()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        for r in [&a + &b, &a * &b] {
            prop_assert!(r.is_valid_cnf());
        }
    }

    #[test]
    fn pow_laws(a in arb_ordinal(), b in arb_ordinal(), c in arb_ordinal()) {
        let wa = Ordinal::omega().ord_pow(&a).unwrap();
        prop_assert_eq!(wa.terms().len(), 1);
        prop_assert_eq!(&wa.terms()[0].exponent, &a);
        {
            if let (Ok(lhs), Ok(x), Ok(y)) = (a.ord_pow(&(&b + &c)), a.ord_pow(&b), a.ord_pow(&c)) {
                prop_assert_eq!(lhs, &x * &y);
            }
        }
    }

    #[test]
    fn order_and_monotonicity(a in arb_ordinal(), b in arb_ordinal(), c in arb_ordinal()) {
        if b < c {
            prop_assert!(&a + &b < &a + &c);
            if !a.is_zero() {
                prop_assert!(&a * &b < &a * &c);
            }
        }
        prop_assert_eq!(a.cmp(&b), b.cmp(&a).reverse());
        prop_assert!(&a + &b >= b);
    }

    #[test]
    fn printing_roundtrips(a in arb_ordinal()) {
        prop_assert_eq!(parse_ordinal(&a.to_string()).unwrap(), a);
    }
}
