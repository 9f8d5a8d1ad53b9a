use std::collections::BTreeMap;
use std::process::Command;

use proptest::prelude::*;
use uns_cli::{run, Outcome, EXIT_BUDGET, EXIT_DOMAIN, EXIT_OK, EXIT_PARSE};
use uns_core::bitseq::parse_universal;
use uns_core::rational::parse_rational;

fn uns(args: &[&str]) -> Outcome {
    run(std::iter::once("uns").chain(args.iter().copied()))
}

fn ok(args: &[&str]) -> String {
    let out = uns(args);
    assert_eq!(out.code, EXIT_OK, "{args:?}: {}", out.stderr);
    out.stdout.trim_end().to_string()
}

fn structured(args: &[&str]) -> BTreeMap<String, String> {
    let mut full = vec!["--format", "structured"];
    full.extend_from_slice(args);
    let out = uns(&full);
    out.stdout
        .lines()
        .map(|line| {
            let (k, v) = line.split_once('=').expect("key=value");
            (k.to_string(), v.to_string())
        })
        .collect()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn reduced(p: i64, q: i64) -> String {
    let g = gcd(p, q);
    let (p, q) = (p / g, q / g);
    if q == 1 {
        p.to_string()
    } else {
        format!("{p}/{q}")
    }
}

#[test]
fn worked_examples() {
    assert_eq!(ok(&["eval-left", "(101)001001."]), "-257/7");
    assert_eq!(ok(&["interval", ".110***"]), "(0.75, 0.875) width 0.125");
    assert_eq!(ok(&["convert", "59/3", "--to", "notation"]), "(0)10011.(10)");
    assert_eq!(ok(&["convert", "2/3", "--to", "notation"]), "(0).(10)");
    assert_eq!(ok(&["convert", "3/4", "--to", "notation"]), "(0).10(1)");
    assert_eq!(ok(&["convert", "-27", "--to", "notation"]), "(1)00101.(0)");
    assert_eq!(ok(&["convert", "59/3", "--to", "set"]), "-{4,1,0:1,3,5,7,...}+");
    assert_eq!(ok(&["complement", "(0)10011.(10)"]), "(1)01100.(01) = -59/3");
    assert_eq!(ok(&["flip", "(0).(10)"]), "(1).(10) = -1/3");
}

#[test]
fn decimal_truncation_is_marked() {
    assert_eq!(ok(&["convert", "1/3", "--to", "decimal", "--digits", "5"]), "0.33333…");
    assert_eq!(ok(&["convert", "-1/8", "--to", "decimal", "--digits", "5"]), "-0.125");
    assert_eq!(ok(&["convert", "(0).(10)", "--to", "decimal", "--digits", "3"]), "0.666…");
}

#[test]
fn streams() {
    // 3.14159265358979323846 / 4 = 0.785398..., binary .110010010000111111...
    assert_eq!(ok(&["bits", "pi/4", "-n", "18"]), ".110010010000111111");
    assert_eq!(ok(&["bits", "1/3", "-n", "6"]), ".010101");
    // bit i complements bit i of input i; past the list, even positions are 1
    assert_eq!(ok(&["diag", "1/3", "1/3", "-n", "6"]), ".101010");
    // 0.41421356 lies in [106/256, 107/256)
    assert_eq!(ok(&["interval", "sqrt(2)", "-n", "8"]), "(0.4140625, 0.41796875) width 0.00390625");
}

#[test]
fn hyperops() {
    assert_eq!(ok(&["hyper", "3", "2", "3"]), 3u64.pow(27).to_string());
    assert_eq!(ok(&["hyper", "2", "2", "4"]), "65536");
    let out = uns(&["hyper", "2", "3", "4"]);
    assert_eq!(out.code, EXIT_BUDGET);
    assert!(out.stdout.contains("65536"), "{}", out.stdout);
    assert!(out.stdout.contains("exceeds the budget"));
    assert_eq!(uns(&["hyper", "3", "1", "0"]).code, EXIT_DOMAIN);
}

#[test]
fn ordinals_and_cardinals() {
    assert_eq!(ok(&["ord", "eval", "w^w + 3*w + 2*w"]), "w^w + w*2");
    assert_eq!(ok(&["ord", "cmp", "w+1", "1+w"]), "w + 1 > w");
    assert_eq!(ok(&["ord", "cmp", "e0", "w^w^w"]), "e0 > w^(w^w)");
    assert_eq!(ok(&["ord", "fund", "e0", "3"]), "w^(w^w)");
    assert_eq!(ok(&["ord", "fund", "w^2", "4"]), "w*4");
    assert_eq!(ok(&["card", "normalize", "2^aleph_4"]), "aleph_5");
    assert_eq!(
        ok(&["card", "normalize", "--trace", "choose(aleph_2)"]),
        "[CBT] choose(aleph_2) => 2^aleph_2\n[GCH] 2^aleph_2 => aleph_3\naleph_3"
    );
    assert_eq!(ok(&["card", "cmp", "2^aleph_0", "aleph_1"]), "eq");
    assert_eq!(ok(&["card", "cmp", "7", "aleph_0"]), "le");
    let table = structured(&["card", "table", "--max", "5"]);
    assert_eq!(table["rows_agree"], "true");
    assert_eq!(table["col5"], "aleph_5; aleph_5; aleph_5");
}

#[test]
fn exit_codes() {
    let cases: &[(&[&str], i32)] = &[
        (&["convert", "1/", "--to", "rational"], EXIT_PARSE),
        (&["eval-left", "(10"], EXIT_PARSE),
        (&["interval", ".11x"], EXIT_PARSE),
        (&["ord", "eval", "w +"], EXIT_PARSE),
        (&["card", "normalize", "3^aleph_0"], EXIT_PARSE),
        (&["no-such-command"], EXIT_PARSE),
        (&["hyper", "2", "x", "3"], EXIT_PARSE),
        (&["convert", "1/0", "--to", "rational"], EXIT_DOMAIN),
        (&["ord", "fund", "w+1", "2"], EXIT_DOMAIN),
        (&["card", "normalize", "choose(3)"], EXIT_DOMAIN),
        (&["card", "table", "--max", "11"], EXIT_DOMAIN),
        (&["hyper", "2", "3", "4"], EXIT_BUDGET),
        (&["card", "normalize", "--budget", "64", "2^(2^100)"], EXIT_BUDGET),
        (&["--help"], EXIT_OK),
    ];
    for (args, code) in cases {
        let out = uns(args);
        assert_eq!(out.code, *code, "{args:?}: {}{}", out.stdout, out.stderr);
        if *code != EXIT_OK && *code != EXIT_BUDGET {
            assert!(!out.stderr.is_empty());
        }
    }
}

#[test]
fn binary_matches_in_process_run() {
    let out = Command::new(env!("CARGO_BIN_EXE_uns"))
        .args(["eval-left", "(101)001001."])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_OK));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "-257/7\n");
    let out = Command::new(env!("CARGO_BIN_EXE_uns"))
        .args(["hyper", "2", "3", "4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_BUDGET));
}

proptest! {
    #[test]
    fn convert_roundtrip(p in -200i64..=200, q in 1i64..=64) {
        let input = format!("{p}/{q}");
        let direct = ok(&["convert", &input, "--to", "rational"]);
        prop_assert_eq!(&direct, &reduced(p, q));
        let notation = ok(&["convert", &input, "--to", "notation"]);
        let back = ok(&["convert", &notation, "--to", "rational"]);
        prop_assert_eq!(back, direct);
    }

    #[test]
    fn structured_output_parses_back(p in -200i64..=200, q in 1i64..=64) {
        let input = format!("{p}/{q}");
        let expected = parse_rational(&input).unwrap();
        let rec = structured(&["convert", &input, "--to", "rational"]);
        prop_assert_eq!(parse_rational(&rec["rational"]).unwrap(), expected.clone());
        let rec = structured(&["convert", &input, "--to", "notation"]);
        let u = parse_universal(&rec["notation"]).unwrap();
        prop_assert_eq!(u.value(), expected.clone());
        prop_assert_eq!(u.to_string(), rec["notation"].clone());
        let rec = structured(&["complement", &rec["notation"]]);
        prop_assert_eq!(parse_rational(&rec["value"]).unwrap(), -expected);
        prop_assert_eq!(parse_universal(&rec["notation"]).unwrap().value(), parse_rational(&rec["value"]).unwrap());
    }
}
