//! The `uns` command-line front end.
//!
//! [`run`] parses an argument list, dispatches to `uns-core` and returns the
//! rendered output together with the exit code, so the binary is a thin
//! wrapper and tests can drive commands in-process.
//!
//! Exit codes: 0 success, 2 parse or usage error, 3 domain error (including
//! a cardinal term no rule rewrites), 4 budget exceeded.

use std::cmp::Ordering;
use std::fmt::Display;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use uns_core::bitseq::{decode_left, encode_universal, parse_left, parse_universal, IndexSetView};
use uns_core::cardinals::{compare as card_compare, normalize_traced, parse_cardinal, unification_table};
use uns_core::hyperops::{hyper, HyperCall, HyperResult, DEFAULT_BUDGET_BITS};
use uns_core::ordinals::{cardinality_of, fundamental, parse_ext_ordinal, ExtOrdinal};
use uns_core::rational::{format_decimal, format_dyadic, format_rational, parse_rational};
use uns_core::streams::{diagonal, parse_star_string, parse_stream, BitStream, DyadicInterval};
use uns_core::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    /// One `key=value` record per line.
    Structured,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Rational,
    Notation,
    Set,
    Decimal,
}

#[derive(Debug, Parser)]
#[command(name = "uns", version, about = "Exact two-way binary notation, streams, ordinals and cardinals")]
struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Convert a rational (`p/q`) or a two-way notation (`(0)10011.(10)`).
    Convert {
        #[arg(allow_hyphen_values = true)]
        input: String,
        #[arg(long, value_enum)]
        to: Target,
        /// Fractional digits kept by `--to decimal`.
        #[arg(long, default_value_t = 20)]
        digits: usize,
    },
    /// Value of a left-infinite sequence such as `(101)001001.`.
    EvalLeft { left: String },
    /// Bitwise complement of a two-way sequence.
    Complement { input: String },
    /// Mirror a two-way sequence about the binary point.
    Flip {
        input: String,
        /// Keep the mirrored bits instead of canonicalizing them.
        #[arg(long)]
        raw: bool,
    },
    /// First `n` bits of a stream (`p/q`, `pi/4`, `sqrt(k)`, `diag(...)`).
    Bits {
        stream: String,
        #[arg(short = 'n', default_value_t = 32)]
        n: usize,
    },
    /// Interval of a star string (`.110***`), or of a stream prefix with `-n`.
    Interval {
        input: String,
        #[arg(short = 'n')]
        n: Option<usize>,
    },
    /// Evaluate `m ⊗^k n`.
    Hyper {
        m: BigUint,
        k: u64,
        n: BigUint,
        #[arg(long, default_value_t = DEFAULT_BUDGET_BITS)]
        budget: u64,
    },
    /// Ordinals below ε₀.
    #[command(subcommand)]
    Ord(OrdCommand),
    /// Transfinite cardinal expressions.
    #[command(subcommand)]
    Card(CardCommand),
    /// Diagonal stream of the given streams.
    Diag {
        #[arg(required = true)]
        streams: Vec<String>,
        #[arg(short = 'n', default_value_t = 32)]
        n: usize,
    },
}

#[derive(Debug, Subcommand)]
enum OrdCommand {
    /// Evaluate to Cantor normal form.
    Eval { expr: String },
    /// Compare two ordinals.
    Cmp { a: String, b: String },
    /// `n`-th element of the fundamental sequence of a limit ordinal.
    Fund { expr: String, n: u64 },
}

#[derive(Debug, Subcommand)]
enum CardCommand {
    /// Rewrite to normal form.
    Normalize {
        expr: String,
        /// Print every rule application.
        #[arg(long)]
        trace: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET_BITS)]
        budget: u64,
    },
    /// Compare two expressions: le, ge, eq or unknown.
    Cmp { a: String, b: String },
    /// Unification table for α = 0..=max.
    Table {
        #[arg(long, default_value_t = 5)]
        max: u64,
    },
}

struct Report {
    format: Format,
    out: String,
}

impl Report {
    fn text(&mut self, line: impl Display) {
        if self.format == Format::Text {
            self.out.push_str(&format!("{line}\n"));
        }
    }

    fn field(&mut self, key: &str, value: impl Display) {
        if self.format == Format::Structured {
            self.out.push_str(&format!("{key}={value}\n"));
        }
    }
}

/// Failure carrying the exit code it maps to.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::MalformedIndexSet(_) => EXIT_PARSE,
            Error::Domain(_) | Error::NoRuleApplies(_) => EXIT_DOMAIN,
            Error::TooLarge(_) | Error::Unnormalizable(_) => EXIT_BUDGET,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// Runs one command. `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_PARSE,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };
    let mut report = Report {
        format: cli.format,
        out: String::new(),
    };
    match dispatch(cli.command, &mut report) {
        Ok(code) => Outcome {
            code,
            stdout: report.out,
            stderr: String::new(),
        },
        Err(f) => Outcome {
            code: f.code,
            stdout: report.out,
            stderr: format!("error: {}\n", f.message),
        },
    }
}

fn dispatch(command: Command, r: &mut Report) -> Result<i32, Failure> {
    match command {
        Command::Convert { input, to, digits } => convert(&input, to, digits, r)?,
        Command::EvalLeft { left } => {
            let l = parse_left(&left)?;
            let value = format_rational(&decode_left(&l));
            r.text(&value);
            r.field("notation", l);
            r.field("value", value);
        }
        Command::Complement { input } => {
            let u = parse_universal(&input)?;
            universal(&u.complement(), r);
        }
        Command::Flip { input, raw } => {
            let u = parse_universal(&input)?;
            universal(&u.flip(raw), r);
        }
        Command::Bits { stream, n } => {
            let s = BitStream::new(parse_stream(&stream)?);
            let bits = bit_string(&s.bits(n));
            r.text(format!(".{bits}"));
            r.field("stream", s.descriptor());
            r.field("bits", bits);
        }
        Command::Interval { input, n } => {
            let interval = match n {
                Some(n) => BitStream::new(parse_stream(&input)?).interval(n)?,
                None => parse_star_string(&input)?,
            };
            interval_report(&interval, r);
        }
        Command::Hyper { m, k, n, budget } => {
            let call = HyperCall::new(m, k, n)?;
            match hyper(&call, budget)? {
                HyperResult::Exact(v) => {
                    r.text(&v);
                    r.field("status", "exact");
                    r.field("value", v);
                }
                HyperResult::Exceeded(magnitude) => {
                    r.text(&magnitude);
                    r.field("status", "exceeded");
                    r.field("magnitude", magnitude);
                    return Ok(EXIT_BUDGET);
                }
            }
        }
        Command::Ord(cmd) => ord(cmd, r)?,
        Command::Card(cmd) => card(cmd, r)?,
        Command::Diag { streams, n } => {
            let inputs = streams
                .iter()
                .map(|s| parse_stream(s))
                .collect::<uns_core::Result<Vec<_>>>()?;
            let d = diagonal(inputs);
            let bits = bit_string(&d.bits(n));
            r.text(format!(".{bits}"));
            r.field("stream", d.descriptor());
            r.field("bits", bits);
        }
    }
    Ok(EXIT_OK)
}

fn convert(input: &str, to: Target, digits: usize, r: &mut Report) -> Result<(), Failure> {
    let value = if input.contains('.') {
        parse_universal(input)?.value()
    } else {
        parse_rational(input)?
    };
    let rendered = match to {
        Target::Rational => format_rational(&value),
        Target::Notation => encode_universal(&value).to_string(),
        Target::Set => {
            let u = encode_universal(&value);
            IndexSetView::two_way(&u.left().to_index_set(), &u.right().to_index_set())
        }
        Target::Decimal => format_decimal(&value, digits),
    };
    r.text(&rendered);
    r.field(&format!("{to:?}").to_lowercase(), rendered);
    Ok(())
}

fn universal(u: &uns_core::bitseq::UniversalRational, r: &mut Report) {
    let value = format_rational(&u.value());
    r.text(format!("{u} = {value}"));
    r.field("notation", u);
    r.field("value", value);
}

fn interval_report(i: &DyadicInterval, r: &mut Report) {
    let width = format_dyadic(&i.width()).expect("dyadic width");
    r.text(format!("{i} width {width}"));
    r.field("lo", format_rational(i.lo()));
    r.field("hi", format_rational(&i.hi()));
    r.field("width", format_rational(&i.width()));
}

fn bit_string(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

fn ord_cmp(a: &ExtOrdinal, b: &ExtOrdinal) -> Ordering {
    match (a, b) {
        (ExtOrdinal::Cnf(x), ExtOrdinal::Cnf(y)) => x.cmp(y),
        (ExtOrdinal::EpsilonZero, ExtOrdinal::EpsilonZero) => Ordering::Equal,
        (ExtOrdinal::EpsilonZero, _) => Ordering::Greater,
        (_, ExtOrdinal::EpsilonZero) => Ordering::Less,
    }
}

fn ord(cmd: OrdCommand, r: &mut Report) -> Result<(), Failure> {
    match cmd {
        OrdCommand::Eval { expr } => {
            let o = parse_ext_ordinal(&expr)?;
            let kind = match &o {
                ExtOrdinal::Cnf(x) if x.is_zero() => "zero",
                ExtOrdinal::Cnf(x) if x.is_successor() => "successor",
                _ => "limit",
            };
            r.text(&o);
            r.field("value", &o);
            r.field("kind", kind);
            r.field("cardinality", cardinality_of(&o));
        }
        OrdCommand::Cmp { a, b } => {
            let (x, y) = (parse_ext_ordinal(&a)?, parse_ext_ordinal(&b)?);
            let sign = match ord_cmp(&x, &y) {
                Ordering::Less => "<",
                Ordering::Equal => "=",
                Ordering::Greater => ">",
            };
            r.text(format!("{x} {sign} {y}"));
            r.field("order", sign);
        }
        OrdCommand::Fund { expr, n } => {
            let o = parse_ext_ordinal(&expr)?;
            let v = fundamental(&o, n)?;
            r.text(&v);
            r.field("value", v);
        }
    }
    Ok(())
}

fn card(cmd: CardCommand, r: &mut Report) -> Result<(), Failure> {
    match cmd {
        CardCommand::Normalize { expr, trace, budget } => {
            let e = parse_cardinal(&expr)?;
            let (normal, steps) = normalize_traced(&e, budget)?;
            if trace {
                for (i, step) in steps.iter().enumerate() {
                    r.text(step);
                    r.field(&format!("step{}", i + 1), step);
                }
            }
            r.text(&normal);
            r.field("normal", normal);
        }
        CardCommand::Cmp { a, b } => {
            let (x, y) = (parse_cardinal(&a)?, parse_cardinal(&b)?);
            let order = card_compare(&x, &y);
            r.text(order);
            r.field("order", order);
        }
        CardCommand::Table { max } => {
            let table = unification_table(max)?;
            r.text(table.to_string().trim_end());
            r.field("rows_agree", table.rows_agree());
            for (alpha, ((a, p), c)) in table
                .alephs
                .iter()
                .zip(&table.powers)
                .zip(&table.choices)
                .enumerate()
            {
                r.field(&format!("col{alpha}"), format!("{a}; {p}; {c}"));
            }
        }
    }
    Ok(())
}
