//! Command-line front end.
//!
//! [`run`] parses arguments, executes one command and returns everything
//! the process should print together with its exit status:
//!
//! | status | meaning                                  |
//! |--------|------------------------------------------|
//! | 0      | success, or verification passed          |
//! | 1      | usage or parse error                     |
//! | 2      | verification found violations            |
//! | 3      | internal invariant breach or overflow    |

use std::fmt::Write as _;
use std::io::Read;

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::error::Error;
use crate::imbalance::{imbalance_polynomial, imbalance_table, partitions_of, write_csv};
use crate::involutions::{beissinger_trace, cycle_decomposition, CycleDecomposition};
use crate::knuth::{applicable_moves, apply_move, knuth_class};
use crate::partition::Partition;
use crate::patterns::{
    avoider_sign_lis_closed_form, enumerate_avoiders, parse_pattern_set, signed_lis_polynomial,
};
use crate::perm::Permutation;
use crate::rsk::{insertion_tableau, lis, rsk, rsk_inverse};
use crate::tableau::{StandardTableau, TableauPair};
use crate::verify::{run_suite, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VIOLATIONS: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "rsk-sign",
    version,
    about = "RSK correspondence, tableau signs, Knuth classes and imbalances"
)]
struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV instead of text (table-shaped commands only)
    #[arg(long, global = true)]
    csv: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Insertion and recording tableaux of a permutation, with sign statistics
    Rsk {
        /// One-line notation, e.g. "2 9 1 5 6 4 8 3 7"
        #[arg(required = true, num_args = 1..)]
        perm: Vec<String>,
    },
    /// Permutation of a tableau pair given as JSON {"P": {...}, "Q": {...}}
    RskInverse {
        /// JSON text; read from stdin when omitted or "-"
        pair: Option<String>,
    },
    /// Sign of a permutation, directly and from its tableaux
    Sign {
        #[arg(required = true, num_args = 1..)]
        perm: Vec<String>,
    },
    /// Beissinger's construction for an involution
    Beissinger {
        /// Cycle notation "(1,4)(6)(3,7)" or one-line notation
        #[arg(required = true, num_args = 1..)]
        input: Vec<String>,
    },
    /// All permutations Knuth-equivalent to the input
    KnuthClass {
        #[arg(required = true, num_args = 1..)]
        perm: Vec<String>,
    },
    /// Elementary Knuth moves applicable to a permutation
    KnuthMoves {
        #[arg(required = true, num_args = 1..)]
        perm: Vec<String>,
    },
    /// Inversion generating function and imbalance of shapes
    Imbalance {
        /// Shape such as 4,3,1,1
        shape: Option<String>,
        #[arg(long = "shape", value_name = "PARTS", conflicts_with = "shape")]
        shape_flag: Option<String>,
        /// Every partition of N instead of a single shape
        #[arg(long, conflicts_with_all = ["shape", "shape_flag"])]
        n: Option<usize>,
    },
    /// Partitions of n in reverse-lexicographic order
    Partitions { n: usize },
    /// Permutations of length n avoiding a set of patterns
    Avoiders {
        n: usize,
        #[arg(long, default_value = "213,231", value_name = "PATTERNS")]
        avoid: String,
    },
    /// Run a verification suite exhaustively up to --n-max
    Verify {
        /// Suite name, or "list"
        suite: String,
        #[arg(long = "n-max")]
        n_max: Option<usize>,
        /// Enables random spot checks above the exhaustive ceiling
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Csv,
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            status: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(err: &Error) -> Self {
        let status = match err {
            Error::Overflow(_) | Error::Invariant(_) => EXIT_INTERNAL,
            _ => EXIT_USAGE,
        };
        Output {
            status,
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        }
    }
}

/// Runs the command line `args` (including the program name). `stdin` is
/// only read by `rsk-inverse` without a positional argument.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    status: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Output::ok(rendered)
            };
        }
    };
    let format = if cli.json {
        Format::Json
    } else if cli.csv {
        Format::Csv
    } else {
        Format::Text
    };
    match execute(cli.command, format, stdin) {
        Ok(out) => out,
        Err(e) => Output::error(&e),
    }
}

fn parse_perm(tokens: &[String]) -> Result<Permutation, Error> {
    tokens.join(" ").parse()
}

fn no_csv(format: Format, command: &str) -> Result<(), Error> {
    if format == Format::Csv {
        Err(Error::InvalidArgument(format!(
            "--csv is not supported by `{command}`"
        )))
    } else {
        Ok(())
    }
}

fn to_json(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values serialize");
    s.push('\n');
    s
}

fn indent(t: &impl std::fmt::Display) -> String {
    t.to_string().lines().map(|l| format!("  {l}\n")).collect()
}

fn execute(command: Command, format: Format, stdin: &mut dyn Read) -> Result<Output, Error> {
    match command {
        Command::Rsk { perm } => {
            no_csv(format, "rsk")?;
            cmd_rsk(&parse_perm(&perm)?, format).map(Output::ok)
        }
        Command::RskInverse { pair } => {
            no_csv(format, "rsk-inverse")?;
            let text = match pair.as_deref() {
                None | Some("-") => {
                    let mut buf = String::new();
                    stdin
                        .read_to_string(&mut buf)
                        .map_err(|e| Error::InvalidArgument(format!("cannot read stdin: {e}")))?;
                    buf
                }
                Some(s) => s.to_string(),
            };
            let pair: TableauPair = serde_json::from_str(&text).map_err(|e| Error::Parse {
                position: e.column(),
                message: format!("invalid tableau pair JSON: {e}"),
            })?;
            let pi = rsk_inverse(&pair);
            Ok(Output::ok(match format {
                Format::Json => to_json(&json!(pi)),
                _ => format!("{pi}\n"),
            }))
        }
        Command::Sign { perm } => {
            no_csv(format, "sign")?;
            let pi = parse_perm(&perm)?;
            let pair = rsk(&pi);
            Ok(Output::ok(match format {
                Format::Json => to_json(&json!({
                    "perm": pi,
                    "inversions": pi.inversions(),
                    "sign_direct": pi.sign(),
                    "sign_from_tableaux": pair.sign_from_tableaux(),
                })),
                _ => format!(
                    "inversions={} sign={} tableau-sign={}\n",
                    pi.inversions(),
                    pi.sign(),
                    pair.sign_from_tableaux()
                ),
            }))
        }
        Command::Beissinger { input } => {
            no_csv(format, "beissinger")?;
            cmd_beissinger(&input.join(" "), format).map(Output::ok)
        }
        Command::KnuthClass { perm } => {
            no_csv(format, "knuth-class")?;
            let class = knuth_class(&parse_perm(&perm)?);
            Ok(Output::ok(match format {
                Format::Json => to_json(&json!(class)),
                _ => class.iter().map(|p| format!("{p}\n")).collect(),
            }))
        }
        Command::KnuthMoves { perm } => {
            no_csv(format, "knuth-moves")?;
            let pi = parse_perm(&perm)?;
            let moves = applicable_moves(&pi)
                .into_iter()
                .map(|m| Ok((m, apply_move(&pi, m)?)))
                .collect::<Result<Vec<_>, Error>>()?;
            Ok(Output::ok(match format {
                Format::Json => to_json(&json!(moves
                    .iter()
                    .map(|(m, r)| json!({"move": m.to_string(), "result": r}))
                    .collect::<Vec<_>>())),
                _ => moves.iter().map(|(m, r)| format!("{m} -> {r}\n")).collect(),
            }))
        }
        Command::Imbalance {
            shape,
            shape_flag,
            n,
        } => {
            let records = match (shape.or(shape_flag), n) {
                (Some(s), _) => vec![imbalance_polynomial(&s.parse::<Partition>()?)?],
                (None, Some(n)) => imbalance_table(n)?,
                (None, None) => {
                    return Err(Error::InvalidArgument(
                        "give a shape (e.g. 4,3,1,1) or --n <n>".into(),
                    ))
                }
            };
            Ok(Output::ok(match format {
                Format::Json => to_json(&json!(records)),
                Format::Csv => {
                    let mut buf = Vec::new();
                    write_csv(&records, &mut buf)?;
                    String::from_utf8(buf).expect("csv output is UTF-8")
                }
                Format::Text => records.iter().map(|r| r.table_line() + "\n").collect(),
            }))
        }
        Command::Partitions { n } => {
            let parts = partitions_of(n);
            Ok(Output::ok(match format {
                Format::Json => to_json(&json!(parts)),
                Format::Csv => {
                    let mut s = String::from("shape,e\n");
                    for p in &parts {
                        writeln!(s, "\"{p}\",{}", p.even_row_total()).unwrap();
                    }
                    s
                }
                Format::Text => parts.iter().map(|p| format!("{p}\n")).collect(),
            }))
        }
        Command::Avoiders { n, avoid } => cmd_avoiders(n, &avoid, format).map(Output::ok),
        Command::Verify { suite, n_max, seed } => {
            no_csv(format, "verify")?;
            cmd_verify(&suite, n_max, seed, format)
        }
    }
}

fn cmd_rsk(pi: &Permutation, format: Format) -> Result<String, Error> {
    let pair = rsk(pi);
    let shape = pair.shape();
    let (p, q) = (pair.p(), pair.q());
    Ok(match format {
        Format::Json => to_json(&json!({
            "P": p,
            "Q": q,
            "shape": shape,
            "inv_P": p.inversions(),
            "inv_Q": q.inversions(),
            "e": shape.even_row_total(),
            "sign_P": p.sign(),
            "sign_Q": q.sign(),
            "sign_from_tableaux": pair.sign_from_tableaux(),
            "sign_direct": pi.sign(),
        })),
        _ => format!(
            "P:\n{}Q:\n{}shape={} inv(P)={} inv(Q)={} e={} sign(P)={} sign(Q)={} tableau-sign={} direct-sign={}\n",
            indent(p),
            indent(q),
            shape,
            p.inversions(),
            q.inversions(),
            shape.even_row_total(),
            p.sign(),
            q.sign(),
            pair.sign_from_tableaux(),
            pi.sign()
        ),
    })
}

fn cmd_beissinger(input: &str, format: Format) -> Result<String, Error> {
    let pi = if input.trim_start().starts_with('(') {
        input.parse::<CycleDecomposition>()?.to_permutation()
    } else {
        input.parse::<Permutation>()?
    };
    let cycles = cycle_decomposition(&pi)?;
    let trace = beissinger_trace(&pi)?;
    let tableau = StandardTableau::from_tableau(trace.last().cloned().unwrap_or_default())
        .map_err(|e| Error::Invariant(e.to_string()))?;
    let shape = tableau.shape();
    let matches_rsk = tableau == insertion_tableau(&pi);
    if !matches_rsk {
        return Err(Error::Invariant(format!(
            "Beissinger tableau differs from the insertion tableau of {pi}"
        )));
    }
    let sign = pi.sign();
    Ok(match format {
        Format::Json => to_json(&json!({
            "perm": pi,
            "cycles": cycles.to_string(),
            "steps": cycles.cycles().iter().zip(&trace).map(|(c, t)| json!({
                "cycle": c.to_string(),
                "rows": t.rows(),
            })).collect::<Vec<_>>(),
            "tableau": tableau,
            "shape": shape,
            "e": shape.even_row_total(),
            "sign": sign,
        })),
        _ => {
            let mut s = format!("perm={pi}\ncycles={cycles}\n");
            for (i, (c, t)) in cycles.cycles().iter().zip(&trace).enumerate() {
                writeln!(s, "step {} {c}:", i + 1).unwrap();
                s.push_str(&indent(t));
            }
            writeln!(
                s,
                "shape={} e={} sign={}",
                shape,
                shape.even_row_total(),
                sign
            )
            .unwrap();
            s
        }
    })
}

fn cmd_avoiders(n: usize, avoid: &str, format: Format) -> Result<String, Error> {
    let patterns = parse_pattern_set(avoid)?;
    let perms: Vec<Permutation> = enumerate_avoiders(n, &patterns).collect();
    Ok(match format {
        Format::Json => to_json(&json!(perms
            .iter()
            .map(|p| json!({"perm": p, "sign": p.sign(), "lis": lis(p)}))
            .collect::<Vec<_>>())),
        Format::Csv => {
            let mut s = String::from("perm,sign,lis\n");
            for p in &perms {
                writeln!(s, "{p},{},{}", p.sign().to_i64(), lis(p)).unwrap();
            }
            s
        }
        Format::Text => {
            let mut s: String = perms
                .iter()
                .map(|p| format!("{p} sign={} lis={}\n", p.sign(), lis(p)))
                .collect();
            let poly = signed_lis_polynomial(perms.iter().cloned())?;
            writeln!(
                s,
                "# count={} sum sign*q^lis = {}",
                perms.len(),
                poly.pretty()
            )
            .unwrap();
            let hooks = avoid.split(',').map(str::trim).collect::<Vec<_>>() == ["213", "231"];
            if hooks && n >= 1 {
                writeln!(
                    s,
                    "# closed form q(q+1)^{}(q-1)^{} = {}",
                    (n - 1) / 2,
                    n / 2,
                    avoider_sign_lis_closed_form(n)?.pretty()
                )
                .unwrap();
            }
            s
        }
    })
}

fn cmd_verify(
    suite: &str,
    n_max: Option<usize>,
    seed: Option<u64>,
    format: Format,
) -> Result<Output, Error> {
    if suite == "list" {
        let mut s = String::new();
        for suite in Suite::ALL {
            let sampled = suite
                .sample_ceiling()
                .map_or(String::new(), |c| format!(", sampled to {c} with --seed"));
            writeln!(
                s,
                "{:<14} exhaustive to n={}{}: {}",
                suite.name(),
                suite.ceiling(),
                sampled,
                suite.description()
            )
            .unwrap();
        }
        return Ok(Output::ok(s));
    }
    let suite: Suite = suite.parse()?;
    let report = run_suite(suite, n_max.unwrap_or(suite.ceiling()), seed)?;
    let stdout = match format {
        Format::Json => to_json(&json!(report)),
        _ => {
            let mut s = report.summary_line() + "\n";
            for note in &report.notes {
                writeln!(s, "note: {note}").unwrap();
            }
            for v in &report.violations {
                writeln!(
                    s,
                    "violation: input={} expected={} actual={}",
                    v.input, v.expected, v.actual
                )
                .unwrap();
            }
            s
        }
    };
    Ok(Output {
        status: if report.passed() {
            EXIT_OK
        } else {
            EXIT_VIOLATIONS
        },
        stdout,
        stderr: String::new(),
    })
}
