//! `lrc`: command-line front end for the commutor library.
//!
//! Exit status is 0 on success, 1 when a verification or golden replay
//! fails, and 2 on usage or input errors.

use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lrcommutor::commutor::{
    rho1_internal_traced, rho1_scratch_frames, rho1_switching_with, switch_all, SwitchStrategy,
    TwoColorTableau,
};
use lrcommutor::format::{
    frame_to_text, pair_to_text, parse_pair, parse_tableau, tableau_to_text, to_json,
};
use lrcommutor::insertion::{apply_order_word_traced, skew_rsk_forward, skew_rsk_inverse};
use lrcommutor::schur::{lr_coefficient, schur_product};
use lrcommutor::verify::{run_checks, VerifyConfig, CHECKS};
use lrcommutor::{golden, GluedPair, Partition, SkewTableau, Word};

#[derive(Parser)]
#[command(
    name = "lrc",
    version,
    about = "Littlewood-Richardson commutors on ballot tableau pairs"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for randomised switch orders.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Greedy switching.
    Switching,
    /// Recursive internal insertion.
    Internal,
    /// Construction from the empty tableau.
    Scratch,
    /// Switching in jeu de taquin order.
    Infusion,
    /// Switching in a seeded random order.
    Random,
}

#[derive(Subcommand)]
enum Command {
    /// Apply the commutor to a glued pair read from FILE (`-` for stdin).
    Commute {
        file: String,
        #[arg(long, value_enum, default_value_t = Method::Switching)]
        method: Method,
        /// Also emit every intermediate frame.
        #[arg(long)]
        trace: bool,
    },
    /// Apply internal insertions in the order given by WORD (rightmost first).
    Insert {
        file: String,
        word: Word,
        #[arg(long)]
        trace: bool,
    },
    /// Skew RSK on a pair of tableaux with a shared border.
    Rsk {
        first: String,
        second: String,
        /// Read (P, Q) and recover (T, U).
        #[arg(long)]
        inverse: bool,
    },
    /// Littlewood-Richardson coefficient c^LAMBDA_{MU NU}.
    LrCoeff {
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
        #[arg(value_parser = parse_partition)]
        mu: Partition,
        #[arg(value_parser = parse_partition)]
        nu: Partition,
    },
    /// Schur expansion of s_MU s_NU.
    SchurProduct {
        #[arg(value_parser = parse_partition)]
        mu: Partition,
        #[arg(value_parser = parse_partition)]
        nu: Partition,
        /// Drop terms with more rows (default |MU| + |NU|).
        #[arg(long)]
        max_rows: Option<usize>,
    },
    /// Exhaustive property checks over small instances.
    Verify {
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..))]
        max_size: u64,
        /// Comma-separated check names (default: all).
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        #[arg(long, default_value_t = 5)]
        word_len: usize,
        #[arg(long, default_value_t = 20)]
        random_orders: usize,
    },
    /// Replay the worked examples from the embedded fixtures.
    Golden { ids: Vec<String> },
}

/// Accepts `3,2,1`, `3 2 1`, `[3,2,1]` or `(3,2,1)`; empty means the empty
/// partition.
fn parse_partition(s: &str) -> Result<Partition, String> {
    let inner = s
        .trim()
        .trim_start_matches(['(', '['])
        .trim_end_matches([')', ']']);
    let parts = inner
        .split([',', ' '])
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| format!("bad part {t:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(parts).map_err(|e| e.to_string())
}

macro_rules! emit {
    ($out:expr, $($arg:tt)*) => {
        $out.push_str(&format!($($arg)*))
    };
}

macro_rules! emitln {
    ($out:expr, $($arg:tt)*) => {{
        $out.push_str(&format!($($arg)*));
        $out.push('\n');
    }};
}

struct Failure {
    code: u8,
    msg: String,
}

fn usage(msg: impl std::fmt::Display) -> Failure {
    Failure {
        code: 2,
        msg: msg.to_string(),
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| usage(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))
    }
}

fn read_tableau(path: &str) -> Result<SkewTableau, Failure> {
    parse_tableau(&read_input(path)?).map_err(|e| usage(format!("{path}: {e}")))
}

fn pair_json(p: &GluedPair) -> Value {
    serde_json::to_value(p).expect("serialisable")
}

fn tableau_json(t: &SkewTableau) -> Value {
    serde_json::to_value(t).expect("serialisable")
}

/// Frames of a commutor computation, as JSON values and as text blocks.
fn commute(
    p: &GluedPair,
    method: Method,
    seed: u64,
) -> Result<(GluedPair, Vec<(Value, String)>), Failure> {
    let err = |e: lrcommutor::CommutorError| usage(e);
    let switched = |strategy| -> Result<_, Failure> {
        let q = rho1_switching_with(p, strategy).map_err(err)?;
        let start = TwoColorTableau::new(&p.yam(), p.skew()).map_err(err)?;
        let run = switch_all(&start, strategy);
        let frames = run
            .frames
            .iter()
            .map(|f| {
                (
                    serde_json::to_value(f).expect("serialisable"),
                    frame_to_text(f),
                )
            })
            .collect();
        Ok((q, frames))
    };
    match method {
        Method::Switching => switched(SwitchStrategy::Greedy),
        Method::Infusion => switched(SwitchStrategy::Infusion),
        Method::Random => switched(SwitchStrategy::SeededRandom(seed)),
        Method::Internal => {
            let (q, steps) = rho1_internal_traced(p).map_err(err)?;
            let frames = steps
                .iter()
                .map(|s| {
                    let v = json!({
                        "level": s.level,
                        "block": s.block,
                        "pair": pair_json(&s.pair),
                        "traces": s.traces,
                    });
                    (
                        v,
                        format!("level {} {:?}\n{}", s.level, s.block, pair_to_text(&s.pair)),
                    )
                })
                .collect();
            Ok((q, frames))
        }
        Method::Scratch => {
            let (q, steps) = rho1_scratch_frames(p).map_err(err)?;
            let frames = steps
                .iter()
                .map(|f| {
                    let v = json!({
                        "row": f.row,
                        "order": f.order.to_string(),
                        "appended": f.appended,
                        "tableau": tableau_json(&f.tableau),
                    });
                    let text = format!(
                        "row {} order {} appended {}\n{}",
                        f.row,
                        f.order,
                        f.appended,
                        tableau_to_text(&f.tableau)
                    );
                    (v, text)
                })
                .collect();
            Ok((q, frames))
        }
    }
}

fn print_with_trace(
    out: &mut String,
    format: Format,
    result: Value,
    result_text: String,
    trace: Option<Vec<(Value, String)>>,
) {
    match (format, trace) {
        (Format::Json, None) => emitln!(out, "{}", result),
        (Format::Json, Some(frames)) => {
            let trace: Vec<Value> = frames.into_iter().map(|(v, _)| v).collect();
            emitln!(out, "{}", json!({ "result": result, "trace": trace }));
        }
        (Format::Text, None) => emit!(out, "{result_text}"),
        (Format::Text, Some(frames)) => {
            for (k, (_, text)) in frames.iter().enumerate() {
                emitln!(out, "# frame {k}");
                emit!(out, "{text}");
            }
            emitln!(out, "# result");
            emit!(out, "{result_text}");
        }
    }
}

fn run(cli: Cli, out: &mut String) -> Result<(), Failure> {
    let format = cli.format;
    match cli.command {
        Command::Commute {
            file,
            method,
            trace,
        } => {
            let text = read_input(&file)?;
            let p = parse_pair(&text).map_err(|e| usage(format!("{file}: {e}")))?;
            let (q, frames) = commute(&p, method, cli.seed)?;
            print_with_trace(
                out,
                format,
                pair_json(&q),
                pair_to_text(&q),
                trace.then_some(frames),
            );
        }
        Command::Insert { file, word, trace } => {
            let t = read_tableau(&file)?;
            let (result, traces) = apply_order_word_traced(&t, &word).map_err(usage)?;
            let frames = trace.then(|| {
                traces
                    .iter()
                    .map(|tr| {
                        let text = format!("vacated {} created {}\n", tr.vacated, tr.created);
                        (serde_json::to_value(tr).expect("serialisable"), text)
                    })
                    .collect()
            });
            print_with_trace(
                out,
                format,
                tableau_json(&result),
                tableau_to_text(&result),
                frames,
            );
        }
        Command::Rsk {
            first,
            second,
            inverse,
        } => {
            let (a, b) = (read_tableau(&first)?, read_tableau(&second)?);
            let (x, y) = if inverse {
                skew_rsk_inverse(&a, &b)
            } else {
                skew_rsk_forward(&a, &b)
            }
            .map_err(usage)?;
            match format {
                Format::Json => {
                    let names = if inverse { ["t", "u"] } else { ["p", "q"] };
                    emitln!(
                        out,
                        "{}",
                        json!({ names[0]: tableau_json(&x), names[1]: tableau_json(&y) })
                    );
                }
                Format::Text => emit!(out, "{}--\n{}", tableau_to_text(&x), tableau_to_text(&y)),
            }
        }
        Command::LrCoeff { lambda, mu, nu } => {
            let c = lr_coefficient(&lambda, &mu, &nu);
            match format {
                Format::Json => emitln!(
                    out,
                    "{}",
                    json!({ "lambda": lambda, "mu": mu, "nu": nu, "coefficient": c })
                ),
                Format::Text => emitln!(out, "{c}"),
            }
        }
        Command::SchurProduct { mu, nu, max_rows } => {
            let e = schur_product(&mu, &nu, max_rows.unwrap_or(mu.size() + nu.size()));
            match format {
                Format::Json => {
                    let terms: Vec<Value> = e
                        .terms
                        .iter()
                        .rev()
                        .map(|(lam, c)| json!({ "lambda": lam, "coefficient": c }))
                        .collect();
                    emitln!(out, "{}", Value::Array(terms));
                }
                Format::Text => emit!(out, "{e}"),
            }
        }
        Command::Verify {
            max_size,
            checks,
            word_len,
            random_orders,
        } => {
            let names: Vec<String> = if checks.is_empty() {
                CHECKS.iter().map(|s| s.to_string()).collect()
            } else {
                checks
            };
            let cfg = VerifyConfig {
                max_size: max_size as usize,
                word_len,
                random_orders,
                seed: cli.seed,
                ..VerifyConfig::default()
            };
            let reports = run_checks(&names, &cfg).map_err(usage)?;
            match format {
                Format::Json => emitln!(out, "{}", to_json(&reports)),
                Format::Text => {
                    for r in &reports {
                        emitln!(out, "{r}");
                        for f in r.failures.iter().take(3) {
                            emitln!(
                                out,
                                "  input:\n{}  expected: {}\n  actual: {}",
                                f.input,
                                f.expected,
                                f.actual
                            );
                        }
                    }
                }
            }
            if !reports.iter().all(|r| r.passed()) {
                return Err(Failure {
                    code: 1,
                    msg: "verification failed".into(),
                });
            }
        }
        Command::Golden { ids } => {
            let outcomes = golden::run(&ids).map_err(usage)?;
            match format {
                Format::Json => {
                    let v: Vec<Value> = outcomes
                        .iter()
                        .map(|o| json!({ "id": o.id, "checks": o.checks, "failures": o.failures }))
                        .collect();
                    emitln!(out, "{}", Value::Array(v));
                }
                Format::Text => {
                    for o in &outcomes {
                        emitln!(
                            out,
                            "{} {} ({} checks)",
                            if o.passed() { "PASS" } else { "FAIL" },
                            o.id,
                            o.checks
                        );
                        for f in &o.failures {
                            emitln!(out, "{f}");
                        }
                    }
                }
            }
            if !outcomes.iter().all(|o| o.passed()) {
                return Err(Failure {
                    code: 1,
                    msg: "golden replay failed".into(),
                });
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(cli, &mut out);
    // A closed pipe downstream is not an error worth reporting.
    let _ = std::io::stdout().write_all(out.as_bytes());
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("lrc: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_syntax() {
        for s in ["3,2,1", "3 2 1", "[3,2,1]", "(3,2,1)"] {
            assert_eq!(parse_partition(s).unwrap().parts(), &[3, 2, 1]);
        }
        assert!(parse_partition("").unwrap().is_empty());
        assert!(parse_partition("()").unwrap().is_empty());
        assert!(parse_partition("1,2").is_err());
        assert!(parse_partition("a").is_err());
    }
}
