//! `meadow` — evaluate, normalize and decide expressions of totalized
//! field arithmetic, check law suites against models, and compute with
//! fraction pairs.
//!
//! Exit codes: 0 for success and passing verdicts, 1 for NOT-EQUAL or
//! failing law checks, 2 for usage errors.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use meadows::lawcheck::{
    self, check_law, render_assignment, suite_by_name, CheckReport, Strategy, DEFAULT_SEED,
};
use meadows::normal::{to_fraction, Fnf};
use meadows::terms::{eval, parse, Assignment};
use meadows::values::Model;
use meadows::{equal_ccm0_with_budget, Fracpair, Verdict};

#[derive(Parser)]
#[command(name = "meadow", version, about = "Totalized field arithmetic toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Records,
}

#[derive(Args)]
struct CommonOpts {
    /// Output as plain text or as one JSON record per result
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression in a model
    Eval {
        expr: String,
        /// Model: qbot, qzero, fp:<prime> or fracpair
        #[arg(long, default_value = "qbot")]
        model: String,
        /// Variable binding var=value; repeatable. `_|_` and `bot` denote
        /// the absorbing value.
        #[arg(short = 'b', long = "bind")]
        bindings: Vec<String>,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Rewrite an expression to fraction normal form
    Normalize {
        expr: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Decide whether two expressions agree in every cancellation model
    /// of characteristic zero
    Decide {
        left: String,
        right: String,
        /// Sample budget for the counterexample search
        #[arg(long, default_value_t = 2000)]
        budget: usize,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Run a law suite against a model
    Check {
        /// Suite name: md, md_bot, derived, conditional, laws,
        /// law_consequences or c0
        suite: String,
        /// Model: qbot, qzero, fp:<prime> or fracpair
        #[arg(long, default_value = "qbot")]
        model: String,
        /// `exhaustive` or `random:<n>`; defaults to exhaustive on finite
        /// models and random:10000 otherwise
        #[arg(long)]
        strategy: Option<String>,
        /// Seed for randomized strategies
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Fraction-pair arithmetic: add, mul, neg, inv, canon, to-rational
    Fracpair {
        op: String,
        operands: Vec<String>,
        #[command(flatten)]
        common: CommonOpts,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Eval { expr, model, bindings, common } => {
            let model = Model::from_name(&model).map_err(|e| e.to_string())?;
            let term = parse(&expr).map_err(|e| e.to_string())?;
            let mut asg = Assignment::new();
            for binding in &bindings {
                let (var, value) = binding
                    .split_once('=')
                    .ok_or_else(|| format!("binding `{binding}` is not of the form var=value"))?;
                let value = model.parse_value(value).map_err(|e| e.to_string())?;
                asg.insert(var.trim().to_string(), value);
            }
            let value = eval(&term, &asg, &model).map_err(|e| e.to_string())?;
            match common.format {
                Format::Text => println!("{value}"),
                Format::Records => println!(
                    "{}",
                    json!({ "model": model.name(), "value": value.to_string() })
                ),
            }
            Ok(0)
        }
        Command::Normalize { expr, common } => {
            let term = parse(&expr).map_err(|e| e.to_string())?;
            match (to_fraction(&term), common.format) {
                (Fnf::Bottom, Format::Text) => println!("bottom"),
                (Fnf::Bottom, Format::Records) => println!("{}", json!({ "bottom": true })),
                (Fnf::Frac { num, den, support }, Format::Text) => {
                    println!("num: {num}");
                    println!("den: {den}");
                    println!(
                        "support: {}",
                        support.iter().cloned().collect::<Vec<_>>().join(", ")
                    );
                }
                (Fnf::Frac { num, den, support }, Format::Records) => {
                    println!(
                        "{}",
                        json!({
                            "num": num.to_string(),
                            "den": den.to_string(),
                            "support": support.iter().collect::<Vec<_>>(),
                        })
                    );
                }
            }
            Ok(0)
        }
        Command::Decide { left, right, budget, common } => {
            let l = parse(&left).map_err(|e| format!("left: {e}"))?;
            let r = parse(&right).map_err(|e| format!("right: {e}"))?;
            match equal_ccm0_with_budget(&l, &r, budget) {
                Verdict::Equal => {
                    match common.format {
                        Format::Text => println!("EQUAL"),
                        Format::Records => println!("{}", json!({ "verdict": "equal" })),
                    }
                    Ok(0)
                }
                Verdict::NotEqual { reason, counterexample, details } => {
                    match common.format {
                        Format::Text => {
                            println!("NOT-EQUAL ({reason})");
                            if let Some(asg) = &counterexample {
                                println!("counterexample: {}", render_assignment(asg));
                            }
                        }
                        Format::Records => {
                            let witness = counterexample.as_ref().map(|asg| {
                                asg.iter()
                                    .map(|(k, v)| (k.clone(), json!(v.to_string())))
                                    .collect::<serde_json::Map<_, _>>()
                            });
                            println!(
                                "{}",
                                json!({
                                    "verdict": "not-equal",
                                    "reason": reason.as_str(),
                                    "counterexample": witness,
                                    "details": details.map(|(a, b)| json!({
                                        "left": a.to_string(),
                                        "right": b.to_string(),
                                    })),
                                })
                            );
                        }
                    }
                    Ok(1)
                }
            }
        }
        Command::Check { suite, model, strategy, seed, common } => {
            let model = Model::from_name(&model).map_err(|e| e.to_string())?;
            let suite = suite_by_name(&suite).ok_or_else(|| {
                let names: Vec<_> = lawcheck::builtin_suites().iter().map(|s| s.name).collect();
                format!("unknown suite `{suite}` (expected one of: {})", names.join(", "))
            })?;
            let strategy = parse_strategy(strategy.as_deref(), &model, seed)?;
            let mut all_passed = true;
            for law in &suite.laws {
                let report = check_law(&model, law, strategy).map_err(|e| e.to_string())?;
                all_passed &= report.passed();
                match common.format {
                    Format::Text => println!("{report}"),
                    Format::Records => println!("{}", record_of(&report)),
                }
            }
            Ok(if all_passed { 0 } else { 1 })
        }
        Command::Fracpair { op, operands, common } => {
            let parsed: Vec<Fracpair> = operands
                .iter()
                .map(|text| parse_fracpair(text))
                .collect::<Result<_, _>>()?;
            let arity = |n: usize| -> Result<(), String> {
                if parsed.len() == n {
                    Ok(())
                } else {
                    Err(format!("`{op}` takes {n} operand(s), got {}", parsed.len()))
                }
            };
            let fp_err = |e: meadows::fracpair::FracpairError| e.to_string();
            let result = match op.as_str() {
                "add" => {
                    arity(2)?;
                    parsed[0].add(&parsed[1]).map_err(fp_err)?.to_string()
                }
                "mul" => {
                    arity(2)?;
                    parsed[0].mul(&parsed[1]).map_err(fp_err)?.to_string()
                }
                "neg" => {
                    arity(1)?;
                    parsed[0].neg().to_string()
                }
                "inv" => {
                    arity(1)?;
                    parsed[0].inv().map_err(fp_err)?.to_string()
                }
                "canon" => {
                    arity(1)?;
                    parsed[0].to_string()
                }
                "to-rational" => {
                    arity(1)?;
                    parsed[0].to_qbot().to_string()
                }
                other => {
                    return Err(format!(
                        "unknown fracpair op `{other}` (expected add, mul, neg, inv, canon or to-rational)"
                    ))
                }
            };
            match common.format {
                Format::Text => println!("{result}"),
                Format::Records => println!("{}", json!({ "result": result })),
            }
            Ok(0)
        }
    }
}

fn parse_strategy(text: Option<&str>, model: &Model, seed: u64) -> Result<Strategy, String> {
    match text {
        None => Ok(if model.carrier().is_some() {
            Strategy::Exhaustive
        } else {
            Strategy::Random { n: 10_000, seed }
        }),
        Some("exhaustive") => Ok(Strategy::Exhaustive),
        Some(s) => {
            let n = s
                .strip_prefix("random:")
                .and_then(|n| n.parse::<usize>().ok())
                .ok_or_else(|| format!("bad strategy `{s}` (expected exhaustive or random:<n>)"))?;
            Ok(Strategy::Random { n, seed })
        }
    }
}

fn parse_fracpair(text: &str) -> Result<Fracpair, String> {
    match Model::FracpairZ.parse_value(text).map_err(|e| e.to_string())? {
        meadows::Value::Frac(fp) => Ok(fp),
        _ => unreachable!("fracpair model yields fracpair values"),
    }
}

fn record_of(report: &CheckReport) -> serde_json::Value {
    let mut record = json!({
        "law": report.law,
        "model": report.model.name(),
        "cases": report.cases,
        "outcome": if report.passed() { "pass" } else { "fail" },
    });
    match report.strategy {
        Strategy::Exhaustive => record["strategy"] = json!("exhaustive"),
        Strategy::Random { n, seed } => {
            record["strategy"] = json!("random");
            record["samples"] = json!(n);
            record["seed"] = json!(seed);
        }
    }
    if let Some(witness) = report.witness() {
        record["witness"] = json!(witness
            .iter()
            .map(|(k, v)| (k.clone(), json!(v.to_string())))
            .collect::<serde_json::Map<_, _>>());
    }
    record
}
