//! Command-line front end.
//!
//! Subcommands: `canon`, `reconstruct`, `member`, `path`, `rewrite`, `chi`,
//! `selftest`. Elements and coordinate vectors are read from stdin (or
//! `--input`), one per line, in either the text or JSON form of
//! [`crate::format`]; lines starting with `{` are treated as JSON, blank
//! lines and lines starting with `#` are skipped.
//!
//! Exit codes: 0 success, 1 property/verification failure, 2 parse error,
//! 3 precondition violation.

use std::io::Read;
use std::path::PathBuf;
use std::sync::atomic::Ordering as AtomicOrdering;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::canonical::{member_x, peel, reconstruct};
use crate::connect::{path_ordered_field, path_tropical, validate_path};
use crate::coxeter::{CoxeterGraph, ReducedWord};
use crate::error::{Error, Result};
use crate::format;
use crate::monoid::MonoidElement;
use crate::selftest;
use crate::semifield::SemifieldKind;

#[derive(Parser)]
#[command(
    name = "halfcircle",
    about = "Exact computations in the half-circle graph of a simply-laced Weyl group over a semifield",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Args)]
struct CommonArgs {
    /// Expected graph type; checked against the input when given.
    #[arg(long = "type")]
    type_spec: Option<String>,
    /// Expected semifield; checked against the input when given.
    #[arg(long)]
    semifield: Option<String>,
    /// Read input lines from a file instead of stdin.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
}

#[derive(Subcommand)]
enum Cmd {
    /// Peel an element into canonical coordinates along a word of w0.
    Canon {
        #[command(flatten)]
        common: CommonArgs,
        /// Peeling word (letter labels); defaults to the canonical word.
        #[arg(long)]
        ii: Option<String>,
        /// Also print the intermediate elements of the peel.
        #[arg(long)]
        trace: bool,
    },
    /// Rebuild the element with the given canonical coordinates.
    Reconstruct {
        #[command(flatten)]
        common: CommonArgs,
        /// Chart for the printed element; defaults to the canonical chart.
        #[arg(long)]
        chart: Option<String>,
    },
    /// Decide membership of a coordinate vector in the peeling image.
    Member {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Construct and validate a short path between two elements.
    Path {
        #[command(flatten)]
        common: CommonArgs,
        /// Word of w0 organizing the construction; defaults to canonical.
        #[arg(long)]
        ii: Option<String>,
        /// Chart for printed nodes; defaults to each node's canonical chart.
        #[arg(long)]
        chart: Option<String>,
    },
    /// Rewrite an element into an explicit chart.
    Rewrite {
        #[command(flatten)]
        common: CommonArgs,
        /// Target chart (letter labels), e.g. "2 1 2".
        #[arg(long)]
        chart: String,
    },
    /// Print the zero-pattern Weyl group element of a nonnegative element.
    Chi {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run the seeded property suites.
    Selftest {
        /// Graph type the suites run over.
        #[arg(long = "type", default_value = "A3")]
        type_spec: String,
        /// Cases per suite.
        #[arg(long, default_value_t = 200)]
        iters: usize,
        /// Seed for the suite generator.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Negative control: deliberately corrupt the named operation
        /// (only `braid` is recognized) and expect the suites to fail.
        #[arg(long, hide = true)]
        mutate: Option<String>,
    },
}

/// Parses `std::env::args`, runs one command, and returns the exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help/--version are successful exits
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::UnknownLetter(_) => 2,
        Error::InternalAssertion(_) => 1,
        _ => 3,
    }
}

fn read_input(input: &Option<PathBuf>) -> Result<Vec<String>> {
    let text = match input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::Parse(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::to_string)
        .collect())
}

fn parse_element_line(line: &str) -> Result<MonoidElement> {
    if line.starts_with('{') {
        format::parse_element_json(line)
    } else {
        format::parse_element(line)
    }
}

fn parse_coords_line(line: &str) -> Result<crate::canonical::CanonicalCoords> {
    if line.starts_with('{') {
        format::parse_coords_json(line)
    } else {
        format::parse_coords(line)
    }
}

fn check_flags(
    common: &CommonArgs,
    graph: &Arc<CoxeterGraph>,
    kind: SemifieldKind,
) -> Result<()> {
    if let Some(spec) = &common.type_spec {
        let expected = CoxeterGraph::parse(spec)?;
        if *expected != **graph {
            return Err(Error::SpecMismatch(format!(
                "input graph `{}` does not match --type {spec}",
                graph.spec_string()
            )));
        }
    }
    if let Some(name) = &common.semifield {
        let expected: SemifieldKind = name.parse()?;
        if expected != kind {
            return Err(Error::SpecMismatch(format!(
                "input semifield `{}` does not match --semifield {name}",
                kind.name()
            )));
        }
    }
    Ok(())
}

fn one_line(lines: &[String]) -> Result<&String> {
    match lines {
        [line] => Ok(line),
        _ => Err(Error::Parse(format!("expected 1 input line, got {}", lines.len()))),
    }
}

fn parse_word_flag(graph: &Arc<CoxeterGraph>, labels: &str) -> Result<ReducedWord> {
    graph.reduced_word_from_labels(labels)
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.cmd {
        Cmd::Canon { common, ii, trace } => {
            let lines = read_input(&common.input)?;
            let h = parse_element_line(one_line(&lines)?)?;
            check_flags(&common, h.graph(), h.kind())?;
            let graph = h.graph().clone();
            let word = match &ii {
                Some(labels) => parse_word_flag(&graph, labels)?,
                None => graph.w0_word().clone(),
            };
            let result = peel(&word, &h)?;
            match common.format {
                OutputFormat::Text => {
                    let c = result
                        .coords
                        .values()
                        .iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(" ");
                    println!("c: {c}");
                    if trace {
                        for (k, stage) in result.stages.iter().enumerate() {
                            println!("H{}: {}", k + 1, format::element_to_text(stage));
                        }
                    }
                }
                OutputFormat::Json => println!("{}", format::coords_to_json(&result.coords)),
            }
            Ok(0)
        }
        Cmd::Reconstruct { common, chart } => {
            let lines = read_input(&common.input)?;
            let cc = parse_coords_line(one_line(&lines)?)?;
            check_flags(&common, cc.graph(), cc.kind())?;
            let h = reconstruct(&cc)?;
            let shown = match &chart {
                Some(labels) => h.rewrite(&parse_word_flag(h.graph(), labels)?)?,
                None => h.canonicalize(),
            };
            match common.format {
                OutputFormat::Text => println!("{}", format::element_to_text(&shown)),
                OutputFormat::Json => println!("{}", format::element_to_json(&shown)),
            }
            Ok(0)
        }
        Cmd::Member { common } => {
            let lines = read_input(&common.input)?;
            let cc = parse_coords_line(one_line(&lines)?)?;
            check_flags(&common, cc.graph(), cc.kind())?;
            let member = member_x(&cc)?;
            match common.format {
                OutputFormat::Text => println!("member={member}"),
                OutputFormat::Json => println!("{{\"member\":{member}}}"),
            }
            Ok(0)
        }
        Cmd::Path { common, ii, chart } => {
            let lines = read_input(&common.input)?;
            let (a, b) = match lines.as_slice() {
                [a, b] => (parse_element_line(a)?, parse_element_line(b)?),
                _ => {
                    return Err(Error::Parse(format!(
                        "expected 2 input lines, got {}",
                        lines.len()
                    )))
                }
            };
            check_flags(&common, a.graph(), a.kind())?;
            check_flags(&common, b.graph(), b.kind())?;
            let graph = a.graph().clone();
            let word = match &ii {
                Some(labels) => parse_word_flag(&graph, labels)?,
                None => graph.w0_word().clone(),
            };
            let path = match a.kind() {
                SemifieldKind::TropInt | SemifieldKind::TropRat => path_tropical(&a, &b, &word)?,
                SemifieldKind::RatPos => path_ordered_field(&a, &b, &word)?,
                SemifieldKind::Trivial => {
                    return Err(Error::SpecMismatch(
                        "paths are constructed over tropical or rat-pos semifields".into(),
                    ))
                }
            };
            let report = validate_path(&path);
            let ok = report.ok() && path.endpoints_match(&a, &b);
            let chart_word = match &chart {
                Some(labels) => Some(parse_word_flag(&graph, labels)?),
                None => None,
            };
            match common.format {
                OutputFormat::Text => {
                    print!("{}", format::path_to_text(&path, &report, ok, chart_word.as_ref())?)
                }
                OutputFormat::Json => {
                    println!("{}", format::path_to_json(&path, &report, ok, chart_word.as_ref())?)
                }
            }
            Ok(if ok { 0 } else { 1 })
        }
        Cmd::Rewrite { common, chart } => {
            let lines = read_input(&common.input)?;
            let h = parse_element_line(one_line(&lines)?)?;
            check_flags(&common, h.graph(), h.kind())?;
            let target = parse_word_flag(h.graph(), &chart)?;
            let shown = h.rewrite(&target)?;
            match common.format {
                OutputFormat::Text => println!("{}", format::element_to_text(&shown)),
                OutputFormat::Json => println!("{}", format::element_to_json(&shown)),
            }
            Ok(0)
        }
        Cmd::Chi { common } => {
            let lines = read_input(&common.input)?;
            let h = parse_element_line(one_line(&lines)?)?;
            check_flags(&common, h.graph(), h.kind())?;
            let w = h.zero_pattern()?;
            let word = h.graph().lex_min_word(&w);
            let labels: Vec<&str> = word.letters().iter().map(|&i| h.graph().label(i)).collect();
            match common.format {
                OutputFormat::Text => {
                    if labels.is_empty() {
                        println!("chi: e");
                    } else {
                        println!("chi: {}", labels.join(" "));
                    }
                }
                OutputFormat::Json => println!("{}", serde_json::json!({ "chi": labels })),
            }
            Ok(0)
        }
        Cmd::Selftest {
            type_spec,
            iters,
            seed,
            mutate,
        } => {
            if let Some(what) = &mutate {
                if what != "braid" {
                    return Err(Error::Parse(format!("unknown mutation `{what}`")));
                }
                crate::monoid::testing::CORRUPT_BRAID.store(true, AtomicOrdering::Relaxed);
                eprintln!("note: braid transport corrupted for this run (negative control)");
            }
            let cfg = selftest::Config {
                type_spec,
                iters,
                seed,
            };
            let outcomes = selftest::run_all(&cfg)?;
            let mut failed = false;
            for outcome in &outcomes {
                match &outcome.result {
                    Ok(0) => println!("suite {}: skipped (not applicable at this type)", outcome.name),
                    Ok(cases) => println!("suite {}: {} cases ok", outcome.name, cases),
                    Err(e) => {
                        failed = true;
                        println!("suite {}: FAILED — {e}", outcome.name);
                    }
                }
            }
            println!(
                "selftest type={} iters={} seed={} ok={}",
                cfg.type_spec,
                cfg.iters,
                cfg.seed,
                !failed
            );
            Ok(if failed { 1 } else { 0 })
        }
    }
}
