//! `ajn`: command-line access to affine cactus groups.
//!
//! Exit status: 0 success or true, 1 false predicate, 2 input error, 3 I/O error.

mod svg;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use cactus::affine_cactus::circular_alphabet;
use cactus::affine_cactus::rep::generator_affine_matrices;
use cactus::matrix::IntMatrix;
use cactus::presentation::{Kind, Presentation};
use cactus::selftest::{self, Level};
use cactus::{CactusWord, Order};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "ajn",
    version,
    about = "Word problem, torsion and presentations of affine cactus groups"
)]
struct Cli {
    /// Number of strands.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rewrite a word with the defining relations until its diagram part is geodesic.
    Reduce { word: String },
    /// Exit 0 if the two words are equal in AJ_n, 1 otherwise.
    Equal { w1: String, w2: String },
    /// Order of the element: a power of two or `infinite`.
    Order { word: String },
    /// Draw the word on the cylinder as SVG.
    Diagram { word: String },
    /// Export a group presentation.
    Presentation {
        #[arg(value_enum)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        /// Smallest circular set or subset used as a generator (adn, dn).
        #[arg(long, default_value_t = 2)]
        min_size: usize,
    },
    /// Run the built-in checks.
    Selftest {
        #[arg(value_enum, default_value_t = LevelArg::Quick)]
        level: LevelArg,
        /// Run a single check by number.
        #[arg(long)]
        check: Option<u8>,
    },
    /// The underlying permutation of the strands.
    Perm { word: String },
    /// Exit 0 if the underlying permutation is trivial, 1 otherwise.
    Pure { word: String },
    /// The image in the diagram group extended by affine permutations, in normal form.
    Phi { word: String },
    /// Shift every strand index around the cylinder.
    Rotate {
        word: String,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        by: i64,
    },
    /// Factor the word as u·v with v keeping the letters of support at least p.
    Split {
        word: String,
        #[arg(long)]
        p: usize,
    },
    /// Generator matrices as JSON.
    Rep {
        #[arg(long, default_value_t = 2)]
        min_size: usize,
    },
    /// Match the cactus relations of the n-cycle Coxeter diagram against those of AJ_n.
    IsoCheck,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Ajn,
    Adn,
    Jn,
    Dn,
    CoxeterCactus,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Algebra,
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Quick,
    Full,
}

/// What a command produced: text for the output sink, and whether its predicate held.
struct Outcome {
    text: String,
    ok: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, ok: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli).and_then(|o| emit(&cli, &o.text).map(|_| o.ok)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            let io = e.chain().any(|c| c.downcast_ref::<io::Error>().is_some());
            ExitCode::from(if io { 3 } else { 2 })
        }
    }
}

fn emit(cli: &Cli, text: &str) -> anyhow::Result<()> {
    match &cli.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            io::stdout().lock().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn strands(cli: &Cli) -> anyhow::Result<usize> {
    cli.n.ok_or_else(|| anyhow!("--n is required"))
}

/// Reads a word either in the `s(i,j)` grammar or as `{"n": 4, "letters": [[1,2], ...]}`.
fn word(cli: &Cli, text: &str) -> anyhow::Result<CactusWord> {
    if text.trim_start().starts_with('{') {
        let v: Value = serde_json::from_str(text).context("word JSON")?;
        let n = v["n"]
            .as_u64()
            .ok_or_else(|| anyhow!("word JSON needs an integer `n`"))? as usize;
        if let Some(m) = cli.n.filter(|&m| m != n) {
            bail!("--n {m} disagrees with n = {n} in the word");
        }
        let letters = v["letters"]
            .as_array()
            .ok_or_else(|| anyhow!("word JSON needs `letters`"))?;
        let pairs = letters
            .iter()
            .map(|l| match l.as_array().map(|a| a.as_slice()) {
                Some([i, j]) => match (i.as_u64(), j.as_u64()) {
                    (Some(i), Some(j)) => Ok((i as usize, j as usize)),
                    _ => Err(anyhow!("letter {l} is not a pair of strands")),
                },
                _ => Err(anyhow!("letter {l} is not a pair of strands")),
            })
            .collect::<anyhow::Result<Vec<_>>>()?;
        return Ok(CactusWord::from_pairs(n, &pairs)?);
    }
    Ok(CactusWord::parse(strands(cli)?, text)?)
}

fn word_json(w: &CactusWord) -> Value {
    let letters: Vec<Value> = w.letters().iter().map(|l| json!([l.i, l.j])).collect();
    json!({ "n": w.n(), "word": w.to_string(), "letters": letters })
}

fn line(s: impl std::fmt::Display) -> String {
    format!("{s}\n")
}

fn pretty(v: Value) -> String {
    line(serde_json::to_string_pretty(&v).expect("JSON values serialize"))
}

fn matrix_json(m: &IntMatrix) -> Value {
    let rows: Vec<Value> = m
        .to_string_rows()
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|e| e.parse::<i64>().map(Value::from).unwrap_or(Value::String(e)))
                .collect()
        })
        .collect();
    Value::Array(rows)
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    Ok(match &cli.command {
        Command::Reduce { word: w } => {
            let w = word(cli, w)?;
            let r = w.lift_reduce();
            let phi = w.phi().normal_form();
            if cli.json {
                let mut v = word_json(&r);
                v["phi"] = json!(phi.to_string());
                Outcome::ok(pretty(v))
            } else if r.is_empty() {
                Outcome::ok(String::new())
            } else {
                Outcome::ok(format!("{r}\nphi: {phi}\n"))
            }
        }
        Command::Equal { w1, w2 } => {
            let (a, b) = (word(cli, w1)?, word(cli, w2)?);
            let eq = a.equals(&b)?;
            let text = if cli.json {
                pretty(json!({ "equal": eq }))
            } else {
                line(if eq { "equal" } else { "not equal" })
            };
            Outcome { text, ok: eq }
        }
        Command::Order { word: w } => {
            let o = word(cli, w)?.order();
            if cli.json {
                let v = match o {
                    Order::Finite(m) => json!({ "order": m }),
                    Order::Infinite => json!({ "order": "infinite" }),
                };
                Outcome::ok(pretty(v))
            } else {
                Outcome::ok(line(o))
            }
        }
        Command::Diagram { word: w } => Outcome::ok(svg::render(&word(cli, w)?)),
        Command::Presentation {
            kind,
            format,
            min_size,
        } => {
            let kind = match kind {
                KindArg::Ajn => Kind::Ajn,
                KindArg::Adn => Kind::Adn,
                KindArg::Jn => Kind::Jn,
                KindArg::Dn => Kind::Dn,
                KindArg::CoxeterCactus => Kind::CoxeterCactus,
            };
            let p = Presentation::build(kind, strands(cli)?, *min_size)?;
            if cli.json {
                let side =
                    |w: &Vec<usize>| -> Vec<String> { w.iter().map(|&k| p.labels[k].clone()).collect() };
                let rels: Vec<Value> = p
                    .relations
                    .iter()
                    .map(|(l, r)| json!([side(l), side(r)]))
                    .collect();
                Outcome::ok(pretty(json!({ "generators": p.labels, "relations": rels })))
            } else if *format == Format::Algebra {
                Outcome::ok(p.to_algebra())
            } else {
                Outcome::ok(p.to_plain())
            }
        }
        Command::Selftest { level, check } => {
            let level = match level {
                LevelArg::Quick => Level::Quick,
                LevelArg::Full => Level::Full,
            };
            let results = match check {
                Some(id) if selftest::CHECK_IDS.contains(id) => vec![selftest::run_one(*id, level)],
                Some(id) => bail!("no check numbered {id}"),
                None => selftest::run(level),
            };
            let ok = results.iter().all(|r| r.passed);
            let text = if cli.json {
                let rs: Vec<Value> = results
                    .iter()
                    .map(|r| {
                        json!({
                            "id": r.id, "name": r.name, "passed": r.passed,
                            "summary": r.summary, "witness": r.witness,
                        })
                    })
                    .collect();
                pretty(Value::Array(rs))
            } else {
                results.iter().map(line).collect()
            };
            Outcome { text, ok }
        }
        Command::Perm { word: w } => {
            let p = word(cli, w)?.pi();
            Outcome::ok(if cli.json {
                pretty(json!({ "perm": p.to_string() }))
            } else {
                line(p)
            })
        }
        Command::Pure { word: w } => {
            let pure = word(cli, w)?.is_pure();
            let text = if cli.json {
                pretty(json!({ "pure": pure }))
            } else {
                line(if pure { "pure" } else { "not pure" })
            };
            Outcome { text, ok: pure }
        }
        Command::Phi { word: w } => {
            let e = word(cli, w)?.phi().normal_form();
            if cli.json {
                let diagram: Vec<String> = e.diagram_part().iter().map(|d| d.to_string()).collect();
                Outcome::ok(pretty(
                    json!({ "diagram": diagram, "affine": e.affine_part().to_string() }),
                ))
            } else {
                Outcome::ok(line(e))
            }
        }
        Command::Rotate { word: w, by } => {
            let r = word(cli, w)?.rotate(*by);
            Outcome::ok(if cli.json { pretty(word_json(&r)) } else { line(r) })
        }
        Command::Split { word: w, p } => {
            let (u, v) = word(cli, w)?.split(*p)?;
            if cli.json {
                Outcome::ok(pretty(json!({ "u": word_json(&u), "v": word_json(&v) })))
            } else {
                Outcome::ok(format!("{u}\n{v}\n"))
            }
        }
        Command::Rep { min_size } => {
            let n = strands(cli)?;
            let affine: Vec<Value> = generator_affine_matrices(n)?
                .iter()
                .map(|(g, m)| json!({ "generator": g.to_string(), "matrix": matrix_json(m) }))
                .collect();
            let alphabet = circular_alphabet(n, *min_size)?;
            let rep = alphabet.geometric_rep();
            let diagram = alphabet
                .letters()
                .iter()
                .map(|c| Ok(json!({ "generator": c.to_string(), "matrix": matrix_json(&rep.generator_matrix(c)?) })))
                .collect::<anyhow::Result<Vec<Value>>>()?;
            Outcome::ok(pretty(json!({ "n": n, "affine": affine, "diagram": diagram })))
        }
        Command::IsoCheck => {
            let report = cactus::coxeter_cactus::iso_check(strands(cli)?)?;
            let ok = report.passed();
            let text = if cli.json {
                let table: Vec<Value> = report
                    .table
                    .iter()
                    .map(|(a, l)| json!({ "arc": [a.start, a.len], "letter": l.to_string() }))
                    .collect();
                pretty(json!({
                    "n": report.n, "passed": ok, "matched": report.matched, "table": table,
                    "unmatched_diagram": report.unmatched_diagram,
                    "unmatched_cactus": report.unmatched_cactus,
                }))
            } else {
                line(&report)
            };
            Outcome { text, ok }
        }
    })
}
