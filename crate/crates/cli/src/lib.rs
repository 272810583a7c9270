//! `triadic`: tables, transformation queries, verification reports, graph
//! export and progression analysis from the command line.
//!
//! [`run`] does all the work and returns the output instead of printing it,
//! so the binary is a thin wrapper and tests can call it directly.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use triadic_core::analysis::{
    analyze, beethoven_sequence, format_steps, parse_progression, parsimony_study, steps_json,
    AnalysisError, ParseError,
};
use triadic_core::duality::{verify_cayley_examples, verify_duality, verify_hook, CayleyReport};
use triadic_core::neoriemann::{find_plr, find_ti, word_apply, word_normal_form};
use triadic_core::tonnetz::{
    build_chickenwire, dual_of_tonnetz, export_dot, export_json, GraphError,
};
use triadic_core::triads::{parse_name, triad_table};
use triadic_core::{ConsonantTriad, PlrWord, Spelling, TriadError};

#[derive(Debug, Parser)]
#[command(
    name = "triadic",
    version,
    about = "Transposition/inversion and PLR actions on the 24 consonant triads"
)]
pub struct Cli {
    /// Structured output
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the 24 consonant triads
    Table,
    /// Apply a PLR word (read right to left) to a chord
    Apply {
        #[arg(long)]
        word: String,
        #[arg(long)]
        chord: String,
    },
    /// The unique T/I element and PLR element taking one chord to another
    Find {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Check that the T/I and PLR groups are dual
    Duality,
    /// Check the uniform-triadic-transformation group results
    Hook,
    /// Export the Tonnetz or the chicken-wire torus
    Graph {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
    /// Step-by-step analysis of a progression file
    Analyze { file: PathBuf },
    /// R and L alternately from C
    Beethoven,
    /// Voice-leading displacement of P/L/R analogues on every trichord class
    Parsimony,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Tonnetz,
    Chickenwire,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Dot,
    Json,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Triad(#[from] TriadError),
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("bad PLR word: {0}")]
    Word(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("verification failed: {0}")]
    Failed(String),
}

/// What the process should print and return.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match execute(&cli) {
        Ok(out) => Outcome::ok(out),
        Err((stdout, e)) => Outcome {
            code: 1,
            stdout,
            stderr: format!("error: {e}\n"),
        },
    }
}

type Failure = (String, CliError);

fn fail(e: impl Into<CliError>) -> Failure {
    (String::new(), e.into())
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable output");
    s.push('\n');
    s
}

fn name(t: ConsonantTriad) -> String {
    t.spell(Spelling::KeySignature)
}

pub fn execute(cli: &Cli) -> Result<String, Failure> {
    let json = cli.json;
    match &cli.command {
        Command::Table => Ok(table(json)),
        Command::Apply { word, chord } => apply(word, chord, json),
        Command::Find { from, to } => find(from, to, json),
        Command::Duality => duality(json),
        Command::Hook => hook(json),
        Command::Graph { which, format } => {
            graph(*which, if json { Format::Json } else { *format })
        }
        Command::Analyze { file } => analyze_file(file, json),
        Command::Beethoven => beethoven(json),
        Command::Parsimony => {
            let study = parsimony_study();
            Ok(if json {
                pretty(&study)
            } else {
                format!("{study}\n")
            })
        }
    }
}

fn table(json: bool) -> String {
    let triads = triad_table();
    if json {
        let rows: Vec<_> = triads
            .iter()
            .map(|t| {
                json!({
                    "index": t.index(),
                    "name": t.spell(Spelling::Verbose),
                    "tones": t.tones().map(|p| p.value()),
                    "parity": t.parity(),
                })
            })
            .collect();
        return pretty(&rows);
    }
    let mut out = format!("{:<3} {:<18} {}\n", "n", "T_n<0,4,7>", "I_n<0,4,7>");
    for n in 0..12 {
        let (major, minor) = (triads[n], triads[12 + n]);
        let left = format!(
            "{:<5} = {}",
            major.spell(Spelling::Verbose),
            major.literal()
        );
        writeln!(
            out,
            "{n:<3} {left:<18} {} = {}",
            minor.literal(),
            minor.spell(Spelling::Verbose)
        )
        .unwrap();
    }
    out
}

fn parse_word(word: &str) -> Result<PlrWord, Failure> {
    word.parse()
        .map_err(|e: triadic_core::neoriemann::WordError| fail(CliError::Word(e.to_string())))
}

fn apply(word: &str, chord: &str, json: bool) -> Result<String, Failure> {
    let w = parse_word(word)?;
    let y = parse_name(chord).map_err(fail)?;
    let z = word_apply(&w, y);
    let nf = word_normal_form(&w);
    if json {
        return Ok(pretty(&json!({
            "word": w.to_string(),
            "chord": name(y),
            "result": name(z),
            "tones": z.tones().map(|p| p.value()),
            "normalForm": nf.to_string(),
        })));
    }
    Ok(format!(
        "{w}({}) = {} {}   [{w} = {nf}]\n",
        name(y),
        name(z),
        z.literal()
    ))
}

fn find(from: &str, to: &str, json: bool) -> Result<String, Failure> {
    let y = parse_name(from).map_err(fail)?;
    let z = parse_name(to).map_err(fail)?;
    let ti = find_ti(y, z);
    let plr = find_plr(y, z);
    if json {
        return Ok(pretty(&json!({
            "from": name(y),
            "to": name(z),
            "ti": ti.to_string(),
            "plr": plr.to_string(),
        })));
    }
    let plr_text = match plr.as_letter() {
        Some(op) => format!("{plr} (= {})", op.letter()),
        None => plr.to_string(),
    };
    Ok(format!("T/I: {ti}   PLR: {plr_text}\n"))
}

fn cayley_text(reports: &[CayleyReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let mark = if r.passed() { "ok" } else { "FAIL" };
        writeln!(
            out,
            "[{mark}] Cayley {}: order {}, left and right regular representations centralize each other",
            r.group, r.order
        )
        .unwrap();
    }
    out
}

fn duality(json: bool) -> Result<String, Failure> {
    let report = verify_duality();
    let cayley = verify_cayley_examples();
    let passed = report.passed() && cayley.iter().all(CayleyReport::passed);
    let out = if json {
        pretty(&json!({ "passed": passed, "duality": report, "cayley": cayley }))
    } else {
        format!("{report}\n{}", cayley_text(&cayley))
    };
    if passed {
        return Ok(out);
    }
    let first = report
        .first_failure()
        .map(str::to_string)
        .or_else(|| {
            cayley
                .iter()
                .find(|r| !r.passed())
                .map(|r| format!("cayley_{}", r.group))
        })
        .expect("some check failed");
    Err((out, CliError::Failed(first)))
}

fn hook(json: bool) -> Result<String, Failure> {
    let report = verify_hook();
    let out = if json {
        pretty(&json!({ "passed": report.passed(), "hook": report }))
    } else {
        format!("{report}\n")
    };
    match report.first_failure() {
        None => Ok(out),
        Some(check) => Err((out, CliError::Failed(check.to_string()))),
    }
}

fn graph(which: Which, format: Format) -> Result<String, Failure> {
    let g = match which {
        Which::Tonnetz => triadic_core::tonnetz::build_tonnetz(),
        Which::Chickenwire => {
            // the chicken-wire graph must agree with the dual of the Tonnetz
            dual_of_tonnetz().map_err(fail)?;
            build_chickenwire()
        }
    };
    Ok(match format {
        Format::Dot => export_dot(&g),
        Format::Json => export_json(&g),
    })
}

fn analyze_file(file: &PathBuf, json: bool) -> Result<String, Failure> {
    let path = file.display().to_string();
    let text = std::fs::read_to_string(file).map_err(|source| {
        fail(CliError::Io {
            path: path.clone(),
            source,
        })
    })?;
    let progression =
        parse_progression(&text).map_err(|source| fail(CliError::Parse { path, source }))?;
    let steps = analyze(&progression).map_err(fail)?;
    Ok(if json {
        pretty(&steps_json(&steps))
    } else {
        format_steps(&steps)
    })
}

fn beethoven(json: bool) -> Result<String, Failure> {
    let seq = beethoven_sequence();
    let names = seq.names(Spelling::KeySignature);
    let labels: Vec<&str> = (0..seq.len() - 1)
        .map(|k| if k % 2 == 0 { "R" } else { "L" })
        .collect();
    let distinct: std::collections::BTreeSet<_> = seq.triads[..24].iter().collect();
    let hamiltonian = distinct.len() == 24 && seq.triads[0] == seq.triads[24];
    let out = if json {
        pretty(&json!({ "sequence": names, "labels": labels, "hamiltonian": hamiltonian }))
    } else {
        let mut walk = names[0].clone();
        for (label, next) in labels.iter().zip(&names[1..]) {
            write!(walk, " -{label}-> {next}").unwrap();
        }
        format!(
            "{}\n{walk}\nall 24 triads visited once, back to {}: {hamiltonian}\n",
            names.join(" "),
            names[0]
        )
    };
    if hamiltonian {
        Ok(out)
    } else {
        Err((out, CliError::Failed("beethoven_hamiltonian".into())))
    }
}
