//! Command-line front end.
//!
//! Exit codes: 0 success, 1 invalid configuration, 2 unreadable or
//! unparsable input, 3 engines disagree.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::diagram::{parse_pd, FourValentGraph, LinkDiagram};
use crate::error::EngineError;
use crate::graphmodel::{graph_eval, kauffman_state_sum};
use crate::jaeger::{dump_states, jaeger_kauffman};
use crate::kauffman::kauffman_skein;
use crate::{fixtures, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Direct,
    Jaeger,
    Graph,
    All,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Pd(String),
    Path(PathBuf),
    Fixtures,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub n: i64,
    pub engine: Engine,
    pub input: Input,
    pub format: Format,
    pub verify: bool,
    pub dump_states: Option<PathBuf>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::Engine(EngineError::InvalidN(_)) => 1,
            CliError::Input(_) | CliError::Engine(_) => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "skein", about = "SO(2n) Kauffman polynomial of link diagrams and planar 4-valent graphs")]
pub struct Cli {
    /// Rank: the invariant is the SO(2n) Kauffman polynomial, n >= 2.
    #[arg(long, default_value_t = 2, allow_negative_numbers = true)]
    pub n: i64,
    /// Defaults to `direct`, or `all` with --fixtures.
    #[arg(long, value_enum)]
    pub engine: Option<Engine>,
    /// One diagram or graph per line: PD code or JSON.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// A single PD code such as "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)".
    #[arg(long)]
    pub pd: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// Runs every engine; exit code 3 unless they agree.
    #[arg(long)]
    pub verify: bool,
    /// Writes every Jaeger state as JSON lines.
    #[arg(long)]
    pub dump_states: Option<PathBuf>,
    /// Runs the built-in corpus.
    #[arg(long)]
    pub fixtures: bool,
}

impl Cli {
    pub fn into_config(self) -> Result<RunConfig, CliError> {
        let mut inputs = Vec::new();
        if let Some(pd) = self.pd {
            inputs.push(Input::Pd(pd));
        }
        if let Some(p) = self.input {
            inputs.push(Input::Path(p));
        }
        if self.fixtures {
            inputs.push(Input::Fixtures);
        }
        if inputs.len() != 1 {
            return Err(CliError::Config("give exactly one of --pd, --input, --fixtures".into()));
        }
        let input = inputs.pop().unwrap();
        let engine = self.engine.unwrap_or(if input == Input::Fixtures { Engine::All } else { Engine::Direct });
        Ok(RunConfig {
            n: self.n,
            engine,
            input,
            format: self.format,
            verify: self.verify,
            dump_states: self.dump_states,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOutcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Subject {
    Diagram(LinkDiagram),
    Graph(FourValentGraph),
}

struct Item {
    label: String,
    subject: Subject,
}

#[derive(Serialize)]
struct Record {
    input: String,
    n: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    direct: Option<Poly>,
    #[serde(skip_serializing_if = "Option::is_none")]
    jaeger: Option<Poly>,
    #[serde(skip_serializing_if = "Option::is_none")]
    graph: Option<Poly>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdict: Option<&'static str>,
}

impl Record {
    fn values(&self) -> Vec<(&'static str, &Poly)> {
        [("direct", &self.direct), ("jaeger", &self.jaeger), ("graph", &self.graph)]
            .into_iter()
            .filter_map(|(k, v)| v.as_ref().map(|v| (k, v)))
            .collect()
    }
}

fn parse_line(line: &str) -> Result<Subject, CliError> {
    let line = line.trim();
    if !line.starts_with('{') {
        return parse_pd(line).map(Subject::Diagram).map_err(|e| CliError::Input(e.to_string()));
    }
    let value: serde_json::Value = serde_json::from_str(line).map_err(|e| CliError::Input(e.to_string()))?;
    let subject = if value.get("map").is_some() {
        LinkDiagram::from_json(line).map(Subject::Diagram)
    } else {
        FourValentGraph::from_json(line).map(Subject::Graph)
    };
    subject.map_err(|e| CliError::Input(e.to_string()))
}

fn load(input: &Input) -> Result<Vec<Item>, CliError> {
    match input {
        Input::Pd(pd) => Ok(vec![Item { label: "input".into(), subject: parse_line(pd)? }]),
        Input::Fixtures => Ok(fixtures::all()
            .into_iter()
            .map(|(name, d)| Item { label: name.into(), subject: Subject::Diagram(d) })
            .collect()),
        Input::Path(p) => {
            let text = fs::read_to_string(p).map_err(|e| CliError::Input(format!("{}: {e}", p.display())))?;
            text.lines()
                .enumerate()
                .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
                .map(|(i, l)| {
                    let subject = parse_line(l).map_err(|e| CliError::Input(format!("line {}: {e}", i + 1)))?;
                    Ok(Item { label: format!("line {}", i + 1), subject })
                })
                .collect()
        }
    }
}

fn evaluate(item: &Item, engines: &[Engine], n: u32) -> Result<Record, CliError> {
    let mut r = Record { input: item.label.clone(), n, direct: None, jaeger: None, graph: None, verdict: None };
    match &item.subject {
        Subject::Graph(g) => {
            if !engines.contains(&Engine::Graph) {
                return Err(CliError::Config(format!("{}: graph input needs --engine graph or all", item.label)));
            }
            r.graph = Some(graph_eval(g, n)?);
        }
        Subject::Diagram(d) => {
            for e in engines {
                match e {
                    Engine::Direct => r.direct = Some(kauffman_skein(d, n)?),
                    Engine::Jaeger => r.jaeger = Some(jaeger_kauffman(d, n)?),
                    Engine::Graph => r.graph = Some(kauffman_state_sum(d, n)?),
                    Engine::All => unreachable!(),
                }
            }
        }
    }
    let values = r.values();
    if values.len() > 1 {
        r.verdict = Some(if values.windows(2).all(|w| w[0].1 == w[1].1) { "match" } else { "mismatch" });
    }
    Ok(r)
}

fn write_dump(path: &PathBuf, items: &[Item], n: u32) -> Result<(), CliError> {
    let mut out = String::new();
    for item in items {
        let Subject::Diagram(d) = &item.subject else { continue };
        for st in dump_states(d, n)? {
            let line = serde_json::json!({ "input": item.label, "state": st });
            writeln!(out, "{line}").unwrap();
        }
    }
    fs::write(path, out).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
}

fn execute(cfg: &RunConfig) -> Result<(String, bool), CliError> {
    if cfg.n < 2 || cfg.n > u32::MAX as i64 {
        return Err(EngineError::InvalidN(cfg.n).into());
    }
    let n = cfg.n as u32;
    let engines: Vec<Engine> = if cfg.verify || cfg.engine == Engine::All {
        vec![Engine::Direct, Engine::Jaeger, Engine::Graph]
    } else {
        vec![cfg.engine]
    };
    let items = load(&cfg.input)?;
    let records: Vec<Record> = items.par_iter().map(|it| evaluate(it, &engines, n)).collect::<Result<_, _>>()?;
    if let Some(path) = &cfg.dump_states {
        write_dump(path, &items, n)?;
    }
    let all_match = records.iter().all(|r| r.verdict != Some("mismatch"));

    let mut out = String::new();
    let batch = records.len() > 1;
    for r in &records {
        if cfg.format == Format::Json {
            writeln!(out, "{}", serde_json::to_string(r).expect("record serializes")).unwrap();
            continue;
        }
        if batch {
            writeln!(out, "[{}]", r.input).unwrap();
        }
        let values = r.values();
        if values.len() == 1 && !batch {
            writeln!(out, "{}", values[0].1).unwrap();
        } else {
            for (k, v) in values {
                writeln!(out, "{k:<7}{v}").unwrap();
            }
        }
        if let Some(v) = r.verdict {
            writeln!(out, "{}", v.to_uppercase()).unwrap();
        }
    }
    Ok((out, all_match))
}

pub fn run(cfg: &RunConfig) -> RunOutcome {
    match execute(cfg) {
        Ok((stdout, true)) => RunOutcome { code: 0, stdout, stderr: String::new() },
        Ok((stdout, false)) => RunOutcome { code: 3, stdout, stderr: "engines disagree\n".into() },
        Err(e) => RunOutcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

/// Parses arguments and runs; help and version requests exit 0.
pub fn main_with_args<I, T>(args: I) -> RunOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                RunOutcome { code, stdout: text, stderr: String::new() }
            } else {
                RunOutcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match cli.into_config() {
        Ok(cfg) => run(&cfg),
        Err(e) => RunOutcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}
