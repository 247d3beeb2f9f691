//! Subcommands and their JSON reports.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use catprod_core::oracle::A_CAP;
use catprod_core::{
    a_ratio, alpha_product_cographs, alpha_product_splitgraphs, binding_from_a, brute_a,
    brute_alpha, build_cotree, capacity_trichotomy, categorical_product,
    has_fractional_perfect_matching, independence_ratio, neighborhood_profile, split_partition,
    a_star, Graph, OracleError, ProductError,
};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::format::write_graph;
use crate::input::{Input, InputError};
use crate::term::write_cotree;

#[derive(Debug, Parser)]
#[command(name = "catprod", version, about = "Independence in categorical graph products")]
pub struct Cli {
    /// Output format of the report.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Seed for random `gen:` inputs that carry no seed of their own.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Run this many independent trials with seeds `seed, seed+1, ...`.
    #[arg(long, global = true, default_value_t = 1)]
    pub trials: u64,
    /// Where `generate` and `product` write the graph.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Plain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphClass {
    Cograph,
    Split,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlphaMethod {
    Cograph,
    Split,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CapacityMode {
    Cograph,
    Trichotomy,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide membership in a graph class and print a certificate.
    Recognize {
        input: String,
        #[arg(long, value_enum)]
        class: GraphClass,
    },
    /// Independence number of the categorical product of two graphs.
    AlphaProduct {
        left: String,
        right: String,
        #[arg(long, value_enum)]
        class: AlphaMethod,
    },
    /// Tensor capacity of a cograph, or the ONE / AT_MOST_HALF decision.
    Capacity {
        input: String,
        #[arg(long, value_enum)]
        mode: CapacityMode,
    },
    /// Write a generated graph (`family:p1,p2[:seed=S]`, `gen:` optional).
    Generate { spec: String },
    /// Write the categorical product of two graphs.
    Product { left: String, right: String },
    /// Exhaustive α, i(G), a(G) and the fractional perfect matching test.
    Oracle { input: String },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Recognize { .. } => "recognize",
            Command::AlphaProduct { .. } => "alpha-product",
            Command::Capacity { .. } => "capacity",
            Command::Generate { .. } => "generate",
            Command::Product { .. } => "product",
            Command::Oracle { .. } => "oracle",
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("oracle: {0}")]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Product(#[from] ProductError),
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("internal error: certificate failed re-verification")]
    Certificate,
}

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Ok = 0,
    NotMember = 1,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub status: Status,
    pub body: Map<String, Value>,
}

struct Builder {
    body: Map<String, Value>,
    status: Status,
}

impl Builder {
    fn new(command: &str, inputs: Vec<String>) -> Self {
        let mut body = Map::new();
        body.insert("command".into(), json!(command));
        body.insert("inputs".into(), json!(inputs));
        Builder {
            body,
            status: Status::Ok,
        }
    }

    fn set(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.body.insert(key.into(), value.into());
        self
    }

    fn reject(&mut self) -> &mut Self {
        self.status = Status::NotMember;
        self
    }

    fn finish(mut self, start: Instant) -> Report {
        let ms = start.elapsed().as_secs_f64() * 1e3;
        self.body.insert("elapsed_ms".into(), json!((ms * 1e3).round() / 1e3));
        Report {
            status: self.status,
            body: self.body,
        }
    }
}

/// Runs every trial. A single trial reports directly; several trials are
/// wrapped in one object with a `runs` array in trial order.
pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    if cli.trials <= 1 {
        return run_once(cli, cli.seed, cli.out.as_deref());
    }
    let runs: Vec<Report> = (0..cli.trials)
        .into_par_iter()
        .map(|t| {
            let out = cli.out.as_ref().map(|p| {
                let mut name = p.clone().into_os_string();
                name.push(format!(".{t}"));
                PathBuf::from(name)
            });
            run_once(cli, cli.seed.wrapping_add(t), out.as_deref())
        })
        .collect::<Result<_, _>>()?;
    let status = runs.iter().map(|r| r.status).max().unwrap_or(Status::Ok);
    let mut body = Map::new();
    body.insert("command".into(), json!(cli.command.name()));
    body.insert("seed".into(), json!(cli.seed));
    body.insert("trials".into(), json!(cli.trials));
    body.insert(
        "runs".into(),
        Value::Array(runs.into_iter().map(|r| Value::Object(r.body)).collect()),
    );
    Ok(Report { status, body })
}

fn load(arg: &str, seed: u64) -> Result<(Graph, String), CliError> {
    let input = Input::parse(arg)?;
    Ok((input.load(seed)?, input.describe(seed)))
}

fn write_out(path: &Path, g: &Graph) -> Result<(), CliError> {
    fs::write(path, write_graph(g)).map_err(|source| CliError::Write {
        path: path.to_owned(),
        source,
    })
}

fn run_once(cli: &Cli, seed: u64, out: Option<&Path>) -> Result<Report, CliError> {
    let start = Instant::now();
    match &cli.command {
        Command::Recognize { input, class } => {
            let (g, desc) = load(input, seed)?;
            let mut b = Builder::new("recognize", vec![desc]);
            match class {
                GraphClass::Cograph => {
                    b.set("class", "cograph");
                    match build_cotree(&g) {
                        Ok(t) => b.set("member", true).set("cotree", write_cotree(&t)),
                        Err(e) => b.set("member", false).set("witness", e.witness.to_vec()).reject(),
                    };
                }
                GraphClass::Split => {
                    b.set("class", "split");
                    match split_partition(&g) {
                        Ok(p) => b
                            .set("member", true)
                            .set("independent", p.independent)
                            .set("clique", p.clique),
                        Err(_) => b.set("member", false).reject(),
                    };
                }
            }
            Ok(b.finish(start))
        }
        Command::AlphaProduct { left, right, class } => {
            let (g, dg) = load(left, seed)?;
            let (h, dh) = load(right, seed)?;
            let mut b = Builder::new("alpha-product", vec![dg, dh]);
            let (value, certificate, case) = match class {
                AlphaMethod::Cograph => {
                    b.set("class", "cograph");
                    let (tg, th) = match (build_cotree(&g), build_cotree(&h)) {
                        (Ok(tg), Ok(th)) => (tg, th),
                        (tg, th) => {
                            let (which, e) = match (tg, th) {
                                (Err(e), _) => ("left", e),
                                (_, Err(e)) => ("right", e),
                                _ => unreachable!(),
                            };
                            b.set("member", false)
                                .set("violating_input", which)
                                .set("witness", e.witness.to_vec())
                                .reject();
                            return Ok(b.finish(start));
                        }
                    };
                    let r = alpha_product_cographs(&tg, &th);
                    if r.verify(&g, &h) == Some(false) {
                        return Err(CliError::Certificate);
                    }
                    b.set("verified", r.verify(&g, &h));
                    (r.value, r.certificate, None)
                }
                AlphaMethod::Split => {
                    b.set("class", "split");
                    let (pg, ph) = match (split_partition(&g), split_partition(&h)) {
                        (Ok(pg), Ok(ph)) => (pg, ph),
                        (pg, _) => {
                            let which = if pg.is_err() { "left" } else { "right" };
                            b.set("member", false).set("violating_input", which).reject();
                            return Ok(b.finish(start));
                        }
                    };
                    let r = alpha_product_splitgraphs(&g, &pg, &h, &ph)?;
                    if r.verify(&g, &h) == Some(false) {
                        return Err(CliError::Certificate);
                    }
                    b.set("verified", r.verify(&g, &h));
                    (r.value, r.certificate, r.case)
                }
                AlphaMethod::Oracle => {
                    b.set("class", "oracle");
                    let p = categorical_product(&g, &h);
                    let r = brute_alpha(&p)?;
                    if !p.is_independent(&r.set) {
                        return Err(CliError::Certificate);
                    }
                    b.set("verified", true);
                    (r.value, r.set, None)
                }
            };
            b.set("alpha", value).set("certificate", certificate);
            if let Some(case) = case {
                b.set("case", case.as_str());
            }
            Ok(b.finish(start))
        }
        Command::Capacity { input, mode } => {
            let (g, desc) = load(input, seed)?;
            let mut b = Builder::new("capacity", vec![desc]);
            match mode {
                CapacityMode::Cograph => {
                    b.set("mode", "cograph");
                    match build_cotree(&g) {
                        Ok(t) => {
                            let profile = neighborhood_profile(&t);
                            let a = a_ratio(&profile);
                            b.set("capacity", a_star(a.value).to_string())
                                .set("a", a.value.to_string())
                                .set("a_size", a.size)
                                .set("profile", profile.table);
                            if let Ok(binding) = binding_from_a(a.value) {
                                b.set("binding", binding.to_string());
                            }
                        }
                        Err(e) => {
                            b.set("member", false).set("witness", e.witness.to_vec()).reject();
                        }
                    }
                }
                CapacityMode::Trichotomy => {
                    b.set("mode", "trichotomy")
                        .set("capacity", capacity_trichotomy(&g).as_str());
                }
            }
            Ok(b.finish(start))
        }
        Command::Generate { spec } => {
            let arg = if spec.starts_with("gen:") { spec.clone() } else { format!("gen:{spec}") };
            let (g, desc) = load(&arg, seed)?;
            let mut b = Builder::new("generate", vec![desc]);
            graph_fields(&mut b, &g, out)?;
            Ok(b.finish(start))
        }
        Command::Product { left, right } => {
            let (g, dg) = load(left, seed)?;
            let (h, dh) = load(right, seed)?;
            let mut b = Builder::new("product", vec![dg, dh]);
            graph_fields(&mut b, &categorical_product(&g, &h), out)?;
            Ok(b.finish(start))
        }
        Command::Oracle { input } => {
            let (g, desc) = load(input, seed)?;
            let mut b = Builder::new("oracle", vec![desc]);
            let r = brute_alpha(&g)?;
            b.set("alpha", r.value)
                .set("certificate", r.set)
                .set("independence_ratio", independence_ratio(&g)?.to_string());
            if g.n() <= A_CAP {
                let a = brute_a(&g)?;
                b.set("a", a.value.to_string())
                    .set("a_set", a.set)
                    .set("a_star", a_star(a.value).to_string());
            }
            b.set("fractional_perfect_matching", has_fractional_perfect_matching(&g));
            Ok(b.finish(start))
        }
    }
}

fn graph_fields(b: &mut Builder, g: &Graph, out: Option<&Path>) -> Result<(), CliError> {
    b.set("vertices", g.n()).set("edges", g.edge_count());
    match out {
        Some(path) => {
            write_out(path, g)?;
            b.set("out", path.display().to_string());
        }
        None => {
            b.set("graph", write_graph(g));
        }
    }
    Ok(())
}

/// Renders a report as one JSON line or as `key: value` lines.
pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", Value::Object(report.body.clone())),
        Format::Plain => {
            let mut out = String::new();
            plain(&report.body, "", &mut out);
            out
        }
    }
}

fn plain(body: &Map<String, Value>, prefix: &str, out: &mut String) {
    for (k, v) in body {
        match v {
            Value::String(s) if s.contains('\n') => {
                out.push_str(&format!("{prefix}{k}:\n"));
                for line in s.lines() {
                    out.push_str(&format!("{prefix}  {line}\n"));
                }
            }
            Value::String(s) => out.push_str(&format!("{prefix}{k}: {s}\n")),
            Value::Array(runs) if k == "runs" => {
                for (i, run) in runs.iter().enumerate() {
                    out.push_str(&format!("{prefix}run {i}:\n"));
                    if let Value::Object(m) = run {
                        plain(m, &format!("{prefix}  "), out);
                    }
                }
            }
            other => out.push_str(&format!("{prefix}{k}: {other}\n")),
        }
    }
}
