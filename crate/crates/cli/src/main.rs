//! `graphgenus`: graph homology, wheeling and genus computations from the
//! command line.
//!
//! Exit status is 0 on success, 1 when a check fails and 2 for usage, parse
//! or data errors.

use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use graphgenus::algebra::{dimension, ihx_relations, parse_graph_vector, parse_graph_vectors, write_graph_vectors};
use graphgenus::genus::{parse_monomial, Chern, Genus};
use graphgenus::graph::{parse_graph, write_oriented};
use graphgenus::hk::{analyze, render_q, ManifoldData};
use graphgenus::lie::MetricLieAlgebra;
use graphgenus::wheeling::{omega, wheeling_check};
use graphgenus::{parse_rational, Bound, PiRational, Q};

const MAX_K_VAR: &str = "GRAPHGENUS_MAX_K";

#[derive(Parser)]
#[command(name = "graphgenus", version, about = "Trivalent graph homology, wheels and hyperkahler genera")]
struct Cli {
    /// Render scalar results as decimals instead of exact values.
    #[arg(long, global = true)]
    float: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical form and orientation sign of a graph file.
    Normalize { file: PathBuf },
    /// Normal form of a graph vector modulo IHX.
    Reduce {
        #[arg(long)]
        k: usize,
        file: PathBuf,
    },
    /// Dimension of the space of trivalent graphs with 2k vertices mod AS and IHX.
    Dim {
        #[arg(long)]
        k: usize,
    },
    /// Checks the degree-k wheeling identity.
    Wheeling {
        #[arg(long)]
        k: usize,
    },
    /// The wheeling element up to spoke degree 2k.
    Omega {
        #[arg(long)]
        k: usize,
    },
    /// Genus polynomial of degree k in the Chern classes.
    Genus {
        #[arg(long)]
        series: String,
        #[arg(long)]
        k: usize,
        /// Keep terms with odd Chern classes.
        #[arg(long)]
        keep_odd: bool,
    },
    /// Characteristic numbers and curvature identities of a hyperkahler manifold.
    Analyze(AnalyzeArgs),
    /// Lie algebra weights of the graph vectors in a file.
    Oracle {
        #[arg(long)]
        algebra: String,
        file: PathBuf,
    },
    /// IHX relations.
    Ihx {
        #[command(subcommand)]
        action: IhxAction,
    },
}

#[derive(Subcommand)]
enum IhxAction {
    /// Prints every IHX relation of degree k, separated by `---` lines.
    Emit {
        #[arg(long)]
        k: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Kv,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[arg(long)]
    k: usize,
    /// Volume, e.g. `1`, `3/2` or `2*pi^4`.
    #[arg(long)]
    vol: String,
    #[arg(long)]
    c2: Option<String>,
    #[arg(long)]
    c4: Option<String>,
    #[arg(long)]
    c6: Option<String>,
    #[arg(long)]
    c2sq: Option<String>,
    /// Any Chern number, as `monomial=value`, e.g. `c2^2c4=1200`.
    #[arg(long = "monomial", value_name = "M=V")]
    monomials: Vec<String>,
    /// Known value of the curvature norm, e.g. `192*pi^2`.
    #[arg(long = "normRsq")]
    norm_r_sq: Option<String>,
    /// The holonomy is a proper subgroup of Sp(k).
    #[arg(long)]
    reducible: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

struct Failure(String);

impl<E: Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

/// Printed output and whether every check passed.
struct Outcome {
    text: String,
    ok: bool,
}

impl Outcome {
    fn ok(text: impl Into<String>) -> Self {
        Self { text: text.into(), ok: true }
    }
}

fn bound() -> Result<Bound, Failure> {
    match std::env::var(MAX_K_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Bound::new)
            .map_err(|_| Failure(format!("{MAX_K_VAR} must be a non-negative integer, got `{v}`"))),
        Err(_) => Ok(Bound::default()),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn chern_value(name: &str, raw: &str) -> Result<(Vec<usize>, Q), Failure> {
    let m = parse_monomial::<Chern>(name).ok_or_else(|| Failure(format!("BadMonomial: cannot read `{name}`")))?;
    let v = parse_rational(raw).ok_or_else(|| Failure(format!("bad value `{raw}` for {name}")))?;
    Ok((m, v))
}

fn cmd_analyze(a: &AnalyzeArgs, float: bool) -> Result<Outcome, Failure> {
    let vol = PiRational::parse(&a.vol).ok_or_else(|| Failure(format!("bad volume `{}`", a.vol)))?;
    let norm = match &a.norm_r_sq {
        Some(s) => Some(PiRational::parse(s).ok_or_else(|| Failure(format!("bad norm `{s}`")))?),
        None => None,
    };
    let mut values = Vec::new();
    for (name, v) in [("c2", &a.c2), ("c4", &a.c4), ("c6", &a.c6), ("c2^2", &a.c2sq)] {
        if let Some(v) = v {
            values.push(chern_value(name, v)?);
        }
    }
    for m in &a.monomials {
        let (name, v) = m.split_once('=').ok_or_else(|| Failure(format!("expected monomial=value, got `{m}`")))?;
        values.push(chern_value(name.trim(), v.trim())?);
    }
    let data = ManifoldData::new(a.k, values, vol, norm, !a.reducible)?;
    let report = analyze(&data);
    let text = match a.format {
        Format::Text => report.render_text(float),
        Format::Kv => report.render_kv(float),
    };
    Ok(Outcome { text, ok: report.pass() })
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let float = cli.float;
    match &cli.command {
        Command::Normalize { file } => {
            let p = parse_graph(&read(file)?)?;
            Ok(Outcome::ok(write_oriented(&p.canonical())))
        }
        Command::Reduce { k, file } => {
            let v = parse_graph_vector(&read(file)?)?;
            let rels = ihx_relations(*k, &bound()?)?;
            Ok(Outcome::ok(rels.reduce(&v)?.to_string()))
        }
        Command::Dim { k } => Ok(Outcome::ok(format!("{}\n", dimension(*k, &bound()?)?))),
        Command::Wheeling { k } => {
            let report = wheeling_check(*k, &bound()?)?;
            Ok(Outcome { text: report.to_string(), ok: report.pass() })
        }
        Command::Omega { k } => Ok(Outcome::ok(format!("{}\n", omega(*k, &bound()?)?))),
        Command::Genus { series, k, keep_odd } => {
            let g = Genus::parse(series)?;
            let p = if *keep_odd { g.polynomial_with_odd(*k) } else { g.polynomial(*k) };
            Ok(Outcome::ok(format!("{p}\n")))
        }
        Command::Analyze(a) => cmd_analyze(a, float),
        Command::Oracle { algebra, file } => {
            let lie = MetricLieAlgebra::builtin(algebra)?;
            let mut text = String::new();
            for v in parse_graph_vectors(&read(file)?)? {
                text.push_str(&render_q(&lie.weight_vector(&v)?, float));
                text.push('\n');
            }
            Ok(Outcome::ok(text))
        }
        Command::Ihx { action: IhxAction::Emit { k } } => {
            let rels = ihx_relations(*k, &bound()?)?;
            Ok(Outcome::ok(write_graph_vectors(rels.relations())))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
