//! Command-line front end: parse instances, dispatch the solver, the exact
//! cover oracle, the detectors, the dominating-set certifier and the
//! instance generators, and emit text or stable JSON.
//!
//! Exit codes: 0 success, 1 parse/usage errors, 2 infeasible, 3 not free.

mod instance;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cvc_core::detection::{find_induced_linear, is_free, minimal_free_s};
use cvc_core::domination::{bacso_tuza, connected_dominating_set, CertificateKind};
use cvc_core::graph::Vertex;
use cvc_core::solver::{solve_cvc, SolveError, SolverConfig};
use cvc_core::testkit::{brute_force_cvc, generate, Family, FigureId, GeneratorSpec};
use cvc_core::vc::min_vertex_cover;

use instance::{parse, parse_rational, serialize, Instance};

const EXIT_INFEASIBLE: u8 = 2;
const EXIT_NOT_FREE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "cvc",
    about = "Exact connected vertex cover solver for (sP1+P5)-free graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve minimum (weighted) connected vertex cover.
    Solve(SolveArgs),
    /// Exact minimum (weighted) vertex cover, no connectivity constraint.
    Vc(VcArgs),
    /// Check (sP1+P5)-freeness and report a witness if not free.
    CheckFree(CheckFreeArgs),
    /// Produce a connected dominating set certificate.
    Dominate(DominateArgs),
    /// Generate an instance file.
    Gen(GenArgs),
    /// Brute-force connected cover oracle (exhaustive, size-guarded).
    Oracle(OracleArgs),
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long)]
    input: PathBuf,
    /// The s of the (sP1+P5)-free class the instance belongs to.
    #[arg(long, conflicts_with = "auto_s")]
    s: Option<usize>,
    /// Derive the smallest s for which the input is (sP1+P5)-free.
    #[arg(long)]
    auto_s: bool,
    /// Answer the decision problem: is the optimum at most k?
    #[arg(long)]
    k: Option<usize>,
    /// Minimise total weight instead of cardinality.
    #[arg(long)]
    weighted: bool,
    /// Fail fast (exit 3) when the input is not (sP1+P5)-free.
    #[arg(long)]
    verify_free: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VcArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    weighted: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CheckFreeArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    s: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct DominateArgs {
    #[arg(long)]
    input: PathBuf,
    /// Class parameter; with 0 on a P5-free input the P3-or-clique
    /// certificate is used directly.
    #[arg(long, default_value_t = 0)]
    s: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Rejection,
    Cograph,
    SplitLike,
    PaperFigures,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FigureArg {
    G1,
    G2,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Which worked figure to emit (paper-figures family only).
    #[arg(long, value_enum)]
    figure: Option<FigureArg>,
    #[arg(long, default_value_t = 10)]
    n: u32,
    #[arg(long, default_value_t = 0)]
    s: usize,
    /// Edge probability as an exact rational, e.g. 2/5.
    #[arg(long, default_value = "1/2")]
    density: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    weighted: bool,
    /// Comma-separated vertices the cover must contain.
    #[arg(long)]
    must_contain: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Serialize)]
struct SolveJson {
    cover: Vec<Vertex>,
    feasible: bool,
    s_used: usize,
    size: usize,
    weight: String,
}

#[derive(Serialize)]
struct VcJson {
    cover: Vec<Vertex>,
    size: usize,
    weight: String,
}

#[derive(Serialize)]
struct WitnessJson {
    p1: Vec<Vertex>,
    path: Vec<Vertex>,
}

#[derive(Serialize)]
struct CheckFreeJson {
    free: bool,
    s: usize,
    witness: Option<WitnessJson>,
}

#[derive(Serialize)]
struct DominateJson {
    kind: String,
    vertices: Vec<Vertex>,
}

#[derive(Serialize)]
struct OracleJson {
    cover: Vec<Vertex>,
    feasible: bool,
    size: usize,
    weight: String,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successes; any other usage
            // problem maps to the parse-error exit code.
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    ExitCode::SUCCESS
                }
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Solve(args) => cmd_solve(args),
        Command::Vc(args) => cmd_vc(args),
        Command::CheckFree(args) => cmd_check_free(args),
        Command::Dominate(args) => cmd_dominate(args),
        Command::Gen(args) => cmd_gen(args),
        Command::Oracle(args) => cmd_oracle(args),
    }
}

fn load(path: &PathBuf) -> Result<Instance> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse(&text)
}

fn join_vertices(vs: impl IntoIterator<Item = Vertex>) -> String {
    vs.into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_solve(args: SolveArgs) -> Result<ExitCode> {
    let inst = load(&args.input)?;
    let s_used = match (args.s, args.auto_s) {
        (Some(s), false) => s,
        (None, true) => minimal_free_s(&inst.graph),
        (None, false) => bail!("either --s or --auto-s is required"),
        (Some(_), true) => unreachable!("clap enforces the conflict"),
    };
    let weights = args.weighted.then(|| inst.weights());
    let cfg = SolverConfig {
        s: s_used,
        weighted: args.weighted,
        verify_freeness: args.verify_free,
    };
    let sol = match solve_cvc(&inst.graph, &cfg, weights.as_ref()) {
        Ok(sol) => sol,
        Err(SolveError::Infeasible) => {
            if args.json {
                let out = SolveJson {
                    cover: Vec::new(),
                    feasible: false,
                    s_used,
                    size: 0,
                    weight: "0".into(),
                };
                println!("{}", serde_json::to_string(&out)?);
            } else {
                println!("infeasible");
            }
            return Ok(ExitCode::from(EXIT_INFEASIBLE));
        }
        Err(SolveError::NotFree { s, .. }) => {
            if args.json {
                println!("{{\"error\":\"not-free\",\"s\":{s}}}");
            } else {
                println!("not free for s = {s}");
            }
            return Ok(ExitCode::from(EXIT_NOT_FREE));
        }
        Err(e) => return Err(anyhow!("{e}")),
    };
    if args.json {
        let out = SolveJson {
            cover: sol.cover.iter().copied().collect(),
            feasible: true,
            s_used,
            size: sol.size,
            weight: sol.weight.to_string(),
        };
        println!("{}", serde_json::to_string(&out)?);
    } else {
        println!("size {}", sol.size);
        if args.weighted {
            println!("weight {}", sol.weight);
        }
        println!("cover {}", join_vertices(sol.cover.iter().copied()));
        if let Some(k) = args.k {
            println!(
                "decision k={k}: {}",
                if sol.size <= k { "yes" } else { "no" }
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_vc(args: VcArgs) -> Result<ExitCode> {
    let inst = load(&args.input)?;
    let weights = args.weighted.then(|| inst.weights());
    let res = min_vertex_cover(&inst.graph, weights.as_ref()).map_err(|e| anyhow!("{e}"))?;
    if args.json {
        let out = VcJson {
            cover: res.cover.iter().copied().collect(),
            size: res.size,
            weight: res.weight.to_string(),
        };
        println!("{}", serde_json::to_string(&out)?);
    } else {
        println!("size {}", res.size);
        if args.weighted {
            println!("weight {}", res.weight);
        }
        println!("cover {}", join_vertices(res.cover.iter().copied()));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_check_free(args: CheckFreeArgs) -> Result<ExitCode> {
    let inst = load(&args.input)?;
    let witness = find_induced_linear(&inst.graph, args.s);
    if args.json {
        let out = CheckFreeJson {
            free: witness.is_none(),
            s: args.s,
            witness: witness.as_ref().map(|hit| WitnessJson {
                p1: hit.p1_vertices().to_vec(),
                path: hit.path_vertices().to_vec(),
            }),
        };
        println!("{}", serde_json::to_string(&out)?);
    } else {
        match &witness {
            None => println!("free"),
            Some(hit) => {
                println!("not free");
                if !hit.p1_vertices().is_empty() {
                    println!(
                        "witness p1 {}",
                        join_vertices(hit.p1_vertices().iter().copied())
                    );
                }
                println!(
                    "witness path {}",
                    join_vertices(hit.path_vertices().iter().copied())
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_dominate(args: DominateArgs) -> Result<ExitCode> {
    let inst = load(&args.input)?;
    let cert = if args.s == 0 && is_free(&inst.graph, 0) {
        bacso_tuza(&inst.graph).map_err(|e| anyhow!("{e}"))?
    } else {
        connected_dominating_set(&inst.graph, args.s).map_err(|e| anyhow!("{e}"))?
    };
    let kind = match cert.kind {
        CertificateKind::P3 => "p3",
        CertificateKind::Clique => "clique",
        CertificateKind::Small => "small",
    };
    if args.json {
        let out = DominateJson {
            kind: kind.into(),
            vertices: cert.vertices.iter().copied().collect(),
        };
        println!("{}", serde_json::to_string(&out)?);
    } else {
        println!("kind {kind}");
        println!("vertices {}", join_vertices(cert.vertices.iter().copied()));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_gen(args: GenArgs) -> Result<ExitCode> {
    let density = parse_density(&args.density)?;
    let family = match args.family {
        FamilyArg::Rejection => Family::Rejection,
        FamilyArg::Cograph => Family::Cograph,
        FamilyArg::SplitLike => Family::SplitLike,
        FamilyArg::PaperFigures => {
            let figure = args.figure.ok_or_else(|| {
                anyhow!("--figure g1|g2 is required with --family paper-figures")
            })?;
            Family::PaperFigures(match figure {
                FigureArg::G1 => FigureId::G1,
                FigureArg::G2 => FigureId::G2,
            })
        }
    };
    let spec = GeneratorSpec {
        n: args.n,
        s: args.s,
        density,
        seed: args.seed,
        family,
    };
    let g = generate(&spec).map_err(|e| anyhow!("{e}"))?;
    let text = serialize(&Instance::unweighted(g));
    match &args.output {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))?
        }
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_density(text: &str) -> Result<(u64, u64)> {
    let r = parse_rational(text)?;
    let num: u64 = r
        .numer()
        .try_into()
        .map_err(|_| anyhow!("density numerator out of range"))?;
    let den: u64 = r
        .denom()
        .try_into()
        .map_err(|_| anyhow!("density denominator out of range"))?;
    if num > den {
        bail!("density must lie in [0, 1]");
    }
    Ok((num, den))
}

fn cmd_oracle(args: OracleArgs) -> Result<ExitCode> {
    let inst = load(&args.input)?;
    let weights = args.weighted.then(|| inst.weights());
    let must: Option<std::collections::BTreeSet<Vertex>> = match &args.must_contain {
        Some(list) => Some(
            list.split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<Vertex>()
                        .context("bad --must-contain list")
                })
                .collect::<Result<_>>()?,
        ),
        None => None,
    };
    let sol =
        brute_force_cvc(&inst.graph, must.as_ref(), weights.as_ref()).map_err(|e| anyhow!("{e}"))?;
    let Some(sol) = sol else {
        if args.json {
            let out = OracleJson {
                cover: Vec::new(),
                feasible: false,
                size: 0,
                weight: "0".into(),
            };
            println!("{}", serde_json::to_string(&out)?);
        } else {
            println!("infeasible");
        }
        return Ok(ExitCode::from(EXIT_INFEASIBLE));
    };
    if args.json {
        let out = OracleJson {
            cover: sol.cover.iter().copied().collect(),
            feasible: true,
            size: sol.size,
            weight: sol.weight.to_string(),
        };
        println!("{}", serde_json::to_string(&out)?);
    } else {
        println!("size {}", sol.size);
        if args.weighted {
            println!("weight {}", sol.weight);
        }
        println!("cover {}", join_vertices(sol.cover.iter().copied()));
    }
    Ok(ExitCode::SUCCESS)
}
