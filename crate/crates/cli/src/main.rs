//! `funbox`: generate graphs, compute parameters, build witnesses and
//! realizations, run verification campaigns.
//!
//! Exit codes: 0 success / all instances pass, 1 some instance failed,
//! 2 usage or input error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use funbox_core::campaign::{verify_campaign_with, CampaignConfig, CampaignName, CampaignReport, ReportFormat};
use funbox_core::constructions::{
    abc_graph, extend_gk_to_abc, g_k, half_graph, hypercube, point_box_incidence, Construction,
};
use funbox_core::geometry::{
    embed_pointbox_r3, realize_abc_intervals, realize_abc_unit_squares, realize_pointbox_plane, BoxSystem,
};
use funbox_core::interval::{find_low_fun_witness, normalize, IntervalRep};
use funbox_core::parameters::{fun_graph_with, fun_vertex, sd_graph_with, sd_pair, Limits};
use funbox_core::random::{random_graph, random_interval_rep, random_permutation};
use funbox_core::{Exec, Graph};

#[derive(Parser)]
#[command(name = "funbox", version, about = "Functionality and symmetric difference of box intersection graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a graph (or an interval model) as JSON.
    Gen(GenArgs),
    /// Compute an exact parameter of a graph.
    Compute(ComputeArgs),
    /// Build a witness.
    Witness {
        #[command(subcommand)]
        kind: WitnessKind,
    },
    /// Build and validate a geometric realization.
    Realize(RealizeArgs),
    /// Run a named verification campaign.
    Verify(VerifyArgs),
    /// Re-render a campaign report.
    Report(ReportArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Half,
    Abc,
    Gk,
    /// `G_k` padded to an ABC graph.
    GkAbc,
    Hni,
    Hypercube,
    /// Seeded random graph (`--p num/den`).
    Random,
    /// Seeded random interval model (`--range`).
    Intervals,
}

#[derive(Args)]
struct GenArgs {
    family: Family,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    i: Option<usize>,
    /// 1-based permutation for `abc`, comma separated.
    #[arg(long, value_delimiter = ',')]
    perm: Option<Vec<usize>>,
    /// Seed for `random`, `intervals`, and a random `abc` permutation.
    #[arg(long)]
    seed: Option<u64>,
    /// Edge probability for `random`, as `num/den`.
    #[arg(long, default_value = "1/2")]
    p: String,
    /// Endpoint range for `intervals`.
    #[arg(long)]
    range: Option<u64>,
    #[arg(short = 'o', long = "output")]
    o: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Quantity {
    FunVertex,
    FunGraph,
    SdPair,
    SdGraph,
}

#[derive(Args)]
struct ComputeArgs {
    what: Quantity,
    #[arg(short = 'i', long = "input")]
    i: PathBuf,
    /// Target vertex for `fun-vertex`; first vertex for `sd-pair`.
    #[arg(long)]
    x: Option<usize>,
    #[arg(long)]
    y: Option<usize>,
    #[arg(long)]
    sequential: bool,
    #[arg(short = 'o', long = "output")]
    o: Option<PathBuf>,
}

#[derive(Subcommand)]
enum WitnessKind {
    /// Low-functionality witness for an interval model.
    Interval {
        #[arg(short = 'i', long = "input")]
        i: PathBuf,
        #[arg(short = 'o', long = "output")]
        o: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Realization {
    AbcUnits,
    AbcIntervals,
    PointboxPlane,
    PointboxR3,
}

#[derive(Args)]
struct RealizeArgs {
    what: Realization,
    /// Labeled ABC graph, or a `pointbox-plane` output for `pointbox-r3`.
    #[arg(short = 'i', long = "input")]
    i: Option<PathBuf>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long = "level")]
    level: Option<usize>,
    #[arg(short = 'o', long = "output")]
    o: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    campaign: String,
    #[arg(long)]
    config: PathBuf,
    /// Overrides the config's output path.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Overrides the config's format (`json` or `md`).
    #[arg(long)]
    format: Option<String>,
    #[arg(long)]
    sequential: bool,
}

#[derive(Args)]
struct ReportArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, default_value = "md")]
    format: String,
    #[arg(short = 'o', long = "output")]
    o: Option<PathBuf>,
}

/// Plane point-box realization on disk.
#[derive(Serialize, Deserialize)]
struct PlaneFile {
    scale_denominator: i64,
    points: Vec<(i64, i64)>,
    boxes: BoxSystem,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    serde_json::from_str(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, format!("{text}\n")).with_context(|| format!("writing {}", p.display())),
        None => match writeln!(std::io::stdout(), "{text}") {
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
            r => Ok(r?),
        },
    }
}

fn emit_json<T: Serialize>(out: Option<&Path>, value: &T) -> Result<()> {
    emit(out, &serde_json::to_string(value)?)
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T> {
    v.with_context(|| format!("missing --{flag}"))
}

fn exec(sequential: bool) -> Exec {
    if sequential { Exec::Sequential } else { Exec::default() }
}

fn parse_ratio(s: &str) -> Result<(u64, u64)> {
    let (a, b) = s.split_once('/').with_context(|| format!("probability {s:?} is not num/den"))?;
    Ok((a.trim().parse()?, b.trim().parse()?))
}

fn gen(a: GenArgs) -> Result<()> {
    let out = a.o.as_deref();
    let c: Construction = match a.family {
        Family::Half => half_graph(need(a.n, "n")?)?,
        Family::Abc => {
            let n = need(a.n, "n")?;
            let perm = match (a.perm, a.seed) {
                (Some(p), _) => p,
                (None, Some(s)) => random_permutation(n, s),
                (None, None) => (1..=n).collect(),
            };
            abc_graph(n, &perm)?
        }
        Family::Gk => g_k(need(a.k, "k")?)?,
        Family::GkAbc => extend_gk_to_abc(&g_k(need(a.k, "k")?)?)?.abc,
        Family::Hni => point_box_incidence(need(a.n, "n")?, need(a.i, "i")?)?,
        Family::Hypercube => hypercube(need(a.n, "n")?)?,
        Family::Random => {
            let (num, den) = parse_ratio(&a.p)?;
            let g = random_graph(need(a.n, "n")?, num, den, a.seed.unwrap_or(0))?;
            return emit(out, &g.to_json());
        }
        Family::Intervals => {
            let n = need(a.n, "n")?;
            let rep = random_interval_rep(n, a.seed.unwrap_or(0), a.range.unwrap_or(4 * n as u64))?;
            return emit_json(out, &rep);
        }
    };
    emit(out, &c.graph.to_json())
}

fn load_graph(path: &Path) -> Result<Graph> {
    Graph::from_json(&read(path)?).with_context(|| format!("parsing graph {}", path.display()))
}

fn compute(a: ComputeArgs) -> Result<()> {
    let g = load_graph(&a.i)?;
    let limits = Limits::from_env()?;
    let ex = exec(a.sequential);
    let value = match a.what {
        Quantity::FunVertex => {
            let r = fun_vertex(&g, need(a.x, "x")?)?;
            serde_json::json!({ "fun": r.k, "witness": r.witness })
        }
        Quantity::FunGraph => serde_json::json!({ "fun": fun_graph_with(&g, limits, ex)? }),
        Quantity::SdPair => serde_json::json!({ "sd": sd_pair(&g, need(a.x, "x")?, need(a.y, "y")?)? }),
        Quantity::SdGraph => serde_json::json!({ "sd": sd_graph_with(&g, limits, ex)? }),
    };
    emit_json(a.o.as_deref(), &value)
}

fn witness(kind: WitnessKind) -> Result<()> {
    let WitnessKind::Interval { i, o } = kind;
    let rep: IntervalRep = read_json(&i)?;
    let w = find_low_fun_witness(&normalize(&rep))?;
    emit_json(o.as_deref(), &w)
}

fn realize(a: RealizeArgs) -> Result<()> {
    let out = a.o.as_deref();
    let abc = || -> Result<Construction> {
        let g = load_graph(&need(a.i.clone(), "i")?)?;
        Ok(Construction::from_graph(g)?)
    };
    match a.what {
        Realization::AbcUnits => {
            let (bs, rep) = realize_abc_unit_squares(&abc()?)?;
            eprintln!("abc-units: {} squares, equal = {}, unit = {}", bs.len(), rep.equal, rep.unit);
            emit(out, &bs.to_json())
        }
        Realization::AbcIntervals => {
            let (iv, rep) = realize_abc_intervals(&abc()?)?;
            eprintln!("abc-intervals: {} intervals, equal = {}", iv.len(), rep.equal);
            emit_json(out, &iv)
        }
        Realization::PointboxPlane => {
            let r = realize_pointbox_plane(need(a.n, "n")?, need(a.level, "level")?)?;
            eprintln!("pointbox-plane: {} points, {} boxes, equal = {}", r.points.len(), r.boxes.len(), r.report.equal);
            emit_json(out, &PlaneFile { scale_denominator: r.scale_denominator, points: r.points, boxes: r.boxes })
        }
        Realization::PointboxR3 => {
            let plane = match (&a.i, a.n, a.level) {
                (Some(p), _, _) => read_json::<PlaneFile>(p)?,
                (None, Some(n), Some(i)) => {
                    let r = realize_pointbox_plane(n, i)?;
                    PlaneFile { scale_denominator: r.scale_denominator, points: r.points, boxes: r.boxes }
                }
                _ => bail!("pointbox-r3 needs -i plane.json or --n and --level"),
            };
            let (bs, rep) = embed_pointbox_r3(&plane.points, &plane.boxes)?;
            eprintln!("pointbox-r3: {} boxes, equal = {}", bs.len(), rep.equal);
            emit(out, &bs.to_json())
        }
    }
}

fn verify(a: VerifyArgs) -> Result<u8> {
    let name: CampaignName = a.campaign.parse()?;
    let mut cfg: CampaignConfig = read_json(&a.config)?;
    if let Some(p) = a.out {
        cfg.output = Some(p);
    }
    if let Some(f) = &a.format {
        cfg.format = f.parse()?;
    }
    let report = verify_campaign_with(name, &cfg, exec(a.sequential))?;
    let s = report.summary;
    eprintln!(
        "{}: {} instances, {} passed, {} failed ({} ms)",
        report.campaign, s.instances, s.passed, s.failed, report.elapsed_ms
    );
    emit(cfg.output.as_deref(), &report.render(cfg.format))?;
    Ok(if report.all_passed() { 0 } else { 1 })
}

fn report(a: ReportArgs) -> Result<u8> {
    let r: CampaignReport = read_json(&a.input)?;
    let format: ReportFormat = a.format.parse()?;
    emit(a.o.as_deref(), &r.render(format))?;
    Ok(if r.all_passed() { 0 } else { 1 })
}

fn run(cli: Cli) -> Result<u8> {
    match cli.cmd {
        Cmd::Gen(a) => gen(a).map(|_| 0),
        Cmd::Compute(a) => compute(a).map(|_| 0),
        Cmd::Witness { kind } => witness(kind).map(|_| 0),
        Cmd::Realize(a) => realize(a).map(|_| 0),
        Cmd::Verify(a) => verify(a),
        Cmd::Report(a) => report(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
