//! Named verification campaigns: seeded instance generation, checking, and
//! reports as JSON or markdown.
//!
//! Instances run through [`Exec`]; records are collected in instance order,
//! so a report depends only on the campaign, the config and the seed (up to
//! the timing fields).

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::constructions::{extend_gk_to_abc, g_k, hypercube, point_box_incidence, abc_graph, Part};
use crate::error::{Error, Result};
use crate::geometry::{embed_pointbox_r3, realize_abc_intervals, realize_abc_unit_squares, realize_pointbox_plane};
use crate::graph::{Graph, VertexSet};
use crate::interval::{check_sd_lemma, find_low_fun_witness, normalize};
use crate::par::Exec;
use crate::parameters::structure_scan;
use crate::parameters::{
    fun_graph, fun_vertex, is_function_of, refutation_premises, refute_function, sd_pair, Limits, MASK_MAX_N,
};
use crate::random::{
    instance_seed, random_graph, random_index, random_interval_rep, random_permutation, random_subset_avoiding,
    random_threshold_graph, stream,
};

pub const TOOLKIT_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CampaignName {
    LemmaSd,
    ThmFun8,
    GkSd,
    Hni,
    Refute,
    AbcRealize,
    FunSdBound,
    ThresholdFun0,
}

impl CampaignName {
    pub const ALL: [CampaignName; 8] = [
        CampaignName::LemmaSd,
        CampaignName::ThmFun8,
        CampaignName::GkSd,
        CampaignName::Hni,
        CampaignName::Refute,
        CampaignName::AbcRealize,
        CampaignName::FunSdBound,
        CampaignName::ThresholdFun0,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CampaignName::LemmaSd => "lemma-sd",
            CampaignName::ThmFun8 => "thm-fun8",
            CampaignName::GkSd => "gk-sd",
            CampaignName::Hni => "hni",
            CampaignName::Refute => "refute",
            CampaignName::AbcRealize => "abc-realize",
            CampaignName::FunSdBound => "fun-sd-bound",
            CampaignName::ThresholdFun0 => "threshold-fun0",
        }
    }

    /// One-line statement of what the campaign checks.
    pub fn claim(self) -> &'static str {
        match self {
            CampaignName::LemmaSd => "sd(u,v) <= manhattan(u,v) - 2 in normalized interval models",
            CampaignName::ThmFun8 => "interval graphs have a validated witness with at most 8 arguments",
            CampaignName::GkSd => "min pairwise sd in G_k is at least k; distinguisher counts match coordinates",
            CampaignName::Hni => "H^n_i counts, degrees, freeness, plane and R^3 realizations",
            CampaignName::Refute => "refutation pairs exist on triangle-free K_{2,p}-free hosts",
            CampaignName::AbcRealize => "ABC graphs realized by unit squares and intervals",
            CampaignName::FunSdBound => "fun(x) <= min(deg, n-1-deg, sd(x,y)+1)",
            CampaignName::ThresholdFun0 => "fun(G) = 0 iff G is threshold",
        }
    }
}

impl fmt::Display for CampaignName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CampaignName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL.into_iter().find(|c| c.as_str() == s).ok_or_else(|| {
            let names: Vec<&str> = Self::ALL.iter().map(|c| c.as_str()).collect();
            Error::InvalidParameter(format!("unknown campaign {s:?}; expected one of {}", names.join(", ")))
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportFormat {
    #[default]
    Json,
    #[serde(alias = "md")]
    Markdown,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "md" | "markdown" => Ok(ReportFormat::Markdown),
            _ => Err(Error::InvalidParameter(format!("unknown report format {s:?}; expected json or md"))),
        }
    }
}

fn one() -> usize {
    1
}

/// Campaign parameters. `sizes` means `n` for the random campaigns, `k` for
/// `gk-sd`, and `n` of `H^n_i` / `Q_n` for `hni` and `refute`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CampaignConfig {
    pub seed: u64,
    pub sizes: Vec<usize>,
    #[serde(default = "one")]
    pub trials: usize,
    #[serde(default)]
    pub limits: Limits,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
    #[serde(default)]
    pub format: ReportFormat,
}

impl CampaignConfig {
    pub fn new(seed: u64, sizes: Vec<usize>, trials: usize) -> Self {
        Self { seed, sizes, trials, limits: Limits::default(), output: None, format: ReportFormat::Json }
    }

    fn validate(&self, name: CampaignName) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::InvalidParameter("trials must be at least 1".into()));
        }
        if self.sizes.is_empty() {
            return Err(Error::InvalidParameter("sizes is empty".into()));
        }
        for (what, v) in [("fun_max_n", self.limits.fun_max_n), ("sd_max_n", self.limits.sd_max_n)] {
            if v > MASK_MAX_N {
                return Err(Error::InvalidParameter(format!("{what} = {v} exceeds {MASK_MAX_N}")));
            }
        }
        let (lo, hi, what) = match name {
            CampaignName::LemmaSd | CampaignName::ThmFun8 => (1, 10_000, "n"),
            CampaignName::GkSd => (2, 8, "k"),
            CampaignName::Hni => (1, 5, "n"),
            CampaignName::Refute => (2, 5, "n"),
            CampaignName::AbcRealize => (1, 2_000, "n"),
            CampaignName::FunSdBound => (1, MASK_MAX_N, "n"),
            CampaignName::ThresholdFun0 => (1, self.limits.fun_max_n, "n"),
        };
        if let Some(&s) = self.sizes.iter().find(|&&s| s < lo || s > hi) {
            return Err(Error::InvalidParameter(format!("{name}: {what} = {s} is outside {lo}..={hi}")));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceRecord {
    pub index: usize,
    pub input: Value,
    pub output: Value,
    pub pass: bool,
    pub elapsed_us: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub instances: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub campaign: CampaignName,
    pub claim: String,
    pub version: String,
    pub config: CampaignConfig,
    pub summary: Summary,
    pub records: Vec<InstanceRecord>,
    pub elapsed_ms: u64,
}

impl CampaignReport {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn render(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Json => self.to_json(),
            ReportFormat::Markdown => render_markdown(self),
        }
    }
}

/// Markdown rendering: header, summary, failures, then every record.
pub fn render_markdown(r: &CampaignReport) -> String {
    let mut s = String::new();
    let status = if r.all_passed() { "PASS" } else { "FAIL" };
    s.push_str(&format!("# Campaign `{}`: {status}\n\n", r.campaign));
    s.push_str(&format!("Claim: {}\n\n", r.claim));
    s.push_str(&format!(
        "- toolkit version: {}\n- seed: {}\n- sizes: {:?}\n- trials: {}\n- limits: fun_max_n = {}, sd_max_n = {}\n- elapsed: {} ms\n\n",
        r.version, r.config.seed, r.config.sizes, r.config.trials, r.config.limits.fun_max_n, r.config.limits.sd_max_n, r.elapsed_ms
    ));
    s.push_str("| instances | passed | failed |\n|---:|---:|---:|\n");
    s.push_str(&format!("| {} | {} | {} |\n\n", r.summary.instances, r.summary.passed, r.summary.failed));
    let failures: Vec<&InstanceRecord> = r.records.iter().filter(|x| !x.pass).collect();
    if !failures.is_empty() {
        s.push_str("## Failures\n\n");
        for f in &failures {
            s.push_str(&format!("- #{}: input `{}`, output `{}`\n", f.index, f.input, f.output));
        }
        s.push('\n');
    }
    s.push_str("## Instances\n\n| # | pass | input | output | us |\n|---:|:---:|---|---|---:|\n");
    for x in &r.records {
        let mark = if x.pass { "yes" } else { "**no**" };
        s.push_str(&format!("| {} | {mark} | `{}` | `{}` | {} |\n", x.index, x.input, x.output, x.elapsed_us));
    }
    s
}

/// Runs a campaign with the default execution mode.
pub fn verify_campaign(name: CampaignName, cfg: &CampaignConfig) -> Result<CampaignReport> {
    verify_campaign_with(name, cfg, Exec::default())
}

/// Runs a campaign. `Err` means the config is unusable; instance failures
/// are reported inside the report.
pub fn verify_campaign_with(name: CampaignName, cfg: &CampaignConfig, exec: Exec) -> Result<CampaignReport> {
    cfg.validate(name)?;
    let start = Instant::now();
    let jobs = plan(name, cfg)?;
    let records = exec.map_indexed(jobs.len(), |index| {
        let t = Instant::now();
        let (pass, output) = match run(&jobs[index], cfg) {
            Ok(out) => out,
            Err(e) => (false, json!({ "error": e.to_string() })),
        };
        InstanceRecord { index, input: jobs[index].input(), output, pass, elapsed_us: t.elapsed().as_micros() as u64 }
    });
    let passed = records.iter().filter(|r| r.pass).count();
    Ok(CampaignReport {
        campaign: name,
        claim: name.claim().to_string(),
        version: TOOLKIT_VERSION.to_string(),
        config: cfg.clone(),
        summary: Summary { instances: records.len(), passed, failed: records.len() - passed },
        records,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum PermKind {
    Identity,
    Reversal,
    Random,
}

/// Refutation host: `H^n_n` with `p = 2` or `Q_n` with `p = 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Host {
    PointBox,
    Cube,
}

#[derive(Clone, Debug)]
enum Job {
    Random { name: CampaignName, n: usize, seed: u64 },
    Gk { k: usize },
    Hni { n: usize, i: usize },
    Refute { host: Host, n: usize, k: usize, p: usize, seed: u64 },
    Abc { n: usize, kind: PermKind, seed: u64 },
}

impl Job {
    fn input(&self) -> Value {
        match *self {
            Job::Random { n, seed, .. } => json!({ "n": n, "seed": seed }),
            Job::Gk { k } => json!({ "k": k }),
            Job::Hni { n, i } => json!({ "n": n, "i": i }),
            Job::Refute { host, n, k, p, seed } => {
                let name = match host {
                    Host::PointBox => format!("H^{n}_{n}"),
                    Host::Cube => format!("Q_{n}"),
                };
                json!({ "host": name, "k": k, "p": p, "seed": seed })
            }
            Job::Abc { n, kind, seed } => {
                let kind = match kind {
                    PermKind::Identity => "identity",
                    PermKind::Reversal => "reversal",
                    PermKind::Random => "random",
                };
                json!({ "n": n, "perm": kind, "seed": seed })
            }
        }
    }
}

fn host_graph(host: Host, n: usize) -> Result<Graph> {
    Ok(match host {
        Host::PointBox => point_box_incidence(n, n)?.graph,
        Host::Cube => hypercube(n)?.graph,
    })
}

/// Largest `k >= 1` for which every premise holds, if any.
fn max_premise_k(g: &Graph, p: usize) -> Option<usize> {
    (1..g.n()).take_while(|&k| refutation_premises(g, k, p).is_empty()).last()
}

fn plan(name: CampaignName, cfg: &CampaignConfig) -> Result<Vec<Job>> {
    let size = |t: usize| cfg.sizes[t % cfg.sizes.len()];
    let seed = |t: usize| instance_seed(cfg.seed, t as u64);
    Ok(match name {
        CampaignName::GkSd => cfg.sizes.iter().map(|&k| Job::Gk { k }).collect(),
        CampaignName::Hni => {
            cfg.sizes.iter().flat_map(|&n| (1..=n).map(move |i| Job::Hni { n, i })).collect()
        }
        CampaignName::Refute => {
            let mut jobs = Vec::new();
            for &n in &cfg.sizes {
                for (host, p) in [(Host::PointBox, 2), (Host::Cube, 3)] {
                    let g = host_graph(host, n)?;
                    let k = max_premise_k(&g, p).ok_or_else(|| {
                        Error::InvalidParameter(format!(
                            "refute: no k satisfies the premises on {host:?} n = {n} with p = {p}: {}",
                            refutation_premises(&g, 1, p).join("; ")
                        ))
                    })?;
                    jobs.push(Job::Refute { host, n, k, p, seed: seed(jobs.len()) });
                }
            }
            jobs
        }
        CampaignName::AbcRealize => (0..cfg.trials)
            .map(|t| {
                let kind = match t {
                    0 => PermKind::Identity,
                    1 => PermKind::Reversal,
                    _ => PermKind::Random,
                };
                Job::Abc { n: size(t), kind, seed: seed(t) }
            })
            .collect(),
        _ => (0..cfg.trials).map(|t| Job::Random { name, n: size(t), seed: seed(t) }).collect(),
    })
}

type Outcome = Result<(bool, Value)>;

fn run(job: &Job, cfg: &CampaignConfig) -> Outcome {
    match *job {
        Job::Random { name: CampaignName::LemmaSd, n, seed } => run_lemma_sd(n, seed),
        Job::Random { name: CampaignName::ThmFun8, n, seed } => run_thm_fun8(n, seed, cfg.limits),
        Job::Random { name: CampaignName::FunSdBound, n, seed } => run_fun_sd_bound(n, seed),
        Job::Random { name: CampaignName::ThresholdFun0, n, seed } => run_threshold(n, seed, cfg.limits),
        Job::Random { name, .. } => Err(Error::Internal(format!("{name} has no random instances"))),
        Job::Gk { k } => run_gk(k),
        Job::Hni { n, i } => run_hni(n, i),
        Job::Refute { host, n, k, p, seed } => run_refute(host, n, k, p, seed, cfg.trials),
        Job::Abc { n, kind, seed } => run_abc(n, kind, seed),
    }
}

/// Coordinates range over `0..4n`, so shared endpoints are common.
fn interval_range(n: usize) -> u64 {
    (4 * n as u64).max(2)
}

fn run_lemma_sd(n: usize, seed: u64) -> Outcome {
    let rep = normalize(&random_interval_rep(n, seed, interval_range(n))?);
    let r = check_sd_lemma(&rep);
    Ok((r.violation.is_none(), serde_json::to_value(r).expect("serializable")))
}

fn run_thm_fun8(n: usize, seed: u64, limits: Limits) -> Outcome {
    let rep = normalize(&random_interval_rep(n, seed, interval_range(n))?);
    let g = crate::interval::graph_from_points(&rep);
    let w = find_low_fun_witness(&rep)?;
    let valid = w.validate(&g).is_ok();
    let bound = if n <= 8 { 7 } else { 8 };
    let exact = if n <= limits.fun_max_n { Some(fun_graph(&g, limits)?) } else { None };
    let pass = valid && w.arity() <= bound && exact.is_none_or(|f| f <= 8);
    Ok((pass, json!({ "target": w.target, "arity": w.arity(), "origin": w.origin, "valid": valid, "fun_graph": exact })))
}

fn run_fun_sd_bound(n: usize, seed: u64) -> Outcome {
    // densities 1/4, 1/2, 3/4 in turn
    let num = 1 + seed % 3;
    let g = random_graph(n, num, 4, seed)?;
    let mut max_fun = 0;
    for x in 0..n {
        let k = fun_vertex(&g, x)?.k;
        max_fun = max_fun.max(k);
        let deg = g.degree(x);
        if k > deg || k > n - 1 - deg {
            return Ok((false, json!({ "vertex": x, "fun": k, "degree": deg, "violation": "degree bound" })));
        }
        for y in (0..n).filter(|&y| y != x) {
            let sd = sd_pair(&g, x, y)?;
            if k > sd + 1 {
                return Ok((false, json!({ "vertex": x, "fun": k, "other": y, "sd": sd, "violation": "sd bound" })));
            }
        }
    }
    Ok((true, json!({ "edges": g.edge_count(), "max_fun": max_fun })))
}

fn run_threshold(n: usize, seed: u64, limits: Limits) -> Outcome {
    // even seeds plant a threshold graph, odd seeds draw at density 1/2
    let g = if seed % 2 == 0 { random_threshold_graph(n, seed)? } else { random_graph(n, 1, 2, seed)? };
    let threshold = structure_scan(&g, 2)?.threshold;
    let f = fun_graph(&g, limits)?;
    Ok(((f == 0) == threshold, json!({ "edges": g.edge_count(), "threshold": threshold, "fun_graph": f })))
}

fn run_gk(k: usize) -> Outcome {
    let gk = g_k(k)?;
    let g = &gk.graph;
    let n = g.n();
    let mut min_sd = (usize::MAX, 0, 0);
    for u in 0..n {
        for v in u + 1..n {
            let sd = sd_pair(g, u, v)?;
            if sd < min_sd.0 {
                min_sd = (sd, u, v);
            }
        }
    }
    let a = gk.labels.part_set(Part::A).to_vec();
    let c = gk.labels.part_set(Part::C).to_vec();
    let b = gk.labels.part_set(Part::B).to_vec();
    let coords = |v: usize| gk.labels.vertices[v].coords.expect("B vertices carry coordinates");
    let split = |side: &[usize], u: usize, v: usize| side.iter().filter(|&&z| g.has_edge(z, u) != g.has_edge(z, v)).count();
    let mut mismatch = None;
    'pairs: for (i, &u) in b.iter().enumerate() {
        for &v in &b[i + 1..] {
            let (cu, cv) = (coords(u), coords(v));
            if split(&a, u, v) != cu.0.abs_diff(cv.0) || split(&c, u, v) != cu.1.abs_diff(cv.1) {
                mismatch = Some((u, v));
                break 'pairs;
            }
        }
    }
    let ext = extend_gk_to_abc(&gk)?;
    let (pa, pb, pc) = ext.abc.abc_parts();
    let abc_ok = crate::parameters::check_abc_partition(&ext.abc.graph, &pa, &pb, &pc).is_ok();
    let back = VertexSet::from_ids(ext.abc.graph.n(), ext.embedding.iter().copied())?;
    let reinduced = ext.abc.graph.induced_subgraph(&back)?.graph.equal_labeled(g);
    let pass = min_sd.0 >= k && mismatch.is_none() && abc_ok && reinduced;
    Ok((
        pass,
        json!({
            "vertices": n,
            "min_sd": min_sd.0,
            "min_pair": [min_sd.1, min_sd.2],
            "coordinate_mismatch": mismatch,
            "abc_extension_vertices": ext.abc.graph.n(),
            "abc_extension_valid": abc_ok,
            "reinduces_gk": reinduced,
        }),
    ))
}

fn run_hni(n: usize, i: usize) -> Outcome {
    let h = point_box_incidence(n, i)?;
    let g = &h.graph;
    let points = h.labels.part_set(Part::P).to_vec();
    let boxes = h.labels.part_set(Part::Box).to_vec();
    let counts_ok = points.len() == n.pow(i as u32) && boxes.len() == i * n.pow(i as u32 - 1);
    let degrees_ok = points.iter().all(|&v| g.degree(v) == i) && boxes.iter().all(|&v| g.degree(v) == n);
    let k22_free = crate::parameters::structure::max_common_neighbors(g) < 2;
    let triangle_free = crate::parameters::structure::is_triangle_free(g);
    let plane = realize_pointbox_plane(n, i)?;
    let (_, r3) = embed_pointbox_r3(&plane.points, &plane.boxes)?;
    let plane_ok = plane.report.equal && plane.report.realized_graph.equal_labeled(g);
    let r3_ok = r3.equal && r3.realized_graph.equal_labeled(g);
    let pass = counts_ok && degrees_ok && k22_free && triangle_free && plane_ok && r3_ok;
    Ok((
        pass,
        json!({
            "points": points.len(),
            "boxes": boxes.len(),
            "counts_ok": counts_ok,
            "degrees_ok": degrees_ok,
            "k22_free": k22_free,
            "triangle_free": triangle_free,
            "plane_realization": plane_ok,
            "r3_realization": r3_ok,
        }),
    ))
}

fn run_refute(host: Host, n: usize, k: usize, p: usize, seed: u64, draws: usize) -> Outcome {
    let g = host_graph(host, n)?;
    let mut rng = stream(seed);
    for draw in 0..draws {
        let x = random_index(&mut rng, g.n());
        let s_ids = random_subset_avoiding(&mut rng, g.n(), k, x)?;
        let s = VertexSet::from_ids(g.n(), s_ids.iter().copied())?;
        let pair = refute_function(&g, x, &s, k, p)?;
        let clean = |v: usize| !s.contains(v) && s_ids.iter().all(|&m| !g.has_edge(m, v));
        let pair_ok = g.has_edge(x, pair.u) && !g.has_edge(x, pair.w) && pair.w != x && clean(pair.u) && clean(pair.w);
        let refuted = !is_function_of(&g, x, &s)?.is_function;
        if !(pair_ok && refuted) {
            return Ok((
                false,
                json!({ "draw": draw, "x": x, "s": s_ids, "u": pair.u, "w": pair.w, "pair_ok": pair_ok, "refuted": refuted }),
            ));
        }
    }
    Ok((true, json!({ "vertices": g.n(), "draws": draws, "refuted": draws })))
}

fn run_abc(n: usize, kind: PermKind, seed: u64) -> Outcome {
    let perm: Vec<usize> = match kind {
        PermKind::Identity => (1..=n).collect(),
        PermKind::Reversal => (1..=n).rev().collect(),
        PermKind::Random => random_permutation(n, seed),
    };
    let abc = abc_graph(n, &perm)?;
    let (squares, sq) = realize_abc_unit_squares(&abc)?;
    let (iv, ir) = realize_abc_intervals(&abc)?;
    let rep = normalize(&iv);
    let g = crate::interval::graph_from_points(&rep);
    let w = find_low_fun_witness(&rep)?;
    let valid = w.validate(&g).is_ok() && g.equal_labeled(&abc.graph);
    let pass = sq.equal && sq.unit && squares.is_unit() && ir.equal && valid && w.arity() <= 8;
    Ok((
        pass,
        json!({
            "squares_equal": sq.equal,
            "unit": sq.unit,
            "intervals_equal": ir.equal,
            "witness_arity": w.arity(),
            "witness_origin": w.origin,
            "witness_valid": valid,
        }),
    ))
}
