//! `spanloc`: generate point sets, build local spanners, verify them, and
//! export benchmarks and SVG scenes.

pub mod manifest;
pub mod svg;

use clap::{Args, Parser, Subcommand, ValueEnum};
use geom_core::io::{points_from_json, points_to_json, shape_from_json, shape_to_json};
use geom_core::{ConvexShape, PointSet, Vec2};
use manifest::{embed, read_embedded, sidecar, RunManifest};
use serde_json::{json, Value};
use spanners::SpannerConfig;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;
use thiserror::Error;
use verify::{
    check_fault_tolerance, check_local_spanner, check_weak_regions, dilation, gen_lower_bound_disk,
    gen_lower_bound_triangle, gen_random, random_faults, with_far_cluster, write_bench_csv, BenchRow, DilationReport,
    Distribution, RegionKind, RegionRecord, DILATION_SLACK,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("verification failed: {0}")]
    Failed(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Spanner(#[from] spanners::SpannerError),
    #[error(transparent)]
    Verify(#[from] verify::VerifyError),
    #[error(transparent)]
    Geom(#[from] geom_core::GeomError),
    #[error(transparent)]
    Graph(#[from] cdelaunay::CdError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Failed(_) => 1,
            _ => 2,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

#[derive(Parser, Debug)]
#[command(name = "spanloc", version, about = "Local geometric spanners: build, verify, benchmark")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate a point set (random or a lower-bound family).
    Gen(GenArgs),
    /// Build a spanner on a point set.
    Build(BuildArgs),
    /// Sample regions and check the dilation of a built spanner.
    Verify(VerifyArgs),
    /// Edge count, degree histogram and spread.
    Stats(StatsArgs),
    /// Sweep n, spread and ε; emit CSV.
    Bench(BenchArgs),
    /// Render points, edges and an optional region as SVG.
    ExportSvg(SvgArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Uniform,
    Clustered,
    GridPerturbed,
    LowerDisk,
    LowerTriangle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    Homothet,
    Disk,
    FatTriangle,
    NicePolygon,
    WeakConvex,
    WeakRect,
    Theta,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(long, value_enum, default_value = "uniform")]
    pub kind: Kind,
    #[arg(long, default_value_t = 100)]
    pub n: usize,
    /// Spread parameter of the lower-bound families.
    #[arg(long, default_value_t = 256.0)]
    pub phi: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long = "out", default_value = "points.json")]
    pub out: PathBuf,
}

/// Construction parameters shared by `build`, `verify` and `bench`.
#[derive(Args, Debug, Clone)]
pub struct SpannerArgs {
    #[arg(long, value_enum)]
    pub variant: Option<Variant>,
    /// `square`, `hexagon`, `equilateral`, `regular-K`, or a shape JSON file.
    #[arg(long)]
    pub shape: Option<String>,
    #[arg(long)]
    pub eps: Option<f64>,
    #[arg(long)]
    pub delta: Option<f64>,
    #[arg(long)]
    pub gamma: Option<f64>,
    #[arg(long)]
    pub tau: Option<usize>,
}

#[derive(Args, Debug)]
pub struct BuildArgs {
    #[command(flatten)]
    pub spanner: SpannerArgs,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Defaults to the last `gen` output in this directory, else `points.json`.
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
    #[arg(long = "out", default_value = "graph.json")]
    pub out: PathBuf,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Overrides for the parameters recorded by `build`.
    #[command(flatten)]
    pub spanner: SpannerArgs,
    #[arg(long, default_value_t = 500)]
    pub trials: usize,
    /// Random convex faults to check in addition (homothet variant).
    #[arg(long, default_value_t = 0)]
    pub faults: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Defaults to the last `gen` output in this directory, else `points.json`.
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
    /// Defaults to the last `build` output in this directory, else `graph.json`.
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// Report JSON.
    #[arg(long = "out")]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct StatsArgs {
    /// Defaults to the last `gen` output in this directory, else `points.json`.
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
    /// Defaults to the last `build` output in this directory, else `graph.json`.
    #[arg(long)]
    pub graph: Option<PathBuf>,
    #[arg(long = "out")]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[command(flatten)]
    pub spanner: SpannerArgs,
    /// Comma-separated point counts.
    #[arg(long, value_delimiter = ',', default_value = "50,100")]
    pub n: Vec<usize>,
    /// Comma-separated ε values (overrides `--eps`).
    #[arg(long = "eps-list", value_delimiter = ',')]
    pub eps_list: Vec<f64>,
    /// Comma-separated spread multipliers; values above 1 append a far cluster.
    #[arg(long, value_delimiter = ',', default_value = "1")]
    pub phi: Vec<f64>,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// CSV file; stdout when absent.
    #[arg(long = "out")]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SvgArgs {
    /// Defaults to the last `gen` output in this directory, else `points.json`.
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// Region JSON: `{"type": "rect" | "polygon" | "homothet", ...}`.
    #[arg(long)]
    pub region: Option<PathBuf>,
    /// Shape of a homothet region.
    #[arg(long)]
    pub shape: Option<String>,
    #[arg(long = "out", default_value = "scene.svg")]
    pub out: PathBuf,
}

/// Parses `argv` (program name first), runs the command and returns the exit code.
pub fn run<S: AsRef<str>>(argv: &[S]) -> i32 {
    let cli = match Cli::try_parse_from(argv.iter().map(|s| s.as_ref())) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    configure_threads();
    match dispatch(cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("spanloc: {e}");
            e.exit_code()
        }
    }
}

fn configure_threads() {
    if let Some(k) = std::env::var("SPANLOC_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        if k > 0 {
            // Fails only if the pool is already set, in which case it stays.
            let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
        }
    }
}

pub fn dispatch(cmd: Command) -> Result<()> {
    match cmd {
        Command::Gen(a) => gen(a),
        Command::Build(a) => build(a),
        Command::Verify(a) => verify_cmd(a),
        Command::Stats(a) => stats(a),
        Command::Bench(a) => bench(a),
        Command::ExportSvg(a) => export_svg(a),
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })
}

fn write(path: &Path, s: &str) -> Result<()> {
    std::fs::write(path, s).map_err(|source| CliError::Io { path: path.into(), source })
}

/// Records the most recent outputs so later commands can omit `--in` and `--graph`.
pub const STATE_FILE: &str = ".spanloc-last.json";

fn last_output(key: &str) -> Option<PathBuf> {
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(STATE_FILE).ok()?).ok()?;
    doc.get(key)?.as_str().map(PathBuf::from)
}

fn remember(key: &str, path: &Path) -> Result<()> {
    let mut doc: Value = std::fs::read_to_string(STATE_FILE)
        .ok()
        .and_then(|s| serde_json::from_str(&s).ok())
        .filter(Value::is_object)
        .unwrap_or_else(|| json!({}));
    let abs = std::path::absolute(path).unwrap_or_else(|_| path.to_path_buf());
    doc[key] = json!(path_str(&abs));
    write(Path::new(STATE_FILE), &doc.to_string())
}

fn points_path(flag: &Option<PathBuf>) -> PathBuf {
    flag.clone().or_else(|| last_output("points")).unwrap_or_else(|| "points.json".into())
}

fn graph_path(flag: &Option<PathBuf>) -> PathBuf {
    flag.clone().or_else(|| last_output("graph")).unwrap_or_else(|| "graph.json".into())
}

fn path_str(p: &Path) -> String {
    p.display().to_string()
}

/// Builtin name or shape JSON file.
pub fn parse_shape(s: &str) -> Result<ConvexShape> {
    Ok(match s {
        "square" => ConvexShape::square(),
        "hexagon" => ConvexShape::hexagon(),
        "equilateral" | "triangle" => ConvexShape::equilateral(),
        _ => match s.strip_prefix("regular-") {
            Some(k) => {
                let k: usize = k.parse().map_err(|_| CliError::Usage(format!("bad shape `{s}`")))?;
                if k < 3 {
                    return Err(CliError::Usage(format!("regular polygon with {k} sides")));
                }
                ConvexShape::regular(k, 0.0)?
            }
            None if Path::new(s).exists() => shape_from_json(&read(Path::new(s))?)?,
            None => return Err(CliError::Usage(format!("unknown shape `{s}`"))),
        },
    })
}

fn gen(a: GenArgs) -> Result<()> {
    let t0 = Instant::now();
    let mut m = RunManifest::new("gen", json!({"kind": format!("{:?}", a.kind), "n": a.n, "phi": a.phi}), a.seed);
    let dist = |d| gen_random(a.n, d, a.seed);
    let (p, extra): (PointSet, Value) = match a.kind {
        Kind::Uniform => (dist(Distribution::Uniform)?, Value::Null),
        Kind::Clustered => (dist(Distribution::Clustered)?, Value::Null),
        Kind::GridPerturbed => (dist(Distribution::GridPerturbed)?, Value::Null),
        Kind::LowerDisk => {
            let lb = gen_lower_bound_disk(a.n, a.phi)?;
            (lb.points, json!({"forced_edges": lb.forced_edges}))
        }
        Kind::LowerTriangle => {
            let lb = gen_lower_bound_triangle(a.n, a.phi)?;
            let shape: Value = serde_json::from_str(&shape_to_json(&lb.triangle)).expect("shape JSON");
            (lb.points, json!({"forced_edges": lb.forced_edges, "shape": shape["shape"]}))
        }
    };
    m.outputs.push(path_str(&a.out));
    m.seconds = t0.elapsed().as_secs_f64();
    let mut doc: Value = serde_json::from_str(&embed(&points_to_json(&p), &m)).expect("points JSON");
    if let Value::Object(extra) = extra {
        doc.as_object_mut().expect("object").extend(extra);
    }
    write(&a.out, &serde_json::to_string(&doc).expect("serializes"))?;
    remember("points", &a.out)?;
    println!("wrote {} points to {}", p.len(), a.out.display());
    Ok(())
}

/// Fully resolved construction parameters.
#[derive(Clone, Debug, serde::Serialize)]
pub struct Resolved {
    pub variant: Variant,
    pub shape: Option<String>,
    pub eps: f64,
    pub delta: f64,
    pub gamma: f64,
    pub tau: Option<usize>,
}

impl Resolved {
    /// Flags first, then the recorded build config, then defaults.
    fn from(args: &SpannerArgs, recorded: Option<&Value>) -> Result<Self> {
        let rec = |k: &str| recorded.and_then(|v| v.get(k)).filter(|v| !v.is_null());
        let variant = match args.variant {
            Some(v) => v,
            None => match rec("variant") {
                Some(v) => serde_json::from_value(v.clone()).map_err(|e| CliError::Usage(e.to_string()))?,
                None => Variant::Homothet,
            },
        };
        let default_shape = match variant {
            Variant::FatTriangle => Some("equilateral".to_string()),
            Variant::Homothet | Variant::NicePolygon => Some("square".to_string()),
            _ => None,
        };
        let shape = args.shape.clone().or_else(|| rec("shape").and_then(|v| v.as_str().map(String::from))).or(default_shape);
        let num = |flag: Option<f64>, k: &str, d: f64| flag.or_else(|| rec(k).and_then(Value::as_f64)).unwrap_or(d);
        let cfg = SpannerConfig::default();
        Ok(Self {
            variant,
            shape,
            eps: num(args.eps, "eps", cfg.epsilon),
            delta: num(args.delta, "delta", cfg.delta),
            gamma: num(args.gamma, "gamma", cfg.gamma),
            tau: args.tau.or_else(|| rec("tau").and_then(Value::as_u64).map(|t| t as usize)),
        })
    }

    fn shape(&self) -> Result<ConvexShape> {
        parse_shape(self.shape.as_deref().unwrap_or("square"))
    }

    fn config(&self) -> SpannerConfig {
        SpannerConfig { epsilon: self.eps, delta: self.delta, gamma: self.gamma, tau: self.tau, ..SpannerConfig::default() }
    }
}

/// Builds the selected construction.
pub fn build_graph(p: &PointSet, r: &Resolved) -> Result<cdelaunay::SpannerGraph> {
    if !(r.eps > 0.0 && r.eps < 1.0) {
        return Err(CliError::Usage(format!("--eps {} outside (0, 1)", r.eps)));
    }
    Ok(match r.variant {
        Variant::Homothet => spanners::build_homothet_spanner(p, &Arc::new(r.shape()?), r.eps)?,
        Variant::Disk => spanners::build_disk_spanner(p, r.eps)?,
        Variant::FatTriangle => {
            let c = r.shape()?;
            if c.len() != 3 {
                return Err(CliError::Usage("fat-triangle needs a triangle shape".into()));
            }
            spanners::build_fat_triangle_spanner_with(p, c.vertices(), r.eps, r.gamma)?
        }
        Variant::NicePolygon => {
            let c = r.shape()?;
            spanners::build_nice_polygon_spanner_with(p, &c, c.len(), &r.config())?
        }
        Variant::WeakConvex => spanners::build_weak_convex_spanner(p, r.eps, r.delta)?,
        Variant::WeakRect => {
            let tau = r.tau.unwrap_or_else(|| spanners::min_tau(r.eps, r.delta));
            spanners::build_rectangle_weak_spanner_with(p, r.eps, r.delta, tau)?
        }
        Variant::Theta => spanners::build_theta_spanner(p, r.eps)?,
    })
}

fn load_points(path: &Path) -> Result<PointSet> {
    Ok(points_from_json(&read(path)?)?)
}

fn build(a: BuildArgs) -> Result<()> {
    let input = points_path(&a.input);
    let p = load_points(&input)?;
    let r = Resolved::from(&a.spanner, None)?;
    let t0 = Instant::now();
    let g = build_graph(&p, &r)?;
    let mut m = RunManifest::new("build", serde_json::to_value(&r).expect("config"), a.seed);
    m.seconds = t0.elapsed().as_secs_f64();
    m.inputs.push(path_str(&input));
    m.outputs.push(path_str(&a.out));
    write(&a.out, &embed(&g.to_json(), &m))?;
    remember("graph", &a.out)?;
    println!("{:?}: {} points, {} edges in {:.3} s -> {}", r.variant, p.len(), g.edge_count(), m.seconds, a.out.display());
    Ok(())
}

/// Region check matching the guarantee of the construction.
pub fn verify_graph(g: &cdelaunay::SpannerGraph, p: &PointSet, r: &Resolved, trials: usize, seed: u64) -> Result<DilationReport> {
    Ok(match r.variant {
        Variant::Homothet | Variant::NicePolygon | Variant::FatTriangle => {
            check_local_spanner(g, p, &RegionKind::Homothet(Arc::new(r.shape()?)), r.eps, trials, seed)
        }
        Variant::WeakConvex => check_weak_regions(g, p, &RegionKind::Body, r.eps, r.delta, trials, seed),
        Variant::WeakRect => check_weak_regions(g, p, &RegionKind::Rect, r.eps, r.delta, trials, seed),
        Variant::Disk | Variant::Theta => {
            let ids: Vec<usize> = (0..p.len()).collect();
            let mut rep = dilation(g, p, &ids);
            rep.threshold = 1.0 + r.eps + DILATION_SLACK;
            rep.failures.clear();
            if rep.max_dilation > rep.threshold {
                rep.failures.push(verify::Failure { region: None, pair: rep.witness_pair.unwrap_or((0, 0)), dilation: rep.max_dilation });
            }
            rep
        }
    })
}

fn verify_cmd(a: VerifyArgs) -> Result<()> {
    let (input, graph) = (points_path(&a.input), graph_path(&a.graph));
    let p = load_points(&input)?;
    let gdoc = read(&graph)?;
    let recorded = read_embedded(&gdoc).and_then(|m| m.get("config").cloned());
    let r = Resolved::from(&a.spanner, recorded.as_ref())?;
    let g = cdelaunay::SpannerGraph::from_json(&gdoc, &p)?;
    let t0 = Instant::now();
    let mut rep = verify_graph(&g, &p, &r, a.trials, a.seed)?;
    if a.faults > 0 {
        let faults = random_faults(&p, a.faults, a.seed);
        rep = rep.merge(check_fault_tolerance(&g, &p, &r.shape()?, r.eps, &faults));
    }
    println!(
        "{:?}: {} regions, {} pairs, max dilation {:.6} (threshold {:.6}), {} failures",
        r.variant,
        rep.regions_tested,
        rep.pairs_tested,
        rep.max_dilation,
        rep.threshold,
        rep.failures.len()
    );
    if let Some(out) = &a.out {
        let mut m = RunManifest::new("verify", json!({"build": r, "trials": a.trials, "faults": a.faults}), a.seed);
        m.inputs = vec![path_str(&input), path_str(&graph)];
        m.outputs.push(path_str(out));
        m.seconds = t0.elapsed().as_secs_f64();
        write(out, &embed(&rep.to_json(), &m))?;
    }
    if rep.passed() {
        Ok(())
    } else {
        Err(CliError::Failed(format!("{} pairs above dilation {}", rep.failures.len(), rep.threshold)))
    }
}

fn stats(a: StatsArgs) -> Result<()> {
    let (input, graph) = (points_path(&a.input), graph_path(&a.graph));
    let p = load_points(&input)?;
    let g = cdelaunay::SpannerGraph::from_json(&read(&graph)?, &p)?;
    let mut hist = std::collections::BTreeMap::<usize, usize>::new();
    for v in 0..p.len() {
        *hist.entry(g.degree(v)).or_default() += 1;
    }
    let n = p.len();
    let doc = json!({
        "n": n,
        "edges": g.edge_count(),
        "edges_per_point": g.edge_count() as f64 / n as f64,
        "spread": if n > 1 { p.spread() } else { 1.0 },
        "max_degree": hist.keys().last().copied().unwrap_or(0),
        "degree_histogram": hist.iter().map(|(d, c)| json!([d, c])).collect::<Vec<_>>(),
    });
    use std::io::Write;
    // A closed pipe on stdout is not an error for a report.
    let _ = writeln!(std::io::stdout().lock(), "{doc}");
    if let Some(out) = &a.out {
        let mut m = RunManifest::new("stats", Value::Null, 0);
        m.inputs = vec![path_str(&input), path_str(&graph)];
        m.outputs.push(path_str(out));
        write(out, &embed(&doc.to_string(), &m))?;
    }
    Ok(())
}

fn bench(a: BenchArgs) -> Result<()> {
    let eps_list = if a.eps_list.is_empty() { vec![a.spanner.eps.unwrap_or(0.25)] } else { a.eps_list.clone() };
    let mut rows = Vec::new();
    for &n in &a.n {
        let base = gen_random(n, Distribution::Uniform, a.seed)?;
        for &phi in &a.phi {
            let p = if phi > 1.0 { with_far_cluster(&base, (n / 4).max(1), phi)? } else { base.clone() };
            for &eps in &eps_list {
                let r = Resolved::from(&SpannerArgs { eps: Some(eps), ..a.spanner.clone() }, None)?;
                let t0 = Instant::now();
                let g = build_graph(&p, &r)?;
                let seconds = t0.elapsed().as_secs_f64();
                let rep = verify_graph(&g, &p, &r, a.trials, a.seed)?;
                rows.push(BenchRow {
                    construction: format!("{:?}", r.variant).to_lowercase(),
                    n: p.len(),
                    phi: p.spread(),
                    eps,
                    delta: r.delta,
                    edges: g.edge_count(),
                    max_dilation: rep.max_dilation,
                    seconds,
                });
            }
        }
    }
    match &a.out {
        Some(out) => {
            let f = std::fs::File::create(out).map_err(|source| CliError::Io { path: out.clone(), source })?;
            write_bench_csv(f, &rows)?;
            let mut m = RunManifest::new(
                "bench",
                json!({"n": a.n, "eps": eps_list, "phi": a.phi, "trials": a.trials, "variant": a.spanner.variant, "shape": a.spanner.shape}),
                a.seed,
            );
            m.outputs = vec![path_str(out), path_str(&sidecar(out))];
            write(&sidecar(out), &serde_json::to_string(&m.to_value()).expect("manifest"))?;
            println!("wrote {} rows to {}", rows.len(), out.display());
        }
        None => write_bench_csv(std::io::stdout(), &rows)?,
    }
    Ok(())
}

fn region_polygon(rec: &RegionRecord, shape: Option<&str>) -> Result<Vec<Vec2>> {
    Ok(match rec {
        RegionRecord::Rect { x0, x1, y0, y1 } => {
            vec![Vec2::new(*x0, *y0), Vec2::new(*x1, *y0), Vec2::new(*x1, *y1), Vec2::new(*x0, *y1)]
        }
        RegionRecord::Polygon { vertices } => vertices.iter().map(|v| Vec2::new(v[0], v[1])).collect(),
        RegionRecord::Homothet { t, lambda } => {
            let c = parse_shape(shape.ok_or_else(|| CliError::Usage("homothet region needs --shape".into()))?)?;
            c.vertices().iter().map(|v| Vec2::new(t[0], t[1]) + *v * *lambda).collect()
        }
    })
}

fn export_svg(a: SvgArgs) -> Result<()> {
    let input = points_path(&a.input);
    let p = load_points(&input)?;
    let edges = match &a.graph {
        Some(path) => cdelaunay::SpannerGraph::from_json(&read(path)?, &p)?.edges().to_vec(),
        None => Vec::new(),
    };
    let region = match &a.region {
        Some(path) => {
            let rec: RegionRecord = serde_json::from_str(&read(path)?).map_err(|e| CliError::Usage(format!("region: {e}")))?;
            Some(region_polygon(&rec, a.shape.as_deref())?)
        }
        None => None,
    };
    let side = sidecar(&a.out);
    let mut m = RunManifest::new("export-svg", json!({"shape": a.shape}), 0);
    m.inputs = [Some(&input), a.graph.as_ref(), a.region.as_ref()].into_iter().flatten().map(|p| path_str(p)).collect();
    m.outputs = vec![path_str(&a.out), path_str(&side)];
    let name = side.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    write(&a.out, &svg::render(&p, &edges, region.as_deref(), &name))?;
    write(&side, &serde_json::to_string(&m.to_value()).expect("manifest"))?;
    println!("wrote {}", a.out.display());
    Ok(())
}
