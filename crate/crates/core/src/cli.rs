//! Command-line front end.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::boundary::{side_composition, FeasibilityMode};
use crate::golden::GoldenProgram;
use crate::numtheory::{
    enumerate_triples_direct, enumerate_triples_param, sqdiv, sqfree, Triple,
};
use crate::output::{
    candidate_record, discrepancy_record, drow_record, search_summary_record, tile_record,
    triple_record, write_records, Format, OutputRecord, RecordKind,
};
use crate::render::render_svg;
use crate::shapes::{aggregate_report, all_candidates, analyze, analyze_shape, ShapeCandidate, ShapeKind};
use crate::tiler::{
    build_region, placements_at_corner, search, verify_tiling_detailed, Frontier, Geometry,
    PlacedTile, Region, SearchConfig, SearchStatus,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

/// Environment variable that overrides `--threads`.
pub const THREADS_ENV: &str = "TILINGGATE_THREADS";

#[derive(Parser, Debug)]
#[command(name = "tilinggate", version, about = "Exact tools for N-tilings of a triangle by a 120° tile")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, default_value = "table")]
    format: Format,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List primitive tiles with a < b and a <= max-a.
    Triples {
        #[arg(long)]
        max_a: u64,
        #[arg(long, value_enum, default_value_t = Method::Direct)]
        method: Method,
    },
    /// Squarefree part or square divider of a positive integer.
    Arith {
        #[arg(value_enum)]
        op: ArithOp,
        x: u64,
    },
    /// Admissible edge rows for one side length.
    Compose {
        #[arg(long)]
        length: u64,
        #[arg(long)]
        tile: Triple,
        #[arg(long, default_value = "lemma")]
        mode: FeasibilityMode,
    },
    /// Run shape analyzers.
    Analyze {
        /// A shape name or `all`.
        #[arg(long, default_value = "all")]
        shape: String,
        #[arg(long, conflicts_with = "all_tiles", required_unless_present = "all_tiles")]
        tile: Option<Triple>,
        #[arg(long)]
        all_tiles: bool,
        #[arg(long)]
        nmax: u64,
        #[arg(long, default_value = "lemma")]
        mode: FeasibilityMode,
    },
    /// Least survivors per shape and the list of discrepancies.
    Report {
        #[arg(long)]
        nmax: u64,
    },
    /// Re-run one of the printed search programs.
    Golden {
        #[arg(long)]
        program: GoldenProgram,
    },
    /// Exhaustive tiling search.
    Search(SearchArgs),
    /// Draw a candidate triangle with two sample tiles at corner C.
    Render {
        /// `shape:a,b,c:k`
        #[arg(long)]
        candidate: CandidateSpec,
        #[arg(long)]
        svg: PathBuf,
    },
}

#[derive(Args, Debug)]
struct SearchArgs {
    /// A shape name or `similar`.
    #[arg(long)]
    shape: String,
    #[arg(long)]
    tile: Triple,
    #[arg(long)]
    k: u64,
    #[arg(long)]
    no_mirror: bool,
    #[arg(long)]
    node_limit: Option<u64>,
    /// Seconds.
    #[arg(long)]
    time_limit: Option<f64>,
    #[arg(long)]
    svg: Option<PathBuf>,
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long)]
    find_all: bool,
    #[arg(long)]
    parallel_depth: Option<usize>,
    #[arg(long)]
    depth_limit: Option<usize>,
    #[arg(long)]
    audit: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Direct,
    Param,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ArithOp {
    Sqfree,
    Sqdiv,
}

#[derive(Clone, Debug)]
struct CandidateSpec {
    shape: ShapeKind,
    tile: Triple,
    k: u64,
}

impl FromStr for CandidateSpec {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        let [shape, tile, k] = parts[..] else {
            return Err(format!("expected shape:a,b,c:k, got '{s}'"));
        };
        Ok(CandidateSpec {
            shape: shape.parse()?,
            tile: tile.parse().map_err(|e| format!("{e}"))?,
            k: k.parse().map_err(|_| format!("bad k '{k}'"))?,
        })
    }
}

/// A command failure with its exit code.
struct Failure(i32, String);

fn invalid(msg: impl Into<String>) -> Failure {
    Failure(EXIT_INVALID, msg.into())
}

type Outcome = Result<(Vec<OutputRecord>, Option<String>, i32), Failure>;

/// Parses `argv` (including the program name), runs the command and returns
/// the exit code. Output goes to stdout, diagnostics to stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                EXIT_OK
            } else {
                let _ = write!(err, "{e}");
                EXIT_INVALID
            };
        }
    };
    let format = cli.format;
    match dispatch(cli.cmd, format) {
        Ok((recs, text, code)) => {
            let res = match (format, text) {
                (Format::Table, Some(t)) => out.write_all(t.as_bytes()),
                _ => write_records(out, format, &recs),
            };
            if let Err(e) = res {
                let _ = writeln!(err, "error: {e}");
                return EXIT_INVALID;
            }
            code
        }
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn dispatch(cmd: Command, format: Format) -> Outcome {
    match cmd {
        Command::Triples { max_a, method } => triples(max_a, method),
        Command::Arith { op, x } => {
            if x == 0 {
                return Err(invalid("x must be positive"));
            }
            let (name, v) = match op {
                ArithOp::Sqfree => ("sqfree", sqfree(x)),
                ArithOp::Sqdiv => ("sqdiv", sqdiv(x)),
            };
            let rec = OutputRecord::new(RecordKind::TableRow).str("op", name).int("x", x).int("value", v);
            Ok((vec![rec], Some(format!("{v}\n")), EXIT_OK))
        }
        Command::Compose { length, tile, mode } => {
            let comp = side_composition(length, &tile, mode);
            Ok((comp.rows.iter().map(|r| drow_record(length, r)).collect(), None, EXIT_OK))
        }
        Command::Analyze { shape, tile, all_tiles, nmax, mode } => {
            let kind = parse_shape_or_all(&shape)?;
            let cands: Vec<ShapeCandidate> = match (tile, all_tiles) {
                (Some(t), _) => match kind {
                    Some(k) => analyze_shape(k, &t, nmax, mode),
                    None => analyze(&t, nmax, mode),
                },
                (None, _) => all_candidates(nmax, mode)
                    .into_iter()
                    .filter(|c| kind.is_none_or(|k| c.shape == k))
                    .collect(),
            };
            Ok((cands.iter().map(candidate_record).collect(), None, EXIT_OK))
        }
        Command::Report { nmax } => {
            let r = aggregate_report(nmax);
            let mut recs: Vec<OutputRecord> = r
                .shapes
                .iter()
                .filter_map(|s| s.least.as_ref())
                .map(|c| candidate_record(c).str("role", "least"))
                .collect();
            if let Some(o) = &r.overall {
                recs.push(candidate_record(o).str("role", "overall"));
            }
            recs.extend(r.discrepancies.iter().map(discrepancy_record));
            Ok((recs, None, EXIT_OK))
        }
        Command::Golden { program } => {
            let text = program.run();
            let recs = text
                .lines()
                .map(|l| OutputRecord::new(RecordKind::TableRow).str("program", program.name()).str("line", l))
                .collect();
            Ok((recs, Some(text), EXIT_OK))
        }
        Command::Search(args) => run_search(args, format),
        Command::Render { candidate, svg } => render(candidate, svg),
    }
}

fn parse_shape_or_all(s: &str) -> Result<Option<ShapeKind>, Failure> {
    if s == "all" {
        Ok(None)
    } else {
        s.parse().map(Some).map_err(invalid)
    }
}

fn triples(max_a: u64, method: Method) -> Outcome {
    if max_a > 100_000 {
        return Err(invalid("max-a is limited to 100000"));
    }
    let direct = || enumerate_triples_direct(max_a);
    let param = || {
        let bound = max_a + (3 * max_a * max_a + 1) / 2;
        enumerate_triples_param(bound).into_iter().filter(|t| t.a <= max_a).collect::<Vec<_>>()
    };
    let (list, other) = match method {
        Method::Direct => (direct(), None),
        Method::Param => (param(), None),
        Method::Both => (direct(), Some(param())),
    };
    let mut recs: Vec<OutputRecord> = list.iter().map(triple_record).collect();
    if let Some(p) = other {
        if p != list {
            recs.push(discrepancy_record(&crate::shapes::Discrepancy {
                topic: "triple enumeration".into(),
                stated: format!("direct: {} tiles", list.len()),
                computed: format!("param: {} tiles", p.len()),
            }));
        }
    }
    Ok((recs, None, EXIT_OK))
}

/// The candidate of `shape` on `tile` with this `k`, widening `nmax` as needed.
fn find_candidate(shape: ShapeKind, tile: &Triple, k: u64) -> Option<ShapeCandidate> {
    let mut nmax = 64u64;
    while nmax <= 1 << 36 {
        let cands = analyze_shape(shape, tile, nmax, FeasibilityMode::Lemma);
        if let Some(c) = cands.iter().find(|c| c.k == k) {
            return Some(c.clone());
        }
        if cands.iter().any(|c| c.k > k) {
            return None;
        }
        nmax *= 2;
    }
    None
}

fn candidate_region(shape: ShapeKind, tile: &Triple, k: u64) -> Result<(ShapeCandidate, Region), Failure> {
    let c = find_candidate(shape, tile, k)
        .ok_or_else(|| invalid(format!("no {shape} candidate with k={k} for {tile}")))?;
    let region = build_region(&c).map_err(|e| invalid(e.to_string()))?;
    Ok((c, region))
}

fn thread_count(flag: Option<usize>) -> Result<usize, Failure> {
    match std::env::var(THREADS_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| invalid(format!("{THREADS_ENV}='{v}' is not a count"))),
        Err(_) => Ok(flag.unwrap_or(1)),
    }
}

fn write_svg(path: &PathBuf, svg: &str) -> Result<(), Failure> {
    std::fs::write(path, svg).map_err(|e| invalid(format!("cannot write {}: {e}", path.display())))
}

fn run_search(args: SearchArgs, _format: Format) -> Outcome {
    let (shape_name, region, n, mut recs) = if args.shape == "similar" {
        if args.k == 0 {
            return Err(invalid("k must be positive"));
        }
        let r = Region::similar(args.tile, args.k);
        ("similar".to_string(), r, args.k * args.k, Vec::new())
    } else {
        let kind: ShapeKind = args.shape.parse().map_err(invalid)?;
        let (c, r) = candidate_region(kind, &args.tile, args.k)?;
        (kind.name().to_string(), r, c.n, vec![candidate_record(&c)])
    };
    let threads = thread_count(args.threads)?;
    if threads == 0 {
        return Err(invalid("threads must be positive"));
    }
    let time_limit = match args.time_limit {
        Some(s) if !(s.is_finite() && s >= 0.0) => return Err(invalid("bad time limit")),
        Some(s) => Some(Duration::from_secs_f64(s)),
        None => None,
    };
    let cfg = SearchConfig {
        allow_mirror: !args.no_mirror,
        node_limit: args.node_limit,
        time_limit,
        find_all: args.find_all,
        parallel_depth: args.parallel_depth.unwrap_or(if threads > 1 { 3 } else { 0 }),
        depth_limit: args.depth_limit,
        audit: args.audit,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| invalid(e.to_string()))?;
    let start = Instant::now();
    let res = pool.install(|| search(&region, n, &cfg));
    let elapsed = start.elapsed().as_millis();

    recs.push(search_summary_record(&shape_name, &region.tile, args.k, n, &res, elapsed));
    for (i, tiling) in res.tilings.iter().enumerate() {
        if let Err(e) = verify_tiling_detailed(&region, tiling, n) {
            recs.push(discrepancy_record(&crate::shapes::Discrepancy {
                topic: format!("tiling {i} verification"),
                stated: "valid tiling".into(),
                computed: e,
            }));
        }
        recs.extend(tiling.iter().enumerate().map(|(j, p)| tile_record(i, j, p)));
    }
    for f in &res.audit_failures {
        recs.push(discrepancy_record(&crate::shapes::Discrepancy {
            topic: "search audit".into(),
            stated: "exact frontier invariants".into(),
            computed: f.clone(),
        }));
    }
    if let Some(path) = &args.svg {
        let tiles: &[PlacedTile] = res.tilings.first().map(Vec::as_slice).unwrap_or(&[]);
        write_svg(path, &render_svg(&region, tiles, true))?;
    }
    let code = if res.status == SearchStatus::LimitHit { EXIT_LIMIT } else { EXIT_OK };
    Ok((recs, None, code))
}

/// Up to two tiles placed at corner `C` (vertex 1 of the region), the second
/// one next to the first.
fn sample_tiles(region: &Region, n: u64) -> Vec<PlacedTile> {
    let mut geo = Geometry::new(region.tile);
    let cfg = SearchConfig::default();
    let root = Frontier::from_region(region, n);
    let c = region.vertices[1].clone();
    let at_c = |f: &Frontier| f.corners.iter().position(|k| k.pt == c);
    let Some(idx) = at_c(&root) else { return Vec::new() };
    for p in placements_at_corner(&root, idx, &mut geo, &cfg) {
        let Some(children) = crate::tiler::apply_placement(&root, &p, &mut geo) else { continue };
        for child in &children {
            if let Some(j) = at_c(child) {
                for q in placements_at_corner(child, j, &mut geo, &cfg) {
                    if crate::tiler::apply_placement(child, &q, &mut geo).is_some() {
                        return vec![p.tile, q.tile];
                    }
                }
            }
        }
        return vec![p.tile];
    }
    Vec::new()
}

fn render(spec: CandidateSpec, svg: PathBuf) -> Outcome {
    let c = find_candidate(spec.shape, &spec.tile, spec.k)
        .ok_or_else(|| invalid(format!("no {} candidate with k={} for {}", spec.shape, spec.k, spec.tile)))?;
    if !c.sides_integral() {
        return Err(invalid("candidate sides are not integral"));
    }
    let (bc, ac, ab) = c.side_lengths();
    let region = Region::triangle(c.tile, c.angles(), [bc, ac, ab].map(|s| s.to_integer()))
        .map_err(|e| invalid(e.to_string()))?;
    let tiles = sample_tiles(&region, c.n);
    write_svg(&svg, &render_svg(&region, &tiles, true))?;
    Ok((vec![candidate_record(&c)], None, EXIT_OK))
}
