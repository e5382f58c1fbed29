use std::fs;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use alphax::connectivity::{bridges, classify, cut_vertices};
use alphax::enumeration::{
    enumerate_class_with, read_graph6, write_graph6, write_graph6_lines, ClassFilter, ScanOptions,
};
use alphax::families::{make, FamilySpec};
use alphax::report::{report_rows, to_csv, to_json, to_json_lines};
use alphax::spectral::{bound_lower_delta, bound_upper_degree, bound_upper_edge, spectral_radius_with};
use alphax::verify::{
    certify_column_sums, load_class, parse_extremal_alphas, search_members, verify_property_suite, Extremal,
    GraphSource, Verdict,
};
use alphax::{AlphaParam, Error, Graph, SpectralConfig};

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 64;

#[derive(Debug, Parser)]
#[command(name = "alphax", version, about = "A_alpha spectral radius tools and exhaustive extremal checks")]
struct Cli {
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true, env = "ALPHAX_JOBS")]
    jobs: Option<usize>,
    /// Power-iteration residual tolerance.
    #[arg(long, global = true, default_value_t = 1e-10)]
    tol: f64,
    /// Power-iteration cap.
    #[arg(long, global = true, default_value_t = 100_000)]
    max_iters: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GraphInput {
    /// Family name (W7, F3, K2,6, C7, P5), graph6 record, or a file.
    graph: Option<String>,
    /// Graph file: `.g6` (one graph per line) or an edge list.
    #[arg(long = "in")]
    input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Spectral radius with bounds, residual and iteration count.
    Rho {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_delimiter = ',', default_value = "0.5")]
        alphas: Vec<f64>,
    },
    /// Degree, edge and maximum-degree bounds only.
    Bounds {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_delimiter = ',', default_value = "0.5")]
        alphas: Vec<f64>,
    },
    /// Connectivity values and minimal-class membership.
    Classify {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// Every isomorphism class of a given order in a class, as graph6.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "min-2-edge-connected")]
        class: ClassFilter,
        /// Write graph6 here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive verification campaigns.
    Verify {
        #[command(subcommand)]
        campaign: Campaign,
    },
    /// Column sums of A² − αnA + 2(2α−1)(n−2)I over a class with Δ ≤ n−3.
    CertifyColsums {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', default_value = "0.5,0.75")]
        alphas: Vec<f64>,
        #[arg(long, default_value = "min-2-edge-connected")]
        class: ClassFilter,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_delimiter = ',', default_value = "0.5,0.75")]
    alphas: Vec<f64>,
    /// Pre-generated class file (graph6) instead of the built-in scan.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// `.json` or `.csv` report; JSON lines on stdout otherwise.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Include per-α wall-clock time in the report.
    #[arg(long)]
    timing: bool,
}

#[derive(Debug, Subcommand)]
enum Campaign {
    /// Odd n: the friendship graph maximizes over minimally 2-edge-connected graphs.
    #[command(name = "thm11-odd")]
    FriendshipOdd(SearchArgs),
    /// Even n: K_{2,n-2} maximizes over minimally 2-edge-connected graphs.
    #[command(name = "thm11-even")]
    BipartiteEven(SearchArgs),
    /// The wheel maximizes over minimally 3-connected graphs.
    #[command(name = "thm12")]
    Wheel(SearchArgs),
    /// Structural properties of the minimal classes for all orders up to n.
    Lemmas {
        #[arg(long, default_value_t = 7)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(_)
            | Error::NotConverged { .. }
            | Error::CertificateMismatch { .. }
            | Error::Json(_)
            | Error::Csv(_) => Failure::Runtime(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<Verdict, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("alphax: cannot start {jobs} workers: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match run(&cli) {
        Ok(v) => ExitCode::from(v.exit_code() as u8),
        Err(Failure::Usage(msg)) => {
            eprintln!("alphax: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("alphax: {msg}");
            ExitCode::from(EXIT_VIOLATION)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    if cli.tol.is_nan() || cli.tol <= 0.0 || cli.max_iters == 0 {
        return Err(Failure::Usage("--tol must be positive and --max-iters nonzero".into()));
    }
    let cfg = SpectralConfig { tol: cli.tol, max_iters: cli.max_iters };
    match &cli.command {
        Command::Rho { input, alphas } => rho(input, alphas, &cfg, true),
        Command::Bounds { input, alphas } => rho(input, alphas, &cfg, false),
        Command::Classify { input, k } => classify_cmd(input, *k),
        Command::Enumerate { n, class, out } => enumerate(*n, *class, out.as_deref()),
        Command::Verify { campaign } => match campaign {
            Campaign::FriendshipOdd(a) => search(Extremal::FriendshipOdd, a, &cfg),
            Campaign::BipartiteEven(a) => search(Extremal::BipartiteEven, a, &cfg),
            Campaign::Wheel(a) => search(Extremal::Wheel, a, &cfg),
            Campaign::Lemmas { n, out } => lemmas(*n, out.as_deref()),
        },
        Command::CertifyColsums { n, alphas, class, input } => certify(*n, alphas, *class, input.as_deref()),
    }
}

fn read_graph_file(path: &Path) -> Result<Vec<Graph>, Failure> {
    let file = fs::File::open(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let reader = BufReader::new(file);
    let located = |e: Error| Failure::Usage(format!("{}: {e}", path.display()));
    if path.extension().is_some_and(|x| x == "g6") {
        read_graph6(reader).map_err(located)
    } else {
        Graph::read_edge_list(reader).map(|g| vec![g]).map_err(located)
    }
}

/// Resolves the positional argument or `--in` into labeled graphs.
fn load_input(input: &GraphInput) -> Result<Vec<(String, Graph)>, Failure> {
    let from_file = |path: &Path| -> Result<Vec<(String, Graph)>, Failure> {
        let graphs = read_graph_file(path)?;
        Ok(graphs.into_iter().enumerate().map(|(i, g)| (format!("{}#{}", path.display(), i + 1), g)).collect())
    };
    match (&input.graph, &input.input) {
        (Some(_), Some(_)) => Err(Failure::Usage("give either a graph argument or --in, not both".into())),
        (None, None) => Err(Failure::Usage("a graph argument or --in is required".into())),
        (None, Some(path)) => from_file(path),
        (Some(text), None) => {
            let path = Path::new(text);
            if path.is_file() {
                return from_file(path);
            }
            let family = text.parse::<FamilySpec>().and_then(|spec| make(&spec));
            match family {
                Ok(g) => Ok(vec![(text.clone(), g)]),
                Err(family_err) => match alphax::enumeration::parse_graph6(text.as_bytes()) {
                    Ok(g) => Ok(vec![(text.clone(), g)]),
                    Err(g6_err) => Err(Failure::Usage(format!(
                        "{text:?} is not a file, a family ({family_err}) or a graph6 record ({g6_err})"
                    ))),
                },
            }
        }
    }
}

fn parse_alphas(alphas: &[f64]) -> Result<Vec<AlphaParam>, Failure> {
    alphas.iter().map(|&a| AlphaParam::new(a).map_err(Failure::from)).collect()
}

fn emit(text: &str) -> Result<(), Failure> {
    io::stdout().write_all(text.as_bytes()).map_err(|e| Failure::Runtime(e.to_string()))
}

fn write_out(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Runtime(format!("cannot write {}: {e}", path.display())))
}

#[derive(Serialize)]
struct RhoRow<'a> {
    graph: &'a str,
    n: usize,
    m: usize,
    alpha: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    rho: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    iterations: Option<usize>,
    lower_max_degree: f64,
    upper_degree: Option<f64>,
    upper_edge: Option<f64>,
}

fn rho(input: &GraphInput, alphas: &[f64], cfg: &SpectralConfig, with_radius: bool) -> Outcome {
    let graphs = load_input(input)?;
    let alphas = parse_alphas(alphas)?;
    let mut rows = Vec::new();
    for (label, g) in &graphs {
        for &alpha in &alphas {
            let radius = if with_radius { Some(spectral_radius_with(g, alpha, cfg)?) } else { None };
            rows.push(RhoRow {
                graph: label,
                n: g.order(),
                m: g.size(),
                alpha: alpha.value(),
                rho: radius.as_ref().map(|r| r.radius),
                residual: radius.as_ref().map(|r| r.residual),
                iterations: radius.as_ref().map(|r| r.iterations),
                lower_max_degree: bound_lower_delta(g, alpha),
                // both upper bounds need every vertex to have a neighbor
                upper_degree: bound_upper_degree(g, alpha).ok(),
                upper_edge: bound_upper_edge(g, alpha).ok(),
            });
        }
    }
    emit(&to_json_lines(&rows)?)?;
    Ok(Verdict::Verified)
}

#[derive(Serialize)]
struct ClassifyRow<'a> {
    graph: &'a str,
    n: usize,
    m: usize,
    #[serde(flatten)]
    membership: alphax::connectivity::ClassMembership,
    bridges: Vec<(usize, usize)>,
    cut_vertices: Vec<usize>,
}

fn classify_cmd(input: &GraphInput, k: usize) -> Outcome {
    let graphs = load_input(input)?;
    let mut rows = Vec::new();
    for (label, g) in &graphs {
        rows.push(ClassifyRow {
            graph: label,
            n: g.order(),
            m: g.size(),
            membership: classify(g, k)?,
            bridges: bridges(g),
            cut_vertices: cut_vertices(g).iter().collect(),
        });
    }
    emit(&to_json_lines(&rows)?)?;
    Ok(Verdict::Verified)
}

fn enumerate(n: usize, class: ClassFilter, out: Option<&Path>) -> Outcome {
    let e = enumerate_class_with(n, class, ScanOptions::default())?;
    let text = write_graph6_lines(e.graphs())?;
    eprintln!("{class} n={n}: {} classes from {} labeled candidates", e.members.len(), e.labeled_candidates);
    for rule in &e.pruning {
        eprintln!("  pruning: {rule}");
    }
    match out {
        Some(path) => write_out(path, &text)?,
        None => emit(&text)?,
    }
    Ok(Verdict::Verified)
}

fn search(extremal: Extremal, args: &SearchArgs, cfg: &SpectralConfig) -> Outcome {
    let alphas = parse_extremal_alphas(&args.alphas)?;
    extremal.check_order(args.n)?;
    let source = match &args.input {
        Some(path) => GraphSource::Supplied(read_graph_file(path)?),
        None => GraphSource::BuiltIn,
    };
    let (members, rejected) = load_class(extremal, args.n, source)?;
    if rejected > 0 {
        eprintln!("ignored {rejected} input graphs outside {}", extremal.class());
    }
    let reports = search_members(extremal, args.n, &members, &alphas, cfg)?;
    for r in &reports {
        eprintln!(
            "{} n={} alpha={}: {} classes, max {:.9} at {} (expected {} = {:.9}), ties {}, {}",
            r.class,
            r.n,
            r.alpha,
            r.class_size,
            r.max_value,
            r.argmax_canonical,
            r.expected,
            r.expected_value,
            r.ties_within_tolerance,
            r.verdict.as_str()
        );
    }
    let rows = report_rows(&reports, args.timing);
    match &args.out {
        Some(path) => {
            let text = match path.extension().and_then(|x| x.to_str()) {
                Some("json") => to_json(&rows)?,
                Some("csv") => to_csv(&rows)?,
                _ => return Err(Failure::Usage(format!("report path {} must end in .json or .csv", path.display()))),
            };
            write_out(path, &text)?;
        }
        None => emit(&to_json_lines(&rows)?)?,
    }
    Ok(Verdict::worst(reports.iter().map(|r| r.verdict)))
}

fn lemmas(n: usize, out: Option<&Path>) -> Outcome {
    let checks = verify_property_suite(n)?;
    for c in &checks {
        eprintln!(
            "{:<44} {:<22} n<={} size {:>5} violations {}",
            c.property,
            c.class.to_string(),
            c.n_max,
            c.class_size,
            c.violations
        );
        for g6 in &c.offending {
            eprintln!("  offending: {g6}");
        }
    }
    let text = to_json_lines(&checks)?;
    match out {
        Some(path) => write_out(path, &text)?,
        None => emit(&text)?,
    }
    Ok(Verdict::worst(checks.iter().map(|c| c.verdict())))
}

fn certify(n: usize, alphas: &[f64], class: ClassFilter, input: Option<&Path>) -> Outcome {
    let alphas = parse_extremal_alphas(alphas)?;
    let members = match input {
        Some(path) => {
            let graphs = read_graph_file(path)?;
            if let Some(g) = graphs.iter().find(|g| g.order() != n) {
                return Err(Failure::Usage(format!(
                    "{}: graph {} has order {}, expected {n}",
                    path.display(),
                    write_graph6(g)?,
                    g.order()
                )));
            }
            alphax::enumeration::collect_class(graphs, class)?.0
        }
        None => enumerate_class_with(n, class, ScanOptions::default())?.members,
    };
    let reports = certify_column_sums(class, n, &members, &alphas)?;
    for r in &reports {
        eprintln!(
            "{} n={} alpha={}: {} graphs with max degree <= n-3, {} with every column sum negative (largest {:.9})",
            r.class, r.n, r.alpha, r.graphs_checked, r.graphs_all_negative, r.max_column_sum
        );
        for g6 in &r.offending {
            eprintln!("  offending: {g6}");
        }
    }
    emit(&to_json_lines(&reports)?)?;
    Ok(Verdict::worst(reports.iter().map(|r| r.verdict)))
}
