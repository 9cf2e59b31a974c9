//! `cospec`: characteristic polynomials, cospectral-mate searches, and
//! spectral-determination verdicts for small graphs, over graph6 lines or
//! builder expressions.
//!
//! Exit codes: 0 success, 10 when a `ds` target has cospectral mates,
//! 2 usage error, 3 input parse error, 4 size-limit error.

mod expr;
mod graph6;
mod report;

use std::io::Read;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use cospec::charpoly::{charpoly_exact, charpoly_sachs, charpoly_schwenk, PivotRule};
use cospec::graph::{double_star, graph_r, Graph, GraphError};
use cospec::iso::forbidden_report;
use cospec::poly::numeric_roots;
use cospec::search::{
    abcd_decompose, cospectral_mates_with_workers, star_mate, MateClass, SearchError,
};

use expr::parse_expr;
use graph6::{parse_graph6, write_graph6, Graph6Error};
use report::{InputEcho, MateEntry, PatternEntry, Report, ReportResult};

const EXIT_NOT_DS: u8 = 10;
const EXIT_PARSE: u8 = 3;
const EXIT_LIMIT: u8 = 4;

#[derive(Parser)]
#[command(
    name = "cospec",
    version,
    about = "Exact adjacency-spectrum toolkit: characteristic polynomials, cospectral mates, DS verdicts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Exact,
    Sachs,
    Schwenk,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Characteristic polynomial of a graph
    Charpoly {
        /// graph6 line or builder expression; '-' reads graph6 lines from stdin
        input: String,
        #[arg(long, value_enum, default_value_t = Method::Exact)]
        method: Method,
        /// also print the numeric roots
        #[arg(long)]
        roots: bool,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        report: ReportFormat,
    },
    /// Exhaustive cospectral-mate search at the input's order and size
    Mates {
        /// graph6 line or builder expression; '-' reads graph6 lines from stdin
        input: String,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        report: ReportFormat,
        /// worker threads (defaults to COSPEC_WORKERS, then 1)
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Determined-by-spectrum verdict; exits 10 when mates exist
    Ds {
        /// graph6 line or builder expression; '-' reads graph6 lines from stdin
        input: String,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        report: ReportFormat,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Emit a named construction as a graph6 line
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Search for the forbidden induced patterns
    Forbidden {
        /// graph6 line or builder expression; '-' reads graph6 lines from stdin
        input: String,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        report: ReportFormat,
    },
    /// Four-block decomposition of a mate candidate
    Decompose {
        /// graph6 line or builder expression; '-' reads graph6 lines from stdin
        input: String,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        report: ReportFormat,
    },
}

#[derive(Subcommand)]
enum ConstructKind {
    /// Double star with a and b leaves on adjacent centers
    DoubleStar { a: usize, b: usize },
    /// K_{2,a} with two pendant vertices on one order-a-side vertex
    #[command(name = "A")]
    ConstructionA { a: usize },
    /// K_{4,a} plus a vertex adjacent to two of the order-four side
    #[command(name = "B")]
    ConstructionB { a: usize },
    /// The 4-cycle with pendants on two adjacent vertices
    #[command(name = "R")]
    R,
    /// K_{x,y} plus (x-1)(y-1) isolated vertices
    StarMate { x: usize, y: usize },
}

/// Everything that can go wrong outside clap, mapped to an exit code.
enum CliError {
    Parse(String),
    Limit(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Limit(_) => EXIT_LIMIT,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Parse(m) | CliError::Limit(m) => m,
        }
    }
}

impl From<SearchError> for CliError {
    fn from(e: SearchError) -> CliError {
        CliError::Limit(e.to_string())
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> CliError {
        match e {
            GraphError::TooManyVertices { .. } => CliError::Limit(e.to_string()),
            _ => CliError::Parse(e.to_string()),
        }
    }
}

impl From<Graph6Error> for CliError {
    fn from(e: Graph6Error) -> CliError {
        match e {
            Graph6Error::TooLarge { .. } | Graph6Error::LongFormUnsupported => {
                CliError::Limit(e.to_string())
            }
            _ => CliError::Parse(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

/// One parsed input graph and how it was described.
struct Input {
    graph: Graph,
    echo: InputEcho,
}

fn load_inputs(input: &str) -> Result<Vec<Input>, CliError> {
    if input == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Parse(format!("reading stdin: {e}")))?;
        let mut graphs = Vec::new();
        for line in text.lines() {
            if line.trim().is_empty() {
                continue;
            }
            let graph = parse_graph6(line)?;
            graphs.push(make_input(graph, Some(line.trim().to_string()), None)?);
        }
        if graphs.is_empty() {
            return Err(CliError::Parse("no graph6 lines on stdin".into()));
        }
        return Ok(graphs);
    }
    match parse_expr(input) {
        Ok(graph) => Ok(vec![make_input(graph, None, Some(input.trim().to_string()))?]),
        Err(expr_err) => match parse_graph6(input) {
            Ok(graph) => Ok(vec![make_input(graph, Some(input.trim().to_string()), None)?]),
            Err(g6_err) => {
                // report whichever parse was plausibly intended
                let looks_g6 = input.bytes().all(|b| (63..=126).contains(&b));
                Err(if looks_g6 {
                    CliError::Parse(format!("not a graph6 line ({g6_err}); not an expression ({expr_err})"))
                } else {
                    CliError::Parse(format!("not an expression ({expr_err}); not a graph6 line ({g6_err})"))
                })
            }
        },
    }
}

fn make_input(graph: Graph, graph6: Option<String>, expression: Option<String>) -> Result<Input, CliError> {
    let graph6 = match graph6 {
        Some(line) => Some(line),
        None if graph.n() <= 62 => Some(write_graph6(&graph)?),
        None => None,
    };
    let echo = InputEcho {
        graph6,
        expression,
        vertices: graph.n(),
        edges: graph.edge_count(),
    };
    Ok(Input { graph, echo })
}

fn worker_count(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("COSPEC_WORKERS")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(1)
    .max(1)
}

fn emit(report: &Report, format: ReportFormat) {
    match format {
        ReportFormat::Text => print!("{}", report.to_text()),
        ReportFormat::Json => println!("{}", report.to_json()),
    }
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Charpoly {
            input,
            method,
            roots,
            report,
        } => {
            for item in load_inputs(&input)? {
                let start = Instant::now();
                let poly = match method {
                    Method::Exact => charpoly_exact(&item.graph),
                    Method::Sachs => {
                        charpoly_sachs(&item.graph).map_err(|e| CliError::Limit(e.to_string()))?
                    }
                    Method::Schwenk => charpoly_schwenk(&item.graph, PivotRule::MaxDegree),
                };
                let root_list = if roots {
                    Some(numeric_roots(&poly).map_err(|e| CliError::Parse(e.to_string()))?)
                } else {
                    None
                };
                let doc = Report {
                    command: "charpoly".into(),
                    input: item.echo,
                    workers: None,
                    timing_ms: start.elapsed().as_millis(),
                    result: ReportResult::Charpoly {
                        method: method_name(method).to_string(),
                        polynomial: poly.to_string(),
                        roots: root_list,
                    },
                };
                emit(&doc, report);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Mates { input, report, workers } => {
            let workers = worker_count(workers);
            for item in load_inputs(&input)? {
                let doc = mates_report("mates", &item, workers)?;
                emit(&doc, report);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Ds { input, report, workers } => {
            let workers = worker_count(workers);
            let mut any_mates = false;
            for item in load_inputs(&input)? {
                let doc = mates_report("ds", &item, workers)?;
                if let ReportResult::Mates { ds, .. } = &doc.result {
                    any_mates |= !ds;
                }
                emit(&doc, report);
            }
            Ok(if any_mates {
                ExitCode::from(EXIT_NOT_DS)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Construct { kind } => {
            let graph = match kind {
                ConstructKind::DoubleStar { a, b } => double_star(a, b)?,
                ConstructKind::ConstructionA { a } => cospec::graph::construction_a(a)?,
                ConstructKind::ConstructionB { a } => cospec::graph::construction_b(a)?,
                ConstructKind::R => graph_r(),
                ConstructKind::StarMate { x, y } => star_mate(x, y)?,
            };
            println!("{}", write_graph6(&graph)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Forbidden { input, report } => {
            for item in load_inputs(&input)? {
                let start = Instant::now();
                let fr = forbidden_report(&item.graph);
                let patterns = vec![
                    pattern_entry("2K2", &fr.two_k2),
                    pattern_entry("R", &fr.r_graph),
                    pattern_entry("P2(2,2)", &fr.double_star_2_2),
                    pattern_entry("P4+K1", &fr.p4_plus_k1),
                    pattern_entry("P5", &fr.p5),
                ];
                let doc = Report {
                    command: "forbidden".into(),
                    input: item.echo,
                    workers: None,
                    timing_ms: start.elapsed().as_millis(),
                    result: ReportResult::Forbidden {
                        all_clear: fr.all_clear(),
                        patterns,
                    },
                };
                emit(&doc, report);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Decompose { input, report } => {
            for item in load_inputs(&input)? {
                let start = Instant::now();
                let part = abcd_decompose(&item.graph)
                    .map_err(|e| CliError::Parse(format!("decomposition failed: {e}")))?;
                let (a, b, c, d) = part.sizes();
                let isolated = item.graph.n() - (a + b + c + d);
                let classification = match (a, b, c, d) {
                    (1, 1, 1, _) => "double_star",
                    (1, _, 1, 2) => "form_i",
                    (1, 2, _, 2) => "form_ii",
                    _ => "unknown",
                };
                let doc = Report {
                    command: "decompose".into(),
                    input: item.echo,
                    workers: None,
                    timing_ms: start.elapsed().as_millis(),
                    result: ReportResult::Decompose {
                        sizes: [a, b, c, d],
                        path: part.path,
                        isolated,
                        classification: classification.into(),
                    },
                };
                emit(&doc, report);
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn method_name(method: Method) -> &'static str {
    match method {
        Method::Exact => "exact",
        Method::Sachs => "sachs",
        Method::Schwenk => "schwenk",
    }
}

fn pattern_entry(name: &str, witness: &Option<Vec<usize>>) -> PatternEntry {
    PatternEntry {
        pattern: name.into(),
        present: witness.is_some(),
        witness: witness.clone(),
    }
}

fn mates_report(command: &str, item: &Input, workers: usize) -> Result<Report, CliError> {
    let start = Instant::now();
    let outcome = cospectral_mates_with_workers(&item.graph, workers)?;
    let mates: Vec<MateEntry> = outcome
        .mates
        .iter()
        .map(|m| {
            Ok(MateEntry {
                graph6: write_graph6(&m.graph)?,
                classification: m.class.map(class_name),
            })
        })
        .collect::<Result<_, Graph6Error>>()?;
    Ok(Report {
        command: command.into(),
        input: InputEcho {
            graph6: item.echo.graph6.clone(),
            expression: item.echo.expression.clone(),
            vertices: item.echo.vertices,
            edges: item.echo.edges,
        },
        workers: Some(workers),
        timing_ms: start.elapsed().as_millis(),
        result: ReportResult::Mates {
            exhaustive: outcome.exhaustive,
            target_polynomial: outcome.target_poly.to_string(),
            ds: outcome.mates.is_empty(),
            mates,
        },
    })
}

fn class_name(class: MateClass) -> String {
    match class {
        MateClass::DoubleStar => "double_star",
        MateClass::FormI => "form_i",
        MateClass::FormII => "form_ii",
        MateClass::Unknown => "unknown",
    }
    .into()
}
