//! Command-line front end: loads an instance, dispatches to the requested
//! enumerator, streams one solution per line (or JSON array element) in
//! discovery order, and optionally cross-checks the output against the
//! brute-force oracle or reports per-output delay statistics.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, ValueEnum};
use cutenum::graph::{EdgeSet, Graph, VertexSet};
use cutenum::solution::{OrderedTerminals, PairTerminals};
use cutenum::{metrics, multicut, multiway_edge, multiway_node, oracle, steiner};

const EXIT_OK: u8 = 0;
const EXIT_INFEASIBLE: u8 = 2;
const EXIT_PARSE: u8 = 3;
const EXIT_MISMATCH: u8 = 4;
const EXIT_GUARD: u8 = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    NodeMulticut,
    EdgeMulticut,
    NodeMultiway,
    EdgeMultiway,
    SteinerCheck,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Lines,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "cutenum",
    about = "Enumerate all minimal multicuts / multiway cuts of an undirected graph",
    long_about = None
)]
struct Cli {
    /// What to enumerate (steiner-check instead cross-checks the
    /// hypergraph-transversal duality on a hypergraph file).
    #[arg(long, value_enum)]
    mode: Mode,

    /// Graph file: "n m" then one "u v" line per edge. Unused in
    /// steiner-check mode.
    #[arg(long)]
    graph: Option<PathBuf>,

    /// Terminal file. Pairs modes: one "u v" line per pair. Multiway
    /// modes: a single line "t1 t2 ... tk" (order defines the search
    /// root). Steiner-check: a hypergraph, "|U| |E|" then one line of
    /// members per hyperedge.
    #[arg(long)]
    terminals: PathBuf,

    /// Stop after this many solutions.
    #[arg(long)]
    limit: Option<usize>,

    /// Emit a machine-readable stats block on stderr when done.
    #[arg(long)]
    stats: bool,

    /// Re-enumerate by brute force and verify exact agreement (small
    /// instances only).
    #[arg(long)]
    oracle_check: bool,

    #[arg(long, value_enum, default_value_t = Format::Lines)]
    format: Format,
}

/// One enumerated solution, as the CLI prints it.
trait Emit {
    fn line(&self) -> String;
    fn json(&self) -> serde_json::Value;
}

impl Emit for VertexSet {
    fn line(&self) -> String {
        self.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
    fn json(&self) -> serde_json::Value {
        serde_json::json!({ "vertices": self.as_slice() })
    }
}

impl Emit for EdgeSet {
    fn line(&self) -> String {
        self.iter()
            .map(|(u, v)| format!("{u} {v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
    fn json(&self) -> serde_json::Value {
        serde_json::json!({
            "edges": self.iter().map(|(u, v)| vec![u, v]).collect::<Vec<_>>()
        })
    }
}

struct DriveResult<T> {
    emitted: Vec<T>,
    truncated: bool,
    /// Inter-output wall-clock deltas: preprocessing before the first
    /// output, then one delta per gap, then postprocessing after the last.
    deltas_ns: Vec<u128>,
}

/// Streams solutions to stdout, honoring --limit, recording a timestamp at
/// each production (before formatting or I/O).
fn drive<T: Emit, S: Iterator<Item = T>>(stream: S, cli: &Cli) -> std::io::Result<DriveResult<T>> {
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    let mut emitted = Vec::new();
    let mut deltas = Vec::new();
    let mut truncated = false;
    let mut prev = Instant::now();
    #[cfg(debug_assertions)]
    let mut seen = std::collections::HashSet::new();
    if cli.format == Format::Json {
        writeln!(out, "[")?;
    }
    for sol in stream {
        let now = Instant::now();
        deltas.push(now.duration_since(prev).as_nanos());
        prev = now;
        #[cfg(debug_assertions)]
        assert!(seen.insert(sol.line()), "duplicate solution emitted");
        match cli.format {
            Format::Lines => writeln!(out, "{}", sol.line())?,
            Format::Json => {
                let sep = if emitted.is_empty() { "" } else { ",\n" };
                write!(out, "{sep}{}", sol.json())?;
            }
        }
        out.flush()?;
        emitted.push(sol);
        if cli.limit.is_some_and(|l| emitted.len() >= l) {
            truncated = true;
            break;
        }
    }
    if cli.format == Format::Json {
        writeln!(out, "{}]", if emitted.is_empty() { "" } else { "\n" })?;
    }
    out.flush()?;
    deltas.push(prev.elapsed().as_nanos());
    Ok(DriveResult {
        emitted,
        truncated,
        deltas_ns: deltas,
    })
}

fn report_stats(result: &DriveResult<impl Emit>, retained_bytes: usize, ops_spent: u64) {
    let deltas = &result.deltas_ns;
    let max = deltas.iter().copied().max().unwrap_or(0);
    let mean = if deltas.is_empty() {
        0
    } else {
        deltas.iter().sum::<u128>() / deltas.len() as u128
    };
    let block = serde_json::json!({
        "outputs": result.emitted.len(),
        "truncated": result.truncated,
        "deltas_ns": deltas.iter().map(|&d| d as u64).collect::<Vec<_>>(),
        "max_delay_ns": max as u64,
        "mean_delay_ns": mean as u64,
        "peak_mem_estimate_bytes": retained_bytes,
        "primitive_ops": ops_spent,
    });
    eprintln!("{block}");
}

/// Exact set comparison against the oracle; with --limit, the emitted
/// prefix must at least be a duplicate-free subset of the oracle set.
fn oracle_verdict<T: Ord + Clone>(
    emitted: &[T],
    truncated: bool,
    oracle: cutenum::Result<Vec<T>>,
) -> u8 {
    let oracle = match oracle {
        Ok(o) => o,
        Err(cutenum::Error::OracleGuard(..)) => {
            eprintln!("oracle check skipped: instance exceeds the exhaustion guard");
            return EXIT_GUARD;
        }
        Err(e) => {
            eprintln!("oracle failed: {e}");
            return EXIT_MISMATCH;
        }
    };
    let mut got: Vec<T> = emitted.to_vec();
    got.sort();
    got.dedup();
    if got.len() != emitted.len() {
        eprintln!("oracle mismatch: duplicate solutions emitted");
        return EXIT_MISMATCH;
    }
    let mut expected = oracle;
    expected.sort();
    if truncated {
        let ok = got.iter().all(|s| expected.binary_search(s).is_ok());
        if !ok {
            eprintln!("oracle mismatch: emitted a non-solution before the limit");
            return EXIT_MISMATCH;
        }
    } else if got != expected {
        eprintln!(
            "oracle mismatch: emitted {} solutions, oracle found {}",
            got.len(),
            expected.len()
        );
        return EXIT_MISMATCH;
    }
    EXIT_OK
}

fn read_file(path: &PathBuf) -> Result<String, u8> {
    std::fs::read_to_string(path).map_err(|e| {
        eprintln!("cannot read {}: {e}", path.display());
        EXIT_PARSE
    })
}

fn load_graph(cli: &Cli) -> Result<Graph, u8> {
    let path = cli.graph.as_ref().ok_or_else(|| {
        eprintln!("--graph is required for mode {:?}", cli.mode);
        EXIT_PARSE
    })?;
    let g = Graph::parse(&read_file(path)?).map_err(|e| {
        eprintln!("graph parse error: {e}");
        EXIT_PARSE
    })?;
    if !g.is_connected() {
        eprintln!("input graph is disconnected; split it into components first");
        return Err(EXIT_PARSE);
    }
    Ok(g)
}

fn parse_pairs(text: &str, g: &Graph) -> Result<PairTerminals, u8> {
    let mut pairs = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            eprintln!("terminal pair line must hold two ids: {line:?}");
            return Err(EXIT_PARSE);
        }
        let parse = |t: &str| -> Result<u32, u8> {
            t.parse().map_err(|_| {
                eprintln!("invalid terminal id {t:?}");
                EXIT_PARSE
            })
        };
        pairs.push((parse(toks[0])?, parse(toks[1])?));
    }
    let spec = PairTerminals::new(pairs).map_err(|e| {
        eprintln!("terminal spec error: {e}");
        EXIT_PARSE
    })?;
    spec.validate_for(g).map_err(|e| {
        eprintln!("terminal spec error: {e}");
        EXIT_PARSE
    })?;
    Ok(spec)
}

fn parse_ordered(text: &str, g: &Graph) -> Result<OrderedTerminals, u8> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let line = lines.next().ok_or_else(|| {
        eprintln!("terminal file is empty; expected one line of terminal ids");
        EXIT_PARSE
    })?;
    if lines.next().is_some() {
        eprintln!("multiway terminal file must hold a single line");
        return Err(EXIT_PARSE);
    }
    let mut order = Vec::new();
    for tok in line.split_whitespace() {
        order.push(tok.parse().map_err(|_| {
            eprintln!("invalid terminal id {tok:?}");
            EXIT_PARSE
        })?);
    }
    if order.is_empty() {
        eprintln!("at least one terminal is required");
        return Err(EXIT_PARSE);
    }
    let spec = OrderedTerminals::new(order).map_err(|e| {
        eprintln!("terminal spec error: {e}");
        EXIT_PARSE
    })?;
    spec.validate_for(g).map_err(|e| {
        eprintln!("terminal spec error: {e}");
        EXIT_PARSE
    })?;
    Ok(spec)
}

fn enumeration_error(e: cutenum::Error) -> u8 {
    eprintln!("cannot start enumeration: {e}");
    EXIT_PARSE
}

fn run(cli: &Cli) -> Result<u8, u8> {
    if cli.mode == Mode::SteinerCheck {
        return run_steiner_check(cli);
    }
    let g = load_graph(cli)?;
    let terminal_text = read_file(&cli.terminals)?;
    let ops_before = metrics::primitive_ops();

    match cli.mode {
        Mode::NodeMulticut => {
            let pairs = parse_pairs(&terminal_text, &g)?;
            let mut stream = multicut::enumerate_minimal_node_multicuts(&g, &pairs)
                .map_err(enumeration_error)?;
            let result = drive(&mut stream, cli).map_err(|_| EXIT_PARSE)?;
            if cli.stats {
                report_stats(
                    &result,
                    stream.retained_bytes_estimate(),
                    metrics::primitive_ops() - ops_before,
                );
            }
            if stream.is_infeasible() {
                return Ok(EXIT_INFEASIBLE);
            }
            if cli.oracle_check {
                return Ok(oracle_verdict(
                    &result.emitted,
                    result.truncated,
                    oracle::brute_force_minimal_node_multicuts(&g, &pairs),
                ));
            }
            Ok(EXIT_OK)
        }
        Mode::EdgeMulticut => {
            let pairs = parse_pairs(&terminal_text, &g)?;
            let mut stream = multicut::enumerate_minimal_edge_multicuts(&g, &pairs)
                .map_err(enumeration_error)?;
            let result = drive(&mut stream, cli).map_err(|_| EXIT_PARSE)?;
            if cli.stats {
                report_stats(
                    &result,
                    stream.retained_bytes_estimate(),
                    metrics::primitive_ops() - ops_before,
                );
            }
            if cli.oracle_check {
                return Ok(oracle_verdict(
                    &result.emitted,
                    result.truncated,
                    oracle::brute_force_minimal_edge_multicuts(&g, &pairs),
                ));
            }
            Ok(EXIT_OK)
        }
        Mode::NodeMultiway => {
            let spec = parse_ordered(&terminal_text, &g)?;
            let mut stream = multiway_node::enumerate_minimal_node_multiway(&g, &spec)
                .map_err(enumeration_error)?;
            let result = drive(&mut stream, cli).map_err(|_| EXIT_PARSE)?;
            if cli.stats {
                report_stats(
                    &result,
                    stream.retained_bytes_estimate(),
                    metrics::primitive_ops() - ops_before,
                );
            }
            if stream.is_infeasible() {
                return Ok(EXIT_INFEASIBLE);
            }
            if cli.oracle_check {
                return Ok(oracle_verdict(
                    &result.emitted,
                    result.truncated,
                    oracle::brute_force_minimal_node_multiway(&g, &spec),
                ));
            }
            Ok(EXIT_OK)
        }
        Mode::EdgeMultiway => {
            let spec = parse_ordered(&terminal_text, &g)?;
            let mut stream = multiway_edge::enumerate_minimal_edge_multiway(&g, &spec)
                .map_err(enumeration_error)?;
            let result = drive(&mut stream, cli).map_err(|_| EXIT_PARSE)?;
            if cli.stats {
                report_stats(
                    &result,
                    stream.retained_bytes_estimate(),
                    metrics::primitive_ops() - ops_before,
                );
            }
            if cli.oracle_check {
                return Ok(oracle_verdict(
                    &result.emitted,
                    result.truncated,
                    oracle::brute_force_minimal_edge_multiway(&g, &spec),
                ));
            }
            Ok(EXIT_OK)
        }
        Mode::SteinerCheck => unreachable!("handled above"),
    }
}

/// Steiner-check mode: read a hypergraph, enumerate its minimal
/// transversals, and verify they coincide with the minimal Steiner node
/// multicuts of the derived split graph. Prints the transversals.
fn run_steiner_check(cli: &Cli) -> Result<u8, u8> {
    let text = read_file(&cli.terminals)?;
    let h = steiner::Hypergraph::parse(&text).map_err(|e| {
        eprintln!("hypergraph parse error: {e}");
        EXIT_PARSE
    })?;
    let transversals = match steiner::minimal_transversals_brute(&h) {
        Ok(t) => t,
        Err(cutenum::Error::OracleGuard(..)) => {
            eprintln!("hypergraph exceeds the exhaustion guard");
            return Ok(EXIT_GUARD);
        }
        Err(e) => {
            eprintln!("transversal enumeration failed: {e}");
            return Err(EXIT_PARSE);
        }
    };
    let result = drive(transversals.into_iter(), cli).map_err(|_| EXIT_PARSE)?;
    if cli.stats {
        report_stats(&result, 0, 0);
    }
    match steiner::cross_check_transversal_duality(&h) {
        Ok(true) => Ok(EXIT_OK),
        Ok(false) => {
            eprintln!("duality mismatch: transversals and Steiner multicuts differ");
            Ok(EXIT_MISMATCH)
        }
        Err(cutenum::Error::OracleGuard(..)) => {
            eprintln!("split graph exceeds the exhaustion guard");
            Ok(EXIT_GUARD)
        }
        Err(e) => {
            eprintln!("duality check failed: {e}");
            Err(EXIT_PARSE)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // Usage/help requests are not parse failures.
            return if e.use_stderr() {
                ExitCode::from(EXIT_PARSE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(code) | Err(code) => ExitCode::from(code),
    }
}
