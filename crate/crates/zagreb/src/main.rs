//! Command-line front end: exact index computation, named constructions,
//! cut-edge analysis, enumeration, and exhaustive verification, with
//! machine-readable output.
//!
//! Exit codes: 0 on success (and all checks passing), 1 when a verification
//! run completes but some check fails, 2 on usage or input errors.

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use zagreb::{
    c_n_p, c_n_s, complete, cycle, encode_g6, enumerate_class, enumerate_connected, k_n_p,
    k_n_s, lemma_suite, m1, m2, path, pi1, pi2, read_g6, star, verify_all, ClassSpec, Error,
    Graph,
};

/// A library error or a usage mistake specific to the command line; both
/// exit with status 2.
enum CliError {
    Lib(Error),
    Usage(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        CliError::Lib(e)
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

#[derive(Parser)]
#[command(
    name = "zagreb",
    version,
    about = "Exact multiplicative Zagreb indices, extremal constructions, and exhaustive verification for connected graphs with a fixed number of cut edges"
)]
struct Cli {
    /// Worker threads for enumeration and verification (results are
    /// identical for any count).
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    workers: u64,

    /// Output format for report-producing commands.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output to a file instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Compute exact index values for graph6 inputs
    Indices {
        /// Read graph6 lines from a file (default: standard input)
        #[arg(long, value_name = "FILE")]
        input: Option<PathBuf>,
        /// graph6 lines given directly on the command line
        graphs: Vec<String>,
    },
    /// Emit a named construction as graph6
    Construct {
        /// Which family member to build
        #[arg(value_enum)]
        family: Family,
        /// Number of vertices
        #[arg(long)]
        n: usize,
        /// Number of cut edges (class families only)
        #[arg(long)]
        k: Option<usize>,
        /// Also print the graph's index values
        #[arg(long)]
        with_indices: bool,
    },
    /// Find and classify cut edges of graph6 inputs
    Bridges {
        /// Read graph6 lines from a file (default: standard input)
        #[arg(long, value_name = "FILE")]
        input: Option<PathBuf>,
        /// graph6 lines given directly on the command line
        graphs: Vec<String>,
    },
    /// List connected graphs (optionally only those with k cut edges) as
    /// sorted canonical graph6 lines; the count goes to standard error
    Enumerate {
        /// Number of vertices (at most 8)
        #[arg(long)]
        n: usize,
        /// Restrict to graphs with exactly this many cut edges
        #[arg(long)]
        k: Option<usize>,
    },
    /// Exhaustively check the four extremal bounds on every class up to
    /// n-max; exits 1 if any report fails
    Verify {
        /// Largest vertex count to verify (4 to 8)
        #[arg(long)]
        n_max: usize,
    },
    /// Run the inequality direction suites; exits 1 on any violation
    Lemmas {
        /// Seed for the randomized instance generators
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Instances per randomized check
        #[arg(long, default_value_t = 200)]
        trials: usize,
    },
    /// Convert between graph6 and edge lists
    G6 {
        #[command(subcommand)]
        op: G6Op,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Family {
    /// Cycle with k pendent edges at one vertex
    Cns,
    /// Cycle with a k-edge tail (tadpole)
    Cnp,
    /// Complete graph with k pendent edges at one vertex
    Kns,
    /// Complete graph with a k-edge tail
    Knp,
    Path,
    Cycle,
    Star,
    Complete,
}

#[derive(Subcommand)]
enum G6Op {
    /// Encode edge-list lines ("n: u-v u-v ...") as graph6
    Encode {
        /// Read edge-list lines from a file (default: standard input)
        #[arg(long, value_name = "FILE")]
        input: Option<PathBuf>,
        /// Edge-list lines given directly on the command line
        lines: Vec<String>,
    },
    /// Decode graph6 lines to edge lists
    Decode {
        /// Read graph6 lines from a file (default: standard input)
        #[arg(long, value_name = "FILE")]
        input: Option<PathBuf>,
        /// graph6 lines given directly on the command line
        lines: Vec<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.workers as usize)
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match pool.install(|| run(&cli)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, CliError> {
    match &cli.command {
        Command::Indices { input, graphs } => {
            let records: Vec<IndexRecord> = load_graphs(input, graphs)?
                .iter()
                .map(IndexRecord::new)
                .collect();
            emit(cli, &records)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct { family, n, k, with_indices } => {
            let g = build_family(*family, *n, *k)?;
            let mut out = encode_g6(&g)?;
            out.push('\n');
            if *with_indices {
                out.push_str(&IndexRecord::new(&g).to_text());
                out.push('\n');
            }
            write_output(&cli.output, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Bridges { input, graphs } => {
            let records: Vec<BridgeRecord> = load_graphs(input, graphs)?
                .iter()
                .map(BridgeRecord::new)
                .collect::<Result<_, _>>()?;
            emit(cli, &records)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { n, k } => {
            let stream = match k {
                Some(k) => enumerate_class(ClassSpec::new(*n, *k)?)?,
                None => enumerate_connected(*n)?,
            };
            let mut out = String::new();
            for g in &stream {
                out.push_str(&encode_g6(&g)?);
                out.push('\n');
            }
            write_output(&cli.output, &out)?;
            eprintln!("{} graphs", stream.len());
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { n_max } => {
            let summary = verify_all(*n_max)?;
            let rendered = match cli.format {
                Format::Text => summary.to_text(),
                Format::Json => summary.to_json() + "\n",
                Format::Csv => summary.to_csv(),
            };
            write_output(&cli.output, &rendered)?;
            Ok(if summary.all_pass { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::Lemmas { seed, trials } => {
            let report = lemma_suite(*seed, *trials)?;
            let rendered = match cli.format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json() + "\n",
                Format::Csv => report.to_csv(),
            };
            write_output(&cli.output, &rendered)?;
            Ok(if report.all_pass { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::G6 { op } => {
            match op {
                G6Op::Encode { input, lines } => {
                    let text = read_input_text(input, lines)?;
                    let mut out = String::new();
                    for (i, line) in text.lines().enumerate() {
                        if line.trim().is_empty() {
                            continue;
                        }
                        let g = parse_edge_list(line)
                            .map_err(|e| usage(format!("line {}: {e}", i + 1)))?;
                        out.push_str(&encode_g6(&g)?);
                        out.push('\n');
                    }
                    write_output(&cli.output, &out)?;
                }
                G6Op::Decode { input, lines } => {
                    let records: Vec<DecodeRecord> = load_graphs(input, lines)?
                        .iter()
                        .map(DecodeRecord::new)
                        .collect();
                    emit(cli, &records)?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn build_family(family: Family, n: usize, k: Option<usize>) -> Result<Graph, CliError> {
    let class = |k: Option<usize>| -> Result<ClassSpec, CliError> {
        match k {
            Some(k) => Ok(ClassSpec::new(n, k)?),
            None => Err(usage("this family needs --k (the number of cut edges)")),
        }
    };
    match family {
        Family::Cns => Ok(c_n_s(class(k)?)),
        Family::Cnp => Ok(c_n_p(class(k)?)),
        Family::Kns => Ok(k_n_s(class(k)?)),
        Family::Knp => Ok(k_n_p(class(k)?)),
        Family::Path => no_k(k).and_then(|_| Ok(path(n)?)),
        Family::Cycle => no_k(k).and_then(|_| Ok(cycle(n)?)),
        Family::Star => no_k(k).and_then(|_| Ok(star(n)?)),
        Family::Complete => no_k(k).and_then(|_| Ok(complete(n)?)),
    }
}

fn no_k(k: Option<usize>) -> Result<(), CliError> {
    match k {
        None => Ok(()),
        Some(_) => Err(usage(
            "--k applies only to the class families cns, cnp, kns, knp",
        )),
    }
}

/// Reads graph6 records from direct arguments, a file, or standard input.
fn load_graphs(input: &Option<PathBuf>, inline: &[String]) -> Result<Vec<Graph>, CliError> {
    let text = read_input_text(input, inline)?;
    Ok(read_g6(std::io::Cursor::new(text))?)
}

fn read_input_text(input: &Option<PathBuf>, inline: &[String]) -> Result<String, CliError> {
    if !inline.is_empty() {
        if input.is_some() {
            return Err(usage("pass graphs either directly or via --input, not both"));
        }
        return Ok(inline.join("\n"));
    }
    match input {
        Some(path) => Ok(std::fs::read_to_string(path).map_err(Error::from)?),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(Error::from)?;
            Ok(buf)
        }
    }
}

fn write_output(output: &Option<PathBuf>, content: &str) -> Result<(), Error> {
    match output {
        Some(path) => std::fs::write(path, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

/// Edge-list line format: "n: u-v u-v ...", e.g. "4: 0-1 1-2 2-3".
fn parse_edge_list(line: &str) -> Result<Graph, CliError> {
    let bad = || usage(format!("expected \"n: u-v u-v ...\", got {line:?}"));
    let (head, rest) = line.split_once(':').ok_or_else(bad)?;
    let n: usize = head.trim().parse().map_err(|_| bad())?;
    let mut edges = Vec::new();
    for tok in rest.split_whitespace() {
        let (u, v) = tok.split_once('-').ok_or_else(bad)?;
        let u: usize = u.trim().parse().map_err(|_| bad())?;
        let v: usize = v.trim().parse().map_err(|_| bad())?;
        edges.push((u, v));
    }
    Ok(Graph::new(n, &edges)?)
}

#[derive(Serialize)]
struct Records<'a, T: Serialize> {
    schema: u32,
    records: &'a [T],
}

trait Record: Serialize {
    fn to_text(&self) -> String;
    fn csv_header() -> &'static str;
    fn to_csv_row(&self) -> String;
}

fn emit<T: Record>(cli: &Cli, records: &[T]) -> Result<(), Error> {
    let rendered = match cli.format {
        Format::Text => {
            let mut out = String::new();
            for r in records {
                out.push_str(&r.to_text());
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let wrapper = Records { schema: 1, records };
            serde_json::to_string_pretty(&wrapper).expect("record serialization cannot fail")
                + "\n"
        }
        Format::Csv => {
            let mut out = String::from(T::csv_header());
            out.push('\n');
            for r in records {
                out.push_str(&r.to_csv_row());
                out.push('\n');
            }
            out
        }
    };
    write_output(&cli.output, &rendered)
}

#[derive(Serialize)]
struct IndexRecord {
    g6: String,
    n: usize,
    m: usize,
    m1: zagreb::IndexValue,
    m2: zagreb::IndexValue,
    pi1: zagreb::IndexValue,
    pi2: zagreb::IndexValue,
    ln_pi1: f64,
    ln_pi2: f64,
}

impl IndexRecord {
    fn new(g: &Graph) -> IndexRecord {
        let (pi1, pi2) = (pi1(g), pi2(g));
        IndexRecord {
            g6: encode_g6(g).expect("decoded graphs re-encode"),
            n: g.n(),
            m: g.m(),
            m1: m1(g),
            m2: m2(g),
            ln_pi1: pi1.ln(),
            ln_pi2: pi2.ln(),
            pi1,
            pi2,
        }
    }
}

impl Record for IndexRecord {
    fn to_text(&self) -> String {
        format!(
            "g6={} n={} m={} m1={} m2={} pi1={} pi2={} ln_pi1={:.6} ln_pi2={:.6}",
            self.g6, self.n, self.m, self.m1, self.m2, self.pi1, self.pi2, self.ln_pi1,
            self.ln_pi2
        )
    }

    fn csv_header() -> &'static str {
        "g6,n,m,m1,m2,pi1,pi2,ln_pi1,ln_pi2"
    }

    fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{:.6},{:.6}",
            self.g6, self.n, self.m, self.m1, self.m2, self.pi1, self.pi2, self.ln_pi1,
            self.ln_pi2
        )
    }
}

#[derive(Serialize)]
struct BridgeRecord {
    g6: String,
    n: usize,
    m: usize,
    bridge_count: usize,
    pendent: Vec<(usize, usize)>,
    internal: Vec<(usize, usize)>,
    blocks: Vec<Vec<usize>>,
}

impl BridgeRecord {
    fn new(g: &Graph) -> Result<BridgeRecord, Error> {
        let report = g.classify_cut_edges()?;
        Ok(BridgeRecord {
            g6: encode_g6(g).expect("decoded graphs re-encode"),
            n: g.n(),
            m: g.m(),
            bridge_count: report.bridges.len(),
            pendent: report.pendent,
            internal: report.internal,
            blocks: report.blocks,
        })
    }
}

fn join_edges(edges: &[(usize, usize)]) -> String {
    edges
        .iter()
        .map(|(u, v)| format!("{u}-{v}"))
        .collect::<Vec<_>>()
        .join(";")
}

impl Record for BridgeRecord {
    fn to_text(&self) -> String {
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                b.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("+")
            })
            .collect::<Vec<_>>()
            .join(";");
        format!(
            "g6={} n={} m={} bridges={} pendent={} internal={} blocks={}",
            self.g6,
            self.n,
            self.m,
            self.bridge_count,
            join_edges(&self.pendent),
            join_edges(&self.internal),
            blocks
        )
    }

    fn csv_header() -> &'static str {
        "g6,n,m,bridge_count,pendent,internal,blocks"
    }

    fn to_csv_row(&self) -> String {
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                b.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("+")
            })
            .collect::<Vec<_>>()
            .join(";");
        format!(
            "{},{},{},{},{},{},{}",
            self.g6,
            self.n,
            self.m,
            self.bridge_count,
            join_edges(&self.pendent),
            join_edges(&self.internal),
            blocks
        )
    }
}

#[derive(Serialize)]
struct DecodeRecord {
    g6: String,
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl DecodeRecord {
    fn new(g: &Graph) -> DecodeRecord {
        DecodeRecord {
            g6: encode_g6(g).expect("decoded graphs re-encode"),
            n: g.n(),
            edges: g.edges(),
        }
    }
}

impl Record for DecodeRecord {
    /// Text form round-trips through `g6 encode`.
    fn to_text(&self) -> String {
        let edges = self
            .edges
            .iter()
            .map(|(u, v)| format!("{u}-{v}"))
            .collect::<Vec<_>>()
            .join(" ");
        if edges.is_empty() {
            format!("{}:", self.n)
        } else {
            format!("{}: {}", self.n, edges)
        }
    }

    fn csv_header() -> &'static str {
        "g6,n,m,edges"
    }

    fn to_csv_row(&self) -> String {
        format!("{},{},{},{}", self.g6, self.n, self.edges.len(), join_edges(&self.edges))
    }
}
