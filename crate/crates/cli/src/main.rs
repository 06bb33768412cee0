use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gsatlas::cache::{load_or_compute, write_orbits};
use gsatlas::graph::read_graph6;
use gsatlas::invariants::PauliBasis;
use gsatlas::oracle::{verify, LcMap, MeasurementRule, VerifyOptions};
use gsatlas::{
    emit_rows, emit_table, enumerate_connected, enumerate_orbits, from_graph6, read_json_table,
    to_graph6, Atlas, ClassifyOptions, Error, Graph, OrbitRecord, TableFormat, TableRow,
};
use serde::Serialize;

/// Local-complementation classes of connected graph states.
#[derive(Parser, Debug)]
#[command(name = "gsatlas", version)]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Directory for the orbit cache; no caching when unset.
    #[arg(long, global = true, env = "GSATLAS_CACHE")]
    cache_dir: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Connected graphs up to isomorphism, one graph6 per line.
    Enumerate {
        #[arg(short)]
        n: usize,
    },
    /// LC orbits; graph6 output is the orbit cache format.
    Orbits {
        #[arg(short)]
        n: usize,
    },
    /// The numbered class table.
    Classify {
        #[arg(short)]
        n: usize,
        /// Skip the edge/vertex-rule tightening of the bounds.
        #[arg(long)]
        no_propagation: bool,
    },
    /// Class of each graph6 argument, or of each line on stdin.
    Lookup {
        graphs: Vec<String>,
        #[arg(long)]
        no_propagation: bool,
    },
    /// Re-renders a JSON table written by `classify --format json`.
    Table {
        /// Input file; stdin when absent or `-`.
        input: Option<PathBuf>,
    },
    /// Runs the state-vector oracle checks up to `n` qubits.
    Verify {
        #[arg(short)]
        n: usize,
        /// Random graphs per size above the exhaustive range.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, hide = true, value_enum)]
        inject_fault: Option<Fault>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Graph6,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Fault {
    /// Drop the sign of `Z -> -Y` in the LC map.
    LcSign,
    /// Treat `Y` measurements like `Z`.
    MeasureRule,
}

enum Failure {
    Usage(String),
    Verification,
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification => 1,
            Failure::Usage(_) => 2,
            Failure::Internal(_) => 3,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Partition(_)
            | Error::InconsistentBounds(_)
            | Error::Oracle(_)
            | Error::Cache(_) => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("gsatlas: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .expect("global thread pool is configured once");
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Usage(msg) | Failure::Internal(msg) => eprintln!("gsatlas: {msg}"),
                Failure::Verification => eprintln!("gsatlas: verification failed"),
            }
            ExitCode::from(f.code())
        }
    }
}

fn run(cli: &Cli) -> CmdResult {
    let mut out: Box<dyn Write> = match &cli.output {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let result = dispatch(cli, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Err(f), _) => Err(f),
        (Ok(()), Err(e)) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        (Ok(()), r) => Ok(r?),
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> CmdResult {
    let cache = cli.cache_dir.as_deref();
    match &cli.command {
        Command::Enumerate { n } => {
            let graphs = enumerate_connected(*n)?;
            match cli.format.unwrap_or(Format::Graph6) {
                Format::Graph6 => graphs.iter().try_for_each(|g| writeln!(out, "{g}"))?,
                Format::Csv => {
                    writeln!(out, "graph6,edges")?;
                    for g in &graphs {
                        writeln!(out, "{g},{}", g.edge_count())?;
                    }
                }
                Format::Json => {
                    let list: Vec<String> = graphs.iter().map(to_graph6).collect();
                    write_json(out, &list)?;
                }
            }
        }
        Command::Orbits { n } => {
            let orbits = orbits(cache, *n)?;
            match cli.format.unwrap_or(Format::Graph6) {
                Format::Graph6 => write_orbits(&mut *out, *n, &orbits)?,
                Format::Csv => {
                    writeln!(out, "representative,lc,edges,max_degree")?;
                    for o in &orbits {
                        let r = &o.representative;
                        writeln!(
                            out,
                            "{r},{},{},{}",
                            o.lc_size(),
                            r.edge_count(),
                            r.max_degree()
                        )?;
                    }
                }
                Format::Json => {
                    let list: Vec<JsonOrbit> = orbits.iter().map(JsonOrbit::from).collect();
                    write_json(out, &serde_json::json!({ "n": n, "orbits": list }))?;
                }
            }
        }
        Command::Classify { n, no_propagation } => {
            let atlas = build_atlas(cache, *n, *no_propagation)?;
            let records = atlas.classes(*n)?;
            match cli.format.unwrap_or(Format::Csv) {
                Format::Graph6 => records
                    .iter()
                    .try_for_each(|r| writeln!(out, "{}", r.representative))?,
                Format::Csv => emit_table(records, TableFormat::Csv, &mut *out)?,
                Format::Json => emit_table(records, TableFormat::Json, &mut *out)?,
            }
        }
        Command::Lookup {
            graphs,
            no_propagation,
        } => lookup(cli.format, cache, graphs, *no_propagation, out)?,
        Command::Table { input } => {
            let (n, rows) = match input.as_deref() {
                None => read_json_table(io::stdin().lock())?,
                Some(p) if p == Path::new("-") => read_json_table(io::stdin().lock())?,
                Some(p) => read_json_table(BufReader::new(File::open(p)?))?,
            };
            match cli.format.unwrap_or(Format::Csv) {
                Format::Graph6 => rows
                    .iter()
                    .try_for_each(|r| writeln!(out, "{}", r.representative))?,
                Format::Csv => emit_rows(n, &rows, TableFormat::Csv, &mut *out)?,
                Format::Json => emit_rows(n, &rows, TableFormat::Json, &mut *out)?,
            }
        }
        Command::Verify {
            n,
            samples,
            inject_fault,
        } => {
            let as_z = |g: &Graph, v: usize, b: PauliBasis| -> gsatlas::Result<Vec<Graph>> {
                let b = if b == PauliBasis::Y { PauliBasis::Z } else { b };
                gsatlas::oracle::standard_rule(g, v, b)
            };
            let rule: &MeasurementRule = if *inject_fault == Some(Fault::MeasureRule) {
                &as_z
            } else {
                &gsatlas::oracle::standard_rule
            };
            let opts = VerifyOptions {
                lc_map: if *inject_fault == Some(Fault::LcSign) {
                    LcMap::SIGN_FLIPPED
                } else {
                    LcMap::STANDARD
                },
                rule,
                samples: *samples,
                ..VerifyOptions::default()
            };
            let report = verify(*n, &opts)?;
            match cli.format {
                Some(Format::Json) => write_json(out, &report)?,
                None => write!(out, "{report}")?,
                Some(f) => return Err(Failure::Usage(format!("verify cannot write {f:?}"))),
            }
            out.flush()?;
            if !report.passed() {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn write_json<T: Serialize + ?Sized>(out: &mut dyn Write, value: &T) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

fn orbits(cache: Option<&Path>, n: usize) -> Result<Vec<OrbitRecord>, Error> {
    match cache {
        Some(dir) => load_or_compute(dir, n).map(|(o, _)| o),
        None => enumerate_orbits(n),
    }
}

fn build_atlas(cache: Option<&Path>, n: usize, no_propagation: bool) -> Result<Atlas, Error> {
    let opts = ClassifyOptions {
        propagate: !no_propagation,
    };
    Atlas::build_with(n, opts, |k| orbits(cache, k))
}

#[derive(Serialize)]
struct JsonOrbit {
    representative: String,
    lc: usize,
    edges: usize,
    members: Vec<String>,
}

impl From<&OrbitRecord> for JsonOrbit {
    fn from(o: &OrbitRecord) -> Self {
        JsonOrbit {
            representative: to_graph6(&o.representative),
            lc: o.lc_size(),
            edges: o.min_edges(),
            members: o.member_graphs().map(|g| to_graph6(&g)).collect(),
        }
    }
}

#[derive(Serialize)]
struct LookupRow {
    input: String,
    n: usize,
    #[serde(flatten)]
    class: TableRow,
}

fn lookup(
    format: Option<Format>,
    cache: Option<&Path>,
    args: &[String],
    no_propagation: bool,
    out: &mut dyn Write,
) -> CmdResult {
    let inputs: Vec<(String, Graph)> = if args.is_empty() || args == ["-"] {
        let mut text = String::new();
        io::Read::read_to_string(&mut io::stdin().lock(), &mut text)?;
        let graphs = read_graph6(text.as_bytes())?;
        text.lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(String::from)
            .zip(graphs)
            .collect()
    } else {
        args.iter()
            .map(|s| Ok((s.clone(), from_graph6(s)?)))
            .collect::<Result<_, Error>>()?
    };
    if inputs.is_empty() {
        return Err(Failure::Usage("no graphs given".into()));
    }
    for (s, g) in &inputs {
        if !g.is_connected() {
            return Err(Failure::Usage(format!("{s}: graph is not connected")));
        }
    }
    let max_n = inputs.iter().map(|(_, g)| g.n()).max().unwrap_or(0);
    let atlas = build_atlas(cache, max_n, no_propagation)?;
    let mut rows = Vec::with_capacity(inputs.len());
    for (s, g) in inputs {
        let record = atlas
            .lookup(&g)
            .map_err(|e| Failure::Usage(format!("{s}: {e}")))?;
        rows.push(LookupRow {
            input: s,
            n: g.n(),
            class: TableRow::from(record),
        });
    }
    match format.unwrap_or(Format::Csv) {
        Format::Graph6 => rows
            .iter()
            .try_for_each(|r| writeln!(out, "{}", r.class.representative))?,
        Format::Csv => {
            writeln!(out, "input,n,no,lc,edges,es,twocol,representative")?;
            for r in &rows {
                let c = &r.class;
                let twocol = if c.two_colorable { "yes" } else { "no" };
                writeln!(
                    out,
                    "{},{},{},{},{},{},{twocol},{}",
                    r.input,
                    r.n,
                    c.no,
                    c.lc,
                    c.edges,
                    c.es(),
                    c.representative
                )?;
            }
        }
        Format::Json => write_json(out, &rows)?,
    }
    Ok(())
}
