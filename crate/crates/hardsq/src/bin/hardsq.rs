use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hardsq::json::{complex_cells, ApexGraphJson, CriticalDump, MorseJson};
use hardsq::{export, instance, join, parallel, parse_field, report, table, verify, Config, Error, Method, Result};
use hardsq_core::{classify_regime, f_vector, Apex, Field};

/// Homology of spaces of non-overlapping labeled squares on a board.
#[derive(Parser)]
#[command(name = "hardsq", version)]
struct Cli {
    /// TOML file with `threads`, `cell-cap`, `flow-budget`.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Worker threads (0 = all cores); overrides config and HARDSQ_THREADS.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Cell cap; overrides config and HARDSQ_CELL_CAP.
    #[arg(long, global = true)]
    cell_cap: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone, Copy)]
struct Inst {
    /// Number of squares.
    #[arg(long)]
    n: usize,
    /// Board width.
    #[arg(long)]
    p: usize,
    /// Board height.
    #[arg(long)]
    q: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    VertexList,
    ComplexJson,
}

#[derive(Subcommand)]
enum Command {
    /// Betti numbers and regime labels.
    Betti {
        #[command(flatten)]
        inst: Inst,
        /// gf2, gf<prime> or rational.
        #[arg(long, default_value = "gf2")]
        field: String,
        /// morse, direct or restrict.
        #[arg(long, default_value = "morse")]
        method: String,
    },
    /// Cell counts by dimension.
    Fvector {
        #[command(flatten)]
        inst: Inst,
    },
    /// Critical cell counts by dimension.
    Critical {
        #[command(flatten)]
        inst: Inst,
        /// Write the critical cells as JSON.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Re-verify a critical-cell dump.
    CheckDump { file: PathBuf },
    /// Betti table as CSV for 2 <= p <= q <= n <= max-n.
    Table {
        #[arg(long)]
        max_n: usize,
        /// Comma-separated coefficient fields.
        #[arg(long, value_delimiter = ',', default_value = "gf2")]
        fields: Vec<String>,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Vertex list or full complex dump.
    Export {
        #[command(flatten)]
        inst: Inst,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Morse complex as JSON.
    Morse {
        #[command(flatten)]
        inst: Inst,
    },
    /// Apex graph of one apex as JSON.
    Inspect {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        /// Corners in label order, e.g. "1,2 2,1".
        #[arg(long)]
        corners: String,
    },
    /// Morse route against the direct oracle and audits.
    Oracle {
        #[command(flatten)]
        inst: Inst,
        #[arg(long, default_value = "gf2")]
        field: String,
        #[arg(long)]
        json: bool,
    },
    /// Invariant suites.
    Verify {
        #[command(flatten)]
        inst: Inst,
        /// Add acyclicity and direct-homology checks.
        #[arg(long)]
        deep: bool,
        #[arg(long)]
        json: bool,
    },
}

fn output(path: Option<&PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn parse_corners(s: &str) -> Result<Vec<(u8, u8)>> {
    s.split_whitespace()
        .map(|pair| {
            let (c, r) = pair
                .split_once(',')
                .ok_or_else(|| Error::Invalid(format!("corner {pair:?} is not col,row")))?;
            let parse = |x: &str| x.parse::<u8>().map_err(|_| Error::Invalid(format!("bad coordinate {x:?}")));
            Ok((parse(c)?, parse(r)?))
        })
        .collect()
}

fn run(cli: Cli) -> Result<bool> {
    let mut config = Config::load(cli.config.as_deref())?;
    if let Some(t) = cli.threads {
        config.threads = (t > 0).then_some(t);
    }
    if let Some(c) = cli.cell_cap {
        config.cell_cap = c;
    }
    let mut out = io::stdout().lock();
    match cli.command {
        Command::Betti { inst, field, method } => {
            let board = instance(inst.n, inst.p, inst.q)?;
            let field = parse_field(&field)?;
            let method: Method = method.parse()?;
            if inst.n > board.area() {
                eprintln!("note: n > pq, the complex is empty");
            }
            let betti = parallel::betti(inst.n, board, field, method, &config)?;
            writeln!(out, "{}", join(betti.values()))?;
            writeln!(out, "regimes: {}", join(classify_regime(inst.n, &betti)))?;
        }
        Command::Fvector { inst } => {
            let board = instance(inst.n, inst.p, inst.q)?;
            writeln!(out, "{}", join(f_vector(inst.n, board).counts()))?;
        }
        Command::Critical { inst, dump } => {
            let board = instance(inst.n, inst.p, inst.q)?;
            let d = CriticalDump::new(inst.n, board);
            writeln!(out, "{}", join(&d.counts))?;
            if let Some(path) = dump {
                let mut w = BufWriter::new(File::create(path)?);
                serde_json::to_writer_pretty(&mut w, &d)?;
                writeln!(w)?;
            }
        }
        Command::CheckDump { file } => {
            let d: CriticalDump = serde_json::from_reader(io::BufReader::new(File::open(file)?))?;
            d.verify()?;
            writeln!(out, "ok: {} critical cells", d.cells.len())?;
        }
        Command::Table { max_n, fields, out: path } => {
            let fields = fields.iter().map(|f| parse_field(f)).collect::<Result<Vec<Field>>>()?;
            if max_n < 2 {
                eprintln!("warning: --max-n {max_n} < 2, the table has no rows");
            }
            if max_n > hardsq_core::MAX_PIECES {
                return Err(Error::Invalid(format!("--max-n {max_n} exceeds {}", hardsq_core::MAX_PIECES)));
            }
            let rows = table::compute(max_n, &fields, &config)?;
            for (n, p, q) in table::field_disagreements(&rows) {
                eprintln!("warning: ({n};{p},{q}) differs between fields (torsion)");
            }
            table::write_csv(&rows, fields.len() > 1, output(path.as_ref())?)?;
        }
        Command::Export { inst, format, out: path } => {
            let board = instance(inst.n, inst.p, inst.q)?;
            match format {
                Format::VertexList => {
                    export::write_vertex_list(inst.n, board, config.cell_cap, output(path.as_ref())?)?;
                }
                Format::ComplexJson => {
                    let cells = complex_cells(inst.n, board, config.cell_cap)?;
                    let mut w = output(path.as_ref())?;
                    serde_json::to_writer(&mut w, &cells)?;
                    writeln!(w)?;
                    w.flush()?;
                }
            }
        }
        Command::Morse { inst } => {
            let board = instance(inst.n, inst.p, inst.q)?;
            let m = config
                .thread_pool()?
                .install(|| parallel::morse_complex(inst.n, board, &config.morse()))?;
            serde_json::to_writer(&mut out, &MorseJson::new(&m))?;
            writeln!(out)?;
        }
        Command::Inspect { p, q, corners } => {
            let corners = parse_corners(&corners)?;
            let board = instance(corners.len(), p, q)?;
            let apex = Apex::new(board, &corners)?;
            if !apex.fits(board) {
                return Err(Error::Invalid("a corner lies off the board".into()));
            }
            serde_json::to_writer_pretty(&mut out, &ApexGraphJson::new(&apex))?;
            writeln!(out)?;
        }
        Command::Oracle { inst, field, json } => {
            let board = instance(inst.n, inst.p, inst.q)?;
            let r = report::oracle_report(inst.n, board, parse_field(&field)?, &config)?;
            if json {
                serde_json::to_writer_pretty(&mut out, &r)?;
                writeln!(out)?;
            } else {
                write!(out, "{}", r.to_text())?;
            }
            return Ok(r.passed());
        }
        Command::Verify { inst, deep, json } => {
            let board = instance(inst.n, inst.p, inst.q)?;
            let r = verify::verify(inst.n, board, deep, &config)?;
            if json {
                serde_json::to_writer_pretty(&mut out, &r)?;
                writeln!(out)?;
            } else {
                write!(out, "{}", r.to_text())?;
            }
            return Ok(r.passed());
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("hardsq: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
