use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ptabkit::checks::{run_checks, Suite};
use ptabkit::crystal::{to_extreme, CrystalOpSequence, Direction, Extreme};
use ptabkit::duality::{bw_in, from_matrix, to_matrix};
use ptabkit::graph::{explore, ExportFormat, DEFAULT_LIMIT};
use ptabkit::rsk::{ptab_rsk_stages, RskStage, TraceStep};
use ptabkit::{
    bw, classic_rsk, dual_ptab, dual_ptab_in, e_star_sequence, evacuate, lusztig, perf, ptab_rsk, rot, rsk_inverse,
    Biword, Error, IntMatrix, LusztigMethod, Ptableau, RskPair, Word,
};

mod input;

use input::{read_blocks, Input, Kind};

#[derive(Parser)]
#[command(name = "ptabkit", version, about = "Perforated tableaux, their crystals, and RSK")]
struct Cli {
    #[command(flatten)]
    io: IoArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct IoArgs {
    /// Read input from this file instead of stdin.
    #[arg(short, long, global = true)]
    input: Option<PathBuf>,
    /// Write output to this file instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Force the input kind instead of guessing it.
    #[arg(long = "as", value_enum, global = true)]
    kind: Option<Kind>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Ptableau RSK: a ptableau or biword to (PT, Tmax).
    Rsk {
        /// Print every insertion with its decrements.
        #[arg(long)]
        trace: bool,
    },
    /// Classic column-insertion RSK: a biword to (P, Q).
    ClassicRsk,
    /// Inverse RSK: two blocks PT and Tmax to the original ptableau.
    Unrsk,
    /// Raise to the highest weight and print the path.
    Hw,
    /// Lower to the lowest weight and print the path.
    Lw,
    /// Dual ptableau or dual biword.
    Dual {
        /// Number of rows in the dual (defaults to the largest content).
        #[arg(long)]
        m: Option<usize>,
    },
    /// Rotation with content complement in [m].
    Rot {
        #[arg(long)]
        m: Option<usize>,
    },
    /// Biword to ptableau.
    Perf,
    /// Ptableau to biword.
    Bw {
        #[arg(long)]
        m: Option<usize>,
    },
    /// Biword or ptableau to its matrix, or a matrix (with --as matrix) to its biword.
    Matrix,
    /// Evacuation of a highest-weight ptableau.
    Evac,
    /// Lusztig involution.
    Lus {
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Apply crystal operators, first listed first.
    Apply {
        #[arg(long, allow_hyphen_values = true)]
        ops: String,
    },
    /// Closed-form raising path from PT to its highest weight.
    Estar,
    /// Whole crystal component containing the input.
    Graph {
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
        #[arg(long, env = "PTABKIT_LIMIT", default_value_t = DEFAULT_LIMIT)]
        limit: usize,
    },
    /// Randomized property suites.
    Check {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Uninsert,
    Estar,
    Both,
}

impl From<Method> for LusztigMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::Uninsert => LusztigMethod::Uninsert,
            Method::Estar => LusztigMethod::EStar,
            Method::Both => LusztigMethod::Both,
        }
    }
}

enum Failure {
    Domain(&'static str, Error),
    Parse(Error),
    Usage(String),
    Check(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

fn domain<T>(op: &'static str, r: ptabkit::Result<T>) -> Outcome<T> {
    r.map_err(|e| if e.is_parse() { Failure::Parse(e) } else { Failure::Domain(op, e) })
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

fn emit_ptab(t: &Ptableau, format: Format) -> String {
    match format {
        Format::Text => t.to_string(),
        Format::Json => json(t),
    }
}

fn emit_biword(b: &Biword, format: Format) -> String {
    match format {
        Format::Text => b.to_string(),
        Format::Json => json(b),
    }
}

fn need_ptab(input: Input) -> Outcome<Ptableau> {
    match input {
        Input::Ptab(t) => Ok(t),
        Input::Biword(b) => Ok(perf(&b)),
        other => Err(Failure::Usage(format!("expected a ptableau or biword, got a {}", other.kind_name()))),
    }
}

fn need_biword(input: Input) -> Outcome<Biword> {
    match input {
        Input::Biword(b) => Ok(b),
        Input::Ptab(t) => Ok(bw(&t)),
        Input::Matrix(m) => Ok(from_matrix(&m)),
        other => Err(Failure::Usage(format!("expected a biword, got a {}", other.kind_name()))),
    }
}

fn trace_text(stages: &[RskStage]) -> String {
    let mut out = Vec::new();
    for (k, stage) in stages.iter().enumerate() {
        let mut line = format!("{:>3}  insert [{}]_{}", k + 1, stage.content, stage.row);
        for step in &stage.trace.steps {
            match step {
                TraceStep::Decrement { cell, from, to } => line.push_str(&format!("  {from}->{to} in row {}", cell.row)),
                TraceStep::Terminal { eta } => line.push_str(&format!("  eta {eta}")),
                TraceStep::Insert { .. } => {}
            }
        }
        out.push(line);
    }
    out.join("\n")
}

fn pair_text(a: &str, x: &Ptableau, b: &str, y: &Ptableau) -> String {
    format!("{a}\n{x}\n\n{b}\n{y}")
}

/// Greedy extreme for words, smallest index first.
fn word_extreme(w: &Word, dir: Direction) -> (Word, CrystalOpSequence) {
    let mut cur = w.clone();
    let mut seq = CrystalOpSequence::new();
    'outer: loop {
        for i in 1..cur.n() {
            if let Some(next) = cur.apply(i, dir).expect("index in range") {
                cur = next;
                seq.push(i, dir, 1);
                continue 'outer;
            }
        }
        return (cur, seq);
    }
}

fn path_line(seq: &CrystalOpSequence) -> String {
    if seq.is_empty() {
        "path:".to_string()
    } else {
        format!("path: {seq}")
    }
}

fn extreme(input: Input, target: Extreme, format: Format) -> Outcome<String> {
    let dir = match target {
        Extreme::Highest => Direction::Raise,
        Extreme::Lowest => Direction::Lower,
    };
    let (text, value, seq) = match input {
        Input::Ptab(t) => {
            let (x, seq) = to_extreme(&t, target);
            (x.to_string(), serde_json::to_value(&x).unwrap(), seq)
        }
        Input::Biword(b) => {
            let (x, seq) = to_extreme(&perf(&b), target);
            let out = domain("bw", bw_in(&x, b.m()))?;
            let out = domain("bw", out.with_alphabets(b.m(), b.n()))?;
            (format!("{out}\neta: {}", Word::new(out.bottom().to_vec(), b.n()).unwrap()), serde_json::to_value(&out).unwrap(), seq)
        }
        Input::Word(w) => {
            let (x, seq) = word_extreme(&w, dir);
            (x.to_string(), serde_json::to_value(&x).unwrap(), seq)
        }
        Input::Matrix(_) => return Err(Failure::Usage("hw/lw expect a ptableau, biword or word".into())),
        Input::Pair(..) => unreachable!("pairs are only read by unrsk"),
    };
    Ok(match format {
        Format::Text => format!("{text}\n{}", path_line(&seq)),
        Format::Json => json(&serde_json::json!({ "node": value, "path": seq.to_string() })),
    })
}

fn run(cli: Cli) -> Outcome<String> {
    let format = cli.io.format;
    let command = cli.command;
    if let Command::Check { seed, count, suite } = &command {
        let suite: Suite = suite.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
        let mut rng = ChaCha8Rng::seed_from_u64(*seed);
        let report = run_checks(&mut rng, *count, suite);
        return match report.failure {
            None => Ok(match format {
                Format::Text => format!("ok: {} instances, {} property checks", report.instances, report.checks),
                Format::Json => json(&serde_json::json!({ "ok": true, "instances": report.instances, "checks": report.checks })),
            }),
            Some(f) => Err(Failure::Check(format!("instance {} of {count} (seed {seed})\n{f}", report.instances))),
        };
    }

    let text = match &cli.io.input {
        Some(path) => fs::read_to_string(path)?,
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
    };

    if let Command::Unrsk = command {
        let pair = match read_blocks(&text, cli.io.kind).map_err(Failure::Parse)? {
            Input::Pair(pt, tmax) => RskPair { pt, tmax },
            other => return Err(Failure::Usage(format!("unrsk expects two ptableau blocks, got a {}", other.kind_name()))),
        };
        return Ok(emit_ptab(&domain("unrsk", rsk_inverse(&pair))?, format));
    }

    let input = Input::detect(&text, cli.io.kind).map_err(Failure::Parse)?;
    Ok(match command {
        Command::Rsk { trace } => {
            let t = need_ptab(input)?;
            let stages = ptab_rsk_stages(&t);
            let pair = ptab_rsk(&t);
            match (format, trace) {
                (Format::Json, true) => json(&serde_json::json!({ "stages": stages, "result": pair })),
                (Format::Json, false) => json(&pair),
                (Format::Text, true) if !stages.is_empty() => {
                    format!("{}\n\n{}", trace_text(&stages), pair_text("PT", &pair.pt, "Tmax", &pair.tmax))
                }
                (Format::Text, _) => pair_text("PT", &pair.pt, "Tmax", &pair.tmax),
            }
        }
        Command::ClassicRsk => {
            let out = classic_rsk(&need_biword(input)?);
            match format {
                Format::Text => pair_text("P", &out.p, "Q", &out.q),
                Format::Json => json(&out),
            }
        }
        Command::Hw => extreme(input, Extreme::Highest, format)?,
        Command::Lw => extreme(input, Extreme::Lowest, format)?,
        Command::Dual { m } => match input {
            Input::Biword(b) => emit_biword(&ptabkit::word::dual_biword(&b), format),
            other => {
                let t = need_ptab(other)?;
                let d = match m {
                    Some(m) => domain("dual", dual_ptab_in(&t, m))?,
                    None => dual_ptab(&t),
                };
                emit_ptab(&d, format)
            }
        },
        Command::Rot { m } => {
            let t = need_ptab(input)?;
            let m = m.unwrap_or_else(|| t.max_content().unwrap_or(1));
            emit_ptab(&domain("rot", rot(&t, m))?, format)
        }
        Command::Perf => emit_ptab(&perf(&need_biword(input)?), format),
        Command::Bw { m } => {
            let t = need_ptab(input)?;
            let b = match m {
                Some(m) => domain("bw", bw_in(&t, m))?,
                None => bw(&t),
            };
            emit_biword(&b, format)
        }
        Command::Matrix => match input {
            Input::Matrix(mat) => emit_biword(&from_matrix(&mat), format),
            other => {
                let b = need_biword(other)?;
                let mat: IntMatrix = domain("matrix", to_matrix(&b, b.m(), b.n()))?;
                match format {
                    Format::Text => mat.to_string(),
                    Format::Json => json(&mat),
                }
            }
        },
        Command::Evac => emit_ptab(&domain("evac", evacuate(&need_ptab(input)?))?, format),
        Command::Lus { method } => emit_ptab(&domain("lus", lusztig(&need_ptab(input)?, method.into()))?, format),
        Command::Apply { ops } => {
            let seq: CrystalOpSequence = ops.parse().map_err(Failure::Parse)?;
            let t = need_ptab(input)?;
            emit_ptab(&domain("apply", seq.apply(&t))?, format)
        }
        Command::Estar => {
            let pt = ptab_rsk(&need_ptab(input)?).pt;
            let seq = domain("estar", e_star_sequence(&pt))?;
            match format {
                Format::Text => seq.to_string(),
                Format::Json => json(&seq),
            }
        }
        Command::Graph { dot, json: as_json, limit } => {
            let t = need_ptab(input)?;
            let comp = match explore(&t, limit) {
                Ok(c) => c,
                Err(Error::LimitExceeded { limit, partial }) => {
                    return Err(Failure::Domain(
                        "graph",
                        Error::MalformedInput(format!(
                            "component exceeds {limit} nodes ({} found before stopping); raise --limit or PTABKIT_LIMIT",
                            partial.len()
                        )),
                    ))
                }
                Err(e) => return Err(Failure::Domain("graph", e)),
            };
            let fmt = if as_json || (format == Format::Json && !dot) { ExportFormat::Json } else { ExportFormat::Dot };
            comp.export(fmt).trim_end().to_string()
        }
        Command::Unrsk | Command::Check { .. } => unreachable!("handled above"),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = cli.io.output.clone();
    let result = run(cli);
    let (body, code) = match result {
        Ok(text) => (text, 0),
        Err(Failure::Check(report)) => {
            println!("{report}");
            return ExitCode::from(3);
        }
        Err(Failure::Parse(e)) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Domain(op, e)) => {
            eprintln!("error: {op}: {e}");
            return ExitCode::from(1);
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let written = match output {
        Some(path) => fs::write(path, format!("{body}\n")),
        None => writeln!(io::stdout(), "{body}"),
    };
    if let Err(e) = written {
        if e.kind() == io::ErrorKind::BrokenPipe {
            return ExitCode::from(code);
        }
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(code)
}
