use std::io::{self, BufWriter, Write};
use std::ops::ControlFlow;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tatami::bench::{regression_points, BenchTarget, OpCounter, PinnedConstants};
use tatami::oracle::{enumerate_coverings, Classify, Histogram, OracleQuery};
use tatami::square::{count_vd, try_gen_vh_counted};
use tatami::strip::{render_strip_schematic, try_gen_strip_counted};
use tatami::{count_ksum, count_strip, render_square, C4State, Error};

/// Tatami coverings: subset sums, square coverings, strip coverings.
#[derive(Parser)]
#[command(name = "tatami", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Subsets of {1..N} summing to K, largest element first.
    #[command(allow_negative_numbers = true)]
    Subsets {
        n: usize,
        k: i64,
        /// Print only the number of subsets.
        #[arg(long)]
        count: bool,
    },
    /// N x N coverings with N monominoes and K vertical dominoes
    /// (horizontal for odd N).
    Square {
        n: usize,
        k: u64,
        #[arg(long)]
        count: bool,
        #[arg(long, value_enum, default_value_t = SquareRender::Repr)]
        render: SquareRender,
    },
    /// Height-R strip coverings with exactly N features.
    Strip {
        r: usize,
        n: usize,
        /// Print `V H R`: coverings starting with vertical bond, with
        /// horizontal bond, and in total.
        #[arg(long)]
        count: bool,
        #[arg(long, value_enum)]
        render: Option<StripRender>,
        /// Bond columns drawn around each feature.
        #[arg(long, default_value_t = 2)]
        margin: usize,
    },
    /// Brute-force enumeration of small grids.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Count generator steps per output.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum SquareRender {
    Ascii,
    Svg,
    Tiles,
    Repr,
}

#[derive(Clone, Copy, ValueEnum)]
enum StripRender {
    Schematic,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// N x N with N monominoes, two in the top corners. With K, only the
    /// class of K dominoes is reported and emitted.
    Square {
        n: usize,
        k: Option<usize>,
        #[command(flatten)]
        common: OracleCommon,
    },
    /// Unrestricted R x C grid.
    Rect {
        rows: usize,
        cols: usize,
        #[arg(long)]
        monominoes: Option<usize>,
        /// Require monominoes at (1,1) and (1,C).
        #[arg(long)]
        top_corners: bool,
        #[arg(long, value_enum, default_value_t = ClassifyArg::Vertical)]
        classify: ClassifyArg,
        #[command(flatten)]
        common: OracleCommon,
    },
}

#[derive(Args)]
struct OracleCommon {
    /// Print every covering in tile format before the histogram.
    #[arg(long)]
    emit: bool,
    /// Allow grids above the size guard.
    #[arg(long)]
    no_guard: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassifyArg {
    Vertical,
    Horizontal,
    None,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(value_enum)]
    target: BenchKind,
    /// One record per value; may be repeated.
    #[arg(long)]
    n: Vec<usize>,
    #[arg(long)]
    k: Vec<u64>,
    #[arg(long)]
    r: Vec<usize>,
    /// Stop each run after this many outputs.
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BenchKind {
    Subsets,
    Square,
    Strip,
    /// The checked-in regression points, compared with their pins.
    Pinned,
}

enum Failure {
    Usage(String),
    Guard(String),
    Regression(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::GuardExceeded { .. } => Failure::Guard(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out).and_then(|()| out.flush().map_err(Failure::Io));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("tatami: {e}");
            ExitCode::FAILURE
        }
        Err(Failure::Regression(msg)) => {
            eprintln!("tatami: {msg}");
            ExitCode::FAILURE
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("tatami: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Guard(msg)) => {
            eprintln!("tatami: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(command: Command, out: &mut impl Write) -> Outcome {
    match command {
        Command::Subsets { n, k, count } => subsets(out, n, k, count),
        Command::Square {
            n,
            k,
            count,
            render,
        } => square(out, n, k, count, render),
        Command::Strip {
            r,
            n,
            count,
            render,
            margin,
        } => strip(out, r, n, count, render, margin),
        Command::Oracle(cmd) => oracle(out, cmd),
        Command::Bench(args) => bench(out, args),
    }
}

/// Continues while writes succeed, keeping the first error.
fn step(error: &mut Option<io::Error>, written: io::Result<()>) -> ControlFlow<()> {
    match written {
        Ok(()) => ControlFlow::Continue(()),
        Err(e) => {
            *error = Some(e);
            ControlFlow::Break(())
        }
    }
}

fn finish(error: Option<io::Error>) -> Outcome {
    error.map_or(Ok(()), |e| Err(Failure::Io(e)))
}

fn subsets(out: &mut impl Write, n: usize, k: i64, count: bool) -> Outcome {
    if count {
        writeln!(out, "{}", count_ksum(n as i64, k)?)?;
        return Ok(());
    }
    let mut error = None;
    let mut state = C4State::new(n);
    let _ = state.try_generate_counted(k, &mut OpCounter::default(), |s| {
        step(&mut error, writeln!(out, "{s}"))
    });
    finish(error)
}

fn square(out: &mut impl Write, n: usize, k: u64, count: bool, render: SquareRender) -> Outcome {
    if n < 2 {
        return Err(Failure::Usage(format!("n must be >= 2, got {n}")));
    }
    if n % 2 == 1 && !matches!(render, SquareRender::Repr) {
        return Err(Failure::Usage(format!(
            "n = {n} is odd: only the set representation and --count are available"
        )));
    }
    if count {
        writeln!(out, "{}", count_vd(n, k)?)?;
        return Ok(());
    }
    let mut error = None;
    let mut first = true;
    let mut failed = None;
    let _ = try_gen_vh_counted(n, k, &mut OpCounter::default(), |v| {
        let text = match render {
            SquareRender::Repr => return step(&mut error, writeln!(out, "{v}")),
            _ => match render_square(&v.to_element(), n) {
                Ok(c) => match render {
                    SquareRender::Ascii => c.render_ascii(),
                    SquareRender::Svg => c.render_svg(),
                    _ => c.serialize_tiles(),
                },
                Err(e) => {
                    failed = Some(e);
                    return ControlFlow::Break(());
                }
            },
        };
        let sep = if std::mem::take(&mut first) { "" } else { "\n" };
        step(&mut error, write!(out, "{sep}{text}"))
    })?;
    if let Some(e) = failed {
        return Err(e.into());
    }
    finish(error)
}

fn strip(
    out: &mut impl Write,
    r: usize,
    n: usize,
    count: bool,
    render: Option<StripRender>,
    margin: usize,
) -> Outcome {
    if count {
        let c = count_strip(r, n)?;
        writeln!(out, "{} {} {}", c.vertical, c.horizontal, c.total)?;
        return Ok(());
    }
    if margin == 0 {
        return Err(Failure::Usage("margin must be >= 1".into()));
    }
    let mut error = None;
    let mut failed = None;
    let mut first = true;
    let _ = try_gen_strip_counted(r, n, &mut OpCounter::default(), |s| match render {
        None => step(&mut error, writeln!(out, "{s}")),
        Some(StripRender::Schematic) => match render_strip_schematic(s, margin) {
            Ok(art) => {
                let sep = if std::mem::take(&mut first) { "" } else { "\n" };
                step(&mut error, write!(out, "{sep}{art}"))
            }
            Err(e) => {
                failed = Some(e);
                ControlFlow::Break(())
            }
        },
    })?;
    if let Some(e) = failed {
        return Err(e.into());
    }
    finish(error)
}

fn oracle(out: &mut impl Write, cmd: OracleCommand) -> Outcome {
    let (query, only, common) = match cmd {
        OracleCommand::Square { n, k, common } => {
            if n < 2 {
                return Err(Failure::Usage(format!("n must be >= 2, got {n}")));
            }
            (OracleQuery::square(n), k, common)
        }
        OracleCommand::Rect {
            rows,
            cols,
            monominoes,
            top_corners,
            classify,
            common,
        } => {
            let mut q = OracleQuery::rect(rows, cols).classified_by(match classify {
                ClassifyArg::Vertical => Classify::VerticalCount,
                ClassifyArg::Horizontal => Classify::HorizontalCount,
                ClassifyArg::None => Classify::None,
            });
            q.monomino_count = monominoes;
            q.require_top_corner_monominoes = top_corners;
            (q, None, common)
        }
    };
    let query = OracleQuery {
        unguarded: common.no_guard,
        ..query
    };
    let class_of = |c: &tatami::Covering| match query.classify_by {
        Classify::VerticalCount => Some(c.count(tatami::TileKind::VDomino)),
        Classify::HorizontalCount => Some(c.count(tatami::TileKind::HDomino)),
        Classify::None => None,
    };
    let mut error: Option<io::Error> = None;
    let hist: Histogram = if common.emit {
        enumerate_coverings(&query, |c| {
            if error.is_some() || only.is_some_and(|k| class_of(c) != Some(k)) {
                return;
            }
            if let Err(e) = writeln!(out, "{}", c.serialize_tiles()) {
                error = Some(e);
            }
        })?
    } else {
        tatami::oracle::count_coverings(&query)?
    };
    finish(error)?;
    for (k, count) in &hist.counts {
        if only.is_none_or(|o| o == *k) {
            writeln!(out, "{k} {count}")?;
        }
    }
    if let Some(k) = only {
        if !hist.counts.contains_key(&k) {
            writeln!(out, "{k} 0")?;
        }
    }
    writeln!(out, "total {}", hist.total)?;
    Ok(())
}

fn bench(out: &mut impl Write, args: BenchArgs) -> Outcome {
    let missing = |flag: &str| Failure::Usage(format!("bench target needs --{flag}"));
    let targets: Vec<BenchTarget> = match args.target {
        BenchKind::Pinned => regression_points(),
        BenchKind::Subsets | BenchKind::Square => {
            if args.n.is_empty() {
                return Err(missing("n"));
            }
            if args.k.is_empty() {
                return Err(missing("k"));
            }
            let mut points = Vec::new();
            for &n in &args.n {
                for &k in &args.k {
                    points.push(if args.target == BenchKind::Subsets {
                        BenchTarget::Subsets { n, k }
                    } else {
                        BenchTarget::Square { n, k }
                    });
                }
            }
            points
        }
        BenchKind::Strip => {
            if args.r.is_empty() {
                return Err(missing("r"));
            }
            if args.n.is_empty() {
                return Err(missing("n"));
            }
            let mut points = Vec::new();
            for &r in &args.r {
                for &n in &args.n {
                    points.push(BenchTarget::Strip { r, n });
                }
            }
            points
        }
    };
    if args.target == BenchKind::Pinned {
        let pins = PinnedConstants::load()?;
        let budget = args.budget.or(Some(pins.budget));
        let mut failures = Vec::new();
        for t in targets {
            let report = t.run(budget)?;
            match pins.check(&report) {
                Ok(pinned) => writeln!(out, "{report} pinned={pinned:.4} ok")?,
                Err(msg) => {
                    writeln!(out, "{report} FAIL")?;
                    failures.push(msg);
                }
            }
        }
        if !failures.is_empty() {
            return Err(Failure::Regression(failures.join("; ")));
        }
        return Ok(());
    }
    for t in targets {
        writeln!(out, "{}", t.run(args.budget)?)?;
        out.flush()?;
    }
    Ok(())
}
