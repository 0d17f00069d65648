//! Command-line front end for `pivotkit`.
//!
//! Exit codes: 0 success or `PASS`; 1 a property was violated (a witness
//! is printed); 2 usage or parse error; 3 a budget or size cap was hit and
//! the answer is unknown.

use std::fs;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand};

use pivotkit::cutrank::{cut_rank, find_low_rank_separation};
use pivotkit::extremal::{gen_c6_blowup_example, gen_ktt_example, gen_random_instance_with};
use pivotkit::matroid::{cographic_matroid, graphic_matroid, BinaryMatroid, MultiGraph, SpanningTree};
use pivotkit::pivot::{is_pivot_minor, pivot};
use pivotkit::structure::{constant_block_partition, perturbation_partition, split_tree};
use pivotkit::text::parse_csv;
use pivotkit::verify::{replay_report, run_campaign, Campaign, CampaignParams, Outcome, Source};
use pivotkit::{BiGraph, BitMatrix, Error, Graph};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "pivotkit", version, about = "Pivots, fundamental graphs, binary matroids and cut-rank")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate an instance (multigraph with spanning tree)
    #[command(subcommand)]
    Gen(GenCommand),
    /// Fundamental graph of a multigraph with respect to its marked tree
    Fundgraph { file: String },
    /// Pivot a graph on the edge xy
    Pivot { file: String, x: usize, y: usize },
    /// Cut-rank of a vertex set
    Cutrank {
        file: String,
        #[arg(long, value_name = "CSV")]
        set: String,
    },
    /// Search for a separation of order below k
    Rankconn { file: String, k: usize },
    /// Binary matroid operations
    #[command(subcommand)]
    Matroid(MatroidCommand),
    /// Split a tree into three edge-disjoint parts
    Splittree { file: String, s: usize },
    /// Constant-block partition of a matrix, or of the difference of two bigraphs
    Partition {
        #[arg(required_unless_present = "pair", conflicts_with = "pair")]
        file: Option<String>,
        #[arg(long, num_args = 2, value_names = ["G1", "G2"])]
        pair: Option<Vec<String>>,
    },
    /// Decide whether H is a pivot-minor of G
    Pivotminor {
        h: String,
        g: String,
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
        /// Treat finding H as a failure (exit 1)
        #[arg(long)]
        refute: bool,
    },
    /// Run a verification campaign
    Check(CheckArgs),
    /// Re-evaluate the witnesses recorded in a campaign report
    Replay { file: String },
}

#[derive(Subcommand, Debug)]
enum GenCommand {
    /// Path with parallel closing edges; fundamental graph K_{t-1,t-1}
    Ktt { t: usize },
    /// Three-legged spider with tip edges; fundamental graph a blow-up of C6
    C6blowup { s: usize },
    /// Random tree plus random extra edges
    Random {
        n: usize,
        extra: usize,
        #[arg(long)]
        seed: u64,
        /// Allow loops among the extra edges
        #[arg(long)]
        loops: bool,
    },
}

#[derive(Subcommand, Debug)]
enum MatroidCommand {
    /// Graphic matroid of a multigraph
    Graphic { file: String },
    /// Cographic matroid of a multigraph
    Cographic { file: String },
    /// List all circuits
    Circuits { file: String },
    /// Minor obtained by deleting and contracting elements
    Minor {
        file: String,
        #[arg(long, default_value = "", value_name = "CSV")]
        delete: String,
        #[arg(long, default_value = "", value_name = "CSV")]
        contract: String,
    },
    /// Connectivity function of a set of elements
    Lambda {
        file: String,
        #[arg(long, value_name = "CSV")]
        set: String,
    },
    /// Search for a separation of order below k
    Connectivity { file: String, k: usize },
}

#[derive(Args, Debug)]
struct CheckArgs {
    campaign: String,
    #[arg(long)]
    seed: u64,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long)]
    max_extra: Option<usize>,
    #[arg(long)]
    blocks: Option<usize>,
    /// Added to the bound under test (negative values for self-tests)
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    offset: i64,
    /// random, ktt:T or c6blowup:S
    #[arg(long, default_value = "random")]
    source: String,
    #[arg(long)]
    exhaustive: bool,
}

/// Failure of a subcommand, mapped to an exit code.
enum Failure {
    Usage(String),
    Unknown(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. }
            | Error::GroundSetTooLarge { .. }
            | Error::SearchBudgetExceeded { .. }
            | Error::OrbitBudgetExceeded { .. } => Failure::Unknown(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CliResult = Result<i32, Failure>;

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn read(&mut self, path: &str) -> Result<String, Failure> {
        if path == "-" {
            let mut text = String::new();
            self.stdin.read_to_string(&mut text)?;
            Ok(text)
        } else {
            fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))
        }
    }

    fn parse<T: std::str::FromStr<Err = Error>>(&mut self, path: &str) -> Result<T, Failure> {
        let text = self.read(path)?;
        text.parse().map_err(|e: Error| Failure::Usage(format!("{path}: {e}")))
    }

    fn multigraph(&mut self, path: &str) -> Result<(MultiGraph, SpanningTree), Failure> {
        let text = self.read(path)?;
        MultiGraph::parse(&text).map_err(|e| Failure::Usage(format!("{path}: {e}")))
    }
}

fn csv<T: std::str::FromStr>(field: &str) -> Result<Vec<T>, Failure> {
    parse_csv(field).map_err(|_| Failure::Usage(format!("bad comma-separated list {field:?}")))
}

/// Run the command line `args` (including the program name) against the
/// given streams and return the exit code.
pub fn run_cli<I, S>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(stderr, "{rendered}")
            } else {
                write!(stdout, "{rendered}")
            };
            return code;
        }
    };
    let mut io = Io {
        stdin,
        out: stdout,
        err: stderr,
    };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(io.err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Unknown(msg)) => {
            let _ = writeln!(io.err, "unknown: {msg}");
            EXIT_UNKNOWN
        }
    }
}

fn dispatch(command: Command, io: &mut Io<'_>) -> CliResult {
    match command {
        Command::Gen(g) => {
            let instance = match g {
                GenCommand::Ktt { t } => {
                    if t < 2 {
                        return Err(Failure::Usage("t must be at least 2".into()));
                    }
                    gen_ktt_example(t)
                }
                GenCommand::C6blowup { s } => {
                    if s < 2 {
                        return Err(Failure::Usage("s must be at least 2".into()));
                    }
                    gen_c6_blowup_example(s)
                }
                GenCommand::Random { n, extra, seed, loops } => {
                    if n < 2 {
                        return Err(Failure::Usage("n must be at least 2".into()));
                    }
                    gen_random_instance_with(n, extra, seed, loops)
                }
            };
            write!(io.out, "{}", instance.to_text())?;
            Ok(EXIT_OK)
        }
        Command::Fundgraph { file } => {
            let (g, tree) = io.multigraph(&file)?;
            let m = graphic_matroid(&g, &tree)?;
            let h = m.fundamental_bigraph();
            writeln!(io.out, "# a = tree edges {}", pivotkit::text::join_csv(h.a_labels()))?;
            writeln!(io.out, "# b = non-tree edges {}", pivotkit::text::join_csv(h.b_labels()))?;
            write!(io.out, "{h}")?;
            Ok(EXIT_OK)
        }
        Command::Pivot { file, x, y } => {
            let g: Graph = io.parse(&file)?;
            write!(io.out, "{}", pivot(&g, x, y)?)?;
            Ok(EXIT_OK)
        }
        Command::Cutrank { file, set } => {
            let g: Graph = io.parse(&file)?;
            let x: Vec<usize> = csv(&set)?;
            if let Some(&v) = x.iter().find(|&&v| v >= g.n()) {
                return Err(Error::IndexOutOfRange { index: v, bound: g.n() }.into());
            }
            writeln!(io.out, "{}", cut_rank(&g, &x))?;
            Ok(EXIT_OK)
        }
        Command::Rankconn { file, k } => {
            let g: Graph = io.parse(&file)?;
            match find_low_rank_separation(&g, k)? {
                None => {
                    writeln!(io.out, "{k}-rank-connected")?;
                    Ok(EXIT_OK)
                }
                Some(sep) => {
                    writeln!(io.out, "{sep}")?;
                    Ok(EXIT_VIOLATION)
                }
            }
        }
        Command::Matroid(m) => matroid(m, io),
        Command::Splittree { file, s } => {
            let t: Graph = io.parse(&file)?;
            write!(io.out, "{}", split_tree(&t, s)?)?;
            Ok(EXIT_OK)
        }
        Command::Partition { file, pair } => {
            if let Some(pair) = pair {
                let g1: BiGraph = io.parse(&pair[0])?;
                let g2: BiGraph = io.parse(&pair[1])?;
                let p = perturbation_partition(&g1, &g2)?;
                writeln!(io.out, "perturbation rank={}", p.p)?;
                write!(io.out, "{}", p.partition)?;
            } else {
                let m: BitMatrix = io.parse(file.as_deref().unwrap_or("-"))?;
                writeln!(io.out, "rank={}", m.rank())?;
                write!(io.out, "{}", constant_block_partition(&m))?;
            }
            Ok(EXIT_OK)
        }
        Command::Pivotminor { h, g, budget, refute } => {
            let h: Graph = io.parse(&h)?;
            let g: Graph = io.parse(&g)?;
            match is_pivot_minor(&h, &g, budget) {
                Ok(Some(steps)) => {
                    writeln!(io.out, "yes")?;
                    for step in steps {
                        writeln!(io.out, "{step}")?;
                    }
                    Ok(if refute { EXIT_VIOLATION } else { EXIT_OK })
                }
                Ok(None) => {
                    writeln!(io.out, "no")?;
                    Ok(EXIT_OK)
                }
                Err(Error::SearchBudgetExceeded { budget }) => {
                    writeln!(io.out, "unknown")?;
                    writeln!(io.err, "search budget of {budget} states exhausted")?;
                    Ok(EXIT_UNKNOWN)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Check(args) => check(args, io),
        Command::Replay { file } => {
            let text = io.read(&file)?;
            let replays = replay_report(&text)?;
            let mut all_reproduced = true;
            for r in &replays {
                match &r.outcome {
                    Outcome::Violation(reason) => writeln!(io.out, "trial={} reproduced reason={reason}", r.trial)?,
                    other => {
                        all_reproduced = false;
                        let what = if *other == Outcome::Pass { "passes" } else { "vacuous" };
                        writeln!(io.out, "trial={} not-reproduced now={what}", r.trial)?;
                    }
                }
            }
            writeln!(io.out, "replayed={}", replays.len())?;
            Ok(if !all_reproduced {
                writeln!(io.err, "some recorded witnesses no longer fail")?;
                EXIT_USAGE
            } else if replays.is_empty() {
                EXIT_OK
            } else {
                EXIT_VIOLATION
            })
        }
    }
}

fn matroid(command: MatroidCommand, io: &mut Io<'_>) -> CliResult {
    match command {
        MatroidCommand::Graphic { file } => {
            let (g, tree) = io.multigraph(&file)?;
            write!(io.out, "{}", graphic_matroid(&g, &tree)?)?;
        }
        MatroidCommand::Cographic { file } => {
            let (g, tree) = io.multigraph(&file)?;
            write!(io.out, "{}", cographic_matroid(&g, &tree)?)?;
        }
        MatroidCommand::Circuits { file } => {
            let m: BinaryMatroid = io.parse(&file)?;
            let circuits = m.circuits()?;
            writeln!(io.out, "circuits={}", circuits.len())?;
            for c in circuits {
                writeln!(io.out, "circuit {}", pivotkit::text::join_csv(&c))?;
            }
        }
        MatroidCommand::Minor { file, delete, contract } => {
            let m: BinaryMatroid = io.parse(&file)?;
            write!(io.out, "{}", m.minor(&csv(&delete)?, &csv(&contract)?)?)?;
        }
        MatroidCommand::Lambda { file, set } => {
            let m: BinaryMatroid = io.parse(&file)?;
            writeln!(io.out, "{}", m.lambda(&csv(&set)?)?)?;
        }
        MatroidCommand::Connectivity { file, k } => {
            let m: BinaryMatroid = io.parse(&file)?;
            return match m.find_low_connectivity_set(k)? {
                None => {
                    writeln!(io.out, "{k}-connected")?;
                    Ok(EXIT_OK)
                }
                Some(w) => {
                    writeln!(io.out, "{w}")?;
                    Ok(EXIT_VIOLATION)
                }
            };
        }
    }
    Ok(EXIT_OK)
}

fn check(args: CheckArgs, io: &mut Io<'_>) -> CliResult {
    let campaign: Campaign = args.campaign.parse()?;
    let params = CampaignParams {
        s: args.s,
        t: args.t,
        k: args.k,
        trials: args.trials,
        max_n: args.max_n,
        max_extra: args.max_extra,
        blocks: args.blocks,
        offset: args.offset,
        source: args.source.parse::<Source>()?,
        exhaustive: args.exhaustive,
    };
    let report = run_campaign(campaign, &params, args.seed)?;
    write!(io.out, "{report}")?;
    if let Some(w) = report.vacuous_warning() {
        writeln!(io.err, "warning: {w}")?;
    }
    writeln!(io.err, "elapsed_ms={}", report.elapsed.as_millis())?;
    Ok(if report.passed() { EXIT_OK } else { EXIT_VIOLATION })
}
