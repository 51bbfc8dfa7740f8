mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cycdesc::counting::{alpha, beta};
use cycdesc::marked::{cyclesu_map, phi_t0, phi_u, u_to_cycle, MarkKind, MarkedWord};
use cycdesc::necklace::{permutation_to_necklaces, transfer_with_plan, TransferPlan};
use cycdesc::phi::{phi_traced, psi_traced};
use cycdesc::verify::{verify_suite, VerificationReport, VerifyOptions, SUITES};
use cycdesc::{dotted_word, DescentSet, Error, Permutation, SwitchTrace};

use output::{MapOutput, TableOutput, TableRow, TraceEvent, TraceOutput, TransferOutput};

/// Largest `n` accepted by `table` (the table for `C_{n+1}` has `n!` rows).
const TABLE_MAX_N: usize = 8;

#[derive(Parser)]
#[command(name = "cycdesc", version, about = "Descent-preserving bijections between cyclic and arbitrary permutations")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Print the switch log of the underlying φ or ψ run.
    #[arg(long, global = true)]
    trace: bool,
    /// Worker threads for `verify`.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Apply one of the bijections to a single input.
    Map(MapArgs),
    /// Full φ table of C_{n+1}, grouped by descent set.
    Table {
        #[arg(long)]
        n: usize,
    },
    /// Run an exhaustive verification suite (or `all`).
    Verify {
        #[arg(long)]
        suite: String,
        /// Defaults to 8, or 7 for thm_gr, prop_subsets and cor_cyclesu.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Number of σ ∈ S_n with D(σ) = I (exact) or D(σ) ⊆ I (contained).
    Count {
        #[arg(long)]
        n: usize,
        /// Comma list, e.g. `2,5`; empty for ∅.
        #[arg(long, default_value = "")]
        subset: String,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
    },
    /// Cycle-type preserving transfer from {D ⊆ I} to {D ⊆ J}.
    Transfer {
        #[arg(long)]
        perm: String,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        show_necklaces: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Contained,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapKind {
    /// C_{n+1} → S_n
    Phi,
    /// S_n → C_{n+1}
    Psi,
    /// U_n → S_n (marked with n+1)
    U,
    /// T⁰_n → S_n (marked with 0)
    T0,
    /// C_n → {σ : σ(m) = 1}
    Cyclesu,
}

#[derive(Args)]
#[group(required = true, multiple = false, id = "input")]
struct MapInput {
    /// Permutation in cycle notation, e.g. "(3,1,4,2,5)".
    #[arg(long)]
    cycle: Option<String>,
    /// Permutation in one-line notation, e.g. "3 4 1 2".
    #[arg(long)]
    perm: Option<String>,
    /// Marked word in one-line notation, e.g. "0 1 2" or "4 3 1".
    #[arg(long)]
    word: Option<String>,
}

#[derive(Args)]
struct MapArgs {
    #[arg(value_enum)]
    kind: MapKind,
    #[command(flatten)]
    input: MapInput,
    /// Position zeroed by `cyclesu`.
    #[arg(long)]
    m: Option<usize>,
}

enum Failure {
    Usage(String),
    Internal(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Map(args) => map(cli, args),
        Command::Table { n } => table(cli, *n),
        Command::Verify { suite, n } => verify(cli, suite, *n),
        Command::Count { n, subset, mode } => count(cli, *n, subset, *mode),
        Command::Transfer {
            perm,
            from,
            to,
            show_necklaces,
        } => transfer(cli, perm, from, to, *show_necklaces),
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("output types serialize")
}

fn permutation_input(input: &MapInput) -> Result<Permutation, Failure> {
    match (&input.cycle, &input.perm) {
        (Some(c), _) if !c.trim_start().starts_with('(') => Err(Failure::Usage(format!(
            "--cycle expects cycle notation, got `{c}`"
        ))),
        (Some(s), _) | (_, Some(s)) => Ok(s.parse()?),
        _ => Err(Failure::Usage("this map takes --cycle or --perm".into())),
    }
}

fn marked_input(input: &MapInput, kind: MarkKind) -> Result<MarkedWord, Failure> {
    let Some(w) = &input.word else {
        return Err(Failure::Usage("this map takes a marked --word".into()));
    };
    let tau: MarkedWord = w.parse()?;
    if tau.kind() != kind {
        let mark = match kind {
            MarkKind::Zero => "0".to_string(),
            MarkKind::Top => "n+1".to_string(),
        };
        return Err(Failure::Usage(format!("expected a word marked with {mark}")));
    }
    Ok(tau)
}

/// Image of the map together with the trace of the φ or ψ run behind it.
fn apply(args: &MapArgs) -> Result<(String, Permutation, SwitchTrace), Failure> {
    if args.m.is_some() && args.kind != MapKind::Cyclesu {
        return Err(Failure::Usage("--m only applies to cyclesu".into()));
    }
    Ok(match args.kind {
        MapKind::Phi => {
            let pi = permutation_input(&args.input)?;
            let (sigma, trace) = phi_traced(&pi)?;
            (pi.to_string(), sigma, trace)
        }
        MapKind::Psi => {
            let sigma = permutation_input(&args.input)?;
            let (pi, trace) = psi_traced(&sigma)?;
            (sigma.to_string(), pi, trace)
        }
        MapKind::U => {
            let tau = marked_input(&args.input, MarkKind::Top)?;
            let (_, trace) = phi_traced(&u_to_cycle(&tau)?)?;
            (tau.to_string(), phi_u(&tau)?, trace)
        }
        MapKind::T0 => {
            let tau = marked_input(&args.input, MarkKind::Zero)?;
            let (_, trace) = phi_traced(&u_to_cycle(&tau.reverse_complement())?)?;
            (tau.to_string(), phi_t0(&tau)?, trace)
        }
        MapKind::Cyclesu => {
            let pi = permutation_input(&args.input)?;
            let m = args
                .m
                .ok_or_else(|| Failure::Usage("cyclesu needs --m".into()))?;
            let tau = MarkedWord::from_cycle(&pi, m, MarkKind::Zero)?;
            let (_, trace) = phi_traced(&u_to_cycle(&tau.reverse_complement())?)?;
            (pi.to_string(), cyclesu_map(&pi, m)?, trace)
        }
    })
}

/// Cycle notation for output: ψ images are written ending with `n+1`, the
/// form φ reads; everything else in canonical form.
fn cycle_text(kind: MapKind, p: &Permutation) -> String {
    match kind {
        MapKind::Psi => cycdesc::perm::format_cycle(&p.cycle_ending_with(p.n()).expect("psi image is cyclic")),
        _ => p.canonical_cycle_form().to_string(),
    }
}

fn map(cli: &Cli, args: &MapArgs) -> Result<(), Failure> {
    let (input, image, trace) = apply(args)?;
    let cycles = cycle_text(args.kind, &image);
    match cli.format {
        Format::Text => {
            println!("{image}");
            println!("{}", dotted_word(image.word()));
            println!("{cycles}");
            if cli.trace {
                print!("{trace}");
            }
        }
        Format::Json => {
            let out = MapOutput {
                map: match args.kind {
                    MapKind::Phi => "phi",
                    MapKind::Psi => "psi",
                    MapKind::U => "u",
                    MapKind::T0 => "t0",
                    MapKind::Cyclesu => "cyclesu",
                },
                input,
                one_line: image.word().to_vec(),
                dotted: dotted_word(image.word()),
                cycles,
                descents: image.descent_set().elements().to_vec(),
                trace: cli.trace.then(|| trace_output(&trace)),
            };
            println!("{}", json(&out));
        }
    }
    Ok(())
}

fn trace_output(trace: &SwitchTrace) -> TraceOutput {
    TraceOutput {
        initial: trace.render(trace.initial()),
        events: trace
            .events
            .iter()
            .enumerate()
            .map(|(k, e)| TraceEvent {
                iteration: e.iteration,
                step: e.step.label(),
                switch: [e.values.0, e.values.1],
                state: trace.render(trace.state_after(k)),
            })
            .collect(),
    }
}

fn table(cli: &Cli, n: usize) -> Result<(), Failure> {
    if n == 0 || n > TABLE_MAX_N {
        return Err(Failure::Usage(format!(
            "table supports 1 <= n <= {TABLE_MAX_N} (got {n})"
        )));
    }
    let mut rows = Vec::new();
    for pi in cycdesc::counting::cyclic_permutations(n + 1) {
        let (sigma, _) = phi_traced(&pi)?;
        rows.push((pi.cycle_ending_with(n + 1)?, pi, sigma));
    }
    rows.sort_by(|a, b| {
        a.2.descent_set()
            .cmp(&b.2.descent_set())
            .then_with(|| a.0.cmp(&b.0))
    });
    match cli.format {
        Format::Text => {
            for (cycle, pi, sigma) in &rows {
                println!(
                    "{}\t{pi}\t{sigma}\t{}",
                    cycdesc::perm::format_cycle(cycle),
                    sigma.descent_set()
                );
            }
        }
        Format::Json => {
            let out = TableOutput {
                n,
                rows: rows
                    .iter()
                    .map(|(cycle, pi, sigma)| TableRow {
                        cycle: cycdesc::perm::format_cycle(cycle),
                        pi: pi.word().to_vec(),
                        sigma: sigma.word().to_vec(),
                        descents: sigma.descent_set().elements().to_vec(),
                    })
                    .collect(),
            };
            println!("{}", json(&out));
        }
    }
    Ok(())
}

fn default_n(suite: &str) -> usize {
    match suite {
        "thm_gr" | "prop_subsets" | "cor_cyclesu" => 7,
        _ => 8,
    }
}

fn verify(cli: &Cli, suite: &str, n: Option<usize>) -> Result<(), Failure> {
    let options = VerifyOptions { jobs: cli.jobs };
    let names: Vec<&str> = if suite == "all" {
        SUITES.to_vec()
    } else {
        vec![suite]
    };
    let mut reports: Vec<VerificationReport> = Vec::new();
    for name in names {
        let n = n.unwrap_or_else(|| default_n(name));
        let report = verify_suite(name, n, &options).map_err(|e| match e {
            Error::UnknownSuite(s) => Failure::Usage(format!(
                "unknown suite `{s}`; expected one of: all, {}",
                SUITES.join(", ")
            )),
            other => other.into(),
        })?;
        if cli.format == Format::Text {
            println!("{} {}", if report.passed() { "PASS" } else { "FAIL" }, report.summary());
            for f in &report.failures {
                println!("  {}: expected {} got {}", f.input, f.expected, f.actual);
            }
        }
        reports.push(report);
    }
    if cli.format == Format::Json {
        if reports.len() == 1 {
            println!("{}", json(&reports[0]));
        } else {
            println!("{}", json(&reports));
        }
    }
    if reports.iter().all(VerificationReport::passed) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn count(cli: &Cli, n: usize, subset: &str, mode: Mode) -> Result<(), Failure> {
    let set = DescentSet::parse(subset, n)?;
    let value = match mode {
        Mode::Exact => alpha(n, &set)?,
        Mode::Contained => beta(n, &set)?,
    };
    match cli.format {
        Format::Text => println!("{value}"),
        Format::Json => println!(
            "{}",
            json(&output::CountOutput {
                n,
                subset: set.elements().to_vec(),
                mode: match mode {
                    Mode::Exact => "exact",
                    Mode::Contained => "contained",
                },
                count: value.to_string(),
            })
        ),
    }
    Ok(())
}

fn transfer(cli: &Cli, perm: &str, from: &str, to: &str, show_necklaces: bool) -> Result<(), Failure> {
    let pi: Permutation = perm.parse()?;
    let from = DescentSet::parse(from, pi.n())?;
    let to = DescentSet::parse(to, pi.n())?;
    let plan = TransferPlan::new(from, to)?;
    let sigma = transfer_with_plan(&pi, &plan)?;
    let necklaces = if show_necklaces {
        Some(permutation_to_necklaces(&pi, &plan)?.to_string())
    } else {
        None
    };
    match cli.format {
        Format::Text => {
            println!("{sigma}");
            if let Some(m) = &necklaces {
                println!("{m}");
            }
        }
        Format::Json => {
            let out = TransferOutput {
                perm: pi.word().to_vec(),
                from: plan.from().elements().to_vec(),
                to: plan.to().elements().to_vec(),
                alpha: plan.alpha().iter().map(|a| a + 1).collect(),
                image: sigma.word().to_vec(),
                cycle_type: sigma.cycle_type().parts().to_vec(),
                necklaces,
            };
            println!("{}", json(&out));
        }
    }
    Ok(())
}
