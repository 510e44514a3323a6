//! `latsort` — sort finite sequences in a lattice from the command line.
//!
//! Subcommands: `sort` (sort sequences), `verify` (sort and check the
//! sorting properties), `table1` (reproduce the built-in gcd/lcm example
//! rows with both evaluators), `powerset-demo` (reproduce the three-member
//! powerset example), and `bench` (CSV operation tallies per sequence
//! length).

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use latsort_core::instances::{format_sequence, parse_lattice, parse_sequence};
use latsort_core::{
    check_sorting_properties, classical_sort, multiset_eq, sort_auto_with_cap,
    weak_sort_bruteforce_with_cap, weak_sort_distributive_dp, Element, Error, Lattice, Sequence,
    SortReport, DEFAULT_ENUMERATION_CAP,
};

/// Writes a line to stdout, exiting quietly when the consumer has closed
/// the pipe (`latsort bench | head` must not panic).
macro_rules! outln {
    ($($arg:tt)*) => {{
        use std::io::Write;
        if let Err(e) = writeln!(std::io::stdout(), $($arg)*) {
            if e.kind() == std::io::ErrorKind::BrokenPipe {
                std::process::exit(0);
            }
            panic!("failed writing to stdout: {e}");
        }
    }};
}

#[derive(Parser)]
#[command(name = "latsort", version, about = "Sort finite sequences in arbitrary lattices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sort one or more sequences in a lattice
    Sort(SortArgs),
    /// Sort a sequence and verify the sorting properties on it
    Verify(VerifyArgs),
    /// Print the built-in gcd/lcm example rows, cross-checking both evaluators
    Table1,
    /// Print the three-member powerset example
    PowersetDemo,
    /// Emit CSV operation tallies for both evaluators on gcd/lcm ramps
    Bench(BenchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    Auto,
    Brute,
    Dp,
    Classical,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    JsonLines,
}

#[derive(Args)]
struct SortArgs {
    /// Lattice spec: int | div | powerset:<names> | product:<spec>+<spec> | table:<path> | m3 | n5
    #[arg(long)]
    lattice: String,
    /// Comma-separated sequence text
    #[arg(long)]
    seq: Option<String>,
    /// File with one sequence per line (blank lines are skipped)
    #[arg(long)]
    input: Option<PathBuf>,
    /// Evaluator override
    #[arg(long, value_enum, default_value_t = Algo::Auto)]
    algo: Algo,
    /// Enumeration cap on the sequence length for brute force
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    cap: usize,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Lattice spec, as for `sort`
    #[arg(long)]
    lattice: String,
    /// Comma-separated sequence text
    #[arg(long)]
    seq: String,
    /// Seed for the random permutation trials
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of random permutation trials
    #[arg(long, default_value_t = 50)]
    trials: u32,
}

#[derive(Args)]
struct BenchArgs {
    /// Largest ramp length to measure
    #[arg(long, default_value_t = 12)]
    max_n: usize,
    /// Enumeration cap; brute-force rows beyond it are marked skipped
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    cap: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Sort(args) => run_sort(args),
        Command::Verify(args) => run_verify(args),
        Command::Table1 => run_table1(),
        Command::PowersetDemo => run_powerset_demo(),
        Command::Bench(args) => run_bench(args),
    }
}

fn run_sort(args: SortArgs) -> Result<ExitCode, Error> {
    let lattice = parse_lattice(&args.lattice)?;
    // reject an unsound override before any parsing or sorting happens
    if args.algo == Algo::Dp && !lattice.is_distributive() {
        return Err(Error::NotDistributive);
    }

    let mut texts: Vec<String> = Vec::new();
    if let Some(seq) = &args.seq {
        texts.push(seq.clone());
    }
    if let Some(path) = &args.input {
        let content = std::fs::read_to_string(path)?;
        texts.extend(
            content
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .map(str::to_string),
        );
    }
    if texts.is_empty() {
        return Err(Error::EmptyInput { op: "sort" });
    }

    for (i, text) in texts.iter().enumerate() {
        let items = parse_sequence(&lattice, text)?;
        let x = Sequence::new(lattice.clone(), items)?;
        let report = sort_with(&x, args.algo, args.cap)?;
        match args.format {
            Format::Text => {
                if i > 0 {
                    outln!();
                }
                outln!("input: {}", format_sequence(&lattice, x.items())?);
                outln!("output: {}", format_sequence(&lattice, report.output.items())?);
                outln!("algorithm: {}", report.algorithm);
                outln!("meets: {}", report.meet_count);
                outln!("joins: {}", report.join_count);
            }
            Format::JsonLines => {
                let input: Vec<String> = element_strings(&lattice, x.items())?;
                let output: Vec<String> = element_strings(&lattice, report.output.items())?;
                let obj = serde_json::json!({
                    "input": input,
                    "output": output,
                    "algorithm": report.algorithm.name(),
                    "meets": report.meet_count,
                    "joins": report.join_count,
                });
                outln!("{obj}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn sort_with(x: &Sequence, algo: Algo, cap: usize) -> Result<SortReport, Error> {
    match algo {
        Algo::Auto => sort_auto_with_cap(x, cap),
        Algo::Brute => weak_sort_bruteforce_with_cap(x, cap),
        Algo::Dp => weak_sort_distributive_dp(x),
        Algo::Classical => classical_sort(x),
    }
}

fn element_strings(lattice: &Lattice, items: &[Element]) -> Result<Vec<String>, Error> {
    items
        .iter()
        .map(|e| latsort_core::instances::format_element(lattice, e))
        .collect()
}

fn run_verify(args: VerifyArgs) -> Result<ExitCode, Error> {
    let lattice = parse_lattice(&args.lattice)?;
    let items = parse_sequence(&lattice, &args.seq)?;
    let x = Sequence::new(lattice.clone(), items)?;
    let report = check_sorting_properties(&x, args.trials, args.seed)?;

    let verdict = |ok: bool| if ok { "pass" } else { "FAIL" };
    outln!("lattice: {}", args.lattice);
    outln!("input: {}", format_sequence(&lattice, x.items())?);
    outln!("output: {}", format_sequence(&lattice, report.output.items())?);
    outln!("nondecreasing: {}", verdict(report.nondecreasing));
    outln!("idempotent: {}", verdict(report.idempotent));
    outln!(
        "permutation-invariant: {} ({} trials, seed {})",
        verdict(report.permutation_invariant),
        args.trials,
        args.seed
    );
    outln!("bounds: {}", verdict(report.bounds_respected));
    outln!(
        "multiset preserved: {}",
        if multiset_eq(report.output.items(), x.items()) {
            "yes"
        } else {
            "no"
        }
    );
    if report.all_pass() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::FAILURE)
    }
}

/// Golden gcd/lcm rows: ramp (1..=n) and its sorted counterpart.
const GOLDEN_DIV_ROWS: &[(&[u64], &[u64])] = &[
    (&[1], &[1]),
    (&[1, 2], &[1, 2]),
    (&[1, 2, 3], &[1, 1, 6]),
    (&[1, 2, 3, 4], &[1, 1, 2, 12]),
    (&[1, 2, 3, 4, 5], &[1, 1, 1, 2, 60]),
    (&[1, 2, 3, 4, 5, 6], &[1, 1, 1, 2, 6, 60]),
    (&[1, 2, 3, 4, 5, 6, 7], &[1, 1, 1, 1, 2, 6, 420]),
    (&[1, 2, 3, 4, 5, 6, 7, 8], &[1, 1, 1, 1, 2, 2, 12, 840]),
];

fn div_sequence(values: &[u64]) -> Sequence {
    Sequence::new(
        Lattice::Divisibility,
        values.iter().map(|&v| Element::Div(v)).collect(),
    )
    .expect("positive values are valid divisibility elements")
}

fn join_values(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn run_table1() -> Result<ExitCode, Error> {
    let mut matched = 0usize;
    for (input, expected) in GOLDEN_DIV_ROWS {
        let x = div_sequence(input);
        let brute = weak_sort_bruteforce_with_cap(&x, DEFAULT_ENUMERATION_CAP)?;
        let dp = weak_sort_distributive_dp(&x)?;
        let brute_vals: Vec<u64> = div_values(brute.output.items());
        let dp_vals: Vec<u64> = div_values(dp.output.items());
        let ok = brute_vals == *expected && dp_vals == *expected;
        if ok {
            matched += 1;
        }
        outln!(
            "input={} brute={} dp={} expected={} {}",
            join_values(input),
            join_values(&brute_vals),
            join_values(&dp_vals),
            join_values(expected),
            if ok { "MATCH" } else { "MISMATCH" }
        );
    }
    outln!("{matched}/{} MATCH", GOLDEN_DIV_ROWS.len());
    if matched == GOLDEN_DIV_ROWS.len() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::FAILURE)
    }
}

fn div_values(items: &[Element]) -> Vec<u64> {
    items
        .iter()
        .map(|e| match e {
            Element::Div(v) => *v,
            other => panic!("unexpected element {other:?}"),
        })
        .collect()
}

fn run_powerset_demo() -> Result<ExitCode, Error> {
    let lattice = parse_lattice("powerset:x,y,z")?;
    let items = parse_sequence(&lattice, "{x},{y},{z}")?;
    let x = Sequence::new(lattice.clone(), items)?;
    let brute = weak_sort_bruteforce_with_cap(&x, DEFAULT_ENUMERATION_CAP)?;
    let dp = weak_sort_distributive_dp(&x)?;
    let expected = parse_sequence(&lattice, "{},{},{x,y,z}")?;
    let ok = brute.output.items() == expected.as_slice() && dp.output.items() == expected.as_slice();
    let changed = !multiset_eq(brute.output.items(), x.items());

    outln!("lattice: powerset:x,y,z");
    outln!("input: {}", format_sequence(&lattice, x.items())?);
    outln!("output: {}", format_sequence(&lattice, brute.output.items())?);
    outln!(
        "expected: {} {}",
        format_sequence(&lattice, &expected)?,
        if ok { "MATCH" } else { "MISMATCH" }
    );
    outln!("multiset changed: {}", if changed { "yes" } else { "no" });
    if ok && changed {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::FAILURE)
    }
}

fn run_bench(args: BenchArgs) -> Result<ExitCode, Error> {
    outln!("n,algorithm,meets,joins,wall_ns");
    for n in 1..=args.max_n {
        let values: Vec<u64> = (1..=n as u64).collect();
        let x = div_sequence(&values);
        if n <= args.cap {
            let start = Instant::now();
            let report = weak_sort_bruteforce_with_cap(&x, args.cap)?;
            let ns = start.elapsed().as_nanos();
            outln!(
                "{n},brute-force,{},{},{ns}",
                report.meet_count, report.join_count
            );
        } else {
            outln!("{n},brute-force,skipped,skipped,skipped");
        }
        let start = Instant::now();
        let report = weak_sort_distributive_dp(&x)?;
        let ns = start.elapsed().as_nanos();
        outln!(
            "{n},distributive-dp,{},{},{ns}",
            report.meet_count, report.join_count
        );
    }
    Ok(ExitCode::SUCCESS)
}
