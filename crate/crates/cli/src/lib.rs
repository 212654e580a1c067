//! `pgsolve`: command-line front end for the parity-games toolkit.
//!
//! Exit codes: 0 success, 1 usage or flag errors (including oracle size
//! refusals), 2 unreadable or unparsable input, 3 verification mismatch.
//! All commands are deterministic functions of their flags and input bytes,
//! except for the wall-clock column in bench CSV output.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use parity_games::{
    check_bounds, export_call_tree, generate_random, is_dominion, parse_pgsolver, solve,
    solve_improved_with, solve_oracle_capped, solve_zielonka, write_pgsolver, Algorithm,
    GeneratorSpec, Owner, ParityGame, Recorder, SolveResult, SubgameView,
};

const EXIT_OK: i32 = 0;
const EXIT_USAGE: i32 = 1;
const EXIT_INPUT: i32 = 2;
const EXIT_MISMATCH: i32 = 3;

#[derive(Parser)]
#[command(
    name = "pgsolve",
    version,
    about = "Solve, generate, verify, and benchmark parity games"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a game and print the winning regions
    Solve(SolveArgs),
    /// Generate a seeded random game in PGSolver format
    Generate(GenerateArgs),
    /// Cross-check all solvers and the call-count bounds on games
    Verify(VerifyArgs),
    /// Run solvers over a grid of generated games and write a CSV
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum AlgoArg {
    Improved,
    Parys,
    Zielonka,
    Oracle,
}

impl From<AlgoArg> for Algorithm {
    fn from(a: AlgoArg) -> Algorithm {
        match a {
            AlgoArg::Improved => Algorithm::Improved,
            AlgoArg::Parys => Algorithm::Parys,
            AlgoArg::Zielonka => Algorithm::Zielonka,
            AlgoArg::Oracle => Algorithm::Oracle,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TreeFormatArg {
    Dot,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputArg {
    Text,
    Json,
}

#[derive(Args)]
struct SolveArgs {
    /// Algorithm to run
    #[arg(long, value_enum, default_value_t = AlgoArg::Improved)]
    algo: AlgoArg,
    /// Print call statistics and bound checks
    #[arg(long)]
    stats: bool,
    /// Write the recorded call tree to this path (improved only)
    #[arg(long, value_name = "PATH")]
    call_tree: Option<PathBuf>,
    /// Call-tree file format
    #[arg(long, value_enum, default_value_t = TreeFormatArg::Dot)]
    tree_format: TreeFormatArg,
    /// Region output format
    #[arg(long, value_enum, default_value_t = OutputArg::Text)]
    output: OutputArg,
    /// Input file, or "-" for standard input
    file: String,
}

#[derive(Args)]
struct GenerateArgs {
    /// Number of positions (≥ 1)
    #[arg(long)]
    positions: usize,
    /// Maximum priority (inclusive)
    #[arg(long)]
    max_priority: u32,
    /// Maximum out-degree (≥ 1)
    #[arg(long)]
    max_degree: usize,
    /// PRNG seed
    #[arg(long)]
    seed: u64,
    /// Output path (standard output when omitted)
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Run the enumeration oracle on games up to this many positions
    #[arg(long, default_value_t = 8)]
    oracle_max: usize,
    /// Games to verify
    #[arg(required = true)]
    files: Vec<String>,
}

#[derive(Args)]
struct BenchArgs {
    /// Position counts, comma separated
    #[arg(long, value_delimiter = ',', required = true)]
    positions: Vec<usize>,
    /// Maximum priorities, comma separated
    #[arg(long, value_delimiter = ',', required = true)]
    max_priority: Vec<u32>,
    /// Number of seeds per cell (seeds 0..K)
    #[arg(long)]
    seeds: u64,
    /// Algorithms, comma separated
    #[arg(long, value_delimiter = ',', required = true)]
    algos: Vec<AlgoArg>,
    /// CSV output path
    #[arg(long, value_name = "PATH")]
    csv: PathBuf,
}

/// Runs the CLI against explicit streams; the binary wires this to the
/// process streams and exit code.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    match cli.command {
        Command::Solve(args) => cmd_solve(args, stdout, stderr),
        Command::Generate(args) => cmd_generate(args, stdout, stderr),
        Command::Verify(args) => cmd_verify(args, stdout, stderr),
        Command::Bench(args) => cmd_bench(args, stdout, stderr),
    }
}

fn read_input(path: &str) -> std::io::Result<String> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        fs::read_to_string(path)
    }
}

fn load_game(path: &str, stderr: &mut dyn Write) -> Result<ParityGame, i32> {
    let text = read_input(path).map_err(|e| {
        let _ = writeln!(stderr, "pgsolve: {path}: {e}");
        EXIT_INPUT
    })?;
    parse_pgsolver(&text).map_err(|e| {
        let _ = writeln!(stderr, "pgsolve: {path}: {e}");
        EXIT_INPUT
    })
}

fn region_line(label: &str, region: &parity_games::Region) -> String {
    let mut line = String::from(label);
    line.push(':');
    for v in region.iter() {
        line.push(' ');
        line.push_str(&v.to_string());
    }
    line.push('\n');
    line
}

fn stats_json(result: &SolveResult, game: &ParityGame) -> serde_json::Value {
    let mut stats = serde_json::json!({
        "total_calls": result.stats.total_invocations,
        "productive_calls": result.stats.productive_invocations,
        "guard_exits": result.stats.guard_exits(),
        "max_depth": result.stats.max_depth,
    });
    if result.algorithm == Algorithm::Improved {
        let report = check_bounds(&result.stats, game);
        let obj = stats.as_object_mut().expect("stats is an object");
        for (k, v) in report
            .to_json_value()
            .as_object()
            .expect("report is an object")
        {
            obj.insert(k.clone(), v.clone());
        }
    }
    stats
}

fn cmd_solve(args: SolveArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    if args.call_tree.is_some() && args.algo != AlgoArg::Improved {
        let _ = writeln!(stderr, "pgsolve: --call-tree requires --algo improved");
        return EXIT_USAGE;
    }
    let game = match load_game(&args.file, stderr) {
        Ok(game) => game,
        Err(code) => return code,
    };

    let result = if let Some(path) = &args.call_tree {
        let mut recorder = Recorder::with_tracing();
        let result = solve_improved_with(&game, &mut recorder);
        let (_, tree) = recorder.into_parts();
        let tree = tree.expect("nonempty games record at least one call");
        let format = match args.tree_format {
            TreeFormatArg::Dot => "dot",
            TreeFormatArg::Json => "json",
        };
        let text = export_call_tree(&tree, format).expect("format is statically known");
        if let Err(e) = fs::write(path, text) {
            let _ = writeln!(stderr, "pgsolve: {}: {e}", path.display());
            return EXIT_INPUT;
        }
        result
    } else {
        match solve(&game, args.algo.into()) {
            Ok(result) => result,
            Err(e) => {
                let _ = writeln!(stderr, "pgsolve: {e}");
                return EXIT_USAGE;
            }
        }
    };

    match args.output {
        OutputArg::Text => {
            let _ = write!(stdout, "{}", region_line("EVEN", &result.w_even));
            let _ = write!(stdout, "{}", region_line("ODD", &result.w_odd));
            if args.stats {
                let _ = writeln!(
                    stdout,
                    "calls: total={} productive={} guard_exits={} max_depth={}",
                    result.stats.total_invocations,
                    result.stats.productive_invocations,
                    result.stats.guard_exits(),
                    result.stats.max_depth
                );
                if result.algorithm == Algorithm::Improved {
                    let report = check_bounds(&result.stats, &game);
                    let _ = writeln!(
                        stdout,
                        "bounds: measured={} dp={} envelope={} headline_figure={} \
                         measured_le_dp={} dp_le_envelope={} depth_ok={}",
                        report.measured_total,
                        report.dp_bound,
                        report.envelope,
                        report.headline_figure,
                        report.measured_le_dp,
                        report.dp_le_envelope,
                        report.depth_ok
                    );
                }
            }
        }
        OutputArg::Json => {
            let mut value = serde_json::json!({
                "algorithm": result.algorithm.name(),
                "even": result.w_even.iter().collect::<Vec<_>>(),
                "odd": result.w_odd.iter().collect::<Vec<_>>(),
            });
            if args.stats {
                value
                    .as_object_mut()
                    .expect("value is an object")
                    .insert("stats".into(), stats_json(&result, &game));
            }
            let _ = writeln!(stdout, "{}", serde_json::to_string(&value).expect("valid JSON"));
        }
    }
    EXIT_OK
}

fn cmd_generate(args: GenerateArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let spec = GeneratorSpec {
        positions: args.positions,
        max_priority: args.max_priority,
        max_degree: args.max_degree,
        seed: args.seed,
    };
    let game = match generate_random(&spec) {
        Ok(game) => game,
        Err(e) => {
            let _ = writeln!(stderr, "pgsolve: {e}");
            return EXIT_USAGE;
        }
    };
    let text = write_pgsolver(&game);
    match args.output {
        Some(path) => {
            if let Err(e) = fs::write(&path, text) {
                let _ = writeln!(stderr, "pgsolve: {}: {e}", path.display());
                return EXIT_INPUT;
            }
        }
        None => {
            let _ = write!(stdout, "{text}");
        }
    }
    EXIT_OK
}

/// Test-only hook: corrupt one solver's answer to exercise the mismatch
/// path end to end. Compiled out of release builds.
#[cfg(debug_assertions)]
fn corrupt_for_selftest(results: &mut [SolveResult]) {
    let Ok(name) = std::env::var("PG_TEST_CORRUPT_SOLVER") else {
        return;
    };
    for result in results {
        if result.algorithm.name() == name && result.w_even.universe() > 0 {
            if result.w_even.contains(0) {
                result.w_even.remove(0);
                result.w_odd.insert(0);
            } else {
                result.w_odd.remove(0);
                result.w_even.insert(0);
            }
        }
    }
}

#[cfg(not(debug_assertions))]
fn corrupt_for_selftest(_results: &mut [SolveResult]) {}

fn cmd_verify(args: VerifyArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let mut failures = 0usize;
    for path in &args.files {
        let game = match load_game(path, stderr) {
            Ok(game) => game,
            Err(code) => return code,
        };
        let mut results = vec![
            parity_games::solve_improved(&game),
            parity_games::solve_parys(&game),
            solve_zielonka(&game),
        ];
        if game.len() <= args.oracle_max {
            results.push(
                solve_oracle_capped(&game, args.oracle_max).expect("size checked against the cap"),
            );
        }
        corrupt_for_selftest(&mut results);

        match verify_one(&game, &results) {
            Ok(()) => {
                let _ = writeln!(
                    stdout,
                    "OK {path} (n={} even={} odd={} algos={})",
                    game.len(),
                    results[0].w_even.len(),
                    results[0].w_odd.len(),
                    results.len()
                );
            }
            Err(reason) => {
                let _ = writeln!(stdout, "FAIL {path}: {reason}");
                failures += 1;
            }
        }
    }
    if failures == 0 {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}

fn verify_one(game: &ParityGame, results: &[SolveResult]) -> Result<(), String> {
    // Pairwise region equality, reported as the first differing position
    // with each algorithm's claim.
    for v in 0..game.len() {
        let claims: Vec<(Algorithm, Owner)> = results
            .iter()
            .map(|r| {
                let winner = if r.w_even.contains(v) {
                    Owner::Even
                } else {
                    Owner::Odd
                };
                (r.algorithm, winner)
            })
            .collect();
        if claims.iter().any(|(_, w)| *w != claims[0].1) {
            let detail = claims
                .iter()
                .map(|(a, w)| format!("{}={:?}", a.name(), w))
                .collect::<Vec<_>>()
                .join(" ");
            return Err(format!("first difference at position {v}: {detail}"));
        }
    }

    for result in results {
        let union = result.w_even.union(&result.w_odd);
        if union != parity_games::Region::full(game.len())
            || !result.w_even.is_disjoint_from(&result.w_odd)
        {
            return Err(format!(
                "{}: regions do not partition the game",
                result.algorithm
            ));
        }
    }

    let view = SubgameView::full(game);
    if !is_dominion(&view, &results[0].w_even, Owner::Even) {
        return Err("even region is not an even dominion".into());
    }
    if !is_dominion(&view, &results[0].w_odd, Owner::Odd) {
        return Err("odd region is not an odd dominion".into());
    }

    let report = check_bounds(&results[0].stats, game);
    if !report.passes() {
        return Err(format!(
            "bound check failed: measured={} dp={} envelope={} depth={}/{}",
            report.measured_total,
            report.dp_bound,
            report.envelope,
            report.max_depth,
            report.depth_bound
        ));
    }
    Ok(())
}

fn cmd_bench(args: BenchArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    if args.positions.contains(&0) {
        let _ = writeln!(stderr, "pgsolve: --positions entries must be at least 1");
        return EXIT_USAGE;
    }
    if args.seeds == 0 {
        let _ = writeln!(stderr, "pgsolve: --seeds must be at least 1");
        return EXIT_USAGE;
    }

    let mut algos: Vec<Algorithm> = args.algos.iter().map(|&a| a.into()).collect();
    algos.sort_by_key(|a| a.name());
    let mut positions = args.positions.clone();
    positions.sort_unstable();
    let mut priorities = args.max_priority.clone();
    priorities.sort_unstable();

    let mut csv =
        String::from("algo,n,c,seed,wall_ns,total_calls,productive_calls,dp_bound,envelope,pass\n");
    let mut rows = 0usize;
    for &algo in &algos {
        for &n in &positions {
            for &c in &priorities {
                for seed in 0..args.seeds {
                    let game = generate_random(&GeneratorSpec {
                        positions: n,
                        max_priority: c,
                        // Bench games are fixed at out-degree ≤ 4.
                        max_degree: 4,
                        seed,
                    })
                    .expect("bench specs validated above");
                    let start = Instant::now();
                    let result = match solve(&game, algo) {
                        Ok(result) => result,
                        Err(e) => {
                            let _ = writeln!(stderr, "pgsolve: {}: {e}", algo.name());
                            return EXIT_USAGE;
                        }
                    };
                    let wall_ns = start.elapsed().as_nanos();
                    let report = check_bounds(&result.stats, &game);
                    let pass = report.measured_le_dp && report.dp_le_envelope;
                    csv.push_str(&format!(
                        "{},{n},{c},{seed},{wall_ns},{},{},{},{},{pass}\n",
                        algo.name(),
                        result.stats.total_invocations,
                        result.stats.productive_invocations,
                        report.dp_bound,
                        report.envelope,
                    ));
                    rows += 1;
                }
            }
        }
    }

    if let Err(e) = fs::write(&args.csv, csv) {
        let _ = writeln!(stderr, "pgsolve: {}: {e}", args.csv.display());
        return EXIT_INPUT;
    }
    let _ = writeln!(stdout, "wrote {rows} rows to {}", args.csv.display());
    EXIT_OK
}
