//! Acceptance suite, criterion 9: the performance smoke on a 100k-position
//! game and the improved-versus-parys bench grid with bound checks on every
//! row. Criteria 1 through 8 live in the core crate's acceptance suite.

use std::time::Instant;

use parity_games::{
    check_bounds, generate_random, solve_improved, solve_zielonka, GeneratorSpec, Region,
};

#[test]
fn criterion_9_performance_smoke_and_bench_grid() {
    // A 100k-position game must solve in well under a minute.
    let game = generate_random(&GeneratorSpec {
        positions: 100_000,
        max_priority: 8,
        max_degree: 4,
        seed: 1,
    })
    .unwrap();
    let start = Instant::now();
    let result = solve_improved(&game);
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < 60,
        "100k-position solve took {elapsed:?}"
    );
    assert_eq!(result.w_even.union(&result.w_odd), Region::full(game.len()));
    let report = check_bounds(&result.stats, &game);
    assert!(report.passes());
    // The mid-scale reference agrees.
    assert_eq!(solve_zielonka(&game).w_even, result.w_even);

    // Bench grid: improved vs parys, n ∈ {64,128,256}, c ∈ {6,8}, 5 seeds.
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("bench.csv");
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = pgsolve::run_with(
        [
            "pgsolve",
            "bench",
            "--positions",
            "64,128,256",
            "--max-priority",
            "6,8",
            "--seeds",
            "5",
            "--algos",
            "improved,parys",
            "--csv",
            csv_path.to_str().unwrap(),
        ],
        &mut out,
        &mut err,
    );
    assert_eq!(code, 0, "bench failed: {}", String::from_utf8_lossy(&err));

    let csv = std::fs::read_to_string(&csv_path).unwrap();
    let mut lines = csv.lines();
    assert_eq!(
        lines.next().unwrap(),
        "algo,n,c,seed,wall_ns,total_calls,productive_calls,dp_bound,envelope,pass"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 2 * 3 * 2 * 5);
    let mut keys = Vec::new();
    for row in &rows {
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields.len(), 10);
        assert_eq!(fields[9], "true", "bound check failed in row: {row}");
        keys.push((
            fields[0].to_string(),
            fields[1].parse::<usize>().unwrap(),
            fields[2].parse::<u32>().unwrap(),
            fields[3].parse::<u64>().unwrap(),
        ));
    }
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted, "rows are not sorted by (algo, n, c, seed)");

    println!(
        "[PASS] criterion 9: 100k-position solve in {elapsed:?} ({} calls), bench grid of {} rows all within bounds",
        result.stats.total_invocations,
        rows.len()
    );
}
