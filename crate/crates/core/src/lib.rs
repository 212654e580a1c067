//! Parity game solving toolkit.
//!
//! The crate provides an immutable arena ([`ParityGame`]) with PGSolver
//! text I/O and a seeded generator, bit-vector position sets ([`Region`]),
//! linear attractor computation over subgame views, four solvers (the
//! improved bounded-precision recursion, the original two-loop variant,
//! classic Zielonka, and a brute-force strategy-enumeration oracle), and
//! call-count instrumentation with the matching complexity bounds.
//!
//! Arenas and regions are immutable after construction and safe to share
//! across threads; every solver invocation is single-threaded and owns its
//! recorder.

pub mod analysis;
pub mod attractor;
pub mod format;
pub mod game;
pub mod generate;
pub mod region;
pub mod solver;

// Exact big-integer arithmetic backs the analysis bounds; re-exported so
// downstream tests can compare against reported values.
pub use num_bigint;

pub use analysis::{
    binomial_envelope, check_bounds, dp_call_bound, export_call_tree, headline_call_figure,
    BoundReport, CallBoundMemo, CallStats, CallTree, Recorder,
};
pub use attractor::{attract, is_trap, AttractorComputer};
pub use format::{parse_pgsolver, write_pgsolver, ParseError};
pub use game::{Owner, ParityGame, Position, SubgameView, Violation};
pub use generate::{generate_random, GeneratorSpec, SplitMix64};
pub use region::Region;
pub use solver::{
    is_dominion, solve, solve_even, solve_improved, solve_improved_with, solve_odd, solve_oracle,
    solve_oracle_capped, solve_parys, solve_parys_with, solve_zielonka, solve_zielonka_with,
    Algorithm, GameTooLarge, Precision, SolveResult, ORACLE_POSITION_CAP,
};
