//! The solving algorithms: the improved bounded-precision recursion, the
//! Parys-style original, classic Zielonka recursion, and the brute-force
//! strategy-enumeration oracle, plus dominion checking.
//!
//! All solvers return the same [`SolveResult`]: a partition of the positions
//! into the two winning regions together with the recorded [`CallStats`].

mod dominion;
mod improved;
mod oracle;
mod parys;
mod zielonka;

pub use dominion::is_dominion;
pub use improved::{solve_even, solve_improved, solve_improved_with, solve_odd};
pub use oracle::{
    positional_winning_region, solve_oracle, solve_oracle_capped, GameTooLarge, ORACLE_POSITION_CAP,
};
pub use parys::{solve_parys, solve_parys_with};
pub use zielonka::{solve_zielonka, solve_zielonka_with, zielonka_regions};

use std::fmt;
use std::str::FromStr;

use crate::analysis::CallStats;
use crate::game::ParityGame;
use crate::region::Region;

/// Dominion-size guarantees carried down the recursion: the even component
/// bounds the even dominions the call must capture, the odd component the
/// odd dominions it must exclude. Halving always uses floor division.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Precision {
    pub even: u64,
    pub odd: u64,
}

impl Precision {
    /// Both guarantees sized to the whole game; sufficient because no
    /// dominion exceeds the number of positions.
    pub fn top_level(positions: usize) -> Self {
        Precision {
            even: positions as u64,
            odd: positions as u64,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Improved,
    Parys,
    Zielonka,
    Oracle,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [
        Algorithm::Improved,
        Algorithm::Parys,
        Algorithm::Zielonka,
        Algorithm::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Improved => "improved",
            Algorithm::Parys => "parys",
            Algorithm::Zielonka => "zielonka",
            Algorithm::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = UnknownAlgorithm;

    fn from_str(s: &str) -> Result<Self, UnknownAlgorithm> {
        match s {
            "improved" => Ok(Algorithm::Improved),
            "parys" => Ok(Algorithm::Parys),
            "zielonka" => Ok(Algorithm::Zielonka),
            "oracle" => Ok(Algorithm::Oracle),
            other => Err(UnknownAlgorithm(other.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown algorithm {0:?} (expected improved, parys, zielonka, or oracle)")]
pub struct UnknownAlgorithm(pub String);

/// The winning-region partition produced by one solver run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub algorithm: Algorithm,
    pub w_even: Region,
    pub w_odd: Region,
    pub stats: CallStats,
}

/// The top-level priority ceiling: the game's maximal priority rounded up
/// to the nearest even number. An odd maximum only yields an empty
/// top-priority set at the first level.
pub fn top_level_priority(game: &ParityGame) -> u32 {
    let h = game.max_priority();
    if h % 2 == 0 {
        h
    } else {
        h + 1
    }
}

/// Runs the chosen algorithm; only the oracle can refuse (size cap).
pub fn solve(game: &ParityGame, algorithm: Algorithm) -> Result<SolveResult, GameTooLarge> {
    match algorithm {
        Algorithm::Improved => Ok(solve_improved(game)),
        Algorithm::Parys => Ok(solve_parys(game)),
        Algorithm::Zielonka => Ok(solve_zielonka(game)),
        Algorithm::Oracle => solve_oracle(game),
    }
}
