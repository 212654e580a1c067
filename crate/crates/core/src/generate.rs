//! Seeded random arena generation.
//!
//! Generation is a pure function of the [`GeneratorSpec`]: the PRNG is
//! splitmix64 and the draw order per position is fixed (owner bit, priority,
//! out-degree, then the successor draws), so equal specs produce
//! byte-identical games on every platform.

use crate::game::{Owner, ParityGame, Position};

/// Parameters of one generated arena.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorSpec {
    /// Number of positions, ≥ 1.
    pub positions: usize,
    /// Maximum priority, inclusive.
    pub max_priority: u32,
    /// Maximum out-degree, ≥ 1.
    pub max_degree: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("invalid generator spec: {0}")]
pub struct InvalidSpec(pub String);

/// splitmix64; the state update and output mix are the reference constants.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}

/// Generates the arena determined by `spec`.
///
/// For each position, in order: owner from the low bit of one draw, priority
/// as one draw mod `max_priority + 1`, degree as `1 + draw mod max_degree`,
/// then that many successor draws mod `positions`, deduplicated preserving
/// draw order (the degree may shrink, never below 1). Self-loops are allowed.
pub fn generate_random(spec: &GeneratorSpec) -> Result<ParityGame, InvalidSpec> {
    if spec.positions == 0 {
        return Err(InvalidSpec("positions must be at least 1".into()));
    }
    if spec.max_degree == 0 {
        return Err(InvalidSpec("max degree must be at least 1".into()));
    }

    let mut rng = SplitMix64::new(spec.seed);
    let n = spec.positions;
    let mut positions = Vec::with_capacity(n);
    for _ in 0..n {
        let owner = if rng.next_u64() & 1 == 0 {
            Owner::Even
        } else {
            Owner::Odd
        };
        let priority = (rng.next_u64() % (u64::from(spec.max_priority) + 1)) as u32;
        let degree = 1 + (rng.next_u64() % spec.max_degree as u64) as usize;
        let mut successors: Vec<usize> = Vec::with_capacity(degree);
        for _ in 0..degree {
            let s = (rng.next_u64() % n as u64) as usize;
            if !successors.contains(&s) {
                successors.push(s);
            }
        }
        positions.push(Position {
            owner,
            priority,
            successors,
            name: None,
        });
    }

    Ok(ParityGame::from_positions(positions).expect("generated games satisfy all invariants"))
}
