//! Shared helpers for the integration suites: a naive attractor oracle, a
//! memoized dominion enumerator for tiny games, and deterministic random
//! instance streams. Everything here recomputes results independently of
//! the code paths under test (the only production dependency is the
//! strategy-enumeration oracle, which shares nothing with the recursive
//! solvers).

#![allow(dead_code)]

use std::collections::HashMap;

use parity_games::solver::positional_winning_region;
use parity_games::{
    generate_random, GeneratorSpec, Owner, ParityGame, Region, SplitMix64, SubgameView,
};

/// Naive attractor: iterate to fixpoint straight from the definition. Only
/// meaningful on total views (every active position has an active successor).
pub fn naive_attract(view: &SubgameView, player: Owner, targets: &Region) -> Region {
    let game = view.game();
    let mut attracted = targets.clone();
    loop {
        let mut changed = false;
        for v in view.active().iter() {
            if attracted.contains(v) {
                continue;
            }
            let mut active_succs = game
                .successors(v)
                .iter()
                .filter(|&&s| view.active().contains(s))
                .peekable();
            let joins = if game.owner(v) == player {
                active_succs.any(|&s| attracted.contains(s))
            } else {
                active_succs.peek().is_some()
                    && game
                        .successors(v)
                        .iter()
                        .filter(|&&s| view.active().contains(s))
                        .all(|&s| attracted.contains(s))
            };
            if joins {
                attracted.insert(v);
                changed = true;
            }
        }
        if !changed {
            return attracted;
        }
    }
}

pub fn region_bits(region: &Region) -> u64 {
    assert!(region.universe() <= 64);
    region.iter().fold(0u64, |acc, v| acc | 1 << v)
}

pub fn bits_region(universe: usize, bits: u64) -> Region {
    Region::from_indices(universe, (0..universe).filter(|&v| bits & (1 << v) != 0))
}

/// Closure of `region` in the `player`'s favour within the view given by
/// `active`: own positions keep a successor inside, opponent positions keep
/// all their active successors inside.
pub fn closed_for(game: &ParityGame, active: u64, region: u64, player: Owner) -> bool {
    (0..game.len()).filter(|&v| region & (1 << v) != 0).all(|v| {
        let mut active_succs = game
            .successors(v)
            .iter()
            .filter(|&&s| active & (1 << s) != 0);
        if game.owner(v) == player {
            active_succs.any(|&s| region & (1 << s) != 0)
        } else {
            active_succs.all(|&s| region & (1 << s) != 0)
        }
    })
}

/// Memoized dominion decisions over one tiny arena (≤ 16 positions): the
/// winner of each induced subgame is computed once by strategy enumeration.
pub struct DominionOracle<'a> {
    game: &'a ParityGame,
    even_win: HashMap<u64, u64>,
}

impl<'a> DominionOracle<'a> {
    pub fn new(game: &'a ParityGame) -> Self {
        assert!(game.len() <= 16, "dominion enumeration is for tiny games");
        DominionOracle {
            game,
            even_win: HashMap::new(),
        }
    }

    /// Even's winning region of the subgame induced by `region`, as bits.
    pub fn even_win_bits(&mut self, region: u64) -> u64 {
        let game = self.game;
        *self.even_win.entry(region).or_insert_with(|| {
            let view = SubgameView::new(game, bits_region(game.len(), region));
            let won = positional_winning_region(&view, Owner::Even, 16).expect("tiny game");
            region_bits(&won)
        })
    }

    /// Dominion test within the view `active`.
    pub fn is_dominion(&mut self, active: u64, region: u64, player: Owner) -> bool {
        debug_assert_eq!(region & !active, 0);
        if region == 0 {
            return true;
        }
        if !closed_for(self.game, active, region, player) {
            return false;
        }
        let even = self.even_win_bits(region);
        match player {
            Owner::Even => even == region,
            Owner::Odd => even == 0,
        }
    }

    /// All nonempty dominions of `player` within the view `active`.
    pub fn dominions(&mut self, active: u64, player: Owner) -> Vec<u64> {
        let mut out = Vec::new();
        // Submask enumeration of `active`, skipping the empty set.
        let mut sub = active;
        while sub != 0 {
            if self.is_dominion(active, sub, player) {
                out.push(sub);
            }
            sub = (sub - 1) & active;
        }
        out
    }
}

/// Deterministic stream of random games with bounded size parameters.
pub struct GameStream {
    rng: SplitMix64,
    pub max_positions: usize,
    pub max_priority: u32,
    pub max_degree: usize,
}

impl GameStream {
    pub fn new(seed: u64, max_positions: usize, max_priority: u32, max_degree: usize) -> Self {
        GameStream {
            rng: SplitMix64::new(seed),
            max_positions,
            max_priority,
            max_degree,
        }
    }

    pub fn next_spec(&mut self) -> GeneratorSpec {
        GeneratorSpec {
            positions: 1 + (self.rng.next_u64() as usize) % self.max_positions,
            max_priority: (self.rng.next_u64() % (u64::from(self.max_priority) + 1)) as u32,
            max_degree: 1 + (self.rng.next_u64() as usize) % self.max_degree,
            seed: self.rng.next_u64(),
        }
    }

    pub fn next_game(&mut self) -> ParityGame {
        generate_random(&self.next_spec()).expect("stream specs are valid")
    }

    /// A random subset of the positions of `game`.
    pub fn random_region(&mut self, game: &ParityGame) -> Region {
        let mut r = Region::empty(game.len());
        for v in 0..game.len() {
            if self.rng.next_u64() & 1 == 1 {
                r.insert(v);
            }
        }
        r
    }

    pub fn random_player(&mut self) -> Owner {
        if self.rng.next_u64() & 1 == 0 {
            Owner::Even
        } else {
            Owner::Odd
        }
    }
}
