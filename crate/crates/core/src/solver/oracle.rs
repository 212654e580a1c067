//! Brute-force reference solver by positional-strategy enumeration.
//!
//! For a player P, every positional P-strategy is enumerated. Fixing the
//! strategy leaves a one-player graph in which every infinite path is a play
//! consistent with it, so a position is won under that strategy exactly when
//! no cycle whose maximal priority has the opponent's parity is reachable
//! from it. Such a cycle exists exactly when, in the subgraph of priorities
//! `≤ p` for some opponent-parity priority `p`, a priority-`p` vertex lies
//! on a cycle. The winning region is the union of the safe sets over all
//! strategies; positional determinacy makes this exact.
//!
//! Cost grows with the product of the player's out-degrees, so the solver
//! refuses games above a hard position cap. It shares no code path with the
//! recursive solvers, which is what makes it an independent oracle for them.

use crate::analysis::CallStats;
use crate::game::{Owner, ParityGame, SubgameView};
use crate::region::Region;
use crate::solver::{Algorithm, SolveResult};

/// Default position cap for the enumeration.
pub const ORACLE_POSITION_CAP: usize = 10;

// Bitmask-based bookkeeping limits the enumeration outright.
const HARD_LIMIT: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("game with {size} positions exceeds the oracle cap of {cap}")]
pub struct GameTooLarge {
    pub size: usize,
    pub cap: usize,
}

pub fn solve_oracle(game: &ParityGame) -> Result<SolveResult, GameTooLarge> {
    solve_oracle_capped(game, ORACLE_POSITION_CAP)
}

pub fn solve_oracle_capped(game: &ParityGame, cap: usize) -> Result<SolveResult, GameTooLarge> {
    let view = SubgameView::full(game);
    let w_even = positional_winning_region(&view, Owner::Even, cap)?;
    let w_odd = w_even.complement();
    let stats = CallStats {
        total_invocations: 1,
        productive_invocations: 1,
        max_depth: 1,
        ..CallStats::default()
    };
    Ok(SolveResult {
        algorithm: Algorithm::Oracle,
        w_even,
        w_odd,
        stats,
    })
}

/// The exact winning region of `player` in `view`, by enumeration.
///
/// The view must be total (every active position keeps an active successor).
pub fn positional_winning_region(
    view: &SubgameView,
    player: Owner,
    cap: usize,
) -> Result<Region, GameTooLarge> {
    let universe = view.game().len();
    let actives: Vec<usize> = view.active().iter().collect();
    let k = actives.len();
    if k > cap.min(HARD_LIMIT) {
        return Err(GameTooLarge {
            size: k,
            cap: cap.min(HARD_LIMIT),
        });
    }
    if k == 0 {
        return Ok(Region::empty(universe));
    }
    debug_assert!(view.is_total(), "oracle requires a total view");

    let game = view.game();
    let mut local_of = vec![usize::MAX; universe];
    for (local, &global) in actives.iter().enumerate() {
        local_of[global] = local;
    }

    // Deduplicated active successors per local position, as bitmasks and,
    // for the enumerated player's positions, as choice lists.
    let mut succ_mask = vec![0u64; k];
    let mut choices: Vec<Vec<usize>> = Vec::new();
    let mut choice_owner: Vec<usize> = Vec::new();
    for (local, &global) in actives.iter().enumerate() {
        let mut mask = 0u64;
        let mut list = Vec::new();
        for &s in game.successors(global) {
            if view.active().contains(s) {
                let ls = local_of[s];
                if mask & (1 << ls) == 0 {
                    mask |= 1 << ls;
                    list.push(ls);
                }
            }
        }
        succ_mask[local] = mask;
        if game.owner(global) == player {
            choice_owner.push(local);
            choices.push(list);
        }
    }

    let priorities: Vec<u32> = actives.iter().map(|&g| game.priority(g)).collect();
    // Opponent-parity priorities present, each with its `≤ p` vertex mask
    // and its `= p` vertex mask.
    let mut levels: Vec<(u64, u64)> = Vec::new();
    let mut distinct: Vec<u32> = priorities.clone();
    distinct.sort_unstable();
    distinct.dedup();
    for &p in &distinct {
        if Owner::from_priority(p) == player.opponent() {
            let mut le = 0u64;
            let mut eq = 0u64;
            for (v, &prio) in priorities.iter().enumerate() {
                if prio <= p {
                    le |= 1 << v;
                }
                if prio == p {
                    eq |= 1 << v;
                }
            }
            levels.push((le, eq));
        }
    }

    let all_mask: u64 = if k == 64 { !0 } else { (1u64 << k) - 1 };
    let mut wins = 0u64;
    let mut strategy = vec![0usize; choices.len()];

    loop {
        // Successor masks under the current strategy.
        let mut sigma = succ_mask.clone();
        for (slot, &local) in choice_owner.iter().enumerate() {
            sigma[local] = 1u64 << choices[slot][strategy[slot]];
        }

        let mut bad = 0u64;
        for &(le, eq) in &levels {
            let reach = reflexive_reach(&sigma, le, k);
            for v in 0..k {
                if eq & (1 << v) != 0 {
                    let mut via = 0u64;
                    let mut succs = sigma[v] & le;
                    while succs != 0 {
                        let s = succs.trailing_zeros() as usize;
                        succs &= succs - 1;
                        via |= reach[s];
                    }
                    if via & (1 << v) != 0 {
                        bad |= 1 << v;
                    }
                }
            }
        }

        let safe = if bad == 0 {
            all_mask
        } else {
            let reach = reflexive_reach(&sigma, all_mask, k);
            let mut unsafe_mask = 0u64;
            for v in 0..k {
                if reach[v] & bad != 0 {
                    unsafe_mask |= 1 << v;
                }
            }
            all_mask & !unsafe_mask
        };
        wins |= safe;
        if wins == all_mask {
            break;
        }

        // Next strategy (mixed-radix odometer).
        let mut slot = 0;
        loop {
            if slot == strategy.len() {
                return Ok(Region::from_indices(
                    universe,
                    (0..k).filter(|&v| wins & (1 << v) != 0).map(|v| actives[v]),
                ));
            }
            strategy[slot] += 1;
            if strategy[slot] < choices[slot].len() {
                break;
            }
            strategy[slot] = 0;
            slot += 1;
        }
    }

    Ok(Region::from_indices(
        universe,
        (0..k).filter(|&v| wins & (1 << v) != 0).map(|v| actives[v]),
    ))
}

/// Reflexive-transitive reachability restricted to `mask`, as one bitmask
/// per vertex. Vertices outside `mask` get the empty row.
fn reflexive_reach(sigma: &[u64], mask: u64, k: usize) -> Vec<u64> {
    let mut reach: Vec<u64> = (0..k)
        .map(|v| if mask & (1 << v) != 0 { 1u64 << v } else { 0 })
        .collect();
    loop {
        let mut changed = false;
        for v in 0..k {
            if mask & (1 << v) == 0 {
                continue;
            }
            let mut row = reach[v];
            let mut succs = sigma[v] & mask;
            while succs != 0 {
                let s = succs.trailing_zeros() as usize;
                succs &= succs - 1;
                row |= reach[s];
            }
            if row != reach[v] {
                reach[v] = row;
                changed = true;
            }
        }
        if !changed {
            return reach;
        }
    }
}
