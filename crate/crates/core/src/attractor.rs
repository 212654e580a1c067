//! Attractor computation on subgame views.
//!
//! The attractor of `targets` for a player is the least superset such that
//! the player can force every play from it into `targets`: the player's
//! positions need one active successor inside, the opponent's positions need
//! all of theirs inside. Computed by backward propagation with a per-position
//! countdown of not-yet-attracted active successors, which is linear in the
//! number of active edges.

use crate::game::{Owner, SubgameView};
use crate::region::Region;

const UNVISITED: u32 = u32::MAX;

/// Reusable scratch for attractor runs on one arena size. Solvers keep one
/// of these per invocation so that repeated attractor calls do not re-zero
/// `O(n)` buffers.
#[derive(Clone, Debug)]
pub struct AttractorComputer {
    // Countdown of active successors not yet attracted, per position;
    // UNVISITED until the position is first touched in the current run.
    remaining: Vec<u32>,
    // Generation tag making `remaining` entries from earlier runs stale.
    stamp: Vec<u32>,
    generation: u32,
    queue: Vec<usize>,
}

impl AttractorComputer {
    pub fn new(universe: usize) -> Self {
        AttractorComputer {
            remaining: vec![UNVISITED; universe],
            stamp: vec![0; universe],
            generation: 0,
            queue: Vec::new(),
        }
    }

    /// least region `A ⊇ targets` closed under `player`-attraction in `view`.
    ///
    /// Panics if `targets ⊄ view.active()` (the caller owns that contract).
    pub fn attract(&mut self, view: &SubgameView, player: Owner, targets: &Region) -> Region {
        assert!(
            targets.is_subset_of(view.active()),
            "attractor target outside the view"
        );
        if self.remaining.len() != view.game().len() {
            *self = AttractorComputer::new(view.game().len());
        }
        self.generation = self.generation.wrapping_add(1);
        if self.generation == 0 {
            // Wrapped; all stamps are stale anyway, reset them once.
            self.stamp.fill(0);
            self.generation = 1;
        }

        let game = view.game();
        let active = view.active();
        let mut attracted = targets.clone();
        self.queue.clear();
        self.queue.extend(targets.iter());

        while let Some(u) = self.queue.pop() {
            for &p in game.predecessors(u) {
                if !active.contains(p) || attracted.contains(p) {
                    continue;
                }
                let joins = if game.owner(p) == player {
                    true
                } else {
                    // Countdown initialized lazily with the full active
                    // out-degree. Every attracted successor is popped exactly
                    // once and decrements through the transposed edge, so the
                    // count hits zero exactly when all active successors are
                    // attracted (duplicate edges cancel out on both sides).
                    let left = if self.stamp[p] != self.generation {
                        self.stamp[p] = self.generation;
                        game.successors(p)
                            .iter()
                            .filter(|&&s| active.contains(s))
                            .count() as u32
                            - 1
                    } else {
                        self.remaining[p] - 1
                    };
                    self.remaining[p] = left;
                    left == 0
                };
                if joins {
                    attracted.insert(p);
                    self.queue.push(p);
                }
            }
        }
        attracted
    }
}

/// One-shot attractor computation; allocates its own scratch.
pub fn attract(view: &SubgameView, player: Owner, targets: &Region) -> Region {
    AttractorComputer::new(view.game().len()).attract(view, player, targets)
}

/// True iff `region` is a trap for `player` in `view`: the player cannot
/// leave it (all of the player's active successors stay inside) and the
/// opponent can stay (one active successor inside per opponent position).
pub fn is_trap(view: &SubgameView, player: Owner, region: &Region) -> bool {
    debug_assert!(region.is_subset_of(view.active()));
    let game = view.game();
    region.iter().all(|v| {
        let mut active_succs = game
            .successors(v)
            .iter()
            .filter(|&&s| view.active().contains(s));
        if game.owner(v) == player {
            active_succs.all(|&s| region.contains(s))
        } else {
            active_succs.any(|&s| region.contains(s))
        }
    })
}
