//! The improved bounded-precision recursion.
//!
//! `solve_even(view, h, p_even, p_odd)` returns a region that contains every
//! even dominion of size up to `p_even` and misses every odd dominion of
//! size up to `p_odd`, assuming `h` is even and no smaller than any active
//! priority. Each productive call makes exactly three recursive calls: one
//! with the opponent precision halved on the same view, one on the subgame
//! below the top priority with `h−1` and swapped precisions, and one with
//! the opponent precision halved on what remains. `solve_odd` is the exact
//! dual except that it returns the empty set, not the view, when `h = 0`.

use crate::analysis::Recorder;
use crate::attractor::AttractorComputer;
use crate::game::{Owner, ParityGame, SubgameView};
use crate::region::Region;
use crate::solver::{top_level_priority, Algorithm, Precision, SolveResult};

/// Solves the whole game with the improved recursion.
pub fn solve_improved(game: &ParityGame) -> SolveResult {
    let mut recorder = Recorder::new();
    solve_improved_with(game, &mut recorder)
}

/// As [`solve_improved`], but recording into a caller-owned [`Recorder`]
/// (enable tracing on it to capture the call tree).
pub fn solve_improved_with(game: &ParityGame, recorder: &mut Recorder) -> SolveResult {
    let view = SubgameView::full(game);
    let precision = Precision::top_level(game.len());
    let mut computer = AttractorComputer::new(game.len());
    let w_even = solve_rec(
        &view,
        Owner::Even,
        top_level_priority(game),
        precision.even,
        precision.odd,
        &mut computer,
        recorder,
    );
    let w_odd = w_even.complement();
    SolveResult {
        algorithm: Algorithm::Improved,
        w_even,
        w_odd,
        stats: recorder.stats().clone(),
    }
}

/// The Even-side call: contains all even dominions up to `p_even`, avoids
/// all odd dominions up to `p_odd`. Requires `h` even and at least the
/// maximal active priority (assertion level).
pub fn solve_even(
    view: &SubgameView,
    h: u32,
    p_even: u64,
    p_odd: u64,
    recorder: &mut Recorder,
) -> Region {
    let mut computer = AttractorComputer::new(view.game().len());
    solve_rec(view, Owner::Even, h, p_even, p_odd, &mut computer, recorder)
}

/// The Odd-side dual: contains all odd dominions up to `p_odd`, avoids all
/// even dominions up to `p_even`. Requires `h` odd and at least the maximal
/// active priority, except that `h = 0` returns the empty set outright.
pub fn solve_odd(
    view: &SubgameView,
    h: u32,
    p_odd: u64,
    p_even: u64,
    recorder: &mut Recorder,
) -> Region {
    let mut computer = AttractorComputer::new(view.game().len());
    solve_rec(view, Owner::Odd, h, p_odd, p_even, &mut computer, recorder)
}

pub(crate) fn solve_rec(
    view: &SubgameView,
    player: Owner,
    h: u32,
    p_own: u64,
    p_opp: u64,
    computer: &mut AttractorComputer,
    recorder: &mut Recorder,
) -> Region {
    recorder.enter(player, h, p_own, p_opp, view.active_len());
    let universe = view.game().len();

    if view.is_empty() {
        recorder.exit(true);
        return Region::empty(universe);
    }
    // With no priority left to recur on, no odd dominion exists: the Odd
    // side must answer the empty set where the Even side answers the view.
    if player == Owner::Odd && h == 0 {
        recorder.exit(true);
        return Region::empty(universe);
    }

    debug_assert!(player.owns_parity(h), "solver called with the wrong parity of h");
    debug_assert!(
        view.max_active_priority().expect("view is nonempty") <= h,
        "active priority above the ceiling h"
    );

    if p_opp == 0 || h == 0 {
        recorder.exit(true);
        return view.active().clone();
    }

    let opponent = player.opponent();
    let half = p_opp / 2;

    // Opponent dominions up to half the precision, and their attractor.
    let kept = solve_rec(view, player, h, p_own, half, computer, recorder);
    let w = view.active().difference(&kept);
    let w1 = computer.attract(view, opponent, &w);
    let g1 = view.without(&w1);
    debug_assert!(g1.is_total());

    // Strip the top priority and search below it at full precision.
    let tops = g1.active_with_priority(h);
    let g2 = g1.without(&computer.attract(&g1, player, &tops));
    debug_assert!(g2.is_total());
    let w_inner = solve_rec(&g2, opponent, h - 1, p_opp, p_own, computer, recorder);
    let w2 = computer.attract(&g1, opponent, &w_inner);

    // When nothing was removed, the remaining view equals the original one
    // and the final call would repeat the first call argument for argument;
    // its result is already known to remove nothing. Guard-exit duplicates
    // (halved precision zero) stay recorded, they cost one invocation.
    if half > 0 && w1.is_empty() && w2.is_empty() {
        recorder.exit(false);
        return view.active().clone();
    }

    let g3 = g1.without(&w2);
    debug_assert!(g3.is_total());

    // What remains can only hide opponent dominions up to half the
    // precision again.
    let kept3 = solve_rec(&g3, player, h, p_own, half, computer, recorder);
    let w3 = g3.active().difference(&kept3);

    let mut result = view.active().clone();
    result.difference_with(&w1);
    result.difference_with(&w2);
    result.difference_with(&w3);
    recorder.exit(false);
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::Position;

    fn pos(owner: Owner, priority: u32, successors: Vec<usize>) -> Position {
        Position {
            owner,
            priority,
            successors,
            name: None,
        }
    }

    fn single(owner: Owner, priority: u32) -> ParityGame {
        ParityGame::from_positions(vec![pos(owner, priority, vec![0])]).unwrap()
    }

    #[test]
    fn even_self_loop_is_won_by_even() {
        let g = single(Owner::Even, 0);
        let r = solve_improved(&g);
        assert_eq!(r.w_even, Region::from_indices(1, [0]));
        assert!(r.w_odd.is_empty());
    }

    #[test]
    fn odd_priority_self_loop_is_won_by_odd() {
        for owner in [Owner::Even, Owner::Odd] {
            let g = single(owner, 1);
            let r = solve_improved(&g);
            assert_eq!(r.w_odd, Region::from_indices(1, [0]));
            assert!(r.w_even.is_empty());
        }
    }

    #[test]
    fn two_position_split() {
        // pos 0: Even, priority 2, successors {0, 1}; pos 1: Odd, priority 1,
        // self-loop. Even keeps the priority-2 loop, pos 1 is hopeless.
        let g = ParityGame::from_positions(vec![
            pos(Owner::Even, 2, vec![0, 1]),
            pos(Owner::Odd, 1, vec![1]),
        ])
        .unwrap();
        let r = solve_improved(&g);
        assert_eq!(r.w_even, Region::from_indices(2, [0]));
        assert_eq!(r.w_odd, Region::from_indices(2, [1]));
    }

    #[test]
    fn empty_view_returns_the_empty_region() {
        let g = single(Owner::Even, 2);
        let view = SubgameView::new(&g, Region::empty(1));
        let mut rec = Recorder::new();
        assert!(solve_even(&view, 2, 1, 1, &mut rec).is_empty());
        assert!(solve_odd(&view, 1, 1, 1, &mut rec).is_empty());
        assert_eq!(rec.stats().total_invocations, 2);
        assert_eq!(rec.stats().productive_invocations, 0);
    }

    #[test]
    fn zero_opponent_precision_returns_the_view() {
        let g = single(Owner::Odd, 2);
        let view = SubgameView::full(&g);
        let mut rec = Recorder::new();
        assert_eq!(solve_even(&view, 2, 1, 0, &mut rec), *view.active());
    }

    #[test]
    fn odd_side_returns_empty_at_h_zero() {
        let g = single(Owner::Odd, 0);
        let view = SubgameView::full(&g);
        let mut rec = Recorder::new();
        assert!(solve_odd(&view, 0, 1, 1, &mut rec).is_empty());
        // The dual guard: zero even precision yields the whole view.
        assert_eq!(solve_odd(&view, 1, 1, 0, &mut rec), *view.active());
    }

    #[test]
    fn unit_precision_trace_matches_the_hand_expansion() {
        // One Odd-side productive call whose three children all guard-exit:
        // two at zero opponent precision, one at h = 0.
        let g = single(Owner::Odd, 1);
        let view = SubgameView::full(&g);
        let mut rec = Recorder::with_tracing();
        let won = solve_odd(&view, 1, 1, 1, &mut rec);
        assert_eq!(won, Region::from_indices(1, [0]));
        let (stats, tree) = rec.into_parts();
        assert_eq!(stats.total_invocations, 4);
        assert_eq!(stats.productive_invocations, 1);
        let tree = tree.unwrap();
        assert_eq!(tree.node_count(), 4);
        assert_eq!(tree.nodes()[0].children.len(), 3);
        assert_eq!(tree.leaf_count(), 3);
    }
}
