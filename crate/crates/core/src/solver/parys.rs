//! The original bounded-precision recursion with its two stripping loops.
//!
//! One call strips opponent wins found at half precision until that yields
//! nothing, runs a single full-precision search (only one dominion can be
//! larger than half the game, so the costly call happens once), then strips
//! at half precision again. Both loops run their body at least once. The
//! base guard discards the call when the own-side precision is at most 1,
//! so a call with own precision `p` only accounts for dominions up to
//! `⌊p/2⌋`; the top level therefore starts from twice the game size.

use crate::analysis::Recorder;
use crate::attractor::AttractorComputer;
use crate::game::{Owner, ParityGame, SubgameView};
use crate::region::Region;
use crate::solver::{top_level_priority, Algorithm, SolveResult};

/// Solves the whole game with the two-loop recursion.
pub fn solve_parys(game: &ParityGame) -> SolveResult {
    let mut recorder = Recorder::new();
    solve_parys_with(game, &mut recorder)
}

pub fn solve_parys_with(game: &ParityGame, recorder: &mut Recorder) -> SolveResult {
    let view = SubgameView::full(game);
    let mut computer = AttractorComputer::new(game.len());
    // Twice the game size: the ⌊p/2⌋ guarantee then covers every dominion.
    let p = 2 * game.len() as u64;
    let w_even = parys_rec(
        &view,
        Owner::Even,
        top_level_priority(game),
        p,
        p,
        &mut computer,
        recorder,
    );
    let w_odd = w_even.complement();
    SolveResult {
        algorithm: Algorithm::Parys,
        w_even,
        w_odd,
        stats: recorder.stats().clone(),
    }
}

/// One stripping round: remove the player's attractor to the top priority,
/// search the rest for opponent wins with the given callee precisions, and
/// remove their opponent attractor from the view.
fn strip_round<'a>(
    view: &SubgameView<'a>,
    player: Owner,
    h: u32,
    callee_own: u64,
    callee_opp: u64,
    computer: &mut AttractorComputer,
    recorder: &mut Recorder,
) -> (SubgameView<'a>, Region) {
    let tops = view.active_with_priority(h);
    let below = view.without(&computer.attract(view, player, &tops));
    debug_assert!(below.is_total());
    let opponent_win = parys_rec(
        &below,
        player.opponent(),
        h.saturating_sub(1),
        callee_own,
        callee_opp,
        computer,
        recorder,
    );
    let next = view.without(&computer.attract(view, player.opponent(), &opponent_win));
    debug_assert!(next.is_total());
    (next, opponent_win)
}

fn parys_rec<'a>(
    view: &SubgameView<'a>,
    player: Owner,
    h: u32,
    p_own: u64,
    p_opp: u64,
    computer: &mut AttractorComputer,
    recorder: &mut Recorder,
) -> Region {
    recorder.enter(player, h, p_own, p_opp, view.active_len());
    if view.is_empty() || p_own <= 1 {
        recorder.exit(true);
        return Region::empty(view.game().len());
    }

    debug_assert!(player.owns_parity(h), "solver called with the wrong parity of h");
    debug_assert!(view.max_active_priority().expect("view is nonempty") <= h);

    let half = p_opp / 2;
    let mut current = view.clone();
    loop {
        let (next, opponent_win) = strip_round(&current, player, h, half, p_own, computer, recorder);
        current = next;
        if opponent_win.is_empty() {
            break;
        }
    }
    let (next, _) = strip_round(&current, player, h, p_opp, p_own, computer, recorder);
    current = next;
    loop {
        let (next, opponent_win) = strip_round(&current, player, h, half, p_own, computer, recorder);
        current = next;
        if opponent_win.is_empty() {
            break;
        }
    }

    recorder.exit(false);
    let result = current.active().clone();
    result
}
