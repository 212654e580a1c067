//! Classic Zielonka recursion: remove the attractor of the top-priority
//! positions, solve the rest, and either keep the attractor or flip to the
//! opponent's attractor when the opponent won part of the subgame. Exact on
//! every game; serves as the fast mid-scale reference.

use crate::analysis::Recorder;
use crate::attractor::AttractorComputer;
use crate::game::{Owner, ParityGame, SubgameView};
use crate::region::Region;
use crate::solver::{Algorithm, SolveResult};

pub fn solve_zielonka(game: &ParityGame) -> SolveResult {
    let mut recorder = Recorder::new();
    solve_zielonka_with(game, &mut recorder)
}

pub fn solve_zielonka_with(game: &ParityGame, recorder: &mut Recorder) -> SolveResult {
    let view = SubgameView::full(game);
    let mut computer = AttractorComputer::new(game.len());
    let (w_even, w_odd) = zielonka_rec(&view, &mut computer, recorder);
    SolveResult {
        algorithm: Algorithm::Zielonka,
        w_even,
        w_odd,
        stats: recorder.stats().clone(),
    }
}

/// The winning-region pair `(even, odd)` of the positions in `view`.
pub fn zielonka_regions(view: &SubgameView) -> (Region, Region) {
    let mut computer = AttractorComputer::new(view.game().len());
    let mut recorder = Recorder::new();
    zielonka_rec(view, &mut computer, &mut recorder)
}

fn oriented(player: Owner, even: Region, odd: Region) -> (Region, Region) {
    match player {
        Owner::Even => (even, odd),
        Owner::Odd => (odd, even),
    }
}

fn zielonka_rec(
    view: &SubgameView,
    computer: &mut AttractorComputer,
    recorder: &mut Recorder,
) -> (Region, Region) {
    let universe = view.game().len();
    let Some(top) = view.max_active_priority() else {
        recorder.enter(Owner::Even, 0, 0, 0, 0);
        recorder.exit(true);
        return (Region::empty(universe), Region::empty(universe));
    };
    let player = Owner::from_priority(top);
    recorder.enter(player, top, 0, 0, view.active_len());

    let tops = view.active_with_priority(top);
    let own_attractor = computer.attract(view, player, &tops);
    let below = view.without(&own_attractor);
    debug_assert!(below.is_total());

    let (even, odd) = zielonka_rec(&below, computer, recorder);
    let (mut own_win, opponent_win) = oriented(player, even, odd);
    if opponent_win.is_empty() {
        own_win.union_with(&own_attractor);
        recorder.exit(false);
        return oriented(player, own_win, opponent_win);
    }

    let opponent_attractor = computer.attract(view, player.opponent(), &opponent_win);
    let rest = view.without(&opponent_attractor);
    debug_assert!(rest.is_total());
    let (even, odd) = zielonka_rec(&rest, computer, recorder);
    let (own_win, mut opponent_win) = oriented(player, even, odd);
    opponent_win.union_with(&opponent_attractor);
    recorder.exit(false);
    oriented(player, own_win, opponent_win)
}
