//! Dominion checking: closure in the player's favour plus winning
//! everywhere on the induced subgame.

use crate::game::{Owner, SubgameView};
use crate::region::Region;
use crate::solver::oracle::{positional_winning_region, ORACLE_POSITION_CAP};
use crate::solver::zielonka::zielonka_regions;

/// True iff `region` is a dominion for `player` within `view`: the player's
/// positions keep at least one successor inside, the opponent's positions
/// keep all their active successors inside, and the player wins everywhere
/// in the induced subgame. The winner is decided by the enumeration oracle
/// up to its cap and by the Zielonka recursion above it.
pub fn is_dominion(view: &SubgameView, region: &Region, player: Owner) -> bool {
    assert!(region.is_subset_of(view.active()), "region outside the view");
    if region.is_empty() {
        return true;
    }

    let game = view.game();
    let closed = region.iter().all(|v| {
        let mut active_succs = game
            .successors(v)
            .iter()
            .filter(|&&s| view.active().contains(s));
        if game.owner(v) == player {
            active_succs.any(|&s| region.contains(s))
        } else {
            active_succs.all(|&s| region.contains(s))
        }
    });
    if !closed {
        return false;
    }

    let induced = SubgameView::new(game, region.clone());
    let winning = if region.len() <= ORACLE_POSITION_CAP {
        positional_winning_region(&induced, player, ORACLE_POSITION_CAP)
            .expect("within the oracle cap")
    } else {
        let (even, odd) = zielonka_regions(&induced);
        match player {
            Owner::Even => even,
            Owner::Odd => odd,
        }
    };
    winning == *region
}
