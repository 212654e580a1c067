//! The parity game arena: positions with an owner, a priority, and a
//! nonempty successor list, plus derived predecessor lists and per-priority
//! position buckets. Arenas are immutable once constructed; all solving
//! happens on [`SubgameView`]s, never on copies of the arena.

use crate::region::Region;

/// The player controlling a position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Owner {
    Even,
    Odd,
}

impl Owner {
    pub fn opponent(self) -> Owner {
        match self {
            Owner::Even => Owner::Odd,
            Owner::Odd => Owner::Even,
        }
    }

    /// The player winning plays whose maximal recurring priority is `priority`.
    pub fn from_priority(priority: u32) -> Owner {
        if priority % 2 == 0 {
            Owner::Even
        } else {
            Owner::Odd
        }
    }

    /// True iff `priority` has this player's parity.
    pub fn owns_parity(self, priority: u32) -> bool {
        Owner::from_priority(priority) == self
    }
}

/// One position of the arena.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Position {
    pub owner: Owner,
    pub priority: u32,
    pub successors: Vec<usize>,
    pub name: Option<String>,
}

/// An immutable parity game arena over dense position indices `[0..n)`.
#[derive(Clone, Debug)]
pub struct ParityGame {
    positions: Vec<Position>,
    predecessors: Vec<Vec<usize>>,
    by_priority: Vec<Vec<usize>>,
    max_priority: u32,
}

/// An invariant violation reported by [`ParityGame::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// The position has an empty successor list.
    NoSuccessor { position: usize },
    /// A successor index lies outside `[0..n)`.
    DanglingSuccessor { position: usize, successor: usize },
    /// A priority exceeds the declared ceiling.
    PriorityOutOfRange { position: usize, priority: u32 },
}

impl ParityGame {
    /// Builds an arena from positions, deriving the priority ceiling from
    /// the maximal priority present. Returns all invariant violations
    /// instead of a game when any exist.
    pub fn from_positions(positions: Vec<Position>) -> Result<Self, Vec<Violation>> {
        let ceiling = positions.iter().map(|p| p.priority).max().unwrap_or(0);
        let game = Self::from_parts_unchecked(positions, ceiling);
        let violations = game.validate();
        if violations.is_empty() {
            Ok(game)
        } else {
            Err(violations)
        }
    }

    /// Builds an arena without checking invariants; pair with [`validate`].
    /// Dangling successor indices are skipped when deriving predecessors.
    ///
    /// [`validate`]: ParityGame::validate
    pub fn from_parts_unchecked(positions: Vec<Position>, max_priority: u32) -> Self {
        let n = positions.len();
        let mut predecessors = vec![Vec::new(); n];
        let mut by_priority = vec![Vec::new(); max_priority as usize + 1];
        for (i, pos) in positions.iter().enumerate() {
            for &s in &pos.successors {
                if s < n {
                    predecessors[s].push(i);
                }
            }
            if (pos.priority as usize) < by_priority.len() {
                by_priority[pos.priority as usize].push(i);
            }
        }
        ParityGame {
            positions,
            predecessors,
            by_priority,
            max_priority,
        }
    }

    /// Checks every arena invariant, returning one entry per violation.
    pub fn validate(&self) -> Vec<Violation> {
        let n = self.len();
        let mut out = Vec::new();
        for (i, pos) in self.positions.iter().enumerate() {
            if pos.successors.is_empty() {
                out.push(Violation::NoSuccessor { position: i });
            }
            for &s in &pos.successors {
                if s >= n {
                    out.push(Violation::DanglingSuccessor {
                        position: i,
                        successor: s,
                    });
                }
            }
            if pos.priority > self.max_priority {
                out.push(Violation::PriorityOutOfRange {
                    position: i,
                    priority: pos.priority,
                });
            }
        }
        out
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn positions(&self) -> &[Position] {
        &self.positions
    }

    pub fn owner(&self, index: usize) -> Owner {
        self.positions[index].owner
    }

    pub fn priority(&self, index: usize) -> u32 {
        self.positions[index].priority
    }

    pub fn successors(&self, index: usize) -> &[usize] {
        &self.positions[index].successors
    }

    pub fn predecessors(&self, index: usize) -> &[usize] {
        &self.predecessors[index]
    }

    pub fn name(&self, index: usize) -> Option<&str> {
        self.positions[index].name.as_deref()
    }

    /// The declared priority ceiling (the maximal priority for all standard
    /// constructors).
    pub fn max_priority(&self) -> u32 {
        self.max_priority
    }

    /// All positions carrying `priority`, in ascending order.
    pub fn positions_with_priority(&self, priority: u32) -> &[usize] {
        self.by_priority
            .get(priority as usize)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }
}

impl PartialEq for ParityGame {
    fn eq(&self, other: &Self) -> bool {
        // Predecessors and priority buckets are derived from positions.
        self.positions == other.positions && self.max_priority == other.max_priority
    }
}

impl Eq for ParityGame {}

/// A borrowed arena together with the set of positions still in play.
#[derive(Clone, Debug)]
pub struct SubgameView<'a> {
    game: &'a ParityGame,
    active: Region,
}

impl<'a> SubgameView<'a> {
    /// The view of the whole arena.
    pub fn full(game: &'a ParityGame) -> Self {
        SubgameView {
            active: Region::full(game.len()),
            game,
        }
    }

    pub fn new(game: &'a ParityGame, active: Region) -> Self {
        assert_eq!(active.universe(), game.len());
        SubgameView { game, active }
    }

    pub fn game(&self) -> &'a ParityGame {
        self.game
    }

    pub fn active(&self) -> &Region {
        &self.active
    }

    pub fn is_empty(&self) -> bool {
        self.active.is_empty()
    }

    pub fn active_len(&self) -> usize {
        self.active.len()
    }

    /// The view with `removed` taken out of play.
    pub fn without(&self, removed: &Region) -> SubgameView<'a> {
        SubgameView {
            game: self.game,
            active: self.active.difference(removed),
        }
    }

    /// Maximum priority among active positions; `None` on the empty view.
    pub fn max_active_priority(&self) -> Option<u32> {
        (0..=self.game.max_priority())
            .rev()
            .find(|&p| {
                self.game
                    .positions_with_priority(p)
                    .iter()
                    .any(|&v| self.active.contains(v))
            })
    }

    /// Active positions carrying exactly `priority`.
    pub fn active_with_priority(&self, priority: u32) -> Region {
        Region::from_indices(
            self.game.len(),
            self.game
                .positions_with_priority(priority)
                .iter()
                .copied()
                .filter(|&v| self.active.contains(v)),
        )
    }

    /// True iff every active position keeps at least one active successor.
    /// Holds for every view the solvers construct: removals are attractors
    /// or attractor complements.
    pub fn is_total(&self) -> bool {
        self.active.iter().all(|v| {
            self.game
                .successors(v)
                .iter()
                .any(|&s| self.active.contains(s))
        })
    }
}
