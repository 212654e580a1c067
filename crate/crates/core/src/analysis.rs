//! Call-count instrumentation and complexity bounds for the recursive
//! solvers.
//!
//! Counting (a [`CallStats`]) is always on and O(1) per call; full call-tree
//! tracing is opt-in because traces grow with the recursion itself. The
//! bound side computes two rigorous yardsticks for a run of the improved
//! solver:
//!
//! * [`dp_call_bound`] is the exact worst case of the recursion on
//!   never-empty subgames: `T = 1` when a guard fires, otherwise
//!   `T = 1 + 2·T(same player, h, ⌊p_opp/2⌋) + T(opponent, h−1, swapped)`.
//! * [`binomial_envelope`] is the closed form `3·2^(l+1)·C(h+l+1, l+1)`,
//!   which dominates the DP: productive calls satisfy
//!   `P(h,l) ≤ 1 + 2P(h,l−1) + P(h−1,l) ≤ 2^(l+1)·C(h+l+1,l+1) − 1`, every
//!   call is the root or one of three children of a productive call, and
//!   `l = ⌊log₂ p_own⌋ + ⌊log₂ p_opp⌋` at every productive call.
//!
//! The widely quoted headline figure `2^l·C(h+l,l)` is reported alongside
//! ([`headline_call_figure`]) but never asserted against raw totals: its
//! recurrence counts neither the call itself nor guard exits, and raw totals
//! exceed it at the `l = 0` edge.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;

use crate::game::{Owner, ParityGame};
use crate::solver::top_level_priority;

/// `⌊log₂ x⌋` for `x ≥ 1`.
pub fn floor_log2(x: u64) -> u32 {
    assert!(x >= 1, "floor_log2 of zero");
    63 - x.leading_zeros()
}

/// Aggregate counters for one solver invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CallStats {
    /// Every invocation, productive or not.
    pub total_invocations: u64,
    /// Invocations that passed all guards and ran the recursive body.
    pub productive_invocations: u64,
    /// Deepest recursion level reached; the top-level call has depth 1.
    pub max_depth: u64,
    /// Invocation count per `(player, h, p_own, p_opp)`.
    pub per_level: BTreeMap<(Owner, u32, u64, u64), u64>,
}

impl CallStats {
    pub fn guard_exits(&self) -> u64 {
        self.total_invocations - self.productive_invocations
    }
}

/// One recorded call.
#[derive(Clone, Debug)]
pub struct CallNode {
    pub player: Owner,
    pub h: u32,
    pub p_own: u64,
    pub p_opp: u64,
    pub active_size: usize,
    pub guard_exit: bool,
    pub children: Vec<usize>,
}

/// The recursion structure of one traced run; node 0 is the root and
/// children appear in call order (half-precision, `h−1`, half-precision).
#[derive(Clone, Debug)]
pub struct CallTree {
    nodes: Vec<CallNode>,
}

impl CallTree {
    pub fn nodes(&self) -> &[CallNode] {
        &self.nodes
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn leaf_count(&self) -> usize {
        self.nodes.iter().filter(|n| n.guard_exit).count()
    }

    /// Graphviz rendering; nodes are labelled `player,h,p_own,p_opp,|G|`
    /// and appear in call order.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph call_tree {\n");
        for (i, n) in self.nodes.iter().enumerate() {
            let player = match n.player {
                Owner::Even => "E",
                Owner::Odd => "O",
            };
            out.push_str(&format!(
                "  n{i} [label=\"{player},{},{},{},{}\"];\n",
                n.h, n.p_own, n.p_opp, n.active_size
            ));
        }
        for (i, n) in self.nodes.iter().enumerate() {
            for &c in &n.children {
                out.push_str(&format!("  n{i} -> n{c};\n"));
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        fn build(tree: &CallTree, index: usize) -> serde_json::Value {
            let n = &tree.nodes[index];
            serde_json::json!({
                "player": match n.player { Owner::Even => "even", Owner::Odd => "odd" },
                "h": n.h,
                "p_own": n.p_own,
                "p_opp": n.p_opp,
                "active_size": n.active_size,
                "guard_exit": n.guard_exit,
                "children": n.children.iter().map(|&c| build(tree, c)).collect::<Vec<_>>(),
            })
        }
        build(self, 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unsupported call-tree format {0:?} (expected \"dot\" or \"json\")")]
pub struct UnsupportedFormat(pub String);

/// Renders a recorded call tree as `dot` or `json` text.
pub fn export_call_tree(tree: &CallTree, format: &str) -> Result<String, UnsupportedFormat> {
    match format {
        "dot" => Ok(tree.to_dot()),
        "json" => Ok(serde_json::to_string_pretty(&tree.to_json_value()).expect("tree is valid JSON") + "\n"),
        other => Err(UnsupportedFormat(other.to_string())),
    }
}

/// Collects [`CallStats`] and, when tracing, the [`CallTree`] of one solver
/// invocation. Each invocation owns its recorder.
#[derive(Clone, Debug)]
pub struct Recorder {
    stats: CallStats,
    depth: u64,
    tracing: bool,
    nodes: Vec<CallNode>,
    stack: Vec<usize>,
}

impl Recorder {
    /// Counting only.
    pub fn new() -> Self {
        Recorder {
            stats: CallStats::default(),
            depth: 0,
            tracing: false,
            nodes: Vec::new(),
            stack: Vec::new(),
        }
    }

    /// Counting plus full call-tree tracing.
    pub fn with_tracing() -> Self {
        let mut r = Recorder::new();
        r.tracing = true;
        r
    }

    pub fn enter(&mut self, player: Owner, h: u32, p_own: u64, p_opp: u64, active_size: usize) {
        self.stats.total_invocations += 1;
        self.depth += 1;
        self.stats.max_depth = self.stats.max_depth.max(self.depth);
        *self
            .stats
            .per_level
            .entry((player, h, p_own, p_opp))
            .or_insert(0) += 1;
        if self.tracing {
            let index = self.nodes.len();
            self.nodes.push(CallNode {
                player,
                h,
                p_own,
                p_opp,
                active_size,
                guard_exit: false,
                children: Vec::new(),
            });
            if let Some(&parent) = self.stack.last() {
                self.nodes[parent].children.push(index);
            }
            self.stack.push(index);
        }
    }

    pub fn exit(&mut self, guard_exit: bool) {
        if !guard_exit {
            self.stats.productive_invocations += 1;
        }
        self.depth -= 1;
        if self.tracing {
            let index = self.stack.pop().expect("exit without matching enter");
            self.nodes[index].guard_exit = guard_exit;
        }
    }

    pub fn stats(&self) -> &CallStats {
        &self.stats
    }

    /// The recorded tree, when tracing was enabled and at least one call ran.
    pub fn into_parts(self) -> (CallStats, Option<CallTree>) {
        let tree = if self.tracing && !self.nodes.is_empty() {
            Some(CallTree { nodes: self.nodes })
        } else {
            None
        };
        (self.stats, tree)
    }
}

impl Default for Recorder {
    fn default() -> Self {
        Recorder::new()
    }
}

/// Memo table for [`dp_call_bound`]; reusable across evaluations when a
/// whole grid of parameters is needed.
#[derive(Debug, Default)]
pub struct CallBoundMemo {
    memo: HashMap<(Owner, u32, u64, u64), BigUint>,
}

impl CallBoundMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn eval(&mut self, player: Owner, h: u32, p_own: u64, p_opp: u64) -> BigUint {
        if h == 0 || p_opp == 0 {
            return BigUint::from(1u32);
        }
        let key = (player, h, p_own, p_opp);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let half = self.eval(player, h, p_own, p_opp / 2);
        let swap = self.eval(player.opponent(), h - 1, p_opp, p_own);
        let total = BigUint::from(1u32) + &half + &half + swap;
        self.memo.insert(key, total.clone());
        total
    }
}

/// Exact worst-case invocation count of the improved recursion on
/// never-empty subgames: 1 on a guard, otherwise one plus two half-precision
/// subtrees plus the swapped `h−1` subtree, memoized on
/// `(player, h, p_own, p_opp)`.
pub fn dp_call_bound(player: Owner, h: u32, p_own: u64, p_opp: u64) -> BigUint {
    CallBoundMemo::new().eval(player, h, p_own, p_opp)
}

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut result = BigUint::from(1u32);
    for i in 0..k {
        result = result * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    result
}

/// The rigorous total-invocation envelope `3·2^(l+1)·C(h+l+1, l+1)`.
pub fn binomial_envelope(h: u32, l: u32) -> BigUint {
    let pow = BigUint::from(1u32) << (l as usize + 1);
    BigUint::from(3u32) * pow * binomial(u64::from(h) + u64::from(l) + 1, u64::from(l) + 1)
}

/// The headline figure `2^l·C(h+l, l)`; reported for context only (its
/// accounting excludes the call itself and guard exits).
pub fn headline_call_figure(h: u32, l: u32) -> BigUint {
    (BigUint::from(1u32) << (l as usize)) * binomial(u64::from(h) + u64::from(l), u64::from(l))
}

/// Comparison of a measured run against the DP bound and the envelope at
/// the game's top-level parameters.
#[derive(Clone, Debug)]
pub struct BoundReport {
    pub positions: usize,
    pub top_h: u32,
    pub top_l: u32,
    pub measured_total: u64,
    pub measured_productive: u64,
    pub measured_guard_exits: u64,
    pub max_depth: u64,
    pub depth_bound: u64,
    pub dp_bound: BigUint,
    pub envelope: BigUint,
    pub headline_figure: BigUint,
    pub measured_le_dp: bool,
    pub dp_le_envelope: bool,
    pub depth_ok: bool,
}

impl BoundReport {
    pub fn passes(&self) -> bool {
        self.measured_le_dp && self.dp_le_envelope && self.depth_ok
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "positions": self.positions,
            "top_h": self.top_h,
            "top_l": self.top_l,
            "measured_total": self.measured_total,
            "measured_productive": self.measured_productive,
            "measured_guard_exits": self.measured_guard_exits,
            "max_depth": self.max_depth,
            "depth_bound": self.depth_bound,
            "dp_bound": self.dp_bound.to_string(),
            "envelope": self.envelope.to_string(),
            "headline_figure": self.headline_figure.to_string(),
            "headline_figure_note":
                "headline figure for context; counts neither the call itself nor guard exits",
            "measured_le_dp": self.measured_le_dp,
            "dp_le_envelope": self.dp_le_envelope,
            "depth_ok": self.depth_ok,
        })
    }
}

/// Checks a completed improved-solver run against the bounds at its
/// top-level parameters `(h, n, n)`, with `l = 2·⌊log₂ n⌋`.
pub fn check_bounds(stats: &CallStats, game: &ParityGame) -> BoundReport {
    let n = game.len();
    let top_h = top_level_priority(game);
    let p = n as u64;
    let top_l = 2 * floor_log2(p.max(1));
    let dp = dp_call_bound(Owner::Even, top_h, p, p);
    let envelope = binomial_envelope(top_h, top_l);
    let headline = headline_call_figure(top_h, top_l);
    let measured = BigUint::from(stats.total_invocations);
    let depth_bound = u64::from(top_h) + u64::from(top_l) + 2;
    BoundReport {
        positions: n,
        top_h,
        top_l,
        measured_total: stats.total_invocations,
        measured_productive: stats.productive_invocations,
        measured_guard_exits: stats.guard_exits(),
        max_depth: stats.max_depth,
        depth_bound,
        measured_le_dp: measured <= dp,
        dp_le_envelope: dp <= envelope,
        depth_ok: stats.max_depth <= depth_bound,
        dp_bound: dp,
        envelope,
        headline_figure: headline,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dp_guard_cases_cost_one() {
        for p in [0u64, 1, 5, 100] {
            assert_eq!(dp_call_bound(Owner::Even, 0, p, p), BigUint::from(1u32));
            assert_eq!(dp_call_bound(Owner::Even, 7, p, 0), BigUint::from(1u32));
            assert_eq!(dp_call_bound(Owner::Odd, 0, p, p), BigUint::from(1u32));
        }
    }

    #[test]
    fn dp_of_the_unit_precision_root_is_four() {
        // Root plus two p→0 leaves plus one h→0 leaf.
        assert_eq!(dp_call_bound(Owner::Odd, 1, 1, 1), BigUint::from(4u32));
        assert_eq!(dp_call_bound(Owner::Even, 1, 1, 1), BigUint::from(4u32));
    }

    #[test]
    fn dp_is_player_symmetric() {
        for h in 0..5 {
            for p in [1u64, 2, 3, 7] {
                assert_eq!(
                    dp_call_bound(Owner::Even, h, p, p),
                    dp_call_bound(Owner::Odd, h, p, p)
                );
            }
        }
    }

    #[test]
    fn headline_figure_arithmetic() {
        for l in 0..10u32 {
            assert_eq!(headline_call_figure(0, l), BigUint::from(1u32) << l as usize);
        }
        assert_eq!(headline_call_figure(2, 2), BigUint::from(24u32));
    }

    #[test]
    fn envelope_dominates_dp_on_a_small_grid() {
        for h in 0..=8u32 {
            for n in 1..=64u64 {
                let l = 2 * floor_log2(n);
                assert!(
                    dp_call_bound(Owner::Even, h, n, n) <= binomial_envelope(h, l),
                    "h={h} n={n}"
                );
            }
        }
    }

    #[test]
    fn recurrence_shape_identity_small() {
        // 2·B(h,l−1) + B(h−1,l) ≤ B(h,l) with B(h,l) = 2^l·C(h+l,l).
        for h in 1..=16u32 {
            for l in 1..=16u32 {
                let lhs = BigUint::from(2u32) * headline_call_figure(h, l - 1) + headline_call_figure(h - 1, l);
                assert!(lhs <= headline_call_figure(h, l), "h={h} l={l}");
            }
        }
    }

    #[test]
    fn recorder_counts_and_nests() {
        let mut rec = Recorder::with_tracing();
        rec.enter(Owner::Even, 2, 4, 4, 10);
        rec.enter(Owner::Even, 2, 4, 2, 10);
        rec.exit(true);
        rec.enter(Owner::Odd, 1, 4, 4, 8);
        rec.exit(true);
        rec.exit(false);
        let (stats, tree) = rec.into_parts();
        assert_eq!(stats.total_invocations, 3);
        assert_eq!(stats.productive_invocations, 1);
        assert_eq!(stats.guard_exits(), 2);
        assert_eq!(stats.max_depth, 2);
        let tree = tree.unwrap();
        assert_eq!(tree.node_count(), 3);
        assert_eq!(tree.leaf_count(), 2);
        assert_eq!(tree.nodes()[0].children, vec![1, 2]);
    }

    #[test]
    fn single_node_dot_export() {
        let mut rec = Recorder::with_tracing();
        rec.enter(Owner::Even, 0, 1, 1, 1);
        rec.exit(true);
        let (_, tree) = rec.into_parts();
        let dot = export_call_tree(&tree.unwrap(), "dot").unwrap();
        assert_eq!(dot, "digraph call_tree {\n  n0 [label=\"E,0,1,1,1\"];\n}\n");
    }

    #[test]
    fn unsupported_format_is_an_error() {
        let mut rec = Recorder::with_tracing();
        rec.enter(Owner::Even, 0, 1, 1, 1);
        rec.exit(true);
        let (_, tree) = rec.into_parts();
        assert!(export_call_tree(&tree.unwrap(), "xml").is_err());
    }

    #[test]
    fn floor_log2_basics() {
        assert_eq!(floor_log2(1), 0);
        assert_eq!(floor_log2(2), 1);
        assert_eq!(floor_log2(3), 1);
        assert_eq!(floor_log2(4), 2);
        assert_eq!(floor_log2(u64::MAX), 63);
    }
}
