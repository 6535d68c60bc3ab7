//! AG-increasing rewrites with exact lower bounds on their gain.
//!
//! Graph moves keep the edge count and never decrease AG by less than the
//! bound of their kind. The quadruplet swaps act on degree censuses only.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ag::{ag_value, cost, f_value};
use crate::bounds::Quadruplet;
use crate::exact::ExactValue;
use crate::graph::ChemicalGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MoveKind {
    /// Degree-2 `u` with nonadjacent neighbors `v` (degree 3) and `w`:
    /// replace `uw` with `vw`.
    RotationA,
    /// Degree-2 `u` on a triangle `u, v, w` with `d_v ≥ 3`, `d_w ≤ 3`, and `x`
    /// of degree 2 or 3 not adjacent to `w`: replace `uw` with `xw`.
    RotationB,
    /// Path `v1 … vr` with `v1 ≁ v(r-1)`, `v2 ≁ vr`, `d(v1) < d(vr)`,
    /// `d(v2) ≤ 3`, `d(v(r-1)) = 4`: replace `v1v2, v(r-1)vr` with
    /// `v1v(r-1), v2vr`.
    ChainSwap,
    /// Census `t2 ≥ 2`: `(t1+1, t2-2, t3+1, t4)`.
    QuadSwapT2,
    /// Census `t3 ≥ 2`: `(t1, t2+1, t3-2, t4+1)`.
    QuadSwapT3,
    /// Census `t2, t3 ≥ 1`: `(t1+1, t2-1, t3-1, t4+1)`.
    QuadSwapMixed,
    /// Isolated `z` and a non-bridge edge `xy` with `d_x = 4`, `d_y ≥ 3`:
    /// replace `xy` with `xz`.
    ComponentEdgeSwap,
}

impl MoveKind {
    pub const ALL: [MoveKind; 7] = [
        MoveKind::RotationA,
        MoveKind::RotationB,
        MoveKind::ChainSwap,
        MoveKind::QuadSwapT2,
        MoveKind::QuadSwapT3,
        MoveKind::QuadSwapMixed,
        MoveKind::ComponentEdgeSwap,
    ];

    /// Kinds that rewrite graphs, in scan order.
    pub const GRAPH_MOVES: [MoveKind; 4] = [
        MoveKind::RotationA,
        MoveKind::RotationB,
        MoveKind::ChainSwap,
        MoveKind::ComponentEdgeSwap,
    ];
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Minimized gain expressions: one per move kind, plus three used to rule
/// out adjacent vertices of equal degree 2 or 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GainBound {
    Move(MoveKind),
    /// Adjacent degree-2 vertices without a common neighbor.
    AdjacentTwos,
    /// Adjacent degree-3 vertices with a common neighbor.
    AdjacentThreesShared,
    /// Adjacent degree-3 vertices without a common neighbor.
    AdjacentThreesApart,
}

impl GainBound {
    pub fn all() -> Vec<GainBound> {
        MoveKind::ALL
            .iter()
            .map(|&k| GainBound::Move(k))
            .chain([
                GainBound::AdjacentTwos,
                GainBound::AdjacentThreesShared,
                GainBound::AdjacentThreesApart,
            ])
            .collect()
    }

    pub fn value(self) -> ExactValue {
        let c = |i: usize, j: usize| cost(i, j).clone();
        // min over `range` of `term`
        let min = |range: std::ops::RangeInclusive<usize>, term: &dyn Fn(usize) -> ExactValue| {
            range.map(term).min().expect("nonempty range")
        };
        match self {
            GainBound::Move(MoveKind::RotationA) => {
                c(1, 4) - c(2, 3)
                    + min(1..=4, &|i| c(4, i) - c(2, i))
                    + min(1..=4, &|j| c(4, j) - c(3, j)) * 2
            }
            GainBound::Move(MoveKind::RotationB) => {
                min(3..=4, &|i| c(1, i) - c(2, i))
                    + min(2..=3, &|k| {
                        min(2..=3, &|j| c(j, k + 1) - c(j, 2))
                            + min(1..=4, &|l| c(l, k + 1) - c(l, k)) * k as i64
                    })
            }
            GainBound::Move(MoveKind::ChainSwap) => min(1..=3, &|i| {
                min(2..=3, &|j| {
                    min(i + 1..=4, &|k| c(i, 4) + c(j, k) - c(i, j) - c(4, k))
                })
            }),
            GainBound::Move(MoveKind::QuadSwapT2) => c(1, 4) - c(2, 4) * 4 + c(3, 4) * 3,
            GainBound::Move(MoveKind::QuadSwapT3) => {
                c(2, 4) * 2 - c(3, 4) * 6 + ExactValue::integer(4)
            }
            GainBound::Move(MoveKind::QuadSwapMixed) => {
                c(1, 4) - c(2, 4) * 2 - c(3, 4) * 3 + ExactValue::integer(4)
            }
            GainBound::Move(MoveKind::ComponentEdgeSwap) => {
                c(1, 4)
                    + min(3..=4, &|i| min(2..=4, &|j| c(i - 1, j) - c(i, j)) - c(4, i))
                    + min(3..=4, &|i| {
                        min(1..=4, &|k| c(i - 1, k) - c(i, k)) * (i as i64 - 2)
                    })
            }
            GainBound::AdjacentTwos => {
                c(1, 3) - c(2, 2)
                    + min(1..=4, &|i| c(3, i) - c(2, i))
                    + min(1..=4, &|j| c(3, j) - c(2, j))
            }
            GainBound::AdjacentThreesShared => {
                c(2, 4) - c(3, 3)
                    + min(1..=4, &|i| c(4, i) - c(3, i))
                    + min(1..=4, &|j| c(4, j) - c(3, j))
                    + min(2..=4, &|k| c(4, k) + c(2, k) - c(3, k) * 2)
            }
            GainBound::AdjacentThreesApart => {
                c(2, 4) - c(3, 3)
                    + min(2..=4, &|i| c(2, i) - c(3, i))
                    + min(1..=4, &|j| c(4, j) - c(3, j))
                    + min(1..=4, &|k| c(4, k) - c(3, k)) * 2
            }
        }
    }
}

/// Guaranteed AG gain of one move of the given kind.
pub fn delta_lower_bound(kind: MoveKind) -> ExactValue {
    GainBound::Move(kind).value()
}

/// The census after a quadruplet swap, if it applies.
pub fn quad_swap(kind: MoveKind, q: &Quadruplet) -> Option<Quadruplet> {
    let Quadruplet { t1, t2, t3, t4 } = *q;
    match kind {
        MoveKind::QuadSwapT2 if t2 >= 2 => Some(Quadruplet::new(t1 + 1, t2 - 2, t3 + 1, t4)),
        MoveKind::QuadSwapT3 if t3 >= 2 => Some(Quadruplet::new(t1, t2 + 1, t3 - 2, t4 + 1)),
        MoveKind::QuadSwapMixed if t2 >= 1 && t3 >= 1 => {
            Some(Quadruplet::new(t1 + 1, t2 - 1, t3 - 1, t4 + 1))
        }
        _ => None,
    }
}

/// Exact change of the census functional under a quadruplet swap.
pub fn quad_swap_gain(kind: MoveKind, q: &Quadruplet) -> Option<ExactValue> {
    quad_swap(kind, q).map(|s| f_value(&s) - f_value(q))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("{kind} move on {vertices:?} no longer applies")]
    StaleMove {
        kind: MoveKind,
        vertices: Vec<usize>,
    },
}

/// A located graph move. `vertices` lists the roles in the order given on
/// [`MoveKind`]: `[u, v, w]`, `[u, v, w, x]`, the chain, or `[x, y, z]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Move {
    pub kind: MoveKind,
    pub vertices: Vec<usize>,
}

type Edges = Vec<(usize, usize)>;

impl Move {
    /// `(removed, added)` edges.
    pub fn edits(&self) -> (Edges, Edges) {
        let v = &self.vertices;
        match self.kind {
            MoveKind::RotationA => (vec![(v[0], v[2])], vec![(v[1], v[2])]),
            MoveKind::RotationB => (vec![(v[0], v[2])], vec![(v[3], v[2])]),
            MoveKind::ChainSwap => {
                let r = v.len();
                (
                    vec![(v[0], v[1]), (v[r - 2], v[r - 1])],
                    vec![(v[0], v[r - 2]), (v[1], v[r - 1])],
                )
            }
            MoveKind::ComponentEdgeSwap => (vec![(v[0], v[1])], vec![(v[0], v[2])]),
            _ => (Vec::new(), Vec::new()),
        }
    }

    /// Whether the precondition of the move holds in `g`.
    pub fn applies(&self, g: &ChemicalGraph) -> bool {
        let v = &self.vertices;
        let n = g.order();
        if v.iter().any(|&x| x >= n) || has_repeats(v) {
            return false;
        }
        let d = |x: usize| g.degree(x);
        match self.kind {
            MoveKind::RotationA => {
                let [u, a, b] = v[..] else { return false };
                d(u) == 2 && g.has_edge(u, a) && g.has_edge(u, b) && !g.has_edge(a, b) && d(a) == 3
            }
            MoveKind::RotationB => {
                let [u, a, b, x] = v[..] else { return false };
                d(u) == 2
                    && g.has_edge(u, a)
                    && g.has_edge(u, b)
                    && g.has_edge(a, b)
                    && d(a) >= 3
                    && d(b) <= 3
                    && (d(x) == 2 || d(x) == 3)
                    && !g.has_edge(x, b)
            }
            MoveKind::ChainSwap => {
                let r = v.len();
                r >= 4
                    && v.windows(2).all(|p| g.has_edge(p[0], p[1]))
                    && !g.has_edge(v[0], v[r - 2])
                    && !g.has_edge(v[1], v[r - 1])
                    && d(v[0]) < d(v[r - 1])
                    && d(v[1]) <= 3
                    && d(v[r - 2]) == 4
            }
            MoveKind::ComponentEdgeSwap => {
                let [x, y, z] = v[..] else { return false };
                d(z) == 0 && g.has_edge(x, y) && d(x) == 4 && d(y) >= 3 && !is_bridge(g, x, y)
            }
            _ => false,
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (removed, added) = self.edits();
        let list = |es: &[(usize, usize)]| {
            es.iter()
                .map(|(a, b)| format!("{a}-{b}"))
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "{}: -{{{}}} +{{{}}}",
            self.kind,
            list(&removed),
            list(&added)
        )
    }
}

fn has_repeats(v: &[usize]) -> bool {
    v.iter().enumerate().any(|(i, x)| v[..i].contains(x))
}

fn is_bridge(g: &ChemicalGraph, x: usize, y: usize) -> bool {
    let cut = g.without_edge(x, y).expect("edge present");
    cut.component_mask(x) >> y & 1 == 0
}

/// Search limits for [`find_move_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MoveSearch {
    /// Longest chain (in vertices) examined by `ChainSwap`.
    pub max_chain: usize,
}

impl Default for MoveSearch {
    fn default() -> Self {
        MoveSearch { max_chain: 6 }
    }
}

/// First applicable move of `kind` in lexicographic vertex order.
pub fn find_move(g: &ChemicalGraph, kind: MoveKind) -> Option<Move> {
    find_move_with(g, kind, MoveSearch::default())
}

pub fn find_move_with(g: &ChemicalGraph, kind: MoveKind, limits: MoveSearch) -> Option<Move> {
    let mut found = None;
    scan(g, kind, limits, &mut |m| {
        found = Some(m);
        true
    });
    found
}

/// Every applicable move of `kind`, in the order [`find_move_with`] meets them.
pub fn all_moves(g: &ChemicalGraph, kind: MoveKind, limits: MoveSearch) -> Vec<Move> {
    let mut out = Vec::new();
    scan(g, kind, limits, &mut |m| {
        out.push(m);
        false
    });
    out
}

/// Feeds applicable moves to `visit` until it returns `true`.
fn scan(
    g: &ChemicalGraph,
    kind: MoveKind,
    limits: MoveSearch,
    visit: &mut dyn FnMut(Move) -> bool,
) {
    let n = g.order();
    let mut offer = |vertices: Vec<usize>| {
        let m = Move { kind, vertices };
        m.applies(g) && visit(m)
    };
    let twos = || (0..n).filter(|&u| g.degree(u) == 2);
    let ends = |u: usize| {
        let nb: Vec<usize> = g.neighbors(u).collect();
        [(nb[0], nb[1]), (nb[1], nb[0])]
    };
    match kind {
        MoveKind::RotationA => {
            for u in twos() {
                for (a, b) in ends(u) {
                    if offer(vec![u, a, b]) {
                        return;
                    }
                }
            }
        }
        MoveKind::RotationB => {
            for u in twos() {
                for (a, b) in ends(u) {
                    for x in 0..n {
                        if offer(vec![u, a, b, x]) {
                            return;
                        }
                    }
                }
            }
        }
        MoveKind::ChainSwap => {
            let mut path = Vec::with_capacity(limits.max_chain);
            for s in (0..n).filter(|&s| g.degree(s) < 4) {
                path.clear();
                path.push(s);
                if chain_dfs(g, &mut path, limits.max_chain, &mut offer) {
                    return;
                }
            }
        }
        MoveKind::ComponentEdgeSwap => {
            let mut oriented: Vec<(usize, usize)> = g
                .edges()
                .into_iter()
                .flat_map(|(a, b)| [(a, b), (b, a)])
                .collect();
            oriented.sort_unstable();
            for z in (0..n).filter(|&z| g.degree(z) == 0) {
                for &(x, y) in &oriented {
                    if offer(vec![x, y, z]) {
                        return;
                    }
                }
            }
        }
        _ => {}
    }
}

/// Depth-first over simple paths extending `path`; the second vertex must
/// have degree at most 3.
fn chain_dfs(
    g: &ChemicalGraph,
    path: &mut Vec<usize>,
    max: usize,
    offer: &mut dyn FnMut(Vec<usize>) -> bool,
) -> bool {
    if path.len() >= 4 && offer(path.clone()) {
        return true;
    }
    if path.len() == max {
        return false;
    }
    let last = *path.last().unwrap();
    for next in g.neighbors(last) {
        if path.contains(&next) || (path.len() == 1 && g.degree(next) > 3) {
            continue;
        }
        path.push(next);
        if chain_dfs(g, path, max, offer) {
            return true;
        }
        path.pop();
    }
    false
}

/// Applies `mv`, checking its precondition first.
pub fn apply_move(g: &ChemicalGraph, mv: &Move) -> Result<ChemicalGraph, MoveError> {
    let stale = || MoveError::StaleMove {
        kind: mv.kind,
        vertices: mv.vertices.clone(),
    };
    if !mv.applies(g) {
        return Err(stale());
    }
    let (removed, added) = mv.edits();
    g.replace_edges(&removed, &added).map_err(|_| stale())
}

/// One applied move and its exact gain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStep {
    pub mv: Move,
    pub gain: ExactValue,
}

#[derive(Debug, Clone)]
pub struct LocalSearch {
    pub start: ChemicalGraph,
    pub result: ChemicalGraph,
    pub steps: Vec<SearchStep>,
}

/// Applies graph moves (scan order RotationA, RotationB, ChainSwap,
/// ComponentEdgeSwap; first found wins) until none applies. A heuristic:
/// fixed points need not be extremal.
pub fn local_search(g: &ChemicalGraph) -> ChemicalGraph {
    local_search_traced(g, MoveSearch::default()).result
}

pub fn local_search_traced(g: &ChemicalGraph, limits: MoveSearch) -> LocalSearch {
    let mut current = g.clone();
    let mut value = ag_value(&current);
    let mut steps = Vec::new();
    while let Some(mv) = MoveKind::GRAPH_MOVES
        .iter()
        .find_map(|&k| find_move_with(&current, k, limits))
    {
        let next = apply_move(&current, &mv).expect("move found on this graph");
        let next_value = ag_value(&next);
        let gain = &next_value - &value;
        debug_assert!(gain >= delta_lower_bound(mv.kind));
        steps.push(SearchStep { mv, gain });
        current = next;
        value = next_value;
    }
    LocalSearch {
        start: g.clone(),
        result: current,
        steps,
    }
}
