//! Connected members of `G(n,m)` built step by step, and the membership test.
//!
//! Vertices are laid out as `[V4 | special | V1]`, where the special vertex
//! (present when `2m − n ≢ 0 mod 3`) is the single vertex of degree 2 or 3.

use std::ops::Range;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{canonical_quadruplet, is_connected_range, is_exceptional, Quadruplet};
use crate::graph::ChemicalGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("({n}, {m}) is exceptional; its extremal graph comes from the catalog")]
    ExceptionalPair { n: usize, m: usize },
    #[error("m = {m} outside the connected range for n = {n}")]
    SizeOutOfRange { n: usize, m: usize },
    #[error("({n}, {m}) fails the feasibility condition: {reason}")]
    Infeasible { n: usize, m: usize, reason: String },
}

/// Edges added by one step of the construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepBatch {
    pub step: u8,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionPlan {
    pub n: usize,
    pub m: usize,
    pub quadruplet: Quadruplet,
    pub degree4: Range<usize>,
    pub special: Option<usize>,
    pub pendants: Range<usize>,
    pub steps: Vec<StepBatch>,
    /// Whether step 5 needed the exhaustive completion after the greedy
    /// pass got stuck.
    pub used_fallback: bool,
}

impl ConstructionPlan {
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.steps.iter().flat_map(|s| s.edges.iter().copied())
    }

    pub fn graph(&self) -> ChemicalGraph {
        let edges: Vec<_> = self.edges().collect();
        ChemicalGraph::new(self.n, &edges).expect("construction yields a chemical graph")
    }

    pub fn batch(&self, step: u8) -> &[(usize, usize)] {
        self.steps
            .iter()
            .find(|s| s.step == step)
            .map_or(&[], |s| s.edges.as_slice())
    }
}

/// Checks the four inequalities under which the construction succeeds.
pub fn check_feasibility(n: usize, m: usize) -> Result<Quadruplet, ConstructError> {
    let fail = |reason: String| ConstructError::Infeasible { n, m, reason };
    let q = canonical_quadruplet(n, m).ok_or_else(|| fail("no canonical degree census".into()))?;
    let Quadruplet { t1, t2, t3, t4 } = q;
    if 2 * t2 > t4 || 3 * t3 > t4 {
        return Err(fail(format!(
            "the special vertex needs {} degree-4 neighbors but only {t4} exist",
            2 * t2 + 3 * t3
        )));
    }
    let inner = m as i64 - (t1 + 2 * t2 + 3 * t3) as i64;
    if inner > (t4 * t4.saturating_sub(1) / 2) as i64 {
        return Err(fail(format!("{inner} edges among {t4} degree-4 vertices")));
    }
    if t1 > 4 * t4 {
        return Err(fail(format!("{t1} pendants on {t4} degree-4 vertices")));
    }
    if inner < t4 as i64 - t2 as i64 - 2 * t3 as i64 - 1 {
        return Err(fail(format!(
            "{inner} edges cannot join {t4} degree-4 vertices"
        )));
    }
    Ok(q)
}

pub fn construct_extremal(n: usize, m: usize) -> Result<ChemicalGraph, ConstructError> {
    construction_plan(n, m).map(|p| p.graph())
}

pub fn construction_plan(n: usize, m: usize) -> Result<ConstructionPlan, ConstructError> {
    if !is_connected_range(n, m) {
        return Err(ConstructError::SizeOutOfRange { n, m });
    }
    if is_exceptional(n, m) {
        return Err(ConstructError::ExceptionalPair { n, m });
    }
    let q = check_feasibility(n, m)?;
    let t4 = q.t4;
    let special = (q.t2 + q.t3 == 1).then_some(t4);
    let first_pendant = t4 + q.t2 + q.t3;
    let mut deg = vec![0usize; n];
    let mut adj = vec![0u64; n];
    let mut steps = Vec::new();
    fn add(
        deg: &mut [usize],
        adj: &mut [u64],
        u: usize,
        v: usize,
        batch: &mut Vec<(usize, usize)>,
    ) {
        deg[u] += 1;
        deg[v] += 1;
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        batch.push((u.min(v), u.max(v)));
    }

    // steps 2 and 3: the special vertex takes the first 2 or 3 degree-4 vertices
    let attach = 2 * q.t2 + 3 * q.t3;
    for (step, present) in [(2u8, q.t2 == 1), (3u8, q.t3 == 1)] {
        let mut batch = Vec::new();
        if present {
            for v in 0..attach {
                add(&mut deg, &mut adj, t4, v, &mut batch);
            }
        }
        steps.push(StepBatch { step, edges: batch });
    }

    // step 4: a path through the remaining degree-4 vertices, anchored at
    // the last neighbor of the special vertex
    let mut batch = Vec::new();
    let start = attach.saturating_sub(1);
    for v in start..t4.saturating_sub(1) {
        add(&mut deg, &mut adj, v, v + 1, &mut batch);
    }
    steps.push(StepBatch {
        step: 4,
        edges: batch,
    });

    // step 5: the remaining edges among degree-4 vertices
    let inner = m - (q.t1 + 2 * q.t2 + 3 * q.t3);
    let missing = inner - steps[2].edges.len();
    let residual: Vec<usize> = (0..t4).map(|v| 4 - deg[v]).collect();
    let (extra, used_fallback) = match greedy_fill(&adj[..t4], &residual, missing) {
        Some(e) => (e, false),
        None => (
            exhaustive_fill(&adj[..t4], &residual, missing).ok_or_else(|| {
                ConstructError::Infeasible {
                    n,
                    m,
                    reason: "no placement of the remaining degree-4 edges".into(),
                }
            })?,
            true,
        ),
    };
    let mut batch = Vec::new();
    for (u, v) in extra {
        add(&mut deg, &mut adj, u, v, &mut batch);
    }
    steps.push(StepBatch {
        step: 5,
        edges: batch,
    });

    // step 6: pendants, round-robin over degree-4 vertices with room left
    let mut batch = Vec::new();
    let mut cursor = 0;
    for p in first_pendant..n {
        while deg[cursor % t4] == 4 {
            cursor += 1;
        }
        add(&mut deg, &mut adj, cursor % t4, p, &mut batch);
        cursor += 1;
    }
    steps.push(StepBatch {
        step: 6,
        edges: batch,
    });
    debug_assert!(deg[..t4].iter().all(|&d| d == 4));

    Ok(ConstructionPlan {
        n,
        m,
        quadruplet: q,
        degree4: 0..t4,
        special,
        pendants: first_pendant..n,
        steps,
        used_fallback,
    })
}

/// Repeatedly joins the lexicographically smallest nonadjacent pair that
/// still has room. `None` if it runs out of pairs early.
fn greedy_fill(adj: &[u64], residual: &[usize], count: usize) -> Option<Vec<(usize, usize)>> {
    let k = adj.len();
    let mut adj = adj.to_vec();
    let mut residual = residual.to_vec();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let (u, v) = (0..k)
            .flat_map(|u| (u + 1..k).map(move |v| (u, v)))
            .find(|&(u, v)| residual[u] > 0 && residual[v] > 0 && adj[u] >> v & 1 == 0)?;
        residual[u] -= 1;
        residual[v] -= 1;
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        out.push((u, v));
    }
    Some(out)
}

/// Backtracking search for `count` new edges respecting `residual`.
fn exhaustive_fill(adj: &[u64], residual: &[usize], count: usize) -> Option<Vec<(usize, usize)>> {
    let k = adj.len();
    let pairs: Vec<(usize, usize)> = (0..k)
        .flat_map(|u| (u + 1..k).map(move |v| (u, v)))
        .filter(|&(u, v)| adj[u] >> v & 1 == 0)
        .collect();
    let mut residual = residual.to_vec();
    let mut chosen = Vec::with_capacity(count);

    fn go(
        pairs: &[(usize, usize)],
        from: usize,
        residual: &mut [usize],
        chosen: &mut Vec<(usize, usize)>,
        count: usize,
    ) -> bool {
        if chosen.len() == count {
            return true;
        }
        if residual.iter().sum::<usize>() < 2 * (count - chosen.len()) {
            return false;
        }
        for i in from..pairs.len() {
            if pairs.len() - i < count - chosen.len() {
                return false;
            }
            let (u, v) = pairs[i];
            if residual[u] == 0 || residual[v] == 0 {
                continue;
            }
            residual[u] -= 1;
            residual[v] -= 1;
            chosen.push((u, v));
            if go(pairs, i + 1, residual, chosen, count) {
                return true;
            }
            chosen.pop();
            residual[u] += 1;
            residual[v] += 1;
        }
        false
    }

    go(&pairs, 0, &mut residual, &mut chosen, count).then_some(chosen)
}

/// Membership in `G(n,m)`: no isolated vertex, at most one vertex of degree
/// 2 or 3, and every edge touches a vertex of degree 4.
pub fn is_member_gnm(g: &ChemicalGraph) -> bool {
    let deg = g.degrees();
    deg.iter().all(|&d| d > 0)
        && deg.iter().filter(|&&d| d == 2 || d == 3).count() <= 1
        && g.edges().iter().all(|&(u, v)| deg[u] == 4 || deg[v] == 4)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ag::ag_value;
    use crate::bounds::{upper_bound, EXCEPTIONAL_PAIRS};

    fn valid_pairs(max_n: usize) -> impl Iterator<Item = (usize, usize)> {
        (1..=max_n)
            .flat_map(|n| (0..=2 * n).map(move |m| (n, m)))
            .filter(|&(n, m)| is_connected_range(n, m))
    }

    #[test]
    fn feasible_exactly_off_the_exceptions() {
        for (n, m) in valid_pairs(13) {
            assert_eq!(
                check_feasibility(n, m).is_ok(),
                !EXCEPTIONAL_PAIRS.contains(&(n, m)),
                "({n},{m})"
            );
        }
    }

    #[test]
    fn feasible_for_larger_orders() {
        for (n, m) in valid_pairs(200).filter(|&(n, _)| n >= 14) {
            assert!(check_feasibility(n, m).is_ok(), "({n},{m})");
        }
    }

    #[test]
    fn contract_up_to_forty() {
        for (n, m) in valid_pairs(40).filter(|&p| !is_exceptional(p.0, p.1)) {
            let plan = construction_plan(n, m).unwrap();
            let g = plan.graph();
            assert!(g.is_connected(), "({n},{m})");
            assert!(is_member_gnm(&g), "({n},{m})");
            assert_eq!(g.size(), m);
            let q = plan.quadruplet;
            assert_eq!(g.census().quadruplet(), q.as_array());
            assert_eq!(ag_value(&g), upper_bound(n, m).unwrap(), "({n},{m})");

            let expected = [
                2 * q.t2,
                3 * q.t3,
                q.t4 - q.t2 - 2 * q.t3 - 1,
                m + 1 - q.t1 - q.t2 - q.t3 - q.t4,
                q.t1,
            ];
            for (k, step) in (2u8..=6).enumerate() {
                assert_eq!(plan.batch(step).len(), expected[k], "({n},{m}) step {step}");
            }

            // after step 4 the non-pendant vertices induce a spanning tree
            let core: Vec<(usize, usize)> = plan.steps[..3]
                .iter()
                .flat_map(|s| s.edges.clone())
                .collect();
            let k = q.t4 + q.t2 + q.t3;
            let tree = ChemicalGraph::new(k, &core).unwrap();
            assert!(tree.is_connected() && tree.size() == k - 1, "({n},{m})");
        }
    }

    #[test]
    fn worked_example() {
        let plan = construction_plan(17, 17).unwrap();
        assert_eq!(plan.quadruplet, Quadruplet::new(11, 0, 1, 5));
        assert_eq!(plan.batch(3).len(), 3);
        assert_eq!(plan.batch(4).len(), 2);
        assert_eq!(plan.batch(5).len(), 1);
        assert_eq!(plan.batch(6).len(), 11);
        let g = plan.graph();
        assert_eq!(g.census().quadruplet(), [11, 0, 1, 5]);
        assert_eq!(g.census().x(4, 4), 3);
    }

    #[test]
    fn star_and_refusals() {
        let star = construct_extremal(5, 4).unwrap();
        let k14 = ChemicalGraph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(star.canonical_key(), k14.canonical_key());
        assert_eq!(
            construct_extremal(3, 3),
            Err(ConstructError::ExceptionalPair { n: 3, m: 3 })
        );
        assert_eq!(
            construct_extremal(6, 3),
            Err(ConstructError::SizeOutOfRange { n: 6, m: 3 })
        );
        assert_eq!(
            construct_extremal(5, 11),
            Err(ConstructError::SizeOutOfRange { n: 5, m: 11 })
        );
    }

    #[test]
    fn membership() {
        let k14 = ChemicalGraph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(is_member_gnm(&k14));
        let c3 = ChemicalGraph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!is_member_gnm(&c3));
        // three stars joined in a path through their centers plus a degree-2 vertex
        let g12 = construct_extremal(12, 11).unwrap();
        assert!(is_member_gnm(&g12));
        assert_eq!(g12.census().degree_counts, [0, 8, 1, 0, 3]);
        let with_isolated = k14
            .disjoint_union(&ChemicalGraph::empty(1).unwrap())
            .unwrap();
        assert!(!is_member_gnm(&with_isolated));
    }

    #[test]
    fn fallback_completes_stranded_capacity() {
        // 2-3 already adjacent: greedy takes 0-1 and strands 2 and 3
        let adj = [0, 0, 1 << 3, 1 << 2];
        let residual = [1, 1, 1, 1];
        assert_eq!(greedy_fill(&adj, &residual, 2), None);
        assert_eq!(
            exhaustive_fill(&adj, &residual, 2),
            Some(vec![(0, 2), (1, 3)])
        );
        assert_eq!(exhaustive_fill(&adj, &residual, 3), None);
    }
}
