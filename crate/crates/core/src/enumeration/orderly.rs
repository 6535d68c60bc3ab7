//! Isomorph-free generation by vertex augmentation with canonical deletion.
//!
//! A graph on `k+1` vertices is accepted as a child of its parent on `k`
//! vertices only when the added vertex is, up to automorphism, the vertex a
//! canonical rule would delete. The rule: among vertices of minimum
//! `(degree, neighbor degree sum)`, the one with the largest canonical label.
//! Every isomorphism class then has exactly one parent class, and duplicate
//! children of a single parent are merged by key.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::graph::{bits, canonical_labeling, encode_graph6, ChemicalGraph};

/// Target of a generation run: graphs of order `n` and size `m` with every
/// degree in `min_degree..=4`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Target {
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
}

impl Target {
    /// Necessary conditions for a graph on `k` vertices with `e` edges and
    /// the given degrees to be an induced subgraph of a target graph.
    fn admits(&self, rows: &[u64]) -> bool {
        let k = rows.len();
        let r = self.n - k;
        let mut e2 = 0;
        let mut slack = 0;
        let mut deficit = 0;
        for row in rows {
            let d = row.count_ones() as usize;
            if d + r < self.min_degree {
                return false;
            }
            e2 += d;
            slack += 4 - d;
            deficit += self.min_degree.saturating_sub(d);
        }
        let e = e2 / 2;
        if e > self.m {
            return false;
        }
        let need = self.m - e;
        let to_old = slack.min(4 * r);
        let max_add = to_old + (r * r.saturating_sub(1) / 2).min((4 * r - to_old) / 2);
        let min_add = deficit + (r * self.min_degree).saturating_sub(deficit).div_ceil(2);
        min_add <= need && need <= max_add
    }
}

/// Canonical forms of all targets, sorted by graph6.
pub(crate) fn generate(target: Target) -> Vec<ChemicalGraph> {
    if target.n == 0 {
        return Vec::new();
    }
    let root = ChemicalGraph::empty(1).unwrap();
    if !target.admits(root.rows()) {
        return Vec::new();
    }
    let mut level = vec![root];
    for _ in 1..target.n {
        level = level
            .par_iter()
            .flat_map_iter(|g| children(g, &target))
            .collect();
    }
    let mut out: Vec<(String, ChemicalGraph)> =
        level.into_iter().map(|g| (encode_graph6(&g), g)).collect();
    out.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    out.into_iter().map(|(_, g)| g).collect()
}

fn deletion_invariant(rows: &[u64], v: usize) -> (u32, u32) {
    let d = rows[v].count_ones();
    let s = bits(rows[v]).map(|u| rows[u].count_ones()).sum();
    (d, s)
}

fn children(parent: &ChemicalGraph, target: &Target) -> Vec<ChemicalGraph> {
    let k = parent.order();
    let parent_key = encode_graph6(parent);
    let open: Vec<usize> = (0..k).filter(|&v| parent.degree(v) < 4).collect();
    let room = target.m - parent.size();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut rows = parent.rows().to_vec();
    rows.push(0);

    for_each_subset(&open, 4.min(room), |subset| {
        let mut mask = 0u64;
        for &u in subset {
            rows[u] |= 1 << k;
            mask |= 1 << u;
        }
        rows[k] = mask;
        if target.admits(&rows) {
            if let Some(child) = accept(&rows, &parent_key) {
                if seen.insert(encode_graph6(&child)) {
                    out.push(child);
                }
            }
        }
        for &u in subset {
            rows[u] &= !(1 << k);
        }
    });
    out
}

/// Returns the canonical form of the augmented graph if the last vertex is
/// the canonical deletion choice.
fn accept(rows: &[u64], parent_key: &str) -> Option<ChemicalGraph> {
    let last = rows.len() - 1;
    let inv_last = deletion_invariant(rows, last);
    if (0..last).any(|v| deletion_invariant(rows, v) < inv_last) {
        return None;
    }
    let g = ChemicalGraph::from_rows_unchecked(rows.to_vec());
    let labeling = canonical_labeling(&g);
    let chosen = (0..rows.len())
        .filter(|&v| deletion_invariant(rows, v) == inv_last)
        .max_by_key(|&v| labeling.label[v])
        .unwrap();
    if chosen != last {
        let keep: Vec<usize> = (0..rows.len()).filter(|&v| v != chosen).collect();
        let reduced = g.induced(&keep);
        if canonical_labeling(&reduced).key().as_str() != parent_key {
            return None;
        }
    }
    Some(labeling.form)
}

/// Calls `f` on every subset of `items` with at most `max` elements, in
/// increasing size.
fn for_each_subset(items: &[usize], max: usize, mut f: impl FnMut(&[usize])) {
    let mut buf = Vec::with_capacity(max);
    for size in 0..=max.min(items.len()) {
        rec(items, 0, size, &mut buf, &mut f);
    }

    fn rec(
        items: &[usize],
        from: usize,
        size: usize,
        buf: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]),
    ) {
        if buf.len() == size {
            f(buf);
            return;
        }
        for i in from..items.len() {
            if items.len() - i < size - buf.len() {
                break;
            }
            buf.push(items[i]);
            rec(items, i + 1, size, buf, f);
            buf.pop();
        }
    }
}
