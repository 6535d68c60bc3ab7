//! Rows of the three reproduced tables.

use agx_core::bounds::is_connected_range;
use agx_core::{
    enumerate, extremal_counts, sharp_bound, Connectivity, EnumError, EnumOptions, EnumSpec,
    EXCEPTIONAL_PAIRS,
};
use serde::Serialize;

use crate::reference::CHEMICAL_GRAPH_COUNTS;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountRow {
    pub n: usize,
    pub m: usize,
    pub count: usize,
}

/// Counts of all chemical graphs at the pairs listed in
/// [`CHEMICAL_GRAPH_COUNTS`], up to order `max_n`.
pub fn chemical_counts(max_n: usize, opts: &EnumOptions) -> Result<Vec<CountRow>, EnumError> {
    CHEMICAL_GRAPH_COUNTS
        .iter()
        .filter(|&&(n, _, _)| n <= max_n)
        .map(|&(n, m, _)| {
            let count = enumerate(&EnumSpec::chemical(n, m), opts)?.len();
            Ok(CountRow { n, m, count })
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct GapRow {
    pub n: usize,
    pub m: usize,
    pub ag: agx_core::ExactValue,
    pub gap: agx_core::ExactValue,
}

/// Closed-form maxima at the exceptional pairs and their distance to `UB`.
pub fn exceptional_gaps() -> Vec<GapRow> {
    EXCEPTIONAL_PAIRS
        .iter()
        .map(|&(n, m)| {
            let report = sharp_bound(n, m).expect("exceptional pairs are in range");
            GapRow {
                n,
                m,
                gap: report.gap(),
                ag: report.sharp,
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalRow {
    pub n: usize,
    pub m: usize,
    pub connected: usize,
    pub nonconnected: usize,
}

/// Every `(n, m)` with `n ≤ max_n` in the connected size range.
pub fn extremal_pairs(max_n: usize) -> Vec<(usize, usize)> {
    (1..=max_n)
        .flat_map(|n| (n.saturating_sub(1)..=2 * n).map(move |m| (n, m)))
        .filter(|&(n, m)| is_connected_range(n, m))
        .collect()
}

pub fn extremal_row(n: usize, m: usize, opts: &EnumOptions) -> Result<ExtremalRow, EnumError> {
    let counts = extremal_counts(n, m, opts)?;
    Ok(ExtremalRow {
        n,
        m,
        connected: counts.connected,
        nonconnected: counts.disconnected,
    })
}

pub fn extremal_table(max_n: usize, opts: &EnumOptions) -> Result<Vec<ExtremalRow>, EnumError> {
    extremal_pairs(max_n)
        .into_iter()
        .map(|(n, m)| extremal_row(n, m, opts))
        .collect()
}

/// Connected and non-connected counts of an enumeration result.
pub fn split_counts(graphs: &[agx_core::ChemicalGraph]) -> (usize, usize) {
    let connected = graphs
        .iter()
        .filter(|g| Connectivity::Connected.admits(g))
        .count();
    (connected, graphs.len() - connected)
}
