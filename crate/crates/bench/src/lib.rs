//! Deterministic inputs shared by the benchmarks.

use agx_core::{construct_extremal, ChemicalGraph};

/// Circulant graph on `n` vertices joining `i` to `i ± 1` and `i ± 2`; every
/// vertex has degree 4 and the automorphism group is large.
pub fn circulant(n: usize) -> ChemicalGraph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| [(i, (i + 1) % n), (i, (i + 2) % n)])
        .collect();
    ChemicalGraph::new(n, &edges).expect("circulant with n >= 5")
}

/// Connected extremal graphs of the given order over a spread of sizes.
pub fn extremal_family(n: usize) -> Vec<ChemicalGraph> {
    (n - 1..=2 * n)
        .filter_map(|m| construct_extremal(n, m).ok())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_valid() {
        let c = circulant(12);
        assert!(c.degrees().iter().all(|&d| d == 4));
        assert_eq!(c.size(), 24);
        assert!(extremal_family(20).len() > 15);
    }
}
