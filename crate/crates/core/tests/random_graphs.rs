use agx_core::bounds::{is_connected_range, upper_bound_formula};
use agx_core::{
    ag_value, canonical_key, construct_extremal, is_member_gnm, sharp_bound, ChemicalGraph,
    ExactValue,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Random chemical graph: shuffled candidate pairs added while both ends
/// have room.
fn chemical_graph() -> impl Strategy<Value = ChemicalGraph> {
    (1usize..=20, 0usize..=40, any::<u64>()).prop_map(|(n, want, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        pairs.shuffle(&mut rng);
        let mut deg = vec![0; n];
        let mut edges = Vec::new();
        for (u, v) in pairs {
            if edges.len() == want {
                break;
            }
            if deg[u] < 4 && deg[v] < 4 {
                deg[u] += 1;
                deg[v] += 1;
                edges.push((u, v));
            }
        }
        ChemicalGraph::new(n, &edges).unwrap()
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn key_ignores_labels((g, perm) in chemical_graph().prop_flat_map(|g| {
        let n = g.order();
        (Just(g), permutation(n))
    })) {
        let h = g.relabel(&perm);
        prop_assert_eq!(canonical_key(&g), canonical_key(&h));
        prop_assert_eq!(ag_value(&g), ag_value(&h));
    }

    #[test]
    fn key_is_a_graph_of_the_same_class(g in chemical_graph()) {
        let key = canonical_key(&g);
        let back = key.graph();
        prop_assert_eq!(back.order(), g.order());
        prop_assert_eq!(back.census(), g.census());
        prop_assert_eq!(canonical_key(&back), key);
    }

    #[test]
    fn graph6_round_trip(g in chemical_graph()) {
        prop_assert_eq!(ChemicalGraph::from_graph6(&g.to_graph6()).unwrap(), g);
    }

    #[test]
    fn ag_between_size_and_bound(g in chemical_graph()) {
        let (n, m) = (g.order(), g.size());
        let ag = ag_value(&g);
        prop_assert!(ag >= ExactValue::integer(m as i64));
        prop_assert!((ag.to_f64() - float_ag(&g)).abs() < 1e-9);
        if is_connected_range(n, m) {
            let report = sharp_bound(n, m).unwrap();
            prop_assert!(ag <= report.sharp);
            prop_assert!(report.sharp <= upper_bound_formula(n, m));
        }
    }

    #[test]
    fn constructed_graphs_are_extremal(n in 2usize..=60, pick in any::<prop::sample::Index>()) {
        let sizes: Vec<usize> = (n - 1..=(2 * n).min(n * (n - 1) / 2)).collect();
        let m = sizes[pick.index(sizes.len())];
        match construct_extremal(n, m) {
            Ok(g) => {
                prop_assert!(g.is_connected());
                prop_assert!(is_member_gnm(&g));
                prop_assert_eq!(ag_value(&g), sharp_bound(n, m).unwrap().sharp);
            }
            Err(_) => prop_assert!(n <= 13),
        }
    }
}

fn float_ag(g: &ChemicalGraph) -> f64 {
    g.edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (g.degree(u) as f64, g.degree(v) as f64);
            (a + b) / (2.0 * (a * b).sqrt())
        })
        .sum()
}
