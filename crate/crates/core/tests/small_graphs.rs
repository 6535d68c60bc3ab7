//! Exhaustive checks over every chemical graph with at most seven vertices.

use std::sync::OnceLock;

use agx_core::bounds::{canonical_quadruplet, is_connected_range};
use agx_core::{
    ag_value, all_moves, apply_move, decode_graph6, delta_lower_bound, enumerate_chemical,
    enumerate_gnm, f_value, local_search_traced, sharp_bound, ChemicalGraph, Connectivity,
    MoveKind, MoveSearch,
};

fn all_small() -> &'static [ChemicalGraph] {
    static GRAPHS: OnceLock<Vec<ChemicalGraph>> = OnceLock::new();
    GRAPHS.get_or_init(|| {
        let mut out = Vec::new();
        for n in 1..=7 {
            for m in 0..=(2 * n).min(n * (n - 1) / 2) {
                out.extend(enumerate_chemical(n, m, Connectivity::All).unwrap());
            }
        }
        out
    })
}

#[test]
fn corpus_size() {
    // graph atlas entries with maximum degree 4, by order
    let per_order: Vec<usize> = (1..=7)
        .map(|n| all_small().iter().filter(|g| g.order() == n).count())
        .collect();
    assert_eq!(per_order, [1, 2, 4, 11, 34, 122, 510]);
}

#[test]
fn census_identities_and_ag_floor() {
    for g in all_small() {
        let c = g.census();
        assert!(c.is_consistent(), "{}", g.to_graph6());
        assert_eq!(c.order(), g.order());
        assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.size());
        let ag = ag_value(g);
        assert!(
            ag >= agx_core::ExactValue::integer(g.size() as i64),
            "{}",
            g.to_graph6()
        );
    }
}

#[test]
fn graph6_round_trip() {
    for g in all_small() {
        let text = g.to_graph6();
        assert_eq!(&decode_graph6(&text).unwrap(), g);
        assert_eq!(g.canonical_key().as_str(), text);
    }
}

#[test]
fn every_move_gains_at_least_its_bound() {
    let limits = MoveSearch { max_chain: 7 };
    let mut applied = [0usize; 4];
    for g in all_small() {
        let before = ag_value(g);
        for (slot, &kind) in MoveKind::GRAPH_MOVES.iter().enumerate() {
            for mv in all_moves(g, kind, limits) {
                let h = apply_move(g, &mv).unwrap();
                assert_eq!(h.size(), g.size());
                assert!(h.census().is_consistent());
                let gain = ag_value(&h) - &before;
                assert!(gain >= delta_lower_bound(kind), "{} {mv}", g.to_graph6());
                if kind != MoveKind::ComponentEdgeSwap && g.is_connected() {
                    assert!(h.is_connected(), "{} {mv}", g.to_graph6());
                }
                applied[slot] += 1;
            }
        }
    }
    assert!(applied.iter().all(|&k| k > 0), "{applied:?}");
}

#[test]
fn local_search_is_monotone_and_bounded() {
    for g in all_small() {
        let run = local_search_traced(g, MoveSearch::default());
        for step in &run.steps {
            assert!(step.gain >= delta_lower_bound(step.mv.kind));
        }
        let (n, m) = (g.order(), g.size());
        if is_connected_range(n, m) {
            assert!(
                ag_value(&run.result) <= sharp_bound(n, m).unwrap().sharp,
                "{}",
                g.to_graph6()
            );
        }
    }
}

#[test]
fn gnm_members_attain_the_census_functional() {
    for n in 2..=10 {
        for m in n - 1..=(2 * n).min(n * (n - 1) / 2) {
            let Some(q) = canonical_quadruplet(n, m) else {
                continue;
            };
            let target = f_value(&q);
            for g in enumerate_gnm(n, m, Connectivity::All).unwrap() {
                assert_eq!(ag_value(&g), target, "({n},{m}) {}", g.to_graph6());
            }
        }
    }
}
