//! Exact arithmetic-geometric index computations on chemical graphs
//! (simple graphs with maximum degree 4): sharp upper bounds, extremal
//! constructions, isomorph-free enumeration and AG-improving moves.

pub mod ag;
pub mod bounds;
pub mod constructor;
pub mod enumeration;
pub mod exact;
pub mod graph;
pub mod transforms;

pub use ag::{ag_value, edge_cost, exact_compare, f_value, AgError};
pub use bounds::{
    canonical_quadruplet, sharp_bound, upper_bound, BoundReport, BoundsError, Quadruplet,
    EXCEPTIONAL_PAIRS,
};
pub use constructor::{
    construct_extremal, construction_plan, is_member_gnm, ConstructError, ConstructionPlan,
};
pub use enumeration::{
    brute_force_max, derive_exception_catalog, enumerate, enumerate_chemical, enumerate_gnm,
    extremal_counts, Cache, Connectivity, EnumError, EnumOptions, EnumSpec, EnumTarget,
    ExceptionRecord, ExtremalCounts, MaxResult,
};
pub use exact::ExactValue;
pub use graph::{
    canonical_key, canonical_labeling, decode_graph6, encode_graph6, CanonicalKey,
    CanonicalLabeling, Census, ChemicalGraph, GraphError,
};
pub use transforms::{
    all_moves, apply_move, delta_lower_bound, find_move, find_move_with, local_search,
    local_search_traced, GainBound, LocalSearch, Move, MoveError, MoveKind, MoveSearch, SearchStep,
};
