//! Exhaustive isomorph-free enumeration of chemical graphs and of `G(n,m)`,
//! the brute-force maximum oracle, and the catalog of exceptional pairs.

mod cache;
mod orderly;

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ag::{ag_scaled12, ag_value, from_scaled12};
use crate::bounds::{
    canonical_quadruplet, exceptional_value, is_connected_range, is_exceptional, EXCEPTIONAL_PAIRS,
};
use crate::exact::ExactValue;
use crate::graph::{canonical_key, encode_graph6, CanonicalKey, ChemicalGraph};

pub use cache::{Cache, CACHE_ENV, DEFAULT_CACHE_DIR};
use orderly::{generate, Target};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("order {n} exceeds the {mode} budget of {limit}")]
    BudgetExceeded {
        n: usize,
        limit: usize,
        mode: &'static str,
    },
    #[error("no degree census with t2 + t3 <= 1 exists for n = {n}, m = {m}")]
    InfeasiblePair { n: usize, m: usize },
    #[error("m = {m} outside the connected range for n = {n}")]
    SizeOutOfRange { n: usize, m: usize },
    #[error("no chemical graph has order {n} and size {m}")]
    NoGraphs { n: usize, m: usize },
    #[error("catalog entry ({n}, {m}): {reason}")]
    CatalogMismatch { n: usize, m: usize, reason: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Connectivity {
    #[default]
    All,
    Connected,
    Disconnected,
}

impl Connectivity {
    pub fn admits(self, g: &ChemicalGraph) -> bool {
        match self {
            Connectivity::All => true,
            Connectivity::Connected => g.is_connected(),
            Connectivity::Disconnected => !g.is_connected(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EnumTarget {
    /// Every chemical graph of the given order and size.
    AllChemical,
    /// Members of `G(n,m)` only.
    Gnm,
}

impl EnumTarget {
    fn cache_mode(self) -> &'static str {
        match self {
            EnumTarget::AllChemical => "chem",
            EnumTarget::Gnm => "gnm",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EnumSpec {
    pub n: usize,
    pub m: usize,
    pub connectivity: Connectivity,
    pub target: EnumTarget,
}

impl EnumSpec {
    pub fn chemical(n: usize, m: usize) -> Self {
        EnumSpec {
            n,
            m,
            connectivity: Connectivity::All,
            target: EnumTarget::AllChemical,
        }
    }

    pub fn gnm(n: usize, m: usize) -> Self {
        EnumSpec {
            n,
            m,
            connectivity: Connectivity::All,
            target: EnumTarget::Gnm,
        }
    }

    pub fn with_connectivity(mut self, connectivity: Connectivity) -> Self {
        self.connectivity = connectivity;
        self
    }
}

/// Largest orders enumerated without an explicit override.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub all_chemical: usize,
    pub gnm: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            all_chemical: 12,
            gnm: 14,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct EnumOptions {
    /// Worker count; `None` uses the global rayon pool.
    pub threads: Option<usize>,
    pub budget: Budget,
    pub cache: Option<Cache>,
}

impl EnumOptions {
    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = Some(threads);
        self
    }

    pub fn with_cache(mut self, cache: Cache) -> Self {
        self.cache = Some(cache);
        self
    }

    pub fn with_budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }

    fn run<T: Send>(&self, job: impl FnOnce() -> T + Send) -> T {
        match self.threads {
            Some(t) => rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .expect("thread pool")
                .install(job),
            None => job(),
        }
    }
}

/// Canonical forms matching `spec`, one per isomorphism class, sorted by
/// graph6.
pub fn enumerate(spec: &EnumSpec, opts: &EnumOptions) -> Result<Vec<ChemicalGraph>, EnumError> {
    let (limit, mode) = match spec.target {
        EnumTarget::AllChemical => (opts.budget.all_chemical, "all-chemical"),
        EnumTarget::Gnm => (opts.budget.gnm, "G(n,m)"),
    };
    if spec.n > limit {
        return Err(EnumError::BudgetExceeded {
            n: spec.n,
            limit,
            mode,
        });
    }
    if spec.target == EnumTarget::Gnm && canonical_quadruplet(spec.n, spec.m).is_none() {
        return Err(EnumError::InfeasiblePair {
            n: spec.n,
            m: spec.m,
        });
    }
    let tag = spec.target.cache_mode();
    let cached = opts
        .cache
        .as_ref()
        .and_then(|c| c.load(tag, spec.n, spec.m));
    let all = match cached {
        Some(graphs) => graphs,
        None => {
            let graphs = opts.run(|| match spec.target {
                EnumTarget::AllChemical => generate(Target {
                    n: spec.n,
                    m: spec.m,
                    min_degree: 0,
                }),
                EnumTarget::Gnm => generate_gnm(spec.n, spec.m),
            });
            if let Some(c) = &opts.cache {
                // a failed write only costs a recomputation next time
                let _ = c.store(tag, spec.n, spec.m, &graphs);
            }
            graphs
        }
    };
    Ok(all
        .into_iter()
        .filter(|g| spec.connectivity.admits(g))
        .collect())
}

pub fn enumerate_chemical(
    n: usize,
    m: usize,
    connectivity: Connectivity,
) -> Result<Vec<ChemicalGraph>, EnumError> {
    enumerate(
        &EnumSpec::chemical(n, m).with_connectivity(connectivity),
        &EnumOptions::default(),
    )
}

pub fn enumerate_gnm(
    n: usize,
    m: usize,
    connectivity: Connectivity,
) -> Result<Vec<ChemicalGraph>, EnumError> {
    enumerate(
        &EnumSpec::gnm(n, m).with_connectivity(connectivity),
        &EnumOptions::default(),
    )
}

/// Members of `G(n,m)`: a core on the degree-4 vertices, the optional
/// degree-2/3 vertex attached to the core, and pendants filling every core
/// vertex up to degree 4. Distinct cores give non-isomorphic graphs, so
/// duplicates are only merged within a core.
fn generate_gnm(n: usize, m: usize) -> Vec<ChemicalGraph> {
    use rayon::prelude::*;

    let q = canonical_quadruplet(n, m).expect("checked by caller");
    if q.t4 == 0 {
        return Vec::new();
    }
    let outer = q.t1 + 2 * q.t2 + 3 * q.t3;
    if outer > m {
        return Vec::new();
    }
    let core_size = m - outer;
    let min_degree = 4usize.saturating_sub(q.t1 + q.t2 + q.t3);
    let cores = generate(Target {
        n: q.t4,
        m: core_size,
        min_degree,
    });
    let special_degree = 2 * q.t2 + 3 * q.t3;
    let first_pendant = q.t4 + q.t2 + q.t3;
    let t4 = q.t4;

    let mut out: Vec<(String, ChemicalGraph)> = cores
        .par_iter()
        .flat_map_iter(|core| {
            let open: Vec<usize> = (0..t4).filter(|&v| core.degree(v) < 4).collect();
            let mut seen = HashSet::new();
            let mut found = Vec::new();
            let mut attach = |special: &[usize]| {
                let mut rows = core.rows().to_vec();
                rows.resize(n, 0);
                for &v in special {
                    rows[v] |= 1 << t4;
                    rows[t4] |= 1 << v;
                }
                let mut next = first_pendant;
                for v in 0..t4 {
                    while rows[v].count_ones() < 4 {
                        if next >= n {
                            return;
                        }
                        rows[v] |= 1 << next;
                        rows[next] |= 1 << v;
                        next += 1;
                    }
                }
                if next != n {
                    return;
                }
                let g = ChemicalGraph::from_rows(rows).expect("degrees stay within 4");
                let form = crate::graph::canonical_labeling(&g).form;
                let key = encode_graph6(&form);
                if seen.insert(key.clone()) {
                    found.push((key, form));
                }
            };
            if special_degree == 0 {
                attach(&[]);
            } else {
                for_each_combination(&open, special_degree, &mut attach);
            }
            found
        })
        .collect();
    out.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    out.into_iter().map(|(_, g)| g).collect()
}

fn for_each_combination(items: &[usize], size: usize, f: &mut impl FnMut(&[usize])) {
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
            buf.push(items[i]);
            rec(items, i + 1, size, buf, f);
            buf.pop();
        }
    }
    rec(items, 0, size, &mut Vec::with_capacity(size), f);
}

/// The maximum AG value over all chemical graphs of order `n` and size `m`
/// and every graph attaining it.
#[derive(Debug, Clone)]
pub struct MaxResult {
    pub n: usize,
    pub m: usize,
    pub max: ExactValue,
    pub witnesses: Vec<ChemicalGraph>,
    /// Number of isomorphism classes searched.
    pub searched: usize,
}

pub fn brute_force_max(n: usize, m: usize, opts: &EnumOptions) -> Result<MaxResult, EnumError> {
    let graphs = enumerate(&EnumSpec::chemical(n, m), opts)?;
    max_over(n, m, graphs)
}

fn max_over(n: usize, m: usize, graphs: Vec<ChemicalGraph>) -> Result<MaxResult, EnumError> {
    let searched = graphs.len();
    let mut by_value: HashMap<[i64; 4], Vec<ChemicalGraph>> = HashMap::new();
    for g in graphs {
        by_value
            .entry(ag_scaled12(&g.census()))
            .or_default()
            .push(g);
    }
    let (max, witnesses) = by_value
        .into_iter()
        .map(|(k, gs)| (from_scaled12(k), gs))
        .max_by(|a, b| a.0.exact_cmp(&b.0))
        .ok_or(EnumError::NoGraphs { n, m })?;
    Ok(MaxResult {
        n,
        m,
        max,
        witnesses,
        searched,
    })
}

/// Counts of extremal graphs split by connectivity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalCounts {
    pub connected: usize,
    pub disconnected: usize,
}

/// Numbers of connected and non-connected extremal graphs of order `n` and
/// size `m`: members of `G(n,m)`, or the single catalog graph at an
/// exceptional pair.
pub fn extremal_counts(
    n: usize,
    m: usize,
    opts: &EnumOptions,
) -> Result<ExtremalCounts, EnumError> {
    if !is_connected_range(n, m) {
        return Err(EnumError::SizeOutOfRange { n, m });
    }
    if is_exceptional(n, m) {
        return Ok(ExtremalCounts {
            connected: 1,
            disconnected: 0,
        });
    }
    let members = enumerate(&EnumSpec::gnm(n, m), opts)?;
    let connected = members.iter().filter(|g| g.is_connected()).count();
    Ok(ExtremalCounts {
        connected,
        disconnected: members.len() - connected,
    })
}

/// The unique extremal graph at an exceptional pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionRecord {
    pub n: usize,
    pub m: usize,
    pub key: CanonicalKey,
    pub ag: ExactValue,
    pub ub: ExactValue,
}

impl ExceptionRecord {
    pub fn graph(&self) -> ChemicalGraph {
        self.key.graph()
    }

    pub fn gap(&self) -> ExactValue {
        &self.ub - &self.ag
    }
}

pub const CATALOG_FILE: &str = "catalog.json";

/// Recomputes the extremal graph of every exceptional pair by exhaustive
/// search and checks it against the closed forms. A cached catalog is
/// reused only if every record still checks out.
pub fn derive_exception_catalog(
    opts: &EnumOptions,
) -> Result<BTreeMap<(usize, usize), ExceptionRecord>, EnumError> {
    if let Some(records) = opts
        .cache
        .as_ref()
        .and_then(|c| c.load_json::<Vec<ExceptionRecord>>(CATALOG_FILE))
    {
        if records.len() == EXCEPTIONAL_PAIRS.len()
            && records.iter().all(|r| check_record(r).is_ok())
        {
            return Ok(records.into_iter().map(|r| ((r.n, r.m), r)).collect());
        }
    }
    let mut catalog = BTreeMap::new();
    for &(n, m) in &EXCEPTIONAL_PAIRS {
        let mismatch = |reason: String| EnumError::CatalogMismatch { n, m, reason };
        let result = brute_force_max(n, m, opts)?;
        if result.witnesses.len() != 1 {
            return Err(mismatch(format!(
                "{} maximizers instead of one",
                result.witnesses.len()
            )));
        }
        let record = ExceptionRecord {
            n,
            m,
            key: canonical_key(&result.witnesses[0]),
            ag: result.max,
            ub: crate::bounds::upper_bound_formula(n, m),
        };
        check_record(&record)?;
        catalog.insert((n, m), record);
    }
    if let Some(c) = &opts.cache {
        let _ = c.store_json(CATALOG_FILE, &catalog.values().collect::<Vec<_>>());
    }
    Ok(catalog)
}

fn check_record(r: &ExceptionRecord) -> Result<(), EnumError> {
    let mismatch = |reason: String| EnumError::CatalogMismatch {
        n: r.n,
        m: r.m,
        reason,
    };
    let expected =
        exceptional_value(r.n, r.m).ok_or_else(|| mismatch("not an exceptional pair".into()))?;
    let g = r.graph();
    if g.order() != r.n || g.size() != r.m {
        return Err(mismatch(format!(
            "graph {} has the wrong order or size",
            r.key
        )));
    }
    if canonical_key(&g) != r.key {
        return Err(mismatch(format!("{} is not in canonical form", r.key)));
    }
    let ag = ag_value(&g);
    if ag != r.ag || ag != expected {
        return Err(mismatch(format!(
            "AG {ag} differs from the closed form {expected}"
        )));
    }
    Ok(())
}
