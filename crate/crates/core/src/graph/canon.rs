//! Canonical labeling by individualization-refinement.
//!
//! Vertices are first colored by degree and the coloring is refined to an
//! equitable one (colors ranked by `(old color, sorted neighbor colors)`).
//! Non-discrete colorings are split by individualizing each vertex of the
//! first non-singleton cell in turn. Each discrete leaf gives a relabeled
//! adjacency matrix; the canonical form is the leaf maximizing
//! `(node invariants along the path, relabeled matrix)`.
//!
//! Two prunings keep the tree small:
//! - a subtree whose invariant prefix is below the best leaf's is skipped;
//! - leaves that reproduce an earlier matrix yield automorphisms, which are
//!   used to skip siblings in the same orbit and to abandon subtrees that
//!   are images of the first path.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{bits, encode_graph6, ChemicalGraph};

/// Isomorphism-invariant identifier: the graph6 string of the canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalKey(String);

impl CanonicalKey {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }

    /// Decodes the canonical representative.
    pub fn graph(&self) -> ChemicalGraph {
        ChemicalGraph::from_graph6(&self.0).expect("canonical keys are valid graph6")
    }

    /// Wraps a graph6 string that is already the canonical form of its graph.
    /// Returns `None` when it is not.
    pub fn from_canonical_graph6(s: &str) -> Option<Self> {
        let g = ChemicalGraph::from_graph6(s).ok()?;
        let key = canonical_key(&g);
        (key.0 == s).then_some(key)
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.0)
    }
}

/// Result of canonical labeling.
#[derive(Debug, Clone)]
pub struct CanonicalLabeling {
    /// `label[v]` is the position of vertex `v` in the canonical form.
    pub label: Vec<usize>,
    /// The graph relabeled by `label`.
    pub form: ChemicalGraph,
}

impl CanonicalLabeling {
    pub fn key(&self) -> CanonicalKey {
        CanonicalKey(encode_graph6(&self.form))
    }
}

pub fn canonical_key(g: &ChemicalGraph) -> CanonicalKey {
    canonical_labeling(g).key()
}

pub fn canonical_labeling(g: &ChemicalGraph) -> CanonicalLabeling {
    let n = g.order();
    let nbrs: Vec<[u8; 4]> = (0..n)
        .map(|v| {
            let mut a = [0u8; 4];
            for (k, u) in g.neighbors(v).enumerate() {
                a[k] = u as u8;
            }
            a
        })
        .collect();
    let degs: Vec<u8> = (0..n).map(|v| g.degree(v) as u8).collect();
    let mut search = Search {
        n,
        rows: g.rows(),
        nbrs: &nbrs,
        degs: &degs,
        first: None,
        best: None,
        first_path: Vec::new(),
        autos: Vec::new(),
    };

    let mut colors = degs.clone();
    let ncells = rank(&mut colors);
    let mut trace = Vec::new();
    let mut path = Vec::new();
    search.dfs(colors, ncells, &mut trace, &mut path);

    let best = search.best.expect("search visits at least one leaf");
    let label: Vec<usize> = best.label.iter().map(|&x| x as usize).collect();
    CanonicalLabeling {
        form: ChemicalGraph::from_rows_unchecked(best.cert),
        label,
    }
}

struct Leaf {
    trace: Vec<u64>,
    cert: Vec<u64>,
    label: Vec<u8>,
}

struct Search<'a> {
    n: usize,
    rows: &'a [u64],
    nbrs: &'a [[u8; 4]],
    degs: &'a [u8],
    first: Option<Leaf>,
    best: Option<Leaf>,
    first_path: Vec<u8>,
    autos: Vec<Vec<u8>>,
}

/// Replaces arbitrary color values by their dense rank; returns the count.
fn rank(colors: &mut [u8]) -> usize {
    let mut distinct: Vec<u8> = colors.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let mut map = [0u8; 256];
    for (i, &c) in distinct.iter().enumerate() {
        map[c as usize] = i as u8;
    }
    for c in colors.iter_mut() {
        *c = map[*c as usize];
    }
    distinct.len()
}

impl Search<'_> {
    /// Refines `colors` to the coarsest equitable refinement. Returns the
    /// number of cells and an invariant of the final coloring.
    fn refine(&self, colors: &mut [u8], mut ncells: usize) -> (usize, u64) {
        let n = self.n;
        let mut sigs = vec![0u64; n];
        let mut sorted = Vec::with_capacity(n);
        loop {
            for v in 0..n {
                let mut nc = [0xffu8; 4];
                let d = self.degs[v] as usize;
                for k in 0..d {
                    nc[k] = colors[self.nbrs[v][k] as usize];
                }
                nc[..d].sort_unstable();
                sigs[v] = (colors[v] as u64) << 32 | u32::from_be_bytes(nc) as u64;
            }
            sorted.clear();
            sorted.extend_from_slice(&sigs);
            sorted.sort_unstable();
            sorted.dedup();
            let count = sorted.len();
            for v in 0..n {
                colors[v] = sorted.binary_search(&sigs[v]).unwrap() as u8;
            }
            if count == ncells {
                // stable: fold the signature set into an invariant
                let mut h: u64 = 0xcbf2_9ce4_8422_2325;
                for &s in &sorted {
                    h = (h ^ s).wrapping_mul(0x0000_0100_0000_01b3);
                }
                let mut sizes = [0u8; 64];
                for &c in colors.iter() {
                    sizes[c as usize] += 1;
                }
                for &s in &sizes[..count] {
                    h = (h ^ s as u64).wrapping_mul(0x0000_0100_0000_01b3);
                }
                return (count, (count as u64) << 56 | (h & ((1 << 56) - 1)));
            }
            ncells = count;
        }
    }

    /// Returns `Some(d)` to abandon every node deeper than `d` on the current
    /// path and resume with the next sibling at depth `d`.
    fn dfs(
        &mut self,
        mut colors: Vec<u8>,
        ncells: usize,
        trace: &mut Vec<u64>,
        path: &mut Vec<u8>,
    ) -> Option<usize> {
        let depth = path.len();
        let (ncells, inv) = self.refine(&mut colors, ncells);
        trace.push(inv);
        let result = self.visit(colors, ncells, depth, trace, path);
        trace.pop();
        result
    }

    fn visit(
        &mut self,
        colors: Vec<u8>,
        ncells: usize,
        depth: usize,
        trace: &mut Vec<u64>,
        path: &mut Vec<u8>,
    ) -> Option<usize> {
        let n = self.n;
        if let Some(best) = &self.best {
            if trace[..] < best.trace[..=depth.min(best.trace.len() - 1)] {
                return None;
            }
        }

        if ncells == n {
            return self.leaf(colors, trace, path);
        }

        // target cell: first non-singleton cell in color order
        let mut sizes = [0u8; 64];
        for &c in &colors {
            sizes[c as usize] += 1;
        }
        let target = (0..ncells).find(|&c| sizes[c] > 1).unwrap() as u8;
        let cell: Vec<u8> = (0..n as u8)
            .filter(|&v| colors[v as usize] == target)
            .collect();

        let mut explored: Vec<u8> = Vec::with_capacity(cell.len());
        let mut orbit_autos = usize::MAX;
        let mut orbits: Vec<u8> = Vec::new();
        for &w in &cell {
            if !explored.is_empty() {
                if orbit_autos != self.autos.len() {
                    orbits = self.orbits_fixing(path);
                    orbit_autos = self.autos.len();
                }
                if explored
                    .iter()
                    .any(|&x| orbits[x as usize] == orbits[w as usize])
                {
                    continue;
                }
            }
            explored.push(w);

            let mut child = colors.clone();
            for c in child.iter_mut() {
                if *c >= target {
                    *c += 1;
                }
            }
            child[w as usize] = target;
            path.push(w);
            let r = self.dfs(child, ncells + 1, trace, path);
            path.pop();
            match r {
                Some(d) if d < depth => return Some(d),
                _ => {}
            }
        }
        None
    }

    fn leaf(&mut self, label: Vec<u8>, trace: &[u64], path: &[u8]) -> Option<usize> {
        let n = self.n;
        let mut cert = vec![0u64; n];
        for v in 0..n {
            cert[label[v] as usize] = bits(self.rows[v]).fold(0u64, |acc, u| acc | 1 << label[u]);
        }

        let Some(first) = &self.first else {
            self.first_path = path.to_vec();
            let leaf = Leaf {
                trace: trace.to_vec(),
                cert: cert.clone(),
                label: label.clone(),
            };
            self.first = Some(leaf);
            self.best = Some(Leaf {
                trace: trace.to_vec(),
                cert,
                label,
            });
            return None;
        };

        if first.cert == cert {
            let gamma = compose_auto(&first.label, &label);
            self.autos.push(gamma);
            // the subtree below the divergence from the first path is an
            // automorphic image of a subtree already searched
            let d = self
                .first_path
                .iter()
                .zip(path)
                .position(|(a, b)| a != b)
                .unwrap_or(path.len());
            return Some(d);
        }

        let best = self.best.as_ref().unwrap();
        match trace
            .cmp(&best.trace[..])
            .then_with(|| cert.cmp(&best.cert))
        {
            Ordering::Greater => {
                self.best = Some(Leaf {
                    trace: trace.to_vec(),
                    cert,
                    label,
                });
            }
            Ordering::Equal => {
                let gamma = compose_auto(&best.label, &label);
                self.autos.push(gamma);
            }
            Ordering::Less => {}
        }
        None
    }

    /// Orbit representatives under the stored automorphisms that fix `path`
    /// pointwise.
    fn orbits_fixing(&self, path: &[u8]) -> Vec<u8> {
        let n = self.n;
        let mut parent: Vec<u8> = (0..n as u8).collect();
        fn find(p: &mut [u8], mut x: u8) -> u8 {
            while p[x as usize] != x {
                p[x as usize] = p[p[x as usize] as usize];
                x = p[x as usize];
            }
            x
        }
        for g in &self.autos {
            if path.iter().any(|&v| g[v as usize] != v) {
                continue;
            }
            for v in 0..n as u8 {
                let a = find(&mut parent, v);
                let b = find(&mut parent, g[v as usize]);
                if a != b {
                    parent[a.max(b) as usize] = a.min(b);
                }
            }
        }
        (0..n as u8).map(|v| find(&mut parent, v)).collect()
    }
}

/// Given two labelings producing the same relabeled graph, returns the
/// automorphism `v ↦ reference⁻¹(other(v))`.
fn compose_auto(reference: &[u8], other: &[u8]) -> Vec<u8> {
    let mut inv = vec![0u8; reference.len()];
    for (v, &l) in reference.iter().enumerate() {
        inv[l as usize] = v as u8;
    }
    other.iter().map(|&l| inv[l as usize]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_chemical(rng: &mut ChaCha8Rng, n: usize, tries: usize) -> ChemicalGraph {
        let mut g = ChemicalGraph::empty(n).unwrap();
        for _ in 0..tries {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if let Ok(h) = g.with_edge(u, v) {
                g = h;
            }
        }
        g
    }

    fn shuffled(rng: &mut ChaCha8Rng, g: &ChemicalGraph) -> ChemicalGraph {
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(rng);
        g.relabel(&perm)
    }

    #[test]
    fn star_and_path_examples() {
        let star = ChemicalGraph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let moved = ChemicalGraph::new(5, &[(3, 0), (3, 1), (3, 2), (3, 4)]).unwrap();
        assert_eq!(canonical_key(&star), canonical_key(&moved));

        let p4 = ChemicalGraph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let k13 = ChemicalGraph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_key(&p4), canonical_key(&k13));
    }

    #[test]
    fn form_is_relabeling_by_label() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let g = random_chemical(&mut rng, 12, 30);
            let cl = canonical_labeling(&g);
            assert_eq!(g.relabel(&cl.label), cl.form);
        }
    }

    #[test]
    fn random_relabelings_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for i in 0..100 {
            let n = 1 + i % 20;
            let g = random_chemical(&mut rng, n, 3 * n);
            let key = canonical_key(&g);
            for _ in 0..100 {
                assert_eq!(canonical_key(&shuffled(&mut rng, &g)), key);
            }
        }
    }

    #[test]
    fn symmetric_graphs() {
        // K5 ⊔ K5, Petersen-like circulants, and disjoint cycles stress the
        // automorphism pruning.
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let k5 = ChemicalGraph::from_graph6("D~{").unwrap();
        let two_k5 = k5.disjoint_union(&k5).unwrap();
        let circ: Vec<(usize, usize)> = (0..10)
            .flat_map(|i| [(i, (i + 1) % 10), (i, (i + 3) % 10)])
            .collect();
        let c10_13 = ChemicalGraph::new(10, &circ).unwrap();
        let cycles: Vec<(usize, usize)> = (0..16)
            .map(|i| (i, if i % 4 == 3 { i - 3 } else { i + 1 }))
            .collect();
        let four_c4 = ChemicalGraph::new(16, &cycles).unwrap();
        for g in [two_k5, c10_13, four_c4] {
            let key = canonical_key(&g);
            for _ in 0..20 {
                assert_eq!(canonical_key(&shuffled(&mut rng, &g)), key);
            }
        }
        let c10: Vec<(usize, usize)> = (0..10).map(|i| (i, (i + 1) % 10)).collect();
        let two_c5: Vec<(usize, usize)> = (0..10)
            .map(|i| (i, if i % 5 == 4 { i - 4 } else { i + 1 }))
            .collect();
        assert_ne!(
            canonical_key(&ChemicalGraph::new(10, &c10).unwrap()),
            canonical_key(&ChemicalGraph::new(10, &two_c5).unwrap())
        );
    }

    #[test]
    fn key_roundtrip_is_canonical() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let g = random_chemical(&mut rng, 9, 20);
            let key = canonical_key(&g);
            assert_eq!(canonical_key(&key.graph()), key);
            assert!(CanonicalKey::from_canonical_graph6(key.as_str()).is_some());
        }
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn classes_match_permutation_oracle() {
        // every labeled chemical graph on n <= 6 vertices: keys must agree
        // exactly when the minimal row vectors over all relabelings agree
        for n in 1..=6usize {
            let perms = permutations(n);
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
            let mut seen = std::collections::HashMap::new();
            for mask in 0u32..1 << pairs.len() {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let Ok(g) = ChemicalGraph::new(n, &edges) else {
                    continue;
                };
                let key = canonical_key(&g);
                if let Some(oracle) = seen.get(&key) {
                    let relabeled = perms.iter().any(|p| &g.relabel(p) == oracle);
                    assert!(relabeled, "{key} joins non-isomorphic graphs");
                } else {
                    seen.insert(key, g);
                }
            }
            let reps: Vec<_> = seen.values().collect();
            for (i, a) in reps.iter().enumerate() {
                for b in &reps[i + 1..] {
                    if a.size() == b.size() {
                        assert!(!perms.iter().any(|p| &&a.relabel(p) == b));
                    }
                }
            }
            // all graphs up to n = 5; for n = 6, the 156 graphs minus the 34 with a degree-5 vertex
            let expected = [1, 2, 4, 11, 34, 122][n - 1];
            assert_eq!(seen.len(), expected, "n = {n}");
        }
    }
}
