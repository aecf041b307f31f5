//! Vertex centralities: degree, closeness, betweenness.
//!
//! All three are tuned for *disconnected* graphs, because the edit sequences
//! this crate studies routinely pass through graphs with isolated vertices:
//!
//! * degree is the plain neighbor count;
//! * closeness is the exponentially damped sum `Σ 2^(−d(v,w))` over all other
//!   vertices, where unreachable vertices contribute 0 — no division by a
//!   possibly-infinite farness;
//! * betweenness counts, for every unordered connected pair, the fraction of
//!   shortest paths through the vertex, with endpoints counting themselves
//!   (a pair's two endpoints each score 1 for that pair). Every vertex of a
//!   connected pair lies on at least one of its shortest paths, so no vertex
//!   of a non-trivial component scores 0 — which is what makes single-edge
//!   changes detectable.
//!
//! An isolated vertex scores exactly 0 under all three. Values depend only
//! on the graph's structure, never on vertex names, so renaming vertices
//! permutes a centrality vector without changing its values.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use crate::graph::{NamedGraph, VertexId};

/// Which centrality a generic operation should use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CentralityKind {
    Degree,
    Betweenness,
    Closeness,
}

impl CentralityKind {
    /// All kinds, handy for exercising an invariant under each of them.
    pub const ALL: [CentralityKind; 3] = [
        CentralityKind::Degree,
        CentralityKind::Betweenness,
        CentralityKind::Closeness,
    ];

    /// The lowercase token used in command lines and output files.
    pub fn as_str(self) -> &'static str {
        match self {
            CentralityKind::Degree => "degree",
            CentralityKind::Betweenness => "betweenness",
            CentralityKind::Closeness => "closeness",
        }
    }
}

impl fmt::Display for CentralityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A per-vertex assignment of centrality values, keyed by vertex name.
#[derive(Debug, Clone, PartialEq)]
pub struct CentralityVector {
    values: BTreeMap<VertexId, f64>,
}

impl CentralityVector {
    pub fn from_map(values: BTreeMap<VertexId, f64>) -> Self {
        CentralityVector { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, v: &VertexId) -> Option<f64> {
        self.values.get(v).copied()
    }

    /// The value for `v`, with vertices absent from the graph scoring 0.
    /// This is the convention that lets vectors over different vertex sets
    /// be compared: a vertex the graph does not have is an isolated vertex
    /// as far as centrality is concerned.
    pub fn get_or_zero(&self, v: &VertexId) -> f64 {
        self.get(v).unwrap_or(0.0)
    }

    /// Entries in sorted vertex order.
    pub fn iter(&self) -> impl Iterator<Item = (&VertexId, f64)> {
        self.values.iter().map(|(v, &x)| (v, x))
    }

    /// The L1 distance `Σ |self(v) − other(v)|` over the union of the two
    /// vertex sets, missing entries counting as 0.
    ///
    /// Terms accumulate in sorted order over the merged key set, so the
    /// result is bit-for-bit identical regardless of argument order — the
    /// symmetry of the distance holds exactly, not just within a tolerance.
    pub fn l1_distance(&self, other: &CentralityVector) -> f64 {
        let mut keys: Vec<&VertexId> = self.values.keys().chain(other.values.keys()).collect();
        keys.sort();
        keys.dedup();
        let mut total = 0.0;
        for v in keys {
            total += (self.get_or_zero(v) - other.get_or_zero(v)).abs();
        }
        total
    }

    /// Largest absolute per-vertex difference, over the union of vertex sets.
    pub fn max_abs_diff(&self, other: &CentralityVector) -> f64 {
        let mut m: f64 = 0.0;
        for (v, &x) in &self.values {
            m = m.max((x - other.get_or_zero(v)).abs());
        }
        for (v, &y) in &other.values {
            if !self.values.contains_key(v) {
                m = m.max(y.abs());
            }
        }
        m
    }
}

/// Exact `2^(−d)` as an f64: a bit pattern write for normal exponents,
/// a shifted mantissa bit in the subnormal range, 0 beyond representability.
fn pow2_neg(d: u32) -> f64 {
    if d <= 1022 {
        f64::from_bits(u64::from(1023 - d) << 52)
    } else if d <= 1074 {
        f64::from_bits(1u64 << (1074 - d))
    } else {
        0.0
    }
}

/// Dense adjacency built once per graph: vertex ids in sorted order plus
/// index-based neighbor lists, so the traversal code works on `usize`.
struct Adjacency {
    ids: Vec<VertexId>,
    adj: Vec<Vec<usize>>,
}

impl Adjacency {
    fn new(g: &NamedGraph) -> Self {
        let ids: Vec<VertexId> = g.vertices().cloned().collect();
        let index: HashMap<&VertexId, usize> =
            ids.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let mut adj = vec![Vec::new(); ids.len()];
        for e in g.edges() {
            let (u, v) = e.endpoints();
            let (i, j) = (index[u], index[v]);
            adj[i].push(j);
            adj[j].push(i);
        }
        // Sorted neighbor lists keep every downstream traversal (and thus
        // every floating-point summation order) deterministic.
        for list in &mut adj {
            list.sort_unstable();
        }
        Adjacency { ids, adj }
    }

    fn len(&self) -> usize {
        self.ids.len()
    }

    /// Hop distances from `src`; `u32::MAX` marks unreachable vertices.
    fn bfs(&self, src: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.len()];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == u32::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

/// Degree centrality: the number of neighbors of each vertex.
pub fn degree_centrality(g: &NamedGraph) -> CentralityVector {
    let a = Adjacency::new(g);
    let values = a
        .ids
        .iter()
        .enumerate()
        .map(|(i, v)| (v.clone(), a.adj[i].len() as f64))
        .collect();
    CentralityVector::from_map(values)
}

/// Closeness centrality: `CC(v) = Σ_{w ≠ v} 2^(−d(v,w))`, summed in sorted
/// vertex order, with unreachable vertices contributing 0.
///
/// The exponential damping keeps the value finite and meaningful on
/// disconnected graphs, where the classical `1/Σd` form degenerates.
pub fn closeness_centrality(g: &NamedGraph) -> CentralityVector {
    let a = Adjacency::new(g);
    let mut values = BTreeMap::new();
    for (i, v) in a.ids.iter().enumerate() {
        let dist = a.bfs(i);
        let mut sum = 0.0;
        for (w, &d) in dist.iter().enumerate() {
            if w != i && d != u32::MAX {
                sum += pow2_neg(d);
            }
        }
        values.insert(v.clone(), sum);
    }
    CentralityVector::from_map(values)
}

/// Betweenness centrality over unordered pairs with the endpoint convention.
///
/// For each unordered pair `{s,t}` of distinct connected vertices, each
/// vertex `v` scores `σ_v(s,t) / σ(s,t)` — the fraction of shortest `s`–`t`
/// paths passing through `v` — where an endpoint is on every one of the
/// pair's paths and therefore scores exactly 1. Disconnected pairs and
/// isolated vertices contribute nothing.
///
/// Interior contributions come from shortest-path dependency accumulation
/// (one BFS per source, dependencies propagated in reverse BFS order); the
/// per-source sums count every unordered pair from both sides, hence the
/// final halving. Endpoint contributions are the number of *other* vertices
/// in the same connected component.
pub fn betweenness_centrality(g: &NamedGraph) -> CentralityVector {
    let a = Adjacency::new(g);
    let n = a.len();
    let mut interior = vec![0.0f64; n];
    let mut reachable = vec![0usize; n];

    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut dist: Vec<u32> = vec![0; n];
    let mut sigma: Vec<f64> = vec![0.0; n];
    let mut delta: Vec<f64> = vec![0.0; n];

    for s in 0..n {
        order.clear();
        dist.iter_mut().for_each(|d| *d = u32::MAX);
        sigma.iter_mut().for_each(|x| *x = 0.0);
        delta.iter_mut().for_each(|x| *x = 0.0);

        dist[s] = 0;
        sigma[s] = 1.0;
        let mut queue = VecDeque::new();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in &a.adj[u] {
                if dist[w] == u32::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
                if dist[w] == dist[u] + 1 {
                    sigma[w] += sigma[u];
                }
            }
        }
        reachable[s] = order.len() - 1;

        // Dependency accumulation in reverse BFS order: each vertex pushes
        // its share of path counts down to its shortest-path predecessors.
        for &w in order.iter().rev() {
            for &u in &a.adj[w] {
                if dist[u] + 1 == dist[w] {
                    // sigma[w] > 0 whenever w was reached, so the division
                    // is safe here.
                    delta[u] += sigma[u] / sigma[w] * (1.0 + delta[w]);
                }
            }
            if w != s {
                interior[w] += delta[w];
            }
        }
    }

    let values = a
        .ids
        .iter()
        .enumerate()
        .map(|(i, v)| (v.clone(), reachable[i] as f64 + interior[i] / 2.0))
        .collect();
    CentralityVector::from_map(values)
}

/// Dispatches to the centrality named by `kind`.
pub fn centrality(kind: CentralityKind, g: &NamedGraph) -> CentralityVector {
    match kind {
        CentralityKind::Degree => degree_centrality(g),
        CentralityKind::Betweenness => betweenness_centrality(g),
        CentralityKind::Closeness => closeness_centrality(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle_graph, line_graph, NamedGraph};

    fn vid(s: &str) -> VertexId {
        VertexId::new(s)
    }

    fn graph(vertices: &[&str], edges: &[(&str, &str)]) -> NamedGraph {
        NamedGraph::from_parts(
            vertices.iter().copied(),
            edges.iter().map(|&(u, v)| (u, v)),
        )
        .unwrap()
    }

    fn values(cv: &CentralityVector) -> Vec<f64> {
        cv.iter().map(|(_, x)| x).collect()
    }

    #[test]
    fn pow2_neg_is_exact() {
        assert_eq!(pow2_neg(0), 1.0);
        assert_eq!(pow2_neg(1), 0.5);
        assert_eq!(pow2_neg(2), 0.25);
        for d in 0..200u32 {
            assert_eq!(pow2_neg(d), 2.0f64.powi(-(d as i32)), "d = {d}");
        }
        assert_eq!(pow2_neg(1074), f64::from_bits(1)); // smallest subnormal
        assert_eq!(pow2_neg(1075), 0.0);
    }

    #[test]
    fn degree_line() {
        let dc = degree_centrality(&line_graph(5).unwrap());
        assert_eq!(values(&dc), vec![1.0, 2.0, 2.0, 2.0, 1.0]);
    }

    #[test]
    fn closeness_examples() {
        // Path a-b-c: ends see (d=1, d=2), middle sees (d=1, d=1).
        let cc = closeness_centrality(&graph(&[], &[("a", "b"), ("b", "c")]));
        assert_eq!(values(&cc), vec![0.75, 1.0, 0.75]);

        // Complete graph on 4: everyone sees 3 vertices at distance 1.
        let k4 = graph(&[], &[("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")]);
        assert_eq!(values(&closeness_centrality(&k4)), vec![1.5; 4]);

        // Cycle of 6: distances 1,1,2,2,3 from every vertex.
        let cc6 = closeness_centrality(&cycle_graph(6).unwrap());
        assert_eq!(values(&cc6), vec![1.625; 6]);

        // Unreachable vertices contribute nothing; isolated vertex scores 0.
        let split = graph(&["z"], &[("a", "b")]);
        assert_eq!(values(&closeness_centrality(&split)), vec![0.5, 0.5, 0.0]);
    }

    #[test]
    fn betweenness_small_graphs() {
        // Path a-b-c: ends score their 2 reachable peers; the middle adds
        // the full {a,c} pair on top.
        let bc = betweenness_centrality(&graph(&[], &[("a", "b"), ("b", "c")]));
        assert_eq!(values(&bc), vec![2.0, 3.0, 2.0]);

        // Path on 4: interior vertices each carry 2 interior pairs fully.
        let bc4 = betweenness_centrality(&line_graph(4).unwrap());
        assert_eq!(values(&bc4), vec![3.0, 5.0, 5.0, 3.0]);

        // 4-cycle: the pair of opposite vertices splits evenly between the
        // two intermediates: 3 endpoints-pairs + 1/2.
        let bc_c4 = betweenness_centrality(&cycle_graph(4).unwrap());
        assert_eq!(values(&bc_c4), vec![3.5; 4]);

        // Complete graph: no interior traffic at all.
        let k4 = graph(&[], &[("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")]);
        assert_eq!(values(&betweenness_centrality(&k4)), vec![3.0; 4]);

        // Star with hub h: hub is an endpoint of 4 pairs and interior to
        // all C(4,2) = 6 leaf pairs; leaves are endpoints only.
        let star = graph(&[], &[("h", "a"), ("h", "b"), ("h", "c"), ("h", "d")]);
        let bc_star = betweenness_centrality(&star);
        assert_eq!(bc_star.get(&vid("h")), Some(10.0));
        assert_eq!(bc_star.get(&vid("a")), Some(4.0));
    }

    #[test]
    fn disconnected_and_isolated() {
        let g = graph(&["z"], &[("a", "b"), ("c", "d"), ("d", "e")]);
        let bc = betweenness_centrality(&g);
        assert_eq!(bc.get(&vid("z")), Some(0.0));
        assert_eq!(bc.get(&vid("a")), Some(1.0));
        assert_eq!(bc.get(&vid("d")), Some(3.0));
        let dc = degree_centrality(&g);
        assert_eq!(dc.get(&vid("z")), Some(0.0));
        let cc = closeness_centrality(&g);
        assert_eq!(cc.get(&vid("z")), Some(0.0));
        // No value anywhere is polluted by the other component.
        assert_eq!(cc.get(&vid("a")), Some(0.5));
    }

    #[test]
    fn dispatch_matches_direct_calls() {
        let g = line_graph(5).unwrap();
        assert_eq!(centrality(CentralityKind::Degree, &g), degree_centrality(&g));
        assert_eq!(
            centrality(CentralityKind::Betweenness, &g),
            betweenness_centrality(&g)
        );
        assert_eq!(
            centrality(CentralityKind::Closeness, &g),
            closeness_centrality(&g)
        );
    }

    #[test]
    fn l1_distance_over_union_of_vertex_sets() {
        let a = CentralityVector::from_map(
            [(vid("a"), 1.0), (vid("b"), 2.0)].into_iter().collect(),
        );
        let b = CentralityVector::from_map(
            [(vid("b"), 0.5), (vid("c"), 4.0)].into_iter().collect(),
        );
        // |1-0| + |2-0.5| + |0-4| = 6.5, and it is symmetric.
        assert_eq!(a.l1_distance(&b), 6.5);
        assert_eq!(b.l1_distance(&a), 6.5);
        assert_eq!(a.l1_distance(&a), 0.0);
    }

    /// Exhaustive betweenness oracle: enumerate every simple path between
    /// every pair by depth-first search, keep the shortest ones, and count
    /// paths through each vertex. Hopelessly slow, obviously correct.
    fn betweenness_oracle(g: &NamedGraph) -> CentralityVector {
        let ids: Vec<VertexId> = g.vertices().cloned().collect();
        let n = ids.len();
        let mut score = vec![0.0f64; n];

        fn all_paths(
            g: &NamedGraph,
            ids: &[VertexId],
            current: usize,
            target: usize,
            visited: &mut Vec<usize>,
            found: &mut Vec<Vec<usize>>,
        ) {
            if current == target {
                found.push(visited.clone());
                return;
            }
            for (w, id) in ids.iter().enumerate() {
                if !visited.contains(&w) && g.has_edge(&ids[current], id) {
                    visited.push(w);
                    all_paths(g, ids, w, target, visited, found);
                    visited.pop();
                }
            }
        }

        for s in 0..n {
            for t in (s + 1)..n {
                let mut found = Vec::new();
                let mut visited = vec![s];
                all_paths(g, &ids, s, t, &mut visited, &mut found);
                if found.is_empty() {
                    continue; // disconnected pair contributes nothing
                }
                let best = found.iter().map(|p| p.len()).min().unwrap();
                let shortest: Vec<&Vec<usize>> =
                    found.iter().filter(|p| p.len() == best).collect();
                let sigma = shortest.len() as f64;
                for v in 0..n {
                    let through = shortest.iter().filter(|p| p.contains(&v)).count();
                    score[v] += through as f64 / sigma;
                }
            }
        }

        CentralityVector::from_map(
            ids.into_iter().zip(score).map(|(v, x)| (v, x)).collect(),
        )
    }

    #[test]
    fn betweenness_matches_path_enumeration() {
        let cases = [
            line_graph(6).unwrap(),
            cycle_graph(5).unwrap(),
            crate::graph::shell_graph(6).unwrap(),
            graph(&["z"], &[("a", "b"), ("b", "c"), ("c", "a"), ("c", "d")]),
            graph(&[], &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("a", "c")]),
        ];
        for g in &cases {
            let fast = betweenness_centrality(g);
            let slow = betweenness_oracle(g);
            assert!(
                fast.max_abs_diff(&slow) < 1e-12,
                "dependency accumulation disagrees with path enumeration on {g}"
            );
        }
    }

    #[test]
    fn renaming_vertices_permutes_values() {
        let g = graph(&["z"], &[("a", "b"), ("b", "c"), ("c", "a"), ("c", "d")]);
        // Rename via a reversing map: a<->p4, b<->p3, c<->p2, d<->p1, z<->p0.
        let renamed = graph(
            &["p0"],
            &[("p4", "p3"), ("p3", "p2"), ("p2", "p4"), ("p2", "p1")],
        );
        let names = [("a", "p4"), ("b", "p3"), ("c", "p2"), ("d", "p1"), ("z", "p0")];
        for kind in CentralityKind::ALL {
            let before = centrality(kind, &g);
            let after = centrality(kind, &renamed);
            for (old, new) in names {
                assert_eq!(
                    before.get(&vid(old)),
                    after.get(&vid(new)),
                    "{kind} not preserved under renaming for {old}->{new}"
                );
            }
        }
    }
}
