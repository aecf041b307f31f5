//! Distances between graphs induced by a vertex centrality.
//!
//! Two flavors:
//!
//! * the **approximate** distance is the plain L1 difference of the two
//!   centrality vectors — cheap, defined for any pair of graphs, but blind
//!   to how far apart the graphs are along actual edit sequences;
//! * the **exact** distance is the shortest weighted path between the two
//!   graphs in the metagraph over a fixed vertex universe, where each edge
//!   (a single edge toggle) is weighted by the L1 difference across that
//!   toggle. It dominates the approximate distance, and for a sensitive
//!   centrality it is a true metric on graphs.
//!
//! The exact distance explores an exponential state space and is therefore
//! guarded by a universe-size cap. The approximate distance is the workhorse
//! for everything at realistic scale.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use rayon::prelude::*;

use crate::centrality::{centrality, CentralityKind, CentralityVector};
use crate::error::{Error, Result};
use crate::graph::{apply_edit, ged, Edge, EditOp, NamedGraph, VertexId};
use crate::metagraph::{GraphMask, MetagraphIndex, DEFAULT_UNIVERSE_CAP};

/// Absolute tolerance for comparing distance values and centrality vectors.
pub const EQUALITY_TOL: f64 = 1e-9;

/// Threshold below which a centrality change does not count as a change;
/// used by the sensitivity check.
pub const SENSITIVITY_TOL: f64 = 1e-12;

/// How a distance value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistanceMode {
    Approximate,
    Exact,
}

impl DistanceMode {
    pub fn as_str(self) -> &'static str {
        match self {
            DistanceMode::Approximate => "approx",
            DistanceMode::Exact => "exact",
        }
    }
}

impl fmt::Display for DistanceMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A distance value labeled with how it was computed.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceResult {
    pub value: f64,
    pub mode: DistanceMode,
    pub centrality: CentralityKind,
}

/// The approximate centrality distance: `Σ_v |C(g1,v) − C(g2,v)|` over the
/// union of the two vertex sets, where a vertex missing from one graph
/// contributes 0 on that side (an absent vertex is indistinguishable from an
/// isolated one as far as centrality goes).
pub fn approx_distance(kind: CentralityKind, g1: &NamedGraph, g2: &NamedGraph) -> f64 {
    centrality(kind, g1).l1_distance(&centrality(kind, g2))
}

/// The centrality distance between two graphs at edit distance exactly 1 —
/// the weight of their shared metagraph edge. For neighbors the approximate
/// and exact distances coincide, so this is just the L1 difference with the
/// precondition checked.
pub fn neighbor_distance(kind: CentralityKind, g1: &NamedGraph, g2: &NamedGraph) -> Result<f64> {
    let d = ged(g1, g2);
    if d != 1 {
        return Err(Error::NotNeighbors { ged: d });
    }
    Ok(approx_distance(kind, g1, g2))
}

/// The degree distance — the approximate distance under degree centrality.
///
/// On a shared vertex set every edge toggle moves two degrees by one, so
/// this equals `2 · |E1 Δ E2| = 2 · ged`. Across differing vertex sets the
/// factor-2 relation breaks down (an extra isolated vertex costs one edit
/// but changes no degree), which is why this is a named distance of its own
/// rather than a synonym for edit distance.
pub fn degree_distance(g1: &NamedGraph, g2: &NamedGraph) -> f64 {
    approx_distance(CentralityKind::Degree, g1, g2)
}

fn pad_to(universe: &BTreeSet<VertexId>, g: &NamedGraph) -> NamedGraph {
    NamedGraph::from_parts(
        universe.iter().cloned(),
        g.edges().map(|e| {
            let (a, b) = e.endpoints();
            (a.clone(), b.clone())
        }),
    )
    .expect("existing edges cannot form self-loops")
}

/// The exact centrality distance over `universe` with the default cap of
/// [`DEFAULT_UNIVERSE_CAP`] vertices. See [`exact_distance_with_cap`].
pub fn exact_distance(
    kind: CentralityKind,
    g1: &NamedGraph,
    g2: &NamedGraph,
    universe: &BTreeSet<VertexId>,
) -> Result<f64> {
    exact_distance_with_cap(kind, g1, g2, universe, DEFAULT_UNIVERSE_CAP)
}

/// The exact centrality distance: the minimal total centrality change along
/// any edge-toggle sequence from `g1` to `g2` within the fixed `universe`.
///
/// Both graphs are padded with the universe's missing vertices as isolated
/// vertices (which changes no centrality value), then Dijkstra runs over the
/// implicit metagraph with per-toggle L1 weights. Centrality vectors are
/// memoized per visited node, so each graph in the explored region is scored
/// once.
pub fn exact_distance_with_cap(
    kind: CentralityKind,
    g1: &NamedGraph,
    g2: &NamedGraph,
    universe: &BTreeSet<VertexId>,
    cap: usize,
) -> Result<f64> {
    for v in g1.vertices().chain(g2.vertices()) {
        if !universe.contains(v) {
            return Err(Error::VertexOutsideUniverse {
                vertex: v.as_str().to_owned(),
            });
        }
    }
    let idx = MetagraphIndex::new(universe.iter().cloned())?;
    idx.check_cap(cap)?;
    let src = idx.encode(&pad_to(universe, g1))?;
    let dst = idx.encode(&pad_to(universe, g2))?;
    if src == dst {
        return Ok(0.0);
    }

    let mut memo: HashMap<GraphMask, CentralityVector> = HashMap::new();
    let (value, _path) = idx.shortest_path(
        |a, b| {
            for m in [a, b] {
                memo.entry(m)
                    .or_insert_with(|| centrality(kind, &idx.decode(m)));
            }
            memo[&a].l1_distance(&memo[&b])
        },
        src,
        dst,
    )?;
    Ok(value)
}

/// All-pairs exact distances over an entire metagraph, indexed by mask.
///
/// This is the workhorse for whole-universe sweeps (metric-axiom checks,
/// approximate-vs-exact comparisons): centrality vectors are computed once
/// per node, then one Dijkstra per source runs to exhaustion. Sources are
/// processed in parallel; each row is independent, so the result does not
/// depend on scheduling.
pub fn exact_distance_matrix(
    kind: CentralityKind,
    idx: &MetagraphIndex,
    cap: usize,
) -> Result<Vec<Vec<f64>>> {
    idx.check_cap(cap)?;
    let n = idx.node_count() as usize;
    let vectors: Vec<CentralityVector> = idx
        .masks()
        .map(|m| centrality(kind, &idx.decode(m)))
        .collect();

    // Per-toggle weights, precomputed once: weight[mask][bit].
    let bits = idx.pair_count();
    let weights: Vec<Vec<f64>> = idx
        .masks()
        .map(|m| {
            (0..bits)
                .map(|b| vectors[m as usize].l1_distance(&vectors[(m ^ (1 << b)) as usize]))
                .collect()
        })
        .collect();

    (0..n)
        .into_par_iter()
        .map(|src| {
            // Dense Dijkstra over all masks; every weight must be positive
            // or the metagraph is not a metric space to begin with.
            let mut dist = vec![f64::INFINITY; n];
            let mut heap = std::collections::BinaryHeap::new();
            dist[src] = 0.0;
            heap.push(std::cmp::Reverse((0.0f64.to_bits(), src)));
            while let Some(std::cmp::Reverse((dbits, u))) = heap.pop() {
                let d = f64::from_bits(dbits);
                if d > dist[u] {
                    continue;
                }
                for b in 0..bits {
                    let w = weights[u][b];
                    if !(w > 0.0) {
                        return Err(Error::NonPositiveWeight { weight: w });
                    }
                    let v = u ^ (1 << b);
                    let cand = d + w;
                    if cand < dist[v] {
                        dist[v] = cand;
                        heap.push(std::cmp::Reverse((cand.to_bits(), v)));
                    }
                }
            }
            Ok(dist)
        })
        .collect()
}

/// Outcome of a sensitivity check: either every single-edge removal moves
/// some vertex's centrality, or a specific edge witnesses that it does not.
#[derive(Debug, Clone, PartialEq)]
pub enum Sensitivity {
    Sensitive,
    Insensitive { witness: Edge },
}

impl Sensitivity {
    pub fn is_sensitive(&self) -> bool {
        matches!(self, Sensitivity::Sensitive)
    }

    pub fn witness(&self) -> Option<&Edge> {
        match self {
            Sensitivity::Sensitive => None,
            Sensitivity::Insensitive { witness } => Some(witness),
        }
    }
}

/// Checks sensitivity of an arbitrary vertex-scoring function on `g`: for
/// every edge `e`, removing `e` must change at least one vertex's score by
/// more than [`SENSITIVITY_TOL`]. Edges are tried in sorted order and the
/// first counterexample is returned as witness.
pub fn sensitivity_by(
    score: impl Fn(&NamedGraph) -> CentralityVector,
    g: &NamedGraph,
) -> Sensitivity {
    let base = score(g);
    for e in g.edges() {
        let without = apply_edit(g, &EditOp::RemoveEdge(e.clone()))
            .expect("edge is present, removal applies");
        if base.max_abs_diff(&score(&without)) <= SENSITIVITY_TOL {
            return Sensitivity::Insensitive { witness: e.clone() };
        }
    }
    Sensitivity::Sensitive
}

/// Sensitivity of one of the built-in centralities on `g`. A graph with no
/// edges is vacuously sensitive.
pub fn sensitivity(kind: CentralityKind, g: &NamedGraph) -> Sensitivity {
    sensitivity_by(|h| centrality(kind, h), g)
}
