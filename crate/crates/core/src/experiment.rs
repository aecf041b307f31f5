//! The dynamic-network rank experiment: is the real next snapshot closer to
//! the current one (under a centrality distance) than random change of the
//! same magnitude?
//!
//! For every consecutive snapshot pair, the pipeline measures the edit
//! distance R between them, draws a batch of random graphs at exactly that
//! R from the current snapshot, and ranks the observed successor's
//! centrality distance inside the batch. Rank 0 means "the real evolution
//! moved centralities less than every random same-size change" — the
//! signature of structure-preserving dynamics.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::centrality::{closeness_centrality, CentralityKind};
use crate::distance::approx_distance;
use crate::error::{Error, Result};
use crate::graph::{ged, NamedGraph, VertexId};
use crate::sampler::sample_at_radius_within;

/// A timestamped interaction between two distinct endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeEvent {
    pub u: VertexId,
    pub v: VertexId,
    pub timestamp: u64,
}

/// How event windows turn into snapshot edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiscretizeMode {
    /// Snapshot t holds exactly the edges with at least one event in
    /// window t.
    Interaction,
    /// Snapshot t holds the union of all edges seen in windows 0..=t.
    Cumulative,
}

impl DiscretizeMode {
    pub fn as_str(self) -> &'static str {
        match self {
            DiscretizeMode::Interaction => "interaction",
            DiscretizeMode::Cumulative => "cumulative",
        }
    }
}

impl fmt::Display for DiscretizeMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Discretization parameters, kept with the dynamic graph they produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Discretization {
    pub window: u64,
    pub mode: DiscretizeMode,
}

/// An ordered sequence of snapshots over one shared vertex universe.
#[derive(Debug, Clone, PartialEq)]
pub struct DynamicGraph {
    source: String,
    discretization: Option<Discretization>,
    timesteps: Vec<NamedGraph>,
}

impl DynamicGraph {
    /// Wraps snapshots, enforcing that there is at least one and that all
    /// of them share a single vertex set (the fixed-population model that
    /// makes same-radius sampling well-defined at every step).
    pub fn new(source: impl Into<String>, timesteps: Vec<NamedGraph>) -> Result<Self> {
        if timesteps.is_empty() {
            return Err(Error::TooFewTimesteps { got: 0 });
        }
        let universe = timesteps[0].vertex_set();
        for (t, g) in timesteps.iter().enumerate().skip(1) {
            if g.vertex_set() != universe {
                return Err(Error::UniverseMismatch { timestep: t });
            }
        }
        Ok(DynamicGraph {
            source: source.into(),
            discretization: None,
            timesteps,
        })
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn discretization(&self) -> Option<Discretization> {
        self.discretization
    }

    pub fn timesteps(&self) -> &[NamedGraph] {
        &self.timesteps
    }

    pub fn len(&self) -> usize {
        self.timesteps.len()
    }

    pub fn is_empty(&self) -> bool {
        false // the constructor rejects empty sequences
    }

    /// The shared vertex universe.
    pub fn universe(&self) -> &BTreeSet<VertexId> {
        self.timesteps[0].vertex_set()
    }
}

/// Buckets a sorted event trace into fixed-width windows of `window`
/// seconds, starting at the first event's timestamp. Every snapshot's
/// vertex set is the full trace universe (every endpoint ever seen), so a
/// vertex quiet in some window is an isolated vertex there, not a missing
/// one. Windows with no events produce empty (interaction) or carried-over
/// (cumulative) snapshots.
pub fn discretize(
    events: &[EdgeEvent],
    window: u64,
    mode: DiscretizeMode,
) -> Result<DynamicGraph> {
    if events.is_empty() {
        return Err(Error::EmptyTrace);
    }
    if window == 0 {
        return Err(Error::InvalidSize { got: 0, min: 1 });
    }
    let t0 = events[0].timestamp;
    let mut previous = t0;
    for (i, e) in events.iter().enumerate() {
        if e.timestamp < previous {
            return Err(Error::NonMonotoneTimestamps {
                line: i + 1,
                got: e.timestamp,
                previous,
            });
        }
        previous = e.timestamp;
    }

    let universe: BTreeSet<VertexId> = events
        .iter()
        .flat_map(|e| [e.u.clone(), e.v.clone()])
        .collect();
    let last_window = ((events.last().expect("non-empty").timestamp - t0) / window) as usize;

    let mut per_window: Vec<Vec<(VertexId, VertexId)>> = vec![Vec::new(); last_window + 1];
    for e in events {
        let w = ((e.timestamp - t0) / window) as usize;
        per_window[w].push((e.u.clone(), e.v.clone()));
    }

    let mut timesteps = Vec::with_capacity(last_window + 1);
    let mut cumulative: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
    for bucket in per_window {
        let edges: Vec<(VertexId, VertexId)> = match mode {
            DiscretizeMode::Interaction => bucket,
            DiscretizeMode::Cumulative => {
                for (u, v) in bucket {
                    let pair = if u <= v { (u, v) } else { (v, u) };
                    cumulative.insert(pair);
                }
                cumulative.iter().cloned().collect()
            }
        };
        timesteps.push(NamedGraph::from_parts(universe.iter().cloned(), edges)?);
    }

    let mut dg = DynamicGraph::new("events", timesteps)?;
    dg.discretization = Some(Discretization { window, mode });
    Ok(dg)
}

/// Which vertices the null model may rewire at each step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SamplingPool {
    /// All vertices of the universe (default: fixed-population reading).
    FullUniverse,
    /// Only vertices with at least one edge in the current snapshot.
    ActiveVertices,
}

/// Distribution summary of the sample distances at one timestep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Percentiles {
    pub p5: f64,
    pub p50: f64,
    pub p95: f64,
}

/// The measured side of a non-skipped timestep.
#[derive(Debug, Clone, PartialEq)]
pub struct Measurement {
    /// Centrality distance from the snapshot to its real successor.
    pub observed_distance: f64,
    /// Centrality distance from the snapshot to each random sample,
    /// in sample order.
    pub sample_distances: Vec<f64>,
    /// Number of samples *strictly* closer than the observed successor;
    /// ties do not raise the rank, so rank 0 means "nothing beat it".
    pub rank: usize,
    pub percentiles: Percentiles,
}

/// Outcome of one consecutive snapshot pair.
#[derive(Debug, Clone, PartialEq)]
pub enum StepOutcome {
    /// The two snapshots were identical; there is nothing to rank against
    /// (the only graph at distance 0 is the snapshot itself).
    SkippedZeroRadius,
    Measured(Measurement),
}

/// One row of the experiment: the transition from snapshot `t` to `t+1`.
#[derive(Debug, Clone, PartialEq)]
pub struct TimestepRecord {
    pub t: usize,
    /// Edit distance between the two snapshots = sampling radius.
    pub radius: usize,
    pub outcome: StepOutcome,
}

impl TimestepRecord {
    pub fn is_skipped(&self) -> bool {
        matches!(self.outcome, StepOutcome::SkippedZeroRadius)
    }

    pub fn measurement(&self) -> Option<&Measurement> {
        match &self.outcome {
            StepOutcome::SkippedZeroRadius => None,
            StepOutcome::Measured(m) => Some(m),
        }
    }
}

/// One splitmix64 scramble round; the standard way to spread a counter into
/// statistically independent seed material.
fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// The sampling seed for timestep `t` of a run with base seed `seed`.
/// Pure arithmetic, so timesteps can be processed in any order or in
/// parallel and still draw identical samples.
pub fn derive_seed(seed: u64, t: usize) -> u64 {
    splitmix64(seed ^ splitmix64(t as u64 + 1))
}

/// Nearest-rank percentile of `sorted` (ascending): the smallest element
/// with at least `p`% of the data at or below it.
fn percentile(sorted: &[f64], p: f64) -> f64 {
    debug_assert!(!sorted.is_empty());
    let idx = ((p / 100.0 * sorted.len() as f64).ceil() as usize)
        .clamp(1, sorted.len());
    sorted[idx - 1]
}

/// Runs the full rank experiment with the default full-universe null model.
pub fn run_experiment(
    dg: &DynamicGraph,
    kind: CentralityKind,
    count: usize,
    seed: u64,
) -> Result<Vec<TimestepRecord>> {
    run_experiment_with_pool(dg, kind, count, seed, SamplingPool::FullUniverse)
}

/// Runs the rank experiment: for each consecutive snapshot pair, samples
/// `count` graphs at the observed edit radius and ranks the real successor
/// among them by `kind`-centrality distance. Timesteps are independent
/// (per-step seeds derive from `seed` and the index) and run in parallel;
/// the output is ordered by `t` regardless of scheduling.
pub fn run_experiment_with_pool(
    dg: &DynamicGraph,
    kind: CentralityKind,
    count: usize,
    seed: u64,
    pool: SamplingPool,
) -> Result<Vec<TimestepRecord>> {
    if dg.len() < 2 {
        return Err(Error::TooFewTimesteps { got: dg.len() });
    }
    if count < 1 {
        return Err(Error::InvalidSize { got: count, min: 1 });
    }

    let steps: Vec<usize> = (0..dg.len() - 1).collect();
    steps
        .into_par_iter()
        .map(|t| {
            let current = &dg.timesteps()[t];
            let next = &dg.timesteps()[t + 1];
            let radius = ged(current, next);
            if radius == 0 {
                return Ok(TimestepRecord {
                    t,
                    radius,
                    outcome: StepOutcome::SkippedZeroRadius,
                });
            }

            let pool_vertices: BTreeSet<VertexId> = match pool {
                SamplingPool::FullUniverse => current.vertex_set().clone(),
                SamplingPool::ActiveVertices => current
                    .vertices()
                    .filter(|v| current.degree(v) > 0)
                    .cloned()
                    .collect(),
            };
            let set =
                sample_at_radius_within(current, &pool_vertices, radius, count, derive_seed(seed, t))?;

            let observed_distance = approx_distance(kind, current, next);
            let sample_distances: Vec<f64> = set
                .samples
                .iter()
                .map(|s| {
                    // The null model's contract, re-checked where it matters:
                    // every competitor really is a same-radius graph.
                    assert_eq!(ged(current, s), radius, "sampler broke the radius contract");
                    approx_distance(kind, current, s)
                })
                .collect();

            let rank = sample_distances
                .iter()
                .filter(|&&d| d < observed_distance)
                .count();
            let mut sorted = sample_distances.clone();
            sorted.sort_by(|a, b| a.partial_cmp(b).expect("distances are finite"));
            let percentiles = Percentiles {
                p5: percentile(&sorted, 5.0),
                p50: percentile(&sorted, 50.0),
                p95: percentile(&sorted, 95.0),
            };

            Ok(TimestepRecord {
                t,
                radius,
                outcome: StepOutcome::Measured(Measurement {
                    observed_distance,
                    sample_distances,
                    rank,
                    percentiles,
                }),
            })
        })
        .collect()
}

/// Empirical CDF of the ranks over non-skipped records: pairs
/// `(rank, fraction of records with rank ≤ this)`, sorted by rank.
pub fn rank_cdf(records: &[TimestepRecord]) -> Result<Vec<(usize, f64)>> {
    let mut ranks: Vec<usize> = records
        .iter()
        .filter_map(|r| r.measurement().map(|m| m.rank))
        .collect();
    if ranks.is_empty() {
        return Err(Error::NoUsableRecords);
    }
    ranks.sort_unstable();
    let total = ranks.len() as f64;
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for r in ranks {
        *counts.entry(r).or_default() += 1;
    }
    let mut cdf = Vec::with_capacity(counts.len());
    let mut below = 0usize;
    for (rank, n) in counts {
        below += n;
        cdf.push((rank, below as f64 / total));
    }
    Ok(cdf)
}

/// The starting topology for the synthetic evolution: a caterpillar of
/// star communities. A short spine line `v1..vs` (one spine vertex per
/// roughly six graph vertices) carries the remaining vertices as leaves,
/// dealt round-robin, so every spine vertex is the hub of a small star.
/// Two leaves of the same hub sit at distance 2 with identical distances
/// to the rest of the graph — the canonical "friends of a friend".
fn caterpillar(n: usize) -> Result<NamedGraph> {
    if n < 2 {
        return Err(Error::InvalidSize { got: n, min: 2 });
    }
    let spine = ((n + 5) / 6).max(2).min(n);
    let name = |i: usize| VertexId::new(format!("v{i}"));
    let mut edges: Vec<(VertexId, VertexId)> = (1..spine)
        .map(|i| (name(i), name(i + 1)))
        .collect();
    for leaf in spine + 1..=n {
        let hub = (leaf - spine - 1) % spine + 1;
        edges.push((name(hub), name(leaf)));
    }
    NamedGraph::from_parts((1..=n).map(name), edges)
}

/// A seeded synthetic social-style evolution: starting from a caterpillar
/// of star communities, each step closes `edges_per_step` open wedges
/// (adds an edge between two vertices at distance exactly 2). Local
/// attachment is taken literally: among all open wedges, the one whose
/// closure moves the closeness vector the least is chosen — the new link
/// lands inside an existing community, changing almost nothing about
/// reachability. Symmetric candidates tie exactly (closeness values are
/// sums of powers of two), and ties are broken uniformly with the seeded
/// generator. Produces `steps + 1` snapshots, hence `steps` transitions.
pub fn triadic_closure_series(
    n: usize,
    steps: usize,
    edges_per_step: usize,
    seed: u64,
) -> Result<DynamicGraph> {
    let mut current = caterpillar(n)?;
    let mut snapshots = vec![current.clone()];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    for _ in 0..steps {
        for _ in 0..edges_per_step {
            // Open wedges in deterministic order.
            let vertices: Vec<&VertexId> = current.vertices().collect();
            let mut wedges: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
            for &v in &vertices {
                let neighbors: Vec<&VertexId> = current.neighbors(v).collect();
                for (i, &a) in neighbors.iter().enumerate() {
                    for &b in &neighbors[i + 1..] {
                        if !current.has_edge(a, b) {
                            let (x, y) = if a < b { (a, b) } else { (b, a) };
                            wedges.insert((x.clone(), y.clone()));
                        }
                    }
                }
            }
            if wedges.is_empty() {
                break; // locally saturated; nothing left to close
            }

            let before = closeness_centrality(&current);
            let mut best: Vec<(VertexId, VertexId)> = Vec::new();
            let mut best_cost = f64::INFINITY;
            for (u, v) in wedges {
                let closed = current.with_edge_toggled(&u, &v)?;
                let cost = before.l1_distance(&closeness_centrality(&closed));
                if cost < best_cost {
                    best_cost = cost;
                    best.clear();
                }
                if cost == best_cost {
                    best.push((u, v));
                }
            }
            let (u, v) = best[rng.gen_range(0..best.len())].clone();
            current = current.with_edge_toggled(&u, &v)?;
        }
        snapshots.push(current.clone());
    }

    DynamicGraph::new("triadic-closure", snapshots)
}
