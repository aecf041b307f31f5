//! Graph similarity through the lens of centrality.
//!
//! This crate measures how far apart two *named* graphs are — graphs whose
//! vertices carry persistent identities, compared exactly rather than up to
//! isomorphism — by how much a vertex centrality shifts between them:
//!
//! * [`graph`]: named graphs, edit operations and the symmetric-difference
//!   edit distance, plus line/cycle/shell generators;
//! * [`centrality`]: degree, disconnection-tolerant closeness (`Σ 2^{-d}`),
//!   and betweenness with endpoint counting;
//! * [`distance`]: the approximate (L1) and exact (metagraph shortest-path)
//!   centrality distances, the degree distance, and the sensitivity check
//!   that decides whether the exact distance is a metric;
//! * [`metagraph`]: the implicit graph-of-all-graphs on a fixed vertex
//!   universe, with structure checks and weighted shortest paths;
//! * [`evolution`]: edit schedules (incremental, dichotomic, greedy) and
//!   their per-step distance profiles;
//! * [`sampler`]: uniform random graphs at an exact edit distance from a
//!   reference — the null model;
//! * [`experiment`]: the rank pipeline asking whether real dynamics move
//!   centralities less than random same-size change;
//! * [`io`]: edge-list and event-trace grammars and deterministic CSV
//!   output.
//!
//! Everything is a pure function of immutable inputs; all randomness flows
//! from explicit seeds, and every serialization is byte-deterministic.

pub mod centrality;
pub mod distance;
pub mod error;
pub mod evolution;
pub mod experiment;
pub mod graph;
pub mod io;
pub mod metagraph;
pub mod sampler;

pub use centrality::{
    betweenness_centrality, centrality, closeness_centrality, degree_centrality, CentralityKind,
    CentralityVector,
};
pub use distance::{
    approx_distance, degree_distance, exact_distance, exact_distance_matrix,
    exact_distance_with_cap, neighbor_distance, sensitivity, sensitivity_by, DistanceMode,
    DistanceResult, Sensitivity, EQUALITY_TOL, SENSITIVITY_TOL,
};
pub use error::{Error, Result};
pub use evolution::{
    dichotomic_path, greedy_path, incremental_path, profile, DistanceProfile, EvolutionPath,
};
pub use experiment::{
    derive_seed, discretize, rank_cdf, run_experiment, run_experiment_with_pool,
    triadic_closure_series, DiscretizeMode, DynamicGraph, EdgeEvent, Measurement, Percentiles,
    SamplingPool, StepOutcome, TimestepRecord,
};
pub use graph::{
    apply_edit, cycle_graph, ged, line_graph, shell_graph, Edge, EditOp, NamedGraph, VertexId,
};
pub use metagraph::{layer_edge_count, GraphMask, MetagraphIndex, DEFAULT_UNIVERSE_CAP};
pub use sampler::{sample_at_radius, sample_at_radius_within, SampleSet};
