//! Evolutionary paths: edit sequences walked one operation at a time, with
//! the centrality distance of every step recorded as a profile.
//!
//! The canonical study object is the evolution of a line graph into a shell
//! graph by connecting the hub `v1` to every other vertex. Two natural
//! schedules exist: *incremental* (spokes in increasing vertex order, always
//! extending the local neighborhood) and *dichotomic* (first the far end,
//! then interval midpoints, breadth-first — long links early). For closeness
//! the two schedules cost the same in total, but their per-step profiles
//! differ sharply, which is the whole point of profiling.

use std::collections::VecDeque;

use crate::centrality::CentralityKind;
use crate::distance::{approx_distance, neighbor_distance};
use crate::error::{Error, Result};
use crate::graph::{apply_edit, line_graph, Edge, EditOp, NamedGraph, VertexId};

/// An edit sequence anchored at a start graph, with every intermediate
/// snapshot materialized. Construction applies each edit in turn, so an
/// inapplicable edit is rejected up front rather than discovered mid-walk.
#[derive(Debug, Clone, PartialEq)]
pub struct EvolutionPath {
    edits: Vec<EditOp>,
    snapshots: Vec<NamedGraph>,
}

impl EvolutionPath {
    pub fn new(start: NamedGraph, edits: Vec<EditOp>) -> Result<Self> {
        let mut snapshots = Vec::with_capacity(edits.len() + 1);
        snapshots.push(start);
        for op in &edits {
            let next = apply_edit(snapshots.last().expect("non-empty"), op)?;
            snapshots.push(next);
        }
        Ok(EvolutionPath { edits, snapshots })
    }

    pub fn start(&self) -> &NamedGraph {
        &self.snapshots[0]
    }

    pub fn end(&self) -> &NamedGraph {
        self.snapshots.last().expect("non-empty")
    }

    pub fn edits(&self) -> &[EditOp] {
        &self.edits
    }

    /// All intermediate graphs, `snapshots()[0]` being the start and
    /// `snapshots()[i+1]` the result of `edits()[i]`.
    pub fn snapshots(&self) -> &[NamedGraph] {
        &self.snapshots
    }

    /// Number of edits (one less than the number of snapshots).
    pub fn len(&self) -> usize {
        self.edits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edits.is_empty()
    }

    /// True when the path only ever adds edges — the "monotone" paths for
    /// which closeness profiles are order-invariant.
    pub fn is_topological(&self) -> bool {
        self.edits.iter().all(|op| matches!(op, EditOp::AddEdge(_)))
    }
}

/// Per-step centrality distances along a path.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceProfile {
    pub centrality: CentralityKind,
    /// One value per edit: the centrality distance across that step.
    pub per_step: Vec<f64>,
    /// Sum of the per-step values, accumulated left to right.
    pub cumulative: f64,
}

/// Profiles a path: per-step values are the single-edit centrality distances
/// between consecutive snapshots.
pub fn profile(path: &EvolutionPath, kind: CentralityKind) -> Result<DistanceProfile> {
    let mut per_step = Vec::with_capacity(path.len());
    for pair in path.snapshots().windows(2) {
        per_step.push(neighbor_distance(kind, &pair[0], &pair[1])?);
    }
    let cumulative = per_step.iter().sum();
    Ok(DistanceProfile {
        centrality: kind,
        per_step,
        cumulative,
    })
}

fn numbered(i: usize) -> VertexId {
    VertexId::new(format!("v{i}"))
}

fn spoke(i: usize) -> Result<EditOp> {
    Ok(EditOp::AddEdge(Edge::new(numbered(1), numbered(i))?))
}

/// Line-to-shell evolution, incremental schedule: spokes `{v1,v3}`,
/// `{v1,v4}`, …, `{v1,vn}` in increasing order.
pub fn incremental_path(n: usize) -> Result<EvolutionPath> {
    if n < 3 {
        return Err(Error::InvalidSize { got: n, min: 3 });
    }
    let edits = (3..=n).map(spoke).collect::<Result<Vec<_>>>()?;
    EvolutionPath::new(line_graph(n)?, edits)
}

/// Line-to-shell evolution, dichotomic schedule: first the far endpoint
/// `vn`, then recursively the midpoints of every yet-unsplit index interval,
/// breadth-first with floor division (so for n=8 the spoke order is
/// v8, v4, v6, v3, v5, v7). Spokes to v1 and v2 are skipped — the line
/// already provides `{v1,v2}` — so the edit multiset matches the
/// incremental schedule exactly.
pub fn dichotomic_path(n: usize) -> Result<EvolutionPath> {
    if n < 3 {
        return Err(Error::InvalidSize { got: n, min: 3 });
    }
    let mut edits = vec![spoke(n)?];
    let mut intervals = VecDeque::from([(1usize, n)]);
    while let Some((lo, hi)) = intervals.pop_front() {
        if hi - lo <= 1 {
            continue;
        }
        let mid = (lo + hi) / 2;
        if mid >= 3 {
            edits.push(spoke(mid)?);
        }
        intervals.push_back((lo, mid));
        intervals.push_back((mid, hi));
    }
    EvolutionPath::new(line_graph(n)?, edits)
}

/// Greedy evolution between nested graphs: at each step, add the missing
/// edge whose addition minimizes the approximate distance to the target,
/// breaking ties toward the lexicographically smallest edge.
pub fn greedy_path(
    kind: CentralityKind,
    start: &NamedGraph,
    target: &NamedGraph,
) -> Result<EvolutionPath> {
    if start.vertex_set() != target.vertex_set() {
        return Err(Error::NotNested {
            reason: "start and target must share a vertex set".into(),
        });
    }
    if let Some(extra) = start.edges().find(|e| !target.edge_set().contains(e)) {
        return Err(Error::NotNested {
            reason: format!("start edge {extra} is absent from the target"),
        });
    }

    let mut current = start.clone();
    let mut edits = Vec::new();
    loop {
        // Missing edges in sorted order; first strict improvement wins,
        // which makes the tie-break lexicographic.
        let mut best: Option<(f64, Edge)> = None;
        for e in target.edges() {
            if current.edge_set().contains(e) {
                continue;
            }
            let candidate = apply_edit(&current, &EditOp::AddEdge(e.clone()))?;
            let d = approx_distance(kind, &candidate, target);
            if best.as_ref().map_or(true, |(bd, _)| d < *bd) {
                best = Some((d, e.clone()));
            }
        }
        match best {
            None => break,
            Some((_, e)) => {
                current = apply_edit(&current, &EditOp::AddEdge(e.clone()))?;
                edits.push(EditOp::AddEdge(e));
            }
        }
    }
    EvolutionPath::new(start.clone(), edits)
}
