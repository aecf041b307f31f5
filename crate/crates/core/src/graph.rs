//! Named undirected graphs with exact (label-based) equality.
//!
//! Vertices carry opaque string names and two graphs are equal exactly when
//! they have the same vertex names and the same named edges. No isomorphism
//! is ever computed anywhere in this crate: `{a-b}` and `{c-d}` are simply
//! different graphs. This is what makes the edit distance between two graphs
//! a cheap symmetric-difference count instead of an NP-hard search.
//!
//! The module also defines the four primitive edit operations and the
//! canonical generator shapes (line, cycle, shell) used by the evolution and
//! benchmark code.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// An opaque vertex name. Ordering is plain string ordering and is used
/// everywhere a deterministic iteration order is needed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(String);

impl VertexId {
    /// Creates a vertex name.
    ///
    /// # Panics
    /// Panics if `name` is empty; an empty name cannot survive a round-trip
    /// through the edge-list text format.
    pub fn new(name: impl Into<String>) -> Self {
        let name = name.into();
        assert!(!name.is_empty(), "vertex names must be non-empty");
        VertexId(name)
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for VertexId {
    fn from(s: &str) -> Self {
        VertexId::new(s)
    }
}

impl From<String> for VertexId {
    fn from(s: String) -> Self {
        VertexId::new(s)
    }
}

/// An undirected edge between two distinct vertices, stored with its
/// endpoints in sorted order so that `{u,v}` and `{v,u}` compare equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    a: VertexId,
    b: VertexId,
}

impl Edge {
    /// Builds an edge, normalizing endpoint order. Self-loops are rejected.
    pub fn new(u: VertexId, v: VertexId) -> Result<Self> {
        if u == v {
            return Err(Error::SelfLoop {
                vertex: u.0,
            });
        }
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        Ok(Edge { a, b })
    }

    /// The endpoints in sorted order.
    pub fn endpoints(&self) -> (&VertexId, &VertexId) {
        (&self.a, &self.b)
    }

    /// True when `v` is one of the two endpoints.
    pub fn touches(&self, v: &VertexId) -> bool {
        &self.a == v || &self.b == v
    }

    /// Given one endpoint, returns the other; `None` if `v` is not an endpoint.
    pub fn other(&self, v: &VertexId) -> Option<&VertexId> {
        if &self.a == v {
            Some(&self.b)
        } else if &self.b == v {
            Some(&self.a)
        } else {
            None
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.a, self.b)
    }
}

/// One primitive change to a graph. Every operation has an inverse, so any
/// edit sequence can be walked backwards.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum EditOp {
    AddVertex(VertexId),
    /// Only an isolated vertex may be removed; incident edges must go first.
    RemoveVertex(VertexId),
    /// Both endpoints must already be present.
    AddEdge(Edge),
    RemoveEdge(Edge),
}

impl EditOp {
    /// The operation that undoes this one.
    pub fn inverse(&self) -> EditOp {
        match self {
            EditOp::AddVertex(v) => EditOp::RemoveVertex(v.clone()),
            EditOp::RemoveVertex(v) => EditOp::AddVertex(v.clone()),
            EditOp::AddEdge(e) => EditOp::RemoveEdge(e.clone()),
            EditOp::RemoveEdge(e) => EditOp::AddEdge(e.clone()),
        }
    }
}

impl fmt::Display for EditOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EditOp::AddVertex(v) => write!(f, "+v {v}"),
            EditOp::RemoveVertex(v) => write!(f, "-v {v}"),
            EditOp::AddEdge(e) => write!(f, "+e {e}"),
            EditOp::RemoveEdge(e) => write!(f, "-e {e}"),
        }
    }
}

/// An undirected graph over named vertices.
///
/// Equality, hashing and ordering are all derived from the underlying sorted
/// sets, so two graphs are `==` exactly when they name the same vertices and
/// edges. Isolated vertices are first-class: a graph may have vertices with
/// no incident edges, and they matter for equality and for edit distance.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct NamedGraph {
    vertices: BTreeSet<VertexId>,
    edges: BTreeSet<Edge>,
}

impl NamedGraph {
    /// The graph with no vertices and no edges.
    pub fn empty() -> Self {
        NamedGraph::default()
    }

    /// Builds a graph from explicit vertices plus edge endpoint pairs.
    /// Endpoints mentioned by an edge are implicitly added to the vertex set.
    pub fn from_parts<V, E, U>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = U>,
        E: IntoIterator<Item = (U, U)>,
        U: Into<VertexId>,
    {
        let mut g = NamedGraph::empty();
        for v in vertices {
            g.vertices.insert(v.into());
        }
        for (u, v) in edges {
            let e = Edge::new(u.into(), v.into())?;
            g.vertices.insert(e.a.clone());
            g.vertices.insert(e.b.clone());
            g.edges.insert(e);
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Vertices in sorted name order.
    pub fn vertices(&self) -> impl Iterator<Item = &VertexId> {
        self.vertices.iter()
    }

    /// Edges in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter()
    }

    pub fn vertex_set(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn edge_set(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn has_vertex(&self, v: &VertexId) -> bool {
        self.vertices.contains(v)
    }

    pub fn has_edge(&self, u: &VertexId, v: &VertexId) -> bool {
        match Edge::new(u.clone(), v.clone()) {
            Ok(e) => self.edges.contains(&e),
            Err(_) => false,
        }
    }

    /// Number of neighbors of `v`. Zero for isolated or absent vertices.
    pub fn degree(&self, v: &VertexId) -> usize {
        self.edges.iter().filter(|e| e.touches(v)).count()
    }

    /// Neighbors of `v` in sorted order.
    pub fn neighbors<'a>(&'a self, v: &'a VertexId) -> impl Iterator<Item = &'a VertexId> + 'a {
        self.edges.iter().filter_map(move |e| e.other(v))
    }

    /// Returns a copy with the edge `{u,v}` flipped: removed when present,
    /// added when absent. Both endpoints must already be vertices.
    pub fn with_edge_toggled(&self, u: &VertexId, v: &VertexId) -> Result<Self> {
        for w in [u, v] {
            if !self.has_vertex(w) {
                return Err(Error::VertexOutsideUniverse {
                    vertex: w.as_str().to_owned(),
                });
            }
        }
        let e = Edge::new(u.clone(), v.clone())?;
        let mut g = self.clone();
        if !g.edges.remove(&e) {
            g.edges.insert(e);
        }
        Ok(g)
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "graph({} vertices, {} edges)",
            self.vertex_count(),
            self.edge_count()
        )
    }
}

/// Applies one edit operation, returning the edited graph.
///
/// Each operation has a strict applicability rule, mirroring `EditOp`'s
/// documentation: vertices must be fresh to add and isolated to remove,
/// edges must be absent to add (with both endpoints present) and present
/// to remove. Anything else is an `InapplicableEdit` error rather than a
/// silent no-op, so a sequence of edits that drifts out of sync with its
/// graph fails loudly.
pub fn apply_edit(g: &NamedGraph, op: &EditOp) -> Result<NamedGraph> {
    let mut out = g.clone();
    match op {
        EditOp::AddVertex(v) => {
            if !out.vertices.insert(v.clone()) {
                return Err(Error::InapplicableEdit {
                    reason: format!("vertex '{v}' already present"),
                });
            }
        }
        EditOp::RemoveVertex(v) => {
            if !out.vertices.contains(v) {
                return Err(Error::InapplicableEdit {
                    reason: format!("vertex '{v}' not present"),
                });
            }
            if out.degree(v) > 0 {
                return Err(Error::InapplicableEdit {
                    reason: format!("vertex '{v}' still has incident edges"),
                });
            }
            out.vertices.remove(v);
        }
        EditOp::AddEdge(e) => {
            let (a, b) = e.endpoints();
            for w in [a, b] {
                if !out.vertices.contains(w) {
                    return Err(Error::InapplicableEdit {
                        reason: format!("edge endpoint '{w}' not present"),
                    });
                }
            }
            if !out.edges.insert(e.clone()) {
                return Err(Error::InapplicableEdit {
                    reason: format!("edge {e} already present"),
                });
            }
        }
        EditOp::RemoveEdge(e) => {
            if !out.edges.remove(e) {
                return Err(Error::InapplicableEdit {
                    reason: format!("edge {e} not present"),
                });
            }
        }
    }
    Ok(out)
}

/// Graph edit distance between two named graphs.
///
/// Because equality is name-based, the minimal edit sequence is forced: every
/// vertex or edge present in exactly one of the two graphs must be added or
/// removed, and nothing else may change. The distance is therefore the size
/// of the two symmetric differences,
/// `|V1 Δ V2| + |E1 Δ E2|`,
/// computed here in a single merge pass per set.
pub fn ged(g1: &NamedGraph, g2: &NamedGraph) -> usize {
    let dv = g1.vertices.symmetric_difference(&g2.vertices).count();
    let de = g1.edges.symmetric_difference(&g2.edges).count();
    dv + de
}

fn numbered(i: usize) -> VertexId {
    VertexId::new(format!("v{i}"))
}

fn check_size(n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::InvalidSize { got: n, min })
    } else {
        Ok(())
    }
}

/// The line (path) graph on vertices `v1..vn`: edges `{vi, vi+1}`.
pub fn line_graph(n: usize) -> Result<NamedGraph> {
    check_size(n, 2)?;
    NamedGraph::from_parts(
        (1..=n).map(numbered),
        (1..n).map(|i| (numbered(i), numbered(i + 1))),
    )
}

/// The cycle on `v1..vn`: the line graph closed with `{v1, vn}`.
pub fn cycle_graph(n: usize) -> Result<NamedGraph> {
    check_size(n, 3)?;
    let mut edges: Vec<_> = (1..n).map(|i| (numbered(i), numbered(i + 1))).collect();
    edges.push((numbered(1), numbered(n)));
    NamedGraph::from_parts((1..=n).map(numbered), edges)
}

/// The shell graph on `v1..vn`: the line graph augmented with spokes
/// `{v1, vi}` for every `i` from 3 to `n`.
pub fn shell_graph(n: usize) -> Result<NamedGraph> {
    check_size(n, 2)?;
    let mut edges: Vec<_> = (1..n).map(|i| (numbered(i), numbered(i + 1))).collect();
    edges.extend((3..=n).map(|i| (numbered(1), numbered(i))));
    NamedGraph::from_parts((1..=n).map(numbered), edges)
}
