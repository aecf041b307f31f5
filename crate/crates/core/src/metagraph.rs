//! The metagraph MG_k: the graph whose nodes are *all* labeled graphs on a
//! fixed k-vertex universe and whose edges join graphs at edit distance 1.
//!
//! Nothing here is ever materialized. A node is a `u64` bitmask with one bit
//! per vertex pair (so MG_k has `2^(k choose 2)` nodes), neighbor iteration
//! is bit toggling, and shortest paths run Dijkstra over the implicit
//! structure. Enumeration-heavy checks take an explicit `cap` on the universe
//! size so a caller cannot accidentally ask for a quintillion-node sweep.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use crate::error::{Error, Result};
use crate::graph::{NamedGraph, VertexId};

/// Default bound on the universe size for enumeration-heavy operations.
/// MG_5 has 1024 nodes; MG_6 already has 32768 and MG_7 over 2 million.
pub const DEFAULT_UNIVERSE_CAP: usize = 5;

/// Universes with more vertices than this cannot be represented at all:
/// C(12,2) = 66 pairs would not fit in a 64-bit mask.
const HARD_VERTEX_LIMIT: usize = 11;

/// A node of MG_k: bit `i` set iff pair `i` of the index's pair order is an
/// edge of the encoded graph.
pub type GraphMask = u64;

/// A fixed vertex universe together with its canonical pair enumeration.
///
/// The pair order is lexicographic over the sorted universe, which makes
/// every mask — and therefore every golden file derived from masks —
/// reproducible across runs and platforms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetagraphIndex {
    universe: Vec<VertexId>,
    pairs: Vec<(VertexId, VertexId)>,
}

impl MetagraphIndex {
    /// Builds the index over the given vertices (deduplicated and sorted).
    pub fn new(universe: impl IntoIterator<Item = VertexId>) -> Result<Self> {
        let universe: Vec<VertexId> = universe
            .into_iter()
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        if universe.len() > HARD_VERTEX_LIMIT {
            return Err(Error::UniverseTooLarge {
                vertices: universe.len(),
                cap: HARD_VERTEX_LIMIT,
            });
        }
        let mut pairs = Vec::with_capacity(universe.len() * universe.len().saturating_sub(1) / 2);
        for i in 0..universe.len() {
            for j in (i + 1)..universe.len() {
                pairs.push((universe[i].clone(), universe[j].clone()));
            }
        }
        Ok(MetagraphIndex { universe, pairs })
    }

    /// Convenience index over `v1..vk`.
    pub fn canonical(k: usize) -> Result<Self> {
        MetagraphIndex::new((1..=k).map(|i| VertexId::new(format!("v{i}"))))
    }

    /// The sorted vertex universe.
    pub fn universe(&self) -> &[VertexId] {
        &self.universe
    }

    pub fn vertex_count(&self) -> usize {
        self.universe.len()
    }

    /// Number of vertex pairs, i.e. bits in a mask: C(k,2).
    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    /// Number of metagraph nodes: 2^(k choose 2).
    pub fn node_count(&self) -> u64 {
        1u64 << self.pair_count()
    }

    /// The vertex pair behind mask bit `bit`.
    pub fn pair(&self, bit: usize) -> (&VertexId, &VertexId) {
        let (a, b) = &self.pairs[bit];
        (a, b)
    }

    /// Errors out when the universe is larger than `cap`; guards every
    /// full-enumeration operation.
    pub fn check_cap(&self, cap: usize) -> Result<()> {
        if self.vertex_count() > cap {
            return Err(Error::UniverseTooLarge {
                vertices: self.vertex_count(),
                cap,
            });
        }
        Ok(())
    }

    /// All metagraph nodes, in increasing mask order.
    pub fn masks(&self) -> impl Iterator<Item = GraphMask> {
        0..self.node_count()
    }

    /// Encodes a graph whose vertex set equals the universe.
    pub fn encode(&self, g: &NamedGraph) -> Result<GraphMask> {
        if !g.vertices().eq(self.universe.iter()) {
            return Err(Error::VertexMismatch {
                reason: format!(
                    "graph has {} vertices, universe has {}; encoding requires the exact universe",
                    g.vertex_count(),
                    self.vertex_count()
                ),
            });
        }
        let mut mask: GraphMask = 0;
        for e in g.edges() {
            let (a, b) = e.endpoints();
            // Pairs are sorted lexicographically, as are edge endpoints.
            let bit = self
                .pairs
                .binary_search_by(|(x, y)| (x, y).cmp(&(a, b)))
                .expect("edge endpoints are members of the universe");
            mask |= 1 << bit;
        }
        Ok(mask)
    }

    /// Decodes a mask back into a graph on the universe.
    ///
    /// # Panics
    /// Panics if `mask` has bits beyond the pair count; masks come from
    /// `encode`, `masks` or `neighbors`, so a stray bit is a programming
    /// error rather than an input error.
    pub fn decode(&self, mask: GraphMask) -> NamedGraph {
        assert!(
            mask < self.node_count(),
            "mask {mask:#x} out of range for {} pairs",
            self.pair_count()
        );
        let edges = (0..self.pair_count())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| self.pairs[i].clone());
        NamedGraph::from_parts(self.universe.iter().cloned(), edges)
            .expect("pairs contain no self-loops")
    }

    /// The C(k,2) metagraph neighbors of `mask`: one edge toggle each.
    pub fn neighbors(&self, mask: GraphMask) -> impl Iterator<Item = GraphMask> + '_ {
        (0..self.pair_count()).map(move |i| mask ^ (1 << i))
    }

    /// Verifies the two-coloring of MG_k by edge-count parity: every
    /// metagraph edge must join an even-edge-count graph to an odd one.
    /// (A single toggle always flips parity, so this doubles as a sanity
    /// check of the neighbor enumeration.) Enumeration-bound: `cap`.
    pub fn check_bipartite(&self, cap: usize) -> Result<bool> {
        self.check_cap(cap)?;
        for mask in self.masks() {
            for next in self.neighbors(mask) {
                if mask.count_ones() % 2 == next.count_ones() % 2 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Weighted shortest path from `src` to `dst` by Dijkstra over the
    /// implicit node space. Returns the total weight and one realizing path
    /// (a sequence of masks from `src` to `dst` inclusive).
    ///
    /// `weight` is consulted once per directed relaxation; it must be
    /// strictly positive, or the search aborts with `NonPositiveWeight`.
    /// The search only ever touches masks reachable from `src`, so the cap
    /// does not apply — cost is bounded by the actual exploration, which
    /// early-exits as soon as `dst` settles.
    pub fn shortest_path(
        &self,
        mut weight: impl FnMut(GraphMask, GraphMask) -> f64,
        src: GraphMask,
        dst: GraphMask,
    ) -> Result<(f64, Vec<GraphMask>)> {
        assert!(src < self.node_count() && dst < self.node_count());

        // Non-negative finite f64 compare correctly as raw bit patterns,
        // so the heap can stay integer-keyed.
        let mut best: HashMap<GraphMask, f64> = HashMap::new();
        let mut prev: HashMap<GraphMask, GraphMask> = HashMap::new();
        let mut heap: BinaryHeap<Reverse<(u64, GraphMask)>> = BinaryHeap::new();
        best.insert(src, 0.0);
        heap.push(Reverse((0.0f64.to_bits(), src)));

        while let Some(Reverse((dist_bits, u))) = heap.pop() {
            let dist = f64::from_bits(dist_bits);
            if dist > *best.get(&u).unwrap_or(&f64::INFINITY) {
                continue; // stale heap entry
            }
            if u == dst {
                let mut path = vec![dst];
                let mut cur = dst;
                while cur != src {
                    cur = prev[&cur];
                    path.push(cur);
                }
                path.reverse();
                return Ok((dist, path));
            }
            for w in self.neighbors(u) {
                let step = weight(u, w);
                if !(step > 0.0) {
                    return Err(Error::NonPositiveWeight { weight: step });
                }
                let cand = dist + step;
                if cand < *best.get(&w).unwrap_or(&f64::INFINITY) {
                    best.insert(w, cand);
                    prev.insert(w, u);
                    heap.push(Reverse((cand.to_bits(), w)));
                }
            }
        }
        unreachable!("the metagraph is connected; dst must settle")
    }
}

/// Number of metagraph edges between layer k and layer k+1 of the layered
/// (vertex-count-stratified) metagraph: each k-vertex graph connects to
/// exactly one (k+1)-vertex graph by gaining one isolated vertex, giving
/// `2^(k choose 2)` cross-layer edges. Layers further than one apart share
/// no edges at all, since a single edit moves the vertex count by at most 1.
pub fn layer_edge_count(k: usize, cap: usize) -> Result<u64> {
    if k > cap {
        return Err(Error::UniverseTooLarge { vertices: k, cap });
    }
    // k ≤ cap ≤ 11 in any sane configuration; C(11,2) = 55 < 64.
    let pairs = k * k.saturating_sub(1) / 2;
    assert!(pairs < 64, "layer count overflows u64");
    Ok(1u64 << pairs)
}
