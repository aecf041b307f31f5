//! Uniform random graphs at an exact edit distance from a reference graph.
//!
//! The null model for "how surprising is this successor snapshot?": given a
//! reference graph and a radius R, draw graphs whose edit distance from the
//! reference is *exactly* R, uniformly. Because the vertex set stays fixed,
//! toggling any R distinct vertex pairs produces symmetric difference R and
//! nothing else does — so uniform sampling over R-subsets of pairs is
//! uniform sampling over the radius-R sphere, with no rejection loop.
//!
//! Draws are with replacement: two samples may coincide, which is harmless
//! for rank statistics and keeps every draw independent. Each sample uses
//! its own stream of a counter-based generator, so sample `i` is a pure
//! function of `(seed, i)` and a set can be regenerated or parallelized
//! without changing its contents.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{ged, NamedGraph, VertexId};

/// A batch of same-radius samples along with everything needed to
/// reproduce it.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleSet {
    pub reference: NamedGraph,
    pub radius: usize,
    pub seed: u64,
    pub samples: Vec<NamedGraph>,
}

/// Samples `count` graphs at edit distance exactly `radius` from `g`,
/// toggling pairs drawn from `g`'s own vertex set.
pub fn sample_at_radius(
    g: &NamedGraph,
    radius: usize,
    count: usize,
    seed: u64,
) -> Result<SampleSet> {
    sample_at_radius_within(g, g.vertex_set(), radius, count, seed)
}

/// Samples `count` graphs at edit distance exactly `radius` from `g`, with
/// the toggled pairs restricted to vertices in `pool` (a subset of `g`'s
/// vertices — e.g. only the vertices active in some time window).
pub fn sample_at_radius_within(
    g: &NamedGraph,
    pool: &BTreeSet<VertexId>,
    radius: usize,
    count: usize,
    seed: u64,
) -> Result<SampleSet> {
    if pool.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    if let Some(v) = pool.iter().find(|v| !g.has_vertex(v)) {
        return Err(Error::VertexOutsideUniverse {
            vertex: v.as_str().to_owned(),
        });
    }
    if count < 1 {
        return Err(Error::InvalidSize { got: count, min: 1 });
    }

    let vertices: Vec<&VertexId> = pool.iter().collect();
    let mut pairs = Vec::with_capacity(vertices.len() * (vertices.len() - 1) / 2);
    for i in 0..vertices.len() {
        for j in (i + 1)..vertices.len() {
            pairs.push((vertices[i], vertices[j]));
        }
    }
    if radius > pairs.len() {
        return Err(Error::RadiusTooLarge {
            radius,
            max: pairs.len(),
        });
    }

    let mut samples = Vec::with_capacity(count);
    for i in 0..count {
        // Stream i of the seeded generator: sample i depends only on
        // (seed, i), never on how many samples came before it.
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(i as u64);
        let mut order: Vec<usize> = (0..pairs.len()).collect();

        // Partial Fisher–Yates: after `radius` swaps, the prefix is a
        // uniform radius-subset of the pair list.
        for slot in 0..radius {
            let pick = rng.gen_range(slot..order.len());
            order.swap(slot, pick);
        }
        let mut sample = g.clone();
        for &p in &order[..radius] {
            let (u, v) = pairs[p];
            sample = sample.with_edge_toggled(u, v)?;
        }
        debug_assert_eq!(ged(g, &sample), radius);
        samples.push(sample);
    }

    Ok(SampleSet {
        reference: g.clone(),
        radius,
        seed,
        samples,
    })
}
