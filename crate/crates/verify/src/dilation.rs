//! Shortest-path dilation of a geometric graph over a vertex subset.

use crate::regions::RegionRecord;
use cdelaunay::SpannerGraph;
use geom_core::PointSet;
use petgraph::algo::dijkstra;
use petgraph::graph::{NodeIndex, UnGraph};
use serde::Serialize;
use std::collections::HashMap;

/// Absolute slack added to dilation thresholds.
pub const DILATION_SLACK: f64 = 1e-9;

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub region: Option<RegionRecord>,
    pub pair: (usize, usize),
    /// `+∞` (serialized as `null`) for a disconnected pair.
    pub dilation: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct DilationReport {
    pub max_dilation: f64,
    pub witness_pair: Option<(usize, usize)>,
    pub regions_tested: usize,
    pub pairs_tested: usize,
    pub threshold: f64,
    /// Pairs whose dilation exceeds `threshold`.
    pub failures: Vec<Failure>,
}

impl DilationReport {
    pub fn empty(threshold: f64) -> Self {
        Self { max_dilation: 1.0, witness_pair: None, regions_tested: 0, pairs_tested: 0, threshold, failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Worst case and concatenated failures of both reports.
    pub fn merge(mut self, o: DilationReport) -> Self {
        if o.witness_pair.is_some() && (self.witness_pair.is_none() || o.max_dilation > self.max_dilation) {
            self.max_dilation = o.max_dilation;
            self.witness_pair = o.witness_pair;
        }
        self.regions_tested += o.regions_tested;
        self.pairs_tested += o.pairs_tested;
        self.failures.extend(o.failures);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Single-source distances from every source, over the edges of `g` whose
/// endpoints both lie in `verts`. Rows follow `sources`, columns follow `verts`.
pub fn distance_rows(g: &SpannerGraph, verts: &[usize], sources: &[usize]) -> Vec<Vec<f64>> {
    let mut gr: UnGraph<(), f64> = UnGraph::with_capacity(verts.len(), 0);
    let idx: HashMap<usize, NodeIndex> = verts.iter().map(|&v| (v, gr.add_node(()))).collect();
    for (&(a, b), &w) in g.edges().iter().zip(g.weights()) {
        if let (Some(&x), Some(&y)) = (idx.get(&a), idx.get(&b)) {
            gr.add_edge(x, y, w);
        }
    }
    sources
        .iter()
        .map(|s| {
            let d = dijkstra(&gr, idx[s], None, |e| *e.weight());
            verts.iter().map(|v| d.get(&idx[v]).copied().unwrap_or(f64::INFINITY)).collect()
        })
        .collect()
}

/// Dilation over all pairs of `pairs_of`, with paths restricted to `verts`
/// and to the edges of `g`. `pairs_of ⊆ verts`.
pub fn dilation_within(
    g: &SpannerGraph,
    p: &PointSet,
    verts: &[usize],
    pairs_of: &[usize],
    threshold: f64,
    region: Option<RegionRecord>,
) -> DilationReport {
    let mut rep = DilationReport::empty(threshold);
    rep.regions_tested = 1;
    if pairs_of.len() < 2 {
        return rep;
    }
    let col: HashMap<usize, usize> = verts.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let rows = distance_rows(g, verts, pairs_of);
    for (r, &a) in pairs_of.iter().enumerate() {
        for &b in &pairs_of[r + 1..] {
            let d = rows[r][col[&b]] / p.pos(a).dist(p.pos(b));
            rep.pairs_tested += 1;
            if d > rep.max_dilation || rep.witness_pair.is_none() {
                rep.max_dilation = rep.max_dilation.max(d);
                rep.witness_pair = Some((a.min(b), a.max(b)));
            }
            if d > threshold {
                rep.failures.push(Failure { region: region.clone(), pair: (a.min(b), a.max(b)), dilation: d });
            }
        }
    }
    rep
}

/// Dilation of the subgraph induced by `ids`. Disconnected pairs are failures.
pub fn dilation(g: &SpannerGraph, p: &PointSet, ids: &[usize]) -> DilationReport {
    dilation_within(g, p, ids, ids, f64::MAX, None)
}
