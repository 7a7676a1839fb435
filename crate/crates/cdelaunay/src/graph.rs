use crate::error::{CdError, Result};
use geom_core::PointSet;
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

/// Undirected geometric graph on point ids `0..n` with Euclidean edge weights.
#[derive(Clone, Debug, PartialEq)]
pub struct SpannerGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    weights: Vec<f64>,
    adj: Vec<Vec<(usize, f64)>>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl SpannerGraph {
    /// Edges are normalised to `i < j`, sorted and deduplicated; self loops dropped.
    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(p: &PointSet, edges: I) -> Self {
        let n = p.len();
        let mut e: Vec<(usize, usize)> = edges
            .into_iter()
            .filter(|&(a, b)| a != b)
            .map(|(a, b)| if a < b { (a, b) } else { (b, a) })
            .collect();
        e.sort_unstable();
        e.dedup();
        assert!(e.last().is_none_or(|&(_, b)| b < n), "edge endpoint out of range");
        let weights: Vec<f64> = e.iter().map(|&(a, b)| p.pos(a).dist(p.pos(b))).collect();
        let mut adj = vec![Vec::new(); n];
        for (&(a, b), &w) in e.iter().zip(&weights) {
            adj[a].push((b, w));
            adj[b].push((a, w));
        }
        Self { n, edges: e, weights, adj }
    }

    pub fn empty(p: &PointSet) -> Self {
        Self::from_edges(p, std::iter::empty())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[(usize, f64)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let e = if a < b { (a, b) } else { (b, a) };
        self.edges.binary_search(&e).is_ok()
    }

    pub fn union(&self, p: &PointSet, other: &SpannerGraph) -> SpannerGraph {
        Self::from_edges(p, self.edges.iter().chain(other.edges()).copied())
    }

    /// Keeps the edges for which `keep(i, j)` holds.
    pub fn filter_edges<F: Fn(usize, usize) -> bool>(&self, p: &PointSet, keep: F) -> SpannerGraph {
        Self::from_edges(p, self.edges.iter().copied().filter(|&(a, b)| keep(a, b)))
    }

    /// Whether the vertices in `verts` form one component using only edges
    /// with both endpoints in `verts`. Empty and singleton sets are connected.
    pub fn is_connected_on(&self, verts: &[usize]) -> bool {
        if verts.len() <= 1 {
            return true;
        }
        let mut inside = vec![false; self.n];
        for &v in verts {
            inside[v] = true;
        }
        let mut seen = vec![false; self.n];
        let mut q = VecDeque::from([verts[0]]);
        seen[verts[0]] = true;
        let mut count = 1;
        while let Some(v) = q.pop_front() {
            for &(u, _) in &self.adj[v] {
                if inside[u] && !seen[u] {
                    seen[u] = true;
                    count += 1;
                    q.push_back(u);
                }
            }
        }
        count == verts.len()
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_on(&(0..self.n).collect::<Vec<_>>())
    }

    pub fn to_json(&self) -> String {
        let g = GraphJson { n: self.n, edges: self.edges.iter().map(|&(a, b)| [a, b]).collect() };
        serde_json::to_string(&g).expect("graph serialises")
    }

    /// Parses graph JSON; `p` supplies the weights and must have `n` points.
    pub fn from_json(s: &str, p: &PointSet) -> Result<Self> {
        let g: GraphJson = serde_json::from_str(s).map_err(|e| CdError::Json(e.to_string()))?;
        if g.n != p.len() {
            return Err(CdError::Json(format!("graph has n = {} but point set has {}", g.n, p.len())));
        }
        if let Some(e) = g.edges.iter().find(|e| e[0] >= g.n || e[1] >= g.n || e[0] == e[1]) {
            return Err(CdError::Json(format!("invalid edge {:?}", e)));
        }
        Ok(Self::from_edges(p, g.edges.iter().map(|e| (e[0], e[1]))))
    }
}
