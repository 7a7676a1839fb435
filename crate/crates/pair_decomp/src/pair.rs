use geom_core::vec2::{convex_hull, diameter};
use geom_core::{PointSet, Vec2};
use serde::{Deserialize, Serialize};

/// Two lines through `apex` bounding the cone `{apex + s u}` with `u` CCW from
/// `dir_lo` to `dir_hi`; the left side lies in this cone and the right side in
/// its reflection through `apex`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DoubleWedge {
    pub apex: Vec2,
    pub dir_lo: Vec2,
    pub dir_hi: Vec2,
}

impl DoubleWedge {
    pub fn angle(&self) -> f64 {
        self.dir_lo.cross(self.dir_hi).atan2(self.dir_lo.dot(self.dir_hi))
    }

    fn in_cone(&self, d: Vec2) -> bool {
        let tol = 1e-9 * d.norm() + 1e-12 * (1.0 + self.apex.norm());
        self.dir_lo.cross(d) >= -tol && d.cross(self.dir_hi) >= -tol
    }

    /// Left points in the forward cone, right points in the backward cone.
    pub fn separates(&self, left: &[Vec2], right: &[Vec2]) -> bool {
        left.iter().all(|&p| self.in_cone(p - self.apex))
            && right.iter().all(|&p| self.in_cone(self.apex - p))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum Certificate {
    /// `max(diam) <= dist / sigma`.
    Well { sigma: f64 },
    /// `min(diam) <= dist / sigma`.
    Semi { sigma: f64 },
    /// Semi-separated and split by a double wedge of angle at most `eps`.
    Angular { sigma: f64, eps: f64, wedge: DoubleWedge },
    /// Sides lie in opposite closed quadrants around `center`.
    Quadrant { center: Vec2 },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Pair {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub cert: Certificate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Wspd,
    Sspd,
    Angular,
    Qspd,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairDecomposition {
    pub kind: Kind,
    pub pairs: Vec<Pair>,
}

/// Minimum distance between two point lists.
pub fn set_distance(a: &[Vec2], b: &[Vec2]) -> f64 {
    let mut d = f64::INFINITY;
    for &p in a {
        for &q in b {
            d = d.min(p.dist(q));
        }
    }
    d
}

const REL: f64 = 1e-12;

impl Pair {
    pub fn new(mut left: Vec<usize>, mut right: Vec<usize>, cert: Certificate) -> Self {
        left.sort_unstable();
        right.sort_unstable();
        Self { left, right, cert }
    }

    /// Orients the pair so the left side holds the smaller id.
    fn canonical(mut self) -> Self {
        if self.left[0] > self.right[0] {
            std::mem::swap(&mut self.left, &mut self.right);
            if let Certificate::Angular { wedge, .. } = &mut self.cert {
                wedge.dir_lo = -wedge.dir_lo;
                wedge.dir_hi = -wedge.dir_hi;
            }
        }
        self
    }

    pub fn weight(&self) -> usize {
        self.left.len() + self.right.len()
    }

    /// Re-evaluates the stored certificate on the actual point sets.
    pub fn certificate_holds(&self, p: &PointSet) -> bool {
        if self.left.is_empty() || self.right.is_empty() {
            return false;
        }
        if self.left.iter().any(|i| self.right.binary_search(i).is_ok()) {
            return false;
        }
        let l = p.select(&self.left);
        let r = p.select(&self.right);
        let semi = |sigma: f64| {
            let d = set_distance(&l, &r);
            diameter(&l).min(diameter(&r)) * sigma <= d * (1.0 + REL)
        };
        match self.cert {
            Certificate::Well { sigma } => {
                let d = set_distance(&l, &r);
                diameter(&l).max(diameter(&r)) * sigma <= d * (1.0 + REL)
            }
            Certificate::Semi { sigma } => semi(sigma),
            Certificate::Angular { sigma, eps, wedge } => {
                semi(sigma) && wedge.angle() <= eps + 1e-12 && wedge.separates(&l, &r)
            }
            Certificate::Quadrant { center } => {
                let dom = |a: &[Vec2], b: &[Vec2], sx: f64, sy: f64| {
                    a.iter().all(|q| sx * (q.x - center.x) < 0.0 && sy * (q.y - center.y) < 0.0)
                        && b.iter().all(|q| sx * (q.x - center.x) > 0.0 && sy * (q.y - center.y) > 0.0)
                };
                dom(&l, &r, 1.0, 1.0)
                    || dom(&r, &l, 1.0, 1.0)
                    || dom(&l, &r, 1.0, -1.0)
                    || dom(&r, &l, 1.0, -1.0)
            }
        }
    }
}

impl PairDecomposition {
    /// Canonical order: each pair's left side holds its smaller id; pairs
    /// sorted by (min left id, min right id), then by full contents.
    pub fn new(kind: Kind, pairs: Vec<Pair>) -> Self {
        let mut pairs: Vec<Pair> = pairs.into_iter().map(Pair::canonical).collect();
        pairs.sort_by(|a, b| {
            (a.left[0], a.right[0])
                .cmp(&(b.left[0], b.right[0]))
                .then_with(|| a.left.cmp(&b.left))
                .then_with(|| a.right.cmp(&b.right))
        });
        Self { kind, pairs }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// `sum(|left| + |right|)`.
    pub fn weight(&self) -> usize {
        self.pairs.iter().map(Pair::weight).sum()
    }

    /// Number of pairs each point takes part in.
    pub fn participation(&self, n: usize) -> Vec<usize> {
        let mut c = vec![0; n];
        for pr in &self.pairs {
            for &i in pr.left.iter().chain(&pr.right) {
                c[i] += 1;
            }
        }
        c
    }

    /// Indices of pairs whose certificate fails.
    pub fn certificate_failures(&self, p: &PointSet) -> Vec<usize> {
        (0..self.pairs.len())
            .filter(|&i| !self.pairs[i].certificate_holds(p))
            .collect()
    }

    /// Exhaustive coverage: unordered point pairs not in any `left x right`.
    pub fn uncovered_pairs(&self, n: usize) -> Vec<(usize, usize)> {
        let mut seen = vec![false; n * n];
        for pr in &self.pairs {
            for &a in &pr.left {
                for &b in &pr.right {
                    let (i, j) = if a < b { (a, b) } else { (b, a) };
                    seen[i * n + j] = true;
                }
            }
        }
        let mut miss = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if !seen[i * n + j] {
                    miss.push((i, j));
                }
            }
        }
        miss
    }

    /// Sampled coverage test for large inputs; returns the uncovered samples.
    pub fn uncovered_samples(&self, samples: &[(usize, usize)], n: usize) -> Vec<(usize, usize)> {
        let mut side: Vec<Vec<(usize, bool)>> = vec![Vec::new(); n];
        for (k, pr) in self.pairs.iter().enumerate() {
            for &i in &pr.left {
                side[i].push((k, false));
            }
            for &i in &pr.right {
                side[i].push((k, true));
            }
        }
        samples
            .iter()
            .copied()
            .filter(|&(a, b)| {
                !side[a].iter().any(|&(k, sa)| {
                    side[b].binary_search_by(|&(kb, _)| kb.cmp(&k)).map_or(false, |pos| side[b][pos].1 != sa)
                })
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("decomposition serialises")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

/// Diameter of a subset given by ids.
pub fn subset_diameter(p: &PointSet, ids: &[usize]) -> f64 {
    diameter(&p.select(ids))
}

/// Convex hull of a subset given by ids.
pub fn subset_hull(p: &PointSet, ids: &[usize]) -> Vec<Vec2> {
    convex_hull(&p.select(ids))
}
