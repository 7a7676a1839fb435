//! Point hierarchies whose nodes own contiguous ranges of a permutation.

use geom_core::Vec2;

#[derive(Clone, Debug)]
pub(crate) struct Node {
    pub lo: usize,
    pub hi: usize,
    pub children: Vec<usize>,
    pub bmin: Vec2,
    pub bmax: Vec2,
}

impl Node {
    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn center(&self) -> Vec2 {
        (self.bmin + self.bmax) * 0.5
    }

    /// Diagonal of the tight bounding box; bounds the subset diameter.
    pub fn diag(&self) -> f64 {
        self.bmin.dist(self.bmax)
    }

    /// Distance between bounding boxes; bounds the subset distance from below.
    pub fn box_dist(&self, o: &Node) -> f64 {
        let dx = (o.bmin.x - self.bmax.x).max(self.bmin.x - o.bmax.x).max(0.0);
        let dy = (o.bmin.y - self.bmax.y).max(self.bmin.y - o.bmax.y).max(0.0);
        dx.hypot(dy)
    }
}

pub(crate) struct Tree {
    pub perm: Vec<usize>,
    pub nodes: Vec<Node>,
}

impl Tree {
    pub fn ids(&self, v: usize) -> Vec<usize> {
        self.perm[self.nodes[v].lo..self.nodes[v].hi].to_vec()
    }

    fn push(&mut self, pts: &[Vec2], lo: usize, hi: usize) -> usize {
        let mut bmin = Vec2::new(f64::INFINITY, f64::INFINITY);
        let mut bmax = Vec2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for &i in &self.perm[lo..hi] {
            let p = pts[i];
            bmin = Vec2::new(bmin.x.min(p.x), bmin.y.min(p.y));
            bmax = Vec2::new(bmax.x.max(p.x), bmax.y.max(p.y));
        }
        self.nodes.push(Node { lo, hi, children: Vec::new(), bmin, bmax });
        self.nodes.len() - 1
    }

    /// Compressed quadtree: nodes with a single non-empty quadrant are skipped.
    /// Points must be pairwise distinct.
    pub fn quadtree(pts: &[Vec2]) -> Tree {
        let mut t = Tree { perm: (0..pts.len()).collect(), nodes: Vec::new() };
        if pts.is_empty() {
            return t;
        }
        let root = t.push(pts, 0, pts.len());
        let n = &t.nodes[root];
        let half = 0.5 * (n.bmax.x - n.bmin.x).max(n.bmax.y - n.bmin.y).max(1e-300);
        let c = n.center();
        t.split_quad(pts, root, c, half);
        t
    }

    fn split_quad(&mut self, pts: &[Vec2], v: usize, mut c: Vec2, mut half: f64) {
        let (lo, hi) = (self.nodes[v].lo, self.nodes[v].hi);
        if hi - lo <= 1 {
            return;
        }
        let quad = |p: Vec2, c: Vec2| (p.x >= c.x) as usize + 2 * (p.y >= c.y) as usize;
        for step in 0.. {
            if step > 2200 {
                // Unreachable for distinct finite points; kd split keeps termination.
                return self.split_kd(pts, v);
            }
            let mut cnt = [0usize; 4];
            for &i in &self.perm[lo..hi] {
                cnt[quad(pts[i], c)] += 1;
            }
            let occupied = cnt.iter().filter(|&&k| k > 0).count();
            if occupied > 1 {
                break;
            }
            let q = quad(pts[self.perm[lo]], c);
            half *= 0.5;
            c = c + Vec2::new(if q & 1 == 1 { half } else { -half }, if q & 2 == 2 { half } else { -half });
        }
        self.perm[lo..hi].sort_by_key(|&i| quad(pts[i], c));
        let mut start = lo;
        for q in 0..4 {
            let mut end = start;
            while end < hi && quad(pts[self.perm[end]], c) == q {
                end += 1;
            }
            if end > start {
                let ch = self.push(pts, start, end);
                self.nodes[v].children.push(ch);
                let h = 0.5 * half;
                let cc = c + Vec2::new(if q & 1 == 1 { h } else { -h }, if q & 2 == 2 { h } else { -h });
                self.split_quad(pts, ch, cc, h);
            }
            start = end;
        }
    }

    /// Balanced kd-tree: median split across the wider side of the bounding box.
    pub fn kdtree(pts: &[Vec2]) -> Tree {
        let mut t = Tree { perm: (0..pts.len()).collect(), nodes: Vec::new() };
        if pts.is_empty() {
            return t;
        }
        let root = t.push(pts, 0, pts.len());
        t.split_kd(pts, root);
        t
    }

    fn split_kd(&mut self, pts: &[Vec2], v: usize) {
        let (lo, hi) = (self.nodes[v].lo, self.nodes[v].hi);
        if hi - lo <= 1 {
            return;
        }
        let n = &self.nodes[v];
        let by_x = n.bmax.x - n.bmin.x >= n.bmax.y - n.bmin.y;
        let key = |i: &usize| if by_x { (pts[*i].x, pts[*i].y) } else { (pts[*i].y, pts[*i].x) };
        let mid = (hi - lo) / 2;
        self.perm[lo..hi].select_nth_unstable_by(mid, |a, b| key(a).partial_cmp(&key(b)).unwrap());
        let a = self.push(pts, lo, lo + mid);
        let b = self.push(pts, lo + mid, hi);
        self.nodes[v].children = vec![a, b];
        self.split_kd(pts, a);
        self.split_kd(pts, b);
    }
}
