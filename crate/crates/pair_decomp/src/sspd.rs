use crate::pair::{Certificate, Kind, Pair, PairDecomposition};
use crate::tree::Tree;
use geom_core::PointSet;

/// Separation used by [`build_sspd`].
pub const SSPD_SIGMA: f64 = 2.0;

/// Semi-separated pair decomposition over a balanced kd-tree.
///
/// Pairs of sibling subtrees are refined by splitting the node with the larger
/// bounding box until `min(diag) * sigma <= box distance`.
pub fn build_sspd(p: &PointSet) -> PairDecomposition {
    build_sspd_with(p, SSPD_SIGMA)
}

pub fn build_sspd_with(p: &PointSet, sigma: f64) -> PairDecomposition {
    let t = Tree::kdtree(&p.coords());
    let mut out = Vec::new();
    for v in 0..t.nodes.len() {
        if let [a, b] = t.nodes[v].children[..] {
            find_pairs(&t, a, b, sigma, &mut out);
        }
    }
    PairDecomposition::new(Kind::Sspd, out)
}

fn find_pairs(t: &Tree, u: usize, v: usize, sigma: f64, out: &mut Vec<Pair>) {
    let (nu, nv) = (&t.nodes[u], &t.nodes[v]);
    let d = nu.box_dist(nv);
    if d > 0.0 && nu.diag().min(nv.diag()) * sigma <= d {
        out.push(Pair::new(t.ids(u), t.ids(v), Certificate::Semi { sigma }));
        return;
    }
    let (big, small) = if nu.diag() > nv.diag() || (nu.diag() == nv.diag() && !nu.is_leaf()) {
        (u, v)
    } else {
        (v, u)
    };
    if t.nodes[big].is_leaf() {
        // Two distinct single points always have positive box distance.
        out.push(Pair::new(t.ids(u), t.ids(v), Certificate::Semi { sigma }));
        return;
    }
    for &c in &t.nodes[big].children {
        find_pairs(t, c, small, sigma, out);
    }
}
