use crate::error::{DecompError, Result};
use crate::pair::{Certificate, Kind, Pair, PairDecomposition};
use crate::tree::Tree;
use geom_core::PointSet;

/// Well-separated pair decomposition over a compressed quadtree.
///
/// Node balls are centred on tight bounding boxes, so a pair accepted by the
/// ball test satisfies the certificate on the actual subsets.
pub fn build_wspd(p: &PointSet, sigma: f64) -> Result<PairDecomposition> {
    if !(sigma >= 1.0 && sigma.is_finite()) {
        return Err(DecompError::Parameter(format!("separation {sigma} must be >= 1")));
    }
    let t = Tree::quadtree(&p.coords());
    let mut out = Vec::new();
    for v in 0..t.nodes.len() {
        let ch = &t.nodes[v].children;
        for a in 0..ch.len() {
            for b in a + 1..ch.len() {
                find_pairs(&t, ch[a], ch[b], sigma, &mut out);
            }
        }
    }
    Ok(PairDecomposition::new(Kind::Wspd, out))
}

fn find_pairs(t: &Tree, u: usize, v: usize, sigma: f64, out: &mut Vec<Pair>) {
    let (nu, nv) = (&t.nodes[u], &t.nodes[v]);
    let (ru, rv) = (0.5 * nu.diag(), 0.5 * nv.diag());
    let gap = nu.center().dist(nv.center()) - ru - rv;
    if gap > 0.0 && gap >= sigma * 2.0 * ru.max(rv) {
        out.push(Pair::new(t.ids(u), t.ids(v), Certificate::Well { sigma }));
        return;
    }
    let (big, small) = if ru > rv || (ru == rv && !nu.is_leaf()) { (u, v) } else { (v, u) };
    for &c in &t.nodes[big].children {
        find_pairs(t, c, small, sigma, out);
    }
}
