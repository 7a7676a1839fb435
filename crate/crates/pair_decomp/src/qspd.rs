use crate::error::{DecompError, Result};
use crate::pair::{Certificate, Kind, Pair, PairDecomposition};
use geom_core::{PointSet, Vec2};

/// One-dimensional pair decomposition of values sorted ascending.
///
/// Returns `(left indices, right indices, split value)` where every left value
/// is strictly below the split and every right value strictly above it.
pub fn qspd_1d(vals: &[f64]) -> Result<Vec<(Vec<usize>, Vec<usize>, f64)>> {
    let mut out = Vec::new();
    rec_1d(vals, 0, vals.len(), &mut out)?;
    Ok(out)
}

fn rec_1d(v: &[f64], lo: usize, hi: usize, out: &mut Vec<(Vec<usize>, Vec<usize>, f64)>) -> Result<()> {
    if hi - lo <= 1 {
        return Ok(());
    }
    let k = lo + (hi - lo).div_ceil(2);
    if v[k - 1] >= v[k] {
        return Err(DecompError::DuplicateCoordinate(v[k]));
    }
    out.push(((lo..k).collect(), (k..hi).collect(), 0.5 * (v[k - 1] + v[k])));
    rec_1d(v, lo, k, out)?;
    rec_1d(v, k, hi, out)
}

/// Quadrant pair decomposition: median split on `y`, a one-dimensional
/// decomposition of the `x` projection, and each 1-D pair lifted into at most
/// two pairs in opposite quadrants. `O(n log n)` pairs.
///
/// Requires distinct `x` and distinct `y` coordinates.
pub fn build_qspd(p: &PointSet) -> Result<PairDecomposition> {
    let mut out = Vec::new();
    let ids: Vec<usize> = (0..p.len()).collect();
    rec_2d(p, ids, &mut out)?;
    Ok(PairDecomposition::new(Kind::Qspd, out))
}

fn rec_2d(p: &PointSet, mut ids: Vec<usize>, out: &mut Vec<Pair>) -> Result<()> {
    let n = ids.len();
    if n <= 1 {
        return Ok(());
    }
    ids.sort_by(|&a, &b| p.pos(a).y.total_cmp(&p.pos(b).y));
    let k = n.div_ceil(2);
    let (ya, yb) = (p.pos(ids[k - 1]).y, p.pos(ids[k]).y);
    if ya >= yb {
        return Err(DecompError::DuplicateCoordinate(yb));
    }
    let h = 0.5 * (ya + yb);
    let mut by_x = ids.clone();
    by_x.sort_by(|&a, &b| p.pos(a).x.total_cmp(&p.pos(b).x));
    let xs: Vec<f64> = by_x.iter().map(|&i| p.pos(i).x).collect();
    for (l, r, m) in qspd_1d(&xs)? {
        let center = Vec2::new(m, h);
        let split = |s: &[usize]| -> (Vec<usize>, Vec<usize>) {
            s.iter().map(|&j| by_x[j]).partition(|&i| p.pos(i).y > h)
        };
        let (l_up, l_down) = split(&l);
        let (r_up, r_down) = split(&r);
        for (a, b) in [(l_up, r_down), (l_down, r_up)] {
            if !a.is_empty() && !b.is_empty() {
                out.push(Pair::new(a, b, Certificate::Quadrant { center }));
            }
        }
    }
    let up = ids.split_off(k);
    rec_2d(p, ids, out)?;
    rec_2d(p, up, out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_dimensional_example() {
        let d = qspd_1d(&[1.0, 2.0, 3.0, 4.0]).unwrap();
        let sets: Vec<(Vec<usize>, Vec<usize>)> = d.iter().map(|(l, r, _)| (l.clone(), r.clone())).collect();
        assert_eq!(sets, vec![(vec![0, 1], vec![2, 3]), (vec![0], vec![1]), (vec![2], vec![3])]);
        assert_eq!(d[0].2, 2.5);
    }
}
