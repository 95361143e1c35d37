use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::linalg::{det_i128, pivot_columns, rank};
use crate::error::Result;

/// Placing triangulation of the cone spanned by `vectors`, inserting them
/// in the given `order`. Each new vector is joined to every boundary facet
/// it sees strictly. The first independent vectors in `order` form the
/// starting simplex. Returns index lists, each sorted.
///
/// Triangulating the homogenized points `(p, 1)` triangulates the polytope
/// `conv(p)` with the same index lists.
pub fn placing_triangulation(vectors: &[Vec<i64>], order: &[usize]) -> Result<Vec<Vec<usize>>> {
    let d = rank(vectors);
    if d == 0 {
        return Ok(Vec::new());
    }
    let cols = pivot_columns(vectors);
    let proj: Vec<Vec<i128>> =
        vectors.iter().map(|v| cols.iter().map(|&c| v[c] as i128).collect()).collect();

    let mut seq: Vec<usize> = order.iter().copied().filter(|&i| i < vectors.len()).collect();
    for i in 0..vectors.len() {
        if !seq.contains(&i) {
            seq.push(i);
        }
    }
    let mut start: Vec<usize> = Vec::new();
    for &i in &seq {
        let mut trial: Vec<Vec<i64>> = start.iter().map(|&j| vectors[j].clone()).collect();
        trial.push(vectors[i].clone());
        if rank(&trial) == trial.len() {
            start.push(i);
            if start.len() == d {
                break;
            }
        }
    }
    let mut simplices: Vec<Vec<usize>> = alloc::vec![{
        let mut s = start.clone();
        s.sort_unstable();
        s
    }];

    let side = |facet: &[usize], x: usize| -> Result<i128> {
        let mut m: Vec<Vec<i128>> = facet.iter().map(|&j| proj[j].clone()).collect();
        m.push(proj[x].clone());
        Ok(det_i128(&m)?.signum())
    };

    for &x in seq.iter().filter(|i| !start.contains(i)) {
        let mut boundary: BTreeMap<Vec<usize>, (usize, usize)> = BTreeMap::new();
        for s in &simplices {
            for (k, &w) in s.iter().enumerate() {
                let mut f = s.clone();
                f.remove(k);
                boundary.entry(f).and_modify(|e| e.1 += 1).or_insert((w, 1));
            }
        }
        let mut added = Vec::new();
        for (f, (w, count)) in boundary {
            if count != 1 {
                continue;
            }
            let sx = side(&f, x)?;
            if sx != 0 && sx == -side(&f, w)? {
                let mut s = f.clone();
                s.push(x);
                s.sort_unstable();
                added.push(s);
            }
        }
        simplices.extend(added);
    }
    Ok(simplices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn square_has_two_triangles() {
        let pts = vec![vec![0, 0, 1], vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 1]];
        let t = placing_triangulation(&pts, &[0, 1, 2, 3]).unwrap();
        assert_eq!(t, vec![vec![0, 1, 2], vec![1, 2, 3]]);
        let t = placing_triangulation(&pts, &[0, 1, 3, 2]).unwrap();
        assert_eq!(t, vec![vec![0, 1, 3], vec![0, 2, 3]]);
    }

    #[test]
    fn interior_point_is_skipped() {
        let pts = vec![vec![0, 0, 1], vec![2, 0, 1], vec![0, 2, 1], vec![1, 1, 1]];
        let t = placing_triangulation(&pts, &[0, 1, 2, 3]).unwrap();
        assert_eq!(t, vec![vec![0, 1, 2]]);
    }
}
