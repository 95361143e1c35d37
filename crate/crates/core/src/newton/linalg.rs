//! Small dense integer linear algebra on machine integers.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

pub(crate) fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
pub(crate) fn primitive_i128(v: &[i128]) -> Vec<i128> {
    let g = v.iter().fold(0i128, |g, &x| gcd_i128(g, x));
    if g <= 1 {
        return v.to_vec();
    }
    v.iter().map(|x| x / g).collect()
}

pub fn primitive(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0i64, |g, &x| num_integer::gcd(g, x));
    if g <= 1 {
        return v.to_vec();
    }
    v.iter().map(|x| x / g).collect()
}

pub(crate) fn to_i64(v: &[i128]) -> Result<Vec<i64>> {
    v.iter().map(|&x| i64::try_from(x).map_err(|_| Error::Overflow)).collect()
}

/// Fraction-free row reduction; returns the row echelon form and the pivot
/// columns. Entries stay integral (Bareiss), so overflow is reported rather
/// than wrapped.
fn bareiss(rows: &[Vec<i128>]) -> Result<(Vec<Vec<i128>>, Vec<usize>)> {
    let mut a: Vec<Vec<i128>> = rows.to_vec();
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut prev = 1i128;
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..m {
            for j in c + 1..n {
                let v = a[r][c]
                    .checked_mul(a[i][j])
                    .and_then(|x| a[i][c].checked_mul(a[r][j]).and_then(|y| x.checked_sub(y)))
                    .ok_or(Error::Overflow)?;
                a[i][j] = v / prev;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        pivots.push(c);
        r += 1;
    }
    Ok((a, pivots))
}

pub(crate) fn rank_i128(rows: &[Vec<i128>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    bareiss(rows).map(|(_, p)| p.len()).unwrap_or_else(|_| {
        let big: Vec<Vec<i64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| i64::try_from(x).expect("entry fits i64")).collect())
            .collect();
        crate::exact::integer_rank(&big)
    })
}

pub fn rank(rows: &[Vec<i64>]) -> usize {
    let r: Vec<Vec<i128>> = rows.iter().map(|v| v.iter().map(|&x| x as i128).collect()).collect();
    rank_i128(&r)
}

/// Pivot columns of the row space: a set of coordinates on which the
/// projection restricted to `span(rows)` is injective.
pub(crate) fn pivot_columns(rows: &[Vec<i64>]) -> Vec<usize> {
    if rows.is_empty() {
        return Vec::new();
    }
    let r: Vec<Vec<i128>> = rows.iter().map(|v| v.iter().map(|&x| x as i128).collect()).collect();
    bareiss(&r).map(|(_, p)| p).expect("small entries")
}

pub(crate) fn det_i128(m: &[Vec<i128>]) -> Result<i128> {
    let n = m.len();
    if n == 0 {
        return Ok(1);
    }
    let mut a = m.to_vec();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                return Ok(0);
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[k][k]
                    .checked_mul(a[i][j])
                    .and_then(|x| a[i][k].checked_mul(a[k][j]).and_then(|y| x.checked_sub(y)))
                    .ok_or(Error::Overflow)?;
                a[i][j] = v / prev;
            }
        }
        prev = a[k][k];
    }
    Ok(sign * a[n - 1][n - 1])
}

/// Columns of `sign(det B) * adj(B)`: column `j` is orthogonal to every row
/// of `B` except row `j`, on which it is positive.
pub(crate) fn inverse_directions(b: &[Vec<i128>]) -> Result<Vec<Vec<i128>>> {
    let d = b.len();
    let det = det_i128(b)?;
    if det == 0 {
        return Err(Error::Precondition("singular basis"));
    }
    let s = det.signum();
    let mut cols = vec![vec![0i128; d]; d];
    for i in 0..d {
        for j in 0..d {
            // cofactor C_{j,i} goes to adj[i][j]
            let minor: Vec<Vec<i128>> = (0..d)
                .filter(|&r| r != j)
                .map(|r| (0..d).filter(|&c| c != i).map(|c| b[r][c]).collect())
                .collect();
            let sgn = if (i + j) % 2 == 0 { 1 } else { -1 };
            cols[j][i] = s * sgn * det_i128(&minor)?;
        }
    }
    Ok(cols.into_iter().map(|c| primitive_i128(&c)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_det() {
        assert_eq!(rank(&[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]), 2);
        assert_eq!(det_i128(&[vec![0, 1], vec![3, 2]]).unwrap(), -3);
        assert_eq!(det_i128(&[vec![2, 0, 0], vec![0, 3, 0], vec![1, 1, 1]]).unwrap(), 6);
    }

    #[test]
    fn inverse_directions_are_dual_basis() {
        let b = vec![vec![1i128, 2, 0], vec![0, 1, 5], vec![3, 0, 1]];
        let cols = inverse_directions(&b).unwrap();
        for (j, c) in cols.iter().enumerate() {
            for (i, row) in b.iter().enumerate() {
                let v: i128 = row.iter().zip(c).map(|(x, y)| x * y).sum();
                if i == j {
                    assert!(v > 0);
                } else {
                    assert_eq!(v, 0);
                }
            }
        }
    }
}
