use alloc::vec::Vec;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::Integer;
use crate::error::{Error, Result};

/// Nonzero elementary divisors of the integer matrix whose rows are `rows`.
///
/// Pivots are chosen by minimal absolute value to limit coefficient growth.
pub fn elementary_divisors(rows: &[Vec<Integer>]) -> Vec<Integer> {
    let m = rows.len();
    let n = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut a: Vec<Vec<Integer>> = rows
        .iter()
        .map(|r| {
            let mut r = r.clone();
            r.resize(n, Integer::zero());
            r
        })
        .collect();
    let mut diag = Vec::new();
    for t in 0..m.min(n) {
        let Some((pi, pj)) = min_abs_entry(&a, t..m, t..n) else {
            break;
        };
        a.swap(t, pi);
        swap_cols(&mut a, t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..m {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&a[t][t]);
                    sub_row(&mut a, i, t, &q);
                    if !a[i][t].is_zero() {
                        clean = false;
                    }
                }
            }
            for j in t + 1..n {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&a[t][t]);
                    sub_col(&mut a, j, t, &q);
                    if !a[t][j].is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                // Move the smallest leftover in row/column t onto the pivot.
                let mut best = (t, t);
                for i in t + 1..m {
                    if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..n {
                    if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                        best = (t, j);
                    }
                }
                a.swap(t, best.0);
                swap_cols(&mut a, t, best.1);
                continue;
            }
            // The pivot must divide the remaining block.
            let piv = a[t][t].clone();
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !a[i][j].is_multiple_of(&piv)));
            match bad {
                Some(i) => {
                    let one = -Integer::one();
                    sub_row(&mut a, t, i, &one);
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    diag
}

fn min_abs_entry(
    a: &[Vec<Integer>],
    rows: core::ops::Range<usize>,
    cols: core::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            if a[i][j].is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn swap_cols(a: &mut [Vec<Integer>], j1: usize, j2: usize) {
    if j1 != j2 {
        for row in a.iter_mut() {
            row.swap(j1, j2);
        }
    }
}

/// row[dst] -= q * row[src]
fn sub_row(a: &mut [Vec<Integer>], dst: usize, src: usize, q: &Integer) {
    let src_row = a[src].clone();
    for (x, s) in a[dst].iter_mut().zip(src_row.iter()) {
        *x -= q * s;
    }
}

/// col[dst] -= q * col[src]
fn sub_col(a: &mut [Vec<Integer>], dst: usize, src: usize, q: &Integer) {
    for row in a.iter_mut() {
        let s = row[src].clone();
        row[dst] -= q * s;
    }
}

fn to_rows(gens: &[Vec<i64>]) -> Vec<Vec<Integer>> {
    gens.iter().map(|g| g.iter().map(|&x| Integer::from(x)).collect()).collect()
}

/// Rank over the rationals of the given integer vectors.
pub fn integer_rank(gens: &[Vec<i64>]) -> usize {
    elementary_divisors(&to_rows(gens)).len()
}

/// Index of the lattice generated by `gens` inside its saturation
/// `span(gens) ∩ Z^n`: the product of the nonzero elementary divisors.
/// Works for dependent generating sets; the empty set has index 1.
pub fn lattice_index(gens: &[Vec<i64>]) -> Integer {
    elementary_divisors(&to_rows(gens)).into_iter().fold(Integer::one(), |acc, d| acc * d)
}

/// Index for linearly independent generators; this is `mult(Δ)` when the
/// generators are the primitive rays of a simplicial cone `Δ`.
pub fn snf_index(gens: &[Vec<i64>]) -> Result<Integer> {
    let d = elementary_divisors(&to_rows(gens));
    if d.len() < gens.len() {
        return Err(Error::NotSimplicial);
    }
    Ok(d.into_iter().fold(Integer::one(), |acc, x| acc * x))
}
