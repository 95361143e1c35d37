//! Double description: extreme rays of `{y : A y >= 0}`.

use alloc::vec::Vec;

use super::linalg::{inverse_directions, primitive_i128, rank_i128};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub(crate) fn new(len: usize) -> Self {
        BitSet { words: alloc::vec![0; len.div_ceil(64).max(1)] }
    }

    pub(crate) fn full(len: usize) -> Self {
        let mut b = Self::new(len);
        for i in 0..len {
            b.insert(i);
        }
        b
    }

    pub(crate) fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub(crate) fn contains(&self, i: usize) -> bool {
        self.words.get(i / 64).is_some_and(|w| w & (1 << (i % 64)) != 0)
    }

    pub(crate) fn and(&self, other: &BitSet) -> BitSet {
        BitSet { words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect() }
    }

    pub(crate) fn is_subset(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub(crate) fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub(crate) fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub(crate) fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            (0..64).filter(move |b| w & (1 << b) != 0).map(move |b| k * 64 + b)
        })
    }
}

pub(crate) struct Ray {
    pub(crate) y: Vec<i128>,
    /// Rows of `A` on which the ray is tight.
    pub(crate) zeros: BitSet,
}

fn eval(row: &[i128], y: &[i128]) -> Result<i128> {
    row.iter().zip(y).try_fold(0i128, |acc, (a, b)| {
        a.checked_mul(*b).and_then(|p| acc.checked_add(p)).ok_or(Error::Overflow)
    })
}

/// Extreme rays of the pointed cone `{y : A y >= 0}`. `A` must have full
/// column rank. Each returned ray is primitive and carries its tight rows.
pub(crate) fn extreme_rays(rows: &[Vec<i64>]) -> Result<Vec<Ray>> {
    let m = rows.len();
    let d = rows.first().map_or(0, Vec::len);
    let a: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();

    let mut basis: Vec<usize> = Vec::new();
    let mut chosen: Vec<Vec<i128>> = Vec::new();
    for (i, r) in a.iter().enumerate() {
        chosen.push(r.clone());
        if rank_i128(&chosen) == chosen.len() {
            basis.push(i);
            if basis.len() == d {
                break;
            }
        } else {
            chosen.pop();
        }
    }
    if basis.len() < d {
        return Err(Error::NotPointed);
    }

    let dirs = inverse_directions(&chosen)?;
    let mut rays: Vec<Ray> = dirs
        .into_iter()
        .enumerate()
        .map(|(j, y)| {
            let mut zeros = BitSet::new(m);
            for (k, &b) in basis.iter().enumerate() {
                if k != j {
                    zeros.insert(b);
                }
            }
            Ray { y, zeros }
        })
        .collect();

    let mut processed = BitSet::new(m);
    for &b in &basis {
        processed.insert(b);
    }

    for i in 0..m {
        if processed.contains(i) {
            continue;
        }
        let row = &a[i];
        let vals: Vec<i128> = rays.iter().map(|r| eval(row, &r.y)).collect::<Result<_>>()?;
        let mut next: Vec<Ray> = Vec::new();
        for (r, &v) in rays.iter().zip(&vals) {
            if v >= 0 {
                let mut zeros = r.zeros.clone();
                if v == 0 {
                    zeros.insert(i);
                }
                next.push(Ray { y: r.y.clone(), zeros });
            }
        }
        for (p, &vp) in vals.iter().enumerate() {
            if vp <= 0 {
                continue;
            }
            for (q, &vq) in vals.iter().enumerate() {
                if vq >= 0 {
                    continue;
                }
                let common = rays[p].zeros.and(&rays[q].zeros);
                if common.count() + 2 < d {
                    continue;
                }
                let blocked = rays.iter().enumerate().any(|(k, r)| {
                    k != p && k != q && common.is_subset(&r.zeros)
                });
                if blocked {
                    continue;
                }
                let y: Vec<i128> = rays[q]
                    .y
                    .iter()
                    .zip(&rays[p].y)
                    .map(|(yq, yp)| {
                        vp.checked_mul(*yq)
                            .and_then(|x| vq.checked_mul(*yp).and_then(|z| x.checked_sub(z)))
                            .ok_or(Error::Overflow)
                    })
                    .collect::<Result<_>>()?;
                let mut zeros = common;
                zeros.insert(i);
                next.push(Ray { y: primitive_i128(&y), zeros });
            }
        }
        processed.insert(i);
        rays = next;
    }
    Ok(rays)
}
