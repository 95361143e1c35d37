use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::dd::{extreme_rays, BitSet};
use super::linalg::{pivot_columns, primitive, rank};
use super::placing::placing_triangulation;
use crate::error::{Error, Result};
use crate::exact::{snf_index, Integer};

/// A simplicial rational cone given by primitive, linearly independent ray
/// generators, with its multiplicity (the index of the lattice spanned by
/// the rays in its saturation).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialCone {
    rays: Vec<Vec<i64>>,
    mult: Integer,
}

impl SimplicialCone {
    pub fn new(rays: Vec<Vec<i64>>) -> Result<Self> {
        let rays: Vec<Vec<i64>> = rays.iter().map(|r| primitive(r)).collect();
        if rays.iter().any(|r| r.iter().all(|&x| x == 0)) {
            return Err(Error::NotSimplicial);
        }
        let mult = snf_index(&rays)?;
        Ok(SimplicialCone { rays, mult })
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn multiplicity(&self) -> &Integer {
        &self.mult
    }

    pub fn dim(&self) -> usize {
        self.rays.len()
    }
}

/// Triangulates the cone spanned by `rays` without new rays: a placing
/// triangulation with the rays inserted in lexicographic order.
pub fn triangulate_cone(rays: &[Vec<i64>]) -> Result<Vec<SimplicialCone>> {
    let sorted = normalized(rays);
    let order: Vec<usize> = (0..sorted.len()).collect();
    triangulate_cone_ordered(&sorted, &order)
}

/// Placing triangulation with rays inserted in the given order (indices
/// into `rays`; missing indices are appended in increasing order).
pub fn triangulate_cone_ordered(rays: &[Vec<i64>], order: &[usize]) -> Result<Vec<SimplicialCone>> {
    if rays.is_empty() {
        return Ok(alloc::vec![SimplicialCone { rays: Vec::new(), mult: Integer::from(1) }]);
    }
    let rays: Vec<Vec<i64>> = rays.iter().map(|r| primitive(r)).collect();
    if rays.iter().any(|r| r.iter().all(|&x| x == 0)) {
        return Err(Error::Precondition("zero ray"));
    }
    ConeLattice::new(&rays)?;
    to_cones(&rays, placing_triangulation(&rays, order)?)
}

/// Pulling triangulation: the first ray in `order` is joined to a pulling
/// triangulation of every facet not containing it, recursively.
pub fn pulling_triangulate_cone(rays: &[Vec<i64>], order: &[usize]) -> Result<Vec<SimplicialCone>> {
    if rays.is_empty() {
        return Ok(alloc::vec![SimplicialCone { rays: Vec::new(), mult: Integer::from(1) }]);
    }
    let rays: Vec<Vec<i64>> = rays.iter().map(|r| primitive(r)).collect();
    if rays.iter().any(|r| r.iter().all(|&x| x == 0)) {
        return Err(Error::Precondition("zero ray"));
    }
    let mut priority = alloc::vec![usize::MAX; rays.len()];
    for (p, &i) in order.iter().enumerate() {
        if i < rays.len() && priority[i] == usize::MAX {
            priority[i] = p;
        }
    }
    for (i, p) in priority.iter_mut().enumerate() {
        if *p == usize::MAX {
            *p = order.len() + i;
        }
    }
    let lattice = ConeLattice::new(&rays)?;
    let mut out = Vec::new();
    lattice.pull(&lattice.whole, lattice.dim, &priority, &mut Vec::new(), &mut out);
    to_cones(&rays, out)
}

fn normalized(rays: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut sorted: Vec<Vec<i64>> = rays.iter().map(|r| primitive(r)).collect();
    sorted.sort();
    sorted.dedup();
    sorted
}

fn to_cones(rays: &[Vec<i64>], simplices: Vec<Vec<usize>>) -> Result<Vec<SimplicialCone>> {
    simplices
        .into_iter()
        .map(|idx| {
            let mut rs: Vec<Vec<i64>> = idx.iter().map(|&i| rays[i].clone()).collect();
            rs.sort();
            SimplicialCone::new(rs)
        })
        .collect()
}

struct ConeLattice {
    dim: usize,
    whole: BitSet,
    faces: Vec<(BitSet, usize)>,
}

impl ConeLattice {
    fn new(rays: &[Vec<i64>]) -> Result<Self> {
        let l = rank(rays);
        let m = rays.len();
        let mut whole = BitSet::new(m);
        for i in 0..m {
            whole.insert(i);
        }
        if l == m {
            return Ok(ConeLattice { dim: l, whole, faces: Vec::new() });
        }
        let cols = pivot_columns(rays);
        let projected: Vec<Vec<i64>> =
            rays.iter().map(|r| cols.iter().map(|&c| r[c]).collect()).collect();
        let duals = extreme_rays(&projected)?;
        let normals: Vec<Vec<i64>> = duals
            .iter()
            .map(|d| d.y.iter().map(|&x| x as i64).collect())
            .collect();
        if rank(&normals) < l {
            return Err(Error::NotPointed);
        }
        let facet_sets: Vec<BitSet> = duals.into_iter().map(|d| d.zeros).collect();

        // A ray is extreme when the facets through it cut out a line.
        let mut extreme = BitSet::new(m);
        for i in 0..m {
            let through: Vec<Vec<i64>> = facet_sets
                .iter()
                .zip(&normals)
                .filter(|(f, _)| f.contains(i))
                .map(|(_, a)| a.clone())
                .collect();
            if rank(&through) + 1 == l {
                extreme.insert(i);
            }
        }
        let facet_sets: Vec<BitSet> = facet_sets.iter().map(|f| f.and(&extreme)).collect();

        let mut seen: BTreeSet<BitSet> = BTreeSet::new();
        let mut queue: Vec<BitSet> = Vec::new();
        for f in &facet_sets {
            if seen.insert(f.clone()) {
                queue.push(f.clone());
            }
        }
        let mut k = 0;
        while k < queue.len() {
            let cur = queue[k].clone();
            for f in &facet_sets {
                let g = cur.and(f);
                if !g.is_empty() && seen.insert(g.clone()) {
                    queue.push(g);
                }
            }
            k += 1;
        }
        let faces = queue
            .into_iter()
            .map(|s| {
                let d = rank(&s.iter().map(|i| rays[i].clone()).collect::<Vec<_>>());
                (s, d)
            })
            .collect();
        Ok(ConeLattice { dim: l, whole: extreme, faces })
    }

    fn pull(
        &self,
        face: &BitSet,
        dim: usize,
        priority: &[usize],
        prefix: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if face.count() == dim {
            let mut s = prefix.clone();
            s.extend(face.iter());
            out.push(s);
            return;
        }
        let apex = face.iter().min_by_key(|&i| priority[i]).expect("nonempty face");
        for (g, gd) in &self.faces {
            if *gd + 1 == dim && g.is_subset(face) && !g.contains(apex) {
                prefix.push(apex);
                self.pull(g, *gd, priority, prefix, out);
                prefix.pop();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn two_rays_in_the_plane_are_simplicial() {
        let t = triangulate_cone(&[vec![0, 1], vec![3, 2]]).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].multiplicity(), &Integer::from(3));
    }

    #[test]
    fn square_cone_splits_in_two() {
        let rays = [vec![1, 0, 0], vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 1]];
        let t = triangulate_cone(&rays).unwrap();
        assert_eq!(t.len(), 2);
        let shared: Vec<&Vec<i64>> =
            t[0].rays().iter().filter(|r| t[1].rays().contains(r)).collect();
        assert_eq!(shared.len(), 2);
    }

    #[test]
    fn independent_rays_are_returned_whole() {
        let t = triangulate_cone(&[vec![1, 0, 0], vec![1, 2, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].multiplicity(), &Integer::from(2));
    }

    #[test]
    fn non_pointed_cone_is_rejected() {
        let r = triangulate_cone(&[vec![1, 0], vec![-1, 0], vec![0, 1]]);
        assert_eq!(r, Err(Error::NotPointed));
    }
}
