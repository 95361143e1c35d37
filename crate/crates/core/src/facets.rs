//! Facet and simplex classification: B1-pyramids, B2-facets, B-walls,
//! corners and their polynomials `F_τ`, splittings of compact facets, and
//! the 0-convenience and goodness conditions.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exact::{sign, FactoredCyclo, Integer, Rational, RootOfUnity};
use crate::monozeta::zeta_face;
use crate::newton::linalg::{det_i128, primitive};
use crate::newton::{
    lattice_distance_of_points, placing_triangulation, rank, simplex_volume, NewtonPolyhedron,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum B1Classification {
    None,
    /// Pyramid over `τ ∩ {vᵢ = 0}` with apex at height one.
    Compact { variable: usize, apex: Vec<i64>, base: Vec<Vec<i64>> },
    /// `τ + ℝ₊^S ⊆ τ`, the projection forgetting `S` is of compact type,
    /// and exactly one vertex of `τ` lies over its apex.
    NonCompact { directions: Vec<usize>, variable: usize, apex: Vec<i64>, base: Vec<Vec<i64>> },
}

impl B1Classification {
    pub fn is_b1(&self) -> bool {
        !matches!(self, B1Classification::None)
    }

    pub fn variable(&self) -> Option<usize> {
        match self {
            B1Classification::None => None,
            B1Classification::Compact { variable, .. } | B1Classification::NonCompact { variable, .. } => {
                Some(*variable)
            }
        }
    }
}

/// Variables `i` for which the polytope with these vertices (of dimension
/// `dim`) is a pyramid over its part in `{vᵢ = 0}` with apex at height one.
/// Returns `(i, apex index)` pairs.
pub fn pyramid_variables(points: &[Vec<i64>], dim: usize) -> Vec<(usize, usize)> {
    let n = points.first().map_or(0, Vec::len);
    (0..n)
        .filter_map(|i| {
            let off: Vec<usize> = (0..points.len()).filter(|&k| points[k][i] != 0).collect();
            if off.len() != 1 || points[off[0]][i] != 1 {
                return None;
            }
            let base: Vec<&Vec<i64>> = points.iter().filter(|p| p[i] == 0).collect();
            let base_dim = match base.split_first() {
                None => -1,
                Some((b0, rest)) => {
                    let edges: Vec<Vec<i64>> =
                        rest.iter().map(|p| p.iter().zip(b0.iter()).map(|(a, b)| a - b).collect()).collect();
                    rank(&edges) as i64
                }
            };
            (base_dim == dim as i64 - 1).then_some((i, off[0]))
        })
        .collect()
}

/// A lattice simplex (given by its `n` vertices in `ℤ₊ⁿ`) of type B1.
pub fn simplex_is_b1(points: &[Vec<i64>]) -> bool {
    !pyramid_variables(points, points.len().saturating_sub(1)).is_empty()
}

fn split_apex(points: &[Vec<i64>], apex: usize) -> (Vec<i64>, Vec<Vec<i64>>) {
    let base = points.iter().enumerate().filter(|&(k, _)| k != apex).map(|(_, p)| p.clone()).collect();
    (points[apex].clone(), base)
}

/// Every B1 classification of a facet, one per variable.
pub fn b1_classifications(p: &NewtonPolyhedron, facet: usize) -> Result<Vec<B1Classification>> {
    let f = p.facet(facet)?;
    let n = p.n();
    let pts = p.vertex_points(f.face);
    if f.compact {
        return Ok(pyramid_variables(&pts, n - 1)
            .into_iter()
            .map(|(variable, apex)| {
                let (apex, base) = split_apex(&pts, apex);
                B1Classification::Compact { variable, apex, base }
            })
            .collect());
    }
    let directions: Vec<usize> = (0..n).filter(|&i| f.conormal[i] == 0).collect();
    let keep: Vec<usize> = (0..n).filter(|i| !directions.contains(i)).collect();
    if keep.is_empty() || f.in_coordinate_hyperplane {
        return Ok(Vec::new());
    }
    let projected: Vec<Vec<i64>> = pts.iter().map(|v| keep.iter().map(|&i| v[i]).collect()).collect();
    let shadow = NewtonPolyhedron::from_points(keep.len(), &projected)?;
    let verts = shadow.vertices().to_vec();
    Ok(pyramid_variables(&verts, keep.len() - 1)
        .into_iter()
        .filter(|&(_, apex)| projected.iter().filter(|q| **q == verts[apex]).count() == 1)
        .map(|(j, apex)| {
            let (apex, base) = split_apex(&verts, apex);
            B1Classification::NonCompact { directions: directions.clone(), variable: keep[j], apex, base }
        })
        .collect())
}

/// B1 classification for the smallest applicable variable.
pub fn classify_b1(p: &NewtonPolyhedron, facet: usize) -> Result<B1Classification> {
    Ok(b1_classifications(p, facet)?.into_iter().next().unwrap_or(B1Classification::None))
}

pub fn b1_variables(p: &NewtonPolyhedron, facet: usize) -> Result<Vec<usize>> {
    Ok(b1_classifications(p, facet)?.iter().filter_map(B1Classification::variable).collect())
}

/// Coordinates `(i, j)` for which every point has `(vᵢ, vⱼ)` in
/// `{(1,0), (0,1), (0,0)}` with each value taken once or twice.
fn b2_pattern(points: &[Vec<i64>]) -> Option<(usize, usize)> {
    let n = points.first()?.len();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let mut counts = [0usize; 3];
            let ok = points.iter().all(|v| match (v[i], v[j]) {
                (1, 0) => {
                    counts[0] += 1;
                    true
                }
                (0, 1) => {
                    counts[1] += 1;
                    true
                }
                (0, 0) => {
                    counts[2] += 1;
                    true
                }
                _ => false,
            });
            if ok && counts.iter().all(|&c| (1..=2).contains(&c)) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Compact facets matching the six-vertex zero pattern (with coincident
/// vertices allowed) that are not already B1-pyramids.
pub fn is_b2_facet(p: &NewtonPolyhedron, facet: usize) -> Result<bool> {
    if p.n() != 4 {
        return Err(Error::UnsupportedDimension { n: p.n(), min: 4, max: 4 });
    }
    let f = p.facet(facet)?;
    let pts = p.vertex_points(f.face);
    Ok(f.compact && pts.len() >= 4 && b2_pattern(&pts).is_some() && !classify_b1(p, facet)?.is_b1())
}

/// Triangle `(0,0,a,b), (1,0,c,d), (0,1,e,f)` up to reordering coordinates.
pub fn is_b_wall(triangle: &[Vec<i64>]) -> bool {
    if triangle.len() != 3 || triangle.iter().any(|v| v.len() != 4) {
        return false;
    }
    (0..4).any(|i| {
        (0..4).any(|j| {
            if i == j {
                return false;
            }
            let mut seen = [false; 3];
            triangle.iter().all(|v| {
                let k = match (v[i], v[j]) {
                    (0, 0) => 0,
                    (1, 0) => 1,
                    (0, 1) => 2,
                    _ => return false,
                };
                !core::mem::replace(&mut seen[k], true)
            })
        })
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerData {
    pub r: usize,
    pub indices: Vec<usize>,
    /// Positions (in the simplex's vertex list) of the corner face.
    pub corner: Vec<usize>,
}

/// The corner of an `(n−1)`-simplex in `ℤ₊ⁿ`: the coordinates whose
/// hyperplane cuts a facet of the simplex, provided they meet in a
/// nonempty face.
pub fn corner_of(points: &[Vec<i64>]) -> Option<CornerData> {
    let n = points.first()?.len();
    if points.len() != n || points.iter().any(|v| v.len() != n || v.iter().any(|&c| c < 0)) {
        return None;
    }
    let indices: Vec<usize> =
        (0..n).filter(|&i| points.iter().filter(|v| v[i] == 0).count() == n - 1).collect();
    let corner: Vec<usize> =
        (0..n).filter(|&k| indices.iter().all(|&i| points[k][i] == 0)).collect();
    if indices.is_empty() || corner.is_empty() {
        return None;
    }
    Some(CornerData { r: indices.len(), indices, corner })
}

/// `ζ_σ = (1 − t^{N(σ)})^{Vol(σ)}` for a lattice simplex `σ`.
pub fn zeta_simplex(points: &[Vec<i64>]) -> Result<FactoredCyclo> {
    let n = lattice_distance_of_points(points)?.to_u64().ok_or(Error::Overflow)?;
    let vol = simplex_volume(points).to_i64().ok_or(Error::Overflow)?;
    Ok(FactoredCyclo::factor(n, vol))
}

/// `F_τ = ∏_{I ⊆ corner indices} ζ_{τ ∩ {vᵢ = 0, i ∈ I}}^{(−1)^{|I|}}`.
pub fn f_tau(points: &[Vec<i64>], corner: &CornerData) -> Result<FactoredCyclo> {
    let mut f = FactoredCyclo::one();
    for mask in 0..1usize << corner.r {
        let chosen: Vec<usize> =
            (0..corner.r).filter(|b| mask & (1 << b) != 0).map(|b| corner.indices[b]).collect();
        let face: Vec<Vec<i64>> =
            points.iter().filter(|v| chosen.iter().all(|&i| v[i] == 0)).cloned().collect();
        f = f.mul(&zeta_simplex(&face)?.pow(sign(chosen.len())));
    }
    Ok(f)
}

/// `F_τ (1 − t)^{(−1)ⁿ}` for a simplex with one vertex on each positive
/// coordinate axis: the product over nonempty faces `σ` of
/// `ζ_σ^{(−1)^{n−1−dim σ}}`.
pub fn f_tau_axes(points: &[Vec<i64>]) -> Result<FactoredCyclo> {
    let n = points.len();
    let mut seen = vec![false; n];
    for v in points {
        let on_axis = v.len() == n && v.iter().filter(|&&c| c != 0).count() == 1;
        let axis = v.iter().position(|&c| c > 0);
        match axis {
            Some(i) if on_axis && !seen[i] => seen[i] = true,
            _ => return Err(Error::Precondition("each vertex must lie on its own positive axis")),
        }
    }
    let mut f = FactoredCyclo::factor(1, sign(n));
    for mask in 1..1usize << n {
        let face: Vec<Vec<i64>> =
            (0..n).filter(|k| mask & (1 << k) != 0).map(|k| points[k].clone()).collect();
        let dim = face.len() - 1;
        f = f.mul(&zeta_simplex(&face)?.pow(sign(n - 1 - dim)));
    }
    Ok(f)
}

/// Primitive conormal, `N` and `ν` of the hyperplane through an
/// `(n−1)`-simplex, oriented so that `N > 0`.
pub fn simplex_data(points: &[Vec<i64>]) -> Result<(Vec<i64>, i64, i64)> {
    let n = points.len();
    if n == 0 || points.iter().any(|v| v.len() != n) {
        return Err(Error::Precondition("need n points in dimension n"));
    }
    let edges: Vec<Vec<i128>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(&points[0]).map(|(a, b)| (a - b) as i128).collect())
        .collect();
    let mut a = Vec::with_capacity(n);
    for j in 0..n {
        let minor: Vec<Vec<i128>> =
            edges.iter().map(|e| (0..n).filter(|&c| c != j).map(|c| e[c]).collect()).collect();
        let d = det_i128(&minor)?;
        let d = if j % 2 == 0 { d } else { -d };
        a.push(i64::try_from(d).map_err(|_| Error::Overflow)?);
    }
    if a.iter().all(|&x| x == 0) {
        return Err(Error::NotSimplicial);
    }
    let mut a = primitive(&a);
    let mut dist: i64 = a.iter().zip(&points[0]).map(|(x, y)| x * y).sum();
    if dist == 0 {
        return Err(Error::OriginInAffineSpan);
    }
    if dist < 0 {
        a.iter_mut().for_each(|x| *x = -*x);
        dist = -dist;
    }
    let nu = a.iter().sum();
    Ok((a, dist, nu))
}

/// `λ = exp(−2πi ν/N)` of the hyperplane through a simplex.
pub fn simplex_eigenvalue(points: &[Vec<i64>]) -> Result<RootOfUnity> {
    let (_, n, nu) = simplex_data(points)?;
    RootOfUnity::from_ratio(&Integer::from(nu), &Integer::from(n))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlexSplit {
    /// Simplices as vertex indices of the polyhedron.
    pub simplices: Vec<Vec<usize>>,
    pub is_b1: Vec<bool>,
    /// Index into `simplices` of a non-B1 simplex.
    pub witness: usize,
}

/// A triangulation of a compact facet (n = 4, neither B1 nor B2)
/// containing a simplex that is not B1. The lexicographic pulling
/// triangulation is tried first; otherwise a non-B1 simplex on the facet's
/// vertices is placed first and the placing triangulation completes it.
pub fn alex_split(p: &NewtonPolyhedron, facet: usize) -> Result<AlexSplit> {
    if p.n() != 4 {
        return Err(Error::UnsupportedDimension { n: p.n(), min: 4, max: 4 });
    }
    let f = p.facet(facet)?;
    if !f.compact {
        return Err(Error::Precondition("facet must be compact"));
    }
    if classify_b1(p, facet)?.is_b1() || is_b2_facet(p, facet)? {
        return Err(Error::Precondition("facet is a B1-pyramid or a B2-facet"));
    }
    let tag = |s: &[Vec<usize>]| -> Vec<bool> {
        s.iter()
            .map(|t| simplex_is_b1(&t.iter().map(|&v| p.vertices()[v].clone()).collect::<Vec<_>>()))
            .collect()
    };
    let simplices = p.split_facet(facet)?;
    let is_b1 = tag(&simplices);
    if let Some(witness) = is_b1.iter().position(|b| !b) {
        return Ok(AlexSplit { simplices, is_b1, witness });
    }
    let verts = p.faces()[f.face].vertices.clone();
    let pts: Vec<Vec<i64>> = verts.iter().map(|&v| p.vertices()[v].clone()).collect();
    for combo in combinations(verts.len(), p.n()) {
        let simplex: Vec<Vec<i64>> = combo.iter().map(|&k| pts[k].clone()).collect();
        if rank(&simplex) < p.n() || simplex_is_b1(&simplex) {
            continue;
        }
        let mut order = combo.clone();
        order.extend((0..verts.len()).filter(|k| !combo.contains(k)));
        let local = placing_triangulation(&pts, &order)?;
        let simplices: Vec<Vec<usize>> =
            local.iter().map(|s| s.iter().map(|&k| verts[k]).collect()).collect();
        let is_b1 = tag(&simplices);
        if let Some(witness) = is_b1.iter().position(|b| !b) {
            return Ok(AlexSplit { simplices, is_b1, witness });
        }
    }
    Err(Error::Precondition("no non-B1 simplex found on the facet's vertices"))
}

/// All `k`-subsets of `0..m` in lexicographic order.
pub fn combinations(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    rec(0, m, k, &mut cur, &mut out);
    out
}

/// Whether `σ` contributes with respect to `τ`: the eigenvalue of the
/// hyperplane through the simplex `τ` is a root of `ζ_σ`.
pub fn contributes(p: &NewtonPolyhedron, sigma: usize, tau: &[Vec<i64>]) -> Result<bool> {
    let lambda = simplex_eigenvalue(tau)?;
    Ok(zeta_face(p, sigma)?.multiplicity(&lambda) > 0)
}

/// Every facet through a 0-dimensional V-face that meets the open orthant
/// near it (equivalently, every such facet with `N > 0`) is compact.
pub fn is_zero_convenient(p: &NewtonPolyhedron) -> bool {
    p.v_faces().iter().filter(|v| p.faces()[v.face].dim == 0).all(|v| {
        p.faces()[v.face].facets.iter().all(|&j| {
            let f = &p.facets()[j];
            f.compact || f.in_coordinate_hyperplane
        })
    })
}

/// Candidate pole `−ν/N` of a facet with `N > 0`.
pub fn facet_pole(p: &NewtonPolyhedron, facet: usize) -> Option<Rational> {
    let f = &p.facets()[facet];
    (f.distance > 0).then(|| Rational::new((-f.nu).into(), f.distance.into()))
}

/// A 1-dimensional V-face inside both facets that contains a 0-dimensional
/// V-face.
pub fn shared_axis_edge(p: &NewtonPolyhedron, a: usize, b: usize) -> Option<usize> {
    let vf = p.v_faces();
    let points: Vec<usize> = vf.iter().filter(|v| p.faces()[v.face].dim == 0).map(|v| v.face).collect();
    vf.iter().map(|v| v.face).find(|&e| {
        let face = &p.faces()[e];
        face.dim == 1
            && face.facets.contains(&a)
            && face.facets.contains(&b)
            && points.iter().any(|&q| p.is_subface(q, e))
    })
}

/// Pairs of B1 facets with disjoint variable sets, the same candidate
/// pole, and a shared 1-dimensional V-face through a 0-dimensional one.
pub fn goodness_violations(p: &NewtonPolyhedron) -> Result<Vec<(usize, usize)>> {
    let b1: Vec<(usize, Vec<usize>)> = (0..p.facets().len())
        .map(|j| Ok((j, b1_variables(p, j)?)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|(j, vars)| !vars.is_empty() && facet_pole(p, *j).is_some())
        .collect();
    let mut out = Vec::new();
    for (x, (a, va)) in b1.iter().enumerate() {
        for (b, vb) in &b1[x + 1..] {
            if va.iter().any(|v| vb.contains(v)) || facet_pole(p, *a) != facet_pole(p, *b) {
                continue;
            }
            if shared_axis_edge(p, *a, *b).is_some() {
                out.push((*a, *b));
            }
        }
    }
    Ok(out)
}

pub fn is_good(p: &NewtonPolyhedron) -> Result<bool> {
    Ok(is_zero_convenient(p) && goodness_violations(p)?.is_empty())
}

/// Face id of `a ∩ b` for two facets, if nonempty.
pub fn facet_intersection(p: &NewtonPolyhedron, a: usize, b: usize) -> Option<usize> {
    let fa = &p.faces()[p.facets()[a].face];
    let fb = &p.faces()[p.facets()[b].face];
    let vs: Vec<usize> = fa.vertices.iter().copied().filter(|v| fb.vertices.contains(v)).collect();
    let ds: Vec<usize> = fa.directions.iter().copied().filter(|d| fb.directions.contains(d)).collect();
    if vs.is_empty() {
        return None;
    }
    p.find_face(&vs, &ds)
}

/// Pairs of B1 or B2 facets with the same candidate pole whose
/// intersection is a B-wall triangle.
pub fn b_wall_violations(p: &NewtonPolyhedron) -> Result<Vec<(usize, usize)>> {
    let mut special = Vec::new();
    for j in 0..p.facets().len() {
        if facet_pole(p, j).is_some() && (classify_b1(p, j)?.is_b1() || is_b2_facet(p, j)?) {
            special.push(j);
        }
    }
    let mut out = Vec::new();
    for (x, &a) in special.iter().enumerate() {
        for &b in &special[x + 1..] {
            if facet_pole(p, a) != facet_pole(p, b) {
                continue;
            }
            if let Some(face) = facet_intersection(p, a, b) {
                let f = &p.faces()[face];
                if f.compact && f.dim == 2 && f.vertices.len() == 3 && is_b_wall(&p.vertex_points(face)) {
                    out.push((a, b));
                }
            }
        }
    }
    Ok(out)
}
