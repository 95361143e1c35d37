//! Newton polyhedra `Γ₊ = conv(supp) + ℝ₊ⁿ` and their combinatorics.
//!
//! [`build_newton`] computes the facets by double description on the
//! homogenized cone, then closes the facet incidences under intersection to
//! get every face. Faces are identified by their index in
//! [`NewtonPolyhedron::faces`]; facets are sorted lexicographically by
//! conormal and faces by `(dim, vertex indices, directions)`, so all ids are
//! reproducible.

mod cone;
mod dd;
pub(crate) mod linalg;
mod placing;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

pub use cone::{pulling_triangulate_cone, triangulate_cone, triangulate_cone_ordered, SimplicialCone};
pub use placing::placing_triangulation;
use dd::{extreme_rays, BitSet};
pub use linalg::{primitive, rank};

use crate::error::{Error, Result};
use crate::exact::{lattice_index, Integer, Rational};

pub const MIN_DIM: usize = 2;
pub const MAX_DIM: usize = 6;
/// Largest exponent accepted in a support vector.
pub const MAX_EXPONENT: i64 = 1 << 20;

/// Exponent vectors of a polynomial, optionally with their coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportSet {
    n: usize,
    points: Vec<Vec<i64>>,
    coefficients: Option<Vec<Rational>>,
}

impl SupportSet {
    pub fn new(n: usize, points: Vec<Vec<i64>>) -> Result<Self> {
        if !(MIN_DIM..=MAX_DIM).contains(&n) {
            return Err(Error::UnsupportedDimension { n, min: MIN_DIM, max: MAX_DIM });
        }
        if points.is_empty() {
            return Err(Error::InvalidSupport(String::from("empty support")));
        }
        let mut seen = BTreeSet::new();
        for p in &points {
            if p.len() != n {
                return Err(Error::InvalidSupport(alloc::format!(
                    "exponent {p:?} has length {}, expected {n}",
                    p.len()
                )));
            }
            if p.iter().any(|&c| !(0..=MAX_EXPONENT).contains(&c)) {
                return Err(Error::InvalidSupport(alloc::format!(
                    "exponent {p:?} has a coordinate outside 0..={MAX_EXPONENT}"
                )));
            }
            if p.iter().all(|&c| c == 0) {
                return Err(Error::InvalidSupport(String::from(
                    "constant term in support (f(0) must be 0)",
                )));
            }
            if !seen.insert(p.clone()) {
                return Err(Error::InvalidSupport(alloc::format!("duplicate exponent {p:?}")));
            }
        }
        Ok(SupportSet { n, points, coefficients: None })
    }

    /// Attaches coefficients, one per exponent, all nonzero.
    pub fn with_coefficients(mut self, coefficients: Vec<Rational>) -> Result<Self> {
        if coefficients.len() != self.points.len() {
            return Err(Error::InvalidSupport(String::from("coefficient count mismatch")));
        }
        if coefficients.iter().any(Zero::is_zero) {
            return Err(Error::InvalidSupport(String::from("zero coefficient")));
        }
        self.coefficients = Some(coefficients);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }

    pub fn coefficients(&self) -> Option<&[Rational]> {
        self.coefficients.as_deref()
    }
}

/// A face of `Γ₊`: the convex hull of `vertices` plus the cone spanned by
/// the coordinate directions in `directions` (0-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub dim: usize,
    pub vertices: Vec<usize>,
    pub directions: Vec<usize>,
    /// Indices of the facets containing this face.
    pub facets: Vec<usize>,
    pub compact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetData {
    /// Primitive inner normal `a(τ)`, nonnegative.
    pub conormal: Vec<i64>,
    /// `N(τ) = min ⟨a(τ), Γ₊⟩`.
    pub distance: i64,
    /// `ν(τ) = Σ a(τ)ᵢ`.
    pub nu: i64,
    pub compact: bool,
    pub in_coordinate_hyperplane: bool,
    /// Index of this facet in the face list.
    pub face: usize,
}

/// A V-face together with its minimal coordinate subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VFace {
    pub face: usize,
    pub support: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct NewtonPolyhedron {
    n: usize,
    vertices: Vec<Vec<i64>>,
    facets: Vec<FacetData>,
    faces: Vec<Face>,
    index: BTreeMap<(Vec<usize>, Vec<usize>), usize>,
}

pub fn build_newton(s: &SupportSet) -> Result<NewtonPolyhedron> {
    NewtonPolyhedron::from_points(s.n(), s.points())
}

impl NewtonPolyhedron {
    /// Builds `conv(points) + ℝ₊ⁿ` for any `n >= 1`. Unlike [`SupportSet`]
    /// this accepts the origin, which projections can produce.
    pub fn from_points(n: usize, points: &[Vec<i64>]) -> Result<Self> {
        if n == 0 || n > MAX_DIM + 1 {
            return Err(Error::UnsupportedDimension { n, min: 1, max: MAX_DIM });
        }
        if points.is_empty() || points.iter().any(|p| p.len() != n || p.iter().any(|&c| c < 0)) {
            return Err(Error::InvalidSupport(String::from("points must be nonempty in ℤ₊ⁿ")));
        }
        let mut pts: Vec<Vec<i64>> = points.to_vec();
        pts.sort();
        pts.dedup();

        let mut rows: Vec<Vec<i64>> = pts
            .iter()
            .map(|p| {
                let mut r = p.clone();
                r.push(1);
                r
            })
            .collect();
        for i in 0..n {
            let mut r = vec![0; n + 1];
            r[i] = 1;
            rows.push(r);
        }
        let m = pts.len();

        struct RawFacet {
            a: Vec<i64>,
            dist: i64,
            points: Vec<usize>,
        }
        let mut raw: Vec<RawFacet> = Vec::new();
        for ray in extreme_rays(&rows)? {
            let y = linalg::to_i64(&ray.y)?;
            let a = y[..n].to_vec();
            if a.iter().all(|&x| x == 0) {
                continue;
            }
            debug_assert!(a.iter().all(|&x| x >= 0));
            let dist = -y[n];
            let on: Vec<usize> = (0..m).filter(|&i| ray.zeros.contains(i)).collect();
            raw.push(RawFacet { a, dist, points: on });
        }
        raw.sort_by(|x, y| x.a.cmp(&y.a));

        // Vertices: points where the incident facet normals have full rank.
        let mut vertex_of_point = vec![None; m];
        let mut vertices = Vec::new();
        for (i, p) in pts.iter().enumerate() {
            let normals: Vec<Vec<i64>> =
                raw.iter().filter(|f| f.points.contains(&i)).map(|f| f.a.clone()).collect();
            if rank(&normals) == n {
                vertex_of_point[i] = Some(vertices.len());
                vertices.push(p.clone());
            }
        }
        let nv = vertices.len();

        let facet_keys: Vec<(BitSet, u32)> = raw
            .iter()
            .map(|f| {
                let mut vs = BitSet::new(nv);
                for &i in &f.points {
                    if let Some(v) = vertex_of_point[i] {
                        vs.insert(v);
                    }
                }
                let dirs = (0..n).filter(|&i| f.a[i] == 0).fold(0u32, |acc, i| acc | 1 << i);
                (vs, dirs)
            })
            .collect();

        let mut seen: BTreeSet<(BitSet, u32)> = BTreeSet::new();
        let mut queue: Vec<(BitSet, u32)> = Vec::new();
        for k in &facet_keys {
            if seen.insert(k.clone()) {
                queue.push(k.clone());
            }
        }
        let mut idx = 0;
        while idx < queue.len() {
            let (cv, cd) = queue[idx].clone();
            for (fv, fd) in &facet_keys {
                let key = (cv.and(fv), cd & fd);
                if !key.0.is_empty() && seen.insert(key.clone()) {
                    queue.push(key);
                }
            }
            idx += 1;
        }
        let whole = (BitSet::full(nv), (1u32 << n) - 1);
        if seen.insert(whole.clone()) {
            queue.push(whole);
        }

        let mut faces: Vec<Face> = queue
            .iter()
            .map(|(vs, ds)| {
                let vlist: Vec<usize> = vs.iter().collect();
                let dlist: Vec<usize> = (0..n).filter(|i| ds & (1 << i) != 0).collect();
                let v0 = &vertices[vlist[0]];
                let mut gens: Vec<Vec<i64>> = vlist[1..]
                    .iter()
                    .map(|&v| vertices[v].iter().zip(v0).map(|(a, b)| a - b).collect())
                    .collect();
                for &d in &dlist {
                    let mut e = vec![0; n];
                    e[d] = 1;
                    gens.push(e);
                }
                let facets = facet_keys
                    .iter()
                    .enumerate()
                    .filter(|(_, (fv, fd))| vs.is_subset(fv) && ds & !fd == 0)
                    .map(|(j, _)| j)
                    .collect();
                Face {
                    dim: rank(&gens),
                    compact: dlist.is_empty(),
                    vertices: vlist,
                    directions: dlist,
                    facets,
                }
            })
            .collect();
        faces.sort_by(|a, b| {
            (a.dim, &a.vertices, &a.directions).cmp(&(b.dim, &b.vertices, &b.directions))
        });
        let index: BTreeMap<(Vec<usize>, Vec<usize>), usize> = faces
            .iter()
            .enumerate()
            .map(|(i, f)| ((f.vertices.clone(), f.directions.clone()), i))
            .collect();

        let facets = raw
            .iter()
            .zip(&facet_keys)
            .map(|(f, (vs, ds))| {
                let key = (vs.iter().collect(), (0..n).filter(|i| ds & (1 << i) != 0).collect());
                FacetData {
                    conormal: f.a.clone(),
                    distance: f.dist,
                    nu: f.a.iter().sum(),
                    compact: f.a.iter().all(|&x| x > 0),
                    in_coordinate_hyperplane: f.dist == 0,
                    face: index[&key],
                }
            })
            .collect();

        Ok(NewtonPolyhedron { n, vertices, facets, faces, index })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Vertices, sorted lexicographically.
    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    pub fn facets(&self) -> &[FacetData] {
        &self.facets
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, id: usize) -> Result<&Face> {
        self.faces.get(id).ok_or(Error::UnknownFace(id))
    }

    pub fn facet(&self, id: usize) -> Result<&FacetData> {
        self.facets.get(id).ok_or(Error::UnknownFace(id))
    }

    /// Face id from its vertex indices and unbounded directions.
    pub fn find_face(&self, vertices: &[usize], directions: &[usize]) -> Option<usize> {
        self.index.get(&(vertices.to_vec(), directions.to_vec())).copied()
    }

    /// Facet index of a face of dimension `n - 1`.
    pub fn facet_of_face(&self, face: usize) -> Option<usize> {
        self.facets.iter().position(|f| f.face == face)
    }

    pub fn vertex_points(&self, face: usize) -> Vec<Vec<i64>> {
        self.faces[face].vertices.iter().map(|&v| self.vertices[v].clone()).collect()
    }

    pub fn compact_faces(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.faces.len()).filter(|&i| self.faces[i].compact)
    }

    /// Ids of the vertices viewed as faces, in vertex order.
    pub fn vertex_faces(&self) -> Vec<usize> {
        (0..self.vertices.len())
            .map(|v| self.find_face(&[v], &[]).expect("vertex is a face"))
            .collect()
    }

    /// True iff `small ⊆ big` as faces.
    pub fn is_subface(&self, small: usize, big: usize) -> bool {
        let (s, b) = (&self.faces[small], &self.faces[big]);
        s.vertices.iter().all(|v| b.vertices.contains(v))
            && s.directions.iter().all(|d| b.directions.contains(d))
    }

    pub fn is_convenient(&self) -> bool {
        (0..self.n).all(|i| {
            self.vertices
                .iter()
                .any(|v| v.iter().enumerate().all(|(j, &c)| j == i || c == 0))
        })
    }

    /// `(N(a), ν(a), F(a))` for a nonnegative rational vector `a`.
    pub fn supporting_data(&self, a: &[Rational]) -> Result<(Rational, Rational, usize)> {
        if a.len() != self.n || a.iter().any(Signed::is_negative) {
            return Err(Error::Precondition("supporting vector must be nonnegative of length n"));
        }
        let vals: Vec<Rational> = self
            .vertices
            .iter()
            .map(|v| v.iter().zip(a).map(|(&c, x)| x * Integer::from(c)).sum())
            .collect();
        let min = vals.iter().min().expect("at least one vertex").clone();
        let vs: Vec<usize> = (0..vals.len()).filter(|&i| vals[i] == min).collect();
        let ds: Vec<usize> = (0..self.n).filter(|&i| a[i].is_zero()).collect();
        let face = self.find_face(&vs, &ds).ok_or(Error::Precondition("supporting set is not a face"))?;
        Ok((min, a.iter().sum(), face))
    }

    /// Extreme rays of `τ°`: conormals of the facets containing `τ`, sorted.
    pub fn dual_cone(&self, face: usize) -> Result<Vec<Vec<i64>>> {
        let f = self.face(face)?;
        let mut rays: Vec<Vec<i64>> =
            f.facets.iter().map(|&j| self.facets[j].conormal.clone()).collect();
        rays.sort();
        Ok(rays)
    }

    /// `N(a) = min ⟨a, v⟩` over vertices, for an integer vector `a >= 0`.
    pub fn min_value(&self, a: &[i64]) -> i64 {
        self.vertices.iter().map(|v| linalg::dot(a, v)).min().expect("nonempty")
    }

    /// Pulling triangulation of a compact face. `priority[v]` ranks vertex
    /// `v` (smaller is pulled first). Simplices are lists of vertex indices.
    pub fn pulling_triangulation(&self, face: usize, priority: &[usize]) -> Result<Vec<Vec<usize>>> {
        let f = self.face(face)?;
        if !f.compact {
            return Err(Error::Precondition("face must be compact"));
        }
        let mut out = Vec::new();
        self.pull(face, priority, &mut Vec::new(), &mut out);
        Ok(out)
    }

    fn pull(&self, face: usize, priority: &[usize], prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let f = &self.faces[face];
        if f.vertices.len() == f.dim + 1 {
            let mut s = prefix.clone();
            s.extend(&f.vertices);
            out.push(s);
            return;
        }
        let apex = *f.vertices.iter().min_by_key(|&&v| priority[v]).expect("nonempty");
        for (g, gf) in self.faces.iter().enumerate() {
            if gf.compact
                && gf.dim + 1 == f.dim
                && !gf.vertices.contains(&apex)
                && gf.vertices.iter().all(|v| f.vertices.contains(v))
            {
                prefix.push(apex);
                self.pull(g, priority, prefix, out);
                prefix.pop();
            }
        }
    }

    /// Pulling triangulation with vertices taken in lexicographic order.
    pub fn triangulate_face(&self, face: usize) -> Result<Vec<Vec<usize>>> {
        let order: Vec<usize> = (0..self.vertices.len()).collect();
        self.pulling_triangulation(face, &order)
    }

    pub fn normalized_volume(&self, face: usize) -> Result<Integer> {
        let f = self.face(face)?;
        if f.dim == 0 {
            return Ok(Integer::from(1));
        }
        let mut vol = Integer::zero();
        for s in self.triangulate_face(face)? {
            let pts: Vec<Vec<i64>> = s.iter().map(|&v| self.vertices[v].clone()).collect();
            vol += simplex_volume(&pts);
        }
        Ok(vol)
    }

    pub fn lattice_distance(&self, face: usize) -> Result<Integer> {
        let f = self.face(face)?;
        if !f.compact {
            return Err(Error::Precondition("face must be compact"));
        }
        lattice_distance_of_points(&self.vertex_points(face))
    }

    /// Compact faces whose dimension is one less than the size of their
    /// minimal coordinate subspace.
    pub fn v_faces(&self) -> Vec<VFace> {
        self.compact_faces()
            .filter_map(|id| {
                let support = self.coordinate_support(id);
                (self.faces[id].dim + 1 == support.len()).then_some(VFace { face: id, support })
            })
            .collect()
    }

    /// Smallest `S` with the face inside `ℝ^S`.
    pub fn coordinate_support(&self, face: usize) -> Vec<usize> {
        let f = &self.faces[face];
        (0..self.n)
            .filter(|&i| f.directions.contains(&i) || f.vertices.iter().any(|&v| self.vertices[v][i] != 0))
            .collect()
    }

    /// Newton polyhedron of the image under the projection forgetting `axis`.
    pub fn project(&self, axis: usize) -> Result<NewtonPolyhedron> {
        if self.n < 2 || axis >= self.n {
            return Err(Error::Precondition("projection needs n >= 2 and a valid axis"));
        }
        let pts: Vec<Vec<i64>> = self
            .vertices
            .iter()
            .map(|v| v.iter().enumerate().filter(|&(i, _)| i != axis).map(|(_, &c)| c).collect())
            .collect();
        NewtonPolyhedron::from_points(self.n - 1, &pts)
    }

    /// Largest dimension of a compact face inside the given facet.
    pub fn ess_dim(&self, facet: usize) -> Result<usize> {
        let fid = self.facet(facet)?.face;
        Ok(self
            .compact_faces()
            .filter(|&g| self.is_subface(g, fid))
            .map(|g| self.faces[g].dim)
            .max()
            .unwrap_or(0))
    }

    /// Lattice simplices of dimension `n - 1` triangulating a compact facet.
    pub fn split_facet(&self, facet: usize) -> Result<Vec<Vec<usize>>> {
        let f = self.facet(facet)?;
        if !f.compact {
            return Err(Error::Precondition("facet must be compact"));
        }
        self.triangulate_face(f.face)
    }
}

/// Normalized volume of a lattice simplex given by its vertices.
pub fn simplex_volume(points: &[Vec<i64>]) -> Integer {
    let edges: Vec<Vec<i64>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(&points[0]).map(|(a, b)| a - b).collect())
        .collect();
    lattice_index(&edges)
}

/// Lattice distance from the origin of the affine span of `points`,
/// measured in the lattice `span(points ∪ 0) ∩ ℤⁿ`.
pub fn lattice_distance_of_points(points: &[Vec<i64>]) -> Result<Integer> {
    let edges: Vec<Vec<i64>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(&points[0]).map(|(a, b)| a - b).collect())
        .collect();
    if rank(points) != rank(&edges) + 1 {
        return Err(Error::OriginInAffineSpan);
    }
    Ok(lattice_index(points) / lattice_index(&edges))
}
