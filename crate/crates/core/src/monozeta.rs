//! Monodromy zeta function at the origin by Varchenko's formula, facet
//! eigenvalues, and the stratification of V-faces by essential dimension.

use alloc::vec::Vec;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exact::{sign, FactoredCyclo, Integer, RootOfUnity};
use crate::newton::{FacetData, NewtonPolyhedron};

/// `ζ_τ = (1 − t^N)^Vol` for a V-face, with `N` measured inside the
/// minimal coordinate subspace of the face.
pub fn zeta_face(p: &NewtonPolyhedron, face: usize) -> Result<FactoredCyclo> {
    let f = p.face(face)?;
    if !f.compact || p.coordinate_support(face).len() != f.dim + 1 {
        return Err(Error::NotVFace);
    }
    let n = p.lattice_distance(face)?.to_u64().ok_or(Error::Overflow)?;
    let vol = p.normalized_volume(face)?.to_i64().ok_or(Error::Overflow)?;
    Ok(FactoredCyclo::factor(n, vol))
}

/// `ζ_{f,0}(t) = ∏ ζ_τ^{(−1)^{dim τ}}` over V-faces.
pub fn varchenko_zeta(p: &NewtonPolyhedron) -> Result<FactoredCyclo> {
    let mut z = FactoredCyclo::one();
    for v in p.v_faces() {
        let d = p.faces()[v.face].dim;
        z = z.mul(&zeta_face(p, v.face)?.pow(sign(d)));
    }
    Ok(z)
}

/// `exp(−2πi ν/N)` for a facet with `N > 0`.
pub fn facet_eigenvalue(f: &FacetData) -> Result<RootOfUnity> {
    if f.distance == 0 {
        return Err(Error::ZeroLatticeDistance);
    }
    RootOfUnity::from_ratio(&Integer::from(f.nu), &Integer::from(f.distance))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratum {
    pub index: usize,
    pub v_faces: Vec<usize>,
    pub r: FactoredCyclo,
}

/// Partition of the V-faces into levels `0..max(n, 4)`: a V-face sits at
/// the largest essential dimension among the facets containing it. Level
/// `i` carries `R_i = ∏ ζ_σ^{(−1)^{i − dim σ}}`, and
/// `ζ_{f,0}^{−1} = ∏ R_i^{(−1)^{i+1}}`.
pub fn strata(p: &NewtonPolyhedron) -> Result<Vec<Stratum>> {
    let levels = p.n().max(4);
    let ess: Vec<usize> = (0..p.facets().len()).map(|j| p.ess_dim(j)).collect::<Result<_>>()?;
    let mut out: Vec<Stratum> = (0..levels)
        .map(|index| Stratum { index, v_faces: Vec::new(), r: FactoredCyclo::one() })
        .collect();
    for v in p.v_faces() {
        let face = &p.faces()[v.face];
        let level = face.facets.iter().map(|&j| ess[j]).max().unwrap_or(0);
        let e = sign(level - face.dim);
        let s = &mut out[level];
        s.v_faces.push(v.face);
        s.r = s.r.mul(&zeta_face(p, v.face)?.pow(e));
    }
    Ok(out)
}

/// `∏ R_i^{(−1)^{i+1}}`, which equals `ζ_{f,0}^{−1}`.
pub fn strata_product(strata: &[Stratum]) -> FactoredCyclo {
    strata
        .iter()
        .fold(FactoredCyclo::one(), |acc, s| acc.mul(&s.r.pow(sign(s.index + 1))))
}
