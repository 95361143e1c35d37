//! Verification of the monodromy conjecture for `n ≤ 4`.
//!
//! Every candidate pole of `Z_top` gets a [`PoleVerdict`]. Actual poles are
//! witnessed by a root or pole of a monodromy zeta function, either at the
//! origin or at a generic point of a coordinate subspace (realized by
//! projecting the Newton polyhedron). Candidates that cancel are labelled
//! by the shape of their contributing facets.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exact::{FactoredCyclo, Rational, RationalFunction, RootOfUnity};
use crate::facets::{
    b_wall_violations, classify_b1, corner_of, f_tau, f_tau_axes, goodness_violations, is_b2_facet,
    is_zero_convenient, simplex_is_b1, CornerData,
};
use crate::monozeta::{strata, varchenko_zeta};
use crate::newton::NewtonPolyhedron;
use crate::zetatop::{candidate_poles, is_actual_pole, z_top};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PoleStatus {
    FakeB1,
    FakeB2,
    EigenvalueAtOrigin,
    EigenvalueAfterProjection,
    NotAPole,
    Inconclusive(String),
}

impl PoleStatus {
    pub fn name(&self) -> &'static str {
        match self {
            PoleStatus::FakeB1 => "fake_B1",
            PoleStatus::FakeB2 => "fake_B2",
            PoleStatus::EigenvalueAtOrigin => "eigenvalue_at_origin",
            PoleStatus::EigenvalueAfterProjection => "eigenvalue_after_projection",
            PoleStatus::NotAPole => "not_a_pole",
            PoleStatus::Inconclusive(_) => "inconclusive",
        }
    }

    pub fn is_witnessed(&self) -> bool {
        matches!(self, PoleStatus::EigenvalueAtOrigin | PoleStatus::EigenvalueAfterProjection)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateKind {
    /// `λ` is a root or pole of `zeta`, so it is an eigenvalue in some
    /// degree.
    ZetaMultiplicity,
    /// `λ = 1`: monodromy permutes the components of the Milnor fibre, so
    /// it fixes their sum in degree 0. Used when the zeta function cannot
    /// see `λ` because its multiplicities cancel across degrees.
    DegreeZero,
}

/// `λ` is a root or pole of the monodromy zeta function of the polyhedron
/// obtained by projecting away `projection` (original axis indices,
/// ascending; empty for the origin).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub projection: Vec<usize>,
    pub zeta: FactoredCyclo,
    pub lambda: RootOfUnity,
    pub multiplicity: i64,
}

impl Certificate {
    /// Recomputes the projected zeta function and re-runs the divisor test.
    pub fn verify(&self, p: &NewtonPolyhedron, s0: &Rational) -> Result<bool> {
        if RootOfUnity::from_pole(s0)? != self.lambda {
            return Ok(false);
        }
        let q = project_all(p, &self.projection)?;
        if varchenko_zeta(&q)? != self.zeta {
            return Ok(false);
        }
        let order = self.lambda.order();
        if self.kind == CertificateKind::DegreeZero {
            return Ok(order == 1 && self.projection.is_empty());
        }
        let m: i64 = self.zeta.iter().filter(|&(d, _)| d % order == 0).map(|(_, e)| e).sum();
        Ok(m == self.multiplicity && m != 0)
    }
}

/// A non-B1 simplex of a contributing facet whose corner polynomial has
/// `λ` as a root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerEvidence {
    pub facet: usize,
    pub simplex: Vec<Vec<i64>>,
    /// `None` when every vertex lies on its own axis.
    pub corner: Option<CornerData>,
    pub polynomial: FactoredCyclo,
    pub multiplicity: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FacetShape {
    B1,
    B2,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evidence {
    OriginMultiplicity(i64),
    StratumMultiplicity { index: usize, multiplicity: i64 },
    Corner(CornerEvidence),
    Cancellation { shapes: Vec<(usize, FacetShape)>, order: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleVerdict {
    pub s0: Rational,
    pub lambda: RootOfUnity,
    pub facets: Vec<usize>,
    pub actual: bool,
    pub order: usize,
    pub status: PoleStatus,
    pub certificate: Option<Certificate>,
    pub evidence: Vec<Evidence>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisFlags {
    pub zero_convenient: bool,
    pub good: bool,
    pub goodness_violations: Vec<(usize, usize)>,
    pub b_wall_ok: bool,
    pub b_wall_violations: Vec<(usize, usize)>,
}

impl HypothesisFlags {
    pub fn all_pass(&self) -> bool {
        self.zero_convenient && self.good && self.b_wall_ok
    }

    fn failing(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.zero_convenient {
            out.push("0-convenient");
        }
        if !self.good {
            out.push("good");
        }
        if !self.b_wall_ok {
            out.push("B-wall");
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    /// Record corner-polynomial evidence for witnessed poles.
    pub corner_evidence: bool,
    /// Largest number of coordinates projected away during descent.
    pub max_projection: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { corner_evidence: true, max_projection: usize::MAX }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub n: usize,
    pub vertices: Vec<Vec<i64>>,
    pub assume_nondegenerate: bool,
    pub zero_convenient: bool,
    /// Only evaluated for `n = 4`.
    pub hypotheses: Option<HypothesisFlags>,
    pub verdicts: Vec<PoleVerdict>,
    pub z_top: RationalFunction,
    pub varchenko: FactoredCyclo,
}

impl Report {
    pub fn inconclusive(&self) -> impl Iterator<Item = &PoleVerdict> {
        self.verdicts.iter().filter(|v| matches!(v.status, PoleStatus::Inconclusive(_)))
    }

    pub fn is_conclusive(&self) -> bool {
        self.inconclusive().next().is_none()
    }
}

pub fn check_hypotheses(p: &NewtonPolyhedron) -> Result<HypothesisFlags> {
    if p.n() != 4 {
        return Err(Error::UnsupportedDimension { n: p.n(), min: 4, max: 4 });
    }
    let zero_convenient = is_zero_convenient(p);
    let goodness_violations = goodness_violations(p)?;
    let b_wall_violations = b_wall_violations(p)?;
    Ok(HypothesisFlags {
        zero_convenient,
        good: zero_convenient && goodness_violations.is_empty(),
        goodness_violations,
        b_wall_ok: b_wall_violations.is_empty(),
        b_wall_violations,
    })
}

fn project_all(p: &NewtonPolyhedron, axes: &[usize]) -> Result<NewtonPolyhedron> {
    let mut q = p.clone();
    let mut sorted = axes.to_vec();
    sorted.sort_unstable();
    for &a in sorted.iter().rev() {
        q = q.project(a)?;
    }
    Ok(q)
}

fn subsets_by_size(n: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (1..1usize << n)
        .map(|m| (0..n).filter(|i| m & (1 << i) != 0).collect::<Vec<_>>())
        .filter(|s| s.len() < n && s.len() <= max)
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Searches coordinate subspaces for a point near the origin where `λ` is
/// an eigenvalue: the polyhedron with the axes in `J` projected away stands
/// in for `f` at a generic point of the torus of `ℂ^J`. Subsets are tried
/// by size, then lexicographically.
pub fn descend(p: &NewtonPolyhedron, lambda: &RootOfUnity, max_projection: usize) -> Result<Option<Certificate>> {
    for axes in subsets_by_size(p.n(), max_projection) {
        let q = project_all(p, &axes)?;
        let zeta = varchenko_zeta(&q)?;
        let multiplicity = zeta.multiplicity(lambda);
        if multiplicity != 0 {
            return Ok(Some(Certificate { kind: CertificateKind::ZetaMultiplicity, projection: axes, zeta, lambda: lambda.clone(), multiplicity }));
        }
    }
    Ok(None)
}

fn facet_shape(p: &NewtonPolyhedron, facet: usize) -> Result<FacetShape> {
    if classify_b1(p, facet)?.is_b1() {
        Ok(FacetShape::B1)
    } else if p.n() == 4 && is_b2_facet(p, facet)? {
        Ok(FacetShape::B2)
    } else {
        Ok(FacetShape::Other)
    }
}

/// First non-B1 simplex (in the lexicographic triangulation of the
/// contributing compact facets) whose corner or axes polynomial vanishes
/// at `λ`.
pub fn corner_evidence(p: &NewtonPolyhedron, facets: &[usize], lambda: &RootOfUnity) -> Result<Option<CornerEvidence>> {
    for &j in facets {
        if !p.facets()[j].compact {
            continue;
        }
        for s in p.split_facet(j)? {
            let simplex: Vec<Vec<i64>> = s.iter().map(|&v| p.vertices()[v].clone()).collect();
            if simplex_is_b1(&simplex) {
                continue;
            }
            let (corner, polynomial) = match corner_of(&simplex) {
                Some(c) => {
                    let f = f_tau(&simplex, &c)?;
                    (Some(c), f)
                }
                None => match f_tau_axes(&simplex) {
                    Ok(f) => (None, f),
                    Err(_) => continue,
                },
            };
            let multiplicity = polynomial.multiplicity(lambda);
            if multiplicity > 0 {
                return Ok(Some(CornerEvidence { facet: j, simplex, corner, polynomial, multiplicity }));
            }
        }
    }
    Ok(None)
}

pub fn check_conjecture(p: &NewtonPolyhedron, options: &CheckOptions) -> Result<Report> {
    let n = p.n();
    if !(2..=4).contains(&n) {
        return Err(Error::UnsupportedDimension { n, min: 2, max: 4 });
    }
    let z = z_top(p)?;
    let varchenko = varchenko_zeta(p)?;
    let strata = strata(p)?;
    let hypotheses = if n == 4 { Some(check_hypotheses(p)?) } else { None };
    let mut verdicts = Vec::new();
    for cand in candidate_poles(p)? {
        let s0 = cand.value.clone();
        let lambda = RootOfUnity::from_pole(&s0)?;
        let (actual, order) = is_actual_pole(&z, &s0);
        let mut evidence = Vec::new();
        let (status, certificate) = if actual {
            let origin = varchenko.multiplicity(&lambda);
            evidence.push(Evidence::OriginMultiplicity(origin));
            for s in &strata {
                let m = s.r.multiplicity(&lambda);
                if m != 0 {
                    evidence.push(Evidence::StratumMultiplicity { index: s.index, multiplicity: m });
                }
            }
            if options.corner_evidence {
                if let Some(c) = corner_evidence(p, &cand.facets, &lambda)? {
                    evidence.push(Evidence::Corner(c));
                }
            }
            if origin != 0 {
                let cert = Certificate {
                    kind: CertificateKind::ZetaMultiplicity,
                    projection: Vec::new(),
                    zeta: varchenko.clone(),
                    lambda: lambda.clone(),
                    multiplicity: origin,
                };
                (PoleStatus::EigenvalueAtOrigin, Some(cert))
            } else if let Some(cert) = descend(p, &lambda, options.max_projection)? {
                (PoleStatus::EigenvalueAfterProjection, Some(cert))
            } else if lambda.is_one() {
                let cert = Certificate {
                    kind: CertificateKind::DegreeZero,
                    projection: Vec::new(),
                    zeta: varchenko.clone(),
                    lambda: lambda.clone(),
                    multiplicity: origin,
                };
                (PoleStatus::EigenvalueAtOrigin, Some(cert))
            } else {
                let failing = hypotheses.as_ref().map(HypothesisFlags::failing).unwrap_or_default();
                let reason = if failing.is_empty() {
                    String::from("no root or pole of the monodromy zeta function at the origin or after projection")
                } else {
                    format!("no witness found; failing hypotheses: {}", failing.join(", "))
                };
                (PoleStatus::Inconclusive(reason), None)
            }
        } else {
            let shapes: Vec<(usize, FacetShape)> =
                cand.facets.iter().map(|&j| Ok((j, facet_shape(p, j)?))).collect::<Result<_>>()?;
            let all_b1 = shapes.iter().all(|(_, s)| *s == FacetShape::B1);
            let b1_b2 = shapes.iter().all(|(_, s)| *s != FacetShape::Other);
            let status = if cand.is_minus_one || shapes.is_empty() {
                PoleStatus::NotAPole
            } else if all_b1 {
                PoleStatus::FakeB1
            } else if b1_b2 {
                PoleStatus::FakeB2
            } else {
                PoleStatus::NotAPole
            };
            evidence.push(Evidence::Cancellation { shapes, order });
            (status, None)
        };
        verdicts.push(PoleVerdict { s0, lambda, facets: cand.facets, actual, order, status, certificate, evidence });
    }
    Ok(Report {
        n,
        vertices: p.vertices().to_vec(),
        assume_nondegenerate: true,
        zero_convenient: is_zero_convenient(p),
        hypotheses,
        verdicts,
        z_top: z.value,
        varchenko,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;
    use alloc::vec;

    fn poly(n: usize, pts: &[&[i64]]) -> NewtonPolyhedron {
        let pts: Vec<Vec<i64>> = pts.iter().map(|p| p.to_vec()).collect();
        NewtonPolyhedron::from_points(n, &pts).unwrap()
    }

    fn verdict(r: &Report, s0: Rational) -> &PoleVerdict {
        r.verdicts.iter().find(|v| v.s0 == s0).unwrap()
    }

    #[test]
    fn cusp_poles_are_witnessed_at_the_origin() {
        let p = poly(2, &[&[2, 0], &[0, 3]]);
        let r = check_conjecture(&p, &CheckOptions::default()).unwrap();
        assert_eq!(r.verdicts.len(), 2);
        let v = verdict(&r, ratio(-5, 6));
        assert_eq!(v.status, PoleStatus::EigenvalueAtOrigin);
        assert_eq!(v.certificate.as_ref().unwrap().multiplicity, -1);
        assert!(v.certificate.as_ref().unwrap().verify(&p, &v.s0).unwrap());
        assert!(v.evidence.iter().any(|e| matches!(e, Evidence::Corner(c) if c.corner.is_none())));
        let v = verdict(&r, ratio(-1, 1));
        assert_eq!(v.status, PoleStatus::EigenvalueAtOrigin);
        assert_eq!(v.certificate.as_ref().unwrap().multiplicity, 1);
        assert!(r.is_conclusive());
    }

    #[test]
    fn x_plus_y_has_a_fake_b1_candidate() {
        let p = poly(2, &[&[1, 0], &[0, 1]]);
        let r = check_conjecture(&p, &CheckOptions::default()).unwrap();
        let v = verdict(&r, ratio(-2, 1));
        assert!(!v.actual);
        assert_eq!(v.status, PoleStatus::FakeB1);
        let v = verdict(&r, ratio(-1, 1));
        assert_eq!(v.status, PoleStatus::EigenvalueAtOrigin);
    }

    #[test]
    fn xy_is_witnessed_off_the_origin() {
        let p = poly(2, &[&[1, 1]]);
        let r = check_conjecture(&p, &CheckOptions::default()).unwrap();
        assert!(r.varchenko.is_one());
        let v = verdict(&r, ratio(-1, 1));
        assert!(v.actual);
        assert_eq!(v.status, PoleStatus::EigenvalueAfterProjection);
        let c = v.certificate.as_ref().unwrap();
        assert_eq!(c.projection, vec![0]);
        assert_eq!(c.zeta, FactoredCyclo::factor(1, 1));
        assert!(c.verify(&p, &v.s0).unwrap());
    }

    #[test]
    fn convenient_polyhedron_needs_no_descent() {
        let p = poly(3, &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5]]);
        let r = check_conjecture(&p, &CheckOptions::default()).unwrap();
        for v in r.verdicts.iter().filter(|v| v.actual) {
            assert_eq!(v.status, PoleStatus::EigenvalueAtOrigin);
        }
    }

    #[test]
    fn one_step_projection_witness() {
        let p = poly(4, &[&[2, 0, 0, 0], &[0, 2, 0, 0], &[0, 0, 1, 1]]);
        let r = check_conjecture(&p, &CheckOptions::default()).unwrap();
        assert!(r.is_conclusive());
        for v in r.verdicts.iter().filter(|v| v.status == PoleStatus::EigenvalueAfterProjection) {
            let c = v.certificate.as_ref().unwrap();
            assert_eq!(c.projection.len(), 1);
            // Projecting away v3 leaves x1² + x2² + x4, smooth in x4.
            let q = project_all(&p, &c.projection).unwrap();
            assert_eq!(varchenko_zeta(&q).unwrap(), c.zeta);
            assert!(c.verify(&p, &v.s0).unwrap());
        }
    }

    #[test]
    fn hypotheses_on_convenient_simplex() {
        let p = poly(4, &[&[2, 0, 0, 0], &[0, 3, 0, 0], &[0, 0, 5, 0], &[0, 0, 0, 7]]);
        let h = check_hypotheses(&p).unwrap();
        assert!(h.all_pass());
        assert!(h.goodness_violations.is_empty() && h.b_wall_violations.is_empty());
        assert!(check_hypotheses(&poly(3, &[&[1, 0, 0]])).is_err());
    }

    #[test]
    fn b_wall_between_same_pole_b1_facets() {
        // (2,1,0,1)·v = 2 and (2,3,1,0)·v = 3 both give s₀ = −2, both are
        // non-compact pyramids for v1, and they meet in the triangle
        // (0,0,3,2), (0,1,0,1), (1,0,1,0).
        let p = poly(4, &[&[0, 0, 3, 2], &[0, 1, 0, 1], &[1, 0, 1, 0]]);
        let find = |c: &[i64]| p.facets().iter().position(|f| f.conormal == c).unwrap();
        let (a, b) = (find(&[2, 1, 0, 1]), find(&[2, 3, 1, 0]));
        assert!(classify_b1(&p, a).unwrap().is_b1());
        assert!(classify_b1(&p, b).unwrap().is_b1());
        let h = check_hypotheses(&p).unwrap();
        assert!(h.good);
        assert!(!h.b_wall_ok);
        assert_eq!(h.b_wall_violations, vec![(a.min(b), a.max(b))]);
    }

    #[test]
    fn dimension_guard() {
        let p = poly(5, &[&[1, 0, 0, 0, 0]]);
        assert!(matches!(check_conjecture(&p, &CheckOptions::default()), Err(Error::UnsupportedDimension { .. })));
    }
}
