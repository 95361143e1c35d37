//! The local topological zeta function `Z_top,0(s)` of a non-degenerate
//! polynomial, computed from its Newton polyhedron, together with candidate
//! poles and the actual-pole test.
//!
//! The formula sums `J_γ` over vertices and `s/(s+1) · (−1)^{dim τ} Vol(τ) J_τ`
//! over compact faces of positive dimension. `J_τ` is evaluated on a
//! triangulation of the dual cone, each simplicial piece contributing
//! `mult(Δ) / ∏ (N(a)s + ν(a))` over its rays.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{rat, Integer, Rational, RationalFunction, UniPoly};
use crate::newton::{triangulate_cone, triangulate_cone_ordered, NewtonPolyhedron, SimplicialCone};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TermKind {
    Vertex,
    CompactFace,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LedgerEntry {
    pub face: usize,
    pub kind: TermKind,
    pub cone: Vec<Vec<i64>>,
    pub multiplicity: Integer,
    /// The full contribution of this piece to `Z`, prefactors included.
    pub contribution: RationalFunction,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZTop {
    pub value: RationalFunction,
    pub vertex_sum: RationalFunction,
    pub face_sum: RationalFunction,
    pub ledger: Vec<LedgerEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidatePole {
    pub value: Rational,
    /// Facets with `−ν/N` equal to `value`; facets in coordinate
    /// hyperplanes never appear.
    pub facets: Vec<usize>,
    pub is_minus_one: bool,
}

/// The linear form `N(a)s + ν(a)` of a ray.
fn ray_form(p: &NewtonPolyhedron, a: &[i64]) -> (i64, i64) {
    (p.min_value(a), a.iter().sum())
}

pub fn j_delta(cone: &SimplicialCone, p: &NewtonPolyhedron) -> RationalFunction {
    let mut den = UniPoly::one();
    for a in cone.rays() {
        let (n, nu) = ray_form(p, a);
        den = &den * &UniPoly::linear(rat(n), rat(nu));
    }
    RationalFunction::new(UniPoly::constant(Rational::from_integer(cone.multiplicity().clone())), den)
        .expect("ν > 0 keeps every factor nonzero")
}

pub fn j_tau(face: usize, p: &NewtonPolyhedron) -> Result<RationalFunction> {
    let cones = triangulate_cone(&p.dual_cone(face)?)?;
    Ok(cones.iter().fold(RationalFunction::zero(), |acc, c| &acc + &j_delta(c, p)))
}

/// `J_τ` on the pulling triangulation with rays taken in the given order
/// (indices into the sorted dual-cone rays).
pub fn j_tau_ordered(face: usize, p: &NewtonPolyhedron, order: &[usize]) -> Result<RationalFunction> {
    let cones = triangulate_cone_ordered(&p.dual_cone(face)?, order)?;
    Ok(cones.iter().fold(RationalFunction::zero(), |acc, c| &acc + &j_delta(c, p)))
}

/// Sums terms `c · s^k / ∏ (s − r)^m` over a common denominator, so only
/// one reduction happens at the end.
#[derive(Default)]
struct Accumulator {
    terms: Vec<(Rational, usize, BTreeMap<Rational, u32>)>,
}

impl Accumulator {
    fn push(&mut self, coeff: Rational, s_power: usize, forms: &[(i64, i64)], extra_root: Option<Rational>) {
        let mut c = coeff;
        let mut roots: BTreeMap<Rational, u32> = BTreeMap::new();
        for &(n, nu) in forms {
            if n == 0 {
                c /= rat(nu);
            } else {
                c /= rat(n);
                *roots.entry(Rational::new((-nu).into(), n.into())).or_default() += 1;
            }
        }
        if let Some(r) = extra_root {
            *roots.entry(r).or_default() += 1;
        }
        self.terms.push((c, s_power, roots));
    }

    fn total(&self) -> RationalFunction {
        let mut lcm: BTreeMap<Rational, u32> = BTreeMap::new();
        for (_, _, roots) in &self.terms {
            for (r, &m) in roots {
                let e = lcm.entry(r.clone()).or_default();
                *e = (*e).max(m);
            }
        }
        let factor = |r: &Rational| UniPoly::linear(Rational::one(), -r.clone());
        let mut num = UniPoly::zero();
        for (c, k, roots) in &self.terms {
            let mut t = UniPoly::monomial(c.clone(), *k);
            for (r, &m) in &lcm {
                let have = roots.get(r).copied().unwrap_or(0);
                if m > have {
                    t = &t * &factor(r).pow(m - have);
                }
            }
            num = &num + &t;
        }
        let den = lcm.iter().fold(UniPoly::one(), |d, (r, &m)| &d * &factor(r).pow(m));
        RationalFunction::new(num, den).expect("monic denominator")
    }
}

pub fn z_top(p: &NewtonPolyhedron) -> Result<ZTop> {
    let mut ledger = Vec::new();
    let mut vert = Accumulator::default();
    let mut comp = Accumulator::default();
    let s_over = RationalFunction::new(UniPoly::x(), UniPoly::from_i64s(&[1, 1]))?;
    for (id, face) in p.faces().iter().enumerate() {
        if !face.compact {
            continue;
        }
        let (kind, scale) = if face.dim == 0 {
            (TermKind::Vertex, Rational::one())
        } else {
            let sign = if face.dim % 2 == 0 { 1 } else { -1 };
            let vol = p.normalized_volume(id)?;
            (TermKind::CompactFace, Rational::from_integer(vol * sign))
        };
        for cone in triangulate_cone(&p.dual_cone(id)?)? {
            let forms: Vec<(i64, i64)> = cone.rays().iter().map(|a| ray_form(p, a)).collect();
            let coeff = &scale * Rational::from_integer(cone.multiplicity().clone());
            let jd = j_delta(&cone, p);
            let contribution = match kind {
                TermKind::Vertex => {
                    vert.push(coeff.clone(), 0, &forms, None);
                    jd
                }
                TermKind::CompactFace => {
                    comp.push(coeff.clone(), 1, &forms, Some(-Rational::one()));
                    &(&s_over * &jd) * &RationalFunction::constant(scale.clone())
                }
            };
            ledger.push(LedgerEntry {
                face: id,
                kind,
                cone: cone.rays().to_vec(),
                multiplicity: cone.multiplicity().clone(),
                contribution,
            });
        }
    }
    let vertex_sum = vert.total();
    let face_sum = comp.total();
    Ok(ZTop { value: &vertex_sum + &face_sum, vertex_sum, face_sum, ledger })
}

pub fn candidate_poles(p: &NewtonPolyhedron) -> Result<Vec<CandidatePole>> {
    let mut by_value: BTreeMap<Rational, Vec<usize>> = BTreeMap::new();
    for (i, f) in p.facets().iter().enumerate() {
        if f.in_coordinate_hyperplane {
            continue;
        }
        if f.distance == 0 {
            return Err(Error::ZeroLatticeDistance);
        }
        by_value.entry(Rational::new((-f.nu).into(), f.distance.into())).or_default().push(i);
    }
    by_value.entry(-Rational::one()).or_default();
    Ok(by_value
        .into_iter()
        .rev()
        .map(|(value, facets)| CandidatePole { is_minus_one: value == -Rational::one(), value, facets })
        .collect())
}

/// Order of `s0` as a pole of the reduced zeta function.
pub fn is_actual_pole(z: &ZTop, s0: &Rational) -> (bool, usize) {
    let k = z.value.pole_order(s0);
    (k > 0, k)
}

/// `(β, λ, μ)` for a compact facet `τ` and another facet `τ′`: `β` is the
/// gcd of the 2×2 minors of `(a(τ), a(τ′))`, `λ = ν(τ′) − ν(τ)N(τ′)/N(τ)`
/// and `μ = λ/β`.
pub fn loeser_quantities(p: &NewtonPolyhedron, tau: usize, other: usize) -> Result<(Integer, Rational, Rational)> {
    let t = p.facet(tau)?;
    let u = p.facet(other)?;
    if t.distance == 0 {
        return Err(Error::ZeroLatticeDistance);
    }
    let (a, b) = (&t.conormal, &u.conormal);
    let mut beta = 0i64;
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            beta = num_integer::gcd(beta, a[i] * b[j] - a[j] * b[i]);
        }
    }
    if beta == 0 {
        return Err(Error::ParallelConormals);
    }
    let lambda = rat(u.nu) - Rational::new(t.nu.into(), t.distance.into()) * rat(u.distance);
    let mu = &lambda / rat(beta);
    Ok((Integer::from(beta), lambda, mu))
}
