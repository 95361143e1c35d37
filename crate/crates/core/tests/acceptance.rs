//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! with status 1 if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use newton_zeta::exact::Integer;
use newton_zeta::facets::{b1_variables, corner_of, f_tau, is_b2_facet, simplex_is_b1};
use newton_zeta::monozeta::varchenko_zeta;
use newton_zeta::pipeline::{check_conjecture, check_hypotheses, CheckOptions, PoleStatus};
use newton_zeta::supermod::{
    corner_data, g_as_multiplicity, g_m_sum, g_m_window, g_sum, phi_product, product_derivative, psi_product,
    CornerSimplexData, SetFunction,
};
use newton_zeta::zetatop::{candidate_poles, is_actual_pole, j_tau, j_tau_ordered, z_top};
use newton_zeta::{build_newton, FactoredCyclo, NewtonPolyhedron, RationalFunction, RootOfUnity, SupportSet, UniPoly};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random support in dimension `n`; coordinates are zero with
/// probability `zero`.
fn random_support(r: &mut ChaCha8Rng, n: usize, zero: f64, max: i64) -> Vec<Vec<i64>> {
    let m = r.gen_range(2..=5);
    let mut pts: Vec<Vec<i64>> = Vec::new();
    while pts.len() < m {
        let v: Vec<i64> = (0..n).map(|_| if r.gen_bool(zero) { 0 } else { r.gen_range(1..=max) }).collect();
        if v.iter().any(|&c| c != 0) && !pts.contains(&v) {
            pts.push(v);
        }
    }
    pts
}

/// Supports in dimension 4 on one hyperplane `⟨a, v⟩ = N` whose first
/// two coordinates are (1,0), (0,1) or (0,0), one or two points each.
fn b2_shaped_support(r: &mut ChaCha8Rng) -> Vec<Vec<i64>> {
    let a: Vec<i64> = (0..4).map(|_| r.gen_range(1..=4)).collect();
    let big_n = r.gen_range(6..=16);
    let mut pts: Vec<Vec<i64>> = Vec::new();
    for head in [[1, 0], [0, 1], [0, 0]] {
        let rest = big_n - a[0] * head[0] - a[1] * head[1];
        let tails: Vec<[i64; 2]> = (0..=rest / a[2])
            .filter(|x| (rest - a[2] * x) % a[3] == 0)
            .map(|x| [x, (rest - a[2] * x) / a[3]])
            .collect();
        for _ in 0..r.gen_range(1..=2) {
            if let Some(t) = tails.choose(r) {
                let v = vec![head[0], head[1], t[0], t[1]];
                if v.iter().any(|&c| c != 0) && !pts.contains(&v) {
                    pts.push(v);
                }
            }
        }
    }
    pts
}

fn polyhedron(n: usize, pts: Vec<Vec<i64>>) -> Option<NewtonPolyhedron> {
    build_newton(&SupportSet::new(n, pts).ok()?).ok()
}

fn random_polyhedron(r: &mut ChaCha8Rng) -> NewtonPolyhedron {
    loop {
        let n = r.gen_range(2..=4);
        let pts = random_support(r, n, 0.4, 6);
        if let Some(p) = polyhedron(n, pts) {
            return p;
        }
    }
}

fn poly(c: &[i64]) -> RationalFunction {
    RationalFunction::from_poly(UniPoly::from_i64s(c))
}

fn frac(num: &[i64], den: &[i64]) -> RationalFunction {
    RationalFunction::new(UniPoly::from_i64s(num), UniPoly::from_i64s(den)).expect("nonzero denominator")
}

fn cusp() -> Check {
    let p = polyhedron(2, vec![vec![2, 0], vec![0, 3]]).ok_or("cusp does not build")?;
    // Vertex (2,0): dual cone on e2 and (3,2), det 3, forms 1 and 6s+5.
    // Vertex (0,3): dual cone on e1 and (3,2), det 2. The edge has
    // lattice length 1 and enters with the factor -s/(s+1).
    let vertex_terms = &frac(&[3], &[5, 6]) + &frac(&[2], &[5, 6]);
    let edge_term = &(&frac(&[0, 1], &[1, 1]) * &frac(&[1], &[5, 6])) * &poly(&[-1]);
    let oracle = &vertex_terms + &edge_term;
    let closed = frac(&[5, 4], &[5, 11, 6]);
    ensure(oracle == closed, || format!("hand oracle {oracle} differs from (4s+5)/((s+1)(6s+5))"))?;
    let z = z_top(&p).map_err(|e| e.to_string())?;
    ensure(z.value == oracle, || format!("z_top = {}", z.value))?;
    // Vertices on the axes give (1 - t^2) and (1 - t^3); the edge with
    // N = 6 and unit length divides by (1 - t^6).
    let expected = FactoredCyclo::from_pairs([(2, 1), (3, 1), (6, -1)]);
    let zeta = varchenko_zeta(&p).map_err(|e| e.to_string())?;
    ensure(zeta == expected, || format!("varchenko_zeta = {zeta}"))?;
    Ok(format!("z_top = {}, zeta = {zeta}", z.value))
}

#[derive(Default)]
struct FakeCounts {
    supports: usize,
    key2: usize,
    key21: usize,
    adj: usize,
}

/// Asserts every fake-pole criterion that applies to `p`.
fn examine(p: &NewtonPolyhedron, counts: &mut FakeCounts) -> Result<(), String> {
    let Ok(poles) = candidate_poles(p) else { return Ok(()) };
    counts.supports += 1;
    let z = z_top(p).map_err(|e| e.to_string())?;
    for c in poles.iter().filter(|c| !c.is_minus_one && !c.facets.is_empty()) {
        let b1: Vec<Vec<usize>> =
            c.facets.iter().map(|&j| b1_variables(p, j)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
        let all_b1 = b1.iter().all(|v| !v.is_empty());
        let kind = if c.facets.len() == 1 && all_b1 {
            counts.key2 += 1;
            "B1 pyramid"
        } else if c.facets.len() == 1 && p.n() == 4 && is_b2_facet(p, c.facets[0]).map_err(|e| e.to_string())? {
            counts.key21 += 1;
            "B2 facet"
        } else if c.facets.len() > 1 && all_b1 && common_variable(&b1) {
            counts.adj += 1;
            "adjacent B1 pyramids"
        } else {
            continue;
        };
        let (actual, order) = is_actual_pole(&z, &c.value);
        ensure(!actual, || format!("{kind} pole {} of {:?} has order {order}", c.value, p.vertices()))?;
    }
    Ok(())
}

fn fake_poles() -> Check {
    let mut r = rng(2);
    let mut counts = FakeCounts::default();
    while counts.supports < 300 {
        let n = r.gen_range(2..=4);
        if let Some(p) = polyhedron(n, random_support(&mut r, n, 0.4, 6)) {
            examine(&p, &mut counts)?;
        }
    }
    for _ in 0..20_000 {
        if counts.key21 >= 20 && counts.adj >= 20 {
            break;
        }
        let (n, pts) = if counts.key21 < 20 {
            (4, b2_shaped_support(&mut r))
        } else {
            let n = r.gen_range(3..=4);
            (n, random_support(&mut r, n, 0.5, 4))
        };
        if let Some(p) = polyhedron(n, pts) {
            examine(&p, &mut counts)?;
        }
    }
    let FakeCounts { supports, key2, key21, adj } = counts;
    ensure(key2 >= 20 && key21 >= 20 && adj >= 20, || format!("too few cases: {key2}/{key21}/{adj}"))?;
    Ok(format!("{supports} supports; fake by single B1 {key2}, B2 {key21}, adjacent B1 {adj}"))
}

/// The facets are pyramids for one common variable, so adjacent ones
/// share it in particular.
fn common_variable(vars: &[Vec<usize>]) -> bool {
    vars.first().is_some_and(|first| first.iter().any(|v| vars.iter().all(|vs| vs.contains(v))))
}

fn random_corners(count: usize) -> Vec<CornerSimplexData> {
    let mut r = rng(3);
    let mut out = Vec::new();
    while out.len() < count {
        let n = r.gen_range(2..=5);
        let k = r.gen_range(1..=6);
        let edges: Vec<(i64, i64)> = (0..n - 1).map(|_| (r.gen_range(1..=12), r.gen_range(-k.min(12)..=12))).collect();
        if let Ok(d) = corner_data(n, k, &edges) {
            out.push(d);
        }
    }
    out
}

fn corner_polynomials(corners: &[CornerSimplexData]) -> Check {
    let mut non_b1 = 0;
    for d in corners {
        let f = d.f_tau();
        ensure(f.is_polynomial(), || format!("F_tau = {f} is not a polynomial for {:?}", d.vertices()))?;
        let vs = d.vertices();
        if let Some(corner) = corner_of(&vs) {
            if corner.r == d.n - 1 {
                let g = f_tau(&vs, &corner).map_err(|e| e.to_string())?;
                ensure(g == f, || format!("geometric F_tau {g} differs from the table {f} for {vs:?}"))?;
            }
        }
        if d.edges.iter().all(|&(a, _)| a >= 2) && !simplex_is_b1(&vs) {
            non_b1 += 1;
            let m = f.multiplicity(&d.lambda());
            ensure(m >= 1, || format!("multiplicity {m} at {} for {vs:?}", d.lambda()))?;
        }
    }
    Ok(format!("{} simplices, {non_b1} non-B1 with a root at lambda", corners.len()))
}

fn gcd_oracles(corners: &[CornerSimplexData]) -> Check {
    let mut divisors = 0;
    for d in corners {
        let f = d.f_tau();
        let g = g_sum(d);
        ensure(g == Integer::from(g_as_multiplicity(d)), || format!("G = {g} for {:?}", d.vertices()))?;
        let full = d.full();
        let psi = psi_product(d).map_err(|e| e.to_string())?;
        ensure(psi.derivative().get(full) == &g, || format!("psi product misses G for {:?}", d.vertices()))?;
        let w = g_m_window(d);
        for m in -w..=w {
            let gm = g_m_sum(d, m);
            let root = RootOfUnity::from_ratio(&m.into(), &d.distance.into()).map_err(|e| e.to_string())?;
            ensure(gm == Integer::from(f.multiplicity(&root)), || {
                format!("G_{m} = {gm} but F_tau has multiplicity {} at {root}", f.multiplicity(&root))
            })?;
            let phi = phi_product(d, m).map_err(|e| e.to_string())?;
            ensure(phi.derivative().get(full) == &gm, || format!("phi product misses G_{m} for {:?}", d.vertices()))?;
            divisors += 1;
        }
    }
    Ok(format!("{} simplices, {divisors} values of m", corners.len()))
}

fn subsets_of(mask: usize) -> impl Iterator<Item = usize> {
    (0..=mask).filter(move |s| s & !mask == 0)
}

/// Checks the product law for `φ = ↓a` and `ψ = ↓b`.
fn check_product(size: usize, a: &[i64], b: &[i64]) -> Result<(), String> {
    let phi = SetFunction::from_i64s(size, a).map_err(|e| e.to_string())?.antiderivative();
    let psi = SetFunction::from_i64s(size, b).map_err(|e| e.to_string())?.antiderivative();
    let prod = phi.pointwise_mul(&psi).map_err(|e| e.to_string())?;
    let d = prod.derivative();
    for rr in 0..1usize << size {
        let mut direct = Integer::from(0);
        for i in subsets_of(rr) {
            for j in subsets_of(rr) {
                if i | j == rr {
                    direct += Integer::from(a[i] * b[j]);
                }
            }
        }
        ensure(d.get(rr) == &direct, || format!("(phi psi) derivative at {rr:#b} for {a:?} {b:?}"))?;
        let pd = product_derivative(&phi, &psi, rr).map_err(|e| e.to_string())?;
        ensure(pd == direct, || format!("product_derivative at {rr:#b} for {a:?} {b:?}"))?;
    }
    if a.iter().all(|&x| x >= 0) && b.iter().all(|&x| x >= 0) {
        ensure(prod.is_fully_supermodular(), || format!("product of {a:?} {b:?} not fully supermodular"))?;
        let full = (1usize << size) - 1;
        let cover = (0..=full).any(|i| (0..=full).any(|j| i | j == full && a[i] > 0 && b[j] > 0));
        ensure(prod.is_strictly_fully_supermodular() == cover, || format!("strictness for {a:?} {b:?}"))?;
    }
    Ok(())
}

fn round_trip(size: usize, v: &[i64]) -> Result<(), String> {
    let f = SetFunction::from_i64s(size, v).map_err(|e| e.to_string())?;
    ensure(f.derivative().antiderivative() == f && f.antiderivative().derivative() == f, || {
        format!("round trip fails on {v:?}")
    })
}

fn transforms() -> Check {
    let mut cases = 0usize;
    // Every table with entries in {-1, 0, 1} for |S| <= 3, and every
    // indicator table for |S| = 4.
    for size in 0..=3usize {
        let len = 1usize << size;
        for code in 0..3usize.pow(len as u32) {
            let v: Vec<i64> = (0..len).map(|i| (code / 3usize.pow(i as u32) % 3) as i64 - 1).collect();
            round_trip(size, &v)?;
            cases += 1;
        }
    }
    for t in 0..16 {
        let v: Vec<i64> = (0..16).map(|i| i64::from(i == t)).collect();
        round_trip(4, &v)?;
        cases += 1;
    }
    // Products: all pairs of 0/1 derivative tables for |S| <= 2, all
    // pairs of indicators and of complements of indicators for |S| <= 4.
    for size in 0..=2usize {
        let len = 1usize << size;
        for x in 0..1usize << len {
            for y in 0..1usize << len {
                let a: Vec<i64> = (0..len).map(|i| (x >> i & 1) as i64).collect();
                let b: Vec<i64> = (0..len).map(|i| (y >> i & 1) as i64).collect();
                check_product(size, &a, &b)?;
                cases += 1;
            }
        }
    }
    for size in 3..=4usize {
        let len = 1usize << size;
        let mut tables: Vec<Vec<i64>> = Vec::new();
        for t in 0..len {
            tables.push((0..len).map(|i| i64::from(i == t)).collect());
            tables.push((0..len).map(|i| i64::from(i != t)).collect());
        }
        for a in &tables {
            for b in &tables {
                check_product(size, a, b)?;
                cases += 1;
            }
        }
    }
    let mut r = rng(5);
    for _ in 0..1000 {
        let size = r.gen_range(0..=8usize);
        let len = 1usize << size;
        let v: Vec<i64> = (0..len).map(|_| r.gen_range(-20..=20)).collect();
        round_trip(size, &v)?;
        let nonneg = r.gen_bool(0.7);
        let lo = if nonneg { 0 } else { -3 };
        let a: Vec<i64> = (0..len).map(|_| if r.gen_bool(0.5) { 0 } else { r.gen_range(lo..=3) }).collect();
        let b: Vec<i64> = (0..len).map(|_| if r.gen_bool(0.5) { 0 } else { r.gen_range(lo..=3) }).collect();
        if size <= 5 {
            check_product(size, &a, &b)?;
        } else {
            check_product_fast(size, &a, &b)?;
        }
        cases += 1;
    }
    Ok(format!("{cases} cases"))
}

/// The product law for large ground sets, without the quartic direct sum.
fn check_product_fast(size: usize, a: &[i64], b: &[i64]) -> Result<(), String> {
    let phi = SetFunction::from_i64s(size, a).map_err(|e| e.to_string())?.antiderivative();
    let psi = SetFunction::from_i64s(size, b).map_err(|e| e.to_string())?.antiderivative();
    let d = phi.pointwise_mul(&psi).map_err(|e| e.to_string())?.derivative();
    let full = (1usize << size) - 1;
    for rr in [0, full / 3, full / 2, full] {
        let pd = product_derivative(&phi, &psi, rr).map_err(|e| e.to_string())?;
        ensure(d.get(rr) == &pd, || format!("product_derivative at {rr:#b} for size {size}"))?;
    }
    if a.iter().all(|&x| x >= 0) && b.iter().all(|&x| x >= 0) {
        ensure(d.values().iter().all(|x| x >= &Integer::from(0)), || "product not fully supermodular".to_string())?;
    }
    Ok(())
}

fn lattice_distances() -> Check {
    let mut r = rng(6);
    let mut pairs = 0;
    for _ in 0..100 {
        let p = random_polyhedron(&mut r);
        let compact: Vec<usize> = p.compact_faces().collect();
        for &g in &compact {
            for &t in &compact {
                if g == t || !p.is_subface(g, t) {
                    continue;
                }
                let (ng, nt) = (p.lattice_distance(g).map_err(|e| e.to_string())?, p.lattice_distance(t).map_err(|e| e.to_string())?);
                ensure(!ng.is_zero_value() && (&nt % &ng).is_zero_value(), || {
                    format!("N = {ng} does not divide N = {nt} in {:?}", p.vertices())
                })?;
                pairs += 1;
            }
        }
    }
    Ok(format!("100 polyhedra, {pairs} incident compact pairs"))
}

trait IsZero {
    fn is_zero_value(&self) -> bool;
}

impl IsZero for Integer {
    fn is_zero_value(&self) -> bool {
        *self == Integer::from(0)
    }
}

fn triangulation_independence() -> Check {
    let mut r = rng(7);
    let (mut cones, mut non_simplicial) = (0, 0);
    while cones < 100 {
        let p = random_polyhedron(&mut r);
        let Some(face) = (0..p.faces().len())
            .filter(|&f| p.faces()[f].compact)
            .max_by_key(|&f| p.dual_cone(f).map(|c| c.len()).unwrap_or(0))
        else {
            continue;
        };
        let rays = p.dual_cone(face).map_err(|e| e.to_string())?;
        let mut order: Vec<usize> = (0..rays.len()).collect();
        let identity = order.clone();
        order.shuffle(&mut r);
        let a = j_tau_ordered(face, &p, &identity).map_err(|e| e.to_string())?;
        let b = j_tau_ordered(face, &p, &order).map_err(|e| e.to_string())?;
        let c = j_tau(face, &p).map_err(|e| e.to_string())?;
        ensure(a == b && b == c, || format!("J differs on face {face} of {:?}: {a} vs {b}", p.vertices()))?;
        cones += 1;
        if rays.len() > p.n() - p.faces()[face].dim {
            non_simplicial += 1;
        }
    }
    Ok(format!("{cones} dual cones, {non_simplicial} non-simplicial"))
}

/// Supports in four variables meeting every hypothesis of the check.
const CURATED: &[&[[i64; 4]]] = &[
    &[[2, 0, 0, 0], [0, 3, 0, 0], [0, 0, 5, 0], [0, 0, 0, 7]],
    &[[2, 0, 0, 0], [0, 2, 0, 0], [0, 0, 2, 0], [0, 0, 0, 2]],
    &[[3, 0, 0, 0], [0, 3, 0, 0], [0, 0, 3, 0], [0, 0, 0, 4]],
    &[[4, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 5]],
    &[[0, 0, 0, 5], [0, 0, 1, 0], [0, 1, 0, 0], [4, 0, 0, 0]],
    &[[0, 0, 5, 3], [0, 2, 0, 5], [2, 3, 5, 0]],
    &[[0, 3, 5, 1], [3, 0, 0, 5], [3, 2, 0, 0]],
    &[[0, 0, 3, 3], [0, 4, 0, 1], [1, 1, 0, 2], [3, 0, 0, 2], [4, 2, 0, 0]],
    &[[0, 0, 1, 4], [2, 4, 0, 2], [2, 4, 4, 0]],
    &[[1, 2, 0, 4], [2, 1, 0, 0]],
    &[[0, 1, 1, 0], [2, 0, 5, 0], [5, 1, 0, 0]],
    &[[0, 2, 0, 2], [1, 4, 2, 0], [4, 0, 4, 4], [5, 0, 5, 1], [5, 5, 0, 0]],
    &[[3, 2, 3, 1], [5, 0, 2, 2]],
    &[[0, 2, 0, 5], [1, 0, 0, 1], [2, 0, 1, 0], [2, 4, 0, 0]],
    &[[0, 0, 1, 1], [0, 3, 3, 0], [1, 0, 2, 0], [2, 0, 1, 0], [3, 0, 0, 4]],
    &[[0, 0, 5, 3], [2, 0, 3, 3], [3, 3, 1, 0], [4, 0, 4, 2], [4, 5, 0, 0]],
    &[[0, 0, 5, 1], [1, 0, 0, 4], [2, 0, 3, 0]],
    &[[0, 0, 3, 4], [1, 0, 2, 5], [1, 4, 1, 0], [4, 0, 2, 0]],
    &[[1, 5, 5, 1], [2, 2, 3, 1], [3, 0, 0, 4], [3, 0, 3, 3], [4, 2, 5, 0]],
    &[[0, 0, 4, 2], [1, 0, 5, 0], [2, 0, 0, 3], [5, 3, 3, 0]],
    &[[0, 0, 1, 2], [0, 1, 4, 0], [0, 3, 1, 0], [4, 4, 0, 0]],
    &[[0, 5, 4, 3], [4, 0, 1, 0], [5, 3, 0, 0]],
    &[[0, 0, 2, 2], [0, 5, 0, 5], [2, 0, 0, 4], [4, 0, 2, 0]],
    &[[0, 4, 3, 3], [0, 5, 3, 0], [3, 4, 0, 0], [4, 3, 0, 0]],
];

fn pipeline() -> Check {
    let (mut poles, mut witnessed) = (0, 0);
    for pts in CURATED {
        let support: Vec<Vec<i64>> = pts.iter().map(|v| v.to_vec()).collect();
        let p = polyhedron(4, support.clone()).ok_or_else(|| format!("{support:?} does not build"))?;
        let h = check_hypotheses(&p).map_err(|e| e.to_string())?;
        ensure(h.all_pass(), || format!("{support:?} fails the hypotheses: {h:?}"))?;
        let report = check_conjecture(&p, &CheckOptions::default()).map_err(|e| e.to_string())?;
        for v in &report.verdicts {
            poles += 1;
            ensure(!matches!(v.status, PoleStatus::Inconclusive(_)), || {
                format!("pole {} of {support:?} is inconclusive", v.s0)
            })?;
            if v.actual {
                let cert = v.certificate.as_ref().ok_or_else(|| format!("pole {} of {support:?} lacks a certificate", v.s0))?;
                ensure(cert.verify(&p, &v.s0).map_err(|e| e.to_string())?, || {
                    format!("certificate for {} of {support:?} does not verify", v.s0)
                })?;
                witnessed += 1;
            }
        }
    }
    ensure(CURATED.len() >= 20, || "fewer than 20 curated supports".to_string())?;
    Ok(format!("{} supports, {poles} candidate poles, {witnessed} actual poles certified", CURATED.len()))
}

/// Share of random supports meeting the hypotheses that the check
/// settles completely. Reported, not graded.
fn random_conclusive_rate() -> String {
    let mut r = rng(8);
    let (mut eligible, mut conclusive) = (0, 0);
    let mut dumped = Vec::new();
    for _ in 0..300 {
        let Some(p) = polyhedron(4, random_support(&mut r, 4, 0.5, 5)) else { continue };
        if !check_hypotheses(&p).is_ok_and(|h| h.all_pass()) {
            continue;
        }
        eligible += 1;
        if check_conjecture(&p, &CheckOptions::default()).is_ok_and(|rep| rep.is_conclusive()) {
            conclusive += 1;
        } else {
            dumped.push(format!("{:?}", p.vertices()));
        }
    }
    let mut out = format!("{conclusive}/{eligible} random eligible supports settled");
    for d in dumped {
        out.push_str(&format!("\ninfo: inconclusive {d}"));
    }
    out
}

fn main() -> ExitCode {
    let corners = random_corners(600);
    let criteria: Vec<(u32, &str, Duration, Box<dyn FnOnce() -> Check + '_>)> = vec![
        (1, "cusp golden values", Duration::from_secs(1), Box::new(cusp)),
        (2, "fake-pole theorems", Duration::from_secs(60), Box::new(fake_poles)),
        (3, "corner polynomials", Duration::from_secs(30), Box::new(|| corner_polynomials(&corners))),
        (4, "gcd oracles", Duration::from_secs(60), Box::new(|| gcd_oracles(&corners))),
        (5, "transform laws", Duration::from_secs(5), Box::new(transforms)),
        (6, "lattice distances divide", Duration::from_secs(60), Box::new(lattice_distances)),
        (7, "triangulation independence", Duration::from_secs(60), Box::new(triangulation_independence)),
        (8, "pipeline end to end", Duration::from_secs(120), Box::new(pipeline)),
    ];
    let mut failed = 0;
    for (id, name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if took <= budget => (true, d),
            Ok(d) => (false, format!("{d}; over the {budget:?} budget")),
            Err(e) => (false, e),
        };
        if !ok {
            failed += 1;
        }
        println!("{} {id} {name} ({:.2?}): {detail}", if ok { "PASS" } else { "FAIL" }, took);
    }
    println!("info: {}", random_conclusive_rate());
    if failed == 0 {
        println!("all 8 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
