use newton_zeta::exact::Integer;
use newton_zeta::facets::{classify_b1, B1Classification};
use newton_zeta::monozeta::{strata, strata_product, varchenko_zeta};
use newton_zeta::pipeline::{check_conjecture, CheckOptions, PoleStatus};
use newton_zeta::zetatop::{candidate_poles, is_actual_pole, z_top};
use newton_zeta::{build_newton, NewtonPolyhedron, SupportSet};
use proptest::prelude::*;

fn support(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::btree_set(prop::collection::vec(prop_oneof![2 => Just(0i64), 3 => 1i64..=5], n), 1..=5)
        .prop_map(|s| s.into_iter().filter(|v| v.iter().any(|&c| c != 0)).collect::<Vec<_>>())
        .prop_filter("nonempty", |s| !s.is_empty())
}

fn polyhedron() -> impl Strategy<Value = NewtonPolyhedron> {
    (2usize..=4).prop_flat_map(support).prop_filter_map("builds", |pts| {
        let n = pts[0].len();
        build_newton(&SupportSet::new(n, pts).ok()?).ok()
    })
}

fn convenient() -> impl Strategy<Value = NewtonPolyhedron> {
    (2usize..=4)
        .prop_flat_map(|n| (prop::collection::vec(1i64..=6, n), support(n)))
        .prop_map(|(axes, mut pts)| {
            let n = axes.len();
            for (i, a) in axes.into_iter().enumerate() {
                let mut v = vec![0; n];
                v[i] = a;
                if !pts.contains(&v) {
                    pts.push(v);
                }
            }
            NewtonPolyhedron::from_points(n, &pts).expect("convenient supports build")
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn facets_are_supporting(p in polyhedron()) {
        for f in p.facets() {
            let g = f.conormal.iter().fold(0i64, |g, &a| num_gcd(g, a));
            prop_assert_eq!(g, 1);
            prop_assert_eq!(f.nu, f.conormal.iter().sum::<i64>());
            prop_assert_eq!(f.compact, f.conormal.iter().all(|&a| a > 0));
            let dot = |v: &Vec<i64>| v.iter().zip(&f.conormal).map(|(x, a)| x * a).sum::<i64>();
            for v in p.vertex_points(f.face) {
                prop_assert_eq!(dot(&v), f.distance);
            }
            for w in p.vertices() {
                prop_assert!(dot(w) >= f.distance);
            }
        }
    }

    #[test]
    fn lattice_distances_divide_along_incidences(p in polyhedron()) {
        let compact: Vec<usize> = p.compact_faces().collect();
        for &g in &compact {
            for &t in &compact {
                if g != t && p.is_subface(g, t) {
                    let (ng, nt) = (p.lattice_distance(g).unwrap(), p.lattice_distance(t).unwrap());
                    prop_assert!(ng > Integer::from(0));
                    prop_assert_eq!(&nt % &ng, Integer::from(0));
                }
            }
        }
    }

    #[test]
    fn faces_are_closed_under_intersection(p in polyhedron()) {
        for a in 0..p.facets().len() {
            for b in a + 1..p.facets().len() {
                let fa = &p.faces()[p.facets()[a].face];
                let fb = &p.faces()[p.facets()[b].face];
                let vs: Vec<usize> = fa.vertices.iter().copied().filter(|v| fb.vertices.contains(v)).collect();
                if vs.is_empty() {
                    continue;
                }
                let ds: Vec<usize> = fa.directions.iter().copied().filter(|d| fb.directions.contains(d)).collect();
                let id = p.find_face(&vs, &ds);
                prop_assert!(id.is_some());
                let face = &p.faces()[id.unwrap()];
                prop_assert_eq!(face.compact, face.directions.is_empty());
            }
        }
    }

    #[test]
    fn projection_keeps_convenience(p in convenient(), axis in 0usize..4) {
        prop_assume!(p.n() >= 3 && axis < p.n());
        prop_assert!(p.is_convenient());
        prop_assert!(p.project(axis).unwrap().is_convenient());
    }

    #[test]
    fn poles_are_candidates(p in polyhedron()) {
        let Ok(candidates) = candidate_poles(&p) else { return Ok(()) };
        let z = z_top(&p).unwrap();
        prop_assert!(z.value.vanishes_at_infinity());
        let mut den = z.value.denominator().clone();
        for c in &candidates {
            while den.root_multiplicity(&c.value) > 0 {
                den = den.div_exact(&newton_zeta::UniPoly::linear(newton_zeta::exact::rat(1), -c.value.clone())).unwrap();
            }
        }
        prop_assert_eq!(den.degree(), Some(0));
    }

    #[test]
    fn sole_compact_pyramid_poles_cancel(p in polyhedron()) {
        let Ok(candidates) = candidate_poles(&p) else { return Ok(()) };
        let z = z_top(&p).unwrap();
        for c in candidates.iter().filter(|c| !c.is_minus_one && c.facets.len() == 1) {
            if matches!(classify_b1(&p, c.facets[0]).unwrap(), B1Classification::Compact { .. }) {
                prop_assert!(!is_actual_pole(&z, &c.value).0, "{} survives in {:?}", c.value, p.vertices());
            }
        }
    }

    #[test]
    fn strata_factor_the_inverse_zeta(p in (Just(4usize)).prop_flat_map(support).prop_filter_map("builds", |pts| NewtonPolyhedron::from_points(4, &pts).ok())) {
        let st = strata(&p).unwrap();
        prop_assert_eq!(strata_product(&st), varchenko_zeta(&p).unwrap().inv());
    }

    #[test]
    fn verdicts_agree_with_the_zeta_function(p in polyhedron()) {
        let Ok(report) = check_conjecture(&p, &CheckOptions::default()) else { return Ok(()) };
        let z = z_top(&p).unwrap();
        for v in &report.verdicts {
            prop_assert_eq!(v.actual, is_actual_pole(&z, &v.s0).0);
            match &v.status {
                PoleStatus::FakeB1 | PoleStatus::FakeB2 | PoleStatus::NotAPole => prop_assert!(!v.actual),
                PoleStatus::EigenvalueAtOrigin | PoleStatus::EigenvalueAfterProjection => {
                    prop_assert!(v.certificate.as_ref().unwrap().verify(&p, &v.s0).unwrap());
                }
                PoleStatus::Inconclusive(_) => prop_assert!(v.actual),
            }
        }
    }
}

fn num_gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        num_gcd(b, a % b)
    }
}
