//! Cross-checks against brute-force routes and structural properties.

use std::collections::BTreeSet;

use delzant_core::delzant::{
    make_chopped_simplex, make_cube, make_product, make_simplex, same_fan, scale,
};
use delzant_core::exact::{factorial, rat, ratio, RatVector, Rational};
use delzant_core::packing::{
    admissible_simplex, build_packing_polytope, density, disjointness_oracle, maximize,
};
use delzant_core::perturb::{chamber_radius, is_admissible, perturb};
use delzant_core::polytope::{active_set_vertices, HPolytope, HalfSpace};
use delzant_core::{validate_delzant, DelzantPolytope, PolytopeError};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn box_rows(n: usize, half: i64) -> Vec<HalfSpace> {
    (0..n)
        .flat_map(|i| {
            [1i64, -1].into_iter().map(move |sgn| {
                let mut v = vec![0i64; n];
                v[i] = sgn;
                HalfSpace::from_i64(&v, rat(-half)).unwrap()
            })
        })
        .collect()
}

fn rect(a: Rational, b: Rational) -> DelzantPolytope {
    let hs = vec![
        HalfSpace::from_i64(&[1, 0], rat(0)).unwrap(),
        HalfSpace::from_i64(&[-1, 0], -a).unwrap(),
        HalfSpace::from_i64(&[0, 1], rat(0)).unwrap(),
        HalfSpace::from_i64(&[0, -1], -b).unwrap(),
    ];
    validate_delzant(&HPolytope::new(2, hs).unwrap()).unwrap()
}

fn positive() -> impl Strategy<Value = Rational> {
    (1i64..=12, 1i64..=6).prop_map(|(p, q)| ratio(p, q))
}

/// Small Delzant polytopes with at most five vertices.
fn small_delzant() -> impl Strategy<Value = DelzantPolytope> {
    prop_oneof![
        (positive(), positive()).prop_map(|(a, b)| rect(a, b)),
        (1usize..=3, positive()).prop_map(|(n, s)| make_simplex(n, &s).unwrap()),
        (1i64..=8, 1i64..=8).prop_filter_map("chops overlap", |(a, b)| {
            make_chopped_simplex(2, &ratio(a, 10), &ratio(b, 10)).ok()
        }),
    ]
}

fn sorted(v: Vec<RatVector>) -> Vec<RatVector> {
    v.into_iter().collect::<BTreeSet<_>>().into_iter().collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn double_description_matches_active_sets(
        n in 2usize..=3,
        extra in prop::collection::vec((prop::collection::vec(-3i64..=3, 3), -4i64..=4), 0..=2),
    ) {
        let mut hs = box_rows(n, 3);
        for (normal, off) in &extra {
            let normal = &normal[..n];
            if normal.iter().all(|&c| c == 0) {
                continue;
            }
            hs.push(HalfSpace::from_i64(normal, rat(*off)).unwrap());
        }
        let p = HPolytope::new(n, hs).unwrap();
        let brute = active_set_vertices(&p);
        match p.vertices() {
            Ok(v) => prop_assert_eq!(v, brute),
            Err(PolytopeError::Empty) => prop_assert!(brute.is_empty()),
            Err(e) => prop_assert!(false, "unexpected {}", e),
        }
    }

    #[test]
    fn packing_vertices_match_full_system(d in small_delzant()) {
        let pp = build_packing_polytope(&d);
        let fast = pp.vertices().unwrap();
        let brute = sorted(active_set_vertices(pp.hrep()));
        prop_assert_eq!(&fast, &brute);
        for x in &fast {
            prop_assert!(pp.contains(x));
            for (xi, r) in x.0.iter().zip(d.corner_radii()) {
                prop_assert!(xi <= r);
            }
        }
    }

    #[test]
    fn maximizers_are_disjoint_and_distinct(d in small_delzant()) {
        let m = maximize(&d).unwrap();
        let distinct: BTreeSet<_> = m.packings.iter().map(|p| p.radii.clone()).collect();
        prop_assert_eq!(distinct.len(), m.packings.len());
        prop_assert!(!m.packings.is_empty());
        for p in &m.packings {
            prop_assert_eq!(&p.density, &m.max_density);
            prop_assert!(disjointness_oracle(&d, &p.radii).unwrap());
        }
        prop_assert!(m.max_density <= rat(1));
    }

    #[test]
    fn edge_midpoints_fall_below_the_maximum(d in small_delzant()) {
        prop_assume!(d.dim() >= 2);
        let pp = build_packing_polytope(&d);
        let m = maximize(&d).unwrap();
        let vd = pp.essential_hrep().enumerate_vertices().unwrap();
        for &(i, j) in &vd.edges {
            let mid = vd.vertices[i].lerp(&vd.vertices[j], &ratio(1, 2));
            prop_assert!(density(&d, &mid).unwrap() < m.max_density);
        }
    }

    #[test]
    fn realized_simplex_volume(d in small_delzant(), k in 0usize..8, num in 1i64..=4) {
        let i = k % d.vertex_count();
        let r = &d.corner_radii()[i] * ratio(num, 4);
        let s = admissible_simplex(&d, i, &r).unwrap();
        let expected = num_traits::pow::Pow::pow(&r, d.dim() as u32) / factorial(d.dim());
        prop_assert_eq!(s.hull.volume().unwrap(), expected);
        let mut corners = s.corners();
        corners.sort();
        prop_assert_eq!(corners, sorted(s.hull.vertices().unwrap()));
    }

    #[test]
    fn density_is_scale_invariant(d in small_delzant(), l in positive()) {
        let big = scale(&d, &l).unwrap();
        prop_assert_eq!(maximize(&big).unwrap().max_density, maximize(&d).unwrap().max_density);
    }

    #[test]
    fn small_perturbations_keep_the_fan(
        d in small_delzant(),
        raw in prop::collection::vec(-99i64..=99, 5),
    ) {
        let rho = chamber_radius(&d).unwrap();
        let s = RatVector(raw[..d.facet_count()].iter().map(|&c| ratio(c, 100) * &rho).collect());
        let q = perturb(&d, &s).unwrap();
        prop_assert!(same_fan(&d, &q));
        prop_assert_eq!(q.vertex_count(), d.vertex_count());
        prop_assert!(is_admissible(&d, &RatVector::zeros(d.facet_count())));
    }
}

#[test]
fn disjointness_agrees_with_feasibility_on_random_points() {
    use rand::{Rng, SeedableRng};
    let cases = [
        make_cube(3, &rat(1)).unwrap(),
        make_product(
            &make_simplex(1, &rat(2)).unwrap(),
            &make_simplex(2, &rat(1)).unwrap(),
        )
        .unwrap(),
        make_chopped_simplex(3, &ratio(1, 5), &ratio(1, 3)).unwrap(),
    ];
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
    for d in &cases {
        let pp = build_packing_polytope(d);
        for _ in 0..60 {
            let x = RatVector(
                d.corner_radii()
                    .iter()
                    .map(|r| {
                        if rng.gen_bool(0.5) {
                            Rational::zero()
                        } else {
                            r * ratio(rng.gen_range(1..=8), 8)
                        }
                    })
                    .collect(),
            );
            assert_eq!(pp.contains(&x), disjointness_oracle(d, &x).unwrap(), "{x}");
        }
    }
}

#[test]
fn perturbation_sign_convention() {
    let sq = make_cube(2, &rat(1)).unwrap();
    // a positive offset on the upper x facet moves it inward
    let s = RatVector(vec![rat(0), ratio(1, 2), rat(0), rat(0)]);
    assert_eq!(perturb(&sq, &s).unwrap().volume(), &ratio(1, 2));
    let s = RatVector(vec![rat(0), ratio(-1, 2), rat(0), rat(0)]);
    assert_eq!(perturb(&sq, &s).unwrap().volume(), &ratio(3, 2));
    assert!(chamber_radius(&sq).unwrap().is_positive());
}
