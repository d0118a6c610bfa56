use latpoly::artinian::artinian_hilbert_function;
use latpoly::classify::{lawrence_prism, partition_count};
use latpoly::ehrhart::{
    degree_and_codegree, hstar, hstar_from_series, reciprocity_check, HStarPolynomial,
};
use latpoly::linalg::{hermite, mat_mul};
use latpoly::monoid::{minimal_monoid_generators, verify_generation};
use latpoly::normal_form::normal_form;
use latpoly::points::{count_in_dilate, lattice_points_in_dilate};
use latpoly::polytope::{apply_map, random_unimodular_map, LatticePolytope, Point};
use latpoly::pyramid::{geometric_pyramid_apexes, peel, pyramid};
use latpoly::toric::{
    compare_pyramid_detectors, toric_ideal_minimal_generators, toric_ideal_with, Representative,
};
use latpoly::volume::normalized_volume;
use proptest::prelude::*;

/// Hull of a few random points in a small box, rejected if flat.
fn polytope(dim: usize, side: i64, max_points: usize) -> impl Strategy<Value = LatticePolytope> {
    prop::collection::vec(prop::collection::vec(0..=side, dim), dim + 1..=max_points)
        .prop_filter_map("points must span the space", move |pts| {
            LatticePolytope::from_points(dim, pts).ok()
        })
}

fn small_polytope() -> impl Strategy<Value = LatticePolytope> {
    prop_oneof![polytope(2, 3, 6), polytope(3, 2, 6)]
}

/// Twice the area of a polygon, from the vertices sorted around the centroid.
fn shoelace(p: &LatticePolytope) -> i64 {
    let v = p.vertices();
    let (cx, cy) = (
        v.iter().map(|x| x[0]).sum::<i64>() as f64 / v.len() as f64,
        v.iter().map(|x| x[1]).sum::<i64>() as f64 / v.len() as f64,
    );
    let mut sorted: Vec<&Point> = v.iter().collect();
    sorted.sort_by(|a, b| {
        let ta = (a[1] as f64 - cy).atan2(a[0] as f64 - cx);
        let tb = (b[1] as f64 - cy).atan2(b[0] as f64 - cx);
        ta.partial_cmp(&tb).unwrap()
    });
    let s: i64 = (0..sorted.len())
        .map(|i| {
            let (a, b) = (sorted[i], sorted[(i + 1) % sorted.len()]);
            a[0] * b[1] - a[1] * b[0]
        })
        .sum();
    s.abs()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn equivalence_invariants(p in small_polytope(), seed in any::<u64>(), complexity in 0usize..8) {
        let g = random_unimodular_map(p.dim(), seed, complexity);
        let q = apply_map(&p, &g).unwrap();
        prop_assert_eq!(normal_form(&q).unwrap(), normal_form(&p).unwrap());
        prop_assert_eq!(normalized_volume(&q).unwrap(), normalized_volume(&p).unwrap());
        for k in 1..=p.dim() as u64 {
            prop_assert_eq!(count_in_dilate(&q, k), count_in_dilate(&p, k));
        }
        prop_assert_eq!(hstar(&q).unwrap(), hstar(&p).unwrap());
    }

    #[test]
    fn hstar_invariants(p in small_polytope()) {
        let h = hstar(&p).unwrap();
        prop_assert_eq!(h.coefficient(0), 1);
        prop_assert!(h.degree() <= p.dim());
        prop_assert_eq!(h.sum(), normalized_volume(&p).unwrap());
        let (d, c) = degree_and_codegree(&p).unwrap();
        prop_assert_eq!(d + c, p.dim() + 1);
        prop_assert!(reciprocity_check(&p, p.dim() as u64 + 2).unwrap());
        // h*_1 = |P ∩ Z^n| - n - 1
        if h.degree() >= 1 {
            prop_assert_eq!(h.coefficient(1), count_in_dilate(&p, 1) - p.dim() as u64 - 1);
        }
    }

    #[test]
    fn polygon_volume_matches_shoelace(p in polytope(2, 5, 8)) {
        prop_assert_eq!(normalized_volume(&p).unwrap() as i64, shoelace(&p));
    }

    #[test]
    fn membership_agrees_with_hull_rebuild(p in small_polytope()) {
        let inside = lattice_points_in_dilate(&p, 1);
        let (lo, hi) = p.bounding_box();
        for x in 0..(hi[0] - lo[0] + 1) {
            for y in 0..(hi[1] - lo[1] + 1) {
                let mut q: Point = vec![lo[0] + x, lo[1] + y];
                q.extend_from_slice(&lo[2..]);
                let mut pts = p.vertices().to_vec();
                pts.push(q.clone());
                let grown = LatticePolytope::from_points(p.dim(), pts).unwrap();
                prop_assert_eq!(grown.vertices() == p.vertices(), inside.contains(&q));
            }
        }
    }

    #[test]
    fn pyramid_identities(p in small_polytope()) {
        let q = pyramid(&p);
        let (h, hq) = (hstar(&p).unwrap(), hstar(&q).unwrap());
        prop_assert_eq!(hq.coefficients(), h.coefficients());
        let (_, c) = degree_and_codegree(&p).unwrap();
        let (_, cq) = degree_and_codegree(&q).unwrap();
        prop_assert_eq!(cq, c + 1);
        prop_assert!(!geometric_pyramid_apexes(&q).is_empty());
        prop_assert_eq!(peel(&q).unwrap().multiplicity, peel(&p).unwrap().multiplicity + 1);
    }

    #[test]
    fn series_round_trip(tail in prop::collection::vec(0u64..6, 0..4), n in 3usize..6) {
        let mut coeffs = vec![1];
        coeffs.extend(tail);
        while coeffs.len() > 1 && coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        let h = HStarPolynomial::new(coeffs, n).unwrap();
        let counts: Vec<u64> = (0..=n as u64 + 2).map(|k| h.ehrhart_count(k) as u64).collect();
        prop_assert_eq!(hstar_from_series(&counts, n).unwrap(), h);
    }

    #[test]
    fn hermite_form_is_left_invariant(
        m in prop::collection::vec(prop::collection::vec(-6i64..=6, 3), 3),
        seed in any::<u64>(),
    ) {
        let u = random_unimodular_map(3, seed, 5).linear;
        prop_assert_eq!(hermite(&mat_mul(&u, &m).unwrap()).unwrap(), hermite(&m).unwrap());
    }

    #[test]
    fn partition_recurrence(n in 1usize..8, v in 0usize..16) {
        if v >= n {
            prop_assert_eq!(partition_count(n, v), partition_count(n - 1, v) + partition_count(n, v - n));
        }
        prop_assert_eq!(partition_count(v.max(1), v), partition_count(v.max(1) + 3, v));
    }

    #[test]
    fn lawrence_prism_hstar(mut heights in prop::collection::vec(0u64..4, 1..5)) {
        heights.sort_unstable();
        prop_assume!(heights.iter().any(|&k| k > 0));
        // validation inside the constructor checks h* = 1 + (Σk - 1)t and nv = Σk
        let p = lawrence_prism(&heights).unwrap();
        prop_assert_eq!(p.dim(), heights.len());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn monoid_and_ideal_bounds(p in polytope(2, 3, 5)) {
        let h = hstar(&p).unwrap();
        let (d, v) = (h.degree() as u64, h.sum());
        let gens = minimal_monoid_generators(&p).unwrap();
        prop_assert!(gens.len() as u64 <= v + 2);
        prop_assert!(gens.max_degree() <= d.max(1));
        prop_assert!(verify_generation(&p, &gens.generators, d + 2));
        let pres = toric_ideal_minimal_generators(&gens).unwrap();
        prop_assert!(pres.max_degree() <= 2 * d);
        let other = toric_ideal_with(&gens, Representative::LexLargest).unwrap();
        prop_assert_eq!(other.per_degree_counts, pres.per_degree_counts);
    }

    #[test]
    fn detectors_agree(p in polytope(2, 3, 5), lift in any::<bool>()) {
        let q = if lift { pyramid(&p) } else { p };
        prop_assert!(compare_pyramid_detectors(&q).unwrap().agree);
    }

    #[test]
    fn artinian_matches_hstar(p in polytope(2, 3, 5), seed in any::<u64>()) {
        let h = hstar(&p).unwrap();
        prop_assert_eq!(artinian_hilbert_function(&p, seed).unwrap(), h.padded(h.degree() + 3));
    }
}
