//! Values checked against small independent implementations: bounding-box
//! scans with hand-written inequalities, truncated series multiplication,
//! pairwise irreducibility and explicit matrices.

use std::collections::BTreeSet;

use latpoly::artinian::{hilbert_function_with, random_forms};
use latpoly::classify::{enumerate_2d, enumerate_simplices};
use latpoly::corpus::{dilated_triangle, reeve_simplex, unit_cube, unit_simplex};
use latpoly::ehrhart::hstar;
use latpoly::monoid::{graded_cone, minimal_monoid_generators};
use latpoly::normal_form::{are_equivalent, normal_form};
use latpoly::points::{count_in_dilate, count_interior_in_dilate, lattice_points_in_dilate};
use latpoly::polytope::{apply_map, AffineUnimodularMap, LatticePolytope, Point};
use latpoly::toric::toric_ideal_minimal_generators;
use latpoly::volume::normalized_volume;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn poly(dim: usize, v: &[&[i64]]) -> LatticePolytope {
    LatticePolytope::new(dim, v.iter().map(|x| x.to_vec()).collect()).unwrap()
}

/// Points of `[lo, hi]^n` accepted by `inside`.
fn scan(n: usize, lo: i64, hi: i64, inside: impl Fn(&[i64]) -> bool) -> Vec<Point> {
    let mut out = Vec::new();
    let mut x = vec![lo; n];
    loop {
        if inside(&x) {
            out.push(x.clone());
        }
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if x[i] < hi {
                x[i] += 1;
                break;
            }
            x[i] = lo;
        }
    }
}

/// `(1 - t)^{n+1} Σ L(k) t^k`, truncated after degree `n`.
fn series_hstar(counts: &[i64], n: usize) -> Vec<i64> {
    let mut factor = vec![1i64];
    for _ in 0..=n {
        let mut next = vec![0; factor.len() + 1];
        for (i, c) in factor.iter().enumerate() {
            next[i] += c;
            next[i + 1] -= c;
        }
        factor = next;
    }
    let mut h: Vec<i64> = (0..=n)
        .map(|j| (0..=j).map(|i| factor[i] * counts[j - i]).sum())
        .collect();
    while h.len() > 1 && h.last() == Some(&0) {
        h.pop();
    }
    h
}

// Reeve simplex as inequalities: z >= 0, 2y >= z, 2x >= z, 2x + 2y - z <= 2 (scaled by k).
fn in_reeve(x: &[i64], k: i64, strict: bool) -> bool {
    let s = [
        x[2],
        2 * x[1] - x[2],
        2 * x[0] - x[2],
        2 * k - 2 * x[0] - 2 * x[1] + x[2],
    ];
    s.iter().all(|&v| if strict { v > 0 } else { v >= 0 })
}

fn in_t(x: &[i64], k: i64, strict: bool) -> bool {
    let s = [x[0], x[1], 2 * k - x[0] - x[1]];
    s.iter().all(|&v| if strict { v > 0 } else { v >= 0 })
}

#[test]
fn point_counts_from_box_scans() {
    let t = dilated_triangle(2);
    for k in 0..=4u64 {
        let ki = k as i64;
        let want = scan(2, -1, 2 * ki + 1, |x| in_t(x, ki, false)).len() as u64;
        assert_eq!(count_in_dilate(&t, k), want);
        if k > 0 {
            let want = scan(2, -1, 2 * ki + 1, |x| in_t(x, ki, true)).len() as u64;
            assert_eq!(count_interior_in_dilate(&t, k), want);
        }
    }
    assert_eq!(count_in_dilate(&t, 1), 6);
    assert_eq!(count_interior_in_dilate(&t, 2), 3);
    let reeve = reeve_simplex(2);
    for k in 0..=4u64 {
        let ki = k as i64;
        let want = scan(3, -1, 2 * ki + 1, |x| in_reeve(x, ki, false)).len() as u64;
        assert_eq!(count_in_dilate(&reeve, k), want, "Reeve k = {k}");
    }
    assert_eq!(count_in_dilate(&unit_cube(2), 2), 9);
    assert_eq!(count_interior_in_dilate(&unit_simplex(2), 3), 1);
    assert_eq!(lattice_points_in_dilate(&unit_simplex(2), 1).len(), 3);
}

#[test]
fn hstar_from_independent_series() {
    let t_counts: Vec<i64> = (0..=2)
        .map(|k| scan(2, 0, 2 * k, |x| in_t(x, k, false)).len() as i64)
        .collect();
    assert_eq!(t_counts, vec![1, 6, 15]);
    assert_eq!(series_hstar(&t_counts, 2), vec![1, 3]);
    assert_eq!(hstar(&dilated_triangle(2)).unwrap().coefficients(), &[1, 3]);

    let r_counts: Vec<i64> = (0..=3)
        .map(|k| scan(3, 0, 2 * k, |x| in_reeve(x, k, false)).len() as i64)
        .collect();
    assert_eq!(series_hstar(&r_counts, 3), vec![1, 0, 1]);
    assert_eq!(hstar(&reeve_simplex(2)).unwrap().coefficients(), &[1, 0, 1]);

    let tri3 = |x: &[i64], k: i64| x[0] >= 0 && x[1] >= 0 && x[0] + x[1] <= 3 * k;
    let counts: Vec<i64> = (0..=2)
        .map(|k| scan(2, 0, 3 * k, |x| tri3(x, k)).len() as i64)
        .collect();
    assert_eq!(counts, vec![1, 10, 28]);
    assert_eq!(series_hstar(&counts, 2), vec![1, 7, 1]);
    assert_eq!(
        hstar(&dilated_triangle(3)).unwrap().coefficients(),
        &[1, 7, 1]
    );
}

#[test]
fn facets_of_reeve_simplex() {
    let r = reeve_simplex(2);
    assert_eq!(r.facets().len(), 4);
    for f in &r.facets().facets {
        assert_eq!(r.vertices_on(f).len(), 3);
    }
}

#[test]
fn volumes_from_determinants() {
    assert_eq!(normalized_volume(&unit_cube(2)).unwrap(), 2);
    assert_eq!(normalized_volume(&reeve_simplex(2)).unwrap(), 2);
    assert_eq!(normalized_volume(&unit_simplex(4)).unwrap(), 1);
    // 3! * 1 for the cube; the six simplices of the staircase triangulation
    assert_eq!(normalized_volume(&unit_cube(3)).unwrap(), 6);
}

/// Monoid elements up to degree `top` that are not a sum of two nonzero
/// elements, found by testing every pair.
fn irreducibles(p: &LatticePolytope, top: u64) -> BTreeSet<Point> {
    let cone = graded_cone(p);
    let all: Vec<Point> = (1..=top)
        .flat_map(|k| {
            lattice_points_in_dilate(p, k)
                .into_iter()
                .map(move |mut x| {
                    x.push(k as i64);
                    x
                })
        })
        .collect();
    all.iter()
        .filter(|m| {
            !all.iter().any(|a| {
                let rest: Point = m.iter().zip(a).map(|(x, y)| x - y).collect();
                rest.last() > Some(&0) && cone.contains(&rest)
            })
        })
        .cloned()
        .collect()
}

#[test]
fn reeve_generators_by_pairwise_irreducibility() {
    let r = reeve_simplex(2);
    let brute = irreducibles(&r, 4);
    let sieve: BTreeSet<Point> = minimal_monoid_generators(&r)
        .unwrap()
        .generators
        .into_iter()
        .collect();
    assert_eq!(brute, sieve);
    assert_eq!(sieve.len(), 5);
    assert!(sieve.contains(&vec![1, 1, 1, 2]));
    let seg = poly(1, &[&[0], &[2]]);
    assert_eq!(
        irreducibles(&seg, 4),
        minimal_monoid_generators(&seg)
            .unwrap()
            .generators
            .into_iter()
            .collect()
    );
}

#[test]
fn reeve_ideal_is_one_quartic() {
    let r = reeve_simplex(2);
    let gens = minimal_monoid_generators(&r).unwrap();
    let pres = toric_ideal_minimal_generators(&gens).unwrap();
    assert_eq!(pres.len(), 1);
    let b = &pres.minimal_generators[0];
    // 2 (1,1,1,2) = sum of the four vertices at height one
    assert_eq!(b.degree, 4);
    assert_eq!(b.support().len(), 5);
    let top = gens
        .generators
        .iter()
        .position(|g| g == &vec![1, 1, 1, 2])
        .unwrap();
    assert!(b.plus[top] == 2 || b.minus[top] == 2);
}

#[test]
fn explicit_equivalences() {
    let a = poly(2, &[&[0, 0], &[1, 0], &[0, 2]]);
    let b = poly(2, &[&[0, 0], &[2, 0], &[1, 1]]);
    let g = AffineUnimodularMap::new(vec![vec![1, 1], vec![1, 0]], vec![0, 0]).unwrap();
    assert_eq!(apply_map(&a, &g).unwrap(), b);
    assert!(are_equivalent(&a, &b).unwrap());
    assert_eq!(normal_form(&a).unwrap(), normal_form(&b).unwrap());
    assert!(!are_equivalent(&unit_cube(2), &dilated_triangle(2)).unwrap());
    let sheared = AffineUnimodularMap::new(vec![vec![1, 1], vec![0, 1]], vec![0, 0]).unwrap();
    assert_eq!(
        apply_map(&unit_cube(2), &sheared).unwrap(),
        poly(2, &[&[0, 0], &[1, 0], &[1, 1], &[2, 1]])
    );
}

/// Rank over `Q` by fraction-free elimination on `i128`.
fn exact_rank(mut m: Vec<Vec<i128>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let (a, b) = (m[rank][c], m[r][c]);
                let pivot = m[rank].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot) {
                    *x = a * *x - b * y;
                }
                let g = m[r].iter().fold(0i128, |g, &x| num_gcd(g, x.abs()));
                if g > 1 {
                    m[r].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn num_gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

#[test]
fn artinian_square_by_explicit_ranks() {
    let sq = unit_cube(2);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let coeffs = random_forms(&sq, &mut rng);
    let deg1 = lattice_points_in_dilate(&sq, 1);
    let mut dims = vec![1u64];
    for k in 1..=3u64 {
        let prev = lattice_points_in_dilate(&sq, k - 1);
        let cur = lattice_points_in_dilate(&sq, k);
        let mut rows = Vec::new();
        for c in &coeffs {
            for m in &prev {
                let mut row = vec![0i128; cur.len()];
                for (x, &cj) in deg1.iter().zip(c) {
                    let s: Point = m.iter().zip(x).map(|(a, b)| a + b).collect();
                    row[cur.iter().position(|y| *y == s).unwrap()] += cj as i128;
                }
                rows.push(row);
            }
        }
        dims.push((cur.len() - exact_rank(rows)) as u64);
    }
    assert_eq!(dims, hilbert_function_with(&sq, &coeffs, 3));
    assert_eq!(dims, vec![1, 1, 0, 0]);
}

#[test]
fn simplex_classes_match_box_search() {
    // every 3-simplex of volume 2 has a copy with vertex 0 and edges in [0, 2]^3
    let mut forms = BTreeSet::new();
    let pts = scan(3, 0, 2, |_| true);
    for (i, a) in pts.iter().enumerate() {
        for (j, b) in pts.iter().enumerate().skip(i + 1) {
            for c in pts.iter().skip(j + 1) {
                let det = a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
                    + a[2] * (b[0] * c[1] - b[1] * c[0]);
                if det.abs() == 2 {
                    let s = LatticePolytope::new(
                        3,
                        vec![vec![0, 0, 0], a.clone(), b.clone(), c.clone()],
                    )
                    .unwrap();
                    forms.insert(normal_form(&s).unwrap());
                }
            }
        }
    }
    let table = enumerate_simplices(3, 2).unwrap();
    assert_eq!(table.count, forms.len());
    assert_eq!(table.count, 2);
    assert_eq!(enumerate_simplices(2, 1).unwrap().count, 1);
}

#[test]
fn planar_counts_with_one_interior_point() {
    // The sixteen polygons with exactly one interior lattice point have
    // h*_2 = 1 and normalized volume equal to their boundary point count.
    let tables = enumerate_2d(9, None).unwrap();
    let reflexive: usize = tables
        .values()
        .flat_map(|t| &t.classes)
        .filter(|c| c.degree == 2 && c.hstar[2] == 1)
        .count();
    assert_eq!(reflexive, 16);
    assert_eq!(tables[&(1, 0)].count, 1);
}

#[test]
fn default_box_is_large_enough() {
    let counts = |b: Option<u64>| -> Vec<((u64, usize), usize)> {
        enumerate_2d(6, b)
            .unwrap()
            .iter()
            .map(|(k, t)| (*k, t.count))
            .collect()
    };
    assert_eq!(counts(None), counts(Some(12)));
}
