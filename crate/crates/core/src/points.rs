//! Lattice points of dilates `kP`.
//!
//! Coordinates are fixed one at a time. The admissible range for coordinate
//! `i` comes from the facet description of the projection of `P` onto the
//! first `i` coordinates, so every partial assignment that is explored
//! extends to a real point of `kP`. Output is in lexicographic order.
//! Cost grows like the number of lattice points of the projections, which is
//! fine for dimensions up to about 7 and dilations up to `n + 2`.

use crate::polytope::{FacetDescription, LatticePolytope, Point};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Closed,
    Interior,
}

/// All points of `kP ∩ Z^n` in lexicographic order.
pub fn lattice_points_in_dilate(p: &LatticePolytope, k: u64) -> Vec<Point> {
    enumerate(p, k as i64, Mode::Closed)
}

/// All points of `Int(kP) ∩ Z^n` in lexicographic order.
pub fn interior_points_in_dilate(p: &LatticePolytope, k: u64) -> Vec<Point> {
    enumerate(p, k as i64, Mode::Interior)
}

pub fn count_in_dilate(p: &LatticePolytope, k: u64) -> u64 {
    lattice_points_in_dilate(p, k).len() as u64
}

pub fn count_interior_in_dilate(p: &LatticePolytope, k: u64) -> u64 {
    interior_points_in_dilate(p, k).len() as u64
}

fn enumerate(p: &LatticePolytope, k: i64, mode: Mode) -> Vec<Point> {
    let n = p.dim();
    if n == 0 {
        // R^0 is its own interior.
        return if k == 0 && mode == Mode::Interior {
            Vec::new()
        } else {
            vec![vec![]]
        };
    }
    if k == 0 {
        return if mode == Mode::Closed {
            vec![vec![0; n]]
        } else {
            Vec::new()
        };
    }
    let projections = p.projections();
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    descend(projections, k, mode, &mut prefix, &mut out);
    out
}

fn descend(
    projections: &[FacetDescription],
    k: i64,
    mode: Mode,
    prefix: &mut Vec<i64>,
    out: &mut Vec<Point>,
) {
    let i = prefix.len();
    let n = projections.len();
    let last = i + 1 == n;
    let strict = last && mode == Mode::Interior;
    let mut lo = i64::MIN;
    let mut hi = i64::MAX;
    for f in &projections[i].facets {
        let a = f.normal[i];
        let rest: i64 = k * f.offset
            - f.normal[..i]
                .iter()
                .zip(prefix.iter())
                .map(|(x, y)| x * y)
                .sum::<i64>();
        // a * x_i <= rest (or < rest when strict)
        if a > 0 {
            let bound = if strict {
                (rest - 1).div_euclid(a)
            } else {
                rest.div_euclid(a)
            };
            hi = hi.min(bound);
        } else if a < 0 {
            let b = -a;
            // x_i >= -rest / b
            let bound = if strict {
                -((rest - 1).div_euclid(b))
            } else {
                -(rest.div_euclid(b))
            };
            lo = lo.max(bound);
        } else if rest < 0 || (strict && rest == 0) {
            return;
        }
    }
    if lo > hi {
        return;
    }
    for x in lo..=hi {
        prefix.push(x);
        if last {
            out.push(prefix.clone());
        } else {
            descend(projections, k, mode, prefix, out);
        }
        prefix.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(p: &LatticePolytope, k: i64, strict: bool) -> Vec<Point> {
        let (lo, hi) = p.bounding_box();
        let n = p.dim();
        let mut out = Vec::new();
        let mut cur: Vec<i64> = lo.iter().map(|x| x * k).collect();
        loop {
            let ok = p.facets().facets.iter().all(|f| {
                let s = k * f.offset - crate::linalg::dot(&f.normal, &cur);
                if strict {
                    s > 0
                } else {
                    s >= 0
                }
            });
            if ok {
                out.push(cur.clone());
            }
            let mut i = n;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur[i] < hi[i] * k {
                    cur[i] += 1;
                    for j in i + 1..n {
                        cur[j] = lo[j] * k;
                    }
                    break;
                }
            }
        }
    }

    #[test]
    fn matches_box_scan() {
        let polys = [
            LatticePolytope::new(2, vec![vec![0, 0], vec![2, 0], vec![0, 2]]).unwrap(),
            LatticePolytope::new(
                3,
                vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 2]],
            )
            .unwrap(),
            LatticePolytope::new(2, vec![vec![-1, 3], vec![2, -1], vec![4, 5], vec![0, 0]])
                .unwrap(),
        ];
        for p in &polys {
            for k in 1..4 {
                assert_eq!(lattice_points_in_dilate(p, k as u64), brute(p, k, false));
                assert_eq!(interior_points_in_dilate(p, k as u64), brute(p, k, true));
            }
        }
    }

    #[test]
    fn small_counts() {
        let t = LatticePolytope::new(2, vec![vec![0, 0], vec![2, 0], vec![0, 2]]).unwrap();
        assert_eq!(count_in_dilate(&t, 1), 6);
        assert_eq!(count_interior_in_dilate(&t, 2), 3);
        assert_eq!(count_in_dilate(&t, 0), 1);
        let simplex = LatticePolytope::new(2, vec![vec![0, 0], vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(interior_points_in_dilate(&simplex, 3), vec![vec![1, 1]]);
        let square =
            LatticePolytope::new(2, vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        assert_eq!(count_in_dilate(&square, 2), 9);
        assert_eq!(count_interior_in_dilate(&square, 1), 0);
    }

    #[test]
    fn point_polytope() {
        let pt = LatticePolytope::point();
        assert_eq!(count_in_dilate(&pt, 0), 1);
        assert_eq!(count_in_dilate(&pt, 5), 1);
        assert_eq!(count_interior_in_dilate(&pt, 1), 1);
    }
}
