//! The cone over `P × {1}` and the minimal generators of its graded monoid.
//!
//! `M = σ ∩ Z^{n+1}` is saturated, so an element `m` of degree `k` is
//! reducible iff `m - g ∈ σ` for some generator `g` of smaller degree. The
//! generators are found degree by degree up to `max(d, 1)`; two further
//! degrees are sieved as a consistency check, since no generator can have
//! degree above `d`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::ehrhart;
use crate::error::{Error, Result};
use crate::linalg::dot;
use crate::points::lattice_points_in_dilate;
use crate::polytope::{LatticePolytope, Point};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedCone {
    /// Inner normals `a` with `σ = {y : <a, y> >= 0}`.
    pub facet_normals: Vec<Vec<i64>>,
    /// Index of the grading coordinate, always `n`.
    pub grading_index: usize,
}

impl GradedCone {
    pub fn contains(&self, y: &[i64]) -> bool {
        self.facet_normals.iter().all(|a| dot(a, y) >= 0)
    }
}

/// `σ_P`: `(x, k) ∈ σ` iff `x ∈ kP` and `k >= 0`.
pub fn graded_cone(p: &LatticePolytope) -> GradedCone {
    let n = p.dim();
    let mut facet_normals: Vec<Vec<i64>> = p
        .facets()
        .facets
        .iter()
        .map(|f| {
            f.normal
                .iter()
                .map(|x| -x)
                .chain(std::iter::once(f.offset))
                .collect()
        })
        .collect();
    if facet_normals.is_empty() {
        // A point: the cone is the ray k >= 0.
        let mut e = vec![0; n + 1];
        e[n] = 1;
        facet_normals.push(e);
    }
    GradedCone {
        facet_normals,
        grading_index: n,
    }
}

/// Lattice points of degree `k` in the monoid, as `(x, k)`.
pub fn monoid_slice(p: &LatticePolytope, k: u64) -> Vec<Point> {
    lattice_points_in_dilate(p, k)
        .into_iter()
        .map(|mut x| {
            x.push(k as i64);
            x
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidGenerators {
    pub dim: usize,
    /// Sorted by degree, then lexicographically.
    pub generators: Vec<Point>,
    pub cone: GradedCone,
    /// `deg h*` of the polytope; bounds the generator degrees from above.
    pub hstar_degree: usize,
}

impl MonoidGenerators {
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn degree_of(&self, i: usize) -> u64 {
        self.generators[i][self.dim] as u64
    }

    pub fn degrees(&self) -> Vec<u64> {
        (0..self.len()).map(|i| self.degree_of(i)).collect()
    }

    pub fn max_degree(&self) -> u64 {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Number of generators of each degree, indexed by degree.
    pub fn count_by_degree(&self) -> Vec<usize> {
        let mut out = vec![0; self.max_degree() as usize + 1];
        for d in self.degrees() {
            out[d as usize] += 1;
        }
        out
    }
}

fn sieve_degree(cone: &GradedCone, gens: &[Point], slice: Vec<Point>) -> Vec<Point> {
    slice
        .into_iter()
        .filter(|m| {
            !gens.iter().any(|g| {
                let diff: Vec<i64> = m.iter().zip(g).map(|(a, b)| a - b).collect();
                cone.contains(&diff)
            })
        })
        .collect()
}

pub fn minimal_monoid_generators(p: &LatticePolytope) -> Result<MonoidGenerators> {
    let d = ehrhart::degree(p)?;
    let cone = graded_cone(p);
    let top = d.max(1) as u64;
    let mut gens = monoid_slice(p, 1);
    for k in 2..=top {
        let new = sieve_degree(&cone, &gens, monoid_slice(p, k));
        gens.extend(new);
    }
    for k in top + 1..=top + 2 {
        let extra = sieve_degree(&cone, &gens, monoid_slice(p, k));
        if !extra.is_empty() {
            return Err(Error::InternalInconsistency(format!(
                "irreducible element {:?} of degree {k} above deg h* = {d}",
                extra[0]
            )));
        }
    }
    Ok(MonoidGenerators {
        dim: p.dim(),
        generators: gens,
        cone,
        hstar_degree: d,
    })
}

/// Whether every monoid element of degree `<= max_k` is a nonnegative
/// integer combination of `gens`.
///
/// Works by memoized subtraction: `m` is reachable iff `m = 0` or `m - g`
/// is reachable for some generator `g`. Only lattice points of the cone are
/// ever visited.
pub fn verify_generation(p: &LatticePolytope, gens: &[Point], max_k: u64) -> bool {
    let cone = graded_cone(p);
    let n = p.dim();
    let mut memo: HashMap<Point, bool> = HashMap::new();
    fn reachable(
        m: &Point,
        n: usize,
        gens: &[Point],
        cone: &GradedCone,
        memo: &mut HashMap<Point, bool>,
    ) -> bool {
        if m[n] == 0 {
            return m.iter().all(|&x| x == 0);
        }
        if let Some(&r) = memo.get(m) {
            return r;
        }
        let mut ok = false;
        for g in gens {
            if g[n] > m[n] {
                continue;
            }
            let diff: Point = m.iter().zip(g).map(|(a, b)| a - b).collect();
            if cone.contains(&diff) && reachable(&diff, n, gens, cone, memo) {
                ok = true;
                break;
            }
        }
        memo.insert(m.clone(), ok);
        ok
    }
    (1..=max_k).all(|k| {
        monoid_slice(p, k)
            .iter()
            .all(|m| reachable(m, n, gens, &cone, &mut memo))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(dim: usize, v: &[&[i64]]) -> LatticePolytope {
        LatticePolytope::new(dim, v.iter().map(|x| x.to_vec()).collect()).unwrap()
    }

    fn reeve() -> LatticePolytope {
        poly(3, &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, 2]])
    }

    #[test]
    fn cone_membership() {
        let seg = poly(1, &[&[0], &[1]]);
        let c = graded_cone(&seg);
        let mut normals = c.facet_normals.clone();
        normals.sort();
        assert_eq!(normals, vec![vec![-1, 1], vec![1, 0]]);
        let square = poly(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert!(graded_cone(&square).contains(&[1, 1, 1]));
        assert!(graded_cone(&reeve()).contains(&[1, 1, 1, 2]));
        assert!(!graded_cone(&reeve()).contains(&[1, 1, 1, 1]));
    }

    #[test]
    fn generators_of_small_polytopes() {
        let simplex = poly(2, &[&[0, 0], &[1, 0], &[0, 1]]);
        assert_eq!(minimal_monoid_generators(&simplex).unwrap().len(), 3);
        let seg = poly(1, &[&[0], &[2]]);
        assert_eq!(
            minimal_monoid_generators(&seg).unwrap().generators,
            vec![vec![0, 1], vec![1, 1], vec![2, 1]]
        );
        let g = minimal_monoid_generators(&reeve()).unwrap();
        assert_eq!(g.len(), 5);
        assert_eq!(g.generators[4], vec![1, 1, 1, 2]);
    }

    #[test]
    fn generation_check() {
        let r = reeve();
        let deg1 = monoid_slice(&r, 1);
        assert!(!verify_generation(&r, &deg1, 2));
        let full = minimal_monoid_generators(&r).unwrap().generators;
        assert!(verify_generation(&r, &full, 4));
        let square = poly(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let gens = minimal_monoid_generators(&square).unwrap().generators;
        assert!(verify_generation(&square, &gens, 4));
    }
}
