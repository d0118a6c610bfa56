//! Facet enumeration for the convex hull of a full-dimensional point set.
//!
//! The points are homogenized to `(p, 1)` and the extreme rays of the dual
//! cone are found with the double description method. Every ray is kept
//! primitive, and adjacency of rays is decided with the algebraic rank test,
//! so redundant (non-extreme) input points are harmless.

use crate::error::{Error, Result};
use crate::linalg::{self, checked_dot, determinant, narrow, primitive};

/// Fixed-width bit set over input point indices.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64).max(1)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &bits)| {
            (0..64)
                .filter(move |b| bits >> b & 1 == 1)
                .map(move |b| w * 64 + b)
        })
    }
}

struct Ray {
    normal: Vec<i64>,
    zeros: Bits,
}

/// Inequalities `(a, b)` meaning `<a, x> <= b`, one per facet of `conv(points)`.
///
/// Normals are primitive and the list is sorted. Fails with
/// `NotFullDimensional` when the points do not affinely span `R^dim`.
pub fn facets(dim: usize, points: &[Vec<i64>]) -> Result<Vec<(Vec<i64>, i64)>> {
    if points.is_empty() {
        return Err(Error::InvalidInput("empty point set".into()));
    }
    if let Some(p) = points.iter().find(|p| p.len() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: p.len(),
        });
    }
    let span = affine_rank(points);
    if span != dim {
        return Err(Error::NotFullDimensional { ambient: dim, span });
    }
    if dim == 0 {
        return Ok(Vec::new());
    }

    let lifted: Vec<Vec<i64>> = points
        .iter()
        .map(|p| p.iter().copied().chain(std::iter::once(1)).collect())
        .collect();
    let d = dim + 1;

    // Greedy choice of d linearly independent lifted points.
    let mut basis: Vec<usize> = Vec::with_capacity(d);
    for (i, _) in lifted.iter().enumerate() {
        let mut trial: Vec<Vec<i64>> = basis.iter().map(|&j| lifted[j].clone()).collect();
        trial.push(lifted[i].clone());
        if linalg::rank(&trial) == trial.len() {
            basis.push(i);
            if basis.len() == d {
                break;
            }
        }
    }

    // Rays of the initial simplicial dual cone are the columns of the
    // adjugate, signed so that <ray_j, w_j> > 0.
    let base: Vec<Vec<i64>> = basis.iter().map(|&j| lifted[j].clone()).collect();
    let det = determinant(&base)?;
    let mut rays: Vec<Ray> = Vec::with_capacity(d);
    for j in 0..d {
        let mut col = Vec::with_capacity(d);
        for i in 0..d {
            // adj[i][j] = (-1)^(i+j) * minor(j, i)
            let minor: Vec<Vec<i64>> = base
                .iter()
                .enumerate()
                .filter(|&(r, _)| r != j)
                .map(|(_, row)| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != i)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let m = determinant(&minor)?;
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            col.push(narrow(sign * m * det.signum())?);
        }
        rays.push(Ray {
            normal: primitive(&col),
            zeros: Bits::new(points.len()),
        });
    }
    for ray in rays.iter_mut() {
        for &b in &basis {
            if checked_dot(&ray.normal, &lifted[b])? == 0 {
                ray.zeros.set(b);
            }
        }
    }

    let mut processed: Vec<usize> = basis.clone();
    for (idx, w) in lifted.iter().enumerate() {
        if basis.contains(&idx) {
            continue;
        }
        let values: Vec<i64> = rays
            .iter()
            .map(|r| checked_dot(&r.normal, w))
            .collect::<Result<_>>()?;
        let mut next: Vec<Ray> = Vec::new();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i] < 0).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i] > 0).collect();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].zeros.and(&rays[q].zeros);
                if common.count() < d - 2 {
                    continue;
                }
                let tight: Vec<Vec<i64>> = common.iter().map(|k| lifted[k].clone()).collect();
                if linalg::rank(&tight) != d - 2 {
                    continue;
                }
                let (sp, sq) = (values[p] as i128, -(values[q] as i128));
                let combo: Vec<i64> = rays[p]
                    .normal
                    .iter()
                    .zip(&rays[q].normal)
                    .map(|(&a, &b)| {
                        sq.checked_mul(a as i128)
                            .and_then(|x| x.checked_add(sp.checked_mul(b as i128)?))
                            .ok_or(Error::Overflow)
                            .and_then(narrow)
                    })
                    .collect::<Result<_>>()?;
                let mut zeros = common;
                zeros.set(idx);
                next.push(Ray {
                    normal: primitive(&combo),
                    zeros,
                });
            }
        }
        for (i, mut ray) in rays.into_iter().enumerate() {
            match values[i].signum() {
                1 => next.push(ray),
                0 => {
                    ray.zeros.set(idx);
                    next.push(ray);
                }
                _ => {}
            }
        }
        rays = next;
        processed.push(idx);
    }
    debug_assert_eq!(processed.len(), points.len());

    let mut out: Vec<(Vec<i64>, i64)> = rays
        .into_iter()
        .map(|r| {
            let (a, b) = r.normal.split_at(dim);
            (a.iter().map(|x| -x).collect(), b[0])
        })
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Dimension of the affine span of a nonempty point set.
pub fn affine_rank(points: &[Vec<i64>]) -> usize {
    let Some(p0) = points.first() else {
        return 0;
    };
    let diffs: Vec<Vec<i64>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(p0).map(|(a, b)| a - b).collect())
        .collect();
    if diffs.is_empty() || p0.is_empty() {
        return 0;
    }
    linalg::rank(&diffs)
}
