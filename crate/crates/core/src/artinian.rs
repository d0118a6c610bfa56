//! Hilbert function of the artinian reduction `R = S / (y_0, ..., y_n)`.
//!
//! `S` is the semigroup ring of the graded monoid, with `S^k` spanned by the
//! degree-`k` monoid elements. The `y_i` are degree-one elements with random
//! integer coefficients. `dim R^k = |M^k| - rank(Y_k)` where `Y_k` maps
//! `(S^{k-1})^{n+1}` to `S^k`.
//!
//! Ranks are computed exactly over `Q` for small matrices and modulo the
//! prime `2^61 - 1` otherwise. Reduction mod `p` can only lower a rank, and
//! no specialization of the coefficients can push `dim R^k` below the generic
//! value `h*_k`, so a mod-`p` result equal to `h*_k` is exact.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ehrhart;
use crate::error::{Error, Result};
use crate::linalg::{rank, rank_mod_p};
use crate::points::lattice_points_in_dilate;
use crate::polytope::{LatticePolytope, Point};

pub const MAX_ATTEMPTS: usize = 5;

/// Matrices with at most this many entries get an exact rational rank.
const EXACT_RANK_ENTRIES: usize = 4096;

fn graded_rank(m: &[Vec<i64>]) -> usize {
    let entries = m.len() * m.first().map_or(0, Vec::len);
    if entries <= EXACT_RANK_ENTRIES {
        rank(m)
    } else {
        rank_mod_p(m)
    }
}

/// `dim R^k` for `k = 0..=top` with the given coefficients: `coeffs[i][j]` is
/// the coefficient of the `j`-th lattice point of `P` in `y_i`.
pub fn hilbert_function_with(p: &LatticePolytope, coeffs: &[Vec<i64>], top: usize) -> Vec<u64> {
    let deg1 = lattice_points_in_dilate(p, 1);
    let slices: Vec<Vec<Point>> = (0..=top as u64)
        .map(|k| lattice_points_in_dilate(p, k))
        .collect();
    let mut out = vec![1];
    for k in 1..=top {
        let target = &slices[k];
        let index: HashMap<&Point, usize> =
            target.iter().enumerate().map(|(i, x)| (x, i)).collect();
        let mut rows = Vec::with_capacity(coeffs.len() * slices[k - 1].len());
        for c in coeffs {
            for m in &slices[k - 1] {
                let mut row = vec![0i64; target.len()];
                for (x, &cj) in deg1.iter().zip(c) {
                    let sum: Point = m.iter().zip(x).map(|(a, b)| a + b).collect();
                    row[index[&sum]] += cj;
                }
                rows.push(row);
            }
        }
        out.push((target.len() - graded_rank(&rows)) as u64);
    }
    out
}

/// Random coefficient matrix for `n + 1` degree-one forms, entries in `1..=100`.
pub fn random_forms(p: &LatticePolytope, rng: &mut ChaCha8Rng) -> Vec<Vec<i64>> {
    let l1 = lattice_points_in_dilate(p, 1).len();
    (0..=p.dim())
        .map(|_| (0..l1).map(|_| rng.gen_range(1..=100)).collect())
        .collect()
}

/// `(dim R^0, ..., dim R^{d+2})` for a regular sequence of degree-one forms.
///
/// Forms are resampled until the result agrees with `h*` padded by two zeros;
/// after [`MAX_ATTEMPTS`] failures `RegularSequenceNotFound` is returned.
pub fn artinian_hilbert_function(p: &LatticePolytope, seed: u64) -> Result<Vec<u64>> {
    let h = ehrhart::hstar(p)?;
    let top = h.degree() + 2;
    let expected = h.padded(top + 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let coeffs = random_forms(p, &mut rng);
        let got = hilbert_function_with(p, &coeffs, top);
        if got == expected {
            return Ok(got);
        }
    }
    Err(Error::RegularSequenceNotFound {
        attempts: MAX_ATTEMPTS,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(dim: usize, v: &[&[i64]]) -> LatticePolytope {
        LatticePolytope::new(dim, v.iter().map(|x| x.to_vec()).collect()).unwrap()
    }

    #[test]
    fn small_examples() {
        let square = poly(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(
            artinian_hilbert_function(&square, 42).unwrap(),
            vec![1, 1, 0, 0]
        );
        let t = poly(2, &[&[0, 0], &[2, 0], &[0, 2]]);
        assert_eq!(artinian_hilbert_function(&t, 42).unwrap(), vec![1, 3, 0, 0]);
        let reeve = poly(3, &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, 2]]);
        assert_eq!(
            artinian_hilbert_function(&reeve, 42).unwrap(),
            vec![1, 0, 1, 0, 0]
        );
    }

    #[test]
    fn degenerate_forms_are_rejected() {
        // Identical forms are never a regular sequence; R^1 gets too big.
        let square = poly(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let same = vec![vec![1, 2, 3, 4]; 3];
        assert_eq!(hilbert_function_with(&square, &same, 1), vec![1, 3]);
    }
}
