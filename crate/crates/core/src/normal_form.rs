//! Canonical representatives of `AGL(n, Z)`-equivalence classes.
//!
//! The vertex–facet pairing matrix (lattice distances of vertices from
//! facets) is invariant up to row and column permutations. We only consider
//! vertex orders whose pairing matrix, with columns sorted, is
//! lexicographically minimal; this set of orders is defined intrinsically,
//! so it is carried along by any unimodular map. For every surviving order
//! the vertex differences to the first vertex are put into Hermite normal
//! form under the left `GL(n, Z)` action, and the smallest result wins.
//! Two polytopes get the same form iff some pair of orders yields the same
//! Hermite form, i.e. iff they are equivalent.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{hermite, Matrix};
use crate::polytope::LatticePolytope;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct NormalForm {
    pub dim: usize,
    pub vertex_count: usize,
    /// `dim × (vertex_count - 1)` matrix whose columns are the translated vertices.
    pub matrix: Matrix,
}

/// Lattice distances: `pairing[v][f] = offset_f - <normal_f, v>`.
pub fn pairing_matrix(p: &LatticePolytope) -> Matrix {
    p.vertices()
        .iter()
        .map(|v| p.facets().facets.iter().map(|f| f.slack(v)).collect())
        .collect()
}

/// Top rows of the column-sorted matrix restricted to the given row order.
fn prefix_key(pairing: &Matrix, order: &[usize]) -> Vec<Vec<i64>> {
    let cols = pairing.first().map_or(0, |r| r.len());
    let mut columns: Vec<Vec<i64>> = (0..cols)
        .map(|c| order.iter().map(|&r| pairing[r][c]).collect())
        .collect();
    columns.sort_unstable();
    columns
}

/// Vertex orders achieving the minimal column-sorted pairing matrix.
pub fn candidate_orders(p: &LatticePolytope) -> Vec<Vec<usize>> {
    let pairing = pairing_matrix(p);
    let n = p.num_vertices();
    let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..n {
        let mut best: Option<Vec<Vec<i64>>> = None;
        let mut next: Vec<Vec<usize>> = Vec::new();
        for prefix in &frontier {
            for v in 0..n {
                if prefix.contains(&v) {
                    continue;
                }
                let mut order = prefix.clone();
                order.push(v);
                let key = prefix_key(&pairing, &order);
                match best.as_ref().map(|b| key.cmp(b)) {
                    None | Some(std::cmp::Ordering::Less) => {
                        best = Some(key);
                        next.clear();
                        next.push(order);
                    }
                    Some(std::cmp::Ordering::Equal) => next.push(order),
                    Some(std::cmp::Ordering::Greater) => {}
                }
            }
        }
        frontier = next;
    }
    frontier
}

pub fn normal_form(p: &LatticePolytope) -> Result<NormalForm> {
    let n = p.dim();
    if n == 0 {
        return Ok(NormalForm {
            dim: 0,
            vertex_count: 1,
            matrix: Vec::new(),
        });
    }
    let verts = p.vertices();
    let mut best: Option<Matrix> = None;
    for order in candidate_orders(p) {
        let origin = &verts[order[0]];
        let m: Matrix = (0..n)
            .map(|i| {
                order[1..]
                    .iter()
                    .map(|&j| verts[j][i] - origin[i])
                    .collect()
            })
            .collect();
        let h = hermite(&m)?;
        if best.as_ref().is_none_or(|b| h < *b) {
            best = Some(h);
        }
    }
    let matrix =
        best.ok_or_else(|| Error::InternalInconsistency("no vertex order survived".into()))?;
    Ok(NormalForm {
        dim: n,
        vertex_count: p.num_vertices(),
        matrix,
    })
}

pub fn are_equivalent(p: &LatticePolytope, q: &LatticePolytope) -> Result<bool> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            got: q.dim(),
        });
    }
    if p.num_vertices() != q.num_vertices() || p.facets().len() != q.facets().len() {
        return Ok(false);
    }
    Ok(normal_form(p)? == normal_form(q)?)
}
