//! Pulling triangulation and normalized volume.

use crate::error::{Error, Result};
use crate::linalg::determinant;
use crate::polytope::{facet_description, project_to_full_dim, LatticePolytope, Point};

/// Simplices of the pulling triangulation from the first vertex, as sorted
/// lists of vertex indices.
///
/// For every facet not containing the pulled vertex, the facet is
/// triangulated recursively (pulling its own first vertex) and each simplex
/// is coned from the pulled vertex.
pub fn triangulate(p: &LatticePolytope) -> Result<Vec<Vec<usize>>> {
    let all: Vec<usize> = (0..p.num_vertices()).collect();
    triangulate_face(p.vertices(), &all)
}

fn triangulate_face(vertices: &[Point], face: &[usize]) -> Result<Vec<Vec<usize>>> {
    let pts: Vec<Point> = face.iter().map(|&i| vertices[i].clone()).collect();
    let (m, local) = project_to_full_dim(&pts)?;
    if m == 0 {
        return Ok(vec![vec![face[0]]]);
    }
    let apex = 0usize;
    let desc = facet_description(m, &local)?;
    let mut out = Vec::new();
    for f in &desc.facets {
        if f.slack(&local[apex]) == 0 {
            continue;
        }
        let sub: Vec<usize> = (0..face.len())
            .filter(|&j| f.slack(&local[j]) == 0)
            .map(|j| face[j])
            .collect();
        for mut simplex in triangulate_face(vertices, &sub)? {
            simplex.push(face[apex]);
            simplex.sort_unstable();
            out.push(simplex);
        }
    }
    Ok(out)
}

/// `n! * vol(P)`, the sum of `|det|` over the simplices of [`triangulate`].
pub fn normalized_volume(p: &LatticePolytope) -> Result<u64> {
    if p.dim() == 0 {
        return Ok(1);
    }
    let verts = p.vertices();
    let mut total: i128 = 0;
    for s in triangulate(p)? {
        if s.len() != p.dim() + 1 {
            return Err(Error::InternalInconsistency(format!(
                "triangulation produced a cell with {} vertices in dimension {}",
                s.len(),
                p.dim()
            )));
        }
        let base = &verts[s[0]];
        let edges: Vec<Vec<i64>> = s[1..]
            .iter()
            .map(|&i| verts[i].iter().zip(base).map(|(a, b)| a - b).collect())
            .collect();
        total += determinant(&edges)?.abs();
    }
    u64::try_from(total).map_err(|_| Error::Overflow)
}
