//! Lattice pyramids: construction, geometric detection and peeling.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::normal_form::are_equivalent;
use crate::polytope::{polytope_in_affine_span, LatticePolytope, Point};

/// `conv((P, 0), e_{n+1})`, the pyramid of height one over `P`.
pub fn pyramid(p: &LatticePolytope) -> LatticePolytope {
    let n = p.dim();
    let mut verts: Vec<Point> = p
        .vertices()
        .iter()
        .map(|v| v.iter().copied().chain(std::iter::once(0)).collect())
        .collect();
    let mut apex = vec![0; n + 1];
    apex[n] = 1;
    verts.push(apex);
    LatticePolytope::new(n + 1, verts).expect("pyramid over a full-dimensional polytope")
}

pub fn k_fold_pyramid(p: &LatticePolytope, k: usize) -> LatticePolytope {
    (0..k).fold(p.clone(), |acc, _| pyramid(&acc))
}

/// Facet index for which `vertex` is an apex, if any: every other vertex
/// lies on the facet and `vertex` sits at lattice height one above it.
fn apex_facet(p: &LatticePolytope, vertex: usize) -> Option<usize> {
    let v = &p.vertices()[vertex];
    p.facets().facets.iter().position(|f| {
        f.slack(v) == 1
            && p.vertices()
                .iter()
                .enumerate()
                .all(|(i, w)| i == vertex || f.slack(w) == 0)
    })
}

/// Indices of vertices `v` with `P ≅ Π(F)` for the facet `F` opposite `v`.
pub fn geometric_pyramid_apexes(p: &LatticePolytope) -> Vec<usize> {
    (0..p.num_vertices())
        .filter(|&i| apex_facet(p, i).is_some())
        .collect()
}

/// The base of the pyramid with the given apex, re-embedded in its own lattice.
pub fn base_without_apex(p: &LatticePolytope, apex: usize) -> Result<LatticePolytope> {
    let others: Vec<Point> = p
        .vertices()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != apex)
        .map(|(_, v)| v.clone())
        .collect();
    polytope_in_affine_span(&others)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PyramidDecomposition {
    pub core: LatticePolytopeData,
    pub multiplicity: usize,
    /// The apex removed at each step, in the coordinates of that step.
    pub apex_chain: Vec<Point>,
}

/// Serializable mirror of a polytope, used inside reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticePolytopeData {
    pub dim: usize,
    pub vertices: Vec<Point>,
}

impl PyramidDecomposition {
    pub fn core_polytope(&self) -> LatticePolytope {
        if self.core.dim == 0 {
            return LatticePolytope::point();
        }
        LatticePolytope::new(self.core.dim, self.core.vertices.clone())
            .expect("core was built from a valid polytope")
    }
}

/// Which apex to strip when several are available.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ApexChoice {
    #[default]
    First,
    Last,
}

pub fn peel(p: &LatticePolytope) -> Result<PyramidDecomposition> {
    peel_with(p, ApexChoice::First)
}

/// Strip apexes until none is left.
pub fn peel_with(p: &LatticePolytope, choice: ApexChoice) -> Result<PyramidDecomposition> {
    let mut current = p.clone();
    let mut chain = Vec::new();
    loop {
        let apexes = geometric_pyramid_apexes(&current);
        let pick = match choice {
            ApexChoice::First => apexes.first(),
            ApexChoice::Last => apexes.last(),
        };
        let Some(&a) = pick else { break };
        chain.push(current.vertices()[a].clone());
        current = base_without_apex(&current, a)?;
    }
    Ok(PyramidDecomposition {
        core: LatticePolytopeData {
            dim: current.dim(),
            vertices: current.vertices().to_vec(),
        },
        multiplicity: chain.len(),
        apex_chain: chain,
    })
}

/// True iff the `k`-fold pyramids of pairwise inequivalent polytopes are
/// again pairwise inequivalent.
pub fn pyramid_injectivity_check(ps: &[LatticePolytope], k: usize) -> Result<bool> {
    let lifted: Vec<LatticePolytope> = ps.iter().map(|p| k_fold_pyramid(p, k)).collect();
    for i in 0..lifted.len() {
        for j in i + 1..lifted.len() {
            if lifted[i].dim() == lifted[j].dim() && are_equivalent(&lifted[i], &lifted[j])? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
