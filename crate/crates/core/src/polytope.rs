//! Full-dimensional lattice polytopes and the affine unimodular group.

use std::fmt;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hull;
use crate::linalg::{self, checked_dot, determinant, hermite_with_transform, Matrix};

pub type Point = Vec<i64>;

/// A facet inequality `<normal, x> <= offset` with primitive `normal`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Facet {
    pub normal: Vec<i64>,
    pub offset: i64,
}

impl Facet {
    /// Lattice distance `offset - <normal, x>`; zero exactly on the facet.
    pub fn slack(&self, x: &[i64]) -> i64 {
        self.offset - linalg::dot(&self.normal, x)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetDescription {
    pub facets: Vec<Facet>,
}

impl FacetDescription {
    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.facets.iter().all(|f| f.slack(x) >= 0)
    }
}

/// Facet description of `conv(points)` for an arbitrary full-dimensional point set.
pub fn facet_description(dim: usize, points: &[Point]) -> Result<FacetDescription> {
    let facets = hull::facets(dim, points)?
        .into_iter()
        .map(|(normal, offset)| Facet { normal, offset })
        .collect();
    Ok(FacetDescription { facets })
}

/// A full-dimensional lattice polytope in `R^dim`, stored by its vertices.
///
/// Vertices are kept in lexicographic order, so "vertex index" is a
/// deterministic notion. The facet description is computed on construction.
#[derive(Clone)]
pub struct LatticePolytope {
    dim: usize,
    vertices: Vec<Point>,
    facets: FacetDescription,
    projections: OnceLock<Vec<FacetDescription>>,
}

impl PartialEq for LatticePolytope {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.vertices == other.vertices
    }
}

impl Eq for LatticePolytope {}

impl fmt::Debug for LatticePolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LatticePolytope")
            .field("dim", &self.dim)
            .field("vertices", &self.vertices)
            .finish()
    }
}

impl LatticePolytope {
    /// Build from a list that must consist of vertices only.
    ///
    /// Rejects empty input, duplicates, points that are not extreme, and
    /// vertex sets that are not full-dimensional.
    pub fn new(dim: usize, vertices: Vec<Point>) -> Result<Self> {
        let mut sorted = vertices;
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Validation("duplicate vertex".into()));
        }
        let facets = facet_description(dim, &sorted)?;
        if let Some(v) = sorted.iter().find(|v| !is_extreme(dim, &facets, v)) {
            return Err(Error::Validation(format!(
                "point {v:?} is not a vertex of the convex hull"
            )));
        }
        Ok(LatticePolytope {
            dim,
            vertices: sorted,
            facets,
            projections: OnceLock::new(),
        })
    }

    /// Convex hull of arbitrary lattice points; non-extreme points and
    /// duplicates are dropped.
    pub fn from_points(dim: usize, points: Vec<Point>) -> Result<Self> {
        let mut pts = points;
        pts.sort();
        pts.dedup();
        let facets = facet_description(dim, &pts)?;
        pts.retain(|v| is_extreme(dim, &facets, v));
        Ok(LatticePolytope {
            dim,
            vertices: pts,
            facets,
            projections: OnceLock::new(),
        })
    }

    /// The 0-dimensional polytope: one point in `Z^0`.
    pub fn point() -> Self {
        LatticePolytope {
            dim: 0,
            vertices: vec![vec![]],
            facets: FacetDescription { facets: vec![] },
            projections: OnceLock::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn facets(&self) -> &FacetDescription {
        &self.facets
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.facets.contains(x)
    }

    /// Indices of the vertices lying on the given facet.
    pub fn vertices_on(&self, facet: &Facet) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&i| facet.slack(&self.vertices[i]) == 0)
            .collect()
    }

    /// Facet descriptions of the projections onto the first `i` coordinates,
    /// for `i = 1..=dim`; the last entry is the polytope's own description.
    pub(crate) fn projections(&self) -> &[FacetDescription] {
        self.projections.get_or_init(|| {
            (1..=self.dim)
                .map(|i| {
                    if i == self.dim {
                        return self.facets.clone();
                    }
                    let pts: Vec<Point> = self.vertices.iter().map(|v| v[..i].to_vec()).collect();
                    facet_description(i, &pts).expect("projection of a full-dimensional polytope")
                })
                .collect()
        })
    }

    /// Coordinatewise bounding box `(min, max)`.
    pub fn bounding_box(&self) -> (Point, Point) {
        let mut lo = self.vertices[0].clone();
        let mut hi = self.vertices[0].clone();
        for v in &self.vertices {
            for i in 0..self.dim {
                lo[i] = lo[i].min(v[i]);
                hi[i] = hi[i].max(v[i]);
            }
        }
        (lo, hi)
    }
}

fn is_extreme(dim: usize, facets: &FacetDescription, v: &[i64]) -> bool {
    let tight: Vec<Vec<i64>> = facets
        .facets
        .iter()
        .filter(|f| f.slack(v) == 0)
        .map(|f| f.normal.clone())
        .collect();
    dim == 0 || (tight.len() >= dim && linalg::rank(&tight) == dim)
}

/// `x -> linear * x + shift` with `|det(linear)| = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineUnimodularMap {
    pub linear: Matrix,
    pub shift: Vec<i64>,
}

impl AffineUnimodularMap {
    pub fn new(linear: Matrix, shift: Vec<i64>) -> Result<Self> {
        let n = linear.len();
        if linear.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidInput("linear part must be square".into()));
        }
        if shift.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: shift.len(),
            });
        }
        if determinant(&linear)?.abs() != 1 {
            return Err(Error::InvalidInput("linear part is not unimodular".into()));
        }
        Ok(AffineUnimodularMap { linear, shift })
    }

    pub fn identity(n: usize) -> Self {
        AffineUnimodularMap {
            linear: linalg::identity(n),
            shift: vec![0; n],
        }
    }

    pub fn dim(&self) -> usize {
        self.shift.len()
    }

    pub fn apply(&self, x: &[i64]) -> Result<Point> {
        self.linear
            .iter()
            .zip(&self.shift)
            .map(|(row, s)| checked_dot(row, x)?.checked_add(*s).ok_or(Error::Overflow))
            .collect()
    }
}

pub fn apply_map(p: &LatticePolytope, g: &AffineUnimodularMap) -> Result<LatticePolytope> {
    if g.dim() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            got: g.dim(),
        });
    }
    let verts = p
        .vertices()
        .iter()
        .map(|v| g.apply(v))
        .collect::<Result<Vec<_>>>()?;
    LatticePolytope::new(p.dim(), verts)
}

/// A seeded random element of `AGL(dim, Z)`.
///
/// The linear part is a product of `complexity` elementary operations
/// (row additions with multiplier in `±1..=2`, swaps, sign flips); the shift
/// has entries in `-3..=3`. Complexity zero yields the identity.
pub fn random_unimodular_map(dim: usize, seed: u64, complexity: usize) -> AffineUnimodularMap {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = linalg::identity(dim);
    if dim == 0 || complexity == 0 {
        return AffineUnimodularMap::identity(dim);
    }
    for _ in 0..complexity {
        match rng.gen_range(0..4) {
            0 | 1 if dim > 1 => {
                let i = rng.gen_range(0..dim);
                let mut j = rng.gen_range(0..dim - 1);
                if j >= i {
                    j += 1;
                }
                let c = rng.gen_range(1..=2) * if rng.gen_bool(0.5) { 1 } else { -1 };
                let src = m[j].clone();
                for (a, b) in m[i].iter_mut().zip(src) {
                    *a += c * b;
                }
            }
            2 if dim > 1 => {
                let i = rng.gen_range(0..dim);
                let j = rng.gen_range(0..dim);
                m.swap(i, j);
            }
            _ => {
                let i = rng.gen_range(0..dim);
                for a in m[i].iter_mut() {
                    *a = -*a;
                }
            }
        }
    }
    let shift = (0..dim).map(|_| rng.gen_range(-3..=3)).collect();
    AffineUnimodularMap { linear: m, shift }
}

/// Re-embed lattice points spanning an `m`-dimensional affine subspace of
/// `Z^N` as points of `Z^m`, using a basis of the saturated lattice of the
/// span. Full-dimensional input is returned unchanged.
///
/// The basis comes from a unimodular `u` with `u * D^T` in Hermite form,
/// where `D` holds the differences to the first point; the first `m`
/// coordinates of `u * (p - p0)` are lattice coordinates on the span.
pub fn project_to_full_dim(points: &[Point]) -> Result<(usize, Vec<Point>)> {
    let Some(p0) = points.first() else {
        return Err(Error::InvalidInput("empty point set".into()));
    };
    let ambient = p0.len();
    let m = hull::affine_rank(points);
    if m == ambient {
        return Ok((m, points.to_vec()));
    }
    let diffs: Vec<Point> = points
        .iter()
        .map(|p| p.iter().zip(p0).map(|(a, b)| a - b).collect())
        .collect();
    let (_, u) = hermite_with_transform(&linalg::transpose(&diffs))?;
    let out = diffs
        .iter()
        .map(|d| {
            let full = linalg::mat_vec(&u, d)?;
            debug_assert!(full[m..].iter().all(|&x| x == 0));
            Ok(full[..m].to_vec())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((m, out))
}

/// Project and rebuild as a polytope in its own affine lattice.
pub fn polytope_in_affine_span(points: &[Point]) -> Result<LatticePolytope> {
    let (m, pts) = project_to_full_dim(points)?;
    if m == 0 {
        return Ok(LatticePolytope::point());
    }
    LatticePolytope::from_points(m, pts)
}
