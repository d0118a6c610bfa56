//! Named standard polytopes and loading of corpus directories.

use std::collections::BTreeMap;
use std::path::Path;

use crate::classify::{lawrence_prism, triangle_t};
use crate::error::{Error, Result};
use crate::io::read_polytope;
use crate::polytope::{LatticePolytope, Point};
use crate::pyramid::pyramid;

fn build(dim: usize, vertices: Vec<Point>) -> LatticePolytope {
    LatticePolytope::new(dim, vertices).expect("hand-written polytope is valid")
}

/// `conv{0, e_1, ..., e_n}`.
pub fn unit_simplex(n: usize) -> LatticePolytope {
    if n == 0 {
        return LatticePolytope::point();
    }
    let mut verts = vec![vec![0; n]];
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        verts.push(e);
    }
    build(n, verts)
}

pub fn unit_cube(n: usize) -> LatticePolytope {
    let verts = (0..1u64 << n)
        .map(|mask| (0..n).map(|i| ((mask >> i) & 1) as i64).collect())
        .collect();
    build(n, verts)
}

/// `conv{±e_1, ..., ±e_n}`.
pub fn cross_polytope(n: usize) -> LatticePolytope {
    let mut verts = Vec::new();
    for i in 0..n {
        for s in [-1, 1] {
            let mut e = vec![0; n];
            e[i] = s;
            verts.push(e);
        }
    }
    build(n, verts)
}

/// `conv{0, e_1, e_2, (1, 1, r)}`: an empty tetrahedron with `h* = 1 + (r-1)t^2`.
pub fn reeve_simplex(r: i64) -> LatticePolytope {
    build(
        3,
        vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, r]],
    )
}

pub fn segment(len: i64) -> LatticePolytope {
    build(1, vec![vec![0], vec![len]])
}

/// `conv{0, (k, 0), (0, k)}`.
pub fn dilated_triangle(k: i64) -> LatticePolytope {
    build(2, vec![vec![0, 0], vec![k, 0], vec![0, k]])
}

/// The hexagon with one interior lattice point.
pub fn hexagon() -> LatticePolytope {
    build(
        2,
        vec![
            vec![1, 0],
            vec![0, 1],
            vec![-1, 1],
            vec![-1, 0],
            vec![0, -1],
            vec![1, -1],
        ],
    )
}

/// Pairwise inequivalent test polytopes in dimensions one to three, keyed by
/// the names used for the shipped corpus files.
pub fn standard_corpus() -> BTreeMap<&'static str, LatticePolytope> {
    let mut m = BTreeMap::new();
    m.insert("unit-segment", segment(1));
    m.insert("segment-3", segment(3));
    m.insert("unit-triangle", unit_simplex(2));
    m.insert("unit-square", unit_cube(2));
    m.insert("triangle-t", triangle_t());
    m.insert("triangle-3t", dilated_triangle(3));
    m.insert("hexagon", hexagon());
    m.insert("prism-0-2", lawrence_prism(&[0, 2]).expect("valid heights"));
    m.insert("unit-tetrahedron", unit_simplex(3));
    m.insert("reeve", reeve_simplex(2));
    m.insert("reeve-3", reeve_simplex(3));
    m.insert("unit-cube", unit_cube(3));
    m.insert(
        "prism-1-1-2",
        lawrence_prism(&[1, 1, 2]).expect("valid heights"),
    );
    m.insert("pyramid-t", pyramid(&triangle_t()));
    m.insert("octahedron", cross_polytope(3));
    m
}

/// Every `*.txt` and `*.json` polytope file directly inside `dir`, keyed by
/// file stem.
pub fn load_corpus(dir: &Path) -> Result<BTreeMap<String, LatticePolytope>> {
    let mut out = BTreeMap::new();
    for entry in std::fs::read_dir(dir)? {
        let path = entry?.path();
        if !path.is_file() {
            continue;
        }
        let ext = path
            .extension()
            .and_then(|e| e.to_str())
            .unwrap_or_default();
        if ext != "txt" && ext != "json" {
            continue;
        }
        let stem = path
            .file_stem()
            .and_then(|s| s.to_str())
            .ok_or_else(|| Error::InvalidInput(format!("bad file name {}", path.display())))?
            .to_string();
        let p = read_polytope(&path).map_err(|e| match e {
            Error::Parse {
                line,
                column,
                message,
            } => Error::Parse {
                line,
                column,
                message: format!("{}: {message}", path.display()),
            },
            other => other,
        })?;
        if out.insert(stem.clone(), p).is_some() {
            return Err(Error::InvalidInput(format!(
                "duplicate corpus entry `{stem}`"
            )));
        }
    }
    Ok(out)
}

/// Golden h*-vectors, stored as a JSON object from corpus name to coefficients.
pub fn load_golden(path: &Path) -> Result<BTreeMap<String, Vec<u64>>> {
    let text = std::fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: format!("{}: {e}", path.display()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ehrhart::hstar;

    #[test]
    fn standard_hstars() {
        let c = standard_corpus();
        let h = |name: &str| hstar(&c[name]).unwrap().coefficients().to_vec();
        assert_eq!(h("segment-3"), vec![1, 2]);
        assert_eq!(h("triangle-3t"), vec![1, 7, 1]);
        assert_eq!(h("hexagon"), vec![1, 4, 1]);
        assert_eq!(h("reeve-3"), vec![1, 0, 2]);
        assert_eq!(h("unit-cube"), vec![1, 4, 1]);
        assert_eq!(h("octahedron"), vec![1, 3, 3, 1]);
        assert_eq!(h("prism-1-1-2"), vec![1, 3]);
    }
}
