use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use super::{ClassEntry, ClassificationTable};
use crate::error::{Error, Result};
use crate::normal_form::{normal_form, NormalForm};
use crate::polytope::{LatticePolytope, Point};

pub const DEFAULT_VMAX: u64 = 8;

fn cross(o: &[i64; 2], a: &[i64; 2], b: &[i64; 2]) -> i64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Strict convex hull of lexicographically sorted points. Returns the number
/// of hull vertices and twice the enclosed area.
fn hull_2d(pts: &[[i64; 2]]) -> (usize, i64) {
    if pts.len() < 3 {
        return (pts.len(), 0);
    }
    let mut hull: Vec<[i64; 2]> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &[i64; 2]>> = if pass == 0 {
            Box::new(pts.iter())
        } else {
            Box::new(pts.iter().rev())
        };
        for p in iter {
            while hull.len() >= start + 2
                && cross(&hull[hull.len() - 2], &hull[hull.len() - 1], p) <= 0
            {
                hull.pop();
            }
            hull.push(*p);
        }
        hull.pop();
    }
    let area2: i64 = (0..hull.len())
        .map(|i| {
            let (a, b) = (hull[i], hull[(i + 1) % hull.len()]);
            a[0] * b[1] - a[1] * b[0]
        })
        .sum();
    (hull.len(), area2.abs())
}

/// Vertex sets of lattice polygons with `nv <= vmax` in `[0, b]^2` that touch
/// both coordinate axes, found by growing lexicographically increasing sets
/// in convex position.
fn polygons_in_box(vmax: u64, b: i64) -> Vec<Vec<[i64; 2]>> {
    let grid: Vec<[i64; 2]> = (0..=b).flat_map(|x| (0..=b).map(move |y| [x, y])).collect();
    let vmax = vmax as i64;

    fn grow(
        grid: &[[i64; 2]],
        vmax: i64,
        next: usize,
        cur: &mut Vec<[i64; 2]>,
        out: &mut Vec<Vec<[i64; 2]>>,
    ) {
        for i in next..grid.len() {
            cur.push(grid[i]);
            let (nverts, area2) = hull_2d(cur);
            if nverts == cur.len() && area2 <= vmax {
                if cur.len() >= 3 && cur.iter().any(|p| p[1] == 0) {
                    out.push(cur.clone());
                }
                grow(grid, vmax, i + 1, cur, out);
            }
            cur.pop();
        }
    }

    let starts: Vec<usize> = (0..grid.len()).filter(|&i| grid[i][0] == 0).collect();
    starts
        .par_iter()
        .flat_map_iter(|&s| {
            let mut out = Vec::new();
            let mut cur = vec![grid[s]];
            grow(&grid, vmax, s + 1, &mut cur, &mut out);
            out
        })
        .collect()
}

/// One representative per normal form, in normal-form order.
fn dedup_by_normal_form(polys: Vec<LatticePolytope>) -> Result<Vec<ClassEntry>> {
    let forms: Vec<(NormalForm, LatticePolytope)> = polys
        .into_par_iter()
        .map(|p| normal_form(&p).map(|nf| (nf, p)))
        .collect::<Result<_>>()?;
    let mut unique: BTreeMap<NormalForm, LatticePolytope> = BTreeMap::new();
    for (nf, p) in forms {
        unique.entry(nf).or_insert(p);
    }
    unique
        .values()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|p| ClassEntry::from_polytope(p))
        .collect()
}

/// All lattice polygons with `nv <= vmax` up to equivalence, bucketed by
/// `(nv, degree)`.
///
/// Candidates are searched in `[0, b]^2` with `b = box_size.unwrap_or(vmax)`.
pub fn enumerate_2d(
    vmax: u64,
    box_size: Option<u64>,
) -> Result<BTreeMap<(u64, usize), ClassificationTable>> {
    let b = box_size.unwrap_or(vmax);
    let b = i64::try_from(b).map_err(|_| Error::Overflow)?;
    let polys: Vec<LatticePolytope> = polygons_in_box(vmax, b)
        .into_iter()
        .map(|vs| LatticePolytope::new(2, vs.iter().map(|v| v.to_vec()).collect()))
        .collect::<Result<_>>()?;
    let mut buckets: BTreeMap<(u64, usize), Vec<ClassEntry>> = BTreeMap::new();
    for e in dedup_by_normal_form(polys)? {
        buckets.entry((e.nv, e.degree)).or_default().push(e);
    }
    Ok(buckets
        .into_iter()
        .map(|((v, d), cs)| ((v, d), ClassificationTable::new(v, Some(d), 2, cs)))
        .collect())
}

/// Ordered factorizations of `v` into `n` positive factors.
fn factorizations(v: u64, n: usize) -> Vec<Vec<u64>> {
    if n == 0 {
        return if v == 1 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for d in (1..=v).filter(|d| v.is_multiple_of(*d)) {
        for mut rest in factorizations(v / d, n - 1) {
            rest.insert(0, d);
            out.push(rest);
        }
    }
    out
}

/// Upper triangular Hermite normal forms with the given diagonal; column `j`
/// has entries in `[0, diag[j])` above the diagonal.
fn hermite_forms(diag: &[u64]) -> Vec<Vec<Vec<i64>>> {
    let n = diag.len();
    let mut out = Vec::new();
    let mut h = vec![vec![0i64; n]; n];
    for (i, &d) in diag.iter().enumerate() {
        h[i][i] = d as i64;
    }
    // Slots above the diagonal, column by column.
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|c| (0..c).map(move |r| (r, c))).collect();
    fn fill(
        slots: &[(usize, usize)],
        k: usize,
        h: &mut Vec<Vec<i64>>,
        diag: &[u64],
        out: &mut Vec<Vec<Vec<i64>>>,
    ) {
        if k == slots.len() {
            out.push(h.clone());
            return;
        }
        let (r, c) = slots[k];
        for x in 0..diag[c] as i64 {
            h[r][c] = x;
            fill(slots, k + 1, h, diag, out);
        }
        h[r][c] = 0;
    }
    fill(&slots, 0, &mut h, diag, &mut out);
    out
}

/// All lattice `n`-simplices with normalized volume `v` up to equivalence.
///
/// Each class contains `conv{0, columns of H}` for some upper triangular
/// Hermite normal form `H` with determinant `v`; duplicates are removed by
/// normal form. The table's degree is `None` because degrees vary.
pub fn enumerate_simplices(n: usize, v: u64) -> Result<ClassificationTable> {
    if n == 0 || v == 0 {
        return Err(Error::InvalidInput(format!(
            "need n >= 1 and V >= 1, got n = {n}, V = {v}"
        )));
    }
    let mut polys = Vec::new();
    for diag in factorizations(v, n) {
        for h in hermite_forms(&diag) {
            let mut verts: Vec<Point> = vec![vec![0; n]];
            verts.extend((0..n).map(|c| (0..n).map(|r| h[r][c]).collect::<Point>()));
            polys.push(LatticePolytope::new(n, verts)?);
        }
    }
    let classes = dedup_by_normal_form(polys)?;
    Ok(ClassificationTable::new(v, None, n, classes))
}

/// Degrees that occur among the classes of a table.
pub fn degrees_present(t: &ClassificationTable) -> BTreeSet<usize> {
    t.classes.iter().map(|c| c.degree).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hull_counts() {
        let sq = [[0, 0], [0, 1], [1, 0], [1, 1]];
        assert_eq!(hull_2d(&sq), (4, 2));
        assert_eq!(hull_2d(&[[0, 0], [1, 1], [2, 2]]).0, 2);
        assert_eq!(hull_2d(&[[0, 0], [0, 2], [1, 1], [2, 0]]), (3, 4));
    }

    #[test]
    fn factorizations_of_small_numbers() {
        assert_eq!(
            factorizations(4, 2),
            vec![vec![1, 4], vec![2, 2], vec![4, 1]]
        );
        assert_eq!(factorizations(1, 3), vec![vec![1, 1, 1]]);
        assert_eq!(hermite_forms(&[2, 3]).len(), 3);
    }

    #[test]
    fn small_polygon_counts() {
        let t = enumerate_2d(4, None).unwrap();
        assert_eq!(t[&(1, 0)].count, 1);
        assert_eq!(t[&(2, 1)].count, 2);
        assert_eq!(t[&(3, 1)].count, 2);
        assert_eq!(t[&(4, 1)].count, 4);
        assert_eq!(t[&(3, 2)].count, 1);
    }

    #[test]
    fn simplices() {
        assert_eq!(enumerate_simplices(2, 1).unwrap().count, 1);
        let t = enumerate_simplices(3, 2).unwrap();
        assert!(t.classes.iter().all(|c| c.nv == 2));
        assert!(t.classes.iter().any(|c| c.hstar == vec![1, 0, 1]));
    }
}
