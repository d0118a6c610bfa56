use crate::ehrhart::hstar;
use crate::error::{Error, Result};
use crate::polytope::{LatticePolytope, Point};
use crate::pyramid::k_fold_pyramid;
use crate::volume::normalized_volume;

/// Vertical segments of heights `k_1 <= ... <= k_n` over the vertices
/// `0, e_1, ..., e_{n-1}` of a unimodular simplex in `x_n = 0`.
///
/// The result is checked to have `h* = 1 + (Σk - 1)t` and `nv = Σk`.
pub fn lawrence_prism(heights: &[u64]) -> Result<LatticePolytope> {
    let n = heights.len();
    if n == 0 {
        return Err(Error::InvalidInput("no heights given".into()));
    }
    if heights.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidInput(format!(
            "heights {heights:?} are not sorted ascending"
        )));
    }
    if heights.iter().all(|&k| k == 0) {
        return Err(Error::AllHeightsZero);
    }
    let mut verts: Vec<Point> = Vec::with_capacity(2 * n);
    for (i, &k) in heights.iter().enumerate() {
        let mut u = vec![0i64; n];
        if i > 0 {
            u[i - 1] = 1;
        }
        if k > 0 {
            let mut top = u.clone();
            top[n - 1] = i64::try_from(k).map_err(|_| Error::Overflow)?;
            verts.push(top);
        }
        verts.push(u);
    }
    let p = LatticePolytope::new(n, verts)?;

    let sum: u64 = heights.iter().sum();
    let h = hstar(&p)?;
    let expected: Vec<u64> = if sum == 1 { vec![1] } else { vec![1, sum - 1] };
    let nv = normalized_volume(&p)?;
    if h.coefficients() != expected.as_slice() || nv != sum {
        return Err(Error::InternalInconsistency(format!(
            "prism {heights:?} has h* = {h} and nv = {nv}, expected 1 + {}t and {sum}",
            sum - 1
        )));
    }
    Ok(p)
}

/// `T = conv{(0,0), (2,0), (0,2)}`.
pub fn triangle_t() -> LatticePolytope {
    LatticePolytope::new(2, vec![vec![0, 0], vec![2, 0], vec![0, 2]]).expect("valid triangle")
}

/// `Π^{n-2}(T)`: the one family with linear h* that is not a Lawrence prism.
pub fn exceptional_triangle(n: usize) -> Result<LatticePolytope> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("dimension {n} is below 2")));
    }
    Ok(k_fold_pyramid(&triangle_t(), n - 2))
}
