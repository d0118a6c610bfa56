//! Ehrhart counts, the h*-polynomial, degree and codegree.
//!
//! The h*-polynomial is read off from `L(0), ..., L(n)` with the finite
//! binomial transform `h*_j = Σ_{i<=j} (-1)^i C(n+1, i) L(j-i)`, which is the
//! truncation of `(1-t)^{n+1} Σ L(k) t^k`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::binomial;
use crate::points::{count_in_dilate, count_interior_in_dilate};
use crate::polytope::LatticePolytope;
use crate::volume::normalized_volume;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HStarPolynomial {
    coefficients: Vec<u64>,
    ambient_dim: usize,
}

impl HStarPolynomial {
    /// Validates `h*_0 = 1`, a nonzero leading coefficient and `d <= n`.
    pub fn new(coefficients: Vec<u64>, ambient_dim: usize) -> Result<Self> {
        if coefficients.first() != Some(&1) {
            return Err(Error::InvalidInput("h*_0 must be 1".into()));
        }
        if coefficients.last() == Some(&0) {
            return Err(Error::InvalidInput("leading h* coefficient is zero".into()));
        }
        if coefficients.len() > ambient_dim + 1 {
            return Err(Error::InvalidInput(format!(
                "degree {} exceeds dimension {ambient_dim}",
                coefficients.len() - 1
            )));
        }
        Ok(HStarPolynomial {
            coefficients,
            ambient_dim,
        })
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn codegree(&self) -> usize {
        self.ambient_dim + 1 - self.degree()
    }

    /// `h*(1)`, which equals the normalized volume.
    pub fn sum(&self) -> u64 {
        self.coefficients.iter().sum()
    }

    pub fn leading(&self) -> u64 {
        *self.coefficients.last().unwrap()
    }

    pub fn coefficient(&self, i: usize) -> u64 {
        self.coefficients.get(i).copied().unwrap_or(0)
    }

    /// Coefficients padded with zeros to length `len`.
    pub fn padded(&self, len: usize) -> Vec<u64> {
        (0..len.max(self.coefficients.len()))
            .map(|i| self.coefficient(i))
            .collect()
    }

    /// `L(k)`: coefficient of `t^k` in `h*(t) / (1-t)^{n+1}`.
    pub fn ehrhart_count(&self, k: u64) -> u128 {
        let n = self.ambient_dim as i64;
        self.coefficients
            .iter()
            .enumerate()
            .map(|(i, &h)| h as u128 * binomial(n + k as i64 - i as i64, n).max(0) as u128)
            .sum()
    }

    /// `L°(k)`: coefficient of `t^k` in `t^{n+1} h*(1/t) / (1-t)^{n+1}`.
    pub fn interior_count(&self, k: u64) -> u128 {
        let n = self.ambient_dim as i64;
        self.coefficients
            .iter()
            .enumerate()
            .map(|(i, &h)| {
                let shift = n + 1 - i as i64;
                let j = k as i64 - shift;
                if j < 0 {
                    0
                } else {
                    h as u128 * binomial(n + j, n) as u128
                }
            })
            .sum()
    }
}

impl fmt::Display for HStarPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coefficients.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{c}t")?,
                (_, 1) => write!(f, "t^{i}")?,
                _ => write!(f, "{c}t^{i}")?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EhrhartData {
    /// `L(0..=K)`.
    pub counts: Vec<u64>,
    /// `L°(1..=K)`; index 0 holds `L°(1)`.
    pub interior_counts: Vec<u64>,
}

pub fn ehrhart_data(p: &LatticePolytope, max_k: u64) -> Result<EhrhartData> {
    if (max_k as usize) < p.dim() {
        return Err(Error::InvalidInput(format!(
            "need at least {} dilations, got {max_k}",
            p.dim()
        )));
    }
    let counts = (0..=max_k).map(|k| count_in_dilate(p, k)).collect();
    let interior_counts = (1..=max_k)
        .map(|k| count_interior_in_dilate(p, k))
        .collect();
    Ok(EhrhartData {
        counts,
        interior_counts,
    })
}

/// Binomial transform of `L(0..=n)`.
///
/// Checks that `L(0) = 1`, that every coefficient is nonnegative, and that
/// re-expanding `h* / (1-t)^{n+1}` reproduces every supplied count.
pub fn hstar_from_series(counts: &[u64], n: usize) -> Result<HStarPolynomial> {
    if counts.len() < n + 1 {
        return Err(Error::MalformedSeries(format!(
            "need {} counts, got {}",
            n + 1,
            counts.len()
        )));
    }
    if counts[0] != 1 {
        return Err(Error::MalformedSeries(format!(
            "L(0) = {}, expected 1",
            counts[0]
        )));
    }
    let mut coeffs: Vec<u64> = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let mut h: i128 = 0;
        for i in 0..=j {
            let term = binomial(n as i64 + 1, i as i64) * counts[j - i] as i128;
            h += if i % 2 == 0 { term } else { -term };
        }
        if h < 0 {
            return Err(Error::MalformedSeries(format!("h*_{j} = {h} is negative")));
        }
        coeffs.push(h as u64);
    }
    while coeffs.len() > 1 && coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    let h = HStarPolynomial::new(coeffs, n).map_err(|e| Error::MalformedSeries(e.to_string()))?;
    for (k, &l) in counts.iter().enumerate() {
        if h.ehrhart_count(k as u64) != l as u128 {
            return Err(Error::MalformedSeries(format!(
                "re-expansion gives L({k}) = {}, series has {l}",
                h.ehrhart_count(k as u64)
            )));
        }
    }
    Ok(h)
}

pub fn hstar(p: &LatticePolytope) -> Result<HStarPolynomial> {
    let n = p.dim();
    let counts: Vec<u64> = (0..=n as u64).map(|k| count_in_dilate(p, k)).collect();
    hstar_from_series(&counts, n).map_err(|e| Error::InternalInconsistency(e.to_string()))
}

/// Degree and codegree of `P`; `deg + codeg = n + 1`.
///
/// The codegree is computed twice, as `n + 1 - deg h*` and as the smallest
/// dilation with an interior lattice point, and the two must agree.
pub fn degree_and_codegree(p: &LatticePolytope) -> Result<(usize, usize)> {
    let h = hstar(p)?;
    let codeg = h.codegree();
    let direct = (1..=p.dim() as u64 + 1)
        .find(|&k| count_interior_in_dilate(p, k) > 0)
        .ok_or_else(|| Error::InternalInconsistency("no interior point up to n+1".into()))?;
    if direct as usize != codeg {
        return Err(Error::InternalInconsistency(format!(
            "codegree from h* is {codeg}, first interior point appears at k = {direct}"
        )));
    }
    Ok((h.degree(), codeg))
}

pub fn degree(p: &LatticePolytope) -> Result<usize> {
    Ok(degree_and_codegree(p)?.0)
}

pub fn codegree(p: &LatticePolytope) -> Result<usize> {
    Ok(degree_and_codegree(p)?.1)
}

/// Compares directly counted `L°(k)` with the reciprocity prediction from
/// h* for `k = 1..=max_k`.
pub fn reciprocity_check(p: &LatticePolytope, max_k: u64) -> Result<bool> {
    let h = hstar(p)?;
    Ok((1..=max_k).all(|k| count_interior_in_dilate(p, k) as u128 == h.interior_count(k)))
}

/// Everything the `hstar` subcommand reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HStarReport {
    pub hstar: Vec<u64>,
    pub degree: usize,
    pub codegree: usize,
    pub nv: u64,
}

pub fn hstar_report(p: &LatticePolytope) -> Result<HStarReport> {
    let h = hstar(p)?;
    let (degree, codegree) = degree_and_codegree(p)?;
    let nv = normalized_volume(p)?;
    if nv != h.sum() {
        return Err(Error::InternalInconsistency(format!(
            "normalized volume {nv} differs from h*(1) = {}",
            h.sum()
        )));
    }
    Ok(HStarReport {
        hstar: h.coefficients().to_vec(),
        degree,
        codegree,
        nv,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_examples() {
        assert_eq!(
            hstar_from_series(&[1, 3, 6], 2).unwrap().coefficients(),
            &[1]
        );
        assert_eq!(
            hstar_from_series(&[1, 6, 15], 2).unwrap().coefficients(),
            &[1, 3]
        );
        assert_eq!(
            hstar_from_series(&[1, 4, 9], 2).unwrap().coefficients(),
            &[1, 1]
        );
        assert!(matches!(
            hstar_from_series(&[2, 4, 9], 2),
            Err(Error::MalformedSeries(_))
        ));
        assert!(matches!(
            hstar_from_series(&[1, 4], 2),
            Err(Error::MalformedSeries(_))
        ));
    }

    #[test]
    fn reexpansion_catches_inconsistent_tail() {
        // L(3) for the unit square is 16; 17 cannot come from a degree <= 2 h*.
        assert!(hstar_from_series(&[1, 4, 9, 17], 2).is_err());
        assert!(hstar_from_series(&[1, 4, 9, 16], 2).is_ok());
    }

    #[test]
    fn display() {
        let h = HStarPolynomial::new(vec![1, 7, 1], 2).unwrap();
        assert_eq!(h.to_string(), "1 + 7t + t^2");
        assert_eq!(
            HStarPolynomial::new(vec![1, 0, 1], 3).unwrap().to_string(),
            "1 + t^2"
        );
    }

    #[test]
    fn interior_series() {
        let square = HStarPolynomial::new(vec![1, 1], 2).unwrap();
        let got: Vec<u128> = (1..=3).map(|k| square.interior_count(k)).collect();
        assert_eq!(got, vec![0, 1, 4]);
        let simplex = HStarPolynomial::new(vec![1], 2).unwrap();
        assert_eq!(simplex.interior_count(3), 1);
        assert_eq!(simplex.interior_count(4), 3);
    }

    #[test]
    fn rejects_bad_polynomials() {
        assert!(HStarPolynomial::new(vec![2, 1], 2).is_err());
        assert!(HStarPolynomial::new(vec![1, 0], 2).is_err());
        assert!(HStarPolynomial::new(vec![1, 1, 1, 1], 2).is_err());
    }
}
