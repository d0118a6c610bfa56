//! Exact integer linear algebra on small dense matrices.
//!
//! Matrices are `Vec<Vec<i64>>` in row-major order. Intermediate values are
//! carried in `i128` with checked operations; anything that would overflow
//! surfaces as [`Error::Overflow`] rather than a wrong answer. Ranks of large
//! matrices can be taken modulo a prime or with arbitrary-precision
//! fraction-free elimination.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

pub type Matrix = Vec<Vec<i64>>;

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a as i64
}

fn gcd128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a as i128
}

/// Gcd of all entries; zero for the zero vector.
pub fn content(v: &[i64]) -> i64 {
    v.iter().fold(0, |g, &x| gcd(g, x))
}

/// Divide a vector by the gcd of its entries. The zero vector is returned as is.
pub fn primitive(v: &[i64]) -> Vec<i64> {
    let g = content(v);
    if g <= 1 {
        return v.to_vec();
    }
    v.iter().map(|x| x / g).collect()
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn checked_dot(a: &[i64], b: &[i64]) -> Result<i64> {
    let mut acc: i128 = 0;
    for (x, y) in a.iter().zip(b) {
        acc = acc
            .checked_add(*x as i128 * *y as i128)
            .ok_or(Error::Overflow)?;
    }
    narrow(acc)
}

pub(crate) fn narrow(x: i128) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow)
}

fn to_i128(m: &[Vec<i64>]) -> Vec<Vec<i128>> {
    m.iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect()
}

/// Determinant of a square matrix by Bareiss fraction-free elimination.
pub fn determinant(m: &[Vec<i64>]) -> Result<i128> {
    let n = m.len();
    if n == 0 {
        return Ok(1);
    }
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidInput(
            "determinant of a non-square matrix".into(),
        ));
    }
    let mut a = to_i128(m);
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return Ok(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[i][j]
                    .checked_mul(a[k][k])
                    .and_then(|x| x.checked_sub(a[i][k].checked_mul(a[k][j])?))
                    .ok_or(Error::Overflow)?;
                a[i][j] = t / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Ok(sign * a[n - 1][n - 1])
}

/// Rank over the rationals. Rows are eliminated with content removal in
/// `i128`; on overflow the computation is redone with big integers.
pub fn rank(m: &[Vec<i64>]) -> usize {
    match rank_i128(m) {
        Some(r) => r,
        None => rank_bigint(m),
    }
}

fn rank_i128(m: &[Vec<i64>]) -> Option<usize> {
    let mut rows: Vec<Vec<i128>> = to_i128(m);
    let cols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r].clone();
        for row in rows.iter_mut().skip(r + 1) {
            if row[c] == 0 {
                continue;
            }
            let f = row[c];
            let mut g = 0i128;
            for j in c..cols {
                row[j] = row[j]
                    .checked_mul(pivot[c])?
                    .checked_sub(pivot[j].checked_mul(f)?)?;
                g = gcd128(g, row[j]);
            }
            if g > 1 {
                for x in row.iter_mut().skip(c) {
                    *x /= g;
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    Some(r)
}

/// Rank over the rationals with arbitrary-precision Bareiss elimination.
pub fn rank_bigint(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let t = &a[i][j] * &a[r][c] - &a[i][c] * &a[r][j];
                a[i][j] = t / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// The Mersenne prime 2^61 - 1.
pub const MODULUS: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % MODULUS as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    r
}

/// Rank over the prime field of order [`MODULUS`].
///
/// Reduction modulo a prime never increases rank, so this is a lower bound
/// for the rational rank.
pub fn rank_mod_p(m: &[Vec<i64>]) -> usize {
    let reduce = |x: i64| x.rem_euclid(MODULUS as i64) as u64;
    let mut a: Vec<Vec<u64>> = m
        .iter()
        .map(|r| r.iter().map(|&x| reduce(x)).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, p);
        let inv = pow_mod(a[r][c], MODULUS - 2);
        for x in a[r].iter_mut().skip(c) {
            *x = mul_mod(*x, inv);
        }
        let pivot = a[r].clone();
        for row in a.iter_mut().skip(r + 1) {
            let f = row[c];
            if f == 0 {
                continue;
            }
            for j in c..cols {
                let sub = mul_mod(f, pivot[j]);
                row[j] = (row[j] + MODULUS - sub) % MODULUS;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Row-style Hermite normal form together with the unimodular transform.
///
/// Returns `(h, u)` with `u * m = h`, where `h` is in row echelon form,
/// every pivot is positive, entries above a pivot lie in `[0, pivot)`, and
/// zero rows sit at the bottom. `h` depends only on the orbit of `m` under
/// left multiplication by `GL(rows, Z)`.
pub fn hermite_with_transform(m: &[Vec<i64>]) -> Result<(Matrix, Matrix)> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut a = to_i128(m);
    let mut u: Vec<Vec<i128>> = (0..rows)
        .map(|i| (0..rows).map(|j| i128::from(i == j)).collect())
        .collect();

    // row_i <- row_i - q * row_p, applied to both a and u
    fn sub_mul(x: &mut [Vec<i128>], i: usize, p: usize, q: i128) -> Result<()> {
        if q == 0 {
            return Ok(());
        }
        let (lo, hi) = if i < p { (i, p) } else { (p, i) };
        let (left, right) = x.split_at_mut(hi);
        let (ri, rp) = if i < p {
            (&mut left[lo], &right[0])
        } else {
            (&mut right[0], &left[lo])
        };
        for (a, b) in ri.iter_mut().zip(rp.iter()) {
            *a = a
                .checked_sub(b.checked_mul(q).ok_or(Error::Overflow)?)
                .ok_or(Error::Overflow)?;
        }
        Ok(())
    }

    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // Euclid on column c among rows r.. until a single nonzero remains.
        loop {
            let nonzero: Vec<usize> = (r..rows).filter(|&i| a[i][c] != 0).collect();
            if nonzero.is_empty() {
                break;
            }
            let p = *nonzero
                .iter()
                .min_by_key(|&&i| a[i][c].unsigned_abs())
                .unwrap();
            if nonzero.len() == 1 {
                a.swap(r, p);
                u.swap(r, p);
                break;
            }
            for &i in &nonzero {
                if i != p {
                    let q = a[i][c].div_euclid(a[p][c]);
                    sub_mul(&mut a, i, p, q)?;
                    sub_mul(&mut u, i, p, q)?;
                }
            }
        }
        if a[r][c] == 0 {
            continue;
        }
        if a[r][c] < 0 {
            for x in a[r].iter_mut().chain(u[r].iter_mut()) {
                *x = -*x;
            }
        }
        for i in 0..r {
            let q = a[i][c].div_euclid(a[r][c]);
            sub_mul(&mut a, i, r, q)?;
            sub_mul(&mut u, i, r, q)?;
        }
        r += 1;
    }
    let back = |x: Vec<Vec<i128>>| -> Result<Matrix> {
        x.into_iter()
            .map(|row| row.into_iter().map(narrow).collect())
            .collect()
    };
    Ok((back(a)?, back(u)?))
}

pub fn hermite(m: &[Vec<i64>]) -> Result<Matrix> {
    Ok(hermite_with_transform(m)?.0)
}

pub fn transpose(m: &[Vec<i64>]) -> Matrix {
    let cols = m.first().map_or(0, |r| r.len());
    (0..cols)
        .map(|j| m.iter().map(|r| r[j]).collect())
        .collect()
}

pub fn mat_vec(m: &[Vec<i64>], v: &[i64]) -> Result<Vec<i64>> {
    m.iter().map(|row| checked_dot(row, v)).collect()
}

pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Result<Matrix> {
    let bt = transpose(b);
    a.iter()
        .map(|row| bt.iter().map(|col| checked_dot(row, col)).collect())
        .collect()
}

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

/// Binomial coefficient in `i128`; zero when `k > n`.
pub fn binomial(n: i64, k: i64) -> i128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) as i128 / (i + 1) as i128;
    }
    r
}
