//! Exact linear algebra: fraction-free (Bareiss) determinants and ranks over
//! ℤ, elimination mod p, and rational solves.

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn to_big(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
}

/// Bareiss elimination in place; returns the rank and, for square input of
/// full rank, the determinant.
fn bareiss(a: &mut [Vec<BigInt>]) -> (usize, BigInt) {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut prev = BigInt::one();
    let mut sign = 1i32;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            a.swap(p, r);
            sign = -sign;
        }
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    let det = if rows == cols && r == rows {
        if sign < 0 {
            -prev
        } else {
            prev
        }
    } else {
        BigInt::zero()
    };
    (r, det)
}

/// Determinant of a square integer matrix.
pub fn det(m: &[Vec<i64>]) -> BigInt {
    if m.is_empty() {
        return BigInt::one();
    }
    bareiss(&mut to_big(m)).1
}

/// Rank over ℚ.
pub fn rank_q(rows: &[Vec<i64>]) -> usize {
    bareiss(&mut to_big(rows)).0
}

/// Rank over GF(p), p prime.
pub fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    let p = p as i64;
    let mut a: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|v| v.mod_floor(&p)).collect()).collect();
    let n = a.len();
    let cols = if n == 0 { 0 } else { a[0].len() };
    let mut r = 0;
    for c in 0..cols {
        if r == n {
            break;
        }
        let Some(piv) = (r..n).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(piv, r);
        let inv = mod_inverse(a[r][c], p);
        for j in c..cols {
            a[r][j] = a[r][j] * inv % p;
        }
        for i in 0..n {
            if i != r && a[i][c] != 0 {
                let f = a[i][c];
                for j in c..cols {
                    a[i][j] = (a[i][j] - f * a[r][j]).mod_floor(&p);
                }
            }
        }
        r += 1;
    }
    r
}

fn mod_inverse(a: i64, p: i64) -> i64 {
    let e = i64::extended_gcd(&a, &p);
    e.x.mod_floor(&p)
}

/// Solves the square system `a x = b`; `None` when `a` is singular.
pub fn solve(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(p, c);
        let inv = m[c][c].recip();
        for j in c..=n {
            m[c][j] = &m[c][j] * &inv;
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=n {
                    let t = &f * &m[c][j];
                    m[i][j] -= t;
                }
            }
        }
    }
    Some(m.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// Integral inverse of a matrix with determinant ±1.
pub fn unimodular_inverse(m: &[Vec<i64>]) -> Option<Vec<Vec<i64>>> {
    let d = det(m);
    if !d.abs().is_one() {
        return None;
    }
    let n = m.len();
    let a: Vec<Vec<BigRational>> = m.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let e: Vec<BigRational> = (0..n).map(|i| if i == j { rat(1) } else { rat(0) }).collect();
        cols.push(solve(&a, &e)?);
    }
    let mut inv = alloc::vec![alloc::vec![0i64; n]; n];
    for (j, col) in cols.iter().enumerate() {
        for i in 0..n {
            inv[i][j] = col[i].to_integer().to_i64()?;
        }
    }
    Some(inv)
}

/// `m · v` for an integer matrix.
pub fn mat_vec(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter().map(|row| dot(row, v)).collect()
}

/// `mᵀ · v` for an integer matrix.
pub fn mat_t_vec(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    let n = m.first().map_or(0, |r| r.len());
    (0..n).map(|j| m.iter().zip(v).map(|(row, x)| row[j] * x).sum()).collect()
}
