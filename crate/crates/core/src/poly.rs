//! Multivariate polynomials over ℚ (for characteristic classes) and exact
//! univariate interpolation.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::linalg::{self, rat};

/// Sparse polynomial in `x1..xn`; keys are exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Poly {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Poly {
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(alloc::vec![0; nvars], c);
        }
        p
    }

    /// `Σ c_i x_i`.
    pub fn linear(coeffs: &[i64]) -> Poly {
        let n = coeffs.len();
        let mut p = Poly::zero(n);
        for (i, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                let mut e = alloc::vec![0; n];
                e[i] = 1;
                p.terms.insert(e, rat(c));
            }
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigRational {
        self.terms.get(exps).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        let mut p = Poly::zero(self.nvars);
        if !c.is_zero() {
            for (e, v) in &self.terms {
                p.terms.insert(e.clone(), v * c);
            }
        }
        p
    }

    pub fn pow(&self, k: u32) -> Poly {
        (0..k).fold(Poly::constant(self.nvars, BigRational::one()), |acc, _| &acc * self)
    }

    /// Value at an integer point.
    pub fn eval(&self, x: &[i64]) -> BigRational {
        self.terms
            .iter()
            .map(|(e, c)| {
                let mono: BigInt = e.iter().zip(x).map(|(&k, &v)| BigInt::from(v).pow(k)).product();
                c * BigRational::from_integer(mono)
            })
            .sum()
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, o: &Poly) -> Poly {
        let mut p = self.clone();
        for (e, c) in &o.terms {
            let v = p.terms.remove(e).unwrap_or_else(BigRational::zero) + c;
            if !v.is_zero() {
                p.terms.insert(e.clone(), v);
            }
        }
        p
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, o: &Poly) -> Poly {
        let mut p = Poly::zero(self.nvars.max(o.nvars));
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let v = p.terms.remove(&e).unwrap_or_else(BigRational::zero) + c1 * c2;
                if !v.is_zero() {
                    p.terms.insert(e, v);
                }
            }
        }
        p
    }
}

/// Renders a rational as `p` or `p/q`.
pub fn rational_string(r: &BigRational) -> String {
    if r.is_integer() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut order: Vec<(&Vec<u32>, &BigRational)> = self.terms.iter().collect();
        order.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            da.cmp(&db).then(b.0.cmp(a.0))
        });
        for (n, (e, c)) in order.into_iter().enumerate() {
            let mono: String =
                e.iter().enumerate().filter(|(_, &k)| k > 0).map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, k) }).collect();
            let mag = c.abs();
            let coef = if mag.is_one() && !mono.is_empty() { String::new() } else { rational_string(&mag) };
            let sign = if c.is_negative() {
                "-"
            } else if n > 0 {
                "+"
            } else {
                ""
            };
            write!(f, "{sign}{coef}{mono}")?;
        }
        Ok(())
    }
}

/// Coefficients `c_0..c_deg` of the polynomial through `deg + 1` points.
pub fn fit_polynomial(xs: &[i64], ys: &[i64]) -> Option<Vec<BigRational>> {
    let n = xs.len();
    if n == 0 || ys.len() != n {
        return None;
    }
    let a: Vec<Vec<BigRational>> = xs.iter().map(|&x| (0..n as u32).map(|k| rat(x.pow(k))).collect()).collect();
    let b: Vec<BigRational> = ys.iter().map(|&y| rat(y)).collect();
    linalg::solve(&a, &b)
}

pub fn eval_univariate(coeffs: &[BigRational], x: i64) -> BigRational {
    coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * rat(x) + c)
}
