//! Rational polyhedra `{u : ⟨u, a_k⟩ ≤ b_k}` in character space.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::fan::Fan;
use crate::linalg::{self, dot, rat};
use crate::matroid::subsets_of_size;
use crate::{Error, Result, Set};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inequality {
    pub normal: Vec<i64>,
    pub bound: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polyhedron {
    pub dim: usize,
    pub ineqs: Vec<Inequality>,
}

/// Per-ray integers `r_ρ`, i.e. the torus-invariant divisor `Σ r_ρ D_ρ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineBundle(pub Vec<i64>);

impl LineBundle {
    pub fn polytope(&self, fan: &Fan) -> Result<Polyhedron> {
        if self.0.len() != fan.rays().len() {
            return Err(Error::DimensionMismatch { expected: fan.rays().len(), got: self.0.len() });
        }
        Ok(Polyhedron::from_column(fan, &self.0))
    }
}

impl Polyhedron {
    /// `{u : ⟨u, v_ρ⟩ ≤ column[ρ]}` over the rays of `fan`.
    pub fn from_column(fan: &Fan, column: &[i64]) -> Polyhedron {
        let ineqs = fan.rays().iter().zip(column).map(|(v, &b)| Inequality { normal: v.clone(), bound: b }).collect();
        Polyhedron { dim: fan.dim(), ineqs }
    }

    pub fn contains(&self, u: &[i64]) -> bool {
        self.ineqs.iter().all(|h| dot(&h.normal, u) <= h.bound)
    }

    fn contains_rational(&self, u: &[BigRational]) -> bool {
        self.ineqs.iter().all(|h| {
            let lhs: BigRational = h.normal.iter().zip(u).map(|(a, x)| rat(*a) * x).sum();
            lhs <= rat(h.bound)
        })
    }

    fn normal_rank(&self) -> usize {
        let rows: Vec<Vec<i64>> = self.ineqs.iter().map(|h| h.normal.clone()).collect();
        if rows.is_empty() {
            0
        } else {
            linalg::rank_q(&rows)
        }
    }

    /// Vertices, each the unique solution of `dim` tight inequalities.
    pub fn vertices(&self) -> Vec<Vec<BigRational>> {
        let d = self.dim;
        let mut out = BTreeSet::new();
        if self.ineqs.len() > 63 {
            return Vec::new();
        }
        for s in subsets_of_size(self.ineqs.len(), d) {
            let a: Vec<Vec<BigRational>> = s.iter().map(|k| self.ineqs[k].normal.iter().map(|&v| rat(v)).collect()).collect();
            let b: Vec<BigRational> = s.iter().map(|k| rat(self.ineqs[k].bound)).collect();
            if let Some(x) = linalg::solve(&a, &b) {
                if self.contains_rational(&x) {
                    out.insert(x);
                }
            }
        }
        out.into_iter().collect()
    }

    /// Bounded (or empty with pointed recession cone).
    pub fn is_bounded(&self) -> bool {
        let d = self.dim;
        if self.normal_rank() < d {
            return false;
        }
        // A nonzero pointed recession cone has an extreme ray cut out by
        // d−1 independent normals.
        for s in subsets_of_size(self.ineqs.len(), d - 1) {
            let rows: Vec<&Vec<i64>> = s.iter().map(|k| &self.ineqs[k].normal).collect();
            let y: Vec<i64> = (0..d)
                .map(|j| {
                    let minor: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| *v).collect()).collect();
                    let m = linalg::det(&minor).to_i64().expect("small minor");
                    if j % 2 == 0 {
                        m
                    } else {
                        -m
                    }
                })
                .collect();
            if y.iter().all(|v| *v == 0) {
                continue;
            }
            for sign in [1, -1] {
                let dir: Vec<i64> = y.iter().map(|v| v * sign).collect();
                if self.ineqs.iter().all(|h| dot(&h.normal, &dir) <= 0) {
                    return false;
                }
            }
        }
        true
    }

    /// Integer bounding box `(lo, hi)` of the vertices; `None` when empty.
    pub fn integer_box(&self) -> Result<Option<(Vec<i64>, Vec<i64>)>> {
        if !self.is_bounded() {
            return Err(Error::UnboundedPolyhedron);
        }
        let verts = self.vertices();
        if verts.is_empty() {
            return Ok(None);
        }
        let mut lo = vec![i64::MAX; self.dim];
        let mut hi = vec![i64::MIN; self.dim];
        for v in &verts {
            for i in 0..self.dim {
                lo[i] = lo[i].min(v[i].ceil().to_integer().to_i64().unwrap());
                hi[i] = hi[i].max(v[i].floor().to_integer().to_i64().unwrap());
            }
        }
        Ok(Some((lo, hi)))
    }

    pub fn lattice_points(&self) -> Result<Vec<Vec<i64>>> {
        let Some((lo, hi)) = self.integer_box()? else {
            return Ok(Vec::new());
        };
        Ok(box_points(&lo, &hi).filter(|u| self.contains(u)).collect())
    }

    fn check_aligned(&self, fan: &Fan) -> Result<()> {
        let aligned = self.ineqs.len() == fan.rays().len() && self.ineqs.iter().zip(fan.rays()).all(|(h, v)| &h.normal == v);
        if aligned {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: fan.rays().len(), got: self.ineqs.len() })
        }
    }

    /// The candidate vertex for maximal cone `k`: tight on its rays.
    pub fn cone_vertex(&self, fan: &Fan, k: usize) -> Result<Vec<i64>> {
        self.check_aligned(fan)?;
        let cone = fan.max_cones().get(k).ok_or(Error::NonMaximalCone)?;
        let b: Vec<i64> = cone.iter().map(|&r| self.ineqs[r].bound).collect();
        Ok(fan.solve_character(k, &b))
    }

    /// The vertex in the direction of maximal cone `k`, if it lies in `P`.
    pub fn vertex_in_direction(&self, fan: &Fan, k: usize) -> Result<Option<Vec<i64>>> {
        let u = self.cone_vertex(fan, k)?;
        Ok(self.contains(&u).then_some(u))
    }

    /// Whether the outer normal fan of `P` is `fan`: every cone vertex lies in
    /// `P` and is strictly inside every inequality of a ray off the cone.
    pub fn has_normal_fan(&self, fan: &Fan) -> bool {
        if self.check_aligned(fan).is_err() {
            return false;
        }
        (0..fan.max_cones().len()).all(|k| {
            let u = self.cone_vertex(fan, k).unwrap();
            let cone = &fan.max_cones()[k];
            self.ineqs.iter().enumerate().all(|(r, h)| {
                let v = dot(&h.normal, &u);
                if cone.contains(&r) {
                    v == h.bound
                } else {
                    v < h.bound
                }
            })
        })
    }

    /// `Σ_σ (−1)^{codim σ} I_{P,σ}(u)` over all cones of `fan`.
    pub fn brianchon_gram(&self, fan: &Fan, cones: &[Vec<usize>], u: &[i64]) -> i64 {
        let sat: Set = self.ineqs.iter().enumerate().filter(|(_, h)| dot(&h.normal, u) <= h.bound).map(|(i, _)| i).collect();
        cones.iter().filter(|c| c.iter().all(|&r| sat.contains(r))).map(|c| if (fan.dim() - c.len()).is_multiple_of(2) { 1 } else { -1 }).sum()
    }
}

/// All integer points of the box `lo ≤ u ≤ hi`, last coordinate fastest.
pub fn box_points(lo: &[i64], hi: &[i64]) -> impl Iterator<Item = Vec<i64>> {
    let lo = lo.to_vec();
    let hi = hi.to_vec();
    let empty = lo.iter().zip(&hi).any(|(a, b)| a > b);
    let mut cur = if empty { None } else { Some(lo.clone()) };
    core::iter::from_fn(move || {
        let out = cur.clone()?;
        let mut next = out.clone();
        let mut i = next.len();
        loop {
            if i == 0 {
                cur = None;
                break;
            }
            i -= 1;
            if next[i] < hi[i] {
                next[i] += 1;
                cur = Some(next);
                break;
            }
            next[i] = lo[i];
        }
        Some(out)
    })
}

/// Rounds a rational vector if it is integral.
pub fn integral(v: &[BigRational]) -> Option<Vec<i64>> {
    v.iter().map(|x| if x.is_integer() { x.to_integer().to_i64() } else { None }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_from_p2_column() {
        let p2 = Fan::p2();
        let p = Polyhedron::from_column(&p2, &[2, 0, 0]);
        let verts: Vec<Vec<i64>> = p.vertices().iter().map(|v| integral(v).unwrap()).collect();
        assert_eq!(verts, [vec![0, 0], vec![2, -2], vec![2, 0]]);
        assert_eq!(p.vertex_in_direction(&p2, 0).unwrap(), Some(vec![2, 0]));
        assert!(p.has_normal_fan(&p2));
        assert_eq!(p.lattice_points().unwrap().len(), 6);
    }

    #[test]
    fn degenerate_and_dilated() {
        let p2 = Fan::p2();
        let pt = Polyhedron::from_column(&p2, &[0, 0, 0]);
        assert_eq!(pt.lattice_points().unwrap(), [vec![0, 0]]);
        assert!(!pt.has_normal_fan(&p2));
        assert_eq!(Polyhedron::from_column(&p2, &[1, 1, 1]).lattice_points().unwrap().len(), 10);
        let empty = Polyhedron::from_column(&p2, &[-1, -1, 0]);
        assert!(empty.lattice_points().unwrap().is_empty());
    }

    #[test]
    fn unbounded_rejected() {
        let p2 = Fan::p2();
        let half = Polyhedron { dim: 2, ineqs: p2.rays()[..2].iter().map(|v| Inequality { normal: v.clone(), bound: 0 }).collect() };
        assert!(!half.is_bounded());
        assert_eq!(half.lattice_points(), Err(Error::UnboundedPolyhedron));
        assert!(Polyhedron::from_column(&p2, &[0, 0, 0]).is_bounded());
    }

    #[test]
    fn box_enumeration() {
        assert_eq!(box_points(&[0, 0], &[1, 2]).count(), 6);
        assert_eq!(box_points(&[1], &[0]).count(), 0);
        assert_eq!(box_points(&[], &[]).count(), 1);
    }
}
