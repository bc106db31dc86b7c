//! Smooth complete fans with simplicial unimodular maximal cones.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::linalg::{self, dot, rat};
use crate::{Error, Result, Set};

/// A codimension-one cone `τ` with its two maximal cones.
///
/// `plus` is the lower-indexed maximal cone. The wall relation is
/// `v(ray_plus) + v(ray_minus) = Σ relation[k] · v(face[k])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wall {
    pub face: Vec<usize>,
    pub plus: usize,
    pub minus: usize,
    pub ray_plus: usize,
    pub ray_minus: usize,
    pub relation: Vec<i64>,
}

#[derive(Clone, Debug)]
pub struct Fan {
    dim: usize,
    rays: Vec<Vec<i64>>,
    max_cones: Vec<Vec<usize>>,
    inverses: Vec<Vec<Vec<i64>>>,
    walls: Vec<Wall>,
    ray_labels: Option<Vec<String>>,
}

impl PartialEq for Fan {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.rays == other.rays && self.max_cones == other.max_cones
    }
}

impl Eq for Fan {}

fn invalid(msg: String) -> Error {
    Error::InvalidFan(msg)
}

impl Fan {
    /// Validates smoothness and completeness and precomputes walls.
    pub fn new(dim: usize, rays: Vec<Vec<i64>>, max_cones: Vec<Vec<usize>>) -> Result<Fan> {
        if dim == 0 {
            return Err(invalid("dimension must be positive".into()));
        }
        for (i, r) in rays.iter().enumerate() {
            if r.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: r.len() });
            }
            let g = r.iter().fold(0i64, |g, v| g.gcd(v));
            if g != 1 {
                return Err(invalid(format!("ray {i} is zero or not primitive")));
            }
        }
        let mut cones = Vec::with_capacity(max_cones.len());
        let mut inverses = Vec::with_capacity(max_cones.len());
        for (k, c) in max_cones.iter().enumerate() {
            let mut c = c.clone();
            c.sort_unstable();
            c.dedup();
            if c.len() != dim || c.iter().any(|&i| i >= rays.len()) {
                return Err(invalid(format!("maximal cone {k} must list {dim} distinct rays")));
            }
            let mat: Vec<Vec<i64>> = c.iter().map(|&i| rays[i].clone()).collect();
            let inv = linalg::unimodular_inverse(&mat).ok_or(Error::NonSmoothCone)?;
            cones.push(c);
            inverses.push(inv);
        }
        if cones.is_empty() {
            return Err(invalid("no maximal cones".into()));
        }
        if cones.iter().collect::<BTreeSet<_>>().len() != cones.len() {
            return Err(invalid("repeated maximal cone".into()));
        }
        let used: BTreeSet<usize> = cones.iter().flatten().copied().collect();
        if used.len() != rays.len() {
            return Err(invalid("some ray lies in no maximal cone".into()));
        }
        let mut fan = Fan { dim, rays, max_cones: cones, inverses, walls: Vec::new(), ray_labels: None };
        fan.walls = fan.compute_walls()?;
        fan.check_connected()?;
        fan.check_degree_one()?;
        Ok(fan)
    }

    fn compute_walls(&self) -> Result<Vec<Wall>> {
        let mut faces: BTreeMap<Vec<usize>, Vec<(usize, usize)>> = BTreeMap::new();
        for (k, c) in self.max_cones.iter().enumerate() {
            for &off in c {
                let face: Vec<usize> = c.iter().copied().filter(|&r| r != off).collect();
                faces.entry(face).or_default().push((k, off));
            }
        }
        let mut walls = Vec::with_capacity(faces.len());
        for (face, adj) in faces {
            if adj.len() != 2 {
                return Err(invalid(format!("codimension-one face {face:?} lies in {} maximal cones", adj.len())));
            }
            let (plus, ray_plus) = adj[0];
            let (minus, ray_minus) = adj[1];
            // normal dual to ray_plus within cone plus
            let pos = self.max_cones[plus].iter().position(|&r| r == ray_plus).unwrap();
            let eta: Vec<i64> = self.inverses[plus].iter().map(|row| row[pos]).collect();
            if dot(&eta, &self.rays[ray_minus]) >= 0 {
                return Err(invalid(format!("cones {plus} and {minus} overlap across {face:?}")));
            }
            let sum: Vec<i64> = self.rays[ray_plus].iter().zip(&self.rays[ray_minus]).map(|(a, b)| a + b).collect();
            let coeffs = self.coefficients(minus, &sum);
            let mpos = self.max_cones[minus].iter().position(|&r| r == ray_minus).unwrap();
            if coeffs[mpos] != 0 {
                return Err(invalid(format!("wall relation fails across {face:?}")));
            }
            let relation = face.iter().map(|r| coeffs[self.max_cones[minus].iter().position(|x| x == r).unwrap()]).collect();
            walls.push(Wall { face, plus, minus, ray_plus, ray_minus, relation });
        }
        Ok(walls)
    }

    fn check_connected(&self) -> Result<()> {
        let n = self.max_cones.len();
        let mut adj = vec![Vec::new(); n];
        for w in &self.walls {
            adj[w.plus].push(w.minus);
            adj[w.minus].push(w.plus);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(k) = stack.pop() {
            for &j in &adj[k] {
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        if seen.iter().all(|&s| s) {
            Ok(())
        } else {
            Err(invalid("dual graph is disconnected".into()))
        }
    }

    /// A generic point must lie in exactly one maximal cone; this rules out
    /// fans that wrap around more than once.
    fn check_degree_one(&self) -> Result<()> {
        for t in 0..64i64 {
            let x: Vec<i64> = (0..self.dim as i64).map(|i| 1 + (i + 1) * (t + 3) + (i + 1).pow(3) * 131 * (t + 1) - 97 * i * i).collect();
            let all: Vec<Vec<i64>> = (0..self.max_cones.len()).map(|k| self.coefficients(k, &x)).collect();
            if all.iter().flatten().any(|c| *c == 0) {
                continue;
            }
            let hits = all.iter().filter(|c| c.iter().all(|v| *v > 0)).count();
            return if hits == 1 { Ok(()) } else { Err(invalid(format!("a generic point lies in {hits} maximal cones"))) };
        }
        Err(invalid("could not find a generic test point".into()))
    }

    pub fn p1() -> Fan {
        Fan::new(1, vec![vec![1], vec![-1]], vec![vec![0], vec![1]]).unwrap()
    }

    pub fn p2() -> Fan {
        Fan::new(2, vec![vec![1, 0], vec![0, 1], vec![-1, -1]], vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap()
    }

    /// `ℙⁿ`: rays `e_1..e_n` and `−Σ e_i`.
    pub fn pn(n: usize) -> Result<Fan> {
        if n == 0 {
            return Err(invalid("pn needs n ≥ 1".into()));
        }
        let mut rays: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect();
        rays.push(vec![-1; n]);
        let cones = (0..=n).rev().map(|skip| (0..=n).filter(|&i| i != skip).collect()).collect();
        Fan::new(n, rays, cones)
    }

    pub fn p1xp1() -> Fan {
        Fan::new(2, vec![vec![1, 0], vec![0, 1], vec![-1, 0], vec![0, -1]], vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]]).unwrap()
    }

    /// The permutahedral fan `Σ_m` in `ℤ^m / ℤ·𝟙 ≅ ℤ^{m−1}`.
    ///
    /// Ray `k` belongs to the subset with bitmask `k + 1`; see
    /// [`perm_ray_subsets`]. Maximal cones follow permutations in
    /// lexicographic order.
    pub fn permutahedral(m: usize) -> Result<Fan> {
        if m < 2 {
            return Err(invalid("permutahedral fan needs m ≥ 2".into()));
        }
        if m > 10 {
            return Err(Error::TooLarge(format!("permutahedral fan of {m} elements")));
        }
        let subsets = perm_ray_subsets(m);
        let rays = subsets.iter().map(|&s| quotient_vector(m, s)).collect();
        let mut cones = Vec::new();
        let mut perm: Vec<usize> = (0..m).collect();
        loop {
            let mut s = Set::EMPTY;
            let mut cone = Vec::with_capacity(m - 1);
            for &e in &perm[..m - 1] {
                s = s.with(e);
                cone.push(s.0 as usize - 1);
            }
            cones.push(cone);
            if !next_permutation(&mut perm) {
                break;
            }
        }
        let mut fan = Fan::new(m - 1, rays, cones)?;
        fan.ray_labels = Some(
            subsets
                .iter()
                .map(|s| {
                    let parts: Vec<String> = s.iter().map(|i| (i + 1).to_string()).collect();
                    format!("{{{}}}", parts.join(","))
                })
                .collect(),
        );
        Ok(fan)
    }

    /// `"p1"`, `"p2"`, `"pn:n"`, `"p1xp1"` or `"perm:m"`.
    pub fn named(name: &str) -> Result<Fan> {
        let num = |s: &str| s.trim().parse::<usize>().map_err(|_| invalid(format!("unknown fan {name}")));
        match name {
            "p1" => Ok(Fan::p1()),
            "p2" => Ok(Fan::p2()),
            "p1xp1" => Ok(Fan::p1xp1()),
            _ => {
                if let Some(n) = name.strip_prefix("pn:") {
                    Fan::pn(num(n)?)
                } else if let Some(m) = name.strip_prefix("perm:") {
                    Fan::permutahedral(num(m)?)
                } else {
                    Err(invalid(format!("unknown fan {name}")))
                }
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn max_cones(&self) -> &[Vec<usize>] {
        &self.max_cones
    }

    pub fn walls(&self) -> &[Wall] {
        &self.walls
    }

    /// Display name of ray `i`: the subset for permutahedral fans, else `ρi`
    /// counted from 1.
    pub fn ray_label(&self, i: usize) -> String {
        match &self.ray_labels {
            Some(l) => l[i].clone(),
            None => format!("ρ{}", i + 1),
        }
    }

    pub fn ray_labels(&self) -> Option<&[String]> {
        self.ray_labels.as_deref()
    }

    /// Replaces the display names of the rays.
    pub fn with_ray_labels(mut self, labels: Vec<String>) -> Result<Fan> {
        if labels.len() != self.rays.len() {
            return Err(Error::DimensionMismatch { expected: self.rays.len(), got: labels.len() });
        }
        self.ray_labels = Some(labels);
        Ok(self)
    }

    /// Integral inverse of the ray matrix of maximal cone `k` (rows = rays).
    pub fn inverse(&self, k: usize) -> &[Vec<i64>] {
        &self.inverses[k]
    }

    /// Coordinates of `x` in the ray basis of maximal cone `k`.
    pub fn coefficients(&self, k: usize, x: &[i64]) -> Vec<i64> {
        linalg::mat_t_vec(&self.inverses[k], x)
    }

    /// The character `u` with `⟨u, v_ρ⟩ = values[j]` for the `j`-th ray of
    /// maximal cone `k`.
    pub fn solve_character(&self, k: usize, values: &[i64]) -> Vec<i64> {
        linalg::mat_vec(&self.inverses[k], values)
    }

    pub fn max_cone_index(&self, rays: &[usize]) -> Option<usize> {
        let mut r = rays.to_vec();
        r.sort_unstable();
        self.max_cones.iter().position(|c| *c == r)
    }

    /// First maximal cone containing the integer point `x`, with coordinates.
    pub fn locate(&self, x: &[i64]) -> Result<(usize, Vec<i64>)> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: x.len() });
        }
        (0..self.max_cones.len()).map(|k| (k, self.coefficients(k, x))).find(|(_, c)| c.iter().all(|v| *v >= 0)).ok_or(Error::PointNotCovered)
    }

    /// Minimal face containing a rational point, as sorted ray indices.
    pub fn cone_containing(&self, x: &[BigRational]) -> Result<Vec<usize>> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: x.len() });
        }
        for (k, cone) in self.max_cones.iter().enumerate() {
            let c: Vec<BigRational> = (0..self.dim).map(|j| (0..self.dim).map(|i| rat(self.inverses[k][i][j]) * &x[i]).sum()).collect();
            if c.iter().all(|v| !v.is_negative()) {
                return Ok(cone.iter().zip(&c).filter(|(_, v)| !v.is_zero()).map(|(r, _)| *r).collect());
            }
        }
        Err(Error::PointNotCovered)
    }

    /// Every cone of the fan, `{0}` included, ordered by dimension then lex.
    pub fn cones(&self) -> Vec<Vec<usize>> {
        let mut all = BTreeSet::new();
        for c in &self.max_cones {
            for mask in 0u32..(1 << c.len()) {
                let face: Vec<usize> = c.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, r)| *r).collect();
                all.insert((face.len(), face));
            }
        }
        all.into_iter().map(|(_, f)| f).collect()
    }
}

/// Subsets labelling the rays of [`Fan::permutahedral`], in ray order.
pub fn perm_ray_subsets(m: usize) -> Vec<Set> {
    (1..(1u64 << m) - 1).map(Set).collect()
}

/// Image of `δ_S` in the quotient lattice: `(δ_S)_i − [m ∈ S]` for `i < m`.
pub fn quotient_vector(m: usize, s: Set) -> Vec<i64> {
    let last = s.contains(m - 1) as i64;
    (0..m - 1).map(|i| s.contains(i) as i64 - last).collect()
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_validate() {
        assert_eq!(Fan::p2().walls().len(), 3);
        assert_eq!(Fan::p1xp1().max_cones().len(), 4);
        assert_eq!(Fan::pn(3).unwrap().max_cones().len(), 4);
        let p3 = Fan::permutahedral(3).unwrap();
        assert_eq!(p3.rays().len(), 6);
        assert_eq!(p3.max_cones().len(), 6);
        let p4 = Fan::permutahedral(4).unwrap();
        assert_eq!((p4.rays().len(), p4.max_cones().len(), p4.walls().len()), (14, 24, 36));
    }

    #[test]
    fn permutahedral_two_is_p1() {
        assert_eq!(Fan::permutahedral(2).unwrap(), Fan::p1());
    }

    #[test]
    fn wall_relations() {
        let p1 = Fan::p1();
        let w = &p1.walls()[0];
        assert!(w.face.is_empty());
        assert_eq!((p1.rays()[w.ray_plus].clone(), p1.rays()[w.ray_minus].clone()), (vec![1], vec![-1]));
        let p2 = Fan::p2();
        let w = p2.walls().iter().find(|w| w.face == [0]).unwrap();
        assert_eq!((w.ray_plus, w.ray_minus, w.relation.clone()), (1, 2, vec![-1]));
    }

    #[test]
    fn containing_cones() {
        let p2 = Fan::p2();
        let x = [rat(2), rat(1)];
        assert_eq!(p2.cone_containing(&x).unwrap(), [0, 1]);
        assert_eq!(p2.cone_containing(&[rat(3), rat(0)]).unwrap(), [0]);
        assert_eq!(p2.cone_containing(&[rat(0), rat(0)]).unwrap(), Vec::<usize>::new());
        assert_eq!(p2.cones().len(), 7);
    }

    #[test]
    fn rejects_bad_fans() {
        assert_eq!(Fan::new(2, vec![vec![1, 0], vec![1, 2], vec![-1, -1]], vec![vec![0, 1], vec![1, 2], vec![0, 2]]).err(), Some(Error::NonSmoothCone));
        assert!(matches!(Fan::new(1, vec![vec![2], vec![-1]], vec![vec![0], vec![1]]), Err(Error::InvalidFan(_))));
        assert_eq!(Fan::new(2, vec![vec![1, 0], vec![1, 1], vec![-1, -1]], vec![vec![0, 1], vec![1, 2], vec![0, 2]]).err(), Some(Error::NonSmoothCone));
        // only half of p1xp1
        assert!(Fan::new(2, vec![vec![1, 0], vec![0, 1], vec![-1, 0]], vec![vec![0, 1], vec![1, 2]]).is_err());
    }
}
