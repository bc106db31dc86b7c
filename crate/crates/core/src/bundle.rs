//! Tropical toric vector bundles given by a diagram: one Bergman point of the
//! matroid per ray, with the rows of every maximal cone in a common
//! apartment.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::bergman::{self, is_bergman_point, phi_b, project_b};
use crate::fan::Fan;
use crate::linalg::{dot, mat_vec};
use crate::matroid::Matroid;
use crate::poly::Poly;
use crate::polyhedron::{box_points, LineBundle, Polyhedron};
use crate::{Error, Result, Set};

#[derive(Clone, Debug)]
pub struct TropicalBundle {
    matroid: Matroid,
    fan: Fan,
    diagram: Vec<Vec<i64>>,
    adapted: Vec<Set>,
}

impl PartialEq for TropicalBundle {
    fn eq(&self, o: &Self) -> bool {
        self.matroid == o.matroid && self.fan == o.fan && self.diagram == o.diagram
    }
}

impl Eq for TropicalBundle {}

/// Sections in degree `u`: a flat and its rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionReport {
    pub u: Vec<i64>,
    pub flat: Set,
    pub rank: usize,
}

/// Answer of the nef/ample tests, which only make sense on split curves.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Positivity {
    Yes,
    No,
    UnsplitWithinMatroid,
}

/// A common adapted basis of a bundle over `ℙ¹` with the degree of each
/// basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Splitting {
    pub basis: Set,
    pub degrees: Vec<(usize, i64)>,
}

impl Splitting {
    /// Degrees sorted decreasingly.
    pub fn degree_multiset(&self) -> Vec<i64> {
        let mut d: Vec<i64> = self.degrees.iter().map(|x| x.1).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}

/// Restriction to the toric curve of a wall.
#[derive(Clone, Debug)]
pub struct CurveRestriction {
    pub wall: usize,
    /// Ground indices of the original matroid kept in the restriction.
    pub elements: Vec<usize>,
    pub basis_plus: Set,
    pub basis_minus: Set,
    pub bundle: TropicalBundle,
}

/// Global generation certificate: an accepted basis per maximal cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalGeneration {
    pub per_cone: Vec<Option<Set>>,
}

impl GlobalGeneration {
    pub fn holds(&self) -> bool {
        self.per_cone.iter().all(|c| c.is_some())
    }
}

/// Largest matroid accepted by [`flat_coefficients`].
pub const MAX_FLAT_COEFFICIENT_ELEMENTS: usize = 16;

/// `c_F` for every flat (ranks ascending, lex within a rank).
///
/// Inclusion–exclusion over families of rank-`k` flats collapses, by Möbius
/// inversion on the lattice of flats, to `c_F = Σ_{G ≤ F} μ(G, F)·rank G`.
pub fn flat_coefficients(m: &Matroid) -> Result<Vec<(Set, i64)>> {
    if m.len() > MAX_FLAT_COEFFICIENT_ELEMENTS {
        return Err(Error::TooLarge(format!("{} elements (limit {MAX_FLAT_COEFFICIENT_ELEMENTS})", m.len())));
    }
    let flats: Vec<Set> = m.all_flats().collect();
    let n = flats.len();
    let mut mu = vec![vec![0i64; n]; n];
    // flats are ordered by rank, so every G < F comes before F
    for g in 0..n {
        mu[g][g] = 1;
        for f in g + 1..n {
            if flats[g].is_subset(flats[f]) {
                mu[g][f] = -(g..f).filter(|&h| flats[h].is_subset(flats[f]) && flats[g].is_subset(flats[h])).map(|h| mu[g][h]).sum::<i64>();
            }
        }
    }
    Ok((0..n)
        .map(|f| {
            let c = (0..=f).filter(|&g| flats[g].is_subset(flats[f])).map(|g| mu[g][f] * m.rank_of(flats[g]) as i64).sum();
            (flats[f], c)
        })
        .collect())
}

impl TropicalBundle {
    /// Validates the diagram and certifies the lex-smallest adapted basis of
    /// every maximal cone.
    pub fn new(matroid: Matroid, fan: Fan, diagram: Vec<Vec<i64>>) -> Result<TropicalBundle> {
        if diagram.len() != fan.rays().len() {
            return Err(Error::DimensionMismatch { expected: fan.rays().len(), got: diagram.len() });
        }
        for (i, row) in diagram.iter().enumerate() {
            if !is_bergman_point(&matroid, row)? {
                return Err(Error::RowNotBergman(i));
            }
        }
        let mut adapted = Vec::with_capacity(fan.max_cones().len());
        for (k, cone) in fan.max_cones().iter().enumerate() {
            let rows: Vec<&[i64]> = cone.iter().map(|&r| diagram[r].as_slice()).collect();
            let b = bergman::first_common_adapted_basis(&matroid, &rows)?.ok_or(Error::NoCommonApartment(k))?;
            adapted.push(b);
        }
        Ok(TropicalBundle { matroid, fan, diagram, adapted })
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    pub fn diagram(&self) -> &[Vec<i64>] {
        &self.diagram
    }

    pub fn rank(&self) -> usize {
        self.matroid.rank()
    }

    /// Certified adapted basis of each maximal cone.
    pub fn adapted_bases(&self) -> &[Set] {
        &self.adapted
    }

    fn check_ray(&self, ray: usize) -> Result<()> {
        if ray >= self.diagram.len() {
            return Err(Error::DimensionMismatch { expected: self.diagram.len(), got: ray + 1 });
        }
        Ok(())
    }

    fn check_u(&self, u: &[i64]) -> Result<()> {
        if u.len() != self.fan.dim() {
            return Err(Error::DimensionMismatch { expected: self.fan.dim(), got: u.len() });
        }
        Ok(())
    }

    /// `F^ρ_t = {e : D[ρ,e] ≥ t}`.
    pub fn klyachko_flat(&self, ray: usize, t: i64) -> Result<Set> {
        self.check_ray(ray)?;
        Ok(self.diagram[ray].iter().enumerate().filter(|(_, &v)| v >= t).map(|(e, _)| e).collect())
    }

    /// `F^{ρ_1}_{r_1} ∩ … ∩ F^{ρ_k}_{r_k}`.
    pub fn klyachko_intersection(&self, rays: &[usize], r: &[i64]) -> Result<Set> {
        if rays.len() != r.len() {
            return Err(Error::DimensionMismatch { expected: rays.len(), got: r.len() });
        }
        rays.iter().zip(r).try_fold(self.matroid.ground(), |acc, (&ray, &t)| Ok(acc.intersection(self.klyachko_flat(ray, t)?)))
    }

    /// `Φ(x) = φ_B(Σ c_ρ π_B(D[ρ]))` on a maximal cone containing `x`.
    pub fn phi_at(&self, x: &[i64]) -> Result<Vec<i64>> {
        let (k, c) = self.fan.locate(x)?;
        let b = self.adapted[k];
        let cone = &self.fan.max_cones()[k];
        let a: Vec<i64> = b.iter().map(|e| cone.iter().zip(&c).map(|(&r, ci)| ci * self.diagram[r][e]).sum()).collect();
        phi_b(&self.matroid, b, &a)
    }

    pub fn evaluate_v(&self, e: usize, x: &[i64]) -> Result<i64> {
        if e >= self.matroid.len() {
            return Err(Error::DimensionMismatch { expected: self.matroid.len(), got: e + 1 });
        }
        Ok(self.phi_at(x)?[e])
    }

    /// Column of element `e` as a polyhedron `P_{v(e)}`.
    pub fn parliament_member(&self, e: usize) -> Polyhedron {
        let col: Vec<i64> = self.diagram.iter().map(|row| row[e]).collect();
        Polyhedron::from_column(&self.fan, &col)
    }

    pub fn parliament(&self) -> Vec<Polyhedron> {
        (0..self.matroid.len()).map(|e| self.parliament_member(e)).collect()
    }

    /// For each ray, the elements whose inequality holds at `u`.
    fn satisfied(&self, u: &[i64]) -> Vec<Set> {
        self.fan
            .rays()
            .iter()
            .zip(&self.diagram)
            .map(|(v, row)| {
                let p = dot(v, u);
                row.iter().enumerate().filter(|(_, &d)| p <= d).map(|(e, _)| e).collect()
            })
            .collect()
    }

    fn report(&self, u: &[i64], flat: Set) -> SectionReport {
        SectionReport { u: u.to_vec(), flat, rank: self.matroid.rank_of(flat) }
    }

    /// `H⁰(X, E)_u = {e : u ∈ P_{v(e)}}`.
    pub fn h0_u(&self, u: &[i64]) -> Result<SectionReport> {
        self.check_u(u)?;
        let flat = self.satisfied(u).into_iter().fold(self.matroid.ground(), Set::intersection);
        Ok(self.report(u, flat))
    }

    /// Sections over the affine chart of any cone (given by its rays).
    pub fn h0_u_sigma(&self, cone: &[usize], u: &[i64]) -> Result<SectionReport> {
        self.check_u(u)?;
        for &r in cone {
            self.check_ray(r)?;
        }
        let sat = self.satisfied(u);
        let flat = cone.iter().fold(self.matroid.ground(), |acc, &r| acc.intersection(sat[r]));
        Ok(self.report(u, flat))
    }

    /// `χ_u` with the cone list of the fan supplied by the caller.
    pub fn chi_u_with(&self, cones: &[Vec<usize>], u: &[i64]) -> i64 {
        let sat = self.satisfied(u);
        let d = self.fan.dim();
        cones
            .iter()
            .map(|c| {
                let flat = c.iter().fold(self.matroid.ground(), |acc, &r| acc.intersection(sat[r]));
                let r = self.matroid.rank_of(flat) as i64;
                if (d - c.len()).is_multiple_of(2) {
                    r
                } else {
                    -r
                }
            })
            .sum()
    }

    /// `χ_u = Σ_σ (−1)^{codim σ} rank H⁰(U_σ, E)_u` over every cone, `{0}` included.
    pub fn chi_u(&self, u: &[i64]) -> Result<i64> {
        self.check_u(u)?;
        Ok(self.chi_u_with(&self.fan.cones(), u))
    }

    /// Row-wise minimum of the columns in `flat`, plus `shift`.
    pub fn flat_bounds(&self, flat: Set, shift: Option<&[i64]>) -> Vec<i64> {
        self.diagram.iter().enumerate().map(|(r, row)| flat.iter().map(|e| row[e]).min().unwrap_or(i64::MAX) + shift.map_or(0, |s| s[r])).collect()
    }

    /// `P_{D,F}`: the intersection of the parliament members of `F`.
    pub fn flat_polytope(&self, flat: Set) -> Polyhedron {
        Polyhedron::from_column(&self.fan, &self.flat_bounds(flat, None))
    }

    fn positive_rank_flats(&self) -> impl Iterator<Item = Set> + '_ {
        self.matroid.flats().iter().skip(1).flatten().copied()
    }

    /// Bounding box of every `P_{D,F}` together with all cone vertices
    /// `u_{σ,F}`, which also bounds the support of `χ_u`.
    pub fn support_box(&self) -> Result<(Vec<i64>, Vec<i64>)> {
        let d = self.fan.dim();
        let mut lo = vec![i64::MAX; d];
        let mut hi = vec![i64::MIN; d];
        let mut grow = |p: &[i64], q: &[i64]| {
            for i in 0..d {
                lo[i] = lo[i].min(p[i]);
                hi[i] = hi[i].max(q[i]);
            }
        };
        for f in self.positive_rank_flats() {
            let p = self.flat_polytope(f);
            if !p.is_bounded() {
                return Err(Error::UnboundedSupport);
            }
            if let Some((a, b)) = p.integer_box().map_err(|_| Error::UnboundedSupport)? {
                grow(&a, &b);
            }
            for k in 0..self.fan.max_cones().len() {
                let u = p.cone_vertex(&self.fan, k)?;
                grow(&u, &u);
            }
        }
        Ok((lo, hi))
    }

    pub fn chi_total(&self) -> Result<i64> {
        let (lo, hi) = self.support_box()?;
        let cones = self.fan.cones();
        Ok(box_points(&lo, &hi).map(|u| self.chi_u_with(&cones, &u)).sum())
    }

    pub fn h0_total(&self) -> Result<i64> {
        let (lo, hi) = self.support_box()?;
        Ok(box_points(&lo, &hi).map(|u| self.h0_u(&u).unwrap().rank as i64).sum())
    }

    /// `Σ_F c_F · I_{D,F}(u)` with precomputed coefficients.
    pub fn h0_u_via_flats_with(&self, coeffs: &[(Set, i64)], u: &[i64]) -> Result<i64> {
        self.check_u(u)?;
        let sat = self.satisfied(u);
        let inside = sat.into_iter().fold(self.matroid.ground(), Set::intersection);
        Ok(coeffs.iter().filter(|(f, c)| *c != 0 && !f.is_empty() && f.is_subset(inside)).map(|(_, c)| c).sum())
    }

    pub fn h0_u_via_flats(&self, u: &[i64]) -> Result<i64> {
        self.h0_u_via_flats_with(&flat_coefficients(&self.matroid)?, u)
    }

    fn check_cone(&self, k: usize) -> Result<&[usize]> {
        self.fan.max_cones().get(k).map(|c| c.as_slice()).ok_or(Error::NonMaximalCone)
    }

    /// Characters `u_b` with `⟨u_b, v_ρ⟩ = D[ρ,b]` on cone `k` for basis `b`.
    pub fn characters_with_basis(&self, k: usize, b: Set) -> Result<Vec<(usize, Vec<i64>)>> {
        let cone = self.check_cone(k)?;
        Ok(b.iter()
            .map(|e| {
                let vals: Vec<i64> = cone.iter().map(|&r| self.diagram[r][e]).collect();
                (e, self.fan.solve_character(k, &vals))
            })
            .collect())
    }

    pub fn characters_on_cone(&self, k: usize) -> Result<Vec<(usize, Vec<i64>)>> {
        self.check_cone(k)?;
        self.characters_with_basis(k, self.adapted[k])
    }

    fn linear_forms(&self, k: usize) -> Vec<Poly> {
        self.characters_on_cone(k).unwrap().iter().map(|(_, u)| Poly::linear(u)).collect()
    }

    /// `c_i^T` on each maximal cone: `ε_i` of the character linear forms.
    pub fn chern_class(&self, i: usize) -> Vec<Poly> {
        let d = self.fan.dim();
        (0..self.fan.max_cones().len())
            .map(|k| {
                let mut e = vec![Poly::zero(d); self.rank() + 1];
                e[0] = Poly::constant(d, BigRational::one());
                for l in self.linear_forms(k) {
                    for j in (1..e.len()).rev() {
                        e[j] = &e[j] + &(&e[j - 1] * &l);
                    }
                }
                e.get(i).cloned().unwrap_or_else(|| Poly::zero(d))
            })
            .collect()
    }

    /// Sorted character multiset of each maximal cone.
    pub fn k_class(&self) -> Vec<Vec<Vec<i64>>> {
        (0..self.fan.max_cones().len())
            .map(|k| {
                let mut c: Vec<Vec<i64>> = self.characters_on_cone(k).unwrap().into_iter().map(|x| x.1).collect();
                c.sort();
                c
            })
            .collect()
    }

    /// `Σ_{k ≤ d} p_k / k!` of the character forms on each maximal cone.
    pub fn chern_character(&self) -> Vec<Poly> {
        let d = self.fan.dim();
        (0..self.fan.max_cones().len())
            .map(|k| {
                let forms = self.linear_forms(k);
                let mut total = Poly::zero(d);
                let mut fact = BigInt::one();
                for j in 0..=d as u32 {
                    if j > 0 {
                        fact *= BigInt::from(j);
                    }
                    let p = forms.iter().fold(Poly::zero(d), |acc, l| &acc + &l.pow(j));
                    total = &total + &p.scale(&BigRational::new(BigInt::one(), fact.clone()));
                }
                total
            })
            .collect()
    }

    /// Walls whose two character multisets disagree on the wall's span.
    pub fn wall_incompatibilities(&self) -> Vec<usize> {
        let restricted = |k: usize, face: &[usize]| {
            let mut v: Vec<Vec<i64>> =
                self.characters_on_cone(k).unwrap().iter().map(|(_, u)| face.iter().map(|&r| dot(u, &self.fan.rays()[r])).collect()).collect();
            v.sort();
            v
        };
        self.fan.walls().iter().enumerate().filter(|(_, w)| restricted(w.plus, &w.face) != restricted(w.minus, &w.face)).map(|(i, _)| i).collect()
    }

    /// Adds `r_ρ` to every entry of row `ρ`.
    pub fn tensor_line_bundle(&self, l: &LineBundle) -> Result<TropicalBundle> {
        if l.0.len() != self.diagram.len() {
            return Err(Error::DimensionMismatch { expected: self.diagram.len(), got: l.0.len() });
        }
        let diagram = self.diagram.iter().zip(&l.0).map(|(row, r)| row.iter().map(|v| v + r).collect()).collect();
        TropicalBundle::new(self.matroid.clone(), self.fan.clone(), diagram)
    }

    /// Pullback along a linear map `λ` (rows: target coordinates) from `src`.
    pub fn pullback_linear(&self, lambda: &[Vec<i64>], src: &Fan) -> Result<TropicalBundle> {
        if lambda.len() != self.fan.dim() || lambda.iter().any(|r| r.len() != src.dim()) {
            return Err(Error::DimensionMismatch { expected: self.fan.dim(), got: lambda.len() });
        }
        let images: Vec<Vec<i64>> = src.rays().iter().map(|v| mat_vec(lambda, v)).collect();
        let ray_index: BTreeMap<&[i64], usize> = self.fan.rays().iter().enumerate().map(|(i, v)| (v.as_slice(), i)).collect();
        let max_cones: BTreeSet<Vec<usize>> = self.fan.max_cones().iter().map(|c| sorted(c)).collect();
        for (k, cone) in src.max_cones().iter().enumerate() {
            // Rays onto rays spanning a maximal cone is the common case.
            let direct: Option<Vec<usize>> = cone.iter().map(|&r| ray_index.get(images[r].as_slice()).copied()).collect();
            if direct.is_some_and(|c| max_cones.contains(&sorted(&c))) {
                continue;
            }
            let inside = (0..self.fan.max_cones().len()).any(|t| cone.iter().all(|&r| self.fan.coefficients(t, &images[r]).iter().all(|c| *c >= 0)));
            if !inside {
                return Err(Error::ConeImageNotContained(k));
            }
        }
        let diagram = images.iter().map(|y| self.phi_at(y)).collect::<Result<Vec<_>>>()?;
        TropicalBundle::new(self.matroid.clone(), src.clone(), diagram)
    }

    /// Searches every adapted basis of every maximal cone for one whose
    /// characters are the cone vertices of their parliament members.
    pub fn global_generation(&self) -> GlobalGeneration {
        let per_cone = self
            .fan
            .max_cones()
            .iter()
            .enumerate()
            .map(|(k, cone)| {
                let rows: Vec<&[i64]> = cone.iter().map(|&r| self.diagram[r].as_slice()).collect();
                bergman::common_adapted_bases(&self.matroid, &rows)
                    .unwrap()
                    .into_iter()
                    .find(|&b| self.characters_with_basis(k, b).unwrap().iter().all(|(e, u)| self.parliament_member(*e).contains(u)))
            })
            .collect();
        GlobalGeneration { per_cone }
    }

    pub fn is_globally_generated(&self) -> bool {
        self.global_generation().holds()
    }

    /// Smallest `N ≥ 0` such that every `P_{D,F} + N·P_L` (F of positive rank)
    /// has normal fan Σ.
    pub fn estimate_n0(&self, l: &LineBundle) -> Result<i64> {
        let pl = l.polytope(&self.fan)?;
        if !pl.has_normal_fan(&self.fan) {
            return Err(Error::NotAmple);
        }
        let rays = self.fan.rays();
        let mut n0 = 0i64;
        for f in self.positive_rank_flats() {
            let b = self.flat_bounds(f, None);
            for (k, cone) in self.fan.max_cones().iter().enumerate() {
                let u0 = self.fan.solve_character(k, &cone.iter().map(|&r| b[r]).collect::<Vec<_>>());
                let ul = self.fan.solve_character(k, &cone.iter().map(|&r| l.0[r]).collect::<Vec<_>>());
                for r in (0..rays.len()).filter(|r| !cone.contains(r)) {
                    let alpha = dot(&u0, &rays[r]) - b[r];
                    let beta = l.0[r] - dot(&ul, &rays[r]);
                    // need alpha < N·beta, with beta > 0 by ampleness of L
                    if alpha >= 0 {
                        n0 = n0.max(alpha / beta + 1);
                    }
                }
            }
        }
        Ok(n0)
    }

    /// Every pair of adapted bases for the two cones of a wall.
    pub fn curve_basis_choices(&self, wall: usize) -> Result<Vec<(Set, Set)>> {
        let w = self.fan.walls().get(wall).ok_or(Error::NotAWall)?;
        let on = |k: usize| {
            let rows: Vec<&[i64]> = self.fan.max_cones()[k].iter().map(|&r| self.diagram[r].as_slice()).collect();
            bergman::common_adapted_bases(&self.matroid, &rows).unwrap()
        };
        let (p, m) = (on(w.plus), on(w.minus));
        Ok(p.iter().flat_map(|&a| m.iter().map(move |&b| (a, b))).collect())
    }

    /// Restriction to the curve of a wall, using the certified bases.
    pub fn restrict_to_curve(&self, wall: usize) -> Result<CurveRestriction> {
        let w = self.fan.walls().get(wall).ok_or(Error::NotAWall)?;
        self.restrict_to_curve_with(wall, self.adapted[w.plus], self.adapted[w.minus])
    }

    /// Restriction to the curve `C_τ` as a bundle over `ℙ¹` on the matroid
    /// induced on `B⁺ ∪ B⁻`.
    ///
    /// The positive row is `D[ρ⁺]`. The negative row is the linear extension
    /// of `Φ|σ⁻` evaluated at `−v(ρ⁺)`, i.e. `D[ρ⁻]` corrected by the wall
    /// relation, so that row sums are the degrees `⟨u⁺_b − u⁻_b, v(ρ⁺)⟩`.
    pub fn restrict_to_curve_with(&self, wall: usize, b_plus: Set, b_minus: Set) -> Result<CurveRestriction> {
        let w = self.fan.walls().get(wall).ok_or(Error::NotAWall)?;
        for (k, b) in [(w.plus, b_plus), (w.minus, b_minus)] {
            for &r in &self.fan.max_cones()[k] {
                if !bergman::apartment_contains(&self.matroid, b, &self.diagram[r])? {
                    return Err(Error::NoCommonApartment(k));
                }
            }
        }
        let mut a = project_b(b_minus, &self.diagram[w.ray_minus]);
        for (&r, &c) in w.face.iter().zip(&w.relation) {
            for (x, y) in a.iter_mut().zip(project_b(b_minus, &self.diagram[r])) {
                *x -= c * y;
            }
        }
        let minus_row = phi_b(&self.matroid, b_minus, &a)?;
        let keep: Vec<usize> = b_plus.union(b_minus).iter().collect();
        let sub = self.matroid.restriction(b_plus.union(b_minus))?;
        let cut = |row: &[i64]| keep.iter().map(|&e| row[e]).collect::<Vec<i64>>();
        let bundle = TropicalBundle::new(sub, Fan::p1(), vec![cut(&self.diagram[w.ray_plus]), cut(&minus_row)])?;
        Ok(CurveRestriction { wall, elements: keep, basis_plus: b_plus, basis_minus: b_minus, bundle })
    }

    fn require_p1(&self) -> Result<()> {
        if self.fan != Fan::p1() {
            return Err(Error::WrongFan);
        }
        Ok(())
    }

    /// Lex-smallest basis adapted to both rows of a `ℙ¹` bundle, with degrees
    /// `row⁺[b] + row⁻[b]`.
    pub fn splits(&self) -> Result<Option<Splitting>> {
        self.require_p1()?;
        let rows = [self.diagram[0].as_slice(), self.diagram[1].as_slice()];
        Ok(bergman::first_common_adapted_basis(&self.matroid, &rows)?
            .map(|b| Splitting { basis: b, degrees: b.iter().map(|e| (e, self.diagram[0][e] + self.diagram[1][e])).collect() }))
    }

    /// Splitting of the restriction to every wall, in wall order.
    pub fn wall_splittings(&self) -> Result<Vec<Option<Splitting>>> {
        (0..self.fan.walls().len()).map(|w| self.restrict_to_curve(w)?.bundle.splits()).collect()
    }

    fn positivity(&self, strict: bool) -> Result<Positivity> {
        let mut all = true;
        for s in self.wall_splittings()? {
            match s {
                None => return Ok(Positivity::UnsplitWithinMatroid),
                Some(s) => all &= s.degrees.iter().all(|(_, d)| if strict { *d > 0 } else { *d >= 0 }),
            }
        }
        Ok(if all { Positivity::Yes } else { Positivity::No })
    }

    pub fn is_nef(&self) -> Result<Positivity> {
        self.positivity(false)
    }

    pub fn is_ample(&self) -> Result<Positivity> {
        self.positivity(true)
    }

    /// Ranks of Klyachko intersections `∩_ρ F^ρ_{r_ρ}` keyed by the tuple.
    pub fn klyachko_ranks(&self, tuples: &[Vec<i64>]) -> Result<BTreeMap<Vec<i64>, usize>> {
        let rays: Vec<usize> = (0..self.diagram.len()).collect();
        tuples.iter().map(|t| Ok((t.clone(), self.matroid.rank_of(self.klyachko_intersection(&rays, t)?)))).collect()
    }
}

fn sorted(c: &[usize]) -> Vec<usize> {
    let mut c = c.to_vec();
    c.sort_unstable();
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    /// ℙ² with rays ordered (0,1), (1,0), (−1,−1) and the diagram of the
    /// Fano bundle (columns y1 y2 y3 z1 z2 z3 w).
    fn fano_bundle() -> TropicalBundle {
        let fan = Fan::new(2, vec![vec![0, 1], vec![1, 0], vec![-1, -1]], vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let d = vec![vec![2, 0, 0, 1, 0, 0, 1], vec![0, 2, 0, 0, 1, 0, 1], vec![0, 0, 2, 0, 0, 1, 1]];
        TropicalBundle::new(Matroid::fano(), fan, d).unwrap()
    }

    #[test]
    fn fano_validates() {
        let f = fano_bundle();
        let m = f.matroid();
        assert_eq!(f.adapted_bases()[0], m.set_of(&["y1", "y2", "w"]).unwrap());
        assert_eq!(f.klyachko_flat(0, 1).unwrap(), m.set_of(&["y1", "z1", "w"]).unwrap());
        assert_eq!(f.klyachko_flat(0, 2).unwrap(), m.set_of(&["y1"]).unwrap());
        assert_eq!(f.klyachko_flat(0, 3).unwrap(), Set::EMPTY);
        assert_eq!(f.klyachko_intersection(&[0, 1, 2], &[1, 1, 0]).unwrap(), m.set_of(&["w"]).unwrap());
    }

    #[test]
    fn fano_sections() {
        let f = fano_bundle();
        let m = f.matroid();
        let s = f.h0_u(&[1, 0]).unwrap();
        assert_eq!((s.flat, s.rank), (m.set_of(&["w", "y2", "z2"]).unwrap(), 2));
        assert_eq!(f.h0_u(&[2, 2]).unwrap().rank, 0);
        assert_eq!(f.h0_u_sigma(&[], &[7, -3]).unwrap().flat, m.ground());
    }

    #[test]
    fn fano_phi() {
        let f = fano_bundle();
        assert_eq!(f.phi_at(&[0, 1]).unwrap(), f.diagram()[0]);
        let p = f.phi_at(&[1, 1]).unwrap();
        assert!(is_bergman_point(f.matroid(), &p).unwrap());
        assert_eq!(p, vec![2; 7]);
        assert_eq!(f.phi_at(&[0, 0]).unwrap(), vec![0; 7]);
    }

    #[test]
    fn fano_classes() {
        let f = fano_bundle();
        let m = f.matroid();
        let chars = f.characters_on_cone(0).unwrap();
        let named: Vec<(&str, Vec<i64>)> = chars.iter().map(|(e, u)| (m.labels()[*e].as_str(), u.clone())).collect();
        assert_eq!(named, [("y1", vec![0, 2]), ("y2", vec![2, 0]), ("w", vec![1, 1])]);
        assert_eq!(f.chern_class(1)[0].to_string(), "3x1+3x2");
        assert_eq!(f.chern_class(2)[0].to_string(), "2x1^2+8x1x2+2x2^2");
        assert!(f.wall_incompatibilities().is_empty());
        assert!(f.is_globally_generated());
    }

    #[test]
    fn fano_n0_and_twist() {
        let f = fano_bundle();
        let l = LineBundle(vec![1, 1, 1]);
        assert_eq!(f.estimate_n0(&l).unwrap(), 1);
        let t = f.tensor_line_bundle(&l).unwrap();
        assert_eq!(t.diagram()[0], [3, 1, 1, 2, 1, 1, 2]);
        assert_eq!(t.estimate_n0(&l).unwrap(), 0);
        assert_eq!(f.estimate_n0(&LineBundle(vec![1, -1, 0])), Err(Error::NotAmple));
    }

    #[test]
    fn zero_bundle_euler() {
        let u = Matroid::uniform(2, 3).unwrap();
        let z = TropicalBundle::new(u, Fan::p2(), vec![vec![0; 3]; 3]).unwrap();
        assert_eq!(z.chi_u(&[0, 0]).unwrap(), 2);
        assert_eq!(z.chi_u(&[1, 0]).unwrap(), 0);
        assert_eq!(z.h0_u(&[1, 0]).unwrap().rank, 0);
        assert_eq!(z.chi_total().unwrap(), 2);
        assert_eq!(z.h0_total().unwrap(), 2);
        assert!(z.is_globally_generated());
        assert_eq!(z.estimate_n0(&LineBundle(vec![1, 1, 1])).unwrap(), 1);
        assert_eq!(z.chern_class(1)[0], Poly::zero(2));
    }

    #[test]
    fn flat_coefficients_u23() {
        let u = Matroid::uniform(2, 3).unwrap();
        let c = flat_coefficients(&u).unwrap();
        let get = |s: Set| c.iter().find(|x| x.0 == s).unwrap().1;
        assert_eq!(get(Set::EMPTY), 0);
        for i in 0..3 {
            assert_eq!(get(Set::singleton(i)), 1);
        }
        assert_eq!(get(u.ground()), -1);
        let r1 = Matroid::uniform(1, 3).unwrap();
        assert_eq!(flat_coefficients(&r1).unwrap(), [(Set::EMPTY, 0), (r1.ground(), 1)]);
    }

    #[test]
    fn vamos_p1_has_no_apartment() {
        let v = Matroid::vamos();
        let f = v.set_of(&["f1", "f2"]).unwrap();
        let h = v.set_of(&["h1", "h2"]).unwrap();
        let ind = |s: Set| (0..8).map(|i| s.contains(i) as i64).collect::<Vec<_>>();
        let ok = TropicalBundle::new(v.clone(), Fan::p1(), vec![ind(f), ind(h)]).unwrap();
        assert_eq!(ok.splits().unwrap(), None);
        // on a single cone both rows must share an apartment
        let fan = Fan::new(2, vec![vec![1, 0], vec![0, 1], vec![-1, -1]], vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let bad = TropicalBundle::new(v, fan, vec![ind(f), ind(h), vec![0; 8]]);
        assert_eq!(bad.err(), Some(Error::NoCommonApartment(0)));
    }

    #[test]
    fn fano_curve_restriction() {
        let f = fano_bundle();
        let wall = f.fan().walls().iter().position(|w| w.face == [1]).unwrap();
        let c = f.restrict_to_curve(wall).unwrap();
        let labels: Vec<&str> = c.bundle.matroid().labels().iter().map(|s| s.as_str()).collect();
        assert_eq!(labels, ["y1", "y2", "y3", "w"]);
        assert_eq!(c.bundle.diagram()[0], [2, 0, 0, 1]);
        assert_eq!(c.bundle.diagram()[1], [2, 2, 2, 2]);
        let s = c.bundle.splits().unwrap().unwrap();
        assert_eq!(s.degree_multiset(), [4, 3, 2]);
        // degrees sum to deg det E on the line: c1 = 9H
        assert_eq!(s.degree_multiset().iter().sum::<i64>(), 9);
        assert_eq!(f.is_ample().unwrap(), Positivity::Yes);
    }

    #[test]
    fn p1_rank_one_degree() {
        let m = Matroid::uniform(1, 1).unwrap();
        let b = TropicalBundle::new(m, Fan::p1(), vec![vec![3], vec![-5]]).unwrap();
        let s = b.splits().unwrap().unwrap();
        assert_eq!(s.degrees, [(0, -2)]);
        assert_eq!(b.is_nef().unwrap(), Positivity::No);
        assert!(!b.is_globally_generated());
        assert_eq!(b.restrict_to_curve(0).unwrap().bundle, b);
    }
}
