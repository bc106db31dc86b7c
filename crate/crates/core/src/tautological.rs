//! Tautological bundles on the permutahedral variety `X_m`.
//!
//! The fan lives in `ℤ^m/ℤ𝟙`, identified with `ℤ^{m−1}` by dropping the last
//! coordinate after subtracting `[m ∈ S]·𝟙`. Rows are shifted the same way:
//! entry `(S, i)` is `[i ∈ cl S] − [m ∈ S]`.

use alloc::vec::Vec;

use crate::bergman::bergman_projection;
use crate::bundle::TropicalBundle;
use crate::ext_split::{equivalent_split_search, principal_extension_catalog};
use crate::fan::{perm_ray_subsets, Fan};
use crate::matroid::Matroid;
use crate::{Error, Result, Set};

/// Sub-dual bundle `𝔈_M` or the quotient analogue `φ_χ^* 𝔈_{M^∨}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    SubDual,
    Quotient,
}

impl Which {
    /// `"taut:sub-dual"` / `"taut:quotient"`, prefix optional.
    pub fn parse(s: &str) -> Option<Which> {
        match s.strip_prefix("taut:").unwrap_or(s) {
            "sub-dual" => Some(Which::SubDual),
            "quotient" => Some(Which::Quotient),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Which::SubDual => "taut:sub-dual",
            Which::Quotient => "taut:quotient",
        }
    }
}

/// Indicator of `cl S`, before the quotient shift.
pub fn raw_row(m: &Matroid, s: Set) -> Vec<i64> {
    let c = m.closure(s);
    (0..m.len()).map(|i| c.contains(i) as i64).collect()
}

pub fn tautological_row(m: &Matroid, s: Set) -> Vec<i64> {
    let shift = s.contains(m.len() - 1) as i64;
    raw_row(m, s).into_iter().map(|v| v - shift).collect()
}

fn check_loopless(m: &Matroid) -> Result<()> {
    if let Some(e) = m.closure(Set::EMPTY).first() {
        return Err(Error::LoopDetected(m.labels()[e].clone()));
    }
    if m.len() < 2 {
        return Err(Error::TooLarge("tautological bundles need at least 2 elements".into()));
    }
    Ok(())
}

pub fn tautological_bundle(m: &Matroid) -> Result<TropicalBundle> {
    check_loopless(m)?;
    let fan = Fan::permutahedral(m.len())?;
    let diagram = perm_ray_subsets(m.len()).into_iter().map(|s| tautological_row(m, s)).collect();
    TropicalBundle::new(m.clone(), fan, diagram)
}

pub fn build(m: &Matroid, which: Which) -> Result<TropicalBundle> {
    match which {
        Which::SubDual => tautological_bundle(m),
        Which::Quotient => cremona_pullback(&tautological_bundle(&m.dual())?),
    }
}

/// Greedy basis for the weights `Σ_j δ_{S_j}` of a permutation cone's chain.
pub fn greedy_basis_of_cone(m: &Matroid, fan: &Fan, k: usize) -> Result<Set> {
    let subsets = perm_ray_subsets(m.len());
    let cone = fan.max_cones().get(k).ok_or(Error::NonMaximalCone)?;
    let w: Vec<i64> = (0..m.len()).map(|i| cone.iter().filter(|&&r| subsets[r].contains(i)).count() as i64).collect();
    m.greedy_basis(&w, None)
}

/// Pullback along `x ↦ −x`, which sends the ray of `S` to that of its
/// complement.
pub fn cremona_pullback(e: &TropicalBundle) -> Result<TropicalBundle> {
    let d = e.fan().dim();
    if *e.fan() != Fan::permutahedral(d + 1).map_err(|_| Error::WrongFan)? {
        return Err(Error::WrongFan);
    }
    let lambda: Vec<Vec<i64>> = (0..d).map(|i| (0..d).map(|j| -((i == j) as i64)).collect()).collect();
    e.pullback_linear(&lambda, e.fan())
}

/// Projects each row of `psi` to the Bergman fan and validates on `fan`.
/// A `NoCommonApartment` error means the fan must be refined.
pub fn bundle_from_pl_data(m: &Matroid, fan: &Fan, psi: &[Vec<i64>]) -> Result<TropicalBundle> {
    let rows = psi.iter().map(|r| bergman_projection(m, r)).collect::<Result<Vec<_>>>()?;
    TropicalBundle::new(m.clone(), fan.clone(), rows)
}

/// Outcome at one wall of the nef sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WallType {
    pub wall: usize,
    /// Degrees sorted decreasingly, `None` if no split representative was found.
    pub degrees: Option<Vec<i64>>,
    /// Ground indices of the restricted matroid.
    pub elements: Vec<usize>,
    /// Flat of the restricted matroid carrying the extra element when the
    /// restriction only splits after a principal extension.
    pub extension: Option<Set>,
}

impl WallType {
    /// Degree multiset `{1,0,…,0}` or `{0,…,0}`.
    pub fn is_nef_type(&self) -> bool {
        self.degrees.as_ref().is_some_and(|d| d.iter().all(|&x| x == 0) || (d[0] == 1 && d[1..].iter().all(|&x| x == 0)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NefReport {
    pub walls: Vec<WallType>,
}

impl NefReport {
    pub fn holds(&self) -> bool {
        self.walls.iter().all(WallType::is_nef_type)
    }
}

/// Largest ground set swept without `allow_large`.
pub const NEF_SWEEP_LIMIT: usize = 6;

/// Splitting types of the tautological bundle at every wall of `Σ_m`.
/// Restrictions without a common adapted basis are retried on the principal
/// extensions of the restricted matroid.
pub fn nef_certificate_tautological(m: &Matroid, allow_large: bool) -> Result<NefReport> {
    if m.len() > NEF_SWEEP_LIMIT && !(allow_large && m.len() <= NEF_SWEEP_LIMIT + 1) {
        return Err(Error::ScaleGuard(m.len()));
    }
    let e = tautological_bundle(m)?;
    let mut walls = Vec::with_capacity(e.fan().walls().len());
    for w in 0..e.fan().walls().len() {
        let c = e.restrict_to_curve(w)?;
        let (degrees, extension) = match c.bundle.splits()? {
            Some(s) => (Some(s.degree_multiset()), None),
            None => {
                let sub = c.bundle.matroid();
                let catalog = principal_extension_catalog(sub, "z")?;
                let flats: Vec<Set> = sub.all_flats().filter(|f| !f.is_empty()).collect();
                match equivalent_split_search(&c.bundle, &catalog)? {
                    Some(wit) => (Some(wit.splitting.degree_multiset()), wit.candidate.map(|i| flats[i])),
                    None => (None, None),
                }
            }
        };
        walls.push(WallType { wall: w, degrees, elements: c.elements, extension });
    }
    Ok(NefReport { walls })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bergman::apartment_contains;
    use alloc::vec;

    #[test]
    fn u12() {
        let u = Matroid::uniform(1, 2).unwrap();
        let e = tautological_bundle(&u).unwrap();
        assert_eq!(e.diagram(), [vec![1, 1], vec![0, 0]]);
        assert_eq!(e.splits().unwrap().unwrap().degree_multiset(), [1]);
        let r = nef_certificate_tautological(&u, false).unwrap();
        assert_eq!(r.walls.len(), 1);
        assert_eq!(r.walls[0].degrees, Some(vec![1]));
        assert_eq!(cremona_pullback(&e).unwrap().diagram(), [vec![0, 0], vec![1, 1]]);
    }

    #[test]
    fn u23_rows() {
        let u = Matroid::uniform(2, 3).unwrap();
        let e = tautological_bundle(&u).unwrap();
        // mask 3 = {1,2}, mask 4 = {3}
        assert_eq!(e.diagram()[2], [1, 1, 1]);
        assert_eq!(raw_row(&u, Set::singleton(2)), [0, 0, 1]);
        assert_eq!(e.diagram()[3], [-1, -1, 0]);
        assert!(e.is_globally_generated());
    }

    #[test]
    fn greedy_bases_adapted() {
        for m in [Matroid::uniform(2, 4).unwrap(), Matroid::uniform(3, 5).unwrap()] {
            let e = tautological_bundle(&m).unwrap();
            for (k, cone) in e.fan().max_cones().iter().enumerate() {
                let b = greedy_basis_of_cone(&m, e.fan(), k).unwrap();
                assert!(cone.iter().all(|&r| apartment_contains(&m, b, &e.diagram()[r]).unwrap()));
            }
        }
    }

    #[test]
    fn cremona_swaps_complements() {
        let u = Matroid::uniform(2, 3).unwrap();
        let e = tautological_bundle(&u).unwrap();
        let c = cremona_pullback(&e).unwrap();
        let subsets = perm_ray_subsets(3);
        for (k, s) in subsets.iter().enumerate() {
            let comp = subsets.iter().position(|t| *t == u.ground().difference(*s)).unwrap();
            assert_eq!(c.diagram()[k], e.diagram()[comp]);
            // the 0/−1 rule on representatives, shifted into the quotient
            let complement: Vec<i64> = raw_row(&u, u.ground().difference(*s)).iter().map(|v| v - 1).collect();
            let shifted: Vec<i64> = complement.iter().map(|v| v + s.contains(2) as i64).collect();
            assert_eq!(c.diagram()[k], shifted);
        }
        assert_eq!(cremona_pullback(&c).unwrap(), e);
        assert_eq!(cremona_pullback(&TropicalBundle::new(u, Fan::p2(), vec![vec![0; 3]; 3]).unwrap()).err(), Some(Error::WrongFan));
    }

    #[test]
    fn pl_data() {
        let u = Matroid::uniform(2, 3).unwrap();
        let b = bundle_from_pl_data(&u, &Fan::p1(), &[vec![0, 1, 1], vec![0, 0, 0]]).unwrap();
        assert_eq!(b.diagram(), [vec![1, 1, 1], vec![0, 0, 0]]);
        // two disjoint lines of U₃,₄ have defect 1, so no basis spans both
        let u34 = Matroid::uniform(3, 4).unwrap();
        let r = bundle_from_pl_data(&u34, &Fan::p2(), &[vec![1, 1, 0, 0], vec![0, 0, 1, 1], vec![0; 4]]);
        assert_eq!(r.err(), Some(Error::NoCommonApartment(0)));
    }

    #[test]
    fn nef_small() {
        for m in [Matroid::uniform(2, 3).unwrap(), Matroid::uniform(2, 4).unwrap(), Matroid::uniform(3, 4).unwrap()] {
            let r = nef_certificate_tautological(&m, false).unwrap();
            assert!(r.holds(), "{:?}", r.walls.iter().find(|w| !w.is_nef_type()));
        }
        assert_eq!(nef_certificate_tautological(&Matroid::fano(), false).err(), Some(Error::ScaleGuard(7)));
    }

    #[test]
    fn quotient_kind() {
        let u = Matroid::uniform(2, 3).unwrap();
        let q = build(&u, Which::Quotient).unwrap();
        assert_eq!(q.matroid(), &u.dual());
        assert_eq!(Which::parse("taut:quotient"), Some(Which::Quotient));
        assert_eq!(Which::parse(Which::SubDual.name()), Some(Which::SubDual));
    }
}
