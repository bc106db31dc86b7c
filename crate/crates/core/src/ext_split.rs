//! Bundles under matroid extensions: pushforward, bounded search for a split
//! representative over `ℙ¹`, and the submodularity obstruction.

use alloc::format;
use alloc::vec::Vec;

use crate::bergman::{flag_filtration, pushforward_point};
use crate::bundle::{Splitting, TropicalBundle};
use crate::matroid::{ExtensionMap, Matroid};
use crate::{Error, Result, Set};

/// A split representative found by [`equivalent_split_search`].
#[derive(Clone, Debug)]
pub struct SplitWitness {
    /// Index into the candidate list, `None` for the identity.
    pub candidate: Option<usize>,
    pub extension: ExtensionMap,
    pub splitting: Splitting,
}

/// A pair of flats with positive submodular defect.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Obstruction {
    pub f: Set,
    pub h: Set,
    pub defect: i64,
}

fn check_extension(phi: &ExtensionMap, m: &Matroid) -> Result<()> {
    if phi.source != *m {
        return Err(Error::NotAnExtension);
    }
    match phi.is_extension() {
        Ok(true) => Ok(()),
        _ => Err(Error::NotAnExtension),
    }
}

/// Pushes every row along `phi`; the fan is unchanged.
pub fn pushforward_bundle(phi: &ExtensionMap, e: &TropicalBundle) -> Result<TropicalBundle> {
    check_extension(phi, e.matroid())?;
    let diagram = e.diagram().iter().map(|row| pushforward_point(phi, row)).collect::<Result<Vec<_>>>()?;
    TropicalBundle::new(phi.target.clone(), e.fan().clone(), diagram)
}

/// Tries the bundle itself, then each candidate in order, and returns the
/// first pushforward with a common adapted basis.
pub fn equivalent_split_search(e: &TropicalBundle, candidates: &[ExtensionMap]) -> Result<Option<SplitWitness>> {
    if let Some(splitting) = e.splits()? {
        return Ok(Some(SplitWitness { candidate: None, extension: ExtensionMap::identity(e.matroid()), splitting }));
    }
    for phi in candidates {
        check_extension(phi, e.matroid())?;
    }
    for (i, phi) in candidates.iter().enumerate() {
        if let Some(splitting) = pushforward_bundle(phi, e)?.splits()? {
            return Ok(Some(SplitWitness { candidate: Some(i), extension: phi.clone(), splitting }));
        }
    }
    Ok(None)
}

/// Principal extensions on every nonempty flat, the new element labelled
/// `label`.
pub fn principal_extension_catalog(m: &Matroid, label: &str) -> Result<Vec<ExtensionMap>> {
    m.all_flats().filter(|f| !f.is_empty()).map(|f| m.principal_extension(f, label)).collect()
}

/// First pair `(F, H)` from the flags of the two rows with
/// `rk F + rk H − rk(F ∪ H) − rk(F ∩ H) > 0`. A common adapted basis would
/// contain bases of both, so such a pair rules out splitting within the
/// matroid.
pub fn defect_obstruction(e: &TropicalBundle) -> Result<Option<Obstruction>> {
    if *e.fan() != crate::fan::Fan::p1() {
        return Err(Error::WrongFan);
    }
    let m = e.matroid();
    let flats = |row: &[i64]| -> Result<Vec<Set>> {
        Ok(flag_filtration(m, row)?.levels.into_iter().map(|(_, f)| f).filter(|f| !f.is_empty() && *f != m.ground()).collect())
    };
    let (a, b) = (flats(&e.diagram()[0])?, flats(&e.diagram()[1])?);
    for &f in &a {
        for &h in &b {
            let defect = m.submodular_defect(f, h)?;
            if defect > 0 {
                return Ok(Some(Obstruction { f, h, defect }));
            }
        }
    }
    Ok(None)
}

/// A tuple on which two bundles over the same fan have Klyachko
/// intersections of different rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankDifference {
    pub tuple: Vec<i64>,
    pub left: usize,
    pub right: usize,
}

/// Compares ranks of `∩_ρ F^ρ_{r_ρ}` for every `r ∈ [lo, hi]^n`.
pub fn compare_klyachko_ranks(a: &TropicalBundle, b: &TropicalBundle, lo: i64, hi: i64) -> Result<Vec<RankDifference>> {
    if a.fan() != b.fan() {
        return Err(Error::WrongFan);
    }
    let n = a.fan().rays().len();
    let span = (hi - lo + 1).max(0) as u64;
    if span.checked_pow(n as u32).is_none_or(|t| t > 1 << 22) {
        return Err(Error::TooLarge(format!("window {span}^{n}")));
    }
    let rays: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    for t in crate::polyhedron::box_points(&alloc::vec![lo; n], &alloc::vec![hi; n]) {
        let left = a.matroid().rank_of(a.klyachko_intersection(&rays, &t)?);
        let right = b.matroid().rank_of(b.klyachko_intersection(&rays, &t)?);
        if left != right {
            out.push(RankDifference { tuple: t, left, right });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::Fan;
    use alloc::vec;

    fn indicator(m: &Matroid, s: Set) -> Vec<i64> {
        (0..m.len()).map(|i| s.contains(i) as i64).collect()
    }

    fn vamos_p1() -> TropicalBundle {
        let v = Matroid::vamos();
        let f = v.set_of(&["f1", "f2"]).unwrap();
        let h = v.set_of(&["h1", "h2"]).unwrap();
        TropicalBundle::new(v.clone(), Fan::p1(), vec![indicator(&v, f), indicator(&v, h)]).unwrap()
    }

    #[test]
    fn vamos_obstruction() {
        let b = vamos_p1();
        let v = b.matroid();
        let o = defect_obstruction(&b).unwrap().unwrap();
        assert_eq!((o.f, o.h, o.defect), (v.set_of(&["f1", "f2"]).unwrap(), v.set_of(&["h1", "h2"]).unwrap(), 1));
        let catalog = principal_extension_catalog(v, "z").unwrap();
        assert_eq!(catalog.len(), v.all_flats().count() - 1);
        assert!(equivalent_split_search(&b, &catalog).unwrap().is_none());
    }

    #[test]
    fn identity_witness() {
        let f = Matroid::fano();
        let rows = vec![indicator(&f, f.closure(Set::from_indices([0, 1]))), indicator(&f, Set::singleton(6))];
        let b = TropicalBundle::new(f, Fan::p1(), rows).unwrap();
        let w = equivalent_split_search(&b, &[]).unwrap().unwrap();
        assert_eq!(w.candidate, None);
        assert_eq!(defect_obstruction(&b).unwrap(), None);
    }

    #[test]
    fn pushforward_u23_to_u24() {
        let u = Matroid::uniform(2, 3).unwrap();
        let phi = ExtensionMap { source: u.clone(), target: Matroid::uniform(2, 4).unwrap(), map: vec![0, 1, 2] };
        let b = TropicalBundle::new(u.clone(), Fan::p1(), vec![vec![0, 0, 1], vec![2, 1, 1]]).unwrap();
        let p = pushforward_bundle(&phi, &b).unwrap();
        assert_eq!(p.diagram(), [vec![0, 0, 1, 0], vec![2, 1, 1, 1]]);
        assert_eq!(p.chern_class(1), b.chern_class(1));
        assert_eq!(p.k_class(), b.k_class());
        assert_eq!(pushforward_bundle(&ExtensionMap::identity(&u), &b).unwrap(), b);
        let bad = ExtensionMap { source: u, target: Matroid::uniform(3, 4).unwrap(), map: vec![0, 1, 2] };
        assert_eq!(pushforward_bundle(&bad, &b).err(), Some(Error::NotAnExtension));
    }

    #[test]
    fn rank_comparison() {
        let b = vamos_p1();
        let ext = b.matroid().principal_extension(b.matroid().set_of(&["f1", "f2"]).unwrap(), "z").unwrap();
        let p = pushforward_bundle(&ext, &b).unwrap();
        assert!(compare_klyachko_ranks(&b, &p, -1, 2).unwrap().is_empty());
        let u = Matroid::uniform(1, 2).unwrap();
        let x = TropicalBundle::new(u.clone(), Fan::p1(), vec![vec![0, 0], vec![0, 0]]).unwrap();
        let y = TropicalBundle::new(u, Fan::p1(), vec![vec![1, 1], vec![0, 0]]).unwrap();
        assert!(compare_klyachko_ranks(&x, &y, 1, 1).unwrap().is_empty());
        assert_eq!(compare_klyachko_ranks(&x, &y, 0, 1).unwrap(), [RankDifference { tuple: vec![1, 0], left: 0, right: 1 }]);
    }
}
