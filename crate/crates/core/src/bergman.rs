//! Points of the Bergman fan, weighted flags of flats, apartments and the
//! projection `Φ_M`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::matroid::{ExtensionMap, Matroid};
use crate::{Error, Result, Set};

fn check_len(m: &Matroid, w: &[i64]) -> Result<()> {
    if w.len() != m.len() {
        return Err(Error::DimensionMismatch { expected: m.len(), got: w.len() });
    }
    Ok(())
}

/// True iff every circuit attains its minimum at least twice.
pub fn is_bergman_point(m: &Matroid, w: &[i64]) -> Result<bool> {
    check_len(m, w)?;
    Ok(m.circuits().iter().all(|c| {
        let lo = c.iter().map(|e| w[e]).min().unwrap();
        c.iter().filter(|&e| w[e] == lo).count() >= 2
    }))
}

/// Thresholds `r_1 > r_2 > …` with flats `F_{r_1} ⊊ F_{r_2} ⊊ … = M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedFlag {
    pub levels: Vec<(i64, Set)>,
}

/// `F_r = {i : w_i ≥ r}` at each distinct value `r` of `w`.
pub fn flag_filtration(m: &Matroid, w: &[i64]) -> Result<WeightedFlag> {
    if !is_bergman_point(m, w)? {
        return Err(Error::NotBergman);
    }
    Ok(WeightedFlag { levels: raw_levels(w) })
}

fn raw_levels(w: &[i64]) -> Vec<(i64, Set)> {
    let mut values: Vec<i64> = w.to_vec();
    values.sort_unstable_by(|a, b| b.cmp(a));
    values.dedup();
    values.into_iter().map(|r| (r, w.iter().enumerate().filter(|(_, &x)| x >= r).map(|(i, _)| i).collect())).collect()
}

/// `w_i = max{r : i ∈ F_r}`.
pub fn point_from_flag(m: &Matroid, flag: &WeightedFlag) -> Result<Vec<i64>> {
    let lv = &flag.levels;
    if lv.is_empty() || lv.last().unwrap().1 != m.ground() {
        return Err(Error::NotNested);
    }
    for (i, &(r, f)) in lv.iter().enumerate() {
        if !f.is_subset(m.ground()) || !m.is_flat(f) {
            return Err(Error::NotAFlat);
        }
        if i > 0 {
            let (r0, f0) = lv[i - 1];
            if r0 <= r || !f0.is_subset(f) || f0 == f {
                return Err(Error::NotNested);
            }
        }
    }
    let mut w = alloc::vec![0; m.len()];
    for (r, f) in lv.iter().rev() {
        for e in f.iter() {
            w[e] = *r;
        }
    }
    Ok(w)
}

/// `π_B(w)`: the coordinates of `w` on `B`, in index order.
pub fn project_b(b: Set, w: &[i64]) -> Vec<i64> {
    b.iter().map(|e| w[e]).collect()
}

/// `φ_B(a)`: basis coordinates `a` (index order of `B`), every other element
/// gets the minimum over its fundamental circuit minus itself.
pub fn phi_b(m: &Matroid, b: Set, a: &[i64]) -> Result<Vec<i64>> {
    let fc = m.fundamental_of(b)?;
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch { expected: b.len(), got: a.len() });
    }
    let mut w = alloc::vec![0; m.len()];
    for (e, v) in b.iter().zip(a) {
        w[e] = *v;
    }
    for &(e, rest) in fc {
        w[e] = rest.iter().map(|x| w[x]).min().unwrap();
    }
    Ok(w)
}

/// `φ_B(π_B(w)) = w`.
pub fn apartment_contains(m: &Matroid, b: Set, w: &[i64]) -> Result<bool> {
    check_len(m, w)?;
    let fc = m.fundamental_of(b)?;
    Ok(fc.iter().all(|&(e, rest)| rest.iter().map(|x| w[x]).min() == Some(w[e])))
}

/// Bases whose apartment contains every row, in lex order.
pub fn common_adapted_bases(m: &Matroid, rows: &[&[i64]]) -> Result<Vec<Set>> {
    for r in rows {
        check_len(m, r)?;
    }
    Ok(m.bases().iter().copied().filter(|&b| rows.iter().all(|w| apartment_contains(m, b, w).unwrap())).collect())
}

/// First (lex-smallest) basis adapted to every row.
pub fn first_common_adapted_basis(m: &Matroid, rows: &[&[i64]]) -> Result<Option<Set>> {
    for r in rows {
        check_len(m, r)?;
    }
    Ok(m.bases().iter().copied().find(|&b| rows.iter().all(|w| apartment_contains(m, b, w).unwrap())))
}

pub fn adapted_bases(m: &Matroid, w: &[i64]) -> Result<Vec<Set>> {
    common_adapted_bases(m, &[w])
}

/// `Φ_M(w)_i = max{k : i ∈ cl{j : w_j ≥ k}}`.
pub fn bergman_projection(m: &Matroid, w: &[i64]) -> Result<Vec<i64>> {
    check_len(m, w)?;
    let mut out = alloc::vec![i64::MIN; m.len()];
    for (r, f) in raw_levels(w) {
        for e in m.closure(f).iter() {
            if out[e] == i64::MIN {
                out[e] = r;
            }
        }
    }
    Ok(out)
}

/// Symmetric functions evaluated on `π_B(w)` for an adapted basis `B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymmetricKind {
    Elementary(usize),
    Power(u32),
    /// `Σ_{k ≤ n} p_k / k!`
    ExpTruncated(u32),
}

pub fn symmetric_of(values: &[i64], kind: SymmetricKind) -> BigRational {
    let big = |v: i64| BigRational::from_integer(BigInt::from(v));
    match kind {
        SymmetricKind::Elementary(i) => {
            let mut e = alloc::vec![BigRational::zero(); values.len() + 1];
            e[0] = BigRational::one();
            for &v in values {
                for k in (1..e.len()).rev() {
                    let t = &e[k - 1] * big(v);
                    e[k] += t;
                }
            }
            e.get(i).cloned().unwrap_or_else(BigRational::zero)
        }
        SymmetricKind::Power(k) => values.iter().map(|&v| big(v).pow(k as i32)).sum(),
        SymmetricKind::ExpTruncated(n) => {
            let mut fact = BigRational::one();
            let mut total = BigRational::zero();
            for k in 0..=n {
                if k > 0 {
                    fact *= big(k as i64);
                }
                let p: BigRational = values.iter().map(|&v| big(v).pow(k as i32)).sum();
                total += p / &fact;
            }
            total
        }
    }
}

/// `g(π_B(w))` for the lex-smallest adapted basis; independent of the choice.
pub fn symmetric_evaluate(m: &Matroid, w: &[i64], kind: SymmetricKind) -> Result<BigRational> {
    if !is_bergman_point(m, w)? {
        return Err(Error::NotBergman);
    }
    let b = first_common_adapted_basis(m, &[w])?.expect("a Bergman point lies in some apartment");
    Ok(symmetric_of(&project_b(b, w), kind))
}

/// `φ_*(w)`: span each flat of the flag of `w` in the target and read the
/// coordinates back.
pub fn pushforward_point(phi: &ExtensionMap, w: &[i64]) -> Result<Vec<i64>> {
    let flag = flag_filtration(&phi.source, w)?;
    let t = &phi.target;
    let mut out = alloc::vec![i64::MIN; t.len()];
    for (r, f) in flag.levels {
        for e in t.closure(phi.image(f)).iter() {
            if out[e] == i64::MIN {
                out[e] = r;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn fano_row1() -> Vec<i64> {
        vec![2, 0, 0, 1, 0, 0, 1]
    }

    #[test]
    fn membership_examples() {
        let u = Matroid::uniform(2, 3).unwrap();
        assert!(is_bergman_point(&u, &[0, 0, 1]).unwrap());
        assert!(!is_bergman_point(&u, &[0, 1, 1]).unwrap());
        assert_eq!(is_bergman_point(&u, &[0, 1]), Err(Error::DimensionMismatch { expected: 3, got: 2 }));
        let f = Matroid::fano();
        let line = f.set_of(&["w", "y2", "z2"]).unwrap();
        let ind: Vec<i64> = (0..7).map(|i| line.contains(i) as i64).collect();
        assert!(is_bergman_point(&f, &ind).unwrap());
    }

    #[test]
    fn flags() {
        let u = Matroid::uniform(2, 3).unwrap();
        assert_eq!(flag_filtration(&u, &[0, 0, 0]).unwrap().levels, [(0, u.ground())]);
        let f = Matroid::fano();
        let flag = flag_filtration(&f, &fano_row1()).unwrap();
        let expect = [(2, f.set_of(&["y1"]).unwrap()), (1, f.set_of(&["y1", "z1", "w"]).unwrap()), (0, f.ground())];
        assert_eq!(flag.levels, expect);
        assert_eq!(point_from_flag(&f, &flag).unwrap(), fano_row1());
        let bad = WeightedFlag { levels: vec![(1, f.set_of(&["y1", "z1"]).unwrap()), (0, f.ground())] };
        assert_eq!(point_from_flag(&f, &bad), Err(Error::NotAFlat));
        let unnested = WeightedFlag { levels: vec![(0, f.set_of(&["y1"]).unwrap()), (1, f.ground())] };
        assert_eq!(point_from_flag(&f, &unnested), Err(Error::NotNested));
    }

    #[test]
    fn apartments() {
        let u = Matroid::uniform(2, 3).unwrap();
        assert_eq!(phi_b(&u, Set::from_indices([0, 1]), &[0, 1]).unwrap(), [0, 1, 0]);
        assert_eq!(adapted_bases(&u, &[0, 0, 0]).unwrap().len(), 3);
        assert_eq!(phi_b(&u, Set::from_indices([0]), &[0]), Err(Error::NotABasis));
        let f = Matroid::fano();
        let b = f.set_of(&["y1", "y2", "w"]).unwrap();
        // basis coordinates in index order: y1, y2, w
        let w = phi_b(&f, b, &[2, 0, 1]).unwrap();
        assert_eq!(w[3], 1);
        assert_eq!(w, fano_row1());
    }

    #[test]
    fn projection_examples() {
        let u = Matroid::uniform(2, 3).unwrap();
        assert_eq!(bergman_projection(&u, &[0, 1, 1]).unwrap(), [1, 1, 1]);
        let f = Matroid::fano();
        let d = f.set_of(&["y1", "y2"]).unwrap();
        let w: Vec<i64> = (0..7).map(|i| d.contains(i) as i64).collect();
        let cl = f.set_of(&["y1", "y2", "z3"]).unwrap();
        let want: Vec<i64> = (0..7).map(|i| cl.contains(i) as i64).collect();
        assert_eq!(bergman_projection(&f, &w).unwrap(), want);
    }

    #[test]
    fn symmetric_examples() {
        let u = Matroid::uniform(2, 3).unwrap();
        let one = BigRational::one();
        assert_eq!(symmetric_evaluate(&u, &[0, 0, 1], SymmetricKind::Elementary(1)).unwrap(), one);
        assert_eq!(symmetric_evaluate(&u, &[3, 3, 3], SymmetricKind::Elementary(2)).unwrap(), BigRational::from_integer(9.into()));
        let f = Matroid::fano();
        assert_eq!(symmetric_evaluate(&f, &fano_row1(), SymmetricKind::Power(2)).unwrap(), BigRational::from_integer(5.into()));
        assert_eq!(symmetric_evaluate(&u, &[0, 1, 1], SymmetricKind::Power(1)), Err(Error::NotBergman));
        // exp truncated at 1 on (0,1): p0 + p1 = 2 + 1
        assert_eq!(symmetric_evaluate(&u, &[0, 0, 1], SymmetricKind::ExpTruncated(1)).unwrap(), BigRational::from_integer(3.into()));
    }

    #[test]
    fn pushforward_examples() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        let id = ExtensionMap::identity(&u23);
        assert_eq!(pushforward_point(&id, &[0, 0, 1]).unwrap(), [0, 0, 1]);
        let into = ExtensionMap { source: u23, target: Matroid::uniform(2, 4).unwrap(), map: vec![0, 1, 2] };
        assert!(into.is_extension().unwrap());
        assert_eq!(pushforward_point(&into, &[0, 0, 1]).unwrap(), [0, 0, 1, 0]);
    }
}
