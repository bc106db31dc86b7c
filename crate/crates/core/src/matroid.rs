//! Finite loop-free matroids stored by their basis family.
//!
//! Ground elements are indices `0..m` carrying string labels; the index order
//! is the fixed total order used for every tie-break. Independence, circuits,
//! flats and fundamental circuits are computed once at construction, so a
//! `Matroid` is immutable and cheap to share.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::Add;

use num_traits::Zero;

use crate::linalg;
use crate::{Error, Result, Set};

/// Largest ground set accepted (the independence table has `2^m` bits).
pub const MAX_ELEMENTS: usize = 20;

#[derive(Clone, Debug)]
pub struct Matroid {
    labels: Vec<String>,
    rank: usize,
    bases: Vec<Set>,
    indep: Vec<u64>,
    circuits: Vec<Set>,
    flats: Vec<Vec<Set>>,
    fundamental: Vec<Vec<(usize, Set)>>,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.bases == other.bases
    }
}

impl Eq for Matroid {}

/// Coefficient field for [`Matroid::linear`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Field {
    Rational,
    Prime(u64),
}

/// All `k`-subsets of `{0..m}` in increasing bitmask order.
pub fn subsets_of_size(m: usize, k: usize) -> impl Iterator<Item = Set> {
    let limit: u64 = if m >= 64 { u64::MAX } else { 1u64 << m };
    let mut cur: Option<u64> = if k > m {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some((1u64 << k) - 1)
    };
    core::iter::from_fn(move || {
        let c = cur?;
        cur = if c == 0 {
            None
        } else {
            // Gosper's hack
            let low = c & c.wrapping_neg();
            let ripple = c + low;
            let next = (((ripple ^ c) >> 2) / low) | ripple;
            (next < limit && ripple != 0).then_some(next)
        };
        Some(Set(c))
    })
}

/// Re-indexes `s` onto the positions of `keep` (sorted old indices).
pub(crate) fn compress(s: Set, keep: &[usize]) -> Set {
    keep.iter().enumerate().filter(|(_, &old)| s.contains(old)).map(|(new, _)| new).collect()
}

impl Matroid {
    /// Builds and validates a matroid from its bases (index lists).
    pub fn from_bases(labels: Vec<String>, bases: &[Vec<usize>]) -> Result<Matroid> {
        let m = labels.len();
        let mut sets = Vec::with_capacity(bases.len());
        for b in bases {
            for &i in b {
                if i >= m {
                    return Err(Error::UnknownLabel(format!("index {i}")));
                }
            }
            sets.push(Set::from_indices(b.iter().copied()));
        }
        Self::from_basis_sets(labels, sets)
    }

    /// Builds from bases given by label.
    pub fn from_labeled_bases(labels: &[&str], bases: &[&[&str]]) -> Result<Matroid> {
        let labels: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        let mut sets = Vec::new();
        for b in bases {
            sets.push(set_of_labels(&labels, b)?);
        }
        Self::from_basis_sets(labels, sets)
    }

    pub fn from_basis_sets(labels: Vec<String>, bases: Vec<Set>) -> Result<Matroid> {
        let m = labels.len();
        if m > MAX_ELEMENTS {
            return Err(Error::TooLarge(format!("{m} elements (limit {MAX_ELEMENTS})")));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let mut bases: Vec<Set> = bases.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        if bases.is_empty() {
            return Err(Error::EmptyBases);
        }
        let rank = bases[0].len();
        if bases.iter().any(|b| b.len() != rank || !b.is_subset(Set::full(m))) {
            return Err(Error::ExchangeAxiomViolation { basis: String::from("(unequal sizes)"), other: String::new(), element: String::new() });
        }
        bases.sort_by(|a, b| a.lex_cmp(*b));
        let indep = independence_table(m, rank, &bases);
        let is_basis = |s: Set| s.len() == rank && bit(&indep, s);
        for &b1 in &bases {
            for &b2 in &bases {
                for e in b1.difference(b2).iter() {
                    let ok = b2.difference(b1).iter().any(|f| is_basis(b1.without(e).with(f)));
                    if !ok {
                        return Err(Error::ExchangeAxiomViolation { basis: join(&labels, b1), other: join(&labels, b2), element: labels[e].clone() });
                    }
                }
            }
        }
        let covered = bases.iter().fold(Set::EMPTY, |acc, b| acc.union(*b));
        if let Some(l) = Set::full(m).difference(covered).first() {
            return Err(Error::LoopDetected(labels[l].clone()));
        }
        let mut mat = Matroid { labels, rank, bases, indep, circuits: Vec::new(), flats: Vec::new(), fundamental: Vec::new() };
        mat.fundamental =
            mat.bases.iter().map(|&b| Set::full(m).difference(b).iter().map(|e| (e, mat.fundamental_unchecked(e, b).without(e))).collect()).collect();
        let mut circuits: BTreeSet<Set> = BTreeSet::new();
        for fc in &mat.fundamental {
            for &(e, c) in fc {
                circuits.insert(c.with(e));
            }
        }
        mat.circuits = circuits.into_iter().collect();
        mat.circuits.sort_by(|a, b| a.len().cmp(&b.len()).then(a.lex_cmp(*b)));
        mat.flats = mat.compute_flats();
        Ok(mat)
    }

    /// Builds from the circuit family; the circuit axioms are checked by
    /// recomputing the circuits of the resulting basis family.
    pub fn from_circuits(labels: Vec<String>, circuits: Vec<Set>) -> Result<Matroid> {
        let m = labels.len();
        if m > MAX_ELEMENTS {
            return Err(Error::TooLarge(format!("{m} elements (limit {MAX_ELEMENTS})")));
        }
        if circuits.iter().any(|c| c.is_empty()) {
            return Err(Error::InvalidCircuits(String::from("empty circuit")));
        }
        let dependent = |s: Set| circuits.iter().any(|c| c.is_subset(s));
        let mut bases = Vec::new();
        for k in (0..=m).rev() {
            bases = subsets_of_size(m, k).filter(|s| !dependent(*s)).collect();
            if !bases.is_empty() {
                break;
            }
        }
        let mat = Self::from_basis_sets(labels, bases).map_err(|e| Error::InvalidCircuits(format!("{e}")))?;
        let mut given: Vec<Set> = circuits.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        given.sort_by(|a, b| a.len().cmp(&b.len()).then(a.lex_cmp(*b)));
        if given != mat.circuits {
            return Err(Error::InvalidCircuits(String::from("family is not the circuit set of any matroid")));
        }
        Ok(mat)
    }

    /// `U_{r,m}` on labels `e1..em`.
    pub fn uniform(r: usize, m: usize) -> Result<Matroid> {
        let labels = (1..=m).map(|i| format!("e{i}")).collect();
        Self::from_basis_sets(labels, subsets_of_size(m, r).collect())
    }

    /// The Fano plane on `y1,y2,y3,z1,z2,z3,w`.
    pub fn fano() -> Matroid {
        let labels = ["y1", "y2", "y3", "z1", "z2", "z3", "w"];
        let lines: [[&str; 3]; 7] =
            [["y1", "w", "z1"], ["y2", "w", "z2"], ["y3", "w", "z3"], ["y3", "y1", "z2"], ["y1", "y2", "z3"], ["y2", "y3", "z1"], ["z1", "z2", "z3"]];
        Self::excluding(&labels, 3, &lines.map(|l| l.to_vec()))
    }

    /// The Vámos matroid on `h1,h2,f1,f2,e,p,g,q`.
    pub fn vamos() -> Matroid {
        let labels = ["h1", "h2", "f1", "f2", "e", "p", "g", "q"];
        let planes: [[&str; 4]; 5] = [["h1", "h2", "f1", "f2"], ["h1", "h2", "e", "p"], ["f1", "f2", "e", "p"], ["h1", "h2", "g", "q"], ["f1", "f2", "g", "q"]];
        Self::excluding(&labels, 4, &planes.map(|l| l.to_vec()))
    }

    fn excluding(labels: &[&str], r: usize, non_bases: &[Vec<&str>]) -> Matroid {
        let owned: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        let excluded: Vec<Set> = non_bases.iter().map(|nb| set_of_labels(&owned, nb).unwrap()).collect();
        let bases = subsets_of_size(labels.len(), r).filter(|s| !excluded.contains(s)).collect();
        Self::from_basis_sets(owned, bases).expect("built-in matroid is valid")
    }

    /// Column matroid of an integer matrix over ℚ or GF(p).
    pub fn linear(labels: Vec<String>, rows: &[Vec<i64>], field: Field) -> Result<Matroid> {
        let m = labels.len();
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::DimensionMismatch { expected: m, got: rows.iter().map(|r| r.len()).find(|&l| l != m).unwrap_or(0) });
        }
        if m > MAX_ELEMENTS {
            return Err(Error::TooLarge(format!("{m} elements (limit {MAX_ELEMENTS})")));
        }
        let rank_of_cols = |s: Set| {
            let sub: Vec<Vec<i64>> = rows.iter().map(|r| s.iter().map(|j| r[j]).collect()).collect();
            match field {
                Field::Rational => linalg::rank_q(&sub),
                Field::Prime(p) => linalg::rank_mod_p(&sub, p),
            }
        };
        let r = rank_of_cols(Set::full(m));
        let bases = subsets_of_size(m, r).filter(|&s| rank_of_cols(s) == r).collect();
        Self::from_basis_sets(labels, bases)
    }

    /// `"uniform:r,m"`, `"fano"` or `"vamos"`.
    pub fn named(name: &str) -> Result<Matroid> {
        match name {
            "fano" => Ok(Self::fano()),
            "vamos" => Ok(Self::vamos()),
            _ => {
                let args = name.strip_prefix("uniform:").ok_or_else(|| Error::UnknownLabel(name.to_string()))?;
                let (r, m) = args.split_once(',').ok_or_else(|| Error::UnknownLabel(name.to_string()))?;
                let parse = |s: &str| s.trim().parse::<usize>().map_err(|_| Error::UnknownLabel(name.to_string()));
                Self::uniform(parse(r)?, parse(m)?)
            }
        }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Number of ground elements `m`.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn ground(&self) -> Set {
        Set::full(self.len())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Bases in lex order of their sorted index lists.
    pub fn bases(&self) -> &[Set] {
        &self.bases
    }

    /// Circuits ordered by size, then lex.
    pub fn circuits(&self) -> &[Set] {
        &self.circuits
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels.iter().position(|l| l == label).ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn set_of(&self, labels: &[&str]) -> Result<Set> {
        set_of_labels(&self.labels, labels)
    }

    pub fn labels_of(&self, s: Set) -> Vec<&str> {
        s.iter().map(|i| self.labels[i].as_str()).collect()
    }

    pub fn is_independent(&self, s: Set) -> bool {
        s.is_subset(self.ground()) && bit(&self.indep, s)
    }

    pub fn is_basis(&self, s: Set) -> bool {
        s.len() == self.rank && self.is_independent(s)
    }

    pub(crate) fn basis_index(&self, b: Set) -> Option<usize> {
        self.bases.binary_search_by(|x| x.lex_cmp(b)).ok()
    }

    /// A maximal independent subset of `s`, chosen greedily in index order.
    pub fn max_independent(&self, s: Set) -> Set {
        s.iter().fold(Set::EMPTY, |i, e| if bit(&self.indep, i.with(e)) { i.with(e) } else { i })
    }

    pub fn rank_of(&self, s: Set) -> usize {
        self.max_independent(s).len()
    }

    pub fn closure(&self, s: Set) -> Set {
        let i = self.max_independent(s);
        self.ground().difference(s).iter().fold(s, |acc, e| if bit(&self.indep, i.with(e)) { acc } else { acc.with(e) })
    }

    pub fn is_flat(&self, s: Set) -> bool {
        self.closure(s) == s
    }

    /// All flats, grouped by rank, each group in lex order.
    pub fn flats(&self) -> &[Vec<Set>] {
        &self.flats
    }

    pub fn flats_of_rank(&self, k: usize) -> &[Set] {
        self.flats.get(k).map_or(&[], |v| v.as_slice())
    }

    pub fn all_flats(&self) -> impl Iterator<Item = Set> + '_ {
        self.flats.iter().flatten().copied()
    }

    fn compute_flats(&self) -> Vec<Vec<Set>> {
        let mut levels = alloc::vec![alloc::vec![self.closure(Set::EMPTY)]];
        for _ in 0..self.rank {
            let mut next = BTreeSet::new();
            for &f in levels.last().unwrap() {
                for e in self.ground().difference(f).iter() {
                    next.insert(self.closure(f.with(e)));
                }
            }
            let mut v: Vec<Set> = next.into_iter().collect();
            v.sort_by(|a, b| a.lex_cmp(*b));
            levels.push(v);
        }
        levels
    }

    fn fundamental_unchecked(&self, e: usize, b: Set) -> Set {
        b.iter().filter(|&x| bit(&self.indep, b.without(x).with(e))).collect::<Set>().with(e)
    }

    /// The unique circuit inside `B ∪ {e}`.
    pub fn fundamental_circuit(&self, e: usize, b: Set) -> Result<Set> {
        if !self.is_basis(b) {
            return Err(Error::NotABasis);
        }
        if b.contains(e) {
            return Err(Error::ElementInBasis);
        }
        if e >= self.len() {
            return Err(Error::UnknownLabel(format!("index {e}")));
        }
        Ok(self.fundamental_unchecked(e, b))
    }

    /// Cached `(e, C(e,B) ∖ e)` for every `e ∉ B`.
    pub(crate) fn fundamental_of(&self, b: Set) -> Result<&[(usize, Set)]> {
        let i = self.basis_index(b).ok_or(Error::NotABasis)?;
        Ok(&self.fundamental[i])
    }

    pub fn dual(&self) -> Matroid {
        let full = self.ground();
        let bases = self.bases.iter().map(|b| full.difference(*b)).collect();
        Self::from_basis_sets(self.labels.clone(), bases).expect("dual of a loop-free matroid")
    }

    /// Contraction `M/F` by a flat, on the complement of `F` (labels kept in order).
    pub fn quotient(&self, f: Set) -> Result<Matroid> {
        if !f.is_subset(self.ground()) || !self.is_flat(f) {
            return Err(Error::NotAFlat);
        }
        let bf = self.max_independent(f);
        let keep: Vec<usize> = self.ground().difference(f).iter().collect();
        let bases = self.bases.iter().filter(|b| bf.is_subset(**b)).map(|b| compress(b.difference(bf), &keep)).collect();
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        Self::from_basis_sets(labels, bases)
    }

    /// Restriction `M|S`, elements kept in ground order.
    pub fn restriction(&self, s: Set) -> Result<Matroid> {
        let s = s.intersection(self.ground());
        let k = self.rank_of(s);
        let keep: Vec<usize> = s.iter().collect();
        let bases: Vec<Set> = self.bases.iter().map(|b| b.intersection(s)).filter(|x| x.len() == k).map(|x| compress(x, &keep)).collect();
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        Self::from_basis_sets(labels, bases)
    }

    pub fn submodular_defect(&self, f1: Set, f2: Set) -> Result<i64> {
        if !self.is_flat(f1) || !self.is_flat(f2) {
            return Err(Error::NotAFlat);
        }
        Ok(self.defect_unchecked(f1, f2))
    }

    pub(crate) fn defect_unchecked(&self, f1: Set, f2: Set) -> i64 {
        let r = |s: Set| self.rank_of(s) as i64;
        r(f1) + r(f2) - r(self.closure(f1.union(f2))) - r(f1.intersection(f2))
    }

    /// A pair of flats with positive defect, if any.
    pub fn modularity_witness(&self) -> Option<(Set, Set, i64)> {
        let flats: Vec<Set> = self.all_flats().collect();
        for (i, &a) in flats.iter().enumerate() {
            for &b in &flats[i + 1..] {
                let d = self.defect_unchecked(a, b);
                if d != 0 {
                    return Some((a, b, d));
                }
            }
        }
        None
    }

    pub fn is_modular(&self) -> bool {
        self.modularity_witness().is_none()
    }

    /// Greedy basis: elements by decreasing weight, ties by position in
    /// `tie_order` (default: index order), each kept if it stays independent.
    pub fn greedy_basis<T: Ord>(&self, w: &[T], tie_order: Option<&[usize]>) -> Result<Set> {
        if w.len() != self.len() {
            return Err(Error::DimensionMismatch { expected: self.len(), got: w.len() });
        }
        let order = descending_order(w, tie_order);
        Ok(order.into_iter().fold(Set::EMPTY, |b, e| if bit(&self.indep, b.with(e)) { b.with(e) } else { b }))
    }

    /// Every basis of maximal total weight, by enumeration.
    pub fn max_weight_bases_bruteforce<T>(&self, w: &[T]) -> Vec<Set>
    where
        T: Clone + Ord + Add<Output = T> + Zero,
    {
        let total = |b: Set| b.iter().fold(T::zero(), |acc, e| acc + w[e].clone());
        let best = self.bases.iter().map(|b| total(*b)).max().expect("bases nonempty");
        self.bases.iter().copied().filter(|b| total(*b) == best).collect()
    }

    /// Complement of the elements that are the strict minimum of some circuit.
    pub fn initial_form_complement<T: Ord>(&self, w: &[T]) -> Set {
        let mut minima = Set::EMPTY;
        for c in &self.circuits {
            let lo = c.iter().map(|e| &w[e]).min().unwrap();
            let at: Vec<usize> = c.iter().filter(|&e| &w[e] == lo).collect();
            if at.len() == 1 {
                minima = minima.with(at[0]);
            }
        }
        self.ground().difference(minima)
    }

    /// The basis whose indicator vector is lex-maximal when elements are
    /// listed by decreasing weight (ties by index).
    pub fn lex_max_basis<T: Ord>(&self, w: &[T]) -> Set {
        let order = descending_order(w, None);
        let key = |b: Set| {
            let mut pos: Vec<usize> = b.iter().map(|e| order.iter().position(|&x| x == e).unwrap()).collect();
            pos.sort_unstable();
            pos
        };
        *self.bases.iter().min_by_key(|b| key(**b)).unwrap()
    }

    /// Principal extension `M +_F z`: a new last element placed generically
    /// on the flat `F`.
    pub fn principal_extension(&self, f: Set, label: &str) -> Result<ExtensionMap> {
        if !self.is_flat(f) {
            return Err(Error::NotAFlat);
        }
        if f.is_empty() {
            return Err(Error::LoopDetected(label.to_string()));
        }
        let z = self.len();
        let mut bases: BTreeSet<Set> = self.bases.iter().copied().collect();
        for &b in &self.bases {
            for x in b.iter() {
                let rest = b.without(x);
                if !f.is_subset(self.closure(rest)) {
                    bases.insert(rest.with(z));
                }
            }
        }
        let mut labels = self.labels.clone();
        labels.push(label.to_string());
        let target = Self::from_basis_sets(labels, bases.into_iter().collect())?;
        Ok(ExtensionMap { source: self.clone(), target, map: (0..z).collect() })
    }
}

fn descending_order<T: Ord>(w: &[T], tie_order: Option<&[usize]>) -> Vec<usize> {
    let mut pos = alloc::vec![0usize; w.len()];
    match tie_order {
        Some(t) => t.iter().enumerate().for_each(|(p, &e)| pos[e] = p),
        None => pos.iter_mut().enumerate().for_each(|(i, p)| *p = i),
    }
    let mut order: Vec<usize> = (0..w.len()).collect();
    order.sort_by(|&a, &b| match w[b].cmp(&w[a]) {
        Ordering::Equal => pos[a].cmp(&pos[b]),
        o => o,
    });
    order
}

fn independence_table(m: usize, rank: usize, bases: &[Set]) -> Vec<u64> {
    let n = 1usize << m;
    let mut t = alloc::vec![0u64; n.div_ceil(64)];
    for b in bases {
        set_bit(&mut t, b.0 as usize);
    }
    for s in (0..n).rev() {
        if (s as u64).count_ones() as usize >= rank {
            continue;
        }
        let up = (0..m).filter(|e| s >> e & 1 == 0).any(|e| get_bit(&t, s | 1 << e));
        if up {
            set_bit(&mut t, s);
        }
    }
    t
}

fn set_bit(t: &mut [u64], i: usize) {
    t[i / 64] |= 1 << (i % 64);
}

fn get_bit(t: &[u64], i: usize) -> bool {
    t[i / 64] >> (i % 64) & 1 == 1
}

fn bit(t: &[u64], s: Set) -> bool {
    get_bit(t, s.0 as usize)
}

fn join(labels: &[String], s: Set) -> String {
    let parts: Vec<&str> = s.iter().map(|i| labels[i].as_str()).collect();
    format!("{{{}}}", parts.join(","))
}

fn set_of_labels<S: AsRef<str>>(labels: &[String], names: &[S]) -> Result<Set> {
    let mut s = Set::EMPTY;
    for n in names {
        let n = n.as_ref();
        let i = labels.iter().position(|l| l == n).ok_or_else(|| Error::UnknownLabel(n.to_string()))?;
        s = s.with(i);
    }
    Ok(s)
}

/// An injective map of ground sets between matroids of equal rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionMap {
    pub source: Matroid,
    pub target: Matroid,
    pub map: Vec<usize>,
}

impl ExtensionMap {
    pub fn identity(m: &Matroid) -> ExtensionMap {
        ExtensionMap { source: m.clone(), target: m.clone(), map: (0..m.len()).collect() }
    }

    pub fn image(&self, s: Set) -> Set {
        s.iter().map(|i| self.map[i]).collect()
    }

    fn check_shape(&self) -> Result<()> {
        let (rs, rt) = (self.source.rank(), self.target.rank());
        if rs != rt {
            return Err(Error::RankMismatch { source: rs, target: rt });
        }
        if self.map.len() != self.source.len() || self.map.iter().any(|&j| j >= self.target.len()) {
            return Err(Error::NotInjective);
        }
        let img: BTreeSet<usize> = self.map.iter().copied().collect();
        if img.len() != self.map.len() {
            return Err(Error::NotInjective);
        }
        Ok(())
    }

    /// True when `S` is a basis of the source exactly when `φ(S)` is a basis
    /// of the target.
    pub fn is_extension(&self) -> Result<bool> {
        self.check_shape()?;
        let r = self.source.rank();
        Ok(subsets_of_size(self.source.len(), r).all(|s| self.source.is_basis(s) == self.target.is_basis(self.image(s))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn brute_rank(m: &Matroid, s: Set) -> usize {
        (0..=s.len()).rev().find(|&k| subsets_of_size(m.len(), k).any(|x| x.is_subset(s) && m.bases().iter().any(|b| x.is_subset(*b)))).unwrap()
    }

    #[test]
    fn gosper_counts() {
        assert_eq!(subsets_of_size(7, 3).count(), 35);
        assert_eq!(subsets_of_size(4, 0).collect::<Vec<_>>(), [Set::EMPTY]);
        assert_eq!(subsets_of_size(3, 3).count(), 1);
        assert_eq!(subsets_of_size(3, 4).count(), 0);
    }

    #[test]
    fn fano_basics() {
        let f = Matroid::fano();
        assert_eq!(f.bases().len(), 28);
        assert_eq!(f.rank(), 3);
        let s = f.set_of(&["y1", "z1", "w"]).unwrap();
        assert_eq!(f.rank_of(s), 2);
        assert_eq!(f.closure(f.set_of(&["y1", "w"]).unwrap()), s);
        assert_eq!(f.flats_of_rank(1).len(), 7);
        assert_eq!(f.flats_of_rank(2).len(), 7);
        assert_eq!(f.all_flats().count(), 16);
        assert!(f.is_modular());
    }

    #[test]
    fn uniform_and_dual() {
        let u = Matroid::uniform(2, 3).unwrap();
        assert_eq!(u.bases().len(), 3);
        assert_eq!(u.dual(), Matroid::uniform(1, 3).unwrap());
        let c = u.fundamental_circuit(2, Set::from_indices([0, 1])).unwrap();
        assert_eq!(c, Set::full(3));
        assert_eq!(u.fundamental_circuit(0, Set::from_indices([0, 1])), Err(Error::ElementInBasis));
        assert_eq!(u.fundamental_circuit(0, Set::from_indices([0])), Err(Error::NotABasis));
    }

    #[test]
    fn quotient_and_restriction() {
        let u = Matroid::uniform(2, 3).unwrap();
        let q = u.quotient(Set::singleton(0)).unwrap();
        assert_eq!(q.labels(), ["e2", "e3"]);
        assert_eq!(q.rank(), 1);
        assert_eq!(q.bases().len(), 2);
        assert_eq!(u.quotient(Set::from_indices([0, 1])), Err(Error::NotAFlat));
        let v = Matroid::vamos();
        let s = v.set_of(&["h1", "h2", "f1", "f2", "e", "p"]).unwrap();
        assert_eq!(v.restriction(s).unwrap().rank(), 4);
    }

    #[test]
    fn vamos_defect() {
        let v = Matroid::vamos();
        let f = v.set_of(&["f1", "f2"]).unwrap();
        let h = v.set_of(&["h1", "h2"]).unwrap();
        assert_eq!(v.rank_of(f.union(h)), 3);
        assert_eq!(v.submodular_defect(f, h), Ok(1));
        assert!(!v.is_modular());
        assert_eq!(v.bases().len(), 65);
    }

    #[test]
    fn exchange_failures() {
        // two disjoint pairs: removing a from {a,b} has no replacement in {c,d}
        let e = Matroid::from_labeled_bases(&["a", "b", "c", "d"], &[&["a", "b"], &["c", "d"]]);
        assert!(matches!(e, Err(Error::ExchangeAxiomViolation { .. })));
        // {{a,b},{a,c}} is a genuine matroid (b parallel to c)
        let ok = Matroid::from_labeled_bases(&["a", "b", "c"], &[&["a", "b"], &["a", "c"]]).unwrap();
        assert_eq!(ok.rank_of(ok.set_of(&["b", "c"]).unwrap()), 1);
        assert_eq!(Matroid::from_basis_sets(vec!["a".into()], vec![]), Err(Error::EmptyBases));
        let looped = Matroid::from_labeled_bases(&["a", "b"], &[&["a"]]);
        assert_eq!(looped, Err(Error::LoopDetected("b".into())));
    }

    #[test]
    fn circuits_round_trip() {
        for m in [Matroid::fano(), Matroid::vamos(), Matroid::uniform(3, 5).unwrap()] {
            let back = Matroid::from_circuits(m.labels().to_vec(), m.circuits().to_vec()).unwrap();
            assert_eq!(back, m);
        }
        let bad = Matroid::from_circuits(vec!["a".into(), "b".into(), "c".into()], vec![Set(0b011), Set(0b110)]);
        assert!(matches!(bad, Err(Error::InvalidCircuits(_))));
    }

    #[test]
    fn rank_matches_bruteforce() {
        for m in [Matroid::fano(), Matroid::vamos()] {
            for s in 0..(1u64 << m.len()) {
                assert_eq!(m.rank_of(Set(s)), brute_rank(&m, Set(s)));
            }
        }
    }

    #[test]
    fn linear_fano_over_gf2() {
        // columns: y1 y2 y3 z1 z2 z3 w with z_i = y_j + y_k and w = y1+y2+y3
        let rows = vec![vec![1, 0, 0, 0, 1, 1, 1], vec![0, 1, 0, 1, 0, 1, 1], vec![0, 0, 1, 1, 1, 0, 1]];
        let f = Matroid::fano();
        let lin = Matroid::linear(f.labels().to_vec(), &rows, Field::Prime(2)).unwrap();
        assert_eq!(lin, f);
        let q = Matroid::linear(f.labels().to_vec(), &rows, Field::Rational).unwrap();
        assert_eq!(q.bases().len(), 29);
        let zero = Matroid::linear(vec!["a".into(), "b".into()], &[vec![1, 0]], Field::Rational);
        assert_eq!(zero, Err(Error::LoopDetected("b".into())));
    }

    #[test]
    fn greedy_examples() {
        let u = Matroid::uniform(2, 3).unwrap();
        assert_eq!(u.greedy_basis(&[3, 2, 1], None).unwrap(), Set::from_indices([0, 1]));
        assert_eq!(u.greedy_basis(&[0, 0, 0], None).unwrap(), Set::from_indices([0, 1]));
        assert_eq!(u.greedy_basis(&[0, 0, 0], Some(&[2, 1, 0])).unwrap(), Set::from_indices([1, 2]));
        let f = Matroid::fano();
        let w = [7, 6, 5, 4, 3, 2, 1];
        let g = f.greedy_basis(&w, None).unwrap();
        assert_eq!(f.max_weight_bases_bruteforce(&w), [g]);
        assert_eq!(g, f.set_of(&["y1", "y2", "y3"]).unwrap());
    }

    #[test]
    fn principal_extension_is_extension() {
        let v = Matroid::vamos();
        let f = v.set_of(&["f1", "f2"]).unwrap();
        let ext = v.principal_extension(f, "z").unwrap();
        assert!(ext.is_extension().unwrap());
        let z = ext.target.index_of("z").unwrap();
        assert_eq!(ext.target.rank_of(ext.image(f).with(z)), 2);
        let u = Matroid::uniform(2, 3).unwrap();
        let bad = ExtensionMap { source: u.clone(), target: Matroid::uniform(3, 4).unwrap(), map: vec![0, 1, 2] };
        assert_eq!(bad.is_extension(), Err(Error::RankMismatch { source: 2, target: 3 }));
        let ni = ExtensionMap { source: u.clone(), target: u.clone(), map: vec![0, 0, 1] };
        assert_eq!(ni.is_extension(), Err(Error::NotInjective));
    }
}
