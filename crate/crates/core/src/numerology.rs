//! Brill-Noether numerology.
//!
//! Everything here is exact integer arithmetic on small values. A series type
//! `g^r_d` on a curve of genus `g` is a [`SeriesType`]; the local behaviour
//! of a series at a point is recorded either by its [`VanishingSeq`] or by
//! the equivalent [`RamificationSeq`] (`alpha_i = a_i - i`).

use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// A linear series type `g^r_d` on a curve of genus `genus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SeriesType {
    pub genus: u32,
    pub r: u32,
    pub d: u32,
}

impl SeriesType {
    pub fn new(genus: u32, r: u32, d: u32) -> Result<Self> {
        if r > d {
            return Err(Error::InvalidSeriesType { genus, r, d });
        }
        Ok(Self { genus, r, d })
    }

    /// The same `g^r_d` considered on a curve of another genus.
    pub fn on_genus(self, genus: u32) -> Self {
        Self { genus, ..self }
    }

    /// Dimension of the Grassmannian rectangle `(r+1) x (d-r)`.
    pub fn schubert_rect(self) -> (u32, u32) {
        (self.r + 1, self.d - self.r)
    }
}

impl fmt::Display for SeriesType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g^{}_{} (genus {})", self.r, self.d, self.genus)
    }
}

/// `rho(g, r, d) = g - (r+1)(g - d + r)`.
pub fn rho(t: SeriesType) -> i64 {
    let (g, r, d) = (i64::from(t.genus), i64::from(t.r), i64::from(t.d));
    g - (r + 1) * (g - d + r)
}

/// Strictly increasing orders of vanishing `0 <= a_0 < ... < a_r <= d`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct VanishingSeq {
    entries: Vec<u32>,
    degree: u32,
}

impl VanishingSeq {
    pub fn new(entries: Vec<u32>, degree: u32) -> Result<Self> {
        let bad = |reason| Error::InvalidVanishing { entries: entries.clone(), degree, reason };
        if entries.is_empty() {
            return Err(bad("empty sequence"));
        }
        if entries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(bad("not strictly increasing"));
        }
        if entries[entries.len() - 1] > degree {
            return Err(bad("last entry exceeds the degree"));
        }
        Ok(Self { entries, degree })
    }

    /// The vanishing sequence `(0, 1, ..., r)` of an unramified point.
    pub fn unramified(r: u32, degree: u32) -> Result<Self> {
        Self::new((0..=r).collect(), degree)
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn r(&self) -> u32 {
        (self.entries.len() - 1) as u32
    }

    pub fn to_ramification(&self) -> RamificationSeq {
        RamificationSeq {
            entries: self.entries.iter().enumerate().map(|(i, &a)| a - i as u32).collect(),
            degree: self.degree,
        }
    }

    /// The pointwise-smallest sequence `b` with `a_i + b_{r-i} >= d` for all
    /// `i`, namely `b_i = d - a_{r-i}`.
    pub fn complement(&self) -> Self {
        Self {
            entries: self.entries.iter().rev().map(|&a| self.degree - a).collect(),
            degree: self.degree,
        }
    }

    /// Componentwise comparison `self <= other`.
    pub fn le_pointwise(&self, other: &Self) -> bool {
        self.entries.len() == other.entries.len()
            && self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }

    /// All vanishing sequences of type `(r, d)` in lexicographic order.
    pub fn all(r: u32, degree: u32) -> impl Iterator<Item = VanishingSeq> {
        increasing_sequences(r + 1, degree).map(move |entries| VanishingSeq { entries, degree })
    }
}

impl fmt::Display for VanishingSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.entries)
    }
}

/// Weakly increasing ramification `0 <= alpha_0 <= ... <= alpha_r <= d - r`.
///
/// The same data, read as a bound, is a Schubert index of type `(r, d)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RamificationSeq {
    entries: Vec<u32>,
    degree: u32,
}

impl RamificationSeq {
    pub fn new(entries: Vec<u32>, degree: u32) -> Result<Self> {
        let bad = |reason| Error::InvalidRamification { entries: entries.clone(), degree, reason };
        if entries.is_empty() {
            return Err(bad("empty sequence"));
        }
        let r = entries.len() as u32 - 1;
        if r > degree {
            return Err(bad("longer than degree + 1"));
        }
        if entries.windows(2).any(|w| w[0] > w[1]) {
            return Err(bad("not weakly increasing"));
        }
        if entries[entries.len() - 1] > degree - r {
            return Err(bad("last entry exceeds d - r"));
        }
        Ok(Self { entries, degree })
    }

    pub fn zero(r: u32, degree: u32) -> Result<Self> {
        Self::new(alloc::vec![0; r as usize + 1], degree)
    }

    /// The cusp index `(0, 1, ..., 1)`.
    pub fn cusp(r: u32, degree: u32) -> Result<Self> {
        let mut entries = alloc::vec![1; r as usize + 1];
        entries[0] = 0;
        Self::new(entries, degree)
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn r(&self) -> u32 {
        (self.entries.len() - 1) as u32
    }

    pub fn weight(&self) -> u64 {
        self.entries.iter().map(|&a| u64::from(a)).sum()
    }

    pub fn to_vanishing(&self) -> VanishingSeq {
        VanishingSeq {
            entries: self.entries.iter().enumerate().map(|(i, &a)| a + i as u32).collect(),
            degree: self.degree,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&a| a == 0)
    }

    /// Exactly the cusp index `(0, 1, ..., 1)` (and `r >= 1`).
    pub fn is_cusp(&self) -> bool {
        self.entries.len() >= 2 && self.entries[0] == 0 && self.entries[1..].iter().all(|&a| a == 1)
    }

    pub fn le_pointwise(&self, other: &Self) -> bool {
        self.entries.len() == other.entries.len()
            && self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }

    pub(crate) fn check_type(&self, r: u32, d: u32) -> Result<()> {
        if self.r() != r || self.degree != d {
            return Err(Error::BoundMismatch { r, d, found_r: self.r(), found_d: self.degree });
        }
        Ok(())
    }

    /// All Schubert indices of type `(r, d)`, lexicographically.
    pub fn all(r: u32, degree: u32) -> impl Iterator<Item = RamificationSeq> {
        VanishingSeq::all(r, degree).map(|a| a.to_ramification())
    }
}

impl fmt::Display for RamificationSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.entries)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, entries: &[u32]) -> fmt::Result {
    f.write_str("(")?;
    for (i, a) in entries.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{a}")?;
    }
    f.write_str(")")
}

/// Strictly increasing sequences of length `len` in `[0, max]`, lexicographic.
pub(crate) fn increasing_sequences(len: u32, max: u32) -> impl Iterator<Item = Vec<u32>> {
    let len = len as usize;
    let mut next: Option<Vec<u32>> = (len as u64 <= u64::from(max) + 1).then(|| (0..len as u32).collect());
    core::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        // bump the rightmost entry that still has room
        let mut i = len;
        while i > 0 {
            i -= 1;
            let ceiling = max - (len - 1 - i) as u32;
            if succ[i] < ceiling {
                succ[i] += 1;
                for j in i + 1..len {
                    succ[j] = succ[j - 1] + 1;
                }
                next = Some(succ);
                break;
            }
        }
        Some(current)
    })
}

/// `rho(g, r, d, alpha^1, ..., alpha^n) = rho(g, r, d) - sum of all weights`.
pub fn adjusted_rho(t: SeriesType, rams: &[RamificationSeq]) -> Result<i64> {
    let mut total = rho(t);
    for alpha in rams {
        alpha.check_type(t.r, t.d)?;
        total -= alpha.weight() as i64;
    }
    Ok(total)
}

/// The Serre-dual series `g^{g-d+r-1}_{2g-2-d}`.
pub fn residual(t: SeriesType) -> Result<SeriesType> {
    let (g, r, d) = (i64::from(t.genus), i64::from(t.r), i64::from(t.d));
    let r_res = g - d + r - 1;
    let d_res = 2 * g - 2 - d;
    if r_res < 0 || d_res < r_res {
        return Err(Error::NoResidual { genus: t.genus, r: t.r, d: t.d });
    }
    SeriesType::new(t.genus, r_res as u32, d_res as u32)
}

/// A factorisation `g + 1 = (r + 1)(s - 1)` with `d = rs - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DivisorTriple {
    pub r: u32,
    pub s: u32,
    pub d: u32,
}

impl DivisorTriple {
    pub fn series(self, genus: u32) -> SeriesType {
        SeriesType { genus, r: self.r, d: self.d }
    }
}

/// Every `(r, s, d)` with `r >= 1`, `s >= 3` and `g + 1 = (r + 1)(s - 1)`,
/// ordered by `r`. Each one has `rho = -1`.
pub fn bn_divisor_triples(genus: u32) -> Vec<DivisorTriple> {
    let n = genus + 1;
    (2..=n)
        .filter(|f| n.is_multiple_of(*f))
        .map(|f| (f - 1, n / f + 1))
        .filter(|&(_, s)| s >= 3)
        .map(|(r, s)| DivisorTriple { r, s, d: r * s - 1 })
        .collect()
}

/// Groups the divisorial triples into Serre-dual pairs. Each entry is the
/// representative with the smaller `r` and its residual (which may be
/// itself).
pub fn residual_pairs(genus: u32) -> Vec<(DivisorTriple, DivisorTriple)> {
    let triples = bn_divisor_triples(genus);
    let mut pairs = Vec::new();
    for &t in &triples {
        let Ok(res) = residual(t.series(genus)) else { continue };
        if let Some(&partner) = triples.iter().find(|u| u.r == res.r && u.d == res.d) {
            if t.r <= partner.r {
                pairs.push((t, partner));
            }
        }
    }
    pairs
}

fn clamp(x: i64) -> i64 {
    x.max(0)
}

/// Does a general 1-pointed curve of genus `t.genus` carry a `g^r_d` with
/// ramification at least `alpha` at the point?
///
/// Exact criterion: `sum_i (alpha_i + g - d + r)_+ <= g`.
pub fn pointed_exists(t: SeriesType, alpha: &RamificationSeq) -> Result<bool> {
    alpha.check_type(t.r, t.d)?;
    Ok(pointed_deficit(t, alpha, 0) <= i64::from(t.genus))
}

/// General 2-pointed curve with ramification `alpha` at one point and a cusp
/// at the other: `sum_i (alpha_i + g + 1 - d + r)_+ <= g + 1`.
pub fn cusp_pointed_exists(t: SeriesType, alpha: &RamificationSeq) -> Result<bool> {
    alpha.check_type(t.r, t.d)?;
    Ok(pointed_deficit(t, alpha, 1) <= i64::from(t.genus) + 1)
}

fn pointed_deficit(t: SeriesType, alpha: &RamificationSeq, extra_genus: i64) -> i64 {
    let shift = i64::from(t.genus) + extra_genus - i64::from(t.d) + i64::from(t.r);
    alpha.entries().iter().map(|&a| clamp(i64::from(a) + shift)).sum()
}

/// Expected dimensions attached to a series type.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ExpectedDims {
    /// `3g - 3 + rho`, the dimension of the relative space of `g^r_d`'s.
    pub dim_g: i64,
    /// `2g + 2d - 5` for pencils.
    pub gonal: Option<i64>,
    /// `3d + g - 1` for nets: the Severi variety of plane curves.
    pub severi: Option<i64>,
    /// `g + 4d - 7` for pencils: curves with two independent pencils.
    pub two_pencil: Option<i64>,
}

pub fn expected_dims(t: SeriesType) -> ExpectedDims {
    let (g, d) = (i64::from(t.genus), i64::from(t.d));
    ExpectedDims {
        dim_g: 3 * g - 3 + rho(t),
        gonal: (t.r == 1).then(|| 2 * g + 2 * d - 5),
        severi: (t.r == 2).then(|| 3 * d + g - 1),
        two_pencil: (t.r == 1).then(|| g + 4 * d - 7),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn st(g: u32, r: u32, d: u32) -> SeriesType {
        SeriesType::new(g, r, d).unwrap()
    }

    fn ram(e: &[u32], d: u32) -> RamificationSeq {
        RamificationSeq::new(e.to_vec(), d).unwrap()
    }

    #[test]
    fn rho_values() {
        assert_eq!(rho(st(23, 1, 12)), -1);
        assert_eq!(rho(st(23, 2, 17)), -1);
        assert_eq!(rho(st(23, 3, 20)), -1);
        assert_eq!(rho(st(15, 1, 12)), 7);
        assert_eq!(rho(st(0, 0, 0)), 0);
    }

    #[test]
    fn series_type_rejects_r_above_d() {
        assert!(SeriesType::new(3, 4, 3).is_err());
    }

    #[test]
    fn adjusted_rho_examples() {
        let eight = vec![ram(&[1, 1, 1], 15); 8];
        assert_eq!(adjusted_rho(st(15, 2, 15), &eight).unwrap(), -15);
        let tail = VanishingSeq::new(vec![12, 13, 14], 15).unwrap().to_ramification();
        assert_eq!(tail.entries(), &[12, 12, 12]);
        assert_eq!(adjusted_rho(st(1, 2, 15), &[tail]).unwrap(), 1);
        assert_eq!(adjusted_rho(st(23, 1, 12), &[]).unwrap(), -1);
        assert!(matches!(
            adjusted_rho(st(15, 2, 15), &[ram(&[1, 1], 15)]),
            Err(Error::BoundMismatch { .. })
        ));
    }

    #[test]
    fn vanishing_ramification_conversions() {
        let a = VanishingSeq::new(vec![4, 9, 13], 17).unwrap();
        assert_eq!(a.to_ramification().entries(), &[4, 8, 11]);
        assert_eq!(a.to_ramification().to_vanishing(), a);
        let id = VanishingSeq::unramified(3, 5).unwrap();
        assert!(id.to_ramification().is_zero());
        assert_eq!(ram(&[4, 8, 11], 17).weight(), 23);
        assert_eq!(ram(&[0, 1, 1, 1], 9).weight(), 3);
        assert!(ram(&[0, 1, 1, 1], 9).is_cusp());
        assert!(!ram(&[0, 1, 2], 9).is_cusp());
    }

    #[test]
    fn sequence_validation() {
        assert!(VanishingSeq::new(vec![1, 1], 3).is_err());
        assert!(VanishingSeq::new(vec![1, 4], 3).is_err());
        assert!(VanishingSeq::new(vec![], 3).is_err());
        assert!(RamificationSeq::new(vec![2, 1], 5).is_err());
        // alpha_r <= d - r
        assert!(RamificationSeq::new(vec![0, 5], 5).is_err());
        assert!(RamificationSeq::new(vec![0, 4], 5).is_ok());
    }

    #[test]
    fn complement_is_refined_partner() {
        let a = VanishingSeq::new(vec![1, 2, 3], 15).unwrap();
        assert_eq!(a.complement().entries(), &[12, 13, 14]);
        assert_eq!(a.complement().complement(), a);
    }

    #[test]
    fn lexicographic_enumeration() {
        let all: Vec<_> = VanishingSeq::all(1, 3).map(|a| a.entries().to_vec()).collect();
        assert_eq!(all, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(VanishingSeq::all(3, 20).count(), 5985);
        assert_eq!(VanishingSeq::all(2, 1).count(), 0);
        assert_eq!(VanishingSeq::all(0, 0).count(), 1);
    }

    #[test]
    fn residual_examples() {
        assert_eq!(residual(st(23, 1, 12)).unwrap(), st(23, 11, 32));
        assert_eq!(residual(st(23, 2, 17)).unwrap(), st(23, 7, 27));
        assert!(residual(st(3, 0, 4)).is_err());
    }

    #[test]
    fn divisor_triples() {
        let t = bn_divisor_triples(23);
        let expected = [(1, 13, 12), (2, 9, 17), (3, 7, 20), (5, 5, 24), (7, 4, 27), (11, 3, 32)];
        assert_eq!(t.len(), expected.len());
        for (got, &(r, s, d)) in t.iter().zip(&expected) {
            assert_eq!(*got, DivisorTriple { r, s, d });
        }
        assert_eq!(bn_divisor_triples(5), vec![DivisorTriple { r: 1, s: 4, d: 3 }, DivisorTriple { r: 2, s: 3, d: 5 }]);
        // g + 1 prime
        assert!(bn_divisor_triples(22).is_empty());
    }

    #[test]
    fn residual_pairing_genus_23() {
        let pairs = residual_pairs(23);
        let flat: Vec<_> = pairs.iter().map(|(a, b)| ((a.r, a.d), (b.r, b.d))).collect();
        assert_eq!(flat, vec![((1, 12), (11, 32)), ((2, 17), (7, 27)), ((3, 20), (5, 24))]);
    }

    #[test]
    fn pointed_existence() {
        assert!(pointed_exists(st(11, 2, 17), &ram(&[4, 8, 11], 17)).unwrap());
        assert!(!pointed_exists(st(11, 2, 17), &ram(&[4, 8, 12], 17)).unwrap());
        assert!(pointed_exists(st(11, 1, 12), &ram(&[0, 11], 12)).unwrap());
        assert!(pointed_exists(st(7, 2, 9), &ram(&[0, 0, 0], 9)).unwrap());
        assert!(cusp_pointed_exists(st(10, 2, 17), &ram(&[4, 8, 11], 17)).unwrap());
        assert!(!cusp_pointed_exists(st(10, 2, 17), &ram(&[4, 8, 12], 17)).unwrap());
        assert!(cusp_pointed_exists(st(4, 1, 6), &ram(&[0, 0], 6)).unwrap());
    }

    #[test]
    fn dims() {
        let p = expected_dims(st(15, 1, 6));
        assert_eq!((p.gonal, p.two_pencil, p.severi), (Some(37), Some(32), None));
        assert_eq!(expected_dims(st(15, 2, 7)).severi, Some(35));
        assert_eq!(expected_dims(st(23, 1, 12)).dim_g, 65);
    }
}
