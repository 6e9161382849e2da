//! Integral cohomology of the Grassmannian `G(k, k + m)`.
//!
//! Schubert classes are indexed by partitions inside the `k x m` rectangle
//! ([`Rect`]). Products are computed with the Littlewood-Richardson rule by
//! enumerating LR skew tableaux, and truncated to the rectangle after every
//! multiplication. Multiplication by a single-row or single-column class uses
//! the Pieri rules directly.
//!
//! A ramification index `alpha` of type `(r, d)` corresponds to the Schubert
//! class of the partition `(alpha_r, ..., alpha_0)` in `G(r+1, d+1)`; the cusp
//! index `(0, 1, ..., 1)` is the column `1^r`.

use alloc::collections::btree_map::{BTreeMap, Entry};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::numerology::{RamificationSeq, SeriesType};
use crate::{Error, Result};

/// The `rows x cols` rectangle of partitions indexing `G(rows, rows + cols)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Rect {
    pub rows: u32,
    pub cols: u32,
}

impl Rect {
    pub fn new(rows: u32, cols: u32) -> Self {
        Self { rows, cols }
    }

    /// The rectangle of `G(r+1, d+1)`.
    pub fn for_series(t: SeriesType) -> Self {
        Self { rows: t.r + 1, cols: t.d - t.r }
    }

    pub fn area(self) -> u64 {
        u64::from(self.rows) * u64::from(self.cols)
    }

    pub fn full(self) -> Partition {
        Partition { parts: vec![self.cols; if self.cols == 0 { 0 } else { self.rows as usize }] }
    }
}

/// A partition, stored without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::PartitionOutsideRect { parts, rows: 0, cols: 0 });
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn fits(&self, rect: Rect) -> bool {
        self.parts.len() <= rect.rows as usize && self.parts.first().is_none_or(|&p| p <= rect.cols)
    }

    /// The complementary partition of the rectangle, `lambda^c_i = m - lambda_{k-1-i}`.
    pub fn complement(&self, rect: Rect) -> Result<Self> {
        self.ensure_fits(rect)?;
        let k = rect.rows as usize;
        Self::new((0..k).map(|i| rect.cols - self.part(k - 1 - i)).collect())
    }

    /// Young diagram containment.
    pub fn contains(&self, other: &Self) -> bool {
        other.parts.len() <= self.parts.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    fn ensure_fits(&self, rect: Rect) -> Result<()> {
        if self.fits(rect) {
            Ok(())
        } else {
            Err(Error::PartitionOutsideRect { parts: self.parts.clone(), rows: rect.rows, cols: rect.cols })
        }
    }

    fn padded(&self, rows: usize) -> Vec<u32> {
        (0..rows).map(|i| self.part(i)).collect()
    }

    fn from_padded(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("()");
        }
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// `alpha = (alpha_0, ..., alpha_r)` becomes the partition `(alpha_r, ..., alpha_0)`.
pub fn index_to_partition(alpha: &RamificationSeq) -> Partition {
    Partition::from_padded(alpha.entries().iter().rev().copied().collect())
}

/// A finite integer combination of Schubert classes in one Grassmannian.
/// Zero coefficients are never stored; the zero class has no terms.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CohomologyClass {
    rect: Rect,
    terms: BTreeMap<Partition, i128>,
}

impl CohomologyClass {
    pub fn zero(rect: Rect) -> Self {
        Self { rect, terms: BTreeMap::new() }
    }

    pub fn identity(rect: Rect) -> Self {
        Self::schubert_unchecked(rect, Partition::empty())
    }

    pub fn schubert(rect: Rect, lambda: Partition) -> Result<Self> {
        lambda.ensure_fits(rect)?;
        Ok(Self::schubert_unchecked(rect, lambda))
    }

    fn schubert_unchecked(rect: Rect, lambda: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, 1);
        Self { rect, terms }
    }

    pub fn rect(&self) -> Rect {
        self.rect
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, lambda: &Partition) -> i128 {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, i128)> {
        self.terms.iter().map(|(p, &c)| (p, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rect != other.rect {
            return Err(Error::RectMismatch);
        }
        let mut out = self.clone();
        for (p, &c) in &other.terms {
            out.accumulate(p.clone(), c)?;
        }
        Ok(out)
    }

    pub fn scale(&self, factor: i128) -> Result<Self> {
        let mut out = Self::zero(self.rect);
        for (p, &c) in &self.terms {
            out.accumulate(p.clone(), c.checked_mul(factor).ok_or(Error::CoefficientOverflow)?)?;
        }
        Ok(out)
    }

    fn accumulate(&mut self, lambda: Partition, c: i128) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        let entry = self.terms.entry(lambda);
        match entry {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().checked_add(c).ok_or(Error::CoefficientOverflow)?;
                if sum == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for CohomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (p, &c)) in self.terms.iter().rev().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if i > 0 {
                write!(f, " {sign} ")?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            let abs = c.unsigned_abs();
            if abs != 1 {
                write!(f, "{abs}")?;
            }
            write!(f, "s{p}")?;
        }
        Ok(())
    }
}

/// Number of Littlewood-Richardson tableaux of shape `nu / lambda` and
/// content `mu`, i.e. the coefficient of `s_nu` in `s_lambda * s_mu`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u128 {
    if !nu.contains(lambda) || nu.size() != lambda.size() + mu.size() {
        return 0;
    }
    let rows = nu.len().max(1) as u32;
    let cols = nu.part(0);
    let mut out = BTreeMap::new();
    LrFiller::new(lambda, mu, Rect::new(rows, cols)).run(&mut out);
    out.get(nu).copied().unwrap_or(0)
}

/// All `nu` inside `rect` with their LR coefficients `c^nu_{lambda mu}`.
fn lr_expand(lambda: &Partition, mu: &Partition, rect: Rect) -> BTreeMap<Partition, u128> {
    let mut out = BTreeMap::new();
    if lambda.fits(rect) && mu.fits(rect) && lambda.size() + mu.size() <= rect.area() {
        LrFiller::new(lambda, mu, rect).run(&mut out);
    }
    out
}

/// Row-by-row generator of LR skew tableaux. Rows of the skew shape are
/// weakly increasing, columns strictly increasing, and the reverse reading
/// word (right to left, top to bottom) is a lattice word.
struct LrFiller {
    lambda: Vec<u32>,
    mu: Vec<u32>,
    rect: Rect,
}

struct LrState {
    nu: Vec<u32>,
    counts: Vec<u32>,
    remaining: u64,
}

impl LrFiller {
    fn new(lambda: &Partition, mu: &Partition, rect: Rect) -> Self {
        Self { lambda: lambda.padded(rect.rows as usize), mu: mu.parts.clone(), rect }
    }

    fn run(&self, out: &mut BTreeMap<Partition, u128>) {
        let mut state = LrState {
            nu: Vec::with_capacity(self.rect.rows as usize),
            counts: vec![0; self.mu.len()],
            remaining: self.mu.iter().map(|&m| u64::from(m)).sum(),
        };
        let above = vec![0u32; self.rect.cols as usize];
        self.row(0, &above, &mut state, out);
    }

    fn row(&self, j: usize, above: &[u32], st: &mut LrState, out: &mut BTreeMap<Partition, u128>) {
        let rows = self.rect.rows as usize;
        if st.remaining == 0 {
            let mut nu = st.nu.clone();
            nu.extend_from_slice(&self.lambda[j..]);
            *out.entry(Partition::from_padded(nu)).or_insert(0) += 1;
            return;
        }
        if j == rows {
            return;
        }
        let lam = self.lambda[j];
        let upper = if j == 0 { self.rect.cols } else { st.nu[j - 1] };
        let capacity: u64 = u64::from(upper - lam)
            + self.lambda[j + 1..].iter().map(|&l| u64::from(upper - l)).sum::<u64>();
        if capacity < st.remaining {
            return;
        }
        let max_len = u64::from(upper - lam).min(st.remaining) as u32;
        let prev_counts = st.counts.clone();
        let mut current = vec![0u32; self.rect.cols as usize];
        for len in 0..=max_len {
            st.nu.push(lam + len);
            self.fill_letters(j, 0, lam, lam + len, above, &prev_counts, &mut current, st, out);
            st.nu.pop();
        }
    }

    /// Places letter `k + 1` (0-based `k`) in the row starting at column `pos`.
    #[allow(clippy::too_many_arguments)]
    fn fill_letters(
        &self,
        j: usize,
        k: usize,
        pos: u32,
        end: u32,
        above: &[u32],
        prev: &[u32],
        current: &mut Vec<u32>,
        st: &mut LrState,
        out: &mut BTreeMap<Partition, u128>,
    ) {
        if pos == end {
            let placed = u64::from(end - self.lambda[j]);
            st.remaining -= placed;
            let row: Vec<u32> = current.clone();
            self.row(j + 1, &row, st, out);
            st.remaining += placed;
            return;
        }
        if k == self.mu.len() {
            return;
        }
        let letter = k as u32 + 1;
        let above_start = if j == 0 { u32::MAX } else { self.lambda[j - 1] };
        let mut max_c = (end - pos).min(self.mu[k] - prev[k]);
        if k > 0 {
            max_c = max_c.min(prev[k - 1].saturating_sub(prev[k]));
        }
        // column strictness: letters above (in the skew part) must be smaller
        let mut allowed = 0;
        while allowed < max_c {
            let c = pos + allowed;
            if c >= above_start && above[c as usize] >= letter {
                break;
            }
            allowed += 1;
        }
        for c in (0..=allowed).rev() {
            for col in pos..pos + c {
                current[col as usize] = letter;
            }
            st.counts[k] += c;
            self.fill_letters(j, k + 1, pos + c, end, above, prev, current, st, out);
            st.counts[k] -= c;
        }
        for col in pos..end {
            current[col as usize] = 0;
        }
    }
}

/// Littlewood-Richardson product, truncated to the ambient rectangle.
pub fn lr_product(x: &CohomologyClass, y: &CohomologyClass) -> Result<CohomologyClass> {
    if x.rect != y.rect {
        return Err(Error::RectMismatch);
    }
    let rect = x.rect;
    let mut out = CohomologyClass::zero(rect);
    for (lambda, &a) in &x.terms {
        for (mu, &b) in &y.terms {
            let ab = a.checked_mul(b).ok_or(Error::CoefficientOverflow)?;
            for (nu, c) in lr_expand(lambda, mu, rect) {
                let c = i128::try_from(c).map_err(|_| Error::CoefficientOverflow)?;
                out.accumulate(nu, ab.checked_mul(c).ok_or(Error::CoefficientOverflow)?)?;
            }
        }
    }
    Ok(out)
}

/// Product with the column class `s_{1^k}`: add a vertical strip of `k` boxes.
pub fn multiply_column(x: &CohomologyClass, k: u32) -> Result<CohomologyClass> {
    strip_product(x, k, StripKind::Vertical)
}

/// Product with the row class `s_(k)`: add a horizontal strip of `k` boxes.
pub fn multiply_row(x: &CohomologyClass, k: u32) -> Result<CohomologyClass> {
    strip_product(x, k, StripKind::Horizontal)
}

#[derive(Clone, Copy)]
enum StripKind {
    Vertical,
    Horizontal,
}

fn strip_product(x: &CohomologyClass, k: u32, kind: StripKind) -> Result<CohomologyClass> {
    let rect = x.rect;
    let mut out = CohomologyClass::zero(rect);
    for (lambda, &c) in &x.terms {
        let lam = lambda.padded(rect.rows as usize);
        let mut nu = lam.clone();
        let mut found = Vec::new();
        match kind {
            StripKind::Vertical => add_vertical(&lam, rect.cols, 0, k, &mut nu, &mut found),
            StripKind::Horizontal => add_horizontal(&lam, rect.cols, 0, k, &mut nu, &mut found),
        }
        for p in found {
            out.accumulate(p, c)?;
        }
    }
    Ok(out)
}

fn add_vertical(lam: &[u32], cols: u32, i: usize, left: u32, nu: &mut Vec<u32>, found: &mut Vec<Partition>) {
    if left == 0 {
        found.push(Partition::from_padded(nu.clone()));
        return;
    }
    if i == lam.len() || (lam.len() - i) < left as usize {
        return;
    }
    let ceiling = if i == 0 { cols } else { nu[i - 1] };
    if lam[i] < ceiling {
        nu[i] += 1;
        add_vertical(lam, cols, i + 1, left - 1, nu, found);
        nu[i] -= 1;
    }
    add_vertical(lam, cols, i + 1, left, nu, found);
}

fn add_horizontal(lam: &[u32], cols: u32, i: usize, left: u32, nu: &mut Vec<u32>, found: &mut Vec<Partition>) {
    if left == 0 {
        found.push(Partition::from_padded(nu.clone()));
        return;
    }
    if i == lam.len() {
        return;
    }
    let ceiling = if i == 0 { cols } else { lam[i - 1] };
    for add in (0..=(ceiling - lam[i]).min(left)).rev() {
        nu[i] = lam[i] + add;
        add_horizontal(lam, cols, i + 1, left - add, nu, found);
    }
    nu[i] = lam[i];
}

/// The `t`-th power of the column class `s_{1^(rows-1)}`, the class of the
/// cusp index `(0, 1, ..., 1)`.
pub fn cusp_class_power(t: u32, rect: Rect) -> Result<CohomologyClass> {
    let k = rect.rows.saturating_sub(1);
    let mut class = CohomologyClass::identity(rect);
    for _ in 0..t {
        if class.is_zero() {
            break;
        }
        class = multiply_column(&class, k)?;
    }
    Ok(class)
}

/// Product of the Schubert classes of `rams`, followed by `cusps` factors of
/// the cusp class.
pub fn schubert_product(t: SeriesType, rams: &[RamificationSeq], cusps: u32) -> Result<CohomologyClass> {
    let rect = Rect::for_series(t);
    let mut class = CohomologyClass::identity(rect);
    for alpha in rams {
        alpha.check_type(t.r, t.d)?;
        let sigma = CohomologyClass::schubert(rect, index_to_partition(alpha))?;
        class = lr_product(&class, &sigma)?;
    }
    for _ in 0..cusps {
        class = multiply_column(&class, t.r)?;
    }
    Ok(class)
}

/// Nonvanishing of `s_{alpha^1} ... s_{alpha^n} * s_{(0,1,...,1)}^g` in
/// `H^*(G(r+1, d+1))`, with `g = t.genus`: the existence criterion for a
/// `g^r_d` with the given ramification at general points of a general curve.
pub fn bn_condition(t: SeriesType, rams: &[RamificationSeq]) -> Result<bool> {
    SchubertCache::default().bn_condition(t, rams)
}

/// Memoises cusp-class powers across repeated [`bn_condition`] queries.
#[derive(Debug, Default, Clone)]
pub struct SchubertCache {
    powers: BTreeMap<(Rect, u32), CohomologyClass>,
}

impl SchubertCache {
    pub fn cusp_power(&mut self, t: u32, rect: Rect) -> Result<&CohomologyClass> {
        match self.powers.entry((rect, t)) {
            Entry::Occupied(e) => Ok(e.into_mut()),
            Entry::Vacant(e) => Ok(e.insert(cusp_class_power(t, rect)?)),
        }
    }

    /// Same as [`bn_condition`]. Every factor is a Schubert class, so all
    /// coefficients are nonnegative and the full product is nonzero exactly
    /// when some term `nu` of the ramification product and some term `kappa`
    /// of the cusp power satisfy `kappa` inside the complement of `nu`.
    pub fn bn_condition(&mut self, t: SeriesType, rams: &[RamificationSeq]) -> Result<bool> {
        let rect = Rect::for_series(t);
        let mut degree = u64::from(t.genus) * u64::from(t.r);
        for alpha in rams {
            alpha.check_type(t.r, t.d)?;
            degree += alpha.weight();
        }
        if degree > rect.area() {
            return Ok(false);
        }
        let nonzero: Vec<RamificationSeq> = rams.iter().filter(|a| !a.is_zero()).cloned().collect();
        let product = schubert_product(t, &nonzero, 0)?;
        let power = self.cusp_power(t.genus, rect)?;
        for (nu, _) in product.terms() {
            let dual = nu.complement(rect)?;
            if power.terms().any(|(kappa, _)| dual.contains(kappa)) {
                return Ok(true);
            }
        }
        Ok(false)
    }
}
