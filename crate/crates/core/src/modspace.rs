//! Divisor classes on the moduli space of stable curves, in the basis
//! `lambda, delta_0, ..., delta_{g/2}`, with exact rational coefficients.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::{self, Write};

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::numerology::{self, SeriesType};
use crate::{Error, Result};

pub type Q = Ratio<i64>;

fn q(n: i64) -> Q {
    Q::from_integer(n)
}

fn frac(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

/// `lambda * L + sum delta_i * D_i`. When `up_to_positive_scalar` is set
/// only the ray of the class is meaningful.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DivisorClass {
    genus: u32,
    lambda: Q,
    delta: Vec<Q>,
    up_to_positive_scalar: bool,
}

impl DivisorClass {
    /// `delta` must have `g/2 + 1` entries.
    pub fn new(genus: u32, lambda: Q, delta: Vec<Q>) -> Result<Self> {
        if delta.len() != genus as usize / 2 + 1 {
            return Err(Error::InvalidGenus { genus, reason: "boundary vector must have g/2 + 1 entries" });
        }
        Ok(Self { genus, lambda, delta, up_to_positive_scalar: false })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn lambda(&self) -> Q {
        self.lambda
    }

    pub fn delta(&self, i: usize) -> Q {
        self.delta.get(i).copied().unwrap_or_else(Q::zero)
    }

    pub fn deltas(&self) -> &[Q] {
        &self.delta
    }

    pub fn up_to_positive_scalar(&self) -> bool {
        self.up_to_positive_scalar
    }

    pub fn with_scalar_ambiguity(mut self, flag: bool) -> Self {
        self.up_to_positive_scalar = flag;
        self
    }

    pub fn scale(&self, c: Q) -> Self {
        Self {
            genus: self.genus,
            lambda: self.lambda * c,
            delta: self.delta.iter().map(|&x| x * c).collect(),
            up_to_positive_scalar: self.up_to_positive_scalar,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.genus != other.genus {
            return Err(Error::InvalidGenus { genus: other.genus, reason: "classes live on different moduli spaces" });
        }
        Ok(Self {
            genus: self.genus,
            lambda: self.lambda + other.lambda,
            delta: self.delta.iter().zip(&other.delta).map(|(a, b)| a + b).collect(),
            up_to_positive_scalar: self.up_to_positive_scalar || other.up_to_positive_scalar,
        })
    }

    /// Equality of coefficient vectors, ignoring the scalar flag.
    pub fn same_coefficients(&self, other: &Self) -> bool {
        self.genus == other.genus && self.lambda == other.lambda && self.delta == other.delta
    }
}

fn subscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    n.to_string().bytes().map(|b| DIGITS[(b - b'0') as usize]).collect()
}

/// Writes `c * symbol` as a signed term; returns false for zero.
fn write_term(out: &mut String, c: Q, symbol: &str, first: bool) -> bool {
    if c.is_zero() {
        return false;
    }
    let neg = c.is_negative();
    if first {
        if neg {
            out.push('−');
        }
    } else {
        out.push_str(if neg { " − " } else { " + " });
    }
    let a = c.abs();
    if a != q(1) {
        let _ = write!(out, "{a}");
    }
    out.push_str(symbol);
    true
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        let mut first = !write_term(&mut out, self.lambda, "λ", true);
        for (i, &c) in self.delta.iter().enumerate() {
            let sym = alloc::format!("δ{}", subscript(i));
            if write_term(&mut out, c, &sym, first) {
                first = false;
            }
        }
        if first {
            out.push('0');
        }
        f.write_str(&out)
    }
}

/// The class of the Brill-Noether divisor of `g^r_d`'s (`rho = -1`):
/// `(g+3) lambda - (g+1)/6 delta_0 - sum_i i(g-i) delta_i`, up to a positive
/// scalar that depends on `(r, d)`.
pub fn bn_class(t: SeriesType) -> Result<DivisorClass> {
    let rho = numerology::rho(t);
    if rho != -1 {
        return Err(Error::NotDivisorial { rho });
    }
    let g = i64::from(t.genus);
    let mut delta = Vec::with_capacity(t.genus as usize / 2 + 1);
    delta.push(-frac(g + 1, 6));
    for i in 1..=g / 2 {
        delta.push(q(-i * (g - i)));
    }
    Ok(DivisorClass { genus: t.genus, lambda: q(g + 3), delta, up_to_positive_scalar: true })
}

/// `13 lambda - 2 delta_0 - 3 delta_1 - 2 delta_2 - ... - 2 delta_{g/2}`.
pub fn canonical_class(genus: u32) -> Result<DivisorClass> {
    if genus < 4 {
        return Err(Error::InvalidGenus { genus, reason: "canonical class formula needs g >= 4" });
    }
    let delta = (0..=genus as usize / 2).map(|i| if i == 1 { q(-3) } else { q(-2) }).collect();
    Ok(DivisorClass { genus, lambda: q(13), delta, up_to_positive_scalar: false })
}

/// `K = a * BN + b * lambda + sum c_i delta_i` with `c_0 = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Decomposition {
    pub genus: u32,
    pub a: Q,
    pub b: Q,
    pub c: Vec<Q>,
}

impl Decomposition {
    /// Rebuilds the canonical class from the parts.
    pub fn reconstruct(&self, bn: &DivisorClass) -> Result<DivisorClass> {
        let rest = DivisorClass::new(self.genus, self.b, self.c.clone())?;
        Ok(bn.scale(self.a).add(&rest)?.with_scalar_ambiguity(false))
    }
}

/// Writes the canonical class as a multiple of the (normalized) Brill-Noether
/// class plus `lambda` and boundary terms, matching `delta_0` exactly. Fails
/// if the boundary remainder is not effective.
pub fn decompose_canonical(t: SeriesType) -> Result<Decomposition> {
    let bn = bn_class(t)?;
    let k = canonical_class(t.genus)?;
    let a = k.delta(0) / bn.delta(0);
    let b = k.lambda() - a * bn.lambda();
    let c: Vec<Q> = (0..k.deltas().len()).map(|i| k.delta(i) - a * bn.delta(i)).collect();
    if let Some((index, value)) = c.iter().enumerate().find(|(_, v)| v.is_negative()) {
        return Err(Error::NegativeBoundary { index, value: value.to_string() });
    }
    Ok(Decomposition { genus: t.genus, a, b, c })
}

/// `lambda / min_i (-delta_i)` when `lambda > 0` and every boundary
/// coefficient is negative; `None` otherwise.
pub fn slope_of_class(d: &DivisorClass) -> Option<Q> {
    if !d.lambda().is_positive() || d.deltas().iter().any(|c| !c.is_negative()) {
        return None;
    }
    let min = d.deltas().iter().map(|c| -c).min()?;
    Some(d.lambda() / min)
}

/// `6 + 12/(g+1)`.
pub fn slope_bound(genus: u32) -> Result<Q> {
    if genus < 3 {
        return Err(Error::InvalidGenus { genus, reason: "slope bound needs g >= 3" });
    }
    Ok(q(6) + frac(12, i64::from(genus) + 1))
}

/// Slope of the `k`-gonal locus for `k` in `{2, 3, 4}`.
pub fn gonal_family_slope(genus: u32, k: u32) -> Result<Q> {
    if genus < 2 {
        return Err(Error::InvalidGenus { genus, reason: "gonal slopes need g >= 2" });
    }
    let g = i64::from(genus);
    match k {
        2 => Ok(q(8) + frac(4, g)),
        3 => Ok(frac(36 * (g + 1), 5 * g + 1)),
        4 => Ok(frac(4 * (5 * g + 7), 3 * g + 1)),
        _ => Err(Error::UnsupportedGonality { k }),
    }
}

/// Invariants of a pencil of genus-23 plane curves of degree `d` with `f`
/// nodes and `b` base points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PlanePencil {
    pub d: u32,
    pub f: i64,
    pub b: i64,
    pub lambda: i64,
    pub delta: i64,
    pub slope: Q,
    pub exceeds_bound: bool,
}

/// With `f = C(d-1, 2) - 23` nodes and `b = d^2 - 4f` base points:
/// `lambda = 23`, `delta = 91 + b + f`, and the flag `delta / lambda > 13/2`.
pub fn plane_pencil_slope(d: u32) -> Result<PlanePencil> {
    let dd = i64::from(d);
    let f = (dd - 1) * (dd - 2) / 2 - 23;
    let b = dd * dd - 4 * f;
    if f < 0 || b < 0 {
        return Err(Error::InfeasiblePencil { d, f, b });
    }
    let lambda = 23;
    let delta = 91 + b + f;
    let slope = frac(delta, lambda);
    Ok(PlanePencil { d, f, b, lambda, delta, slope, exceeds_bound: slope > frac(13, 2) })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BoundaryRow {
    pub i: u32,
    /// Coefficient of `delta_i` in the genus-23 decomposition.
    pub coefficient: Q,
    /// The same on the boundary divisor `Delta_i` (`[Delta_1] = 2 delta_1`).
    pub multiplicity: Q,
    /// Known lower bound for the multiplicity along `Delta_i`.
    pub bound: Option<Q>,
    pub coincide: bool,
}

/// Compares the genus-23 boundary coefficients with the lower bounds
/// `16, 19` at `i = 1, 2` and `21 - i` for `i = 3..9, 11`.
pub fn boundary_multiplicity_table() -> Result<Vec<BoundaryRow>> {
    let dec = decompose_canonical(SeriesType::new(23, 1, 12)?)?;
    let rows = (1..=11u32)
        .map(|i| {
            let coefficient = dec.c[i as usize];
            let multiplicity = if i == 1 { coefficient * q(2) } else { coefficient };
            let bound = match i {
                1 => Some(q(16)),
                2 => Some(q(19)),
                10 => None,
                _ => Some(q(21 - i64::from(i))),
            };
            BoundaryRow { i, coefficient, multiplicity, bound, coincide: bound == Some(multiplicity) }
        })
        .collect();
    Ok(rows)
}
