//! Curves of compact type and the local feasibility rules for each component.
//!
//! A [`CompactCurve`] is a tree of components glued at marked points. Each
//! component carries an oracle deciding whether a linear series with given
//! vanishing at its marked points can live on it:
//!
//! * general pointed curves use the exact closed-form or Schubert criteria;
//! * elliptic curves use the two-point vanishing bounds, torsion
//!   divisibility, the single-pole rule, and the exact two-point existence
//!   theorem when its hypotheses hold;
//! * fact-sheet components (special curves described only by a few asserted
//!   facts) can refute by counting but never confirm.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::numerology::{self, RamificationSeq, SeriesType, VanishingSeq};
use crate::schubert::SchubertCache;
use crate::{Error, Result};

/// Order of `p - q` in `Pic^0(E)`; `None` means `p - q` is not torsion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionPair {
    pub p: String,
    pub q: String,
    pub order: Option<u32>,
}

/// The dimension of `G^r_d` on a specific curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fact {
    pub r: u32,
    pub d: u32,
    pub dim: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FactSheet {
    pub facts: Vec<Fact>,
    pub gonality: Option<u32>,
    /// The marked points are general points of the component.
    pub general_points: bool,
}

impl FactSheet {
    pub fn dim(&self, r: u32, d: u32) -> Option<u32> {
        self.facts.iter().find(|f| f.r == r && f.d == d).map(|f| f.dim)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComponentKind {
    /// A general pointed curve. Points in `cusp_points` carry a required
    /// cusp `(0, 1, ..., 1)` and must not be nodes.
    GeneralPointed { cusp_points: Vec<String> },
    Elliptic { torsion: Vec<TorsionPair> },
    FactSheet(FactSheet),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub id: String,
    pub genus: u32,
    pub kind: ComponentKind,
    pub points: Vec<String>,
}

impl Component {
    pub fn is_elliptic(&self) -> bool {
        matches!(self.kind, ComponentKind::Elliptic { .. })
    }

    pub fn point_index(&self, name: &str) -> Option<usize> {
        self.points.iter().position(|p| p == name)
    }

    /// Torsion order declared for the unordered pair `{p, q}`: `None` if no
    /// declaration, `Some(None)` if declared non-torsion.
    pub fn torsion_between(&self, p: &str, q: &str) -> Option<Option<u32>> {
        let ComponentKind::Elliptic { torsion } = &self.kind else { return None };
        torsion
            .iter()
            .find(|t| (t.p == p && t.q == q) || (t.p == q && t.q == p))
            .map(|t| t.order)
    }
}

/// A marked point `component.point`, stored as indices into the curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointRef {
    pub component: usize,
    pub point: usize,
}

/// A validated curve of compact type: the dual graph is a tree, the genera
/// add up, and every marked point lies on at most one node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompactCurve {
    name: String,
    genus: u32,
    components: Vec<Component>,
    nodes: Vec<(PointRef, PointRef)>,
}

/// A node given by its two branches, each a `(component, point)` pair.
pub type NodeSpec<'a> = ((&'a str, &'a str), (&'a str, &'a str));

impl CompactCurve {
    pub fn new(
        name: impl Into<String>,
        genus: u32,
        components: Vec<Component>,
        nodes: &[NodeSpec<'_>],
    ) -> Result<Self> {
        let invalid = |msg: String| Error::InvalidCurve(msg);
        if components.is_empty() {
            return Err(invalid("curve has no components".into()));
        }
        for (i, c) in components.iter().enumerate() {
            if components[..i].iter().any(|o| o.id == c.id) {
                return Err(invalid(format!("duplicate component id `{}`", c.id)));
            }
            for (j, p) in c.points.iter().enumerate() {
                if c.points[..j].contains(p) {
                    return Err(invalid(format!("duplicate point `{}.{p}`", c.id)));
                }
            }
            validate_kind(c)?;
        }
        let lookup = |(cid, pid): (&str, &str)| -> Result<PointRef> {
            let component = components
                .iter()
                .position(|c| c.id == cid)
                .ok_or_else(|| invalid(format!("node references unknown component `{cid}`")))?;
            let point = components[component]
                .point_index(pid)
                .ok_or_else(|| invalid(format!("node references unknown point `{cid}.{pid}`")))?;
            Ok(PointRef { component, point })
        };
        let mut resolved = Vec::with_capacity(nodes.len());
        let mut used: Vec<PointRef> = Vec::new();
        for &(a, b) in nodes {
            let (pa, pb) = (lookup(a)?, lookup(b)?);
            for p in [pa, pb] {
                if used.contains(&p) {
                    let c = &components[p.component];
                    return Err(invalid(format!("point `{}.{}` lies on two nodes", c.id, c.points[p.point])));
                }
                used.push(p);
            }
            resolved.push((pa, pb));
        }
        if resolved.len() + 1 != components.len() {
            return Err(invalid(format!(
                "dual graph is not a tree: {} components but {} nodes",
                components.len(),
                resolved.len()
            )));
        }
        if !connected(components.len(), &resolved) {
            return Err(invalid("dual graph is not connected".into()));
        }
        let total: u32 = components.iter().map(|c| c.genus).sum();
        if total != genus {
            return Err(invalid(format!("component genera sum to {total}, declared genus is {genus}")));
        }
        for (ci, c) in components.iter().enumerate() {
            if let ComponentKind::GeneralPointed { cusp_points } = &c.kind {
                for cp in cusp_points {
                    let point = c.point_index(cp).unwrap_or(usize::MAX);
                    if used.contains(&PointRef { component: ci, point }) {
                        return Err(invalid(format!("cusp point `{}.{cp}` is a node", c.id)));
                    }
                }
            }
        }
        Ok(Self { name: name.into(), genus, components, nodes: resolved })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Component {
        &self.components[i]
    }

    pub fn nodes(&self) -> &[(PointRef, PointRef)] {
        &self.nodes
    }

    pub fn component_index(&self, id: &str) -> Option<usize> {
        self.components.iter().position(|c| c.id == id)
    }

    pub fn point_ref(&self, component: &str, point: &str) -> Option<PointRef> {
        let c = self.component_index(component)?;
        Some(PointRef { component: c, point: self.components[c].point_index(point)? })
    }

    pub fn point_label(&self, p: PointRef) -> String {
        let c = &self.components[p.component];
        format!("{}.{}", c.id, c.points[p.point])
    }

    /// The node through `p`, as `(node index, other side)`.
    pub fn node_at(&self, p: PointRef) -> Option<(usize, PointRef)> {
        self.nodes.iter().enumerate().find_map(|(i, &(a, b))| {
            if a == p {
                Some((i, b))
            } else if b == p {
                Some((i, a))
            } else {
                None
            }
        })
    }

    /// Replaces the component kind and returns the revalidated curve.
    pub fn with_kind(&self, component: &str, kind: ComponentKind) -> Result<Self> {
        let mut out = self.clone();
        let i = self
            .component_index(component)
            .ok_or_else(|| Error::InvalidCurve(format!("unknown component `{component}`")))?;
        out.components[i].kind = kind;
        validate_kind(&out.components[i])?;
        Ok(out)
    }
}

fn validate_kind(c: &Component) -> Result<()> {
    let invalid = |msg: String| Err(Error::InvalidCurve(msg));
    match &c.kind {
        ComponentKind::GeneralPointed { cusp_points } => {
            for p in cusp_points {
                if c.point_index(p).is_none() {
                    return invalid(format!("cusp point `{}.{p}` is not a marked point", c.id));
                }
            }
        }
        ComponentKind::Elliptic { torsion } => {
            if c.genus != 1 {
                return invalid(format!("elliptic component `{}` has genus {}", c.id, c.genus));
            }
            for (i, t) in torsion.iter().enumerate() {
                if c.point_index(&t.p).is_none() || c.point_index(&t.q).is_none() {
                    return invalid(format!("torsion pair on `{}` names an unknown point", c.id));
                }
                if t.p == t.q {
                    return invalid(format!("torsion pair on `{}` repeats point `{}`", c.id, t.p));
                }
                if matches!(t.order, Some(m) if m < 2) {
                    return invalid(format!("torsion order on `{}` must be at least 2", c.id));
                }
                if torsion[..i].iter().any(|o| (o.p == t.p && o.q == t.q) || (o.p == t.q && o.q == t.p)) {
                    return invalid(format!("torsion pair `{}`/`{}` declared twice on `{}`", t.p, t.q, c.id));
                }
            }
        }
        ComponentKind::FactSheet(_) => {}
    }
    Ok(())
}

fn connected(n: usize, edges: &[(PointRef, PointRef)]) -> bool {
    let mut seen = alloc::vec![false; n];
    let mut stack = alloc::vec![0usize];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &(a, b) in edges {
            let next = if a.component == v {
                b.component
            } else if b.component == v {
                a.component
            } else {
                continue;
            };
            if !seen[next] {
                seen[next] = true;
                stack.push(next);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Identifiers of the local rules. Every failure names exactly one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    /// Vanishing orders at a node must sum to at least `d`.
    NodeCompatibility,
    /// `rho(g, r, d) >= 0` on a general curve with no ramification.
    BrillNoether,
    /// One-point criterion `sum (alpha_i + g - d + r)_+ <= g`.
    PointedCriterion,
    /// Point plus cusp criterion `sum (alpha_i + g + 1 - d + r)_+ <= g + 1`.
    CuspCriterion,
    /// Nonvanishing of the Schubert product with `g` cusp classes.
    SchubertCriterion,
    /// `a_i(p) + b_{r-i}(q) <= d` on an elliptic curve.
    EllipticPairwiseBound,
    /// Two equalities `a_i + b_{r-i} = d` force `(a_j - a_i)(p - q) ~ 0`.
    EllipticTorsion,
    /// No function with a single simple pole: `d - 1` and `d` exclude each other.
    EllipticSinglePole,
    /// Exact existence for `d - 1 <= a_i + b_{r-i} <= d` on a two-pointed elliptic curve.
    EllipticTwoPointExistence,
    /// More ramified general points than `dim G^r_d` of the component.
    FactSheetCount,
    /// A pencil of degree below the gonality.
    FactSheetGonality,
}

impl Rule {
    pub const ALL: [Rule; 11] = [
        Rule::NodeCompatibility,
        Rule::BrillNoether,
        Rule::PointedCriterion,
        Rule::CuspCriterion,
        Rule::SchubertCriterion,
        Rule::EllipticPairwiseBound,
        Rule::EllipticTorsion,
        Rule::EllipticSinglePole,
        Rule::EllipticTwoPointExistence,
        Rule::FactSheetCount,
        Rule::FactSheetGonality,
    ];

    /// Stable key used in reports.
    pub fn key(self) -> &'static str {
        match self {
            Rule::NodeCompatibility => "node.compatibility",
            Rule::BrillNoether => "general.brill-noether",
            Rule::PointedCriterion => "general.one-point",
            Rule::CuspCriterion => "general.point-and-cusp",
            Rule::SchubertCriterion => "general.schubert",
            Rule::EllipticPairwiseBound => "elliptic.pairwise-bound",
            Rule::EllipticTorsion => "elliptic.torsion",
            Rule::EllipticSinglePole => "elliptic.single-pole",
            Rule::EllipticTwoPointExistence => "elliptic.two-point-existence",
            Rule::FactSheetCount => "factsheet.count",
            Rule::FactSheetGonality => "factsheet.gonality",
        }
    }

    pub fn from_key(key: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|r| r.key() == key)
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

/// Result of a local check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    /// No rule fails. `exact` means the series is known to exist.
    Pass { exact: bool },
    Fail(Rule),
    /// The component's data is insufficient to decide or constrain.
    Unknown,
}

impl Outcome {
    pub fn is_fail(self) -> bool {
        matches!(self, Outcome::Fail(_))
    }

    pub fn is_exact_pass(self) -> bool {
        matches!(self, Outcome::Pass { exact: true })
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Pass { exact: true } => f.write_str("pass (exact)"),
            Outcome::Pass { exact: false } => f.write_str("pass (necessary rules only)"),
            Outcome::Fail(rule) => write!(f, "fail [{rule}]"),
            Outcome::Unknown => f.write_str("unknown"),
        }
    }
}

fn check_seq(d: u32, r: u32, a: &VanishingSeq) -> Result<()> {
    if a.degree() != d || a.r() != r {
        return Err(Error::BoundMismatch { r, d, found_r: a.r(), found_d: a.degree() });
    }
    Ok(())
}

/// Two-point rule on an elliptic curve with `a` at `p` and `b` at `q`.
///
/// `torsion` is the declared order of `p - q`: `None` when nothing is known,
/// `Some(None)` when `p - q` is not torsion. The pass is exact when every sum
/// `a_i + b_{r-i}` lies in `{d - 1, d}`, where existence is decided exactly.
pub fn elliptic_two_point_check(
    d: u32,
    r: u32,
    a: &VanishingSeq,
    b: &VanishingSeq,
    torsion: Option<Option<u32>>,
) -> Result<Outcome> {
    check_seq(d, r, a)?;
    check_seq(d, r, b)?;
    Ok(two_point(d, a.entries(), b.entries(), torsion))
}

pub(crate) fn two_point(d: u32, a: &[u32], b: &[u32], torsion: Option<Option<u32>>) -> Outcome {
    let r = a.len() - 1;
    let sum = |i: usize| a[i] + b[r - i];
    let mut first_tight = None;
    let mut loose = false;
    for i in 0..=r {
        let s = sum(i);
        if s > d {
            return Outcome::Fail(Rule::EllipticPairwiseBound);
        }
        if s == d {
            match first_tight {
                None => first_tight = Some(i),
                Some(i0) => {
                    let Some(order) = torsion else { return Outcome::Unknown };
                    if !divides(order, a[i] - a[i0]) {
                        return Outcome::Fail(Rule::EllipticTorsion);
                    }
                }
            }
        } else if s + 1 < d {
            loose = true;
        }
    }
    if loose {
        return Outcome::Pass { exact: false };
    }
    let Some(i0) = first_tight else { return Outcome::Pass { exact: true } };
    let Some(order) = torsion else { return Outcome::Pass { exact: false } };
    // D ~ a_{i0} p + b_{r-i0} q; a section vanishing to a_i + 1 at p and
    // b_{r-i} at q exists exactly when (a_i + 1 - a_{i0})(p - q) ~ 0.
    for i in 0..=r {
        if sum(i) + 1 != d {
            continue;
        }
        let shift = i64::from(a[i]) + 1 - i64::from(a[i0]);
        if divides_signed(order, shift) && (i == r || a[i + 1] != a[i] + 1) {
            return Outcome::Fail(Rule::EllipticTwoPointExistence);
        }
    }
    Outcome::Pass { exact: true }
}

fn divides(order: Option<u32>, k: u32) -> bool {
    match order {
        Some(m) => k.is_multiple_of(m),
        None => k == 0,
    }
}

fn divides_signed(order: Option<u32>, k: i64) -> bool {
    match order {
        Some(m) => k.rem_euclid(i64::from(m)) == 0,
        None => k == 0,
    }
}

/// Single-point rule on an elliptic curve: `d - 1` and `d` cannot both be
/// vanishing orders. A pass is never exact.
pub fn elliptic_single_point_check(d: u32, a: &VanishingSeq) -> Result<Outcome> {
    if a.degree() != d {
        return Err(Error::BoundMismatch { r: a.r(), d, found_r: a.r(), found_d: a.degree() });
    }
    Ok(single_point(d, a.entries()))
}

pub(crate) fn single_point(d: u32, e: &[u32]) -> Outcome {
    let n = e.len();
    if d >= 1 && n >= 2 && e[n - 1] == d && e[n - 2] == d - 1 {
        return Outcome::Fail(Rule::EllipticSinglePole);
    }
    Outcome::Pass { exact: false }
}

/// All elliptic rules for vanishing `seqs[i]` at `c.points[i]`.
pub(crate) fn elliptic_eval(c: &Component, d: u32, seqs: &[&[u32]]) -> Outcome {
    match seqs {
        [] => Outcome::Unknown,
        [a] => single_point(d, a),
        [a, b] => {
            let single = single_point(d, a).min_with(single_point(d, b));
            if single.is_fail() {
                return single;
            }
            two_point(d, a, b, c.torsion_between(&c.points[0], &c.points[1]))
        }
        _ => {
            let mut worst = Outcome::Pass { exact: false };
            for a in seqs {
                worst = worst.min_with(single_point(d, a));
            }
            for i in 0..seqs.len() {
                for j in i + 1..seqs.len() {
                    let o = two_point(d, seqs[i], seqs[j], c.torsion_between(&c.points[i], &c.points[j]));
                    // the exact two-point theorem does not apply with more points
                    let o = match o {
                        Outcome::Fail(Rule::EllipticTwoPointExistence) | Outcome::Pass { .. } => {
                            Outcome::Pass { exact: false }
                        }
                        other => other,
                    };
                    worst = worst.min_with(o);
                }
            }
            worst
        }
    }
}

/// Exact check on a general pointed curve of genus `genus`. Points with zero
/// ramification are ignored; one ramified point uses the closed form, one
/// point plus one cusp uses the point-and-cusp form, and anything else the
/// Schubert criterion.
pub fn general_pointed_check(
    genus: u32,
    t: SeriesType,
    rams: &[RamificationSeq],
    cache: &mut SchubertCache,
) -> Result<Outcome> {
    let t = t.on_genus(genus);
    for a in rams {
        a.check_type(t.r, t.d)?;
    }
    let live: Vec<&RamificationSeq> = rams.iter().filter(|a| !a.is_zero()).collect();
    let pass = |ok: bool, rule: Rule| Ok(if ok { Outcome::Pass { exact: true } } else { Outcome::Fail(rule) });
    match live.as_slice() {
        [] => pass(numerology::rho(t) >= 0, Rule::BrillNoether),
        [a] => pass(numerology::pointed_exists(t, a)?, Rule::PointedCriterion),
        [a, b] if b.is_cusp() => pass(numerology::cusp_pointed_exists(t, a)?, Rule::CuspCriterion),
        [a, b] if a.is_cusp() => pass(numerology::cusp_pointed_exists(t, b)?, Rule::CuspCriterion),
        _ => {
            let owned: Vec<RamificationSeq> = live.into_iter().cloned().collect();
            pass(cache.bn_condition(t, &owned)?, Rule::SchubertCriterion)
        }
    }
}

/// Counting and gonality rules for a fact-sheet component. Never passes.
pub fn factsheet_check(sheet: &FactSheet, t: SeriesType, rams: &[RamificationSeq]) -> Result<Outcome> {
    for a in rams {
        a.check_type(t.r, t.d)?;
    }
    if let Some(k) = sheet.gonality {
        if t.r == 1 && t.d < k {
            return Ok(Outcome::Fail(Rule::FactSheetGonality));
        }
    }
    if sheet.general_points {
        if let Some(dim) = sheet.dim(t.r, t.d) {
            let ramified = rams.iter().filter(|a| !a.is_zero()).count();
            if ramified as u64 > u64::from(dim) {
                return Ok(Outcome::Fail(Rule::FactSheetCount));
            }
        }
    }
    Ok(Outcome::Unknown)
}

/// Evaluates the oracle of a component given vanishing sequences at some of
/// its marked points (indexed like `Component::points`). Missing points are
/// unramified, except declared cusp points, which carry a cusp.
#[derive(Debug, Default, Clone)]
pub struct ComponentChecker {
    schubert: SchubertCache,
}

impl ComponentChecker {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn check(&mut self, c: &Component, t: SeriesType, seqs: &BTreeMap<usize, VanishingSeq>) -> Result<Outcome> {
        for a in seqs.values() {
            check_seq(t.d, t.r, a)?;
        }
        let at = |i: usize| -> Result<Option<VanishingSeq>> { Ok(seqs.get(&i).cloned()) };
        match &c.kind {
            ComponentKind::GeneralPointed { cusp_points } => {
                let mut rams = Vec::new();
                for (i, name) in c.points.iter().enumerate() {
                    match at(i)? {
                        Some(a) => rams.push(a.to_ramification()),
                        None if cusp_points.contains(name) => rams.push(RamificationSeq::cusp(t.r, t.d)?),
                        None => {}
                    }
                }
                general_pointed_check(c.genus, t, &rams, &mut self.schubert)
            }
            ComponentKind::FactSheet(sheet) => {
                let rams: Vec<RamificationSeq> = seqs.values().map(|a| a.to_ramification()).collect();
                factsheet_check(sheet, t, &rams)
            }
            ComponentKind::Elliptic { .. } => {
                let unramified = VanishingSeq::unramified(t.r, t.d)?;
                let full: Vec<&[u32]> =
                    (0..c.points.len()).map(|i| seqs.get(&i).unwrap_or(&unramified).entries()).collect();
                Ok(elliptic_eval(c, t.d, &full))
            }
        }
    }
}

impl Outcome {
    /// Combines two verdicts on the same object: any failure wins, then
    /// unknown, then non-exact pass.
    pub(crate) fn min_with(self, other: Outcome) -> Outcome {
        match (self, other) {
            (Outcome::Fail(r), _) | (_, Outcome::Fail(r)) => Outcome::Fail(r),
            (Outcome::Unknown, _) | (_, Outcome::Unknown) => Outcome::Unknown,
            (Outcome::Pass { exact: a }, Outcome::Pass { exact: b }) => Outcome::Pass { exact: a && b },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn v(e: &[u32], d: u32) -> VanishingSeq {
        VanishingSeq::new(e.to_vec(), d).unwrap()
    }

    fn gp(id: &str, genus: u32, points: &[&str]) -> Component {
        Component {
            id: id.into(),
            genus,
            kind: ComponentKind::GeneralPointed { cusp_points: vec![] },
            points: points.iter().map(|p| String::from(*p)).collect(),
        }
    }

    fn elliptic(order: Option<u32>) -> Component {
        Component {
            id: "E".into(),
            genus: 1,
            kind: ComponentKind::Elliptic { torsion: vec![TorsionPair { p: "p1".into(), q: "p2".into(), order }] },
            points: vec!["p1".into(), "p2".into()],
        }
    }

    fn chain(order: Option<u32>) -> Result<CompactCurve> {
        CompactCurve::new(
            "chain",
            23,
            vec![gp("C1", 11, &["p1"]), elliptic(order), gp("C2", 11, &["p2"])],
            &[(("C1", "p1"), ("E", "p1")), (("E", "p2"), ("C2", "p2"))],
        )
    }

    #[test]
    fn two_point_examples() {
        let a = v(&[4, 8, 13], 17);
        assert_eq!(elliptic_two_point_check(17, 2, &a, &a, Some(Some(9))).unwrap(), Outcome::Pass { exact: true });
        let p = v(&[0, 12], 12);
        assert_eq!(elliptic_two_point_check(12, 1, &p, &p, Some(Some(12))).unwrap(), Outcome::Pass { exact: true });
        assert_eq!(
            elliptic_two_point_check(20, 3, &v(&[0, 9, 18, 19], 20), &v(&[1, 2, 11, 20], 20), Some(Some(9))).unwrap(),
            Outcome::Fail(Rule::EllipticTorsion)
        );
        assert_eq!(
            elliptic_two_point_check(12, 1, &p, &v(&[1, 12], 12), Some(Some(12))).unwrap(),
            Outcome::Fail(Rule::EllipticPairwiseBound)
        );
        assert_eq!(elliptic_two_point_check(12, 1, &p, &p, Some(Some(9))).unwrap(), Outcome::Fail(Rule::EllipticTorsion));
        assert_eq!(elliptic_two_point_check(12, 1, &p, &p, Some(None)).unwrap(), Outcome::Fail(Rule::EllipticTorsion));
        assert_eq!(elliptic_two_point_check(12, 1, &p, &p, None).unwrap(), Outcome::Unknown);
    }

    #[test]
    fn two_point_existence_theorem() {
        // sums (12, 11): D ~ 12q, and (0+... ) shift a_1 + 1 - a_0 = 12 divisible by 12
        let d = 12;
        let a = v(&[0, 11], d);
        let b = v(&[0, 12], d);
        assert_eq!(elliptic_two_point_check(d, 1, &a, &b, Some(Some(12))).unwrap(), Outcome::Fail(Rule::EllipticTwoPointExistence));
        assert_eq!(elliptic_two_point_check(d, 1, &a, &b, Some(Some(5))).unwrap(), Outcome::Pass { exact: true });
        // all sums d - 1: D can be chosen freely
        let c = v(&[0, 11], d);
        assert_eq!(elliptic_two_point_check(d, 1, &c, &c, Some(None)).unwrap(), Outcome::Pass { exact: true });
    }

    #[test]
    fn single_point_examples() {
        assert_eq!(elliptic_single_point_check(12, &v(&[11, 12], 12)).unwrap(), Outcome::Fail(Rule::EllipticSinglePole));
        assert_eq!(elliptic_single_point_check(12, &v(&[10, 12], 12)).unwrap(), Outcome::Pass { exact: false });
        assert_eq!(elliptic_single_point_check(3, &v(&[1, 2, 3], 3)).unwrap(), Outcome::Fail(Rule::EllipticSinglePole));
    }

    #[test]
    fn general_pointed_examples() {
        let mut cache = SchubertCache::default();
        let t = SeriesType::new(11, 3, 20).unwrap();
        let alpha = v(&[11, 12, 13, 14], 20).complement().to_ramification();
        assert_eq!(general_pointed_check(11, t, &[alpha], &mut cache).unwrap(), Outcome::Pass { exact: true });
        let alpha = v(&[0, 9, 18, 19], 20).complement().to_ramification();
        assert_eq!(general_pointed_check(11, t, &[alpha], &mut cache).unwrap(), Outcome::Fail(Rule::PointedCriterion));
        let t = SeriesType::new(11, 2, 17).unwrap();
        let alpha = RamificationSeq::new(vec![4, 8, 11], 17).unwrap();
        assert_eq!(general_pointed_check(11, t, &[alpha], &mut cache).unwrap(), Outcome::Pass { exact: true });
        let t = SeriesType::new(23, 1, 12).unwrap();
        assert_eq!(general_pointed_check(23, t, &[], &mut cache).unwrap(), Outcome::Fail(Rule::BrillNoether));
    }

    #[test]
    fn factsheet_examples() {
        let sheet = FactSheet { facts: vec![Fact { r: 1, d: 12, dim: 7 }], gonality: Some(6), general_points: true };
        let t = SeriesType::new(15, 1, 12).unwrap();
        let cusp = RamificationSeq::cusp(1, 12).unwrap();
        assert_eq!(factsheet_check(&sheet, t, &vec![cusp.clone(); 8]).unwrap(), Outcome::Fail(Rule::FactSheetCount));
        assert_eq!(factsheet_check(&sheet, t, &vec![cusp; 7]).unwrap(), Outcome::Unknown);
        assert_eq!(factsheet_check(&FactSheet::default(), t, &[]).unwrap(), Outcome::Unknown);
        let t = SeriesType::new(15, 1, 5).unwrap();
        assert_eq!(factsheet_check(&sheet, t, &[]).unwrap(), Outcome::Fail(Rule::FactSheetGonality));
    }

    #[test]
    fn curve_validation() {
        assert!(chain(Some(9)).is_ok());
        let bad_genus = CompactCurve::new("x", 22, vec![gp("C1", 11, &["p1"]), gp("C2", 11, &["p1"])], &[]);
        assert!(bad_genus.is_err());
        let cycle = CompactCurve::new(
            "x",
            22,
            vec![gp("A", 11, &["p", "q"]), gp("B", 11, &["p", "q"])],
            &[(("A", "p"), ("B", "p")), (("A", "q"), ("B", "q"))],
        );
        assert!(cycle.is_err());
        let twice = CompactCurve::new(
            "x",
            33,
            vec![gp("A", 11, &["p"]), gp("B", 11, &["p", "q"]), gp("C", 11, &["p"])],
            &[(("A", "p"), ("B", "p")), (("B", "p"), ("C", "p"))],
        );
        assert!(twice.is_err());
        let mut e = elliptic(Some(1));
        assert!(CompactCurve::new("x", 1, vec![e.clone()], &[]).is_err());
        e.genus = 2;
        e.kind = ComponentKind::Elliptic { torsion: vec![] };
        assert!(CompactCurve::new("x", 2, vec![e], &[]).is_err());
    }

    #[test]
    fn checker_dispatch() {
        let curve = chain(Some(9)).unwrap();
        let t = SeriesType::new(23, 2, 17).unwrap();
        let mut checker = ComponentChecker::new();
        let mut seqs = BTreeMap::new();
        seqs.insert(0, v(&[4, 8, 13], 17));
        seqs.insert(1, v(&[4, 8, 13], 17));
        assert_eq!(checker.check(curve.component(1), t, &seqs).unwrap(), Outcome::Pass { exact: true });
        let mut one = BTreeMap::new();
        one.insert(0, v(&[4, 9, 13], 17));
        assert_eq!(checker.check(curve.component(0), t, &one).unwrap(), Outcome::Pass { exact: true });
    }
}
