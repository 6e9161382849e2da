//! Limit linear series on curves of compact type.
//!
//! A limit `g^r_d` assigns a vanishing sequence to both branches of every
//! node, subject to `a_i(Y) + a_{r-i}(Z) >= d` at each node and to each
//! component carrying a series with that vanishing. [`Refuter`] searches all
//! such assignments exhaustively against the local rules of
//! [`crate::curves`]; [`verify_witness`] checks one explicit assignment.
//!
//! # Search reduction
//!
//! Components split into two kinds. General pointed and fact-sheet
//! components are *monotone*: lowering the vanishing at a point never turns
//! a pass into a failure. Elliptic components are not, and act as pivots.
//!
//! * A node side on a monotone component whose partner branch is enumerated
//!   is set to the complement `b_i = d - a_{r-i}` of the partner, the least
//!   value the node allows. Between two monotone components the first branch
//!   listed in the node is enumerated.
//! * An elliptic tail (exactly one node point, nothing else constrained) is
//!   enumerated only over its maximal locally feasible sequences: raising the
//!   tail's vanishing only weakens the node condition and lowers the derived
//!   complement.
//!
//! Both reductions keep a surviving assignment whenever one exists, so a
//! `Refuted` verdict from the reduced search is a verdict on all limits, and
//! the reported survivors are the canonical representatives of the full
//! survivor set. `RefuteOptions::pruning = false` disables both.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use crate::curves::{self, CompactCurve, ComponentChecker, ComponentKind, Outcome, PointRef, Rule};
use crate::numerology::{self, SeriesType, VanishingSeq};
use crate::{Error, Result};

/// Status of one node under given branch sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NodeStatus {
    Incompatible,
    /// Compatible with some sum `a_i + b_{r-i}` above `d`.
    Crude,
    /// Every sum equals `d`.
    Refined,
}

impl fmt::Display for NodeStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NodeStatus::Incompatible => "incompatible",
            NodeStatus::Crude => "crude",
            NodeStatus::Refined => "refined",
        })
    }
}

pub fn node_compatible(y: &VanishingSeq, z: &VanishingSeq, d: u32) -> Result<NodeStatus> {
    if y.r() != z.r() || y.degree() != d || z.degree() != d {
        return Err(Error::BoundMismatch { r: y.r(), d, found_r: z.r(), found_d: z.degree() });
    }
    Ok(node_status(y.entries(), z.entries(), d))
}

fn node_status(y: &[u32], z: &[u32], d: u32) -> NodeStatus {
    let r = y.len() - 1;
    let mut refined = true;
    for i in 0..=r {
        let s = y[i] + z[r - i];
        if s < d {
            return NodeStatus::Incompatible;
        }
        refined &= s == d;
    }
    if refined {
        NodeStatus::Refined
    } else {
        NodeStatus::Crude
    }
}

/// Both sides of `rho(g, r, d) >= sum of the adjusted rho of each aspect`,
/// with equality exactly for refined limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Audit {
    pub lhs: i64,
    pub rhs: i64,
    pub satisfied: bool,
    pub equality: bool,
}

pub fn additivity_audit(t: SeriesType, aspect_rhos: &[i64]) -> Audit {
    let lhs = numerology::rho(t);
    let rhs = aspect_rhos.iter().sum();
    Audit { lhs, rhs, satisfied: lhs >= rhs, equality: lhs == rhs }
}

impl fmt::Display for Audit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = if self.equality {
            "="
        } else if self.satisfied {
            ">"
        } else {
            "<"
        };
        write!(f, "{} {rel} {}", self.lhs, self.rhs)
    }
}

/// Vanishing sequences at marked points of a curve.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AspectAssignment {
    seqs: BTreeMap<PointRef, VanishingSeq>,
}

impl AspectAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, p: PointRef, a: VanishingSeq) {
        self.seqs.insert(p, a);
    }

    /// Adds `entries` at `component.point`, resolving names against `curve`.
    pub fn set(&mut self, curve: &CompactCurve, component: &str, point: &str, entries: Vec<u32>, d: u32) -> Result<()> {
        let p = curve
            .point_ref(component, point)
            .ok_or_else(|| Error::InvalidAssignment(format!("unknown point `{component}.{point}`")))?;
        self.seqs.insert(p, VanishingSeq::new(entries, d)?);
        Ok(())
    }

    pub fn get(&self, p: PointRef) -> Option<&VanishingSeq> {
        self.seqs.get(&p)
    }

    pub fn iter(&self) -> impl Iterator<Item = (PointRef, &VanishingSeq)> {
        self.seqs.iter().map(|(&p, a)| (p, a))
    }

    pub fn len(&self) -> usize {
        self.seqs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seqs.is_empty()
    }

    fn on_component(&self, c: usize) -> BTreeMap<usize, VanishingSeq> {
        self.seqs.iter().filter(|(p, _)| p.component == c).map(|(p, a)| (p.point, a.clone())).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RefuteOptions {
    /// Complement derivation and tail dominance.
    pub pruning: bool,
    /// Survivors listed in the report; the total is always exact.
    pub survivor_cap: usize,
    /// Refuse searches whose candidate space exceeds this.
    pub max_candidates: u128,
}

impl Default for RefuteOptions {
    fn default() -> Self {
        Self { pruning: true, survivor_cap: 100, max_candidates: 10_000_000_000 }
    }
}

/// How the sequence at a node point is chosen.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DomainKind {
    /// All sequences of type `(r, d)`.
    Full,
    /// Maximal locally feasible sequences of an elliptic tail.
    Dominated { infeasible: u64, dominated: u64 },
    /// The complement of the sequence at the partner branch.
    Complement { of: PointRef },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Domain {
    pub point: PointRef,
    pub label: String,
    pub kind: DomainKind,
    /// Number of values enumerated (1 for complements).
    pub size: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Survivor {
    pub assignment: AspectAssignment,
    /// Some component passed without an exact existence criterion.
    pub unconfirmed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Refuted,
    Survivors { total: u128, listed: Vec<Survivor> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefutationReport {
    pub target: SeriesType,
    pub curve: String,
    pub verdict: Verdict,
    /// Size of the enumerated candidate space.
    pub candidates_examined: u128,
    /// Candidates eliminated by each rule; each is charged to the first
    /// failing check in evaluation order.
    pub rule_hits: BTreeMap<Rule, u128>,
    pub domains: Vec<Domain>,
    pub pruning: bool,
}

impl RefutationReport {
    pub fn is_refuted(&self) -> bool {
        matches!(self.verdict, Verdict::Refuted)
    }

    pub fn survivor_count(&self) -> u128 {
        match &self.verdict {
            Verdict::Refuted => 0,
            Verdict::Survivors { total, .. } => *total,
        }
    }

    pub fn survivors(&self) -> &[Survivor] {
        match &self.verdict {
            Verdict::Refuted => &[],
            Verdict::Survivors { listed, .. } => listed,
        }
    }
}

/// Partial result of [`Refuter::run_range`], merged by [`Refuter::merge`].
#[derive(Debug, Clone, Default)]
pub struct PartialReport {
    hits: BTreeMap<Rule, u128>,
    survivors: u128,
    listed: Vec<Survivor>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Source {
    Var(usize),
    Complement(usize),
}

#[derive(Debug, Clone)]
struct ComponentConstraint {
    component: usize,
    /// (point index on component, source)
    points: Vec<(usize, Source)>,
    /// distinct variables read, ascending
    vars: Vec<usize>,
    elliptic: bool,
    cache: usize,
}

#[derive(Debug, Clone)]
enum Constraint {
    Node { a: usize, b: usize },
    Component(ComponentConstraint),
}

#[derive(Debug, Clone)]
struct Var {
    point: PointRef,
    domain: Vec<u32>,
}

/// Exhaustive search for limit `g^r_d` on a fixed curve.
#[derive(Debug, Clone)]
pub struct Refuter<'a> {
    curve: &'a CompactCurve,
    t: SeriesType,
    opts: RefuteOptions,
    table: Vec<VanishingSeq>,
    complement: Vec<u32>,
    unramified: u32,
    vars: Vec<Var>,
    sources: BTreeMap<PointRef, Source>,
    root: Vec<Constraint>,
    steps: Vec<Vec<Constraint>>,
    /// suffix[k] = product of domain sizes of vars k..
    suffix: Vec<u128>,
    caches: usize,
    domains: Vec<Domain>,
}

const MAX_TABLE: u128 = 20_000_000;

fn binomial(n: u64, k: u64) -> u128 {
    let k = k.min(n - k.min(n));
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc
}

impl<'a> Refuter<'a> {
    pub fn new(curve: &'a CompactCurve, t: SeriesType, opts: RefuteOptions) -> Result<Self> {
        if t.genus != curve.genus() {
            return Err(Error::InvalidCurve(format!(
                "series is over genus {}, curve `{}` has genus {}",
                t.genus,
                curve.name(),
                curve.genus()
            )));
        }
        let table_len = binomial(u64::from(t.d) + 1, u64::from(t.r) + 1);
        if table_len > MAX_TABLE {
            return Err(Error::SearchTooLarge { candidates: table_len, limit: MAX_TABLE as u64 });
        }
        let table: Vec<VanishingSeq> = VanishingSeq::all(t.r, t.d).collect();
        let index: BTreeMap<&[u32], u32> = table.iter().enumerate().map(|(i, a)| (a.entries(), i as u32)).collect();
        let complement: Vec<u32> = table.iter().map(|a| index[a.complement().entries()]).collect();
        let unramified = index[VanishingSeq::unramified(t.r, t.d)?.entries()];
        drop(index);

        let mut this = Self {
            curve,
            t,
            opts,
            table,
            complement,
            unramified,
            vars: Vec::new(),
            sources: BTreeMap::new(),
            root: Vec::new(),
            steps: Vec::new(),
            suffix: Vec::new(),
            caches: 0,
            domains: Vec::new(),
        };
        this.plan()?;
        Ok(this)
    }

    fn monotone(&self, component: usize) -> bool {
        !self.curve.component(component).is_elliptic()
    }

    fn plan(&mut self) -> Result<()> {
        let curve = self.curve;
        let full: Vec<u32> = (0..self.table.len() as u32).collect();
        // choose which node sides are enumerated
        let mut enumerated: Vec<PointRef> = Vec::new();
        let mut derived: Vec<(PointRef, PointRef)> = Vec::new();
        for &(a, b) in curve.nodes() {
            if !self.opts.pruning {
                enumerated.push(a);
                enumerated.push(b);
                continue;
            }
            match (self.monotone(a.component), self.monotone(b.component)) {
                (false, false) => {
                    enumerated.push(a);
                    enumerated.push(b);
                }
                (false, true) => {
                    enumerated.push(a);
                    derived.push((b, a));
                }
                (true, false) => {
                    enumerated.push(b);
                    derived.push((a, b));
                }
                (true, true) => {
                    enumerated.push(a);
                    derived.push((b, a));
                }
            }
        }
        let mut vars: Vec<Var> = Vec::new();
        let mut domains: Vec<Domain> = Vec::new();
        for &p in &enumerated {
            let (domain, kind) = if self.opts.pruning && self.is_tail(p) {
                let (dom, infeasible, dominated) = self.tail_domain(p)?;
                (dom, DomainKind::Dominated { infeasible, dominated })
            } else {
                (full.clone(), DomainKind::Full)
            };
            domains.push(Domain { point: p, label: curve.point_label(p), kind, size: domain.len() as u64 });
            vars.push(Var { point: p, domain });
        }
        // small domains first, then curve order
        let mut order: Vec<usize> = (0..vars.len()).collect();
        order.sort_by_key(|&i| (vars[i].domain.len(), vars[i].point));
        let vars: Vec<Var> = order.iter().map(|&i| vars[i].clone()).collect();
        let mut domains: Vec<Domain> = order.iter().map(|&i| domains[i].clone()).collect();
        let mut sources = BTreeMap::new();
        for (k, v) in vars.iter().enumerate() {
            sources.insert(v.point, Source::Var(k));
        }
        for &(p, from) in &derived {
            let Some(&Source::Var(k)) = sources.get(&from) else {
                return Err(Error::InvalidCurve(format!("node side {} has no enumerated partner", curve.point_label(p))));
            };
            sources.insert(p, Source::Complement(k));
            domains.push(Domain {
                point: p,
                label: curve.point_label(p),
                kind: DomainKind::Complement { of: from },
                size: 1,
            });
        }
        let n = vars.len();
        let mut steps: Vec<Vec<Constraint>> = vec![Vec::new(); n];
        let mut root = Vec::new();
        let var_of = |s: Source| match s {
            Source::Var(k) | Source::Complement(k) => k,
        };
        // node constraints between two enumerated sides
        for &(a, b) in curve.nodes() {
            if let (Some(&Source::Var(ka)), Some(&Source::Var(kb))) = (sources.get(&a), sources.get(&b)) {
                steps[ka.max(kb)].push(Constraint::Node { a: ka, b: kb });
            }
        }
        // component constraints: monotone first, elliptic last
        let mut caches = 0;
        let mut comp_constraints = Vec::new();
        for (ci, c) in curve.components().iter().enumerate() {
            let points: Vec<(usize, Source)> = (0..c.points.len())
                .filter_map(|pi| sources.get(&PointRef { component: ci, point: pi }).map(|&s| (pi, s)))
                .collect();
            let mut vs: Vec<usize> = points.iter().map(|&(_, s)| var_of(s)).collect();
            vs.sort_unstable();
            vs.dedup();
            let elliptic = c.is_elliptic();
            let cache = if elliptic {
                usize::MAX
            } else {
                caches += 1;
                caches - 1
            };
            comp_constraints.push(ComponentConstraint { component: ci, points, vars: vs, elliptic, cache });
        }
        comp_constraints.sort_by_key(|c| c.elliptic);
        for c in comp_constraints {
            match c.vars.last() {
                Some(&k) => steps[k].push(Constraint::Component(c)),
                None => root.push(Constraint::Component(c)),
            }
        }
        let mut suffix = vec![1u128; n + 1];
        for k in (0..n).rev() {
            suffix[k] = suffix[k + 1]
                .checked_mul(vars[k].domain.len() as u128)
                .ok_or(Error::SearchTooLarge { candidates: u128::MAX, limit: 0 })?;
        }
        if suffix[0] > self.opts.max_candidates {
            return Err(Error::SearchTooLarge {
                candidates: suffix[0],
                limit: u64::try_from(self.opts.max_candidates).unwrap_or(u64::MAX),
            });
        }
        self.vars = vars;
        self.sources = sources;
        self.root = root;
        self.steps = steps;
        self.suffix = suffix;
        self.caches = caches;
        self.domains = domains;
        Ok(())
    }

    /// An elliptic component with exactly one node point.
    fn is_tail(&self, p: PointRef) -> bool {
        let curve = self.curve;
        if !curve.component(p.component).is_elliptic() {
            return false;
        }
        let node_points = curve
            .nodes()
            .iter()
            .flat_map(|&(a, b)| [a, b])
            .filter(|q| q.component == p.component)
            .count();
        node_points == 1
    }

    fn tail_domain(&self, p: PointRef) -> Result<(Vec<u32>, u64, u64)> {
        let c = self.curve.component(p.component);
        let unram = self.table[self.unramified as usize].entries();
        let mut feasible: Vec<u32> = Vec::new();
        let mut infeasible = 0;
        let mut point_seqs: Vec<&[u32]> = vec![unram; c.points.len()];
        for (i, a) in self.table.iter().enumerate() {
            point_seqs[p.point] = a.entries();
            if curves::elliptic_eval(c, self.t.d, &point_seqs).is_fail() {
                infeasible += 1;
            } else {
                feasible.push(i as u32);
            }
        }
        let maximal: Vec<u32> = feasible
            .iter()
            .copied()
            .filter(|&i| {
                let a = &self.table[i as usize];
                !feasible.iter().any(|&j| j != i && a.le_pointwise(&self.table[j as usize]))
            })
            .collect();
        let dominated = (feasible.len() - maximal.len()) as u64;
        Ok((maximal, infeasible, dominated))
    }

    pub fn target(&self) -> SeriesType {
        self.t
    }

    /// Length of the first variable's domain; [`Self::run_range`] partitions it.
    pub fn first_domain_len(&self) -> usize {
        self.vars.first().map_or(1, |v| v.domain.len())
    }

    pub fn candidates(&self) -> u128 {
        self.suffix[0]
    }

    pub fn domains(&self) -> &[Domain] {
        &self.domains
    }

    pub fn run(&self) -> Result<RefutationReport> {
        let part = self.run_range(0..self.first_domain_len())?;
        Ok(self.merge(vec![part]))
    }

    /// Searches the candidates whose first variable takes a value in `range`
    /// (positions in its domain).
    pub fn run_range(&self, range: Range<usize>) -> Result<PartialReport> {
        let mut st = State {
            values: vec![0; self.vars.len()],
            single: vec![Vec::new(); self.caches],
            multi: vec![BTreeMap::new(); self.caches],
            checker: ComponentChecker::new(),
            out: PartialReport::default(),
        };
        let width = range.len() as u128;
        if width == 0 {
            return Ok(st.out);
        }
        let below = if self.vars.is_empty() { 1 } else { width * self.suffix[1] };
        let mut exact = true;
        for c in &self.root {
            match self.eval(c, &mut st)? {
                Outcome::Fail(rule) => {
                    *st.out.hits.entry(rule).or_insert(0) += below;
                    return Ok(st.out);
                }
                o => exact &= o.is_exact_pass(),
            }
        }
        if self.vars.is_empty() {
            self.record(&mut st, exact);
            return Ok(st.out);
        }
        self.dfs(0, Some(range), exact, &mut st)?;
        Ok(st.out)
    }

    fn dfs(&self, k: usize, range: Option<Range<usize>>, exact: bool, st: &mut State) -> Result<()> {
        if k == self.vars.len() {
            self.record(st, exact);
            return Ok(());
        }
        let domain = &self.vars[k].domain;
        let slice = match range {
            Some(r) => &domain[r],
            None => &domain[..],
        };
        'values: for &v in slice {
            st.values[k] = v;
            let mut ex = exact;
            for c in &self.steps[k] {
                match self.eval(c, st)? {
                    Outcome::Fail(rule) => {
                        *st.out.hits.entry(rule).or_insert(0) += self.suffix[k + 1];
                        continue 'values;
                    }
                    o => ex &= o.is_exact_pass(),
                }
            }
            self.dfs(k + 1, None, ex, st)?;
        }
        Ok(())
    }

    fn value(&self, s: Source, st: &State) -> u32 {
        match s {
            Source::Var(k) => st.values[k],
            Source::Complement(k) => self.complement[st.values[k] as usize],
        }
    }

    fn eval(&self, c: &Constraint, st: &mut State) -> Result<Outcome> {
        match c {
            Constraint::Node { a, b } => {
                let ya = self.table[st.values[*a] as usize].entries();
                let yb = self.table[st.values[*b] as usize].entries();
                Ok(match node_status(ya, yb, self.t.d) {
                    NodeStatus::Incompatible => Outcome::Fail(Rule::NodeCompatibility),
                    _ => Outcome::Pass { exact: true },
                })
            }
            Constraint::Component(cc) if cc.elliptic => {
                let comp = self.curve.component(cc.component);
                let unram = self.table[self.unramified as usize].entries();
                let mut seqs: [&[u32]; 4] = [unram; 4];
                if comp.points.len() <= 4 {
                    for &(pi, s) in &cc.points {
                        seqs[pi] = self.table[self.value(s, st) as usize].entries();
                    }
                    Ok(curves::elliptic_eval(comp, self.t.d, &seqs[..comp.points.len()]))
                } else {
                    let mut seqs: Vec<&[u32]> = vec![unram; comp.points.len()];
                    for &(pi, s) in &cc.points {
                        seqs[pi] = self.table[self.value(s, st) as usize].entries();
                    }
                    Ok(curves::elliptic_eval(comp, self.t.d, &seqs))
                }
            }
            Constraint::Component(cc) => {
                if let [k] = cc.vars[..] {
                    let v = st.values[k] as usize;
                    let cache = &mut st.single[cc.cache];
                    if cache.is_empty() {
                        cache.resize(self.table.len(), None);
                    }
                    if let Some(o) = cache[v] {
                        return Ok(o);
                    }
                    let o = self.eval_monotone(cc, st)?;
                    st.single[cc.cache][v] = Some(o);
                    Ok(o)
                } else {
                    let key: Vec<u32> = cc.vars.iter().map(|&k| st.values[k]).collect();
                    if let Some(&o) = st.multi[cc.cache].get(&key) {
                        return Ok(o);
                    }
                    let o = self.eval_monotone(cc, st)?;
                    st.multi[cc.cache].insert(key, o);
                    Ok(o)
                }
            }
        }
    }

    fn eval_monotone(&self, cc: &ComponentConstraint, st: &mut State) -> Result<Outcome> {
        let seqs: BTreeMap<usize, VanishingSeq> =
            cc.points.iter().map(|&(pi, s)| (pi, self.table[self.value(s, st) as usize].clone())).collect();
        st.checker.check(self.curve.component(cc.component), self.t, &seqs)
    }

    fn record(&self, st: &mut State, exact: bool) {
        st.out.survivors += 1;
        if st.out.listed.len() < self.opts.survivor_cap {
            let mut assignment = AspectAssignment::new();
            for (&p, &s) in &self.sources {
                assignment.insert(p, self.table[self.value(s, st) as usize].clone());
            }
            st.out.listed.push(Survivor { assignment, unconfirmed: !exact });
        }
    }

    /// Combines partial reports of consecutive ranges, in order.
    pub fn merge(&self, parts: Vec<PartialReport>) -> RefutationReport {
        let mut hits: BTreeMap<Rule, u128> = BTreeMap::new();
        let mut total = 0u128;
        let mut listed = Vec::new();
        for part in parts {
            for (rule, n) in part.hits {
                *hits.entry(rule).or_insert(0) += n;
            }
            total += part.survivors;
            for s in part.listed {
                if listed.len() < self.opts.survivor_cap {
                    listed.push(s);
                }
            }
        }
        let verdict = if total == 0 { Verdict::Refuted } else { Verdict::Survivors { total, listed } };
        RefutationReport {
            target: self.t,
            curve: String::from(self.curve.name()),
            verdict,
            candidates_examined: self.suffix[0],
            rule_hits: hits,
            domains: self.domains.clone(),
            pruning: self.opts.pruning,
        }
    }
}

struct State {
    values: Vec<u32>,
    single: Vec<Vec<Option<Outcome>>>,
    multi: Vec<BTreeMap<Vec<u32>, Outcome>>,
    checker: ComponentChecker,
    out: PartialReport,
}

/// Refutes with default options on a single thread.
pub fn refute(curve: &CompactCurve, t: SeriesType) -> Result<RefutationReport> {
    Refuter::new(curve, t, RefuteOptions::default())?.run()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeReport {
    pub sides: (PointRef, PointRef),
    pub sums: Vec<u32>,
    pub status: NodeStatus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentReport {
    pub component: usize,
    pub outcome: Outcome,
    pub adjusted_rho: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessVerdict {
    /// Every node is compatible and every component passes exactly.
    Confirmed,
    /// Nothing fails, but some component is only known not to fail.
    Consistent,
    Rejected,
}

impl fmt::Display for WitnessVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WitnessVerdict::Confirmed => "confirmed",
            WitnessVerdict::Consistent => "consistent (component existence asserted, not proven)",
            WitnessVerdict::Rejected => "rejected",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessReport {
    pub target: SeriesType,
    pub nodes: Vec<NodeReport>,
    pub components: Vec<ComponentReport>,
    pub audit: Audit,
    /// Every node is refined.
    pub refined: bool,
    pub verdict: WitnessVerdict,
}

/// Checks an explicit assignment: node conditions, every component oracle and
/// the additivity audit. Sequences are required at every node point; other
/// marked points default to unramified (or to a cusp where declared).
pub fn verify_witness(curve: &CompactCurve, t: SeriesType, witness: &AspectAssignment) -> Result<WitnessReport> {
    if t.genus != curve.genus() {
        return Err(Error::InvalidCurve(format!(
            "series is over genus {}, curve `{}` has genus {}",
            t.genus,
            curve.name(),
            curve.genus()
        )));
    }
    for (_, a) in witness.iter() {
        if a.r() != t.r || a.degree() != t.d {
            return Err(Error::BoundMismatch { r: t.r, d: t.d, found_r: a.r(), found_d: a.degree() });
        }
    }
    let mut nodes = Vec::new();
    for &(p, q) in curve.nodes() {
        let (Some(a), Some(b)) = (witness.get(p), witness.get(q)) else {
            let missing = if witness.get(p).is_none() { p } else { q };
            return Err(Error::InvalidAssignment(format!("no sequence at node point {}", curve.point_label(missing))));
        };
        let r = t.r as usize;
        let sums = (0..=r).map(|i| a.entries()[i] + b.entries()[r - i]).collect();
        nodes.push(NodeReport { sides: (p, q), sums, status: node_status(a.entries(), b.entries(), t.d) });
    }
    let mut checker = ComponentChecker::new();
    let mut components = Vec::new();
    for (ci, c) in curve.components().iter().enumerate() {
        let seqs = witness.on_component(ci);
        let outcome = checker.check(c, t, &seqs)?;
        let mut rams: Vec<numerology::RamificationSeq> = seqs.values().map(|a| a.to_ramification()).collect();
        if let ComponentKind::GeneralPointed { cusp_points } = &c.kind {
            for (pi, name) in c.points.iter().enumerate() {
                if cusp_points.contains(name) && !seqs.contains_key(&pi) {
                    rams.push(numerology::RamificationSeq::cusp(t.r, t.d)?);
                }
            }
        }
        let adjusted_rho = numerology::adjusted_rho(t.on_genus(c.genus), &rams)?;
        components.push(ComponentReport { component: ci, outcome, adjusted_rho });
    }
    let rhos: Vec<i64> = components.iter().map(|c| c.adjusted_rho).collect();
    let audit = additivity_audit(t, &rhos);
    let refined = nodes.iter().all(|n| n.status == NodeStatus::Refined);
    let verdict = if nodes.iter().any(|n| n.status == NodeStatus::Incompatible)
        || components.iter().any(|c| c.outcome.is_fail())
    {
        WitnessVerdict::Rejected
    } else if components.iter().all(|c| c.outcome.is_exact_pass()) {
        WitnessVerdict::Confirmed
    } else {
        WitnessVerdict::Consistent
    };
    Ok(WitnessReport { target: t, nodes, components, audit, refined, verdict })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::{Component, TorsionPair};

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

    fn chain(order: u32) -> CompactCurve {
        let e = Component {
            id: "E".into(),
            genus: 1,
            kind: ComponentKind::Elliptic {
                torsion: vec![TorsionPair { p: "p1".into(), q: "p2".into(), order: Some(order) }],
            },
            points: vec!["p1".into(), "p2".into()],
        };
        CompactCurve::new(
            "chain",
            23,
            vec![gp("C1", 11, &["p1"]), e, gp("C2", 11, &["p2"])],
            &[(("C1", "p1"), ("E", "p1")), (("E", "p2"), ("C2", "p2"))],
        )
        .unwrap()
    }

    #[test]
    fn node_examples() {
        assert_eq!(node_compatible(&v(&[1, 2, 3], 15), &v(&[12, 13, 14], 15), 15).unwrap(), NodeStatus::Refined);
        assert_eq!(node_compatible(&v(&[0, 12], 12), &v(&[0, 12], 12), 12).unwrap(), NodeStatus::Refined);
        assert_eq!(node_compatible(&v(&[0, 1], 12), &v(&[0, 1], 12), 12).unwrap(), NodeStatus::Incompatible);
        assert_eq!(node_compatible(&v(&[1, 12], 12), &v(&[0, 12], 12), 12).unwrap(), NodeStatus::Crude);
    }

    #[test]
    fn audit_examples() {
        let t = SeriesType::new(23, 3, 20).unwrap();
        let mut rhos = vec![-9];
        rhos.extend([1; 8]);
        let a = additivity_audit(t, &rhos);
        assert_eq!((a.lhs, a.rhs, a.equality), (-1, -1, true));
        let t = SeriesType::new(23, 2, 15).unwrap();
        let mut rhos = vec![-15];
        rhos.extend([1; 8]);
        assert!(additivity_audit(t, &rhos).equality);
    }

    #[test]
    fn chain_g217_witness() {
        let curve = chain(9);
        let t = SeriesType::new(23, 2, 17).unwrap();
        let mut w = AspectAssignment::new();
        w.set(&curve, "C1", "p1", vec![4, 9, 13], 17).unwrap();
        w.set(&curve, "C2", "p2", vec![4, 9, 13], 17).unwrap();
        w.set(&curve, "E", "p1", vec![4, 8, 13], 17).unwrap();
        w.set(&curve, "E", "p2", vec![4, 8, 13], 17).unwrap();
        let rep = verify_witness(&curve, t, &w).unwrap();
        assert_eq!(rep.verdict, WitnessVerdict::Confirmed);
        assert!(rep.refined);
        let rhos: Vec<i64> = rep.components.iter().map(|c| c.adjusted_rho).collect();
        assert_eq!(rhos, vec![0, -1, 0]);
        assert!(rep.audit.equality);
    }

    #[test]
    fn chain_pencil_refute_and_witness() {
        let curve = chain(12);
        let t = SeriesType::new(23, 1, 12).unwrap();
        let rep = refute(&curve, t).unwrap();
        assert!(!rep.is_refuted());
        let canonical = rep.survivors().iter().any(|s| {
            s.assignment.iter().all(|(_, a)| a.entries() == [0, 12])
        });
        assert!(canonical);
        let rep9 = refute(&chain(9), t).unwrap();
        assert!(rep9.is_refuted());
    }

    #[test]
    fn accounting_identity() {
        let curve = chain(12);
        for (r, d) in [(1, 12), (2, 17)] {
            let t = SeriesType::new(23, r, d).unwrap();
            let rep = refute(&curve, t).unwrap();
            let cut: u128 = rep.rule_hits.values().sum();
            assert_eq!(cut + rep.survivor_count(), rep.candidates_examined);
        }
    }

    #[test]
    fn missing_node_point() {
        let curve = chain(9);
        let t = SeriesType::new(23, 2, 17).unwrap();
        let mut w = AspectAssignment::new();
        w.set(&curve, "C1", "p1", vec![4, 9, 13], 17).unwrap();
        assert!(matches!(verify_witness(&curve, t, &w), Err(Error::InvalidAssignment(_))));
    }
}
