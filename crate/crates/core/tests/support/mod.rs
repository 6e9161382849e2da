//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use bnlimit_core::curves::{self, CompactCurve, Component, ComponentKind, PointRef, TorsionPair};
use bnlimit_core::limit::{self, AspectAssignment, RefuteOptions, Refuter, WitnessVerdict};
use bnlimit_core::numerology::{SeriesType, VanishingSeq};
use bnlimit_core::schubert::{self, CohomologyClass, Partition, Rect};

/// Monomials of a polynomial in `k` variables: exponent vector -> coefficient.
pub type Poly = BTreeMap<Vec<u32>, i128>;

/// Schur polynomial `s_shape(x_1..x_k)` by enumerating semistandard tableaux.
pub fn schur_poly(shape: &[u32], k: usize) -> Poly {
    let cells: Vec<(usize, usize)> =
        shape.iter().enumerate().flat_map(|(i, &len)| (0..len as usize).map(move |j| (i, j))).collect();
    let mut grid: Vec<Vec<u32>> = shape.iter().map(|&len| vec![0; len as usize]).collect();
    let mut out = Poly::new();
    fill(&cells, 0, &mut grid, k as u32, &mut out, k);
    out
}

fn fill(cells: &[(usize, usize)], at: usize, grid: &mut Vec<Vec<u32>>, k: u32, out: &mut Poly, nvars: usize) {
    if at == cells.len() {
        let mut e = vec![0u32; nvars];
        for row in grid.iter() {
            for &v in row {
                e[v as usize - 1] += 1;
            }
        }
        *out.entry(e).or_insert(0) += 1;
        return;
    }
    let (i, j) = cells[at];
    let lo_row = if j > 0 { grid[i][j - 1] } else { 1 };
    let lo_col = if i > 0 { grid[i - 1][j] + 1 } else { 1 };
    for v in lo_row.max(lo_col)..=k {
        grid[i][j] = v;
        fill(cells, at + 1, grid, k, out, nvars);
    }
    grid[i][j] = 0;
}

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Expands a symmetric polynomial in Schur polynomials by peeling off the
/// lexicographically largest monomial.
pub fn schur_expand(mut p: Poly, k: usize) -> BTreeMap<Vec<u32>, i128> {
    let mut out = BTreeMap::new();
    while let Some((lead, &c)) = p.iter().next_back() {
        let lead = lead.clone();
        assert!(lead.windows(2).all(|w| w[0] >= w[1]), "leading term {lead:?} is not a partition");
        for (e, v) in schur_poly(&lead, k) {
            *p.entry(e).or_insert(0) -= c * v;
        }
        p.retain(|_, v| *v != 0);
        let mut shape = lead;
        while shape.last() == Some(&0) {
            shape.pop();
        }
        out.insert(shape, c);
    }
    out
}

/// `sigma_lambda * sigma_mu` in `G(rows, rows + cols)` using Schur polynomials
/// in `rows` variables and dropping partitions wider than `cols`.
pub fn oracle_product(lambda: &[u32], mu: &[u32], rect: Rect) -> BTreeMap<Vec<u32>, i128> {
    let k = rect.rows as usize;
    let prod = poly_mul(&schur_poly(lambda, k), &schur_poly(mu, k));
    let mut out = schur_expand(prod, k);
    out.retain(|nu, _| nu.first().is_none_or(|&w| w <= rect.cols));
    out
}

/// Every partition in the rectangle.
pub fn partitions_in(rect: Rect) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    parts_rec(rect.rows as usize, rect.cols, &mut cur, &mut out);
    out
}

fn parts_rec(rows: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    out.push(cur.clone());
    if cur.len() == rows {
        return;
    }
    for v in 1..=max {
        cur.push(v);
        parts_rec(rows, v, cur, out);
        cur.pop();
    }
}

pub fn engine_product(lambda: &[u32], mu: &[u32], rect: Rect) -> BTreeMap<Vec<u32>, i128> {
    let a = CohomologyClass::schubert(rect, Partition::new(lambda.to_vec()).unwrap()).unwrap();
    let b = CohomologyClass::schubert(rect, Partition::new(mu.to_vec()).unwrap()).unwrap();
    let p = schubert::lr_product(&a, &b).unwrap();
    p.terms().map(|(nu, c)| (nu.parts().to_vec(), c)).collect()
}

/// Number of LR mismatches over all pairs in the rectangle.
pub fn lr_discrepancies(rect: Rect) -> (usize, usize) {
    let parts = partitions_in(rect);
    let mut bad = 0;
    let mut total = 0;
    for l in &parts {
        for m in &parts {
            total += 1;
            if oracle_product(l, m, rect) != engine_product(l, m, rect) {
                bad += 1;
            }
        }
    }
    (bad, total)
}

/// Sequences of type `(r, d)` that pass the one-point elliptic rule, keeping
/// only the pointwise maximal ones.
pub fn maximal_tail_sequences(r: u32, d: u32) -> BTreeSet<VanishingSeq> {
    let feasible: Vec<VanishingSeq> = VanishingSeq::all(r, d)
        .filter(|a| !curves::elliptic_single_point_check(d, a).unwrap().is_fail())
        .collect();
    feasible
        .iter()
        .filter(|a| !feasible.iter().any(|b| b != *a && a.le_pointwise(b)))
        .cloned()
        .collect()
}

fn is_tail(curve: &CompactCurve, c: usize) -> bool {
    curve.component(c).is_elliptic() && curve.component(c).points.len() == 1
}

/// The member of an unpruned survivor list that a pruned search should also
/// produce: nodes touching a non-elliptic component are refined, and tail
/// points carry maximal sequences.
pub fn canonical(curve: &CompactCurve, t: SeriesType, a: &AspectAssignment) -> bool {
    let maximal = maximal_tail_sequences(t.r, t.d);
    curve.nodes().iter().all(|&(p, q)| {
        let monotone = !curve.component(p.component).is_elliptic() || !curve.component(q.component).is_elliptic();
        let refined = a.get(p).unwrap().complement() == *a.get(q).unwrap();
        let tail_ok = [p, q].iter().all(|&x| !is_tail(curve, x.component) || maximal.contains(a.get(x).unwrap()));
        (!monotone || refined) && tail_ok
    })
}

pub fn survivor_set(rep: &limit::RefutationReport) -> BTreeSet<Vec<(PointRef, VanishingSeq)>> {
    rep.survivors().iter().map(|s| s.assignment.iter().map(|(p, a)| (p, a.clone())).collect()).collect()
}

/// Pruned and naive searches agree once the naive survivors are reduced to
/// their canonical members. Returns (pruned survivors, naive survivors).
pub fn pruned_matches_naive(curve: &CompactCurve, t: SeriesType) -> Result<(u128, u128), String> {
    let opts = RefuteOptions { survivor_cap: usize::MAX, ..RefuteOptions::default() };
    let pruned = Refuter::new(curve, t, opts).unwrap().run().unwrap();
    let naive = Refuter::new(curve, t, RefuteOptions { pruning: false, ..opts }).unwrap().run().unwrap();
    if pruned.is_refuted() != naive.is_refuted() {
        return Err(format!("{}: pruned refuted = {}, naive = {}", curve.name(), pruned.is_refuted(), naive.is_refuted()));
    }
    let p = survivor_set(&pruned);
    let n: BTreeSet<_> = naive
        .survivors()
        .iter()
        .filter(|s| canonical(curve, t, &s.assignment))
        .map(|s| s.assignment.iter().map(|(p, a)| (p, a.clone())).collect())
        .collect();
    if p != n {
        return Err(format!("{}: {} pruned survivors vs {} canonical naive survivors", curve.name(), p.len(), n.len()));
    }
    Ok((pruned.survivor_count(), naive.survivor_count()))
}

/// Survivors by brute force: every assignment of sequences to node points is
/// passed to the witness checker.
pub fn brute_force_survivors(curve: &CompactCurve, t: SeriesType) -> u128 {
    let points: Vec<PointRef> = curve.nodes().iter().flat_map(|&(a, b)| [a, b]).collect();
    let table: Vec<VanishingSeq> = VanishingSeq::all(t.r, t.d).collect();
    let mut idx = vec![0usize; points.len()];
    let mut count = 0;
    loop {
        let mut w = AspectAssignment::new();
        for (p, &i) in points.iter().zip(&idx) {
            w.insert(*p, table[i].clone());
        }
        if limit::verify_witness(curve, t, &w).unwrap().verdict != WitnessVerdict::Rejected {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == idx.len() {
                return count;
            }
            idx[k] += 1;
            if idx[k] < table.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

fn gp(id: &str, genus: u32, points: &[&str]) -> Component {
    Component {
        id: id.into(),
        genus,
        kind: ComponentKind::GeneralPointed { cusp_points: vec![] },
        points: points.iter().map(|s| s.to_string()).collect(),
    }
}

fn ell(id: &str, points: &[&str], torsion: Option<Option<u32>>) -> Component {
    let torsion = match (points, torsion) {
        ([p, q], Some(order)) => vec![TorsionPair { p: p.to_string(), q: q.to_string(), order }],
        _ => vec![],
    };
    Component {
        id: id.into(),
        genus: 1,
        kind: ComponentKind::Elliptic { torsion },
        points: points.iter().map(|s| s.to_string()).collect(),
    }
}

/// `C1 - E - C2` with the bridge's `p1 - p2` of the given torsion order.
pub fn chain(g1: u32, g2: u32, order: Option<Option<u32>>) -> CompactCurve {
    CompactCurve::new(
        format!("chain({g1},{g2})"),
        g1 + g2 + 1,
        vec![gp("C1", g1, &["p1"]), ell("E", &["p1", "p2"], order), gp("C2", g2, &["p2"])],
        &[(("C1", "p1"), ("E", "p1")), (("E", "p2"), ("C2", "p2"))],
    )
    .unwrap()
}

/// A general curve of genus `g0` with `tails` elliptic tails.
pub fn star(g0: u32, tails: usize) -> CompactCurve {
    let names: Vec<String> = (1..=tails).map(|i| format!("p{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let mut comps = vec![gp("G", g0, &refs)];
    let ids: Vec<String> = (1..=tails).map(|i| format!("E{i}")).collect();
    for id in &ids {
        comps.push(ell(id, &["p"], None));
    }
    let nodes: Vec<curves::NodeSpec<'_>> =
        ids.iter().zip(&refs).map(|(e, p)| (("G", *p), (e.as_str(), "p"))).collect();
    CompactCurve::new(format!("star({g0},{tails})"), g0 + tails as u32, comps, &nodes).unwrap()
}

/// `E1 - E2 - E3`, a chain of elliptic curves with torsion on the middle one.
pub fn elliptic_chain(order: Option<Option<u32>>) -> CompactCurve {
    CompactCurve::new(
        "elliptic-chain",
        3,
        vec![ell("E1", &["a"], None), ell("E2", &["a", "b"], order), ell("E3", &["b"], None)],
        &[(("E1", "a"), ("E2", "a")), (("E2", "b"), ("E3", "b"))],
    )
    .unwrap()
}

/// Every candidate of a search's reduced space, checked one at a time by the
/// witness checker. Returns the number of candidates and the survivors.
pub fn exhaustive_over_domains(
    curve: &CompactCurve,
    t: SeriesType,
    rep: &limit::RefutationReport,
) -> (u128, BTreeSet<Vec<(PointRef, VanishingSeq)>>) {
    use bnlimit_core::limit::DomainKind;
    let all: Vec<VanishingSeq> = VanishingSeq::all(t.r, t.d).collect();
    let maximal: Vec<VanishingSeq> = maximal_tail_sequences(t.r, t.d).into_iter().collect();
    let mut free: Vec<(PointRef, Vec<VanishingSeq>)> = Vec::new();
    let mut derived: Vec<(PointRef, PointRef)> = Vec::new();
    for d in &rep.domains {
        match &d.kind {
            DomainKind::Full => free.push((d.point, all.clone())),
            DomainKind::Dominated { .. } => {
                assert!(is_tail(curve, d.point.component));
                assert_eq!(d.size, maximal.len() as u64);
                free.push((d.point, maximal.clone()));
            }
            DomainKind::Complement { of } => derived.push((d.point, *of)),
        }
    }
    let mut idx = vec![0usize; free.len()];
    let mut candidates = 0u128;
    let mut survivors = BTreeSet::new();
    loop {
        candidates += 1;
        let mut w = AspectAssignment::new();
        for ((p, dom), &i) in free.iter().zip(&idx) {
            w.insert(*p, dom[i].clone());
        }
        for &(p, of) in &derived {
            let a = w.get(of).unwrap().complement();
            w.insert(p, a);
        }
        if limit::verify_witness(curve, t, &w).unwrap().verdict != WitnessVerdict::Rejected {
            survivors.insert(w.iter().map(|(p, a)| (p, a.clone())).collect());
        }
        let mut k = 0;
        loop {
            if k == idx.len() {
                return (candidates, survivors);
            }
            idx[k] += 1;
            if idx[k] < free[k].1.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// The pruned search against [`exhaustive_over_domains`].
pub fn search_matches_exhaustive(curve: &CompactCurve, t: SeriesType) -> Result<u128, String> {
    let opts = RefuteOptions { survivor_cap: usize::MAX, ..RefuteOptions::default() };
    let rep = Refuter::new(curve, t, opts).unwrap().run().unwrap();
    let (candidates, survivors) = exhaustive_over_domains(curve, t, &rep);
    if candidates != rep.candidates_examined {
        return Err(format!("{}: {} candidates enumerated, search reports {}", curve.name(), candidates, rep.candidates_examined));
    }
    if survivors != survivor_set(&rep) || survivors.len() as u128 != rep.survivor_count() {
        return Err(format!("{}: {} exhaustive survivors, search reports {}", curve.name(), survivors.len(), rep.survivor_count()));
    }
    Ok(candidates)
}
