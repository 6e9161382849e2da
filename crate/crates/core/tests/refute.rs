mod support;

use bnlimit_core::curves::Rule;
use bnlimit_core::limit::{self, AspectAssignment, RefuteOptions, Refuter};
use bnlimit_core::numerology::{self, SeriesType, VanishingSeq};
use proptest::prelude::*;

fn st(g: u32, r: u32, d: u32) -> SeriesType {
    SeriesType::new(g, r, d).unwrap()
}

#[test]
fn naive_search_matches_brute_force() {
    let cases = [
        (support::star(2, 1), 1, 3),
        (support::star(1, 2), 1, 3),
        (support::star(2, 2), 1, 3),
        (support::star(0, 3), 1, 3),
        (support::chain(1, 1, Some(Some(2))), 1, 3),
        (support::chain(1, 1, Some(Some(3))), 1, 3),
        (support::chain(1, 1, Some(None)), 2, 4),
        (support::elliptic_chain(Some(Some(2))), 1, 3),
        (support::elliptic_chain(None), 1, 2),
    ];
    for (curve, r, d) in cases {
        let t = st(curve.genus(), r, d);
        let naive = Refuter::new(&curve, t, RefuteOptions { pruning: false, ..RefuteOptions::default() })
            .unwrap()
            .run()
            .unwrap();
        assert_eq!(naive.survivor_count(), support::brute_force_survivors(&curve, t), "{} {t}", curve.name());
    }
}

fn reduction_cases() -> Vec<(bnlimit_core::curves::CompactCurve, u32, u32)> {
    let mut out = Vec::new();
    for d in 2..=6 {
        out.push((support::star(2, 2), 1, d));
        out.push((support::star(1, 3), 1, d));
        out.push((support::elliptic_chain(Some(Some(2))), 1, d));
        out.push((support::elliptic_chain(Some(Some(3))), 1, d));
        out.push((support::chain(2, 1, Some(Some(d))), 1, d));
    }
    for (order, d) in [(9, 12), (12, 12), (5, 9)] {
        out.push((support::chain(5, 5, Some(Some(order))), 1, d));
    }
    out
}

#[test]
fn pruned_search_matches_naive_search() {
    let mut with_survivors = 0;
    let mut reduced = 0;
    for (curve, r, d) in reduction_cases() {
        let t = st(curve.genus(), r, d);
        let (pruned, naive) = support::pruned_matches_naive(&curve, t).unwrap_or_else(|e| panic!("{t}: {e}"));
        with_survivors += usize::from(pruned > 0);
        reduced += usize::from(naive > pruned);
    }
    assert!(with_survivors >= 5 && reduced >= 5, "{with_survivors} cases with survivors, {reduced} reduced");
}

#[test]
fn accounting_identity() {
    for (curve, r, d) in reduction_cases() {
        for pruning in [true, false] {
            let t = st(curve.genus(), r, d);
            let rep = Refuter::new(&curve, t, RefuteOptions { pruning, ..RefuteOptions::default() })
                .unwrap()
                .run()
                .unwrap();
            let hits: u128 = rep.rule_hits.values().sum();
            assert_eq!(hits + rep.survivor_count(), rep.candidates_examined, "{} {t}", curve.name());
        }
    }
}

#[test]
fn ranges_merge_to_the_full_run() {
    let curve = support::chain(5, 5, Some(Some(9)));
    let t = st(11, 2, 9);
    let refuter = Refuter::new(&curve, t, RefuteOptions::default()).unwrap();
    let whole = refuter.run().unwrap();
    let n = refuter.first_domain_len();
    let parts = (0..4).map(|i| refuter.run_range(i * n / 4..(i + 1) * n / 4).unwrap()).collect();
    assert_eq!(refuter.merge(parts), whole);
}

#[test]
fn torsion_order_decides_the_pencil_on_a_chain() {
    // (0,d) at both bridge points needs d(p - q) ~ 0
    for order in 2..=7 {
        let curve = support::chain(2, 2, Some(Some(order)));
        let rep = limit::refute(&curve, st(5, 1, 4)).unwrap();
        let pencil_on_bridge = rep.survivors().iter().any(|s| {
            s.assignment.iter().all(|(_, a)| a.entries() == [0, 4])
        });
        assert_eq!(pencil_on_bridge, 4 % order == 0, "order {order}");
    }
}

#[test]
fn rule_keys_round_trip() {
    for r in Rule::ALL {
        assert_eq!(Rule::from_key(r.key()), Some(r));
    }
}

fn seq(r: u32, d: u32) -> impl Strategy<Value = VanishingSeq> {
    let all: Vec<VanishingSeq> = VanishingSeq::all(r, d).collect();
    (0..all.len()).prop_map(move |i| all[i].clone())
}

proptest! {
    /// rho(g,r,d) - sum of adjusted rho = node excess, for any data on a chain
    /// whose only marked points are the nodes.
    #[test]
    fn additivity_gap_is_node_excess(
        a in seq(2, 9), b in seq(2, 9), c in seq(2, 9), e in seq(2, 9)
    ) {
        let curve = support::chain(3, 4, Some(Some(3)));
        let t = st(8, 2, 9);
        let mut w = AspectAssignment::new();
        let [p1c, p1e, p2e, p2c] = [("C1", "p1"), ("E", "p1"), ("E", "p2"), ("C2", "p2")]
            .map(|(x, y)| curve.point_ref(x, y).unwrap());
        w.insert(p1c, a.clone());
        w.insert(p1e, b.clone());
        w.insert(p2e, c.clone());
        w.insert(p2c, e.clone());
        let rep = limit::verify_witness(&curve, t, &w).unwrap();
        let excess = |x: &VanishingSeq, y: &VanishingSeq| -> i64 {
            (0..=2).map(|i| i64::from(x.entries()[i] + y.entries()[2 - i]) - 9).sum()
        };
        prop_assert_eq!(rep.audit.lhs - rep.audit.rhs, excess(&a, &b) + excess(&c, &e));
        prop_assert_eq!(rep.refined, excess(&a, &b) == 0 && excess(&c, &e) == 0
            && rep.nodes.iter().all(|n| n.sums.iter().all(|&s| s == 9)));
        prop_assert_eq!(rep.audit.lhs, numerology::rho(t));
    }
}

#[test]
fn backtracking_matches_candidate_by_candidate_checks() {
    for (curve, r, d) in reduction_cases() {
        let t = st(curve.genus(), r, d);
        support::search_matches_exhaustive(&curve, t).unwrap_or_else(|e| panic!("{t}: {e}"));
    }
}
