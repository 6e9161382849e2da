//! The genus-23 audit: triples, classes, the limit-series computations on the
//! four boundary curves, the distinctness and support-equality argument, and
//! the slope comparisons.

use std::fmt::Write;

use bnlimit_core::curves::{CompactCurve, Rule};
use bnlimit_core::limit::{self, RefutationReport, RefuteOptions, WitnessReport, WitnessVerdict};
use bnlimit_core::modspace::{self, Q};
use bnlimit_core::numerology::{self, SeriesType};
use serde_json::{json, Value};

use crate::format::CurveFile;
use crate::render::{divisor, series, sub};
use crate::{fixtures, parallel};

const GENUS: u32 = 23;

pub struct Inputs {
    pub thm2: CurveFile,
    pub prop53: Option<CurveFile>,
    pub thm4: CurveFile,
    pub prop54: CurveFile,
    pub threads: usize,
}

impl Inputs {
    pub fn bundled() -> Self {
        Self {
            thm2: fixtures::parse("thm2"),
            prop53: Some(fixtures::parse("prop53")),
            thm4: fixtures::parse("thm4"),
            prop54: fixtures::parse("prop54"),
            threads: 1,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Check {
    pub id: String,
    pub pass: bool,
    pub detail: String,
}

pub struct Report {
    pub checks: Vec<Check>,
    pub text: String,
    pub json: Value,
}

impl Report {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

#[derive(Default)]
struct Builder {
    checks: Vec<Check>,
    text: String,
}

impl Builder {
    fn check(&mut self, id: impl Into<String>, pass: bool, detail: impl Into<String>) -> bool {
        self.checks.push(Check { id: id.into(), pass, detail: detail.into() });
        pass
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "MISMATCH"
    }
}

fn st(r: u32, d: u32) -> SeriesType {
    SeriesType::new(GENUS, r, d).expect("valid genus-23 series")
}

struct Curve {
    file: CurveFile,
    curve: CompactCurve,
}

impl Curve {
    fn new(file: &CurveFile) -> Result<Self, String> {
        let curve = file.to_curve().map_err(|e| format!("{}: {e}", file.name))?;
        if curve.genus() != GENUS {
            return Err(format!("{}: curve has genus {}, expected {GENUS}", file.name, curve.genus()));
        }
        Ok(Self { file: file.clone(), curve })
    }

    fn refute(&self, r: u32, d: u32, threads: usize) -> Result<RefutationReport, String> {
        parallel::refute(&self.curve, st(r, d), RefuteOptions::default(), threads)
            .map_err(|e| format!("{}: {e}", self.file.name))
    }

    fn verify(&self, witness: &str) -> Result<WitnessReport, String> {
        let (t, w) = self.file.witness(&self.curve, witness).map_err(|e| format!("{}: {e}", self.file.name))?;
        limit::verify_witness(&self.curve, t, &w).map_err(|e| format!("{}: {e}", self.file.name))
    }
}

fn verdict_word(v: WitnessVerdict) -> &'static str {
    match v {
        WitnessVerdict::Confirmed => "confirmed",
        WitnessVerdict::Consistent => "consistent",
        WitnessVerdict::Rejected => "rejected",
    }
}

fn rho_sum(rep: &WitnessReport) -> String {
    let parts: Vec<String> = rep.components.iter().map(|c| c.adjusted_rho.to_string()).collect();
    parts.join(" + ")
}

fn witness_line(name: &str, rep: &WitnessReport) -> String {
    let t = rep.target;
    format!(
        "{} witness `{name}`: {}, {}, additivity {} {} {}",
        series(t.r, t.d),
        verdict_word(rep.verdict),
        if rep.refined { "refined" } else { "crude" },
        rep.audit.lhs,
        if rep.audit.equality { "=" } else { ">=" },
        rho_sum(rep)
    )
}

fn refute_line(rep: &RefutationReport) -> String {
    let t = rep.target;
    if rep.is_refuted() {
        let n = rep.candidates_examined;
        format!("{}: no limit series ({n} candidate{}, all eliminated)", series(t.r, t.d), if n == 1 { "" } else { "s" })
    } else {
        format!("{}: {} surviving assignment(s) of {} candidates", series(t.r, t.d), rep.survivor_count(), rep.candidates_examined)
    }
}

fn hits_json(rep: &RefutationReport) -> Value {
    let m: serde_json::Map<String, Value> =
        rep.rule_hits.iter().map(|(r, n)| (r.key().to_string(), json!(u64::try_from(*n).unwrap_or(u64::MAX)))).collect();
    Value::Object(m)
}

fn q_json(x: Q) -> Value {
    json!(x.to_string())
}

pub fn run(inputs: &Inputs) -> Result<Report, String> {
    let mut b = Builder::default();
    let mut js = serde_json::Map::new();

    b.line(format!("Brill-Noether divisors on M{} and the Kodaira dimension audit", sub(GENUS)));
    b.line("");

    // 1. triples
    b.line("1. Divisorial triples (r, s, d): g + 1 = (r + 1)(s - 1), d = rs - 1, rho = -1");
    let triples = numerology::bn_divisor_triples(GENUS);
    let mut tj = Vec::new();
    for t in &triples {
        let s = t.series(GENUS);
        let res = numerology::residual(s).map_err(|e| e.to_string())?;
        b.line(format!(
            "   {:<10} {:<6} rho = {}  residual {}",
            format!("({},{},{})", t.r, t.s, t.d),
            series(t.r, t.d),
            numerology::rho(s),
            series(res.r, res.d)
        ));
        tj.push(json!({"r": t.r, "s": t.s, "d": t.d, "rho": numerology::rho(s), "residual": {"r": res.r, "d": res.d}}));
    }
    let got: Vec<(u32, u32, u32)> = triples.iter().map(|t| (t.r, t.s, t.d)).collect();
    let want = vec![(1, 13, 12), (2, 9, 17), (3, 7, 20), (5, 5, 24), (7, 4, 27), (11, 3, 32)];
    let all_div = triples.iter().all(|t| numerology::rho(t.series(GENUS)) == -1);
    b.check("triples", got == want && all_div, format!("{got:?}"));
    let pairs = numerology::residual_pairs(GENUS);
    let pair_txt: Vec<String> = pairs
        .iter()
        .map(|(a, c)| format!("{} = {{{}, {}}}", divisor(a.r, a.d), series(a.r, a.d), series(c.r, c.d)))
        .collect();
    b.line(format!("   Serre-dual pairs: {}", pair_txt.join(", ")));
    let pair_keys: Vec<((u32, u32), (u32, u32))> = pairs.iter().map(|(a, c)| ((a.r, a.d), (c.r, c.d))).collect();
    let pairs_ok = pair_keys == vec![((1, 12), (11, 32)), ((2, 17), (7, 27)), ((3, 20), (5, 24))];
    b.check("residual-pairs", pairs_ok, format!("{pair_keys:?}"));
    js.insert("triples".into(), json!(tj));
    b.line("");

    // 2. classes
    b.line("2. Divisor classes (boundary basis λ, δ₀, ..., δ₁₁)");
    let bn = modspace::bn_class(st(1, 12)).map_err(|e| e.to_string())?;
    let k = modspace::canonical_class(GENUS).map_err(|e| e.to_string())?;
    b.line(format!("   [M] = c·({bn}), c > 0 unknown, normalized to 1"));
    b.line(format!("   K   = {k}"));
    let mut decomp_ok = true;
    let mut dj = Vec::new();
    for (rep, _) in &pairs {
        let t = rep.series(GENUS);
        let class = modspace::bn_class(t).map_err(|e| e.to_string())?;
        decomp_ok &= class.same_coefficients(&bn);
        let dec = modspace::decompose_canonical(t).map_err(|e| e.to_string())?;
        let expected_c = |i: usize| -> Q {
            match i {
                0 => Q::from_integer(0),
                1 => Q::from_integer(8),
                _ => Q::new(i as i64 * (23 - i as i64) - 4, 2),
            }
        };
        let ok = dec.a == Q::new(1, 2)
            && dec.b == Q::from_integer(0)
            && dec.c.iter().enumerate().all(|(i, &c)| c == expected_c(i))
            && dec.reconstruct(&class).map(|x| x.same_coefficients(&k)).unwrap_or(false);
        decomp_ok &= ok;
        let cs: Vec<String> = dec.c.iter().enumerate().skip(1).map(|(i, c)| format!("c{}={c}", sub(i as u32))).collect();
        b.line(format!(
            "   K = a[{}] + bλ + Σ cᵢδᵢ:  a = {}, b = {}, c₀ = {}, {}",
            divisor(rep.r, rep.d),
            dec.a,
            dec.b,
            dec.c[0],
            cs.join(" ")
        ));
        dj.push(json!({
            "divisor": {"r": rep.r, "d": rep.d},
            "a": q_json(dec.a),
            "b": q_json(dec.b),
            "c": dec.c.iter().map(|&c| q_json(c)).collect::<Vec<_>>(),
        }));
    }
    b.line("   b = 0, so mK = mᵢ[Mᵢ] + E with one effective boundary class E for all three divisors");
    b.check("decomposition", decomp_ok, "a = 1/2, b = 0, c1 = 8, ci = (i(23-i)-4)/2");
    js.insert(
        "classes".into(),
        json!({"bn_class": bn.to_string(), "canonical": k.to_string(), "up_to_positive_scalar": true, "decompositions": dj}),
    );
    b.line("");

    // 3. limit linear series
    b.line("3. Limit linear series on curves of compact type");
    let threads = inputs.threads;
    let mut lj = Vec::new();

    let thm2 = Curve::new(&inputs.thm2)?;
    let w = thm2.verify("step2")?;
    let r3 = thm2.refute(3, 20, threads)?;
    let thm2_in_17 = w.verdict == WitnessVerdict::Confirmed && w.refined && w.audit.equality;
    let thm2_out_20 = r3.is_refuted();
    b.line(format!("   {} (chain C1 - E - C2, 9-torsion)", thm2.curve.name()));
    b.line(format!("     {}  [{}]", witness_line("step2", &w), mark(thm2_in_17)));
    b.line(format!("     {}  [{}]", refute_line(&r3), mark(thm2_out_20)));
    b.check("thm2.g2_17", thm2_in_17, verdict_word(w.verdict));
    b.check("thm2.g3_20", thm2_out_20, format!("{} survivors", r3.survivor_count()));
    lj.push(json!({"curve": thm2.curve.name(), "witness_g2_17": verdict_word(w.verdict), "g3_20_refuted": thm2_out_20,
                   "g3_20_candidates": u64::try_from(r3.candidates_examined).unwrap_or(u64::MAX), "g3_20_rule_hits": hits_json(&r3)}));

    let mut prop53_ok = None;
    match &inputs.prop53 {
        Some(file) => {
            let c = Curve::new(file)?;
            let w = c.verify("g2_17")?;
            let r = c.refute(3, 20, threads)?;
            let in17 = w.verdict != WitnessVerdict::Rejected && w.refined && w.audit.equality;
            let out20 = r.is_refuted();
            b.line(format!("   {} (C1 of genus 10 with elliptic tail at x, bridge E with 9-torsion, C2)", c.curve.name()));
            b.line(format!("     {}  [{}]", witness_line("g2_17", &w), mark(in17)));
            b.line(format!("     {}  [{}]", refute_line(&r), mark(out20)));
            b.check("prop53.g2_17", in17, verdict_word(w.verdict));
            b.check("prop53.g3_20", out20, format!("{} survivors", r.survivor_count()));
            prop53_ok = Some(in17 && out20);
            lj.push(json!({"curve": c.curve.name(), "witness_g2_17": verdict_word(w.verdict), "g3_20_refuted": out20,
                           "g3_20_rule_hits": hits_json(&r)}));
        }
        None => b.line("   prop53: skipped"),
    }

    let thm4 = Curve::new(&inputs.thm4)?;
    let w = thm4.verify("pencils")?;
    let r2 = thm4.refute(2, 17, threads)?;
    let r3 = thm4.refute(3, 20, threads)?;
    let thm4_in_12 = w.verdict == WitnessVerdict::Confirmed;
    let thm4_out_17 = r2.is_refuted();
    let thm4_out_20 = r3.is_refuted();
    b.line(format!("   {} (chain C1 - E - C2, 12-torsion)", thm4.curve.name()));
    b.line(format!("     {}  [{}]", witness_line("pencils", &w), mark(thm4_in_12)));
    b.line(format!("     {}  [{}]", refute_line(&r2), mark(thm4_out_17)));
    if !thm4_out_17 {
        b.line("     finding: the local rules leave the survivors above; no refutation is claimed");
    }
    b.line(format!("     {}  [{}]", refute_line(&r3), mark(thm4_out_20)));
    b.check("thm4.g1_12", thm4_in_12, verdict_word(w.verdict));
    b.check("thm4.g2_17", thm4_out_17, format!("{} survivors", r2.survivor_count()));
    b.check("thm4.g3_20", thm4_out_20, format!("{} survivors", r3.survivor_count()));
    lj.push(json!({"curve": thm4.curve.name(), "witness_g1_12": verdict_word(w.verdict),
                   "g2_17_refuted": thm4_out_17, "g2_17_survivors": u64::try_from(r2.survivor_count()).unwrap_or(u64::MAX),
                   "g3_20_refuted": thm4_out_20}));

    let prop54 = Curve::new(&inputs.prop54)?;
    let r1 = prop54.refute(1, 12, threads)?;
    let w15 = prop54.verify("g2_15")?;
    let w20 = prop54.verify("g3_20")?;
    let by_count = r1.rule_hits.get(&Rule::FactSheetCount).copied().unwrap_or(0) > 0;
    let p54_out_12 = r1.is_refuted() && by_count;
    let consistent = |w: &WitnessReport| w.verdict != WitnessVerdict::Rejected && w.refined && w.audit.equality;
    let p54_15 = consistent(&w15);
    let p54_20 = consistent(&w20);
    b.line(format!("   {} (plane septic of genus 15 with eight elliptic tails)", prop54.curve.name()));
    b.line(format!("     {}  [{}]", refute_line(&r1), mark(p54_out_12)));
    b.line(format!("     {}  [{}]", witness_line("g2_15", &w15), mark(p54_15)));
    b.line(format!("     {}  [{}]", witness_line("g3_20", &w20), mark(p54_20)));
    b.line("     the septic component is described by facts only, so its aspects are asserted, not proven");
    b.line("     base points: the g²₁₅ plus two base points is taken as the g²₁₇; that step is not checked");
    b.check("prop54.g1_12", p54_out_12, format!("{} survivors", r1.survivor_count()));
    b.check("prop54.g2_15", p54_15, verdict_word(w15.verdict));
    b.check("prop54.g3_20", p54_20, verdict_word(w20.verdict));
    lj.push(json!({"curve": prop54.curve.name(), "g1_12_refuted": r1.is_refuted(), "g1_12_rule_hits": hits_json(&r1),
                   "witness_g2_15": verdict_word(w15.verdict), "witness_g3_20": verdict_word(w20.verdict),
                   "audit_g2_15": [w15.audit.lhs, w15.audit.rhs], "audit_g3_20": [w20.audit.lhs, w20.audit.rhs]}));
    js.insert("limits".into(), json!(lj));
    b.line("   smoothability of every witness above: asserted per Regeneration Theorem, not verified");
    b.line("");

    // 4. the argument
    let (m1, m2, m3) = (divisor(1, 12), divisor(2, 17), divisor(3, 20));
    b.line("4. Distinctness and the support equalities");
    let a23 = thm2_out_20 && thm2_in_17 && prop53_ok.unwrap_or(true);
    let a12 = thm4_in_12 && thm4_out_17;
    let a13 = thm4_in_12 && thm4_out_20;
    b.line(format!("   (α) {m2} ≠ {m3}: {} lies over {m2} and not over {m3}  [{}]", thm2.curve.name(), mark(a23)));
    b.line(format!("       {m1} ≠ {m2}: {} lies over {m1} and not over {m2}  [{}]", thm4.curve.name(), mark(a12)));
    b.line(format!("       {m1} ≠ {m3}: {} lies over {m1} and not over {m3}  [{}]", thm4.curve.name(), mark(a13)));
    let beta = p54_out_12 && p54_15 && p54_20;
    b.line(format!(
        "   (β) {} lies over {m2} and {m3} but not over {m1}  [{}]",
        prop54.curve.name(),
        mark(beta)
    ));
    b.line(format!("   If the Kodaira image were a curve, then supp {m1}∩{m2} = supp {m2}∩{m3} = supp {m3}∩{m1}."));
    b.line(format!(
        "   A curve in {m2}∩{m3} outside {m1} lies in the middle set and in neither outer set, against both equalities."
    ));
    let contradiction = a23 && a12 && a13 && beta;
    b.line(format!("   support equalities contradicted: {}", if contradiction { "yes" } else { "NO" }));
    b.line("   (boundary curves stand in for nearby smooth curves: asserted per Regeneration Theorem, not verified)");
    b.check("alpha", a23 && a12 && a13, "pairwise distinct");
    b.check("beta", beta, "curve in exactly two divisors");
    js.insert(
        "argument".into(),
        json!({
            "alpha": {"M2_17_vs_M3_20": a23, "M1_12_vs_M2_17": a12, "M1_12_vs_M3_20": a13},
            "beta": beta,
            "support_equalities_contradicted": contradiction,
            "smoothability": "asserted per Regeneration Theorem, not verified",
        }),
    );
    b.line("");

    // 5. slopes
    b.line("5. Slopes");
    let bound = modspace::slope_bound(GENUS).map_err(|e| e.to_string())?;
    let s_bn = modspace::slope_of_class(&bn);
    let slope_ok = s_bn == Some(bound) && bound == Q::new(13, 2);
    b.line(format!("   s([M]) = {} = 6 + 12/(g+1) = {bound}  [{}]", s_bn.map_or("undefined".into(), |s| s.to_string()), mark(slope_ok)));
    b.check("slope.bn", slope_ok, format!("{bound}"));
    let mut gonal_ok = true;
    let mut gj = Vec::new();
    for k in 2..=4 {
        let s = modspace::gonal_family_slope(GENUS, k).map_err(|e| e.to_string())?;
        gonal_ok &= s > bound;
        b.line(format!("   {k}-gonal locus: {s}  > 13/2: {}", s > bound));
        gj.push(json!({"k": k, "slope": q_json(s), "exceeds": s > bound}));
    }
    b.check("slope.gonal", gonal_ok, "all gonal slopes exceed 13/2");
    b.line("   plane pencils (λ = 23):  d   f   b   δ   δ/λ   > 13/2");
    let mut pj = Vec::new();
    let mut pencil_ok = true;
    for d in 9..=13 {
        match modspace::plane_pencil_slope(d) {
            Ok(p) => {
                pencil_ok &= p.exceeds_bound == (d <= 10);
                b.line(format!(
                    "                           {:>2}  {:>2}  {:>2}  {:>3}  {}  {}",
                    d, p.f, p.b, p.delta, p.slope, p.exceeds_bound
                ));
                pj.push(json!({"d": d, "f": p.f, "b": p.b, "delta": p.delta, "slope": q_json(p.slope), "exceeds": p.exceeds_bound}));
            }
            Err(e) => {
                b.line(format!("                           {d:>2}  infeasible ({e})"));
                pj.push(json!({"d": d, "infeasible": true}));
            }
        }
    }
    b.check("slope.plane-pencil", pencil_ok, "exceeds 13/2 exactly for feasible d <= 10");
    b.line("   boundary multiplicities:  i   c_i   on Δᵢ   bound   coincide");
    let table = modspace::boundary_multiplicity_table().map_err(|e| e.to_string())?;
    let mut bj = Vec::new();
    for row in &table {
        b.line(format!(
            "                            {:>2}  {:>5}  {:>5}   {:>5}   {}",
            row.i,
            row.coefficient.to_string(),
            row.multiplicity.to_string(),
            row.bound.map_or("-".into(), |x| x.to_string()),
            row.coincide
        ));
        bj.push(json!({"i": row.i, "coefficient": q_json(row.coefficient), "multiplicity": q_json(row.multiplicity),
                       "bound": row.bound.map(q_json), "coincide": row.coincide}));
    }
    let table_ok = table[0].coincide
        && table[1].coincide
        && table[0].multiplicity == Q::from_integer(16)
        && table[1].multiplicity == Q::from_integer(19);
    b.check("slope.boundary", table_ok, "coincide at i = 1 (16) and i = 2 (19)");
    js.insert(
        "slopes".into(),
        json!({"bound": q_json(bound), "bn": s_bn.map(q_json), "gonal": gj, "plane_pencils": pj, "boundary": bj}),
    );
    b.line("");

    let pass = b.checks.iter().all(|c| c.pass);
    let banner = format!("κ(M{}) ≥ 2 audit: {}", sub(GENUS), if pass { "PASS" } else { "FAIL" });
    b.line(&banner);
    b.line("   (a consequence of the checks above, not an independent verification)");
    if !pass {
        for c in b.checks.iter().filter(|c| !c.pass) {
            let _ = writeln!(b.text, "   failed: {} ({})", c.id, c.detail);
        }
    }
    js.insert(
        "checks".into(),
        json!(b.checks.iter().map(|c| json!({"id": c.id, "pass": c.pass, "detail": c.detail})).collect::<Vec<_>>()),
    );
    js.insert("banner".into(), json!(banner));
    js.insert("pass".into(), json!(pass));
    Ok(Report { checks: b.checks, text: b.text, json: Value::Object(js) })
}
