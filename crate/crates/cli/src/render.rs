//! Text and JSON renderings of search and witness reports.

use std::fmt::Write;

use bnlimit_core::curves::{CompactCurve, Outcome};
use bnlimit_core::limit::{Audit, DomainKind, RefutationReport, Verdict, WitnessReport};
use bnlimit_core::numerology::{self, SeriesType, VanishingSeq};
use serde_json::{json, Value};

const SUP: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
const SUB: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];

fn digits(n: u32, table: &[char; 10]) -> String {
    n.to_string().bytes().map(|b| table[(b - b'0') as usize]).collect()
}

/// `g²₁₇`
pub fn series(r: u32, d: u32) -> String {
    format!("g{}{}", digits(r, &SUP), digits(d, &SUB))
}

/// `M²₁₇`
pub fn divisor(r: u32, d: u32) -> String {
    format!("M{}{}", digits(r, &SUP), digits(d, &SUB))
}

pub fn sub(n: u32) -> String {
    digits(n, &SUB)
}

fn seq_json(a: &VanishingSeq) -> Value {
    json!(a.entries())
}

fn outcome_json(o: Outcome) -> Value {
    match o {
        Outcome::Pass { exact } => json!({"result": "pass", "exact": exact}),
        Outcome::Fail(rule) => json!({"result": "fail", "rule": rule.key()}),
        Outcome::Unknown => json!({"result": "unknown"}),
    }
}

fn audit_json(a: &Audit) -> Value {
    json!({"lhs": a.lhs, "rhs": a.rhs, "satisfied": a.satisfied, "equality": a.equality})
}

fn target_json(t: SeriesType) -> Value {
    json!({"genus": t.genus, "r": t.r, "d": t.d, "rho": numerology::rho(t)})
}

fn big(n: u128) -> Value {
    match u64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

pub fn refutation_text(curve: &CompactCurve, rep: &RefutationReport) -> String {
    let t = rep.target;
    let mut s = String::new();
    let _ = writeln!(s, "refute {} on {} (genus {}, rho = {})", series(t.r, t.d), rep.curve, t.genus, numerology::rho(t));
    let mode = if rep.pruning { "reduced" } else { "naive" };
    let _ = writeln!(s, "  search: {mode}, {} candidates", rep.candidates_examined);
    let _ = writeln!(s, "  domains:");
    for d in &rep.domains {
        let how = match &d.kind {
            DomainKind::Full => format!("all {} sequences", d.size),
            DomainKind::Dominated { infeasible, dominated } => {
                format!("{} maximal ({} locally infeasible, {} dominated)", d.size, infeasible, dominated)
            }
            DomainKind::Complement { of } => format!("complement of {}", curve.point_label(*of)),
        };
        let _ = writeln!(s, "    {:<8} {how}", d.label);
    }
    if !rep.rule_hits.is_empty() {
        let _ = writeln!(s, "  eliminated by rule:");
        for (rule, n) in &rep.rule_hits {
            let _ = writeln!(s, "    {:<30} {n}", rule.key());
        }
    }
    match &rep.verdict {
        Verdict::Refuted => {
            let _ = writeln!(s, "  verdict: refuted (no limit {} on {})", series(t.r, t.d), rep.curve);
        }
        Verdict::Survivors { total, listed } => {
            let _ = writeln!(s, "  verdict: {total} surviving assignment(s)");
            for (i, sv) in listed.iter().enumerate() {
                let parts: Vec<String> =
                    sv.assignment.iter().map(|(p, a)| format!("{}={a}", curve.point_label(p))).collect();
                let flag = if sv.unconfirmed { "  [unconfirmed]" } else { "" };
                let _ = writeln!(s, "    #{:<3} {}{flag}", i + 1, parts.join(" "));
            }
            if (listed.len() as u128) < *total {
                let _ = writeln!(s, "    ... {} more not listed", total - listed.len() as u128);
            }
        }
    }
    s
}

pub fn refutation_json(curve: &CompactCurve, rep: &RefutationReport) -> Value {
    let domains: Vec<Value> = rep
        .domains
        .iter()
        .map(|d| {
            let kind = match &d.kind {
                DomainKind::Full => json!({"kind": "full"}),
                DomainKind::Dominated { infeasible, dominated } => {
                    json!({"kind": "dominated", "infeasible": infeasible, "dominated": dominated})
                }
                DomainKind::Complement { of } => json!({"kind": "complement", "of": curve.point_label(*of)}),
            };
            json!({"point": d.label, "size": d.size, "domain": kind})
        })
        .collect();
    let hits: serde_json::Map<String, Value> = rep.rule_hits.iter().map(|(r, n)| (r.key().to_string(), big(*n))).collect();
    let survivors: Vec<Value> = rep
        .survivors()
        .iter()
        .map(|sv| {
            let a: serde_json::Map<String, Value> =
                sv.assignment.iter().map(|(p, a)| (curve.point_label(p), seq_json(a))).collect();
            json!({"aspects": a, "unconfirmed": sv.unconfirmed})
        })
        .collect();
    json!({
        "target": target_json(rep.target),
        "curve": rep.curve,
        "pruning": rep.pruning,
        "candidates_examined": big(rep.candidates_examined),
        "domains": domains,
        "rule_hits": hits,
        "verdict": if rep.is_refuted() { "refuted" } else { "survivors" },
        "survivor_count": big(rep.survivor_count()),
        "survivors": survivors,
    })
}

pub fn witness_text(curve: &CompactCurve, name: &str, rep: &WitnessReport) -> String {
    let t = rep.target;
    let mut s = String::new();
    let _ = writeln!(s, "verify {} witness `{name}` on {} (genus {})", series(t.r, t.d), curve.name(), t.genus);
    let _ = writeln!(s, "  nodes:");
    for n in &rep.nodes {
        let sums: Vec<String> = n.sums.iter().map(u32::to_string).collect();
        let _ = writeln!(
            s,
            "    {} ~ {}  sums ({})  {}",
            curve.point_label(n.sides.0),
            curve.point_label(n.sides.1),
            sums.join(","),
            n.status
        );
    }
    let _ = writeln!(s, "  components:");
    for c in &rep.components {
        let comp = curve.component(c.component);
        let _ = writeln!(s, "    {:<4} genus {:<2}  adjusted rho {:>3}  {}", comp.id, comp.genus, c.adjusted_rho, c.outcome);
    }
    let rhos: Vec<String> = rep.components.iter().map(|c| c.adjusted_rho.to_string()).collect();
    let rel = if rep.audit.equality { "equality" } else if rep.audit.satisfied { "strict" } else { "VIOLATED" };
    let _ = writeln!(
        s,
        "  additivity: rho({},{},{}) = {} >= {} = {} ({rel})",
        t.genus,
        t.r,
        t.d,
        rep.audit.lhs,
        rhos.join(" + "),
        rep.audit.rhs
    );
    let _ = writeln!(s, "  refined: {}", if rep.refined { "yes" } else { "no" });
    let _ = writeln!(s, "  verdict: {}", rep.verdict);
    s
}

pub fn witness_json(curve: &CompactCurve, name: &str, rep: &WitnessReport) -> Value {
    let nodes: Vec<Value> = rep
        .nodes
        .iter()
        .map(|n| {
            json!({
                "sides": [curve.point_label(n.sides.0), curve.point_label(n.sides.1)],
                "sums": n.sums,
                "status": n.status.to_string(),
            })
        })
        .collect();
    let comps: Vec<Value> = rep
        .components
        .iter()
        .map(|c| {
            let mut o = outcome_json(c.outcome);
            o["component"] = json!(curve.component(c.component).id);
            o["adjusted_rho"] = json!(c.adjusted_rho);
            o
        })
        .collect();
    let verdict = match rep.verdict {
        bnlimit_core::limit::WitnessVerdict::Confirmed => "confirmed",
        bnlimit_core::limit::WitnessVerdict::Consistent => "consistent",
        bnlimit_core::limit::WitnessVerdict::Rejected => "rejected",
    };
    json!({
        "target": target_json(rep.target),
        "curve": curve.name(),
        "witness": name,
        "nodes": nodes,
        "components": comps,
        "audit": audit_json(&rep.audit),
        "refined": rep.refined,
        "verdict": verdict,
    })
}
