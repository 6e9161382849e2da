//! Argument parsing and command dispatch.
//!
//! Exit status: 0 on success, 1 when a result contradicts `--expect` (or the
//! genus-23 audit fails), 2 on invalid input.

use std::process::ExitCode;
use std::str::FromStr;

use bnlimit_core::curves::{self, Outcome};
use bnlimit_core::limit::RefuteOptions;
use bnlimit_core::modspace;
use bnlimit_core::numerology::{self, RamificationSeq, SeriesType};
use bnlimit_core::schubert::{self, CohomologyClass, Partition, Rect, SchubertCache};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::{fixtures, g23, parallel, render};

#[derive(Debug, Parser)]
#[command(name = "bnlimit", version, about = "Brill-Noether numerology, Schubert calculus and limit linear series")]
pub struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Brill-Noether number rho(g, r, d).
    Rho { g: u32, r: u32, d: u32 },
    /// Divisorial triples (rho = -1) in genus g and their Serre-dual pairing.
    Triples { g: u32 },
    /// Existence of a g^r_d on a general pointed curve with given ramification.
    Exist {
        g: u32,
        r: u32,
        d: u32,
        /// Ramification sequence at one point, e.g. `0,1,1`. Repeatable.
        #[arg(long = "alpha")]
        alpha: Vec<Seq>,
        /// Number of additional cusp points.
        #[arg(long, default_value_t = 0)]
        cusps: u32,
        #[arg(long)]
        expect: Option<YesNo>,
    },
    /// Schubert calculus in G(r+1, d+1).
    #[command(subcommand)]
    Schubert(SchubertCmd),
    /// Divisor classes.
    #[command(subcommand)]
    Class(ClassCmd),
    /// Write K as a·`[M]` + b·lambda + sum c_i delta_i.
    Decompose { g: u32, r: u32, d: u32 },
    /// Slope computations.
    #[command(subcommand)]
    Slope(SlopeCmd),
    /// Limit linear series on curves of compact type.
    #[command(subcommand)]
    Limit(LimitCmd),
    /// Assembled audits.
    #[command(subcommand)]
    Report(ReportCmd),
    /// Bundled curve descriptions.
    #[command(subcommand)]
    Fixtures(FixturesCmd),
}

#[derive(Debug, Subcommand)]
pub enum SchubertCmd {
    /// Product of Schubert classes, partitions written as `2,1` (empty: `""`).
    Product {
        #[arg(long)]
        rows: u32,
        #[arg(long)]
        cols: u32,
        parts: Vec<Seq>,
    },
    /// Power of the cusp class sigma_(1,...,1).
    CuspPower {
        t: u32,
        #[arg(long)]
        rows: u32,
        #[arg(long)]
        cols: u32,
    },
    /// Whether the Schubert product with g cusp classes is nonzero.
    Bn {
        g: u32,
        r: u32,
        d: u32,
        #[arg(long = "alpha")]
        alpha: Vec<Seq>,
    },
}

#[derive(Debug, Subcommand)]
pub enum ClassCmd {
    /// Class of the Brill-Noether divisor of g^r_d's.
    Bn { g: u32, r: u32, d: u32 },
    /// Canonical class of the moduli space of stable curves.
    Canonical { g: u32 },
}

#[derive(Debug, Subcommand)]
pub enum SlopeCmd {
    /// Slope of the Brill-Noether divisor.
    Class { g: u32, r: u32, d: u32 },
    /// 6 + 12/(g+1).
    Bound { g: u32 },
    /// Slope of the k-gonal family.
    Gonal { g: u32, k: u32 },
    /// Slope of a pencil of plane curves of degree d in genus 23.
    PlanePencil { d: u32 },
    /// Genus-23 boundary multiplicities against known bounds.
    Table,
}

#[derive(Debug, Subcommand)]
pub enum LimitCmd {
    /// Search for a limit g^r_d on the curve.
    Refute {
        /// Curve description path, or the name of a bundled fixture.
        file: String,
        r: u32,
        d: u32,
        #[arg(long)]
        expect: Option<Expect>,
        /// Survivors listed in the report.
        #[arg(long, default_value_t = 100)]
        cap: usize,
        #[arg(long)]
        threads: Option<usize>,
        /// Enumerate every node sequence independently.
        #[arg(long)]
        naive: bool,
    },
    /// Check a named witness from the curve description.
    Verify {
        file: String,
        /// Optional; must match the witness's series.
        r: Option<u32>,
        d: Option<u32>,
        #[arg(long)]
        witness: String,
        #[arg(long)]
        expect: Option<ExpectWitness>,
    },
}

#[derive(Debug, Subcommand)]
pub enum ReportCmd {
    /// Genus-23 audit over the four bundled boundary curves.
    G23 {
        #[arg(long)]
        thm2: Option<String>,
        #[arg(long)]
        prop53: Option<String>,
        #[arg(long)]
        thm4: Option<String>,
        #[arg(long)]
        prop54: Option<String>,
        #[arg(long)]
        skip_prop53: bool,
        #[arg(long)]
        threads: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum FixturesCmd {
    List,
    Show { name: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum YesNo {
    Yes,
    No,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Expect {
    Refuted,
    Survivors,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExpectWitness {
    Confirmed,
    Consistent,
    Rejected,
}

/// A comma separated list of integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Seq(pub Vec<u32>);

impl FromStr for Seq {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.trim().is_empty() {
            return Ok(Seq(Vec::new()));
        }
        s.split(',')
            .map(|x| x.trim().parse::<u32>().map_err(|e| format!("`{x}`: {e}")))
            .collect::<Result<_, _>>()
            .map(Seq)
    }
}

/// What a command produced.
pub struct Output {
    pub text: String,
    pub json: Value,
    /// False when the result contradicts an expectation.
    pub ok: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Self { text, json, ok: true }
    }
}

type Res<T> = Result<T, String>;

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn series_type(g: u32, r: u32, d: u32) -> Res<SeriesType> {
    SeriesType::new(g, r, d).map_err(err)
}

fn rams(alpha: &[Seq], t: SeriesType) -> Res<Vec<RamificationSeq>> {
    alpha.iter().map(|a| RamificationSeq::new(a.0.clone(), t.d).map_err(err)).collect()
}

fn threads(n: Option<usize>) -> usize {
    n.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn class_text(c: &modspace::DivisorClass) -> String {
    if c.up_to_positive_scalar() {
        format!("{c}  (up to a positive scalar)")
    } else {
        c.to_string()
    }
}

pub fn execute(cli: &Cli) -> Res<Output> {
    match &cli.command {
        Command::Rho { g, r, d } => {
            let t = series_type(*g, *r, *d)?;
            let rho = numerology::rho(t);
            Ok(Output::ok(format!("rho({g},{r},{d}) = {rho}\n"), json!({"genus": g, "r": r, "d": d, "rho": rho})))
        }
        Command::Triples { g } => {
            let mut text = String::new();
            let mut rows = Vec::new();
            for t in numerology::bn_divisor_triples(*g) {
                let res = numerology::residual(t.series(*g)).map_err(err)?;
                text.push_str(&format!("({},{},{})  {}  residual {}\n", t.r, t.s, t.d, render::series(t.r, t.d), render::series(res.r, res.d)));
                rows.push(json!({"r": t.r, "s": t.s, "d": t.d, "residual": {"r": res.r, "d": res.d}}));
            }
            let pairs: Vec<Value> = numerology::residual_pairs(*g)
                .iter()
                .map(|(a, b)| {
                    text.push_str(&format!("pair {} = {{{}, {}}}\n", render::divisor(a.r, a.d), render::series(a.r, a.d), render::series(b.r, b.d)));
                    json!([[a.r, a.d], [b.r, b.d]])
                })
                .collect();
            Ok(Output::ok(text, json!({"genus": g, "triples": rows, "pairs": pairs})))
        }
        Command::Exist { g, r, d, alpha, cusps, expect } => {
            let t = series_type(*g, *r, *d)?;
            let mut rs = rams(alpha, t)?;
            for _ in 0..*cusps {
                rs.push(RamificationSeq::cusp(t.r, t.d).map_err(err)?);
            }
            let outcome = curves::general_pointed_check(*g, t, &rs, &mut SchubertCache::default()).map_err(err)?;
            let exists = matches!(outcome, Outcome::Pass { .. });
            let rule = match outcome {
                Outcome::Fail(rule) => Some(rule.key()),
                _ => None,
            };
            let text = match rule {
                Some(rule) => format!("{t}: does not exist [{rule}]\n"),
                None => format!("{t}: exists\n"),
            };
            let ok = expect.is_none_or(|e| (e == YesNo::Yes) == exists);
            Ok(Output { text, json: json!({"genus": g, "r": r, "d": d, "exists": exists, "rule": rule}), ok })
        }
        Command::Schubert(cmd) => schubert_cmd(cmd),
        Command::Class(ClassCmd::Bn { g, r, d }) => {
            let c = modspace::bn_class(series_type(*g, *r, *d)?).map_err(err)?;
            Ok(Output::ok(format!("{}\n", class_text(&c)), json!({"class": c.to_string(), "up_to_positive_scalar": true})))
        }
        Command::Class(ClassCmd::Canonical { g }) => {
            let c = modspace::canonical_class(*g).map_err(err)?;
            Ok(Output::ok(format!("{c}\n"), json!({"class": c.to_string()})))
        }
        Command::Decompose { g, r, d } => {
            let dec = modspace::decompose_canonical(series_type(*g, *r, *d)?).map_err(err)?;
            let cs: Vec<String> = dec.c.iter().map(ToString::to_string).collect();
            let text = format!("a = {}\nb = {}\nc = ({})\n", dec.a, dec.b, cs.join(", "));
            Ok(Output::ok(text, json!({"genus": g, "a": dec.a.to_string(), "b": dec.b.to_string(), "c": cs})))
        }
        Command::Slope(cmd) => slope_cmd(cmd),
        Command::Limit(cmd) => limit_cmd(cmd),
        Command::Report(ReportCmd::G23 { thm2, prop53, thm4, prop54, skip_prop53, threads: n }) => {
            let load = |o: &Option<String>, name: &str| -> Res<_> {
                match o {
                    Some(p) => fixtures::load(p).map_err(err),
                    None => Ok(fixtures::parse(name)),
                }
            };
            let inputs = g23::Inputs {
                thm2: load(thm2, "thm2")?,
                prop53: if *skip_prop53 { None } else { Some(load(prop53, "prop53")?) },
                thm4: load(thm4, "thm4")?,
                prop54: load(prop54, "prop54")?,
                threads: threads(*n),
            };
            let rep = g23::run(&inputs)?;
            let ok = rep.pass();
            Ok(Output { text: rep.text, json: rep.json, ok })
        }
        Command::Fixtures(FixturesCmd::List) => {
            let names: Vec<&str> = fixtures::ALL.iter().map(|f| f.name).collect();
            Ok(Output::ok(format!("{}\n", names.join("\n")), json!(names)))
        }
        Command::Fixtures(FixturesCmd::Show { name }) => {
            let f = fixtures::get(name).ok_or_else(|| format!("no bundled fixture `{name}`"))?;
            let v: Value = serde_json::from_str(f.text).map_err(err)?;
            Ok(Output::ok(f.text.to_string(), v))
        }
    }
}

fn partition(s: &Seq, rect: Rect) -> Res<Partition> {
    let p = Partition::new(s.0.clone()).map_err(err)?;
    if !p.fits(rect) {
        return Err(format!("partition {p} does not fit in {}x{}", rect.rows, rect.cols));
    }
    Ok(p)
}

fn class_json(c: &CohomologyClass) -> Value {
    let terms: Vec<Value> = c.terms().map(|(p, n)| json!({"partition": p.parts(), "coefficient": n.to_string()})).collect();
    json!({"rows": c.rect().rows, "cols": c.rect().cols, "terms": terms})
}

fn schubert_cmd(cmd: &SchubertCmd) -> Res<Output> {
    match cmd {
        SchubertCmd::Product { rows, cols, parts } => {
            let rect = Rect::new(*rows, *cols);
            let mut acc = CohomologyClass::identity(rect);
            for s in parts {
                let p = CohomologyClass::schubert(rect, partition(s, rect)?).map_err(err)?;
                acc = schubert::lr_product(&acc, &p).map_err(err)?;
            }
            Ok(Output::ok(format!("{acc}\n"), class_json(&acc)))
        }
        SchubertCmd::CuspPower { t, rows, cols } => {
            let c = schubert::cusp_class_power(*t, Rect::new(*rows, *cols)).map_err(err)?;
            Ok(Output::ok(format!("{c}\n"), class_json(&c)))
        }
        SchubertCmd::Bn { g, r, d, alpha } => {
            let t = series_type(*g, *r, *d)?;
            let nonzero = schubert::bn_condition(t, &rams(alpha, t)?).map_err(err)?;
            Ok(Output::ok(format!("{}\n", if nonzero { "nonzero" } else { "zero" }), json!({"nonzero": nonzero})))
        }
    }
}

fn slope_cmd(cmd: &SlopeCmd) -> Res<Output> {
    match cmd {
        SlopeCmd::Class { g, r, d } => {
            let c = modspace::bn_class(series_type(*g, *r, *d)?).map_err(err)?;
            let s = modspace::slope_of_class(&c).ok_or("slope undefined")?;
            Ok(Output::ok(format!("{s}\n"), json!({"slope": s.to_string()})))
        }
        SlopeCmd::Bound { g } => {
            let s = modspace::slope_bound(*g).map_err(err)?;
            Ok(Output::ok(format!("{s}\n"), json!({"slope": s.to_string()})))
        }
        SlopeCmd::Gonal { g, k } => {
            let s = modspace::gonal_family_slope(*g, *k).map_err(err)?;
            Ok(Output::ok(format!("{s}\n"), json!({"slope": s.to_string()})))
        }
        SlopeCmd::PlanePencil { d } => {
            let p = modspace::plane_pencil_slope(*d).map_err(err)?;
            let text = format!(
                "d = {}  f = {}  b = {}  lambda = {}  delta = {}  slope = {}  exceeds 13/2: {}\n",
                p.d, p.f, p.b, p.lambda, p.delta, p.slope, p.exceeds_bound
            );
            let v = json!({"d": p.d, "f": p.f, "b": p.b, "lambda": p.lambda, "delta": p.delta,
                           "slope": p.slope.to_string(), "exceeds_bound": p.exceeds_bound});
            Ok(Output::ok(text, v))
        }
        SlopeCmd::Table => {
            let rows = modspace::boundary_multiplicity_table().map_err(err)?;
            let mut text = String::from(" i  coefficient  multiplicity  bound  coincide\n");
            let mut js = Vec::new();
            for row in rows {
                let bound = row.bound.map_or("-".to_string(), |b| b.to_string());
                text.push_str(&format!(
                    "{:>2}  {:>11}  {:>12}  {:>5}  {}\n",
                    row.i,
                    row.coefficient.to_string(),
                    row.multiplicity.to_string(),
                    bound,
                    row.coincide
                ));
                js.push(json!({"i": row.i, "coefficient": row.coefficient.to_string(),
                               "multiplicity": row.multiplicity.to_string(),
                               "bound": row.bound.map(|b| b.to_string()), "coincide": row.coincide}));
            }
            Ok(Output::ok(text, json!(js)))
        }
    }
}

fn limit_cmd(cmd: &LimitCmd) -> Res<Output> {
    match cmd {
        LimitCmd::Refute { file, r, d, expect, cap, threads: n, naive } => {
            let cf = fixtures::load(file).map_err(err)?;
            let curve = cf.to_curve().map_err(err)?;
            let t = series_type(curve.genus(), *r, *d)?;
            let opts = RefuteOptions { pruning: !naive, survivor_cap: *cap, ..RefuteOptions::default() };
            let rep = parallel::refute(&curve, t, opts, threads(*n)).map_err(err)?;
            let ok = match expect {
                None => true,
                Some(Expect::Refuted) => rep.is_refuted(),
                Some(Expect::Survivors) => !rep.is_refuted(),
            };
            Ok(Output { text: render::refutation_text(&curve, &rep), json: render::refutation_json(&curve, &rep), ok })
        }
        LimitCmd::Verify { file, r, d, witness, expect } => {
            let cf = fixtures::load(file).map_err(err)?;
            let curve = cf.to_curve().map_err(err)?;
            let (t, w) = cf.witness(&curve, witness).map_err(err)?;
            if r.is_some_and(|r| r != t.r) || d.is_some_and(|d| d != t.d) {
                return Err(format!("witness `{witness}` is a {}, not the requested series", render::series(t.r, t.d)));
            }
            let rep = bnlimit_core::limit::verify_witness(&curve, t, &w).map_err(err)?;
            use bnlimit_core::limit::WitnessVerdict as V;
            let ok = match expect {
                None => true,
                Some(ExpectWitness::Confirmed) => rep.verdict == V::Confirmed,
                Some(ExpectWitness::Consistent) => rep.verdict == V::Consistent,
                Some(ExpectWitness::Rejected) => rep.verdict == V::Rejected,
            };
            Ok(Output {
                text: render::witness_text(&curve, witness, &rep),
                json: render::witness_json(&curve, witness, &rep),
                ok,
            })
        }
    }
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("JSON values serialize"));
            } else {
                print!("{}", out.text);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                if !cli.json {
                    eprintln!("bnlimit: result does not match expectation");
                }
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("bnlimit: {e}");
            ExitCode::from(2)
        }
    }
}
