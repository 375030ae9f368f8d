use std::fmt::Write as _;

use alcove::affine::{beta_sequence, format_ext_word, length_ext, parse_ext_word, translation_word, word_element};
use alcove::lattice::parse_type;
use alcove::macdonald::{e_infinity, e_zero, weyl_character};
use alcove::paths::{paths_to_csv, paths_to_json, PathProblem};
use alcove::poly::LaurentPoly;
use alcove::verify::{self, SuiteReport};
use alcove::weyl::{format_word, parse_word};
use alcove::{Error, ExtAffineElt, QuantumBruhatGraph, RootDatum, Weight, WeylElt};
use anyhow::Result;
use serde_json::json;

use crate::cache::GraphCache;
use crate::{Common, Format, IdentityFailure, Spec, Suite};

pub struct Output {
    pub text: String,
    pub failure: Option<IdentityFailure>,
}

impl From<String> for Output {
    fn from(text: String) -> Output {
        Output { text, failure: None }
    }
}

pub struct Context {
    pub graph: QuantumBruhatGraph,
    pub format: Format,
    pub workers: usize,
}

impl Context {
    pub fn new(common: &Common, cache: &GraphCache) -> Result<Context> {
        let (family, rank) = parse_type(&common.cartan)?;
        let datum = RootDatum::build(family, rank)?;
        Ok(Context {
            graph: cache.load(datum, common.cap)?,
            format: common.format,
            workers: common.workers,
        })
    }

    fn datum(&self) -> &RootDatum {
        self.graph.datum()
    }

    fn weight(&self, s: &str) -> Result<Weight> {
        let w = Weight::parse(s)?;
        if w.rank() != self.datum().rank() {
            return Err(Error::RankMismatch {
                expected: self.datum().rank(),
                got: w.rank(),
            }
            .into());
        }
        Ok(w)
    }

    fn sigma(&self, s: &str) -> Result<WeylElt> {
        let d = self.datum();
        Ok(WeylElt::from_word(d, &parse_word(s, d.rank())?)?)
    }

    fn word_of(&self, w: &WeylElt) -> String {
        format_word(&w.reduced_word(self.datum()))
    }

    fn only(&self, allowed: &[Format], cmd: &str) -> Result<()> {
        if allowed.contains(&self.format) {
            Ok(())
        } else {
            Err(Error::Parse(format!("format {:?} is not available for {cmd}", self.format).to_lowercase()).into())
        }
    }
}

fn json_line(v: &serde_json::Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).expect("json"))
}

/// `t_λ` as `π · word`, from the canonical word or a user-supplied one.
fn translation(ctx: &Context, lambda: &Weight, word: Option<&str>) -> Result<(ExtAffineElt, Vec<usize>)> {
    let d = ctx.datum();
    let Some(word) = word else {
        return Ok(translation_word(d, lambda)?);
    };
    let (pi, letters) = parse_ext_word(d, word)?;
    let target = ExtAffineElt::translation(lambda);
    let pi = if word_element(d, &pi, &letters)? == target {
        pi
    } else {
        target.multiply(&word_element(d, &ExtAffineElt::identity(d.rank()), &letters)?.inverse())
    };
    if length_ext(d, &pi) != 0 || letters.len() != length_ext(d, &target) {
        return Err(Error::Parse(format!("{word:?} is not a reduced word of t_{lambda}")).into());
    }
    Ok((pi, letters))
}

pub fn qbg(ctx: &Context) -> Result<Output> {
    let g = &ctx.graph;
    let d = ctx.datum();
    Ok(match ctx.format {
        Format::Dot => g.export_dot(),
        Format::Json => json_line(&serde_json::to_value(g.to_json())?),
        Format::Csv => {
            let mut out = String::from("src,tgt,label,kind\n");
            for (v, c, t, kind) in g.edges() {
                let src = ctx.word_of(g.group().element(v));
                let tgt = ctx.word_of(g.group().element(t));
                writeln!(out, "\"{src}\",\"{tgt}\",\"{}\",{}", d.pos_coroots()[c], kind.as_str())?;
            }
            out
        }
        Format::Table => {
            let mut out = format!(
                "{}: {} vertices, {} edges ({} quantum)\n",
                d.label(),
                g.num_vertices(),
                g.num_edges(),
                g.num_quantum_edges()
            );
            for (v, c, t, kind) in g.edges() {
                writeln!(
                    out,
                    "{:<12} -> {:<12} {:<12} {}",
                    ctx.word_of(g.group().element(v)),
                    ctx.word_of(g.group().element(t)),
                    d.pos_coroots()[c].to_string(),
                    kind.as_str()
                )?;
            }
            out
        }
    }
    .into())
}

pub fn beta(ctx: &Context, weight: &str, word: Option<&str>) -> Result<Output> {
    ctx.only(&[Format::Table, Format::Json, Format::Csv], "beta")?;
    let d = ctx.datum();
    let lambda = ctx.weight(weight)?;
    let (pi, letters) = translation(ctx, &lambda, word)?;
    let betas = beta_sequence(d, &letters)?;
    Ok(match ctx.format {
        Format::Json => json_line(&json!({
            "type": d.label(),
            "weight": lambda.0,
            "word": format_ext_word(d, &pi, &letters),
            "length": letters.len(),
            "betas": betas.iter().map(|b| json!({"re": b.re.0, "deg": b.deg})).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut out = String::from("k,re,deg\n");
            for (k, b) in betas.iter().enumerate() {
                writeln!(out, "{},\"{}\",{}", k + 1, b.re, b.deg)?;
            }
            out
        }
        _ => {
            let mut out = format!("t_{lambda} = {} (length {})\n", format_ext_word(d, &pi, &letters), letters.len());
            for (k, b) in betas.iter().enumerate() {
                writeln!(out, "{:>3}  {b}", k + 1)?;
            }
            out
        }
    }
    .into())
}

pub fn paths(
    ctx: &Context,
    weight: &str,
    sigma: &str,
    word: Option<&str>,
    reversed: bool,
    count_only: bool,
) -> Result<Output> {
    ctx.only(&[Format::Table, Format::Json, Format::Csv], "paths")?;
    let d = ctx.datum();
    let lambda = ctx.weight(weight)?;
    let sigma = ctx.sigma(sigma)?;
    let (pi, letters) = translation(ctx, &lambda, word)?;
    let betas = beta_sequence(d, &letters)?;
    let z0 = ExtAffineElt::finite(&sigma).multiply(&word_element(d, &pi, &letters)?);
    let problem = PathProblem::new(&ctx.graph, &z0, &betas, reversed)?;
    if count_only {
        return Ok(match ctx.format {
            Format::Json => json_line(&json!({ "count": problem.count().to_string() })),
            _ => format!("{}\n", problem.count()),
        }
        .into());
    }
    let all: Vec<_> = if ctx.workers > 1 {
        problem.enumerate_parallel()
    } else {
        problem.enumerate().collect()
    };
    Ok(match ctx.format {
        Format::Json => json_line(&paths_to_json(&problem, all)),
        Format::Csv => {
            let mut buf = Vec::new();
            paths_to_csv(&problem, all, &mut buf)?;
            String::from_utf8(buf)?
        }
        _ => {
            let mut out = format!("{:<20} {:<12} {:<12} {:<12} {}\n", "J", "J-", "wt", "dir", "qdeg");
            let n = all.len();
            for p in all {
                let join = |xs: &[usize]| {
                    if xs.is_empty() {
                        "-".to_string()
                    } else {
                        xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
                    }
                };
                writeln!(
                    out,
                    "{:<20} {:<12} {:<12} {:<12} {}",
                    join(&p.folds),
                    join(&p.quantum_folds),
                    p.end_wt.to_string(),
                    ctx.word_of(problem.end_dir(&p)),
                    p.qdeg
                )?;
            }
            writeln!(out, "{n} {}", if n == 1 { "path" } else { "paths" })?;
            out
        }
    }
    .into())
}

fn parse_eval(s: &str) -> Result<(i64, i64)> {
    match Weight::parse(s)?.0[..] {
        [x, q] => Ok((x, q)),
        _ => Err(Error::Parse(format!("--eval expects X,Q, got {s:?}")).into()),
    }
}

fn render_poly(ctx: &Context, p: &LaurentPoly, eval: Option<&str>, extra: serde_json::Value) -> Result<Output> {
    ctx.only(&[Format::Table, Format::Json], "this command")?;
    let value = match eval {
        None => None,
        Some(s) => {
            let (x, q) = parse_eval(s)?;
            let v = p
                .evaluate_at(x, q)
                .ok_or_else(|| anyhow::anyhow!("polynomial has a pole at x={x}, q={q}"))?;
            Some(v.to_string())
        }
    };
    Ok(match (ctx.format, value) {
        (Format::Json, value) => {
            let mut obj = extra;
            obj["terms"] = serde_json::to_value(p.to_json_terms())?;
            if let Some(v) = value {
                obj["value"] = json!(v);
            }
            json_line(&obj)
        }
        (_, Some(v)) => format!("{v}\n"),
        (_, None) => format!("{p}\n"),
    }
    .into())
}

pub fn emac(ctx: &Context, weight: &str, spec: Spec, eval: Option<&str>) -> Result<Output> {
    let lambda = ctx.weight(weight)?;
    let p = match spec {
        Spec::Zero => e_zero(&ctx.graph, &lambda)?,
        Spec::Inf => e_infinity(&ctx.graph, &lambda)?,
    };
    let extra = json!({
        "type": ctx.datum().label(),
        "weight": lambda.0,
        "spec": if spec == Spec::Zero { "zero" } else { "inf" },
    });
    render_poly(ctx, &p, eval, extra)
}

pub fn character(ctx: &Context, weight: &str, sigma: &str, eval: Option<&str>) -> Result<Output> {
    let lambda = ctx.weight(weight)?;
    let sigma = ctx.sigma(sigma)?;
    let p = weyl_character(&ctx.graph, &sigma, &lambda)?;
    let extra = json!({
        "type": ctx.datum().label(),
        "weight": lambda.0,
        "sigma": ctx.word_of(&sigma),
    });
    render_poly(ctx, &p, eval, extra)
}

pub fn dims(ctx: &Context, weight: &str, sigma: &str) -> Result<Output> {
    ctx.only(&[Format::Table, Format::Json], "dims")?;
    let lambda = ctx.weight(weight)?;
    let sigma = ctx.sigma(sigma)?;
    let dim = alcove::macdonald::weyl_dimension(&ctx.graph, &sigma, &lambda)?;
    Ok(match ctx.format {
        Format::Json => json_line(&json!({
            "type": ctx.datum().label(),
            "weight": lambda.0,
            "sigma": ctx.word_of(&sigma),
            "dim": dim,
        })),
        _ => format!("{dim}\n"),
    }
    .into())
}

const DEFAULT_SUITES: [Suite; 8] = [
    Suite::Shift,
    Suite::Recursion,
    Suite::W0Inversion,
    Suite::Lenart,
    Suite::Beta,
    Suite::DualRoute,
    Suite::Cominuscule,
    Suite::Nonnegativity,
];

fn run_suite(ctx: &Context, suite: Suite, lambdas: &[Weight], max_m: i64) -> Result<SuiteReport> {
    let g = &ctx.graph;
    Ok(match suite {
        Suite::Shift => verify::shift_suite(g)?,
        Suite::Recursion => verify::recursion_suite(g, lambdas)?,
        Suite::W0Inversion => verify::w0_inversion_suite(g),
        Suite::Lenart => verify::lenart_suite(g)?,
        Suite::Beta => verify::beta_structure_suite(g.datum())?,
        Suite::DualRoute => verify::dual_route_suite(g, lambdas)?,
        Suite::Cominuscule => verify::cominuscule_suite(g, max_m)?,
        Suite::Nonnegativity => verify::nonnegativity_suite(g, lambdas)?,
        Suite::PiInvariance => verify::pi_invariance_suite(g, lambdas)?,
    })
}

pub fn verify(ctx: &Context, suites: &[Suite], min: i64, max_m: i64) -> Result<Output> {
    ctx.only(&[Format::Table, Format::Json], "verify")?;
    if min > 0 {
        return Err(Error::Parse("--min must be non-positive".into()).into());
    }
    let suites = if suites.is_empty() { &DEFAULT_SUITES[..] } else { suites };
    let lambdas = verify::anti_dominant_box(ctx.datum().rank(), min);
    let reports = suites
        .iter()
        .map(|&s| run_suite(ctx, s, &lambdas, max_m))
        .collect::<Result<Vec<_>>>()?;
    let failed: Vec<String> = reports.iter().filter(|r| !r.passed()).map(|r| r.name.clone()).collect();
    let text = match ctx.format {
        Format::Json => json_line(&json!({
            "type": ctx.datum().label(),
            "passed": failed.is_empty(),
            "suites": reports,
        })),
        _ => {
            let mut out = String::new();
            for r in &reports {
                let tag = if r.passed() { "PASS" } else { "FAIL" };
                writeln!(out, "{tag} {:<14} {:<4} {} checks", r.name, r.scope, r.checked)?;
                for f in r.failures.iter().take(5) {
                    writeln!(out, "     {f}")?;
                }
                if r.failures.len() > 5 {
                    writeln!(out, "     ... {} more", r.failures.len() - 5)?;
                }
            }
            out
        }
    };
    Ok(Output {
        text,
        failure: (!failed.is_empty()).then_some(IdentityFailure(failed)),
    })
}
