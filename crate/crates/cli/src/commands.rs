//! Subcommands. Every pass/fail check is a function of a single JSON input
//! value, so `verify` can re-run it from a saved verdict.

use std::path::Path;

use anyhow::{bail, Context};
use serde::Deserialize;
use serde_json::{json, Value};
use trophyp::bergman::{self, FanJson};
use trophyp::curves::{
    decompose_irreducible, default_roots, sample_varbar_check_with, speyer_parametrization_with_roots,
    tropicalize_param, verify_sequence_properties, CurvePiece, SpeyerParam, TropicalCurveFan,
};
use trophyp::exactlin::{is_positively_hyperbolic_linear, maximal_minors, variation_summary, ComplexMatrix};
use trophyp::matroids::{catalog, is_positroid_with, Matroid, Subset};
use trophyp::par::Strategy;
use trophyp::rational::{format_rational, parse_rational, ComplexRational, Rational};
use trophyp::signvar::{var, varbar};
use trophyp::stability::{
    classify_binomial, exchange_failure, falsify_stability_with, is_m_convex_function_with, is_root_direction,
    newton_polytope_vertices, polytope_edges_with, tinit, FalsifyOutcome, LatticePointSet, ValuedPolynomial,
};
use trophyp::symmetry::{
    describe_parametrization, preserver_subgroup_with, sample_toric_varbar, toric_algebraic_matroid,
    toric_positively_hyperbolic, ToricVerdict,
};
use trophyp::Error;

use crate::args::{BergmanCmd, CatalogCmd, CurveCmd, MatroidCmd, PolyCmd};
use crate::input::{from_value, integer_matrix, matrix, naturals, read_json, read_value, vector};
use crate::verdict::{Outcome, Report, Verdict};

pub struct Ctx {
    pub seed: u64,
    pub strategy: Strategy,
}

impl Ctx {
    fn verdict(&self, check: &str, pass: bool, input: &Value, certificate: Value) -> Verdict {
        Verdict::new(check, Outcome::of(pass), input.clone(), certificate, self.seed)
    }
}

pub type Check = fn(&Ctx, &Value) -> anyhow::Result<Verdict>;

/// The check behind a verdict's `check` field.
pub fn lookup(name: &str) -> Option<Check> {
    Some(match name {
        "grassmannian" => grassmannian,
        "linear-hyp" => linear_hyp,
        "matroid-validate" => matroid_validate,
        "positroid" => positroid,
        "bergman-noncrossing" => bergman_noncrossing,
        "bergman-member" => bergman_member,
        "poly-gp-check" => poly_gp_check,
        "poly-mset" => poly_mset,
        "poly-mfun" => poly_mfun,
        "poly-binomial" => poly_binomial,
        "poly-falsify" => poly_falsify,
        "curve-balance" => curve_balance,
        "curve-shape" => curve_shape,
        "curve-sample" => curve_sample,
        "curve-roundtrip" => curve_roundtrip,
        "preservers" => preservers,
        "toric-check" => toric_check,
        _ => return None,
    })
}

fn run_file(ctx: &Ctx, check: Check, path: &Path) -> anyhow::Result<Report> {
    Report::verdict(check(ctx, &read_value(path)?)?)
}

/// Parses the file as `T` first, so schema errors report line and column.
fn run_typed<T: serde::de::DeserializeOwned>(ctx: &Ctx, check: Check, path: &Path) -> anyhow::Result<Report> {
    let (_, raw): (T, Value) = read_json(path)?;
    Report::verdict(check(ctx, &raw)?)
}

pub fn var_cmd(v: &str) -> anyhow::Result<Report> {
    Report::value(var(&vector(v)?))
}

pub fn varbar_cmd(v: &str) -> anyhow::Result<Report> {
    Report::value(varbar(&vector(v)?))
}

pub fn one_indexed(s: &[usize]) -> Vec<usize> {
    s.iter().map(|x| x + 1).collect()
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

pub fn grassmannian(ctx: &Ctx, input: &Value) -> anyhow::Result<Verdict> {
    let m = matrix(input)?;
    let p = maximal_minors(&m)?;
    let class = p.class();
    let summary = variation_summary(&m)?;
    let opposite = p.opposite_signs().map(|(a, b)| json!({ "positive": one_indexed(&a), "negative": one_indexed(&b) }));
    let minors: Vec<Value> =
        p.coordinates.iter().map(|(s, v)| json!({ "subset": one_indexed(s), "value": format_rational(v) })).collect();
    Ok(ctx.verdict(
        "grassmannian",
        class.is_nonnegative(),
        input,
        json!({ "class": class, "opposite_signs": opposite, "minors": minors, "variation": summary }),
    ))
}

pub fn linear_hyp(ctx: &Ctx, input: &Value) -> anyhow::Result<Verdict> {
    let m: ComplexMatrix = from_value(input, "complex matrix")?;
    let cert = is_positively_hyperbolic_linear(&m)?;
    Ok(ctx.verdict("linear-hyp", cert.is_hyperbolic(), input, serde_json::to_value(&cert)?))
}

#[derive(Deserialize)]
pub struct RawMatroid {
    pub n: usize,
    pub rank: usize,
    pub bases: Vec<Vec<usize>>,
}

pub fn matroid_validate(ctx: &Ctx, input: &Value) -> anyhow::Result<Verdict> {
    let r: RawMatroid = from_value(input, "matroid")?;
    match Matroid::from_one_indexed(r.n, r.rank, &r.bases) {
        Ok(m) => Ok(ctx.verdict("matroid-validate", true, input, json!({ "matroid": m }))),
        Err(Error::ExchangeViolation { first, second, element }) => Ok(ctx.verdict(
            "matroid-validate",
            false,
            input,
            json!({ "exchange_violation": { "first": first, "second": second, "element": element } }),
        )),
        Err(e) => Err(e.into()),
    }
}

pub fn positroid(ctx: &Ctx, input: &Value) -> anyhow::Result<Verdict> {
    let m: Matroid = from_value(input, "matroid")?;
    let v = is_positroid_with(&m, ctx.strategy);
    Ok(ctx.verdict("positroid", v.is_positroid, input, serde_json::to_value(&v)?))
}

#[derive(Deserialize)]
struct MatroidWithDim {
    matroid: Matroid,
    dim: Option<usize>,
}

pub fn bergman_noncrossing(ctx: &Ctx, input: &Value) -> anyhow::Result<Verdict> {
    let i: MatroidWithDim = from_value(input, "input")?;
    let v = bergman::noncrossing_span_condition(&i.matroid, i.dim, ctx.strategy)?;
    Ok(ctx.verdict("bergman-noncrossing", v.holds, input, serde_json::to_value(&v)?))
}

/// A circuit on which the minimum of `w` is attained only once.
pub fn unique_min_circuit(m: &Matroid, w: &[Rational]) -> Option<Subset> {
    m.circuits().into_iter().find(|c| {
        let min = c.iter().map(|i| &w[i]).min().expect("circuits are nonempty");
        c.iter().filter(|&i| &w[i] == min).count() == 1
    })
}

#[derive(Deserialize)]
pub struct MatroidWithWeight {
    pub matroid: Matroid,
    #[serde(with = "trophyp::rational::serde_rational_vec")]
    pub w: Vec<Rational>,
}

pub fn bergman_member(ctx: &Ctx, input: &Value) -> anyhow::Result<Verdict> {
    let i: MatroidWithWeight = from_value(input, "input")?;
    let inside = bergman::membership_consistency(&i.matroid, &i.w)?;
    let witness = unique_min_circuit(&i.matroid, &i.w).map(|c| c.one_indexed());
    Ok(ctx.verdict("bergman-member", inside, input, json!({ "in_fan": inside, "unique_min_circuit": witness })))
}

pub fn poly_gp_check(ctx: &Ctx, input: &Value) -> anyhow::Result<Verdict> {
    let f: ValuedPolynomial = from_value(input, "polynomial")?;
    let support = LatticePointSet::new(f.n(), f.support())?;
    let edges = polytope_edges_with(&support, ctx.strategy);
    let bad = edges.iter().find(|e| !is_root_direction(&e.direction));
    Ok(ctx.verdict(
        "poly-gp-check",
        bad.is_none(),
        input,
        json!({ "homogeneous": support.degree().is_some(), "edges": edges.len(), "bad_edge": bad }),
    ))
}

pub fn poly_mset(ctx: &Ctx, input: &Value) -> anyhow::Result<Verdict> {
    let s: LatticePointSet = from_value(input, "point set")?;
    if s.degree().is_none() {
        return Err(Error::NotHomogeneous.into());
    }
    let fail = exchange_failure(&s).map(|(x, y, i)| json!({ "x": x, "y": y, "i": i + 1 }));
    Ok(ctx.verdict("poly-mset", fail.is_none(), input, json!({ "exchange_failure": fail })))
}

pub fn poly_mfun(ctx: &Ctx, input: &Value) -> anyhow::Result<Verdict> {
    let f: ValuedPolynomial = from_value(input, "polynomial")?;
    let v = is_m_convex_function_with(&f, ctx.strategy)?;
    Ok(ctx.verdict("poly-mfun", v.holds, input, serde_json::to_value(&v)?))
}

pub fn complex_literal(s: &str) -> anyhow::Result<ComplexRational> {
    let parts: Vec<&str> = s.split(',').collect();
    match parts.as_slice() {
        [re] => Ok(ComplexRational::real(parse_rational(re)?)),
        [re, im] => Ok(ComplexRational::new(parse_rational(re)?, parse_rational(im)?)),
        _ => bail!("coefficient `{s}` must be `re` or `re,im`"),
    }
}

#[derive(Deserialize)]
struct BinomialInput {
    a: String,
    alpha: Vec<u32>,
    b: String,
    beta: Vec<u32>,
}

pub fn poly_binomial(ctx: &Ctx, input: &Value) -> anyhow::Result<Verdict> {
    let i: BinomialInput = from_value(input, "binomial")?;
    let v = classify_binomial(&complex_literal(&i.a)?, &i.alpha, &complex_literal(&i.b)?, &i.beta)?;
    Ok(ctx.verdict("poly-binomial", v.stable, input, serde_json::to_value(&v)?))
}

#[derive(Deserialize)]
pub struct FalsifyInput {
    pub polynomial: ValuedPolynomial,
    pub trials: u64,
}

pub fn poly_falsify(ctx: &Ctx, input: &Value) -> anyhow::Result<Verdict> {
    let i: FalsifyInput = from_value(input, "input")?;
    let f = i.polynomial.to_constant()?;
    let out = falsify_stability_with(&f, i.trials, ctx.seed, ctx.strategy)?;
    let result = if out.is_falsified() { Outcome::Fail } else { Outcome::NotFalsified };
    let mut cert = serde_json::to_value(&out)?;
    if let FalsifyOutcome::NotFalsified { .. } = out {
        cert["note"] = json!("sampled check, not a proof of stability");
    }
    Ok(Verdict::new("poly-falsify", result, input.clone(), cert, ctx.seed))
}

pub fn curve_balance(ctx: &Ctx, input: &Value) -> anyhow::Result<Verdict> {
    let f: TropicalCurveFan = from_value(input, "fan")?;
    let sums: Vec<i64> = (0..f.n).map(|j| f.rays.iter().map(|r| r.mult as i64 * r.vec[j]).sum()).collect();
    Ok(ctx.verdict("curve-balance", f.is_balanced(), input, json!({ "weighted_sum": sums, "normalized": f })))
}

pub fn curve_shape(ctx: &Ctx, input: &Value) -> anyhow::Result<Verdict> {
    let f: TropicalCurveFan = from_value(input, "fan")?;
    let r = f.shape_report();
    Ok(ctx.verdict("curve-shape", r.ok, input, serde_json::to_value(&r)?))
}

#[derive(Deserialize)]
pub struct SampleInput {
    pub param: SpeyerParam,
    pub trials: u64,
}

pub fn curve_sample(ctx: &Ctx, input: &Value) -> anyhow::Result<Verdict> {
    let i: SampleInput = from_value(input, "input")?;
    i.param.validate()?;
    let r = sample_varbar_check_with(&i.param, i.trials, ctx.seed, ctx.strategy);
    let mut cert = serde_json::to_value(&r)?;
    cert["note"] = json!("sampled check, not a proof");
    Ok(ctx.verdict("curve-sample", r.violations == 0, input, cert))
}

fn params_for(fan: &TropicalCurveFan, roots: Option<&Vec<Rational>>) -> anyhow::Result<Vec<SpeyerParam>> {
    decompose_irreducible(fan)?
        .iter()
        .map(|p| {
            let r = roots.cloned().unwrap_or_else(|| default_roots(p.blocks.len()));
            Ok(speyer_parametrization_with_roots(p, r)?)
        })
        .collect()
}

pub fn curve_roundtrip(ctx: &Ctx, input: &Value) -> anyhow::Result<Verdict> {
    let f: TropicalCurveFan = from_value(input, "fan")?;
    let params = params_for(&f, None)?;
    let fans =
        params.iter().map(|p| tropicalize_param(&p.in_original_coordinates())).collect::<trophyp::Result<Vec<_>>>()?;
    let union = TropicalCurveFan::union(&fans)?;
    Ok(ctx.verdict("curve-roundtrip", union == f, input, json!({ "pieces": params.len(), "tropicalized": union })))
}

#[derive(Deserialize)]
struct PreserverInput {
    n: usize,
    c: usize,
}

pub fn preservers(ctx: &Ctx, input: &Value) -> anyhow::Result<Verdict> {
    let i: PreserverInput = from_value(input, "input")?;
    let r = preserver_subgroup_with(i.n, i.c, ctx.strategy)?;
    Ok(ctx.verdict("preservers", r.generator_match, input, serde_json::to_value(&r)?))
}

#[derive(Deserialize)]
struct ToricInput {
    matrix: Value,
    trials: u64,
}

pub fn toric_check(ctx: &Ctx, input: &Value) -> anyhow::Result<Verdict> {
    let i: ToricInput = from_value(input, "input")?;
    let a = integer_matrix(&i.matrix)?;
    let verdict = toric_positively_hyperbolic(&a)?;
    let matroid = toric_algebraic_matroid(&a)?;
    let mut cert = json!({ "verdict": verdict, "matroid": matroid });
    if let ToricVerdict::Yes { lambda, reduced, .. } = &verdict {
        cert["parametrization"] = json!(describe_parametrization(reduced, lambda));
        let mut s = serde_json::to_value(sample_toric_varbar(reduced, lambda, i.trials, ctx.seed, ctx.strategy))?;
        s["note"] = json!("sampled check, not a proof");
        cert["sample"] = s;
    }
    Ok(ctx.verdict("toric-check", verdict.is_yes(), input, cert))
}

pub fn grassmannian_cmd(ctx: &Ctx, path: &Path) -> anyhow::Result<Report> {
    run_file(ctx, grassmannian, path)
}

pub fn linear_hyp_cmd(ctx: &Ctx, path: &Path) -> anyhow::Result<Report> {
    run_typed::<ComplexMatrix>(ctx, linear_hyp, path)
}

pub fn positroid_cmd(ctx: &Ctx, path: &Path) -> anyhow::Result<Report> {
    run_typed::<Matroid>(ctx, positroid, path)
}

pub fn matroid_cmd(ctx: &Ctx, cmd: &MatroidCmd) -> anyhow::Result<Report> {
    match cmd {
        MatroidCmd::Validate(i) => run_typed::<Value>(ctx, matroid_validate, &i.path),
        MatroidCmd::Dual(i) => Report::value(read_json::<Matroid>(&i.path)?.0.dual()),
        MatroidCmd::Components(i) => {
            let m = read_json::<Matroid>(&i.path)?.0;
            Report::value(m.components().iter().map(|c| c.one_indexed()).collect::<Vec<_>>())
        }
    }
}

pub fn bergman_cmd(ctx: &Ctx, cmd: &BergmanCmd) -> anyhow::Result<Report> {
    match cmd {
        BergmanCmd::Cones { input, dim } => {
            let m = read_json::<Matroid>(&input.path)?.0;
            let cones = bergman::cones_of_dim(&m, dim.unwrap_or(m.rank()), ctx.strategy)?;
            Ok(Report { json: serde_json::to_value(FanJson::from_cones(&cones))?, code: 0 })
        }
        BergmanCmd::Noncrossing { input, dim } => {
            let (_, raw): (Matroid, Value) = read_json(&input.path)?;
            Report::verdict(bergman_noncrossing(ctx, &json!({ "matroid": raw, "dim": dim }))?)
        }
        BergmanCmd::Member { input, w } => {
            let (_, raw): (Matroid, Value) = read_json(&input.path)?;
            Report::verdict(bergman_member(ctx, &json!({ "matroid": raw, "w": strings(&vector(w)?) }))?)
        }
    }
}

pub fn poly_cmd(ctx: &Ctx, cmd: &PolyCmd) -> anyhow::Result<Report> {
    match cmd {
        PolyCmd::Newton(i) => {
            let f = read_json::<ValuedPolynomial>(&i.path)?.0;
            Report::value(newton_polytope_vertices(&f.support(), f.n())?)
        }
        PolyCmd::GpCheck(i) => run_typed::<ValuedPolynomial>(ctx, poly_gp_check, &i.path),
        PolyCmd::Mset(i) => run_typed::<LatticePointSet>(ctx, poly_mset, &i.path),
        PolyCmd::Mfun(i) => run_typed::<ValuedPolynomial>(ctx, poly_mfun, &i.path),
        PolyCmd::Tinit { input, w } => {
            let f = read_json::<ValuedPolynomial>(&input.path)?.0;
            let g = tinit(&f, &vector(w)?)?;
            Ok(Report { json: json!({ "result": g, "display": g.to_string() }), code: 0 })
        }
        PolyCmd::Binomial { a, alpha, b, beta } => {
            complex_literal(a)?;
            complex_literal(b)?;
            let input = json!({ "a": a, "alpha": naturals(alpha)?, "b": b, "beta": naturals(beta)? });
            Report::verdict(poly_binomial(ctx, &input)?)
        }
        PolyCmd::Falsify { input, trials } => {
            let (_, raw): (ValuedPolynomial, Value) = read_json(&input.path)?;
            Report::verdict(poly_falsify(ctx, &json!({ "polynomial": raw, "trials": trials }))?)
        }
    }
}

fn piece_json(p: &CurvePiece) -> Value {
    let (shift, shifted) = p.shifted();
    json!({
        "cycle": p.cycle(),
        "winding": p.winding(),
        "shift": shift,
        "shifted_cycle": shifted.iter().map(|b| b.start + 1).collect::<Vec<_>>(),
        "fan": p.fan(),
    })
}

pub fn curve_cmd(ctx: &Ctx, cmd: &CurveCmd) -> anyhow::Result<Report> {
    match cmd {
        CurveCmd::Balance(i) => run_typed::<TropicalCurveFan>(ctx, curve_balance, &i.path),
        CurveCmd::Shape(i) => run_typed::<TropicalCurveFan>(ctx, curve_shape, &i.path),
        CurveCmd::Decompose(i) => {
            let f = read_json::<TropicalCurveFan>(&i.path)?.0;
            Report::value(decompose_irreducible(&f)?.iter().map(piece_json).collect::<Vec<_>>())
        }
        CurveCmd::Speyer { input, roots } => {
            let f = read_json::<TropicalCurveFan>(&input.path)?.0;
            let roots = roots.as_deref().map(vector).transpose()?;
            let out: Vec<Value> = params_for(&f, roots.as_ref())?
                .iter()
                .map(|p| {
                    json!({
                        "param": p,
                        "sequence_properties": verify_sequence_properties(p),
                        "original_coordinates": p.in_original_coordinates(),
                    })
                })
                .collect();
            Report::value(out)
        }
        CurveCmd::Sample { input, trials } => {
            let (_, raw): (SpeyerParam, Value) = read_json(&input.path)?;
            Report::verdict(curve_sample(ctx, &json!({ "param": raw, "trials": trials }))?)
        }
        CurveCmd::Roundtrip(i) => run_typed::<TropicalCurveFan>(ctx, curve_roundtrip, &i.path),
    }
}

pub fn preservers_cmd(ctx: &Ctx, n: usize, c: usize) -> anyhow::Result<Report> {
    Report::verdict(preservers(ctx, &json!({ "n": n, "c": c }))?)
}

pub fn toric_cmd(ctx: &Ctx, path: &Path, trials: u64) -> anyhow::Result<Report> {
    let raw = read_value(path)?;
    integer_matrix(&raw).with_context(|| format!("{}: invalid integer matrix", path.display()))?;
    Report::verdict(toric_check(ctx, &json!({ "matrix": raw, "trials": trials }))?)
}

pub fn catalog_cmd(ctx: &Ctx, cmd: &CatalogCmd) -> anyhow::Result<Report> {
    let CatalogCmd::Generate { n, loopless } = cmd;
    let all = catalog(*n, ctx.strategy)?;
    Report::value(all.into_iter().filter(|m| !loopless || m.is_loopless()).collect::<Vec<_>>())
}
