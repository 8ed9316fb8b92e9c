use std::sync::Arc;

use serde_json::{json, Value};

use hopf_ore::field::{gaussian_vanishing, gaussian_vanishing_closed_form, q_binomial};
use hopf_ore::hopf::{render, HopfCase, HopfStructure, Normalization};
use hopf_ore::linalg::Matrix;
use hopf_ore::modrep::{
    certify_classification, classify_simples, decompose_tensor, is_indecomposable, is_isomorphic, is_simple, realize,
    validate_module, verma, verma_quotient_mod_ideal, Indecomposability, IsoVerdict, ModuleParent, ModuleRep,
    SimpleFamily, SimpleSpec, Simplicity, VermaQuotient,
};
use hopf_ore::structure::{
    check_hopf_ideal, check_ideal, ideal_form, make_quotient, rank_crosscheck, rank_of, skew_primitives, IdealForm,
    IdealReport, QuotientHopf,
};
use hopf_ore::FieldCtx;

use crate::config::{IdealSpec, Job, JobConfig, TermSpec};
use crate::error::CliError;
use crate::setup::{self, Extension};

const CLASSIFY_DEGREE: u32 = 6;
const HOPF_CHECK_DEGREE: u32 = 5;
const SKEW_DEGREE: u32 = 4;
const IDEAL_DEGREE: u32 = 2;

/// The result payload of one command and its verdict.
pub struct Outcome {
    pub result: Value,
    pub passed: bool,
    /// A description of the first failure when `passed` is false.
    pub witness: Option<String>,
}

impl Outcome {
    fn new(result: Value, failure: Option<String>) -> Self {
        Outcome { result, passed: failure.is_none(), witness: failure }
    }
}

/// Case, q and the order of θ for the extension of a job.
pub fn derived(ext: &Extension) -> Value {
    let h = &ext.ore;
    let normalization = match h.normalization() {
        Normalization::Identity => "none".to_string(),
        Normalization::Shift(c) => format!("x -> x - ({c})(1 - a)"),
        Normalization::Rescale(c) => format!("x -> ({c})^-1 x"),
    };
    json!({
        "field": h.theta().ctx().kind().to_string(),
        "case": h.case().to_string(),
        "q": h.q().to_string(),
        "theta_order": h.theta().exact_order().map_or_else(|| json!("infinite"), |n| json!(n)),
        "normalization": normalization,
        "mutated_antipode": h.has_mutated_antipode(),
    })
}

fn core(path: &str) -> impl Fn(hopf_ore::Error) -> CliError + '_ {
    move |e| CliError::invalid(path, e)
}

fn require_extension<'a>(ext: Option<&'a Extension>, job: &Job) -> Result<&'a Extension, CliError> {
    ext.ok_or_else(|| CliError::invalid("extension", format!("required by the {} command", job.name())))
}

pub fn run(cfg: &JobConfig, ctx: &FieldCtx, ext: Option<&Extension>) -> Result<Outcome, CliError> {
    let job = &cfg.job;
    match job {
        Job::Qbinom { n, m, q } => qbinom(ctx, *n, *m, q),
        Job::Classify { degree } => classify(require_extension(ext, job)?, degree.unwrap_or(CLASSIFY_DEGREE)),
        Job::HopfCheck { degree, grading } => {
            hopf_check(require_extension(ext, job)?, degree.unwrap_or(HOPF_CHECK_DEGREE), *grading)
        }
        Job::SkewPrimitives { target, degree } => {
            skew(require_extension(ext, job)?, target, degree.unwrap_or(SKEW_DEGREE))
        }
        Job::Quotient { n, beta, tail, degree } => {
            quotient(require_extension(ext, job)?, *n, beta.as_deref(), tail.as_deref(), degree.unwrap_or(IDEAL_DEGREE))
        }
        Job::Simples { quotient } => simples(require_extension(ext, job)?, quotient.as_ref()),
        Job::Tensor { sigma, alpha, lambda, beta } => tensor(require_extension(ext, job)?, sigma, alpha, lambda, beta),
        Job::Verma { lambda, quotient, betas } => {
            verma_job(require_extension(ext, job)?, lambda, quotient.as_ref(), betas.as_deref())
        }
    }
}

fn qbinom(ctx: &FieldCtx, n: u64, m: u64, q: &str) -> Result<Outcome, CliError> {
    let q = setup::scalar(ctx, q, "job.q")?;
    let value = q_binomial(n, m, &q).map_err(core("job.m"))?;
    let mut result = json!({ "value": value.to_string() });
    let mut failure = None;
    if n >= 2 {
        let brute = gaussian_vanishing(n, &q).map_err(core("job.q"))?;
        let closed = gaussian_vanishing_closed_form(n, &q).map_err(core("job.q"))?;
        result["vanishing_profile"] = json!(brute);
        result["closed_form"] = json!(closed);
        if brute != closed {
            failure = Some(format!("brute force gives {brute}, closed form gives {closed} at n = {n}"));
        }
    }
    Ok(Outcome::new(result, failure))
}

fn classify(ext: &Extension, degree: u32) -> Result<Outcome, CliError> {
    let h = &ext.ore;
    let predicted = rank_of(h);
    let check = rank_crosscheck(h, degree, ext.sample.as_deref()).map_err(core("job"))?;
    let per_target: Vec<Value> = check
        .per_target
        .iter()
        .filter(|t| t.found != t.expected || t.found > 1)
        .map(|t| json!({ "target": t.target.to_string(), "found": t.found, "expected": t.expected }))
        .collect();
    let result = json!({
        "rank": predicted.rank.to_string(),
        "h1_pattern": predicted.pattern.to_string(),
        "degree_bound": degree,
        "span_dim": check.span_dim,
        "expected_span_dim": check.expected_span_dim,
        "generators_found": check.generators_found,
        "generators_missing": check.generators_missing,
        "targets": per_target,
        "all_verified": check.all_verified,
        "agrees": check.agrees(),
    });
    let failure = (!check.agrees()).then(|| {
        if let Some(g) = check.generators_missing.first() {
            format!("predicted generator {g} not found by the solver")
        } else if let Some(t) = check.per_target.iter().find(|t| t.found != t.expected) {
            format!("target {}: found {} solutions, expected {}", t.target, t.found, t.expected)
        } else {
            format!("span dimension {} differs from {}", check.span_dim, check.expected_span_dim)
        }
    });
    Ok(Outcome::new(result, failure))
}

fn hopf_check(ext: &Extension, degree: u32, grading: Option<bool>) -> Result<Outcome, CliError> {
    let h = &ext.ore;
    let sample = ext.sample.as_deref();
    let axioms = h.check_hopf_axioms(degree, sample).map_err(core("job.degree"))?;
    let mut failures = Vec::new();
    let axiom_json = match &axioms.failure {
        None => json!({ "checked": axioms.checked, "passed": true }),
        Some(f) => {
            failures.push(format!("{} fails on {}: got {}, expected {}", f.axiom, f.element, f.observed, f.expected));
            json!({
                "checked": axioms.checked,
                "passed": false,
                "failure": { "axiom": f.axiom.to_string(), "element": f.element.to_string(),
                             "observed": f.observed, "expected": f.expected },
            })
        }
    };
    let run_grading = grading.unwrap_or(h.case() != HopfCase::Three);
    let grading_json = if run_grading {
        let g = h.check_grading(degree, sample).map_err(core("job.degree"))?;
        match &g.failure {
            None => json!({ "checked": g.checked, "passed": true }),
            Some((m, (i, j))) => {
                failures.push(format!("coproduct of {m} has a term of bidegree ({i}, {j})"));
                json!({ "checked": g.checked, "passed": false,
                        "failure": { "element": m.to_string(), "bidegree": [i, j] } })
            }
        }
    } else {
        Value::Null
    };
    let ore = h.validate_ore_compat();
    let ore_json = match &ore.failure {
        None => json!({ "passed": true }),
        Some(f) => {
            failures.push(f.to_string());
            json!({ "passed": false, "failure": f.to_string() })
        }
    };
    let result = json!({
        "degree_bound": degree,
        "sampled_group": sample.map(|s| s.len()),
        "axioms": axiom_json,
        "grading": grading_json,
        "ore_compat": ore_json,
    });
    Ok(Outcome::new(result, failures.into_iter().next()))
}

fn skew(ext: &Extension, target: &[i64], degree: u32) -> Result<Outcome, CliError> {
    let g = setup::group_element(ext.group(), target, "job.target")?;
    let space = skew_primitives(&ext.ore, &g, degree, ext.sample.as_deref()).map_err(core("job"))?;
    let basis: Vec<String> = space.basis.iter().map(render).collect();
    let result = json!({
        "target": g.to_string(),
        "degree_bound": degree,
        "dim": space.dim(),
        "basis": basis,
        "verified": space.verified,
    });
    let failure = (!space.verified).then(|| "a solution fails the skew-primitive identity".to_string());
    Ok(Outcome::new(result, failure))
}

fn ideal_json(report: &IdealReport) -> (Value, Option<String>) {
    match &report.failure {
        None => (json!({ "generators": report.generators, "passed": true }), None),
        Some(f) => {
            let w = format!("{} check fails on {}: {}", f.check, f.generator, f.witness);
            let v = json!({
                "generators": report.generators,
                "passed": false,
                "failure": { "check": f.check.to_string(), "generator": f.generator, "witness": f.witness },
            });
            (v, Some(w))
        }
    }
}

fn standard_quotient(ext: &Extension, spec: &IdealSpec, path: &str) -> Result<(IdealForm, QuotientHopf), CliError> {
    let h = &ext.ore;
    let beta = setup::scalar(h.theta().ctx(), &spec.beta, &format!("{path}.beta"))?;
    let form = ideal_form(h, spec.n, &beta).map_err(core(path))?;
    let q = make_quotient(h, form.clone()).map_err(core(path))?;
    Ok((form, q))
}

fn quotient(
    ext: &Extension,
    n: u32,
    beta: Option<&str>,
    tail: Option<&[TermSpec]>,
    degree: u32,
) -> Result<Outcome, CliError> {
    let h = &ext.ore;
    if ext.sample.is_some() {
        return Err(CliError::invalid("extension.group", "quotients require a finite group"));
    }
    if let Some(tail) = tail {
        if beta.is_some() {
            return Err(CliError::invalid("job", "give either beta or tail, not both"));
        }
        let tail = setup::element(ext, tail, "job.tail")?;
        let q = QuotientHopf::from_generator(h.clone(), n, tail).map_err(core("job.tail"))?;
        let report = check_ideal(&q, degree).map_err(core("job"))?;
        let (ideal, failure) = ideal_json(&report);
        let generator = q.generator().map(|w| render(&w));
        return Ok(Outcome::new(json!({ "generator": generator, "ideal_check": ideal }), failure));
    }
    let spec = IdealSpec { n, beta: beta.unwrap_or("0").to_string() };
    let (form, q) = standard_quotient(ext, &spec, "job")?;
    let (ideal, mut failure) = ideal_json(&check_hopf_ideal(h, &form, degree).map_err(core("job"))?);
    let mut result = json!({
        "form": form.to_string(),
        "kind": form.kind(),
        "dimension": q.dimension(),
        "ideal_check": ideal,
    });
    if let Some(n) = q.reduction_exponent() {
        result["relation"] = json!(format!("x^{n} = {}", render(&q.x_pow(n))));
        let axioms = q.check_hopf_axioms().map_err(core("job"))?;
        result["axioms"] = json!({ "checked": axioms.checked, "passed": axioms.passed() });
        if let (None, Some(f)) = (&failure, &axioms.failure) {
            failure = Some(format!("{} fails on {}", f.axiom, f.element));
        }
    }
    Ok(Outcome::new(result, failure))
}

fn module_parent(ext: &Extension, quotient: Option<&IdealSpec>, path: &str) -> Result<ModuleParent, CliError> {
    match quotient {
        None => ModuleParent::from_ore(ext.ore.clone()).map_err(core("extension")),
        Some(spec) => {
            let (_, q) = standard_quotient(ext, spec, path)?;
            ModuleParent::from_quotient(Arc::new(q)).map_err(core(path))
        }
    }
}

fn render_matrix(m: &Matrix) -> Value {
    let rows: Vec<Vec<String>> = (0..m.rows()).map(|r| m.row(r).iter().map(|c| c.to_string()).collect()).collect();
    json!(rows)
}

fn module_json(m: &ModuleRep) -> Value {
    let group: Vec<Value> = m.group_matrices().iter().map(render_matrix).collect();
    json!({ "dim": m.dim(), "group": group, "x": render_matrix(m.x_matrix()) })
}

fn spec_dim(parent: &ModuleParent, spec: &SimpleSpec) -> Option<u64> {
    match spec {
        SimpleSpec::OneDim(_) => Some(1),
        SimpleSpec::BlockS(..) => parent.chi_order(),
    }
}

fn simples(ext: &Extension, quotient: Option<&IdealSpec>) -> Result<Outcome, CliError> {
    let parent = module_parent(ext, quotient, "job.quotient")?;
    let c = classify_simples(&parent).map_err(core("job"))?;
    let listed: Vec<Value> =
        c.simples.iter().map(|s| json!({ "module": s.to_string(), "dim": spec_dim(&parent, s) })).collect();
    let families: Vec<String> = c
        .families
        .iter()
        .map(|f| match f {
            SimpleFamily::AllOneDimensional => "V_lambda for every character lambda".to_string(),
            SimpleFamily::Blocks(None) => "V(lambda, beta) for every lambda and beta != 0".to_string(),
            SimpleFamily::Blocks(Some(reps)) => {
                let reps: Vec<String> = reps.iter().map(|r| r.to_string()).collect();
                format!("V(sigma, beta) for beta != 0 and [sigma] in {{{}}}", reps.join(", "))
            }
        })
        .collect();
    let mut result = json!({ "simples": listed, "families": families });
    let mut failure = None;
    if !c.simples.is_empty() {
        let cert = certify_classification(&c).map_err(core("job"))?;
        let missing: Vec<String> = cert.missing_one_dimensional.iter().map(|l| l.to_string()).collect();
        let pairs: Vec<[usize; 2]> = cert.isomorphic_or_undecided.iter().map(|&(i, j)| [i, j]).collect();
        result["certificate"] = json!({
            "valid": cert.valid,
            "simple": cert.simple,
            "pairwise_non_isomorphic": pairs.is_empty(),
            "unresolved_pairs": pairs,
            "missing_one_dimensional": missing,
            "sum_of_squares": cert.sum_of_squares,
            "algebra_dimension": cert.algebra_dimension,
            "passed": cert.passed(),
        });
        if !cert.passed() {
            failure = Some(if let Some(i) = cert.valid.iter().position(|v| !v) {
                format!("{} is not a module over the parent", c.simples[i])
            } else if let Some(i) = cert.simple.iter().position(|v| !v) {
                format!("{} is not certified simple", c.simples[i])
            } else if let Some(&(i, j)) = cert.isomorphic_or_undecided.first() {
                format!("{} and {} are not certified non-isomorphic", c.simples[i], c.simples[j])
            } else if let Some(l) = missing.first() {
                format!("V_{l} is a module but is missing from the list")
            } else {
                format!("sum of squares {} exceeds the dimension", cert.sum_of_squares)
            });
        }
    }
    Ok(Outcome::new(result, failure))
}

fn tensor(ext: &Extension, sigma: &[String], alpha: &str, lambda: &[String], beta: &str) -> Result<Outcome, CliError> {
    let parent = module_parent(ext, None, "job")?;
    let ctx = parent.ctx().clone();
    let s = setup::character(&ctx, parent.group(), sigma, "job.sigma")?;
    let l = setup::character(&ctx, parent.group(), lambda, "job.lambda")?;
    let a = setup::scalar(&ctx, alpha, "job.alpha")?;
    let b = setup::scalar(&ctx, beta, "job.beta")?;
    let split = decompose_tensor(&parent, &s, &a, &l, &b).map_err(core("job"))?;
    let summands: Vec<String> = split.summands.iter().map(|s| s.to_string()).collect();
    let result = json!({
        "scalar": split.scalar.to_string(),
        "summands": summands,
        "basis_change": render_matrix(&split.basis_change),
        "verified": split.verified,
    });
    let failure = (!split.verified).then(|| "the basis change does not block-diagonalize the action".to_string());
    Ok(Outcome::new(result, failure))
}

fn iso_json(v: &IsoVerdict) -> Value {
    match v {
        IsoVerdict::Yes(_) => json!("yes"),
        IsoVerdict::No(r) => json!(format!("no: {r}")),
        IsoVerdict::Undecided => json!("undecided"),
    }
}

fn indecomposable_json(v: &Indecomposability) -> Value {
    match v {
        Indecomposability::Yes => json!("yes"),
        Indecomposability::No { kernel, image } => json!(format!("no: splits as {} + {}", kernel.dim(), image.dim())),
        Indecomposability::Undecided => json!("undecided"),
    }
}

/// The module M(λ)/I·M(λ) predicted for a standard ideal, when it is simple
/// to state.
fn expected_verma_quotient(
    parent: &ModuleParent,
    form: &IdealForm,
    lambda: &hopf_ore::group::Character,
) -> Option<SimpleSpec> {
    let ctx = parent.ctx();
    match form {
        IdealForm::XnOnly(n) if parent.chi_order() == Some(*n as u64) => {
            Some(SimpleSpec::BlockS(lambda.clone(), ctx.zero()))
        }
        IdealForm::Skew(n, beta) => {
            let gamma = beta * &(&ctx.one() - &lambda.eval(parent.a()).pow(*n as i64));
            Some(SimpleSpec::BlockS(lambda.clone(), gamma))
        }
        _ => None,
    }
}

fn verma_job(
    ext: &Extension,
    lambda: &[String],
    quotient: Option<&IdealSpec>,
    betas: Option<&[String]>,
) -> Result<Outcome, CliError> {
    let ore_parent = module_parent(ext, None, "job")?;
    let ctx = ore_parent.ctx().clone();
    let lam = setup::character(&ctx, ore_parent.group(), lambda, "job.lambda")?;
    let v = verma(&ore_parent, &lam).map_err(core("job.lambda"))?;
    let mut failures: Vec<String> = Vec::new();

    let j = v.j_lambda();
    let j_max = v.is_maximal(&j);
    let l = v.quotient(&j, &ore_parent).map_err(core("job"))?;
    let j_iso = match &l {
        Some(m) => is_isomorphic(m, &realize(&ore_parent, &SimpleSpec::OneDim(lam.clone())).map_err(core("job"))?)
            .map_err(core("job"))?,
        None => IsoVerdict::Undecided,
    };
    if !j_max {
        failures.push(format!("J(lambda) = {j} is not maximal"));
    }
    if !j_iso.is_yes() {
        failures.push("M(lambda)/J(lambda) is not isomorphic to V_lambda".into());
    }
    let mut maximal = vec![json!({
        "submodule": "J(lambda)",
        "canonical_form": j.to_string(),
        "maximal": j_max,
        "quotient_isomorphic_to": "V_lambda",
        "isomorphic": iso_json(&j_iso),
    })];

    let default_betas = vec!["1".to_string()];
    let betas: &[String] = match (betas, ore_parent.chi_order()) {
        (Some(b), _) => b,
        (None, Some(_)) => &default_betas,
        (None, None) => &[],
    };
    for (i, b) in betas.iter().enumerate() {
        let path = format!("job.betas[{i}]");
        let beta = setup::scalar(&ctx, b, &path)?;
        if beta.is_zero() {
            return Err(CliError::invalid(path, "beta must be nonzero"));
        }
        let jb = v.j_beta(&beta).map_err(core(&path))?;
        let max = v.is_maximal(&jb);
        let target = realize(&ore_parent, &SimpleSpec::BlockS(lam.clone(), beta.clone())).map_err(core(&path))?;
        let iso = match v.quotient(&jb, &ore_parent).map_err(core(&path))? {
            Some(m) => is_isomorphic(&m, &target).map_err(core(&path))?,
            None => IsoVerdict::Undecided,
        };
        if !max {
            failures.push(format!("J_{beta}(lambda) is not maximal"));
        }
        if !iso.is_yes() {
            failures.push(format!("M(lambda)/J_{beta}(lambda) is not isomorphic to V(lambda, {beta})"));
        }
        maximal.push(json!({
            "submodule": format!("J_beta(lambda), beta = {beta}"),
            "canonical_form": jb.to_string(),
            "maximal": max,
            "quotient_isomorphic_to": format!("V(lambda, {beta})"),
            "isomorphic": iso_json(&iso),
        }));
    }

    let mut result = json!({ "lambda": lam.to_string(), "maximal_submodules": maximal });
    if let Some(spec) = quotient {
        let (form, q) = standard_quotient(ext, spec, "job.quotient")?;
        let q = Arc::new(q);
        let qparent = ModuleParent::from_quotient(q.clone()).map_err(core("job.quotient"))?;
        let qlam = setup::character(&ctx, qparent.group(), lambda, "job.lambda")?;
        let outcome = match verma_quotient_mod_ideal(&qlam, &q).map_err(core("job.quotient"))? {
            VermaQuotient::Zero => json!({ "form": form.to_string(), "module": "zero" }),
            VermaQuotient::Module(m) => {
                let valid = validate_module(&m).map_err(core("job"))?.passed();
                let indec = is_indecomposable(&m).map_err(core("job"))?;
                let simple = match is_simple(&m) {
                    Ok(Simplicity::Yes) => json!("yes"),
                    Ok(Simplicity::No(w)) => json!(format!("no: submodule of dimension {}", w.dim())),
                    Ok(Simplicity::Undecided) | Err(_) => json!("undecided"),
                };
                if !valid {
                    failures.push("the quotient is not annihilated by the ideal".into());
                }
                if indec != Indecomposability::Yes {
                    failures.push("the quotient is not certified indecomposable".into());
                }
                let mut out = json!({
                    "form": form.to_string(),
                    "module": module_json(&m),
                    "valid": valid,
                    "indecomposable": indecomposable_json(&indec),
                    "simple": simple,
                });
                if let Some(expected) = expected_verma_quotient(&qparent, &form, &qlam) {
                    let target = realize(&qparent, &expected).map_err(core("job"))?;
                    let iso = is_isomorphic(&m, &target).map_err(core("job"))?;
                    if !iso.is_yes() {
                        failures.push(format!("the quotient is not isomorphic to {expected}"));
                    }
                    out["expected"] = json!(expected.to_string());
                    out["isomorphic_to_expected"] = iso_json(&iso);
                }
                out
            }
        };
        result["ideal_quotient"] = outcome;
    }
    Ok(Outcome::new(result, failures.into_iter().next()))
}
