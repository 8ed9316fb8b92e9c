use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::{enumerate_characters, Character};
use crate::structure::IdealForm;

use super::homs::{is_isomorphic, IsoVerdict};
use super::module::{realize, validate_module, ModuleParent, ModuleRep, SimpleSpec};
use super::weights::{is_simple, Simplicity};

/// Simple modules that are not listed one by one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SimpleFamily {
    /// V_λ for every character λ of G.
    AllOneDimensional,
    /// V(σ, β) for every β ≠ 0, one class [σ] ∈ Ĝ/⟨χ⟩ per listed
    /// representative; `None` when Ĝ is not enumerated.
    Blocks(Option<Vec<Character>>),
}

#[derive(Debug, Clone)]
pub struct SimpleClassification {
    pub parent: ModuleParent,
    /// An explicit complete list of finite-dimensional simples when the
    /// list is finite.
    pub simples: Vec<SimpleSpec>,
    pub families: Vec<SimpleFamily>,
}

/// Finite-dimensional simple modules: V_λ, and V(λ, β) when |χ| is finite,
/// cut down by the ideal for a quotient parent.
pub fn classify_simples(parent: &ModuleParent) -> Result<SimpleClassification> {
    let chi = parent.chi();
    let a = parent.a();
    let Some(q) = parent.quotient() else {
        if !parent.group().is_finite() {
            let mut families = vec![SimpleFamily::AllOneDimensional];
            if parent.chi_order().is_some() {
                families.push(SimpleFamily::Blocks(None));
            }
            return Ok(SimpleClassification { parent: parent.clone(), simples: Vec::new(), families });
        }
        let chars = enumerate_characters(parent.ctx(), parent.group())?;
        let mut families = Vec::new();
        if parent.chi_order().is_some() {
            families.push(SimpleFamily::Blocks(Some(class_representatives(&chars, chi)?)));
        }
        let simples = chars.into_iter().map(SimpleSpec::OneDim).collect();
        return Ok(SimpleClassification { parent: parent.clone(), simples, families });
    };
    let form = q.form().ok_or_else(|| Error::Hypothesis("the ideal must be one of the standard forms".into()))?;
    let chars = enumerate_characters(parent.ctx(), parent.group())?;
    let an_trivial = |l: &Character, n: u32| l.eval(a).pow(n as i64).is_one();
    let simples = match form {
        IdealForm::Zero | IdealForm::XnOnly(_) => chars.into_iter().map(SimpleSpec::OneDim).collect(),
        IdealForm::XnAndGroup(n) => chars.into_iter().filter(|l| an_trivial(l, *n)).map(SimpleSpec::OneDim).collect(),
        IdealForm::Skew(n, beta) => {
            let mut out: Vec<SimpleSpec> =
                chars.iter().filter(|l| an_trivial(l, *n)).cloned().map(SimpleSpec::OneDim).collect();
            let blocks: Vec<Character> = chars.iter().filter(|l| !an_trivial(l, *n)).cloned().collect();
            for sigma in class_representatives(&blocks, chi)? {
                let gamma = beta * &(parent.ctx().one() - sigma.eval(a).pow(*n as i64));
                out.push(SimpleSpec::BlockS(sigma, gamma));
            }
            out
        }
        IdealForm::PowerP { .. } => {
            return Err(Error::CaseMismatch { expected: "Case1", found: form.to_string() });
        }
    };
    Ok(SimpleClassification { parent: parent.clone(), simples, families: Vec::new() })
}

fn class_representatives(chars: &[Character], chi: &Character) -> Result<Vec<Character>> {
    let mut reps: Vec<Character> =
        chars.iter().map(|l| l.class_of(chi).map(|c| c.representative().clone())).collect::<Result<_>>()?;
    reps.sort();
    reps.dedup();
    Ok(reps)
}

/// Evidence for a finite classification: each listed module is a valid
/// simple module, the list is pairwise non-isomorphic, every character
/// outside the list fails the annihilation test, and Σ dim² ≤ dim H′.
#[derive(Debug, Clone)]
pub struct ClassificationCertificate {
    pub modules: Vec<ModuleRep>,
    pub valid: Vec<bool>,
    pub simple: Vec<bool>,
    /// Pairs (i, j), i < j, not certified non-isomorphic.
    pub isomorphic_or_undecided: Vec<(usize, usize)>,
    /// One-dimensional modules V_λ that are modules over the parent but
    /// missing from the list.
    pub missing_one_dimensional: Vec<Character>,
    pub sum_of_squares: u64,
    pub algebra_dimension: Option<u64>,
}

impl ClassificationCertificate {
    pub fn passed(&self) -> bool {
        self.valid.iter().all(|&v| v)
            && self.simple.iter().all(|&v| v)
            && self.isomorphic_or_undecided.is_empty()
            && self.missing_one_dimensional.is_empty()
            && self.algebra_dimension.is_none_or(|d| self.sum_of_squares <= d)
    }
}

pub fn certify_classification(c: &SimpleClassification) -> Result<ClassificationCertificate> {
    let parent = &c.parent;
    let modules: Vec<ModuleRep> = c.simples.iter().map(|s| realize(parent, s)).collect::<Result<_>>()?;
    let checks: Vec<(bool, bool)> = modules
        .par_iter()
        .map(|m| {
            let valid = validate_module(m)?.passed();
            let simple = is_simple(m)? == Simplicity::Yes;
            Ok((valid, simple))
        })
        .collect::<Result<_>>()?;
    let pairs: Vec<(usize, usize)> =
        (0..modules.len()).flat_map(|i| (i + 1..modules.len()).map(move |j| (i, j))).collect();
    let verdicts: Vec<((usize, usize), IsoVerdict)> = pairs
        .par_iter()
        .map(|&(i, j)| is_isomorphic(&modules[i], &modules[j]).map(|v| ((i, j), v)))
        .collect::<Result<_>>()?;
    let isomorphic_or_undecided = verdicts.into_iter().filter(|(_, v)| !v.is_no()).map(|(p, _)| p).collect();
    let mut missing = Vec::new();
    if parent.group().is_finite() {
        for l in enumerate_characters(parent.ctx(), parent.group())? {
            let spec = SimpleSpec::OneDim(l.clone());
            if !c.simples.contains(&spec) && validate_module(&realize(parent, &spec)?)?.passed() {
                missing.push(l);
            }
        }
    }
    let sum_of_squares = modules.iter().map(|m| (m.dim() as u64).pow(2)).sum();
    let algebra_dimension = parent.quotient().and_then(|q| q.dimension());
    Ok(ClassificationCertificate {
        valid: checks.iter().map(|c| c.0).collect(),
        simple: checks.iter().map(|c| c.1).collect(),
        modules,
        isomorphic_or_undecided,
        missing_one_dimensional: missing,
        sum_of_squares,
        algebra_dimension,
    })
}
