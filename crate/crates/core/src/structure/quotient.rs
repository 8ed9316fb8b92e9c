use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};
use crate::group::{AbelianGroup, GroupElement};
use crate::hopf::{
    check_hopf_axioms, render, AxiomReport, HElement, HopfCase, HopfOre, HopfStructure, Monomial, TensorElement,
};

/// The Hopf ideals I of H that give rank-one quotients H/I.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealForm {
    /// I = 0.
    Zero,
    /// I = ⟨xⁿ⟩.
    XnOnly(u32),
    /// I = ⟨xⁿ, 1 − aⁿ⟩.
    XnAndGroup(u32),
    /// I = ⟨xⁿ − β(1 − aⁿ)⟩ with β ≠ 0.
    Skew(u32, FieldElement),
    /// I = ⟨x^p − βx − γ(1 − a^p)⟩ in characteristic p with θ(a) = 1.
    PowerP { beta: FieldElement, gamma: FieldElement },
}

impl fmt::Display for IdealForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealForm::Zero => write!(f, "0"),
            IdealForm::XnOnly(n) => write!(f, "<x^{n}>"),
            IdealForm::XnAndGroup(n) => write!(f, "<x^{n}, 1 - a^{n}>"),
            IdealForm::Skew(n, b) => write!(f, "<x^{n} - ({b})(1 - a^{n})>"),
            IdealForm::PowerP { beta, gamma } => write!(f, "<x^p - ({beta})x - ({gamma})(1 - a^p)>"),
        }
    }
}

impl IdealForm {
    pub fn kind(&self) -> &'static str {
        match self {
            IdealForm::Zero => "zero",
            IdealForm::XnOnly(_) => "xn_only",
            IdealForm::XnAndGroup(_) => "xn_and_group",
            IdealForm::Skew(..) => "skew",
            IdealForm::PowerP { .. } => "power_p",
        }
    }
}

/// Classifies ⟨xⁿ − β(1 − aⁿ)⟩ into one of the forms above, checking
/// n ≤ |θ| and n | |θ|.
pub fn ideal_form(h: &HopfOre, n: u32, beta: &FieldElement) -> Result<IdealForm> {
    let order = h.q().root_of_unity_order();
    let m = match order {
        Some(m) if m >= 2 => m,
        _ => return Ok(IdealForm::Zero),
    };
    if n as u64 != m {
        return Err(Error::IdealConstraint(format!("q = {} has order {m}, not {n}", h.q())));
    }
    let chi_order = h.theta().exact_order();
    match chi_order {
        Some(s) if (n as u64) > s => {
            return Err(Error::IdealConstraint(format!("n = {n} exceeds the character order {s}")))
        }
        Some(s) if s % n as u64 != 0 => {
            return Err(Error::IdealConstraint(format!("n = {n} does not divide the character order {s}")))
        }
        _ => {}
    }
    let grp = h.group();
    let an = grp.pow(h.a(), n as i64);
    if beta.is_zero() || an.is_identity() {
        return Ok(IdealForm::XnOnly(n));
    }
    if chi_order == Some(n as u64) {
        Ok(IdealForm::Skew(n, beta.clone()))
    } else {
        Ok(IdealForm::XnAndGroup(n))
    }
}

/// The characteristic-p family ⟨x^p − βx − γ(1 − a^p)⟩ for θ(a) = 1.
pub fn power_p_form(h: &HopfOre, beta: &FieldElement, gamma: &FieldElement) -> Result<IdealForm> {
    let p = h.ctx().characteristic();
    if p == 0 || !h.q().is_one() {
        return Err(Error::CaseMismatch {
            expected: "characteristic p with q = 1",
            found: format!("{} in characteristic {p}", h.case()),
        });
    }
    let grp = h.group();
    let ap_is_a = grp.pow(h.a(), p as i64) == *h.a();
    match h.case() {
        HopfCase::Two if !beta.is_zero() && !ap_is_a => {
            Err(Error::IdealConstraint("beta != 0 requires a^p = a".into()))
        }
        HopfCase::Three if !beta.is_one() && !ap_is_a => {
            Err(Error::IdealConstraint("beta != 1 requires a^p = a".into()))
        }
        HopfCase::Three if h.a().is_identity() => Err(Error::IdealConstraint("a must differ from 1".into())),
        _ => Ok(IdealForm::PowerP { beta: beta.clone(), gamma: gamma.clone() }),
    }
}

/// The rewriting data of a principal ideal ⟨xⁿ − tail⟩, optionally together
/// with 1 − c for a central group element c.
#[derive(Debug, Clone)]
struct Rewriter {
    n: Option<u32>,
    tail: HElement,
    collapse: Option<(GroupElement, u64)>,
}

/// H/I with basis {g·xⁱ : g in the effective group, i < n}.
#[derive(Debug, Clone)]
pub struct QuotientHopf {
    parent: Arc<HopfOre>,
    form: Option<IdealForm>,
    rule: Rewriter,
}

impl QuotientHopf {
    pub fn new(parent: Arc<HopfOre>, form: IdealForm) -> Result<Self> {
        let grp = parent.group().clone();
        let ctx = parent.ctx().clone();
        let one = HElement::term(Monomial::new(grp.identity(), 0), ctx.one());
        let grouplike = |g: &GroupElement| HElement::term(Monomial::new(g.clone(), 0), ctx.one());
        let rule = match &form {
            IdealForm::Zero => Rewriter { n: None, tail: HElement::zero(), collapse: None },
            IdealForm::XnOnly(n) => Rewriter { n: Some(*n), tail: HElement::zero(), collapse: None },
            IdealForm::Skew(n, beta) => {
                let an = grp.pow(parent.a(), *n as i64);
                Rewriter { n: Some(*n), tail: one.sub(&grouplike(&an)).scale(beta), collapse: None }
            }
            IdealForm::XnAndGroup(n) => {
                let an = grp.pow(parent.a(), *n as i64);
                let ord = grp
                    .element_order(&an, u64::MAX)
                    .ok_or_else(|| Error::QuotientDescent(format!("a^{n} has infinite order")))?;
                if !parent.theta().eval(&an).is_one() {
                    return Err(Error::QuotientDescent(format!("theta(a^{n}) != 1")));
                }
                if !parent.alpha().eval(&an).is_zero() {
                    return Err(Error::QuotientDescent(format!("alpha(a^{n}) != 0")));
                }
                Rewriter { n: Some(*n), tail: HElement::zero(), collapse: Some((an, ord)) }
            }
            IdealForm::PowerP { beta, gamma } => {
                let p = ctx.characteristic();
                if p == 0 {
                    return Err(Error::CaseMismatch { expected: "positive characteristic", found: "0".into() });
                }
                let ap = grp.pow(parent.a(), p as i64);
                let x = HElement::term(Monomial::new(grp.identity(), 1), ctx.one());
                let tail = x.scale(beta).add(&one.sub(&grouplike(&ap)).scale(gamma));
                Rewriter { n: Some(p as u32), tail, collapse: None }
            }
        };
        Ok(QuotientHopf { parent, form: Some(form), rule })
    }

    /// H/⟨xⁿ − tail⟩ for an arbitrary tail of degree < n. The result is only
    /// a Hopf algebra when the generator spans a Hopf ideal; use it to test
    /// candidate generators.
    pub fn from_generator(parent: Arc<HopfOre>, n: u32, tail: HElement) -> Result<Self> {
        if tail.keys().any(|m| m.degree >= n) {
            return Err(Error::IdealConstraint(format!("tail must have degree below {n}")));
        }
        Ok(QuotientHopf { parent, form: None, rule: Rewriter { n: Some(n), tail, collapse: None } })
    }

    pub fn parent(&self) -> &Arc<HopfOre> {
        &self.parent
    }

    /// The ideal form, `None` for a quotient built from a custom generator.
    pub fn form(&self) -> Option<&IdealForm> {
        self.form.as_ref()
    }

    /// Exponent of the reduction x^n → tail, `None` for the zero ideal.
    pub fn reduction_exponent(&self) -> Option<u32> {
        self.rule.n
    }

    /// The element x^n − tail.
    pub fn generator(&self) -> Option<HElement> {
        self.rule.n.map(|n| self.parent.x_pow(n).sub(&self.rule.tail))
    }

    /// Generators of the ideal: xⁿ − tail, and 1 − c when a central
    /// group-like c is collapsed.
    pub fn ideal_generators(&self) -> Vec<HElement> {
        let mut out: Vec<HElement> = self.generator().into_iter().collect();
        if let Some((c, _)) = &self.rule.collapse {
            let one = self.parent.one();
            out.push(one.sub(&self.parent.grouplike(c)));
        }
        out
    }

    /// Group elements of the effective group (canonical representatives).
    pub fn effective_group_elements(&self) -> Result<Vec<GroupElement>> {
        let all = self.parent.group().elements()?;
        Ok(all.into_iter().filter(|g| self.canonical_group(g) == *g).collect())
    }

    pub fn effective_group_order(&self) -> Option<u64> {
        let order = self.parent.group().order()?;
        Some(match &self.rule.collapse {
            Some((_, ord)) => order / ord,
            None => order,
        })
    }

    pub fn dimension(&self) -> Option<u64> {
        Some(self.effective_group_order()? * self.rule.n? as u64)
    }

    pub fn basis(&self) -> Result<Vec<Monomial>> {
        let n = self.rule.n.ok_or(Error::InfiniteDimensional)?;
        let elems = self.effective_group_elements()?;
        Ok((0..n).flat_map(|d| elems.iter().map(move |g| Monomial::new(g.clone(), d))).collect())
    }

    pub fn check_hopf_axioms(&self) -> Result<AxiomReport> {
        Ok(check_hopf_axioms(self, &self.basis()?))
    }

    fn canon_terms(&self, u: &HElement) -> HElement {
        if self.rule.collapse.is_none() {
            return u.clone();
        }
        u.map_keys(|m| Monomial::new(self.canonical_group(&m.group), m.degree))
    }
}

impl HopfStructure for QuotientHopf {
    fn ctx(&self) -> &FieldCtx {
        self.parent.ctx()
    }

    fn group(&self) -> &AbelianGroup {
        self.parent.group()
    }

    fn grouplike_a(&self) -> &GroupElement {
        self.parent.a()
    }

    fn canonical_group(&self, g: &GroupElement) -> GroupElement {
        match &self.rule.collapse {
            None => g.clone(),
            Some((c, ord)) => {
                let grp = self.parent.group();
                (0..*ord as i64).map(|k| grp.mul(g, &grp.pow(c, k))).min().expect("ord >= 1")
            }
        }
    }

    fn mul(&self, u: &HElement, v: &HElement) -> HElement {
        self.reduce(&self.parent.mul(u, v))
    }

    fn reduce(&self, u: &HElement) -> HElement {
        let u = self.canon_terms(u);
        let Some(n) = self.rule.n else {
            return u;
        };
        if u.keys().all(|m| m.degree < n) {
            return u;
        }
        let mut out = HElement::zero();
        for (m, c) in &u {
            if m.degree < n {
                out.add_term(m.clone(), c.clone());
            } else if !self.rule.tail.is_zero() {
                let head = HElement::term(Monomial::new(m.group.clone(), m.degree - n), c.clone());
                let rewritten = self.reduce(&self.parent.mul(&head, &self.rule.tail));
                out = out.add(&rewritten);
            }
        }
        out
    }

    fn coproduct_powers(&self, max: u32) -> Vec<TensorElement> {
        self.parent.coproduct_powers(max).iter().map(|t| self.reduce_tensor(t)).collect()
    }

    fn antipode_powers(&self, max: u32) -> Vec<HElement> {
        self.parent.antipode_powers(max).iter().map(|s| self.reduce(s)).collect()
    }
}

/// Builds H/I after checking the form against H.
pub fn make_quotient(h: &Arc<HopfOre>, form: IdealForm) -> Result<QuotientHopf> {
    match &form {
        IdealForm::Zero => {}
        IdealForm::XnOnly(n) | IdealForm::XnAndGroup(n) | IdealForm::Skew(n, _) => {
            let beta = match &form {
                IdealForm::Skew(_, b) => b.clone(),
                IdealForm::XnAndGroup(_) => h.ctx().one(),
                _ => h.ctx().zero(),
            };
            let expected = ideal_form(h, *n, &beta)?;
            let consistent = form.kind() == expected.kind();
            if !consistent {
                return Err(Error::IdealConstraint(format!("{form} is not admissible here; expected {expected}")));
            }
        }
        IdealForm::PowerP { beta, gamma } => {
            power_p_form(h, beta, gamma)?;
        }
    }
    QuotientHopf::new(h.clone(), form)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealCheck {
    Counit,
    Coproduct,
    Antipode,
    TwoSided,
}

impl fmt::Display for IdealCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IdealCheck::Counit => "counit",
            IdealCheck::Coproduct => "coproduct",
            IdealCheck::Antipode => "antipode",
            IdealCheck::TwoSided => "two-sided closure",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealFailure {
    pub check: IdealCheck,
    pub generator: String,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealReport {
    pub generators: Vec<String>,
    pub failure: Option<IdealFailure>,
}

impl IdealReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks ε(w) = 0, Δ(w) ∈ I⊗H + H⊗I and S(w) ∈ I for each generator w of
/// the ideal, and that u·w·v reduces to zero for basis elements u, v of
/// degree ≤ `degree`, which certifies that the reduction is the quotient map.
pub fn check_ideal(q: &QuotientHopf, degree: u32) -> Result<IdealReport> {
    let parent = &q.parent;
    let gens = q.ideal_generators();
    let names: Vec<String> = gens.iter().map(render).collect();
    let fail = |check, w: &HElement, witness: String| {
        Ok(IdealReport {
            generators: names.clone(),
            failure: Some(IdealFailure { check, generator: render(w), witness }),
        })
    };
    let basis = parent.basis(degree, None)?;
    for w in &gens {
        let eps = parent.counit(w);
        if !eps.is_zero() {
            return fail(IdealCheck::Counit, w, format!("epsilon = {eps}"));
        }
        let delta = q.reduce_tensor(&parent.coproduct(w));
        if !delta.is_zero() {
            return fail(IdealCheck::Coproduct, w, format!("{} surviving terms", delta.len()));
        }
        let s = q.reduce(&parent.antipode(w));
        if !s.is_zero() {
            return fail(IdealCheck::Antipode, w, render(&s));
        }
        let bad: Vec<Option<String>> = basis
            .par_iter()
            .map(|u| {
                let u = HElement::term(u.clone(), parent.ctx().one());
                let uw = parent.mul(&u, w);
                basis.iter().find_map(|v| {
                    let v = HElement::term(v.clone(), parent.ctx().one());
                    let r = q.reduce(&parent.mul(&uw, &v));
                    (!r.is_zero()).then(|| format!("({})·w·({}) reduces to {}", render(&u), render(&v), render(&r)))
                })
            })
            .collect();
        if let Some(w2) = bad.into_iter().flatten().next() {
            return fail(IdealCheck::TwoSided, w, w2);
        }
    }
    Ok(IdealReport { generators: names, failure: None })
}

/// [`check_ideal`] for the quotient defined by `form`.
pub fn check_hopf_ideal(h: &Arc<HopfOre>, form: &IdealForm, degree: u32) -> Result<IdealReport> {
    let q = QuotientHopf::new(h.clone(), form.clone())?;
    check_ideal(&q, degree)
}
