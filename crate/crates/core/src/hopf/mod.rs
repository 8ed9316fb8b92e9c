//! Hopf-Ore extensions kG(θ, a, δ) of abelian group algebras.
//!
//! The stored convention is `x·g = θ(g)·g·x + α(g)·g·(1 − a)` with
//! `Δ(x) = x⊗a + 1⊗x`, `ε(x) = 0` and `S(x) = −x·a⁻¹`. Elements are kept in the
//! normal form Σ c·g·xⁱ (group part left).

mod checks;
mod closed_form;

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};
use crate::group::{AbelianGroup, Character, Cocycle, GroupElement};
use crate::lincomb::LinComb;

pub use checks::{
    check_associativity, check_hopf_axioms, check_multiplicativity, Axiom, AxiomFailure, AxiomReport, GradingReport,
    OreCompatFailure, OreCompatReport,
};
pub use closed_form::{ClosedFormReport, PowerPCoproduct};

/// A basis element g·xⁱ.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub group: GroupElement,
    pub degree: u32,
}

impl Monomial {
    pub fn new(group: GroupElement, degree: u32) -> Self {
        Monomial { group, degree }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.group.is_identity(), self.degree) {
            (true, 0) => write!(f, "1"),
            (true, 1) => write!(f, "x"),
            (true, d) => write!(f, "x^{d}"),
            (false, 0) => write!(f, "{}", self.group),
            (false, 1) => write!(f, "{}*x", self.group),
            (false, d) => write!(f, "{}*x^{d}", self.group),
        }
    }
}

/// An element of H, a finite combination of monomials g·xⁱ.
pub type HElement = LinComb<Monomial>;
/// An element of H⊗H.
pub type TensorElement = LinComb<(Monomial, Monomial)>;
/// An element of H⊗H⊗H.
pub type Tensor3Element = LinComb<(Monomial, Monomial, Monomial)>;

/// Highest x-degree in the support, `None` for 0.
pub fn degree(u: &HElement) -> Option<u32> {
    u.keys().map(|m| m.degree).max()
}

fn render_coeff(c: &FieldElement, unit: bool) -> (bool, String) {
    let s = c.to_string();
    if unit && s == "1" {
        return (false, String::new());
    }
    if unit && s == "-1" {
        return (true, String::new());
    }
    let compound = s.trim_start_matches('-').contains([' ', '+']);
    if compound {
        (false, format!("({s})"))
    } else if let Some(rest) = s.strip_prefix('-') {
        (true, rest.to_string())
    } else {
        (false, s)
    }
}

fn join_terms(terms: Vec<(bool, String)>) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (neg, body)) in terms.into_iter().enumerate() {
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

fn display_order(a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    b.degree.cmp(&a.degree).then_with(|| a.group.cmp(&b.group))
}

/// Renders an element with terms in descending x-degree.
pub fn render(u: &HElement) -> String {
    let mut terms: Vec<(&Monomial, &FieldElement)> = u.iter().collect();
    terms.sort_by(|a, b| display_order(a.0, b.0));
    join_terms(
        terms
            .into_iter()
            .map(|(m, c)| {
                let is_one = m.group.is_identity() && m.degree == 0;
                let (neg, coeff) = render_coeff(c, !is_one);
                let body = if is_one {
                    coeff
                } else if coeff.is_empty() {
                    m.to_string()
                } else {
                    format!("{coeff}*{m}")
                };
                (neg, body)
            })
            .collect(),
    )
}

/// Renders a tensor with factors separated by `⊗`.
pub fn render_tensor(t: &TensorElement) -> String {
    let mut terms: Vec<(&(Monomial, Monomial), &FieldElement)> = t.iter().collect();
    terms.sort_by(|a, b| display_order(&a.0 .0, &b.0 .0).then_with(|| display_order(&a.0 .1, &b.0 .1)));
    join_terms(
        terms
            .into_iter()
            .map(|((l, r), c)| {
                let (neg, coeff) = render_coeff(c, true);
                let body = if coeff.is_empty() { format!("{l}⊗{r}") } else { format!("{coeff}*{l}⊗{r}") };
                (neg, body)
            })
            .collect(),
    )
}

/// Which of the three normal forms the extension falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HopfCase {
    /// θ(a) ≠ 1; after normalization α = 0.
    One,
    /// θ(a) = 1 and α(a) = 0.
    Two,
    /// θ(a) = 1 and α(a) ≠ 0; after normalization α(a) = 1.
    Three,
}

impl fmt::Display for HopfCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = match self {
            HopfCase::One => 1,
            HopfCase::Two => 2,
            HopfCase::Three => 3,
        };
        write!(f, "Case{n}")
    }
}

/// The substitution applied to the generator x at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Normalization {
    Identity,
    /// x′ = x − c·(1 − a)
    Shift(FieldElement),
    /// x′ = c⁻¹·x
    Rescale(FieldElement),
}

/// Operations shared by H and its finite-dimensional quotients. Elements are
/// expected in reduced form; every method returns reduced elements.
pub trait HopfStructure: Sync {
    fn ctx(&self) -> &FieldCtx;
    /// The group of the underlying extension (coordinates of group-likes).
    fn group(&self) -> &AbelianGroup;
    fn grouplike_a(&self) -> &GroupElement;
    /// Canonical representative of a group element.
    fn canonical_group(&self, g: &GroupElement) -> GroupElement {
        g.clone()
    }
    fn mul(&self, u: &HElement, v: &HElement) -> HElement;
    fn reduce(&self, u: &HElement) -> HElement;
    /// Δ(xⁱ) for i in 0..=max.
    fn coproduct_powers(&self, max: u32) -> Vec<TensorElement>;
    /// S(xⁱ) for i in 0..=max.
    fn antipode_powers(&self, max: u32) -> Vec<HElement>;

    fn one(&self) -> HElement {
        self.monomial(&self.group().identity(), 0)
    }

    fn monomial(&self, g: &GroupElement, degree: u32) -> HElement {
        HElement::term(Monomial::new(self.canonical_group(g), degree), self.ctx().one())
    }

    fn x_pow(&self, n: u32) -> HElement {
        self.reduce(&self.monomial(&self.group().identity(), n))
    }

    fn grouplike(&self, g: &GroupElement) -> HElement {
        self.monomial(g, 0)
    }

    fn scalar(&self, c: &FieldElement) -> HElement {
        self.one().scale(c)
    }

    fn power(&self, u: &HElement, n: u32) -> HElement {
        (0..n).fold(self.one(), |acc, _| self.mul(&acc, u))
    }

    fn tables(&self, max: u32) -> StructureTables {
        StructureTables { delta: self.coproduct_powers(max), antipode: self.antipode_powers(max) }
    }

    fn shift_group(&self, g: &GroupElement, u: &HElement) -> HElement {
        let grp = self.group();
        u.map_keys(|m| Monomial::new(self.canonical_group(&grp.mul(g, &m.group)), m.degree))
    }

    fn counit(&self, u: &HElement) -> FieldElement {
        u.iter().filter(|(m, _)| m.degree == 0).fold(self.ctx().zero(), |acc, (_, c)| acc + c)
    }

    fn coproduct_with(&self, tables: &StructureTables, u: &HElement) -> TensorElement {
        let grp = self.group();
        let mut out = TensorElement::zero();
        for (m, c) in u {
            for ((l, r), d) in &tables.delta[m.degree as usize] {
                let l2 = Monomial::new(self.canonical_group(&grp.mul(&m.group, &l.group)), l.degree);
                let r2 = Monomial::new(self.canonical_group(&grp.mul(&m.group, &r.group)), r.degree);
                out.add_term((l2, r2), c * d);
            }
        }
        out
    }

    fn coproduct(&self, u: &HElement) -> TensorElement {
        let tables = self.tables(degree(u).unwrap_or(0));
        self.coproduct_with(&tables, u)
    }

    fn antipode_with(&self, tables: &StructureTables, u: &HElement) -> HElement {
        let grp = self.group();
        let mut out = HElement::zero();
        for (m, c) in u {
            let ginv = self.grouplike(&grp.inv(&m.group));
            out.add_scaled(&self.mul(&tables.antipode[m.degree as usize], &ginv), c);
        }
        out
    }

    fn antipode(&self, u: &HElement) -> HElement {
        let tables = self.tables(degree(u).unwrap_or(0));
        self.antipode_with(&tables, u)
    }

    /// (u⊗v)(u′⊗v′) = uu′⊗vv′, extended bilinearly.
    fn tensor_mul(&self, s: &TensorElement, t: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for ((l1, r1), c1) in s {
            let l1 = HElement::term(l1.clone(), self.ctx().one());
            let r1 = HElement::term(r1.clone(), self.ctx().one());
            for ((l2, r2), c2) in t {
                let left = self.mul(&l1, &HElement::term(l2.clone(), self.ctx().one()));
                let right = self.mul(&r1, &HElement::term(r2.clone(), self.ctx().one()));
                let c = c1 * c2;
                for (a, ca) in &left {
                    for (b, cb) in &right {
                        out.add_term((a.clone(), b.clone()), &(&c * ca) * cb);
                    }
                }
            }
        }
        out
    }

    /// Applies `reduce` to both tensor factors.
    fn reduce_tensor(&self, t: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for ((l, r), c) in t {
            let l = self.reduce(&HElement::term(l.clone(), self.ctx().one()));
            let r = self.reduce(&HElement::term(r.clone(), self.ctx().one()));
            for (a, ca) in &l {
                for (b, cb) in &r {
                    out.add_term((a.clone(), b.clone()), &(c * ca) * cb);
                }
            }
        }
        out
    }
}

/// Δ(xⁱ) and S(xⁱ) up to a fixed degree, computed once per check.
#[derive(Debug, Clone)]
pub struct StructureTables {
    pub delta: Vec<TensorElement>,
    pub antipode: Vec<HElement>,
}

/// The Hopf-Ore extension kG(θ, a, δ) with δ(g) = α(g)·g·(1 − a).
#[derive(Debug, Clone)]
pub struct HopfOre {
    ctx: FieldCtx,
    group: AbelianGroup,
    theta: Character,
    a: GroupElement,
    alpha: Cocycle,
    q: FieldElement,
    case: HopfCase,
    normalization: Normalization,
    mutated_antipode: bool,
}

impl HopfOre {
    /// Builds H from validated data and normalizes x: in Case 1 the
    /// cocycle is shifted to zero, in Case 3 it is rescaled so α(a) = 1.
    pub fn new(theta: &Character, a: &GroupElement, alpha: &Cocycle) -> Result<Self> {
        alpha.validate()?;
        Self::new_unchecked(theta, a, alpha)
    }

    /// Like [`HopfOre::new`] but without re-validating the cocycle identities.
    pub fn new_unchecked(theta: &Character, a: &GroupElement, alpha: &Cocycle) -> Result<Self> {
        if alpha.character() != theta {
            return Err(Error::CocycleCharacterMismatch);
        }
        let group = theta.group().clone();
        if a.coords().len() != group.num_generators() {
            return Err(Error::CoordinateLength { expected: group.num_generators(), got: a.coords().len() });
        }
        let ctx = theta.ctx().clone();
        let a = group.elem(a.coords())?;
        let q = theta.eval(&a);
        let alpha_a = alpha.eval(&a);
        let one = ctx.one();
        let (case, normalization, alpha) = if q != one {
            let c = alpha_a.checked_div(&(&one - &q))?;
            let shifted = alpha.add(&Cocycle::coboundary(theta, &-&c))?;
            let norm = if c.is_zero() { Normalization::Identity } else { Normalization::Shift(c) };
            (HopfCase::One, norm, shifted)
        } else if alpha_a.is_zero() {
            (HopfCase::Two, Normalization::Identity, alpha.clone())
        } else {
            let scaled = alpha.scale(&alpha_a.inv()?);
            let norm = if alpha_a.is_one() { Normalization::Identity } else { Normalization::Rescale(alpha_a) };
            (HopfCase::Three, norm, scaled)
        };
        Ok(HopfOre { ctx, group, theta: theta.clone(), a, alpha, q, case, normalization, mutated_antipode: false })
    }

    /// A copy whose antipode uses S(x) = +x·a⁻¹, which is not an antipode.
    pub fn with_mutated_antipode(&self) -> Self {
        HopfOre { mutated_antipode: true, ..self.clone() }
    }

    pub fn theta(&self) -> &Character {
        &self.theta
    }

    pub fn a(&self) -> &GroupElement {
        &self.a
    }

    pub fn alpha(&self) -> &Cocycle {
        &self.alpha
    }

    /// q = θ(a).
    pub fn q(&self) -> &FieldElement {
        &self.q
    }

    pub fn case(&self) -> HopfCase {
        self.case
    }

    pub fn normalization(&self) -> &Normalization {
        &self.normalization
    }

    pub fn has_mutated_antipode(&self) -> bool {
        self.mutated_antipode
    }

    /// x·(k·x^m) = θ(k)·k·x^{m+1} + α(k)·k·x^m − α(k)·(k·a)·x^m
    fn left_mul_x_monomial(&self, m: &Monomial, c: &FieldElement, out: &mut HElement) {
        let th = self.theta.eval(&m.group);
        out.add_term(Monomial::new(m.group.clone(), m.degree + 1), c * &th);
        let al = self.alpha.eval(&m.group);
        if !al.is_zero() {
            let coeff = c * &al;
            out.add_term(Monomial::new(m.group.clone(), m.degree), coeff.clone());
            out.add_term(Monomial::new(self.group.mul(&m.group, &self.a), m.degree), -coeff);
        }
    }

    pub fn left_mul_x(&self, v: &HElement) -> HElement {
        let mut out = HElement::zero();
        for (m, c) in v {
            self.left_mul_x_monomial(m, c, &mut out);
        }
        out
    }

    /// Checks that both operands live over this extension's field and group.
    pub fn checked_mul(&self, u: &HElement, v: &HElement) -> Result<HElement> {
        let n = self.group.num_generators();
        for (m, c) in u.iter().chain(v.iter()) {
            if m.group.coords().len() != n || c.ctx() != &self.ctx {
                return Err(Error::ParentMismatch);
            }
        }
        Ok(HopfStructure::mul(self, u, v))
    }
}

impl HopfStructure for HopfOre {
    fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    fn group(&self) -> &AbelianGroup {
        &self.group
    }

    fn grouplike_a(&self) -> &GroupElement {
        &self.a
    }

    fn mul(&self, u: &HElement, v: &HElement) -> HElement {
        let mut out = HElement::zero();
        if u.is_zero() || v.is_zero() {
            return out;
        }
        let max = degree(u).unwrap_or(0);
        let mut lx = v.clone();
        for i in 0..=max {
            if i > 0 {
                lx = self.left_mul_x(&lx);
            }
            for (m, c) in u.iter().filter(|(m, _)| m.degree == i) {
                out.add_scaled(&self.shift_group(&m.group, &lx), c);
            }
        }
        out
    }

    fn reduce(&self, u: &HElement) -> HElement {
        u.clone()
    }

    fn coproduct_powers(&self, max: u32) -> Vec<TensorElement> {
        let e = self.group.identity();
        let one = self.ctx.one();
        let mut cur = TensorElement::term((Monomial::new(e.clone(), 0), Monomial::new(e, 0)), one);
        let mut out = vec![cur.clone()];
        for _ in 0..max {
            // (x⊗a + 1⊗x)·cur
            let mut next = TensorElement::zero();
            for ((l, r), c) in &cur {
                let mut xl = HElement::zero();
                self.left_mul_x_monomial(l, c, &mut xl);
                let ar = Monomial::new(self.group.mul(&self.a, &r.group), r.degree);
                for (m, d) in &xl {
                    next.add_term((m.clone(), ar.clone()), d.clone());
                }
                let mut xr = HElement::zero();
                self.left_mul_x_monomial(r, c, &mut xr);
                for (m, d) in &xr {
                    next.add_term((l.clone(), m.clone()), d.clone());
                }
            }
            cur = next;
            out.push(cur.clone());
        }
        out
    }

    fn antipode_powers(&self, max: u32) -> Vec<HElement> {
        let ainv = self.group.inv(&self.a);
        let x_ainv = HopfStructure::mul(self, &self.x_pow(1), &self.grouplike(&ainv));
        let sx = if self.mutated_antipode { x_ainv } else { x_ainv.neg() };
        let mut out = vec![self.one()];
        for i in 1..=max as usize {
            let next = HopfStructure::mul(self, &sx, &out[i - 1]);
            out.push(next);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn taft3() -> HopfOre {
        let k = FieldCtx::cyclotomic(3).unwrap();
        let g = AbelianGroup::cyclic(3).unwrap();
        let theta = Character::new(&k, &g, vec![k.zeta()]).unwrap();
        HopfOre::new(&theta, &g.generator(0), &Cocycle::zero(&theta)).unwrap()
    }

    #[test]
    fn case_tags() {
        assert_eq!(taft3().case(), HopfCase::One);
        let f3 = FieldCtx::prime(3).unwrap();
        let g = AbelianGroup::cyclic(3).unwrap();
        let triv = Character::trivial(&f3, &g);
        let alpha = Cocycle::new(&triv, vec![f3.one()]).unwrap();
        let h = HopfOre::new(&triv, &g.generator(0), &alpha).unwrap();
        assert_eq!(h.case(), HopfCase::Three);
        assert!(h.q().is_one());
        let k4 = FieldCtx::cyclotomic(4).unwrap();
        let z4 = AbelianGroup::cyclic(4).unwrap();
        let theta = Character::new(&k4, &z4, vec![k4.from_i64(-1)]).unwrap();
        let h = HopfOre::new(&theta, &z4.elem(&[2]).unwrap(), &Cocycle::zero(&theta)).unwrap();
        assert_eq!(h.case(), HopfCase::Two);
    }

    #[test]
    fn case_one_shift_kills_cocycle() {
        let k = FieldCtx::cyclotomic(3).unwrap();
        let g = AbelianGroup::cyclic(3).unwrap();
        let theta = Character::new(&k, &g, vec![k.zeta()]).unwrap();
        let c = k.from_i64(5);
        let alpha = Cocycle::coboundary(&theta, &c);
        let h = HopfOre::new(&theta, &g.generator(0), &alpha).unwrap();
        assert!(h.alpha().is_zero());
        assert_eq!(h.normalization(), &Normalization::Shift(c));
    }

    #[test]
    fn multiplication_examples() {
        let h = taft3();
        let g = h.group().generator(0);
        let gx = h.monomial(&g, 1);
        let prod = HopfStructure::mul(&h, &gx, &gx);
        let expected = h.monomial(&h.group().pow(&g, 2), 2).scale(&h.ctx().zeta());
        assert_eq!(prod, expected);
        assert_eq!(HopfStructure::mul(&h, &h.one(), &gx), gx);

        let f2 = FieldCtx::prime(2).unwrap();
        let z2 = AbelianGroup::cyclic(2).unwrap();
        let triv = Character::trivial(&f2, &z2);
        let alpha = Cocycle::new(&triv, vec![f2.one()]).unwrap();
        let h3 = HopfOre::new(&triv, &z2.generator(0), &alpha).unwrap();
        let a = z2.generator(0);
        let xg = HopfStructure::mul(&h3, &h3.x_pow(1), &h3.grouplike(&a));
        let expected = h3.monomial(&a, 1).add(&h3.grouplike(&a)).sub(&h3.one());
        assert_eq!(xg, expected);
    }

    #[test]
    fn coproduct_and_antipode_examples() {
        let h = taft3();
        let a = h.a().clone();
        let dx = h.coproduct(&h.x_pow(1));
        let one = h.ctx().one();
        let e = h.group().identity();
        let expected: TensorElement = [
            ((Monomial::new(e.clone(), 1), Monomial::new(a.clone(), 0)), one.clone()),
            ((Monomial::new(e.clone(), 0), Monomial::new(e, 1)), one),
        ]
        .into_iter()
        .collect();
        assert_eq!(dx, expected);

        let q = FieldCtx::rationals();
        let z2 = AbelianGroup::cyclic(2).unwrap();
        let theta = Character::new(&q, &z2, vec![q.from_i64(-1)]).unwrap();
        let sw = HopfOre::new(&theta, &z2.generator(0), &Cocycle::zero(&theta)).unwrap();
        let ax = sw.monomial(&z2.generator(0), 1);
        assert_eq!(sw.antipode(&ax), sw.x_pow(1).neg());
        let dx2 = sw.coproduct(&sw.x_pow(2));
        assert_eq!(render_tensor(&dx2), "x^2⊗1 + 1⊗x^2");
    }

    #[test]
    fn rendering() {
        let h = taft3();
        let g = h.group().generator(0);
        let u = h.monomial(&g, 2).scale(&h.ctx().from_i64(-2)).add(&h.one()).add(&h.x_pow(1).scale(&h.ctx().zeta()));
        assert_eq!(render(&u), "-2*g*x^2 + zeta*x + 1");
        assert_eq!(render(&HElement::zero()), "0");
    }
}
