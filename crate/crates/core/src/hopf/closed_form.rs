use super::{HElement, HopfCase, HopfOre, HopfStructure, Monomial, TensorElement};
use crate::error::{Error, Result};
use crate::field::qarith::q_binomial_row;
use crate::group::GroupElement;

/// Δ(xⁿ) against Σ_l (n choose l)_q x^{n−l} ⊗ a^{n−l} x^l.
#[derive(Debug, Clone)]
pub struct ClosedFormReport {
    pub n: u32,
    pub formula: TensorElement,
    pub exact: TensorElement,
    /// exact − formula
    pub remainder: TensorElement,
    /// Largest total degree i + j in the remainder, `None` when it vanishes.
    pub remainder_degree: Option<u32>,
}

impl ClosedFormReport {
    pub fn matches_exactly(&self) -> bool {
        self.remainder.is_zero()
    }

    /// The remainder lies in bidegrees with i + j ≤ n − 1.
    pub fn remainder_is_lower(&self) -> bool {
        self.remainder_degree.is_none_or(|d| d < self.n)
    }
}

/// An element w together with the predicted and computed Δ(w).
#[derive(Debug, Clone)]
pub struct PowerPCoproduct {
    pub element: HElement,
    pub formula: TensorElement,
    pub exact: TensorElement,
}

impl PowerPCoproduct {
    pub fn matches(&self) -> bool {
        self.formula == self.exact
    }
}

impl HopfOre {
    fn basis_tensor(&self, l: (&GroupElement, u32), r: (&GroupElement, u32)) -> (Monomial, Monomial) {
        (Monomial::new(l.0.clone(), l.1), Monomial::new(r.0.clone(), r.1))
    }

    /// The q-binomial expansion of Δ(xⁿ) compared with the computed
    /// coproduct. In Case 3 the two differ by terms of lower total degree.
    pub fn closed_form_power(&self, n: u32) -> Result<ClosedFormReport> {
        let grp = self.group();
        let e = grp.identity();
        let row = q_binomial_row(n as u64, self.q())?;
        let mut formula = TensorElement::zero();
        for (l, c) in row.iter().enumerate() {
            let l = l as u32;
            let an = grp.pow(self.a(), (n - l) as i64);
            formula.add_term(self.basis_tensor((&e, n - l), (&an, l)), c.clone());
        }
        let exact = self.coproduct(&self.x_pow(n));
        let remainder = exact.sub(&formula);
        let remainder_degree = remainder.keys().map(|(l, r)| l.degree + r.degree).max();
        Ok(ClosedFormReport { n, formula, exact, remainder, remainder_degree })
    }

    fn require_char_p_case_three(&self) -> Result<u64> {
        let p = self.ctx().characteristic();
        if p == 0 || self.case() != HopfCase::Three {
            return Err(Error::CaseMismatch {
                expected: "Case3 in positive characteristic",
                found: format!("{} in characteristic {p}", self.case()),
            });
        }
        Ok(p)
    }

    /// Δ(x^p) = x^p⊗a^p + (p−1)!·x⊗a^p + x⊗a + 1⊗x^p.
    pub fn closed_form_power_p(&self) -> Result<PowerPCoproduct> {
        let p = self.require_char_p_case_three()?;
        let grp = self.group();
        let e = grp.identity();
        let ap = grp.pow(self.a(), p as i64);
        let ctx = self.ctx();
        let fact = (1..p as i64).fold(ctx.one(), |acc, k| acc * ctx.from_i64(k));
        let pu = p as u32;
        let formula: TensorElement = [
            (self.basis_tensor((&e, pu), (&ap, 0)), ctx.one()),
            (self.basis_tensor((&e, 1), (&ap, 0)), fact),
            (self.basis_tensor((&e, 1), (self.a(), 0)), ctx.one()),
            (self.basis_tensor((&e, 0), (&e, pu)), ctx.one()),
        ]
        .into_iter()
        .collect();
        let element = self.x_pow(pu);
        let exact = self.coproduct(&element);
        Ok(PowerPCoproduct { element, formula, exact })
    }

    /// Δ(w) = w⊗a^{p^r} + 1⊗w for w = x^{p^r} − x^{p^{r−1}}, r ≥ 1.
    pub fn closed_form_difference(&self, r: u32) -> Result<PowerPCoproduct> {
        let p = self.require_char_p_case_three()?;
        if r == 0 {
            return Err(Error::CaseMismatch { expected: "r ≥ 1", found: "r = 0".into() });
        }
        let hi = (p as u32).pow(r);
        let lo = hi / p as u32;
        let element = self.x_pow(hi).sub(&self.x_pow(lo));
        let grp = self.group();
        let e = grp.identity();
        let apr = grp.pow(self.a(), hi as i64);
        let mut formula = TensorElement::zero();
        for (m, c) in &element {
            formula.add_term((m.clone(), Monomial::new(apr.clone(), 0)), c.clone());
            formula.add_term((Monomial::new(e.clone(), 0), m.clone()), c.clone());
        }
        let exact = self.coproduct(&element);
        Ok(PowerPCoproduct { element, formula, exact })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;
    use crate::group::{AbelianGroup, Character, Cocycle};
    use crate::hopf::render_tensor;

    #[test]
    fn taft_cube_is_primitive_like() {
        let k = FieldCtx::cyclotomic(3).unwrap();
        let g = AbelianGroup::cyclic(3).unwrap();
        let theta = Character::new(&k, &g, vec![k.zeta()]).unwrap();
        let h = HopfOre::new(&theta, &g.generator(0), &Cocycle::zero(&theta)).unwrap();
        let rep = h.closed_form_power(3).unwrap();
        assert!(rep.matches_exactly());
        assert_eq!(render_tensor(&rep.exact), "x^3⊗1 + 1⊗x^3");
        assert!(h.closed_form_power_p().is_err());
    }

    #[test]
    fn char_two_power_formulas() {
        let f2 = FieldCtx::prime(2).unwrap();
        let g = AbelianGroup::cyclic(2).unwrap();
        let triv = Character::trivial(&f2, &g);
        let alpha = Cocycle::new(&triv, vec![f2.one()]).unwrap();
        let h = HopfOre::new(&triv, &g.generator(0), &alpha).unwrap();
        let c = h.closed_form_power_p().unwrap();
        assert!(c.matches(), "{}", render_tensor(&c.exact));
        let d = h.closed_form_difference(1).unwrap();
        assert!(d.matches());
        let rep = h.closed_form_power(3).unwrap();
        assert!(!rep.matches_exactly());
        assert!(rep.remainder_is_lower());
    }
}
