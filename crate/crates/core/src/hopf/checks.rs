use std::fmt;

use rayon::prelude::*;

use super::{render, HElement, HopfOre, HopfStructure, Monomial, StructureTables, Tensor3Element, TensorElement};
use crate::error::{Error, Result};
use crate::group::GroupElement;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    Coassociativity,
    LeftCounit,
    RightCounit,
    LeftAntipode,
    RightAntipode,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::Coassociativity => "coassociativity",
            Axiom::LeftCounit => "left counit",
            Axiom::RightCounit => "right counit",
            Axiom::LeftAntipode => "left antipode",
            Axiom::RightAntipode => "right antipode",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomFailure {
    pub axiom: Axiom,
    pub element: Monomial,
    /// The offending side, e.g. m(S⊗id)Δ(b), rendered.
    pub observed: String,
    pub expected: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub checked: usize,
    pub failure: Option<AxiomFailure>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

fn single<H: HopfStructure + ?Sized>(h: &H, m: &Monomial) -> HElement {
    HElement::term(m.clone(), h.ctx().one())
}

fn check_one<H: HopfStructure + ?Sized>(h: &H, tables: &StructureTables, b: &Monomial) -> Option<AxiomFailure> {
    let be = single(h, b);
    let delta = h.coproduct_with(tables, &be);
    let fail = |axiom, observed: String, expected: String| {
        Some(AxiomFailure { axiom, element: b.clone(), observed, expected })
    };

    let mut left = Tensor3Element::zero();
    let mut right = Tensor3Element::zero();
    for ((l, r), c) in &delta {
        for ((l1, l2), d) in &h.coproduct_with(tables, &single(h, l)) {
            left.add_term((l1.clone(), l2.clone(), r.clone()), c * d);
        }
        for ((r1, r2), d) in &h.coproduct_with(tables, &single(h, r)) {
            right.add_term((l.clone(), r1.clone(), r2.clone()), c * d);
        }
    }
    if left != right {
        return fail(Axiom::Coassociativity, format!("{} terms", left.len()), format!("{} terms", right.len()));
    }

    let mut eps_left = HElement::zero();
    let mut eps_right = HElement::zero();
    for ((l, r), c) in &delta {
        if l.degree == 0 {
            eps_left.add_term(r.clone(), c.clone());
        }
        if r.degree == 0 {
            eps_right.add_term(l.clone(), c.clone());
        }
    }
    if eps_left != be {
        return fail(Axiom::LeftCounit, render(&eps_left), render(&be));
    }
    if eps_right != be {
        return fail(Axiom::RightCounit, render(&eps_right), render(&be));
    }

    let unit = h.scalar(&h.counit(&be));
    let mut s_left = HElement::zero();
    let mut s_right = HElement::zero();
    for ((l, r), c) in &delta {
        let sl = h.antipode_with(tables, &single(h, l));
        s_left.add_scaled(&h.mul(&sl, &single(h, r)), c);
        let sr = h.antipode_with(tables, &single(h, r));
        s_right.add_scaled(&h.mul(&single(h, l), &sr), c);
    }
    if s_left != unit {
        return fail(Axiom::LeftAntipode, render(&s_left), render(&unit));
    }
    if s_right != unit {
        return fail(Axiom::RightAntipode, render(&s_right), render(&unit));
    }
    None
}

/// Verifies coassociativity, both counit laws and both antipode laws on each
/// basis element. Work is spread over the rayon pool; the reported failure is
/// the first in basis order.
pub fn check_hopf_axioms<H: HopfStructure + ?Sized>(h: &H, basis: &[Monomial]) -> AxiomReport {
    let max = basis.iter().map(|m| m.degree).max().unwrap_or(0);
    let tables = h.tables(max);
    let results: Vec<Option<AxiomFailure>> = basis.par_iter().map(|b| check_one(h, &tables, b)).collect();
    AxiomReport { checked: basis.len(), failure: results.into_iter().flatten().next() }
}

/// First triple (u, v, w) of basis elements with (uv)w ≠ u(vw).
pub fn check_associativity<H: HopfStructure + ?Sized>(
    h: &H,
    triples: &[(Monomial, Monomial, Monomial)],
) -> Option<(Monomial, Monomial, Monomial)> {
    let bad: Vec<bool> = triples
        .par_iter()
        .map(|(u, v, w)| {
            let (u, v, w) = (single(h, u), single(h, v), single(h, w));
            h.mul(&h.mul(&u, &v), &w) != h.mul(&u, &h.mul(&v, &w))
        })
        .collect();
    bad.iter().position(|&b| b).map(|i| triples[i].clone())
}

/// First pair (u, v) with Δ(uv) ≠ Δ(u)Δ(v).
pub fn check_multiplicativity<H: HopfStructure + ?Sized>(
    h: &H,
    pairs: &[(Monomial, Monomial)],
) -> Option<(Monomial, Monomial)> {
    let max = pairs.iter().map(|(u, v)| u.degree + v.degree).max().unwrap_or(0);
    let tables = h.tables(max);
    let bad: Vec<bool> = pairs
        .par_iter()
        .map(|(u, v)| {
            let (u, v) = (single(h, u), single(h, v));
            let lhs = h.coproduct_with(&tables, &h.mul(&u, &v));
            let rhs = h.tensor_mul(&h.coproduct_with(&tables, &u), &h.coproduct_with(&tables, &v));
            lhs != rhs
        })
        .collect();
    bad.iter().position(|&b| b).map(|i| pairs[i].clone())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradingReport {
    pub checked: usize,
    /// A basis element g·xⁿ whose coproduct has a term of bidegree (i, j)
    /// with i + j ≠ n.
    pub failure: Option<(Monomial, (u32, u32))>,
}

impl GradingReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OreCompatFailure {
    /// x·(e_i e_j) differs from (x·e_j)·e_i.
    Commutation { i: usize, j: usize },
    /// Rewriting x past e_i^{n_i} one step at a time does not return x.
    Torsion { generator: usize },
    /// Δ(δ(g)) ≠ δ(g)⊗a·g + g⊗δ(g).
    Coderivation { generator: usize },
}

impl fmt::Display for OreCompatFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OreCompatFailure::Commutation { i, j } => {
                write!(f, "x·(g{} g{}) differs from (x·g{})·g{}", i + 1, j + 1, j + 1, i + 1)
            }
            OreCompatFailure::Torsion { generator } => {
                write!(f, "x·g{}^n rewritten stepwise does not return x", generator + 1)
            }
            OreCompatFailure::Coderivation { generator } => {
                write!(f, "coderivation law fails on g{}", generator + 1)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OreCompatReport {
    pub failure: Option<OreCompatFailure>,
}

impl OreCompatReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl HopfOre {
    /// The basis {g·xⁱ : g ∈ G (or the sample), i ≤ degree}.
    pub fn basis(&self, degree: u32, sample: Option<&[GroupElement]>) -> Result<Vec<Monomial>> {
        let group = self.group();
        let elems = match sample {
            Some(s) => s.iter().map(|g| group.elem(g.coords())).collect::<Result<Vec<_>>>()?,
            None => group.elements().map_err(|_| Error::SampleRequired)?,
        };
        Ok((0..=degree).flat_map(|d| elems.iter().map(move |g| Monomial::new(g.clone(), d))).collect())
    }

    pub fn check_hopf_axioms(&self, degree: u32, sample: Option<&[GroupElement]>) -> Result<AxiomReport> {
        Ok(check_hopf_axioms(self, &self.basis(degree, sample)?))
    }

    /// Checks that Δ(g·xⁿ) is homogeneous of total degree n for n ≤ `max`.
    pub fn check_grading(&self, max: u32, sample: Option<&[GroupElement]>) -> Result<GradingReport> {
        let basis = self.basis(max, sample)?;
        let tables = self.tables(max);
        let failures: Vec<Option<(Monomial, (u32, u32))>> = basis
            .par_iter()
            .map(|b| {
                let delta = self.coproduct_with(&tables, &single(self, b));
                delta
                    .keys()
                    .find(|(l, r)| l.degree + r.degree != b.degree)
                    .map(|(l, r)| (b.clone(), (l.degree, r.degree)))
            })
            .collect();
        Ok(GradingReport { checked: basis.len(), failure: failures.into_iter().flatten().next() })
    }

    /// Checks the commutation relation is well defined on the presentation of
    /// G (pairwise and torsion consistency of the twisted derivation) and the
    /// coderivation law on each generator.
    pub fn validate_ore_compat(&self) -> OreCompatReport {
        let group = self.group();
        let n = group.num_generators();
        let x = self.x_pow(1);
        let fail = |f| OreCompatReport { failure: Some(f) };
        for i in 0..n {
            let ei = self.grouplike(&group.generator(i));
            for j in i + 1..n {
                let ej = self.grouplike(&group.generator(j));
                let eij = self.grouplike(&group.mul(&group.generator(i), &group.generator(j)));
                let direct = self.mul(&x, &eij);
                let stepwise = self.mul(&self.mul(&x, &ej), &ei);
                if direct != stepwise {
                    return fail(OreCompatFailure::Commutation { i, j });
                }
            }
            if let Some(ord) = group.generator_order(i) {
                let stepwise = (0..ord).fold(x.clone(), |acc, _| self.mul(&acc, &ei));
                if stepwise != x {
                    return fail(OreCompatFailure::Torsion { generator: i });
                }
            }
        }
        for i in 0..n {
            let g = group.generator(i);
            let ga = group.mul(&g, self.a());
            let al = self.alpha().eval(&g);
            let delta_g = self.grouplike(&g).sub(&self.grouplike(&ga)).scale(&al);
            let lhs = self.coproduct(&delta_g);
            let mut rhs = TensorElement::zero();
            for (m, c) in &delta_g {
                rhs.add_term((m.clone(), Monomial::new(ga.clone(), 0)), c.clone());
                rhs.add_term((Monomial::new(g.clone(), 0), m.clone()), c.clone());
            }
            if lhs != rhs {
                return fail(OreCompatFailure::Coderivation { generator: i });
            }
        }
        OreCompatReport { failure: None }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;
    use crate::group::{AbelianGroup, Character, Cocycle};

    #[test]
    fn mutated_antipode_fails_on_x() {
        let k = FieldCtx::cyclotomic(3).unwrap();
        let g = AbelianGroup::cyclic(3).unwrap();
        let theta = Character::new(&k, &g, vec![k.zeta()]).unwrap();
        let h = HopfOre::new(&theta, &g.generator(0), &Cocycle::zero(&theta)).unwrap();
        assert!(h.check_hopf_axioms(3, None).unwrap().passed());
        let bad = h.with_mutated_antipode().check_hopf_axioms(3, None).unwrap();
        let f = bad.failure.unwrap();
        assert_eq!(f.element, Monomial::new(g.identity(), 1));
        assert_eq!(f.axiom, Axiom::LeftAntipode);
    }

    #[test]
    fn corrupted_cocycle_is_caught() {
        let q = FieldCtx::rationals();
        let g = AbelianGroup::cyclic(3).unwrap();
        let triv = Character::trivial(&q, &g);
        let bad = Cocycle::new_unchecked(&triv, vec![q.one()]).unwrap();
        let h = HopfOre::new_unchecked(&triv, &g.generator(0), &bad).unwrap();
        assert_eq!(h.validate_ore_compat().failure, Some(OreCompatFailure::Torsion { generator: 0 }));
        assert!(HopfOre::new(&triv, &g.generator(0), &bad).is_err());
    }

    #[test]
    fn grading_fails_in_case_three() {
        let f3 = FieldCtx::prime(3).unwrap();
        let g = AbelianGroup::cyclic(3).unwrap();
        let triv = Character::trivial(&f3, &g);
        let alpha = Cocycle::new(&triv, vec![f3.one()]).unwrap();
        let h = HopfOre::new(&triv, &g.generator(0), &alpha).unwrap();
        assert!(h.validate_ore_compat().passed());
        assert!(!h.check_grading(3, None).unwrap().passed());
    }

    #[test]
    fn infinite_group_requires_sample() {
        let q = FieldCtx::rationals();
        let z = AbelianGroup::integers();
        let theta = Character::new(&q, &z, vec![q.from_i64(2)]).unwrap();
        let h = HopfOre::new(&theta, &z.generator(0), &Cocycle::zero(&theta)).unwrap();
        assert_eq!(h.check_hopf_axioms(2, None), Err(Error::SampleRequired));
        let sample = z.sample_box(1);
        assert!(h.check_hopf_axioms(3, Some(&sample)).unwrap().passed());
    }
}
