use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};
use crate::group::Character;
use crate::hopf::HElement;
use crate::linalg::Matrix;
use crate::structure::{IdealForm, QuotientHopf};

use super::module::{ModuleParent, ModuleRep};
use super::poly::Polynomial;

/// M(λ) = k[x]·v_λ. An element f(x)·v_λ is stored as the polynomial f.
#[derive(Debug, Clone)]
pub struct VermaModule {
    parent: ModuleParent,
    lambda: Character,
}

/// A submodule of M(λ) in canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VermaSubmodule {
    /// |χ| = s finite: the s monic generators fᵢ(y), y = x^s, with
    /// N_(χⁱλ) = fᵢ(y)·xⁱ·k[y]·v_λ. The zero polynomial stands for a zero
    /// component.
    Periodic(Vec<Polynomial>),
    /// |χ| infinite: span{xʲ·v_λ : j ≥ m}, `None` for the zero submodule.
    Tail(Option<u64>),
}

impl fmt::Display for VermaSubmodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VermaSubmodule::Periodic(fs) => {
                let parts: Vec<String> = fs.iter().map(|p| p.render("y")).collect();
                write!(f, "({})", parts.join(", "))
            }
            VermaSubmodule::Tail(Some(m)) => write!(f, "x^{m}*k[x]"),
            VermaSubmodule::Tail(None) => write!(f, "0"),
        }
    }
}

/// Builds M(λ) over the extension underlying `parent`.
pub fn verma(parent: &ModuleParent, lambda: &Character) -> Result<VermaModule> {
    if lambda.group() != parent.group() || lambda.ctx() != parent.ctx() {
        return Err(Error::GroupMismatch);
    }
    Ok(VermaModule { parent: parent.lift(), lambda: lambda.clone() })
}

impl VermaModule {
    pub fn lambda(&self) -> &Character {
        &self.lambda
    }

    pub fn parent(&self) -> &ModuleParent {
        &self.parent
    }

    fn ctx(&self) -> &FieldCtx {
        self.parent.ctx()
    }

    fn period(&self) -> Option<usize> {
        self.parent.chi_order().map(|s| s as usize)
    }

    /// xⁱ·v_λ.
    pub fn basis_element(&self, i: usize) -> Polynomial {
        Polynomial::monomial(self.ctx(), i, self.ctx().one())
    }

    /// The weight χⁱλ of xⁱ·v_λ.
    pub fn weight_of(&self, i: usize) -> Character {
        self.parent.chi().pow(i as i64).mul(&self.lambda).expect("same group")
    }

    pub fn render(&self, f: &Polynomial) -> String {
        if f.is_zero() {
            return "0".into();
        }
        format!("({})*v", f.render("x"))
    }

    /// g·xᵈ acting on Σ fᵢxⁱ·v_λ gives Σ fᵢ·χ^{i+d}(g)λ(g)·x^{i+d}·v_λ.
    pub fn apply(&self, h: &HElement, f: &Polynomial) -> Result<Polynomial> {
        let ctx = self.ctx();
        let grp = self.parent.group();
        let mut out = Polynomial::zero(ctx);
        for (m, c) in h {
            let g = grp.elem(m.group.coords())?;
            let chi_g = self.parent.chi().eval(&g);
            let lam_g = self.lambda.eval(&g);
            let d = m.degree as usize;
            let mut coeffs = vec![ctx.zero(); f.coeffs().len() + d];
            for (i, a) in f.coeffs().iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                coeffs[i + d] = &(a * c) * &(&chi_g.pow((i + d) as i64) * &lam_g);
            }
            out = out.add(&Polynomial::new(ctx, coeffs));
        }
        Ok(out)
    }

    /// f = Σᵢ xⁱ·pᵢ(x^s) for i < s.
    fn components(&self, f: &Polynomial, s: usize) -> Vec<Polynomial> {
        let ctx = self.ctx();
        (0..s)
            .map(|i| {
                let coeffs = f.coeffs().iter().skip(i).step_by(s).cloned().collect();
                Polynomial::new(ctx, coeffs)
            })
            .collect()
    }

    /// The submodule generated by `gens`, including M(λ) itself.
    pub(crate) fn generated(&self, gens: &[Polynomial]) -> VermaSubmodule {
        let ctx = self.ctx();
        match self.period() {
            None => VermaSubmodule::Tail(gens.iter().filter_map(|f| f.low_degree()).min().map(|m| m as u64)),
            Some(s) => {
                let y = Polynomial::monomial(ctx, 1, ctx.one());
                let mut fs = vec![Polynomial::zero(ctx); s];
                for f in gens {
                    for (i, p) in self.components(f, s).into_iter().enumerate() {
                        if p.is_zero() {
                            continue;
                        }
                        let shifted = y.mul(&p);
                        for (r, slot) in fs.iter_mut().enumerate() {
                            let contribution = if i <= r { &p } else { &shifted };
                            *slot = slot.gcd(contribution);
                        }
                    }
                }
                VermaSubmodule::Periodic(fs)
            }
        }
    }

    /// Canonical form of the submodule generated by `gens`. With |χ|
    /// infinite only submodules of J(λ) are accepted.
    pub fn submodule(&self, gens: &[Polynomial]) -> Result<VermaSubmodule> {
        let n = self.generated(gens);
        if n == VermaSubmodule::Tail(Some(0)) {
            return Err(Error::Hypothesis("generators are not contained in J(lambda)".into()));
        }
        Ok(n)
    }

    /// J(λ) = span{xⁱ·v_λ : i > 0}.
    pub fn j_lambda(&self) -> VermaSubmodule {
        self.generated(&[self.basis_element(1)])
    }

    /// J_β(λ), generated by (x^s − β)·v_λ.
    pub fn j_beta(&self, beta: &FieldElement) -> Result<VermaSubmodule> {
        let s = self.period().ok_or(Error::InfiniteCharacterOrder)?;
        let f = self.basis_element(s).sub(&Polynomial::monomial(self.ctx(), 0, beta.clone()));
        Ok(self.generated(&[f]))
    }

    /// x·N ⊆ N on the canonical form: f_{i+1} | fᵢ and f₀ | y·f_{s−1}.
    pub fn closure_holds(&self, n: &VermaSubmodule) -> bool {
        match n {
            VermaSubmodule::Tail(_) => true,
            VermaSubmodule::Periodic(fs) => {
                let ctx = self.ctx();
                let y = Polynomial::monomial(ctx, 1, ctx.one());
                let s = fs.len();
                (0..s - 1).all(|i| fs[i + 1].divides(&fs[i])) && fs[0].divides(&y.mul(&fs[s - 1]))
            }
        }
    }

    pub fn contains(&self, n: &VermaSubmodule, f: &Polynomial) -> bool {
        match n {
            VermaSubmodule::Tail(m) => match (f.low_degree(), m) {
                (None, _) => true,
                (Some(_), None) => false,
                (Some(d), Some(m)) => d as u64 >= *m,
            },
            VermaSubmodule::Periodic(fs) => self.components(f, fs.len()).iter().zip(fs).all(|(p, g)| g.divides(p)),
        }
    }

    pub fn is_whole(&self, n: &VermaSubmodule) -> bool {
        match n {
            VermaSubmodule::Tail(m) => *m == Some(0),
            VermaSubmodule::Periodic(fs) => fs.iter().all(Polynomial::is_one),
        }
    }

    /// Maximal submodules are J(λ) and, for |χ| finite, J_β(λ) with β ≠ 0.
    pub fn is_maximal(&self, n: &VermaSubmodule) -> bool {
        match n {
            VermaSubmodule::Tail(m) => *m == Some(1),
            VermaSubmodule::Periodic(fs) => {
                let ctx = self.ctx();
                let y = Polynomial::monomial(ctx, 1, ctx.one());
                let is_j = fs[0] == y && fs[1..].iter().all(Polynomial::is_one);
                let is_jb = fs[0].degree() == Some(1) && !fs[0].coeff(0).is_zero() && fs.iter().all(|f| f == &fs[0]);
                is_j || is_jb
            }
        }
    }

    pub fn intersection(&self, a: &VermaSubmodule, b: &VermaSubmodule) -> Result<VermaSubmodule> {
        match (a, b) {
            (VermaSubmodule::Tail(x), VermaSubmodule::Tail(y)) => Ok(VermaSubmodule::Tail(match (x, y) {
                (Some(x), Some(y)) => Some(*x.max(y)),
                _ => None,
            })),
            (VermaSubmodule::Periodic(x), VermaSubmodule::Periodic(y)) if x.len() == y.len() => {
                Ok(VermaSubmodule::Periodic(x.iter().zip(y).map(|(f, g)| f.lcm(g)).collect()))
            }
            _ => Err(Error::Dimension("submodules of different Verma modules".into())),
        }
    }

    /// M(λ)/N as a matrix module over `target`; `None` when N = M(λ).
    /// The basis is x^{i+sj}·v̄ for j < deg fᵢ, grouped by i.
    pub fn quotient(&self, n: &VermaSubmodule, target: &ModuleParent) -> Result<Option<ModuleRep>> {
        if !target.lift().same_as(&self.parent) {
            return Err(Error::ParentMismatch);
        }
        if self.is_whole(n) {
            return Ok(None);
        }
        let ctx = self.ctx();
        let gens = self.parent.group().num_generators();
        let (degrees, weights): (Vec<usize>, Vec<Character>) = match n {
            VermaSubmodule::Tail(None) => return Err(Error::InfiniteDimensional),
            VermaSubmodule::Tail(Some(m)) => {
                ((0..*m as usize).collect(), (0..*m as usize).map(|i| self.weight_of(i)).collect())
            }
            VermaSubmodule::Periodic(fs) => {
                if fs.iter().any(Polynomial::is_zero) {
                    return Err(Error::InfiniteDimensional);
                }
                let s = fs.len();
                let mut degs = Vec::new();
                for (i, f) in fs.iter().enumerate() {
                    degs.extend((0..f.degree().expect("nonzero")).map(|j| i + s * j));
                }
                let w = degs.iter().map(|&d| self.weight_of(d)).collect();
                (degs, w)
            }
        };
        let d = degrees.len();
        let group: Vec<Matrix> = (0..gens)
            .map(|g| {
                let mut m = Matrix::zeros(ctx, d, d);
                for (i, w) in weights.iter().enumerate() {
                    m.set(i, i, w.images()[g].clone());
                }
                m
            })
            .collect();
        let mut x = Matrix::zeros(ctx, d, d);
        for (col, &deg) in degrees.iter().enumerate() {
            // x·x^deg = x^{deg+1}, reduced modulo N
            for (row, c) in self.reduce(n, deg + 1, &degrees) {
                x.set(row, col, c);
            }
        }
        let mut hint = weights;
        hint.sort();
        hint.dedup();
        Ok(Some(ModuleRep::new(target, group, x)?.with_weight_hint(hint)))
    }

    /// Coordinates of x^deg·v̄ in the quotient basis `degrees`.
    fn reduce(&self, n: &VermaSubmodule, deg: usize, degrees: &[usize]) -> Vec<(usize, FieldElement)> {
        let ctx = self.ctx();
        let position = |e: usize| degrees.iter().position(|&t| t == e);
        if let Some(row) = position(deg) {
            return vec![(row, ctx.one())];
        }
        match n {
            VermaSubmodule::Tail(_) => Vec::new(),
            VermaSubmodule::Periodic(fs) => {
                let s = fs.len();
                let (i, j) = (deg % s, deg / s);
                let r = Polynomial::monomial(ctx, j, ctx.one()).rem(&fs[i]);
                r.coeffs()
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(e, c)| (position(i + s * e).expect("reduced degree"), c.clone()))
                    .collect()
            }
        }
    }
}

/// M(λ)/(I·M(λ)) for a quotient H/I.
#[derive(Debug, Clone)]
pub enum VermaQuotient {
    Zero,
    Module(ModuleRep),
}

/// I·M(λ) is generated by w·xⁱ·v_λ for the ideal generators w; for the
/// standard forms w commutes with x up to a scalar, so i ≤ max(n, s)
/// suffices.
pub fn verma_quotient_mod_ideal(lambda: &Character, quotient: &Arc<QuotientHopf>) -> Result<VermaQuotient> {
    let form =
        quotient.form().ok_or_else(|| Error::Hypothesis("the ideal must be one of the standard forms".into()))?;
    if matches!(form, IdealForm::Zero) {
        return Err(Error::InfiniteDimensional);
    }
    let target = ModuleParent::from_quotient(quotient.clone())?;
    let v = verma(&target, lambda)?;
    let n = quotient.reduction_exponent().ok_or(Error::InfiniteDimensional)? as usize;
    let bound = n.max(target.chi_order().unwrap_or(0) as usize);
    let mut gens = Vec::new();
    for w in quotient.ideal_generators() {
        for i in 0..=bound {
            gens.push(v.apply(&w, &v.basis_element(i))?);
        }
    }
    let sub = v.generated(&gens);
    Ok(match v.quotient(&sub, &target)? {
        None => VermaQuotient::Zero,
        Some(m) => VermaQuotient::Module(m),
    })
}
