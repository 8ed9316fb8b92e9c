use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};
use crate::group::{AbelianGroup, Character, GroupElement};
use crate::hopf::{render, HElement, HopfCase, HopfOre, HopfStructure};
use crate::linalg::Matrix;
use crate::structure::QuotientHopf;

/// The algebra a module lives over: a Case 1 extension H, or a quotient of
/// one. Carries the module character χ = θ⁻¹.
#[derive(Debug, Clone)]
pub struct ModuleParent {
    ore: Arc<HopfOre>,
    quotient: Option<Arc<QuotientHopf>>,
    chi: Character,
    chi_order: Option<u64>,
}

impl ModuleParent {
    pub fn from_ore(h: Arc<HopfOre>) -> Result<Self> {
        if h.case() != HopfCase::One {
            return Err(Error::CaseMismatch { expected: "Case1", found: h.case().to_string() });
        }
        let chi = h.theta().inv();
        let chi_order = chi.exact_order();
        Ok(ModuleParent { ore: h, quotient: None, chi, chi_order })
    }

    pub fn from_quotient(q: Arc<QuotientHopf>) -> Result<Self> {
        let mut p = Self::from_ore(q.parent().clone())?;
        p.quotient = Some(q);
        Ok(p)
    }

    pub fn ore(&self) -> &Arc<HopfOre> {
        &self.ore
    }

    pub fn quotient(&self) -> Option<&Arc<QuotientHopf>> {
        self.quotient.as_ref()
    }

    /// The same extension without the quotient.
    pub fn lift(&self) -> ModuleParent {
        ModuleParent { quotient: None, ..self.clone() }
    }

    pub fn ctx(&self) -> &FieldCtx {
        self.ore.ctx()
    }

    pub fn group(&self) -> &AbelianGroup {
        self.ore.group()
    }

    /// χ = θ⁻¹.
    pub fn chi(&self) -> &Character {
        &self.chi
    }

    /// s = |χ|, `None` when infinite.
    pub fn chi_order(&self) -> Option<u64> {
        self.chi_order
    }

    pub fn a(&self) -> &GroupElement {
        self.ore.a()
    }

    pub fn same_as(&self, other: &ModuleParent) -> bool {
        let same_ore = Arc::ptr_eq(&self.ore, &other.ore)
            || (self.ore.theta() == other.ore.theta()
                && self.ore.a() == other.ore.a()
                && self.ore.alpha() == other.ore.alpha());
        let same_quotient = match (&self.quotient, &other.quotient) {
            (None, None) => true,
            (Some(a), Some(b)) => {
                Arc::ptr_eq(a, b) || (a.form() == b.form() && a.ideal_generators() == b.ideal_generators())
            }
            _ => false,
        };
        same_ore && same_quotient
    }
}

/// A finite-dimensional module given by one matrix per group generator and
/// one for x, acting on column vectors.
#[derive(Debug, Clone)]
pub struct ModuleRep {
    parent: ModuleParent,
    group: Vec<Matrix>,
    x: Matrix,
    weight_hint: Option<Vec<Character>>,
}

impl ModuleRep {
    pub fn new(parent: &ModuleParent, group: Vec<Matrix>, x: Matrix) -> Result<Self> {
        let d = x.rows();
        if !x.is_square() {
            return Err(Error::Dimension("x matrix is not square".into()));
        }
        let gens = parent.group().num_generators();
        if group.len() != gens {
            return Err(Error::CoordinateLength { expected: gens, got: group.len() });
        }
        for (i, m) in group.iter().enumerate() {
            if m.rows() != d || m.cols() != d {
                return Err(Error::Dimension(format!(
                    "generator {i} matrix is {}x{}, expected {d}x{d}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        if group.iter().chain(std::iter::once(&x)).any(|m| m.ctx() != parent.ctx()) {
            return Err(Error::ContextMismatch);
        }
        Ok(ModuleRep { parent: parent.clone(), group, x, weight_hint: None })
    }

    /// Records characters known to cover the weights, used when Ĝ cannot
    /// be enumerated.
    pub fn with_weight_hint(mut self, weights: Vec<Character>) -> Self {
        self.weight_hint = Some(weights);
        self
    }

    pub fn weight_hint(&self) -> Option<&[Character]> {
        self.weight_hint.as_deref()
    }

    pub fn parent(&self) -> &ModuleParent {
        &self.parent
    }

    pub fn ctx(&self) -> &FieldCtx {
        self.parent.ctx()
    }

    pub fn dim(&self) -> usize {
        self.x.rows()
    }

    pub fn group_matrices(&self) -> &[Matrix] {
        &self.group
    }

    pub fn x_matrix(&self) -> &Matrix {
        &self.x
    }

    /// All action matrices: group generators followed by x.
    pub fn generators(&self) -> Vec<&Matrix> {
        self.group.iter().chain(std::iter::once(&self.x)).collect()
    }

    pub fn group_action(&self, g: &GroupElement) -> Result<Matrix> {
        let g = self.parent.group().elem(g.coords())?;
        let mut acc = Matrix::identity(self.ctx(), self.dim());
        for (m, &k) in self.group.iter().zip(g.coords()) {
            let base = if k < 0 { m.inverse()? } else { m.clone() };
            acc = acc.mul(&base.pow(k.unsigned_abs() as u32)?)?;
        }
        Ok(acc)
    }

    /// The matrix by which an element of H acts.
    pub fn act(&self, u: &HElement) -> Result<Matrix> {
        let mut acc = Matrix::zeros(self.ctx(), self.dim(), self.dim());
        for (m, c) in u {
            let term = self.group_action(&m.group)?.mul(&self.x.pow(m.degree)?)?;
            acc = acc.add(&term.scale(c))?;
        }
        Ok(acc)
    }

    /// M ⊕ N, block diagonal.
    pub fn direct_sum(&self, other: &ModuleRep) -> Result<ModuleRep> {
        if !self.parent.same_as(&other.parent) {
            return Err(Error::ParentMismatch);
        }
        let ctx = self.ctx();
        let group = self
            .group
            .iter()
            .zip(&other.group)
            .map(|(a, b)| Matrix::block_diag(ctx, &[a.clone(), b.clone()]))
            .collect();
        let x = Matrix::block_diag(ctx, &[self.x.clone(), other.x.clone()]);
        let hint = match (&self.weight_hint, &other.weight_hint) {
            (Some(a), Some(b)) => Some(merge_weights(a, b)),
            _ => None,
        };
        Ok(ModuleRep { parent: self.parent.clone(), group, x, weight_hint: hint })
    }

    /// Change of basis: the module with matrices P⁻¹·A·P.
    pub fn conjugate(&self, p: &Matrix) -> Result<ModuleRep> {
        let pinv = p.inverse()?;
        let conj = |m: &Matrix| pinv.mul(m).and_then(|t| t.mul(p));
        let group = self.group.iter().map(conj).collect::<Result<Vec<_>>>()?;
        Ok(ModuleRep { parent: self.parent.clone(), group, x: conj(&self.x)?, weight_hint: self.weight_hint.clone() })
    }

    /// The same matrices over H instead of a quotient.
    pub fn restrict_to_ore(&self) -> ModuleRep {
        ModuleRep { parent: self.parent.lift(), ..self.clone() }
    }
}

pub(crate) fn merge_weights(a: &[Character], b: &[Character]) -> Vec<Character> {
    let mut out = a.to_vec();
    out.extend(b.iter().cloned());
    out.sort();
    out.dedup();
    out
}

/// Iso-class descriptors of the simple modules.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SimpleSpec {
    /// V_λ: g·v = λ(g)v, x·v = 0.
    OneDim(Character),
    /// V(λ, β) of dimension s = |χ|.
    BlockS(Character, FieldElement),
}

impl SimpleSpec {
    pub fn weight(&self) -> &Character {
        match self {
            SimpleSpec::OneDim(l) | SimpleSpec::BlockS(l, _) => l,
        }
    }
}

impl fmt::Display for SimpleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimpleSpec::OneDim(l) => write!(f, "V_{l}"),
            SimpleSpec::BlockS(l, b) => write!(f, "V({l}, {b})"),
        }
    }
}

/// Explicit matrices for a simple module. For V(λ, β) the basis is
/// m₀, …, m_{s−1} with g·mᵢ = χⁱ(g)λ(g)mᵢ, x·mᵢ = mᵢ₊₁ and x·m_{s−1} = βm₀.
pub fn realize(parent: &ModuleParent, spec: &SimpleSpec) -> Result<ModuleRep> {
    let ctx = parent.ctx();
    let gens = parent.group().num_generators();
    match spec {
        SimpleSpec::OneDim(l) => {
            check_character(parent, l)?;
            let group = (0..gens).map(|i| Matrix::scalar(ctx, 1, &l.images()[i])).collect();
            Ok(ModuleRep::new(parent, group, Matrix::zeros(ctx, 1, 1))?.with_weight_hint(vec![l.clone()]))
        }
        SimpleSpec::BlockS(l, beta) => {
            check_character(parent, l)?;
            let s = parent.chi_order().ok_or(Error::InfiniteCharacterOrder)? as usize;
            let weights: Vec<Character> = (0..s).map(|i| parent.chi().pow(i as i64).mul(l)).collect::<Result<_>>()?;
            let group = (0..gens)
                .map(|g| {
                    let mut m = Matrix::zeros(ctx, s, s);
                    for (i, w) in weights.iter().enumerate() {
                        m.set(i, i, w.images()[g].clone());
                    }
                    m
                })
                .collect();
            let mut x = Matrix::zeros(ctx, s, s);
            for i in 0..s - 1 {
                x.set(i + 1, i, ctx.one());
            }
            x.set(0, s - 1, beta.clone());
            let mut hint = weights;
            hint.sort();
            Ok(ModuleRep::new(parent, group, x)?.with_weight_hint(hint))
        }
    }
}

fn check_character(parent: &ModuleParent, l: &Character) -> Result<()> {
    if l.group() != parent.group() || l.ctx() != parent.ctx() {
        return Err(Error::GroupMismatch);
    }
    Ok(())
}

/// A violated module identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleFailure {
    NotInvertible {
        generator: usize,
    },
    NonCommuting {
        i: usize,
        j: usize,
    },
    Torsion {
        generator: usize,
    },
    /// X·ρ(g) ≠ θ(g)·ρ(g)·X.
    OreRelation {
        generator: usize,
    },
    /// An ideal generator acts by a nonzero matrix.
    IdealAction {
        generator: String,
    },
}

impl fmt::Display for ModuleFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleFailure::NotInvertible { generator } => write!(f, "generator {generator} acts non-invertibly"),
            ModuleFailure::NonCommuting { i, j } => write!(f, "generators {i} and {j} do not commute"),
            ModuleFailure::Torsion { generator } => write!(f, "generator {generator} violates its torsion order"),
            ModuleFailure::OreRelation { generator } => write!(f, "x*g != theta(g)*g*x for generator {generator}"),
            ModuleFailure::IdealAction { generator } => write!(f, "ideal generator {generator} acts nontrivially"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleReport {
    pub failures: Vec<ModuleFailure>,
}

impl ModuleReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the group relations, the commutation rule with x and, over a
/// quotient, that every ideal generator acts as zero.
pub fn validate_module(m: &ModuleRep) -> Result<ModuleReport> {
    let parent = m.parent();
    let grp = parent.group();
    let ctx = m.ctx();
    let d = m.dim();
    let id = Matrix::identity(ctx, d);
    let mut failures = Vec::new();
    let mats = m.group_matrices();
    for (i, a) in mats.iter().enumerate() {
        if a.rank() < d {
            failures.push(ModuleFailure::NotInvertible { generator: i });
        }
        for (j, b) in mats.iter().enumerate().skip(i + 1) {
            if a.mul(b)? != b.mul(a)? {
                failures.push(ModuleFailure::NonCommuting { i, j });
            }
        }
        if let Some(n) = grp.generator_order(i) {
            if a.pow(n as u32)? != id {
                failures.push(ModuleFailure::Torsion { generator: i });
            }
        }
        let theta = &parent.ore().theta().images()[i];
        if m.x_matrix().mul(a)? != a.mul(m.x_matrix())?.scale(theta) {
            failures.push(ModuleFailure::OreRelation { generator: i });
        }
    }
    if let Some(q) = parent.quotient() {
        for w in q.ideal_generators() {
            if !m.act(&w)?.is_zero() {
                failures.push(ModuleFailure::IdealAction { generator: render(&w) });
            }
        }
    }
    Ok(ModuleReport { failures })
}
