use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};
use crate::group::Character;
use crate::linalg::{Matrix, SparseReducer, SparseRow};

use super::module::{merge_weights, ModuleRep};
use super::subspace::Subspace;
use super::weights::{default_candidates, weight_spaces};

/// Largest number of basis elements combined in the finite searches.
const SEARCH_WIDTH: usize = 6;

/// A basis of {T : T·A_M = A_N·T for every action matrix}, T of size
/// dim N × dim M.
pub fn module_homs(m: &ModuleRep, n: &ModuleRep) -> Result<Vec<Matrix>> {
    if !m.parent().same_as(n.parent()) {
        return Err(Error::ParentMismatch);
    }
    let ctx = m.ctx();
    let (dm, dn) = (m.dim(), n.dim());
    let var = |r: usize, c: usize| r * dm + c;
    let mut red = SparseReducer::new(ctx, dm * dn);
    for (am, an) in m.generators().into_iter().zip(n.generators()) {
        for r in 0..dn {
            for c in 0..dm {
                let mut row = SparseRow::new();
                let mut add = |j: usize, v: FieldElement| {
                    if v.is_zero() {
                        return;
                    }
                    let e = row.entry(j).or_insert_with(|| ctx.zero());
                    *e = &*e + &v;
                };
                for k in 0..dm {
                    add(var(r, k), am.get(k, c).clone());
                }
                for k in 0..dn {
                    add(var(k, c), -an.get(r, k));
                }
                row.retain(|_, v| !v.is_zero());
                if !row.is_empty() {
                    red.add_row(row);
                }
            }
        }
    }
    Ok(red
        .nullspace()
        .into_iter()
        .map(|v| {
            let mut t = Matrix::zeros(ctx, dn, dm);
            for (j, c) in v {
                t.set(j / dm, j % dm, c);
            }
            t
        })
        .collect())
}

/// Coefficients used by the finite searches: 0, 1, −1 and a generator of
/// the roots of unity of the field.
pub fn search_coefficients(ctx: &FieldCtx) -> Vec<FieldElement> {
    let mut out = vec![ctx.zero(), ctx.one(), -ctx.one()];
    if let Some(w) = ctx.primitive_root_of_unity(ctx.root_of_unity_bound()) {
        out.push(w);
    }
    let mut uniq: Vec<FieldElement> = Vec::new();
    for c in out {
        if !uniq.contains(&c) {
            uniq.push(c);
        }
    }
    uniq
}

/// Each basis element, then every nonzero combination of the first few
/// basis elements with coefficients from [`search_coefficients`].
fn candidates<'a>(ctx: &'a FieldCtx, basis: &'a [Matrix]) -> impl Iterator<Item = Matrix> + 'a {
    let coeffs = search_coefficients(ctx);
    let width = basis.len().min(SEARCH_WIDTH);
    let total = (coeffs.len() as u64).pow(width as u32);
    let singles = basis.iter().cloned();
    let combos = (1..total).filter_map(move |mut code| {
        let mut acc: Option<Matrix> = None;
        let mut terms = 0;
        for b in &basis[..width] {
            let c = &coeffs[(code % coeffs.len() as u64) as usize];
            code /= coeffs.len() as u64;
            if c.is_zero() {
                continue;
            }
            terms += 1;
            let t = b.scale(c);
            acc = Some(match acc {
                None => t,
                Some(a) => a.add(&t).expect("homs share a shape"),
            });
        }
        (terms >= 2).then_some(acc).flatten()
    });
    singles.chain(combos)
}

fn is_invertible(t: &Matrix) -> bool {
    t.is_square() && t.rank() == t.rows()
}

/// Why two modules were certified non-isomorphic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NonIsoReason {
    DimensionMismatch,
    WeightMismatch,
    NoHoms,
    /// dim Hom(M, N), dim Hom(N, M), dim End(M), dim End(N) are not all equal.
    HomDimensionMismatch,
    /// Hom(M, N) is a line spanned by a singular map.
    SingularHomLine,
}

impl fmt::Display for NonIsoReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NonIsoReason::DimensionMismatch => "dimensions differ",
            NonIsoReason::WeightMismatch => "weight multiplicities differ",
            NonIsoReason::NoHoms => "no nonzero homomorphism",
            NonIsoReason::HomDimensionMismatch => "hom and endomorphism dimensions differ",
            NonIsoReason::SingularHomLine => "the only homomorphisms are multiples of a singular map",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoVerdict {
    /// An explicit isomorphism T: M → N.
    Yes(Matrix),
    No(NonIsoReason),
    Undecided,
}

impl IsoVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, IsoVerdict::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, IsoVerdict::No(_))
    }
}

fn weight_profile(m: &ModuleRep, cands: &[Character]) -> Result<Option<Vec<(Character, usize)>>> {
    let wd = weight_spaces(m, cands)?;
    Ok(wd.is_weight_module.then(|| wd.spaces.iter().map(|w| (w.weight.clone(), w.space.dim())).collect()))
}

pub fn is_isomorphic(m: &ModuleRep, n: &ModuleRep) -> Result<IsoVerdict> {
    if !m.parent().same_as(n.parent()) {
        return Err(Error::ParentMismatch);
    }
    if m.dim() != n.dim() {
        return Ok(IsoVerdict::No(NonIsoReason::DimensionMismatch));
    }
    if let (Ok(cm), Ok(cn)) = (default_candidates(m), default_candidates(n)) {
        let cands = merge_weights(&cm, &cn);
        if let (Some(pm), Some(pn)) = (weight_profile(m, &cands)?, weight_profile(n, &cands)?) {
            if pm != pn {
                return Ok(IsoVerdict::No(NonIsoReason::WeightMismatch));
            }
        }
    }
    let homs = module_homs(m, n)?;
    if homs.is_empty() {
        return Ok(IsoVerdict::No(NonIsoReason::NoHoms));
    }
    let dims = [homs.len(), module_homs(n, m)?.len(), module_homs(m, m)?.len(), module_homs(n, n)?.len()];
    if dims.iter().any(|&d| d != dims[0]) {
        return Ok(IsoVerdict::No(NonIsoReason::HomDimensionMismatch));
    }
    if homs.len() == 1 {
        return Ok(if is_invertible(&homs[0]) {
            IsoVerdict::Yes(homs[0].clone())
        } else {
            IsoVerdict::No(NonIsoReason::SingularHomLine)
        });
    }
    let found = candidates(m.ctx(), &homs).find(is_invertible);
    Ok(found.map_or(IsoVerdict::Undecided, IsoVerdict::Yes))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Indecomposability {
    Yes,
    /// M = ker(φᵈ) ⊕ im(φᵈ) for an endomorphism φ that is neither nilpotent
    /// nor invertible.
    No {
        kernel: Subspace,
        image: Subspace,
    },
    Undecided,
}

/// dim End(M) = 1 proves indecomposability; otherwise the Fitting
/// decomposition of a searched endomorphism can prove the opposite.
pub fn is_indecomposable(m: &ModuleRep) -> Result<Indecomposability> {
    if m.dim() == 0 {
        return Err(Error::Dimension("the zero module".into()));
    }
    let ends = module_homs(m, m)?;
    if ends.len() == 1 {
        return Ok(Indecomposability::Yes);
    }
    let ctx = m.ctx();
    let d = m.dim();
    for phi in candidates(ctx, &ends) {
        let p = phi.pow(d as u32)?;
        let r = p.rank();
        if r == 0 || r == d {
            continue;
        }
        let kernel = Subspace::span(ctx, d, p.nullspace());
        let image = Subspace::span(ctx, d, p.transpose().row_space_basis());
        return Ok(Indecomposability::No { kernel, image });
    }
    Ok(Indecomposability::Undecided)
}

/// Outcome of the search for v ∈ M_(λ) with k[x]·v = M.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicCover {
    pub witness: Option<Vec<FieldElement>>,
    /// Whether the absence of a witness is proven: M_(λ) is at most a line,
    /// or dim M exceeds 1 + rank X.
    pub exhaustive: bool,
}

impl CyclicCover {
    pub fn holds(&self) -> bool {
        self.witness.is_some()
    }
}

fn krylov_dim(m: &ModuleRep, v: &[FieldElement]) -> Result<usize> {
    let mut vecs = vec![v.to_vec()];
    for _ in 1..m.dim() {
        let next = m.x_matrix().apply(vecs.last().expect("nonempty"))?;
        vecs.push(next);
    }
    Ok(Subspace::span(m.ctx(), m.dim(), vecs).dim())
}

/// Looks for a weight vector of weight λ generating M over k[x], which
/// gives an epimorphism M(λ) → M.
pub fn cyclic_cover_check(m: &ModuleRep, lambda: &Character) -> Result<CyclicCover> {
    let d = m.dim();
    let space = weight_spaces(m, std::slice::from_ref(lambda))?
        .spaces
        .pop()
        .map(|w| w.space)
        .unwrap_or_else(|| Subspace::zero(m.ctx(), d));
    if space.is_zero() || d > 1 + m.x_matrix().rank() {
        return Ok(CyclicCover { witness: None, exhaustive: true });
    }
    let basis: Vec<Matrix> = space
        .basis()
        .iter()
        .map(|v| Matrix::from_columns(m.ctx(), d, std::slice::from_ref(v)))
        .collect::<Result<_>>()?;
    for c in candidates(m.ctx(), &basis) {
        let v = c.column(0);
        if krylov_dim(m, &v)? == d {
            return Ok(CyclicCover { witness: Some(v), exhaustive: true });
        }
    }
    Ok(CyclicCover { witness: None, exhaustive: space.dim() == 1 })
}
