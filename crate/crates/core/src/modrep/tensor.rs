use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::group::Character;
use crate::linalg::Matrix;

use super::module::{realize, ModuleParent, ModuleRep, SimpleSpec};
use super::weights::weight_spaces;

/// M ⊗ N with g acting diagonally and x by X_M ⊗ ρ_N(a) + 1 ⊗ X_N. The
/// basis vector mᵢ ⊗ nⱼ has index i·dim N + j.
pub fn tensor_module(m: &ModuleRep, n: &ModuleRep) -> Result<ModuleRep> {
    if !m.parent().same_as(n.parent()) {
        return Err(Error::ParentMismatch);
    }
    let group = m.group_matrices().iter().zip(n.group_matrices()).map(|(a, b)| a.kron(b)).collect();
    let rho_a = n.group_action(m.parent().a())?;
    let id_m = Matrix::identity(m.ctx(), m.dim());
    let x = m.x_matrix().kron(&rho_a).add(&id_m.kron(n.x_matrix()))?;
    let out = ModuleRep::new(m.parent(), group, x)?;
    Ok(match (m.weight_hint(), n.weight_hint()) {
        (Some(a), Some(b)) => {
            let mut hint = Vec::new();
            for u in a {
                for v in b {
                    hint.push(u.mul(v)?);
                }
            }
            hint.sort();
            hint.dedup();
            out.with_weight_hint(hint)
        }
        _ => out,
    })
}

/// V(σ, α) ⊗ V(λ, β) split into s blocks V(χᵗσλ, c), c = αλ(a)^s + β.
#[derive(Debug, Clone)]
pub struct TensorSplitting {
    pub scalar: FieldElement,
    pub summands: Vec<SimpleSpec>,
    pub tensor: ModuleRep,
    /// Columns are the new basis: block t is uₜ, x·uₜ, …, x^{s−1}·uₜ.
    pub basis_change: Matrix,
    /// P⁻¹·A·P equals the block diagonal of the realized summands for every
    /// action matrix A.
    pub verified: bool,
}

/// Requires |χ| = s finite and θ(a) = χ⁻¹(a) a primitive s-th root of
/// unity. For c ≠ 0, uₜ = xᵗ·wₜ for a basis w of the σλ weight space; for
/// c = 0, uₜ is a weight vector of weight χᵗσλ with x^{s−1}·uₜ ≠ 0.
pub fn decompose_tensor(
    parent: &ModuleParent,
    sigma: &Character,
    alpha: &FieldElement,
    lambda: &Character,
    beta: &FieldElement,
) -> Result<TensorSplitting> {
    let s = parent.chi_order().ok_or(Error::InfiniteCharacterOrder)?;
    let q = parent.ore().q();
    if !q.is_primitive_root(s) {
        return Err(Error::Hypothesis(format!("theta(a) = {q} is not a primitive {s}-th root of unity")));
    }
    let ctx = parent.ctx();
    let su = s as usize;
    let vm = realize(parent, &SimpleSpec::BlockS(sigma.clone(), alpha.clone()))?;
    let vn = realize(parent, &SimpleSpec::BlockS(lambda.clone(), beta.clone()))?;
    let tensor = tensor_module(&vm, &vn)?;
    let c = alpha * &lambda.eval(parent.a()).pow(s as i64) + beta.clone();
    let chi = parent.chi();
    let base = sigma.mul(lambda)?;
    let weights: Vec<Character> = (0..s).map(|t| chi.pow(t as i64).mul(&base)).collect::<Result<_>>()?;
    let x = tensor.x_matrix();
    let x_pow = |v: &[FieldElement], k: usize| -> Result<Vec<FieldElement>> {
        let mut cur = v.to_vec();
        for _ in 0..k {
            cur = x.apply(&cur)?;
        }
        Ok(cur)
    };
    let space_of = |w: &Character| -> Result<Vec<Vec<FieldElement>>> {
        let wd = weight_spaces(&tensor, std::slice::from_ref(w))?;
        Ok(wd.spaces.first().map(|sp| sp.space.basis().to_vec()).unwrap_or_default())
    };
    let mut starts = Vec::with_capacity(su);
    if c.is_zero() {
        for w in &weights {
            let u = space_of(w)?
                .into_iter()
                .map(|v| x_pow(&v, su - 1).map(|top| (v, top)))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .find(|(_, top)| top.iter().any(|e| !e.is_zero()))
                .map(|(v, _)| v)
                .ok_or_else(|| Error::Hypothesis(format!("x^{} vanishes on the weight space {w}", su - 1)))?;
            starts.push(u);
        }
    } else {
        let basis = space_of(&weights[0])?;
        if basis.len() != su {
            return Err(Error::Dimension(format!("weight space of sigma*lambda has dimension {}", basis.len())));
        }
        for (t, w) in basis.iter().enumerate() {
            starts.push(x_pow(w, t)?);
        }
    }
    let mut cols = Vec::with_capacity(su * su);
    for u in &starts {
        for i in 0..su {
            cols.push(x_pow(u, i)?);
        }
    }
    let p = Matrix::from_columns(ctx, su * su, &cols)?;
    let summands: Vec<SimpleSpec> = weights.iter().map(|w| SimpleSpec::BlockS(w.clone(), c.clone())).collect();
    let verified = match tensor.conjugate(&p) {
        Err(_) => false,
        Ok(conj) => {
            let blocks = summands.iter().map(|sp| realize(parent, sp)).collect::<Result<Vec<_>>>()?;
            let expect = |pick: &dyn Fn(&ModuleRep) -> Matrix| {
                Matrix::block_diag(ctx, &blocks.iter().map(pick).collect::<Vec<_>>())
            };
            conj.x_matrix() == &expect(&|b| b.x_matrix().clone())
                && (0..conj.group_matrices().len())
                    .all(|g| conj.group_matrices()[g] == expect(&|b| b.group_matrices()[g].clone()))
        }
    };
    Ok(TensorSplitting { scalar: c, summands, tensor, basis_change: p, verified })
}
