use crate::field::{FieldCtx, FieldElement};
use crate::linalg::Matrix;

/// A subspace of kⁿ stored by its reduced row echelon basis, so equal
/// subspaces compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ctx: FieldCtx,
    ambient: usize,
    basis: Vec<Vec<FieldElement>>,
}

impl Subspace {
    pub fn zero(ctx: &FieldCtx, ambient: usize) -> Self {
        Subspace { ctx: ctx.clone(), ambient, basis: Vec::new() }
    }

    pub fn whole(ctx: &FieldCtx, ambient: usize) -> Self {
        Self::span(ctx, ambient, Matrix::identity(ctx, ambient).row_space_basis())
    }

    /// The span of `vectors`, each of length `ambient`.
    pub fn span(ctx: &FieldCtx, ambient: usize, vectors: Vec<Vec<FieldElement>>) -> Self {
        let vectors: Vec<_> = vectors.into_iter().filter(|v| v.iter().any(|c| !c.is_zero())).collect();
        if vectors.is_empty() {
            return Self::zero(ctx, ambient);
        }
        let basis = Matrix::from_rows(ctx, vectors).expect("vectors share the ambient length").row_space_basis();
        Subspace { ctx: ctx.clone(), ambient, basis }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<FieldElement>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_whole(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn contains_vector(&self, v: &[FieldElement]) -> bool {
        let mut with = self.basis.clone();
        with.push(v.to_vec());
        Self::span(&self.ctx, self.ambient, with).dim() == self.dim()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains_vector(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Self::span(&self.ctx, self.ambient, all)
    }
}
