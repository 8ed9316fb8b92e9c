use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::group::{enumerate_characters, Character};
use crate::linalg::Matrix;

use super::module::ModuleRep;
use super::subspace::Subspace;

/// M_(λ) = {v : g·v = λ(g)v for all g}.
#[derive(Debug, Clone)]
pub struct WeightSpace {
    pub weight: Character,
    pub space: Subspace,
}

/// Π(M) with a basis of each nonzero weight space.
#[derive(Debug, Clone)]
pub struct WeightDecomposition {
    pub spaces: Vec<WeightSpace>,
    /// Whether the weight spaces add up to M.
    pub is_weight_module: bool,
}

impl WeightDecomposition {
    pub fn weights(&self) -> Vec<&Character> {
        self.spaces.iter().map(|w| &w.weight).collect()
    }

    pub fn multiplicity(&self, weight: &Character) -> usize {
        self.spaces.iter().find(|w| &w.weight == weight).map_or(0, |w| w.space.dim())
    }

    pub fn max_multiplicity(&self) -> usize {
        self.spaces.iter().map(|w| w.space.dim()).max().unwrap_or(0)
    }

    /// The concatenated weight bases, in weight order.
    pub fn weight_vectors(&self) -> Vec<Vec<FieldElement>> {
        self.spaces.iter().flat_map(|w| w.space.basis().iter().cloned()).collect()
    }
}

/// The recorded weight hint, or every character of a finite group.
pub fn default_candidates(m: &ModuleRep) -> Result<Vec<Character>> {
    match m.weight_hint() {
        Some(h) => Ok(h.to_vec()),
        None => enumerate_characters(m.ctx(), m.parent().group()),
    }
}

/// Weight spaces of M for the given candidate characters.
pub fn weight_spaces(m: &ModuleRep, candidates: &[Character]) -> Result<WeightDecomposition> {
    let ctx = m.ctx();
    let d = m.dim();
    let mut spaces = Vec::new();
    let mut seen: Vec<&Character> = Vec::new();
    for l in candidates {
        if seen.contains(&l) {
            continue;
        }
        seen.push(l);
        if l.group() != m.parent().group() {
            return Err(Error::GroupMismatch);
        }
        let mut rows: Vec<Vec<FieldElement>> = Vec::new();
        for (g, v) in m.group_matrices().iter().zip(l.images()) {
            let shifted = g.sub(&Matrix::scalar(ctx, d, v))?;
            rows.extend((0..d).map(|r| shifted.row(r).to_vec()));
        }
        let kernel = if rows.is_empty() {
            Matrix::identity(ctx, d).row_space_basis()
        } else {
            Matrix::from_rows(ctx, rows)?.nullspace()
        };
        let space = Subspace::span(ctx, d, kernel);
        if !space.is_zero() {
            spaces.push(WeightSpace { weight: l.clone(), space });
        }
    }
    spaces.sort_by(|a, b| a.weight.cmp(&b.weight));
    let total: usize = spaces.iter().map(|w| w.space.dim()).sum();
    Ok(WeightDecomposition { spaces, is_weight_module: total == d })
}

pub fn weight_spaces_default(m: &ModuleRep) -> Result<WeightDecomposition> {
    weight_spaces(m, &default_candidates(m)?)
}

/// The smallest subspace containing `vectors` and stable under every action
/// matrix.
pub fn generate_submodule(m: &ModuleRep, vectors: &[Vec<FieldElement>]) -> Result<Subspace> {
    let ctx = m.ctx();
    let d = m.dim();
    let mut cur = Subspace::span(ctx, d, vectors.to_vec());
    loop {
        let mut next = cur.basis().to_vec();
        for a in m.generators() {
            for v in cur.basis() {
                next.push(a.apply(v)?);
            }
        }
        let grown = Subspace::span(ctx, d, next);
        if grown.dim() == cur.dim() {
            return Ok(cur);
        }
        cur = grown;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Simplicity {
    Yes,
    /// A proper nonzero submodule, or zero when M itself is zero.
    No(Subspace),
    Undecided,
}

/// Exact for multiplicity-free weight modules: any nonzero submodule
/// contains a weight vector, hence a weight-basis vector. Otherwise a
/// search over basis vectors and pairwise sums can only disprove.
pub fn is_simple(m: &ModuleRep) -> Result<Simplicity> {
    let wd = weight_spaces_default(m)?;
    if !wd.is_weight_module {
        return Err(Error::NotWeightModule);
    }
    if m.dim() == 0 {
        return Ok(Simplicity::No(Subspace::zero(m.ctx(), 0)));
    }
    let vecs = wd.weight_vectors();
    let mut smallest: Option<Subspace> = None;
    for v in &vecs {
        let sub = generate_submodule(m, std::slice::from_ref(v))?;
        if !sub.is_whole() && smallest.as_ref().is_none_or(|s| sub.dim() < s.dim()) {
            smallest = Some(sub);
        }
    }
    if let Some(sub) = smallest {
        return Ok(Simplicity::No(sub));
    }
    if wd.max_multiplicity() <= 1 {
        return Ok(Simplicity::Yes);
    }
    for (i, u) in vecs.iter().enumerate() {
        for v in &vecs[i + 1..] {
            let s: Vec<FieldElement> = u.iter().zip(v).map(|(a, b)| a + b).collect();
            let sub = generate_submodule(m, &[s])?;
            if !sub.is_whole() {
                return Ok(Simplicity::No(sub));
            }
        }
    }
    Ok(Simplicity::Undecided)
}

/// All submodules of a multiplicity-free weight module, ordered by
/// dimension, with a verdict on whether they form a chain.
#[derive(Debug, Clone)]
pub struct SubmoduleLattice {
    pub submodules: Vec<Subspace>,
    pub totally_ordered: bool,
}

impl SubmoduleLattice {
    pub fn dims(&self) -> Vec<usize> {
        self.submodules.iter().map(Subspace::dim).collect()
    }
}

/// Every submodule is the sum of the cyclic submodules generated by the
/// weight-basis vectors it contains, so closing those under sums yields
/// the full lattice.
pub fn submodule_lattice_chain(m: &ModuleRep) -> Result<SubmoduleLattice> {
    let wd = weight_spaces_default(m)?;
    if !wd.is_weight_module {
        return Err(Error::NotWeightModule);
    }
    if wd.max_multiplicity() > 1 {
        return Err(Error::WeightMultiplicity(wd.max_multiplicity()));
    }
    let ctx = m.ctx();
    let mut subs = vec![Subspace::zero(ctx, m.dim())];
    for v in wd.weight_vectors() {
        let s = generate_submodule(m, &[v])?;
        if !subs.contains(&s) {
            subs.push(s);
        }
    }
    loop {
        let mut added = false;
        let snapshot = subs.clone();
        for (i, a) in snapshot.iter().enumerate() {
            for b in &snapshot[i + 1..] {
                let s = a.sum(b);
                if !subs.contains(&s) {
                    subs.push(s);
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    subs.sort_by_key(Subspace::dim);
    let totally_ordered = subs.windows(2).all(|w| w[1].contains(&w[0]))
        && subs.iter().zip(subs.iter().skip(1)).all(|(a, b)| a.dim() < b.dim());
    Ok(SubmoduleLattice { submodules: subs, totally_ordered })
}
