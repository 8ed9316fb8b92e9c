use std::collections::BTreeMap;

use rayon::prelude::*;

use super::rank::{rank_of, RankResult};
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::group::GroupElement;
use crate::hopf::{render, HElement, HopfOre, HopfStructure, Monomial, StructureTables, TensorElement};
use crate::linalg::{in_span, span_rank, SparseReducer, SparseRow};

/// A basis of {z ∈ H[D] : Δ(z) = z⊗g + 1⊗z}.
#[derive(Debug, Clone)]
pub struct SkewPrimitiveSpace {
    pub target: GroupElement,
    pub degree_bound: u32,
    /// Each vector has leading coefficient 1 at its highest monomial
    /// (x-degree descending, then group ascending), and no other basis vector
    /// involves that monomial.
    pub basis: Vec<HElement>,
    /// Every basis vector re-checked against the coproduct.
    pub verified: bool,
}

impl SkewPrimitiveSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

fn support(h: &HopfOre, sample: Option<&[GroupElement]>) -> Result<Vec<GroupElement>> {
    match sample {
        Some(s) => s.iter().map(|g| h.group().elem(g.coords())).collect(),
        None => h.group().elements().map_err(|_| Error::SampleRequired),
    }
}

fn solve(
    h: &HopfOre,
    tables: &StructureTables,
    elems: &[GroupElement],
    target: &GroupElement,
    degree: u32,
) -> SkewPrimitiveSpace {
    let ctx = h.ctx();
    // columns in (degree ascending, group descending) order so that free
    // columns, which lead the kernel vectors, are the highest monomials
    let mut cols: Vec<Monomial> =
        (0..=degree).flat_map(|d| elems.iter().map(move |g| Monomial::new(g.clone(), d))).collect();
    cols.sort_by(|a, b| a.degree.cmp(&b.degree).then_with(|| b.group.cmp(&a.group)));
    cols.dedup();
    let e = h.group().identity();
    let unit = Monomial::new(e, 0);
    let tgt = Monomial::new(target.clone(), 0);
    let mut rows: BTreeMap<(Monomial, Monomial), SparseRow> = BTreeMap::new();
    for (j, m) in cols.iter().enumerate() {
        let one = HElement::term(m.clone(), ctx.one());
        let mut image = h.coproduct_with(tables, &one);
        image.add_term((m.clone(), tgt.clone()), -ctx.one());
        image.add_term((unit.clone(), m.clone()), -ctx.one());
        for (k, c) in &image {
            rows.entry(k.clone()).or_default().insert(j, c.clone());
        }
    }
    let mut red = SparseReducer::new(ctx, cols.len());
    for (_, row) in rows {
        red.add_row(row);
    }
    let mut kernel: Vec<(usize, HElement)> = red
        .nullspace()
        .into_iter()
        .map(|v| {
            let lead = *v.keys().next_back().expect("kernel vectors are nonzero");
            let z: HElement = v.into_iter().map(|(j, c)| (cols[j].clone(), c)).collect();
            (lead, z)
        })
        .collect();
    kernel.sort_by_key(|k| std::cmp::Reverse(k.0));
    let basis: Vec<HElement> = kernel.into_iter().map(|(_, z)| z).collect();
    let verified = basis.iter().all(|z| is_skew_primitive(h, tables, z, target));
    SkewPrimitiveSpace { target: target.clone(), degree_bound: degree, basis, verified }
}

fn is_skew_primitive(h: &HopfOre, tables: &StructureTables, z: &HElement, g: &GroupElement) -> bool {
    let lhs = h.coproduct_with(tables, z);
    let mut rhs = TensorElement::zero();
    let unit = Monomial::new(h.group().identity(), 0);
    for (m, c) in z {
        rhs.add_term((m.clone(), Monomial::new(g.clone(), 0)), c.clone());
        rhs.add_term((unit.clone(), m.clone()), c.clone());
    }
    lhs == rhs
}

/// Solves Δ(z) = z⊗g + 1⊗z over {h·xⁱ : h in the group (or sample), i ≤ D}.
pub fn skew_primitives(
    h: &HopfOre,
    target: &GroupElement,
    degree: u32,
    sample: Option<&[GroupElement]>,
) -> Result<SkewPrimitiveSpace> {
    let elems = support(h, sample)?;
    let target = h.group().elem(target.coords())?;
    let tables = h.tables(degree);
    Ok(solve(h, &tables, &elems, &target, degree))
}

/// Per-target comparison between the solver and the predicted generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TargetCount {
    pub target: GroupElement,
    pub found: usize,
    pub expected: usize,
}

#[derive(Debug, Clone)]
pub struct RankCrosscheck {
    pub predicted: RankResult,
    pub degree_bound: u32,
    /// Rank of {1} ∪ {π(z)}, π: h·xⁱ ↦ xⁱ, over all solved targets.
    pub span_dim: usize,
    pub expected_span_dim: usize,
    /// Predicted generators (rendered) found in the projected span.
    pub generators_found: Vec<String>,
    pub generators_missing: Vec<String>,
    pub per_target: Vec<TargetCount>,
    pub all_verified: bool,
}

impl RankCrosscheck {
    pub fn agrees(&self) -> bool {
        self.span_dim == self.expected_span_dim
            && self.generators_missing.is_empty()
            && self.per_target.iter().all(|t| t.found == t.expected)
            && self.all_verified
    }
}

fn project(z: &HElement, degree: u32, zero: &FieldElement) -> Vec<FieldElement> {
    let mut v = vec![zero.clone(); degree as usize + 1];
    for (m, c) in z {
        let slot = &mut v[m.degree as usize];
        *slot = &*slot + c;
    }
    v
}

/// Compares the brute-force H₁ ∩ H[D] with [`rank_of`].
pub fn rank_crosscheck(h: &HopfOre, degree: u32, sample: Option<&[GroupElement]>) -> Result<RankCrosscheck> {
    let elems = support(h, sample)?;
    let tables = h.tables(degree);
    let spaces: Vec<SkewPrimitiveSpace> = elems.par_iter().map(|g| solve(h, &tables, &elems, g, degree)).collect();
    let predicted = rank_of(h);
    let gens = predicted.generators(h, degree);
    let ctx = h.ctx();
    let zero = ctx.zero();

    let mut vectors = vec![project(&h.one(), degree, &zero)];
    for s in &spaces {
        vectors.extend(s.basis.iter().map(|z| project(z, degree, &zero)));
    }
    let span_dim = span_rank(ctx, &vectors);
    let (mut found, mut missing) = (Vec::new(), Vec::new());
    for gen in &gens {
        let name = render(&gen.element);
        if in_span(ctx, &vectors, &project(&gen.element, degree, &zero)) {
            found.push(name);
        } else {
            missing.push(name);
        }
    }
    let per_target = spaces
        .iter()
        .map(|s| {
            let expected = usize::from(!s.target.is_identity()) + gens.iter().filter(|g| g.target == s.target).count();
            TargetCount { target: s.target.clone(), found: s.dim(), expected }
        })
        .collect();
    Ok(RankCrosscheck {
        predicted,
        degree_bound: degree,
        span_dim,
        expected_span_dim: 1 + gens.len(),
        generators_found: found,
        generators_missing: missing,
        per_target,
        all_verified: spaces.iter().all(|s| s.verified),
    })
}
