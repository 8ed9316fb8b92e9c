//! Turns validated config sections into core objects, attributing every
//! failure to a key path.

use std::sync::Arc;

use hopf_ore::group::{AbelianGroup, Character, Cocycle, GroupElement};
use hopf_ore::hopf::{HElement, HopfOre, Monomial};
use hopf_ore::{FieldCtx, FieldElement, FieldKind};

use crate::config::{ExtensionSpec, FieldSpec, TermSpec};
use crate::error::CliError;

/// Default box radius for sampling an infinite group.
const SAMPLE_RADIUS: i64 = 2;

pub struct Extension {
    pub ore: Arc<HopfOre>,
    /// A finite support sample, present exactly when G is infinite.
    pub sample: Option<Vec<GroupElement>>,
}

impl Extension {
    pub fn group(&self) -> &AbelianGroup {
        self.ore.theta().group()
    }
}

pub fn field(spec: &FieldSpec) -> Result<FieldCtx, CliError> {
    let kind = match *spec {
        FieldSpec::Rationals => FieldKind::Rationals,
        FieldSpec::Cyclotomic { n } => FieldKind::Cyclotomic(n),
        FieldSpec::Prime { p } => FieldKind::PrimeField(p),
        FieldSpec::Extension { p, e } => FieldKind::ExtField(p, e),
    };
    FieldCtx::new(kind).map_err(|e| CliError::invalid("field", e))
}

pub fn scalar(ctx: &FieldCtx, s: &str, path: &str) -> Result<FieldElement, CliError> {
    ctx.parse(s).map_err(|e| CliError::invalid(path, e))
}

pub fn scalars(ctx: &FieldCtx, values: &[String], path: &str) -> Result<Vec<FieldElement>, CliError> {
    values.iter().enumerate().map(|(i, s)| scalar(ctx, s, &format!("{path}[{i}]"))).collect()
}

pub fn character(ctx: &FieldCtx, group: &AbelianGroup, images: &[String], path: &str) -> Result<Character, CliError> {
    let values = scalars(ctx, images, path)?;
    Character::new(ctx, group, values).map_err(|e| CliError::invalid(path, e))
}

pub fn group_element(group: &AbelianGroup, coords: &[i64], path: &str) -> Result<GroupElement, CliError> {
    group.elem(coords).map_err(|e| CliError::invalid(path, e))
}

pub fn extension(ctx: &FieldCtx, spec: &ExtensionSpec) -> Result<Extension, CliError> {
    let group = AbelianGroup::new(spec.group.free_rank, spec.group.torsion_orders.clone())
        .map_err(|e| CliError::invalid("extension.group", e))?;
    let theta = character(ctx, &group, &spec.theta, "extension.theta")?;
    let a = group_element(&group, &spec.a, "extension.a")?;
    let alpha = match &spec.alpha {
        None => Cocycle::zero(&theta),
        Some(values) => {
            let values = scalars(ctx, values, "extension.alpha")?;
            let built = if spec.unchecked_alpha {
                Cocycle::new_unchecked(&theta, values)
            } else {
                Cocycle::new(&theta, values)
            };
            built.map_err(|e| CliError::invalid("extension.alpha", e))?
        }
    };
    let ore = HopfOre::new_unchecked(&theta, &a, &alpha).map_err(|e| CliError::invalid("extension", e))?;
    let ore = if spec.mutate_antipode { ore.with_mutated_antipode() } else { ore };
    let sample = (!group.is_finite()).then(|| group.sample_box(spec.sample_radius.unwrap_or(SAMPLE_RADIUS)));
    Ok(Extension { ore: Arc::new(ore), sample })
}

pub fn element(ext: &Extension, terms: &[TermSpec], path: &str) -> Result<HElement, CliError> {
    let ctx = ext.ore.theta().ctx();
    let mut out = HElement::zero();
    for (i, (coords, degree, coeff)) in terms.iter().enumerate() {
        let g = group_element(ext.group(), coords, &format!("{path}[{i}][0]"))?;
        let c = scalar(ctx, coeff, &format!("{path}[{i}][2]"))?;
        out.add_term(Monomial::new(g, *degree), c);
    }
    Ok(out)
}
