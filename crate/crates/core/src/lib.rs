//! Exact computations with Hopf-Ore extensions of abelian group algebras:
//! rank classification, skew-primitive elements, rank-one quotients and
//! finite-dimensional representations.

pub mod error;
pub mod field;
pub mod group;
pub mod hopf;
pub mod linalg;
pub mod lincomb;
pub mod modrep;
pub mod samples;
pub mod structure;

pub use error::{Error, Result};
pub use field::{FieldCtx, FieldElement, FieldKind};
