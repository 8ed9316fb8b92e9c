//! Modules over a Case 1 extension H = kG(χ⁻¹, a, 0) and its rank-one
//! quotients, with the module character χ = θ⁻¹.

mod classify;
mod homs;
mod module;
mod poly;
mod subspace;
mod tensor;
mod verma;
mod weights;

pub use classify::{
    certify_classification, classify_simples, ClassificationCertificate, SimpleClassification, SimpleFamily,
};
pub use homs::{
    cyclic_cover_check, is_indecomposable, is_isomorphic, module_homs, search_coefficients, CyclicCover,
    Indecomposability, IsoVerdict, NonIsoReason,
};
pub use module::{realize, validate_module, ModuleFailure, ModuleParent, ModuleRep, ModuleReport, SimpleSpec};
pub use poly::Polynomial;
pub use subspace::Subspace;
pub use tensor::{decompose_tensor, tensor_module, TensorSplitting};
pub use verma::{verma, verma_quotient_mod_ideal, VermaModule, VermaQuotient, VermaSubmodule};
pub use weights::{
    default_candidates, generate_submodule, is_simple, submodule_lattice_chain, weight_spaces, weight_spaces_default,
    Simplicity, SubmoduleLattice, WeightDecomposition, WeightSpace,
};
