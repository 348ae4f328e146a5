//! Graded algebras, modules, bimodules and the linear algebra under them.

pub mod algebra;
pub mod bimodule;
pub mod hom;
pub mod io;
pub mod linalg;
pub mod module;
pub mod tensor;

pub use algebra::{
    certify_algebra_map, check_automorphism, grading_automorphism, GradedAlgebra, TableCertificate, Triple,
};
pub use bimodule::{hom_bimodules, is_bimodule_map, is_projective, Bimodule};
pub use hom::{algebra_from_matrices, endomorphism_algebra, hom_modules, hom_ungraded, is_module_map, matrix_coordinates, ModuleHom};
pub use linalg::{LinearSystem, Matrix, Subspace, Vector};
pub use module::GradedModule;
pub use tensor::{bimodule_map_on_tensor, tensor_map, tensor_over_a, TensorProduct};

/// `^alpha M` for a verified automorphism `alpha`.
pub fn twist_module(m: &GradedModule, alpha: &Matrix) -> crate::Result<GradedModule> {
    m.twisted(alpha)
}
