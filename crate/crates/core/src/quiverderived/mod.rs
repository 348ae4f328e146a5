//! Path algebras of acyclic quivers, bounded complexes over them and the
//! derived-category computations built on two-term resolutions.

pub mod appendix;
pub mod complex;
pub mod quiver;
pub mod tilting;

pub use appendix::{
    appendix_b, appendix_b_in_window, appendix_bimodules, appendix_tilting_summands, bimodule_family, tensor_complex, tilting_module_faithfulness,
    AppendixReport, ComplexEvaluation, FaithfulnessReport, IndecomposableEval,
};
pub use complex::{class_rank, hom_derived, projective_replacement, BoundedComplex, DerivedHom, Replacement};
pub use quiver::{parse_quiver, Arrow, Path, PathAlgebra, Quiver, QuiverFile};
pub use tilting::{integer_span, is_tilting_complex, k0_class, tilting_modules, TiltingVerdict};
