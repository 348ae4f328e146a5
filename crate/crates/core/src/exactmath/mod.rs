//! Exact scalars and finite abelian groups with their characters.

pub mod field;
pub mod group;

pub use field::{characteristic_divides, cyclotomic_polynomial, make_field, totient, Field, FieldSpec, Scalar};
pub use group::{
    char_combination_to_function, char_to_function, character_group, characters, function_to_char,
    verify_orthogonality, Character, CharacterGroup, FinAbGroup, GroupElem, OrthogonalityReport,
};
