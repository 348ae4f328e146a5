//! Grading shifts, natural transformations `Id => Pi_g` and their
//! G-centre description, and natural transformations between functors
//! `X ⊗_A -` induced by bimodules.

pub mod bimodnat;
pub mod pinat;
pub mod shift;

pub use bimodnat::{
    bimodule_nat, check_bimodule_naturality, eval_nat, evaluation_map, EvaluationReport, NatCertificate,
    NatRepresentation,
};
pub use pinat::{
    check_naturality, delta_zeta_module, end_pi, end_pi_regular, gcentre_from_nat, multiplication_transport,
    nat_family_on_shifts, nat_from_gcentre, test_family, DeltaZeta, DeltaZetaSummary, EndPi, EndPiA, EndPiSummary,
    NaturalityReport, TransportReport, TransportSummary,
};
pub use shift::{shift, shift_hom};
