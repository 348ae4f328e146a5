//! Smash products by finite abelian group actions, their `zeta`
//! subalgebras, and endomorphism algebras of objects with compatible
//! actions.

pub mod action;
pub mod endphi;
pub mod product;

pub use action::{action_from_file, action_to_file, inner_automorphism, parse_action, ActionFile, GroupAction};
pub use endphi::{
    compatible_theta, end_phi, end_phi_a, CompatibleAction, EndPhi, EndPhiA, EndPhiSummary, ThetaReport, ThetaSummary,
};
pub use product::{smash_product, zeta_subalgebras, SmashAlgebra, SmashFlavor, ZetaPart, ZetaSubalgebras, ZetaSummary};
