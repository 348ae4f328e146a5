//! Centre-like invariants of group-graded finite-dimensional algebras,
//! computed in exact arithmetic.

pub mod error;
pub mod algcore;
pub mod catalog;
pub mod centres;
pub mod exactmath;
pub mod quiverderived;
pub mod shiftnat;
pub mod smash;

pub use error::{Error, Result};
