//! Centre-like subalgebras: the classical centre, the G-centre, the
//! extended centre and the super, anti and ghost centres of `Z_2`-graded
//! algebras.

pub mod extended;
pub mod gcentre;
pub mod signed;

use serde::Serialize;

use crate::algcore::linalg::{LinearSystem, Subspace, Vector};
use crate::algcore::GradedAlgebra;
use crate::error::{Error, Result};

pub use extended::{
    embed_ext_to_g, embedding_report, extended_centre, group_tensor_algebra, invert_embedding, twisted_centre, EmbeddingReport, ExtendedCentre,
};
pub use gcentre::{g_centre, pointwise_algebra, underline_g_centre, BigradedPiece, GCentre};
pub use signed::{anti_centre, bigraded_decomposition_check, ghost_centre, super_centre, DecompositionReport};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BigradedDim {
    pub degree: String,
    pub character: String,
    pub dim: usize,
}

/// Stable JSON summary of a centre-like algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentreReport {
    pub kind: String,
    pub field: String,
    pub algebra_dim: usize,
    pub ambient_dim: usize,
    pub dimension: usize,
    pub basis: Vec<Vec<String>>,
    pub bigraded: Vec<BigradedDim>,
    /// Structure constants `(i, j, k, c)` in the basis above.
    pub table: Vec<(usize, usize, usize, String)>,
}

impl CentreReport {
    /// Summarise a subspace of `ambient` closed under `ambient`'s product.
    pub(crate) fn build(
        kind: &str,
        algebra_dim: usize,
        ambient: &GradedAlgebra,
        space: &Subspace,
        bigraded: Vec<BigradedDim>,
    ) -> Result<CentreReport> {
        let basis = space.basis();
        let mut table = Vec::new();
        for (i, x) in basis.iter().enumerate() {
            for (j, y) in basis.iter().enumerate() {
                let c = space.coordinates(&ambient.mul(x, y)).ok_or_else(|| {
                    Error::DimensionMismatch(format!("{kind}: product of basis elements {i}, {j} leaves the space"))
                })?;
                for (k, s) in c.into_iter().enumerate() {
                    if !s.is_zero() {
                        table.push((i, j, k, s.to_string()));
                    }
                }
            }
        }
        Ok(CentreReport {
            kind: kind.to_string(),
            field: ambient.field().spec().to_string(),
            algebra_dim,
            ambient_dim: ambient.dim(),
            dimension: space.dim(),
            basis: basis.iter().map(|v| v.iter().map(ToString::to_string).collect()).collect(),
            bigraded,
            table,
        })
    }
}

/// `{z : z e_j = e_j z}` over a generating set, as a subspace of `A`.
pub fn centre_space(a: &GradedAlgebra) -> Subspace {
    signed_commutant(a, &(0..a.dim()).collect::<Vec<_>>(), |_| None)
}

/// Solve `x e_j = c_j e_j x` for the generators `e_j`, where `coeff(j)`
/// gives `c_j` (`None` meaning 1) and `x` is supported on `vars`.
pub(crate) fn signed_commutant(
    a: &GradedAlgebra,
    vars: &[usize],
    coeff: impl Fn(usize) -> Option<crate::exactmath::Scalar>,
) -> Subspace {
    let field = a.field();
    let d = a.dim();
    let mut sys = LinearSystem::new(field, vars.len());
    for &j in a.generators() {
        let r = a.right_mult(j);
        let l = a.left_mult(j);
        let l = match coeff(j) {
            Some(c) => l.scale(&c),
            None => l,
        };
        for k in 0..d {
            let row: Vector = vars.iter().map(|&i| r.get(k, i) - l.get(k, i)).collect();
            sys.push(row);
        }
        sys.compact();
    }
    let sols: Vec<Vector> = sys
        .nullspace()
        .into_iter()
        .map(|s| {
            let mut v = vec![field.zero(); d];
            for (x, &i) in s.into_iter().zip(vars) {
                v[i] = x;
            }
            v
        })
        .collect();
    Subspace::from_vectors(field, d, &sols)
}

/// The classical centre `Z(A)`.
pub fn centre(a: &GradedAlgebra) -> Result<CentreReport> {
    let z = centre_space(a);
    CentreReport::build("centre", a.dim(), a, &z, Vec::new())
}
