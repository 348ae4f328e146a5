//! `X ⊗_A M` for a bimodule `X` and a left module `M`.

use super::bimodule::Bimodule;
use super::linalg::{Matrix, Subspace, Vector};
use super::module::{quotient_maps, GradedModule};
use crate::error::{Error, Result};

/// The quotient of `X ⊗_k M` (basis index `p * dim M + q`) by the balancing
/// relations, with the canonical projection and a linear section.
#[derive(Clone, Debug)]
pub struct TensorProduct {
    pub module: GradedModule,
    /// `dim(X ⊗_A M) x dim(X ⊗_k M)`.
    pub projection: Matrix,
    /// `dim(X ⊗_k M) x dim(X ⊗_A M)`, with `projection * section = 1`.
    pub section: Matrix,
    pub outer_dim: usize,
}

pub fn tensor_over_a(x: &Bimodule, m: &GradedModule) -> Result<TensorProduct> {
    let a = x.right_algebra();
    if m.algebra() != a {
        return Err(Error::AlgebraMismatch(
            "module is not over the right algebra of the bimodule".into(),
        ));
    }
    let field = a.field();
    let (dx, dm) = (x.dim(), m.dim());
    let n = dx * dm;
    let ix = Matrix::identity(field, dx);
    let im = Matrix::identity(field, dm);
    // Relations x.b ⊗ v - x ⊗ b.v span the image of R_b ⊗ 1 - 1 ⊗ L_b.
    let mut rels: Vec<Vector> = Vec::new();
    for &b in a.generators() {
        let rel = x.right_action(b).kron(&im).sub(&ix.kron(m.action(b)));
        rels.extend(rel.columns());
    }
    let span = Subspace::from_vectors(field, n, &rels);
    let (projection, section) = quotient_maps(&span);
    let left = x.left_algebra();
    let group = left.group();
    let degrees: Vec<usize> = (0..projection.rows())
        .map(|k| {
            let c = (0..n).find(|&c| section.get(c, k).is_one()).expect("section is a coordinate embedding");
            group.add_idx(x.degrees()[c / dm.max(1)], m.degree(c % dm.max(1)))
        })
        .collect();
    let action = (0..left.dim())
        .map(|i| projection.mul(&x.left_action(i).kron(&im)).mul(&section))
        .collect();
    let module = GradedModule::new(left, degrees, action)?;
    Ok(TensorProduct {
        module,
        projection,
        section,
        outer_dim: n,
    })
}

/// `1_X ⊗ f : X ⊗_A M -> X ⊗_A N` for a module map `f : M -> N`.
pub fn tensor_map(x_dim: usize, source: &TensorProduct, target: &TensorProduct, f: &Matrix) -> Matrix {
    let ix = Matrix::identity(f.field(), x_dim);
    target.projection.mul(&ix.kron(f)).mul(&source.section)
}

/// `phi ⊗ 1_M : X ⊗_A M -> Y ⊗_A M` for a bimodule map `phi : X -> Y`.
pub fn bimodule_map_on_tensor(source: &TensorProduct, target: &TensorProduct, phi: &Matrix, m_dim: usize) -> Matrix {
    let im = Matrix::identity(phi.field(), m_dim);
    target.projection.mul(&phi.kron(&im)).mul(&source.section)
}
