//! Smash products `A # H` and `A^op # H`, and their subalgebras `zeta`.

use serde::Serialize;

use super::action::GroupAction;
use crate::algcore::linalg::{LinearSystem, Matrix, Subspace, Vector};
use crate::algcore::{certify_algebra_map, GradedAlgebra, TableCertificate};
use crate::centres::{group_tensor_algebra, twisted_centre};
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SmashFlavor {
    /// `(a,h)(b,k) = (a phi_h(b), h+k)`
    Standard,
    /// `(a,h)(b,k) = (phi_h(b) a, h+k)`
    Op,
}

/// A smash product, basis `(e_i, h)` at index `h * dim A + i`, graded by
/// `H` through the second factor.
#[derive(Clone, Debug)]
pub struct SmashAlgebra {
    pub algebra: GradedAlgebra,
    pub flavor: SmashFlavor,
    pub action: GroupAction,
}

pub fn smash_product(action: &GroupAction, flavor: SmashFlavor) -> Result<SmashAlgebra> {
    let a = action.algebra();
    let h = action.group();
    let (d, n) = (a.dim(), h.order());
    let mut mult = Vec::new();
    for x in 0..n {
        let phi = action.image(x);
        for y in 0..n {
            let xy = h.add_idx(x, y);
            for i in 0..d {
                for j in 0..d {
                    let ei = a.basis_vector(i);
                    let img = phi.column(j);
                    let prod = match flavor {
                        SmashFlavor::Standard => a.mul(&ei, &img),
                        SmashFlavor::Op => a.mul(&img, &ei),
                    };
                    for (k, c) in prod.into_iter().enumerate() {
                        if !c.is_zero() {
                            mult.push((x * d + i, y * d + j, xy * d + k, c));
                        }
                    }
                }
            }
        }
    }
    let names = (0..n * d)
        .map(|idx| format!("{}#{}", a.name(idx % d), h.format_element(&h.element(idx / d))))
        .collect();
    let degrees = (0..n * d).map(|idx| idx / d).collect();
    let mut unit = vec![a.field().zero(); n * d];
    unit[..d].clone_from_slice(a.unit());
    let algebra = GradedAlgebra::new(a.field(), h.clone(), names, degrees, mult, Some(unit))?;
    Ok(SmashAlgebra {
        algebra,
        flavor,
        action: action.clone(),
    })
}

impl SmashAlgebra {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `(a, h)` as a coordinate vector.
    pub fn element(&self, a: &[crate::exactmath::Scalar], h: usize) -> Vector {
        let d = self.action.algebra().dim();
        let mut v = vec![self.algebra.field().zero(); self.dim()];
        v[h * d..(h + 1) * d].clone_from_slice(a);
        v
    }
}

/// One of the two `zeta` subalgebras with its comparison against the
/// twisted centres computed directly in `A` or `A^op`.
#[derive(Clone, Debug)]
pub struct ZetaPart {
    /// Subspace of the smash product.
    pub space: Subspace,
    /// `(h, a)` pairs spanning the space.
    pub basis_pairs: Vec<(usize, Vector)>,
    pub twisted_centre_dims: Vec<usize>,
    pub same_as_twisted_centre: bool,
    /// Identity on coordinates, from the subalgebra of the smash product
    /// to the subalgebra of `A ⊗ kH` (resp. `A^op ⊗ kH`).
    pub certificate: TableCertificate,
}

#[derive(Clone, Debug)]
pub struct ZetaSubalgebras {
    /// `zeta^phi(A)` inside `A^op # H`, compared with `Z^phi(A)`.
    pub upper: ZetaPart,
    /// `zeta_phi(A)` inside `A # H`, compared with `Z^phi(A^op)`.
    pub lower: ZetaPart,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZetaSummary {
    pub upper_dim: usize,
    pub lower_dim: usize,
    pub upper_pieces: Vec<usize>,
    pub lower_pieces: Vec<usize>,
    pub upper_isomorphic: bool,
    pub lower_isomorphic: bool,
}

impl ZetaSubalgebras {
    pub fn summary(&self) -> ZetaSummary {
        ZetaSummary {
            upper_dim: self.upper.space.dim(),
            lower_dim: self.lower.space.dim(),
            upper_pieces: self.upper.twisted_centre_dims.clone(),
            lower_pieces: self.lower.twisted_centre_dims.clone(),
            upper_isomorphic: self.upper.same_as_twisted_centre && self.upper.certificate.is_isomorphism(),
            lower_isomorphic: self.lower.same_as_twisted_centre && self.lower.certificate.is_isomorphism(),
        }
    }
}

/// Solve `z (e_j, 0) = Σ_h (a_h ∘ e_j, h)` in the smash product, where
/// `∘` is the product of `plain` (A for the upper part, `A^op` for the
/// lower one).
fn zeta_part(smash: &SmashAlgebra, plain: &GradedAlgebra) -> Result<ZetaPart> {
    let a = smash.action.algebra();
    let field = a.field();
    let h = smash.action.group();
    let (d, n) = (a.dim(), h.order());
    let mut sys = LinearSystem::new(field, n * d);
    let id_h = Matrix::identity(field, n);
    for &j in a.generators() {
        let lhs = smash.algebra.right_mult(j);
        let rhs = id_h.kron(&plain.right_mult(j));
        sys.push_matrix_rows(&lhs.sub(&rhs));
        sys.compact();
    }
    let space = Subspace::from_vectors(field, n * d, &sys.nullspace());

    let pieces = twisted_centre(plain, smash.action.images());
    let twisted_centre_dims = pieces.iter().map(Subspace::dim).collect();
    let mut basis_pairs = Vec::new();
    let mut direct = Vec::new();
    for (x, p) in pieces.iter().enumerate() {
        for v in p.basis() {
            basis_pairs.push((x, v.clone()));
            direct.push(smash.element(v, x));
        }
    }
    let direct = Subspace::from_vectors(field, n * d, &direct);
    let same = direct == space;

    let basis = space.basis();
    let sub = smash.algebra.subalgebra(basis, "z")?;
    let ambient = group_tensor_algebra(plain, h);
    let target = ambient.subalgebra(basis, "z")?;
    let certificate = certify_algebra_map(&sub, &target, &Matrix::identity(field, basis.len()));
    Ok(ZetaPart {
        space,
        basis_pairs,
        twisted_centre_dims,
        same_as_twisted_centre: same,
        certificate,
    })
}

pub fn zeta_subalgebras(action: &GroupAction) -> Result<ZetaSubalgebras> {
    let a = action.algebra();
    let op = smash_product(action, SmashFlavor::Op)?;
    let std = smash_product(action, SmashFlavor::Standard)?;
    Ok(ZetaSubalgebras {
        upper: zeta_part(&op, a)?,
        lower: zeta_part(&std, &a.opposite())?,
    })
}
