//! `End(Phi; X) = ⊕_h Hom_A(X, ^{phi_h} X)` and its identification with
//! smash products.
//!
//! `^{alpha} X` carries the action `a * v = alpha(a) v`. A homogeneous
//! element `(alpha, h)` is stored as the block matrix on `X^{|H|}` whose
//! block `(h + k, k)` is `alpha` for every `k`, so composition of blocks
//! realises `(alpha, h)(beta, k) = (alpha ∘ beta, h + k)`.

use serde::Serialize;

use super::action::GroupAction;
use super::product::{smash_product, SmashAlgebra, SmashFlavor};
use crate::algcore::linalg::{Matrix, Vector};
use crate::algcore::{
    algebra_from_matrices, certify_algebra_map, hom_ungraded, is_module_map, matrix_coordinates, GradedAlgebra, GradedModule,
    TableCertificate,
};
use crate::error::{Error, Result};

/// `End(Phi; X)` with basis `slots[i] = (h, alpha)`.
#[derive(Clone, Debug)]
pub struct EndPhi {
    pub algebra: GradedAlgebra,
    pub slots: Vec<(usize, Matrix)>,
}

/// The module over the ungraded algebra that twisting needs.
fn ungraded_module(action: &GroupAction, x: &GradedModule) -> Result<GradedModule> {
    let au = action.algebra().ungraded();
    if x.algebra() == &au {
        Ok(x.clone())
    } else if x.algebra() == action.algebra() {
        Ok(x.ungraded(&au))
    } else {
        Err(Error::AlgebraMismatch("module is not over the acted-on algebra".into()))
    }
}

fn twist(action: &GroupAction, x: &GradedModule, h: usize) -> Result<GradedModule> {
    x.twisted(action.image(h))
}

fn slot_matrix(action: &GroupAction, dx: usize, h: usize, alpha: &Matrix) -> Matrix {
    let group = action.group();
    let n = group.order();
    let mut m = Matrix::zeros(alpha.field(), n * dx, n * dx);
    for k in 0..n {
        m.set_block(group.add_idx(h, k) * dx, k * dx, alpha);
    }
    m
}

pub fn end_phi(action: &GroupAction, x: &GradedModule) -> Result<EndPhi> {
    let x = ungraded_module(action, x)?;
    let field = action.algebra().field();
    let dx = x.dim();
    let mut slots = Vec::new();
    for h in 0..action.group().order() {
        let target = twist(action, &x, h)?;
        for alpha in hom_ungraded(&x, &target)? {
            slots.push((h, alpha));
        }
    }
    let blocks: Vec<Matrix> = slots.iter().map(|(h, a)| slot_matrix(action, dx, *h, a)).collect();
    let degrees = slots.iter().map(|(h, _)| *h).collect();
    let algebra = algebra_from_matrices(field, &blocks, Some((action.group().clone(), degrees)))?;
    Ok(EndPhi { algebra, slots })
}

#[derive(Clone, Debug)]
pub struct EndPhiA {
    pub end: EndPhi,
    pub smash: SmashAlgebra,
    /// `(alpha, h) -> (alpha(1), h)`.
    pub map: Matrix,
    pub certificate: TableCertificate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EndPhiSummary {
    pub dim: usize,
    pub slot_dims: Vec<usize>,
    pub smash_dim: usize,
    pub isomorphism: bool,
    pub failures: usize,
}

fn slot_dims(end: &EndPhi, n: usize) -> Vec<usize> {
    (0..n).map(|h| end.slots.iter().filter(|(k, _)| *k == h).count()).collect()
}

impl EndPhiA {
    pub fn summary(&self) -> EndPhiSummary {
        EndPhiSummary {
            dim: self.end.algebra.dim(),
            slot_dims: slot_dims(&self.end, self.smash.action.group().order()),
            smash_dim: self.smash.dim(),
            isomorphism: self.certificate.is_isomorphism(),
            failures: self.certificate.failures.len(),
        }
    }
}

/// `End(Phi; A)` compared with `A^op # H` by full table comparison.
pub fn end_phi_a(action: &GroupAction) -> Result<EndPhiA> {
    let a = action.algebra();
    let end = end_phi(action, &GradedModule::regular(a))?;
    let smash = smash_product(action, SmashFlavor::Op)?;
    let cols: Vec<Vector> = end
        .slots
        .iter()
        .map(|(h, alpha)| smash.element(&alpha.apply(a.unit()), *h))
        .collect();
    let map = Matrix::from_columns(a.field(), &cols, smash.dim());
    let certificate = certify_algebra_map(&end.algebra, &smash.algebra, &map);
    Ok(EndPhiA {
        end,
        smash,
        map,
        certificate,
    })
}

/// Maps `psi_h : X -> ^{phi_h} X` with `psi_0 = 1` and
/// `psi_k psi_h = psi_{h+k}` as matrices.
#[derive(Clone, Debug)]
pub struct CompatibleAction {
    action: GroupAction,
    module: GradedModule,
    psi: Vec<Matrix>,
}

impl CompatibleAction {
    pub fn new(action: &GroupAction, module: &GradedModule, psi: Vec<Matrix>) -> Result<CompatibleAction> {
        let module = ungraded_module(action, module)?;
        let group = action.group();
        let n = group.order();
        let dx = module.dim();
        let field = action.algebra().field();
        if psi.len() != n {
            return Err(Error::IncompatiblePsi(format!("{} maps for a group of order {n}", psi.len())));
        }
        if psi[0] != Matrix::identity(field, dx) {
            return Err(Error::IncompatiblePsi("psi at the identity is not the identity".into()));
        }
        for (h, p) in psi.iter().enumerate() {
            if !is_module_map(&module, &twist(action, &module, h)?, p) {
                return Err(Error::IncompatiblePsi(format!("psi_{h} is not a module map X -> ^phi_{h} X")));
            }
        }
        for h in 0..n {
            for k in 0..n {
                if psi[k].mul(&psi[h]) != psi[group.add_idx(h, k)] {
                    return Err(Error::IncompatiblePsi(format!("psi_{k} psi_{h} != psi_{}", group.add_idx(h, k))));
                }
            }
        }
        Ok(CompatibleAction {
            action: action.clone(),
            module,
            psi,
        })
    }

    /// `X = A` with `psi = phi`.
    pub fn regular(action: &GroupAction) -> Result<CompatibleAction> {
        let a = action.algebra();
        CompatibleAction::new(action, &GradedModule::regular(a), action.images().to_vec())
    }

    pub fn action(&self) -> &GroupAction {
        &self.action
    }

    pub fn module(&self) -> &GradedModule {
        &self.module
    }

    pub fn psi(&self, h: usize) -> &Matrix {
        &self.psi[h]
    }
}

#[derive(Clone, Debug)]
pub struct ThetaReport {
    /// `End_A(X)`, product `a * b = a b`.
    pub end_x: GradedAlgebra,
    pub end_basis: Vec<Matrix>,
    /// `theta_h(alpha) = psi_h alpha psi_{-h}`, validated as an action.
    pub theta: GroupAction,
    pub end_phi: EndPhi,
    pub smash: SmashAlgebra,
    /// `(alpha, h) -> (alpha psi_{-h}, h)`.
    pub map: Matrix,
    pub certificate: TableCertificate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaSummary {
    pub end_dim: usize,
    pub end_phi_dim: usize,
    pub smash_dim: usize,
    pub theta_trivial: bool,
    pub isomorphism: bool,
}

impl ThetaReport {
    pub fn summary(&self) -> ThetaSummary {
        ThetaSummary {
            end_dim: self.end_x.dim(),
            end_phi_dim: self.end_phi.algebra.dim(),
            smash_dim: self.smash.dim(),
            theta_trivial: self.theta.is_trivial(),
            isomorphism: self.certificate.is_isomorphism(),
        }
    }
}

fn coordinates_in(basis: &[Matrix], m: &Matrix) -> Vector {
    matrix_coordinates(basis, m).expect("matrix lies in the span of the basis")
}

pub fn compatible_theta(c: &CompatibleAction) -> Result<ThetaReport> {
    let action = &c.action;
    let group = action.group();
    let field = action.algebra().field();
    let x = &c.module;
    let end_basis = hom_ungraded(x, x)?;
    let end_x = algebra_from_matrices(field, &end_basis, None)?;
    let mut thetas = Vec::new();
    for h in 0..group.order() {
        let inv = &c.psi[group.neg_idx(h)];
        let cols: Vec<Vector> = end_basis
            .iter()
            .map(|b| coordinates_in(&end_basis, &c.psi[h].mul(b).mul(inv)))
            .collect();
        thetas.push(Matrix::from_columns(field, &cols, end_basis.len()));
    }
    let theta = GroupAction::new(&end_x, group.clone(), thetas)?;
    let end_phi = end_phi(action, x)?;
    let smash = smash_product(&theta, SmashFlavor::Standard)?;
    let cols: Vec<Vector> = end_phi
        .slots
        .iter()
        .map(|(h, alpha)| {
            let a = alpha.mul(&c.psi[group.neg_idx(*h)]);
            smash.element(&coordinates_in(&end_basis, &a), *h)
        })
        .collect();
    let map = Matrix::from_columns(field, &cols, smash.dim());
    let certificate = certify_algebra_map(&end_phi.algebra, &smash.algebra, &map);
    Ok(ThetaReport {
        end_x,
        end_basis,
        theta,
        end_phi,
        smash,
        map,
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{a3, dual_numbers, matrix_superalgebra};
    use crate::exactmath::{FinAbGroup, Field};
    use crate::smash::inner_automorphism;

    fn q() -> Field {
        Field::rationals()
    }

    #[test]
    fn end_phi_of_trivial_action() {
        let a = dual_numbers(q());
        let h = FinAbGroup::cyclic(2).unwrap();
        let r = end_phi_a(&GroupAction::trivial(&a, h.clone())).unwrap();
        assert!(r.certificate.is_isomorphism());
        let tensor = crate::centres::group_tensor_algebra(&a.opposite(), &h);
        assert_eq!(r.smash.algebra.triples(), tensor.triples());
    }

    #[test]
    fn end_phi_of_grading_actions() {
        let r = end_phi_a(&GroupAction::from_grading(&dual_numbers(q())).unwrap()).unwrap();
        assert_eq!(r.summary().dim, 4);
        assert!(r.summary().isomorphism);
        let p = a3(q(), true);
        let r = end_phi_a(&GroupAction::from_grading(p.algebra()).unwrap()).unwrap();
        assert_eq!(r.summary().slot_dims, [6, 6]);
        assert!(r.certificate.is_isomorphism());
    }

    #[test]
    fn end_phi_under_conjugation() {
        let a = matrix_superalgebra(q());
        let f = q();
        let phi = GroupAction::from_grading(&a).unwrap();
        let sigma = inner_automorphism(&a, &[f.one(), f.one(), f.zero(), f.one()]).unwrap();
        let psi = phi.conjugated(&sigma).unwrap();
        let r1 = end_phi_a(&phi).unwrap();
        let r2 = end_phi_a(&psi).unwrap();
        assert!(r1.certificate.is_isomorphism() && r2.certificate.is_isomorphism());
        // (a, h) -> (sigma^{-1} a, h) identifies the two smash products
        let inv = sigma.inverse().unwrap();
        let n = phi.group().order();
        let map = Matrix::identity(f, n).kron(&inv);
        assert!(certify_algebra_map(&r2.smash.algebra, &r1.smash.algebra, &map).is_isomorphism());
    }

    #[test]
    fn theta_for_regular_object_is_phi() {
        let a = dual_numbers(q());
        let phi = GroupAction::from_grading(&a).unwrap();
        let r = compatible_theta(&CompatibleAction::regular(&phi).unwrap()).unwrap();
        assert!(r.certificate.is_isomorphism());
        // alpha -> alpha(1) intertwines theta_h and phi_h
        let ev: Vec<Vector> = r.end_basis.iter().map(|m| m.apply(a.unit())).collect();
        let ev = Matrix::from_columns(q(), &ev, a.dim());
        for h in 0..2 {
            assert_eq!(ev.mul(r.theta.image(h)), phi.image(h).mul(&ev));
        }
    }

    #[test]
    fn theta_trivial_for_identity_psi() {
        let a = dual_numbers(q());
        let h = FinAbGroup::cyclic(2).unwrap();
        let triv = GroupAction::trivial(&a, h);
        let x = GradedModule::regular(&a);
        let id = Matrix::identity(q(), 2);
        let c = CompatibleAction::new(&triv, &x, vec![id.clone(), id]).unwrap();
        assert!(compatible_theta(&c).unwrap().summary().theta_trivial);
    }

    #[test]
    fn swap_on_sum_with_twist() {
        let f = q();
        let a = dual_numbers(f);
        let phi = GroupAction::from_grading(&a).unwrap();
        let au = a.ungraded();
        let reg = GradedModule::regular(&au);
        let x = GradedModule::direct_sum(&au, &[reg.clone(), reg.twisted(phi.image(1)).unwrap()]);
        let swap = Matrix::from_rows(
            f,
            (0..4).map(|r| crate::algcore::linalg::unit_vec(f, 4, (r + 2) % 4)).collect(),
            4,
        );
        let c = CompatibleAction::new(&phi, &x, vec![Matrix::identity(f, 4), swap]).unwrap();
        let r = compatible_theta(&c).unwrap();
        assert_eq!(r.end_x.dim(), 8);
        assert_eq!(r.smash.dim(), 16);
        assert!(r.certificate.is_isomorphism());
    }

    #[test]
    fn incompatible_psi_rejected() {
        let f = q();
        let a = dual_numbers(f);
        let phi = GroupAction::from_grading(&a).unwrap();
        let x = GradedModule::regular(&a);
        let id = Matrix::identity(f, 2);
        let err = CompatibleAction::new(&phi, &x, vec![id.clone(), id]).unwrap_err();
        assert_eq!(err.name(), "IncompatiblePsi");
    }
}
