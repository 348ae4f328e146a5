mod common;

use common::{config, klein_group_algebra, q};
use gcentre::algcore::{hom_ungraded, GradedAlgebra, GradedModule, Matrix};
use gcentre::catalog::{truncated_polynomial, z2_test_algebras};
use gcentre::exactmath::Field;
use gcentre::smash::{
    compatible_theta, end_phi_a, inner_automorphism, smash_product, zeta_subalgebras, CompatibleAction, GroupAction,
    SmashFlavor,
};
use proptest::prelude::*;

fn algebras() -> Vec<(&'static str, GradedAlgebra)> {
    let mut out = z2_test_algebras(q());
    out.push(("k[t]/t^3 over Z3", truncated_polynomial(Field::cyclotomic(3).unwrap(), 3).unwrap()));
    out.push(("kZ2xZ2", klein_group_algebra(q())));
    out
}

/// The grading action conjugated by `x -> u x u^{-1}` for a degree-zero
/// unit `u = 1 + sum c_i e_i`; `None` when `u` is not invertible.
fn conjugated_grading(a: &GradedAlgebra, coeffs: &[i64]) -> Option<GroupAction> {
    let field = a.field();
    let mut u = a.unit().clone();
    for (i, c) in (0..a.dim()).filter(|&i| a.degree(i) == 0).zip(coeffs.iter().cycle()) {
        u[i] = &u[i] + &field.from_i64(*c);
    }
    let sigma = inner_automorphism(a, &u).ok()?;
    GroupAction::from_grading(a).unwrap().conjugated(&sigma).ok()
}

fn associative(s: &GradedAlgebra) -> bool {
    let e: Vec<_> = (0..s.dim()).map(|i| s.basis_vector(i)).collect();
    e.iter().all(|x| {
        e.iter()
            .all(|y| e.iter().all(|z| s.mul(&s.mul(x, y), z) == s.mul(x, &s.mul(y, z))))
    })
}

proptest! {
    #![proptest_config(config(32))]

    #[test]
    fn smash_products_are_associative(alg in 0usize..6, coeffs in prop::collection::vec(-2i64..=2, 1..6), op in any::<bool>()) {
        let (name, a) = &algebras()[alg];
        let Some(phi) = conjugated_grading(a, &coeffs) else { return Ok(()); };
        let flavor = if op { SmashFlavor::Op } else { SmashFlavor::Standard };
        let s = smash_product(&phi, flavor).unwrap();
        prop_assert_eq!(s.dim(), a.dim() * phi.group().order());
        prop_assert!(associative(&s.algebra), "{}", name);
    }

    /// `(a, h)` in the upper zeta part satisfies `a b = phi_h(b) a` for every
    /// basis element `b`, not only the generators it was solved on.
    #[test]
    fn zeta_elements_twist_commute(alg in 0usize..6, coeffs in prop::collection::vec(-2i64..=2, 1..6)) {
        let (name, a) = &algebras()[alg];
        let Some(phi) = conjugated_grading(a, &coeffs) else { return Ok(()); };
        let z = zeta_subalgebras(&phi).unwrap();
        for (h, x) in &z.upper.basis_pairs {
            for j in 0..a.dim() {
                let b = a.basis_vector(j);
                prop_assert_eq!(a.mul(x, &b), a.mul(&phi.apply(*h, &b), x), "{}", name);
            }
        }
        let s = z.summary();
        prop_assert!(s.upper_isomorphic && s.lower_isomorphic, "{}: {:?}", name, s);
    }

    #[test]
    fn end_phi_is_invariant_under_conjugation(alg in 0usize..6, coeffs in prop::collection::vec(-2i64..=2, 1..6)) {
        let (name, a) = &algebras()[alg];
        let Some(phi) = conjugated_grading(a, &coeffs) else { return Ok(()); };
        let base = end_phi_a(&GroupAction::from_grading(a).unwrap()).unwrap().summary();
        let conj = end_phi_a(&phi).unwrap().summary();
        prop_assert!(base.isomorphism && conj.isomorphism, "{}", name);
        prop_assert_eq!(base.dim, conj.dim);
        prop_assert_eq!(base.slot_dims, conj.slot_dims);
    }

    /// `psi_h` on `A + A`, conjugated by a random automorphism of the module:
    /// `theta` is an action by algebra automorphisms and the algebra
    /// isomorphism certificate passes.
    #[test]
    fn theta_is_an_action(alg in 0usize..4, coeffs in prop::collection::vec(-2i64..=2, 1..12)) {
        let (name, a) = &z2_test_algebras(q())[alg];
        let field = a.field();
        let phi = GroupAction::from_grading(a).unwrap();
        let reg = GradedModule::regular(a);
        let x = GradedModule::direct_sum(a, &[reg.clone(), reg]);
        let ends = hom_ungraded(&x, &x).unwrap();
        let mut u = Matrix::identity(field, x.dim());
        for (b, c) in ends.iter().zip(coeffs.iter().cycle()) {
            u = u.add(&b.scale(&field.from_i64(*c)));
        }
        let Some(u_inv) = u.inverse() else { return Ok(()); };
        let psi: Vec<Matrix> = phi
            .images()
            .iter()
            .map(|m| u.mul(&Matrix::block_diag(field, &[m.clone(), m.clone()])).mul(&u_inv))
            .collect();
        let c = CompatibleAction::new(&phi, &x, psi).unwrap();
        let r = compatible_theta(&c).unwrap();
        let group = phi.group();
        let end = &r.end_x;
        for h in 0..group.order() {
            for g in 0..group.order() {
                prop_assert_eq!(r.theta.image(h).mul(r.theta.image(g)), r.theta.image(group.add_idx(h, g)).clone());
            }
            for i in 0..end.dim() {
                for j in 0..end.dim() {
                    let (ei, ej) = (end.basis_vector(i), end.basis_vector(j));
                    let lhs = r.theta.apply(h, &end.mul(&ei, &ej));
                    let rhs = end.mul(&r.theta.apply(h, &ei), &r.theta.apply(h, &ej));
                    prop_assert_eq!(lhs, rhs, "{}", name);
                }
            }
        }
        prop_assert!(r.summary().isomorphism, "{}", name);
    }
}

#[test]
fn twelve_dimensional_smash_for_a3_parity() {
    let pa = gcentre::catalog::a3(q(), true);
    let phi = GroupAction::from_grading(pa.algebra()).unwrap();
    let s = smash_product(&phi, SmashFlavor::Standard).unwrap();
    assert_eq!(s.dim(), 12);
    assert!(associative(&s.algebra));
    let e = end_phi_a(&phi).unwrap().summary();
    assert_eq!(e.smash_dim, 12);
    assert!(e.isomorphism);
}
