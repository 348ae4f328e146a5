mod common;

use common::{config, degree_preserving, graded_algebras, klein_group_algebra, q, transport};
use gcentre::algcore::{GradedAlgebra, Matrix};
use gcentre::catalog::{a3, dual_numbers, group_algebra_z2, matrix_superalgebra, truncated_polynomial, z2_test_algebras};
use gcentre::centres::{
    anti_centre, centre_space, embedding_report, extended_centre, g_centre, ghost_centre, invert_embedding,
    super_centre, underline_g_centre,
};
use gcentre::exactmath::{characteristic_divides, Field};
use proptest::prelude::*;

fn same_subspace(a: &gcentre::algcore::Subspace, b: &gcentre::algcore::Subspace) -> bool {
    a.contains_subspace(b) && b.contains_subspace(a)
}

/// Every test algebra over several fields, including characteristics
/// dividing the group order.
fn algebras_in_all_characteristics() -> Vec<(String, GradedAlgebra)> {
    let mut out: Vec<(String, GradedAlgebra)> = graded_algebras().into_iter().map(|(n, a)| (n.to_string(), a)).collect();
    for p in [2, 3, 5, 7] {
        let f = Field::prime(p).unwrap();
        out.push((format!("dual numbers over F{p}"), dual_numbers(f)));
        out.push((format!("kZ2 over F{p}"), group_algebra_z2(f)));
        out.push((format!("M(1|1) over F{p}"), matrix_superalgebra(f)));
        out.push((format!("A3 parity over F{p}"), a3(f, true).algebra().clone()));
        out.push((format!("k[t]/t^3 over F{p}"), truncated_polynomial(f, 3).unwrap()));
        out.push((format!("kZ2xZ2 over F{p}"), klein_group_algebra(f)));
    }
    out
}

#[test]
fn g_centre_is_a_unital_subalgebra_with_finite_order_action() {
    for (name, a) in algebras_in_all_characteristics() {
        let gc = g_centre(&a);
        let c = gc.check_closure();
        assert!(c.closed && c.contains_unit && c.action_invertible, "{name}: {c:?}");
        let e = a.group().exponent();
        let n = gc.dim();
        for k in 0..a.group().order() {
            let m = gc.action_matrix(k);
            let mut power = Matrix::identity(a.field(), n);
            for _ in 0..e {
                power = power.mul(&m);
            }
            assert_eq!(power, Matrix::identity(a.field(), n), "{name}: action of {k}");
        }
    }
}

#[test]
fn embedding_is_injective_in_every_characteristic() {
    for (name, a) in algebras_in_all_characteristics() {
        let ext = match extended_centre(&a) {
            Ok(ext) => ext,
            // char prime to |G| but too few roots of unity: refused, not truncated
            Err(e) => {
                assert_eq!(e.name(), "MissingRootOfUnity", "{name}");
                assert!(!characteristic_divides(a.field(), a.group().order() as u64));
                continue;
            }
        };
        let gc = g_centre(&a);
        let r = embedding_report(&a, &ext, &gc);
        assert!(r.injective && r.holds(), "{name}: {r:?}");
        let divides = characteristic_divides(a.field(), a.group().order() as u64);
        if divides {
            assert!(r.round_trip.is_none(), "{name}");
            if let Some(x) = gc.basis().first() {
                assert_eq!(invert_embedding(&a, x).unwrap_err().name(), "CharacteristicDividesOrder");
            }
        } else {
            assert_eq!(ext.dim(), gc.dim(), "{name}");
            assert!(r.bijective && r.round_trip == Some(true), "{name}");
        }
    }
}

#[test]
fn dual_numbers_in_characteristic_two_lose_the_inverse() {
    let a = dual_numbers(Field::prime(2).unwrap());
    let ext = extended_centre(&a).unwrap();
    let gc = g_centre(&a);
    assert!(ext.dim() < gc.dim());
    assert!(embedding_report(&a, &ext, &gc).injective);
}

#[test]
fn z2_dimensions_and_ghost_centre() {
    for (name, a) in z2_test_algebras(q()) {
        let (sz, az, gh) = (super_centre(&a).unwrap(), anti_centre(&a).unwrap(), ghost_centre(&a).unwrap());
        assert_eq!(g_centre(&a).dim(), sz.dim() + az.dim(), "{name}");
        assert!(gh.dim() <= sz.dim() + az.dim(), "{name}");
        assert!(same_subspace(&gh, &underline_g_centre(&a)), "{name}");
    }
    // the inequality is strict for the dual numbers
    let a = dual_numbers(q());
    assert!(ghost_centre(&a).unwrap().dim() < super_centre(&a).unwrap().dim() + anti_centre(&a).unwrap().dim());
}

#[test]
fn trivial_grading_gives_the_classical_centre() {
    let a = a3(q(), false);
    let gc = g_centre(a.algebra());
    assert_eq!(gc.dim(), centre_space(a.algebra()).dim());
}

proptest! {
    #![proptest_config(config(48))]

    /// Centre dimensions and the Z2 identities survive a random
    /// degree-preserving change of basis.
    #[test]
    fn invariants_under_basis_change(alg in 0usize..4, entries in prop::collection::vec(-2i64..=2, 1..16)) {
        let (name, a) = &z2_test_algebras(q())[alg];
        let b = transport(a, &degree_preserving(a.field(), a.degrees(), &entries));
        prop_assert_eq!(centre_space(&b).dim(), centre_space(a).dim(), "{}", name);
        prop_assert_eq!(g_centre(&b).dim(), g_centre(a).dim());
        let (sz, az, gh) = (super_centre(&b).unwrap(), anti_centre(&b).unwrap(), ghost_centre(&b).unwrap());
        prop_assert_eq!(sz.dim(), super_centre(a).unwrap().dim());
        prop_assert_eq!(az.dim(), anti_centre(a).unwrap().dim());
        prop_assert!(same_subspace(&gh, &underline_g_centre(&b)));
        let ext = extended_centre(&b).unwrap();
        let r = embedding_report(&b, &ext, &g_centre(&b));
        prop_assert!(r.bijective && r.holds());
        prop_assert!(ext.vanishing_violations().is_empty());
    }

    #[test]
    fn g_centre_products_stay_inside(alg in 0usize..8, i in 0usize..16, j in 0usize..16) {
        let algebras = graded_algebras();
        let a = &algebras[alg % algebras.len()].1;
        let gc = g_centre(a);
        let basis = gc.basis();
        let (x, y) = (&basis[i % basis.len()], &basis[j % basis.len()]);
        prop_assert!(gc.contains(&gc.product(x, y)));
        for k in 0..a.group().order() {
            prop_assert!(gc.contains(&gc.act(k, x)));
            // the action is by algebra automorphisms
            prop_assert_eq!(gc.act(k, &gc.product(x, y)), gc.product(&gc.act(k, x), &gc.act(k, y)));
        }
    }
}
