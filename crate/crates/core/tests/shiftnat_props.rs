mod common;

use common::{config, graded_algebras, modules, q};
use gcentre::algcore::{
    grading_automorphism, hom_modules, tensor_map, tensor_over_a, Bimodule, GradedAlgebra, GradedModule, Matrix,
};
use gcentre::catalog::{a3, z2_test_algebras};
use gcentre::centres::g_centre;
use gcentre::exactmath::characters;
use gcentre::shiftnat::{
    check_naturality, eval_nat, evaluation_map, gcentre_from_nat, multiplication_transport, nat_family_on_shifts,
    nat_from_gcentre, shift, shift_hom, test_family, NatRepresentation,
};
use proptest::prelude::*;

#[test]
fn shifts_are_strict() {
    for (name, a) in graded_algebras() {
        let n = a.group().order();
        let group = a.group();
        for m in modules(&a) {
            assert_eq!(shift(&m, 0), m, "{name}");
            for g in 0..n {
                for h in 0..n {
                    assert_eq!(shift(&shift(&m, g), h), shift(&m, group.add_idx(g, h)), "{name}");
                }
                for f in hom_modules(&m, &m, g).unwrap() {
                    let s = shift_hom(&f, g);
                    assert_eq!(s.source, shift(&m, g));
                    assert_eq!(s.matrix, f.matrix);
                    assert_eq!(shift_hom(&shift_hom(&f, g), group.neg_idx(g)), f, "{name}");
                }
            }
        }
    }
}

#[test]
fn g_centre_round_trips_through_natural_transformations() {
    for (name, a) in graded_algebras() {
        let gc = g_centre(&a);
        for (g, z) in gc.homogeneous_basis() {
            let fam = nat_family_on_shifts(&gc, &z).unwrap();
            assert_eq!(gcentre_from_nat(&a, g, &fam).unwrap(), z, "{name}");
        }
    }
}

#[test]
fn transport_holds_on_every_test_algebra() {
    for (name, a) in graded_algebras() {
        let s = multiplication_transport(&a, &[]).unwrap().summary();
        assert!(s.round_trip && s.naturality && s.opposite_isomorphism, "{name}: {s:?}");
        assert!(s.squares_checked > 0);
    }
}

#[test]
fn non_natural_families_are_rejected() {
    let (_, a) = &z2_test_algebras(q())[0];
    let n = a.group().order();
    // the identity on every shift is natural, a single scaled copy is not
    let mut fam = vec![Matrix::identity(a.field(), a.dim()); n];
    assert!(gcentre_from_nat(a, 0, &fam).is_ok());
    fam[1] = fam[1].scale(&a.field().from_i64(2));
    assert_eq!(gcentre_from_nat(a, 0, &fam).unwrap_err().name(), "NotNatural");
    assert_eq!(gcentre_from_nat(a, 0, &fam[..1]).unwrap_err().name(), "DimensionMismatch");
}

/// Regular bimodules, their twists by grading automorphisms, and `A ⊗_k A`.
fn bimodules(a: &GradedAlgebra) -> Vec<Bimodule> {
    let reg = Bimodule::regular(a);
    let mut out = vec![reg.clone()];
    if let Ok(chars) = characters(a.group(), a.field()) {
        for chi in chars.iter().skip(1) {
            out.push(reg.twisted_left(&grading_automorphism(a, chi).unwrap()).unwrap());
        }
    }
    let free = Bimodule::outer(&GradedModule::regular(a), &GradedModule::regular(&a.opposite()), a).unwrap();
    out.push(free);
    out
}

fn bimodule_algebras() -> Vec<(&'static str, GradedAlgebra)> {
    let mut out = z2_test_algebras(q());
    out.push(("A3", a3(q(), true).algebra().clone()));
    out
}

#[test]
fn evaluation_at_the_regular_module_is_injective() {
    for (name, a) in bimodule_algebras() {
        let reg = GradedModule::regular(&a);
        let bs = bimodules(&a);
        for x in &bs {
            for y in &bs {
                let r = evaluation_map(x, y, &reg).unwrap();
                assert!(r.injective(), "{name}: {r:?}");
            }
        }
    }
}

/// `eta_{M + N}` restricted along the inclusion of `M` is `eta_M`.
fn additive_on_sum(eta: &NatRepresentation, m: &GradedModule, n: &GradedModule, x: &Bimodule) -> bool {
    let a = m.algebra();
    let field = a.field();
    let sum = GradedModule::direct_sum(a, &[m.clone(), n.clone()]);
    let mut incl = Matrix::zeros(field, sum.dim(), m.dim());
    incl.set_block(0, 0, &Matrix::identity(field, m.dim()));
    let (em, es) = (eval_nat(eta, m).unwrap(), eval_nat(eta, &sum).unwrap());
    match eta {
        NatRepresentation::GCentre { .. } => es.matrix.mul(&incl) == incl.mul(&em.matrix),
        NatRepresentation::Bimodule { target, .. } => {
            let (txm, txs) = (tensor_over_a(x, m).unwrap(), tensor_over_a(x, &sum).unwrap());
            let (tym, tys) = (tensor_over_a(target, m).unwrap(), tensor_over_a(target, &sum).unwrap());
            let ix = tensor_map(x.dim(), &txm, &txs, &incl);
            let iy = tensor_map(target.dim(), &tym, &tys, &incl);
            es.matrix.mul(&ix) == iy.mul(&em.matrix)
        }
    }
}

proptest! {
    #![proptest_config(config(32))]

    /// Random combinations of one homogeneous component are natural and
    /// additive, and give maps of the right shift.
    #[test]
    fn homogeneous_combinations_are_natural(alg in 0usize..8, coeffs in prop::collection::vec(-3i64..=3, 1..8), pick in 0usize..4, i in 0usize..8, j in 0usize..8) {
        let algebras = graded_algebras();
        let (name, a) = &algebras[alg % algebras.len()];
        let gc = g_centre(a);
        let basis = gc.homogeneous_basis();
        let g = basis[pick % basis.len()].0;
        let field = a.field();
        let mut z = vec![field.zero(); gc.ambient().dim()];
        for ((_, b), c) in basis.iter().filter(|(d, _)| *d == g).zip(coeffs.iter().cycle()) {
            for (t, v) in z.iter_mut().zip(b) {
                *t = &*t + &(v * &field.from_i64(*c));
            }
        }
        if z.iter().all(|c| c.is_zero()) {
            return Ok(());
        }
        let ms = modules(a);
        let family = test_family(a, &[]).unwrap();
        prop_assert!(check_naturality(&gc, &z, &family).unwrap().holds(), "{}", name);
        let (m, n) = (&ms[i % ms.len()], &ms[j % ms.len()]);
        let eta_m = nat_from_gcentre(&gc, &z, m).unwrap();
        prop_assert_eq!(&eta_m.target, &shift(m, g));
        let eta = NatRepresentation::GCentre { centre: gc.clone(), element: z };
        prop_assert!(additive_on_sum(&eta, m, n, &Bimodule::regular(a)), "{}", name);
    }

    #[test]
    fn bimodule_evaluations_are_additive(alg in 0usize..5, xi in 0usize..4, yi in 0usize..4, i in 0usize..8, j in 0usize..8, coeffs in prop::collection::vec(-2i64..=2, 1..6)) {
        let algebras = bimodule_algebras();
        let (name, a) = &algebras[alg];
        let bs = bimodules(a);
        let (x, y) = (&bs[xi % bs.len()], &bs[yi % bs.len()]);
        let nat = gcentre::shiftnat::bimodule_nat(x, y).unwrap();
        if nat.is_empty() {
            return Ok(());
        }
        let field = a.field();
        let mut phi = Matrix::zeros(field, y.dim(), x.dim());
        for (b, c) in nat.iter().zip(coeffs.iter().cycle()) {
            phi = phi.add(&b.scale(&field.from_i64(*c)));
        }
        let ms = modules(a);
        let eta = NatRepresentation::Bimodule { source: x.clone(), target: y.clone(), map: phi };
        prop_assert!(additive_on_sum(&eta, &ms[i % ms.len()], &ms[j % ms.len()], x), "{}", name);
    }
}
