mod common;

use common::{config, degree_preserving, graded_algebras, groups_up_to, modules, q};
use gcentre::algcore::io::{algebra_from_file, algebra_to_file, module_from_file, module_to_file};
use gcentre::algcore::{
    grading_automorphism, hom_modules, hom_ungraded, tensor_over_a, Bimodule, GradedAlgebra, GradedModule, Matrix,
};
use gcentre::catalog::a3;
use gcentre::exactmath::{character_group, Field, FinAbGroup};
use proptest::prelude::*;

/// Associativity, unit and grading checked on every basis triple.
fn brute_force_axioms(a: &GradedAlgebra) -> bool {
    let d = a.dim();
    let group = a.group();
    let e: Vec<_> = (0..d).map(|i| a.basis_vector(i)).collect();
    for i in 0..d {
        if a.mul(a.unit(), &e[i]) != e[i] || a.mul(&e[i], a.unit()) != e[i] {
            return false;
        }
        for j in 0..d {
            let p = a.mul(&e[i], &e[j]);
            let want = group.add_idx(a.degree(i), a.degree(j));
            if p.iter().enumerate().any(|(k, c)| !c.is_zero() && a.degree(k) != want) {
                return false;
            }
            for k in 0..d {
                if a.mul(&p, &e[k]) != a.mul(&e[i], &a.mul(&e[j], &e[k])) {
                    return false;
                }
            }
        }
    }
    true
}

/// `P^{-1} rho(a) P` on every action matrix.
fn change_basis(m: &GradedModule, p: &Matrix) -> GradedModule {
    let inv = p.inverse().unwrap();
    let action = m.actions().iter().map(|x| inv.mul(x).mul(p)).collect();
    GradedModule::new(m.algebra(), m.degrees().to_vec(), action).unwrap()
}

proptest! {
    #![proptest_config(config(96))]

    /// Random 3-dimensional tables with `e0` as unit: whatever validation
    /// accepts satisfies the axioms on all triples.
    #[test]
    fn accepted_tables_are_algebras(entries in prop::collection::vec(-1i64..=1, 12), graded in any::<bool>()) {
        let f = q();
        let mut mult = vec![(0, 0, 0, f.one()), (0, 1, 1, f.one()), (1, 0, 1, f.one()), (0, 2, 2, f.one()), (2, 0, 2, f.one())];
        let mut t = entries.iter();
        for i in 1..3 {
            for j in 1..3 {
                for k in 0..3 {
                    let c = *t.next().unwrap();
                    if c != 0 {
                        mult.push((i, j, k, f.from_i64(c)));
                    }
                }
            }
        }
        let (group, degrees) = if graded {
            (FinAbGroup::cyclic(2).unwrap(), vec![0, 1, 1])
        } else {
            (FinAbGroup::trivial(), vec![0, 0, 0])
        };
        let names = vec!["1".to_string(), "u".to_string(), "v".to_string()];
        if let Ok(a) = GradedAlgebra::new(f, group, names, degrees, mult, None) {
            prop_assert!(brute_force_axioms(&a));
        }
    }

    #[test]
    fn hom_dims_invariant_under_basis_change(
        alg in 0usize..8,
        i in 0usize..8,
        j in 0usize..8,
        entries in prop::collection::vec(-3i64..=3, 1..20),
    ) {
        let algebras = graded_algebras();
        let a = &algebras[alg % algebras.len()].1;
        let ms = modules(a);
        let (m, n) = (&ms[i % ms.len()], &ms[j % ms.len()]);
        let m2 = change_basis(m, &degree_preserving(a.field(), m.degrees(), &entries));
        let n2 = change_basis(n, &degree_preserving(a.field(), n.degrees(), &entries[1..].iter().chain(&entries[..1]).copied().collect::<Vec<_>>()));
        for g in 0..a.group().order() {
            prop_assert_eq!(hom_modules(m, n, g).unwrap().len(), hom_modules(&m2, &n2, g).unwrap().len());
        }
    }
}

#[test]
fn graded_homs_add_up_to_ungraded_endomorphisms() {
    for (name, a) in graded_algebras() {
        for m in modules(&a) {
            let graded: usize = (0..a.group().order()).map(|g| hom_modules(&m, &m, g).unwrap().len()).sum();
            assert_eq!(graded, hom_ungraded(&m, &m).unwrap().len(), "{name}");
        }
    }
}

#[test]
fn tensoring_with_the_regular_bimodule_is_the_identity() {
    for (name, a) in graded_algebras() {
        let field = a.field();
        let reg = Bimodule::regular(&a);
        for m in modules(&a) {
            let t = tensor_over_a(&reg, &m).unwrap();
            let (da, dm) = (a.dim(), m.dim());
            assert_eq!(t.module.dim(), dm, "{name}");
            // mu : A ⊗_k M -> M, a ⊗ v -> a v
            let mut mu = Matrix::zeros(field, dm, da * dm);
            for p in 0..da {
                mu.set_block(0, p * dm, m.action(p));
            }
            // iota : M -> A ⊗_k M, v -> 1 ⊗ v
            let unit = Matrix::from_columns(field, &[a.unit().clone()], da);
            let iota = unit.kron(&Matrix::identity(field, dm));
            let to_m = mu.mul(&t.section);
            let from_m = t.projection.mul(&iota);
            assert_eq!(to_m.mul(&from_m), Matrix::identity(field, dm), "{name}");
            assert_eq!(from_m.mul(&to_m), Matrix::identity(field, dm), "{name}");
            // and the identification is A-linear
            for i in 0..da {
                assert_eq!(to_m.mul(t.module.action(i)), m.action(i).mul(&to_m), "{name}");
            }
        }
    }
}

/// Group algebras `kG` graded by `G`, for every `G` of order at most 8.
#[test]
fn grading_automorphisms_form_a_homomorphism() {
    for factors in groups_up_to(8) {
        let g = FinAbGroup::new(factors.clone()).unwrap();
        let field = Field::cyclotomic(g.exponent() as u32).unwrap();
        let n = g.order();
        let mut mult = Vec::new();
        for i in 0..n {
            for j in 0..n {
                mult.push((i, j, g.add_idx(i, j), field.one()));
            }
        }
        let names = (0..n).map(|i| format!("g{i}")).collect();
        let a = GradedAlgebra::new(field, g.clone(), names, (0..n).collect(), mult, None).unwrap();
        let cg = character_group(&g, field).unwrap();
        let auts: Vec<Matrix> = cg.characters.iter().map(|c| grading_automorphism(&a, c).unwrap()).collect();
        for i in 0..cg.len() {
            for j in 0..cg.len() {
                assert_eq!(auts[i].mul(&auts[j]), auts[cg.mul_idx(i, j)], "{factors:?}");
            }
        }
        assert_eq!(auts[0], Matrix::identity(field, n));
    }
}

#[test]
fn files_round_trip() {
    for (name, a) in graded_algebras() {
        let file = algebra_to_file(&a);
        let back = algebra_from_file(&file).unwrap();
        assert_eq!(back, a, "{name}");
        for m in modules(&a) {
            let mf = module_to_file(&m, "algebra.json");
            assert_eq!(module_from_file(&mf, &a).unwrap(), m, "{name}");
        }
    }
}

#[test]
fn projectives_of_a3_have_expected_endomorphisms() {
    let pa = a3(q(), false);
    for (i, dim) in [(0, 1), (1, 1), (2, 1)] {
        let p = pa.projective(i).unwrap();
        assert_eq!(hom_ungraded(&p, &p).unwrap().len(), dim);
    }
    // Hom(P3, P1) = e3 A e1 is spanned by ba
    let (p1, p3) = (pa.projective(0).unwrap(), pa.projective(2).unwrap());
    assert_eq!(hom_ungraded(&p3, &p1).unwrap().len(), 1);
    assert_eq!(hom_ungraded(&p1, &p3).unwrap().len(), 0);
}
