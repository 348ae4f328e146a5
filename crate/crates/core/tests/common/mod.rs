#![allow(dead_code)]

use gcentre::algcore::{GradedAlgebra, GradedModule, Matrix};
use gcentre::catalog::{a3, matrix_algebra, truncated_polynomial, z2_test_algebras};
use gcentre::exactmath::{Field, FinAbGroup};
use proptest::test_runner::{Config, RngSeed};

const DEFAULT_SEED: u64 = 0x5eed_0f_6ce7;

/// Proptest configuration seeded from `GC_SEED` (decimal), or a fixed
/// default so runs are reproducible.
pub fn config(cases: u32) -> Config {
    let seed = std::env::var("GC_SEED")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SEED);
    Config {
        cases,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        ..Config::default()
    }
}

pub fn q() -> Field {
    Field::rationals()
}

/// The group algebra of `Z2 x Z2`, graded by itself.
pub fn klein_group_algebra(field: Field) -> GradedAlgebra {
    let g = FinAbGroup::new(vec![2, 2]).unwrap();
    let n = g.order();
    let mut mult = Vec::new();
    for i in 0..n {
        for j in 0..n {
            mult.push((i, j, g.add_idx(i, j), field.one()));
        }
    }
    let names = (0..n).map(|i| format!("g{i}")).collect();
    GradedAlgebra::new(field, g, names, (0..n).collect(), mult, None).unwrap()
}

/// Graded test algebras over fields containing the needed roots of unity.
pub fn graded_algebras() -> Vec<(&'static str, GradedAlgebra)> {
    let mut out = z2_test_algebras(q());
    out.push(("k[t]/t^3 over Z3", truncated_polynomial(Field::cyclotomic(3).unwrap(), 3).unwrap()));
    out.push(("kZ2xZ2", klein_group_algebra(q())));
    out.push(("A3", a3(q(), false).algebra().clone()));
    out.push(("M2", matrix_algebra(q(), 2)));
    out
}

/// Small modules over `a`: the regular module, its shifts, and the
/// cyclic modules `A e_i` for basis idempotents found among the basis.
pub fn modules(a: &GradedAlgebra) -> Vec<GradedModule> {
    let reg = GradedModule::regular(a);
    let mut out: Vec<GradedModule> = (0..a.group().order()).map(|g| reg.shifted(g)).collect();
    for i in 0..a.dim() {
        let e = a.basis_vector(i);
        if a.degree(i) == 0 && a.mul(&e, &e) == e && e != *a.unit() {
            let span = reg.generated_submodule(&[e]);
            if let Ok((m, _)) = reg.submodule(span.basis()) {
                out.push(m);
            }
        }
    }
    out
}

/// A unitriangular matrix mixing only basis vectors of equal degree.
pub fn degree_preserving(field: Field, degrees: &[usize], entries: &[i64]) -> Matrix {
    let n = degrees.len();
    let mut p = Matrix::identity(field, n);
    for i in 0..n {
        for j in 0..i {
            if degrees[i] == degrees[j] {
                p.set(i, j, field.from_i64(entries[(i * n + j) % entries.len()]));
            }
        }
    }
    p
}

/// The same algebra in the basis given by the columns of `p`.
pub fn transport(a: &GradedAlgebra, p: &Matrix) -> GradedAlgebra {
    let inv = p.inverse().expect("basis change is invertible");
    let cols = p.columns();
    let mut mult = Vec::new();
    for (i, x) in cols.iter().enumerate() {
        for (j, y) in cols.iter().enumerate() {
            for (k, c) in inv.apply(&a.mul(x, y)).into_iter().enumerate() {
                if !c.is_zero() {
                    mult.push((i, j, k, c));
                }
            }
        }
    }
    GradedAlgebra::new(a.field(), a.group().clone(), a.names().to_vec(), a.degrees().to_vec(), mult, None)
        .expect("transported table is an algebra")
}

/// Invariant factor lists of every finite abelian group of order at most `n`.
pub fn groups_up_to(n: u64) -> Vec<Vec<u64>> {
    fn extend(prefix: &mut Vec<u64>, order: u64, n: u64, out: &mut Vec<Vec<u64>>) {
        out.push(prefix.clone());
        let start = prefix.last().copied().unwrap_or(2);
        let mut d = start;
        while order * d <= n {
            if prefix.last().is_none_or(|&l| d % l == 0) {
                prefix.push(d);
                extend(prefix, order * d, n, out);
                prefix.pop();
            }
            d += 1;
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 1, n, &mut out);
    out
}

/// Smallest prime `p` with `p = 1 mod e`.
pub fn prime_with_roots(e: u64) -> u64 {
    let is_prime = |p: u64| p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0);
    (1..).map(|k| k * e + 1).find(|&p| is_prime(p)).unwrap()
}

