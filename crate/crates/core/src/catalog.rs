//! Small algebras used throughout the tests, examples and CLI scenarios.

use crate::algcore::GradedAlgebra;
use crate::error::Result;
use crate::exactmath::{Field, FinAbGroup};
use crate::quiverderived::{PathAlgebra, Quiver};

fn names(ns: &[&str]) -> Vec<String> {
    ns.iter().map(|s| s.to_string()).collect()
}

/// `k[x]/(x^2)` with `x` odd.
pub fn dual_numbers(field: Field) -> GradedAlgebra {
    let one = field.one();
    GradedAlgebra::new(
        field,
        FinAbGroup::cyclic(2).expect("Z2"),
        names(&["1", "x"]),
        vec![0, 1],
        vec![(0, 0, 0, one.clone()), (0, 1, 1, one.clone()), (1, 0, 1, one)],
        None,
    )
    .expect("dual numbers are a valid algebra")
}

/// The group algebra `kZ_2` with `s` odd.
pub fn group_algebra_z2(field: Field) -> GradedAlgebra {
    let one = field.one();
    GradedAlgebra::new(
        field,
        FinAbGroup::cyclic(2).expect("Z2"),
        names(&["1", "s"]),
        vec![0, 1],
        vec![
            (0, 0, 0, one.clone()),
            (0, 1, 1, one.clone()),
            (1, 0, 1, one.clone()),
            (1, 1, 0, one),
        ],
        None,
    )
    .expect("kZ2 is a valid algebra")
}

/// `M_n(k)` with matrix units `e_ij` (row-major), trivially graded.
pub fn matrix_algebra(field: Field, n: usize) -> GradedAlgebra {
    matrix_units(field, n, FinAbGroup::trivial(), |_, _| 0)
}

/// `M(1|1)`: 2x2 matrices with the diagonal even and the off-diagonal odd.
pub fn matrix_superalgebra(field: Field) -> GradedAlgebra {
    matrix_units(field, 2, FinAbGroup::cyclic(2).expect("Z2"), |i, j| usize::from(i != j))
}

fn matrix_units(field: Field, n: usize, group: FinAbGroup, degree: impl Fn(usize, usize) -> usize) -> GradedAlgebra {
    let idx = |i: usize, j: usize| i * n + j;
    let mut mult = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                mult.push((idx(i, j), idx(j, l), idx(i, l), field.one()));
            }
        }
    }
    let ns = (0..n * n).map(|k| format!("e{}{}", k / n + 1, k % n + 1)).collect();
    let degrees = (0..n * n).map(|k| degree(k / n, k % n)).collect();
    GradedAlgebra::new(field, group, ns, degrees, mult, None).expect("matrix units form a valid algebra")
}

/// `k[t]/(t^n)` graded by `Z_n` with `t` in degree 1.
pub fn truncated_polynomial(field: Field, n: usize) -> Result<GradedAlgebra> {
    let mut mult = Vec::new();
    for i in 0..n {
        for j in 0..n - i {
            mult.push((i, j, i + j, field.one()));
        }
    }
    let ns = (0..n).map(|i| if i == 0 { "1".to_string() } else { format!("t^{i}") }).collect();
    GradedAlgebra::new(field, FinAbGroup::cyclic(n as u64)?, ns, (0..n).collect(), mult, None)
}

/// Path algebra of `1 -> 2 -> 3`, optionally graded by path length mod 2.
pub fn a3(field: Field, parity: bool) -> PathAlgebra {
    PathAlgebra::new(&Quiver::linear(3), field, parity).expect("A3 is acyclic")
}

/// The four `Z_2`-graded algebras used for the super/ghost centre checks.
pub fn z2_test_algebras(field: Field) -> Vec<(&'static str, GradedAlgebra)> {
    vec![
        ("dual-numbers", dual_numbers(field)),
        ("kZ2", group_algebra_z2(field)),
        ("A3-parity", a3(field, true).algebra().clone()),
        ("M(1|1)", matrix_superalgebra(field)),
    ]
}
