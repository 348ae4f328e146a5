//! Tilting complexes and tilting modules over path algebras.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::complex::{hom_derived, BoundedComplex};
use super::quiver::PathAlgebra;
use crate::algcore::GradedModule;
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TiltingVerdict {
    pub window: (i64, i64),
    /// `(j, dim Hom(T, T[j]))` for every `j != 0` in the window.
    pub hom_dims: Vec<(i64, usize)>,
    pub vanishing: bool,
    pub k0_classes: Vec<Vec<i64>>,
    pub k0_rank: usize,
    /// The classes span the Grothendieck group over `Z`. Necessary for
    /// generation, not a proof of it.
    pub k0_necessary_condition: bool,
}

impl TiltingVerdict {
    pub fn passes(&self) -> bool {
        self.vanishing && self.k0_necessary_condition
    }
}

/// `sum_n (-1)^n dim-vector(C^n)`.
pub fn k0_class(pa: &PathAlgebra, c: &BoundedComplex) -> Vec<i64> {
    let mut v = vec![0i64; pa.num_vertices()];
    for n in c.lo()..c.hi() {
        let sign = if n.rem_euclid(2) == 0 { 1 } else { -1 };
        for (x, d) in v.iter_mut().zip(pa.dimension_vector(&c.term(n))) {
            *x += sign * d;
        }
    }
    v
}

/// Rank over `Q`, and whether the rows span `Z^n` (gcd of maximal minors 1).
pub fn integer_span(rows: &[Vec<i64>], n: usize) -> (usize, bool) {
    let rank = rational_rank(rows, n);
    if rank < n {
        return (rank, false);
    }
    let mut g = BigInt::zero();
    for choice in combinations(rows.len(), n) {
        let minor: Vec<Vec<BigInt>> = choice.iter().map(|&r| rows[r].iter().map(|&x| BigInt::from(x)).collect()).collect();
        g = g.gcd(&bareiss_det(minor));
        if g == BigInt::from(1) {
            return (rank, true);
        }
    }
    (rank, g.abs() == BigInt::from(1))
}

fn rational_rank(rows: &[Vec<i64>], n: usize) -> usize {
    let f = crate::exactmath::Field::rationals();
    let m = crate::algcore::Matrix::from_rows(
        f,
        rows.iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect(),
        n,
    );
    m.rank()
}

fn combinations(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            go(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, m, k, &mut Vec::new(), &mut out);
    out
}

/// Fraction-free determinant.
fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut sign = BigInt::from(1);
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Check `Hom(T, T[j]) = 0` for `j != 0` in the window (by default
/// `[-(w+1), w+1]` with `w` the width of `T`) and the K_0 condition on the
/// classes of the given summands.
pub fn is_tilting_complex(pa: &PathAlgebra, summands: &[BoundedComplex], window: Option<(i64, i64)>) -> Result<TiltingVerdict> {
    let t = BoundedComplex::direct_sum(pa.algebra(), summands)?;
    let w = t.width();
    let window = window.unwrap_or((-(w + 1), w + 1));
    let mut hom_dims = Vec::new();
    for j in window.0..=window.1 {
        if j != 0 {
            hom_dims.push((j, hom_derived(pa, &t, &t, j)?.dim));
        }
    }
    let k0_classes: Vec<Vec<i64>> = summands.iter().map(|s| k0_class(pa, s)).collect();
    let (k0_rank, spans) = integer_span(&k0_classes, pa.num_vertices());
    Ok(TiltingVerdict {
        window,
        vanishing: hom_dims.iter().all(|&(_, d)| d == 0),
        hom_dims,
        k0_classes,
        k0_rank,
        k0_necessary_condition: spans,
    })
}

/// Multiplicity-free sums of `n` indecomposables with `Ext^1(T, T) = 0`,
/// where `n` is the number of vertices. Each entry lists the supports of
/// the summands and the module itself.
pub fn tilting_modules(pa: &PathAlgebra) -> Result<Vec<(Vec<Vec<usize>>, GradedModule)>> {
    let inds = pa.indecomposables()?;
    let n = pa.num_vertices();
    let k = inds.len();
    // Ext^1 between every ordered pair, computed once.
    let mut ext = vec![vec![0usize; k]; k];
    for (a, (_, ma)) in inds.iter().enumerate() {
        let ca = BoundedComplex::concentrated(ma, 0);
        for (b, (_, mb)) in inds.iter().enumerate() {
            let cb = BoundedComplex::concentrated(mb, 0);
            ext[a][b] = hom_derived(pa, &ca, &cb, 1)?.dim;
        }
    }
    let mut out = Vec::new();
    for choice in combinations(k, n) {
        if choice.iter().all(|&a| choice.iter().all(|&b| ext[a][b] == 0)) {
            let parts: Vec<GradedModule> = choice.iter().map(|&a| inds[a].1.clone()).collect();
            let supports = choice.iter().map(|&a| inds[a].0.clone()).collect();
            out.push((supports, GradedModule::direct_sum(pa.algebra(), &parts)));
        }
    }
    Ok(out)
}
