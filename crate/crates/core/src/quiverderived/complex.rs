//! Bounded cochain complexes of modules, projective replacement over path
//! algebras, and homs in the derived category.
//!
//! Differentials raise degree: `d^n : C^n -> C^{n+1}`.

use std::collections::BTreeMap;

use serde::Serialize;

use super::quiver::PathAlgebra;
use crate::algcore::linalg::{Matrix, Subspace, Vector};
use crate::algcore::{hom_ungraded, is_module_map, is_projective, GradedAlgebra, GradedModule};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct BoundedComplex {
    algebra: GradedAlgebra,
    lo: i64,
    terms: Vec<GradedModule>,
    /// `diffs[k] : terms[k] -> terms[k + 1]`.
    diffs: Vec<Matrix>,
}

impl BoundedComplex {
    /// `terms[k]` sits in degree `lo + k`; `diffs` has one entry fewer.
    pub fn new(algebra: &GradedAlgebra, lo: i64, terms: Vec<GradedModule>, diffs: Vec<Matrix>) -> Result<BoundedComplex> {
        if terms.is_empty() {
            return Ok(BoundedComplex {
                algebra: algebra.clone(),
                lo,
                terms,
                diffs: Vec::new(),
            });
        }
        if diffs.len() + 1 != terms.len() {
            return Err(Error::InvalidComplex(format!(
                "{} terms need {} differentials, got {}",
                terms.len(),
                terms.len() - 1,
                diffs.len()
            )));
        }
        if terms.iter().any(|t| t.algebra() != algebra) {
            return Err(Error::AlgebraMismatch("complex terms over different algebras".into()));
        }
        let c = BoundedComplex {
            algebra: algebra.clone(),
            lo,
            terms,
            diffs,
        };
        c.validate()?;
        Ok(c)
    }

    fn validate(&self) -> Result<()> {
        for (k, d) in self.diffs.iter().enumerate() {
            let (s, t) = (&self.terms[k], &self.terms[k + 1]);
            if d.rows() != t.dim() || d.cols() != s.dim() {
                return Err(Error::InvalidComplex(format!(
                    "differential in degree {} has the wrong shape",
                    self.lo + k as i64
                )));
            }
            if !is_module_map(s, t, d) {
                return Err(Error::InvalidComplex(format!(
                    "differential in degree {} is not A-linear",
                    self.lo + k as i64
                )));
            }
        }
        for k in 1..self.diffs.len() {
            if !self.diffs[k].mul(&self.diffs[k - 1]).is_zero() {
                return Err(Error::InvalidComplex(format!(
                    "d o d != 0 starting in degree {}",
                    self.lo + k as i64 - 1
                )));
            }
        }
        Ok(())
    }

    /// `M` placed in a single degree.
    pub fn concentrated(m: &GradedModule, degree: i64) -> BoundedComplex {
        BoundedComplex {
            algebra: m.algebra().clone(),
            lo: degree,
            terms: vec![m.clone()],
            diffs: Vec::new(),
        }
    }

    pub fn algebra(&self) -> &GradedAlgebra {
        &self.algebra
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// One past the top degree.
    pub fn hi(&self) -> i64 {
        self.lo + self.terms.len() as i64
    }

    pub fn term(&self, n: i64) -> GradedModule {
        match self.slot(n) {
            Some(k) => self.terms[k].clone(),
            None => GradedModule::zero(&self.algebra),
        }
    }

    pub fn term_dim(&self, n: i64) -> usize {
        self.slot(n).map_or(0, |k| self.terms[k].dim())
    }

    fn slot(&self, n: i64) -> Option<usize> {
        (n >= self.lo && n < self.hi()).then(|| (n - self.lo) as usize)
    }

    /// `d^n : C^n -> C^{n+1}` (zero outside the stored range).
    pub fn diff(&self, n: i64) -> Matrix {
        match self.slot(n) {
            Some(k) if k < self.diffs.len() => self.diffs[k].clone(),
            _ => Matrix::zeros(self.algebra.field(), self.term_dim(n + 1), self.term_dim(n)),
        }
    }

    /// Degrees carrying nonzero terms.
    pub fn support(&self) -> Vec<i64> {
        (self.lo..self.hi()).filter(|&n| self.term_dim(n) > 0).collect()
    }

    /// `max - min + 1` over nonzero terms (0 for the zero complex).
    pub fn width(&self) -> i64 {
        let s = self.support();
        match (s.first(), s.last()) {
            (Some(a), Some(b)) => b - a + 1,
            _ => 0,
        }
    }

    pub fn homology_dims(&self) -> BTreeMap<i64, usize> {
        (self.lo..self.hi())
            .map(|n| {
                let z = self.term_dim(n) - self.diff(n).rank();
                let b = self.diff(n - 1).rank();
                (n, z - b)
            })
            .collect()
    }

    /// `C[j]`: `C[j]^n = C^{n+j}` with differential `(-1)^j d`.
    pub fn shifted(&self, j: i64) -> BoundedComplex {
        let diffs = if j % 2 == 0 {
            self.diffs.clone()
        } else {
            self.diffs.iter().map(Matrix::neg).collect()
        };
        BoundedComplex {
            algebra: self.algebra.clone(),
            lo: self.lo - j,
            terms: self.terms.clone(),
            diffs,
        }
    }

    pub fn direct_sum(algebra: &GradedAlgebra, parts: &[BoundedComplex]) -> Result<BoundedComplex> {
        let lo = parts.iter().map(|p| p.lo).min().unwrap_or(0);
        let hi = parts.iter().map(|p| p.hi()).max().unwrap_or(0);
        let field = algebra.field();
        let terms: Vec<GradedModule> = (lo..hi)
            .map(|n| GradedModule::direct_sum(algebra, &parts.iter().map(|p| p.term(n)).collect::<Vec<_>>()))
            .collect();
        let diffs = (lo..hi - 1)
            .map(|n| Matrix::block_diag(field, &parts.iter().map(|p| p.diff(n)).collect::<Vec<_>>()))
            .collect();
        BoundedComplex::new(algebra, lo, terms, diffs)
    }

    /// Is `f` (per degree from `lo` of `self`) a chain map into `target`?
    pub fn is_chain_map(&self, target: &BoundedComplex, f: &dyn Fn(i64) -> Matrix) -> bool {
        (self.lo - 1..self.hi()).all(|n| target.diff(n).mul(&f(n)) == f(n + 1).mul(&self.diff(n)))
    }
}

/// A direct sum `P_{i_1} + ... + P_{i_r}` remembering its summands.
#[derive(Clone, Debug)]
pub(crate) struct ProjSum {
    pub module: GradedModule,
    /// `(vertex, offset of the block)`.
    pub blocks: Vec<(usize, usize)>,
}

impl ProjSum {
    fn new(pa: &PathAlgebra, vertices: &[usize]) -> Result<ProjSum> {
        let parts = vertices.iter().map(|&i| pa.projective(i)).collect::<Result<Vec<_>>>()?;
        let mut blocks = Vec::new();
        let mut off = 0;
        for (&i, p) in vertices.iter().zip(&parts) {
            blocks.push((i, off));
            off += p.dim();
        }
        Ok(ProjSum {
            module: GradedModule::direct_sum(pa.algebra(), &parts),
            blocks,
        })
    }

    /// The module map sending the generator `e_i` of each block to the
    /// given vector of `target` (which must lie in `e_i target`).
    fn map_from_images(&self, pa: &PathAlgebra, target: &GradedModule, images: &[Vector]) -> Matrix {
        let field = pa.algebra().field();
        let mut cols: Vec<Vector> = Vec::with_capacity(self.module.dim());
        for (&(i, _), y) in self.blocks.iter().zip(images) {
            for p in pa.paths_from(i) {
                cols.push(target.action(p).apply(y));
            }
        }
        Matrix::from_columns(field, &cols, target.dim())
    }

    fn generator(&self, pa: &PathAlgebra, k: usize) -> Vector {
        let (_, off) = self.blocks[k];
        let mut v = vec![pa.algebra().field().zero(); self.module.dim()];
        v[off] = pa.algebra().field().one();
        v
    }
}

fn projective_cover(pa: &PathAlgebra, m: &GradedModule) -> Result<(ProjSum, Matrix)> {
    let field = pa.algebra().field();
    let mut span = pa.radical(m);
    let mut vertices = Vec::new();
    let mut images = Vec::new();
    for i in 0..pa.num_vertices() {
        for v in m.action(pa.idempotent(i)).columns() {
            if !span.contains(&v) {
                span = span.sum(&Subspace::from_vectors(field, m.dim(), &[v.clone()]));
                vertices.push(i);
                images.push(v);
            }
        }
    }
    let q = ProjSum::new(pa, &vertices)?;
    let eps = q.map_from_images(pa, m, &images);
    Ok((q, eps))
}

/// `0 -> Q1 -> Q0 -> M -> 0`, returned as `(Q1, partial, Q0, eps)`.
fn resolution(pa: &PathAlgebra, m: &GradedModule) -> Result<(ProjSum, Matrix, ProjSum, Matrix)> {
    let (q0, eps) = projective_cover(pa, m)?;
    let kernel = eps.kernel();
    let (k, incl) = q0.module.submodule(&kernel)?;
    let (q1, eps_k) = projective_cover(pa, &k)?;
    if q1.module.dim() != k.dim() {
        return Err(Error::NotHereditary("kernel of a projective cover is not projective".into()));
    }
    Ok((q1, incl.mul(&eps_k), q0, eps))
}

/// Solve `m y = t_k` with `y` in `e_{i_k} Q` for each block generator
/// image `t_k = g(gen_k)`, and assemble the lift `src -> Q`.
fn lift(pa: &PathAlgebra, src: &ProjSum, q: &GradedModule, m: &Matrix, g: &Matrix) -> Result<Matrix> {
    let mut images = Vec::with_capacity(src.blocks.len());
    for (k, &(i, _)) in src.blocks.iter().enumerate() {
        let t = g.apply(&src.generator(pa, k));
        let e = q.action(pa.idempotent(i));
        let z = m
            .mul(e)
            .solve(&t)
            .ok_or_else(|| Error::InvalidComplex("no lift through the resolution".into()))?;
        images.push(e.apply(&z));
    }
    Ok(src.map_from_images(pa, q, &images))
}

/// A complex of projectives with a quasi-isomorphism onto the input.
#[derive(Clone, Debug)]
pub struct Replacement {
    pub complex: BoundedComplex,
    /// `quasi_iso(n) : complex^n -> input^n`, stored from `complex.lo()`.
    quasi_iso: Vec<Matrix>,
}

impl Replacement {
    pub fn quasi_iso(&self, n: i64, input: &BoundedComplex) -> Matrix {
        let k = n - self.complex.lo();
        if k >= 0 && (k as usize) < self.quasi_iso.len() {
            self.quasi_iso[k as usize].clone()
        } else {
            Matrix::zeros(input.algebra().field(), input.term_dim(n), self.complex.term_dim(n))
        }
    }
}

fn require_path_algebra(pa: &PathAlgebra, c: &BoundedComplex) -> Result<()> {
    if c.algebra() != pa.algebra() {
        return Err(Error::NotHereditary(
            "projective replacement needs a complex over the given path algebra".into(),
        ));
    }
    Ok(())
}

/// Replace every term by its two-term projective resolution and totalise:
/// `T^n = Q0^n + Q1^{n+1}`.
pub fn projective_replacement(pa: &PathAlgebra, c: &BoundedComplex) -> Result<Replacement> {
    require_path_algebra(pa, c)?;
    let field = pa.algebra().field();
    if (c.lo()..c.hi()).all(|n| is_projective(&c.term(n))) {
        let quasi_iso = (c.lo()..c.hi()).map(|n| Matrix::identity(field, c.term_dim(n))).collect();
        return Ok(Replacement {
            complex: c.clone(),
            quasi_iso,
        });
    }
    let (lo, hi) = (c.lo(), c.hi());
    let mut res = BTreeMap::new();
    for n in lo..hi {
        res.insert(n, resolution(pa, &c.term(n))?);
    }
    let empty = ProjSum::new(pa, &[])?;
    let zero_eps = |n: i64| Matrix::zeros(field, c.term_dim(n), 0);
    let q0 = |n: i64| res.get(&n).map_or(&empty, |r| &r.2);
    let q1 = |n: i64| res.get(&n).map_or(&empty, |r| &r.0);
    let eps = |n: i64| res.get(&n).map_or_else(|| zero_eps(n), |r| r.3.clone());
    let del = |n: i64| res.get(&n).map_or_else(|| Matrix::zeros(field, 0, 0), |r| r.1.clone());

    let mut f0 = BTreeMap::new();
    for n in lo - 2..hi + 1 {
        let g = c.diff(n).mul(&eps(n));
        f0.insert(n, lift(pa, q0(n), &q0(n + 1).module, &eps(n + 1), &g)?);
    }
    let mut f1 = BTreeMap::new();
    for n in lo - 2..hi + 1 {
        let g = f0[&n].mul(&del(n));
        f1.insert(n, lift(pa, q1(n), &q1(n + 1).module, &del(n + 1), &g)?);
    }
    let mut h = BTreeMap::new();
    for n in lo - 2..hi + 1 {
        let g = f0.get(&(n + 1)).map_or_else(
            || Matrix::zeros(field, q0(n + 2).module.dim(), q0(n).module.dim()),
            |f| f.mul(&f0[&n]).neg(),
        );
        h.insert(n, lift(pa, q0(n), &q1(n + 2).module, &del(n + 2), &g)?);
    }

    let tlo = lo - 1;
    let terms: Vec<GradedModule> = (tlo..hi)
        .map(|n| GradedModule::direct_sum(pa.algebra(), &[q0(n).module.clone(), q1(n + 1).module.clone()]))
        .collect();
    let mut diffs = Vec::new();
    for n in tlo..hi - 1 {
        let (a0, a1) = (q0(n).module.dim(), q1(n + 1).module.dim());
        let (b0, b1) = (q0(n + 1).module.dim(), q1(n + 2).module.dim());
        let mut d = Matrix::zeros(field, b0 + b1, a0 + a1);
        d.set_block(0, 0, &f0[&n]);
        d.set_block(0, a0, &del(n + 1));
        d.set_block(b0, 0, &h[&n]);
        d.set_block(b0, a0, &f1[&(n + 1)].neg());
        diffs.push(d);
    }
    let complex = BoundedComplex::new(pa.algebra(), tlo, terms, diffs)?;
    let quasi_iso: Vec<Matrix> = (tlo..hi)
        .map(|n| {
            let mut m = Matrix::zeros(field, c.term_dim(n), complex.term_dim(n));
            m.set_block(0, 0, &eps(n));
            m
        })
        .collect();
    let rep = Replacement { complex, quasi_iso };
    if !rep.complex.is_chain_map(c, &|n| rep.quasi_iso(n, c)) {
        return Err(Error::InvalidComplex("replacement map is not a chain map".into()));
    }
    let (hc, hr) = (c.homology_dims(), rep.complex.homology_dims());
    for n in tlo - 1..hi + 1 {
        if hc.get(&n).copied().unwrap_or(0) != hr.get(&n).copied().unwrap_or(0) {
            return Err(Error::InvalidComplex(format!("homology differs in degree {n}")));
        }
    }
    Ok(rep)
}

/// `Hom_{D^b}(P, Q[j])` as chain maps modulo homotopy.
#[derive(Clone, Debug, Serialize)]
pub struct DerivedHom {
    pub shift: i64,
    pub dim: usize,
    pub cycles_dim: usize,
    pub boundaries_dim: usize,
}

/// Chain maps and null-homotopic maps from a projective complex `p` to
/// `q[j]`, flattened degree by degree over `p`'s range.
pub(crate) struct HomComplex {
    /// `(degree, offset, rows, cols)` of each flattened block.
    pub layout: Vec<(i64, usize, usize, usize)>,
    pub total: usize,
    pub cycles: Subspace,
    pub boundaries: Subspace,
}

impl HomComplex {
    pub fn new(p: &BoundedComplex, q: &BoundedComplex, j: i64) -> Result<HomComplex> {
        let field = p.algebra().field();
        let (lo, hi) = (p.lo(), p.hi());
        let mut layout = Vec::new();
        let mut total = 0;
        for n in lo..hi {
            let (r, c) = (q.term_dim(n + j), p.term_dim(n));
            layout.push((n, total, r, c));
            total += r * c;
        }
        let sign = if j % 2 == 0 { field.one() } else { -field.one() };
        // Chain maps: combinations of per-degree module maps with
        // f^{n+1} d_P = (-1)^j d_Q f^n.
        let mut hom_basis: Vec<Vector> = Vec::new();
        for &(n, off, r, c) in &layout {
            for m in hom_ungraded(&p.term(n), &q.term(n + j))? {
                let mut v = vec![field.zero(); total];
                v[off..off + r * c].clone_from_slice(m.flatten());
                hom_basis.push(v);
            }
        }
        let unflatten = |v: &[crate::exactmath::Scalar], n: i64| -> Matrix {
            match layout.iter().find(|l| l.0 == n) {
                Some(&(_, off, r, c)) => Matrix::from_flat(field, r, c, v[off..off + r * c].to_vec()),
                None => Matrix::zeros(field, q.term_dim(n + j), p.term_dim(n)),
            }
        };
        let defect = |v: &Vector| -> Vector {
            let mut out = Vec::new();
            for n in lo - 1..hi {
                let lhs = unflatten(v, n + 1).mul(&p.diff(n));
                let rhs = q.diff(n + j).mul(&unflatten(v, n)).scale(&sign);
                out.extend(lhs.sub(&rhs).flatten().iter().cloned());
            }
            out
        };
        let defects: Vec<Vector> = hom_basis.iter().map(defect).collect();
        let rows = defects.first().map_or(0, Vec::len);
        let coeffs = Matrix::from_columns(field, &defects, rows).kernel();
        let cycles: Vec<Vector> = coeffs
            .iter()
            .map(|c| {
                let mut v = vec![field.zero(); total];
                for (x, b) in c.iter().zip(&hom_basis) {
                    if !x.is_zero() {
                        crate::algcore::linalg::axpy(&mut v, x, b);
                    }
                }
                v
            })
            .collect();
        let cycles = Subspace::from_vectors(field, total, &cycles);
        // Null-homotopic maps: (-1)^j d_Q s^n + s^{n+1} d_P.
        let mut bounds = Vec::new();
        for n in lo..hi + 1 {
            for s in hom_ungraded(&p.term(n), &q.term(n + j - 1))? {
                let mut v = vec![field.zero(); total];
                for &(m, off, r, c) in &layout {
                    let mut block = Matrix::zeros(field, r, c);
                    if m == n {
                        block = block.add(&q.diff(n + j - 1).mul(&s).scale(&sign));
                    }
                    if m + 1 == n {
                        block = block.add(&s.mul(&p.diff(m)));
                    }
                    v[off..off + r * c].clone_from_slice(block.flatten());
                }
                bounds.push(v);
            }
        }
        let boundaries = Subspace::from_vectors(field, total, &bounds);
        debug_assert!(cycles.contains_subspace(&boundaries));
        Ok(HomComplex {
            layout,
            total,
            cycles,
            boundaries,
        })
    }

    pub fn dim(&self) -> usize {
        self.cycles.dim() - self.boundaries.dim()
    }

    pub fn flatten_map(&self, field: crate::exactmath::Field, f: &dyn Fn(i64) -> Matrix) -> Vector {
        let mut v = vec![field.zero(); self.total];
        for &(n, off, r, c) in &self.layout {
            let m = f(n);
            debug_assert_eq!((m.rows(), m.cols()), (r, c));
            v[off..off + r * c].clone_from_slice(m.flatten());
        }
        v
    }
}

/// `Hom_{D^b(A)}(P, Q[j])`; `P` is replaced by projectives first.
pub fn hom_derived(pa: &PathAlgebra, p: &BoundedComplex, q: &BoundedComplex, j: i64) -> Result<DerivedHom> {
    require_path_algebra(pa, q)?;
    let rep = projective_replacement(pa, p)?;
    let hc = HomComplex::new(&rep.complex, q, j)?;
    Ok(DerivedHom {
        shift: j,
        dim: hc.dim(),
        cycles_dim: hc.cycles.dim(),
        boundaries_dim: hc.boundaries.dim(),
    })
}

/// Rank of the classes of the chain maps `fs : p -> q` in
/// `Hom_{D^b}(p, q)`. Each `f` is given per degree of `p`.
pub fn class_rank(pa: &PathAlgebra, p: &BoundedComplex, q: &BoundedComplex, fs: &[&dyn Fn(i64) -> Matrix]) -> Result<usize> {
    let rep = projective_replacement(pa, p)?;
    let hc = HomComplex::new(&rep.complex, q, 0)?;
    let field = pa.algebra().field();
    let mut span = hc.boundaries.clone();
    for f in fs {
        if !p.is_chain_map(q, f) {
            return Err(Error::InvalidComplex("class of a map that is not a chain map".into()));
        }
        let v = hc.flatten_map(field, &|n| f(n).mul(&rep.quasi_iso(n, p)));
        span = span.sum(&Subspace::from_vectors(field, hc.total, &[v]));
    }
    Ok(span.dim() - hc.boundaries.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::a3;
    use crate::exactmath::Field;

    #[test]
    fn injective_two_resolves_by_p3_into_p1() {
        let pa = a3(Field::rationals(), false);
        let i2 = pa.injective(1).unwrap();
        let (q1, del, q0, eps) = resolution(&pa, &i2).unwrap();
        assert_eq!(q0.blocks.iter().map(|b| b.0).collect::<Vec<_>>(), [0]);
        assert_eq!(q1.blocks.iter().map(|b| b.0).collect::<Vec<_>>(), [2]);
        assert!(eps.mul(&del).is_zero());
        assert_eq!(eps.rank(), 2);
        assert_eq!(del.rank(), 1);
    }

    #[test]
    fn replacement_of_projective_complex_is_unchanged() {
        let pa = a3(Field::rationals(), false);
        let c = BoundedComplex::concentrated(&pa.projective(0).unwrap(), 0);
        let rep = projective_replacement(&pa, &c).unwrap();
        assert_eq!(rep.complex, c);
    }

    #[test]
    fn replacement_matches_homology() {
        let pa = a3(Field::rationals(), false);
        let c = BoundedComplex::concentrated(&pa.injective(1).unwrap(), 0);
        let rep = projective_replacement(&pa, &c).unwrap();
        assert_eq!(rep.complex.term_dim(-1), 1);
        assert_eq!(rep.complex.term_dim(0), 3);
        assert_eq!(rep.complex.homology_dims().get(&0), Some(&2));
    }

    #[test]
    fn derived_homs_between_modules() {
        let pa = a3(Field::rationals(), false);
        let a = BoundedComplex::concentrated(&GradedModule::regular(pa.algebra()), 0);
        assert_eq!(hom_derived(&pa, &a, &a, 0).unwrap().dim, 6);
        assert_eq!(hom_derived(&pa, &a, &a, 1).unwrap().dim, 0);
        let p3 = BoundedComplex::concentrated(&pa.projective(2).unwrap(), 0);
        let p1 = BoundedComplex::concentrated(&pa.projective(0).unwrap(), 0);
        assert_eq!(hom_derived(&pa, &p3, &p1, 0).unwrap().dim, 1);
        // Ext^1(S_1, S_2) = 1 along the arrow 1 -> 2
        let s1 = BoundedComplex::concentrated(&pa.simple(0).unwrap(), 0);
        let s2 = BoundedComplex::concentrated(&pa.simple(1).unwrap(), 0);
        assert_eq!(hom_derived(&pa, &s1, &s2, 1).unwrap().dim, 1);
        assert_eq!(hom_derived(&pa, &s2, &s1, 1).unwrap().dim, 0);
    }

    #[test]
    fn bad_complex_rejected() {
        let pa = a3(Field::rationals(), false);
        let p1 = pa.projective(0).unwrap();
        let f = Field::rationals();
        let id = Matrix::identity(f, 3);
        let err = BoundedComplex::new(pa.algebra(), 0, vec![p1.clone(), p1.clone(), p1], vec![id.clone(), id]).unwrap_err();
        assert_eq!(err.name(), "InvalidComplex");
    }
}
