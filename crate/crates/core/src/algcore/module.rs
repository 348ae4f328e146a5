//! Graded left modules given by explicit action matrices.

use std::sync::Arc;

use super::algebra::GradedAlgebra;
use super::linalg::{vec_is_zero, Matrix, Subspace, Vector};
use crate::error::{Error, Result};
use crate::exactmath::Scalar;

#[derive(Debug, PartialEq)]
struct ModuleData {
    algebra: GradedAlgebra,
    degrees: Vec<usize>,
    /// `action[i]` is the matrix of `v -> e_i v`.
    action: Vec<Matrix>,
}

/// A finite-dimensional graded left module. Cheap to clone.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedModule(Arc<ModuleData>);

impl GradedModule {
    pub fn new(algebra: &GradedAlgebra, degrees: Vec<usize>, action: Vec<Matrix>) -> Result<GradedModule> {
        let m = degrees.len();
        if action.len() != algebra.dim() {
            return Err(Error::InvalidModule(format!(
                "{} action matrices for an algebra of dimension {}",
                action.len(),
                algebra.dim()
            )));
        }
        for (i, a) in action.iter().enumerate() {
            if a.rows() != m || a.cols() != m {
                return Err(Error::InvalidModule(format!(
                    "action of e{i} is {}x{}, module has dimension {m}",
                    a.rows(),
                    a.cols()
                )));
            }
            if a.field() != algebra.field() {
                return Err(Error::InvalidModule(format!("action of e{i} over the wrong field")));
            }
        }
        if let Some(&g) = degrees.iter().find(|&&g| g >= algebra.group().order()) {
            return Err(Error::InvalidModule(format!("degree index {g} outside {}", algebra.group())));
        }
        let module = GradedModule(Arc::new(ModuleData {
            algebra: algebra.clone(),
            degrees,
            action,
        }));
        module.validate()?;
        Ok(module)
    }

    fn validate(&self) -> Result<()> {
        let a = self.algebra();
        let m = self.dim();
        let field = a.field();
        let unit = self.act(a.unit());
        if unit != Matrix::identity(field, m) {
            return Err(Error::InvalidModule("unit does not act as the identity".into()));
        }
        let group = a.group();
        for (i, act) in self.0.action.iter().enumerate() {
            for r in 0..m {
                for c in 0..m {
                    if !act.get(r, c).is_zero() && self.degree(r) != group.add_idx(a.degree(i), self.degree(c)) {
                        return Err(Error::InvalidModule(format!(
                            "e{i} sends basis vector {c} outside degree {}",
                            group.add_idx(a.degree(i), self.degree(c))
                        )));
                    }
                }
            }
        }
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let lhs = self.0.action[i].mul(&self.0.action[j]);
                let mut rhs = Matrix::zeros(field, m, m);
                for (k, c) in a.basis_product(i, j) {
                    rhs = rhs.add(&self.0.action[*k].scale(c));
                }
                if lhs != rhs {
                    return Err(Error::InvalidModule(format!(
                        "action is not associative on (e{i}, e{j})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// `A` acting on itself by left multiplication.
    pub fn regular(a: &GradedAlgebra) -> GradedModule {
        let action = (0..a.dim()).map(|i| a.left_mult(i)).collect();
        GradedModule(Arc::new(ModuleData {
            algebra: a.clone(),
            degrees: a.degrees().to_vec(),
            action,
        }))
    }

    pub fn zero(a: &GradedAlgebra) -> GradedModule {
        let action = (0..a.dim()).map(|_| Matrix::zeros(a.field(), 0, 0)).collect();
        GradedModule(Arc::new(ModuleData {
            algebra: a.clone(),
            degrees: Vec::new(),
            action,
        }))
    }

    /// Build without re-validating; for constructions that are correct by
    /// design (shifts, direct sums).
    pub(crate) fn new_unchecked(algebra: &GradedAlgebra, degrees: Vec<usize>, action: Vec<Matrix>) -> GradedModule {
        GradedModule(Arc::new(ModuleData {
            algebra: algebra.clone(),
            degrees,
            action,
        }))
    }

    pub fn algebra(&self) -> &GradedAlgebra {
        &self.0.algebra
    }

    pub fn dim(&self) -> usize {
        self.0.degrees.len()
    }

    pub fn degrees(&self) -> &[usize] {
        &self.0.degrees
    }

    pub fn degree(&self, i: usize) -> usize {
        self.0.degrees[i]
    }

    pub fn action(&self, i: usize) -> &Matrix {
        &self.0.action[i]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.0.action
    }

    /// Matrix of the action of an arbitrary algebra element.
    pub fn act(&self, a: &[Scalar]) -> Matrix {
        let field = self.algebra().field();
        let mut m = Matrix::zeros(field, self.dim(), self.dim());
        for (i, x) in a.iter().enumerate() {
            if !x.is_zero() {
                m = m.add(&self.0.action[i].scale(x));
            }
        }
        m
    }

    pub fn direct_sum(a: &GradedAlgebra, parts: &[GradedModule]) -> GradedModule {
        let degrees = parts.iter().flat_map(|p| p.degrees().iter().copied()).collect();
        let action = (0..a.dim())
            .map(|i| {
                let blocks: Vec<Matrix> = parts.iter().map(|p| p.action(i).clone()).collect();
                Matrix::block_diag(a.field(), &blocks)
            })
            .collect();
        GradedModule::new_unchecked(a, degrees, action)
    }

    /// Same space and matrices, degrees relabelled `k -> k - g`.
    pub fn shifted(&self, g: usize) -> GradedModule {
        if g == 0 {
            return self.clone();
        }
        let group = self.algebra().group();
        let degrees = self.degrees().iter().map(|&k| group.sub_idx(k, g)).collect();
        GradedModule::new_unchecked(self.algebra(), degrees, self.0.action.clone())
    }

    /// `^alpha M`: same space, `a . v := alpha(a) v`. The automorphism must
    /// preserve degrees for the result to be graded.
    pub fn twisted(&self, alpha: &Matrix) -> Result<GradedModule> {
        let a = self.algebra();
        super::algebra::check_automorphism(a, alpha)?;
        let action = (0..a.dim()).map(|i| self.act(&alpha.column(i))).collect();
        GradedModule::new(a, self.degrees().to_vec(), action)
    }

    /// Same action, grading forgotten.
    pub fn ungraded(&self, ungraded_algebra: &GradedAlgebra) -> GradedModule {
        GradedModule::new_unchecked(ungraded_algebra, vec![0; self.dim()], self.0.action.clone())
    }

    /// Vectors spanning the smallest submodule containing `vs`.
    pub fn generated_submodule(&self, vs: &[Vector]) -> Subspace {
        let field = self.algebra().field();
        let mut span = Subspace::from_vectors(field, self.dim(), vs);
        loop {
            let mut all = span.basis().to_vec();
            for b in span.basis() {
                for act in &self.0.action {
                    all.push(act.apply(b));
                }
            }
            let next = Subspace::from_vectors(field, self.dim(), &all);
            if next.dim() == span.dim() {
                return span;
            }
            span = next;
        }
    }

    /// The submodule with the given basis, and its inclusion matrix.
    /// Basis vectors must be homogeneous and span a stable subspace.
    pub fn submodule(&self, basis: &[Vector]) -> Result<(GradedModule, Matrix)> {
        let a = self.algebra();
        let field = a.field();
        let sub = Subspace::from_vectors(field, self.dim(), basis);
        if sub.dim() != basis.len() {
            return Err(Error::InvalidModule("submodule basis is linearly dependent".into()));
        }
        let incl = Matrix::from_columns(field, basis, self.dim());
        let mut degrees = Vec::with_capacity(basis.len());
        for v in basis {
            degrees.push(self.vector_degree(v).ok_or_else(|| {
                Error::NotHomogeneous("submodule basis vector is not homogeneous".into())
            })?);
        }
        // Solve incl * X = act * incl column by column.
        let mut action = Vec::with_capacity(a.dim());
        for act in &self.0.action {
            let image = act.mul(&incl);
            let mut cols = Vec::with_capacity(basis.len());
            for c in 0..basis.len() {
                let col = image.column(c);
                cols.push(incl.solve(&col).ok_or_else(|| {
                    Error::InvalidModule("subspace is not stable under the action".into())
                })?);
            }
            action.push(Matrix::from_columns(field, &cols, basis.len()));
        }
        Ok((GradedModule::new(a, degrees, action)?, incl))
    }

    /// `M / U` for a submodule spanned by `basis`, together with the
    /// projection. The quotient basis is given by the non-pivot coordinates.
    pub fn quotient(&self, basis: &[Vector]) -> Result<(GradedModule, Matrix)> {
        let a = self.algebra();
        let field = a.field();
        let sub = Subspace::from_vectors(field, self.dim(), basis);
        let (proj, section) = quotient_maps(&sub);
        let q = proj.rows();
        let degrees: Vec<usize> = (0..q)
            .map(|c| {
                let v = section.column(c);
                self.vector_degree(&v).expect("unit vector is homogeneous")
            })
            .collect();
        let action = self
            .0
            .action
            .iter()
            .map(|act| proj.mul(act).mul(&section))
            .collect();
        Ok((GradedModule::new(a, degrees, action)?, proj))
    }

    /// Degree of a nonzero homogeneous vector.
    pub fn vector_degree(&self, v: &[Scalar]) -> Option<usize> {
        let mut deg = None;
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            match deg {
                None => deg = Some(self.degree(i)),
                Some(g) if g != self.degree(i) => return None,
                _ => {}
            }
        }
        deg
    }

    pub fn is_zero_module(&self) -> bool {
        self.dim() == 0
    }

    pub fn annihilated_by(&self, a: &[Scalar]) -> bool {
        self.act(a).is_zero()
    }
}

/// Projection onto the quotient by `sub` (non-pivot coordinates) and the
/// section sending quotient basis vectors to the matching unit vectors.
pub fn quotient_maps(sub: &Subspace) -> (Matrix, Matrix) {
    let field = sub.field();
    let n = sub.ambient();
    let mut is_pivot = vec![false; n];
    for &p in sub.pivots() {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
    let pos: Vec<Option<usize>> = {
        let mut pos = vec![None; n];
        for (k, &f) in free.iter().enumerate() {
            pos[f] = Some(k);
        }
        pos
    };
    let mut proj = Matrix::zeros(field, free.len(), n);
    for (k, &f) in free.iter().enumerate() {
        proj.set(k, f, field.one());
    }
    for (row, &p) in sub.basis().iter().zip(sub.pivots()) {
        for (c, x) in row.iter().enumerate() {
            if let (Some(k), false) = (pos[c], x.is_zero()) {
                proj.set(k, p, -x);
            }
        }
    }
    let mut section = Matrix::zeros(field, n, free.len());
    for (k, &f) in free.iter().enumerate() {
        section.set(f, k, field.one());
    }
    debug_assert!(sub.basis().iter().all(|b| vec_is_zero(&proj.apply(b))));
    (proj, section)
}
