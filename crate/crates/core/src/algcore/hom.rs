//! Spaces of module homomorphisms, graded and ungraded.

use super::algebra::GradedAlgebra;
use super::linalg::{LinearSystem, Matrix};
use super::module::GradedModule;
use crate::error::{Error, Result};
use crate::exactmath::{Field, FinAbGroup, Scalar};

/// A module map `source -> target` sending `source_h` into `target_{h+degree}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleHom {
    pub source: GradedModule,
    pub target: GradedModule,
    pub matrix: Matrix,
    pub degree: usize,
}

impl ModuleHom {
    pub fn compose(&self, first: &ModuleHom) -> ModuleHom {
        let group = self.source.algebra().group();
        ModuleHom {
            source: first.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&first.matrix),
            degree: group.add_idx(self.degree, first.degree),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }
}

pub(crate) fn require_same_algebra(m: &GradedModule, n: &GradedModule) -> Result<()> {
    if m.algebra() != n.algebra() {
        return Err(Error::AlgebraMismatch("modules are over different algebras".into()));
    }
    Ok(())
}

/// Basis of `{F : N_a F = F M_a for all a}` restricted to the allowed
/// entries `(r, c)`.
fn intertwiners(m: &GradedModule, n: &GradedModule, allowed: impl Fn(usize, usize) -> bool) -> Vec<Matrix> {
    let field = m.algebra().field();
    let (dm, dn) = (m.dim(), n.dim());
    let mut vars = Vec::new();
    let mut var_of = vec![None; dn * dm];
    for r in 0..dn {
        for c in 0..dm {
            if allowed(r, c) {
                var_of[r * dm + c] = Some(vars.len());
                vars.push((r, c));
            }
        }
    }
    if vars.is_empty() {
        return Vec::new();
    }
    let mut sys = LinearSystem::new(field, vars.len());
    for &g in m.algebra().generators() {
        let (am, an) = (m.action(g), n.action(g));
        for r in 0..dn {
            for c in 0..dm {
                let mut row = vec![field.zero(); vars.len()];
                // (N_g F)[r][c] = sum_k N_g[r][k] F[k][c]
                for k in 0..dn {
                    let x = an.get(r, k);
                    if let (false, Some(v)) = (x.is_zero(), var_of[k * dm + c]) {
                        row[v] = &row[v] + x;
                    }
                }
                // (F M_g)[r][c] = sum_k F[r][k] M_g[k][c]
                for k in 0..dm {
                    let x = am.get(k, c);
                    if let (false, Some(v)) = (x.is_zero(), var_of[r * dm + k]) {
                        row[v] = &row[v] - x;
                    }
                }
                sys.push(row);
            }
        }
        sys.compact();
    }
    sys.nullspace()
        .into_iter()
        .map(|sol| {
            let mut f = Matrix::zeros(field, dn, dm);
            for (x, &(r, c)) in sol.into_iter().zip(&vars) {
                f.set(r, c, x);
            }
            f
        })
        .collect()
}

/// Basis of `hom_A(M, Pi_g N)`: maps sending `M_h` into `N_{h+g}`.
pub fn hom_modules(m: &GradedModule, n: &GradedModule, g: usize) -> Result<Vec<ModuleHom>> {
    require_same_algebra(m, n)?;
    let group = m.algebra().group();
    let mats = intertwiners(m, n, |r, c| n.degree(r) == group.add_idx(m.degree(c), g));
    Ok(mats
        .into_iter()
        .map(|matrix| ModuleHom {
            source: m.clone(),
            target: n.clone(),
            matrix,
            degree: g,
        })
        .collect())
}

/// Basis of all `A`-linear maps, ignoring the grading.
pub fn hom_ungraded(m: &GradedModule, n: &GradedModule) -> Result<Vec<Matrix>> {
    require_same_algebra(m, n)?;
    Ok(intertwiners(m, n, |_, _| true))
}

pub fn is_module_map(m: &GradedModule, n: &GradedModule, f: &Matrix) -> bool {
    f.rows() == n.dim()
        && f.cols() == m.dim()
        && (0..m.algebra().dim()).all(|i| n.action(i).mul(f) == f.mul(m.action(i)))
}

/// `End_A(M)` (ungraded) as an algebra under composition, together with
/// the matrices of its basis.
pub fn endomorphism_algebra(m: &GradedModule) -> Result<(GradedAlgebra, Vec<Matrix>)> {
    let basis = hom_ungraded(m, m)?;
    let algebra = algebra_from_matrices(m.algebra().field(), &basis, None)?;
    Ok((algebra, basis))
}

/// Coordinates of `m` in the span of `basis`, if it lies there.
pub fn matrix_coordinates(basis: &[Matrix], m: &Matrix) -> Option<Vec<Scalar>> {
    let flat: Vec<Vec<Scalar>> = basis.iter().map(|b| b.flatten().to_vec()).collect();
    Matrix::from_columns(m.field(), &flat, m.rows() * m.cols()).solve(m.flatten())
}

/// The algebra spanned by a composition-closed set of matrices, with
/// product `a * b = a b`. Optional degrees must be supplied as
/// `(group, per-basis degree)`.
pub fn algebra_from_matrices(
    field: Field,
    basis: &[Matrix],
    grading: Option<(FinAbGroup, Vec<usize>)>,
) -> Result<GradedAlgebra> {
    let d = basis.len();
    let flat: Vec<Vec<Scalar>> = basis.iter().map(|b| b.flatten().to_vec()).collect();
    let n = flat.first().map_or(0, Vec::len);
    let coords = Matrix::from_columns(field, &flat, n);
    let mut mult = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let prod = basis[i].mul(&basis[j]);
            let c = coords.solve(prod.flatten()).ok_or_else(|| {
                Error::InvalidModule(format!("product of basis maps {i} and {j} leaves the span"))
            })?;
            for (k, x) in c.into_iter().enumerate() {
                if !x.is_zero() {
                    mult.push((i, j, k, x));
                }
            }
        }
    }
    let (group, degrees) = grading.unwrap_or((FinAbGroup::trivial(), vec![0; d]));
    let names = (0..d).map(|i| format!("f{i}")).collect();
    let identity = basis
        .first()
        .map(|b| Matrix::identity(field, b.rows()))
        .unwrap_or_else(|| Matrix::zeros(field, 0, 0));
    let unit = if d == 0 {
        None
    } else {
        Some(coords.solve(identity.flatten()).ok_or_else(|| {
            Error::NoUnit("identity map is not in the span".into())
        })?)
    };
    GradedAlgebra::new(field, group, names, degrees, mult, unit)
}
