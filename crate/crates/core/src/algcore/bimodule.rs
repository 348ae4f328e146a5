//! Bimodules `_A X _B` with explicit left and right action matrices.
//!
//! Right actions are stored as matrices `R_b` with `x . b = R_b x`, so
//! `R_{b c} = R_c R_b`.

use super::algebra::GradedAlgebra;
use super::linalg::{LinearSystem, Matrix, Vector};
use super::module::GradedModule;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct Bimodule {
    left: GradedAlgebra,
    right: GradedAlgebra,
    degrees: Vec<usize>,
    left_action: Vec<Matrix>,
    right_action: Vec<Matrix>,
}

impl Bimodule {
    pub fn new(
        left: &GradedAlgebra,
        right: &GradedAlgebra,
        degrees: Vec<usize>,
        left_action: Vec<Matrix>,
        right_action: Vec<Matrix>,
    ) -> Result<Bimodule> {
        let x = Bimodule {
            left: left.clone(),
            right: right.clone(),
            degrees,
            left_action,
            right_action,
        };
        x.validate()?;
        Ok(x)
    }

    fn validate(&self) -> Result<()> {
        // Both one-sided structures are checked as left modules.
        GradedModule::new(&self.left, self.degrees.clone(), self.left_action.clone())?;
        let op = self.right.opposite();
        GradedModule::new(&op, self.degrees.clone(), self.right_action.clone())
            .map_err(|e| Error::InvalidModule(format!("right action: {e}")))?;
        for (i, l) in self.left_action.iter().enumerate() {
            for (j, r) in self.right_action.iter().enumerate() {
                if l.mul(r) != r.mul(l) {
                    return Err(Error::InvalidModule(format!(
                        "left action of e{i} does not commute with right action of e{j}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// `_A A _A`.
    pub fn regular(a: &GradedAlgebra) -> Bimodule {
        Bimodule {
            left: a.clone(),
            right: a.clone(),
            degrees: a.degrees().to_vec(),
            left_action: (0..a.dim()).map(|i| a.left_mult(i)).collect(),
            right_action: (0..a.dim()).map(|i| a.right_mult(i)).collect(),
        }
    }

    /// `P ⊗_k Q` for a left `A`-module `P` and a right `B`-module `Q`, the
    /// latter given as a left module over `B^op`. Basis index `p * dim Q + q`.
    pub fn outer(p: &GradedModule, q: &GradedModule, right: &GradedAlgebra) -> Result<Bimodule> {
        let left = p.algebra();
        if q.algebra() != &right.opposite() {
            return Err(Error::AlgebraMismatch("right factor is not a module over the opposite algebra".into()));
        }
        let field = left.field();
        let ip = Matrix::identity(field, p.dim());
        let iq = Matrix::identity(field, q.dim());
        let group = left.group();
        let mut degrees = Vec::with_capacity(p.dim() * q.dim());
        for i in 0..p.dim() {
            for j in 0..q.dim() {
                degrees.push(group.add_idx(p.degree(i), q.degree(j)));
            }
        }
        Bimodule::new(
            left,
            right,
            degrees,
            (0..left.dim()).map(|i| p.action(i).kron(&iq)).collect(),
            (0..right.dim()).map(|i| ip.kron(q.action(i))).collect(),
        )
    }

    /// `^alpha X`: left action precomposed with an automorphism of the left algebra.
    pub fn twisted_left(&self, alpha: &Matrix) -> Result<Bimodule> {
        super::algebra::check_automorphism(&self.left, alpha)?;
        let field = self.left.field();
        let n = self.dim();
        let left_action = (0..self.left.dim())
            .map(|i| {
                let mut m = Matrix::zeros(field, n, n);
                for (j, c) in alpha.column(i).iter().enumerate() {
                    if !c.is_zero() {
                        m = m.add(&self.left_action[j].scale(c));
                    }
                }
                m
            })
            .collect();
        Bimodule::new(&self.left, &self.right, self.degrees.clone(), left_action, self.right_action.clone())
    }

    pub fn left_algebra(&self) -> &GradedAlgebra {
        &self.left
    }

    pub fn right_algebra(&self) -> &GradedAlgebra {
        &self.right
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn left_action(&self, i: usize) -> &Matrix {
        &self.left_action[i]
    }

    pub fn right_action(&self, i: usize) -> &Matrix {
        &self.right_action[i]
    }

    pub fn as_left_module(&self) -> GradedModule {
        GradedModule::new_unchecked(&self.left, self.degrees.clone(), self.left_action.clone())
    }

    /// The right structure as a left module over the opposite algebra.
    pub fn as_right_module(&self) -> GradedModule {
        GradedModule::new_unchecked(&self.right.opposite(), self.degrees.clone(), self.right_action.clone())
    }

    /// Is the right module a direct summand of a free module? Decided by the
    /// dual basis criterion: there are `phi_q in Hom(X, B)` with
    /// `x = sum_q phi_q(x) . x_q` for the standard basis `x_q`.
    pub fn is_right_projective(&self) -> bool {
        is_projective(&self.as_right_module())
    }
}

/// Dual basis test for a left module `M` over `B`: look for `phi_q` in
/// `Hom_B(M, B)` with `sum_q phi_q(m) x_q = m` for all basis vectors `m`.
pub fn is_projective(m: &GradedModule) -> bool {
    let b = m.algebra();
    let reg = GradedModule::regular(b);
    let homs = super::hom::hom_ungraded(m, &reg).expect("same algebra");
    let n = m.dim();
    if n == 0 {
        return true;
    }
    let field = b.field();
    let nh = homs.len();
    // Unknown c[q][t]: phi_q = sum_t c[q][t] homs[t].
    let nvars = n * nh;
    let mut columns: Vec<Vector> = Vec::with_capacity(nvars);
    for q in 0..n {
        for h in &homs {
            // Contribution to the identity check: for each basis m_s,
            // (h(m_s)) . x_q as a vector in M; flatten over s.
            let mut col = Vec::with_capacity(n * n);
            for s in 0..n {
                let coeffs = h.column(s);
                let acted = m.act(&coeffs).column(q);
                col.extend(acted);
            }
            columns.push(col);
        }
    }
    let sys = Matrix::from_columns(field, &columns, n * n);
    // Row s * n + r of the system is coordinate r of the image of m_s.
    let rhs = Matrix::identity(field, n).flatten().to_vec();
    sys.solve(&rhs).is_some()
}

/// Basis of bimodule maps `X -> Y` (ungraded).
pub fn hom_bimodules(x: &Bimodule, y: &Bimodule) -> Result<Vec<Matrix>> {
    if x.left != y.left || x.right != y.right {
        return Err(Error::AlgebraMismatch("bimodules over different algebras".into()));
    }
    let field = x.left.field();
    let (dx, dy) = (x.dim(), y.dim());
    let nvars = dx * dy;
    let mut sys = LinearSystem::new(field, nvars);
    let pairs: Vec<(&Matrix, &Matrix)> = x
        .left
        .generators()
        .iter()
        .map(|&g| (&x.left_action[g], &y.left_action[g]))
        .chain(
            x.right
                .generators()
                .iter()
                .map(|&g| (&x.right_action[g], &y.right_action[g])),
        )
        .collect();
    for (ax, ay) in pairs {
        for r in 0..dy {
            for c in 0..dx {
                let mut row = vec![field.zero(); nvars];
                for k in 0..dy {
                    let v = ay.get(r, k);
                    if !v.is_zero() {
                        row[k * dx + c] = &row[k * dx + c] + v;
                    }
                }
                for k in 0..dx {
                    let v = ax.get(k, c);
                    if !v.is_zero() {
                        row[r * dx + k] = &row[r * dx + k] - v;
                    }
                }
                sys.push(row);
            }
        }
        sys.compact();
    }
    Ok(sys
        .nullspace()
        .into_iter()
        .map(|v| Matrix::from_flat(field, dy, dx, v))
        .collect())
}

pub fn is_bimodule_map(x: &Bimodule, y: &Bimodule, f: &Matrix) -> bool {
    (0..x.left.dim()).all(|i| y.left_action[i].mul(f) == f.mul(&x.left_action[i]))
        && (0..x.right.dim()).all(|i| y.right_action[i].mul(f) == f.mul(&x.right_action[i]))
}
