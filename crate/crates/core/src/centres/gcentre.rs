//! The G-centre: functions `x : G -> A` with `x^(g) y = y x^(g+h)` for
//! `y` of degree `h`, stored in `A ⊗ k^G` with index `g * dim A + i`.

use serde::Serialize;

use super::{BigradedDim, CentreReport};
use crate::algcore::linalg::{LinearSystem, Matrix, Subspace, Vector};
use crate::algcore::GradedAlgebra;
use crate::error::{Error, Result};
use crate::exactmath::{characteristic_divides, characters, Character, Scalar};

/// `A ⊗ k^G` with the pointwise product, graded by the degree in `A`.
pub fn pointwise_algebra(a: &GradedAlgebra) -> GradedAlgebra {
    let group = a.group();
    let (d, n) = (a.dim(), group.order());
    let mut mult = Vec::new();
    for g in 0..n {
        for (i, j, k, c) in a.triples() {
            mult.push((g * d + i, g * d + j, g * d + k, c));
        }
    }
    let names = (0..n * d)
        .map(|idx| format!("{}@{}", a.name(idx % d), group.format_element(&group.element(idx / d))))
        .collect();
    let degrees = (0..n * d).map(|idx| a.degree(idx % d)).collect();
    let unit = (0..n).flat_map(|_| a.unit().iter().cloned()).collect();
    GradedAlgebra::new(a.field(), group.clone(), names, degrees, mult, Some(unit))
        .expect("pointwise algebra of a valid algebra is valid")
}

#[derive(Clone, Debug)]
pub struct GCentre {
    algebra: GradedAlgebra,
    ambient: GradedAlgebra,
    space: Subspace,
}

/// One summand `Z^G(A)_{g, chi}`: functions with values in `A_g` and
/// `x^(k) = chi(k) x^(0)`.
#[derive(Clone, Debug)]
pub struct BigradedPiece {
    pub degree: usize,
    pub character: Character,
    pub space: Subspace,
}

pub fn g_centre(a: &GradedAlgebra) -> GCentre {
    let group = a.group();
    let field = a.field();
    let (d, n) = (a.dim(), group.order());
    let mut sys = LinearSystem::new(field, n * d);
    for &j in a.generators() {
        let h = a.degree(j);
        let r = a.right_mult(j);
        let l = a.left_mult(j);
        for g in 0..n {
            let gh = group.add_idx(g, h);
            for k in 0..d {
                let mut row = vec![field.zero(); n * d];
                for i in 0..d {
                    let x = r.get(k, i);
                    if !x.is_zero() {
                        row[g * d + i] = &row[g * d + i] + x;
                    }
                    let y = l.get(k, i);
                    if !y.is_zero() {
                        row[gh * d + i] = &row[gh * d + i] - y;
                    }
                }
                sys.push(row);
            }
        }
        sys.compact();
    }
    let space = Subspace::from_vectors(field, n * d, &sys.nullspace());
    GCentre {
        algebra: a.clone(),
        ambient: pointwise_algebra(a),
        space,
    }
}

impl GCentre {
    pub fn algebra(&self) -> &GradedAlgebra {
        &self.algebra
    }

    /// `A ⊗ k^G` with the pointwise product.
    pub fn ambient(&self) -> &GradedAlgebra {
        &self.ambient
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn basis(&self) -> &[Vector] {
        self.space.basis()
    }

    pub fn contains(&self, x: &[Scalar]) -> bool {
        self.space.contains(x)
    }

    /// `x^(g)`.
    pub fn value<'a>(&self, x: &'a [Scalar], g: usize) -> &'a [Scalar] {
        let d = self.algebra.dim();
        &x[g * d..(g + 1) * d]
    }

    pub fn from_values(&self, values: &[Vector]) -> Vector {
        values.concat()
    }

    /// The constant function at the unit.
    pub fn unit(&self) -> Vector {
        self.ambient.unit().clone()
    }

    pub fn product(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.ambient.mul(x, y)
    }

    /// `k . x = {g -> x^(k+g)}`.
    pub fn act(&self, k: usize, x: &[Scalar]) -> Vector {
        let group = self.algebra.group();
        (0..group.order())
            .flat_map(|g| self.value(x, group.add_idx(k, g)).to_vec())
            .collect()
    }

    /// Matrix of the action of `k` in the basis of the G-centre.
    pub fn action_matrix(&self, k: usize) -> Matrix {
        let cols: Vec<Vector> = self
            .basis()
            .iter()
            .map(|b| self.space.coordinates(&self.act(k, b)).expect("G-centre is G-stable"))
            .collect();
        Matrix::from_columns(self.algebra.field(), &cols, self.dim())
    }

    /// Keep, at every `k`, only the `A_g` component of `x^(k)`.
    pub fn degree_component(&self, x: &[Scalar], g: usize) -> Vector {
        let d = self.algebra.dim();
        x.iter()
            .enumerate()
            .map(|(idx, c)| if self.algebra.degree(idx % d) == g { c.clone() } else { c.field().zero() })
            .collect()
    }

    /// G-degree of `x` when every value lies in one `A_g`.
    pub fn homogeneous_degree(&self, x: &[Scalar]) -> Option<usize> {
        self.ambient.homogeneous_degree(x)
    }

    /// A basis of homogeneous elements, grouped by degree in group order.
    pub fn homogeneous_basis(&self) -> Vec<(usize, Vector)> {
        let field = self.algebra.field();
        let mut out = Vec::new();
        for g in 0..self.algebra.group().order() {
            let comps: Vec<Vector> = self.basis().iter().map(|b| self.degree_component(b, g)).collect();
            let piece = Subspace::from_vectors(field, self.space.ambient(), &comps);
            out.extend(piece.basis().iter().map(|v| (g, v.clone())));
        }
        out
    }

    /// The pieces `Z^G(A)_{g, chi}` obtained with the idempotents
    /// `(1/|G|) sum_k chi(-k) (k . -)`. Needs all `|G|` characters and
    /// `char F` prime to `|G|`.
    pub fn bigraded_pieces(&self) -> Result<Vec<BigradedPiece>> {
        let group = self.algebra.group();
        let field = self.algebra.field();
        let order = group.order();
        if characteristic_divides(field, order as u64) {
            return Err(Error::CharacteristicDividesOrder {
                characteristic: field.characteristic(),
                order: order as u64,
            });
        }
        let chars = characters(group, field)?;
        let inv = field.from_i64(order as i64).inv().expect("order is invertible");
        let shifted: Vec<Vec<Vector>> = (0..order)
            .map(|k| self.basis().iter().map(|b| self.act(k, b)).collect())
            .collect();
        let mut pieces = Vec::new();
        for g in 0..order {
            for chi in &chars {
                let mut images = Vec::with_capacity(self.dim());
                for b in 0..self.dim() {
                    let mut acc = vec![field.zero(); self.space.ambient()];
                    for (k, sh) in shifted.iter().enumerate() {
                        let c = chi.eval_idx(group.neg_idx(k)) * &inv;
                        crate::algcore::linalg::axpy(&mut acc, &c, &sh[b]);
                    }
                    images.push(self.degree_component(&acc, g));
                }
                pieces.push(BigradedPiece {
                    degree: g,
                    character: chi.clone(),
                    space: Subspace::from_vectors(field, self.space.ambient(), &images),
                });
            }
        }
        let total: usize = pieces.iter().map(|p| p.space.dim()).sum();
        if total != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "bigraded pieces have total dimension {total}, G-centre has {}",
                self.dim()
            )));
        }
        Ok(pieces)
    }

    /// Image of `x -> x^(0)` inside `A`.
    pub fn underline(&self) -> Subspace {
        let vals: Vec<Vector> = self.basis().iter().map(|b| self.value(b, 0).to_vec()).collect();
        Subspace::from_vectors(self.algebra.field(), self.algebra.dim(), &vals)
    }

    /// The G-centre as an algebra in its canonical basis.
    pub fn as_algebra(&self) -> Result<GradedAlgebra> {
        self.ambient.subalgebra(self.basis(), "z")
    }

    pub fn report(&self) -> Result<CentreReport> {
        let group = self.algebra.group();
        let bigraded = match self.bigraded_pieces() {
            Ok(pieces) => pieces
                .iter()
                .map(|p| BigradedDim {
                    degree: group.format_element(&group.element(p.degree)),
                    character: p.character.label(),
                    dim: p.space.dim(),
                })
                .collect(),
            Err(Error::CharacteristicDividesOrder { .. }) | Err(Error::MissingRootOfUnity { .. }) => Vec::new(),
            Err(e) => return Err(e),
        };
        CentreReport::build("g-centre", self.algebra.dim(), &self.ambient, &self.space, bigraded)
    }
}

/// `Z^G(A)` evaluated at the identity, as a subspace of `A`.
pub fn underline_g_centre(a: &GradedAlgebra) -> Subspace {
    g_centre(a).underline()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureReport {
    pub products_checked: usize,
    pub contains_unit: bool,
    pub closed: bool,
    pub action_invertible: bool,
}

impl GCentre {
    /// Re-solve membership for every product of basis elements and for the
    /// G-action on the basis.
    pub fn check_closure(&self) -> ClosureReport {
        let b = self.basis();
        let mut closed = true;
        for x in b {
            for y in b {
                closed &= self.contains(&self.product(x, y));
            }
        }
        let order = self.algebra.group().order();
        let action_invertible = (0..order).all(|k| {
            let m = self.action_matrix(k);
            m.rank() == self.dim()
        });
        ClosureReport {
            products_checked: b.len() * b.len(),
            contains_unit: self.contains(&self.unit()),
            closed,
            action_invertible,
        }
    }
}
