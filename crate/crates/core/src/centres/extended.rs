//! Twisted centres `{(a, h) : a b = phi_h(b) a}` inside `A ⊗ kH`, and the
//! extended centre for the action of the character group by grading
//! automorphisms.

use serde::Serialize;

use super::gcentre::GCentre;
use super::{signed_commutant, BigradedDim, CentreReport};
use crate::algcore::linalg::{LinearSystem, Matrix, Subspace, Vector};
use crate::algcore::{grading_automorphism, GradedAlgebra};
use crate::error::{Error, Result};
use crate::exactmath::{character_group, characteristic_divides, characters, CharacterGroup, FinAbGroup, Scalar};

/// `{a : a e_j = phi(e_j) a}` for each automorphism `phi` in `images`.
pub fn twisted_centre(a: &GradedAlgebra, images: &[Matrix]) -> Vec<Subspace> {
    let field = a.field();
    let d = a.dim();
    images
        .iter()
        .map(|phi| {
            if phi == &Matrix::identity(field, d) {
                return signed_commutant(a, &(0..d).collect::<Vec<_>>(), |_| None);
            }
            let mut sys = LinearSystem::new(field, d);
            for &j in a.generators() {
                let r = a.right_mult(j);
                // (phi(e_j) a) = L_{phi(e_j)} a
                let l = a.left_mult_elem(&phi.column(j));
                sys.push_matrix_rows(&r.sub(&l));
                sys.compact();
            }
            Subspace::from_vectors(field, d, &sys.nullspace())
        })
        .collect()
}

/// `A ⊗ kH` with `(e_i, h)(e_j, k) = (e_i e_j, h + k)`, basis index
/// `h * dim A + i`.
pub fn group_tensor_algebra(a: &GradedAlgebra, h: &FinAbGroup) -> GradedAlgebra {
    let (d, n) = (a.dim(), h.order());
    let mut mult = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let xy = h.add_idx(x, y);
            for (i, j, k, c) in a.triples() {
                mult.push((x * d + i, y * d + j, xy * d + k, c));
            }
        }
    }
    let names = (0..n * d)
        .map(|idx| format!("{}#{}", a.name(idx % d), h.format_element(&h.element(idx / d))))
        .collect();
    let degrees = (0..n * d).map(|idx| a.degree(idx % d)).collect();
    let mut unit = vec![a.field().zero(); n * d];
    unit[..d].clone_from_slice(a.unit());
    GradedAlgebra::new(a.field(), a.group().clone(), names, degrees, mult, Some(unit))
        .expect("A ⊗ kH is a valid algebra")
}

/// The extended centre of a graded algebra: one twisted centre per
/// character, housed in `A ⊗ kĜ`.
#[derive(Clone, Debug)]
pub struct ExtendedCentre {
    algebra: GradedAlgebra,
    pub characters: CharacterGroup,
    /// Indexed like `characters.characters`.
    pub pieces: Vec<Subspace>,
    ambient: GradedAlgebra,
}

/// Uses all `|G|` characters when `char F` is prime to `|G|` (failing if
/// the roots of unity are missing) and otherwise the smaller group
/// `Hom(G, F^x)` that exists.
pub fn extended_centre(a: &GradedAlgebra) -> Result<ExtendedCentre> {
    let group = a.group();
    let field = a.field();
    if !characteristic_divides(field, group.order() as u64) {
        characters(group, field)?;
    }
    let cg = character_group(group, field)?;
    let images = cg
        .characters
        .iter()
        .map(|chi| grading_automorphism(a, chi))
        .collect::<Result<Vec<_>>>()?;
    let pieces = twisted_centre(a, &images);
    let ambient = group_tensor_algebra(a, &cg.dual);
    Ok(ExtendedCentre {
        algebra: a.clone(),
        characters: cg,
        pieces,
        ambient,
    })
}

impl ExtendedCentre {
    pub fn dim(&self) -> usize {
        self.pieces.iter().map(Subspace::dim).sum()
    }

    /// `A ⊗ kĜ`.
    pub fn ambient(&self) -> &GradedAlgebra {
        &self.ambient
    }

    /// Basis as `(character index, a)`, characters in order.
    pub fn basis_pairs(&self) -> Vec<(usize, Vector)> {
        self.pieces
            .iter()
            .enumerate()
            .flat_map(|(c, p)| p.basis().iter().map(move |v| (c, v.clone())))
            .collect()
    }

    /// The same basis as vectors of `A ⊗ kĜ`.
    pub fn basis_vectors(&self) -> Vec<Vector> {
        let d = self.algebra.dim();
        let n = self.characters.len();
        self.basis_pairs()
            .into_iter()
            .map(|(c, a)| {
                let mut v = vec![self.algebra.field().zero(); n * d];
                v[c * d..(c + 1) * d].clone_from_slice(&a);
                v
            })
            .collect()
    }

    pub fn space(&self) -> Subspace {
        Subspace::from_vectors(self.algebra.field(), self.ambient.dim(), &self.basis_vectors())
    }

    /// `d_{g, chi}` for every slot, degrees outer.
    pub fn bigraded_dims(&self) -> Vec<BigradedDim> {
        let group = self.algebra.group();
        let mut out = Vec::new();
        for g in 0..group.order() {
            for (c, chi) in self.characters.characters.iter().enumerate() {
                let dim = self.pieces[c]
                    .basis()
                    .iter()
                    .filter(|v| self.algebra.homogeneous_degree(v) == Some(g))
                    .count();
                out.push(BigradedDim {
                    degree: group.format_element(&group.element(g)),
                    character: chi.label(),
                    dim,
                });
            }
        }
        out
    }

    /// Pairs of basis elements violating `(x, chi)(y, chi') = 0` unless
    /// `chi(deg y) chi'(deg x) = 1`.
    pub fn vanishing_violations(&self) -> Vec<(usize, usize)> {
        let pairs = self.basis_pairs();
        let mut bad = Vec::new();
        for (s, (c, x)) in pairs.iter().enumerate() {
            for (t, (c2, y)) in pairs.iter().enumerate() {
                let (Some(g), Some(h)) = (self.algebra.homogeneous_degree(x), self.algebra.homogeneous_degree(y)) else {
                    continue;
                };
                let chi = &self.characters.characters[*c];
                let chi2 = &self.characters.characters[*c2];
                let factor = chi.eval_idx(h) * chi2.eval_idx(g);
                if !factor.is_one() && !crate::algcore::linalg::vec_is_zero(&self.algebra.mul(x, y)) {
                    bad.push((s, t));
                }
            }
        }
        bad
    }

    pub fn report(&self) -> Result<CentreReport> {
        CentreReport::build(
            "extended-centre",
            self.algebra.dim(),
            &self.ambient,
            &self.space(),
            self.bigraded_dims(),
        )
    }
}

/// `(a, chi) -> {g -> chi(g) a}`.
pub fn embed_ext_to_g(a: &GradedAlgebra, ext: &ExtendedCentre, character: usize, x: &[Scalar]) -> Vector {
    let chi = &ext.characters.characters[character];
    (0..a.group().order())
        .flat_map(|g| x.iter().map(move |c| c * chi.eval_idx(g)))
        .collect()
}

/// `a_eta = (1/|G|) sum_l eta(-l) x^(l)`, returned in `A ⊗ kĜ`.
pub fn invert_embedding(a: &GradedAlgebra, x: &[Scalar]) -> Result<Vector> {
    let group = a.group();
    let field = a.field();
    let order = group.order();
    if characteristic_divides(field, order as u64) {
        return Err(Error::CharacteristicDividesOrder {
            characteristic: field.characteristic(),
            order: order as u64,
        });
    }
    let chars = characters(group, field)?;
    let d = a.dim();
    let inv = field.from_i64(order as i64).inv().expect("order is invertible");
    let mut out = Vec::with_capacity(chars.len() * d);
    for eta in &chars {
        let mut acc = vec![field.zero(); d];
        for l in 0..order {
            let c = eta.eval_idx(group.neg_idx(l)) * &inv;
            crate::algcore::linalg::axpy(&mut acc, &c, &x[l * d..(l + 1) * d]);
        }
        out.extend(acc);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddingReport {
    pub extended_dim: usize,
    pub g_centre_dim: usize,
    pub rank: usize,
    pub injective: bool,
    pub bijective: bool,
    pub lands_in_g_centre: bool,
    pub multiplicative: bool,
    pub grading_preserved: bool,
    pub intertwines_g_action: bool,
    /// `None` when the inverse is undefined for this field.
    pub round_trip: Option<bool>,
    pub inverse_error: Option<String>,
}

impl EmbeddingReport {
    pub fn holds(&self) -> bool {
        self.injective
            && self.lands_in_g_centre
            && self.multiplicative
            && self.grading_preserved
            && self.intertwines_g_action
            && self.round_trip.unwrap_or(true)
    }
}

/// Check the embedding of the extended centre into the G-centre on its
/// whole basis.
pub fn embedding_report(a: &GradedAlgebra, ext: &ExtendedCentre, gc: &GCentre) -> EmbeddingReport {
    let field = a.field();
    let group = a.group();
    let pairs = ext.basis_pairs();
    let images: Vec<Vector> = pairs.iter().map(|(c, x)| embed_ext_to_g(a, ext, *c, x)).collect();
    let rows = gc.space().ambient();
    let rank = if images.is_empty() {
        0
    } else {
        Matrix::from_columns(field, &images, rows).rank()
    };
    let lands = images.iter().all(|v| gc.contains(v));
    let ext_ambient = ext.ambient();
    let ext_vectors = ext.basis_vectors();
    let mut multiplicative = true;
    for (s, (cs, _)) in pairs.iter().enumerate() {
        for (t, _) in pairs.iter().enumerate() {
            let prod = ext_ambient.mul(&ext_vectors[s], &ext_vectors[t]);
            // the product lies in the piece of the product character
            let cprod = ext.characters.mul_idx(*cs, pairs[t].0);
            let d = a.dim();
            let a_part = prod[cprod * d..(cprod + 1) * d].to_vec();
            let lhs = embed_ext_to_g(a, ext, cprod, &a_part);
            multiplicative &= lhs == gc.product(&images[s], &images[t]);
        }
    }
    let grading_preserved = pairs
        .iter()
        .zip(&images)
        .all(|((_, x), img)| a.homogeneous_degree(x) == gc.homogeneous_degree(img));
    // k . (x, chi) = chi(k) (x, chi) on the extended side
    let intertwines = (0..group.order()).all(|k| {
        pairs.iter().zip(&images).all(|((c, x), img)| {
            let chi = &ext.characters.characters[*c];
            let scaled: Vector = x.iter().map(|v| v * chi.eval_idx(k)).collect();
            embed_ext_to_g(a, ext, *c, &scaled) == gc.act(k, img)
        })
    });
    let (round_trip, inverse_error) = {
        let mut ok = true;
        let mut err = None;
        for (pair, img) in pairs.iter().zip(&images) {
            match invert_embedding(a, img) {
                Ok(v) => {
                    let d = a.dim();
                    let mut expect = vec![field.zero(); v.len()];
                    expect[pair.0 * d..(pair.0 + 1) * d].clone_from_slice(&pair.1);
                    ok &= v == expect;
                }
                Err(e) => {
                    err = Some(e.to_string());
                    break;
                }
            }
        }
        if err.is_some() {
            (None, err)
        } else {
            (Some(ok), None)
        }
    };
    EmbeddingReport {
        extended_dim: ext.dim(),
        g_centre_dim: gc.dim(),
        rank,
        injective: rank == ext.dim(),
        bijective: rank == ext.dim() && rank == gc.dim(),
        lands_in_g_centre: lands,
        multiplicative,
        grading_preserved,
        intertwines_g_action: intertwines,
        round_trip,
        inverse_error,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{dual_numbers, group_algebra_z2, matrix_algebra};
    use crate::centres::g_centre;
    use crate::exactmath::Field;

    #[test]
    fn dual_numbers_extended_centre() {
        let f = Field::rationals();
        let a = dual_numbers(f);
        let e = extended_centre(&a).unwrap();
        assert_eq!(e.pieces.iter().map(Subspace::dim).collect::<Vec<_>>(), [2, 1]);
        assert!(e.vanishing_violations().is_empty());
        let gc = g_centre(&a);
        let r = embedding_report(&a, &e, &gc);
        assert!(r.holds() && r.bijective, "{r:?}");
        // (x, chi_1) -> {0 -> x, 1 -> -x}
        let img = embed_ext_to_g(&a, &e, 1, &[f.zero(), f.one()]);
        assert_eq!(img, [f.zero(), f.one(), f.zero(), f.from_i64(-1)]);
    }

    #[test]
    fn group_algebra_has_no_twisted_part() {
        let e = extended_centre(&group_algebra_z2(Field::rationals())).unwrap();
        assert_eq!(e.pieces.iter().map(Subspace::dim).collect::<Vec<_>>(), [2, 0]);
    }

    #[test]
    fn trivial_group_extended_centre_is_centre() {
        let f = Field::rationals();
        let m = matrix_algebra(f, 2);
        let e = extended_centre(&m).unwrap();
        assert_eq!(e.pieces, vec![super::super::centre_space(&m)]);
    }

    #[test]
    fn characteristic_two_inverse_fails() {
        let f = Field::prime(2).unwrap();
        let a = dual_numbers(f);
        let e = extended_centre(&a).unwrap();
        let gc = g_centre(&a);
        assert_eq!((e.dim(), gc.dim()), (2, 3));
        let r = embedding_report(&a, &e, &gc);
        assert!(r.injective && !r.bijective);
        assert!(r.inverse_error.unwrap().starts_with("CharacteristicDividesOrder"));
        assert_eq!(invert_embedding(&a, &gc.unit()).unwrap_err().name(), "CharacteristicDividesOrder");
    }
}
