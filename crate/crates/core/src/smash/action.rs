//! Actions of finite abelian groups on algebras by automorphisms.

use serde::{Deserialize, Serialize};

use crate::algcore::io::{json_error, matrix_to_strings, parse_matrix};
use crate::algcore::linalg::{Matrix, Vector};
use crate::algcore::{check_automorphism, grading_automorphism, GradedAlgebra};
use crate::error::{Error, Result};
use crate::exactmath::{character_group, FinAbGroup, Scalar};

/// On-disk form of a group action: invariant factors of `H` and one
/// matrix per element of `H`, in the group's element order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionFile {
    pub group: Vec<u64>,
    pub images: Vec<Vec<Vec<String>>>,
}

pub fn parse_action(text: &str, source: &str, algebra: &GradedAlgebra) -> Result<GroupAction> {
    let file: ActionFile = serde_json::from_str(text).map_err(|e| json_error(source, &e))?;
    action_from_file(&file, algebra)
}

pub fn action_from_file(file: &ActionFile, algebra: &GradedAlgebra) -> Result<GroupAction> {
    let group = FinAbGroup::new(file.group.clone())?;
    let d = algebra.dim();
    let images = file
        .images
        .iter()
        .map(|m| parse_matrix(algebra.field(), m, d, d))
        .collect::<Result<Vec<_>>>()?;
    GroupAction::new(algebra, group, images)
}

pub fn action_to_file(action: &GroupAction) -> ActionFile {
    ActionFile {
        group: action.group.factors().to_vec(),
        images: action.images.iter().map(matrix_to_strings).collect(),
    }
}

/// `phi : H -> Aut(A)`, with `images[h]` the matrix of `phi_h` (columns are
/// images of basis vectors). Validated on construction.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupAction {
    algebra: GradedAlgebra,
    group: FinAbGroup,
    images: Vec<Matrix>,
}

impl GroupAction {
    pub fn new(algebra: &GradedAlgebra, group: FinAbGroup, images: Vec<Matrix>) -> Result<GroupAction> {
        let n = group.order();
        let d = algebra.dim();
        if images.len() != n {
            return Err(Error::InvalidAction(format!("{} images for a group of order {n}", images.len())));
        }
        let field = algebra.field();
        if images[0] != Matrix::identity(field, d) {
            return Err(Error::InvalidAction("the identity element does not act trivially".into()));
        }
        for (h, m) in images.iter().enumerate() {
            check_automorphism(algebra, m).map_err(|e| {
                Error::InvalidAction(format!("image of {}: {e}", group.format_element(&group.element(h))))
            })?;
        }
        for h in 0..n {
            for k in 0..n {
                if images[h].mul(&images[k]) != images[group.add_idx(h, k)] {
                    return Err(Error::InvalidAction(format!(
                        "phi_{} phi_{} != phi_{}",
                        group.format_element(&group.element(h)),
                        group.format_element(&group.element(k)),
                        group.format_element(&group.element(group.add_idx(h, k)))
                    )));
                }
            }
        }
        Ok(GroupAction {
            algebra: algebra.clone(),
            group,
            images,
        })
    }

    pub fn trivial(algebra: &GradedAlgebra, group: FinAbGroup) -> GroupAction {
        let id = Matrix::identity(algebra.field(), algebra.dim());
        GroupAction {
            algebra: algebra.clone(),
            images: vec![id; group.order()],
            group,
        }
    }

    /// The dual group `Hom(G, F^x)` acting by `e_i -> chi(|e_i|) e_i`.
    pub fn from_grading(algebra: &GradedAlgebra) -> Result<GroupAction> {
        let chars = character_group(algebra.group(), algebra.field())?;
        let images = chars
            .characters
            .iter()
            .map(|chi| grading_automorphism(algebra, chi))
            .collect::<Result<Vec<_>>>()?;
        GroupAction::new(algebra, chars.dual, images)
    }

    pub fn algebra(&self) -> &GradedAlgebra {
        &self.algebra
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn image(&self, h: usize) -> &Matrix {
        &self.images[h]
    }

    pub fn images(&self) -> &[Matrix] {
        &self.images
    }

    pub fn apply(&self, h: usize, x: &[Scalar]) -> Vector {
        self.images[h].apply(x)
    }

    pub fn is_trivial(&self) -> bool {
        let id = Matrix::identity(self.algebra.field(), self.algebra.dim());
        self.images.iter().all(|m| m == &id)
    }

    /// `sigma phi_h sigma^{-1}` for an automorphism `sigma`.
    pub fn conjugated(&self, sigma: &Matrix) -> Result<GroupAction> {
        check_automorphism(&self.algebra, sigma)?;
        let inv = sigma.inverse().expect("automorphisms are invertible");
        let images = self.images.iter().map(|m| sigma.mul(m).mul(&inv)).collect();
        GroupAction::new(&self.algebra, self.group.clone(), images)
    }

    /// The same action on `A^op`.
    pub fn on_opposite(&self) -> GroupAction {
        GroupAction {
            algebra: self.algebra.opposite(),
            group: self.group.clone(),
            images: self.images.clone(),
        }
    }
}

/// `x -> u x u^{-1}` for an invertible `u`.
pub fn inner_automorphism(a: &GradedAlgebra, u: &[Scalar]) -> Result<Matrix> {
    let u_inv = a
        .left_mult_elem(u)
        .solve(a.unit())
        .filter(|v| &a.mul(v, u) == a.unit())
        .ok_or_else(|| Error::NotAutomorphism("element is not invertible".into()))?;
    let m = a.left_mult_elem(u).mul(&a.right_mult_elem(&u_inv));
    check_automorphism(a, &m)?;
    Ok(m)
}
