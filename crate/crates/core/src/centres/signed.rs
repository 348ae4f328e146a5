//! Super, anti and ghost centres of `Z_2`-graded algebras and their
//! comparison with the bigraded pieces of the G-centre.

use serde::Serialize;

use super::gcentre::g_centre;
use super::signed_commutant;
use crate::algcore::algebra::require_z2;
use crate::algcore::linalg::Subspace;
use crate::algcore::GradedAlgebra;
use crate::error::{Error, Result};

fn require_super(a: &GradedAlgebra) -> Result<()> {
    require_z2(a)?;
    if a.field().characteristic() == 2 {
        return Err(Error::BadCharacteristic("super and anti centres need char != 2".into()));
    }
    Ok(())
}

/// Homogeneous `x` of parity `p` with `x e_j = (-1)^{(p + twist) |e_j|} e_j x`.
fn signed_part(a: &GradedAlgebra, p: usize, twist: usize) -> Subspace {
    let field = a.field();
    let vars = a.homogeneous_indices(p);
    signed_commutant(a, &vars, |j| {
        ((p + twist) * a.degree(j) % 2 == 1).then(|| -field.one())
    })
}

/// Even and odd parts of the super centre (`twist = 0`) or the anti
/// centre (`twist = 1`).
pub(crate) fn signed_parts(a: &GradedAlgebra, twist: usize) -> Result<[Subspace; 2]> {
    require_super(a)?;
    Ok([signed_part(a, 0, twist), signed_part(a, 1, twist)])
}

/// `x y = (-1)^{|x||y|} y x`.
pub fn super_centre(a: &GradedAlgebra) -> Result<Subspace> {
    let [e, o] = signed_parts(a, 0)?;
    Ok(e.sum(&o))
}

/// `x y = (-1)^{(|x|+1)|y|} y x`.
pub fn anti_centre(a: &GradedAlgebra) -> Result<Subspace> {
    let [e, o] = signed_parts(a, 1)?;
    Ok(e.sum(&o))
}

/// `sZ(A) + aZ(A)` inside `A`.
pub fn ghost_centre(a: &GradedAlgebra) -> Result<Subspace> {
    Ok(super_centre(a)?.sum(&anti_centre(a)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SlotComparison {
    pub slot: String,
    pub sign_condition: String,
    pub g_centre_dim: usize,
    pub sign_dim: usize,
    pub same_subspace: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub slots: Vec<SlotComparison>,
    pub g_centre_dim: usize,
    pub super_dim: usize,
    pub anti_dim: usize,
    pub ghost_dim: usize,
    pub underline_dim: usize,
    pub ghost_equals_underline: bool,
    pub super_closed: bool,
    pub anti_products_in_super: bool,
}

impl DecompositionReport {
    pub fn holds(&self) -> bool {
        self.slots.iter().all(|s| s.same_subspace && s.g_centre_dim == s.sign_dim)
            && self.g_centre_dim == self.super_dim + self.anti_dim
            && self.ghost_equals_underline
            && self.super_closed
            && self.anti_products_in_super
    }
}

/// Compare `sZ = Z^G_{0,chi0} + Z^G_{1,chi1}` and
/// `aZ = Z^G_{0,chi1} + Z^G_{1,chi0}` slot by slot, projecting the pieces
/// of the G-centre to `A` by evaluation at 0.
pub fn bigraded_decomposition_check(a: &GradedAlgebra) -> Result<DecompositionReport> {
    require_super(a)?;
    let field = a.field();
    let d = a.dim();
    let sz = signed_parts(a, 0)?;
    let az = signed_parts(a, 1)?;
    let gc = g_centre(a);
    let pieces = gc.bigraded_pieces()?;
    let project = |s: &Subspace| {
        let vals: Vec<_> = s.basis().iter().map(|b| gc.value(b, 0).to_vec()).collect();
        Subspace::from_vectors(field, d, &vals)
    };
    let piece = |g: usize, c: u64| {
        pieces
            .iter()
            .find(|p| p.degree == g && p.character.exponents() == [c])
            .expect("all four pieces exist for Z2")
    };
    let mut slots = Vec::new();
    for (g, c, side, label) in [
        (0, 0, &sz[0], "super, even"),
        (1, 1, &sz[1], "super, odd"),
        (0, 1, &az[0], "anti, even"),
        (1, 0, &az[1], "anti, odd"),
    ] {
        let p = piece(g, c);
        slots.push(SlotComparison {
            slot: format!("({g}, chi_{c})"),
            sign_condition: label.to_string(),
            g_centre_dim: p.space.dim(),
            sign_dim: side.dim(),
            same_subspace: &project(&p.space) == side,
        });
    }
    let s = sz[0].sum(&sz[1]);
    let an = az[0].sum(&az[1]);
    let ghost = s.sum(&an);
    let underline = gc.underline();
    let super_closed = s.basis().iter().all(|x| s.basis().iter().all(|y| s.contains(&a.mul(x, y))));
    let anti_products_in_super = an.basis().iter().all(|x| an.basis().iter().all(|y| s.contains(&a.mul(x, y))));
    Ok(DecompositionReport {
        slots,
        g_centre_dim: gc.dim(),
        super_dim: s.dim(),
        anti_dim: an.dim(),
        ghost_dim: ghost.dim(),
        underline_dim: underline.dim(),
        ghost_equals_underline: ghost == underline,
        super_closed,
        anti_products_in_super,
    })
}
