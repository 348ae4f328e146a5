//! Grading shifts `Pi_g`, with `(Pi_g V)_h = V_{h+g}`.

use crate::algcore::{GradedModule, ModuleHom};

/// `Pi_g M`: the same matrices with every degree `k` relabelled `k - g`.
/// Strict: `shift(shift(M, g), h) == shift(M, g + h)` and `shift(M, 0) == M`.
pub fn shift(m: &GradedModule, g: usize) -> GradedModule {
    m.shifted(g)
}

/// `Pi_g(f)`: the same matrix between the shifted modules.
pub fn shift_hom(f: &ModuleHom, g: usize) -> ModuleHom {
    ModuleHom {
        source: f.source.shifted(g),
        target: f.target.shifted(g),
        matrix: f.matrix.clone(),
        degree: f.degree,
    }
}
