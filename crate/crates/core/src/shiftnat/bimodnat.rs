//! Natural transformations `X ⊗_A - => Y ⊗_A -` given by bimodule maps,
//! their evaluations and certificates.

use serde::Serialize;

use super::pinat::{check_naturality, nat_from_gcentre, NaturalityReport};
use crate::algcore::linalg::{Matrix, Vector};
use crate::algcore::{
    bimodule_map_on_tensor, hom_bimodules, hom_ungraded, tensor_map, tensor_over_a, Bimodule, GradedModule, ModuleHom,
    TensorProduct,
};
use crate::centres::GCentre;
use crate::error::{Error, Result};

/// Basis of `Hom_{A-A}(X, Y)`, which is `Nat(X ⊗ -, Y ⊗ -)` when `X` is
/// projective as a right module.
pub fn bimodule_nat(x: &Bimodule, y: &Bimodule) -> Result<Vec<Matrix>> {
    if !x.is_right_projective() {
        return Err(Error::RightModuleNotProjective(
            "source bimodule is not projective as a right module".into(),
        ));
    }
    hom_bimodules(x, y)
}

/// A natural transformation given by finite data.
#[derive(Clone, Debug)]
pub enum NatRepresentation {
    /// `Id => Pi_g` from a homogeneous element of the G-centre.
    GCentre { centre: GCentre, element: Vector },
    /// `X ⊗ - => Y ⊗ -` from a bimodule map.
    Bimodule { source: Bimodule, target: Bimodule, map: Matrix },
}

/// `eta_M` for the bimodule case, with both tensor products precomputed.
fn eval_on(tx: &TensorProduct, ty: &TensorProduct, phi: &Matrix, m: &GradedModule) -> Matrix {
    bimodule_map_on_tensor(tx, ty, phi, m.dim())
}

pub fn eval_nat(eta: &NatRepresentation, m: &GradedModule) -> Result<ModuleHom> {
    match eta {
        NatRepresentation::GCentre { centre, element } => nat_from_gcentre(centre, element, m),
        NatRepresentation::Bimodule { source, target, map } => {
            let tx = tensor_over_a(source, m)?;
            let ty = tensor_over_a(target, m)?;
            Ok(ModuleHom {
                matrix: eval_on(&tx, &ty, map, m),
                source: tx.module,
                target: ty.module,
                degree: 0,
            })
        }
    }
}

/// `eta_N (1 ⊗ alpha) = (1 ⊗ alpha) eta_M` for all `alpha : M -> N` in a
/// basis of homs between members of `family`.
pub fn check_bimodule_naturality(
    x: &Bimodule,
    y: &Bimodule,
    phi: &Matrix,
    family: &[GradedModule],
) -> Result<NaturalityReport> {
    let tensors: Vec<(TensorProduct, TensorProduct)> = family
        .iter()
        .map(|m| Ok((tensor_over_a(x, m)?, tensor_over_a(y, m)?)))
        .collect::<Result<_>>()?;
    let etas: Vec<Matrix> = family
        .iter()
        .zip(&tensors)
        .map(|(m, (tx, ty))| eval_on(tx, ty, phi, m))
        .collect();
    let mut report = NaturalityReport::default();
    for (i, m) in family.iter().enumerate() {
        for (j, n) in family.iter().enumerate() {
            for alpha in hom_ungraded(m, n)? {
                report.squares_checked += 1;
                let ax = tensor_map(x.dim(), &tensors[i].0, &tensors[j].0, &alpha);
                let ay = tensor_map(y.dim(), &tensors[i].1, &tensors[j].1, &alpha);
                if etas[j].mul(&ax) != ay.mul(&etas[i]) {
                    report.failures.push(format!("modules {i} -> {j}"));
                }
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvaluationReport {
    pub nat_dim: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub kernel_dim: usize,
}

impl EvaluationReport {
    pub fn injective(&self) -> bool {
        self.kernel_dim == 0
    }
}

/// The linear map `Nat(X ⊗ -, Y ⊗ -) -> Hom(X ⊗ M, Y ⊗ M)`, `eta -> eta_M`.
pub fn evaluation_map(x: &Bimodule, y: &Bimodule, m: &GradedModule) -> Result<EvaluationReport> {
    let nat = bimodule_nat(x, y)?;
    let tx = tensor_over_a(x, m)?;
    let ty = tensor_over_a(y, m)?;
    let field = x.left_algebra().field();
    let cols: Vec<Vector> = nat.iter().map(|phi| eval_on(&tx, &ty, phi, m).flatten().to_vec()).collect();
    let (sd, td) = (tx.module.dim(), ty.module.dim());
    let rank = Matrix::from_columns(field, &cols, sd * td).rank();
    Ok(EvaluationReport {
        nat_dim: nat.len(),
        source_dim: sd,
        target_dim: td,
        rank,
        kernel_dim: nat.len() - rank,
    })
}

/// Serializable record of a natural transformation and the squares that
/// were verified for it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NatCertificate {
    pub kind: String,
    pub shift: String,
    pub data: Vec<Vec<String>>,
    pub squares_checked: usize,
    pub squares_failed: usize,
}

fn strings(v: &[crate::exactmath::Scalar]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

impl NatCertificate {
    pub fn certify(eta: &NatRepresentation, family: &[GradedModule]) -> Result<NatCertificate> {
        match eta {
            NatRepresentation::GCentre { centre, element } => {
                let group = centre.algebra().group();
                let g = centre
                    .homogeneous_degree(element)
                    .ok_or_else(|| Error::NotHomogeneous("G-centre element has several degrees".into()))?;
                let r = check_naturality(centre, element, family)?;
                let data = (0..group.order()).map(|k| strings(centre.value(element, k))).collect();
                Ok(NatCertificate {
                    kind: "g-centre".into(),
                    shift: group.format_element(&group.element(g)),
                    data,
                    squares_checked: r.squares_checked,
                    squares_failed: r.failures.len(),
                })
            }
            NatRepresentation::Bimodule { source, target, map } => {
                let r = check_bimodule_naturality(source, target, map, family)?;
                let data = (0..map.rows()).map(|i| strings(map.row(i))).collect();
                Ok(NatCertificate {
                    kind: "bimodule".into(),
                    shift: "0".into(),
                    data,
                    squares_checked: r.squares_checked,
                    squares_failed: r.failures.len(),
                })
            }
        }
    }
}
