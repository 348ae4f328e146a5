//! Natural transformations `Id => Pi_g` on graded modules and their
//! description by the G-centre.

use serde::Serialize;

use crate::algcore::linalg::{Matrix, Subspace, Vector};
use crate::algcore::{
    algebra_from_matrices, certify_algebra_map, hom_modules, matrix_coordinates, GradedAlgebra, GradedModule,
    ModuleHom, TableCertificate,
};
use crate::centres::{g_centre, pointwise_algebra, GCentre};
use crate::error::{Error, Result};
use crate::exactmath::Scalar;

fn homogeneous(gc: &GCentre, x: &[Scalar]) -> Result<usize> {
    if !gc.contains(x) {
        return Err(Error::NotHomogeneous("element is not in the G-centre".into()));
    }
    gc.homogeneous_degree(x)
        .ok_or_else(|| Error::NotHomogeneous("G-centre element has several degrees".into()))
}

/// `eta_M : M -> Pi_g M`, `v -> x^(-h) v` for `v` in `M_h`.
pub fn nat_from_gcentre(gc: &GCentre, x: &[Scalar], m: &GradedModule) -> Result<ModuleHom> {
    let g = homogeneous(gc, x)?;
    let group = gc.algebra().group();
    let cols: Vec<Vector> = (0..m.dim())
        .map(|c| {
            let xk = gc.value(x, group.neg_idx(m.degree(c)));
            m.act(xk).column(c)
        })
        .collect();
    Ok(ModuleHom {
        source: m.clone(),
        target: m.shifted(g),
        matrix: Matrix::from_columns(gc.algebra().field(), &cols, m.dim()),
        degree: 0,
    })
}

/// `eta_{Pi_k A}` for every `k`, in group order.
pub fn nat_family_on_shifts(gc: &GCentre, x: &[Scalar]) -> Result<Vec<Matrix>> {
    let reg = GradedModule::regular(gc.algebra());
    (0..gc.algebra().group().order())
        .map(|k| Ok(nat_from_gcentre(gc, x, &reg.shifted(k))?.matrix))
        .collect()
}

/// Recover `x` with `x^(k) = eta_{Pi_k A}(1)` from a family of maps
/// `family[k] : Pi_k A -> Pi_g Pi_k A`, after checking that each is
/// `A`-linear of the right degree and that the squares against right
/// multiplication by generators commute.
pub fn gcentre_from_nat(a: &GradedAlgebra, g: usize, family: &[Matrix]) -> Result<Vector> {
    let group = a.group();
    let n = group.order();
    let d = a.dim();
    if family.len() != n {
        return Err(Error::DimensionMismatch(format!("{} maps for a group of order {n}", family.len())));
    }
    if let Some(bad) = family.iter().position(|e| e.rows() != d || e.cols() != d) {
        return Err(Error::DimensionMismatch(format!("map at {bad} is not {d}x{d}")));
    }
    for (k, e) in family.iter().enumerate() {
        for i in 0..d {
            let target = group.add_idx(a.degree(i), g);
            if (0..d).any(|r| !e.get(r, i).is_zero() && a.degree(r) != target) {
                return Err(Error::NotNatural(format!("map at {k} does not have degree {g}")));
            }
        }
        for &j in a.generators() {
            let l = a.left_mult(j);
            if e.mul(&l) != l.mul(e) {
                return Err(Error::NotNatural(format!("map at {k} is not A-linear")));
            }
        }
    }
    for &j in a.generators() {
        let r = a.right_mult(j);
        let l = a.degree(j);
        for k in 0..n {
            if family[group.add_idx(k, l)].mul(&r) != r.mul(&family[k]) {
                return Err(Error::NotNatural(format!(
                    "square against right multiplication by {} fails at {k}",
                    a.name(j)
                )));
            }
        }
    }
    Ok(family.iter().flat_map(|e| e.apply(a.unit())).collect())
}

/// Shifts of the regular module and of the cyclic modules `A e_i` and
/// `A / A e_i` for homogeneous basis elements `e_i`, plus `extra`.
pub fn test_family(a: &GradedAlgebra, extra: &[GradedModule]) -> Result<Vec<GradedModule>> {
    let reg = GradedModule::regular(a);
    let mut base = vec![reg.clone()];
    for i in 0..a.dim() {
        let span = reg.generated_submodule(&[a.basis_vector(i)]);
        if span.dim() == 0 || span.dim() == a.dim() {
            continue;
        }
        let (sub, _) = reg.submodule(span.basis())?;
        let (quo, _) = reg.quotient(span.basis())?;
        for m in [sub, quo] {
            if !base.contains(&m) {
                base.push(m);
            }
        }
    }
    base.extend(extra.iter().cloned());
    let n = a.group().order();
    Ok(base.iter().flat_map(|m| (0..n).map(move |k| m.shifted(k))).collect())
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct NaturalityReport {
    pub squares_checked: usize,
    pub failures: Vec<String>,
}

impl NaturalityReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `eta_{Pi_s N} alpha = alpha eta_M` for every basis hom `alpha : M -> Pi_s N`
/// between members of `family`.
pub fn check_naturality(gc: &GCentre, x: &[Scalar], family: &[GradedModule]) -> Result<NaturalityReport> {
    let group = gc.algebra().group();
    let etas: Vec<Matrix> = family
        .iter()
        .map(|m| Ok(nat_from_gcentre(gc, x, m)?.matrix))
        .collect::<Result<_>>()?;
    let mut report = NaturalityReport::default();
    for (i, m) in family.iter().enumerate() {
        for n in family {
            for s in 0..group.order() {
                let ns = n.shifted(s);
                let eta_n = nat_from_gcentre(gc, x, &ns)?.matrix;
                for alpha in hom_modules(m, n, s)? {
                    report.squares_checked += 1;
                    if eta_n.mul(&alpha.matrix) != alpha.matrix.mul(&etas[i]) {
                        report.failures.push(format!("module {i}, shift {s}"));
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Round trip and multiplication transport on a homogeneous basis of the
/// G-centre. Each basis element `z` becomes `diag(eta_{Pi_k A})_k`, and the
/// algebra these matrices span is compared with `Z^G(A)^op`.
#[derive(Clone, Debug)]
pub struct TransportReport {
    pub basis: Vec<(usize, Vector)>,
    pub round_trip_failures: Vec<usize>,
    pub naturality: NaturalityReport,
    pub certificate: TableCertificate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransportSummary {
    pub g_centre_dim: usize,
    pub round_trip: bool,
    pub squares_checked: usize,
    pub naturality: bool,
    pub opposite_isomorphism: bool,
}

impl TransportReport {
    pub fn summary(&self) -> TransportSummary {
        TransportSummary {
            g_centre_dim: self.basis.len(),
            round_trip: self.round_trip_failures.is_empty(),
            squares_checked: self.naturality.squares_checked,
            naturality: self.naturality.holds(),
            opposite_isomorphism: self.certificate.is_isomorphism(),
        }
    }
}

pub fn multiplication_transport(a: &GradedAlgebra, extra: &[GradedModule]) -> Result<TransportReport> {
    let gc = g_centre(a);
    let field = a.field();
    let basis = gc.homogeneous_basis();
    let family = test_family(a, extra)?;
    let mut round_trip_failures = Vec::new();
    let mut naturality = NaturalityReport::default();
    let mut blocks = Vec::new();
    for (i, (g, z)) in basis.iter().enumerate() {
        let fam = nat_family_on_shifts(&gc, z)?;
        if gcentre_from_nat(a, *g, &fam).ok().as_ref() != Some(z) {
            round_trip_failures.push(i);
        }
        let r = check_naturality(&gc, z, &family)?;
        naturality.squares_checked += r.squares_checked;
        naturality.failures.extend(r.failures.into_iter().map(|f| format!("basis {i}: {f}")));
        blocks.push(Matrix::block_diag(field, &fam));
    }
    let degrees = basis.iter().map(|(g, _)| *g).collect();
    let nat_alg = algebra_from_matrices(field, &blocks, Some((a.group().clone(), degrees)))?;
    let vectors: Vec<Vector> = basis.iter().map(|(_, z)| z.clone()).collect();
    let z_op = gc.ambient().subalgebra(&vectors, "z")?.opposite();
    let certificate = certify_algebra_map(&nat_alg, &z_op, &Matrix::identity(field, basis.len()));
    Ok(TransportReport {
        basis,
        round_trip_failures,
        naturality,
        certificate,
    })
}

/// `⊕_g hom(M, Pi_g M)` under composition, basis grouped by degree.
#[derive(Clone, Debug)]
pub struct EndPi {
    pub algebra: GradedAlgebra,
    pub basis: Vec<ModuleHom>,
}

impl EndPi {
    pub fn matrices(&self) -> Vec<Matrix> {
        self.basis.iter().map(|h| h.matrix.clone()).collect()
    }

    pub fn coordinates(&self, m: &Matrix) -> Option<Vector> {
        matrix_coordinates(&self.matrices(), m)
    }

    pub fn graded_dims(&self) -> Vec<usize> {
        let n = self.algebra.group().order();
        (0..n).map(|g| self.basis.iter().filter(|h| h.degree == g).count()).collect()
    }
}

pub fn end_pi(m: &GradedModule) -> Result<EndPi> {
    let a = m.algebra();
    let mut basis = Vec::new();
    for g in 0..a.group().order() {
        basis.extend(hom_modules(m, m, g)?);
    }
    let mats: Vec<Matrix> = basis.iter().map(|h| h.matrix.clone()).collect();
    let degrees = basis.iter().map(|h| h.degree).collect();
    let algebra = algebra_from_matrices(a.field(), &mats, Some((a.group().clone(), degrees)))?;
    Ok(EndPi { algebra, basis })
}

#[derive(Clone, Debug)]
pub struct EndPiA {
    pub end: EndPi,
    /// `alpha -> alpha(1)` into `A^op`.
    pub map: Matrix,
    pub graded: bool,
    pub certificate: TableCertificate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EndPiSummary {
    pub dim: usize,
    pub graded_dims: Vec<usize>,
    pub graded: bool,
    pub isomorphism_to_opposite: bool,
}

impl EndPiA {
    pub fn summary(&self) -> EndPiSummary {
        EndPiSummary {
            dim: self.end.algebra.dim(),
            graded_dims: self.end.graded_dims(),
            graded: self.graded,
            isomorphism_to_opposite: self.graded && self.certificate.is_isomorphism(),
        }
    }
}

pub fn end_pi_regular(a: &GradedAlgebra) -> Result<EndPiA> {
    let end = end_pi(&GradedModule::regular(a))?;
    let cols: Vec<Vector> = end.basis.iter().map(|h| h.matrix.apply(a.unit())).collect();
    let map = Matrix::from_columns(a.field(), &cols, a.dim());
    let graded = end
        .basis
        .iter()
        .zip(&cols)
        .all(|(h, v)| crate::algcore::linalg::vec_is_zero(v) || a.homogeneous_degree(v) == Some(h.degree));
    let certificate = certify_algebra_map(&end.algebra, &a.opposite(), &map);
    Ok(EndPiA {
        end,
        map,
        graded,
        certificate,
    })
}

/// `x -> {k -> eta_{Pi_k X}}` written in the basis of `Lambda = end_pi(X)`.
#[derive(Clone, Debug)]
pub struct DeltaZeta {
    pub lambda: EndPi,
    /// Homogeneous basis of the G-centre of `A` with images in
    /// `Lambda ⊗ k^G` (index `k * dim Lambda + i`).
    pub images: Vec<(usize, Vector, Vector)>,
    pub in_centre_of_opposite: bool,
    pub multiplicative: bool,
    pub degree_preserved: bool,
    pub intertwines_g_action: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaZetaSummary {
    pub lambda_dim: usize,
    pub g_centre_dim: usize,
    pub image_rank: usize,
    pub in_centre_of_opposite: bool,
    pub multiplicative: bool,
    pub degree_preserved: bool,
    pub intertwines_g_action: bool,
}

impl DeltaZeta {
    pub fn summary(&self) -> DeltaZetaSummary {
        let field = self.lambda.algebra.field();
        let amb = self.images.first().map_or(0, |(_, _, v)| v.len());
        let imgs: Vec<Vector> = self.images.iter().map(|(_, _, v)| v.clone()).collect();
        DeltaZetaSummary {
            lambda_dim: self.lambda.algebra.dim(),
            g_centre_dim: self.images.len(),
            image_rank: Subspace::from_vectors(field, amb, &imgs).dim(),
            in_centre_of_opposite: self.in_centre_of_opposite,
            multiplicative: self.multiplicative,
            degree_preserved: self.degree_preserved,
            intertwines_g_action: self.intertwines_g_action,
        }
    }

    pub fn holds(&self) -> bool {
        self.in_centre_of_opposite && self.multiplicative && self.degree_preserved && self.intertwines_g_action
    }
}

/// `Delta zeta(x)` for any element of the G-centre, by splitting it into
/// homogeneous components.
fn delta_zeta_of(gc: &GCentre, lambda: &EndPi, x_mod: &GradedModule, x: &[Scalar]) -> Result<Vector> {
    let group = gc.algebra().group();
    let field = gc.algebra().field();
    let ld = lambda.algebra.dim();
    let mut out = vec![field.zero(); group.order() * ld];
    for g in 0..group.order() {
        let comp = gc.degree_component(x, g);
        if crate::algcore::linalg::vec_is_zero(&comp) {
            continue;
        }
        for k in 0..group.order() {
            let eta = nat_from_gcentre(gc, &comp, &x_mod.shifted(k))?.matrix;
            let c = lambda
                .coordinates(&eta)
                .ok_or_else(|| Error::DimensionMismatch("eta is not in end_pi(X)".into()))?;
            crate::algcore::linalg::axpy(&mut out[k * ld..(k + 1) * ld], &field.one(), &c);
        }
    }
    Ok(out)
}

pub fn delta_zeta_module(a: &GradedAlgebra, x_mod: &GradedModule) -> Result<DeltaZeta> {
    let gc = g_centre(a);
    let group = a.group();
    let n = group.order();
    let lambda = end_pi(x_mod)?;
    let ld = lambda.algebra.dim();
    let lambda_op = lambda.algebra.opposite();
    let target = g_centre(&lambda_op);
    let pointwise = pointwise_algebra(&lambda.algebra);
    let basis = gc.homogeneous_basis();
    let mut images = Vec::new();
    for (g, z) in &basis {
        images.push((*g, z.clone(), delta_zeta_of(&gc, &lambda, x_mod, z)?));
    }
    let in_centre_of_opposite = images.iter().all(|(_, _, v)| target.contains(v));
    let degree_preserved = images.iter().all(|(g, _, v)| {
        crate::algcore::linalg::vec_is_zero(v) || pointwise.homogeneous_degree(v) == Some(*g)
    });
    let mut multiplicative = true;
    for (_, x, dx) in &images {
        for (_, y, dy) in &images {
            let yx = gc.product(y, x);
            multiplicative &= delta_zeta_of(&gc, &lambda, x_mod, &yx)? == pointwise.mul(dx, dy);
        }
    }
    let mut intertwines_g_action = true;
    for (_, x, dx) in &images {
        for k in 0..n {
            let moved = delta_zeta_of(&gc, &lambda, x_mod, &gc.act(k, x))?;
            let shifted: Vector = (0..n)
                .flat_map(|l| dx[group.add_idx(k, l) * ld..(group.add_idx(k, l) + 1) * ld].to_vec())
                .collect();
            intertwines_g_action &= moved == shifted;
        }
    }
    Ok(DeltaZeta {
        lambda,
        images,
        in_centre_of_opposite,
        multiplicative,
        degree_preserved,
        intertwines_g_action,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{a3, dual_numbers, group_algebra_z2, matrix_superalgebra};
    use crate::exactmath::Field;

    fn q() -> Field {
        Field::rationals()
    }

    #[test]
    fn unit_gives_identity() {
        let a = dual_numbers(q());
        let gc = g_centre(&a);
        let m = GradedModule::regular(&a);
        let eta = nat_from_gcentre(&gc, &gc.unit(), &m).unwrap();
        assert_eq!(eta.matrix, Matrix::identity(q(), 2));
        assert_eq!(eta.target, m);
        let fam = vec![Matrix::identity(q(), 2); 2];
        assert_eq!(gcentre_from_nat(&a, 0, &fam).unwrap(), gc.unit());
    }

    #[test]
    fn anti_type_element_on_dual_numbers() {
        let f = q();
        let a = dual_numbers(f);
        let gc = g_centre(&a);
        // {0 -> x, 1 -> -x}
        let z = vec![f.zero(), f.one(), f.zero(), f.from_i64(-1)];
        assert!(gc.contains(&z));
        let m = GradedModule::regular(&a);
        let eta = nat_from_gcentre(&gc, &z, &m).unwrap();
        // 1 (degree 0) -> x^(0) 1 = x; x (degree 1) -> x^(1) x = 0
        assert_eq!(eta.matrix.column(0), [f.zero(), f.one()]);
        assert_eq!(eta.matrix.column(1), [f.zero(), f.zero()]);
        assert_eq!(eta.target.degrees(), [1, 0]);
    }

    #[test]
    fn corrupted_family_is_not_natural() {
        let f = q();
        let a = dual_numbers(f);
        let gc = g_centre(&a);
        let mut fam = nat_family_on_shifts(&gc, &gc.unit()).unwrap();
        fam[1] = fam[1].neg();
        assert_eq!(gcentre_from_nat(&a, 0, &fam).unwrap_err().name(), "NotNatural");
    }

    #[test]
    fn non_homogeneous_rejected() {
        let f = q();
        let a = dual_numbers(f);
        let gc = g_centre(&a);
        let z = vec![f.one(), f.one(), f.one(), f.from_i64(-1)];
        assert!(gc.contains(&z));
        let err = nat_from_gcentre(&gc, &z, &GradedModule::regular(&a)).unwrap_err();
        assert_eq!(err.name(), "NotHomogeneous");
    }

    #[test]
    fn transport_on_test_algebras() {
        let f = q();
        for a in [dual_numbers(f), group_algebra_z2(f), a3(f, true).algebra().clone(), matrix_superalgebra(f)] {
            let s = multiplication_transport(&a, &[]).unwrap().summary();
            assert!(s.round_trip && s.naturality && s.opposite_isomorphism, "{s:?}");
            assert!(s.squares_checked > 0);
        }
    }

    #[test]
    fn end_pi_of_regular_modules() {
        let f = q();
        let r = end_pi_regular(&dual_numbers(f)).unwrap();
        assert_eq!(r.summary().graded_dims, [1, 1]);
        assert!(r.summary().isomorphism_to_opposite);
        let p = a3(f, true);
        let r = end_pi_regular(p.algebra()).unwrap();
        assert_eq!(r.end.algebra.dim(), 6);
        assert!(r.summary().isomorphism_to_opposite);
    }

    #[test]
    fn end_pi_of_simple() {
        let f = q();
        let a = dual_numbers(f);
        let reg = GradedModule::regular(&a);
        let (simple, _) = reg.quotient(&[a.basis_vector(1)]).unwrap();
        assert_eq!(end_pi(&simple).unwrap().graded_dims(), [1, 0]);
    }

    #[test]
    fn delta_zeta_on_regular_and_sum() {
        let f = q();
        let a = dual_numbers(f);
        let reg = GradedModule::regular(&a);
        let dz = delta_zeta_module(&a, &reg).unwrap();
        assert!(dz.holds());
        // reading each slot back through alpha -> alpha(1) recovers x
        let ev: Vec<Vector> = dz.lambda.matrices().iter().map(|m| m.apply(a.unit())).collect();
        let ev = Matrix::from_columns(f, &ev, 2);
        for (_, z, v) in &dz.images {
            let back: Vector = (0..2).flat_map(|k| ev.apply(&v[k * 2..(k + 1) * 2])).collect();
            assert_eq!(&back, z);
        }
        let x = GradedModule::direct_sum(&a, &[reg.clone(), reg.shifted(1)]);
        let dz = delta_zeta_module(&a, &x).unwrap();
        assert_eq!(dz.lambda.algebra.dim(), 8);
        assert!(dz.holds());
    }
}
