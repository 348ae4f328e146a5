//! Group-graded algebras given by structure constants.

use std::sync::{Arc, OnceLock};

use super::linalg::{axpy, unit_vec, vec_is_zero, zero_vec, Matrix, Subspace, Vector};
use crate::error::{Error, Result};
use crate::exactmath::{Character, Field, FinAbGroup, Scalar};

/// Sparse product of two basis vectors: list of `(k, c)` with `c != 0`.
pub type SparseVec = Vec<(usize, Scalar)>;

#[derive(Debug)]
struct AlgebraData {
    field: Field,
    group: FinAbGroup,
    names: Vec<String>,
    /// Group element index of each basis vector.
    degrees: Vec<usize>,
    /// `table[i * dim + j]` is `e_i e_j`.
    table: Vec<SparseVec>,
    unit: Vector,
    generators: OnceLock<Vec<usize>>,
}

impl PartialEq for AlgebraData {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.group == other.group
            && self.names == other.names
            && self.degrees == other.degrees
            && self.table == other.table
            && self.unit == other.unit
    }
}

/// A validated finite-dimensional associative unital algebra graded by a
/// finite abelian group. Cheap to clone.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedAlgebra(Arc<AlgebraData>);

/// One structure constant: `e_i e_j` has coefficient `c` on `e_k`.
pub type Triple = (usize, usize, usize, Scalar);

impl GradedAlgebra {
    /// Build and validate. `unit` is solved for when absent.
    pub fn new(
        field: Field,
        group: FinAbGroup,
        names: Vec<String>,
        degrees: Vec<usize>,
        mult: Vec<Triple>,
        unit: Option<Vector>,
    ) -> Result<GradedAlgebra> {
        let d = names.len();
        if degrees.len() != d {
            return Err(Error::DimensionMismatch(format!(
                "{} basis names but {} degrees",
                d,
                degrees.len()
            )));
        }
        if let Some(&bad) = degrees.iter().find(|&&g| g >= group.order()) {
            return Err(Error::DimensionMismatch(format!("degree index {bad} outside {group}")));
        }
        let mut dense: Vec<Vector> = vec![zero_vec(field, d); d * d];
        for (i, j, k, c) in mult {
            if i >= d || j >= d || k >= d {
                return Err(Error::DimensionMismatch(format!(
                    "structure constant ({i},{j},{k}) out of range for dimension {d}"
                )));
            }
            if c.field() != field {
                return Err(Error::InvalidField(format!("scalar {c} not in {}", field.spec())));
            }
            let slot = &mut dense[i * d + j][k];
            *slot = &*slot + &c;
        }
        let table: Vec<SparseVec> = dense.into_iter().map(to_sparse).collect();
        let mut data = AlgebraData {
            field,
            group,
            names,
            degrees,
            table,
            unit: Vec::new(),
            generators: OnceLock::new(),
        };
        check_grading(&data)?;
        data.unit = match unit {
            Some(u) => {
                if u.len() != d {
                    return Err(Error::NoUnit(format!("unit vector has length {}, expected {d}", u.len())));
                }
                u
            }
            None => solve_unit(&data)?,
        };
        check_unit(&data)?;
        check_associative(&data)?;
        Ok(GradedAlgebra(Arc::new(data)))
    }

    pub fn field(&self) -> Field {
        self.0.field
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.0.group
    }

    pub fn dim(&self) -> usize {
        self.0.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0.names[i]
    }

    pub fn index_of_name(&self, name: &str) -> Option<usize> {
        self.0.names.iter().position(|n| n == name)
    }

    pub fn degrees(&self) -> &[usize] {
        &self.0.degrees
    }

    pub fn degree(&self, i: usize) -> usize {
        self.0.degrees[i]
    }

    pub fn unit(&self) -> &Vector {
        &self.0.unit
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        unit_vec(self.field(), self.dim(), i)
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.0.table[i * self.dim() + j]
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        let d = self.dim();
        let mut out = zero_vec(self.field(), d);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in self.basis_product(i, j) {
                    out[*k] = &out[*k] + &(&xy * c);
                }
            }
        }
        out
    }

    /// Matrix of `v -> e_i v` (columns are images of basis vectors).
    pub fn left_mult(&self, i: usize) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zeros(self.field(), d, d);
        for j in 0..d {
            for (k, c) in self.basis_product(i, j) {
                m.set(*k, j, c.clone());
            }
        }
        m
    }

    /// Matrix of `v -> v e_i`.
    pub fn right_mult(&self, i: usize) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zeros(self.field(), d, d);
        for j in 0..d {
            for (k, c) in self.basis_product(j, i) {
                m.set(*k, j, c.clone());
            }
        }
        m
    }

    pub fn left_mult_elem(&self, a: &[Scalar]) -> Matrix {
        combine(self.field(), self.dim(), a, |i| self.left_mult(i))
    }

    pub fn right_mult_elem(&self, a: &[Scalar]) -> Matrix {
        combine(self.field(), self.dim(), a, |i| self.right_mult(i))
    }

    /// Basis indices of degree `g` (a group element index).
    pub fn homogeneous_indices(&self, g: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.degree(i) == g).collect()
    }

    /// Degree of `v` if it is nonzero and homogeneous.
    pub fn homogeneous_degree(&self, v: &[Scalar]) -> Option<usize> {
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

    /// All `(i, j, k, c)` with `c != 0`, in lexicographic order.
    pub fn triples(&self) -> Vec<Triple> {
        let d = self.dim();
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for (k, c) in self.basis_product(i, j) {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    pub fn same_table(&self, other: &GradedAlgebra) -> bool {
        self.dim() == other.dim() && self.0.table == other.0.table
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (0..d).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// A small generating set, chosen greedily in basis order.
    pub fn generators(&self) -> &[usize] {
        self.0.generators.get_or_init(|| {
            let d = self.dim();
            let mut gens: Vec<usize> = Vec::new();
            let mut span = Subspace::from_vectors(self.field(), d, &[self.unit().clone()]);
            for i in 0..d {
                if span.contains(&self.basis_vector(i)) {
                    continue;
                }
                gens.push(i);
                span = self.generated_subalgebra(&gens);
                if span.dim() == d {
                    break;
                }
            }
            gens
        })
    }

    /// Subalgebra generated by the given basis elements and the unit.
    pub fn generated_subalgebra(&self, gens: &[usize]) -> Subspace {
        let d = self.dim();
        let mut span = Subspace::from_vectors(self.field(), d, &[self.unit().clone()]);
        loop {
            let mut vs = span.basis().to_vec();
            for b in span.basis() {
                for &g in gens {
                    vs.push(self.mul(b, &self.basis_vector(g)));
                }
            }
            let next = Subspace::from_vectors(self.field(), d, &vs);
            if next.dim() == span.dim() {
                return span;
            }
            span = next;
        }
    }

    pub fn opposite(&self) -> GradedAlgebra {
        let mult = self
            .triples()
            .into_iter()
            .map(|(i, j, k, c)| (j, i, k, c))
            .collect();
        GradedAlgebra::new(
            self.field(),
            self.group().clone(),
            self.names().to_vec(),
            self.degrees().to_vec(),
            mult,
            Some(self.unit().clone()),
        )
        .expect("opposite of a valid algebra is valid")
    }

    /// `m(a, b) = (-1)^{|a||b|} b a` for a `Z_2`-graded algebra.
    pub fn superopposite(&self) -> Result<GradedAlgebra> {
        require_z2(self)?;
        if self.field().characteristic() == 2 {
            return Err(Error::BadCharacteristic("superopposite needs char != 2".into()));
        }
        let mult = self
            .triples()
            .into_iter()
            .map(|(i, j, k, c)| {
                let sign = self.degree(i) * self.degree(j) % 2 == 1;
                (j, i, k, if sign { -c } else { c })
            })
            .collect();
        GradedAlgebra::new(
            self.field(),
            self.group().clone(),
            self.names().to_vec(),
            self.degrees().to_vec(),
            mult,
            Some(self.unit().clone()),
        )
    }

    /// Same structure constants with a different grading.
    pub fn regraded(&self, group: FinAbGroup, degrees: Vec<usize>) -> Result<GradedAlgebra> {
        GradedAlgebra::new(
            self.field(),
            group,
            self.names().to_vec(),
            degrees,
            self.triples(),
            Some(self.unit().clone()),
        )
    }

    /// The subalgebra spanned by `basis`, which must be closed under the
    /// product and contain the unit. Basis vectors that are all homogeneous
    /// keep their degrees; otherwise the result is trivially graded.
    pub fn subalgebra(&self, basis: &[Vector], prefix: &str) -> Result<GradedAlgebra> {
        let d = self.dim();
        let field = self.field();
        let span = Subspace::from_vectors(field, d, basis);
        if span.dim() != basis.len() {
            return Err(Error::DimensionMismatch("subalgebra basis is linearly dependent".into()));
        }
        let coords = Matrix::from_columns(field, basis, d);
        let mut mult = Vec::new();
        for (i, x) in basis.iter().enumerate() {
            for (j, y) in basis.iter().enumerate() {
                let c = coords.solve(&self.mul(x, y)).ok_or_else(|| {
                    Error::DimensionMismatch(format!("subspace not closed: product of {prefix}{i} and {prefix}{j}"))
                })?;
                mult.extend(
                    c.into_iter()
                        .enumerate()
                        .filter(|(_, s)| !s.is_zero())
                        .map(|(k, s)| (i, j, k, s)),
                );
            }
        }
        let unit = coords
            .solve(self.unit())
            .ok_or_else(|| Error::NoUnit("unit is not in the subspace".into()))?;
        let degrees: Option<Vec<usize>> = basis.iter().map(|v| self.homogeneous_degree(v)).collect();
        let (group, degrees) = match degrees {
            Some(ds) => (self.group().clone(), ds),
            None => (FinAbGroup::trivial(), vec![0; basis.len()]),
        };
        let names = (0..basis.len()).map(|i| format!("{prefix}{i}")).collect();
        GradedAlgebra::new(field, group, names, degrees, mult, Some(unit))
    }

    /// Forget the grading (trivial group, everything in degree 0).
    pub fn ungraded(&self) -> GradedAlgebra {
        self.regraded(FinAbGroup::trivial(), vec![0; self.dim()])
            .expect("trivial grading is always valid")
    }
}

fn combine(field: Field, d: usize, a: &[Scalar], f: impl Fn(usize) -> Matrix) -> Matrix {
    let mut m = Matrix::zeros(field, d, d);
    for (i, x) in a.iter().enumerate() {
        if !x.is_zero() {
            m = m.add(&f(i).scale(x));
        }
    }
    m
}

pub(crate) fn require_z2(a: &GradedAlgebra) -> Result<()> {
    if a.group().factors() != [2] {
        return Err(Error::WrongGroup(format!("expected Z2 grading, found {}", a.group())));
    }
    Ok(())
}

fn to_sparse(v: Vector) -> SparseVec {
    v.into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .collect()
}

fn check_grading(a: &AlgebraData) -> Result<()> {
    let d = a.names.len();
    for i in 0..d {
        for j in 0..d {
            let want = a.group.add_idx(a.degrees[i], a.degrees[j]);
            for (k, _) in &a.table[i * d + j] {
                if a.degrees[*k] != want {
                    return Err(Error::GradingViolation(i, j, *k));
                }
            }
        }
    }
    Ok(())
}

fn sparse_times_vec(a: &AlgebraData, x: &[Scalar], y: &[Scalar]) -> Vector {
    let d = a.names.len();
    let mut out = zero_vec(a.field, d);
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            let c = xi * yj;
            for (k, t) in &a.table[i * d + j] {
                out[*k] = &out[*k] + &(&c * t);
            }
        }
    }
    out
}

fn solve_unit(a: &AlgebraData) -> Result<Vector> {
    let d = a.names.len();
    // Unknown u; equations u e_i = e_i and e_i u = e_i.
    let mut m = Matrix::zeros(a.field, 2 * d * d, d);
    let mut rhs = zero_vec(a.field, 2 * d * d);
    for i in 0..d {
        for k in 0..d {
            for (l, c) in &a.table[k * d + i] {
                let r = i * d + l;
                m.set(r, k, m.get(r, k) + c);
            }
            for (l, c) in &a.table[i * d + k] {
                let r = d * d + i * d + l;
                m.set(r, k, m.get(r, k) + c);
            }
        }
        rhs[i * d + i] = a.field.one();
        rhs[d * d + i * d + i] = a.field.one();
    }
    m.solve(&rhs)
        .ok_or_else(|| Error::NoUnit("no two-sided unit solves u e_i = e_i = e_i u".into()))
}

fn check_unit(a: &AlgebraData) -> Result<()> {
    let d = a.names.len();
    for i in 0..d {
        let e = unit_vec(a.field, d, i);
        if sparse_times_vec(a, &a.unit, &e) != e || sparse_times_vec(a, &e, &a.unit) != e {
            return Err(Error::NoUnit(format!("claimed unit fails on basis element {i}")));
        }
    }
    Ok(())
}

fn check_associative(a: &AlgebraData) -> Result<()> {
    let d = a.names.len();
    for i in 0..d {
        for j in 0..d {
            let ij = &a.table[i * d + j];
            for k in 0..d {
                let mut left = zero_vec(a.field, d);
                for (l, c) in ij {
                    for (m, t) in &a.table[l * d + k] {
                        left[*m] = &left[*m] + &(c * t);
                    }
                }
                let mut right = zero_vec(a.field, d);
                for (l, c) in &a.table[j * d + k] {
                    for (m, t) in &a.table[i * d + l] {
                        right[*m] = &right[*m] + &(c * t);
                    }
                }
                if left != right {
                    return Err(Error::NotAssociative(i, j, k));
                }
            }
        }
    }
    Ok(())
}

/// Outcome of comparing two multiplication tables under a linear map.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct TableCertificate {
    pub source_dim: usize,
    pub target_dim: usize,
    pub bijective: bool,
    pub unit_preserved: bool,
    /// Basis pairs `(i, j)` with `f(e_i e_j) != f(e_i) f(e_j)`.
    pub failures: Vec<(usize, usize)>,
}

impl TableCertificate {
    pub fn is_isomorphism(&self) -> bool {
        self.bijective && self.unit_preserved && self.failures.is_empty()
    }

    pub fn is_homomorphism(&self) -> bool {
        self.unit_preserved && self.failures.is_empty()
    }
}

/// Check the linear map `f` (columns are images of `source` basis vectors)
/// against both full multiplication tables.
pub fn certify_algebra_map(source: &GradedAlgebra, target: &GradedAlgebra, f: &Matrix) -> TableCertificate {
    assert_eq!(f.cols(), source.dim());
    assert_eq!(f.rows(), target.dim());
    let d = source.dim();
    let images = f.columns();
    let mut failures = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let mut lhs = zero_vec(target.field(), target.dim());
            for (k, c) in source.basis_product(i, j) {
                axpy(&mut lhs, c, &images[*k]);
            }
            if lhs != target.mul(&images[i], &images[j]) {
                failures.push((i, j));
            }
        }
    }
    TableCertificate {
        source_dim: source.dim(),
        target_dim: target.dim(),
        bijective: f.is_square() && f.rank() == d,
        unit_preserved: f.apply(source.unit()) == *target.unit(),
        failures,
    }
}

/// Verify that `alpha` (columns = images of basis vectors) is an algebra
/// automorphism.
pub fn check_automorphism(a: &GradedAlgebra, alpha: &Matrix) -> Result<()> {
    if alpha.rows() != a.dim() || alpha.cols() != a.dim() {
        return Err(Error::NotAutomorphism(format!(
            "matrix is {}x{}, algebra has dimension {}",
            alpha.rows(),
            alpha.cols(),
            a.dim()
        )));
    }
    let cert = certify_algebra_map(a, a, alpha);
    if !cert.bijective {
        return Err(Error::NotAutomorphism("map is not invertible".into()));
    }
    if !cert.unit_preserved {
        return Err(Error::NotAutomorphism("unit is not preserved".into()));
    }
    if let Some((i, j)) = cert.failures.first() {
        return Err(Error::NotAutomorphism(format!("not multiplicative on (e{i}, e{j})")));
    }
    Ok(())
}

/// `e_i -> chi(deg e_i) e_i`.
pub fn grading_automorphism(a: &GradedAlgebra, chi: &Character) -> Result<Matrix> {
    if chi.group() != a.group() {
        return Err(Error::WrongGroup(format!(
            "character of {} applied to algebra graded by {}",
            chi.group(),
            a.group()
        )));
    }
    if chi.field() != a.field() {
        return Err(Error::InvalidField(format!(
            "character over {} applied to algebra over {}",
            chi.field().spec(),
            a.field().spec()
        )));
    }
    let diag: Vec<Scalar> = (0..a.dim()).map(|i| chi.eval_idx(a.degree(i)).clone()).collect();
    let m = Matrix::diagonal(a.field(), &diag);
    check_automorphism(a, &m)?;
    Ok(m)
}

/// Is `v` nonzero? Small helper used by report code.
pub fn is_nonzero(v: &[Scalar]) -> bool {
    !vec_is_zero(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::characters;

    pub(crate) fn dual_numbers(field: Field) -> GradedAlgebra {
        GradedAlgebra::new(
            field,
            FinAbGroup::cyclic(2).unwrap(),
            vec!["1".into(), "x".into()],
            vec![0, 1],
            vec![
                (0, 0, 0, field.one()),
                (0, 1, 1, field.one()),
                (1, 0, 1, field.one()),
            ],
            None,
        )
        .unwrap()
    }

    #[test]
    fn dual_numbers_accepted_with_solved_unit() {
        let a = dual_numbers(Field::rationals());
        assert_eq!(a.unit(), &a.basis_vector(0));
        assert!(a.is_commutative());
        assert!(a.opposite().same_table(&a));
    }

    #[test]
    fn grading_violation_names_triple() {
        let f = Field::rationals();
        let bad = GradedAlgebra::new(
            f,
            FinAbGroup::cyclic(2).unwrap(),
            vec!["u".into(), "x".into()],
            vec![1, 0],
            vec![(1, 1, 0, f.one())],
            None,
        );
        assert_eq!(bad.unwrap_err(), Error::GradingViolation(1, 1, 0));
    }

    #[test]
    fn non_associative_table_rejected() {
        let f = Field::rationals();
        // e0 unit, e1 e1 = e2, e1 e2 = 0, e2 e1 = e2 : (e1 e1) e1 = e2 but e1 (e1 e1) = 0
        let r = GradedAlgebra::new(
            f,
            FinAbGroup::trivial(),
            vec!["1".into(), "a".into(), "b".into()],
            vec![0, 0, 0],
            vec![
                (0, 0, 0, f.one()),
                (0, 1, 1, f.one()),
                (1, 0, 1, f.one()),
                (0, 2, 2, f.one()),
                (2, 0, 2, f.one()),
                (1, 1, 2, f.one()),
                (2, 1, 2, f.one()),
            ],
            None,
        );
        assert_eq!(r.unwrap_err(), Error::NotAssociative(1, 1, 1));
    }

    #[test]
    fn missing_unit_rejected() {
        let f = Field::rationals();
        let r = GradedAlgebra::new(
            f,
            FinAbGroup::trivial(),
            vec!["x".into()],
            vec![0],
            vec![],
            None,
        );
        assert!(matches!(r, Err(Error::NoUnit(_))));
    }

    #[test]
    fn chi_one_negates_x() {
        let f = Field::rationals();
        let a = dual_numbers(f);
        let chars = characters(a.group(), f).unwrap();
        let phi = grading_automorphism(&a, &chars[1]).unwrap();
        assert_eq!(phi.get(1, 1), &f.from_i64(-1));
        assert_eq!(phi.get(0, 0), &f.one());
        let id = grading_automorphism(&a, &chars[0]).unwrap();
        assert_eq!(id, Matrix::identity(f, 2));
    }

    #[test]
    fn generators_of_dual_numbers() {
        let a = dual_numbers(Field::rationals());
        assert_eq!(a.generators(), &[1]);
    }
}
