//! Dense exact linear algebra: matrices, reduced row echelon form,
//! nullspaces and canonical subspaces.

use std::fmt;

use crate::exactmath::{Field, Scalar};

pub type Vector = Vec<Scalar>;

pub fn zero_vec(field: Field, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn unit_vec(field: Field, n: usize, i: usize) -> Vector {
    let mut v = zero_vec(field, n);
    v[i] = field.one();
    v
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(c: &Scalar, a: &[Scalar]) -> Vector {
    a.iter().map(|x| c * x).collect()
}

pub fn vec_is_zero(a: &[Scalar]) -> bool {
    a.iter().all(Scalar::is_zero)
}

/// `acc += c * v`, skipping zero entries.
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = &*a + &(c * x);
        }
    }
}

/// In-place Gauss-Jordan elimination over the first `ncols` columns.
/// Zero rows are dropped; returns pivot columns, one per remaining row.
pub fn rref(rows: &mut Vec<Vector>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        if !inv.is_one() {
            for x in rows[r].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let support: Vec<usize> = (c..rows[r].len()).filter(|&k| !rows[r][k].is_zero()).collect();
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for &k in &support {
                row[k] = &row[k] - &(&f * &pivot_row[k]);
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn diagonal(field: Field, diag: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(field, diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vector>, cols: usize) -> Matrix {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            data.extend(row);
        }
        Matrix {
            rows: nrows,
            cols,
            field,
            data,
        }
    }

    pub fn from_columns(field: Field, columns: &[Vector], rows: usize) -> Matrix {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column has wrong length");
            for (r, x) in col.iter().enumerate() {
                m.set(r, c, x.clone());
            }
        }
        m
    }

    /// Rebuild a matrix from its row-major flattening.
    pub fn from_flat(field: Field, rows: usize, cols: usize, data: Vector) -> Matrix {
        assert_eq!(data.len(), rows * cols);
        Matrix {
            rows,
            cols,
            field,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn flatten(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        vec_is_zero(&self.data)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] = &out.data[idx] + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "dimension mismatch in apply");
        let mut out = zero_vec(self.field, self.rows);
        for (k, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, k);
                if !a.is_zero() {
                    *o = &*o + &(a * x);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: vec_add(&self.data, &other.data),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: vec_sub(&self.data, &other.data),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: vec_scale(c, &self.data),
        }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&-self.field.one())
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    /// Kronecker product: `(A ⊗ B)[(i,k),(j,l)] = A[i,j] B[k,l]`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * other.rows + k, j * other.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn block_diag(field: Field, blocks: &[Matrix]) -> Matrix {
        let rows = blocks.iter().map(Matrix::rows).sum();
        let cols = blocks.iter().map(Matrix::cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c).clone());
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut out = Matrix::zeros(self.field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                out.set(r, c, self.get(r0 + r, c0 + c).clone());
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut rows: Vec<Vector> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        rref(&mut rows, self.cols).len()
    }

    /// Canonical basis of `{v : M v = 0}`: one vector per free column,
    /// in increasing column order.
    pub fn kernel(&self) -> Vec<Vector> {
        let mut rows: Vec<Vector> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        nullspace_of_rows(self.field, &mut rows, self.cols)
    }

    pub fn image(&self) -> Subspace {
        Subspace::from_vectors(self.field, self.rows, &self.columns())
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut rows: Vec<Vector> = (0..n)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.extend(unit_vec(self.field, n, r));
                row
            })
            .collect();
        let pivots = rref(&mut rows, n);
        if pivots.len() != n {
            return None;
        }
        Some(Matrix::from_rows(
            self.field,
            rows.into_iter().map(|r| r[n..].to_vec()).collect(),
            n,
        ))
    }

    pub fn determinant(&self) -> Scalar {
        assert!(self.is_square());
        let n = self.rows;
        let mut rows: Vec<Vector> = (0..n).map(|r| self.row(r).to_vec()).collect();
        let mut det = self.field.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !rows[i][c].is_zero()) else {
                return self.field.zero();
            };
            if p != c {
                rows.swap(p, c);
                det = -det;
            }
            det = &det * &rows[c][c];
            let inv = rows[c][c].inv().expect("nonzero pivot");
            for i in c + 1..n {
                if rows[i][c].is_zero() {
                    continue;
                }
                let f = &rows[i][c] * &inv;
                for k in c..n {
                    let sub = &f * &rows[c][k];
                    rows[i][k] = &rows[i][k] - &sub;
                }
            }
        }
        det
    }

    /// Some `x` with `M x = b`, if one exists.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vector> {
        assert_eq!(b.len(), self.rows);
        let mut rows: Vec<Vector> = (0..self.rows)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.push(b[r].clone());
                row
            })
            .collect();
        let pivots = rref(&mut rows, self.cols + 1);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = zero_vec(self.field, self.cols);
        for (row, &p) in rows.iter().zip(&pivots) {
            x[p] = row[self.cols].clone();
        }
        Some(x)
    }
}

pub(crate) fn nullspace_of_rows(field: Field, rows: &mut Vec<Vector>, ncols: usize) -> Vec<Vector> {
    let pivots = rref(rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for f in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = zero_vec(field, ncols);
        v[f] = field.one();
        for (row, &p) in rows.iter().zip(&pivots) {
            if !row[f].is_zero() {
                v[p] = -&row[f];
            }
        }
        basis.push(v);
    }
    basis
}

/// Homogeneous linear equations in `nvars` unknowns, built row by row.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    field: Field,
    nvars: usize,
    rows: Vec<Vector>,
}

impl LinearSystem {
    pub fn new(field: Field, nvars: usize) -> LinearSystem {
        LinearSystem {
            field,
            nvars,
            rows: Vec::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn push(&mut self, row: Vector) {
        assert_eq!(row.len(), self.nvars);
        if !vec_is_zero(&row) {
            self.rows.push(row);
        }
    }

    pub fn push_sparse(&mut self, entries: &[(usize, Scalar)]) {
        let mut row = zero_vec(self.field, self.nvars);
        for (i, c) in entries {
            row[*i] = &row[*i] + c;
        }
        self.push(row);
    }

    /// One equation per row of `m` (which must have `nvars` columns).
    pub fn push_matrix_rows(&mut self, m: &Matrix) {
        for r in 0..m.rows() {
            self.push(m.row(r).to_vec());
        }
    }

    /// Reduce accumulated rows; keeps memory bounded for long builds.
    pub fn compact(&mut self) {
        rref(&mut self.rows, self.nvars);
    }

    pub fn nullspace(mut self) -> Vec<Vector> {
        nullspace_of_rows(self.field, &mut self.rows, self.nvars)
    }

    pub fn rank(mut self) -> usize {
        rref(&mut self.rows, self.nvars).len()
    }
}

/// A subspace of `F^n` stored by its reduced row echelon basis, so that
/// equal subspaces have identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace {
            field,
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace::from_vectors(
            field,
            ambient,
            &(0..ambient).map(|i| unit_vec(field, ambient, i)).collect::<Vec<_>>(),
        )
    }

    pub fn from_vectors(field: Field, ambient: usize, vectors: &[Vector]) -> Subspace {
        let mut rows: Vec<Vector> = vectors
            .iter()
            .filter(|v| !vec_is_zero(v))
            .cloned()
            .collect();
        for r in &rows {
            assert_eq!(r.len(), ambient, "vector has wrong length");
        }
        let pivots = rref(&mut rows, ambient);
        Subspace {
            field,
            ambient,
            basis: rows,
            pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        assert_eq!(v.len(), self.ambient);
        let coords: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rest = v.to_vec();
        for (c, b) in coords.iter().zip(&self.basis) {
            if !c.is_zero() {
                axpy(&mut rest, &-c, b);
            }
        }
        if vec_is_zero(&rest) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Subspace::from_vectors(self.field, self.ambient, &vs)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // Solve sum a_i u_i = sum b_j w_j.
        let n = self.dim() + other.dim();
        let mut sys = LinearSystem::new(self.field, n);
        for k in 0..self.ambient {
            let mut row = Vec::with_capacity(n);
            row.extend(self.basis.iter().map(|u| u[k].clone()));
            row.extend(other.basis.iter().map(|w| -&w[k]));
            sys.push(row);
        }
        let vecs: Vec<Vector> = sys
            .nullspace()
            .iter()
            .map(|sol| {
                let mut v = zero_vec(self.field, self.ambient);
                for (a, u) in sol.iter().zip(&self.basis) {
                    axpy(&mut v, a, u);
                }
                v
            })
            .collect();
        Subspace::from_vectors(self.field, self.ambient, &vecs)
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rationals()
    }

    fn m(rows: &[&[i64]]) -> Matrix {
        let cols = rows[0].len();
        Matrix::from_rows(
            q(),
            rows.iter()
                .map(|r| r.iter().map(|&x| q().from_i64(x)).collect())
                .collect(),
            cols,
        )
    }

    #[test]
    fn kernel_of_rank_one() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = a.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(vec_is_zero(&a.apply(v)));
        }
        assert_eq!(a.rank(), 1);
    }

    #[test]
    fn inverse_and_determinant() {
        let a = m(&[&[2, 1], &[7, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(q(), 2));
        assert_eq!(a.determinant(), q().one());
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn subspace_representation_is_canonical() {
        let v1 = vec![q().from_i64(1), q().from_i64(1), q().zero()];
        let v2 = vec![q().zero(), q().from_i64(1), q().from_i64(1)];
        let s = Subspace::from_vectors(q(), 3, &[v1.clone(), v2.clone()]);
        let t = Subspace::from_vectors(q(), 3, &[vec_add(&v1, &v2), v2.clone()]);
        assert_eq!(s, t);
        assert!(s.contains(&vec_sub(&v1, &v2)));
        let i = s.intersection(&Subspace::from_vectors(q(), 3, &[unit_vec(q(), 3, 0), unit_vec(q(), 3, 2)]));
        assert_eq!(i.dim(), 1);
    }

    #[test]
    fn solve_detects_inconsistency() {
        let a = m(&[&[1, 1], &[1, 1]]);
        assert!(a.solve(&[q().one(), q().zero()]).is_none());
        let x = a.solve(&[q().one(), q().one()]).unwrap();
        assert_eq!(a.apply(&x), vec![q().one(), q().one()]);
    }
}
