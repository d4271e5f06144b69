//! Dense matrices and subspaces over an exact field.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use crate::field::Field;

/// Row-major dense matrix. Columns are read as images of basis vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Clone> Matrix<F> {
    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> F) -> Self {
        let data = (0..rows).flat_map(|i| (0..cols).map(move |j| (i, j))).map(|(i, j)| f(i, j)).collect();
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<F>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.iter().flatten().cloned().collect() }
    }

    /// Matrix whose `j`-th column is `cols[j]`.
    pub fn from_cols(dim: usize, cols: &[Vec<F>]) -> Self {
        Self::from_fn(dim, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> Vec<F> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<F>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<G>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let rows: Vec<Vec<F>> = rows.iter().map(|r| r.iter().map(|&x| F::from_i64(x)).collect()).collect();
        Self::from_rows(&rows)
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let row = &self.data[i * self.cols..(i + 1) * self.cols];
                row.iter().zip(v).filter(|(a, b)| !a.is_zero() && !b.is_zero()).fold(F::zero(), |acc, (a, b)| {
                    acc + a.clone() * b.clone()
                })
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() - b.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &F) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.clone() * c.clone()).collect() }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Field::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    /// Column block `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        })
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else { continue };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().expect("nonzero pivot");
            for j in c..m.cols {
                m[(r, j)] = m[(r, j)].clone() * inv.clone();
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in c..m.cols {
                        let t = m[(r, j)].clone() * f.clone();
                        m[(i, j)] = m[(i, j)].clone() - t;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{x : self·x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(row, f)].clone();
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let (r, pivots) = self.hstack(&Self::identity(n)).rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
    }

    pub fn det(&self) -> F {
        assert!(self.is_square());
        let mut m = self.clone();
        let mut det = F::one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m[(i, c)].is_zero()) else { return F::zero() };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pv = m[(c, c)].clone();
            det = det * pv.clone();
            let inv = pv.inv().expect("nonzero pivot");
            for i in c + 1..m.rows {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone() * inv.clone();
                for j in c..m.cols {
                    let t = m[(c, j)].clone() * f.clone();
                    m[(i, j)] = m[(i, j)].clone() - t;
                }
            }
        }
        det
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<F> Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F> IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Field> Mul for &Matrix<F> {
    type Output = Matrix<F>;
    fn mul(self, o: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let mut out = Matrix::<F>::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// A subspace of `F^dim`, stored as a row-reduced basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace<F> {
    dim: usize,
    basis: Vec<Vec<F>>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(dim: usize) -> Self {
        Subspace { dim, basis: Vec::new() }
    }

    pub fn whole(dim: usize) -> Self {
        Self::span(dim, &Matrix::<F>::identity(dim).columns())
    }

    pub fn span(dim: usize, vectors: &[Vec<F>]) -> Self {
        if vectors.is_empty() {
            return Self::zero(dim);
        }
        let (r, pivots) = Matrix::from_rows(vectors).rref();
        Subspace { dim, basis: (0..pivots.len()).map(|i| r.row(i)).collect() }
    }

    pub fn ambient(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    pub fn contains(&self, v: &[F]) -> bool {
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        Matrix::from_rows(&rows).rank() == self.basis.len()
    }

    pub fn contains_space(&self, other: &Self) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Self::span(self.dim, &rows)
    }

    pub fn intersect(&self, other: &Self) -> Self {
        if self.basis.is_empty() || other.basis.is_empty() {
            return Self::zero(self.dim);
        }
        let k = self.basis.len();
        let mut cols = self.basis.clone();
        cols.extend(other.basis.iter().map(|v| v.iter().map(|x| -x.clone()).collect()));
        let m = Matrix::from_cols(self.dim, &cols);
        let vecs: Vec<Vec<F>> = m
            .kernel()
            .into_iter()
            .map(|coeffs| {
                (0..self.dim)
                    .map(|i| {
                        (0..k).fold(F::zero(), |acc, j| acc + coeffs[j].clone() * self.basis[j][i].clone())
                    })
                    .collect()
            })
            .collect();
        Self::span(self.dim, &vecs)
    }

    pub fn image(&self, m: &Matrix<F>) -> Self {
        let v: Vec<Vec<F>> = self.basis.iter().map(|b| m.apply(b)).collect();
        Self::span(self.dim, &v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Rational, F3};

    fn q(rows: &[Vec<i64>]) -> Matrix<Rational> {
        Matrix::from_i64(rows)
    }

    #[test]
    fn rank_and_kernel() {
        let m = q(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert!(m.apply(&k[0]).iter().all(Field::is_zero));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = q(&[vec![2, 1], vec![1, 1]]);
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
        assert!(q(&[vec![1, 2], vec![2, 4]]).inverse().is_none());
        assert_eq!(m.det(), Rational::from_i64(1));
    }

    #[test]
    fn intersection_dimension() {
        let e = |i: usize| {
            let mut v = vec![F3::zero(); 4];
            v[i] = F3::one();
            v
        };
        let a = Subspace::span(4, &[e(0), e(1)]);
        let b = Subspace::span(4, &[e(1), e(2)]);
        assert_eq!(a.intersect(&b).dim(), 1);
        assert_eq!(a.sum(&b).dim(), 3);
        assert!(a.intersect(&b).contains(&e(1)));
    }
}
