//! Dense matrices over a scalar field.
//!
//! Group elements are small (2x2 or 3x3) and symmetric powers stay under
//! a few hundred rows, so everything is dense and allocation-happy.

use crate::algebra::poly::Polynomial;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A dense row-major matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(rows * cols, data.len());
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|row| row.len()).unwrap_or(0);
        assert!(rows.iter().all(|row| row.len() == c));
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
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

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].conjugate();
            }
        }
        out
    }

    pub fn trace(&self) -> T {
        assert!(self.is_square());
        let mut acc = T::zero();
        for i in 0..self.rows {
            acc = acc + self[(i, i)].clone();
        }
        acc
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| x.clone() * s.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(other.data.iter())
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(other.data.iter())
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a.clone() * b.clone();
                    let cur = std::mem::replace(&mut out[(i, j)], T::zero());
                    out[(i, j)] = cur + prod;
                }
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert!(self.is_square());
        let mut result = Self::identity(self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        result
    }

    /// `A A^dagger == I`, exactly.
    pub fn is_unitary(&self) -> bool {
        self.is_square() && self.mul(&self.dagger()) == Self::identity(self.rows)
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(blocks: &[&Matrix<T>]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let m: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(n, m);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out[(r0 + i, c0 + j)] = b[(i, j)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// `det(I - A*lambda)` as a polynomial in `lambda`.
    ///
    /// Computed with the Faddeev–LeVerrier recurrence, which divides only
    /// by integers and therefore never pivots on symbolic entries. The
    /// result equals the reversed characteristic polynomial of `A`.
    pub fn det_one_minus_lambda(&self) -> Result<Polynomial<T>> {
        if !self.is_square() {
            return Err(Error::NonSquareMatrix {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut coeffs = Vec::with_capacity(n + 1);
        coeffs.push(T::one());
        let mut m = Self::identity(n);
        for k in 1..=n {
            m = self.mul(&m);
            let c = (-m.trace()).div_int(k as i64);
            for i in 0..n {
                let cur = std::mem::replace(&mut m[(i, i)], T::zero());
                m[(i, i)] = cur + c.clone();
            }
            coeffs.push(c);
        }
        Ok(Polynomial::new(coeffs))
    }

    /// Inverse via Gauss–Jordan elimination (field scalars).
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[(r, col)].is_zero())?;
            if pivot != col {
                for j in 0..n {
                    let tmp = a[(pivot, j)].clone();
                    a[(pivot, j)] = a[(col, j)].clone();
                    a[(col, j)] = tmp;
                    let tmp = inv[(pivot, j)].clone();
                    inv[(pivot, j)] = inv[(col, j)].clone();
                    inv[(col, j)] = tmp;
                }
            }
            let scale = a[(col, col)].try_inv()?;
            for j in 0..n {
                a[(col, j)] = a[(col, j)].clone() * scale.clone();
                inv[(col, j)] = inv[(col, j)].clone() * scale.clone();
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for j in 0..n {
                    let d = f.clone() * a[(col, j)].clone();
                    a[(r, j)] = a[(r, j)].clone() - d;
                    let d = f.clone() * inv[(col, j)].clone();
                    inv[(r, j)] = inv[(r, j)].clone() - d;
                }
            }
        }
        Some(inv)
    }

    /// Rank over the scalar field, by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        let mut row = 0;
        for col in 0..a.cols {
            let pivot = (row..a.rows).find(|&r| !a[(r, col)].is_zero());
            let Some(p) = pivot else { continue };
            if p != row {
                for j in 0..a.cols {
                    let tmp = a[(p, j)].clone();
                    a[(p, j)] = a[(row, j)].clone();
                    a[(row, j)] = tmp;
                }
            }
            let inv = a[(row, col)].try_inv().expect("nonzero pivot");
            for j in 0..a.cols {
                a[(row, j)] = a[(row, j)].clone() * inv.clone();
            }
            for r in 0..a.rows {
                if r == row || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for j in 0..a.cols {
                    let d = f.clone() * a[(row, j)].clone();
                    a[(r, j)] = a[(r, j)].clone() - d;
                }
            }
            rank += 1;
            row += 1;
            if row == a.rows {
                break;
            }
        }
        rank
    }

    /// Apply to a column vector.
    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for j in 0..self.cols {
                    if !self[(i, j)].is_zero() && !v[j].is_zero() {
                        acc = acc + self[(i, j)].clone() * v[j].clone();
                    }
                }
                acc
            })
            .collect()
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Scalar> std::fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| format!("{}", self[(i, j)])).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::cyclotomic::Cyclotomic;

    fn z(order: u32, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(order, k)
    }

    #[test]
    fn det_identity() {
        let m: Matrix<Cyclotomic> = Matrix::identity(2);
        let p = m.det_one_minus_lambda().unwrap();
        // (1 - lambda)^2 = 1 - 2 lambda + lambda^2
        assert_eq!(
            p.coeffs(),
            &[
                Cyclotomic::from_int(1),
                Cyclotomic::from_int(-2),
                Cyclotomic::from_int(1)
            ]
        );
    }

    #[test]
    fn det_minus_identity() {
        let m: Matrix<Cyclotomic> = Matrix::identity(2).neg();
        let p = m.det_one_minus_lambda().unwrap();
        // (1 + lambda)^2
        assert_eq!(
            p.coeffs(),
            &[
                Cyclotomic::from_int(1),
                Cyclotomic::from_int(2),
                Cyclotomic::from_int(1)
            ]
        );
    }

    #[test]
    fn det_zeta3_diagonal() {
        // diag(z3, z3^-1): cofactor expansion gives 1 + lambda + lambda^2
        let m = Matrix::from_rows(vec![
            vec![z(3, 1), Cyclotomic::zero()],
            vec![Cyclotomic::zero(), z(3, 2)],
        ]);
        let p = m.det_one_minus_lambda().unwrap();
        assert_eq!(
            p.coeffs(),
            &[
                Cyclotomic::from_int(1),
                Cyclotomic::from_int(1),
                Cyclotomic::from_int(1)
            ]
        );
    }

    #[test]
    fn det_rejects_non_square() {
        let m: Matrix<Cyclotomic> = Matrix::zeros(2, 3);
        assert!(m.det_one_minus_lambda().is_err());
    }

    #[test]
    fn unitary_check() {
        let u = Matrix::from_rows(vec![
            vec![Cyclotomic::zero(), -z(4, 1)],
            vec![-z(4, 1), Cyclotomic::zero()],
        ]);
        assert!(u.is_unitary());
        let not_u = Matrix::from_rows(vec![
            vec![Cyclotomic::from_int(2), Cyclotomic::zero()],
            vec![Cyclotomic::zero(), Cyclotomic::from_int(1)],
        ]);
        assert!(!not_u.is_unitary());
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_rows(vec![
            vec![Cyclotomic::from_int(1), z(8, 1)],
            vec![Cyclotomic::zero(), Cyclotomic::from_int(2)],
        ]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
    }
}
