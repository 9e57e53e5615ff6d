//! Dense matrices over exact rationals.
//!
//! Sizes here are tiny (the geometry lives in dimension ≤ 6 bivector space),
//! so the representation is a flat row-major `Vec` and the algorithms favour
//! clarity: Gaussian elimination with pivoting for determinants and
//! inverses, and the Faddeev–LeVerrier trace recurrence for characteristic
//! polynomials. The recurrence costs a handful of matrix products and stays
//! exact because every division it performs is by a small integer.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::rational::Rational;

/// Row-major matrix of [`Rational`] entries.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    /// Builds a matrix from row-major entries; `entries.len()` must equal
    /// `rows * cols` and both sizes must be positive.
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self, Error> {
        if rows == 0 || cols == 0 {
            return Err(Error::Shape("matrix dimensions must be positive".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from rows; all rows must have equal positive length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, Error> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Shape("rows have unequal lengths".into()));
        }
        Matrix::new(nrows, ncols, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor from integer rows, mostly for tables and tests.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| Rational::int(n)).collect())
                .collect(),
        )
        .expect("integer rows form a rectangular matrix")
    }

    /// Parses a matrix from rows of rational literals like `"7/16"`.
    pub fn from_str_rows(rows: &[Vec<String>]) -> Result<Self, Error> {
        let mut parsed = Vec::with_capacity(rows.len());
        for row in rows {
            parsed.push(
                row.iter()
                    .map(|s| Rational::from_str(s))
                    .collect::<Result<Vec<_>, _>>()?,
            );
        }
        Matrix::from_rows(parsed)
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

    pub fn at(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.at(i, j).clone());
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| (0..i).all(|j| self.at(i, j) == self.at(j, i)))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    /// Exact matrix product; the inner dimensions must agree.
    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix, Error> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let term = a * rhs.at(k, j);
                    out.set(i, j, out.at(i, j) + term);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix, Error> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::Shape(format!(
                "cannot add {}x{} to {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix, Error> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, factor: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a * factor).collect(),
        }
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Rational]) -> Result<Vec<Rational>, Error> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!(
                "cannot apply {}x{} matrix to a vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = vec![Rational::zero(); self.rows];
        for (i, slot) in out.iter_mut().enumerate() {
            for (j, vj) in v.iter().enumerate() {
                if !vj.is_zero() {
                    *slot += self.at(i, j) * vj;
                }
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> Result<Rational, Error> {
        if !self.is_square() {
            return Err(Error::Shape("trace of a non-square matrix".into()));
        }
        Ok((0..self.rows).map(|i| self.at(i, i).clone()).sum())
    }

    /// Exact determinant via Gaussian elimination with pivoting.
    pub fn det(&self) -> Result<Rational, Error> {
        if !self.is_square() {
            return Err(Error::Shape("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut work = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let pivot_row = match (col..n).find(|&r| !work.at(r, col).is_zero()) {
                Some(r) => r,
                None => return Ok(Rational::zero()),
            };
            if pivot_row != col {
                work.swap_rows(pivot_row, col);
                det = -det;
            }
            let pivot = work.at(col, col).clone();
            det *= &pivot;
            for row in col + 1..n {
                if work.at(row, col).is_zero() {
                    continue;
                }
                let factor = work.at(row, col) / &pivot;
                for j in col..n {
                    let delta = &factor * work.at(col, j);
                    work.set(row, j, work.at(row, j) - delta);
                }
            }
        }
        Ok(det)
    }

    /// Exact inverse via Gauss-Jordan elimination; `None` when singular.
    pub fn inverse(&self) -> Result<Option<Matrix>, Error> {
        if !self.is_square() {
            return Err(Error::Shape("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut work = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot_row = match (col..n).find(|&r| !work.at(r, col).is_zero()) {
                Some(r) => r,
                None => return Ok(None),
            };
            if pivot_row != col {
                work.swap_rows(pivot_row, col);
                inv.swap_rows(pivot_row, col);
            }
            let pivot = work.at(col, col).clone();
            for j in 0..n {
                work.set(col, j, work.at(col, j) / &pivot);
                inv.set(col, j, inv.at(col, j) / &pivot);
            }
            for row in 0..n {
                if row == col || work.at(row, col).is_zero() {
                    continue;
                }
                let factor = work.at(row, col).clone();
                for j in 0..n {
                    let dw = &factor * work.at(col, j);
                    work.set(row, j, work.at(row, j) - dw);
                    let di = &factor * inv.at(col, j);
                    inv.set(row, j, inv.at(row, j) - di);
                }
            }
        }
        Ok(Some(inv))
    }

    /// Coefficients of `det(λI − A)` in ascending degree order:
    /// `coeffs[k]` multiplies `λ^k` and `coeffs[n]` is always `1`.
    ///
    /// Uses the Faddeev–LeVerrier recurrence `M_1 = A`,
    /// `a_k = −tr(M_k)/k`, `M_{k+1} = A (M_k + a_k I)`, which needs only
    /// matrix products and exact divisions by integers — no cofactor
    /// expansion at any size.
    pub fn char_poly(&self) -> Result<Vec<Rational>, Error> {
        if !self.is_square() {
            return Err(Error::Shape(
                "characteristic polynomial of a non-square matrix".into(),
            ));
        }
        let n = self.rows;
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        let mut mk = self.clone();
        for k in 1..=n {
            let ak = -(mk.trace()?) / Rational::int(k as i64);
            coeffs[n - k] = ak.clone();
            if k < n {
                let shifted = mk.add(&Matrix::identity(n).scale(&ak))?;
                mk = self.mul(&shifted)?;
            }
        }
        Ok(coeffs)
    }

    /// Determinants of the leading principal `k × k` submatrices for
    /// `k = 1..=n` (Sylvester's criterion inputs).
    pub fn leading_principal_minors(&self) -> Result<Vec<Rational>, Error> {
        if !self.is_square() {
            return Err(Error::Shape(
                "principal minors of a non-square matrix".into(),
            ));
        }
        (1..=self.rows)
            .map(|k| self.leading_submatrix(k).det())
            .collect()
    }

    fn leading_submatrix(&self, k: usize) -> Matrix {
        let mut sub = Matrix::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                sub.set(i, j, self.at(i, j).clone());
            }
        }
        sub
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
