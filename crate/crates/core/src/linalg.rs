//! Dense matrices, fraction-free determinants and exact linear solving.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// Row-major dense matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| self.data[i * self.cols + j].to_string())
                .collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Scalar> Matrix<T> {
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

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::LengthMismatch(c, bad.len()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Assembles a block matrix; blocks in a row share a height and blocks
    /// in a column share a width.
    pub fn from_blocks(blocks: &[Vec<Matrix<T>>]) -> Result<Self> {
        let heights: Vec<usize> = blocks.iter().map(|row| row[0].rows).collect();
        let widths: Vec<usize> = blocks[0].iter().map(|b| b.cols).collect();
        for (row, &h) in blocks.iter().zip(&heights) {
            if row.len() != widths.len() {
                return Err(Error::LengthMismatch(widths.len(), row.len()));
            }
            for (b, &w) in row.iter().zip(&widths) {
                if b.rows != h || b.cols != w {
                    return Err(Error::SizeMismatch(b.rows * b.cols, h * w));
                }
            }
        }
        let total_rows = heights.iter().sum();
        let total_cols = widths.iter().sum();
        let mut m = Self::zeros(total_rows, total_cols);
        let mut r0 = 0;
        for (row, &h) in blocks.iter().zip(&heights) {
            let mut c0 = 0;
            for (b, &w) in row.iter().zip(&widths) {
                for i in 0..h {
                    for j in 0..w {
                        m[(r0 + i, c0 + j)] = b[(i, j)].clone();
                    }
                }
                c0 += w;
            }
            r0 += h;
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|v| v.clone() * c.clone())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.clone() + b.clone())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.clone() - b.clone())
    }

    pub fn neg(&self) -> Self {
        self.map(|v| -v.clone())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::SizeMismatch(
                self.rows * self.cols,
                other.rows * other.cols,
            ));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch(self.cols, v.len()));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }
}

/// Determinant by Bareiss elimination; every division is exact over an
/// integral domain.
pub fn det_bareiss<T: Scalar>(m: &Matrix<T>) -> Result<T> {
    if m.rows != m.cols {
        return Err(Error::NotSquare(m.rows, m.cols));
    }
    let n = m.rows;
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n {
        if a[(k, k)].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                return Ok(T::zero());
            };
            for j in 0..n {
                a.data.swap(k * n + j, p * n + j);
            }
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (a[(i, j)].clone() * a[(k, k)].clone()
                    - a[(i, k)].clone() * a[(k, j)].clone())
                    / prev.clone();
                a[(i, j)] = v;
            }
        }
        prev = a[(k, k)].clone();
    }
    let det = if n == 0 {
        T::one()
    } else {
        a[(n - 1, n - 1)].clone()
    };
    Ok(if negate { -det } else { det })
}

/// Exact determinant of a rational matrix: clears each row's denominators,
/// runs [`det_bareiss`] over `BigInt` and divides back.
pub fn det_exact(m: &Matrix<BigRational>) -> Result<BigRational> {
    if m.rows != m.cols {
        return Err(Error::NotSquare(m.rows, m.cols));
    }
    let mut scale = BigInt::one();
    let mut rows = Vec::with_capacity(m.rows);
    for i in 0..m.rows {
        let lcm = m
            .row(i)
            .iter()
            .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        rows.push(
            m.row(i)
                .iter()
                .map(|v| v.numer() * (&lcm / v.denom()))
                .collect::<Vec<BigInt>>(),
        );
        scale *= lcm;
    }
    let det = det_bareiss(&Matrix::from_rows(rows)?)?;
    Ok(BigRational::new(det, scale))
}

/// Result of solving `A x = b` for a tall matrix `A`.
#[derive(Clone, Debug, PartialEq)]
pub enum Solution<T> {
    Unique(Vec<T>),
    Inconsistent,
    /// The columns of `A` are dependent.
    Underdetermined,
}

/// Gauss–Jordan elimination on `[A | b]`.
pub fn solve<T: Field>(a: &Matrix<T>, b: &[T]) -> Result<Solution<T>> {
    if b.len() != a.rows {
        return Err(Error::LengthMismatch(a.rows, b.len()));
    }
    let (rows, cols) = (a.rows, a.cols);
    let mut m = Matrix::from_fn(rows, cols + 1, |i, j| {
        if j < cols {
            a[(i, j)].clone()
        } else {
            b[i].clone()
        }
    });
    let mut pivot_row = 0;
    for col in 0..cols {
        let Some(p) = (pivot_row..rows).find(|&i| !m[(i, col)].is_zero()) else {
            return Ok(Solution::Underdetermined);
        };
        for j in 0..=cols {
            m.data.swap(pivot_row * (cols + 1) + j, p * (cols + 1) + j);
        }
        let inv = T::one() / m[(pivot_row, col)].clone();
        for j in col..=cols {
            m[(pivot_row, j)] = m[(pivot_row, j)].clone() * inv.clone();
        }
        for i in 0..rows {
            if i == pivot_row || m[(i, col)].is_zero() {
                continue;
            }
            let f = m[(i, col)].clone();
            for j in col..=cols {
                let v = m[(i, j)].clone() - f.clone() * m[(pivot_row, j)].clone();
                m[(i, j)] = v;
            }
        }
        pivot_row += 1;
    }
    if (cols..rows).any(|i| !m[(i, cols)].is_zero()) {
        return Ok(Solution::Inconsistent);
    }
    Ok(Solution::Unique(
        (0..cols).map(|i| m[(i, cols)].clone()).collect(),
    ))
}
