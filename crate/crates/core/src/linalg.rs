//! Small dense exact linear algebra over the rationals.
//!
//! Matrices here are at most a few dozen rows (dual graphs of resolutions and
//! blow-up towers), so plain Gaussian elimination with exact pivots is enough.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{qi, Q};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(n * m);
        for row in rows {
            if row.len() != m {
                return Err(Error::DimensionMismatch {
                    expected: m,
                    got: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix {
            rows: n,
            cols: m,
            data,
        })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| qi(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Q {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Q) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Q] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_symmetric(&self) -> bool {
        self.asymmetry().is_none()
    }

    fn asymmetry(&self) -> Option<(usize, usize)> {
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if self.get(i, j) != self.get(j, i) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Principal submatrix on `keep` (in the given order).
    pub fn principal(&self, keep: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(keep.len(), keep.len());
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                out.set(a, b, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn mul_vec(&self, x: &[Q]) -> Vec<Q> {
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(x)
                    .fold(Q::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    fn require_square(&self) -> Result<()> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(())
    }

    /// Leading principal minors `D_1, ..., D_n`.
    ///
    /// Elimination without row exchanges: while every pivot is nonzero,
    /// `D_k` is the product of the first `k` pivots. Once a pivot vanishes
    /// the remaining minors are computed directly.
    pub fn leading_minors(&self) -> Result<Vec<Q>> {
        self.require_square()?;
        let n = self.rows;
        let mut a = self.clone();
        let mut minors = Vec::with_capacity(n);
        let mut running = qi(1);
        for k in 0..n {
            let pivot = a.get(k, k).clone();
            if pivot.is_zero() {
                minors.push(Q::zero());
                for size in (k + 2)..=n {
                    let keep: Vec<usize> = (0..size).collect();
                    minors.push(self.principal(&keep).determinant()?);
                }
                return Ok(minors);
            }
            running *= &pivot;
            minors.push(running.clone());
            for r in (k + 1)..n {
                let factor = a.get(r, k) / &pivot;
                if factor.is_zero() {
                    continue;
                }
                for c in k..n {
                    let v = a.get(r, c) - &factor * a.get(k, c);
                    a.set(r, c, v);
                }
            }
        }
        Ok(minors)
    }

    pub fn determinant(&self) -> Result<Q> {
        self.require_square()?;
        let n = self.rows;
        let mut a = self.clone();
        let mut det = qi(1);
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !a.get(r, k).is_zero()) else {
                return Ok(Q::zero());
            };
            if p != k {
                a.swap_rows(p, k);
                det = -det;
            }
            let pivot = a.get(k, k).clone();
            det *= &pivot;
            for r in (k + 1)..n {
                let factor = a.get(r, k) / &pivot;
                if factor.is_zero() {
                    continue;
                }
                for c in k..n {
                    let v = a.get(r, c) - &factor * a.get(k, c);
                    a.set(r, c, v);
                }
            }
        }
        Ok(det)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    /// Solves `self * x = rhs` exactly.
    pub fn solve(&self, rhs: &[Q]) -> Result<Vec<Q>> {
        self.require_square()?;
        let n = self.rows;
        if rhs.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: rhs.len(),
            });
        }
        let mut a = self.clone();
        let mut b = rhs.to_vec();
        for k in 0..n {
            let p = (k..n)
                .find(|&r| !a.get(r, k).is_zero())
                .ok_or(Error::Singular)?;
            if p != k {
                a.swap_rows(p, k);
                b.swap(p, k);
            }
            let pivot = a.get(k, k).clone();
            for r in (k + 1)..n {
                let factor = a.get(r, k) / &pivot;
                if factor.is_zero() {
                    continue;
                }
                for c in k..n {
                    let v = a.get(r, c) - &factor * a.get(k, c);
                    a.set(r, c, v);
                }
                let v = &b[r] - &factor * &b[k];
                b[r] = v;
            }
        }
        let mut x = vec![Q::zero(); n];
        for k in (0..n).rev() {
            let mut acc = b[k].clone();
            for (c, xc) in x.iter().enumerate().skip(k + 1) {
                acc -= a.get(k, c) * xc;
            }
            x[k] = acc / a.get(k, k);
        }
        Ok(x)
    }
}

/// Sylvester's criterion: `(-1)^k D_k > 0` for every leading principal minor.
pub fn is_negative_definite(m: &Matrix) -> Result<bool> {
    m.require_square()?;
    if let Some((i, j)) = m.asymmetry() {
        return Err(Error::NotSymmetric(i, j));
    }
    let minors = m.leading_minors()?;
    Ok(minors.iter().enumerate().all(|(k, d)| {
        if k % 2 == 0 {
            d.is_negative()
        } else {
            d.is_positive()
        }
    }))
}
