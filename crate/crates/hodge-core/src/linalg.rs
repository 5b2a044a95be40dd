//! Dense exact linear algebra over Gaussian rationals: determinants, ranks,
//! kernels, inverses and Sylvester-style definiteness certificates.

use thiserror::Error;

use crate::scalar::{GaussRational, Rational};
use num::traits::Signed;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is not Hermitian")]
    NotHermitian,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// Row-major dense matrix over `GaussRational`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<GaussRational>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![GaussRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = GaussRational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GaussRational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> GaussRational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &GaussRational {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut GaussRational {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[GaussRational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn conj_transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |r, c| self.at(c, r).conj())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|r| (0..r).all(|c| self.at(r, c) == self.at(c, r)))
    }

    pub fn is_hermitian(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (0..=r).all(|c| *self.at(r, c) == self.at(c, r).conj()))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn mul(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Mat::zero(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.at(k, c);
                    if !b.is_zero() {
                        *out.at_mut(r, c) += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn sub(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat::from_fn(self.rows, self.cols, |r, c| {
            let mut v = self.at(r, c).clone();
            v -= rhs.at(r, c);
            v
        })
    }

    pub fn scale(&self, s: &GaussRational) -> Mat {
        Mat::from_fn(self.rows, self.cols, |r, c| self.at(r, c) * s)
    }

    /// Reduced row echelon form; returns (rref, pivot columns).
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0usize;
        for col in 0..m.cols {
            if lead >= m.rows {
                break;
            }
            let pivot_row = (lead..m.rows).find(|&r| !m.at(r, col).is_zero());
            let Some(pr) = pivot_row else { continue };
            m.swap_rows(lead, pr);
            let inv = m.at(lead, col).inv();
            for c in col..m.cols {
                *m.at_mut(lead, c) *= &inv;
            }
            for r in 0..m.rows {
                if r != lead && !m.at(r, col).is_zero() {
                    let factor = m.at(r, col).clone();
                    for c in col..m.cols {
                        let delta = &factor * m.at(lead, c);
                        *m.at_mut(r, c) -= &delta;
                    }
                }
            }
            pivots.push(col);
            lead += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel (`{x : Mx = 0}`), one column vector per entry.
    pub fn kernel_basis(&self) -> Vec<Vec<GaussRational>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![GaussRational::zero(); self.cols];
            v[fc] = GaussRational::one();
            for (pr, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.at(pr, fc);
            }
            basis.push(v);
        }
        basis
    }

    pub fn det(&self) -> Result<GaussRational, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = GaussRational::one();
        for col in 0..n {
            let Some(pr) = (col..n).find(|&r| !m.at(r, col).is_zero()) else {
                return Ok(GaussRational::zero());
            };
            if pr != col {
                m.swap_rows(col, pr);
                det = -det;
            }
            let pivot = m.at(col, col).clone();
            det *= &pivot;
            let inv = pivot.inv();
            for r in col + 1..n {
                if m.at(r, col).is_zero() {
                    continue;
                }
                let factor = &m.at(r, col).clone() * &inv;
                for c in col..n {
                    let delta = &factor * m.at(col, c);
                    *m.at_mut(r, c) -= &delta;
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Mat, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut aug = Mat::zero(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                *aug.at_mut(r, c) = self.at(r, c).clone();
            }
            *aug.at_mut(r, n + r) = GaussRational::one();
        }
        let (rr, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(LinalgError::Singular);
        }
        Ok(Mat::from_fn(n, n, |r, c| rr.at(r, n + c).clone()))
    }

    /// Solve `Mx = b` for square nonsingular `M`.
    pub fn solve(&self, b: &[GaussRational]) -> Result<Vec<GaussRational>, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        if b.len() != self.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "rhs length {} vs {} rows",
                b.len(),
                self.rows
            )));
        }
        let inv = self.inverse()?;
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = GaussRational::zero();
                for c in 0..self.cols {
                    acc += &(inv.at(r, c) * &b[c]);
                }
                acc
            })
            .collect())
    }

    /// Leading principal minors `det M[..k, ..k]` for `k = 1..=n`.
    pub fn leading_minors(&self) -> Result<Vec<GaussRational>, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        (1..=self.rows)
            .map(|k| Mat::from_fn(k, k, |r, c| self.at(r, c).clone()).det())
            .collect()
    }
}

/// Exact positive-definiteness certificate for a Hermitian matrix: all
/// leading principal minors are real and strictly positive (Sylvester).
///
/// Returns the minors so callers can report them.
pub fn hermitian_positive_definite(m: &Mat) -> Result<(bool, Vec<Rational>), LinalgError> {
    if !m.is_hermitian() {
        return Err(LinalgError::NotHermitian);
    }
    let minors = m.leading_minors()?;
    let mut reals = Vec::with_capacity(minors.len());
    for minor in &minors {
        // Minors of a Hermitian matrix are real; anything else is a bug.
        assert!(minor.is_real(), "Hermitian minor with imaginary part: {minor}");
        reals.push(minor.re.clone());
    }
    let pd = reals.iter().all(|r| r.is_positive());
    Ok((pd, reals))
}

/// Positive definiteness of a symmetric rational matrix via exact Sylvester
/// leading minors.
pub fn symmetric_positive_definite(entries: &[Vec<Rational>]) -> Result<(bool, Vec<Rational>), LinalgError> {
    let n = entries.len();
    if entries.iter().any(|r| r.len() != n) {
        return Err(LinalgError::NotSquare { rows: n, cols: entries.iter().map(|r| r.len()).max().unwrap_or(0) });
    }
    for r in 0..n {
        for c in 0..r {
            if entries[r][c] != entries[c][r] {
                return Err(LinalgError::NotSymmetric);
            }
        }
    }
    let m = Mat::from_fn(n, n, |r, c| GaussRational::from_rational(entries[r][c].clone()));
    let minors = m.leading_minors()?;
    let reals: Vec<Rational> = minors.into_iter().map(|g| g.re).collect();
    let pd = reals.iter().all(|r| r.is_positive());
    Ok((pd, reals))
}

/// Rank of the column span of a list of vectors.
pub fn span_rank(vectors: &[Vec<GaussRational>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Mat::from_rows(vectors.to_vec()).rank()
}
