//! Small dense complex matrices and the error metric used by every search.
//!
//! Braid values live in dimension 2 (Fibonacci anyons) or 4 (the Majorana
//! scheme), so a [`Matrix`] is a flat, stack-allocated 4×4 buffer of which
//! only the leading `dim × dim` block is meaningful.

use std::fmt;
use std::ops::{Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gateset::{GateSet, TargetGate};
use crate::word::BraidWord;

const STRIDE: usize = 4;
const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Default absolute entrywise tolerance for matrix equality.
pub const EQ_TOLERANCE: f64 = 1e-9;

/// A square complex matrix of dimension 2 or 4.
#[derive(Clone, Copy, PartialEq)]
pub struct Matrix {
    dim: usize,
    data: [Complex64; STRIDE * STRIDE],
}

fn check_dim(dim: usize) -> Result<()> {
    match dim {
        2 | 4 => Ok(()),
        other => Err(Error::UnsupportedDimension(other)),
    }
}

impl Matrix {
    pub fn zeros(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(Matrix {
            dim,
            data: [ZERO; STRIDE * STRIDE],
        })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        let mut m = Self::zeros(dim)?;
        for i in 0..dim {
            m.data[i * STRIDE + i] = ONE;
        }
        Ok(m)
    }

    /// Builds a matrix from `dim * dim` entries in row-major order.
    pub fn from_row_major(dim: usize, entries: &[Complex64]) -> Result<Self> {
        let mut m = Self::zeros(dim)?;
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                left: dim * dim,
                right: entries.len(),
            });
        }
        for i in 0..dim {
            for j in 0..dim {
                m.data[i * STRIDE + j] = entries[i * dim + j];
            }
        }
        Ok(m)
    }

    pub fn diagonal(entries: &[Complex64]) -> Result<Self> {
        let mut m = Self::zeros(entries.len())?;
        for (i, &z) in entries.iter().enumerate() {
            m.data[i * STRIDE + i] = z;
        }
        Ok(m)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        assert!(row < self.dim && col < self.dim, "index out of bounds");
        self.data[row * STRIDE + col]
    }

    pub fn rows(&self) -> Vec<Vec<Complex64>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.data[i * STRIDE + j]).collect())
            .collect()
    }

    /// Conjugate transpose. For the unitary generators this is the inverse.
    pub fn adjoint(&self) -> Matrix {
        let mut out = *self;
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.data[i * STRIDE + j] = self.data[j * STRIDE + i].conj();
            }
        }
        out
    }

    pub fn scale(&self, c: Complex64) -> Matrix {
        let mut out = *self;
        for z in out.data.iter_mut() {
            *z *= c;
        }
        out
    }

    /// Matrix product `self · rhs`.
    pub fn try_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        self.same_dim(rhs)?;
        Ok(self.mul_unchecked(rhs))
    }

    pub fn try_sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.same_dim(rhs)?;
        Ok(self.sub_unchecked(rhs))
    }

    #[inline]
    fn same_dim(&self, rhs: &Matrix) -> Result<()> {
        if self.dim == rhs.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.dim,
                right: rhs.dim,
            })
        }
    }

    #[inline]
    fn mul_unchecked(&self, rhs: &Matrix) -> Matrix {
        let n = self.dim;
        let mut out = Matrix {
            dim: n,
            data: [ZERO; STRIDE * STRIDE],
        };
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * STRIDE + k];
                if a == ZERO {
                    continue;
                }
                for j in 0..n {
                    out.data[i * STRIDE + j] += a * rhs.data[k * STRIDE + j];
                }
            }
        }
        out
    }

    #[inline]
    fn sub_unchecked(&self, rhs: &Matrix) -> Matrix {
        let mut out = *self;
        for (z, w) in out.data.iter_mut().zip(rhs.data.iter()) {
            *z -= w;
        }
        out
    }

    /// `sqrt(Σ |m_ij|²)`: the entrywise (Frobenius) norm.
    #[inline]
    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Frobenius norm of `self - rhs` without materializing the difference.
    #[inline]
    pub fn frobenius_distance(&self, rhs: &Matrix) -> Result<f64> {
        self.same_dim(rhs)?;
        Ok(self.distance_unchecked(rhs))
    }

    #[inline]
    pub(crate) fn distance_unchecked(&self, rhs: &Matrix) -> f64 {
        self.data
            .iter()
            .zip(rhs.data.iter())
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Determinant by Gaussian elimination with partial pivoting.
    pub fn determinant(&self) -> Complex64 {
        let n = self.dim;
        let mut a = self.data;
        let mut det = ONE;
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&r, &s| {
                    a[r * STRIDE + col]
                        .norm()
                        .total_cmp(&a[s * STRIDE + col].norm())
                })
                .unwrap();
            if a[pivot * STRIDE + col] == ZERO {
                return ZERO;
            }
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * STRIDE + j, col * STRIDE + j);
                }
                det = -det;
            }
            let p = a[col * STRIDE + col];
            det *= p;
            for r in col + 1..n {
                let f = a[r * STRIDE + col] / p;
                for j in col..n {
                    let v = a[col * STRIDE + j];
                    a[r * STRIDE + j] -= f * v;
                }
            }
        }
        det
    }

    /// Largest absolute entrywise difference; `None` if the dims differ.
    pub fn max_abs_diff(&self, other: &Matrix) -> Option<f64> {
        (self.dim == other.dim).then(|| {
            self.data
                .iter()
                .zip(other.data.iter())
                .map(|(a, b)| (a - b).norm())
                .fold(0.0, f64::max)
        })
    }

    pub fn approx_eq(&self, other: &Matrix, tolerance: f64) -> bool {
        self.max_abs_diff(other).is_some_and(|d| d <= tolerance)
    }

    /// `M · M† = I` entrywise within `tolerance`.
    pub fn is_unitary(&self, tolerance: f64) -> bool {
        let id = Matrix::identity(self.dim).expect("dim validated at construction");
        self.mul_unchecked(&self.adjoint()).approx_eq(&id, tolerance)
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    /// Panics on a dimension mismatch; use [`Matrix::try_mul`] for untrusted input.
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        self.mul_unchecked(rhs)
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        self.sub_unchecked(rhs)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row
                .iter()
                .map(|z| format!("{:+.6}{:+.6}i", z.re, z.im))
                .collect();
            write!(f, "[{}]", cells.join("  "))?;
        }
        Ok(())
    }
}

pub fn mat_multiply(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    a.try_mul(b)
}

pub fn frobenius_norm(m: &Matrix) -> f64 {
    m.frobenius_norm()
}

/// Distance between two braids: the norm of the difference of their matrices.
pub fn distance(b1: &BraidWord, b2: &BraidWord, gs: &GateSet) -> Result<f64> {
    let m1 = b1.mat(gs)?;
    let m2 = b2.mat(gs)?;
    Ok(m1.distance_unchecked(&m2))
}

/// How far a braid's matrix is from the gate it is meant to emulate.
pub fn braid_error(b: &BraidWord, target: &TargetGate, gs: &GateSet) -> Result<f64> {
    if gs.dim() != target.matrix.dim() {
        return Err(Error::DimensionMismatch {
            left: gs.dim(),
            right: target.matrix.dim(),
        });
    }
    Ok(b.mat(gs)?.distance_unchecked(&target.matrix))
}
