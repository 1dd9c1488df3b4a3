//! Floating-point adjacency spectrum via cyclic Jacobi rotations.
//!
//! Only the Hoffman-type bounds consume these values. Every statement about
//! inertia goes through the exact path in [`crate::inertia`].

use thiserror::Error;

use crate::graph::Graph;

pub const DEFAULT_TOL: f64 = 1e-9;
pub const MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectrumError {
    #[error("tolerance must be positive, got {0}")]
    InvalidTolerance(f64),
    #[error("jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },
    #[error("spectrum values must be finite")]
    NonFinite,
}

/// Eigenvalues sorted in descending order.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    tolerance: f64,
}

impl Spectrum {
    /// Builds a spectrum from known eigenvalues (e.g. a published spectrum),
    /// sorting them descending.
    pub fn from_values(mut values: Vec<f64>, tolerance: f64) -> Result<Self, SpectrumError> {
        if !(tolerance > 0.0) {
            return Err(SpectrumError::InvalidTolerance(tolerance));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(SpectrumError::NonFinite);
        }
        values.sort_by(|a, b| b.total_cmp(a));
        Ok(Spectrum { values, tolerance })
    }

    /// Builds a spectrum from `(eigenvalue, multiplicity)` pairs.
    pub fn from_multiplicities(pairs: &[(f64, usize)], tolerance: f64) -> Result<Self, SpectrumError> {
        let values = pairs
            .iter()
            .flat_map(|&(v, m)| std::iter::repeat(v).take(m))
            .collect();
        Self::from_values(values, tolerance)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn largest(&self) -> f64 {
        self.values[0]
    }

    pub fn smallest(&self) -> f64 {
        *self.values.last().expect("non-empty spectrum")
    }

    /// Counts of values above `eps`, within `eps` of zero, and below `-eps`.
    pub fn sign_counts(&self, eps: f64) -> (usize, usize, usize) {
        let pos = self.values.iter().filter(|&&v| v > eps).count();
        let neg = self.values.iter().filter(|&&v| v < -eps).count();
        (pos, self.values.len() - pos - neg, neg)
    }
}

/// Eigenvalues of a dense symmetric matrix by cyclic Jacobi.
///
/// Sweeps stop once the off-diagonal Frobenius norm drops below
/// `tol * min(scale, 1)`, `scale` being the largest absolute row sum, so each
/// returned value is within `tol` of an exact eigenvalue.
pub fn symmetric_eigenvalues(matrix: &[Vec<f64>], tol: f64) -> Result<Vec<f64>, SpectrumError> {
    if !(tol > 0.0) {
        return Err(SpectrumError::InvalidTolerance(tol));
    }
    let n = matrix.len();
    let mut a: Vec<Vec<f64>> = matrix.to_vec();
    let scale = a
        .iter()
        .map(|r| r.iter().map(|x| x.abs()).sum::<f64>())
        .fold(0.0, f64::max);
    let threshold = tol * scale.min(1.0);
    let off_norm = |a: &Vec<Vec<f64>>| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i][j] * a[i][j];
                }
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    loop {
        let off = off_norm(&a);
        if off <= threshold {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(SpectrumError::NoConvergence { sweeps, off_norm: off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for row in a.iter_mut() {
                    let (akp, akq) = (row[p], row[q]);
                    row[p] = c * akp - s * akq;
                    row[q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                a[p][q] = 0.0;
                a[q][p] = 0.0;
            }
        }
    }
    let mut values: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    values.sort_by(|x, y| y.total_cmp(x));
    Ok(values)
}

/// Adjacency spectrum of `g`.
pub fn numeric_spectrum(g: &Graph, tol: f64) -> Result<Spectrum, SpectrumError> {
    let m: Vec<Vec<f64>> = g
        .adjacency_matrix()
        .into_iter()
        .map(|r| r.into_iter().map(|x| x as f64).collect())
        .collect();
    let values = symmetric_eigenvalues(&m, tol)?;
    Spectrum::from_values(values, tol)
}
