//! Exact inertia of symmetric matrices.
//!
//! The characteristic polynomial is computed with Berkowitz's division-free
//! algorithm over big integers. A real symmetric matrix has only real
//! eigenvalues, so Descartes' rule of signs counts the positive ones exactly;
//! the multiplicity of zero is the number of vanishing low-order coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InertiaError {
    #[error("zero polynomial has no inertia")]
    ZeroPolynomial,
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("matrix must have a zero diagonal, entry ({0}, {0}) is nonzero")]
    NonzeroDiagonal(usize),
    #[error("matrix rows must all have length {0}")]
    NotSquare(usize),
    #[error("weight matrix of order {weights} does not match pattern of order {pattern}")]
    OrderMismatch { weights: usize, pattern: usize },
    #[error("weight ({row}, {col}) is nonzero but ({row}, {col}) is not an edge of the pattern")]
    PatternViolation { row: usize, col: usize },
}

/// Counts of positive, zero and negative eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Inertia {
    pub n_plus: usize,
    pub n_zero: usize,
    pub n_minus: usize,
}

impl Inertia {
    pub fn new(n_plus: usize, n_zero: usize, n_minus: usize) -> Self {
        Inertia {
            n_plus,
            n_zero,
            n_minus,
        }
    }

    pub fn order(&self) -> usize {
        self.n_plus + self.n_zero + self.n_minus
    }

    pub fn rank(&self) -> usize {
        self.n_plus + self.n_minus
    }

    /// Componentwise sum, the inertia of a block-diagonal matrix.
    pub fn add(self, other: Inertia) -> Inertia {
        Inertia::new(
            self.n_plus + other.n_plus,
            self.n_zero + other.n_zero,
            self.n_minus + other.n_minus,
        )
    }
}

impl fmt::Display for Inertia {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.n_plus, self.n_zero, self.n_minus)
    }
}

/// Monic integer polynomial; `coeffs[i]` multiplies `x^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Low-degree-first coefficients. Trailing (high-degree) zeros are dropped.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let show_mag = !mag.is_one() || i == 0;
            match (show_mag, i) {
                (true, 0) => write!(f, "{mag}")?,
                (true, 1) => write!(f, "{mag}x")?,
                (true, _) => write!(f, "{mag}x^{i}")?,
                (false, 1) => write!(f, "x")?,
                (false, _) => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Symmetric matrix of exact rationals with a zero diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSymMatrix {
    order: usize,
    entries: Vec<BigRational>,
}

impl RationalSymMatrix {
    pub fn new(rows: Vec<Vec<BigRational>>) -> Result<Self, InertiaError> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return Err(InertiaError::NotSquare(order));
        }
        for i in 0..order {
            if !rows[i][i].is_zero() {
                return Err(InertiaError::NonzeroDiagonal(i));
            }
            for j in i + 1..order {
                if rows[i][j] != rows[j][i] {
                    return Err(InertiaError::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(RationalSymMatrix {
            order,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Result<Self, InertiaError> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    pub fn adjacency(g: &Graph) -> Self {
        Self::from_integers(&g.adjacency_matrix()).expect("adjacency is symmetric with zero diagonal")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.order + j]
    }

    /// The matrix times the positive lcm of all denominators.
    pub fn scaled_to_integers(&self) -> Vec<Vec<BigInt>> {
        let lcm = self
            .entries
            .iter()
            .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
        (0..self.order)
            .map(|i| {
                (0..self.order)
                    .map(|j| {
                        let e = self.get(i, j);
                        e.numer() * (&lcm / e.denom())
                    })
                    .collect()
            })
            .collect()
    }
}

/// Characteristic polynomial `det(xI - M)` of a square integer matrix, by
/// Berkowitz's algorithm.
///
/// Working from the bottom-right corner outwards, the polynomial of the
/// trailing principal block of size `m + 1` is the product of a lower
/// triangular Toeplitz matrix with first column
/// `(1, -a, -R S, -R M S, ..., -R M^(m-1) S)` and the polynomial of the
/// trailing block `M` of size `m`, where `a` is the new diagonal entry and
/// `R`, `S` the new row and column.
pub fn char_poly_integer(m: &[Vec<BigInt>]) -> IntPolynomial {
    let n = m.len();
    // highest degree first while building
    let mut poly: Vec<BigInt> = vec![BigInt::one()];
    for i in (0..n).rev() {
        let size = n - i - 1;
        let mut column = Vec::with_capacity(size + 2);
        column.push(BigInt::one());
        column.push(-&m[i][i]);
        let row = &m[i][i + 1..];
        let mut v: Vec<BigInt> = (i + 1..n).map(|r| m[r][i].clone()).collect();
        for step in 0..size {
            let dot = row
                .iter()
                .zip(&v)
                .filter(|(r, _)| !r.is_zero())
                .fold(BigInt::zero(), |acc, (r, x)| acc + r * x);
            column.push(-dot);
            if step + 1 < size {
                v = (0..size)
                    .map(|r| {
                        m[i + 1 + r][i + 1..]
                            .iter()
                            .zip(&v)
                            .filter(|(a, _)| !a.is_zero())
                            .fold(BigInt::zero(), |acc, (a, x)| acc + a * x)
                    })
                    .collect();
            }
        }
        let next: Vec<BigInt> = (0..size + 2)
            .map(|j| {
                (0..=j.min(size))
                    .filter(|&t| j - t < column.len())
                    .fold(BigInt::zero(), |acc, t| acc + &column[j - t] * &poly[t])
            })
            .collect();
        poly = next;
    }
    poly.reverse();
    IntPolynomial::from_coeffs(poly)
}

/// Characteristic polynomial of `c·M`, where `c` clears every denominator of
/// `M`. Scaling by a positive constant preserves the inertia.
pub fn char_poly(m: &RationalSymMatrix) -> IntPolynomial {
    char_poly_integer(&m.scaled_to_integers())
}

/// Inertia of an all-real-rooted polynomial by Descartes' rule of signs.
pub fn inertia_from_charpoly(p: &IntPolynomial) -> Result<Inertia, InertiaError> {
    let degree = p.degree().ok_or(InertiaError::ZeroPolynomial)?;
    let coeffs = p.coeffs();
    let n_zero = coeffs.iter().position(|c| !c.is_zero()).expect("nonzero polynomial");
    let mut n_plus = 0;
    let mut last_negative: Option<bool> = None;
    for c in &coeffs[n_zero..] {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        if last_negative.is_some_and(|l| l != neg) {
            n_plus += 1;
        }
        last_negative = Some(neg);
    }
    Ok(Inertia::new(n_plus, n_zero, degree - n_zero - n_plus))
}

/// Exact inertia of the adjacency matrix of `g`.
pub fn inertia(g: &Graph) -> Inertia {
    let p = char_poly_integer(&adjacency_bigint(g));
    inertia_from_charpoly(&p).expect("characteristic polynomial is monic")
}

/// Characteristic polynomial of the adjacency matrix of `g`.
pub fn graph_char_poly(g: &Graph) -> IntPolynomial {
    char_poly_integer(&adjacency_bigint(g))
}

fn adjacency_bigint(g: &Graph) -> Vec<Vec<BigInt>> {
    (0..g.order())
        .map(|u| (0..g.order()).map(|v| BigInt::from(g.has_edge(u, v) as u8)).collect())
        .collect()
}

/// Exact inertia of a weight matrix supported on the edges of `pattern`.
pub fn inertia_weighted(w: &RationalSymMatrix, pattern: &Graph) -> Result<Inertia, InertiaError> {
    if w.order() != pattern.order() {
        return Err(InertiaError::OrderMismatch {
            weights: w.order(),
            pattern: pattern.order(),
        });
    }
    for i in 0..w.order() {
        for j in 0..w.order() {
            if !w.get(i, j).is_zero() && !pattern.has_edge(i, j) {
                return Err(InertiaError::PatternViolation { row: i, col: j });
            }
        }
    }
    inertia_from_charpoly(&char_poly(w))
}
