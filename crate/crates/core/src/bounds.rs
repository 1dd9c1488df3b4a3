//! Lower bounds for the chromatic number from inertia or spectrum values.
//!
//! Bounds take [`Inertia`] and [`Spectrum`] values rather than graphs, so a
//! published spectrum can be evaluated without building its graph. Edgeless
//! inputs are rejected.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::inertia::Inertia;
use crate::spectrum::Spectrum;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("bound undefined without both positive and negative eigenvalues (inertia {0})")]
    Edgeless(Inertia),
    #[error("spectrum has no negative eigenvalue")]
    NoNegativeEigenvalue,
    #[error("graph is singular (n0 = {0}); the nonsingular bound does not apply")]
    Singular(usize),
}

fn ratio(a: usize, b: usize) -> Rational {
    Rational::new(BigInt::from(a), BigInt::from(b))
}

/// `1 + max(n+/n-, n-/n+)` as an exact rational.
pub fn inertial_bound(i: Inertia) -> Result<Rational, BoundError> {
    if i.n_plus == 0 || i.n_minus == 0 {
        return Err(BoundError::Edgeless(i));
    }
    let big = i.n_plus.max(i.n_minus);
    let small = i.n_plus.min(i.n_minus);
    Ok(Rational::one() + ratio(big, small))
}

/// The largest of `n+`, `n-` may not exceed `n(chi - 1)/chi`.
pub fn inertia_cap(i: Inertia, chi: usize) -> Rational {
    if chi == 0 {
        return Rational::zero();
    }
    ratio(i.order() * (chi - 1), chi)
}

pub fn inertia_cap_check(i: Inertia, chi: usize) -> bool {
    chi >= 1 && ratio(i.n_plus.max(i.n_minus), 1) <= inertia_cap(i, chi)
}

/// Hoffman's bound `1 + mu_1 / |mu_n|`.
pub fn hoffman_bound(s: &Spectrum) -> Result<f64, BoundError> {
    if s.is_empty() || s.smallest() >= 0.0 {
        return Err(BoundError::NoNegativeEigenvalue);
    }
    Ok(1.0 + s.largest() / s.smallest().abs())
}

/// Smallest `c >= 2` with `mu_1 + (sum of the c - 1 smallest eigenvalues) <= tol`.
///
/// The trace vanishes, so `c = n` always qualifies for an exact spectrum;
/// `n` is returned if rounding keeps every partial sum above `tol`.
pub fn hoffman_full_chi(s: &Spectrum, tol: f64) -> Result<usize, BoundError> {
    if s.is_empty() || s.smallest() >= 0.0 {
        return Err(BoundError::NoNegativeEigenvalue);
    }
    let values = s.values();
    let n = values.len();
    let mut sum = values[0];
    for c in 2..=n {
        sum += values[n - (c - 1)];
        if sum <= tol {
            return Ok(c);
        }
    }
    Ok(n)
}

/// `n / min(n+, n-)`, a lower bound on the fractional chromatic number of a
/// nonsingular graph. Equal to [`inertial_bound`] whenever `n0 = 0`.
pub fn chif_nonsingular_bound(i: Inertia) -> Result<Rational, BoundError> {
    if i.n_zero != 0 {
        return Err(BoundError::Singular(i.n_zero));
    }
    if i.n_plus == 0 || i.n_minus == 0 {
        return Err(BoundError::Edgeless(i));
    }
    Ok(ratio(i.order(), i.n_plus.min(i.n_minus)))
}

/// Smallest integer not below `r`.
pub fn ceil_rational(r: &Rational) -> BigInt {
    r.ceil().to_integer()
}
