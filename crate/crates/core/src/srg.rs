//! Parameter arithmetic for strongly regular graphs, in exact arithmetic.
//!
//! For `SRG(n, k, lambda, mu)` with spectrum `k^1, r^f, s^g`, write
//! `D = (lambda - mu)^2 + 4(k - mu)`. Then `r, s = ((lambda - mu) ± sqrt(D)) / 2`
//! and
//!
//! ```text
//! f = ((n - 1) - (2k + (n - 1)(lambda - mu)) / sqrt(D)) / 2
//! g = ((n - 1) + (2k + (n - 1)(lambda - mu)) / sqrt(D)) / 2
//! ```
//!
//! `sqrt(D)` must be an integer, except for conference parameters where the
//! numerator `2k + (n - 1)(lambda - mu)` vanishes and `f = g = (n - 1)/2`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Roots;
use thiserror::Error;

use crate::inertia::Inertia;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SrgError {
    #[error("parameters out of range: {0}")]
    OutOfRange(String),
    #[error("vertex count identity n = 1 + k + k(k-1-lambda)/mu fails for {0}")]
    VertexIdentity(SrgParams),
    #[error("discriminant (lambda-mu)^2 + 4(k-mu) = {0} must be positive")]
    NonPositiveDiscriminant(i64),
    #[error("sqrt({0}) is irrational and the parameters are not of conference type")]
    IrrationalMultiplicities(i64),
    #[error("eigenvalue multiplicities are not non-negative integers for {0}")]
    NonIntegralMultiplicities(SrgParams),
    #[error("the nonsingular bound needs r > 0, but r = 0 for {0}")]
    Singular(SrgParams),
    #[error("denominator 2 - lambda + mu vanishes")]
    ZeroDenominator,
    #[error("q must be an odd integer >= 3, got {0}")]
    InvalidTaylorOrder(u64),
}

/// A feasible parameter tuple: the vertex identity holds and both
/// multiplicities are non-negative integers. No Krein or absolute bound
/// conditions are checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SrgParams {
    n: i64,
    k: i64,
    lambda: i64,
    mu: i64,
    f: i64,
    g: i64,
    /// `Some(root)` when `D` is a perfect square.
    sqrt_d: Option<i64>,
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SRG({}, {}, {}, {})", self.n, self.k, self.lambda, self.mu)
    }
}

impl SrgParams {
    pub fn new(n: i64, k: i64, lambda: i64, mu: i64) -> Result<Self, SrgError> {
        if n < 2 || k < 1 || lambda < 0 || mu < 1 || k > n - 2 || lambda >= k {
            return Err(SrgError::OutOfRange(format!(
                "need n >= 2, 1 <= k <= n - 2, 0 <= lambda < k, mu >= 1; got ({n}, {k}, {lambda}, {mu})"
            )));
        }
        let mut p = SrgParams {
            n,
            k,
            lambda,
            mu,
            f: 0,
            g: 0,
            sqrt_d: None,
        };
        let rest = k * (k - 1 - lambda);
        if rest % mu != 0 || n != 1 + k + rest / mu {
            return Err(SrgError::VertexIdentity(p));
        }
        let d = p.discriminant();
        if d <= 0 {
            return Err(SrgError::NonPositiveDiscriminant(d));
        }
        let root = d.sqrt();
        let numerator = 2 * k + (n - 1) * (lambda - mu);
        let (twice_f, twice_g) = if root * root == d {
            p.sqrt_d = Some(root);
            if numerator % root != 0 {
                return Err(SrgError::NonIntegralMultiplicities(p));
            }
            ((n - 1) - numerator / root, (n - 1) + numerator / root)
        } else if numerator == 0 {
            (n - 1, n - 1)
        } else {
            return Err(SrgError::IrrationalMultiplicities(d));
        };
        if twice_f % 2 != 0 || twice_g % 2 != 0 || twice_f < 0 || twice_g < 0 {
            return Err(SrgError::NonIntegralMultiplicities(p));
        }
        p.f = twice_f / 2;
        p.g = twice_g / 2;
        Ok(p)
    }

    pub fn n(&self) -> i64 {
        self.n
    }
    pub fn k(&self) -> i64 {
        self.k
    }
    pub fn lambda(&self) -> i64 {
        self.lambda
    }
    pub fn mu(&self) -> i64 {
        self.mu
    }

    /// `(lambda - mu)^2 + 4(k - mu)`.
    pub fn discriminant(&self) -> i64 {
        (self.lambda - self.mu).pow(2) + 4 * (self.k - self.mu)
    }

    /// Exact sign of the second eigenvalue `r`.
    pub fn r_sign(&self) -> Ordering {
        // r = ((lambda - mu) + sqrt(D)) / 2 compared with 0
        let shift = self.mu - self.lambda;
        if shift < 0 {
            return Ordering::Greater;
        }
        self.discriminant().cmp(&(shift * shift))
    }

    /// `(r, s)` as floats, for display.
    pub fn eigenvalues(&self) -> (f64, f64) {
        let root = (self.discriminant() as f64).sqrt();
        let base = (self.lambda - self.mu) as f64;
        ((base + root) / 2.0, (base - root) / 2.0)
    }

    /// `(r, s)` exactly, when `D` is a perfect square.
    pub fn rational_eigenvalues(&self) -> Option<(Rational, Rational)> {
        self.sqrt_d.map(|root| {
            let base = self.lambda - self.mu;
            (
                Rational::new(BigInt::from(base + root), BigInt::from(2)),
                Rational::new(BigInt::from(base - root), BigInt::from(2)),
            )
        })
    }
}

/// Multiplicities `(f, g)` of `r` and `s`.
pub fn srg_multiplicities(p: &SrgParams) -> (i64, i64) {
    (p.f, p.g)
}

/// Parameters of the complement, `SRG(n, n-k-1, n-2k+mu-2, n-2k+lambda)`.
pub fn srg_complement_params(p: &SrgParams) -> Result<SrgParams, SrgError> {
    let n = p.n;
    SrgParams::new(n, n - p.k - 1, n - 2 * p.k + p.mu - 2, n - 2 * p.k + p.lambda)
}

/// Inertia `(1 + f, 0, g)` when `r > 0`, `(1, f, g)` when `r = 0`.
pub fn srg_inertia(p: &SrgParams) -> Result<Inertia, SrgError> {
    let (f, g) = (p.f as usize, p.g as usize);
    match p.r_sign() {
        Ordering::Greater => Ok(Inertia::new(1 + f, 0, g)),
        Ordering::Equal => Ok(Inertia::new(1, f, g)),
        Ordering::Less => Err(SrgError::OutOfRange(format!("{p} has r < 0"))),
    }
}

/// `max(n/g, n/(1+f))`, a lower bound on the fractional chromatic number of a
/// nonsingular SRG.
pub fn srg_chif_lower(p: &SrgParams) -> Result<Rational, SrgError> {
    if p.r_sign() != Ordering::Greater {
        return Err(SrgError::Singular(*p));
    }
    let n = BigInt::from(p.n);
    let a = Rational::new(n.clone(), BigInt::from(p.g));
    let b = Rational::new(n, BigInt::from(1 + p.f));
    Ok(a.max(b))
}

/// Positive-eigenvalue count predicted for an SRG whose second eigenvalue is
/// 1, together with the degree `k = 1 - lambda + 2mu` it forces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mu2OnePrediction {
    pub n_plus: Rational,
    pub k: i64,
}

/// `n - (n - lambda + 2mu)/(2 - lambda + mu)`.
pub fn mu2one_predicted_nplus(n: i64, lambda: i64, mu: i64) -> Result<Mu2OnePrediction, SrgError> {
    let den = 2 - lambda + mu;
    if den == 0 {
        return Err(SrgError::ZeroDenominator);
    }
    let n_plus = Rational::from_integer(BigInt::from(n))
        - Rational::new(BigInt::from(n - lambda + 2 * mu), BigInt::from(den));
    Ok(Mu2OnePrediction {
        n_plus,
        k: 1 - lambda + 2 * mu,
    })
}

/// Conjectured cap on the positive-eigenvalue count, `n - floor(8(n-1)/(8+n))`.
pub fn conjecture2_bound(n: usize) -> usize {
    n - 8 * n.saturating_sub(1) / (8 + n)
}

/// `n+ = 1 + (q-1)(q^2+1) = q^3 - q^2 + q` for the Taylor graph on `q^3`
/// vertices.
pub fn taylor_nplus(q: u64) -> Result<u64, SrgError> {
    if q < 3 || q % 2 == 0 {
        return Err(SrgError::InvalidTaylorOrder(q));
    }
    Ok(1 + (q - 1) * (q * q + 1))
}

/// `SRG(q^3, (q-1)(q^2+1)/2, (q-1)^3/4 - 1, (q-1)(q^2+1)/4)`.
pub fn taylor_params(q: u64) -> Result<SrgParams, SrgError> {
    if q < 3 || q % 2 == 0 {
        return Err(SrgError::InvalidTaylorOrder(q));
    }
    let q = q as i64;
    SrgParams::new(
        q * q * q,
        (q - 1) * (q * q + 1) / 2,
        (q - 1).pow(3) / 4 - 1,
        (q - 1) * (q * q + 1) / 4,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn srg(n: i64, k: i64, l: i64, m: i64) -> SrgParams {
        SrgParams::new(n, k, l, m).unwrap()
    }

    fn frac(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    #[test]
    fn multiplicities() {
        assert_eq!(srg_multiplicities(&srg(10, 3, 0, 1)), (5, 4));
        assert_eq!(srg_multiplicities(&srg(5, 2, 0, 1)), (2, 2));
        assert_eq!(srg_multiplicities(&srg(16, 5, 0, 2)), (10, 5));
        assert_eq!(srg_multiplicities(&srg(6, 4, 2, 4)), (3, 2));
    }

    #[test]
    fn infeasible_tuples() {
        assert!(matches!(SrgParams::new(11, 3, 0, 1), Err(SrgError::VertexIdentity(_))));
        assert!(matches!(SrgParams::new(21, 10, 3, 5), Err(SrgError::VertexIdentity(_))));
        assert_eq!(srg_multiplicities(&srg(21, 10, 3, 6)), (14, 6));
        assert!(matches!(SrgParams::new(5, 0, 0, 1), Err(SrgError::OutOfRange(_))));
        // D = 12 is not a square and 2k + (n-1)(lambda-mu) = -12
        assert!(matches!(SrgParams::new(11, 4, 0, 2), Err(SrgError::IrrationalMultiplicities(12))));
        // D = 25 but 5 does not divide 2k + (n-1)(lambda-mu) = -49
        assert!(matches!(
            SrgParams::new(22, 7, 0, 3),
            Err(SrgError::NonIntegralMultiplicities(_))
        ));
        assert_eq!(srg_multiplicities(&srg(28, 9, 0, 4)), (21, 6));
    }

    #[test]
    fn complements() {
        assert_eq!(srg_complement_params(&srg(10, 3, 0, 1)).unwrap(), srg(10, 6, 3, 4));
        assert_eq!(srg_complement_params(&srg(5, 2, 0, 1)).unwrap(), srg(5, 2, 0, 1));
        let p = srg(16, 5, 0, 2);
        assert_eq!(srg_complement_params(&srg_complement_params(&p).unwrap()).unwrap(), p);
        // complement of K_{2,2,2} is 3K_2, which has mu = 0
        assert!(srg_complement_params(&srg(6, 4, 2, 4)).is_err());
    }

    #[test]
    fn inertia_values() {
        assert_eq!(srg_inertia(&srg(10, 3, 0, 1)).unwrap(), Inertia::new(6, 0, 4));
        assert_eq!(srg_inertia(&srg(16, 5, 0, 2)).unwrap(), Inertia::new(11, 0, 5));
        assert_eq!(srg_inertia(&srg(5, 2, 0, 1)).unwrap(), Inertia::new(3, 0, 2));
        assert_eq!(srg_inertia(&srg(6, 4, 2, 4)).unwrap(), Inertia::new(1, 3, 2));
    }

    #[test]
    fn chif_lower() {
        assert_eq!(srg_chif_lower(&srg(10, 3, 0, 1)).unwrap(), frac(5, 2));
        assert_eq!(srg_chif_lower(&srg(5, 2, 0, 1)).unwrap(), frac(5, 2));
        assert_eq!(srg_chif_lower(&srg(16, 5, 0, 2)).unwrap(), frac(16, 5));
        assert!(matches!(srg_chif_lower(&srg(6, 4, 2, 4)), Err(SrgError::Singular(_))));
    }

    #[test]
    fn mu2one() {
        let p = mu2one_predicted_nplus(10, 0, 1).unwrap();
        assert_eq!((p.n_plus, p.k), (frac(6, 1), 3));
        let p = mu2one_predicted_nplus(16, 0, 2).unwrap();
        assert_eq!((p.n_plus, p.k), (frac(11, 1), 5));
        assert_eq!(mu2one_predicted_nplus(5, 0, 1).unwrap().n_plus, frac(8, 3));
        assert_eq!(mu2one_predicted_nplus(5, 3, 1), Err(SrgError::ZeroDenominator));
    }

    #[test]
    fn conjecture2_values() {
        assert_eq!(conjecture2_bound(10), 6);
        assert_eq!(conjecture2_bound(16), 11);
        assert_eq!(conjecture2_bound(5), 3);
        assert_eq!(conjecture2_bound(1), 1);
        assert_eq!(conjecture2_bound(7), 4);
    }

    #[test]
    fn taylor() {
        assert_eq!(taylor_nplus(3).unwrap(), 21);
        assert_eq!(taylor_nplus(5).unwrap(), 105);
        assert!(taylor_nplus(4).is_err());
        assert!(taylor_nplus(1).is_err());
        for q in [3u64, 5, 7, 11, 13] {
            let n = (q * q * q) as f64;
            let approx = n + n.cbrt() - n.powf(2.0 / 3.0);
            assert!((taylor_nplus(q).unwrap() as f64 - approx).abs() < 1e-6);
            // the closed form agrees with the multiplicity formulas
            let p = taylor_params(q).unwrap();
            assert_eq!(srg_inertia(&p).unwrap().n_plus as u64, taylor_nplus(q).unwrap());
        }
    }

    #[test]
    fn rational_eigenvalues() {
        let (r, s) = srg(10, 3, 0, 1).rational_eigenvalues().unwrap();
        assert_eq!((r, s), (frac(1, 1), frac(-2, 1)));
        assert!(srg(5, 2, 0, 1).rational_eigenvalues().is_none());
        let (r, s) = srg(5, 2, 0, 1).eigenvalues();
        assert!((r - 0.618_033_988_7).abs() < 1e-9 && (s + 1.618_033_988_7).abs() < 1e-9);
    }

    #[test]
    fn every_feasible_tuple_below_80() {
        let mut seen = 0;
        for n in 2..80 {
            for k in 1..n {
                for l in 0..k {
                    for m in 1..=k {
                        let Ok(p) = SrgParams::new(n, k, l, m) else { continue };
                        seen += 1;
                        let (f, g) = srg_multiplicities(&p);
                        assert_eq!(1 + f + g, n, "{p}");
                        let Ok(c) = srg_complement_params(&p) else { continue };
                        let (fc, gc) = srg_multiplicities(&c);
                        assert_eq!((f, g), (gc, fc), "{p}");
                        if p.r_sign() == Ordering::Greater && c.r_sign() == Ordering::Greater {
                            let a = srg_inertia(&p).unwrap();
                            let b = srg_inertia(&c).unwrap();
                            assert_eq!(a.n_plus + b.n_plus, n as usize + 1, "{p}");
                            assert_eq!(a.n_minus + b.n_minus, n as usize - 1, "{p}");
                        }
                    }
                }
            }
        }
        assert!(seen > 50, "only {seen} feasible tuples");
    }
}
