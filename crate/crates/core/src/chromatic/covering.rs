//! Revised simplex for the set-covering LP
//!
//! ```text
//! minimize sum x_S  subject to  sum_{S containing v} x_S >= 1,  x >= 0
//! ```
//!
//! with one column per vertex subset. The basis inverse is kept explicitly
//! in exact rationals; it is only `n x n`, while the number of columns can be
//! in the thousands. Columns are priced against integer-scaled duals with
//! Dantzig's rule; the lexicographic ratio test rules out cycling.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{bits, SolverError};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringSolution {
    pub value: Rational,
    /// Weight per input set.
    pub x: Vec<Rational>,
    /// Optimal dual vertex weights.
    pub duals: Vec<Rational>,
    pub pivots: usize,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Phase {
    One,
    Two,
}

struct Revised<'a> {
    n: usize,
    sets: &'a [u64],
    basis: Vec<usize>,
    in_basis: Vec<bool>,
    binv: Vec<Vec<Rational>>,
    xb: Vec<Rational>,
    pivots: usize,
    /// Bland's rule instead of Dantzig plus lexicographic ratios.
    bland: bool,
}

impl<'a> Revised<'a> {
    /// Columns: sets, then surplus `-e_i`, then artificial `e_i`.
    fn artificial(&self, i: usize) -> usize {
        self.sets.len() + self.n + i
    }

    fn is_artificial(&self, j: usize) -> bool {
        j >= self.sets.len() + self.n
    }

    fn cost(&self, j: usize, phase: Phase) -> i64 {
        match phase {
            Phase::One => i64::from(self.is_artificial(j)),
            Phase::Two => i64::from(j < self.sets.len()),
        }
    }

    /// Dot product of a row vector with column `j`.
    fn dot(&self, row: &[Rational], j: usize) -> Rational {
        let m = self.sets.len();
        if j < m {
            bits(self.sets[j]).map(|v| &row[v]).sum()
        } else if j < m + self.n {
            -row[j - m].clone()
        } else {
            row[j - m - self.n].clone()
        }
    }

    fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.n).map(|r| self.dot(&self.binv[r], j)).collect()
    }

    fn duals(&self, phase: Phase) -> Vec<Rational> {
        let mut pi = vec![Rational::zero(); self.n];
        for (r, &j) in self.basis.iter().enumerate() {
            let c = self.cost(j, phase);
            if c != 0 {
                for (p, b) in pi.iter_mut().zip(&self.binv[r]) {
                    *p += b * Rational::from_integer(c.into());
                }
            }
        }
        pi
    }

    /// Entering column, or `None` at optimality.
    fn price(&self, pi: &[Rational], phase: Phase) -> Option<usize> {
        let denom = pi.iter().fold(BigInt::one(), |acc, p| acc.lcm(p.denom()));
        let scaled: Vec<BigInt> = pi.iter().map(|p| p.numer() * (&denom / p.denom())).collect();
        let total = self.sets.len() + self.n;
        let mut best: Option<(usize, BigInt)> = None;
        for j in 0..total {
            if self.in_basis[j] {
                continue;
            }
            let reduced = if j < self.sets.len() {
                let s: BigInt = bits(self.sets[j]).map(|v| &scaled[v]).sum();
                &denom * self.cost(j, phase) - s
            } else {
                scaled[j - self.sets.len()].clone()
            };
            if reduced.is_negative() {
                if self.bland {
                    return Some(j);
                }
                if best.as_ref().is_none_or(|(_, b)| reduced < *b) {
                    best = Some((j, reduced));
                }
            }
        }
        best.map(|(j, _)| j)
    }

    fn pivot(&mut self, r: usize, j: usize, u: &[Rational]) {
        let p = u[r].clone();
        for b in self.binv[r].iter_mut() {
            *b /= &p;
        }
        self.xb[r] /= &p;
        let (row_r, x_r) = (self.binv[r].clone(), self.xb[r].clone());
        for s in 0..self.n {
            if s == r || u[s].is_zero() {
                continue;
            }
            let f = &u[s];
            for (b, br) in self.binv[s].iter_mut().zip(&row_r) {
                if !br.is_zero() {
                    *b -= f * br;
                }
            }
            self.xb[s] -= f * &x_r;
        }
        self.in_basis[self.basis[r]] = false;
        self.in_basis[j] = true;
        self.basis[r] = j;
        self.pivots += 1;
    }

    /// Leaving row by the lexicographic ratio test: among rows with
    /// `u[r] > 0`, the smallest `(x_B[r], B^-1[r, ..]) / u[r]`.
    /// Under Bland's rule ties go to the lowest basic column instead.
    fn leaving_row(&self, u: &[Rational]) -> Option<usize> {
        let mut cands: Vec<usize> = (0..self.n).filter(|&r| u[r].is_positive()).collect();
        if cands.len() <= 1 {
            return cands.pop();
        }
        let ratios: Vec<Rational> = cands.iter().map(|&r| &self.xb[r] / &u[r]).collect();
        let min = ratios.iter().min().expect("nonempty").clone();
        cands = cands
            .into_iter()
            .zip(ratios)
            .filter(|(_, q)| *q == min)
            .map(|(r, _)| r)
            .collect();
        if self.bland {
            return cands.into_iter().min_by_key(|&r| self.basis[r]);
        }
        let mut col = 0;
        while cands.len() > 1 && col < self.n {
            let vals: Vec<Rational> = cands.iter().map(|&r| &self.binv[r][col] / &u[r]).collect();
            let min = vals.iter().min().expect("nonempty").clone();
            cands = cands
                .into_iter()
                .zip(vals)
                .filter(|(_, q)| *q == min)
                .map(|(r, _)| r)
                .collect();
            col += 1;
        }
        cands.first().copied()
    }

    fn run(&mut self, phase: Phase) -> Result<(), SolverError> {
        loop {
            let pi = self.duals(phase);
            let Some(j) = self.price(&pi, phase) else {
                return Ok(());
            };
            let u = self.column(j);
            let r = self
                .leaving_row(&u)
                .ok_or_else(|| SolverError::Lp("covering LP reported unbounded".into()))?;
            self.pivot(r, j, &u);
        }
    }

    /// Whether every row of `[x_B | B^-1]` is lexicographically positive,
    /// the precondition for the lexicographic rule to avoid cycling.
    fn lex_positive(&self) -> bool {
        (0..self.n).all(|r| {
            std::iter::once(&self.xb[r])
                .chain(&self.binv[r])
                .find(|x| !x.is_zero())
                .is_some_and(|x| x.is_positive())
        })
    }

    /// Replaces artificial columns still basic at level zero.
    fn drive_out_artificials(&mut self) -> Result<(), SolverError> {
        for r in 0..self.n {
            if !self.is_artificial(self.basis[r]) {
                continue;
            }
            let row = self.binv[r].clone();
            let j = (0..self.sets.len() + self.n)
                .find(|&j| !self.in_basis[j] && !self.dot(&row, j).is_zero())
                .ok_or_else(|| SolverError::Lp("redundant covering row".into()))?;
            let u = self.column(j);
            self.pivot(r, j, &u);
        }
        Ok(())
    }
}

/// Solves the covering LP of `n` vertices by the given vertex sets. Every
/// vertex must lie in some set.
pub fn solve_covering(n: usize, sets: &[u64]) -> Result<CoveringSolution, SolverError> {
    solve(n, sets, false)
}

fn solve(n: usize, sets: &[u64], force_bland: bool) -> Result<CoveringSolution, SolverError> {
    let covered = sets.iter().fold(0u64, |a, s| a | s);
    if (0..n).any(|v| covered & (1u64 << v) == 0) {
        return Err(SolverError::Lp("covering LP is infeasible".into()));
    }
    let m = sets.len();
    let mut lp = Revised {
        n,
        sets,
        basis: (0..n).map(|i| m + n + i).collect(),
        in_basis: vec![false; m + 2 * n],
        binv: (0..n)
            .map(|r| (0..n).map(|c| if r == c { Rational::one() } else { Rational::zero() }).collect())
            .collect(),
        xb: vec![Rational::one(); n],
        pivots: 0,
        bland: force_bland,
    };
    for i in 0..n {
        let a = lp.artificial(i);
        lp.in_basis[a] = true;
    }
    lp.run(Phase::One)?;
    let infeasibility: Rational = (0..n)
        .filter(|&r| lp.is_artificial(lp.basis[r]))
        .map(|r| lp.xb[r].clone())
        .sum();
    if !infeasibility.is_zero() {
        return Err(SolverError::Lp("covering LP is infeasible".into()));
    }
    lp.drive_out_artificials()?;
    lp.bland = force_bland || !lp.lex_positive();
    lp.run(Phase::Two)?;

    let mut x = vec![Rational::zero(); m];
    for (r, &j) in lp.basis.iter().enumerate() {
        if j < m {
            x[j] = lp.xb[r].clone();
        }
    }
    Ok(CoveringSolution {
        value: x.iter().sum(),
        x,
        duals: lp.duals(Phase::Two),
        pivots: lp.pivots,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    #[test]
    fn pentagon_cover() {
        // maximal independent sets of C5
        let sets = [0b00101, 0b01010, 0b10100, 0b01001, 0b10010];
        let s = solve_covering(5, &sets).unwrap();
        assert_eq!(s.value, q(5, 2));
        assert_eq!(s.duals.iter().sum::<Rational>(), q(5, 2));
        assert!(s.x.iter().all(|x| !x.is_negative()));
    }

    #[test]
    fn single_set_and_partition() {
        assert_eq!(solve_covering(3, &[0b111]).unwrap().value, q(1, 1));
        assert_eq!(solve_covering(4, &[0b0011, 0b1100, 0b0110]).unwrap().value, q(2, 1));
    }

    fn dense_oracle(n: usize, sets: &[u64]) -> Rational {
        use crate::chromatic::simplex::{Constraint, LinearProgram, LpOutcome, Sense};
        let lp = LinearProgram {
            objective: vec![Rational::one(); sets.len()],
            constraints: (0..n)
                .map(|v| Constraint {
                    coeffs: sets.iter().map(|s| Rational::from_integer(((s >> v) & 1).into())).collect(),
                    sense: Sense::Ge,
                    rhs: Rational::one(),
                })
                .collect(),
        };
        match lp.solve() {
            LpOutcome::Optimal(s) => s.value,
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn agrees_with_dense_tableau() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..60 {
            let n = rng.gen_range(2..9);
            let m = rng.gen_range(1..14);
            let full = (1u64 << n) - 1;
            let mut sets: Vec<u64> = (0..m).map(|_| rng.gen_range(1..=full)).collect();
            sets.push(1 << rng.gen_range(0..n));
            let covered = sets.iter().fold(0, |a, s| a | s);
            sets.extend((0..n).filter(|v| covered >> v & 1 == 0).map(|v| 1u64 << v));
            let want = dense_oracle(n, &sets);
            for bland in [false, true] {
                let got = solve(n, &sets, bland).unwrap();
                assert_eq!(got.value, want, "{sets:?}");
                let dual_total: Rational = got.duals.iter().sum();
                assert_eq!(dual_total, want);
                assert!(sets
                    .iter()
                    .all(|&s| bits(s).map(|v| &got.duals[v]).sum::<Rational>() <= Rational::one()));
            }
        }
    }

    #[test]
    fn uncovered_vertex() {
        assert!(solve_covering(3, &[0b011]).is_err());
    }
}
