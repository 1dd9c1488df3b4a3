//! Dense two-phase simplex over exact rationals with Bland's rule.
//!
//! Solves `minimize c·x` subject to rows `a·x (<=|>=|=) b` and `x >= 0`.
//! Every row gets one identity column (slack or artificial); `>=` rows also
//! get a surplus column. Artificial columns stay in the tableau during phase
//! two but may not enter, so the final reduced costs of the identity columns
//! give the dual values.

use num_traits::{One, Signed, Zero};

use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub sense: Sense,
    pub rhs: Rational,
}

#[derive(Debug, Clone)]
pub struct LinearProgram {
    pub objective: Vec<Rational>,
    pub constraints: Vec<Constraint>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal(LpSolution),
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSolution {
    pub x: Vec<Rational>,
    pub value: Rational,
    /// One multiplier per constraint; `b·y = value` at optimality.
    pub duals: Vec<Rational>,
    pub pivots: usize,
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    /// Reduced costs and (negated) objective value.
    cost: Vec<Rational>,
    cost_value: Rational,
    pivots: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, e: usize) {
        let p = self.rows[r][e].clone();
        if !p.is_one() {
            let inv = p.recip();
            for a in self.rows[r].iter_mut() {
                if !a.is_zero() {
                    *a *= &inv;
                }
            }
            self.rhs[r] *= &inv;
        }
        let support: Vec<usize> = (0..self.rows[r].len())
            .filter(|&j| !self.rows[r][j].is_zero())
            .collect();
        let (pivot_row, pivot_rhs) = (self.rows[r].clone(), self.rhs[r].clone());
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][e].is_zero() {
                continue;
            }
            let factor = self.rows[i][e].clone();
            for &j in &support {
                let delta = &factor * &pivot_row[j];
                self.rows[i][j] -= delta;
            }
            self.rhs[i] -= &factor * &pivot_rhs;
        }
        if !self.cost[e].is_zero() {
            let factor = self.cost[e].clone();
            for &j in &support {
                let delta = &factor * &pivot_row[j];
                self.cost[j] -= delta;
            }
            self.cost_value -= &factor * &pivot_rhs;
        }
        self.basis[r] = e;
        self.pivots += 1;
    }

    /// Runs Bland's rule over the columns allowed by `enterable`. Returns
    /// false if the objective is unbounded below.
    fn optimize(&mut self, enterable: &dyn Fn(usize) -> bool) -> bool {
        loop {
            let Some(e) = (0..self.cost.len()).find(|&j| enterable(j) && self.cost[j].is_negative()) else {
                return true;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][e];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / a;
                let better = match &leave {
                    None => true,
                    Some((l, best)) => ratio < *best || (ratio == *best && self.basis[i] < self.basis[*l]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, e),
                None => return false,
            }
        }
    }

    fn set_cost(&mut self, costs: &[Rational]) {
        self.cost = costs.to_vec();
        self.cost_value = Rational::zero();
        for i in 0..self.rows.len() {
            let cb = costs[self.basis[i]].clone();
            if cb.is_zero() {
                continue;
            }
            for (c, a) in self.cost.iter_mut().zip(&self.rows[i]) {
                if !a.is_zero() {
                    *c -= &cb * a;
                }
            }
            self.cost_value -= &cb * &self.rhs[i];
        }
    }
}

impl LinearProgram {
    pub fn solve(&self) -> LpOutcome {
        let n = self.objective.len();
        let m = self.constraints.len();
        // rows normalised to a non-negative right-hand side
        let mut normalized = Vec::with_capacity(m);
        let mut flipped = vec![false; m];
        for (i, c) in self.constraints.iter().enumerate() {
            assert_eq!(c.coeffs.len(), n, "constraint {i} has the wrong width");
            if c.rhs.is_negative() {
                flipped[i] = true;
                let sense = match c.sense {
                    Sense::Le => Sense::Ge,
                    Sense::Ge => Sense::Le,
                    Sense::Eq => Sense::Eq,
                };
                normalized.push((c.coeffs.iter().map(|a| -a).collect::<Vec<_>>(), sense, -&c.rhs));
            } else {
                normalized.push((c.coeffs.clone(), c.sense, c.rhs.clone()));
            }
        }
        let surplus_count = normalized.iter().filter(|r| r.1 == Sense::Ge).count();
        // columns: structural | surplus | identity (slack or artificial)
        let width = n + surplus_count + m;
        let identity_col = |i: usize| n + surplus_count + i;
        let artificial: Vec<bool> = normalized.iter().map(|r| r.1 != Sense::Le).collect();
        let mut rows = Vec::with_capacity(m);
        let mut rhs = Vec::with_capacity(m);
        let mut next_surplus = n;
        for (i, (coeffs, sense, b)) in normalized.into_iter().enumerate() {
            let mut row = vec![Rational::zero(); width];
            row[..n].clone_from_slice(&coeffs);
            if sense == Sense::Ge {
                row[next_surplus] = -Rational::one();
                next_surplus += 1;
            }
            row[identity_col(i)] = Rational::one();
            rows.push(row);
            rhs.push(b);
        }

        let mut t = Tableau {
            rows,
            rhs,
            basis: (0..m).map(identity_col).collect(),
            cost: vec![],
            cost_value: Rational::zero(),
            pivots: 0,
        };
        let is_artificial_col = |j: usize| j >= n + surplus_count && j < n + surplus_count + m && artificial[j - n - surplus_count];

        // phase one
        let phase1: Vec<Rational> = (0..width)
            .map(|j| if is_artificial_col(j) { Rational::one() } else { Rational::zero() })
            .collect();
        t.set_cost(&phase1);
        t.optimize(&|_| true);
        if !t.cost_value.is_zero() {
            return LpOutcome::Infeasible;
        }
        // drive zero-level artificials out of the basis where possible
        for r in 0..m {
            if !is_artificial_col(t.basis[r]) {
                continue;
            }
            if let Some(e) = (0..width).find(|&j| !is_artificial_col(j) && !t.rows[r][j].is_zero()) {
                t.pivot(r, e);
            }
        }

        // phase two
        let mut phase2 = vec![Rational::zero(); width];
        phase2[..n].clone_from_slice(&self.objective);
        t.set_cost(&phase2);
        if !t.optimize(&|j| !is_artificial_col(j)) {
            return LpOutcome::Unbounded;
        }

        let mut x = vec![Rational::zero(); n];
        for (r, &b) in t.basis.iter().enumerate() {
            if b < n {
                x[b] = t.rhs[r].clone();
            }
        }
        let value = -t.cost_value.clone();
        // reduced cost of the +e_i identity column is -y_i
        let duals = (0..m)
            .map(|i| {
                let y = -t.cost[identity_col(i)].clone();
                if flipped[i] {
                    -y
                } else {
                    y
                }
            })
            .collect();
        LpOutcome::Optimal(LpSolution {
            x,
            value,
            duals,
            pivots: t.pivots,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    fn row(coeffs: &[i64], sense: Sense, rhs: i64) -> Constraint {
        Constraint {
            coeffs: coeffs.iter().map(|&c| r(c)).collect(),
            sense,
            rhs: r(rhs),
        }
    }

    fn optimal(lp: &LinearProgram) -> LpSolution {
        match lp.solve() {
            LpOutcome::Optimal(s) => s,
            other => panic!("expected optimum, got {other:?}"),
        }
    }

    #[test]
    fn textbook_max() {
        // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18 -> 36 at (2, 6)
        let lp = LinearProgram {
            objective: vec![r(-3), r(-5)],
            constraints: vec![
                row(&[1, 0], Sense::Le, 4),
                row(&[0, 2], Sense::Le, 12),
                row(&[3, 2], Sense::Le, 18),
            ],
        };
        let s = optimal(&lp);
        assert_eq!(s.value, r(-36));
        assert_eq!(s.x, vec![r(2), r(6)]);
        // duals of a minimisation with <= rows are non-positive: (0, -3/2, -1)
        assert_eq!(s.duals, vec![r(0), q(-3, 2), r(-1)]);
    }

    #[test]
    fn covering_lp_for_pentagon() {
        // min sum x over the five maximal independent sets of C5
        let sets = [[0, 2], [1, 3], [2, 4], [3, 0], [4, 1]];
        let constraints = (0..5)
            .map(|v| Constraint {
                coeffs: sets.iter().map(|s| r(s.contains(&v) as i64)).collect(),
                sense: Sense::Ge,
                rhs: r(1),
            })
            .collect();
        let lp = LinearProgram {
            objective: vec![r(1); 5],
            constraints,
        };
        let s = optimal(&lp);
        assert_eq!(s.value, q(5, 2));
        assert_eq!(s.duals.iter().sum::<Rational>(), q(5, 2));
    }

    #[test]
    fn equality_and_negative_rhs() {
        // min x + y, x + y = 3, x - y >= -1, x <= 1 -> value 3
        let lp = LinearProgram {
            objective: vec![r(1), r(1)],
            constraints: vec![
                row(&[1, 1], Sense::Eq, 3),
                row(&[1, -1], Sense::Ge, -1),
                row(&[1, 0], Sense::Le, 1),
            ],
        };
        let s = optimal(&lp);
        assert_eq!(s.value, r(3));
        assert_eq!(&s.x[0] + &s.x[1], r(3));
        assert!(&s.x[0] - &s.x[1] >= r(-1));
        // min -x with x - y <= -2 (i.e. y >= x + 2), y <= 5 -> x = 3
        let lp = LinearProgram {
            objective: vec![r(-1), r(0)],
            constraints: vec![row(&[1, -1], Sense::Le, -2), row(&[0, 1], Sense::Le, 5)],
        };
        let s = optimal(&lp);
        assert_eq!(s.x[0], r(3));
        let dual_value: Rational = s.duals.iter().zip([r(-2), r(5)]).map(|(y, b)| y * b).sum();
        assert_eq!(dual_value, s.value);
    }

    #[test]
    fn infeasible_and_unbounded() {
        let lp = LinearProgram {
            objective: vec![r(1)],
            constraints: vec![row(&[1], Sense::Le, 1), row(&[1], Sense::Ge, 2)],
        };
        assert_eq!(lp.solve(), LpOutcome::Infeasible);
        let lp = LinearProgram {
            objective: vec![r(-1), r(0)],
            constraints: vec![row(&[1, -1], Sense::Le, 1)],
        };
        assert_eq!(lp.solve(), LpOutcome::Unbounded);
    }

    #[test]
    fn degenerate_cycling_example() {
        // Beale's example cycles under the textbook rule; Bland terminates.
        let lp = LinearProgram {
            objective: vec![q(-3, 4), r(150), q(-1, 50), r(6)],
            constraints: vec![
                Constraint {
                    coeffs: vec![q(1, 4), r(-60), q(-1, 25), r(9)],
                    sense: Sense::Le,
                    rhs: r(0),
                },
                Constraint {
                    coeffs: vec![q(1, 2), r(-90), q(-1, 50), r(3)],
                    sense: Sense::Le,
                    rhs: r(0),
                },
                Constraint {
                    coeffs: vec![r(0), r(0), r(1), r(0)],
                    sense: Sense::Le,
                    rhs: r(1),
                },
            ],
        };
        let s = optimal(&lp);
        assert_eq!(s.value, q(-1, 20));
    }
}
