//! Per-graph claim checks.

use std::cell::OnceCell;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::bounds::{inertia_cap, inertial_bound};
use crate::chromatic::{
    fractional_chromatic_with, optimal_coloring, ChromaticOptions, FractionalOptions, SolverError,
    DEFAULT_CHIF_ORDER, DEFAULT_SET_CAP, DEFAULT_VERTEX_BUDGET,
};
use crate::graph::Graph;
use crate::inertia::{inertia, inertia_weighted, Inertia, RationalSymMatrix};
use crate::srg::conjecture2_bound;
use crate::Rational;

/// Claims the harness can check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Claim {
    /// `1 + max(n+/n-, n-/n+) <= chi`.
    Theorem1,
    /// `max(n+, n-) <= n(chi - 1)/chi`.
    Corollary1,
    /// The inertial bound for weighted adjacency matrices on the edge pattern.
    Corollary3,
    /// `1 + max(n+/n-, n-/n+) <= chi_f`.
    Conjecture1,
    /// Nordhaus–Gaddum bounds for inertia.
    Theorem3,
    /// `n+ <= n - floor(8(n-1)/(8+n))`.
    Conjecture2,
}

impl Claim {
    pub const ALL: [Claim; 6] = [
        Claim::Theorem1,
        Claim::Corollary1,
        Claim::Corollary3,
        Claim::Conjecture1,
        Claim::Theorem3,
        Claim::Conjecture2,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Claim::Theorem1 => "THEOREM1",
            Claim::Corollary1 => "COROLLARY1",
            Claim::Corollary3 => "COROLLARY3",
            Claim::Conjecture1 => "CONJECTURE1",
            Claim::Theorem3 => "THEOREM3",
            Claim::Conjecture2 => "CONJECTURE2",
        }
    }

    /// Proven statements; a violation means a bug.
    pub fn is_theorem(&self) -> bool {
        !matches!(self, Claim::Conjecture1 | Claim::Conjecture2)
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Claim {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Claim::ALL
            .into_iter()
            .find(|c| c.id().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| format!("unknown claim '{s}'"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SkipReason {
    Edgeless,
    /// One vertex: neither the graph nor its complement has an edge.
    Trivial,
    VertexBudget,
    SetCap,
    Solver(String),
}

impl fmt::Display for SkipReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SkipReason::Edgeless => f.write_str("edgeless"),
            SkipReason::Trivial => f.write_str("trivial"),
            SkipReason::VertexBudget => f.write_str("budget"),
            SkipReason::SetCap => f.write_str("set_cap"),
            SkipReason::Solver(e) => write!(f, "solver: {e}"),
        }
    }
}

impl From<&SolverError> for SkipReason {
    fn from(e: &SolverError) -> Self {
        match e {
            SolverError::BudgetExceeded { .. } => SkipReason::VertexBudget,
            SolverError::SetCapExceeded { .. } => SkipReason::SetCap,
            other => SkipReason::Solver(other.to_string()),
        }
    }
}

/// Named values backing a verdict.
pub type Witness = BTreeMap<String, String>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Holds { witness: Witness },
    HoldsWithEquality { witness: Witness },
    Violated { witness: Witness },
    Skipped { reason: SkipReason },
}

impl Verdict {
    pub fn status(&self) -> &'static str {
        match self {
            Verdict::Holds { .. } => "HOLDS",
            Verdict::HoldsWithEquality { .. } => "HOLDS_WITH_EQUALITY",
            Verdict::Violated { .. } => "VIOLATED",
            Verdict::Skipped { .. } => "SKIPPED",
        }
    }

    pub fn is_violation(&self) -> bool {
        matches!(self, Verdict::Violated { .. })
    }

    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds { .. } | Verdict::HoldsWithEquality { .. })
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Holds { witness } | Verdict::HoldsWithEquality { witness } | Verdict::Violated { witness } => {
                Some(witness)
            }
            Verdict::Skipped { .. } => None,
        }
    }

    fn compare(lhs: &Rational, rhs: &Rational, witness: Witness) -> Verdict {
        if lhs > rhs {
            Verdict::Violated { witness }
        } else if lhs == rhs {
            Verdict::HoldsWithEquality { witness }
        } else {
            Verdict::Holds { witness }
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Skipped { reason } => write!(f, "SKIPPED({reason})"),
            other => f.write_str(other.status()),
        }
    }
}

/// Formats a rational as `p/q`, always with an explicit denominator.
pub fn format_ratio(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn serialize_ratio<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&format_ratio(r)),
        None => s.serialize_none(),
    }
}

fn int(n: usize) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn witness<const N: usize>(pairs: [(&str, String); N]) -> Witness {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckConfig {
    pub vertex_budget: usize,
    pub chif_max_order: usize,
    pub set_cap: usize,
    pub corollary3_trials: usize,
    pub seed: u64,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            vertex_budget: DEFAULT_VERTEX_BUDGET,
            chif_max_order: DEFAULT_CHIF_ORDER,
            set_cap: DEFAULT_SET_CAP,
            corollary3_trials: 100,
            seed: 0,
        }
    }
}

/// Lazily computed invariants of one graph, shared between claims.
pub struct GraphFacts<'g> {
    pub graph: &'g Graph,
    config: CheckConfig,
    inertia: OnceCell<Inertia>,
    complement_inertia: OnceCell<Inertia>,
    chi: OnceCell<Result<usize, SolverError>>,
    chi_f: OnceCell<Result<Rational, SolverError>>,
}

impl<'g> GraphFacts<'g> {
    pub fn new(graph: &'g Graph, config: CheckConfig) -> Self {
        GraphFacts {
            graph,
            config,
            inertia: OnceCell::new(),
            complement_inertia: OnceCell::new(),
            chi: OnceCell::new(),
            chi_f: OnceCell::new(),
        }
    }

    pub fn inertia(&self) -> Inertia {
        *self.inertia.get_or_init(|| inertia(self.graph))
    }

    pub fn complement_inertia(&self) -> Inertia {
        *self.complement_inertia.get_or_init(|| inertia(&self.graph.complement()))
    }

    /// Chromatic number from the plain search: the bounds under test are
    /// never used for pruning here.
    pub fn chi(&self) -> Result<usize, SolverError> {
        self.chi
            .get_or_init(|| {
                let opts = ChromaticOptions {
                    vertex_budget: self.config.vertex_budget,
                    spectral_pruning: false,
                };
                optimal_coloring(self.graph, &opts).map(|c| c.num_colors)
            })
            .clone()
    }

    pub fn chi_f(&self) -> Result<Rational, SolverError> {
        self.chi_f
            .get_or_init(|| {
                let opts = FractionalOptions {
                    max_order: self.config.chif_max_order,
                    set_cap: self.config.set_cap,
                };
                fractional_chromatic_with(self.graph, &opts).map(|c| c.value)
            })
            .clone()
    }

    /// Whether the chromatic number has been computed successfully.
    pub fn known_chi(&self) -> Option<usize> {
        self.chi.get().and_then(|r| r.as_ref().ok().copied())
    }

    pub fn known_chi_f(&self) -> Option<Rational> {
        self.chi_f.get().and_then(|r| r.as_ref().ok().cloned())
    }

    pub fn check(&self, claim: Claim) -> Verdict {
        match claim {
            Claim::Theorem1 => self.theorem1(),
            Claim::Corollary1 => self.corollary1(),
            Claim::Corollary3 => self.corollary3(),
            Claim::Conjecture1 => self.conjecture1(),
            Claim::Theorem3 => self.theorem3(),
            Claim::Conjecture2 => self.conjecture2(),
        }
    }

    fn theorem1(&self) -> Verdict {
        let i = self.inertia();
        let Ok(bound) = inertial_bound(i) else {
            return Verdict::Skipped { reason: SkipReason::Edgeless };
        };
        let chi = match self.chi() {
            Ok(c) => c,
            Err(e) => return Verdict::Skipped { reason: (&e).into() },
        };
        let w = witness([
            ("inertia", i.to_string()),
            ("bound", format_ratio(&bound)),
            ("chi", chi.to_string()),
        ]);
        Verdict::compare(&bound, &int(chi), w)
    }

    fn corollary1(&self) -> Verdict {
        let i = self.inertia();
        if self.graph.is_edgeless() {
            return Verdict::Skipped { reason: SkipReason::Edgeless };
        }
        let chi = match self.chi() {
            Ok(c) => c,
            Err(e) => return Verdict::Skipped { reason: (&e).into() },
        };
        let largest = int(i.n_plus.max(i.n_minus));
        let cap = inertia_cap(i, chi);
        let w = witness([
            ("inertia", i.to_string()),
            ("max_n_plus_n_minus", largest.to_string()),
            ("cap", format_ratio(&cap)),
            ("chi", chi.to_string()),
        ]);
        Verdict::compare(&largest, &cap, w)
    }

    fn conjecture1(&self) -> Verdict {
        let i = self.inertia();
        let Ok(bound) = inertial_bound(i) else {
            return Verdict::Skipped { reason: SkipReason::Edgeless };
        };
        let chi_f = match self.chi_f() {
            Ok(c) => c,
            Err(e) => return Verdict::Skipped { reason: (&e).into() },
        };
        let w = witness([
            ("inertia", i.to_string()),
            ("bound", format_ratio(&bound)),
            ("chi_f", format_ratio(&chi_f)),
        ]);
        Verdict::compare(&bound, &chi_f, w)
    }

    fn theorem3(&self) -> Verdict {
        let n = self.graph.order();
        if n < 2 {
            return Verdict::Skipped { reason: SkipReason::Trivial };
        }
        let g = self.inertia();
        let c = self.complement_inertia();
        let plus = g.n_plus + c.n_plus;
        let zero = g.n_zero + c.n_zero;
        let minus = g.n_minus + c.n_minus;
        let w = witness([
            ("inertia", g.to_string()),
            ("complement_inertia", c.to_string()),
            ("n_plus_sum", plus.to_string()),
            ("n_zero_sum", zero.to_string()),
            ("n_minus_sum", minus.to_string()),
        ]);
        let ok = (1..=n + 1).contains(&plus) && zero <= n && minus + 1 >= n;
        if ok {
            Verdict::Holds { witness: w }
        } else {
            Verdict::Violated { witness: w }
        }
    }

    fn conjecture2(&self) -> Verdict {
        let i = self.inertia();
        let cap = conjecture2_bound(self.graph.order());
        let w = witness([("n_plus", i.n_plus.to_string()), ("bound", cap.to_string())]);
        Verdict::compare(&int(i.n_plus), &int(cap), w)
    }

    fn corollary3(&self) -> Verdict {
        if self.graph.is_edgeless() {
            return Verdict::Skipped { reason: SkipReason::Edgeless };
        }
        let chi = match self.chi() {
            Ok(c) => c,
            Err(e) => return Verdict::Skipped { reason: (&e).into() },
        };
        let mut rng = ChaCha8Rng::seed_from_u64(self.config.seed ^ graph_fingerprint(self.graph));
        let mut best: Option<Rational> = None;
        let edges: Vec<(usize, usize)> = self.graph.edges().collect();
        for trial in 0..self.config.corollary3_trials {
            let weights: Vec<i64> = edges
                .iter()
                .map(|_| {
                    let w = rng.gen_range(1..=3);
                    if rng.gen_bool(0.5) {
                        w
                    } else {
                        -w
                    }
                })
                .collect();
            match weighted_trial(self.graph, &edges, &weights, chi) {
                TrialOutcome::Skipped => {}
                TrialOutcome::Bound(b) => {
                    if b > int(chi) {
                        let detail = edges
                            .iter()
                            .zip(&weights)
                            .map(|((u, v), w)| format!("{u}-{v}:{w}"))
                            .collect::<Vec<_>>()
                            .join(" ");
                        return Verdict::Violated {
                            witness: witness([
                                ("trial", trial.to_string()),
                                ("bound", format_ratio(&b)),
                                ("chi", chi.to_string()),
                                ("weights", detail),
                            ]),
                        };
                    }
                    if best.as_ref().is_none_or(|cur| b > *cur) {
                        best = Some(b);
                    }
                }
            }
        }
        let w = witness([
            ("trials", self.config.corollary3_trials.to_string()),
            ("max_bound", best.as_ref().map(format_ratio).unwrap_or_else(|| "-".into())),
            ("chi", chi.to_string()),
        ]);
        match best {
            Some(b) if b == int(chi) => Verdict::HoldsWithEquality { witness: w },
            _ => Verdict::Holds { witness: w },
        }
    }
}

enum TrialOutcome {
    Skipped,
    Bound(Rational),
}

fn weighted_trial(g: &Graph, edges: &[(usize, usize)], weights: &[i64], _chi: usize) -> TrialOutcome {
    let n = g.order();
    let mut m = vec![vec![0i64; n]; n];
    for (&(u, v), &w) in edges.iter().zip(weights) {
        m[u][v] = w;
        m[v][u] = w;
    }
    let w = RationalSymMatrix::from_integers(&m).expect("symmetric with zero diagonal");
    let i = inertia_weighted(&w, g).expect("weights follow the edge pattern");
    match inertial_bound(i) {
        Ok(b) => TrialOutcome::Bound(b),
        Err(_) => TrialOutcome::Skipped,
    }
}

/// Inertial bound of a weight assignment on the edges of `g`, or `None` if
/// the weighted matrix lacks positive or negative eigenvalues.
pub fn weighted_inertial_bound(g: &Graph, weights: &[(usize, usize, i64)]) -> Option<Rational> {
    let edges: Vec<(usize, usize)> = weights.iter().map(|&(u, v, _)| (u, v)).collect();
    let w: Vec<i64> = weights.iter().map(|&(_, _, w)| w).collect();
    match weighted_trial(g, &edges, &w, 0) {
        TrialOutcome::Bound(b) => Some(b),
        TrialOutcome::Skipped => None,
    }
}

/// FNV-1a over the edge list, so per-graph random streams do not depend on
/// processing order.
fn graph_fingerprint(g: &Graph) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let mut feed = |x: u64| {
        for b in x.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    };
    feed(g.order() as u64);
    for (u, v) in g.edges() {
        feed(((u as u64) << 32) | v as u64);
    }
    h
}

pub fn check_theorem1(g: &Graph) -> Verdict {
    GraphFacts::new(g, CheckConfig::default()).check(Claim::Theorem1)
}

pub fn check_corollary1(g: &Graph) -> Verdict {
    GraphFacts::new(g, CheckConfig::default()).check(Claim::Corollary1)
}

pub fn check_conjecture1(g: &Graph) -> Verdict {
    GraphFacts::new(g, CheckConfig::default()).check(Claim::Conjecture1)
}

pub fn check_nordhaus_gaddum(g: &Graph) -> Verdict {
    GraphFacts::new(g, CheckConfig::default()).check(Claim::Theorem3)
}

pub fn check_conjecture2(g: &Graph) -> Verdict {
    GraphFacts::new(g, CheckConfig::default()).check(Claim::Conjecture2)
}

pub fn check_corollary3(g: &Graph, trials: usize, seed: u64) -> Verdict {
    let config = CheckConfig {
        corollary3_trials: trials,
        seed,
        ..CheckConfig::default()
    };
    GraphFacts::new(g, config).check(Claim::Corollary3)
}
