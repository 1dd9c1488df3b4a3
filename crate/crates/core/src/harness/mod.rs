//! Corpus-level verification of the inertial bounds and related claims.

mod checks;
mod corpus;
mod report;

pub use checks::{
    check_conjecture1, check_conjecture2, check_corollary1, check_corollary3, check_nordhaus_gaddum,
    check_theorem1, format_ratio, weighted_inertial_bound, CheckConfig, Claim, GraphFacts, SkipReason,
    Verdict, Witness,
};
pub use corpus::{
    enumerate_labeled_graphs, graphs_from_arg, is_family_name, labeled_graph, labeled_graph_count, parse_families, resolve,
    CorpusError, CorpusSpec, FamilySpec, ParamValue, ResolvedCorpus, MAX_EXHAUSTIVE_ORDER,
};
pub use report::{CheckOutcome, OutputFormat, ParseDiagnostic, Report, Tally};

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error("cannot start worker pool: {0}")]
    Pool(String),
}

/// Evaluates `claims` on one graph.
pub fn evaluate(g: &Graph, fallback_name: &str, claims: &[Claim], config: &CheckConfig) -> CheckOutcome {
    let facts = GraphFacts::new(g, *config);
    let verdicts = claims.iter().map(|&c| (c, facts.check(c))).collect();
    let i = facts.inertia();
    CheckOutcome {
        name: g.name().unwrap_or(fallback_name).to_string(),
        order: g.order(),
        n_plus: i.n_plus,
        n_zero: i.n_zero,
        n_minus: i.n_minus,
        chi: facts.known_chi(),
        chi_f: facts.known_chi_f(),
        verdicts,
    }
}

/// Runs every requested check over a corpus. `jobs = 0` uses all cores.
/// Malformed graph6 lines end up as diagnostics, not errors.
pub fn run_corpus(
    spec: &CorpusSpec,
    claims: &[Claim],
    config: &CheckConfig,
    jobs: usize,
) -> Result<Report, HarnessError> {
    let (corpus, diagnostics) = resolve(spec)?;
    let mut claims = claims.to_vec();
    claims.sort();
    claims.dedup();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| HarnessError::Pool(e.to_string()))?;
    let width = corpus.len().max(1).to_string().len();
    let mut outcomes: Vec<CheckOutcome> = pool.install(|| {
        (0..corpus.len())
            .into_par_iter()
            .map(|i| evaluate(&corpus.get(i), &format!("#{i:0width$}"), &claims, config))
            .collect()
    });
    outcomes.sort_by(|a, b| (a.order, &a.name).cmp(&(b.order, &b.name)));
    Ok(Report::new(
        spec.to_string(),
        claims,
        outcomes,
        diagnostics.into_iter().map(Into::into).collect(),
    ))
}
