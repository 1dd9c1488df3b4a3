use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use super::checks::{format_ratio, serialize_ratio, Claim, Verdict};
use crate::graph6::Diagnostic;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub order: usize,
    pub n_plus: usize,
    pub n_zero: usize,
    pub n_minus: usize,
    pub chi: Option<usize>,
    #[serde(serialize_with = "serialize_ratio")]
    pub chi_f: Option<Rational>,
    pub verdicts: BTreeMap<Claim, Verdict>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub holds: usize,
    pub holds_with_equality: usize,
    pub violated: usize,
    pub skipped: usize,
}

impl Tally {
    fn add(&mut self, v: &Verdict) {
        match v {
            Verdict::Holds { .. } => self.holds += 1,
            Verdict::HoldsWithEquality { .. } => self.holds_with_equality += 1,
            Verdict::Violated { .. } => self.violated += 1,
            Verdict::Skipped { .. } => self.skipped += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.holds + self.holds_with_equality + self.violated + self.skipped
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParseDiagnostic {
    pub line: usize,
    pub message: String,
}

impl From<Diagnostic> for ParseDiagnostic {
    fn from(d: Diagnostic) -> Self {
        ParseDiagnostic {
            line: d.line,
            message: d.message,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub corpus: String,
    pub claims: Vec<Claim>,
    pub outcomes: Vec<CheckOutcome>,
    pub summary: BTreeMap<Claim, Tally>,
    pub diagnostics: Vec<ParseDiagnostic>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "text" => Ok(OutputFormat::Text),
            _ => Err(format!("unknown format '{s}'")),
        }
    }
}

fn tally(claims: &[Claim], outcomes: &[CheckOutcome]) -> BTreeMap<Claim, Tally> {
    let mut summary: BTreeMap<Claim, Tally> = claims.iter().map(|&c| (c, Tally::default())).collect();
    for o in outcomes {
        for (c, v) in &o.verdicts {
            summary.entry(*c).or_default().add(v);
        }
    }
    summary
}

impl Report {
    pub fn new(
        corpus: String,
        claims: Vec<Claim>,
        outcomes: Vec<CheckOutcome>,
        diagnostics: Vec<ParseDiagnostic>,
    ) -> Self {
        let summary = tally(&claims, &outcomes);
        Report {
            corpus,
            claims,
            outcomes,
            summary,
            diagnostics,
        }
    }

    pub fn violations(&self) -> usize {
        self.summary.values().map(|t| t.violated).sum()
    }

    /// Summary counts agree with the outcome list.
    pub fn is_consistent(&self) -> bool {
        self.summary == tally(&self.claims, &self.outcomes)
    }

    pub fn violated_outcomes(&self) -> impl Iterator<Item = (&CheckOutcome, Claim, &Verdict)> {
        self.outcomes.iter().flat_map(|o| {
            o.verdicts
                .iter()
                .filter(|(_, v)| v.is_violation())
                .map(move |(c, v)| (o, *c, v))
        })
    }

    pub fn render(&self, format: OutputFormat) -> Result<String, String> {
        match format {
            OutputFormat::Json => serde_json::to_string_pretty(self)
                .map(|s| s + "\n")
                .map_err(|e| e.to_string()),
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Text => Ok(self.to_text()),
        }
    }

    fn to_csv(&self) -> Result<String, String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header: Vec<String> = ["name", "order", "n_plus", "n_zero", "n_minus", "chi", "chi_f"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        header.extend(self.claims.iter().map(|c| c.id().to_string()));
        w.write_record(&header).map_err(|e| e.to_string())?;
        for o in &self.outcomes {
            let mut row = vec![
                o.name.clone(),
                o.order.to_string(),
                o.n_plus.to_string(),
                o.n_zero.to_string(),
                o.n_minus.to_string(),
                o.chi.map(|c| c.to_string()).unwrap_or_default(),
                o.chi_f.as_ref().map(format_ratio).unwrap_or_default(),
            ];
            row.extend(
                self.claims
                    .iter()
                    .map(|c| o.verdicts.get(c).map(|v| v.to_string()).unwrap_or_default()),
            );
            w.write_record(&row).map_err(|e| e.to_string())?;
        }
        let bytes = w.into_inner().map_err(|e| e.to_string())?;
        String::from_utf8(bytes).map_err(|e| e.to_string())
    }

    fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "corpus: {}", self.corpus);
        let _ = writeln!(s, "graphs: {}", self.outcomes.len());
        for d in &self.diagnostics {
            let _ = writeln!(s, "parse error, line {}: {}", d.line, d.message);
        }
        let _ = writeln!(
            s,
            "{:<12} {:>8} {:>10} {:>8} {:>8}",
            "claim", "holds", "equality", "violated", "skipped"
        );
        for (c, t) in &self.summary {
            let _ = writeln!(
                s,
                "{:<12} {:>8} {:>10} {:>8} {:>8}",
                c.id(),
                t.holds,
                t.holds_with_equality,
                t.violated,
                t.skipped
            );
        }
        for (o, c, v) in self.violated_outcomes() {
            let kind = if c.is_theorem() { "BUG" } else { "COUNTEREXAMPLE" };
            let detail = v
                .witness()
                .map(|w| w.iter().map(|(k, x)| format!("{k}={x}")).collect::<Vec<_>>().join(" "))
                .unwrap_or_default();
            let _ = writeln!(s, "VIOLATED {} [{kind}] {} (order {}): {detail}", c.id(), o.name, o.order);
        }
        s
    }
}
