//! Graph sources for verification runs.
//!
//! A corpus is one of
//! - `exhaustive:N`, all labeled graphs on N vertices (N <= 7),
//! - `file:PATH`, a graph6 file,
//! - `family:SPEC`, parameterized generators.
//!
//! A family spec is a `;`-separated list of `NAME[:key=value,...]` where a
//! value is an integer, an inclusive range `a..b`, or for `multipartite` a
//! `+`-separated list of part sizes. Example:
//! `kneser:p=5..8,k=2;cycle:n=5..9;multipartite:parts=1+2+3;petersen`.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use itertools::Itertools;
use thiserror::Error;

use crate::generators::*;
use crate::graph::Graph;
use crate::graph6::{parse_corpus, Diagnostic};

pub const MAX_EXHAUSTIVE_ORDER: usize = 7;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CorpusError {
    #[error("exhaustive enumeration supports 1..={max} vertices, got {0}", max = MAX_EXHAUSTIVE_ORDER)]
    ExhaustiveOrder(usize),
    #[error("cannot read {path}: {message}")]
    Unreadable { path: String, message: String },
    #[error("bad corpus '{0}': expected exhaustive:N, file:PATH or family:SPEC")]
    BadCorpus(String),
    #[error("bad family spec '{spec}': {message}")]
    BadFamily { spec: String, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorpusSpec {
    Exhaustive(usize),
    File(PathBuf),
    Family(Vec<FamilySpec>),
}

impl fmt::Display for CorpusSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorpusSpec::Exhaustive(n) => write!(f, "exhaustive:{n}"),
            CorpusSpec::File(p) => write!(f, "file:{}", p.display()),
            CorpusSpec::Family(fams) => write!(f, "family:{}", fams.iter().join(";")),
        }
    }
}

impl FromStr for CorpusSpec {
    type Err = CorpusError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (kind, rest) = s.split_once(':').ok_or_else(|| CorpusError::BadCorpus(s.into()))?;
        match kind {
            "exhaustive" => {
                let n = rest.trim().parse().map_err(|_| CorpusError::BadCorpus(s.into()))?;
                if !(1..=MAX_EXHAUSTIVE_ORDER).contains(&n) {
                    return Err(CorpusError::ExhaustiveOrder(n));
                }
                Ok(CorpusSpec::Exhaustive(n))
            }
            "file" if !rest.is_empty() => Ok(CorpusSpec::File(PathBuf::from(rest))),
            "family" => parse_families(rest).map(CorpusSpec::Family),
            _ => Err(CorpusError::BadCorpus(s.into())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamValue {
    Range(usize, usize),
    Parts(Vec<usize>),
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Range(a, b) if a == b => write!(f, "{a}"),
            ParamValue::Range(a, b) => write!(f, "{a}..{b}"),
            ParamValue::Parts(p) => write!(f, "{}", p.iter().join("+")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub name: String,
    pub params: BTreeMap<String, ParamValue>,
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)?;
        if !self.params.is_empty() {
            let body = self.params.iter().map(|(k, v)| format!("{k}={v}")).join(",");
            write!(f, ":{body}")?;
        }
        Ok(())
    }
}

/// Known families and their parameter names.
const FAMILIES: &[(&str, &[&str])] = &[
    ("complete", &["n"]),
    ("cycle", &["n"]),
    ("path", &["n"]),
    ("empty", &["n"]),
    ("barbell", &["n"]),
    ("kneser", &["p", "k"]),
    ("gpetersen", &["n", "k"]),
    ("multipartite", &["parts"]),
    ("cycle-pair", &["n"]),
    ("petersen", &[]),
];

pub fn is_family_name(name: &str) -> bool {
    FAMILIES.iter().any(|(f, _)| *f == name)
}

pub fn parse_families(spec: &str) -> Result<Vec<FamilySpec>, CorpusError> {
    let bad = |message: String| CorpusError::BadFamily {
        spec: spec.to_string(),
        message,
    };
    let mut out = Vec::new();
    for item in spec.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let (name, body) = item.split_once(':').unwrap_or((item, ""));
        let name = name.trim().to_ascii_lowercase();
        let (_, keys) = FAMILIES
            .iter()
            .find(|(f, _)| *f == name)
            .ok_or_else(|| bad(format!("unknown family '{name}'")))?;
        let mut params = BTreeMap::new();
        for kv in body.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (k, v) = kv.split_once('=').ok_or_else(|| bad(format!("expected key=value, got '{kv}'")))?;
            let k = k.trim();
            if !keys.contains(&k) {
                return Err(bad(format!("family '{name}' has no parameter '{k}'")));
            }
            let value = if k == "parts" {
                let parts: Result<Vec<usize>, _> = v.split('+').map(|p| p.trim().parse()).collect();
                ParamValue::Parts(parts.map_err(|_| bad(format!("bad part list '{v}'")))?)
            } else {
                parse_range(v).ok_or_else(|| bad(format!("bad value '{v}'")))?
            };
            params.insert(k.to_string(), value);
        }
        if let Some(missing) = keys.iter().find(|k| !params.contains_key(**k)) {
            return Err(bad(format!("family '{name}' needs parameter '{missing}'")));
        }
        out.push(FamilySpec { name, params });
    }
    if out.is_empty() {
        return Err(bad("no families given".into()));
    }
    Ok(out)
}

fn parse_range(v: &str) -> Option<ParamValue> {
    let v = v.trim();
    match v.split_once("..") {
        Some((a, b)) => {
            let a: usize = a.trim().parse().ok()?;
            let b: usize = b.trim().trim_start_matches('=').parse().ok()?;
            (a <= b).then_some(ParamValue::Range(a, b))
        }
        None => v.parse().ok().map(|n| ParamValue::Range(n, n)),
    }
}

impl FamilySpec {
    fn range(&self, key: &str) -> std::ops::RangeInclusive<usize> {
        match self.params.get(key) {
            Some(ParamValue::Range(a, b)) => *a..=*b,
            _ => 1..=0,
        }
    }

    /// Instantiates every parameter combination. Combinations the generator
    /// rejects (e.g. `p < 2k` for Kneser graphs) are skipped.
    pub fn graphs(&self) -> Vec<Graph> {
        let one = |r: std::ops::RangeInclusive<usize>, f: fn(usize) -> Result<Graph, _>| -> Vec<Graph> {
            r.filter_map(|n| f(n).ok()).collect()
        };
        let two = |a: &str, b: &str, f: fn(usize, usize) -> Result<Graph, _>| -> Vec<Graph> {
            self.range(a)
                .cartesian_product(self.range(b))
                .filter_map(|(x, y)| f(x, y).ok())
                .collect()
        };
        match self.name.as_str() {
            "complete" => one(self.range("n"), gen_complete),
            "cycle" => one(self.range("n"), gen_cycle),
            "path" => one(self.range("n"), gen_path),
            "empty" => one(self.range("n"), Graph::empty),
            "barbell" => one(self.range("n"), gen_barbell),
            "cycle-pair" => self
                .range("n")
                .filter_map(|n| gen_cycle(n).ok())
                .map(|c| c.disjoint_union(&c))
                .collect(),
            "kneser" => two("p", "k", gen_kneser),
            "gpetersen" => two("n", "k", gen_generalized_petersen),
            "multipartite" => match self.params.get("parts") {
                Some(ParamValue::Parts(p)) => gen_complete_multipartite(p).into_iter().collect(),
                _ => Vec::new(),
            },
            "petersen" => vec![petersen()],
            _ => Vec::new(),
        }
    }
}

/// All labeled graphs on `n` vertices, the `i`-th having edge `j` (in
/// column order (0,1), (0,2), (1,2), (0,3), ...) iff bit `j` of `i` is set.
pub fn enumerate_labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>, CorpusError> {
    if !(1..=MAX_EXHAUSTIVE_ORDER).contains(&n) {
        return Err(CorpusError::ExhaustiveOrder(n));
    }
    let count = 1u64 << (n * (n - 1) / 2);
    Ok((0..count).map(move |i| labeled_graph(n, i)))
}

pub fn labeled_graph_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// The `index`-th labeled graph on `n` vertices.
pub fn labeled_graph(n: usize, index: u64) -> Graph {
    let mut g = Graph::empty(n).expect("n >= 1");
    let mut bit = 0;
    for v in 1..n {
        for u in 0..v {
            if index >> bit & 1 == 1 {
                g.add_edge(u, v).expect("valid edge");
            }
            bit += 1;
        }
    }
    let width = (labeled_graph_count(n) - 1).max(1).to_string().len();
    g.with_name(format!("L{n}-{index:0width$}"))
}

/// A corpus resolved to something the runner can index.
pub enum ResolvedCorpus {
    Exhaustive(usize),
    Graphs(Vec<Graph>),
}

impl ResolvedCorpus {
    pub fn len(&self) -> usize {
        match self {
            ResolvedCorpus::Exhaustive(n) => labeled_graph_count(*n) as usize,
            ResolvedCorpus::Graphs(g) => g.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, i: usize) -> Graph {
        match self {
            ResolvedCorpus::Exhaustive(n) => labeled_graph(*n, i as u64),
            ResolvedCorpus::Graphs(g) => g[i].clone(),
        }
    }
}

pub fn resolve(spec: &CorpusSpec) -> Result<(ResolvedCorpus, Vec<Diagnostic>), CorpusError> {
    match spec {
        CorpusSpec::Exhaustive(n) => Ok((ResolvedCorpus::Exhaustive(*n), Vec::new())),
        CorpusSpec::File(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| CorpusError::Unreadable {
                path: path.display().to_string(),
                message: e.to_string(),
            })?;
            let label = path.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            let (graphs, diags) = parse_corpus(&text, &label);
            Ok((ResolvedCorpus::Graphs(graphs), diags))
        }
        CorpusSpec::Family(fams) => {
            let graphs = fams.iter().flat_map(FamilySpec::graphs).collect();
            Ok((ResolvedCorpus::Graphs(graphs), Vec::new()))
        }
    }
}

/// Graphs named by a command-line argument: `@PATH` reads a graph6 file,
/// a family spec (`cycle:n=5..7`, `petersen`) instantiates generators, and
/// anything else is parsed as a single graph6 string.
pub fn graphs_from_arg(arg: &str) -> Result<(Vec<Graph>, Vec<Diagnostic>), String> {
    let arg = arg.trim();
    if let Some(path) = arg.strip_prefix('@') {
        let (corpus, diags) = resolve(&CorpusSpec::File(PathBuf::from(path))).map_err(|e| e.to_string())?;
        let ResolvedCorpus::Graphs(graphs) = corpus else {
            unreachable!("file corpora resolve to graph lists")
        };
        return Ok((graphs, diags));
    }
    let head = arg.split(':').next().unwrap_or_default().to_ascii_lowercase();
    if arg.contains(':') || is_family_name(&head) {
        let fams = parse_families(arg).map_err(|e| e.to_string())?;
        let graphs: Vec<Graph> = fams.iter().flat_map(FamilySpec::graphs).collect();
        if graphs.is_empty() {
            return Err(format!("'{arg}' yields no graphs"));
        }
        return Ok((graphs, Vec::new()));
    }
    let g = crate::graph6::parse_graph6(arg).map_err(|e| format!("'{arg}': {e}"))?;
    Ok((vec![g.with_name(arg.to_string())], Vec::new()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_labeled_graphs(1).unwrap().count(), 1);
        assert_eq!(enumerate_labeled_graphs(3).unwrap().count(), 8);
        assert_eq!(enumerate_labeled_graphs(4).unwrap().count(), 64);
        assert_eq!(enumerate_labeled_graphs(6).unwrap().count(), 32768);
        assert!(enumerate_labeled_graphs(8).is_err());
        assert!(enumerate_labeled_graphs(0).is_err());
    }

    #[test]
    fn enumeration_is_distinct() {
        let graphs: Vec<Graph> = enumerate_labeled_graphs(4).unwrap().collect();
        let set: std::collections::HashSet<_> = graphs.iter().collect();
        assert_eq!(set.len(), 64);
        assert_eq!(graphs[0].edge_count(), 0);
        assert_eq!(graphs[63].edge_count(), 6);
        assert_eq!(graphs[5].name(), Some("L4-05"));
    }

    #[test]
    fn corpus_spec_parsing() {
        assert_eq!("exhaustive:5".parse::<CorpusSpec>().unwrap(), CorpusSpec::Exhaustive(5));
        assert_eq!("exhaustive:9".parse::<CorpusSpec>(), Err(CorpusError::ExhaustiveOrder(9)));
        assert!("nonsense".parse::<CorpusSpec>().is_err());
        let s: CorpusSpec = "family:kneser:p=5..8,k=2;petersen".parse().unwrap();
        assert_eq!(s.to_string(), "family:kneser:k=2,p=5..8;petersen");
    }

    #[test]
    fn family_instantiation() {
        let fams = parse_families("kneser:p=5..8,k=2..3").unwrap();
        // (5,2) (6,2) (6,3) (7,2) (7,3) (8,2) (8,3)
        assert_eq!(fams[0].graphs().len(), 7);
        let fams = parse_families("multipartite:parts=1+2+3;cycle-pair:n=5").unwrap();
        let graphs: Vec<Graph> = fams.iter().flat_map(FamilySpec::graphs).collect();
        assert_eq!(graphs[0].order(), 6);
        assert_eq!(graphs[1].name(), Some("2C5"));
    }

    #[test]
    fn family_errors() {
        assert!(parse_families("dodecahedron").is_err());
        assert!(parse_families("kneser:p=5").is_err());
        assert!(parse_families("cycle:n=9..5").is_err());
        assert!(parse_families("cycle:m=5").is_err());
        assert!(parse_families("").is_err());
    }

    #[test]
    fn graph_arguments() {
        let (g, _) = graphs_from_arg("C~").unwrap();
        assert_eq!(g[0].edge_count(), 6);
        let (g, _) = graphs_from_arg("petersen").unwrap();
        assert_eq!(g[0].order(), 10);
        let (g, _) = graphs_from_arg("cycle:n=5..7").unwrap();
        assert_eq!(g.len(), 3);
        assert!(graphs_from_arg("kneser:p=3,k=2").is_err());
        assert!(graphs_from_arg("C").is_err());
        assert!(graphs_from_arg("@/nonexistent/file.g6").is_err());
    }

    #[test]
    fn file_diagnostics() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.g6");
        std::fs::write(&path, "# comment\nC~\nnot graph6\nDhc\n").unwrap();
        let (corpus, diags) = resolve(&CorpusSpec::File(path)).unwrap();
        assert_eq!(corpus.len(), 2);
        assert_eq!(diags.len(), 1);
        assert_eq!(diags[0].line, 3);
        let missing = CorpusSpec::File(dir.path().join("missing.g6"));
        assert!(matches!(resolve(&missing), Err(CorpusError::Unreadable { .. })));
    }
}
