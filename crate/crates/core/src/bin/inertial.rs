use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use inertial::bounds::{hoffman_bound, hoffman_full_chi, inertial_bound};
use inertial::chromatic::{
    fractional_chromatic_with, independence_number, optimal_coloring, ChromaticOptions, FractionalOptions,
    DEFAULT_CHIF_ORDER, DEFAULT_SET_CAP, DEFAULT_VERTEX_BUDGET,
};
use inertial::harness::{format_ratio, graphs_from_arg, run_corpus, CheckConfig, Claim, CorpusSpec, OutputFormat};
use inertial::inertia::graph_char_poly;
use inertial::spectrum::{numeric_spectrum, DEFAULT_TOL};
use inertial::srg::{srg_chif_lower, srg_complement_params, srg_inertia, srg_multiplicities, SrgParams};
use inertial::{inertia, Graph};

#[derive(Parser)]
#[command(name = "inertial", version, about = "Exact graph inertia and inertial chromatic bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print n+ n0 n- for each graph.
    Inertia {
        /// graph6 string, @FILE of graph6 lines, or a family spec such as cycle:n=5..9
        graph: String,
        /// Also print the characteristic polynomial.
        #[arg(long)]
        charpoly: bool,
    },
    /// Spectral lower bounds next to chi and chi_f.
    Bounds {
        graph: String,
        #[arg(long, default_value_t = DEFAULT_VERTEX_BUDGET)]
        budget: usize,
        #[arg(long, default_value_t = DEFAULT_CHIF_ORDER)]
        chif_max_order: usize,
    },
    /// Chromatic number.
    Chi {
        graph: String,
        #[arg(long, default_value_t = DEFAULT_VERTEX_BUDGET)]
        budget: usize,
    },
    /// Fractional chromatic number.
    Chif {
        graph: String,
        #[arg(long, default_value_t = DEFAULT_CHIF_ORDER)]
        max_order: usize,
        #[arg(long, default_value_t = DEFAULT_SET_CAP)]
        set_cap: usize,
    },
    /// Independence number.
    Alpha { graph: String },
    /// Check claims over a corpus.
    Verify {
        /// Comma-separated: theorem1,corollary1,corollary3,conjecture1,theorem3,conjecture2
        #[arg(long, value_delimiter = ',', required = true)]
        claims: Vec<Claim>,
        /// exhaustive:N, file:PATH or family:SPEC
        #[arg(long)]
        corpus: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads, 0 for all cores.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, default_value = "text")]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Random weightings per graph for corollary3.
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_VERTEX_BUDGET)]
        budget: usize,
        #[arg(long, default_value_t = DEFAULT_CHIF_ORDER)]
        chif_max_order: usize,
    },
    /// Strongly regular parameter arithmetic.
    Srg {
        n: i64,
        k: i64,
        lambda: i64,
        mu: i64,
    },
}

fn load(arg: &str) -> Result<Vec<Graph>, String> {
    let (graphs, diags) = graphs_from_arg(arg)?;
    for d in diags {
        eprintln!("line {}: {}", d.line, d.message);
    }
    Ok(graphs)
}

fn label(g: &Graph) -> String {
    g.name().map(str::to_string).unwrap_or_else(|| format!("order-{}", g.order()))
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Inertia { graph, charpoly } => {
            for g in load(&graph)? {
                let i = inertia(&g);
                println!("{}\t{} {} {}", label(&g), i.n_plus, i.n_zero, i.n_minus);
                if charpoly {
                    println!("\t{}", graph_char_poly(&g));
                }
            }
        }
        Command::Bounds {
            graph,
            budget,
            chif_max_order,
        } => {
            for g in load(&graph)? {
                print_bounds(&g, budget, chif_max_order);
            }
        }
        Command::Chi { graph, budget } => {
            let opts = ChromaticOptions {
                vertex_budget: budget,
                ..ChromaticOptions::default()
            };
            for g in load(&graph)? {
                let c = optimal_coloring(&g, &opts).map_err(|e| format!("{}: {e}", label(&g)))?;
                println!("{}\t{}", label(&g), c.num_colors);
            }
        }
        Command::Chif {
            graph,
            max_order,
            set_cap,
        } => {
            let opts = FractionalOptions { max_order, set_cap };
            for g in load(&graph)? {
                let c = fractional_chromatic_with(&g, &opts).map_err(|e| format!("{}: {e}", label(&g)))?;
                println!("{}\t{}", label(&g), format_ratio(&c.value));
            }
        }
        Command::Alpha { graph } => {
            for g in load(&graph)? {
                let a = independence_number(&g).map_err(|e| format!("{}: {e}", label(&g)))?;
                println!("{}\t{a}", label(&g));
            }
        }
        Command::Verify {
            claims,
            corpus,
            seed,
            jobs,
            format,
            out,
            trials,
            budget,
            chif_max_order,
        } => {
            let spec: CorpusSpec = corpus.parse().map_err(|e| format!("{e}"))?;
            let config = CheckConfig {
                vertex_budget: budget,
                chif_max_order,
                corollary3_trials: trials,
                seed,
                ..CheckConfig::default()
            };
            let report = run_corpus(&spec, &claims, &config, jobs).map_err(|e| e.to_string())?;
            let text = report.render(format)?;
            match out {
                Some(path) => fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))?,
                None => print!("{text}"),
            }
            for (o, c, _) in report.violated_outcomes() {
                let note = if c.is_theorem() {
                    "implementation bug"
                } else {
                    "potential counterexample"
                };
                eprintln!("VIOLATED {c} on {} ({note})", o.name);
            }
            if report.violations() > 0 {
                return Ok(ExitCode::from(2));
            }
        }
        Command::Srg { n, k, lambda, mu } => print_srg(n, k, lambda, mu),
    }
    Ok(ExitCode::SUCCESS)
}

fn print_bounds(g: &Graph, budget: usize, chif_max_order: usize) {
    let i = inertia(g);
    println!("{}", label(g));
    println!("  inertia            {i}");
    match inertial_bound(i) {
        Ok(b) => println!("  inertial bound     {}", format_ratio(&b)),
        Err(e) => println!("  inertial bound     - ({e})"),
    }
    match numeric_spectrum(g, DEFAULT_TOL) {
        Ok(s) => {
            match hoffman_bound(&s) {
                Ok(h) => println!("  hoffman            {h:.6}"),
                Err(e) => println!("  hoffman            - ({e})"),
            }
            match hoffman_full_chi(&s, DEFAULT_TOL) {
                Ok(c) => println!("  full hoffman       {c}"),
                Err(e) => println!("  full hoffman       - ({e})"),
            }
        }
        Err(e) => println!("  spectrum           - ({e})"),
    }
    let opts = ChromaticOptions {
        vertex_budget: budget,
        ..ChromaticOptions::default()
    };
    match optimal_coloring(g, &opts) {
        Ok(c) => println!("  chi                {}", c.num_colors),
        Err(e) => println!("  chi                - ({e})"),
    }
    let fopts = FractionalOptions {
        max_order: chif_max_order,
        ..FractionalOptions::default()
    };
    match fractional_chromatic_with(g, &fopts) {
        Ok(c) => println!("  chi_f              {}", format_ratio(&c.value)),
        Err(e) => println!("  chi_f              - ({e})"),
    }
}

fn print_srg(n: i64, k: i64, lambda: i64, mu: i64) {
    let p = match SrgParams::new(n, k, lambda, mu) {
        Ok(p) => p,
        Err(e) => {
            println!("srg({n},{k},{lambda},{mu}) infeasible: {e}");
            return;
        }
    };
    println!("srg({n},{k},{lambda},{mu}) feasible");
    let (f, g) = srg_multiplicities(&p);
    println!("  multiplicities     f={f} g={g}");
    match srg_complement_params(&p) {
        Ok(c) => println!("  complement         srg({},{},{},{})", c.n(), c.k(), c.lambda(), c.mu()),
        Err(e) => println!("  complement         - ({e})"),
    }
    match srg_inertia(&p) {
        Ok(i) => println!("  inertia            {i}"),
        Err(e) => println!("  inertia            - ({e})"),
    }
    match srg_chif_lower(&p) {
        Ok(b) => println!("  chi_f lower bound  {}", format_ratio(&b)),
        Err(e) => println!("  chi_f lower bound  - ({e})"),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
