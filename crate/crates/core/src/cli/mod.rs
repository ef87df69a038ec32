//! Command-line front end. Machine-readable JSON goes to standard output, one
//! document per line; human-readable renderings go to standard error.
//!
//! Exit codes: 0 success, 1 failed verification, 2 bad input, 3 guard limit.

mod scan;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::binom::{buchberger, max_variable_index, parse_binomial, MonomialOrder};
use crate::depth::verify::verify_family;
use crate::depth::{depth_report, DepthOptions};
use crate::error::{Error, Result};
use crate::graph::{encode_graph6, format_edge_list, parse_edge_list, parse_graph6, DegreeVector, Graph};
use crate::homology::{reduced_homology_dims, FieldChoice, SimplicialComplex};
use crate::monomial::{betti_gpw, betti_table_with, MonomialIdeal, DEFAULT_LATTICE_GUARD};
use crate::semigroup::{delta_complex, DEFAULT_EDGE_GUARD};
use crate::toric::toric_ideal;

pub use scan::{scan, ScanRecord, ScanStatus, ScanSummary};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

/// Environment variable giving the default number of worker threads.
pub const JOBS_ENV: &str = "EDGERING_JOBS";

#[derive(Parser, Debug)]
#[command(name = "edgering", version, about = "Depth and Krull dimension of edge rings of graphs")]
struct Cli {
    /// Worker threads (default: $EDGERING_JOBS, else all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Edge-list file: header `d r`, then one `i j` pair per line.
    #[arg(long, value_name = "FILE")]
    edges: Option<PathBuf>,
    /// A graph6 record.
    #[arg(long, value_name = "STR")]
    g6: Option<String>,
    /// The graph G_{k+6} of the family.
    #[arg(long, value_name = "K")]
    family: Option<usize>,
}

impl GraphInput {
    fn load(&self) -> Result<Graph> {
        if let Some(path) = &self.edges {
            parse_edge_list(&read(path)?)
        } else if let Some(s) = &self.g6 {
            parse_graph6(s)
        } else if let Some(k) = self.family {
            Graph::family(k)
        } else {
            Err(Error::InvalidParameter("no graph given".into()))
        }
    }
}

#[derive(Args, Debug, Clone)]
struct Algebra {
    /// Monomial order on the edge variables: lex or grevlex.
    #[arg(long, default_value = "lex")]
    order: MonomialOrder,
    /// Homology field: q or fp:P.
    #[arg(long, default_value = "q")]
    field: FieldChoice,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print G_{k+6}.
    GenFamily {
        #[arg(long)]
        k: usize,
        /// Output format: edges or g6.
        #[arg(long, default_value = "edges")]
        format: String,
    },
    /// Print the graph with depth f and Krull dimension d.
    GenTheorem {
        #[arg(long)]
        f: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value = "edges")]
        format: String,
    },
    /// Reduced Gröbner basis of the toric ideal.
    Toric {
        #[command(flatten)]
        graph: GraphInput,
        #[command(flatten)]
        alg: Algebra,
    },
    /// Reduced Gröbner basis of binomials read one per line, e.g. `x1*x3 - x2^2`.
    Groebner {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        /// Number of variables (default: largest index used).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value = "lex")]
        order: MonomialOrder,
    },
    /// Minimal generators of the initial ideal of the toric ideal.
    Initial {
        #[command(flatten)]
        graph: GraphInput,
        #[command(flatten)]
        alg: Algebra,
    },
    /// Multigraded Betti numbers of a monomial ideal (one monomial per line).
    Betti {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value = "q")]
        field: FieldChoice,
        /// Use the lcm-lattice order-complex route.
        #[arg(long)]
        gpw: bool,
        #[arg(long, default_value_t = DEFAULT_LATTICE_GUARD)]
        lattice_guard: usize,
    },
    /// Facets and homology of Δ_s.
    Delta {
        #[command(flatten)]
        graph: GraphInput,
        /// Degree vector, comma separated.
        #[arg(long)]
        s: String,
        #[arg(long, default_value = "q")]
        field: FieldChoice,
        #[arg(long, default_value_t = DEFAULT_EDGE_GUARD)]
        edge_guard: usize,
    },
    /// Reduced homology of the complex spanned by facets, one per line.
    Homology {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, default_value = "q")]
        field: FieldChoice,
    },
    /// Two-sided depth bounds.
    Depth {
        #[command(flatten)]
        graph: GraphInput,
        #[command(flatten)]
        alg: Algebra,
        #[arg(long, default_value_t = DEFAULT_EDGE_GUARD)]
        edge_guard: usize,
        #[arg(long, default_value_t = DEFAULT_LATTICE_GUARD)]
        lattice_guard: usize,
        /// Include wall-clock timings in the report.
        #[arg(long)]
        timings: bool,
        /// Do not retry the lower bound under the other order.
        #[arg(long)]
        no_fallback: bool,
    },
    /// Check every computed claim about G_{k+6}.
    VerifyPaper {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "q")]
        field: FieldChoice,
    },
    /// Depth bounds for every connected nonbipartite graph in a graph6 file.
    Scan {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[command(flatten)]
        alg: Algebra,
        #[arg(long, default_value_t = DEFAULT_EDGE_GUARD)]
        edge_guard: usize,
        #[arg(long, default_value_t = DEFAULT_LATTICE_GUARD)]
        lattice_guard: usize,
        #[arg(long)]
        timings: bool,
        #[arg(long)]
        no_fallback: bool,
    },
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::InvalidParameter(format!("{}: {e}", path.display())))
}

fn emit(out: &mut impl Write, value: &impl Serialize) -> Result<()> {
    let line = serde_json::to_string(value).map_err(|e| Error::Parse(e.to_string()))?;
    writeln!(out, "{line}").map_err(|e| Error::InvalidParameter(format!("write failed: {e}")))
}

fn render_graph(g: &Graph, format: &str) -> Result<String> {
    match format {
        "edges" => Ok(format_edge_list(g)),
        "g6" => Ok(format!("{}\n", encode_graph6(g))),
        other => Err(Error::InvalidParameter(format!("unknown format {other:?}; expected edges or g6"))),
    }
}

fn configure_jobs(jobs: Option<usize>) {
    let jobs = jobs.or_else(|| std::env::var(JOBS_ENV).ok().and_then(|v| v.parse().ok()));
    if let Some(n) = jobs.filter(|&n| n > 0) {
        // fails only if a pool already exists, e.g. on a second call in-process
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// [`run`] with explicit output streams.
pub fn run_with<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    configure_jobs(cli.jobs);
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_guard() {
                EXIT_GUARD
            } else {
                EXIT_INPUT
            }
        }
    }
}

fn dispatch(command: Command, out: &mut impl Write, err: &mut impl Write) -> Result<i32> {
    match command {
        Command::GenFamily { k, format } => {
            write!(out, "{}", render_graph(&Graph::family(k)?, &format)?).ok();
        }
        Command::GenTheorem { f, d, format } => {
            write!(out, "{}", render_graph(&Graph::theorem_construction(f, d)?, &format)?).ok();
        }
        Command::Toric { graph, alg } => {
            let g = graph.load()?;
            let gb = toric_ideal(&g, &alg.order)?;
            write!(err, "{gb}").ok();
            let elements: Vec<String> = gb.elements.iter().map(ToString::to_string).collect();
            emit(out, &json!({"graph": encode_graph6(&g), "order": alg.order.to_string(), "basis": elements}))?;
        }
        Command::Groebner { input, n, order } => {
            let text = read(&input)?;
            let n = n.unwrap_or_else(|| max_variable_index(&text));
            let gens = text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(|l| parse_binomial(l, n, &order))
                .collect::<Result<Vec<_>>>()?;
            let gb = buchberger(&gens, &order)?;
            write!(err, "{gb}").ok();
            let elements: Vec<String> = gb.elements.iter().map(ToString::to_string).collect();
            emit(out, &json!({"nvars": n, "order": order.to_string(), "basis": elements}))?;
        }
        Command::Initial { graph, alg } => {
            let g = graph.load()?;
            let initial = MonomialIdeal::initial_ideal(&toric_ideal(&g, &alg.order)?)?;
            writeln!(err, "{initial}").ok();
            let gens: Vec<String> = initial.gens().iter().map(ToString::to_string).collect();
            emit(out, &json!({"graph": encode_graph6(&g), "order": alg.order.to_string(), "generators": gens}))?;
        }
        Command::Betti { input, n, field, gpw, lattice_guard } => {
            let text = read(&input)?;
            let n = n.unwrap_or_else(|| max_variable_index(&text));
            let ideal = MonomialIdeal::parse(&text, n)?;
            let table = if gpw { betti_gpw(&ideal, field)? } else { betti_table_with(&ideal, field, lattice_guard)? };
            write!(err, "{table}").ok();
            emit(out, &json!({"nvars": n, "field": field.to_string(), "pd": table.pd(), "betti": table.triples()}))?;
        }
        Command::Delta { graph, s, field, edge_guard } => {
            let g = graph.load()?;
            let s = DegreeVector::parse(&s)?;
            let delta = delta_complex(&g, &s, edge_guard)?;
            let h = reduced_homology_dims(&delta.complex, field);
            writeln!(err, "{}", delta.complex).ok();
            emit(
                out,
                &json!({"graph": encode_graph6(&g), "s": s, "facets": delta.facets(), "dim": delta.complex.dim(),
                        "field": field.to_string(), "reduced_homology": h.0}),
            )?;
        }
        Command::Homology { input, field } => {
            let text = read(&input)?;
            let facets = parse_facets(&text)?;
            let mut vertices: Vec<u32> = facets.iter().flatten().copied().collect();
            vertices.sort_unstable();
            vertices.dedup();
            let c = SimplicialComplex::from_facets(vertices, &facets);
            let h = reduced_homology_dims(&c, field);
            writeln!(err, "{c}").ok();
            emit(out, &json!({"f_vector": c.f_vector(), "field": field.to_string(), "reduced_homology": h.0}))?;
        }
        Command::Depth { graph, alg, edge_guard, lattice_guard, timings, no_fallback } => {
            let g = graph.load()?;
            let opts = DepthOptions {
                order: alg.order,
                field: alg.field,
                edge_guard,
                lattice_guard,
                timings,
                fallback: !no_fallback,
            };
            let report = depth_report(&g, &opts)?;
            writeln!(
                err,
                "krull dim {}, depth in [{}, {}]{}",
                report.krull_dim,
                report.depth_lower,
                report.depth_upper,
                if report.exact { " (exact)" } else { "" }
            )
            .ok();
            emit(out, &report)?;
        }
        Command::VerifyPaper { k, field } => {
            let opts = DepthOptions { field, ..DepthOptions::default() };
            let v = verify_family(k, &opts)?;
            for c in &v.checks {
                writeln!(err, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail).ok();
            }
            emit(out, &json!({"k": v.k, "passed": v.passed(), "depth": v.depth, "krull_dim": v.krull_dim, "checks": v.checks}))?;
            return Ok(if v.passed() { EXIT_OK } else { EXIT_FAILED });
        }
        Command::Scan { input, alg, edge_guard, lattice_guard, timings, no_fallback } => {
            let text = read(&input)?;
            let opts = DepthOptions {
                order: alg.order,
                field: alg.field,
                edge_guard,
                lattice_guard,
                timings,
                fallback: !no_fallback,
            };
            let summary = scan(&text, &opts, |rec| emit(&mut *out, rec))?;
            writeln!(
                err,
                "{} graphs scanned, {} exact, {} inexact, {} skipped, min lower bound {}",
                summary.processed,
                summary.exact,
                summary.inexact,
                summary.guard_skipped + summary.errors,
                summary.min_depth_lower.map_or("-".to_string(), |v| v.to_string())
            )
            .ok();
            emit(out, &json!({ "summary": summary }))?;
        }
    }
    Ok(EXIT_OK)
}

fn parse_facets(text: &str) -> Result<Vec<Vec<u32>>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.starts_with('#') && !l.is_empty())
        .map(|l| {
            let mut f = l
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<u32>().map_err(|_| Error::Parse(format!("bad vertex {t:?}"))))
                .collect::<Result<Vec<u32>>>()?;
            f.sort_unstable();
            f.dedup();
            Ok(f)
        })
        .collect()
}

