//! The `hyperf` command line.
//!
//! Exit codes: 0 success, 1 bad input or I/O, 2 infeasible or not found,
//! 3 budget exhausted, 4 verification failure.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::extremal::{degeneracy, m_value, mad_exact};
use crate::fcalc::{bounds, f_with, find_tset, packing_bound, FMethod};
use crate::hypercore::io::{self, Document};
use crate::hypercore::{generate, Hypergraph};
use crate::orient::{orient_budget, orient_max_outdeg, BudgetOutcome, DegreeBudget};
use crate::ramsey::{b_value, chi_r};
use crate::verify::{verify_suite, VerifySuiteReport, SUITES};
use crate::{DEFAULT_NODE_BUDGET, DEFAULT_ORIENTATION_BUDGET};

pub const EXIT_INPUT: i32 = 1;
pub const EXIT_NOT_FOUND: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "hyperf", version, about = "Orientation invariants of uniform hypergraphs")]
struct Cli {
    /// Print reports as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Search budget (nodes, or orientations for enumeration). Defaults to
    /// $HYPERF_BUDGET, then to the library defaults.
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Print only the headline value.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a generated hypergraph.
    Gen(GenArgs),
    /// Maximum average degree with a densest subset.
    Mad { file: PathBuf },
    /// Degeneracy and an elimination order.
    Degeneracy { file: PathBuf },
    /// Orientation with bounded first-position degrees.
    Orient(OrientArgs),
    /// f(H,p,k).
    F(FArgs),
    /// Ramsey p-chromatic number.
    ChiR {
        file: PathBuf,
        #[arg(long)]
        p: usize,
    },
    /// Largest family of p-sets colorable with C(r,p) colors.
    B {
        file: PathBuf,
        #[arg(long)]
        p: usize,
    },
    /// M(H,k): most vertices covered by r classes inducing max density <= k.
    M {
        file: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Every applicable lower and upper bound on f(H,1,k).
    Bounds {
        file: PathBuf,
        #[arg(long)]
        k: u32,
    },
    /// A t-set all of whose p-subsets qualify in an oriented file.
    Tset {
        file: PathBuf,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        t: usize,
    },
    /// Packing lower bound on f of the complete hypergraph.
    Pack {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        k: u64,
    },
    /// Run a verification suite (or `all`).
    Verify { suite: String },
}

#[derive(Args, Debug)]
struct GenArgs {
    #[command(subcommand)]
    family: Family,
    /// Output file; stdout when absent.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Family {
    /// Complete r-uniform hypergraph.
    Complete {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Complete multipartite graph, e.g. `--parts 7,7,3`.
    Multipartite {
        #[arg(long, value_delimiter = ',', required = true)]
        parts: Vec<usize>,
    },
    /// Disjoint union of cliques, e.g. `--sizes 3,4`.
    Cliques {
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
    },
    /// Maximal outerplanar fan: polygon plus every chord from vertex 0.
    MopFan {
        #[arg(long)]
        n: usize,
    },
    /// Random maximal outerplanar graph.
    Mop {
        #[arg(long)]
        n: usize,
    },
    /// Uniformly random hypergraph with `m` edges.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        m: usize,
    },
    /// Random bipartite graph.
    Bipartite {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
    },
    /// Erdős–Rényi graph.
    Gnp {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
    },
    /// Two copies of a graph joined by all edges between them.
    JoinK2 { file: PathBuf },
    /// Complement of a graph.
    Complement { file: PathBuf },
}

#[derive(Args, Debug)]
struct OrientArgs {
    file: PathBuf,
    /// Uniform bound on first-position degrees.
    #[arg(long, conflicts_with = "budget_file", required_unless_present = "budget_file")]
    max_outdeg: Option<u64>,
    /// Per-vertex bounds: whitespace-separated integers, one per vertex.
    #[arg(long)]
    budget_file: Option<PathBuf>,
    /// Output file; stdout when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Auto,
    Brute,
    ViaM,
    Closed,
    #[value(alias = "thm8")]
    Coloring,
}

#[derive(Args, Debug)]
struct FArgs {
    file: PathBuf,
    #[arg(long, default_value_t = 1)]
    p: usize,
    #[arg(long)]
    k: u32,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,
    /// Also write the attaining orientation here.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code. Output goes to stdout, diagnostics to stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() { EXIT_INPUT } else { 0 };
        }
    };
    let mut out = String::new();
    let code = match execute(&cli, &mut out) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            exit_code(&err)
        }
    };
    print!("{out}");
    code
}

/// Exit code for an error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::BudgetExceeded { .. } | Error::BudgetBracket { .. } => EXIT_BUDGET,
        Error::NotDegenerateEnough { .. }
        | Error::Stuck { .. }
        | Error::MatchingImpossible { .. }
        | Error::ThresholdUnknown { .. } => EXIT_NOT_FOUND,
        _ => EXIT_INPUT,
    }
}

struct Ctx<'a> {
    json: bool,
    quiet: bool,
    out: &'a mut String,
}

impl Ctx<'_> {
    /// Writes either the JSON of `value` or the text lines; `--quiet` keeps
    /// only the first text line.
    fn emit<T: Serialize>(&mut self, value: &T, text: &str) -> Result<()> {
        if self.json {
            let s = serde_json::to_string_pretty(value).map_err(|e| Error::Internal(e.to_string()))?;
            self.out.push_str(&s);
            self.out.push('\n');
        } else if self.quiet {
            self.out.push_str(text.lines().next().unwrap_or(""));
            self.out.push('\n');
        } else {
            self.out.push_str(text);
            if !text.ends_with('\n') {
                self.out.push('\n');
            }
        }
        Ok(())
    }
}

fn env_budget() -> Option<u64> {
    std::env::var("HYPERF_BUDGET").ok().and_then(|s| s.trim().parse().ok())
}

fn load(path: &Path) -> Result<Hypergraph> {
    Ok(io::read_file(path)?.hypergraph().clone())
}

fn join(vs: &[usize]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn write_or_print(path: Option<&Path>, text: &str, out: &mut String) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => out.push_str(text),
    }
    Ok(())
}

fn execute(cli: &Cli, out: &mut String) -> Result<i32> {
    let budget = cli.budget.or_else(env_budget);
    let nodes = budget.unwrap_or(DEFAULT_NODE_BUDGET);
    let mut ctx = Ctx { json: cli.json, quiet: cli.quiet, out };
    match &cli.command {
        Command::Gen(args) => {
            let h = generate_family(&args.family, cli.seed)?;
            write_or_print(args.output.as_deref(), &io::write_hypergraph(&h), ctx.out)?;
        }
        Command::Mad { file } => {
            let rep = mad_exact(&load(file)?);
            ctx.emit(&rep, &format!("{}\nwitness: {}", rep.value, join(&rep.witness)))?;
        }
        Command::Degeneracy { file } => {
            let (d, order) = degeneracy(&load(file)?);
            #[derive(Serialize)]
            struct Rep {
                degeneracy: usize,
                order: Vec<usize>,
            }
            ctx.emit(&Rep { degeneracy: d, order: order.clone() }, &format!("{d}\norder: {}", join(&order)))?;
        }
        Command::Orient(args) => {
            let h = load(&args.file)?;
            let outcome = match (&args.budget_file, args.max_outdeg) {
                (Some(path), _) => orient_budget(&h, &read_budget_file(path)?)?,
                (None, Some(k)) => orient_max_outdeg(&h, k),
                (None, None) => return Err(Error::BadParams("need --max-outdeg or --budget-file".into())),
            };
            match outcome {
                BudgetOutcome::Oriented(d) => {
                    let text = io::write_orientation(&d);
                    if args.output.is_some() || !ctx.json {
                        write_or_print(args.output.as_deref(), &text, ctx.out)?;
                    } else {
                        ctx.emit(&BudgetOutcome::Oriented(d), "")?;
                    }
                }
                BudgetOutcome::Infeasible { witness } => {
                    let (sub, _) = h.induced(&witness);
                    let text = format!(
                        "infeasible\nwitness: {}\nedges inside: {} on {} vertices",
                        join(&witness),
                        sub.edge_count(),
                        witness.len()
                    );
                    ctx.emit(&BudgetOutcome::Infeasible { witness }, &text)?;
                    return Ok(EXIT_NOT_FOUND);
                }
            }
        }
        Command::F(args) => {
            let h = load(&args.file)?;
            let method = match args.method {
                MethodArg::Auto => None,
                MethodArg::Brute => Some(FMethod::Brute),
                MethodArg::ViaM => Some(FMethod::ViaM),
                MethodArg::Closed => Some(FMethod::ClosedForm),
                MethodArg::Coloring => Some(FMethod::Coloring),
            };
            let rep = f_with(&h, args.p, args.k, method, budget)?;
            if let (Some(path), Some(d)) = (&args.output, &rep.orientation) {
                std::fs::write(path, io::write_orientation(d))?;
            }
            let mut text = format!("{}\nmethod: {}\nnodes: {}", rep.value, rep.method, rep.nodes);
            if let Some(w) = &rep.witness {
                for (i, part) in w.parts.iter().enumerate() {
                    let _ = write!(text, "\nclass {}: {}", i + 1, join(part));
                }
            }
            ctx.emit(&rep, &text)?;
        }
        Command::ChiR { file, p } => {
            let rep = chi_r(&load(file)?, *p, nodes)?;
            ctx.emit(&rep, &format!("{}\nnodes: {}", rep.value, rep.nodes))?;
        }
        Command::B { file, p } => {
            let rep = b_value(&load(file)?, *p, nodes)?;
            let head = if rep.exact { rep.value.to_string() } else { format!(">= {}", rep.value) };
            ctx.emit(&rep, &format!("{head}\nnodes: {}", rep.nodes))?;
            if !rep.exact {
                return Ok(EXIT_BUDGET);
            }
        }
        Command::M { file, k } => {
            let rep = m_value(&load(file)?, *k, nodes)?;
            let mut text = rep.value.to_string();
            for (i, part) in rep.witness.parts.iter().enumerate() {
                let _ = write!(text, "\nclass {}: {}", i + 1, join(part));
            }
            ctx.emit(&rep, &text)?;
        }
        Command::Bounds { file, k } => {
            let entries = bounds(&load(file)?, *k, nodes)?;
            let mut text = String::new();
            for e in &entries {
                let value = e.value.map_or("n/a".to_string(), |v| v.to_string());
                let _ = writeln!(text, "{:<24} {:<5} {:>8}  {}", e.name, format!("{:?}", e.side).to_lowercase(), value, e.note);
            }
            ctx.emit(&entries, &text)?;
        }
        Command::Tset { file, p, k, t } => {
            let d = match io::read_file(file)? {
                Document::Oriented(d) => d,
                Document::Hypergraph(_) => return Err(Error::BadParams("tset needs an oriented file".into())),
            };
            let found = find_tset(&d, *p, *k, *t, nodes)?;
            let text = match &found {
                Some(set) => join(set),
                None => "none".to_string(),
            };
            ctx.emit(&found, &text)?;
            if found.is_none() {
                return Ok(EXIT_NOT_FOUND);
            }
        }
        Command::Pack { n, r, p, k } => {
            let rep = packing_bound(*n, *r, *p, *k)?;
            ctx.emit(&rep, &format!("{}\nblock size: {}\nblocks: {}", rep.bound, rep.m, rep.blocks.len()))?;
        }
        Command::Verify { suite } => {
            let names: Vec<&str> = if suite == "all" { SUITES.iter().map(|s| s.0).collect() } else { vec![suite] };
            let suite_budget = budget.unwrap_or(DEFAULT_ORIENTATION_BUDGET);
            let mut reports = Vec::new();
            for name in names {
                reports.push(verify_suite(name, cli.seed, suite_budget)?);
            }
            let text = reports.iter().map(summary).collect::<Vec<_>>().join("\n");
            let failed = reports.iter().any(|r| !r.ok());
            if reports.len() == 1 {
                ctx.emit(&reports[0], &text)?;
            } else {
                ctx.emit(&reports, &text)?;
            }
            if failed {
                return Ok(EXIT_VERIFY);
            }
        }
    }
    Ok(0)
}

fn summary(rep: &VerifySuiteReport) -> String {
    let mut s = format!(
        "{} {}: {} passed, {} failed ({} ms)",
        if rep.ok() { "ok  " } else { "FAIL" },
        rep.suite,
        rep.passed,
        rep.failed,
        rep.wall_ms
    );
    for c in rep.failures().take(10) {
        let values: Vec<String> = c.values.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = write!(s, "\n  {} [{}]: {}", c.relation, c.instance, values.join(", "));
    }
    s
}

fn read_budget_file(path: &Path) -> Result<DegreeBudget> {
    let text = std::fs::read_to_string(path)?;
    let mut values = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        for tok in line.split_whitespace() {
            values.push(tok.parse().map_err(|_| Error::Parse {
                line: i + 1,
                message: format!("`{tok}` is not a non-negative integer"),
            })?);
        }
    }
    Ok(DegreeBudget(values))
}

fn generate_family(family: &Family, seed: u64) -> Result<Hypergraph> {
    match family {
        Family::Complete { n, r } => generate::complete(*n, *r),
        Family::Multipartite { parts } => generate::complete_multipartite(parts),
        Family::Cliques { sizes } => generate::disjoint_cliques(sizes),
        Family::MopFan { n } => generate::mop_fan(*n),
        Family::Mop { n } => generate::mop_random(*n, seed),
        Family::Random { n, r, m } => generate::random(*n, *r, *m, seed),
        Family::Bipartite { n, density } => generate::random_bipartite(*n, *density, seed),
        Family::Gnp { n, density } => generate::random_gnp(*n, *density, seed),
        Family::JoinK2 { file } => generate::join_k2(&load(file)?),
        Family::Complement { file } => generate::complement(&load(file)?),
    }
}
