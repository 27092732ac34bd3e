//! Command-line surface.
//!
//! Every command accepts an instance as either a file path or a family spec
//! string (`dipath:8`, `bipartite:2,5`, ...). Output is a human-readable
//! table by default or the line-oriented structured form with
//! `--format structured`. Exit codes: 0 success, 1 usage or parse error,
//! 2 exceeded limit, 3 suite invariant violation.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bounds;
use crate::error::{Error, Result};
use crate::family::{FamilySpec, Instance};
use crate::graph::Orientation;
use crate::io;
use crate::orient::{self, ConjectureOutcome};
use crate::perturb::{self, PerturbOp};
use crate::report::{arc_token, Structured};
use crate::set::VertexSet;
use crate::solver::{self, Method};
use crate::suite::{self, SuiteConfig};

pub const DEFAULT_SOLVER_LIMIT: usize = 26;

#[derive(Parser)]
#[command(
    name = "mods",
    version,
    about = "Exact solvers and theorem checks for majority out-domination in digraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Solver strategy
    #[arg(long, global = true, value_enum, default_value_t = MethodArg::Exact)]
    method: MethodArg,
    /// Solve the undirected majority domination number instead
    #[arg(long, global = true)]
    undirected: bool,
    /// Output form
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Table)]
    format: FormatArg,
    /// Largest instance order the solvers accept
    #[arg(long, global = true, default_value_t = DEFAULT_SOLVER_LIMIT)]
    limit_n: usize,
    /// Largest edge count for orientation enumeration
    #[arg(long, global = true, default_value_t = orient::DEFAULT_EDGE_LIMIT)]
    limit_edges: usize,
    /// Seed for every seeded construction in the invocation
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
    /// Cap on enumerated results
    #[arg(long, global = true, default_value_t = 1_000_000)]
    cap: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Exact,
    Oracle,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Exact => Method::Exact,
            MethodArg::Oracle => Method::Oracle,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Table,
    Structured,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute the set majority out-domination number (or relatives)
    Solve {
        /// Instance file or family spec
        instance: String,
        /// Compute the out-domination number instead
        #[arg(long)]
        gamma_plus: bool,
    },
    /// Evaluate every implemented bound for one digraph
    Bounds { instance: String },
    /// Minimal MODS checks and enumeration
    Minimal {
        #[command(subcommand)]
        action: MinimalCmd,
    },
    /// Solve before and after one structural edit
    Perturb {
        instance: String,
        /// Arc to remove, as `u,v`
        #[arg(long, value_name = "U,V")]
        remove_arc: Option<String>,
        /// Vertex to remove
        #[arg(long, value_name = "V")]
        remove_vertex: Option<usize>,
        /// Arc to add, as `u,v`
        #[arg(long, value_name = "U,V")]
        add_arc: Option<String>,
        /// Arc to reverse, as `u,v`
        #[arg(long, value_name = "U,V")]
        reverse_arc: Option<String>,
    },
    /// Scan every arc for criticality, by definition and by structure
    Critical { instance: String },
    /// Exhaustive orientation spectrum of an undirected graph
    Orient { instance: String },
    /// Exhaustive check of the conjectured upper orientable number of K_{r,s}
    Conjecture { r: usize, s: usize },
    /// Re-verify every implemented theorem over a corpus
    Suite {
        /// Corpus selector (only `default` is defined)
        #[arg(long, default_value = "default")]
        families: String,
        /// Number of seeded random digraphs in the corpus
        #[arg(long, default_value_t = 100)]
        random: usize,
        /// Largest digraph order in the corpus
        #[arg(long, default_value_t = 10)]
        max_n: usize,
    },
    /// Emit a family instance in the instance file format
    Gen {
        family: String,
        /// Write to a file instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum MinimalCmd {
    /// Check one set for minimality, both ways
    Check {
        instance: String,
        /// The vertex set, as `v,v,...`
        #[arg(long, value_name = "V,V,...")]
        set: String,
    },
    /// List all minimal MODSs in lexicographic order
    Enumerate { instance: String },
}

/// Entry point used by the binary: parses real process arguments.
pub fn main_entry() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.exit_code() == 0 { 0 } else { 1 };
        }
    };
    let (code, output) = dispatch(cli);
    print!("{}", output);
    code
}

/// Test entry point: parses the given arguments (without the binary name)
/// and returns the exit code and captured standard output.
pub fn run_from_args<I, S>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv = std::iter::once("mods".to_string()).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return (
                if e.exit_code() == 0 { 0 } else { 1 },
                e.render().to_string(),
            )
        }
    };
    dispatch(cli)
}

fn dispatch(cli: Cli) -> (i32, String) {
    match execute(cli) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {}", e);
            (e.exit_code(), String::new())
        }
    }
}

fn execute(cli: Cli) -> Result<(i32, String)> {
    let c = &cli.common;
    match cli.command {
        Cmd::Solve {
            instance,
            gamma_plus,
        } => cmd_solve(c, &instance, gamma_plus),
        Cmd::Bounds { instance } => cmd_bounds(c, &instance),
        Cmd::Minimal { action } => match action {
            MinimalCmd::Check { instance, set } => cmd_minimal_check(c, &instance, &set),
            MinimalCmd::Enumerate { instance } => cmd_minimal_enumerate(c, &instance),
        },
        Cmd::Perturb {
            instance,
            remove_arc,
            remove_vertex,
            add_arc,
            reverse_arc,
        } => {
            let op = parse_perturb_op(remove_arc, remove_vertex, add_arc, reverse_arc)?;
            cmd_perturb(c, &instance, op)
        }
        Cmd::Critical { instance } => cmd_critical(c, &instance),
        Cmd::Orient { instance } => cmd_orient(c, &instance),
        Cmd::Conjecture { r, s } => cmd_conjecture(c, r, s),
        Cmd::Suite {
            families,
            random,
            max_n,
        } => cmd_suite(c, families, random, max_n),
        Cmd::Gen { family, out } => cmd_gen(&family, out),
    }
}

fn load_digraph(c: &Common, source: &str) -> Result<crate::digraph::Digraph> {
    let d = io::load_instance(source)?.into_digraph()?;
    check_order(c, d.order())?;
    Ok(d)
}

fn load_graph(c: &Common, source: &str) -> Result<crate::graph::Graph> {
    let g = io::load_instance(source)?.into_graph()?;
    check_order(c, g.order())?;
    Ok(g)
}

fn check_order(c: &Common, n: usize) -> Result<()> {
    if n > c.limit_n {
        return Err(Error::TooLarge {
            what: "the solver",
            limit: c.limit_n,
            actual: n,
            unit: "vertices",
        });
    }
    Ok(())
}

fn parse_arc(text: &str) -> Result<(usize, usize)> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() == 2 {
        if let (Ok(u), Ok(v)) = (parts[0].trim().parse(), parts[1].trim().parse()) {
            return Ok((u, v));
        }
    }
    Err(Error::Usage(format!(
        "expected an arc as `u,v`, got `{}`",
        text
    )))
}

fn parse_set(text: &str, n: usize) -> Result<VertexSet> {
    let mut s = VertexSet::empty(n);
    for tok in text.split(',') {
        let tok = tok.trim();
        if tok.is_empty() {
            continue;
        }
        let v: usize = tok
            .parse()
            .map_err(|_| Error::Usage(format!("`{}` is not a vertex label", tok)))?;
        if v >= n {
            return Err(Error::VertexOutOfRange { v, n });
        }
        s.insert(v);
    }
    Ok(s)
}

fn parse_perturb_op(
    remove_arc: Option<String>,
    remove_vertex: Option<usize>,
    add_arc: Option<String>,
    reverse_arc: Option<String>,
) -> Result<PerturbOp> {
    let mut ops = Vec::new();
    if let Some(a) = remove_arc {
        let (u, v) = parse_arc(&a)?;
        ops.push(PerturbOp::RemoveArc(u, v));
    }
    if let Some(v) = remove_vertex {
        ops.push(PerturbOp::RemoveVertex(v));
    }
    if let Some(a) = add_arc {
        let (u, v) = parse_arc(&a)?;
        ops.push(PerturbOp::AddArc(u, v));
    }
    if let Some(a) = reverse_arc {
        let (u, v) = parse_arc(&a)?;
        ops.push(PerturbOp::ReverseArc(u, v));
    }
    match ops.len() {
        1 => Ok(ops.pop().unwrap()),
        _ => Err(Error::Usage(
            "perturb needs exactly one of --remove-arc, --remove-vertex, --add-arc, --reverse-arc"
                .into(),
        )),
    }
}

fn fmt_f64(x: f64) -> String {
    if x.is_nan() {
        "-".to_string()
    } else {
        format!("{}", x)
    }
}

fn orientation_tokens(o: &Orientation) -> Vec<String> {
    o.arcs().iter().map(|&(u, v)| arc_token(u, v)).collect()
}

// --- solve -----------------------------------------------------------------

fn cmd_solve(c: &Common, source: &str, gamma_plus: bool) -> Result<(i32, String)> {
    if gamma_plus && c.undirected {
        return Err(Error::Usage(
            "--gamma-plus applies to digraphs; drop --undirected".into(),
        ));
    }
    let method: Method = c.method.into();
    let (number, kind, n, m, result) = if c.undirected {
        let g = load_graph(c, source)?;
        let r = solver::gamma_m_undirected(&g, method);
        ("gamma_m", "graph", g.order(), g.edge_count(), r)
    } else {
        let d = load_digraph(c, source)?;
        let r = if gamma_plus {
            solver::gamma_plus(&d, method)
        } else {
            solver::gamma_m_plus(&d, method)
        };
        let number = if gamma_plus {
            "gamma_plus"
        } else {
            "gamma_m_plus"
        };
        (number, "digraph", d.order(), d.arc_count(), r)
    };
    let text = match c.format {
        FormatArg::Structured => {
            let mut s = Structured::new("solve");
            s.field("instance", source);
            s.field("kind", kind);
            s.field("n", n);
            s.field("size", m);
            s.field("number", number);
            s.field("method", result.method);
            s.field("value", result.value);
            s.list("witness", result.witness.iter());
            s.field("explored", result.explored);
            s.finish()
        }
        FormatArg::Table => {
            let mut t = String::new();
            writeln!(t, "instance  {} ({}, n={}, size={})", source, kind, n, m).unwrap();
            writeln!(t, "number    {}", number).unwrap();
            writeln!(t, "method    {}", result.method).unwrap();
            writeln!(t, "value     {}", result.value).unwrap();
            writeln!(t, "witness   {}", result.witness).unwrap();
            writeln!(t, "explored  {}", result.explored).unwrap();
            t
        }
    };
    Ok((0, text))
}

// --- bounds ----------------------------------------------------------------

fn cmd_bounds(c: &Common, source: &str) -> Result<(i32, String)> {
    let d = load_digraph(c, source)?;
    let report = bounds::bound_report(&d, bounds::DEFAULT_DP_LIMIT)?;
    let text = match c.format {
        FormatArg::Structured => {
            let mut s = Structured::new("bounds");
            s.field("instance", source);
            s.field("n", report.n);
            s.field("delta_plus", report.delta_plus);
            s.field("gamma_m_plus", report.gamma_m_plus);
            s.field("gamma_plus", report.gamma_plus);
            s.field("longest_path", report.longest_path);
            s.field("longest_cycle", report.longest_cycle);
            for e in &report.entries {
                let mut toks = vec![
                    e.name.to_string(),
                    e.relation.to_string(),
                    fmt_f64(e.lhs),
                    fmt_f64(e.rhs),
                    e.status.to_string(),
                    e.tight.to_string(),
                ];
                if let Some(note) = e.note {
                    toks.push(note.to_string());
                }
                s.row("bound", &toks);
            }
            s.field("all_hold", report.all_hold());
            s.finish()
        }
        FormatArg::Table => {
            let mut t = String::new();
            writeln!(
                t,
                "instance {} (n={}, delta+={}, gamma_m+={}, gamma+={}, l={}, c={})",
                source,
                report.n,
                report.delta_plus,
                report.gamma_m_plus,
                report.gamma_plus,
                report.longest_path,
                report.longest_cycle
            )
            .unwrap();
            writeln!(
                t,
                "{:<30} {:>4} {:<3} {:>5}  {:<14} tight",
                "bound", "lhs", "", "rhs", "status"
            )
            .unwrap();
            for e in &report.entries {
                writeln!(
                    t,
                    "{:<30} {:>4} {:<3} {:>5}  {:<14} {}{}",
                    e.name,
                    fmt_f64(e.lhs),
                    e.relation,
                    fmt_f64(e.rhs),
                    e.status,
                    e.tight,
                    e.note.map(|n| format!("  ({})", n)).unwrap_or_default()
                )
                .unwrap();
            }
            writeln!(t, "all hold: {}", report.all_hold()).unwrap();
            t
        }
    };
    Ok((0, text))
}

// --- minimal ---------------------------------------------------------------

fn cmd_minimal_check(c: &Common, source: &str, set: &str) -> Result<(i32, String)> {
    let d = load_digraph(c, source)?;
    let s = parse_set(set, d.order())?;
    let direct = solver::is_minimal_mods_direct(&d, &s)?;
    let characterized = solver::is_minimal_mods_characterized(&d, &s)?;
    let text = match c.format {
        FormatArg::Structured => {
            let mut out = Structured::new("minimal_check");
            out.field("instance", source);
            out.list("set", s.iter());
            out.field("is_mods", true);
            out.field("direct", direct);
            out.field("characterized", characterized);
            out.field("agree", direct == characterized);
            out.finish()
        }
        FormatArg::Table => {
            let mut t = String::new();
            writeln!(t, "instance       {}", source).unwrap();
            writeln!(t, "set            {}", s).unwrap();
            writeln!(t, "direct         {}", direct).unwrap();
            writeln!(t, "characterized  {}", characterized).unwrap();
            writeln!(t, "agree          {}", direct == characterized).unwrap();
            t
        }
    };
    Ok((0, text))
}

fn cmd_minimal_enumerate(c: &Common, source: &str) -> Result<(i32, String)> {
    let d = load_digraph(c, source)?;
    let r = solver::enumerate_minimal_mods(&d, c.cap);
    let text = match c.format {
        FormatArg::Structured => {
            let mut out = Structured::new("minimal_enumerate");
            out.field("instance", source);
            out.field("count", r.sets.len());
            out.field("truncated", r.truncated);
            for s in &r.sets {
                out.list("set", s.iter());
            }
            out.finish()
        }
        FormatArg::Table => {
            let mut t = String::new();
            writeln!(t, "instance  {}", source).unwrap();
            writeln!(
                t,
                "minimal MODSs: {} (truncated: {})",
                r.sets.len(),
                r.truncated
            )
            .unwrap();
            for s in &r.sets {
                writeln!(t, "  {}", s).unwrap();
            }
            t
        }
    };
    Ok((0, text))
}

// --- perturb / critical ------------------------------------------------------

fn cmd_perturb(c: &Common, source: &str, op: PerturbOp) -> Result<(i32, String)> {
    let d = load_digraph(c, source)?;
    let rec = perturb::perturb(&d, op)?;
    let text = match c.format {
        FormatArg::Structured => {
            let mut s = Structured::new("perturb");
            s.field("instance", source);
            s.field("kind", rec.kind);
            if let Some((u, v)) = rec.arc {
                s.field("arc", arc_token(u, v));
            }
            if let Some(v) = rec.vertex {
                s.field("vertex", v);
            }
            if let Some(dv) = rec.out_degree {
                s.field("out_degree", dv);
            }
            s.field("before", rec.before);
            s.field("after", rec.after);
            s.field("bound_low", rec.bound_low);
            s.field("bound_high", rec.bound_high);
            s.field("within_bounds", rec.within_bounds);
            s.finish()
        }
        FormatArg::Table => {
            let target = match (rec.arc, rec.vertex) {
                (Some((u, v)), _) => arc_token(u, v),
                (_, Some(v)) => v.to_string(),
                _ => "-".into(),
            };
            let mut t = String::new();
            writeln!(t, "instance  {}", source).unwrap();
            writeln!(t, "edit      {} {}", rec.kind, target).unwrap();
            writeln!(t, "before    {}", rec.before).unwrap();
            writeln!(t, "after     {}", rec.after).unwrap();
            writeln!(
                t,
                "bounds    [{}, {}] within: {}",
                rec.bound_low, rec.bound_high, rec.within_bounds
            )
            .unwrap();
            t
        }
    };
    Ok((0, text))
}

fn cmd_critical(c: &Common, source: &str) -> Result<(i32, String)> {
    let d = load_digraph(c, source)?;
    let mut rows = Vec::new();
    let mut critical_count = 0usize;
    for &(u, v) in d.arcs() {
        let direct = perturb::is_critical_arc_direct(&d, u, v)?;
        let characterized = perturb::is_critical_arc_characterized(&d, u, v)?;
        critical_count += usize::from(direct);
        rows.push((u, v, direct, characterized));
    }
    let text = match c.format {
        FormatArg::Structured => {
            let mut s = Structured::new("critical");
            s.field("instance", source);
            s.field("arcs", d.arc_count());
            s.field("critical", critical_count);
            for (u, v, direct, characterized) in &rows {
                s.row(
                    "arc",
                    &[
                        arc_token(*u, *v),
                        format!("direct={}", direct),
                        format!("characterized={}", characterized),
                        format!("agree={}", direct == characterized),
                    ],
                );
            }
            s.finish()
        }
        FormatArg::Table => {
            let mut t = String::new();
            writeln!(t, "instance  {} ({} arcs)", source, d.arc_count()).unwrap();
            writeln!(
                t,
                "{:<10} {:<8} {:<15} agree",
                "arc", "direct", "characterized"
            )
            .unwrap();
            for (u, v, direct, characterized) in &rows {
                writeln!(
                    t,
                    "{:<10} {:<8} {:<15} {}",
                    arc_token(*u, *v),
                    direct,
                    characterized,
                    direct == characterized
                )
                .unwrap();
            }
            writeln!(t, "critical arcs: {}", critical_count).unwrap();
            t
        }
    };
    Ok((0, text))
}

// --- orient / conjecture -----------------------------------------------------

fn cmd_orient(c: &Common, source: &str) -> Result<(i32, String)> {
    let g = load_graph(c, source)?;
    let sp = orient::spectrum(&g, c.limit_edges)?;
    let dom = orient::dom_via_theorem(&g, c.method.into());
    let text = match c.format {
        FormatArg::Structured => {
            let mut s = Structured::new("orient");
            s.field("instance", source);
            s.field("n", g.order());
            s.field("edges", g.edge_count());
            s.field("orientations", sp.total_orientations());
            s.field("min", sp.min_value);
            s.field("max", sp.max_value);
            s.field("dom_via_theorem", dom.value);
            s.field("interval", sp.is_full_interval());
            s.list(
                "histogram",
                sp.histogram.iter().map(|(v, c)| format!("{}:{}", v, c)),
            );
            s.list("min_witness", orientation_tokens(&sp.min_witness));
            s.list("max_witness", orientation_tokens(&sp.max_witness));
            s.finish()
        }
        FormatArg::Table => {
            let mut t = String::new();
            writeln!(
                t,
                "instance  {} (n={}, edges={}, orientations={})",
                source,
                g.order(),
                g.edge_count(),
                sp.total_orientations()
            )
            .unwrap();
            writeln!(
                t,
                "min       {} (dom via theorem: {})",
                sp.min_value, dom.value
            )
            .unwrap();
            writeln!(t, "max       {}", sp.max_value).unwrap();
            writeln!(t, "interval  {}", sp.is_full_interval()).unwrap();
            write!(t, "histogram ").unwrap();
            for (i, (v, count)) in sp.histogram.iter().enumerate() {
                if i > 0 {
                    write!(t, ", ").unwrap();
                }
                write!(t, "{} x{}", v, count).unwrap();
            }
            writeln!(t).unwrap();
            writeln!(
                t,
                "min witness: {}",
                orientation_tokens(&sp.min_witness).join(" ")
            )
            .unwrap();
            writeln!(
                t,
                "max witness: {}",
                orientation_tokens(&sp.max_witness).join(" ")
            )
            .unwrap();
            t
        }
    };
    Ok((0, text))
}

fn cmd_conjecture(c: &Common, r: usize, s: usize) -> Result<(i32, String)> {
    let outcome = orient::check_conjecture(r, s, c.limit_edges)?;
    let text = match c.format {
        FormatArg::Structured => {
            let mut out = Structured::new("conjecture");
            out.field("r", r);
            out.field("s", s);
            match outcome {
                ConjectureOutcome::NotApplicable { .. } => {
                    out.field("status", "not_applicable");
                    out.field("reason", "upper_orientable_number_is_one");
                }
                ConjectureOutcome::Checked(v) => {
                    out.field("status", "checked");
                    out.field("method", v.method);
                    out.field("computed", v.computed);
                    out.field("conjectured", v.conjectured);
                    out.field("agrees", v.agrees);
                }
            }
            out.finish()
        }
        FormatArg::Table => match outcome {
            ConjectureOutcome::NotApplicable { .. } => {
                format!(
                    "K({}, {}): not applicable (upper orientable number is 1)\n",
                    r, s
                )
            }
            ConjectureOutcome::Checked(v) => format!(
                "K({}, {}): computed {} conjectured {} agree {}\n",
                r, s, v.computed, v.conjectured, v.agrees
            ),
        },
    };
    Ok((0, text))
}

// --- suite / gen -------------------------------------------------------------

fn cmd_suite(c: &Common, families: String, random: usize, max_n: usize) -> Result<(i32, String)> {
    if families != "default" {
        return Err(Error::Usage(format!(
            "unknown corpus `{}` (only `default` is defined)",
            families
        )));
    }
    let cfg = SuiteConfig {
        families,
        random,
        seed: c.seed,
        max_n,
        dp_limit: bounds::DEFAULT_DP_LIMIT,
        edge_limit: c.limit_edges,
    };
    let report = suite::run_suite(&cfg)?;
    let text = match c.format {
        FormatArg::Structured => {
            let mut s = Structured::new("suite");
            s.field("families", &cfg.families);
            s.field("random", cfg.random);
            s.field("seed", cfg.seed);
            s.field("max_n", cfg.max_n);
            for row in &report.rows {
                s.row(
                    "row",
                    &[
                        row.name.to_string(),
                        format!("instances={}", row.instances),
                        format!("checks={}", row.checks),
                        format!("failures={}", row.failures),
                        format!("gating={}", row.gating),
                        if row.failures == 0 { "pass" } else { "fail" }.to_string(),
                    ],
                );
            }
            s.field(
                "suite_status",
                if report.passed() { "pass" } else { "fail" },
            );
            s.finish()
        }
        FormatArg::Table => {
            let mut t = String::new();
            writeln!(
                t,
                "corpus: families={} random={} seed={} max_n={}",
                cfg.families, cfg.random, cfg.seed, cfg.max_n
            )
            .unwrap();
            writeln!(
                t,
                "{:<36} {:>9} {:>8} {:>8}  result",
                "theorem", "instances", "checks", "failures"
            )
            .unwrap();
            for row in &report.rows {
                writeln!(
                    t,
                    "{:<36} {:>9} {:>8} {:>8}  {}{}",
                    row.name,
                    row.instances,
                    row.checks,
                    row.failures,
                    if row.failures == 0 { "pass" } else { "FAIL" },
                    if row.gating { "" } else { " (report only)" }
                )
                .unwrap();
            }
            writeln!(
                t,
                "suite: {}",
                if report.passed() { "pass" } else { "FAIL" }
            )
            .unwrap();
            t
        }
    };
    Ok((if report.passed() { 0 } else { 3 }, text))
}

fn cmd_gen(family: &str, out_path: Option<PathBuf>) -> Result<(i32, String)> {
    let spec = FamilySpec::from_str(family)?;
    let text = match spec.build()? {
        Instance::Digraph(d) => io::format_digraph(&d),
        Instance::Graph(g) => io::format_graph(&g),
    };
    match out_path {
        Some(path) => {
            std::fs::write(&path, &text).map_err(|e| Error::Io {
                path: path.display().to_string(),
                source: e,
            })?;
            Ok((0, String::new()))
        }
        None => Ok((0, text)),
    }
}
