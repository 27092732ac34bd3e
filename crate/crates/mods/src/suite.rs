//! The theorem-verification suite: every invariant this crate implements,
//! re-checked over a corpus of family instances and seeded random instances.
//!
//! Each row pins one theorem (or one characterization pair) and counts
//! instances, individual checks, and failures. Any failure in a gating row
//! fails the suite; the complete-bipartite conjecture row is reported but
//! never gates, because the source statement is a conjecture.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::bounds;
use crate::digraph::Digraph;
use crate::error::Result;
use crate::family;
use crate::graph::Graph;
use crate::orient::{self, ConjectureOutcome, NamedOrientation};
use crate::perturb::{self, PerturbOp};
use crate::set::VertexSet;
use crate::solver::{self, Method};

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Corpus selector; only `default` is defined.
    pub families: String,
    /// Number of seeded random digraphs.
    pub random: usize,
    pub seed: u64,
    /// Largest digraph order in the corpus.
    pub max_n: usize,
    pub dp_limit: usize,
    pub edge_limit: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            families: "default".into(),
            random: 100,
            seed: 7,
            max_n: 10,
            dp_limit: bounds::DEFAULT_DP_LIMIT,
            edge_limit: orient::DEFAULT_EDGE_LIMIT,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteRow {
    pub name: &'static str,
    pub instances: usize,
    pub checks: u64,
    pub failures: u64,
    /// Non-gating rows report without affecting the suite verdict.
    pub gating: bool,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub rows: Vec<SuiteRow>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| !r.gating || r.failures == 0)
    }
}

struct DigraphCase {
    name: String,
    d: Digraph,
}

enum Family {
    Path,
    Cycle,
    Star,
    Complete,
    DoubleStar,
    Wheel,
    Bipartite,
    Random,
}

struct GraphCase {
    g: Graph,
    family: Family,
}

struct Corpus {
    digraphs: Vec<DigraphCase>,
    graphs: Vec<GraphCase>,
}

fn build_corpus(cfg: &SuiteConfig) -> Result<Corpus> {
    let mut digraphs = Vec::new();
    let mut push = |name: String, d: Digraph| digraphs.push(DigraphCase { name, d });
    for n in 1..=cfg.max_n {
        push(format!("dipath:{}", n), family::dipath(n)?);
        push(format!("empty:{}", n), family::empty_digraph(n)?);
        if n >= 3 {
            push(format!("dicycle:{}", n), family::dicycle(n)?);
        }
    }
    let mut k = 3;
    while 2 * k + 4 <= cfg.max_n {
        push(format!("figure1:{}", k), family::figure1(k)?);
        k += 1;
    }
    for i in 0..cfg.random {
        let n = 1 + i % cfg.max_n;
        let p = [0.1, 0.3, 0.5][i % 3];
        let seed = cfg.seed.wrapping_add(i as u64);
        push(
            format!("randdigraph:{},{},{}", n, p, seed),
            family::random_digraph(n, p, seed)?,
        );
    }

    let mut graphs = Vec::new();
    let gn = cfg.max_n.min(10);
    for n in 2..=gn {
        graphs.push(GraphCase {
            g: family::path(n)?,
            family: Family::Path,
        });
        graphs.push(GraphCase {
            g: family::star(n)?,
            family: Family::Star,
        });
        if n >= 3 {
            graphs.push(GraphCase {
                g: family::cycle(n)?,
                family: Family::Cycle,
            });
        }
        if n <= 5 {
            graphs.push(GraphCase {
                g: family::complete(n)?,
                family: Family::Complete,
            });
        }
        if (4..=8).contains(&n) {
            graphs.push(GraphCase {
                g: family::wheel(n)?,
                family: Family::Wheel,
            });
        }
    }
    for a in 1..=gn.saturating_sub(2) / 2 {
        for b in a..=gn.saturating_sub(2) - a {
            graphs.push(GraphCase {
                g: family::double_star(a, b)?,
                family: Family::DoubleStar,
            });
        }
    }
    let edge_cap = cfg.edge_limit.min(12);
    for r in 1..=edge_cap {
        for s in r..=edge_cap / r {
            graphs.push(GraphCase {
                g: family::complete_bipartite(r, s)?,
                family: Family::Bipartite,
            });
        }
    }
    let random_graphs = cfg.random.div_ceil(4).min(30);
    let hi = cfg.max_n.clamp(2, 7);
    for i in 0..random_graphs {
        let n = 2 + i % (hi - 1).max(1);
        graphs.push(GraphCase {
            g: family::random_connected_graph(n, 0.5, cfg.seed.wrapping_add(1000 + i as u64))?,
            family: Family::Random,
        });
    }
    // an unusually low edge limit shrinks the corpus instead of erroring
    graphs.retain(|c| c.g.edge_count() <= cfg.edge_limit);
    Ok(Corpus { digraphs, graphs })
}

struct Row {
    name: &'static str,
    instances: usize,
    checks: u64,
    failures: u64,
    gating: bool,
}

impl Row {
    fn new(name: &'static str) -> Self {
        Row {
            name,
            instances: 0,
            checks: 0,
            failures: 0,
            gating: true,
        }
    }

    fn check(&mut self, ok: bool) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
        }
    }

    fn into_row(self) -> SuiteRow {
        SuiteRow {
            name: self.name,
            instances: self.instances,
            checks: self.checks,
            failures: self.failures,
            gating: self.gating,
        }
    }
}

fn gamma(d: &Digraph) -> usize {
    solver::gamma_m_plus(d, Method::Exact).value
}

pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let corpus = build_corpus(cfg)?;
    let mut rows = vec![
        spanning_monotonicity(cfg, &corpus)?.into_row(),
        exact_equals_oracle(&corpus).into_row(),
        minimal_characterization(cfg, &corpus)?.into_row(),
        complement_of_minimum_mods(&corpus).into_row(),
        value_one_iff_degree(&corpus).into_row(),
        gamma_equality_iff_max_degree(&corpus).into_row(),
        half_gamma_plus_bound(&corpus).into_row(),
        greedy_upper_bound(&corpus).into_row(),
        bounds_hold(cfg, &corpus)?.into_row(),
        bounds_tightness(cfg, &corpus)?.into_row(),
    ];
    for kind in [
        "arc-removal",
        "vertex-removal",
        "arc-addition",
        "arc-reversal",
    ] {
        rows.push(perturbation_row(kind, &corpus)?.into_row());
    }
    rows.extend([
        critical_arc_row(&corpus)?.into_row(),
        dom_equals_gamma_m(cfg, &corpus)?.into_row(),
        ivt_interval(cfg, &corpus)?.into_row(),
        closed_forms(cfg, &corpus)?.into_row(),
        tournament_fact(cfg)?.into_row(),
        dom1_bipartite(cfg)?.into_row(),
        named_constructions()?.into_row(),
        conjecture_row(cfg)?.into_row(),
    ]);

    Ok(SuiteReport {
        config: cfg.clone(),
        rows,
    })
}

/// Deleting arcs never lowers the number: a MODS of a spanning subdigraph
/// is a MODS of the host.
fn spanning_monotonicity(cfg: &SuiteConfig, corpus: &Corpus) -> Result<Row> {
    let mut row = Row::new("spanning_subdigraph_monotonicity");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x5370616e);
    for case in &corpus.digraphs {
        if case.d.arc_count() == 0 {
            continue;
        }
        row.instances += 1;
        let before = gamma(&case.d);
        for _ in 0..3 {
            let keep: Vec<(usize, usize)> = case
                .d
                .arcs()
                .iter()
                .copied()
                .filter(|_| rng.next_u64() & 1 == 1)
                .collect();
            let sub = Digraph::new(case.d.order(), keep)?;
            row.check(before <= gamma(&sub));
        }
    }
    Ok(row)
}

fn exact_equals_oracle(corpus: &Corpus) -> Row {
    let mut row = Row::new("exact_equals_oracle");
    for case in corpus.digraphs.iter().filter(|c| c.d.order() <= 12) {
        row.instances += 1;
        let e = solver::gamma_m_plus(&case.d, Method::Exact);
        let o = solver::gamma_m_plus(&case.d, Method::Oracle);
        row.check(e.value == o.value && e.witness == o.witness);
        let e = solver::gamma_plus(&case.d, Method::Exact);
        let o = solver::gamma_plus(&case.d, Method::Oracle);
        row.check(e.value == o.value && e.witness == o.witness);
    }
    row
}

/// Direct minimality and the private-neighbor characterization must agree
/// on every minimal candidate and on sampled MODSs.
fn minimal_characterization(cfg: &SuiteConfig, corpus: &Corpus) -> Result<Row> {
    let mut row = Row::new("minimal_mods_characterization");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x4d696e69);
    for case in corpus.digraphs.iter().filter(|c| c.d.order() <= 10) {
        row.instances += 1;
        let n = case.d.order();
        for s in solver::enumerate_minimal_mods(&case.d, 500).sets {
            row.check(solver::is_minimal_mods_characterized(&case.d, &s)?);
        }
        let mut sampled = 0;
        let mut attempts = 0;
        while sampled < 25 && attempts < 400 {
            attempts += 1;
            let bits = rng.next_u64();
            let s = VertexSet::from_vertices(n, (0..n).filter(|v| bits >> v & 1 == 1));
            if s.is_empty() || !solver::is_mods(&case.d, &s) {
                continue;
            }
            sampled += 1;
            row.check(
                solver::is_minimal_mods_direct(&case.d, &s)?
                    == solver::is_minimal_mods_characterized(&case.d, &s)?,
            );
        }
    }
    Ok(row)
}

/// The complement of every minimum MODS is again a MODS, except in the
/// totally disconnected odd-order digraph.
fn complement_of_minimum_mods(corpus: &Corpus) -> Row {
    let mut row = Row::new("complement_of_minimum_mods");
    for case in corpus.digraphs.iter().filter(|c| c.d.order() <= 10) {
        let totally_disconnected_odd = case.d.arc_count() == 0 && case.d.order() % 2 == 1;
        if totally_disconnected_odd {
            continue;
        }
        row.instances += 1;
        for s in perturb::enumerate_minimum_mods(&case.d) {
            row.check(solver::is_mods(&case.d, &s.complement()));
        }
    }
    row
}

/// The number is 1 exactly when some vertex reaches out-degree
/// `ceil(n/2) - 1`.
fn value_one_iff_degree(corpus: &Corpus) -> Row {
    let mut row = Row::new("value_one_iff_degree");
    for case in &corpus.digraphs {
        row.instances += 1;
        let n = case.d.order();
        let threshold = n.div_ceil(2);
        row.check((gamma(&case.d) == 1) == (case.d.max_out_degree() + 1 >= threshold));
    }
    row
}

/// The majority number equals the out-domination number exactly when some
/// vertex dominates everything.
fn gamma_equality_iff_max_degree(corpus: &Corpus) -> Row {
    let mut row = Row::new("gamma_equality_iff_max_degree");
    for case in &corpus.digraphs {
        row.instances += 1;
        let gm = gamma(&case.d);
        let gp = solver::gamma_plus(&case.d, Method::Exact).value;
        row.check((gm == gp) == (case.d.max_out_degree() == case.d.order() - 1));
    }
    row
}

/// Half of the out-domination number bounds the majority number; equality
/// on directed paths and cycles.
fn half_gamma_plus_bound(corpus: &Corpus) -> Row {
    let mut row = Row::new("half_gamma_plus_bound");
    for case in &corpus.digraphs {
        row.instances += 1;
        let gm = gamma(&case.d);
        let gp = solver::gamma_plus(&case.d, Method::Exact).value;
        row.check(gm <= gp.div_ceil(2));
        if case.name.starts_with("dipath:") || case.name.starts_with("dicycle:") {
            row.check(gm == gp.div_ceil(2));
        }
    }
    row
}

fn greedy_upper_bound(corpus: &Corpus) -> Row {
    let mut row = Row::new("greedy_upper_bound");
    for case in &corpus.digraphs {
        row.instances += 1;
        let g = solver::greedy_mods(&case.d);
        row.check(solver::is_mods(&case.d, &g.witness));
        row.check(g.value >= gamma(&case.d));
    }
    row
}

fn bounds_hold(cfg: &SuiteConfig, corpus: &Corpus) -> Result<Row> {
    let mut row = Row::new("bounds_hold");
    for case in corpus
        .digraphs
        .iter()
        .filter(|c| c.d.order() <= cfg.dp_limit)
    {
        row.instances += 1;
        let report = bounds::bound_report(&case.d, cfg.dp_limit)?;
        for entry in &report.entries {
            row.check(entry.holds_or_na());
        }
        // sandwich: the lower bound never exceeds any applicable upper bound
        let lower = report.entry("lower_degree").unwrap().lhs;
        for upper in [
            "upper_longest_path",
            "upper_longest_cycle",
            "upper_half_gamma_plus",
        ] {
            let e = report.entry(upper).unwrap();
            if e.status != bounds::BoundStatus::NotApplicable {
                row.check(lower <= e.rhs);
            }
        }
        // hamiltonian specialization agrees with the cycle bound at c = n
        if report.longest_cycle == report.n {
            let h = report.entry("upper_hamiltonian").unwrap();
            row.check(h.status == bounds::BoundStatus::Holds);
        }
    }
    Ok(row)
}

/// Sharpness where sharpness is claimed: structural bounds on directed
/// paths/cycles, the degree disjunction on the 6-path, and the degree lower
/// bound on double stars oriented away from the stems.
fn bounds_tightness(cfg: &SuiteConfig, corpus: &Corpus) -> Result<Row> {
    let mut row = Row::new("bounds_tightness");
    for case in corpus
        .digraphs
        .iter()
        .filter(|c| c.d.order() <= cfg.dp_limit)
    {
        if case.name.starts_with("dipath:") {
            row.instances += 1;
            let report = bounds::bound_report(&case.d, cfg.dp_limit)?;
            row.check(report.entry("upper_longest_path").unwrap().tight);
            if case.name == "dipath:6" {
                row.check(report.entry("upper_degree_or_one").unwrap().tight);
            }
        } else if case.name.starts_with("dicycle:") {
            row.instances += 1;
            let report = bounds::bound_report(&case.d, cfg.dp_limit)?;
            row.check(report.entry("upper_longest_cycle").unwrap().tight);
        }
    }
    // stems with in-degree zero: every leaf edge leaves its stem
    for a in 1..=4usize {
        for b in a..=4 {
            row.instances += 1;
            let n = a + b + 2;
            let mut arcs = vec![(0, 1)];
            arcs.extend((2..2 + a).map(|l| (0, l)));
            arcs.extend((2 + a..n).map(|l| (1, l)));
            let d = Digraph::new(n, arcs)?;
            let lower = n.div_ceil(2 * (d.max_out_degree() + 1));
            row.check(lower == gamma(&d));
        }
    }
    Ok(row)
}

fn perturbation_row(kind: &'static str, corpus: &Corpus) -> Result<Row> {
    let row_name = match kind {
        "arc-removal" => "perturb_arc_removal",
        "vertex-removal" => "perturb_vertex_removal",
        "arc-addition" => "perturb_arc_addition",
        _ => "perturb_arc_reversal",
    };
    let mut row = Row::new(row_name);
    for case in corpus.digraphs.iter().filter(|c| c.d.order() <= 9) {
        row.instances += 1;
        let d = &case.d;
        let n = d.order();
        match kind {
            "arc-removal" => {
                for &(u, v) in d.arcs() {
                    let rec = perturb::perturb(d, PerturbOp::RemoveArc(u, v))?;
                    row.check(rec.within_bounds);
                    // consistency with monotonicity: removal never lowers
                    row.check(rec.after >= rec.before);
                }
            }
            "vertex-removal" => {
                if n >= 2 {
                    for v in 0..n {
                        row.check(perturb::perturb(d, PerturbOp::RemoveVertex(v))?.within_bounds);
                    }
                }
            }
            "arc-addition" => {
                for u in 0..n {
                    for v in 0..n {
                        if u != v && !d.has_arc(u, v) {
                            row.check(perturb::perturb(d, PerturbOp::AddArc(u, v))?.within_bounds);
                        }
                    }
                }
            }
            _ => {
                for &(u, v) in d.arcs() {
                    if !d.has_arc(v, u) {
                        row.check(perturb::perturb(d, PerturbOp::ReverseArc(u, v))?.within_bounds);
                    }
                }
            }
        }
    }
    Ok(row)
}

fn critical_arc_row(corpus: &Corpus) -> Result<Row> {
    let mut row = Row::new("critical_arc_characterization");
    for case in corpus.digraphs.iter().filter(|c| c.d.order() <= 9) {
        if case.d.arc_count() == 0 {
            continue;
        }
        row.instances += 1;
        for &(u, v) in case.d.arcs() {
            row.check(
                perturb::is_critical_arc_direct(&case.d, u, v)?
                    == perturb::is_critical_arc_characterized(&case.d, u, v)?,
            );
        }
    }
    Ok(row)
}

/// The exhaustive minimum over orientations equals the set majority
/// domination number of the base graph.
fn dom_equals_gamma_m(cfg: &SuiteConfig, corpus: &Corpus) -> Result<Row> {
    let mut row = Row::new("dom_equals_gamma_m");
    for case in &corpus.graphs {
        row.instances += 1;
        let sp = orient::spectrum(&case.g, cfg.edge_limit)?;
        row.check(sp.min_value == orient::dom_via_theorem(&case.g, Method::Exact).value);
        row.check(sp.total_orientations() == 1u64 << case.g.edge_count());
    }
    Ok(row)
}

fn ivt_interval(cfg: &SuiteConfig, corpus: &Corpus) -> Result<Row> {
    let mut row = Row::new("intermediate_value_interval");
    for case in &corpus.graphs {
        row.instances += 1;
        let (ok, _) = orient::check_ivt(&case.g, cfg.edge_limit)?;
        row.check(ok);
    }
    Ok(row)
}

fn closed_forms(cfg: &SuiteConfig, corpus: &Corpus) -> Result<Row> {
    let mut row = Row::new("orientable_closed_forms");
    for case in &corpus.graphs {
        let n = case.g.order();
        let sp = orient::spectrum(&case.g, cfg.edge_limit)?;
        let expected: Option<(usize, Option<usize>)> = match case.family {
            Family::Path => Some((n.div_ceil(6), Some(if n >= 3 { n.div_ceil(4) } else { 1 }))),
            Family::Cycle => Some((n.div_ceil(6), Some(n.div_ceil(4)))),
            Family::Star => Some((1, Some(if n >= 3 { (n - 1) / 2 } else { 1 }))),
            Family::Complete => Some((1, Some(1))),
            Family::DoubleStar => Some((
                1,
                Some(if n >= 5 {
                    2 + if n >= 8 { (n - 8).div_ceil(2) } else { 0 }
                } else {
                    1
                }),
            )),
            Family::Wheel => Some((1, Some((n - 2).div_ceil(4)))),
            Family::Bipartite => Some((1, None)),
            Family::Random => None,
        };
        if let Some((dom, upper)) = expected {
            row.instances += 1;
            row.check(sp.min_value == dom);
            if let Some(upper) = upper {
                row.check(sp.max_value == upper);
            }
        }
        // any graph with an edge and at most 4 vertices maxes out at 1
        if n <= 4 && case.g.edge_count() >= 1 {
            row.check(sp.max_value == 1);
        }
    }
    Ok(row)
}

/// Every tournament has a vertex of out-degree at least `ceil((n-1)/2)`.
fn tournament_fact(cfg: &SuiteConfig) -> Result<Row> {
    let mut row = Row::new("tournament_max_out_degree");
    for n in 2..=6usize {
        if n * (n - 1) / 2 > cfg.edge_limit {
            break;
        }
        row.instances += 1;
        let g = family::complete(n)?;
        let need = (n - 1).div_ceil(2);
        let mut all_ok = true;
        orient::scan_orientations(&g, cfg.edge_limit, |_, scan| {
            if scan.max_out_degree() < need {
                all_ok = false;
                return false;
            }
            true
        })?;
        row.check(all_ok);
    }
    Ok(row)
}

fn dom1_bipartite(cfg: &SuiteConfig) -> Result<Row> {
    let mut row = Row::new("dom1_bipartite_characterization");
    let cap = cfg.edge_limit.min(12);
    for r in 1..=cap {
        for s in r..=cap / r {
            row.instances += 1;
            row.check(orient::check_dom1_bipartite(r, s, cfg.edge_limit)?.agrees);
        }
    }
    Ok(row)
}

/// Each explicit orientation reaches the value its construction promises.
fn named_constructions() -> Result<Row> {
    let mut row = Row::new("named_construction_values");
    for n in 2..=12usize {
        row.instances += 1;
        let d = orient::construct_named_orientation(NamedOrientation::PathDom { n })?;
        row.check(gamma(&d) == n.div_ceil(6));
    }
    for n in 3..=12usize {
        row.instances += 1;
        let d = orient::construct_named_orientation(NamedOrientation::StarSink { n })?;
        row.check(gamma(&d) == (n - 1) / 2);
    }
    for a in 1..=4usize {
        for b in a..=4 {
            row.instances += 1;
            let n = a + b + 2;
            let d = orient::construct_named_orientation(NamedOrientation::DoubleStarSink { a, b })?;
            let expected = if n >= 5 {
                2 + if n >= 8 { (n - 8).div_ceil(2) } else { 0 }
            } else {
                1
            };
            row.check(gamma(&d) == expected);
        }
    }
    for n in 4..=12usize {
        row.instances += 1;
        let d = orient::construct_named_orientation(NamedOrientation::WheelSinkHub { n })?;
        row.check(gamma(&d) == (n - 2).div_ceil(4));
    }
    for r in 1..=4usize {
        for s in (r + 3)..=(20 / r).max(r) {
            if r * s > 20 {
                continue;
            }
            row.instances += 1;
            let d =
                orient::construct_named_orientation(NamedOrientation::BipartiteSinkSide { r, s })?;
            row.check(gamma(&d) > 1);
        }
    }
    for r in 3..=4usize {
        for s in r..=r + 2 {
            if r + s < 7 || r * s > 20 {
                continue;
            }
            row.instances += 1;
            let d =
                orient::construct_named_orientation(NamedOrientation::BipartiteTwoOut { r, s })?;
            row.check(gamma(&d) > 1);
        }
    }
    Ok(row)
}

/// Exploratory: the conjectured upper orientable number of `K_{r,s}`.
/// Counted failures are disagreements, but the row never gates.
fn conjecture_row(cfg: &SuiteConfig) -> Result<Row> {
    let mut row = Row::new("conjecture_bipartite");
    row.gating = false;
    let cap = cfg.edge_limit.min(14);
    for r in 1..=cap {
        for s in r..=cap / r {
            match orient::check_conjecture(r, s, cfg.edge_limit)? {
                ConjectureOutcome::NotApplicable { .. } => {}
                ConjectureOutcome::Checked(v) => {
                    row.instances += 1;
                    row.check(v.agrees);
                }
            }
        }
    }
    Ok(row)
}
