//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Criteria 1-2 pin the closed forms of the directed families, 3-4 pin the
//! solver and the minimality characterization against brute-force oracles
//! over a 500-instance seeded random corpus, 5-6 pin the bound set and the
//! edit theorems, 7-9 pin the orientation results exhaustively, and 10 pins
//! byte-level determinism of the suite command.

use std::time::Instant;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use mods::bounds;
use mods::cli::run_from_args;
use mods::digraph::Digraph;
use mods::family;
use mods::graph::Graph;
use mods::orient::{self, ConjectureOutcome};
use mods::perturb::{self, PerturbOp};
use mods::set::VertexSet;
use mods::solver::{self, Method};

fn report(criterion: usize, description: &str, failures: usize) {
    println!(
        "criterion {:2} [{}]: {}",
        criterion,
        if failures == 0 { "PASS" } else { "FAIL" },
        description
    );
    assert_eq!(failures, 0, "criterion {} failed", criterion);
}

/// The shared random corpus: 500 seeded digraphs with n <= 10 and
/// p cycling over 0.1, 0.3, 0.5.
fn random_corpus() -> Vec<Digraph> {
    (0..500)
        .map(|i| {
            let n = 1 + i % 10;
            let p = [0.1, 0.3, 0.5][i % 3];
            family::random_digraph(n, p, 3000 + i as u64).unwrap()
        })
        .collect()
}

fn family_corpus() -> Vec<Digraph> {
    let mut out = Vec::new();
    for n in 1..=16 {
        out.push(family::dipath(n).unwrap());
        if n >= 3 {
            out.push(family::dicycle(n).unwrap());
        }
        if n <= 10 {
            out.push(family::empty_digraph(n).unwrap());
        }
    }
    for k in 3..=5 {
        out.push(family::figure1(k).unwrap());
    }
    out
}

fn gamma(d: &Digraph) -> usize {
    solver::gamma_m_plus(d, Method::Exact).value
}

#[test]
fn criterion_01_directed_family_closed_forms() {
    let start = Instant::now();
    let mut failures = 0;
    for n in 3..=16usize {
        let p = family::dipath(n).unwrap();
        let c = family::dicycle(n).unwrap();
        failures += usize::from(gamma(&p) != n.div_ceil(4));
        failures += usize::from(gamma(&c) != n.div_ceil(4));
        failures += usize::from(solver::gamma_plus(&p, Method::Exact).value != n.div_ceil(2));
        failures += usize::from(solver::gamma_plus(&c, Method::Exact).value != n.div_ceil(2));
    }
    let elapsed = start.elapsed();
    failures += usize::from(elapsed.as_secs() >= 10);
    report(
        1,
        &format!(
            "path/cycle closed forms for n=3..16 in {:.2?} (limit 10s)",
            elapsed
        ),
        failures,
    );
}

#[test]
fn criterion_02_two_sink_family() {
    let mut failures = 0;
    for k in 3..=5usize {
        let f = family::figure1(k).unwrap();
        failures += usize::from(gamma(&f) != k);
    }
    report(
        2,
        "figure-one family value equals its block size for k=3,4,5",
        failures,
    );
}

#[test]
fn criterion_03_oracle_equivalence() {
    let mut failures = 0;
    for d in &random_corpus() {
        let e = solver::gamma_m_plus(d, Method::Exact);
        let o = solver::gamma_m_plus(d, Method::Oracle);
        if e.value != o.value || e.witness != o.witness {
            failures += 1;
        }
    }
    report(
        3,
        "exact search equals the subset oracle (value and witness) on 500 random digraphs",
        failures,
    );
}

#[test]
fn criterion_04_minimality_characterization() {
    let mut failures = 0;
    let mut tested = 0u64;
    for (i, d) in random_corpus().iter().enumerate() {
        let n = d.order();
        for s in solver::enumerate_minimal_mods(d, 100_000).sets {
            tested += 1;
            if !solver::is_minimal_mods_characterized(d, &s).unwrap() {
                failures += 1;
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(4000 + i as u64);
        let mut sampled = 0;
        let mut attempts = 0;
        while sampled < 50 && attempts < 2000 {
            attempts += 1;
            let bits = rng.next_u64();
            let s = VertexSet::from_vertices(n, (0..n).filter(|v| bits >> v & 1 == 1));
            if s.is_empty() || !solver::is_mods(d, &s) {
                continue;
            }
            sampled += 1;
            tested += 1;
            if solver::is_minimal_mods_direct(d, &s).unwrap()
                != solver::is_minimal_mods_characterized(d, &s).unwrap()
            {
                failures += 1;
            }
        }
    }
    report(
        4,
        &format!(
            "direct minimality equals the characterization on {} tested MODSs",
            tested
        ),
        failures,
    );
}

#[test]
fn criterion_05_bounds_suite() {
    let mut failures = 0;
    let mut corpus = random_corpus();
    corpus.extend(family_corpus());
    for d in &corpus {
        let r = bounds::bound_report(d, bounds::DEFAULT_DP_LIMIT).unwrap();
        if !r.all_hold() {
            failures += 1;
        }
    }
    // claimed sharpness: structural bounds on paths and cycles
    for n in 3..=16usize {
        let r = bounds::bound_report(&family::dipath(n).unwrap(), 18).unwrap();
        failures += usize::from(!r.entry("upper_longest_path").unwrap().tight);
        let r = bounds::bound_report(&family::dicycle(n).unwrap(), 18).unwrap();
        failures += usize::from(!r.entry("upper_longest_cycle").unwrap().tight);
    }
    // the degree disjunction is sharp on the 6-path
    let r = bounds::bound_report(&family::dipath(6).unwrap(), 18).unwrap();
    failures += usize::from(!r.entry("upper_degree_or_one").unwrap().tight);
    // the degree lower bound is sharp on double stars oriented off the stems
    for a in 1..=4usize {
        for b in a..=4 {
            let n = a + b + 2;
            let mut arcs = vec![(0, 1)];
            arcs.extend((2..2 + a).map(|l| (0, l)));
            arcs.extend((2 + a..n).map(|l| (1, l)));
            let d = Digraph::new(n, arcs).unwrap();
            let lower = n.div_ceil(2 * (d.max_out_degree() + 1));
            failures += usize::from(lower != gamma(&d));
        }
    }
    report(
        5,
        "all bounds hold on the corpus; tight where sharpness is claimed",
        failures,
    );
}

#[test]
fn criterion_06_perturbation_theorems() {
    let mut failures = 0;
    let mut corpus = random_corpus();
    corpus.extend(family_corpus());
    corpus.retain(|d| d.order() <= 9);
    for d in &corpus {
        let n = d.order();
        for &(u, v) in d.arcs() {
            if !perturb::perturb(d, PerturbOp::RemoveArc(u, v))
                .unwrap()
                .within_bounds
            {
                failures += 1;
            }
            if !d.has_arc(v, u)
                && !perturb::perturb(d, PerturbOp::ReverseArc(u, v))
                    .unwrap()
                    .within_bounds
            {
                failures += 1;
            }
            if perturb::is_critical_arc_direct(d, u, v).unwrap()
                != perturb::is_critical_arc_characterized(d, u, v).unwrap()
            {
                failures += 1;
            }
        }
        for v in 0..n {
            if n >= 2
                && !perturb::perturb(d, PerturbOp::RemoveVertex(v))
                    .unwrap()
                    .within_bounds
            {
                failures += 1;
            }
            for w in 0..n {
                if v != w
                    && !d.has_arc(v, w)
                    && !perturb::perturb(d, PerturbOp::AddArc(v, w))
                        .unwrap()
                        .within_bounds
                {
                    failures += 1;
                }
            }
        }
    }
    report(
        6,
        "edit ranges hold and criticality tests agree on every target with n <= 9",
        failures,
    );
}

struct OrientExpectation {
    g: Graph,
    dom: usize,
    upper: Option<usize>,
    label: String,
}

fn orientation_corpus() -> Vec<OrientExpectation> {
    let mut cases = Vec::new();
    let mut push = |g: Graph, dom: usize, upper: Option<usize>, label: String| {
        assert!(g.edge_count() <= 16, "{} too large", label);
        cases.push(OrientExpectation {
            g,
            dom,
            upper,
            label,
        });
    };
    for n in 2..=17usize {
        let upper = if n >= 3 { n.div_ceil(4) } else { 1 };
        push(
            family::path(n).unwrap(),
            n.div_ceil(6),
            Some(upper),
            format!("path:{}", n),
        );
    }
    for n in 3..=16usize {
        push(
            family::cycle(n).unwrap(),
            n.div_ceil(6),
            Some(n.div_ceil(4)),
            format!("cycle:{}", n),
        );
    }
    for n in 3..=17usize {
        push(
            family::star(n).unwrap(),
            1,
            Some((n - 1) / 2),
            format!("star:{}", n),
        );
    }
    for n in 1..=6usize {
        push(
            family::complete(n).unwrap(),
            1,
            Some(1),
            format!("complete:{}", n),
        );
    }
    for a in 1..=7usize {
        for b in a..=(15 - a) {
            let n = a + b + 2;
            let upper = if n >= 5 {
                2 + if n >= 8 { (n - 8).div_ceil(2) } else { 0 }
            } else {
                1
            };
            push(
                family::double_star(a, b).unwrap(),
                1,
                Some(upper),
                format!("doublestar:{},{}", a, b),
            );
        }
    }
    for n in 4..=9usize {
        push(
            family::wheel(n).unwrap(),
            1,
            Some((n - 2).div_ceil(4)),
            format!("wheel:{}", n),
        );
    }
    for r in 1..=4usize {
        for s in r..=(16 / r) {
            push(
                family::complete_bipartite(r, s).unwrap(),
                1,
                None,
                format!("bipartite:{},{}", r, s),
            );
        }
    }
    for i in 0..50usize {
        let n = 2 + i % 6;
        let g = family::random_connected_graph(n, 0.5, 2000 + i as u64).unwrap();
        assert!(g.is_connected());
        let dom = orient::dom_via_theorem(&g, Method::Exact).value;
        push(g, dom, None, format!("randgraph:{}", i));
    }
    cases
}

#[test]
fn criterion_07_orientation_theorems() {
    let start = Instant::now();
    let mut failures = 0;
    let cases = orientation_corpus();
    let count = cases.len();
    for case in &cases {
        let sp = orient::spectrum(&case.g, 24).unwrap();
        let theorem = orient::dom_via_theorem(&case.g, Method::Exact).value;
        if sp.min_value != theorem || sp.min_value != case.dom {
            println!("  min mismatch on {}", case.label);
            failures += 1;
        }
        if !sp.is_full_interval() {
            println!("  interval gap on {}", case.label);
            failures += 1;
        }
        if let Some(upper) = case.upper {
            if sp.max_value != upper {
                println!(
                    "  max mismatch on {}: {} != {}",
                    case.label, sp.max_value, upper
                );
                failures += 1;
            }
        }
        if case.g.order() <= 4 && case.g.edge_count() >= 1 && sp.max_value != 1 {
            println!("  small-order max mismatch on {}", case.label);
            failures += 1;
        }
    }
    let elapsed = start.elapsed();
    failures += usize::from(elapsed.as_secs() >= 600);
    report(
        7,
        &format!(
            "orientation minimum/interval/closed forms over {} graphs in {:.2?} (limit 10min)",
            count, elapsed
        ),
        failures,
    );
}

#[test]
fn criterion_08_dom1_bipartite_characterization() {
    let mut failures = 0;
    let mut pairs = 0;
    for r in 1..=4usize {
        for s in r..=(16 / r) {
            pairs += 1;
            if !orient::check_dom1_bipartite(r, s, 24).unwrap().agrees {
                failures += 1;
            }
        }
    }
    report(
        8,
        &format!(
            "bipartite upper-number-is-one characterization on {} pairs",
            pairs
        ),
        failures,
    );
}

#[test]
fn criterion_09_conjecture_report() {
    // exploratory by design: verdicts are computed and printed, never
    // asserted against the conjectured values
    let mut failures = 0;
    let mut applicable = 0;
    for r in 1..=4usize {
        for s in r..=(20 / r) {
            match orient::check_conjecture(r, s, 24).unwrap() {
                ConjectureOutcome::NotApplicable { .. } => {
                    println!("  K({},{}): not applicable (upper number is 1)", r, s);
                }
                ConjectureOutcome::Checked(v) => {
                    applicable += 1;
                    println!(
                        "  K({},{}): computed {} conjectured {} agree {}",
                        r, s, v.computed, v.conjectured, v.agrees
                    );
                    // sanity only: the hypothesis filter worked
                    failures += usize::from(v.computed < 2);
                }
            }
        }
    }
    report(
        9,
        &format!(
            "conjecture verdicts recorded for {} applicable pairs",
            applicable
        ),
        failures,
    );
}

#[test]
fn criterion_10_suite_determinism() {
    let args = [
        "suite",
        "--random",
        "25",
        "--max-n",
        "8",
        "--seed",
        "7",
        "--format",
        "structured",
    ];
    let (code1, out1) = run_from_args(args.iter().copied());
    let (code2, out2) = run_from_args(args.iter().copied());
    let mut failures = 0;
    failures += usize::from(code1 != 0);
    failures += usize::from(code2 != 0);
    failures += usize::from(out1 != out2);
    failures += usize::from(!out1.contains("suite_status pass"));
    report(
        10,
        "suite runs with one seed produce byte-identical structured output",
        failures,
    );
}
