//! Canonical generators for the named graph and digraph families, plus
//! seeded pseudo-random instances.
//!
//! Random generation uses the ChaCha8 stream cipher keyed by the 64-bit seed
//! (`ChaCha8Rng::seed_from_u64`). Arc slots are scanned in ascending
//! lexicographic order of ordered pairs and an arc is emitted when the next
//! 64-bit draw, as a fraction of 2^64, is below `p`. Identical `(n, p, seed)`
//! therefore reproduces the identical instance on every platform.

use std::fmt;
use std::str::FromStr;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::graph::{Graph, Orientation};

/// Directed path `0 -> 1 -> ... -> n-1`.
pub fn dipath(n: usize) -> Result<Digraph> {
    Digraph::new(n, (1..n).map(|v| (v - 1, v)))
}

/// Directed cycle; requires `n >= 3`.
pub fn dicycle(n: usize) -> Result<Digraph> {
    if n < 3 {
        return Err(param_err("dicycle", "n must be at least 3"));
    }
    Digraph::new(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// Digraph with no arcs.
pub fn empty_digraph(n: usize) -> Result<Digraph> {
    Digraph::new(n, [])
}

/// The two-sink digraph on `2k + 4` vertices used as a counterexample to
/// weight-based reasoning: sinks `u = 0` and `v = 1`, a block of `k` vertices
/// `2..k+2` with arcs to both sinks, and a block of `k + 2` vertices
/// `k+2..2k+4` with arcs to `v` only. Requires `k >= 3`.
pub fn figure1(k: usize) -> Result<Digraph> {
    if k < 3 {
        return Err(param_err("figure1", "k must be at least 3"));
    }
    let n = 2 * k + 4;
    let mut arcs = Vec::with_capacity(3 * k + 2);
    for s in 2..k + 2 {
        arcs.push((s, 0));
        arcs.push((s, 1));
    }
    for t in k + 2..n {
        arcs.push((t, 1));
    }
    Digraph::new(n, arcs)
}

/// Undirected path `0 - 1 - ... - n-1`.
pub fn path(n: usize) -> Result<Graph> {
    Graph::new(n, (1..n).map(|v| (v - 1, v)))
}

/// Undirected cycle; requires `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(param_err("cycle", "n must be at least 3"));
    }
    Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// Complete graph.
pub fn complete(n: usize) -> Result<Graph> {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::new(n, edges.collect::<Vec<_>>())
}

/// Star `K_{1,n-1}` with center 0; requires `n >= 2`.
pub fn star(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(param_err("star", "n must be at least 2"));
    }
    Graph::new(n, (1..n).map(|v| (0, v)))
}

/// Double star: adjacent stems 0 and 1 carrying `a` and `b` pendant leaves;
/// requires `a, b >= 1`.
pub fn double_star(a: usize, b: usize) -> Result<Graph> {
    if a < 1 || b < 1 {
        return Err(param_err(
            "doublestar",
            "both leaf counts must be at least 1",
        ));
    }
    let n = a + b + 2;
    let mut edges = vec![(0, 1)];
    edges.extend((2..2 + a).map(|l| (0, l)));
    edges.extend((2 + a..n).map(|l| (1, l)));
    Graph::new(n, edges)
}

/// Wheel: hub 0 joined to every vertex of the cycle `1..n`; requires `n >= 4`.
pub fn wheel(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(param_err("wheel", "n must be at least 4"));
    }
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (0, v)).collect();
    edges.extend((1..n - 1).map(|v| (v, v + 1)));
    edges.push((1, n - 1));
    Graph::new(n, edges)
}

/// Complete bipartite `K_{r,s}` with sides `0..r` and `r..r+s`; requires
/// `r, s >= 1`.
pub fn complete_bipartite(r: usize, s: usize) -> Result<Graph> {
    if r < 1 || s < 1 {
        return Err(param_err("bipartite", "both side sizes must be at least 1"));
    }
    let edges = (0..r).flat_map(|u| (0..s).map(move |j| (u, r + j)));
    Graph::new(r + s, edges.collect::<Vec<_>>())
}

/// Seeded random digraph: every ordered pair `(u, v)`, `u != v`, becomes an
/// arc independently with probability `p`.
pub fn random_digraph(n: usize, p: f64, seed: u64) -> Result<Digraph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    if n == 0 {
        return Err(Error::EmptyOrder);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let threshold = prob_threshold(p);
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && (rng.next_u64() as u128) < threshold {
                arcs.push((u, v));
            }
        }
    }
    Digraph::new(n, arcs)
}

/// Seeded random graph: every unordered pair becomes an edge with
/// probability `p`; pairs scanned in ascending `(u, v)` order, `u < v`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    if n == 0 {
        return Err(Error::EmptyOrder);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let threshold = prob_threshold(p);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if (rng.next_u64() as u128) < threshold {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

/// Seeded random connected graph, by rejection over [`random_graph`] with
/// the seed advanced on every retry.
pub fn random_connected_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    for attempt in 0..10_000 {
        let g = random_graph(n, p, seed.wrapping_add(attempt))?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    // p too small for n; fall back to a path so corpus generation never stalls
    path(n)
}

/// Seeded uniformly random orientation: one ChaCha8 draw per edge, low bit
/// set meaning the edge is reversed (`v -> u` for the stored `(u, v)`).
pub fn random_orientation(g: &Graph, seed: u64) -> Orientation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let reversed = g.edges().iter().map(|_| rng.next_u64() & 1 == 1).collect();
    Orientation::new(g.clone(), reversed)
}

fn prob_threshold(p: f64) -> u128 {
    // arc present iff next_u64 < p * 2^64, computed without overflow at p = 1
    (p * (u64::MAX as f64 + 1.0)) as u128
}

fn param_err(family: &str, reason: &str) -> Error {
    Error::InvalidFamily {
        spec: family.to_string(),
        reason: reason.to_string(),
    }
}

/// Either kind of instance, as loaded from a file or family spec.
#[derive(Clone, Debug)]
pub enum Instance {
    Digraph(Digraph),
    Graph(Graph),
}

impl Instance {
    pub fn kind(&self) -> &'static str {
        match self {
            Instance::Digraph(_) => "digraph",
            Instance::Graph(_) => "graph",
        }
    }

    pub fn order(&self) -> usize {
        match self {
            Instance::Digraph(d) => d.order(),
            Instance::Graph(g) => g.order(),
        }
    }

    pub fn into_digraph(self) -> Result<Digraph> {
        match self {
            Instance::Digraph(d) => Ok(d),
            Instance::Graph(_) => Err(Error::WrongKind {
                expected: "digraph",
                got: "graph",
            }),
        }
    }

    pub fn into_graph(self) -> Result<Graph> {
        match self {
            Instance::Graph(g) => Ok(g),
            Instance::Digraph(_) => Err(Error::WrongKind {
                expected: "graph",
                got: "digraph",
            }),
        }
    }
}

/// A parsed family spec string such as `dipath:8` or `bipartite:2,5`.
#[derive(Clone, Debug, PartialEq)]
pub enum FamilySpec {
    Dipath { n: usize },
    Dicycle { n: usize },
    Figure1 { k: usize },
    Empty { n: usize },
    RandDigraph { n: usize, p: f64, seed: u64 },
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    Star { n: usize },
    DoubleStar { a: usize, b: usize },
    Wheel { n: usize },
    Bipartite { r: usize, s: usize },
}

/// Family names accepted by [`FamilySpec::from_str`], used to decide whether
/// an instance argument is a spec or a file path.
pub const FAMILY_NAMES: &[&str] = &[
    "dipath",
    "dicycle",
    "figure1",
    "empty",
    "randdigraph",
    "path",
    "cycle",
    "complete",
    "star",
    "doublestar",
    "wheel",
    "bipartite",
];

impl FamilySpec {
    pub fn build(&self) -> Result<Instance> {
        Ok(match *self {
            FamilySpec::Dipath { n } => Instance::Digraph(dipath(n)?),
            FamilySpec::Dicycle { n } => Instance::Digraph(dicycle(n)?),
            FamilySpec::Figure1 { k } => Instance::Digraph(figure1(k)?),
            FamilySpec::Empty { n } => Instance::Digraph(empty_digraph(n)?),
            FamilySpec::RandDigraph { n, p, seed } => {
                Instance::Digraph(random_digraph(n, p, seed)?)
            }
            FamilySpec::Path { n } => Instance::Graph(path(n)?),
            FamilySpec::Cycle { n } => Instance::Graph(cycle(n)?),
            FamilySpec::Complete { n } => Instance::Graph(complete(n)?),
            FamilySpec::Star { n } => Instance::Graph(star(n)?),
            FamilySpec::DoubleStar { a, b } => Instance::Graph(double_star(a, b)?),
            FamilySpec::Wheel { n } => Instance::Graph(wheel(n)?),
            FamilySpec::Bipartite { r, s } => Instance::Graph(complete_bipartite(r, s)?),
        })
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::InvalidFamily {
            spec: s.to_string(),
            reason: reason.to_string(),
        };
        let (name, args) = s.split_once(':').ok_or_else(|| bad("expected name:args"))?;
        let parts: Vec<&str> = args.split(',').collect();
        let num = |i: usize| -> Result<usize> {
            parts
                .get(i)
                .and_then(|t| t.trim().parse().ok())
                .ok_or_else(|| bad("expected an integer argument"))
        };
        let arity = |k: usize| -> Result<()> {
            if parts.len() == k {
                Ok(())
            } else {
                Err(bad(&format!("expected {} argument(s)", k)))
            }
        };
        let spec = match name {
            "dipath" => {
                arity(1)?;
                FamilySpec::Dipath { n: num(0)? }
            }
            "dicycle" => {
                arity(1)?;
                FamilySpec::Dicycle { n: num(0)? }
            }
            "figure1" => {
                arity(1)?;
                FamilySpec::Figure1 { k: num(0)? }
            }
            "empty" => {
                arity(1)?;
                FamilySpec::Empty { n: num(0)? }
            }
            "randdigraph" => {
                arity(3)?;
                let p: f64 = parts[1]
                    .trim()
                    .parse()
                    .map_err(|_| bad("expected a probability"))?;
                if !(0.0..=1.0).contains(&p) {
                    return Err(bad("probability must be in [0, 1]"));
                }
                let seed: u64 = parts[2]
                    .trim()
                    .parse()
                    .map_err(|_| bad("expected an integer seed"))?;
                FamilySpec::RandDigraph {
                    n: num(0)?,
                    p,
                    seed,
                }
            }
            "path" => {
                arity(1)?;
                FamilySpec::Path { n: num(0)? }
            }
            "cycle" => {
                arity(1)?;
                FamilySpec::Cycle { n: num(0)? }
            }
            "complete" => {
                arity(1)?;
                FamilySpec::Complete { n: num(0)? }
            }
            "star" => {
                arity(1)?;
                FamilySpec::Star { n: num(0)? }
            }
            "doublestar" => {
                arity(2)?;
                FamilySpec::DoubleStar {
                    a: num(0)?,
                    b: num(1)?,
                }
            }
            "wheel" => {
                arity(1)?;
                FamilySpec::Wheel { n: num(0)? }
            }
            "bipartite" => {
                arity(2)?;
                FamilySpec::Bipartite {
                    r: num(0)?,
                    s: num(1)?,
                }
            }
            other => return Err(bad(&format!("unknown family `{}`", other))),
        };
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Dipath { n } => write!(f, "dipath:{}", n),
            FamilySpec::Dicycle { n } => write!(f, "dicycle:{}", n),
            FamilySpec::Figure1 { k } => write!(f, "figure1:{}", k),
            FamilySpec::Empty { n } => write!(f, "empty:{}", n),
            FamilySpec::RandDigraph { n, p, seed } => {
                write!(f, "randdigraph:{},{},{}", n, p, seed)
            }
            FamilySpec::Path { n } => write!(f, "path:{}", n),
            FamilySpec::Cycle { n } => write!(f, "cycle:{}", n),
            FamilySpec::Complete { n } => write!(f, "complete:{}", n),
            FamilySpec::Star { n } => write!(f, "star:{}", n),
            FamilySpec::DoubleStar { a, b } => write!(f, "doublestar:{},{}", a, b),
            FamilySpec::Wheel { n } => write!(f, "wheel:{}", n),
            FamilySpec::Bipartite { r, s } => write!(f, "bipartite:{},{}", r, s),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_instances() {
        assert_eq!(dipath(4).unwrap().arcs(), &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(
            dicycle(4).unwrap().arcs(),
            &[(0, 1), (1, 2), (2, 3), (3, 0)]
        );
        let f = figure1(3).unwrap();
        assert_eq!(f.order(), 10);
        assert_eq!(f.arc_count(), 11);
        let w = wheel(5).unwrap();
        assert_eq!(w.degree(0).unwrap(), 4);
        for v in 1..5 {
            assert_eq!(w.degree(v).unwrap(), 3);
        }
        let ds = double_star(2, 3).unwrap();
        assert_eq!(ds.order(), 7);
        assert_eq!(ds.degree(0).unwrap(), 3);
        assert_eq!(ds.degree(1).unwrap(), 4);
        let b = complete_bipartite(2, 3).unwrap();
        assert_eq!(b.edge_count(), 6);
    }

    #[test]
    fn parameter_errors_name_the_constraint() {
        for bad in [
            "dicycle:2",
            "figure1:2",
            "wheel:3",
            "doublestar:0,1",
            "star:1",
        ] {
            let spec: FamilySpec = bad.parse().unwrap();
            let err = spec.build().unwrap_err();
            assert!(matches!(err, Error::InvalidFamily { .. }), "{}", bad);
        }
        assert!("nosuch:3".parse::<FamilySpec>().is_err());
        assert!("dipath:x".parse::<FamilySpec>().is_err());
        assert!("doublestar:2".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn spec_round_trip() {
        for s in [
            "dipath:8",
            "figure1:3",
            "doublestar:2,3",
            "bipartite:2,5",
            "randdigraph:8,0.3,42",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
    }

    #[test]
    fn random_digraph_extremes() {
        let zero = random_digraph(5, 0.0, 99).unwrap();
        assert_eq!(zero.arc_count(), 0);
        let one = random_digraph(3, 1.0, 7).unwrap();
        assert_eq!(one.arc_count(), 6);
        assert!(matches!(
            random_digraph(4, 1.5, 0),
            Err(Error::InvalidProbability(_))
        ));
    }

    #[test]
    fn random_digraph_is_reproducible() {
        let a = random_digraph(8, 0.3, 42).unwrap();
        let b = random_digraph(8, 0.3, 42).unwrap();
        assert_eq!(a.arcs(), b.arcs());
        let c = random_digraph(8, 0.3, 43).unwrap();
        assert_ne!(a.arcs(), c.arcs());
    }

    #[test]
    fn random_orientation_is_reproducible() {
        let g = cycle(6).unwrap();
        let a = random_orientation(&g, 5);
        let b = random_orientation(&g, 5);
        assert_eq!(a.reversed(), b.reversed());
    }
}
