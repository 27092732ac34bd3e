//! Orientation exploration: enumerate all `2^|E|` orientations of an
//! undirected graph, compute the minimum and maximum of the set majority
//! out-domination number over them, and check the closed forms and the
//! complete-bipartite conjecture against those exhaustive values.
//!
//! Enumeration order is fixed: a binary counter over the ascending edge
//! list, bit `i` set meaning edge `i` is reversed. The scan keeps per-vertex
//! cover masks incrementally (a counter step flips two edges on average), and
//! a running count of vertices with out-degree at least `ceil(n/2) - 1`
//! answers "is the number 1?" in constant time. Maximum computations discard
//! an orientation as soon as any set no larger than the running maximum is
//! found; only full solves move the maximum and the witness.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::family;
use crate::graph::{Graph, Orientation};
use crate::set::VertexSet;
use crate::solver::{self, majority_threshold, Method, SolveResult};

pub const DEFAULT_EDGE_LIMIT: usize = 24;

fn check_edge_count(g: &Graph, limit: usize) -> Result<usize> {
    let m = g.edge_count();
    let hard = limit.min(62);
    if m > hard {
        return Err(Error::TooLarge {
            what: "orientation enumeration",
            limit: hard,
            actual: m,
            unit: "edges",
        });
    }
    Ok(m)
}

/// Incremental orientation state: cover masks and out-degrees under the
/// current direction assignment.
pub(crate) struct OrientationScan {
    edges: Vec<(usize, usize)>,
    reversed: Vec<bool>,
    pub(crate) masks: Vec<VertexSet>,
    pub(crate) out_deg: Vec<usize>,
    threshold: usize,
    /// Vertices with `out_deg >= threshold - 1`; nonzero iff the number is 1.
    high_out: usize,
}

impl OrientationScan {
    fn new(g: &Graph, threshold: usize) -> Self {
        let n = g.order();
        let mut masks: Vec<VertexSet> = (0..n).map(|v| VertexSet::singleton(n, v)).collect();
        let mut out_deg = vec![0usize; n];
        for &(u, v) in g.edges() {
            masks[u].insert(v);
            out_deg[u] += 1;
        }
        let high_out = out_deg.iter().filter(|&&d| d + 1 >= threshold).count();
        OrientationScan {
            edges: g.edges().to_vec(),
            reversed: vec![false; g.edge_count()],
            masks,
            out_deg,
            threshold,
            high_out,
        }
    }

    fn flip(&mut self, i: usize) {
        let (u, v) = self.edges[i];
        let (from, to) = if self.reversed[i] { (v, u) } else { (u, v) };
        self.masks[from].remove(to);
        self.masks[to].insert(from);
        self.bump(from, false);
        self.bump(to, true);
        self.reversed[i] = !self.reversed[i];
    }

    fn bump(&mut self, v: usize, up: bool) {
        let was_high = self.out_deg[v] + 1 >= self.threshold;
        if up {
            self.out_deg[v] += 1;
        } else {
            self.out_deg[v] -= 1;
        }
        let is_high = self.out_deg[v] + 1 >= self.threshold;
        match (was_high, is_high) {
            (false, true) => self.high_out += 1,
            (true, false) => self.high_out -= 1,
            _ => {}
        }
    }

    /// Is the set majority out-domination number of the current orientation 1?
    pub(crate) fn value_is_one(&self) -> bool {
        self.high_out > 0
    }

    pub(crate) fn max_out_degree(&self) -> usize {
        self.out_deg.iter().copied().max().unwrap_or(0)
    }
}

/// Walks every orientation in binary-counter order; `visit` returns false to
/// stop early. Returns whether the walk completed.
pub(crate) fn scan_orientations(
    g: &Graph,
    limit: usize,
    mut visit: impl FnMut(u64, &OrientationScan) -> bool,
) -> Result<bool> {
    let m = check_edge_count(g, limit)?;
    let threshold = majority_threshold(g.order())?;
    let mut scan = OrientationScan::new(g, threshold);
    let total: u64 = 1 << m;
    for x in 0..total {
        if !visit(x, &scan) {
            return Ok(false);
        }
        if x + 1 < total {
            let mut change = x ^ (x + 1);
            while change != 0 {
                let i = change.trailing_zeros() as usize;
                change &= change - 1;
                scan.flip(i);
            }
        }
    }
    Ok(true)
}

fn orientation_from_counter(g: &Graph, x: u64) -> Orientation {
    let reversed = (0..g.edge_count()).map(|i| x >> i & 1 == 1).collect();
    Orientation::new(g.clone(), reversed)
}

/// Iterator over all orientations in binary-counter order.
pub struct Orientations {
    base: Graph,
    next: u64,
    total: u64,
}

impl Iterator for Orientations {
    type Item = Orientation;

    fn next(&mut self) -> Option<Orientation> {
        if self.next == self.total {
            return None;
        }
        let o = orientation_from_counter(&self.base, self.next);
        self.next += 1;
        Some(o)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next) as usize;
        (left, Some(left))
    }
}

pub fn enumerate_orientations(g: &Graph, limit: usize) -> Result<Orientations> {
    let m = check_edge_count(g, limit)?;
    Ok(Orientations {
        base: g.clone(),
        next: 0,
        total: 1 << m,
    })
}

/// The exact multiset of values over all orientations, with the first
/// attaining orientation for the minimum and the maximum.
#[derive(Clone, Debug)]
pub struct OrientationSpectrum {
    pub base: Graph,
    /// `(value, count)` pairs in ascending value order; counts sum to `2^|E|`.
    pub histogram: Vec<(usize, u64)>,
    pub min_value: usize,
    pub max_value: usize,
    pub min_witness: Orientation,
    pub max_witness: Orientation,
}

impl OrientationSpectrum {
    pub fn total_orientations(&self) -> u64 {
        self.histogram.iter().map(|&(_, c)| c).sum()
    }

    /// Distinct attained values, ascending.
    pub fn values(&self) -> Vec<usize> {
        self.histogram.iter().map(|&(v, _)| v).collect()
    }

    /// Do the attained values form the full interval `[min, max]`?
    pub fn is_full_interval(&self) -> bool {
        self.values() == (self.min_value..=self.max_value).collect::<Vec<_>>()
    }
}

/// Solves every orientation exactly and aggregates the values.
pub fn spectrum(g: &Graph, limit: usize) -> Result<OrientationSpectrum> {
    let threshold = majority_threshold(g.order())?;
    let mut histogram = std::collections::BTreeMap::new();
    let mut min: Option<(usize, u64)> = None;
    let mut max: Option<(usize, u64)> = None;
    scan_orientations(g, limit, |x, scan| {
        let value = if scan.value_is_one() {
            1
        } else {
            solver::exact_cover(&scan.masks, threshold, 2).0
        };
        *histogram.entry(value).or_insert(0u64) += 1;
        if min.is_none_or(|(best, _)| value < best) {
            min = Some((value, x));
        }
        if max.is_none_or(|(best, _)| value > best) {
            max = Some((value, x));
        }
        true
    })?;
    let (min_value, min_x) = min.expect("at least one orientation exists");
    let (max_value, max_x) = max.expect("at least one orientation exists");
    Ok(OrientationSpectrum {
        base: g.clone(),
        histogram: histogram.into_iter().collect(),
        min_value,
        max_value,
        min_witness: orientation_from_counter(g, min_x),
        max_witness: orientation_from_counter(g, max_x),
    })
}

/// The lower orientable number without touching orientations: it equals the
/// set majority domination number of the underlying graph (orient the edges
/// leaving a majority dominating set outward and it keeps dominating).
pub fn dom_via_theorem(g: &Graph, method: Method) -> SolveResult {
    solver::gamma_m_undirected(g, method)
}

/// The upper orientable number, exhaustively but with pruning: an
/// orientation is discarded once any majority out-dominating set no larger
/// than the running maximum is exhibited.
pub fn max_gamma_over_orientations(g: &Graph, limit: usize) -> Result<usize> {
    let threshold = majority_threshold(g.order())?;
    let mut best = 0usize;
    scan_orientations(g, limit, |_, scan| {
        if best >= 1 {
            if scan.value_is_one() {
                return true;
            }
            let (greedy, _, _) = solver::greedy_cover(&scan.masks, threshold);
            if greedy <= best {
                return true;
            }
            if solver::exists_cover_within(&scan.masks, threshold, best) {
                return true;
            }
            // proven larger than the running maximum: solve it fully
            best = solver::exact_cover(&scan.masks, threshold, best + 1).0;
        } else {
            best = if scan.value_is_one() {
                1
            } else {
                solver::exact_cover(&scan.masks, threshold, 2).0
            };
        }
        true
    })?;
    Ok(best)
}

/// Is the upper orientable number exactly 1, i.e. does every orientation
/// keep a vertex of out-degree at least `ceil(n/2) - 1`?
fn dom_is_one(g: &Graph, limit: usize) -> Result<bool> {
    scan_orientations(g, limit, |_, scan| scan.value_is_one())
}

/// Orients `g` so that the majority dominating set `m` becomes a majority
/// out-dominating set: edges from `m` to the outside leave `m`, everything
/// else is decided by the seeded generator.
pub fn orient_from_majority_set(g: &Graph, m: &VertexSet, seed: u64) -> Result<Orientation> {
    let t = majority_threshold(g.order())?;
    if g.closed_neighborhood(m).len() < t {
        return Err(Error::NotMajorityDominating);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let reversed = g
        .edges()
        .iter()
        .map(|&(u, v)| match (m.contains(u), m.contains(v)) {
            (true, false) => false,
            (false, true) => true,
            _ => rng.next_u64() & 1 == 1,
        })
        .collect();
    let o = Orientation::new(g.clone(), reversed);
    debug_assert!(solver::is_mods(&o.digraph(), m));
    Ok(o)
}

/// The explicit orientations used to pin down the orientable numbers of the
/// named families. Labels are 0-based; where a construction speaks of
/// 1-based positions, position `i` is vertex `i - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedOrientation {
    /// Path orientation whose interior position `i` (1-based) has out-degree
    /// 2 exactly when `i = 2 (mod 3)`; attains the lower orientable number
    /// of paths.
    PathDom { n: usize },
    /// Star with every edge pointing into the center; attains the upper
    /// orientable number of stars.
    StarSink { n: usize },
    /// Double star with all leaf edges into their stems and the stem edge
    /// from the `a`-stem to the `b`-stem; attains the upper orientable
    /// number of double stars.
    DoubleStarSink { a: usize, b: usize },
    /// Wheel whose rim is a directed cycle and whose spokes all enter the
    /// hub; attains the upper orientable number of wheels.
    WheelSinkHub { n: usize },
    /// Complete bipartite with every edge entering the r-side.
    BipartiteSinkSide { r: usize, s: usize },
    /// Complete bipartite where r-side vertex `i` (1-based) points exactly
    /// at s-side positions `2i-1` and `2i`, indices folded into `1..=s`.
    BipartiteTwoOut { r: usize, s: usize },
}

pub fn construct_named_orientation(which: NamedOrientation) -> Result<Digraph> {
    match which {
        NamedOrientation::PathDom { n } => {
            if n < 2 {
                return Err(Error::InvalidFamily {
                    spec: format!("{:?}", which),
                    reason: "n must be at least 2".into(),
                });
            }
            // edge between positions q and q+1 (1-based) leaves whichever
            // endpoint is = 2 (mod 3); with neither, it runs left to right
            let arcs = (1..n).map(|q| {
                if q % 3 == 1 {
                    (q, q - 1) // right endpoint is position q+1 = 2 (mod 3)
                } else {
                    (q - 1, q)
                }
            });
            let d = Digraph::new(n, arcs.collect::<Vec<_>>())?;
            for q in 1..n {
                // the last position has one edge only and is exempt
                assert_eq!(
                    d.out_degree(q - 1).unwrap() == 2,
                    q % 3 == 2,
                    "path orientation degree pattern"
                );
            }
            Ok(d)
        }
        NamedOrientation::StarSink { n } => {
            if n < 2 {
                return Err(Error::InvalidFamily {
                    spec: format!("{:?}", which),
                    reason: "n must be at least 2".into(),
                });
            }
            let d = Digraph::new(n, (1..n).map(|v| (v, 0)))?;
            assert_eq!(d.out_degree(0).unwrap(), 0);
            Ok(d)
        }
        NamedOrientation::DoubleStarSink { a, b } => {
            if a < 1 || b < 1 {
                return Err(Error::InvalidFamily {
                    spec: format!("{:?}", which),
                    reason: "both leaf counts must be at least 1".into(),
                });
            }
            let n = a + b + 2;
            let mut arcs = vec![(0, 1)];
            arcs.extend((2..n).map(|leaf| (leaf, if leaf < 2 + a { 0 } else { 1 })));
            let d = Digraph::new(n, arcs)?;
            assert_eq!(d.out_degree(0).unwrap(), 1);
            assert_eq!(d.out_degree(1).unwrap(), 0);
            Ok(d)
        }
        NamedOrientation::WheelSinkHub { n } => {
            if n < 4 {
                return Err(Error::InvalidFamily {
                    spec: format!("{:?}", which),
                    reason: "n must be at least 4".into(),
                });
            }
            let mut arcs: Vec<(usize, usize)> = (1..n).map(|v| (v, 0)).collect();
            arcs.extend((1..n - 1).map(|v| (v, v + 1)));
            arcs.push((n - 1, 1));
            let d = Digraph::new(n, arcs)?;
            assert_eq!(d.out_degree(0).unwrap(), 0);
            for v in 1..n {
                assert_eq!(d.in_degree(v).unwrap(), 1, "rim is a directed cycle");
            }
            Ok(d)
        }
        NamedOrientation::BipartiteSinkSide { r, s } => {
            if r < 1 || s < 1 {
                return Err(Error::InvalidFamily {
                    spec: format!("{:?}", which),
                    reason: "both side sizes must be at least 1".into(),
                });
            }
            let arcs = (0..s).flat_map(|j| (0..r).map(move |i| (r + j, i)));
            let d = Digraph::new(r + s, arcs.collect::<Vec<_>>())?;
            for i in 0..r {
                assert_eq!(d.out_degree(i).unwrap(), 0);
            }
            Ok(d)
        }
        NamedOrientation::BipartiteTwoOut { r, s } => {
            if r < 1 || s < 2 {
                return Err(Error::InvalidFamily {
                    spec: format!("{:?}", which),
                    reason: "needs r >= 1 and s >= 2".into(),
                });
            }
            let mut arcs = Vec::with_capacity(r * s);
            for i in 1..=r {
                let ja = (2 * i - 2) % s + 1;
                let jb = (2 * i - 1) % s + 1;
                for j in 1..=s {
                    let (ui, vj) = (i - 1, r + j - 1);
                    if j == ja || j == jb {
                        arcs.push((ui, vj));
                    } else {
                        arcs.push((vj, ui));
                    }
                }
            }
            let d = Digraph::new(r + s, arcs)?;
            for i in 0..r {
                assert_eq!(d.out_degree(i).unwrap(), 2);
            }
            Ok(d)
        }
    }
}

/// Are the attained values over all orientations exactly the interval
/// between the lower and upper orientable numbers?
pub fn check_ivt(g: &Graph, limit: usize) -> Result<(bool, Vec<usize>)> {
    let sp = spectrum(g, limit)?;
    Ok((sp.is_full_interval(), sp.values()))
}

/// Exhaustive check of the "upper orientable number is 1" characterization
/// for complete bipartite graphs.
#[derive(Clone, Copy, Debug)]
pub struct Dom1Check {
    pub r: usize,
    pub s: usize,
    pub exhaustive_is_one: bool,
    pub characterization_says_one: bool,
    pub agrees: bool,
}

pub fn check_dom1_bipartite(r: usize, s: usize, limit: usize) -> Result<Dom1Check> {
    if r > s {
        return Err(Error::BipartiteOrder(r, s));
    }
    let g = family::complete_bipartite(r, s)?;
    let exhaustive = dom_is_one(&g, limit)?;
    let by_cases = r + s <= 4 || matches!((r, s), (2, 3) | (2, 4) | (3, 3));
    Ok(Dom1Check {
        r,
        s,
        exhaustive_is_one: exhaustive,
        characterization_says_one: by_cases,
        agrees: exhaustive == by_cases,
    })
}

/// Exhaustively computed upper orientable number of `K_{r,s}` next to the
/// conjectured closed form. Reported, never asserted.
#[derive(Clone, Copy, Debug)]
pub struct ConjectureVerdict {
    pub r: usize,
    pub s: usize,
    pub computed: usize,
    pub conjectured: usize,
    pub agrees: bool,
    pub method: &'static str,
}

#[derive(Clone, Copy, Debug)]
pub enum ConjectureOutcome {
    /// The conjecture presumes an upper orientable number above 1.
    NotApplicable {
        r: usize,
        s: usize,
    },
    Checked(ConjectureVerdict),
}

pub fn check_conjecture(r: usize, s: usize, limit: usize) -> Result<ConjectureOutcome> {
    if r > s {
        return Err(Error::BipartiteOrder(r, s));
    }
    let g = family::complete_bipartite(r, s)?;
    let computed = max_gamma_over_orientations(&g, limit)?;
    if computed == 1 {
        return Ok(ConjectureOutcome::NotApplicable { r, s });
    }
    let conjectured = if s <= r + 2 { 2 } else { (s - r).div_ceil(2) };
    Ok(ConjectureOutcome::Checked(ConjectureVerdict {
        r,
        s,
        computed,
        conjectured,
        agrees: computed == conjectured,
        method: "exhaustive",
    }))
}
