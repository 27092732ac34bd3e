//! Exact solvers for majority out-domination and its relatives.
//!
//! Everything here reduces to one covering question: given a per-vertex
//! cover mask (the closed out-neighborhood, or the closed undirected
//! neighborhood) and a coverage threshold, find the smallest vertex set
//! whose masks cover at least `threshold` vertices.
//!
//! * the **oracle** enumerates subsets by increasing cardinality and
//!   lexicographically within a cardinality, with no pruning at all; it is
//!   the ground truth every other strategy is tested against,
//! * the **exact** solver runs the same lexicographic search one cardinality
//!   level at a time, branching on the lowest-index undecided vertex and
//!   pruning a branch when the remaining deficit exceeds what the remaining
//!   picks can still cover; the greedy bound seeds the deepening, and the
//!   first full set found at the first feasible level is exactly the
//!   oracle's witness,
//! * **greedy** repeatedly takes the vertex covering the most new ground.
//!
//! All solvers break ties toward the lexicographically smallest witness in
//! ascending-vertex-sequence order.

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// Coverage needed for a majority: `ceil(n / 2)`. A set `S` satisfies
/// `|N+[S]| >= n/2` exactly when it satisfies `|N+[S]| >= ceil(n/2)`, so
/// this is the single source of truth for the majority threshold.
pub fn majority_threshold(n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::EmptyOrder);
    }
    Ok(n.div_ceil(2))
}

fn threshold_of(d: &Digraph) -> usize {
    d.order().div_ceil(2)
}

/// Is `s` a majority out-dominating set of `d`?
pub fn is_mods(d: &Digraph, s: &VertexSet) -> bool {
    d.closed_out_neighborhood(s).len() >= threshold_of(d)
}

/// Solver strategy requested by a caller.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Exact,
    Oracle,
}

/// Strategy that actually produced a [`SolveResult`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveMethod {
    Exact,
    Oracle,
    Greedy,
}

impl std::fmt::Display for SolveMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SolveMethod::Exact => "exact",
            SolveMethod::Oracle => "oracle",
            SolveMethod::Greedy => "greedy",
        })
    }
}

#[derive(Clone, Debug)]
pub struct SolveResult {
    pub value: usize,
    pub witness: VertexSet,
    pub method: SolveMethod,
    /// Search nodes visited (exact), subsets tested (oracle), or picks made
    /// (greedy). Diagnostics only.
    pub explored: u64,
}

/// Set majority out-domination number: the minimum cardinality of a MODS.
pub fn gamma_m_plus(d: &Digraph, method: Method) -> SolveResult {
    solve(&d.cover_masks(), threshold_of(d), method)
}

/// Out-domination number: minimum `S` with `N+[S] = V`.
pub fn gamma_plus(d: &Digraph, method: Method) -> SolveResult {
    solve(&d.cover_masks(), d.order(), method)
}

/// Set majority domination number of an undirected graph.
pub fn gamma_m_undirected(g: &Graph, method: Method) -> SolveResult {
    solve(&g.cover_masks(), g.order().div_ceil(2), method)
}

/// Greedy upper bound: repeatedly pick the vertex covering the most new
/// vertices (ties to the smallest label) until the majority threshold is
/// met. The result is always a MODS, never smaller than the optimum.
pub fn greedy_mods(d: &Digraph) -> SolveResult {
    let (value, witness, explored) = greedy_cover(&d.cover_masks(), threshold_of(d));
    SolveResult {
        value,
        witness,
        method: SolveMethod::Greedy,
        explored,
    }
}

pub(crate) fn solve(masks: &[VertexSet], threshold: usize, method: Method) -> SolveResult {
    let (value, witness, explored) = match method {
        Method::Exact => exact_cover(masks, threshold, 1),
        Method::Oracle => oracle_cover(masks, threshold),
    };
    SolveResult {
        value,
        witness,
        method: match method {
            Method::Exact => SolveMethod::Exact,
            Method::Oracle => SolveMethod::Oracle,
        },
        explored,
    }
}

/// Is `s` a MODS no one-vertex removal of which stays a MODS? Errors when
/// `s` is not a MODS at all.
pub fn is_minimal_mods_direct(d: &Digraph, s: &VertexSet) -> Result<bool> {
    if !is_mods(d, s) {
        return Err(Error::NotAMods);
    }
    for v in s.iter() {
        let mut smaller = s.clone();
        smaller.remove(v);
        if is_mods(d, &smaller) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Minimality via private-neighbor accounting instead of re-covering.
///
/// Removing `v` from `s` costs exactly its external private out-neighbors,
/// plus `v` itself when no other member of `s` out-dominates it. `s` is
/// minimal iff for every member that loss exceeds the slack
/// `|N+[S]| - ceil(n/2)`: with slack zero this is the familiar condition
/// that `v` has a private neighbor or is in-isolated within `D[S]`.
pub fn is_minimal_mods_characterized(d: &Digraph, s: &VertexSet) -> Result<bool> {
    let t = threshold_of(d);
    let covered = d.closed_out_neighborhood(s);
    if covered.len() < t {
        return Err(Error::NotAMods);
    }
    let slack = covered.len() - t;
    for v in s.iter() {
        let privates = d
            .private_out_neighbors(s, v)
            .expect("members of s are valid");
        let self_private = d.in_neighbors(v).is_disjoint_from(s);
        if privates.len() + self_private as usize <= slack {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug)]
pub struct MinimalMods {
    /// Minimal MODSs in ascending-sequence lexicographic order.
    pub sets: Vec<VertexSet>,
    /// True when enumeration stopped because one more minimal MODS was found
    /// past the cap.
    pub truncated: bool,
}

/// Enumerates all minimal MODSs in lexicographic order, up to `cap` results.
/// Supersets of a MODS are skipped wholesale: no superset can be minimal.
pub fn enumerate_minimal_mods(d: &Digraph, cap: usize) -> MinimalMods {
    let n = d.order();
    let t = threshold_of(d);
    let masks = d.cover_masks();
    let mut sets = Vec::new();
    let mut chosen = Vec::new();
    let truncated = !minimal_rec(
        d,
        &masks,
        t,
        0,
        &VertexSet::empty(n),
        &mut chosen,
        &mut sets,
        cap,
    );
    MinimalMods { sets, truncated }
}

/// Returns false when the cap was hit and the search aborted.
#[allow(clippy::too_many_arguments)]
fn minimal_rec(
    d: &Digraph,
    masks: &[VertexSet],
    threshold: usize,
    start: usize,
    covered: &VertexSet,
    chosen: &mut Vec<usize>,
    sets: &mut Vec<VertexSet>,
    cap: usize,
) -> bool {
    if covered.len() >= threshold {
        let s = VertexSet::from_vertices(d.order(), chosen.iter().copied());
        if is_minimal_mods_direct(d, &s).expect("covered set is a MODS") {
            if sets.len() == cap {
                return false;
            }
            sets.push(s);
        }
        return true;
    }
    for v in start..d.order() {
        chosen.push(v);
        let next = covered.union(&masks[v]);
        let keep_going = minimal_rec(d, masks, threshold, v + 1, &next, chosen, sets, cap);
        chosen.pop();
        if !keep_going {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// covering engine

fn max_mask_len(masks: &[VertexSet]) -> usize {
    masks.iter().map(VertexSet::len).max().unwrap_or(0).max(1)
}

/// `suffix[v]` bounds the coverage any single candidate `>= v` can add.
fn suffix_gains(masks: &[VertexSet]) -> Vec<usize> {
    let n = masks.len();
    let mut suffix = vec![0; n + 1];
    for v in (0..n).rev() {
        suffix[v] = suffix[v + 1].max(masks[v].len());
    }
    suffix
}

/// Minimum cover by increasing cardinality with lexicographic tie-breaking,
/// starting the deepening at `floor` (callers pass a proven lower bound).
pub(crate) fn exact_cover(
    masks: &[VertexSet],
    threshold: usize,
    floor: usize,
) -> (usize, VertexSet, u64) {
    debug_assert!(threshold >= 1 && threshold <= masks.len());
    let n = masks.len();
    let (greedy_value, greedy_witness, _) = greedy_cover(masks, threshold);
    let suffix = suffix_gains(masks);
    let lower = threshold.div_ceil(max_mask_len(masks)).max(1).max(floor);
    let mut explored = 0;
    let mut chosen = Vec::new();
    for k in lower..=greedy_value {
        if descend(
            masks,
            &suffix,
            threshold,
            k,
            0,
            &VertexSet::empty(n),
            &mut chosen,
            &mut explored,
        ) {
            let witness = VertexSet::from_vertices(n, chosen.iter().copied());
            return (k, witness, explored);
        }
        chosen.clear();
    }
    // the greedy witness guarantees the loop returns at k = greedy_value
    (greedy_value, greedy_witness, explored)
}

#[allow(clippy::too_many_arguments)]
fn descend(
    masks: &[VertexSet],
    suffix: &[usize],
    threshold: usize,
    k: usize,
    start: usize,
    covered: &VertexSet,
    chosen: &mut Vec<usize>,
    explored: &mut u64,
) -> bool {
    *explored += 1;
    if chosen.len() == k {
        return covered.len() >= threshold;
    }
    let remaining = k - chosen.len();
    let deficit = threshold.saturating_sub(covered.len());
    if deficit > remaining * suffix[start] {
        return false;
    }
    let n = masks.len();
    if start + remaining > n {
        return false;
    }
    for v in start..=n - remaining {
        chosen.push(v);
        let next = covered.union(&masks[v]);
        if descend(masks, suffix, threshold, k, v + 1, &next, chosen, explored) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Ground truth: plain subset enumeration by increasing cardinality,
/// lexicographic within a cardinality, first hit wins. `explored` counts
/// subsets tested.
pub(crate) fn oracle_cover(masks: &[VertexSet], threshold: usize) -> (usize, VertexSet, u64) {
    debug_assert!(threshold >= 1 && threshold <= masks.len());
    let n = masks.len();
    let mut explored = 0;
    let mut chosen = Vec::new();
    for k in 0..=n {
        if enumerate(
            masks,
            threshold,
            k,
            0,
            &VertexSet::empty(n),
            &mut chosen,
            &mut explored,
        ) {
            let witness = VertexSet::from_vertices(n, chosen.iter().copied());
            return (k, witness, explored);
        }
        chosen.clear();
    }
    unreachable!("the full vertex set always reaches the threshold")
}

fn enumerate(
    masks: &[VertexSet],
    threshold: usize,
    k: usize,
    start: usize,
    covered: &VertexSet,
    chosen: &mut Vec<usize>,
    explored: &mut u64,
) -> bool {
    if chosen.len() == k {
        *explored += 1;
        return covered.len() >= threshold;
    }
    let remaining = k - chosen.len();
    let n = masks.len();
    for v in start..=n - remaining {
        chosen.push(v);
        let next = covered.union(&masks[v]);
        if enumerate(masks, threshold, k, v + 1, &next, chosen, explored) {
            return true;
        }
        chosen.pop();
    }
    false
}

pub(crate) fn greedy_cover(masks: &[VertexSet], threshold: usize) -> (usize, VertexSet, u64) {
    let n = masks.len();
    let mut covered = VertexSet::empty(n);
    let mut picked = VertexSet::empty(n);
    let mut picks = 0u64;
    while covered.len() < threshold {
        let mut best = usize::MAX;
        let mut best_gain = 0;
        for (v, mask) in masks.iter().enumerate() {
            if picked.contains(v) {
                continue;
            }
            let gain = covered.gain_from(mask);
            if gain > best_gain {
                best_gain = gain;
                best = v;
            }
        }
        assert!(best_gain > 0, "threshold must be reachable");
        picked.insert(best);
        covered.union_with(&masks[best]);
        picks += 1;
    }
    (picked.len(), picked, picks)
}

/// Does any cover of size at most `budget` exist? Sound pruning only; used
/// to discard orientations during maximum computations.
pub(crate) fn exists_cover_within(masks: &[VertexSet], threshold: usize, budget: usize) -> bool {
    let suffix = suffix_gains(masks);
    fn go(
        masks: &[VertexSet],
        suffix: &[usize],
        threshold: usize,
        budget: usize,
        start: usize,
        covered: &VertexSet,
    ) -> bool {
        if covered.len() >= threshold {
            return true;
        }
        if budget == 0 {
            return false;
        }
        let deficit = threshold - covered.len();
        if deficit > budget * suffix[start] {
            return false;
        }
        for v in start..masks.len() {
            if go(
                masks,
                suffix,
                threshold,
                budget - 1,
                v + 1,
                &covered.union(&masks[v]),
            ) {
                return true;
            }
        }
        false
    }
    go(
        masks,
        &suffix,
        threshold,
        budget,
        0,
        &VertexSet::empty(masks.len()),
    )
}
