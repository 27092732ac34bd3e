//! Sharp bounds on the set majority out-domination number, evaluated
//! numerically for one digraph, plus the exact longest directed path and
//! cycle computations the structural bounds need.
//!
//! Longest path and cycle are solved by dynamic programming over
//! (vertex-subset, endpoint) states. That is exponential by nature, so both
//! take a hard order limit (default 18); bound verification wants exact
//! values, not heuristics.

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::solver::{self, Method};

pub const DEFAULT_DP_LIMIT: usize = 18;

/// Length (arc count) of a longest directed path, with one attaining vertex
/// sequence.
pub fn longest_directed_path(d: &Digraph, limit: usize) -> Result<(usize, Vec<usize>)> {
    let n = check_dp_size(d, limit)?;
    // reach[mask] = endpoints v such that some path visits exactly `mask`
    // and stops at v
    let mut reach = vec![0u64; 1 << n];
    for v in 0..n {
        reach[1 << v] |= 1 << v;
    }
    let (mut best_mask, mut best_len) = (1usize, 0usize);
    for mask in 1usize..1 << n {
        let mut ends = reach[mask];
        if ends == 0 {
            continue;
        }
        if mask.count_ones() as usize - 1 > best_len {
            best_len = mask.count_ones() as usize - 1;
            best_mask = mask;
        }
        while ends != 0 {
            let v = ends.trailing_zeros() as usize;
            ends &= ends - 1;
            for w in d.out_neighbors(v).iter() {
                if mask >> w & 1 == 0 {
                    reach[mask | 1 << w] |= 1 << w;
                }
            }
        }
    }
    let end = (0..n)
        .find(|&v| reach[best_mask] >> v & 1 == 1)
        .expect("recorded mask has an endpoint");
    let witness = rebuild_path(d, &reach, best_mask, end);
    Ok((best_len, witness))
}

/// Length of a longest directed cycle (0 when acyclic; opposite arc pairs
/// count as 2-cycles), with one attaining vertex sequence.
pub fn longest_directed_cycle(d: &Digraph, limit: usize) -> Result<(usize, Option<Vec<usize>>)> {
    let n = check_dp_size(d, limit)?;
    let mut best: Option<(usize, Vec<usize>)> = None;
    // anchor each cycle at its smallest vertex s; only vertices >= s join
    for s in 0..n {
        let m = n - s;
        if m < 2 || best.as_ref().is_some_and(|(len, _)| *len >= m) {
            continue;
        }
        // masks over the shifted universe s..n, paths starting at s
        let mut reach = vec![0u64; 1 << m];
        reach[1] = 1;
        for mask in 1usize..1 << m {
            let mut ends = reach[mask];
            if ends == 0 {
                continue;
            }
            while ends != 0 {
                let rel = ends.trailing_zeros() as usize;
                ends &= ends - 1;
                let v = s + rel;
                let closes = d.has_arc(v, s) && mask.count_ones() >= 2;
                if closes
                    && best
                        .as_ref()
                        .is_none_or(|(len, _)| mask.count_ones() as usize > *len)
                {
                    let path = rebuild_anchored_path(d, &reach, s, mask, rel);
                    best = Some((mask.count_ones() as usize, path));
                }
                for w in d.out_neighbors(v).iter() {
                    if w > s && mask >> (w - s) & 1 == 0 {
                        reach[mask | 1 << (w - s)] |= 1 << (w - s);
                    }
                }
            }
        }
    }
    Ok(match best {
        Some((len, path)) => (len, Some(path)),
        None => (0, None),
    })
}

fn check_dp_size(d: &Digraph, limit: usize) -> Result<usize> {
    let n = d.order();
    if n > limit {
        return Err(Error::TooLarge {
            what: "longest path/cycle dynamic programming",
            limit,
            actual: n,
            unit: "vertices",
        });
    }
    Ok(n)
}

fn rebuild_path(d: &Digraph, reach: &[u64], mut mask: usize, mut end: usize) -> Vec<usize> {
    let mut rev = vec![end];
    while mask.count_ones() > 1 {
        let prev_mask = mask & !(1 << end);
        let prev = (0..d.order())
            .find(|&u| {
                prev_mask >> u & 1 == 1 && reach[prev_mask] >> u & 1 == 1 && d.has_arc(u, end)
            })
            .expect("dp state has a predecessor");
        mask = prev_mask;
        end = prev;
        rev.push(end);
    }
    rev.reverse();
    rev
}

fn rebuild_anchored_path(
    d: &Digraph,
    reach: &[u64],
    s: usize,
    mut mask: usize,
    mut rel: usize,
) -> Vec<usize> {
    let mut rev = vec![s + rel];
    while mask != 1 {
        let prev_mask = mask & !(1 << rel);
        let prev = (0..d.order() - s)
            .find(|&u| {
                prev_mask >> u & 1 == 1
                    && reach[prev_mask] >> u & 1 == 1
                    && d.has_arc(s + u, s + rel)
            })
            .expect("dp state has a predecessor");
        mask = prev_mask;
        rel = prev;
        rev.push(s + rel);
    }
    rev.reverse();
    rev
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundStatus {
    Holds,
    Fails,
    NotApplicable,
}

impl std::fmt::Display for BoundStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            BoundStatus::Holds => "holds",
            BoundStatus::Fails => "fails",
            BoundStatus::NotApplicable => "not_applicable",
        })
    }
}

/// One evaluated bound. `relation` is `<=` (lhs must not exceed rhs) or
/// `iff` (lhs and rhs are 0/1 truth values that must agree), so `status` is
/// always recomputable from the numbers. `tight` marks exact equality of an
/// inequality that holds.
#[derive(Clone, Debug)]
pub struct BoundEntry {
    pub name: &'static str,
    pub relation: &'static str,
    pub lhs: f64,
    pub rhs: f64,
    pub status: BoundStatus,
    pub tight: bool,
    pub note: Option<&'static str>,
}

impl BoundEntry {
    fn le(name: &'static str, lhs: usize, rhs: f64) -> Self {
        let lhs = lhs as f64;
        BoundEntry {
            name,
            relation: "<=",
            lhs,
            rhs,
            status: if lhs <= rhs {
                BoundStatus::Holds
            } else {
                BoundStatus::Fails
            },
            tight: lhs == rhs,
            note: None,
        }
    }

    fn iff(name: &'static str, lhs: bool, rhs: bool) -> Self {
        BoundEntry {
            name,
            relation: "iff",
            lhs: lhs as u8 as f64,
            rhs: rhs as u8 as f64,
            status: if lhs == rhs {
                BoundStatus::Holds
            } else {
                BoundStatus::Fails
            },
            tight: false,
            note: None,
        }
    }

    fn not_applicable(name: &'static str, relation: &'static str) -> Self {
        BoundEntry {
            name,
            relation,
            lhs: f64::NAN,
            rhs: f64::NAN,
            status: BoundStatus::NotApplicable,
            tight: false,
            note: None,
        }
    }

    pub fn holds_or_na(&self) -> bool {
        self.status != BoundStatus::Fails
    }
}

/// Every implemented bound evaluated against the exact numbers of one
/// digraph.
#[derive(Clone, Debug)]
pub struct BoundReport {
    pub n: usize,
    pub delta_plus: usize,
    pub gamma_m_plus: usize,
    pub gamma_plus: usize,
    /// Longest directed path length (arcs).
    pub longest_path: usize,
    /// Longest directed cycle length, 0 when acyclic.
    pub longest_cycle: usize,
    pub entries: Vec<BoundEntry>,
}

impl BoundReport {
    pub fn all_hold(&self) -> bool {
        self.entries.iter().all(BoundEntry::holds_or_na)
    }

    pub fn entry(&self, name: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

fn ceil_div(a: usize, b: usize) -> f64 {
    a.div_ceil(b) as f64
}

/// Evaluates the whole bound set with exact solves. The cycle-based bounds
/// are reported not-applicable on acyclic digraphs rather than guessed.
pub fn bound_report(d: &Digraph, dp_limit: usize) -> Result<BoundReport> {
    let n = d.order();
    let delta = d.max_out_degree();
    let gamma_m = solver::gamma_m_plus(d, Method::Exact).value;
    let gamma_p = solver::gamma_plus(d, Method::Exact).value;
    let (l, _) = longest_directed_path(d, dp_limit)?;
    let (c, _) = longest_directed_cycle(d, dp_limit)?;
    let t = n.div_ceil(2);

    let mut entries = Vec::new();
    entries.push(BoundEntry::le(
        "lower_degree",
        n.div_ceil(2 * (delta + 1)),
        gamma_m as f64,
    ));
    entries.push(if c == n {
        BoundEntry::le("upper_hamiltonian", gamma_m, ceil_div(n, 4))
    } else {
        BoundEntry::not_applicable("upper_hamiltonian", "<=")
    });
    entries.push(BoundEntry::le(
        "upper_longest_path",
        gamma_m,
        ceil_div(2 * n - l - 1, 4),
    ));
    entries.push(if c >= 2 {
        BoundEntry::le("upper_longest_cycle", gamma_m, ceil_div(2 * n - c, 4))
    } else {
        BoundEntry::not_applicable("upper_longest_cycle", "<=")
    });
    entries.push(BoundEntry::le(
        "upper_half_gamma_plus",
        gamma_m,
        ceil_div(gamma_p, 2),
    ));
    // either the number is 1 or it is at most ceil(n/2) - delta
    let mut disj = if gamma_m == 1 {
        let mut e = BoundEntry::le("upper_degree_or_one", gamma_m, 1.0);
        e.note = Some("value_is_one");
        e
    } else {
        let mut e = BoundEntry::le("upper_degree_or_one", gamma_m, t as f64 - delta as f64);
        e.note = Some("degree_bound");
        e
    };
    disj.tight = disj.note == Some("degree_bound") && disj.lhs == disj.rhs;
    entries.push(disj);
    entries.push(BoundEntry::le(
        "upper_degree_half",
        gamma_m,
        (n as f64 - delta as f64 + 1.0) / 2.0,
    ));
    entries.push(BoundEntry::iff(
        "gamma_equality_iff_max_degree",
        gamma_m == gamma_p,
        delta == n - 1,
    ));
    entries.push(BoundEntry::iff(
        "value_one_iff_degree",
        gamma_m == 1,
        delta + 1 >= t,
    ));

    Ok(BoundReport {
        n,
        delta_plus: delta,
        gamma_m_plus: gamma_m,
        gamma_plus: gamma_p,
        longest_path: l,
        longest_cycle: c,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::Digraph;
    use crate::family;

    #[test]
    fn longest_path_examples() {
        let (l, w) = longest_directed_path(&family::dipath(6).unwrap(), DEFAULT_DP_LIMIT).unwrap();
        assert_eq!(l, 5);
        assert_eq!(w, vec![0, 1, 2, 3, 4, 5]);
        let (l, w) = longest_directed_path(&family::empty_digraph(5).unwrap(), 18).unwrap();
        assert_eq!(l, 0);
        assert_eq!(w.len(), 1);
        let (l, _) = longest_directed_path(&family::figure1(3).unwrap(), 18).unwrap();
        assert_eq!(l, 1);
    }

    #[test]
    fn longest_cycle_examples() {
        let (c, w) = longest_directed_cycle(&family::dicycle(7).unwrap(), 18).unwrap();
        assert_eq!(c, 7);
        assert_eq!(w.unwrap().len(), 7);
        let (c, w) = longest_directed_cycle(&family::dipath(5).unwrap(), 18).unwrap();
        assert_eq!(c, 0);
        assert!(w.is_none());
        let two = Digraph::new(2, [(0, 1), (1, 0)]).unwrap();
        let (c, w) = longest_directed_cycle(&two, 18).unwrap();
        assert_eq!(c, 2);
        assert_eq!(w.unwrap(), vec![0, 1]);
    }

    #[test]
    fn witnesses_are_real_paths_and_cycles() {
        for seed in 0..25 {
            let d = family::random_digraph(2 + seed as usize % 7, 0.4, seed).unwrap();
            let (l, w) = longest_directed_path(&d, 18).unwrap();
            assert_eq!(w.len(), l + 1);
            for pair in w.windows(2) {
                assert!(d.has_arc(pair[0], pair[1]));
            }
            let (c, w) = longest_directed_cycle(&d, 18).unwrap();
            if let Some(w) = w {
                assert_eq!(w.len(), c);
                for pair in w.windows(2) {
                    assert!(d.has_arc(pair[0], pair[1]));
                }
                assert!(d.has_arc(w[c - 1], w[0]));
            } else {
                assert_eq!(c, 0);
            }
        }
    }

    #[test]
    fn dp_limit_is_enforced() {
        let d = family::dipath(6).unwrap();
        let err = longest_directed_path(&d, 5).unwrap_err();
        assert!(
            matches!(
                err,
                Error::TooLarge {
                    limit: 5,
                    actual: 6,
                    ..
                }
            ),
            "{err}"
        );
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn report_on_directed_path_is_tight() {
        let r = bound_report(&family::dipath(8).unwrap(), 18).unwrap();
        assert!(r.all_hold());
        let e = r.entry("upper_longest_path").unwrap();
        assert_eq!(e.rhs, 2.0);
        assert!(e.tight);
        assert_eq!(
            r.entry("upper_longest_cycle").unwrap().status,
            BoundStatus::NotApplicable
        );
        assert_eq!(
            r.entry("upper_hamiltonian").unwrap().status,
            BoundStatus::NotApplicable
        );
    }

    #[test]
    fn report_on_directed_cycle_is_tight() {
        let r = bound_report(&family::dicycle(8).unwrap(), 18).unwrap();
        assert!(r.all_hold());
        let e = r.entry("upper_longest_cycle").unwrap();
        assert_eq!(e.rhs, 2.0);
        assert!(e.tight);
        // hamiltonian specialization: c = n reduces the cycle bound to ceil(n/4)
        let h = r.entry("upper_hamiltonian").unwrap();
        assert_eq!(h.status, BoundStatus::Holds);
        assert_eq!(h.rhs, 2.0);
    }

    #[test]
    fn equality_entry_on_out_star() {
        let star = Digraph::new(7, (1..7).map(|v| (0, v))).unwrap();
        let r = bound_report(&star, 18).unwrap();
        assert_eq!(r.gamma_m_plus, 1);
        assert_eq!(r.gamma_plus, 1);
        assert_eq!(
            r.entry("gamma_equality_iff_max_degree").unwrap().status,
            BoundStatus::Holds
        );
        assert!(r.all_hold());
    }

    #[test]
    fn theorem_disjunction_tight_on_p6() {
        let r = bound_report(&family::dipath(6).unwrap(), 18).unwrap();
        let e = r.entry("upper_degree_or_one").unwrap();
        assert_eq!(e.note, Some("degree_bound"));
        assert_eq!(e.rhs, 2.0);
        assert!(e.tight);
    }

    #[test]
    fn all_bounds_hold_on_random_corpus() {
        for seed in 0..60 {
            let n = 1 + seed as usize % 10;
            let d = family::random_digraph(n, [0.1, 0.3, 0.5][seed as usize % 3], seed).unwrap();
            let r = bound_report(&d, 18).unwrap();
            assert!(r.all_hold(), "bound failed on {:?}: {:?}", d, r);
        }
    }
}
