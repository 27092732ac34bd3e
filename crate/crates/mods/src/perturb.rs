//! How the set majority out-domination number moves under single edits, and
//! which arcs are critical (removal raises the number by one).
//!
//! Each record carries the admissible range for the edit. Removing an arc
//! can only keep or raise the number by one; adding an arc can only keep or
//! lower it by one; reversing an arc moves it by at most one in either
//! direction. Removing a vertex `v` can lower it by one or raise it to
//! `max(k, k-1+d+(v))`, plus one more when the order is even: dropping from
//! even `n` to odd `n-1` keeps the majority threshold, so the lost coverage
//! of `v` itself may genuinely cost an extra pick.

use crate::digraph::Digraph;
use crate::error::Result;
use crate::set::VertexSet;
use crate::solver::{self, Method};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PerturbOp {
    RemoveArc(usize, usize),
    RemoveVertex(usize),
    AddArc(usize, usize),
    ReverseArc(usize, usize),
}

impl PerturbOp {
    pub fn kind(&self) -> &'static str {
        match self {
            PerturbOp::RemoveArc(..) => "arc-removal",
            PerturbOp::RemoveVertex(_) => "vertex-removal",
            PerturbOp::AddArc(..) => "arc-addition",
            PerturbOp::ReverseArc(..) => "arc-reversal",
        }
    }
}

/// Exact before/after values for one edit, in original vertex labels.
#[derive(Clone, Debug)]
pub struct PerturbationRecord {
    pub kind: &'static str,
    pub arc: Option<(usize, usize)>,
    pub vertex: Option<usize>,
    /// Out-degree of the removed vertex, measured before removal.
    pub out_degree: Option<usize>,
    pub before: usize,
    pub after: usize,
    pub bound_low: usize,
    pub bound_high: usize,
    pub within_bounds: bool,
}

/// Applies the edit, solves both sides exactly, and checks the admissible
/// range for that edit kind.
pub fn perturb(d: &Digraph, op: PerturbOp) -> Result<PerturbationRecord> {
    let before = solver::gamma_m_plus(d, Method::Exact).value;
    let k = before;
    let (edited, arc, vertex, out_degree, low, high) = match op {
        PerturbOp::RemoveArc(u, v) => {
            let e = d.remove_arc(u, v)?;
            (e, Some((u, v)), None, None, k, k + 1)
        }
        PerturbOp::RemoveVertex(v) => {
            let dv = d.out_degree(v)?;
            let (e, _map) = d.remove_vertex(v)?;
            let even_slack = usize::from(d.order().is_multiple_of(2));
            (
                e,
                None,
                Some(v),
                Some(dv),
                k.saturating_sub(1),
                k.max(k - 1 + dv) + even_slack,
            )
        }
        PerturbOp::AddArc(u, v) => {
            let e = d.add_arc(u, v)?;
            (e, Some((u, v)), None, None, k.saturating_sub(1), k)
        }
        PerturbOp::ReverseArc(u, v) => {
            let e = d.reverse_arc(u, v)?;
            (e, Some((u, v)), None, None, k.saturating_sub(1), k + 1)
        }
    };
    let after = solver::gamma_m_plus(&edited, Method::Exact).value;
    Ok(PerturbationRecord {
        kind: op.kind(),
        arc,
        vertex,
        out_degree,
        before,
        after,
        bound_low: low,
        bound_high: high,
        within_bounds: low <= after && after <= high,
    })
}

/// Every minimum-cardinality MODS, in lexicographic order.
pub fn enumerate_minimum_mods(d: &Digraph) -> Vec<VertexSet> {
    let k = solver::gamma_m_plus(d, Method::Exact).value;
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    collect_k_subsets(d, k, 0, &mut chosen, &mut out);
    out
}

fn collect_k_subsets(
    d: &Digraph,
    k: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<VertexSet>,
) {
    if chosen.len() == k {
        let s = VertexSet::from_vertices(d.order(), chosen.iter().copied());
        if solver::is_mods(d, &s) {
            out.push(s);
        }
        return;
    }
    let remaining = k - chosen.len();
    for v in start..=d.order() - remaining {
        chosen.push(v);
        collect_k_subsets(d, k, v + 1, chosen, out);
        chosen.pop();
    }
}

/// Criticality by definition: removing the arc raises the number by one.
pub fn is_critical_arc_direct(d: &Digraph, u: usize, v: usize) -> Result<bool> {
    let removed = d.remove_arc(u, v)?;
    let before = solver::gamma_m_plus(d, Method::Exact).value;
    let after = solver::gamma_m_plus(&removed, Method::Exact).value;
    Ok(after == before + 1)
}

/// Criticality by structure: `(u, v)` is critical exactly when every
/// minimum MODS `S` contains `u`, has `v` as a private out-neighbor of `u`,
/// and covers exactly the majority threshold.
pub fn is_critical_arc_characterized(d: &Digraph, u: usize, v: usize) -> Result<bool> {
    // validate the arc the same way the direct test does
    d.remove_arc(u, v)?;
    let t = d.order().div_ceil(2);
    for s in enumerate_minimum_mods(d) {
        if !s.contains(u) {
            return Ok(false);
        }
        if !d.private_out_neighbors(&s, u)?.contains(v) {
            return Ok(false);
        }
        if d.closed_out_neighborhood(&s).len() != t {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::family;

    #[test]
    fn arc_removal_example() {
        let p8 = family::dipath(8).unwrap();
        let r = perturb(&p8, PerturbOp::RemoveArc(3, 4)).unwrap();
        assert_eq!(r.before, 2);
        assert_eq!(r.after, 2);
        assert_eq!((r.bound_low, r.bound_high), (2, 3));
        assert!(r.within_bounds);
    }

    #[test]
    fn vertex_removal_example() {
        let c4 = family::dicycle(4).unwrap();
        let r = perturb(&c4, PerturbOp::RemoveVertex(0)).unwrap();
        assert_eq!(r.before, 1);
        assert_eq!(r.after, 1);
        assert_eq!(r.out_degree, Some(1));
        assert_eq!(r.bound_low, 0);
        assert!(r.within_bounds);
    }

    #[test]
    fn vertex_removal_needs_the_even_order_slack() {
        // removing the covered head of the only arc: 1 -> 2 on four vertices
        let d = Digraph::new(4, [(0, 1)]).unwrap();
        let r = perturb(&d, PerturbOp::RemoveVertex(1)).unwrap();
        assert_eq!(r.before, 1);
        assert_eq!(r.after, 2);
        assert_eq!(r.bound_high, 2);
        assert!(r.within_bounds);
    }

    #[test]
    fn arc_addition_example() {
        let e6 = family::empty_digraph(6).unwrap();
        let r = perturb(&e6, PerturbOp::AddArc(0, 1)).unwrap();
        assert_eq!(r.before, 3);
        assert_eq!(r.after, 2);
        assert_eq!((r.bound_low, r.bound_high), (2, 3));
        assert!(r.within_bounds);
    }

    #[test]
    fn edit_errors_propagate() {
        let p4 = family::dipath(4).unwrap();
        assert!(matches!(
            perturb(&p4, PerturbOp::RemoveArc(3, 0)),
            Err(Error::MissingArc(3, 0))
        ));
        assert!(matches!(
            perturb(&p4, PerturbOp::AddArc(0, 1)),
            Err(Error::DuplicateArc(0, 1))
        ));
    }

    #[test]
    fn minimum_mods_enumeration_examples() {
        let p2 = family::dipath(2).unwrap();
        let sets = enumerate_minimum_mods(&p2);
        assert_eq!(
            sets.iter().map(|s| s.to_vec()).collect::<Vec<_>>(),
            vec![vec![0], vec![1]]
        );

        let c4 = family::dicycle(4).unwrap();
        let sets = enumerate_minimum_mods(&c4);
        assert_eq!(
            sets.iter().map(|s| s.to_vec()).collect::<Vec<_>>(),
            vec![vec![0], vec![1], vec![2], vec![3]]
        );

        // k 3-subsets of the sink-feeding family: any 3 of the 8 source
        // vertices containing at least one two-arc source
        let f = family::figure1(3).unwrap();
        let sets = enumerate_minimum_mods(&f);
        assert_eq!(sets.len(), 46);
        for s in &sets {
            assert!(solver::is_mods(&f, s));
            assert_eq!(s.len(), 3);
        }
    }

    #[test]
    fn critical_arc_examples() {
        // two arcs out of one center on five vertices: both arcs critical
        let d = Digraph::new(5, [(0, 1), (0, 2)]).unwrap();
        assert!(is_critical_arc_direct(&d, 0, 2).unwrap());
        assert!(is_critical_arc_characterized(&d, 0, 2).unwrap());
        assert!(is_critical_arc_direct(&d, 0, 1).unwrap());
        assert!(is_critical_arc_characterized(&d, 0, 1).unwrap());

        let p4 = family::dipath(4).unwrap();
        assert!(!is_critical_arc_direct(&p4, 0, 1).unwrap());
        assert!(!is_critical_arc_characterized(&p4, 0, 1).unwrap());

        let c4 = family::dicycle(4).unwrap();
        for &(u, v) in c4.arcs() {
            assert!(!is_critical_arc_direct(&c4, u, v).unwrap());
            assert!(!is_critical_arc_characterized(&c4, u, v).unwrap());
        }

        assert!(matches!(
            is_critical_arc_characterized(&p4, 2, 0),
            Err(Error::MissingArc(2, 0))
        ));
    }

    #[test]
    fn perturbation_ranges_hold_on_random_corpus() {
        for seed in 0..40 {
            let n = 2 + seed as usize % 7;
            let d = family::random_digraph(n, [0.15, 0.35][seed as usize % 2], seed).unwrap();
            for &(u, v) in d.arcs() {
                assert!(
                    perturb(&d, PerturbOp::RemoveArc(u, v))
                        .unwrap()
                        .within_bounds
                );
                if !d.has_arc(v, u) {
                    assert!(
                        perturb(&d, PerturbOp::ReverseArc(u, v))
                            .unwrap()
                            .within_bounds
                    );
                }
            }
            for v in 0..n {
                assert!(
                    perturb(&d, PerturbOp::RemoveVertex(v))
                        .unwrap()
                        .within_bounds
                );
                for w in 0..n {
                    if v != w && !d.has_arc(v, w) {
                        assert!(perturb(&d, PerturbOp::AddArc(v, w)).unwrap().within_bounds);
                    }
                }
            }
        }
    }

    #[test]
    fn criticality_methods_agree_on_random_corpus() {
        for seed in 0..40 {
            let n = 2 + seed as usize % 7;
            let d = family::random_digraph(n, 0.3, seed).unwrap();
            for &(u, v) in d.arcs() {
                assert_eq!(
                    is_critical_arc_direct(&d, u, v).unwrap(),
                    is_critical_arc_characterized(&d, u, v).unwrap(),
                    "disagree on {:?} arc ({}, {})",
                    d,
                    u,
                    v
                );
            }
        }
    }
}
