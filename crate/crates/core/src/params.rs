//! Detection of the structural parameters the solvers consume: minimum twin
//! covers, clique modulators, and cluster vertex deletion sets.
//!
//! Each finder runs bounded branching on the obstruction characterizing its
//! class (uncovered complement edge, non-twin edge, induced P_3) and then
//! extracts the lexicographically smallest optimal set, so results are
//! deterministic.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::Result;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ParamKind {
    TwinCover,
    CliqueModulator,
    CvdSet,
}

#[derive(Clone, Debug)]
pub struct ParamResult {
    pub kind: ParamKind,
    pub set: VertexSet,
    pub k: usize,
}

/// A minimum clique modulator of size ≤ budget: a vertex cover of the
/// complement graph.
pub fn find_clique_modulator(g: &Graph, budget: usize) -> Result<Option<ParamResult>> {
    Ok(find_min_set(g, ParamKind::CliqueModulator, budget))
}

/// A minimum cluster vertex deletion set of size ≤ budget.
pub fn find_cvd_set(g: &Graph, budget: usize) -> Result<Option<ParamResult>> {
    Ok(find_min_set(g, ParamKind::CvdSet, budget))
}

/// A minimum twin cover of size ≤ budget: a vertex cover of the edges whose
/// endpoints are not true twins.
pub fn find_twin_cover(g: &Graph, budget: usize) -> Result<Option<ParamResult>> {
    Ok(find_min_set(g, ParamKind::TwinCover, budget))
}

fn find_min_set(g: &Graph, kind: ParamKind, budget: usize) -> Option<ParamResult> {
    let n = g.n();
    let empty = VertexSet::empty(n);
    let k = (0..=budget.min(n)).find(|&k| feasible(g, kind, &empty, &empty, k))?;

    // Greedy lexicographically smallest optimum: include each vertex in id
    // order whenever an optimal completion still exists.
    let mut chosen = VertexSet::empty(n);
    let mut banned = VertexSet::empty(n);
    for v in 0..n {
        let mut with_v = chosen.clone();
        with_v.insert(v);
        if feasible(g, kind, &with_v, &banned, k) {
            chosen = with_v;
        } else {
            banned.insert(v);
        }
    }
    debug_assert_eq!(chosen.card(), k);
    Some(ParamResult { kind, set: chosen, k })
}

/// Is there a valid set of size ≤ k containing `forced` and avoiding `banned`?
fn feasible(g: &Graph, kind: ParamKind, forced: &VertexSet, banned: &VertexSet, k: usize) -> bool {
    if forced.card() > k {
        return false;
    }
    let obstruction = match kind {
        ParamKind::CliqueModulator => find_uncovered_nonedge(g, forced),
        ParamKind::TwinCover => find_uncovered_nontwin_edge(g, forced),
        ParamKind::CvdSet => find_uncovered_p3(g, forced),
    };
    let Some(verts) = obstruction else {
        return true;
    };
    if forced.card() == k {
        return false;
    }
    verts.iter().any(|&v| {
        if banned.contains(v) {
            return false;
        }
        let mut next = forced.clone();
        next.insert(v);
        feasible(g, kind, &next, banned, k)
    })
}

fn find_uncovered_nonedge(g: &Graph, forced: &VertexSet) -> Option<Vec<usize>> {
    for u in g.vertices() {
        if forced.contains(u) {
            continue;
        }
        for v in u + 1..g.n() {
            if !forced.contains(v) && !g.has_edge(u, v) {
                return Some(vec![u, v]);
            }
        }
    }
    None
}

fn find_uncovered_nontwin_edge(g: &Graph, forced: &VertexSet) -> Option<Vec<usize>> {
    for (u, v) in g.edges() {
        if !forced.contains(u) && !forced.contains(v) && !g.true_twins(u, v) {
            return Some(vec![u, v]);
        }
    }
    None
}

fn find_uncovered_p3(g: &Graph, forced: &VertexSet) -> Option<Vec<usize>> {
    for b in g.vertices() {
        if forced.contains(b) {
            continue;
        }
        let nb: Vec<usize> = g
            .neighbors(b)
            .iter()
            .filter(|&v| !forced.contains(v))
            .collect();
        for (i, &a) in nb.iter().enumerate() {
            for &c in &nb[i + 1..] {
                if !g.has_edge(a, c) {
                    return Some(vec![a, b, c]);
                }
            }
        }
    }
    None
}
