//! Brute-force ground truth on tiny graphs.
//!
//! Colorings up to renaming are exactly set partitions, so the optimum
//! solvers enumerate partitions of the vertex set by restricted-growth
//! strings, discarding a block the moment it stops being independent and
//! never opening more blocks than the current best answer. The domination
//! side of each variant is checked at the leaves.

use crate::bitset::VertexSet;
use crate::coloring::{validate_cdcol, validate_domcol, Coloring, DominatorWitness};
use crate::config;
use crate::graph::Graph;
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct OracleAnswer {
    /// Minimal number of colors of any valid coloring.
    pub optimum: usize,
    pub coloring: Coloring,
    pub witness: DominatorWitness,
}

fn guard(what: &'static str, actual: usize, limit: usize) -> Result<()> {
    if actual > limit {
        Err(Error::GuardExceeded { what, actual, limit })
    } else {
        Ok(())
    }
}

/// Walks every partition of `g`'s vertices into independent blocks, using at
/// most `cap()` blocks at any time. `leaf` sees the complete block list and
/// returns `false` to abort the search.
fn for_each_proper_partition(
    g: &Graph,
    cap: &mut dyn FnMut() -> usize,
    leaf: &mut dyn FnMut(&[VertexSet]) -> bool,
) {
    fn rec(
        g: &Graph,
        v: usize,
        members: &mut Vec<VertexSet>,
        forbidden: &mut Vec<VertexSet>,
        cap: &mut dyn FnMut() -> usize,
        leaf: &mut dyn FnMut(&[VertexSet]) -> bool,
    ) -> bool {
        if members.len() > cap() {
            return true;
        }
        if v == g.n() {
            return leaf(members);
        }
        let open = members.len();
        for b in 0..=open {
            if b == open {
                if open >= cap() {
                    break;
                }
                members.push(VertexSet::singleton(g.n(), v));
                forbidden.push(g.neighbors(v).clone());
                if !rec(g, v + 1, members, forbidden, cap, leaf) {
                    return false;
                }
                members.pop();
                forbidden.pop();
            } else {
                if forbidden[b].contains(v) {
                    continue;
                }
                members[b].insert(v);
                let saved = forbidden[b].clone();
                forbidden[b].union_with(g.neighbors(v));
                if !rec(g, v + 1, members, forbidden, cap, leaf) {
                    return false;
                }
                forbidden[b] = saved;
                members[b].remove(v);
            }
        }
        true
    }
    rec(g, 0, &mut Vec::new(), &mut Vec::new(), cap, leaf);
}

fn blocks_to_coloring(n: usize, blocks: &[VertexSet]) -> Coloring {
    let mut raw = vec![0usize; n];
    for (c, b) in blocks.iter().enumerate() {
        for v in b.iter() {
            raw[v] = c;
        }
    }
    Coloring::from_raw(&raw)
}

fn domination_ok_domcol(g: &Graph, closed: &[VertexSet], blocks: &[VertexSet]) -> bool {
    (0..g.n()).all(|v| blocks.iter().any(|b| b.is_subset_of(&closed[v])))
}

fn domination_ok_cdcol(g: &Graph, closed: &[VertexSet], blocks: &[VertexSet]) -> bool {
    blocks
        .iter()
        .all(|b| (0..g.n()).any(|v| b.is_subset_of(&closed[v])))
}

fn optimum_search(
    g: &Graph,
    ok: impl Fn(&Graph, &[VertexSet], &[VertexSet]) -> bool,
) -> (usize, Coloring) {
    let closed: Vec<VertexSet> = g.vertices().map(|v| g.nbh_closed(v)).collect();
    // the rainbow coloring always validates, so a cap of n finds something
    let cap = std::cell::Cell::new(g.n());
    let best = std::cell::RefCell::new(None::<Coloring>);
    for_each_proper_partition(
        g,
        &mut || cap.get(),
        &mut |blocks| {
            if ok(g, &closed, blocks) {
                cap.set(blocks.len().saturating_sub(1));
                *best.borrow_mut() = Some(blocks_to_coloring(g.n(), blocks));
            }
            true
        },
    );
    let coloring = best
        .into_inner()
        .unwrap_or_else(|| blocks_to_coloring(g.n(), &[]));
    (coloring.num_colors(), coloring)
}

/// Exact dominator chromatic number, guarded at n ≤ [`config::ORACLE_MAX_N`].
pub fn domcol_optimum(g: &Graph) -> Result<OracleAnswer> {
    domcol_optimum_guarded(g, config::ORACLE_MAX_N)
}

pub fn domcol_optimum_guarded(g: &Graph, max_n: usize) -> Result<OracleAnswer> {
    guard("oracle vertex count", g.n(), max_n)?;
    let (optimum, coloring) = optimum_search(g, domination_ok_domcol);
    let witness = validate_domcol(g, &coloring)?
        .expect("optimum search produced an invalid dominator coloring");
    Ok(OracleAnswer { optimum, coloring, witness })
}

/// Exact CD chromatic number, guarded at n ≤ [`config::ORACLE_MAX_N`].
pub fn cdcol_optimum(g: &Graph) -> Result<OracleAnswer> {
    cdcol_optimum_guarded(g, config::ORACLE_MAX_N)
}

pub fn cdcol_optimum_guarded(g: &Graph, max_n: usize) -> Result<OracleAnswer> {
    guard("oracle vertex count", g.n(), max_n)?;
    let (optimum, coloring) = optimum_search(g, domination_ok_cdcol);
    let witness = validate_cdcol(g, &coloring)?
        .expect("optimum search produced an invalid CD coloring");
    Ok(OracleAnswer { optimum, coloring, witness })
}

/// Ordinary chromatic number (no domination side condition).
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    guard("oracle vertex count", g.n(), config::ORACLE_MAX_N)?;
    Ok(optimum_search(g, |_, _, _| true).0)
}

/// Threshold decision χ_d(g) ≤ ell. The color budget prunes the partition
/// tree, so this reaches somewhat larger graphs than the optimum oracle as
/// long as they are clique-heavy.
pub fn domcol_threshold(g: &Graph, ell: usize) -> Result<bool> {
    guard("threshold oracle vertex count", g.n(), config::ORACLE_THRESHOLD_MAX_N)?;
    Ok(threshold_search(g, ell, domination_ok_domcol))
}

/// Threshold decision χ_cd(g) ≤ ell.
pub fn cdcol_threshold(g: &Graph, ell: usize) -> Result<bool> {
    guard("threshold oracle vertex count", g.n(), config::ORACLE_THRESHOLD_MAX_N)?;
    Ok(threshold_search(g, ell, domination_ok_cdcol))
}

fn threshold_search(
    g: &Graph,
    ell: usize,
    ok: impl Fn(&Graph, &[VertexSet], &[VertexSet]) -> bool,
) -> bool {
    let closed: Vec<VertexSet> = g.vertices().map(|v| g.nbh_closed(v)).collect();
    let cap = ell.min(g.n());
    let mut found = false;
    for_each_proper_partition(
        g,
        &mut || cap,
        &mut |blocks| {
            if ok(g, &closed, blocks) {
                found = true;
                return false;
            }
            true
        },
    );
    found
}

/// Any proper coloring respecting per-vertex color lists, or `None`.
pub fn list_coloring_oracle(g: &Graph, lists: &[Vec<usize>]) -> Result<Option<Coloring>> {
    guard("list oracle vertex count", g.n(), config::LIST_ORACLE_MAX_N)?;
    if lists.len() != g.n() {
        return Err(Error::invalid("need one color list per vertex"));
    }
    let mut assign = vec![usize::MAX; g.n()];
    fn rec(g: &Graph, lists: &[Vec<usize>], assign: &mut Vec<usize>, v: usize) -> bool {
        if v == g.n() {
            return true;
        }
        for &c in &lists[v] {
            if g.neighbors(v).iter().all(|u| assign[u] != c) {
                assign[v] = c;
                if rec(g, lists, assign, v + 1) {
                    return true;
                }
                assign[v] = usize::MAX;
            }
        }
        false
    }
    if rec(g, lists, &mut assign, 0) {
        Ok(Some(Coloring::from_raw(&assign)))
    } else {
        Ok(None)
    }
}

/// Is there a set of at most `kappa` elements meeting every member of
/// `family`? Universe elements are `0..universe`.
pub fn hitting_set_oracle(universe: usize, family: &[Vec<usize>], kappa: usize) -> Result<bool> {
    guard("hitting set universe", universe, config::HITTING_SET_MAX_UNIVERSE)?;
    for f in family {
        if let Some(&x) = f.iter().find(|&&x| x >= universe) {
            return Err(Error::invalid(format!("element {x} outside universe")));
        }
    }
    fn rec(family: &[Vec<usize>], hit: &mut Vec<bool>, left: usize) -> bool {
        let Some(unhit) = family.iter().find(|f| !f.iter().any(|&x| hit[x])) else {
            return true;
        };
        if left == 0 {
            return false;
        }
        for &x in unhit.iter() {
            if !hit[x] {
                hit[x] = true;
                if rec(family, hit, left - 1) {
                    return true;
                }
                hit[x] = false;
            }
        }
        false
    }
    Ok(rec(family, &mut vec![false; universe], kappa))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::small::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn domcol_examples() {
        for n in 1..=5 {
            assert_eq!(domcol_optimum(&complete(n)).unwrap().optimum, n);
            assert_eq!(domcol_optimum(&edgeless(n)).unwrap().optimum, n);
        }
        let ans = domcol_optimum(&path(3)).unwrap();
        assert_eq!(ans.optimum, 2);
        assert!(validate_domcol(&path(3), &ans.coloring).unwrap().is_some());
    }

    #[test]
    fn cdcol_examples() {
        for n in 1..=5 {
            assert_eq!(cdcol_optimum(&complete(n)).unwrap().optimum, n);
        }
        assert_eq!(cdcol_optimum(&cycle(4)).unwrap().optimum, 2);
        assert_eq!(cdcol_optimum(&edgeless(2)).unwrap().optimum, 2);
    }

    #[test]
    fn guard_is_enforced() {
        let e = domcol_optimum(&edgeless(11)).unwrap_err();
        assert!(e.is_guard());
    }

    #[test]
    fn thresholds_match_optimum() {
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..40 {
            let n = rng.gen_range(1..=6);
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            let d = domcol_optimum(&g).unwrap().optimum;
            let c = cdcol_optimum(&g).unwrap().optimum;
            for ell in 1..=n + 1 {
                assert_eq!(domcol_threshold(&g, ell).unwrap(), ell >= d);
                assert_eq!(cdcol_threshold(&g, ell).unwrap(), ell >= c);
            }
        }
    }

    #[test]
    fn list_coloring_examples() {
        let k2 = complete(2);
        let c = list_coloring_oracle(&k2, &[vec![1], vec![2]]).unwrap().unwrap();
        assert_eq!(c.num_colors(), 2);
        assert!(list_coloring_oracle(&k2, &[vec![1], vec![1]]).unwrap().is_none());

        let p3 = path(3);
        let c = list_coloring_oracle(&p3, &[vec![1], vec![1, 2], vec![1]])
            .unwrap()
            .unwrap();
        assert_eq!(c.as_slice(), &[0, 1, 0]);
    }

    #[test]
    fn hitting_set_examples() {
        assert!(!hitting_set_oracle(2, &[vec![0], vec![1]], 1).unwrap());
        assert!(hitting_set_oracle(2, &[vec![0], vec![1]], 2).unwrap());
        assert!(hitting_set_oracle(2, &[], 0).unwrap());
        assert!(!hitting_set_oracle(3, &[vec![]], 3).unwrap()); // empty member
    }

    fn brute_vertex_cover(g: &Graph) -> usize {
        let n = g.n();
        (0u64..1 << n)
            .filter(|mask| {
                g.edges()
                    .iter()
                    .all(|&(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1)
            })
            .map(|m| m.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn optimum_at_least_chromatic_and_vc_bound() {
        let mut rng = StdRng::seed_from_u64(17);
        let mut connected_seen = 0;
        while connected_seen < 30 {
            let n = rng.gen_range(2..=8);
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            let chi = chromatic_number(&g).unwrap();
            let d = domcol_optimum(&g).unwrap().optimum;
            let c = cdcol_optimum(&g).unwrap().optimum;
            assert!(d >= chi && c >= chi);
            if g.connected_components().len() == 1 {
                connected_seen += 1;
                // a connected graph with vertex cover k is a yes instance for
                // any ell > k
                let k = brute_vertex_cover(&g);
                assert!(d <= k + 1, "domcol optimum {d} vs vertex cover {k}");
            }
        }
    }

    #[test]
    fn deleting_isolated_vertices_shifts_optimum() {
        let mut rng = StdRng::seed_from_u64(29);
        for _ in 0..20 {
            let n = rng.gen_range(2..=6);
            let mut g = Graph::new(n + 2); // vertices n and n+1 stay isolated
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            let keep = VertexSet::from_iter(n + 2, 0..n);
            let (h, _) = g.induced_subgraph(&keep);
            assert_eq!(
                domcol_optimum(&g).unwrap().optimum,
                domcol_optimum(&h).unwrap().optimum + 2
            );
            assert_eq!(
                cdcol_optimum(&g).unwrap().optimum,
                cdcol_optimum(&h).unwrap().optimum + 2
            );
        }
    }
}
