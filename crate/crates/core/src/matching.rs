//! Hopcroft-Karp maximum bipartite matching.

const UNMATCHED: usize = usize::MAX;

/// Maximum matching of the bipartite graph with `n_left` and `n_right`
/// vertices and adjacency `adj[l] = right neighbors of l`.
///
/// Returns `(size, left_match, right_match)` where unmatched entries are
/// `None`.
pub fn hopcroft_karp(
    n_left: usize,
    n_right: usize,
    adj: &[Vec<usize>],
) -> (usize, Vec<Option<usize>>, Vec<Option<usize>>) {
    debug_assert_eq!(adj.len(), n_left);
    let mut match_l = vec![UNMATCHED; n_left];
    let mut match_r = vec![UNMATCHED; n_right];
    let mut dist = vec![0usize; n_left];

    loop {
        // BFS layers from free left vertices
        let mut queue = std::collections::VecDeque::new();
        for l in 0..n_left {
            if match_l[l] == UNMATCHED {
                dist[l] = 0;
                queue.push_back(l);
            } else {
                dist[l] = UNMATCHED;
            }
        }
        let mut found_augmenting = false;
        while let Some(l) = queue.pop_front() {
            for &r in &adj[l] {
                match match_r[r] {
                    UNMATCHED => found_augmenting = true,
                    l2 => {
                        if dist[l2] == UNMATCHED {
                            dist[l2] = dist[l] + 1;
                            queue.push_back(l2);
                        }
                    }
                }
            }
        }
        if !found_augmenting {
            break;
        }
        // DFS along layered structure
        fn try_augment(
            l: usize,
            adj: &[Vec<usize>],
            match_l: &mut [usize],
            match_r: &mut [usize],
            dist: &mut [usize],
        ) -> bool {
            for &r in &adj[l] {
                let l2 = match_r[r];
                let ok = l2 == UNMATCHED
                    || (dist[l2] == dist[l] + 1 && try_augment(l2, adj, match_l, match_r, dist));
                if ok {
                    match_l[l] = r;
                    match_r[r] = l;
                    return true;
                }
            }
            dist[l] = UNMATCHED;
            false
        }
        for l in 0..n_left {
            if match_l[l] == UNMATCHED {
                try_augment(l, adj, &mut match_l, &mut match_r, &mut dist);
            }
        }
    }

    let size = match_l.iter().filter(|&&r| r != UNMATCHED).count();
    let to_opt = |v: &[usize]| {
        v.iter()
            .map(|&x| if x == UNMATCHED { None } else { Some(x) })
            .collect()
    };
    (size, to_opt(&match_l), to_opt(&match_r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn brute_max_matching(n_left: usize, adj: &[Vec<usize>]) -> usize {
        fn rec(l: usize, adj: &[Vec<usize>], used: &mut Vec<bool>) -> usize {
            if l == adj.len() {
                return 0;
            }
            let mut best = rec(l + 1, adj, used);
            for &r in &adj[l] {
                if !used[r] {
                    used[r] = true;
                    best = best.max(1 + rec(l + 1, adj, used));
                    used[r] = false;
                }
            }
            best
        }
        let max_r = adj.iter().flatten().copied().max().map_or(0, |m| m + 1);
        let _ = n_left;
        rec(0, adj, &mut vec![false; max_r])
    }

    #[test]
    fn small_cases() {
        let (size, ml, mr) = hopcroft_karp(2, 2, &[vec![0, 1], vec![0]]);
        assert_eq!(size, 2);
        assert_eq!(ml[1], Some(0));
        assert_eq!(mr[1], Some(0));

        let (size, _, _) = hopcroft_karp(3, 1, &[vec![0], vec![0], vec![0]]);
        assert_eq!(size, 1);

        let (size, _, _) = hopcroft_karp(0, 0, &[]);
        assert_eq!(size, 0);
    }

    #[test]
    fn matches_brute_force() {
        let mut rng = StdRng::seed_from_u64(77);
        for _ in 0..200 {
            let nl = rng.gen_range(0..=7);
            let nr = rng.gen_range(1..=7);
            let adj: Vec<Vec<usize>> = (0..nl)
                .map(|_| (0..nr).filter(|_| rng.gen_bool(0.4)).collect())
                .collect();
            let (size, ml, mr) = hopcroft_karp(nl, nr, &adj);
            assert_eq!(size, brute_max_matching(nl, &adj));
            // consistency of the two sides
            for (l, &r) in ml.iter().enumerate() {
                if let Some(r) = r {
                    assert_eq!(mr[r], Some(l));
                    assert!(adj[l].contains(&r));
                }
            }
        }
    }
}
