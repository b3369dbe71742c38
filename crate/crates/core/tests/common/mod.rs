#![allow(dead_code)]

use tourneylab_core::Tournament;

/// `reach[u][v]`: some directed path from `u` to `v` (every vertex reaches itself).
pub fn reachability(t: &Tournament) -> Vec<Vec<bool>> {
    let n = t.order();
    let mut reach = vec![vec![false; n]; n];
    for (s, row) in reach.iter_mut().enumerate() {
        let mut queue = std::collections::VecDeque::from([s]);
        row[s] = true;
        while let Some(v) = queue.pop_front() {
            for u in 0..n {
                if !row[u] && t.has_edge(v, u) {
                    row[u] = true;
                    queue.push_back(u);
                }
            }
        }
    }
    reach
}

/// Hamiltonicity by trying every cyclic order that starts at vertex 0.
pub fn hamiltonian_by_permutations(t: &Tournament) -> bool {
    let n = t.order();
    if n < 3 {
        return false;
    }
    let mut used = vec![false; n];
    used[0] = true;
    fn extend(t: &Tournament, last: usize, depth: usize, used: &mut [bool]) -> bool {
        let n = used.len();
        if depth == n {
            return t.has_edge(last, 0);
        }
        for v in 1..n {
            if !used[v] && t.has_edge(last, v) {
                used[v] = true;
                if extend(t, v, depth + 1, used) {
                    return true;
                }
                used[v] = false;
            }
        }
        false
    }
    extend(t, 0, 1, &mut used)
}

/// All `2^C(n,2)` labeled tournaments on `n` vertices, by pair-orientation mask.
pub fn tournament_from_mask(n: usize, mask: u64) -> Tournament {
    let mut bit = 0;
    Tournament::from_pairs(n, |_, _| {
        let forward = mask >> bit & 1 == 1;
        bit += 1;
        forward
    })
    .unwrap()
}

/// Maximum matching size by exhaustive search over left vertices.
pub fn brute_force_matching(adj: &[Vec<usize>]) -> usize {
    fn go(adj: &[Vec<usize>], i: usize, used: u64) -> usize {
        if i == adj.len() {
            return 0;
        }
        let mut best = go(adj, i + 1, used);
        for &r in &adj[i] {
            if used >> r & 1 == 0 {
                best = best.max(1 + go(adj, i + 1, used | 1 << r));
            }
        }
        best
    }
    go(adj, 0, 0)
}
