use std::collections::VecDeque;

use serde::Serialize;

use crate::tournament::Tournament;

use super::Partition;

const NIL: usize = usize::MAX;

/// Maximum matching of `B → A` edges with a König cover of equal size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchingCover {
    /// `(b, a)` pairs with `b → a`, sorted by `b`.
    pub matching: Vec<(usize, usize)>,
    /// Ascending vertex list hitting every `B → A` edge.
    pub cover: Vec<usize>,
}

impl MatchingCover {
    pub fn size(&self) -> usize {
        self.matching.len()
    }

    /// Checks the matching and cover against `t` and `p` edge by edge.
    pub fn verify(&self, t: &Tournament, p: &Partition) -> bool {
        let (a, b, _) = p.masks();
        let n = t.order();
        let mut used = vec![false; n];
        for &(u, v) in &self.matching {
            if u >= n || v >= n || !b.contains(u) || !a.contains(v) || !t.has_edge(u, v) {
                return false;
            }
            if std::mem::replace(&mut used[u], true) || std::mem::replace(&mut used[v], true) {
                return false;
            }
        }
        let mut in_cover = vec![false; n];
        for &c in &self.cover {
            if c >= n {
                return false;
            }
            in_cover[c] = true;
        }
        let covered = b.iter().all(|u| {
            in_cover[u] || a.iter().all(|v| in_cover[v] || !t.has_edge(u, v))
        });
        covered && self.cover.len() == self.matching.len()
    }
}

/// Hopcroft–Karp on the bipartite graph of edges from `B` to `A`; the cover
/// is read off the alternating reachability from unmatched `B` vertices.
pub fn max_ba_matching(t: &Tournament, p: &Partition) -> MatchingCover {
    let left = p.b().members();
    let right = p.a().members();
    let mut local = vec![NIL; t.order()];
    for (i, &v) in right.iter().enumerate() {
        local[v] = i;
    }
    let adj: Vec<Vec<usize>> = left
        .iter()
        .map(|&u| t.out_neighbors(u).iter().filter(|&v| local[v] != NIL).map(|v| local[v]).collect())
        .collect();

    let (nl, nr) = (left.len(), right.len());
    let mut match_l = vec![NIL; nl];
    let mut match_r = vec![NIL; nr];
    let mut dist = vec![NIL; nl];
    let mut queue = VecDeque::new();
    let mut next_edge = vec![0usize; nl];
    let mut stack: Vec<usize> = Vec::new();
    let mut path: Vec<usize> = Vec::new();

    loop {
        queue.clear();
        for l in 0..nl {
            dist[l] = if match_l[l] == NIL {
                queue.push_back(l);
                0
            } else {
                NIL
            };
        }
        let mut augmentable = false;
        while let Some(l) = queue.pop_front() {
            for &r in &adj[l] {
                let l2 = match_r[r];
                if l2 == NIL {
                    augmentable = true;
                } else if dist[l2] == NIL {
                    dist[l2] = dist[l] + 1;
                    queue.push_back(l2);
                }
            }
        }
        if !augmentable {
            break;
        }

        next_edge.iter_mut().for_each(|e| *e = 0);
        for start in 0..nl {
            if match_l[start] != NIL {
                continue;
            }
            stack.clear();
            path.clear();
            stack.push(start);
            while let Some(&l) = stack.last() {
                if next_edge[l] == adj[l].len() {
                    dist[l] = NIL;
                    stack.pop();
                    path.pop();
                    continue;
                }
                let r = adj[l][next_edge[l]];
                next_edge[l] += 1;
                let l2 = match_r[r];
                if l2 == NIL {
                    path.push(r);
                    for (&pl, &pr) in stack.iter().zip(&path) {
                        match_l[pl] = pr;
                        match_r[pr] = pl;
                    }
                    break;
                }
                if dist[l2] != NIL && dist[l2] == dist[l] + 1 {
                    path.push(r);
                    stack.push(l2);
                }
            }
        }
    }

    // Z: alternating reachability from free left vertices.
    let mut seen_l = vec![false; nl];
    let mut seen_r = vec![false; nr];
    queue.clear();
    for l in 0..nl {
        if match_l[l] == NIL {
            seen_l[l] = true;
            queue.push_back(l);
        }
    }
    while let Some(l) = queue.pop_front() {
        for &r in &adj[l] {
            if !seen_r[r] {
                seen_r[r] = true;
                let l2 = match_r[r];
                if l2 != NIL && !seen_l[l2] {
                    seen_l[l2] = true;
                    queue.push_back(l2);
                }
            }
        }
    }
    let mut cover: Vec<usize> = (0..nl)
        .filter(|&l| !seen_l[l])
        .map(|l| left[l])
        .chain((0..nr).filter(|&r| seen_r[r]).map(|r| right[r]))
        .collect();
    cover.sort_unstable();
    let matching: Vec<(usize, usize)> = (0..nl)
        .filter(|&l| match_l[l] != NIL)
        .map(|l| (left[l], right[match_l[l]]))
        .collect();
    assert_eq!(matching.len(), cover.len(), "König equality");
    MatchingCover { matching, cover }
}
