//! Hamiltonicity of tournaments: strong components, explicit Hamilton cycles
//! and an exhaustive Held–Karp oracle.
//!
//! A tournament on at least three vertices is Hamiltonian exactly when it is
//! strongly connected. Tournaments with fewer than three vertices are treated
//! as non-Hamiltonian throughout the crate.

use std::cmp::Reverse;

use crate::bitset::{self, BitSet};
use crate::error::{Error, Result};
use crate::tournament::Tournament;

/// Largest order accepted by [`brute_force_hamiltonian`].
pub const BRUTE_FORCE_MAX: usize = 20;

/// Strongly connected components of a tournament.
///
/// Component ids are assigned in topological order of the condensation: every
/// edge between two different components goes from the lower id to the
/// higher id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SccDecomposition {
    component_of: Vec<usize>,
    components: Vec<Vec<usize>>,
}

impl SccDecomposition {
    pub fn component_of(&self, v: usize) -> usize {
        self.component_of[v]
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// Members of each component, in topological order.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    /// Component ids from source to sink. Ids are already topological, so
    /// this is `0..count`.
    pub fn topological_order(&self) -> impl Iterator<Item = usize> {
        0..self.components.len()
    }
}

/// Strong components via the score sequence.
///
/// In a tournament every vertex of an earlier component beats every vertex of
/// a later one, so earlier components carry strictly larger out-degrees. After
/// sorting by out-degree, the components are contiguous blocks, and a block
/// boundary falls after the first `k` vertices exactly when their out-degrees
/// sum to `C(k,2) + k(n-k)`, i.e. when they dominate the rest. Runs in
/// `O(n²/64 + n log n)` with no recursion.
pub fn scc(t: &Tournament) -> SccDecomposition {
    let n = t.order();
    let scores: Vec<usize> = (0..n).map(|v| t.out_degree(v)).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_unstable_by_key(|&v| (Reverse(scores[v]), v));

    let mut component_of = vec![0; n];
    let mut components = Vec::new();
    let mut start = 0;
    let mut sum = 0;
    for k in 1..=n {
        sum += scores[order[k - 1]];
        if sum == k * (k - 1) / 2 + k * (n - k) {
            let id = components.len();
            for &v in &order[start..k] {
                component_of[v] = id;
            }
            components.push(order[start..k].to_vec());
            start = k;
        }
    }
    SccDecomposition {
        component_of,
        components,
    }
}

pub fn is_strongly_connected(t: &Tournament) -> bool {
    scc(t).component_count() == 1
}

pub fn is_hamiltonian(t: &Tournament) -> bool {
    t.order() >= 3 && is_strongly_connected(t)
}

/// A verified directed Hamilton cycle, stored as a cyclic vertex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamiltonCertificate {
    order: Vec<usize>,
}

impl HamiltonCertificate {
    /// Wraps `order` after checking it against `t`.
    pub fn new(t: &Tournament, order: Vec<usize>) -> Result<Self> {
        check_cycle(t, &order)?;
        Ok(Self { order })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn into_order(self) -> Vec<usize> {
        self.order
    }
}

/// Checks that `order` is a directed Hamilton cycle of `t`.
///
/// The reported position is the index of the first bad entry, or `i` for a
/// missing edge `order[i] → order[i+1 mod n]`.
pub fn check_cycle(t: &Tournament, order: &[usize]) -> Result<()> {
    let n = t.order();
    let bad = |position: usize, reason: String| Error::InvalidCertificate { position, reason };
    if n < 3 {
        return Err(bad(0, format!("a {n}-vertex tournament has no Hamilton cycle")));
    }
    let mut seen = BitSet::new(n);
    for (i, &v) in order.iter().enumerate() {
        if v >= n {
            return Err(bad(i, format!("vertex {v} out of range")));
        }
        if seen.contains(v) {
            return Err(bad(i, format!("vertex {v} repeated")));
        }
        seen.insert(v);
    }
    if order.len() != n {
        return Err(bad(order.len(), format!("expected {n} vertices, got {}", order.len())));
    }
    for i in 0..n {
        let (u, w) = (order[i], order[(i + 1) % n]);
        if !t.has_edge(u, w) {
            return Err(bad(i, format!("{u} -> {w} is not an edge")));
        }
    }
    Ok(())
}

/// A Hamilton path by insertion; every tournament has one.
pub fn hamilton_path(t: &Tournament) -> Vec<usize> {
    let mut path: Vec<usize> = Vec::with_capacity(t.order());
    for v in 0..t.order() {
        if path.is_empty() || t.has_edge(v, path[0]) {
            path.insert(0, v);
        } else if t.has_edge(*path.last().unwrap(), v) {
            path.push(v);
        } else {
            // path[0] → v and v → last: some consecutive pair switches.
            let i = path
                .windows(2)
                .position(|w| t.has_edge(w[0], v) && t.has_edge(v, w[1]))
                .expect("tournament insertion point exists");
            path.insert(i + 1, v);
        }
    }
    path
}

/// A Hamilton cycle, or `None` when the tournament is not Hamiltonian.
///
/// Starts from a Hamilton path `p₀ … p_{n-1}`, closes the longest prefix
/// `p₀ … p_j` with `p_j → p₀` into a cycle, then absorbs the remaining path
/// vertices in order. A vertex with an out-neighbor on the cycle is inserted
/// between two consecutive cycle vertices; a run of vertices dominated by the
/// cycle is spliced in ahead of the first later path vertex that has an
/// out-neighbor on the cycle. `O(n²)` overall.
pub fn hamilton_cycle(t: &Tournament) -> Option<HamiltonCertificate> {
    let n = t.order();
    if !is_hamiltonian(t) {
        return None;
    }
    let path = hamilton_path(t);
    let head = path[0];
    let close = (2..n).rev().find(|&j| t.has_edge(path[j], head))?;

    const NONE: usize = usize::MAX;
    let mut succ = vec![NONE; n];
    let mut pred = vec![NONE; n];
    let mut on_cycle = BitSet::new(n);
    let link = |succ: &mut [usize], pred: &mut [usize], a: usize, b: usize| {
        succ[a] = b;
        pred[b] = a;
    };
    for w in path[..=close].windows(2) {
        link(&mut succ, &mut pred, w[0], w[1]);
    }
    link(&mut succ, &mut pred, path[close], head);
    for &v in &path[..=close] {
        on_cycle.insert(v);
    }

    // `head` beats every vertex after `close`, by maximality of `close`.
    let rest = &path[close + 1..];
    let mut idx = 0;
    while idx < rest.len() {
        let u = rest[idx];
        if t.out_degree_into(u, &on_cycle) > 0 {
            let mut c = head;
            loop {
                let next = succ[c];
                if t.has_edge(u, next) {
                    link(&mut succ, &mut pred, c, u);
                    link(&mut succ, &mut pred, u, next);
                    break;
                }
                c = next;
            }
            on_cycle.insert(u);
            idx += 1;
        } else {
            let m = (idx + 1..rest.len()).find(|&m| t.out_degree_into(rest[m], &on_cycle) > 0)?;
            let target = bitset::ones(t.out_row(rest[m]))
                .find(|&c| on_cycle.contains(c))
                .expect("out-neighbor on cycle");
            let before = pred[target];
            link(&mut succ, &mut pred, before, u);
            for w in rest[idx..=m].windows(2) {
                link(&mut succ, &mut pred, w[0], w[1]);
            }
            link(&mut succ, &mut pred, rest[m], target);
            for &v in &rest[idx..=m] {
                on_cycle.insert(v);
            }
            idx = m + 1;
        }
    }

    let mut order = Vec::with_capacity(n);
    let mut v = head;
    for _ in 0..n {
        order.push(v);
        v = succ[v];
    }
    let cert = HamiltonCertificate::new(t, order);
    debug_assert!(cert.is_ok(), "{cert:?}");
    cert.ok()
}

/// Exact Hamiltonicity by dynamic programming over (subset, endpoint) states.
///
/// Paths start at vertex 0; `reach[mask]` holds the endpoints of Hamilton
/// paths of `{0} ∪ mask`. The answer is whether some endpoint of the full
/// mask has an edge back to 0. `O(2ⁿ · n)` word operations.
pub fn brute_force_hamiltonian(t: &Tournament) -> Result<bool> {
    let n = t.order();
    if n > BRUTE_FORCE_MAX {
        return Err(Error::TooLarge {
            n,
            max: BRUTE_FORCE_MAX,
        });
    }
    if n < 3 {
        return Ok(false);
    }
    // Local bit i stands for vertex i + 1.
    let m = n - 1;
    let in_mask: Vec<u32> = (1..n)
        .map(|v| {
            (1..n)
                .filter(|&u| t.has_edge(u, v))
                .fold(0u32, |acc, u| acc | 1 << (u - 1))
        })
        .collect();
    let mut reach = vec![0u32; 1 << m];
    for i in 0..m {
        if t.has_edge(0, i + 1) {
            reach[1 << i] = 1 << i;
        }
    }
    for mask in 1u32..(1 << m) {
        if mask.count_ones() < 2 {
            continue;
        }
        let mut ends = 0u32;
        let mut rem = mask;
        while rem != 0 {
            let v = rem.trailing_zeros() as usize;
            rem &= rem - 1;
            if reach[(mask ^ (1 << v)) as usize] & in_mask[v] != 0 {
                ends |= 1 << v;
            }
        }
        reach[mask as usize] = ends;
    }
    let closers = (1..n)
        .filter(|&v| t.has_edge(v, 0))
        .fold(0u32, |acc, v| acc | 1 << (v - 1));
    Ok(reach[(1usize << m) - 1] & closers != 0)
}
