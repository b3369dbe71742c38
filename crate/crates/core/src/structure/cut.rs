use std::cmp::Reverse;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::tournament::{Tournament, VertexSubset};

/// Largest order for which [`balanced_cut_search`] enumerates every
/// balanced bipartition.
pub const EXACT_CUT_MAX: usize = 20;

const RESTART_SEED: u64 = 0x7475_726e_6579_6c61;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CutMethod {
    Exact,
    LocalSearch,
    DegreeWitness,
}

/// A balanced bipartition and the density of edges from `a` to `b`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CutResult {
    #[serde(rename = "A")]
    pub a: Vec<usize>,
    #[serde(rename = "B")]
    pub b: Vec<usize>,
    /// `e(A, B)`
    pub forward_edges: usize,
    /// `e(A, B) / (|A||B|)`
    pub density: f64,
    pub method: CutMethod,
}

impl CutResult {
    fn from_mask(t: &Tournament, side_a: &BitSet, method: CutMethod) -> Self {
        let n = t.order();
        let mut side_b = BitSet::full(n);
        side_b.difference_with(side_a);
        let forward_edges = t.edges_between(side_a, &side_b);
        let pairs = side_a.count() * side_b.count();
        Self {
            a: side_a.iter().collect(),
            b: side_b.iter().collect(),
            forward_edges,
            density: if pairs == 0 { 0.0 } else { forward_edges as f64 / pairs as f64 },
            method,
        }
    }

    pub fn sides(&self, n: usize) -> Result<(VertexSubset, VertexSubset)> {
        Ok((
            VertexSubset::new(n, self.a.clone())?,
            VertexSubset::new(n, self.b.clone())?,
        ))
    }
}

fn check_order(t: &Tournament) -> Result<()> {
    if t.order() < 2 {
        return Err(Error::BadParams("cut search needs at least 2 vertices".into()));
    }
    Ok(())
}

/// Exact search for `n ≤ 20`, otherwise [`balanced_cut_heuristic`].
pub fn balanced_cut_search(t: &Tournament, effort: usize) -> Result<CutResult> {
    if t.order() <= EXACT_CUT_MAX {
        balanced_cut_exact(t)
    } else {
        balanced_cut_heuristic(t, effort)
    }
}

/// Maximum-density balanced directed cut by enumerating every `A` with
/// `|A| ∈ {⌊n/2⌋, ⌈n/2⌉}`. Ties keep the first cut found.
pub fn balanced_cut_exact(t: &Tournament) -> Result<CutResult> {
    check_order(t)?;
    let n = t.order();
    if n > EXACT_CUT_MAX {
        return Err(Error::TooLarge {
            n,
            max: EXACT_CUT_MAX,
        });
    }
    let rows: Vec<u32> = (0..n).map(|v| t.out_row(v)[0] as u32).collect();
    let full = (1u32 << n) - 1;
    let mut best = (0usize, 0u32);
    let mut first = true;
    let mut sizes = vec![n / 2];
    if n % 2 == 1 {
        sizes.push(n / 2 + 1);
    }
    for size in sizes {
        // Gosper's hack over all `size`-subsets.
        let mut mask: u32 = (1 << size) - 1;
        while mask <= full {
            let rest = full & !mask;
            let mut edges = 0usize;
            let mut m = mask;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                edges += (rows[v] & rest).count_ones() as usize;
            }
            if first || edges > best.0 {
                best = (edges, mask);
                first = false;
            }
            let low = mask & mask.wrapping_neg();
            let ripple = mask + low;
            if ripple == 0 || ripple > full + 1 {
                break;
            }
            mask = (((ripple ^ mask) >> 2) / low) | ripple;
        }
    }
    let side_a = BitSet::from_indices(n, (0..n).filter(|&v| best.1 >> v & 1 == 1));
    Ok(CutResult::from_mask(t, &side_a, CutMethod::Exact))
}

/// Best of the degree-witness cut (the `⌊n/2⌋` vertices of largest
/// out-degree form `A`) and swap hill-climbing from that cut plus `effort`
/// seeded random balanced starts. No optimality guarantee.
pub fn balanced_cut_heuristic(t: &Tournament, effort: usize) -> Result<CutResult> {
    check_order(t)?;
    let n = t.order();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (Reverse(t.out_degree(v)), v));
    let witness = BitSet::from_indices(n, by_degree[..n / 2].iter().copied());
    let witness_edges = forward_edges(t, &witness);

    let mut best_mask = witness.clone();
    let mut best_edges = witness_edges;
    let mut method = CutMethod::DegreeWitness;

    let mut consider = |mask: BitSet, edges: usize| {
        if edges > best_edges {
            best_edges = edges;
            best_mask = mask;
            method = CutMethod::LocalSearch;
        }
    };
    let (mask, edges) = hill_climb(t, witness);
    consider(mask, edges);

    let mut order: Vec<usize> = (0..n).collect();
    for restart in 0..effort {
        let mut rng = ChaCha8Rng::seed_from_u64(RESTART_SEED ^ restart as u64);
        order.shuffle(&mut rng);
        let start = BitSet::from_indices(n, order[..n / 2].iter().copied());
        let (mask, edges) = hill_climb(t, start);
        consider(mask, edges);
    }
    Ok(CutResult::from_mask(t, &best_mask, method))
}

fn forward_edges(t: &Tournament, side_a: &BitSet) -> usize {
    let mut side_b = BitSet::full(t.order());
    side_b.difference_with(side_a);
    t.edges_between(side_a, &side_b)
}

/// Repeats the best single swap `a ↔ b` while it increases `e(A, B)`.
///
/// Swapping `a ∈ A` with `b ∈ B` changes `e(A, B)` by
/// `(in_A(a) - out_B(a)) + (out_B(b) - in_A(b)) + 1`, so the best swap pairs
/// the best `a` with the best `b` independently.
fn hill_climb(t: &Tournament, mut side_a: BitSet) -> (BitSet, usize) {
    let n = t.order();
    let mut side_b = BitSet::full(n);
    side_b.difference_with(&side_a);
    let mut in_a: Vec<i64> = (0..n).map(|v| t.in_degree_from(v, &side_a) as i64).collect();
    let mut out_b: Vec<i64> = (0..n).map(|v| t.out_degree_into(v, &side_b) as i64).collect();
    let mut edges = t.edges_between(&side_a, &side_b) as i64;

    loop {
        let best_a = side_a.iter().max_by_key(|&v| (in_a[v] - out_b[v], Reverse(v)));
        let best_b = side_b.iter().max_by_key(|&v| (out_b[v] - in_a[v], Reverse(v)));
        let (Some(a), Some(b)) = (best_a, best_b) else {
            break;
        };
        let gain = in_a[a] - out_b[a] + out_b[b] - in_a[b] + 1;
        if gain <= 0 {
            break;
        }
        side_a.remove(a);
        side_a.insert(b);
        side_b.remove(b);
        side_b.insert(a);
        for v in 0..n {
            in_a[v] += i64::from(t.has_edge(b, v)) - i64::from(t.has_edge(a, v));
            out_b[v] += i64::from(t.has_edge(v, a)) - i64::from(t.has_edge(v, b));
        }
        edges += gain;
    }
    debug_assert_eq!(edges as usize, t.edges_between(&side_a, &side_b));
    (side_a, edges as usize)
}
