use serde::Serialize;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::tournament::{Tournament, VertexSubset};

use super::Partition;

/// Vertices with at least `k` out-neighbours in `A` and `k` in-neighbours in `B`.
pub fn k_connectors(t: &Tournament, p: &Partition, k: usize) -> VertexSubset {
    let (a, b, _) = p.masks();
    let n = t.order();
    VertexSubset::from_mask(&BitSet::from_indices(
        n,
        (0..n).filter(|&v| t.out_degree_into(v, a) >= k && t.in_degree_from(v, b) >= k),
    ))
}

#[derive(Debug, Clone, Serialize)]
pub struct Refinement {
    pub partition: Partition,
    /// Vertices moved into `X`, ascending.
    pub moved: Vec<usize>,
    /// More than `t` vertices qualified on one side; `partition` is the input.
    pub short_circuit: bool,
}

/// Moves every `b ∈ B` with `|N⁺(b) ∩ A| ≥ k + t` and every `a ∈ A` with
/// `|N⁻(a) ∩ B| ≥ k + t` into `X`, unless more than `t` vertices qualify on
/// either side.
pub fn refine_partition(t: &Tournament, p: &Partition, k: usize, budget: usize) -> Refinement {
    let (a, b, _) = p.masks();
    let threshold = k + budget;
    let from_b: Vec<usize> = b.iter().filter(|&v| t.out_degree_into(v, a) >= threshold).collect();
    let from_a: Vec<usize> = a.iter().filter(|&v| t.in_degree_from(v, b) >= threshold).collect();
    if from_a.len() > budget || from_b.len() > budget {
        return Refinement {
            partition: p.clone(),
            moved: Vec::new(),
            short_circuit: true,
        };
    }
    let mut moved: Vec<usize> = from_a.into_iter().chain(from_b).collect();
    moved.sort_unstable();
    let n = t.order();
    let moved_mask = BitSet::from_indices(n, moved.iter().copied());
    let (mut a, mut b, mut x) = (a.clone(), b.clone(), p.x_mask());
    a.difference_with(&moved_mask);
    b.difference_with(&moved_mask);
    x.union_with(&moved_mask);
    let partition = Partition::new(
        VertexSubset::from_mask(&a),
        VertexSubset::from_mask(&b),
        VertexSubset::from_mask(&x),
    )
    .expect("moving vertices into X keeps a partition");
    Refinement {
        partition,
        moved,
        short_circuit: false,
    }
}

/// `⌈2 · log_{1/(1-p²)}((t+1)/σ)⌉`, at least 1.
pub fn default_connector_k(p: f64, t: usize, sigma: f64) -> Result<usize> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::BadParams(format!("p must lie in (0, 1), got {p}")));
    }
    if !(sigma > 0.0 && sigma < 1.0) {
        return Err(Error::BadParams(format!("sigma must lie in (0, 1), got {sigma}")));
    }
    let k = 2.0 * ((t as f64 + 1.0) / sigma).ln() / -(1.0 - p * p).ln();
    Ok((k.ceil() as usize).max(1))
}
