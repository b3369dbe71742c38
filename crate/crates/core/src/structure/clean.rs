use serde::Serialize;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::tournament::{Tournament, VertexSubset};

use super::{goodness, GoodnessReport, Partition};

/// Largest tolerance the cleaner accepts.
pub const MAX_CLEAN_EPS: f64 = 0.01;

/// Vertices removed from the input cut, one set per degree test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RemovalSets {
    /// `v ∈ A₀` with `|N⁻(v) ∩ A₀| ≤ (1/4 - δ)n`
    pub a_minus: VertexSubset,
    /// `v ∈ A₀` with `|N⁺(v) ∩ A₀| ≤ n/5`
    pub a_plus: VertexSubset,
    /// `v ∈ B₀` with `|N⁺(v) ∩ B₀| ≤ (1/4 - δ)n`
    pub b_plus: VertexSubset,
    /// `v ∈ B₀` with `|N⁻(v) ∩ B₀| ≤ n/5`
    pub b_minus: VertexSubset,
}

#[derive(Debug, Clone, Serialize)]
pub struct CleanOutcome {
    pub partition: Partition,
    /// Goodness at tolerance `eps^(1/3)`.
    pub report: GoodnessReport,
    pub removed: RemovalSets,
    /// `eps^(1/2)`
    pub delta: f64,
}

impl CleanOutcome {
    /// `|A₀⁻| ≤ δn/4` and `|A₀⁺| ≤ 15δn`.
    pub fn removal_bounds_hold(&self) -> bool {
        let n = self.partition.universe() as f64;
        self.removed.a_minus.len() as f64 <= self.delta * n / 4.0
            && self.removed.a_plus.len() as f64 <= 15.0 * self.delta * n
    }
}

/// Trims a balanced cut `(A₀, B₀)` into a partition by discarding vertices
/// whose degree inside their own side is too small.
///
/// The guarantee of an `eps^(1/3)`-good result needs `e(A₀,B₀) ≥ (1-eps)|A₀||B₀|`
/// and a large minimum semidegree; the procedure runs regardless and the
/// report says what holds.
pub fn clean_to_good_partition(
    t: &Tournament,
    a0: &VertexSubset,
    b0: &VertexSubset,
    eps: f64,
) -> Result<CleanOutcome> {
    if !(eps > 0.0 && eps <= MAX_CLEAN_EPS) {
        return Err(Error::BadParams(format!(
            "eps must lie in (0, {MAX_CLEAN_EPS}], got {eps}"
        )));
    }
    let n = t.order();
    let start = Partition::from_bipartition(a0.clone(), b0.clone())?;
    if start.universe() != n {
        return Err(Error::UniverseMismatch {
            subset: start.universe(),
            tournament: n,
        });
    }
    if a0.len().abs_diff(b0.len()) > 1 {
        return Err(Error::InvalidPartition(format!(
            "cut is unbalanced: {} vs {}",
            a0.len(),
            b0.len()
        )));
    }

    let delta = eps.sqrt();
    let nf = n as f64;
    let low = (0.25 - delta) * nf;
    let fifth = nf / 5.0;
    let (a_mask, b_mask) = (a0.to_mask(), b0.to_mask());
    let pick = |side: &VertexSubset, pred: &dyn Fn(usize) -> bool| {
        VertexSubset::from_mask(&BitSet::from_indices(
            n,
            side.members().iter().copied().filter(|&v| pred(v)),
        ))
    };
    let removed = RemovalSets {
        a_minus: pick(a0, &|v| t.in_degree_from(v, &a_mask) as f64 <= low),
        a_plus: pick(a0, &|v| t.out_degree_into(v, &a_mask) as f64 <= fifth),
        b_plus: pick(b0, &|v| t.out_degree_into(v, &b_mask) as f64 <= low),
        b_minus: pick(b0, &|v| t.in_degree_from(v, &b_mask) as f64 <= fifth),
    };

    let mut a = a_mask;
    a.difference_with(&removed.a_minus.to_mask());
    a.difference_with(&removed.a_plus.to_mask());
    let mut b = b_mask;
    b.difference_with(&removed.b_plus.to_mask());
    b.difference_with(&removed.b_minus.to_mask());
    let mut x = BitSet::full(n);
    x.difference_with(&a);
    x.difference_with(&b);

    let partition = Partition::new(
        VertexSubset::from_mask(&a),
        VertexSubset::from_mask(&b),
        VertexSubset::from_mask(&x),
    )?;
    let report = goodness(t, &partition, eps.cbrt())?;
    Ok(CleanOutcome {
        partition,
        report,
        removed,
        delta,
    })
}
