//! Structural machinery for tournaments with an almost-directed cut.
//!
//! Everything here works on a vertex partition `V = A ∪ B ∪ X` in which
//! most edges between `A` and `B` point from `A` to `B`:
//!
//! * [`balanced_cut_search`] looks for the cut itself,
//! * [`clean_to_good_partition`] trims a cut into an ε-good partition,
//! * [`refine_partition`], [`k_connectors`] and [`max_ba_matching`] count the
//!   ways back from `B` to `A`,
//! * [`bad_events`] evaluates the four failure events on a sampled subset,
//! * [`low_indegree_census`] is the degree statistic used when no cut exists.

mod census;
mod clean;
mod connectors;
mod cut;
mod events;
mod matching;

pub use census::low_indegree_census;
pub use clean::{clean_to_good_partition, CleanOutcome, RemovalSets, MAX_CLEAN_EPS};
pub use connectors::{default_connector_k, k_connectors, refine_partition, Refinement};
pub use cut::{
    balanced_cut_exact, balanced_cut_heuristic, balanced_cut_search, CutMethod, CutResult,
    EXACT_CUT_MAX,
};
pub use events::{
    bad_events, hamiltonicity_from_no_bad_events, reachable_within, BadEventFlags,
    ImplicationOutcome,
};
pub use matching::{max_ba_matching, MatchingCover};

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::tournament::{min_semidegree_within, Tournament, VertexSubset};

/// Disjoint cover `V(T) = A ∪ B ∪ X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    a: VertexSubset,
    b: VertexSubset,
    x: VertexSubset,
    a_mask: BitSet,
    b_mask: BitSet,
    x_mask: BitSet,
}

impl Partition {
    pub fn new(a: VertexSubset, b: VertexSubset, x: VertexSubset) -> Result<Self> {
        let n = a.universe();
        if b.universe() != n || x.universe() != n {
            return Err(Error::InvalidPartition("parts have different universes".into()));
        }
        let (a_mask, b_mask, x_mask) = (a.to_mask(), b.to_mask(), x.to_mask());
        if !a_mask.is_disjoint(&b_mask) || !a_mask.is_disjoint(&x_mask) || !b_mask.is_disjoint(&x_mask)
        {
            return Err(Error::InvalidPartition("parts overlap".into()));
        }
        if a.len() + b.len() + x.len() != n {
            return Err(Error::InvalidPartition(format!(
                "parts cover {} of {n} vertices",
                a.len() + b.len() + x.len()
            )));
        }
        Ok(Self {
            a,
            b,
            x,
            a_mask,
            b_mask,
            x_mask,
        })
    }

    /// Builds a partition of `0..n` from member lists, sorting each part.
    pub fn from_parts(n: usize, a: Vec<usize>, b: Vec<usize>, x: Vec<usize>) -> Result<Self> {
        let part = |mut v: Vec<usize>| {
            v.sort_unstable();
            VertexSubset::new(n, v)
        };
        Self::new(part(a)?, part(b)?, part(x)?)
    }

    /// `(A₀, B₀, ∅)` from a bipartition.
    pub fn from_bipartition(a: VertexSubset, b: VertexSubset) -> Result<Self> {
        let n = a.universe();
        Self::new(a, b, VertexSubset::empty(n))
    }

    pub fn universe(&self) -> usize {
        self.a.universe()
    }

    pub fn a(&self) -> &VertexSubset {
        &self.a
    }

    pub fn b(&self) -> &VertexSubset {
        &self.b
    }

    pub fn x(&self) -> &VertexSubset {
        &self.x
    }

    pub fn a_mask(&self) -> BitSet {
        self.a_mask.clone()
    }

    pub fn b_mask(&self) -> BitSet {
        self.b_mask.clone()
    }

    pub fn x_mask(&self) -> BitSet {
        self.x_mask.clone()
    }

    pub(crate) fn masks(&self) -> (&BitSet, &BitSet, &BitSet) {
        (&self.a_mask, &self.b_mask, &self.x_mask)
    }

    pub fn to_repr(&self) -> PartitionRepr {
        PartitionRepr {
            a: self.a.members().to_vec(),
            b: self.b.members().to_vec(),
            x: self.x.members().to_vec(),
        }
    }

    pub fn from_repr(n: usize, repr: PartitionRepr) -> Result<Self> {
        Self::from_parts(n, repr.a, repr.b, repr.x)
    }

    fn check_against(&self, t: &Tournament) -> Result<()> {
        if self.universe() != t.order() {
            return Err(Error::UniverseMismatch {
                subset: self.universe(),
                tournament: t.order(),
            });
        }
        Ok(())
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_repr().serialize(s)
    }
}

/// Wire form of a [`Partition`]: `{"A":[...],"B":[...],"X":[...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionRepr {
    #[serde(rename = "A")]
    pub a: Vec<usize>,
    #[serde(rename = "B")]
    pub b: Vec<usize>,
    #[serde(rename = "X")]
    pub x: Vec<usize>,
}

/// The three ε-goodness conditions evaluated on a concrete partition.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GoodnessReport {
    pub eps: f64,
    /// `|A|, |B| ≥ (1-ε)n/2`
    pub size_ok: bool,
    /// `δ⁰(T[A]), δ⁰(T[B]) ≥ (1/6-ε)n`
    pub semidegree_ok: bool,
    /// `e(A,B) ≥ (1-ε)|A||B|`
    pub density_ok: bool,
    pub e_ab: usize,
    pub e_ba: usize,
    pub size_a: usize,
    pub size_b: usize,
    pub min_semidegree_a: Option<usize>,
    pub min_semidegree_b: Option<usize>,
}

impl GoodnessReport {
    pub fn is_good(&self) -> bool {
        self.size_ok && self.semidegree_ok && self.density_ok
    }
}

/// Evaluates ε-goodness of `p` in `t`.
pub fn goodness(t: &Tournament, p: &Partition, eps: f64) -> Result<GoodnessReport> {
    p.check_against(t)?;
    let n = t.order() as f64;
    let (a, b, _) = p.masks();
    let (size_a, size_b) = (a.count(), b.count());
    let e_ab = t.edges_between(a, b);
    let e_ba = t.edges_between(b, a);
    let min_semidegree_a = min_semidegree_within(t, a);
    let min_semidegree_b = min_semidegree_within(t, b);

    let size_floor = (1.0 - eps) * n / 2.0;
    let semi_floor = (1.0 / 6.0 - eps) * n;
    let semi_ok = |d: Option<usize>| d.is_some_and(|d| d as f64 >= semi_floor);
    Ok(GoodnessReport {
        eps,
        size_ok: size_a as f64 >= size_floor && size_b as f64 >= size_floor,
        semidegree_ok: semi_ok(min_semidegree_a) && semi_ok(min_semidegree_b),
        density_ok: e_ab as f64 >= (1.0 - eps) * (size_a * size_b) as f64,
        e_ab,
        e_ba,
        size_a,
        size_b,
        min_semidegree_a,
        min_semidegree_b,
    })
}
