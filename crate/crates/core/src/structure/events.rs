use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::hamilton::is_hamiltonian;
use crate::tournament::{induced, min_semidegree_within, Tournament, VertexSubset};

use super::Partition;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BadEventFlags {
    /// `|S ∩ X| ≥ |S|/5`
    pub b1: bool,
    /// Some part of `S` has too small a minimum semidegree.
    pub b2: bool,
    /// No path from `A ∩ S` to `B ∩ S` inside `T[S]`.
    pub b3: bool,
    /// No path from `B ∩ S` to `A ∩ S` inside `T[S]`.
    pub b4: bool,
}

impl BadEventFlags {
    pub fn any(&self) -> bool {
        self.b1 || self.b2 || self.b3 || self.b4
    }
}

/// Vertices of `within` reachable from `sources ∩ within` using only
/// vertices of `within`, sources included.
pub fn reachable_within(t: &Tournament, sources: &BitSet, within: &BitSet) -> BitSet {
    let mut reached = sources.clone();
    reached.intersect_with(within);
    let mut frontier: Vec<usize> = reached.iter().collect();
    let mut fresh_vertices = Vec::new();
    while let Some(v) = frontier.pop() {
        let words = t.out_row(v).iter().zip(within.words()).zip(reached.words());
        for (i, ((&row, &w), &r)) in words.enumerate() {
            let mut fresh = row & w & !r;
            while fresh != 0 {
                fresh_vertices.push(i * 64 + fresh.trailing_zeros() as usize);
                fresh &= fresh - 1;
            }
        }
        for u in fresh_vertices.drain(..) {
            reached.insert(u);
            frontier.push(u);
        }
    }
    reached
}

fn check_universes(t: &Tournament, p: &Partition, s: &VertexSubset) -> Result<()> {
    let n = t.order();
    for universe in [p.universe(), s.universe()] {
        if universe != n {
            return Err(Error::UniverseMismatch {
                subset: universe,
                tournament: n,
            });
        }
    }
    Ok(())
}

/// Evaluates the four bad events for the sampled set `s`.
pub fn bad_events(t: &Tournament, p: &Partition, s: &VertexSubset) -> Result<BadEventFlags> {
    check_universes(t, p, s)?;
    let (a, b, x) = p.masks();
    let s_mask = s.to_mask();
    let part = |m: &BitSet| {
        let mut m = m.clone();
        m.intersect_with(&s_mask);
        m
    };
    let (sa, sb, sx) = (part(a), part(b), part(x));
    if sa.is_empty() {
        return Err(Error::EmptyPart('A'));
    }
    if sb.is_empty() {
        return Err(Error::EmptyPart('B'));
    }
    let size = s.len();
    let semi = |m: &BitSet| min_semidegree_within(t, m).unwrap_or(0);
    let b1 = 5 * sx.count() >= size;
    let b2 = 10 * semi(&sa) < 3 * sa.count()
        || 10 * semi(&sb) < 3 * sb.count()
        || 5 * semi(&s_mask) < size;
    let b3 = reachable_within(t, &sa, &s_mask).is_disjoint(&sb);
    let b4 = reachable_within(t, &sb, &s_mask).is_disjoint(&sa);
    Ok(BadEventFlags { b1, b2, b3, b4 })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ImplicationOutcome {
    /// Some bad event holds or a part misses `S`; nothing to check.
    Vacuous,
    /// No bad event and `T[S]` is Hamiltonian.
    Confirmed,
    /// No bad event yet `T[S]` is not Hamiltonian.
    Violated,
}

impl ImplicationOutcome {
    pub fn holds(self) -> bool {
        self != Self::Violated
    }
}

/// Checks "no bad event implies `T[S]` Hamiltonian" on one sample.
pub fn hamiltonicity_from_no_bad_events(
    t: &Tournament,
    p: &Partition,
    s: &VertexSubset,
) -> Result<ImplicationOutcome> {
    let flags = match bad_events(t, p, s) {
        Ok(flags) => flags,
        Err(Error::EmptyPart(_)) => return Ok(ImplicationOutcome::Vacuous),
        Err(e) => return Err(e),
    };
    if flags.any() {
        return Ok(ImplicationOutcome::Vacuous);
    }
    Ok(if is_hamiltonian(&induced(t, s)?) {
        ImplicationOutcome::Confirmed
    } else {
        ImplicationOutcome::Violated
    })
}
