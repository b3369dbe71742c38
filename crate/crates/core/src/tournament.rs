//! Tournament representation, vertex subsets, induced subtournaments and
//! degree statistics.

use serde::{Deserialize, Serialize};

use crate::bitset::{self, words_for, BitSet, WORD};
use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_ORDER: usize = 1 << 16;

/// A complete oriented graph on vertices `0..n`.
///
/// Row `i` of the orientation matrix is stored as a bitset of out-neighbors.
/// The constructors guarantee an empty diagonal and exactly one orientation
/// per unordered pair, so every `Tournament` value is valid.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tournament {
    n: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl Tournament {
    /// Builds a tournament by asking `forward(i, j)` for every pair `i < j`:
    /// `true` orients the edge `i → j`, `false` orients it `j → i`.
    pub fn from_pairs(n: usize, mut forward: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        check_order(n)?;
        let mut t = Self::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                if forward(i, j) {
                    t.set(i, j);
                } else {
                    t.set(j, i);
                }
            }
        }
        Ok(t)
    }

    fn empty(n: usize) -> Self {
        let stride = words_for(n);
        Self {
            n,
            stride,
            bits: vec![0; n * stride],
        }
    }

    #[inline]
    fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.stride + j / WORD] |= 1 << (j % WORD);
    }

    #[inline]
    fn clear(&mut self, i: usize, j: usize) {
        self.bits[i * self.stride + j / WORD] &= !(1 << (j % WORD));
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, from: usize, to: usize) -> bool {
        self.bits[from * self.stride + to / WORD] >> (to % WORD) & 1 == 1
    }

    /// Out-neighborhood of `v` as raw bitset words.
    #[inline]
    pub fn out_row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.stride..(v + 1) * self.stride]
    }

    /// Out-neighborhood of `v` as an owned set.
    pub fn out_neighbors(&self, v: usize) -> BitSet {
        BitSet::from_indices(self.n, bitset::ones(self.out_row(v)))
    }

    /// In-neighborhood of `v`: the complement of the out-row minus `v` itself.
    pub fn in_neighbors(&self, v: usize) -> BitSet {
        let mut set = BitSet::full(self.n);
        set.remove(v);
        for i in bitset::ones(self.out_row(v)) {
            set.remove(i);
        }
        set
    }

    #[inline]
    pub fn out_degree(&self, v: usize) -> usize {
        bitset::count_ones(self.out_row(v))
    }

    #[inline]
    pub fn in_degree(&self, v: usize) -> usize {
        self.n - 1 - self.out_degree(v)
    }

    /// `|N⁺(v) ∩ set|`.
    #[inline]
    pub fn out_degree_into(&self, v: usize, set: &BitSet) -> usize {
        bitset::intersection_count(self.out_row(v), set.words())
    }

    /// `|N⁻(v) ∩ set|`.
    #[inline]
    pub fn in_degree_from(&self, v: usize, set: &BitSet) -> usize {
        let own = usize::from(set.contains(v));
        set.count() - own - self.out_degree_into(v, set)
    }

    /// Number of edges directed from `from` into `to`.
    pub fn edges_between(&self, from: &BitSet, to: &BitSet) -> usize {
        from.iter().map(|v| self.out_degree_into(v, to)).sum()
    }

    /// Dense 0/1 orientation matrix.
    pub fn to_matrix(&self) -> Vec<Vec<u8>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| u8::from(self.has_edge(i, j))).collect())
            .collect()
    }

    /// Copy of this tournament with the listed pairs re-oriented.
    ///
    /// Each `(u, v)` must currently be an edge `u → v`; it becomes `v → u`.
    pub fn with_reversed(&self, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut t = self.clone();
        for &(u, v) in pairs {
            if u >= self.n || v >= self.n {
                return Err(Error::SubsetOutOfRange {
                    vertex: u.max(v),
                    universe: self.n,
                });
            }
            if !t.has_edge(u, v) {
                return Err(Error::BadParams(format!("{u} -> {v} is not an edge")));
            }
            t.clear(u, v);
            t.set(v, u);
        }
        Ok(t)
    }
}

impl std::fmt::Debug for Tournament {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Tournament(n = {})", self.n)?;
        for row in self.to_matrix() {
            let line: String = row.iter().map(|&b| if b == 1 { '1' } else { '0' }).collect();
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ORDER {
        return Err(Error::BadOrder { n, max: MAX_ORDER });
    }
    Ok(())
}

/// Checks a raw 0/1 matrix and converts it into a [`Tournament`].
///
/// Cells are scanned in row-major order and the first offending cell is
/// reported: a set diagonal entry, or a pair `(i, j)`, `i < j`, that is not
/// oriented exactly once.
pub fn validate<R: AsRef<[u8]>>(rows: &[R]) -> Result<Tournament> {
    let n = rows.len();
    check_order(n)?;
    for (i, row) in rows.iter().enumerate() {
        let row = row.as_ref();
        if row.len() != n {
            return Err(Error::NotSquare {
                row: i,
                len: row.len(),
                expected: n,
            });
        }
        if let Some(j) = row.iter().position(|&v| v > 1) {
            return Err(Error::NonBinary { i, j, value: row[j] });
        }
    }
    let mut t = Tournament::empty(n);
    for i in 0..n {
        let row = rows[i].as_ref();
        for j in 0..n {
            if i == j {
                if row[j] != 0 {
                    return Err(Error::DiagonalNonzero(i));
                }
            } else if i < j && row[j] + rows[j].as_ref()[i] != 1 {
                return Err(Error::PairViolation(i, j));
            }
            if row[j] == 1 {
                t.set(i, j);
            }
        }
    }
    Ok(t)
}

/// An ordered subset of the vertices of a tournament on `universe` vertices.
///
/// The member order defines the relabeling used by [`induced`]: local vertex
/// `i` of the subtournament is parent vertex `members()[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct VertexSubset {
    universe: usize,
    members: Vec<usize>,
}

impl VertexSubset {
    pub fn new(universe: usize, members: Vec<usize>) -> Result<Self> {
        let mut seen = BitSet::new(universe);
        for &v in &members {
            if v >= universe {
                return Err(Error::SubsetOutOfRange { vertex: v, universe });
            }
            if seen.contains(v) {
                return Err(Error::DuplicateVertex(v));
            }
            seen.insert(v);
        }
        Ok(Self { universe, members })
    }

    pub fn full(universe: usize) -> Self {
        Self {
            universe,
            members: (0..universe).collect(),
        }
    }

    pub fn empty(universe: usize) -> Self {
        Self {
            universe,
            members: Vec::new(),
        }
    }

    /// Members of `mask` in ascending order.
    pub fn from_mask(mask: &BitSet) -> Self {
        Self {
            universe: mask.capacity(),
            members: mask.iter().collect(),
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.contains(&v)
    }

    pub fn to_mask(&self) -> BitSet {
        BitSet::from_indices(self.universe, self.members.iter().copied())
    }

    /// Parent label of local vertex `local` in the induced subtournament.
    pub fn parent_label(&self, local: usize) -> usize {
        self.members[local]
    }

    /// Translates a sequence of local labels into parent labels.
    pub fn lift(&self, local: &[usize]) -> Vec<usize> {
        local.iter().map(|&i| self.members[i]).collect()
    }

    /// The subset of `self` selected by local indices into `self`, i.e. the
    /// composition of two relabelings.
    pub fn compose(&self, inner: &VertexSubset) -> Result<VertexSubset> {
        if inner.universe != self.len() {
            return Err(Error::UniverseMismatch {
                subset: inner.universe,
                tournament: self.len(),
            });
        }
        Ok(VertexSubset {
            universe: self.universe,
            members: self.lift(&inner.members),
        })
    }
}

/// The subtournament `T[S]`, relabeled `0..|S|` in the order of `S`.
///
/// Empty subsets have no tournament and are rejected with `BadOrder`.
pub fn induced(t: &Tournament, s: &VertexSubset) -> Result<Tournament> {
    if s.universe != t.n {
        return Err(Error::UniverseMismatch {
            subset: s.universe,
            tournament: t.n,
        });
    }
    let m = s.members.len();
    check_order(m)?;
    let mut sub = Tournament::empty(m);
    for (i, &u) in s.members.iter().enumerate() {
        let row = t.out_row(u);
        let base = i * sub.stride;
        for (j, &w) in s.members.iter().enumerate() {
            if row[w / WORD] >> (w % WORD) & 1 == 1 {
                sub.bits[base + j / WORD] |= 1 << (j % WORD);
            }
        }
    }
    Ok(sub)
}

/// Per-vertex in/out-degree counts and the minimum semidegree `δ⁰`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemidegreeProfile {
    pub out_degrees: Vec<usize>,
    pub in_degrees: Vec<usize>,
    pub min_semidegree: usize,
    /// Lowest-indexed vertex attaining `min_semidegree`.
    pub witness: usize,
}

pub fn semidegrees(t: &Tournament) -> SemidegreeProfile {
    let out_degrees: Vec<usize> = (0..t.n).map(|v| t.out_degree(v)).collect();
    let in_degrees: Vec<usize> = out_degrees.iter().map(|d| t.n - 1 - d).collect();
    let (witness, min_semidegree) = out_degrees
        .iter()
        .zip(&in_degrees)
        .map(|(&o, &i)| o.min(i))
        .enumerate()
        .min_by_key(|&(v, d)| (d, v))
        .expect("tournaments are non-empty");
    SemidegreeProfile {
        out_degrees,
        in_degrees,
        min_semidegree,
        witness,
    }
}

/// `δ⁰(T[mask])` computed without building the subtournament; `None` when
/// the mask is empty.
pub fn min_semidegree_within(t: &Tournament, mask: &BitSet) -> Option<usize> {
    let size = mask.count();
    mask.iter()
        .map(|v| {
            let out = t.out_degree_into(v, mask);
            out.min(size - 1 - out)
        })
        .min()
}
