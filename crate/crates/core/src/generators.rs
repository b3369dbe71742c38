//! Tournament families used as inputs and as extremal examples.
//!
//! Extremal constructions lay their parts out contiguously, in the order
//! `A`, `B`, then `X` (or the single vertex `v`), so the natural partition is
//! recoverable from the parameters alone; see [`ExtremalSpec::partition`].

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::structure::Partition;
use crate::tournament::{semidegrees, Tournament, VertexSubset};

/// Circulant tournament on an odd number of vertices: `i → j` iff
/// `(j - i) mod n ∈ {1..(n-1)/2}`.
fn circulant(n: usize) -> Tournament {
    debug_assert!(n % 2 == 1);
    let half = n / 2;
    Tournament::from_pairs(n, |i, j| j - i <= half).expect("order checked by caller")
}

/// The `k`-regular rotational tournament on `2k + 1` vertices.
pub fn rotational_tournament(k: usize) -> Result<Tournament> {
    if k == 0 {
        return Err(Error::BadParams("rotational tournament needs k >= 1".into()));
    }
    Ok(circulant(2 * k + 1))
}

/// A tournament on `m` vertices with minimum semidegree `⌊(m-1)/2⌋`.
///
/// Odd `m` is rotational. Even `m` adds an apex vertex `m - 1` to the
/// rotational tournament on `m - 1` vertices, beating vertices
/// `0..⌈(m-1)/2⌉` and beaten by the rest. `_seed` is reserved for a
/// randomized variant; the construction is currently deterministic.
pub fn near_regular_tournament(m: usize, _seed: Option<u64>) -> Result<Tournament> {
    if m == 0 {
        return Err(Error::BadParams("near-regular tournament needs m >= 1".into()));
    }
    if m % 2 == 1 {
        return Ok(circulant(m));
    }
    let base = m - 1;
    let half = base / 2;
    let apex_out = base.div_ceil(2);
    Tournament::from_pairs(m, |i, j| {
        if j == base {
            // apex → i for the first ⌈(m-1)/2⌉ vertices
            i >= apex_out
        } else {
            j - i <= half
        }
    })
}

/// `i → j` iff `i < j`.
pub fn transitive_tournament(n: usize) -> Result<Tournament> {
    Tournament::from_pairs(n, |_, _| true)
}

/// Every pair oriented by a fair coin drawn from a ChaCha8 stream seeded with
/// `seed`. Pairs are visited row by row, `i < j`.
pub fn random_tournament(n: usize, seed: u64) -> Result<Tournament> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Tournament::from_pairs(n, |_, _| rng.random::<bool>())
}

/// Halves `A = 0..2k+1` and `B = 2k+1..4k+2`, each rotational, with every
/// edge between them directed `A → B`. Minimum semidegree `k`.
pub fn extremal_theorem1_even(k: usize) -> Result<Tournament> {
    ExtremalSpec::Theorem1Even { k }.build()
}

/// `A`, `B` as in [`extremal_theorem1_even`] plus a vertex `v = 4k+2` with
/// `B → v → A`. Minimum semidegree `k + 1`, asserted on construction.
pub fn extremal_theorem1_odd(k: usize) -> Result<Tournament> {
    ExtremalSpec::Theorem1Odd { k }.build()
}

/// Parts `A`, `B`, `X` of sizes `⌊(n-t)/2⌋`, `⌈(n-t)/2⌉`, `t`, with
/// near-regular `A` and `B`, transitive `X`, and block edges
/// `A → B → X → A`.
///
/// The minimum semidegree is `⌊(|A|-1)/2⌋ + t = ⌊(n-t-2)/4⌋ + t` whenever
/// `t ≤ |A| - ⌊(|A|-1)/2⌋`; for larger `t` the last vertex of `X` has only
/// `|A|` out-neighbors and the minimum drops to `|A|`.
pub fn extremal_main(n: usize, t: usize, seed: Option<u64>) -> Result<Tournament> {
    ExtremalSpec::MainTightness { n, t, seed }.build()
}

/// Parameters of an extremal construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum ExtremalSpec {
    Theorem1Even { k: usize },
    Theorem1Odd { k: usize },
    MainTightness {
        n: usize,
        t: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        seed: Option<u64>,
    },
}

/// Contiguous part boundaries of a construction: `A = 0..a`,
/// `B = a..a+b`, `X = a+b..a+b+x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Layout {
    a: usize,
    b: usize,
    x: usize,
}

impl ExtremalSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            Self::Theorem1Even { k } | Self::Theorem1Odd { k } if k == 0 => {
                Err(Error::BadParams("k must be at least 1".into()))
            }
            Self::MainTightness { n, t, .. } if t == 0 || n < t + 6 => Err(Error::BadParams(
                format!("main tightness needs t >= 1 and n - t >= 6, got n = {n}, t = {t}"),
            )),
            _ => Ok(()),
        }
    }

    fn layout(&self) -> Layout {
        match *self {
            Self::Theorem1Even { k } => Layout { a: 2 * k + 1, b: 2 * k + 1, x: 0 },
            Self::Theorem1Odd { k } => Layout { a: 2 * k + 1, b: 2 * k + 1, x: 1 },
            Self::MainTightness { n, t, .. } => Layout {
                a: (n - t) / 2,
                b: (n - t).div_ceil(2),
                x: t,
            },
        }
    }

    pub fn order(&self) -> usize {
        let l = self.layout();
        l.a + l.b + l.x
    }

    pub fn build(&self) -> Result<Tournament> {
        self.validate()?;
        let Layout { a, b, x } = self.layout();
        let inner_a = near_regular_tournament(a, None)?;
        let inner_b = near_regular_tournament(b, None)?;
        let n = a + b + x;
        // Block edges A → B → X → A; X is internally transitive.
        let t = Tournament::from_pairs(n, |i, j| match (part(i, a, b), part(j, a, b)) {
            (0, 0) => inner_a.has_edge(i, j),
            (1, 1) => inner_b.has_edge(i - a, j - a),
            (2, 2) => true,
            (0, 1) => true,
            (1, 2) => true,
            (0, 2) => false,
            _ => unreachable!("i < j keeps parts ordered"),
        })?;

        if let Self::Theorem1Odd { k } = *self {
            let profile = semidegrees(&t);
            assert_eq!(
                profile.min_semidegree,
                k + 1,
                "odd construction must have minimum semidegree k + 1"
            );
        }
        Ok(t)
    }

    /// The construction's own `(A, B, X)` partition.
    pub fn partition(&self) -> Result<Partition> {
        self.validate()?;
        let Layout { a, b, x } = self.layout();
        let n = a + b + x;
        Partition::new(
            VertexSubset::new(n, (0..a).collect())?,
            VertexSubset::new(n, (a..a + b).collect())?,
            VertexSubset::new(n, (a + b..n).collect())?,
        )
    }

    /// A balanced bipartition `(A₀, B₀)` built from the construction: `A₀`
    /// is `A` topped up with the leading vertices of `X` until
    /// `|A₀| = ⌊n/2⌋`; everything else goes to `B₀`.
    pub fn natural_cut(&self) -> Result<(VertexSubset, VertexSubset)> {
        self.validate()?;
        let Layout { a, b, x } = self.layout();
        let n = a + b + x;
        let want = n / 2;
        let mut side_a: Vec<usize> = (0..a).collect();
        let mut side_b: Vec<usize> = (a..a + b).collect();
        for v in a + b..n {
            if side_a.len() < want {
                side_a.push(v);
            } else {
                side_b.push(v);
            }
        }
        if side_a.len().abs_diff(side_b.len()) > 1 {
            return Err(Error::BadParams(format!(
                "construction parts {a}/{b}/{x} admit no balanced cut of this shape"
            )));
        }
        Ok((VertexSubset::new(n, side_a)?, VertexSubset::new(n, side_b)?))
    }
}

#[inline]
fn part(v: usize, a: usize, b: usize) -> u8 {
    if v < a {
        0
    } else if v < a + b {
        1
    } else {
        2
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hamilton::{is_hamiltonian, scc};
    use crate::tournament::induced;

    fn min_deg(t: &Tournament) -> usize {
        semidegrees(t).min_semidegree
    }

    #[test]
    fn rotational_small_cases() {
        let t1 = rotational_tournament(1).unwrap();
        assert!(t1.has_edge(0, 1) && t1.has_edge(1, 2) && t1.has_edge(2, 0));
        let t3 = rotational_tournament(3).unwrap();
        let p = semidegrees(&t3);
        assert!(p.out_degrees.iter().all(|&d| d == 3));
        assert!(p.in_degrees.iter().all(|&d| d == 3));
        assert!(is_hamiltonian(&rotational_tournament(5).unwrap()));
        assert!(rotational_tournament(0).is_err());
    }

    #[test]
    fn near_regular_minimum_semidegree() {
        assert_eq!(min_deg(&near_regular_tournament(7, None).unwrap()), 3);
        assert_eq!(min_deg(&near_regular_tournament(8, None).unwrap()), 3);
        let two = near_regular_tournament(2, None).unwrap();
        assert_eq!(two.order(), 2);
        assert_eq!(min_deg(&two), 0);
        assert_eq!(near_regular_tournament(1, None).unwrap().order(), 1);
        for m in 1..40 {
            let t = near_regular_tournament(m, None).unwrap();
            assert_eq!(min_deg(&t), (m - 1) / 2, "m = {m}");
        }
    }

    #[test]
    fn transitive_cases() {
        assert!(!is_hamiltonian(&transitive_tournament(3).unwrap()));
        assert_eq!(min_deg(&transitive_tournament(5).unwrap()), 0);
        assert_eq!(scc(&transitive_tournament(4).unwrap()).component_count(), 4);
    }

    #[test]
    fn random_is_deterministic_and_complete() {
        assert_eq!(random_tournament(50, 9).unwrap(), random_tournament(50, 9).unwrap());
        assert_ne!(random_tournament(50, 9).unwrap(), random_tournament(50, 10).unwrap());
        let t = random_tournament(1000, 3).unwrap();
        let edges: usize = (0..1000).map(|v| t.out_degree(v)).sum();
        assert_eq!(edges, 1000 * 999 / 2);
    }

    #[test]
    fn two_halves_structure() {
        let t = extremal_theorem1_even(1).unwrap();
        assert_eq!(t.order(), 6);
        assert!(!is_hamiltonian(&t));
        assert_eq!(scc(&t).component_count(), 2);
        assert_eq!(min_deg(&extremal_theorem1_even(2).unwrap()), 2);
        for k in 1..6 {
            let spec = ExtremalSpec::Theorem1Even { k };
            let t = spec.build().unwrap();
            let p = spec.partition().unwrap();
            assert_eq!(t.edges_between(&p.b_mask(), &p.a_mask()), 0);
            assert_eq!(min_deg(&t), k);
        }
    }

    #[test]
    fn single_apex_structure() {
        let t = extremal_theorem1_odd(1).unwrap();
        assert_eq!(t.order(), 7);
        assert!(is_hamiltonian(&t));
        // Drop v but keep both halves.
        let s = VertexSubset::new(7, (0..6).collect()).unwrap();
        assert!(!is_hamiltonian(&induced(&t, &s).unwrap()));
        assert_eq!(min_deg(&extremal_theorem1_odd(3).unwrap()), 4);
    }

    #[test]
    fn main_tightness_structure() {
        let t = extremal_main(11, 1, None).unwrap();
        assert!(is_hamiltonian(&t));
        let without_x = VertexSubset::new(11, (0..10).collect()).unwrap();
        assert_eq!(scc(&induced(&t, &without_x).unwrap()).component_count(), 2);

        let spec = ExtremalSpec::MainTightness { n: 43, t: 2, seed: None };
        let t = spec.build().unwrap();
        let p = spec.partition().unwrap();
        assert_eq!((p.a().len(), p.b().len(), p.x().len()), (20, 21, 2));
        assert_eq!(t.edges_between(&p.b_mask(), &p.a_mask()), 0);
        assert_eq!(min_deg(&t), 39 / 4 + 2);
    }

    #[test]
    fn main_tightness_rejects_bad_params() {
        assert!(extremal_main(10, 0, None).is_err());
        assert!(extremal_main(7, 2, None).is_err());
        assert!(extremal_main(8, 2, None).is_ok());
        assert!(extremal_theorem1_even(0).is_err());
    }

    #[test]
    fn natural_cut_is_balanced() {
        for (n, t) in [(203, 1), (203, 2), (203, 3), (50, 7), (12, 6)] {
            let spec = ExtremalSpec::MainTightness { n, t, seed: None };
            let (a0, b0) = spec.natural_cut().unwrap();
            assert_eq!(a0.len(), n / 2);
            assert_eq!(a0.len() + b0.len(), n);
        }
        let (a0, _) = ExtremalSpec::Theorem1Odd { k: 2 }.natural_cut().unwrap();
        assert_eq!(a0.members(), &[0, 1, 2, 3, 4]);
    }
}
