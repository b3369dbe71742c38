//! Monte Carlo and exact estimates of `P[T_p Hamiltonian]`, where `T_p` keeps
//! each vertex independently with probability `p`.
//!
//! Trial `i` of an estimate draws its subset from a ChaCha8 stream keyed by
//! `(master_seed, i)`, so a report depends only on the tournament and the
//! plan, never on how trials are scheduled across threads.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hamilton::is_hamiltonian;
use crate::tournament::{induced, Tournament, VertexSubset};

/// Normal quantile for a two-sided 95% interval.
pub const Z_95: f64 = 1.959_963_984_540_054;
/// Three-sigma quantile (two-sided 99.73%).
pub const Z_997: f64 = 3.0;

/// Largest order accepted by exact subset enumeration.
pub const EXACT_MAX: usize = 20;

fn check_probability(p: f64) -> Result<()> {
    if p > 0.0 && p < 1.0 {
        Ok(())
    } else {
        Err(Error::BadParams(format!("probability {p} must lie in (0, 1)")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SamplePlan {
    p: f64,
    trials: u64,
    master_seed: u64,
}

impl SamplePlan {
    pub fn new(p: f64, trials: u64, master_seed: u64) -> Result<Self> {
        check_probability(p)?;
        if trials == 0 {
            return Err(Error::BadParams("trials must be positive".into()));
        }
        Ok(Self {
            p,
            trials,
            master_seed,
        })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn trials(&self) -> u64 {
        self.trials
    }

    pub fn master_seed(&self) -> u64 {
        self.master_seed
    }
}

/// Monte Carlo outcome. Serializes to the flat object
/// `{"p","trials","seed","successes","estimate","ci_low","ci_high"}`;
/// wall time is kept out of the serialized form so replays compare equal.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EstimateReport {
    pub p: f64,
    pub trials: u64,
    #[serde(rename = "seed")]
    pub master_seed: u64,
    pub successes: u64,
    #[serde(rename = "estimate")]
    pub point_estimate: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl EstimateReport {
    pub fn from_counts(plan: &SamplePlan, successes: u64, wall_time: Duration) -> Self {
        let trials = plan.trials;
        let point_estimate = successes as f64 / trials as f64;
        let (ci_low, ci_high) = wilson_interval(successes, trials, Z_95);
        Self {
            p: plan.p,
            trials,
            master_seed: plan.master_seed,
            successes,
            point_estimate,
            ci_low,
            ci_high,
            wall_time,
        }
    }

    /// Half-width of the 95% interval.
    pub fn half_width(&self) -> f64 {
        (self.ci_high - self.ci_low) / 2.0
    }
}

/// Wilson score interval for `successes / trials` at normal quantile `z`.
///
/// The result is clamped so that `0 ≤ low ≤ successes/trials ≤ high ≤ 1`.
pub fn wilson_interval(successes: u64, trials: u64, z: f64) -> (f64, f64) {
    assert!(trials > 0 && successes <= trials);
    let n = trials as f64;
    let phat = successes as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (phat + z2 / (2.0 * n)) / denom;
    let half = z * (phat * (1.0 - phat) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    let low = (center - half).clamp(0.0, phat);
    let high = (center + half).clamp(phat, 1.0);
    (low, high)
}

/// Whether `value` lies in the Wilson interval of `successes / trials` at
/// quantile `z`. Equivalent to the score test
/// `|p̂ - value| ≤ z·√(value(1-value)/trials)`.
pub fn within_wilson(value: f64, successes: u64, trials: u64, z: f64) -> bool {
    let (low, high) = wilson_interval(successes, trials, z);
    // Absorb rounding when the interval collapses onto 0 or 1.
    let slack = 1e-12;
    value >= low - slack && value <= high + slack
}

/// The RNG stream used by trial `trial` of a plan seeded with `master_seed`.
pub fn trial_rng(master_seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    rng.set_stream(trial);
    rng
}

/// Includes each vertex of `0..n` independently with probability `p`.
pub fn sample_subset<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<VertexSubset> {
    check_probability(p)?;
    let members = (0..n).filter(|_| rng.random_bool(p)).collect();
    VertexSubset::new(n, members)
}

/// `is_hamiltonian(T[S])`, with subsets of fewer than three vertices counted
/// as non-Hamiltonian.
pub fn subset_is_hamiltonian(t: &Tournament, s: &VertexSubset) -> bool {
    s.len() >= 3 && is_hamiltonian(&induced(t, s).expect("subset drawn from t"))
}

/// Runs `plan.trials()` independent trials on the current rayon pool.
pub fn estimate_hamiltonian_probability(t: &Tournament, plan: &SamplePlan) -> EstimateReport {
    let start = Instant::now();
    let n = t.order();
    let successes: u64 = (0..plan.trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = trial_rng(plan.master_seed, i);
            let s = sample_subset(n, plan.p, &mut rng).expect("plan validated p");
            u64::from(subset_is_hamiltonian(t, &s))
        })
        .sum();
    EstimateReport::from_counts(plan, successes, start.elapsed())
}

/// `counts[k]` = number of `k`-subsets `S` with `T[S]` Hamiltonian.
pub fn hamiltonian_subset_counts(t: &Tournament) -> Result<Vec<u64>> {
    let n = t.order();
    if n > EXACT_MAX {
        return Err(Error::TooLarge { n, max: EXACT_MAX });
    }
    let counts = (0u32..1 << n)
        .into_par_iter()
        .filter(|mask| mask.count_ones() >= 3)
        .fold(
            || vec![0u64; n + 1],
            |mut acc, mask| {
                let members = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                let s = VertexSubset::new(n, members).expect("mask within range");
                if subset_is_hamiltonian(t, &s) {
                    acc[mask.count_ones() as usize] += 1;
                }
                acc
            },
        )
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Ok(counts)
}

/// `Σ_S p^|S| (1-p)^(n-|S|) · [T[S] Hamiltonian]` by enumerating all `2ⁿ`
/// subsets. `p` may be any value in `[0, 1]`.
pub fn exact_hamiltonian_probability(t: &Tournament, p: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::BadParams(format!("probability {p} must lie in [0, 1]")));
    }
    let counts = hamiltonian_subset_counts(t)?;
    let n = t.order() as i32;
    Ok(counts
        .iter()
        .enumerate()
        .map(|(k, &c)| c as f64 * p.powi(k as i32) * (1.0 - p).powi(n - k as i32))
        .sum())
}

/// Probability that a uniformly random subset induces a Hamiltonian
/// subtournament.
pub fn uniform_subset_probability(t: &Tournament) -> Result<f64> {
    exact_hamiltonian_probability(t, 0.5)
}

/// The lower bound `1 - (1-p)^t`, or `1 - (1-p)^(t+1)` when
/// `n - t ≡ 1 (mod 4)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundSpec {
    pub n: usize,
    pub t: usize,
    pub p: f64,
    pub bound_value: f64,
    pub improved: bool,
}

pub fn theoretical_bound(n: usize, t: usize, p: f64) -> Result<BoundSpec> {
    check_probability(p)?;
    if t == 0 {
        return Err(Error::BadParams("t must be at least 1".into()));
    }
    let improved = (n as i64 - t as i64).rem_euclid(4) == 1;
    let exponent = if improved { t + 1 } else { t };
    Ok(BoundSpec {
        n,
        t,
        p,
        bound_value: 1.0 - (1.0 - p).powi(exponent as i32),
        improved,
    })
}
