//! Fixed inputs shared by the benchmarks.

use tourneylab_core::generators::random_tournament;
use tourneylab_core::structure::Partition;
use tourneylab_core::{ExtremalSpec, Tournament};

pub const SEED: u64 = 0x5eed;

pub fn random(n: usize) -> Tournament {
    random_tournament(n, SEED).expect("valid order")
}

pub fn main_construction(n: usize, t: usize) -> (Tournament, Partition) {
    let spec = ExtremalSpec::MainTightness { n, t, seed: None };
    (
        spec.build().expect("valid parameters"),
        spec.partition().expect("valid parameters"),
    )
}

/// Random tournament with `A` and `B` the two halves of `0..n`.
pub fn halved(n: usize) -> (Tournament, Partition) {
    let t = random(n);
    let p = Partition::from_parts(n, (0..n / 2).collect(), (n / 2..n).collect(), Vec::new())
        .expect("halves partition");
    (t, p)
}
