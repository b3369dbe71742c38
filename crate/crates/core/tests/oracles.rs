//! Library results checked against independent brute-force recomputations.

mod common;

use common::{brute_force_matching, hamiltonian_by_permutations, reachability, tournament_from_mask};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tourneylab_core::generators::{
    extremal_main, extremal_theorem1_even, extremal_theorem1_odd, near_regular_tournament,
    random_tournament, rotational_tournament,
};
use tourneylab_core::sampling::{
    hamiltonian_subset_counts, uniform_subset_probability, SamplePlan,
};
use tourneylab_core::structure::{
    balanced_cut_exact, balanced_cut_heuristic, k_connectors, max_ba_matching, Partition,
};
use tourneylab_core::{
    brute_force_hamiltonian, estimate_hamiltonian_probability, exact_hamiltonian_probability,
    hamilton_cycle, induced, is_hamiltonian, scc, ExtremalSpec, Tournament, VertexSubset,
};

#[test]
fn scc_matches_mutual_reachability() {
    for seed in 0..200 {
        let n = 1 + (seed as usize % 40);
        let mut t = random_tournament(n, seed).unwrap();
        // Push some instances towards many components.
        if seed % 3 == 0 {
            let flips: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| !t.has_edge(i, j) && (i + j) % 2 == 0)
                .map(|(i, j)| (j, i))
                .collect();
            t = t.with_reversed(&flips).unwrap();
        }
        let reach = reachability(&t);
        let d = scc(&t);
        for u in 0..n {
            for v in 0..n {
                let same = reach[u][v] && reach[v][u];
                assert_eq!(same, d.component_of(u) == d.component_of(v), "seed {seed}");
                if d.component_of(u) < d.component_of(v) {
                    assert!(t.has_edge(u, v), "condensation not forward at seed {seed}");
                }
            }
        }
    }
}

#[test]
fn two_halves_form_two_components() {
    let t = extremal_theorem1_even(2).unwrap();
    let d = scc(&t);
    assert_eq!(d.component_count(), 2);
    assert_eq!(d.components()[0], (0..5).collect::<Vec<_>>());
    assert_eq!(d.components()[1], (5..10).collect::<Vec<_>>());
}

#[test]
fn held_karp_matches_permutation_search() {
    for n in 1..=5 {
        for mask in 0..1u64 << (n * (n - 1) / 2) {
            let t = tournament_from_mask(n, mask);
            assert_eq!(brute_force_hamiltonian(&t).unwrap(), hamiltonian_by_permutations(&t));
        }
    }
    for seed in 0..300 {
        let t = random_tournament(6 + seed as usize % 4, seed).unwrap();
        assert_eq!(brute_force_hamiltonian(&t).unwrap(), hamiltonian_by_permutations(&t));
    }
}

#[test]
fn random_tournaments_against_held_karp() {
    let mut hamiltonian = 0;
    for seed in 0..2000u64 {
        let n = 4 + seed as usize % 13;
        let t = random_tournament(n, seed).unwrap();
        let expected = brute_force_hamiltonian(&t).unwrap();
        assert_eq!(is_hamiltonian(&t), expected, "n={n} seed={seed}");
        match hamilton_cycle(&t) {
            Some(c) => {
                assert!(expected);
                assert!(tourneylab_core::check_cycle(&t, c.order()).is_ok());
                hamiltonian += 1;
            }
            None => assert!(!expected),
        }
    }
    assert!(hamiltonian > 500);
}

#[test]
fn n15_random_fraction_matches_oracle() {
    let mut agree = 0;
    for seed in 0..100 {
        let t = random_tournament(15, 10_000 + seed).unwrap();
        if is_hamiltonian(&t) == brute_force_hamiltonian(&t).unwrap() {
            agree += 1;
        }
    }
    assert_eq!(agree, 100);
}

#[test]
fn rotational_nine_has_certified_cycle() {
    let t = rotational_tournament(4).unwrap();
    let c = hamilton_cycle(&t).unwrap();
    let o = c.order();
    assert_eq!(o.len(), 9);
    for i in 0..9 {
        assert!(t.has_edge(o[i], o[(i + 1) % 9]));
    }
}

#[test]
fn induced_matches_pairwise_lookup() {
    let t = rotational_tournament(3).unwrap();
    let s = VertexSubset::new(7, vec![0, 1, 2, 3]).unwrap();
    let sub = induced(&t, &s).unwrap();
    for i in 0..4 {
        for j in 0..4 {
            assert_eq!(sub.has_edge(i, j), t.has_edge(i, j));
        }
    }
}

fn subset_of_mask(n: usize, mask: u32) -> VertexSubset {
    VertexSubset::new(n, (0..n).filter(|&v| mask >> v & 1 == 1).collect()).unwrap()
}

/// `P[T[S] Hamiltonian]` by listing every subset and testing it with the
/// permutation oracle.
fn exact_by_enumeration(t: &Tournament, p: f64) -> f64 {
    let n = t.order();
    (0u32..1 << n)
        .map(|mask| {
            let k = mask.count_ones() as i32;
            let s = subset_of_mask(n, mask);
            if s.len() >= 3 && hamiltonian_by_permutations(&induced(t, &s).unwrap()) {
                p.powi(k) * (1.0 - p).powi(n as i32 - k)
            } else {
                0.0
            }
        })
        .sum()
}

#[test]
fn exact_probability_matches_enumeration() {
    let t = extremal_theorem1_even(1).unwrap();
    let hamiltonian: u64 = hamiltonian_subset_counts(&t).unwrap().iter().sum();
    let direct = exact_by_enumeration(&t, 0.5);
    assert!((direct - hamiltonian as f64 / 64.0).abs() < 1e-12);
    assert!((exact_hamiltonian_probability(&t, 0.5).unwrap() - direct).abs() < 1e-12);

    for seed in 0..6 {
        let t = random_tournament(9, seed).unwrap();
        for p in [0.2, 0.5, 0.85] {
            let a = exact_hamiltonian_probability(&t, p).unwrap();
            let b = exact_by_enumeration(&t, p);
            assert!((a - b).abs() < 1e-12, "seed {seed} p {p}: {a} vs {b}");
        }
    }
}

#[test]
fn odd_construction_probability_near_half() {
    // n = 11 with apex v: T[S] is Hamiltonian only if v ∈ S, or if S lies in
    // one regular half.
    let t = extremal_theorem1_odd(2).unwrap();
    let value = exact_hamiltonian_probability(&t, 0.5).unwrap();
    let misses_a_or_b = 2.0 * 0.5f64.powi(5) - 0.5f64.powi(10);
    assert!(value > 0.45 && value < 0.55, "{value}");
    assert!(value <= 0.5 + misses_a_or_b, "{value}");
}

#[test]
fn near_regular_eleven_uniform_probability() {
    let value = uniform_subset_probability(&near_regular_tournament(11, None).unwrap()).unwrap();
    assert!(value >= 0.45, "{value}");
}

#[test]
fn monte_carlo_within_three_half_widths_of_exact() {
    let t = random_tournament(16, 77).unwrap();
    let exact = exact_hamiltonian_probability(&t, 0.4).unwrap();
    let report = estimate_hamiltonian_probability(&t, &SamplePlan::new(0.4, 100_000, 5).unwrap());
    assert!(
        (report.point_estimate - exact).abs() <= 3.0 * report.half_width(),
        "{} vs {exact}",
        report.point_estimate
    );
}

#[test]
fn exact_probability_increases_with_p_on_main_family() {
    for (n, t) in [(8, 1), (12, 2), (15, 3), (18, 5)] {
        let g = extremal_main(n, t, None).unwrap();
        let low = exact_hamiltonian_probability(&g, 0.4).unwrap();
        let high = exact_hamiltonian_probability(&g, 0.6).unwrap();
        assert!(high >= low, "n={n} t={t}: {low} > {high}");
    }
}

#[test]
fn main_family_needs_x_to_close_a_cycle() {
    let spec = ExtremalSpec::MainTightness {
        n: 40,
        t: 3,
        seed: None,
    };
    let t = spec.build().unwrap();
    let p = spec.partition().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    while checked < 100 {
        let s: Vec<usize> = (0..40).filter(|_| rng.random_bool(0.3)).collect();
        let hits = |part: &VertexSubset| s.iter().any(|&v| part.contains(v));
        if !hits(p.a()) || !hits(p.b()) {
            continue;
        }
        checked += 1;
        let meets_x = hits(p.x());
        let s = VertexSubset::new(40, s).unwrap();
        if is_hamiltonian(&induced(&t, &s).unwrap()) {
            assert!(meets_x);
        }
    }
}

#[test]
fn regular_tournament_has_no_almost_directed_cut() {
    let cut = balanced_cut_exact(&rotational_tournament(7).unwrap()).unwrap();
    assert!(cut.density < 0.9, "{}", cut.density);
}

#[test]
fn heuristic_cut_agrees_with_exact_on_small_instances() {
    for seed in 0..20 {
        let t = random_tournament(14, seed).unwrap();
        let exact = balanced_cut_exact(&t).unwrap();
        let heuristic = balanced_cut_heuristic(&t, 64).unwrap();
        assert_eq!(heuristic.forward_edges, exact.forward_edges, "seed {seed}");
    }
}

fn random_partition(n: usize, rng: &mut ChaCha8Rng) -> Partition {
    let (mut a, mut b, mut x) = (Vec::new(), Vec::new(), Vec::new());
    for v in 0..n {
        match rng.random_range(0..3) {
            0 => a.push(v),
            1 => b.push(v),
            _ => x.push(v),
        }
    }
    Partition::from_parts(n, a, b, x).unwrap()
}

#[test]
fn connectors_match_naive_recount() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for seed in 0..40 {
        let n = 5 + seed as usize % 20;
        let t = random_tournament(n, seed).unwrap();
        let p = random_partition(n, &mut rng);
        for k in 0..4 {
            let expected: Vec<usize> = (0..n)
                .filter(|&v| {
                    let out_a = p.a().members().iter().filter(|&&a| t.has_edge(v, a)).count();
                    let in_b = p.b().members().iter().filter(|&&b| t.has_edge(b, v)).count();
                    out_a >= k && in_b >= k
                })
                .collect();
            assert_eq!(k_connectors(&t, &p, k).members(), expected.as_slice());
        }
    }
}

#[test]
fn matching_matches_exhaustive_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for seed in 0..300 {
        let n = 2 + seed as usize % 13;
        let t = random_tournament(n, seed).unwrap();
        let p = random_partition(n, &mut rng);
        let adj: Vec<Vec<usize>> = p
            .b()
            .members()
            .iter()
            .map(|&b| (0..n).filter(|&a| p.a().contains(a) && t.has_edge(b, a)).collect())
            .collect();
        let mc = max_ba_matching(&t, &p);
        assert_eq!(mc.size(), brute_force_matching(&adj), "seed {seed}");
        assert!(mc.verify(&t, &p));
    }
}

#[test]
fn subset_sizes_follow_the_binomial() {
    use tourneylab_core::sampling::{sample_subset, trial_rng};
    let (n, p) = (10_000usize, 0.5);
    let sd = (n as f64 * p * (1.0 - p)).sqrt();
    let inside = (0..1000u64)
        .filter(|&i| {
            let s = sample_subset(n, p, &mut trial_rng(99, i)).unwrap();
            (s.len() as f64 - n as f64 * p).abs() <= 4.0 * sd
        })
        .count();
    assert!(inside >= 990, "{inside}");

    let (n, p) = (50usize, 0.3);
    let total: usize = (0..100_000u64)
        .map(|i| sample_subset(n, p, &mut trial_rng(7, i)).unwrap().len())
        .sum();
    let mean = total as f64 / 100_000.0;
    assert!((mean - n as f64 * p).abs() <= 0.01 * n as f64 * p, "{mean}");
}
