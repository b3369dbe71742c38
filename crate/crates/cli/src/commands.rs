use std::path::Path;

use tourneylab_core::sampling::{hamiltonian_subset_counts, EXACT_MAX};
use tourneylab_core::structure::{
    balanced_cut_search, clean_to_good_partition, default_connector_k, goodness, k_connectors,
    max_ba_matching, refine_partition, CutMethod,
};
use tourneylab_core::{
    check_cycle, estimate_hamiltonian_probability, exact_hamiltonian_probability,
    hamilton_cycle, parse_certificate, scc, semidegrees, theoretical_bound, SamplePlan,
    Tournament,
};

use crate::config::{read_tournament, ExperimentConfig, Source};
use crate::error::{CliError, CliResult};
use crate::report::{
    AnalyzeReport, Branch, CheckReport, ExactReport, ExactRow, StructureReport, SweepReport,
    SweepRow, VERSION,
};

/// Runs `f` on a dedicated pool of `threads` workers, or on the global pool.
pub fn with_threads<T: Send>(
    threads: Option<usize>,
    f: impl FnOnce() -> CliResult<T> + Send,
) -> CliResult<T> {
    match threads {
        None => f(),
        Some(0) => Err(CliError::Usage("thread count must be positive".into())),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::ThreadPool(e.to_string()))?
            .install(f),
    }
}

pub fn cmd_gen(source: &Source) -> CliResult<Tournament> {
    if let Source::File { .. } = source {
        return Err(CliError::Usage("gen needs a generated family".into()));
    }
    source.load()
}

pub fn cmd_estimate(config: &ExperimentConfig) -> CliResult<SweepReport> {
    config.validate()?;
    let t_param = config.resolved_t()?;
    let tournament = config.tournament.load()?;
    let n = tournament.order();
    let mut rows = Vec::with_capacity(config.p_values.len());
    for &p in &config.p_values {
        let plan = SamplePlan::new(p, config.trials, config.master_seed)?;
        let report = estimate_hamiltonian_probability(&tournament, &plan);
        let bound = theoretical_bound(n, t_param, p)?;
        let gap = report.point_estimate - bound.bound_value;
        rows.push(SweepRow { report, bound, gap });
    }
    Ok(SweepReport {
        version: VERSION,
        config: config.clone(),
        n,
        t: t_param,
        rows,
    })
}

pub fn cmd_exact(path: &Path, p_values: &[f64]) -> CliResult<ExactReport> {
    let t = read_tournament(path)?;
    if t.order() > EXACT_MAX {
        return Err(tourneylab_core::Error::TooLarge {
            n: t.order(),
            max: EXACT_MAX,
        }
        .into());
    }
    let rows = p_values
        .iter()
        .map(|&p| {
            Ok(ExactRow {
                p,
                probability: exact_hamiltonian_probability(&t, p)?,
            })
        })
        .collect::<CliResult<Vec<_>>>()?;
    Ok(ExactReport {
        version: VERSION,
        n: t.order(),
        hamiltonian_subsets_by_size: hamiltonian_subset_counts(&t)?,
        rows,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalyzeOptions {
    /// Density tolerance of the cut dichotomy.
    pub eps: f64,
    /// Connector threshold; `None` uses [`default_connector_k`].
    pub k: Option<usize>,
    pub t: usize,
    /// Sampling probability and failure budget for the default `k`.
    pub p: f64,
    pub sigma: f64,
    /// Random restarts of the cut heuristic.
    pub effort: usize,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        Self {
            eps: 0.05,
            k: None,
            t: 1,
            p: 0.5,
            sigma: 0.1,
            effort: 8,
        }
    }
}

pub fn cmd_analyze(path: &Path, opts: &AnalyzeOptions) -> CliResult<AnalyzeReport> {
    if !(opts.eps > 0.0 && opts.eps < 1.0) {
        return Err(CliError::Usage(format!("eps must lie in (0, 1), got {}", opts.eps)));
    }
    if opts.t == 0 {
        return Err(CliError::Usage("t must be at least 1".into()));
    }
    let t = read_tournament(path)?;
    analyze_tournament(&t, opts)
}

pub fn analyze_tournament(t: &Tournament, opts: &AnalyzeOptions) -> CliResult<AnalyzeReport> {
    let k = match opts.k {
        Some(k) => k,
        None => default_connector_k(opts.p, opts.t, opts.sigma)?,
    };
    let n = t.order();
    let cut = balanced_cut_search(t, opts.effort)?;
    let branch = if cut.density >= 1.0 - opts.eps {
        Branch::AlmostDirectedCut
    } else if cut.method == CutMethod::Exact {
        Branch::NoAlmostDirectedCut
    } else {
        Branch::Inconclusive
    };
    let structure = if branch == Branch::AlmostDirectedCut {
        let clean_eps = opts.eps.min(tourneylab_core::structure::MAX_CLEAN_EPS);
        let (a0, b0) = cut.sides(n)?;
        let cleaned = clean_to_good_partition(t, &a0, &b0, clean_eps)?;
        let refinement = refine_partition(t, &cleaned.partition, k, opts.t);
        let refined_goodness = goodness(t, &refinement.partition, cleaned.report.eps)?;
        let connectors = k_connectors(t, &refinement.partition, k).members().to_vec();
        let matching = max_ba_matching(t, &refinement.partition);
        Some(StructureReport {
            clean_eps,
            connector_count: connectors.len(),
            connectors,
            moved_to_x: refinement.moved,
            short_circuit: refinement.short_circuit,
            refined: refinement.partition,
            refined_goodness,
            matching,
            cleaned,
        })
    } else {
        None
    };
    Ok(AnalyzeReport {
        version: VERSION,
        n,
        eps: opts.eps,
        k,
        t: opts.t,
        min_semidegree: semidegrees(t).min_semidegree,
        branch,
        cut,
        structure,
    })
}

pub fn cmd_verify(tournament_path: &Path, certificate_path: &Path) -> CliResult<()> {
    let t = read_tournament(tournament_path)?;
    let text = std::fs::read_to_string(certificate_path)
        .map_err(|e| CliError::io(certificate_path, e))?;
    let order = parse_certificate(&text).map_err(|source| CliError::Parse {
        path: certificate_path.to_path_buf(),
        source,
    })?;
    check_cycle(&t, &order).map_err(CliError::Certificate)
}

pub fn cmd_check(path: &Path, want_cycle: bool) -> CliResult<CheckReport> {
    let t = read_tournament(path)?;
    Ok(check_tournament(&t, want_cycle))
}

pub fn check_tournament(t: &Tournament, want_cycle: bool) -> CheckReport {
    let components = scc(t).component_count();
    let cycle = if want_cycle {
        hamilton_cycle(t).map(|c| c.into_order())
    } else {
        None
    };
    CheckReport {
        n: t.order(),
        min_semidegree: semidegrees(t).min_semidegree,
        components,
        hamiltonian: tourneylab_core::is_hamiltonian(t),
        cycle,
    }
}
