use rayon::prelude::*;

use super::divergence::{divergence_actual_exact, divergence_base};
use super::monte_carlo::{divergence_actual_mc, MonteCarloConfig};
use super::optimize::optimize_m;
use super::{DmKind, TargetDistribution, DEFAULT_ENUMERATION_BUDGET};
use crate::codebook::CodebookSpec;
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Exact,
    MonteCarlo,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Exact => "exact",
            Self::MonteCarlo => "monte-carlo",
        }
    }
}

/// One `(n, kind)` point of a sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalysisRow {
    pub n: usize,
    pub kind: DmKind,
    /// `None` for fixed families.
    pub m_star: Option<usize>,
    pub k: usize,
    pub div_base: f64,
    pub div_actual: f64,
    pub pc1: f64,
    pub method: Method,
    /// Inputs encoded: `2^k` when exact.
    pub samples: u64,
    /// Only for Monte-Carlo rows.
    pub seed: Option<u64>,
    pub workers: usize,
    /// Standard error of `div_actual`; zero for exact rows.
    pub std_error: f64,
}

impl AnalysisRow {
    /// Matching rate `k / n`.
    pub fn rate(&self) -> f64 {
        self.k as f64 / self.n as f64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    /// Rows with `k` up to this value are enumerated exactly.
    pub enumeration_budget: usize,
    pub monte_carlo: MonteCarloConfig,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            enumeration_budget: DEFAULT_ENUMERATION_BUDGET,
            monte_carlo: MonteCarloConfig::default(),
        }
    }
}

/// Builds the codebook for `kind` at length `n` (optimizing `m` when the
/// family has a parameter) and evaluates it.
pub fn analyze(
    kind: &DmKind,
    n: usize,
    t: &TargetDistribution,
    config: &SweepConfig,
) -> Result<AnalysisRow> {
    let (m_star, spec) = if kind.is_parameterized() {
        let opt = optimize_m(kind, n, t)?;
        (Some(opt.m_star), opt.spec)
    } else {
        (None, kind.build(n, 0)?)
    };
    evaluate(kind.clone(), m_star, &spec, t, config)
}

fn evaluate(
    kind: DmKind,
    m_star: Option<usize>,
    spec: &CodebookSpec,
    t: &TargetDistribution,
    config: &SweepConfig,
) -> Result<AnalysisRow> {
    let k = spec.input_len();
    let div_base = divergence_base(spec, t);
    let row = if k <= config.enumeration_budget {
        let stats = divergence_actual_exact(spec, t, config.enumeration_budget)?;
        AnalysisRow {
            n: spec.n(),
            kind,
            m_star,
            k,
            div_base,
            div_actual: stats.divergence,
            pc1: stats.pc1,
            method: Method::Exact,
            samples: 1u64 << k,
            seed: None,
            workers: config.monte_carlo.workers,
            std_error: 0.0,
        }
    } else {
        let est = divergence_actual_mc(spec, t, &config.monte_carlo)?;
        AnalysisRow {
            n: spec.n(),
            kind,
            m_star,
            k,
            div_base,
            div_actual: est.divergence,
            pc1: est.pc1,
            method: Method::MonteCarlo,
            samples: config.monte_carlo.samples,
            seed: Some(config.monte_carlo.seed),
            workers: config.monte_carlo.workers,
            std_error: est.std_error,
        }
    };
    Ok(row)
}

/// Rows for every `(n, kind)` pair, ordered by `n` then by `kinds`.
pub fn sweep(
    kinds: &[DmKind],
    n_values: &[usize],
    t: &TargetDistribution,
    config: &SweepConfig,
) -> Result<Vec<AnalysisRow>> {
    let jobs: Vec<(usize, &DmKind)> = n_values
        .iter()
        .flat_map(|&n| kinds.iter().map(move |kind| (n, kind)))
        .collect();
    jobs.into_par_iter()
        .map(|(n, kind)| analyze(kind, n, t, config))
        .collect()
}
