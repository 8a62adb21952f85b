use num_bigint::RandBigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::divergence::ActualStats;
use super::TargetDistribution;
use crate::bits::BitVector;
use crate::codebook::CodebookSpec;
use crate::coder;
use crate::{Error, Result};

/// Sampling parameters.
///
/// Samples are split across `workers` independent ChaCha streams derived
/// from `seed` (stream `i` for worker `i`), so an estimate is reproducible
/// for a given `(samples, seed, workers)` triple regardless of how many
/// threads actually run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonteCarloConfig {
    pub samples: u64,
    pub seed: u64,
    pub workers: usize,
}

impl Default for MonteCarloConfig {
    fn default() -> Self {
        Self {
            samples: 100_000,
            seed: 0,
            workers: 4,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct McEstimate {
    pub divergence: f64,
    pub pc1: f64,
    /// Standard error of `divergence`.
    pub std_error: f64,
    pub histogram: Vec<u64>,
    pub config: MonteCarloConfig,
}

impl McEstimate {
    /// `std_error / divergence`, or 0 when both vanish.
    pub fn relative_std_error(&self) -> f64 {
        if self.std_error == 0.0 {
            0.0
        } else {
            self.std_error / self.divergence.abs()
        }
    }
}

fn worker_histogram(
    spec: &CodebookSpec,
    seed: u64,
    worker: usize,
    samples: u64,
) -> Result<Vec<u64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(worker as u64);
    let k = spec.input_len();
    let mut histogram = vec![0u64; spec.n() + 1];
    for _ in 0..samples {
        let value = rng.gen_biguint(k as u64);
        let u = BitVector::from_nbc(&value, k)?;
        histogram[coder::encode(spec, &u)?.weight()] += 1;
    }
    Ok(histogram)
}

/// Estimates the actual-codebook divergence and `P_C(1)` from uniformly
/// drawn inputs.
pub fn divergence_actual_mc(
    spec: &CodebookSpec,
    t: &TargetDistribution,
    config: &MonteCarloConfig,
) -> Result<McEstimate> {
    if config.samples == 0 {
        return Err(Error::InvalidParameter("samples must be at least 1".into()));
    }
    if config.workers == 0 {
        return Err(Error::InvalidParameter("workers must be at least 1".into()));
    }
    let workers = config.workers as u64;
    let parts = (0..config.workers)
        .into_par_iter()
        .map(|w| {
            let share = config.samples / workers + u64::from((w as u64) < config.samples % workers);
            worker_histogram(spec, config.seed, w, share)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut histogram = vec![0u64; spec.n() + 1];
    for part in parts {
        histogram.iter_mut().zip(part).for_each(|(a, b)| *a += b);
    }

    let n = spec.n() as f64;
    let k = spec.input_len() as f64;
    let stats = ActualStats::from_histogram(spec.n(), spec.input_len(), histogram, t);
    // per-sample divergence contribution (-k - log2 P_A^n(c)) / n
    let samples = config.samples as f64;
    let variance = if config.samples > 1 {
        stats
            .histogram
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(w, &c)| {
                let f = (-k - t.log2_word_prob(spec.n(), w)) / n;
                c as f64 * (f - stats.divergence).powi(2)
            })
            .sum::<f64>()
            / (samples - 1.0)
    } else {
        0.0
    };
    Ok(McEstimate {
        divergence: stats.divergence,
        pc1: stats.pc1,
        std_error: (variance / samples).sqrt(),
        histogram: stats.histogram,
        config: *config,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::divergence_actual_exact;

    fn t(p1: f64) -> TargetDistribution {
        TargetDistribution::new(p1).unwrap()
    }

    #[test]
    fn reproducible_for_fixed_seed_and_workers() {
        let spec = CodebookSpec::weight_range(40, 0, 18).unwrap();
        let config = MonteCarloConfig {
            samples: 2_000,
            seed: 11,
            workers: 3,
        };
        let a = divergence_actual_mc(&spec, &t(0.422), &config).unwrap();
        let b = divergence_actual_mc(&spec, &t(0.422), &config).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.histogram.iter().sum::<u64>(), 2_000);
        let other = divergence_actual_mc(&spec, &t(0.422), &MonteCarloConfig { seed: 12, ..config })
            .unwrap();
        assert_ne!(a.histogram, other.histogram);
    }

    #[test]
    fn constant_weight_has_zero_error() {
        let spec = CodebookSpec::constant_composition(4, 2).unwrap();
        let est = divergence_actual_mc(&spec, &t(0.5), &MonteCarloConfig::default()).unwrap();
        assert!((est.divergence - 0.5).abs() < 1e-12);
        assert_eq!(est.std_error, 0.0);
        assert_eq!(est.pc1, 0.5);
    }

    #[test]
    fn dyadic_codebook_agrees_with_exact() {
        // size 2^k: every codeword is used equally often
        let spec = CodebookSpec::weight_range(12, 0, 12).unwrap();
        let target = t(0.3);
        let exact = divergence_actual_exact(&spec, &target, 24).unwrap();
        let est = divergence_actual_mc(
            &spec,
            &target,
            &MonteCarloConfig {
                samples: 20_000,
                seed: 5,
                workers: 2,
            },
        )
        .unwrap();
        assert!((est.divergence - exact.divergence).abs() <= 4.0 * est.std_error);
    }

    #[test]
    fn rejects_empty_configs() {
        let spec = CodebookSpec::constant_composition(4, 2).unwrap();
        let zero = MonteCarloConfig {
            samples: 0,
            ..Default::default()
        };
        assert!(divergence_actual_mc(&spec, &t(0.5), &zero).is_err());
        let no_workers = MonteCarloConfig {
            workers: 0,
            ..Default::default()
        };
        assert!(divergence_actual_mc(&spec, &t(0.5), &no_workers).is_err());
    }

    #[test]
    fn zero_input_bits() {
        let spec = CodebookSpec::constant_composition(6, 0).unwrap();
        let est = divergence_actual_mc(
            &spec,
            &t(0.25),
            &MonteCarloConfig {
                samples: 10,
                seed: 1,
                workers: 1,
            },
        )
        .unwrap();
        assert_eq!(est.histogram[0], 10);
        assert_eq!(est.pc1, 0.0);
    }
}
