use num_bigint::BigUint;
use rayon::prelude::*;

use super::{binary_entropy, binary_kl, log2_big, ratio_f64, TargetDistribution};
use crate::bits::BitVector;
use crate::codebook::CodebookSpec;
use crate::coder;
use crate::combinatorics::{binomial, binomial_row};
use crate::{Error, Result};

/// Largest `k` for which [`divergence_actual_exact`] enumerates by default.
pub const DEFAULT_ENUMERATION_BUDGET: usize = 24;

/// Size and weight profile of a base codebook.
#[derive(Debug, Clone)]
pub(crate) struct Profile {
    pub log2_size: f64,
    pub input_len: usize,
    /// `-(1/M) sum_c log2 P_A^n(c)` over the base codebook.
    pub cross_entropy: f64,
}

impl Profile {
    /// `row` must be `C(n, .)` when given.
    pub fn new(n: usize, weights: &[usize], row: Option<&[BigUint]>, t: &TargetDistribution) -> Self {
        let counts: Vec<BigUint> = weights
            .iter()
            .map(|&m| match row {
                Some(row) => row[m].clone(),
                None => binomial(n, m as i64),
            })
            .collect();
        let size: BigUint = counts.iter().sum();
        let cross_entropy = weights
            .iter()
            .zip(&counts)
            .map(|(&m, count)| -ratio_f64(count, &size) * t.log2_word_prob(n, m))
            .sum();
        Self {
            log2_size: log2_big(&size),
            input_len: (size.bits() - 1) as usize,
            cross_entropy,
        }
    }

    pub fn of(spec: &CodebookSpec, t: &TargetDistribution) -> Self {
        let row = (spec.weights().len() > 1).then(|| binomial_row(spec.n()));
        Self::new(spec.n(), spec.weights().as_slice(), row.as_deref(), t)
    }

    /// `(1/n) D(U_base || P_A^n)`
    pub fn base_divergence(&self, n: usize) -> f64 {
        (self.cross_entropy - self.log2_size) / n as f64
    }

    /// Divergence of a uniform distribution over `2^k` words that follow the
    /// base weight profile.
    pub fn divergence_at_input_len(&self, n: usize) -> f64 {
        (self.cross_entropy - self.input_len as f64) / n as f64
    }
}

/// `(1/n) D(U_base || P_A^n)` in closed form:
/// `(1/n) [-log2 M - (1/M) sum_m C(n, m) (m log2 p1 + (n - m) log2 (1 - p1))]`.
///
/// Returns `f64::INFINITY` when the target gives some base codeword zero
/// probability.
pub fn divergence_base(spec: &CodebookSpec, t: &TargetDistribution) -> f64 {
    Profile::of(spec, t).base_divergence(spec.n())
}

/// `(1/n) [-k - (1/M) sum_c log2 P_A^n(c)]`: the divergence the matcher would
/// have if its `2^k` used codewords had the base codebook's weight profile.
/// This is the objective minimized by [`optimize_m`](super::optimize_m).
pub fn divergence_at_input_len(spec: &CodebookSpec, t: &TargetDistribution) -> f64 {
    Profile::of(spec, t).divergence_at_input_len(spec.n())
}

/// Exact statistics of the actual codebook, from encoding all `2^k` inputs.
#[derive(Debug, Clone, PartialEq)]
pub struct ActualStats {
    pub n: usize,
    pub input_len: usize,
    /// Number of used codewords of each weight `0..=n`.
    pub histogram: Vec<u64>,
    /// `(1/n) D(U_actual || P_A^n)` in bits per symbol.
    pub divergence: f64,
    /// Empirical `P_C(1)`.
    pub pc1: f64,
}

impl ActualStats {
    pub(crate) fn from_histogram(
        n: usize,
        input_len: usize,
        histogram: Vec<u64>,
        t: &TargetDistribution,
    ) -> Self {
        let total = histogram.iter().sum::<u64>() as f64;
        let mean_log_prob: f64 = histogram
            .iter()
            .enumerate()
            .filter(|(_, &count)| count > 0)
            .map(|(w, &count)| count as f64 / total * t.log2_word_prob(n, w))
            .sum();
        let ones: u64 = histogram.iter().enumerate().map(|(w, &c)| w as u64 * c).sum();
        Self {
            n,
            input_len,
            divergence: (-(input_len as f64) - mean_log_prob) / n as f64,
            pc1: ones as f64 / (n as f64 * total),
            histogram,
        }
    }

    /// Total number of ones over all used codewords.
    pub fn total_ones(&self) -> u64 {
        self.histogram.iter().enumerate().map(|(w, &c)| w as u64 * c).sum()
    }
}

/// Weight histogram of the actual codebook, encoding every input in parallel.
pub fn actual_weight_histogram(spec: &CodebookSpec, budget: usize) -> Result<Vec<u64>> {
    let k = spec.input_len();
    if k > budget || k > 62 {
        return Err(Error::EnumerationBudget { k, budget });
    }
    const CHUNK: u64 = 1 << 12;
    let total = 1u64 << k;
    let n = spec.n();
    let chunks = total.div_ceil(CHUNK);
    (0..chunks)
        .into_par_iter()
        .map(|chunk| -> Result<Vec<u64>> {
            let mut histogram = vec![0u64; n + 1];
            for v in chunk * CHUNK..((chunk + 1) * CHUNK).min(total) {
                let c = coder::encode(spec, &BitVector::from_u64(v, k))?;
                histogram[c.weight()] += 1;
            }
            Ok(histogram)
        })
        .try_reduce(
            || vec![0u64; n + 1],
            |mut acc, part| {
                acc.iter_mut().zip(part).for_each(|(a, b)| *a += b);
                Ok(acc)
            },
        )
}

/// Exact actual-codebook divergence and `P_C(1)` by encoding all `2^k`
/// inputs. Fails with [`Error::EnumerationBudget`] when `k > budget`.
pub fn divergence_actual_exact(
    spec: &CodebookSpec,
    t: &TargetDistribution,
    budget: usize,
) -> Result<ActualStats> {
    let histogram = actual_weight_histogram(spec, budget)?;
    Ok(ActualStats::from_histogram(
        spec.n(),
        spec.input_len(),
        histogram,
        t,
    ))
}

/// Both sides of
/// `(1/n) D(U_C || P_A^n) = H(P_C) - log2|C| / n + D(P_C || P_A)`
/// for the actual codebook.
#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition {
    pub lhs: f64,
    pub entropy: f64,
    pub log_size: f64,
    pub kl: f64,
}

impl Decomposition {
    pub fn rhs(&self) -> f64 {
        self.entropy - self.log_size + self.kl
    }

    /// `H(P_C) - log2|C| / n`, the per-symbol divergence from the i.i.d.
    /// product of the empirical distribution; never negative.
    pub fn gap(&self) -> f64 {
        self.entropy - self.log_size
    }
}

pub fn divergence_decomposition(
    spec: &CodebookSpec,
    t: &TargetDistribution,
    budget: usize,
) -> Result<Decomposition> {
    let stats = divergence_actual_exact(spec, t, budget)?;
    Ok(Decomposition {
        lhs: stats.divergence,
        entropy: binary_entropy(stats.pc1),
        log_size: stats.input_len as f64 / stats.n as f64,
        kl: binary_kl(stats.pc1, t.p1()),
    })
}
