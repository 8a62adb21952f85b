//! Rate, divergence and codebook-optimization analysis.
//!
//! All logarithms are base 2 and divergences are reported in bits per
//! output symbol.

mod divergence;
mod monte_carlo;
mod optimize;
mod sweep;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::codebook::{CodebookSpec, WeightSet};
use crate::{Error, Result};

pub use divergence::{
    actual_weight_histogram, divergence_actual_exact, divergence_base, divergence_decomposition,
    divergence_at_input_len, ActualStats, Decomposition, DEFAULT_ENUMERATION_BUDGET,
};
pub use monte_carlo::{divergence_actual_mc, McEstimate, MonteCarloConfig};
pub use optimize::{candidates, optimize_m, Candidate, Optimum};
pub use sweep::{analyze, sweep, AnalysisRow, Method, SweepConfig};

/// Binary target distribution given by `p1 = P(1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TargetDistribution {
    p1: f64,
}

impl TargetDistribution {
    pub fn new(p1: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p1) {
            return Err(Error::InvalidProbability(p1));
        }
        Ok(Self { p1 })
    }

    pub fn p1(&self) -> f64 {
        self.p1
    }

    pub fn p0(&self) -> f64 {
        1.0 - self.p1
    }

    /// The distribution with the roles of 0 and 1 swapped.
    pub fn complement(&self) -> Self {
        Self { p1: 1.0 - self.p1 }
    }

    pub fn entropy(&self) -> f64 {
        binary_entropy(self.p1)
    }

    /// `log2 P_A^n(c)` for any word of length `n` and weight `w`, with
    /// `0 log 0 = 0`. `-inf` if such a word has zero probability.
    pub fn log2_word_prob(&self, n: usize, w: usize) -> f64 {
        xlog2y(w as f64, self.p1) + xlog2y((n - w) as f64, self.p0())
    }
}

/// `x log2 y` with `0 log2 0 = 0`.
fn xlog2y(x: f64, y: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x * y.log2()
    }
}

/// Binary entropy in bits.
pub fn entropy(t: &TargetDistribution) -> f64 {
    t.entropy()
}

pub fn binary_entropy(p: f64) -> f64 {
    -xlog2y(p, p) - xlog2y(1.0 - p, 1.0 - p)
}

/// `D(Bern(p) || Bern(q))` in bits.
pub fn binary_kl(p: f64, q: f64) -> f64 {
    let term = |a: f64, b: f64| if a == 0.0 { 0.0 } else { a * (a / b).log2() };
    term(p, q) + term(1.0 - p, 1.0 - q)
}

fn top_bits(x: &BigUint) -> (f64, i64) {
    let shift = x.bits().saturating_sub(64);
    let mantissa = (x >> shift).to_u64().expect("at most 64 bits") as f64;
    (mantissa, shift as i64)
}

/// `log2 x` for a positive big integer.
pub fn log2_big(x: &BigUint) -> f64 {
    assert!(!x.is_zero(), "log2 of zero");
    let (mantissa, shift) = top_bits(x);
    mantissa.log2() + shift as f64
}

/// `num / den` as a float without overflowing on large operands.
pub fn ratio_f64(num: &BigUint, den: &BigUint) -> f64 {
    if num.is_zero() {
        return 0.0;
    }
    let (a, ea) = top_bits(num);
    let (b, eb) = top_bits(den);
    let exp = (ea - eb).clamp(-2000, 2000) as i32;
    (a / b) * 2f64.powi(exp)
}

/// Matcher family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DmKind {
    /// `m`-out-of-`n`, parameterized by `m`.
    ConstantComposition,
    /// `[m-1, m]`-out-of-`n`, parameterized by `m`.
    TwoComposition,
    /// `[0, m]`-out-of-`n`, parameterized by `m`.
    UpToWeight,
    /// Fixed `[low, high]`-out-of-`n`.
    Range { low: usize, high: usize },
    /// Fixed arbitrary weight set.
    Weights(WeightSet),
}

impl DmKind {
    /// Whether the family has a free parameter `m` to optimize.
    pub fn is_parameterized(&self) -> bool {
        matches!(
            self,
            Self::ConstantComposition | Self::TwoComposition | Self::UpToWeight
        )
    }

    /// Legal values of `m` for a parameterized family.
    pub fn m_values(&self, n: usize) -> std::ops::RangeInclusive<usize> {
        match self {
            Self::TwoComposition => 1..=n,
            _ => 0..=n,
        }
    }

    /// Codebook for parameter `m`; fixed families ignore `m`.
    pub fn build(&self, n: usize, m: usize) -> Result<CodebookSpec> {
        match self {
            Self::ConstantComposition => CodebookSpec::constant_composition(n, m),
            Self::TwoComposition => CodebookSpec::two_composition(n, m),
            Self::UpToWeight => CodebookSpec::weight_range(n, 0, m),
            Self::Range { low, high } => CodebookSpec::weight_range(n, *low, *high),
            Self::Weights(set) => CodebookSpec::new(n, set.clone()),
        }
    }

    /// Weight set for parameter `m`, without validation against `n`.
    pub(crate) fn weights_for(&self, m: usize) -> Vec<usize> {
        match self {
            Self::ConstantComposition => vec![m],
            Self::TwoComposition => vec![m - 1, m],
            Self::UpToWeight => (0..=m).collect(),
            Self::Range { low, high } => (*low..=*high).collect(),
            Self::Weights(set) => set.as_slice().to_vec(),
        }
    }
}

/// Short labels: `cc`, `2c`, `opt`, `range:a-b`, `set:a;b;c`.
impl fmt::Display for DmKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::ConstantComposition => f.write_str("cc"),
            Self::TwoComposition => f.write_str("2c"),
            Self::UpToWeight => f.write_str("opt"),
            Self::Range { low, high } => write!(f, "range:{low}-{high}"),
            Self::Weights(set) => {
                f.write_str("set:")?;
                let parts: Vec<String> = set.iter().map(|w| w.to_string()).collect();
                f.write_str(&parts.join(";"))
            }
        }
    }
}

impl FromStr for DmKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("unknown matcher kind {s:?}"));
        match s.trim().to_ascii_lowercase().as_str() {
            "cc" | "ccdm" => Ok(Self::ConstantComposition),
            "2c" | "2c-mcdm" => Ok(Self::TwoComposition),
            "opt" | "opt-mcdm" => Ok(Self::UpToWeight),
            other => {
                if let Some(range) = other.strip_prefix("range:") {
                    let (low, high) = range.split_once('-').ok_or_else(bad)?;
                    Ok(Self::Range {
                        low: low.parse().map_err(|_| bad())?,
                        high: high.parse().map_err(|_| bad())?,
                    })
                } else if let Some(list) = other.strip_prefix("set:") {
                    let weights = list
                        .split(';')
                        .map(|w| w.parse::<usize>().map_err(|_| bad()))
                        .collect::<Result<Vec<_>>>()?;
                    Ok(Self::Weights(WeightSet::new(weights)?))
                } else {
                    Err(bad())
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn entropy_examples() {
        let h = |p| TargetDistribution::new(p).unwrap().entropy();
        assert_eq!(h(0.5), 1.0);
        assert_eq!(h(0.0), 0.0);
        assert_eq!(h(1.0), 0.0);
        // -0.422 log2 0.422 - 0.578 log2 0.578
        assert!((h(0.422) - 0.982_373_382_542_262_5).abs() < 1e-12);
    }

    #[test]
    fn invalid_probability() {
        assert!(TargetDistribution::new(-0.1).is_err());
        assert!(TargetDistribution::new(1.5).is_err());
        assert!(TargetDistribution::new(f64::NAN).is_err());
    }

    #[test]
    fn word_probability_handles_degenerate_targets() {
        let zero = TargetDistribution::new(0.0).unwrap();
        assert_eq!(zero.log2_word_prob(5, 0), 0.0);
        assert_eq!(zero.log2_word_prob(5, 1), f64::NEG_INFINITY);
        let half = TargetDistribution::new(0.5).unwrap();
        assert_eq!(half.log2_word_prob(7, 3), -7.0);
    }

    #[test]
    fn big_float_helpers() {
        let big = BigUint::one() << 3000usize;
        assert_eq!(log2_big(&big), 3000.0);
        assert_eq!(ratio_f64(&(&big * 3u32), &(&big * 4u32)), 0.75);
        assert_eq!(ratio_f64(&BigUint::one(), &big), 0.0);
        assert_eq!(ratio_f64(&BigUint::from(6u32), &BigUint::from(8u32)), 0.75);
        assert!((log2_big(&BigUint::from(6u32)) - 6f64.log2()).abs() < 1e-15);
    }

    #[test]
    fn kl_and_entropy() {
        assert_eq!(binary_kl(0.3, 0.3), 0.0);
        assert!((binary_kl(0.5, 0.25) - (0.5 * 2f64.log2() + 0.5 * (0.5f64 / 0.75).log2())).abs() < 1e-15);
        assert_eq!(binary_kl(0.0, 0.5), 1.0);
    }

    #[test]
    fn kind_labels_round_trip() {
        for kind in [
            DmKind::ConstantComposition,
            DmKind::TwoComposition,
            DmKind::UpToWeight,
            DmKind::Range { low: 2, high: 5 },
            DmKind::Weights(WeightSet::new([1, 3]).unwrap()),
        ] {
            assert_eq!(kind.to_string().parse::<DmKind>().unwrap(), kind);
        }
        assert!("foo".parse::<DmKind>().is_err());
        assert!("range:3".parse::<DmKind>().is_err());
    }
}
