//! Branching probabilities `P(1 | s)` as exact fractions.
//!
//! The coder only ever uses the generic count ratio `N(s1) / N(s)`. The
//! closed forms for the constant-composition, two-composition and
//! `[0, m]`-out-of-`n` families are provided as independent cross-checks.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::codebook::CodebookSpec;
use crate::combinatorics::{binomial, prefix_count};

/// Unreduced fraction `num / den` with `den > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fraction {
    pub num: BigUint,
    pub den: BigUint,
}

impl Fraction {
    pub fn new(num: impl Into<BigUint>, den: impl Into<BigUint>) -> Self {
        let den = den.into();
        assert!(!den.is_zero(), "zero denominator");
        Self {
            num: num.into(),
            den,
        }
    }

    /// Value equality by cross-multiplication.
    pub fn same_value(&self, other: &Fraction) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    pub fn to_f64(&self) -> f64 {
        crate::analysis::ratio_f64(&self.num, &self.den)
    }
}

fn reachable(spec: &CodebookSpec, len: usize, ones: usize) -> bool {
    len < spec.n()
        && ones <= len
        && prefix_count(spec, len, ones).is_ok_and(|count| !count.is_zero())
}

/// `N(s1) / N(s)` for any base codebook. `None` if the prefix is at full
/// length or has no extension in the codebook.
pub fn count_ratio(spec: &CodebookSpec, len: usize, ones: usize) -> Option<Fraction> {
    if !reachable(spec, len, ones) {
        return None;
    }
    let one = prefix_count(spec, len + 1, ones + 1).ok()?;
    let all = prefix_count(spec, len, ones).ok()?;
    Some(Fraction::new(one, all))
}

/// `(m - n1) / (n - l)` for the `m`-out-of-`n` codebook.
pub fn constant_composition(n: usize, m: usize, len: usize, ones: usize) -> Option<Fraction> {
    if len >= n || ones > m || m - ones > n - len {
        return None;
    }
    Some(Fraction::new((m - ones) as u64, (n - len) as u64))
}

/// `(m - n1) / (n - l + 1)` for the `[m-1, m]`-out-of-`n` codebook.
pub fn two_composition(n: usize, m: usize, len: usize, ones: usize) -> Option<Fraction> {
    // reachable iff some weight in {m-1, m} can still be completed
    if m == 0 || len >= n || ones > m || m - 1 > ones + (n - len) {
        return None;
    }
    Some(Fraction::new((m - ones) as u64, (n - len + 1) as u64))
}

/// `sum_i C(n-1-l, i-1-n1) / sum_i C(n-l, i-n1)`, `i = 0..=m`, for the
/// `[0, m]`-out-of-`n` codebook.
pub fn up_to_weight(n: usize, m: usize, len: usize, ones: usize) -> Option<Fraction> {
    if len >= n || ones > m {
        return None;
    }
    let o = ones as i64;
    let num: BigUint = (0..=m as i64)
        .map(|i| binomial(n - 1 - len, i - 1 - o))
        .sum();
    let den: BigUint = (0..=m as i64).map(|i| binomial(n - len, i - o)).sum();
    Some(Fraction::new(num, den))
}
