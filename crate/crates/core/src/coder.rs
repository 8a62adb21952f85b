//! Arithmetic-coding encoder and decoder over a base codebook.
//!
//! The unit interval is partitioned into one half-open subinterval per base
//! codeword, in lexicographic order, each of width `1 / size`. A data word
//! `u` of `k` bits is the point `NBC(u) / 2^k`; the encoder emits the codeword
//! whose interval contains that point and the decoder maps a codeword back to
//! the first point inside its interval.
//!
//! Interval endpoints are kept as integer numerators over the fixed
//! denominator `size`. With the equal-probability branching model
//! `P(b | s) = N(sb) / N(s)` the width numerator of prefix `s` is exactly
//! `N(s)`, so every update is an integer addition.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::bits::BitVector;
use crate::codebook::CodebookSpec;
use crate::combinatorics::PrefixCursor;
use crate::{Error, Result};

/// The interval `[start / denom, (start + width) / denom)` of the current
/// prefix.
#[derive(Debug, Clone)]
pub struct IntervalState {
    start: BigUint,
    denom: BigUint,
    cursor: PrefixCursor,
}

impl IntervalState {
    /// The whole unit interval, i.e. the empty prefix.
    pub fn new(spec: &CodebookSpec) -> Self {
        Self {
            start: BigUint::zero(),
            denom: spec.size().clone(),
            cursor: PrefixCursor::new(spec),
        }
    }

    /// Start numerator `x_num`.
    pub fn start(&self) -> &BigUint {
        &self.start
    }

    /// Width numerator `y_num`, equal to `N(s)`.
    pub fn width(&self) -> &BigUint {
        self.cursor.count()
    }

    /// Fixed denominator, the base codebook size.
    pub fn denom(&self) -> &BigUint {
        &self.denom
    }

    pub fn prefix_len(&self) -> usize {
        self.cursor.prefix_len()
    }

    pub fn prefix_ones(&self) -> usize {
        self.cursor.prefix_ones()
    }

    /// Width numerator of the zero child, `N(s0)`. `None` at full length.
    pub fn zero_width(&self) -> Option<&BigUint> {
        self.cursor.zero_count()
    }

    /// Appends `bit` to the prefix: a zero keeps the start and narrows to the
    /// lower part, a one moves the start past the zero child.
    pub fn step(&mut self, bit: bool) -> Result<()> {
        if bit {
            let zero = self
                .cursor
                .zero_count()
                .ok_or(Error::StepPastEnd {
                    n: self.cursor.prefix_len(),
                })?
                .clone();
            self.start += zero;
        }
        self.cursor.descend(bit)
    }
}

/// Maps `u` (exactly `k` bits) to the codeword whose interval contains
/// `NBC(u) / 2^k`.
pub fn encode(spec: &CodebookSpec, u: &BitVector) -> Result<BitVector> {
    let k = spec.input_len();
    if u.len() != k {
        return Err(Error::LengthMismatch {
            expected: k,
            actual: u.len(),
        });
    }
    // d(u) < (x + y0) / M  <=>  NBC(u) * M < (x + y0) * 2^k
    let point = u.nbc() * spec.size();
    let mut state = IntervalState::new(spec);
    let mut codeword = BitVector::with_capacity(spec.n());
    for _ in 0..spec.n() {
        let boundary = (state.start() + state.zero_width().expect("prefix shorter than n")) << k;
        let bit = point >= boundary;
        state.step(bit)?;
        codeword.push(bit);
    }
    debug_assert!(state.width().is_one());
    Ok(codeword)
}

/// Maps a codeword back to its data word, `NBC^-1(ceil(x * 2^k))`.
///
/// With `strict` set the result is re-encoded and rejected unless it
/// reproduces `c`; this catches base-codebook words the encoder never emits.
/// Without it, such words decode to the nearest data word above their
/// interval start, or fail if no such `k`-bit word exists.
pub fn decode(spec: &CodebookSpec, c: &BitVector, strict: bool) -> Result<BitVector> {
    if c.len() != spec.n() {
        return Err(Error::LengthMismatch {
            expected: spec.n(),
            actual: c.len(),
        });
    }
    let weight = c.weight();
    if !spec.weights().contains(weight) {
        return Err(Error::WeightNotInSet { weight });
    }
    let mut state = IntervalState::new(spec);
    for bit in c.iter() {
        state.step(bit)?;
    }
    let k = spec.input_len();
    let value = (state.start() << k).div_ceil(spec.size());
    if value.bits() > k as u64 {
        return Err(Error::UnusedCodeword);
    }
    let u = BitVector::from_nbc(&value, k)?;
    if strict && &encode(spec, &u)? != c {
        return Err(Error::UnusedCodeword);
    }
    Ok(u)
}
