//! Bit-level distribution matching with multi-composition codebooks.
//!
//! A distribution matcher maps `k` uniform data bits onto a length-`n` binary
//! codeword whose symbol statistics approximate a target distribution. This
//! crate implements the arithmetic-coding matcher over *base codebooks* that
//! contain every binary word whose Hamming weight lies in a chosen weight set:
//!
//! - a single weight gives the classic constant-composition matcher,
//! - two adjacent weights `{m-1, m}` give the two-composition matcher,
//! - the range `{0, ..., m}` gives the near-optimal matcher.
//!
//! All interval arithmetic is carried out on exact big integers scaled by the
//! base codebook size, so encoding and decoding are bit-exact at any block
//! length.
//!
//! # Module overview
//!
//! - [`combinatorics`]: binomial coefficients and prefix counts `N(s)`.
//! - [`codebook`]: weight sets, codebook specifications and a lexicographic
//!   rank/unrank oracle.
//! - [`coder`]: the encoder and decoder driven by the interval recursion.
//! - [`branching`]: closed-form branching probabilities for the special
//!   codebook families, kept as cross-checks of the generic count ratio.
//! - [`analysis`]: entropy, divergences, Monte-Carlo estimation, weight
//!   optimization and parameter sweeps.
//!
//! # Example
//!
//! ```
//! use mcdm::{coder, BitVector, CodebookSpec};
//!
//! let spec = CodebookSpec::constant_composition(4, 2).unwrap();
//! assert_eq!(spec.input_len(), 2);
//!
//! let u: BitVector = "10".parse().unwrap();
//! let c = coder::encode(&spec, &u).unwrap();
//! assert_eq!(c.to_string(), "1001");
//! assert_eq!(coder::decode(&spec, &c, true).unwrap(), u);
//! ```

pub mod analysis;
pub mod bits;
pub mod branching;
pub mod codebook;
pub mod coder;
pub mod combinatorics;
mod error;

pub use bits::BitVector;
pub use codebook::{CodebookSpec, WeightSet};
pub use combinatorics::BigCount;
pub use error::{Error, Result};
