//! Binary multi-composition base codebooks.
//!
//! For binary words a composition `[n - m, m]` is fixed by the Hamming weight
//! `m`, so a base codebook is described by its length `n` and a set of
//! allowed weights. The codebook contains *every* word of length `n` whose
//! weight is in the set.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::bits::BitVector;
use crate::combinatorics::{binomial_row, PrefixCountTable};
use crate::{Error, Result};

/// A non-empty, strictly increasing set of Hamming weights.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeightSet(Vec<usize>);

impl WeightSet {
    /// Builds a weight set, discarding duplicates.
    pub fn new<I: IntoIterator<Item = usize>>(weights: I) -> Result<Self> {
        let set: BTreeSet<usize> = weights.into_iter().collect();
        if set.is_empty() {
            return Err(Error::EmptyWeightSet);
        }
        Ok(Self(set.into_iter().collect()))
    }

    /// `{low, low + 1, ..., high}`
    pub fn range(low: usize, high: usize) -> Result<Self> {
        if low > high {
            return Err(Error::EmptyWeightSet);
        }
        Ok(Self((low..=high).collect()))
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn min(&self) -> usize {
        self.0[0]
    }

    pub fn max(&self) -> usize {
        self.0[self.0.len() - 1]
    }

    pub fn contains(&self, weight: usize) -> bool {
        self.0.binary_search(&weight).is_ok()
    }

    /// Maximal runs of consecutive weights as inclusive `(low, high)` pairs.
    pub fn runs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let mut i = 0;
        std::iter::from_fn(move || {
            let start = *self.0.get(i)?;
            let mut end = start;
            i += 1;
            while self.0.get(i) == Some(&(end + 1)) {
                end += 1;
                i += 1;
            }
            Some((start, end))
        })
    }
}

impl fmt::Debug for WeightSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.0).finish()
    }
}

impl fmt::Display for WeightSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

/// A base codebook: all length-`n` words with weight in `weights`.
///
/// Immutable after construction; the size and input length are computed once.
#[derive(Clone, PartialEq, Eq)]
pub struct CodebookSpec {
    n: usize,
    weights: WeightSet,
    size: BigUint,
    input_len: usize,
}

impl CodebookSpec {
    pub fn new(n: usize, weights: WeightSet) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroLength);
        }
        if weights.max() > n {
            return Err(Error::WeightOutOfRange {
                weight: weights.max(),
                n,
            });
        }
        let size: BigUint = if weights.len() == 1 {
            crate::combinatorics::binomial(n, weights.min() as i64)
        } else {
            let row = binomial_row(n);
            weights.iter().map(|m| &row[m]).sum()
        };
        debug_assert!(!size.is_zero());
        let input_len = (size.bits() - 1) as usize;
        Ok(Self {
            n,
            weights,
            size,
            input_len,
        })
    }

    /// `m`-out-of-`n`: the constant-composition codebook.
    pub fn constant_composition(n: usize, m: usize) -> Result<Self> {
        if m > n {
            return Err(Error::WeightOutOfRange { weight: m, n });
        }
        Self::new(n, WeightSet::new([m])?)
    }

    /// `[m-1, m]`-out-of-`n`: two adjacent compositions.
    pub fn two_composition(n: usize, m: usize) -> Result<Self> {
        if m == 0 || m > n {
            return Err(Error::InvalidRange {
                low: m.saturating_sub(1),
                high: m,
                n,
            });
        }
        Self::new(n, WeightSet::new([m - 1, m])?)
    }

    /// `[low, high]`-out-of-`n`. `weight_range(n, 0, m)` is the codebook of
    /// all words up to weight `m`.
    pub fn weight_range(n: usize, low: usize, high: usize) -> Result<Self> {
        if low > high || high > n {
            return Err(Error::InvalidRange { low, high, n });
        }
        Self::new(n, WeightSet::range(low, high)?)
    }

    /// Arbitrary weight set.
    pub fn from_weights<I: IntoIterator<Item = usize>>(n: usize, weights: I) -> Result<Self> {
        Self::new(n, WeightSet::new(weights)?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn weights(&self) -> &WeightSet {
        &self.weights
    }

    /// Number of codewords in the base codebook.
    pub fn size(&self) -> &BigUint {
        &self.size
    }

    /// `k = floor(log2 size)`, the number of data bits per codeword.
    pub fn input_len(&self) -> usize {
        self.input_len
    }

    /// Matching rate `k / n` in bits per symbol.
    pub fn rate(&self) -> f64 {
        self.input_len as f64 / self.n as f64
    }

    /// Whether `codeword` belongs to the base codebook.
    pub fn contains(&self, codeword: &BitVector) -> bool {
        codeword.len() == self.n && self.weights.contains(codeword.weight())
    }

    /// Codeword at position `index` in lexicographic order (`0 < 1`, first
    /// bit most significant).
    pub fn unrank(&self, index: &BigUint) -> Result<BitVector> {
        if index >= &self.size {
            return Err(Error::IndexOutOfRange {
                index: index.clone(),
                size: self.size.clone(),
            });
        }
        let mut table = PrefixCountTable::new(self);
        let mut rest = index.clone();
        let mut ones = 0;
        let mut word = BitVector::with_capacity(self.n);
        for len in 0..self.n {
            let zero = table.get(len + 1, ones)?;
            if &rest < zero {
                word.push(false);
            } else {
                rest -= zero;
                ones += 1;
                word.push(true);
            }
        }
        debug_assert!(rest.is_zero());
        Ok(word)
    }

    /// Lexicographic position of `codeword`; inverse of [`unrank`](Self::unrank).
    pub fn rank(&self, codeword: &BitVector) -> Result<BigUint> {
        if codeword.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                actual: codeword.len(),
            });
        }
        let weight = codeword.weight();
        if !self.weights.contains(weight) {
            return Err(Error::WeightNotInSet { weight });
        }
        let mut table = PrefixCountTable::new(self);
        let mut index = BigUint::zero();
        let mut ones = 0;
        for (len, bit) in codeword.iter().enumerate() {
            if bit {
                index += table.get(len + 1, ones)?;
                ones += 1;
            }
        }
        Ok(index)
    }

    /// `true` when every codeword is used, i.e. the size is a power of two.
    pub fn is_dyadic(&self) -> bool {
        (&self.size & (&self.size - BigUint::one())).is_zero()
    }
}

impl fmt::Debug for CodebookSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CodebookSpec")
            .field("n", &self.n)
            .field("weights", &self.weights)
            .field("size", &self.size)
            .field("k", &self.input_len)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::binomial;

    fn lex_enumeration(spec: &CodebookSpec) -> Vec<BitVector> {
        let n = spec.n();
        (0u64..1 << n)
            .map(|w| BitVector::from_u64(w, n))
            .filter(|c| spec.weights().contains(c.weight()))
            .collect()
    }

    #[test]
    fn constructor_examples() {
        let cc = CodebookSpec::constant_composition(4, 2).unwrap();
        assert_eq!((cc.size(), cc.input_len()), (&BigUint::from(6u32), 2));
        let single = CodebookSpec::constant_composition(4, 0).unwrap();
        assert_eq!((single.size(), single.input_len()), (&BigUint::one(), 0));
        assert_eq!(CodebookSpec::constant_composition(110, 46).unwrap().input_len(), 104);

        let two = CodebookSpec::two_composition(4, 2).unwrap();
        assert_eq!((two.size(), two.input_len()), (&BigUint::from(10u32), 3));
        let top = CodebookSpec::two_composition(4, 4).unwrap();
        assert_eq!(top.weights().as_slice(), &[3, 4]);
        assert_eq!(top.size(), &BigUint::from(5u32));
        let bottom = CodebookSpec::two_composition(4, 1).unwrap();
        assert_eq!(bottom.weights().as_slice(), &[0, 1]);
        assert_eq!(bottom.size(), &BigUint::from(5u32));

        let cube = CodebookSpec::weight_range(4, 0, 4).unwrap();
        assert_eq!((cube.size(), cube.input_len()), (&BigUint::from(16u32), 4));
        let low = CodebookSpec::weight_range(4, 0, 2).unwrap();
        assert_eq!((low.size(), low.input_len()), (&BigUint::from(11u32), 3));
        let mid = CodebookSpec::weight_range(4, 1, 3).unwrap();
        assert_eq!(mid.size(), &BigUint::from(14u32));

        let odd = CodebookSpec::from_weights(4, [1, 3]).unwrap();
        assert_eq!((odd.size(), odd.input_len()), (&BigUint::from(8u32), 3));
        assert_eq!(CodebookSpec::from_weights(4, [2]).unwrap(), cc);
        let ends = CodebookSpec::from_weights(6, [0, 6]).unwrap();
        assert_eq!((ends.size(), ends.input_len()), (&BigUint::from(2u32), 1));
        assert_eq!(
            CodebookSpec::from_weights(1, [0, 1]).unwrap().size(),
            &BigUint::from(2u32)
        );
    }

    #[test]
    fn constructor_errors() {
        assert!(CodebookSpec::constant_composition(4, 5).is_err());
        assert!(CodebookSpec::two_composition(4, 0).is_err());
        assert!(CodebookSpec::two_composition(4, 5).is_err());
        assert!(CodebookSpec::weight_range(4, 3, 2).is_err());
        assert!(CodebookSpec::weight_range(4, 0, 5).is_err());
        assert_eq!(
            CodebookSpec::from_weights(4, []),
            Err(Error::EmptyWeightSet)
        );
        assert!(CodebookSpec::from_weights(4, [1, 7]).is_err());
        assert_eq!(CodebookSpec::from_weights(0, [0]), Err(Error::ZeroLength));
    }

    #[test]
    fn weight_runs() {
        let set = WeightSet::new([7, 1, 2, 3, 5, 8, 3]).unwrap();
        assert_eq!(set.as_slice(), &[1, 2, 3, 5, 7, 8]);
        assert_eq!(set.runs().collect::<Vec<_>>(), vec![(1, 3), (5, 5), (7, 8)]);
        assert_eq!(set.to_string(), "1,2,3,5,7,8");
    }

    #[test]
    fn unrank_examples() {
        let cc = CodebookSpec::constant_composition(4, 2).unwrap();
        assert_eq!(cc.unrank(&0u32.into()).unwrap().to_string(), "0011");
        assert_eq!(cc.unrank(&5u32.into()).unwrap().to_string(), "1100");
        assert!(cc.unrank(&6u32.into()).is_err());
        let odd = CodebookSpec::from_weights(4, [1, 3]).unwrap();
        assert_eq!(odd.unrank(&3u32.into()).unwrap().to_string(), "0111");
    }

    #[test]
    fn rank_examples() {
        let cc = CodebookSpec::constant_composition(4, 2).unwrap();
        assert_eq!(cc.rank(&"1001".parse().unwrap()).unwrap(), 3u32.into());
        assert_eq!(cc.rank(&"0011".parse().unwrap()).unwrap(), 0u32.into());
        assert_eq!(
            cc.rank(&"0111".parse().unwrap()),
            Err(Error::WeightNotInSet { weight: 3 })
        );
        assert!(cc.rank(&"011".parse().unwrap()).is_err());
        let odd = CodebookSpec::from_weights(4, [1, 3]).unwrap();
        assert_eq!(odd.rank(&"1110".parse().unwrap()).unwrap(), 7u32.into());
    }

    #[test]
    fn rank_unrank_exhaustive_against_enumeration() {
        for n in 1..=12 {
            let specs = [
                CodebookSpec::constant_composition(n, n / 3).unwrap(),
                CodebookSpec::two_composition(n, n / 2 + 1).unwrap(),
                CodebookSpec::weight_range(n, 0, (2 * n) / 3).unwrap(),
                CodebookSpec::from_weights(n, (0..=n).filter(|w| w % 2 == 1 || *w == 0)).unwrap(),
            ];
            for spec in specs {
                let words = lex_enumeration(&spec);
                assert_eq!(BigUint::from(words.len()), *spec.size());
                for (i, word) in words.iter().enumerate() {
                    let index = BigUint::from(i);
                    assert_eq!(&spec.unrank(&index).unwrap(), word);
                    assert_eq!(spec.rank(word).unwrap(), index);
                }
            }
        }
    }

    #[test]
    fn unrank_is_strictly_monotone() {
        let spec = CodebookSpec::from_weights(16, [3, 8, 9, 15]).unwrap();
        let size = spec.size().clone();
        let mut prev: Option<BigUint> = None;
        let mut i = BigUint::zero();
        while i < size {
            let value = spec.unrank(&i).unwrap().nbc();
            assert!(spec.weights().contains(spec.unrank(&i).unwrap().weight()));
            if let Some(p) = &prev {
                assert!(p < &value);
            }
            prev = Some(value);
            i += 97u32;
        }
    }

    #[test]
    fn cc_size_is_binomial() {
        for n in 1..=60 {
            for m in 0..=n {
                assert_eq!(
                    CodebookSpec::constant_composition(n, m).unwrap().size(),
                    &binomial(n, m as i64)
                );
            }
        }
    }

    #[test]
    fn dyadic_detection() {
        assert!(CodebookSpec::weight_range(5, 0, 5).unwrap().is_dyadic());
        assert!(CodebookSpec::from_weights(4, [1, 3]).unwrap().is_dyadic());
        assert!(!CodebookSpec::constant_composition(4, 2).unwrap().is_dyadic());
    }
}
