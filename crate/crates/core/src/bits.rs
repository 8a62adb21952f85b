//! Ordered bit sequences used for data words and codewords.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::{Error, Result};

/// An ordered bit sequence. Index 0 is the first (most significant) bit.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector(Vec<bool>);

impl BitVector {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    pub fn with_capacity(len: usize) -> Self {
        Self(Vec::with_capacity(len))
    }

    pub fn zeros(len: usize) -> Self {
        Self(vec![false; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, bit: bool) {
        self.0.push(bit);
    }

    pub fn get(&self, index: usize) -> Option<bool> {
        self.0.get(index).copied()
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.0
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = bool> + '_ {
        self.0.iter().copied()
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    /// Natural binary code value, first bit most significant.
    pub fn nbc(&self) -> BigUint {
        let mut value = BigUint::zero();
        for (i, bit) in self.0.iter().rev().enumerate() {
            if *bit {
                value.set_bit(i as u64, true);
            }
        }
        value
    }

    /// Inverse of [`nbc`](Self::nbc) for a fixed length.
    pub fn from_nbc(value: &BigUint, len: usize) -> Result<Self> {
        if value.bits() > len as u64 {
            return Err(Error::ValueTooWide { len });
        }
        Ok(Self(
            (0..len).map(|i| value.bit((len - 1 - i) as u64)).collect(),
        ))
    }

    /// Low `len` bits of `value`, most significant first.
    pub fn from_u64(value: u64, len: usize) -> Self {
        debug_assert!(len <= 64);
        Self((0..len).map(|i| (value >> (len - 1 - i)) & 1 == 1).collect())
    }
}

impl From<Vec<bool>> for BitVector {
    fn from(bits: Vec<bool>) -> Self {
        Self(bits)
    }
}

impl From<BitVector> for Vec<bool> {
    fn from(bits: BitVector) -> Self {
        bits.0
    }
}

impl FromIterator<bool> for BitVector {
    fn from_iter<I: IntoIterator<Item = bool>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl FromStr for BitVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|ch| match ch {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::InvalidBitChar(other)),
            })
            .collect()
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for bit in &self.0 {
            f.write_str(if *bit { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let v: BitVector = "01101".parse().unwrap();
        assert_eq!(v.len(), 5);
        assert_eq!(v.weight(), 3);
        assert_eq!(v.to_string(), "01101");
        assert!("012".parse::<BitVector>().is_err());
        assert!("".parse::<BitVector>().unwrap().is_empty());
    }

    #[test]
    fn nbc_first_bit_most_significant() {
        let v: BitVector = "110".parse().unwrap();
        assert_eq!(v.nbc(), BigUint::from(6u32));
        assert_eq!(BitVector::from_nbc(&BigUint::from(6u32), 3).unwrap(), v);
        assert_eq!(
            BitVector::from_nbc(&BigUint::from(1u32), 4).unwrap().to_string(),
            "0001"
        );
        assert!(BitVector::from_nbc(&BigUint::from(8u32), 3).is_err());
        assert!(BitVector::from_nbc(&BigUint::zero(), 0).unwrap().is_empty());
    }

    #[test]
    fn from_u64_matches_from_nbc() {
        for v in 0..64u64 {
            assert_eq!(
                BitVector::from_u64(v, 6),
                BitVector::from_nbc(&BigUint::from(v), 6).unwrap()
            );
        }
    }
}
