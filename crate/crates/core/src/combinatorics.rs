//! Exact counting primitives.
//!
//! Everything here works on arbitrary-precision integers. Binomial
//! coefficients follow the zero convention: `C(n, r) = 0` for `r < 0` or
//! `r > n`, so sums over weight sets never need range guards.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::codebook::CodebookSpec;
use crate::{Error, Result};

/// Arbitrary-precision non-negative count.
pub type BigCount = BigUint;

/// `C(n, r)`, zero outside `0 <= r <= n`.
pub fn binomial(n: usize, r: i64) -> BigUint {
    if r < 0 || r as u64 > n as u64 {
        return BigUint::zero();
    }
    let r = (r as usize).min(n - r as usize);
    let mut acc = BigUint::one();
    for i in 0..r {
        // acc = C(n, i) here; C(n, i) * (n - i) is divisible by i + 1
        acc *= (n - i) as u64;
        acc /= (i + 1) as u64;
    }
    acc
}

/// The full row `C(n, 0), ..., C(n, n)`.
pub fn binomial_row(n: usize) -> Vec<BigUint> {
    let mut row = Vec::with_capacity(n + 1);
    let mut acc = BigUint::one();
    row.push(acc.clone());
    for j in 0..n {
        acc *= (n - j) as u64;
        acc /= (j + 1) as u64;
        row.push(acc.clone());
    }
    row
}

/// Number of codewords in the base codebook of `spec` whose first
/// `prefix_len` bits contain `prefix_ones` ones.
///
/// Evaluated directly as a sum of binomials; see [`PrefixCountTable`] for a
/// memoized variant and [`PrefixCursor`] for incremental evaluation along a
/// single path.
pub fn prefix_count(spec: &CodebookSpec, prefix_len: usize, prefix_ones: usize) -> Result<BigUint> {
    check_prefix(spec.n(), prefix_len, prefix_ones)?;
    let rest = spec.n() - prefix_len;
    Ok(spec
        .weights()
        .iter()
        .map(|m| binomial(rest, m as i64 - prefix_ones as i64))
        .sum())
}

fn check_prefix(n: usize, len: usize, ones: usize) -> Result<()> {
    if ones > len || len > n {
        return Err(Error::PrefixOutOfRange { len, ones, n });
    }
    Ok(())
}

/// Lazily filled look-up table of prefix counts.
///
/// `N(s)` depends only on the prefix length and its number of ones, so the
/// table has at most `(n + 1)(n + 2) / 2` entries. Entries are computed on
/// first use and owned by this instance.
#[derive(Debug, Clone)]
pub struct PrefixCountTable<'a> {
    spec: &'a CodebookSpec,
    cache: HashMap<(usize, usize), BigUint>,
}

impl<'a> PrefixCountTable<'a> {
    pub fn new(spec: &'a CodebookSpec) -> Self {
        Self {
            spec,
            cache: HashMap::new(),
        }
    }

    pub fn spec(&self) -> &'a CodebookSpec {
        self.spec
    }

    pub fn get(&mut self, prefix_len: usize, prefix_ones: usize) -> Result<&BigUint> {
        check_prefix(self.spec.n(), prefix_len, prefix_ones)?;
        let spec = self.spec;
        Ok(self
            .cache
            .entry((prefix_len, prefix_ones))
            .or_insert_with(|| {
                prefix_count(spec, prefix_len, prefix_ones).expect("range checked above")
            }))
    }

    pub fn len(&self) -> usize {
        self.cache.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cache.is_empty()
    }
}

/// Boundary binomials of one maximal run `[low, high]` of the weight set,
/// relative to the cursor's current prefix (`r` bits remaining, `o` ones).
#[derive(Debug, Clone)]
struct RunEdge {
    low: usize,
    high: usize,
    /// `C(r, high - o)`
    upper: BigUint,
    /// `C(r, low - o - 1)`
    lower: BigUint,
}

#[derive(Debug, Clone)]
struct NextRow {
    zero_count: BigUint,
    one_count: BigUint,
    /// `(C(r - 1, high - o), C(r - 1, low - o - 1))` for every run
    edges: Vec<(BigUint, BigUint)>,
}

/// Walks one root-to-leaf path of the codebook tree, maintaining `N(s)` and
/// the two child counts `N(s0)`, `N(s1)` with `O(runs)` big-integer
/// operations per step, where `runs` is the number of maximal runs of
/// consecutive weights in the weight set.
///
/// For a run `[a, b]` of weights the contribution to `N(s)` is the partial
/// binomial row sum `F(r, a - o, b - o)`. Pascal's rule gives
/// `F(r, a, b) = 2 F(r-1, a, b) - C(r-1, b) + C(r-1, a-1)`, so the zero child
/// only needs the two boundary binomials of each run and the one child
/// follows from `N(s1) = N(s) - N(s0)`.
#[derive(Debug, Clone)]
pub struct PrefixCursor {
    n: usize,
    len: usize,
    ones: usize,
    count: BigUint,
    edges: Vec<RunEdge>,
    next: Option<NextRow>,
}

impl PrefixCursor {
    /// Cursor at the empty prefix.
    pub fn new(spec: &CodebookSpec) -> Self {
        let n = spec.n();
        let row = binomial_row(n);
        let at = |j: i64| -> BigUint {
            if j < 0 || j as usize > n {
                BigUint::zero()
            } else {
                row[j as usize].clone()
            }
        };
        let edges: Vec<RunEdge> = spec
            .weights()
            .runs()
            .map(|(low, high)| RunEdge {
                low,
                high,
                upper: at(high as i64),
                lower: at(low as i64 - 1),
            })
            .collect();
        let mut cursor = Self {
            n,
            len: 0,
            ones: 0,
            count: spec.size().clone(),
            edges,
            next: None,
        };
        cursor.refresh();
        cursor
    }

    pub fn prefix_len(&self) -> usize {
        self.len
    }

    pub fn prefix_ones(&self) -> usize {
        self.ones
    }

    /// `N(s)` for the current prefix.
    pub fn count(&self) -> &BigUint {
        &self.count
    }

    /// `N(s0)`, or `None` at full length.
    pub fn zero_count(&self) -> Option<&BigUint> {
        self.next.as_ref().map(|next| &next.zero_count)
    }

    /// `N(s1)`, or `None` at full length.
    pub fn one_count(&self) -> Option<&BigUint> {
        self.next.as_ref().map(|next| &next.one_count)
    }

    /// Extends the prefix by one bit.
    pub fn descend(&mut self, bit: bool) -> Result<()> {
        let next = self.next.take().ok_or(Error::StepPastEnd { n: self.n })?;
        if bit {
            for (edge, (upper, lower)) in self.edges.iter_mut().zip(next.edges) {
                // C(r-1, j-1) = C(r, j) - C(r-1, j)
                edge.upper -= upper;
                edge.lower -= lower;
            }
            self.count = next.one_count;
            self.ones += 1;
        } else {
            for (edge, (upper, lower)) in self.edges.iter_mut().zip(next.edges) {
                edge.upper = upper;
                edge.lower = lower;
            }
            self.count = next.zero_count;
        }
        self.len += 1;
        self.refresh();
        Ok(())
    }

    fn refresh(&mut self) {
        if self.len == self.n {
            self.next = None;
            return;
        }
        let r = (self.n - self.len) as i64;
        let o = self.ones as i64;
        // C(r-1, d) from C(r, d)
        let shrink = |value: &BigUint, d: i64| -> BigUint {
            if d < 0 || d >= r || value.is_zero() {
                BigUint::zero()
            } else {
                value * (r - d) as u64 / r as u64
            }
        };
        let mut plus = self.count.clone();
        let mut minus = BigUint::zero();
        let edges: Vec<(BigUint, BigUint)> = self
            .edges
            .iter()
            .map(|edge| {
                let upper = shrink(&edge.upper, edge.high as i64 - o);
                let lower = shrink(&edge.lower, edge.low as i64 - o - 1);
                plus += &upper;
                minus += &lower;
                (upper, lower)
            })
            .collect();
        let twice = plus - minus;
        debug_assert!(!twice.bit(0));
        let zero_count = twice >> 1usize;
        let one_count = &self.count - &zero_count;
        self.next = Some(NextRow {
            zero_count,
            one_count,
            edges,
        });
    }
}
