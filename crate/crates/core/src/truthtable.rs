//! Truth tables in reverse-colex input order, minimal-term sets, and the
//! packed 32-bit interchange form.
//!
//! A table over `n` variables has `2^n` positions. Position `j` holds the
//! output for the input in which variable `i` is true exactly when bit
//! `i - 1` of `j` is zero, so for three variables the positions run over
//! `{1,2,3}, {2,3}, {1,3}, {3}, {1,2}, {2}, {1}, {}`.

use std::fmt;

use crate::bits;
use crate::error::{Error, Result};

/// Largest variable count a [`TruthTable`] can hold.
pub const MAX_VARS: usize = 10;

/// Width of one packed word.
pub const WORD_BITS: usize = 32;

/// The input set stored at `position` of an `n`-variable table.
#[inline]
pub fn position_to_input(n: usize, position: usize) -> u32 {
    (!position as u32) & input_mask(n)
}

/// The position at which the input set `input` is stored.
#[inline]
pub fn input_to_position(n: usize, input: u32) -> usize {
    (!input & input_mask(n)) as usize
}

#[inline]
fn input_mask(n: usize) -> u32 {
    ((1u64 << n) - 1) as u32
}

fn check_n(n: usize) -> Result<()> {
    if n > MAX_VARS {
        return Err(Error::VariableCount { n, max: MAX_VARS });
    }
    Ok(())
}

/// Number of packed words for an `n`-variable table.
pub fn packed_len(n: usize) -> usize {
    ((1usize << n) / WORD_BITS).max(1)
}

/// Output vector of a Boolean function on up to [`MAX_VARS`] variables.
///
/// Internally bit `m` of the backing words is the value on input set `m`;
/// unused high bits are always zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    n: u8,
    words: Vec<u64>,
}

impl TruthTable {
    pub fn zeros(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(TruthTable {
            n: n as u8,
            words: vec![0; (1usize << n).div_ceil(64)],
        })
    }

    pub fn ones(n: usize) -> Result<Self> {
        Self::from_fn(n, |_| true)
    }

    /// Builds a table from its value on every input set.
    pub fn from_fn(n: usize, mut f: impl FnMut(u32) -> bool) -> Result<Self> {
        let mut t = Self::zeros(n)?;
        for m in 0..(1u32 << n) {
            if f(m) {
                t.set_value(m, true);
            }
        }
        Ok(t)
    }

    /// Parses a `0`/`1` string written position 0 first, e.g. `"11101010"`.
    pub fn from_bit_string(s: &str) -> Result<Self> {
        let len = s.len();
        if !len.is_power_of_two() {
            return Err(Error::OutOfRange(format!(
                "bit string length {len} is not a power of two"
            )));
        }
        let n = len.trailing_zeros() as usize;
        let mut t = Self::zeros(n)?;
        for (j, c) in s.bytes().enumerate() {
            match c {
                b'1' => t.set_value(position_to_input(n, j), true),
                b'0' => {}
                _ => {
                    return Err(Error::OutOfRange(format!(
                        "unexpected character {:?} in bit string",
                        c as char
                    )))
                }
            }
        }
        Ok(t)
    }

    pub fn to_bit_string(&self) -> String {
        (0..self.len())
            .map(|j| if self.get(j) { '1' } else { '0' })
            .collect()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Number of positions, `2^n`.
    #[inline]
    pub fn len(&self) -> usize {
        1 << self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Output at table position `position`.
    #[inline]
    pub fn get(&self, position: usize) -> bool {
        self.value(position_to_input(self.n(), position))
    }

    /// Output on the input whose true variables form the bitmask `input`.
    #[inline]
    pub fn value(&self, input: u32) -> bool {
        let m = input as usize;
        (self.words[m / 64] >> (m % 64)) & 1 == 1
    }

    #[inline]
    pub fn set_value(&mut self, input: u32, v: bool) {
        let m = input as usize;
        if v {
            self.words[m / 64] |= 1 << (m % 64);
        } else {
            self.words[m / 64] &= !(1 << (m % 64));
        }
    }

    pub fn count_ones(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    /// True iff adding a variable to a true input never yields a false one.
    pub fn is_monotone(&self) -> bool {
        let n = self.n();
        (0..1u32 << n).all(|m| {
            !self.value(m) || (0..n).all(|i| m & (1 << i) != 0 || self.value(m | (1 << i)))
        })
    }

    pub fn to_minimal_terms(&self) -> Result<MinimalTermSet> {
        if !self.is_monotone() {
            return Err(Error::NotMonotone);
        }
        let n = self.n();
        let terms = (0..1u32 << n)
            .filter(|&m| {
                self.value(m) && (0..n).all(|i| m & (1 << i) == 0 || !self.value(m & !(1 << i)))
            })
            .collect();
        Ok(MinimalTermSet { n: self.n, terms })
    }

    pub fn from_minimal_terms(terms: &MinimalTermSet) -> Result<Self> {
        terms.validate()?;
        Self::from_fn(terms.n(), |m| terms.terms.iter().any(|&t| t & m == t))
    }

    /// Packs into 32-bit words: word `w` is `Σ_k a_{32w+k} 2^k` where `a_j`
    /// is the output at position `j`; tables shorter than 32 positions are
    /// zero-padded.
    pub fn pack(&self) -> Vec<u32> {
        let mut out = vec![0u32; packed_len(self.n())];
        for j in 0..self.len() {
            if self.get(j) {
                out[j / WORD_BITS] |= 1 << (j % WORD_BITS);
            }
        }
        out
    }

    pub fn unpack(words: &[u32], n: usize) -> Result<Self> {
        check_n(n)?;
        let expected = packed_len(n);
        if words.len() != expected {
            return Err(Error::WordCount {
                expected,
                found: words.len(),
            });
        }
        let len = 1usize << n;
        if len < WORD_BITS && words[0] >> len != 0 {
            return Err(Error::Padding);
        }
        let mut t = Self::zeros(n)?;
        for j in 0..len {
            if (words[j / WORD_BITS] >> (j % WORD_BITS)) & 1 == 1 {
                t.set_value(position_to_input(n, j), true);
            }
        }
        Ok(t)
    }

    /// The table as a single `u128` in the layout used by [`crate::bits`].
    pub(crate) fn to_compact(&self) -> Result<u128> {
        if self.n() > bits::MAX_COMPACT_VARS {
            return Err(Error::VariableCount {
                n: self.n(),
                max: bits::MAX_COMPACT_VARS,
            });
        }
        let lo = self.words[0] as u128;
        let hi = self.words.get(1).copied().unwrap_or(0) as u128;
        Ok(lo | (hi << 64))
    }

    pub(crate) fn from_compact(bits: u128, n: usize) -> Self {
        debug_assert!(n <= crate::bits::MAX_COMPACT_VARS);
        let mut words = vec![bits as u64];
        if n == 7 {
            words.push((bits >> 64) as u64);
        }
        TruthTable { n: n as u8, words }
    }
}

impl fmt::Display for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bit_string())
    }
}

impl fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruthTable(n={}, {})", self.n, self.to_bit_string())
    }
}

/// An antichain of variable subsets: the minimal true inputs of a monotone
/// function. Terms are bitmasks (variable `i` is bit `i - 1`), kept sorted.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MinimalTermSet {
    n: u8,
    terms: Vec<u32>,
}

impl MinimalTermSet {
    pub fn new(n: usize, mut terms: Vec<u32>) -> Result<Self> {
        check_n(n)?;
        terms.sort_unstable();
        let set = MinimalTermSet { n: n as u8, terms };
        set.validate()?;
        Ok(set)
    }

    /// Builds from 1-based variable lists, e.g. `&[&[1], &[2, 3]]`.
    pub fn from_sets(n: usize, sets: &[&[usize]]) -> Result<Self> {
        let mut terms = Vec::with_capacity(sets.len());
        for s in sets {
            let mut mask = 0u32;
            for &v in s.iter() {
                if v == 0 || v > n {
                    return Err(Error::OutOfRange(format!("variable {v} outside 1..={n}")));
                }
                mask |= 1 << (v - 1);
            }
            terms.push(mask);
        }
        Self::new(n, terms)
    }

    pub fn constant_zero(n: usize) -> Result<Self> {
        Self::new(n, Vec::new())
    }

    pub fn constant_one(n: usize) -> Result<Self> {
        Self::new(n, vec![0])
    }

    fn validate(&self) -> Result<()> {
        let n = self.n();
        for &t in &self.terms {
            if t & !input_mask(n) != 0 {
                return Err(Error::TermOutOfRange { term: t, n });
            }
        }
        for (i, &a) in self.terms.iter().enumerate() {
            for &b in &self.terms[i + 1..] {
                if a == b {
                    return Err(Error::NotAntichain(format!("duplicate term {a:#b}")));
                }
                if a & b == a || a & b == b {
                    return Err(Error::NotAntichain(format!(
                        "terms {a:#b} and {b:#b} are comparable"
                    )));
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn terms(&self) -> &[u32] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant_one(&self) -> bool {
        self.terms == [0]
    }

    /// Terms as sorted 1-based variable lists.
    pub fn sets(&self) -> Vec<Vec<usize>> {
        self.terms
            .iter()
            .map(|&t| {
                (0..self.n())
                    .filter(|i| t >> i & 1 == 1)
                    .map(|i| i + 1)
                    .collect()
            })
            .collect()
    }

    pub fn to_truth_table(&self) -> TruthTable {
        // validated on construction
        TruthTable::from_fn(self.n(), |m| self.terms.iter().any(|&t| t & m == t))
            .expect("term set has a valid variable count")
    }
}

impl fmt::Display for MinimalTermSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, set) in self.sets().iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            f.write_str("{")?;
            for (i, v) in set.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("}")?;
        }
        f.write_str("}")
    }
}
