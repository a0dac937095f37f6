//! Rank/select building blocks: indexed bitvectors, sequences over the
//! (chain, label) pair alphabet, and fully indexable integer dictionaries.
//!
//! Positions are 1-based throughout, with the boundary conventions the
//! index arithmetic relies on: `rank(0, b) = select(0, b) = 0`, and
//! `select(j, b) = len + 1` once `j` exceeds the number of occurrences.
//! Query time is O(log n) rather than the loglog-time structures the space
//! bounds in the literature assume; the functional contracts are identical.
//! All structures are immutable after construction and safe to query from
//! any number of threads.

use std::collections::HashMap;
use std::io::{Read, Write};

pub use crate::wire::WireError;
use crate::wire::{read_magic, read_u64, read_varint, write_magic, write_u64, write_varint};

const BV_MAGIC: &[u8; 4] = b"CBV1";
const PS_MAGIC: &[u8; 4] = b"CPS1";
const ID_MAGIC: &[u8; 4] = b"CID1";
const FORMAT_VERSION: u32 = 1;

/// A plain bitvector with sampled-block rank and binary-searched select.
#[derive(Clone, Debug)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
    /// ones strictly before each word
    rank_samples: Vec<u64>,
}

impl PartialEq for BitVector {
    fn eq(&self, other: &Self) -> bool {
        self.len == other.len && self.words == other.words
    }
}

impl Eq for BitVector {}

impl BitVector {
    pub fn from_bits(bits: impl IntoIterator<Item = bool>) -> Self {
        let mut words = Vec::new();
        let mut len = 0;
        for bit in bits {
            if len % 64 == 0 {
                words.push(0);
            }
            if bit {
                *words.last_mut().unwrap() |= 1u64 << (len % 64);
            }
            len += 1;
        }
        let mut rank_samples = Vec::with_capacity(words.len() + 1);
        let mut acc = 0u64;
        rank_samples.push(0);
        for w in &words {
            acc += w.count_ones() as u64;
            rank_samples.push(acc);
        }
        BitVector {
            len,
            words,
            rank_samples,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Bit at 1-based position `i`.
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(1 <= i && i <= self.len);
        let pos = i - 1;
        self.words[pos / 64] >> (pos % 64) & 1 == 1
    }

    pub fn count(&self, bit: bool) -> usize {
        let ones = *self.rank_samples.last().unwrap() as usize;
        if bit {
            ones
        } else {
            self.len - ones
        }
    }

    /// Number of positions in `1..=i` holding `bit`; `rank(0, _) = 0`.
    pub fn rank(&self, i: usize, bit: bool) -> usize {
        debug_assert!(
            i <= self.len,
            "rank position {i} exceeds length {}",
            self.len
        );
        let ones = self.rank_ones(i);
        if bit {
            ones
        } else {
            i - ones
        }
    }

    fn rank_ones(&self, i: usize) -> usize {
        let full = i / 64;
        let mut count = self.rank_samples[full] as usize;
        let rem = i % 64;
        if rem > 0 {
            count += (self.words[full] & ((1u64 << rem) - 1)).count_ones() as usize;
        }
        count
    }

    /// Position of the `j`-th occurrence of `bit`; `select(0, _) = 0` and
    /// `select(j, _) = len + 1` when fewer than `j` occurrences exist.
    pub fn select(&self, j: usize, bit: bool) -> usize {
        if j == 0 {
            return 0;
        }
        if j > self.count(bit) {
            return self.len + 1;
        }
        // Binary search the smallest i with rank(i, bit) >= j.
        let (mut lo, mut hi) = (1, self.len);
        while lo < hi {
            let mid = (lo + hi) / 2;
            if self.rank(mid, bit) >= j {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        lo
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (1..=self.len).map(move |i| self.get(i))
    }

    /// Render as a 0/1 string, most significant position first.
    pub fn to_bit_string(&self) -> String {
        self.iter().map(|b| if b { '1' } else { '0' }).collect()
    }

    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<(), WireError> {
        write_magic(w, BV_MAGIC, FORMAT_VERSION)?;
        write_varint(w, self.len as u64)?;
        for word in &self.words {
            write_u64(w, *word)?;
        }
        Ok(())
    }

    pub fn read_from<R: Read>(r: &mut R) -> Result<Self, WireError> {
        read_magic(r, BV_MAGIC, FORMAT_VERSION)?;
        let len = read_varint(r)? as usize;
        let word_count = len.div_ceil(64);
        // Claimed lengths are untrusted: let a truncated stream fail fast
        // instead of sizing a buffer from the header.
        let mut words = Vec::with_capacity(word_count.min(1 << 16));
        for _ in 0..word_count {
            words.push(read_u64(r)?);
        }
        if !len.is_multiple_of(64) {
            if let Some(&last) = words.last() {
                if last >> (len % 64) != 0 {
                    return Err(WireError::Corrupt("set bits beyond the length".into()));
                }
            }
        }
        Ok(BitVector::from_bits(
            (0..len).map(|pos| words[pos / 64] >> (pos % 64) & 1 == 1),
        ))
    }
}

/// A sequence over the pair alphabet (chain, label) with per-pair occurrence
/// indexes. Chains are 1-based, labels are alphabet ranks.
#[derive(Clone, Debug)]
pub struct PairSequence {
    symbols: Vec<(u32, u32)>,
    positions: HashMap<(u32, u32), Vec<u32>>,
}

impl PartialEq for PairSequence {
    fn eq(&self, other: &Self) -> bool {
        self.symbols == other.symbols
    }
}

impl Eq for PairSequence {}

impl PairSequence {
    pub fn new(symbols: Vec<(u32, u32)>) -> Self {
        let mut positions: HashMap<(u32, u32), Vec<u32>> = HashMap::new();
        for (i, &pair) in symbols.iter().enumerate() {
            positions.entry(pair).or_default().push(i as u32 + 1);
        }
        PairSequence { symbols, positions }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Pair at 1-based position `i`.
    pub fn access(&self, i: usize) -> (u32, u32) {
        self.symbols[i - 1]
    }

    /// Occurrences of `pair` in positions `1..=i`; 0 for absent pairs.
    pub fn rank(&self, i: usize, pair: (u32, u32)) -> usize {
        debug_assert!(i <= self.symbols.len());
        match self.positions.get(&pair) {
            None => 0,
            Some(list) => list.partition_point(|&p| p as usize <= i),
        }
    }

    /// Position of the `j`-th occurrence of `pair` (1-based `j`), or `None`
    /// when the pair occurs fewer than `j` times.
    pub fn select(&self, j: usize, pair: (u32, u32)) -> Option<usize> {
        if j == 0 {
            return Some(0);
        }
        self.positions
            .get(&pair)
            .and_then(|list| list.get(j - 1))
            .map(|&p| p as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.symbols.iter().copied()
    }

    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<(), WireError> {
        write_magic(w, PS_MAGIC, FORMAT_VERSION)?;
        write_varint(w, self.symbols.len() as u64)?;
        for &(chain, label) in &self.symbols {
            write_varint(w, chain as u64)?;
            write_varint(w, label as u64)?;
        }
        Ok(())
    }

    pub fn read_from<R: Read>(r: &mut R) -> Result<Self, WireError> {
        read_magic(r, PS_MAGIC, FORMAT_VERSION)?;
        let len = read_varint(r)? as usize;
        let mut symbols = Vec::with_capacity(len.min(1 << 16));
        for _ in 0..len {
            let chain = read_varint(r)?;
            let label = read_varint(r)?;
            if chain == 0 || chain > u32::MAX as u64 || label > u32::MAX as u64 {
                return Err(WireError::Corrupt("pair component out of range".into()));
            }
            symbols.push((chain as u32, label as u32));
        }
        Ok(PairSequence::new(symbols))
    }
}

/// A sorted set of distinct integers from a universe `[0, u)`, supporting
/// rank, select, predecessor, strict successor, and membership.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntDictionary {
    universe: u64,
    values: Vec<u64>,
}

impl IntDictionary {
    pub fn new(universe: u64, mut values: Vec<u64>) -> Self {
        values.sort_unstable();
        values.dedup();
        debug_assert!(values.iter().all(|&v| v < universe));
        IntDictionary { universe, values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn universe(&self) -> u64 {
        self.universe
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// `|{y in A : y <= x}|`
    pub fn rank(&self, x: u64) -> usize {
        self.values.partition_point(|&v| v <= x)
    }

    /// `|{y in A : y < x}|`
    pub fn rank_strict(&self, x: u64) -> usize {
        self.values.partition_point(|&v| v < x)
    }

    /// `i`-th smallest element, 1-based.
    pub fn select(&self, i: usize) -> Option<u64> {
        (1..=self.values.len())
            .contains(&i)
            .then(|| self.values[i - 1])
    }

    /// Largest element `<= x`.
    pub fn pred(&self, x: u64) -> Option<u64> {
        match self.rank(x) {
            0 => None,
            r => Some(self.values[r - 1]),
        }
    }

    /// Smallest element strictly greater than `x`.
    pub fn succ(&self, x: u64) -> Option<u64> {
        let r = self.rank(x);
        self.values.get(r).copied()
    }

    pub fn member(&self, x: u64) -> bool {
        self.pred(x) == Some(x)
    }

    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<(), WireError> {
        write_magic(w, ID_MAGIC, FORMAT_VERSION)?;
        write_varint(w, self.universe)?;
        write_varint(w, self.values.len() as u64)?;
        for &v in &self.values {
            write_varint(w, v)?;
        }
        Ok(())
    }

    pub fn read_from<R: Read>(r: &mut R) -> Result<Self, WireError> {
        read_magic(r, ID_MAGIC, FORMAT_VERSION)?;
        let universe = read_varint(r)?;
        let len = read_varint(r)? as usize;
        let mut values = Vec::with_capacity(len.min(1 << 16));
        for _ in 0..len {
            values.push(read_varint(r)?);
        }
        if values.windows(2).any(|w| w[0] >= w[1]) || values.iter().any(|&v| v >= universe) {
            return Err(WireError::Corrupt(
                "dictionary values not sorted in universe".into(),
            ));
        }
        Ok(IntDictionary { universe, values })
    }
}
