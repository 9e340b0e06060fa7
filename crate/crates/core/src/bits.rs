//! Static bit vectors with rank, select and access.
//!
//! Positions are 1-based: `rank1(i)` counts ones in `1..=i` and `select1(j)`
//! returns the position of the `j`-th one. Two layouts are provided: a plain
//! bitmap with a two-level rank directory and sampled select hints, and an
//! Elias-Fano encoding of the one positions for sparse vectors.

use crate::error::{Error, Result};

const WORD: usize = 64;
const WORDS_PER_BLOCK: usize = 8;
const BLOCK: usize = WORD * WORDS_PER_BLOCK;
const SELECT_SAMPLE: usize = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Plain,
    Compressed,
}

#[derive(Debug, Clone)]
pub struct BitVector {
    len: usize,
    ones: usize,
    repr: Repr,
}

#[derive(Debug, Clone)]
enum Repr {
    Plain(RankSelect),
    Sparse(EliasFano),
}

impl BitVector {
    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I, mode: Mode) -> Self {
        let mut positions = Vec::new();
        let mut len = 0;
        for (i, b) in bits.into_iter().enumerate() {
            if b {
                positions.push(i + 1);
            }
            len = i + 1;
        }
        Self::from_positions(len, &positions, mode)
    }

    /// Builds from the strictly increasing 1-based positions of the ones.
    pub fn from_positions(len: usize, positions: &[usize], mode: Mode) -> Self {
        debug_assert!(positions.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(positions.iter().all(|&p| p >= 1 && p <= len));
        let repr = match mode {
            Mode::Plain => {
                let mut words = vec![0u64; len.div_ceil(WORD)];
                for &p in positions {
                    let q = p - 1;
                    words[q / WORD] |= 1 << (q % WORD);
                }
                Repr::Plain(RankSelect::new(words, len))
            }
            Mode::Compressed => Repr::Sparse(EliasFano::new(len, positions)),
        };
        BitVector { len, ones: positions.len(), repr }
    }

    /// Parses a string of `'0'`/`'1'` characters; anything else is rejected.
    pub fn parse(s: &str, mode: Mode) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                other => return Err(Error::InvalidEndpoints(format!("unexpected character {other:?}"))),
            }
        }
        Ok(Self::from_bits(bits, mode))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn mode(&self) -> Mode {
        match self.repr {
            Repr::Plain(_) => Mode::Plain,
            Repr::Sparse(_) => Mode::Compressed,
        }
    }

    pub fn count_ones(&self) -> usize {
        self.ones
    }

    pub fn count_zeros(&self) -> usize {
        self.len - self.ones
    }

    /// Bit at 1-based position `i`. Panics when out of range.
    pub fn get(&self, i: usize) -> bool {
        assert!(i >= 1 && i <= self.len, "position {i} out of range 1..={}", self.len);
        match &self.repr {
            Repr::Plain(rs) => rs.get(i - 1),
            Repr::Sparse(ef) => ef.rank(i) != ef.rank(i - 1),
        }
    }

    /// Ones in positions `1..=i`, for `0 <= i <= len`.
    pub fn rank1(&self, i: usize) -> usize {
        assert!(i <= self.len, "rank position {i} exceeds length {}", self.len);
        match &self.repr {
            Repr::Plain(rs) => rs.rank1(i),
            Repr::Sparse(ef) => ef.rank(i),
        }
    }

    pub fn rank0(&self, i: usize) -> usize {
        i - self.rank1(i)
    }

    /// Position of the `j`-th one, `None` if `j` is zero or too large.
    pub fn select1(&self, j: usize) -> Option<usize> {
        if j == 0 || j > self.ones {
            return None;
        }
        Some(match &self.repr {
            Repr::Plain(rs) => rs.select1(j) + 1,
            Repr::Sparse(ef) => ef.value(j - 1) + 1,
        })
    }

    pub fn select0(&self, j: usize) -> Option<usize> {
        if j == 0 || j > self.count_zeros() {
            return None;
        }
        Some(match &self.repr {
            Repr::Plain(rs) => rs.select0(j) + 1,
            Repr::Sparse(_) => {
                // The j-th zero is the smallest p with rank0(p) = j.
                let (mut lo, mut hi) = (j, self.len);
                while lo < hi {
                    let mid = lo + (hi - lo) / 2;
                    if self.rank0(mid) >= j {
                        hi = mid;
                    } else {
                        lo = mid + 1;
                    }
                }
                lo
            }
        })
    }

    /// Checked rank for either bit value.
    pub fn rank(&self, bit: bool, i: usize) -> Result<usize> {
        if i > self.len {
            return Err(Error::OutOfRange { index: i, len: self.len });
        }
        Ok(if bit { self.rank1(i) } else { self.rank0(i) })
    }

    /// Checked select for either bit value.
    pub fn select(&self, bit: bool, j: usize) -> Result<usize> {
        let found = if bit { self.select1(j) } else { self.select0(j) };
        found.ok_or(Error::NotFound { what: if bit { "one" } else { "zero" }, ordinal: j })
    }

    /// Smallest one at a position `>= i`.
    pub fn next_one(&self, i: usize) -> Option<usize> {
        self.select1(self.rank1(i.saturating_sub(1).min(self.len)) + 1)
    }

    /// Largest one at a position `<= i`.
    pub fn prev_one(&self, i: usize) -> Option<usize> {
        self.select1(self.rank1(i.min(self.len)))
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.ones).map(move |j| self.select1(j).unwrap())
    }

    /// Measured size of payload plus directories, in bits.
    pub fn size_in_bits(&self) -> usize {
        let own = 2 * usize::BITS as usize;
        own + match &self.repr {
            Repr::Plain(rs) => rs.size_in_bits(),
            Repr::Sparse(ef) => ef.size_in_bits(),
        }
    }
}

impl PartialEq for BitVector {
    fn eq(&self, other: &Self) -> bool {
        self.len == other.len && self.ones == other.ones && self.iter_ones().eq(other.iter_ones())
    }
}

impl Eq for BitVector {}

/// Plain bitmap with block/word rank counters and sampled select hints.
/// All positions in this type are 0-based.
#[derive(Debug, Clone)]
struct RankSelect {
    words: Vec<u64>,
    len: usize,
    blocks: Vec<u64>,
    word_ranks: Vec<u16>,
    ones_hint: Vec<u32>,
    zeros_hint: Vec<u32>,
}

impl RankSelect {
    fn new(words: Vec<u64>, len: usize) -> Self {
        let nblocks = words.len().div_ceil(WORDS_PER_BLOCK);
        let mut blocks = Vec::with_capacity(nblocks + 1);
        let mut word_ranks = Vec::with_capacity(words.len());
        let mut total = 0u64;
        for (w, &word) in words.iter().enumerate() {
            if w % WORDS_PER_BLOCK == 0 {
                blocks.push(total);
            }
            word_ranks.push((total - blocks[blocks.len() - 1]) as u16);
            total += u64::from(word.count_ones());
        }
        blocks.push(total);

        let mut ones_hint = Vec::new();
        let mut zeros_hint = Vec::new();
        for b in 0..nblocks {
            let ones_before = blocks[b] as usize;
            let ones_after = blocks[b + 1] as usize;
            let zeros_before = b * BLOCK - ones_before;
            let zeros_after = ((b + 1) * BLOCK).min(len) - ones_after;
            while ones_hint.len() * SELECT_SAMPLE < ones_after && ones_hint.len() * SELECT_SAMPLE >= ones_before {
                ones_hint.push(b as u32);
            }
            while zeros_hint.len() * SELECT_SAMPLE < zeros_after && zeros_hint.len() * SELECT_SAMPLE >= zeros_before {
                zeros_hint.push(b as u32);
            }
        }
        RankSelect { words, len, blocks, word_ranks, ones_hint, zeros_hint }
    }

    fn get(&self, p: usize) -> bool {
        self.words[p / WORD] >> (p % WORD) & 1 == 1
    }

    /// Ones in `[0, i)`.
    fn rank1(&self, i: usize) -> usize {
        if i == self.len {
            return self.blocks[self.blocks.len() - 1] as usize;
        }
        let w = i / WORD;
        let mask = (1u64 << (i % WORD)) - 1;
        self.blocks[w / WORDS_PER_BLOCK] as usize
            + self.word_ranks[w] as usize
            + (self.words[w] & mask).count_ones() as usize
    }

    fn zeros_before_block(&self, b: usize) -> usize {
        b * BLOCK - self.blocks[b] as usize
    }

    /// 0-based position of the `j`-th one (`j >= 1`).
    fn select1(&self, j: usize) -> usize {
        let s = (j - 1) / SELECT_SAMPLE;
        let lo = self.ones_hint[s] as usize;
        let hi = self.ones_hint.get(s + 1).map_or(self.blocks.len() - 1, |&h| h as usize + 1);
        // last block in [lo, hi) whose prefix count is < j
        let b = lo + self.blocks[lo..hi].partition_point(|&c| (c as usize) < j) - 1;
        let mut rem = j - self.blocks[b] as usize;
        let first = b * WORDS_PER_BLOCK;
        let mut w = first;
        while w + 1 < self.words.len() && w + 1 < first + WORDS_PER_BLOCK && (self.word_ranks[w + 1] as usize) < rem {
            w += 1;
        }
        rem -= self.word_ranks[w] as usize;
        w * WORD + select_in_word(self.words[w], rem)
    }

    fn select0(&self, j: usize) -> usize {
        let s = (j - 1) / SELECT_SAMPLE;
        let lo = self.zeros_hint[s] as usize;
        let hi = self.zeros_hint.get(s + 1).map_or(self.blocks.len() - 1, |&h| h as usize + 1);
        let mut a = lo;
        let mut z = hi;
        while z - a > 1 {
            let mid = (a + z) / 2;
            if self.zeros_before_block(mid) < j {
                a = mid;
            } else {
                z = mid;
            }
        }
        let b = a;
        let mut rem = j - self.zeros_before_block(b);
        let first = b * WORDS_PER_BLOCK;
        let mut w = first;
        let zeros_in_block_before = |w: usize| (w - first) * WORD - self.word_ranks[w] as usize;
        while w + 1 < self.words.len() && w + 1 < first + WORDS_PER_BLOCK && zeros_in_block_before(w + 1) < rem {
            w += 1;
        }
        rem -= zeros_in_block_before(w);
        w * WORD + select_in_word(!self.words[w], rem)
    }

    fn size_in_bits(&self) -> usize {
        self.words.len() * 64
            + self.blocks.len() * 64
            + self.word_ranks.len() * 16
            + (self.ones_hint.len() + self.zeros_hint.len()) * 32
            + usize::BITS as usize
    }
}

/// Offset of the `k`-th set bit (1-based `k`) of a word.
fn select_in_word(mut word: u64, k: usize) -> usize {
    for _ in 1..k {
        word &= word - 1;
    }
    word.trailing_zeros() as usize
}

/// Elias-Fano encoding of a sorted set of 0-based positions.
#[derive(Debug, Clone)]
struct EliasFano {
    low_bits: u32,
    lows: Vec<u64>,
    highs: RankSelect,
    count: usize,
}

impl EliasFano {
    fn new(len: usize, positions: &[usize]) -> Self {
        let count = positions.len();
        let low_bits = if count == 0 {
            usize::BITS - len.leading_zeros()
        } else if len <= count {
            0
        } else {
            (len / count).ilog2()
        };
        let mut lows = vec![0u64; (count * low_bits as usize).div_ceil(64)];
        let high_len = count + (len >> low_bits) + 1;
        let mut highs = vec![0u64; high_len.div_ceil(WORD)];
        let mask = (1u64 << low_bits) - 1;
        for (k, &p) in positions.iter().enumerate() {
            let q = (p - 1) as u64;
            if low_bits > 0 {
                write_bits(&mut lows, k * low_bits as usize, low_bits, q & mask);
            }
            let h = (q >> low_bits) as usize + k;
            highs[h / WORD] |= 1 << (h % WORD);
        }
        EliasFano { low_bits, lows, highs: RankSelect::new(highs, high_len), count }
    }

    fn low(&self, k: usize) -> usize {
        if self.low_bits == 0 {
            0
        } else {
            read_bits(&self.lows, k * self.low_bits as usize, self.low_bits) as usize
        }
    }

    /// 0-based value of the `k`-th element (0-based `k`).
    fn value(&self, k: usize) -> usize {
        let high = self.highs.select1(k + 1) - k;
        (high << self.low_bits) | self.low(k)
    }

    /// Elements strictly below the 0-based position `i`, i.e. ones in `1..=i`.
    fn rank(&self, i: usize) -> usize {
        let h = i >> self.low_bits;
        let mut k = if h == 0 { 0 } else { self.highs.select0(h) + 1 - h };
        let low = i & ((1usize << self.low_bits) - 1);
        let mut pos = k + h;
        while k < self.count && pos < self.highs.len && self.highs.get(pos) {
            if self.low(k) >= low {
                break;
            }
            k += 1;
            pos += 1;
        }
        k
    }

    fn size_in_bits(&self) -> usize {
        self.lows.len() * 64 + self.highs.size_in_bits() + 32 + usize::BITS as usize
    }
}

fn write_bits(words: &mut [u64], at: usize, width: u32, value: u64) {
    let (w, off) = (at / 64, at % 64);
    words[w] |= value << off;
    if off + width as usize > 64 {
        words[w + 1] |= value >> (64 - off);
    }
}

fn read_bits(words: &[u64], at: usize, width: u32) -> u64 {
    let (w, off) = (at / 64, at % 64);
    let mut v = words[w] >> off;
    if off + width as usize > 64 {
        v |= words[w + 1] << (64 - off);
    }
    v & ((1u64 << width) - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn both(s: &str) -> [BitVector; 2] {
        [BitVector::parse(s, Mode::Plain).unwrap(), BitVector::parse(s, Mode::Compressed).unwrap()]
    }

    #[test]
    fn small_examples() {
        for bv in both("10110") {
            assert_eq!(bv.len(), 5);
            assert_eq!(bv.count_ones(), 3);
            assert_eq!(bv.rank1(3), 2);
            assert_eq!(bv.rank0(5), 2);
            assert_eq!(bv.rank1(0), 0);
            assert_eq!(bv.select1(3), Some(4));
            assert_eq!(bv.select0(1), Some(2));
            assert_eq!(bv.select1(4), None);
            assert!(bv.rank(true, 6).is_err());
            assert!(bv.select(false, 3).is_err());
        }
    }

    #[test]
    fn sparse_is_smaller() {
        let n = 1 << 16;
        let plain = BitVector::from_positions(n, &[5, 900, 40_000], Mode::Plain);
        let sparse = BitVector::from_positions(n, &[5, 900, 40_000], Mode::Compressed);
        assert!(sparse.size_in_bits() * 20 < plain.size_in_bits());
        let empty = BitVector::from_positions(n, &[], Mode::Compressed);
        let bigger = BitVector::from_positions(n * 16, &[], Mode::Compressed);
        assert!(bigger.size_in_bits() < 8 * empty.size_in_bits());
    }

    #[test]
    fn dense_round_trip_across_blocks() {
        let bits: Vec<bool> = (0..5000).map(|i| (i * 7 + i / 13) % 5 < 2).collect();
        for mode in [Mode::Plain, Mode::Compressed] {
            let bv = BitVector::from_bits(bits.iter().copied(), mode);
            let mut ones = 0;
            for (i, &b) in bits.iter().enumerate() {
                assert_eq!(bv.get(i + 1), b);
                if b {
                    ones += 1;
                    assert_eq!(bv.select1(ones), Some(i + 1));
                } else {
                    assert_eq!(bv.select0(i + 1 - ones), Some(i + 1));
                }
                assert_eq!(bv.rank1(i + 1), ones);
            }
        }
    }

    #[test]
    fn next_and_prev() {
        let bv = BitVector::parse("0100100", Mode::Plain).unwrap();
        assert_eq!(bv.next_one(1), Some(2));
        assert_eq!(bv.next_one(3), Some(5));
        assert_eq!(bv.next_one(6), None);
        assert_eq!(bv.prev_one(4), Some(2));
        assert_eq!(bv.prev_one(1), None);
    }
}
