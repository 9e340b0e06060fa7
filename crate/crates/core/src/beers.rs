use crate::bits::{BitVector, Mode};
use crate::error::{Error, Result};

/// Beer vertices as a level-order bit vector (vertex ids equal level-order
/// ranks in a connected graph's distance tree).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BeerSet {
    bits: BitVector,
}

impl BeerSet {
    /// Accepts ids in any order; duplicates are ignored.
    pub fn new(n: usize, beers: &[usize]) -> Result<Self> {
        let mut sorted = beers.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if let Some(&b) = sorted.iter().find(|&&b| b == 0 || b > n) {
            return Err(Error::InvalidBeerSet(format!("vertex {b} outside 1..={n}")));
        }
        let mode = if sorted.len() * 16 < n { Mode::Compressed } else { Mode::Plain };
        Ok(BeerSet { bits: BitVector::from_positions(n, &sorted, mode) })
    }

    pub fn bits(&self) -> &BitVector {
        &self.bits
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        v >= 1 && v <= self.bits.len() && self.bits.get(v)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.bits.iter_ones().collect()
    }

    /// Smallest beer vertex `> v`.
    pub fn next_after(&self, v: usize) -> Option<usize> {
        self.bits.select1(self.bits.rank1(v.min(self.bits.len())) + 1)
    }

    /// Largest beer vertex `< v`.
    pub fn last_before(&self, v: usize) -> Option<usize> {
        if v <= 1 {
            return None;
        }
        self.bits.prev_one(v - 1)
    }

    /// Largest beer vertex `<= v`.
    pub fn last_at_most(&self, v: usize) -> Option<usize> {
        self.bits.prev_one(v)
    }

    /// Number of beer vertices strictly between `u` and `v` (`u < v`).
    pub fn count_between(&self, u: usize, v: usize) -> usize {
        self.bits.rank1(v - 1) - self.bits.rank1(u)
    }

    pub fn size_in_bits(&self) -> usize {
        self.bits.size_in_bits()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn navigation() {
        let b = BeerSet::new(10, &[7, 3, 3]).unwrap();
        assert_eq!(b.to_vec(), vec![3, 7]);
        assert_eq!(b.next_after(3), Some(7));
        assert_eq!(b.next_after(7), None);
        assert_eq!(b.last_before(7), Some(3));
        assert_eq!(b.last_before(3), None);
        assert_eq!(b.count_between(3, 7), 0);
        assert_eq!(b.count_between(2, 8), 2);
        assert!(BeerSet::new(5, &[6]).is_err());
    }
}
