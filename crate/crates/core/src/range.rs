//! Orthogonal range counting, emptiness and reporting over integer points,
//! plus a strict predecessor set.
//!
//! `Grid2D` is a wavelet matrix over the y-coordinates of the points sorted by
//! x. `Grid3D` is a range tree on x whose canonical nodes each hold a `Grid2D`
//! over their `(y, z)` pairs. Both answer any mix of open, closed and
//! unbounded sides.

use crate::bits::{BitVector, Mode};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bound {
    Unbounded,
    Open(i64),
    Closed(i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Bound,
    pub hi: Bound,
}

impl Interval {
    pub const ALL: Interval = Interval { lo: Bound::Unbounded, hi: Bound::Unbounded };

    pub fn new(lo: Bound, hi: Bound) -> Self {
        Interval { lo, hi }
    }

    /// `(a, b)`
    pub fn open(a: i64, b: i64) -> Self {
        Interval::new(Bound::Open(a), Bound::Open(b))
    }

    /// `[a, b]`
    pub fn closed(a: i64, b: i64) -> Self {
        Interval::new(Bound::Closed(a), Bound::Closed(b))
    }

    /// `[a, b)`
    pub fn half_open(a: i64, b: i64) -> Self {
        Interval::new(Bound::Closed(a), Bound::Open(b))
    }

    pub fn above(a: i64) -> Self {
        Interval::new(Bound::Open(a), Bound::Unbounded)
    }

    pub fn at_least(a: i64) -> Self {
        Interval::new(Bound::Closed(a), Bound::Unbounded)
    }

    pub fn below(b: i64) -> Self {
        Interval::new(Bound::Unbounded, Bound::Open(b))
    }

    pub fn at_most(b: i64) -> Self {
        Interval::new(Bound::Unbounded, Bound::Closed(b))
    }

    /// Inclusive integer range after shifting open sides by one, or `None`
    /// when nothing is left.
    pub fn resolve(&self) -> Result<Option<(i64, i64)>> {
        let raw = |b: Bound| match b {
            Bound::Open(a) | Bound::Closed(a) => Some(a),
            Bound::Unbounded => None,
        };
        if let (Some(a), Some(b)) = (raw(self.lo), raw(self.hi)) {
            if a > b {
                return Err(Error::MalformedRect(format!("lower bound {a} exceeds upper bound {b}")));
            }
        }
        let lo = match self.lo {
            Bound::Unbounded => i64::MIN,
            Bound::Closed(a) => a,
            Bound::Open(a) => a.saturating_add(1),
        };
        let hi = match self.hi {
            Bound::Unbounded => i64::MAX,
            Bound::Closed(b) => b,
            Bound::Open(b) => b.saturating_sub(1),
        };
        Ok((lo <= hi).then_some((lo, hi)))
    }

    pub fn contains(&self, c: usize) -> bool {
        let c = c as i64;
        let lo_ok = match self.lo {
            Bound::Unbounded => true,
            Bound::Open(a) => c > a,
            Bound::Closed(a) => c >= a,
        };
        let hi_ok = match self.hi {
            Bound::Unbounded => true,
            Bound::Open(b) => c < b,
            Bound::Closed(b) => c <= b,
        };
        lo_ok && hi_ok
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rect2 {
    pub x: Interval,
    pub y: Interval,
}

impl Rect2 {
    pub fn new(x: Interval, y: Interval) -> Self {
        Rect2 { x, y }
    }

    pub fn contains(&self, p: (usize, usize)) -> bool {
        self.x.contains(p.0) && self.y.contains(p.1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rect3 {
    pub x: Interval,
    pub y: Interval,
    pub z: Interval,
}

impl Rect3 {
    pub fn new(x: Interval, y: Interval, z: Interval) -> Self {
        Rect3 { x, y, z }
    }

    pub fn contains(&self, p: (usize, usize, usize)) -> bool {
        self.x.contains(p.0) && self.y.contains(p.1) && self.z.contains(p.2)
    }
}

/// Clamps a resolved range to non-negative coordinates.
fn clamp(r: (i64, i64)) -> Option<(usize, usize)> {
    if r.1 < 0 {
        return None;
    }
    Some((r.0.max(0) as usize, r.1 as usize))
}

fn resolve(i: &Interval) -> Result<Option<(usize, usize)>> {
    Ok(i.resolve()?.and_then(clamp))
}

/// Wavelet matrix over a sequence of small integers.
#[derive(Debug, Clone)]
struct WaveletMatrix {
    bits: u32,
    levels: Vec<BitVector>,
    zeros: Vec<usize>,
}

impl WaveletMatrix {
    fn new(values: &[usize]) -> Self {
        let max = values.iter().copied().max().unwrap_or(0);
        let bits = usize::BITS - max.leading_zeros();
        let mut cur = values.to_vec();
        let mut levels = Vec::with_capacity(bits as usize);
        let mut zeros = Vec::with_capacity(bits as usize);
        for l in (0..bits).rev() {
            let bv = BitVector::from_bits(cur.iter().map(|&v| v >> l & 1 == 1), Mode::Plain);
            let (z, o): (Vec<usize>, Vec<usize>) = cur.iter().partition(|&&v| v >> l & 1 == 0);
            zeros.push(z.len());
            cur = z;
            cur.extend(o);
            levels.push(bv);
        }
        WaveletMatrix { bits, levels, zeros }
    }

    /// Values `< y` among positions `[a, b)`.
    fn count_less(&self, mut a: usize, mut b: usize, y: usize) -> usize {
        if self.bits < usize::BITS && y >= 1 << self.bits {
            return b - a;
        }
        let mut count = 0;
        for (d, bv) in self.levels.iter().enumerate() {
            let l = self.bits - 1 - d as u32;
            let (ra, rb) = (bv.rank1(a), bv.rank1(b));
            if y >> l & 1 == 1 {
                count += (b - a) - (rb - ra);
                a = self.zeros[d] + ra;
                b = self.zeros[d] + rb;
            } else {
                a -= ra;
                b -= rb;
            }
        }
        count
    }

    fn count(&self, a: usize, b: usize, ylo: usize, yhi: usize) -> usize {
        if a >= b || ylo > yhi {
            return 0;
        }
        self.count_less(a, b, yhi.saturating_add(1)) - self.count_less(a, b, ylo)
    }

    /// Original positions of up to `limit` values in `[ylo, yhi]` among `[a, b)`.
    fn report(&self, a: usize, b: usize, ylo: usize, yhi: usize, limit: usize, out: &mut Vec<usize>) {
        self.report_rec(0, 0, a, b, ylo, yhi, limit, out);
    }

    #[allow(clippy::too_many_arguments)]
    fn report_rec(&self, d: usize, prefix: usize, a: usize, b: usize, ylo: usize, yhi: usize, limit: usize, out: &mut Vec<usize>) {
        if a >= b || out.len() >= limit {
            return;
        }
        let rest = self.bits as usize - d;
        let node_lo = prefix << rest;
        let node_hi = node_lo + (1usize << rest) - 1;
        if node_hi < ylo || node_lo > yhi {
            return;
        }
        if d == self.bits as usize {
            for q in a..b {
                if out.len() >= limit {
                    return;
                }
                out.push(self.origin(q));
            }
            return;
        }
        let bv = &self.levels[d];
        let (ra, rb) = (bv.rank1(a), bv.rank1(b));
        self.report_rec(d + 1, prefix << 1, a - ra, b - rb, ylo, yhi, limit, out);
        let z = self.zeros[d];
        self.report_rec(d + 1, prefix << 1 | 1, z + ra, z + rb, ylo, yhi, limit, out);
    }

    /// Maps a position in the bottom level back to the input sequence.
    fn origin(&self, mut q: usize) -> usize {
        for d in (0..self.levels.len()).rev() {
            let bv = &self.levels[d];
            q = if q < self.zeros[d] {
                bv.select0(q + 1).unwrap() - 1
            } else {
                bv.select1(q - self.zeros[d] + 1).unwrap() - 1
            };
        }
        q
    }

    fn size_in_bits(&self) -> usize {
        self.levels.iter().map(BitVector::size_in_bits).sum::<usize>() + self.zeros.len() * 64 + 128
    }
}

/// Static 2D point set supporting rectangle counting and reporting.
#[derive(Debug, Clone)]
pub struct Grid2D {
    xs: Vec<usize>,
    ys: Vec<usize>,
    wm: WaveletMatrix,
}

impl Grid2D {
    pub fn new(points: &[(usize, usize)]) -> Self {
        let mut pts = points.to_vec();
        pts.sort_unstable();
        let xs: Vec<usize> = pts.iter().map(|p| p.0).collect();
        let ys: Vec<usize> = pts.iter().map(|p| p.1).collect();
        let wm = WaveletMatrix::new(&ys);
        Grid2D { xs, ys, wm }
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    pub fn points(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.xs.iter().copied().zip(self.ys.iter().copied())
    }

    fn x_span(&self, x: (usize, usize)) -> (usize, usize) {
        let a = self.xs.partition_point(|&v| v < x.0);
        let b = self.xs.partition_point(|&v| v <= x.1);
        (a, b)
    }

    fn spans(&self, r: &Rect2) -> Result<Option<(usize, usize, usize, usize)>> {
        let x = resolve(&r.x)?;
        let y = resolve(&r.y)?;
        Ok(match (x, y) {
            (Some(x), Some(y)) => {
                let (a, b) = self.x_span(x);
                Some((a, b, y.0, y.1))
            }
            _ => None,
        })
    }

    pub fn count(&self, r: &Rect2) -> Result<usize> {
        Ok(self.spans(r)?.map_or(0, |(a, b, ylo, yhi)| self.wm.count(a, b, ylo, yhi)))
    }

    /// True when no point lies in `r`.
    pub fn is_empty_in(&self, r: &Rect2) -> Result<bool> {
        self.count(r).map(|c| c == 0)
    }

    /// Up to `limit` points of `r`, in no particular order.
    pub fn report(&self, r: &Rect2, limit: usize) -> Result<Vec<(usize, usize)>> {
        let mut idx = Vec::new();
        if let Some((a, b, ylo, yhi)) = self.spans(r)? {
            self.wm.report(a, b, ylo, yhi, limit, &mut idx);
        }
        Ok(idx.into_iter().map(|i| (self.xs[i], self.ys[i])).collect())
    }

    /// Point of `r` with the smallest x, ties broken by smallest y.
    pub fn leftmost(&self, r: &Rect2) -> Result<Option<(usize, usize)>> {
        let Some((a, b, ylo, yhi)) = self.spans(r)? else {
            return Ok(None);
        };
        if self.wm.count(a, b, ylo, yhi) == 0 {
            return Ok(None);
        }
        let (mut lo, mut hi) = (a + 1, b);
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            if self.wm.count(a, mid, ylo, yhi) > 0 {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        let x = self.xs[lo - 1];
        let (xa, xb) = self.x_span((x, x));
        let mut idx = Vec::new();
        self.wm.report(xa, xb, ylo, yhi, usize::MAX, &mut idx);
        let y = idx.iter().map(|&i| self.ys[i]).min().unwrap();
        Ok(Some((x, y)))
    }

    pub fn size_in_bits(&self) -> usize {
        self.xs.len() * 64 + self.ys.len() * 64 + self.wm.size_in_bits()
    }

    /// Size without the plain coordinate copies kept for reporting.
    pub fn index_bits(&self) -> usize {
        self.wm.size_in_bits()
    }
}

/// Static 3D point set: range tree over x with a `Grid2D` of `(y, z)` per node.
#[derive(Debug, Clone)]
pub struct Grid3D {
    xs: Vec<usize>,
    leaves: usize,
    nodes: Vec<Grid2D>,
    len: usize,
}

impl Grid3D {
    pub fn new(points: &[(usize, usize, usize)]) -> Self {
        let mut pts = points.to_vec();
        pts.sort_unstable();
        let len = pts.len();
        let leaves = len.next_power_of_two().max(1);
        let mut buckets: Vec<Vec<(usize, usize)>> = vec![Vec::new(); 2 * leaves];
        for (i, p) in pts.iter().enumerate() {
            buckets[leaves + i].push((p.1, p.2));
        }
        for v in (1..leaves).rev() {
            let mut merged = buckets[2 * v].clone();
            merged.extend_from_slice(&buckets[2 * v + 1]);
            buckets[v] = merged;
        }
        let nodes = buckets.iter().map(|b| Grid2D::new(b)).collect();
        Grid3D { xs: pts.iter().map(|p| p.0).collect(), leaves, nodes, len }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Canonical nodes covering the x-range, left to right.
    fn canonical(&self, x: &Interval) -> Result<Vec<usize>> {
        let Some((xlo, xhi)) = resolve(x)? else {
            return Ok(Vec::new());
        };
        let a = self.xs.partition_point(|&v| v < xlo);
        let b = self.xs.partition_point(|&v| v <= xhi);
        let (mut l, mut r) = (a + self.leaves, b + self.leaves);
        let (mut left, mut right) = (Vec::new(), Vec::new());
        while l < r {
            if l & 1 == 1 {
                left.push(l);
                l += 1;
            }
            if r & 1 == 1 {
                r -= 1;
                right.push(r);
            }
            l >>= 1;
            r >>= 1;
        }
        left.extend(right.into_iter().rev());
        Ok(left)
    }

    pub fn count(&self, r: &Rect3) -> Result<usize> {
        let inner = Rect2::new(r.y, r.z);
        inner.y.resolve()?;
        inner.x.resolve()?;
        let mut total = 0;
        for v in self.canonical(&r.x)? {
            total += self.nodes[v].count(&inner)?;
        }
        Ok(total)
    }

    pub fn is_empty_in(&self, r: &Rect3) -> Result<bool> {
        let inner = Rect2::new(r.y, r.z);
        inner.y.resolve()?;
        inner.x.resolve()?;
        for v in self.canonical(&r.x)? {
            if self.nodes[v].count(&inner)? > 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Up to `limit` points of `r`. A limit of zero returns nothing; use
    /// [`Grid3D::is_empty_in`] for the emptiness answer.
    pub fn report(&self, r: &Rect3, limit: usize) -> Result<Vec<(usize, usize, usize)>> {
        let inner = Rect2::new(r.y, r.z);
        inner.y.resolve()?;
        inner.x.resolve()?;
        let mut out = Vec::new();
        for v in self.canonical(&r.x)? {
            // every leaf below a node with a nonzero count is a match
            let mut stack = vec![v];
            while let Some(u) = stack.pop() {
                if out.len() >= limit {
                    return Ok(out);
                }
                if self.nodes[u].is_empty() || self.nodes[u].count(&inner)? == 0 {
                    continue;
                }
                if u >= self.leaves {
                    let p = self.nodes[u].points().next().unwrap();
                    out.push((self.xs[u - self.leaves], p.0, p.1));
                } else {
                    stack.push(2 * u + 1);
                    stack.push(2 * u);
                }
            }
        }
        Ok(out)
    }

    pub fn size_in_bits(&self) -> usize {
        self.xs.len() * 64 + self.nodes.iter().map(Grid2D::index_bits).sum::<usize>()
    }
}

/// Sorted integer set answering strict predecessor and successor queries.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PredecessorSet {
    keys: Vec<u64>,
}

impl PredecessorSet {
    pub fn new<I: IntoIterator<Item = u64>>(keys: I) -> Self {
        let mut keys: Vec<u64> = keys.into_iter().collect();
        keys.sort_unstable();
        keys.dedup();
        PredecessorSet { keys }
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    /// Largest element strictly smaller than `i`.
    pub fn pred(&self, i: u64) -> Option<u64> {
        self.pred_index(i).map(|k| self.keys[k])
    }

    /// Index of the strict predecessor in sorted order.
    pub fn pred_index(&self, i: u64) -> Option<usize> {
        self.keys.partition_point(|&k| k < i).checked_sub(1)
    }

    /// Smallest element strictly larger than `i`.
    pub fn succ(&self, i: u64) -> Option<u64> {
        self.keys.get(self.keys.partition_point(|&k| k <= i)).copied()
    }

    pub fn size_in_bits(&self) -> usize {
        self.keys.len() * 64 + 64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid2d_examples() {
        let g = Grid2D::new(&[(1, 1), (2, 3)]);
        let r = Rect2::new(Interval::new(Bound::Open(1), Bound::Closed(2)), Interval::closed(3, 3));
        assert!(!g.is_empty_in(&r).unwrap());
        assert_eq!(g.report(&r, 5).unwrap(), vec![(2, 3)]);
        let empty = Grid2D::new(&[]);
        assert!(empty.is_empty_in(&Rect2::new(Interval::ALL, Interval::ALL)).unwrap());
        let beer = Grid2D::new(&[(8, 5)]);
        assert!(!beer.is_empty_in(&Rect2::new(Interval::open(3, 13), Interval::open(3, 9))).unwrap());
    }

    #[test]
    fn malformed_rect() {
        let g = Grid2D::new(&[(1, 1)]);
        assert!(g.count(&Rect2::new(Interval::closed(3, 2), Interval::ALL)).is_err());
        assert_eq!(g.count(&Rect2::new(Interval::open(1, 2), Interval::ALL)).unwrap(), 0);
    }

    #[test]
    fn leftmost_point() {
        let g = Grid2D::new(&[(5, 9), (3, 7), (3, 2), (8, 1)]);
        let all = Rect2::new(Interval::ALL, Interval::ALL);
        assert_eq!(g.leftmost(&all).unwrap(), Some((3, 2)));
        let high = Rect2::new(Interval::ALL, Interval::at_least(8));
        assert_eq!(g.leftmost(&high).unwrap(), Some((5, 9)));
        let none = Rect2::new(Interval::above(8), Interval::ALL);
        assert_eq!(g.leftmost(&none).unwrap(), None);
    }

    #[test]
    fn grid3d_examples() {
        let g = Grid3D::new(&[(1, 1, 1), (2, 2, 2)]);
        let r = Rect3::new(Interval::closed(1, 2), Interval::closed(1, 1), Interval::ALL);
        assert_eq!(g.report(&r, 10).unwrap(), vec![(1, 1, 1)]);
        assert!(g.report(&r, 0).unwrap().is_empty());
        assert!(!g.is_empty_in(&r).unwrap());
    }

    #[test]
    fn predecessor() {
        let s = PredecessorSet::new([3, 7, 9]);
        assert_eq!(s.pred(8), Some(7));
        assert_eq!(s.pred(3), None);
        assert_eq!(s.pred(100), Some(9));
        assert_eq!(s.succ(7), Some(9));
    }
}
