//! Interval graphs stored by endpoint ranks, with their distance forest.
//!
//! Vertices are numbered `1..=n` by increasing left endpoint and endpoints are
//! ranks in `1..=2n`. The parent of `v` in the distance tree is the smallest
//! vertex adjacent to `v`, so level order coincides with vertex order and each
//! connected component is a contiguous run of vertices.

use std::fmt;
use std::ops::Add;

use crate::bits::{BitVector, Mode};
use crate::error::{Error, Result};
use crate::tree::OrdinalTree;

/// A path length, or `Infinite` between different components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }
}

impl Add for Distance {
    type Output = Distance;

    fn add(self, rhs: Distance) -> Distance {
        match (self, rhs) {
            (Distance::Finite(a), Distance::Finite(b)) => Distance::Finite(a + b),
            _ => Distance::Infinite,
        }
    }
}

impl From<usize> for Distance {
    fn from(d: usize) -> Self {
        Distance::Finite(d)
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

/// One distance tree per connected component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceForest {
    starts: Vec<usize>,
    trees: Vec<OrdinalTree>,
    component: Vec<u32>,
}

impl DistanceForest {
    /// `parent[v]` is the smallest neighbour of `v` below it, or 0.
    fn new(parent: &[usize]) -> Self {
        let n = parent.len() - 1;
        let mut starts = Vec::new();
        let mut trees = Vec::new();
        let mut component = vec![0u32; n + 1];
        let mut v = 1;
        while v <= n {
            let start = v;
            let mut end = v + 1;
            while end <= n && parent[end] != 0 {
                end += 1;
            }
            let local: Vec<usize> = (start..end).map(|x| if x == start { 0 } else { parent[x] + 1 - start }).collect();
            trees.push(OrdinalTree::from_parents(&local).expect("smallest-neighbour parents form a level-order tree"));
            for x in start..end {
                component[x] = (starts.len()) as u32;
            }
            starts.push(start);
            v = end;
        }
        DistanceForest { starts, trees, component }
    }

    pub fn components(&self) -> usize {
        self.trees.len()
    }

    /// Component index of `v` and the local id of `v` in that component's tree.
    pub fn locate(&self, v: usize) -> (usize, usize) {
        let c = self.component[v] as usize;
        (c, v + 1 - self.starts[c])
    }

    pub fn tree(&self, c: usize) -> &OrdinalTree {
        &self.trees[c]
    }

    /// Vertex range of component `c`.
    pub fn span(&self, c: usize) -> std::ops::Range<usize> {
        let start = self.starts[c];
        start..start + self.trees[c].len()
    }

    pub fn size_in_bits(&self) -> usize {
        self.trees.iter().map(OrdinalTree::size_in_bits).sum::<usize>() + self.starts.len() * 64 + self.component.len() * 32
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalGraph {
    n: usize,
    left: Vec<u32>,
    right: Vec<u32>,
    ends: BitVector,
    reach: Vec<u32>,
    last: Vec<u32>,
    parent: Vec<u32>,
    forest: DistanceForest,
}

impl IntervalGraph {
    /// Builds from intervals with pairwise distinct endpoints; only their
    /// relative order matters.
    pub fn from_intervals(intervals: &[(i64, i64)]) -> Result<Self> {
        let n = intervals.len();
        let mut events: Vec<(i64, usize, bool)> = Vec::with_capacity(2 * n);
        for (i, &(l, r)) in intervals.iter().enumerate() {
            if l >= r {
                return Err(Error::InvalidEndpoints(format!("interval {i} has l = {l} >= r = {r}")));
            }
            events.push((l, i, false));
            events.push((r, i, true));
        }
        events.sort_unstable_by_key(|e| e.0);
        if events.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidEndpoints("endpoints must be distinct".into()));
        }
        let mut id = vec![0usize; n];
        let mut next = 0;
        let mut left = vec![0u32; n + 1];
        let mut right = vec![0u32; n + 1];
        for (rank, &(_, i, is_right)) in events.iter().enumerate() {
            if is_right {
                right[id[i]] = rank as u32 + 1;
            } else {
                next += 1;
                id[i] = next;
                left[next] = rank as u32 + 1;
            }
        }
        Ok(Self::build(left, right))
    }

    /// Builds from a `0`/`1` endpoint string (`0` opens, `1` closes). The
    /// `j`-th `1` closes vertex `rights[j-1]`; without `rights` it closes
    /// vertex `j`, which always yields a proper interval graph.
    pub fn from_endpoints(s: &str, rights: Option<&[usize]>) -> Result<Self> {
        let bits = s.as_bytes();
        if !bits.len().is_multiple_of(2) {
            return Err(Error::InvalidEndpoints(format!("odd length {}", bits.len())));
        }
        let n = bits.len() / 2;
        let mut left = vec![0u32; n + 1];
        let mut right = vec![0u32; n + 1];
        let (mut opened, mut closed) = (0usize, 0usize);
        for (i, &c) in bits.iter().enumerate() {
            match c {
                b'0' => {
                    opened += 1;
                    if opened > n {
                        return Err(Error::Unbalanced(i + 1));
                    }
                    left[opened] = i as u32 + 1;
                }
                b'1' => {
                    closed += 1;
                    if closed > opened {
                        return Err(Error::Unbalanced(i + 1));
                    }
                    let v = match rights {
                        Some(r) => *r.get(closed - 1).ok_or_else(|| Error::InvalidEndpoints("too few right-endpoint owners".into()))?,
                        None => closed,
                    };
                    if v == 0 || v > opened || right[v] != 0 {
                        return Err(Error::InvalidEndpoints(format!("right endpoint {closed} cannot close vertex {v}")));
                    }
                    right[v] = i as u32 + 1;
                }
                other => return Err(Error::InvalidEndpoints(format!("unexpected character {:?}", other as char))),
            }
        }
        if let Some(r) = rights {
            if r.len() != n {
                return Err(Error::InvalidEndpoints(format!("expected {n} right-endpoint owners, got {}", r.len())));
            }
        }
        Ok(Self::build(left, right))
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::from_endpoints(s, None)
    }

    fn build(left: Vec<u32>, right: Vec<u32>) -> Self {
        let n = left.len() - 1;
        let mut closing = vec![0u32; 2 * n + 1];
        for v in 1..=n {
            closing[right[v] as usize] = v as u32;
        }
        let ends = BitVector::from_bits((1..=2 * n).map(|p| closing[p] != 0), Mode::Plain);

        // reach(v) = number of left endpoints before r_v
        let reach = (0..=n).map(|v| if v == 0 { 0 } else { ends.rank0(right[v] as usize) as u32 }).collect::<Vec<_>>();

        let mut parent = vec![0u32; n + 1];
        let mut p = 1;
        for v in 2..=n {
            while p < v && right[p] < left[v] {
                p += 1;
            }
            if p < v {
                parent[v] = p as u32;
            }
        }

        // largest neighbour below v: max x < v with r_x > l_v, via a suffix-max Fenwick tree over right ranks
        let mut fen = vec![0u32; 2 * n + 1];
        let mut last = vec![0u32; n + 1];
        for v in 1..=n {
            let mut best = 0u32;
            let mut i = 2 * n + 1 - (left[v] as usize + 1);
            while i > 0 {
                best = best.max(fen[i]);
                i &= i - 1;
            }
            last[v] = if reach[v] as usize > v { reach[v] } else { best };
            let mut i = 2 * n + 1 - right[v] as usize;
            while i <= 2 * n {
                fen[i] = fen[i].max(v as u32);
                i += i & i.wrapping_neg();
            }
        }

        let parent_usize: Vec<usize> = parent.iter().map(|&p| p as usize).collect();
        let forest = DistanceForest::new(&parent_usize);
        IntervalGraph { n, left, right, ends, reach, last, parent, forest }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn left(&self, v: usize) -> usize {
        self.left[v] as usize
    }

    pub fn right(&self, v: usize) -> usize {
        self.right[v] as usize
    }

    /// Endpoint string, `0` for left and `1` for right endpoints.
    pub fn endpoint_string(&self) -> String {
        (1..=2 * self.n).map(|p| if self.ends.get(p) { '1' } else { '0' }).collect()
    }

    /// Owners of the right endpoints in the order they appear.
    pub fn right_owners(&self) -> Vec<usize> {
        let mut owners: Vec<usize> = (1..=self.n).collect();
        owners.sort_by_key(|&v| self.right[v]);
        owners
    }

    /// True when right endpoints appear in vertex order (no nesting).
    pub fn is_proper(&self) -> bool {
        (2..=self.n).all(|v| self.right[v - 1] < self.right[v])
    }

    pub fn ends(&self) -> &BitVector {
        &self.ends
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u != v && self.left[u].max(self.left[v]) < self.right[u].min(self.right[v])
    }

    /// Largest vertex `x >= v` with every vertex in `v..=x` adjacent to or
    /// equal to `v`; it equals the number of left endpoints before `r_v`.
    pub fn reach(&self, v: usize) -> usize {
        self.reach[v] as usize
    }

    /// Largest neighbour of `v`, if any.
    pub fn last(&self, v: usize) -> Option<usize> {
        match self.last[v] {
            0 => None,
            x => Some(x as usize),
        }
    }

    /// Smallest neighbour of `v` below `v`.
    pub fn parent(&self, v: usize) -> Option<usize> {
        match self.parent[v] {
            0 => None,
            p => Some(p as usize),
        }
    }

    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        let lo = self.parent(v).unwrap_or(v);
        (lo..v).filter(|&x| self.right[x] > self.left[v]).chain(v + 1..=self.reach(v)).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbours(v).len()
    }

    pub fn forest(&self) -> &DistanceForest {
        &self.forest
    }

    pub fn is_connected(&self) -> bool {
        self.forest.components() <= 1
    }

    /// The distance tree; vertex ids equal tree node ids.
    pub fn tree(&self) -> Result<&OrdinalTree> {
        if !self.is_connected() {
            return Err(Error::Disconnected { components: self.forest.components() });
        }
        Ok(self.forest.tree(0))
    }

    /// Smallest depth-ordered ancestor index: the largest `k` with
    /// `ancestor(v, k) <= u`, for `u < v` in the same tree.
    fn split_depth(t: &OrdinalTree, u: usize, v: usize) -> usize {
        let (mut lo, mut hi) = (0, t.depth(v));
        while lo < hi {
            let mid = (lo + hi).div_ceil(2);
            if t.ancestor(v, mid).unwrap() <= u {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        lo
    }

    pub fn dist(&self, u: usize, v: usize) -> Result<Distance> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let (u, v) = (u.min(v), u.max(v));
        let (cu, lu) = self.forest.locate(u);
        let (cv, lv) = self.forest.locate(v);
        if cu != cv {
            return Ok(Distance::Infinite);
        }
        if u == v {
            return Ok(Distance::Finite(0));
        }
        let t = self.forest.tree(cu);
        let off = self.forest.span(cu).start - 1;
        let k = Self::split_depth(t, lu, lv);
        let k2 = t.depth(lv);
        let vk = t.ancestor(lv, k).unwrap();
        let next = t.ancestor(lv, k + 1).unwrap();
        let d = if vk == lu || self.adjacent(u, next + off) { k2 - k } else { k2 - k + 1 };
        Ok(Distance::Finite(d))
    }

    /// A shortest path from `u` to `v`, or `None` across components.
    pub fn shortest_path(&self, u: usize, v: usize) -> Result<Option<Vec<usize>>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u > v {
            return Ok(self.shortest_path(v, u)?.map(|mut p| {
                p.reverse();
                p
            }));
        }
        let (cu, lu) = self.forest.locate(u);
        let (cv, lv) = self.forest.locate(v);
        if cu != cv {
            return Ok(None);
        }
        if u == v {
            return Ok(Some(vec![u]));
        }
        let t = self.forest.tree(cu);
        let off = self.forest.span(cu).start - 1;
        let k = Self::split_depth(t, lu, lv);
        let mut chain = Vec::with_capacity(t.depth(lv) - k + 1);
        let mut x = lv;
        while t.depth(x) > k {
            chain.push(x + off);
            x = t.parent(x).unwrap();
        }
        let vk = x;
        let next = *chain.last().unwrap();
        if vk != lu && !self.adjacent(u, next) {
            chain.push(vk + off);
        }
        chain.push(u);
        chain.reverse();
        Ok(Some(chain))
    }

    pub fn size_in_bits(&self) -> usize {
        self.ends.size_in_bits() + (self.left.len() + self.right.len() + self.reach.len() + self.last.len() + self.parent.len()) * 32 + self.forest.size_in_bits()
    }
}

/// Ranks of vertices by decreasing right endpoint, with the beer set in that order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MirrorMap {
    rank: Vec<u32>,
    vertex: Vec<u32>,
    beers: BitVector,
}

impl MirrorMap {
    pub fn new(g: &IntervalGraph, beers: &[usize]) -> Self {
        let n = g.len();
        let mut rank = vec![0u32; n + 1];
        let mut vertex = vec![0u32; n + 1];
        for v in 1..=n {
            // vertices with a smaller right endpoint are those closed earlier
            let below = g.ends().rank1(g.right(v)) - 1;
            let m = n - below;
            rank[v] = m as u32;
            vertex[m] = v as u32;
        }
        let mut marked: Vec<usize> = beers.iter().map(|&b| rank[b] as usize).collect();
        marked.sort_unstable();
        let beers = BitVector::from_positions(n, &marked, Mode::Plain);
        MirrorMap { rank, vertex, beers }
    }

    pub fn mirror(&self, v: usize) -> usize {
        self.rank[v] as usize
    }

    pub fn unmirror(&self, m: usize) -> usize {
        self.vertex[m] as usize
    }

    /// Beer bit vector indexed by mirror rank.
    pub fn beers(&self) -> &BitVector {
        &self.beers
    }

    /// Beer with the largest right endpoint among those ending before `r_u`.
    pub fn best_ending_before(&self, u: usize) -> Option<usize> {
        let m = self.mirror(u);
        self.beers.select1(self.beers.rank1(m) + 1).map(|x| self.unmirror(x))
    }

    pub fn size_in_bits(&self) -> usize {
        (self.rank.len() + self.vertex.len()) * 32 + self.beers.size_in_bits()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const G15: &str = "000001000101001110011011011111";

    fn star() -> IntervalGraph {
        IntervalGraph::from_intervals(&[(1, 8), (2, 3), (4, 5), (6, 7)]).unwrap()
    }

    #[test]
    fn star_structure() {
        let g = star();
        assert_eq!(g.endpoint_string(), "00101011");
        assert_eq!(g.right_owners(), vec![2, 3, 4, 1]);
        assert!(g.adjacent(1, 4) && !g.adjacent(2, 3));
        assert_eq!(g.last(2), Some(1));
        assert_eq!(g.last(1), Some(4));
        assert_eq!(g.dist(2, 4).unwrap(), Distance::Finite(2));
        assert_eq!(g.dist(1, 3).unwrap(), Distance::Finite(1));
        assert_eq!(g.shortest_path(2, 4).unwrap(), Some(vec![2, 1, 4]));
        let same = IntervalGraph::from_endpoints("00101011", Some(&[2, 3, 4, 1])).unwrap();
        assert_eq!(same, g);
    }

    #[test]
    fn g15_distances() {
        let g = IntervalGraph::parse(G15).unwrap();
        assert!(g.is_proper());
        assert_eq!((g.left(1), g.right(1)), (1, 6));
        assert_eq!(g.last(8), Some(13));
        assert_eq!(g.dist(13, 3).unwrap(), Distance::Finite(2));
        assert_eq!(g.shortest_path(13, 3).unwrap(), Some(vec![13, 7, 3]));
        assert_eq!(g.shortest_path(1, 15).unwrap(), Some(vec![1, 4, 11, 15]));
        let t = g.tree().unwrap();
        assert_eq!(t.parents(), vec![0, 1, 1, 1, 1, 2, 2, 2, 3, 4, 4, 7, 7, 9, 11]);
    }

    #[test]
    fn disconnected_and_errors() {
        let g = IntervalGraph::parse("0101").unwrap();
        assert_eq!(g.dist(1, 2).unwrap(), Distance::Infinite);
        assert_eq!(g.shortest_path(1, 2).unwrap(), None);
        assert!(g.tree().is_err());
        assert!(matches!(IntervalGraph::parse("0110"), Err(Error::Unbalanced(3))));
        assert!(IntervalGraph::parse("01x0").is_err());
        assert!(IntervalGraph::from_intervals(&[(1, 3), (3, 4)]).is_err());
    }

    #[test]
    fn mirror_star() {
        let g = star();
        let m = MirrorMap::new(&g, &[2]);
        assert_eq!(m.mirror(1), 1);
        assert_eq!(m.mirror(4), 2);
        assert_eq!(m.best_ending_before(3), Some(2));
        for v in 1..=4 {
            assert_eq!(m.unmirror(m.mirror(v)), v);
        }
        let p = IntervalGraph::parse(G15).unwrap();
        let mp = MirrorMap::new(&p, &[]);
        assert!((1..=15).all(|v| mp.mirror(v) == 16 - v));
    }
}
