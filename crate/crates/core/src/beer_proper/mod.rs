//! Beer distance and beer shortest paths on proper interval graphs.
//!
//! For `u < v` a beer vertex `w` can lie right of `v`, left of `u`, or
//! strictly between them. The best vertex on either side is the nearest beer
//! vertex in level order. A vertex strictly between either preserves the
//! distance or adds exactly one, and which of the two happens depends only on
//! post-order ranks, so the middle case reduces to rectangle emptiness over
//! the points `(w, post(w))`.

mod compact;

use std::sync::Arc;

pub use compact::{CompactIndex, CompactOptions, CompactStats};

use crate::beers::BeerSet;
use crate::error::{Error, Result};
use crate::interval::Distance;
use crate::proper::ProperIntervalGraph;
use crate::range::{Grid2D, Interval, Rect2};
use crate::tree::OrdinalTree;

/// A beer vertex and the length of the best walk through it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Candidate {
    pub vertex: usize,
    pub length: usize,
}

/// Best beer vertex strictly between the query vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MiddleCandidate {
    /// 0 when the vertex lies on a shortest path, otherwise 1.
    pub excess: usize,
    pub vertex: usize,
    pub length: usize,
}

fn finite(d: Distance) -> Result<usize> {
    d.finite().ok_or(Error::Disconnected { components: 2 })
}

/// Distance-preservation test by post-order ranks, for `u < w < v`.
pub fn classify(g: &ProperIntervalGraph, u: usize, w: usize, v: usize) -> Result<usize> {
    if !(u < w && w < v) {
        return Err(Error::ArgumentOrder("u < w < v"));
    }
    g.graph().check_vertex(v)?;
    let t = g.tree()?;
    Ok(usize::from(!preserves(t, u, w, v)))
}

fn preserves(t: &OrdinalTree, u: usize, w: usize, v: usize) -> bool {
    let (pu, pw, pv) = (t.post(u), t.post(w), t.post(v));
    if pu < pv {
        pw < pu || pw > pv
    } else {
        pv < pw && pw < pu
    }
}

/// A distance-preserving beer vertex on level `d`, where `k1 <= d <= k2` are
/// the depths of `u < v` and `vd` is the ancestor of `v` on level `d`.
fn level_witness(t: &OrdinalTree, beers: &BeerSet, u: usize, v: usize, d: usize, vd: usize) -> Option<usize> {
    let (k1, k2) = (t.depth(u), t.depth(v));
    let range = t.level_range(d).ok()?;
    let (first, last) = (range.start, range.end - 1);
    let (pu, pv) = (t.post(u), t.post(v));
    let inside = |w: usize| u < w && w < v;
    if pu < pv {
        // post(w) < post(u): a prefix of the level
        if d > k1 {
            if let Some(w) = beers.next_after(first - 1) {
                if w <= last && t.post(w) < pu && inside(w) {
                    return Some(w);
                }
            }
        }
        // post(w) > post(v): the suffix starting at v's ancestor
        if d < k2 {
            if let Some(w) = beers.last_at_most(last) {
                if w >= vd && inside(w) {
                    return Some(w);
                }
            }
        }
    } else if d > k1 && d < k2 {
        if let Some(w) = beers.next_after(vd - 1) {
            if w <= last && t.post(w) < pu && inside(w) {
                return Some(w);
            }
        }
    }
    None
}

/// Scans every level between `u` and `v` for a distance-preserving beer vertex.
fn scan_witness(t: &OrdinalTree, beers: &BeerSet, u: usize, v: usize) -> Option<usize> {
    let k1 = t.depth(u);
    let mut vd = v;
    loop {
        let d = t.depth(vd);
        if let Some(w) = level_witness(t, beers, u, v, d, vd) {
            return Some(w);
        }
        if d == k1 {
            return None;
        }
        vd = t.parent(vd).unwrap();
    }
}

/// Basic beer index: the beer bit vector plus a grid over `(w, post(w))`.
#[derive(Debug, Clone)]
pub struct BeerIndex {
    graph: Arc<ProperIntervalGraph>,
    beers: BeerSet,
    grid: Grid2D,
    threshold: usize,
}

impl BeerIndex {
    pub fn new(graph: Arc<ProperIntervalGraph>, beers: &[usize]) -> Result<Self> {
        let t = graph.tree()?;
        let beers = BeerSet::new(graph.len(), beers)?;
        let points: Vec<(usize, usize)> = beers.bits().iter_ones().map(|w| (w, t.post(w))).collect();
        let threshold = graph.len().next_power_of_two().trailing_zeros().max(1) as usize;
        Ok(BeerIndex { graph, beers, grid: Grid2D::new(&points), threshold })
    }

    /// Distances below this are answered by scanning levels rather than by
    /// range queries. Zero disables scanning.
    pub fn with_scan_threshold(mut self, threshold: usize) -> Self {
        self.threshold = threshold;
        self
    }

    pub fn graph(&self) -> &ProperIntervalGraph {
        &self.graph
    }

    pub fn beers(&self) -> &BeerSet {
        &self.beers
    }

    pub fn grid(&self) -> &Grid2D {
        &self.grid
    }

    fn tree(&self) -> &OrdinalTree {
        self.graph.tree().expect("checked at construction")
    }

    fn dist(&self, u: usize, v: usize) -> usize {
        finite(self.graph.dist(u, v).unwrap()).unwrap()
    }

    fn check(&self, u: usize, v: usize) -> Result<()> {
        self.graph.graph().check_vertex(u)?;
        self.graph.graph().check_vertex(v)?;
        if self.beers.is_empty() {
            return Err(Error::NoBeer);
        }
        Ok(())
    }

    /// Nearest beer vertex right of `v` and nearest left of `u`, for `u <= v`.
    pub fn outer_candidates(&self, u: usize, v: usize) -> Result<(Option<Candidate>, Option<Candidate>)> {
        self.graph.graph().check_vertex(u)?;
        self.graph.graph().check_vertex(v)?;
        if u > v {
            return Err(Error::ArgumentOrder("u <= v"));
        }
        let make = |w: usize| Candidate { vertex: w, length: self.dist(u, w) + self.dist(w, v) };
        Ok((self.beers.next_after(v).map(make), self.beers.last_before(u).map(make)))
    }

    /// Rectangles of distance-preserving vertices strictly between `u < v`.
    fn preserving_rects(&self, u: usize, v: usize) -> Vec<Rect2> {
        let t = self.tree();
        let (pu, pv) = (t.post(u) as i64, t.post(v) as i64);
        let x = Interval::open(u as i64, v as i64);
        if pu < pv {
            vec![Rect2::new(x, Interval::below(pu)), Rect2::new(x, Interval::above(pv))]
        } else {
            vec![Rect2::new(x, Interval::open(pv, pu))]
        }
    }

    pub fn middle_candidate(&self, u: usize, v: usize) -> Result<Option<MiddleCandidate>> {
        self.graph.graph().check_vertex(u)?;
        self.graph.graph().check_vertex(v)?;
        if u >= v {
            return Err(Error::ArgumentOrder("u < v"));
        }
        let d = self.dist(u, v);
        let witness = if d < self.threshold {
            scan_witness(self.tree(), &self.beers, u, v)
        } else {
            let mut found = None;
            for r in self.preserving_rects(u, v) {
                if let Some(&(w, _)) = self.grid.report(&r, 1)?.first() {
                    found = Some(w);
                    break;
                }
            }
            found
        };
        if let Some(w) = witness {
            return Ok(Some(MiddleCandidate { excess: 0, vertex: w, length: d }));
        }
        Ok(self.beers.next_after(u).filter(|&w| w < v).map(|w| MiddleCandidate { excess: 1, vertex: w, length: d + 1 }))
    }

    /// The beer vertex of a best walk and that walk's length.
    pub fn best(&self, u: usize, v: usize) -> Result<Candidate> {
        self.check(u, v)?;
        let (u, v) = (u.min(v), u.max(v));
        for w in [u, v] {
            if self.beers.contains(w) {
                return Ok(Candidate { vertex: w, length: self.dist(u, v) });
            }
        }
        let (right, left) = self.outer_candidates(u, v)?;
        let middle = if u < v {
            self.middle_candidate(u, v)?.map(|m| Candidate { vertex: m.vertex, length: m.length })
        } else {
            None
        };
        let best = [middle, right, left].into_iter().flatten().min_by_key(|c| c.length);
        best.ok_or(Error::NoBeer)
    }

    pub fn beer_dist(&self, u: usize, v: usize) -> Result<usize> {
        self.best(u, v).map(|c| c.length)
    }

    pub fn beer_path(&self, u: usize, v: usize) -> Result<Vec<usize>> {
        let c = self.best(u, v)?;
        let mut path = self.graph.shortest_path(u, c.vertex)?.unwrap();
        let rest = self.graph.shortest_path(c.vertex, v)?.unwrap();
        path.extend_from_slice(&rest[1..]);
        Ok(path)
    }

    pub fn size_in_bits(&self) -> usize {
        self.beers.size_in_bits() + self.grid.index_bits()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const G15: &str = "000001000101001110011011011111";

    fn g15() -> Arc<ProperIntervalGraph> {
        Arc::new(ProperIntervalGraph::parse(G15, false).unwrap())
    }

    #[test]
    fn g15_beer_example() {
        let g = g15();
        let one = BeerIndex::new(g.clone(), &[6]).unwrap();
        assert_eq!(one.beer_dist(13, 3).unwrap(), 3);
        assert_eq!(one.beer_path(13, 3).unwrap(), vec![13, 7, 6, 3]);
        let two = BeerIndex::new(g.clone(), &[6, 8]).unwrap();
        assert_eq!(two.beer_dist(13, 3).unwrap(), 2);
        let eight = BeerIndex::new(g.clone(), &[8]).unwrap();
        assert_eq!(eight.beer_path(13, 3).unwrap(), vec![13, 8, 3]);
        let end = BeerIndex::new(g.clone(), &[13]).unwrap();
        assert_eq!(end.beer_dist(13, 3).unwrap(), 2);
        assert_eq!(end.beer_path(13, 13).unwrap(), vec![13]);
    }

    #[test]
    fn classification() {
        let g = g15();
        assert_eq!(classify(&g, 3, 8, 13).unwrap(), 0);
        assert_eq!(classify(&g, 3, 6, 13).unwrap(), 1);
        assert_eq!(classify(&g, 2, 3, 4).unwrap(), 1);
        assert!(classify(&g, 8, 3, 13).is_err());
    }

    #[test]
    fn candidates() {
        let g = g15();
        let right = BeerIndex::new(g.clone(), &[14]).unwrap();
        assert_eq!(right.outer_candidates(3, 13).unwrap(), (Some(Candidate { vertex: 14, length: 3 }), None));
        let left = BeerIndex::new(g.clone(), &[2]).unwrap();
        assert_eq!(left.outer_candidates(3, 13).unwrap(), (None, Some(Candidate { vertex: 2, length: 3 })));
        for threshold in [0, 100] {
            let mid = BeerIndex::new(g.clone(), &[8]).unwrap().with_scan_threshold(threshold);
            assert_eq!(mid.middle_candidate(3, 13).unwrap(), Some(MiddleCandidate { excess: 0, vertex: 8, length: 2 }));
            let plus = BeerIndex::new(g.clone(), &[6]).unwrap().with_scan_threshold(threshold);
            assert_eq!(plus.middle_candidate(3, 13).unwrap(), Some(MiddleCandidate { excess: 1, vertex: 6, length: 3 }));
        }
        let none = BeerIndex::new(g.clone(), &[]).unwrap();
        assert_eq!(none.outer_candidates(3, 13).unwrap(), (None, None));
        assert_eq!(none.middle_candidate(3, 13).unwrap(), None);
        assert!(matches!(none.beer_dist(3, 13), Err(Error::NoBeer)));
    }
}
