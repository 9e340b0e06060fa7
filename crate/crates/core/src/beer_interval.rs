//! Beer distance and beer shortest paths on general interval graphs.
//!
//! Let `R(w)` be the reach of `w`: the largest vertex `x >= w` adjacent to or
//! equal to `w`. For `w < x` the distance `dist(w, x)` depends only on `R(w)`
//! and `x`, and does not grow as `R(w)` grows. This splits the beer vertices
//! for a query `u < v` into four groups:
//!
//! 1. right of `v`: the nearest one is best;
//! 2. left of `u` and ending before `u` ends: the one ending last is best;
//! 3. strictly between `u` and `v`: decided by range queries (see below);
//! 4. left of `u` and ending after `u` ends: again the one ending last.
//!
//! Between `u` and `v`, a vertex adjacent to `u` costs `1 + dist(w, v)`, which
//! is a threshold test on `R(w)`. A vertex farther away costs
//! `dist(u, v) + K - e(w) + [post(w) > post(R(u))] + [post(R(w)) < post(v)]`
//! where `e(w)` is one when `R(w)` sits one level below `w` and `K` depends
//! only on the query, which is a constant number of three-sided queries over
//! the points `(w, post(w), post(R(w)))`.

use std::sync::Arc;

use crate::beer_proper::{Candidate, MiddleCandidate};
use crate::beers::BeerSet;
use crate::error::{Error, Result};
use crate::interval::{Distance, IntervalGraph, MirrorMap};
use crate::range::{Grid2D, Grid3D, Interval, Rect2, Rect3};
use crate::tree::OrdinalTree;

fn finite(d: Distance) -> usize {
    d.finite().expect("graph is connected")
}

/// Excess `dist(u, w) + dist(w, v) - dist(u, v)` for `u < w < v`.
pub fn classify(g: &IntervalGraph, u: usize, w: usize, v: usize) -> Result<usize> {
    if !(u < w && w < v) {
        return Err(Error::ArgumentOrder("u < w < v"));
    }
    g.check_vertex(v)?;
    let through = (g.dist(u, w)? + g.dist(w, v)?).finite().ok_or(Error::Disconnected { components: 2 })?;
    Ok(through - finite(g.dist(u, v)?))
}

/// Which of the two post-order criteria hold for `u < w < v`, where `last(x)`
/// is the largest neighbour of `x` (or `x` itself when it has none above).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Criteria {
    pub first: bool,
    pub second: bool,
}

impl Criteria {
    /// The excess predicted by counting failed criteria.
    pub fn predicted(&self) -> usize {
        2 - usize::from(self.first) - usize::from(self.second)
    }
}

pub fn criteria(g: &IntervalGraph, u: usize, w: usize, v: usize) -> Result<Criteria> {
    if !(u < w && w < v) {
        return Err(Error::ArgumentOrder("u < w < v"));
    }
    g.check_vertex(v)?;
    let t = g.tree()?;
    let (pw, pv) = (t.post(w), t.post(v));
    let plu = t.post(g.reach(u));
    let plw = t.post(g.reach(w));
    let first = if plu < pv { pw > pv || pw < plu } else { pv < pw && pw < plu };
    let second = if pw < pv { plw > pv || plw < pw } else { pv < plw && plw < pw };
    Ok(Criteria { first, second })
}

/// Beer vertices as points `(w, post(w), post(R(w)))`, split by whether `R(w)`
/// stays on the level of `w` (R1, including `R(w) = w`) or lies on the next
/// one (R2).
#[derive(Debug, Clone)]
pub struct BeerTables3D {
    r1: Grid3D,
    r2: Grid3D,
}

impl BeerTables3D {
    pub fn new(g: &IntervalGraph, beers: &BeerSet) -> Result<Self> {
        let t = g.tree()?;
        let (mut r1, mut r2) = (Vec::new(), Vec::new());
        for w in beers.bits().iter_ones() {
            let r = g.reach(w);
            let p = (w, t.post(w), t.post(r));
            if t.depth(r) > t.depth(w) {
                r2.push(p);
            } else {
                r1.push(p);
            }
        }
        Ok(BeerTables3D { r1: Grid3D::new(&r1), r2: Grid3D::new(&r2) })
    }

    pub fn r1(&self) -> &Grid3D {
        &self.r1
    }

    pub fn r2(&self) -> &Grid3D {
        &self.r2
    }

    pub fn size_in_bits(&self) -> usize {
        self.r1.size_in_bits() + self.r2.size_in_bits()
    }
}

#[derive(Debug, Clone)]
pub struct IntervalBeerIndex {
    graph: Arc<IntervalGraph>,
    beers: BeerSet,
    mirror: MirrorMap,
    /// Points `(mirror(w), w)`.
    by_right: Grid2D,
    /// Points `(w, R(w))`.
    by_reach: Grid2D,
    tables: BeerTables3D,
}

impl IntervalBeerIndex {
    pub fn new(graph: Arc<IntervalGraph>, beers: &[usize]) -> Result<Self> {
        graph.tree()?;
        let beers = BeerSet::new(graph.len(), beers)?;
        let list = beers.to_vec();
        let mirror = MirrorMap::new(&graph, &list);
        let by_right = Grid2D::new(&list.iter().map(|&w| (mirror.mirror(w), w)).collect::<Vec<_>>());
        let by_reach = Grid2D::new(&list.iter().map(|&w| (w, graph.reach(w))).collect::<Vec<_>>());
        let tables = BeerTables3D::new(&graph, &beers)?;
        Ok(IntervalBeerIndex { graph, beers, mirror, by_right, by_reach, tables })
    }

    pub fn graph(&self) -> &IntervalGraph {
        &self.graph
    }

    pub fn beers(&self) -> &BeerSet {
        &self.beers
    }

    pub fn mirror(&self) -> &MirrorMap {
        &self.mirror
    }

    pub fn tables(&self) -> &BeerTables3D {
        &self.tables
    }

    fn tree(&self) -> &OrdinalTree {
        self.graph.tree().expect("checked at construction")
    }

    fn dist(&self, u: usize, v: usize) -> usize {
        finite(self.graph.dist(u, v).unwrap())
    }

    fn through(&self, u: usize, w: usize, v: usize) -> Candidate {
        Candidate { vertex: w, length: self.dist(u, w) + self.dist(w, v) }
    }

    fn check_pair(&self, u: usize, v: usize, strict: bool) -> Result<()> {
        self.graph.check_vertex(u)?;
        self.graph.check_vertex(v)?;
        if strict && u >= v {
            return Err(Error::ArgumentOrder("u < v"));
        }
        if u > v {
            return Err(Error::ArgumentOrder("u <= v"));
        }
        Ok(())
    }

    /// Best beer vertex left of `u` among those with right endpoint on the
    /// given side of `r_u`, as the one with the largest right endpoint.
    fn left_of(&self, u: usize, ends_after: bool) -> Option<usize> {
        let m = self.mirror.mirror(u) as i64;
        let x = if ends_after { Interval::below(m) } else { Interval::above(m) };
        let r = Rect2::new(x, Interval::below(u as i64));
        self.by_right.leftmost(&r).unwrap().map(|(_, w)| w)
    }

    /// Candidate 1, the nearest beer vertex right of `v`, and candidate 2,
    /// the beer vertex left of `u` ending last among those ending before `u`.
    pub fn outer_candidates(&self, u: usize, v: usize) -> Result<(Option<Candidate>, Option<Candidate>)> {
        self.check_pair(u, v, false)?;
        let right = self.beers.next_after(v).map(|w| self.through(u, w, v));
        let left = self.left_of(u, false).map(|w| self.through(u, w, v));
        Ok((right, left))
    }

    /// Candidate 4: beer vertices left of `u` whose interval ends after `u`'s.
    pub fn candidate4(&self, u: usize, v: usize) -> Result<Option<Candidate>> {
        self.check_pair(u, v, false)?;
        Ok(self.left_of(u, true).map(|w| self.through(u, w, v)))
    }

    /// Smallest `r` with `dist(w, v) <= c` for every `w < v` with `R(w) >= r`.
    fn reach_threshold(&self, v: usize, c: usize) -> Option<usize> {
        let t = self.tree();
        match c {
            0 => None,
            1 => Some(v),
            _ => Some(t.depth(v).checked_sub(c - 1).map_or(1, |k| t.ancestor(v, k).unwrap())),
        }
    }

    /// Candidate 3: the best beer vertex strictly between `u` and `v`.
    pub fn candidate3(&self, u: usize, v: usize) -> Result<Option<MiddleCandidate>> {
        self.check_pair(u, v, true)?;
        if self.beers.count_between(u, v) == 0 {
            return Ok(None);
        }
        let t = self.tree();
        let d = self.dist(u, v);
        let ru = self.graph.reach(u);
        let mut best: Option<MiddleCandidate> = None;
        let mut offer = |c: MiddleCandidate| {
            if best.is_none_or(|b| c.length < b.length) {
                best = Some(c);
            }
        };

        // adjacent to u: cost 1 + dist(w, v)
        let hi = ru.min(v - 1);
        if hi > u {
            let x = Interval::closed(u as i64 + 1, hi as i64);
            for c in d.saturating_sub(1)..=d + 1 {
                let Some(r) = self.reach_threshold(v, c) else { continue };
                if let Some(&(w, _)) = self.by_reach.report(&Rect2::new(x, Interval::at_least(r as i64)), 1)?.first() {
                    offer(MiddleCandidate { excess: c + 1 - d, vertex: w, length: c + 1 });
                    break;
                }
            }
        }

        // not adjacent to u
        if ru + 1 < v {
            let (pru, pv) = (t.post(ru) as i64, t.post(v) as i64);
            let k = 1 - usize::from(pv > pru);
            let x = Interval::open(ru as i64, v as i64);
            let y_left = Interval::below(pru);
            let z_hit = Interval::at_least(pv);
            for (grid, e) in [(&self.tables.r1, 0), (&self.tables.r2, 1)] {
                let tries = [
                    (0, Rect3::new(x, y_left, z_hit)),
                    (1, Rect3::new(x, y_left, Interval::ALL)),
                    (1, Rect3::new(x, Interval::ALL, z_hit)),
                    (2, Rect3::new(x, Interval::ALL, Interval::ALL)),
                ];
                for (m, rect) in tries {
                    if let Some(&(w, _, _)) = grid.report(&rect, 1)?.first() {
                        let excess = k + m - e;
                        offer(MiddleCandidate { excess, vertex: w, length: d + excess });
                        break;
                    }
                }
            }
        }
        debug_assert!(best.is_none_or(|b| self.through(u, b.vertex, v).length == b.length));
        Ok(best)
    }

    /// The beer vertex of a best walk and that walk's length.
    pub fn best(&self, u: usize, v: usize) -> Result<Candidate> {
        self.graph.check_vertex(u)?;
        self.graph.check_vertex(v)?;
        if self.beers.is_empty() {
            return Err(Error::NoBeer);
        }
        let (u, v) = (u.min(v), u.max(v));
        for w in [u, v] {
            if self.beers.contains(w) {
                return Ok(Candidate { vertex: w, length: self.dist(u, v) });
            }
        }
        let (c1, c2) = self.outer_candidates(u, v)?;
        let c3 = if u < v { self.candidate3(u, v)?.map(|m| Candidate { vertex: m.vertex, length: m.length }) } else { None };
        let c4 = self.candidate4(u, v)?;
        [c3, c1, c2, c4].into_iter().flatten().min_by_key(|c| c.length).ok_or(Error::NoBeer)
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
        self.beers.size_in_bits() + self.mirror.size_in_bits() + self.by_right.index_bits() + self.by_reach.index_bits() + self.tables.size_in_bits()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star() -> Arc<IntervalGraph> {
        Arc::new(IntervalGraph::from_intervals(&[(1, 8), (2, 3), (4, 5), (6, 7)]).unwrap())
    }

    fn g15() -> Arc<IntervalGraph> {
        Arc::new(IntervalGraph::parse("000001000101001110011011011111").unwrap())
    }

    #[test]
    fn star_queries() {
        let g = star();
        assert_eq!(classify(&g, 2, 3, 4).unwrap(), 2);
        let one = IntervalBeerIndex::new(g.clone(), &[1]).unwrap();
        assert_eq!(one.beer_dist(2, 4).unwrap(), 2);
        assert_eq!(one.beer_path(2, 4).unwrap(), vec![2, 1, 4]);
        assert_eq!(one.candidate4(2, 4).unwrap(), Some(Candidate { vertex: 1, length: 2 }));
        let three = IntervalBeerIndex::new(g.clone(), &[3]).unwrap();
        assert_eq!(three.beer_dist(2, 4).unwrap(), 4);
        assert_eq!(three.beer_path(2, 4).unwrap(), vec![2, 1, 3, 1, 4]);
        assert_eq!(three.candidate3(2, 4).unwrap().map(|m| (m.excess, m.length)), Some((2, 4)));
        let two = IntervalBeerIndex::new(g.clone(), &[2]).unwrap();
        assert_eq!(two.outer_candidates(3, 4).unwrap().1, Some(Candidate { vertex: 2, length: 4 }));
        let four = IntervalBeerIndex::new(g.clone(), &[4]).unwrap();
        assert_eq!(four.outer_candidates(2, 3).unwrap().0, Some(Candidate { vertex: 4, length: 4 }));
        let none = IntervalBeerIndex::new(g, &[]).unwrap();
        assert_eq!(none.outer_candidates(2, 3).unwrap(), (None, None));
        assert!(matches!(none.beer_dist(2, 3), Err(Error::NoBeer)));
    }

    #[test]
    fn g15_queries() {
        let g = g15();
        assert_eq!(classify(&g, 3, 8, 13).unwrap(), 0);
        let eight = IntervalBeerIndex::new(g.clone(), &[8]).unwrap();
        assert_eq!(eight.candidate3(3, 13).unwrap().map(|m| (m.excess, m.length)), Some((0, 2)));
        assert_eq!(eight.candidate4(3, 13).unwrap(), None);
        assert_eq!(eight.beer_path(13, 3).unwrap(), vec![13, 8, 3]);
        assert_eq!(eight.candidate3(3, 4).unwrap(), None);
        let six = IntervalBeerIndex::new(g, &[6]).unwrap();
        assert_eq!(six.beer_dist(13, 3).unwrap(), 3);
    }

    #[test]
    fn nested_left_vertex() {
        // the vertex ending last before u is not the best one left of u
        let g = Arc::new(IntervalGraph::from_intervals(&[(0, 5), (2, 20), (4, 6), (8, 18)]).unwrap());
        let idx = IntervalBeerIndex::new(g.clone(), &[1, 4]).unwrap();
        let adj = crate::oracle::AdjacencyList::from_graph(&g);
        let m = crate::oracle::DistanceMatrix::new(&adj);
        for u in 1..=4 {
            for v in 1..=4 {
                assert_eq!(Distance::Finite(idx.beer_dist(u, v).unwrap()), m.beer_dist(&[1, 4], u, v));
            }
        }
    }
}
