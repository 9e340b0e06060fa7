//! Proper interval graphs: no interval nests inside another, so right
//! endpoints are sorted like left endpoints and every neighbourhood is a
//! contiguous run of vertices.

use crate::error::{Error, Result};
use crate::interval::{Distance, IntervalGraph};
use crate::tree::OrdinalTree;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProperIntervalGraph {
    inner: IntervalGraph,
}

/// Neighbourhood summary of one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Neighbourhood {
    pub degree: usize,
    /// Smallest and largest neighbour; the run between them, minus the vertex
    /// itself, is exactly the neighbourhood.
    pub span: Option<(usize, usize)>,
    pub last: Option<usize>,
}

impl ProperIntervalGraph {
    /// Parses an endpoint string. By default `0` marks a left endpoint; with
    /// `flip` set, `1` does.
    pub fn parse(s: &str, flip: bool) -> Result<Self> {
        let s: String = if flip {
            s.chars().map(|c| match c {
                '0' => '1',
                '1' => '0',
                other => other,
            }).collect()
        } else {
            s.to_string()
        };
        Self::new(IntervalGraph::parse(&s)?)
    }

    pub fn new(inner: IntervalGraph) -> Result<Self> {
        for v in 2..=inner.len() {
            if inner.right(v) < inner.right(v - 1) {
                let outer = (1..v).find(|&u| inner.right(u) > inner.right(v)).unwrap();
                return Err(Error::NotProper { outer, inner: v });
            }
        }
        Ok(ProperIntervalGraph { inner })
    }

    pub fn from_intervals(intervals: &[(i64, i64)]) -> Result<Self> {
        Self::new(IntervalGraph::from_intervals(intervals)?)
    }

    pub fn graph(&self) -> &IntervalGraph {
        &self.inner
    }

    pub fn into_graph(self) -> IntervalGraph {
        self.inner
    }

    pub fn len(&self) -> usize {
        self.inner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn endpoint_string(&self) -> String {
        self.inner.endpoint_string()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.inner.adjacent(u, v)
    }

    pub fn neighbourhood(&self, v: usize) -> Result<Neighbourhood> {
        self.inner.check_vertex(v)?;
        let lo = self.inner.parent(v).unwrap_or(v);
        let hi = self.inner.reach(v);
        let degree = hi - lo;
        let first = if lo == v { v + 1 } else { lo };
        let last = if hi == v { v - 1 } else { hi };
        let span = (degree > 0).then_some((first, last));
        Ok(Neighbourhood { degree, span, last: self.inner.last(v) })
    }

    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        let lo = self.inner.parent(v).unwrap_or(v);
        (lo..=self.inner.reach(v)).filter(|&x| x != v).collect()
    }

    pub fn last(&self, v: usize) -> Option<usize> {
        self.inner.last(v)
    }

    pub fn tree(&self) -> Result<&OrdinalTree> {
        self.inner.tree()
    }

    pub fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    /// Distance by depth arithmetic: with `u < v` and `a` the ancestor of `v`
    /// on the level of `u`, the answer is the depth difference, plus one when
    /// `a` lies right of `u`.
    pub fn dist(&self, u: usize, v: usize) -> Result<Distance> {
        self.inner.check_vertex(u)?;
        self.inner.check_vertex(v)?;
        let (u, v) = (u.min(v), u.max(v));
        let forest = self.inner.forest();
        let (cu, lu) = forest.locate(u);
        let (cv, lv) = forest.locate(v);
        if cu != cv {
            return Ok(Distance::Infinite);
        }
        let t = forest.tree(cu);
        let (k1, k2) = (t.depth(lu), t.depth(lv));
        let a = t.ancestor(lv, k1)?;
        Ok(Distance::Finite(k2 - k1 + usize::from(a > lu)))
    }

    pub fn shortest_path(&self, u: usize, v: usize) -> Result<Option<Vec<usize>>> {
        self.inner.check_vertex(u)?;
        self.inner.check_vertex(v)?;
        if u > v {
            return Ok(self.shortest_path(v, u)?.map(|mut p| {
                p.reverse();
                p
            }));
        }
        let forest = self.inner.forest();
        let (cu, lu) = forest.locate(u);
        let (cv, lv) = forest.locate(v);
        if cu != cv {
            return Ok(None);
        }
        let t = forest.tree(cu);
        let off = forest.span(cu).start - 1;
        let k1 = t.depth(lu);
        let mut path = Vec::with_capacity(t.depth(lv) - k1 + 2);
        let mut x = lv;
        while t.depth(x) > k1 {
            path.push(x + off);
            x = t.parent(x).unwrap();
        }
        if x > lu {
            path.push(x + off);
        }
        path.push(u);
        path.reverse();
        Ok(Some(path))
    }
}
