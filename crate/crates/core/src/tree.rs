//! Ordinal trees given in level order.
//!
//! Nodes are identified by their 1-based level-order rank. The root is node 1
//! at depth 0. Children of a node occupy a contiguous run of level-order ranks,
//! which is what makes the parent list sufficient to describe the tree.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Order {
    Level,
    Pre,
    Post,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrdinalTree {
    parent: Vec<u32>,
    depth: Vec<u32>,
    size: Vec<u32>,
    child_start: Vec<u32>,
    level_start: Vec<u32>,
    pre: Vec<u32>,
    post: Vec<u32>,
    from_pre: Vec<u32>,
    from_post: Vec<u32>,
    prev_internal: Vec<u32>,
    jump: Vec<Vec<u32>>,
}

impl OrdinalTree {
    /// Builds from `parents[i]`, the parent of node `i + 1`; the root (node 1)
    /// has parent 0. Parents must be non-decreasing with `parent(v) < v`.
    pub fn from_parents(parents: &[usize]) -> Result<Self> {
        let n = parents.len();
        if n == 0 {
            return Err(Error::MalformedTree("empty parent list".into()));
        }
        if parents[0] != 0 {
            return Err(Error::MalformedTree("node 1 must be the root".into()));
        }
        for v in 2..=n {
            let p = parents[v - 1];
            if p == 0 {
                return Err(Error::MalformedTree(format!("node {v} is a second root")));
            }
            if p >= v {
                return Err(Error::MalformedTree(format!("parent {p} of node {v} is not earlier in level order")));
            }
            if v > 2 && p < parents[v - 2] {
                return Err(Error::MalformedTree(format!("children of node {p} are not contiguous at node {v}")));
            }
        }

        let mut parent = vec![0u32; n + 1];
        let mut depth = vec![0u32; n + 1];
        for v in 2..=n {
            parent[v] = parents[v - 1] as u32;
            depth[v] = depth[parents[v - 1]] + 1;
        }

        let mut child_start = vec![0u32; n + 2];
        // child_start[v] = first node whose parent is >= v
        let mut c = 2;
        for v in 1..=n + 1 {
            while c <= n && (parent[c] as usize) < v {
                c += 1;
            }
            child_start[v] = c as u32;
        }

        let mut size = vec![1u32; n + 1];
        for v in (2..=n).rev() {
            size[parent[v] as usize] += size[v];
        }
        size[0] = 0;

        let mut pre = vec![0u32; n + 1];
        let mut post_start = vec![0u32; n + 1];
        pre[1] = 1;
        post_start[1] = 1;
        for v in 1..=n {
            let (mut next_pre, mut next_post) = (pre[v] + 1, post_start[v]);
            for ch in child_start[v]..child_start[v + 1] {
                let ch = ch as usize;
                pre[ch] = next_pre;
                post_start[ch] = next_post;
                next_pre += size[ch];
                next_post += size[ch];
            }
        }
        let mut post = vec![0u32; n + 1];
        let mut from_pre = vec![0u32; n + 1];
        let mut from_post = vec![0u32; n + 1];
        for v in 1..=n {
            post[v] = post_start[v] + size[v] - 1;
            from_pre[pre[v] as usize] = v as u32;
            from_post[post[v] as usize] = v as u32;
        }

        let height = depth[n] as usize + 1;
        let mut level_start = vec![0u32; height + 1];
        for v in (1..=n).rev() {
            level_start[depth[v] as usize] = v as u32;
        }
        level_start[height] = n as u32 + 1;

        let mut prev_internal = vec![0u32; n + 1];
        for v in 1..=n {
            prev_internal[v] = if child_start[v] < child_start[v + 1] { v as u32 } else { prev_internal[v - 1] };
        }

        let mut jump = vec![parent.clone()];
        let mut span = 1;
        while span * 2 <= height {
            let prev = jump.last().unwrap();
            let next = (0..=n).map(|v| prev[prev[v] as usize]).collect();
            jump.push(next);
            span *= 2;
        }

        Ok(OrdinalTree {
            parent,
            depth,
            size,
            child_start,
            level_start,
            pre,
            post,
            from_pre,
            from_post,
            prev_internal,
            jump,
        })
    }

    pub fn len(&self) -> usize {
        self.parent.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Number of levels.
    pub fn height(&self) -> usize {
        self.level_start.len() - 1
    }

    fn check(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.len() {
            Err(Error::OutOfRange { index: v, len: self.len() })
        } else {
            Ok(())
        }
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        match self.parent[v] {
            0 => None,
            p => Some(p as usize),
        }
    }

    pub fn depth(&self, v: usize) -> usize {
        self.depth[v] as usize
    }

    pub fn subtree_size(&self, v: usize) -> usize {
        self.size[v] as usize
    }

    pub fn pre(&self, v: usize) -> usize {
        self.pre[v] as usize
    }

    pub fn post(&self, v: usize) -> usize {
        self.post[v] as usize
    }

    pub fn node_at_post(&self, p: usize) -> usize {
        self.from_post[p] as usize
    }

    pub fn node_at_pre(&self, p: usize) -> usize {
        self.from_pre[p] as usize
    }

    pub fn convert(&self, rank: usize, from: Order, to: Order) -> Result<usize> {
        self.check(rank)?;
        let v = match from {
            Order::Level => rank,
            Order::Pre => self.node_at_pre(rank),
            Order::Post => self.node_at_post(rank),
        };
        Ok(match to {
            Order::Level => v,
            Order::Pre => self.pre(v),
            Order::Post => self.post(v),
        })
    }

    pub fn children(&self, v: usize) -> std::ops::Range<usize> {
        self.child_start[v] as usize..self.child_start[v + 1] as usize
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.children(v).is_empty()
    }

    pub fn last_child(&self, v: usize) -> Option<usize> {
        let r = self.children(v);
        (!r.is_empty()).then(|| r.end - 1)
    }

    /// Largest internal node at or before `v` in level order.
    pub fn prev_internal(&self, v: usize) -> Option<usize> {
        match self.prev_internal[v] {
            0 => None,
            p => Some(p as usize),
        }
    }

    /// Ancestor of `v` at depth `d`, by binary lifting.
    pub fn ancestor(&self, v: usize, d: usize) -> Result<usize> {
        self.check(v)?;
        let dv = self.depth(v);
        if d > dv {
            return Err(Error::DepthTooLarge { node: v, depth: d, node_depth: dv });
        }
        let mut x = v;
        let mut up = dv - d;
        let mut j = 0;
        while up > 0 {
            if up & 1 == 1 {
                x = self.jump[j][x] as usize;
            }
            up >>= 1;
            j += 1;
        }
        Ok(x)
    }

    pub fn level_range(&self, d: usize) -> Result<std::ops::Range<usize>> {
        if d >= self.height() {
            return Err(Error::EmptyLevel(d));
        }
        Ok(self.level_start[d] as usize..self.level_start[d + 1] as usize)
    }

    pub fn first_on_level(&self, d: usize) -> Result<usize> {
        self.level_range(d).map(|r| r.start)
    }

    pub fn last_on_level(&self, d: usize) -> Result<usize> {
        self.level_range(d).map(|r| r.end - 1)
    }

    pub fn level_len(&self, d: usize) -> usize {
        self.level_range(d).map_or(0, |r| r.len())
    }

    /// Post-order ranks covered by the subtree of `v`; the last one is `post(v)`.
    pub fn subtree_post_interval(&self, v: usize) -> (usize, usize) {
        (self.post(v) + 1 - self.subtree_size(v), self.post(v))
    }

    pub fn is_ancestor(&self, a: usize, v: usize) -> bool {
        let (lo, hi) = self.subtree_post_interval(a);
        (lo..=hi).contains(&self.post(v))
    }

    /// Parents in level order, as accepted by [`OrdinalTree::from_parents`].
    pub fn parents(&self) -> Vec<usize> {
        self.parent[1..].iter().map(|&p| p as usize).collect()
    }

    pub fn size_in_bits(&self) -> usize {
        let arrays = 8 * self.parent.len()
            + self.child_start.len()
            + self.level_start.len()
            + self.jump.iter().map(Vec::len).sum::<usize>();
        arrays * 32
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g15() -> OrdinalTree {
        OrdinalTree::from_parents(&[0, 1, 1, 1, 1, 2, 2, 2, 3, 4, 4, 7, 7, 9, 11]).unwrap()
    }

    #[test]
    fn g15_layout() {
        let t = g15();
        assert_eq!(t.height(), 4);
        assert_eq!(t.post(13), 3);
        assert_eq!(t.post(3), 9);
        assert_eq!(t.ancestor(13, 1).unwrap(), 2);
        assert_eq!(t.ancestor(15, 0).unwrap(), 1);
        assert_eq!(t.first_on_level(2).unwrap(), 6);
        assert_eq!(t.last_on_level(2).unwrap(), 11);
        assert_eq!(t.subtree_post_interval(2), (1, 6));
        assert_eq!(t.last_child(4), Some(11));
        assert_eq!(t.prev_internal(10), Some(9));
        assert_eq!(t.prev_internal(6), Some(4));
        assert_eq!(t.prev_internal(7), Some(7));
        assert!(t.ancestor(13, 4).is_err());
        assert!(t.first_on_level(4).is_err());
    }

    #[test]
    fn tiny_trees() {
        let t = OrdinalTree::from_parents(&[0]).unwrap();
        assert_eq!((t.depth(1), t.post(1), t.pre(1)), (0, 1, 1));
        let p = OrdinalTree::from_parents(&[0, 1, 2]).unwrap();
        assert_eq!((p.depth(1), p.depth(2), p.depth(3)), (0, 1, 2));
        assert_eq!(p.convert(1, Order::Pre, Order::Level).unwrap(), 1);
    }

    #[test]
    fn malformed() {
        assert!(OrdinalTree::from_parents(&[0, 0]).is_err());
        assert!(OrdinalTree::from_parents(&[0, 2]).is_err());
        assert!(OrdinalTree::from_parents(&[0, 1, 2, 1]).is_err());
        assert!(OrdinalTree::from_parents(&[]).is_err());
    }
}
