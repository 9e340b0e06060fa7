//! Beer index over a contracted tree of selected levels.
//!
//! Every `delta`-th level of the distance tree is selected, using the residue
//! class with the fewest nodes, and level 0 is always added so every node has
//! a selected ancestor. A selected node together with its descendants above
//! the next selected level forms a piece; pieces are the nodes of the
//! contracted tree. A query walks at most `delta` levels at each end one level
//! at a time and answers the levels in between with rectangle queries over
//! pieces plus a counting argument for the pieces on the chain of `v`.

use std::sync::Arc;

use super::{finite, level_witness, scan_witness};
use crate::beers::BeerSet;
use crate::bits::{BitVector, Mode};
use crate::error::{Error, Result};
use crate::proper::ProperIntervalGraph;
use crate::range::{Grid2D, Interval, PredecessorSet, Rect2};
use crate::tree::OrdinalTree;

const SAMPLE: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompactOptions {
    pub delta: usize,
    /// Store the post-order beer bit vector instead of deriving it from the
    /// level-order one.
    pub explicit_post_view: bool,
}

impl CompactOptions {
    pub fn new(delta: usize) -> Self {
        CompactOptions { delta, explicit_post_view: false }
    }
}

/// Measured sizes, in bits, of the parts of a [`CompactIndex`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CompactStats {
    pub selected_nodes: usize,
    pub selected_levels: usize,
    pub selected_bits: usize,
    pub contracted_tree_bits: usize,
    pub grid_bits: usize,
    pub prefix_bits: usize,
    pub predecessor_bits: usize,
    pub post_view_bits: usize,
}

impl CompactStats {
    /// Everything except the graph and the level-order beer bit vector.
    pub fn auxiliary_bits(&self) -> usize {
        self.selected_bits + self.contracted_tree_bits + self.grid_bits + self.prefix_bits + self.predecessor_bits + self.post_view_bits
    }
}

#[derive(Debug, Clone)]
enum PostView {
    Sampled(Vec<u32>),
    Explicit(BitVector),
}

#[derive(Debug, Clone)]
pub struct CompactIndex {
    graph: Arc<ProperIntervalGraph>,
    beers: BeerSet,
    delta: usize,
    residue: usize,
    levels: Vec<usize>,
    selected: BitVector,
    selected_post: BitVector,
    contracted: OrdinalTree,
    piece_marks: BitVector,
    piece_grid: Grid2D,
    root_grid: Grid2D,
    prefix: Vec<u32>,
    level_posts: Vec<PredecessorSet>,
    post_view: PostView,
}

impl CompactIndex {
    pub fn new(graph: Arc<ProperIntervalGraph>, beers: &[usize], options: CompactOptions) -> Result<Self> {
        let delta = options.delta;
        if delta < 2 {
            return Err(Error::DeltaTooSmall(delta));
        }
        let t = graph.tree()?;
        let n = t.len();
        let beers = BeerSet::new(n, beers)?;
        let height = t.height();

        let residue = (0..delta)
            .min_by_key(|&i| (i..height).step_by(delta).map(|k| t.level_len(k)).sum::<usize>())
            .unwrap();
        let mut levels: Vec<usize> = (residue..height).step_by(delta).collect();
        if residue != 0 {
            levels.insert(0, 0);
        }

        let mut sel_nodes = Vec::new();
        for &k in &levels {
            sel_nodes.extend(t.level_range(k).unwrap());
        }
        let selected = BitVector::from_positions(n, &sel_nodes, Mode::Compressed);
        let mut sel_posts: Vec<usize> = sel_nodes.iter().map(|&x| t.post(x)).collect();
        sel_posts.sort_unstable();
        let selected_post = BitVector::from_positions(n, &sel_posts, Mode::Compressed);

        // contracted tree: parent is the selected ancestor one selected level up
        let mut parents = Vec::with_capacity(sel_nodes.len());
        for &x in &sel_nodes {
            let d = t.depth(x);
            let li = levels.binary_search(&d).unwrap();
            parents.push(if li == 0 { 0 } else { selected.rank1(t.ancestor(x, levels[li - 1]).unwrap()) });
        }
        let contracted = OrdinalTree::from_parents(&parents)?;

        let post_prefix = {
            let mut acc = vec![0u32; n + 1];
            for p in 1..=n {
                acc[p] = acc[p - 1] + u32::from(beers.contains(t.node_at_post(p)));
            }
            acc
        };
        let subtree_beers = |x: usize| {
            let (lo, hi) = t.subtree_post_interval(x);
            (post_prefix[hi] - post_prefix[lo - 1]) as usize
        };

        // beer vertices in each piece below its root
        let mut marked = Vec::new();
        let mut piece_points = Vec::new();
        let mut root_points = Vec::new();
        for (i, &x) in sel_nodes.iter().enumerate() {
            let id = i + 1;
            let d = t.depth(x);
            let li = levels.binary_search(&d).unwrap();
            let mut below = subtree_beers(x) - usize::from(beers.contains(x));
            if let Some(&next) = levels.get(li + 1) {
                // subtract the full subtrees hanging from the next selected level
                let (lo, hi) = t.subtree_post_interval(x);
                for y in t.level_range(next).unwrap() {
                    if (lo..=hi).contains(&t.post(y)) {
                        below -= subtree_beers(y);
                    }
                }
            }
            let post_rank = selected_post.rank1(t.post(x));
            if below > 0 {
                marked.push(id);
                piece_points.push((id, post_rank));
            }
            if beers.contains(x) {
                root_points.push((id, post_rank));
            }
        }
        let piece_marks = BitVector::from_positions(sel_nodes.len(), &marked, Mode::Plain);

        let mut prefix = vec![0u32; sel_nodes.len() + 1];
        for &k in &levels {
            let mut acc = 0u32;
            for x in t.level_range(k).unwrap() {
                acc += subtree_beers(x) as u32;
                prefix[selected.rank1(x)] = acc;
            }
        }
        let level_posts = levels
            .iter()
            .map(|&k| PredecessorSet::new(t.level_range(k).unwrap().map(|x| t.post(x) as u64)))
            .collect();

        let post_view = if options.explicit_post_view {
            let ones: Vec<usize> = (1..=n).filter(|&p| beers.contains(t.node_at_post(p))).collect();
            PostView::Explicit(BitVector::from_positions(n, &ones, Mode::Plain))
        } else {
            PostView::Sampled((0..=n / SAMPLE).map(|i| post_prefix[i * SAMPLE]).collect())
        };

        Ok(CompactIndex {
            graph,
            beers,
            delta,
            residue,
            levels,
            selected,
            selected_post,
            contracted,
            piece_marks,
            piece_grid: Grid2D::new(&piece_points),
            root_grid: Grid2D::new(&root_points),
            prefix,
            level_posts,
            post_view,
        })
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    /// Chosen residue class of selected levels.
    pub fn residue(&self) -> usize {
        self.residue
    }

    pub fn selected_levels(&self) -> &[usize] {
        &self.levels
    }

    pub fn selected_count(&self) -> usize {
        self.selected.count_ones()
    }

    pub fn contracted_tree(&self) -> &OrdinalTree {
        &self.contracted
    }

    /// Whether the piece of the `i`-th selected node holds a beer vertex other
    /// than its root.
    pub fn piece_has_beer(&self, i: usize) -> bool {
        self.piece_marks.get(i)
    }

    pub fn beers(&self) -> &BeerSet {
        &self.beers
    }

    pub fn stats(&self) -> CompactStats {
        CompactStats {
            selected_nodes: self.selected_count(),
            selected_levels: self.levels.len(),
            selected_bits: self.selected.size_in_bits() + self.selected_post.size_in_bits() + self.levels.len() * 32,
            contracted_tree_bits: self.contracted.size_in_bits() + self.piece_marks.size_in_bits(),
            grid_bits: self.piece_grid.index_bits() + self.root_grid.index_bits(),
            prefix_bits: self.prefix.len() * 32,
            predecessor_bits: self.level_posts.iter().map(PredecessorSet::size_in_bits).sum(),
            post_view_bits: match &self.post_view {
                PostView::Sampled(s) => s.len() * 32,
                PostView::Explicit(bv) => bv.size_in_bits(),
            },
        }
    }

    fn tree(&self) -> &OrdinalTree {
        self.graph.tree().expect("checked at construction")
    }

    /// Beer vertices with post-order rank at most `p`.
    fn post_rank(&self, p: usize) -> usize {
        match &self.post_view {
            PostView::Explicit(bv) => bv.rank1(p),
            PostView::Sampled(samples) => {
                let t = self.tree();
                let base = p / SAMPLE * SAMPLE;
                samples[p / SAMPLE] as usize + (base + 1..=p).filter(|&q| self.beers.contains(t.node_at_post(q))).count()
            }
        }
    }

    /// Selected nodes with post-order rank at most `p`.
    fn selected_upto(&self, p: usize) -> usize {
        self.selected_post.rank1(p)
    }

    fn level_index(&self, k: usize) -> usize {
        self.levels.binary_search(&k).unwrap()
    }

    pub fn beer_dist(&self, u: usize, v: usize) -> Result<usize> {
        let g = self.graph.graph();
        g.check_vertex(u)?;
        g.check_vertex(v)?;
        if self.beers.is_empty() {
            return Err(Error::NoBeer);
        }
        let (u, v) = (u.min(v), u.max(v));
        let dist = |a: usize, b: usize| finite(self.graph.dist(a, b).unwrap()).unwrap();
        let d = dist(u, v);
        if self.beers.contains(u) || self.beers.contains(v) {
            return Ok(d);
        }
        let mut best = usize::MAX;
        for w in [self.beers.next_after(v), self.beers.last_before(u)].into_iter().flatten() {
            best = best.min(dist(u, w) + dist(w, v));
        }
        if u < v && self.beers.count_between(u, v) > 0 {
            best = best.min(if self.preserving_exists(u, v) { d } else { d + 1 });
        }
        Ok(best)
    }

    /// Whether some beer vertex strictly between `u < v` lies on a shortest path.
    fn preserving_exists(&self, u: usize, v: usize) -> bool {
        let t = self.tree();
        let (k1, k2) = (t.depth(u), t.depth(v));
        let s1 = self.levels.iter().copied().find(|&s| s > k1);
        let s2 = self.levels.iter().copied().rev().find(|&s| s <= k2);
        let (s1, s2) = match (s1, s2) {
            (Some(a), Some(b)) if a < b => (a, b),
            _ => return scan_witness(t, &self.beers, u, v).is_some(),
        };

        // levels s2..=k2 from v upwards
        let mut vd = v;
        loop {
            let d = t.depth(vd);
            if level_witness(t, &self.beers, u, v, d, vd).is_some() {
                return true;
            }
            if d == s2 {
                break;
            }
            vd = t.parent(vd).unwrap();
        }
        let v_low = vd;

        // levels k1..s1 from the chain ancestor on level s1 upwards
        let a = t.ancestor(v_low, s1).unwrap();
        let mut vd = a;
        while t.depth(vd) > k1 {
            vd = t.parent(vd).unwrap();
            if level_witness(t, &self.beers, u, v, t.depth(vd), vd).is_some() {
                return true;
            }
        }

        // levels s1..s2 by pieces
        let first_id = self.selected.rank1(t.first_on_level(s1).unwrap());
        let end_id = self.selected.rank1(t.first_on_level(s2).unwrap());
        let ids = Interval::half_open(first_id as i64, end_id as i64);
        let (pu, pv, pa) = (t.post(u), t.post(v), t.post(a));
        let any = |y: Interval| {
            let r = Rect2::new(ids, y);
            !self.piece_grid.is_empty_in(&r).unwrap() || !self.root_grid.is_empty_in(&r).unwrap()
        };
        let below_u = self.selected_upto(pu - 1) as i64;
        let upto_a = self.selected_upto(pa) as i64;
        if pu < pv {
            // left of u: decided by the piece root alone
            if any(Interval::at_most(below_u)) {
                return true;
            }
            // right of v: pieces beyond a's subtree, then a's subtree right of the chain
            if any(Interval::above(upto_a)) {
                return true;
            }
            self.right_of_chain(a, v_low, s2) > 0
        } else {
            if upto_a < below_u && any(Interval::new(crate::range::Bound::Open(upto_a), crate::range::Bound::Closed(below_u))) {
                return true;
            }
            self.right_of_chain(a, v_low, s2) > 0
        }
    }

    /// Beer vertices in the subtree of `a` above level `s2` that lie on or
    /// right of the chain from `a` down to `v_low` (the chain node on `s2`).
    fn right_of_chain(&self, a: usize, v_low: usize, s2: usize) -> usize {
        let t = self.tree();
        let (pa, pl) = (t.post(a), t.post(v_low));
        let all = self.post_rank(pa) - self.post_rank(pl);
        let li = self.level_index(s2);
        let first = t.first_on_level(s2).unwrap();
        let k = self.level_posts[li].pred_index(pa as u64).expect("v_low precedes a in post order");
        let last_in_a = first + k;
        let deep = self.prefix[self.selected.rank1(last_in_a)] - self.prefix[self.selected.rank1(v_low)];
        all - deep as usize
    }

    pub fn size_in_bits(&self) -> usize {
        self.stats().auxiliary_bits() + self.beers.size_in_bits()
    }
}
