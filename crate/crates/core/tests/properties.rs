use std::sync::Arc;

use beergraph::generate::{random_beers, random_interval_parts, random_proper};
use beergraph::oracle::{self, AdjacencyList, DistanceMatrix};
use beergraph::{
    BeerIndex, BitVector, CompactIndex, CompactOptions, Distance, Grid2D, GraphFile, IntervalBeerIndex, IntervalGraph, Kind, Mode, Order,
    OrdinalTree, Rect2, Interval,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn mode() -> impl Strategy<Value = Mode> {
    prop_oneof![Just(Mode::Plain), Just(Mode::Compressed)]
}

/// Parent arrays in level order: each vertex hangs below an earlier one and
/// parents never decrease.
fn level_order_parents() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..4, 0..60).prop_map(|gaps| {
        let mut parents = vec![0];
        let mut p = 1;
        for (i, g) in gaps.into_iter().enumerate() {
            p = (p + usize::from(g == 0)).min(i + 1);
            parents.push(p);
        }
        parents
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rank_select_invariants(bits in prop::collection::vec(any::<bool>(), 0..2000), mode in mode()) {
        let bv = BitVector::from_bits(bits.iter().copied(), mode);
        prop_assert_eq!(bv.len(), bits.len());
        prop_assert_eq!(bv.count_ones(), bits.iter().filter(|&&b| b).count());
        for i in 0..=bits.len() {
            prop_assert_eq!(bv.rank1(i) + bv.rank0(i), i);
        }
        for j in 1..=bv.count_ones() {
            let p = bv.select1(j).unwrap();
            prop_assert!(bv.get(p));
            prop_assert_eq!(bv.rank1(p), j);
        }
        prop_assert_eq!(bv.select1(bv.count_ones() + 1), None);
    }

    #[test]
    fn tree_orders_are_consistent(parents in level_order_parents()) {
        let t = OrdinalTree::from_parents(&parents).unwrap();
        let n = t.len();
        for v in 1..=n {
            prop_assert_eq!(t.node_at_post(t.post(v)), v);
            prop_assert_eq!(t.node_at_pre(t.pre(v)), v);
            prop_assert_eq!(t.convert(t.pre(v), Order::Pre, Order::Post).unwrap(), t.post(v));
            let (lo, hi) = t.subtree_post_interval(v);
            prop_assert_eq!(hi + 1 - lo, t.subtree_size(v));
            for d in 0..=t.depth(v) {
                let a = t.ancestor(v, d).unwrap();
                prop_assert_eq!(t.depth(a), d);
                prop_assert!(t.is_ancestor(a, v));
            }
        }
    }

    #[test]
    fn grid_matches_scan(
        points in prop::collection::vec((0usize..64, 0usize..64), 0..200),
        x in (-2i64..66, -2i64..66),
        y in (-2i64..66, -2i64..66),
    ) {
        let grid = Grid2D::new(&points);
        let rect = Rect2::new(Interval::closed(x.0.min(x.1), x.0.max(x.1)), Interval::closed(y.0.min(y.1), y.0.max(y.1)));
        let mut want: Vec<_> = points.iter().copied().filter(|&p| rect.contains(p)).collect();
        want.sort_unstable();
        prop_assert_eq!(grid.count(&rect).unwrap(), want.len());
        prop_assert_eq!(grid.leftmost(&rect).unwrap(), want.first().copied());
    }

    #[test]
    fn interval_dist_matches_bfs(n in 1usize..60, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (s, rights) = random_interval_parts(n, &mut rng);
        let g = IntervalGraph::from_endpoints(&s, Some(&rights)).unwrap();
        let m = DistanceMatrix::new(&AdjacencyList::from_graph(&g));
        for u in 1..=n {
            for v in 1..=n {
                prop_assert_eq!(g.dist(u, v).unwrap(), m.get(u, v));
            }
        }
    }

    #[test]
    fn graph_file_round_trip(n in 1usize..40, seed in any::<u64>(), proper in any::<bool>(), density in 0.0f64..1.0) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (kind, graph) = if proper {
            (Kind::Proper, random_proper(n, &mut rng).graph().clone())
        } else {
            let (s, r) = random_interval_parts(n, &mut rng);
            (Kind::Interval, IntervalGraph::from_endpoints(&s, Some(&r)).unwrap())
        };
        let file = GraphFile::new(kind, graph, Some(random_beers(n, density, &mut rng)));
        let back = GraphFile::parse(&file.to_string()).unwrap();
        prop_assert_eq!(back, file);
    }

    #[test]
    fn compact_matches_basic(n in 1usize..120, seed in any::<u64>(), delta in 2usize..9) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = Arc::new(random_proper(n, &mut rng));
        let mut beers = random_beers(n, 0.1, &mut rng);
        if beers.is_empty() {
            beers.push(1 + seed as usize % n);
        }
        let basic = BeerIndex::new(g.clone(), &beers).unwrap();
        let compact = CompactIndex::new(g, &beers, CompactOptions::new(delta)).unwrap();
        for u in (1..=n).step_by(3) {
            for v in 1..=n {
                prop_assert_eq!(compact.beer_dist(u, v).unwrap(), basic.beer_dist(u, v).unwrap());
            }
        }
    }

    #[test]
    fn interval_beer_matches_oracle(n in 1usize..50, seed in any::<u64>(), density in 0.01f64..0.5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (s, r) = random_interval_parts(n, &mut rng);
        let g = Arc::new(IntervalGraph::from_endpoints(&s, Some(&r)).unwrap());
        let mut beers = random_beers(n, density, &mut rng);
        if beers.is_empty() {
            beers.push(n);
        }
        let idx = IntervalBeerIndex::new(g.clone(), &beers).unwrap();
        for u in 1..=n {
            for v in 1..=n {
                prop_assert_eq!(Distance::Finite(idx.beer_dist(u, v).unwrap()), oracle::beer_dist(&g, &beers, u, v));
            }
        }
    }
}
