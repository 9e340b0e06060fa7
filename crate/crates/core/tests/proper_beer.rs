use std::sync::Arc;

use beergraph::beer_proper::{BeerIndex, CompactIndex, CompactOptions};
use beergraph::generate::{random_beers, random_proper};
use beergraph::interval::Distance;
use beergraph::oracle::{validate_path, AdjacencyList, DistanceMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

#[test]
fn random_graphs_match_oracle() {
    (0..300u64).into_par_iter().for_each(|seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = 2 + seed as usize % 150;
        let g = Arc::new(random_proper(n, &mut rng));
        let mut beers = random_beers(n, rng.gen_range(0.01..0.3), &mut rng);
        if beers.is_empty() {
            beers.push(rng.gen_range(1..=n));
        }
        let adj = AdjacencyList::from_graph(g.graph());
        let m = DistanceMatrix::new(&adj);
        let basic = BeerIndex::new(g.clone(), &beers).unwrap();
        let scan = BeerIndex::new(g.clone(), &beers).unwrap().with_scan_threshold(usize::MAX);
        let compact: Vec<CompactIndex> = [2, 3, 5].iter().map(|&d| CompactIndex::new(g.clone(), &beers, CompactOptions::new(d)).unwrap()).collect();
        for u in 1..=n {
            for v in 1..=n {
                let want = m.beer_dist(&beers, u, v);
                let got = basic.beer_dist(u, v).unwrap();
                assert_eq!(Distance::Finite(got), want, "seed {seed} ({u},{v})");
                assert_eq!(scan.beer_dist(u, v).unwrap(), got);
                for c in &compact {
                    assert_eq!(c.beer_dist(u, v).unwrap(), got, "seed {seed} delta {} ({u},{v})", c.delta());
                }
                let path = basic.beer_path(u, v).unwrap();
                validate_path(&adj, &beers, &path, u, v, got).unwrap();
            }
        }
    });
}
