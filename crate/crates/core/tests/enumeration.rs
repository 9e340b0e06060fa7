use beergraph::enumeration::*;
use beergraph::oracle::{orbit_count, AdjacencyList};
use num_bigint::BigUint;
use rayon::prelude::*;

fn twins_by_neighbourhood(adj: &AdjacencyList) -> Vec<Vec<usize>> {
    let n = adj.len();
    let closed = |v: usize| {
        let mut c = adj.neighbours(v).to_vec();
        c.push(v);
        c.sort_unstable();
        c
    };
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 1..=n {
        match classes.iter_mut().find(|c| closed(c[0]) == closed(v)) {
            Some(c) => c.push(v),
            None => classes.push(vec![v]),
        }
    }
    classes
}

fn clique_symmetric(endpoints: &str) -> bool {
    let mirrored: String = endpoints.chars().rev().map(|c| if c == '0' { '1' } else { '0' }).collect();
    mirrored == endpoints
}

#[test]
fn weight_matches_orbits() {
    for n in 1..=8 {
        let graphs: Vec<_> = enum_dyck_graphs(n, false).unwrap().collect();
        graphs.par_iter().for_each(|(p, g)| {
            let adj = AdjacencyList::from_graph(g.graph());
            let orbits = BigUint::from(orbit_count(&adj).unwrap());
            if g.is_connected() {
                let (classes, weight) = twin_blocks_and_weight(g).unwrap();
                assert_eq!(classes.blocks(), twins_by_neighbourhood(&adj).as_slice(), "{p}");
                if clique_symmetric(&p.to_string()) {
                    assert!(weight >= orbits, "{p}");
                } else {
                    assert_eq!(weight, orbits, "{p}");
                }
            }
        });
    }
}

#[test]
fn trajectory_print() {
    for row in trajectories(30) {
        println!("{} {:?} {}", row.n, row.ratio, row.root);
    }
    let s = weighted_series(501);
    println!("{}", s.growth(500));
}
