//! Brute-force reference answers for testing: BFS distances, beer distances,
//! path validation and beer-pattern orbit counting.

use std::collections::VecDeque;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::interval::{Distance, IntervalGraph};

/// Symmetric, irreflexive adjacency lists with sorted neighbours.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyList {
    adj: Vec<Vec<usize>>,
}

impl AdjacencyList {
    /// Compares every pair of intervals directly.
    pub fn from_graph(g: &IntervalGraph) -> Self {
        let n = g.len();
        let mut adj = vec![Vec::new(); n + 1];
        for u in 1..=n {
            for v in u + 1..=n {
                if g.left(u).max(g.left(v)) < g.right(u).min(g.right(v)) {
                    adj[u].push(v);
                    adj[v].push(u);
                }
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        AdjacencyList { adj }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![Vec::new(); n + 1];
        for &(u, v) in edges {
            if u != v && !adj[u].contains(&v) {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        AdjacencyList { adj }
    }

    pub fn len(&self) -> usize {
        self.adj.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn bfs(&self, s: usize) -> Vec<Distance> {
        let mut dist = vec![Distance::Infinite; self.adj.len()];
        dist[s] = Distance::Finite(0);
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].finite().unwrap();
            for &y in &self.adj[x] {
                if dist[y] == Distance::Infinite {
                    dist[y] = Distance::Finite(d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn dist(&self, u: usize, v: usize) -> Distance {
        self.bfs(u)[v]
    }
}

/// All-pairs BFS distances, indexed `[u][v]` from 1.
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    rows: Vec<Vec<Distance>>,
}

impl DistanceMatrix {
    pub fn new(adj: &AdjacencyList) -> Self {
        let mut rows = vec![Vec::new()];
        rows.extend((1..=adj.len()).map(|s| adj.bfs(s)));
        DistanceMatrix { rows }
    }

    pub fn get(&self, u: usize, v: usize) -> Distance {
        self.rows[u][v]
    }

    /// `min over b of dist(u, b) + dist(b, v)`; infinite for an empty set.
    pub fn beer_dist(&self, beers: &[usize], u: usize, v: usize) -> Distance {
        beers.iter().map(|&b| self.get(u, b) + self.get(b, v)).min().unwrap_or(Distance::Infinite)
    }

    /// Excess `dist(u, w) + dist(w, v) - dist(u, v)`, or `None` when infinite.
    pub fn classify(&self, u: usize, w: usize, v: usize) -> Option<usize> {
        let through = (self.get(u, w) + self.get(w, v)).finite()?;
        Some(through - self.get(u, v).finite()?)
    }
}

pub fn dist(g: &IntervalGraph, u: usize, v: usize) -> Distance {
    AdjacencyList::from_graph(g).dist(u, v)
}

pub fn beer_dist(g: &IntervalGraph, beers: &[usize], u: usize, v: usize) -> Distance {
    let adj = AdjacencyList::from_graph(g);
    let (du, dv) = (adj.bfs(u), adj.bfs(v));
    beers.iter().map(|&b| du[b] + dv[b]).min().unwrap_or(Distance::Infinite)
}

pub fn classify(g: &IntervalGraph, u: usize, w: usize, v: usize) -> Option<usize> {
    let adj = AdjacencyList::from_graph(g);
    let (du, dv) = (adj.bfs(u), adj.bfs(v));
    Some((du[w] + dv[w]).finite()? - du[v].finite()?)
}

/// Why a claimed beer path was rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PathDefect {
    Empty,
    WrongEndpoints { first: usize, last: usize },
    NotAdjacent { at: usize, a: usize, b: usize },
    NoBeer,
    WrongLength { expected: usize, actual: usize },
}

/// Checks endpoints, adjacency of consecutive vertices, beer membership and
/// length. Vertices may repeat.
pub fn validate_path(adj: &AdjacencyList, beers: &[usize], path: &[usize], u: usize, v: usize, expected_len: usize) -> std::result::Result<(), PathDefect> {
    let (Some(&first), Some(&last)) = (path.first(), path.last()) else {
        return Err(PathDefect::Empty);
    };
    if first != u || last != v {
        return Err(PathDefect::WrongEndpoints { first, last });
    }
    for (i, w) in path.windows(2).enumerate() {
        if !adj.adjacent(w[0], w[1]) {
            return Err(PathDefect::NotAdjacent { at: i, a: w[0], b: w[1] });
        }
    }
    if !path.iter().any(|x| beers.contains(x)) {
        return Err(PathDefect::NoBeer);
    }
    if path.len() - 1 != expected_len {
        return Err(PathDefect::WrongLength { expected: expected_len, actual: path.len() - 1 });
    }
    Ok(())
}

pub const MAX_ORBIT_VERTICES: usize = 8;

/// All automorphisms, as permutations `p` with `p[v]` the image of `v`.
pub fn automorphisms(adj: &AdjacencyList) -> Result<Vec<Vec<usize>>> {
    let n = adj.len();
    if n > MAX_ORBIT_VERTICES {
        return Err(Error::LimitExceeded { what: "orbit counting vertices", max: MAX_ORBIT_VERTICES, got: n });
    }
    let degree: Vec<usize> = (0..=n).map(|v| if v == 0 { 0 } else { adj.neighbours(v).len() }).collect();
    let mut autos = Vec::new();
    for perm in (1..=n).permutations(n) {
        let p: Vec<usize> = std::iter::once(0).chain(perm).collect();
        if (1..=n).any(|v| degree[p[v]] != degree[v]) {
            continue;
        }
        if (1..=n).all(|u| adj.neighbours(u).iter().all(|&v| adj.adjacent(p[u], p[v]))) {
            autos.push(p);
        }
    }
    Ok(autos)
}

fn cycles(p: &[usize]) -> u32 {
    let n = p.len() - 1;
    let mut seen = vec![false; n + 1];
    let mut count = 0;
    for s in 1..=n {
        if !seen[s] {
            count += 1;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = p[x];
            }
        }
    }
    count
}

/// Beer sets up to isomorphism, by Burnside's lemma over the automorphism group.
pub fn orbit_count(adj: &AdjacencyList) -> Result<u64> {
    let autos = automorphisms(adj)?;
    let total: u64 = autos.iter().map(|p| 1u64 << cycles(p)).sum();
    Ok(total / autos.len() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> AdjacencyList {
        AdjacencyList::from_edges(n, &(1..n).map(|i| (i, i + 1)).collect::<Vec<_>>())
    }

    #[test]
    fn orbits_of_small_graphs() {
        let k3 = AdjacencyList::from_edges(3, &[(1, 2), (2, 3), (1, 3)]);
        assert_eq!(orbit_count(&k3).unwrap(), 4);
        assert_eq!(orbit_count(&path(3)).unwrap(), 6);
        assert_eq!(orbit_count(&AdjacencyList::from_edges(1, &[])).unwrap(), 2);
        assert!(orbit_count(&path(9)).is_err());
    }

    #[test]
    fn star_distances() {
        let g = IntervalGraph::from_intervals(&[(1, 8), (2, 3), (4, 5), (6, 7)]).unwrap();
        assert_eq!(dist(&g, 2, 4), Distance::Finite(2));
        assert_eq!(dist(&g, 3, 3), Distance::Finite(0));
        assert_eq!(beer_dist(&g, &[3], 2, 4), Distance::Finite(4));
        assert_eq!(classify(&g, 2, 3, 4), Some(2));
        let apart = IntervalGraph::parse("0101").unwrap();
        assert_eq!(dist(&apart, 1, 2), Distance::Infinite);
        assert_eq!(beer_dist(&apart, &[], 1, 1), Distance::Infinite);
    }

    #[test]
    fn path_validation() {
        let g = IntervalGraph::parse("000001000101001110011011011111").unwrap();
        let adj = AdjacencyList::from_graph(&g);
        assert_eq!(validate_path(&adj, &[6], &[13, 7, 6, 3], 13, 3, 3), Ok(()));
        assert_eq!(validate_path(&adj, &[6], &[13, 7, 3], 13, 3, 2), Err(PathDefect::NoBeer));
        assert_eq!(validate_path(&adj, &[8], &[13, 8, 3], 13, 3, 2), Ok(()));
        assert!(matches!(validate_path(&adj, &[6], &[13, 6, 3], 13, 3, 2), Err(PathDefect::NotAdjacent { .. })));
        assert_eq!(classify(&g, 3, 6, 13), Some(1));
        assert_eq!(classify(&g, 3, 8, 13), Some(0));
    }
}
