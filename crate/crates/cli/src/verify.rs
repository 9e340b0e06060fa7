use std::io::Write;
use std::sync::Arc;

use beergraph::oracle::{self, validate_path, AdjacencyList};
use beergraph::{BeerIndex, CompactIndex, CompactOptions, GraphFile, IntervalBeerIndex, IntervalGraph, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::{generate, Failed, KindArg, Outcome};

/// How many seeds are tried at each halved size while minimizing.
const SHRINK_SEEDS: u64 = 64;

/// A failing instance: the graph, its beer set and the query pair.
#[derive(Debug, Clone)]
pub struct Failure {
    pub seed: u64,
    pub file: GraphFile,
    pub u: usize,
    pub v: usize,
    pub reason: String,
}

/// An engine's name, its beer distance and, when it produces one, its path.
type Answer = (String, Result<usize>, Option<Vec<usize>>);

fn check(g: &IntervalGraph, beers: &[usize], u: usize, v: usize, answers: &[Answer]) -> Option<String> {
    let want = oracle::beer_dist(g, beers, u, v).finite()?;
    let adj = AdjacencyList::from_graph(g);
    for (engine, got, path) in answers {
        match got {
            Err(e) => return Some(format!("{engine}: {e}")),
            Ok(d) if *d != want => return Some(format!("{engine}: beer_dist {d}, breadth-first search {want}")),
            Ok(d) => {
                if let Some(p) = path {
                    if let Err(e) = validate_path(&adj, beers, p, u, v, *d) {
                        return Some(format!("{engine}: path {p:?} rejected: {e:?}"));
                    }
                }
            }
        }
    }
    None
}

/// Runs trial `seed` on `n` vertices: one random graph, beer set and query,
/// answered by every engine and compared against breadth-first search.
pub fn run_trial(kind: KindArg, n: usize, seed: u64, deltas: &[usize]) -> Option<Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let density = rng.gen_range(0.0..0.5);
    let mut file = generate(kind, n, density, rng.gen()).ok()?;
    let beers = file.beers.get_or_insert_with(Vec::new);
    if beers.is_empty() {
        beers.push(rng.gen_range(1..=n));
    }
    let beers = beers.clone();
    let (u, v) = (rng.gen_range(1..=n), rng.gen_range(1..=n));
    let g = &file.graph;

    let mut reason = None;
    let d = g.dist(u, v);
    if d.as_ref().ok() != Some(&oracle::dist(g, u, v)) {
        reason = Some(format!("dist {d:?}, breadth-first search {:?}", oracle::dist(g, u, v)));
    }
    if reason.is_none() {
        let mut answers = Vec::new();
        match kind {
            KindArg::Proper => {
                let pg = Arc::new(file.proper().ok()?);
                match BeerIndex::new(pg.clone(), &beers) {
                    Ok(idx) => answers.push(("basic".to_string(), idx.beer_dist(u, v), idx.beer_path(u, v).ok())),
                    Err(e) => answers.push(("basic".to_string(), Err(e), None)),
                }
                for &delta in deltas {
                    let got = CompactIndex::new(pg.clone(), &beers, CompactOptions::new(delta)).and_then(|c| c.beer_dist(u, v));
                    answers.push((format!("compact delta {delta}"), got, None));
                }
            }
            KindArg::Interval => match IntervalBeerIndex::new(Arc::new(g.clone()), &beers) {
                Ok(idx) => answers.push(("interval".to_string(), idx.beer_dist(u, v), idx.beer_path(u, v).ok())),
                Err(e) => answers.push(("interval".to_string(), Err(e), None)),
            },
        }
        reason = check(g, &beers, u, v, &answers);
    }
    reason.map(|reason| Failure { seed, file, u, v, reason })
}

/// Halves `n` while some seed near the failing one still fails.
fn minimize(kind: KindArg, first: Failure, deltas: &[usize]) -> Failure {
    let mut best = first;
    let mut n = best.file.graph.len();
    while n > 1 {
        n /= 2;
        let found = (best.seed..best.seed + SHRINK_SEEDS).into_par_iter().filter_map(|s| run_trial(kind, n, s, deltas)).min_by_key(|f| f.seed);
        match found {
            Some(f) => best = f,
            None => break,
        }
    }
    best
}

#[derive(Serialize)]
struct Summary<'a> {
    kind: &'a str,
    n: usize,
    trials: u64,
    seed: u64,
    deltas: &'a [usize],
    failures: usize,
    status: &'a str,
}

#[derive(Serialize)]
struct Counterexample<'a> {
    seed: u64,
    n: usize,
    u: usize,
    v: usize,
    reason: &'a str,
}

pub fn run(kind: KindArg, n: usize, trials: u64, seed: u64, deltas: &[usize], out: &mut dyn Write) -> Outcome {
    if n == 0 {
        return Err(Failed::Usage("--n must be at least 1".into()));
    }
    if let Some(&d) = deltas.iter().find(|&&d| d < 2) {
        return Err(Failed::Usage(format!("--delta values must be at least 2, got {d}")));
    }
    let failures: Vec<Failure> = (0..trials).into_par_iter().filter_map(|i| run_trial(kind, n, seed.wrapping_add(i), deltas)).collect();
    let first = failures.iter().min_by_key(|f| f.seed).cloned();
    let summary = Summary {
        kind: match kind {
            KindArg::Proper => "proper",
            KindArg::Interval => "interval",
        },
        n,
        trials,
        seed,
        deltas,
        failures: failures.len(),
        status: if first.is_none() { "pass" } else { "fail" },
    };
    writeln!(out, "{}", serde_json::to_string(&summary).expect("records serialize"))?;
    match first {
        None => Ok(()),
        Some(f) => {
            let small = minimize(kind, f, deltas);
            let record = Counterexample { seed: small.seed, n: small.file.graph.len(), u: small.u, v: small.v, reason: &small.reason };
            writeln!(out, "{}", serde_json::to_string(&record).expect("records serialize"))?;
            write!(out, "{}", small.file)?;
            Err(Failed::Verification)
        }
    }
}
