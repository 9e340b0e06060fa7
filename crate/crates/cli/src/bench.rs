use std::io::Write;
use std::sync::Arc;
use std::time::{Duration, Instant};

use beergraph::{BeerIndex, CompactIndex, CompactOptions, GraphFile, IntervalBeerIndex, Kind, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::{Failed, Outcome};

#[derive(Serialize)]
struct GraphRecord {
    record: &'static str,
    kind: String,
    n: usize,
    beers: usize,
    graph_bits: usize,
    beer_bits: usize,
    bits_per_vertex: f64,
}

#[derive(Serialize)]
struct BuildRecord {
    record: &'static str,
    engine: String,
    build_ms: f64,
    bits: usize,
    bits_per_vertex: f64,
}

#[derive(Serialize)]
struct CompactRecord {
    record: &'static str,
    delta: usize,
    build_ms: f64,
    selected_nodes: usize,
    selected_bound: usize,
    selected_levels: usize,
    selected_bits: usize,
    contracted_tree_bits: usize,
    grid_bits: usize,
    prefix_bits: usize,
    predecessor_bits: usize,
    post_view_bits: usize,
    auxiliary_bits: usize,
    bits_per_vertex: f64,
}

#[derive(Serialize)]
struct LatencyRecord {
    record: &'static str,
    engine: String,
    queries: usize,
    p50_ns: u128,
    p90_ns: u128,
    p99_ns: u128,
    max_ns: u128,
}

#[derive(Serialize)]
struct SweepRecord {
    record: &'static str,
    deltas: Vec<usize>,
    selected_nodes: Vec<usize>,
    monotone: bool,
    within_bound: bool,
}

fn millis(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

fn emit<T: Serialize>(out: &mut dyn Write, record: &T) -> std::io::Result<()> {
    writeln!(out, "{}", serde_json::to_string(record).expect("records serialize"))
}

fn latency(engine: String, pairs: &[(usize, usize)], query: impl Fn(usize, usize) -> Result<usize>) -> Result<Option<LatencyRecord>> {
    if pairs.is_empty() {
        return Ok(None);
    }
    let mut times = Vec::with_capacity(pairs.len());
    for &(u, v) in pairs {
        let start = Instant::now();
        std::hint::black_box(query(u, v)?);
        times.push(start.elapsed().as_nanos());
    }
    times.sort_unstable();
    let at = |q: f64| times[((times.len() - 1) as f64 * q).round() as usize];
    Ok(Some(LatencyRecord { record: "latency", engine, queries: pairs.len(), p50_ns: at(0.5), p90_ns: at(0.9), p99_ns: at(0.99), max_ns: at(1.0) }))
}

pub fn run(file: &GraphFile, queries: usize, seed: u64, deltas: &[usize], out: &mut dyn Write) -> Outcome {
    let g = &file.graph;
    let n = g.len();
    let mut beers = file.beers.clone().unwrap_or_default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if beers.is_empty() {
        beers.push(rng.gen_range(1..=n));
    }
    let pairs: Vec<(usize, usize)> = (0..queries).map(|_| (rng.gen_range(1..=n), rng.gen_range(1..=n))).collect();
    let per_vertex = |bits: usize| bits as f64 / n as f64;

    let beer_bits = beergraph::BeerSet::new(n, &beers)?.size_in_bits();
    emit(out, &GraphRecord { record: "graph", kind: file.kind.to_string(), n, beers: beers.len(), graph_bits: g.size_in_bits(), beer_bits, bits_per_vertex: per_vertex(g.size_in_bits()) })?;

    if file.kind == Kind::Interval {
        let start = Instant::now();
        let idx = IntervalBeerIndex::new(Arc::new(g.clone()), &beers)?;
        let build = start.elapsed();
        let bits = idx.size_in_bits();
        emit(out, &BuildRecord { record: "build", engine: "interval".into(), build_ms: millis(build), bits, bits_per_vertex: per_vertex(bits) })?;
        if let Some(r) = latency("interval".into(), &pairs, |u, v| idx.beer_dist(u, v))? {
            emit(out, &r)?;
        }
        return Ok(());
    }

    if let Some(&d) = deltas.iter().find(|&&d| d < 2) {
        return Err(Failed::Usage(format!("--delta values must be at least 2, got {d}")));
    }
    let pg = Arc::new(file.proper()?);
    let start = Instant::now();
    let basic = BeerIndex::new(pg.clone(), &beers)?;
    let build = start.elapsed();
    let bits = basic.size_in_bits();
    emit(out, &BuildRecord { record: "build", engine: "basic".into(), build_ms: millis(build), bits, bits_per_vertex: per_vertex(bits) })?;
    if let Some(r) = latency("basic".into(), &pairs, |u, v| basic.beer_dist(u, v))? {
        emit(out, &r)?;
    }

    let mut selected = Vec::new();
    let mut within_bound = true;
    for &delta in deltas {
        let start = Instant::now();
        let compact = CompactIndex::new(pg.clone(), &beers, CompactOptions::new(delta))?;
        let build = start.elapsed();
        let s = compact.stats();
        let bound = n.div_ceil(delta) + 1;
        within_bound &= s.selected_nodes <= bound;
        selected.push(s.selected_nodes);
        emit(
            out,
            &CompactRecord {
                record: "compact",
                delta,
                build_ms: millis(build),
                selected_nodes: s.selected_nodes,
                selected_bound: bound,
                selected_levels: s.selected_levels,
                selected_bits: s.selected_bits,
                contracted_tree_bits: s.contracted_tree_bits,
                grid_bits: s.grid_bits,
                prefix_bits: s.prefix_bits,
                predecessor_bits: s.predecessor_bits,
                post_view_bits: s.post_view_bits,
                auxiliary_bits: s.auxiliary_bits(),
                bits_per_vertex: per_vertex(compact.size_in_bits()),
            },
        )?;
        if let Some(r) = latency(format!("compact delta {delta}"), &pairs, |u, v| compact.beer_dist(u, v))? {
            emit(out, &r)?;
        }
    }

    let mut order: Vec<usize> = (0..deltas.len()).collect();
    order.sort_by_key(|&i| deltas[i]);
    let monotone = order.windows(2).all(|w| selected[w[0]] >= selected[w[1]]);
    emit(out, &SweepRecord { record: "sweep", deltas: deltas.to_vec(), selected_nodes: selected, monotone, within_bound })?;
    Ok(())
}
