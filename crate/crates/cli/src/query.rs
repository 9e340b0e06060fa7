use std::io::Write;
use std::sync::Arc;

use beergraph::{BeerIndex, CompactIndex, CompactOptions, Distance, GraphFile, IntervalBeerIndex, Kind};
use serde::Serialize;
use serde_json::Value;

use crate::{Failed, Op, Outcome};

#[derive(Serialize)]
struct Record<'a> {
    op: &'a str,
    u: usize,
    v: usize,
    result: Value,
}

fn distance(d: Distance) -> Value {
    d.finite().map_or(Value::Null, Value::from)
}

pub fn answer(file: &GraphFile, op: Op, u: usize, v: usize, compact: Option<usize>) -> Result<Value, Failed> {
    let g = &file.graph;
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if compact.is_some() && (file.kind != Kind::Proper || op != Op::BeerDist) {
        return Err(Failed::Usage("--compact answers beer_dist on proper graphs only".into()));
    }
    match op {
        Op::Dist => return Ok(distance(g.dist(u, v)?)),
        Op::ShortestPath => return Ok(g.shortest_path(u, v)?.map_or(Value::Null, Value::from)),
        Op::BeerDist | Op::BeerShortestPath => {}
    }
    let beers = file.beers.as_deref().ok_or_else(|| Failed::Usage("graph file has no beer line".into()))?;
    let want_path = op == Op::BeerShortestPath;
    let result = match file.kind {
        Kind::Proper => {
            let pg = Arc::new(file.proper()?);
            if let Some(delta) = compact {
                Value::from(CompactIndex::new(pg, beers, CompactOptions::new(delta))?.beer_dist(u, v)?)
            } else {
                let idx = BeerIndex::new(pg, beers)?;
                if want_path { Value::from(idx.beer_path(u, v)?) } else { Value::from(idx.beer_dist(u, v)?) }
            }
        }
        Kind::Interval => {
            let idx = IntervalBeerIndex::new(Arc::new(g.clone()), beers)?;
            if want_path { Value::from(idx.beer_path(u, v)?) } else { Value::from(idx.beer_dist(u, v)?) }
        }
    };
    Ok(result)
}

pub fn run(file: &GraphFile, op: Op, u: usize, v: usize, compact: Option<usize>, out: &mut dyn Write) -> Outcome {
    let result = answer(file, op, u, v, compact)?;
    let line = serde_json::to_string(&Record { op: op.name(), u, v, result }).expect("records serialize");
    writeln!(out, "{line}")?;
    Ok(())
}
