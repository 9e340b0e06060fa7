//! Plain-text graph files:
//!
//! ```text
//! kind: proper
//! endpoints: 000001000101001110011011011111
//! beer: 6 8
//! ```
//!
//! Interval graphs whose right endpoints do not close vertices in order add a
//! `rights:` line listing the vertex closed by each right endpoint.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::interval::IntervalGraph;
use crate::proper::ProperIntervalGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Proper,
    Interval,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Proper => "proper",
            Kind::Interval => "interval",
        })
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "proper" => Ok(Kind::Proper),
            "interval" => Ok(Kind::Interval),
            other => Err(Error::Parse { line: 1, msg: format!("unknown kind {other:?}") }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub kind: Kind,
    pub graph: IntervalGraph,
    /// `None` when the file has no beer line.
    pub beers: Option<Vec<usize>>,
}

fn parse_ids(line: usize, s: &str) -> Result<Vec<usize>> {
    s.split_whitespace().map(|t| t.parse().map_err(|_| Error::Parse { line, msg: format!("bad vertex id {t:?}") })).collect()
}

impl GraphFile {
    pub fn new(kind: Kind, graph: IntervalGraph, beers: Option<Vec<usize>>) -> Self {
        GraphFile { kind, graph, beers }
    }

    pub fn proper(&self) -> Result<ProperIntervalGraph> {
        ProperIntervalGraph::new(self.graph.clone())
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut kind = None;
        let mut endpoints = None;
        let mut rights = None;
        let mut beers = None;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let raw = raw.trim();
            if raw.is_empty() {
                continue;
            }
            let (key, value) = raw.split_once(':').ok_or_else(|| Error::Parse { line, msg: format!("expected `key: value`, got {raw:?}") })?;
            let value = value.trim();
            match key.trim() {
                "kind" => kind = Some(value.parse::<Kind>().map_err(|_| Error::Parse { line, msg: format!("unknown kind {value:?}") })?),
                "endpoints" => endpoints = Some((line, value.to_string())),
                "rights" => rights = Some(parse_ids(line, value)?),
                "beer" => beers = Some((line, parse_ids(line, value)?)),
                other => return Err(Error::Parse { line, msg: format!("unknown key {other:?}") }),
            }
        }
        let kind = kind.ok_or(Error::Parse { line: 1, msg: "missing kind".into() })?;
        let (eline, s) = endpoints.ok_or(Error::Parse { line: 2, msg: "missing endpoints".into() })?;
        let graph = IntervalGraph::from_endpoints(&s, rights.as_deref()).map_err(|e| Error::Parse { line: eline, msg: e.to_string() })?;
        if kind == Kind::Proper && !graph.is_proper() {
            return Err(Error::Parse { line: eline, msg: "graph is not proper".into() });
        }
        let beers = match beers {
            Some((line, ids)) => {
                if ids.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(Error::Parse { line, msg: "beer ids must be strictly increasing".into() });
                }
                if let Some(&b) = ids.iter().find(|&&b| b == 0 || b > graph.len()) {
                    return Err(Error::Parse { line, msg: format!("beer id {b} outside 1..={}", graph.len()) });
                }
                Some(ids)
            }
            None => None,
        };
        Ok(GraphFile { kind, graph, beers })
    }
}

impl FromStr for GraphFile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for GraphFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "kind: {}", self.kind)?;
        writeln!(f, "endpoints: {}", self.graph.endpoint_string())?;
        let owners = self.graph.right_owners();
        if owners.iter().enumerate().any(|(i, &v)| v != i + 1) {
            writeln!(f, "rights: {}", owners.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))?;
        }
        if let Some(b) = &self.beers {
            let ids = b.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
            if ids.is_empty() {
                writeln!(f, "beer:")?;
            } else {
                writeln!(f, "beer: {ids}")?;
            }
        }
        Ok(())
    }
}
