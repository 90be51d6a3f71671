//! Enumeration of a whole connected crystal component and its export.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::crystal::{crystal_ptab, is_highest_weight, is_lowest_weight, Direction};
use crate::error::{Error, Result};
use crate::grid::Ptableau;
use crate::rsk::ptab_rsk;

pub const DEFAULT_LIMIT: usize = 100_000;

/// `from --f_i--> to`, by node index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Edge {
    pub from: usize,
    pub i: usize,
    pub to: usize,
}

/// Nodes are listed breadth-first from the source along lowering edges, each
/// layer sorted by canonical text, so the listing does not depend on the seed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrystalComponent {
    pub nodes: Vec<Ptableau>,
    pub edges: Vec<Edge>,
    pub source: usize,
    pub sink: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
}

fn neighbors(t: &Ptableau, dirs: &[Direction]) -> Vec<(usize, Ptableau)> {
    let mut out = Vec::new();
    for &dir in dirs {
        for i in 1..t.n_rows() {
            if let Some(next) = crystal_ptab(t, i, dir).expect("index in range") {
                out.push((i, next));
            }
        }
    }
    out
}

/// Breadth-first layers from `start`, expanding each layer in parallel.
fn layers(start: &Ptableau, dirs: &[Direction], max_nodes: usize) -> Result<Vec<Vec<Ptableau>>> {
    let mut seen: HashSet<Ptableau> = HashSet::from([start.clone()]);
    let mut out = vec![vec![start.clone()]];
    loop {
        let frontier = out.last().unwrap();
        let found: Vec<Vec<(usize, Ptableau)>> = frontier.par_iter().map(|t| neighbors(t, dirs)).collect();
        let mut next: Vec<Ptableau> = Vec::new();
        for (_, t) in found.into_iter().flatten() {
            if seen.insert(t.clone()) {
                next.push(t);
            }
        }
        if seen.len() > max_nodes {
            let mut partial: Vec<Ptableau> = seen.into_iter().collect();
            partial.sort_by_cached_key(|t| t.to_string());
            return Err(Error::LimitExceeded { limit: max_nodes, partial });
        }
        if next.is_empty() {
            return Ok(out);
        }
        next.sort_by_cached_key(|t| t.to_string());
        out.push(next);
    }
}

/// All nodes reachable from `seed` by raising and lowering operators.
pub fn explore(seed: &Ptableau, max_nodes: usize) -> Result<CrystalComponent> {
    let all = layers(seed, &[Direction::Raise, Direction::Lower], max_nodes)?;
    let sources: Vec<&Ptableau> = all.iter().flatten().filter(|t| is_highest_weight(t)).collect();
    let [source] = sources.as_slice() else {
        return Err(Error::Internal(format!("component has {} highest-weight nodes", sources.len())));
    };
    let nodes: Vec<Ptableau> = layers(source, &[Direction::Lower], max_nodes)?.into_iter().flatten().collect();
    let index: HashMap<&Ptableau, usize> = nodes.iter().enumerate().map(|(k, t)| (t, k)).collect();
    let mut edges = Vec::new();
    for (from, t) in nodes.iter().enumerate() {
        for (i, next) in neighbors(t, &[Direction::Lower]) {
            edges.push(Edge { from, i, to: index[&next] });
        }
    }
    let sinks: Vec<usize> = (0..nodes.len()).filter(|&k| is_lowest_weight(&nodes[k])).collect();
    let [sink] = sinks.as_slice() else {
        return Err(Error::Internal(format!("component has {} lowest-weight nodes", sinks.len())));
    };
    Ok(CrystalComponent { source: 0, sink: *sink, nodes, edges })
}

/// The distinguished-crystal representative `PT` of the plactic class of `t`.
pub fn plactic_class(t: &Ptableau) -> Ptableau {
    ptab_rsk(t).pt
}

fn compact(t: &Ptableau) -> String {
    t.to_string().replace('\n', " / ")
}

#[derive(Serialize)]
struct ComponentJson<'a> {
    nodes: &'a [Ptableau],
    edges: &'a [Edge],
    source: usize,
    sink: usize,
}

impl CrystalComponent {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn export(&self, format: ExportFormat) -> String {
        match format {
            ExportFormat::Dot => self.to_dot(),
            ExportFormat::Json => {
                let json = ComponentJson { nodes: &self.nodes, edges: &self.edges, source: self.source, sink: self.sink };
                serde_json::to_string(&json).expect("plain data serializes") + "\n"
            }
        }
    }

    fn to_dot(&self) -> String {
        let mut s = String::from("digraph crystal {\n");
        for (k, t) in self.nodes.iter().enumerate() {
            writeln!(s, "  n{k} [label=\"{}\"];", compact(t)).unwrap();
        }
        for e in &self.edges {
            writeln!(s, "  n{} -> n{} [label=\"f{}\"];", e.from, e.to, e.i).unwrap();
        }
        s.push_str("}\n");
        s
    }
}
