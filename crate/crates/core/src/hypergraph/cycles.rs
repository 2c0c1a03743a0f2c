//! Exhaustive cycle search for desk-scale hypergraphs.
//!
//! A cycle is `v0 e1 v1 ... e_l v0` with distinct vertices, distinct edges,
//! `v_{i-1}, v_i in e_i` and `l >= 2`. Cycles are identified up to rotation
//! and reflection of the sequence.

use super::UniformHypergraph;
use crate::error::{Error, Result};

/// Default number of search nodes before the cycle search gives up.
pub const DEFAULT_CYCLE_BUDGET: usize = 5_000_000;

/// A cycle in normal form: `vertices[0]` is the smallest vertex and
/// `edges[0] < edges[len - 1]`. `edges[i]` joins `vertices[i]` and
/// `vertices[(i + 1) % len]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cycle {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

struct Search<'a> {
    h: &'a UniformHypergraph,
    inc: Vec<Vec<usize>>,
    cap: usize,
    budget: usize,
    nodes: usize,
    start: usize,
    on_path: Vec<bool>,
    edge_used: Vec<bool>,
    vertices: Vec<usize>,
    edges: Vec<usize>,
    out: Vec<Cycle>,
}

impl Search<'_> {
    fn extend(&mut self, x: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::Budget(format!(
                "cycle search visited more than {} nodes",
                self.budget
            )));
        }
        for idx in 0..self.inc[x].len() {
            let e = self.inc[x][idx];
            if self.edge_used[e] {
                continue;
            }
            self.edge_used[e] = true;
            self.edges.push(e);
            for pos in 0..self.h.edge(e).len() {
                let y = self.h.edge(e)[pos];
                if y == x {
                    continue;
                }
                if y == self.start {
                    if self.edges.len() >= 2 && self.edges[0] < e {
                        self.out.push(Cycle {
                            vertices: self.vertices.clone(),
                            edges: self.edges.clone(),
                        });
                    }
                } else if y > self.start && !self.on_path[y] && self.edges.len() < self.cap {
                    self.on_path[y] = true;
                    self.vertices.push(y);
                    self.extend(y)?;
                    self.vertices.pop();
                    self.on_path[y] = false;
                }
            }
            self.edges.pop();
            self.edge_used[e] = false;
        }
        Ok(())
    }
}

/// Every cycle of length at most `length_cap`, each reported once.
pub fn enumerate_cycles(
    h: &UniformHypergraph,
    length_cap: usize,
    budget: usize,
) -> Result<Vec<Cycle>> {
    h.ensure_valid()?;
    let mut s = Search {
        h,
        inc: h.incidence(),
        cap: length_cap,
        budget,
        nodes: 0,
        start: 0,
        on_path: vec![false; h.n()],
        edge_used: vec![false; h.m()],
        vertices: Vec::new(),
        edges: Vec::new(),
        out: Vec::new(),
    };
    if length_cap < 2 {
        return Ok(Vec::new());
    }
    for v in 0..h.n() {
        s.start = v;
        s.on_path[v] = true;
        s.vertices.push(v);
        s.extend(v)?;
        s.vertices.pop();
        s.on_path[v] = false;
    }
    s.out.sort();
    Ok(s.out)
}

/// Number of cycles of length at most `length_cap`.
pub fn count_cycles(h: &UniformHypergraph, length_cap: usize) -> Result<usize> {
    if !h.is_connected() {
        return Err(Error::NotConnected);
    }
    enumerate_cycles(h, length_cap, DEFAULT_CYCLE_BUDGET).map(|c| c.len())
}
