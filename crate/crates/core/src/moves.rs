//! Edge moves: re-anchoring edges from one vertex to another.
//!
//! Moving edges `(e_1, ..., e_r)` from `(v_1, ..., v_r)` to `u` replaces each
//! `e_i` by `(e_i \ {v_i}) ∪ {u}`. Vertices left without edges are dropped
//! and the remaining labels compacted; [`Moved::relabel`] maps old labels to
//! new ones.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{intersection_size, is_isomorphic, UniformHypergraph};
use crate::tensor::spectral_radius_default;

/// Slack allowed when comparing Perron entries.
pub const PERRON_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeMove {
    /// `(edge index, vertex)` pairs; the vertex leaves the edge.
    pub sources: Vec<(usize, usize)>,
    pub target: usize,
}

impl EdgeMove {
    pub fn new(sources: Vec<(usize, usize)>, target: usize) -> Self {
        Self { sources, target }
    }

    fn validate(&self, h: &UniformHypergraph) -> Result<()> {
        if self.target >= h.n() {
            return Err(Error::contract(format!("target {} is not a vertex", self.target)));
        }
        let mut seen = BTreeSet::new();
        for &(e, v) in &self.sources {
            if e >= h.m() {
                return Err(Error::contract(format!("edge {e} does not exist")));
            }
            if !seen.insert(e) {
                return Err(Error::contract(format!("edge {e} is listed twice")));
            }
            if !h.contains(e, v) {
                return Err(Error::contract(format!("vertex {v} is not in edge {e}")));
            }
            if h.contains(e, self.target) {
                return Err(Error::contract(format!(
                    "target {} already lies in edge {e}",
                    self.target
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Moved {
    pub hypergraph: UniformHypergraph,
    /// Old label to new label for every surviving vertex.
    pub relabel: BTreeMap<usize, usize>,
    /// Number of edges that were re-anchored.
    pub moved: usize,
    /// Set when the result is isomorphic to the input.
    pub identity: bool,
}

pub fn move_edges(h: &UniformHypergraph, mv: &EdgeMove) -> Result<Moved> {
    h.ensure_valid()?;
    mv.validate(h)?;
    let mut edges: Vec<Vec<usize>> = h.edges().to_vec();
    for &(e, v) in &mv.sources {
        let edge = &mut edges[e];
        let pos = edge.iter().position(|&x| x == v).unwrap_or_default();
        edge[pos] = mv.target;
        edge.sort_unstable();
    }
    let mut seen = BTreeSet::new();
    for e in &edges {
        let mut key = e.clone();
        key.sort_unstable();
        if !seen.insert(key.clone()) {
            return Err(Error::MultiEdge(key));
        }
    }
    let (hypergraph, relabel) = UniformHypergraph::from_edges_compacted(h.k(), edges)?;
    Ok(Moved {
        hypergraph,
        relabel,
        moved: mv.sources.len(),
        identity: mv.sources.is_empty(),
    })
}

/// Moves every edge at `u2` that avoids `u1` from `u2` to `u1`.
///
/// Returns the input unchanged with `identity` set when `u2` has no such
/// edge; `identity` is also set when the result is isomorphic to `h`.
pub fn pm_merge(h: &UniformHypergraph, u1: usize, u2: usize) -> Result<Moved> {
    h.ensure_valid()?;
    if u1 >= h.n() || u2 >= h.n() || u1 == u2 {
        return Err(Error::contract("pm_merge needs two distinct vertices"));
    }
    let inc = h.incidence();
    if !inc[u2].iter().any(|&e| h.contains(e, u1)) {
        return Err(Error::contract(format!("vertices {u1} and {u2} are not adjacent")));
    }
    let sources: Vec<(usize, usize)> = inc[u2]
        .iter()
        .filter(|&&e| !h.contains(e, u1))
        .map(|&e| (e, u2))
        .collect();
    let mut out = move_edges(h, &EdgeMove::new(sources, u1))?;
    if !out.identity {
        out.identity = is_isomorphic(h, &out.hypergraph).unwrap_or(false);
    }
    Ok(out)
}

/// Moves every edge at `v1` except `f` from `v1` to `u2`.
///
/// Requires `|e ∩ f| = k - r` with `2 <= r <= k - 1`, exactly one
/// non-pendent vertex in each of `e \ f` and `f \ e`, `v1` that vertex of
/// `f \ e`, and `u2` a pendent vertex of `e \ f`.
pub fn ne_move(h: &UniformHypergraph, e: usize, f: usize, v1: usize, u2: usize) -> Result<Moved> {
    h.ensure_valid()?;
    let k = h.k();
    if e >= h.m() || f >= h.m() || e == f {
        return Err(Error::contract("e and f must be two distinct edges"));
    }
    let common = intersection_size(h.edge(e), h.edge(f));
    if common + 2 > k || common == 0 {
        return Err(Error::contract(format!(
            "|e ∩ f| = {common} must lie in 1..={}",
            k - 2
        )));
    }
    let deg = h.degrees();
    let private = |a: usize, b: usize| -> Vec<usize> {
        h.edge(a).iter().copied().filter(|&x| !h.contains(b, x)).collect()
    };
    let e_only = private(e, f);
    let f_only = private(f, e);
    let core = |side: &[usize]| side.iter().filter(|&&x| deg[x] > 1).count();
    if core(&e_only) != 1 {
        return Err(Error::contract("e \\ f must contain exactly one non-pendent vertex"));
    }
    if core(&f_only) != 1 {
        return Err(Error::contract("f \\ e must contain exactly one non-pendent vertex"));
    }
    if !f_only.contains(&v1) || deg[v1] == 1 {
        return Err(Error::contract("v1 must be the non-pendent vertex of f \\ e"));
    }
    if !e_only.contains(&u2) || deg[u2] != 1 {
        return Err(Error::contract("u2 must be a pendent vertex of e \\ f"));
    }
    let sources = h
        .incidence()
        .swap_remove(v1)
        .into_iter()
        .filter(|&g| g != f)
        .map(|g| (g, v1))
        .collect();
    move_edges(h, &EdgeMove::new(sources, u2))
}

/// Every `(e, f, v1, u2)` accepted by [`ne_move`], in lexicographic order.
pub fn ne_move_candidates(h: &UniformHypergraph) -> Vec<(usize, usize, usize, usize)> {
    let deg = h.degrees();
    let mut out = Vec::new();
    for e in 0..h.m() {
        for f in 0..h.m() {
            if e == f {
                continue;
            }
            let common = intersection_size(h.edge(e), h.edge(f));
            if common == 0 || common + 2 > h.k() {
                continue;
            }
            let e_only: Vec<usize> = h.edge(e).iter().copied().filter(|&x| !h.contains(f, x)).collect();
            let f_only: Vec<usize> = h.edge(f).iter().copied().filter(|&x| !h.contains(e, x)).collect();
            let core_e: Vec<usize> = e_only.iter().copied().filter(|&x| deg[x] > 1).collect();
            let core_f: Vec<usize> = f_only.iter().copied().filter(|&x| deg[x] > 1).collect();
            if core_e.len() != 1 || core_f.len() != 1 {
                continue;
            }
            for &u2 in e_only.iter().filter(|&&x| deg[x] == 1) {
                out.push((e, f, core_f[0], u2));
            }
        }
    }
    out
}

/// Whether the Perron vector of `h` satisfies `x_target >= max x_v` over the
/// source vertices of `mv`, up to [`PERRON_TOL`].
pub fn check_perron_hypothesis(h: &UniformHypergraph, mv: &EdgeMove) -> Result<bool> {
    mv.validate(h)?;
    let est = spectral_radius_default(h)?;
    let x = &est.perron;
    let max_source = mv
        .sources
        .iter()
        .map(|&(_, v)| x[v])
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(x[mv.target] >= max_source - PERRON_TOL)
}
