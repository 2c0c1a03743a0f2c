//! Simple k-uniform hypergraphs and their structural invariants.
//!
//! Vertices are labelled `0..n` and the vertex set is exactly the union of the
//! edges. Every edge is stored as a sorted list of `k` distinct labels.

mod canon;
mod cycles;
mod enumerate;
mod io;

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multigraph::Multigraph;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use cycles::{count_cycles, enumerate_cycles, Cycle, DEFAULT_CYCLE_BUDGET};
pub use enumerate::{enumerate_all_connected, enumerate_connected};
pub use io::{parse_hg, write_hg};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UniformHypergraph {
    k: usize,
    n: usize,
    edges: Vec<Vec<usize>>,
}

/// A breach of one of the [`UniformHypergraph`] invariants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    Uniformity { k: usize },
    Arity { edge: usize, len: usize },
    RepeatedVertex { edge: usize, vertex: usize },
    OutOfRange { edge: usize, vertex: usize },
    DuplicateEdge { first: usize, second: usize },
    Uncovered { vertex: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Uniformity { k } => write!(f, "uniformity k={k} is below 2"),
            Violation::Arity { edge, len } => {
                write!(f, "edge {edge} has {len} vertices")
            }
            Violation::RepeatedVertex { edge, vertex } => {
                write!(f, "edge {edge} repeats vertex {vertex}")
            }
            Violation::OutOfRange { edge, vertex } => {
                write!(f, "edge {edge} uses vertex {vertex} outside the vertex range")
            }
            Violation::DuplicateEdge { first, second } => {
                write!(f, "edges {first} and {second} are equal")
            }
            Violation::Uncovered { vertex } => {
                write!(f, "vertex {vertex} lies in no edge")
            }
        }
    }
}

/// Structural summary returned by [`UniformHypergraph::analyze`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub component_count: usize,
    /// `m(k-1) - n + component_count`.
    pub cyclic_order: usize,
    pub is_linear: bool,
    pub pendent_vertices: Vec<usize>,
    /// Edges with at least `k-1` pendent vertices.
    pub pendent_edges: Vec<usize>,
    pub non_pendent_count: usize,
}

impl UniformHypergraph {
    /// Builds a hypergraph without checking the invariants. Each edge is
    /// sorted; use [`validate`](Self::validate) to inspect the result.
    pub fn unchecked(k: usize, n: usize, edges: Vec<Vec<usize>>) -> Self {
        let edges = edges
            .into_iter()
            .map(|mut e| {
                e.sort_unstable();
                e
            })
            .collect();
        Self { k, n, edges }
    }

    pub fn new(k: usize, n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let h = Self::unchecked(k, n, edges);
        let violations = h.validate();
        if violations.is_empty() {
            Ok(h)
        } else {
            Err(Error::Invalid(violations))
        }
    }

    /// Builds a hypergraph on the vertices that occur in `edges`, compacting
    /// labels in increasing order. Returns the old-to-new label map.
    pub fn from_edges_compacted(
        k: usize,
        edges: Vec<Vec<usize>>,
    ) -> Result<(Self, BTreeMap<usize, usize>)> {
        let mut relabel = BTreeMap::new();
        for e in &edges {
            for &v in e {
                relabel.entry(v).or_insert(0);
            }
        }
        for (i, slot) in relabel.values_mut().enumerate() {
            *slot = i;
        }
        let n = relabel.len();
        let edges = edges
            .into_iter()
            .map(|e| e.into_iter().map(|v| relabel[&v]).collect())
            .collect();
        Ok((Self::new(k, n, edges)?, relabel))
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &[usize] {
        &self.edges[i]
    }

    /// Empty iff every invariant holds.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.k < 2 {
            out.push(Violation::Uniformity { k: self.k });
        }
        let mut covered = vec![false; self.n];
        for (i, e) in self.edges.iter().enumerate() {
            if e.len() != self.k {
                out.push(Violation::Arity {
                    edge: i,
                    len: e.len(),
                });
            }
            for w in e.windows(2) {
                if w[0] == w[1] {
                    out.push(Violation::RepeatedVertex {
                        edge: i,
                        vertex: w[0],
                    });
                }
            }
            for &v in e {
                if v >= self.n {
                    out.push(Violation::OutOfRange { edge: i, vertex: v });
                } else {
                    covered[v] = true;
                }
            }
        }
        let mut first_seen: BTreeMap<&[usize], usize> = BTreeMap::new();
        for (i, e) in self.edges.iter().enumerate() {
            if let Some(&j) = first_seen.get(e.as_slice()) {
                out.push(Violation::DuplicateEdge {
                    first: j,
                    second: i,
                });
            } else {
                first_seen.insert(e, i);
            }
        }
        for (v, c) in covered.iter().enumerate() {
            if !c {
                out.push(Violation::Uncovered { vertex: v });
            }
        }
        out
    }

    pub(crate) fn ensure_valid(&self) -> Result<()> {
        let v = self.validate();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::Invalid(v))
        }
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                deg[v] += 1;
            }
        }
        deg
    }

    /// Incident edge indices per vertex, in increasing order.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                inc[v].push(i);
            }
        }
        inc
    }

    pub fn contains(&self, edge: usize, v: usize) -> bool {
        self.edges[edge].binary_search(&v).is_ok()
    }

    pub fn is_pendent(&self, v: usize) -> bool {
        self.edges.iter().filter(|e| e.binary_search(&v).is_ok()).count() == 1
    }

    /// Component label per vertex, computed on the vertex-edge incidence
    /// structure.
    pub fn components(&self) -> (usize, Vec<usize>) {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for e in &self.edges {
            for w in e.windows(2) {
                let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut label = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut comp = vec![0; self.n];
        for v in 0..self.n {
            let r = find(&mut parent, v);
            if label[r] == usize::MAX {
                label[r] = count;
                count += 1;
            }
            comp[v] = label[r];
        }
        (count, comp)
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().0 == 1
    }

    pub fn is_linear(&self) -> bool {
        for i in 0..self.edges.len() {
            for j in i + 1..self.edges.len() {
                if intersection_size(&self.edges[i], &self.edges[j]) > 1 {
                    return false;
                }
            }
        }
        true
    }

    pub fn analyze(&self) -> Result<StructureReport> {
        self.ensure_valid()?;
        let deg = self.degrees();
        let (component_count, _) = self.components();
        let pendent_vertices: Vec<usize> = (0..self.n).filter(|&v| deg[v] == 1).collect();
        let pendent_edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.iter().filter(|&&v| deg[v] == 1).count() >= self.k - 1)
            .map(|(i, _)| i)
            .collect();
        // n <= m(k-1) + l holds for every simple hypergraph, so this cannot
        // underflow on valid input.
        let cyclic_order = self.m() * (self.k - 1) + component_count - self.n;
        Ok(StructureReport {
            component_count,
            cyclic_order,
            is_linear: self.is_linear(),
            non_pendent_count: self.n - pendent_vertices.len(),
            pendent_vertices,
            pendent_edges,
        })
    }

    /// Cyclic order `m(k-1) - n + l`.
    pub fn cyclic_order(&self) -> usize {
        let l = self.components().0;
        (self.m() * (self.k - 1) + l).saturating_sub(self.n)
    }

    /// Largest number of edges shared by a pair of vertices and by a triple
    /// of vertices.
    pub fn codegree_maxima(&self) -> (usize, usize) {
        let mut pairs: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut triples: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
        for e in &self.edges {
            for i in 0..e.len() {
                for j in i + 1..e.len() {
                    *pairs.entry((e[i], e[j])).or_default() += 1;
                    for l in j + 1..e.len() {
                        *triples.entry((e[i], e[j], e[l])).or_default() += 1;
                    }
                }
            }
        }
        (
            pairs.values().copied().max().unwrap_or(0),
            triples.values().copied().max().unwrap_or(0),
        )
    }

    /// Hypergraph induced by a subset of edges, relabelled compactly.
    pub fn edge_subgraph(&self, edge_ids: &[usize]) -> Result<Self> {
        let edges = edge_ids.iter().map(|&i| self.edges[i].clone()).collect();
        Ok(Self::from_edges_compacted(self.k, edges)?.0)
    }

    /// Recovers the loopless multigraph whose k-th power is this hypergraph,
    /// if every edge has at least `k - 2` pendent vertices.
    ///
    /// Non-pendent vertices come first in increasing label order. A pendent
    /// edge contributes one of its pendent vertices as a leaf; an edge with no
    /// non-pendent vertex contributes two.
    pub fn power_structure(&self) -> Option<Multigraph> {
        if self.ensure_valid().is_err() {
            return None;
        }
        let deg = self.degrees();
        let mut index: BTreeMap<usize, usize> = BTreeMap::new();
        for v in 0..self.n {
            if deg[v] >= 2 {
                let next = index.len();
                index.insert(v, next);
            }
        }
        let mut next = index.len();
        let mut pairs = Vec::with_capacity(self.m());
        for e in &self.edges {
            let core: Vec<usize> = e.iter().copied().filter(|&v| deg[v] >= 2).collect();
            if core.len() > 2 {
                return None;
            }
            let (a, b) = match core.as_slice() {
                [x, y] => (index[x], index[y]),
                [x] => {
                    next += 1;
                    (index[x], next - 1)
                }
                _ => {
                    next += 2;
                    (next - 2, next - 1)
                }
            };
            pairs.push((a, b));
        }
        Multigraph::from_edges(next, &pairs).ok()
    }

    /// Relabels vertices through `perm` (old label `v` becomes `perm[v]`).
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::contract("permutation length differs from n"));
        }
        let mut seen = HashSet::new();
        if !perm.iter().all(|&p| p < self.n && seen.insert(p)) {
            return Err(Error::contract("relabelling is not a permutation"));
        }
        Ok(Self::unchecked(
            self.k,
            self.n,
            self.edges
                .iter()
                .map(|e| e.iter().map(|&v| perm[v]).collect())
                .collect(),
        ))
    }
}

pub(crate) fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut c) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                c += 1;
                i += 1;
                j += 1;
            }
        }
    }
    c
}
