//! Canonical forms for isomorphism testing.
//!
//! Every vertex is either non-pendent or lies in exactly one edge, so a
//! hypergraph is determined up to isomorphism by the multiset of edge traces
//! on its non-pendent vertices. The canonical form is the lexicographically
//! smallest sorted trace list over all relabellings of the non-pendent
//! vertices that respect a degree-based refinement, followed by the pendent
//! counts implied by `k`.

use std::collections::BTreeMap;

use super::UniformHypergraph;
use crate::error::{Error, Result};

/// Largest number of relabellings tried before giving up.
const PERMUTATION_BUDGET: u64 = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl std::fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

pub fn canonical_form(h: &UniformHypergraph) -> Result<CanonicalForm> {
    h.ensure_valid()?;
    let deg = h.degrees();
    let core: Vec<usize> = (0..h.n()).filter(|&v| deg[v] >= 2).collect();
    let traces: Vec<Vec<usize>> = h
        .edges()
        .iter()
        .map(|e| e.iter().copied().filter(|&v| deg[v] >= 2).collect())
        .collect();

    // Refinement key: degree plus the sorted trace sizes of incident edges.
    let mut classes: BTreeMap<(usize, Vec<usize>), Vec<usize>> = BTreeMap::new();
    for &v in &core {
        let mut sizes: Vec<usize> = traces
            .iter()
            .filter(|t| t.binary_search(&v).is_ok())
            .map(|t| t.len())
            .collect();
        sizes.sort_unstable();
        classes.entry((deg[v], sizes)).or_default().push(v);
    }
    let classes: Vec<Vec<usize>> = classes.into_values().collect();

    let mut total: u64 = 1;
    for c in &classes {
        for i in 2..=c.len() as u64 {
            total = total.saturating_mul(i);
        }
    }
    if total > PERMUTATION_BUDGET {
        return Err(Error::Budget(format!(
            "canonical form needs {total} relabellings (limit {PERMUTATION_BUDGET})"
        )));
    }

    let mut label = vec![usize::MAX; h.n()];
    let mut best: Option<Vec<Vec<usize>>> = None;
    let mut orders: Vec<Vec<usize>> = classes.clone();
    search(&classes, &mut orders, 0, &mut label, &traces, &mut best);
    let best = best.unwrap_or_default();

    let mut bytes = Vec::with_capacity(4 + best.len() * (h.k() + 1));
    push_u16(&mut bytes, h.k());
    push_u16(&mut bytes, core.len());
    for t in &best {
        push_u16(&mut bytes, t.len());
        for &v in t {
            push_u16(&mut bytes, v);
        }
    }
    Ok(CanonicalForm(bytes))
}

fn push_u16(out: &mut Vec<u8>, x: usize) {
    out.extend_from_slice(&(x as u16).to_be_bytes());
}

/// Tries every ordering inside each class, class by class.
fn search(
    classes: &[Vec<usize>],
    orders: &mut [Vec<usize>],
    class: usize,
    label: &mut [usize],
    traces: &[Vec<usize>],
    best: &mut Option<Vec<Vec<usize>>>,
) {
    if class == classes.len() {
        let mut mapped: Vec<Vec<usize>> = traces
            .iter()
            .map(|t| {
                let mut m: Vec<usize> = t.iter().map(|&v| label[v]).collect();
                m.sort_unstable();
                m
            })
            .collect();
        mapped.sort();
        if best.as_ref().map_or(true, |b| mapped < *b) {
            *best = Some(mapped);
        }
        return;
    }
    let offset: usize = classes[..class].iter().map(|c| c.len()).sum();
    permute(classes, orders, class, 0, offset, label, traces, best);
}

#[allow(clippy::too_many_arguments)]
fn permute(
    classes: &[Vec<usize>],
    orders: &mut [Vec<usize>],
    class: usize,
    pos: usize,
    offset: usize,
    label: &mut [usize],
    traces: &[Vec<usize>],
    best: &mut Option<Vec<Vec<usize>>>,
) {
    let len = orders[class].len();
    if pos == len {
        for (i, &v) in orders[class].iter().enumerate() {
            label[v] = offset + i;
        }
        search(classes, orders, class + 1, label, traces, best);
        return;
    }
    for i in pos..len {
        orders[class].swap(pos, i);
        permute(classes, orders, class, pos + 1, offset, label, traces, best);
        orders[class].swap(pos, i);
    }
}

pub fn is_isomorphic(a: &UniformHypergraph, b: &UniformHypergraph) -> Result<bool> {
    if a.k() != b.k() || a.n() != b.n() || a.m() != b.m() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}
