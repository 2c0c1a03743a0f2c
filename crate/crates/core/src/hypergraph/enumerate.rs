//! Exhaustive generation of small connected uniform hypergraphs.

use std::collections::BTreeMap;

use super::{canonical_form, UniformHypergraph};
use crate::error::{Error, Result};

const MAX_K: usize = 4;
const MAX_M: usize = 4;

/// All connected simple k-uniform hypergraphs with `m` edges and cyclic order
/// `r`, one per isomorphism class, in canonical-form order.
pub fn enumerate_connected(k: usize, m: usize, r: usize) -> Result<Vec<UniformHypergraph>> {
    Ok(enumerate_all_connected(k, m)?
        .into_iter()
        .filter(|h| h.cyclic_order() == r)
        .collect())
}

/// All connected simple k-uniform hypergraphs with `m` edges, one per
/// isomorphism class, in canonical-form order.
///
/// Grows hypergraphs one edge at a time; every connected hypergraph has an
/// edge order whose prefixes are connected, so extending each class by every
/// edge that meets it reaches every class.
pub fn enumerate_all_connected(k: usize, m: usize) -> Result<Vec<UniformHypergraph>> {
    if !(2..=MAX_K).contains(&k) || !(1..=MAX_M).contains(&m) {
        return Err(Error::Budget(format!(
            "enumeration limited to 2 <= k <= {MAX_K} and 1 <= m <= {MAX_M} (got k={k}, m={m})"
        )));
    }
    let seed = UniformHypergraph::new(k, k, vec![(0..k).collect()])?;
    let mut level: BTreeMap<_, UniformHypergraph> = BTreeMap::new();
    level.insert(canonical_form(&seed)?, seed);

    for _ in 1..m {
        let mut next = BTreeMap::new();
        for h in level.values() {
            for e in extensions(h) {
                let mut edges = h.edges().to_vec();
                let n = e.iter().copied().max().unwrap_or(0).max(h.n() - 1) + 1;
                edges.push(e);
                let g = UniformHypergraph::unchecked(k, n, edges);
                if !g.validate().is_empty() {
                    continue;
                }
                next.entry(canonical_form(&g)?).or_insert(g);
            }
        }
        level = next;
    }
    Ok(level.into_values().collect())
}

/// Candidate new edges: `s >= 1` existing vertices plus `k - s` fresh ones.
fn extensions(h: &UniformHypergraph) -> Vec<Vec<usize>> {
    let k = h.k();
    let n = h.n();
    let mut out = Vec::new();
    for s in 1..=k.min(n) {
        let fresh: Vec<usize> = (n..n + k - s).collect();
        for old in combinations(n, s) {
            let mut e = old;
            e.extend_from_slice(&fresh);
            if !h.edges().contains(&e) {
                out.push(e);
            }
        }
    }
    out
}

fn combinations(n: usize, s: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, s: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == s {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, s, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, s, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_edge() {
        assert_eq!(enumerate_connected(3, 1, 0).unwrap().len(), 1);
    }

    #[test]
    fn two_edges() {
        let uni = enumerate_connected(3, 2, 1).unwrap();
        assert_eq!(uni.len(), 1);
        assert_eq!(uni[0].n(), 4);
        assert!(enumerate_connected(3, 2, 2).unwrap().is_empty());
        // two edges meeting in one vertex
        assert_eq!(enumerate_connected(3, 2, 0).unwrap().len(), 1);
    }

    #[test]
    fn graphs_match_known_counts() {
        // connected simple graphs with 3 edges: P4, K_{1,3}, K3
        let trees = enumerate_connected(2, 3, 0).unwrap();
        let cyclic = enumerate_connected(2, 3, 1).unwrap();
        assert_eq!(trees.len(), 2);
        assert_eq!(cyclic.len(), 1);
    }

    #[test]
    fn budget() {
        assert!(matches!(enumerate_connected(3, 5, 1), Err(Error::Budget(_))));
        assert!(matches!(enumerate_connected(6, 2, 1), Err(Error::Budget(_))));
    }
}
