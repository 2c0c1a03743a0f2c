//! Exhaustive cross-check of the structural facts on small hypergraphs.

use std::fmt::Write as _;

use hyperspec_core::families::classify;
use hyperspec_core::hypergraph::{canonical_form, count_cycles, enumerate_all_connected};
use hyperspec_core::Result;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleRow {
    pub k: usize,
    pub m: usize,
    pub r: usize,
    pub instances: usize,
    pub max_cycles: usize,
    pub max_pair_codegree: usize,
    pub max_triple_codegree: usize,
    /// Unicyclic instances with at most three non-pendent vertices that match
    /// no named family.
    pub unclassified: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleTable {
    pub rows: Vec<OracleRow>,
    /// Canonical forms (hex) of every instance that breaks a check.
    pub counterexamples: Vec<String>,
}

impl OracleTable {
    pub fn render(&self) -> String {
        let mut out = String::from("k  m  r  instances  max_cycles  pair  triple  unclassified\n");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{:<2} {:<2} {:<2} {:>9}  {:>10}  {:>4}  {:>6}  {:>12}",
                r.k,
                r.m,
                r.r,
                r.instances,
                r.max_cycles,
                r.max_pair_codegree,
                r.max_triple_codegree,
                r.unclassified
            );
        }
        let _ = writeln!(out, "counterexamples: {}", self.counterexamples.len());
        for c in &self.counterexamples {
            let _ = writeln!(out, "  {c}");
        }
        out
    }
}

/// Enumerates every connected `k`-graph with up to `max_m` edges and checks:
/// cyclic order 0 iff no cycle; cyclic order 1 iff exactly one cycle (for
/// `k >= 3`); pair/triple codegrees at most 2/1 when unicyclic and 3/2 when
/// bicyclic; every unicyclic instance with at most three non-pendent
/// vertices belongs to a named family.
pub fn oracle_enum(k: usize, max_m: usize) -> Result<OracleTable> {
    let mut rows: Vec<OracleRow> = Vec::new();
    let mut counterexamples = Vec::new();
    for m in 1..=max_m {
        for h in enumerate_all_connected(k, m)? {
            let r = h.cyclic_order();
            let cycles = count_cycles(&h, m)?;
            let (pair, triple) = h.codegree_maxima();
            let core = h.analyze()?.non_pendent_count;
            let mut bad = (r == 0) != (cycles == 0);
            if k >= 3 {
                bad |= (r == 1) != (cycles == 1);
            }
            bad |= r == 1 && (pair > 2 || triple > 1);
            bad |= r == 2 && (pair > 3 || triple > 2);
            let unclassified = r == 1 && core <= 3 && classify(&h).is_none();
            bad |= unclassified;
            if bad {
                counterexamples.push(canonical_form(&h)?.to_string());
            }
            let row = match rows.iter_mut().find(|x| x.m == m && x.r == r) {
                Some(row) => row,
                None => {
                    rows.push(OracleRow {
                        k,
                        m,
                        r,
                        instances: 0,
                        max_cycles: 0,
                        max_pair_codegree: 0,
                        max_triple_codegree: 0,
                        unclassified: 0,
                    });
                    rows.last_mut().expect("just pushed")
                }
            };
            row.instances += 1;
            row.max_cycles = row.max_cycles.max(cycles);
            row.max_pair_codegree = row.max_pair_codegree.max(pair);
            row.max_triple_codegree = row.max_triple_codegree.max(triple);
            row.unclassified += usize::from(unclassified);
        }
    }
    rows.sort_by_key(|r| (r.m, r.r));
    Ok(OracleTable {
        rows,
        counterexamples,
    })
}
