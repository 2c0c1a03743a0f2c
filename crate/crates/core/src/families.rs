//! Generators for the named unicyclic and bicyclic families and the
//! multigraphs behind them.
//!
//! Named vertices take the lowest labels: `u = 0`, `v = 1`, `w = 2`, `t = 3`
//! (whenever the family has them); every remaining vertex is a fresh pendent
//! vertex numbered in construction order. Core edges are created first, then
//! the pendent edges at `u`, `v`, `w` (or `t`), in that order.
//!
//! | tag         | construction                                                    | edges         |
//! |-------------|-----------------------------------------------------------------|---------------|
//! | `U2`        | two edges on `{u,v}`; `a` pendent edges at `u`, `b` at `v`       | `a+b+2`       |
//! | `U31`       | `U2(a,b)` whose second cycle edge holds `w`; `c` pendents at `w` | `a+b+c+2`     |
//! | `U32`       | `U2(a+1,b)` with `w` in a pendent edge at `u`; `c` at `w`        | `a+b+c+3`     |
//! | `B2`        | three edges on `{u,v}`                                          | `a+b+3`       |
//! | `B3_1`      | two edges on `{u,v,w}` (needs `k >= 4`)                          | `a+b+c+2`     |
//! | `B3_2/3`    | `U31(a,b;c)` plus an edge on `{u,v}` / `{v,w}`                   | `a+b+c+3`     |
//! | `B3_4/5/6`  | `U32(a,b;c)` plus an edge on `{u,v}` / `{u,w}` / `{v,w}`         | `a+b+c+4`     |
//! | `B4`        | `B3_1(0,0,0)` with `m-2` pendent edges at `t` in a core edge      | `m`           |
//! | `G1_power`  | power of a triangle with `m-3` pendent edges at one vertex       | `m`           |
//! | `star_power`| power of the star `K_{1,m}`                                      | `m`           |
//!
//! Multigraph tags: `Gab` (double edge), `Mab` (triple edge), `G1`, `G2`,
//! `G3` (see [`ClosedForm`](crate::multigraph::ClosedForm)).

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{canonical_form, CanonicalForm, UniformHypergraph};
use crate::multigraph::Multigraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FamilyTag {
    U2,
    U31,
    U32,
    B2,
    /// `B3_j` for `j` in `1..=6`.
    B3(u8),
    B4,
    G1Power,
    StarPower,
    Gab,
    Mab,
    G1,
    G2,
    G3,
}

impl FamilyTag {
    pub fn is_multigraph(self) -> bool {
        matches!(
            self,
            FamilyTag::Gab | FamilyTag::Mab | FamilyTag::G1 | FamilyTag::G2 | FamilyTag::G3
        )
    }

    /// Whether the family is described by `(a, b, c)` rather than by `m`.
    fn counts_pendents(self) -> bool {
        !matches!(
            self,
            FamilyTag::B4
                | FamilyTag::G1Power
                | FamilyTag::StarPower
                | FamilyTag::G1
                | FamilyTag::G2
                | FamilyTag::G3
        )
    }

    fn uses_c(self) -> bool {
        matches!(self, FamilyTag::U31 | FamilyTag::U32 | FamilyTag::B3(_))
    }

    fn name(self) -> String {
        match self {
            FamilyTag::U2 => "U2".into(),
            FamilyTag::U31 => "U31".into(),
            FamilyTag::U32 => "U32".into(),
            FamilyTag::B2 => "B2".into(),
            FamilyTag::B3(j) => format!("B3_{j}"),
            FamilyTag::B4 => "B4".into(),
            FamilyTag::G1Power => "G1_power".into(),
            FamilyTag::StarPower => "star_power".into(),
            FamilyTag::Gab => "Gab".into(),
            FamilyTag::Mab => "Mab".into(),
            FamilyTag::G1 => "G1".into(),
            FamilyTag::G2 => "G2".into(),
            FamilyTag::G3 => "G3".into(),
        }
    }
}

impl FromStr for FamilyTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "U2" => FamilyTag::U2,
            "U31" | "U3_1" => FamilyTag::U31,
            "U32" | "U3_2" => FamilyTag::U32,
            "B2" => FamilyTag::B2,
            "B4" => FamilyTag::B4,
            "G1_power" => FamilyTag::G1Power,
            "star_power" => FamilyTag::StarPower,
            "Gab" => FamilyTag::Gab,
            "Mab" => FamilyTag::Mab,
            "G1" => FamilyTag::G1,
            "G2" => FamilyTag::G2,
            "G3" => FamilyTag::G3,
            _ => match s.strip_prefix("B3_").and_then(|j| j.parse::<u8>().ok()) {
                Some(j @ 1..=6) => FamilyTag::B3(j),
                _ => return Err(Error::contract(format!("unknown family tag `{s}`"))),
            },
        })
    }
}

/// A fully determined family member. `m` is always the total edge count;
/// multigraph tags carry `k = 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub tag: FamilyTag,
    pub k: usize,
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub m: usize,
}

fn pendent_total(tag: FamilyTag, a: usize, b: usize, c: usize) -> Option<usize> {
    let core = match tag {
        FamilyTag::U2 | FamilyTag::U31 | FamilyTag::B3(1) | FamilyTag::Gab => 2,
        FamilyTag::U32 | FamilyTag::B2 | FamilyTag::B3(2) | FamilyTag::B3(3) | FamilyTag::Mab => {
            3
        }
        FamilyTag::B3(_) => 4,
        _ => return None,
    };
    Some(a + b + c + core)
}

impl FamilySpec {
    /// Checks feasibility and fills in `m`.
    pub fn new(tag: FamilyTag, k: usize, a: usize, b: usize, c: usize, m: Option<usize>) -> Result<Self> {
        let k = if tag.is_multigraph() { 2 } else { k };
        let c = if tag.uses_c() { c } else { 0 };
        let m = match (pendent_total(tag, a, b, c), m) {
            (Some(total), Some(m)) if total != m => {
                return Err(Error::contract(format!(
                    "{}: parameters give {total} edges, not m={m}",
                    tag.name()
                )))
            }
            (Some(total), _) => total,
            (None, Some(m)) => m,
            (None, None) => return Err(Error::contract(format!("{} needs m", tag.name()))),
        };
        let spec = Self { tag, k, a, b, c, m };
        spec.check()?;
        Ok(spec)
    }

    pub fn u2(k: usize, a: usize, b: usize) -> Result<Self> {
        Self::new(FamilyTag::U2, k, a, b, 0, None)
    }
    pub fn u31(k: usize, a: usize, b: usize, c: usize) -> Result<Self> {
        Self::new(FamilyTag::U31, k, a, b, c, None)
    }
    pub fn u32(k: usize, a: usize, b: usize, c: usize) -> Result<Self> {
        Self::new(FamilyTag::U32, k, a, b, c, None)
    }
    pub fn b2(k: usize, a: usize, b: usize) -> Result<Self> {
        Self::new(FamilyTag::B2, k, a, b, 0, None)
    }
    pub fn b3(j: u8, k: usize, a: usize, b: usize, c: usize) -> Result<Self> {
        Self::new(FamilyTag::B3(j), k, a, b, c, None)
    }
    pub fn b4(k: usize, m: usize) -> Result<Self> {
        Self::new(FamilyTag::B4, k, 0, 0, 0, Some(m))
    }
    pub fn g1_power(k: usize, m: usize) -> Result<Self> {
        Self::new(FamilyTag::G1Power, k, 0, 0, 0, Some(m))
    }
    pub fn star_power(k: usize, m: usize) -> Result<Self> {
        Self::new(FamilyTag::StarPower, k, 0, 0, 0, Some(m))
    }
    pub fn gab(a: usize, b: usize) -> Result<Self> {
        Self::new(FamilyTag::Gab, 2, a, b, 0, None)
    }
    pub fn mab(a: usize, b: usize) -> Result<Self> {
        Self::new(FamilyTag::Mab, 2, a, b, 0, None)
    }
    pub fn graph(tag: FamilyTag, m: usize) -> Result<Self> {
        Self::new(tag, 2, 0, 0, 0, Some(m))
    }

    fn check(&self) -> Result<()> {
        let name = self.tag.name();
        let needs_c = matches!(
            self.tag,
            FamilyTag::U31 | FamilyTag::U32 | FamilyTag::B3(2) | FamilyTag::B3(4)
        );
        if needs_c && self.c == 0 {
            return Err(Error::contract(format!("{name} requires c >= 1")));
        }
        let min_k = match self.tag {
            FamilyTag::B3(1) | FamilyTag::B4 => 4,
            FamilyTag::G1Power | FamilyTag::StarPower => 2,
            t if t.is_multigraph() => 2,
            _ => 3,
        };
        if self.k < min_k {
            return Err(Error::contract(format!("{name} requires k >= {min_k}")));
        }
        let min_m = match self.tag {
            FamilyTag::B4 => 2,
            FamilyTag::G1Power | FamilyTag::G1 | FamilyTag::G2 => 3,
            FamilyTag::G3 => 4,
            FamilyTag::StarPower => 1,
            _ => 0,
        };
        if self.m < min_m {
            return Err(Error::contract(format!("{name} requires m >= {min_m}")));
        }
        Ok(())
    }

    /// Short mathematical name, e.g. `U31(5,0;1)`.
    pub fn notation(&self) -> String {
        let (a, b, c, m) = (self.a, self.b, self.c, self.m);
        match self.tag {
            FamilyTag::U2 => format!("U2({a},{b})"),
            FamilyTag::U31 => format!("U31({a},{b};{c})"),
            FamilyTag::U32 => format!("U32({a},{b};{c})"),
            FamilyTag::B2 => format!("B2({a},{b})"),
            FamilyTag::B3(j) => format!("B3_{j}({a},{b},{c})"),
            FamilyTag::B4 => format!("B4(m={m})"),
            FamilyTag::G1Power => format!("G1^k(m={m})"),
            FamilyTag::StarPower => format!("K1,{m}^k"),
            FamilyTag::Gab => format!("G({a},{b})"),
            FamilyTag::Mab => format!("M({a},{b})"),
            FamilyTag::G1 => format!("G1(m={m})"),
            FamilyTag::G2 => format!("G2(m={m})"),
            FamilyTag::G3 => format!("G3(m={m})"),
        }
    }

    pub fn generate(&self) -> Result<Generated> {
        generate(self)
    }

    /// The hypergraph, or the k-th power of the multigraph for graph tags.
    pub fn hypergraph(&self) -> Result<UniformHypergraph> {
        match self.generate()? {
            Generated::Hyper(h) => Ok(h),
            Generated::Graph(_) => Err(Error::contract(format!(
                "{} is a multigraph family",
                self.tag.name()
            ))),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.tag.name();
        let mut parts = Vec::new();
        if !self.tag.is_multigraph() {
            parts.push(format!("k={}", self.k));
        }
        if self.tag.is_multigraph() || !self.tag.counts_pendents() {
            parts.push(format!("m={}", self.m));
        }
        if self.tag.counts_pendents() {
            parts.push(format!("a={}", self.a));
            parts.push(format!("b={}", self.b));
            if self.tag.uses_c() {
                parts.push(format!("c={}", self.c));
            }
        }
        write!(f, "{name}:{}", parts.join(","))
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses `TAG:key=value,...` with keys `k`, `a`, `b`, `c`, `m`.
    fn from_str(s: &str) -> Result<Self> {
        let (tag, rest) = s.split_once(':').unwrap_or((s, ""));
        let tag: FamilyTag = tag.trim().parse()?;
        let (mut k, mut a, mut b, mut c, mut m) = (None, 0, 0, 0, None);
        for kv in rest.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, val) = kv
                .split_once('=')
                .ok_or_else(|| Error::contract(format!("expected key=value, got `{kv}`")))?;
            let val: usize = val
                .trim()
                .parse()
                .map_err(|_| Error::contract(format!("`{val}` is not a non-negative integer")))?;
            match key.trim() {
                "k" => k = Some(val),
                "a" => a = val,
                "b" => b = val,
                "c" => c = val,
                "m" => m = Some(val),
                other => return Err(Error::contract(format!("unknown key `{other}`"))),
            }
        }
        let k = match (k, tag.is_multigraph()) {
            (_, true) => 2,
            (Some(k), false) => k,
            (None, false) => return Err(Error::contract("hypergraph families need k")),
        };
        FamilySpec::new(tag, k, a, b, c, m)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generated {
    Hyper(UniformHypergraph),
    Graph(Multigraph),
}

/// Labelled vertices of a generated instance; `None` where the family has
/// no such vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Roles {
    pub u: Option<usize>,
    pub v: Option<usize>,
    pub w: Option<usize>,
    pub t: Option<usize>,
}

struct Builder {
    k: usize,
    next: usize,
    edges: Vec<Vec<usize>>,
}

impl Builder {
    fn new(k: usize, named: usize) -> Self {
        Self {
            k,
            next: named,
            edges: Vec::new(),
        }
    }

    fn edge(&mut self, core: &[usize]) {
        let mut e = core.to_vec();
        let fresh = self.k - core.len();
        e.extend(self.next..self.next + fresh);
        self.next += fresh;
        self.edges.push(e);
    }

    fn pendents(&mut self, at: usize, count: usize) {
        for _ in 0..count {
            self.edge(&[at]);
        }
    }

    fn finish(self) -> Result<UniformHypergraph> {
        UniformHypergraph::new(self.k, self.next, self.edges)
    }
}

const U: usize = 0;
const V: usize = 1;
const W: usize = 2;
const T: usize = 3;

/// Generates a hypergraph family member together with its named vertices.
pub fn generate_with_roles(spec: &FamilySpec) -> Result<(UniformHypergraph, Roles)> {
    spec.check()?;
    let FamilySpec { tag, k, a, b, c, m } = *spec;
    let uv = Roles {
        u: Some(U),
        v: Some(V),
        ..Roles::default()
    };
    let uvw = Roles { w: Some(W), ..uv };
    let (builder, roles) = match tag {
        FamilyTag::U2 => {
            let mut g = Builder::new(k, 2);
            g.edge(&[U, V]);
            g.edge(&[U, V]);
            g.pendents(U, a);
            g.pendents(V, b);
            (g, uv)
        }
        FamilyTag::U31 | FamilyTag::B3(2) | FamilyTag::B3(3) => {
            let mut g = Builder::new(k, 3);
            g.edge(&[U, V]);
            g.edge(&[U, V, W]);
            match tag {
                FamilyTag::B3(2) => g.edge(&[U, V]),
                FamilyTag::B3(3) => g.edge(&[V, W]),
                _ => {}
            }
            g.pendents(U, a);
            g.pendents(V, b);
            g.pendents(W, c);
            (g, uvw)
        }
        FamilyTag::U32 | FamilyTag::B3(4) | FamilyTag::B3(5) | FamilyTag::B3(6) => {
            let mut g = Builder::new(k, 3);
            g.edge(&[U, V]);
            g.edge(&[U, V]);
            g.edge(&[U, W]);
            match tag {
                FamilyTag::B3(4) => g.edge(&[U, V]),
                FamilyTag::B3(5) => g.edge(&[U, W]),
                FamilyTag::B3(6) => g.edge(&[V, W]),
                _ => {}
            }
            g.pendents(U, a);
            g.pendents(V, b);
            g.pendents(W, c);
            (g, uvw)
        }
        FamilyTag::B2 => {
            let mut g = Builder::new(k, 2);
            for _ in 0..3 {
                g.edge(&[U, V]);
            }
            g.pendents(U, a);
            g.pendents(V, b);
            (g, uv)
        }
        FamilyTag::B3(1) => {
            let mut g = Builder::new(k, 3);
            g.edge(&[U, V, W]);
            g.edge(&[U, V, W]);
            g.pendents(U, a);
            g.pendents(V, b);
            g.pendents(W, c);
            (g, uvw)
        }
        FamilyTag::B4 => {
            let mut g = Builder::new(k, 4);
            g.edge(&[U, V, W]);
            g.edge(&[U, V, W, T]);
            g.pendents(T, m - 2);
            (g, Roles { t: Some(T), ..uvw })
        }
        FamilyTag::G1Power => {
            let mut g = Builder::new(k, 3);
            g.edge(&[U, V]);
            g.edge(&[V, W]);
            g.edge(&[U, W]);
            g.pendents(U, m - 3);
            (g, uvw)
        }
        FamilyTag::StarPower => {
            let mut g = Builder::new(k, 1);
            for _ in 0..m {
                g.edge(&[U]);
            }
            (
                g,
                Roles {
                    u: Some(U),
                    ..Roles::default()
                },
            )
        }
        FamilyTag::B3(_) => return Err(Error::contract("B3_j needs 1 <= j <= 6")),
        _ => {
            return Err(Error::contract(format!(
                "{} is a multigraph family",
                tag.name()
            )))
        }
    };
    Ok((builder.finish()?, roles))
}

fn multigraph(spec: &FamilySpec) -> Result<Multigraph> {
    let FamilySpec { tag, a, b, m, .. } = *spec;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut next = 2;
    let leaves = |at: usize, count: usize, edges: &mut Vec<(usize, usize)>, next: &mut usize| {
        for _ in 0..count {
            edges.push((at, *next));
            *next += 1;
        }
    };
    match tag {
        FamilyTag::Gab | FamilyTag::Mab => {
            let mult = if tag == FamilyTag::Gab { 2 } else { 3 };
            edges.extend(std::iter::repeat((0, 1)).take(mult));
            leaves(0, a, &mut edges, &mut next);
            leaves(1, b, &mut edges, &mut next);
        }
        FamilyTag::G1 => {
            edges.extend([(0, 1), (1, 2), (0, 2)]);
            next = 3;
            leaves(0, m - 3, &mut edges, &mut next);
        }
        FamilyTag::G2 => {
            edges.extend([(0, 1), (0, 1), (1, 2)]);
            next = 3;
            leaves(2, m - 3, &mut edges, &mut next);
        }
        FamilyTag::G3 => {
            edges.extend([(0, 1), (0, 1), (0, 2), (2, 3)]);
            next = 4;
            leaves(0, m - 4, &mut edges, &mut next);
        }
        _ => return Err(Error::contract("not a multigraph family")),
    }
    Multigraph::from_edges(next, &edges)
}

pub fn generate(spec: &FamilySpec) -> Result<Generated> {
    spec.check()?;
    if spec.tag.is_multigraph() {
        multigraph(spec).map(Generated::Graph)
    } else {
        generate_with_roles(spec).map(|(h, _)| Generated::Hyper(h))
    }
}

/// Splits of `total` into `(a, b)` with `a` descending.
fn pairs(total: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..=total).rev().map(move |a| (a, total - a))
}

fn triples(total: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..=total)
        .rev()
        .flat_map(move |a| (0..=total - a).rev().map(move |b| (a, b, total - a - b)))
}

/// Every named-family spec with `k`-uniform hypergraphs of `m` edges and the
/// given cyclic order, in a fixed order (not deduplicated).
pub fn family_specs(cyclicity: usize, k: usize, m: usize) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    let mut push = |r: Result<FamilySpec>| {
        if let Ok(s) = r {
            out.push(s);
        }
    };
    match cyclicity {
        1 => {
            if m >= 2 {
                for (a, b) in pairs(m - 2) {
                    push(FamilySpec::u2(k, a, b));
                }
                for (a, b, c) in triples(m - 2) {
                    push(FamilySpec::u31(k, a, b, c));
                }
            }
            if m >= 3 {
                for (a, b, c) in triples(m - 3) {
                    push(FamilySpec::u32(k, a, b, c));
                }
                push(FamilySpec::g1_power(k, m));
            }
        }
        2 => {
            if m >= 3 {
                for (a, b) in pairs(m - 3) {
                    push(FamilySpec::b2(k, a, b));
                }
            }
            if m >= 2 {
                for (a, b, c) in triples(m - 2) {
                    push(FamilySpec::b3(1, k, a, b, c));
                }
            }
            for j in 2..=6u8 {
                let core = if j <= 3 { 3 } else { 4 };
                if m >= core {
                    for (a, b, c) in triples(m - core) {
                        push(FamilySpec::b3(j, k, a, b, c));
                    }
                }
            }
            push(FamilySpec::b4(k, m));
        }
        0 => push(FamilySpec::star_power(k, m)),
        _ => {}
    }
    out
}

/// One representative per isomorphism class of the named families, in
/// [`family_specs`] order.
pub fn candidate_pool(cyclicity: usize, k: usize, m: usize) -> Result<Vec<(FamilySpec, UniformHypergraph)>> {
    let mut seen: BTreeSet<CanonicalForm> = BTreeSet::new();
    let mut out = Vec::new();
    for spec in family_specs(cyclicity, k, m) {
        let h = spec.hypergraph()?;
        if seen.insert(canonical_form(&h)?) {
            out.push((spec, h));
        }
    }
    Ok(out)
}

/// The first named family (in [`family_specs`] order) isomorphic to `h`.
pub fn classify(h: &UniformHypergraph) -> Option<FamilySpec> {
    if !h.is_connected() {
        return None;
    }
    let r = h.cyclic_order();
    if !(1..=2).contains(&r) {
        return None;
    }
    let target = canonical_form(h).ok()?;
    let deg = h.degrees();
    let core = deg.iter().filter(|&&d| d >= 2).count();
    family_specs(r, h.k(), h.m()).into_iter().find(|spec| {
        spec.hypergraph()
            .ok()
            .filter(|g| g.n() == h.n() && g.degrees().iter().filter(|&&d| d >= 2).count() == core)
            .and_then(|g| canonical_form(&g).ok())
            .is_some_and(|cf| cf == target)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u2_shape() {
        let h = FamilySpec::u2(3, 6, 0).unwrap().hypergraph().unwrap();
        let r = h.analyze().unwrap();
        assert_eq!((h.m(), h.n()), (8, 16));
        assert_eq!(r.cyclic_order, 1);
        assert_eq!(r.non_pendent_count, 2);
        assert!(!r.is_linear);
    }

    #[test]
    fn b3_1_needs_k4() {
        let err = FamilySpec::b3(1, 3, 0, 0, 0).unwrap_err();
        assert!(err.to_string().contains("requires k >= 4"));
        assert!(FamilySpec::b4(3, 5).is_err());
    }

    #[test]
    fn b2_shape() {
        let h = FamilySpec::b2(3, 2, 0).unwrap().hypergraph().unwrap();
        let r = h.analyze().unwrap();
        assert_eq!((h.m(), h.n()), (5, 9));
        assert_eq!(r.cyclic_order, 2);
        assert_eq!(r.non_pendent_count, 2);
    }

    #[test]
    fn c_required() {
        assert!(FamilySpec::u31(3, 1, 0, 0).is_err());
        assert!(FamilySpec::b3(2, 3, 1, 0, 0).is_err());
        assert!(FamilySpec::b3(4, 3, 1, 0, 0).is_err());
        assert!(FamilySpec::b3(3, 3, 1, 0, 0).is_ok());
    }

    #[test]
    fn every_bicyclic_member_is_bicyclic() {
        for k in 3..=5 {
            for m in 4..=7 {
                for spec in family_specs(2, k, m) {
                    let h = spec.hypergraph().unwrap();
                    assert_eq!(h.m(), m, "{spec}");
                    assert!(h.is_connected(), "{spec}");
                    assert_eq!(h.cyclic_order(), 2, "{spec}");
                }
                for spec in family_specs(1, k, m) {
                    let h = spec.hypergraph().unwrap();
                    assert_eq!(h.m(), m, "{spec}");
                    assert_eq!(h.cyclic_order(), 1, "{spec}");
                }
            }
        }
    }

    #[test]
    fn spec_strings() {
        let s: FamilySpec = "U2:k=3,a=6,b=0".parse().unwrap();
        assert_eq!(s, FamilySpec::u2(3, 6, 0).unwrap());
        assert_eq!(s.to_string(), "U2:k=3,a=6,b=0");
        let s: FamilySpec = "B3_1:k=4,a=3,b=0,c=0".parse().unwrap();
        assert_eq!(s.m, 5);
        assert_eq!(s.to_string(), "B3_1:k=4,a=3,b=0,c=0");
        let s: FamilySpec = "Gab:m=8,a=4,b=2".parse().unwrap();
        assert_eq!(s, FamilySpec::gab(4, 2).unwrap());
        assert!("Gab:m=9,a=4,b=2".parse::<FamilySpec>().is_err());
        assert!("U2:a=1,b=1".parse::<FamilySpec>().is_err());
        assert!("B3_7:k=4".parse::<FamilySpec>().is_err());
        let s: FamilySpec = "B4:k=4,m=5".parse().unwrap();
        assert_eq!(s.to_string().parse::<FamilySpec>().unwrap(), s);
    }

    #[test]
    fn multigraph_tags() {
        let Generated::Graph(g) = FamilySpec::gab(4, 2).unwrap().generate().unwrap() else {
            panic!()
        };
        assert_eq!(g.edge_count(), 8);
        assert_eq!(g.multiplicity(0, 1), 2);
        let Generated::Graph(g3) = FamilySpec::graph(FamilyTag::G3, 8).unwrap().generate().unwrap()
        else {
            panic!()
        };
        assert_eq!(g3.edge_count(), 8);
    }

    #[test]
    fn classify_roundtrips() {
        let spec = FamilySpec::u31(3, 1, 0, 2).unwrap();
        assert_eq!(classify(&spec.hypergraph().unwrap()), Some(spec));
        let u2_13 = FamilySpec::u2(3, 1, 3).unwrap().hypergraph().unwrap();
        assert_eq!(classify(&u2_13), Some(FamilySpec::u2(3, 3, 1).unwrap()));
        let g1 = FamilySpec::g1_power(3, 6).unwrap().hypergraph().unwrap();
        assert_eq!(classify(&g1).map(|s| s.tag), Some(FamilyTag::G1Power));
    }

    #[test]
    fn pool_contents() {
        let pool: Vec<FamilySpec> = candidate_pool(1, 3, 8).unwrap().into_iter().map(|p| p.0).collect();
        for s in [
            FamilySpec::u2(3, 6, 0),
            FamilySpec::u2(3, 5, 1),
            FamilySpec::u2(3, 4, 2),
            FamilySpec::u31(3, 5, 0, 1),
            FamilySpec::u32(3, 4, 0, 1),
        ] {
            assert!(pool.contains(&s.unwrap()));
        }
        let bi: Vec<FamilySpec> = candidate_pool(2, 4, 5).unwrap().into_iter().map(|p| p.0).collect();
        for s in [
            FamilySpec::b2(4, 2, 0),
            FamilySpec::b2(4, 1, 1),
            FamilySpec::b3(1, 4, 3, 0, 0),
            FamilySpec::b4(4, 5),
        ] {
            assert!(bi.contains(&s.unwrap()));
        }
        let bi3 = candidate_pool(2, 3, 5).unwrap();
        assert!(bi3
            .iter()
            .all(|(s, _)| s.tag != FamilyTag::B3(1) && s.tag != FamilyTag::B4));
        assert!(!bi3.is_empty());
    }
}
