//! Weighted incidence matrices and α-normal / α-subnormal certificates.
//!
//! A weighted incidence matrix `B` puts a positive weight on every incidence
//! `(v, e)` with `v in e`. `H` is α-subnormal through `B` when every vertex
//! sum `sum_{e ∋ v} B(v,e)` is at most 1 and every edge product
//! `prod_{v in e} B(v,e)` is at least α; α-normal when all of these hold
//! with equality. `B` is consistent when the alternating ratio product along
//! every cycle is 1. A consistent α-normal certificate pins
//! `rho(H) = α^{-1/k}`; a consistent, strictly α-subnormal one gives
//! `rho(H) < α^{-1/k}`.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{generate_with_roles, FamilySpec};
use crate::hypergraph::UniformHypergraph;
use crate::multigraph::{closed_form_rho_squared, ClosedForm};

pub const DEFAULT_CERT_TOL: f64 = 1e-12;

/// Weights keyed by `(vertex, edge index)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightedIncidenceMatrix {
    weights: BTreeMap<(usize, usize), f64>,
}

impl WeightedIncidenceMatrix {
    /// Rejects non-positive or non-finite weights; the support is checked
    /// against a host hypergraph only when the matrix is used.
    pub fn new(weights: BTreeMap<(usize, usize), f64>) -> Result<Self> {
        if let Some(((v, e), w)) = weights.iter().find(|(_, w)| !(w.is_finite() && **w > 0.0)) {
            return Err(Error::contract(format!("weight B({v},{e}) = {w} is not positive")));
        }
        Ok(Self { weights })
    }

    /// Builds weights on exactly the incidences of `h`.
    pub fn from_fn(h: &UniformHypergraph, mut f: impl FnMut(usize, usize) -> f64) -> Result<Self> {
        let mut weights = BTreeMap::new();
        for (e, edge) in h.edges().iter().enumerate() {
            for &v in edge {
                weights.insert((v, e), f(v, e));
            }
        }
        Self::new(weights)
    }

    pub fn get(&self, v: usize, e: usize) -> Option<f64> {
        self.weights.get(&(v, e)).copied()
    }

    pub fn weights(&self) -> &BTreeMap<(usize, usize), f64> {
        &self.weights
    }

    fn ensure_support(&self, h: &UniformHypergraph) -> Result<()> {
        let expected: usize = h.edges().iter().map(Vec::len).sum();
        let matches = self.weights.len() == expected
            && self
                .weights
                .keys()
                .all(|&(v, e)| e < h.m() && h.contains(e, v));
        if matches {
            Ok(())
        } else {
            Err(Error::contract(
                "weight support differs from the incidences of the hypergraph",
            ))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Normal,
    StrictlySubnormal,
    NotSubnormal,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Normal => "normal",
            Verdict::StrictlySubnormal => "strictly-subnormal",
            Verdict::NotSubnormal => "not-subnormal",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormalityCertificate {
    pub alpha: f64,
    /// `1 - sum_{e ∋ v} B(v,e)` per vertex.
    pub vertex_slacks: Vec<f64>,
    /// `prod_{v in e} B(v,e) - alpha` per edge.
    pub edge_excess: Vec<f64>,
    pub consistent: bool,
    pub verdict: Verdict,
    pub tol: f64,
}

/// Computes slacks, excesses, consistency and the verdict, treating values
/// within `tol` of zero as equalities.
pub fn check(
    h: &UniformHypergraph,
    b: &WeightedIncidenceMatrix,
    alpha: f64,
    tol: f64,
) -> Result<NormalityCertificate> {
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(Error::contract("alpha must be positive"));
    }
    b.ensure_support(h)?;
    let mut sums = vec![0.0; h.n()];
    let mut edge_excess = Vec::with_capacity(h.m());
    for (e, edge) in h.edges().iter().enumerate() {
        let mut prod = 1.0;
        for &v in edge {
            let w = b.weights[&(v, e)];
            sums[v] += w;
            prod *= w;
        }
        edge_excess.push(prod - alpha);
    }
    let vertex_slacks: Vec<f64> = sums.iter().map(|s| 1.0 - s).collect();
    let all = || vertex_slacks.iter().chain(&edge_excess);
    let verdict = if all().any(|&x| x < -tol) {
        Verdict::NotSubnormal
    } else if all().any(|&x| x > tol) {
        Verdict::StrictlySubnormal
    } else {
        Verdict::Normal
    };
    Ok(NormalityCertificate {
        alpha,
        vertex_slacks,
        edge_excess,
        consistent: check_consistency(h, b, tol)?,
        verdict,
        tol,
    })
}

/// Whether every cycle's ratio product is 1, tested as a factorisation
/// `log B(v,e) = f(v) + g(e)` grown along a spanning forest of the incidence
/// graph.
pub fn check_consistency(h: &UniformHypergraph, b: &WeightedIncidenceMatrix, tol: f64) -> Result<bool> {
    b.ensure_support(h)?;
    let inc = h.incidence();
    let log = |v: usize, e: usize| b.weights[&(v, e)].ln();
    let mut f: Vec<Option<f64>> = vec![None; h.n()];
    let mut g: Vec<Option<f64>> = vec![None; h.m()];
    let mut queue = VecDeque::new();
    for root in 0..h.n() {
        if f[root].is_some() {
            continue;
        }
        f[root] = Some(0.0);
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            let fv = f[v].unwrap_or_default();
            for &e in &inc[v] {
                if g[e].is_some() {
                    continue;
                }
                let ge = log(v, e) - fv;
                g[e] = Some(ge);
                for &y in h.edge(e) {
                    if f[y].is_none() {
                        f[y] = Some(log(y, e) - ge);
                        queue.push_back(y);
                    }
                }
            }
        }
    }
    Ok(h.edges().iter().enumerate().all(|(e, edge)| {
        edge.iter().all(|&v| {
            let lhs = log(v, e);
            let rhs = f[v].unwrap_or_default() + g[e].unwrap_or_default();
            (lhs - rhs).abs() <= tol * lhs.abs().max(1.0)
        })
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Bound {
    /// `rho(H)` equals the value.
    Exact(f64),
    /// `rho(H)` is strictly below the value.
    StrictUpper(f64),
}

impl Bound {
    pub fn value(self) -> f64 {
        match self {
            Bound::Exact(x) | Bound::StrictUpper(x) => x,
        }
    }
}

/// The radius statement a consistent certificate supports.
pub fn bound_from_certificate(cert: &NormalityCertificate, k: usize) -> Result<Bound> {
    if !cert.consistent {
        return Err(Error::contract("certificate is not consistent; no bound follows"));
    }
    let value = cert.alpha.powf(-1.0 / k as f64);
    match cert.verdict {
        Verdict::Normal => Ok(Bound::Exact(value)),
        Verdict::StrictlySubnormal => Ok(Bound::StrictUpper(value)),
        Verdict::NotSubnormal => Err(Error::contract(
            "certificate is not subnormal; no bound follows",
        )),
    }
}

/// The explicit certificates available from [`build_certificate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CertificateTag {
    /// `U31(a,0;m-2-a)` against `alpha = 1/rho(G(m-4,2))^2`, `a <= 1`.
    U31Subnormal { a: usize },
    /// `B3_1(m-2,0,0)` against `alpha = 1/(m+6)`.
    B31Normal,
    /// `B3_1(m-3,1,0)` against `beta = 1/rho(M(m-4,1))^2`.
    B31Subnormal,
    /// `B3_3(0,m-3,0)` against `beta`.
    B33Subnormal,
    /// `B4` against `beta`.
    B4Subnormal,
}

impl CertificateTag {
    pub const ALL: [CertificateTag; 6] = [
        CertificateTag::U31Subnormal { a: 0 },
        CertificateTag::U31Subnormal { a: 1 },
        CertificateTag::B31Normal,
        CertificateTag::B31Subnormal,
        CertificateTag::B33Subnormal,
        CertificateTag::B4Subnormal,
    ];

    pub fn min_m(self) -> usize {
        match self {
            CertificateTag::U31Subnormal { .. } => 8,
            _ => 5,
        }
    }

    pub fn min_k(self) -> usize {
        match self {
            CertificateTag::B31Normal | CertificateTag::B31Subnormal | CertificateTag::B4Subnormal => 4,
            _ => 3,
        }
    }

    pub fn expected_verdict(self) -> Verdict {
        match self {
            CertificateTag::B31Normal => Verdict::Normal,
            _ => Verdict::StrictlySubnormal,
        }
    }

    pub fn with_a(self, a: usize) -> Self {
        match self {
            CertificateTag::U31Subnormal { .. } => CertificateTag::U31Subnormal { a },
            other => other,
        }
    }
}

impl fmt::Display for CertificateTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateTag::U31Subnormal { a } => write!(f, "U31-subnormal(a={a})"),
            CertificateTag::B31Normal => f.write_str("B31-normal"),
            CertificateTag::B31Subnormal => f.write_str("B31-subnormal"),
            CertificateTag::B33Subnormal => f.write_str("B33-subnormal"),
            CertificateTag::B4Subnormal => f.write_str("B4-subnormal"),
        }
    }
}

impl FromStr for CertificateTag {
    type Err = Error;

    /// Accepts `U31-subnormal` (with `a = 0`), `B31-normal`, `B31-subnormal`,
    /// `B33-subnormal`, `B4-subnormal`, case-insensitively.
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase().replace('_', "-");
        Ok(match lower.as_str() {
            "u31-subnormal" => CertificateTag::U31Subnormal { a: 0 },
            "b31-normal" => CertificateTag::B31Normal,
            "b31-subnormal" => CertificateTag::B31Subnormal,
            "b33-subnormal" => CertificateTag::B33Subnormal,
            "b4-subnormal" => CertificateTag::B4Subnormal,
            _ => return Err(Error::contract(format!("unknown certificate tag `{s}`"))),
        })
    }
}

/// A hypergraph with an explicit weighted incidence matrix and its α.
#[derive(Debug, Clone, PartialEq)]
pub struct BuiltCertificate {
    pub tag: CertificateTag,
    pub spec: FamilySpec,
    pub hypergraph: UniformHypergraph,
    pub weights: WeightedIncidenceMatrix,
    pub alpha: f64,
    /// The ratio `A` between corresponding cycle-edge weights, where the
    /// construction has one.
    pub ratio: f64,
}

/// Weight assignment shared by all constructions: pendent vertices get 1,
/// the attachment vertex of a pendent edge gets `alpha`, and the core
/// incidences come from `core`.
fn assemble(
    h: &UniformHypergraph,
    alpha: f64,
    core: &BTreeMap<(usize, usize), f64>,
) -> Result<WeightedIncidenceMatrix> {
    let deg = h.degrees();
    WeightedIncidenceMatrix::from_fn(h, |v, e| {
        if let Some(&w) = core.get(&(v, e)) {
            w
        } else if deg[v] == 1 {
            1.0
        } else {
            alpha
        }
    })
}

/// Builds one of the explicit certificates for `m` edges and uniformity `k`.
pub fn build_certificate(tag: CertificateTag, m: usize, k: usize) -> Result<BuiltCertificate> {
    if m < tag.min_m() {
        return Err(Error::contract(format!("{tag} requires m >= {}", tag.min_m())));
    }
    if k < tag.min_k() {
        return Err(Error::contract(format!("{tag} requires k >= {}", tag.min_k())));
    }
    let mf = m as f64;
    let beta = || closed_form_rho_squared(ClosedForm::Mab, m, m - 4, 1).map(|r| 1.0 / r);
    let mut core = BTreeMap::new();
    let (spec, alpha, ratio) = match tag {
        CertificateTag::U31Subnormal { a } => {
            if a > 1 {
                return Err(Error::contract("U31-subnormal requires a <= 1"));
            }
            let alpha = 1.0 / closed_form_rho_squared(ClosedForm::Gab, m, m - 4, 2)?;
            let ratio = (1.0 / alpha - a as f64).sqrt() - 1.0;
            // e1 = {u, v, ...}, e2 = {u, v, w, ...}
            let x1 = (1.0 - a as f64 * alpha) / (1.0 + ratio);
            let y1 = 1.0 / (1.0 + ratio);
            core.extend([
                ((0, 0), x1),
                ((0, 1), ratio * x1),
                ((1, 0), y1),
                ((1, 1), ratio * y1),
                ((2, 1), 1.0 - (mf - 2.0 - a as f64) * alpha),
            ]);
            (FamilySpec::u31(k, a, 0, m - 2 - a)?, alpha, ratio)
        }
        CertificateTag::B31Normal => {
            let alpha = 1.0 / closed_form_rho_squared(ClosedForm::Mab, m, m - 3, 0)?;
            for e in 0..2 {
                core.insert((0, e), (1.0 - (mf - 2.0) * alpha) / 2.0);
                core.insert((1, e), 0.5);
                core.insert((2, e), 0.5);
            }
            (FamilySpec::b3(1, k, m - 2, 0, 0)?, alpha, 1.0)
        }
        CertificateTag::B31Subnormal => {
            let beta = beta()?;
            let x = 1.0 - (mf - 3.0) * beta;
            let y = 1.0 - beta;
            let ratio = (x * y / beta).cbrt() - 1.0;
            // e0 carries the ratio, e1 has product exactly beta
            for (v, total) in [(0, x), (1, y), (2, 1.0)] {
                let second = total / (1.0 + ratio);
                core.insert((v, 0), ratio * second);
                core.insert((v, 1), second);
            }
            (FamilySpec::b3(1, k, m - 3, 1, 0)?, beta, ratio)
        }
        CertificateTag::B33Subnormal => {
            let beta = beta()?;
            let rhs = (1.0 - (mf - 3.0) * beta) / beta;
            // (A+1)(A+2) = rhs
            let ratio = (-3.0 + (1.0 + 4.0 * rhs).sqrt()) / 2.0;
            let outer = 1.0 / (ratio + 1.0);
            let y = (1.0 - (mf - 3.0) * beta) / (ratio + 2.0);
            // edges: 0 = {u,v}, 1 = {u,v,w}, 2 = {v,w}
            core.extend([
                ((0, 0), outer),
                ((0, 1), ratio * outer),
                ((2, 2), outer),
                ((2, 1), ratio * outer),
                ((1, 0), y),
                ((1, 2), y),
                ((1, 1), ratio * y),
            ]);
            (FamilySpec::b3(3, k, 0, m - 3, 0)?, beta, ratio)
        }
        CertificateTag::B4Subnormal => {
            let beta = beta()?;
            let c = beta.cbrt();
            for v in 0..3 {
                core.insert((v, 0), c);
                core.insert((v, 1), 1.0 - c);
            }
            core.insert((3, 1), 1.0 - (mf - 2.0) * beta);
            (FamilySpec::b4(k, m)?, beta, 1.0 / c - 1.0)
        }
    };
    let (hypergraph, _) = generate_with_roles(&spec)?;
    let weights = assemble(&hypergraph, alpha, &core)?;
    Ok(BuiltCertificate {
        tag,
        spec,
        hypergraph,
        weights,
        alpha,
        ratio,
    })
}

/// Serializable form of a checked certificate.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CertificateDump {
    pub hypergraph: String,
    pub k: usize,
    pub m: usize,
    pub alpha: f64,
    /// Keyed by `"(vertex,edgeIndex)"`.
    pub weights: BTreeMap<String, f64>,
    pub verdict: Verdict,
    pub consistent: bool,
    pub vertex_slacks: Vec<f64>,
    pub edge_excess: Vec<f64>,
}

pub fn dump(label: &str, h: &UniformHypergraph, b: &WeightedIncidenceMatrix, cert: &NormalityCertificate) -> CertificateDump {
    CertificateDump {
        hypergraph: label.to_string(),
        k: h.k(),
        m: h.m(),
        alpha: cert.alpha,
        weights: b
            .weights
            .iter()
            .map(|(&(v, e), &w)| (format!("({v},{e})"), w))
            .collect(),
        verdict: cert.verdict,
        consistent: cert.consistent,
        vertex_slacks: cert.vertex_slacks.clone(),
        edge_excess: cert.edge_excess.clone(),
    }
}

/// `[1/alpha - (m-2)] (sqrt(1-alpha) - sqrt(alpha))^2` with
/// `alpha = 1/rho(G(m-4,2))^2`, the lower bound on the `U31` excess ratio.
pub fn u31_excess_ratio_bound(m: usize) -> Result<f64> {
    let alpha = 1.0 / closed_form_rho_squared(ClosedForm::Gab, m, m - 4, 2)?;
    Ok((1.0 / alpha - (m as f64 - 2.0)) * ((1.0 - alpha).sqrt() - alpha.sqrt()).powi(2))
}
