use std::fmt::Write as _;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Tensor,
    ClosedForm,
    Certificate,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Tensor => "tensor",
            Method::ClosedForm => "closed-form",
            Method::Certificate => "certificate",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankedEntry {
    pub spec: String,
    pub notation: String,
    /// Radius from the most exact method available.
    pub rho: f64,
    pub method: Method,
    /// Radius from the tensor solver, always computed.
    pub tensor_rho: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimStatus {
    Verified,
    Violated,
    DegenerateEquality,
    /// Not applicable at these parameters (infeasible family).
    Skipped,
}

impl ClaimStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ClaimStatus::Verified => "verified",
            ClaimStatus::Violated => "violated",
            ClaimStatus::DegenerateEquality => "degenerate-equality",
            ClaimStatus::Skipped => "skipped",
        }
    }
}

/// A comparison between two ranked entries; `gap = rho(larger) - rho(smaller)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimCheck {
    pub id: String,
    pub statement: String,
    pub larger: String,
    pub smaller: String,
    pub gap: f64,
    pub status: ClaimStatus,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Params {
    pub cyclicity: usize,
    pub k: usize,
    pub m: usize,
    pub tol: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrderingReport {
    pub params: Params,
    pub scope: String,
    /// Sorted by `rho` descending, ties by spec string.
    pub ranked: Vec<RankedEntry>,
    pub claims: Vec<ClaimCheck>,
}

impl OrderingReport {
    pub fn violations(&self) -> impl Iterator<Item = &ClaimCheck> {
        self.claims
            .iter()
            .filter(|c| c.status == ClaimStatus::Violated)
    }

    pub fn all_verified(&self) -> bool {
        self.violations().next().is_none()
    }

    pub fn claim(&self, id: &str) -> Option<&ClaimCheck> {
        self.claims.iter().find(|c| c.id == id)
    }

    pub fn entry(&self, notation: &str) -> Option<&RankedEntry> {
        self.ranked.iter().find(|e| e.notation == notation)
    }

    pub fn summary(&self) -> String {
        let p = &self.params;
        let mut out = String::new();
        let kind = if p.cyclicity == 1 { "unicyclic" } else { "bicyclic" };
        let _ = writeln!(out, "{kind} k={} m={}: {} pool members", p.k, p.m, self.ranked.len());
        for (i, e) in self.ranked.iter().take(6).enumerate() {
            let _ = writeln!(
                out,
                "  {:>2}. {:<22} {:.12} ({})",
                i + 1,
                e.notation,
                e.rho,
                e.method.as_str()
            );
        }
        let mut counts = [0usize; 4];
        for c in &self.claims {
            counts[c.status as usize] += 1;
        }
        let _ = writeln!(
            out,
            "  claims: {} verified, {} violated, {} degenerate-equality, {} skipped",
            counts[0], counts[1], counts[2], counts[3]
        );
        for c in self.claims.iter().filter(|c| {
            matches!(c.status, ClaimStatus::Violated | ClaimStatus::DegenerateEquality)
        }) {
            let _ = writeln!(
                out,
                "  {} {}: {} (gap {:.3e})",
                c.status.as_str(),
                c.id,
                c.statement,
                c.gap
            );
        }
        out
    }
}

/// One ranked row per line: `cyclicity,k,m,rank,spec,notation,rho,method,tensor_rho`.
pub fn to_csv(reports: &[OrderingReport]) -> String {
    let mut out = String::from("cyclicity,k,m,rank,spec,notation,rho,method,tensor_rho\n");
    for r in reports {
        for (i, e) in r.ranked.iter().enumerate() {
            let _ = writeln!(
                out,
                "{},{},{},{},\"{}\",\"{}\",{:.15},{},{:.15}",
                r.params.cyclicity,
                r.params.k,
                r.params.m,
                i + 1,
                e.spec,
                e.notation,
                e.rho,
                e.method.as_str(),
                e.tensor_rho
            );
        }
    }
    out
}
