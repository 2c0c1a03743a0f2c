//! Ranking of the named-family pools and the ordering claims checked on them.

use std::collections::BTreeMap;

use hyperspec_core::certificate::{bound_from_certificate, build_certificate, check, Bound, DEFAULT_CERT_TOL};
use hyperspec_core::families::candidate_pool;
use hyperspec_core::hypergraph::canonical_form;
use hyperspec_core::tensor::spectral_radius_default;
use hyperspec_core::{CanonicalForm, CertificateTag, FamilySpec, FamilyTag, Result, UniformHypergraph};
use rayon::prelude::*;

use crate::report::{ClaimCheck, ClaimStatus, Method, OrderingReport, Params, RankedEntry};

/// Margin for strict inequalities and designed equalities between radii.
pub const ORDER_TOL: f64 = 1e-8;
/// Largest disagreement allowed between the tensor solver and an exact value.
pub const AGREE_TOL: f64 = 1e-6;

const SCOPE: &str = "claims range over the named-family candidate pool at these parameters; \
the ordering over all hypergraphs is not machine-checked";

fn solve(spec: &FamilySpec, h: &UniformHypergraph) -> Result<RankedEntry> {
    let k = h.k();
    let tensor_rho = spectral_radius_default(h)?.rho;
    let mut rho = tensor_rho;
    let mut method = Method::Tensor;
    if let Some(g) = h.power_structure() {
        rho = g.spectral_radius()?.powf(2.0 / k as f64);
        method = Method::ClosedForm;
    } else if spec.tag == FamilyTag::B3(1) && spec.b == 0 && spec.c == 0 {
        let built = build_certificate(CertificateTag::B31Normal, spec.m, k)?;
        let cert = check(&built.hypergraph, &built.weights, built.alpha, DEFAULT_CERT_TOL)?;
        if let Ok(Bound::Exact(v)) = bound_from_certificate(&cert, k) {
            rho = v;
            method = Method::Certificate;
        }
    }
    Ok(RankedEntry {
        spec: spec.to_string(),
        notation: spec.notation(),
        rho,
        method,
        tensor_rho,
    })
}

/// Ranked pool plus a lookup from canonical form to rank.
struct Pool {
    ranked: Vec<RankedEntry>,
    index: BTreeMap<CanonicalForm, usize>,
}

impl Pool {
    fn build(cyclicity: usize, k: usize, m: usize) -> Result<Self> {
        let mut members = candidate_pool(cyclicity, k, m)?;
        members.sort_by_key(|(spec, _)| spec.to_string());
        let solved: Vec<(RankedEntry, CanonicalForm)> = members
            .par_iter()
            .map(|(spec, h)| Ok((solve(spec, h)?, canonical_form(h)?)))
            .collect::<Result<_>>()?;
        let mut solved = solved;
        solved.sort_by(|a, b| b.0.rho.total_cmp(&a.0.rho).then_with(|| a.0.spec.cmp(&b.0.spec)));
        let index = solved
            .iter()
            .enumerate()
            .map(|(i, (_, cf))| (cf.clone(), i))
            .collect();
        Ok(Self {
            ranked: solved.into_iter().map(|(e, _)| e).collect(),
            index,
        })
    }

    /// Rank of the pool member isomorphic to `spec`.
    fn find(&self, spec: Result<FamilySpec>) -> Result<usize> {
        let h = spec?.hypergraph()?;
        let cf = canonical_form(&h)?;
        self.index.get(&cf).copied().ok_or_else(|| {
            hyperspec_core::Error::Contract(format!("no pool member isomorphic to {h:?}"))
        })
    }
}

struct Claims<'a> {
    ranked: &'a [RankedEntry],
    tol: f64,
    out: Vec<ClaimCheck>,
}

impl<'a> Claims<'a> {
    fn push(&mut self, id: String, statement: String, larger: usize, smaller: usize, gap: f64, status: ClaimStatus) {
        self.out.push(ClaimCheck {
            id,
            statement,
            larger: self.ranked[larger].spec.clone(),
            smaller: self.ranked[smaller].spec.clone(),
            gap,
            status,
        });
    }

    fn gap(&self, larger: usize, smaller: usize) -> f64 {
        self.ranked[larger].rho - self.ranked[smaller].rho
    }

    fn statement(&self, larger: usize, rel: &str, smaller: usize) -> String {
        format!(
            "rho({}) {rel} rho({})",
            self.ranked[smaller].notation, self.ranked[larger].notation
        )
    }

    fn strict(&mut self, id: impl Into<String>, larger: usize, smaller: usize) {
        let gap = self.gap(larger, smaller);
        let status = if gap > self.tol {
            ClaimStatus::Verified
        } else {
            ClaimStatus::Violated
        };
        let statement = self.statement(larger, "<", smaller);
        self.push(id.into(), statement, larger, smaller, gap, status);
    }

    /// Expected equality that holds only at the boundary case.
    fn degenerate(&mut self, id: impl Into<String>, larger: usize, smaller: usize) {
        let gap = self.gap(larger, smaller);
        let status = if gap.abs() < self.tol {
            ClaimStatus::DegenerateEquality
        } else {
            ClaimStatus::Violated
        };
        let statement = self.statement(larger, "=", smaller);
        self.push(id.into(), statement, larger, smaller, gap, status);
    }

    fn equal(&mut self, id: impl Into<String>, statement: String, larger: usize, smaller: usize, gap: f64) {
        let status = if gap.abs() < self.tol {
            ClaimStatus::Verified
        } else {
            ClaimStatus::Violated
        };
        self.push(id.into(), statement, larger, smaller, gap, status);
    }

    /// Every exact radius agrees with the tensor solver.
    fn agreement(&mut self) {
        let worst = (0..self.ranked.len())
            .filter(|&i| self.ranked[i].method != Method::Tensor)
            .map(|i| (i, self.ranked[i].rho - self.ranked[i].tensor_rho))
            .max_by(|a, b| a.1.abs().total_cmp(&b.1.abs()));
        if let Some((i, diff)) = worst {
            let status = if diff.abs() < AGREE_TOL {
                ClaimStatus::Verified
            } else {
                ClaimStatus::Violated
            };
            let statement = format!(
                "exact and tensor radii agree within {AGREE_TOL:e} (worst: {})",
                self.ranked[i].notation
            );
            self.push("c0".into(), statement, i, i, diff, status);
        }
    }
}

fn report(cyclicity: usize, k: usize, m: usize, ranked: Vec<RankedEntry>, claims: Vec<ClaimCheck>) -> OrderingReport {
    OrderingReport {
        params: Params {
            cyclicity,
            k,
            m,
            tol: ORDER_TOL,
        },
        scope: SCOPE.to_string(),
        ranked,
        claims,
    }
}

/// Ranks the unicyclic pool and, for `m >= 8`, checks
/// - `c1.*`: the five-member chain (the lowest link is an equality at `m = 8`),
/// - `c2`: the `m = 8` equality of `U2(4,2)` and `U32(4,0;1)`,
/// - `c3.*`: every other member lies below `U2(m-4,2)`,
/// - `c4.*`: `rho(U2(a,b)) < rho(U2(a+1,b-1))` for `a >= b >= 1`.
///
/// Smaller `m` is ranked without claims.
pub fn verify_unicyclic(k: usize, m: usize) -> Result<OrderingReport> {
    let pool = Pool::build(1, k, m)?;
    let mut claims = Claims {
        ranked: &pool.ranked,
        tol: ORDER_TOL,
        out: Vec::new(),
    };
    claims.agreement();
    if m >= 8 {
        let top = [
            pool.find(FamilySpec::u2(k, m - 2, 0))?,
            pool.find(FamilySpec::u2(k, m - 3, 1))?,
            pool.find(FamilySpec::u31(k, m - 3, 0, 1))?,
            pool.find(FamilySpec::u32(k, m - 4, 0, 1))?,
            pool.find(FamilySpec::u2(k, m - 4, 2))?,
        ];
        for i in 0..3 {
            claims.strict(format!("c1.{}", i + 1), top[i], top[i + 1]);
        }
        if m == 8 {
            claims.degenerate("c1.4", top[3], top[4]);
            claims.degenerate("c2", top[3], top[4]);
        } else {
            claims.strict("c1.4", top[3], top[4]);
        }
        for i in 0..pool.ranked.len() {
            if !top.contains(&i) {
                let id = format!("c3.{}", pool.ranked[i].spec);
                claims.strict(id, top[4], i);
            }
        }
        for b in 1..=(m - 2) / 2 {
            let a = m - 2 - b;
            let lower = pool.find(FamilySpec::u2(k, a, b))?;
            let upper = pool.find(FamilySpec::u2(k, a + 1, b - 1))?;
            claims.strict(format!("c4.U2({a},{b})"), upper, lower);
        }
    }
    let claims = claims.out;
    Ok(report(1, k, m, pool.ranked, claims))
}

/// Ranks the bicyclic pool and, for `m >= 5`, checks
/// - `c1.tensor` / `c1.certificate`: `rho(B2(m-3,0)) = rho(B3_1(m-2,0,0))`
///   through the solver and through the α-normal certificate (`k >= 4`,
///   skipped otherwise),
/// - `c2`: `rho(B2(m-4,1)) < rho(B2(m-3,0))`,
/// - `c3.*`: every other member lies below `B2(m-4,1)`,
/// - `c4.*`: `rho(B2(a,b)) < rho(B2(a+1,b-1))` for `a >= b >= 1`.
pub fn verify_bicyclic(k: usize, m: usize) -> Result<OrderingReport> {
    let pool = Pool::build(2, k, m)?;
    let mut claims = Claims {
        ranked: &pool.ranked,
        tol: ORDER_TOL,
        out: Vec::new(),
    };
    claims.agreement();
    if m >= 5 {
        let b2_top = pool.find(FamilySpec::b2(k, m - 3, 0))?;
        let b2_next = pool.find(FamilySpec::b2(k, m - 4, 1))?;
        let mut top = vec![b2_top, b2_next];
        if k >= 4 {
            let b31 = pool.find(FamilySpec::b3(1, k, m - 2, 0, 0))?;
            top.push(b31);
            let tensor_gap = pool.ranked[b2_top].tensor_rho - pool.ranked[b31].tensor_rho;
            let statement = format!(
                "solver: rho({}) = rho({})",
                pool.ranked[b31].notation, pool.ranked[b2_top].notation
            );
            claims.equal("c1.tensor", statement, b2_top, b31, tensor_gap);

            let built = build_certificate(CertificateTag::B31Normal, m, k)?;
            let cert = check(&built.hypergraph, &built.weights, built.alpha, DEFAULT_CERT_TOL)?;
            let cert_gap = match bound_from_certificate(&cert, k) {
                Ok(Bound::Exact(v)) => pool.ranked[b2_top].rho - v,
                _ => f64::INFINITY,
            };
            let statement = format!(
                "certificate: rho({}) = alpha^(-1/k) = rho({})",
                pool.ranked[b31].notation, pool.ranked[b2_top].notation
            );
            claims.equal("c1.certificate", statement, b2_top, b31, cert_gap);
        } else {
            for id in ["c1.tensor", "c1.certificate"] {
                claims.push(
                    id.into(),
                    "B3_1 requires k >= 4".into(),
                    b2_top,
                    b2_top,
                    0.0,
                    ClaimStatus::Skipped,
                );
            }
        }
        claims.strict("c2", b2_top, b2_next);
        for i in 0..pool.ranked.len() {
            if !top.contains(&i) {
                let id = format!("c3.{}", pool.ranked[i].spec);
                claims.strict(id, b2_next, i);
            }
        }
        for b in 1..=(m - 3) / 2 {
            let a = m - 3 - b;
            let lower = pool.find(FamilySpec::b2(k, a, b))?;
            let upper = pool.find(FamilySpec::b2(k, a + 1, b - 1))?;
            claims.strict(format!("c4.B2({a},{b})"), upper, lower);
        }
    }
    let claims = claims.out;
    Ok(report(2, k, m, pool.ranked, claims))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unicyclic_m9_k3() {
        let r = verify_unicyclic(3, 9).unwrap();
        assert!(r.all_verified(), "{}", r.summary());
        assert_eq!(r.ranked[0].notation, "U2(7,0)");
        assert!((r.ranked[0].rho - 11f64.powf(1.0 / 3.0)).abs() < 1e-9);
        assert!((r.ranked[0].rho - 2.2239801).abs() < 1e-6);
    }

    #[test]
    fn unicyclic_m8_degenerate() {
        let r = verify_unicyclic(3, 8).unwrap();
        assert!(r.all_verified(), "{}", r.summary());
        let c2 = r.claim("c2").unwrap();
        assert_eq!(c2.status, ClaimStatus::DegenerateEquality);
        assert!(c2.gap.abs() < 1e-8);
        let u2 = r.entry("U2(4,2)").unwrap();
        assert!((u2.rho - (5.0 + 17f64.sqrt()).powf(1.0 / 3.0)).abs() < 1e-9);
        assert!((u2.rho - 2.0895).abs() < 1e-4);
        let pos = r.ranked.iter().position(|e| e.notation == "U2(4,2)").unwrap();
        // tied with U32(4,0;1) for fourth/fifth place
        assert!(pos == 3 || pos == 4);
    }

    #[test]
    fn small_m_has_no_ordering_claims() {
        let r = verify_unicyclic(3, 6).unwrap();
        assert!(r.claims.iter().all(|c| c.id == "c0"));
    }

    #[test]
    fn bicyclic_k4_m5() {
        let r = verify_bicyclic(4, 5).unwrap();
        assert!(r.all_verified(), "{}", r.summary());
        assert_eq!(r.claim("c1.tensor").unwrap().status, ClaimStatus::Verified);
        assert_eq!(r.claim("c1.certificate").unwrap().status, ClaimStatus::Verified);
        let b31 = r.entry("B3_1(3,0,0)").unwrap();
        assert_eq!(b31.method, Method::Certificate);
        assert!((b31.rho - 1.8211603).abs() < 1e-6);
    }

    #[test]
    fn bicyclic_k3_skips_b31() {
        let r = verify_bicyclic(3, 5).unwrap();
        assert!(r.all_verified(), "{}", r.summary());
        assert_eq!(r.claim("c1.tensor").unwrap().status, ClaimStatus::Skipped);
    }

    #[test]
    fn bicyclic_k4_m6_gap() {
        let r = verify_bicyclic(4, 6).unwrap();
        let c2 = r.claim("c2").unwrap();
        let expected = 12f64.powf(0.25) - (0.5 * (12.0 + 136f64.sqrt())).powf(0.25);
        assert!((c2.gap - expected).abs() < 1e-9);
    }
}
