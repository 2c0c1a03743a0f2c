use hyperspec_core::certificate::{
    bound_from_certificate, build_certificate, check, check_consistency, u31_excess_ratio_bound, Bound,
    CertificateTag, Verdict, WeightedIncidenceMatrix, DEFAULT_CERT_TOL,
};
use hyperspec_core::families::family_specs;
use hyperspec_core::hypergraph::{enumerate_cycles, DEFAULT_CYCLE_BUDGET};
use hyperspec_core::tensor::spectral_radius_default;
use hyperspec_core::UniformHypergraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Consistency by brute force: every cycle's ratio product is 1.
fn all_cycle_products_are_one(h: &UniformHypergraph, b: &WeightedIncidenceMatrix) -> bool {
    enumerate_cycles(h, h.m(), DEFAULT_CYCLE_BUDGET)
        .unwrap()
        .iter()
        .all(|c| {
            let l = c.len();
            let log: f64 = (0..l)
                .map(|i| {
                    let e = c.edges[i];
                    let from = c.vertices[i];
                    let to = c.vertices[(i + 1) % l];
                    b.get(to, e).unwrap().ln() - b.get(from, e).unwrap().ln()
                })
                .sum();
            log.abs() < 1e-9
        })
}

#[test]
fn every_certificate_over_its_range() {
    for tag in CertificateTag::ALL {
        for k in tag.min_k().max(3)..=5 {
            for m in tag.min_m()..=20 {
                let built = build_certificate(tag, m, k).unwrap();
                let cert = check(&built.hypergraph, &built.weights, built.alpha, DEFAULT_CERT_TOL).unwrap();
                assert_eq!(cert.verdict, tag.expected_verdict(), "{tag} m={m} k={k}");
                assert!(cert.consistent, "{tag} m={m} k={k}");
                let rho = spectral_radius_default(&built.hypergraph).unwrap().rho;
                match bound_from_certificate(&cert, k).unwrap() {
                    Bound::Exact(v) => assert!((rho - v).abs() < 1e-6, "{tag} m={m} k={k}"),
                    Bound::StrictUpper(v) => assert!(rho < v - 1e-9, "{tag} m={m} k={k}: {rho} vs {v}"),
                }
            }
        }
    }
}

#[test]
fn certificates_pass_the_cycle_oracle() {
    for tag in CertificateTag::ALL {
        let k = tag.min_k();
        for m in tag.min_m()..=12 {
            let built = build_certificate(tag, m, k).unwrap();
            assert!(all_cycle_products_are_one(&built.hypergraph, &built.weights), "{tag} m={m}");
        }
    }
}

#[test]
fn consistency_checker_agrees_with_cycle_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for k in 3..=4 {
        for m in 3..=8 {
            for r in 1..=2 {
                for spec in family_specs(r, k, m) {
                    let h = spec.hypergraph().unwrap();
                    let f: Vec<f64> = (0..h.n()).map(|_| rng.gen_range(0.1..1.0)).collect();
                    let g: Vec<f64> = (0..h.m()).map(|_| rng.gen_range(0.1..1.0)).collect();
                    let product = WeightedIncidenceMatrix::from_fn(&h, |v, e| f[v] * g[e]).unwrap();
                    assert!(check_consistency(&h, &product, DEFAULT_CERT_TOL).unwrap());
                    assert!(all_cycle_products_are_one(&h, &product));

                    let noisy = WeightedIncidenceMatrix::from_fn(&h, |_, _| rng.gen_range(0.1..1.0)).unwrap();
                    assert_eq!(
                        check_consistency(&h, &noisy, DEFAULT_CERT_TOL).unwrap(),
                        all_cycle_products_are_one(&h, &noisy),
                        "{spec}"
                    );
                }
            }
        }
    }
}

#[test]
fn u31_excess_ratio_in_stated_interval() {
    for m in 8..=14 {
        let v = u31_excess_ratio_bound(m).unwrap();
        assert!(v > 1.1 && v < 1.4, "m={m}: {v}");
    }
}

#[test]
fn b4_bound_at_m5() {
    let built = build_certificate(CertificateTag::B4Subnormal, 5, 4).unwrap();
    // rho(M(1,1))^2 is the top root of t^2 - 11t + 1
    let beta = 1.0 / (0.5 * (11.0 + 117f64.sqrt()));
    assert!((built.alpha - beta).abs() < 1e-15);
    let cert = check(&built.hypergraph, &built.weights, built.alpha, DEFAULT_CERT_TOL).unwrap();
    assert_eq!(cert.verdict, Verdict::StrictlySubnormal);
    let bound = bound_from_certificate(&cert, 4).unwrap();
    let rho = spectral_radius_default(&built.hypergraph).unwrap().rho;
    assert!(matches!(bound, Bound::StrictUpper(v) if rho < v));
}
