mod common;

use hyperspec_core::families::FamilySpec;
use hyperspec_core::tensor::{apply, residual, spectral_radius, spectral_radius_default};
use hyperspec_core::UniformHypergraph;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn star_powers() {
    for k in 3..=5 {
        for m in 1..=9 {
            let h = FamilySpec::star_power(k, m).unwrap().hypergraph().unwrap();
            let est = spectral_radius_default(&h).unwrap();
            let expected = (m as f64).powf(1.0 / k as f64);
            assert!((est.rho - expected).abs() < 1e-8, "k={k} m={m}");
        }
    }
}

#[test]
fn closed_form_families() {
    for k in 3..=5 {
        for m in 5..=10usize {
            let u2 = FamilySpec::u2(k, m - 2, 0).unwrap().hypergraph().unwrap();
            let b2 = FamilySpec::b2(k, m - 3, 0).unwrap().hypergraph().unwrap();
            let kf = k as f64;
            let r_u2 = spectral_radius_default(&u2).unwrap().rho;
            let r_b2 = spectral_radius_default(&b2).unwrap().rho;
            assert!((r_u2 - (m as f64 + 2.0).powf(1.0 / kf)).abs() < 1e-8);
            assert!((r_b2 - (m as f64 + 6.0).powf(1.0 / kf)).abs() < 1e-8);
        }
    }
}

#[test]
fn tighter_tolerance_stays_inside_looser_bracket() {
    let h = FamilySpec::u31(3, 3, 1, 2).unwrap().hypergraph().unwrap();
    let loose = spectral_radius(&h, 1e-4, 1_000_000).unwrap();
    let tight = spectral_radius(&h, 1e-12, 1_000_000).unwrap();
    assert!(loose.lower_bound <= tight.rho + 1e-12 && tight.rho <= loose.upper_bound + 1e-12);
    assert!(tight.residual < 1e-10);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn apply_is_homogeneous_and_monotone(seed in any::<u64>(), k in 2usize..6, m in 1usize..7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = common::random_connected(&mut rng, k, m, k - 1);
        let x: Vec<f64> = (0..h.n()).map(|_| rng.gen_range(0.1..2.0)).collect();
        let t = rng.gen_range(0.5..3.0);
        let tx: Vec<f64> = x.iter().map(|v| v * t).collect();
        let y = apply(&h, &x).unwrap();
        let ty = apply(&h, &tx).unwrap();
        for (a, b) in y.iter().zip(&ty) {
            prop_assert!((b - a * t.powi(k as i32 - 1)).abs() <= 1e-9 * b.abs().max(1.0));
        }
        let bigger: Vec<f64> = x.iter().map(|v| v + rng.gen_range(0.0..1.0)).collect();
        let yb = apply(&h, &bigger).unwrap();
        for (a, b) in y.iter().zip(&yb) {
            prop_assert!(b + 1e-12 >= *a);
        }
    }

    #[test]
    fn estimate_is_an_eigenpair(seed in any::<u64>(), k in 2usize..6, m in 1usize..8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = common::random_connected(&mut rng, k, m, k - 1);
        let est = spectral_radius_default(&h).unwrap();
        prop_assert!(est.lower_bound <= est.rho && est.rho <= est.upper_bound);
        prop_assert!(est.upper_bound - est.lower_bound < 1e-10);
        prop_assert!(est.residual <= 1e-9);
        prop_assert!(est.perron.iter().all(|&v| v > 0.0 && v <= 1.0));
        prop_assert!((residual(&h, est.rho, &est.perron).unwrap() - est.residual).abs() < 1e-15);
        // Perron vector of the tensor: max entry normalised to 1
        prop_assert!((est.perron.iter().cloned().fold(0.0, f64::max) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn power_hypergraph_radius(seed in any::<u64>(), n in 2usize..7, k in 3usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_multigraph(&mut rng, n, 3);
        let h = g.kth_power(k).unwrap();
        let est = spectral_radius_default(&h).unwrap();
        let jac = common::jacobi_top_eigenvalue(&common::adjacency_f64(&g));
        prop_assert!((est.rho - jac.powf(2.0 / k as f64)).abs() < 1e-6);
    }

    #[test]
    fn removing_an_edge_lowers_the_radius(seed in any::<u64>(), k in 3usize..5, m in 2usize..7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = common::random_connected(&mut rng, k, m, 2);
        let full = spectral_radius_default(&h).unwrap().rho;
        // the last edge was attached last, so dropping it keeps the rest connected
        let keep: Vec<usize> = (0..m - 1).collect();
        let sub = h.edge_subgraph(&keep).unwrap();
        prop_assume!(sub.is_connected());
        let part = spectral_radius_default(&sub).unwrap().rho;
        prop_assert!(part < full - 1e-9, "{} !< {}", part, full);
    }
}

#[test]
fn single_edge_in_every_uniformity() {
    for k in 2..=7 {
        let h = UniformHypergraph::new(k, k, vec![(0..k).collect()]).unwrap();
        assert!((spectral_radius_default(&h).unwrap().rho - 1.0).abs() < 1e-12);
    }
}
