mod common;

use hyperspec_core::families::{classify, family_specs, FamilySpec, FamilyTag, Generated};
use hyperspec_core::hypergraph::{count_cycles, enumerate_connected, is_isomorphic, parse_hg, write_hg};
use hyperspec_core::UniformHypergraph;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn cycle_count_matches_cyclic_order_on_small_hypergraphs() {
    for (k, max_m) in [(2, 4), (3, 4), (4, 3)] {
        for m in 1..=max_m {
            for r in 0..=3 {
                for h in enumerate_connected(k, m, r).unwrap() {
                    let cycles = count_cycles(&h, m).unwrap();
                    assert_eq!(r == 0, cycles == 0, "k={k} m={m}: {h:?}");
                    if k >= 3 {
                        assert_eq!(r == 1, cycles == 1, "k={k} m={m}: {h:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn codegree_bounds_on_small_hypergraphs() {
    for m in 1..=4 {
        for h in enumerate_connected(3, m, 1).unwrap() {
            let (pair, triple) = h.codegree_maxima();
            assert!(pair <= 2 && triple <= 1, "{h:?}");
        }
        for h in enumerate_connected(3, m, 2).unwrap() {
            let (pair, triple) = h.codegree_maxima();
            assert!(pair <= 3 && triple <= 2, "{h:?}");
        }
    }
}

#[test]
fn unicyclic_classification_is_exhaustive_at_k3() {
    for m in 2..=4 {
        for h in enumerate_connected(3, m, 1).unwrap() {
            let core = h.analyze().unwrap().non_pendent_count;
            match classify(&h) {
                Some(spec) => {
                    assert!(is_isomorphic(&spec.hypergraph().unwrap(), &h).unwrap());
                    assert!(core <= 3);
                }
                None => assert!(core >= 4, "unclassified with {core} non-pendent vertices: {h:?}"),
            }
        }
    }
}

#[test]
fn family_members_round_trip_through_classify() {
    for k in 3..=4 {
        for m in 5..=7 {
            for r in 1..=2 {
                for spec in family_specs(r, k, m) {
                    let h = spec.hypergraph().unwrap();
                    let found = classify(&h).expect("named family must classify");
                    assert!(is_isomorphic(&found.hypergraph().unwrap(), &h).unwrap(), "{spec} -> {found}");
                }
            }
        }
    }
}

#[test]
fn family_structure_promises() {
    for k in 3..=5 {
        for m in 5..=8usize {
            for r in 1..=2usize {
                for spec in family_specs(r, k, m) {
                    let rep = spec.hypergraph().unwrap().analyze().unwrap();
                    assert_eq!(rep.cyclic_order, r, "{spec}");
                    assert_eq!(rep.component_count, 1);
                    match spec.tag {
                        FamilyTag::G1Power => assert!(rep.is_linear),
                        FamilyTag::U2 | FamilyTag::B2 => assert!(!rep.is_linear),
                        _ => {}
                    }
                }
            }
        }
    }
}

#[test]
fn power_structure_round_trips() {
    for k in 3..=5 {
        for m in 4..=9usize {
            for a in 0..=m - 2 {
                let u2 = FamilySpec::u2(k, a, m - 2 - a).unwrap().hypergraph().unwrap();
                let Generated::Graph(g) = FamilySpec::gab(a, m - 2 - a).unwrap().generate().unwrap() else {
                    unreachable!()
                };
                let back = u2.power_structure().unwrap();
                assert_eq!(back.char_poly(), g.char_poly());
                assert!(is_isomorphic(&back.kth_power(k).unwrap(), &u2).unwrap());
            }
            for a in 0..=m - 3 {
                let b2 = FamilySpec::b2(k, a, m - 3 - a).unwrap().hypergraph().unwrap();
                let Generated::Graph(g) = FamilySpec::mab(a, m - 3 - a).unwrap().generate().unwrap() else {
                    unreachable!()
                };
                assert_eq!(b2.power_structure().unwrap().char_poly(), g.char_poly());
            }
            // G2 and G3 powers are U32 members
            let g2 = FamilySpec::graph(FamilyTag::G2, m).unwrap();
            let g3 = FamilySpec::graph(FamilyTag::G3, m).unwrap();
            for (graph_spec, hyper_spec) in [
                (g2, FamilySpec::u32(k, 0, 0, m - 3).unwrap()),
                (g3, FamilySpec::u32(k, m - 4, 0, 1).unwrap()),
            ] {
                let Generated::Graph(g) = graph_spec.generate().unwrap() else { unreachable!() };
                let h = hyper_spec.hypergraph().unwrap();
                assert!(is_isomorphic(&g.kth_power(k).unwrap(), &h).unwrap(), "{graph_spec}");
            }
        }
    }
    // B3_1 has an edge with only k-3 pendent vertices
    let b31 = FamilySpec::b3(1, 4, 1, 0, 0).unwrap().hypergraph().unwrap();
    assert!(b31.power_structure().is_none());
}

#[test]
fn io_round_trip_for_families() {
    for spec in family_specs(2, 4, 6) {
        let h = spec.hypergraph().unwrap();
        let back = parse_hg(&write_hg(&h)).unwrap();
        assert!(is_isomorphic(&back, &h).unwrap());
    }
}

fn connected_subset<R: Rng>(rng: &mut R, h: &UniformHypergraph) -> Vec<usize> {
    let mut chosen = vec![rng.gen_range(0..h.m())];
    let target = rng.gen_range(1..=h.m());
    while chosen.len() < target {
        let frontier: Vec<usize> = (0..h.m())
            .filter(|e| !chosen.contains(e))
            .filter(|&e| chosen.iter().any(|&c| h.edge(c).iter().any(|&v| h.contains(e, v))))
            .collect();
        if frontier.is_empty() {
            break;
        }
        chosen.push(frontier[rng.gen_range(0..frontier.len())]);
    }
    chosen.sort_unstable();
    chosen
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn connected_subgraphs_have_smaller_cyclic_order(seed in any::<u64>(), k in 2usize..6, m in 1usize..9) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = common::random_connected(&mut rng, k, m, k - 1);
        let sub = h.edge_subgraph(&connected_subset(&mut rng, &h)).unwrap();
        prop_assert!(sub.is_connected());
        prop_assert!(sub.cyclic_order() <= h.cyclic_order());
    }

    #[test]
    fn relabelling_preserves_canonical_form(seed in any::<u64>(), k in 2usize..5, m in 1usize..7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = common::random_connected(&mut rng, k, m, k - 1);
        let mut perm: Vec<usize> = (0..h.n()).collect();
        rand::seq::SliceRandom::shuffle(perm.as_mut_slice(), &mut rng);
        let g = h.relabel(&perm).unwrap();
        prop_assert!(is_isomorphic(&h, &g).unwrap());
        prop_assert_eq!(h.cyclic_order(), g.cyclic_order());
    }
}
