//! Library results against the brute-force oracles in `support`.

mod support;

use snarkforge_core::connectivity::is_two_connected;
use snarkforge_core::generation::{GenConfig, GenSpec, Generator};
use snarkforge_core::graph::named::*;
use snarkforge_core::oddness::count_perfect_matchings;
use snarkforge_core::symmetry::automorphism_order;
use snarkforge_core::*;

#[test]
fn oracles_agree_on_hand_checked_values() {
    // K4: 3 perfect matchings, 24 automorphisms, girth 3, colourable.
    let k = k4();
    assert_eq!(support::perfect_matching_count(&k), 3);
    assert_eq!(support::automorphism_count(&k), 24);
    assert_eq!(support::girth(&k), 3);
    assert_eq!(support::chromatic_index(&k), 3);
    assert_eq!(support::oddness(&k), Some(0));
    // Two K4s joined by two edges separate two cycles with a 2-cut.
    assert_eq!(support::cyclic_edge_connectivity(&prism_dumbbell(), 3), Some(2));
}

#[test]
fn petersen_certificate() {
    let p = petersen();
    assert_eq!(p.girth(), support::girth(&p));
    assert_eq!(p.girth(), 5);
    assert_eq!(chromatic_index(&p), support::chromatic_index(&p));
    assert_eq!(chromatic_index(&p), 4);
    assert_eq!(count_perfect_matchings(&p), support::perfect_matching_count(&p));
    assert_eq!(count_perfect_matchings(&p), 6);
    assert_eq!(Some(oddness(&p, OddnessMode::CrossChecked).unwrap().value), support::oddness(&p));
    assert_eq!(support::oddness(&p), Some(2));
    assert_eq!(vertex_connectivity(&p), support::vertex_connectivity(&p));
    assert_eq!(vertex_connectivity(&p), 3);
    assert_eq!(
        cyclic_edge_connectivity(&p, None).unwrap().value(),
        support::cyclic_edge_connectivity(&p, 7)
    );
    assert_eq!(support::cyclic_edge_connectivity(&p, 7), Some(5));
    assert_eq!(automorphism_order(&p), support::automorphism_count(&p));
    assert_eq!(automorphism_order(&p), 120);
}

#[test]
fn prism_and_k33() {
    for g in [prism(), k33()] {
        assert_eq!(chromatic_index(&g), support::chromatic_index(&g));
        assert_eq!(count_perfect_matchings(&g), support::perfect_matching_count(&g));
        assert_eq!(automorphism_order(&g), support::automorphism_count(&g));
        assert_eq!(g.girth(), support::girth(&g));
        assert_eq!(
            oddness(&g, OddnessMode::CrossChecked).unwrap().value,
            support::oddness(&g).unwrap()
        );
    }
    assert_eq!(cyclic_edge_connectivity(&prism(), None).unwrap().value(), Some(3));
    assert_eq!(support::cyclic_edge_connectivity(&prism(), 4), Some(3));
}

#[test]
fn generator_matches_naive_enumeration() {
    let mut gen = Generator::new(GenConfig::default());
    for (n, expected) in [(6, 2), (8, 5), (10, 19)] {
        let naive = support::naive_connected_cubic(n);
        let ours = gen.generate(&GenSpec::new(n, 3)).unwrap();
        assert_eq!(naive.len(), expected, "naive count at {n}");
        assert_eq!(ours.len(), naive.len(), "generated count at {n}");
        // Every naive class is represented exactly once.
        for g in &naive {
            let hits = ours.iter().filter(|h| support::isomorphic(g, h)).count();
            assert_eq!(hits, 1, "{g:?}");
        }
    }
}

#[test]
fn isomorphism_test_matches_brute_force() {
    let mut graphs = Vec::new();
    for n in [4, 6, 8, 10] {
        graphs.extend(support::naive_connected_cubic(n));
    }
    for (i, a) in graphs.iter().enumerate() {
        for b in &graphs[i..] {
            assert_eq!(are_isomorphic(a, b), support::isomorphic(a, b), "{a:?} {b:?}");
        }
        let c = support::shuffled(a, i as u64);
        assert!(are_isomorphic(a, &c));
        assert_eq!(automorphism_order(a), support::automorphism_count(a), "{a:?}");
    }
}

#[test]
fn invariants_on_small_graphs_match_oracles() {
    let mut gen = Generator::new(GenConfig::default());
    for n in [6, 8, 10] {
        for g in gen.generate(&GenSpec::new(n, 3)).unwrap() {
            assert_eq!(g.girth(), support::girth(&g), "{g:?}");
            assert_eq!(vertex_connectivity(&g), support::vertex_connectivity(&g), "{g:?}");
            assert_eq!(count_perfect_matchings(&g), support::perfect_matching_count(&g), "{g:?}");
            if g.is_connected() {
                assert_eq!(
                    cyclic_edge_connectivity(&g, None).unwrap().value(),
                    support::cyclic_edge_connectivity(&g, g.size()),
                    "{g:?}"
                );
            }
            if g.is_bridgeless() {
                let ours = oddness(&g, OddnessMode::CrossChecked).unwrap().value;
                assert_eq!(Some(ours), support::oddness(&g), "{g:?}");
            }
            assert_eq!(chromatic_index(&g), support::chromatic_index(&g), "{g:?}");
            assert_eq!(is_snark(&g, 3), is_two_connected(&g) && support::chromatic_index(&g) == 4);
        }
    }
}

#[test]
fn canonical_form_survives_many_relabellings() {
    let mut graphs = vec![petersen()];
    graphs.extend(support::naive_connected_cubic(10));
    for (i, g) in graphs.iter().enumerate() {
        let reference = canonical_form(g);
        for seed in 0..100 {
            let h = support::shuffled(g, (i as u64) << 32 | seed);
            let cf = canonical_form(&h);
            assert_eq!(cf.key, reference.key, "{g:?}");
            assert_eq!(cf.automorphism_order, reference.automorphism_order);
        }
    }
}

#[test]
fn invariant_records_match_oracles() {
    use snarkforge_core::pipeline::compute_all_invariants;
    let graphs = Generator::new(GenConfig::default()).generate(&GenSpec::new(10, 3)).unwrap();
    let records = compute_all_invariants(&graphs, OddnessMode::CrossChecked, 2).unwrap();
    for (g, r) in graphs.iter().zip(&records) {
        assert_eq!(r.key, encode_graph6(g));
        assert_eq!(r.girth, support::girth(g));
        assert_eq!(r.chi_prime, support::chromatic_index(g));
        assert_eq!(r.oddness, if g.is_bridgeless() { support::oddness(g) } else { None });
        assert_eq!(r.kappa, support::vertex_connectivity(g));
        assert_eq!(r.cyclic_lambda, support::cyclic_edge_connectivity(g, g.size()));
        assert_eq!(r.aut_order, support::automorphism_count(g));
    }
}
