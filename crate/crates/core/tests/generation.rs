//! Generator counts against the published enumerations of connected cubic
//! graphs, and snark counts at the orders where they are small.

use snarkforge_core::generation::{GenConfig, GenSpec, Generator};
use snarkforge_core::*;

#[test]
fn counts_through_order_18() {
    let mut gen = Generator::new(GenConfig::default());
    let expected = [
        (16, 3, 4060),
        (16, 4, 792),
        (16, 5, 49),
        (18, 3, 41301),
        (18, 4, 7805),
        (18, 5, 455),
    ];
    for (n, girth, count) in expected {
        assert_eq!(gen.generate(&GenSpec::new(n, girth)).unwrap().len(), count, "n={n} girth>={girth}");
    }
}

#[test]
fn generated_graphs_satisfy_the_request() {
    let mut gen = Generator::new(GenConfig::default());
    let spec = GenSpec {
        order: 14,
        min_girth: 4,
        two_connected: true,
        snarks_only: false,
    };
    let graphs = gen.generate_keyed(&spec).unwrap();
    assert!(!graphs.is_empty());
    for w in graphs.windows(2) {
        assert!(w[0].key < w[1].key);
    }
    for g in &graphs {
        assert!(g.graph.girth() >= 4);
        assert!(g.graph.is_connected() && vertex_connectivity(&g.graph) >= 2);
        assert_eq!(encode_graph6(&g.graph), g.key);
        assert_eq!(canonical_form(&g.graph).automorphism_order, g.automorphism_order);
    }
}

#[test]
fn snarks_are_uncolourable_and_two_connected() {
    let mut gen = Generator::new(GenConfig::default());
    for n in [10, 14, 16] {
        for g in gen.generate(&GenSpec::snarks(n, 4)).unwrap() {
            assert_eq!(chromatic_index(&g), 4);
            assert!(vertex_connectivity(&g) >= 2);
            let odd = oddness(&g, OddnessMode::CrossChecked).unwrap().value;
            assert!(odd >= 2 && odd % 2 == 0);
        }
    }
}

#[test]
fn worker_count_does_not_change_output() {
    let one = Generator::new(GenConfig::default().with_workers(1))
        .generate(&GenSpec::new(14, 3))
        .unwrap();
    let four = Generator::new(GenConfig::default().with_workers(4))
        .generate(&GenSpec::new(14, 3))
        .unwrap();
    assert_eq!(one, four);
}

#[test]
fn ceiling_is_enforced() {
    let mut gen = Generator::new(GenConfig {
        ceiling: 12,
        workers: 1,
    });
    assert!(matches!(
        gen.generate(&GenSpec::new(14, 3)),
        Err(GenerationError::OrderTooLarge { order: 14, ceiling: 12 })
    ));
    assert!(matches!(gen.generate(&GenSpec::new(9, 3)), Err(GenerationError::InvalidSpec(_))));
}
