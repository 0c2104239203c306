//! Cross-module invariants: exhaustive checks on small graphs and
//! property tests on random ones.

use cid_core::channel::Channel;
use cid_core::combinatorics::{
    chromatic_number, clique_number, fractional_chromatic, independence_number,
};
use cid_core::graph::{Diameter, Graph};
use cid_core::identification::{assisted_ci, ci_unassisted, min_classical_assistance};
use cid_core::quantum::{builtin_system, is_orthogonal_representation, VectorSystem};
use num_rational::BigRational;
use proptest::prelude::*;

fn ratio(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

/// All labeled graphs on n vertices.
fn all_graphs(n: usize, self_loops: bool) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u32..1 << pairs.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::new(n, &edges, self_loops).unwrap()
    })
}

#[test]
fn strong_square_never_grows_diameter() {
    // distances in a strong product are maxima of coordinate distances
    for n in 1..=5 {
        for g in all_graphs(n, false) {
            if !g.is_connected() {
                continue;
            }
            let Diameter::Finite(d) = g.diameter() else {
                unreachable!()
            };
            let Diameter::Finite(dd) = g.strong_product(&g).diameter() else {
                panic!("square of a connected graph is connected")
            };
            assert!(dd <= d, "{g:?}");
        }
    }
}

#[test]
fn conormal_commutes_up_to_index_swap() {
    let samples = vec![
        Graph::cycle(3).unwrap(),
        Graph::cycle(5).unwrap(),
        Graph::star(3).unwrap(),
        Graph::complete(4).unwrap(),
        Graph::edgeless(2, false),
        Graph::wheel(4).unwrap(),
    ];
    for g in &samples {
        for h in &samples {
            let gh = g.conormal_product(h);
            let hg = h.conormal_product(g);
            let (ng, nh) = (g.vertex_count(), h.vertex_count());
            // swap (a,b) -> (b,a): index a*nh+b maps to b*ng+a
            for a in 0..ng {
                for b in 0..nh {
                    for a2 in 0..ng {
                        for b2 in 0..nh {
                            assert_eq!(
                                gh.adjacent(a * nh + b, a2 * nh + b2),
                                hg.adjacent(b * ng + a, b2 * ng + a2)
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn conormal_square_preserves_small_diameter() {
    // diam <= 2 and no isolated vertex survive the co-normal square
    let instances = vec![
        Graph::pentagon_variant(1).unwrap().with_self_loops(false),
        Graph::wheel(5).unwrap(),
        builtin_system("ks18").unwrap().graph,
    ];
    for g in instances {
        assert!(g.diameter().is_at_most(2), "{g:?}");
        assert!((0..g.vertex_count()).all(|v| g.degree(v) > 0));
        let squared = g.conormal_product(&g);
        assert!(squared.diameter().is_at_most(2), "{g:?}");
    }
}

#[test]
fn independence_equals_complement_clique_exhaustively() {
    // spot-check the two searches against each other on every labeled
    // graph up to 6 vertices and a full sweep of 7-vertex graphs below
    for n in 0..=6 {
        for g in all_graphs(n, false) {
            let alpha = independence_number(&g);
            let omega = clique_number(&g.complement());
            assert_eq!(alpha.size, omega.size, "{g:?}");
        }
    }
}

#[test]
fn independence_equals_complement_clique_on_seven_vertices() {
    for g in all_graphs(7, false) {
        assert_eq!(
            independence_number(&g).size,
            clique_number(&g.complement()).size,
            "{g:?}"
        );
    }
}

#[test]
fn chromatic_oracle_agreement_on_corpus() {
    // every SNFC corpus channel on <= 9 inputs: the brute-force minimum
    // over fully identifying partitions equals chi of the support graph
    let mut graphs = vec![
        Graph::cycle(4).unwrap(),
        Graph::cycle(5).unwrap(),
        Graph::cycle(6).unwrap(),
        Graph::cycle(7).unwrap(),
        Graph::cycle(8).unwrap(),
        Graph::cycle(9).unwrap(),
        Graph::wheel(4).unwrap(),
        Graph::wheel(5).unwrap(),
        Graph::wheel(6).unwrap(),
        Graph::wheel(7).unwrap(),
        Graph::wheel(8).unwrap(),
        Graph::friendship(2).unwrap(),
        Graph::friendship(3).unwrap(),
        Graph::friendship(4).unwrap(),
        Graph::star(2).unwrap(),
        Graph::star(4).unwrap(),
        Graph::star(6).unwrap(),
        Graph::star(8).unwrap(),
        Graph::turan(4, 2).unwrap(),
        Graph::turan(6, 2).unwrap(),
        Graph::turan(8, 2).unwrap(),
        Graph::turan(9, 2).unwrap(),
        Graph::turan(9, 3).unwrap(),
        Graph::complete(4).unwrap(),
    ];
    for i in 1..=6 {
        graphs.push(Graph::pentagon_variant(i).unwrap());
    }
    for g in &graphs {
        let channel = Channel::canonical(&g.with_self_loops(true)).unwrap();
        let m = min_classical_assistance(&channel).unwrap();
        assert_eq!(
            m.oracle_beta,
            Some(m.beta),
            "oracle diverges from chi on {g:?}"
        );
    }
}

#[test]
fn unassisted_index_zero_without_private_outputs() {
    // whenever every output is reachable from more than one input the
    // unassisted index vanishes
    let graphs = vec![
        Graph::cycle(4).unwrap(),
        Graph::cycle(9).unwrap(),
        Graph::wheel(6).unwrap(),
        Graph::friendship(3).unwrap(),
        Graph::star(5).unwrap(),
        Graph::turan(7, 2).unwrap(),
        Graph::pentagon_variant(3).unwrap().with_self_loops(false),
    ];
    for g in &graphs {
        let channel = Channel::canonical(&g.with_self_loops(true)).unwrap();
        let all_shared = (0..channel.output_count()).all(|y| channel.input_domain_idx(y).len() > 1);
        assert!(all_shared, "{g:?}");
        assert_eq!(ci_unassisted(&channel).unwrap().count, 0, "{g:?}");
    }
}

#[test]
fn assisted_index_sweep_matches_independent_oracle() {
    // full k-sweep for the six pentagon support variants, frozen from an
    // independent brute-force implementation
    let expected: [[usize; 5]; 6] = [
        [0, 4, 5, 5, 5],
        [0, 4, 5, 5, 5],
        [0, 2, 5, 5, 5],
        [0, 2, 5, 5, 5],
        [0, 2, 4, 5, 5],
        [0, 2, 3, 5, 5],
    ];
    for (variant, row) in expected.iter().enumerate() {
        let channel = Channel::canonical(&Graph::pentagon_variant(variant + 1).unwrap()).unwrap();
        for (k, &count) in row.iter().enumerate() {
            assert_eq!(
                assisted_ci(&channel, k + 1).unwrap().count,
                count,
                "variant {} k {}",
                variant + 1,
                k + 1
            );
        }
    }
}

#[test]
fn branch_and_bound_agrees_with_set_enumeration() {
    // independence number two ways: clique search on the complement vs
    // the largest Bron-Kerbosch maximal independent set
    let graphs = vec![
        Graph::cycle(5).unwrap(),
        Graph::cycle(9).unwrap(),
        Graph::wheel(7).unwrap(),
        Graph::friendship(3).unwrap(),
        Graph::turan(9, 3).unwrap(),
        Graph::pentagon_variant(5).unwrap(),
        cid_core::quantum::builtin_system("ks18").unwrap().graph,
        Graph::cycle(5)
            .unwrap()
            .conormal_product(&Graph::cycle(5).unwrap()),
    ];
    for g in &graphs {
        let alpha = independence_number(g).size;
        let largest = cid_core::combinatorics::maximal_independent_sets(g)
            .unwrap()
            .iter()
            .map(|s| s.len())
            .max()
            .unwrap();
        assert_eq!(alpha, largest, "{g:?}");
    }
}

#[test]
fn family_independence_numbers_follow_the_standard_formulas() {
    // exact values for the superactivation families: one vertex per
    // triangle, all leaves, and the larger Turan part
    for n in 2..=5 {
        assert_eq!(
            independence_number(&Graph::friendship(n).unwrap()).size,
            n,
            "friendship({n})"
        );
        assert_eq!(
            independence_number(&Graph::star(n).unwrap()).size,
            n,
            "star({n})"
        );
    }
    for n in 4..=9 {
        assert_eq!(
            independence_number(&Graph::turan(n, 2).unwrap()).size,
            n.div_ceil(2),
            "turan({n},2)"
        );
    }
}

#[test]
fn core_values_are_shareable_across_threads() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<Graph>();
    assert_send_sync::<Channel>();
    assert_send_sync::<VectorSystem>();
    assert_send_sync::<cid_core::identification::IdentificationScheme>();
    assert_send_sync::<cid_core::contextuality::KsSystem>();
}

#[test]
fn snfc_channels_reach_themselves() {
    // x is in its own output-range and input-domain: the self-loop
    for g in [
        Graph::pentagon_variant(2).unwrap(),
        Graph::wheel(6).unwrap().with_self_loops(true),
        Graph::star(4).unwrap().with_self_loops(true),
    ] {
        let channel = Channel::canonical(&g).unwrap();
        for x in 0..channel.input_count() {
            let label = channel.inputs()[x].clone();
            assert!(channel.output_range(&label).unwrap().contains(&label));
            assert!(channel.input_domain(&label).unwrap().contains(&label));
        }
    }
}

#[test]
fn assisted_index_saturates_at_full_alphabet() {
    for i in [1, 4, 6] {
        let channel = Channel::canonical(&Graph::pentagon_variant(i).unwrap()).unwrap();
        assert_eq!(assisted_ci(&channel, 5).unwrap().count, 5);
    }
    let c7 = Channel::canonical(&Graph::cycle(7).unwrap().with_self_loops(true)).unwrap();
    assert_eq!(assisted_ci(&c7, 7).unwrap().count, 7);
}

#[test]
fn sandwich_and_squaring_on_named_graphs() {
    // omega <= chi_f <= chi, and chi_f squares under the co-normal square
    for g in [Graph::cycle(5).unwrap(), Graph::complete(3).unwrap()] {
        let omega = ratio(clique_number(&g).size as i64, 1);
        let f = fractional_chromatic(&g).unwrap();
        let chi = ratio(chromatic_number(&g).number as i64, 1);
        assert!(omega <= f && f <= chi);
        let squared = fractional_chromatic(&g.conormal_product(&g)).unwrap();
        assert_eq!(squared, &f * &f);
    }
}

#[test]
fn yo13_subgraph_tensor_representation() {
    // restrict the 13-ray system to its first 6 rays; the tensor square
    // must represent the co-normal square of the induced graph
    let b = builtin_system("yo13").unwrap();
    let rows: Vec<Vec<i64>> = (0..6)
        .map(|i| b.system.vector(i).iter().map(|z| z.re).collect())
        .collect();
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    let sub = VectorSystem::from_real(&refs).unwrap();
    let edges: Vec<(usize, usize)> = b
        .graph
        .edges()
        .into_iter()
        .filter(|&(u, v)| u < 6 && v < 6)
        .collect();
    let induced = Graph::new(6, &edges, false).unwrap();
    assert!(is_orthogonal_representation(&sub, &induced).unwrap().ok);
    let squared = induced.conormal_product(&induced);
    let tensored = sub.tensor(&sub).unwrap();
    assert_eq!(tensored.dim(), 9);
    assert!(
        is_orthogonal_representation(&tensored, &squared)
            .unwrap()
            .ok
    );
}

// ---- randomized properties -----------------------------------------------

/// Arbitrary graph on up to 10 vertices.
fn arb_graph(self_loops: bool) -> impl Strategy<Value = Graph> {
    (1usize..=10).prop_flat_map(move |n| {
        proptest::collection::vec(proptest::bool::ANY, n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::new(n, &edges, self_loops).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn canonical_channel_round_trips_support(g in arb_graph(true)) {
        let channel = Channel::canonical(&g).unwrap();
        prop_assert!(channel.validate_snfc().passes());
        prop_assert_eq!(channel.support_graph().unwrap(), g);
    }

    #[test]
    fn graph_json_round_trips(g in arb_graph(false)) {
        let text = serde_json::to_string(&g).unwrap();
        let back: Graph = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn witnesses_always_reverify(g in arb_graph(false)) {
        let ind = independence_number(&g);
        for (i, &u) in ind.witness.iter().enumerate() {
            for &v in &ind.witness[..i] {
                prop_assert!(!g.adjacent(u, v));
            }
        }
        let chrom = chromatic_number(&g);
        prop_assert!(chrom.coloring.is_proper(&g));
        prop_assert_eq!(chrom.coloring.color_count(), chrom.number);
        let clique = clique_number(&g);
        prop_assert!(clique.size >= 1);
        prop_assert!(chrom.number >= clique.size);
    }
}
