//! Exhaustive survey (ignored by default; run with `-- --ignored`):
//! compares the partition oracle against the chromatic number on every
//! connected diameter-<=2 support graph with up to 6 vertices.
//!
//! The coloring value is always sufficient (oracle <= chi must never
//! fail). It is NOT always necessary: the survey finds hundreds of
//! graphs where fewer classes fully identify; the smallest are pinned
//! in `necessity_counterexample.rs`. On the named channel families the
//! two values agree (see `invariants.rs`).

use cid_core::channel::Channel;
use cid_core::combinatorics::chromatic_number;
use cid_core::graph::Graph;
use cid_core::identification::min_classical_assistance;

/// (vertex count, edges, chi, oracle minimum)
type Divergence = (usize, Vec<(usize, usize)>, usize, usize);

#[test]
#[ignore]
fn survey_oracle_vs_chromatic_on_diameter_two_graphs() {
    let mut divergent = 0u64;
    let mut checked = 0u64;
    let mut smallest: Option<Divergence> = None;
    for n in 1..=6usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::new(n, &edges, true).unwrap();
            if !g.is_connected() || !g.diameter().is_at_most(2) {
                continue;
            }
            let channel = Channel::canonical(&g).unwrap();
            let m = min_classical_assistance(&channel).unwrap();
            let chi = chromatic_number(&g).number;
            assert_eq!(m.beta, chi);
            let oracle = m.oracle_beta.unwrap();
            // the coloring construction is always available, so the true
            // minimum can never exceed chi
            assert!(oracle <= chi, "oracle {oracle} > chi {chi} on {edges:?}");
            if oracle < chi {
                divergent += 1;
                if smallest.is_none() {
                    smallest = Some((n, edges.clone(), chi, oracle));
                }
            }
            checked += 1;
        }
    }
    println!("checked {checked} graphs; {divergent} need fewer symbols than chi");
    println!("first divergence: {smallest:?}");
    assert!(
        divergent > 0,
        "the pinned counterexample family disappeared"
    );
}
