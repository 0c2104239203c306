//! The coloring route gives the minimum assistance on every named
//! channel family, but not for arbitrary SNFC channels: this file pins
//! a 6-input counterexample where two side-channel symbols fully
//! identify although the support graph needs three colors. Same-class
//! inputs may be adjacent and still each keep a private output, so the
//! partition oracle can undercut the chromatic number.

use cid_core::channel::Channel;
use cid_core::combinatorics::chromatic_number;
use cid_core::graph::{Diameter, Graph};
use cid_core::identification::{
    ci_unassisted, min_classical_assistance, verify_scheme, IdentificationScheme,
};

fn counterexample_graph() -> Graph {
    Graph::new(
        6,
        &[(0, 3), (0, 4), (0, 5), (1, 2), (1, 4), (1, 5), (2, 3)],
        true,
    )
    .unwrap()
}

#[test]
fn two_symbols_beat_three_colors() {
    let g = counterexample_graph();
    let channel = Channel::canonical(&g).unwrap();

    // the hypotheses of the coloring characterization all hold
    assert_eq!(g.diameter(), Diameter::Finite(2));
    let confusability = channel.confusability_graph().unwrap();
    assert_eq!(confusability.edge_count(), 15); // complete on 6 vertices
    assert_eq!(ci_unassisted(&channel).unwrap().count, 0);
    assert_eq!(chromatic_number(&g).number, 3);

    // yet the exact partition oracle needs only two classes
    let assist = min_classical_assistance(&channel).unwrap();
    assert_eq!(assist.beta, 3);
    assert_eq!(assist.oracle_beta, Some(2));
}

#[test]
fn the_two_class_scheme_verifies_end_to_end() {
    // partition {1,4,6} | {2,3,5} (1-based labels); each input keeps a
    // private output within its class even where classmates are adjacent
    let g = counterexample_graph();
    let channel = Channel::canonical(&g).unwrap();
    let scheme_json = serde_json::json!({
        "partition": {
            "1": "A", "4": "A", "6": "A",
            "2": "B", "3": "B", "5": "B"
        },
        "decision": [
            {"y": "5", "color": "A", "verdict": "1"},
            {"y": "3", "color": "A", "verdict": "4"},
            {"y": "2", "color": "A", "verdict": "6"},
            {"y": "6", "color": "B", "verdict": "2"},
            {"y": "4", "color": "B", "verdict": "3"},
            {"y": "1", "color": "B", "verdict": "5"}
        ]
    });
    let scheme = IdentificationScheme::from_json(&scheme_json, &channel).unwrap();
    let report = verify_scheme(&channel, &scheme);
    assert_eq!(report.identified_count, 6);
    assert!(report.false_accepts.is_empty());
}
