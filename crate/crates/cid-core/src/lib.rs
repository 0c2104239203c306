//! Exact-arithmetic toolkit for conclusive identification over classical
//! channels.
//!
//! The crate models discrete memoryless channels with exact rational
//! transition probabilities, extracts their support and confusability
//! graphs, and computes the combinatorial invariants that govern the
//! conclusive-identification task: chromatic number (minimum classical
//! assistance), orthogonal-representation certificates (quantum
//! assistance), Kochen-Specker colorability, and co-normal product
//! scaling. Everything is computed in exact arithmetic; there are no
//! floating-point tolerances anywhere in the decision paths.
//!
//! # Quick start
//!
//! ```
//! use cid_core::channel::Channel;
//! use cid_core::combinatorics::chromatic_number;
//! use cid_core::graph::Graph;
//! use cid_core::identification::{ci_unassisted, scheme_from_coloring, verify_scheme};
//!
//! // a channel whose support graph is the 10-cycle (with self-loops)
//! let support = Graph::cycle(10).unwrap().with_self_loops(true);
//! let channel = Channel::canonical(&support).unwrap();
//!
//! // useless unassisted, fully identified with two side-channel symbols
//! assert_eq!(ci_unassisted(&channel).unwrap().count, 0);
//! let coloring = chromatic_number(&support).coloring;
//! assert_eq!(coloring.color_count(), 2);
//! let scheme = scheme_from_coloring(&channel, &coloring).unwrap();
//! let report = verify_scheme(&channel, &scheme);
//! assert_eq!(report.identified_count, 10);
//! assert!(report.false_accepts.is_empty());
//! ```

pub mod bitset;
pub mod channel;
pub mod combinatorics;
pub mod contextuality;
pub mod graph;
pub mod identification;
pub mod lp;
pub mod newman;
pub mod quantum;
pub mod rational;

pub use channel::{Channel, ChannelError, SnfcReport};
pub use combinatorics::{
    chromatic_number, clique_number, fractional_chromatic, independence_number,
    maximal_independent_sets, Coloring,
};
pub use contextuality::{ks_colorable, parity_obstruction, KsColorability, KsSystem};
pub use graph::{Diameter, Family, Graph, GraphError};
pub use identification::{
    assisted_ci, ci_unassisted, min_classical_assistance, scheme_from_coloring, simulate_protocol,
    superactivation_gap, verify_scheme, zero_error_index, IdentificationScheme, Verdict,
};
pub use newman::{conormal_channel, newman_graph, newman_qa_bound, qa_scaling_report, QaReport};
pub use quantum::{
    builtin_system, certify_orthogonal_rank, hadamard_clique, is_orthogonal_representation,
    quantum_assisted_ci, quantum_protocol_outcome, GaussianInt, VectorSystem, XiCertificate,
};
