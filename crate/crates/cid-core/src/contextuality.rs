//! Kochen-Specker systems: vectors grouped into orthonormal contexts,
//! the {0,1}-colorability decision, the parity obstruction, and the two
//! graphs a system induces (full orthogonality vs. context cliques).

use crate::graph::Graph;
use crate::quantum::VectorSystem;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContextualityError {
    #[error("context {context} has {len} members, expected the ambient dimension {dim}")]
    ContextSize {
        context: usize,
        len: usize,
        dim: usize,
    },
    #[error("context {context} references vector {vertex}, but there are only {n}")]
    IndexOutOfRange {
        context: usize,
        vertex: usize,
        n: usize,
    },
    #[error("context {context} repeats vector {vertex}")]
    RepeatedMember { context: usize, vertex: usize },
    #[error("context {context}: vectors {u} and {v} are not orthogonal")]
    NotOrthogonal { context: usize, u: usize, v: usize },
}

/// A vector system together with contexts, each an orthonormal basis of
/// the ambient dimension. Contexts index into the vector list, so a
/// vector shared by two contexts is the same object in both.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KsSystem {
    system: VectorSystem,
    contexts: Vec<Vec<usize>>,
}

impl KsSystem {
    pub fn new(
        system: VectorSystem,
        contexts: Vec<Vec<usize>>,
    ) -> Result<Self, ContextualityError> {
        for (ci, ctx) in contexts.iter().enumerate() {
            if ctx.len() != system.dim() {
                return Err(ContextualityError::ContextSize {
                    context: ci,
                    len: ctx.len(),
                    dim: system.dim(),
                });
            }
            for (i, &u) in ctx.iter().enumerate() {
                if u >= system.len() {
                    return Err(ContextualityError::IndexOutOfRange {
                        context: ci,
                        vertex: u,
                        n: system.len(),
                    });
                }
                for &v in &ctx[..i] {
                    if u == v {
                        return Err(ContextualityError::RepeatedMember {
                            context: ci,
                            vertex: u,
                        });
                    }
                    if !system.inner(u, v).is_zero() {
                        return Err(ContextualityError::NotOrthogonal {
                            context: ci,
                            u: v,
                            v: u,
                        });
                    }
                }
            }
        }
        Ok(KsSystem { system, contexts })
    }

    pub fn system(&self) -> &VectorSystem {
        &self.system
    }

    pub fn contexts(&self) -> &[Vec<usize>] {
        &self.contexts
    }

    pub fn vector_count(&self) -> usize {
        self.system.len()
    }

    /// Full orthogonality graph of the vectors; context membership is
    /// ignored.
    pub fn orthogonality_graph(&self) -> Graph {
        self.system.orthogonality_graph()
    }

    /// The sparser graph obtained by replacing each context with a
    /// clique: only within-context pairs become edges.
    pub fn context_clique_graph(&self) -> Graph {
        let n = self.system.len();
        let mut pairs = std::collections::BTreeSet::new();
        for ctx in &self.contexts {
            for (i, &u) in ctx.iter().enumerate() {
                for &v in &ctx[..i] {
                    pairs.insert((u.min(v), u.max(v)));
                }
            }
        }
        let edges: Vec<(usize, usize)> = pairs.into_iter().collect();
        Graph::new(n, &edges, false).expect("context pairs are valid edges")
    }
}

/// Outcome of the {0,1}-colorability search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KsColorability {
    /// A value assignment with exactly one 1 per context.
    Colorable(Vec<bool>),
    /// The deterministic DFS closed its whole tree without finding one;
    /// the node count makes the exhaustion auditable.
    NoColoring { nodes_explored: u64 },
}

impl KsColorability {
    pub fn is_colorable(&self) -> bool {
        matches!(self, KsColorability::Colorable(_))
    }
}

/// Searches for a {0,1}-coloring of the vectors with exactly one 1 per
/// context (completeness + exclusivity). Vectors outside every context
/// are unconstrained and reported as 0.
pub fn ks_colorable(sys: &KsSystem) -> KsColorability {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        Free,
        Zero,
        One,
    }
    let n = sys.vector_count();
    let contexts = sys.contexts();
    let mut state = vec![Mark::Free; n];
    let mut nodes: u64 = 0;

    fn assign(contexts: &[Vec<usize>], state: &mut Vec<Mark>, ci: usize, nodes: &mut u64) -> bool {
        if ci == contexts.len() {
            return true;
        }
        *nodes += 1;
        let ctx = &contexts[ci];
        let ones: Vec<usize> = ctx
            .iter()
            .copied()
            .filter(|&v| state[v] == Mark::One)
            .collect();
        let candidates: Vec<usize> = match ones.as_slice() {
            [] => ctx
                .iter()
                .copied()
                .filter(|&v| state[v] != Mark::Zero)
                .collect(),
            [v] => vec![*v],
            _ => return false, // two forced ones violate exclusivity
        };
        for chosen in candidates {
            let saved: Vec<Mark> = ctx.iter().map(|&v| state[v]).collect();
            let mut consistent = true;
            for &v in ctx {
                let want = if v == chosen { Mark::One } else { Mark::Zero };
                match state[v] {
                    Mark::Free => state[v] = want,
                    m if m == want => {}
                    _ => {
                        consistent = false;
                        break;
                    }
                }
            }
            if consistent && assign(contexts, state, ci + 1, nodes) {
                return true;
            }
            for (&v, &m) in ctx.iter().zip(&saved) {
                state[v] = m;
            }
        }
        false
    }

    if assign(contexts, &mut state, 0, &mut nodes) {
        KsColorability::Colorable(state.iter().map(|&m| m == Mark::One).collect())
    } else {
        KsColorability::NoColoring {
            nodes_explored: nodes,
        }
    }
}

/// The parity argument: with an odd number of contexts and every vector
/// in an even number of them, summing "exactly one 1 per context" over
/// all contexts is odd on the left and even on the right, so no coloring
/// exists. A cheap certificate that avoids the search entirely.
pub fn parity_obstruction(sys: &KsSystem) -> bool {
    if sys.contexts().len().is_multiple_of(2) {
        return false;
    }
    let mut multiplicity = vec![0usize; sys.vector_count()];
    for ctx in sys.contexts() {
        for &v in ctx {
            multiplicity[v] += 1;
        }
    }
    multiplicity.iter().all(|m| m % 2 == 0)
}

/// Verifies a witness coloring: exactly one 1 in every context.
pub fn verify_ks_coloring(sys: &KsSystem, coloring: &[bool]) -> bool {
    coloring.len() == sys.vector_count()
        && sys
            .contexts()
            .iter()
            .all(|ctx| ctx.iter().filter(|&&v| coloring[v]).count() == 1)
}
