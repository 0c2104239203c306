//! Discrete memoryless channels with exact rational transition
//! probabilities, SNFC validation, and support/confusability graph
//! extraction.

use crate::graph::Graph;
use crate::rational::{format_ratio, parse_ratio};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChannelError {
    #[error("matrix has {rows} rows, expected {expected} (one per output)")]
    RowCountMismatch { rows: usize, expected: usize },
    #[error("row {row} has {cols} entries, expected {expected} (one per input)")]
    ColCountMismatch {
        row: usize,
        cols: usize,
        expected: usize,
    },
    #[error("negative probability at output {output}, input {input}")]
    NegativeEntry { output: String, input: String },
    #[error("column for input {input} sums to {sum}, not exactly 1")]
    ColumnSum { input: String, sum: String },
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("channel is not SNFC: {0}")]
    NotSnfc(String),
    #[error("channel is not XY-equivalent (inputs and outputs differ)")]
    NotXyEquivalent,
    #[error("graph lacks the all-self-loops flag required of a support graph")]
    MissingSelfLoops,
    #[error("bad probability literal: {0}")]
    BadRational(String),
}

/// A classical channel: a column-stochastic matrix with exact rational
/// entries over finite labeled alphabets. `matrix[y][x] = P(y|x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Channel {
    inputs: Vec<String>,
    outputs: Vec<String>,
    matrix: Vec<Vec<BigRational>>,
}

/// SNFC validation report: which requirements fail and where.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SnfcReport {
    pub xy_equivalent: bool,
    /// Pairs `(x, x')` with `P(x'|x) = 0` but `P(x|x') != 0`.
    pub asymmetric_pairs: Vec<(String, String)>,
    /// Inputs `x` with `P(x|x) = 0`.
    pub fully_corrupted: Vec<String>,
}

impl SnfcReport {
    pub fn passes(&self) -> bool {
        self.xy_equivalent && self.asymmetric_pairs.is_empty() && self.fully_corrupted.is_empty()
    }

    pub fn summary(&self) -> String {
        if self.passes() {
            return "SNFC".into();
        }
        let mut parts = Vec::new();
        if !self.xy_equivalent {
            parts.push("input and output alphabets differ".to_string());
        }
        for (x, x2) in &self.asymmetric_pairs {
            parts.push(format!("zero pattern asymmetric at ({x}, {x2})"));
        }
        for x in &self.fully_corrupted {
            parts.push(format!("input {x} is fully corrupted"));
        }
        parts.join("; ")
    }
}

impl Channel {
    pub fn new(
        inputs: Vec<String>,
        outputs: Vec<String>,
        matrix: Vec<Vec<BigRational>>,
    ) -> Result<Self, ChannelError> {
        for labels in [&inputs, &outputs] {
            let mut seen = std::collections::BTreeSet::new();
            for l in labels {
                if !seen.insert(l) {
                    return Err(ChannelError::DuplicateLabel(l.clone()));
                }
            }
        }
        if matrix.len() != outputs.len() {
            return Err(ChannelError::RowCountMismatch {
                rows: matrix.len(),
                expected: outputs.len(),
            });
        }
        for (y, row) in matrix.iter().enumerate() {
            if row.len() != inputs.len() {
                return Err(ChannelError::ColCountMismatch {
                    row: y,
                    cols: row.len(),
                    expected: inputs.len(),
                });
            }
            for (x, p) in row.iter().enumerate() {
                if p.is_negative() {
                    return Err(ChannelError::NegativeEntry {
                        output: outputs[y].clone(),
                        input: inputs[x].clone(),
                    });
                }
            }
        }
        for x in 0..inputs.len() {
            let sum: BigRational = matrix.iter().map(|row| row[x].clone()).sum();
            if !sum.is_one() {
                return Err(ChannelError::ColumnSum {
                    input: inputs[x].clone(),
                    sum: format_ratio(&sum),
                });
            }
        }
        Ok(Channel {
            inputs,
            outputs,
            matrix,
        })
    }

    /// The noiseless channel `id_n` on labels `1..=n`.
    pub fn noiseless(n: usize) -> Channel {
        Channel::canonical(&Graph::edgeless(n, true)).expect("edgeless graph with loops")
    }

    /// Canonical channel of a support graph: column `x` places `1/|N[x]|`
    /// on each closed neighbor. Support membership is all that the
    /// toolkit's claims depend on, and uniform weights make the choice
    /// reproducible. Vertex `i` is labeled `i + 1`.
    pub fn canonical(g: &Graph) -> Result<Channel, ChannelError> {
        let labels = (1..=g.vertex_count()).map(|i| i.to_string()).collect();
        Channel::canonical_with_labels(g, labels)
    }

    /// [`canonical`] with explicit vertex labels.
    ///
    /// [`canonical`]: Channel::canonical
    pub fn canonical_with_labels(g: &Graph, labels: Vec<String>) -> Result<Channel, ChannelError> {
        if !g.has_all_self_loops() {
            return Err(ChannelError::MissingSelfLoops);
        }
        let n = g.vertex_count();
        let mut matrix = vec![vec![BigRational::zero(); n]; n];
        #[allow(clippy::needless_range_loop)]
        for x in 0..n {
            let weight = BigRational::new(1.into(), ((g.degree(x) + 1) as i64).into());
            matrix[x][x] = weight.clone();
            for y in g.neighbors(x) {
                matrix[y][x] = weight.clone();
            }
        }
        Channel::new(labels.clone(), labels, matrix)
    }

    pub fn inputs(&self) -> &[String] {
        &self.inputs
    }

    pub fn outputs(&self) -> &[String] {
        &self.outputs
    }

    pub fn input_count(&self) -> usize {
        self.inputs.len()
    }

    pub fn output_count(&self) -> usize {
        self.outputs.len()
    }

    pub fn probability(&self, y: usize, x: usize) -> &BigRational {
        &self.matrix[y][x]
    }

    pub fn input_index(&self, label: &str) -> Result<usize, ChannelError> {
        self.inputs
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| ChannelError::UnknownLabel(label.to_string()))
    }

    pub fn output_index(&self, label: &str) -> Result<usize, ChannelError> {
        self.outputs
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| ChannelError::UnknownLabel(label.to_string()))
    }

    /// Output indices reachable from input `x` with positive probability.
    pub fn output_range_idx(&self, x: usize) -> Vec<usize> {
        (0..self.outputs.len())
            .filter(|&y| self.matrix[y][x].is_positive())
            .collect()
    }

    /// Input indices that can produce output `y`.
    pub fn input_domain_idx(&self, y: usize) -> Vec<usize> {
        (0..self.inputs.len())
            .filter(|&x| self.matrix[y][x].is_positive())
            .collect()
    }

    /// Γ_x: the set of output labels that occur with nonzero probability.
    pub fn output_range(&self, input: &str) -> Result<Vec<String>, ChannelError> {
        let x = self.input_index(input)?;
        Ok(self
            .output_range_idx(x)
            .into_iter()
            .map(|y| self.outputs[y].clone())
            .collect())
    }

    /// Ω_y: the set of input labels that can produce the output.
    pub fn input_domain(&self, output: &str) -> Result<Vec<String>, ChannelError> {
        let y = self.output_index(output)?;
        Ok(self
            .input_domain_idx(y)
            .into_iter()
            .map(|x| self.inputs[x].clone())
            .collect())
    }

    /// Checks the SNFC requirements: matching alphabets, symmetric zero
    /// pattern, and positive diagonal. Reports every violation.
    pub fn validate_snfc(&self) -> SnfcReport {
        let xy_equivalent = self.inputs == self.outputs;
        let mut report = SnfcReport {
            xy_equivalent,
            ..Default::default()
        };
        if !xy_equivalent {
            return report;
        }
        let n = self.inputs.len();
        for x in 0..n {
            for x2 in 0..n {
                if x != x2 && self.matrix[x2][x].is_zero() && !self.matrix[x][x2].is_zero() {
                    report
                        .asymmetric_pairs
                        .push((self.inputs[x].clone(), self.inputs[x2].clone()));
                }
            }
            if self.matrix[x][x].is_zero() {
                report.fully_corrupted.push(self.inputs[x].clone());
            }
        }
        report
    }

    fn require_snfc(&self) -> Result<(), ChannelError> {
        let report = self.validate_snfc();
        if report.passes() {
            Ok(())
        } else {
            Err(ChannelError::NotSnfc(report.summary()))
        }
    }

    /// Support graph of an SNFC channel: edge `{x, x'}` iff
    /// `P(x'|x) > 0`, with the all-self-loops flag set.
    pub fn support_graph(&self) -> Result<Graph, ChannelError> {
        self.require_snfc()?;
        let n = self.inputs.len();
        let mut edges = Vec::new();
        for x in 0..n {
            for x2 in x + 1..n {
                if self.matrix[x2][x].is_positive() {
                    edges.push((x, x2));
                }
            }
        }
        Ok(Graph::new(n, &edges, true).expect("support edges are valid"))
    }

    /// Confusability graph: the nonzero pattern of the squared support
    /// adjacency (diagonal included), i.e. inputs joined iff they share a
    /// reachable output.
    pub fn confusability_graph(&self) -> Result<Graph, ChannelError> {
        let support = self.support_graph()?;
        let n = support.vertex_count();
        let mut edges = Vec::new();
        for x in 0..n {
            let nx = support.closed_neighbor_set(x);
            for x2 in x + 1..n {
                let nx2 = support.closed_neighbor_set(x2);
                if nx.intersects(&nx2) {
                    edges.push((x, x2));
                }
            }
        }
        Ok(Graph::new(n, &edges, true).expect("confusability edges are valid"))
    }
}

// ---- JSON interface ----------------------------------------------------

#[derive(Serialize, Deserialize)]
struct ChannelJson {
    inputs: Vec<String>,
    outputs: Vec<String>,
    matrix: Vec<Vec<String>>,
}

impl Serialize for Channel {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ChannelJson {
            inputs: self.inputs.clone(),
            outputs: self.outputs.clone(),
            matrix: self
                .matrix
                .iter()
                .map(|row| row.iter().map(format_ratio).collect())
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Channel {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = ChannelJson::deserialize(deserializer)?;
        let matrix: Result<Vec<Vec<BigRational>>, ChannelError> = raw
            .matrix
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| parse_ratio(s).map_err(|e| ChannelError::BadRational(e.to_string())))
                    .collect()
            })
            .collect();
        let matrix = matrix.map_err(serde::de::Error::custom)?;
        Channel::new(raw.inputs, raw.outputs, matrix).map_err(serde::de::Error::custom)
    }
}
