//! The conclusive-identification task: unassisted and classically
//! assisted identification indices, coloring-derived schemes, the
//! brute-force partition oracle, superactivation gaps, and a seeded
//! protocol simulator.
//!
//! An input is conclusively identifiable iff some reachable output pins
//! it uniquely within the relevant scope (globally, or within its
//! side-channel color class). Decoding never consults channel weights,
//! only supports.

use crate::channel::{Channel, ChannelError};
use crate::combinatorics::{self, Coloring};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

/// Partition brute force is capped here; Bell(12) ≈ 4.2M partitions is
/// still tractable and the chromatic construction covers everything
/// larger.
pub const PARTITION_ORACLE_GUARD: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentificationError {
    #[error(transparent)]
    Channel(#[from] ChannelError),
    #[error("channel has {inputs} inputs, above the partition-oracle guard of {guard}")]
    TooLarge { inputs: usize, guard: usize },
    #[error("coloring is not proper on the support graph: inputs {u} and {v} share a color")]
    ImproperColoring { u: String, v: String },
    #[error("coloring covers {assigned} vertices but the channel has {expected} inputs")]
    ColoringSizeMismatch { assigned: usize, expected: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("invalid scheme: {0}")]
    InvalidScheme(String),
    #[error("need {want} color names, got {got}")]
    ColorNameCount { got: usize, want: usize },
    #[error("column weights too large to sample exactly")]
    WeightsTooLarge,
}

/// Verdict of the receiver for one (output, side-channel message) cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Conclusively identified input (by index).
    Identified(usize),
    Inconclusive,
}

/// Decision table mapping (channel output, side-channel color) to a
/// verdict, together with the sender's partition of the inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentificationScheme {
    color_names: Vec<String>,
    partition: Vec<usize>,
    decision: Vec<Vec<Verdict>>,
}

fn default_color_names(k: usize) -> Vec<String> {
    const NAMES: [&str; 8] = ["R", "B", "G", "M", "C", "Y", "O", "P"];
    (0..k)
        .map(|i| {
            NAMES
                .get(i)
                .map(|s| s.to_string())
                .unwrap_or_else(|| format!("c{i}"))
        })
        .collect()
}

impl IdentificationScheme {
    pub fn color_names(&self) -> &[String] {
        &self.color_names
    }

    pub fn color_count(&self) -> usize {
        self.color_names.len()
    }

    /// Color index assigned to each input, in input order.
    pub fn partition(&self) -> &[usize] {
        &self.partition
    }

    pub fn verdict(&self, output: usize, color: usize) -> Verdict {
        self.decision[output][color]
    }

    /// Replaces the default color names (`R`, `B`, `G`, ...) with the
    /// given ones; one name per color class.
    pub fn with_color_names(mut self, names: Vec<String>) -> Result<Self, IdentificationError> {
        if names.len() != self.color_names.len() {
            return Err(IdentificationError::ColorNameCount {
                got: names.len(),
                want: self.color_names.len(),
            });
        }
        self.color_names = names;
        Ok(self)
    }

    /// One row per channel transition with positive probability, in
    /// (input, output) order, suitable for direct table printing.
    pub fn table_rows(&self, channel: &Channel) -> Vec<SchemeTableRow> {
        let mut rows = Vec::new();
        for x in 0..channel.input_count() {
            let color = self.partition[x];
            for y in channel.output_range_idx(x) {
                let verdict = self.decision[y][color];
                rows.push(SchemeTableRow {
                    input: channel.inputs()[x].clone(),
                    output: channel.outputs()[y].clone(),
                    message: self.color_names[color].clone(),
                    identified: verdict == Verdict::Identified(x),
                });
            }
        }
        rows
    }

    pub fn to_json(&self, channel: &Channel) -> serde_json::Value {
        let partition: BTreeMap<String, String> = self
            .partition
            .iter()
            .enumerate()
            .map(|(x, &c)| (channel.inputs()[x].clone(), self.color_names[c].clone()))
            .collect();
        let mut decision = Vec::new();
        for (y, row) in self.decision.iter().enumerate() {
            for (c, verdict) in row.iter().enumerate() {
                decision.push(SchemeEntryJson {
                    y: channel.outputs()[y].clone(),
                    color: self.color_names[c].clone(),
                    verdict: match verdict {
                        Verdict::Identified(x) => channel.inputs()[*x].clone(),
                        Verdict::Inconclusive => "inconclusive".into(),
                    },
                });
            }
        }
        serde_json::to_value(SchemeJson {
            partition,
            decision,
        })
        .expect("scheme serializes")
    }

    /// Loads a scheme from its JSON form; entries absent from the
    /// decision list default to inconclusive. The label `inconclusive`
    /// is reserved for the abstention verdict.
    pub fn from_json(
        value: &serde_json::Value,
        channel: &Channel,
    ) -> Result<Self, IdentificationError> {
        let raw: SchemeJson = serde_json::from_value(value.clone())
            .map_err(|e| IdentificationError::InvalidScheme(e.to_string()))?;
        let n = channel.input_count();
        let mut color_names: Vec<String> = Vec::new();
        let mut partition = vec![usize::MAX; n];
        for (label, color) in &raw.partition {
            let x = channel.input_index(label)?;
            let c = match color_names.iter().position(|c| c == color) {
                Some(c) => c,
                None => {
                    color_names.push(color.clone());
                    color_names.len() - 1
                }
            };
            partition[x] = c;
        }
        if let Some(x) = partition.iter().position(|&c| c == usize::MAX) {
            return Err(IdentificationError::InvalidScheme(format!(
                "input {} missing from partition",
                channel.inputs()[x]
            )));
        }
        let mut decision =
            vec![vec![Verdict::Inconclusive; color_names.len()]; channel.output_count()];
        let mut seen = std::collections::BTreeSet::new();
        for entry in &raw.decision {
            let y = channel.output_index(&entry.y)?;
            let c = color_names
                .iter()
                .position(|c| *c == entry.color)
                .ok_or_else(|| {
                    IdentificationError::InvalidScheme(format!(
                        "decision entry uses color {} absent from the partition",
                        entry.color
                    ))
                })?;
            if !seen.insert((y, c)) {
                return Err(IdentificationError::InvalidScheme(format!(
                    "duplicate decision entry for output {} color {}",
                    entry.y, entry.color
                )));
            }
            decision[y][c] = if entry.verdict == "inconclusive" {
                Verdict::Inconclusive
            } else {
                Verdict::Identified(channel.input_index(&entry.verdict)?)
            };
        }
        Ok(IdentificationScheme {
            color_names,
            partition,
            decision,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemeTableRow {
    pub input: String,
    pub output: String,
    pub message: String,
    pub identified: bool,
}

#[derive(Serialize, Deserialize)]
struct SchemeJson {
    partition: BTreeMap<String, String>,
    decision: Vec<SchemeEntryJson>,
}

#[derive(Serialize, Deserialize)]
struct SchemeEntryJson {
    y: String,
    color: String,
    verdict: String,
}

// ---- unassisted index ----------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CiUnassisted {
    pub count: usize,
    /// Inputs with a private output, by label.
    pub witness: Vec<String>,
}

/// Unassisted conclusive-identification index: the number of inputs `x`
/// possessing a private output, i.e. some `y ∈ Γ_x` with `Ω_y = {x}`.
/// Requires matching alphabets; the channel need not be SNFC.
pub fn ci_unassisted(channel: &Channel) -> Result<CiUnassisted, IdentificationError> {
    if channel.inputs() != channel.outputs() {
        return Err(ChannelError::NotXyEquivalent.into());
    }
    let mut witness = Vec::new();
    for x in 0..channel.input_count() {
        let private = channel
            .output_range_idx(x)
            .into_iter()
            .any(|y| channel.input_domain_idx(y) == [x]);
        if private {
            witness.push(channel.inputs()[x].clone());
        }
    }
    Ok(CiUnassisted {
        count: witness.len(),
        witness,
    })
}

// ---- coloring-derived schemes ---------------------------------------------

/// Builds the identification scheme induced by a proper coloring of the
/// support graph: the sender transmits the input's color over the
/// noiseless side channel and the receiver identifies within the color
/// class by private output.
pub fn scheme_from_coloring(
    channel: &Channel,
    coloring: &Coloring,
) -> Result<IdentificationScheme, IdentificationError> {
    let support = channel.support_graph()?;
    let n = channel.input_count();
    if coloring.vertex_count() != n {
        return Err(IdentificationError::ColoringSizeMismatch {
            assigned: coloring.vertex_count(),
            expected: n,
        });
    }
    for (u, v) in support.edges() {
        if coloring.color(u) == coloring.color(v) {
            return Err(IdentificationError::ImproperColoring {
                u: channel.inputs()[u].clone(),
                v: channel.inputs()[v].clone(),
            });
        }
    }
    let k = coloring.color_count();
    let mut decision = vec![vec![Verdict::Inconclusive; k]; n];
    for (y, row) in decision.iter_mut().enumerate() {
        let domain = channel.input_domain_idx(y);
        for (c, cell) in row.iter_mut().enumerate() {
            let members: Vec<usize> = domain
                .iter()
                .copied()
                .filter(|&x| coloring.color(x) == c)
                .collect();
            if let [x] = members.as_slice() {
                *cell = Verdict::Identified(*x);
            }
        }
    }
    let scheme = IdentificationScheme {
        color_names: default_color_names(k),
        partition: coloring.assignment().to_vec(),
        decision,
    };
    // a proper coloring guarantees every input a private output within
    // its class (its own self-loop output at minimum)
    let report = verify_scheme(channel, &scheme);
    assert!(report.false_accepts.is_empty());
    assert_eq!(report.identified_count, n);
    Ok(scheme)
}

// ---- verification ----------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FalseAccept {
    pub input: String,
    pub output: String,
    pub decoded: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub identified_count: usize,
    pub identified_inputs: Vec<String>,
    pub false_accepts: Vec<FalseAccept>,
}

/// Exhaustive walk over all transitions with positive probability. A
/// valid scheme has no false accepts; `identified_count` counts inputs
/// identified on at least one reachable output.
pub fn verify_scheme(channel: &Channel, scheme: &IdentificationScheme) -> VerificationReport {
    let mut identified_inputs = Vec::new();
    let mut false_accepts = Vec::new();
    for x in 0..channel.input_count() {
        let color = scheme.partition[x];
        let mut hit = false;
        for y in channel.output_range_idx(x) {
            match scheme.decision[y][color] {
                Verdict::Identified(x2) if x2 == x => hit = true,
                Verdict::Identified(x2) => false_accepts.push(FalseAccept {
                    input: channel.inputs()[x].clone(),
                    output: channel.outputs()[y].clone(),
                    decoded: channel.inputs()[x2].clone(),
                }),
                Verdict::Inconclusive => {}
            }
        }
        if hit {
            identified_inputs.push(channel.inputs()[x].clone());
        }
    }
    VerificationReport {
        identified_count: identified_inputs.len(),
        identified_inputs,
        false_accepts,
    }
}

// ---- partition oracle -------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssistedCi {
    pub count: usize,
    /// First partition (in restricted-growth order) achieving the
    /// maximum.
    pub partition: Coloring,
}

/// Brute-force maximum, over all partitions of the inputs into at most
/// `k` classes, of the number of inputs with a private output within
/// their class. This is the independent oracle for the chromatic-number
/// characterization of minimal assistance.
pub fn assisted_ci(channel: &Channel, k: usize) -> Result<AssistedCi, IdentificationError> {
    let support = channel.support_graph()?;
    let n = support.vertex_count();
    if n > PARTITION_ORACLE_GUARD {
        return Err(IdentificationError::TooLarge {
            inputs: n,
            guard: PARTITION_ORACLE_GUARD,
        });
    }
    if n == 0 || k == 0 {
        return Ok(AssistedCi {
            count: 0,
            partition: Coloring::new(vec![]),
        });
    }
    let gamma = gamma_masks(channel);
    let mut best: Option<(usize, Vec<usize>)> = None;
    enumerate_partitions(n, k, |assignment| {
        let count = identified_in_partition(&gamma, assignment);
        if best.as_ref().is_none_or(|(b, _)| count > *b) {
            best = Some((count, assignment.to_vec()));
        }
        best.as_ref().unwrap().0 == n
    });
    let (count, assignment) = best.unwrap();
    Ok(AssistedCi {
        count,
        partition: Coloring::new(assignment),
    })
}

fn gamma_masks(channel: &Channel) -> Vec<u64> {
    (0..channel.input_count())
        .map(|x| {
            channel
                .output_range_idx(x)
                .into_iter()
                .fold(0u64, |m, y| m | 1 << y)
        })
        .collect()
}

/// Number of inputs holding an output covered by no classmate.
fn identified_in_partition(gamma: &[u64], assignment: &[usize]) -> usize {
    let k = assignment.iter().max().unwrap() + 1;
    let mut once = vec![0u64; k];
    let mut twice = vec![0u64; k];
    for (x, &c) in assignment.iter().enumerate() {
        twice[c] |= once[c] & gamma[x];
        once[c] |= gamma[x];
    }
    assignment
        .iter()
        .enumerate()
        .filter(|&(x, &c)| gamma[x] & !twice[c] != 0)
        .count()
}

/// Visits every partition of `0..n` into at most `k` classes, encoded as
/// restricted-growth strings in lexicographic order. Stops early when
/// the visitor returns true.
fn enumerate_partitions(n: usize, k: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    let mut a = vec![0usize; n];
    fn rec(
        a: &mut Vec<usize>,
        i: usize,
        max_used: usize,
        k: usize,
        visit: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        let n = a.len();
        if i == n {
            return visit(a);
        }
        let cap = (max_used + 1).min(k - 1);
        for c in 0..=cap {
            a[i] = c;
            if rec(a, i + 1, max_used.max(c), k, visit) {
                return true;
            }
        }
        false
    }
    if n > 0 {
        rec(&mut a, 1, 0, k, &mut visit);
    }
}

// ---- minimal assistance -------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinAssistance {
    /// χ of the support graph: the coloring route. Always sufficient,
    /// and exactly minimal on the named channel families.
    pub beta: usize,
    /// A proper coloring witnessing `beta`.
    pub coloring: Coloring,
    /// Exact minimum class count over all fully identifying partitions,
    /// when the input count is within the oracle guard. Can undercut
    /// `beta`: adjacent classmates may each keep a private output, so a
    /// fully identifying partition need not be a proper coloring (see
    /// tests/necessity_counterexample.rs for a 6-input channel needing
    /// only 2 of χ = 3 symbols).
    pub oracle_beta: Option<usize>,
}

/// Classical assistance for full conclusive identification: the
/// chromatic number of the support graph (the coloring construction),
/// with the exact brute-force partition minimum alongside when feasible.
pub fn min_classical_assistance(channel: &Channel) -> Result<MinAssistance, IdentificationError> {
    let support = channel.support_graph()?;
    let chromatic = combinatorics::chromatic_number(&support);
    let n = support.vertex_count();
    let oracle_beta = if n > 0 && n <= PARTITION_ORACLE_GUARD {
        let gamma = gamma_masks(channel);
        let mut best = n;
        enumerate_partitions(n, n, |assignment| {
            if identified_in_partition(&gamma, assignment) == n {
                let classes = assignment.iter().max().unwrap() + 1;
                best = best.min(classes);
            }
            false
        });
        Some(best)
    } else {
        None
    };
    Ok(MinAssistance {
        beta: chromatic.number,
        coloring: chromatic.coloring,
        oracle_beta,
    })
}

// ---- zero-error index ---------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroErrorIndex {
    /// Independence number of the confusability graph; the single-shot
    /// zero-error capacity is log2 of this.
    pub alpha: usize,
    pub witness: Vec<String>,
}

impl ZeroErrorIndex {
    /// Exact bits annotation: `log2(alpha)` printed symbolically unless
    /// alpha is a power of two.
    pub fn bits_annotation(&self) -> String {
        if self.alpha.is_power_of_two() {
            format!("{} bits", self.alpha.trailing_zeros())
        } else {
            format!("log2({}) bits", self.alpha)
        }
    }
}

pub fn zero_error_index(channel: &Channel) -> Result<ZeroErrorIndex, IdentificationError> {
    let confusability = channel.confusability_graph()?;
    let ind = combinatorics::independence_number(&confusability);
    Ok(ZeroErrorIndex {
        alpha: ind.size,
        witness: ind
            .witness
            .iter()
            .map(|&x| channel.inputs()[x].clone())
            .collect(),
    })
}

// ---- superactivation -------------------------------------------------------------

/// Superactivation gap Δ = |X| − χ(support graph) for an SNFC channel
/// with zero unassisted index: the identified-input surplus of the
/// assisted pair over the assisting channel alone.
pub fn superactivation_gap(channel: &Channel) -> Result<usize, IdentificationError> {
    let ci = ci_unassisted(channel)?;
    if ci.count != 0 {
        return Err(IdentificationError::PreconditionViolated(format!(
            "superactivation gap requires ci = 0, but {} inputs are already identifiable",
            ci.count
        )));
    }
    let assistance = min_classical_assistance(channel)?;
    Ok(channel.input_count() - assistance.beta)
}

// ---- simulation ---------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimulationRow {
    pub input: String,
    pub trials: u64,
    pub conclusive: u64,
    pub inconclusive: u64,
    pub false_accepts: u64,
    /// Exact probability of a conclusive verdict for this input.
    pub expected_rate: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimulationReport {
    pub seed: u64,
    pub trials: u64,
    pub rows: Vec<SimulationRow>,
    pub total_false_accepts: u64,
}

impl SimulationReport {
    /// RFC-4180-style CSV: `input,trials,conclusive,inconclusive,false_accepts`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("input,trials,conclusive,inconclusive,false_accepts\n");
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                csv_field(&row.input),
                row.trials,
                row.conclusive,
                row.inconclusive,
                row.false_accepts
            ));
        }
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Monte-Carlo run of a verified scheme: inputs drawn uniformly, the
/// channel sampled by inverse CDF over exact rationals, the decision
/// table applied.
///
/// Randomness comes from a single ChaCha8 stream seeded with
/// `seed_from_u64(seed)`; each trial consumes one input draw followed by
/// one output draw, so runs are bit-reproducible for a given seed.
pub fn simulate_protocol(
    channel: &Channel,
    scheme: &IdentificationScheme,
    trials: u64,
    seed: u64,
) -> Result<SimulationReport, IdentificationError> {
    let check = verify_scheme(channel, scheme);
    if !check.false_accepts.is_empty() {
        return Err(IdentificationError::InvalidScheme(format!(
            "scheme has {} false accepts; refusing to simulate",
            check.false_accepts.len()
        )));
    }
    let n = channel.input_count();
    if n == 0 {
        return Err(IdentificationError::InvalidScheme(
            "cannot simulate a channel with no inputs".into(),
        ));
    }

    // integer inverse-CDF per column over the common denominator
    let mut samplers = Vec::with_capacity(n);
    for x in 0..n {
        let denom: BigInt = (0..channel.output_count())
            .filter(|&y| channel.probability(y, x).is_positive())
            .fold(BigInt::one(), |acc, y| {
                acc.lcm(channel.probability(y, x).denom())
            });
        let total = denom.to_u64().ok_or(IdentificationError::WeightsTooLarge)?;
        let mut cumulative = Vec::new();
        let mut acc = 0u64;
        for y in 0..channel.output_count() {
            let p = channel.probability(y, x);
            if p.is_positive() {
                let w = (p * BigRational::from_integer(denom.clone()))
                    .to_integer()
                    .to_u64()
                    .ok_or(IdentificationError::WeightsTooLarge)?;
                acc += w;
                cumulative.push((acc, y));
            }
        }
        debug_assert_eq!(acc, total);
        samplers.push((total, cumulative));
    }

    let mut rows: Vec<SimulationRow> = (0..n)
        .map(|x| {
            let color = scheme.partition[x];
            let expected_rate = channel
                .output_range_idx(x)
                .into_iter()
                .filter(|&y| scheme.decision[y][color] == Verdict::Identified(x))
                .map(|y| channel.probability(y, x).clone())
                .fold(BigRational::zero(), |a, b| a + b);
            SimulationRow {
                input: channel.inputs()[x].clone(),
                trials: 0,
                conclusive: 0,
                inconclusive: 0,
                false_accepts: 0,
                expected_rate,
            }
        })
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let x = rng.gen_range(0..n);
        let (total, cumulative) = &samplers[x];
        let r = rng.gen_range(0..*total);
        let y = cumulative
            .iter()
            .find(|(cum, _)| r < *cum)
            .expect("cumulative weights cover the range")
            .1;
        let row = &mut rows[x];
        row.trials += 1;
        match scheme.decision[y][scheme.partition[x]] {
            Verdict::Identified(x2) if x2 == x => row.conclusive += 1,
            Verdict::Identified(_) => row.false_accepts += 1,
            Verdict::Inconclusive => row.inconclusive += 1,
        }
    }
    let total_false_accepts = rows.iter().map(|r| r.false_accepts).sum();
    // the scheme was verified exhaustively above, so observing a false
    // accept would mean the sampler left the support
    assert_eq!(total_false_accepts, 0);
    Ok(SimulationReport {
        seed,
        trials,
        rows,
        total_false_accepts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn pentagon_channel(variant: usize) -> Channel {
        Channel::canonical(&Graph::pentagon_variant(variant).unwrap()).unwrap()
    }

    /// The canonical pentagon partition: 1↦R, 2,4↦B, 3,5↦G.
    fn pentagon_partition() -> Coloring {
        Coloring::new(vec![0, 1, 2, 1, 2])
    }

    fn digraph_example() -> Channel {
        let labels: Vec<String> = vec!["1".into(), "2".into(), "3".into()];
        Channel::new(
            labels.clone(),
            labels,
            vec![
                vec![ratio(0, 1), ratio(1, 3), ratio(0, 1)],
                vec![ratio(1, 4), ratio(1, 3), ratio(0, 1)],
                vec![ratio(3, 4), ratio(1, 3), ratio(1, 1)],
            ],
        )
        .unwrap()
    }

    #[test]
    fn ci_unassisted_examples() {
        assert_eq!(ci_unassisted(&pentagon_channel(1)).unwrap().count, 0);
        // only input 2 has a private output (output 1)
        let ci = ci_unassisted(&digraph_example()).unwrap();
        assert_eq!(ci.count, 1);
        assert_eq!(ci.witness, vec!["2"]);
        for n in [1, 3, 6] {
            assert_eq!(ci_unassisted(&Channel::noiseless(n)).unwrap().count, n);
        }
        // mismatched alphabets are rejected
        let c = Channel::new(vec!["a".into()], vec!["1".into()], vec![vec![ratio(1, 1)]]).unwrap();
        assert!(ci_unassisted(&c).is_err());
    }

    #[test]
    fn pentagon_scheme_matches_table() {
        let channel = pentagon_channel(1);
        let scheme = scheme_from_coloring(&channel, &pentagon_partition())
            .unwrap()
            .with_color_names(vec!["R".into(), "B".into(), "G".into()])
            .unwrap();
        let rows = scheme.table_rows(&channel);
        assert_eq!(rows.len(), 15);
        let inconclusive: Vec<(&str, &str, &str)> = rows
            .iter()
            .filter(|r| !r.identified)
            .map(|r| (r.input.as_str(), r.output.as_str(), r.message.as_str()))
            .collect();
        assert_eq!(
            inconclusive,
            vec![
                ("2", "3", "B"),
                ("3", "4", "G"),
                ("4", "3", "B"),
                ("5", "4", "G")
            ]
        );

        let report = verify_scheme(&channel, &scheme);
        assert_eq!(report.identified_count, 5);
        assert!(report.false_accepts.is_empty());
    }

    #[test]
    fn appendix_scheme_for_s4() {
        let channel = pentagon_channel(4);
        let scheme = scheme_from_coloring(&channel, &pentagon_partition()).unwrap();
        // input 1 is alone in its class and identified on all 5 outputs
        let rows = scheme.table_rows(&channel);
        let input1: Vec<bool> = rows
            .iter()
            .filter(|r| r.input == "1")
            .map(|r| r.identified)
            .collect();
        assert_eq!(input1, vec![true; 5]);
        // the others are identified exactly on their self output
        for x in ["2", "3", "4", "5"] {
            let identified: Vec<&str> = rows
                .iter()
                .filter(|r| r.input == x && r.identified)
                .map(|r| r.output.as_str())
                .collect();
            assert_eq!(identified, vec![x]);
        }
    }

    #[test]
    fn improper_coloring_rejected() {
        let channel = pentagon_channel(1);
        // inputs 1 and 2 are adjacent in the pentagon
        let bad = Coloring::new(vec![0, 0, 1, 2, 1]);
        assert!(matches!(
            scheme_from_coloring(&channel, &bad),
            Err(IdentificationError::ImproperColoring { .. })
        ));
        let short = Coloring::new(vec![0, 1]);
        assert!(matches!(
            scheme_from_coloring(&channel, &short),
            Err(IdentificationError::ColoringSizeMismatch { .. })
        ));
    }

    #[test]
    fn identity_decoding_with_one_class() {
        let channel = Channel::noiseless(4);
        let coloring = Coloring::new(vec![0; 4]);
        let scheme = scheme_from_coloring(&channel, &coloring).unwrap();
        let report = verify_scheme(&channel, &scheme);
        assert_eq!(report.identified_count, 4);
        for x in 0..4 {
            assert_eq!(scheme.verdict(x, 0), Verdict::Identified(x));
        }
    }

    #[test]
    fn corrupted_scheme_reports_false_accepts() {
        let channel = pentagon_channel(1);
        let mut scheme = scheme_from_coloring(&channel, &pentagon_partition()).unwrap();
        // claim (output 3, color B) decodes to input 2; input 4 also
        // reaches that cell
        scheme.decision[2][1] = Verdict::Identified(1);
        let report = verify_scheme(&channel, &scheme);
        assert_eq!(
            report.false_accepts,
            vec![FalseAccept {
                input: "4".into(),
                output: "3".into(),
                decoded: "2".into(),
            }]
        );
    }

    #[test]
    fn all_inconclusive_scheme() {
        let channel = pentagon_channel(1);
        let scheme = IdentificationScheme {
            color_names: vec!["R".into()],
            partition: vec![0; 5],
            decision: vec![vec![Verdict::Inconclusive]; 5],
        };
        let report = verify_scheme(&channel, &scheme);
        assert_eq!(report.identified_count, 0);
        assert!(report.false_accepts.is_empty());
    }

    #[test]
    fn assisted_ci_pentagon() {
        let c1 = pentagon_channel(1);
        assert_eq!(assisted_ci(&c1, 3).unwrap().count, 5);
        assert_eq!(assisted_ci(&c1, 2).unwrap().count, 4);

        let c5 = pentagon_channel(5);
        assert!(assisted_ci(&c5, 3).unwrap().count < 5);
        assert_eq!(assisted_ci(&c5, 4).unwrap().count, 5);

        // singleton classes always identify everything
        for v in 1..=6 {
            assert_eq!(assisted_ci(&pentagon_channel(v), 5).unwrap().count, 5);
        }
    }

    #[test]
    fn assisted_ci_monotone_and_guarded() {
        let c = pentagon_channel(3);
        let mut prev = 0;
        for k in 1..=5 {
            let cur = assisted_ci(&c, k).unwrap().count;
            assert!(cur >= prev);
            prev = cur;
        }
        let big = Channel::noiseless(13);
        assert!(matches!(
            assisted_ci(&big, 2),
            Err(IdentificationError::TooLarge { .. })
        ));
    }

    #[test]
    fn assisted_witness_recounts() {
        // the oracle's witness need not be a proper coloring (adjacent
        // classmates can still hold private outputs), so recount directly
        let c = pentagon_channel(1);
        let result = assisted_ci(&c, 3).unwrap();
        assert_eq!(result.count, 5);
        let mut recount = 0;
        for x in 0..5 {
            let mates: Vec<usize> = (0..5)
                .filter(|&x2| x2 != x && result.partition.color(x2) == result.partition.color(x))
                .collect();
            let gamma_x = c.output_range_idx(x);
            let private = gamma_x
                .iter()
                .any(|y| mates.iter().all(|&x2| !c.output_range_idx(x2).contains(y)));
            if private {
                recount += 1;
            }
        }
        assert_eq!(recount, result.count);
    }

    #[test]
    fn min_assistance_cross_checks() {
        for (variant, expected) in [(1, 3), (4, 3), (5, 4), (6, 4)] {
            let c = pentagon_channel(variant);
            let m = min_classical_assistance(&c).unwrap();
            assert_eq!(m.beta, expected, "variant {variant}");
            assert_eq!(m.oracle_beta, Some(expected), "variant {variant}");
        }
        let star = Channel::canonical(&Graph::star(5).unwrap().with_self_loops(true)).unwrap();
        let m = min_classical_assistance(&star).unwrap();
        assert_eq!(m.beta, 2);
        assert_eq!(m.oracle_beta, Some(2));
    }

    #[test]
    fn zero_error_cycles() {
        for n in 3..=5 {
            let c = Channel::canonical(&Graph::cycle(n).unwrap().with_self_loops(true)).unwrap();
            assert_eq!(zero_error_index(&c).unwrap().alpha, 1, "n={n}");
        }
        for n in 6..=12 {
            let c = Channel::canonical(&Graph::cycle(n).unwrap().with_self_loops(true)).unwrap();
            assert_eq!(zero_error_index(&c).unwrap().alpha, n / 3, "n={n}");
        }
        let w7 = Channel::canonical(&Graph::wheel(7).unwrap().with_self_loops(true)).unwrap();
        assert_eq!(zero_error_index(&w7).unwrap().alpha, 1);
    }

    #[test]
    fn bits_annotation_is_exact() {
        let z = ZeroErrorIndex {
            alpha: 4,
            witness: vec![],
        };
        assert_eq!(z.bits_annotation(), "2 bits");
        let z = ZeroErrorIndex {
            alpha: 3,
            witness: vec![],
        };
        assert_eq!(z.bits_annotation(), "log2(3) bits");
    }

    #[test]
    fn superactivation_examples() {
        let c10 = Channel::canonical(&Graph::cycle(10).unwrap().with_self_loops(true)).unwrap();
        assert_eq!(superactivation_gap(&c10).unwrap(), 8);
        let w9 = Channel::canonical(&Graph::wheel(9).unwrap().with_self_loops(true)).unwrap();
        assert_eq!(superactivation_gap(&w9).unwrap(), 6);
        let f4 = Channel::canonical(&Graph::friendship(4).unwrap().with_self_loops(true)).unwrap();
        assert_eq!(superactivation_gap(&f4).unwrap(), 6);
        // identity channels violate the ci = 0 precondition
        assert!(matches!(
            superactivation_gap(&Channel::noiseless(3)),
            Err(IdentificationError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn scheme_json_round_trip() {
        let channel = pentagon_channel(1);
        let scheme = scheme_from_coloring(&channel, &pentagon_partition())
            .unwrap()
            .with_color_names(vec!["R".into(), "B".into(), "G".into()])
            .unwrap();
        let json = scheme.to_json(&channel);
        let back = IdentificationScheme::from_json(&json, &channel).unwrap();
        assert_eq!(
            verify_scheme(&channel, &back),
            verify_scheme(&channel, &scheme)
        );
        assert_eq!(back.table_rows(&channel), scheme.table_rows(&channel));

        let garbage = serde_json::json!({"partition": {"1": "R"}, "decision": []});
        assert!(IdentificationScheme::from_json(&garbage, &channel).is_err());
    }

    #[test]
    fn simulation_is_reproducible_and_clean() {
        let channel = pentagon_channel(1);
        let scheme = scheme_from_coloring(&channel, &pentagon_partition()).unwrap();
        let a = simulate_protocol(&channel, &scheme, 20_000, 7).unwrap();
        let b = simulate_protocol(&channel, &scheme, 20_000, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_csv(), b.to_csv());
        assert_eq!(a.total_false_accepts, 0);

        let c = simulate_protocol(&channel, &scheme, 20_000, 8).unwrap();
        assert_ne!(a.rows, c.rows);

        // input 2 is identified on two of its three equiprobable outputs
        let row = &a.rows[1];
        assert_eq!(row.expected_rate, ratio(2, 3));
        // 3-sigma binomial bound, exactly: (obs - T p)^2 <= 9 T p (1-p)
        let t = ratio(row.trials as i64, 1);
        let p = &row.expected_rate;
        let diff = ratio(row.conclusive as i64, 1) - &t * p;
        let bound = ratio(9, 1) * &t * p * (ratio(1, 1) - p);
        assert!(&diff * &diff <= bound);
    }

    #[test]
    fn simulation_identity_channel_is_certain() {
        let channel = Channel::noiseless(3);
        let scheme = scheme_from_coloring(&channel, &Coloring::new(vec![0; 3])).unwrap();
        let report = simulate_protocol(&channel, &scheme, 5_000, 42).unwrap();
        for row in &report.rows {
            assert_eq!(row.conclusive, row.trials);
            assert_eq!(row.expected_rate, ratio(1, 1));
        }
    }

    #[test]
    fn simulation_rejects_bad_scheme() {
        let channel = pentagon_channel(1);
        let mut scheme = scheme_from_coloring(&channel, &pentagon_partition()).unwrap();
        scheme.decision[2][1] = Verdict::Identified(1);
        assert!(matches!(
            simulate_protocol(&channel, &scheme, 10, 0),
            Err(IdentificationError::InvalidScheme(_))
        ));
    }

    #[test]
    fn csv_quoting() {
        let report = SimulationReport {
            seed: 0,
            trials: 1,
            rows: vec![SimulationRow {
                input: "(1,2)".into(),
                trials: 1,
                conclusive: 1,
                inconclusive: 0,
                false_accepts: 0,
                expected_rate: ratio(1, 1),
            }],
            total_false_accepts: 0,
        };
        assert_eq!(
            report.to_csv(),
            "input,trials,conclusive,inconclusive,false_accepts\n\"(1,2)\",1,1,0,0\n"
        );
    }
}
