//! Newman graphs with the antipodal quotient, the exponential
//! quantum-advantage bound, co-normal product channels, and the
//! quantum-advantage scaling reports.

use crate::channel::{Channel, ChannelError};
use crate::combinatorics::{self, CombinatoricsError};
use crate::graph::{Diameter, Graph, GraphError};
use crate::quantum::{self, QuantumError, VectorSystem, XiCertificate};
use crate::rational::ceil_to_usize;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use thiserror::Error;

/// Newman-graph construction cap: `d = 12` means 1024 vertices after the
/// antipodal quotient.
pub const NEWMAN_D_GUARD: usize = 12;
/// Exact independence is only attempted up to `d = 8` (64 vertices).
pub const NEWMAN_ALPHA_GUARD: usize = 8;
/// Exact chromatic number in scaling reports is attempted up to this
/// many product vertices.
pub const CHI_EXACT_GUARD: usize = 25;
/// Product graphs beyond this size truncate a scaling report.
pub const SCALING_CAP: usize = 400;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NewmanError {
    #[error("d must be a multiple of 4 with d >= 4, got {0}")]
    InvalidD(usize),
    #[error("{what} of {requested} exceeds the guard of {guard}")]
    TooLarge {
        what: &'static str,
        requested: usize,
        guard: usize,
    },
    #[error(transparent)]
    Channel(#[from] ChannelError),
    #[error(transparent)]
    Combinatorics(#[from] CombinatoricsError),
    #[error(transparent)]
    Quantum(#[from] QuantumError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The Newman graph `Y_d` on antipodal classes of even-weight ±1 vectors,
/// together with the class representatives as an exact vector system.
#[derive(Debug, Clone)]
pub struct NewmanGraph {
    pub d: usize,
    pub graph: Graph,
    /// Canonical representative of each class: first coordinate +1.
    pub states: VectorSystem,
}

/// Builds `Y_d`: vertices are antipodal classes of ±1 vectors of length
/// `d` with an even number of −1 entries; two classes are adjacent iff
/// representatives are at Hamming distance `d/2` (equivalently,
/// orthogonal). Negating one representative maps distance `h` to
/// `d − h`, so the criterion is representative-independent.
pub fn newman_graph(d: usize) -> Result<NewmanGraph, NewmanError> {
    if d < 4 || !d.is_multiple_of(4) {
        return Err(NewmanError::InvalidD(d));
    }
    if d > NEWMAN_D_GUARD {
        return Err(NewmanError::TooLarge {
            what: "newman d",
            requested: d,
            guard: NEWMAN_D_GUARD,
        });
    }
    // bit i set = entry −1; canonical class representative has bit 0
    // clear, and even-weight membership forces even popcount
    let masks: Vec<u32> = (0u32..1 << d)
        .filter(|m| m & 1 == 0 && m.count_ones() % 2 == 0)
        .collect();
    assert_eq!(masks.len(), 1 << (d - 2));
    let half = (d / 2) as u32;
    let full = (1u32 << d) - 1;
    let mut edges = Vec::new();
    for (i, &a) in masks.iter().enumerate() {
        for (j, &b) in masks.iter().enumerate().skip(i + 1) {
            let h = (a ^ b).count_ones();
            debug_assert_eq!(
                (a ^ (b ^ full)).count_ones(),
                d as u32 - h,
                "antipodal flip must complement the distance"
            );
            if h == half {
                edges.push((i, j));
            }
        }
    }
    let graph = Graph::new(masks.len(), &edges, false)?;
    let rows: Vec<Vec<i64>> = masks
        .iter()
        .map(|&m| {
            (0..d)
                .map(|i| if m >> i & 1 == 1 { -1 } else { 1 })
                .collect()
        })
        .collect();
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    let states = VectorSystem::from_real(&refs)?;
    Ok(NewmanGraph { d, graph, states })
}

/// Exact or lower-bounded chromatic value, depending on whether the
/// instance fit the exact-search guard.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChiBound {
    Exact(usize),
    LowerBound(usize),
}

impl ChiBound {
    pub fn value(&self) -> usize {
        match *self {
            ChiBound::Exact(v) | ChiBound::LowerBound(v) => v,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, ChiBound::Exact(_))
    }
}

impl std::fmt::Display for ChiBound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ChiBound::Exact(v) => write!(f, "{v}"),
            ChiBound::LowerBound(v) => write!(f, ">={v}"),
        }
    }
}

/// Classical-to-quantum assistance comparison for one channel or product
/// level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QaReport {
    pub chi: ChiBound,
    pub xi: XiCertificate,
    /// χ (or its lower bound) over the ξ upper bound.
    pub qa_ratio: BigRational,
    /// Present when χ came from the ⌈|V|/α⌉ route.
    pub qa_lower_bound: Option<BigRational>,
}

/// Full analysis of the Newman channel at `d`: exact independence by
/// branch-and-bound, the implied chromatic lower bound, the tight ξ
/// certificate, and the exponential-advantage inequality as exact
/// rationals.
#[derive(Debug, Clone)]
pub struct NewmanReport {
    pub d: usize,
    pub vertex_count: usize,
    pub diameter: Diameter,
    pub alpha: usize,
    pub alpha_witness: Vec<usize>,
    /// `floor(1.99^d / 4)`, the literature bound alpha must respect.
    pub alpha_sanity_bound: BigInt,
    pub chi_lower: usize,
    pub qa: QaReport,
    /// `(1/d)(2/1.99)^d`.
    pub exponential_bound: BigRational,
    pub bound_holds: bool,
}

pub fn newman_qa_bound(d: usize) -> Result<NewmanReport, NewmanError> {
    if d > NEWMAN_ALPHA_GUARD {
        return Err(NewmanError::TooLarge {
            what: "newman qa d",
            requested: d,
            guard: NEWMAN_ALPHA_GUARD,
        });
    }
    let newman = newman_graph(d)?;
    let n = newman.graph.vertex_count();
    let diameter = newman.graph.diameter();

    let independence = combinatorics::independence_number(&newman.graph);
    let alpha = independence.size;

    let ratio_199 = BigRational::new(199.into(), 100.into());
    let pow = |r: &BigRational, e: usize| -> BigRational {
        (0..e).fold(BigRational::one(), |acc, _| acc * r)
    };
    let alpha_sanity = pow(&ratio_199, d) / BigRational::from_integer(4.into());
    let alpha_sanity_bound = alpha_sanity.floor().to_integer();
    assert!(BigInt::from(alpha) <= alpha_sanity_bound);

    // ξ certificate: the defining ±1 vectors are an orthogonal
    // representation in dimension d; a Hadamard clique of d mutually
    // orthogonal Newman states meets it from below
    let rep = quantum::is_orthogonal_representation(&newman.states, &newman.graph)?;
    assert!(rep.ok);
    let clique = hadamard_clique_vertices(&newman)?;
    let xi = XiCertificate {
        lower: clique.len(),
        upper: d,
        tight: clique.len() == d,
        clique,
    };

    let chi_lower = ceil_to_usize(&BigRational::new((n as i64).into(), (alpha as i64).into()));
    let qa_lower = BigRational::new((chi_lower as i64).into(), (d as i64).into());
    let exponential_bound = pow(&(BigRational::new(2.into(), 1.into()) / &ratio_199), d)
        / BigRational::from_integer((d as i64).into());
    let bound_holds = qa_lower >= exponential_bound;

    Ok(NewmanReport {
        d,
        vertex_count: n,
        diameter,
        alpha,
        alpha_witness: independence.witness,
        alpha_sanity_bound,
        chi_lower,
        qa: QaReport {
            chi: ChiBound::LowerBound(chi_lower),
            xi,
            qa_ratio: qa_lower.clone(),
            qa_lower_bound: Some(qa_lower),
        },
        exponential_bound,
        bound_holds,
    })
}

/// Maps the rows of the order-`d` Hadamard construction onto Newman-graph
/// vertices and verifies they form a clique: the ω(Y_d) >= d witness.
fn hadamard_clique_vertices(newman: &NewmanGraph) -> Result<Vec<usize>, NewmanError> {
    let d = newman.d;
    let had = quantum::hadamard_clique(d)?;
    let mut vertices = Vec::with_capacity(d);
    for i in 0..d {
        let row = had.vector(i);
        // canonical representative: flip the whole row if the first
        // entry is −1
        let sign = row[0].re;
        let mask: u32 = (0..d)
            .filter(|&k| row[k].re * sign == -1)
            .fold(0, |m, k| m | 1 << k);
        let vertex = (0..newman.graph.vertex_count())
            .find(|&v| state_mask(&newman.states, v, d) == mask)
            .expect("hadamard rows are even-weight ±1 vectors");
        vertices.push(vertex);
    }
    vertices.sort_unstable();
    vertices.dedup();
    assert_eq!(vertices.len(), d);
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[..i] {
            assert!(newman.graph.adjacent(u, v));
        }
    }
    Ok(vertices)
}

fn state_mask(states: &VectorSystem, v: usize, d: usize) -> u32 {
    (0..d)
        .filter(|&k| states.vector(v)[k].re == -1)
        .fold(0, |m, k| m | 1 << k)
}

/// The m-fold co-normal product channel: the canonical channel over the
/// m-fold co-normal power of the support graph, with m-tuple labels.
pub fn conormal_channel(channel: &Channel, m: usize, cap: usize) -> Result<Channel, NewmanError> {
    let support = channel.support_graph()?;
    let n = support.vertex_count();
    if m == 0 {
        return Err(NewmanError::InvalidD(0));
    }
    let size = n.checked_pow(m as u32).filter(|&s| s <= cap);
    let Some(_) = size else {
        return Err(NewmanError::TooLarge {
            what: "conormal product inputs",
            requested: m,
            guard: cap,
        });
    };
    if m == 1 {
        return Ok(channel.clone());
    }
    let power = support.conormal_power(m)?;
    let labels: Vec<String> = (0..power.vertex_count())
        .map(|mut idx| {
            let mut digits = vec![0usize; m];
            for slot in (0..m).rev() {
                digits[slot] = idx % n;
                idx /= n;
            }
            let parts: Vec<&str> = digits
                .iter()
                .map(|&i| channel.inputs()[i].as_str())
                .collect();
            format!("({})", parts.join(","))
        })
        .collect();
    Ok(Channel::canonical_with_labels(&power, labels)?)
}

/// One level of a quantum-advantage scaling report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalingStep {
    pub exponent: usize,
    pub vertex_count: usize,
    pub chi: ChiBound,
    /// Direct exact LP value, when the product fit the enumeration
    /// guard.
    pub chi_f_direct: Option<BigRational>,
    /// `χ_f(G)^m`: exact by multiplicativity under the co-normal
    /// product.
    pub chi_f_power: BigRational,
    pub xi: XiCertificate,
    /// `(χ_f(G)/ξ-upper)^m`, the certified advantage lower bound.
    pub ratio_bound: BigRational,
    /// `χ/ξ-upper` when χ is exact.
    pub qa_ratio: Option<BigRational>,
}

/// Per-exponent quantum-advantage report for `G^{×1} .. G^{×m}` under
/// the co-normal product, given an orthogonal representation of `G`.
///
/// χ is exact while the product fits the exact-search guard and falls
/// back to the `χ_f(G)^m` lower-bound chain beyond it; the ξ upper bound
/// is certified by the tensor-power representation, the lower bound by
/// the product of base cliques. The report truncates at the first
/// exponent whose product exceeds the size cap.
pub fn qa_scaling_report(
    g: &Graph,
    m: usize,
    vs: &VectorSystem,
) -> Result<Vec<ScalingStep>, NewmanError> {
    let base_rep = quantum::is_orthogonal_representation(vs, g)?;
    if !base_rep.ok {
        return Err(QuantumError::NotARepresentation(base_rep.violations.len()).into());
    }
    let chi_f_base = combinatorics::fractional_chromatic(g)?;
    let omega_base = combinatorics::clique_number(g);
    let n = g.vertex_count();
    let dim = vs.dim();

    let mut steps = Vec::new();
    let mut product = g.clone();
    let mut tensor = vs.clone();
    let mut chi_f_power = chi_f_base.clone();
    let ratio_base = &chi_f_base / BigRational::from_integer((dim as i64).into());
    let mut ratio_bound = ratio_base.clone();

    for e in 1..=m {
        if e > 1 {
            let next_size = product.vertex_count().checked_mul(n);
            if next_size.is_none_or(|s| s > SCALING_CAP) {
                break;
            }
            product = product.conormal_product(g);
            tensor = tensor.tensor(vs)?;
            chi_f_power *= &chi_f_base;
            ratio_bound *= &ratio_base;
        }
        let ne = product.vertex_count();

        // tensor power of a representation represents the co-normal power
        let rep = quantum::is_orthogonal_representation(&tensor, &product)?;
        assert!(rep.ok);
        let clique = product_clique(&omega_base.witness, n, e, &product);
        let xi = XiCertificate {
            lower: clique.len(),
            upper: tensor.dim(),
            tight: clique.len() == tensor.dim(),
            clique,
        };

        let chi = if ne <= CHI_EXACT_GUARD {
            ChiBound::Exact(combinatorics::chromatic_number(&product).number)
        } else {
            ChiBound::LowerBound(ceil_to_usize(&chi_f_power))
        };
        let chi_f_direct = if ne <= combinatorics::ENUMERATION_GUARD {
            Some(combinatorics::fractional_chromatic(&product)?)
        } else {
            None
        };
        let qa_ratio = chi
            .is_exact()
            .then(|| BigRational::new((chi.value() as i64).into(), (tensor.dim() as i64).into()));
        steps.push(ScalingStep {
            exponent: e,
            vertex_count: ne,
            chi,
            chi_f_direct,
            chi_f_power: chi_f_power.clone(),
            xi,
            ratio_bound: ratio_bound.clone(),
            qa_ratio,
        });
    }
    Ok(steps)
}

/// e-fold product of a base clique is a clique of the co-normal power;
/// verified before use.
fn product_clique(base: &[usize], n: usize, e: usize, product: &Graph) -> Vec<usize> {
    let mut vertices: Vec<usize> = base.to_vec();
    for _ in 1..e {
        let mut next = Vec::with_capacity(vertices.len() * base.len());
        for &v in &vertices {
            for &b in base {
                next.push(v * n + b);
            }
        }
        vertices = next;
    }
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[..i] {
            assert!(product.adjacent(u, v));
        }
    }
    vertices
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identification;
    use crate::quantum::builtin_system;

    fn ratio(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn newman_shape() {
        let y8 = newman_graph(8).unwrap();
        assert_eq!(y8.graph.vertex_count(), 64);
        assert_eq!(y8.graph.diameter(), Diameter::Finite(2));
        // 35-regular: half the C(8,4)=70 distance-4 partners per class
        for v in 0..64 {
            assert_eq!(y8.graph.degree(v), 35);
        }
        assert_eq!(y8.graph.edge_count(), 1120);

        // d=4 is the one multiple of 4 without diameter 2
        let y4 = newman_graph(4).unwrap();
        assert_eq!(y4.graph.vertex_count(), 4);
        assert_ne!(y4.graph.diameter(), Diameter::Finite(2));

        assert!(matches!(newman_graph(6), Err(NewmanError::InvalidD(6))));
        assert!(matches!(newman_graph(0), Err(NewmanError::InvalidD(0))));
        assert!(matches!(
            newman_graph(16),
            Err(NewmanError::TooLarge { .. })
        ));
    }

    #[test]
    fn newman_guard_boundary() {
        // d=12 still constructs (1024 classes) and keeps diameter 2
        let y12 = newman_graph(12).unwrap();
        assert_eq!(y12.graph.vertex_count(), 1024);
        assert_eq!(y12.graph.diameter(), Diameter::Finite(2));
    }

    #[test]
    fn newman_states_are_orthogonal_representation() {
        let y8 = newman_graph(8).unwrap();
        let rep = quantum::is_orthogonal_representation(&y8.states, &y8.graph).unwrap();
        assert!(rep.ok);
        // non-edges are NOT orthogonal: adjacency is exactly orthogonality
        for i in 0..8 {
            for j in 0..i {
                let ip = y8.states.inner(i, j);
                assert_eq!(ip.is_zero(), y8.graph.adjacent(i, j));
            }
        }
    }

    #[test]
    fn newman_qa_bound_d8() {
        let report = newman_qa_bound(8).unwrap();
        assert_eq!(report.vertex_count, 64);
        assert_eq!(report.diameter, Diameter::Finite(2));
        // branch-and-bound value, frozen via an independent search
        assert_eq!(report.alpha, 8);
        assert_eq!(report.alpha_sanity_bound, BigInt::from(61));
        assert_eq!(report.chi_lower, 8);
        assert_eq!(report.qa.xi.lower, 8);
        assert_eq!(report.qa.xi.upper, 8);
        assert!(report.qa.xi.tight);
        assert_eq!(report.qa.qa_ratio, ratio(1, 1));
        assert!(report.bound_holds);
        // (1/8)(200/199)^8 < 1
        assert!(report.exponential_bound < ratio(1, 1));

        assert!(matches!(
            newman_qa_bound(12),
            Err(NewmanError::TooLarge { .. })
        ));
    }

    #[test]
    fn conormal_channel_levels() {
        let base = Channel::canonical(&Graph::pentagon_variant(1).unwrap()).unwrap();
        let same = conormal_channel(&base, 1, 4096).unwrap();
        assert_eq!(same, base);

        let squared = conormal_channel(&base, 2, 4096).unwrap();
        assert_eq!(squared.input_count(), 25);
        assert_eq!(squared.inputs()[0], "(1,1)");
        assert_eq!(squared.inputs()[24], "(5,5)");
        let support = squared.support_graph().unwrap();
        assert_eq!(support.diameter(), Diameter::Finite(2));
        assert_eq!(identification::ci_unassisted(&squared).unwrap().count, 0);

        assert!(matches!(
            conormal_channel(&base, 2, 20),
            Err(NewmanError::TooLarge { .. })
        ));
    }

    #[test]
    fn scaling_report_for_pentagon() {
        // orthogonal representation of C5 in C^3: e1,e2,e3,e1,e2
        let vs =
            VectorSystem::from_real(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 0, 0], &[0, 1, 0]])
                .unwrap();
        let c5 = Graph::cycle(5).unwrap();
        let steps = qa_scaling_report(&c5, 2, &vs).unwrap();
        assert_eq!(steps.len(), 2);

        let s1 = &steps[0];
        assert_eq!(s1.chi, ChiBound::Exact(3));
        assert_eq!(s1.chi_f_direct, Some(ratio(5, 2)));
        assert_eq!(s1.xi.upper, 3);
        assert_eq!(s1.ratio_bound, ratio(5, 6));

        let s2 = &steps[1];
        assert_eq!(s2.vertex_count, 25);
        assert_eq!(s2.chi_f_power, ratio(25, 4));
        assert_eq!(s2.chi_f_direct, Some(ratio(25, 4)));
        assert_eq!(s2.xi.upper, 9);
        assert_eq!(s2.chi, ChiBound::Exact(8));
        assert_eq!(s2.qa_ratio, Some(ratio(8, 9)));
    }

    #[test]
    fn scaling_report_for_k3() {
        let vs = VectorSystem::from_real(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        let k3 = Graph::complete(3).unwrap();
        let steps = qa_scaling_report(&k3, 2, &vs).unwrap();
        assert_eq!(steps[0].chi_f_direct, Some(ratio(3, 1)));
        assert_eq!(steps[1].chi_f_direct, Some(ratio(9, 1)));
        assert_eq!(steps[1].chi_f_power, ratio(9, 1));
        assert_eq!(steps[1].chi, ChiBound::Exact(9));
        assert_eq!(steps[1].xi.lower, 9);
        assert!(steps[1].xi.tight);
    }

    #[test]
    fn scaling_report_for_ks18() {
        let b = builtin_system("ks18").unwrap();
        let steps = qa_scaling_report(&b.graph, 2, &b.system).unwrap();
        let s1 = &steps[0];
        assert_eq!(s1.chi, ChiBound::Exact(5));
        assert_eq!(s1.xi.upper, 4);
        assert_eq!(s1.qa_ratio, Some(ratio(5, 4)));
        // chi_f(KS18) = 9/2 via the exact LP
        assert_eq!(s1.chi_f_direct, Some(ratio(9, 2)));

        // 324 vertices: exact chi and the LP are out of guard, the
        // lower-bound chain takes over
        let s2 = &steps[1];
        assert_eq!(s2.vertex_count, 324);
        assert_eq!(s2.chi, ChiBound::LowerBound(ceil_to_usize(&ratio(81, 4))));
        assert_eq!(s2.chi.value(), 21);
        assert_eq!(s2.chi_f_direct, None);
        assert_eq!(s2.xi.upper, 16);
        assert_eq!(s2.xi.lower, 16);
        assert_eq!(s2.ratio_bound, ratio(81, 64));
    }

    #[test]
    fn scaling_report_truncates() {
        let b = builtin_system("ks18").unwrap();
        // 18^3 = 5832 > cap: the report stops after two levels
        let steps = qa_scaling_report(&b.graph, 3, &b.system).unwrap();
        assert_eq!(steps.len(), 2);
    }

    #[test]
    fn qa_ratios_for_the_three_constructions() {
        for (name, expected) in [
            ("ks18", ratio(5, 4)),
            ("yo13", ratio(4, 3)),
            ("yo14", ratio(5, 4)),
        ] {
            let b = builtin_system(name).unwrap();
            let steps = qa_scaling_report(&b.graph, 1, &b.system).unwrap();
            assert_eq!(steps[0].qa_ratio, Some(expected), "{name}");
            assert!(steps[0].qa_ratio.as_ref().unwrap() > &ratio(1, 1));
        }
    }
}
