//! Exact complex vector systems, orthogonal representations, orthogonal
//! rank certificates, and the quantum-assisted identification protocol.
//!
//! All coordinates are Gaussian integers, so orthogonality is an exact
//! zero test and outcome probabilities are exact rationals; every
//! separation this crate certifies hinges on exact zeros.

use crate::channel::Channel;
use crate::combinatorics;
use crate::graph::Graph;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuantumError {
    #[error(transparent)]
    Channel(#[from] crate::channel::ChannelError),
    #[error("system has {vectors} vectors but the graph has {vertices} vertices")]
    SizeMismatch { vectors: usize, vertices: usize },
    #[error("vector {0} is zero")]
    ZeroVector(usize),
    #[error("vector {index} has {len} coordinates, expected {dim}")]
    DimMismatch {
        index: usize,
        len: usize,
        dim: usize,
    },
    #[error("vectors are not an orthogonal representation: {0} edge violations")]
    NotARepresentation(usize),
    #[error("unknown built-in system `{0}`")]
    UnknownName(String),
    #[error("no Hadamard construction for dimension {0} here (need d-1 prime with d ≡ 0 mod 4)")]
    UnsupportedHadamard(usize),
    #[error("vertex {vertex} out of range for {n} vectors")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vector {index} exceeds the coordinate bound {bound} (or the 4096-dim cap)")]
    VectorTooLarge { index: usize, bound: i64 },
}

/// Coordinate magnitude cap. Together with the 4096-dimension cap it
/// keeps every inner-product component within i64, so orthogonality
/// tests cannot overflow.
pub const COORDINATE_BOUND: i64 = 1 << 20;

/// Gaussian integer `re + im·i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct GaussianInt {
    pub re: i64,
    pub im: i64,
}

impl GaussianInt {
    pub const ZERO: GaussianInt = GaussianInt { re: 0, im: 0 };

    pub fn new(re: i64, im: i64) -> Self {
        GaussianInt { re, im }
    }

    pub fn real(re: i64) -> Self {
        GaussianInt { re, im: 0 }
    }

    pub fn conj(self) -> Self {
        GaussianInt {
            re: self.re,
            im: -self.im,
        }
    }

    pub fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }

    /// `|z|^2`, an ordinary integer.
    pub fn norm_sqr(self) -> i64 {
        self.re * self.re + self.im * self.im
    }
}

impl std::ops::Add for GaussianInt {
    type Output = GaussianInt;
    fn add(self, o: GaussianInt) -> GaussianInt {
        GaussianInt {
            re: self.re + o.re,
            im: self.im + o.im,
        }
    }
}

impl std::ops::Mul for GaussianInt {
    type Output = GaussianInt;
    fn mul(self, o: GaussianInt) -> GaussianInt {
        GaussianInt {
            re: self.re * o.re - self.im * o.im,
            im: self.re * o.im + self.im * o.re,
        }
    }
}

impl std::fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (self.re, self.im) {
            (re, 0) => write!(f, "{re}"),
            (0, im) => write!(f, "{im}i"),
            (re, im) if im < 0 => write!(f, "{re}{im}i"),
            (re, im) => write!(f, "{re}+{im}i"),
        }
    }
}

/// A sequence of nonzero vectors with Gaussian-integer coordinates.
///
/// Vectors are stored unnormalized; orthogonality and outcome
/// probabilities are norm-adjusted exactly where needed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorSystem {
    dim: usize,
    vectors: Vec<Vec<GaussianInt>>,
    labels: Option<Vec<String>>,
}

impl VectorSystem {
    pub fn new(dim: usize, vectors: Vec<Vec<GaussianInt>>) -> Result<Self, QuantumError> {
        for (i, v) in vectors.iter().enumerate() {
            if v.len() != dim {
                return Err(QuantumError::DimMismatch {
                    index: i,
                    len: v.len(),
                    dim,
                });
            }
            if v.iter().all(|z| z.is_zero()) {
                return Err(QuantumError::ZeroVector(i));
            }
            let in_bounds = dim <= 4096
                && v.iter()
                    .all(|z| z.re.abs() <= COORDINATE_BOUND && z.im.abs() <= COORDINATE_BOUND);
            if !in_bounds {
                return Err(QuantumError::VectorTooLarge {
                    index: i,
                    bound: COORDINATE_BOUND,
                });
            }
        }
        Ok(VectorSystem {
            dim,
            vectors,
            labels: None,
        })
    }

    /// Convenience constructor from real integer coordinates.
    pub fn from_real(rows: &[&[i64]]) -> Result<Self, QuantumError> {
        let dim = rows.first().map_or(0, |r| r.len());
        VectorSystem::new(
            dim,
            rows.iter()
                .map(|r| r.iter().map(|&x| GaussianInt::real(x)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vector(&self, i: usize) -> &[GaussianInt] {
        &self.vectors[i]
    }

    /// `⟨v_i | v_j⟩ = Σ conj(v_i)_k (v_j)_k`.
    pub fn inner(&self, i: usize, j: usize) -> GaussianInt {
        self.vectors[i]
            .iter()
            .zip(&self.vectors[j])
            .fold(GaussianInt::ZERO, |acc, (a, b)| acc + a.conj() * *b)
    }

    pub fn norm_sqr(&self, i: usize) -> i64 {
        self.vectors[i].iter().map(|z| z.norm_sqr()).sum()
    }

    /// Orthogonality graph: vertices are vectors, edges exact zero inner
    /// products. Loopless.
    pub fn orthogonality_graph(&self) -> Graph {
        let n = self.vectors.len();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.inner(i, j).is_zero() {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(n, &edges, false).expect("orthogonality edges are valid")
    }

    /// Kronecker tensor product, vector by vector: entry order is
    /// `self`-major, matching the co-normal product's vertex indexing.
    /// Fails if the entry products leave the coordinate bound.
    pub fn tensor(&self, other: &VectorSystem) -> Result<VectorSystem, QuantumError> {
        let dim = self.dim * other.dim;
        let mut vectors = Vec::with_capacity(self.len() * other.len());
        for a in &self.vectors {
            for b in &other.vectors {
                let mut v = Vec::with_capacity(dim);
                for za in a {
                    for zb in b {
                        v.push(*za * *zb);
                    }
                }
                vectors.push(v);
            }
        }
        VectorSystem::new(dim, vectors)
    }
}

// ---- representation checks -------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentationCheck {
    pub ok: bool,
    /// Edges whose endpoints are not orthogonal, with the offending
    /// inner product.
    pub violations: Vec<(usize, usize, GaussianInt)>,
}

/// Checks `⟨v_u | v_v⟩ = 0` exactly for every edge of the loop-deleted
/// graph.
pub fn is_orthogonal_representation(
    vs: &VectorSystem,
    g: &Graph,
) -> Result<RepresentationCheck, QuantumError> {
    if vs.len() != g.vertex_count() {
        return Err(QuantumError::SizeMismatch {
            vectors: vs.len(),
            vertices: g.vertex_count(),
        });
    }
    let violations: Vec<(usize, usize, GaussianInt)> = g
        .edges()
        .into_iter()
        .filter_map(|(u, v)| {
            let ip = vs.inner(u, v);
            (!ip.is_zero()).then_some((u, v, ip))
        })
        .collect();
    Ok(RepresentationCheck {
        ok: violations.is_empty(),
        violations,
    })
}

/// Certificate bracketing the orthogonal rank ξ of a graph: a `d`-clique
/// forces `d` mutually orthogonal vectors (lower bound), a concrete
/// representation gives the ambient dimension (upper bound). Exact ξ is
/// not searched for; every in-scope graph certifies tightly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XiCertificate {
    pub lower: usize,
    pub upper: usize,
    pub tight: bool,
    pub clique: Vec<usize>,
}

pub fn certify_orthogonal_rank(
    g: &Graph,
    vs: &VectorSystem,
) -> Result<XiCertificate, QuantumError> {
    let check = is_orthogonal_representation(vs, g)?;
    if !check.ok {
        return Err(QuantumError::NotARepresentation(check.violations.len()));
    }
    let clique = combinatorics::clique_number(g);
    Ok(XiCertificate {
        lower: clique.size,
        upper: vs.dim(),
        tight: clique.size == vs.dim(),
        clique: clique.witness,
    })
}

/// Probability of the YES outcome of the two-outcome projective
/// measurement `{|v_y⟩⟨v_y|, 1 − |v_y⟩⟨v_y|}` on the encoded state
/// `|v_x⟩`: `|⟨v_y|v_x⟩|² / (‖v_x‖²‖v_y‖²)`, exactly.
pub fn quantum_protocol_outcome(vs: &VectorSystem, x: usize, y: usize) -> BigRational {
    use num_bigint::BigInt;
    let ip = vs.inner(y, x);
    // squares of in-bound inner products can exceed i64
    let numer =
        BigInt::from(ip.re) * BigInt::from(ip.re) + BigInt::from(ip.im) * BigInt::from(ip.im);
    let denom = BigInt::from(vs.norm_sqr(x)) * BigInt::from(vs.norm_sqr(y));
    BigRational::new(numer, denom)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantumCiResult {
    /// Number of conclusively identified inputs; always `|X|`.
    pub identified: usize,
    /// `(input, output, YES probability)` for every transition with
    /// positive channel probability.
    pub outcomes: Vec<(String, String, BigRational)>,
}

/// Quantum-assisted conclusive identification: with an orthogonal
/// representation of the support graph encoded over the noiseless
/// quantum channel, the YES outcome at `y = x` is certain and at
/// `y ≠ x` impossible, so every input is identified.
pub fn quantum_assisted_ci(
    channel: &Channel,
    vs: &VectorSystem,
) -> Result<QuantumCiResult, QuantumError> {
    let support = channel.support_graph()?;
    let check = is_orthogonal_representation(vs, &support)?;
    if !check.ok {
        return Err(QuantumError::NotARepresentation(check.violations.len()));
    }
    let mut outcomes = Vec::new();
    for x in 0..channel.input_count() {
        for y in channel.output_range_idx(x) {
            let p = quantum_protocol_outcome(vs, x, y);
            if y == x {
                assert!(p == BigRational::from_integer(1.into()));
            } else {
                // a positive transition is a support edge, hence orthogonal
                assert!(p == BigRational::from_integer(0.into()));
            }
            outcomes.push((channel.inputs()[x].clone(), channel.outputs()[y].clone(), p));
        }
    }
    Ok(QuantumCiResult {
        identified: channel.input_count(),
        outcomes,
    })
}

// ---- built-in systems ---------------------------------------------------------

/// A named vector system with its companion orthogonality graph and,
/// when defined, its measurement contexts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuiltinSystem {
    pub name: String,
    pub system: VectorSystem,
    pub graph: Graph,
    pub contexts: Option<Vec<Vec<usize>>>,
}

/// The 18 four-dimensional vectors whose orthogonality graph drives the
/// combinatorial contextuality construction.
pub const KS18_VECTORS: [[i64; 4]; 18] = [
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [0, 0, 1, 1],
    [0, 0, 1, -1],
    [1, -1, 0, 0],
    [1, 1, -1, -1],
    [1, 1, 1, 1],
    [1, -1, 1, -1],
    [1, 0, -1, 0],
    [0, 1, 0, -1],
    [1, 0, 1, 0],
    [1, 1, -1, 1],
    [-1, 1, 1, 1],
    [1, 1, 1, -1],
    [1, 0, 0, 1],
    [0, 1, -1, 0],
    [0, 1, 1, 0],
    [0, 0, 0, 1],
];

/// The nine orthonormal bases of the 18-vector system (0-based indices).
pub const KS18_CONTEXTS: [[usize; 4]; 9] = [
    [0, 1, 2, 3],
    [3, 4, 5, 6],
    [6, 7, 8, 9],
    [9, 10, 11, 12],
    [12, 13, 14, 15],
    [15, 16, 17, 0],
    [1, 8, 10, 17],
    [2, 4, 11, 13],
    [5, 7, 14, 16],
];

/// The 13 three-dimensional rays of the algebraic state-independent
/// construction.
pub const YO13_VECTORS: [[i64; 3]; 13] = [
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 1],
    [0, 1, 1],
    [0, 1, -1],
    [1, 0, 1],
    [1, 0, -1],
    [1, 1, 0],
    [1, -1, 0],
    [1, 1, 1],
    [-1, 1, 1],
    [1, -1, 1],
    [1, 1, -1],
];

/// The four orthogonal triples among the 13 rays (0-based indices);
/// rays 9..=12 appear in no context.
pub const YO13_CONTEXTS: [[usize; 3]; 4] = [[0, 1, 2], [0, 3, 4], [1, 5, 6], [2, 7, 8]];

fn ks18_system() -> VectorSystem {
    let rows: Vec<&[i64]> = KS18_VECTORS.iter().map(|r| r.as_slice()).collect();
    VectorSystem::from_real(&rows).expect("ks18 vectors are nonzero")
}

fn yo13_system() -> VectorSystem {
    let rows: Vec<&[i64]> = YO13_VECTORS.iter().map(|r| r.as_slice()).collect();
    VectorSystem::from_real(&rows).expect("yo13 vectors are nonzero")
}

/// Embeds the 13 rays into dimension 4 (fourth coordinate zero) and
/// appends `v14 = (0,0,0,1)`, orthogonal to all of them: the hub of the
/// state-dependent construction.
fn yo14_system() -> VectorSystem {
    let mut vectors: Vec<Vec<GaussianInt>> = YO13_VECTORS
        .iter()
        .map(|r| {
            r.iter()
                .map(|&x| GaussianInt::real(x))
                .chain([GaussianInt::ZERO])
                .collect()
        })
        .collect();
    vectors.push(vec![
        GaussianInt::ZERO,
        GaussianInt::ZERO,
        GaussianInt::ZERO,
        GaussianInt::real(1),
    ]);
    VectorSystem::new(4, vectors).expect("yo14 vectors are nonzero")
}

/// `d` mutually orthogonal ±1 vectors from the Paley-I Hadamard matrix of
/// order `d = q + 1`, columns normalized so the first row is all ones.
/// Supports every `d ≡ 0 (mod 4)` with `d − 1` prime, which covers the
/// Newman guard range.
#[allow(clippy::needless_range_loop)]
pub fn hadamard_clique(d: usize) -> Result<VectorSystem, QuantumError> {
    if d < 4 || !d.is_multiple_of(4) || !is_prime(d - 1) {
        return Err(QuantumError::UnsupportedHadamard(d));
    }
    let q = (d - 1) as i64;
    let legendre = |a: i64| -> i64 {
        let a = a.rem_euclid(q);
        if a == 0 {
            return 0;
        }
        let mut r: i64 = 1;
        let mut base = a;
        let mut e = (q - 1) / 2;
        while e > 0 {
            if e & 1 == 1 {
                r = r * base % q;
            }
            base = base * base % q;
            e >>= 1;
        }
        if r == 1 {
            1
        } else {
            -1
        }
    };
    let n = d;
    let mut h = vec![vec![0i64; n]; n];
    for (i, row) in h.iter_mut().enumerate() {
        row[i] = 1;
    }
    for j in 1..n {
        h[0][j] = 1;
        h[j][0] = -1;
    }
    for i in 1..n {
        for j in 1..n {
            if i != j {
                h[i][j] = legendre(j as i64 - i as i64);
            }
        }
    }
    // normalize columns so row 0 is all +1; this keeps rows orthogonal
    // and gives every row an even number of -1 entries when d ≡ 0 mod 4
    let signs: Vec<i64> = h[0].clone();
    for row in &mut h {
        for (v, s) in row.iter_mut().zip(&signs) {
            *v *= s;
        }
    }
    let rows: Vec<&[i64]> = h.iter().map(|r| r.as_slice()).collect();
    let vs = VectorSystem::from_real(&rows)?;
    for i in 0..n {
        for j in 0..n {
            let expected = if i == j { n as i64 } else { 0 };
            assert_eq!(vs.inner(i, j), GaussianInt::real(expected));
        }
    }
    Ok(vs)
}

fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= n {
        if n.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

/// Built-in systems: `ks18`, `yo13`, `yo14`, and `hadamard:<d>`.
pub fn builtin_system(name: &str) -> Result<BuiltinSystem, QuantumError> {
    let (system, contexts) = match name {
        "ks18" => (
            ks18_system(),
            Some(KS18_CONTEXTS.iter().map(|c| c.to_vec()).collect()),
        ),
        "yo13" => (
            yo13_system(),
            Some(YO13_CONTEXTS.iter().map(|c| c.to_vec()).collect()),
        ),
        "yo14" => (yo14_system(), None),
        _ => match name.strip_prefix("hadamard:") {
            Some(arg) => {
                let d: usize = arg
                    .parse()
                    .map_err(|_| QuantumError::UnknownName(name.to_string()))?;
                (hadamard_clique(d)?, None)
            }
            None => return Err(QuantumError::UnknownName(name.to_string())),
        },
    };
    let graph = system.orthogonality_graph();
    Ok(BuiltinSystem {
        name: name.to_string(),
        system,
        graph,
        contexts,
    })
}

// ---- JSON interface -------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct VectorSystemJson {
    dim: usize,
    vectors: Vec<Vec<(i64, i64)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    contexts: Option<Vec<Vec<usize>>>,
}

/// Parsed form of the vector-system JSON: the system plus optional
/// contexts for KS checks.
pub struct VectorSystemFile {
    pub system: VectorSystem,
    pub contexts: Option<Vec<Vec<usize>>>,
}

impl VectorSystemFile {
    pub fn from_json(value: &serde_json::Value) -> Result<Self, QuantumError> {
        let raw: VectorSystemJson = serde_json::from_value(value.clone())
            .map_err(|e| QuantumError::UnknownName(e.to_string()))?;
        let vectors = raw
            .vectors
            .iter()
            .map(|v| v.iter().map(|&(re, im)| GaussianInt::new(re, im)).collect())
            .collect();
        let system = VectorSystem::new(raw.dim, vectors)?;
        for ctx in raw.contexts.iter().flatten() {
            for &i in ctx {
                if i >= system.len() {
                    return Err(QuantumError::VertexOutOfRange {
                        vertex: i,
                        n: system.len(),
                    });
                }
            }
        }
        Ok(VectorSystemFile {
            system,
            contexts: raw.contexts,
        })
    }

    pub fn to_json(system: &VectorSystem, contexts: Option<&[Vec<usize>]>) -> serde_json::Value {
        serde_json::to_value(VectorSystemJson {
            dim: system.dim,
            vectors: system
                .vectors
                .iter()
                .map(|v| v.iter().map(|z| (z.re, z.im)).collect())
                .collect(),
            contexts: contexts.map(|c| c.to_vec()),
        })
        .expect("vector system serializes")
    }
}
