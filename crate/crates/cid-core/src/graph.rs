//! Exact undirected graphs: support graphs, confusability graphs, and the
//! named families used throughout the toolkit.
//!
//! Self-loops are never stored as edges. Support graphs carry them
//! uniformly, so they are a graph-level flag: coloring and independence
//! always act on the loop-deleted simple graph, while channel extraction
//! and diameter reasoning consult the flag.

use crate::bitset::BitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}; self-loops are a graph-level flag, not edges")]
    ExplicitSelfLoop(usize),
    #[error("duplicate or reversed edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("invalid parameter for {family}: {reason}")]
    InvalidParameter {
        family: &'static str,
        reason: String,
    },
}

/// Diameter of a graph, with a marker for disconnected graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Diameter {
    Finite(usize),
    Disconnected,
}

impl Diameter {
    pub fn is_at_most(&self, k: usize) -> bool {
        matches!(self, Diameter::Finite(d) if *d <= k)
    }
}

impl std::fmt::Display for Diameter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Disconnected => write!(f, "inf"),
        }
    }
}

/// An undirected graph with label-sensitive equality.
///
/// Immutable after construction; all operations are pure.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<BitSet>,
    self_loops: bool,
}

impl Graph {
    /// Builds a graph from an edge list. Edges must be distinct unordered
    /// pairs of in-range vertices; `{u, v}` and `{v, u}` count as the same
    /// pair and are rejected as duplicates.
    pub fn new(n: usize, edges: &[(usize, usize)], self_loops: bool) -> Result<Self, GraphError> {
        let mut adj = vec![BitSet::new(n); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::ExplicitSelfLoop(u));
            }
            if adj[u].contains(v) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, adj, self_loops })
    }

    pub fn edgeless(n: usize, self_loops: bool) -> Self {
        Graph {
            n,
            adj: vec![BitSet::new(n); n],
            self_loops,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.count()).sum::<usize>() / 2
    }

    /// Whether every vertex carries an implicit self-loop.
    pub fn has_all_self_loops(&self) -> bool {
        self.self_loops
    }

    /// Copy of the graph with the self-loop flag replaced.
    pub fn with_self_loops(&self, flag: bool) -> Graph {
        Graph {
            n: self.n,
            adj: self.adj.clone(),
            self_loops: flag,
        }
    }

    /// Adjacency between distinct vertices; `adjacent(v, v)` is false
    /// regardless of the self-loop flag.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter()
    }

    pub(crate) fn neighbor_set(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    /// Closed neighborhood `N[v] = N(v) ∪ {v}` as a bit set.
    pub(crate) fn closed_neighbor_set(&self, v: usize) -> BitSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    /// Edges in lexicographic order with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Loop-deleted complement; the self-loop flag is preserved.
    pub fn complement(&self) -> Graph {
        let mut adj = Vec::with_capacity(self.n);
        for v in 0..self.n {
            let mut row = BitSet::full(self.n);
            row.remove(v);
            row.difference_with(&self.adj[v]);
            adj.push(row);
        }
        Graph {
            n: self.n,
            adj,
            self_loops: self.self_loops,
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = BitSet::new(self.n);
        seen.insert(0);
        let mut frontier = seen.clone();
        loop {
            let mut next = BitSet::new(self.n);
            for v in frontier.iter() {
                next.union_with(&self.adj[v]);
            }
            next.difference_with(&seen);
            if next.is_empty() {
                break;
            }
            seen.union_with(&next);
            frontier = next;
        }
        seen.count() == self.n
    }

    /// BFS-exact diameter of the loop-deleted graph.
    pub fn diameter(&self) -> Diameter {
        if self.n == 0 {
            return Diameter::Finite(0);
        }
        let mut dmax = 0;
        for s in 0..self.n {
            let mut seen = BitSet::new(self.n);
            seen.insert(s);
            let mut frontier = seen.clone();
            let mut dist = 0;
            loop {
                let mut next = BitSet::new(self.n);
                for v in frontier.iter() {
                    next.union_with(&self.adj[v]);
                }
                next.difference_with(&seen);
                if next.is_empty() {
                    break;
                }
                dist += 1;
                seen.union_with(&next);
                frontier = next;
            }
            if seen.count() < self.n {
                return Diameter::Disconnected;
            }
            dmax = dmax.max(dist);
        }
        Diameter::Finite(dmax)
    }

    /// Strong product: distinct `(a, b) ~ (a', b')` iff
    /// `(a = a' or a ~ a') and (b = b' or b ~ b')`.
    ///
    /// Vertex `(a, b)` maps to index `a * h.vertex_count() + b`. The
    /// self-loop flag of the product is the conjunction of the factors'.
    pub fn strong_product(&self, h: &Graph) -> Graph {
        self.product_with(h, |ga, gb| {
            (ga == ProductRel::Equal || ga == ProductRel::Adjacent)
                && (gb == ProductRel::Equal || gb == ProductRel::Adjacent)
        })
    }

    /// Co-normal (disjunctive) product: distinct `(a, b) ~ (a', b')` iff
    /// `a ~ a' or b ~ b'`. Same index convention as [`strong_product`].
    ///
    /// [`strong_product`]: Graph::strong_product
    pub fn conormal_product(&self, h: &Graph) -> Graph {
        self.product_with(h, |ga, gb| {
            ga == ProductRel::Adjacent || gb == ProductRel::Adjacent
        })
    }

    /// `m`-fold co-normal power, folded left to right; `m = 1` returns a
    /// copy of the graph.
    pub fn conormal_power(&self, m: usize) -> Result<Graph, GraphError> {
        if m == 0 {
            return Err(GraphError::InvalidParameter {
                family: "conormal_power",
                reason: "exponent must be at least 1".into(),
            });
        }
        let mut acc = self.clone();
        for _ in 1..m {
            acc = acc.conormal_product(self);
        }
        Ok(acc)
    }

    fn product_with(&self, h: &Graph, rule: impl Fn(ProductRel, ProductRel) -> bool) -> Graph {
        let n = self.n * h.n;
        let rel = |g: &Graph, x: usize, y: usize| {
            if x == y {
                ProductRel::Equal
            } else if g.adjacent(x, y) {
                ProductRel::Adjacent
            } else {
                ProductRel::None
            }
        };
        let mut adj = vec![BitSet::new(n); n];
        for a in 0..self.n {
            for b in 0..h.n {
                let i = a * h.n + b;
                for a2 in 0..self.n {
                    for b2 in 0..h.n {
                        let j = a2 * h.n + b2;
                        if i < j && rule(rel(self, a, a2), rel(h, b, b2)) {
                            adj[i].insert(j);
                            adj[j].insert(i);
                        }
                    }
                }
            }
        }
        Graph {
            n,
            adj,
            self_loops: self.self_loops && h.self_loops,
        }
    }

    // ---- named families ------------------------------------------------

    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        if n < 1 {
            return Err(GraphError::InvalidParameter {
                family: "complete",
                reason: "need n >= 1".into(),
            });
        }
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::new(n, &edges, false)
    }

    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        if n < 3 {
            return Err(GraphError::InvalidParameter {
                family: "cycle",
                reason: "need n >= 3".into(),
            });
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges, false)
    }

    /// Wheel with `n` rim vertices `0..n` (a cycle) and hub vertex `n`.
    pub fn wheel(n: usize) -> Result<Graph, GraphError> {
        if n < 3 {
            return Err(GraphError::InvalidParameter {
                family: "wheel",
                reason: "need n >= 3 rim vertices".into(),
            });
        }
        let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        edges.extend((0..n).map(|i| (i, n)));
        Graph::new(n + 1, &edges, false)
    }

    /// Friendship graph: `n` triangles sharing hub vertex `0`; triangle
    /// `i` uses vertices `2i+1` and `2i+2`.
    pub fn friendship(n: usize) -> Result<Graph, GraphError> {
        if n < 1 {
            return Err(GraphError::InvalidParameter {
                family: "friendship",
                reason: "need n >= 1 triangles".into(),
            });
        }
        let mut edges = Vec::with_capacity(3 * n);
        for i in 0..n {
            let (a, b) = (2 * i + 1, 2 * i + 2);
            edges.push((0, a));
            edges.push((0, b));
            edges.push((a, b));
        }
        Graph::new(2 * n + 1, &edges, false)
    }

    /// Star with hub vertex `0` and `n` leaves.
    pub fn star(n: usize) -> Result<Graph, GraphError> {
        if n < 1 {
            return Err(GraphError::InvalidParameter {
                family: "star",
                reason: "need n >= 1 leaves".into(),
            });
        }
        let edges: Vec<_> = (1..=n).map(|i| (0, i)).collect();
        Graph::new(n + 1, &edges, false)
    }

    /// Turán graph `T(n, r)`: complete `r`-partite with part sizes as
    /// equal as possible. Parts occupy consecutive index ranges, the
    /// larger parts first.
    pub fn turan(n: usize, r: usize) -> Result<Graph, GraphError> {
        if n < 1 || r < 1 {
            return Err(GraphError::InvalidParameter {
                family: "turan",
                reason: "need n >= 1 and r >= 1".into(),
            });
        }
        let mut part = Vec::with_capacity(n);
        let (q, rem) = (n / r, n % r);
        for p in 0..r {
            let size = if p < rem { q + 1 } else { q };
            part.extend(std::iter::repeat_n(p, size));
        }
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if part[u] != part[v] {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, &edges, false)
    }

    /// The six 5-vertex support graphs obtained from the pentagon by
    /// adding chords; variant 1 is the plain pentagon. Returned with the
    /// self-loop flag set, since these are support graphs.
    pub fn pentagon_variant(i: usize) -> Result<Graph, GraphError> {
        let chords: &[(usize, usize)] = match i {
            1 => &[],
            2 => &[(0, 2)],
            3 => &[(0, 2), (0, 3)],
            4 => &[(0, 2), (0, 3), (1, 4)],
            5 => &[(0, 2), (0, 3), (1, 3)],
            6 => &[(0, 2), (0, 3), (1, 3), (1, 4)],
            _ => {
                return Err(GraphError::InvalidParameter {
                    family: "pentagon_variant",
                    reason: format!("variant {i} not in 1..=6"),
                })
            }
        };
        let mut edges: Vec<_> = (0..5).map(|v| (v, (v + 1) % 5)).collect();
        edges.extend_from_slice(chords);
        Graph::new(5, &edges, true)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ProductRel {
    Equal,
    Adjacent,
    None,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .field("self_loops", &self.self_loops)
            .finish()
    }
}

/// Named graph families, as accepted by the CLI (`cycle:5`, `turan:6,2`,
/// `pentagon:3`, ...).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Cycle(usize),
    Wheel(usize),
    Friendship(usize),
    Star(usize),
    Turan(usize, usize),
    Complete(usize),
    PentagonVariant(usize),
}

impl Family {
    pub fn build(self) -> Result<Graph, GraphError> {
        match self {
            Family::Cycle(n) => Graph::cycle(n),
            Family::Wheel(n) => Graph::wheel(n),
            Family::Friendship(n) => Graph::friendship(n),
            Family::Star(n) => Graph::star(n),
            Family::Turan(n, r) => Graph::turan(n, r),
            Family::Complete(n) => Graph::complete(n),
            Family::PentagonVariant(i) => Graph::pentagon_variant(i),
        }
    }
}

impl std::str::FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |reason: String| GraphError::InvalidParameter {
            family: "family spec",
            reason,
        };
        let (kind, args) = s
            .split_once(':')
            .ok_or_else(|| bad(format!("`{s}` has no `:<params>` part")))?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| bad(format!("`{t}` is not a natural number")))
            })
            .collect::<Result<_, _>>()?;
        let one = |f: fn(usize) -> Family| {
            if nums.len() == 1 {
                Ok(f(nums[0]))
            } else {
                Err(bad(format!("{kind} takes one parameter")))
            }
        };
        match kind {
            "cycle" => one(Family::Cycle),
            "wheel" => one(Family::Wheel),
            "friendship" => one(Family::Friendship),
            "star" => one(Family::Star),
            "complete" => one(Family::Complete),
            "pentagon" | "pentagon_variant" => one(Family::PentagonVariant),
            "turan" => {
                if nums.len() == 2 {
                    Ok(Family::Turan(nums[0], nums[1]))
                } else {
                    Err(bad("turan takes two parameters n,r".into()))
                }
            }
            _ => Err(bad(format!("unknown family `{kind}`"))),
        }
    }
}

// ---- JSON interface ----------------------------------------------------

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
    self_loops: bool,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        GraphJson {
            n: self.n,
            edges: self.edges(),
            self_loops: self.self_loops,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = GraphJson::deserialize(deserializer)?;
        Graph::new(raw.n, &raw.edges, raw.self_loops).map_err(serde::de::Error::custom)
    }
}
