//! Exact graph invariants: independence number, clique number, chromatic
//! number, maximal-independent-set enumeration, and the fractional
//! chromatic number via an exact-rational covering LP.
//!
//! All invariants act on the loop-deleted simple graph; a proper coloring
//! is not defined in the presence of self-loops, so the flag is ignored
//! here. Searches use a fixed deterministic vertex order (descending
//! degree, index tiebreak) so witnesses are reproducible across runs.

use crate::bitset::BitSet;
use crate::graph::Graph;
use crate::lp;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Cap on exact enumeration of maximal independent sets (and hence on the
/// fractional-coloring LP). 25 admits the 25-vertex co-normal square of
/// the pentagon, the largest instance the exact LP is asked to certify.
pub const ENUMERATION_GUARD: usize = 25;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombinatoricsError {
    #[error("graph has {vertices} vertices, above the exact-enumeration guard of {guard}")]
    TooLarge { vertices: usize, guard: usize },
    #[error("coloring assigns {assigned} vertices but the graph has {expected}")]
    ColoringSizeMismatch { assigned: usize, expected: usize },
}

/// A map from vertices to color indices; doubles as the sender's
/// side-channel encoding in the assisted identification task.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    assignment: Vec<usize>,
    color_count: usize,
}

impl Coloring {
    /// Wraps an explicit assignment; the color count is one past the
    /// largest index used (zero for an empty assignment).
    pub fn new(assignment: Vec<usize>) -> Self {
        let color_count = assignment.iter().max().map_or(0, |m| m + 1);
        Coloring {
            assignment,
            color_count,
        }
    }

    pub fn color(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn color_count(&self) -> usize {
        self.color_count
    }

    pub fn vertex_count(&self) -> usize {
        self.assignment.len()
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    /// Color classes in index order; classes may be empty if the
    /// assignment skips an index.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.color_count];
        for (v, &c) in self.assignment.iter().enumerate() {
            out[c].push(v);
        }
        out
    }

    /// Proper on the loop-deleted graph: no edge joins same-colored
    /// vertices.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.assignment.len() == g.vertex_count()
            && g.edges()
                .iter()
                .all(|&(u, v)| self.assignment[u] != self.assignment[v])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessedSize {
    pub size: usize,
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticResult {
    pub number: usize,
    pub coloring: Coloring,
}

/// Exact maximum independent set of the loop-deleted graph.
pub fn independence_number(g: &Graph) -> WitnessedSize {
    let result = max_clique_search(&complement_rows(g));
    debug_assert!(result
        .witness
        .iter()
        .enumerate()
        .all(|(i, &u)| result.witness[..i].iter().all(|&v| !g.adjacent(u, v))));
    result
}

/// Exact maximum clique of the loop-deleted graph.
pub fn clique_number(g: &Graph) -> WitnessedSize {
    let rows: Vec<BitSet> = (0..g.vertex_count())
        .map(|v| g.neighbor_set(v).clone())
        .collect();
    let result = max_clique_search(&rows);
    debug_assert!(result
        .witness
        .iter()
        .enumerate()
        .all(|(i, &u)| result.witness[..i].iter().all(|&v| g.adjacent(u, v))));
    result
}

fn complement_rows(g: &Graph) -> Vec<BitSet> {
    let n = g.vertex_count();
    (0..n)
        .map(|v| {
            let mut row = BitSet::full(n);
            row.remove(v);
            row.difference_with(g.neighbor_set(v));
            row
        })
        .collect()
}

/// Branch-and-bound maximum clique with a greedy-coloring upper bound.
/// Vertices are relabeled by descending degree (index tiebreak) before
/// the search, and the first optimum found under that order is the
/// witness.
fn max_clique_search(adj: &[BitSet]) -> WitnessedSize {
    let n = adj.len();
    if n == 0 {
        return WitnessedSize {
            size: 0,
            witness: vec![],
        };
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(adj[v].count()), v));
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut radj = vec![BitSet::new(n); n];
    for i in 0..n {
        for u in adj[order[i]].iter() {
            radj[i].insert(pos[u]);
        }
    }

    fn expand(adj: &[BitSet], mut p: BitSet, r: &mut Vec<usize>, best: &mut (usize, Vec<usize>)) {
        if p.is_empty() {
            if r.len() > best.0 {
                *best = (r.len(), r.clone());
            }
            return;
        }
        // greedy color classes of P give per-candidate upper bounds
        let mut seq = Vec::new();
        let mut bound = Vec::new();
        let mut uncolored = p.clone();
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut avail = uncolored.clone();
            while let Some(v) = avail.first() {
                avail.remove(v);
                avail.difference_with(&adj[v]);
                uncolored.remove(v);
                seq.push(v);
                bound.push(color);
            }
        }
        for i in (0..seq.len()).rev() {
            if r.len() + bound[i] <= best.0 {
                return;
            }
            let v = seq[i];
            let mut p2 = p.clone();
            p2.intersect_with(&adj[v]);
            r.push(v);
            expand(adj, p2, r, best);
            r.pop();
            p.remove(v);
        }
    }

    let mut best = (0, Vec::new());
    expand(&radj, BitSet::full(n), &mut Vec::new(), &mut best);
    let mut witness: Vec<usize> = best.1.iter().map(|&i| order[i]).collect();
    witness.sort_unstable();
    WitnessedSize {
        size: best.0,
        witness,
    }
}

/// Exact chromatic number of the loop-deleted graph with a verified
/// witness coloring.
///
/// The search runs iterative deepening between the clique lower bound and
/// a DSATUR greedy upper bound, seeding each depth with the clique
/// precolored.
pub fn chromatic_number(g: &Graph) -> ChromaticResult {
    let n = g.vertex_count();
    if n == 0 {
        return ChromaticResult {
            number: 0,
            coloring: Coloring::new(vec![]),
        };
    }
    let clique = clique_number(g);
    let greedy = dsatur_greedy(g);
    let (lb, ub) = (clique.size, greedy.color_count());
    let result = if lb < ub {
        (lb..ub)
            .find_map(|k| {
                k_colorable(g, k, &clique.witness).map(|coloring| ChromaticResult {
                    number: k,
                    coloring,
                })
            })
            .unwrap_or(ChromaticResult {
                number: ub,
                coloring: greedy,
            })
    } else {
        ChromaticResult {
            number: ub,
            coloring: greedy,
        }
    };
    assert!(result.coloring.is_proper(g));
    assert_eq!(result.coloring.color_count(), result.number);
    result
}

fn dsatur_greedy(g: &Graph) -> Coloring {
    let n = g.vertex_count();
    let mut color: Vec<Option<usize>> = vec![None; n];
    for _ in 0..n {
        // max saturation, then max degree, then smallest index
        let v = (0..n)
            .filter(|&v| color[v].is_none())
            .max_by_key(|&v| {
                let sat = saturation(g, &color, v);
                (sat, g.degree(v), std::cmp::Reverse(v))
            })
            .unwrap();
        let used: Vec<usize> = g.neighbors(v).filter_map(|u| color[u]).collect();
        let c = (0..).find(|c| !used.contains(c)).unwrap();
        color[v] = Some(c);
    }
    Coloring::new(color.into_iter().map(Option::unwrap).collect())
}

fn saturation(g: &Graph, color: &[Option<usize>], v: usize) -> usize {
    let mut seen: Vec<usize> = g.neighbors(v).filter_map(|u| color[u]).collect();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

/// Exact k-colorability with the given clique precolored; returns a
/// proper coloring on success.
fn k_colorable(g: &Graph, k: usize, seed_clique: &[usize]) -> Option<Coloring> {
    let n = g.vertex_count();
    if seed_clique.len() > k {
        return None;
    }
    let mut color: Vec<Option<usize>> = vec![None; n];
    for (c, &v) in seed_clique.iter().enumerate() {
        color[v] = Some(c);
    }
    let max_used = seed_clique.len().saturating_sub(1);

    fn recurse(g: &Graph, k: usize, color: &mut Vec<Option<usize>>, max_used: usize) -> bool {
        let n = g.vertex_count();
        let Some(v) = (0..n)
            .filter(|&v| color[v].is_none())
            .max_by_key(|&v| (saturation(g, color, v), g.degree(v), std::cmp::Reverse(v)))
        else {
            return true;
        };
        let forbidden: Vec<usize> = g.neighbors(v).filter_map(|u| color[u]).collect();
        // new colors only ever introduced in order, which breaks the
        // color-permutation symmetry
        let cap = k.min(max_used + 2);
        for c in 0..cap {
            if !forbidden.contains(&c) {
                color[v] = Some(c);
                if recurse(g, k, color, max_used.max(c)) {
                    return true;
                }
                color[v] = None;
            }
        }
        false
    }

    if recurse(g, k, &mut color, max_used) {
        Some(Coloring::new(
            color.into_iter().map(Option::unwrap).collect(),
        ))
    } else {
        None
    }
}

/// All maximal independent sets of the loop-deleted graph, each sorted,
/// in lexicographic order. Bron-Kerbosch with pivoting on the complement.
pub fn maximal_independent_sets(g: &Graph) -> Result<Vec<Vec<usize>>, CombinatoricsError> {
    let n = g.vertex_count();
    if n > ENUMERATION_GUARD {
        return Err(CombinatoricsError::TooLarge {
            vertices: n,
            guard: ENUMERATION_GUARD,
        });
    }
    if n == 0 {
        return Ok(vec![]);
    }
    let comp = complement_rows(g);
    let mut out: Vec<Vec<usize>> = Vec::new();

    fn bk(
        adj: &[BitSet],
        r: &mut Vec<usize>,
        mut p: BitSet,
        mut x: BitSet,
        out: &mut Vec<Vec<usize>>,
    ) {
        if p.is_empty() && x.is_empty() {
            let mut set = r.clone();
            set.sort_unstable();
            out.push(set);
            return;
        }
        // pivot: vertex of P ∪ X covering the most of P, smallest index on ties
        let mut pivot = None;
        let mut cover = 0;
        let mut px = p.clone();
        px.union_with(&x);
        for u in px.iter() {
            let c = p.intersection(&adj[u]).count();
            if pivot.is_none() || c > cover {
                pivot = Some(u);
                cover = c;
            }
        }
        let mut cand = p.clone();
        cand.difference_with(&adj[pivot.unwrap()]);
        for v in cand.to_vec() {
            r.push(v);
            bk(
                adj,
                r,
                p.intersection(&adj[v]),
                x.intersection(&adj[v]),
                out,
            );
            r.pop();
            p.remove(v);
            x.insert(v);
        }
    }

    bk(
        &comp,
        &mut Vec::new(),
        BitSet::full(n),
        BitSet::new(n),
        &mut out,
    );
    out.sort();
    for set in &out {
        debug_assert!(is_independent(g, set));
        debug_assert!(is_maximal_independent(g, set));
    }
    Ok(out)
}

fn is_independent(g: &Graph, set: &[usize]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &u)| set[..i].iter().all(|&v| !g.adjacent(u, v)))
}

fn is_maximal_independent(g: &Graph, set: &[usize]) -> bool {
    (0..g.vertex_count()).all(|w| set.contains(&w) || set.iter().any(|&v| g.adjacent(w, v)))
}

/// Exact fractional chromatic number: the optimum of the covering LP
/// `min Σ w_S  s.t.  Σ_{S ∋ v} w_S >= 1, w >= 0` over all maximal
/// independent sets, solved in exact rational arithmetic.
pub fn fractional_chromatic(g: &Graph) -> Result<BigRational, CombinatoricsError> {
    let n = g.vertex_count();
    let sets = maximal_independent_sets(g)?;
    if n == 0 {
        return Ok(BigRational::zero());
    }
    let c = vec![BigRational::one(); sets.len()];
    let a: Vec<Vec<BigRational>> = (0..n)
        .map(|v| {
            sets.iter()
                .map(|s| {
                    if s.contains(&v) {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    let b = vec![BigRational::one(); n];
    let sol = lp::minimize_covering(&c, &a, &b)
        .expect("covering LP over maximal independent sets is always feasible");
    // re-verify the witness weights cover every vertex
    for v in 0..n {
        let total: BigRational = sets
            .iter()
            .zip(&sol.x)
            .filter(|(s, _)| s.contains(&v))
            .map(|(_, w)| w.clone())
            .sum();
        assert!(total >= BigRational::one());
    }
    assert_eq!(sol.x.iter().sum::<BigRational>(), sol.value);
    Ok(sol.value)
}
