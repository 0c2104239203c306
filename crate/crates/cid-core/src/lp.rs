//! Dense two-phase simplex over exact rationals.
//!
//! Solves covering programs `min c·x  s.t.  A x >= b, x >= 0` with
//! `b >= 0`, which is the shape of the fractional-coloring LP. Pivoting
//! uses Bland's rule, so the solver terminates without any tolerance
//! knobs; every number in the tableau is a [`BigRational`].

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LpError {
    #[error("linear program is infeasible")]
    Infeasible,
    #[error("linear program is unbounded")]
    Unbounded,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

#[derive(Debug, Clone)]
pub struct LpSolution {
    pub value: BigRational,
    pub x: Vec<BigRational>,
}

/// Minimizes `c·x` subject to `A x >= b`, `x >= 0`, with all `b_i >= 0`.
///
/// `a` is row-major with `a.len()` constraints over `c.len()` variables.
pub fn minimize_covering(
    c: &[BigRational],
    a: &[Vec<BigRational>],
    b: &[BigRational],
) -> Result<LpSolution, LpError> {
    let m = a.len();
    let n = c.len();
    if b.len() != m {
        return Err(LpError::Dimension(format!(
            "{} rows but {} right-hand sides",
            m,
            b.len()
        )));
    }
    for (i, row) in a.iter().enumerate() {
        if row.len() != n {
            return Err(LpError::Dimension(format!(
                "row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
    }
    if b.iter().any(|v| v.is_negative()) {
        return Err(LpError::Dimension("covering form requires b >= 0".into()));
    }
    if m == 0 {
        return Ok(LpSolution {
            value: BigRational::zero(),
            x: vec![BigRational::zero(); n],
        });
    }

    // columns: n structural | m surplus | m artificial | rhs
    let ncol = n + 2 * m;
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    for r in 0..m {
        let mut row = vec![BigRational::zero(); ncol + 1];
        row[..n].clone_from_slice(&a[r]);
        row[n + r] = -BigRational::one();
        row[n + m + r] = BigRational::one();
        row[ncol] = b[r].clone();
        t.push(row);
    }
    let mut basis: Vec<usize> = (0..m).map(|r| n + m + r).collect();

    // phase 1: minimize the sum of artificials
    let mut obj = vec![BigRational::zero(); ncol + 1];
    for entry in obj.iter_mut().take(ncol).skip(n + m) {
        *entry = BigRational::one();
    }
    for row in &t {
        for (o, v) in obj.iter_mut().zip(row) {
            *o -= v;
        }
    }
    pivot_to_optimum(&mut t, &mut basis, &mut obj, ncol, ncol)?;
    if !obj[ncol].is_zero() {
        return Err(LpError::Infeasible);
    }

    // phase 2: the real objective, artificial columns frozen out
    let mut obj = vec![BigRational::zero(); ncol + 1];
    obj[..n].clone_from_slice(c);
    for (r, row) in t.iter().enumerate() {
        if basis[r] < n {
            let coeff = c[basis[r]].clone();
            for (o, v) in obj.iter_mut().zip(row) {
                *o -= &coeff * v;
            }
        }
    }
    pivot_to_optimum(&mut t, &mut basis, &mut obj, n + m, ncol)?;

    let mut x = vec![BigRational::zero(); n];
    for (r, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = t[r][ncol].clone();
        }
    }
    let value = -obj[ncol].clone();
    // a degenerate artificial left in the basis could in principle drift;
    // re-verify the solution before handing it out
    for (row, rhs) in a.iter().zip(b) {
        let lhs: BigRational = row.iter().zip(&x).map(|(aij, xj)| aij * xj).sum();
        assert!(lhs >= *rhs, "simplex returned an infeasible point");
    }
    assert_eq!(
        c.iter()
            .zip(&x)
            .map(|(ci, xi)| ci * xi)
            .sum::<BigRational>(),
        value
    );
    Ok(LpSolution { value, x })
}

/// Runs Bland-rule pivots until no reduced cost is negative. Only the
/// first `allowed` columns may enter the basis.
fn pivot_to_optimum(
    t: &mut [Vec<BigRational>],
    basis: &mut [usize],
    obj: &mut [BigRational],
    allowed: usize,
    ncol: usize,
) -> Result<(), LpError> {
    let m = t.len();
    loop {
        let Some(enter) = (0..allowed).find(|&c| obj[c].is_negative()) else {
            return Ok(());
        };
        // leaving row: min ratio, ties by smallest basis index (Bland)
        let mut leave: Option<usize> = None;
        let mut best: Option<BigRational> = None;
        for r in 0..m {
            if t[r][enter].is_positive() {
                let ratio = &t[r][ncol] / &t[r][enter];
                let better = match &best {
                    None => true,
                    Some(b) => ratio < *b || (ratio == *b && basis[r] < basis[leave.unwrap()]),
                };
                if better {
                    best = Some(ratio);
                    leave = Some(r);
                }
            }
        }
        let Some(leave) = leave else {
            return Err(LpError::Unbounded);
        };
        let pivot = t[leave][enter].clone();
        for v in t[leave].iter_mut() {
            *v /= &pivot;
        }
        let pivot_row = t[leave].clone();
        for (r, row) in t.iter_mut().enumerate() {
            if r != leave && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v -= &f * p;
                }
            }
        }
        if !obj[enter].is_zero() {
            let f = obj[enter].clone();
            for (o, p) in obj.iter_mut().zip(&pivot_row) {
                *o -= &f * p;
            }
        }
        basis[leave] = enter;
    }
}
