//! Exact rational simplex for packing-type linear programs
//! `maximize c·x  subject to  A x <= b, x >= 0` with `b >= 0`.
//!
//! The slack basis is feasible because `b >= 0`, so no phase one is needed.
//! Pivoting follows Bland's rule (lowest-index improving column, lowest-index
//! basic variable among ratio ties), which cannot cycle.

use num_traits::{Signed, Zero};

use crate::error::{input, Error, Result};
use crate::rational::BigRational;

#[derive(Clone, Debug)]
pub struct LpSolution {
    pub objective: BigRational,
    /// Primal values of the structural variables.
    pub primal: Vec<BigRational>,
    /// Dual values, one per constraint row. Together with `primal` they form
    /// an optimality certificate: `y >= 0`, `yᵀA >= c`, `y·b = objective`.
    pub dual: Vec<BigRational>,
    pub pivots: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal,
    Unbounded,
}

/// Solves the program, failing with a resource error after `max_pivots`.
pub fn maximize(
    c: &[BigRational],
    a: &[Vec<BigRational>],
    b: &[BigRational],
    max_pivots: usize,
) -> Result<LpSolution> {
    let m = a.len();
    let n = c.len();
    if b.len() != m {
        return input("right-hand side length differs from row count");
    }
    if a.iter().any(|row| row.len() != n) {
        return input("constraint row length differs from objective length");
    }
    if b.iter().any(Signed::is_negative) {
        return input("right-hand side must be non-negative");
    }

    // Columns 0..n structural, n..n+m slack, last column is the rhs.
    let width = n + m + 1;
    let mut rows: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .enumerate()
        .map(|(i, (row, bi))| {
            let mut t = Vec::with_capacity(width);
            t.extend(row.iter().cloned());
            t.extend((0..m).map(|j| if i == j { one() } else { BigRational::zero() }));
            t.push(bi.clone());
            t
        })
        .collect();
    // Reduced-cost row, stored as c_j - z_j; the objective value sits in the
    // rhs slot with flipped sign.
    let mut obj: Vec<BigRational> = c.iter().cloned().collect();
    obj.extend((0..=m).map(|_| BigRational::zero()));
    let mut basis: Vec<usize> = (n..n + m).collect();

    let mut pivots = 0usize;
    loop {
        let Some(enter) = (0..n + m).find(|&j| obj[j].is_positive()) else {
            break;
        };
        let mut leave: Option<(usize, BigRational)> = None;
        for (i, row) in rows.iter().enumerate() {
            if !row[enter].is_positive() {
                continue;
            }
            let ratio = &row[width - 1] / &row[enter];
            let better = match &leave {
                None => true,
                Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        let Some((pr, _)) = leave else {
            return Err(Error::Input("linear program is unbounded".into()));
        };
        if pivots >= max_pivots {
            return Err(Error::Resource(format!("simplex exceeded {max_pivots} pivots")));
        }
        pivot(&mut rows, &mut obj, pr, enter);
        basis[pr] = enter;
        pivots += 1;
    }

    let mut primal = vec![BigRational::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            primal[bv] = rows[i][width - 1].clone();
        }
    }
    let dual = (0..m).map(|i| -obj[n + i].clone()).collect();
    Ok(LpSolution {
        objective: -obj[width - 1].clone(),
        primal,
        dual,
        pivots,
    })
}

fn one() -> BigRational {
    BigRational::from_integer(1.into())
}

fn pivot(rows: &mut [Vec<BigRational>], obj: &mut [BigRational], pr: usize, pc: usize) {
    let p = rows[pr][pc].clone();
    for x in rows[pr].iter_mut() {
        if !x.is_zero() {
            *x = &*x / &p;
        }
    }
    let prow = rows[pr].clone();
    let nz: Vec<usize> = (0..prow.len()).filter(|&j| !prow[j].is_zero()).collect();
    let eliminate = |row: &mut [BigRational]| {
        let f = row[pc].clone();
        if f.is_zero() {
            return;
        }
        for &j in &nz {
            let d = &f * &prow[j];
            row[j] -= d;
        }
    };
    for (i, row) in rows.iter_mut().enumerate() {
        if i != pr {
            eliminate(row);
        }
    }
    eliminate(obj);
}
