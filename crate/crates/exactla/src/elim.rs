use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::mat::{IntMat, Rat, RatMat, RatVec};

/// Clears denominators row by row. Row scaling preserves rank and solution sets.
pub(crate) fn scale_rows(m: &RatMat, rhs: Option<&[Rat]>) -> IntMat {
    let extra = usize::from(rhs.is_some());
    let cols = m.ncols() + extra;
    let mut out = IntMat::zeros(m.nrows(), cols);
    for i in 0..m.nrows() {
        let mut row: Vec<&Rat> = m.row(i).iter().collect();
        if let Some(b) = rhs {
            row.push(&b[i]);
        }
        let l = row
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        for (j, x) in row.iter().enumerate() {
            out[(i, j)] = x.numer() * (&l / x.denom());
        }
    }
    out
}

/// Fraction-free Gaussian elimination in place. Returns pivot columns.
pub(crate) fn bareiss(m: &mut IntMat, max_col: usize) -> Vec<usize> {
    let rows = m.nrows();
    let cols = m.ncols();
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..max_col.min(cols) {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[(i, c)].is_zero()) else {
            continue;
        };
        m.swap_rows(r, p);
        let piv = m[(r, c)].clone();
        for i in r + 1..rows {
            let f = m[(i, c)].clone();
            for j in c + 1..cols {
                let v = (&piv * &m[(i, j)] - &f * &m[(r, j)]) / &prev;
                m[(i, j)] = v;
            }
            m[(i, c)] = BigInt::zero();
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank_int(m: &IntMat) -> usize {
    let mut w = m.clone();
    let c = w.ncols();
    bareiss(&mut w, c).len()
}

pub fn rank(m: &RatMat) -> usize {
    let mut w = scale_rows(m, None);
    let c = w.ncols();
    bareiss(&mut w, c).len()
}

/// Returns some x with a·x = b (free variables set to zero), or None if inconsistent.
pub fn solve_linear(a: &RatMat, b: &[Rat]) -> Option<RatVec> {
    assert_eq!(a.nrows(), b.len(), "solve_linear: row count mismatch");
    let n = a.ncols();
    let mut w = scale_rows(a, Some(b));
    let pivots = bareiss(&mut w, n);
    let r = pivots.len();
    // Consistency: rows past the rank must have zero right-hand side.
    if (r..w.nrows()).any(|i| !w[(i, n)].is_zero()) {
        return None;
    }
    let mut x = vec![Rat::zero(); n];
    for k in (0..r).rev() {
        let c = pivots[k];
        let mut acc = Rat::from_integer(w[(k, n)].clone());
        for j in c + 1..n {
            if !w[(k, j)].is_zero() && !x[j].is_zero() {
                acc -= Rat::from_integer(w[(k, j)].clone()) * &x[j];
            }
        }
        x[c] = acc / Rat::from_integer(w[(k, c)].clone());
    }
    Some(x)
}
