use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::elim::{rank_int, scale_rows, solve_linear};
use crate::error::LaError;
use crate::mat::{IntMat, IntVec, Rat, RatMat};

fn row_axpy(m: &mut IntMat, dst: usize, src: usize, f: &BigInt) {
    if f.is_zero() {
        return;
    }
    for j in 0..m.ncols() {
        let v = &m[(src, j)] * f;
        m[(dst, j)] -= v;
    }
}

fn row_neg(m: &mut IntMat, r: usize) {
    for x in m.row_mut(r) {
        *x = -&*x;
    }
}

fn col_axpy(m: &mut IntMat, dst: usize, src: usize, f: &BigInt) {
    if f.is_zero() {
        return;
    }
    for i in 0..m.nrows() {
        let v = &m[(i, src)] * f;
        m[(i, dst)] -= v;
    }
}

fn col_swap(m: &mut IntMat, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..m.nrows() {
        let t = m[(i, a)].clone();
        m[(i, a)] = m[(i, b)].clone();
        m[(i, b)] = t;
    }
}

/// Row-style Hermite normal form. Returns (h, u) with h = u·m, u unimodular,
/// h in echelon form with positive pivots and entries above each pivot in [0, pivot).
pub fn hnf(m: &IntMat) -> (IntMat, IntMat) {
    let rows = m.nrows();
    let cols = m.ncols();
    let mut h = m.clone();
    let mut u = IntMat::identity(rows);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            let best = (r..rows)
                .filter(|&i| !h[(i, c)].is_zero())
                .min_by(|&a, &b| h[(a, c)].abs().cmp(&h[(b, c)].abs()).then(a.cmp(&b)));
            let Some(p) = best else { break };
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            let mut done = true;
            for i in r + 1..rows {
                if h[(i, c)].is_zero() {
                    continue;
                }
                let q = h[(i, c)].div_floor(&h[(r, c)]);
                row_axpy(&mut h, i, r, &q);
                row_axpy(&mut u, i, r, &q);
                if !h[(i, c)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            row_neg(&mut h, r);
            row_neg(&mut u, r);
        }
        for i in 0..r {
            let q = h[(i, c)].div_floor(&h[(r, c)]);
            row_axpy(&mut h, i, r, &q);
            row_axpy(&mut u, i, r, &q);
        }
        r += 1;
    }
    (h, u)
}

/// Nonzero rows of the Hermite normal form: the canonical basis of the row lattice.
pub(crate) fn hnf_basis(m: &IntMat) -> IntMat {
    let (h, _) = hnf(m);
    let keep: Vec<usize> = (0..h.nrows())
        .filter(|&i| h.row(i).iter().any(|x| !x.is_zero()))
        .collect();
    h.select_rows(&keep)
}

#[derive(Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub diag: Vec<BigInt>,
    pub left: IntMat,
    pub right: IntMat,
}

impl fmt::Debug for SnfResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d: Vec<String> = self.diag.iter().map(|x| x.to_string()).collect();
        write!(f, "SnfResult {{ diag: [{}] }}", d.join(", "))
    }
}

/// Smith normal form: left·m·right is diagonal with entries `diag`,
/// each dividing the next. `diag` has length min(rows, cols).
pub fn snf(m: &IntMat) -> SnfResult {
    let rows = m.nrows();
    let cols = m.ncols();
    let mut a = m.clone();
    let mut left = IntMat::identity(rows);
    let mut right = IntMat::identity(cols);
    let n = rows.min(cols);
    let mut diag = Vec::with_capacity(n);
    for t in 0..n {
        let mut found = false;
        'pivot: loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if a[(i, j)].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| a[(i, j)].abs() < a[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            found = true;
            a.swap_rows(t, pi);
            left.swap_rows(t, pi);
            col_swap(&mut a, t, pj);
            col_swap(&mut right, t, pj);
            let mut clean = true;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = a[(i, t)].div_floor(&a[(t, t)]);
                row_axpy(&mut a, i, t, &q);
                row_axpy(&mut left, i, t, &q);
                clean &= a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = a[(t, j)].div_floor(&a[(t, t)]);
                col_axpy(&mut a, j, t, &q);
                col_axpy(&mut right, j, t, &q);
                clean &= a[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            for i in t + 1..rows {
                for j in t + 1..cols {
                    if !(&a[(i, j)] % &a[(t, t)]).is_zero() {
                        let neg_one = -BigInt::one();
                        row_axpy(&mut a, t, i, &neg_one);
                        row_axpy(&mut left, t, i, &neg_one);
                        continue 'pivot;
                    }
                }
            }
            break;
        }
        if !found {
            diag.extend(std::iter::repeat_n(BigInt::zero(), n - t));
            break;
        }
        if a[(t, t)].is_negative() {
            row_neg(&mut a, t);
            row_neg(&mut left, t);
        }
        diag.push(a[(t, t)].clone());
    }
    SnfResult { diag, left, right }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Index {
    Finite(BigInt),
    Infinite,
}

impl Index {
    pub fn is_one(&self) -> bool {
        matches!(self, Index::Finite(x) if x.is_one())
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Index::Finite(x) => write!(f, "{x}"),
            Index::Infinite => write!(f, "infinite"),
        }
    }
}

/// Coefficients c (over the rationals) with v = Σ c_i basis_i, where basis rows are independent.
fn express(basis: &IntMat, v: &[BigInt]) -> Option<Vec<Rat>> {
    let bt = basis.to_rat().transpose();
    let rhs: Vec<Rat> = v.iter().map(|x| Rat::from_integer(x.clone())).collect();
    solve_linear(&bt, &rhs)
}

/// Integer coefficients expressing v in the row lattice of `basis` (rows independent),
/// or None when v is outside that lattice.
pub fn solve_integral(basis: &IntMat, v: &[BigInt]) -> Option<IntVec> {
    let c = express(basis, v)?;
    c.into_iter()
        .map(|x| x.is_integer().then(|| x.to_integer()))
        .collect()
}

/// Whether v is an integer combination of the rows of `gens` (rows need not be independent).
pub fn in_lattice(gens: &IntMat, v: &[BigInt]) -> bool {
    let b = hnf_basis(gens);
    if b.nrows() == 0 {
        return v.iter().all(|x| x.is_zero());
    }
    solve_integral(&b, v).is_some()
}

/// Index of lat(rows of gen) inside lat(rows of ambient).
pub fn sublattice_index(gen: &IntMat, ambient: &IntMat) -> Result<Index, LaError> {
    if gen.ncols() != ambient.ncols() {
        return Err(LaError::Dimension(format!(
            "generators have {} columns, ambient has {}",
            gen.ncols(),
            ambient.ncols()
        )));
    }
    let basis = hnf_basis(ambient);
    let r = basis.nrows();
    let mut coeff = IntMat::zeros(0, r);
    for i in 0..gen.nrows() {
        let g = gen.row(i);
        let c = if r == 0 {
            if g.iter().all(|x| x.is_zero()) {
                Some(Vec::new())
            } else {
                None
            }
        } else {
            express(&basis, g)
        };
        let c = c.ok_or(LaError::OutsideSpan(i))?;
        let ci: Option<Vec<BigInt>> = c
            .into_iter()
            .map(|x| x.is_integer().then(|| x.to_integer()))
            .collect();
        coeff.push_row(ci.ok_or(LaError::OutsideLattice(i))?);
    }
    if rank_int(&coeff) < r {
        return Ok(Index::Infinite);
    }
    let s = snf(&coeff);
    Ok(Index::Finite(s.diag.iter().fold(BigInt::one(), |a, d| a * d)))
}

/// Lattice basis of {x ∈ ℤⁿ : a·x = 0}, as rows, in Hermite normal form.
pub fn integer_kernel(a: &IntMat) -> IntMat {
    let n = a.ncols();
    let (h, u) = hnf(&a.transpose());
    let keep: Vec<usize> = (0..n)
        .filter(|&i| h.row(i).iter().all(|x| x.is_zero()))
        .collect();
    hnf_basis(&u.select_rows(&keep))
}

/// Lattice basis of lin(rows of span) ∩ ℤⁿ, in Hermite normal form.
pub fn saturate(span: &RatMat) -> IntMat {
    let s = scale_rows(span, None);
    let perp = integer_kernel(&s);
    integer_kernel(&perp)
}
