use num_traits::{One, Signed, Zero};

use crate::mat::{Rat, RatMat, RatVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cmp {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Max,
    Min,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

/// optimise c·x subject to a_i·x (cmp_i) b_i, with x_j ≥ 0 unless free[j].
#[derive(Clone, Debug)]
pub struct LpProblem {
    pub a: RatMat,
    pub b: RatVec,
    pub cmp: Vec<Cmp>,
    pub c: RatVec,
    pub sense: Sense,
    pub free: Vec<bool>,
}

impl LpProblem {
    /// All variables nonnegative.
    pub fn new(a: RatMat, b: RatVec, cmp: Vec<Cmp>, c: RatVec, sense: Sense) -> Self {
        let n = a.ncols();
        LpProblem {
            a,
            b,
            cmp,
            c,
            sense,
            free: vec![false; n],
        }
    }
}

/// For an optimal result the dual follows the usual sign conventions of the
/// stated sense: for Max, y_i ≥ 0 on ≤ rows and y_i ≤ 0 on ≥ rows with yA ≥ c
/// on nonnegative variables; for Min the inequalities reverse. Free variables
/// get yA_j = c_j. Objectives agree exactly.
#[derive(Clone, Debug, PartialEq)]
pub struct LpResult {
    pub status: LpStatus,
    pub primal: RatVec,
    pub dual: RatVec,
    pub objective: Rat,
}

struct Tableau {
    t: Vec<Vec<Rat>>,
    rhs: Vec<Rat>,
    basis: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.t[r][c].clone();
        for x in self.t[r].iter_mut() {
            *x /= &p;
        }
        self.rhs[r] /= &p;
        let prow = self.t[r].clone();
        let prhs = self.rhs[r].clone();
        for i in 0..self.t.len() {
            if i == r || self.t[i][c].is_zero() {
                continue;
            }
            let f = self.t[i][c].clone();
            for (x, y) in self.t[i].iter_mut().zip(&prow) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            self.rhs[i] -= &f * &prhs;
        }
        self.basis[r] = c;
    }

    fn reduced_cost(&self, obj: &[Rat], j: usize) -> Rat {
        let mut z = obj[j].clone();
        for (i, &bv) in self.basis.iter().enumerate() {
            if !obj[bv].is_zero() && !self.t[i][j].is_zero() {
                z -= &obj[bv] * &self.t[i][j];
            }
        }
        z
    }

    /// Maximises obj over columns allowed to enter. Returns false when unbounded.
    fn run(&mut self, obj: &[Rat], allowed: &dyn Fn(usize) -> bool) -> bool {
        let ncols = obj.len();
        loop {
            let entering = (0..ncols)
                .filter(|&j| allowed(j) && !self.basis.contains(&j))
                .find(|&j| self.reduced_cost(obj, j).is_positive());
            let Some(e) = entering else { return true };
            let mut leave: Option<(usize, Rat)> = None;
            for i in 0..self.t.len() {
                if !self.t[i][e].is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / &self.t[i][e];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => {
                        ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((r, _)) = leave else { return false };
            self.pivot(r, e);
        }
    }
}

/// Two-phase dense simplex with Bland's rule, in exact rational arithmetic.
pub fn lp_solve(p: &LpProblem) -> LpResult {
    let m = p.a.nrows();
    let n = p.a.ncols();
    assert_eq!(p.b.len(), m, "lp_solve: rhs length");
    assert_eq!(p.cmp.len(), m, "lp_solve: comparison count");
    assert_eq!(p.c.len(), n, "lp_solve: objective length");
    assert_eq!(p.free.len(), n, "lp_solve: bounds length");

    // Column layout: structural (free ones split into +/-), slack/surplus, artificial.
    let mut struct_cols: Vec<(usize, bool)> = Vec::new();
    for j in 0..n {
        struct_cols.push((j, true));
        if p.free[j] {
            struct_cols.push((j, false));
        }
    }
    let ns = struct_cols.len();
    let slack_rows: Vec<usize> = (0..m).filter(|&i| p.cmp[i] != Cmp::Eq).collect();
    let nslack = slack_rows.len();
    let art0 = ns + nslack;
    let total = art0 + m;

    let mut flip = vec![false; m];
    let mut t = vec![vec![Rat::zero(); total]; m];
    let mut rhs = vec![Rat::zero(); m];
    for i in 0..m {
        flip[i] = p.b[i].is_negative();
        let s = if flip[i] { -Rat::one() } else { Rat::one() };
        for (k, &(j, pos)) in struct_cols.iter().enumerate() {
            let v = &p.a[(i, j)] * &s;
            t[i][k] = if pos { v } else { -v };
        }
        rhs[i] = &p.b[i] * &s;
        t[i][art0 + i] = Rat::one();
    }
    for (k, &i) in slack_rows.iter().enumerate() {
        let sign = match (p.cmp[i], flip[i]) {
            (Cmp::Le, false) | (Cmp::Ge, true) => Rat::one(),
            _ => -Rat::one(),
        };
        t[i][ns + k] = sign;
    }
    let mut tab = Tableau {
        t,
        rhs,
        basis: (art0..total).collect(),
    };

    let mut phase1 = vec![Rat::zero(); total];
    for x in phase1.iter_mut().skip(art0) {
        *x = -Rat::one();
    }
    tab.run(&phase1, &|_| true);
    let infeas: Rat = tab
        .basis
        .iter()
        .zip(&tab.rhs)
        .filter(|(&bv, _)| bv >= art0)
        .map(|(_, v)| v.clone())
        .sum();
    if infeas.is_positive() {
        return LpResult {
            status: LpStatus::Infeasible,
            primal: Vec::new(),
            dual: Vec::new(),
            objective: Rat::zero(),
        };
    }
    for r in 0..m {
        if tab.basis[r] < art0 {
            continue;
        }
        if let Some(c) = (0..art0).find(|&j| !tab.t[r][j].is_zero() && !tab.basis.contains(&j)) {
            tab.pivot(r, c);
        }
    }

    let sgn = match p.sense {
        Sense::Max => Rat::one(),
        Sense::Min => -Rat::one(),
    };
    let mut obj = vec![Rat::zero(); total];
    for (k, &(j, pos)) in struct_cols.iter().enumerate() {
        let v = &p.c[j] * &sgn;
        obj[k] = if pos { v } else { -v };
    }
    if !tab.run(&obj, &|j| j < art0) {
        return LpResult {
            status: LpStatus::Unbounded,
            primal: Vec::new(),
            dual: Vec::new(),
            objective: Rat::zero(),
        };
    }

    let mut x = vec![Rat::zero(); n];
    for (r, &bv) in tab.basis.iter().enumerate() {
        if bv < ns {
            let (j, pos) = struct_cols[bv];
            if pos {
                x[j] += &tab.rhs[r];
            } else {
                x[j] -= &tab.rhs[r];
            }
        }
    }
    let mut y = vec![Rat::zero(); m];
    for (i, yi) in y.iter_mut().enumerate() {
        let mut acc = Rat::zero();
        for (r, &bv) in tab.basis.iter().enumerate() {
            if !obj[bv].is_zero() {
                acc += &obj[bv] * &tab.t[r][art0 + i];
            }
        }
        if flip[i] {
            acc = -acc;
        }
        *yi = acc * &sgn;
    }
    let objective: Rat = p.c.iter().zip(&x).map(|(c, v)| c * v).sum();
    debug_assert_eq!(
        objective,
        y.iter().zip(&p.b).map(|(a, b)| a * b).sum::<Rat>(),
        "strong duality failed"
    );
    LpResult {
        status: LpStatus::Optimal,
        primal: x,
        dual: y,
        objective,
    }
}
