//! Applications: the strengthening-to-dijoin transform, lattice results on
//! strengthening faces, the subtractive Woodall partition, p-adic packings
//! and hypergraph orientations.

use exactla::{
    integer_kernel, lp_solve, saturate, snf, solve_integral, solve_linear, Cmp, IntMat, LaError,
    LpProblem, LpStatus, Rat, RatMat, Sense,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::basis::{
    express_in_basis, integral_basis_recursive, verify_integral_basis, BasisCertificate,
    BasisError, IntegralBasis,
};
use crate::digraft::{validate, Digraft, DigraftError};
use crate::digraph::{Arc, Digraph, GraphError, DEFAULT_DICUT_CAP};
use crate::faces::{
    count, enumerate_scr_face_points, enumerate_scr_points_within, point_matrix, FaceError,
    Family,
};
use crate::sets::{ArcSet, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AppError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Face(#[from] FaceError),
    #[error(transparent)]
    Digraft(#[from] DigraftError),
    #[error(transparent)]
    Basis(#[from] BasisError),
    #[error(transparent)]
    Lattice(#[from] LaError),
    #[error("underlying undirected graph is not 2-edge-connected")]
    NotTwoEdgeConnected,
    #[error("the face is empty")]
    EmptyFace,
    #[error("gcd of the right-hand sides is {0}, not 1")]
    GcdViolation(BigInt),
    #[error("every family right-hand side 1 - |entering arcs| is zero")]
    AllRightHandSidesZero,
    #[error("family is empty")]
    EmptyFamily,
    #[error("minimum dicut size {0} is below 2")]
    TauTooSmall(u64),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("linear program ended with status {0:?}")]
    Lp(LpStatus),
    #[error("inconsistent input: {0}")]
    Inconsistent(String),
    #[error("hyperedge {0} has {1} vertices but the hypergraph is {2}-uniform")]
    NotUniform(usize, usize, usize),
    #[error("hyperedges need at least two vertices")]
    EdgeTooSmall,
    #[error("hyperedge {0} repeats or misnames a vertex")]
    BadHyperedge(usize),
    #[error("hypergraph has no hyperedges")]
    NoHyperedges,
    #[error("d_H({witness:?}) = {value} is below {tau}")]
    Connectivity {
        witness: VertexSet,
        value: usize,
        tau: usize,
    },
    #[error("vertex subset must be nonempty and proper")]
    InvalidSubset,
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}

/// Each arc a = (r, s) of the source digraph becomes a sink t_a with arcs
/// (r, t_a) at index 2a and (s, t_a) at index 2a + 1.
#[derive(Clone, Debug)]
pub struct ScrDijTransform {
    pub source: Digraph,
    pub source_family: Family,
    pub target: Digraph,
    pub target_family: Family,
    pub subdivision: Vec<usize>,
}

impl ScrDijTransform {
    pub fn phi(&self, u: VertexSet) -> VertexSet {
        let mut out = u;
        for (i, a) in self.source.arcs().iter().enumerate() {
            if u.contains(a.tail) && u.contains(a.head) {
                out.insert(self.subdivision[i]);
            }
        }
        out
    }

    pub fn forward(&self, j: ArcSet) -> ArcSet {
        ArcSet::from_indices(
            (0..self.source.num_arcs()).map(|i| if j.contains(i) { 2 * i } else { 2 * i + 1 }),
        )
    }

    /// Inverse of `forward`: None unless exactly one arc enters each t_a.
    pub fn backward(&self, j: ArcSet) -> Option<ArcSet> {
        let mut out = ArcSet::empty();
        for i in 0..self.source.num_arcs() {
            match (j.contains(2 * i), j.contains(2 * i + 1)) {
                (true, false) => out.insert(i),
                (false, true) => {}
                _ => return None,
            }
        }
        (j.len() == self.source.num_arcs()).then_some(out)
    }

    /// Enumerates both faces and checks that `forward` maps one onto the other.
    pub fn check_bijection(&self, g: &Digraft) -> Result<Vec<ArcSet>, AppError> {
        let scr = enumerate_scr_face_points(&self.source, &self.source_family)?;
        let mut image: Vec<ArcSet> = scr.points.iter().map(|&j| self.forward(j)).collect();
        image.sort();
        if image != g.points() {
            return Err(AppError::TheoremViolation(format!(
                "strengthening face has {} points, dijoin face of the transform has {}",
                scr.points.len(),
                g.points().len()
            )));
        }
        for &p in g.points() {
            let back = self.backward(p).ok_or_else(|| {
                AppError::TheoremViolation(format!("{p:?} has no preimage"))
            })?;
            if self.forward(back) != p {
                return Err(AppError::TheoremViolation(format!("{p:?} does not round-trip")));
            }
        }
        Ok(scr.points)
    }
}

pub fn scr_to_dij(d: &Digraph, f: &Family) -> Result<(ScrDijTransform, Digraft), AppError> {
    if !d.is_2ec_underlying() {
        return Err(AppError::NotTwoEdgeConnected);
    }
    let n = d.num_vertices();
    let mut vertices = d.vertex_labels().to_vec();
    let mut arcs = Vec::with_capacity(2 * d.num_arcs());
    let mut subdivision = Vec::with_capacity(d.num_arcs());
    for (i, a) in d.arcs().iter().enumerate() {
        let t = n + i;
        vertices.push(format!("t[{}]", a.label));
        subdivision.push(t);
        arcs.push(Arc {
            label: format!("{}+", a.label),
            tail: a.tail,
            head: t,
        });
        arcs.push(Arc {
            label: format!("{}-", a.label),
            tail: a.head,
            head: t,
        });
    }
    let target = Digraph::new(vertices, arcs)?;
    let mut tr = ScrDijTransform {
        source: d.clone(),
        source_family: f.clone(),
        target: target.clone(),
        target_family: Family::default(),
        subdivision,
    };
    let mut sets: Vec<VertexSet> = f.sets().iter().map(|&u| tr.phi(u)).collect();
    sets.extend(Family::sink_complements(&target).sets().iter().copied());
    tr.target_family = Family::new(sets);
    let g = match validate(&target, &tr.target_family) {
        Err(DigraftError::EmptyFace) => return Err(AppError::EmptyFace),
        other => other?,
    };
    Ok((tr, g))
}

/// gcd of |1 − |δ⁻(U)|| over the family.
pub fn family_gcd(d: &Digraph, f: &Family) -> BigInt {
    f.sets().iter().fold(BigInt::zero(), |g, &u| {
        g.gcd(&BigInt::from(1 - d.delta_in(u).len() as i64))
    })
}

fn pull_back(tr: &ScrDijTransform, b: &IntegralBasis) -> Result<Vec<ArcSet>, AppError> {
    b.points
        .iter()
        .map(|&p| {
            tr.backward(p)
                .ok_or_else(|| AppError::TheoremViolation(format!("{p:?} has no preimage")))
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct ScrBasis {
    pub basis: IntegralBasis,
    pub points: Vec<ArcSet>,
    pub certificate: BasisCertificate,
}

/// Integral basis of a strengthening face, pulled back from the dijoin face
/// of its transform.
pub fn scr_integral_basis(d: &Digraph, f: &Family) -> Result<ScrBasis, AppError> {
    if f.is_empty() {
        return Err(AppError::EmptyFamily);
    }
    let g = family_gcd(d, f);
    if !g.is_one() {
        return Err(AppError::GcdViolation(g));
    }
    let (tr, graft) = scr_to_dij(d, f)?;
    let points = tr.check_bijection(&graft)?;
    let dij = integral_basis_recursive(&graft)?;
    let basis = IntegralBasis {
        points: pull_back(&tr, &dij)?,
        provenance: dij.provenance,
    };
    let certificate = verify_integral_basis(&points, d.num_arcs(), &basis.points)?;
    Ok(ScrBasis {
        basis,
        points,
        certificate,
    })
}

#[derive(Clone, Debug)]
pub struct LatticeReport {
    pub lattice_basis: Vec<ArcSet>,
    pub g: BigInt,
    /// Elementary divisors of the lattice of face points inside the integral
    /// vectors of its span.
    pub divisors: Vec<BigInt>,
    pub index: BigInt,
    /// g times each generator of the saturated lattice, written over the basis.
    pub scaled_generators: Vec<Vec<BigInt>>,
}

pub fn lattice_report(d: &Digraph, f: &Family) -> Result<LatticeReport, AppError> {
    let g = family_gcd(d, f);
    if g.is_zero() {
        return Err(AppError::AllRightHandSidesZero);
    }
    let (tr, graft) = scr_to_dij(d, f)?;
    let points = tr.check_bijection(&graft)?;
    let dij = integral_basis_recursive(&graft)?;
    let basis = pull_back(&tr, &dij)?;
    let m = d.num_arcs();
    for &p in &points {
        let v: Vec<BigInt> = (0..m).map(|a| BigInt::from(p.contains(a) as u8)).collect();
        express_in_basis(&basis, m, &v).map_err(|e| {
            AppError::TheoremViolation(format!("{p:?} is not an integer combination: {e}"))
        })?;
    }
    let bm = point_matrix(&basis, m, false);
    let sat = saturate(&bm.to_rat());
    let mut coeff = IntMat::zeros(0, sat.nrows());
    for row in bm.rows_iter() {
        coeff.push_row(solve_integral(&sat, row).expect("a vector lies in its own saturation"));
    }
    let divisors = snf(&coeff).diag;
    let index = divisors.iter().fold(BigInt::one(), |a, x| a * x);
    let mut scaled_generators = Vec::new();
    for row in sat.rows_iter() {
        let v: Vec<BigInt> = row.iter().map(|x| x * &g).collect();
        let c = express_in_basis(&basis, m, &v).map_err(|e| {
            AppError::TheoremViolation(format!("g times {row:?} is outside the lattice: {e}"))
        })?;
        scaled_generators.push(c);
    }
    Ok(LatticeReport {
        lattice_basis: basis,
        g,
        divisors,
        index,
        scaled_generators,
    })
}

fn unit_weights(d: &Digraph) -> Vec<u64> {
    vec![1; d.num_arcs()]
}

/// Size of a minimum dicut together with every shore attaining it.
pub fn min_dicut_family(d: &Digraph) -> Result<(u64, Family), AppError> {
    let (tau, _) = d.min_dicut(&unit_weights(d), DEFAULT_DICUT_CAP)?;
    let shores = d
        .dicut_shores(DEFAULT_DICUT_CAP)?
        .into_iter()
        .filter(|&u| d.delta_out(u).len() as u64 == tau);
    Ok((tau, Family::new(shores)))
}

#[derive(Clone, Debug)]
pub struct WoodallPartition {
    pub tau: u64,
    pub family: Family,
    pub basis: ScrBasis,
    /// Nonzero coefficients, one per support point.
    pub terms: Vec<(ArcSet, BigInt)>,
    pub support_certificate: BasisCertificate,
}

/// Integer (possibly negative) coefficients λ over dijoins meeting every
/// minimum dicut once, with Σ λ_J 𝟙_J = 𝟙 and Σ λ_J = τ.
pub fn woodall_partition(d: &Digraph) -> Result<WoodallPartition, AppError> {
    let (tau, family) = min_dicut_family(d)?;
    if tau < 2 {
        return Err(AppError::TauTooSmall(tau));
    }
    let basis = match scr_integral_basis(d, &family) {
        Err(AppError::EmptyFace) => {
            return Err(AppError::TheoremViolation(
                "the face contains 1/tau times the all-ones vector yet has no points".into(),
            ))
        }
        other => other?,
    };
    let m = d.num_arcs();
    let ones = vec![BigInt::one(); m];
    let lambda = express_in_basis(&basis.basis.points, m, &ones)
        .map_err(|e| AppError::TheoremViolation(format!("all-ones vector: {e}")))?;
    let terms: Vec<(ArcSet, BigInt)> = basis
        .basis
        .points
        .iter()
        .zip(lambda)
        .filter(|(_, l)| !l.is_zero())
        .map(|(&p, l)| (p, l))
        .collect();
    let total: BigInt = terms.iter().map(|(_, l)| l).sum();
    if total != BigInt::from(tau) {
        return Err(AppError::TheoremViolation(format!(
            "coefficients sum to {total}, not {tau}"
        )));
    }
    let support: Vec<ArcSet> = terms.iter().map(|(p, _)| *p).collect();
    let support_certificate = verify_integral_basis(&support, m, &support)?;
    Ok(WoodallPartition {
        tau,
        family,
        basis,
        terms,
        support_certificate,
    })
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|k| k * k <= p).all(|k| !p.is_multiple_of(k))
}

/// Whether the denominator of r is a power of p.
pub fn is_p_adic(r: &Rat, p: u64) -> bool {
    let mut den = r.denom().clone();
    let p = BigInt::from(p);
    while (&den % &p).is_zero() {
        den /= &p;
    }
    den.is_one()
}

/// Solution of eq_a · y = eq_b, y ≥ 0, with every entry p-adic, found by
/// moving from the strictly positive y⋆ toward the integral z along an
/// integral kernel basis with p-adically rounded coefficients.
pub fn find_p_adic_point(
    eq_a: &IntMat,
    eq_b: &[BigInt],
    p: u64,
    z: &[BigInt],
    y_star: &[Rat],
) -> Result<Vec<Rat>, AppError> {
    if !is_prime(p) {
        return Err(AppError::NotPrime(p));
    }
    let n = eq_a.ncols();
    if z.len() != n || y_star.len() != n || eq_b.len() != eq_a.nrows() {
        return Err(AppError::Inconsistent("dimensions disagree".into()));
    }
    if eq_a.mul_vec(z) != eq_b {
        return Err(AppError::Inconsistent("z does not solve the system".into()));
    }
    let ar = eq_a.to_rat();
    let bq: Vec<Rat> = eq_b.iter().cloned().map(Rat::from_integer).collect();
    if ar.mul_vec(y_star) != bq {
        return Err(AppError::Inconsistent("y* does not solve the system".into()));
    }
    if y_star.iter().any(|y| !y.is_positive()) {
        return Err(AppError::Inconsistent("y* is not strictly positive".into()));
    }
    let zq: Vec<Rat> = z.iter().cloned().map(Rat::from_integer).collect();
    let kernel = integer_kernel(eq_a);
    if kernel.nrows() == 0 {
        return Ok(zq);
    }
    let diff: Vec<Rat> = y_star.iter().zip(&zq).map(|(a, b)| a - b).collect();
    let c = solve_linear(&kernel.to_rat().transpose(), &diff)
        .ok_or_else(|| AppError::Inconsistent("y* - z is outside the kernel".into()))?;
    let min_y = y_star.iter().min().expect("nonempty").clone();
    let norms: BigInt = kernel
        .rows_iter()
        .map(|r| r.iter().map(|x| x.abs()).max().unwrap_or_default())
        .sum();
    let eps = min_y / Rat::from_integer(BigInt::one() + norms);
    let pb = BigInt::from(p);
    let mut scale = BigInt::one();
    while Rat::new(BigInt::one(), scale.clone()) > eps {
        scale *= &pb;
    }
    let mut y = zq;
    for (ci, row) in c.iter().zip(kernel.rows_iter()) {
        let rounded = Rat::new((ci * Rat::from_integer(scale.clone())).floor().to_integer(), scale.clone());
        for (yj, vj) in y.iter_mut().zip(row) {
            *yj += &rounded * Rat::from_integer(vj.clone());
        }
    }
    if ar.mul_vec(&y) != bq || y.iter().any(|v| v.is_negative()) || !y.iter().all(|v| is_p_adic(v, p)) {
        return Err(AppError::TheoremViolation("rounded point left the polytope".into()));
    }
    Ok(y)
}

#[derive(Clone, Debug)]
pub struct PAdicPacking {
    pub prime: u64,
    pub entries: Vec<(ArcSet, Rat)>,
    pub value: Rat,
}

impl PAdicPacking {
    pub fn congestion(&self, num_arcs: usize) -> Vec<Rat> {
        let mut c = vec![Rat::zero(); num_arcs];
        for (j, y) in &self.entries {
            for a in j.iter() {
                c[a] += y;
            }
        }
        c
    }
}

/// Inclusion-minimal dijoin, removing arcs greedily in index order.
pub fn minimal_dijoin(d: &Digraph) -> Option<ArcSet> {
    let mut j = d.all_arcs();
    if !d.is_dijoin(j) {
        return None;
    }
    for a in 0..d.num_arcs() {
        if d.is_dijoin(j.without(a)) {
            j.remove(a);
        }
    }
    Some(j)
}

/// Fractional packing y ≥ 0 of face points with Σ y_J 1_J = 1 and
/// Σ y_J = τ, maximising the smallest weight on a basis point. Solved by
/// column generation: the restricted problem starts from the basis points
/// with penalised artificial variables and grows by columns of positive
/// reduced cost until none is left and no artificial is used.
fn positive_packing_lp(
    points: &[ArcSet],
    basis: &[ArcSet],
    m: usize,
    tau: u64,
) -> Result<Vec<Rat>, AppError> {
    let nb = basis.len();
    let nrows = m + 1 + nb;
    let basis_idx: Vec<usize> = basis
        .iter()
        .map(|b| points.binary_search(b).expect("basis points are face points"))
        .collect();
    let mut cols = basis_idx.clone();
    cols.sort_unstable();
    cols.dedup();
    let mut rhs = vec![Rat::one(); m];
    rhs.push(Rat::from_integer(BigInt::from(tau)));
    rhs.extend(std::iter::repeat_n(Rat::zero(), nb));
    let mut penalty = Rat::from_integer(BigInt::from(m + 1));
    let max_penalty = Rat::from_integer(BigInt::one() << 64);
    loop {
        let nc = cols.len();
        let art0 = nc + 1 + nb;
        let nv = art0 + nrows;
        let mut rows = vec![vec![Rat::zero(); nv]; nrows];
        for (c, &k) in cols.iter().enumerate() {
            for a in points[k].iter() {
                rows[a][c] = Rat::one();
            }
            rows[m][c] = Rat::one();
        }
        for (i, k) in basis_idx.iter().enumerate() {
            let c = cols.binary_search(k).expect("basis columns stay");
            let r = &mut rows[m + 1 + i];
            r[c] = Rat::one();
            r[nc] = -Rat::one();
            r[nc + 1 + i] = -Rat::one();
        }
        for (i, r) in rows.iter_mut().enumerate() {
            r[art0 + i] = Rat::one();
        }
        let mut c = vec![Rat::zero(); nv];
        c[nc] = Rat::one();
        c[art0..].iter_mut().for_each(|x| *x = -penalty.clone());
        let lp = LpProblem::new(
            RatMat::from_rows(nv, rows),
            rhs.clone(),
            vec![Cmp::Eq; nrows],
            c,
            Sense::Max,
        );
        let res = lp_solve(&lp);
        if res.status != LpStatus::Optimal {
            return Err(AppError::Lp(res.status));
        }
        let mut entering: Vec<(Rat, usize)> = points
            .iter()
            .enumerate()
            .filter(|(k, _)| cols.binary_search(k).is_err())
            .map(|(k, p)| (-(p.iter().map(|a| &res.dual[a]).sum::<Rat>() + &res.dual[m]), k))
            .filter(|(r, _)| r.is_positive())
            .collect();
        if entering.is_empty() {
            if res.primal[art0..].iter().all(Zero::is_zero) {
                if !res.objective.is_positive() {
                    return Err(AppError::TheoremViolation(
                        "no solution is strictly positive on the basis".into(),
                    ));
                }
                let mut y = vec![Rat::zero(); points.len()];
                for (ci, &k) in cols.iter().enumerate() {
                    y[k] = res.primal[ci].clone();
                }
                return Ok(y);
            }
            penalty *= Rat::from_integer(BigInt::from(16));
            if penalty > max_penalty {
                return Err(AppError::TheoremViolation(
                    "no fractional packing of value tau".into(),
                ));
            }
            continue;
        }
        entering.sort_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));
        cols.extend(entering.iter().take(2 * m).map(|e| e.1));
        cols.sort_unstable();
    }
}

pub fn p_adic_packing(d: &Digraph, p: u64) -> Result<PAdicPacking, AppError> {
    if !is_prime(p) {
        return Err(AppError::NotPrime(p));
    }
    if !d.is_weakly_connected() {
        return Err(AppError::Inconsistent("underlying graph is disconnected".into()));
    }
    let (tau, _) = min_dicut_family(d)?;
    if tau == 0 {
        return Err(AppError::TauTooSmall(0));
    }
    if tau == 1 {
        let j = minimal_dijoin(d).expect("a connected digraph is its own dijoin");
        return Ok(PAdicPacking {
            prime: p,
            entries: vec![(j, Rat::one())],
            value: Rat::one(),
        });
    }
    let wood = woodall_partition(d)?;
    let points = &wood.basis.points;
    let basis = &wood.basis.basis.points;
    let m = d.num_arcs();
    let y_lp = positive_packing_lp(points, basis, m, tau)?;
    let support: Vec<usize> = (0..points.len()).filter(|&k| y_lp[k].is_positive()).collect();
    let mut eq_rows: Vec<Vec<BigInt>> = (0..m)
        .map(|a| {
            support
                .iter()
                .map(|&k| BigInt::from(points[k].contains(a) as u8))
                .collect()
        })
        .collect();
    eq_rows.push(vec![BigInt::one(); support.len()]);
    let eq_a = IntMat::from_rows(support.len(), eq_rows);
    let mut eq_b = vec![BigInt::one(); m];
    eq_b.push(BigInt::from(tau));
    let z: Vec<BigInt> = support
        .iter()
        .map(|&k| {
            wood.terms
                .iter()
                .find(|(q, _)| *q == points[k])
                .map_or_else(BigInt::zero, |(_, l)| l.clone())
        })
        .collect();
    let y_star: Vec<Rat> = support.iter().map(|&k| y_lp[k].clone()).collect();
    let y = find_p_adic_point(&eq_a, &eq_b, p, &z, &y_star)?;
    let entries: Vec<(ArcSet, Rat)> = support
        .iter()
        .zip(y)
        .filter(|(_, v)| !v.is_zero())
        .map(|(&k, v)| (points[k], v))
        .collect();
    let value: Rat = entries.iter().map(|(_, v)| v).sum();
    let packing = PAdicPacking {
        prime: p,
        entries,
        value,
    };
    if packing.entries.len() > 2 * m {
        return Err(AppError::TheoremViolation(format!(
            "support {} exceeds twice the arc count",
            packing.entries.len()
        )));
    }
    Ok(packing)
}

/// A τ-uniform hypergraph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    pub labels: Vec<String>,
    pub edges: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Orientation {
    pub head: Vec<usize>,
}

impl Hypergraph {
    pub fn new(labels: Vec<String>, edges: Vec<Vec<usize>>) -> Result<Self, AppError> {
        if labels.is_empty() {
            return Err(GraphError::NoVertices.into());
        }
        if labels.len() > VertexSet::CAPACITY {
            return Err(GraphError::TooManyVertices(labels.len()).into());
        }
        let tau = edges.first().ok_or(AppError::NoHyperedges)?.len();
        if tau < 2 {
            return Err(AppError::EdgeTooSmall);
        }
        for (i, e) in edges.iter().enumerate() {
            if e.len() != tau {
                return Err(AppError::NotUniform(i, e.len(), tau));
            }
            let s = VertexSet::from_indices(e.iter().copied().filter(|&v| v < labels.len()));
            if s.len() != tau {
                return Err(AppError::BadHyperedge(i));
            }
        }
        Ok(Hypergraph { labels, edges })
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn tau(&self) -> usize {
        self.edges[0].len()
    }

    fn edge_set(&self, i: usize) -> VertexSet {
        VertexSet::from_indices(self.edges[i].iter().copied())
    }

    fn check_subset(&self, x: VertexSet) -> Result<(), AppError> {
        let all = VertexSet::full(self.num_vertices());
        if x.is_empty() || !x.is_subset(all) || x == all {
            return Err(AppError::InvalidSubset);
        }
        Ok(())
    }

    /// Sum of |X ∩ E| over hyperedges E that X separates.
    pub fn d_h(&self, x: VertexSet) -> Result<usize, AppError> {
        self.check_subset(x)?;
        Ok((0..self.edges.len())
            .map(|i| self.edge_set(i))
            .filter(|e| !e.inter(x).is_empty() && !e.is_subset(x))
            .map(|e| e.inter(x).len())
            .sum())
    }

    /// First X (by bitmask) with d_H(X) < τ.
    pub fn connectivity_witness(&self) -> Option<(VertexSet, usize)> {
        let n = self.num_vertices();
        (1u64..(1u64 << n) - 1).map(VertexSet).find_map(|x| {
            let v = self.d_h(x).expect("proper subset");
            (v < self.tau()).then_some((x, v))
        })
    }

    /// Every nonempty proper X has a hyperedge with its head inside X and
    /// some vertex outside.
    pub fn is_sc_orientation(&self, o: &Orientation) -> bool {
        if o.head.len() != self.edges.len() {
            return false;
        }
        if o.head.iter().zip(&self.edges).any(|(h, e)| !e.contains(h)) {
            return false;
        }
        let n = self.num_vertices();
        (1u64..(1u64 << n) - 1).map(VertexSet).all(|x| {
            (0..self.edges.len())
                .any(|i| x.contains(o.head[i]) && !self.edge_set(i).is_subset(x))
        })
    }

    /// Bipartite digraph with a sink t_E per hyperedge and an arc from each
    /// member of E to t_E, in hyperedge order.
    pub fn to_digraph(&self) -> Result<Digraph, AppError> {
        let n = self.num_vertices();
        let mut vertices = self.labels.clone();
        let mut arcs = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            vertices.push(format!("t[E{i}]"));
            for &v in e {
                arcs.push(Arc {
                    label: format!("{}>E{i}", self.labels[v]),
                    tail: v,
                    head: n + i,
                });
            }
        }
        Ok(Digraph::new(vertices, arcs)?)
    }
}

#[derive(Clone, Debug)]
pub struct OrientationAssignment {
    pub digraph: Digraph,
    pub basis: IntegralBasis,
    pub terms: Vec<(Orientation, BigInt)>,
}

pub fn hypergraph_orientation_assignment(h: &Hypergraph) -> Result<OrientationAssignment, AppError> {
    if let Some((witness, value)) = h.connectivity_witness() {
        return Err(AppError::Connectivity {
            witness,
            value,
            tau: h.tau(),
        });
    }
    let d = h.to_digraph()?;
    let g = validate(&d, &Family::sink_complements(&d))?;
    let basis = integral_basis_recursive(&g)?;
    let m = d.num_arcs();
    let ones = vec![BigInt::one(); m];
    let alpha = express_in_basis(&basis.points, m, &ones)?;
    let mut terms = Vec::new();
    for (&j, a) in basis.points.iter().zip(alpha) {
        if a.is_zero() {
            continue;
        }
        let head: Vec<usize> = (0..h.edges.len())
            .map(|i| {
                let t = h.num_vertices() + i;
                let arc = j.inter(d.in_arcs(t)).first().expect("one arc per sink");
                d.arc(arc).tail
            })
            .collect();
        terms.push((Orientation { head }, a));
    }
    let out = OrientationAssignment {
        digraph: d,
        basis,
        terms,
    };
    for (i, e) in h.edges.iter().enumerate() {
        for &v in e {
            let s: BigInt = out
                .terms
                .iter()
                .filter(|(o, _)| o.head[i] == v)
                .map(|(_, l)| l)
                .sum();
            if !s.is_one() {
                return Err(AppError::TheoremViolation(format!(
                    "orientations with head {v} on hyperedge {i} carry total {s}"
                )));
            }
        }
    }
    Ok(out)
}

/// Minimum number of arcs of `c` in a dicut.
pub fn min_dicut_capacity(d: &Digraph, c: ArcSet) -> Result<u64, AppError> {
    let w: Vec<u64> = (0..d.num_arcs()).map(|a| c.contains(a) as u64).collect();
    Ok(d.min_dicut(&w, DEFAULT_DICUT_CAP)?.0)
}

/// Strengthening sets inside `c` meeting every dicut of minimum
/// `c`-capacity exactly once.
pub fn restricted_face(d: &Digraph, c: ArcSet) -> Result<Vec<ArcSet>, AppError> {
    let w: Vec<u64> = (0..d.num_arcs()).map(|a| c.contains(a) as u64).collect();
    let (tau, _) = d.min_dicut(&w, DEFAULT_DICUT_CAP)?;
    let shores = d
        .dicut_shores(DEFAULT_DICUT_CAP)?
        .into_iter()
        .filter(|&u| count(c, d.delta_out(u)) as u64 == tau);
    Ok(enumerate_scr_points_within(d, &Family::new(shores), c)?.points)
}

/// A partition of `c` into k dijoins, searched exhaustively.
pub fn partition_into_dijoins(d: &Digraph, c: ArcSet, k: usize) -> Option<Vec<ArcSet>> {
    let arcs = c.to_vec();
    let mut parts = vec![ArcSet::empty(); k];
    fn go(d: &Digraph, arcs: &[usize], i: usize, parts: &mut Vec<ArcSet>) -> bool {
        if i == arcs.len() {
            return parts.iter().all(|&j| d.is_dijoin(j));
        }
        // symmetry: an arc only opens the first empty part
        let mut opened = false;
        for p in 0..parts.len() {
            if parts[p].is_empty() {
                if opened {
                    continue;
                }
                opened = true;
            }
            parts[p].insert(arcs[i]);
            if go(d, arcs, i + 1, parts) {
                return true;
            }
            parts[p].remove(arcs[i]);
        }
        false
    }
    go(d, &arcs, 0, &mut parts).then_some(parts)
}
