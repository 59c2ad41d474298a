//! Integral bases of face lattices: a search over face points, the
//! recursive construction through dicut contractions, and certification.

use exactla::{rank_int, saturate, snf, solve_integral, solve_linear, IntMat, Rat};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::digraft::{Digraft, DigraftError};
use crate::faces::{count, linear_rank, point_matrix};
use crate::mconvex::{jump_free, MconvexError};
use crate::sets::{ArcSet, VertexSet};

pub const DEFAULT_SEARCH_BUDGET: usize = 500_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BasisError {
    #[error(transparent)]
    Digraft(#[from] DigraftError),
    #[error(transparent)]
    Mconvex(#[from] MconvexError),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("basis search exceeded its budget of {0} nodes")]
    BudgetExceeded(usize),
    #[error("classification is inconsistent: {0}")]
    Inconsistent(String),
    #[error("face is empty")]
    EmptyFace,
    #[error("basis vector {0:?} is not a face point")]
    NotFacePoint(ArcSet),
    #[error("basis vectors are linearly dependent (rank {rank} < {size})")]
    Dependent { rank: usize, size: usize },
    #[error("basis has {got} vectors but the face spans dimension {want}")]
    WrongSize { got: usize, want: usize },
    #[error("basis lattice has index {index} in its saturation")]
    NotSaturated { index: BigInt, divisors: Vec<BigInt> },
    #[error("vector is outside the linear span of the basis")]
    OutsideSpan,
    #[error("vector has non-integral coefficients {0:?}")]
    NonIntegral(Vec<Rat>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Search,
    TightContraction {
        shore: VertexSet,
        shrunk_shore: Box<Provenance>,
        shrunk_rest: Box<Provenance>,
    },
    FacetContraction {
        shore: VertexSet,
        shrunk_shore: Box<Provenance>,
        shrunk_rest: Box<Provenance>,
        jump_point: ArcSet,
    },
}

impl Provenance {
    pub fn depth(&self) -> usize {
        match self {
            Provenance::Search => 0,
            Provenance::TightContraction {
                shrunk_shore,
                shrunk_rest,
                ..
            }
            | Provenance::FacetContraction {
                shrunk_shore,
                shrunk_rest,
                ..
            } => 1 + shrunk_shore.depth().max(shrunk_rest.depth()),
        }
    }

    pub fn uses_jump(&self) -> bool {
        match self {
            Provenance::Search => false,
            Provenance::TightContraction {
                shrunk_shore,
                shrunk_rest,
                ..
            } => shrunk_shore.uses_jump() || shrunk_rest.uses_jump(),
            Provenance::FacetContraction { .. } => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralBasis {
    pub points: Vec<ArcSet>,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisCertificate {
    pub size: usize,
    pub span_dim: usize,
    /// Elementary divisors of the basis expressed in an integral basis of its saturation.
    pub divisors: Vec<BigInt>,
}

fn rows_of(points: &[ArcSet], num_arcs: usize) -> IntMat {
    point_matrix(points, num_arcs, false)
}

/// Rows are independent and generate every integral vector of their span.
fn is_primitive(m: &IntMat) -> bool {
    let s = snf(m);
    s.diag.len() == m.nrows() && s.diag.iter().all(|d| d.is_one())
}

/// Lexicographically first subset of the points that is an integral basis
/// of their linear span.
pub fn integral_basis_oracle(
    points: &[ArcSet],
    num_arcs: usize,
    budget: usize,
) -> Result<IntegralBasis, BasisError> {
    if points.is_empty() {
        return Err(BasisError::EmptyFace);
    }
    let target = linear_rank(points, num_arcs);
    let mut chosen: Vec<usize> = Vec::new();
    let mut nodes = 0usize;
    if search(points, num_arcs, target, 0, &mut chosen, &mut nodes, budget)? {
        Ok(IntegralBasis {
            points: chosen.iter().map(|&i| points[i]).collect(),
            provenance: Provenance::Search,
        })
    } else {
        Err(BasisError::TheoremViolation(
            "no subset of the face points is an integral basis".into(),
        ))
    }
}

fn search(
    points: &[ArcSet],
    num_arcs: usize,
    target: usize,
    from: usize,
    chosen: &mut Vec<usize>,
    nodes: &mut usize,
    budget: usize,
) -> Result<bool, BasisError> {
    if chosen.len() == target {
        return Ok(true);
    }
    let need = target - chosen.len();
    for i in from..points.len() {
        if points.len() - i < need {
            break;
        }
        *nodes += 1;
        if *nodes > budget {
            return Err(BasisError::BudgetExceeded(budget));
        }
        chosen.push(i);
        let sel: Vec<ArcSet> = chosen.iter().map(|&k| points[k]).collect();
        if is_primitive(&rows_of(&sel, num_arcs))
            && search(points, num_arcs, target, i + 1, chosen, nodes, budget)?
        {
            return Ok(true);
        }
        chosen.pop();
    }
    Ok(false)
}

pub fn verify_integral_basis(
    points: &[ArcSet],
    num_arcs: usize,
    basis: &[ArcSet],
) -> Result<BasisCertificate, BasisError> {
    for b in basis {
        if !points.contains(b) {
            return Err(BasisError::NotFacePoint(*b));
        }
    }
    certify_lattice_basis(&rows_of(basis, num_arcs), linear_rank(points, num_arcs))
}

/// Checks that integer rows are independent, span a space of dimension
/// `span_dim`, and generate every integral vector of their span.
pub fn certify_lattice_basis(m: &IntMat, span_dim: usize) -> Result<BasisCertificate, BasisError> {
    let size = m.nrows();
    let rank = rank_int(m);
    if rank != size {
        return Err(BasisError::Dependent { rank, size });
    }
    if size != span_dim {
        return Err(BasisError::WrongSize {
            got: size,
            want: span_dim,
        });
    }
    let sat = saturate(&m.to_rat());
    let mut coeff = IntMat::zeros(0, sat.nrows());
    for row in m.rows_iter() {
        let c = solve_integral(&sat, row).expect("a vector lies in its own saturation");
        coeff.push_row(c);
    }
    let divisors = snf(&coeff).diag;
    let index = divisors.iter().fold(BigInt::one(), |a, d| a * d);
    if !index.is_one() {
        return Err(BasisError::NotSaturated { index, divisors });
    }
    Ok(BasisCertificate {
        size,
        span_dim,
        divisors,
    })
}

/// Exact coefficients of v over the basis vectors; they must be integers.
pub fn express_in_basis(
    basis: &[ArcSet],
    num_arcs: usize,
    v: &[BigInt],
) -> Result<Vec<BigInt>, BasisError> {
    let m = rows_of(basis, num_arcs).to_rat().transpose();
    let rhs: Vec<Rat> = v.iter().map(|x| Rat::from_integer(x.clone())).collect();
    let c = solve_linear(&m, &rhs).ok_or(BasisError::OutsideSpan)?;
    if c.iter().all(|x| x.is_integer()) {
        Ok(c.iter().map(|x| x.to_integer()).collect())
    } else {
        Err(BasisError::NonIntegral(c))
    }
}

/// Builds an integral basis by contracting tight or facet-defining dicuts
/// down to basic robust pieces, where the point search takes over.
pub fn integral_basis_recursive(g: &Digraft) -> Result<IntegralBasis, BasisError> {
    let g = g.augmented();
    let num_arcs = g.digraph().num_arcs();
    let want = g.dim() + 1;
    if let Some(&u) = g.nontrivial_tight_shores().first() {
        let pair = g.contract(u)?;
        let b1 = integral_basis_recursive(&pair.child1)?;
        let b2 = integral_basis_recursive(&pair.child2)?;
        let points = pair.compose_bases(&b1.points, &b2.points)?;
        let expected = b1.points.len() + b2.points.len() - pair.crossing.len();
        if points.len() != expected || points.len() != want {
            return Err(BasisError::TheoremViolation(format!(
                "composed {} vectors across tight dicut {u:?}, expected {expected} and face needs {want}",
                points.len()
            )));
        }
        check_rank(&points, num_arcs)?;
        return Ok(IntegralBasis {
            points,
            provenance: Provenance::TightContraction {
                shore: u,
                shrunk_shore: Box::new(b1.provenance),
                shrunk_rest: Box::new(b2.provenance),
            },
        });
    }
    let cls = g.classify()?;
    if !cls.basic {
        return Err(BasisError::Inconsistent(
            "no non-trivial tight dicut yet the augmented digraft is not basic".into(),
        ));
    }
    let Some(u) = cls.witness else {
        return integral_basis_oracle(g.points(), num_arcs, DEFAULT_SEARCH_BUDGET);
    };
    let pair = g.contract(u)?;
    let b1 = integral_basis_recursive(&pair.child1)?;
    let b2 = integral_basis_recursive(&pair.child2)?;
    let mut points = pair.compose_bases(&b1.points, &b2.points)?;
    let out = g.digraph().delta_out(u);
    let low = *g
        .points()
        .iter()
        .find(|&&p| count(p, out) == 1)
        .ok_or_else(|| BasisError::Inconsistent(format!("{u:?} has no point of value one")))?;
    let high = *g
        .points()
        .iter()
        .max_by_key(|&&p| (count(p, out), std::cmp::Reverse(p)))
        .expect("face is nonempty");
    let jump = match count(high, out) {
        0 | 1 => {
            return Err(BasisError::Inconsistent(format!(
                "facet-defining dicut {u:?} is tight on the face"
            )))
        }
        2 => high,
        _ => jump_free(&g, low, high, u, 2)?,
    };
    points.push(jump);
    let expected = b1.points.len() + b2.points.len() - pair.crossing.len() + 1;
    if points.len() != expected || points.len() != want {
        return Err(BasisError::TheoremViolation(format!(
            "basis across facet dicut {u:?} has {} vectors, expected {expected} and face needs {want}",
            points.len()
        )));
    }
    check_rank(&points, num_arcs)?;
    Ok(IntegralBasis {
        points,
        provenance: Provenance::FacetContraction {
            shore: u,
            shrunk_shore: Box::new(b1.provenance),
            shrunk_rest: Box::new(b2.provenance),
            jump_point: jump,
        },
    })
}

fn check_rank(points: &[ArcSet], num_arcs: usize) -> Result<(), BasisError> {
    let r = linear_rank(points, num_arcs);
    if r != points.len() {
        return Err(BasisError::TheoremViolation(format!(
            "composed vectors are dependent: rank {r} of {}",
            points.len()
        )));
    }
    Ok(())
}

/// Splits a sum of k face points back into k face points, each taking one
/// arc at every tight node and a balanced share (floor or ceiling of the
/// average) at every active source.
pub fn balanced_split(g: &Digraft, w: &[u32], k: usize) -> Option<Vec<ArcSet>> {
    if k == 0 {
        return w.iter().all(|&x| x == 0).then(Vec::new);
    }
    let d = g.digraph();
    let deg = |v: usize| -> u32 { d.incident_arcs(v).iter().map(|a| w[a]).sum() };
    let active_sources: Vec<(usize, u32, u32)> = g
        .analysis
        .active_nodes
        .inter(d.sources())
        .iter()
        .map(|s| {
            let t = deg(s);
            (s, t / k as u32, t.div_ceil(k as u32))
        })
        .collect();
    for &p in g.points() {
        if p.iter().any(|a| w[a] == 0) {
            continue;
        }
        let balanced = active_sources.iter().all(|&(s, lo, hi)| {
            let c = count(p, d.incident_arcs(s)) as u32;
            lo <= c && c <= hi
        });
        if !balanced {
            continue;
        }
        let mut rest = w.to_vec();
        for a in p.iter() {
            rest[a] -= 1;
        }
        if let Some(mut parts) = balanced_split(g, &rest, k - 1) {
            parts.insert(0, p);
            return Some(parts);
        }
    }
    None
}

/// Coefficient of the jump point when v is written in a basis whose other
/// vectors meet δ⁺(U) once: v(δ⁺U) − v(δ(t)) for a tight node t.
pub fn jump_coefficient(g: &Digraft, u: VertexSet, v: &[BigInt]) -> Option<BigInt> {
    let d = g.digraph();
    let t = g.analysis.tight_nodes.first()?;
    let sum = |s: ArcSet| s.iter().fold(BigInt::zero(), |acc, a| acc + &v[a]);
    Some(sum(d.delta_out(u)) - sum(d.incident_arcs(t)))
}
