//! Integral points of faces of the dijoin and strengthening-set polytopes,
//! and the polyhedral quantities read off them. Both polytopes are integral,
//! so every query here works on the enumerated 0,1 point set.

use exactla::{int, rank_int, IntMat};
use thiserror::Error;

use crate::digraph::{Digraph, GraphError, DEFAULT_DICUT_CAP};
use crate::sets::{ArcSet, VertexSet};

pub const DEFAULT_POINT_CAP: usize = 1_000_000;
pub const SCR_ARC_CAP: usize = 22;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FaceError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("sink {0} has no family member V minus it")]
    MissingSinkComplement(String),
    #[error("face enumeration exceeded {0} candidates")]
    CapExceeded(usize),
    #[error("strengthening-set enumeration over {0} free arcs exceeds the limit of {1}")]
    TooManyArcs(usize, usize),
    #[error("the face has no integral point")]
    EmptyFace,
    #[error("{0:?} is not a dicut shore")]
    NotDicut(VertexSet),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Family {
    sets: Vec<VertexSet>,
}

impl Family {
    pub fn new<I: IntoIterator<Item = VertexSet>>(sets: I) -> Self {
        let mut sets: Vec<VertexSet> = sets.into_iter().collect();
        sets.sort();
        sets.dedup();
        Family { sets }
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn contains(&self, u: VertexSet) -> bool {
        self.sets.binary_search(&u).is_ok()
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn with(&self, u: VertexSet) -> Family {
        Family::new(self.sets.iter().copied().chain(std::iter::once(u)))
    }

    pub fn union(&self, other: &Family) -> Family {
        Family::new(self.sets.iter().chain(other.sets.iter()).copied())
    }

    /// The complements of all sinks.
    pub fn sink_complements(d: &Digraph) -> Family {
        let all = d.all_vertices();
        Family::new(d.sinks().iter().map(|t| all.without(t)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FaceKind {
    Dijoin,
    Strengthening,
}

/// The 0,1 points of a face, sorted by bitmask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacePoints {
    pub digraph: Digraph,
    pub family: Family,
    pub kind: FaceKind,
    pub points: Vec<ArcSet>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceAnalysis {
    pub tight_nodes: VertexSet,
    pub active_nodes: VertexSet,
    pub dim: usize,
    pub kappa_t: u8,
    pub slack: usize,
    pub tight_dicut_shores: Vec<VertexSet>,
}

pub(crate) fn count(j: ArcSet, s: ArcSet) -> usize {
    j.inter(s).len()
}

/// Rows of 0,1 vectors, optionally followed by a constant-one column.
pub fn point_matrix(points: &[ArcSet], num_arcs: usize, homogenize: bool) -> IntMat {
    let cols = num_arcs + usize::from(homogenize);
    IntMat::from_rows(
        cols,
        points
            .iter()
            .map(|p| {
                let mut row: Vec<_> = (0..num_arcs).map(|i| int(i64::from(p.contains(i)))).collect();
                if homogenize {
                    row.push(int(1));
                }
                row
            })
            .collect(),
    )
}

/// Affine dimension of a finite point set (-1 for the empty set, reported as None).
pub fn affine_dim(points: &[ArcSet], num_arcs: usize) -> Option<usize> {
    if points.is_empty() {
        return None;
    }
    Some(rank_int(&point_matrix(points, num_arcs, true)) - 1)
}

pub fn linear_rank(points: &[ArcSet], num_arcs: usize) -> usize {
    rank_int(&point_matrix(points, num_arcs, false))
}

/// Dicut shores whose inequality can bind on the face.
pub(crate) fn candidate_shores(d: &Digraph) -> Result<Vec<VertexSet>, GraphError> {
    if d.is_bipartite() {
        d.saturated_shores()
    } else {
        d.dicut_shores(DEFAULT_DICUT_CAP)
    }
}

struct Constraint {
    arcs: ArcSet,
    exact: bool,
    last_sink: usize,
}

/// All dijoins with exactly one arc at every sink that meet every dicut and
/// meet each family member's dicut exactly once.
pub fn enumerate_dij_face_points(
    d: &Digraph,
    f: &Family,
    cap: usize,
) -> Result<FacePoints, FaceError> {
    d.check_bipartite()?;
    let all = d.all_vertices();
    let sinks: Vec<usize> = d.sinks().to_vec();
    for &t in &sinks {
        if !f.contains(all.without(t)) {
            return Err(FaceError::MissingSinkComplement(d.vertex_label(t).to_string()));
        }
    }
    let choices: Vec<Vec<usize>> = sinks.iter().map(|&t| d.in_arcs(t).to_vec()).collect();
    let shores = candidate_shores(d)?;
    let mut constraints: Vec<Constraint> = Vec::new();
    let mut push = |arcs: ArcSet, exact: bool| {
        let last_sink = sinks
            .iter()
            .rposition(|&t| !d.in_arcs(t).inter(arcs).is_empty());
        constraints.push(Constraint {
            arcs,
            exact,
            last_sink: last_sink.unwrap_or(usize::MAX),
        });
    };
    for &u in f.sets() {
        push(d.delta_out(u), true);
    }
    for &u in &shores {
        if !f.contains(u) {
            push(d.delta_out(u), false);
        }
    }
    if constraints.iter().any(|c| c.last_sink == usize::MAX) {
        return Ok(FacePoints {
            digraph: d.clone(),
            family: f.clone(),
            kind: FaceKind::Dijoin,
            points: Vec::new(),
        });
    }
    let mut by_last: Vec<Vec<usize>> = vec![Vec::new(); sinks.len()];
    for (k, c) in constraints.iter().enumerate() {
        by_last[c.last_sink].push(k);
    }
    let exact: Vec<usize> = (0..constraints.len()).filter(|&k| constraints[k].exact).collect();

    let mut points = Vec::new();
    let mut visited = 0usize;
    let mut stack: Vec<(usize, ArcSet)> = vec![(0, ArcSet::empty())];
    while let Some((depth, j)) = stack.pop() {
        visited += 1;
        if visited > cap {
            return Err(FaceError::CapExceeded(cap));
        }
        if depth == sinks.len() {
            points.push(j);
            continue;
        }
        for &a in choices[depth].iter().rev() {
            let nj = j.with(a);
            if exact.iter().any(|&k| count(nj, constraints[k].arcs) > 1) {
                continue;
            }
            let ok = by_last[depth].iter().all(|&k| {
                let c = count(nj, constraints[k].arcs);
                if constraints[k].exact {
                    c == 1
                } else {
                    c >= 1
                }
            });
            if ok {
                stack.push((depth + 1, nj));
            }
        }
    }
    points.sort();
    Ok(FacePoints {
        digraph: d.clone(),
        family: f.clone(),
        kind: FaceKind::Dijoin,
        points,
    })
}

/// Strengthening sets contained in `allowed` satisfying
/// x(δ⁺U) − x(δ⁻U) = 1 − |δ⁻U| for every U in the family. With `allowed`
/// equal to all arcs this is the face of the strengthening-set polytope;
/// otherwise it is the sub-face with x_a = 0 outside `allowed`.
pub fn enumerate_scr_points_within(
    d: &Digraph,
    f: &Family,
    allowed: ArcSet,
) -> Result<FacePoints, FaceError> {
    let free: Vec<usize> = allowed.inter(d.all_arcs()).to_vec();
    if free.len() > SCR_ARC_CAP {
        return Err(FaceError::TooManyArcs(free.len(), SCR_ARC_CAP));
    }
    let eqs: Vec<(ArcSet, ArcSet, i64)> = f
        .sets()
        .iter()
        .map(|&u| {
            let din = d.delta_in(u);
            (d.delta_out(u), din, 1 - din.len() as i64)
        })
        .collect();
    let mut points = Vec::new();
    for m in 0u64..(1u64 << free.len()) {
        let j = ArcSet::from_indices(
            free.iter().enumerate().filter(|(k, _)| m >> k & 1 == 1).map(|(_, &a)| a),
        );
        let eq_ok = eqs
            .iter()
            .all(|(o, i, rhs)| count(j, *o) as i64 - count(j, *i) as i64 == *rhs);
        if eq_ok && d.is_strengthening_set(j) {
            points.push(j);
        }
    }
    points.sort();
    Ok(FacePoints {
        digraph: d.clone(),
        family: f.clone(),
        kind: FaceKind::Strengthening,
        points,
    })
}

pub fn enumerate_scr_face_points(d: &Digraph, f: &Family) -> Result<FacePoints, FaceError> {
    enumerate_scr_points_within(d, f, d.all_arcs())
}

impl FacePoints {
    pub fn num_arcs(&self) -> usize {
        self.digraph.num_arcs()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> Option<usize> {
        affine_dim(&self.points, self.num_arcs())
    }

    /// Points meeting δ⁺(U) exactly once.
    pub fn equality_subset(&self, u: VertexSet) -> Vec<ArcSet> {
        let out = self.digraph.delta_out(u);
        self.points
            .iter()
            .copied()
            .filter(|&p| count(p, out) == 1)
            .collect()
    }

    pub fn is_tight_shore(&self, u: VertexSet) -> bool {
        let out = self.digraph.delta_out(u);
        self.points.iter().all(|&p| count(p, out) == 1)
    }

    fn tight_nodes(&self) -> VertexSet {
        let d = &self.digraph;
        VertexSet::from_indices((0..d.num_vertices()).filter(|&v| {
            let inc = d.incident_arcs(v);
            self.points.iter().all(|&p| count(p, inc) == 1)
        }))
    }

    pub fn analyze(&self) -> Result<FaceAnalysis, FaceError> {
        let dim = self.dim().ok_or(FaceError::EmptyFace)?;
        let d = &self.digraph;
        let tight = self.tight_nodes();
        let active = tight.complement(d.num_vertices());
        let kappa_t = u8::from(active.is_empty());
        let tight_shores: Vec<VertexSet> = candidate_shores(d)?
            .into_iter()
            .filter(|&u| self.is_tight_shore(u))
            .collect();
        let slack = d.num_arcs() + usize::from(kappa_t) - tight.len() - dim;
        Ok(FaceAnalysis {
            tight_nodes: tight,
            active_nodes: active,
            dim,
            kappa_t,
            slack,
            tight_dicut_shores: tight_shores,
        })
    }

    /// All dicut shores tight on the face.
    pub fn closure(&self) -> Result<Family, FaceError> {
        if self.points.is_empty() {
            return Err(FaceError::EmptyFace);
        }
        let tight = candidate_shores(&self.digraph)?
            .into_iter()
            .filter(|&u| self.is_tight_shore(u));
        Ok(Family::new(tight.chain(self.family.sets().iter().copied())))
    }

    pub fn is_facet_defining(&self, u: VertexSet) -> Result<bool, FaceError> {
        if !self.digraph.is_dicut_shore(u) {
            return Err(FaceError::NotDicut(u));
        }
        let dim = self.dim().ok_or(FaceError::EmptyFace)?;
        let sub = self.equality_subset(u);
        Ok(match affine_dim(&sub, self.num_arcs()) {
            Some(sd) => sub.len() < self.points.len() && sd + 1 == dim,
            None => false,
        })
    }

    /// Two dicut inequalities are equivalent on the face when they are tight
    /// on the same points.
    pub fn equivalent_inequalities(&self, u: VertexSet, w: VertexSet) -> Result<bool, FaceError> {
        for s in [u, w] {
            if !self.digraph.is_dicut_shore(s) {
                return Err(FaceError::NotDicut(s));
            }
        }
        Ok(self.equality_subset(u) == self.equality_subset(w))
    }
}

pub fn closure(d: &Digraph, f: &Family) -> Result<Family, FaceError> {
    enumerate_dij_face_points(d, f, DEFAULT_POINT_CAP)?.closure()
}
