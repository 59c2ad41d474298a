//! Degree vectors of face points. A face point J maps to z with
//! z_v = |J ∩ δ(v)| − 1; the images are the integer points of a base
//! polyhedron, which gives exchange walks and the jump-free construction.

use thiserror::Error;

use crate::digraft::Digraft;
use crate::faces::{candidate_shores, count};
use crate::sets::{ArcSet, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MconvexError {
    #[error("arc set is not a point of the face")]
    NotFacePoint,
    #[error("degree vector is not in the base polyhedron")]
    NotMember,
    #[error("no perfect b-matching realises the degree vector")]
    Infeasible,
    #[error("no exchange pair keeps the walk inside the base polyhedron")]
    NoExchange,
    #[error("{0:?} is not a dicut shore")]
    NotDicut(VertexSet),
    #[error("target value {target} is not strictly between {low} and {high}")]
    OutOfRange { target: usize, low: usize, high: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DegreePoint(pub Vec<i64>);

impl DegreePoint {
    pub fn sum_over(&self, u: VertexSet) -> i64 {
        u.iter().map(|v| self.0[v]).sum()
    }
}

pub fn point_to_z(g: &Digraft, j: ArcSet) -> Result<DegreePoint, MconvexError> {
    if g.points().binary_search(&j).is_err() {
        return Err(MconvexError::NotFacePoint);
    }
    Ok(degree_vector(g, j))
}

pub(crate) fn degree_vector(g: &Digraft, j: ArcSet) -> DegreePoint {
    let d = g.digraph();
    DegreePoint(
        (0..d.num_vertices())
            .map(|v| count(j, d.incident_arcs(v)) as i64 - 1)
            .collect(),
    )
}

/// Value of the dicut inequality for U at any point with degree vector z.
fn shore_value(g: &Digraft, z: &DegreePoint, u: VertexSet) -> i64 {
    z.sum_over(u) - g.digraph().disc_unchecked(u)
}

pub fn z_membership(g: &Digraft, z: &DegreePoint) -> bool {
    let d = g.digraph();
    if z.0.len() != d.num_vertices() {
        return false;
    }
    if d.sinks().iter().any(|t| z.0[t] != 0) {
        return false;
    }
    if z.sum_over(d.all_vertices()) != d.disc_unchecked(d.all_vertices()) {
        return false;
    }
    let Ok(shores) = candidate_shores(d) else {
        return false;
    };
    shores.iter().all(|&u| shore_value(g, z, u) >= 1)
        && g.family().sets().iter().all(|&u| shore_value(g, z, u) == 1)
}

struct Matcher<'a> {
    g: &'a Digraft,
    cap: Vec<i64>,
    load: Vec<i64>,
    /// Arc assigned to each sink.
    assigned: Vec<Option<usize>>,
    /// Sinks currently assigned to each source.
    clients: Vec<Vec<usize>>,
}

impl<'a> Matcher<'a> {
    fn new(g: &'a Digraft, z: &DegreePoint) -> Self {
        let n = g.digraph().num_vertices();
        Matcher {
            g,
            cap: z.0.iter().map(|x| x + 1).collect(),
            load: vec![0; n],
            assigned: vec![None; n],
            clients: vec![Vec::new(); n],
        }
    }

    fn fix(&mut self, arc: usize) {
        let a = self.g.digraph().arc(arc);
        self.assigned[a.head] = Some(arc);
        self.load[a.tail] += 1;
        self.clients[a.tail].push(a.head);
    }

    fn augment(&mut self, sink: usize, seen: &mut VertexSet, frozen: VertexSet) -> bool {
        let d = self.g.digraph();
        for arc in d.in_arcs(sink).iter() {
            let s = d.arc(arc).tail;
            if seen.contains(s) {
                continue;
            }
            seen.insert(s);
            if self.load[s] < self.cap[s] {
                self.assign(sink, arc);
                return true;
            }
            let clients = self.clients[s].clone();
            for other in clients {
                if frozen.contains(other) {
                    continue;
                }
                let old = self.assigned[other].expect("client has an arc");
                self.unassign(other);
                if self.augment(other, seen, frozen) {
                    self.assign(sink, arc);
                    return true;
                }
                self.assign(other, old);
            }
        }
        false
    }

    fn assign(&mut self, sink: usize, arc: usize) {
        let s = self.g.digraph().arc(arc).tail;
        self.assigned[sink] = Some(arc);
        self.load[s] += 1;
        self.clients[s].push(sink);
    }

    fn unassign(&mut self, sink: usize) {
        if let Some(arc) = self.assigned[sink].take() {
            let s = self.g.digraph().arc(arc).tail;
            self.load[s] -= 1;
            self.clients[s].retain(|&t| t != sink);
        }
    }

    fn run(mut self, frozen: VertexSet) -> Result<ArcSet, MconvexError> {
        let d = self.g.digraph();
        for t in d.sinks().iter() {
            if self.assigned[t].is_some() {
                continue;
            }
            let mut seen = VertexSet::empty();
            if !self.augment(t, &mut seen, frozen) {
                return Err(MconvexError::Infeasible);
            }
        }
        if d.sources().iter().any(|s| self.load[s] != self.cap[s]) {
            return Err(MconvexError::Infeasible);
        }
        Ok(ArcSet::from_indices(self.assigned.iter().flatten().copied()))
    }
}

/// A face point with degree vector z, as a perfect b-matching with b = 1 + z.
pub fn lift_z(g: &Digraft, z: &DegreePoint) -> Result<ArcSet, MconvexError> {
    if !z_membership(g, z) {
        return Err(MconvexError::NotMember);
    }
    Matcher::new(g, z).run(VertexSet::empty())
}

/// As `lift_z`, with the given arc forced into the result.
pub fn lift_z_with_arc(g: &Digraft, z: &DegreePoint, arc: usize) -> Result<ArcSet, MconvexError> {
    if !z_membership(g, z) {
        return Err(MconvexError::NotMember);
    }
    let mut m = Matcher::new(g, z);
    let head = g.digraph().arc(arc).head;
    m.fix(arc);
    let tail = g.digraph().arc(arc).tail;
    if m.load[tail] > m.cap[tail] {
        return Err(MconvexError::Infeasible);
    }
    m.run(VertexSet::singleton(head))
}

/// Walk from z to t by exchange steps z − 1_u + 1_v, u the smallest vertex
/// with z_u > t_u and v the first vertex with z_v < t_v keeping membership.
pub fn exchange_walk(
    g: &Digraft,
    z: &DegreePoint,
    t: &DegreePoint,
) -> Result<Vec<DegreePoint>, MconvexError> {
    if !z_membership(g, z) || !z_membership(g, t) {
        return Err(MconvexError::NotMember);
    }
    let n = z.0.len();
    let mut walk = vec![z.clone()];
    let mut cur = z.clone();
    while cur != *t {
        let u = (0..n)
            .find(|&v| cur.0[v] > t.0[v])
            .expect("equal sums force a positive entry");
        let mut stepped = false;
        for v in (0..n).filter(|&v| cur.0[v] < t.0[v]) {
            let mut next = cur.clone();
            next.0[u] -= 1;
            next.0[v] += 1;
            if z_membership(g, &next) {
                cur = next;
                stepped = true;
                break;
            }
        }
        if !stepped {
            return Err(MconvexError::NoExchange);
        }
        walk.push(cur.clone());
    }
    Ok(walk)
}

/// A face point meeting δ⁺(U) exactly `target` times, for a target strictly
/// between the values of two given face points.
pub fn jump_free(
    g: &Digraft,
    jx: ArcSet,
    jy: ArcSet,
    u: VertexSet,
    target: usize,
) -> Result<ArcSet, MconvexError> {
    let d = g.digraph();
    if !d.is_dicut_shore(u) {
        return Err(MconvexError::NotDicut(u));
    }
    let out = d.delta_out(u);
    let (lx, ly) = (count(jx, out), count(jy, out));
    if !(lx < target && target < ly) {
        return Err(MconvexError::OutOfRange {
            target,
            low: lx,
            high: ly,
        });
    }
    let zx = point_to_z(g, jx)?;
    let zy = point_to_z(g, jy)?;
    let walk = exchange_walk(g, &zx, &zy)?;
    let hit = walk
        .iter()
        .find(|w| shore_value(g, w, u) == target as i64)
        .ok_or(MconvexError::NoExchange)?;
    lift_z(g, hit)
}
