use num_traits::Zero;
use thiserror::Error;

use crate::digraph::{Arc, Digraph, GraphError};
use crate::faces::{
    candidate_shores, count, enumerate_dij_face_points, FaceAnalysis, FaceError, FacePoints,
    Family, DEFAULT_POINT_CAP,
};
use crate::sets::{ArcSet, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DigraftError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Face(#[from] FaceError),
    #[error("underlying undirected graph is not 2-edge-connected")]
    NotTwoEdgeConnected,
    #[error("family contains the empty set or the whole vertex set")]
    TrivialMember,
    #[error("family member {0:?} has an entering arc")]
    EnteringArc(VertexSet),
    #[error("sink {0} has no family member V minus it")]
    MissingSinkComplement(String),
    #[error("the face is empty")]
    EmptyFace,
    #[error("{0:?} is not a contractible dicut shore")]
    NotContractible(VertexSet),
    #[error("arc set is not a face point meeting the contracted dicut once")]
    NotSplittable,
    #[error("child points use different crossing arcs")]
    CrossingMismatch,
    #[error("vectors disagree on shared arc {0}")]
    Disagreement(usize),
    #[error("invariant failure: {0}")]
    Invariant(String),
}

/// A bipartite digraph with a family whose face of the dijoin polyhedron is nonempty.
#[derive(Clone, Debug)]
pub struct Digraft {
    pub face: FacePoints,
    pub analysis: FaceAnalysis,
    pub closure: Family,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub basic: bool,
    pub robust: bool,
    /// Smallest facet-defining dicut shore not equivalent to a nonnegativity
    /// or source inequality.
    pub witness: Option<VertexSet>,
}

pub fn validate(d: &Digraph, f: &Family) -> Result<Digraft, DigraftError> {
    validate_with_cap(d, f, DEFAULT_POINT_CAP)
}

pub fn validate_with_cap(d: &Digraph, f: &Family, cap: usize) -> Result<Digraft, DigraftError> {
    d.check_bipartite()?;
    if !d.is_2ec_underlying() {
        return Err(DigraftError::NotTwoEdgeConnected);
    }
    let all = d.all_vertices();
    for &u in f.sets() {
        if u.is_empty() || u == all {
            return Err(DigraftError::TrivialMember);
        }
        if !d.delta_in(u).is_empty() {
            return Err(DigraftError::EnteringArc(u));
        }
    }
    for t in d.sinks().iter() {
        if !f.contains(all.without(t)) {
            return Err(DigraftError::MissingSinkComplement(d.vertex_label(t).to_string()));
        }
    }
    let face = enumerate_dij_face_points(d, f, cap)?;
    if face.is_empty() {
        return Err(DigraftError::EmptyFace);
    }
    let analysis = face.analyze()?;
    let closure = face.closure()?;
    Ok(Digraft {
        face,
        analysis,
        closure,
    })
}

impl Digraft {
    pub fn digraph(&self) -> &Digraph {
        &self.face.digraph
    }

    pub fn family(&self) -> &Family {
        &self.face.family
    }

    pub fn points(&self) -> &[ArcSet] {
        &self.face.points
    }

    pub fn dim(&self) -> usize {
        self.analysis.dim
    }

    pub fn is_trivial_shore(&self, u: VertexSet) -> bool {
        let n = self.digraph().num_vertices();
        u.len() == 1 || u.len() + 1 == n
    }

    /// Non-trivial tight dicut shores, smallest first then by bitmask.
    pub fn nontrivial_tight_shores(&self) -> Vec<VertexSet> {
        let mut v: Vec<VertexSet> = self
            .analysis
            .tight_dicut_shores
            .iter()
            .copied()
            .filter(|&u| !self.is_trivial_shore(u))
            .collect();
        v.sort_by_key(|u| (u.len(), *u));
        v
    }

    /// Same face with every tight dicut shore added to the family.
    pub fn augmented(&self) -> Digraft {
        let family = self.closure.clone();
        Digraft {
            face: FacePoints {
                family: family.clone(),
                ..self.face.clone()
            },
            analysis: self.analysis.clone(),
            closure: family,
        }
    }

    pub fn classify(&self) -> Result<Classification, DigraftError> {
        let basic = self
            .analysis
            .tight_dicut_shores
            .iter()
            .all(|&u| self.closure.contains(u) && self.is_trivial_shore(u));
        let witness = self.nonrobust_witness()?;
        Ok(Classification {
            basic,
            robust: witness.is_none(),
            witness,
        })
    }

    fn nonrobust_witness(&self) -> Result<Option<VertexSet>, DigraftError> {
        let d = self.digraph();
        let face = &self.face;
        let mut reference: Vec<Vec<ArcSet>> = Vec::new();
        for s in d.sources().iter() {
            reference.push(face.equality_subset(VertexSet::singleton(s)));
        }
        for a in 0..d.num_arcs() {
            reference.push(face.points.iter().copied().filter(|p| !p.contains(a)).collect());
        }
        for u in candidate_shores(d)? {
            if !face.is_facet_defining(u)? {
                continue;
            }
            let sub = face.equality_subset(u);
            if !reference.contains(&sub) {
                return Ok(Some(u));
            }
        }
        Ok(None)
    }

    /// Shrinks each side of a contractible dicut in turn.
    pub fn contract(&self, u: VertexSet) -> Result<ContractionPair, DigraftError> {
        let d = self.digraph();
        let n = d.num_vertices();
        if !d.is_dicut_shore(u) || u.len() < 2 || u.len() + 2 > n {
            return Err(DigraftError::NotContractible(u));
        }
        let sub = self.face.equality_subset(u);
        if sub.is_empty() {
            return Err(DigraftError::NotContractible(u));
        }
        let sub_face = FacePoints {
            digraph: d.clone(),
            family: self.family().with(u),
            kind: self.face.kind,
            points: sub,
        };
        let closed = sub_face.closure()?;
        let all = d.all_vertices();
        let (d1, map1, vmap1, u1) = shrink(d, u, true);
        let (d2, map2, vmap2, u2) = shrink(d, all.minus(u), false);
        let f1 = project(&closed, u, &vmap1, u1);
        let f2 = project(&closed, all.minus(u), &vmap2, u2);
        let child1 = validate(&d1, &f1)?;
        let child2 = validate(&d2, &f2)?;
        Ok(ContractionPair {
            shore: u,
            crossing: d.delta_out(u),
            num_parent_arcs: d.num_arcs(),
            parent_points: self.face.points.clone(),
            child1,
            child2,
            map1,
            map2,
            u1,
            u2,
        })
    }
}

/// Shrinks `side` to a single new vertex placed last. Arcs inside `side` are
/// dropped; the others keep their labels. Returns the child digraph, the
/// child-to-parent arc map, the parent-to-child vertex map (None inside
/// `side`) and the new vertex.
fn shrink(
    d: &Digraph,
    side: VertexSet,
    as_source: bool,
) -> (Digraph, Vec<usize>, Vec<Option<usize>>, usize) {
    let n = d.num_vertices();
    let mut vmap = vec![None; n];
    let mut labels = Vec::new();
    for (v, slot) in vmap.iter_mut().enumerate() {
        if !side.contains(v) {
            *slot = Some(labels.len());
            labels.push(d.vertex_label(v).to_string());
        }
    }
    let new_v = labels.len();
    let inner: Vec<&str> = side.iter().map(|v| d.vertex_label(v)).collect();
    let mut name = format!("{{{}}}", inner.join(","));
    while labels.contains(&name) {
        name.push('\'');
    }
    labels.push(name);
    let mut arcs = Vec::new();
    let mut amap = Vec::new();
    for (i, a) in d.arcs().iter().enumerate() {
        let (ti, hi) = (side.contains(a.tail), side.contains(a.head));
        if ti && hi {
            continue;
        }
        let tail = vmap[a.tail].unwrap_or(new_v);
        let head = vmap[a.head].unwrap_or(new_v);
        debug_assert!(!as_source || !hi, "arc enters a dicut shore");
        arcs.push(Arc {
            label: a.label.clone(),
            tail,
            head,
        });
        amap.push(i);
    }
    let child = Digraph::new(labels, arcs).expect("shrinking keeps a valid digraph");
    (child, amap, vmap, new_v)
}

fn project(closed: &Family, side: VertexSet, vmap: &[Option<usize>], new_v: usize) -> Family {
    let map_set = |w: VertexSet, add_new: bool| {
        let mut s = VertexSet::from_indices(w.iter().filter_map(|v| vmap[v]));
        if add_new {
            s.insert(new_v);
        }
        s
    };
    Family::new(closed.sets().iter().filter_map(|&w| {
        if w.inter(side).is_empty() {
            Some(map_set(w, false))
        } else if side.is_subset(w) {
            Some(map_set(w.minus(side), true))
        } else {
            None
        }
    }))
}

#[derive(Clone, Debug)]
pub struct ContractionPair {
    pub shore: VertexSet,
    /// δ⁺ of the shore in the parent.
    pub crossing: ArcSet,
    pub num_parent_arcs: usize,
    pub parent_points: Vec<ArcSet>,
    /// The parent with the shore shrunk to a source.
    pub child1: Digraft,
    /// The parent with the complement shrunk to a sink.
    pub child2: Digraft,
    pub map1: Vec<usize>,
    pub map2: Vec<usize>,
    pub u1: usize,
    pub u2: usize,
}

fn to_child(j: ArcSet, map: &[usize]) -> ArcSet {
    ArcSet::from_indices((0..map.len()).filter(|&k| j.contains(map[k])))
}

fn to_parent(j: ArcSet, map: &[usize]) -> ArcSet {
    ArcSet::from_indices(j.iter().map(|k| map[k]))
}

impl ContractionPair {
    pub fn decompose_point(&self, j: ArcSet) -> Result<(ArcSet, ArcSet), DigraftError> {
        if count(j, self.crossing) != 1 || self.parent_points.binary_search(&j).is_err() {
            return Err(DigraftError::NotSplittable);
        }
        Ok((to_child(j, &self.map1), to_child(j, &self.map2)))
    }

    pub fn compose_points(&self, j1: ArcSet, j2: ArcSet) -> Result<ArcSet, DigraftError> {
        let p1 = to_parent(j1, &self.map1);
        let p2 = to_parent(j2, &self.map2);
        if p1.inter(self.crossing) != p2.inter(self.crossing) || count(p1, self.crossing) != 1 {
            return Err(DigraftError::CrossingMismatch);
        }
        let j = p1.union(p2);
        if self.parent_points.binary_search(&j).is_err() {
            return Err(DigraftError::Invariant(format!(
                "composed arc set {j:?} is not a parent face point"
            )));
        }
        Ok(j)
    }

    /// Merges vectors on the two children's arcs into one on the parent's arcs.
    pub fn odot<T: Clone + PartialEq + Zero>(&self, w1: &[T], w2: &[T]) -> Result<Vec<T>, DigraftError> {
        assert_eq!(w1.len(), self.map1.len());
        assert_eq!(w2.len(), self.map2.len());
        let mut z: Vec<Option<T>> = vec![None; self.num_parent_arcs];
        for (k, x) in w1.iter().enumerate() {
            z[self.map1[k]] = Some(x.clone());
        }
        for (k, x) in w2.iter().enumerate() {
            let a = self.map2[k];
            match &z[a] {
                Some(prev) if prev != x => return Err(DigraftError::Disagreement(a)),
                _ => z[a] = Some(x.clone()),
            }
        }
        Ok(z.into_iter().map(|x| x.unwrap_or_else(T::zero)).collect())
    }

    /// For each crossing arc a, pairs the first child-1 point using a with
    /// every child-2 point using a, then the remaining child-1 points using a
    /// with the first child-2 point using a.
    pub fn compose_bases(&self, b1: &[ArcSet], b2: &[ArcSet]) -> Result<Vec<ArcSet>, DigraftError> {
        let mut out = Vec::new();
        for a in self.crossing.iter() {
            let ia: Vec<usize> = (0..b1.len())
                .filter(|&i| to_parent(b1[i], &self.map1).contains(a))
                .collect();
            let ja: Vec<usize> = (0..b2.len())
                .filter(|&i| to_parent(b2[i], &self.map2).contains(a))
                .collect();
            if ia.is_empty() || ja.is_empty() {
                return Err(DigraftError::Invariant(format!(
                    "no child basis point uses crossing arc {a}"
                )));
            }
            for &j in &ja {
                out.push(self.compose_points(b1[ia[0]], b2[j])?);
            }
            for &i in &ia[1..] {
                out.push(self.compose_points(b1[i], b2[ja[0]])?);
            }
        }
        Ok(out)
    }
}
