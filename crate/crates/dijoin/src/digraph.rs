//! Directed multigraphs on at most 64 vertices and 128 arcs, with vertex
//! and arc subsets stored as bitmasks.

use std::collections::HashSet;

use thiserror::Error;

use crate::sets::{ArcSet, VertexSet};

pub const DEFAULT_DICUT_CAP: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("digraph has no vertices")]
    NoVertices,
    #[error("too many vertices: {0} (limit {limit})", limit = VertexSet::CAPACITY)]
    TooManyVertices(usize),
    #[error("too many arcs: {0} (limit {limit})", limit = ArcSet::CAPACITY)]
    TooManyArcs(usize),
    #[error("arc {0} is a loop")]
    Loop(String),
    #[error("arc {0} refers to a vertex index out of range")]
    BadEndpoint(String),
    #[error("duplicate vertex label {0}")]
    DuplicateVertex(String),
    #[error("duplicate arc label {0}")]
    DuplicateArc(String),
    #[error("unknown arc index {0}")]
    UnknownArc(usize),
    #[error("digraph is not bipartite: vertex {0} has both entering and leaving arcs")]
    NotBipartite(String),
    #[error("dicut enumeration over {0} vertices exceeds the cap of {1}")]
    CapExceeded(usize, usize),
    #[error("digraph has no dicut")]
    NoDicut,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arc {
    pub label: String,
    pub tail: usize,
    pub head: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Digraph {
    vertices: Vec<String>,
    arcs: Vec<Arc>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Dicut {
    pub shore: VertexSet,
    pub arcs: ArcSet,
}

fn reach(adj: &[u64], start: usize) -> u64 {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen
}

impl Digraph {
    pub fn new(vertices: Vec<String>, arcs: Vec<Arc>) -> Result<Self, GraphError> {
        if vertices.is_empty() {
            return Err(GraphError::NoVertices);
        }
        if vertices.len() > VertexSet::CAPACITY {
            return Err(GraphError::TooManyVertices(vertices.len()));
        }
        if arcs.len() > ArcSet::CAPACITY {
            return Err(GraphError::TooManyArcs(arcs.len()));
        }
        let mut seen = HashSet::new();
        for v in &vertices {
            if !seen.insert(v.as_str()) {
                return Err(GraphError::DuplicateVertex(v.clone()));
            }
        }
        let mut seen = HashSet::new();
        for a in &arcs {
            if a.tail >= vertices.len() || a.head >= vertices.len() {
                return Err(GraphError::BadEndpoint(a.label.clone()));
            }
            if a.tail == a.head {
                return Err(GraphError::Loop(a.label.clone()));
            }
            if !seen.insert(a.label.as_str()) {
                return Err(GraphError::DuplicateArc(a.label.clone()));
            }
        }
        Ok(Digraph { vertices, arcs })
    }

    /// Vertices named `v0..`, arcs named `a0..` in the given order.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        let vertices = (0..n).map(|i| format!("v{i}")).collect();
        let arcs = pairs
            .iter()
            .enumerate()
            .map(|(i, &(tail, head))| Arc {
                label: format!("a{i}"),
                tail,
                head,
            })
            .collect();
        Digraph::new(vertices, arcs)
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arcs(&self) -> usize {
        self.arcs.len()
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arc(&self, i: usize) -> &Arc {
        &self.arcs[i]
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc_index(&self, label: &str) -> Option<usize> {
        self.arcs.iter().position(|a| a.label == label)
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.num_vertices())
    }

    pub fn all_arcs(&self) -> ArcSet {
        ArcSet::full(self.num_arcs())
    }

    pub fn out_arcs(&self, v: usize) -> ArcSet {
        ArcSet::from_indices((0..self.arcs.len()).filter(|&i| self.arcs[i].tail == v))
    }

    pub fn in_arcs(&self, v: usize) -> ArcSet {
        ArcSet::from_indices((0..self.arcs.len()).filter(|&i| self.arcs[i].head == v))
    }

    pub fn incident_arcs(&self, v: usize) -> ArcSet {
        self.out_arcs(v).union(self.in_arcs(v))
    }

    /// Arcs leaving `u`.
    pub fn delta_out(&self, u: VertexSet) -> ArcSet {
        ArcSet::from_indices(
            (0..self.arcs.len())
                .filter(|&i| u.contains(self.arcs[i].tail) && !u.contains(self.arcs[i].head)),
        )
    }

    /// Arcs entering `u`.
    pub fn delta_in(&self, u: VertexSet) -> ArcSet {
        ArcSet::from_indices(
            (0..self.arcs.len())
                .filter(|&i| !u.contains(self.arcs[i].tail) && u.contains(self.arcs[i].head)),
        )
    }

    /// For every vertex, the set of tails of its entering arcs.
    pub fn in_neighbours(&self) -> Vec<VertexSet> {
        let mut nb = vec![VertexSet::empty(); self.num_vertices()];
        for a in &self.arcs {
            nb[a.head].insert(a.tail);
        }
        nb
    }

    pub fn sources(&self) -> VertexSet {
        let heads = VertexSet::from_indices(self.arcs.iter().map(|a| a.head));
        self.all_vertices().minus(heads)
    }

    pub fn sinks(&self) -> VertexSet {
        let tails = VertexSet::from_indices(self.arcs.iter().map(|a| a.tail));
        self.all_vertices().minus(tails)
    }

    pub fn is_bipartite(&self) -> bool {
        self.sources().union(self.sinks()) == self.all_vertices()
    }

    pub fn check_bipartite(&self) -> Result<(), GraphError> {
        let both = self.all_vertices().minus(self.sources().union(self.sinks()));
        match both.first() {
            Some(v) => Err(GraphError::NotBipartite(self.vertices[v].clone())),
            None => Ok(()),
        }
    }

    /// Number of sinks minus number of sources inside `u`.
    pub fn disc(&self, u: VertexSet) -> Result<i64, GraphError> {
        self.check_bipartite()?;
        Ok(self.disc_unchecked(u))
    }

    pub(crate) fn disc_unchecked(&self, u: VertexSet) -> i64 {
        u.inter(self.sinks()).len() as i64 - u.inter(self.sources()).len() as i64
    }

    fn adjacency(&self, reversed: ArcSet) -> (Vec<u64>, Vec<u64>) {
        let n = self.num_vertices();
        let mut fwd = vec![0u64; n];
        let mut bwd = vec![0u64; n];
        for (i, a) in self.arcs.iter().enumerate() {
            let (t, h) = if reversed.contains(i) {
                (a.head, a.tail)
            } else {
                (a.tail, a.head)
            };
            fwd[t] |= 1 << h;
            bwd[h] |= 1 << t;
        }
        (fwd, bwd)
    }

    fn strongly_connected_with(&self, reversed: ArcSet, doubled: ArcSet) -> bool {
        let (mut fwd, mut bwd) = self.adjacency(reversed);
        for i in doubled.iter() {
            let a = &self.arcs[i];
            fwd[a.head] |= 1 << a.tail;
            bwd[a.tail] |= 1 << a.head;
        }
        let all = self.all_vertices().bits();
        reach(&fwd, 0) == all && reach(&bwd, 0) == all
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.strongly_connected_with(ArcSet::empty(), ArcSet::empty())
    }

    pub fn is_weakly_connected(&self) -> bool {
        self.underlying_connected(None)
    }

    fn underlying_connected(&self, skip: Option<usize>) -> bool {
        let n = self.num_vertices();
        let mut adj = vec![0u64; n];
        for (i, a) in self.arcs.iter().enumerate() {
            if Some(i) == skip {
                continue;
            }
            adj[a.tail] |= 1 << a.head;
            adj[a.head] |= 1 << a.tail;
        }
        reach(&adj, 0) == self.all_vertices().bits()
    }

    /// Underlying multigraph connected and bridgeless.
    pub fn is_2ec_underlying(&self) -> bool {
        self.underlying_connected(None)
            && (0..self.arcs.len()).all(|i| self.underlying_connected(Some(i)))
    }

    pub fn is_dicut_shore(&self, u: VertexSet) -> bool {
        !u.is_empty() && u != self.all_vertices() && self.delta_in(u).is_empty()
    }

    /// All dicut shores, by scanning every vertex subset in ascending bitmask order.
    pub fn dicut_shores(&self, cap: usize) -> Result<Vec<VertexSet>, GraphError> {
        let n = self.num_vertices();
        if n > cap || n > 30 {
            return Err(GraphError::CapExceeded(n, cap.min(30)));
        }
        let nb = self.in_neighbours();
        let full = (1u64 << n) - 1;
        let mut out = Vec::new();
        for mask in 1..full {
            let u = VertexSet(mask);
            if u.iter().all(|v| nb[v].is_subset(u)) {
                out.push(u);
            }
        }
        Ok(out)
    }

    pub fn enumerate_dicuts(&self, cap: usize) -> Result<Vec<Dicut>, GraphError> {
        Ok(self
            .dicut_shores(cap)?
            .into_iter()
            .map(|shore| Dicut {
                shore,
                arcs: self.delta_out(shore),
            })
            .collect())
    }

    /// Minimum weight of a dicut, with the smallest-bitmask shore attaining it.
    pub fn min_dicut(&self, weights: &[u64], cap: usize) -> Result<(u64, Dicut), GraphError> {
        assert_eq!(weights.len(), self.num_arcs(), "one weight per arc");
        let mut best: Option<(u64, Dicut)> = None;
        for d in self.enumerate_dicuts(cap)? {
            let w: u64 = d.arcs.iter().map(|i| weights[i]).sum();
            if best.as_ref().is_none_or(|(bw, _)| w < *bw) {
                best = Some((w, d));
            }
        }
        best.ok_or(GraphError::NoDicut)
    }

    /// Reversing `j` yields a strongly connected digraph.
    pub fn is_strengthening_set(&self, j: ArcSet) -> bool {
        self.strongly_connected_with(j, ArcSet::empty())
    }

    /// `j` meets every dicut. Equivalent to strong connectivity once the arcs
    /// of `j` are made bidirectional, so no enumeration is needed.
    pub fn is_dijoin(&self, j: ArcSet) -> bool {
        self.strongly_connected_with(ArcSet::empty(), j)
    }

    pub fn reverse(&self, j: ArcSet) -> Result<Digraph, GraphError> {
        if let Some(bad) = j.minus(self.all_arcs()).first() {
            return Err(GraphError::UnknownArc(bad));
        }
        let arcs = self
            .arcs
            .iter()
            .enumerate()
            .map(|(i, a)| {
                if j.contains(i) {
                    Arc {
                        label: a.label.clone(),
                        tail: a.head,
                        head: a.tail,
                    }
                } else {
                    a.clone()
                }
            })
            .collect();
        Ok(Digraph {
            vertices: self.vertices.clone(),
            arcs,
        })
    }

    /// Dicut shores that can be tight for a point with exactly one arc at each
    /// sink: for each nonempty set S of sources, S together with every sink
    /// whose tails all lie in S (when that is not all of V), plus V minus a
    /// sink. Every other dicut shore has value at least two on such points.
    /// Sorted by bitmask.
    pub fn saturated_shores(&self) -> Result<Vec<VertexSet>, GraphError> {
        self.check_bipartite()?;
        let src: Vec<usize> = self.sources().to_vec();
        if src.len() > 26 {
            return Err(GraphError::CapExceeded(src.len(), 26));
        }
        let nb = self.in_neighbours();
        let sinks: Vec<usize> = self.sinks().to_vec();
        let all = self.all_vertices();
        let mut out = Vec::new();
        for m in 1u64..(1u64 << src.len()) {
            let s = VertexSet::from_indices(
                src.iter().enumerate().filter(|(k, _)| m >> k & 1 == 1).map(|(_, &v)| v),
            );
            let mut u = s;
            for &t in &sinks {
                if !nb[t].is_empty() && nb[t].is_subset(s) {
                    u.insert(t);
                }
            }
            if u != all {
                out.push(u);
            }
        }
        for &t in &sinks {
            let u = all.without(t);
            if !u.is_empty() && self.is_dicut_shore(u) {
                out.push(u);
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}
