//! Seeded random instances for property suites.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use crate::digraft::{validate, Digraft};
use crate::digraph::{Digraph, DEFAULT_DICUT_CAP};
use crate::faces::{candidate_shores, count, Family};
use crate::sets::ArcSet;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Bipartite digraph with a 2-edge-connected underlying graph, sources
/// numbered before sinks.
pub fn random_bipartite<R: Rng>(rng: &mut R, max_vertices: usize, max_arcs: usize) -> Digraph {
    assert!(max_vertices >= 3 && max_arcs >= 4);
    loop {
        let n = rng.gen_range(3..=max_vertices);
        let ns = rng.gen_range(1..n);
        let nt = n - ns;
        let mut pairs = Vec::new();
        for t in ns..n {
            let deg = rng.gen_range(2..=ns.clamp(2, 3));
            for _ in 0..deg {
                pairs.push((rng.gen_range(0..ns), t));
            }
        }
        let extra = rng.gen_range(0..=nt);
        for _ in 0..extra {
            pairs.push((rng.gen_range(0..ns), rng.gen_range(ns..n)));
        }
        if pairs.len() > max_arcs {
            continue;
        }
        pairs.sort();
        let d = Digraph::from_pairs(n, &pairs).expect("generated arcs are well formed");
        if d.is_2ec_underlying() {
            return d;
        }
    }
}

/// A digraft built around a random dijoin with one arc per sink; the family
/// holds the sink complements and a random selection of shores that this
/// dijoin meets exactly once, so the face is never empty.
pub fn random_digraft<R: Rng>(rng: &mut R, max_vertices: usize, max_arcs: usize) -> Digraft {
    loop {
        let d = random_bipartite(rng, max_vertices, max_arcs);
        let mut j = ArcSet::empty();
        for t in d.sinks().iter() {
            let ins = d.in_arcs(t).to_vec();
            j.insert(*ins.choose(rng).expect("sinks have in-arcs"));
        }
        if !d.is_dijoin(j) {
            continue;
        }
        let mut sets = Family::sink_complements(&d).sets().to_vec();
        for u in candidate_shores(&d).expect("bipartite") {
            if count(j, d.delta_out(u)) == 1 && rng.gen_bool(0.3) {
                sets.push(u);
            }
        }
        if let Ok(g) = validate(&d, &Family::new(sets)) {
            return g;
        }
    }
}

/// Digraph whose underlying graph is 2-edge-connected and whose minimum
/// dicut has at least two arcs.
pub fn random_digraph_tau2<R: Rng>(rng: &mut R, max_vertices: usize, max_arcs: usize) -> Digraph {
    assert!(max_vertices >= 2 && max_arcs >= 2);
    loop {
        let n = rng.gen_range(2..=max_vertices);
        let m = rng.gen_range(n.max(2)..=max_arcs.max(n));
        let mut pairs = Vec::with_capacity(m);
        while pairs.len() < m {
            let t = rng.gen_range(0..n);
            let h = rng.gen_range(0..n);
            if t != h {
                pairs.push((t, h));
            }
        }
        pairs.sort();
        let d = Digraph::from_pairs(n, &pairs).expect("generated arcs are well formed");
        if !d.is_2ec_underlying() || d.is_strongly_connected() {
            continue;
        }
        let ones = vec![1u64; d.num_arcs()];
        match d.min_dicut(&ones, DEFAULT_DICUT_CAP) {
            Ok((tau, _)) if tau >= 2 => return d,
            _ => continue,
        }
    }
}

/// Undirected multigraph edges on `0..n`, 2-edge-connected.
pub fn random_2ec_graph<R: Rng>(rng: &mut R, max_vertices: usize, max_edges: usize) -> (usize, Vec<(usize, usize)>) {
    assert!(max_vertices >= 2 && max_edges >= 2);
    loop {
        let n = rng.gen_range(2..=max_vertices);
        let m = rng.gen_range(n.max(2)..=max_edges.max(n));
        let mut edges = Vec::with_capacity(m);
        while edges.len() < m {
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(0..n);
            if a != b {
                edges.push((a.min(b), a.max(b)));
            }
        }
        edges.sort();
        let d = Digraph::from_pairs(n, &edges).expect("generated edges are well formed");
        if d.is_2ec_underlying() {
            return (n, edges);
        }
    }
}
